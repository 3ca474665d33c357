use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use indecomp::gens::{parse_generators, parse_ideal_spec, parse_irrep_label};
use indecomp::ideal::{
    codimension, enumerate_ideals, ideal_oracle, quotient_components, sinks_formula, sinks_graph, IdealSpec,
};
use indecomp::linalg::{parse_rational, Rational};
use indecomp::rep::{
    build_family, build_quotient, component_graph, family_equivalence, indecomposability, relation_failures,
    rep_matrices, verify_lie_relations, FamilyBase, FamilySpec, DEFAULT_DEGREE_CAP,
};
use indecomp::sl2::IrrepLabel;
use indecomp::superalg::{build_urest_rep, enumerate_triples, super_relation_failures};

#[derive(Parser)]
#[command(name = "indecomp", version, about = "Indecomposable representations of the Poincare algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// List every invariant ideal of the scalar module up to a codimension.
    ClassifyIdeals {
        #[arg(long)]
        max_codim: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build P(V0)/I<gens> and print its matrices or component graph.
    BuildRep {
        /// Source irreducible as "a,b" (doubled spins).
        #[arg(long, default_value = "0,0")]
        source: String,
        /// Generators, e.g. "z1^2,z1*det" or "deg2".
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP, value_parser = clap::value_parser!(u32).range(1..))]
        degree_cap: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Two sources, two sinks: indecomposability and equivalence of members.
    Family {
        /// Two labels, e.g. "1,0;1,2".
        #[arg(long)]
        sources: String,
        #[arg(long)]
        sinks: String,
        /// "alpha,beta,gamma,delta" as rationals.
        #[arg(long)]
        params: String,
        /// Further parameter points to compare against `--params`.
        #[arg(long)]
        compare: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invariant ideal triples (I1, I4, I7) of the restricted super module.
    SuperTriples {
        /// I7 as generators, e.g. "z1".
        #[arg(long)]
        i7: String,
        /// Largest codimension of I1.
        #[arg(long)]
        bound: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

type Fallible<T> = Result<T, Box<dyn std::error::Error>>;

/// A run either succeeds, fails an internal check (exit 1), or gets bad input
/// (exit 2).
enum Failure {
    Check(String),
    Input(Box<dyn std::error::Error>),
}

impl<E: Into<Box<dyn std::error::Error>>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.into())
    }
}

struct Output {
    text: String,
}

impl Output {
    fn new() -> Self {
        Output { text: String::new() }
    }

    fn line<T: Serialize>(&mut self, v: &T) -> Fallible<()> {
        self.text.push_str(&serde_json::to_string(v)?);
        self.text.push('\n');
        Ok(())
    }

    fn finish(self, out: Option<PathBuf>) -> io::Result<()> {
        match out {
            Some(p) => fs::write(p, self.text),
            None => io::stdout().lock().write_all(self.text.as_bytes()),
        }
    }
}

fn parse_label_pair(s: &str) -> Fallible<[IrrepLabel; 2]> {
    let parts: Vec<&str> = s.split(';').collect();
    if parts.len() != 2 {
        return Err(format!("expected two labels separated by ';', got {s:?}").into());
    }
    Ok([parse_irrep_label(parts[0])?, parse_irrep_label(parts[1])?])
}

fn parse_params(s: &str) -> Fallible<[Rational; 4]> {
    let v = s
        .split(',')
        .map(|x| parse_rational(x.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    v.try_into()
        .map_err(|_| format!("expected four parameters, got {s:?}").into())
}

fn classify_ideals(max_codim: usize, out: &mut Output) -> Result<(), Failure> {
    let mut mismatches = Vec::new();
    for spec in enumerate_ideals(max_codim) {
        let codim = codimension(&spec)?;
        let cap = (codim as u32).max(spec.max_generator_degree());
        let oracle_codim = ideal_oracle(&spec, cap)?.codimension()?;
        if oracle_codim != codim {
            mismatches.push(format!("{spec}: rule {codim}, oracle {oracle_codim}"));
        }
        let graph = sinks_graph(&spec)?;
        let (formula, formula_error) = match sinks_formula(&spec) {
            Ok(f) => (Some(f), None),
            Err(e) => (None, Some(e.to_string())),
        };
        let discrepancy = formula.as_ref().is_none_or(|f| {
            let mut f = f.clone();
            f.sort();
            let mut g = graph.clone();
            g.sort();
            f != g
        });
        out.line(&json!({
            "spec": spec,
            "ideal": spec.to_string(),
            "codimension": codim,
            "components": quotient_components(&spec)?,
            "sinks_graph": graph,
            "sinks_formula": formula,
            "formula_error": formula_error,
            "discrepancy": discrepancy,
        }))?;
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("oracle disagreement: {}", mismatches.join("; "))))
    }
}

fn build_rep(source: &str, gens: &str, cap: u32, format: Format, out: &mut Output) -> Result<(), Failure> {
    let source = parse_irrep_label(source)?;
    let polys = parse_generators(gens, source)?;
    let q = build_quotient(source, &polys, cap)?;
    let m = rep_matrices(&q);
    if !verify_lie_relations(&m) {
        return Err(Failure::Check(format!(
            "Lie relations fail: {}",
            relation_failures(&m).join("; ")
        )));
    }
    let graph = component_graph(&m)?;
    if !graph.is_acyclic() {
        return Err(Failure::Check("component graph has a cycle".into()));
    }
    match format {
        Format::Json => out.line(&json!({
            "source": source,
            "gens": gens,
            "dim": q.dim(),
            "saturation": q.saturation,
            "dims_by_degree": q.dims_by_degree(),
            "rep": m,
            "graph": graph,
        }))?,
        Format::Dot => out.text.push_str(&graph.to_dot()),
    }
    Ok(())
}

fn family(sources: &str, sinks: &str, params: &str, compare: &[String], out: &mut Output) -> Result<(), Failure> {
    let base = FamilyBase::new(parse_label_pair(sources)?, parse_label_pair(sinks)?)?;
    let f = FamilySpec::new(base.clone(), parse_params(params)?);
    let m = build_family(&f);
    if !verify_lie_relations(&m) {
        return Err(Failure::Check(format!(
            "Lie relations fail: {}",
            relation_failures(&m).join("; ")
        )));
    }
    let mut comparisons = Vec::new();
    for c in compare {
        let g = FamilySpec::new(base.clone(), parse_params(c)?);
        comparisons.push(json!({
            "params": g,
            "equivalent": family_equivalence(&f, &g)?,
        }));
    }
    let ind = indecomposability(&m);
    out.line(&json!({
        "family": f,
        "dim": m.dim,
        "indecomposable": ind.indecomposable(),
        "indecomposability": ind,
        "comparisons": comparisons,
    }))?;
    Ok(())
}

fn super_triples(i7: &str, bound: usize, out: &mut Output) -> Result<(), Failure> {
    let i7: IdealSpec = parse_ideal_spec(i7)?;
    for (t, cert) in enumerate_triples(&i7, bound)? {
        let rep = build_urest_rep(&t, bound.max(1) as u32)?;
        let failures = super_relation_failures(&rep.rep);
        if !failures.is_empty() {
            return Err(Failure::Check(format!("relations fail for {t:?}: {}", failures.join("; "))));
        }
        out.line(&json!({
            "i1": t.i1,
            "i4": t.i4,
            "i7": t.i7,
            "ideals": [t.i1.to_string(), t.i4.to_string(), t.i7.to_string()],
            "certificate": cert,
            "block_dims": rep.block_dims,
            "dim": rep.rep.dim(),
        }))?;
    }
    Ok(())
}

fn run(cmd: Command) -> Result<(), Failure> {
    let mut out = Output::new();
    let (result, path) = match cmd {
        Command::ClassifyIdeals { max_codim, out: path } => (classify_ideals(max_codim, &mut out), path),
        Command::BuildRep {
            source,
            gens,
            degree_cap,
            format,
            out: path,
        } => (build_rep(&source, &gens, degree_cap, format, &mut out), path),
        Command::Family {
            sources,
            sinks,
            params,
            compare,
            out: path,
        } => (family(&sources, &sinks, &params, &compare, &mut out), path),
        Command::SuperTriples { i7, bound, out: path } => (super_triples(&i7, bound, &mut out), path),
    };
    // Partial output is still written so a failing run can be inspected.
    out.finish(path)?;
    result
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
