mod common;

use proptest::prelude::*;

use indecomp::ideal::{enumerate_ideals, is_subideal, sinks_graph, IdealSpec};
use indecomp::linalg::{int, Matrix};
use indecomp::poly::{ComponentLabel, Poly};
use indecomp::rep::{are_equivalent, dualize, verify_lie_relations, RepMatrices};
use indecomp::superalg::{build_urest_rep, invariance_certificate, super_verify_relations, SuperIdealTriple};

use common::{explicit_six, graph, scalar_rep, sink_components, spec_rep, z1_pow};

/// Generator lists with `r` strictly decreasing from `r1` and `s` strictly
/// increasing from 0.
fn spec_strategy() -> impl Strategy<Value = IdealSpec> {
    (1u32..=4, proptest::collection::vec((1u32..=3, 1u32..=2), 0..3)).prop_map(|(r1, steps)| {
        let mut gens = vec![ComponentLabel::new(r1, 0)];
        let (mut r, mut s) = (r1, 0);
        for (dr, ds) in steps {
            if r < dr {
                break;
            }
            r -= dr;
            s += ds;
            gens.push(ComponentLabel::new(r, s));
        }
        IdealSpec::new(gens).unwrap()
    })
}

/// `L U` with unit diagonals, so always invertible.
fn invertible(n: usize, entries: &[i64]) -> (Matrix, Matrix) {
    let mut lo = Matrix::identity(n);
    let mut up = Matrix::identity(n);
    let mut it = entries.iter().cycle();
    for i in 0..n {
        for j in 0..i {
            lo.set(i, j, int(*it.next().unwrap()));
            up.set(j, i, int(*it.next().unwrap()));
        }
    }
    let p = lo.mul(&up);
    let inv = p.inverse().unwrap();
    (p, inv)
}

fn small_reps() -> Vec<RepMatrices> {
    vec![
        scalar_rep(&[z1_pow(2), Poly::det()], 4),
        scalar_rep(&[z1_pow(2), z1_pow(1).mul(&Poly::det())], 4),
        explicit_six(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn quotient_graphs(spec in spec_strategy()) {
        let m = spec_rep(&spec, 24);
        prop_assert!(verify_lie_relations(&m));
        let g = graph(&m);
        prop_assert!(g.is_acyclic());
        prop_assert_eq!(g.sources(), vec![0]);
        let mut rule = sinks_graph(&spec).unwrap();
        rule.sort();
        prop_assert_eq!(sink_components(&g), rule);
        let d = dualize(&m);
        prop_assert!(verify_lie_relations(&d));
        prop_assert!(graph(&d).same_shape(&g.reversed()));
    }

    #[test]
    fn equivalence_is_an_equivalence_relation(
        picks in proptest::collection::vec(0usize..3, 3),
        entries in proptest::collection::vec(-1i64..=1, 3..12),
    ) {
        let base = small_reps();
        let reps: Vec<RepMatrices> = picks
            .iter()
            .enumerate()
            .map(|(k, &i)| {
                let m = &base[i];
                let shifted: Vec<i64> = entries.iter().cycle().skip(k + 1).take(entries.len()).copied().collect();
                let (p, inv) = invertible(m.dim, &shifted);
                m.conjugate(&p, &inv)
            })
            .collect();
        for r in &reps {
            prop_assert!(verify_lie_relations(r));
        }
        let table: Vec<Vec<bool>> =
            (0..3).map(|a| (0..3).map(|b| are_equivalent(&reps[a], &reps[b])).collect()).collect();
        let eq = |a: usize, b: usize| table[a][b];
        for a in 0..3 {
            for b in 0..3 {
                prop_assert_eq!(eq(a, b), eq(b, a));
                prop_assert_eq!(eq(a, b), picks[a] != 0 && picks[b] != 0 || picks[a] == picks[b]);
                for c in 0..3 {
                    if eq(a, b) && eq(b, c) {
                        prop_assert!(eq(a, c));
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn invariant_triples_give_representations(a in 0usize..64, b in 0usize..64, c in 0usize..64) {
        let ideals = enumerate_ideals(15);
        let pick = |k: usize| ideals[k % ideals.len()].clone();
        let mut chain = [pick(a), pick(b), pick(c)];
        chain.sort_by_key(|i| std::cmp::Reverse(indecomp::ideal::codimension(i).unwrap()));
        prop_assume!(is_subideal(&chain[0], &chain[1]) && is_subideal(&chain[1], &chain[2]));
        let [i1, i4, i7] = chain;
        let t = SuperIdealTriple::new(i1, i4, i7).unwrap();
        let cert = invariance_certificate(&t, 15).unwrap();
        match build_urest_rep(&t, 15) {
            Ok(r) => {
                prop_assert!(cert.invariant);
                prop_assert!(super_verify_relations(&r.rep));
                let expected: usize = cert.codims.iter().sum::<usize>() + cert.codims[1];
                prop_assert_eq!(r.rep.dim(), expected);
            }
            Err(_) => prop_assert!(!cert.invariant),
        }
    }
}
