#![allow(dead_code)]

use indecomp::ideal::IdealSpec;
use indecomp::linalg::{int, Matrix};
use indecomp::poly::{ComponentLabel, Poly, VPoly};
use indecomp::rep::{build_quotient, component_graph, rep_matrices, ComponentGraph, RepMatrices};
use indecomp::sl2::IrrepLabel;

/// The hand-written 6x6 realization of `P / <z1^2, z1*det>`: basis
/// `1, z1, z2, z3, z4, det`; `p = (p1..p4)` sends `1` to `p` and the middle block to
/// `det` through the row `(p4, -p3, -p2, p1)`. g0 acts on the middle block only.
pub fn explicit_six() -> RepMatrices {
    let last_row = [[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]];
    let p_minus = (0..4)
        .map(|i| {
            let mut m = Matrix::zeros(6, 6);
            m.set(1 + i, 0, int(1));
            for (j, &c) in last_row[i].iter().enumerate() {
                if c != 0 {
                    m.set(5, 1 + j, int(c));
                }
            }
            m
        })
        .collect();
    // Middle block: the derivation of each generator on (z1, z2; z3, z4), as
    // (source, target, coefficient) triples.
    let moves: [&[(usize, usize, i64)]; 6] = [
        &[(2, 0, 1), (3, 1, 1)],                       // E_L: z3 -> z1, z4 -> z2
        &[(0, 2, 1), (1, 3, 1)],                       // F_L
        &[(0, 0, 1), (1, 1, 1), (2, 2, -1), (3, 3, -1)], // H_L
        &[(1, 0, 1), (3, 2, 1)],                       // E_R: z2 -> z1, z4 -> z3
        &[(0, 1, 1), (2, 3, 1)],                       // F_R
        &[(0, 0, 1), (2, 2, 1), (1, 1, -1), (3, 3, -1)], // H_R
    ];
    let g0 = moves
        .iter()
        .map(|mv| {
            let mut m = Matrix::zeros(6, 6);
            for &(from, to, c) in mv.iter() {
                m.set(1 + to, 1 + from, int(c));
            }
            m
        })
        .collect();
    RepMatrices::new(p_minus, g0, vec![0, 1, 1, 1, 1, 2])
}

pub fn z1_pow(k: u32) -> Poly {
    (0..k).fold(Poly::one(), |p, _| p.mul_var(0))
}

pub fn scalar_rep(gens: &[Poly], cap: u32) -> RepMatrices {
    let g: Vec<VPoly> = gens.iter().cloned().map(VPoly::scalar).collect();
    rep_matrices(&build_quotient(IrrepLabel::TRIVIAL, &g, cap).unwrap())
}

pub fn spec_rep(spec: &IdealSpec, cap: u32) -> RepMatrices {
    let gens: Vec<Poly> = spec.gens().iter().map(|c| Poly::component_hw(c.r, c.s)).collect();
    scalar_rep(&gens, cap)
}

/// Component labels of the sink nodes of a scalar quotient's graph: the node
/// of type `(r, r)` in degree `d` is `[r, (d - r) / 2]`.
pub fn sink_components(g: &ComponentGraph) -> Vec<ComponentLabel> {
    let mut out: Vec<ComponentLabel> = g
        .sinks()
        .into_iter()
        .map(|i| {
            let n = g.nodes[i];
            assert_eq!(n.label.a, n.label.b, "scalar quotients only have (r, r) components");
            assert_eq!(n.multiplicity, 1);
            let r = n.label.a;
            ComponentLabel::new(r, (n.grade as u32 - r) / 2)
        })
        .collect();
    out.sort();
    out
}

pub fn graph(m: &RepMatrices) -> ComponentGraph {
    component_graph(m).unwrap()
}
