use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::linalg::{Matrix, SparseVec, Subspace};
use crate::sl2::{highest_weights, isotypic_span, IrrepLabel};

use super::{RepError, RepMatrices};

/// An isotypic piece of one graded layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GraphNode {
    pub grade: i64,
    pub label: IrrepLabel,
    pub multiplicity: usize,
}

/// `count` copies of the target irreducible are reached from the source node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GraphArrow {
    pub from: usize,
    pub to: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentGraph {
    pub nodes: Vec<GraphNode>,
    pub arrows: Vec<GraphArrow>,
}

type NodeKey = (i64, IrrepLabel, usize);

impl ComponentGraph {
    pub fn sources(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| !self.arrows.iter().any(|a| a.to == i))
            .collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&i| !self.arrows.iter().any(|a| a.from == i))
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.nodes.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.to] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(i) = ready.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.from == i) {
                indeg[a.to] -= 1;
                if indeg[a.to] == 0 {
                    ready.push(a.to);
                }
            }
        }
        seen == n
    }

    /// The graph expected for the dual module: grades negated, arrows reversed.
    pub fn reversed(&self) -> ComponentGraph {
        ComponentGraph {
            nodes: self
                .nodes
                .iter()
                .map(|n| GraphNode {
                    grade: -n.grade,
                    ..*n
                })
                .collect(),
            arrows: self
                .arrows
                .iter()
                .map(|a| GraphArrow {
                    from: a.to,
                    to: a.from,
                    count: a.count,
                })
                .collect(),
        }
    }

    /// Order-independent form for comparisons.
    pub fn canonical(&self) -> (BTreeSet<NodeKey>, BTreeSet<(NodeKey, NodeKey, usize)>) {
        let key = |i: usize| {
            let n = self.nodes[i];
            (n.grade, n.label, n.multiplicity)
        };
        (
            (0..self.nodes.len()).map(key).collect(),
            self.arrows.iter().map(|a| (key(a.from), key(a.to), a.count)).collect(),
        )
    }

    pub fn same_shape(&self, other: &ComponentGraph) -> bool {
        self.canonical() == other.canonical()
    }

    /// Node labels in spin notation with a `×n` suffix for multiplicity; arrow
    /// counts shown when above one.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph components {\n  rankdir=LR;\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let mut label = n.label.spin_notation();
            if n.multiplicity > 1 {
                let _ = write!(label, "×{}", n.multiplicity);
            }
            let _ = writeln!(s, "  n{i} [label=\"{label}\"];");
        }
        for a in &self.arrows {
            if a.count > 1 {
                let _ = writeln!(s, "  n{} -> n{} [label=\"{}\"];", a.from, a.to, a.count);
            } else {
                let _ = writeln!(s, "  n{} -> n{};", a.from, a.to);
            }
        }
        s.push_str("}\n");
        s
    }
}

fn restrict(m: &Matrix, idx: &[usize]) -> Matrix {
    let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let mut out = Matrix::zeros(idx.len(), idx.len());
    for (k, &c) in idx.iter().enumerate() {
        for (r, x) in m.column(c) {
            match pos.get(&r) {
                Some(&j) => out.set(j, k, x),
                None => panic!("restrict: block not invariant"),
            }
        }
    }
    out
}

/// Nodes are the isotypic pieces of each grade; arrow counts are ranks of the
/// p- action between them, in units of the target irreducible.
pub fn component_graph(m: &RepMatrices) -> Result<ComponentGraph, RepError> {
    let n = m.dim;
    let mut layers: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (i, &g) in m.grades.iter().enumerate() {
        layers.entry(g).or_default().push(i);
    }
    for g in &m.g0 {
        if g.entries().any(|(r, c, _)| m.grades[r] != m.grades[c]) {
            return Err(RepError::NotGraded("g0 mixes grades".into()));
        }
    }
    for p in &m.p_minus {
        if p.entries().any(|(r, c, _)| m.grades[r] <= m.grades[c]) {
            return Err(RepError::NotGraded("p- does not raise the grade".into()));
        }
    }

    let mut nodes = Vec::new();
    let mut spans: Vec<Vec<SparseVec>> = Vec::new();
    for (&grade, idx) in &layers {
        let action: Vec<Matrix> = m.g0.iter().map(|g| restrict(g, idx)).collect();
        let hw = highest_weights(&action, &Subspace::full(idx.len()));
        for (label, vecs) in hw.by_weight {
            let local = isotypic_span(&action, label, &vecs);
            let global = local
                .into_iter()
                .map(|v| v.into_iter().map(|(k, x)| (idx[k], x)).collect())
                .collect();
            nodes.push(GraphNode {
                grade,
                label,
                multiplicity: vecs.len(),
            });
            spans.push(global);
        }
    }

    let cols: Vec<SparseVec> = spans.iter().flatten().cloned().collect();
    if cols.len() != n {
        return Err(RepError::NotGraded("g0 is not semisimple on a layer".into()));
    }
    let change = Matrix::from_columns(n, &cols);
    let inv = change
        .inverse()
        .ok_or_else(|| RepError::NotGraded("isotypic pieces are dependent".into()))?;
    let inv = &inv;
    let mut ranges = Vec::new();
    let mut start = 0;
    for s in &spans {
        ranges.push(start..start + s.len());
        start += s.len();
    }

    let mut arrows = Vec::new();
    for (i, span) in spans.iter().enumerate() {
        let images: Vec<SparseVec> = span
            .iter()
            .flat_map(|v| m.p_minus.iter().map(move |p| inv.mul_vec(&p.mul_vec(v))))
            .collect();
        for (j, r) in ranges.iter().enumerate() {
            if nodes[j].grade <= nodes[i].grade {
                continue;
            }
            let proj = Subspace::span(
                n,
                images
                    .iter()
                    .map(|v| v.range(r.clone()).map(|(&k, x)| (k, x.clone())).collect()),
            );
            if proj.dim() > 0 {
                arrows.push(GraphArrow {
                    from: i,
                    to: j,
                    count: proj.dim() / nodes[j].label.dim(),
                });
            }
        }
    }
    Ok(ComponentGraph { nodes, arrows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Poly, VPoly};
    use crate::rep::{build_quotient, dualize, rep_matrices};

    fn scalar_rep(gens: &[Poly]) -> RepMatrices {
        let g: Vec<VPoly> = gens.iter().cloned().map(VPoly::scalar).collect();
        rep_matrices(&build_quotient(IrrepLabel::TRIVIAL, &g, 6).unwrap())
    }

    fn z1(k: u32) -> Poly {
        (0..k).fold(Poly::one(), |p, _| p.mul_var(0))
    }

    #[test]
    fn five_and_six() {
        let g = component_graph(&scalar_rep(&[z1(2), Poly::det()])).unwrap();
        let labels: Vec<IrrepLabel> = g.nodes.iter().map(|n| n.label).collect();
        assert_eq!(labels, vec![IrrepLabel::new(0, 0), IrrepLabel::new(1, 1)]);
        assert_eq!(g.arrows, vec![GraphArrow { from: 0, to: 1, count: 1 }]);

        let g = component_graph(&scalar_rep(&[z1(2), z1(1).mul(&Poly::det())])).unwrap();
        let labels: Vec<IrrepLabel> = g.nodes.iter().map(|n| n.label).collect();
        assert_eq!(
            labels,
            vec![IrrepLabel::new(0, 0), IrrepLabel::new(1, 1), IrrepLabel::new(0, 0)]
        );
        assert_eq!(
            g.arrows,
            vec![
                GraphArrow { from: 0, to: 1, count: 1 },
                GraphArrow { from: 1, to: 2, count: 1 }
            ]
        );
        assert_eq!(g.sinks(), vec![2]);
        assert_eq!(g.sources(), vec![0]);
    }

    #[test]
    fn single_node() {
        let g = component_graph(&scalar_rep(&[z1(1)])).unwrap();
        assert_eq!(g.nodes.len(), 1);
        assert!(g.arrows.is_empty());
    }

    #[test]
    fn dual_reverses() {
        for gens in [vec![z1(2), Poly::det()], vec![z1(2)], vec![z1(3), z1(1).mul(&Poly::det())]] {
            let m = scalar_rep(&gens);
            let g = component_graph(&m).unwrap();
            let d = component_graph(&dualize(&m)).unwrap();
            assert!(d.same_shape(&g.reversed()));
            assert!(g.is_acyclic() && d.is_acyclic());
        }
    }

    #[test]
    fn dot_output() {
        let g = component_graph(&scalar_rep(&[z1(2), Poly::det()])).unwrap();
        assert_eq!(
            g.to_dot(),
            "digraph components {\n  rankdir=LR;\n  n0 [label=\"(0, 0)\"];\n  n1 [label=\"(1/2, 1/2)\"];\n  n0 -> n1;\n}\n"
        );
    }

    #[test]
    fn cycle_detection() {
        let node = GraphNode { grade: 0, label: IrrepLabel::TRIVIAL, multiplicity: 1 };
        let g = ComponentGraph {
            nodes: vec![node, node],
            arrows: vec![GraphArrow { from: 0, to: 1, count: 1 }, GraphArrow { from: 1, to: 0, count: 1 }],
        };
        assert!(!g.is_acyclic());
    }
}
