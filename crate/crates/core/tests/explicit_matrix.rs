mod common;

use indecomp::linalg::{int, unit};
use indecomp::rep::{are_equivalent, dualize, hom_space, is_indecomposable, verify_lie_relations};

use common::{explicit_six, graph, scalar_rep, z1_pow};
use indecomp::poly::Poly;

#[test]
fn explicit_realization_is_the_chain() {
    let m = explicit_six();
    assert!(verify_lie_relations(&m));
    assert!(is_indecomposable(&m));
    let built = scalar_rep(&[z1_pow(2), z1_pow(1).mul(&Poly::det())], 4);
    // Identity plus the map from the source to the sink.
    assert_eq!(hom_space(&built, &m).dim(), 2);
    assert!(are_equivalent(&built, &m));
    assert!(graph(&m).same_shape(&graph(&built)));
}

#[test]
fn z1_sends_one_to_z1_and_z4_to_det() {
    let m = explicit_six();
    let z1 = &m.p_minus[0];
    assert_eq!(z1.mul_vec(&unit(0)), unit(1));
    assert_eq!(z1.mul_vec(&unit(4)), unit(5));
    for k in 1..4 {
        assert!(z1.mul_vec(&unit(k)).is_empty());
    }
    // z2 z3 and z1 z4 land on det with opposite signs.
    let (z2, z3, z4) = (&m.p_minus[1], &m.p_minus[2], &m.p_minus[3]);
    assert_eq!(z2.mul(z3).get(5, 0), int(-1));
    assert_eq!(z1.mul(z4).get(5, 0), int(1));
}

#[test]
fn chain_is_self_dual() {
    let m = explicit_six();
    let d = dualize(&m);
    assert!(verify_lie_relations(&d));
    assert!(graph(&d).same_shape(&graph(&m).reversed()));
    assert!(are_equivalent(&m, &d));
}
