use gl2_core::group::FiniteGroup;
use gl2_core::groupoid::{
    action_groupoid, check_simplicial_identities, cyclic_translation_groupoid, nerve1, pair_groupoid_n,
    projection_to_pair, verify_groupoid,
};
use gl2_core::FinGroupoid;

fn samples() -> Vec<FinGroupoid> {
    let s3 = FiniteGroup::symmetric(3);
    let points: Vec<String> = (0..s3.order()).map(|i| format!("e{i}")).collect();
    let act: Vec<Vec<usize>> = (0..s3.order()).map(|g| (0..s3.order()).map(|x| s3.mul(g, x)).collect()).collect();
    vec![
        pair_groupoid_n(1),
        pair_groupoid_n(4),
        cyclic_translation_groupoid(1),
        cyclic_translation_groupoid(5),
        action_groupoid(&s3, &points, &act).unwrap(),
    ]
}

#[test]
fn constructors_satisfy_the_axioms() {
    for g in samples() {
        assert!(verify_groupoid(&g).is_empty(), "{:?}", verify_groupoid(&g));
        assert!(projection_to_pair(&g).is_functor(&g));
        let back = FinGroupoid::from_data(g.to_data()).unwrap();
        assert_eq!(back, g);
    }
}

#[test]
fn simplicial_identities_hold() {
    for g in samples() {
        for n in 0..=3 {
            assert!(check_simplicial_identities(&g, n).is_empty(), "n = {n}");
        }
    }
    // Chains in the pair groupoid are sequences of n + 1 points.
    let p = pair_groupoid_n(3);
    for n in 0..=4 {
        assert_eq!(nerve1(&p, n).len(), 3usize.pow(n as u32 + 1));
    }
}
