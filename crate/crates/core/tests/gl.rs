use gl2_core::chain::is_quasi_iso;
use gl2_core::gen::{self, Rng8};
use gl2_core::gl::{
    compose_arrows, fill_horn20, fill_horn22, hcompose, hcompose_other_bracketing, invert_2cell, quasi_inverse,
    vcompose, whisker_left, whisker_right,
};
use gl2_core::{GL2Cell, GLArrow};
use proptest::prelude::*;

/// The defining equations of a 2-cell, recomputed from the matrices.
fn is_homotopy(c: &GL2Cell) -> bool {
    let (f, g) = (c.from(), c.to());
    f.src() == g.src()
        && f.dst() == g.dst()
        && c.r() * f.src().fiber.d() == f.a1() - g.a1()
        && f.dst().fiber.d() * c.r() == f.a0() - g.a0()
}

fn after(rng: &mut Rng8, f: &GLArrow, p: usize) -> GLArrow {
    GLArrow::from_map(f.dst_point(), p, gen::quasi_iso_at(rng, &f.dst().fiber, 3, false)).unwrap()
}

fn chain_of_three(seed: u64) -> (Rng8, GLArrow, GLArrow, GLArrow) {
    let mut rng = gen::rng(seed);
    let f = gen::gl_arrow(&mut rng, 0, 1, 3);
    let g = after(&mut rng, &f, 2);
    let h = after(&mut rng, &g, 3);
    (rng, f, g, h)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn interchange(seed in any::<u64>()) {
        let (mut rng, f, g, _) = chain_of_three(seed);
        let r = gen::gl_cell_from(&mut rng, &f);
        let r2 = gen::gl_cell_from(&mut rng, r.to());
        let s = gen::gl_cell_from(&mut rng, &g);
        let s2 = gen::gl_cell_from(&mut rng, s.to());
        let lhs = hcompose(&vcompose(&s2, &s).unwrap(), &vcompose(&r2, &r).unwrap()).unwrap();
        let rhs = vcompose(&hcompose(&s2, &r2).unwrap(), &hcompose(&s, &r).unwrap()).unwrap();
        prop_assert!(is_homotopy(&lhs));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn both_bracketings_agree(seed in any::<u64>()) {
        let (mut rng, f, g, _) = chain_of_three(seed);
        let r = gen::gl_cell_from(&mut rng, &f);
        let s = gen::gl_cell_from(&mut rng, &g);
        let hc = hcompose(&s, &r).unwrap();
        prop_assert_eq!(hc.r(), &hcompose_other_bracketing(&s, &r).unwrap());
        // s.from.a1·R_r + R_s·r.to.a0 against s.to.a1·R_r + R_s·r.from.a0.
        let a = &(s.from().a1() * r.r()) + &(s.r() * r.to().a0());
        let b = &(s.to().a1() * r.r()) + &(s.r() * r.from().a0());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn whiskers_and_inverses_are_homotopies(seed in any::<u64>()) {
        let (mut rng, f, g, _) = chain_of_three(seed);
        let r = gen::gl_cell_from(&mut rng, &f);
        let s = gen::gl_cell_from(&mut rng, &g);
        prop_assert!(is_homotopy(&whisker_left(&g, &r).unwrap()));
        prop_assert!(is_homotopy(&whisker_right(&s, &f).unwrap()));
        let inv = invert_2cell(&r);
        prop_assert!(is_homotopy(&inv));
        prop_assert_eq!(vcompose(&inv, &r).unwrap(), GL2Cell::identity(&f));
        prop_assert_eq!(vcompose(&r, &inv).unwrap(), GL2Cell::identity(r.to()));
    }

    #[test]
    fn composition_is_associative_and_unital(seed in any::<u64>()) {
        let (_, f, g, h) = chain_of_three(seed);
        let left = compose_arrows(&h, &compose_arrows(&g, &f).unwrap()).unwrap();
        let right = compose_arrows(&compose_arrows(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(compose_arrows(&f, &GLArrow::identity(&f.src())).unwrap(), f.clone());
        prop_assert_eq!(compose_arrows(&GLArrow::identity(&f.dst()), &f).unwrap(), f);
    }

    #[test]
    fn quasi_inverses(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let f = gen::gl_arrow(&mut rng, 0, 1, 3);
        let q = quasi_inverse(&f).unwrap();
        let g = &q.inverse;
        prop_assert!(is_quasi_iso(g.map()));
        prop_assert_eq!(q.unit.from(), &GLArrow::identity(&f.src()));
        prop_assert_eq!(q.unit.to(), &compose_arrows(g, &f).unwrap());
        prop_assert_eq!(q.counit.from(), &GLArrow::identity(&f.dst()));
        prop_assert_eq!(q.counit.to(), &compose_arrows(&f, g).unwrap());
        prop_assert!(is_homotopy(&q.unit) && is_homotopy(&q.counit));
        // Whiskering around the triangle stays inside GL(V).
        let a = whisker_right(&q.counit, &f).unwrap();
        let b = whisker_left(&f, &q.unit).unwrap();
        prop_assert!(is_homotopy(&a) && is_homotopy(&b));
        prop_assert_eq!(a.to(), b.to());
    }

    #[test]
    fn outer_horns(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let x = gen::any_fiber(&mut rng, 3);
        let alpha = GLArrow::from_map(0, 1, gen::quasi_iso_at(&mut rng, &x, 3, false)).unwrap();
        let gamma = GLArrow::from_map(0, 2, gen::quasi_iso_at(&mut rng, &x, 3, false)).unwrap();
        let (beta, cell) = fill_horn20(&alpha, &gamma).unwrap();
        prop_assert!(is_quasi_iso(beta.map()) && is_homotopy(&cell));
        prop_assert_eq!(cell.from(), &gamma);
        prop_assert_eq!(cell.to(), &compose_arrows(&beta, &alpha).unwrap());
        if alpha.map().is_iso_in_both_degrees() {
            prop_assert_eq!(beta.a1(), &(gamma.a1() * &alpha.a1().inverse().unwrap()));
            prop_assert_eq!(beta.a0(), &(gamma.a0() * &alpha.a0().inverse().unwrap()));
        }

        let z = gen::any_fiber(&mut rng, 3);
        let beta = GLArrow::from_map(1, 2, gen::quasi_iso_at(&mut rng, &z, 3, true)).unwrap();
        let gamma = GLArrow::from_map(0, 2, gen::quasi_iso_at(&mut rng, &z, 3, true)).unwrap();
        let (alpha, cell) = fill_horn22(&gamma, &beta).unwrap();
        prop_assert!(is_quasi_iso(alpha.map()) && is_homotopy(&cell));
        prop_assert_eq!(cell.from(), &gamma);
        prop_assert_eq!(cell.to(), &compose_arrows(&beta, &alpha).unwrap());
        if beta.map().is_iso_in_both_degrees() {
            prop_assert_eq!(alpha.a1(), &(&beta.a1().inverse().unwrap() * gamma.a1()));
            prop_assert_eq!(alpha.a0(), &(&beta.a0().inverse().unwrap() * gamma.a0()));
        }
    }
}
