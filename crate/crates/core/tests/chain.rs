use gl2_core::chain::{cone, homology, induced_homology_maps, is_quasi_iso};
use gl2_core::gen;
use gl2_core::linalg::rat;
use gl2_core::{ChainMap2, Homotopy2, RatMatrix};
use proptest::prelude::*;

fn any_map() -> impl Strategy<Value = ChainMap2> {
    (any::<u64>(), any::<bool>()).prop_map(|(seed, qi)| {
        let mut rng = gen::rng(seed);
        if qi {
            gen::quasi_iso(&mut rng, 4)
        } else {
            gen::any_chain_map(&mut rng, 4)
        }
    })
}

fn invertible(m: &RatMatrix) -> bool {
    m.rows() == m.cols() && m.rank() == m.rows()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn three_characterizations_agree(m in any_map()) {
        let (h1, h0) = induced_homology_maps(&m);
        let by_homology = invertible(&h1) && invertible(&h0);
        prop_assert_eq!(is_quasi_iso(&m), by_homology);
        prop_assert_eq!(is_quasi_iso(&m), cone(&m).is_exact());
    }

    #[test]
    fn euler_characteristic(m in any_map()) {
        for f in [m.src(), m.dst()] {
            let h = homology(f);
            prop_assert_eq!(h.euler(), f.euler());
        }
        if is_quasi_iso(&m) {
            prop_assert_eq!(m.src().euler(), m.dst().euler());
            prop_assert_eq!(homology(m.src()), homology(m.dst()));
        }
    }

    #[test]
    fn invalid_homotopies_are_rejected(seed in any::<u64>()) {
        let mut rng = gen::rng(seed);
        let m = gen::any_chain_map(&mut rng, 3);
        let (x, y) = (m.src(), m.dst());
        let r = gen::matrix(&mut rng, y.dim1(), x.dim0());
        let h = Homotopy2::starting_at(m.clone(), r.clone()).unwrap();
        // Recompute the target independently.
        prop_assert_eq!(h.to().a1(), &(m.a1() - &(&r * x.d())));
        prop_assert_eq!(h.to().a0(), &(m.a0() - &(y.d() * &r)));
        prop_assert!(Homotopy2::new(m.clone(), h.to().clone(), r.clone()).is_ok());
        if y.dim1() > 0 && x.dim0() > 0 && !(x.d().is_zero() && y.d().is_zero()) {
            let mut bumped = r.clone();
            bumped.set(0, 0, bumped.get(0, 0) + rat(1));
            let ok = Homotopy2::new(m.clone(), h.to().clone(), bumped.clone()).is_ok();
            let holds = &bumped * x.d() == m.a1() - h.to().a1() && y.d() * &bumped == m.a0() - h.to().a0();
            prop_assert_eq!(ok, holds);
        }
    }
}
