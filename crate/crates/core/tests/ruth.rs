use gl2_core::gen;
use gl2_core::groupoid::{cyclic_translation_groupoid, pair_groupoid_n};
use gl2_core::lax::{verify_lax_transformation, LaxTransformation};
use gl2_core::report::Violation;
use gl2_core::ruth::{
    double_pseudo_rep, is_acyclic, morphism_to_lax_equivalence, pseudofunctor_to_ruth, ruth_to_pseudofunctor,
    ruth_to_pseudofunctor_unchecked, verify_morphism, verify_pseudofunctor, verify_ruth, Ruth2, RuthMorphism,
};
use gl2_core::{FinGroupoid, GL2Cell, RatMatrix};
use proptest::prelude::*;

fn groupoid(i: usize) -> FinGroupoid {
    [pair_groupoid_n(3), cyclic_translation_groupoid(3), pair_groupoid_n(2)][i].clone()
}

fn places(rep: &[Violation]) -> Vec<&str> {
    rep.iter().map(|v| v.at.as_str()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn conversions_round_trip(seed in any::<u64>(), g in 0usize..3) {
        let mut rng = gen::rng(seed);
        let r = gen::ruth(&mut rng, &groupoid(g), 2, 2);
        prop_assert!(verify_ruth(&r).is_empty());
        let p = ruth_to_pseudofunctor(&r).unwrap();
        prop_assert!(verify_pseudofunctor(&p).is_empty());
        let back = pseudofunctor_to_ruth(&p).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(ruth_to_pseudofunctor(&back).unwrap(), p);
    }

    #[test]
    fn cocycle_failures_are_coherence_failures(seed in any::<u64>(), g in 0usize..3) {
        let mut rng = gen::rng(seed);
        // Acyclic samples absorb every perturbation; draw until one sticks.
        let (bad, _) = std::iter::repeat_with(|| {
            let r = gen::ruth(&mut rng, &groupoid(g), 2, 2);
            gen::perturb_gamma(&mut rng, &r)
        })
        .flatten()
        .next()
        .unwrap();
        let cocycle = verify_ruth(&bad);
        let coherence = verify_pseudofunctor(&ruth_to_pseudofunctor_unchecked(&bad).unwrap());
        prop_assert!(!cocycle.is_empty());
        prop_assert!(cocycle.iter().all(|v| v.law == "cocycle equation"));
        prop_assert!(coherence.iter().all(|v| v.law == "coherence axiom"));
        prop_assert_eq!(places(&cocycle), places(&coherence));
    }

    #[test]
    fn doubling_is_acyclic(seed in any::<u64>(), g in 0usize..3, dim in 1usize..=3) {
        let mut rng = gen::rng(seed);
        let p = gen::pseudo_rep(&mut rng, &groupoid(g), dim);
        let d = double_pseudo_rep(&p).unwrap();
        prop_assert!(verify_ruth(&d).is_empty());
        prop_assert!(is_acyclic(&d));
        for (&(h, k), gamma) in &d.gamma {
            let expect = &p.rho[p.g.compose(h, k)] - &(&p.rho[h] * &p.rho[k]);
            prop_assert_eq!(gamma, &expect);
        }
    }

    #[test]
    fn representations_give_strict_functors(seed in any::<u64>(), g in 0usize..3) {
        let mut rng = gen::rng(seed);
        let gr = groupoid(g);
        // ρ(g) = A_tgt A_src⁻¹ is a genuine representation for any choice of A.
        let a: Vec<RatMatrix> = (0..gr.object_count()).map(|_| gen::invertible(&mut rng, 2)).collect();
        let rho: Vec<RatMatrix> =
            (0..gr.arrow_count()).map(|f| &a[gr.tgt(f)] * &a[gr.src(f)].inverse().unwrap()).collect();
        let r = Ruth2::from_representation(&gr, &vec![2; gr.object_count()], &rho).unwrap();
        prop_assert!(r.gamma.values().all(RatMatrix::is_zero));
        let p = ruth_to_pseudofunctor(&r).unwrap();
        prop_assert!(p.phi11.values().all(GL2Cell::is_identity));
    }

    #[test]
    fn morphism_equations_match_the_prism(seed in any::<u64>(), g in 0usize..3) {
        let mut rng = gen::rng(seed);
        // Move μ at one arrow by K c Lᵀ, with ∂K = 0 and Lᵀ∂ = 0, so both
        // degree equations still hold and only the pair equations can notice.
        let movable = |m: &RuthMorphism| {
            let gr = &m.src.g;
            (0..gr.arrow_count()).find(|&a| {
                !gr.is_unit(a)
                    && m.dst.d[gr.tgt(a)].kernel_basis().cols() > 0
                    && m.src.d[gr.src(a)].transpose().kernel_basis().cols() > 0
            })
        };
        let (m, a) = std::iter::repeat_with(|| {
            let r = gen::ruth(&mut rng, &groupoid(g), 2, 2);
            let m = gen::quasi_iso_morphism(&mut rng, &r);
            movable(&m).map(|a| (m, a))
        })
        .flatten()
        .next()
        .unwrap();
        prop_assert!(verify_morphism(&m).is_empty());
        let h = morphism_to_lax_equivalence(&m).unwrap();
        let (src, phi) = ruth_to_pseudofunctor(&m.src).unwrap().to_lax();
        let (_, psi) = ruth_to_pseudofunctor(&m.dst).unwrap().to_lax();
        let gl = ruth_to_pseudofunctor(&m.src).unwrap().general_linear();
        prop_assert!(verify_lax_transformation(&src, &gl, &phi, &psi, &h).is_empty());

        let gr = &m.src.g;
        let k = m.dst.d[gr.tgt(a)].kernel_basis().column(0);
        let l = m.src.d[gr.src(a)].transpose().kernel_basis().column(0);
        let mut bad = m.clone();
        bad.mu[a] = &bad.mu[a] + &(&k * &l.transpose());
        let mut bad_h: LaxTransformation<_, _> = h.clone();
        let cell = &h.cells[a];
        bad_h.cells[a] = GL2Cell::new(cell.from().clone(), cell.to().clone(), bad.mu[a].clone()).unwrap();

        let morphism = verify_morphism(&bad);
        let prism = verify_lax_transformation(&src, &gl, &phi, &psi, &bad_h);
        prop_assert!(!morphism.is_empty());
        prop_assert!(morphism.iter().all(|v| v.law == "morphism pair equation"), "{:?}", morphism);
        prop_assert!(prism.iter().all(|v| v.law == "transformation prism"), "{:?}", prism);
        prop_assert_eq!(places(&morphism), places(&prism));
    }
}
