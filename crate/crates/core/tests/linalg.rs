use gl2_core::gen;
use gl2_core::linalg::rat;
use gl2_core::RatMatrix;
use num_traits::Signed;
use proptest::prelude::*;

fn any_matrix() -> impl Strategy<Value = RatMatrix> {
    (any::<u64>(), 0usize..=6, 0usize..=6, 0usize..=6).prop_map(|(seed, r, c, k)| {
        let mut rng = gen::rng(seed);
        gen::matrix_of_rank(&mut rng, r, c, k.min(r).min(c))
    })
}

proptest! {
    #[test]
    fn rank_of_transpose(m in any_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn one_sided_inverses(m in any_matrix()) {
        if m.is_injective() {
            let l = m.left_inverse().unwrap();
            prop_assert_eq!(&l * &m, RatMatrix::identity(m.cols()));
        } else {
            prop_assert!(m.left_inverse().is_err());
        }
        if m.is_surjective() {
            let r = m.right_inverse().unwrap();
            prop_assert_eq!(&m * &r, RatMatrix::identity(m.rows()));
        } else {
            prop_assert!(m.right_inverse().is_err());
        }
    }

    #[test]
    fn kernel_basis_is_a_basis(m in any_matrix()) {
        let k = m.kernel_basis();
        prop_assert_eq!(k.rows(), m.cols());
        prop_assert_eq!(k.cols(), m.cols() - m.rank());
        prop_assert!((&m * &k).is_zero());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn reduced_entries_are_normalized(m in any_matrix()) {
        let (r, _) = m.rref();
        for q in r.entries().iter().chain(m.entries()) {
            prop_assert!(q.denom().is_positive());
            prop_assert_eq!(q.clone(), q.reduced());
        }
    }

    #[test]
    fn deterministic(m in any_matrix()) {
        prop_assert_eq!(m.rref(), m.rref());
        prop_assert_eq!(m.kernel_basis(), m.kernel_basis());
        prop_assert_eq!(m.to_strings(), m.clone().to_strings());
        let back = RatMatrix::from_strings(m.rows(), m.cols(), &m.to_strings()).unwrap();
        prop_assert_eq!(back, m);
    }
}

#[test]
fn empty_matrices_are_zero_maps() {
    let z = RatMatrix::zeros(0, 3);
    assert_eq!(z.rank(), 0);
    assert_eq!(z.kernel_basis(), RatMatrix::identity(3));
    assert_eq!(&RatMatrix::zeros(3, 0) * &z, RatMatrix::zeros(3, 3));
    assert_eq!(RatMatrix::scalar(rat(2)).inverse().unwrap().get(0, 0), &gl2_core::linalg::ratio(1, 2));
}
