//! Seeded random generators for fibers, chain maps, `GL(V)` cells,
//! representations up to homotopy and their morphisms.
//!
//! Entries are small integers so that exact arithmetic stays cheap.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chain::{ChainMap2, Fiber2, Homotopy2};
use crate::gl::{invert_2cell, GL2Cell, GLArrow, GLObject, GeneralLinear, GradedBundle};
use crate::groupoid::FinGroupoid;
use crate::handle::TwoCategory;
use crate::lax::{Lax, LaxFunctor};
use crate::linalg::{rat, RatMatrix};
use crate::nerve::{reconstruct_filtration, strip_to_filtration, Label, SimplexLabel};
use crate::ruth::{change_basis, direct_sum, double_pseudo_rep, gauge, PseudoRep, Ruth2, RuthMorphism};
use crate::twocat::{Fin2Cat, Fin2Groupoid};

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> RatMatrix {
    RatMatrix::from_fn(rows, cols, |_, _| rat(rng.gen_range(-3..=3)))
}

pub fn invertible<R: Rng>(rng: &mut R, n: usize) -> RatMatrix {
    loop {
        let m = matrix(rng, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

/// A differential of the given shape with rank drawn uniformly from the
/// possible ranks.
pub fn fiber<R: Rng>(rng: &mut R, dim1: usize, dim0: usize) -> Fiber2 {
    let r = rng.gen_range(0..=dim1.min(dim0));
    Fiber2::from_differential(matrix_of_rank(rng, dim0, dim1, r))
}

pub fn matrix_of_rank<R: Rng>(rng: &mut R, rows: usize, cols: usize, rank: usize) -> RatMatrix {
    let mut core = RatMatrix::zeros(rows, cols);
    for i in 0..rank {
        core.set(i, i, rat(1));
    }
    &(&invertible(rng, rows) * &core) * &invertible(rng, cols)
}

pub fn any_fiber<R: Rng>(rng: &mut R, max_dim: usize) -> Fiber2 {
    let (a, b) = (rng.gen_range(0..=max_dim), rng.gen_range(0..=max_dim));
    fiber(rng, a, b)
}

/// A random element of the space of chain maps `src -> dst`.
pub fn chain_map<R: Rng>(rng: &mut R, src: &Fiber2, dst: &Fiber2) -> ChainMap2 {
    // Unknowns (vec a1, vec a0); constraint a0 ∂ − ∂′ a1 = 0.
    let (s1, s0, t1, t0) = (src.dim1(), src.dim0(), dst.dim1(), dst.dim0());
    let lhs = RatMatrix::identity(s1).kron(dst.d()).scale(&rat(-1));
    let rhs = src.d().transpose().kron(&RatMatrix::identity(t0));
    let system = RatMatrix::hstack(&[&lhs, &rhs]).expect("same row count");
    let basis = system.kernel_basis();
    let mut v = RatMatrix::zeros(basis.rows(), 1);
    for j in 0..basis.cols() {
        let c = rat(rng.gen_range(-2..=2));
        v = &v + &basis.column(j).scale(&c);
    }
    let a1 = RatMatrix::unvec_columns(&v.block(0, t1 * s1, 0, 1), t1, s1);
    let a0 = RatMatrix::unvec_columns(&v.block(t1 * s1, v.rows(), 0, 1), t0, s0);
    ChainMap2::new(src.clone(), dst.clone(), a1, a0).expect("kernel of the chain condition")
}

/// Any chain map between random fibers of dimension at most `max_dim`.
pub fn any_chain_map<R: Rng>(rng: &mut R, max_dim: usize) -> ChainMap2 {
    let src = any_fiber(rng, max_dim);
    let dst = any_fiber(rng, max_dim);
    chain_map(rng, &src, &dst)
}

fn conjugate(f: &Fiber2, p1: &RatMatrix, p0: &RatMatrix) -> Fiber2 {
    Fiber2::from_differential(&(p0 * f.d()) * &p1.inverse().expect("invertible"))
}

/// A quasi-isomorphism out of `src` (or into it when `into` is set): the
/// inclusion of `src` into `src ⊕ (ℚᵏ --id--> ℚᵏ)` in a random basis, moved
/// along a random homotopy.
pub fn quasi_iso_at<R: Rng>(rng: &mut R, fixed: &Fiber2, max_dim: usize, into: bool) -> ChainMap2 {
    let (d1, d0) = (fixed.dim1(), fixed.dim0());
    let room = max_dim.saturating_sub(d1.max(d0));
    let k = rng.gen_range(0..=room);
    let big = Fiber2::from_differential(RatMatrix::block_diag(fixed.d(), &RatMatrix::identity(k)));
    let (q1, q0) = (invertible(rng, d1 + k), invertible(rng, d0 + k));
    let other = conjugate(&big, &q1, &q0);
    let inc = |n: usize| RatMatrix::vstack(&[&RatMatrix::identity(n), &RatMatrix::zeros(k, n)]).unwrap();
    let m = if into {
        let a1 = &inc(d1).transpose() * &q1.inverse().unwrap();
        let a0 = &inc(d0).transpose() * &q0.inverse().unwrap();
        ChainMap2::new(other, fixed.clone(), a1, a0)
    } else {
        ChainMap2::new(fixed.clone(), other, &q1 * &inc(d1), &q0 * &inc(d0))
    }
    .expect("split inclusion is a chain map");
    let r = matrix(rng, m.dst().dim1(), m.src().dim0());
    Homotopy2::starting_at(m, r).expect("shape").to().clone()
}

pub fn quasi_iso<R: Rng>(rng: &mut R, max_dim: usize) -> ChainMap2 {
    let src = any_fiber(rng, max_dim);
    let into = rng.gen_bool(0.5);
    quasi_iso_at(rng, &src, max_dim, into)
}

pub fn gl_arrow<R: Rng>(rng: &mut R, src_point: usize, dst_point: usize, max_dim: usize) -> GLArrow {
    GLArrow::from_map(src_point, dst_point, quasi_iso(rng, max_dim)).expect("quasi-isomorphism")
}

/// A random 2-cell out of `f`.
pub fn gl_cell_from<R: Rng>(rng: &mut R, f: &GLArrow) -> GL2Cell {
    let r = matrix(rng, f.dst().fiber.dim1(), f.src().fiber.dim0());
    GL2Cell::starting_at(f.clone(), r).expect("shape")
}

pub fn pseudo_rep<R: Rng>(rng: &mut R, g: &FinGroupoid, dim: usize) -> PseudoRep {
    let rho = (0..g.arrow_count())
        .map(|a| if g.is_unit(a) { RatMatrix::identity(dim) } else { matrix(rng, dim, dim) })
        .collect();
    PseudoRep { g: g.clone(), dims: alloc::vec![dim; g.object_count()], rho }
}

/// A strict representation `ρ^{y<-x} = Φ_y⁻¹ Φ_x` trivialized by chain
/// isomorphisms `Φ_x` onto one fiber; only valid on groupoids with at most
/// one arrow between two points.
fn coboundary<R: Rng>(rng: &mut R, g: &FinGroupoid, dim1: usize, dim0: usize) -> Ruth2 {
    let w = fiber(rng, dim1, dim0);
    let n = g.object_count();
    let phi: Vec<(RatMatrix, RatMatrix)> = (0..n).map(|_| (invertible(rng, dim1), invertible(rng, dim0))).collect();
    let d = phi.iter().map(|(p1, p0)| &(&p0.inverse().unwrap() * w.d()) * p1).collect();
    let map = |a: usize, i: usize| {
        let pick = |x: usize| if i == 1 { &phi[x].0 } else { &phi[x].1 };
        &pick(g.tgt(a)).inverse().unwrap() * pick(g.src(a))
    };
    Ruth2 {
        g: g.clone(),
        v: GradedBundle::new(g.objects().to_vec(), alloc::vec![(dim1, dim0); n]).unwrap(),
        d,
        rho1: (0..g.arrow_count()).map(|a| map(a, 1)).collect(),
        rho0: (0..g.arrow_count()).map(|a| map(a, 0)).collect(),
        gamma: g.composable_pairs().into_iter().map(|p| (p, RatMatrix::zeros(dim1, dim0))).collect(),
    }
}

/// Split `dims` between a strict part with nontrivial homology and a
/// doubling, then gauge by a random `μ` and change bases. The groupoid must
/// have at most one arrow between any two points.
pub fn ruth<R: Rng>(rng: &mut R, g: &FinGroupoid, max1: usize, max0: usize) -> Ruth2 {
    let e = rng.gen_range(0..=max1.min(max0));
    let (w1, w0) = (rng.gen_range(0..=max1 - e), rng.gen_range(0..=max0 - e));
    let strict = coboundary(rng, g, w1, w0);
    let doubled = double_pseudo_rep(&pseudo_rep(rng, g, e)).expect("valid pseudo-rep");
    let r = direct_sum(&strict, &doubled).expect("same groupoid");
    let mu = gauge_field(rng, &r);
    let (r, _) = gauge(&r, &mu).expect("gauge field shape");
    let (a1, a0) = basis_change(rng, &r);
    change_basis(&r, &a1, &a0).expect("invertible").0
}

fn gauge_field<R: Rng>(rng: &mut R, r: &Ruth2) -> Vec<RatMatrix> {
    let g = &r.g;
    (0..g.arrow_count())
        .map(|a| {
            let m = matrix(rng, r.v.dims(g.tgt(a)).0, r.v.dims(g.src(a)).1);
            if g.is_unit(a) {
                RatMatrix::zeros(m.rows(), m.cols())
            } else {
                m
            }
        })
        .collect()
}

fn basis_change<R: Rng>(rng: &mut R, r: &Ruth2) -> (Vec<RatMatrix>, Vec<RatMatrix>) {
    (0..r.g.object_count())
        .map(|x| {
            let (d1, d0) = r.v.dims(x);
            (invertible(rng, d1), invertible(rng, d0))
        })
        .unzip()
}

/// A quasi-isomorphism out of `r`: a gauge move followed by a basis change.
pub fn quasi_iso_morphism<R: Rng>(rng: &mut R, r: &Ruth2) -> RuthMorphism {
    let (s, m) = gauge(r, &gauge_field(rng, r)).expect("gauge field shape");
    let (a1, a0) = basis_change(rng, &s);
    let (_, n) = change_basis(&s, &a1, &a0).expect("invertible");
    n.after(&m).expect("composable")
}

/// Adds `K c Lᵀ` to one `γ^{h,g}`, with the columns of `K` spanning
/// `ker ∂ᶻ` and those of `L` spanning `(im ∂ˣ)^⊥`, so the homotopy equations
/// survive and only the cocycle equation can break. Returns the pair, or
/// `None` if no non-unital pair admits such a perturbation.
pub fn perturb_gamma<R: Rng>(rng: &mut R, r: &Ruth2) -> Option<(Ruth2, (usize, usize))> {
    let g = &r.g;
    let pairs: Vec<(usize, usize)> = g
        .composable_pairs()
        .into_iter()
        .filter(|&(h, k)| !g.is_unit(h) && !g.is_unit(k))
        .filter(|&(h, k)| {
            r.d[g.tgt(h)].kernel_basis().cols() > 0 && r.d[g.src(k)].transpose().kernel_basis().cols() > 0
        })
        .collect();
    if pairs.is_empty() {
        return None;
    }
    let (h, k) = pairs[rng.gen_range(0..pairs.len())];
    let kz = r.d[g.tgt(h)].kernel_basis();
    let lx = r.d[g.src(k)].transpose().kernel_basis();
    let mut c = RatMatrix::zeros(kz.cols(), lx.cols());
    while c.is_zero() {
        c = matrix(rng, kz.cols(), lx.cols());
    }
    let p = &(&kz * &c) * &lx.transpose();
    let mut s = r.clone();
    let e = s.gamma.get_mut(&(h, k)).unwrap();
    *e = &*e + &p;
    Some((s, (h, k)))
}

/// A normal lax functor from a 1-category source into the delooping of
/// `ℤ/n`, whose composition cells are the coboundary of a random
/// `b: arrows -> ℤ/n` vanishing on identities.
pub fn lax_into_cyclic<R: Rng>(rng: &mut R, src: &Fin2Cat, target: &Fin2Groupoid, n: usize) -> Lax<Fin2Groupoid> {
    let b: Vec<usize> = (0..src.arrow_count())
        .map(|a| if (0..src.object_count()).any(|x| src.id_arrow(&x) == a) { 0 } else { rng.gen_range(0..n) })
        .collect();
    let one = target.cat().arrow_index("1").expect("delooping arrow");
    let mut comp_cells = BTreeMap::new();
    for g in 0..src.arrow_count() {
        for f in 0..src.arrow_count() {
            if let Some(gf) = src.arrow_comp(g, f) {
                comp_cells.insert((g, f), (b[g] + b[f] + n - b[gf]) % n);
            }
        }
    }
    LaxFunctor {
        on_objects: alloc::vec![0; src.object_count()],
        on_arrows: alloc::vec![one; src.arrow_count()],
        on_cells: alloc::vec![0; src.cell_count()],
        comp_cells,
    }
}

/// A random `n`-simplex grown one vertex at a time through the filtration:
/// `arrow_from(rng, m, u)` picks the new edge `u_{m,m-1}` out of `u = u_{m-1}`
/// and `cell_into(rng, b)` picks each free 2-cell `u_{m,k+1,k}` with target
/// `b`. Every other triangle is forced. Needs invertible 2-cells.
pub fn simplex<T: TwoCategory, R: Rng>(
    rng: &mut R,
    c: &T,
    n: usize,
    first: T::Obj,
    mut arrow_from: impl FnMut(&mut R, usize, &T::Obj) -> T::Arrow,
    mut cell_into: impl FnMut(&mut R, &T::Arrow) -> T::Cell,
) -> Label<T> {
    let mut s: Label<T> = SimplexLabel::empty(0);
    s.set_vertex(0, Some(first));
    for m in 1..=n {
        let mut grown: Label<T> = SimplexLabel::empty(m);
        for i in 0..m {
            grown.set_vertex(i, s.vertex(i).cloned());
        }
        for (j, i) in s.edge_indices() {
            grown.set_edge(j, i, s.edge(j, i).cloned());
        }
        for (k, j, i) in s.triangle_indices() {
            grown.set_triangle(k, j, i, s.triangle(k, j, i).cloned());
        }
        let f = arrow_from(rng, m, s.vertex(m - 1).expect("vertex"));
        grown.set_vertex(m, Some(c.arrow_tgt(&f)));
        let mut stage = strip_to_filtration(&grown, m);
        stage = reconstruct_filtration(c, &stage, &c.id_cell(&f)).expect("degenerate stage");
        for k in (0..m - 1).rev() {
            let l = stage.label();
            let b = c.compose(l.edge(m, k + 1).expect("edge"), l.edge(k + 1, k).expect("edge")).expect("composable");
            let alpha = cell_into(rng, &b);
            stage = reconstruct_filtration(c, &stage, &alpha).expect("2-groupoid");
        }
        s = stage.into_label();
    }
    s
}

/// A random `n`-simplex in a finite 2-groupoid.
pub fn table_simplex<R: Rng>(rng: &mut R, c: &Fin2Groupoid, n: usize) -> Label<Fin2Groupoid> {
    let cat = c.cat();
    let x = rng.gen_range(0..cat.object_count());
    simplex(
        rng,
        c,
        n,
        x,
        |rng, _, &u| {
            let out: Vec<usize> = (0..cat.arrow_count()).filter(|&a| cat.arrow_ends(a).0 == u).collect();
            out[rng.gen_range(0..out.len())]
        },
        |rng, &b| {
            let into: Vec<usize> = (0..cat.cell_count()).filter(|&t| cat.cell_ends(t).1 == b).collect();
            into[rng.gen_range(0..into.len())]
        },
    )
}

/// A random `n`-simplex in `GL(V)`, vertex `i` over point `p{i}`, with fibers
/// of dimension at most `max_dim`. Returns the bundle the vertices live in.
pub fn gl_simplex<R: Rng>(rng: &mut R, n: usize, max_dim: usize) -> (GeneralLinear, Label<GeneralLinear>) {
    // The handle's composition does not look at the bundle, so a placeholder
    // serves while growing the simplex.
    let scratch = GeneralLinear::new(GradedBundle::new(Vec::new(), Vec::new()).expect("empty bundle"));
    let start = any_fiber(rng, max_dim.min(2));
    let s = simplex(
        rng,
        &scratch,
        n,
        GLObject::new(0, start),
        |rng, m, u| {
            let map = quasi_iso_at(rng, &u.fiber, max_dim, false);
            GLArrow::from_map(m - 1, m, map).expect("quasi-isomorphism")
        },
        |rng, b| invert_2cell(&gl_cell_from(rng, b)),
    );
    let dims = (0..=n)
        .map(|i| {
            let f = &s.vertex(i).expect("vertex").fiber;
            (f.dim1(), f.dim0())
        })
        .collect();
    let points = (0..=n).map(|i| alloc::format!("p{i}")).collect();
    (GeneralLinear::new(GradedBundle::new(points, dims).expect("one fiber per point")), s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::is_quasi_iso;
    use crate::group::FiniteGroup;
    use crate::groupoid::{cyclic_translation_groupoid, pair_groupoid_n};
    use crate::nerve::validate_simplex;
    use crate::ruth::{is_quasi_iso_morphism, verify_ruth};
    use crate::twocat::delooping;

    #[test]
    fn chain_maps_and_quasi_isos() {
        let mut r = rng(1);
        for _ in 0..30 {
            any_chain_map(&mut r, 3);
            assert!(is_quasi_iso(&quasi_iso(&mut r, 3)));
        }
    }

    #[test]
    fn random_representations_are_valid() {
        let mut r = rng(2);
        for g in [pair_groupoid_n(3), cyclic_translation_groupoid(3)] {
            for _ in 0..5 {
                let x = ruth(&mut r, &g, 2, 2);
                assert!(verify_ruth(&x).is_empty(), "{:?}", verify_ruth(&x));
                assert!(is_quasi_iso_morphism(&quasi_iso_morphism(&mut r, &x)));
            }
        }
    }

    #[test]
    fn random_simplices_are_valid() {
        let mut r = rng(3);
        let z4 = delooping(&FiniteGroup::cyclic(4)).unwrap();
        for n in 0..=4 {
            let s = table_simplex(&mut r, &z4, n);
            assert!(validate_simplex(&z4, &s).is_empty());
            let (gl, s) = gl_simplex(&mut r, n, 3);
            assert!(validate_simplex(&gl, &s).is_empty(), "{:?}", validate_simplex(&gl, &s));
        }
    }
}
