//! 2-term representations up to homotopy of a finite groupoid, their
//! morphisms, and the dictionary with pseudo-functors into `GL(V)`.
//!
//! A representation is `(∂, ρ₁, ρ₀, γ)`; the curvature `γ^{h,g}` is the
//! 2-cell `ρ^{hg} => ρʰρᵍ`, so `γ∂ = ρ₁^{hg} − ρ₁ʰρ₁ᵍ` and
//! `∂γ = ρ₀^{hg} − ρ₀ʰρ₀ᵍ`. A morphism `(θ, μ)` satisfies
//! `θ₁ʸρ₁ᵍ − ρ′₁ᵍθ₁ˣ = μᵍ∂ˣ` and `θ₀ʸρ₀ᵍ − ρ′₀ᵍθ₀ˣ = ∂′ʸμᵍ`, which makes
//! `μᵍ` a 2-cell `θʸ∘ρᵍ => ρ′ᵍ∘θˣ`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::chain::{homology, is_quasi_iso, quasi_iso_defect, ChainMap2, Fiber2, HomologyDims};
use crate::error::{Error, Result};
use crate::gl::{
    compose_arrows, vcompose, whisker_left, whisker_right, GL2Cell, GLArrow, GLObject, GeneralLinear, GradedBundle,
};
use crate::groupoid::{pair_groupoid, FinGroupoid};
use crate::handle::TwoCategory;
use crate::lax::{verify_lax_transformation, Lax, LaxFunctor, LaxTrans, LaxTransformation};
use crate::linalg::{Rat, RatMatrix};
use crate::report::{Report, Violation};
use crate::twocat::Fin2Cat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ruth2 {
    pub g: FinGroupoid,
    pub v: GradedBundle,
    pub d: Vec<RatMatrix>,
    pub rho1: Vec<RatMatrix>,
    pub rho0: Vec<RatMatrix>,
    /// `γ^{h,g}` for every composable pair `(h, g)`.
    pub gamma: BTreeMap<(usize, usize), RatMatrix>,
}

fn pair_at(g: &FinGroupoid, h: usize, k: usize) -> String {
    format!("pair ({},{})", g.arrow_name(h), g.arrow_name(k))
}

fn triple_at(g: &FinGroupoid, h: usize, k: usize, f: usize) -> String {
    format!("triple ({},{},{})", g.arrow_name(h), g.arrow_name(k), g.arrow_name(f))
}

fn arrow_at(g: &FinGroupoid, a: usize) -> String {
    format!("arrow {}", g.arrow_name(a))
}

impl Ruth2 {
    pub fn fiber(&self, x: usize) -> Fiber2 {
        Fiber2::from_differential(self.d[x].clone())
    }

    fn dims(&self, x: usize) -> (usize, usize) {
        self.v.dims(x)
    }

    /// A genuine representation on `E` placed in degree 0, with `V₁ = 0` and
    /// `γ = 0`.
    pub fn from_representation(g: &FinGroupoid, dims: &[usize], rho: &[RatMatrix]) -> Result<Ruth2> {
        let v = GradedBundle::new(g.objects().to_vec(), dims.iter().map(|&e| (0, e)).collect())?;
        let rho1 = (0..g.arrow_count()).map(|_| RatMatrix::zeros(0, 0)).collect();
        let d = dims.iter().map(|&e| RatMatrix::zeros(e, 0)).collect();
        let gamma =
            g.composable_pairs().into_iter().map(|(h, k)| ((h, k), RatMatrix::zeros(0, dims[g.src(k)]))).collect();
        Ok(Ruth2 { g: g.clone(), v, d, rho1, rho0: rho.to_vec(), gamma })
    }

    fn shape_report(&self) -> Report {
        let mut out = Report::new();
        let g = &self.g;
        let mut bad = |what: String| out.push(Violation::new("shape", what));
        if self.v.points() != g.objects() {
            bad("bundle points differ from the groupoid objects".into());
            return out;
        }
        if self.d.len() != g.object_count() || self.rho1.len() != g.arrow_count() || self.rho0.len() != g.arrow_count()
        {
            bad("table lengths differ from the groupoid".into());
            return out;
        }
        for x in 0..g.object_count() {
            let (d1, d0) = self.dims(x);
            if self.d[x].shape() != (d0, d1) {
                bad(format!("differential at {}", g.object_name(x)));
            }
        }
        for a in 0..g.arrow_count() {
            let ((x1, x0), (y1, y0)) = (self.dims(g.src(a)), self.dims(g.tgt(a)));
            if self.rho1[a].shape() != (y1, x1) || self.rho0[a].shape() != (y0, x0) {
                bad(format!("rho at {}", g.arrow_name(a)));
            }
        }
        let pairs = g.composable_pairs();
        for &(h, k) in &pairs {
            let (x0, z1) = (self.dims(g.src(k)).1, self.dims(g.tgt(h)).0);
            match self.gamma.get(&(h, k)) {
                Some(m) if m.shape() == (z1, x0) => {}
                Some(_) => bad(format!("gamma at {}", pair_at(g, h, k))),
                None => bad(format!("gamma missing at {}", pair_at(g, h, k))),
            }
        }
        if self.gamma.len() != pairs.len() {
            bad("gamma has entries at non-composable pairs".into());
        }
        out
    }
}

/// Every defining equation over all points, arrows, pairs and triples.
pub fn verify_ruth(r: &Ruth2) -> Report {
    let mut out = r.shape_report();
    if !out.is_empty() {
        return out;
    }
    let g = &r.g;
    for a in 0..g.arrow_count() {
        let (x, y) = (g.src(a), g.tgt(a));
        if &r.d[y] * &r.rho1[a] != &r.rho0[a] * &r.d[x] {
            out.push(Violation::new("chain condition", arrow_at(g, a)));
            continue;
        }
        if g.is_unit(a) {
            let (d1, d0) = r.dims(x);
            if r.rho1[a] != RatMatrix::identity(d1) || r.rho0[a] != RatMatrix::identity(d0) {
                out.push(Violation::new("unitality", arrow_at(g, a)));
            }
        }
        let m = ChainMap2::new(r.fiber(x), r.fiber(y), r.rho1[a].clone(), r.rho0[a].clone());
        if m.map(|m| quasi_iso_defect(&m).is_some()).unwrap_or(true) {
            out.push(Violation::new("quasi-isomorphism", arrow_at(g, a)));
        }
    }
    for (h, k) in g.composable_pairs() {
        let hk = g.compose(h, k);
        let (x, z) = (g.src(k), g.tgt(h));
        let gm = &r.gamma[&(h, k)];
        if (g.is_unit(h) || g.is_unit(k)) && !gm.is_zero() {
            out.push(Violation::new("normalization", pair_at(g, h, k)));
        }
        if gm * &r.d[x] != &r.rho1[hk] - &(&r.rho1[h] * &r.rho1[k]) {
            out.push(Violation::new("homotopy equation (degree 1)", pair_at(g, h, k)));
        }
        if &r.d[z] * gm != &r.rho0[hk] - &(&r.rho0[h] * &r.rho0[k]) {
            out.push(Violation::new("homotopy equation (degree 0)", pair_at(g, h, k)));
        }
    }
    for (h, k, f) in g.composable_triples() {
        let (hk, kf) = (g.compose(h, k), g.compose(k, f));
        let lhs = &(&(&(&r.rho1[h] * &r.gamma[&(k, f)]) - &r.gamma[&(hk, f)]) + &r.gamma[&(h, kf)])
            - &(&r.gamma[&(h, k)] * &r.rho0[f]);
        if !lhs.is_zero() {
            out.push(Violation::new("cocycle equation", triple_at(g, h, k, f)));
        }
    }
    out
}

pub fn pointwise_homology(r: &Ruth2) -> Vec<HomologyDims> {
    (0..r.g.object_count()).map(|x| homology(&r.fiber(x))).collect()
}

pub fn is_acyclic(r: &Ruth2) -> bool {
    pointwise_homology(r).iter().all(HomologyDims::is_zero)
}

/// Linear maps on arrows preserving identities; composition is not required.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoRep {
    pub g: FinGroupoid,
    pub dims: Vec<usize>,
    pub rho: Vec<RatMatrix>,
}

impl PseudoRep {
    pub fn verify(&self) -> Report {
        let g = &self.g;
        let mut out = Report::new();
        if self.dims.len() != g.object_count() || self.rho.len() != g.arrow_count() {
            out.push(Violation::new("shape", "table lengths differ from the groupoid"));
            return out;
        }
        for a in 0..g.arrow_count() {
            if self.rho[a].shape() != (self.dims[g.tgt(a)], self.dims[g.src(a)]) {
                out.push(Violation::new("shape", arrow_at(g, a)));
            } else if g.is_unit(a) && self.rho[a] != RatMatrix::identity(self.dims[g.src(a)]) {
                out.push(Violation::new("unitality", arrow_at(g, a)));
            }
        }
        out
    }

    /// Whether `ρ` is an honest representation.
    pub fn is_functorial(&self) -> bool {
        self.g
            .composable_pairs()
            .into_iter()
            .all(|(h, k)| self.rho[self.g.compose(h, k)] == &self.rho[h] * &self.rho[k])
    }
}

/// `V₁ = V₀ = E`, `∂ = id`, `ρ₁ = ρ₀ = ρ` and `γ^{h,g} = ρ^{hg} − ρʰρᵍ`.
/// Always a valid acyclic representation up to homotopy.
pub fn double_pseudo_rep(p: &PseudoRep) -> Result<Ruth2> {
    if let Some(v) = p.verify().first() {
        return Err(Error::InvalidInput(format!("{v}")));
    }
    let g = &p.g;
    let v = GradedBundle::new(g.objects().to_vec(), p.dims.iter().map(|&e| (e, e)).collect())?;
    let gamma = g
        .composable_pairs()
        .into_iter()
        .map(|(h, k)| ((h, k), &p.rho[g.compose(h, k)] - &(&p.rho[h] * &p.rho[k])))
        .collect();
    Ok(Ruth2 {
        g: g.clone(),
        v,
        d: p.dims.iter().map(|&e| RatMatrix::identity(e)).collect(),
        rho1: p.rho.clone(),
        rho0: p.rho.clone(),
        gamma,
    })
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).fold(Rat::zero(), |s, t| s + t)
}

/// Lines `ℓᵢ = span(vᵢ)` over the pair groupoid on `l0, l1, ...`; the arrow
/// `ℓ -> ℓ′` acts by orthogonal projection, which in the bases `v, v′` is the
/// scalar `(v·v′)/(v′·v′)`.
pub fn lines_projection_pseudo_rep(lines: &[Vec<Rat>]) -> Result<PseudoRep> {
    let m = lines.first().map(Vec::len).unwrap_or(0);
    if lines.iter().any(|v| v.len() != m) {
        return Err(Error::Dimension("lines must live in one ambient space".into()));
    }
    let norms: Vec<Rat> = lines.iter().map(|v| dot(v, v)).collect();
    if let Some(i) = norms.iter().position(Zero::is_zero) {
        return Err(Error::InvalidInput(format!("line {i} is spanned by the zero vector")));
    }
    let names: Vec<String> = (0..lines.len()).map(|i| format!("l{i}")).collect();
    let g = pair_groupoid(&names);
    let mut rho = Vec::new();
    for a in 0..g.arrow_count() {
        let (x, y) = (g.src(a), g.tgt(a));
        let p = dot(&lines[x], &lines[y]);
        if p.is_zero() {
            return Err(Error::OrthogonalPair(x.min(y), x.max(y)));
        }
        rho.push(RatMatrix::scalar(p / &norms[y]));
    }
    Ok(PseudoRep { g, dims: alloc::vec![1; lines.len()], rho })
}

/// Blockwise direct sum of two representations over the same groupoid.
pub fn direct_sum(a: &Ruth2, b: &Ruth2) -> Result<Ruth2> {
    if a.g != b.g {
        return Err(Error::InvalidInput("direct sum needs a common groupoid".into()));
    }
    let fibers = (0..a.g.object_count())
        .map(|x| {
            let ((a1, a0), (b1, b0)) = (a.dims(x), b.dims(x));
            (a1 + b1, a0 + b0)
        })
        .collect();
    let bd = |p: &[RatMatrix], q: &[RatMatrix]| p.iter().zip(q).map(|(p, q)| RatMatrix::block_diag(p, q)).collect();
    Ok(Ruth2 {
        g: a.g.clone(),
        v: GradedBundle::new(a.g.objects().to_vec(), fibers)?,
        d: bd(&a.d, &b.d),
        rho1: bd(&a.rho1, &b.rho1),
        rho0: bd(&a.rho0, &b.rho0),
        gamma: a.gamma.iter().map(|(k, m)| (*k, RatMatrix::block_diag(m, &b.gamma[k]))).collect(),
    })
}

/// `θ: V -> V′` per point together with `μᵍ: V₀ˣ -> V′₁ʸ` per arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuthMorphism {
    pub src: Ruth2,
    pub dst: Ruth2,
    pub theta1: Vec<RatMatrix>,
    pub theta0: Vec<RatMatrix>,
    pub mu: Vec<RatMatrix>,
}

impl RuthMorphism {
    pub fn identity(r: &Ruth2) -> Self {
        let n = r.g.object_count();
        RuthMorphism {
            src: r.clone(),
            dst: r.clone(),
            theta1: (0..n).map(|x| RatMatrix::identity(r.dims(x).0)).collect(),
            theta0: (0..n).map(|x| RatMatrix::identity(r.dims(x).1)).collect(),
            mu: (0..r.g.arrow_count()).map(|a| RatMatrix::zeros(r.dims(r.g.tgt(a)).0, r.dims(r.g.src(a)).1)).collect(),
        }
    }

    pub fn zero(src: &Ruth2, dst: &Ruth2) -> Self {
        let n = src.g.object_count();
        let g = &src.g;
        RuthMorphism {
            src: src.clone(),
            dst: dst.clone(),
            theta1: (0..n).map(|x| RatMatrix::zeros(dst.dims(x).0, src.dims(x).0)).collect(),
            theta0: (0..n).map(|x| RatMatrix::zeros(dst.dims(x).1, src.dims(x).1)).collect(),
            mu: (0..g.arrow_count()).map(|a| RatMatrix::zeros(dst.dims(g.tgt(a)).0, src.dims(g.src(a)).1)).collect(),
        }
    }

    /// `self ∘ first`: `θ = θ′θ` and `μᵍ = θ′₁ʸμᵍ + μ′ᵍθ₀ˣ`.
    pub fn after(&self, first: &RuthMorphism) -> Result<RuthMorphism> {
        if first.dst != self.src {
            return Err(Error::EndpointMismatch("morphisms are not composable".into()));
        }
        let g = &first.src.g;
        let mul = |a: &[RatMatrix], b: &[RatMatrix]| a.iter().zip(b).map(|(a, b)| a * b).collect();
        let mu = (0..g.arrow_count())
            .map(|a| &(&self.theta1[g.tgt(a)] * &first.mu[a]) + &(&self.mu[a] * &first.theta0[g.src(a)]))
            .collect();
        Ok(RuthMorphism {
            src: first.src.clone(),
            dst: self.dst.clone(),
            theta1: mul(&self.theta1, &first.theta1),
            theta0: mul(&self.theta0, &first.theta0),
            mu,
        })
    }

    fn chain_map(&self, x: usize) -> Result<ChainMap2> {
        ChainMap2::new(self.src.fiber(x), self.dst.fiber(x), self.theta1[x].clone(), self.theta0[x].clone())
    }
}

pub fn verify_morphism(m: &RuthMorphism) -> Report {
    let mut out = Report::new();
    let (r, s) = (&m.src, &m.dst);
    if r.g != s.g {
        out.push(Violation::new("shape", "morphism between different groupoids"));
        return out;
    }
    let g = &r.g;
    if m.theta1.len() != g.object_count() || m.theta0.len() != g.object_count() || m.mu.len() != g.arrow_count() {
        out.push(Violation::new("shape", "table lengths differ from the groupoid"));
        return out;
    }
    for x in 0..g.object_count() {
        let ((r1, r0), (s1, s0)) = (r.dims(x), s.dims(x));
        if m.theta1[x].shape() != (s1, r1) || m.theta0[x].shape() != (s0, r0) {
            out.push(Violation::new("shape", format!("theta at {}", g.object_name(x))));
        }
    }
    for a in 0..g.arrow_count() {
        if m.mu[a].shape() != (s.dims(g.tgt(a)).0, r.dims(g.src(a)).1) {
            out.push(Violation::new("shape", format!("mu at {}", g.arrow_name(a))));
        }
    }
    out.extend(r.shape_report());
    out.extend(s.shape_report());
    if !out.is_empty() {
        return out;
    }
    for x in 0..g.object_count() {
        if m.chain_map(x).is_err() {
            out.push(Violation::new("chain map", format!("point {}", g.object_name(x))));
        }
    }
    for a in 0..g.arrow_count() {
        let (x, y) = (g.src(a), g.tgt(a));
        let one = &(&m.theta1[y] * &r.rho1[a]) - &(&s.rho1[a] * &m.theta1[x]);
        if one != &m.mu[a] * &r.d[x] {
            out.push(Violation::new("morphism equation (degree 1)", arrow_at(g, a)));
        }
        let zero = &(&m.theta0[y] * &r.rho0[a]) - &(&s.rho0[a] * &m.theta0[x]);
        if zero != &s.d[y] * &m.mu[a] {
            out.push(Violation::new("morphism equation (degree 0)", arrow_at(g, a)));
        }
    }
    for (h, k) in g.composable_pairs() {
        let (x, z) = (g.src(k), g.tgt(h));
        let hk = g.compose(h, k);
        let sum = &(&(&(&m.theta1[z] * &r.gamma[&(h, k)]) + &(&m.mu[h] * &r.rho0[k])) + &(&s.rho1[h] * &m.mu[k]))
            - &(&m.mu[hk] + &(&s.gamma[&(h, k)] * &m.theta0[x]));
        if !sum.is_zero() {
            out.push(Violation::new("morphism pair equation", pair_at(g, h, k)));
        }
    }
    out
}

/// A valid morphism whose components induce isomorphisms on pointwise homology.
pub fn is_quasi_iso_morphism(m: &RuthMorphism) -> bool {
    verify_morphism(m).is_empty()
        && (0..m.src.g.object_count()).all(|x| m.chain_map(x).map(|c| is_quasi_iso(&c)).unwrap_or(false))
}

/// Moves `r` along `θ = id` and the given `μ` (zero on identities):
/// `ρ′₁ = ρ₁ − μ∂`, `ρ′₀ = ρ₀ − ∂μ` and
/// `γ′^{h,g} = γ^{h,g} + μʰρ₀ᵍ + ρ′₁ʰμᵍ − μ^{hg}`. Returns the new
/// representation and the isomorphism onto it.
pub fn gauge(r: &Ruth2, mu: &[RatMatrix]) -> Result<(Ruth2, RuthMorphism)> {
    let g = &r.g;
    if mu.len() != g.arrow_count() {
        return Err(Error::Dimension("one mu per arrow".into()));
    }
    for a in 0..g.arrow_count() {
        if mu[a].shape() != (r.dims(g.tgt(a)).0, r.dims(g.src(a)).1) {
            return Err(Error::Dimension(format!("mu at {}", g.arrow_name(a))));
        }
        if g.is_unit(a) && !mu[a].is_zero() {
            return Err(Error::InvalidInput(format!("mu must vanish on the identity {}", g.arrow_name(a))));
        }
    }
    let mut s = r.clone();
    for a in 0..g.arrow_count() {
        s.rho1[a] = &r.rho1[a] - &(&mu[a] * &r.d[g.src(a)]);
        s.rho0[a] = &r.rho0[a] - &(&r.d[g.tgt(a)] * &mu[a]);
    }
    for (h, k) in g.composable_pairs() {
        let extra = &(&(&mu[h] * &r.rho0[k]) + &(&s.rho1[h] * &mu[k])) - &mu[g.compose(h, k)];
        s.gamma.insert((h, k), &r.gamma[&(h, k)] + &extra);
    }
    let mut m = RuthMorphism::identity(r);
    m.dst = s.clone();
    m.mu = mu.to_vec();
    Ok((s, m))
}

/// Transports `r` along invertible `(a₁ˣ, a₀ˣ)` per point.
pub fn change_basis(r: &Ruth2, a1: &[RatMatrix], a0: &[RatMatrix]) -> Result<(Ruth2, RuthMorphism)> {
    let g = &r.g;
    let n = g.object_count();
    if a1.len() != n || a0.len() != n {
        return Err(Error::Dimension("one basis change per point".into()));
    }
    let mut i1 = Vec::new();
    let mut i0 = Vec::new();
    for x in 0..n {
        if a1[x].shape() != (r.dims(x).0, r.dims(x).0) || a0[x].shape() != (r.dims(x).1, r.dims(x).1) {
            return Err(Error::Dimension(format!("basis change at {}", g.object_name(x))));
        }
        i1.push(a1[x].inverse()?);
        i0.push(a0[x].inverse()?);
    }
    let mut s = r.clone();
    for x in 0..n {
        s.d[x] = &(&a0[x] * &r.d[x]) * &i1[x];
    }
    for a in 0..g.arrow_count() {
        let (x, y) = (g.src(a), g.tgt(a));
        s.rho1[a] = &(&a1[y] * &r.rho1[a]) * &i1[x];
        s.rho0[a] = &(&a0[y] * &r.rho0[a]) * &i0[x];
    }
    for (h, k) in g.composable_pairs() {
        let (x, z) = (g.src(k), g.tgt(h));
        s.gamma.insert((h, k), &(&a1[z] * &r.gamma[&(h, k)]) * &i0[x]);
    }
    let m = RuthMorphism {
        src: r.clone(),
        dst: s.clone(),
        theta1: a1.to_vec(),
        theta0: a0.to_vec(),
        mu: RuthMorphism::identity(r).mu,
    };
    Ok((s, m))
}

/// `φ₀`, `φ₁` and `φ₁,₁(h, g): φ(hg) => φ(h)∘φ(g)` over a finite groupoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoFunctorGL {
    pub g: FinGroupoid,
    pub bundle: GradedBundle,
    pub phi0: Vec<GLObject>,
    pub phi1: Vec<GLArrow>,
    pub phi11: BTreeMap<(usize, usize), GL2Cell>,
}

impl PseudoFunctorGL {
    pub fn general_linear(&self) -> GeneralLinear {
        GeneralLinear::new(self.bundle.clone())
    }

    /// The same data as a normal lax functor out of the groupoid seen as a
    /// 2-category with identity 2-cells.
    pub fn to_lax(&self) -> (Fin2Cat, Lax<GeneralLinear>) {
        let src = Fin2Cat::from_groupoid(&self.g);
        let lax = LaxFunctor {
            on_objects: self.phi0.clone(),
            on_arrows: self.phi1.clone(),
            on_cells: self.phi1.iter().map(GL2Cell::identity).collect(),
            comp_cells: self.phi11.clone(),
        };
        (src, lax)
    }
}

/// Base points, endpoints, normality and the coherence equation
/// `(φh ∘ φ₁,₁(g,f)) • φ₁,₁(h,gf) = (φ₁,₁(h,g) ∘ φf) • φ₁,₁(hg,f)`.
pub fn verify_pseudofunctor(p: &PseudoFunctorGL) -> Report {
    let g = &p.g;
    let mut out = Report::new();
    if p.bundle.points() != g.objects() || p.phi0.len() != g.object_count() || p.phi1.len() != g.arrow_count() {
        out.push(Violation::new("shape", "table lengths differ from the groupoid"));
        return out;
    }
    for x in 0..g.object_count() {
        let o = &p.phi0[x];
        if o.point != x || (o.fiber.dim1(), o.fiber.dim0()) != p.bundle.dims(x) {
            out.push(Violation::new("base points", format!("point {}", g.object_name(x))));
        }
    }
    for a in 0..g.arrow_count() {
        let f = &p.phi1[a];
        if f.src() != p.phi0[g.src(a)] || f.dst() != p.phi0[g.tgt(a)] {
            out.push(Violation::new("base points", arrow_at(g, a)));
        } else if g.is_unit(a) && *f != GLArrow::identity(&p.phi0[g.src(a)]) {
            out.push(Violation::new("normality", arrow_at(g, a)));
        }
    }
    let pairs = g.composable_pairs();
    if p.phi11.len() != pairs.len() {
        out.push(Violation::new("shape", "composition cells are not indexed by composable pairs"));
    }
    if !out.is_empty() {
        return out;
    }
    for &(h, k) in &pairs {
        let Some(c) = p.phi11.get(&(h, k)) else {
            out.push(Violation::new("shape", format!("composition cell missing at {}", pair_at(g, h, k))));
            continue;
        };
        let want_to = compose_arrows(&p.phi1[h], &p.phi1[k]);
        if *c.from() != p.phi1[g.compose(h, k)] || want_to.as_ref().ok() != Some(c.to()) {
            out.push(Violation::new("composition cell endpoints", pair_at(g, h, k)));
        } else if (g.is_unit(h) || g.is_unit(k)) && !c.is_identity() {
            out.push(Violation::new("normality", pair_at(g, h, k)));
        }
    }
    if !out.is_empty() {
        return out;
    }
    for (h, k, f) in g.composable_triples() {
        let c = |a, b| &p.phi11[&(a, b)];
        let lhs = whisker_left(&p.phi1[h], c(k, f)).and_then(|x| vcompose(&x, c(h, g.compose(k, f))));
        let rhs = whisker_right(c(h, k), &p.phi1[f]).and_then(|x| vcompose(&x, c(g.compose(h, k), f)));
        if lhs.is_err() || lhs.ok() != rhs.ok() {
            out.push(Violation::new("coherence axiom", triple_at(g, h, k, f)));
        }
    }
    out
}

/// Builds the structure cells without checking the cocycle equation; the
/// differentials, chain conditions, quasi-isomorphisms and homotopy equations
/// must hold since they are what makes the cells well typed.
pub fn ruth_to_pseudofunctor_unchecked(r: &Ruth2) -> Result<PseudoFunctorGL> {
    if let Some(v) = r.shape_report().first() {
        return Err(Error::InvalidInput(format!("{v}")));
    }
    let g = &r.g;
    let phi0: Vec<GLObject> = (0..g.object_count()).map(|x| GLObject::new(x, r.fiber(x))).collect();
    let mut phi1 = Vec::new();
    for a in 0..g.arrow_count() {
        phi1.push(GLArrow::new(&phi0[g.src(a)], &phi0[g.tgt(a)], r.rho1[a].clone(), r.rho0[a].clone())?);
    }
    let mut phi11 = BTreeMap::new();
    for (h, k) in g.composable_pairs() {
        let to = compose_arrows(&phi1[h], &phi1[k])?;
        phi11.insert((h, k), GL2Cell::new(phi1[g.compose(h, k)].clone(), to, r.gamma[&(h, k)].clone())?);
    }
    Ok(PseudoFunctorGL { g: g.clone(), bundle: r.v.clone(), phi0, phi1, phi11 })
}

/// `φ₀(x) = ∂ˣ`, `φ₁(g) = (ρ₁ᵍ, ρ₀ᵍ)`, `φ₁,₁(h, g) = γ^{h,g}`.
pub fn ruth_to_pseudofunctor(r: &Ruth2) -> Result<PseudoFunctorGL> {
    if let Some(v) = verify_ruth(r).first() {
        return Err(Error::InvalidInput(format!("{v}")));
    }
    ruth_to_pseudofunctor_unchecked(r)
}

pub fn pseudofunctor_to_ruth(p: &PseudoFunctorGL) -> Result<Ruth2> {
    if let Some(v) = verify_pseudofunctor(p).first() {
        return Err(Error::InvalidInput(format!("{v}")));
    }
    Ok(Ruth2 {
        g: p.g.clone(),
        v: p.bundle.clone(),
        d: p.phi0.iter().map(|o| o.fiber.d().clone()).collect(),
        rho1: p.phi1.iter().map(|f| f.a1().clone()).collect(),
        rho0: p.phi1.iter().map(|f| f.a0().clone()).collect(),
        gamma: p.phi11.iter().map(|(k, c)| (*k, c.r().clone())).collect(),
    })
}

/// `H_x = θˣ` and `H_g = μᵍ: θʸ∘ρᵍ => ρ′ᵍ∘θˣ`.
pub fn morphism_to_lax_equivalence(m: &RuthMorphism) -> Result<LaxTrans<GeneralLinear>> {
    if let Some(v) = verify_morphism(m).first() {
        return Err(Error::InvalidInput(format!("{v}")));
    }
    let (p, q) = (ruth_to_pseudofunctor(&m.src)?, ruth_to_pseudofunctor(&m.dst)?);
    let g = &m.src.g;
    let mut components = Vec::new();
    for x in 0..g.object_count() {
        components.push(GLArrow::new(&p.phi0[x], &q.phi0[x], m.theta1[x].clone(), m.theta0[x].clone())?);
    }
    let mut cells = Vec::new();
    for a in 0..g.arrow_count() {
        let (x, y) = (g.src(a), g.tgt(a));
        let from = compose_arrows(&components[y], &p.phi1[a])?;
        let to = compose_arrows(&q.phi1[a], &components[x])?;
        cells.push(GL2Cell::new(from, to, m.mu[a].clone())?);
    }
    Ok(LaxTransformation { components, cells })
}

/// Reads `(θ, μ)` back from a lax equivalence between the pseudo-functors
/// of `src` and `dst`.
pub fn lax_equivalence_to_morphism(src: &Ruth2, dst: &Ruth2, h: &LaxTrans<GeneralLinear>) -> Result<RuthMorphism> {
    let (p, q) = (ruth_to_pseudofunctor(src)?, ruth_to_pseudofunctor(dst)?);
    if p.g != q.g {
        return Err(Error::InvalidInput("representations over different groupoids".into()));
    }
    let (c, phi) = p.to_lax();
    let (_, psi) = q.to_lax();
    let gl = p.general_linear();
    if let Some(v) = verify_lax_transformation(&c, &gl, &phi, &psi, h).first() {
        return Err(Error::InvalidInput(format!("{v}")));
    }
    Ok(RuthMorphism {
        src: src.clone(),
        dst: dst.clone(),
        theta1: h.components.iter().map(|f| f.a1().clone()).collect(),
        theta0: h.components.iter().map(|f| f.a0().clone()).collect(),
        mu: h.cells.iter().map(|c| c.r().clone()).collect(),
    })
}

/// Whether every component of a lax transformation in `GL(V)` is invertible
/// up to homotopy. Arrows of `GL(V)` always are; this checks the transformation
/// axioms and that every component is a quasi-isomorphism.
pub fn is_lax_equivalence(
    c: &Fin2Cat,
    gl: &GeneralLinear,
    phi: &Lax<GeneralLinear>,
    psi: &Lax<GeneralLinear>,
    h: &LaxTrans<GeneralLinear>,
) -> bool {
    verify_lax_transformation(c, gl, phi, psi, h).is_empty()
        && h.components.iter().all(|f| is_quasi_iso(f.map()))
        && h.cells.iter().all(|x| gl.invert_cell(x).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::{cyclic_translation_groupoid, pair_groupoid_n};
    use crate::lax::verify_lax_functor;
    use crate::linalg::{rat, ratio};
    use alloc::vec;

    fn lines() -> Vec<Vec<Rat>> {
        vec![vec![rat(1), rat(0)], vec![rat(1), rat(1)], vec![rat(2), rat(1)]]
    }

    #[test]
    fn projection_between_two_lines() {
        let p = lines_projection_pseudo_rep(&lines()[..2]).unwrap();
        // Arrow l1<-l0 has index 1*2+0; (1,0)·(1,1) / |(1,1)|² = 1/2.
        assert_eq!(p.rho[2], RatMatrix::scalar(ratio(1, 2)));
        assert_eq!(p.rho[1], RatMatrix::scalar(rat(1)));
        // Around the loop l0 -> l1 -> l0 the composite is 1/2, not 1.
        assert_eq!(&p.rho[1] * &p.rho[2], RatMatrix::scalar(ratio(1, 2)));
        assert!(!p.is_functorial());
    }

    #[test]
    fn orthogonal_lines_are_rejected() {
        let ls = vec![vec![rat(1), rat(0)], vec![rat(1), rat(1)], vec![rat(0), rat(3)]];
        assert_eq!(lines_projection_pseudo_rep(&ls), Err(Error::OrthogonalPair(0, 2)));
    }

    #[test]
    fn doubling_the_lines_is_an_acyclic_representation() {
        let r = double_pseudo_rep(&lines_projection_pseudo_rep(&lines()).unwrap()).unwrap();
        assert_eq!(verify_ruth(&r), Report::new());
        assert!(is_acyclic(&r));
        let p = ruth_to_pseudofunctor(&r).unwrap();
        assert!(verify_pseudofunctor(&p).is_empty());
        assert_eq!(pseudofunctor_to_ruth(&p).unwrap(), r);
        let (c, lax) = p.to_lax();
        assert!(verify_lax_functor(&c, &p.general_linear(), &lax).is_empty());
    }

    #[test]
    fn a_representation_gives_a_strict_functor() {
        let g = cyclic_translation_groupoid(3);
        let rho: Vec<RatMatrix> = (0..g.arrow_count()).map(|_| RatMatrix::identity(2)).collect();
        let r = Ruth2::from_representation(&g, &[2, 2, 2], &rho).unwrap();
        assert!(verify_ruth(&r).is_empty());
        assert_eq!(pointwise_homology(&r)[0], HomologyDims { h1: 0, h0: 2 });
        let p = ruth_to_pseudofunctor(&r).unwrap();
        assert!(p.phi11.values().all(GL2Cell::is_identity));
    }

    #[test]
    fn perturbing_gamma_names_the_triple() {
        // Doubling of E = ℚ plus a 1|1 summand with ∂ = 0, where γ can be
        // perturbed without touching the homotopy equations.
        let g = pair_groupoid_n(2);
        let p = PseudoRep { g: g.clone(), dims: vec![1, 1], rho: vec![RatMatrix::scalar(rat(1)); 4] };
        let a = double_pseudo_rep(&p).unwrap();
        let rho: Vec<RatMatrix> = (0..4).map(|_| RatMatrix::identity(1)).collect();
        let mut b = Ruth2::from_representation(&g, &[1, 1], &rho).unwrap();
        b.v = GradedBundle::new(g.objects().to_vec(), vec![(1, 1), (1, 1)]).unwrap();
        b.d = vec![RatMatrix::zeros(1, 1); 2];
        b.rho1 = rho.clone();
        for m in b.gamma.values_mut() {
            *m = RatMatrix::zeros(1, 1);
        }
        let mut r = direct_sum(&a, &b).unwrap();
        assert!(verify_ruth(&r).is_empty());
        // l1<-l0 then l0<-l1: pair (1, 2).
        let m = r.gamma.get_mut(&(1, 2)).unwrap();
        m.set(1, 1, rat(5));
        let rep = verify_ruth(&r);
        assert!(rep.iter().all(|v| v.law == "cocycle equation"), "{rep:?}");
        assert!(rep.iter().any(|v| v.at == "triple (p0<-p1,p1<-p0,p0<-p1)"));
        let pf = ruth_to_pseudofunctor_unchecked(&r).unwrap();
        let coh = verify_pseudofunctor(&pf);
        assert!(coh.iter().all(|v| v.law == "coherence axiom"));
        let ats = |r: &Report| r.iter().map(|v| v.at.clone()).collect::<Vec<_>>();
        assert_eq!(ats(&coh), ats(&rep));
    }

    #[test]
    fn gauge_and_basis_change_are_quasi_isomorphisms() {
        let r = double_pseudo_rep(&lines_projection_pseudo_rep(&lines()).unwrap()).unwrap();
        let g = &r.g;
        let mu: Vec<RatMatrix> = (0..g.arrow_count())
            .map(|a| if g.is_unit(a) { RatMatrix::zeros(1, 1) } else { RatMatrix::scalar(rat(a as i64)) })
            .collect();
        let (s, m) = gauge(&r, &mu).unwrap();
        assert!(verify_ruth(&s).is_empty());
        assert!(is_quasi_iso_morphism(&m));
        let a1 = vec![RatMatrix::scalar(rat(2)); 3];
        let a0 = vec![RatMatrix::scalar(rat(-3)); 3];
        let (t, n) = change_basis(&s, &a1, &a0).unwrap();
        assert!(verify_ruth(&t).is_empty());
        let both = n.after(&m).unwrap();
        assert!(is_quasi_iso_morphism(&both));

        let h = morphism_to_lax_equivalence(&both).unwrap();
        let (c, phi) = ruth_to_pseudofunctor(&r).unwrap().to_lax();
        let (_, psi) = ruth_to_pseudofunctor(&t).unwrap().to_lax();
        let gl = GeneralLinear::new(r.v.clone());
        assert!(is_lax_equivalence(&c, &gl, &phi, &psi, &h));
        assert_eq!(lax_equivalence_to_morphism(&r, &t, &h).unwrap(), both);
    }

    #[test]
    fn identity_and_zero_morphisms() {
        let r = double_pseudo_rep(&lines_projection_pseudo_rep(&lines()).unwrap()).unwrap();
        assert!(is_quasi_iso_morphism(&RuthMorphism::identity(&r)));
        assert!(is_quasi_iso_morphism(&RuthMorphism::zero(&r, &r)));
        let g = cyclic_translation_groupoid(3);
        let rho: Vec<RatMatrix> = (0..g.arrow_count()).map(|_| RatMatrix::identity(1)).collect();
        let s = Ruth2::from_representation(&g, &[1, 1, 1], &rho).unwrap();
        let z = RuthMorphism::zero(&s, &s);
        assert!(verify_morphism(&z).is_empty());
        assert!(!is_quasi_iso_morphism(&z));
        assert!(matches!(morphism_to_lax_equivalence(&z), Err(Error::NotQuasiIso(_))));
    }

    #[test]
    fn perturbed_mu_names_an_arrow() {
        let r = double_pseudo_rep(&lines_projection_pseudo_rep(&lines()).unwrap()).unwrap();
        let mut m = RuthMorphism::identity(&r);
        m.mu[1] = RatMatrix::scalar(rat(1));
        let rep = verify_morphism(&m);
        assert!(rep.iter().any(|v| v.law == "morphism equation (degree 1)" && v.at == "arrow l0<-l1"));
    }
}
