//! `GL(V)` for a 2-term graded bundle over a finite base.
//!
//! Objects are differentials on the fibers, arrows are quasi-isomorphisms
//! between fibers (possibly over different points) and 2-cells are chain
//! homotopies. `∘` is composition of chain maps and `•` adds homotopies. A
//! 2-cell `R: α => α'` satisfies `R ∂x = α1 - α'1` and `∂y R = α0 - α'0`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::chain::{cone, find_homotopy, quasi_iso_defect, ChainMap2, Fiber2, Homotopy2};
use crate::error::{Error, Result};
use crate::handle::TwoCategory;
use crate::linalg::{MatrixEquations, RatMatrix};

/// A graded vector bundle `V1 ⊕ V0` over a finite ordered set of points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedBundle {
    points: Vec<String>,
    dims: Vec<(usize, usize)>,
}

impl GradedBundle {
    /// `fibers[i] = (dim V1, dim V0)` at `points[i]`.
    pub fn new(points: Vec<String>, fibers: Vec<(usize, usize)>) -> Result<Self> {
        if points.len() != fibers.len() {
            return Err(Error::InvalidInput(format!("{} points but {} fiber entries", points.len(), fibers.len())));
        }
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(Error::InvalidInput(format!("duplicate point {p:?}")));
            }
        }
        Ok(GradedBundle { points, dims: fibers })
    }

    /// Same fiber dimensions over every point.
    pub fn uniform(points: Vec<String>, dim1: usize, dim0: usize) -> Self {
        let dims = alloc::vec![(dim1, dim0); points.len()];
        GradedBundle { points, dims }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point_name(&self, p: usize) -> &str {
        &self.points[p]
    }

    pub fn point_index(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p == name)
    }

    /// `(dim V1, dim V0)` at point `p`.
    pub fn dims(&self, p: usize) -> (usize, usize) {
        self.dims[p]
    }

    pub fn all_dims(&self) -> &[(usize, usize)] {
        &self.dims
    }
}

/// An object of `GL(V)`: a differential on the fiber over `point`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GLObject {
    pub point: usize,
    pub fiber: Fiber2,
}

impl GLObject {
    pub fn new(point: usize, fiber: Fiber2) -> Self {
        GLObject { point, fiber }
    }
}

/// A quasi-isomorphism between two fibers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GLArrow {
    src_point: usize,
    dst_point: usize,
    map: ChainMap2,
}

impl GLArrow {
    pub fn new(src: &GLObject, dst: &GLObject, a1: RatMatrix, a0: RatMatrix) -> Result<Self> {
        let map = ChainMap2::new(src.fiber.clone(), dst.fiber.clone(), a1, a0)?;
        Self::from_map(src.point, dst.point, map)
    }

    /// Rejects chain maps that are not quasi-isomorphisms.
    pub fn from_map(src_point: usize, dst_point: usize, map: ChainMap2) -> Result<Self> {
        if let Some(why) = quasi_iso_defect(&map) {
            return Err(Error::NotQuasiIso(why));
        }
        Ok(GLArrow { src_point, dst_point, map })
    }

    pub fn identity(x: &GLObject) -> Self {
        GLArrow { src_point: x.point, dst_point: x.point, map: ChainMap2::identity(&x.fiber) }
    }

    pub fn src(&self) -> GLObject {
        GLObject { point: self.src_point, fiber: self.map.src().clone() }
    }

    pub fn dst(&self) -> GLObject {
        GLObject { point: self.dst_point, fiber: self.map.dst().clone() }
    }

    pub fn src_point(&self) -> usize {
        self.src_point
    }

    pub fn dst_point(&self) -> usize {
        self.dst_point
    }

    pub fn map(&self) -> &ChainMap2 {
        &self.map
    }

    pub fn a1(&self) -> &RatMatrix {
        self.map.a1()
    }

    pub fn a0(&self) -> &RatMatrix {
        self.map.a0()
    }

    fn same_endpoints(&self, other: &GLArrow) -> bool {
        self.src_point == other.src_point
            && self.dst_point == other.dst_point
            && self.map.src() == other.map.src()
            && self.map.dst() == other.map.dst()
    }
}

/// A chain homotopy `from => to` between parallel arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GL2Cell {
    from: GLArrow,
    to: GLArrow,
    r: RatMatrix,
}

impl GL2Cell {
    pub fn new(from: GLArrow, to: GLArrow, r: RatMatrix) -> Result<Self> {
        if !from.same_endpoints(&to) {
            return Err(Error::EndpointMismatch("2-cell between non-parallel arrows".into()));
        }
        Homotopy2::new(from.map.clone(), to.map.clone(), r.clone())?;
        Ok(GL2Cell { from, to, r })
    }

    /// The cell with matrix `r` out of `from`; its target is forced and is a
    /// quasi-isomorphism because it is homotopic to one.
    pub fn starting_at(from: GLArrow, r: RatMatrix) -> Result<Self> {
        let h = Homotopy2::starting_at(from.map.clone(), r)?;
        let to = GLArrow { src_point: from.src_point, dst_point: from.dst_point, map: h.to().clone() };
        Ok(GL2Cell { from, to, r: h.r().clone() })
    }

    pub fn identity(f: &GLArrow) -> Self {
        let r = RatMatrix::zeros(f.map.dst().dim1(), f.map.src().dim0());
        GL2Cell { from: f.clone(), to: f.clone(), r }
    }

    pub fn from(&self) -> &GLArrow {
        &self.from
    }

    pub fn to(&self) -> &GLArrow {
        &self.to
    }

    pub fn r(&self) -> &RatMatrix {
        &self.r
    }

    pub fn homotopy(&self) -> Homotopy2 {
        Homotopy2::new(self.from.map.clone(), self.to.map.clone(), self.r.clone()).expect("validated on construction")
    }

    pub fn is_identity(&self) -> bool {
        self.from == self.to && self.r.is_zero()
    }
}

/// `g ∘ f`.
pub fn compose_arrows(g: &GLArrow, f: &GLArrow) -> Result<GLArrow> {
    if f.dst_point != g.src_point || f.map.dst() != g.map.src() {
        return Err(Error::EndpointMismatch("arrow composite: target of f is not source of g".into()));
    }
    // Quasi-isomorphisms are closed under composition.
    Ok(GLArrow { src_point: f.src_point, dst_point: g.dst_point, map: g.map.after(&f.map)? })
}

/// `s • r`: the homotopies add.
pub fn vcompose(s: &GL2Cell, r: &GL2Cell) -> Result<GL2Cell> {
    if r.to != s.from {
        return Err(Error::EndpointMismatch("vertical composite: target of r is not source of s".into()));
    }
    Ok(GL2Cell { from: r.from.clone(), to: s.to.clone(), r: &s.r + &r.r })
}

pub fn invert_2cell(r: &GL2Cell) -> GL2Cell {
    GL2Cell { from: r.to.clone(), to: r.from.clone(), r: -&r.r }
}

/// `g ∘ r` with matrix `g1 R`.
pub fn whisker_left(g: &GLArrow, r: &GL2Cell) -> Result<GL2Cell> {
    Ok(GL2Cell { from: compose_arrows(g, &r.from)?, to: compose_arrows(g, &r.to)?, r: g.a1() * &r.r })
}

/// `r ∘ f` with matrix `R f0`.
pub fn whisker_right(r: &GL2Cell, f: &GLArrow) -> Result<GL2Cell> {
    Ok(GL2Cell { from: compose_arrows(&r.from, f)?, to: compose_arrows(&r.to, f)?, r: &r.r * f.a0() })
}

/// Horizontal composite of `r: α => α'` (x -> y) and `s: β => β'` (y -> z),
/// with matrix `β1 R_r + R_s α'0`.
pub fn hcompose(s: &GL2Cell, r: &GL2Cell) -> Result<GL2Cell> {
    let from = compose_arrows(&s.from, &r.from)?;
    let to = compose_arrows(&s.to, &r.to)?;
    let m = &(s.from.a1() * &r.r) + &(&s.r * r.to.a0());
    Ok(GL2Cell { from, to, r: m })
}

/// The other bracketing of the horizontal composite, `β'1 R_r + R_s α0`.
/// Always equal to [`hcompose`].
pub fn hcompose_other_bracketing(s: &GL2Cell, r: &GL2Cell) -> Result<RatMatrix> {
    compose_arrows(&s.from, &r.from)?;
    Ok(&(s.to.a1() * &r.r) + &(&s.r * r.from.a0()))
}

/// A homotopy `f => g` if the two arrows are homotopic.
pub fn homotopic(f: &GLArrow, g: &GLArrow) -> Option<GL2Cell> {
    if !f.same_endpoints(g) {
        return None;
    }
    let h = find_homotopy(&f.map, &g.map)?;
    Some(GL2Cell { from: f.clone(), to: g.clone(), r: h.r().clone() })
}

/// A quasi-inverse `g` of `f` with cells `unit: id_src => g ∘ f` and
/// `counit: id_dst => f ∘ g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiInverse {
    pub inverse: GLArrow,
    pub unit: GL2Cell,
    pub counit: GL2Cell,
}

/// Chosen splitting of the exact cone `0 -> V1x -> V1y ⊕ V0x -> V0y -> 0`
/// of a quasi-isomorphism `f: x -> y`.
struct ConeSplitting {
    /// `V1y -> V1x` block of the retraction.
    ret_a1: RatMatrix,
    /// `V0x -> V1x` block of the retraction.
    ret_d: RatMatrix,
    /// `V0y -> V1y` block of the section.
    sec_1: RatMatrix,
    /// `V0y -> V0x` block of the section.
    sec_0: RatMatrix,
}

fn split_cone(f: &GLArrow) -> Result<ConeSplitting> {
    let c = cone(&f.map);
    let ret = c.d2.left_inverse()?;
    let s0 = c.d1.right_inverse()?;
    // Adjust the section so that ret * sec = 0; then d2 ret + sec d1 = id.
    let sec = &s0 - &(&c.d2 * &(&ret * &s0));
    let n1y = f.map.dst().dim1();
    Ok(ConeSplitting {
        ret_a1: ret.block(0, ret.rows(), 0, n1y),
        ret_d: ret.block(0, ret.rows(), n1y, ret.cols()),
        sec_1: sec.block(0, n1y, 0, sec.cols()),
        sec_0: sec.block(n1y, sec.rows(), 0, sec.cols()),
    })
}

pub fn quasi_inverse(f: &GLArrow) -> Result<QuasiInverse> {
    let sp = split_cone(f)?;
    let g = GLArrow::new(&f.dst(), &f.src(), sp.ret_a1, -&sp.sec_0)?;
    let unit = GL2Cell::new(GLArrow::identity(&f.src()), compose_arrows(&g, f)?, sp.ret_d)?;
    let counit = GL2Cell::new(GLArrow::identity(&f.dst()), compose_arrows(f, &g)?, sp.sec_1)?;
    Ok(QuasiInverse { inverse: g, unit, counit })
}

/// Fills the outer horn at vertex 0: from `alpha: x -> y` and `gamma: x -> z`
/// builds `beta = gamma ∘ g` (with `g` the split quasi-inverse of alpha) and
/// the cell `gamma => beta ∘ alpha` with matrix `gamma1 ∘ ret_d`.
pub fn fill_horn20(alpha: &GLArrow, gamma: &GLArrow) -> Result<(GLArrow, GL2Cell)> {
    if alpha.src() != gamma.src() {
        return Err(Error::EndpointMismatch("horn (2,0): alpha and gamma need a common source".into()));
    }
    let q = quasi_inverse(alpha)?;
    let beta = compose_arrows(gamma, &q.inverse)?;
    let r = whisker_left(gamma, &q.unit)?;
    // whisker_left gives gamma ∘ id => gamma ∘ (g ∘ alpha); reassociate the target.
    let cell = GL2Cell::new(gamma.clone(), compose_arrows(&beta, alpha)?, r.r)?;
    Ok((beta, cell))
}

/// Fills the outer horn at vertex 2: from `gamma: x -> z` and `beta: y -> z`
/// builds `alpha = h ∘ gamma` (with `h` the split quasi-inverse of beta) and
/// the cell `gamma => beta ∘ alpha` with matrix `sec_1 ∘ gamma0`.
pub fn fill_horn22(gamma: &GLArrow, beta: &GLArrow) -> Result<(GLArrow, GL2Cell)> {
    if gamma.dst() != beta.dst() {
        return Err(Error::EndpointMismatch("horn (2,2): gamma and beta need a common target".into()));
    }
    let q = quasi_inverse(beta)?;
    let alpha = compose_arrows(&q.inverse, gamma)?;
    let r = whisker_right(&q.counit, gamma)?;
    let cell = GL2Cell::new(gamma.clone(), compose_arrows(beta, &alpha)?, r.r)?;
    Ok((alpha, cell))
}

/// Solves `T ∘ f = sigma` for `T: a => b`.
pub fn factor_right(sigma: &GL2Cell, a: &GLArrow, b: &GLArrow, f: &GLArrow) -> Result<GL2Cell> {
    if sigma.from != compose_arrows(a, f)? || sigma.to != compose_arrows(b, f)? {
        return Err(Error::EndpointMismatch("factor_right: sigma is not a => b whiskered by f".into()));
    }
    let (y, z) = (a.map.src(), a.map.dst());
    let mut eq = MatrixEquations::new(z.dim1(), y.dim0());
    eq.push(&RatMatrix::identity(z.dim1()), y.d(), &(a.a1() - b.a1()))?;
    eq.push(z.d(), &RatMatrix::identity(y.dim0()), &(a.a0() - b.a0()))?;
    eq.push(&RatMatrix::identity(z.dim1()), f.a0(), &sigma.r)?;
    let t = eq.solve()?;
    GL2Cell::new(a.clone(), b.clone(), t)
}

/// Solves `g ∘ T = sigma` for `T: a => b`.
pub fn factor_left(sigma: &GL2Cell, g: &GLArrow, a: &GLArrow, b: &GLArrow) -> Result<GL2Cell> {
    if sigma.from != compose_arrows(g, a)? || sigma.to != compose_arrows(g, b)? {
        return Err(Error::EndpointMismatch("factor_left: sigma is not a => b whiskered by g".into()));
    }
    let (x, y) = (a.map.src(), a.map.dst());
    let mut eq = MatrixEquations::new(y.dim1(), x.dim0());
    eq.push(&RatMatrix::identity(y.dim1()), x.d(), &(a.a1() - b.a1()))?;
    eq.push(y.d(), &RatMatrix::identity(x.dim0()), &(a.a0() - b.a0()))?;
    eq.push(g.a1(), &RatMatrix::identity(x.dim0()), &sigma.r)?;
    let t = eq.solve()?;
    GL2Cell::new(a.clone(), b.clone(), t)
}

/// `GL(V)` as a [`TwoCategory`] handle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralLinear {
    bundle: GradedBundle,
}

impl GeneralLinear {
    pub fn new(bundle: GradedBundle) -> Self {
        GeneralLinear { bundle }
    }

    pub fn bundle(&self) -> &GradedBundle {
        &self.bundle
    }

    /// An object over `point` with differential `d`; its shape must match the
    /// bundle's fiber there.
    pub fn object(&self, point: usize, d: RatMatrix) -> Result<GLObject> {
        if point >= self.bundle.len() {
            return Err(Error::InvalidInput(format!("no point with index {point}")));
        }
        let (d1, d0) = self.bundle.dims(point);
        Ok(GLObject { point, fiber: Fiber2::new(d1, d0, d)? })
    }

    pub fn contains_object(&self, x: &GLObject) -> bool {
        x.point < self.bundle.len() && self.bundle.dims(x.point) == (x.fiber.dim1(), x.fiber.dim0())
    }
}

impl TwoCategory for GeneralLinear {
    type Obj = GLObject;
    type Arrow = GLArrow;
    type Cell = GL2Cell;

    fn arrow_src(&self, f: &GLArrow) -> GLObject {
        f.src()
    }

    fn arrow_tgt(&self, f: &GLArrow) -> GLObject {
        f.dst()
    }

    fn cell_src(&self, a: &GL2Cell) -> GLArrow {
        a.from.clone()
    }

    fn cell_tgt(&self, a: &GL2Cell) -> GLArrow {
        a.to.clone()
    }

    fn id_arrow(&self, x: &GLObject) -> GLArrow {
        GLArrow::identity(x)
    }

    fn id_cell(&self, f: &GLArrow) -> GL2Cell {
        GL2Cell::identity(f)
    }

    fn compose(&self, g: &GLArrow, f: &GLArrow) -> Result<GLArrow> {
        compose_arrows(g, f)
    }

    fn hcompose(&self, s: &GL2Cell, r: &GL2Cell) -> Result<GL2Cell> {
        hcompose(s, r)
    }

    fn vcompose(&self, s: &GL2Cell, r: &GL2Cell) -> Result<GL2Cell> {
        vcompose(s, r)
    }

    fn invert_cell(&self, a: &GL2Cell) -> Option<GL2Cell> {
        Some(invert_2cell(a))
    }

    fn whisker_left(&self, g: &GLArrow, r: &GL2Cell) -> Result<GL2Cell> {
        whisker_left(g, r)
    }

    fn whisker_right(&self, r: &GL2Cell, f: &GLArrow) -> Result<GL2Cell> {
        whisker_right(r, f)
    }

    fn fill_horn20(&self, f: &GLArrow, h: &GLArrow) -> Option<(GLArrow, GL2Cell)> {
        fill_horn20(f, h).ok()
    }

    fn fill_horn22(&self, g: &GLArrow, h: &GLArrow) -> Option<(GLArrow, GL2Cell)> {
        fill_horn22(h, g).ok()
    }

    fn factor_right(&self, sigma: &GL2Cell, a: &GLArrow, b: &GLArrow, f: &GLArrow) -> Option<GL2Cell> {
        factor_right(sigma, a, b, f).ok()
    }

    fn factor_left(&self, sigma: &GL2Cell, g: &GLArrow, a: &GLArrow, b: &GLArrow) -> Option<GL2Cell> {
        factor_left(sigma, g, a, b).ok()
    }
}
