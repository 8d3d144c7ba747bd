//! Two-term chain complexes `V1 -> V0`, chain maps between them and chain
//! homotopies, with the kernel/image criterion for quasi-isomorphisms and the
//! mapping cone.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{rat, MatrixEquations, RatMatrix};

/// A 2-term complex at one base point: `d: V1 -> V0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fiber2 {
    dim1: usize,
    dim0: usize,
    d: RatMatrix,
}

impl Fiber2 {
    pub fn new(dim1: usize, dim0: usize, d: RatMatrix) -> Result<Self> {
        if d.shape() != (dim0, dim1) {
            return Err(Error::Dimension(format!(
                "differential is {}x{}, fiber needs {}x{}",
                d.rows(),
                d.cols(),
                dim0,
                dim1
            )));
        }
        Ok(Fiber2 { dim1, dim0, d })
    }

    /// Reads the dimensions off the differential's shape.
    pub fn from_differential(d: RatMatrix) -> Self {
        Fiber2 { dim1: d.cols(), dim0: d.rows(), d }
    }

    pub fn zero(dim1: usize, dim0: usize) -> Self {
        Fiber2 { dim1, dim0, d: RatMatrix::zeros(dim0, dim1) }
    }

    pub fn dim1(&self) -> usize {
        self.dim1
    }

    pub fn dim0(&self) -> usize {
        self.dim0
    }

    pub fn d(&self) -> &RatMatrix {
        &self.d
    }

    /// `dim V0 - dim V1`.
    pub fn euler(&self) -> i64 {
        self.dim0 as i64 - self.dim1 as i64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HomologyDims {
    /// `dim ker d`
    pub h1: usize,
    /// `dim coker d`
    pub h0: usize,
}

impl HomologyDims {
    pub fn euler(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64
    }

    pub fn is_zero(&self) -> bool {
        self.h1 == 0 && self.h0 == 0
    }
}

pub fn homology(f: &Fiber2) -> HomologyDims {
    let r = f.d.rank();
    HomologyDims { h1: f.dim1 - r, h0: f.dim0 - r }
}

/// A pair `(a1, a0)` commuting with the differentials:
/// `a0 * src.d = dst.d * a1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainMap2 {
    src: Fiber2,
    dst: Fiber2,
    a1: RatMatrix,
    a0: RatMatrix,
}

impl ChainMap2 {
    pub fn new(src: Fiber2, dst: Fiber2, a1: RatMatrix, a0: RatMatrix) -> Result<Self> {
        if a1.shape() != (dst.dim1, src.dim1) || a0.shape() != (dst.dim0, src.dim0) {
            return Err(Error::Dimension(format!(
                "chain map components {}x{} and {}x{} do not fit fibers ({}|{}) -> ({}|{})",
                a1.rows(),
                a1.cols(),
                a0.rows(),
                a0.cols(),
                src.dim1,
                src.dim0,
                dst.dim1,
                dst.dim0
            )));
        }
        if &a0 * &src.d != &dst.d * &a1 {
            return Err(Error::NotChainMap("a0 * d_src != d_dst * a1".into()));
        }
        Ok(ChainMap2 { src, dst, a1, a0 })
    }

    pub fn identity(f: &Fiber2) -> Self {
        ChainMap2 { src: f.clone(), dst: f.clone(), a1: RatMatrix::identity(f.dim1), a0: RatMatrix::identity(f.dim0) }
    }

    pub fn zero(src: &Fiber2, dst: &Fiber2) -> Self {
        ChainMap2 {
            src: src.clone(),
            dst: dst.clone(),
            a1: RatMatrix::zeros(dst.dim1, src.dim1),
            a0: RatMatrix::zeros(dst.dim0, src.dim0),
        }
    }

    pub fn src(&self) -> &Fiber2 {
        &self.src
    }

    pub fn dst(&self) -> &Fiber2 {
        &self.dst
    }

    pub fn a1(&self) -> &RatMatrix {
        &self.a1
    }

    pub fn a0(&self) -> &RatMatrix {
        &self.a0
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &ChainMap2) -> Result<ChainMap2> {
        if f.dst != self.src {
            return Err(Error::EndpointMismatch("composite of chain maps".into()));
        }
        Ok(ChainMap2 { src: f.src.clone(), dst: self.dst.clone(), a1: &self.a1 * &f.a1, a0: &self.a0 * &f.a0 })
    }

    pub fn is_iso_in_both_degrees(&self) -> bool {
        self.a1.is_invertible() && self.a0.is_invertible()
    }
}

/// Which of the three quasi-isomorphism conditions fails, if any.
pub fn quasi_iso_defect(m: &ChainMap2) -> Option<String> {
    // (U1) ker d_src ∩ ker a1 = 0, i.e. (a1; d_src) injective
    let stacked = RatMatrix::vstack(&[&m.a1, &m.src.d]).expect("same column count");
    if !stacked.is_injective() {
        return Some("ker d_src and ker a1 intersect nontrivially".into());
    }
    // (U0) im d_dst + im a0 = V0_dst
    let joined = RatMatrix::hstack(&[&m.dst.d, &m.a0]).expect("same row count");
    if !joined.is_surjective() {
        return Some("im d_dst + im a0 is a proper subspace".into());
    }
    if m.src.euler() != m.dst.euler() {
        return Some(format!("Euler characteristics differ ({} vs {})", m.src.euler(), m.dst.euler()));
    }
    None
}

/// Kernel condition, image condition and equal Euler characteristic.
pub fn is_quasi_iso(m: &ChainMap2) -> bool {
    quasi_iso_defect(m).is_none()
}

/// The mapping cone `V1x --d2--> V1y ⊕ V0x --d1--> V0y` with
/// `d2 = (a1; d_src)` and `d1 = (d_dst | -a0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub d2: RatMatrix,
    pub d1: RatMatrix,
}

impl Cone {
    /// `d2` injective, `d1` surjective and exact in the middle.
    pub fn is_exact(&self) -> bool {
        let r2 = self.d2.rank();
        let r1 = self.d1.rank();
        r2 == self.d2.cols() && r1 == self.d1.rows() && self.d1.cols() - r1 == r2
    }
}

pub fn cone(m: &ChainMap2) -> Cone {
    let d2 = RatMatrix::vstack(&[&m.a1, &m.src.d]).expect("same column count");
    let d1 = RatMatrix::hstack(&[&m.dst.d, &-&m.a0]).expect("same row count");
    debug_assert!((&d1 * &d2).is_zero());
    Cone { d2, d1 }
}

/// Representatives of a basis of `coker d`: standard vectors added greedily in
/// index order whenever they enlarge `im d`.
pub fn cokernel_complement(d: &RatMatrix) -> RatMatrix {
    let n = d.rows();
    let mut chosen: Vec<usize> = Vec::new();
    let mut span = d.clone();
    let mut rank = span.rank();
    for i in 0..n {
        if rank == n {
            break;
        }
        let e = RatMatrix::from_fn(n, 1, |r, _| if r == i { rat(1) } else { rat(0) });
        let candidate = RatMatrix::hstack(&[&span, &e]).expect("same row count");
        let r = candidate.rank();
        if r > rank {
            chosen.push(i);
            span = candidate;
            rank = r;
        }
    }
    RatMatrix::identity(n).select_columns(&chosen)
}

/// Matrices of the maps induced on `H1 = ker d` and `H0 = coker d`, in the
/// kernel basis of [`RatMatrix::kernel_basis`] and the cokernel basis of
/// [`cokernel_complement`].
pub fn induced_homology_maps(m: &ChainMap2) -> (RatMatrix, RatMatrix) {
    let kx = m.src.d.kernel_basis();
    let ky = m.dst.d.kernel_basis();
    let h1 = ky.solve(&(&m.a1 * &kx)).expect("a1 maps cycles to cycles");

    let cx = cokernel_complement(&m.src.d);
    let cy = cokernel_complement(&m.dst.d);
    let basis = RatMatrix::hstack(&[&m.dst.d, &cy]).expect("same row count");
    let coords = basis.solve(&(&m.a0 * &cx)).expect("im d + complement spans V0");
    let h0 = coords.block(m.dst.d.cols(), coords.rows(), 0, coords.cols());
    (h1, h0)
}

/// `R: V0x -> V1y` with `R * d_src = from.a1 - to.a1` and
/// `d_dst * R = from.a0 - to.a0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Homotopy2 {
    from: ChainMap2,
    to: ChainMap2,
    r: RatMatrix,
}

impl Homotopy2 {
    pub fn new(from: ChainMap2, to: ChainMap2, r: RatMatrix) -> Result<Self> {
        if from.src != to.src || from.dst != to.dst {
            return Err(Error::EndpointMismatch("homotopy between non-parallel chain maps".into()));
        }
        if r.shape() != (from.dst.dim1, from.src.dim0) {
            return Err(Error::Dimension(format!(
                "homotopy is {}x{}, expected {}x{}",
                r.rows(),
                r.cols(),
                from.dst.dim1,
                from.src.dim0
            )));
        }
        if &r * &from.src.d != &from.a1 - &to.a1 {
            return Err(Error::InvalidHomotopy("R * d_src != from.a1 - to.a1".into()));
        }
        if &from.dst.d * &r != &from.a0 - &to.a0 {
            return Err(Error::InvalidHomotopy("d_dst * R != from.a0 - to.a0".into()));
        }
        Ok(Homotopy2 { from, to, r })
    }

    /// The homotopy with matrix `r` starting at `from`; the target is forced.
    pub fn starting_at(from: ChainMap2, r: RatMatrix) -> Result<Self> {
        if r.shape() != (from.dst.dim1, from.src.dim0) {
            return Err(Error::Dimension("homotopy shape".into()));
        }
        let to = ChainMap2 {
            src: from.src.clone(),
            dst: from.dst.clone(),
            a1: &from.a1 - &(&r * &from.src.d),
            a0: &from.a0 - &(&from.dst.d * &r),
        };
        Ok(Homotopy2 { from, to, r })
    }

    pub fn zero(m: &ChainMap2) -> Self {
        Homotopy2 { from: m.clone(), to: m.clone(), r: RatMatrix::zeros(m.dst.dim1, m.src.dim0) }
    }

    pub fn from(&self) -> &ChainMap2 {
        &self.from
    }

    pub fn to(&self) -> &ChainMap2 {
        &self.to
    }

    pub fn r(&self) -> &RatMatrix {
        &self.r
    }
}

/// Solves for a homotopy `f => g` if one exists.
pub fn find_homotopy(f: &ChainMap2, g: &ChainMap2) -> Option<Homotopy2> {
    if f.src != g.src || f.dst != g.dst {
        return None;
    }
    let mut eq = MatrixEquations::new(f.dst.dim1, f.src.dim0);
    let i1 = RatMatrix::identity(f.dst.dim1);
    let i0 = RatMatrix::identity(f.src.dim0);
    eq.push(&i1, &f.src.d, &(&f.a1 - &g.a1)).ok()?;
    eq.push(&f.dst.d, &i0, &(&f.a0 - &g.a0)).ok()?;
    let r = eq.solve().ok()?;
    Homotopy2::new(f.clone(), g.clone(), r).ok()
}
