//! The nerve of a strict 2-category.
//!
//! An `n`-simplex is stored through its 2-skeleton: objects `u_i`, arrows
//! `u_{j,i}: u_i -> u_j` for `j > i`, and 2-cells
//! `u_{k,j,i}: u_{k,i} => u_{k,j} ∘ u_{j,i}` for `k > j > i`. It is a simplex
//! when every tetrahedron `l > k > j > i` satisfies
//! `(u_{l,k} ∘ u_{k,j,i}) • u_{l,k,i} = (u_{l,k,j} ∘ u_{j,i}) • u_{l,j,i}`.
//! Higher data is determined by this, so labels for `n ≥ 4` carry nothing
//! more.

mod enumerate;
mod filtration;
mod horn;

pub use enumerate::{
    cube_faces, enumerate_brute_force, enumerate_by_filtration, enumerate_coskeletal, face_image_is_surjective,
    CubeFaces,
};
pub use filtration::{
    in_filtration, rebuild_through_filtration, reconstruct_filtration, strip_to_filtration, FiltrationStage,
};
pub use horn::{coskeletal_extend, fill_horn, in_horn, validate_horn, Horn};

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::handle::TwoCategory;
use crate::report::{Report, Violation};

/// A possibly partial labelling of the 2-skeleton of `Δⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexLabel<O, A, C> {
    n: usize,
    vertices: Vec<Option<O>>,
    edges: Vec<Option<A>>,
    triangles: Vec<Option<C>>,
}

/// A label with entries in the handle `T`.
pub type Label<T> = SimplexLabel<<T as TwoCategory>::Obj, <T as TwoCategory>::Arrow, <T as TwoCategory>::Cell>;

impl<O: Clone, A: Clone, C: Clone> SimplexLabel<O, A, C> {
    pub fn empty(n: usize) -> Self {
        let m = n + 1;
        SimplexLabel { n, vertices: vec![None; m], edges: vec![None; m * m], triangles: vec![None; m * m * m] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn e(&self, j: usize, i: usize) -> usize {
        assert!(i < j && j <= self.n, "edge ({j},{i}) is not increasing in [{}]", self.n);
        j * (self.n + 1) + i
    }

    fn t(&self, k: usize, j: usize, i: usize) -> usize {
        assert!(i < j && j < k && k <= self.n, "triangle ({k},{j},{i}) is not increasing in [{}]", self.n);
        (k * (self.n + 1) + j) * (self.n + 1) + i
    }

    pub fn vertex(&self, i: usize) -> Option<&O> {
        self.vertices[i].as_ref()
    }

    pub fn edge(&self, j: usize, i: usize) -> Option<&A> {
        self.edges[self.e(j, i)].as_ref()
    }

    pub fn triangle(&self, k: usize, j: usize, i: usize) -> Option<&C> {
        self.triangles[self.t(k, j, i)].as_ref()
    }

    pub fn set_vertex(&mut self, i: usize, v: Option<O>) {
        self.vertices[i] = v;
    }

    pub fn set_edge(&mut self, j: usize, i: usize, v: Option<A>) {
        let e = self.e(j, i);
        self.edges[e] = v;
    }

    pub fn set_triangle(&mut self, k: usize, j: usize, i: usize, v: Option<C>) {
        let t = self.t(k, j, i);
        self.triangles[t] = v;
    }

    /// Increasing index pairs `(j, i)`.
    pub fn edge_indices(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..=n).flat_map(|j| (0..j).map(move |i| (j, i))).collect()
    }

    /// Increasing index triples `(k, j, i)`.
    pub fn triangle_indices(&self) -> Vec<(usize, usize, usize)> {
        triples(self.n)
    }

    pub fn is_complete(&self) -> bool {
        self.vertices.iter().all(Option::is_some)
            && self.edge_indices().into_iter().all(|(j, i)| self.edge(j, i).is_some())
            && self.triangle_indices().into_iter().all(|(k, j, i)| self.triangle(k, j, i).is_some())
    }

    /// Keeps the entries whose index set satisfies `keep`.
    pub fn restrict(&self, keep: impl Fn(&[usize]) -> bool) -> Self {
        let mut out = Self::empty(self.n);
        for i in 0..=self.n {
            if keep(&[i]) {
                out.vertices[i] = self.vertices[i].clone();
            }
        }
        for (j, i) in self.edge_indices() {
            if keep(&[i, j]) {
                out.set_edge(j, i, self.edge(j, i).cloned());
            }
        }
        for (k, j, i) in self.triangle_indices() {
            if keep(&[i, j, k]) {
                out.set_triangle(k, j, i, self.triangle(k, j, i).cloned());
            }
        }
        out
    }

    fn need_vertex(&self, i: usize) -> Result<&O> {
        self.vertex(i).ok_or_else(|| Error::InvalidInput(format!("vertex {i} missing")))
    }

    fn need_edge(&self, j: usize, i: usize) -> Result<&A> {
        self.edge(j, i).ok_or_else(|| Error::InvalidInput(format!("edge ({j},{i}) missing")))
    }

    fn need_triangle(&self, k: usize, j: usize, i: usize) -> Result<&C> {
        self.triangle(k, j, i).ok_or_else(|| Error::InvalidInput(format!("triangle ({k},{j},{i}) missing")))
    }
}

pub(crate) fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for k in 0..=n {
        for j in 0..k {
            for i in 0..j {
                out.push((k, j, i));
            }
        }
    }
    out
}

pub(crate) fn quadruples(n: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for (k, j, i) in triples(n) {
        for l in k + 1..=n {
            out.push((l, k, j, i));
        }
    }
    out.sort_unstable();
    out
}

/// A complete label from explicit data: `vertices[i]`, edges keyed by
/// `(j, i)` and triangles keyed by `(k, j, i)`.
pub fn label_from_parts<O: Clone, A: Clone, C: Clone>(
    vertices: Vec<O>,
    edges: Vec<((usize, usize), A)>,
    triangles: Vec<((usize, usize, usize), C)>,
) -> Result<SimplexLabel<O, A, C>> {
    if vertices.is_empty() {
        return Err(Error::InvalidInput("a simplex needs at least one vertex".into()));
    }
    let n = vertices.len() - 1;
    let mut s = SimplexLabel::empty(n);
    for (i, v) in vertices.into_iter().enumerate() {
        s.vertices[i] = Some(v);
    }
    for ((j, i), a) in edges {
        if !(i < j && j <= n) {
            return Err(Error::InvalidInput(format!("edge ({j},{i}) is not increasing in [{n}]")));
        }
        s.set_edge(j, i, Some(a));
    }
    for ((k, j, i), c) in triangles {
        if !(i < j && j < k && k <= n) {
            return Err(Error::InvalidInput(format!("triangle ({k},{j},{i}) is not increasing in [{n}]")));
        }
        s.set_triangle(k, j, i, Some(c));
    }
    Ok(s)
}

/// The arrow `u_{j,i}` with `u_{i,i}` read as an identity.
pub fn edge_or_identity<T: TwoCategory>(c: &T, s: &Label<T>, j: usize, i: usize) -> Result<T::Arrow> {
    if i == j {
        Ok(c.id_arrow(s.need_vertex(i)?))
    } else {
        Ok(s.need_edge(j, i)?.clone())
    }
}

/// Pulls a complete simplex back along a monotone map `a: [m] -> [n]`, given
/// as its list of values. Repeated indices give identity arrows and
/// identity 2-cells.
pub fn pullback<T: TwoCategory>(c: &T, s: &Label<T>, a: &[usize]) -> Result<Label<T>> {
    if a.is_empty() || a.windows(2).any(|w| w[0] > w[1]) || a.iter().any(|&x| x > s.n) {
        return Err(Error::InvalidInput(format!("{a:?} is not a monotone map into [{}]", s.n)));
    }
    let m = a.len() - 1;
    let mut out = SimplexLabel::empty(m);
    for (i, &ai) in a.iter().enumerate() {
        out.vertices[i] = Some(s.need_vertex(ai)?.clone());
    }
    for (j, i) in out.edge_indices() {
        out.set_edge(j, i, Some(edge_or_identity(c, s, a[j], a[i])?));
    }
    for (k, j, i) in out.triangle_indices() {
        let (ak, aj, ai) = (a[k], a[j], a[i]);
        let cell = if ak > aj && aj > ai {
            s.need_triangle(ak, aj, ai)?.clone()
        } else {
            c.id_cell(&edge_or_identity(c, s, ak, ai)?)
        };
        out.set_triangle(k, j, i, Some(cell));
    }
    Ok(out)
}

/// `d_i`
pub fn face<T: TwoCategory>(c: &T, s: &Label<T>, i: usize) -> Result<Label<T>> {
    let a: Vec<usize> = (0..=s.n).filter(|&x| x != i).collect();
    pullback(c, s, &a)
}

/// `s_i`
pub fn degeneracy<T: TwoCategory>(c: &T, s: &Label<T>, i: usize) -> Result<Label<T>> {
    let mut a: Vec<usize> = (0..=s.n).collect();
    a.insert(i, i);
    pullback(c, s, &a)
}

/// The constant `n`-simplex at an object.
pub fn point_simplex<T: TwoCategory>(c: &T, x: &T::Obj, n: usize) -> Label<T> {
    let mut s = SimplexLabel::empty(0);
    s.vertices[0] = Some(x.clone());
    pullback(c, &s, &vec![0; n + 1]).expect("constant map")
}

fn endpoint_report<T: TwoCategory>(c: &T, s: &Label<T>, out: &mut Report) {
    for (j, i) in s.edge_indices() {
        let (Some(a), Some(x), Some(y)) = (s.edge(j, i), s.vertex(i), s.vertex(j)) else { continue };
        if &c.arrow_src(a) != x || &c.arrow_tgt(a) != y {
            out.push(Violation::new("edge endpoints", format!("edge ({j},{i})")));
        }
    }
    for (k, j, i) in s.triangle_indices() {
        let (Some(t), Some(ki), Some(kj), Some(ji)) = (s.triangle(k, j, i), s.edge(k, i), s.edge(k, j), s.edge(j, i))
        else {
            continue;
        };
        let ok = &c.cell_src(t) == ki && c.compose(kj, ji).map(|g| c.cell_tgt(t) == g).unwrap_or(false);
        if !ok {
            out.push(Violation::new("triangle endpoints", format!("triangle ({k},{j},{i})")));
        }
    }
}

/// Whether the tetrahedron `(l, k, j, i)` commutes; `Ok(None)` if some of
/// its data is missing.
pub fn tetrahedron_holds<T: TwoCategory>(
    c: &T,
    s: &Label<T>,
    l: usize,
    k: usize,
    j: usize,
    i: usize,
) -> Result<Option<bool>> {
    let (Some(ulk), Some(uji)) = (s.edge(l, k), s.edge(j, i)) else { return Ok(None) };
    let (Some(ukji), Some(ulki), Some(ulkj), Some(ulji)) =
        (s.triangle(k, j, i), s.triangle(l, k, i), s.triangle(l, k, j), s.triangle(l, j, i))
    else {
        return Ok(None);
    };
    let lhs = c.vcompose(&c.whisker_left(ulk, ukji)?, ulki)?;
    let rhs = c.vcompose(&c.whisker_right(ulkj, uji)?, ulji)?;
    Ok(Some(lhs == rhs))
}

fn tetra_report<T: TwoCategory>(c: &T, s: &Label<T>, out: &mut Report) {
    for (l, k, j, i) in quadruples(s.n) {
        match tetrahedron_holds(c, s, l, k, j, i) {
            Ok(Some(true)) | Ok(None) => {}
            Ok(Some(false)) => {
                out.push(Violation::new("tetrahedron equation", format!("tetrahedron ({l},{k},{j},{i})")))
            }
            Err(e) => out.push(Violation::new("tetrahedron equation", format!("tetrahedron ({l},{k},{j},{i}): {e}"))),
        }
    }
}

/// Endpoint and tetrahedron conditions over all data present; a complete
/// label with an empty report is a simplex of the nerve.
pub fn validate_label<T: TwoCategory>(c: &T, s: &Label<T>) -> Report {
    let mut out = Report::new();
    endpoint_report(c, s, &mut out);
    if out.is_empty() {
        tetra_report(c, s, &mut out);
    }
    out
}

/// Empty iff `s` is a complete simplex of the nerve; otherwise lists the
/// failures, tetrahedra in lexicographic order.
pub fn validate_simplex<T: TwoCategory>(c: &T, s: &Label<T>) -> Report {
    let mut out = Report::new();
    for i in 0..=s.n {
        if s.vertex(i).is_none() {
            out.push(Violation::new("simplex completeness", format!("vertex {i}")));
        }
    }
    for (j, i) in s.edge_indices() {
        if s.edge(j, i).is_none() {
            out.push(Violation::new("simplex completeness", format!("edge ({j},{i})")));
        }
    }
    for (k, j, i) in s.triangle_indices() {
        if s.triangle(k, j, i).is_none() {
            out.push(Violation::new("simplex completeness", format!("triangle ({k},{j},{i})")));
        }
    }
    if out.is_empty() {
        out = validate_label(c, s);
    }
    out
}
