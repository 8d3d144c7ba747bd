//! Enumerating the nerve of a finite table 2-category in three independent
//! ways, plus the cube attached to a 4-simplex.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::filtration::{reconstruct_filtration, strip_to_filtration};
use super::{face, pullback, quadruples, tetrahedron_holds, validate_simplex, Label, SimplexLabel};
use crate::error::Result;
use crate::handle::TwoCategory;
use crate::twocat::Fin2Cat;

type L = Label<Fin2Cat>;

/// Every complete label of `Δⁿ` with compatible endpoints, filtered by
/// `accept`. Vertices, then edges `(j, i)` with `j` outermost, then triangles.
fn labels_with(c: &Fin2Cat, n: usize, accept: &dyn Fn(&L) -> bool) -> Vec<L> {
    let mut out = Vec::new();
    let mut cur: L = SimplexLabel::empty(n);
    fn vertices(c: &Fin2Cat, cur: &mut L, i: usize, out: &mut Vec<L>, accept: &dyn Fn(&L) -> bool) {
        if i > cur.dim() {
            let edges = cur.edge_indices();
            return edges_rec(c, cur, &edges, 0, out, accept);
        }
        for x in 0..c.object_count() {
            cur.set_vertex(i, Some(x));
            vertices(c, cur, i + 1, out, accept);
        }
        cur.set_vertex(i, None);
    }
    fn edges_rec(
        c: &Fin2Cat,
        cur: &mut L,
        idx: &[(usize, usize)],
        p: usize,
        out: &mut Vec<L>,
        accept: &dyn Fn(&L) -> bool,
    ) {
        if p == idx.len() {
            let tris = cur.triangle_indices();
            return triangles_rec(c, cur, &tris, 0, out, accept);
        }
        let (j, i) = idx[p];
        let (x, y) = (*cur.vertex(i).unwrap(), *cur.vertex(j).unwrap());
        for a in c.hom(x, y) {
            cur.set_edge(j, i, Some(a));
            edges_rec(c, cur, idx, p + 1, out, accept);
        }
        cur.set_edge(j, i, None);
    }
    fn triangles_rec(
        c: &Fin2Cat,
        cur: &mut L,
        idx: &[(usize, usize, usize)],
        p: usize,
        out: &mut Vec<L>,
        accept: &dyn Fn(&L) -> bool,
    ) {
        if p == idx.len() {
            if accept(cur) {
                out.push(cur.clone());
            }
            return;
        }
        let (k, j, i) = idx[p];
        let src = *cur.edge(k, i).unwrap();
        let Some(tgt) = c.arrow_comp(*cur.edge(k, j).unwrap(), *cur.edge(j, i).unwrap()) else { return };
        for t in c.cells_between(src, tgt) {
            cur.set_triangle(k, j, i, Some(t));
            triangles_rec(c, cur, idx, p + 1, out, accept);
        }
        cur.set_triangle(k, j, i, None);
    }
    vertices(c, &mut cur, 0, &mut out, accept);
    out
}

/// `N_nC` by trying every label and keeping those satisfying every
/// tetrahedron equation.
pub fn enumerate_brute_force(c: &Fin2Cat, n: usize) -> Vec<L> {
    labels_with(c, n, &|s| validate_simplex(c, s).is_empty())
}

/// `N_nC` computed from `N_3C` alone: a label is kept when every
/// tetrahedron it contains belongs to `N_3C`. Below level 4 this is the
/// brute-force enumeration.
pub fn enumerate_coskeletal(c: &Fin2Cat, n: usize) -> Vec<L> {
    if n <= 3 {
        return enumerate_brute_force(c, n);
    }
    let n3: BTreeSet<L> = enumerate_brute_force(c, 3).into_iter().collect();
    labels_with(c, n, &|s| {
        quadruples(n)
            .into_iter()
            .all(|(l, k, j, i)| pullback(c, s, &[i, j, k, l]).map(|t| n3.contains(&t)).unwrap_or(false))
    })
}

/// `N_nC` built through the filtration: from each `(n-1)`-simplex as the
/// last facet, a new vertex and edge `u_{n,n-1}`, then one free 2-cell per
/// stage.
pub fn enumerate_by_filtration(c: &Fin2Cat, n: usize) -> Result<Vec<L>> {
    if n == 0 {
        return Ok(enumerate_brute_force(c, 0));
    }
    let mut out = Vec::new();
    for base in enumerate_by_filtration(c, n - 1)? {
        for a in 0..c.arrow_count() {
            let (x, y) = c.arrow_ends(a);
            if x != *base.vertex(n - 1).unwrap() {
                continue;
            }
            let mut start: L = SimplexLabel::empty(n);
            for i in 0..n {
                start.set_vertex(i, base.vertex(i).copied());
            }
            start.set_vertex(n, Some(y));
            for (j, i) in base.edge_indices() {
                start.set_edge(j, i, base.edge(j, i).copied());
            }
            for (k, j, i) in base.triangle_indices() {
                start.set_triangle(k, j, i, base.triangle(k, j, i).copied());
            }
            start.set_edge(n, n - 1, Some(a));
            let mut stages = alloc::vec![strip_to_filtration(&start, n - 1)];
            for k in (0..n - 1).rev() {
                let mut next = Vec::new();
                for st in &stages {
                    let l = st.label();
                    let tgt = c.arrow_comp(*l.edge(n, k + 1).unwrap(), *l.edge(k + 1, k).unwrap());
                    let Some(tgt) = tgt else { continue };
                    for alpha in 0..c.cell_count() {
                        let (s0, t0) = c.cell_ends(alpha);
                        if t0 == tgt && c.arrow_ends(s0) == (*l.vertex(k).unwrap(), *l.vertex(n).unwrap()) {
                            if let Ok(st2) = reconstruct_filtration(c, st, &alpha) {
                                next.push(st2);
                            }
                        }
                    }
                }
                stages = next;
            }
            out.extend(stages.into_iter().map(|s| s.into_label()));
        }
    }
    out.sort();
    Ok(out)
}

/// Whether `d_i: N_nC -> N_{n-1}C` hits every `(n-1)`-simplex.
pub fn face_image_is_surjective(c: &Fin2Cat, n: usize, i: usize) -> Result<bool> {
    let target: BTreeSet<L> = enumerate_brute_force(c, n - 1).into_iter().collect();
    let mut image = BTreeSet::new();
    for s in enumerate_brute_force(c, n) {
        image.insert(face(c, &s, i)?);
    }
    Ok(image == target)
}

/// The six faces of the cube drawn from a 4-simplex: the five facet
/// tetrahedra (indexed by the omitted vertex) and the interchange square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CubeFaces {
    pub tetrahedra: [bool; 5],
    pub interchange: bool,
}

impl CubeFaces {
    pub fn failing(&self) -> usize {
        self.tetrahedra.iter().filter(|&&b| !b).count() + usize::from(!self.interchange)
    }
}

pub fn cube_faces<T: TwoCategory>(c: &T, s: &Label<T>) -> Result<CubeFaces> {
    assert_eq!(s.dim(), 4, "cube faces need a 4-simplex");
    let mut tetrahedra = [false; 5];
    for (m, slot) in tetrahedra.iter_mut().enumerate() {
        let v: Vec<usize> = (0..5).filter(|&x| x != m).collect();
        *slot = tetrahedron_holds(c, s, v[3], v[2], v[1], v[0])?.unwrap_or(false);
    }
    let need =
        |x: Option<&T::Arrow>| x.cloned().ok_or_else(|| crate::error::Error::InvalidInput("edge missing".into()));
    let needc =
        |x: Option<&T::Cell>| x.cloned().ok_or_else(|| crate::error::Error::InvalidInput("triangle missing".into()));
    let (u432, u210) = (needc(s.triangle(4, 3, 2))?, needc(s.triangle(2, 1, 0))?);
    let h = c.hcompose(&u432, &u210)?;
    let one = c.vcompose(
        &c.whisker_right(&u432, &c.compose(&need(s.edge(2, 1))?, &need(s.edge(1, 0))?)?)?,
        &c.whisker_left(&need(s.edge(4, 2))?, &u210)?,
    )?;
    let two = c.vcompose(
        &c.whisker_left(&c.compose(&need(s.edge(4, 3))?, &need(s.edge(3, 2))?)?, &u210)?,
        &c.whisker_right(&u432, &need(s.edge(2, 0))?)?,
    )?;
    Ok(CubeFaces { tetrahedra, interchange: h == one && h == two })
}
