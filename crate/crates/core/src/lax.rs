//! Normal lax functors out of a finite table 2-category, lax
//! transformations, and their simplicial counterparts: maps of nerves and
//! simplicial homotopies `NC × Δ¹ -> ND`.
//!
//! Structure 2-cells point as in the nerve: `φ₁,₁(g, f): φ(g∘f) => φ(g)∘φ(f)`
//! and `H_f: H_y∘φ(f) => ψ(f)∘H_x` for `f: x -> y`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::handle::TwoCategory;
use crate::nerve::{enumerate_brute_force, label_from_parts, validate_simplex, Label, SimplexLabel};
use crate::report::{Report, Violation};
use crate::twocat::Fin2Cat;

/// `φ₀`, `φ₁`, `φ₂` and `φ₁,₁` of a lax functor; `comp_cells[(g, f)]` is
/// `φ₁,₁(g, f)` for every composable pair of source arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaxFunctor<O, A, C> {
    pub on_objects: Vec<O>,
    pub on_arrows: Vec<A>,
    pub on_cells: Vec<C>,
    pub comp_cells: BTreeMap<(usize, usize), C>,
}

pub type Lax<T> = LaxFunctor<<T as TwoCategory>::Obj, <T as TwoCategory>::Arrow, <T as TwoCategory>::Cell>;

fn composable_pairs(src: &Fin2Cat) -> Vec<(usize, usize)> {
    let n = src.arrow_count();
    (0..n)
        .flat_map(|g| (0..n).map(move |f| (g, f)))
        .filter(|&(g, f)| src.arrow_ends(g).0 == src.arrow_ends(f).1)
        .collect()
}

fn shape_check<T: TwoCategory>(src: &Fin2Cat, phi: &Lax<T>) -> Result<()> {
    if phi.on_objects.len() != src.object_count()
        || phi.on_arrows.len() != src.arrow_count()
        || phi.on_cells.len() != src.cell_count()
    {
        return Err(Error::InvalidInput("lax functor tables do not match the source".into()));
    }
    for p in composable_pairs(src) {
        if !phi.comp_cells.contains_key(&p) {
            return Err(Error::InvalidInput(format!("composition cell missing at {p:?}")));
        }
    }
    Ok(())
}

fn eq_or<T: PartialEq>(r: Result<T>, expected: &T) -> bool {
    r.map(|x| &x == expected).unwrap_or(false)
}

/// Normality, functoriality on 2-cells, naturality of `φ₁,₁`, and the
/// coherence equation `(φh ∘ φ₁,₁(g,f)) • φ₁,₁(h,gf) = (φ₁,₁(h,g) ∘ φf) • φ₁,₁(hg,f)`.
pub fn verify_lax_functor<T: TwoCategory>(src: &Fin2Cat, c: &T, phi: &Lax<T>) -> Report {
    let mut out = Report::new();
    if let Err(e) = shape_check::<T>(src, phi) {
        out.push(Violation::new("lax functor tables", format!("{e}")));
        return out;
    }
    let an = |a: usize| src.arrow_name(a);
    let p11 = |g: usize, f: usize| &phi.comp_cells[&(g, f)];
    for a in 0..src.arrow_count() {
        let (x, y) = src.arrow_ends(a);
        if c.arrow_src(&phi.on_arrows[a]) != phi.on_objects[x] || c.arrow_tgt(&phi.on_arrows[a]) != phi.on_objects[y] {
            out.push(Violation::new("lax functor endpoints", format!("arrow {}", an(a))));
        }
    }
    for s in 0..src.cell_count() {
        let (a, b) = src.cell_ends(s);
        if c.cell_src(&phi.on_cells[s]) != phi.on_arrows[a] || c.cell_tgt(&phi.on_cells[s]) != phi.on_arrows[b] {
            out.push(Violation::new("lax functor endpoints", format!("2-cell {}", src.cell_name(s))));
        }
    }
    let pairs = composable_pairs(src);
    for &(g, f) in &pairs {
        let gf = src.arrow_comp(g, f).unwrap_or(0);
        let cell = p11(g, f);
        if c.cell_src(cell) != phi.on_arrows[gf]
            || !eq_or(c.compose(&phi.on_arrows[g], &phi.on_arrows[f]), &c.cell_tgt(cell))
        {
            out.push(Violation::new("lax functor endpoints", format!("pair ({},{})", an(g), an(f))));
        }
    }
    if !out.is_empty() {
        return out;
    }
    for x in 0..src.object_count() {
        let ix = src.id_arrow(&x);
        if phi.on_arrows[ix] != c.id_arrow(&phi.on_objects[x]) {
            out.push(Violation::new("normality", format!("identity of {}", src.object_name(x))));
        }
    }
    for a in 0..src.arrow_count() {
        if phi.on_cells[src.id_cell(&a)] != c.id_cell(&phi.on_arrows[a]) {
            out.push(Violation::new("normality", format!("identity 2-cell of {}", an(a))));
        }
        let (x, y) = src.arrow_ends(a);
        let (ix, iy) = (src.id_arrow(&x), src.id_arrow(&y));
        let ida = c.id_cell(&phi.on_arrows[a]);
        if *p11(iy, a) != ida || *p11(a, ix) != ida {
            out.push(Violation::new("normality", format!("composition cells at {}", an(a))));
        }
    }
    for s in 0..src.cell_count() {
        for r in 0..src.cell_count() {
            if let Some(sr) = src.cell_vcomp(s, r) {
                if !eq_or(c.vcompose(&phi.on_cells[s], &phi.on_cells[r]), &phi.on_cells[sr]) {
                    out.push(Violation::new(
                        "functoriality on 2-cells",
                        format!("({},{})", src.cell_name(s), src.cell_name(r)),
                    ));
                }
            }
            // Naturality of φ₁,₁ in both variables at once.
            if let Some(sr) = src.cell_hcomp(s, r) {
                let (g, g2) = src.cell_ends(s);
                let (f, f2) = src.cell_ends(r);
                let lhs = c.vcompose(p11(g2, f2), &phi.on_cells[sr]);
                let rhs = c.hcompose(&phi.on_cells[s], &phi.on_cells[r]).and_then(|h| c.vcompose(&h, p11(g, f)));
                if lhs.is_err() || lhs.ok() != rhs.ok() {
                    out.push(Violation::new(
                        "naturality of composition cells",
                        format!("({},{})", src.cell_name(s), src.cell_name(r)),
                    ));
                }
            }
        }
    }
    for &(h, g) in &pairs {
        for &(g2, f) in &pairs {
            if g2 != g {
                continue;
            }
            let (hg, gf) = (src.arrow_comp(h, g).unwrap_or(0), src.arrow_comp(g, f).unwrap_or(0));
            let lhs = c.whisker_left(&phi.on_arrows[h], p11(g, f)).and_then(|x| c.vcompose(&x, p11(h, gf)));
            let rhs = c.whisker_right(p11(h, g), &phi.on_arrows[f]).and_then(|x| c.vcompose(&x, p11(hg, f)));
            if lhs.is_err() || lhs.ok() != rhs.ok() {
                out.push(Violation::new("lax functor coherence", format!("triple ({},{},{})", an(h), an(g), an(f))));
            }
        }
    }
    out
}

/// The image of a source simplex: triangles go to `φ₁,₁(u_kj, u_ji) • φ₂(u_kji)`.
pub fn nerve_image<T: TwoCategory>(c: &T, phi: &Lax<T>, s: &Label<Fin2Cat>) -> Result<Label<T>> {
    let n = s.dim();
    let missing = || Error::InvalidInput("source simplex is incomplete".into());
    let vertices = (0..=n)
        .map(|i| s.vertex(i).map(|&x| phi.on_objects[x].clone()).ok_or_else(missing))
        .collect::<Result<Vec<_>>>()?;
    let mut edges = Vec::new();
    for (j, i) in s.edge_indices() {
        edges.push(((j, i), phi.on_arrows[*s.edge(j, i).ok_or_else(missing)?].clone()));
    }
    let mut triangles = Vec::new();
    for (k, j, i) in s.triangle_indices() {
        let (kj, ji) = (*s.edge(k, j).ok_or_else(missing)?, *s.edge(j, i).ok_or_else(missing)?);
        let t = *s.triangle(k, j, i).ok_or_else(missing)?;
        let p = phi.comp_cells.get(&(kj, ji)).ok_or_else(missing)?;
        triangles.push(((k, j, i), c.vcompose(p, &phi.on_cells[t])?));
    }
    label_from_parts(vertices, edges, triangles)
}

/// A simplicial map `NC -> ND` recorded on the 2-skeleton: images of
/// objects, arrows, and of each 2-simplex `(g, f, t)` with `t: _ => g∘f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMapData<O, A, C> {
    pub vertices: Vec<O>,
    pub edges: Vec<A>,
    pub triangles: BTreeMap<(usize, usize, usize), C>,
}

pub type SimplicialMap<T> =
    SimplicialMapData<<T as TwoCategory>::Obj, <T as TwoCategory>::Arrow, <T as TwoCategory>::Cell>;

/// Source 2-simplices as `(g, f, t)`.
fn source_triangles(src: &Fin2Cat) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (g, f) in composable_pairs(src) {
        let gf = src.arrow_comp(g, f).unwrap_or(usize::MAX);
        for t in 0..src.cell_count() {
            if src.cell_ends(t).1 == gf {
                out.push((g, f, t));
            }
        }
    }
    out
}

pub fn lax_to_simplicial<T: TwoCategory>(src: &Fin2Cat, c: &T, phi: &Lax<T>) -> Result<SimplicialMap<T>> {
    shape_check::<T>(src, phi)?;
    let mut triangles = BTreeMap::new();
    for (g, f, t) in source_triangles(src) {
        triangles.insert((g, f, t), c.vcompose(&phi.comp_cells[&(g, f)], &phi.on_cells[t])?);
    }
    Ok(SimplicialMapData { vertices: phi.on_objects.clone(), edges: phi.on_arrows.clone(), triangles })
}

fn map_label<T: TwoCategory>(m: &SimplicialMap<T>, s: &Label<Fin2Cat>) -> Result<Label<T>> {
    let n = s.dim();
    let missing = || Error::NotSimplicial("image of a source simplex is undefined".into());
    let vertices = (0..=n).map(|i| m.vertices[*s.vertex(i).unwrap()].clone()).collect();
    let edges = s.edge_indices().into_iter().map(|(j, i)| ((j, i), m.edges[*s.edge(j, i).unwrap()].clone())).collect();
    let mut triangles = Vec::new();
    for (k, j, i) in s.triangle_indices() {
        let key = (*s.edge(k, j).unwrap(), *s.edge(j, i).unwrap(), *s.triangle(k, j, i).unwrap());
        triangles.push(((k, j, i), m.triangles.get(&key).ok_or_else(missing)?.clone()));
    }
    label_from_parts(vertices, edges, triangles)
}

/// Commutation with faces and degeneracies up to level 2, and that every
/// source 3-simplex lands on a 3-simplex.
pub fn verify_simplicial_map<T: TwoCategory>(src: &Fin2Cat, c: &T, m: &SimplicialMap<T>) -> Report {
    let mut out = Report::new();
    if m.vertices.len() != src.object_count() || m.edges.len() != src.arrow_count() {
        out.push(Violation::new("simplicial map tables", "sizes do not match the source"));
        return out;
    }
    for a in 0..src.arrow_count() {
        let (x, y) = src.arrow_ends(a);
        if c.arrow_src(&m.edges[a]) != m.vertices[x] || c.arrow_tgt(&m.edges[a]) != m.vertices[y] {
            out.push(Violation::new("faces of edges", format!("arrow {}", src.arrow_name(a))));
        }
    }
    for x in 0..src.object_count() {
        if m.edges[src.id_arrow(&x)] != c.id_arrow(&m.vertices[x]) {
            out.push(Violation::new("degeneracy of vertices", format!("object {}", src.object_name(x))));
        }
    }
    for (g, f, t) in source_triangles(src) {
        let at = || format!("triangle ({},{},{})", src.arrow_name(g), src.arrow_name(f), src.cell_name(t));
        let Some(img) = m.triangles.get(&(g, f, t)) else {
            out.push(Violation::new("simplicial map tables", at()));
            continue;
        };
        let a = src.cell_ends(t).0;
        if c.cell_src(img) != m.edges[a] || !eq_or(c.compose(&m.edges[g], &m.edges[f]), &c.cell_tgt(img)) {
            out.push(Violation::new("faces of triangles", at()));
        }
    }
    for f in 0..src.arrow_count() {
        let (x, y) = src.arrow_ends(f);
        let idf = src.id_cell(&f);
        let want = c.id_cell(&m.edges[f]);
        for key in [(f, src.id_arrow(&x), idf), (src.id_arrow(&y), f, idf)] {
            if m.triangles.get(&key) != Some(&want) {
                out.push(Violation::new("degeneracy of edges", format!("arrow {}", src.arrow_name(f))));
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for s in enumerate_brute_force(src, 3) {
        match map_label::<T>(m, &s) {
            Ok(img) => {
                if let Some(v) = validate_simplex(c, &img).first() {
                    out.push(Violation::new("image of a 3-simplex", format!("{v}")));
                }
            }
            Err(e) => out.push(Violation::new("image of a 3-simplex", format!("{e}"))),
        }
    }
    out
}

/// Reads `φ₁,₁(g, f)` off the triangle `(g, f, id)` and `φ₂(α: f => f')`
/// off the triangle `(id, f', α)`.
pub fn simplicial_to_lax<T: TwoCategory>(src: &Fin2Cat, c: &T, m: &SimplicialMap<T>) -> Result<Lax<T>> {
    if let Some(v) = verify_simplicial_map(src, c, m).first() {
        return Err(Error::NotSimplicial(format!("{v}")));
    }
    let missing = || Error::NotSimplicial("a triangle image is missing".into());
    let mut comp_cells = BTreeMap::new();
    for (g, f) in composable_pairs(src) {
        let gf = src.arrow_comp(g, f).ok_or_else(missing)?;
        comp_cells.insert((g, f), m.triangles.get(&(g, f, src.id_cell(&gf))).ok_or_else(missing)?.clone());
    }
    let mut on_cells = Vec::new();
    for t in 0..src.cell_count() {
        let b = src.cell_ends(t).1;
        let y = src.arrow_ends(b).1;
        on_cells.push(m.triangles.get(&(src.id_arrow(&y), b, t)).ok_or_else(missing)?.clone());
    }
    let phi = LaxFunctor { on_objects: m.vertices.clone(), on_arrows: m.edges.clone(), on_cells, comp_cells };
    if lax_to_simplicial(src, c, &phi)? != *m {
        return Err(Error::NotSimplicial("triangle images are not determined by the two special shapes".into()));
    }
    Ok(phi)
}

/// A lax transformation `H: φ => ψ`: `H_x: φx -> ψx` and
/// `H_f: H_y∘φ(f) => ψ(f)∘H_x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaxTransformation<A, C> {
    pub components: Vec<A>,
    pub cells: Vec<C>,
}

pub type LaxTrans<T> = LaxTransformation<<T as TwoCategory>::Arrow, <T as TwoCategory>::Cell>;

/// Normality, naturality over source 2-cells, and the prism
/// `(ψg ∘ H_f) • (H_g ∘ φf) • (H_z ∘ φ₁,₁(g,f)) = (ψ₁,₁(g,f) ∘ H_x) • H_{gf}`.
pub fn verify_lax_transformation<T: TwoCategory>(
    src: &Fin2Cat,
    c: &T,
    phi: &Lax<T>,
    psi: &Lax<T>,
    h: &LaxTrans<T>,
) -> Report {
    let mut out = Report::new();
    if h.components.len() != src.object_count() || h.cells.len() != src.arrow_count() {
        out.push(Violation::new("lax transformation tables", "sizes do not match the source"));
        return out;
    }
    for x in 0..src.object_count() {
        let hx = &h.components[x];
        if c.arrow_src(hx) != phi.on_objects[x] || c.arrow_tgt(hx) != psi.on_objects[x] {
            out.push(Violation::new("transformation endpoints", format!("object {}", src.object_name(x))));
        }
    }
    if !out.is_empty() {
        return out;
    }
    for f in 0..src.arrow_count() {
        let (x, y) = src.arrow_ends(f);
        let from = c.compose(&h.components[y], &phi.on_arrows[f]);
        let to = c.compose(&psi.on_arrows[f], &h.components[x]);
        if !eq_or(from, &c.cell_src(&h.cells[f])) || !eq_or(to, &c.cell_tgt(&h.cells[f])) {
            out.push(Violation::new("transformation endpoints", format!("arrow {}", src.arrow_name(f))));
        }
    }
    if !out.is_empty() {
        return out;
    }
    for x in 0..src.object_count() {
        if h.cells[src.id_arrow(&x)] != c.id_cell(&h.components[x]) {
            out.push(Violation::new("transformation normality", format!("object {}", src.object_name(x))));
        }
    }
    for s in 0..src.cell_count() {
        let (f, f2) = src.cell_ends(s);
        let (x, y) = src.arrow_ends(f);
        let lhs = c.whisker_right(&psi.on_cells[s], &h.components[x]).and_then(|a| c.vcompose(&a, &h.cells[f]));
        let rhs = c.whisker_left(&h.components[y], &phi.on_cells[s]).and_then(|a| c.vcompose(&h.cells[f2], &a));
        if lhs.is_err() || lhs.ok() != rhs.ok() {
            out.push(Violation::new("transformation naturality", format!("2-cell {}", src.cell_name(s))));
        }
    }
    for (g, f) in composable_pairs(src) {
        let (x, _) = src.arrow_ends(f);
        let z = src.arrow_ends(g).1;
        let gf = src.arrow_comp(g, f).unwrap_or(0);
        let lhs = (|| {
            let a = c.whisker_left(&psi.on_arrows[g], &h.cells[f])?;
            let b = c.whisker_right(&h.cells[g], &phi.on_arrows[f])?;
            let d = c.whisker_left(&h.components[z], &phi.comp_cells[&(g, f)])?;
            c.vcompose(&c.vcompose(&a, &b)?, &d)
        })();
        let rhs =
            c.whisker_right(&psi.comp_cells[&(g, f)], &h.components[x]).and_then(|a| c.vcompose(&a, &h.cells[gf]));
        if lhs.is_err() || lhs.ok() != rhs.ok() {
            out.push(Violation::new(
                "transformation prism",
                format!("pair ({},{})", src.arrow_name(g), src.arrow_name(f)),
            ));
        }
    }
    out
}

/// A simplicial homotopy `NC × Δ¹ -> ND` between the nerves of two lax
/// functors, for a source whose 2-cells are all identities. Recorded on the
/// nondegenerate simplices that cross from the `0` end to the `1` end:
/// `h[x]` on `(x, 0 -> 1)`, `diag[f]` on `(f, 0 -> 1)`, and the triangles
/// `t_a[(g, f)]: diag_{gf} => diag_g ∘ φ(f)` (pattern `001`) and
/// `t_b[(g, f)]: diag_{gf} => ψ(g) ∘ diag_f` (pattern `011`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyData<A, C> {
    pub h: Vec<A>,
    pub diag: Vec<A>,
    pub t_a: BTreeMap<(usize, usize), C>,
    pub t_b: BTreeMap<(usize, usize), C>,
}

pub type Homotopy<T> = HomotopyData<<T as TwoCategory>::Arrow, <T as TwoCategory>::Cell>;

fn require_one_category(src: &Fin2Cat) -> Result<()> {
    if (0..src.cell_count()).all(|s| src.cell_ends(s).0 == src.cell_ends(s).1) {
        Ok(())
    } else {
        Err(Error::InvalidInput("simplicial homotopies are only modelled over sources with identity 2-cells".into()))
    }
}

/// The image of the product simplex `(s, tau)` with `tau` monotone into `{0, 1}`.
fn homotopy_image<T: TwoCategory>(
    phi: &Lax<T>,
    psi: &Lax<T>,
    hd: &Homotopy<T>,
    s: &Label<Fin2Cat>,
    tau: &[bool],
) -> Result<Label<T>> {
    let n = s.dim();
    let missing = || Error::NotSimplicial("homotopy data is missing an entry".into());
    let mut out: Label<T> = SimplexLabel::empty(n);
    for i in 0..=n {
        let x = *s.vertex(i).unwrap();
        out.set_vertex(i, Some(if tau[i] { psi.on_objects[x].clone() } else { phi.on_objects[x].clone() }));
    }
    for (j, i) in s.edge_indices() {
        let a = *s.edge(j, i).unwrap();
        let e = match (tau[i], tau[j]) {
            (false, false) => phi.on_arrows[a].clone(),
            (true, true) => psi.on_arrows[a].clone(),
            _ => hd.diag[a].clone(),
        };
        out.set_edge(j, i, Some(e));
    }
    for (k, j, i) in s.triangle_indices() {
        let key = (*s.edge(k, j).unwrap(), *s.edge(j, i).unwrap());
        let cell = match (tau[i], tau[j], tau[k]) {
            (false, false, false) => phi.comp_cells.get(&key),
            (true, true, true) => psi.comp_cells.get(&key),
            (false, false, true) => hd.t_a.get(&key),
            _ => hd.t_b.get(&key),
        };
        out.set_triangle(k, j, i, Some(cell.ok_or_else(missing)?.clone()));
    }
    Ok(out)
}

/// Endpoints, the degeneracy constraints, and validity of the image of
/// every 3-simplex of `NC × Δ¹`.
pub fn verify_homotopy<T: TwoCategory>(src: &Fin2Cat, c: &T, phi: &Lax<T>, psi: &Lax<T>, hd: &Homotopy<T>) -> Report {
    let mut out = Report::new();
    if let Err(e) = require_one_category(src) {
        out.push(Violation::new("homotopy source", format!("{e}")));
        return out;
    }
    if hd.h.len() != src.object_count() || hd.diag.len() != src.arrow_count() {
        out.push(Violation::new("homotopy tables", "sizes do not match the source"));
        return out;
    }
    for x in 0..src.object_count() {
        if c.arrow_src(&hd.h[x]) != phi.on_objects[x] || c.arrow_tgt(&hd.h[x]) != psi.on_objects[x] {
            out.push(Violation::new("homotopy endpoints", format!("object {}", src.object_name(x))));
        }
        if hd.diag[src.id_arrow(&x)] != hd.h[x] {
            out.push(Violation::new("homotopy degeneracy", format!("object {}", src.object_name(x))));
        }
    }
    for f in 0..src.arrow_count() {
        let (x, y) = src.arrow_ends(f);
        if c.arrow_src(&hd.diag[f]) != phi.on_objects[x] || c.arrow_tgt(&hd.diag[f]) != psi.on_objects[y] {
            out.push(Violation::new("homotopy endpoints", format!("arrow {}", src.arrow_name(f))));
        }
        let (ix, iy) = (src.id_arrow(&x), src.id_arrow(&y));
        let idd = c.id_cell(&hd.diag[f]);
        if hd.t_a.get(&(f, ix)) != Some(&idd) || hd.t_b.get(&(iy, f)) != Some(&idd) {
            out.push(Violation::new("homotopy degeneracy", format!("arrow {}", src.arrow_name(f))));
        }
    }
    if !out.is_empty() {
        return out;
    }
    for lvl in 2..=3 {
        for s in enumerate_brute_force(src, lvl) {
            // `tau` is 0 on the first `z` vertices and 1 after.
            for z in 0..=lvl + 1 {
                let tau: Vec<bool> = (0..=lvl).map(|i| i >= z).collect();
                match homotopy_image::<T>(phi, psi, hd, &s, &tau) {
                    Ok(img) => {
                        if let Some(v) = validate_simplex(c, &img).first() {
                            out.push(Violation::new("image of a product simplex", format!("{v} (pattern {tau:?})")));
                        }
                    }
                    Err(e) => out.push(Violation::new("image of a product simplex", format!("{e}"))),
                }
            }
        }
    }
    out
}

/// `H_x = h_x` and `H_f = t_b(f, id) • t_a(id, f)⁻¹`.
pub fn homotopy_to_lax_transformation<T: TwoCategory>(
    src: &Fin2Cat,
    c: &T,
    phi: &Lax<T>,
    psi: &Lax<T>,
    hd: &Homotopy<T>,
) -> Result<LaxTrans<T>> {
    if let Some(v) = verify_homotopy(src, c, phi, psi, hd).first() {
        return Err(Error::NotSimplicial(format!("{v}")));
    }
    let mut cells = Vec::new();
    for f in 0..src.arrow_count() {
        let (x, y) = src.arrow_ends(f);
        let a = &hd.t_a[&(src.id_arrow(&y), f)];
        let b = &hd.t_b[&(f, src.id_arrow(&x))];
        let a_inv = c.invert_cell(a).ok_or_else(|| Error::NoFiller("a homotopy 2-cell is not invertible".into()))?;
        cells.push(c.vcompose(b, &a_inv)?);
    }
    let h = LaxTransformation { components: hd.h.clone(), cells };
    if let Some(v) = verify_lax_transformation(src, c, phi, psi, &h).first() {
        return Err(Error::InvalidInput(format!("{v}")));
    }
    Ok(h)
}

/// `diag_f = H_y ∘ φf`, `t_a(g,f) = H_z ∘ φ₁,₁(g,f)` and
/// `t_b(g,f) = (H_g ∘ φf) • (H_z ∘ φ₁,₁(g,f))`.
pub fn lax_transformation_to_homotopy<T: TwoCategory>(
    src: &Fin2Cat,
    c: &T,
    phi: &Lax<T>,
    h: &LaxTrans<T>,
) -> Result<Homotopy<T>> {
    require_one_category(src)?;
    let mut diag = Vec::new();
    for f in 0..src.arrow_count() {
        let y = src.arrow_ends(f).1;
        diag.push(c.compose(&h.components[y], &phi.on_arrows[f])?);
    }
    let (mut t_a, mut t_b) = (BTreeMap::new(), BTreeMap::new());
    for (g, f) in composable_pairs(src) {
        let z = src.arrow_ends(g).1;
        let a = c.whisker_left(&h.components[z], &phi.comp_cells[&(g, f)])?;
        let b = c.vcompose(&c.whisker_right(&h.cells[g], &phi.on_arrows[f])?, &a)?;
        t_a.insert((g, f), a);
        t_b.insert((g, f), b);
    }
    Ok(HomotopyData { h: h.components.clone(), diag, t_a, t_b })
}

/// The identity functor of a table 2-category.
pub fn identity_functor(src: &Fin2Cat) -> Lax<Fin2Cat> {
    let comp_cells = composable_pairs(src)
        .into_iter()
        .map(|(g, f)| ((g, f), src.id_cell(&src.arrow_comp(g, f).unwrap_or(0))))
        .collect();
    LaxFunctor {
        on_objects: (0..src.object_count()).collect(),
        on_arrows: (0..src.arrow_count()).collect(),
        on_cells: (0..src.cell_count()).collect(),
        comp_cells,
    }
}

/// The identity transformation of a lax functor.
pub fn identity_transformation<T: TwoCategory>(src: &Fin2Cat, c: &T, phi: &Lax<T>) -> LaxTrans<T> {
    let components: Vec<T::Arrow> = phi.on_objects.iter().map(|x| c.id_arrow(x)).collect();
    let cells = (0..src.arrow_count()).map(|f| c.id_cell(&phi.on_arrows[f])).collect();
    LaxTransformation { components, cells }
}
