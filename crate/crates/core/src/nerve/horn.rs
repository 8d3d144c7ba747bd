//! Horns `Λⁿₖ` and their fillers.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{endpoint_report, quadruples, tetrahedron_holds, validate_simplex, Label, SimplexLabel};
use crate::error::{Error, Result};
use crate::handle::TwoCategory;
use crate::report::{Report, Violation};

/// Whether the face of `Δⁿ` spanned by `s` lies in `Λⁿₖ`, the union of all
/// facets but the `k`-th.
pub fn in_horn(n: usize, k: usize, s: &[usize]) -> bool {
    (0..=n).any(|m| m != k && !s.contains(&m))
}

/// The data of a simplex restricted to `Λⁿₖ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Horn<O, A, C> {
    n: usize,
    k: usize,
    label: SimplexLabel<O, A, C>,
}

impl<O: Clone, A: Clone, C: Clone> Horn<O, A, C> {
    /// Checks that exactly the entries inside `Λⁿₖ` are present.
    pub fn new(k: usize, label: SimplexLabel<O, A, C>) -> Result<Self> {
        let n = label.dim();
        if n == 0 || k > n {
            return Err(Error::InvalidInput(format!("no horn Λ^{n}_{k}")));
        }
        let check = |present: bool, s: &[usize]| -> Result<()> {
            match (present, in_horn(n, k, s)) {
                (true, false) => Err(Error::InvalidInput(format!("{s:?} lies outside the horn"))),
                (false, true) => Err(Error::InvalidInput(format!("{s:?} is missing from the horn"))),
                _ => Ok(()),
            }
        };
        for i in 0..=n {
            check(label.vertex(i).is_some(), &[i])?;
        }
        for (j, i) in label.edge_indices() {
            check(label.edge(j, i).is_some(), &[i, j])?;
        }
        for (l, j, i) in label.triangle_indices() {
            check(label.triangle(l, j, i).is_some(), &[i, j, l])?;
        }
        Ok(Horn { n, k, label })
    }

    /// Forgets the data of a simplex that is not in `Λⁿₖ`.
    pub fn restrict(s: &SimplexLabel<O, A, C>, k: usize) -> Self {
        let n = s.dim();
        assert!(n > 0 && k <= n, "no horn Λ^{n}_{k}");
        Horn { n, k, label: s.restrict(|idx| in_horn(n, k, idx)) }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn label(&self) -> &SimplexLabel<O, A, C> {
        &self.label
    }
}

/// Endpoint compatibility plus every tetrahedron inside the horn.
pub fn validate_horn<T: TwoCategory>(c: &T, h: &Horn<T::Obj, T::Arrow, T::Cell>) -> Report {
    let mut out = Report::new();
    endpoint_report(c, &h.label, &mut out);
    if !out.is_empty() {
        return out;
    }
    for (l, k, j, i) in quadruples(h.n) {
        if !in_horn(h.n, h.k, &[i, j, k, l]) {
            continue;
        }
        match tetrahedron_holds(c, &h.label, l, k, j, i) {
            Ok(Some(false)) => {
                out.push(Violation::new("tetrahedron equation", format!("tetrahedron ({l},{k},{j},{i})")))
            }
            Err(e) => out.push(Violation::new("tetrahedron equation", format!("tetrahedron ({l},{k},{j},{i}): {e}"))),
            _ => {}
        }
    }
    out
}

fn first(rep: &Report) -> String {
    rep.first().map(|v| format!("{v}")).unwrap_or_default()
}

fn invert<T: TwoCategory>(c: &T, x: &T::Cell) -> Result<T::Cell> {
    c.invert_cell(x).ok_or_else(|| Error::NoFiller("a 2-cell needed for the filler is not invertible".into()))
}

/// Fills a horn. Inner 2-horns compose, outer 2-horns and outer 3-horns use
/// the handle's hooks, inner 3-horns compose inverted 2-cells, and for
/// `n ≥ 4` the horn already carries the whole 2-skeleton.
pub fn fill_horn<T: TwoCategory>(c: &T, h: &Horn<T::Obj, T::Arrow, T::Cell>) -> Result<Label<T>> {
    let rep = validate_horn(c, h);
    if !rep.is_empty() {
        return Err(Error::Incompatible(first(&rep)));
    }
    let mut s = h.label.clone();
    let need = |x: Option<&T::Arrow>| x.cloned().ok_or_else(|| Error::InvalidInput("horn data missing".into()));
    let needc = |x: Option<&T::Cell>| x.cloned().ok_or_else(|| Error::InvalidInput("horn data missing".into()));
    let no_filler = || Error::NoFiller(format!("no filler for Λ^{}_{}", h.n, h.k));
    match (h.n, h.k) {
        (1, k) => {
            let x = s.vertex(k).cloned().ok_or_else(|| Error::InvalidInput("horn vertex missing".into()))?;
            s.set_vertex(1 - k, Some(x.clone()));
            s.set_edge(1, 0, Some(c.id_arrow(&x)));
        }
        (2, 1) => {
            let g = c.compose(&need(s.edge(2, 1))?, &need(s.edge(1, 0))?)?;
            s.set_triangle(2, 1, 0, Some(c.id_cell(&g)));
            s.set_edge(2, 0, Some(g));
        }
        (2, 0) => {
            let (g, cell) = c.fill_horn20(&need(s.edge(1, 0))?, &need(s.edge(2, 0))?).ok_or_else(no_filler)?;
            s.set_edge(2, 1, Some(g));
            s.set_triangle(2, 1, 0, Some(cell));
        }
        (2, 2) => {
            let (f, cell) = c.fill_horn22(&need(s.edge(2, 1))?, &need(s.edge(2, 0))?).ok_or_else(no_filler)?;
            s.set_edge(1, 0, Some(f));
            s.set_triangle(2, 1, 0, Some(cell));
        }
        (3, k) => {
            let e = |j, i| need(s.edge(j, i));
            let t = |a, b, d| needc(s.triangle(a, b, d));
            let cell = match k {
                0 => {
                    // u321 ∘ u10 = (u32 ∘ u210) • u320 • u310⁻¹
                    let sigma = c.vcompose(
                        &c.vcompose(&c.whisker_left(&e(3, 2)?, &t(2, 1, 0)?)?, &t(3, 2, 0)?)?,
                        &invert(c, &t(3, 1, 0)?)?,
                    )?;
                    let b = c.compose(&e(3, 2)?, &e(2, 1)?)?;
                    c.factor_right(&sigma, &e(3, 1)?, &b, &e(1, 0)?).ok_or_else(no_filler)?
                }
                1 => c.vcompose(
                    &c.vcompose(
                        &invert(c, &c.whisker_left(&e(3, 2)?, &t(2, 1, 0)?)?)?,
                        &c.whisker_right(&t(3, 2, 1)?, &e(1, 0)?)?,
                    )?,
                    &t(3, 1, 0)?,
                )?,
                2 => c.vcompose(
                    &c.vcompose(
                        &invert(c, &c.whisker_right(&t(3, 2, 1)?, &e(1, 0)?)?)?,
                        &c.whisker_left(&e(3, 2)?, &t(2, 1, 0)?)?,
                    )?,
                    &t(3, 2, 0)?,
                )?,
                _ => {
                    // u32 ∘ u210 = (u321 ∘ u10) • u310 • u320⁻¹
                    let sigma = c.vcompose(
                        &c.vcompose(&c.whisker_right(&t(3, 2, 1)?, &e(1, 0)?)?, &t(3, 1, 0)?)?,
                        &invert(c, &t(3, 2, 0)?)?,
                    )?;
                    let b = c.compose(&e(2, 1)?, &e(1, 0)?)?;
                    c.factor_left(&sigma, &e(3, 2)?, &e(2, 0)?, &b).ok_or_else(no_filler)?
                }
            };
            let (a, b, d) = [(3, 2, 1), (3, 2, 0), (3, 1, 0), (2, 1, 0)][k];
            s.set_triangle(a, b, d, Some(cell));
        }
        _ => {}
    }
    let rep = validate_simplex(c, &s);
    if !rep.is_empty() {
        return Err(Error::NoFiller(first(&rep)));
    }
    Ok(s)
}

/// The unique `n`-simplex (`n ≥ 4`) with the given boundary, which already
/// holds the whole 2-skeleton.
pub fn coskeletal_extend<T: TwoCategory>(c: &T, boundary: &Label<T>) -> Result<Label<T>> {
    if boundary.dim() < 4 {
        return Err(Error::InvalidInput("coskeletal extension needs n ≥ 4".into()));
    }
    let rep = validate_simplex(c, boundary);
    if !rep.is_empty() {
        let all: Vec<String> = rep.iter().map(|v| format!("{v}")).collect();
        return Err(Error::Incompatible(all.join("; ")));
    }
    Ok(boundary.clone())
}
