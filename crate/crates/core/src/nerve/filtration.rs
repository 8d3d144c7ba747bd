//! The decreasing filtration `F_kΔⁿ` and the recursion that rebuilds a
//! simplex one stage at a time.
//!
//! `F_kΔⁿ` holds the faces spanned by `a(0) < ... < a(m)` with `a(m) < n` or
//! `a(0) ≥ k`. Going from stage `k + 1` to stage `k` adds the edge `u_{n,k}`
//! and the triangles `u_{n,l,k}`; everything is forced by the single 2-cell
//! `u_{n,k+1,k}`.

use alloc::format;

use super::{validate_label, Label, SimplexLabel};
use crate::error::{Error, Result};
use crate::handle::TwoCategory;

pub fn in_filtration(n: usize, k: usize, s: &[usize]) -> bool {
    s.iter().all(|&a| a < n) || s.iter().all(|&a| a >= k)
}

/// A label restricted to `F_kΔⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiltrationStage<O, A, C> {
    k: usize,
    label: SimplexLabel<O, A, C>,
}

impl<O: Clone, A: Clone, C: Clone> FiltrationStage<O, A, C> {
    pub fn dim(&self) -> usize {
        self.label.dim()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn label(&self) -> &SimplexLabel<O, A, C> {
        &self.label
    }

    pub fn into_label(self) -> SimplexLabel<O, A, C> {
        self.label
    }
}

pub fn strip_to_filtration<O: Clone, A: Clone, C: Clone>(
    s: &SimplexLabel<O, A, C>,
    k: usize,
) -> FiltrationStage<O, A, C> {
    let n = s.dim();
    assert!(k <= n, "stage {k} beyond [{n}]");
    FiltrationStage { k, label: s.restrict(|idx| in_filtration(n, k, idx)) }
}

/// Extends stage `k + 1` to stage `k` using `alpha = u_{n,k+1,k}`. At
/// `k = n - 1` the triangle is degenerate and `alpha` must be the identity
/// 2-cell on the new edge `u_{n,n-1}`.
pub fn reconstruct_filtration<T: TwoCategory>(
    c: &T,
    stage: &FiltrationStage<T::Obj, T::Arrow, T::Cell>,
    alpha: &T::Cell,
) -> Result<FiltrationStage<T::Obj, T::Arrow, T::Cell>> {
    let n = stage.dim();
    if stage.k == 0 {
        return Err(Error::InvalidInput("stage 0 is already the whole simplex".into()));
    }
    let k = stage.k - 1;
    let s = &stage.label;
    let mismatch = |m: &str| Error::EndpointMismatch(format!("stage {k}: {m}"));
    let vertex = |i: usize| s.vertex(i).cloned().ok_or_else(|| mismatch("vertex missing"));
    let edge = |j: usize, i: usize| -> Result<T::Arrow> {
        if i == j {
            Ok(c.id_arrow(&vertex(i)?))
        } else {
            s.edge(j, i).cloned().ok_or_else(|| mismatch("edge missing"))
        }
    };

    let unk = c.cell_src(alpha);
    if c.arrow_src(&unk) != vertex(k)? || c.arrow_tgt(&unk) != vertex(n)? {
        return Err(mismatch("the source of alpha does not run from u_k to u_n"));
    }
    let mut out = s.clone();
    out.set_edge(n, k, Some(unk.clone()));
    if k + 1 == n {
        if *alpha != c.id_cell(&unk) {
            return Err(mismatch("the degenerate triangle needs an identity 2-cell"));
        }
    } else {
        let uk1k = edge(k + 1, k)?;
        if c.cell_tgt(alpha) != c.compose(&edge(n, k + 1)?, &uk1k)? {
            return Err(mismatch("the target of alpha is not u_{n,k+1} ∘ u_{k+1,k}"));
        }
        out.set_triangle(n, k + 1, k, Some(alpha.clone()));
        let tri = |a, b, d| s.triangle(a, b, d).cloned().ok_or_else(|| mismatch("triangle missing"));
        for l in k + 2..n {
            let left = c.whisker_left(&edge(n, l)?, &tri(l, k + 1, k)?)?;
            let left_inv = c
                .invert_cell(&left)
                .ok_or_else(|| Error::NoFiller(format!("stage {k}: u_{{n,l}} ∘ u_{{l,k+1,k}} is not invertible")))?;
            let right = c.whisker_right(&tri(n, l, k + 1)?, &uk1k)?;
            let cell = c.vcompose(&c.vcompose(&left_inv, &right)?, alpha)?;
            out.set_triangle(n, l, k, Some(cell));
        }
    }
    let rep = validate_label(c, &out);
    if let Some(v) = rep.first() {
        return Err(Error::Incompatible(format!("{v}")));
    }
    Ok(FiltrationStage { k, label: out })
}

/// Strips `s` to stage `n` and rebuilds it through every stage, feeding the
/// original `u_{n,k+1,k}` at each step.
pub fn rebuild_through_filtration<T: TwoCategory>(c: &T, s: &Label<T>) -> Result<Label<T>> {
    let n = s.dim();
    let mut stage = strip_to_filtration(s, n);
    for k in (0..n).rev() {
        let alpha = if k + 1 == n {
            c.id_cell(s.edge(n, k).ok_or_else(|| Error::InvalidInput("edge missing".into()))?)
        } else {
            s.triangle(n, k + 1, k).cloned().ok_or_else(|| Error::InvalidInput("triangle missing".into()))?
        };
        stage = reconstruct_filtration(c, &stage, &alpha)?;
    }
    Ok(stage.into_label())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::nerve::label_from_parts;
    use crate::twocat::{delooping, Fin2Groupoid};
    use alloc::vec;

    #[test]
    fn stage_zero_is_everything_and_stage_n_is_the_last_facet() {
        assert!(in_filtration(3, 0, &[0, 3]));
        assert!(in_filtration(3, 3, &[0, 1, 2]));
        assert!(!in_filtration(3, 3, &[2, 3]));
        assert!(in_filtration(3, 2, &[2, 3]));
    }

    #[test]
    fn round_trip_in_a_delooping() {
        let c = delooping(&FiniteGroup::cyclic(5)).unwrap();
        let s: Label<Fin2Groupoid> = label_from_parts(
            vec![0; 4],
            (0..4).flat_map(|j| (0..j).map(move |i| ((j, i), 0))).collect(),
            vec![((2, 1, 0), 1), ((3, 1, 0), 3), ((3, 2, 0), 4), ((3, 2, 1), 2)],
        )
        .unwrap();
        assert_eq!(rebuild_through_filtration(&c, &s).unwrap(), s);
    }

    #[test]
    fn wrong_alpha_endpoints_are_rejected() {
        let c = crate::twocat::Fin2Groupoid::from_groupoid(&crate::groupoid::pair_groupoid_n(2));
        let s: Label<Fin2Groupoid> =
            label_from_parts(vec![0, 1, 1], vec![((1, 0), 2), ((2, 0), 2), ((2, 1), 3)], vec![((2, 1, 0), 2)]).unwrap();
        let st = strip_to_filtration(&s, 1);
        // The identity on arrow 0 (p0<-p0) has the wrong endpoints.
        assert!(matches!(reconstruct_filtration(&c, &st, &0), Err(Error::EndpointMismatch(_))));
        assert_eq!(reconstruct_filtration(&c, &st, &2).unwrap().into_label(), s);
    }
}
