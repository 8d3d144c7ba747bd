//! The interface shared by every 2-category the nerve machinery works over.
//!
//! Both finite table-presented 2-categories and the general linear
//! 2-groupoid implement [`TwoCategory`]. Composition is written in the usual
//! order: `compose(g, f)` is `g ∘ f` and `vcompose(s, r)` is `s • r`, meaning
//! `r` first.

use core::fmt::Debug;

use crate::error::Result;

pub trait TwoCategory {
    type Obj: Clone + PartialEq + Debug;
    type Arrow: Clone + PartialEq + Debug;
    type Cell: Clone + PartialEq + Debug;

    fn arrow_src(&self, f: &Self::Arrow) -> Self::Obj;
    fn arrow_tgt(&self, f: &Self::Arrow) -> Self::Obj;
    fn cell_src(&self, a: &Self::Cell) -> Self::Arrow;
    fn cell_tgt(&self, a: &Self::Cell) -> Self::Arrow;

    fn id_arrow(&self, x: &Self::Obj) -> Self::Arrow;
    fn id_cell(&self, f: &Self::Arrow) -> Self::Cell;

    /// `g ∘ f`
    fn compose(&self, g: &Self::Arrow, f: &Self::Arrow) -> Result<Self::Arrow>;
    /// Horizontal composite `s ∘ r`, with `r` on the right.
    fn hcompose(&self, s: &Self::Cell, r: &Self::Cell) -> Result<Self::Cell>;
    /// Vertical composite `s • r`: first `r`, then `s`.
    fn vcompose(&self, s: &Self::Cell, r: &Self::Cell) -> Result<Self::Cell>;
    /// Two-sided vertical inverse, if there is one.
    fn invert_cell(&self, a: &Self::Cell) -> Option<Self::Cell>;

    /// `g ∘ r`, i.e. `id_g ∘ r`.
    fn whisker_left(&self, g: &Self::Arrow, r: &Self::Cell) -> Result<Self::Cell> {
        self.hcompose(&self.id_cell(g), r)
    }

    /// `r ∘ f`, i.e. `r ∘ id_f`.
    fn whisker_right(&self, r: &Self::Cell, f: &Self::Arrow) -> Result<Self::Cell> {
        self.hcompose(r, &self.id_cell(f))
    }

    /// Outer 2-horn at vertex 0: given `f: x -> y` and `h: x -> z`, some
    /// `g: y -> z` with a cell `h => g ∘ f`.
    fn fill_horn20(&self, f: &Self::Arrow, h: &Self::Arrow) -> Option<(Self::Arrow, Self::Cell)>;

    /// Outer 2-horn at vertex 2: given `g: y -> z` and `h: x -> z`, some
    /// `f: x -> y` with a cell `h => g ∘ f`.
    fn fill_horn22(&self, g: &Self::Arrow, h: &Self::Arrow) -> Option<(Self::Arrow, Self::Cell)>;

    /// The cell `t: a => b` with `t ∘ f = sigma`, when right whiskering by
    /// `f` is bijective on these hom-sets.
    fn factor_right(&self, sigma: &Self::Cell, a: &Self::Arrow, b: &Self::Arrow, f: &Self::Arrow)
        -> Option<Self::Cell>;

    /// The cell `t: a => b` with `g ∘ t = sigma`.
    fn factor_left(&self, sigma: &Self::Cell, g: &Self::Arrow, a: &Self::Arrow, b: &Self::Arrow) -> Option<Self::Cell>;
}
