//! Finite strict 2-categories presented by explicit tables.
//!
//! Objects, arrows and 2-cells are indices. `arrow_comp(g, f)` is `g ∘ f`,
//! `cell_hcomp(s, r)` is `s ∘ r` and `cell_vcomp(s, r)` is `s • r`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, FiniteMonoid};
use crate::groupoid::FinGroupoid;
use crate::handle::TwoCategory;
use crate::report::{Report, Violation};

/// Plain tables describing a finite 2-category. Composition entries are
/// `(left, right, result)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Fin2CatData {
    pub objects: Vec<String>,
    /// `(name, src object, tgt object)`
    pub arrows: Vec<(String, usize, usize)>,
    /// `(name, src arrow, tgt arrow)`
    pub cells: Vec<(String, usize, usize)>,
    pub id_arrow: Vec<usize>,
    pub id_cell: Vec<usize>,
    pub arrow_comp: Vec<(usize, usize, usize)>,
    pub cell_hcomp: Vec<(usize, usize, usize)>,
    pub cell_vcomp: Vec<(usize, usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fin2Cat {
    objects: Vec<String>,
    arrow_names: Vec<String>,
    arrow_ends: Vec<(usize, usize)>,
    cell_names: Vec<String>,
    cell_ends: Vec<(usize, usize)>,
    id_arrow: Vec<usize>,
    id_cell: Vec<usize>,
    arrow_comp: Vec<Option<usize>>,
    cell_hcomp: Vec<Option<usize>>,
    cell_vcomp: Vec<Option<usize>>,
}

fn check_unique(kind: &str, names: impl Iterator<Item = String>) -> Result<()> {
    let mut seen: Vec<String> = Vec::new();
    for n in names {
        if seen.contains(&n) {
            return Err(Error::InvalidTable(format!("duplicate {kind} {n:?}")));
        }
        seen.push(n);
    }
    Ok(())
}

fn fill_table(kind: &str, n: usize, entries: &[(usize, usize, usize)]) -> Result<Vec<Option<usize>>> {
    let mut t = vec![None; n * n];
    for &(a, b, c) in entries {
        if a >= n || b >= n || c >= n {
            return Err(Error::InvalidTable(format!("{kind} entry ({a},{b}) -> {c} out of range")));
        }
        if t[a * n + b].replace(c).is_some() {
            return Err(Error::InvalidTable(format!("{kind} entry ({a},{b}) given twice")));
        }
    }
    Ok(t)
}

fn table_entries(n: usize, t: &[Option<usize>]) -> Vec<(usize, usize, usize)> {
    (0..n * n).filter_map(|i| t[i].map(|c| (i / n, i % n, c))).collect()
}

impl Fin2Cat {
    /// Checks index ranges and duplicate entries only; the 2-category axioms
    /// are checked by [`verify_2category`].
    pub fn from_data(d: Fin2CatData) -> Result<Self> {
        let (no, na, nc) = (d.objects.len(), d.arrows.len(), d.cells.len());
        check_unique("object", d.objects.iter().cloned())?;
        check_unique("arrow", d.arrows.iter().map(|a| a.0.clone()))?;
        check_unique("2-cell", d.cells.iter().map(|a| a.0.clone()))?;
        if d.arrows.iter().any(|a| a.1 >= no || a.2 >= no) {
            return Err(Error::InvalidTable("arrow endpoint out of range".into()));
        }
        if d.cells.iter().any(|c| c.1 >= na || c.2 >= na) {
            return Err(Error::InvalidTable("2-cell endpoint out of range".into()));
        }
        if d.id_arrow.len() != no || d.id_arrow.iter().any(|&a| a >= na) {
            return Err(Error::InvalidTable("need one identity arrow per object".into()));
        }
        if d.id_cell.len() != na || d.id_cell.iter().any(|&c| c >= nc) {
            return Err(Error::InvalidTable("need one identity 2-cell per arrow".into()));
        }
        Ok(Fin2Cat {
            arrow_comp: fill_table("arrow composition", na, &d.arrow_comp)?,
            cell_hcomp: fill_table("horizontal composition", nc, &d.cell_hcomp)?,
            cell_vcomp: fill_table("vertical composition", nc, &d.cell_vcomp)?,
            objects: d.objects,
            arrow_names: d.arrows.iter().map(|a| a.0.clone()).collect(),
            arrow_ends: d.arrows.iter().map(|a| (a.1, a.2)).collect(),
            cell_names: d.cells.iter().map(|c| c.0.clone()).collect(),
            cell_ends: d.cells.iter().map(|c| (c.1, c.2)).collect(),
            id_arrow: d.id_arrow,
            id_cell: d.id_cell,
        })
    }

    pub fn to_data(&self) -> Fin2CatData {
        Fin2CatData {
            objects: self.objects.clone(),
            arrows: (0..self.arrow_count())
                .map(|a| (self.arrow_names[a].clone(), self.arrow_ends[a].0, self.arrow_ends[a].1))
                .collect(),
            cells: (0..self.cell_count())
                .map(|c| (self.cell_names[c].clone(), self.cell_ends[c].0, self.cell_ends[c].1))
                .collect(),
            id_arrow: self.id_arrow.clone(),
            id_cell: self.id_cell.clone(),
            arrow_comp: table_entries(self.arrow_count(), &self.arrow_comp),
            cell_hcomp: table_entries(self.cell_count(), &self.cell_hcomp),
            cell_vcomp: table_entries(self.cell_count(), &self.cell_vcomp),
        }
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrow_names.len()
    }

    pub fn cell_count(&self) -> usize {
        self.cell_names.len()
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.objects[x]
    }

    pub fn arrow_name(&self, a: usize) -> &str {
        &self.arrow_names[a]
    }

    pub fn cell_name(&self, c: usize) -> &str {
        &self.cell_names[c]
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|n| n == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrow_names.iter().position(|n| n == name)
    }

    pub fn cell_index(&self, name: &str) -> Option<usize> {
        self.cell_names.iter().position(|n| n == name)
    }

    pub fn arrow_ends(&self, a: usize) -> (usize, usize) {
        self.arrow_ends[a]
    }

    pub fn cell_ends(&self, c: usize) -> (usize, usize) {
        self.cell_ends[c]
    }

    pub fn arrow_comp(&self, g: usize, f: usize) -> Option<usize> {
        self.arrow_comp[g * self.arrow_count() + f]
    }

    pub fn cell_hcomp(&self, s: usize, r: usize) -> Option<usize> {
        self.cell_hcomp[s * self.cell_count() + r]
    }

    pub fn cell_vcomp(&self, s: usize, r: usize) -> Option<usize> {
        self.cell_vcomp[s * self.cell_count() + r]
    }

    pub fn set_arrow_comp(&mut self, g: usize, f: usize, v: Option<usize>) {
        let n = self.arrow_count();
        self.arrow_comp[g * n + f] = v;
    }

    pub fn set_cell_hcomp(&mut self, s: usize, r: usize, v: Option<usize>) {
        let n = self.cell_count();
        self.cell_hcomp[s * n + r] = v;
    }

    pub fn set_cell_vcomp(&mut self, s: usize, r: usize, v: Option<usize>) {
        let n = self.cell_count();
        self.cell_vcomp[s * n + r] = v;
    }

    /// Arrows `src -> tgt`.
    pub fn hom(&self, src: usize, tgt: usize) -> Vec<usize> {
        (0..self.arrow_count()).filter(|&a| self.arrow_ends[a] == (src, tgt)).collect()
    }

    /// 2-cells `a => b`.
    pub fn cells_between(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.cell_count()).filter(|&c| self.cell_ends[c] == (a, b)).collect()
    }

    /// A two-sided vertical inverse of `c`, by search.
    pub fn search_inverse(&self, c: usize) -> Option<usize> {
        let (a, b) = self.cell_ends[c];
        self.cells_between(b, a)
            .into_iter()
            .find(|&d| self.cell_vcomp(d, c) == Some(self.id_cell[a]) && self.cell_vcomp(c, d) == Some(self.id_cell[b]))
    }

    fn arrows_composable(&self, g: usize, f: usize) -> bool {
        self.arrow_ends[g].0 == self.arrow_ends[f].1
    }

    fn cells_hcomposable(&self, s: usize, r: usize) -> bool {
        self.arrows_composable(self.cell_ends[s].0, self.cell_ends[r].0)
    }

    /// The 1-groupoid with identity 2-cells only; cell `i` is the identity on
    /// arrow `i`.
    pub fn from_groupoid(g: &FinGroupoid) -> Fin2Cat {
        let d = g.to_data();
        let n = d.arrows.len();
        Fin2Cat::from_data(Fin2CatData {
            objects: d.objects,
            cells: d.arrows.iter().enumerate().map(|(i, a)| (format!("id[{}]", a.0), i, i)).collect(),
            arrows: d.arrows,
            id_arrow: d.unit,
            id_cell: (0..n).collect(),
            cell_hcomp: d.comp.clone(),
            arrow_comp: d.comp,
            cell_vcomp: (0..n).map(|i| (i, i, i)).collect(),
        })
        .expect("groupoid tables")
    }

    /// Tabulates a finite sample of any 2-category. The sample must contain
    /// the identities and be closed under every composite of its members.
    pub fn tabulate<T: TwoCategory>(
        c: &T,
        objects: &[T::Obj],
        arrows: &[T::Arrow],
        cells: &[T::Cell],
    ) -> Result<Fin2Cat> {
        let pos = |xs: &[_], x: &_, what: &str| -> Result<usize> {
            xs.iter().position(|y| y == x).ok_or_else(|| Error::Undefined(format!("sample not closed: {what}")))
        };
        let obj = |x: &T::Obj| pos(objects, x, "object");
        let arr = |f: &T::Arrow| {
            arrows.iter().position(|y| y == f).ok_or_else(|| Error::Undefined("sample not closed: arrow".into()))
        };
        let cel = |r: &T::Cell| {
            cells.iter().position(|y| y == r).ok_or_else(|| Error::Undefined("sample not closed: 2-cell".into()))
        };
        let mut d =
            Fin2CatData { objects: (0..objects.len()).map(|i| format!("x{i}")).collect(), ..Default::default() };
        for (i, f) in arrows.iter().enumerate() {
            d.arrows.push((format!("f{i}"), obj(&c.arrow_src(f))?, obj(&c.arrow_tgt(f))?));
        }
        for (i, r) in cells.iter().enumerate() {
            d.cells.push((format!("c{i}"), arr(&c.cell_src(r))?, arr(&c.cell_tgt(r))?));
        }
        d.id_arrow = objects.iter().map(|x| arr(&c.id_arrow(x))).collect::<Result<_>>()?;
        d.id_cell = arrows.iter().map(|f| cel(&c.id_cell(f))).collect::<Result<_>>()?;
        for (i, g) in arrows.iter().enumerate() {
            for (j, f) in arrows.iter().enumerate() {
                if c.arrow_src(g) == c.arrow_tgt(f) {
                    d.arrow_comp.push((i, j, arr(&c.compose(g, f)?)?));
                }
            }
        }
        for (i, s) in cells.iter().enumerate() {
            for (j, r) in cells.iter().enumerate() {
                let (sa, ra) = (c.cell_src(s), c.cell_src(r));
                if c.arrow_src(&sa) == c.arrow_tgt(&ra) {
                    d.cell_hcomp.push((i, j, cel(&c.hcompose(s, r)?)?));
                }
                if c.cell_tgt(r) == sa {
                    d.cell_vcomp.push((i, j, cel(&c.vcompose(s, r)?)?));
                }
            }
        }
        Fin2Cat::from_data(d)
    }
}

/// Every violated 2-category axiom instance: endpoint compatibility,
/// associativity and units for `∘` and `•`, and interchange.
pub fn verify_2category(c: &Fin2Cat) -> Report {
    let mut out = Report::new();
    let (na, nc) = (c.arrow_count(), c.cell_count());
    let an = |a: usize| c.arrow_name(a);
    let cn = |x: usize| c.cell_name(x);

    for x in 0..c.object_count() {
        if c.arrow_ends(c.id_arrow[x]) != (x, x) {
            out.push(Violation::new("identity arrow endpoints", format!("object {}", c.object_name(x))));
        }
    }
    for f in 0..na {
        if c.cell_ends(c.id_cell[f]) != (f, f) {
            out.push(Violation::new("identity 2-cell endpoints", format!("arrow {}", an(f))));
        }
    }
    for g in 0..na {
        for f in 0..na {
            let at = || format!("({},{})", an(g), an(f));
            match (c.arrows_composable(g, f), c.arrow_comp(g, f)) {
                (true, None) => out.push(Violation::new("arrow composition defined", at())),
                (false, Some(_)) => out.push(Violation::new("arrow composition domain", at())),
                (true, Some(gf)) if c.arrow_ends(gf) != (c.arrow_ends(f).0, c.arrow_ends(g).1) => {
                    out.push(Violation::new("arrow composite endpoints", at()))
                }
                _ => {}
            }
        }
    }
    for s in 0..nc {
        for r in 0..nc {
            let at = || format!("({},{})", cn(s), cn(r));
            let vdef = c.cell_ends(r).1 == c.cell_ends(s).0;
            match (vdef, c.cell_vcomp(s, r)) {
                (true, None) => out.push(Violation::new("vertical composition defined", at())),
                (false, Some(_)) => out.push(Violation::new("vertical composition domain", at())),
                (true, Some(v)) if c.cell_ends(v) != (c.cell_ends(r).0, c.cell_ends(s).1) => {
                    out.push(Violation::new("vertical composite endpoints", at()))
                }
                _ => {}
            }
            match (c.cells_hcomposable(s, r), c.cell_hcomp(s, r)) {
                (true, None) => out.push(Violation::new("horizontal composition defined", at())),
                (false, Some(_)) => out.push(Violation::new("horizontal composition domain", at())),
                (true, Some(h)) => {
                    let (s0, s1) = c.cell_ends(s);
                    let (r0, r1) = c.cell_ends(r);
                    if c.cell_ends(h)
                        != (c.arrow_comp(s0, r0).unwrap_or(usize::MAX), c.arrow_comp(s1, r1).unwrap_or(usize::MAX))
                    {
                        out.push(Violation::new("horizontal composite endpoints", at()));
                    }
                }
                _ => {}
            }
        }
    }
    if !out.is_empty() {
        return out;
    }

    let ac = |g, f| c.arrow_comp(g, f).expect("checked");
    let hc = |s, r| c.cell_hcomp(s, r).expect("checked");
    let vc = |s, r| c.cell_vcomp(s, r).expect("checked");

    for f in 0..na {
        let (x, y) = c.arrow_ends(f);
        if ac(c.id_arrow[y], f) != f || ac(f, c.id_arrow[x]) != f {
            out.push(Violation::new("unit law for arrow composition", format!("arrow {}", an(f))));
        }
    }
    for h in 0..na {
        for g in 0..na {
            if !c.arrows_composable(h, g) {
                continue;
            }
            for f in 0..na {
                if c.arrows_composable(g, f) && ac(ac(h, g), f) != ac(h, ac(g, f)) {
                    out.push(Violation::new(
                        "associativity of arrow composition",
                        format!("({},{},{})", an(h), an(g), an(f)),
                    ));
                }
            }
        }
    }
    for r in 0..nc {
        let (a, b) = c.cell_ends(r);
        if vc(c.id_cell[b], r) != r || vc(r, c.id_cell[a]) != r {
            out.push(Violation::new("unit law for vertical composition", format!("2-cell {}", cn(r))));
        }
        let (x, y) = c.arrow_ends(a);
        let (ix, iy) = (c.id_cell[c.id_arrow[x]], c.id_cell[c.id_arrow[y]]);
        if hc(iy, r) != r || hc(r, ix) != r {
            out.push(Violation::new("unit law for horizontal composition", format!("2-cell {}", cn(r))));
        }
    }
    for g in 0..na {
        for f in 0..na {
            if c.arrows_composable(g, f) && hc(c.id_cell[g], c.id_cell[f]) != c.id_cell[ac(g, f)] {
                out.push(Violation::new("identity 2-cells compose horizontally", format!("({},{})", an(g), an(f))));
            }
        }
    }
    for t in 0..nc {
        for s in 0..nc {
            let vts = c.cell_ends(s).1 == c.cell_ends(t).0;
            let hts = c.cells_hcomposable(t, s);
            for r in 0..nc {
                if vts && c.cell_ends(r).1 == c.cell_ends(s).0 && vc(vc(t, s), r) != vc(t, vc(s, r)) {
                    out.push(Violation::new(
                        "associativity of vertical composition",
                        format!("({},{},{})", cn(t), cn(s), cn(r)),
                    ));
                }
                if hts && c.cells_hcomposable(s, r) && hc(hc(t, s), r) != hc(t, hc(s, r)) {
                    out.push(Violation::new(
                        "associativity of horizontal composition",
                        format!("({},{},{})", cn(t), cn(s), cn(r)),
                    ));
                }
            }
        }
    }
    // Interchange over pairs of vertically composable pairs.
    let vpairs: Vec<(usize, usize)> = (0..nc)
        .flat_map(|s| (0..nc).map(move |r| (s, r)))
        .filter(|&(s, r)| c.cell_ends(r).1 == c.cell_ends(s).0)
        .collect();
    for &(s2, s1) in &vpairs {
        for &(r2, r1) in &vpairs {
            if !c.cells_hcomposable(s1, r1) {
                continue;
            }
            if hc(vc(s2, s1), vc(r2, r1)) != vc(hc(s2, r2), hc(s1, r1)) {
                out.push(Violation::new(
                    "interchange law",
                    format!("(({}•{})∘({}•{}))", cn(s2), cn(s1), cn(r2), cn(r1)),
                ));
            }
        }
    }
    out
}

/// A quasi-inverse of an arrow found by search, with 2-cells
/// `unit: id_src => g ∘ f` and `counit: id_tgt => f ∘ g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiInverseWitness {
    pub arrow: usize,
    pub inverse: usize,
    pub unit: usize,
    pub counit: usize,
}

/// A finite 2-category together with chosen vertical inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fin2Groupoid {
    cat: Fin2Cat,
    inv2: Vec<usize>,
}

impl Fin2Groupoid {
    pub fn new(cat: Fin2Cat, inv2: Vec<usize>) -> Result<Self> {
        if inv2.len() != cat.cell_count() || inv2.iter().any(|&c| c >= cat.cell_count()) {
            return Err(Error::InvalidTable("need one inverse per 2-cell".into()));
        }
        Ok(Fin2Groupoid { cat, inv2 })
    }

    /// Finds every vertical inverse by search; the error names the first
    /// 2-cell without one.
    pub fn from_category(cat: Fin2Cat) -> Result<Self> {
        let inv2 = (0..cat.cell_count())
            .map(|c| {
                cat.search_inverse(c)
                    .ok_or_else(|| Error::InvalidTable(format!("2-cell {} has no vertical inverse", cat.cell_name(c))))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Fin2Groupoid { cat, inv2 })
    }

    pub fn from_groupoid(g: &FinGroupoid) -> Self {
        let cat = Fin2Cat::from_groupoid(g);
        let inv2 = (0..cat.cell_count()).collect();
        Fin2Groupoid { cat, inv2 }
    }

    pub fn cat(&self) -> &Fin2Cat {
        &self.cat
    }

    pub fn inv2(&self, c: usize) -> usize {
        self.inv2[c]
    }

    pub fn inv2_table(&self) -> &[usize] {
        &self.inv2
    }

    /// First quasi-inverse of `f` found by search over parallel-reversed
    /// arrows and 2-cells.
    pub fn search_quasi_inverse(&self, f: usize) -> Option<QuasiInverseWitness> {
        search_quasi_inverse(&self.cat, f)
    }
}

fn search_quasi_inverse(c: &Fin2Cat, f: usize) -> Option<QuasiInverseWitness> {
    let (x, y) = c.arrow_ends(f);
    for g in c.hom(y, x) {
        let gf = c.arrow_comp(g, f)?;
        let fg = c.arrow_comp(f, g)?;
        let unit = c.cells_between(c.id_arrow[x], gf).into_iter().next();
        let counit = c.cells_between(c.id_arrow[y], fg).into_iter().next();
        if let (Some(unit), Some(counit)) = (unit, counit) {
            return Some(QuasiInverseWitness { arrow: f, inverse: g, unit, counit });
        }
    }
    None
}

/// Outcome of [`verify_2groupoid`]: violations plus one quasi-inverse witness
/// per arrow that has one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupoidReport {
    pub violations: Report,
    pub witnesses: Vec<QuasiInverseWitness>,
}

impl GroupoidReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// 2-category axioms, the inverse laws for `inv2` (which must only use
/// invertible cells) and a searched quasi-inverse for every arrow.
pub fn verify_2groupoid(g: &Fin2Groupoid) -> GroupoidReport {
    let c = &g.cat;
    let mut rep = GroupoidReport { violations: verify_2category(c), witnesses: Vec::new() };
    if !rep.violations.is_empty() {
        return rep;
    }
    for r in 0..c.cell_count() {
        let (a, b) = c.cell_ends(r);
        let i = g.inv2[r];
        if c.cell_ends(i) != (b, a)
            || c.cell_vcomp(i, r) != Some(c.id_cell[a])
            || c.cell_vcomp(r, i) != Some(c.id_cell[b])
        {
            rep.violations.push(Violation::new("2-cell invertibility", format!("2-cell {}", c.cell_name(r))));
        }
    }
    for f in 0..c.arrow_count() {
        match search_quasi_inverse(c, f) {
            Some(w) => rep.witnesses.push(w),
            None => {
                rep.violations.push(Violation::new("arrow quasi-invertibility", format!("arrow {}", c.arrow_name(f))))
            }
        }
    }
    rep
}

/// 2-cells of a table 2-category with no vertical inverse.
pub fn non_invertible_cells(c: &Fin2Cat) -> Report {
    (0..c.cell_count())
        .filter(|&r| c.search_inverse(r).is_none())
        .map(|r| Violation::new("2-cell invertibility", format!("2-cell {}", c.cell_name(r))))
        .collect()
}

/// One object, one arrow, the monoid as 2-cells, with both `∘` and `•` the
/// monoid law. Interchange holds exactly when the monoid is commutative.
pub fn monoid_delooping(m: &FiniteMonoid) -> Fin2Cat {
    let n = m.order();
    let mut d = Fin2CatData {
        objects: vec!["*".into()],
        arrows: vec![("1".into(), 0, 0)],
        cells: (0..n).map(|k| (format!("{k}"), 0, 0)).collect(),
        id_arrow: vec![0],
        id_cell: vec![m.identity()],
        arrow_comp: vec![(0, 0, 0)],
        ..Default::default()
    };
    for a in 0..n {
        for b in 0..n {
            d.cell_hcomp.push((a, b, m.mul(a, b)));
            d.cell_vcomp.push((a, b, m.mul(a, b)));
        }
    }
    Fin2Cat::from_data(d).expect("delooping tables")
}

/// The delooping of a finite group without the commutativity check; useful
/// for watching interchange fail.
pub fn delooping_unchecked(k: &FiniteGroup) -> Fin2Groupoid {
    let cat = monoid_delooping(k.as_monoid());
    let inv2 = (0..k.order()).map(|a| k.inv(a)).collect();
    Fin2Groupoid { cat, inv2 }
}

/// The delooping 2-groupoid of a finite abelian group.
pub fn delooping(k: &FiniteGroup) -> Result<Fin2Groupoid> {
    if let Some((a, b)) = k.noncommuting_pair() {
        return Err(Error::NotAbelian(format!("{a}·{b} != {b}·{a}, so interchange fails")));
    }
    Ok(delooping_unchecked(k))
}

/// Exhibits right composition with `f: x -> y` as an equivalence of hom
/// categories `G(y, z) -> G(x, z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightMultWitness {
    pub f: usize,
    pub z: usize,
    pub quasi_inverse: QuasiInverseWitness,
    /// `a ↦ a ∘ f` on arrows `y -> z`, as `(a, a ∘ f)`.
    pub on_arrows: Vec<(usize, usize)>,
    /// `σ ↦ σ ∘ f` on 2-cells between arrows `y -> z`.
    pub on_cells: Vec<(usize, usize)>,
    /// `b ↦ b ∘ g` on arrows `x -> z`.
    pub inverse_on_arrows: Vec<(usize, usize)>,
    pub inverse_on_cells: Vec<(usize, usize)>,
    /// `a => a ∘ f ∘ g`, the component `a ∘ counit`.
    pub unit_iso: Vec<(usize, usize)>,
    /// `b => b ∘ g ∘ f`, the component `b ∘ unit`.
    pub counit_iso: Vec<(usize, usize)>,
}

pub fn right_mult_equivalence(g: &Fin2Groupoid, f: usize, z: usize) -> Result<RightMultWitness> {
    let c = &g.cat;
    let fail = |m: String| Error::WitnessFailed(m);
    let (x, y) = c.arrow_ends(f);
    let q =
        search_quasi_inverse(c, f).ok_or_else(|| fail(format!("arrow {} has no quasi-inverse", c.arrow_name(f))))?;
    let gi = q.inverse;
    let ac = |a, b| c.arrow_comp(a, b).ok_or_else(|| fail("missing arrow composite".into()));
    let hc = |s, r| c.cell_hcomp(s, r).ok_or_else(|| fail("missing horizontal composite".into()));
    let vc = |s, r| c.cell_vcomp(s, r).ok_or_else(|| fail("missing vertical composite".into()));
    let cells_in = |arrows: &[usize]| -> Vec<usize> {
        (0..c.cell_count()).filter(|&s| arrows.contains(&c.cell_ends(s).0)).collect()
    };

    let hom_yz = c.hom(y, z);
    let hom_xz = c.hom(x, z);
    let cells_yz = cells_in(&hom_yz);
    let cells_xz = cells_in(&hom_xz);
    let (idf, idg) = (c.id_cell[f], c.id_cell[gi]);

    let mut w = RightMultWitness {
        f,
        z,
        quasi_inverse: q.clone(),
        on_arrows: Vec::new(),
        on_cells: Vec::new(),
        inverse_on_arrows: Vec::new(),
        inverse_on_cells: Vec::new(),
        unit_iso: Vec::new(),
        counit_iso: Vec::new(),
    };
    for &a in &hom_yz {
        w.on_arrows.push((a, ac(a, f)?));
        w.unit_iso.push((a, hc(c.id_cell[a], q.counit)?));
    }
    for &s in &cells_yz {
        w.on_cells.push((s, hc(s, idf)?));
    }
    for &b in &hom_xz {
        w.inverse_on_arrows.push((b, ac(b, gi)?));
        w.counit_iso.push((b, hc(c.id_cell[b], q.unit)?));
    }
    for &s in &cells_xz {
        w.inverse_on_cells.push((s, hc(s, idg)?));
    }

    // Verify: functoriality of both functors and naturality plus
    // invertibility of both isomorphisms.
    let lookup = |t: &[(usize, usize)], k: usize| t.iter().find(|e| e.0 == k).map(|e| e.1);
    let check_functor = |cells: &[usize], arrows_map: &[(usize, usize)], cells_map: &[(usize, usize)]| -> Result<()> {
        for &s in cells {
            let img = lookup(cells_map, s).ok_or_else(|| fail("cell missing from functor table".into()))?;
            let (a, b) = c.cell_ends(s);
            if c.cell_ends(img)
                != (lookup(arrows_map, a).unwrap_or(usize::MAX), lookup(arrows_map, b).unwrap_or(usize::MAX))
            {
                return Err(fail(format!("functor does not respect endpoints of {}", c.cell_name(s))));
            }
            for &r in cells {
                if c.cell_ends(r).1 == a {
                    let sr = vc(s, r)?;
                    let lhs = lookup(cells_map, sr).ok_or_else(|| fail("cell missing".into()))?;
                    let rhs = vc(img, lookup(cells_map, r).ok_or_else(|| fail("cell missing".into()))?)?;
                    if lhs != rhs {
                        return Err(fail(format!("functor does not preserve {}•{}", c.cell_name(s), c.cell_name(r))));
                    }
                }
            }
        }
        for &(a, fa) in arrows_map {
            if lookup(cells_map, c.id_cell[a]) != Some(c.id_cell[fa]) {
                return Err(fail(format!("functor does not preserve the identity on {}", c.arrow_name(a))));
            }
        }
        Ok(())
    };
    check_functor(&cells_yz, &w.on_arrows, &w.on_cells)?;
    check_functor(&cells_xz, &w.inverse_on_arrows, &w.inverse_on_cells)?;

    let check_iso = |cells: &[usize], iso: &[(usize, usize)], post: usize| -> Result<()> {
        for &(a, eta) in iso {
            if c.search_inverse(eta).is_none() {
                return Err(fail(format!("component at {} is not invertible", c.arrow_name(a))));
            }
        }
        for &s in cells {
            let (a, b) = c.cell_ends(s);
            let lhs = vc(lookup(iso, b).ok_or_else(|| fail("component missing".into()))?, s)?;
            let rhs = vc(hc(s, post)?, lookup(iso, a).ok_or_else(|| fail("component missing".into()))?)?;
            if lhs != rhs {
                return Err(fail(format!("naturality fails at {}", c.cell_name(s))));
            }
        }
        Ok(())
    };
    let idfg = c.id_cell[ac(f, gi)?];
    let idgf = c.id_cell[ac(gi, f)?];
    check_iso(&cells_yz, &w.unit_iso, idfg)?;
    check_iso(&cells_xz, &w.counit_iso, idgf)?;
    Ok(w)
}

impl TwoCategory for Fin2Cat {
    type Obj = usize;
    type Arrow = usize;
    type Cell = usize;

    fn arrow_src(&self, f: &usize) -> usize {
        self.arrow_ends[*f].0
    }

    fn arrow_tgt(&self, f: &usize) -> usize {
        self.arrow_ends[*f].1
    }

    fn cell_src(&self, a: &usize) -> usize {
        self.cell_ends[*a].0
    }

    fn cell_tgt(&self, a: &usize) -> usize {
        self.cell_ends[*a].1
    }

    fn id_arrow(&self, x: &usize) -> usize {
        self.id_arrow[*x]
    }

    fn id_cell(&self, f: &usize) -> usize {
        self.id_cell[*f]
    }

    fn compose(&self, g: &usize, f: &usize) -> Result<usize> {
        self.arrow_comp(*g, *f)
            .ok_or_else(|| Error::Undefined(format!("{} ∘ {}", self.arrow_name(*g), self.arrow_name(*f))))
    }

    fn hcompose(&self, s: &usize, r: &usize) -> Result<usize> {
        self.cell_hcomp(*s, *r)
            .ok_or_else(|| Error::Undefined(format!("{} ∘ {}", self.cell_name(*s), self.cell_name(*r))))
    }

    fn vcompose(&self, s: &usize, r: &usize) -> Result<usize> {
        self.cell_vcomp(*s, *r)
            .ok_or_else(|| Error::Undefined(format!("{} • {}", self.cell_name(*s), self.cell_name(*r))))
    }

    fn invert_cell(&self, a: &usize) -> Option<usize> {
        self.search_inverse(*a)
    }

    fn fill_horn20(&self, f: &usize, h: &usize) -> Option<(usize, usize)> {
        let (y, z) = (self.arrow_ends[*f].1, self.arrow_ends[*h].1);
        self.hom(y, z).into_iter().find_map(|g| {
            let gf = self.arrow_comp(g, *f)?;
            self.cells_between(*h, gf).into_iter().next().map(|c| (g, c))
        })
    }

    fn fill_horn22(&self, g: &usize, h: &usize) -> Option<(usize, usize)> {
        let (x, y) = (self.arrow_ends[*h].0, self.arrow_ends[*g].0);
        self.hom(x, y).into_iter().find_map(|f| {
            let gf = self.arrow_comp(*g, f)?;
            self.cells_between(*h, gf).into_iter().next().map(|c| (f, c))
        })
    }

    fn factor_right(&self, sigma: &usize, a: &usize, b: &usize, f: &usize) -> Option<usize> {
        let idf = self.id_cell[*f];
        self.cells_between(*a, *b).into_iter().find(|&t| self.cell_hcomp(t, idf) == Some(*sigma))
    }

    fn factor_left(&self, sigma: &usize, g: &usize, a: &usize, b: &usize) -> Option<usize> {
        let idg = self.id_cell[*g];
        self.cells_between(*a, *b).into_iter().find(|&t| self.cell_hcomp(idg, t) == Some(*sigma))
    }
}

impl TwoCategory for Fin2Groupoid {
    type Obj = usize;
    type Arrow = usize;
    type Cell = usize;

    fn arrow_src(&self, f: &usize) -> usize {
        self.cat.arrow_src(f)
    }

    fn arrow_tgt(&self, f: &usize) -> usize {
        self.cat.arrow_tgt(f)
    }

    fn cell_src(&self, a: &usize) -> usize {
        self.cat.cell_src(a)
    }

    fn cell_tgt(&self, a: &usize) -> usize {
        self.cat.cell_tgt(a)
    }

    fn id_arrow(&self, x: &usize) -> usize {
        self.cat.id_arrow(x)
    }

    fn id_cell(&self, f: &usize) -> usize {
        self.cat.id_cell(f)
    }

    fn compose(&self, g: &usize, f: &usize) -> Result<usize> {
        self.cat.compose(g, f)
    }

    fn hcompose(&self, s: &usize, r: &usize) -> Result<usize> {
        self.cat.hcompose(s, r)
    }

    fn vcompose(&self, s: &usize, r: &usize) -> Result<usize> {
        self.cat.vcompose(s, r)
    }

    fn invert_cell(&self, a: &usize) -> Option<usize> {
        Some(self.inv2[*a])
    }

    fn fill_horn20(&self, f: &usize, h: &usize) -> Option<(usize, usize)> {
        self.cat.fill_horn20(f, h)
    }

    fn fill_horn22(&self, g: &usize, h: &usize) -> Option<(usize, usize)> {
        self.cat.fill_horn22(g, h)
    }

    fn factor_right(&self, sigma: &usize, a: &usize, b: &usize, f: &usize) -> Option<usize> {
        self.cat.factor_right(sigma, a, b, f)
    }

    fn factor_left(&self, sigma: &usize, g: &usize, a: &usize, b: &usize) -> Option<usize> {
        self.cat.factor_left(sigma, g, a, b)
    }
}
