//! Finite 1-groupoids: constructors, verification, the projection to the pair
//! groupoid and the nerve as chains of composable arrows.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::report::{Report, Violation};

/// Plain tables describing a finite groupoid. `comp` entries are
/// `(h, g, h∘g)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GroupoidData {
    pub objects: Vec<String>,
    /// `(name, src, tgt)`
    pub arrows: Vec<(String, usize, usize)>,
    pub comp: Vec<(usize, usize, usize)>,
    pub unit: Vec<usize>,
    pub inv: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinGroupoid {
    objects: Vec<String>,
    names: Vec<String>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    /// `comp[h * n + g] = h∘g`
    comp: Vec<Option<usize>>,
    unit: Vec<usize>,
    inv: Vec<usize>,
}

/// A pair `(h, g)` of arrows with `src h = tgt g`, read as `h∘g`.
pub type ComposablePair = (usize, usize);
/// A triple `(h, g, f)` with `h∘g` and `g∘f` defined.
pub type ComposableTriple = (usize, usize, usize);

impl FinGroupoid {
    /// Builds the tables after checking only that every index is in range
    /// and no composite is given twice; see [`verify_groupoid`] for the axioms.
    pub fn from_data(data: GroupoidData) -> Result<Self> {
        let no = data.objects.len();
        let na = data.arrows.len();
        for (i, o) in data.objects.iter().enumerate() {
            if data.objects[..i].contains(o) {
                return Err(Error::InvalidTable(format!("duplicate object {o:?}")));
            }
        }
        for (i, (name, s, t)) in data.arrows.iter().enumerate() {
            if data.arrows[..i].iter().any(|a| &a.0 == name) {
                return Err(Error::InvalidTable(format!("duplicate arrow {name:?}")));
            }
            if *s >= no || *t >= no {
                return Err(Error::InvalidTable(format!("arrow {name:?} has an endpoint out of range")));
            }
        }
        if data.unit.len() != no || data.unit.iter().any(|&u| u >= na) {
            return Err(Error::InvalidTable("unit table must give one arrow per object".into()));
        }
        if data.inv.len() != na || data.inv.iter().any(|&u| u >= na) {
            return Err(Error::InvalidTable("inverse table must give one arrow per arrow".into()));
        }
        let mut comp = vec![None; na * na];
        for &(h, g, hg) in &data.comp {
            if h >= na || g >= na || hg >= na {
                return Err(Error::InvalidTable(format!("composite ({h},{g}) -> {hg} out of range")));
            }
            if comp[h * na + g].replace(hg).is_some() {
                return Err(Error::InvalidTable(format!("composite ({h},{g}) given twice")));
            }
        }
        Ok(FinGroupoid {
            objects: data.objects,
            names: data.arrows.iter().map(|a| a.0.clone()).collect(),
            src: data.arrows.iter().map(|a| a.1).collect(),
            tgt: data.arrows.iter().map(|a| a.2).collect(),
            comp,
            unit: data.unit,
            inv: data.inv,
        })
    }

    /// [`from_data`](Self::from_data) followed by full verification.
    pub fn new(data: GroupoidData) -> Result<Self> {
        let g = Self::from_data(data)?;
        match verify_groupoid(&g).into_iter().next() {
            None => Ok(g),
            Some(v) => Err(Error::InvalidTable(format!("{v}"))),
        }
    }

    pub fn to_data(&self) -> GroupoidData {
        let na = self.arrow_count();
        let mut comp = Vec::new();
        for h in 0..na {
            for g in 0..na {
                if let Some(hg) = self.comp[h * na + g] {
                    comp.push((h, g, hg));
                }
            }
        }
        GroupoidData {
            objects: self.objects.clone(),
            arrows: (0..na).map(|a| (self.names[a].clone(), self.src[a], self.tgt[a])).collect(),
            comp,
            unit: self.unit.clone(),
            inv: self.inv.clone(),
        }
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.names.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.objects[x]
    }

    pub fn arrow_name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|o| o == name)
    }

    pub fn src(&self, a: usize) -> usize {
        self.src[a]
    }

    pub fn tgt(&self, a: usize) -> usize {
        self.tgt[a]
    }

    pub fn unit(&self, x: usize) -> usize {
        self.unit[x]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.unit[self.src[a]] == a
    }

    /// `h∘g`, if tabulated.
    pub fn comp(&self, h: usize, g: usize) -> Option<usize> {
        self.comp[h * self.arrow_count() + g]
    }

    /// `h∘g` for a pair known to be composable in a verified groupoid.
    pub fn compose(&self, h: usize, g: usize) -> usize {
        self.comp(h, g).expect("composable pair in a verified groupoid")
    }

    pub fn composable_pairs(&self) -> Vec<ComposablePair> {
        let n = self.arrow_count();
        let mut out = Vec::new();
        for h in 0..n {
            for g in 0..n {
                if self.src[h] == self.tgt[g] {
                    out.push((h, g));
                }
            }
        }
        out
    }

    pub fn composable_triples(&self) -> Vec<ComposableTriple> {
        let mut out = Vec::new();
        for (h, g) in self.composable_pairs() {
            for f in 0..self.arrow_count() {
                if self.tgt[f] == self.src[g] {
                    out.push((h, g, f));
                }
            }
        }
        out
    }
}

/// Every violated groupoid axiom instance.
pub fn verify_groupoid(g: &FinGroupoid) -> Report {
    let mut out = Report::new();
    let n = g.arrow_count();
    let name = |a: usize| g.arrow_name(a);
    for x in 0..g.object_count() {
        let u = g.unit[x];
        if g.src[u] != x || g.tgt[u] != x {
            out.push(Violation::new("unit endpoints", format!("object {}", g.object_name(x))));
        }
    }
    for h in 0..n {
        for f in 0..n {
            let composable = g.src[h] == g.tgt[f];
            match (composable, g.comp(h, f)) {
                (true, None) => {
                    out.push(Violation::new("composition table", format!("missing ({},{})", name(h), name(f))))
                }
                (false, Some(_)) => {
                    out.push(Violation::new("composition table", format!("non-composable ({},{})", name(h), name(f))))
                }
                (true, Some(hf)) if g.src[hf] != g.src[f] || g.tgt[hf] != g.tgt[h] => {
                    out.push(Violation::new("composite endpoints", format!("({},{})", name(h), name(f))))
                }
                _ => {}
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for f in 0..n {
        if g.compose(g.unit[g.tgt[f]], f) != f || g.compose(f, g.unit[g.src[f]]) != f {
            out.push(Violation::new("unit law", format!("arrow {}", name(f))));
        }
        let i = g.inv[f];
        if g.src[i] != g.tgt[f] || g.tgt[i] != g.src[f] {
            out.push(Violation::new("inverse endpoints", format!("arrow {}", name(f))));
        } else if g.compose(i, f) != g.unit[g.src[f]] || g.compose(f, i) != g.unit[g.tgt[f]] {
            out.push(Violation::new("inverse law", format!("arrow {}", name(f))));
        }
    }
    for (h, k, f) in g.composable_triples() {
        if g.compose(g.compose(h, k), f) != g.compose(h, g.compose(k, f)) {
            out.push(Violation::new("associativity", format!("({},{},{})", name(h), name(k), name(f))));
        }
    }
    out
}

/// The pair groupoid on the given points; the arrow `(y, x)` has index
/// `y * n + x` and is named `"y<-x"`.
pub fn pair_groupoid(points: &[String]) -> FinGroupoid {
    let n = points.len();
    let idx = |y: usize, x: usize| y * n + x;
    let mut data = GroupoidData { objects: points.to_vec(), ..Default::default() };
    for y in 0..n {
        for x in 0..n {
            data.arrows.push((format!("{}<-{}", points[y], points[x]), x, y));
            data.inv.push(idx(x, y));
        }
    }
    for z in 0..n {
        for y in 0..n {
            for x in 0..n {
                data.comp.push((idx(z, y), idx(y, x), idx(z, x)));
            }
        }
    }
    data.unit = (0..n).map(|x| idx(x, x)).collect();
    FinGroupoid::from_data(data).expect("pair groupoid tables")
}

/// Points named `p0, p1, ...`.
pub fn pair_groupoid_n(n: usize) -> FinGroupoid {
    let pts: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    pair_groupoid(&pts)
}

/// The action groupoid of `act[g][x] = g·x`; the arrow `(g, x): x -> g·x` has
/// index `g * |set| + x` and is named `"g*x"`.
pub fn action_groupoid(group: &FiniteGroup, set: &[String], act: &[Vec<usize>]) -> Result<FinGroupoid> {
    let m = set.len();
    if act.len() != group.order() || act.iter().any(|row| row.len() != m || row.iter().any(|&y| y >= m)) {
        return Err(Error::ActionLaw("action table must be |G| x |X| with values in X".into()));
    }
    let e = group.identity();
    for x in 0..m {
        if act[e][x] != x {
            return Err(Error::ActionLaw(format!("identity moves {}", set[x])));
        }
    }
    for a in 0..group.order() {
        for b in 0..group.order() {
            for x in 0..m {
                if act[group.mul(a, b)][x] != act[a][act[b][x]] {
                    return Err(Error::ActionLaw(format!("({a}·{b})·{} != {a}·({b}·{})", set[x], set[x])));
                }
            }
        }
    }
    let idx = |g: usize, x: usize| g * m + x;
    let mut data = GroupoidData { objects: set.to_vec(), ..Default::default() };
    for g in 0..group.order() {
        for x in 0..m {
            data.arrows.push((format!("{g}*{}", set[x]), x, act[g][x]));
            data.inv.push(idx(group.inv(g), act[g][x]));
        }
    }
    for h in 0..group.order() {
        for g in 0..group.order() {
            for x in 0..m {
                data.comp.push((idx(h, act[g][x]), idx(g, x), idx(group.mul(h, g), x)));
            }
        }
    }
    data.unit = (0..m).map(|x| idx(e, x)).collect();
    FinGroupoid::from_data(data)
}

/// `ℤ/n` acting on itself by translation, points named `0..n`.
pub fn cyclic_translation_groupoid(n: usize) -> FinGroupoid {
    let g = FiniteGroup::cyclic(n);
    let set: Vec<String> = (0..n).map(|i| format!("{i}")).collect();
    let act: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|x| (a + x) % n).collect()).collect();
    action_groupoid(&g, &set, &act).expect("translation action")
}

/// The functor `a ↦ (tgt a, src a)` into the pair groupoid on the objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairProjection {
    pub pair: FinGroupoid,
    pub on_arrows: Vec<usize>,
}

impl PairProjection {
    pub fn is_functor(&self, g: &FinGroupoid) -> bool {
        let p = &self.pair;
        (0..g.object_count()).all(|x| self.on_arrows[g.unit(x)] == p.unit(x))
            && g.composable_pairs()
                .into_iter()
                .all(|(h, k)| self.on_arrows[g.compose(h, k)] == p.compose(self.on_arrows[h], self.on_arrows[k]))
    }

    /// Pair-groupoid arrows hit by the projection.
    pub fn image(&self) -> Vec<usize> {
        let mut im = self.on_arrows.clone();
        im.sort_unstable();
        im.dedup();
        im
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.pair.arrow_count()
    }
}

pub fn projection_to_pair(g: &FinGroupoid) -> PairProjection {
    let pair = pair_groupoid(g.objects());
    let n = g.object_count();
    let on_arrows = (0..g.arrow_count()).map(|a| g.tgt(a) * n + g.src(a)).collect();
    PairProjection { pair, on_arrows }
}

/// A chain `x0 -f1-> x1 -f2-> ... -fn-> xn`; for `n = 0` just the object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Chain {
    pub fn level(&self) -> usize {
        self.arrows.len()
    }

    /// The vertex `x_i`.
    pub fn vertex(&self, g: &FinGroupoid, i: usize) -> usize {
        if i == 0 {
            self.start
        } else {
            g.tgt(self.arrows[i - 1])
        }
    }

    /// `d_i`: drop the first or last arrow, or compose `f_{i+1}∘f_i`.
    pub fn face(&self, g: &FinGroupoid, i: usize) -> Chain {
        let n = self.level();
        assert!(n > 0 && i <= n, "face index out of range");
        if i == 0 {
            return Chain { start: g.tgt(self.arrows[0]), arrows: self.arrows[1..].to_vec() };
        }
        if i == n {
            return Chain { start: self.start, arrows: self.arrows[..n - 1].to_vec() };
        }
        let mut arrows = self.arrows[..i - 1].to_vec();
        arrows.push(g.compose(self.arrows[i], self.arrows[i - 1]));
        arrows.extend_from_slice(&self.arrows[i + 1..]);
        Chain { start: self.start, arrows }
    }

    /// `s_i`: insert the identity at `x_i`.
    pub fn degeneracy(&self, g: &FinGroupoid, i: usize) -> Chain {
        assert!(i <= self.level(), "degeneracy index out of range");
        let mut arrows = self.arrows.clone();
        arrows.insert(i, g.unit(self.vertex(g, i)));
        Chain { start: self.start, arrows }
    }
}

/// All chains of `n` composable arrows, in lexicographic order.
pub fn nerve1(g: &FinGroupoid, n: usize) -> Vec<Chain> {
    let mut out: Vec<Chain> = (0..g.object_count()).map(|x| Chain { start: x, arrows: Vec::new() }).collect();
    for _ in 0..n {
        let mut next = Vec::new();
        for c in &out {
            let end = c.vertex(g, c.level());
            for a in 0..g.arrow_count() {
                if g.src(a) == end {
                    let mut arrows = c.arrows.clone();
                    arrows.push(a);
                    next.push(Chain { start: c.start, arrows });
                }
            }
        }
        out = next;
    }
    out
}

/// Checks the simplicial identities on every chain of level `n`.
pub fn check_simplicial_identities(g: &FinGroupoid, n: usize) -> Report {
    let mut out = Report::new();
    for c in nerve1(g, n) {
        let at = |what: &str, i: usize, j: usize| format!("{what} i={i} j={j} on {:?}", c.arrows);
        if n >= 2 {
            for j in 1..=n {
                for i in 0..j {
                    if c.face(g, j).face(g, i) != c.face(g, i).face(g, j - 1) {
                        out.push(Violation::new("d_i d_j = d_{j-1} d_i", at("faces", i, j)));
                    }
                }
            }
        }
        for j in 0..=n {
            for i in 0..=j {
                if c.degeneracy(g, j).degeneracy(g, i) != c.degeneracy(g, i).degeneracy(g, j + 1) {
                    out.push(Violation::new("s_i s_j = s_{j+1} s_i", at("degeneracies", i, j)));
                }
            }
        }
        for j in 0..=n {
            let s = c.degeneracy(g, j);
            for i in 0..=n + 1 {
                let lhs = s.face(g, i);
                let rhs = if i < j {
                    if n == 0 {
                        continue;
                    }
                    c.face(g, i).degeneracy(g, j - 1)
                } else if i == j || i == j + 1 {
                    c.clone()
                } else {
                    if n == 0 {
                        continue;
                    }
                    c.face(g, i - 1).degeneracy(g, j)
                };
                if lhs != rhs {
                    out.push(Violation::new("d_i s_j", at("mixed", i, j)));
                }
            }
        }
    }
    out
}
