//! Finite groups and monoids given by multiplication tables.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finite monoid on `0..order`; `mul[a][b]` is `a·b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteMonoid {
    mul: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteMonoid {
    pub fn from_table(mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty monoid".into()));
        }
        if mul.iter().any(|row| row.len() != n || row.iter().any(|&c| c >= n)) {
            return Err(Error::InvalidTable("multiplication table is not n×n over 0..n".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::InvalidTable(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        Ok(FiniteMonoid { mul, identity })
    }

    /// `{0, 1}` under multiplication; element 0 is the number 1 (the unit)
    /// and element 1 is the number 0.
    pub fn boolean() -> Self {
        FiniteMonoid { mul: vec![vec![0, 1], vec![1, 1]], identity: 0 }
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    pub fn unit_inverse(&self, a: usize) -> Option<usize> {
        (0..self.order()).find(|&b| self.mul[a][b] == self.identity && self.mul[b][a] == self.identity)
    }
}

/// A finite group on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    monoid: FiniteMonoid,
    inv: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(mul: Vec<Vec<usize>>) -> Result<Self> {
        let monoid = FiniteMonoid::from_table(mul)?;
        let inv = (0..monoid.order())
            .map(|a| monoid.unit_inverse(a).ok_or_else(|| Error::InvalidTable(format!("element {a} has no inverse"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup { monoid, inv })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `ℤ/n` with element `i` the residue `i`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(mul).expect("cyclic table")
    }

    /// Direct product; element `(a, b)` is `a * |h| + b`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (m, n) = (g.order(), h.order());
        let mul =
            (0..m * n).map(|x| (0..m * n).map(|y| g.mul(x / n, y / n) * n + h.mul(x % n, y % n)).collect()).collect();
        Self::from_table(mul).expect("product table")
    }

    /// Permutation group of a list of permutations closed under composition;
    /// `(p·q)(i) = p(q(i))`.
    fn from_permutations(perms: Vec<Vec<usize>>) -> Self {
        let idx = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed under composition");
        let mul =
            perms.iter().map(|p| perms.iter().map(|q| idx(&q.iter().map(|&i| p[i]).collect())).collect()).collect();
        Self::from_table(mul).expect("permutation table")
    }

    /// The symmetric group on `n` letters, permutations in lexicographic order
    /// (so element 0 is the identity).
    pub fn symmetric(n: usize) -> Self {
        let mut perms = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        permutations(&mut cur, 0, &mut perms);
        perms.sort();
        Self::from_permutations(perms)
    }

    /// Symmetries of a regular `n`-gon, of order `2n`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        let mut perms = Vec::new();
        for k in 0..n {
            perms.push((0..n).map(|i| (i + k) % n).collect());
        }
        for k in 0..n {
            perms.push((0..n).map(|i| (k + n - i) % n).collect());
        }
        // For n <= 2 reflections can coincide with rotations; keep distinct ones.
        let mut uniq: Vec<Vec<usize>> = Vec::new();
        for p in perms {
            if !uniq.contains(&p) {
                uniq.push(p);
            }
        }
        if uniq.len() < 2 * n {
            // D1 = ℤ/2 and D2 = ℤ/2 × ℤ/2 as abstract groups.
            return if n == 1 { Self::cyclic(2) } else { Self::product(&Self::cyclic(2), &Self::cyclic(2)) };
        }
        Self::from_permutations(uniq)
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> Self {
        // Encode as (sign, unit) with unit in {1,i,j,k} = {0,1,2,3}; element = 4*sign_bit + unit.
        const UNIT: [[(bool, usize); 4]; 4] = [
            [(false, 0), (false, 1), (false, 2), (false, 3)],
            [(false, 1), (true, 0), (false, 3), (true, 2)],
            [(false, 2), (true, 3), (true, 0), (false, 1)],
            [(false, 3), (false, 2), (true, 1), (true, 0)],
        ];
        let mul = (0..8)
            .map(|a: usize| {
                (0..8)
                    .map(|b: usize| {
                        let (neg, u) = UNIT[a % 4][b % 4];
                        let sign = (a / 4 == 1) ^ (b / 4 == 1) ^ neg;
                        4 * usize::from(sign) + u
                    })
                    .collect()
            })
            .collect();
        Self::from_table(mul).expect("quaternion table")
    }

    /// One representative of every isomorphism class of groups of order at
    /// most `8`.
    pub fn all_up_to_order_8() -> Vec<FiniteGroup> {
        let c = Self::cyclic;
        vec![
            c(1),
            c(2),
            c(3),
            c(4),
            Self::product(&c(2), &c(2)),
            c(5),
            c(6),
            Self::symmetric(3),
            c(7),
            c(8),
            Self::product(&c(4), &c(2)),
            Self::product(&Self::product(&c(2), &c(2)), &c(2)),
            Self::dihedral(4),
            Self::quaternion(),
        ]
    }

    pub fn order(&self) -> usize {
        self.monoid.order()
    }

    pub fn identity(&self) -> usize {
        self.monoid.identity()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.monoid.mul(a, b)
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        self.monoid.table()
    }

    pub fn as_monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn is_abelian(&self) -> bool {
        self.monoid.is_commutative()
    }

    /// The first pair that fails to commute.
    pub fn noncommuting_pair(&self) -> Option<(usize, usize)> {
        let n = self.order();
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }
}

fn permutations(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permutations(cur, k + 1, out);
        cur.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups_have_expected_shape() {
        let gs = FiniteGroup::all_up_to_order_8();
        let orders: Vec<usize> = gs.iter().map(|g| g.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8]);
        let nonabelian = gs.iter().filter(|g| !g.is_abelian()).count();
        assert_eq!(nonabelian, 3);
    }

    #[test]
    fn quaternion_relations() {
        let q = FiniteGroup::quaternion();
        let (i, j, k, minus_one) = (1, 2, 3, 4);
        assert_eq!(q.mul(i, i), minus_one);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, i), 4 + k);
        assert_eq!(q.mul(q.mul(i, j), k), minus_one);
    }

    #[test]
    fn symmetric_and_dihedral() {
        assert_eq!(FiniteGroup::symmetric(3).order(), 6);
        assert_eq!(FiniteGroup::symmetric(3).identity(), 0);
        assert!(!FiniteGroup::dihedral(3).is_abelian());
        assert!(FiniteGroup::dihedral(2).is_abelian());
    }

    #[test]
    fn boolean_monoid() {
        let m = FiniteMonoid::boolean();
        assert_eq!(m.identity(), 0);
        assert_eq!(m.unit_inverse(1), None);
        assert!(FiniteGroup::from_table(m.table().to_vec()).is_err());
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteMonoid::from_table(vec![vec![0, 0], vec![1, 0]]).is_err());
        assert!(FiniteMonoid::from_table(vec![vec![0, 2], vec![1, 0]]).is_err());
    }
}
