use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

pub type Point = Vec<i64>;

/// A finite set of exponent tuples, sorted lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParikhSet {
    pub dim: usize,
    pub points: Vec<Point>,
}

impl ParikhSet {
    pub fn new(dim: usize, points: impl IntoIterator<Item = Point>) -> Self {
        let set: BTreeSet<Point> = points.into_iter().collect();
        ParikhSet { dim, points: set.into_iter().collect() }
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.points.binary_search_by(|p| p.as_slice().cmp(x)).is_ok()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points with every `|x_i| ≤ n` (and `x_i ≥ 0` unless `signed`).
    pub fn restrict(&self, n: u64, signed: bool) -> ParikhSet {
        ParikhSet { dim: self.dim, points: self.points.iter().filter(|p| in_box(p, n, signed)).cloned().collect() }
    }
}

pub fn in_box(x: &[i64], n: u64, signed: bool) -> bool {
    x.iter().all(|&v| v.unsigned_abs() <= n && (signed || v >= 0))
}

/// `L(c, P) = {c + Σ λ_i p_i : λ_i ∈ N_0}` with non-negative periods.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearSet {
    base: Point,
    periods: Vec<Point>,
}

impl LinearSet {
    /// Zero periods are dropped. Panics if a period has a negative entry or the wrong length.
    pub fn new(base: Point, periods: Vec<Point>) -> Self {
        for p in &periods {
            assert_eq!(p.len(), base.len(), "period dimension");
            assert!(p.iter().all(|&v| v >= 0), "periods are in N_0^d");
        }
        let periods = periods.into_iter().filter(|p| p.iter().any(|&v| v != 0)).collect();
        LinearSet { base, periods }
    }

    pub fn base(&self) -> &[i64] {
        &self.base
    }

    pub fn periods(&self) -> &[Point] {
        &self.periods
    }

    pub fn dim(&self) -> usize {
        self.base.len()
    }

    /// Members with all coordinates in `[-n, n]`, by expanding the coefficients.
    pub fn expand(&self, n: u64) -> BTreeSet<Point> {
        let mut out = BTreeSet::new();
        let mut cur = self.base.clone();
        self.expand_from(0, &mut cur, n, &mut out);
        out
    }

    fn expand_from(&self, i: usize, cur: &mut Point, n: u64, out: &mut BTreeSet<Point>) {
        // Periods are non-negative, so once a coordinate exceeds n it never comes back.
        if cur.iter().any(|&v| v > n as i64) {
            return;
        }
        if i == self.periods.len() {
            if in_box(cur, n, true) {
                out.insert(cur.clone());
            }
            return;
        }
        let p = &self.periods[i];
        let saved = cur.clone();
        loop {
            self.expand_from(i + 1, cur, n, out);
            for (c, d) in cur.iter_mut().zip(p) {
                *c += d;
            }
            if cur.iter().any(|&v| v > n as i64) {
                break;
            }
        }
        *cur = saved;
    }
}

/// Whether `x ∈ L(c, P)`, by depth-first search over the coefficients.
pub fn linear_membership(l: &LinearSet, x: &[i64]) -> bool {
    if x.len() != l.dim() {
        return false;
    }
    let rest: Vec<i64> = x.iter().zip(&l.base).map(|(a, b)| a - b).collect();
    solve(&l.periods, &rest)
}

fn solve(periods: &[Point], rest: &[i64]) -> bool {
    if rest.iter().any(|&v| v < 0) {
        return false;
    }
    let Some((p, tail)) = periods.split_first() else {
        return rest.iter().all(|&v| v == 0);
    };
    let max = p.iter().zip(rest).filter(|(d, _)| **d > 0).map(|(d, r)| r / d).min().expect("zero periods are removed");
    let mut cur = rest.to_vec();
    for k in 0..=max {
        if k > 0 {
            for (c, d) in cur.iter_mut().zip(p) {
                *c -= d;
            }
        }
        if solve(tail, &cur) {
            return true;
        }
    }
    false
}

/// A finite union of linear sets; membership is the disjunction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemilinearSet {
    pub sets: Vec<LinearSet>,
}

impl SemilinearSet {
    pub fn new(sets: Vec<LinearSet>) -> Self {
        SemilinearSet { sets }
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.sets.iter().any(|l| linear_membership(l, x))
    }

    pub fn expand(&self, n: u64) -> BTreeSet<Point> {
        self.sets.iter().flat_map(|l| l.expand(n)).collect()
    }
}

/// `γ(n)`: number of members with every `|x_i| ≤ n`.
pub trait Growth {
    fn growth(&self, n: u64) -> u64;
}

impl Growth for ParikhSet {
    fn growth(&self, n: u64) -> u64 {
        self.points.iter().filter(|p| in_box(p, n, true)).count() as u64
    }
}

fn box_points(dim: usize, n: u64) -> impl Iterator<Item = Point> {
    let side = n + 1;
    let total = side.pow(dim as u32);
    (0..total).map(move |mut k| {
        (0..dim)
            .map(|_| {
                let v = (k % side) as i64;
                k /= side;
                v
            })
            .collect()
    })
}

impl Growth for LinearSet {
    /// Scans `[0, n]^d` with [`linear_membership`]; base and periods are non-negative here.
    fn growth(&self, n: u64) -> u64 {
        box_points(self.dim(), n).filter(|x| linear_membership(self, x)).count() as u64
    }
}

impl Growth for SemilinearSet {
    fn growth(&self, n: u64) -> u64 {
        let Some(d) = self.sets.first().map(LinearSet::dim) else {
            return 0;
        };
        box_points(d, n).filter(|x| self.contains(x)).count() as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn membership_examples() {
        let diag = LinearSet::new(vec![0, 0], vec![vec![1, 1]]);
        assert!(linear_membership(&diag, &[4, 4]));
        assert!(!linear_membership(&diag, &[4, 3]));
        let l = LinearSet::new(vec![1, 0], vec![vec![2, 0], vec![0, 3]]);
        assert!(linear_membership(&l, &[5, 6]));
        assert!(!linear_membership(&l, &[4, 6]));
        let torus = LinearSet::new(vec![0; 4], vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]]);
        assert!(linear_membership(&torus, &[2, 5, 2, 5]));
        assert!(!linear_membership(&torus, &[2, 5, 5, 2]));
    }

    #[test]
    fn zero_periods_dropped() {
        let l = LinearSet::new(vec![1], vec![vec![0], vec![2]]);
        assert_eq!(l.periods().len(), 1);
        assert!(linear_membership(&l, &[7]));
    }

    #[test]
    fn growth_examples() {
        assert_eq!(LinearSet::new(vec![0, 0], vec![vec![1, 1]]).growth(10), 11);
        assert_eq!(LinearSet::new(vec![0], vec![]).growth(3), 1);
    }

    #[test]
    fn parikh_set_is_sorted_and_deduplicated() {
        let s = ParikhSet::new(2, vec![vec![1, 0], vec![0, 1], vec![1, 0]]);
        assert_eq!(s.points, vec![vec![0, 1], vec![1, 0]]);
        assert!(s.contains(&[1, 0]));
        assert!(!s.contains(&[1, 1]));
    }

    fn linear_of_dim(d: usize) -> impl Strategy<Value = LinearSet> {
        (prop::collection::vec(0i64..3, d), prop::collection::vec(prop::collection::vec(0i64..3, d), 0..3))
            .prop_map(|(b, ps)| LinearSet::new(b, ps))
    }

    fn small_linear() -> impl Strategy<Value = LinearSet> {
        (1usize..4).prop_flat_map(linear_of_dim)
    }

    fn linear_pair() -> impl Strategy<Value = (LinearSet, LinearSet)> {
        (1usize..4).prop_flat_map(|d| (linear_of_dim(d), linear_of_dim(d)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn growth_by_membership_matches_expansion(l in small_linear(), n in 0u64..6) {
            prop_assert_eq!(l.growth(n), l.expand(n).len() as u64);
        }

        #[test]
        fn semilinear_growth_matches_expansion((a, b) in linear_pair(), n in 0u64..5) {
            let s = SemilinearSet::new(vec![a, b]);
            prop_assert_eq!(s.growth(n), s.expand(n).len() as u64);
        }
    }
}
