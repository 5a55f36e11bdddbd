use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{compute_k_tau, p_pow, Presentation, Side};
use crate::rewrite::{commutes, is_identity};

use super::enumerate::BoundedLanguageSpec;
use super::sets::{in_box, linear_membership, Growth, LinearSet, ParikhSet, Point};

/// One family of points in a predicted set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Family {
    /// `base + Σ λ_i periods_i`, `λ_i ≥ 0`, periods in `N_0^d`.
    Linear { base: Point, periods: Vec<Point> },
    /// `n · direction` for all `n ∈ Z`.
    Line { direction: Point },
    /// `base^(first + step j) · pattern` for `j ≥ 0`, and the negatives when `symmetric`.
    Power { base: u64, first: u32, step: u32, pattern: Point, symmetric: bool },
}

impl Family {
    fn members(&self, n: u64, out: &mut BTreeSet<Point>) {
        match self {
            Family::Linear { base, periods } => {
                out.extend(LinearSet::new(base.clone(), periods.clone()).expand(n));
            }
            Family::Line { direction } => {
                if direction.iter().all(|&v| v == 0) {
                    out.insert(direction.clone());
                    return;
                }
                for k in -(n as i64)..=(n as i64) {
                    let x: Point = direction.iter().map(|d| d * k).collect();
                    if in_box(&x, n, true) {
                        out.insert(x);
                    }
                }
            }
            Family::Power { base, first, step, pattern, symmetric } => {
                let scale_max = pattern.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
                let mut e = *first;
                while let Some(m) = base.checked_pow(e) {
                    if m.saturating_mul(scale_max) > n && scale_max > 0 {
                        break;
                    }
                    let x: Point = pattern.iter().map(|v| v * m as i64).collect();
                    if *symmetric {
                        out.insert(x.iter().map(|v| -v).collect());
                    }
                    out.insert(x);
                    if *step == 0 || scale_max == 0 || *base <= 1 {
                        break;
                    }
                    e += step;
                }
            }
        }
    }

    fn contains(&self, x: &[i64]) -> bool {
        match self {
            Family::Linear { base, periods } => linear_membership(&LinearSet::new(base.clone(), periods.clone()), x),
            Family::Line { direction } => {
                let Some(i) = direction.iter().position(|&d| d != 0) else {
                    return x.iter().all(|&v| v == 0);
                };
                x[i] % direction[i] == 0 && {
                    let k = x[i] / direction[i];
                    x.iter().zip(direction).all(|(a, d)| *a == k * d)
                }
            }
            Family::Power { .. } => {
                let n = x.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
                let mut s = BTreeSet::new();
                self.members(n, &mut s);
                s.contains(x)
            }
        }
    }
}

/// A predicted Parikh image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExpectedSet {
    /// `{0} ∪ {(m^n, …, m^n) : n ≥ 0}` in dimension `d`.
    PowerDiagonal {
        m: u64,
        d: usize,
    },
    Formula {
        d: usize,
        families: Vec<Family>,
    },
}

impl ExpectedSet {
    pub fn dim(&self) -> usize {
        match self {
            ExpectedSet::PowerDiagonal { d, .. } | ExpectedSet::Formula { d, .. } => *d,
        }
    }

    /// Members inside the box `|x_i| ≤ n`, non-negative unless `signed`.
    pub fn members(&self, n: u64, signed: bool) -> ParikhSet {
        let mut out = BTreeSet::new();
        match self {
            ExpectedSet::PowerDiagonal { m, d } => {
                out.insert(vec![0; *d]);
                Family::Power { base: *m, first: 0, step: 1, pattern: vec![1; *d], symmetric: false }
                    .members(n, &mut out);
            }
            ExpectedSet::Formula { families, .. } => {
                for f in families {
                    f.members(n, &mut out);
                }
            }
        }
        ParikhSet::new(self.dim(), out.into_iter().filter(|x| in_box(x, n, signed)))
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        if x.len() != self.dim() {
            return false;
        }
        match self {
            ExpectedSet::PowerDiagonal { m, .. } => {
                let v = x[0];
                x.iter().all(|&y| y == v) && (v == 0 || (v > 0 && is_power_of(v as u64, *m)))
            }
            ExpectedSet::Formula { families, .. } => families.iter().any(|f| f.contains(x)),
        }
    }

    /// Parses `power:m:d`, or a JSON object.
    pub fn parse(s: &str) -> Result<Self> {
        if let Some(rest) = s.strip_prefix("power:") {
            let (m, d) = rest.split_once(':').ok_or_else(|| Error::Parse("expected power:m:d".into()))?;
            let m = m.trim().parse().map_err(|_| Error::Parse(format!("bad base `{m}`")))?;
            let d = d.trim().parse().map_err(|_| Error::Parse(format!("bad dimension `{d}`")))?;
            return Ok(ExpectedSet::PowerDiagonal { m, d });
        }
        Ok(serde_json::from_str(s)?)
    }
}

fn is_power_of(mut v: u64, m: u64) -> bool {
    if m <= 1 {
        return v == 1;
    }
    while v.is_multiple_of(m) {
        v /= m;
    }
    v == 1
}

impl Growth for ExpectedSet {
    fn growth(&self, n: u64) -> u64 {
        self.members(n, true).len() as u64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompareReport {
    pub bound: u64,
    pub enumerated: usize,
    pub expected: usize,
    /// Predicted but not enumerated.
    pub missing: Vec<Point>,
    /// Enumerated but not predicted.
    pub unexpected: Vec<Point>,
}

impl CompareReport {
    pub fn pass(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

/// Symmetric difference of an enumeration and a prediction inside the box of radius `bound`.
pub fn compare(enumerated: &ParikhSet, expected: &ExpectedSet, bound: u64, signed: bool) -> CompareReport {
    let got = enumerated.restrict(bound, signed);
    let want = expected.members(bound, signed);
    CompareReport {
        bound,
        enumerated: got.len(),
        expected: want.len(),
        missing: want.points.iter().filter(|p| !got.contains(p)).cloned().collect(),
        unexpected: got.points.iter().filter(|p| !want.contains(p)).cloned().collect(),
    }
}

/// `{0} ∪ {(p^{k_τ n}, …)}` inside `[0, N]^4`.
pub fn expected_gamma_tau_set(k_tau: u32, p: u64, bound: u64) -> ParikhSet {
    ExpectedSet::PowerDiagonal { m: p.pow(k_tau), d: 4 }.members(bound, false)
}

/// Checks that `spec` is `a*b*c*d*` for letters `a, c ∈ A`, `b, d ∈ B` with
/// `abcd = e` and `a, b` not commuting, and returns the predicted set.
pub fn theorem_expected(pres: &Presentation, spec: &BoundedLanguageSpec) -> Result<ExpectedSet> {
    let params =
        pres.params().ok_or_else(|| Error::HypothesisViolated("the theorem concerns parametric lattices".into()))?;
    let blocks = spec.blocks();
    if blocks.len() != 4 || spec.signed {
        return Err(Error::HypothesisViolated("need four unsigned blocks".into()));
    }
    let letters: Vec<_> = blocks
        .iter()
        .map(|w| match w.letters() {
            [l] => Ok(*l),
            _ => Err(Error::HypothesisViolated("each block must be a single letter".into())),
        })
        .collect::<Result<_>>()?;
    let sides = [Side::A, Side::B, Side::A, Side::B];
    if letters.iter().zip(sides).any(|(l, s)| l.side != s) {
        return Err(Error::HypothesisViolated("blocks must alternate A, B, A, B".into()));
    }
    let t = pres.table();
    let word = crate::lattice::Word(letters.clone());
    if !is_identity(t, &word) {
        return Err(Error::HypothesisViolated("abcd is not the identity".into()));
    }
    let (a, b) = (crate::lattice::Word(vec![letters[0]]), crate::lattice::Word(vec![letters[1]]));
    if commutes(t, &a, &b) {
        return Err(Error::HypothesisViolated("a and b commute".into()));
    }
    Ok(ExpectedSet::PowerDiagonal { m: p_pow(params, compute_k_tau(params)), d: 4 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn power_diagonal_members() {
        let e = expected_gamma_tau_set(2, 3, 100);
        assert_eq!(e.points, vec![vec![0; 4], vec![1; 4], vec![9; 4], vec![81; 4]]);
        let e = expected_gamma_tau_set(1, 5, 30);
        assert_eq!(e.points, vec![vec![0; 4], vec![1; 4], vec![5; 4], vec![25; 4]]);
        assert_eq!(expected_gamma_tau_set(2, 3, 0).points, vec![vec![0; 4]]);
        assert_eq!(ExpectedSet::PowerDiagonal { m: 9, d: 4 }.growth(100), 4);
    }

    #[test]
    fn contains_agrees_with_members() {
        let sets = [
            ExpectedSet::PowerDiagonal { m: 3, d: 2 },
            ExpectedSet::Formula {
                d: 4,
                families: vec![
                    Family::Line { direction: vec![0, 1, -1, 0] },
                    Family::Power { base: 3, first: 1, step: 2, pattern: vec![1, -1, -1, 1], symmetric: true },
                    Family::Linear { base: vec![0, 1, 0, 1], periods: vec![vec![3, 0, 3, 0], vec![0, 4, 0, 4]] },
                ],
            },
        ];
        for s in &sets {
            let m = s.members(9, true);
            for x in &m.points {
                assert!(s.contains(x), "{x:?}");
            }
            assert_eq!(s.members(9, true).len(), ParikhSet::new(s.dim(), m.points.clone()).len());
        }
        assert!(sets[1].contains(&[-27, 27, 27, -27]));
        assert!(!sets[1].contains(&[9, -9, -9, 9]));
    }

    #[test]
    fn parse_descriptors() {
        assert_eq!(ExpectedSet::parse("power:9:4").unwrap(), ExpectedSet::PowerDiagonal { m: 9, d: 4 });
        let json = r#"{"kind":"formula","d":2,"families":[{"type":"line","direction":[1,-1]}]}"#;
        assert!(ExpectedSet::parse(json).unwrap().contains(&[-3, 3]));
        assert!(ExpectedSet::parse("power:x").is_err());
    }

    #[test]
    fn compare_reports_both_directions() {
        let got = ParikhSet::new(4, vec![vec![0; 4], vec![1; 4], vec![2; 4]]);
        let r = compare(&got, &ExpectedSet::PowerDiagonal { m: 9, d: 4 }, 10, false);
        assert_eq!(r.missing, vec![vec![9; 4]]);
        assert_eq!(r.unexpected, vec![vec![2; 4]]);
        assert!(!r.pass());
    }

    proptest! {
        #[test]
        fn power_diagonal_growth_closed_form(m in 2u64..10, j in 0u32..6) {
            let e = ExpectedSet::PowerDiagonal { m, d: 4 };
            prop_assert_eq!(e.growth(m.pow(j)), j as u64 + 2);
        }
    }
}
