use crate::error::{Error, Result};
use crate::ff::{FieldCtx, FqElem};

/// Polynomial in `t` over `F_q`, little-endian, never with a trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<FqElem>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![FqElem::ONE] }
    }

    pub fn constant(c: FqElem) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Poly { coeffs: vec![FqElem::ZERO, FqElem::ONE] }
    }

    pub fn from_coeffs(mut coeffs: Vec<FqElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Integer coefficients reduced into the prime subfield.
    pub fn from_ints(f: &FieldCtx, ints: &[i64]) -> Self {
        Poly::from_coeffs(ints.iter().map(|&n| f.from_int(n)).collect())
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FqElem::ONE
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> FqElem {
        self.coeffs.last().copied().unwrap_or(FqElem::ZERO)
    }

    pub fn add(&self, other: &Poly, f: &FieldCtx) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Poly, i: usize| p.coeffs.get(i).copied().unwrap_or(FqElem::ZERO);
        Poly::from_coeffs((0..n).map(|i| f.add(get(self, i), get(other, i))).collect())
    }

    pub fn neg(&self, f: &FieldCtx) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect() }
    }

    pub fn sub(&self, other: &Poly, f: &FieldCtx) -> Poly {
        self.add(&other.neg(f), f)
    }

    pub fn scale(&self, s: FqElem, f: &FieldCtx) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|&c| f.mul(s, c)).collect() }
    }

    pub fn mul(&self, other: &Poly, f: &FieldCtx) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let mut out = vec![FqElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, mut k: u64, f: &FieldCtx) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base, f);
            }
        }
        acc
    }

    pub fn div_rem(&self, divisor: &Poly, f: &FieldCtx) -> Result<(Poly, Poly)> {
        if divisor.is_zero() {
            return Err(Error::ZeroElement);
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let lead_inv = f.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![FqElem::ZERO; rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let top = rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let factor = f.mul(top, lead_inv);
            quot[shift] = factor;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub(rem[shift + i], f.mul(factor, d));
            }
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Exact division; errors if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly, f: &FieldCtx) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor, f)?;
        if !r.is_zero() {
            return Err(Error::OracleFailure("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Returns `(self / lead, lead)`; the zero polynomial is returned unchanged with lead 0.
    pub fn monic(&self, f: &FieldCtx) -> (Poly, FqElem) {
        let lead = self.lead();
        if lead.is_zero() || lead == FqElem::ONE {
            return (self.clone(), lead);
        }
        let inv = f.inv(lead).expect("nonzero lead");
        (self.scale(inv, f), lead)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly, f: &FieldCtx) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b, f).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(f).0
    }

    pub fn eval(&self, x: FqElem, f: &FieldCtx) -> FqElem {
        self.coeffs.iter().rev().fold(FqElem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Coefficients as field-element coefficient arrays.
    pub fn to_json_coeffs(&self, f: &FieldCtx) -> Vec<Vec<u32>> {
        self.coeffs.iter().map(|&c| f.coeffs(c)).collect()
    }

    pub fn fmt_with(&self, f: &FieldCtx) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = f.fmt_elem(c);
            terms.push(match i {
                0 => cs,
                1 if c == FqElem::ONE => "t".into(),
                1 => format!("{cs}t"),
                _ if c == FqElem::ONE => format!("t^{i}"),
                _ => format!("{cs}t^{i}"),
            });
        }
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let f = FieldCtx::new(3, 1).unwrap();
        let t = Poly::t();
        let tm1 = t.sub(&Poly::one(), &f);
        let prod = t.mul(&tm1, &f); // t^2 - t
        assert_eq!(prod, Poly::from_ints(&f, &[0, -1, 1]));
        let (q, r) = prod.div_rem(&tm1, &f).unwrap();
        assert_eq!(q, t);
        assert!(r.is_zero());
        // Frobenius: (t+1)^3 = t^3 + 1 in characteristic 3
        let tp1 = t.add(&Poly::one(), &f);
        assert_eq!(tp1.pow(3, &f), Poly::from_ints(&f, &[1, 0, 0, 1]));
        assert_eq!(prod.gcd(&tp1.mul(&t, &f), &f), t);
        assert_eq!(Poly::zero().gcd(&Poly::zero(), &f), Poly::zero());
        assert_eq!(prod.eval(f.from_int(2), &f), f.from_int(2));
    }

    #[test]
    fn canonical_form_has_no_trailing_zero() {
        let f = FieldCtx::new(5, 1).unwrap();
        let p = Poly::from_ints(&f, &[1, 2, 0, 5]);
        assert_eq!(p.degree(), Some(1));
        assert!(Poly::from_ints(&f, &[0, 0]).is_zero());
        let q = p.sub(&p, &f);
        assert!(q.is_zero());
    }

    #[test]
    fn division_by_zero_is_error() {
        let f = FieldCtx::new(3, 1).unwrap();
        assert!(Poly::t().div_rem(&Poly::zero(), &f).is_err());
    }
}
