//! Finite fields `F_q`, `q = p^e` with `p` odd, and the quadratic extension
//! `F_q[Z]` with `Z^2 = c` for a non-square `c`.
//!
//! Elements of `F_q` are stored as the base-`p` integer encoding of their
//! coefficient vector in the polynomial basis `1, x, .., x^{e-1}` modulo a
//! fixed monic irreducible polynomial. Multiplication goes through discrete
//! log tables built once per context, so every element operation is `O(e)`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order accepted by [`FieldCtx::new`].
pub const MAX_ORDER: u64 = 1 << 15;

/// An element of `F_q`, encoded as `sum c_i p^i` over its coefficient vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FqElem(u32);

impl FqElem {
    pub const ZERO: FqElem = FqElem(0);
    pub const ONE: FqElem = FqElem(1);

    pub fn encoding(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug)]
struct FieldInner {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A finite field of odd characteristic. Cheap to clone.
#[derive(Clone)]
pub struct FieldCtx(Arc<FieldInner>);

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}(p={}, e={}, modulus={:?})", self.q(), self.p(), self.e(), self.modulus())
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.e == other.0.e && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldCtx {}

/// Serialized form of a field: `{"p": int, "e": int, "modulus": [int]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub e: u32,
    pub modulus: Vec<u32>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomials over F_p, little-endian, used only while setting up the field.
mod fp_poly {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        let mut r = 1u64;
        let mut b = a as u64;
        let mut n = p - 2;
        while n > 0 {
            if n & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            n >>= 1;
        }
        r as u32
    }

    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p) as u64;
        while r.len() > dm {
            let shift = r.len() - 1 - dm;
            let f = r[r.len() - 1] as u64 * lead_inv % p as u64;
            for (i, &mi) in m.iter().enumerate() {
                let sub = f * mi as u64 % p as u64;
                r[shift + i] = ((r[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let mut out: Vec<u32> = out.into_iter().map(|v| v as u32).collect();
        trim(&mut out);
        out
    }

    /// Monic polynomial of degree `deg` whose lower coefficients are the base-`p` digits of `code`.
    pub fn monic_from_code(mut code: u64, deg: u32, p: u32) -> Vec<u32> {
        let mut v = Vec::with_capacity(deg as usize + 1);
        for _ in 0..deg {
            v.push((code % p as u64) as u32);
            code /= p as u64;
        }
        v.push(1);
        v
    }

    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = (f.len() - 1) as u32;
        if deg <= 1 {
            return deg == 1;
        }
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d);
            for code in 0..count {
                let g = monic_from_code(code, d, p);
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

impl FieldCtx {
    /// Builds `F_{p^e}` using the smallest monic irreducible modulus of degree `e`.
    ///
    /// Candidates are ordered by the integer `sum c_i p^i` over their lower
    /// coefficients. For `e = 1` the modulus is `x`, and elements are plain residues.
    pub fn new(p: u64, e: u32) -> Result<Self> {
        Self::check_char(p, e)?;
        let pp = p as u32;
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            (0..(p).pow(e))
                .map(|code| fp_poly::monic_from_code(code, e, pp))
                .find(|f| fp_poly::is_irreducible(f, pp))
                .expect("irreducible polynomials exist in every degree")
        };
        Ok(Self::build(pp, e, modulus))
    }

    /// Builds a field from an explicit modulus, which must be monic irreducible of degree `e`.
    pub fn with_modulus(p: u64, e: u32, modulus: Vec<u32>) -> Result<Self> {
        Self::check_char(p, e)?;
        let pp = p as u32;
        if modulus.len() != e as usize + 1 || modulus[e as usize] != 1 || modulus.iter().any(|&c| c >= pp) {
            return Err(Error::InvalidParams(format!(
                "modulus {modulus:?} is not a monic degree-{e} polynomial over F_{p}"
            )));
        }
        if e > 1 && !fp_poly::is_irreducible(&modulus, pp) {
            return Err(Error::InvalidParams(format!("modulus {modulus:?} is reducible")));
        }
        if e == 1 && modulus != [0, 1] {
            return Err(Error::InvalidParams("prime fields use the modulus x".into()));
        }
        Ok(Self::build(pp, e, modulus))
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Self> {
        Self::with_modulus(spec.p, spec.e, spec.modulus.clone())
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec { p: self.p() as u64, e: self.e(), modulus: self.modulus().to_vec() }
    }

    fn check_char(p: u64, e: u32) -> Result<()> {
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if p == 2 {
            return Err(Error::EvenCharacteristic(p));
        }
        match p.checked_pow(e) {
            Some(q) if q <= MAX_ORDER => Ok(()),
            _ => Err(Error::FieldTooLarge(p.saturating_pow(e))),
        }
    }

    fn build(p: u32, e: u32, modulus: Vec<u32>) -> Self {
        let q = p.pow(e);
        let decode = |mut x: u32| {
            let mut v = Vec::with_capacity(e as usize);
            for _ in 0..e {
                v.push(x % p);
                x /= p;
            }
            fp_poly::trim(&mut v);
            v
        };
        let encode = |v: &[u32]| v.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        let slow_mul = |a: u32, b: u32| {
            let prod = fp_poly::mul(&decode(a), &decode(b), p);
            encode(&fp_poly::rem(&prod, &modulus, p))
        };
        let n = q - 1;
        let mut exp = Vec::with_capacity(n as usize);
        for g in 1..q {
            exp.clear();
            let mut x = 1u32;
            loop {
                exp.push(x);
                x = slow_mul(x, g);
                if x == 1 {
                    break;
                }
            }
            if exp.len() == n as usize {
                break;
            }
        }
        debug_assert_eq!(exp.len(), n as usize);
        let mut log = vec![0u32; q as usize];
        for (i, &x) in exp.iter().enumerate() {
            log[x as usize] = i as u32;
        }
        FieldCtx(Arc::new(FieldInner { p, e, q, modulus, exp, log }))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn e(&self) -> u32 {
        self.0.e
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FqElem {
        FqElem::ZERO
    }

    pub fn one(&self) -> FqElem {
        FqElem::ONE
    }

    /// All elements in encoding order, zero first.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> {
        (0..self.q()).map(FqElem)
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FqElem {
        FqElem(n.rem_euclid(self.p() as i64) as u32)
    }

    /// Decodes a little-endian coefficient vector; shorter vectors are zero-padded.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<FqElem> {
        if coeffs.len() > self.e() as usize {
            return Err(Error::Parse(format!("expected at most {} coefficients, got {}", self.e(), coeffs.len())));
        }
        let p = self.p() as i64;
        Ok(FqElem(coeffs.iter().rev().fold(0u32, |acc, &c| acc * self.p() + c.rem_euclid(p) as u32)))
    }

    /// Little-endian coefficient vector of length exactly `e`.
    pub fn coeffs(&self, x: FqElem) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.e() as usize);
        let mut r = x.0;
        for _ in 0..self.e() {
            v.push(r % self.p());
            r /= self.p();
        }
        v
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        let p = self.p();
        if self.e() == 1 {
            return FqElem((a.0 + b.0) % p);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        FqElem(out)
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        let p = self.p();
        if self.e() == 1 {
            return FqElem((p - a.0) % p);
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        FqElem(out)
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if a.is_zero() || b.is_zero() {
            return FqElem::ZERO;
        }
        let n = self.q() - 1;
        let l = (self.0.log[a.0 as usize] + self.0.log[b.0 as usize]) % n;
        FqElem(self.0.exp[l as usize])
    }

    pub fn inv(&self, a: FqElem) -> Result<FqElem> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let n = self.q() - 1;
        let l = (n - self.0.log[a.0 as usize]) % n;
        Ok(FqElem(self.0.exp[l as usize]))
    }

    pub fn div(&self, a: FqElem, b: FqElem) -> Result<FqElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FqElem, k: u64) -> FqElem {
        if k == 0 {
            return FqElem::ONE;
        }
        if a.is_zero() {
            return FqElem::ZERO;
        }
        let n = (self.q() - 1) as u64;
        let l = (self.0.log[a.0 as usize] as u64 * (k % n)) % n;
        FqElem(self.0.exp[l as usize])
    }

    /// `a^k` for a signed exponent; negative powers of zero are an error.
    pub fn pow_signed(&self, a: FqElem, k: i64) -> Result<FqElem> {
        if k >= 0 {
            Ok(self.pow(a, k as u64))
        } else {
            Ok(self.pow(self.inv(a)?, k.unsigned_abs()))
        }
    }

    pub fn is_square(&self, a: FqElem) -> bool {
        a.is_zero() || self.0.log[a.0 as usize].is_multiple_of(2)
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: FqElem) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let n = (self.q() - 1) as u64;
        let l = self.0.log[a.0 as usize] as u64;
        Ok(n / gcd(l, n))
    }

    /// First non-square of `F_q^*` in encoding order.
    pub fn find_nonsquare(&self) -> FqElem {
        self.elements().skip(1).find(|&x| !self.is_square(x)).expect("odd order fields have non-squares")
    }

    /// Human-readable form: a residue for prime fields, a coefficient list otherwise.
    pub fn fmt_elem(&self, x: FqElem) -> String {
        if self.e() == 1 {
            x.0.to_string()
        } else {
            format!("{:?}", self.coeffs(x))
        }
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Element `u + vZ` of `F_q[Z]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fq2Elem {
    pub u: FqElem,
    pub v: FqElem,
}

impl Fq2Elem {
    pub const ZERO: Fq2Elem = Fq2Elem { u: FqElem::ZERO, v: FqElem::ZERO };
    pub const ONE: Fq2Elem = Fq2Elem { u: FqElem::ONE, v: FqElem::ZERO };

    pub fn new(u: FqElem, v: FqElem) -> Self {
        Fq2Elem { u, v }
    }

    pub fn is_zero(self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
}

/// The field `F_{q^2} = F_q[Z]`, `Z^2 = c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExt {
    field: FieldCtx,
    c: FqElem,
}

impl QuadExt {
    pub fn new(field: FieldCtx, c: FqElem) -> Result<Self> {
        if c.is_zero() || field.is_square(c) {
            return Err(Error::InvalidParams(format!(
                "c = {} is not a non-square in F_{}",
                field.fmt_elem(c),
                field.q()
            )));
        }
        Ok(QuadExt { field, c })
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn c(&self) -> FqElem {
        self.c
    }

    pub fn z(&self) -> Fq2Elem {
        Fq2Elem::new(FqElem::ZERO, FqElem::ONE)
    }

    pub fn embed(&self, a: FqElem) -> Fq2Elem {
        Fq2Elem::new(a, FqElem::ZERO)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq2Elem> + '_ {
        self.field.elements().flat_map(move |u| self.field.elements().map(move |v| Fq2Elem::new(u, v)))
    }

    pub fn add(&self, a: Fq2Elem, b: Fq2Elem) -> Fq2Elem {
        let f = &self.field;
        Fq2Elem::new(f.add(a.u, b.u), f.add(a.v, b.v))
    }

    pub fn sub(&self, a: Fq2Elem, b: Fq2Elem) -> Fq2Elem {
        let f = &self.field;
        Fq2Elem::new(f.sub(a.u, b.u), f.sub(a.v, b.v))
    }

    pub fn neg(&self, a: Fq2Elem) -> Fq2Elem {
        Fq2Elem::new(self.field.neg(a.u), self.field.neg(a.v))
    }

    pub fn scale(&self, s: FqElem, a: Fq2Elem) -> Fq2Elem {
        Fq2Elem::new(self.field.mul(s, a.u), self.field.mul(s, a.v))
    }

    pub fn mul(&self, a: Fq2Elem, b: Fq2Elem) -> Fq2Elem {
        let f = &self.field;
        let u = f.add(f.mul(a.u, b.u), f.mul(self.c, f.mul(a.v, b.v)));
        let v = f.add(f.mul(a.u, b.v), f.mul(a.v, b.u));
        Fq2Elem::new(u, v)
    }

    /// `u + vZ -> u - vZ`, which is the Frobenius `x -> x^q`.
    pub fn conjugate(&self, a: Fq2Elem) -> Fq2Elem {
        Fq2Elem::new(a.u, self.field.neg(a.v))
    }

    /// `x * conj(x) = u^2 - c v^2`.
    pub fn norm(&self, a: Fq2Elem) -> FqElem {
        let f = &self.field;
        f.sub(f.mul(a.u, a.u), f.mul(self.c, f.mul(a.v, a.v)))
    }

    pub fn inv(&self, a: Fq2Elem) -> Result<Fq2Elem> {
        let n = self.field.inv(self.norm(a))?;
        Ok(self.scale(n, self.conjugate(a)))
    }

    pub fn pow(&self, a: Fq2Elem, mut k: u64) -> Fq2Elem {
        let mut base = a;
        let mut acc = Fq2Elem::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// All `x` with `N(x) = s`, in ascending order. Always `q + 1` elements.
    pub fn norm_fiber(&self, s: FqElem) -> Result<Vec<Fq2Elem>> {
        if s.is_zero() {
            return Err(Error::ZeroNormTarget);
        }
        Ok(self.elements().filter(|&x| self.norm(x) == s).collect())
    }

    pub fn fmt_elem(&self, x: Fq2Elem) -> String {
        format!("{}+{}Z", self.field.fmt_elem(x.u), self.field.fmt_elem(x.v))
    }

    /// `[[u coeffs], [v coeffs]]`.
    pub fn to_coeffs(&self, x: Fq2Elem) -> [Vec<u32>; 2] {
        [self.field.coeffs(x.u), self.field.coeffs(x.v)]
    }

    pub fn from_coeffs(&self, u: &[i64], v: &[i64]) -> Result<Fq2Elem> {
        Ok(Fq2Elem::new(self.field.from_coeffs(u)?, self.field.from_coeffs(v)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldCtx {
        FieldCtx::new(p, 1).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldCtx::new(9, 1).unwrap_err(), Error::NonPrime(9));
        assert_eq!(FieldCtx::new(2, 3).unwrap_err(), Error::EvenCharacteristic(2));
        assert_eq!(FieldCtx::new(3, 0).unwrap_err(), Error::ZeroDegree);
        assert!(matches!(FieldCtx::new(3, 20), Err(Error::FieldTooLarge(_))));
    }

    #[test]
    fn prime_fields() {
        let f3 = f(3);
        assert_eq!(f3.elements().map(|x| x.encoding()).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(f3.modulus(), &[0, 1]);
        let f5 = f(5);
        assert_eq!(f5.q(), 5);
        assert_eq!(f5.mul(f5.from_int(3), f5.from_int(4)), f5.from_int(2));
        assert_eq!(f5.inv(f5.from_int(2)).unwrap(), f5.from_int(3));
    }

    #[test]
    fn f9_modulus_and_frobenius() {
        let f9 = FieldCtx::new(3, 2).unwrap();
        // x^2 + 1 is the first monic irreducible quadratic over F_3 in encoding order.
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        for x in f9.elements() {
            assert_eq!(f9.pow(x, 9), x);
        }
        let f27 = FieldCtx::new(3, 3).unwrap();
        for x in f27.elements() {
            assert_eq!(f27.pow(x, 27), x);
        }
        // only the prime subfield is fixed by cubing
        assert_eq!(f27.elements().filter(|&x| f27.pow(x, 3) == x).count(), 3);
    }

    #[test]
    fn with_modulus_rejects_reducible() {
        assert!(FieldCtx::with_modulus(3, 2, vec![2, 0, 1]).is_err()); // x^2 - 1
        assert!(FieldCtx::with_modulus(3, 2, vec![2, 1, 1]).is_ok());
    }

    #[test]
    fn nonsquares() {
        assert_eq!(f(3).find_nonsquare().encoding(), 2);
        assert_eq!(f(5).find_nonsquare().encoding(), 2);
        assert_eq!(f(7).find_nonsquare().encoding(), 3);
        for p in [3, 5, 7, 11] {
            let k = f(p);
            let count = k.elements().skip(1).filter(|&x| !k.is_square(x)).count();
            assert_eq!(count as u32, (k.q() - 1) / 2);
        }
    }

    #[test]
    fn mult_order() {
        assert_eq!(f(3).mult_order(FqElem::ONE).unwrap(), 1);
        assert_eq!(f(3).mult_order(f(3).from_int(2)).unwrap(), 2);
        assert_eq!(f(5).mult_order(f(5).from_int(4)).unwrap(), 2);
        assert_eq!(f(5).mult_order(FqElem::ZERO), Err(Error::ZeroElement));
        let f9 = FieldCtx::new(3, 2).unwrap();
        for x in f9.elements().skip(1) {
            let n = f9.mult_order(x).unwrap();
            let brute = (1..).find(|&k| f9.pow(x, k) == FqElem::ONE).unwrap();
            assert_eq!(n, brute);
            assert_eq!(8 % n, 0);
        }
    }

    #[test]
    fn conjugate_and_norm_small_cases() {
        let f3 = f(3);
        let ext = QuadExt::new(f3.clone(), f3.from_int(-1)).unwrap();
        let one = Fq2Elem::ONE;
        let z = ext.z();
        assert_eq!(ext.conjugate(one), one);
        assert_eq!(ext.conjugate(z), ext.neg(z));
        let one_plus_z = ext.add(one, z);
        assert_eq!(ext.conjugate(one_plus_z), ext.sub(one, z));
        assert_eq!(ext.norm(one), FqElem::ONE);
        assert_eq!(ext.norm(z), FqElem::ONE);
        assert_eq!(ext.norm(one_plus_z), f3.from_int(2));
        assert_eq!(ext.mul(z, z), ext.embed(ext.c()));
        assert!(QuadExt::new(f3.clone(), FqElem::ONE).is_err());
    }

    #[test]
    fn norm_fibers_match_examples() {
        let f3 = f(3);
        let ext = QuadExt::new(f3.clone(), f3.from_int(-1)).unwrap();
        let n_c = ext.norm_fiber(f3.from_int(1)).unwrap();
        let expect: Vec<_> = [(1, 0), (2, 0), (0, 1), (0, 2)]
            .iter()
            .map(|&(u, v)| Fq2Elem::new(f3.from_int(u), f3.from_int(v)))
            .collect();
        let mut expect_sorted = expect.clone();
        expect_sorted.sort();
        assert_eq!(n_c, expect_sorted);
        let m = ext.norm_fiber(f3.from_int(2)).unwrap();
        assert!(m.iter().all(|x| !x.u.is_zero() && !x.v.is_zero()));
        assert_eq!(m.len(), 4);
        assert_eq!(ext.norm_fiber(FqElem::ZERO), Err(Error::ZeroNormTarget));

        let f5 = f(5);
        let ext5 = QuadExt::new(f5.clone(), f5.from_int(2)).unwrap();
        assert_eq!(ext5.norm_fiber(f5.from_int(3)).unwrap().len(), 6);
    }

    #[test]
    fn fibers_partition_and_frobenius_exhaustive() {
        for (p, e) in [(3, 1), (5, 1), (7, 1), (3, 2)] {
            let k = FieldCtx::new(p, e).unwrap();
            let ext = QuadExt::new(k.clone(), k.find_nonsquare()).unwrap();
            let q = k.q() as u64;
            let mut total = 0;
            for s in k.elements().skip(1) {
                let fib = ext.norm_fiber(s).unwrap();
                assert_eq!(fib.len() as u64, q + 1);
                for &x in &fib {
                    assert!(fib.contains(&ext.neg(x)));
                    assert!(fib.contains(&ext.conjugate(x)));
                }
                total += fib.len();
            }
            assert_eq!(total as u64, q * q - 1);
            for x in ext.elements() {
                assert_eq!(ext.pow(x, q), ext.conjugate(x));
                assert_eq!(ext.mul(x, ext.conjugate(x)), ext.embed(ext.norm(x)));
            }
        }
    }

    #[test]
    fn coeff_roundtrip() {
        let f9 = FieldCtx::new(3, 2).unwrap();
        for x in f9.elements() {
            let c: Vec<i64> = f9.coeffs(x).iter().map(|&v| v as i64).collect();
            assert_eq!(f9.from_coeffs(&c).unwrap(), x);
        }
        assert!(f9.from_coeffs(&[1, 2, 0]).is_err());
    }
}
