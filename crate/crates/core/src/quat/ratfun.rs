use crate::error::{Error, Result};
use crate::ff::{FieldCtx, FqElem};

use super::poly::Poly;

/// Element of `F_q(t)` in lowest terms with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFun { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn constant(c: FqElem) -> Self {
        RatFun::from_poly(Poly::constant(c))
    }

    pub fn new(num: Poly, den: Poly, f: &FieldCtx) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroElement);
        }
        if num.is_zero() {
            return Ok(RatFun::zero());
        }
        if den.is_one() {
            return Ok(RatFun { num, den });
        }
        let g = num.gcd(&den, f);
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_exact(&g, f)?, den.div_exact(&g, f)?) };
        let (den, lead) = den.monic(f);
        let num = num.scale(f.inv(lead)?, f);
        Ok(RatFun { num, den })
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &RatFun, f: &FieldCtx) -> RatFun {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_poly() && other.is_poly() {
            return RatFun::from_poly(self.num.add(&other.num, f));
        }
        if self.den == other.den {
            return RatFun::new(self.num.add(&other.num, f), self.den.clone(), f).expect("nonzero denominator");
        }
        let num = self.num.mul(&other.den, f).add(&other.num.mul(&self.den, f), f);
        RatFun::new(num, self.den.mul(&other.den, f), f).expect("nonzero denominator")
    }

    pub fn neg(&self, f: &FieldCtx) -> RatFun {
        RatFun { num: self.num.neg(f), den: self.den.clone() }
    }

    pub fn sub(&self, other: &RatFun, f: &FieldCtx) -> RatFun {
        self.add(&other.neg(f), f)
    }

    pub fn mul(&self, other: &RatFun, f: &FieldCtx) -> RatFun {
        if self.is_zero() || other.is_zero() {
            return RatFun::zero();
        }
        if self.is_poly() && other.is_poly() {
            return RatFun::from_poly(self.num.mul(&other.num, f));
        }
        RatFun::new(self.num.mul(&other.num, f), self.den.mul(&other.den, f), f).expect("nonzero denominator")
    }

    pub fn scale(&self, s: FqElem, f: &FieldCtx) -> RatFun {
        if s.is_zero() {
            return RatFun::zero();
        }
        RatFun { num: self.num.scale(s, f), den: self.den.clone() }
    }

    pub fn inv(&self, f: &FieldCtx) -> Result<RatFun> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        RatFun::new(self.den.clone(), self.num.clone(), f)
    }

    pub fn div(&self, other: &RatFun, f: &FieldCtx) -> Result<RatFun> {
        Ok(self.mul(&other.inv(f)?, f))
    }

    pub fn pow(&self, k: u64, f: &FieldCtx) -> RatFun {
        // Powers of a reduced fraction stay reduced; only the denominator's monicity matters.
        RatFun { num: self.num.pow(k, f), den: self.den.pow(k, f) }
    }

    pub fn fmt_with(&self, f: &FieldCtx) -> String {
        if self.is_poly() {
            self.num.fmt_with(f)
        } else {
            format!("({})/({})", self.num.fmt_with(f), self.den.fmt_with(f))
        }
    }
}

/// Clears denominators, removes the common polynomial content and makes the
/// first nonzero entry monic: the canonical representative of the
/// `K^*`-class of a nonzero vector over `K = F_q(t)`.
pub fn projective_canonical(entries: &[RatFun], f: &FieldCtx) -> Result<Vec<Poly>> {
    if entries.iter().all(RatFun::is_zero) {
        return Err(Error::ZeroElement);
    }
    let mut lcm = Poly::one();
    for r in entries.iter().filter(|r| !r.is_poly()) {
        let g = lcm.gcd(r.den(), f);
        lcm = lcm.mul(&r.den().div_exact(&g, f)?, f);
    }
    let mut polys: Vec<Poly> = entries
        .iter()
        .map(|r| if r.is_zero() { Ok(Poly::zero()) } else { Ok(r.num().mul(&lcm.div_exact(r.den(), f)?, f)) })
        .collect::<Result<_>>()?;
    let content = polys.iter().fold(Poly::zero(), |g, p| g.gcd(p, f));
    if !content.is_one() {
        for p in polys.iter_mut() {
            *p = p.div_exact(&content, f)?;
        }
    }
    let lead = polys.iter().find(|p| !p.is_zero()).expect("some entry nonzero").lead();
    if lead != FqElem::ONE {
        let inv = f.inv(lead)?;
        for p in polys.iter_mut() {
            *p = p.scale(inv, f);
        }
    }
    Ok(polys)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_to_lowest_terms() {
        let f = FieldCtx::new(5, 1).unwrap();
        let t = Poly::t();
        let num = t.mul(&t.add(&Poly::one(), &f), &f).scale(f.from_int(2), &f);
        let den = t.scale(f.from_int(3), &f);
        let r = RatFun::new(num, den, &f).unwrap();
        assert!(r.is_poly());
        // 2t(t+1) / 3t = (2/3)(t+1) = 4(t+1)
        assert_eq!(r.num(), &Poly::from_ints(&f, &[4, 4]));
        assert!(RatFun::new(Poly::one(), Poly::zero(), &f).is_err());
    }

    #[test]
    fn field_operations() {
        let f = FieldCtx::new(3, 1).unwrap();
        let t = RatFun::from_poly(Poly::t());
        let inv_t = t.inv(&f).unwrap();
        assert_eq!(t.mul(&inv_t, &f), RatFun::one());
        let x = inv_t.add(&RatFun::one(), &f); // (1+t)/t
        let y = x.sub(&inv_t, &f);
        assert_eq!(y, RatFun::one());
        assert_eq!(x.pow(3, &f).mul(&x.inv(&f).unwrap().pow(3, &f), &f), RatFun::one());
    }

    #[test]
    fn canonical_representative_is_scale_invariant() {
        let f = FieldCtx::new(3, 1).unwrap();
        let v = [
            RatFun::from_poly(Poly::from_ints(&f, &[1, 1])),
            RatFun::zero(),
            RatFun::new(Poly::one(), Poly::t(), &f).unwrap(),
        ];
        let scalar = RatFun::new(Poly::from_ints(&f, &[2, 0, 1]), Poly::from_ints(&f, &[1, 1]), &f).unwrap();
        let w: Vec<_> = v.iter().map(|r| r.mul(&scalar, &f)).collect();
        assert_eq!(projective_canonical(&v, &f).unwrap(), projective_canonical(&w, &f).unwrap());
        assert!(projective_canonical(&[RatFun::zero()], &f).is_err());
    }
}
