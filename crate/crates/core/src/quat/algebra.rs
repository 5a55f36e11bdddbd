use crate::error::{Error, Result};
use crate::ff::{FieldCtx, Fq2Elem, FqElem, QuadExt};

use super::poly::Poly;
use super::ratfun::{projective_canonical, RatFun};

/// Quaternion `x0 + x1 Z + x2 F + x3 ZF` over `K = F_q(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quat {
    pub x: [RatFun; 4],
}

impl Quat {
    pub fn scalar(r: RatFun) -> Self {
        Quat { x: [r, RatFun::zero(), RatFun::zero(), RatFun::zero()] }
    }

    pub fn one() -> Self {
        Quat::scalar(RatFun::one())
    }

    pub fn basis(i: usize) -> Self {
        let mut x = [RatFun::zero(), RatFun::zero(), RatFun::zero(), RatFun::zero()];
        x[i] = RatFun::one();
        Quat { x }
    }

    /// True when the `Z`, `F` and `ZF` coordinates vanish.
    pub fn is_scalar(&self) -> bool {
        self.x[1..].iter().all(RatFun::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.x.iter().all(RatFun::is_zero)
    }
}

/// A quaternion up to `K^*`, stored by its canonical polynomial representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjQuat {
    coords: [Poly; 4],
}

impl ProjQuat {
    pub fn coords(&self) -> &[Poly; 4] {
        &self.coords
    }
}

/// The algebra `D` with `Z^2 = c`, `F^2 = t(t-1)`, `ZF = -FZ`.
#[derive(Clone, Debug)]
pub struct QuatAlgebra {
    ext: QuadExt,
    f_squared: RatFun,
}

impl QuatAlgebra {
    pub fn new(ext: QuadExt) -> Self {
        let f = ext.field();
        let t = Poly::t();
        let f_squared = RatFun::from_poly(t.mul(&t.sub(&Poly::one(), f), f));
        QuatAlgebra { ext, f_squared }
    }

    pub fn ext(&self) -> &QuadExt {
        &self.ext
    }

    pub fn field(&self) -> &FieldCtx {
        self.ext.field()
    }

    fn c(&self) -> RatFun {
        RatFun::constant(self.ext.c())
    }

    pub fn add(&self, a: &Quat, b: &Quat) -> Quat {
        let f = self.field();
        Quat { x: std::array::from_fn(|i| a.x[i].add(&b.x[i], f)) }
    }

    pub fn scale(&self, s: &RatFun, a: &Quat) -> Quat {
        let f = self.field();
        Quat { x: std::array::from_fn(|i| a.x[i].mul(s, f)) }
    }

    /// Product from the sixteen induced basis products, e.g. `ZF*Z = -cF`, `F*ZF = -t(t-1)Z`.
    pub fn mul(&self, a: &Quat, b: &Quat) -> Quat {
        let f = self.field();
        let c = self.c();
        let tt = &self.f_squared;
        let m = |i: usize, j: usize| a.x[i].mul(&b.x[j], f);
        let x0 =
            m(0, 0).add(&c.mul(&m(1, 1), f), f).add(&tt.mul(&m(2, 2), f), f).sub(&c.mul(tt, f).mul(&m(3, 3), f), f);
        let x1 = m(0, 1).add(&m(1, 0), f).sub(&tt.mul(&m(2, 3), f), f).add(&tt.mul(&m(3, 2), f), f);
        let x2 = m(0, 2).add(&m(2, 0), f).add(&c.mul(&m(1, 3), f), f).sub(&c.mul(&m(3, 1), f), f);
        let x3 = m(0, 3).add(&m(3, 0), f).add(&m(1, 2), f).sub(&m(2, 1), f);
        Quat { x: [x0, x1, x2, x3] }
    }

    /// Negates the `Z`, `F`, `ZF` coordinates.
    pub fn conjugate(&self, a: &Quat) -> Quat {
        let f = self.field();
        Quat { x: [a.x[0].clone(), a.x[1].neg(f), a.x[2].neg(f), a.x[3].neg(f)] }
    }

    /// `a * conj(a) = x0^2 - c x1^2 - t(t-1) x2^2 + c t(t-1) x3^2`.
    pub fn reduced_norm(&self, a: &Quat) -> RatFun {
        let f = self.field();
        let c = self.c();
        let tt = &self.f_squared;
        let sq = |i: usize| a.x[i].mul(&a.x[i], f);
        sq(0).sub(&c.mul(&sq(1), f), f).sub(&tt.mul(&sq(2), f), f).add(&c.mul(tt, f).mul(&sq(3), f), f)
    }

    pub fn inv(&self, a: &Quat) -> Result<Quat> {
        let n = self.reduced_norm(a);
        if n.is_zero() {
            return Err(Error::NonInvertible);
        }
        Ok(self.scale(&n.inv(self.field())?, &self.conjugate(a)))
    }

    pub fn pow(&self, a: &Quat, mut k: u64) -> Quat {
        let mut base = a.clone();
        let mut acc = Quat::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `xi * F * Z` for `xi = u + vZ`, i.e. `-c v F - u ZF`.
    pub fn xi_fz(&self, xi: Fq2Elem) -> Quat {
        let f = self.field();
        let c = self.ext.c();
        Quat {
            x: [RatFun::zero(), RatFun::zero(), RatFun::constant(f.neg(f.mul(c, xi.v))), RatFun::constant(f.neg(xi.u))],
        }
    }

    /// The quaternion `c f(t) + xi F Z` before passing to `D^*/K^*`.
    pub fn generator(&self, xi: Fq2Elem, fun: &RatFun) -> Quat {
        let f = self.field();
        let mut q = self.xi_fz(xi);
        q.x[0] = fun.scale(self.ext.c(), f);
        q
    }

    pub fn projectivize(&self, a: &Quat) -> Result<ProjQuat> {
        let polys = projective_canonical(&a.x, self.field())?;
        let mut it = polys.into_iter();
        Ok(ProjQuat { coords: std::array::from_fn(|_| it.next().expect("four coordinates")) })
    }

    /// The class of `c f(t) + xi F Z` in `D^*/K^*`.
    pub fn embed_generator(&self, xi: Fq2Elem, fun: &RatFun) -> Result<ProjQuat> {
        if xi.is_zero() || fun.is_zero() {
            return Err(Error::ZeroElement);
        }
        self.projectivize(&self.generator(xi, fun))
    }

    pub fn proj_eq(&self, a: &Quat, b: &Quat) -> Result<bool> {
        Ok(self.projectivize(a)? == self.projectivize(b)?)
    }

    /// Checks `a_xi(f)^{p^k} = a_{sigma_k(xi)}(g)` in `D^*/K^*` with
    /// `g = f^{p^k} / (t(t-1))^{(p^k-1)/2}`, by direct powering.
    pub fn verify_power_lemma(&self, xi: Fq2Elem, fun: &RatFun, k: u32) -> Result<bool> {
        let f = self.field();
        let pk = (f.p() as u64).pow(k);
        let lhs = self.pow(&self.generator(xi, fun), pk);
        let g = fun.pow(pk, f).div(&self.f_squared.pow((pk - 1) / 2, f), f)?;
        let rhs = self.generator(sigma_k(&self.ext, xi, k)?, &g);
        self.proj_eq(&lhs, &rhs)
    }

    pub fn fmt_quat(&self, a: &Quat) -> String {
        let f = self.field();
        let names = ["", "Z", "F", "ZF"];
        let parts: Vec<String> =
            a.x.iter()
                .zip(names)
                .filter(|(r, _)| !r.is_zero())
                .map(|(r, n)| format!("({}){n}", r.fmt_with(f)))
                .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// `sigma_k(xi) = (-c)^{(1-p^k)/2} N(xi)^{(p^k-1)/2} xi`.
pub fn sigma_k(ext: &QuadExt, xi: Fq2Elem, k: u32) -> Result<Fq2Elem> {
    if xi.is_zero() {
        return Err(Error::ZeroElement);
    }
    let f = ext.field();
    let half = ((f.p() as u64).pow(k) - 1) / 2;
    let minus_c = f.neg(ext.c());
    let scalar = f.mul(f.pow(f.inv(minus_c)?, half), f.pow(ext.norm(xi), half));
    Ok(ext.scale(scalar, xi))
}

/// The scalar `s` with `sigma_k(xi) = s * xi`.
pub fn sigma_k_scalar(ext: &QuadExt, xi: Fq2Elem, k: u32) -> Result<FqElem> {
    let s = sigma_k(ext, xi, k)?;
    // xi is nonzero, so one of its coordinates is invertible.
    let f = ext.field();
    if !xi.u.is_zero() {
        f.div(s.u, xi.u)
    } else {
        f.div(s.v, xi.v)
    }
}
