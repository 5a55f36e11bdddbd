//! 3x3 matrices over `F_q(t)` and the projective check of the `Gamma_3`
//! relations in `PGL_3(F_3(t))`.

use crate::error::{Error, Result};
use crate::ff::FieldCtx;

use super::poly::Poly;
use super::ratfun::{projective_canonical, RatFun};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat3 {
    pub m: [[RatFun; 3]; 3],
}

impl Mat3 {
    pub fn identity() -> Self {
        Mat3 {
            m: std::array::from_fn(|i| std::array::from_fn(|j| if i == j { RatFun::one() } else { RatFun::zero() })),
        }
    }

    /// Entries given as little-endian integer coefficient lists in `t`.
    pub fn from_int_polys(f: &FieldCtx, rows: [[&[i64]; 3]; 3]) -> Self {
        Mat3 { m: std::array::from_fn(|i| std::array::from_fn(|j| RatFun::from_poly(Poly::from_ints(f, rows[i][j])))) }
    }

    pub fn mul(&self, other: &Mat3, f: &FieldCtx) -> Mat3 {
        Mat3 {
            m: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    (0..3).fold(RatFun::zero(), |acc, k| acc.add(&self.m[i][k].mul(&other.m[k][j], f), f))
                })
            }),
        }
    }

    fn minor(&self, r: usize, c: usize, f: &FieldCtx) -> RatFun {
        let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        let a = self.m[rows[0]][cols[0]].mul(&self.m[rows[1]][cols[1]], f);
        let b = self.m[rows[0]][cols[1]].mul(&self.m[rows[1]][cols[0]], f);
        a.sub(&b, f)
    }

    pub fn det(&self, f: &FieldCtx) -> RatFun {
        (0..3).fold(RatFun::zero(), |acc, j| {
            let term = self.m[0][j].mul(&self.minor(0, j, f), f);
            if j % 2 == 0 {
                acc.add(&term, f)
            } else {
                acc.sub(&term, f)
            }
        })
    }

    /// Transposed cofactor matrix; equals `det * inverse`.
    pub fn adjugate(&self, f: &FieldCtx) -> Mat3 {
        Mat3 {
            m: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    let c = self.minor(j, i, f);
                    if (i + j) % 2 == 0 {
                        c
                    } else {
                        c.neg(f)
                    }
                })
            }),
        }
    }

    /// Inverse up to a scalar, which is all a projective check needs.
    pub fn proj_inverse(&self, f: &FieldCtx) -> Result<Mat3> {
        if self.det(f).is_zero() {
            return Err(Error::NonInvertible);
        }
        Ok(self.adjugate(f))
    }

    pub fn proj_eq(&self, other: &Mat3, f: &FieldCtx) -> Result<bool> {
        let flat = |m: &Mat3| m.m.iter().flatten().cloned().collect::<Vec<_>>();
        Ok(projective_canonical(&flat(self), f)? == projective_canonical(&flat(other), f)?)
    }
}

/// Images of `a, b, x, y` in `PGL_3(F_3(t))`; the `1/(t+1)` prefactors are dropped.
///
/// Entry (1,3) of `y` is `t - t^2`. With `t^2 - t` in that slot only the
/// relation `ax = x^-1 b` survives; see [`gamma3_matrices_sign_variant`].
pub fn gamma3_matrices() -> [Mat3; 4] {
    let f = FieldCtx::new(3, 1).expect("F_3");
    let mut mats = gamma3_matrices_sign_variant();
    mats[3].m[0][2] = RatFun::from_poly(Poly::from_ints(&f, &[0, 1, -1]));
    mats
}

/// Variant with `y[0][2] = t^2 - t`, kept as a negative control.
pub fn gamma3_matrices_sign_variant() -> [Mat3; 4] {
    let f = FieldCtx::new(3, 1).expect("F_3");
    let t2mt: &[i64] = &[0, -1, 1];
    let tmt2: &[i64] = &[0, 1, -1];
    let a = Mat3::from_int_polys(&f, [[&[-1, -1], t2mt, &[]], [&[1], &[-1, -1], &[]], [&[], &[], &[1]]]);
    let b = Mat3::from_int_polys(&f, [[&[-1, -1], &[], t2mt], [&[], &[1], &[]], [&[1], &[], &[-1, -1]]]);
    let x = Mat3::from_int_polys(&f, [[&[-1], tmt2, t2mt], [&[-1], &[0, -1], &[1, -1]], [&[1], &[1, -1], &[0, -1]]]);
    let y = Mat3::from_int_polys(&f, [[&[-1], tmt2, t2mt], [&[-1], &[0, -1], &[-1, 1]], [&[-1], &[-1, 1], &[0, -1]]]);
    [a, b, x, y]
}

pub const GAMMA3_RELATIONS: [&str; 4] = ["ax=x^-1b", "ay=y^-1b^-1", "ay^-1=xa^-1", "bx=yb^-1"];

/// Evaluates the four defining relations of `Gamma_3` projectively on `[a, b, x, y]`.
pub fn gamma3_relation_checks(mats: &[Mat3; 4]) -> Result<Vec<(&'static str, bool)>> {
    let f = FieldCtx::new(3, 1)?;
    let [a, b, x, y] = mats;
    let ai = a.proj_inverse(&f)?;
    let bi = b.proj_inverse(&f)?;
    let xi = x.proj_inverse(&f)?;
    let yi = y.proj_inverse(&f)?;
    let pairs = [
        (a.mul(x, &f), xi.mul(b, &f)),
        (a.mul(y, &f), yi.mul(&bi, &f)),
        (a.mul(&yi, &f), x.mul(&ai, &f)),
        (b.mul(x, &f), y.mul(&bi, &f)),
    ];
    pairs.iter().zip(GAMMA3_RELATIONS).map(|((l, r), name)| Ok((name, l.proj_eq(r, &f)?))).collect()
}

/// Checks the `Gamma_3` relations on [`gamma3_matrices`]; reports the first failure.
pub fn gamma3_matrix_oracle() -> Result<()> {
    for (name, ok) in gamma3_relation_checks(&gamma3_matrices())? {
        if !ok {
            return Err(Error::OracleFailure(format!("relation {name} fails")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_four_relations_hold() {
        gamma3_matrix_oracle().unwrap();
    }

    #[test]
    fn printed_y_breaks_three_relations() {
        let checks = gamma3_relation_checks(&gamma3_matrices_sign_variant()).unwrap();
        let ok: Vec<bool> = checks.iter().map(|c| c.1).collect();
        assert_eq!(ok, vec![true, false, false, false]);
    }

    #[test]
    fn identity_commutes_and_adjugate_inverts() {
        let f = FieldCtx::new(3, 1).unwrap();
        let id = Mat3::identity();
        for m in gamma3_matrices() {
            assert!(id.mul(&m, &f).proj_eq(&m.mul(&id, &f), &f).unwrap());
            let prod = m.mul(&m.adjugate(&f), &f);
            assert!(prod.proj_eq(&id, &f).unwrap());
        }
    }

    #[test]
    fn perturbing_an_entry_breaks_the_oracle() {
        let f = FieldCtx::new(3, 1).unwrap();
        let mut mats = gamma3_matrices();
        mats[0].m[2][2] = RatFun::from_poly(Poly::from_ints(&f, &[1, 1]));
        let checks = gamma3_relation_checks(&mats).unwrap();
        assert!(checks.iter().any(|c| !c.1));
    }
}
