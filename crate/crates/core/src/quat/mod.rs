//! Arithmetic in `F_q[t]`, `F_q(t)`, the quaternion algebra `D` and the
//! projective group `D^*/K^*`, plus the 3x3 matrix model of `Gamma_3`.

mod algebra;
mod matrix;
mod poly;
mod ratfun;

pub use algebra::{sigma_k, sigma_k_scalar, ProjQuat, Quat, QuatAlgebra};
pub use matrix::{
    gamma3_matrices, gamma3_matrices_sign_variant, gamma3_matrix_oracle, gamma3_relation_checks, Mat3, GAMMA3_RELATIONS,
};
pub use poly::Poly;
pub use ratfun::{projective_canonical, RatFun};
