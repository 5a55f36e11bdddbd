use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::{FieldCtx, FieldSpec, Fq2Elem, FqElem, QuadExt};

/// `(F_q, c, τ)` with `c` a non-square and `τ ∉ {0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeParams {
    ext: QuadExt,
    tau: FqElem,
}

/// JSON form: `{"field": {...}, "c": [int], "tau": [int]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsSpec {
    pub field: FieldSpec,
    pub c: Vec<i64>,
    pub tau: Vec<i64>,
}

impl LatticeParams {
    pub fn new(field: FieldCtx, c: FqElem, tau: FqElem) -> Result<Self> {
        if tau.is_zero() || tau == FqElem::ONE {
            return Err(Error::InvalidParams(format!("tau = {} must differ from 0 and 1", field.fmt_elem(tau))));
        }
        let ext = QuadExt::new(field, c)?;
        Ok(LatticeParams { ext, tau })
    }

    /// Prime-field shorthand: `(p, c, τ)` as integers.
    pub fn prime(p: u64, c: i64, tau: i64) -> Result<Self> {
        let f = FieldCtx::new(p, 1)?;
        let (c, tau) = (f.from_int(c), f.from_int(tau));
        Self::new(f, c, tau)
    }

    pub fn from_spec(spec: &ParamsSpec) -> Result<Self> {
        let f = FieldCtx::from_spec(&spec.field)?;
        let c = f.from_coeffs(&spec.c)?;
        let tau = f.from_coeffs(&spec.tau)?;
        Self::new(f, c, tau)
    }

    pub fn spec(&self) -> ParamsSpec {
        let f = self.field();
        let ints = |x: FqElem| f.coeffs(x).into_iter().map(i64::from).collect();
        ParamsSpec { field: f.spec(), c: ints(self.c()), tau: ints(self.tau) }
    }

    pub fn ext(&self) -> &QuadExt {
        &self.ext
    }

    pub fn field(&self) -> &FieldCtx {
        self.ext.field()
    }

    pub fn c(&self) -> FqElem {
        self.ext.c()
    }

    pub fn tau(&self) -> FqElem {
        self.tau
    }

    pub fn q(&self) -> u32 {
        self.field().q()
    }

    /// Same field and `c`, different `τ`.
    pub fn with_tau(&self, tau: FqElem) -> Result<Self> {
        Self::new(self.field().clone(), self.c(), tau)
    }

    /// Norm target of the A-side generators: `-c`.
    pub fn norm_a(&self) -> FqElem {
        self.field().neg(self.c())
    }

    /// Norm target of the B-side generators: `c τ / (1 - τ)`.
    pub fn norm_b(&self) -> FqElem {
        let f = self.field();
        let den = f.sub(FqElem::ONE, self.tau);
        f.div(f.mul(self.c(), self.tau), den).expect("tau != 1")
    }

    /// `N_c = {ξ : N(ξ) = -c}`, sorted.
    pub fn n_c(&self) -> Vec<Fq2Elem> {
        self.ext.norm_fiber(self.norm_a()).expect("-c is nonzero")
    }

    /// `M_τ = {η : N(η) = cτ/(1-τ)}`, sorted.
    pub fn m_tau(&self) -> Vec<Fq2Elem> {
        self.ext.norm_fiber(self.norm_b()).expect("c τ/(1-τ) is nonzero")
    }
}

/// `(N_c, M_τ)`: the index sets of the A- and B-side generators.
pub fn build_generators(params: &LatticeParams) -> (Vec<Fq2Elem>, Vec<Fq2Elem>) {
    (params.n_c(), params.m_tau())
}
