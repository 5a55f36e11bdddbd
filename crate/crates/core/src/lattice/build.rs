//! Parametric lattices `Γ_τ`: the square system, the full relation table and
//! its independent check in `D^*/K^*`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff::Fq2Elem;
use crate::quat::{Poly, QuatAlgebra, RatFun};

use super::params::LatticeParams;
use super::presentation::Presentation;
use super::table::{GenLabel, SquareTable};

/// Whether `(λ, μ)` solves `ξ + η = λ + μ`, `ξ conj(η) = λ conj(μ)`.
pub fn satisfies_square_system(
    params: &LatticeParams,
    xi: Fq2Elem,
    eta: Fq2Elem,
    lambda: Fq2Elem,
    mu: Fq2Elem,
) -> bool {
    let ext = params.ext();
    ext.add(xi, eta) == ext.add(lambda, mu) && ext.mul(xi, ext.conjugate(eta)) == ext.mul(lambda, ext.conjugate(mu))
}

fn solve_in(params: &LatticeParams, m_tau: &[Fq2Elem], xi: Fq2Elem, eta: Fq2Elem) -> Result<(Fq2Elem, Fq2Elem)> {
    let ext = params.ext();
    let target = params.norm_a();
    let sum = ext.add(xi, eta);
    let sols: Vec<_> = m_tau
        .iter()
        .map(|&lambda| (lambda, ext.sub(sum, lambda)))
        .filter(|&(lambda, mu)| {
            !mu.is_zero()
                && ext.norm(mu) == target
                && ext.mul(xi, ext.conjugate(eta)) == ext.mul(lambda, ext.conjugate(mu))
        })
        .collect();
    match sols.as_slice() {
        [one] => Ok(*one),
        [] => Err(Error::NoSolution { xi: ext.fmt_elem(xi), eta: ext.fmt_elem(eta) }),
        many => Err(Error::NonUniqueSolution { xi: ext.fmt_elem(xi), eta: ext.fmt_elem(eta), count: many.len() }),
    }
}

/// The unique `(λ, μ) ∈ M_τ × N_c` with `a_ξ b_η = b_λ a_μ`, found by scanning `λ`.
pub fn solve_square(params: &LatticeParams, xi: Fq2Elem, eta: Fq2Elem) -> Result<(Fq2Elem, Fq2Elem)> {
    solve_in(params, &params.m_tau(), xi, eta)
}

/// Full `(q+1)^2`-entry table of `Γ_τ`.
pub fn build_square_table(params: &LatticeParams) -> Result<Presentation> {
    let ext = params.ext();
    let n_c = params.n_c();
    let m_tau = params.m_tau();
    let pos = |set: &[Fq2Elem], x: Fq2Elem| -> u16 {
        set.binary_search(&x).expect("fiber closed under the operation") as u16
    };
    let inv_a: Vec<u16> = n_c.iter().map(|&x| pos(&n_c, ext.neg(x))).collect();
    let inv_b: Vec<u16> = m_tau.iter().map(|&x| pos(&m_tau, ext.neg(x))).collect();
    let mut ab = Vec::with_capacity(n_c.len() * m_tau.len());
    for &xi in &n_c {
        for &eta in &m_tau {
            let (lambda, mu) = solve_in(params, &m_tau, xi, eta)?;
            ab.push((pos(&m_tau, lambda), pos(&n_c, mu)));
        }
    }
    let table = SquareTable::from_swap(
        n_c.iter().map(|&x| GenLabel::Param(x)).collect(),
        m_tau.iter().map(|&x| GenLabel::Param(x)).collect(),
        inv_a,
        inv_b,
        ab,
    )?;
    Ok(Presentation::parametric(params.clone(), table))
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryCheck {
    pub xi: String,
    pub eta: String,
    pub lambda: String,
    pub mu: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub total: usize,
    pub passed: usize,
    pub entries: Vec<EntryCheck>,
}

impl OracleReport {
    pub fn all_pass(&self) -> bool {
        self.passed == self.total
    }

    pub fn first_failure(&self) -> Option<&EntryCheck> {
        self.entries.iter().find(|e| !e.pass)
    }
}

/// Checks `a_ξ(t) b_η(t) = b_λ(t) a_μ(t)` in `D^*/K^*` for every table entry.
pub fn oracle_check_table(pres: &Presentation) -> Result<OracleReport> {
    let params =
        pres.params().ok_or_else(|| Error::NotApplicable("quaternion oracle needs a parametric lattice".into()))?;
    oracle_check_entries(params, pres.table())
}

/// Same check against an arbitrary table over the parametric alphabets.
pub fn oracle_check_entries(params: &LatticeParams, table: &SquareTable) -> Result<OracleReport> {
    let xi_of = |l: &GenLabel| match l {
        GenLabel::Param(x) => Ok(*x),
        GenLabel::Named { .. } => Err(Error::NotApplicable("named label in parametric table".into())),
    };
    let quads = table
        .entries()
        .map(|[a, b, b2, a2]| {
            Ok([
                xi_of(&table.labels_a()[a as usize])?,
                xi_of(&table.labels_b()[b as usize])?,
                xi_of(&table.labels_b()[b2 as usize])?,
                xi_of(&table.labels_a()[a2 as usize])?,
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    oracle_check_quads(params, &quads)
}

/// Checks each claimed relation `a_ξ b_η = b_λ a_μ`, given as `[ξ, η, λ, μ]`.
pub fn oracle_check_quads(params: &LatticeParams, quads: &[[Fq2Elem; 4]]) -> Result<OracleReport> {
    let alg = QuatAlgebra::new(params.ext().clone());
    let t = RatFun::from_poly(Poly::t());
    let ext = params.ext();
    let checks: Vec<EntryCheck> = quads
        .par_iter()
        .map(|&[xi, eta, lambda, mu]| {
            let lhs = alg.mul(&alg.generator(xi, &t), &alg.generator(eta, &t));
            let rhs = alg.mul(&alg.generator(lambda, &t), &alg.generator(mu, &t));
            Ok(EntryCheck {
                xi: ext.fmt_elem(xi),
                eta: ext.fmt_elem(eta),
                lambda: ext.fmt_elem(lambda),
                mu: ext.fmt_elem(mu),
                pass: alg.proj_eq(&lhs, &rhs)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(OracleReport { total: checks.len(), passed: checks.iter().filter(|c| c.pass).count(), entries: checks })
}
