//! Exhaustive checks of the finite statements about squares of `Γ_τ`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rewrite::words_equal;

use super::power::{compute_k_tau, p_pow};
use super::presentation::Presentation;
use super::table::{Letter, Word};

#[derive(Clone, Debug, Serialize)]
pub struct LemmaCheck {
    pub name: String,
    pub checked: usize,
    pub passed: usize,
    pub counterexample: Option<String>,
}

impl LemmaCheck {
    fn new(name: &str) -> Self {
        LemmaCheck { name: name.into(), checked: 0, passed: 0, counterexample: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if ok {
            self.passed += 1;
        } else if self.counterexample.is_none() {
            self.counterexample = Some(what());
        }
    }

    pub fn pass(&self) -> bool {
        self.checked == self.passed
    }
}

/// Outcome of `a^{p^n} b^{p^n} = b'^{p^n} a'^{p^n}` over the non-commuting squares.
#[derive(Clone, Debug, Serialize)]
pub struct PowerRow {
    pub n: u32,
    pub squares: usize,
    pub holds: usize,
    pub expected: bool,
}

impl PowerRow {
    pub fn pass(&self) -> bool {
        if self.expected {
            self.holds == self.squares
        } else {
            self.holds == 0
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub k_tau: u32,
    pub lemmas: Vec<LemmaCheck>,
    pub powers: Vec<PowerRow>,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.lemmas.iter().all(LemmaCheck::pass) && self.powers.iter().all(PowerRow::pass)
    }
}

fn pow_word(l: Letter, n: usize) -> Word {
    Word(vec![l; n])
}

/// Whether `a^m b^m = b'^m a'^m` for the square `(a, b, b', a')`.
pub fn square_power_holds(pres: &Presentation, sq: [u16; 4], m: usize) -> bool {
    let [a, b, b2, a2] = sq;
    let lhs = pow_word(Letter::a(a), m).concat(&pow_word(Letter::b(b), m));
    let rhs = pow_word(Letter::b(b2), m).concat(&pow_word(Letter::a(a2), m));
    words_equal(pres.table(), &lhs, &rhs)
}

/// Runs every finite lemma over a parametric table; the power relation is tested for `n = 1..=max_n`.
pub fn check_finite_lemmas(pres: &Presentation, max_n: u32) -> Result<LemmaReport> {
    let params = pres.params().ok_or_else(|| Error::NotApplicable("lemma suite needs a parametric lattice".into()))?;
    let ext = params.ext();
    let table = pres.table();
    let xi = |i: u16| pres.xi_of(Letter::a(i)).expect("parametric");
    let eta = |i: u16| pres.xi_of(Letter::b(i)).expect("parametric");
    let entries: Vec<[u16; 4]> = table.entries().collect();
    let show = |sq: [u16; 4]| {
        let [a, b, b2, a2] = sq;
        format!(
            "ξ={} η={} λ={} μ={}",
            ext.fmt_elem(xi(a)),
            ext.fmt_elem(eta(b)),
            ext.fmt_elem(eta(b2)),
            ext.fmt_elem(xi(a2))
        )
    };

    let mut fixed = LemmaCheck::new("λ=η iff μ=ξ");
    let mut conj = LemmaCheck::new("λ=conj(η) iff μ=conj(ξ)");
    for &sq in &entries {
        let [a, b, b2, a2] = sq;
        fixed.record((b2 == b) == (a2 == a), || show(sq));
        let c_eta = ext.conjugate(eta(b));
        let c_xi = ext.conjugate(xi(a));
        conj.record((eta(b2) == c_eta) == (xi(a2) == c_xi), || show(sq));
    }

    // a_ξ b_η = b_λ a_μ and a_μ b_η = b_λ a_χ force λ=η and ξ=μ=χ.
    let mut chain = LemmaCheck::new("repeated λ forces λ=η, ξ=μ=χ");
    for &sq in &entries {
        let [a, b, b2, a2] = sq;
        let (b3, a3) = table.swap(a2, b);
        if b3 == b2 {
            chain.record(b2 == b && a == a2 && a2 == a3, || show(sq));
        }
    }

    // a b = c d with a b^n = c^n d or a^n b = c d^n, n > 1, forces a = d, b = c.
    let mut one = LemmaCheck::new("n=1 or m=1 lemma, n=2..5");
    let t = table;
    for &sq in &entries {
        let [a, b, b2, a2] = sq;
        let (la, lb, lc, ld) = (Letter::a(a), Letter::b(b), Letter::b(b2), Letter::a(a2));
        for n in 2..=5 {
            let left =
                words_equal(t, &Word(vec![la]).concat(&pow_word(lb, n)), &pow_word(lc, n).concat(&Word(vec![ld])));
            let right =
                words_equal(t, &pow_word(la, n).concat(&Word(vec![lb])), &Word(vec![lc]).concat(&pow_word(ld, n)));
            let commuting = a == a2 && b == b2;
            one.record(!(left || right) || commuting, || format!("{} with n={n}", show(sq)));
        }
    }

    let k_tau = compute_k_tau(params);
    let non_commuting: Vec<[u16; 4]> = entries.iter().copied().filter(|sq| sq[0] != sq[3]).collect();
    let powers = (1..=max_n)
        .map(|n| {
            let m = p_pow(params, n) as usize;
            let holds = non_commuting.par_iter().filter(|&&sq| square_power_holds(pres, sq, m)).count();
            PowerRow { n, squares: non_commuting.len(), holds, expected: n % k_tau == 0 }
        })
        .collect();

    Ok(LemmaReport { k_tau, lemmas: vec![fixed, conj, chain, one], powers })
}
