//! `σ_k`, `k_τ` and the power homomorphisms `φ_k`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff::{Fq2Elem, FqElem};
use crate::quat;
use crate::rewrite::is_identity;

use super::params::LatticeParams;
use super::presentation::Presentation;
use super::table::{GenLabel, Letter, Side, Word};

pub fn sigma_k(params: &LatticeParams, xi: Fq2Elem, k: u32) -> Result<Fq2Elem> {
    quat::sigma_k(params.ext(), xi, k)
}

/// `τ/(τ-1)`, the scalar by which `σ_k` moves `M_τ` (raised to `(p^k-1)/2`).
pub fn tau_ratio(params: &LatticeParams) -> FqElem {
    let f = params.field();
    let tau = params.tau();
    f.div(tau, f.sub(tau, FqElem::ONE)).expect("tau != 1")
}

/// Smallest `k ≥ 1` with `(τ/(τ-1))^{(p^k-1)/2} = 1`.
pub fn compute_k_tau(params: &LatticeParams) -> u32 {
    let f = params.field();
    let r = tau_ratio(params);
    let p = f.p() as u64;
    let mut pk = 1u64;
    for k in 1..=2 * f.e() {
        pk *= p;
        if f.pow(r, (pk - 1) / 2) == FqElem::ONE {
            return k;
        }
    }
    unreachable!("(τ/(τ-1))^((q^2-1)/2) = 1 always")
}

/// `p^k` as an integer.
pub fn p_pow(params: &LatticeParams, k: u32) -> u64 {
    (params.field().p() as u64).pow(k)
}

/// A letter-to-word substitution between two presentations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordMap {
    pub images_a: Vec<Word>,
    pub images_b: Vec<Word>,
}

impl WordMap {
    pub fn image(&self, l: Letter) -> &Word {
        match l.side {
            Side::A => &self.images_a[l.idx as usize],
            Side::B => &self.images_b[l.idx as usize],
        }
    }

    pub fn apply(&self, w: &Word) -> Word {
        Word(w.letters().iter().flat_map(|&l| self.image(l).letters().iter().copied()).collect())
    }

    pub fn identity(pres: &Presentation) -> Self {
        let t = pres.table();
        WordMap {
            images_a: (0..t.na() as u16).map(|i| Word(vec![Letter::a(i)])).collect(),
            images_b: (0..t.nb() as u16).map(|i| Word(vec![Letter::b(i)])).collect(),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &WordMap) -> WordMap {
        WordMap {
            images_a: self.images_a.iter().map(|w| next.apply(w)).collect(),
            images_b: self.images_b.iter().map(|w| next.apply(w)).collect(),
        }
    }
}

/// `φ_k : Γ_{τ^{p^k}} → Γ_τ`, `a_ξ ↦ a_ξ^{p^k}`, `b_{σ_k(η)} ↦ b_η^{p^k}`.
pub fn phi_k_map(src: &Presentation, dst: &Presentation, k: u32) -> Result<WordMap> {
    let (sp, dp) = match (src.params(), dst.params()) {
        (Some(s), Some(d)) => (s, d),
        _ => return Err(Error::NotApplicable("φ_k needs parametric lattices".into())),
    };
    if sp.field() != dp.field() || sp.c() != dp.c() {
        return Err(Error::ParameterMismatch("source and target differ in field or c".into()));
    }
    let m = p_pow(dp, k);
    let f = dp.field();
    if sp.tau() != f.pow(dp.tau(), m) {
        return Err(Error::ParameterMismatch(format!(
            "source τ = {} is not τ^(p^{k}) = {}",
            f.fmt_elem(sp.tau()),
            f.fmt_elem(f.pow(dp.tau(), m))
        )));
    }
    let power = |l: Letter| Word(vec![l; m as usize]);
    let mut images_a = Vec::new();
    for label in src.table().labels_a() {
        let GenLabel::Param(xi) = label else { unreachable!() };
        let l = dst
            .letter_a(*xi)
            .ok_or_else(|| Error::ParameterMismatch(format!("{xi:?} is not an A-generator of the target")))?;
        images_a.push(power(l));
    }
    let mut preimage = HashMap::new();
    for label in dst.table().labels_b() {
        let GenLabel::Param(eta) = label else { unreachable!() };
        preimage.insert(sigma_k(dp, *eta, k)?, *eta);
    }
    let mut images_b = Vec::new();
    for label in src.table().labels_b() {
        let GenLabel::Param(eta2) = label else { unreachable!() };
        let eta = preimage
            .get(eta2)
            .ok_or_else(|| Error::ParameterMismatch(format!("{eta2:?} is not σ_{k} of a target generator")))?;
        images_b.push(power(dst.letter_b(*eta).expect("from the target alphabet")));
    }
    Ok(WordMap { images_a, images_b })
}

/// Substitution on a named presentation given images of the positive generators,
/// e.g. `[("a", "a^3"), ("x", "x^-3")]`. Inverse letters map to inverse images.
pub fn named_map(src: &Presentation, dst: &Presentation, images: &[(&str, &str)]) -> Result<WordMap> {
    let given: HashMap<&str, Word> = images.iter().map(|&(g, w)| Ok((g, dst.word(w)?))).collect::<Result<_>>()?;
    let table = src.table();
    let image = |label: &GenLabel| -> Result<Word> {
        let GenLabel::Named { name, inv } = label else {
            return Err(Error::NotApplicable("named map on a parametric alphabet".into()));
        };
        let w = given.get(name.as_str()).ok_or_else(|| Error::Parse(format!("no image for generator `{name}`")))?;
        Ok(if *inv { dst.table().inverse_word(w) } else { w.clone() })
    };
    Ok(WordMap {
        images_a: table.labels_a().iter().map(image).collect::<Result<_>>()?,
        images_b: table.labels_b().iter().map(image).collect::<Result<_>>()?,
    })
}

/// `a ↦ a^3, b ↦ b^3, x ↦ x^-3, y ↦ y^-3` on `Γ_3`.
pub fn gamma3_cube_map(g3: &Presentation) -> Result<WordMap> {
    named_map(g3, g3, &[("a", "a^3"), ("b", "b^3"), ("x", "x^-3"), ("y", "y^-3")])
}

/// `a ↦ a^4, b ↦ b^4, x ↦ x, y ↦ y` on `Γ_4`.
pub fn gamma4_map(g4: &Presentation) -> Result<WordMap> {
    named_map(g4, g4, &[("a", "a^4"), ("b", "b^4"), ("x", "x"), ("y", "y")])
}

#[derive(Clone, Debug, Serialize)]
pub struct HomReport {
    pub relations: usize,
    pub failures: Vec<String>,
}

impl HomReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that the image of every relator of `src` is trivial in `dst`:
/// each table entry `a b a'^-1 b'^-1` and each `l l^-1`.
pub fn verify_homomorphism(src: &Presentation, dst: &Presentation, map: &WordMap) -> Result<HomReport> {
    let st = src.table();
    let dt = dst.table();
    if map.images_a.len() != st.na() || map.images_b.len() != st.nb() {
        return Err(Error::InvalidParams("map is not defined on every source letter".into()));
    }
    let mut relations = 0;
    let mut failures = Vec::new();
    for [a, b, b2, a2] in st.entries() {
        let (a, b, b2, a2) = (Letter::a(a), Letter::b(b), Letter::b(b2), Letter::a(a2));
        let rel = Word(vec![a, b, st.inv(a2), st.inv(b2)]);
        relations += 1;
        if !is_identity(dt, &map.apply(&rel)) {
            failures.push(format!(
                "{}{} = {}{}",
                st.label_name(a),
                st.label_name(b),
                st.label_name(b2),
                st.label_name(a2)
            ));
        }
    }
    for l in st.letters() {
        relations += 1;
        if !is_identity(dt, &map.apply(&Word(vec![l, st.inv(l)]))) {
            failures.push(format!("{} {}", st.label_name(l), st.label_name(st.inv(l))));
        }
    }
    Ok(HomReport { relations, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_square_table, gamma3, gamma4};

    #[test]
    fn k_tau_examples() {
        assert_eq!(compute_k_tau(&LatticeParams::prime(3, -1, -1).unwrap()), 2);
        assert_eq!(compute_k_tau(&LatticeParams::prime(5, 2, 3).unwrap()), 1);
    }

    #[test]
    fn k_tau_bounds_exhaustive() {
        for p in [3u64, 5, 7] {
            let f = crate::ff::FieldCtx::new(p, 1).unwrap();
            let c = f.find_nonsquare();
            for tau in f.elements().filter(|&t| !t.is_zero() && t != FqElem::ONE) {
                let params = LatticeParams::new(f.clone(), c, tau).unwrap();
                let k = compute_k_tau(&params);
                let m = p_pow(&params, k);
                assert_eq!(f.pow(tau, m), tau);
                assert!(m <= (params.q() as u64).pow(2));
                for x in params.n_c().into_iter().chain(params.m_tau()) {
                    assert_eq!(sigma_k(&params, x, k).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn sigma_moves_m_tau_to_m_tau_pk() {
        let params = LatticeParams::prime(5, 2, 2).unwrap();
        let f = params.field().clone();
        let target = params.with_tau(f.pow(params.tau(), 5)).unwrap();
        let image: Vec<_> = params.m_tau().iter().map(|&e| sigma_k(&params, e, 1).unwrap()).collect();
        let mut sorted = image.clone();
        sorted.sort();
        assert_eq!(sorted, target.m_tau());
    }

    #[test]
    fn identity_map_is_a_homomorphism() {
        let g = gamma4();
        assert!(verify_homomorphism(&g, &g, &WordMap::identity(&g)).unwrap().pass());
    }

    #[test]
    fn named_power_maps() {
        let g3 = gamma3();
        let cube = gamma3_cube_map(&g3).unwrap();
        assert!(verify_homomorphism(&g3, &g3, &cube).unwrap().pass());
        let ninth = cube.then(&cube);
        assert_eq!(ninth.apply(&g3.word("a").unwrap()), g3.word("a^9").unwrap());
        assert_eq!(ninth.apply(&g3.word("x").unwrap()), g3.word("x^9").unwrap());
        assert!(verify_homomorphism(&g3, &g3, &ninth).unwrap().pass());
        let g4 = gamma4();
        assert!(verify_homomorphism(&g4, &g4, &gamma4_map(&g4).unwrap()).unwrap().pass());
    }

    #[test]
    fn wrong_named_map_fails() {
        let g3 = gamma3();
        let bad = named_map(&g3, &g3, &[("a", "a^3"), ("b", "b^3"), ("x", "x^3"), ("y", "y^3")]).unwrap();
        assert!(!verify_homomorphism(&g3, &g3, &bad).unwrap().pass());
    }

    #[test]
    fn phi_k_parametric() {
        let params = LatticeParams::prime(3, -1, -1).unwrap();
        let g = build_square_table(&params).unwrap();
        for k in [1, 2] {
            let map = phi_k_map(&g, &g, k).unwrap();
            assert!(verify_homomorphism(&g, &g, &map).unwrap().pass(), "k = {k}");
        }
        // Over F_9 the Frobenius moves τ, so φ_1 joins two different lattices.
        let f9 = crate::ff::FieldCtx::new(3, 2).unwrap();
        let tau = f9.from_coeffs(&[0, 1]).unwrap();
        let p9 = LatticeParams::new(f9.clone(), f9.find_nonsquare(), tau).unwrap();
        let src_params = p9.with_tau(f9.pow(tau, 3)).unwrap();
        assert_ne!(src_params.tau(), tau);
        let dst = build_square_table(&p9).unwrap();
        let src = build_square_table(&src_params).unwrap();
        let map = phi_k_map(&src, &dst, 1).unwrap();
        assert!(verify_homomorphism(&src, &dst, &map).unwrap().pass());
        assert!(matches!(phi_k_map(&dst, &dst, 1), Err(Error::ParameterMismatch(_))));
    }
}
