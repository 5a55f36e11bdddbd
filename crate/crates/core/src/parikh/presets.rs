//! Bounded languages with known Parikh images.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{build_square_table, preset, LatticeParams, Letter, Presentation};

use super::enumerate::BoundedLanguageSpec;
use super::expected::{ExpectedSet, Family};

/// Where a preset language lives: a bundled named lattice or a prime-field `Γ_τ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum LatticeRef {
    Named(&'static str),
    Prime { p: u64, c: i64, tau: i64 },
}

impl LatticeRef {
    pub fn load(&self) -> Result<Presentation> {
        match *self {
            LatticeRef::Named(name) => preset(name),
            LatticeRef::Prime { p, c, tau } => build_square_table(&LatticeParams::prime(p, c, tau)?),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LanguagePreset {
    pub id: &'static str,
    pub lattice: LatticeRef,
    /// `;`-separated block words in the lattice's word syntax, indexed by coordinate.
    pub words: String,
    pub signed: bool,
    pub order: Option<Vec<usize>>,
    pub bound: u64,
    pub expected: ExpectedSet,
}

impl LanguagePreset {
    pub fn spec(&self, pres: &Presentation) -> Result<BoundedLanguageSpec> {
        let words = self.words.split(';').map(|w| pres.word(w)).collect::<Result<_>>()?;
        BoundedLanguageSpec::with_order(words, self.signed, self.order.clone())
    }
}

fn lin(base: [i64; 4], periods: &[[i64; 4]]) -> Family {
    Family::Linear { base: base.to_vec(), periods: periods.iter().map(|p| p.to_vec()).collect() }
}

fn diag(values: &[i64]) -> ExpectedSet {
    ExpectedSet::Formula { d: 4, families: values.iter().map(|&v| lin([v; 4], &[])).collect() }
}

fn formula(families: Vec<Family>) -> ExpectedSet {
    ExpectedSet::Formula { d: 4, families }
}

/// `P = {(i,j,k,l) : a^i x^j = x^-k b^l}` for `Γ_3`, as computed from the presentation:
/// `{0} ∪ {(0,n,-n,0)} ∪ {±(3^n,-3^n,-3^n,3^n) : n odd} ∪ {±(3^n,3^n,3^n,3^n) : n even}`.
pub fn gamma3_proposition_set() -> ExpectedSet {
    formula(vec![
        lin([0; 4], &[]),
        Family::Line { direction: vec![0, 1, -1, 0] },
        Family::Power { base: 3, first: 1, step: 2, pattern: vec![1, -1, -1, 1], symmetric: true },
        Family::Power { base: 3, first: 0, step: 2, pattern: vec![1, 1, 1, 1], symmetric: true },
    ])
}

/// Variant with third coordinate `+3^n` on the odd terms and no `±(1,1,1,1)`.
pub fn gamma3_proposition_sign_variant() -> ExpectedSet {
    formula(vec![
        lin([0; 4], &[]),
        Family::Line { direction: vec![0, 1, -1, 0] },
        Family::Power { base: 3, first: 1, step: 2, pattern: vec![1, -1, 1, 1], symmetric: true },
        Family::Power { base: 3, first: 2, step: 2, pattern: vec![1, 1, 1, 1], symmetric: true },
    ])
}

/// `a_{-Z}` and `b_{2Z}` at `q=5, c=2, τ=3`: the pair `2t+2F`, `2t+F`.
pub fn q5_commuting_pair(pres: &Presentation) -> Result<(Letter, Letter)> {
    let params =
        pres.params().ok_or_else(|| Error::NotApplicable("commuting pair lives in a parametric lattice".into()))?;
    let ext = params.ext();
    let a = pres.letter_a(ext.from_coeffs(&[0], &[-1])?);
    let b = pres.letter_b(ext.from_coeffs(&[0], &[2])?);
    a.zip(b).ok_or_else(|| Error::ParameterMismatch("pair not among the generators (need q=5, c=2, τ=3)".into()))
}

/// A non-commuting square `a b = b' a'` read as the letters of `a^* b^* (a')^{-*} (b')^{-*}`.
pub fn first_noncommuting_square(pres: &Presentation) -> Option<[Letter; 4]> {
    let t = pres.table();
    t.entries()
        .find(|sq| sq[0] != sq[3])
        .map(|[a, b, b2, a2]| [Letter::a(a), Letter::b(b), t.inv(Letter::a(a2)), t.inv(Letter::b(b2))])
}

fn words_of(pres: &Presentation, letters: &[Letter]) -> String {
    letters.iter().map(|&l| pres.table().label_name(l)).collect::<Vec<_>>().join(";")
}

/// Every bundled language with its predicted Parikh image.
pub fn language_presets() -> Result<Vec<LanguagePreset>> {
    use LatticeRef::*;
    let g = |id, lattice, words: &str, bound, expected| LanguagePreset {
        id,
        lattice,
        words: words.into(),
        signed: false,
        order: None,
        bound,
        expected,
    };
    let g4_first = || formula(vec![lin([0; 4], &[]), lin([1; 4], &[[3, 0, 3, 0]])]);
    let g32_torus = || formula(vec![lin([0; 4], &[[0, 1, 0, 1]]), lin([0, 1, 0, 1], &[[1, 0, 1, 0]])]);
    let mut out = vec![
        g("gamma3-axbx", Named("gamma3"), "a;x;b^-1;x", 30, ExpectedSet::PowerDiagonal { m: 9, d: 4 }),
        LanguagePreset {
            id: "gamma3-signed",
            lattice: Named("gamma3"),
            words: "a;x;x;b^-1".into(),
            signed: true,
            order: Some(vec![0, 1, 3, 2]),
            bound: 10,
            expected: gamma3_proposition_set(),
        },
        g("gamma4-axby", Named("gamma4"), "a;x;b^-1;y^-1", 15, g4_first()),
        g("gamma4-ayby", Named("gamma4"), "a;y;b^-1;y", 15, g4_first()),
        g("gamma4-byax", Named("gamma4"), "b;y;a^-1;x", 15, g4_first()),
        g(
            "gamma4-bxax",
            Named("gamma4"),
            "b;x;a;x^-1",
            15,
            formula(vec![
                lin([0; 4], &[]),
                lin([0, 1, 0, 1], &[[1, 0, 1, 0]]),
                lin([0; 4], &[[0, 1, 0, 1]]),
                lin([0, 1, 0, 1], &[[3, 0, 3, 0], [0, 4, 0, 4]]),
            ]),
        ),
        g("gamma32-axbx", Named("gamma32"), "a;x;b^-1;x^-1", 10, g32_torus()),
        g("gamma32-ayby", Named("gamma32"), "a;y;b^-1;y^-1", 10, g32_torus()),
        g("gamma32-bxay", Named("gamma32"), "b;x;a^-1;y^-1", 10, diag(&[0, 1, 3])),
        g("gamma32-bycx", Named("gamma32"), "b;y;c^-1;x^-1", 10, diag(&[0, 1])),
        g(
            "gamma32-cxcy",
            Named("gamma32"),
            "c;x;c^-1;y^-1",
            10,
            formula(vec![lin([1, 0, 1, 0], &[[0, 1, 0, 1]]), lin([0; 4], &[[1, 0, 1, 0]])]),
        ),
        g("gamma32-cyax", Named("gamma32"), "c;y;a^-1;x^-1", 10, diag(&[0, 1])),
    ];

    let q5 = Prime { p: 5, c: 2, tau: 3 };
    let pres = q5.load()?;
    let (a, b) = q5_commuting_pair(&pres)?;
    let t = pres.table();
    out.push(g(
        "q5-commuting",
        q5.clone(),
        &words_of(&pres, &[a, b, t.inv(a), t.inv(b)]),
        10,
        formula(vec![lin([0; 4], &[[1, 0, 1, 0], [0, 1, 0, 1]])]),
    ));
    let sq = first_noncommuting_square(&pres).expect("q=5 has non-commuting squares");
    out.push(g("q5-square", q5, &words_of(&pres, &sq), 30, ExpectedSet::PowerDiagonal { m: 5, d: 4 }));

    let q3 = Prime { p: 3, c: -1, tau: -1 };
    let pres = q3.load()?;
    let sq = first_noncommuting_square(&pres).expect("q=3 has non-commuting squares");
    out.push(g("q3-square", q3, &words_of(&pres, &sq), 30, ExpectedSet::PowerDiagonal { m: 9, d: 4 }));
    Ok(out)
}

pub fn language_preset(id: &str) -> Result<LanguagePreset> {
    language_presets()?
        .into_iter()
        .find(|p| p.id == id)
        .ok_or_else(|| Error::Parse(format!("unknown language preset `{id}`")))
}
