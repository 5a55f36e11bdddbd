//! Parikh images of the word problem intersected with bounded languages.

mod enumerate;
mod expected;
mod presets;
mod sets;

pub use enumerate::{enumerate_parikh, membership, BoundedLanguageSpec, EnumOptions};
pub use expected::{compare, expected_gamma_tau_set, theorem_expected, CompareReport, ExpectedSet, Family};
pub use presets::{
    first_noncommuting_square, gamma3_proposition_set, gamma3_proposition_sign_variant, language_preset,
    language_presets, q5_commuting_pair, LanguagePreset, LatticeRef,
};
pub use sets::{in_box, linear_membership, Growth, LinearSet, ParikhSet, Point, SemilinearSet};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{gamma3, gamma32};
    use proptest::prelude::*;

    fn spec(pres: &crate::lattice::Presentation, words: &str, signed: bool) -> BoundedLanguageSpec {
        BoundedLanguageSpec::parse(pres.table(), words, signed).unwrap()
    }

    #[test]
    fn gamma3_corollary_small() {
        let g = gamma3();
        let s = spec(&g, "a;x;b^-1;x", false);
        let got = enumerate_parikh(g.table(), &s, 10, EnumOptions::default()).unwrap();
        assert_eq!(got.points, vec![vec![0; 4], vec![1; 4], vec![9; 4]]);
        assert!(membership(g.table(), &s, &[81; 4]).unwrap());
        assert!(!membership(g.table(), &s, &[27; 4]).unwrap());
        assert!(membership(g.table(), &s, &[0; 4]).unwrap());
    }

    #[test]
    fn gamma32_finite_set() {
        let g = gamma32();
        let s = spec(&g, "b;x;a^-1;y^-1", false);
        let got = enumerate_parikh(g.table(), &s, 10, EnumOptions::default()).unwrap();
        assert_eq!(got.points, vec![vec![0; 4], vec![1; 4], vec![3; 4]]);
    }

    #[test]
    fn proposition_set_from_the_presentation() {
        let p = language_preset("gamma3-signed").unwrap();
        let g = p.lattice.load().unwrap();
        let s = p.spec(&g).unwrap();
        let got = enumerate_parikh(g.table(), &s, 10, EnumOptions::default()).unwrap();
        assert!(compare(&got, &p.expected, 10, true).pass());
        assert!(got.contains(&[3, -3, -3, 3]));
        assert!(got.contains(&[1, 1, 1, 1]));
        assert!(!got.contains(&[3, -3, 3, 3]));
        assert!(!compare(&got, &gamma3_proposition_sign_variant(), 10, true).pass());
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = gamma3();
        let s = spec(&g, "a;x;b^-1;x", false);
        let one = enumerate_parikh(g.table(), &s, 12, EnumOptions { prune: true, jobs: 1 }).unwrap();
        let four = enumerate_parikh(g.table(), &s, 12, EnumOptions { prune: true, jobs: 4 }).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn theorem_hypotheses() {
        for id in ["q3-square", "q5-square"] {
            let p = language_preset(id).unwrap();
            let pres = p.lattice.load().unwrap();
            let s = p.spec(&pres).unwrap();
            assert_eq!(theorem_expected(&pres, &s).unwrap(), p.expected);
        }
        let p = language_preset("q5-commuting").unwrap();
        let pres = p.lattice.load().unwrap();
        let s = p.spec(&pres).unwrap();
        assert!(matches!(theorem_expected(&pres, &s), Err(crate::Error::HypothesisViolated(_))));
        assert!(theorem_expected(&gamma3(), &spec(&gamma3(), "a;x;b^-1;x", false)).is_err());
    }

    #[test]
    fn spec_validation() {
        let g = gamma3();
        assert!(BoundedLanguageSpec::parse(g.table(), "a;;x", false).is_err());
        let s = spec(&g, "a;x", false);
        assert!(membership(g.table(), &s, &[-1, 0]).is_err());
        assert!(BoundedLanguageSpec::with_order(s.words.clone(), false, Some(vec![0, 0])).is_err());
    }

    fn small_specs() -> Vec<(crate::lattice::Presentation, BoundedLanguageSpec)> {
        let mut out = Vec::new();
        for p in language_presets().unwrap() {
            let pres = p.lattice.load().unwrap();
            let s = p.spec(&pres).unwrap();
            out.push((pres, s));
        }
        out
    }

    #[test]
    fn pruning_is_exact() {
        for (pres, s) in small_specs() {
            for n in [0, 3, 6] {
                let a = enumerate_parikh(pres.table(), &s, n, EnumOptions { prune: true, jobs: 1 }).unwrap();
                let b = enumerate_parikh(pres.table(), &s, n, EnumOptions { prune: false, jobs: 1 }).unwrap();
                assert_eq!(a, b);
                for x in &a.points {
                    assert!(membership(pres.table(), &s, x).unwrap());
                }
            }
        }
    }

    #[test]
    fn signed_agrees_on_the_orthant() {
        let g = gamma3();
        let u = spec(&g, "a;x;b^-1;x", false);
        let s = spec(&g, "a;x;b^-1;x", true);
        let a = enumerate_parikh(g.table(), &u, 5, EnumOptions::default()).unwrap();
        let b = enumerate_parikh(g.table(), &s, 5, EnumOptions::default()).unwrap();
        assert_eq!(a, b.restrict(5, false));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn enumerated_points_are_members(x in prop::collection::vec(0i64..4, 4)) {
            let g = gamma3();
            let s = spec(&g, "a;y;b;x", false);
            let got = enumerate_parikh(g.table(), &s, 3, EnumOptions::default()).unwrap();
            prop_assert_eq!(got.contains(&x), membership(g.table(), &s, &x).unwrap());
        }
    }
}
