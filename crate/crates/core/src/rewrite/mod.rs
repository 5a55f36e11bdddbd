//! Word problem via the two normal forms, and the actions `π_g`, `π_h`.

mod action;
mod normal_form;

pub use action::{commutes, is_anti_torus, orbit, orbit_right, orbit_size, orbit_size_right, pi_action, pi_power};
pub use normal_form::{free_reduce, is_identity, normal_form, words_equal, NormalForm, NormalFormBuilder, Order};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_square_table, gamma3, gamma32, gamma4, LatticeParams, Letter, Presentation, Word};
    use proptest::prelude::*;

    fn w(p: &Presentation, s: &str) -> Word {
        p.word(s).unwrap()
    }

    #[test]
    fn gamma3_orbits() {
        let g = gamma3();
        let t = g.table();
        assert_eq!(orbit_size(t, &w(&g, "a"), &w(&g, "x^2")).unwrap(), 12);
        assert_eq!(orbit_size_right(t, &w(&g, "x"), &w(&g, "a^2")).unwrap(), 12);
        assert_eq!(orbit_size(t, &w(&g, "a"), &Word::empty()).unwrap(), 1);
        assert_eq!(pi_power(t, &w(&g, "a"), &w(&g, "x^2"), 9).unwrap(), w(&g, "x^-2"));
    }

    #[test]
    fn gamma3_identities() {
        let g = gamma3();
        let t = g.table();
        assert!(is_identity(t, &w(&g, "a,x,b^-1,x")));
        assert!(is_identity(t, &w(&g, "a^9,x^9,b^-9,x^9")));
        assert!(!is_identity(t, &w(&g, "a^3,x^3,b^-3,x^3")));
        assert!(is_identity(t, &Word::empty()));
    }

    #[test]
    fn pi_of_single_square() {
        // a x = x^-1 b, so π_a(x) = x^-1 and π_x(a) = b.
        let g = gamma3();
        let t = g.table();
        let (h, a) = pi_action(t, &w(&g, "a"), &w(&g, "x")).unwrap();
        assert_eq!(h, w(&g, "x^-1"));
        assert_eq!(a, w(&g, "b"));
        assert_eq!(pi_action(t, &Word::empty(), &w(&g, "x,y")).unwrap(), (w(&g, "x,y"), Word::empty()));
        assert!(pi_action(t, &w(&g, "a,a^-1"), &w(&g, "x")).is_err());
    }

    #[test]
    fn commuting_examples() {
        let g = gamma3();
        let t = g.table();
        assert!(!commutes(t, &w(&g, "a"), &w(&g, "x")));
        assert!(commutes(t, &w(&g, "a,x"), &w(&g, "a,x")));
        assert!(is_anti_torus(
            &build_square_table(&LatticeParams::prime(3, -1, -1).unwrap()).unwrap(),
            &Word(vec![Letter::a(0)]),
            &Word(vec![Letter::b(0)])
        )
        .unwrap());
        assert!(is_anti_torus(&g, &w(&g, "a"), &w(&g, "x")).is_err());

        let p5 = LatticeParams::prime(5, 2, 3).unwrap();
        let pres = build_square_table(&p5).unwrap();
        let ext = p5.ext();
        let a = pres.letter_a(ext.from_coeffs(&[0], &[-1]).unwrap()).unwrap();
        let b = pres.letter_b(ext.from_coeffs(&[0], &[2]).unwrap()).unwrap();
        let (ga, hb) = (Word(vec![a]), Word(vec![b]));
        assert!(commutes(pres.table(), &ga, &hb));
        assert!(!is_anti_torus(&pres, &ga, &hb).unwrap());
        assert!(!is_anti_torus(&pres, &ga, &Word::empty()).unwrap());
    }

    #[test]
    fn pi_is_a_bijection_on_small_spheres() {
        let pres = build_square_table(&LatticeParams::prime(3, -1, -1).unwrap()).unwrap();
        let t = pres.table();
        let nb = t.nb() as u16;
        let mut sphere = vec![Word::empty()];
        for n in 1..=3 {
            sphere = sphere
                .iter()
                .flat_map(|s| {
                    (0..nb).filter_map(move |b| {
                        let l = Letter::b(b);
                        (s.letters().last() != Some(&t.inv(l))).then(|| s.concat(&Word(vec![l])))
                    })
                })
                .collect();
            for ga in 0..t.na() as u16 {
                let g = Word(vec![Letter::a(ga)]);
                let mut image: Vec<Word> = sphere.iter().map(|h| pi_action(t, &g, h).unwrap().0).collect();
                image.sort();
                image.dedup();
                let mut s = sphere.clone();
                s.sort();
                assert_eq!(image, s, "n = {n}");
            }
        }
    }

    fn random_word(table: &crate::lattice::SquareTable, picks: &[(bool, u16)]) -> Word {
        Word(
            picks
                .iter()
                .map(|&(a, i)| if a { Letter::a(i % table.na() as u16) } else { Letter::b(i % table.nb() as u16) })
                .collect(),
        )
    }

    fn one_sided(table: &crate::lattice::SquareTable, a_side: bool, picks: &[u16]) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for &i in picks {
            let l = if a_side { Letter::a(i % table.na() as u16) } else { Letter::b(i % table.nb() as u16) };
            if out.last() == Some(&table.inv(l)) {
                continue;
            }
            out.push(l);
        }
        Word(out)
    }

    fn lattices() -> Vec<Presentation> {
        vec![gamma3(), gamma4(), gamma32(), build_square_table(&LatticeParams::prime(5, 2, 3).unwrap()).unwrap()]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn ab_and_ba_agree_in_length(which in 0usize..4, picks in prop::collection::vec((any::<bool>(), 0u16..64), 0..40)) {
            let pres = &lattices()[which];
            let t = pres.table();
            let word = random_word(t, &picks);
            let ab = normal_form(t, &word, Order::AB);
            let ba = normal_form(t, &word, Order::BA);
            prop_assert_eq!(ab.u.len(), ba.u.len());
            prop_assert_eq!(ab.v.len(), ba.v.len());
            prop_assert!(ab.len() <= word.len());
            prop_assert!(words_equal(t, &ab.to_word(), &ba.to_word()));
            prop_assert!(is_identity(t, &word.concat(&t.inverse_word(&word))));
        }

        #[test]
        fn normal_form_is_multiplicative(which in 0usize..4,
            x in prop::collection::vec((any::<bool>(), 0u16..64), 0..25),
            y in prop::collection::vec((any::<bool>(), 0u16..64), 0..25)) {
            let pres = &lattices()[which];
            let t = pres.table();
            let (w1, w2) = (random_word(t, &x), random_word(t, &y));
            let whole = normal_form(t, &w1.concat(&w2), Order::AB);
            let parts = normal_form(
                t,
                &normal_form(t, &w1, Order::AB).to_word().concat(&normal_form(t, &w2, Order::AB).to_word()),
                Order::AB,
            );
            prop_assert_eq!(whole, parts);
        }

        #[test]
        fn pi_preserves_length_and_prefixes(which in 0usize..4,
            g in prop::collection::vec(0u16..64, 0..8),
            h in prop::collection::vec(0u16..64, 0..8)) {
            let pres = &lattices()[which];
            let t = pres.table();
            let g = one_sided(t, true, &g);
            let h = one_sided(t, false, &h);
            let (ph, pg) = pi_action(t, &g, &h).unwrap();
            prop_assert_eq!(ph.len(), h.len());
            prop_assert_eq!(pg.len(), g.len());
            for k in 0..=h.len() {
                let prefix = Word(h.letters()[..k].to_vec());
                let (pk, _) = pi_action(t, &g, &prefix).unwrap();
                prop_assert_eq!(pk.letters(), &ph.letters()[..k]);
            }
            prop_assert!(words_equal(t, &g.concat(&h), &ph.concat(&pg)));
        }

        #[test]
        fn free_reduction_is_confluent(which in 0usize..4, picks in prop::collection::vec(0u16..64, 0..30), cut in 0usize..30) {
            let pres = &lattices()[which];
            let t = pres.table();
            let w = Word(picks.iter().map(|&i| Letter::a(i % t.na() as u16)).collect());
            let full = free_reduce(t, &w).unwrap();
            let k = cut.min(w.len());
            let left = free_reduce(t, &Word(w.letters()[..k].to_vec())).unwrap();
            let right = free_reduce(t, &Word(w.letters()[k..].to_vec())).unwrap();
            prop_assert_eq!(&free_reduce(t, &left.concat(&right)).unwrap(), &full);
            prop_assert!(free_reduce(t, &w.concat(&t.inverse_word(&w))).unwrap().is_empty());
        }
    }
}
