use quatlat::parikh::{
    compare, enumerate_parikh, gamma3_proposition_set, language_presets, membership, theorem_expected, EnumOptions,
};

#[test]
fn every_bundled_language_matches_its_prediction() {
    for p in language_presets().unwrap() {
        let pres = p.lattice.load().unwrap();
        let spec = p.spec(&pres).unwrap();
        let got = enumerate_parikh(pres.table(), &spec, p.bound, EnumOptions { prune: true, jobs: 2 }).unwrap();
        let r = compare(&got, &p.expected, p.bound, p.signed);
        assert!(r.pass(), "{}: {r:?}", p.id);
        for x in &got.points {
            assert!(membership(pres.table(), &spec, x).unwrap(), "{}: {x:?}", p.id);
        }
    }
}

#[test]
fn theorem_instances_predict_their_presets() {
    for p in language_presets().unwrap().into_iter().filter(|p| p.id.ends_with("-square")) {
        let pres = p.lattice.load().unwrap();
        let spec = p.spec(&pres).unwrap();
        assert_eq!(theorem_expected(&pres, &spec).unwrap(), p.expected, "{}", p.id);
    }
}

#[test]
fn signed_gamma3_set_has_the_unit_diagonal() {
    let p = language_presets().unwrap().into_iter().find(|p| p.id == "gamma3-signed").unwrap();
    assert_eq!(p.expected, gamma3_proposition_set());
    let pres = p.lattice.load().unwrap();
    let spec = p.spec(&pres).unwrap();
    // a^i x^j = x^-k b^l, stored as a^i x^j b^-l x^k
    for (x, member) in [
        ([1, 1, 1, 1], true),
        ([-1, -1, -1, -1], true),
        ([3, -3, -3, 3], true),
        ([3, -3, 3, 3], false),
        ([9, 9, 9, 9], true),
        ([27, -27, -27, 27], true),
        ([0, 5, -5, 0], true),
    ] {
        assert_eq!(membership(pres.table(), &spec, &x).unwrap(), member, "{x:?}");
    }
}
