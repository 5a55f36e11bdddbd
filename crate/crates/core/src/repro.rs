//! The acceptance suite: exact reproductions of the worked examples plus randomized property checks.

use std::time::{Duration, Instant};

use crate::ff::{FieldCtx, FqElem};
use crate::lattice::{
    build_generators, build_square_table, check_finite_lemmas, compute_k_tau, dictionary_agrees, gamma3,
    gamma3_cube_map, gamma3_dictionary, gamma4, gamma4_map, oracle_check_table, p_pow, phi_k_map, preset, sigma_k,
    square_power_holds, verify_homomorphism, LatticeParams, Letter, Presentation, SquareTable, Word,
};
use crate::parikh::{
    compare, enumerate_parikh, language_preset, language_presets, membership, EnumOptions, ExpectedSet, Family,
    LanguagePreset, ParikhSet,
};
use crate::quat::{gamma3_matrices, gamma3_relation_checks, Poly, QuatAlgebra, RatFun};
use crate::rewrite::{free_reduce, normal_form, orbit_size, orbit_size_right, pi_action, words_equal, Order};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

type Outcome = std::result::Result<(), String>;

/// One acceptance criterion: a numbered check with a wall-clock limit.
#[derive(Clone, Copy, Debug)]
pub struct Criterion {
    pub number: u32,
    pub name: &'static str,
    pub limit: Duration,
    run: fn() -> Outcome,
}

pub const CRITERIA: [Criterion; 8] = [
    Criterion { number: 1, name: "construction fidelity", limit: Duration::from_secs(1), run: construction_fidelity },
    Criterion { number: 2, name: "oracle equivalence", limit: Duration::from_secs(10), run: oracle_equivalence },
    Criterion { number: 3, name: "orbits", limit: Duration::from_secs(1), run: orbits },
    Criterion { number: 4, name: "k_tau and sigma", limit: Duration::from_secs(5), run: k_tau_and_sigma },
    Criterion { number: 5, name: "endomorphisms", limit: Duration::from_secs(30), run: endomorphisms },
    Criterion { number: 6, name: "p-power relations", limit: Duration::from_secs(60), run: p_power_relations },
    Criterion { number: 7, name: "Parikh reproduction", limit: Duration::from_secs(600), run: parikh_reproduction },
    Criterion { number: 8, name: "property suites", limit: Duration::from_secs(120), run: property_suites },
];

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub number: u32,
    pub name: &'static str,
    pub pass: bool,
    pub seconds: f64,
    pub limit_seconds: f64,
    /// Why the checks failed, if they did.
    pub failure: Option<String>,
}

impl CriterionResult {
    /// `criterion N [name]: PASS (0.12s, limit 1s)`, plus the failure on its own lines.
    pub fn summary(&self) -> String {
        let mut line = format!(
            "criterion {} [{}]: {} ({:.3}s, limit {}s)",
            self.number,
            self.name,
            if self.pass { "PASS" } else { "FAIL" },
            self.seconds,
            self.limit_seconds
        );
        if let Some(why) = &self.failure {
            for l in why.lines() {
                line.push_str("\n  ");
                line.push_str(l);
            }
        }
        line
    }
}

impl Criterion {
    pub fn run(&self) -> CriterionResult {
        let start = Instant::now();
        let result = (self.run)();
        let elapsed = start.elapsed();
        let mut failure = result.err();
        if failure.is_none() && elapsed > self.limit {
            failure = Some(format!("took {elapsed:.2?}"));
        }
        CriterionResult {
            number: self.number,
            name: self.name,
            pass: failure.is_none(),
            seconds: elapsed.as_secs_f64(),
            limit_seconds: self.limit.as_secs_f64(),
            failure,
        }
    }
}

pub fn criterion(number: u32) -> Option<&'static Criterion> {
    CRITERIA.iter().find(|c| c.number == number)
}

/// Runs every criterion in order.
pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA.iter().map(Criterion::run).collect()
}

fn check(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn q3() -> LatticeParams {
    LatticeParams::prime(3, -1, -1).expect("valid parameters")
}

fn q5() -> LatticeParams {
    LatticeParams::prime(5, 2, 3).expect("valid parameters")
}

fn construction_fidelity() -> Outcome {
    let params = q3();
    let ext = params.ext();
    let el = |u, v| ext.from_coeffs(&[u], &[v]).expect("small coefficients");
    let (n_c, m_tau) = build_generators(&params);
    let mut want_n = vec![el(1, 0), el(-1, 0), el(0, 1), el(0, -1)];
    let mut want_m = vec![el(1, 1), el(1, -1), el(-1, 1), el(-1, -1)];
    want_n.sort();
    want_m.sort();
    check(n_c == want_n, format!("N_c = {n_c:?}"))?;
    check(m_tau == want_m, format!("M_tau = {m_tau:?}"))?;
    let pres = build_square_table(&params).map_err(err)?;
    check(pres.table().entries().count() == 16, "table size")?;
    let dict = gamma3_dictionary(&pres).map_err(err)?;
    check(dictionary_agrees(&gamma3(), &pres, &dict).map_err(err)?, "dictionary disagrees")?;
    // Each defining relation read off the parametric table.
    let letter = |g: &str| dict.iter().find(|(n, _)| *n == g).expect("dictionary covers a, b, x, y").1;
    let t = pres.table();
    let inv = |l: Letter| t.inv(l);
    let (a, b, x, y) = (letter("a"), letter("b"), letter("x"), letter("y"));
    for (lhs, rhs, name) in [
        ([a, x], [inv(x), b], "ax=x^-1b"),
        ([a, y], [inv(y), inv(b)], "ay=y^-1b^-1"),
        ([a, inv(y)], [x, inv(a)], "ay^-1=xa^-1"),
        ([b, x], [y, inv(b)], "bx=yb^-1"),
    ] {
        check(t.swap(lhs[0].idx, lhs[1].idx) == (rhs[0].idx, rhs[1].idx), format!("{name} missing"))?;
    }
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    for (params, want) in [(q3(), 16), (q5(), 36)] {
        let report = oracle_check_table(&build_square_table(&params).map_err(err)?).map_err(err)?;
        check(report.total == want && report.all_pass(), format!("{}/{} entries pass", report.passed, report.total))?;
    }
    let rel = gamma3_relation_checks(&gamma3_matrices()).map_err(err)?;
    let passed = rel.iter().filter(|(_, ok)| *ok).count();
    check(passed == 4, format!("matrix oracle {passed}/4: {rel:?}"))
}

fn orbits() -> Outcome {
    let g = gamma3();
    let w = |s| g.word(s).expect("gamma3 word");
    let left = orbit_size(g.table(), &w("a"), &w("x^2")).map_err(err)?;
    let right = orbit_size_right(g.table(), &w("x"), &w("a^2")).map_err(err)?;
    check(left == 12 && right == 12, format!("orbit sizes {left}, {right}"))
}

fn k_tau_and_sigma() -> Outcome {
    check(compute_k_tau(&q3()) == 2, "k_tau at (3,-1,-1)")?;
    check(compute_k_tau(&q5()) == 1, "k_tau at (5,2,3)")?;
    for p in [3u64, 5, 7] {
        let f = FieldCtx::new(p, 1).map_err(err)?;
        let c = f.find_nonsquare();
        for tau in f.elements().filter(|&t| !t.is_zero() && t != FqElem::ONE) {
            let params = LatticeParams::new(f.clone(), c, tau).map_err(err)?;
            let k = compute_k_tau(&params);
            let m = p_pow(&params, k);
            check(f.pow(tau, m) == tau, format!("tau^(p^k) != tau at q={p}"))?;
            check(m <= (p * p), format!("p^k_tau > q^2 at q={p}"))?;
            for xi in params.n_c().into_iter().chain(params.m_tau()) {
                check(sigma_k(&params, xi, k).map_err(err)? == xi, format!("sigma moves {xi:?}"))?;
            }
        }
    }
    Ok(())
}

fn endomorphisms() -> Outcome {
    let g3 = gamma3();
    let cube = gamma3_cube_map(&g3).map_err(err)?;
    let ninth = cube.then(&cube);
    check(verify_homomorphism(&g3, &g3, &ninth).map_err(err)?.pass(), "9th-power map on Gamma_3")?;

    let pres = build_square_table(&q3()).map_err(err)?;
    let phi2 = phi_k_map(&pres, &pres, compute_k_tau(&q3())).map_err(err)?;
    check(verify_homomorphism(&pres, &pres, &phi2).map_err(err)?.pass(), "phi_2 on q=3")?;
    let f = q3().field().clone();
    let src = build_square_table(&q3().with_tau(f.pow(q3().tau(), 3)).map_err(err)?).map_err(err)?;
    let phi1 = phi_k_map(&src, &pres, 1).map_err(err)?;
    check(verify_homomorphism(&src, &pres, &phi1).map_err(err)?.pass(), "phi_1 at q=3")?;

    let g4 = gamma4();
    check(verify_homomorphism(&g4, &g4, &gamma4_map(&g4).map_err(err)?).map_err(err)?.pass(), "Gamma_4 map")?;

    for (p, c) in [(3u64, -1i64), (5, 2)] {
        let f = FieldCtx::new(p, 1).map_err(err)?;
        for tau in f.elements().filter(|&t| !t.is_zero() && t != FqElem::ONE) {
            let params = LatticeParams::new(f.clone(), f.from_int(c), tau).map_err(err)?;
            let alg = QuatAlgebra::new(params.ext().clone());
            let t = RatFun::from_poly(Poly::t());
            for xi in params.n_c().into_iter().chain(params.m_tau()) {
                for k in [1, 2] {
                    check(
                        alg.verify_power_lemma(xi, &t, k).map_err(err)?,
                        format!("power lemma at q={p}, xi={xi:?}, k={k}"),
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn p_power_relations() -> Outcome {
    let pres = build_square_table(&q3()).map_err(err)?;
    let report = check_finite_lemmas(&pres, 4).map_err(err)?;
    check(report.all_pass(), format!("{report:?}"))?;
    let holds: Vec<u32> = report.powers.iter().filter(|r| r.holds == r.squares).map(|r| r.n).collect();
    check(holds == vec![2, 4], format!("q=3 relation holds for n in {holds:?}"))?;
    check(report.powers.iter().all(|r| r.holds == r.squares || r.holds == 0), "mixed outcome at q=3")?;

    let pres = build_square_table(&q5()).map_err(err)?;
    let squares: Vec<[u16; 4]> = pres.table().entries().filter(|sq| sq[0] != sq[3]).collect();
    for n in 1..=3u32 {
        let m = 5usize.pow(n);
        let bad = squares.iter().filter(|&&sq| !square_power_holds(&pres, sq, m)).count();
        check(bad == 0, format!("q=5: {bad} squares fail at n={n}"))?;
    }
    Ok(())
}

fn run_language(id: &str) -> Result<(ParikhSet, LanguagePreset, Presentation), String> {
    let p = language_preset(id).map_err(err)?;
    let pres = p.lattice.load().map_err(err)?;
    let spec = p.spec(&pres).map_err(err)?;
    let got = enumerate_parikh(pres.table(), &spec, p.bound, EnumOptions { prune: true, jobs: 4 }).map_err(err)?;
    Ok((got, p, pres))
}

fn parikh_reproduction() -> Outcome {
    let mut failures = Vec::new();

    let (got, p, pres) = run_language("gamma3-axbx")?;
    let want = vec![vec![0; 4], vec![1; 4], vec![9; 4]];
    if got.points != want {
        failures.push(format!("gamma3 corollary: {:?}", got.points));
    }
    let spec = p.spec(&pres).map_err(err)?;
    for (x, expect) in [([81; 4], true), ([27; 4], false), ([81, 81, 81, 80], false)] {
        if membership(pres.table(), &spec, &x).map_err(err)? != expect {
            failures.push(format!("membership {x:?} should be {expect}"));
        }
    }

    // Signed set as listed in the criterion: {0} ∪ {(0,n,-n,0)} ∪ {±(3,-3,3,3)} ∪ {±(9,9,9,9)}.
    let (got, p, _) = run_language("gamma3-signed")?;
    let listed = ExpectedSet::Formula {
        d: 4,
        families: vec![
            Family::Linear { base: vec![0; 4], periods: vec![] },
            Family::Line { direction: vec![0, 1, -1, 0] },
            Family::Linear { base: vec![3, -3, 3, 3], periods: vec![] },
            Family::Linear { base: vec![-3, 3, -3, -3], periods: vec![] },
            Family::Linear { base: vec![9; 4], periods: vec![] },
            Family::Linear { base: vec![-9; 4], periods: vec![] },
        ],
    };
    let r = compare(&got, &listed, p.bound, true);
    if !r.pass() {
        failures.push(format!(
            "gamma3 signed set differs from the listed set: missing {:?}, unexpected {:?}",
            r.missing, r.unexpected
        ));
    }

    for id in [
        "gamma4-axby",
        "gamma4-ayby",
        "gamma4-byax",
        "gamma4-bxax",
        "gamma32-axbx",
        "gamma32-ayby",
        "gamma32-bxay",
        "gamma32-bycx",
        "gamma32-cxcy",
        "gamma32-cyax",
        "q5-commuting",
    ] {
        let (got, p, _) = run_language(id)?;
        let r = compare(&got, &p.expected, p.bound, p.signed);
        if !r.pass() {
            failures.push(format!("{id}: missing {:?}, unexpected {:?}", r.missing, r.unexpected));
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures.join("\n  "))
    }
}

fn random_word(rng: &mut impl Rng, t: &SquareTable, len: usize) -> Word {
    Word(
        (0..len)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Letter::a(rng.gen_range(0..t.na() as u16))
                } else {
                    Letter::b(rng.gen_range(0..t.nb() as u16))
                }
            })
            .collect(),
    )
}

fn random_reduced(rng: &mut impl Rng, t: &SquareTable, a_side: bool, len: usize) -> Word {
    let mut out: Vec<Letter> = Vec::new();
    while out.len() < len {
        let l = if a_side {
            Letter::a(rng.gen_range(0..t.na() as u16))
        } else {
            Letter::b(rng.gen_range(0..t.nb() as u16))
        };
        if out.last() != Some(&t.inv(l)) {
            out.push(l);
        }
    }
    Word(out)
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);

    for p in language_presets().map_err(err)? {
        let pres = p.lattice.load().map_err(err)?;
        let spec = p.spec(&pres).map_err(err)?;
        for n in 0..=6 {
            let a = enumerate_parikh(pres.table(), &spec, n, EnumOptions { prune: true, jobs: 1 }).map_err(err)?;
            let b = enumerate_parikh(pres.table(), &spec, n, EnumOptions { prune: false, jobs: 1 }).map_err(err)?;
            check(a == b, format!("pruning changed {} at N={n}", p.id))?;
        }
    }

    let lattices = vec![
        preset("gamma3").map_err(err)?,
        preset("gamma4").map_err(err)?,
        preset("gamma32").map_err(err)?,
        build_square_table(&q5()).map_err(err)?,
    ];
    for pres in &lattices {
        let t = pres.table();
        for _ in 0..500 {
            let len = rng.gen_range(0..60);
            let w = random_word(&mut rng, t, len);
            let ab = normal_form(t, &w, Order::AB);
            let ba = normal_form(t, &w, Order::BA);
            check(ab.u.len() == ba.u.len() && ab.v.len() == ba.v.len(), "AB/BA lengths differ")?;
            check(words_equal(t, &ab.to_word(), &ba.to_word()), "AB/BA forms differ")?;

            let (lg, lh) = (rng.gen_range(0..10), rng.gen_range(0..10));
            let g = random_reduced(&mut rng, t, true, lg);
            let h = random_reduced(&mut rng, t, false, lh);
            let (ph, pg) = pi_action(t, &g, &h).map_err(err)?;
            check(ph.len() == h.len() && pg.len() == g.len(), "pi changed a length")?;
            let k = rng.gen_range(0..=h.len());
            let (pk, _) = pi_action(t, &g, &Word(h.letters()[..k].to_vec())).map_err(err)?;
            check(pk.letters() == &ph.letters()[..k], "pi broke a prefix")?;

            let raw = Word((0..rng.gen_range(0..40)).map(|_| Letter::a(rng.gen_range(0..t.na() as u16))).collect());
            let cut = rng.gen_range(0..=raw.len());
            let left = free_reduce(t, &Word(raw.letters()[..cut].to_vec())).map_err(err)?;
            let right = free_reduce(t, &Word(raw.letters()[cut..].to_vec())).map_err(err)?;
            check(
                free_reduce(t, &left.concat(&right)).map_err(err)? == free_reduce(t, &raw).map_err(err)?,
                "free reduction is not confluent",
            )?;
            check(free_reduce(t, &raw.concat(&t.inverse_word(&raw))).map_err(err)?.is_empty(), "w w^-1")?;
        }
    }

    for (p, e) in [(3u64, 1u32), (5, 1), (7, 1), (3, 2), (5, 2), (3, 3)] {
        let f = FieldCtx::new(p, e).map_err(err)?;
        let q = f.q();
        let el = |rng: &mut ChaCha8Rng| f.elements().nth(rng.gen_range(0..q) as usize).expect("index below q");
        for _ in 0..500 {
            let (x, y, z) = (el(&mut rng), el(&mut rng), el(&mut rng));
            check(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)), "mul associativity")?;
            check(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)), "distributivity")?;
            check(f.add(x, f.neg(x)).is_zero(), "additive inverse")?;
            if !x.is_zero() {
                check(f.mul(x, f.inv(x).map_err(err)?) == FqElem::ONE, "multiplicative inverse")?;
            }
        }
        let ext = crate::ff::QuadExt::new(f.clone(), f.find_nonsquare()).map_err(err)?;
        let mut total = 0;
        for s in f.elements().filter(|s| !s.is_zero()) {
            let fiber = ext.norm_fiber(s).map_err(err)?;
            check(fiber.len() == q as usize + 1, format!("fiber size at q={q}"))?;
            total += fiber.len();
        }
        check(total == (q * q - 1) as usize, "fibers do not partition")?;
        let elems: Vec<_> = ext.elements().collect();
        for _ in 0..500 {
            let x = elems[rng.gen_range(0..elems.len())];
            let y = elems[rng.gen_range(0..elems.len())];
            check(ext.norm(ext.mul(x, y)) == f.mul(ext.norm(x), ext.norm(y)), "norm is multiplicative")?;
            check(ext.conjugate(ext.conjugate(x)) == x, "conjugation is an involution")?;
        }
    }
    Ok(())
}
