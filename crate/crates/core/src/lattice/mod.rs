//! Presentations of `Γ_τ` and of the named square complexes.

mod build;
mod lemmas;
mod named;
mod params;
mod power;
mod presentation;
mod table;

pub use build::{
    build_square_table, oracle_check_entries, oracle_check_quads, oracle_check_table, satisfies_square_system,
    solve_square, EntryCheck, OracleReport,
};
pub use lemmas::{check_finite_lemmas, square_power_holds, LemmaCheck, LemmaReport, PowerRow};
pub use named::{
    dictionary_agrees, gamma3, gamma32, gamma3_dictionary, gamma4, named_from_relations, preset, preset_json,
    GAMMA32_RELATIONS, GAMMA3_RELATIONS, GAMMA4_RELATIONS, PRESET_NAMES,
};
pub use params::{build_generators, LatticeParams, ParamsSpec};
pub use power::{
    compute_k_tau, gamma3_cube_map, gamma4_map, named_map, p_pow, phi_k_map, sigma_k, tau_ratio, verify_homomorphism,
    HomReport, WordMap,
};
pub use presentation::{LabelJson, Presentation, PresentationJson, SquareJson};
pub use table::{GenLabel, Letter, Side, SquareTable, Word};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::{FieldCtx, FqElem};

    fn check_table(params: &LatticeParams) {
        let pres = build_square_table(params).unwrap();
        let q = params.q() as usize;
        let t = pres.table();
        assert_eq!(t.na(), q + 1);
        assert_eq!(t.nb(), q + 1);
        assert_eq!(t.entries().count(), (q + 1) * (q + 1));
        for [a, b, b2, a2] in t.entries() {
            let x = |l| pres.xi_of(l).unwrap();
            assert!(satisfies_square_system(
                params,
                x(Letter::a(a)),
                x(Letter::b(b)),
                x(Letter::b(b2)),
                x(Letter::a(a2))
            ));
        }
    }

    #[test]
    fn tables_for_small_fields() {
        for p in [3u64, 5, 7] {
            let f = FieldCtx::new(p, 1).unwrap();
            let c = f.find_nonsquare();
            for tau in f.elements().filter(|&t| !t.is_zero() && t != FqElem::ONE) {
                check_table(&LatticeParams::new(f.clone(), c, tau).unwrap());
            }
        }
        let f9 = FieldCtx::new(3, 2).unwrap();
        let c = f9.find_nonsquare();
        for tau in f9.elements().filter(|&t| !t.is_zero() && t != FqElem::ONE) {
            check_table(&LatticeParams::new(f9.clone(), c, tau).unwrap());
        }
    }

    #[test]
    fn q3_generators() {
        let params = LatticeParams::prime(3, -1, -1).unwrap();
        let ext = params.ext();
        let el = |u, v| ext.from_coeffs(&[u], &[v]).unwrap();
        let mut n_c = vec![el(1, 0), el(-1, 0), el(0, 1), el(0, -1)];
        let mut m_tau = vec![el(1, 1), el(1, -1), el(-1, 1), el(-1, -1)];
        n_c.sort();
        m_tau.sort();
        assert_eq!(build_generators(&params), (n_c, m_tau));
    }

    #[test]
    fn q3_relation_ax() {
        let params = LatticeParams::prime(3, -1, -1).unwrap();
        let ext = params.ext();
        let el = |u, v| ext.from_coeffs(&[u], &[v]).unwrap();
        assert_eq!(solve_square(&params, el(1, 0), el(1, 1)).unwrap(), (el(-1, -1), el(0, -1)));
    }

    #[test]
    fn oracle_passes_and_catches_corruption() {
        for params in [LatticeParams::prime(3, -1, -1).unwrap(), LatticeParams::prime(5, 2, 3).unwrap()] {
            let pres = build_square_table(&params).unwrap();
            let report = oracle_check_table(&pres).unwrap();
            assert!(report.all_pass());
            assert_eq!(report.total, pres.table().entries().count());
        }
        let params = LatticeParams::prime(3, -1, -1).unwrap();
        let pres = build_square_table(&params).unwrap();
        let x = |l| pres.xi_of(l).unwrap();
        let mut quads: Vec<_> = pres
            .table()
            .entries()
            .map(|[a, b, b2, a2]| [x(Letter::a(a)), x(Letter::b(b)), x(Letter::b(b2)), x(Letter::a(a2))])
            .collect();
        quads[5].swap(0, 3);
        quads[7][2] = params.ext().neg(quads[7][2]);
        let report = oracle_check_quads(&params, &quads).unwrap();
        assert_eq!(report.passed, report.total - 2);
    }

    #[test]
    fn parametric_json_roundtrip() {
        let pres = build_square_table(&LatticeParams::prime(5, 2, 3).unwrap()).unwrap();
        let json = pres.to_json().unwrap();
        assert_eq!(json.k_tau, Some(1));
        assert!(json.squares.iter().any(|s| s.commuting == Some(true)));
        let back = Presentation::from_json_str(&pres.to_json_string().unwrap()).unwrap();
        assert_eq!(back.table(), pres.table());
    }

    #[test]
    fn lemmas_q3() {
        let pres = build_square_table(&LatticeParams::prime(3, -1, -1).unwrap()).unwrap();
        let report = check_finite_lemmas(&pres, 3).unwrap();
        assert!(report.all_pass(), "{report:?}");
        assert_eq!(report.k_tau, 2);
    }
}
