//! Named lattices given by literal square lists: `Γ_3`, `Γ_4` and `Γ_{3,2}`.

use crate::error::{Error, Result};

use super::presentation::Presentation;
use super::table::{GenLabel, Letter, SquareTable};

pub const GAMMA3_RELATIONS: [&str; 4] = ["ax=x^-1b", "ay=y^-1b^-1", "ay^-1=xa^-1", "bx=yb^-1"];
pub const GAMMA4_RELATIONS: [&str; 4] = ["ax=yb", "ay=y^-1b", "bx=xa^-1", "by=x^-1a"];
pub const GAMMA32_RELATIONS: [&str; 6] = ["ax=xb", "ay=yb", "bx=ya", "by=xc", "cx=yc", "cy=xa"];

pub const PRESET_NAMES: [&str; 3] = ["gamma3", "gamma4", "gamma32"];

fn alphabet(gens: &[&str]) -> (Vec<GenLabel>, Vec<u16>) {
    let mut labels = Vec::new();
    let mut inv = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        labels.push(GenLabel::Named { name: g.to_string(), inv: false });
        labels.push(GenLabel::Named { name: g.to_string(), inv: true });
        inv.push(2 * i as u16 + 1);
        inv.push(2 * i as u16);
    }
    (labels, inv)
}

fn tokens(side: &str) -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    let mut chars = side.trim().chars().peekable();
    while let Some(c) = chars.next() {
        if !c.is_ascii_alphabetic() {
            return Err(Error::Parse(format!("unexpected `{c}` in `{side}`")));
        }
        let mut inv = false;
        if chars.peek() == Some(&'^') {
            let rest: String = chars.by_ref().take(3).collect();
            if rest != "^-1" {
                return Err(Error::Parse(format!("only ^-1 is allowed in relations, got `{rest}`")));
            }
            inv = true;
        }
        out.push((c.to_string(), inv));
    }
    Ok(out)
}

/// Builds a named lattice from relations `a b = b' a'` written like `ay^-1=xa^-1`.
pub fn named_from_relations(name: &str, a_gens: &[&str], b_gens: &[&str], relations: &[&str]) -> Result<Presentation> {
    let (labels_a, inv_a) = alphabet(a_gens);
    let (labels_b, inv_b) = alphabet(b_gens);
    let find = |labels: &[GenLabel], (n, inv): &(String, bool)| -> Result<u16> {
        let key = GenLabel::Named { name: n.clone(), inv: *inv };
        labels
            .iter()
            .position(|l| *l == key)
            .map(|i| i as u16)
            .ok_or_else(|| Error::Parse(format!("letter `{n}` is not on the expected side")))
    };
    let mut squares = Vec::new();
    for rel in relations {
        let (lhs, rhs) = rel.split_once('=').ok_or_else(|| Error::Parse(format!("relation `{rel}` has no `=`")))?;
        let (l, r) = (tokens(lhs)?, tokens(rhs)?);
        if l.len() != 2 || r.len() != 2 {
            return Err(Error::Parse(format!("relation `{rel}` is not a square")));
        }
        squares.push([
            find(&labels_a, &l[0])?,
            find(&labels_b, &l[1])?,
            find(&labels_b, &r[0])?,
            find(&labels_a, &r[1])?,
        ]);
    }
    let table = SquareTable::expand_squares(labels_a, labels_b, inv_a, inv_b, &squares)?;
    Ok(Presentation::named(name, table, squares))
}

pub fn gamma3() -> Presentation {
    named_from_relations("gamma3", &["a", "b"], &["x", "y"], &GAMMA3_RELATIONS).expect("Γ_3 is complete")
}

pub fn gamma4() -> Presentation {
    named_from_relations("gamma4", &["a", "b"], &["x", "y"], &GAMMA4_RELATIONS).expect("Γ_4 is complete")
}

pub fn gamma32() -> Presentation {
    named_from_relations("gamma32", &["a", "b", "c"], &["x", "y"], &GAMMA32_RELATIONS).expect("Γ_{3,2} is complete")
}

const GAMMA3_JSON: &str = include_str!("../../presets/gamma3.json");
const GAMMA4_JSON: &str = include_str!("../../presets/gamma4.json");
const GAMMA32_JSON: &str = include_str!("../../presets/gamma32.json");

/// Bundled preset data file for a named lattice.
pub fn preset_json(name: &str) -> Option<&'static str> {
    match name {
        "gamma3" => Some(GAMMA3_JSON),
        "gamma4" => Some(GAMMA4_JSON),
        "gamma32" => Some(GAMMA32_JSON),
        _ => None,
    }
}

/// Loads a bundled preset by name.
pub fn preset(name: &str) -> Result<Presentation> {
    let json = preset_json(name).ok_or_else(|| Error::Parse(format!("unknown preset `{name}`")))?;
    Presentation::from_json_str(json)
}

/// The identification `a=-t+FZ, b=-t-F, x=-t+F+FZ, y=-t-F+FZ` of `Γ_3` with
/// the parametric lattice at `q=3, c=τ=-1`, as `(generator, parametric letter)`.
pub fn gamma3_dictionary(param: &Presentation) -> Result<Vec<(&'static str, Letter)>> {
    let params =
        param.params().ok_or_else(|| Error::NotApplicable("dictionary needs the parametric lattice".into()))?;
    let f = params.field();
    if f.q() != 3 || params.c() != f.from_int(-1) || params.tau() != f.from_int(-1) {
        return Err(Error::ParameterMismatch("dictionary is defined for q=3, c=τ=-1".into()));
    }
    let ext = params.ext();
    let el = |u: i64, v: i64| ext.from_coeffs(&[u], &[v]);
    let missing = |g: &str| Error::ParameterMismatch(format!("no generator for {g}"));
    Ok(vec![
        ("a", param.letter_a(el(1, 0)?).ok_or_else(|| missing("a"))?),
        ("b", param.letter_a(el(0, -1)?).ok_or_else(|| missing("b"))?),
        ("x", param.letter_b(el(1, 1)?).ok_or_else(|| missing("x"))?),
        ("y", param.letter_b(el(1, -1)?).ok_or_else(|| missing("y"))?),
    ])
}

/// Whether `dict` (images of the positive generators of `named`) carries every
/// square of `named` onto a square of `param`.
pub fn dictionary_agrees(named: &Presentation, param: &Presentation, dict: &[(&str, Letter)]) -> Result<bool> {
    let nt = named.table();
    let pt = param.table();
    let image = |l: Letter| -> Result<Letter> {
        let GenLabel::Named { name, inv } = nt.label(l) else {
            return Err(Error::NotApplicable("dictionary source must be named".into()));
        };
        let &(_, target) =
            dict.iter().find(|(g, _)| g == name).ok_or_else(|| Error::Parse(format!("no image for `{name}`")))?;
        if target.side != l.side {
            return Err(Error::MixedSides);
        }
        Ok(if *inv { pt.inv(target) } else { target })
    };
    for [a, b, b2, a2] in nt.entries() {
        let (ia, ib) = (image(Letter::a(a))?, image(Letter::b(b))?);
        let (ib2, ia2) = (image(Letter::b(b2))?, image(Letter::a(a2))?);
        if pt.swap(ia.idx, ib.idx) != (ib2.idx, ia2.idx) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_square_table, LatticeParams};

    #[test]
    fn presets_match_relations() {
        for (name, built) in [("gamma3", gamma3()), ("gamma4", gamma4()), ("gamma32", gamma32())] {
            let loaded = preset(name).unwrap();
            assert_eq!(loaded.table(), built.table(), "{name}");
            assert_eq!(loaded.squares(), built.squares());
        }
    }

    #[test]
    fn table_sizes() {
        assert_eq!(gamma3().table().entries().count(), 16);
        assert_eq!(gamma4().table().entries().count(), 16);
        assert_eq!(gamma32().table().entries().count(), 24);
        assert_eq!(gamma32().ranks(), (3, 2));
    }

    #[test]
    fn json_roundtrip() {
        for g in [gamma3(), gamma4(), gamma32()] {
            let back = Presentation::from_json_str(&g.to_json_string().unwrap()).unwrap();
            assert_eq!(back.table(), g.table());
        }
    }

    #[test]
    fn relation_syntax_errors() {
        assert!(named_from_relations("g", &["a"], &["x"], &["ax=x"]).is_err());
        assert!(named_from_relations("g", &["a"], &["x"], &["ax^2=xa"]).is_err());
        assert!(named_from_relations("g", &["a"], &["x"], &["xa=ax"]).is_err());
        assert!(named_from_relations("g", &["a"], &["x"], &["ax=xa"]).is_ok());
    }

    #[test]
    fn dictionary_matches_parametric_gamma3() {
        let param = build_square_table(&LatticeParams::prime(3, -1, -1).unwrap()).unwrap();
        let dict = gamma3_dictionary(&param).unwrap();
        assert!(dictionary_agrees(&gamma3(), &param, &dict).unwrap());
        let mut swapped = dict.clone();
        (swapped[2].1, swapped[3].1) = (dict[3].1, dict[2].1);
        assert!(!dictionary_agrees(&gamma3(), &param, &swapped).unwrap());
    }
}
