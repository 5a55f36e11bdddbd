use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::Fq2Elem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

/// A letter of the generating set, addressed by its side and its position in that alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub side: Side,
    pub idx: u16,
}

impl Letter {
    pub fn a(idx: u16) -> Self {
        Letter { side: Side::A, idx }
    }

    pub fn b(idx: u16) -> Self {
        Letter { side: Side::B, idx }
    }
}

/// A word over the alphabet `A ∪ B` of a square table.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn repeat(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    /// The side shared by all letters, or `None` for the empty word or a mixed word.
    pub fn side(&self) -> Option<Side> {
        let first = self.0.first()?.side;
        self.0.iter().all(|l| l.side == first).then_some(first)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

/// How a letter is named: by its `F_{q^2}` index for parametric lattices, or
/// by a symbol and an inversion flag for named presentations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GenLabel {
    Param(Fq2Elem),
    Named { name: String, inv: bool },
}

/// Complete square complex with one vertex: for every `(a, b) ∈ A × B` a
/// unique relation `a b = b' a'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareTable {
    labels_a: Vec<GenLabel>,
    labels_b: Vec<GenLabel>,
    inv_a: Vec<u16>,
    inv_b: Vec<u16>,
    // ab[a * nb + b] = (b', a') with a b = b' a'
    ab: Vec<(u16, u16)>,
    // ba[b * na + a] = (a', b') with b a = a' b'
    ba: Vec<(u16, u16)>,
}

fn check_pairing(inv: &[u16], side: Side) -> Result<()> {
    for (i, &j) in inv.iter().enumerate() {
        if j as usize >= inv.len() || inv[j as usize] as usize != i {
            return Err(Error::InvalidParams(format!("{side:?}-side inverse pairing is not an involution")));
        }
        if j as usize == i {
            return Err(Error::InvalidParams(format!("{side:?}-side letter {i} is its own inverse")));
        }
    }
    Ok(())
}

impl SquareTable {
    /// Builds a table from the full swap map `(a, b) -> (b', a')` and checks
    /// bijectivity and four-reading consistency.
    pub fn from_swap(
        labels_a: Vec<GenLabel>,
        labels_b: Vec<GenLabel>,
        inv_a: Vec<u16>,
        inv_b: Vec<u16>,
        ab: Vec<(u16, u16)>,
    ) -> Result<Self> {
        let (na, nb) = (labels_a.len(), labels_b.len());
        if inv_a.len() != na || inv_b.len() != nb {
            return Err(Error::InvalidParams("inverse pairing length mismatch".into()));
        }
        check_pairing(&inv_a, Side::A)?;
        check_pairing(&inv_b, Side::B)?;
        if ab.len() != na * nb {
            return Err(Error::IncompleteComplex(format!("{} entries for a {na}x{nb} alphabet", ab.len())));
        }
        let mut ba = vec![(u16::MAX, u16::MAX); na * nb];
        for a in 0..na {
            for b in 0..nb {
                let (b2, a2) = ab[a * nb + b];
                if b2 as usize >= nb || a2 as usize >= na {
                    return Err(Error::IncompleteComplex(format!("entry ({a},{b}) out of range")));
                }
                let slot = &mut ba[b2 as usize * na + a2 as usize];
                if slot.0 != u16::MAX {
                    return Err(Error::IncompleteComplex(format!("swap map is not injective at ({b2},{a2})")));
                }
                *slot = (a as u16, b as u16);
            }
        }
        let table = SquareTable { labels_a, labels_b, inv_a, inv_b, ab, ba };
        table.check_four_readings()?;
        Ok(table)
    }

    /// Expands geometric squares `(a, b, b', a')`, read as `a b = b' a'`, into
    /// the full table through their four corner readings.
    pub fn expand_squares(
        labels_a: Vec<GenLabel>,
        labels_b: Vec<GenLabel>,
        inv_a: Vec<u16>,
        inv_b: Vec<u16>,
        squares: &[[u16; 4]],
    ) -> Result<Self> {
        let (na, nb) = (labels_a.len(), labels_b.len());
        if inv_a.len() != na || inv_b.len() != nb {
            return Err(Error::InvalidParams("inverse pairing length mismatch".into()));
        }
        check_pairing(&inv_a, Side::A)?;
        check_pairing(&inv_b, Side::B)?;
        let mut slots: Vec<Option<((u16, u16), usize)>> = vec![None; na * nb];
        for (sq_id, &[a, b, b2, a2]) in squares.iter().enumerate() {
            if [a, a2].iter().any(|&x| x as usize >= na) || [b, b2].iter().any(|&x| x as usize >= nb) {
                return Err(Error::InvalidParams(format!("square {sq_id} uses an unknown letter")));
            }
            let ia = |x: u16| inv_a[x as usize];
            let ib = |x: u16| inv_b[x as usize];
            let readings = [
                ((a, b), (b2, a2)),
                ((ia(a), b2), (b, ia(a2))),
                ((a2, ib(b)), (ib(b2), a)),
                ((ia(a2), ib(b2)), (ib(b), ia(a))),
            ];
            for ((x, y), val) in readings {
                let slot = &mut slots[x as usize * nb + y as usize];
                match slot {
                    None => *slot = Some((val, sq_id)),
                    Some((v, id)) if *id == sq_id && *v == val => {}
                    Some(_) => {
                        return Err(Error::OverlappingSquares(format!(
                            "({}, {})",
                            fmt_label(&labels_a[x as usize]),
                            fmt_label(&labels_b[y as usize])
                        )))
                    }
                }
            }
        }
        let mut ab = Vec::with_capacity(na * nb);
        for (i, s) in slots.iter().enumerate() {
            match s {
                Some((v, _)) => ab.push(*v),
                None => {
                    return Err(Error::IncompleteComplex(format!(
                        "no square at ({}, {})",
                        fmt_label(&labels_a[i / nb]),
                        fmt_label(&labels_b[i % nb])
                    )))
                }
            }
        }
        Self::from_swap(labels_a, labels_b, inv_a, inv_b, ab)
    }

    fn check_four_readings(&self) -> Result<()> {
        for a in 0..self.na() as u16 {
            for b in 0..self.nb() as u16 {
                let (b2, a2) = self.swap(a, b);
                let ok = self.swap(self.inv_a(a), b2) == (b, self.inv_a(a2))
                    && self.swap(a2, self.inv_b(b)) == (self.inv_b(b2), a)
                    && self.swap(self.inv_a(a2), self.inv_b(b2)) == (self.inv_b(b), self.inv_a(a));
                if !ok {
                    return Err(Error::IncompleteComplex(format!(
                        "readings of the square at ({}, {}) disagree",
                        self.label_name(Letter::a(a)),
                        self.label_name(Letter::b(b))
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn na(&self) -> usize {
        self.labels_a.len()
    }

    pub fn nb(&self) -> usize {
        self.labels_b.len()
    }

    pub fn labels_a(&self) -> &[GenLabel] {
        &self.labels_a
    }

    pub fn labels_b(&self) -> &[GenLabel] {
        &self.labels_b
    }

    pub fn label(&self, l: Letter) -> &GenLabel {
        match l.side {
            Side::A => &self.labels_a[l.idx as usize],
            Side::B => &self.labels_b[l.idx as usize],
        }
    }

    pub fn inv_a(&self, a: u16) -> u16 {
        self.inv_a[a as usize]
    }

    pub fn inv_b(&self, b: u16) -> u16 {
        self.inv_b[b as usize]
    }

    pub fn inv(&self, l: Letter) -> Letter {
        match l.side {
            Side::A => Letter::a(self.inv_a(l.idx)),
            Side::B => Letter::b(self.inv_b(l.idx)),
        }
    }

    /// `(b', a')` with `a b = b' a'`.
    #[inline]
    pub fn swap(&self, a: u16, b: u16) -> (u16, u16) {
        self.ab[a as usize * self.nb() + b as usize]
    }

    /// `(a', b')` with `b a = a' b'`.
    #[inline]
    pub fn swap_back(&self, b: u16, a: u16) -> (u16, u16) {
        self.ba[b as usize * self.na() + a as usize]
    }

    /// All entries `(a, b, b', a')` in `(a, b)` order.
    pub fn entries(&self) -> impl Iterator<Item = [u16; 4]> + '_ {
        (0..self.na() as u16).flat_map(move |a| {
            (0..self.nb() as u16).map(move |b| {
                let (b2, a2) = self.swap(a, b);
                [a, b, b2, a2]
            })
        })
    }

    /// Geometric squares: one representative per orbit of the four readings.
    pub fn geometric_squares(&self) -> Vec<[u16; 4]> {
        let mut seen = vec![false; self.na() * self.nb()];
        let mut out = Vec::new();
        for [a, b, b2, a2] in self.entries() {
            if seen[a as usize * self.nb() + b as usize] {
                continue;
            }
            for (x, y) in [(a, b), (self.inv_a(a), b2), (a2, self.inv_b(b)), (self.inv_a(a2), self.inv_b(b2))] {
                seen[x as usize * self.nb() + y as usize] = true;
            }
            out.push([a, b, b2, a2]);
        }
        out
    }

    pub fn inverse_word(&self, w: &Word) -> Word {
        Word(w.0.iter().rev().map(|&l| self.inv(l)).collect())
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.na() as u16).map(Letter::a).chain((0..self.nb() as u16).map(Letter::b))
    }

    /// Symbol used in word syntax: `A3`/`B0` for parametric letters, the generator
    /// name for named ones. Inverse named letters render as `a^-1`.
    pub fn label_name(&self, l: Letter) -> String {
        match self.label(l) {
            GenLabel::Param(_) => format!("{:?}{}", l.side, l.idx),
            GenLabel::Named { name, inv: false } => name.clone(),
            GenLabel::Named { name, inv: true } => format!("{name}^-1"),
        }
    }

    fn symbol_table(&self) -> HashMap<String, (Letter, bool)> {
        let mut map = HashMap::new();
        for l in self.letters() {
            match self.label(l) {
                GenLabel::Param(_) => {
                    map.insert(format!("{:?}{}", l.side, l.idx), (l, false));
                }
                GenLabel::Named { name, inv } => {
                    if !inv {
                        map.insert(name.clone(), (l, false));
                    }
                }
            }
        }
        map
    }

    /// Parses `a^9,x^9,b^-9,x^9`. Exponents may be negative; `^-1` inverts.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let symbols = self.symbol_table();
        let mut out = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let e: i64 = e.trim().parse().map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
                    (n.trim(), e)
                }
                None => (tok, 1),
            };
            let &(letter, _) = symbols.get(name).ok_or_else(|| Error::Parse(format!("unknown letter `{name}`")))?;
            let l = if exp < 0 { self.inv(letter) } else { letter };
            out.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
        }
        Ok(Word(out))
    }

    /// Inverse of [`parse_word`](Self::parse_word), compressing runs into powers.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return String::new();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let l = w.0[i];
            let mut j = i;
            while j < w.len() && w.0[j] == l {
                j += 1;
            }
            let n = (j - i) as i64;
            let (base, sign) = match self.label(l) {
                GenLabel::Named { name, inv } => (name.clone(), if *inv { -1 } else { 1 }),
                GenLabel::Param(_) => (self.label_name(l), 1),
            };
            let e = sign * n;
            parts.push(if e == 1 { base } else { format!("{base}^{e}") });
            i = j;
        }
        parts.join(",")
    }
}

fn fmt_label(l: &GenLabel) -> String {
    match l {
        GenLabel::Param(x) => format!("{x:?}"),
        GenLabel::Named { name, inv } => {
            if *inv {
                format!("{name}^-1")
            } else {
                name.clone()
            }
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(names: &[&str]) -> (Vec<GenLabel>, Vec<u16>) {
        let mut labels = Vec::new();
        let mut inv = Vec::new();
        for (i, n) in names.iter().enumerate() {
            labels.push(GenLabel::Named { name: n.to_string(), inv: false });
            labels.push(GenLabel::Named { name: n.to_string(), inv: true });
            inv.push(2 * i as u16 + 1);
            inv.push(2 * i as u16);
        }
        (labels, inv)
    }

    #[test]
    fn single_self_paired_square_is_rejected() {
        let la = vec![GenLabel::Named { name: "a".into(), inv: false }];
        let lb = vec![GenLabel::Named { name: "b".into(), inv: false }];
        let err = SquareTable::expand_squares(la, lb, vec![0], vec![0], &[[0, 0, 0, 0]]);
        assert!(err.is_err());
    }

    #[test]
    fn torus_expands_to_full_table() {
        // Z^2 = <a, x | ax = xa>
        let (la, ia) = named(&["a"]);
        let (lb, ib) = named(&["x"]);
        let t = SquareTable::expand_squares(la, lb, ia, ib, &[[0, 0, 0, 0]]).unwrap();
        assert_eq!(t.entries().count(), 4);
        assert_eq!(t.geometric_squares().len(), 1);
        for [a, b, b2, a2] in t.entries() {
            assert_eq!((a, b), (a2, b2));
        }
    }

    #[test]
    fn incomplete_and_overlapping() {
        let (la, ia) = named(&["a", "b"]);
        let (lb, ib) = named(&["x"]);
        // one square for a 4x2 alphabet cannot be complete
        let err = SquareTable::expand_squares(la.clone(), lb.clone(), ia.clone(), ib.clone(), &[[0, 0, 0, 0]]);
        assert!(matches!(err, Err(Error::IncompleteComplex(_))));
        let err = SquareTable::expand_squares(la, lb, ia, ib, &[[0, 0, 0, 0], [0, 0, 0, 2]]);
        assert!(matches!(err, Err(Error::OverlappingSquares(_))));
    }

    #[test]
    fn word_syntax() {
        let (la, ia) = named(&["a"]);
        let (lb, ib) = named(&["x"]);
        let t = SquareTable::expand_squares(la, lb, ia, ib, &[[0, 0, 0, 0]]).unwrap();
        let w = t.parse_word("a^3, x^-2,a^-1").unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.0[3], Letter::b(1));
        assert_eq!(t.format_word(&w), "a^3,x^-2,a^-1");
        assert!(t.parse_word("z").is_err());
        assert!(t.parse_word("a^q").is_err());
        assert!(t.parse_word("").unwrap().is_empty());
        assert_eq!(t.inverse_word(&w), t.parse_word("a,x^2,a^-3").unwrap());
    }
}
