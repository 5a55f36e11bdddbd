use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::lattice::{Presentation, Side, SquareTable, Word};

use super::normal_form::{free_reduce, is_identity, normal_form, Order};

fn require_reduced_side(table: &SquareTable, w: &Word, side: Side) -> Result<()> {
    if w.letters().iter().any(|l| l.side != side) {
        return Err(Error::MixedSides);
    }
    if free_reduce(table, w)?.len() != w.len() {
        return Err(Error::InvalidParams(format!("word `{}` is not freely reduced", table.format_word(w))));
    }
    Ok(())
}

/// For `g ∈ <A>`, `h ∈ <B>` returns `(π_g(h), π_h(g))`, where `g h = π_g(h) π_h(g)`.
pub fn pi_action(table: &SquareTable, g: &Word, h: &Word) -> Result<(Word, Word)> {
    require_reduced_side(table, g, Side::A)?;
    require_reduced_side(table, h, Side::B)?;
    let nf = normal_form(table, &g.concat(h), Order::BA);
    debug_assert_eq!(nf.v.len(), h.len());
    debug_assert_eq!(nf.u.len(), g.len());
    Ok((nf.v, nf.u))
}

/// `π_g^n(h)`.
pub fn pi_power(table: &SquareTable, g: &Word, h: &Word, n: usize) -> Result<Word> {
    let mut cur = h.clone();
    for _ in 0..n {
        cur = pi_action(table, g, &cur)?.0;
    }
    Ok(cur)
}

/// The cycle of `h` under `h -> π_g(h)`.
pub fn orbit(table: &SquareTable, g: &Word, h: &Word) -> Result<Vec<Word>> {
    cycle(h.clone(), |w| Ok(pi_action(table, g, w)?.0))
}

/// The cycle of `g` under `g -> π_h(g)`.
pub fn orbit_right(table: &SquareTable, h: &Word, g: &Word) -> Result<Vec<Word>> {
    cycle(g.clone(), |w| Ok(pi_action(table, w, h)?.1))
}

pub fn orbit_size(table: &SquareTable, g: &Word, h: &Word) -> Result<usize> {
    Ok(orbit(table, g, h)?.len())
}

pub fn orbit_size_right(table: &SquareTable, h: &Word, g: &Word) -> Result<usize> {
    Ok(orbit_right(table, h, g)?.len())
}

fn cycle(start: Word, mut step: impl FnMut(&Word) -> Result<Word>) -> Result<Vec<Word>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut cur = start;
    while seen.insert(cur.clone()) {
        let next = step(&cur)?;
        out.push(cur);
        cur = next;
    }
    // π is a permutation of a finite sphere, so the first repeat is the start.
    debug_assert_eq!(Some(&cur), out.first());
    Ok(out)
}

/// `g h g^-1 h^-1 = e`.
pub fn commutes(table: &SquareTable, g: &Word, h: &Word) -> bool {
    let w = g.concat(h).concat(&table.inverse_word(g)).concat(&table.inverse_word(h));
    is_identity(table, &w)
}

/// In `Γ_τ` the subgroup `<g, h>` is an anti-torus exactly when `g` and `h`
/// do not commute; only defined for parametric lattices.
pub fn is_anti_torus(pres: &Presentation, g: &Word, h: &Word) -> Result<bool> {
    if pres.params().is_none() {
        return Err(Error::NotApplicable("anti-torus criterion needs a parametric lattice".into()));
    }
    let table = pres.table();
    if g.letters().iter().any(|l| l.side != Side::A) || h.letters().iter().any(|l| l.side != Side::B) {
        return Err(Error::MixedSides);
    }
    Ok(!commutes(table, g, h))
}
