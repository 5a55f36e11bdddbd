use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Letter, Side, SquareTable, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Order {
    /// `g = u v`, A-part first.
    AB,
    /// `g = v u`, B-part first.
    BA,
}

/// Unique factorization of a group element into a reduced A-word `u` and a
/// reduced B-word `v`, multiplied in the given order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub u: Word,
    pub v: Word,
    pub order: Order,
}

impl NormalForm {
    pub fn is_identity(&self) -> bool {
        self.u.is_empty() && self.v.is_empty()
    }

    pub fn len(&self) -> usize {
        self.u.len() + self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// The element as a word, in the form's multiplication order.
    pub fn to_word(&self) -> Word {
        match self.order {
            Order::AB => self.u.concat(&self.v),
            Order::BA => self.v.concat(&self.u),
        }
    }
}

/// Removes adjacent inverse pairs from a one-sided word.
pub fn free_reduce(table: &SquareTable, w: &Word) -> Result<Word> {
    if w.len() > 1 && w.side().is_none() {
        return Err(Error::MixedSides);
    }
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in w.letters() {
        if out.last() == Some(&table.inv(l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Ok(Word(out))
}

#[inline]
fn push_reduced(part: &mut Vec<u16>, x: u16, inv: impl Fn(u16) -> u16) {
    if part.last() == Some(&inv(x)) {
        part.pop();
    } else {
        part.push(x);
    }
}

/// Incremental normal form: letters are appended on the right and pushed
/// through the opposite component one square at a time.
#[derive(Clone, Debug)]
pub struct NormalFormBuilder<'t> {
    table: &'t SquareTable,
    order: Order,
    a_part: Vec<u16>,
    b_part: Vec<u16>,
}

impl<'t> NormalFormBuilder<'t> {
    pub fn new(table: &'t SquareTable, order: Order) -> Self {
        NormalFormBuilder { table, order, a_part: Vec::new(), b_part: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.a_part.len() + self.b_part.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a_part.is_empty() && self.b_part.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        let t = self.table;
        match (self.order, l.side) {
            (Order::AB, Side::B) => push_reduced(&mut self.b_part, l.idx, |x| t.inv_b(x)),
            (Order::BA, Side::A) => push_reduced(&mut self.a_part, l.idx, |x| t.inv_a(x)),
            (Order::AB, Side::A) => {
                // v s = s' v': move s leftwards across v
                let mut s = l.idx;
                for b in self.b_part.iter_mut().rev() {
                    let (a2, b2) = t.swap_back(*b, s);
                    *b = b2;
                    s = a2;
                }
                push_reduced(&mut self.a_part, s, |x| t.inv_a(x));
            }
            (Order::BA, Side::B) => {
                let mut s = l.idx;
                for a in self.a_part.iter_mut().rev() {
                    let (b2, a2) = t.swap(*a, s);
                    *a = a2;
                    s = b2;
                }
                push_reduced(&mut self.b_part, s, |x| t.inv_b(x));
            }
        }
    }

    pub fn push_word(&mut self, w: &[Letter]) {
        for &l in w {
            self.push(l);
        }
    }

    pub fn finish(&self) -> NormalForm {
        NormalForm {
            u: Word(self.a_part.iter().map(|&i| Letter::a(i)).collect()),
            v: Word(self.b_part.iter().map(|&i| Letter::b(i)).collect()),
            order: self.order,
        }
    }
}

pub fn normal_form(table: &SquareTable, w: &Word, order: Order) -> NormalForm {
    let mut nf = NormalFormBuilder::new(table, order);
    nf.push_word(w.letters());
    debug_assert!(nf.len() <= w.len());
    nf.finish()
}

/// Word problem: `w = e` in the group.
pub fn is_identity(table: &SquareTable, w: &Word) -> bool {
    let mut nf = NormalFormBuilder::new(table, Order::AB);
    nf.push_word(w.letters());
    nf.is_identity()
}

/// Whether two words represent the same element.
pub fn words_equal(table: &SquareTable, x: &Word, y: &Word) -> bool {
    normal_form(table, x, Order::AB) == normal_form(table, y, Order::AB)
}
