use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{SquareTable, Word};
use crate::rewrite::{is_identity, NormalFormBuilder, Order};

use super::sets::{ParikhSet, Point};

/// `w_1^* … w_d^*`, or `Z`-exponents when `signed`. Coordinate `i` is the
/// exponent of `words[i]`; blocks are concatenated in `order` (default `0..d`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedLanguageSpec {
    pub words: Vec<Word>,
    pub signed: bool,
    pub order: Option<Vec<usize>>,
}

impl BoundedLanguageSpec {
    pub fn new(words: Vec<Word>, signed: bool) -> Result<Self> {
        Self::with_order(words, signed, None)
    }

    pub fn with_order(words: Vec<Word>, signed: bool, order: Option<Vec<usize>>) -> Result<Self> {
        if words.is_empty() || words.iter().any(Word::is_empty) {
            return Err(Error::InvalidParams("need at least one block, all nonempty".into()));
        }
        if let Some(o) = &order {
            let mut sorted = o.clone();
            sorted.sort_unstable();
            if sorted != (0..words.len()).collect::<Vec<_>>() {
                return Err(Error::InvalidParams("block order must be a permutation".into()));
            }
        }
        Ok(BoundedLanguageSpec { words, signed, order })
    }

    /// Parses `a;x;b^-1;x` against a table.
    pub fn parse(table: &SquareTable, words: &str, signed: bool) -> Result<Self> {
        let words = words.split(';').map(|w| table.parse_word(w)).collect::<Result<_>>()?;
        Self::new(words, signed)
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn order(&self) -> Vec<usize> {
        self.order.clone().unwrap_or_else(|| (0..self.dim()).collect())
    }

    /// The words in concatenation order.
    pub fn blocks(&self) -> Vec<&Word> {
        self.order().into_iter().map(|i| &self.words[i]).collect()
    }

    /// `Π w_{order(j)}^{x_{order(j)}}`.
    pub fn word_for(&self, table: &SquareTable, x: &[i64]) -> Result<Word> {
        if x.len() != self.dim() {
            return Err(Error::InvalidParams(format!("point has {} coordinates, expected {}", x.len(), self.dim())));
        }
        if !self.signed && x.iter().any(|&v| v < 0) {
            return Err(Error::InvalidParams("negative exponent in an unsigned language".into()));
        }
        let mut out = Word::empty();
        for i in self.order() {
            let w = if x[i] < 0 { table.inverse_word(&self.words[i]) } else { self.words[i].clone() };
            out = out.concat(&w.repeat(x[i].unsigned_abs() as usize));
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    pub prune: bool,
    /// Worker threads; `1` runs on the calling thread.
    pub jobs: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { prune: true, jobs: 1 }
    }
}

/// Whether `w_1^{x_1} … w_d^{x_d} = e`.
pub fn membership(table: &SquareTable, spec: &BoundedLanguageSpec, x: &[i64]) -> Result<bool> {
    Ok(is_identity(table, &spec.word_for(table, x)?))
}

struct Search<'a> {
    table: &'a SquareTable,
    blocks: Vec<(usize, Word, Word)>,
    // capacity[j]: most letters blocks j.. can still contribute
    capacity: Vec<usize>,
    bound: i64,
    signed: bool,
    prune: bool,
}

impl Search<'_> {
    fn exponents(&self) -> Vec<i64> {
        if self.signed {
            (-self.bound..=self.bound).collect()
        } else {
            (0..=self.bound).collect()
        }
    }

    fn run(&self, j: usize, nf: &NormalFormBuilder<'_>, point: &mut Point, out: &mut Vec<Point>) {
        if j == self.blocks.len() {
            if nf.is_identity() {
                out.push(point.clone());
            }
            return;
        }
        let (coord, fwd, back) = &self.blocks[j];
        let mut visit = |e: i64, state: &NormalFormBuilder<'_>, point: &mut Point| {
            if self.prune && state.len() > self.capacity[j + 1] {
                return;
            }
            point[*coord] = e;
            self.run(j + 1, state, point, out);
        };
        let mut state = nf.clone();
        visit(0, &state, point);
        for e in 1..=self.bound {
            state.push_word(fwd.letters());
            visit(e, &state, point);
        }
        if self.signed {
            let mut state = nf.clone();
            for e in 1..=self.bound {
                state.push_word(back.letters());
                visit(-e, &state, point);
            }
        }
        point[*coord] = 0;
    }
}

/// `{x : |x_i| ≤ N, Π w_i^{x_i} = e}` by depth-first search over exponent prefixes.
///
/// With pruning, a prefix is dropped once its normal-form length exceeds the
/// number of letters the remaining blocks can supply.
pub fn enumerate_parikh(
    table: &SquareTable,
    spec: &BoundedLanguageSpec,
    bound: u64,
    opts: EnumOptions,
) -> Result<ParikhSet> {
    let order = spec.order();
    let bound_i = i64::try_from(bound).map_err(|_| Error::InvalidParams("bound too large".into()))?;
    let blocks: Vec<(usize, Word, Word)> =
        order.iter().map(|&i| (i, spec.words[i].clone(), table.inverse_word(&spec.words[i]))).collect();
    let mut capacity = vec![0usize; blocks.len() + 1];
    for j in (0..blocks.len()).rev() {
        capacity[j] = capacity[j + 1] + bound as usize * blocks[j].1.len();
    }
    let search = Search { table, blocks, capacity, bound: bound_i, signed: spec.signed, prune: opts.prune };
    let d = spec.dim();

    let first = order[0];
    let subtree = |e: i64| -> Vec<Point> {
        let mut nf = NormalFormBuilder::new(search.table, Order::AB);
        let w = if e < 0 { &search.blocks[0].2 } else { &search.blocks[0].1 };
        for _ in 0..e.unsigned_abs() {
            nf.push_word(w.letters());
        }
        let mut out = Vec::new();
        if search.prune && nf.len() > search.capacity[1] {
            return out;
        }
        let mut point = vec![0; d];
        point[first] = e;
        search.run(1, &nf, &mut point, &mut out);
        out
    };
    let exps = search.exponents();
    let points: Vec<Point> = if opts.jobs <= 1 {
        exps.iter().flat_map(|&e| subtree(e)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
        pool.install(|| exps.par_iter().flat_map_iter(|&e| subtree(e)).collect())
    };
    Ok(ParikhSet::new(d, points))
}
