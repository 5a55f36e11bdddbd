use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::Fq2Elem;

use super::build::build_square_table;
use super::params::{LatticeParams, ParamsSpec};
use super::power::compute_k_tau;
use super::table::{GenLabel, Letter, Side, SquareTable, Word};

/// A lattice presentation: the square table plus where it came from.
#[derive(Clone, Debug)]
pub struct Presentation {
    table: SquareTable,
    params: Option<LatticeParams>,
    name: Option<String>,
    squares: Vec<[u16; 4]>,
}

impl Presentation {
    pub fn parametric(params: LatticeParams, table: SquareTable) -> Self {
        let squares = table.entries().collect();
        Presentation { table, params: Some(params), name: None, squares }
    }

    pub fn named(name: impl Into<String>, table: SquareTable, squares: Vec<[u16; 4]>) -> Self {
        Presentation { table, params: None, name: Some(name.into()), squares }
    }

    pub fn table(&self) -> &SquareTable {
        &self.table
    }

    pub fn params(&self) -> Option<&LatticeParams> {
        self.params.as_ref()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Defining squares: every entry for parametric lattices, the literal list for named ones.
    pub fn squares(&self) -> &[[u16; 4]] {
        &self.squares
    }

    pub fn is_parametric(&self) -> bool {
        self.params.is_some()
    }

    /// Free ranks of `<A>` and `<B>`.
    pub fn ranks(&self) -> (usize, usize) {
        (self.table.na() / 2, self.table.nb() / 2)
    }

    pub fn word(&self, s: &str) -> Result<Word> {
        self.table.parse_word(s)
    }

    /// The A-letter indexed by `ξ` in a parametric lattice.
    pub fn letter_a(&self, xi: Fq2Elem) -> Option<Letter> {
        self.table.labels_a().iter().position(|l| *l == GenLabel::Param(xi)).map(|i| Letter::a(i as u16))
    }

    pub fn letter_b(&self, eta: Fq2Elem) -> Option<Letter> {
        self.table.labels_b().iter().position(|l| *l == GenLabel::Param(eta)).map(|i| Letter::b(i as u16))
    }

    pub fn xi_of(&self, l: Letter) -> Option<Fq2Elem> {
        match self.table.label(l) {
            GenLabel::Param(x) => Some(*x),
            GenLabel::Named { .. } => None,
        }
    }

    /// A square commutes when its corners agree: `a b = b a`.
    pub fn is_commuting_entry(&self, sq: [u16; 4]) -> bool {
        sq[0] == sq[3] && sq[1] == sq[2]
    }

    pub fn to_json(&self) -> Result<PresentationJson> {
        let label = |l: Letter| self.label_json(l);
        let squares = self
            .squares
            .iter()
            .map(|&sq| {
                let [a, b, b2, a2] = sq;
                SquareJson {
                    a: label(Letter::a(a)),
                    b: label(Letter::b(b)),
                    b2: label(Letter::b(b2)),
                    a2: label(Letter::a(a2)),
                    commuting: Some(self.is_commuting_entry(sq)),
                }
            })
            .collect();
        Ok(PresentationJson {
            kind: if self.is_parametric() { "parametric" } else { "named" }.into(),
            name: self.name.clone(),
            params: self.params.as_ref().map(LatticeParams::spec),
            alphabet_a: (0..self.table.na() as u16).map(|i| label(Letter::a(i))).collect(),
            alphabet_b: (0..self.table.nb() as u16).map(|i| label(Letter::b(i))).collect(),
            squares,
            k_tau: self.params.as_ref().map(compute_k_tau),
        })
    }

    fn label_json(&self, l: Letter) -> LabelJson {
        match self.table.label(l) {
            GenLabel::Param(x) => {
                let ext = self.params.as_ref().expect("parametric label").ext();
                LabelJson::Param { side: l.side, index: ext.to_coeffs(*x) }
            }
            GenLabel::Named { name, inv } => LabelJson::Named { name: name.clone(), inv: *inv },
        }
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_json()?)?)
    }

    pub fn from_json(json: &PresentationJson) -> Result<Self> {
        match json.kind.as_str() {
            "parametric" => {
                let spec = json
                    .params
                    .as_ref()
                    .ok_or_else(|| Error::Parse("parametric presentation without params".into()))?;
                let params = LatticeParams::from_spec(spec)?;
                let pres = build_square_table(&params)?;
                for sq in &json.squares {
                    let ix = |l: &LabelJson, side: Side| pres.resolve_param_label(l, side);
                    let (a, b) = (ix(&sq.a, Side::A)?, ix(&sq.b, Side::B)?);
                    let (b2, a2) = (ix(&sq.b2, Side::B)?, ix(&sq.a2, Side::A)?);
                    if pres.table.swap(a, b) != (b2, a2) {
                        return Err(Error::ParameterMismatch(format!(
                            "listed square ({a},{b}) disagrees with the computed table"
                        )));
                    }
                }
                Ok(pres)
            }
            "named" => {
                let name = json.name.clone().unwrap_or_else(|| "unnamed".into());
                let (labels_a, inv_a) = named_alphabet(&json.alphabet_a)?;
                let (labels_b, inv_b) = named_alphabet(&json.alphabet_b)?;
                let find = |labels: &[GenLabel], l: &LabelJson| -> Result<u16> {
                    let LabelJson::Named { name, inv } = l else {
                        return Err(Error::Parse("parametric label in a named presentation".into()));
                    };
                    let key = GenLabel::Named { name: name.clone(), inv: *inv };
                    labels
                        .iter()
                        .position(|x| *x == key)
                        .map(|i| i as u16)
                        .ok_or_else(|| Error::Parse(format!("unknown letter {name}")))
                };
                let squares: Vec<[u16; 4]> = json
                    .squares
                    .iter()
                    .map(|s| {
                        Ok([
                            find(&labels_a, &s.a)?,
                            find(&labels_b, &s.b)?,
                            find(&labels_b, &s.b2)?,
                            find(&labels_a, &s.a2)?,
                        ])
                    })
                    .collect::<Result<_>>()?;
                let table = SquareTable::expand_squares(labels_a, labels_b, inv_a, inv_b, &squares)?;
                Ok(Presentation::named(name, table, squares))
            }
            other => Err(Error::Parse(format!("unknown presentation kind `{other}`"))),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }

    fn resolve_param_label(&self, l: &LabelJson, side: Side) -> Result<u16> {
        let params = self.params.as_ref().expect("parametric");
        let LabelJson::Param { side: s, index } = l else {
            return Err(Error::Parse("named label in a parametric presentation".into()));
        };
        if *s != side {
            return Err(Error::Parse(format!("label on side {s} where {side} expected")));
        }
        let to_i = |v: &[u32]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();
        let x = params.ext().from_coeffs(&to_i(&index[0]), &to_i(&index[1]))?;
        let found = match side {
            Side::A => self.letter_a(x),
            Side::B => self.letter_b(x),
        };
        found.map(|l| l.idx).ok_or_else(|| Error::ParameterMismatch(format!("{side}-label {x:?} is not a generator")))
    }
}

fn named_alphabet(labels: &[LabelJson]) -> Result<(Vec<GenLabel>, Vec<u16>)> {
    let mut out = Vec::with_capacity(labels.len());
    let mut index = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        let LabelJson::Named { name, inv } = l else {
            return Err(Error::Parse("parametric label in a named presentation".into()));
        };
        out.push(GenLabel::Named { name: name.clone(), inv: *inv });
        if index.insert((name.clone(), *inv), i as u16).is_some() {
            return Err(Error::Parse(format!("duplicate letter {name}")));
        }
    }
    let inv = labels
        .iter()
        .map(|l| match l {
            LabelJson::Named { name, inv } => index
                .get(&(name.clone(), !inv))
                .copied()
                .ok_or_else(|| Error::InvalidParams(format!("letter {name} has no inverse"))),
            LabelJson::Param { .. } => unreachable!(),
        })
        .collect::<Result<_>>()?;
    Ok((out, inv))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LabelJson {
    Param { side: Side, index: [Vec<u32>; 2] },
    Named { name: String, inv: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareJson {
    pub a: LabelJson,
    pub b: LabelJson,
    pub b2: LabelJson,
    pub a2: LabelJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub commuting: Option<bool>,
}

/// `{"kind", "params", "alphabetA", "alphabetB", "squares"}` plus `name` and `k_tau` when known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsSpec>,
    #[serde(rename = "alphabetA", default)]
    pub alphabet_a: Vec<LabelJson>,
    #[serde(rename = "alphabetB", default)]
    pub alphabet_b: Vec<LabelJson>,
    pub squares: Vec<SquareJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_tau: Option<u32>,
}
