//! Serialisable documents for the command line: Jones-Wenzl coefficient
//! tables, group dumps, graded ranks and KL tables.

use serde::Serialize;

use crate::coxeter::{format_word, ElementId, GroupTable};
use crate::error::Result;
use crate::grank::GradedRank;
use crate::gtl::GtlElt;
use crate::hecke::KlTable;
use crate::qpoly::{LaurentPoly, RatFunc};
use crate::tl::{monomial, LoopSign, TlElt};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct JwRecord {
    pub index: u32,
    pub fc_word: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<Vec<u32>>,
    pub coefficient: RatFunc,
    pub display: String,
}

/// One Jones-Wenzl idempotent, coefficient by coefficient, in the order of
/// the group enumeration.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct JwDocument {
    pub family: String,
    pub rank: usize,
    pub group: String,
    pub sign: LoopSign,
    pub method: String,
    /// `u` for the diagrammatic monomial basis, `beta` for the IC basis.
    pub basis: String,
    pub records: Vec<JwRecord>,
}

fn record(g: &GroupTable, x: ElementId, diagram: Option<Vec<u32>>, c: RatFunc) -> JwRecord {
    JwRecord { index: x.0, fc_word: g.word_string(x), diagram, display: c.to_string(), coefficient: c }
}

impl JwDocument {
    /// `rank` is the strand count `n`; `g` is `A_{n-1}`.
    pub fn from_tl(g: &GroupTable, rank: usize, method: &str, elt: &TlElt) -> Result<Self> {
        let mut records = Vec::new();
        for x in g.fc_elements() {
            let d = monomial(g, x)?;
            let c = elt.coefficient(&d);
            records.push(record(g, x, Some(d.partner_array()), c));
        }
        Ok(Self {
            family: g.presentation().family_token(),
            rank,
            group: g.presentation().label(),
            sign: elt.sign(),
            method: method.to_string(),
            basis: "u".into(),
            records,
        })
    }

    pub fn from_gtl(rank: usize, method: &str, elt: &GtlElt) -> Self {
        let g = elt.group();
        let records = g.fc_elements().into_iter().map(|x| record(g, x, None, elt.coefficient(x))).collect();
        Self {
            family: g.presentation().family_token(),
            rank,
            group: g.presentation().label(),
            sign: LoopSign::Plus,
            method: method.to_string(),
            basis: "beta".into(),
            records,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialises") + "\n"
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(if self.basis == "u" {
            "index,fc_word,diagram,coefficient\n"
        } else {
            "index,fc_word,coefficient\n"
        });
        for r in &self.records {
            let mut fields = vec![r.index.to_string(), r.fc_word.clone()];
            if let Some(d) = &r.diagram {
                fields.push(d.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "));
            }
            fields.push(r.display.clone());
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = String::from("\\begin{tabular}{ll}\n");
        out.push_str("basis element & coefficient \\\\\n\\hline\n");
        for r in &self.records {
            let sub = if r.fc_word == "e" { "\\mathrm{id}".to_string() } else { r.fc_word.replace('-', "") };
            out.push_str(&format!("${}_{{{}}}$ & ${}$ \\\\\n", self.basis_symbol(), sub, r.coefficient.render(true)));
        }
        out.push_str("\\end{tabular}\n");
        out
    }

    fn basis_symbol(&self) -> &'static str {
        if self.basis == "u" {
            "u"
        } else {
            "\\beta"
        }
    }
}

/// `family rank size` followed by `index length word` lines.
pub fn group_dump(g: &GroupTable) -> String {
    let p = g.presentation();
    let mut out = format!("{} {} {}\n", p.family_token(), p.rank(), g.size());
    for x in g.elements() {
        out.push_str(&format!("{} {} {}\n", x.0, g.length(x), format_word(g.word(x))));
    }
    out
}

#[derive(Serialize)]
struct GroupRow {
    index: u32,
    length: usize,
    word: String,
    fully_commutative: bool,
}

#[derive(Serialize)]
struct GroupDoc {
    family: String,
    rank: usize,
    size: usize,
    elements: Vec<GroupRow>,
}

pub fn group_json(g: &GroupTable) -> String {
    let p = g.presentation();
    let doc = GroupDoc {
        family: p.family_token(),
        rank: p.rank(),
        size: g.size(),
        elements: g
            .elements()
            .map(|x| GroupRow {
                index: x.0,
                length: g.length(x),
                word: g.word_string(x),
                fully_commutative: g.is_fully_commutative(x),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("document serialises") + "\n"
}

/// `index length polynomial` lines, the polynomial in the triple
/// serialisation `[[exponent, numerator, denominator], ...]`.
pub fn grrk_lines(ranks: &[GradedRank]) -> String {
    let mut out = String::new();
    for r in ranks {
        out.push_str(&format!("{} {} {}\n", r.element.0, r.length, triples_json(&r.value)));
    }
    out
}

pub fn grrk_json(g: &GroupTable, ranks: &[GradedRank]) -> String {
    #[derive(Serialize)]
    struct Row<'a> {
        index: u32,
        length: usize,
        word: String,
        value: &'a LaurentPoly,
        display: String,
    }
    let rows: Vec<Row> = ranks
        .iter()
        .map(|r| Row {
            index: r.element.0,
            length: r.length,
            word: g.word_string(r.element),
            value: &r.value,
            display: r.value.to_string(),
        })
        .collect();
    serde_json::to_string_pretty(&rows).expect("document serialises") + "\n"
}

fn triples_json(p: &LaurentPoly) -> String {
    serde_json::to_string(p).expect("polynomial serialises")
}

/// Every computed KL polynomial as JSON records `{x, y, h}`.
pub fn kl_json(table: &KlTable) -> String {
    #[derive(Serialize)]
    struct Row {
        x: u32,
        y: u32,
        h: LaurentPoly,
    }
    let rows: Vec<Row> = table
        .computed_columns()
        .iter()
        .flat_map(|col| {
            let x = col.x().0;
            col.entries().map(move |(y, h)| Row { x, y: y.0, h: h.to_laurent() }).collect::<Vec<_>>()
        })
        .collect();
    serde_json::to_string_pretty(&rows).expect("document serialises") + "\n"
}

/// A Hecke element listed by basis element.
#[derive(Serialize)]
pub struct ElementRow {
    pub index: u32,
    pub word: String,
    pub coefficient: RatFunc,
    pub display: String,
}

#[derive(Serialize)]
pub struct EsignDocument {
    pub group: String,
    /// Coefficients of `delta_x`.
    pub standard: Vec<ElementRow>,
    /// Coefficients of `b_x`.
    pub kl: Vec<ElementRow>,
}

impl EsignDocument {
    pub fn new(g: &GroupTable, standard: &[(ElementId, RatFunc)], kl: &[(ElementId, RatFunc)]) -> Self {
        let rows = |v: &[(ElementId, RatFunc)]| {
            v.iter()
                .map(|(x, c)| ElementRow {
                    index: x.0,
                    word: g.word_string(*x),
                    display: c.to_string(),
                    coefficient: c.clone(),
                })
                .collect()
        };
        Self { group: g.presentation().label(), standard: rows(standard), kl: rows(kl) }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialises") + "\n"
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("basis,index,word,coefficient\n");
        for (name, rows) in [("delta", &self.standard), ("b", &self.kl)] {
            for r in rows {
                out.push_str(&format!("{},{},{},{}\n", name, r.index, r.word, r.display));
            }
        }
        out
    }
}
