//! Named verification suites. Each suite runs a family of exact checks on
//! one group and reports per-check pass counts.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coxeter::{ElementId, Family};
use crate::error::{Error, Result};
use crate::grank::grrk;
use crate::gtl::{check_ideal_closure, gen_jw_closed, gen_jw_projection, gtl_multiply, gtl_multiply_quotient, GtlElt};
use crate::hecke::{antisymmetriser, kl_structure_constants, KlTable, Side};
use crate::lincomb::add_into;
use crate::qpoly::{parity_class, LaurentPoly};
use crate::tl::{closed_jw, jw_minus, project_pi, wenzl_jw, LoopSign, TlElt};

/// Groups up to this size multiply in `TL_W` through the Hecke algebra;
/// larger ones use the quotient route.
const LIFT_LIMIT: usize = 400;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Parity,
    BarInvariance,
    BruhatOrder,
    TripleAgreement,
    Idempotency,
    Annihilation,
    MuIdentity,
    IdealClosure,
    GenAgreement,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Parity,
        Suite::BarInvariance,
        Suite::BruhatOrder,
        Suite::TripleAgreement,
        Suite::Idempotency,
        Suite::Annihilation,
        Suite::MuIdentity,
        Suite::IdealClosure,
        Suite::GenAgreement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Parity => "parity",
            Suite::BarInvariance => "bar-invariance",
            Suite::BruhatOrder => "bruhat-order",
            Suite::TripleAgreement => "triple-agreement",
            Suite::Idempotency => "idempotency",
            Suite::Annihilation => "annihilation",
            Suite::MuIdentity => "mu-identity",
            Suite::IdealClosure => "ideal-closure",
            Suite::GenAgreement => "gen-agreement",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite '{}'", s)))
    }
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct CheckCount {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub group: String,
    pub checks: Vec<CheckCount>,
    /// At most a handful of failure descriptions per check.
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite, group: String) -> Self {
        Self { suite, group, checks: Vec::new(), failures: Vec::new() }
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn total(&self) -> usize {
        self.checks.iter().map(|c| c.passed + c.failed).sum()
    }

    fn record(&mut self, check: &str, ok: bool, detail: impl FnOnce() -> String) {
        let idx = match self.checks.iter().position(|c| c.name == check) {
            Some(i) => i,
            None => {
                self.checks.push(CheckCount { name: check.to_string(), ..Default::default() });
                self.checks.len() - 1
            }
        };
        let c = &mut self.checks[idx];
        if ok {
            c.passed += 1;
        } else {
            c.failed += 1;
            if c.failed <= 5 {
                self.failures.push(format!("{}: {}", check, detail()));
            }
        }
    }

    /// One line per check: `suite group check passed/total`.
    pub fn summary_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{} {} {} {}/{}{}\n",
                self.suite,
                self.group,
                c.name,
                c.passed,
                c.passed + c.failed,
                if c.failed == 0 { "" } else { " FAILED" }
            ));
        }
        out
    }
}

/// The reports as a JSON array.
pub fn reports_json(reports: &[SuiteReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialise") + "\n"
}

/// Runs `suite` on the group of `table`. Type-A-only suites need
/// `table` to be built on `A_{n-1}`; for other families the
/// idempotency and annihilation suites check the generalised idempotent.
pub fn run_suite(suite: Suite, table: &KlTable) -> Result<SuiteReport> {
    let g = table.group();
    let mut r = SuiteReport::new(suite, g.presentation().label());
    match suite {
        Suite::Parity => parity(table, &mut r),
        Suite::BarInvariance => bar_invariance(table, &mut r),
        Suite::BruhatOrder => bruhat_order(table, &mut r),
        Suite::TripleAgreement => triple_agreement(table, &mut r)?,
        Suite::Idempotency => idempotency(table, &mut r)?,
        Suite::Annihilation => annihilation(table, &mut r)?,
        Suite::MuIdentity => mu_identity(table, &mut r),
        Suite::IdealClosure => {
            let ok = check_ideal_closure(table);
            let detail = ok.as_ref().err().map(|e| e.to_string()).unwrap_or_default();
            r.record("ideal-closure", ok.is_ok(), || detail);
        }
        Suite::GenAgreement => gen_agreement(table, &mut r)?,
    }
    Ok(r)
}

fn parity(table: &KlTable, r: &mut SuiteReport) {
    let g = table.group();
    table.compute_all();
    for x in g.elements() {
        let gr = grrk(table, x);
        r.record("grrk-parity", gr.satisfies_parity(), || format!("grrk({}) = {}", g.word_string(x), gr.value));
        r.record("grrk-bar-symmetric", gr.is_bar_symmetric(), || format!("grrk({})", g.word_string(x)));
        for (y, h) in table.column(x).entries() {
            if *y == x {
                continue;
            }
            let d = g.length(x) - g.length(*y);
            let ok = h.coeff(0) == 0 && h.coeffs().iter().all(|c| *c >= 0) && parity_class(&h.to_laurent(), d as i32);
            r.record("kl-positivity-parity", ok, || {
                format!("h({}, {}) = {:?}", g.word_string(*y), g.word_string(x), h)
            });
        }
    }
}

fn bar_invariance(table: &KlTable, r: &mut SuiteReport) {
    let g = table.group();
    let w0 = g.w0();
    for x in g.elements() {
        let b = table.kl_basis(x);
        r.record("bar-invariant", b.bar_involution() == b, || format!("b_{}", g.word_string(x)));
        let expect = LaurentPoly::int_monomial(g.length(g.multiply(x, w0)) as i32, 1);
        r.record("h(x,w0)", table.h(x, w0) == expect, || format!("x = {}", g.word_string(x)));
    }
    if g.family() == Family::I2 {
        for x in g.elements() {
            for y in g.elements() {
                let expect = if g.bruhat_leq(y, x) {
                    LaurentPoly::int_monomial((g.length(x) - g.length(y)) as i32, 1)
                } else {
                    LaurentPoly::zero()
                };
                r.record("dihedral-monomial", table.h(y, x) == expect, || {
                    format!("h({}, {})", g.word_string(y), g.word_string(x))
                });
            }
        }
    }
}

fn bruhat_order(table: &KlTable, r: &mut SuiteReport) {
    let g = table.group();
    for x in g.elements() {
        let col = table.column(x);
        r.record("h(x,x)=1", col.get(x).is_some_and(|h| h.coeffs() == [1]), || g.word_string(x));
        for y in g.elements() {
            let nonzero = col.get(y).is_some();
            r.record("support=interval", nonzero == g.bruhat_leq(y, x), || {
                format!("y = {}, x = {}", g.word_string(y), g.word_string(x))
            });
        }
    }
    if g.size() <= 120 {
        let elems: Vec<ElementId> = g.elements().collect();
        for &x in &elems {
            for &y in &elems {
                if x != y && g.bruhat_leq(x, y) && g.bruhat_leq(y, x) {
                    r.record("antisymmetric", false, || format!("{} {}", g.word_string(x), g.word_string(y)));
                } else {
                    r.record("antisymmetric", true, String::new);
                }
                if !g.bruhat_leq(x, y) {
                    continue;
                }
                for &z in &elems {
                    if g.bruhat_leq(y, z) {
                        r.record("transitive", g.bruhat_leq(x, z), || {
                            format!("{} {} {}", g.word_string(x), g.word_string(y), g.word_string(z))
                        });
                    }
                }
            }
        }
    }
}

fn require_type_a(table: &KlTable, suite: &str) -> Result<usize> {
    let g = table.group();
    if g.family() != Family::A {
        return Err(Error::Unsupported(format!("the {} suite is specific to type A", suite)));
    }
    Ok(g.rank() + 1)
}

fn triple_agreement(table: &KlTable, r: &mut SuiteReport) -> Result<()> {
    let n = require_type_a(table, "triple-agreement")?;
    let closed = closed_jw(table)?;
    let wenzl = wenzl_jw(n, LoopSign::Plus)?;
    let proj = project_pi(&antisymmetriser(table.group()), table)?;
    r.record("closed=wenzl", closed == wenzl, || format!("n = {}", n));
    r.record("closed=projection", closed == proj, || format!("n = {}", n));
    let minus = jw_minus(table)?;
    r.record("minus:closed=wenzl", minus == wenzl_jw(n, LoopSign::Minus)?, || format!("n = {}", n));
    Ok(())
}

/// The idempotents checked by the idempotency and annihilation suites.
enum Idempotents {
    Tl(Vec<(&'static str, TlElt)>),
    Gtl(GtlElt),
}

fn idempotents(table: &KlTable) -> Result<Idempotents> {
    let g = table.group();
    if g.family() != Family::A {
        return Ok(Idempotents::Gtl(gen_jw_closed(table)));
    }
    let n = g.rank() + 1;
    Ok(Idempotents::Tl(vec![
        ("closed", closed_jw(table)?),
        ("wenzl", wenzl_jw(n, LoopSign::Plus)?),
        ("projection", project_pi(&antisymmetriser(g), table)?),
        ("minus", jw_minus(table)?),
    ]))
}

fn gtl_product(a: &GtlElt, b: &GtlElt, table: &KlTable) -> Result<GtlElt> {
    if table.group().size() <= LIFT_LIMIT {
        gtl_multiply(a, b, table)
    } else {
        gtl_multiply_quotient(a, b, table)
    }
}

fn idempotency(table: &KlTable, r: &mut SuiteReport) -> Result<()> {
    match idempotents(table)? {
        Idempotents::Tl(list) => {
            for (name, j) in list {
                r.record(&format!("{}:j*j=j", name), j.multiply(&j)? == j, || name.to_string());
            }
        }
        Idempotents::Gtl(j) => {
            r.record("gen:j*j=j", gtl_product(&j, &j, table)? == j, String::new);
        }
    }
    Ok(())
}

fn annihilation(table: &KlTable, r: &mut SuiteReport) -> Result<()> {
    let g = table.group();
    match idempotents(table)? {
        Idempotents::Tl(list) => {
            let n = g.rank() + 1;
            for (name, j) in list {
                for s in 0..n - 1 {
                    let u = TlElt::generator(n, s, j.sign())?;
                    r.record(&format!("{}:j*u=0", name), j.multiply(&u)?.is_zero(), || format!("u_{}", s + 1));
                    r.record(&format!("{}:u*j=0", name), u.multiply(&j)?.is_zero(), || format!("u_{}", s + 1));
                }
            }
        }
        Idempotents::Gtl(j) => {
            for s in 0..g.rank() {
                let beta = GtlElt::basis(g, g.generator(s))?;
                r.record("gen:j*beta_s=0", gtl_product(&j, &beta, table)?.is_zero(), || format!("s = {}", s + 1));
                r.record("gen:beta_s*j=0", gtl_product(&beta, &j, table)?.is_zero(), || format!("s = {}", s + 1));
            }
        }
    }
    Ok(())
}

fn mu_identity(table: &KlTable, r: &mut SuiteReport) {
    let g = table.group();
    table.compute_all();
    let w0 = g.w0();
    for s in 0..g.rank() {
        let mut sums: BTreeMap<ElementId, LaurentPoly> = BTreeMap::new();
        for x in g.elements() {
            let mut weight = grrk(table, g.multiply(x, w0)).value;
            if g.length(x) % 2 == 1 {
                weight = -weight;
            }
            let prod = kl_structure_constants(table, x, s, Side::Right);
            debug_assert!(prod.denominator().is_one());
            for (y, c) in prod.numerators() {
                add_into(&mut sums, *y, &(c * &weight));
            }
        }
        for y in g.elements() {
            let ok = !sums.contains_key(&y);
            r.record("mu-identity", ok, || format!("y = {}, s = {}", g.word_string(y), s + 1));
        }
    }
}

fn gen_agreement(table: &KlTable, r: &mut SuiteReport) -> Result<()> {
    let g = table.group();
    let closed = gen_jw_closed(table);
    let proj = gen_jw_projection(table);
    r.record("closed=projection", closed == proj, String::new);
    r.record("identity-coefficient=1", closed.coefficient(g.identity()).is_one(), String::new);
    let support_is_fc = g.fc_elements().len() == closed.coeffs().len();
    r.record("support=all-fc", support_is_fc, || {
        format!("{} of {} FC elements", closed.coeffs().len(), g.fc_elements().len())
    });
    if g.family() == Family::A {
        let tl = closed_jw(table)?;
        let mut ok = true;
        for x in g.fc_elements() {
            ok &= tl.coefficient(&crate::tl::monomial(g, x)?) == closed.coefficient(x);
        }
        r.record("matches-tl", ok, String::new);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::coxeter::{build_group, BuildOptions, CoxeterPresentation};

    fn table(p: CoxeterPresentation) -> KlTable {
        KlTable::new(Arc::new(build_group(&p, BuildOptions::default()).unwrap()))
    }

    #[test]
    fn all_suites_pass_on_a2() {
        let t = table(CoxeterPresentation::new(Family::A, 2).unwrap());
        for suite in Suite::ALL {
            let r = run_suite(suite, &t).unwrap();
            assert!(r.ok(), "{}", r.summary_lines());
            assert!(r.total() > 0, "{}", suite);
        }
    }

    #[test]
    fn type_a_suites_reject_other_types() {
        let t = table(CoxeterPresentation::dihedral(5).unwrap());
        assert!(run_suite(Suite::TripleAgreement, &t).is_err());
        for suite in [Suite::Idempotency, Suite::Annihilation, Suite::GenAgreement, Suite::BarInvariance] {
            assert!(run_suite(suite, &t).unwrap().ok());
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
