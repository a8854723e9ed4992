//! `kljw`: Jones-Wenzl idempotents, Kazhdan-Lusztig tables and their
//! verification from the command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails or a computation
//! errors, 2 on invalid input or an unsupported family.

mod cache;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kljw::coxeter::build_group;
use kljw::hecke::{antisymmetriser, to_kl_basis};
use kljw::report::{self, EsignDocument, JwDocument};
use kljw::verify::{reports_json, run_suite, Suite, SuiteReport};
use kljw::{gtl, tl, BuildOptions, CoxeterPresentation, Error, Family, GroupTable, LoopSign};

use crate::cache::CacheSession;

#[derive(Parser)]
#[command(name = "kljw", version, about = "Jones-Wenzl idempotents from Kazhdan-Lusztig polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the elements of a Coxeter group: `index length word`.
    Group(Common),
    /// Kazhdan-Lusztig polynomials h_{y,x} in the cache file format.
    Kl(Common),
    /// Graded ranks sum_y v^-l(y) h_{y,x}: `index length polynomial`.
    Grrk(Common),
    /// The antisymmetriser in the standard and Kazhdan-Lusztig bases.
    Esign(Common),
    /// Jones-Wenzl idempotent coefficients. For type A, --rank is the
    /// number of strands n.
    Jw(JwArgs),
    /// Run verification suites. For type A, --rank is the number of strands.
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct Common {
    /// A, B (or C), F4, H3, H4, I2
    #[arg(long)]
    family: String,
    /// Coxeter rank (strand count for type A `jw`/`verify`)
    #[arg(long)]
    rank: Option<usize>,
    /// The dihedral parameter for I2(m).
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, value_enum)]
    output: Option<Output>,
    /// Directory for KL caches; falls back to $KLJW_CACHE_DIR.
    #[arg(long, env = "KLJW_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Allow F4/H4 Temperley-Lieb computations and groups above 10000 elements.
    #[arg(long)]
    allow_large: bool,
    /// Worker threads for KL table computation
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct JwArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Sign::Plus)]
    sign: Sign,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// One of parity, bar-invariance, bruhat-order, triple-agreement,
    /// idempotency, annihilation, mu-identity, ideal-closure, gen-agreement,
    /// or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Wenzl,
    Projection,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Wenzl => "wenzl",
            Method::Projection => "projection",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Sign {
    Plus,
    Minus,
}

/// Errors that end the run with a specific exit code.
enum Failure {
    Usage(String),
    Compute(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_)
            | Error::Unsupported(_)
            | Error::TooLarge { .. }
            | Error::NotFullyCommutative(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

type Run<T = ()> = std::result::Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> Run<T> {
    Err(Failure::Usage(msg.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = dispatch(cli.command);
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
        Err(Failure::Verification(report)) => {
            eprint!("{}", report);
            ExitCode::from(1)
        }
    }
}

fn dispatch(command: Command) -> Run {
    let common = match &command {
        Command::Group(c) | Command::Kl(c) | Command::Grrk(c) | Command::Esign(c) => c,
        Command::Jw(a) => &a.common,
        Command::Verify(a) => &a.common,
    };
    if let Some(n) = common.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .map_err(|e| Failure::Compute(e.to_string()))?;
    }
    let text = match command {
        Command::Group(c) => cmd_group(&c)?,
        Command::Kl(c) => cmd_kl(&c)?,
        Command::Grrk(c) => cmd_grrk(&c)?,
        Command::Esign(c) => cmd_esign(&c)?,
        Command::Jw(a) => cmd_jw(&a)?,
        Command::Verify(a) => cmd_verify(&a)?,
    };
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes()).map_err(|e| Failure::Compute(e.to_string()))?;
    Ok(())
}

fn parse_family(c: &Common) -> Run<Family> {
    Ok(c.family.parse::<Family>()?)
}

/// The presentation named on the command line. With `strands`, the rank
/// of type A counts strands, so `--rank n` means `A_{n-1}`.
fn presentation(c: &Common, strands: bool) -> Run<CoxeterPresentation> {
    let family = parse_family(c)?;
    if c.m.is_some() && family != Family::I2 {
        return usage("--m only applies to I2");
    }
    let rank = match (family, strands, c.rank) {
        (Family::A, true, Some(n)) if n < 2 => return usage("type A needs at least 2 strands here"),
        (Family::A, true, Some(n)) => Some(n - 1),
        (Family::A | Family::B, _, None) => return usage(format!("{} needs --rank", family)),
        (_, _, r) => r,
    };
    Ok(CoxeterPresentation::from_parts(family, rank, c.m)?)
}

fn group(c: &Common, p: &CoxeterPresentation) -> Run<Arc<GroupTable>> {
    let opts = BuildOptions { allow_large: c.allow_large, ..Default::default() };
    Ok(Arc::new(build_group(p, opts)?))
}

fn needs_large(family: Family) -> bool {
    matches!(family, Family::F4 | Family::H4)
}

fn cmd_group(c: &Common) -> Run<String> {
    let p = presentation(c, false)?;
    let g = group(c, &p)?;
    match c.output {
        None => Ok(report::group_dump(&g)),
        Some(Output::Json) => Ok(report::group_json(&g)),
        Some(Output::Csv) => {
            let mut out = String::from("index,length,word,fully_commutative\n");
            for x in g.elements() {
                out.push_str(&format!("{},{},{},{}\n", x.0, g.length(x), g.word_string(x), g.is_fully_commutative(x)));
            }
            Ok(out)
        }
        Some(Output::Latex) => usage("group has no LaTeX rendering"),
    }
}

fn cmd_kl(c: &Common) -> Run<String> {
    let p = presentation(c, false)?;
    let g = group(c, &p)?;
    let session = CacheSession::open(c.cache_dir.as_deref(), g);
    session.table().compute_all();
    session.finish();
    match c.output {
        None => {
            let mut bytes = Vec::new();
            kljw::hecke::cache::write_table(&mut bytes, session.table())
                .map_err(|e| Failure::Compute(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("ascii"))
        }
        Some(Output::Json) => Ok(report::kl_json(session.table())),
        _ => usage("kl supports the default text format and json"),
    }
}

fn cmd_grrk(c: &Common) -> Run<String> {
    let p = presentation(c, false)?;
    let g = group(c, &p)?;
    let session = CacheSession::open(c.cache_dir.as_deref(), g.clone());
    let table = session.table();
    table.compute_all();
    let ranks: Vec<_> = g.elements().map(|x| kljw::grank::grrk(table, x)).collect();
    session.finish();
    match c.output {
        None => Ok(report::grrk_lines(&ranks)),
        Some(Output::Json) => Ok(report::grrk_json(&g, &ranks)),
        _ => usage("grrk supports the default text format and json"),
    }
}

fn cmd_esign(c: &Common) -> Run<String> {
    let p = presentation(c, false)?;
    let g = group(c, &p)?;
    let session = CacheSession::open(c.cache_dir.as_deref(), g.clone());
    let e = antisymmetriser(&g);
    let standard = e.coeffs().coefficients();
    let kl: Vec<_> = to_kl_basis(&e, session.table()).into_iter().collect();
    session.finish();
    let doc = EsignDocument::new(&g, &standard, &kl);
    match c.output {
        None | Some(Output::Json) => Ok(doc.to_json()),
        Some(Output::Csv) => Ok(doc.to_csv()),
        Some(Output::Latex) => usage("esign supports json and csv"),
    }
}

fn render(doc: &JwDocument, output: Option<Output>) -> String {
    match output {
        None | Some(Output::Json) => doc.to_json(),
        Some(Output::Csv) => doc.to_csv(),
        Some(Output::Latex) => doc.to_latex(),
    }
}

fn cmd_jw(a: &JwArgs) -> Run<String> {
    let c = &a.common;
    let family = parse_family(c)?;
    let sign = match a.sign {
        Sign::Plus => LoopSign::Plus,
        Sign::Minus => LoopSign::Minus,
    };
    if family != Family::A {
        if a.method == Method::Wenzl {
            return usage("the Wenzl recursion is only available for type A");
        }
        if sign == LoopSign::Minus {
            return usage("--sign minus is only available for type A");
        }
    } else if sign == LoopSign::Minus && a.method == Method::Projection {
        return usage("--sign minus supports the closed and wenzl methods");
    }
    if needs_large(family) && !c.allow_large {
        return usage(format!("{} Temperley-Lieb computations need --allow-large", family));
    }

    if family == Family::A {
        let n = c.rank.ok_or_else(|| Failure::Usage("A needs --rank (the number of strands)".into()))?;
        let p = presentation(c, true)?;
        let g = group(c, &p)?;
        let elt = match a.method {
            Method::Wenzl => tl::wenzl_jw(n, sign)?,
            Method::Closed | Method::Projection => {
                let session = CacheSession::open(c.cache_dir.as_deref(), g.clone());
                let table = session.table();
                let elt = match (a.method, sign) {
                    (Method::Closed, LoopSign::Plus) => tl::closed_jw(table)?,
                    (Method::Closed, LoopSign::Minus) => tl::jw_minus(table)?,
                    _ => tl::project_pi(&antisymmetriser(&g), table)?,
                };
                session.finish();
                elt
            }
        };
        let doc = JwDocument::from_tl(&g, n, a.method.name(), &elt)?;
        return Ok(render(&doc, c.output));
    }

    let p = presentation(c, false)?;
    let g = group(c, &p)?;
    let cache_dir = c.cache_dir.clone().or_else(|| needs_large(family).then(cache::default_dir).flatten());
    let session = CacheSession::open(cache_dir.as_deref(), g.clone());
    let table = session.table();
    if g.size() as u64 <= kljw::coxeter::LARGE_GROUP_THRESHOLD {
        gtl::check_ideal_closure(table).map_err(|e| Failure::Compute(e.to_string()))?;
    } else {
        eprintln!("note: ideal closure is not re-checked for groups of order {}", g.size());
    }
    let elt = match a.method {
        Method::Closed => gtl::gen_jw_closed(table),
        _ => gtl::gen_jw_projection(table),
    };
    session.finish();
    let doc = JwDocument::from_gtl(p.rank(), a.method.name(), &elt);
    Ok(render(&doc, c.output))
}

fn cmd_verify(a: &VerifyArgs) -> Run<String> {
    let c = &a.common;
    let family = parse_family(c)?;
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.into_iter().filter(|s| family == Family::A || *s != Suite::TripleAgreement).collect()
    } else {
        vec![a.suite.parse::<Suite>()?]
    };
    if needs_large(family) && !c.allow_large {
        return usage(format!("verifying {} needs --allow-large", family));
    }
    let p = presentation(c, true)?;
    let g = group(c, &p)?;
    let session = CacheSession::open(c.cache_dir.as_deref(), g);
    let mut reports: Vec<SuiteReport> = Vec::new();
    for suite in suites {
        reports.push(run_suite(suite, session.table())?);
    }
    session.finish();
    let ok = reports.iter().all(SuiteReport::ok);
    let text = match c.output {
        Some(Output::Json) => reports_json(&reports),
        None => reports.iter().map(SuiteReport::summary_lines).collect(),
        _ => return usage("verify supports the default text format and json"),
    };
    if ok {
        Ok(text)
    } else {
        print!("{}", text);
        Err(Failure::Verification(reports_json(&reports)))
    }
}
