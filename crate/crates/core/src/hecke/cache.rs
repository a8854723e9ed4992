//! On-disk persistence of KL columns.
//!
//! One text file per group:
//!
//! ```text
//! kltable 1 <family> <rank>
//! <x_index> <y_index> <e1>:<c1> <e2>:<c2> ...
//! ...
//! end <number of data lines>
//! ```
//!
//! with exponents strictly decreasing and lines sorted by `(x, y)`. Only
//! complete columns are written, so the same table always produces the same
//! bytes. The trailing record catches truncated files.

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use super::kl::{KlColumn, KlPoly, KlTable};
use crate::coxeter::{CoxeterPresentation, ElementId};
use crate::error::{Error, Result};

const MAGIC: &str = "kltable";
const VERSION: u32 = 1;

pub fn header(p: &CoxeterPresentation) -> String {
    format!("{} {} {} {}", MAGIC, VERSION, p.family_token(), p.rank())
}

/// `kl_<family>_<rank>.txt`, with `I2(m)` spelled `I2-m`.
pub fn file_name(p: &CoxeterPresentation) -> String {
    let token = match p.dihedral_m() {
        Some(m) => format!("I2-{}", m),
        None => p.family_token(),
    };
    format!("kl_{}_{}.txt", token, p.rank())
}

pub fn cache_path(dir: &Path, p: &CoxeterPresentation) -> PathBuf {
    dir.join(file_name(p))
}

/// Writes every computed column of `table`.
pub fn write_table<W: Write>(out: W, table: &KlTable) -> std::io::Result<usize> {
    let mut out = BufWriter::new(out);
    writeln!(out, "{}", header(table.group().presentation()))?;
    let mut lines = 0usize;
    let mut buf = String::new();
    for col in table.computed_columns() {
        for (y, h) in col.entries() {
            buf.clear();
            buf.push_str(&format!("{} {}", col.x().0, y.0));
            for (e, c) in h.terms_desc() {
                buf.push_str(&format!(" {}:{}", e, c));
            }
            writeln!(out, "{}", buf)?;
            lines += 1;
        }
    }
    writeln!(out, "end {}", lines)?;
    out.flush()?;
    Ok(lines)
}

fn bad(line_no: usize, what: &str) -> Error {
    Error::CacheFormat(format!("line {}: {}", line_no, what))
}

/// Parses a cache file into columns, validating the header against
/// `table`'s group. Nothing is inserted unless the whole file is valid.
pub fn read_columns<R: BufRead>(input: R, table: &KlTable) -> Result<Vec<KlColumn>> {
    let g = table.group();
    let size = g.size() as u64;
    let mut lines = input.lines();
    let first = lines.next().ok_or_else(|| Error::CacheFormat("empty file".into()))??;
    if first.trim_end() != header(g.presentation()) {
        return Err(Error::CacheFormat(format!(
            "header '{}' does not match '{}'",
            first.trim_end(),
            header(g.presentation())
        )));
    }
    let mut out = Vec::new();
    let mut current: Vec<(ElementId, KlPoly)> = Vec::new();
    let mut last: Option<(u32, u32)> = None;
    let mut count = 0usize;
    let mut trailer = None;
    for (i, line) in lines.enumerate() {
        let line_no = i + 2;
        let line = line?;
        if trailer.is_some() {
            if line.trim().is_empty() {
                continue;
            }
            return Err(bad(line_no, "data after the end record"));
        }
        let mut fields = line.split_ascii_whitespace();
        let Some(head) = fields.next() else {
            return Err(bad(line_no, "blank line"));
        };
        if head == "end" {
            let n: usize =
                fields.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad(line_no, "malformed end record"))?;
            trailer = Some(n);
            continue;
        }
        let x: u32 = head.parse().map_err(|_| bad(line_no, "bad x index"))?;
        let y: u32 = fields.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad(line_no, "bad y index"))?;
        if x as u64 >= size || y as u64 >= size {
            return Err(bad(line_no, "index out of range"));
        }
        if last.is_some_and(|prev| prev >= (x, y)) {
            return Err(bad(line_no, "lines not sorted by (x, y)"));
        }
        if last.is_some_and(|(px, _)| px != x) {
            out.push(seal(ElementId(last.unwrap().0), std::mem::take(&mut current))?);
        }
        last = Some((x, y));
        let mut coeffs: Vec<i64> = Vec::new();
        let mut prev_exp: Option<usize> = None;
        for term in fields {
            let (e, c) = term.split_once(':').ok_or_else(|| bad(line_no, "bad term"))?;
            let e: usize = e.parse().map_err(|_| bad(line_no, "bad exponent"))?;
            let c: i64 = c.parse().map_err(|_| bad(line_no, "bad coefficient"))?;
            if prev_exp.is_some_and(|p| p <= e) || c == 0 {
                return Err(bad(line_no, "exponents must strictly decrease with nonzero coefficients"));
            }
            prev_exp = Some(e);
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] = c;
        }
        if coeffs.is_empty() {
            return Err(bad(line_no, "zero polynomial"));
        }
        current.push((ElementId(y), KlPoly::from_coeffs(coeffs)));
        count += 1;
    }
    match trailer {
        None => return Err(Error::CacheFormat("missing end record (truncated file?)".into())),
        Some(n) if n != count => {
            return Err(Error::CacheFormat(format!("end record says {} lines, found {}", n, count)))
        }
        _ => {}
    }
    if let Some((x, _)) = last {
        out.push(seal(ElementId(x), current)?);
    }
    Ok(out)
}

fn seal(x: ElementId, entries: Vec<(ElementId, KlPoly)>) -> Result<KlColumn> {
    let col = KlColumn::new(x, entries);
    if col.get(x) != Some(&KlPoly::one()) {
        return Err(Error::CacheFormat(format!("column {} lacks h_(x,x) = 1", x.0)));
    }
    Ok(col)
}

/// Loads `path` into `table`; returns the number of columns read.
/// A missing file loads nothing.
pub fn load(path: &Path, table: &KlTable) -> Result<usize> {
    let file = match fs::File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(e.into()),
    };
    let cols = read_columns(BufReader::new(file), table)?;
    let n = cols.len();
    for col in cols {
        table.insert(col);
    }
    Ok(n)
}

/// Writes the table to `path` through a temporary file and a rename, so a
/// reader never sees a half-written cache.
pub fn persist(path: &Path, table: &KlTable) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let result = fs::File::create(&tmp).and_then(|f| {
        write_table(&f, table)?;
        f.sync_all()
    });
    if let Err(e) = result {
        let _ = fs::remove_file(&tmp);
        return Err(e.into());
    }
    fs::rename(&tmp, path)?;
    Ok(())
}
