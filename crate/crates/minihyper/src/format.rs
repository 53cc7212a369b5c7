//! Text formats: multiset files, generator-matrix files, catalog files and
//! resumable search frontiers. Writing then reading is exact.

use crate::classify::{Catalog, ClassifyParams, Frontier};
use crate::code::GeneratorMatrix;
use crate::error::{Error, Result};
use crate::geometry::Geometry;
use crate::multiset::{Mode, Multiset};

/// Multiset text format: a `PG <r> <q>` header, then one line per
/// positive-multiplicity point, `<c0> ... <cr> <m>`, normalized
/// coordinates in lexicographic order.
pub fn write_multiset(m: &Multiset) -> String {
    let geometry = m.geometry();
    let mut out = format!("PG {} {}\n", geometry.r(), geometry.q());
    for (p, mass) in m.support() {
        for c in &geometry.point(p).coords {
            out.push_str(&c.to_string());
            out.push(' ');
        }
        out.push_str(&mass.to_string());
        out.push('\n');
    }
    out
}

pub fn read_multiset(text: &str) -> Result<Multiset> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse("empty multiset file".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "PG" {
        return Err(Error::Parse(format!("bad header line `{header}`")));
    }
    let r: usize = fields[1].parse().map_err(|_| Error::Parse("bad dimension".into()))?;
    let q: u32 = fields[2].parse().map_err(|_| Error::Parse("bad field order".into()))?;
    let geometry = Geometry::shared(r, q)?;
    let mut mult = vec![0u32; geometry.num_points()];
    let mut last_index: Option<u32> = None;
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let nums: Vec<&str> = line.split_whitespace().collect();
        if nums.len() != r + 2 {
            return Err(Error::Parse(format!("expected {} fields: `{line}`", r + 2)));
        }
        let coords: Vec<u8> = nums[..=r]
            .iter()
            .map(|t| t.parse::<u8>().map_err(|_| Error::Parse(format!("bad coordinate in `{line}`"))))
            .collect::<Result<_>>()?;
        if coords.iter().any(|&c| c as u32 >= q) {
            return Err(Error::Parse(format!("coordinate out of range in `{line}`")));
        }
        let mass: u32 = nums[r + 1]
            .parse()
            .map_err(|_| Error::Parse(format!("bad multiplicity in `{line}`")))?;
        if mass == 0 {
            return Err(Error::Parse(format!("zero multiplicity listed in `{line}`")));
        }
        let idx = geometry.point_index(&coords)?;
        if geometry.point(idx).coords != coords {
            return Err(Error::Parse(format!("coordinates not normalized in `{line}`")));
        }
        if last_index.is_some_and(|prev| prev >= idx) {
            return Err(Error::Parse(format!("points out of lexicographic order at `{line}`")));
        }
        last_index = Some(idx);
        mult[idx as usize] = mass;
    }
    Multiset::from_multiplicities(geometry, mult)
}

/// Generator matrix format: a `k n q` header, then k rows of n digits.
pub fn write_generator(g: &GeneratorMatrix) -> String {
    let mut out = format!("{} {} {}\n", g.k, g.n, g.q);
    for r in 0..g.k {
        for c in g.row(r) {
            out.push_str(&c.to_string());
        }
        out.push('\n');
    }
    out
}

pub fn read_generator(text: &str) -> Result<GeneratorMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty generator file".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::Parse(format!("bad header line `{header}`")));
    }
    let k: usize = fields[0].parse().map_err(|_| Error::Parse("bad k".into()))?;
    let n: usize = fields[1].parse().map_err(|_| Error::Parse("bad n".into()))?;
    let q: u32 = fields[2].parse().map_err(|_| Error::Parse("bad q".into()))?;
    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        let line = lines.next().ok_or_else(|| Error::Parse("missing matrix row".into()))?;
        let digits: Vec<u8> = line
            .trim()
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("bad digit `{c}`")))
            })
            .collect::<Result<_>>()?;
        if digits.len() != n {
            return Err(Error::Parse(format!("row has {} digits, expected {n}", digits.len())));
        }
        rows.push(digits);
    }
    GeneratorMatrix::new(q, &rows)
}

/// Catalog format: a header line
/// `CATALOG r q n w mode cap complete|incomplete`, one representative per
/// block in the multiset format separated by blank lines, search statistics
/// as trailing `#` comment lines. The wall-time comment is the only
/// run-dependent line.
pub fn write_catalog(catalog: &Catalog) -> String {
    let p = &catalog.params;
    let mut out = format!(
        "CATALOG {} {} {} {} {} {} {}\n",
        p.r,
        p.q,
        p.n,
        p.w,
        p.mode,
        p.cap,
        if catalog.complete { "complete" } else { "incomplete" }
    );
    for rep in &catalog.representatives {
        out.push('\n');
        out.push_str(&write_multiset(&rep.multiset));
    }
    out.push_str(&format!(
        "# representatives={} nodes={} prunes={}\n",
        catalog.representatives.len(),
        catalog.stats.nodes,
        catalog.stats.prunes
    ));
    out.push_str(&format!("# wall_ms={}\n", catalog.stats.wall_ms));
    out
}

/// A catalog read back from disk: parameters, completeness and the
/// representative multisets.
pub struct ParsedCatalog {
    pub params: ClassifyParams,
    pub complete: bool,
    pub multisets: Vec<Multiset>,
}

pub fn read_catalog(text: &str) -> Result<ParsedCatalog> {
    let mut lines = text.lines().peekable();
    let header = lines.next().ok_or_else(|| Error::Parse("empty catalog file".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 8 || fields[0] != "CATALOG" {
        return Err(Error::Parse(format!("bad catalog header `{header}`")));
    }
    let params = ClassifyParams {
        r: fields[1].parse().map_err(|_| Error::Parse("bad r".into()))?,
        q: fields[2].parse().map_err(|_| Error::Parse("bad q".into()))?,
        n: fields[3].parse().map_err(|_| Error::Parse("bad n".into()))?,
        w: fields[4].parse().map_err(|_| Error::Parse("bad w".into()))?,
        mode: fields[5].parse::<Mode>()?,
        cap: fields[6].parse().map_err(|_| Error::Parse("bad cap".into()))?,
    };
    let complete = match fields[7] {
        "complete" => true,
        "incomplete" => false,
        other => return Err(Error::Parse(format!("bad completeness flag `{other}`"))),
    };
    let mut multisets = Vec::new();
    let mut block = String::new();
    for line in lines {
        if line.starts_with('#') {
            continue;
        }
        if line.trim().is_empty() {
            if !block.is_empty() {
                multisets.push(read_multiset(&block)?);
                block.clear();
            }
        } else {
            block.push_str(line);
            block.push('\n');
        }
    }
    if !block.is_empty() {
        multisets.push(read_multiset(&block)?);
    }
    Ok(ParsedCatalog {
        params,
        complete,
        multisets,
    })
}

/// Frontier files are JSON; they carry enough to resume a classification.
pub fn write_frontier(f: &Frontier) -> Result<String> {
    serde_json::to_string_pretty(f).map_err(|e| Error::Parse(format!("frontier encode: {e}")))
}

pub fn read_frontier(text: &str) -> Result<Frontier> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("frontier decode: {e}")))
}
