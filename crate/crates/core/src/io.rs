//! Plain-text formats for facet lists and generator matrices.
//!
//! Facet list:
//!
//! ```text
//! # comment
//! q=gf(2) n=4
//! 0,1,0,0; 0,0,1,0; 0,0,0,1
//! 1,1,0,0; 0,0,1,0; 0,0,0,1
//! ```
//!
//! Generator matrix (entries in the extension, written as integer reps or
//! as polynomials in the modulus variable):
//!
//! ```text
//! field gf(2^4):a^4+a+1
//! base gf(2)
//! a^2+a+1, a^2, a^3+a+1, a^3+a^2+a+1
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldVector};
use crate::qcomplex::QComplex;
use crate::qmatroid::RankMetricCode;
use crate::vecspace::{Matrix, Subspace};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

#[derive(Clone, Debug)]
pub struct FacetList {
    pub field: Field,
    pub n: usize,
    pub facets: Vec<Subspace>,
}

impl FacetList {
    pub fn into_complex(self) -> Result<QComplex> {
        QComplex::from_facets(&self.field, self.n, self.facets)
    }
}

pub fn parse_facet_list(text: &str) -> Result<FacetList> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header `q=<field> n=<n>`"))?;
    let mut field = None;
    let mut n = None;
    for tok in header.split_whitespace() {
        if let Some(v) = tok.strip_prefix("q=") {
            field = Some(Field::parse(v).map_err(|e| Error::parse(hl, e.to_string()))?);
        } else if let Some(v) = tok.strip_prefix("n=") {
            n = Some(
                v.parse::<usize>()
                    .map_err(|_| Error::parse(hl, format!("bad n {v:?}")))?,
            );
        } else {
            return Err(Error::parse(hl, format!("unexpected header token {tok:?}")));
        }
    }
    let field = field.ok_or_else(|| Error::parse(hl, "header lacks q=<field>"))?;
    let n = n.ok_or_else(|| Error::parse(hl, "header lacks n=<n>"))?;
    let mut facets = Vec::new();
    for (ln, line) in lines {
        let mut vecs = Vec::new();
        for part in line.split(';') {
            let reps = part
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::parse(ln, format!("bad entry {s:?}")))
                })
                .collect::<Result<Vec<u32>>>()?;
            if reps.len() != n {
                return Err(Error::parse(
                    ln,
                    format!("vector has {} entries, expected {n}", reps.len()),
                ));
            }
            if let Some(r) = reps.iter().find(|&&r| r >= field.order()) {
                return Err(Error::parse(
                    ln,
                    format!("entry {r} is not an element of {field}"),
                ));
            }
            vecs.push(FieldVector::from_reps(&reps));
        }
        facets.push(Subspace::span(&field, &vecs, n).map_err(|e| Error::parse(ln, e.to_string()))?);
    }
    Ok(FacetList { field, n, facets })
}

/// Writes facets with their canonical bases.
pub fn format_facet_list(field: &Field, n: usize, facets: &[Subspace]) -> String {
    let mut s = format!("q={field} n={n}\n");
    for f in facets {
        let rows: Vec<String> = if f.is_zero() {
            vec![FieldVector::zero(n).to_string()]
        } else {
            f.basis().iter().map(|v| v.to_string()).collect()
        };
        let _ = writeln!(s, "{}", rows.join("; "));
    }
    s
}

pub fn parse_generator(text: &str) -> Result<RankMetricCode> {
    let mut ext = None;
    let mut var = 'x';
    let mut base = None;
    let mut rows = Vec::new();
    let mut row_lines = Vec::new();
    for (ln, line) in content_lines(text) {
        if let Some(spec) = line.strip_prefix("field ") {
            let spec = spec.trim();
            ext = Some(Field::parse(spec).map_err(|e| Error::parse(ln, e.to_string()))?);
            if let Some((_, m)) = spec.split_once(':') {
                var = m.chars().find(|c| c.is_ascii_alphabetic()).unwrap_or('x');
            }
        } else if let Some(spec) = line.strip_prefix("base ") {
            base = Some(Field::parse(spec).map_err(|e| Error::parse(ln, e.to_string()))?);
        } else {
            let ext = ext
                .as_ref()
                .ok_or_else(|| Error::parse(ln, "matrix row before `field` line"))?;
            let entries: Vec<&str> = if line.contains(',') {
                line.split(',').map(str::trim).collect()
            } else {
                line.split_whitespace().collect()
            };
            let row = entries
                .iter()
                .map(|s| {
                    ext.parse_elem(s, var)
                        .map_err(|e| Error::parse(ln, e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(FieldVector::new(row));
            row_lines.push(ln);
        }
    }
    let ext = ext.ok_or_else(|| Error::parse(0, "missing `field` line"))?;
    let base = match base {
        Some(b) => b,
        None => Field::prime(ext.characteristic())?,
    };
    if rows.is_empty() {
        return Err(Error::parse(0, "generator matrix has no rows"));
    }
    if let Some(i) = rows.iter().position(|r| r.len() != rows[0].len()) {
        return Err(Error::parse(row_lines[i], "rows have different lengths"));
    }
    let g = Matrix::from_rows(&rows)?;
    RankMetricCode::new(&ext, &base, g)
}

/// Writes a generator file with entries as polynomials in `a`.
pub fn format_generator(code: &RankMetricCode) -> String {
    let ext = code.ext_field();
    let var = 'a';
    let modulus = crate::gf::format_poly(ext.modulus(), var);
    let mut s = format!(
        "field gf({}^{}):{modulus}\nbase {}\n",
        ext.characteristic(),
        ext.degree(),
        code.base_field()
    );
    let g = code.generator();
    for r in 0..g.rows() {
        let row: Vec<String> = (0..g.cols())
            .map(|c| ext.format_elem(g.get(r, c), var))
            .collect();
        let _ = writeln!(s, "{}", row.join(", "));
    }
    s
}
