//! Reduced simplicial homology over ℤ through Smith normal form.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ordercx::{order_complex, SimplicialComplex};
use crate::qcomplex::QComplex;
use crate::vecspace::Subspace;

/// Largest number of cells a dense boundary matrix may have.
pub const MAX_MATRIX_CELLS: u64 = 50_000_000;

/// Sparse integer matrix of the boundary map from `p`-simplices to
/// `(p-1)`-simplices, in triplet form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryMatrix {
    pub degree: i64,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

impl BoundaryMatrix {
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.cols]; self.rows];
        for &(r, c, v) in &self.entries {
            m[r][c] += v;
        }
        m
    }

    /// `degree rows cols` header, then one `row col value` line per entry.
    pub fn to_triplets(&self) -> String {
        let mut s = format!("{} {} {}\n", self.degree, self.rows, self.cols);
        for (r, c, v) in &self.entries {
            let _ = writeln!(s, "{r} {c} {v}");
        }
        s
    }
}

/// Boundary maps `∂_p` for `p = 0..=dim` (with `p = 0` mapping to the empty
/// simplex only when `reduced`). Simplices are sorted vertex tuples; the
/// sign of dropping position `i` is `(-1)^i`.
pub fn boundary_matrices(k: &SimplicialComplex, reduced: bool) -> Result<Vec<BoundaryMatrix>> {
    let levels = k.simplices()?;
    let mut out = Vec::new();
    for size in 1..levels.len() {
        let cols = &levels[size];
        let rows = &levels[size - 1];
        let degree = size as i64 - 1;
        if size == 1 && !reduced {
            out.push(BoundaryMatrix {
                degree,
                rows: 0,
                cols: cols.len(),
                entries: Vec::new(),
            });
            continue;
        }
        let index: HashMap<&[usize], usize> = rows
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let mut entries = Vec::with_capacity(cols.len() * size);
        let mut face = Vec::with_capacity(size);
        for (c, simplex) in cols.iter().enumerate() {
            for drop in 0..size {
                face.clear();
                face.extend(
                    simplex
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != drop)
                        .map(|(_, &v)| v),
                );
                let r = index[face.as_slice()];
                entries.push((r, c, if drop % 2 == 0 { 1 } else { -1 }));
            }
        }
        entries.sort_unstable();
        out.push(BoundaryMatrix {
            degree,
            rows: rows.len(),
            cols: cols.len(),
            entries,
        });
    }
    Ok(out)
}

/// Whether `∂_{p-1} ∘ ∂_p = 0` for every consecutive pair.
pub fn boundary_squares_to_zero(maps: &[BoundaryMatrix]) -> bool {
    maps.windows(2).all(|w| {
        let (lower, upper) = (&w[0], &w[1]);
        let mut by_row: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
        for &(r, c, v) in &lower.entries {
            by_row.entry(c).or_default().push((r, v));
        }
        let mut acc: HashMap<(usize, usize), i64> = HashMap::new();
        for &(mid, c, v) in &upper.entries {
            for &(r, u) in by_row.get(&mid).map(Vec::as_slice).unwrap_or(&[]) {
                *acc.entry((r, c)).or_insert(0) += u * v;
            }
        }
        acc.values().all(|&x| x == 0)
    })
}

/// Smith normal form of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmithForm {
    /// Nonzero invariant factors `d_1 | d_2 | ...`.
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

trait Entry: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn abs_key(&self) -> BigInt;
    fn abs_lt(&self, other: &Self) -> bool;
    /// `(a / b, a % b)` truncated, or `None` on overflow.
    fn div_rem(a: &Self, b: &Self) -> Option<(Self, Self)>;
    /// `a - q * b`, or `None` on overflow.
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Option<Self>;
    fn add(a: &Self, b: &Self) -> Option<Self>;
}

impl Entry for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn abs_key(&self) -> BigInt {
        BigInt::from(*self).abs()
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn div_rem(a: &Self, b: &Self) -> Option<(Self, Self)> {
        Some((a.checked_div(*b)?, a.checked_rem(*b)?))
    }
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Option<Self> {
        a.checked_sub(q.checked_mul(*b)?)
    }
    fn add(a: &Self, b: &Self) -> Option<Self> {
        a.checked_add(*b)
    }
}

impl Entry for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_key(&self) -> BigInt {
        self.abs()
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.abs() < other.abs()
    }
    fn div_rem(a: &Self, b: &Self) -> Option<(Self, Self)> {
        Some((a / b, a % b))
    }
    fn sub_mul(a: &Self, q: &Self, b: &Self) -> Option<Self> {
        Some(a - q * b)
    }
    fn add(a: &Self, b: &Self) -> Option<Self> {
        Some(a + b)
    }
}

fn snf_generic<T: Entry>(mut m: Vec<Vec<T>>, cols: usize) -> Option<Vec<BigInt>> {
    let rows = m.len();
    let mut t = 0;
    let mut factors = Vec::new();
    while t < rows && t < cols {
        let Some((pr, pc)) = min_entry(&m, t..rows, t..cols) else {
            break;
        };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !m[i][t].is_zero() {
                    let (q, _) = T::div_rem(&m[i][t], &m[t][t])?;
                    for c in t..cols {
                        m[i][c] = T::sub_mul(&m[i][c], &q, &m[t][c])?;
                    }
                    clean &= m[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !m[t][j].is_zero() {
                    let (q, _) = T::div_rem(&m[t][j], &m[t][t])?;
                    for row in m.iter_mut().skip(t) {
                        row[j] = T::sub_mul(&row[j], &q, &row[t])?;
                    }
                    clean &= m[t][j].is_zero();
                }
            }
            if !clean {
                // a smaller remainder sits in row or column t; pivot on it
                let (pr, pc) = min_entry_cross(&m, t, rows, cols);
                if pr != t {
                    m.swap(t, pr);
                }
                if pc != t {
                    for row in m.iter_mut() {
                        row.swap(t, pc);
                    }
                }
                continue;
            }
            let bad = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| {
                    !T::div_rem(&m[i][j], &m[t][t])
                        .map(|(_, r)| r.is_zero())
                        .unwrap_or(false)
                })
            });
            match bad {
                Some(i) => {
                    for c in t..cols {
                        m[t][c] = T::add(&m[t][c], &m[i][c])?;
                    }
                }
                None => break,
            }
        }
        factors.push(m[t][t].abs_key());
        t += 1;
    }
    Some(factors)
}

fn min_entry<T: Entry>(
    m: &[Vec<T>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            let v = &m[i][j];
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs_lt(&m[bi][bj])) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_entry_cross<T: Entry>(m: &[Vec<T>], t: usize, rows: usize, cols: usize) -> (usize, usize) {
    let mut best = (t, t);
    for i in t + 1..rows {
        if !m[i][t].is_zero() && m[i][t].abs_lt(&m[best.0][best.1]) {
            best = (i, t);
        }
    }
    for j in t + 1..cols {
        if !m[t][j].is_zero() && m[t][j].abs_lt(&m[best.0][best.1]) {
            best = (t, j);
        }
    }
    best
}

/// Invariant factors by row and column reduction with least-magnitude
/// pivots, in `i64` with a switch to arbitrary precision on overflow.
pub fn smith_normal_form(m: &[Vec<i64>]) -> SmithForm {
    let cols = m.first().map_or(0, Vec::len);
    let factors = snf_generic(m.to_vec(), cols).unwrap_or_else(|| {
        let big = m
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        snf_generic::<BigInt>(big, cols).expect("arbitrary precision does not overflow")
    });
    SmithForm {
        rank: factors.len(),
        factors,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub p: i64,
    pub rank: u64,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub degrees: Vec<HomologyGroup>,
    /// `Σ (-1)^p β_p` over the groups.
    pub euler: i64,
    /// `Σ (-1)^p f_p` from face counts, the empty face in degree `-1`.
    pub euler_from_faces: i64,
    /// The only degree with a nonzero group, if there is exactly one.
    pub concentrated_at: Option<i64>,
}

impl HomologyReport {
    pub fn rank_at(&self, p: i64) -> u64 {
        self.degrees.iter().find(|g| g.p == p).map_or(0, |g| g.rank)
    }

    pub fn torsion_free(&self) -> bool {
        self.degrees.iter().all(|g| g.torsion.is_empty())
    }

    pub fn is_acyclic(&self) -> bool {
        self.degrees.iter().all(HomologyGroup::is_zero)
    }
}

fn sign(p: i64) -> i64 {
    if p.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Reduced homology in degrees `-1..=dim`.
pub fn reduced_homology(k: &SimplicialComplex) -> Result<HomologyReport> {
    let levels = k.f_vector()?;
    let maps = boundary_matrices(k, true)?;
    let mut snfs = Vec::with_capacity(maps.len());
    for b in &maps {
        let cells = b.rows as u64 * b.cols as u64;
        if cells > MAX_MATRIX_CELLS {
            return Err(Error::TooLarge(format!("boundary matrix of {cells} cells")));
        }
        snfs.push(smith_normal_form(&b.to_dense()));
    }
    // snfs[s] is ∂ from size s+1 to size s
    let mut degrees = Vec::new();
    for (size, &count) in levels.iter().enumerate() {
        let p = size as i64 - 1;
        let out_rank = if size == 0 { 0 } else { snfs[size - 1].rank };
        let in_snf = snfs.get(size);
        let in_rank = in_snf.map_or(0, |s| s.rank);
        let torsion = in_snf
            .map(|s| {
                s.factors
                    .iter()
                    .filter(|d| **d > BigInt::from(1))
                    .map(|d| d.to_u64().unwrap_or(u64::MAX))
                    .collect()
            })
            .unwrap_or_default();
        degrees.push(HomologyGroup {
            p,
            rank: (count - out_rank - in_rank) as u64,
            torsion,
        });
    }
    let euler = degrees.iter().map(|g| sign(g.p) * g.rank as i64).sum();
    let euler_from_faces = levels
        .iter()
        .enumerate()
        .map(|(s, &c)| sign(s as i64 - 1) * c as i64)
        .sum();
    let nonzero: Vec<i64> = degrees
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.p)
        .collect();
    Ok(HomologyReport {
        concentrated_at: if nonzero.len() == 1 {
            Some(nonzero[0])
        } else {
            None
        },
        degrees,
        euler,
        euler_from_faces,
    })
}

/// Reduced homology of the punctured order complex of `c`.
pub fn qcomplex_homology(c: &QComplex) -> Result<HomologyReport> {
    reduced_homology(&order_complex(c, true)?.complex)
}

/// One step of the facet-by-facet build-up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MvStage {
    /// Number of facets already present.
    pub j: usize,
    /// Ranks in degrees `-1..=k-1` of the first `j` facets.
    pub before: Vec<u64>,
    /// Ranks in degrees `-1..=k-1` of the faces of the new facet lying in
    /// an earlier one.
    pub intersection: Vec<u64>,
    /// Ranks in degrees `-1..=k-1` once the new facet is added.
    pub after: Vec<u64>,
    pub intersection_facets: usize,
    pub identity_holds: bool,
    pub intersection_concentrated: bool,
    pub torsion_free: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MvReport {
    pub k: usize,
    pub first_facet: Vec<u64>,
    pub stages: Vec<MvStage>,
    pub final_ranks: Vec<u64>,
    /// Sum over stages of the intersection rank in degree `k-2`.
    pub accumulated: u64,
    pub ok: bool,
}

fn ranks(h: &HomologyReport, len: usize) -> Vec<u64> {
    (0..len).map(|i| h.rank_at(i as i64 - 1)).collect()
}

/// Adds the facets one at a time in the given order and, at each stage,
/// compares `β_p(after)` with `β_p(before) + β_{p-1}(intersection)` for
/// every degree `p`, where the intersection complex is generated by the
/// codimension-one spaces `F_i ∩ F_{j+1}`.
pub fn mayer_vietoris_stage_check(c: &QComplex, order: &[usize]) -> Result<MvReport> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    crate::qcomplex::check_permutation(order, c.facets().len())?;
    let f = c.field();
    let k = c.dim();
    let len = k + 1;
    let facets: Vec<&Subspace> = order.iter().map(|&i| &c.facets()[i]).collect();
    let first = qcomplex_homology(&c.subcomplex(&order[..1])?)?;
    let mut prev = ranks(&first, len);
    let first_facet = prev.clone();
    let mut ok = first.is_acyclic();
    let mut stages = Vec::new();
    let mut accumulated = 0;
    for j in 1..facets.len() {
        let new = facets[j];
        let meets: Vec<Subspace> = facets[..j]
            .iter()
            .map(|g| g.intersect(f, new).expect("same ambient"))
            .collect();
        let gens: Vec<Subspace> = meets.iter().filter(|m| m.dim() + 1 == k).cloned().collect();
        if gens.is_empty()
            || !meets
                .iter()
                .all(|m| gens.iter().any(|g| g.contains_raw(f, m)))
        {
            return Err(Error::ShellingBroken(j));
        }
        let inter_cx = QComplex::from_facets(f, c.ambient_dim(), gens)?;
        let inter = qcomplex_homology(&inter_cx)?;
        let after_h = qcomplex_homology(&c.subcomplex(&order[..=j])?)?;
        let inter_r = ranks(&inter, len);
        let after = ranks(&after_h, len);
        let identity_holds =
            (0..len).all(|i| after[i] == prev[i] + if i == 0 { 0 } else { inter_r[i - 1] });
        let top = k as i64 - 2;
        let intersection_concentrated = inter.degrees.iter().all(|g| g.p == top || g.is_zero());
        let torsion_free = inter.torsion_free() && after_h.torsion_free();
        ok &= identity_holds && intersection_concentrated && torsion_free;
        accumulated += inter.rank_at(top);
        stages.push(MvStage {
            j,
            before: prev,
            intersection: inter_r,
            after: after.clone(),
            intersection_facets: inter_cx.facets().len(),
            identity_holds,
            intersection_concentrated,
            torsion_free,
        });
        prev = after;
    }
    Ok(MvReport {
        k,
        first_facet,
        stages,
        final_ranks: prev,
        accumulated,
        ok,
    })
}
