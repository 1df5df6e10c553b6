//! Linear algebra over a finite field: row reduction, canonical subspaces,
//! the subspace lattice, Grassmannian enumeration and Gaussian binomials.
//!
//! A [`Subspace`] is stored as the nonzero rows of its reduced row echelon
//! form, so two subspaces are equal exactly when their representations are.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement, FieldVector};

/// Guard for full sweeps of `F_q^n`.
pub const MAX_AMBIENT_SIZE: u64 = 1 << 24;

/// A dense matrix over a finite field, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn from_rows(rows: &[FieldVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r.coords());
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> FieldVector {
        FieldVector::new(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn to_rows(&self) -> Vec<FieldVector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, field: &Field, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = FieldElement::ZERO;
                for k in 0..self.cols {
                    acc = field.add_raw(acc, field.mul_raw(self.get(i, k), other.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and rank.
    pub fn rref(&self, field: &Field) -> (Matrix, usize) {
        let mut rows = self.to_rows();
        let pivots = rref_rows(field, &mut rows);
        let rank = pivots.len();
        let mut out = Matrix::zeros(self.rows, self.cols);
        for (i, r) in rows.iter().enumerate() {
            for c in 0..self.cols {
                out.set(i, c, r.coords()[c]);
            }
        }
        (out, rank)
    }

    pub fn rank(&self, field: &Field) -> usize {
        self.rref(field).1
    }
}

/// Brings `rows` into reduced row echelon form in place (zero rows moved to
/// the bottom) and returns the pivot columns.
pub(crate) fn rref_rows(field: &Field, rows: &mut [FieldVector]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i].coords()[c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv_raw(rows[r].coords()[c]);
        if inv != FieldElement::ONE {
            for x in rows[r].coords_mut() {
                *x = field.mul_raw(*x, inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = row.coords()[c];
            if factor.is_zero() {
                continue;
            }
            for (x, &y) in row.coords_mut().iter_mut().zip(pivot_row.coords()) {
                *x = field.sub_raw(*x, field.mul_raw(factor, y));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// An `F_q`-subspace of `F_q^n` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    n: usize,
    basis: Vec<FieldVector>,
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return f.write_str("<0>");
        }
        f.write_str("<")?;
        for (i, r) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(">")
    }
}

impl Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<u32>> = self.basis.iter().map(|r| r.reps()).collect();
        rows.serialize(s)
    }
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace {
            n,
            basis: Vec::new(),
        }
    }

    /// The whole space `F_q^n`.
    pub fn full(n: usize) -> Self {
        Subspace {
            n,
            basis: (0..n).map(|i| FieldVector::unit(n, i)).collect(),
        }
    }

    /// Span of `vectors` inside `F_q^n`.
    pub fn span(field: &Field, vectors: &[FieldVector], n: usize) -> Result<Self> {
        for v in vectors {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
            for &c in v.coords() {
                field.elem(c.rep())?;
            }
        }
        let mut rows = vectors.to_vec();
        let rank = rref_rows(field, &mut rows).len();
        rows.truncate(rank);
        Ok(Subspace { n, basis: rows })
    }

    /// Wraps rows that are already in reduced row echelon form.
    pub(crate) fn from_rref_unchecked(n: usize, basis: Vec<FieldVector>) -> Self {
        Subspace { n, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[FieldVector] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> Matrix {
        if self.basis.is_empty() {
            return Matrix::zeros(0, self.n);
        }
        Matrix::from_rows(&self.basis).expect("rows share the ambient length")
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|r| r.leading_index().expect("basis rows are nonzero"))
            .collect()
    }

    fn same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// Residual of `x` after reduction by the basis; zero iff `x` lies in
    /// the subspace.
    fn reduce(&self, field: &Field, x: &FieldVector) -> FieldVector {
        let mut r = x.clone();
        for row in &self.basis {
            let p = row.leading_index().expect("basis rows are nonzero");
            let factor = r.coords()[p];
            if factor.is_zero() {
                continue;
            }
            for (a, &b) in r.coords_mut().iter_mut().zip(row.coords()) {
                *a = field.sub_raw(*a, field.mul_raw(factor, b));
            }
        }
        r
    }

    pub(crate) fn contains_vec_raw(&self, field: &Field, x: &FieldVector) -> bool {
        self.reduce(field, x).is_zero()
    }

    pub fn contains_vec(&self, field: &Field, x: &FieldVector) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::AmbientMismatch);
        }
        Ok(self.contains_vec_raw(field, x))
    }

    /// Whether `other` is a subspace of `self`.
    pub fn contains(&self, field: &Field, other: &Subspace) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(self.contains_raw(field, other))
    }

    pub(crate) fn contains_raw(&self, field: &Field, other: &Subspace) -> bool {
        other.dim() <= self.dim() && other.basis.iter().all(|v| self.contains_vec_raw(field, v))
    }

    pub fn sum(&self, field: &Field, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        let mut rows: Vec<FieldVector> = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::span(field, &rows, self.n)
    }

    /// Intersection via the Zassenhaus construction: row-reduce
    /// `[[U, U], [V, 0]]`; rows with a vanishing left half span `U ∩ V`.
    pub fn intersect(&self, field: &Field, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        let n = self.n;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for u in &self.basis {
            let mut c = u.coords().to_vec();
            c.extend_from_slice(u.coords());
            rows.push(FieldVector::new(c));
        }
        for v in &other.basis {
            let mut c = v.coords().to_vec();
            c.extend(std::iter::repeat_n(FieldElement::ZERO, n));
            rows.push(FieldVector::new(c));
        }
        let rank = rref_rows(field, &mut rows).len();
        let meet: Vec<FieldVector> = rows[..rank]
            .iter()
            .filter(|r| r.coords()[..n].iter().all(|e| e.is_zero()))
            .map(|r| FieldVector::new(r.coords()[n..].to_vec()))
            .collect();
        Subspace::span(field, &meet, n)
    }

    /// All `q^dim` vectors of the subspace, as linear combinations of the
    /// basis with coefficient tuples in counting order.
    pub fn elements(&self, field: &Field) -> Vec<FieldVector> {
        let q = field.order() as usize;
        let d = self.dim();
        let total = q.pow(d as u32);
        let mut out = Vec::with_capacity(total);
        let mut coeffs = vec![0u32; d];
        for _ in 0..total {
            let mut v = FieldVector::zero(self.n);
            for (row, &c) in self.basis.iter().zip(&coeffs) {
                if c == 0 {
                    continue;
                }
                for (a, &b) in v.coords_mut().iter_mut().zip(row.coords()) {
                    *a = field.add_raw(*a, field.mul_raw(FieldElement(c), b));
                }
            }
            out.push(v);
            for c in coeffs.iter_mut() {
                *c += 1;
                if *c < q as u32 {
                    break;
                }
                *c = 0;
            }
        }
        out
    }

    /// The smallest vector of `self` not lying in `other`.
    pub fn min_vector_of_difference(&self, field: &Field, other: &Subspace) -> Result<FieldVector> {
        self.same_ambient(other)?;
        self.min_vector_of_difference_raw(field, other)
            .ok_or(Error::EmptyDifference)
    }

    pub(crate) fn min_vector_of_difference_raw(
        &self,
        field: &Field,
        other: &Subspace,
    ) -> Option<FieldVector> {
        if other.is_zero() {
            return self.min_nonzero_vector();
        }
        let mut best: Option<FieldVector> = None;
        for v in self.elements(field) {
            if other.contains_vec_raw(field, &v) {
                continue;
            }
            match &best {
                Some(b) if field.vec_cmp_raw(&v, b) != Ordering::Less => {}
                _ => best = Some(v),
            }
        }
        best
    }

    /// The smallest nonzero vector. Any nonzero vector using an earlier basis
    /// row has a nonzero coordinate before the last pivot, so the minimum is
    /// a multiple of the last row; its pivot coordinate is the least nonzero
    /// element, which is always 1.
    pub fn min_nonzero_vector(&self) -> Option<FieldVector> {
        self.basis.last().cloned()
    }

    /// Subspaces of `self` of dimension `k`.
    pub fn subspaces(&self, field: &Field, k: usize) -> Result<Vec<Subspace>> {
        enumerate_between(field, &Subspace::zero(self.n), self, k)
    }

    /// Maps the coordinate rows of `coeffs`, taken relative to `basis`, back
    /// into the ambient space and spans them.
    fn combine(&self, field: &Field, basis: &[FieldVector], coeffs: &Subspace) -> Result<Subspace> {
        let rows: Vec<FieldVector> = coeffs
            .basis
            .iter()
            .map(|c| {
                let mut v = FieldVector::zero(self.n);
                for (w, &a) in basis.iter().zip(c.coords()) {
                    if a.is_zero() {
                        continue;
                    }
                    for (x, &y) in v.coords_mut().iter_mut().zip(w.coords()) {
                        *x = field.add_raw(*x, field.mul_raw(a, y));
                    }
                }
                v
            })
            .collect();
        Subspace::span(field, &rows, self.n)
    }
}

fn q_pow(q: u32, n: usize) -> Option<u64> {
    (q as u64).checked_pow(n as u32)
}

/// All `k`-dimensional subspaces of `F_q^n`, enumerated by RREF profile:
/// a choice of pivot columns and the free entries to the right of each
/// pivot outside the pivot columns.
pub fn enumerate_grassmannian(field: &Field, n: usize, k: usize) -> Result<Vec<Subspace>> {
    if k > n {
        return Err(Error::BadDimension(format!("k = {k} exceeds n = {n}")));
    }
    match q_pow(field.order(), n) {
        Some(s) if s <= MAX_AMBIENT_SIZE => {}
        _ => {
            return Err(Error::TooLarge(format!(
                "q^n = {}^{n} exceeds 2^24",
                field.order()
            )))
        }
    }
    let q = field.order();
    let mut out = Vec::new();
    for pivots in combinations(n, k) {
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| {
                let pivots = &pivots;
                (p + 1..n)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        let mut vals = vec![0u32; free.len()];
        loop {
            let mut rows: Vec<FieldVector> =
                pivots.iter().map(|&p| FieldVector::unit(n, p)).collect();
            for (&(i, c), &v) in free.iter().zip(&vals) {
                rows[i].coords_mut()[c] = FieldElement(v);
            }
            out.push(Subspace::from_rref_unchecked(n, rows));
            let mut idx = 0;
            while idx < vals.len() {
                vals[idx] += 1;
                if vals[idx] < q {
                    break;
                }
                vals[idx] = 0;
                idx += 1;
            }
            if idx == vals.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// All subspaces of `F_q^n`, every dimension.
pub fn enumerate_all_subspaces(field: &Field, n: usize) -> Result<Vec<Subspace>> {
    let mut all = Vec::new();
    for k in 0..=n {
        all.extend(enumerate_grassmannian(field, n, k)?);
    }
    Ok(all)
}

/// `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// The `k`-dimensional subspaces `W` with `a ⊆ W ⊆ b`, enumerated in
/// quotient coordinates: `W = a ⊕ span(combinations of a complement of a
/// in b)`.
pub fn enumerate_between(
    field: &Field,
    a: &Subspace,
    b: &Subspace,
    k: usize,
) -> Result<Vec<Subspace>> {
    if a.n != b.n {
        return Err(Error::AmbientMismatch);
    }
    if !b.contains_raw(field, a) {
        return Err(Error::NotNested);
    }
    if k < a.dim() || k > b.dim() {
        return Err(Error::BadDimension(format!(
            "k = {k} outside [{}, {}]",
            a.dim(),
            b.dim()
        )));
    }
    let mut complement = Vec::new();
    let mut acc = a.clone();
    for w in &b.basis {
        if !acc.contains_vec_raw(field, w) {
            complement.push(w.clone());
            acc = acc.sum(field, &Subspace::span(field, std::slice::from_ref(w), a.n)?)?;
        }
    }
    let m = complement.len();
    let mut out = Vec::new();
    for coeffs in enumerate_grassmannian(field, m, k - a.dim())? {
        let w = a.combine(field, &complement, &coeffs)?;
        out.push(w.sum(field, a)?);
    }
    Ok(out)
}

/// Gaussian binomial `[n, k]_q`, via the product formula with exact
/// division. Zero when `k > n`.
pub fn gaussian_binomial(n: u32, k: u32, q: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let qn = q.pow(n);
    let qk = q.pow(k);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    let mut qi = BigUint::one();
    for _ in 0..k {
        num *= &qn - &qi;
        den *= &qk - &qi;
        qi *= &q;
    }
    num / den
}

/// `[n, k]_q` as a machine integer; panics on overflow, which does not
/// happen at the sizes this crate enumerates.
pub fn gaussian_binomial_u64(n: u32, k: u32, q: u32) -> u64 {
    let g = gaussian_binomial(n, k, q);
    u64::try_from(&g).expect("gaussian binomial fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn v(reps: &[u32]) -> FieldVector {
        FieldVector::from_reps(reps)
    }

    fn sp(f: &Field, rows: &[&[u32]]) -> Subspace {
        let vs: Vec<FieldVector> = rows.iter().map(|r| v(r)).collect();
        let n = rows.first().map_or(0, |r| r.len());
        Subspace::span(f, &vs, n).unwrap()
    }

    #[test]
    fn rref_basics() {
        let f = f2();
        let id = Matrix::identity(3);
        assert_eq!(id.rref(&f), (id.clone(), 3));
        let y = Matrix::from_rows(&[v(&[1, 0, 0, 0]), v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])]).unwrap();
        assert_eq!(y.rref(&f), (y.clone(), 3));
    }

    #[test]
    fn span_examples() {
        let f = f2();
        let u = sp(&f, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(u.dim(), 3);
        assert_eq!(
            u.basis(),
            &[v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])]
        );
        assert_eq!(Subspace::span(&f, &[], 4).unwrap(), Subspace::zero(4));
        let line = sp(&f, &[&[1, 1, 0], &[1, 1, 0]]);
        assert_eq!(line.dim(), 1);
        assert!(matches!(
            Subspace::span(&f, &[v(&[1, 0])], 3),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    fn element_set(f: &Field, u: &Subspace) -> HashSet<FieldVector> {
        u.elements(f).into_iter().collect()
    }

    #[test]
    fn sum_and_intersection_against_enumeration() {
        let f = f2();
        let u = sp(&f, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let w = sp(&f, &[&[1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let meet = u.intersect(&f, &w).unwrap();
        let brute: HashSet<_> = element_set(&f, &u)
            .intersection(&element_set(&f, &w))
            .cloned()
            .collect();
        assert_eq!(brute.len(), 4);
        assert_eq!(element_set(&f, &meet), brute);
        assert_eq!(meet, sp(&f, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]));
        assert_eq!(u.sum(&f, &w).unwrap(), Subspace::full(4));
        assert_eq!(u.intersect(&f, &u).unwrap(), u);
        assert_eq!(u.sum(&f, &Subspace::zero(4)).unwrap(), u);
        assert_eq!(
            u.intersect(&f, &Subspace::zero(3)),
            Err(Error::AmbientMismatch)
        );
    }

    #[test]
    fn containment() {
        let f = f2();
        let u = sp(&f, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let w = sp(&f, &[&[1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let e2 = v(&[0, 1, 0, 0]);
        assert!(u.contains_vec(&f, &e2).unwrap());
        assert!(!w.contains_vec(&f, &e2).unwrap());
        assert!(!element_set(&f, &w).contains(&e2));
        assert!(u.contains(&f, &Subspace::zero(4)).unwrap());
        assert!(w.contains(&f, &Subspace::zero(4)).unwrap());
    }

    #[test]
    fn grassmannian_counts() {
        let f = f2();
        assert_eq!(enumerate_grassmannian(&f, 4, 3).unwrap().len(), 15);
        assert_eq!(enumerate_grassmannian(&f, 3, 2).unwrap().len(), 7);
        assert_eq!(
            enumerate_grassmannian(&f, 4, 0).unwrap(),
            vec![Subspace::zero(4)]
        );
        for q in [2u32, 3] {
            let f = Field::prime(q).unwrap();
            for n in 0..=4usize {
                for k in 0..=n {
                    let g = enumerate_grassmannian(&f, n, k).unwrap();
                    assert_eq!(g.len() as u64, gaussian_binomial_u64(n as u32, k as u32, q));
                    let distinct: HashSet<_> = g.iter().collect();
                    assert_eq!(distinct.len(), g.len());
                    for s in &g {
                        // canonical: re-spanning the basis gives the same rows
                        assert_eq!(&Subspace::span(&f, s.basis(), n).unwrap(), s);
                    }
                }
            }
        }
        let big = Field::prime(2).unwrap();
        assert!(matches!(
            enumerate_grassmannian(&big, 25, 1),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn between_and_subspaces_of() {
        let f = f2();
        let u = sp(&f, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let sub2 = u.subspaces(&f, 2).unwrap();
        let brute: Vec<_> = enumerate_grassmannian(&f, 4, 2)
            .unwrap()
            .into_iter()
            .filter(|w| u.contains_raw(&f, w))
            .collect();
        assert_eq!(brute.len(), 7);
        assert_eq!(
            sub2.iter().collect::<HashSet<_>>(),
            brute.iter().collect::<HashSet<_>>()
        );
        let lines = enumerate_between(&f, &Subspace::zero(2), &Subspace::full(2), 1).unwrap();
        assert_eq!(lines.len(), 3);
        let a = sp(&f, &[&[1, 0, 0]]);
        let b = sp(&f, &[&[1, 0, 0], &[0, 1, 1]]);
        assert_eq!(enumerate_between(&f, &a, &b, 2).unwrap(), vec![b.clone()]);
        assert_eq!(enumerate_between(&f, &b, &a, 2), Err(Error::NotNested));
        assert!(matches!(
            enumerate_between(&f, &a, &b, 3),
            Err(Error::BadDimension(_))
        ));
        // count formula for a general gap
        let f3 = Field::prime(3).unwrap();
        let a = Subspace::span(&f3, &[v(&[1, 2, 0, 0])], 4).unwrap();
        let between = enumerate_between(&f3, &a, &Subspace::full(4), 2).unwrap();
        assert_eq!(between.len() as u64, gaussian_binomial_u64(3, 1, 3));
        assert!(between
            .iter()
            .all(|w| w.dim() == 2 && w.contains_raw(&f3, &a)));
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(4, 3, 2), BigUint::from(15u32));
        assert_eq!(gaussian_binomial(3, 2, 2), BigUint::from(7u32));
        assert_eq!(gaussian_binomial(9, 0, 5), BigUint::one());
        assert_eq!(gaussian_binomial(2, 3, 2), BigUint::zero());
        assert_eq!(gaussian_binomial(4, 2, 2), BigUint::from(35u32));
    }

    #[test]
    fn min_vector_examples() {
        let f = f2();
        let u = sp(&f, &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let w = sp(&f, &[&[1, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(
            u.min_vector_of_difference(&f, &w).unwrap(),
            v(&[0, 1, 0, 0])
        );
        assert_eq!(
            w.min_vector_of_difference(&f, &Subspace::zero(4)).unwrap(),
            v(&[0, 0, 0, 1])
        );
        assert_eq!(
            u.min_vector_of_difference(&f, &u),
            Err(Error::EmptyDifference)
        );
        let f3 = Field::prime(3).unwrap();
        let line = Subspace::span(&f3, &[v(&[2, 1, 0])], 3).unwrap();
        let brute = line
            .elements(&f3)
            .into_iter()
            .filter(|x| !x.is_zero())
            .min_by(|a, b| f3.vec_cmp_raw(a, b))
            .unwrap();
        assert_eq!(line.min_nonzero_vector().unwrap(), brute);
    }

    #[test]
    fn modular_law_and_min_vector_exhaustive() {
        for (q, n) in [(2u32, 3usize), (3, 2)] {
            let f = Field::prime(q).unwrap();
            let all = enumerate_all_subspaces(&f, n).unwrap();
            for u in &all {
                for w in &all {
                    let s = u.sum(&f, w).unwrap();
                    let m = u.intersect(&f, w).unwrap();
                    assert_eq!(s.dim() + m.dim(), u.dim() + w.dim());
                    if let Some(x) = u.min_vector_of_difference_raw(&f, w) {
                        assert!(u.contains_vec_raw(&f, &x));
                        assert!(!w.contains_vec_raw(&f, &x));
                        for y in u.elements(&f) {
                            if !w.contains_vec_raw(&f, &y) {
                                assert_ne!(f.vec_cmp_raw(&y, &x), Ordering::Less);
                            }
                        }
                    } else {
                        assert!(w.contains_raw(&f, u));
                    }
                }
            }
        }
    }

    #[test]
    fn combinations_lex() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
