//! q-matroids given by a rank table, and the rank function of a rank-metric code.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement, FieldVector};
use crate::qcomplex::QComplex;
use crate::vecspace::{enumerate_all_subspaces, gaussian_binomial, Matrix, Subspace};

/// Largest number of subspaces of `F_q^n` a rank table may cover.
pub const MAX_TABLE_SIZE: u64 = 100_000;

/// A linear code over `F_{p^e}` with generator matrix `G` (`k × n`), read as
/// a rank-metric code over the prime field `F_p`.
#[derive(Clone, Debug)]
pub struct RankMetricCode {
    ext: Field,
    base: Field,
    generator: Matrix,
}

impl RankMetricCode {
    pub fn new(ext: &Field, base: &Field, generator: Matrix) -> Result<RankMetricCode> {
        if base.degree() != 1 || base.characteristic() != ext.characteristic() {
            return Err(Error::BadModulus(format!(
                "base field {base} is not the prime subfield of {ext}"
            )));
        }
        if generator.rows() == 0 || generator.cols() == 0 {
            return Err(Error::Empty);
        }
        if generator.rank(ext) != generator.rows() {
            return Err(Error::BadDimension(
                "generator matrix does not have full row rank".into(),
            ));
        }
        Ok(RankMetricCode {
            ext: ext.clone(),
            base: base.clone(),
            generator,
        })
    }

    pub fn ext_field(&self) -> &Field {
        &self.ext
    }

    pub fn base_field(&self) -> &Field {
        &self.base
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    /// `G Yᵀ` for a subspace `U ≤ F_p^n` with basis matrix `Y`.
    pub fn restrict(&self, u: &Subspace) -> Result<Matrix> {
        if u.ambient_dim() != self.length() {
            return Err(Error::DimensionMismatch {
                expected: self.length(),
                got: u.ambient_dim(),
            });
        }
        // prime field reps are the constant polynomials of the extension
        let yt = u.basis_matrix().transpose();
        self.generator.mul(&self.ext, &yt)
    }
}

/// `rank(G Yᵀ)` over the extension field.
pub fn rank_from_code(code: &RankMetricCode, u: &Subspace) -> Result<usize> {
    if u.is_zero() {
        if u.ambient_dim() != code.length() {
            return Err(Error::DimensionMismatch {
                expected: code.length(),
                got: u.ambient_dim(),
            });
        }
        return Ok(0);
    }
    Ok(code.restrict(u)?.rank(&code.ext))
}

/// Kernel of `G Yᵀ` over the extension, one basis vector per row.
pub fn restricted_kernel(code: &RankMetricCode, u: &Subspace) -> Result<Vec<FieldVector>> {
    let m = code.restrict(u)?;
    let f = &code.ext;
    let (r, rank) = m.rref(f);
    let pivots: Vec<usize> = (0..rank)
        .map(|i| {
            (0..r.cols())
                .find(|&c| !r.get(i, c).is_zero())
                .expect("pivot row")
        })
        .collect();
    let mut out = Vec::new();
    for free in (0..r.cols()).filter(|c| !pivots.contains(c)) {
        let mut v = vec![FieldElement::ZERO; r.cols()];
        v[free] = FieldElement::ONE;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg_raw(r.get(i, free));
        }
        out.push(FieldVector::new(v));
    }
    Ok(out)
}

/// A q-matroid on `F_q^n`, stored as its full rank table.
#[derive(Clone, Debug)]
pub struct QMatroid {
    field: Field,
    n: usize,
    ranks: HashMap<Subspace, usize>,
    order: Vec<Subspace>,
    rank: usize,
}

impl QMatroid {
    /// Tabulates `rank` on every subspace of `F_q^n`.
    pub fn from_rank_fn<F>(field: &Field, n: usize, mut rank: F) -> Result<QMatroid>
    where
        F: FnMut(&Subspace) -> Result<usize>,
    {
        let total: num_bigint::BigUint = (0..=n as u32)
            .map(|k| gaussian_binomial(n as u32, k, field.order()))
            .sum();
        if total > num_bigint::BigUint::from(MAX_TABLE_SIZE) {
            return Err(Error::TooLarge(format!(
                "F_{}^{n} has {total} subspaces, limit is {MAX_TABLE_SIZE}",
                field.order()
            )));
        }
        let order = enumerate_all_subspaces(field, n)?;
        let mut ranks = HashMap::with_capacity(order.len());
        for u in &order {
            ranks.insert(u.clone(), rank(u)?);
        }
        let rank = ranks[&Subspace::full(n)];
        Ok(QMatroid {
            field: field.clone(),
            n,
            ranks,
            order,
            rank,
        })
    }

    pub fn from_code(code: &RankMetricCode) -> Result<QMatroid> {
        Self::from_rank_fn(&code.base, code.length(), |u| rank_from_code(code, u))
    }

    /// Every subspace is independent.
    pub fn free(field: &Field, n: usize) -> Result<QMatroid> {
        Self::from_rank_fn(field, n, |u| Ok(u.dim()))
    }

    /// `ρ(U) = min(dim U, k)`.
    pub fn uniform(field: &Field, n: usize, k: usize) -> Result<QMatroid> {
        Self::from_rank_fn(field, n, |u| Ok(u.dim().min(k)))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// Rank of the whole space.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rank_of(&self, u: &Subspace) -> Result<usize> {
        if u.ambient_dim() != self.n {
            return Err(Error::AmbientMismatch);
        }
        Ok(self.ranks[u])
    }

    /// Checks the three rank axioms on the full table and reports the first
    /// violation found.
    pub fn verify_axioms(&self) -> AxiomReport {
        let f = &self.field;
        for u in &self.order {
            let r = self.ranks[u];
            if r > u.dim() {
                return AxiomReport::violated("R1", u, None);
            }
        }
        for u in &self.order {
            for v in &self.order {
                if v.dim() > u.dim() && v.contains_raw(f, u) && self.ranks[u] > self.ranks[v] {
                    return AxiomReport::violated("R2", u, Some(v));
                }
            }
        }
        for (a, u) in self.order.iter().enumerate() {
            for v in &self.order[a..] {
                let s = u.sum(f, v).expect("same ambient");
                let i = u.intersect(f, v).expect("same ambient");
                if self.ranks[&s] + self.ranks[&i] > self.ranks[u] + self.ranks[v] {
                    return AxiomReport::violated("R3", u, Some(v));
                }
            }
        }
        AxiomReport {
            ok: true,
            violation: None,
        }
    }

    /// Subspaces with `ρ(U) = dim U`.
    pub fn independent_spaces(&self) -> Vec<Subspace> {
        self.order
            .iter()
            .filter(|u| self.ranks[*u] == u.dim())
            .cloned()
            .collect()
    }

    /// Inclusion-maximal independent spaces. Fails with `NotPure` when they
    /// do not all have the same dimension.
    pub fn bases(&self) -> Result<Vec<Subspace>> {
        let f = &self.field;
        let indep = self.independent_spaces();
        let bases: Vec<Subspace> = indep
            .iter()
            .filter(|u| {
                !indep
                    .iter()
                    .any(|w| w.dim() == u.dim() + 1 && w.contains_raw(f, u))
            })
            .cloned()
            .collect();
        if bases.iter().any(|b| b.dim() != bases[0].dim()) {
            return Err(Error::NotPure);
        }
        Ok(bases)
    }

    /// The complex of independent spaces.
    pub fn matroid_complex(&self) -> Result<QComplex> {
        QComplex::from_facets(&self.field, self.n, self.bases()?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: &'static str,
    pub u: Subspace,
    pub v: Option<Subspace>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub ok: bool,
    pub violation: Option<AxiomViolation>,
}

impl AxiomReport {
    fn violated(axiom: &'static str, u: &Subspace, v: Option<&Subspace>) -> Self {
        AxiomReport {
            ok: false,
            violation: Some(AxiomViolation {
                axiom,
                u: u.clone(),
                v: v.cloned(),
            }),
        }
    }
}
