//! q-complexes presented by their facets, and the two shellability checks.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement, FieldVector};
use crate::qorder::cmp_q_raw;
use crate::vecspace::{enumerate_grassmannian, Subspace};

/// A q-complex on `F_q^n`: every subspace of a facet is a face.
#[derive(Clone, Debug)]
pub struct QComplex {
    field: Field,
    n: usize,
    facets: Vec<Subspace>,
    dim: usize,
    pure: bool,
}

impl QComplex {
    /// Builds the complex generated by `facets`. Duplicates and facets
    /// contained in another facet are dropped; the first occurrence order of
    /// the survivors is kept.
    pub fn from_facets(field: &Field, n: usize, facets: Vec<Subspace>) -> Result<QComplex> {
        if facets.is_empty() {
            return Err(Error::Empty);
        }
        if facets.iter().any(|f| f.ambient_dim() != n) {
            return Err(Error::AmbientMismatch);
        }
        let mut seen = HashSet::new();
        let unique: Vec<Subspace> = facets
            .into_iter()
            .filter(|f| seen.insert(f.clone()))
            .collect();
        let kept: Vec<Subspace> = unique
            .iter()
            .filter(|f| {
                !unique
                    .iter()
                    .any(|g| g.dim() > f.dim() && g.contains_raw(field, f))
            })
            .cloned()
            .collect();
        let dim = kept.iter().map(|f| f.dim()).max().unwrap_or(0);
        let pure = kept.iter().all(|f| f.dim() == dim);
        Ok(QComplex {
            field: field.clone(),
            n,
            facets: kept,
            dim,
            pure,
        })
    }

    /// The uniform complex: all `k`-dimensional subspaces of `F_q^n`.
    pub fn uniform(field: &Field, n: usize, k: usize) -> Result<QComplex> {
        if k == 0 || k > n {
            return Err(Error::BadDimension(format!(
                "uniform complex needs 0 < k <= n, got k = {k}, n = {n}"
            )));
        }
        Self::from_facets(field, n, enumerate_grassmannian(field, n, k)?)
    }

    /// The q-sphere: all hyperplanes of `top`.
    pub fn q_sphere(field: &Field, top: &Subspace) -> Result<QComplex> {
        if top.dim() == 0 {
            return Err(Error::BadDimension(
                "q-sphere needs a top space of dimension >= 1".into(),
            ));
        }
        Self::from_facets(
            field,
            top.ambient_dim(),
            top.subspaces(field, top.dim() - 1)?,
        )
    }

    /// `S_q^r` inside `F_q^{r+1}`.
    pub fn standard_sphere(field: &Field, r: usize) -> Result<QComplex> {
        Self::q_sphere(field, &Subspace::full(r + 1))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Subspace] {
        &self.facets
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_pure(&self) -> bool {
        self.pure
    }

    pub fn is_face(&self, u: &Subspace) -> bool {
        u.ambient_dim() == self.n && self.facets.iter().any(|f| f.contains_raw(&self.field, u))
    }

    /// Facet indices sorted ascending under `cmp_q`.
    pub fn lex_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.facets.len()).collect();
        idx.sort_by(|&a, &b| {
            let (fa, fb) = (&self.facets[a], &self.facets[b]);
            fa.dim()
                .cmp(&fb.dim())
                .then_with(|| cmp_q_raw(&self.field, fa, fb))
        });
        idx
    }

    /// The same complex with its facets listed in `cmp_q` order.
    pub fn lex_sorted(&self) -> QComplex {
        let facets = self
            .lex_order()
            .into_iter()
            .map(|i| self.facets[i].clone())
            .collect();
        QComplex {
            facets,
            ..self.clone()
        }
    }

    /// The image under the coordinate permutation sending coordinate `i` to
    /// `perm[i]`. Facets keep their order.
    pub fn permute_coordinates(&self, perm: &[usize]) -> Result<QComplex> {
        check_permutation(perm, self.n)?;
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let rows: Vec<FieldVector> = f
                    .basis()
                    .iter()
                    .map(|v| {
                        let mut w = vec![FieldElement::ZERO; self.n];
                        for (i, &c) in v.coords().iter().enumerate() {
                            w[perm[i]] = c;
                        }
                        FieldVector::new(w)
                    })
                    .collect();
                Subspace::span(&self.field, &rows, self.n)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_facets(&self.field, self.n, facets)
    }

    /// The subcomplex generated by the facets at `indices`.
    pub fn subcomplex(&self, indices: &[usize]) -> Result<QComplex> {
        let facets = indices
            .iter()
            .map(|&i| {
                self.facets.get(i).cloned().ok_or(Error::BadIndex {
                    index: i,
                    len: self.facets.len(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_facets(&self.field, self.n, facets)
    }

    /// Faces of dimension `k`, sorted under `cmp_q`.
    pub fn faces(&self, k: usize) -> Result<Vec<Subspace>> {
        if k > self.dim {
            return Err(Error::BadDimension(format!(
                "k = {k} exceeds dim = {}",
                self.dim
            )));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for f in self.facets.iter().filter(|f| f.dim() >= k) {
            for s in f.subspaces(&self.field, k)? {
                if seen.insert(s.clone()) {
                    out.push(s);
                }
            }
        }
        out.sort_by(|a, b| cmp_q_raw(&self.field, a, b));
        Ok(out)
    }

    /// All faces, by dimension then `cmp_q`.
    pub fn all_faces(&self) -> Result<Vec<Subspace>> {
        let mut out = Vec::new();
        for k in 0..=self.dim {
            out.extend(self.faces(k)?);
        }
        Ok(out)
    }

    /// Checks whether the facets listed in `order` form a shelling: for all
    /// `i < j` there is `k < j` with `F_i ∩ F_j ⊆ F_k ∩ F_j` and
    /// `dim F_k ∩ F_j = r - 1`. Positions in the certificate refer to
    /// `order`, 0-based; the smallest witness `k` is recorded.
    pub fn is_shelling(&self, order: &[usize]) -> Result<ShellingCertificate> {
        if !self.pure {
            return Err(Error::NotPure);
        }
        check_permutation(order, self.facets.len())?;
        let r = self.dim;
        let ordered: Vec<&Subspace> = order.iter().map(|&i| &self.facets[i]).collect();
        let mut witnesses = Vec::new();
        let mut violation = None;
        'outer: for j in 1..ordered.len() {
            let meets: Vec<Subspace> = (0..j)
                .map(|a| {
                    ordered[a]
                        .intersect(&self.field, ordered[j])
                        .expect("same ambient")
                })
                .collect();
            let codim1: Vec<usize> = (0..j).filter(|&a| meets[a].dim() + 1 == r).collect();
            for i in 0..j {
                match codim1
                    .iter()
                    .find(|&&k| meets[k].contains_raw(&self.field, &meets[i]))
                {
                    Some(&k) => witnesses.push(Witness { i, j, k }),
                    None => {
                        violation = Some((i, j));
                        break 'outer;
                    }
                }
            }
        }
        Ok(ShellingCertificate {
            order: order.to_vec(),
            witnesses,
            violation,
            pure: self.pure,
            dim: r,
        })
    }

    /// Sorts the facets under `cmp_q` and checks that order.
    pub fn is_lex_shellable(&self) -> Result<ShellingCertificate> {
        self.is_shelling(&self.lex_order())
    }
}

pub(crate) fn check_permutation(order: &[usize], len: usize) -> Result<()> {
    if order.len() != len {
        return Err(Error::BadIndex {
            index: order.len(),
            len,
        });
    }
    let mut seen = vec![false; len];
    for &i in order {
        if i >= len || seen[i] {
            return Err(Error::BadIndex { index: i, len });
        }
        seen[i] = true;
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// Outcome of a shelling check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShellingCertificate {
    pub order: Vec<usize>,
    pub witnesses: Vec<Witness>,
    /// First failing pair `(i, j)`, if any.
    pub violation: Option<(usize, usize)>,
    pub pure: bool,
    pub dim: usize,
}

impl ShellingCertificate {
    pub fn is_shelling(&self) -> bool {
        self.violation.is_none()
    }
}
