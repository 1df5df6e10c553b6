//! Orders on subspaces and on complete chains of subspaces.
//!
//! Two subspaces of equal dimension are compared by the smallest vector each
//! has outside the other. Complete chains with the same dimension profile
//! are compared at the largest position where they differ.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldVector};
use crate::vecspace::{enumerate_between, Subspace};

/// `u` before `v` iff `min(u \ v) < min(v \ u)`.
pub fn cmp_q(field: &Field, u: &Subspace, v: &Subspace) -> Result<Ordering> {
    if u.ambient_dim() != v.ambient_dim() {
        return Err(Error::AmbientMismatch);
    }
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            got: v.dim(),
        });
    }
    Ok(cmp_q_raw(field, u, v))
}

pub(crate) fn cmp_q_raw(field: &Field, u: &Subspace, v: &Subspace) -> Ordering {
    if u == v {
        return Ordering::Equal;
    }
    let a = u
        .min_vector_of_difference_raw(field, v)
        .expect("distinct equidimensional subspaces");
    let b = v
        .min_vector_of_difference_raw(field, u)
        .expect("distinct equidimensional subspaces");
    field.vec_cmp_raw(&a, &b)
}

/// Sorts equidimensional subspaces ascending under [`cmp_q`].
pub fn sort_q(field: &Field, spaces: &mut [Subspace]) {
    spaces.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| cmp_q_raw(field, a, b)));
}

/// A strictly increasing sequence of subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Chain {
    spaces: Vec<Subspace>,
}

impl Chain {
    pub fn new(field: &Field, spaces: Vec<Subspace>) -> Result<Chain> {
        for w in spaces.windows(2) {
            if w[0].ambient_dim() != w[1].ambient_dim() {
                return Err(Error::AmbientMismatch);
            }
            if w[0].dim() >= w[1].dim() || !w[1].contains_raw(field, &w[0]) {
                return Err(Error::NotAChain(format!(
                    "{} is not strictly inside {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(Chain { spaces })
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    pub fn into_spaces(self) -> Vec<Subspace> {
        self.spaces
    }

    pub fn len(&self) -> usize {
        self.spaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty()
    }

    pub fn top(&self) -> Option<&Subspace> {
        self.spaces.last()
    }

    /// Consecutive dimensions differ by exactly one.
    pub fn is_complete(&self) -> bool {
        self.spaces.windows(2).all(|w| w[1].dim() == w[0].dim() + 1)
    }

    pub fn profile(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.dim()).collect()
    }

    /// Number of positions holding the same subspace.
    pub fn overlap(&self, other: &Chain) -> usize {
        self.spaces
            .iter()
            .filter(|s| other.spaces.contains(s))
            .count()
    }
}

/// Compares complete chains of the same profile at the largest index where
/// they differ.
pub fn cmp_l(field: &Field, a: &Chain, b: &Chain) -> Result<Ordering> {
    if !a.is_complete() || !b.is_complete() || a.profile() != b.profile() {
        return Err(Error::ProfileMismatch);
    }
    Ok(cmp_l_raw(field, a, b))
}

pub(crate) fn cmp_l_raw(field: &Field, a: &Chain, b: &Chain) -> Ordering {
    for (u, v) in a.spaces.iter().zip(&b.spaces).rev() {
        if u != v {
            return cmp_q_raw(field, u, v);
        }
    }
    Ordering::Equal
}

/// The chain with position `i` replaced by `a`.
pub fn replace_at(field: &Field, chain: &Chain, a: &Subspace, i: usize) -> Result<Chain> {
    let len = chain.len();
    if i == 0 || i + 1 >= len {
        return Err(Error::BadIndex { index: i, len });
    }
    if !chain.is_complete() {
        return Err(Error::ProfileMismatch);
    }
    let below = &chain.spaces[i - 1];
    let above = &chain.spaces[i + 1];
    if a.ambient_dim() != below.ambient_dim() {
        return Err(Error::AmbientMismatch);
    }
    if a.dim() != chain.spaces[i].dim()
        || !a.contains_raw(field, below)
        || !above.contains_raw(field, a)
    {
        return Err(Error::NotBetween);
    }
    let mut spaces = chain.spaces.clone();
    spaces[i] = a.clone();
    Ok(Chain { spaces })
}

/// The complete chain from `bottom` to `top` that adjoins, at each step,
/// the smallest vector of `top` outside the current space. Also returns the
/// adjoined vectors in order.
pub fn greedy_min_refinement_with_minima(
    field: &Field,
    bottom: &Subspace,
    top: &Subspace,
) -> Result<(Chain, Vec<FieldVector>)> {
    if bottom.ambient_dim() != top.ambient_dim() {
        return Err(Error::AmbientMismatch);
    }
    if !top.contains_raw(field, bottom) {
        return Err(Error::NotNested);
    }
    let n = top.ambient_dim();
    let mut spaces = vec![bottom.clone()];
    let mut minima = Vec::new();
    let mut cur = bottom.clone();
    while cur.dim() < top.dim() {
        let m = top
            .min_vector_of_difference_raw(field, &cur)
            .expect("cur is a proper subspace of top");
        let mut rows = cur.basis().to_vec();
        rows.push(m.clone());
        cur = Subspace::span(field, &rows, n)?;
        spaces.push(cur.clone());
        minima.push(m);
    }
    Ok((Chain { spaces }, minima))
}

pub fn greedy_min_refinement(field: &Field, bottom: &Subspace, top: &Subspace) -> Result<Chain> {
    greedy_min_refinement_with_minima(field, bottom, top).map(|(c, _)| c)
}

/// The `cmp_q`-least subspace strictly between `below` and `above` of
/// dimension `dim below + 1`, by full enumeration.
pub fn min_between(field: &Field, below: &Subspace, above: &Subspace) -> Result<Subspace> {
    let k = below.dim() + 1;
    if above.dim() <= k {
        return Err(Error::BadDimension(format!(
            "need dim above > {k}, got {}",
            above.dim()
        )));
    }
    enumerate_between(field, below, above, k)?
        .into_iter()
        .min_by(|a, b| cmp_q_raw(field, a, b))
        .ok_or(Error::NotNested)
}

fn check_interior(chain: &Chain, i: usize) -> Result<()> {
    if i == 0 || i + 1 >= chain.len() {
        return Err(Error::BadIndex {
            index: i,
            len: chain.len(),
        });
    }
    if !chain.is_complete() {
        return Err(Error::ProfileMismatch);
    }
    Ok(())
}

/// Whether position `i` holds the `cmp_q`-least subspace between its
/// neighbours, decided by enumerating every candidate.
pub fn is_locally_min_by_enumeration(field: &Field, chain: &Chain, i: usize) -> Result<bool> {
    check_interior(chain, i)?;
    let m = min_between(field, &chain.spaces[i - 1], &chain.spaces[i + 1])?;
    Ok(m == chain.spaces[i])
}

/// Same question through the shortcut: the least space between `U_{i-1}`
/// and `U_{i+1}` is `U_{i-1} + <min(U_{i+1} \ U_{i-1})>`, so `U_i` is
/// locally minimal iff it contains that vector.
pub fn is_locally_min(field: &Field, chain: &Chain, i: usize) -> Result<bool> {
    check_interior(chain, i)?;
    let m = chain.spaces[i + 1]
        .min_vector_of_difference_raw(field, &chain.spaces[i - 1])
        .expect("U_{i-1} is a proper subspace of U_{i+1}");
    Ok(chain.spaces[i].contains_vec_raw(field, &m))
}

/// No interior space `U_k` (`k = 1..r-1`) contains the least nonzero vector
/// of `U_{k+1}`. For a complete chain starting at `0` this holds exactly
/// when no interior position is locally minimal.
pub fn avoids_min_vectors(chain: &Chain) -> bool {
    let s = &chain.spaces;
    (1..s.len().saturating_sub(1)).all(|k| {
        let m = s[k + 1].min_nonzero_vector().expect("nonzero space");
        // m is least in U_{k+1}, so m ∈ U_k iff m is also least in U_k
        s[k].min_nonzero_vector().as_ref() != Some(&m)
    })
}

/// All complete chains `0 = U_0 ⊂ U_1 ⊂ ... ⊂ U_d = top`.
pub fn complete_flags(field: &Field, top: &Subspace) -> Result<Vec<Chain>> {
    let n = top.ambient_dim();
    let mut partial: Vec<Vec<Subspace>> = vec![vec![top.clone()]];
    for d in (0..top.dim()).rev() {
        let mut next = Vec::new();
        for p in partial {
            let cur = p.last().expect("nonempty");
            let below = if d == 0 {
                vec![Subspace::zero(n)]
            } else {
                cur.subspaces(field, d)?
            };
            for b in below {
                let mut q = p.clone();
                q.push(b);
                next.push(q);
            }
        }
        partial = next;
    }
    Ok(partial
        .into_iter()
        .map(|mut p| {
            p.reverse();
            Chain { spaces: p }
        })
        .collect())
}
