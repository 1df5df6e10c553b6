//! Order complexes of q-complexes, restriction sets, and the three ways of
//! counting the top Betti number that do not need linear algebra over ℤ.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};

use itertools::Itertools;
use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldVector};
use crate::qcomplex::{check_permutation, QComplex};
use crate::qorder::{avoids_min_vectors, cmp_l_raw, cmp_q_raw, complete_flags, Chain};
use crate::vecspace::{gaussian_binomial, Subspace};

/// Largest number of maximal chains an order complex may have.
pub const MAX_CHAINS: u64 = 200_000;
/// Largest total number of simplices enumerated from a facet list.
pub const MAX_SIMPLICES: u64 = 5_000_000;

/// An abstract simplicial complex on vertices `0..num_vertices`, given by its
/// facets. Each facet is a strictly increasing list of vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    num_vertices: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Sorts each facet and drops facets contained in another one. An empty
    /// facet list is the void complex; `[[]]` is the complex whose only face
    /// is the empty simplex.
    pub fn new(num_vertices: usize, facets: Vec<Vec<usize>>) -> Result<SimplicialComplex> {
        let mut sorted = Vec::with_capacity(facets.len());
        for mut f in facets {
            f.sort_unstable();
            if let Some(&v) = f.iter().find(|&&v| v >= num_vertices) {
                return Err(Error::BadIndex {
                    index: v,
                    len: num_vertices,
                });
            }
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::BadDimension(format!("facet {f:?} repeats a vertex")));
            }
            sorted.push(f);
        }
        let mut seen = HashSet::new();
        let unique: Vec<Vec<usize>> = sorted
            .into_iter()
            .filter(|f| seen.insert(f.clone()))
            .collect();
        let facets = unique
            .iter()
            .filter(|f| !unique.iter().any(|g| g.len() > f.len() && is_subset(f, g)))
            .cloned()
            .collect();
        Ok(SimplicialComplex {
            num_vertices,
            facets,
        })
    }

    pub(crate) fn from_sorted_facets(
        num_vertices: usize,
        facets: Vec<Vec<usize>>,
    ) -> SimplicialComplex {
        SimplicialComplex {
            num_vertices,
            facets,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Largest facet size minus one; `-1` for `{∅}` and for the void complex.
    pub fn dim(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.len() as isize)
            .max()
            .unwrap_or(0)
            - 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// All faces grouped by size (index `s` holds the `(s-1)`-simplices),
    /// each group sorted lexicographically. Includes the empty face unless
    /// the complex is void.
    pub fn simplices(&self) -> Result<Vec<Vec<Vec<usize>>>> {
        let total: u64 = self
            .facets
            .iter()
            .map(|f| 1u64.checked_shl(f.len() as u32).unwrap_or(u64::MAX))
            .fold(0u64, |a, b| a.saturating_add(b));
        if total > MAX_SIMPLICES {
            return Err(Error::TooLarge(format!(
                "about {total} simplices, limit is {MAX_SIMPLICES}"
            )));
        }
        let top = self.facets.iter().map(|f| f.len()).max();
        let Some(top) = top else {
            return Ok(Vec::new());
        };
        let mut levels: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); top + 1];
        for f in &self.facets {
            for mask in 0u64..(1u64 << f.len()) {
                let s: Vec<usize> = (0..f.len())
                    .filter(|&b| mask >> b & 1 == 1)
                    .map(|b| f[b])
                    .collect();
                levels[s.len()].insert(s);
            }
        }
        Ok(levels
            .into_iter()
            .map(|l| l.into_iter().collect())
            .collect())
    }

    /// Number of faces of each size, starting with the empty face.
    pub fn f_vector(&self) -> Result<Vec<usize>> {
        Ok(self.simplices()?.iter().map(|l| l.len()).collect())
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// The order complex of a q-complex together with the subspaces its vertex
/// ids stand for and the chain behind each facet.
#[derive(Clone, Debug)]
pub struct OrderComplex {
    pub vertices: Vec<Subspace>,
    pub complex: SimplicialComplex,
    /// Complete chains from `0`, one per facet of `complex`, in the same order.
    pub chains: Vec<Chain>,
    pub punctured: bool,
}

fn flag_count(field: &Field, d: usize) -> BigUint {
    (1..=d as u32)
        .map(|i| gaussian_binomial(i, 1, field.order()))
        .product()
}

/// Vertices are the faces of `c` ordered by dimension then `cmp_q` (the zero
/// space left out when `punctured`); facets are the maximal chains. For a
/// pure complex the chains come in `cmp_l` order, otherwise grouped by facet
/// of `c` in its given order.
pub fn order_complex(c: &QComplex, punctured: bool) -> Result<OrderComplex> {
    let f = c.field();
    let total: BigUint = c.facets().iter().map(|x| flag_count(f, x.dim())).sum();
    if total > BigUint::from(MAX_CHAINS) {
        return Err(Error::TooLarge(format!(
            "{total} maximal chains, limit is {MAX_CHAINS}"
        )));
    }
    let chains = if c.is_pure() {
        maximal_chains_sorted(c)?
    } else {
        let mut all = Vec::new();
        for top in c.facets() {
            all.extend(complete_flags(f, top)?);
        }
        all
    };
    let mut vertices = c.all_faces()?;
    if punctured {
        vertices.retain(|v| !v.is_zero());
    }
    let ids: HashMap<&Subspace, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let facets = chains
        .iter()
        .map(|ch| {
            ch.spaces()
                .iter()
                .filter(|u| !(punctured && u.is_zero()))
                .map(|u| ids[u])
                .collect()
        })
        .collect();
    let complex = SimplicialComplex::from_sorted_facets(vertices.len(), facets);
    Ok(OrderComplex {
        vertices,
        complex,
        chains,
        punctured,
    })
}

/// Every complete chain `0 ⊂ U_1 ⊂ ... ⊂ F` over all facets `F`, sorted
/// under `cmp_l`.
pub fn maximal_chains_sorted(c: &QComplex) -> Result<Vec<Chain>> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let f = c.field();
    let mut all = Vec::new();
    for top in c.facets() {
        all.extend(complete_flags(f, top)?);
    }
    all.sort_by(|a, b| cmp_l_raw(f, a, b));
    Ok(all)
}

/// Whether the `cmp_l` order on maximal chains is a shelling of the
/// punctured order complex.
pub fn chain_order_shells(c: &QComplex) -> Result<bool> {
    let oc = order_complex(c, true)?;
    let order: Vec<usize> = (0..oc.complex.facets.len()).collect();
    Ok(is_simplicial_shelling(&oc.complex, &order)?.is_shelling())
}

/// Largest ambient dimension for which coordinate orders are searched.
pub const MAX_PERMUTED_DIM: usize = 6;

/// The first coordinate permutation, in lexicographic order starting from
/// the identity, after which `c` is lexicographically shellable and the
/// `cmp_l` order shells its punctured order complex.
pub fn find_shelling_basis(c: &QComplex) -> Result<Option<Vec<usize>>> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let n = c.ambient_dim();
    if n > MAX_PERMUTED_DIM {
        return Err(Error::TooLarge(format!(
            "searching coordinate orders of F_q^{n}, limit is n = {MAX_PERMUTED_DIM}"
        )));
    }
    for perm in (0..n).permutations(n) {
        let image = c.permute_coordinates(&perm)?;
        if image.is_lex_shellable()?.is_shelling() && chain_order_shells(&image)? {
            return Ok(Some(perm));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialWitness {
    pub i: usize,
    pub j: usize,
    pub l: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialShellingCertificate {
    pub order: Vec<usize>,
    pub witnesses: Vec<SimplicialWitness>,
    pub violation: Option<(usize, usize)>,
}

impl SimplicialShellingCertificate {
    pub fn is_shelling(&self) -> bool {
        self.violation.is_none()
    }
}

/// Classical shelling check: for `i < j` some `l < j` has
/// `G_i ∩ G_j ⊆ G_l ∩ G_j` and `|G_l ∩ G_j| = |G_j| - 1`. Positions in the
/// certificate index `order`; the smallest `l` is recorded.
pub fn is_simplicial_shelling(
    k: &SimplicialComplex,
    order: &[usize],
) -> Result<SimplicialShellingCertificate> {
    if !k.is_pure() {
        return Err(Error::NotPure);
    }
    check_permutation(order, k.facets.len())?;
    let g: Vec<&Vec<usize>> = order.iter().map(|&i| &k.facets[i]).collect();
    let mut witnesses = Vec::new();
    for j in 1..g.len() {
        let r = g[j].len();
        // for codim-1 neighbours, the one vertex of G_j they miss
        let mut missing: Vec<(usize, usize)> = Vec::new();
        for (l, gl) in g.iter().enumerate().take(j) {
            if intersection_size(gl, g[j]) + 1 == r {
                let v = *g[j]
                    .iter()
                    .find(|v| gl.binary_search(v).is_err())
                    .expect("one vertex missing");
                missing.push((l, v));
            }
        }
        for i in 0..j {
            // G_i ∩ G_j ⊆ G_j \ {v} iff v ∉ G_i
            match missing.iter().find(|(_, v)| g[i].binary_search(v).is_err()) {
                Some(&(l, _)) => witnesses.push(SimplicialWitness { i, j, l }),
                None => {
                    return Ok(SimplicialShellingCertificate {
                        order: order.to_vec(),
                        witnesses,
                        violation: Some((i, j)),
                    })
                }
            }
        }
    }
    Ok(SimplicialShellingCertificate {
        order: order.to_vec(),
        witnesses,
        violation: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictionSet {
    pub chain: Vec<usize>,
    pub restriction: Vec<usize>,
}

impl RestrictionSet {
    pub fn is_full(&self) -> bool {
        self.chain.len() == self.restriction.len()
    }
}

/// Vertices `x` of facet `j` such that removing `x` leaves a face of some
/// earlier facet, with facets taken in the listed order.
pub fn restriction(k: &SimplicialComplex, j: usize) -> Result<RestrictionSet> {
    let facets = &k.facets;
    let gj = facets.get(j).ok_or(Error::BadIndex {
        index: j,
        len: facets.len(),
    })?;
    let mut restriction: Vec<usize> = gj
        .iter()
        .copied()
        .filter(|&x| {
            let rest: Vec<usize> = gj.iter().copied().filter(|&y| y != x).collect();
            facets[..j].iter().any(|gi| is_subset(&rest, gi))
        })
        .collect();
    restriction.sort_unstable();
    Ok(RestrictionSet {
        chain: gj.clone(),
        restriction,
    })
}

/// Number of maximal chains of the punctured order complex, in `cmp_l`
/// order, whose restriction is the whole chain.
pub fn count_homology_facets_oracle(c: &QComplex) -> Result<u64> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let oc = order_complex(c, true)?;
    let mut n = 0;
    for j in 0..oc.complex.facets.len() {
        if restriction(&oc.complex, j)?.is_full() {
            n += 1;
        }
    }
    Ok(n)
}

/// Counts complete chains `0 ⊂ U_1 ⊂ ... ⊂ U_r = F_j` whose hyperplane
/// `U_{r-1}` lies in an earlier facet and in which no `U_k` contains the
/// least nonzero vector of `U_{k+1}`. Facets are taken in `cmp_q` order.
pub fn count_homology_facets_characterized(c: &QComplex) -> Result<u64> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let sorted = c.lex_sorted();
    let f = sorted.field();
    let facets = sorted.facets();
    let mut n = 0;
    for (j, top) in facets.iter().enumerate() {
        if j == 0 {
            continue;
        }
        for chain in complete_flags(f, top)? {
            let s = chain.spaces();
            let hyper = &s[s.len() - 2];
            if facets[..j].iter().any(|g| g.contains_raw(f, hyper)) && avoids_min_vectors(&chain) {
                n += 1;
            }
        }
    }
    Ok(n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetContribution {
    /// 1-based position in the `cmp_q` order.
    pub j: usize,
    pub x_j: FieldVector,
    pub r_j: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiFormula {
    pub t: usize,
    pub s: usize,
    pub x: FieldVector,
    pub per_facet: Vec<FacetContribution>,
    pub interior_factor: u64,
    pub betti_rank: u64,
}

/// The closed-form rank of the top reduced homology of the punctured order
/// complex of a lexicographically shellable pure complex of dimension `k`:
/// `q^((k-1)(k-2)/2)` times the sum over facets `F_j` not containing the
/// global least vector `x` of the number of distinct `(k-1)`-spaces
/// `F_i ∩ F_j` (`i < j`) missing the least vector of `F_j`.
pub fn betti_formula(c: &QComplex) -> Result<BettiFormula> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let sorted = c.lex_sorted();
    let f = sorted.field();
    let facets = sorted.facets();
    let k = sorted.dim();
    let t = facets.len();
    if k == 0 {
        return Ok(BettiFormula {
            t,
            s: 0,
            x: FieldVector::zero(sorted.ambient_dim()),
            per_facet: Vec::new(),
            interior_factor: 1,
            betti_rank: 0,
        });
    }
    let x = facets
        .iter()
        .map(|g| g.min_nonzero_vector().expect("positive dimension"))
        .min_by(|a, b| f.vec_cmp_raw(a, b))
        .expect("at least one facet");
    let holds: Vec<bool> = facets.iter().map(|g| g.contains_vec_raw(f, &x)).collect();
    let s = holds.iter().take_while(|&&h| h).count();
    if let Some(bad) = holds.iter().skip(s).position(|&h| h) {
        return Err(Error::NotPrefix(s + bad + 1));
    }
    let mut per_facet = Vec::new();
    let mut sum = 0u64;
    for j in s..t {
        let x_j = facets[j].min_nonzero_vector().expect("positive dimension");
        let mut meets = HashSet::new();
        for fi in &facets[..j] {
            let m = fi.intersect(f, &facets[j]).expect("same ambient");
            if m.dim() + 1 == k && !m.contains_vec_raw(f, &x_j) {
                meets.insert(m);
            }
        }
        let r_j = meets.len() as u64;
        sum += r_j;
        per_facet.push(FacetContribution { j: j + 1, x_j, r_j });
    }
    let exp = if k >= 2 { (k - 1) * (k - 2) / 2 } else { 0 };
    let interior_factor = (f.order() as u64)
        .checked_pow(exp as u32)
        .ok_or_else(|| Error::TooLarge("interior factor overflows u64".into()))?;
    let betti_rank = interior_factor
        .checked_mul(sum)
        .ok_or_else(|| Error::TooLarge("Betti rank overflows u64".into()))?;
    Ok(BettiFormula {
        t,
        s,
        x,
        per_facet,
        interior_factor,
        betti_rank,
    })
}

/// Four faces of a matroid complex whose induced subposet has maximal
/// chains of different lengths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonMatroidWitness {
    pub f1: Subspace,
    pub f2: Subspace,
    pub x1: FieldVector,
    pub x2: FieldVector,
    pub vertices: Vec<Subspace>,
    pub maximal_chains: Vec<Vec<Subspace>>,
}

impl NonMatroidWitness {
    pub fn chain_lengths(&self) -> Vec<usize> {
        self.maximal_chains.iter().map(|c| c.len()).collect()
    }

    pub fn is_impure(&self) -> bool {
        let l = self.chain_lengths();
        l.iter().any(|&a| a != l[0])
    }
}

/// Takes the first two facets `F_1, F_2` in `cmp_q` order, the least
/// vectors `x_1 ∈ F_1 \ F_2` and `x_2 ∈ F_2 \ F_1`, and the least plane
/// `F` with `<x_1> ⊂ F ⊆ F_1`; the poset `{0, <x_1>, <x_2>, F}` then has
/// maximal chains of lengths 3 and 2. Needs dimension at least 2 and two
/// facets.
pub fn non_matroid_witness(c: &QComplex) -> Option<NonMatroidWitness> {
    if c.dim() < 2 || c.facets().len() < 2 {
        return None;
    }
    let sorted = c.lex_sorted();
    let f = sorted.field();
    let n = sorted.ambient_dim();
    let (f1, f2) = (&sorted.facets()[0], &sorted.facets()[1]);
    let x1 = f1.min_vector_of_difference_raw(f, f2)?;
    let x2 = f2.min_vector_of_difference_raw(f, f1)?;
    let l1 = Subspace::span(f, std::slice::from_ref(&x1), n).ok()?;
    let l2 = Subspace::span(f, std::slice::from_ref(&x2), n).ok()?;
    let plane = if f1.dim() == 2 {
        f1.clone()
    } else {
        crate::qorder::min_between(f, &l1, f1).ok()?
    };
    let vertices = vec![Subspace::zero(n), l1, l2, plane];
    let maximal_chains = maximal_chains_of(f, &vertices);
    Some(NonMatroidWitness {
        f1: f1.clone(),
        f2: f2.clone(),
        x1,
        x2,
        vertices,
        maximal_chains,
    })
}

/// Maximal chains under inclusion of a small family of subspaces, each
/// listed bottom-up.
fn maximal_chains_of(field: &Field, family: &[Subspace]) -> Vec<Vec<Subspace>> {
    let mut idx: Vec<usize> = (0..family.len()).collect();
    idx.sort_by(|&a, &b| {
        family[a]
            .dim()
            .cmp(&family[b].dim())
            .then_with(|| cmp_q_raw(field, &family[a], &family[b]))
    });
    let below = |a: usize, b: usize| {
        family[a].dim() < family[b].dim() && family[b].contains_raw(field, &family[a])
    };
    let mut chains: Vec<Vec<usize>> = Vec::new();
    for &start in &idx {
        if idx.iter().any(|&a| below(a, start)) {
            continue;
        }
        let mut stack = vec![vec![start]];
        while let Some(ch) = stack.pop() {
            let last = *ch.last().expect("nonempty");
            // covers of `last` inside the family
            let ups: Vec<usize> = idx
                .iter()
                .copied()
                .filter(|&b| below(last, b) && !idx.iter().any(|&m| below(last, m) && below(m, b)))
                .collect();
            if ups.is_empty() {
                chains.push(ch);
            } else {
                for &b in ups.iter().rev() {
                    let mut next = ch.clone();
                    next.push(b);
                    stack.push(next);
                }
            }
        }
    }
    chains
        .into_iter()
        .map(|c| c.into_iter().map(|i| family[i].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qorder::greedy_min_refinement;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn simplicial_basics() {
        let k = SimplicialComplex::new(4, vec![vec![2, 0, 1], vec![0, 1], vec![3]]).unwrap();
        assert_eq!(k.facets(), &[vec![0, 1, 2], vec![3]]);
        assert_eq!(k.dim(), 2);
        assert!(!k.is_pure());
        assert_eq!(k.f_vector().unwrap(), vec![1, 4, 3, 1]);
        assert!(SimplicialComplex::new(2, vec![vec![0, 2]]).is_err());
        assert!(SimplicialComplex::new(2, vec![vec![1, 1]]).is_err());
        let empty = SimplicialComplex::new(0, vec![vec![]]).unwrap();
        assert_eq!(empty.dim(), -1);
        assert_eq!(empty.f_vector().unwrap(), vec![1]);
        assert_eq!(
            SimplicialComplex::new(0, vec![])
                .unwrap()
                .f_vector()
                .unwrap(),
            Vec::<usize>::new()
        );
    }

    #[test]
    fn order_complex_sizes() {
        let f = f2();
        let lines = QComplex::uniform(&f, 2, 1).unwrap();
        let oc = order_complex(&lines, true).unwrap();
        assert_eq!(oc.vertices.len(), 3);
        assert_eq!(oc.complex.facets(), &[vec![0], vec![1], vec![2]]);
        let full = order_complex(&lines, false).unwrap();
        assert_eq!(full.vertices.len(), 4);
        assert!(full
            .complex
            .facets()
            .iter()
            .all(|c| c.len() == 2 && c[0] == 0));
        let planes = QComplex::uniform(&f, 4, 3).unwrap();
        let oc = order_complex(&planes, true).unwrap();
        assert_eq!(oc.vertices.len(), 15 + 35 + 15);
        assert_eq!(oc.complex.facets().len(), 15 * 21);
        assert!(oc.complex.facets().iter().all(|c| c.len() == 3));
    }

    #[test]
    fn sorted_chains_of_the_circle() {
        let f = f2();
        let c = QComplex::standard_sphere(&f, 1).unwrap();
        let chains = maximal_chains_sorted(&c).unwrap();
        let lines: Vec<Vec<u32>> = chains
            .iter()
            .map(|ch| ch.spaces()[1].basis()[0].reps())
            .collect();
        assert_eq!(lines, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        let one = QComplex::from_facets(&f, 2, vec![Subspace::full(2)]).unwrap();
        assert_eq!(maximal_chains_sorted(&one).unwrap().len(), 3);
    }

    #[test]
    fn first_chain_is_greedy() {
        let f = f2();
        let c = QComplex::uniform(&f, 3, 2).unwrap();
        let chains = maximal_chains_sorted(&c).unwrap();
        let f1 = &c.lex_sorted().facets()[0].clone();
        assert_eq!(
            chains[0],
            greedy_min_refinement(&f, &Subspace::zero(3), f1).unwrap()
        );
    }

    #[test]
    fn restriction_examples() {
        let f = f2();
        let c = QComplex::standard_sphere(&f, 1).unwrap();
        let oc = order_complex(&c, true).unwrap();
        assert!(restriction(&oc.complex, 0).unwrap().restriction.is_empty());
        assert!(restriction(&oc.complex, 1).unwrap().is_full());
        assert!(restriction(&oc.complex, 2).unwrap().is_full());
        assert!(matches!(
            restriction(&oc.complex, 3),
            Err(Error::BadIndex { .. })
        ));
    }

    #[test]
    fn three_counts_agree_on_small_cases() {
        for (q, max_n) in [(2u32, 4usize), (3, 3)] {
            let f = Field::prime(q).unwrap();
            for n in 1..=max_n {
                for k in 1..=n {
                    let c = QComplex::uniform(&f, n, k).unwrap();
                    let oracle = count_homology_facets_oracle(&c).unwrap();
                    let chr = count_homology_facets_characterized(&c).unwrap();
                    let formula = betti_formula(&c).unwrap().betti_rank;
                    let qk = (q as u64).pow((k * (k + 1) / 2) as u32);
                    let closed =
                        qk * crate::vecspace::gaussian_binomial_u64(n as u32 - 1, k as u32, q);
                    assert_eq!(
                        (oracle, chr, formula),
                        (closed, closed, closed),
                        "q={q} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn sphere_counts() {
        let f = f2();
        let s2 = QComplex::standard_sphere(&f, 2).unwrap();
        assert_eq!(count_homology_facets_oracle(&s2).unwrap(), 8);
        let b = betti_formula(&s2).unwrap();
        assert_eq!(b.interior_factor, 1);
        assert_eq!(b.betti_rank, 8);
        assert_eq!(
            count_homology_facets_oracle(&QComplex::uniform(&f, 2, 1).unwrap()).unwrap(),
            2
        );
    }

    #[test]
    fn order_complex_shelling() {
        let f = f2();
        for c in [
            QComplex::standard_sphere(&f, 2).unwrap(),
            QComplex::uniform(&f, 4, 2).unwrap(),
            QComplex::uniform(&f, 4, 3).unwrap(),
        ] {
            let oc = order_complex(&c, true).unwrap();
            let order: Vec<usize> = (0..oc.complex.facets().len()).collect();
            assert!(is_simplicial_shelling(&oc.complex, &order)
                .unwrap()
                .is_shelling());
        }
    }

    #[test]
    fn simplicial_non_shelling() {
        // two triangles sharing only a vertex
        let k = SimplicialComplex::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let cert = is_simplicial_shelling(&k, &[0, 1]).unwrap();
        assert_eq!(cert.violation, Some((0, 1)));
        let one = SimplicialComplex::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(is_simplicial_shelling(&one, &[0]).unwrap().is_shelling());
        let mixed = SimplicialComplex::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        assert_eq!(
            is_simplicial_shelling(&mixed, &[0, 1]).unwrap_err(),
            Error::NotPure
        );
    }

    #[test]
    fn non_matroid_witness_cases() {
        let f = f2();
        assert!(non_matroid_witness(&QComplex::uniform(&f, 3, 1).unwrap()).is_none());
        assert!(non_matroid_witness(
            &QComplex::from_facets(&f, 3, vec![Subspace::full(3)]).unwrap()
        )
        .is_none());
        let w = non_matroid_witness(&QComplex::uniform(&f, 3, 2).unwrap()).unwrap();
        let mut lengths = w.chain_lengths();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![2, 3]);
        assert!(w.is_impure());
    }

    #[test]
    fn facets_through_the_least_vector_come_first() {
        let f = f2();
        let c = QComplex::uniform(&f, 3, 2).unwrap();
        let b = betti_formula(&c).unwrap();
        assert_eq!(b.s, 3);
        assert_eq!(b.x.reps(), vec![0, 0, 1]);
        assert_eq!(b.per_facet.len(), 4);
    }
}
