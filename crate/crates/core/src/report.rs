//! Serializable summaries of the checks, shared by the CLI and the C ABI.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::FieldVector;
use crate::homology::{qcomplex_homology, HomologyReport};
use crate::ordercx::{
    betti_formula, chain_order_shells, count_homology_facets_characterized,
    count_homology_facets_oracle, find_shelling_basis, is_simplicial_shelling, order_complex,
    BettiFormula, FacetContribution,
};
use crate::qcomplex::{QComplex, ShellingCertificate};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexSummary {
    pub field: String,
    pub n: usize,
    pub dim: usize,
    pub facets: usize,
    pub pure: bool,
}

impl From<&QComplex> for ComplexSummary {
    fn from(c: &QComplex) -> Self {
        ComplexSummary {
            field: c.field().to_string(),
            n: c.ambient_dim(),
            dim: c.dim(),
            facets: c.facets().len(),
            pure: c.is_pure(),
        }
    }
}

/// The complex in a coordinate order where the counting methods apply:
/// lexicographically shellable, with `cmp_l` shelling the punctured order
/// complex. The permutation is `None` when the given order already works.
pub fn counting_basis(c: &QComplex) -> Result<(QComplex, Option<Vec<usize>>)> {
    if !c.is_pure() {
        return Err(Error::MethodUnavailable(
            "counting needs a pure complex".into(),
        ));
    }
    if c.is_lex_shellable()?.is_shelling() && chain_order_shells(c)? {
        return Ok((c.clone(), None));
    }
    match find_shelling_basis(c)? {
        Some(perm) => {
            let image = c.permute_coordinates(&perm)?.lex_sorted();
            Ok((image, Some(perm)))
        }
        None => Err(Error::MethodUnavailable(
            "no coordinate order makes the chain order a shelling".into(),
        )),
    }
}

/// The top Betti number counted three ways without homology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub complex: ComplexSummary,
    /// Coordinate `i` was sent to `basis_permutation[i]` before counting.
    pub basis_permutation: Option<Vec<usize>>,
    pub t: usize,
    pub s: usize,
    pub x: FieldVector,
    pub per_facet: Vec<FacetContribution>,
    pub interior_factor: u64,
    pub betti_rank: u64,
    pub oracle_count: u64,
    pub characterized_count: u64,
    pub agree: bool,
}

pub fn count_report(c: &QComplex) -> Result<CountReport> {
    let summary = c.into();
    let (c, basis_permutation) = counting_basis(c)?;
    let c = &c;
    let BettiFormula {
        t,
        s,
        x,
        per_facet,
        interior_factor,
        betti_rank,
    } = betti_formula(c)?;
    let oracle_count = count_homology_facets_oracle(c)?;
    let characterized_count = count_homology_facets_characterized(c)?;
    Ok(CountReport {
        complex: summary,
        basis_permutation,
        t,
        s,
        x,
        per_facet,
        interior_factor,
        betti_rank,
        oracle_count,
        characterized_count,
        agree: betti_rank == oracle_count && oracle_count == characterized_count,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderComplexSummary {
    pub punctured: bool,
    pub vertices: usize,
    pub maximal_chains: usize,
    pub dim: isize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialShellingSummary {
    pub is_shelling: bool,
    pub witnesses: usize,
    pub violation: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub complex: ComplexSummary,
    pub lex_shelling: ShellingCertificate,
    pub order_complex: OrderComplexSummary,
    /// The `cmp_l` order on the punctured order complex.
    pub chain_shelling: SimplicialShellingSummary,
    pub passed: bool,
}

/// Lexicographic shelling of the facets, then the `cmp_l` shelling of the
/// punctured order complex.
pub fn check_report(c: &QComplex) -> Result<CheckReport> {
    let lex = c.is_lex_shellable()?;
    let oc = order_complex(c, true)?;
    let order: Vec<usize> = (0..oc.complex.facets().len()).collect();
    let cert = is_simplicial_shelling(&oc.complex, &order)?;
    let chain_shelling = SimplicialShellingSummary {
        is_shelling: cert.is_shelling(),
        witnesses: cert.witnesses.len(),
        violation: cert.violation,
    };
    Ok(CheckReport {
        complex: c.into(),
        passed: lex.is_shelling() && chain_shelling.is_shelling,
        lex_shelling: lex,
        order_complex: OrderComplexSummary {
            punctured: true,
            vertices: oc.vertices.len(),
            maximal_chains: oc.complex.facets().len(),
            dim: oc.complex.dim(),
        },
        chain_shelling,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Count,
    Snf,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyOutcome {
    pub complex: ComplexSummary,
    pub method: Method,
    /// Degree `dim - 1`, where the homology of a shellable complex lives.
    pub top_degree: i64,
    /// Set when the counting methods ran in permuted coordinates.
    pub basis_permutation: Option<Vec<usize>>,
    pub formula: Option<u64>,
    pub oracle_count: Option<u64>,
    pub characterized_count: Option<u64>,
    pub snf: Option<HomologyReport>,
    pub rank: u64,
    pub agree: bool,
}

/// Rank of the reduced homology of the punctured order complex in degree
/// `dim - 1` by the requested method(s). The counting methods run in
/// [`counting_basis`].
pub fn homology_outcome(c: &QComplex, method: Method) -> Result<HomologyOutcome> {
    let top_degree = c.dim() as i64 - 1;
    let wants_counts = matches!(method, Method::Formula | Method::Count | Method::All);
    let (counted, basis_permutation) = if wants_counts {
        counting_basis(c)?
    } else {
        (c.clone(), None)
    };
    let formula = match method {
        Method::Formula | Method::All => Some(betti_formula(&counted)?.betti_rank),
        _ => None,
    };
    let (oracle_count, characterized_count) = match method {
        Method::Count | Method::All => (
            Some(count_homology_facets_oracle(&counted)?),
            Some(count_homology_facets_characterized(&counted)?),
        ),
        _ => (None, None),
    };
    let snf = match method {
        Method::Snf | Method::All => Some(qcomplex_homology(c)?),
        _ => None,
    };
    let mut values: Vec<u64> = [formula, oracle_count, characterized_count]
        .into_iter()
        .flatten()
        .collect();
    if let Some(h) = &snf {
        values.push(h.rank_at(top_degree));
    }
    let rank = values[0];
    let mut agree = values.iter().all(|&v| v == rank);
    if let Some(h) = &snf {
        if wants_counts {
            agree &= h.torsion_free() && h.degrees.iter().all(|g| g.p == top_degree || g.is_zero());
        }
    }
    Ok(HomologyOutcome {
        complex: c.into(),
        method,
        top_degree,
        basis_permutation,
        formula,
        oracle_count,
        characterized_count,
        snf,
        rank,
        agree,
    })
}
