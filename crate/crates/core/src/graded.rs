//! Splitting the computation by homogeneity for graded algebras.
//!
//! With integer weights on `g` and `V`, the basis cochain with arguments
//! `z_{i_1}, …, z_{i_k}` and target `v_l` has homogeneity
//! `weight(v_l) - Σ weight(z_{i_j})`. The differential preserves it, so each
//! homogeneity is an independent, much smaller problem.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::cochain::{CochainComplex, CochainIndex, SymbolicCochain};
use crate::cohomology::{solve_block, CohomologyError, CohomologyResult, Dims};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("graded mode needs {0}")]
    NotGraded(&'static str),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

/// Basis cochains of one homogeneity, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneityIndex {
    pub h: i64,
    pub members: Vec<CochainIndex>,
}

struct Weights<'a> {
    g: &'a [i64],
    v: &'a [i64],
}

fn weights(cx: &CochainComplex) -> Result<Weights<'_>, GradedError> {
    if cx.algebra().is_super() {
        return Err(GradedError::NotGraded("an algebra without odd elements"));
    }
    let g = cx
        .algebra()
        .grading()
        .ok_or(GradedError::NotGraded("weights on the acting algebra"))?;
    let v = cx
        .module()
        .grading()
        .ok_or(GradedError::NotGraded("weights on the module"))?;
    Ok(Weights { g, v })
}

impl Weights<'_> {
    fn of(&self, idx: &CochainIndex) -> i64 {
        self.v[idx.target]
            - idx
                .even_part
                .iter()
                .chain(&idx.odd_part)
                .map(|&i| self.g[i])
                .sum::<i64>()
    }
}

/// Homogeneity of a basis cochain.
pub fn homogeneity(cx: &CochainComplex, idx: &CochainIndex) -> Result<i64, GradedError> {
    Ok(weights(cx)?.of(idx))
}

/// Partition of the canonical basis of `C^k` by homogeneity, ascending in `h`.
pub fn split_basis(cx: &CochainComplex, k: usize) -> Result<Vec<HomogeneityIndex>, GradedError> {
    let w = weights(cx)?;
    let mut blocks: BTreeMap<i64, Vec<CochainIndex>> = BTreeMap::new();
    for idx in cx.enumerate_basis(k) {
        blocks.entry(w.of(&idx)).or_default().push(idx);
    }
    Ok(blocks
        .into_iter()
        .map(|(h, members)| HomogeneityIndex { h, members })
        .collect())
}

#[derive(Debug, Clone)]
pub struct GradedCohomology {
    pub degree: usize,
    /// One result per homogeneity with a nonzero cochain space, ascending.
    pub blocks: Vec<(i64, CohomologyResult)>,
    pub totals: Dims,
}

impl GradedCohomology {
    pub fn block(&self, h: i64) -> Option<&CohomologyResult> {
        self.blocks.iter().find(|(b, _)| *b == h).map(|(_, r)| r)
    }
}

/// `H^k_{[h]}` for every homogeneity `h` (or just `only`), computed in parallel.
pub fn compute_graded_cohomology(
    cx: &CochainComplex,
    k: usize,
    only: Option<i64>,
) -> Result<GradedCohomology, GradedError> {
    if k == 0 {
        return Err(CohomologyError::DegreeZero.into());
    }
    let into_map = |v: Vec<HomogeneityIndex>| -> BTreeMap<i64, Vec<CochainIndex>> {
        v.into_iter().map(|b| (b.h, b.members)).collect()
    };
    let cur = into_map(split_basis(cx, k)?);
    let next = into_map(split_basis(cx, k + 1)?);
    let prev = if k >= 2 {
        into_map(split_basis(cx, k - 1)?)
    } else {
        BTreeMap::new()
    };
    let jobs: Vec<(i64, Vec<CochainIndex>)> = cur
        .into_iter()
        .filter(|(h, _)| only.is_none_or(|o| o == *h))
        .collect();
    let blocks = jobs
        .into_par_iter()
        .map(|(h, domain)| {
            let rows = next.get(&h).cloned().unwrap_or_default();
            let psi = prev.get(&h).cloned().unwrap_or_default();
            solve_block(cx, k, domain, &rows, psi).map(|r| (h, r))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let totals = blocks
        .iter()
        .fold(Dims::default(), |acc, (_, r)| acc + r.dims);
    Ok(GradedCohomology {
        degree: k,
        blocks,
        totals,
    })
}

/// A basis cochain whose image under `∂` leaves its homogeneity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneityViolation {
    pub source: CochainIndex,
    pub source_h: i64,
    pub image: CochainIndex,
    pub image_h: i64,
}

/// Checks that `∂^k` maps each `C^k_{[h]}` into `C^{k+1}_{[h]}`; returns every
/// offending pair of basis cochains.
pub fn check_differential_homogeneity(
    cx: &CochainComplex,
    k: usize,
) -> Result<Vec<HomogeneityViolation>, GradedError> {
    let w = weights(cx)?;
    let domain = cx.enumerate_basis(k);
    let phi = SymbolicCochain::new(k, &domain, 0);
    let image = cx.apply_differential(&phi);
    let mut out = Vec::new();
    for (idx, form) in image.iter() {
        let image_h = w.of(idx);
        for v in form.variables() {
            let source_h = w.of(&domain[v]);
            if source_h != image_h {
                out.push(HomogeneityViolation {
                    source: domain[v].clone(),
                    source_h,
                    image: idx.clone(),
                    image_h,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GModuleAction, LieSuperAlgebra, Parity, SparseVector, Subalgebra};
    use crate::cochain::OddConvention;
    use crate::cohomology::compute_cohomology;
    use crate::scalar::Scalar;

    fn heisenberg(weights: Vec<i64>) -> LieSuperAlgebra {
        LieSuperAlgebra::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![Parity::Even; 3],
            vec![(0, 1, SparseVector::from_pairs([(2, Scalar::one())]))],
            Some(weights),
        )
        .unwrap()
    }

    #[test]
    fn blocks_partition_the_basis() {
        let cx = CochainComplex::adjoint(
            &Subalgebra::full(&heisenberg(vec![-1, -1, -2])),
            OddConvention::Strict,
        );
        for k in 0..=3 {
            let blocks = split_basis(&cx, k).unwrap();
            let total: usize = blocks.iter().map(|b| b.members.len()).sum();
            assert_eq!(total, cx.dim_cochains(k));
        }
        let zero = split_basis(&cx, 0).unwrap();
        assert_eq!(
            zero.iter().map(|b| (b.h, b.members.len())).collect::<Vec<_>>(),
            [(-2, 1), (-1, 2)]
        );
    }

    #[test]
    fn graded_totals_match_ungraded() {
        let cx = CochainComplex::adjoint(
            &Subalgebra::full(&heisenberg(vec![-1, -1, -2])),
            OddConvention::Strict,
        );
        for k in 1..=3 {
            let g = compute_graded_cohomology(&cx, k, None).unwrap();
            let u = compute_cohomology(&cx, k).unwrap();
            assert_eq!(g.totals, u.dims);
            assert!(check_differential_homogeneity(&cx, k).unwrap().is_empty());
        }
    }

    #[test]
    fn trivial_grading_is_one_block() {
        let cx = CochainComplex::adjoint(
            &Subalgebra::full(&heisenberg(vec![0, 0, 0])),
            OddConvention::Strict,
        );
        let g = compute_graded_cohomology(&cx, 2, None).unwrap();
        assert_eq!(g.blocks.len(), 1);
        assert_eq!(g.totals, compute_cohomology(&cx, 2).unwrap().dims);
    }

    #[test]
    fn corrupted_weights_are_detected() {
        let g = heisenberg(vec![-1, -1, -2]);
        let sub = Subalgebra::full(&g);
        let module = sub
            .adjoint_action()
            .with_grading(Some(vec![-1, -1, -1]))
            .unwrap();
        let cx = CochainComplex::new(sub.algebra().clone(), module, OddConvention::Strict).unwrap();
        assert!(!check_differential_homogeneity(&cx, 1).unwrap().is_empty());
    }

    #[test]
    fn ungraded_input_is_rejected() {
        let g = LieSuperAlgebra::new(vec!["a".into()], vec![Parity::Even], vec![], None).unwrap();
        let v = GModuleAction::trivial(&g, vec!["v".into()]).unwrap();
        let cx = CochainComplex::new(g, v, OddConvention::Strict).unwrap();
        assert!(matches!(
            split_basis(&cx, 1),
            Err(GradedError::NotGraded(_))
        ));
    }
}
