//! Cocycles, coboundaries and cohomology by linear Gröbner bases.
//!
//! For a degree `k` the unknown coefficients `φ` of a general `k`-cochain are
//! the variables `x1 ≻ x2 ≻ …` in canonical basis order. Cocycles are the
//! solutions of `∂Φ = 0`. Coboundaries come from the relations
//! `φ = ∂Ψ(ψ)` with the `ψ` unknowns ranked above every `φ` and then
//! eliminated. The quotient is read off by normal forms.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cochain::{ArgTuple, Cochain, CochainComplex, CochainIndex, SymbolicCochain};
use crate::lingb::{
    cartesian_forms, eliminate, quotient_forms, reduce, LinGbError, LinearForm,
    ReducedLinearBasis,
};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("degree must be at least 1")]
    DegreeZero,
    #[error(transparent)]
    LinGb(#[from] LinGbError),
}

/// The equations `(∂Φ)(t)_l = 0`, one per row index `(t, l)`, in the
/// unknowns of `variables`.
#[derive(Debug, Clone)]
pub struct CocycleSystem {
    pub degree: usize,
    pub variables: Vec<CochainIndex>,
    pub equations: Vec<LinearForm>,
}

/// The relations `φ_i - (∂Ψ)_i = 0` over the universe `ψ_1 ≻ … ≻ ψ_P ≻ φ_1 ≻ … ≻ φ_N`
/// (`ψ_j` is variable `j`, `φ_i` is variable `P + i`), together with the
/// reduced basis of the elimination ideal in the `φ` unknowns alone.
#[derive(Debug, Clone)]
pub struct CoboundarySystem {
    pub degree: usize,
    pub variables: Vec<CochainIndex>,
    pub psi_variables: Vec<CochainIndex>,
    pub equations: Vec<LinearForm>,
    /// Renumbered so that `φ_i` is variable `i`.
    pub eliminated: ReducedLinearBasis,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Dims {
    pub c: usize,
    pub z: usize,
    pub b: usize,
    pub h: usize,
}

impl std::ops::Add for Dims {
    type Output = Dims;
    fn add(self, o: Dims) -> Dims {
        Dims {
            c: self.c + o.c,
            z: self.z + o.z,
            b: self.b + o.b,
            h: self.h + o.h,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CohomologyResult {
    pub degree: usize,
    pub dims: Dims,
    /// The basis cochains whose coefficients are the unknowns, in order.
    pub variables: Vec<CochainIndex>,
    /// Reduced basis of the cocycle equations.
    pub cocycle_equations: ReducedLinearBasis,
    /// Reduced basis of the eliminated coboundary relations.
    pub coboundary_equations: ReducedLinearBasis,
    pub basis_z: Vec<Cochain>,
    pub basis_b: Vec<Cochain>,
    /// Representatives of a basis of `Z^k / B^k`.
    pub basis_h: Vec<Cochain>,
    /// The same bases as forms in the unknowns.
    pub z_forms: Vec<LinearForm>,
    pub b_forms: Vec<LinearForm>,
    pub h_forms: Vec<LinearForm>,
}

impl CohomologyResult {
    /// Coordinates of `c` over [`CohomologyResult::variables`], as a form.
    pub fn form_of(&self, c: &Cochain) -> LinearForm {
        LinearForm::from_dense(&c.coordinates(&self.variables))
    }
}

/// Groups rows by argument tuple, keeping their order.
fn row_groups(rows: &[CochainIndex]) -> Vec<(ArgTuple, Vec<usize>)> {
    rows.chunk_by(|a, b| a.even_part == b.even_part && a.odd_part == b.odd_part)
        .map(|chunk| (chunk[0].args(), chunk.iter().map(|r| r.target).collect()))
        .collect()
}

/// The cocycle system of the general cochain over `domain`, one equation per
/// index in `rows` (which must list whole degree `k + 1` indices).
pub fn cocycle_system_on(
    cx: &CochainComplex,
    k: usize,
    domain: Vec<CochainIndex>,
    rows: &[CochainIndex],
) -> CocycleSystem {
    let phi = SymbolicCochain::new(k, &domain, 0);
    let equations = row_groups(rows)
        .into_par_iter()
        .map(|(t, targets)| {
            let v = cx.differential_at(&phi, &t);
            targets.into_iter().map(|l| v.get(l)).collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    CocycleSystem {
        degree: k,
        variables: domain,
        equations,
    }
}

pub fn build_cocycle_system(cx: &CochainComplex, k: usize) -> CocycleSystem {
    cocycle_system_on(cx, k, cx.enumerate_basis(k), &cx.enumerate_basis(k + 1))
}

/// The coboundary relations for the unknowns in `domain`, with a general
/// `(k-1)`-cochain over `psi_domain`.
pub fn coboundary_system_on(
    cx: &CochainComplex,
    k: usize,
    domain: Vec<CochainIndex>,
    psi_domain: Vec<CochainIndex>,
) -> Result<CoboundarySystem, CohomologyError> {
    let p = psi_domain.len();
    let n = domain.len();
    let psi = SymbolicCochain::new(k.saturating_sub(1), &psi_domain, 0);
    let images: Vec<LinearForm> = if p == 0 {
        vec![LinearForm::zero(); n]
    } else {
        row_groups(&domain)
            .into_par_iter()
            .map(|(t, targets)| {
                let v = cx.differential_at(&psi, &t);
                targets.into_iter().map(|l| v.get(l)).collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };
    let equations: Vec<LinearForm> = images
        .iter()
        .enumerate()
        .map(|(i, img)| LinearForm::var(p + i).sub(img))
        .collect();
    let full = reduce(&equations);
    let keep: Vec<usize> = (p..p + n).collect();
    let phi_only = eliminate(&full, &keep, p + n)?;
    let eliminated = reduce(
        &phi_only
            .forms()
            .iter()
            .map(|f| f.reindex(|v| v - p))
            .collect::<Vec<_>>(),
    );
    Ok(CoboundarySystem {
        degree: k,
        variables: domain,
        psi_variables: psi_domain,
        equations,
        eliminated,
    })
}

/// The coboundary system of degree `k >= 1`; for `k = 1` there are no `ψ`
/// unknowns and every coboundary is zero.
pub fn build_coboundary_system(
    cx: &CochainComplex,
    k: usize,
) -> Result<CoboundarySystem, CohomologyError> {
    if k == 0 {
        return Err(CohomologyError::DegreeZero);
    }
    let psi = if k >= 2 {
        cx.enumerate_basis(k - 1)
    } else {
        Vec::new()
    };
    coboundary_system_on(cx, k, cx.enumerate_basis(k), psi)
}

/// Runs the full pipeline on one block of unknowns.
///
/// `rows` are the degree `k + 1` indices reached by `∂` from `domain`, and
/// `psi_domain` the degree `k - 1` indices whose image lands in `domain`.
pub fn solve_block(
    cx: &CochainComplex,
    k: usize,
    domain: Vec<CochainIndex>,
    rows: &[CochainIndex],
    psi_domain: Vec<CochainIndex>,
) -> Result<CohomologyResult, CohomologyError> {
    if k == 0 {
        return Err(CohomologyError::DegreeZero);
    }
    let n = domain.len();
    let (z_sys, b_sys) = rayon::join(
        || cocycle_system_on(cx, k, domain.clone(), rows),
        || coboundary_system_on(cx, k, domain.clone(), psi_domain),
    );
    let b_sys = b_sys?;
    let g_z = reduce(&z_sys.equations);
    let z_forms = cartesian_forms(&g_z, n);
    let b_forms = cartesian_forms(&b_sys.eliminated, n);
    let h_forms = quotient_forms(&z_forms, &b_forms)?.forms().to_vec();
    let to_cochains = |forms: &[LinearForm]| -> Vec<Cochain> {
        forms
            .iter()
            .map(|f| Cochain::from_coordinates(k, &domain, &f.to_dense(n)))
            .collect()
    };
    Ok(CohomologyResult {
        degree: k,
        dims: Dims {
            c: n,
            z: z_forms.len(),
            b: b_forms.len(),
            h: h_forms.len(),
        },
        basis_z: to_cochains(&z_forms),
        basis_b: to_cochains(&b_forms),
        basis_h: to_cochains(&h_forms),
        variables: domain,
        cocycle_equations: g_z,
        coboundary_equations: b_sys.eliminated,
        z_forms,
        b_forms,
        h_forms,
    })
}

/// `H^k(g, V)` for `k >= 1`, with explicit bases of `Z^k`, `B^k` and `H^k`.
pub fn compute_cohomology(
    cx: &CochainComplex,
    k: usize,
) -> Result<CohomologyResult, CohomologyError> {
    if k == 0 {
        return Err(CohomologyError::DegreeZero);
    }
    let psi = if k >= 2 {
        cx.enumerate_basis(k - 1)
    } else {
        Vec::new()
    };
    solve_block(cx, k, cx.enumerate_basis(k), &cx.enumerate_basis(k + 1), psi)
}

/// Cohomology in every degree `1..=dim g`, computed in parallel.
pub fn full_complex(cx: &CochainComplex) -> Result<Vec<CohomologyResult>, CohomologyError> {
    (1..=cx.algebra().dim())
        .into_par_iter()
        .map(|k| compute_cohomology(cx, k))
        .collect()
}

/// `Σ (-1)^k dim C^k` and `Σ (-1)^k dim H^k` over the given results.
pub fn euler_characteristics(results: &[CohomologyResult]) -> (i64, i64) {
    results.iter().fold((0, 0), |(c, h), r| {
        let s = if r.degree % 2 == 0 { 1 } else { -1 };
        (c + s * r.dims.c as i64, h + s * r.dims.h as i64)
    })
}

/// Evaluates a form at a coordinate vector.
pub fn evaluate_form(f: &LinearForm, point: &[Scalar]) -> Scalar {
    f.terms().iter().map(|(v, c)| c * &point[*v]).sum()
}
