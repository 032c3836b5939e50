//! Cochain spaces `C^k(g, V)`, their canonical bases, and the differential.
//!
//! A `k`-cochain is stored by its values on canonical argument tuples: even
//! arguments first in increasing order, then odd arguments in increasing
//! order. Values on any other tuple follow from super skew-symmetry.
//!
//! Two formulas are provided. [`differential_standard`] is the classical
//! Chevalley–Eilenberg formula `Σ (-1)^i z_i·Φ(…) + Σ (-1)^{i+j} Φ([z_i,z_j], …)`.
//! [`differential_super`] is the super formula; on purely even input it equals
//! minus the standard one. Kernels and images do not depend on that sign.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{koszul, AlgebraError, GModuleAction, LieSuperAlgebra, Parity, SparseVector, Subalgebra};
use crate::lingb::LinearForm;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CochainError {
    #[error("argument {0} has the wrong parity for its slot")]
    ParityMismatch(usize),
    #[error("cochain of degree {degree} cannot take {args} arguments")]
    DegreeMismatch { degree: usize, args: usize },
    #[error("module is acted on by an algebra of dimension {module}, expected {algebra}")]
    ModuleMismatch { algebra: usize, module: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// How repeated odd arguments are treated.
///
/// `Strict` uses strictly increasing odd indices, so a cochain vanishes on any
/// tuple with a repeated odd argument. `Symmetric` uses non-decreasing odd
/// indices, the usual basis of cochains that are symmetric in odd slots.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OddConvention {
    #[default]
    Strict,
    Symmetric,
}

impl std::str::FromStr for OddConvention {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(OddConvention::Strict),
            "symmetric" => Ok(OddConvention::Symmetric),
            _ => Err(format!("unknown odd convention {s:?}")),
        }
    }
}

impl fmt::Display for OddConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OddConvention::Strict => "strict",
            OddConvention::Symmetric => "symmetric",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DifferentialFormula {
    Standard,
    Super,
}

/// A canonical argument tuple: increasing even indices, then odd indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArgTuple {
    pub even: Vec<usize>,
    pub odd: Vec<usize>,
}

impl ArgTuple {
    pub fn len(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn flat(&self) -> Vec<usize> {
        self.even.iter().chain(self.odd.iter()).copied().collect()
    }
}

impl Ord for ArgTuple {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .even
            .len()
            .cmp(&self.even.len())
            .then_with(|| self.even.cmp(&other.even))
            .then_with(|| self.odd.cmp(&other.odd))
    }
}

impl PartialOrd for ArgTuple {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// The basis cochain taking the value `v_target` on one canonical tuple.
///
/// Ordered by number of even arguments (more first), then even part, odd part
/// and target.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CochainIndex {
    pub even_part: Vec<usize>,
    pub odd_part: Vec<usize>,
    pub target: usize,
}

impl CochainIndex {
    pub fn new(args: &ArgTuple, target: usize) -> Self {
        CochainIndex {
            even_part: args.even.clone(),
            odd_part: args.odd.clone(),
            target,
        }
    }

    pub fn args(&self) -> ArgTuple {
        ArgTuple {
            even: self.even_part.clone(),
            odd: self.odd_part.clone(),
        }
    }

    pub fn degree(&self) -> usize {
        self.even_part.len() + self.odd_part.len()
    }

    /// Dual-basis notation such as `l1*^l2*^t1*⊗d`.
    pub fn render(&self, g: &LieSuperAlgebra, module: &GModuleAction) -> String {
        let args = self
            .even_part
            .iter()
            .chain(&self.odd_part)
            .map(|&i| format!("{}*", g.name(i)))
            .join("^");
        if args.is_empty() {
            module.name(self.target).to_string()
        } else {
            format!("{args}⊗{}", module.name(self.target))
        }
    }
}

impl Ord for CochainIndex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .even_part
            .len()
            .cmp(&self.even_part.len())
            .then_with(|| self.even_part.cmp(&other.even_part))
            .then_with(|| self.odd_part.cmp(&other.odd_part))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for CochainIndex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Values a cochain may take coefficient-wise: plain scalars, or linear forms
/// in formal unknowns when building equation systems.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    /// `self += s * other`.
    fn add_scaled(&mut self, other: &Self, s: &Scalar);
}

impl Coefficient for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add_scaled(&mut self, other: &Self, s: &Scalar) {
        *self += &(other * s);
    }
}

impl Coefficient for LinearForm {
    fn zero() -> Self {
        LinearForm::zero()
    }
    fn is_zero(&self) -> bool {
        LinearForm::is_zero(self)
    }
    fn add_scaled(&mut self, other: &Self, s: &Scalar) {
        LinearForm::add_scaled(self, other, s)
    }
}

/// An element `Σ_l c_l v_l` of the module with coefficients of type `T`.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorOverV<T>(BTreeMap<usize, T>);

impl<T: Coefficient> Default for VectorOverV<T> {
    fn default() -> Self {
        VectorOverV(BTreeMap::new())
    }
}

impl<T: Coefficient> VectorOverV<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, l: usize) -> T {
        self.0.get(&l).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> {
        self.0.iter().map(|(l, c)| (*l, c))
    }

    pub fn into_entries(self) -> impl Iterator<Item = (usize, T)> {
        self.0.into_iter()
    }

    pub fn add_term(&mut self, l: usize, c: &T, s: &Scalar) {
        if s.is_zero() || c.is_zero() {
            return;
        }
        let entry = self.0.entry(l).or_insert_with(T::zero);
        entry.add_scaled(c, s);
        if entry.is_zero() {
            self.0.remove(&l);
        }
    }

    pub fn add_scaled(&mut self, other: &VectorOverV<T>, s: &Scalar) {
        for (l, c) in other.iter() {
            self.add_term(l, c, s);
        }
    }

    /// `b_x · self` under the given module action.
    pub fn acted_on(&self, module: &GModuleAction, x: usize) -> VectorOverV<T> {
        let mut out = VectorOverV::zero();
        for (l, c) in self.iter() {
            for (l2, a) in module.action_ref(x, l).iter() {
                out.add_term(l2, c, a);
            }
        }
        out
    }
}

impl<T: Coefficient> FromIterator<(usize, T)> for VectorOverV<T> {
    fn from_iter<I: IntoIterator<Item = (usize, T)>>(iter: I) -> Self {
        let mut v = VectorOverV::zero();
        for (l, c) in iter {
            v.add_term(l, &c, &Scalar::one());
        }
        v
    }
}

/// Anything that can report its values on canonical argument tuples.
pub trait CochainValues<T: Coefficient>: Sync {
    fn degree(&self) -> usize;
    fn value(&self, args: &ArgTuple) -> VectorOverV<T>;
}

/// A sparse combination of basis cochains of one degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Cochain<T = Scalar> {
    degree: usize,
    coeffs: BTreeMap<CochainIndex, T>,
}

impl<T: Coefficient> Cochain<T> {
    pub fn new(degree: usize) -> Self {
        Cochain {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CochainIndex, &T)> {
        self.coeffs.iter()
    }

    pub fn get(&self, index: &CochainIndex) -> T {
        self.coeffs.get(index).cloned().unwrap_or_else(T::zero)
    }

    /// Adds `c` to the coefficient of `index`.
    pub fn add_term(&mut self, index: CochainIndex, c: &T) -> Result<(), CochainError> {
        if index.degree() != self.degree {
            return Err(CochainError::DegreeMismatch {
                degree: self.degree,
                args: index.degree(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        let key = index.clone();
        let entry = self.coeffs.entry(index).or_insert_with(T::zero);
        entry.add_scaled(c, &Scalar::one());
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
        Ok(())
    }
}

impl Cochain<Scalar> {
    /// `Σ coeffs[i] · basis[i]`.
    pub fn from_coordinates(degree: usize, basis: &[CochainIndex], coeffs: &[Scalar]) -> Self {
        let mut c = Cochain::new(degree);
        for (idx, s) in basis.iter().zip(coeffs) {
            c.add_term(idx.clone(), s).expect("basis indices share the degree");
        }
        c
    }

    /// Coordinates in the given basis; entries outside it are ignored.
    pub fn coordinates(&self, basis: &[CochainIndex]) -> Vec<Scalar> {
        basis.iter().map(|i| self.get(i)).collect()
    }

    /// Text such as `t*^h2*⊗i2 - 2 h1*^h2*⊗j`.
    pub fn render(&self, g: &LieSuperAlgebra, module: &GModuleAction) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (idx, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag} "));
            }
            out.push_str(&idx.render(g, module));
        }
        out
    }
}

impl<T: Coefficient> CochainValues<T> for Cochain<T> {
    fn degree(&self) -> usize {
        self.degree
    }

    fn value(&self, args: &ArgTuple) -> VectorOverV<T> {
        let lo = CochainIndex::new(args, 0);
        let hi = CochainIndex::new(args, usize::MAX);
        self.coeffs
            .range(lo..=hi)
            .map(|(i, c)| (i.target, c.clone()))
            .collect()
    }
}

/// The general cochain `Σ φ_i Λ_i` over a chosen set of basis cochains, with
/// `φ_i` the formal variable `offset + i`.
pub struct SymbolicCochain {
    degree: usize,
    slots: HashMap<ArgTuple, Vec<(usize, usize)>>,
}

impl SymbolicCochain {
    pub fn new(degree: usize, domain: &[CochainIndex], offset: usize) -> Self {
        let mut slots: HashMap<ArgTuple, Vec<(usize, usize)>> = HashMap::new();
        for (i, idx) in domain.iter().enumerate() {
            slots
                .entry(idx.args())
                .or_default()
                .push((idx.target, offset + i));
        }
        SymbolicCochain { degree, slots }
    }
}

impl CochainValues<LinearForm> for SymbolicCochain {
    fn degree(&self) -> usize {
        self.degree
    }

    fn value(&self, args: &ArgTuple) -> VectorOverV<LinearForm> {
        match self.slots.get(args) {
            Some(list) => list
                .iter()
                .map(|&(l, v)| (l, LinearForm::var(v)))
                .collect(),
            None => VectorOverV::zero(),
        }
    }
}

/// The data `(g, V)` together with the conventions fixing `C^•(g, V)`.
#[derive(Debug, Clone)]
pub struct CochainComplex {
    g: LieSuperAlgebra,
    module: GModuleAction,
    convention: OddConvention,
    formula: DifferentialFormula,
}

impl CochainComplex {
    pub fn new(
        g: LieSuperAlgebra,
        module: GModuleAction,
        convention: OddConvention,
    ) -> Result<Self, CochainError> {
        if module.acting_dim() != g.dim() {
            return Err(CochainError::ModuleMismatch {
                algebra: g.dim(),
                module: module.dim(),
            });
        }
        let formula = if g.is_super() {
            DifferentialFormula::Super
        } else {
            DifferentialFormula::Standard
        };
        Ok(CochainComplex {
            g,
            module,
            convention,
            formula,
        })
    }

    /// `g` acting on the parent algebra by the bracket.
    pub fn adjoint(sub: &Subalgebra, convention: OddConvention) -> Self {
        Self::new(sub.algebra().clone(), sub.adjoint_action(), convention)
            .expect("adjoint action matches its subalgebra")
    }

    /// Selects the differential formula; the standard one needs an even algebra.
    pub fn with_formula(mut self, formula: DifferentialFormula) -> Result<Self, CochainError> {
        if formula == DifferentialFormula::Standard {
            if let Some(i) = (0..self.g.dim()).find(|&i| self.g.parity(i).is_odd()) {
                return Err(CochainError::ParityMismatch(i));
            }
        }
        self.formula = formula;
        Ok(self)
    }

    pub fn algebra(&self) -> &LieSuperAlgebra {
        &self.g
    }

    pub fn module(&self) -> &GModuleAction {
        &self.module
    }

    pub fn convention(&self) -> OddConvention {
        self.convention
    }

    pub fn formula(&self) -> DifferentialFormula {
        self.formula
    }

    fn evens(&self) -> Vec<usize> {
        (0..self.g.dim())
            .filter(|&i| self.g.parity(i) == Parity::Even)
            .collect()
    }

    fn odds(&self) -> Vec<usize> {
        (0..self.g.dim())
            .filter(|&i| self.g.parity(i) == Parity::Odd)
            .collect()
    }

    /// Canonical argument tuples of length `k`, in canonical order.
    pub fn tuples(&self, k: usize) -> Vec<ArgTuple> {
        let evens = self.evens();
        let odds = self.odds();
        let mut out = Vec::new();
        for r in (0..=k.min(evens.len())).rev() {
            let odd_parts: Vec<Vec<usize>> = match self.convention {
                OddConvention::Strict => odds.iter().copied().combinations(k - r).collect(),
                OddConvention::Symmetric => odds
                    .iter()
                    .copied()
                    .combinations_with_replacement(k - r)
                    .collect(),
            };
            for even in evens.iter().copied().combinations(r) {
                for odd in &odd_parts {
                    out.push(ArgTuple {
                        even: even.clone(),
                        odd: odd.clone(),
                    });
                }
            }
        }
        out
    }

    /// The canonical basis of `C^k`: tuples in canonical order, then targets.
    pub fn enumerate_basis(&self, k: usize) -> Vec<CochainIndex> {
        let n = self.module.dim();
        self.tuples(k)
            .iter()
            .flat_map(|t| (0..n).map(move |l| CochainIndex::new(t, l)))
            .collect()
    }

    pub fn dim_cochains(&self, k: usize) -> usize {
        self.tuples(k).len() * self.module.dim()
    }

    /// Sorts `args` into canonical order. Returns the tuple and the sign of the
    /// reordering, or `None` when every cochain vanishes on `args`.
    pub fn canonicalize(&self, args: &[usize]) -> Option<(ArgTuple, Scalar)> {
        let key = |a: usize| (self.g.parity(a), a);
        let mut sign = Scalar::one();
        for i in 0..args.len() {
            for j in i + 1..args.len() {
                if key(args[i]) > key(args[j]) {
                    sign = -(sign * koszul(self.g.parity(args[i]), self.g.parity(args[j])));
                }
            }
        }
        let mut sorted = args.to_vec();
        sorted.sort_by_key(|&a| key(a));
        for w in sorted.windows(2) {
            if w[0] == w[1]
                && (self.g.parity(w[0]) == Parity::Even
                    || self.convention == OddConvention::Strict)
            {
                return None;
            }
        }
        let split = sorted.partition_point(|&a| self.g.parity(a) == Parity::Even);
        let odd = sorted.split_off(split);
        Some((ArgTuple { even: sorted, odd }, sign))
    }

    /// `Φ(args)` for arguments in any order.
    pub fn evaluate<T: Coefficient>(
        &self,
        phi: &impl CochainValues<T>,
        args: &[usize],
    ) -> Result<VectorOverV<T>, CochainError> {
        if args.len() != phi.degree() {
            return Err(CochainError::DegreeMismatch {
                degree: phi.degree(),
                args: args.len(),
            });
        }
        if let Some(&bad) = args.iter().find(|&&a| a >= self.g.dim()) {
            return Err(AlgebraError::IndexOutOfRange {
                index: bad,
                dim: self.g.dim(),
            }
            .into());
        }
        Ok(self.eval(phi, args))
    }

    fn eval<T: Coefficient>(&self, phi: &impl CochainValues<T>, args: &[usize]) -> VectorOverV<T> {
        match self.canonicalize(args) {
            Some((t, s)) => {
                let mut out = VectorOverV::zero();
                out.add_scaled(&phi.value(&t), &s);
                out
            }
            None => VectorOverV::zero(),
        }
    }

    /// `Σ_b c_b Φ(prefix, b, suffix)` for a slot vector `Σ_b c_b b`.
    fn eval_slot<T: Coefficient>(
        &self,
        phi: &impl CochainValues<T>,
        prefix: &[usize],
        slot: &SparseVector,
        suffix: &[usize],
    ) -> VectorOverV<T> {
        let mut out = VectorOverV::zero();
        let mut args = Vec::with_capacity(prefix.len() + 1 + suffix.len());
        for (b, c) in slot.iter() {
            args.clear();
            args.extend_from_slice(prefix);
            args.push(b);
            args.extend_from_slice(suffix);
            out.add_scaled(&self.eval(phi, &args), c);
        }
        out
    }

    /// `(∂Φ)(z_0, …, z_k)` by the standard formula; all arguments must be even.
    pub fn differential_standard<T: Coefficient>(
        &self,
        phi: &impl CochainValues<T>,
        args: &[usize],
    ) -> Result<VectorOverV<T>, CochainError> {
        self.check_args(phi, args)?;
        if let Some(&bad) = args.iter().find(|&&a| self.g.parity(a).is_odd()) {
            return Err(CochainError::ParityMismatch(bad));
        }
        let mut out = VectorOverV::zero();
        for i in 0..args.len() {
            let rest = without(args, &[i]);
            let v = self.eval(phi, &rest).acted_on(&self.module, args[i]);
            out.add_scaled(&v, &Scalar::sign(i));
        }
        for i in 0..args.len() {
            for j in i + 1..args.len() {
                let rest = without(args, &[i, j]);
                let v = self.eval_slot(phi, &[], self.g.bracket_ref(args[i], args[j]), &rest);
                out.add_scaled(&v, &Scalar::sign(i + j));
            }
        }
        Ok(out)
    }

    /// `(∂Φ)(e_0, …, e_p, o_{p+1}, …, o_k)` by the super formula.
    pub fn differential_super<T: Coefficient>(
        &self,
        phi: &impl CochainValues<T>,
        evens: &[usize],
        odds: &[usize],
    ) -> Result<VectorOverV<T>, CochainError> {
        let all: Vec<usize> = evens.iter().chain(odds).copied().collect();
        self.check_args(phi, &all)?;
        if let Some(&bad) = evens.iter().find(|&&a| self.g.parity(a).is_odd()) {
            return Err(CochainError::ParityMismatch(bad));
        }
        if let Some(&bad) = odds.iter().find(|&&a| !self.g.parity(a).is_odd()) {
            return Err(CochainError::ParityMismatch(bad));
        }
        Ok(self.super_unchecked(phi, evens, odds))
    }

    fn super_unchecked<T: Coefficient>(
        &self,
        phi: &impl CochainValues<T>,
        ev: &[usize],
        od: &[usize],
    ) -> VectorOverV<T> {
        let mut out = VectorOverV::zero();
        for i in 0..ev.len() {
            let mut rest = without(ev, &[i]);
            rest.extend_from_slice(od);
            let v = self.eval(phi, &rest).acted_on(&self.module, ev[i]);
            out.add_scaled(&v, &Scalar::sign(i + 1));
        }
        for i in 0..ev.len() {
            for j in i + 1..ev.len() {
                let mut rest = without(ev, &[i, j]);
                rest.extend_from_slice(od);
                let v = self.eval_slot(phi, &[], self.g.bracket_ref(ev[i], ev[j]), &rest);
                out.add_scaled(&v, &Scalar::sign(i + j + 1));
            }
        }
        for i in 0..ev.len() {
            let prefix = without(ev, &[i]);
            for j in 0..od.len() {
                let suffix = without(od, &[j]);
                let v = self.eval_slot(phi, &prefix, self.g.bracket_ref(ev[i], od[j]), &suffix);
                out.add_scaled(&v, &Scalar::sign(i));
            }
        }
        for i in 0..od.len() {
            for j in i + 1..od.len() {
                let mut rest = ev.to_vec();
                rest.extend(without(od, &[i, j]));
                let v = self.eval_slot(phi, &[], self.g.bracket_ref(od[i], od[j]), &rest);
                out.add_scaled(&v, &Scalar::one());
            }
        }
        // ev.len() = p + 1
        let last = Scalar::sign(ev.len() + 1);
        for i in 0..od.len() {
            let mut rest = ev.to_vec();
            rest.extend(without(od, &[i]));
            let v = self.eval(phi, &rest).acted_on(&self.module, od[i]);
            out.add_scaled(&v, &last);
        }
        out
    }

    fn check_args<T: Coefficient>(
        &self,
        phi: &impl CochainValues<T>,
        args: &[usize],
    ) -> Result<(), CochainError> {
        if args.len() != phi.degree() + 1 {
            return Err(CochainError::DegreeMismatch {
                degree: phi.degree(),
                args: args.len(),
            });
        }
        if let Some(&bad) = args.iter().find(|&&a| a >= self.g.dim()) {
            return Err(AlgebraError::IndexOutOfRange {
                index: bad,
                dim: self.g.dim(),
            }
            .into());
        }
        Ok(())
    }

    /// `(∂Φ)` on a canonical tuple, using the complex's formula.
    pub fn differential_at<T: Coefficient>(
        &self,
        phi: &impl CochainValues<T>,
        args: &ArgTuple,
    ) -> VectorOverV<T> {
        match self.formula {
            DifferentialFormula::Standard => self
                .differential_standard(phi, &args.flat())
                .expect("standard formula is only selected for even algebras"),
            DifferentialFormula::Super => self.super_unchecked(phi, &args.even, &args.odd),
        }
    }

    /// `∂Φ` as a cochain of degree `deg Φ + 1`.
    pub fn apply_differential<T: Coefficient>(&self, phi: &impl CochainValues<T>) -> Cochain<T> {
        let k = phi.degree();
        let values: Vec<(ArgTuple, VectorOverV<T>)> = self
            .tuples(k + 1)
            .into_par_iter()
            .map(|t| {
                let v = self.differential_at(phi, &t);
                (t, v)
            })
            .collect();
        let mut out = Cochain::new(k + 1);
        for (t, v) in values {
            for (l, c) in v.into_entries() {
                out.add_term(CochainIndex::new(&t, l), &c)
                    .expect("tuple length matches degree");
            }
        }
        out
    }

    /// Applies `∂∘∂` to the general `k`-cochain; every entry of the result
    /// must vanish for a genuine complex.
    pub fn compose_check(&self, k: usize) -> Residual {
        let domain = self.enumerate_basis(k);
        let phi = SymbolicCochain::new(k, &domain, 0);
        let d1 = self.apply_differential(&phi);
        let d2 = self.apply_differential(&d1);
        Residual {
            degree: k,
            entries: d2.iter().map(|(i, f)| (i.clone(), f.clone())).collect(),
        }
    }
}

/// Nonzero entries of `∂∘∂` applied to a general cochain.
#[derive(Debug, Clone, PartialEq)]
pub struct Residual {
    pub degree: usize,
    pub entries: Vec<(CochainIndex, LinearForm)>,
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

fn without(xs: &[usize], skip: &[usize]) -> Vec<usize> {
    xs.iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .map(|(_, &x)| x)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn sv(pairs: &[(usize, i64)]) -> SparseVector {
        SparseVector::from_pairs(pairs.iter().map(|&(i, c)| (i, Scalar::from(c))))
    }

    fn sl2() -> LieSuperAlgebra {
        LieSuperAlgebra::new(
            names(&["e", "f", "h"]),
            vec![Parity::Even; 3],
            vec![
                (0, 1, sv(&[(2, 1)])),
                (2, 0, sv(&[(0, 2)])),
                (2, 1, sv(&[(1, -2)])),
            ],
            None,
        )
        .unwrap()
    }

    fn gl11() -> LieSuperAlgebra {
        // E11, E22 even; E12, E21 odd
        LieSuperAlgebra::new(
            names(&["a", "d", "b", "c"]),
            vec![Parity::Even, Parity::Even, Parity::Odd, Parity::Odd],
            vec![
                (0, 2, sv(&[(2, 1)])),
                (0, 3, sv(&[(3, -1)])),
                (1, 2, sv(&[(2, -1)])),
                (1, 3, sv(&[(3, 1)])),
                (2, 3, sv(&[(0, 1), (1, 1)])),
            ],
            None,
        )
        .unwrap()
    }

    fn adjoint(g: &LieSuperAlgebra, conv: OddConvention) -> CochainComplex {
        CochainComplex::adjoint(&Subalgebra::full(g), conv)
    }

    fn basis_cochain(idx: &CochainIndex) -> Cochain {
        let mut c = Cochain::new(idx.degree());
        c.add_term(idx.clone(), &Scalar::one()).unwrap();
        c
    }

    #[test]
    fn basis_sizes() {
        let cx = adjoint(&sl2(), OddConvention::Strict);
        assert_eq!(cx.enumerate_basis(0).len(), 3);
        assert_eq!(cx.enumerate_basis(2).len(), 9);
        assert!(cx.enumerate_basis(4).is_empty());
        let sx = adjoint(&gl11(), OddConvention::Strict);
        assert_eq!(sx.enumerate_basis(2).len(), 4 * 6);
        let sy = adjoint(&gl11(), OddConvention::Symmetric);
        // evens: C(2,2) + C(2,1)*2 + multichoose(2,2) = 1 + 4 + 3
        assert_eq!(sy.enumerate_basis(2).len(), 4 * 8);
        let b = sy.enumerate_basis(2);
        assert!(b.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(b[0].even_part, vec![0, 1]);
    }

    #[test]
    fn evaluation_signs() {
        let cx = adjoint(&sl2(), OddConvention::Strict);
        let idx = CochainIndex {
            even_part: vec![0, 1],
            odd_part: vec![],
            target: 2,
        };
        let phi = basis_cochain(&idx);
        assert_eq!(cx.evaluate(&phi, &[1, 0]).unwrap().get(2), Scalar::from(-1));
        assert!(cx.evaluate(&phi, &[0, 0]).unwrap().is_zero());
        let sx = adjoint(&gl11(), OddConvention::Symmetric);
        let idx = CochainIndex {
            even_part: vec![],
            odd_part: vec![2, 3],
            target: 0,
        };
        let phi = basis_cochain(&idx);
        assert_eq!(sx.evaluate(&phi, &[3, 2]).unwrap().get(0), Scalar::one());
        let idx = CochainIndex {
            even_part: vec![0],
            odd_part: vec![2],
            target: 0,
        };
        let phi = basis_cochain(&idx);
        assert_eq!(sx.evaluate(&phi, &[2, 0]).unwrap().get(0), Scalar::from(-1));
    }

    #[test]
    fn super_formula_small_example() {
        // e even, o odd, [o,o] = e, trivial action on a 1-dim space
        let g = LieSuperAlgebra::new(
            names(&["e", "o"]),
            vec![Parity::Even, Parity::Odd],
            vec![(1, 1, sv(&[(0, 1)]))],
            None,
        )
        .unwrap();
        let module = GModuleAction::trivial(&g, names(&["v"])).unwrap();
        let cx = CochainComplex::new(g, module, OddConvention::Symmetric).unwrap();
        let phi = basis_cochain(&CochainIndex {
            even_part: vec![0],
            odd_part: vec![],
            target: 0,
        });
        let v = cx.differential_super(&phi, &[], &[1, 1]).unwrap();
        assert_eq!(v.get(0), Scalar::one());
        assert!(matches!(
            cx.differential_super(&phi, &[1], &[0]),
            Err(CochainError::ParityMismatch(_))
        ));
        assert!(matches!(
            cx.differential_standard(&phi, &[1, 1]),
            Err(CochainError::ParityMismatch(1))
        ));
    }

    #[test]
    fn super_formula_is_minus_standard_on_even_input() {
        let cx = adjoint(&sl2(), OddConvention::Strict);
        for k in 0..3 {
            let domain = cx.enumerate_basis(k);
            let phi = SymbolicCochain::new(k, &domain, 0);
            for t in cx.tuples(k + 1) {
                let a = cx.differential_standard(&phi, &t.flat()).unwrap();
                let mut b = cx.differential_super(&phi, &t.even, &t.odd).unwrap();
                b.add_scaled(&a, &Scalar::one());
                assert!(b.is_zero());
            }
        }
    }

    #[test]
    fn trivial_data_gives_zero_differential() {
        let g = LieSuperAlgebra::new(names(&["a", "b", "c"]), vec![Parity::Even; 3], vec![], None)
            .unwrap();
        let module = GModuleAction::trivial(&g, names(&["v", "w"])).unwrap();
        let cx = CochainComplex::new(g, module, OddConvention::Strict).unwrap();
        let phi = SymbolicCochain::new(1, &cx.enumerate_basis(1), 0);
        assert!(cx.apply_differential(&phi).is_zero());
    }

    #[test]
    fn complexes_square_to_zero() {
        for k in 0..3 {
            assert!(adjoint(&sl2(), OddConvention::Strict).compose_check(k).is_zero());
            assert!(adjoint(&gl11(), OddConvention::Symmetric).compose_check(k).is_zero());
            assert!(adjoint(&gl11(), OddConvention::Strict).compose_check(k).is_zero());
        }
    }

    #[test]
    fn jacobi_failure_breaks_the_complex() {
        let g = LieSuperAlgebra::new_unchecked(
            names(&["e1", "e2", "e3"]),
            vec![Parity::Even; 3],
            vec![(0, 1, sv(&[(2, 1)])), (0, 2, sv(&[(0, 1)]))],
            None,
        )
        .unwrap();
        let module = GModuleAction::trivial(&g, names(&["v"])).unwrap();
        let cx = CochainComplex::new(g, module, OddConvention::Strict).unwrap();
        assert!(!cx.compose_check(1).is_zero());
    }

    #[test]
    fn rendering() {
        let cx = adjoint(&sl2(), OddConvention::Strict);
        let b = cx.enumerate_basis(2);
        let c = Cochain::from_coordinates(
            2,
            &b,
            &(0..9)
                .map(|i| match i {
                    2 => Scalar::one(),
                    5 => Scalar::from(-2),
                    _ => Scalar::zero(),
                })
                .collect::<Vec<_>>(),
        );
        assert_eq!(c.render(cx.algebra(), cx.module()), "e*^f*⊗h - 2 e*^h*⊗h");
        assert_eq!(Cochain::<Scalar>::new(1).render(cx.algebra(), cx.module()), "0");
    }

    fn arb_coeffs(n: usize) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-3i64..=3, n)
    }

    proptest! {
        #[test]
        fn evaluation_is_super_skew(coeffs in arb_coeffs(4 * 8), a in 0usize..4, b in 0usize..4) {
            let cx = adjoint(&gl11(), OddConvention::Symmetric);
            let basis = cx.enumerate_basis(2);
            let phi = Cochain::from_coordinates(2, &basis, &coeffs.iter().map(|&c| Scalar::from(c)).collect::<Vec<_>>());
            let args = [a, b];
            let swapped = [b, a];
            let x = cx.evaluate(&phi, &args).unwrap();
            let mut y = cx.evaluate(&phi, &swapped).unwrap();
            let s = -koszul(cx.algebra().parity(a), cx.algebra().parity(b));
            y.add_scaled(&x, &-s);
            prop_assert!(y.is_zero());
        }

        #[test]
        fn differential_is_super_skew(coeffs in arb_coeffs(4 * 4), perm in 0usize..2, t in 0usize..20) {
            let cx = adjoint(&gl11(), OddConvention::Symmetric);
            let basis = cx.enumerate_basis(1);
            let phi = Cochain::from_coordinates(1, &basis, &coeffs.iter().map(|&c| Scalar::from(c)).collect::<Vec<_>>());
            let tuples = cx.tuples(2);
            let tup = &tuples[t % tuples.len()];
            let flat = tup.flat();
            let d = cx.apply_differential(&phi);
            let direct = cx.differential_at(&phi, tup);
            prop_assert_eq!(&d.value(tup), &direct);
            let mut rev = flat.clone();
            if perm == 1 { rev.reverse(); }
            let via = cx.evaluate(&d, &rev).unwrap();
            let (_, sign) = cx.canonicalize(&rev).unwrap();
            let mut expect = VectorOverV::zero();
            expect.add_scaled(&direct, &sign);
            prop_assert_eq!(via, expect);
        }

        #[test]
        fn standard_differential_is_skew(coeffs in arb_coeffs(3 * 3), args in proptest::sample::subsequence(vec![0usize, 1, 2], 3), i in 0usize..2) {
            let cx = adjoint(&sl2(), OddConvention::Strict);
            let basis = cx.enumerate_basis(2);
            let phi = Cochain::from_coordinates(2, &basis, &coeffs.iter().map(|&c| Scalar::from(c)).collect::<Vec<_>>());
            let mut swapped = args.clone();
            swapped.swap(i, i + 1);
            let x = cx.differential_standard(&phi, &args).unwrap();
            let mut y = cx.differential_standard(&phi, &swapped).unwrap();
            y.add_scaled(&x, &Scalar::one());
            prop_assert!(y.is_zero());
        }
    }
}
