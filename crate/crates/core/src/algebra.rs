//! Lie (super)algebras given by structure constants, subalgebras and module actions.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

}

impl std::ops::Add for Parity {
    type Output = Parity;

    fn add(self, other: Parity) -> Parity {
        if self.bit() + other.bit() == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// `(-1)^{|a||b|}`.
pub fn koszul(a: Parity, b: Parity) -> Scalar {
    Scalar::sign(a.bit() * b.bit())
}

/// A sparse vector `Σ c_k b_k` over some basis; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SparseVector(BTreeMap<usize, Scalar>);

impl SparseVector {
    pub fn new() -> Self {
        SparseVector(BTreeMap::new())
    }

    pub fn unit(index: usize) -> Self {
        let mut v = SparseVector::new();
        v.0.insert(index, Scalar::one());
        v
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Scalar)>>(pairs: I) -> Self {
        let mut v = SparseVector::new();
        for (i, c) in pairs {
            v.add_term(i, &c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: usize) -> Scalar {
        self.0.get(&index).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().map(|(i, c)| (*i, c))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    pub fn add_term(&mut self, index: usize, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.0.entry(index).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.0.remove(&index);
        }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, other: &SparseVector, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for (i, c) in other.iter() {
            self.add_term(i, &(c * s));
        }
    }

    pub fn scaled(&self, s: &Scalar) -> SparseVector {
        let mut out = SparseVector::new();
        out.add_scaled(self, s);
        out
    }

    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVector {
        SparseVector::from_pairs(self.iter().map(|(i, c)| (f(i), c.clone())))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    SkewSymmetry {
        i: usize,
        j: usize,
        residual: SparseVector,
    },
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        residual: SparseVector,
    },
    Parity {
        i: usize,
        j: usize,
        k: usize,
    },
    Grading {
        i: usize,
        j: usize,
        k: usize,
    },
    GradedSuper,
    ModuleAxiom {
        x: usize,
        y: usize,
        v: usize,
        residual: SparseVector,
    },
    ModuleGrading {
        x: usize,
        v: usize,
        w: usize,
    },
    NotClosed {
        i: usize,
        j: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SkewSymmetry { i, j, residual } => {
                write!(f, "skew-symmetry fails at ({i}, {j}), residual {residual:?}")
            }
            Violation::Jacobi { i, j, k, residual } => {
                write!(f, "Jacobi identity fails at ({i}, {j}, {k}), residual {residual:?}")
            }
            Violation::Parity { i, j, k } => {
                write!(f, "bracket of {i} and {j} has component {k} of the wrong parity")
            }
            Violation::Grading { i, j, k } => {
                write!(f, "bracket of {i} and {j} has component {k} of the wrong weight")
            }
            Violation::GradedSuper => write!(f, "grading given on an algebra with odd elements"),
            Violation::ModuleAxiom { x, y, v, residual } => {
                write!(f, "module axiom fails at ({x}, {y}; {v}), residual {residual:?}")
            }
            Violation::ModuleGrading { x, v, w } => {
                write!(f, "action of {x} on {v} has component {w} of the wrong weight")
            }
            Violation::NotClosed { i, j } => {
                write!(f, "bracket of members {i} and {j} leaves the subalgebra")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("{what}: expected {expected} entries, got {got}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("duplicate basis name {0:?}")]
    DuplicateName(String),
    #[error("algebra must have positive dimension")]
    Empty,
    #[error("invalid structure: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
}

/// `[b_i, b_j] = Σ_k c_{ij}^k b_k` on a finite basis with parities and optional weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieSuperAlgebra {
    names: Vec<String>,
    parity: Vec<Parity>,
    table: Vec<Vec<SparseVector>>,
    grading: Option<Vec<i64>>,
}

/// A structure-constant entry `[b_left, b_right] = value`.
pub type BracketEntry = (usize, usize, SparseVector);

impl LieSuperAlgebra {
    /// Builds and validates an algebra. Entries not given are filled by super
    /// skew-symmetry; if both orders of a pair are given both are kept as is.
    pub fn new(
        names: Vec<String>,
        parity: Vec<Parity>,
        brackets: Vec<BracketEntry>,
        grading: Option<Vec<i64>>,
    ) -> Result<Self, AlgebraError> {
        let alg = Self::new_unchecked(names, parity, brackets, grading)?;
        let violations = alg.validate();
        if violations.is_empty() {
            Ok(alg)
        } else {
            Err(AlgebraError::Invalid(violations))
        }
    }

    /// Same as [`LieSuperAlgebra::new`] but skips axiom validation.
    pub fn new_unchecked(
        names: Vec<String>,
        parity: Vec<Parity>,
        brackets: Vec<BracketEntry>,
        grading: Option<Vec<i64>>,
    ) -> Result<Self, AlgebraError> {
        let m = names.len();
        if m == 0 {
            return Err(AlgebraError::Empty);
        }
        check_len("parity list", m, parity.len())?;
        if let Some(w) = &grading {
            check_len("grading", m, w.len())?;
        }
        check_names(&names)?;
        let mut table = vec![vec![SparseVector::new(); m]; m];
        let mut given = HashSet::new();
        for (i, j, v) in &brackets {
            check_index(*i, m)?;
            check_index(*j, m)?;
            for k in v.support() {
                check_index(k, m)?;
            }
            table[*i][*j] = v.clone();
            given.insert((*i, *j));
        }
        for (i, j, v) in &brackets {
            if i != j && !given.contains(&(*j, *i)) {
                table[*j][*i] = v.scaled(&-koszul(parity[*i], parity[*j]));
            }
        }
        Ok(LieSuperAlgebra {
            names,
            parity,
            table,
            grading,
        })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn is_super(&self) -> bool {
        self.parity.iter().any(|p| p.is_odd())
    }

    pub fn grading(&self) -> Option<&[i64]> {
        self.grading.as_deref()
    }

    pub fn with_grading(mut self, grading: Option<Vec<i64>>) -> Result<Self, AlgebraError> {
        if let Some(w) = &grading {
            check_len("grading", self.dim(), w.len())?;
        }
        self.grading = grading;
        Ok(self)
    }

    pub fn bracket(&self, x: usize, y: usize) -> Result<&SparseVector, AlgebraError> {
        check_index(x, self.dim())?;
        check_index(y, self.dim())?;
        Ok(&self.table[x][y])
    }

    /// Unchecked table lookup for hot loops.
    pub(crate) fn bracket_ref(&self, x: usize, y: usize) -> &SparseVector {
        &self.table[x][y]
    }

    /// Bilinear extension of the bracket to arbitrary vectors.
    pub fn bracket_vectors(&self, u: &SparseVector, v: &SparseVector) -> SparseVector {
        let mut out = SparseVector::new();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                out.add_scaled(&self.table[i][j], &(a * b));
            }
        }
        out
    }

    /// All stored entries with nonzero value and `i <= j`, in index order.
    pub fn upper_entries(&self) -> Vec<BracketEntry> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in i..self.dim() {
                if !self.table[i][j].is_zero() {
                    out.push((i, j, self.table[i][j].clone()));
                }
            }
        }
        out
    }

    /// Every axiom violation found by exhaustive checking; empty iff valid.
    pub fn validate(&self) -> Vec<Violation> {
        let m = self.dim();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i..m {
                let mut r = self.table[i][j].clone();
                r.add_scaled(&self.table[j][i], &koszul(self.parity[i], self.parity[j]));
                if !r.is_zero() {
                    out.push(Violation::SkewSymmetry { i, j, residual: r });
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                let expected = self.parity[i] + self.parity[j];
                for k in self.table[i][j].support() {
                    if self.parity[k] != expected {
                        out.push(Violation::Parity { i, j, k });
                    }
                }
            }
        }
        if let Some(w) = &self.grading {
            if self.is_super() {
                out.push(Violation::GradedSuper);
            }
            for i in 0..m {
                for j in 0..m {
                    for k in self.table[i][j].support() {
                        if w[k] != w[i] + w[j] {
                            out.push(Violation::Grading { i, j, k });
                        }
                    }
                }
            }
        }
        let mut seen = BTreeSet::new();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let r = self.jacobi_residual(i, j, k);
                    if r.is_zero() {
                        continue;
                    }
                    let mut key = [i, j, k];
                    key.sort_unstable();
                    if seen.insert(key) {
                        out.push(Violation::Jacobi { i, j, k, residual: r });
                    }
                }
            }
        }
        out
    }

    /// `[[x,y],z] - [x,[y,z]] + (-1)^{|x||y|} [y,[x,z]]`.
    pub fn jacobi_residual(&self, x: usize, y: usize, z: usize) -> SparseVector {
        let ux = SparseVector::unit(x);
        let uy = SparseVector::unit(y);
        let uz = SparseVector::unit(z);
        let mut r = self.bracket_vectors(&self.table[x][y], &uz);
        r.add_scaled(&self.bracket_vectors(&ux, &self.table[y][z]), &-Scalar::one());
        r.add_scaled(
            &self.bracket_vectors(&uy, &self.table[x][z]),
            &koszul(self.parity[x], self.parity[y]),
        );
        r
    }
}

fn check_len(what: &'static str, expected: usize, got: usize) -> Result<(), AlgebraError> {
    if expected == got {
        Ok(())
    } else {
        Err(AlgebraError::DimensionMismatch {
            what,
            expected,
            got,
        })
    }
}

fn check_index(index: usize, dim: usize) -> Result<(), AlgebraError> {
    if index < dim {
        Ok(())
    } else {
        Err(AlgebraError::IndexOutOfRange { index, dim })
    }
}

fn check_names(names: &[String]) -> Result<(), AlgebraError> {
    let mut seen = HashSet::new();
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(AlgebraError::DuplicateName(n.clone()));
        }
    }
    Ok(())
}

/// A bracket-closed subset of a parent basis, ordered even members first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subalgebra {
    parent: LieSuperAlgebra,
    members: Vec<usize>,
    algebra: LieSuperAlgebra,
}

impl Subalgebra {
    pub fn new(parent: &LieSuperAlgebra, members: &[usize]) -> Result<Self, AlgebraError> {
        let m = parent.dim();
        let mut seen = HashSet::new();
        for &i in members {
            check_index(i, m)?;
            if !seen.insert(i) {
                return Err(AlgebraError::DuplicateName(parent.name(i).to_string()));
            }
        }
        if members.is_empty() {
            return Err(AlgebraError::Empty);
        }
        let mut ordered: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&i| !parent.parity(i).is_odd())
            .collect();
        ordered.extend(members.iter().copied().filter(|&i| parent.parity(i).is_odd()));
        let position: BTreeMap<usize, usize> =
            ordered.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let mut violations = Vec::new();
        let mut brackets = Vec::new();
        for (a, &i) in ordered.iter().enumerate() {
            for (b, &j) in ordered.iter().enumerate() {
                let v = parent.bracket_ref(i, j);
                if v.support().all(|k| position.contains_key(&k)) {
                    if !v.is_zero() {
                        brackets.push((a, b, v.map_indices(|k| position[&k])));
                    }
                } else if a <= b {
                    violations.push(Violation::NotClosed { i, j });
                }
            }
        }
        if !violations.is_empty() {
            return Err(AlgebraError::Invalid(violations));
        }
        let algebra = LieSuperAlgebra::new_unchecked(
            ordered.iter().map(|&i| parent.name(i).to_string()).collect(),
            ordered.iter().map(|&i| parent.parity(i)).collect(),
            brackets,
            parent
                .grading()
                .map(|w| ordered.iter().map(|&i| w[i]).collect()),
        )?;
        Ok(Subalgebra {
            parent: parent.clone(),
            members: ordered,
            algebra,
        })
    }

    /// The whole algebra as a subalgebra of itself.
    pub fn full(parent: &LieSuperAlgebra) -> Self {
        let members: Vec<usize> = (0..parent.dim()).collect();
        Subalgebra::new(parent, &members).expect("an algebra is closed in itself")
    }

    pub fn parent(&self) -> &LieSuperAlgebra {
        &self.parent
    }

    /// Parent indices of the members, in subalgebra order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// The subalgebra as an algebra in its own right, indexed by member position.
    pub fn algebra(&self) -> &LieSuperAlgebra {
        &self.algebra
    }

    /// The parent algebra as a module over the subalgebra.
    pub fn adjoint_action(&self) -> GModuleAction {
        let action = self
            .members
            .iter()
            .map(|&i| {
                (0..self.parent.dim())
                    .map(|l| self.parent.bracket_ref(i, l).clone())
                    .collect()
            })
            .collect();
        GModuleAction {
            names: self.parent.names().to_vec(),
            action,
            grading: self.parent.grading().map(|w| w.to_vec()),
        }
    }
}

/// `b_i · v_l = Σ a_{il}^{l'} v_{l'}` for a module over some algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GModuleAction {
    names: Vec<String>,
    action: Vec<Vec<SparseVector>>,
    grading: Option<Vec<i64>>,
}

impl GModuleAction {
    /// Builds an action of `g` and checks the module axiom (and weights, if given).
    pub fn new(
        g: &LieSuperAlgebra,
        names: Vec<String>,
        action: Vec<Vec<SparseVector>>,
        grading: Option<Vec<i64>>,
    ) -> Result<Self, AlgebraError> {
        let module = Self::new_unchecked(g, names, action, grading)?;
        let violations = module.validate(g);
        if violations.is_empty() {
            Ok(module)
        } else {
            Err(AlgebraError::Invalid(violations))
        }
    }

    pub fn new_unchecked(
        g: &LieSuperAlgebra,
        names: Vec<String>,
        action: Vec<Vec<SparseVector>>,
        grading: Option<Vec<i64>>,
    ) -> Result<Self, AlgebraError> {
        let n = names.len();
        if n == 0 {
            return Err(AlgebraError::Empty);
        }
        check_names(&names)?;
        check_len("action rows", g.dim(), action.len())?;
        for row in &action {
            check_len("action columns", n, row.len())?;
            for v in row {
                for k in v.support() {
                    check_index(k, n)?;
                }
            }
        }
        if let Some(w) = &grading {
            check_len("module grading", n, w.len())?;
        }
        Ok(GModuleAction {
            names,
            action,
            grading,
        })
    }

    /// The zero action of `g` on a space with the given basis names.
    pub fn trivial(g: &LieSuperAlgebra, names: Vec<String>) -> Result<Self, AlgebraError> {
        let n = names.len();
        Self::new_unchecked(g, names, vec![vec![SparseVector::new(); n]; g.dim()], None)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Dimension of the algebra this action is defined for.
    pub fn acting_dim(&self) -> usize {
        self.action.len()
    }

    pub fn name(&self, l: usize) -> &str {
        &self.names[l]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn grading(&self) -> Option<&[i64]> {
        self.grading.as_deref()
    }

    pub fn with_grading(mut self, grading: Option<Vec<i64>>) -> Result<Self, AlgebraError> {
        if let Some(w) = &grading {
            check_len("module grading", self.dim(), w.len())?;
        }
        self.grading = grading;
        Ok(self)
    }

    pub fn action(&self, x: usize, l: usize) -> Result<&SparseVector, AlgebraError> {
        check_index(x, self.action.len())?;
        check_index(l, self.dim())?;
        Ok(&self.action[x][l])
    }

    pub(crate) fn action_ref(&self, x: usize, l: usize) -> &SparseVector {
        &self.action[x][l]
    }

    /// `b_x · v` for a vector `v` of the module.
    pub fn act(&self, x: usize, v: &SparseVector) -> SparseVector {
        let mut out = SparseVector::new();
        for (l, c) in v.iter() {
            out.add_scaled(&self.action[x][l], c);
        }
        out
    }

    /// Module axiom and weight violations with respect to `g`.
    pub fn validate(&self, g: &LieSuperAlgebra) -> Vec<Violation> {
        let mut out = Vec::new();
        let gd = g.dim();
        if self.action.len() != gd {
            return vec![Violation::ModuleAxiom {
                x: gd,
                y: gd,
                v: 0,
                residual: SparseVector::new(),
            }];
        }
        for x in 0..gd {
            for y in 0..gd {
                let bxy = g.bracket_ref(x, y);
                for v in 0..self.dim() {
                    let uv = SparseVector::unit(v);
                    let mut r = SparseVector::new();
                    for (z, c) in bxy.iter() {
                        r.add_scaled(&self.action[z][v], c);
                    }
                    r.add_scaled(&self.act(x, &self.action[y][v]), &-Scalar::one());
                    r.add_scaled(
                        &self.act(y, &self.act(x, &uv)),
                        &koszul(g.parity(x), g.parity(y)),
                    );
                    if !r.is_zero() {
                        out.push(Violation::ModuleAxiom {
                            x,
                            y,
                            v,
                            residual: r,
                        });
                    }
                }
            }
        }
        if let (Some(wg), Some(wv)) = (g.grading(), self.grading()) {
            for (x, row) in self.action.iter().enumerate().take(gd) {
                for (v, image) in row.iter().enumerate() {
                    for w in image.support() {
                        if wv[w] != wg[x] + wv[v] {
                            out.push(Violation::ModuleGrading { x, v, w });
                        }
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn sv(pairs: &[(usize, i64)]) -> SparseVector {
        SparseVector::from_pairs(pairs.iter().map(|&(i, c)| (i, Scalar::from(c))))
    }

    fn sl2() -> LieSuperAlgebra {
        // e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f
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

    #[test]
    fn skew_symmetric_fill() {
        let g = sl2();
        assert_eq!(g.bracket(1, 0).unwrap(), &sv(&[(2, -1)]));
        assert_eq!(g.bracket(0, 2).unwrap(), &sv(&[(0, -2)]));
        assert!(g.bracket(0, 0).unwrap().is_zero());
        assert!(matches!(
            g.bracket(0, 3),
            Err(AlgebraError::IndexOutOfRange { index: 3, dim: 3 })
        ));
    }

    #[test]
    fn skew_violation_reported() {
        let err = LieSuperAlgebra::new(
            names(&["e1", "e2"]),
            vec![Parity::Even; 2],
            vec![(0, 1, sv(&[(0, 1)])), (1, 0, sv(&[(0, 1)]))],
            None,
        )
        .unwrap_err();
        let AlgebraError::Invalid(v) = err else {
            panic!("expected violations")
        };
        assert!(v
            .iter()
            .any(|x| matches!(x, Violation::SkewSymmetry { i: 0, j: 1, .. })));
    }

    #[test]
    fn jacobi_violation_reported() {
        let alg = LieSuperAlgebra::new_unchecked(
            names(&["e1", "e2", "e3"]),
            vec![Parity::Even; 3],
            vec![(0, 1, sv(&[(2, 1)])), (0, 2, sv(&[(0, 1)]))],
            None,
        )
        .unwrap();
        let v = alg.validate();
        assert_eq!(
            v,
            vec![Violation::Jacobi {
                i: 0,
                j: 1,
                k: 2,
                residual: sv(&[(2, -1)])
            }]
        );
    }

    #[test]
    fn super_brackets() {
        // e even, o odd, [o,o] = e
        let alg = LieSuperAlgebra::new(
            names(&["e", "o"]),
            vec![Parity::Even, Parity::Odd],
            vec![(1, 1, sv(&[(0, 1)]))],
            None,
        )
        .unwrap();
        assert!(alg.is_super());
        assert_eq!(alg.bracket(1, 1).unwrap(), &sv(&[(0, 1)]));
        let bad = LieSuperAlgebra::new(
            names(&["e", "o"]),
            vec![Parity::Even, Parity::Odd],
            vec![(1, 1, sv(&[(1, 1)]))],
            None,
        );
        assert!(matches!(bad, Err(AlgebraError::Invalid(_))));
    }

    #[test]
    fn grading_checked() {
        let g = sl2().with_grading(Some(vec![1, -1, 0])).unwrap();
        assert!(g.validate().is_empty());
        let g = sl2().with_grading(Some(vec![1, 1, 0])).unwrap();
        assert!(g
            .validate()
            .iter()
            .any(|v| matches!(v, Violation::Grading { .. })));
    }

    #[test]
    fn subalgebra_and_adjoint() {
        let g = sl2();
        let b = Subalgebra::new(&g, &[2, 0]).unwrap();
        assert_eq!(b.members(), &[2, 0]);
        assert_eq!(b.algebra().bracket(0, 1).unwrap(), &sv(&[(1, 2)]));
        let ad = b.adjoint_action();
        assert_eq!(ad.dim(), 3);
        assert_eq!(ad.action(1, 1).unwrap(), &sv(&[(2, 1)]));
        assert!(ad.validate(b.algebra()).is_empty());
        assert!(matches!(
            Subalgebra::new(&g, &[0, 1]),
            Err(AlgebraError::Invalid(_))
        ));
    }

    #[test]
    fn abelian_adjoint_is_zero() {
        let a = LieSuperAlgebra::new(names(&["a", "b"]), vec![Parity::Even; 2], vec![], None)
            .unwrap();
        let ad = Subalgebra::full(&a).adjoint_action();
        for x in 0..2 {
            for l in 0..2 {
                assert!(ad.action(x, l).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn module_axiom_checked() {
        let g = sl2();
        // natural 2-dim representation
        let good = vec![
            vec![SparseVector::new(), sv(&[(0, 1)])],
            vec![sv(&[(1, 1)]), SparseVector::new()],
            vec![sv(&[(0, 1)]), sv(&[(1, -1)])],
        ];
        assert!(GModuleAction::new(&g, names(&["u", "w"]), good, None).is_ok());
        let bad = vec![
            vec![SparseVector::new(), sv(&[(0, 1)])],
            vec![sv(&[(1, 1)]), SparseVector::new()],
            vec![sv(&[(0, 1)]), sv(&[(1, 1)])],
        ];
        assert!(GModuleAction::new(&g, names(&["u", "w"]), bad, None).is_err());
    }
}
