//! Random valid Lie algebras as subalgebras of small matrix algebras.
//!
//! A case is built from random integer matrices inside one of three ambient
//! spaces (upper triangular 3×3, strictly upper triangular 4×4, all of 2×2),
//! closed under the commutator. The subalgebra is generated first so that its
//! basis is a prefix of the algebra's basis.

use rand::Rng;

use lsac::algebra::{GModuleAction, LieSuperAlgebra, Parity, SparseVector, Subalgebra};
use lsac::scalar::Scalar;

use crate::{rank, rref, DenseMatrix};

type Matrix = Vec<Vec<Scalar>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    UpperTriangular3,
    StrictlyUpper4,
    Gl2,
}

impl Ambient {
    fn size(self) -> usize {
        match self {
            Ambient::UpperTriangular3 => 3,
            Ambient::StrictlyUpper4 => 4,
            Ambient::Gl2 => 2,
        }
    }

    fn allows(self, i: usize, j: usize) -> bool {
        match self {
            Ambient::UpperTriangular3 => i <= j,
            Ambient::StrictlyUpper4 => i < j,
            Ambient::Gl2 => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleKind {
    /// The subalgebra acting on the whole algebra by the bracket.
    Adjoint,
    /// The subalgebra acting on column vectors.
    Natural,
}

#[derive(Debug, Clone)]
pub struct RandomCase {
    pub ambient: Ambient,
    pub algebra: LieSuperAlgebra,
    pub sub: Subalgebra,
    pub module: GModuleAction,
    pub kind: ModuleKind,
}

fn random_matrix<R: Rng>(rng: &mut R, ambient: Ambient) -> Matrix {
    let s = ambient.size();
    (0..s)
        .map(|i| {
            (0..s)
                .map(|j| {
                    if ambient.allows(i, j) && rng.gen_bool(0.5) {
                        Scalar::from_integer(rng.gen_range(-2..=2))
                    } else {
                        Scalar::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    let s = a.len();
    (0..s)
        .map(|i| {
            (0..s)
                .map(|j| {
                    (0..s)
                        .map(|k| &a[i][k] * &b[k][j] - &b[i][k] * &a[k][j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

fn flat(m: &Matrix) -> Vec<Scalar> {
    m.iter().flatten().cloned().collect()
}

fn in_span(basis: &[Matrix], m: &Matrix) -> bool {
    let mut rows: Vec<Vec<Scalar>> = basis.iter().map(flat).collect();
    let r = rank(&DenseMatrix::from_rows(rows.clone()));
    rows.push(flat(m));
    rank(&DenseMatrix::from_rows(rows)) == r
}

/// Extends `basis` by the vectors of `extra` and all commutators until closed.
fn close(mut basis: Vec<Matrix>, extra: Vec<Matrix>) -> Vec<Matrix> {
    let mut queue = extra;
    loop {
        while let Some(m) = queue.pop() {
            if m.iter().flatten().all(Scalar::is_zero) || (!basis.is_empty() && in_span(&basis, &m)) {
                continue;
            }
            basis.push(m);
        }
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let c = commutator(&basis[i], &basis[j]);
                if !c.iter().flatten().all(Scalar::is_zero) && !in_span(&basis, &c) {
                    queue.push(c);
                }
            }
        }
        if queue.is_empty() {
            return basis;
        }
    }
}

/// Coordinates of `m` in `basis`, which must be linearly independent.
fn coordinates(basis: &[Matrix], m: &Matrix) -> Vec<Scalar> {
    let entries = flat(m).len();
    let b = basis.len();
    let rows: Vec<Vec<Scalar>> = (0..entries)
        .map(|e| {
            let mut row: Vec<Scalar> = basis.iter().map(|x| flat(x)[e].clone()).collect();
            row.push(flat(m)[e].clone());
            row
        })
        .collect();
    let (r, pivots) = rref(&DenseMatrix::from_rows(rows));
    assert!(!pivots.contains(&b), "matrix outside the span");
    let mut out = vec![Scalar::zero(); b];
    for (row, &p) in pivots.iter().enumerate() {
        out[p] = r.get(row, b).clone();
    }
    out
}

fn sparse(coords: &[Scalar]) -> SparseVector {
    SparseVector::from_pairs(
        coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone())),
    )
}

/// Draws one case. The algebra has dimension at most 6.
pub fn random_case<R: Rng>(rng: &mut R) -> RandomCase {
    let ambient = match rng.gen_range(0..3) {
        0 => Ambient::UpperTriangular3,
        1 => Ambient::StrictlyUpper4,
        _ => Ambient::Gl2,
    };
    let s = ambient.size();
    loop {
        let sub_gens: Vec<Matrix> = (0..rng.gen_range(1..=2)).map(|_| random_matrix(rng, ambient)).collect();
        let sub_basis = close(Vec::new(), sub_gens);
        if sub_basis.is_empty() {
            continue;
        }
        let gens: Vec<Matrix> = (0..rng.gen_range(0..=2)).map(|_| random_matrix(rng, ambient)).collect();
        let basis = close(sub_basis.clone(), gens);
        if basis.len() > 6 {
            continue;
        }
        let m = basis.len();
        let names: Vec<String> = (1..=m).map(|i| format!("e{i}")).collect();
        let mut brackets = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let c = commutator(&basis[i], &basis[j]);
                let v = sparse(&coordinates(&basis, &c));
                if !v.is_zero() {
                    brackets.push((i, j, v));
                }
            }
        }
        let algebra = LieSuperAlgebra::new(names, vec![Parity::Even; m], brackets, None)
            .expect("matrix commutators satisfy the axioms");
        let members: Vec<usize> = (0..sub_basis.len()).collect();
        let sub = Subalgebra::new(&algebra, &members).expect("generated subalgebra is closed");
        let kind = if rng.gen_bool(0.5) {
            ModuleKind::Adjoint
        } else {
            ModuleKind::Natural
        };
        let module = match kind {
            ModuleKind::Adjoint => sub.adjoint_action(),
            ModuleKind::Natural => {
                let action = members
                    .iter()
                    .map(|&x| {
                        let a = &basis[x];
                        (0..s)
                            .map(|u| sparse(&(0..s).map(|l| a[l][u].clone()).collect::<Vec<_>>()))
                            .collect()
                    })
                    .collect();
                let names = (1..=s).map(|i| format!("v{i}")).collect();
                GModuleAction::new(sub.algebra(), names, action, None)
                    .expect("matrices act on column vectors")
            }
        };
        return RandomCase {
            ambient,
            algebra,
            sub,
            module,
            kind,
        };
    }
}
