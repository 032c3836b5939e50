//! Dense exact linear algebra for cross-checking the Gröbner pipeline.
//!
//! Everything here is written from scratch against the algebra and module
//! tables: its own cochain enumeration, its own evaluation of cochains on
//! arbitrary argument sequences, the textbook differential with Koszul signs,
//! and fraction-free elimination for ranks. Only [`Scalar`] and the structure-constant
//! containers are shared with `lsac`.

pub mod random;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use lsac::algebra::{GModuleAction, LieSuperAlgebra, Parity};
use lsac::cochain::OddConvention;
use lsac::scalar::Scalar;

/// A dense matrix over the rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        DenseMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.entries[i * self.cols + j] = value;
    }

    fn add_at(&mut self, i: usize, j: usize, value: &Scalar) {
        self.entries[i * self.cols + j] += value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = DenseMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Rank over the rationals by fraction-free elimination.
///
/// Rows are scaled to primitive integer vectors. Eliminating column `c` replaces
/// each row `a_i` with `a_i[c] != 0` by `a_r[c]·a_i − a_i[c]·a_r` and divides out
/// the gcd of its entries, so entries stay small and zero rows are untouched.
pub fn rank(m: &DenseMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, s| acc.lcm(s.denominator()));
            row.iter()
                .map(|s| s.numerator() * (&l / s.denominator()))
                .collect()
        })
        .filter(|r: &Vec<BigInt>| r.iter().any(|x| !x.is_zero()))
        .collect();
    let rows = a.len();
    let mut r = 0;
    for c in 0..m.cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot = &top[r];
        for row in rest.iter_mut().filter(|row| !row[c].is_zero()) {
            let f = row[c].clone();
            for j in c..m.cols {
                if pivot[j].is_zero() {
                    if !row[j].is_zero() {
                        row[j] = &row[j] * &pivot[c];
                    }
                } else {
                    row[j] = &row[j] * &pivot[c] - &f * &pivot[j];
                }
            }
            let g = row[c..]
                .iter()
                .fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !g.is_zero() && !g.is_one() {
                for x in row[c..].iter_mut() {
                    *x = &*x / &g;
                }
            }
        }
        r += 1;
    }
    r
}

/// Reduced row echelon form over the rationals; returns the pivot columns.
pub fn rref(m: &DenseMatrix) -> (DenseMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        for j in 0..a.cols {
            a.entries.swap(r * a.cols + j, p * a.cols + j);
        }
        let inv = a.get(r, c).inv().expect("pivot is nonzero");
        for j in c..a.cols {
            let v = a.get(r, j) * &inv;
            a.set(r, j, v);
        }
        for i in 0..a.rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..a.cols {
                if a.get(r, j).is_zero() {
                    continue;
                }
                let v = a.get(i, j) - &(&f * a.get(r, j));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// A basis of the right kernel, one vector per free column, in column order.
pub fn kernel_basis(m: &DenseMatrix) -> Vec<Vec<Scalar>> {
    let (r, pivots) = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(); m.cols];
            v[f] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            v
        })
        .collect()
}

/// Basis cochains of degree `k`: a sorted argument list and a target index.
///
/// Arguments are sorted with even before odd and by index within a parity.
/// Order: more even arguments first, then lexicographic, then target.
pub fn cochain_basis(
    g: &LieSuperAlgebra,
    n: usize,
    k: usize,
    convention: OddConvention,
) -> Vec<(Vec<usize>, usize)> {
    let evens: Vec<usize> = (0..g.dim()).filter(|&i| !g.parity(i).is_odd()).collect();
    let odds: Vec<usize> = (0..g.dim()).filter(|&i| g.parity(i).is_odd()).collect();
    let mut out = Vec::new();
    for r in (0..=k.min(evens.len())).rev() {
        let ev = subsets(&evens, r, false);
        let od = subsets(&odds, k - r, convention == OddConvention::Symmetric);
        for e in &ev {
            for o in &od {
                let args: Vec<usize> = e.iter().chain(o).copied().collect();
                for l in 0..n {
                    out.push((args.clone(), l));
                }
            }
        }
    }
    out
}

fn subsets(items: &[usize], r: usize, repeat: bool) -> Vec<Vec<usize>> {
    fn go(items: &[usize], r: usize, repeat: bool, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, r, repeat, if repeat { i } else { i + 1 }, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, r, repeat, 0, &mut Vec::new(), &mut out);
    out
}

fn bit(p: Parity) -> usize {
    usize::from(p.is_odd())
}

/// Sorts `args` by bubble sort, tracking the super sign `-(-1)^{|a||b|}` of each
/// adjacent swap. `None` when the tuple is killed by skew-symmetry.
fn sort_args(g: &LieSuperAlgebra, args: &[usize], convention: OddConvention) -> Option<(Vec<usize>, bool)> {
    let key = |a: usize| (bit(g.parity(a)), a);
    let mut v = args.to_vec();
    let mut negative = false;
    for pass in 0..v.len() {
        for j in 0..v.len().saturating_sub(pass + 1) {
            if key(v[j]) > key(v[j + 1]) {
                if bit(g.parity(v[j])) * bit(g.parity(v[j + 1])) == 0 {
                    negative = !negative;
                }
                v.swap(j, j + 1);
            }
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] && (!g.parity(w[0]).is_odd() || convention == OddConvention::Strict) {
            return None;
        }
    }
    Some((v, negative))
}

/// Matrix of the differential `C^k → C^{k+1}` in the bases of [`cochain_basis`].
///
/// For homogeneous `x_1, …, x_{k+1}` the value of `dΦ` is
/// `Σ_i σ_i x_i·Φ(…x̂_i…) − Σ_{i<j} σ_{ij} Φ([x_i, x_j], …x̂_i…x̂_j…)`, where
/// `σ_i` and `σ_{ij}` are the signs of moving `x_i` (resp. `x_i, x_j`) to the
/// front of the sequence.
pub fn differential_matrix(
    g: &LieSuperAlgebra,
    v: &GModuleAction,
    k: usize,
    convention: OddConvention,
) -> DenseMatrix {
    let n = v.dim();
    let cols = cochain_basis(g, n, k, convention);
    let rows = cochain_basis(g, n, k + 1, convention);
    let col_of: std::collections::HashMap<(Vec<usize>, usize), usize> =
        cols.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let mut m = DenseMatrix::zeros(rows.len(), cols.len());
    let p = |a: usize| bit(g.parity(a));
    let one = Scalar::one();
    let minus = -Scalar::one();

    // Adds `coeff * Φ(args)_target` to row `row`, for each column.
    let deposit = |m: &mut DenseMatrix, row: usize, args: &[usize], target: usize, coeff: &Scalar| {
        if let Some((sorted, neg)) = sort_args(g, args, convention) {
            if let Some(&c) = col_of.get(&(sorted, target)) {
                let s = if neg { -coeff.clone() } else { coeff.clone() };
                m.add_at(row, c, &s);
            }
        }
    };

    for (row, (xs, l)) in rows.iter().enumerate() {
        let l = *l;
        for i in 0..xs.len() {
            let before: usize = xs[..i].iter().map(|&a| p(a)).sum();
            let flips = i + p(xs[i]) * before;
            let sigma_i = if flips.is_multiple_of(2) { &one } else { &minus };
            let rest: Vec<usize> = xs.iter().enumerate().filter(|&(t, _)| t != i).map(|(_, &a)| a).collect();
            // x_i · Φ(rest): component l of x_i acting on Φ(rest) = Σ_u Φ(rest)_u x_i·v_u.
            for u in 0..n {
                let act = v.action(xs[i], u).expect("index in range");
                let c = act.get(l);
                if !c.is_zero() {
                    deposit(&mut m, row, &rest, u, &(sigma_i * &c));
                }
            }
            for j in i + 1..xs.len() {
                let before_j: usize = xs[..j].iter().enumerate().filter(|&(t, _)| t != i).map(|(_, &a)| p(a)).sum();
                let flips_ij = flips + (j - 1) + p(xs[j]) * before_j;
                let sigma_ij = if flips_ij.is_multiple_of(2) { &minus } else { &one };
                let rest2: Vec<usize> = xs
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != i && t != j)
                    .map(|(_, &a)| a)
                    .collect();
                let br = g.bracket(xs[i], xs[j]).expect("index in range");
                for (z, c) in br.iter() {
                    let mut args = vec![z];
                    args.extend_from_slice(&rest2);
                    deposit(&mut m, row, &args, l, &(sigma_ij * c));
                }
            }
        }
    }
    m
}

/// `(dim C, dim Z, dim B, dim H)` of `H^k` from ranks of the differentials.
///
/// The complex starts at `C^1`, so `B^1 = 0`.
pub fn cohomology_dims(
    g: &LieSuperAlgebra,
    v: &GModuleAction,
    k: usize,
    convention: OddConvention,
) -> (usize, usize, usize, usize) {
    let d = differential_matrix(g, v, k, convention);
    let c = d.cols();
    let z = c - rank(&d);
    let b = if k <= 1 {
        0
    } else {
        rank(&differential_matrix(g, v, k - 1, convention))
    };
    (c, z, b, z - b)
}
