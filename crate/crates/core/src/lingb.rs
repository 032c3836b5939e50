//! Gröbner bases of ideals generated by homogeneous linear forms.
//!
//! Variables are identified by their position in a [`VariableUniverse`];
//! position 0 is the greatest variable of the lexicographic order. For
//! degree-one generators the reduced Gröbner basis is the monic, fully
//! reduced echelon form of the coefficient matrix, so everything here is
//! sparse exact elimination on [`LinearForm`]s.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinGbError {
    #[error("duplicate variable name {0:?}")]
    DuplicateVariable(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("cannot parse linear form {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("kept variable {kept} does not rank below dropped variable {dropped}")]
    OrderViolation { kept: usize, dropped: usize },
    #[error("subspace is not contained in the ambient space (generator {0})")]
    NotContained(usize),
    #[error("quotient basis has {got} elements, expected {expected}")]
    CardinalityMismatch { expected: usize, got: usize },
    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

/// An ordered list of variable names; earlier names are greater.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableUniverse {
    names: Vec<String>,
    lookup: HashMap<String, usize>,
}

impl VariableUniverse {
    pub fn new(names: Vec<String>) -> Result<Self, LinGbError> {
        let mut lookup = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if lookup.insert(n.clone(), i).is_some() {
                return Err(LinGbError::DuplicateVariable(n.clone()));
            }
        }
        Ok(VariableUniverse { names, lookup })
    }

    /// `prefix1 ≻ prefix2 ≻ … ≻ prefix{n}`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")).collect())
            .expect("numbered names are distinct")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    /// `a ≻ b` in this universe.
    pub fn greater(&self, a: usize, b: usize) -> bool {
        a < b
    }

    /// Concatenation: every variable of `self` ranks above every variable of `lower`.
    pub fn above(&self, lower: &VariableUniverse) -> Result<Self, LinGbError> {
        let mut names = self.names.clone();
        names.extend(lower.names.iter().cloned());
        Self::new(names)
    }
}

/// A homogeneous linear form `Σ c_v x_v` with nonzero coefficients, sorted by
/// variable position, so the first term is the leading term.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LinearForm {
    terms: Vec<(usize, Scalar)>,
}

impl LinearForm {
    pub fn zero() -> Self {
        LinearForm { terms: Vec::new() }
    }

    pub fn var(v: usize) -> Self {
        LinearForm {
            terms: vec![(v, Scalar::one())],
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Scalar)>>(terms: I) -> Self {
        let mut map: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (v, c) in terms {
            *map.entry(v).or_default() += &c;
        }
        LinearForm {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn from_dense(coeffs: &[Scalar]) -> Self {
        LinearForm {
            terms: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(v, c)| (v, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, n: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); n];
        for (v, c) in &self.terms {
            out[*v] = c.clone();
        }
        out
    }

    pub fn terms(&self) -> &[(usize, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, v: usize) -> Scalar {
        match self.terms.binary_search_by_key(&v, |(w, _)| *w) {
            Ok(p) => self.terms[p].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.terms.first().map(|(v, c)| (*v, c))
    }

    pub fn leading_var(&self) -> Option<usize> {
        self.terms.first().map(|(v, _)| *v)
    }

    pub fn variables(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.iter().map(|(v, _)| *v)
    }

    pub fn scale(&mut self, s: &Scalar) {
        if s.is_zero() {
            self.terms.clear();
            return;
        }
        for (_, c) in &mut self.terms {
            *c *= s;
        }
    }

    pub fn scaled(&self, s: &Scalar) -> LinearForm {
        let mut f = self.clone();
        f.scale(s);
        f
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> LinearForm {
        match self.leading() {
            Some((_, c)) => self.scaled(&c.inv().expect("stored coefficients are nonzero")),
            None => LinearForm::zero(),
        }
    }

    /// `self += s * other`, by a sorted merge.
    pub fn add_scaled(&mut self, other: &LinearForm, s: &Scalar) {
        if s.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = std::mem::take(&mut self.terms).into_iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((va, _)), Some((vb, _))) if va < vb => out.push(a.next().unwrap()),
                (Some((va, _)), Some((vb, _))) if va > vb => {
                    let (v, c) = b.next().unwrap();
                    out.push((*v, c * s));
                }
                (Some(_), Some(_)) => {
                    let (v, ca) = a.next().unwrap();
                    let (_, cb) = b.next().unwrap();
                    let c = ca + &(cb * s);
                    if !c.is_zero() {
                        out.push((v, c));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (v, c) = b.next().unwrap();
                    out.push((*v, c * s));
                }
                (None, None) => break,
            }
        }
        self.terms = out;
    }

    pub fn add(&self, other: &LinearForm) -> LinearForm {
        let mut f = self.clone();
        f.add_scaled(other, &Scalar::one());
        f
    }

    pub fn sub(&self, other: &LinearForm) -> LinearForm {
        let mut f = self.clone();
        f.add_scaled(other, &-Scalar::one());
        f
    }

    /// Renames every variable through `f`; the result is re-sorted.
    pub fn reindex(&self, f: impl Fn(usize) -> usize) -> LinearForm {
        LinearForm::from_terms(self.terms.iter().map(|(v, c)| (f(*v), c.clone())))
    }

    /// Keeps only the variables accepted by `f`, renamed to the returned index.
    pub fn filter_map_vars(&self, f: impl Fn(usize) -> Option<usize>) -> LinearForm {
        LinearForm::from_terms(
            self.terms
                .iter()
                .filter_map(|(v, c)| f(*v).map(|w| (w, c.clone()))),
        )
    }

    pub fn display<'a>(&'a self, universe: &'a VariableUniverse) -> DisplayForm<'a> {
        DisplayForm {
            form: self,
            universe,
        }
    }

    /// Parses text such as `x2 + 3*x4 - 2*x5`, `1/3*x4` or `-y1 + y2`.
    pub fn parse(input: &str, universe: &VariableUniverse) -> Result<LinearForm, LinGbError> {
        let perr = |reason: &str| LinGbError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(perr("empty input"));
        }
        if s == "0" {
            return Ok(LinearForm::zero());
        }
        let mut terms = Vec::new();
        let mut rest = s.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'+' => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ if first => (false, rest),
                _ => return Err(perr("expected '+' or '-' between terms")),
            };
            first = false;
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(perr("empty term"));
            }
            let (coeff, var) = match term.rsplit_once('*') {
                Some((c, v)) => (
                    c.parse::<Scalar>().map_err(|_| perr("bad coefficient"))?,
                    v,
                ),
                None => {
                    if term.starts_with(|c: char| c.is_ascii_digit()) {
                        return Err(perr("constant terms are not allowed"));
                    }
                    (Scalar::one(), term)
                }
            };
            let v = universe
                .index_of(var)
                .ok_or_else(|| LinGbError::UnknownVariable(var.to_string()))?;
            terms.push((v, if negative { -coeff } else { coeff }));
        }
        Ok(LinearForm::from_terms(terms))
    }
}

pub struct DisplayForm<'a> {
    form: &'a LinearForm,
    universe: &'a VariableUniverse,
}

impl fmt::Display for DisplayForm<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.form.is_zero() {
            return f.write_str("0");
        }
        for (i, (v, c)) in self.form.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            f.write_str(self.universe.name(*v))?;
        }
        Ok(())
    }
}

/// A reduced Gröbner basis of linear forms: monic, pairwise distinct leading
/// variables, and no leading variable occurring in any other element.
/// Elements are stored in decreasing order of their leading variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReducedLinearBasis {
    forms: Vec<LinearForm>,
    lead_index: HashMap<usize, usize>,
}

impl ReducedLinearBasis {
    fn from_sorted(forms: Vec<LinearForm>) -> Self {
        let lead_index = forms
            .iter()
            .enumerate()
            .map(|(i, f)| (f.leading_var().expect("basis forms are nonzero"), i))
            .collect();
        ReducedLinearBasis { forms, lead_index }
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn leading_variables(&self) -> Vec<usize> {
        self.forms.iter().filter_map(|f| f.leading_var()).collect()
    }

    pub fn is_leading(&self, v: usize) -> bool {
        self.lead_index.contains_key(&v)
    }

    /// The element whose leading variable is `v`.
    pub fn form_with_lead(&self, v: usize) -> Option<&LinearForm> {
        self.lead_index.get(&v).map(|&i| &self.forms[i])
    }

    /// Checks the three defining properties of a reduced basis.
    pub fn is_reduced(&self) -> bool {
        let leads: HashSet<usize> = self.forms.iter().filter_map(|f| f.leading_var()).collect();
        leads.len() == self.forms.len()
            && self.forms.iter().all(|f| {
                f.leading().is_some_and(|(_, c)| c.is_one())
                    && f.variables().skip(1).all(|v| !leads.contains(&v))
            })
            && self
                .forms
                .windows(2)
                .all(|w| w[0].leading_var() < w[1].leading_var())
    }
}

/// The reduced Gröbner basis of the ideal generated by `forms`.
///
/// Generators are processed in order of their leading variable (greatest
/// first), ties broken by sparsity; each is reduced against the pivots found
/// so far and becomes a new pivot if anything survives. A final
/// back-substitution pass clears pivot variables from every tail.
pub fn reduce(forms: &[LinearForm]) -> ReducedLinearBasis {
    let mut order: Vec<&LinearForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    order.sort_by_key(|f| (f.leading_var(), f.nnz()));
    let mut pivots: BTreeMap<usize, LinearForm> = BTreeMap::new();
    for f in order {
        let mut g = f.clone();
        while let Some((lead, c)) = g.leading() {
            match pivots.get(&lead) {
                Some(p) => {
                    let c = -c;
                    g.add_scaled(p, &c);
                }
                None => {
                    pivots.insert(lead, g.monic());
                    break;
                }
            }
        }
    }
    // Pivots with a smaller leading variable are fully reduced first.
    let mut reduced: BTreeMap<usize, LinearForm> = BTreeMap::new();
    for (lead, p) in pivots.into_iter().rev() {
        let mut g = p.clone();
        for (v, c) in p.terms.iter().skip(1) {
            if let Some(q) = reduced.get(v) {
                g.add_scaled(q, &-c);
            }
        }
        reduced.insert(lead, g);
    }
    ReducedLinearBasis::from_sorted(reduced.into_values().collect())
}

/// The remainder of `f` on division by `basis`: every leading variable of the
/// basis is replaced by the negated tail of its form.
pub fn normal_form(f: &LinearForm, basis: &ReducedLinearBasis) -> LinearForm {
    let mut out = f.clone();
    for (v, c) in f.terms() {
        if let Some(g) = basis.form_with_lead(*v) {
            out.add_scaled(g, &-c);
        }
    }
    out
}

/// `Σ_i x_i ⊗ h_i(y)`: a bilinear expression, stored as a map from each
/// `x`-variable to its coefficient form in the `y`-variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BilinearForm {
    pub rows: BTreeMap<usize, LinearForm>,
}

impl BilinearForm {
    /// `x_1 y_1 + … + x_n y_n`.
    pub fn diagonal(n: usize) -> Self {
        BilinearForm {
            rows: (0..n).map(|i| (i, LinearForm::var(i))).collect(),
        }
    }

    /// Renders as `(x4 - x5)*y1 + …`, grouped by the `y`-variables.
    pub fn display_by_y(&self, x: &VariableUniverse, y: &VariableUniverse) -> String {
        let mut by_y: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
        for (xv, h) in &self.rows {
            for (yv, c) in h.terms() {
                by_y.entry(*yv).or_default().push((*xv, c.clone()));
            }
        }
        if by_y.is_empty() {
            return "0".into();
        }
        by_y.into_iter()
            .map(|(yv, terms)| {
                let f = LinearForm::from_terms(terms);
                let text = f.display(x).to_string();
                if f.nnz() == 1 && f.terms()[0].1.is_one() {
                    format!("{text}*{}", y.name(yv))
                } else {
                    format!("({text})*{}", y.name(yv))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Normal form of a bilinear expression with respect to a basis in the
/// `x`-variables, treating the `y`-variables as inert coefficients.
pub fn bilinear_normal_form(b: &BilinearForm, basis: &ReducedLinearBasis) -> BilinearForm {
    let mut rows = b.rows.clone();
    for (xv, h) in &b.rows {
        if let Some(g) = basis.form_with_lead(*xv) {
            rows.remove(xv);
            for (tv, c) in g.terms().iter().skip(1) {
                let entry = rows.entry(*tv).or_default();
                entry.add_scaled(h, &-c);
            }
        }
    }
    rows.retain(|_, h| !h.is_zero());
    BilinearForm { rows }
}

/// Keeps the basis elements that only involve variables `>= first_kept`.
///
/// Every kept variable must rank below every dropped variable; here that means
/// `keep` must be a final segment of the universe.
pub fn eliminate(
    basis: &ReducedLinearBasis,
    keep: &[usize],
    universe_len: usize,
) -> Result<ReducedLinearBasis, LinGbError> {
    let kept: HashSet<usize> = keep.iter().copied().collect();
    let dropped: Vec<usize> = (0..universe_len).filter(|v| !kept.contains(v)).collect();
    if let (Some(&k), Some(&d)) = (keep.iter().min(), dropped.iter().max()) {
        if k < d {
            return Err(LinGbError::OrderViolation {
                kept: k,
                dropped: d,
            });
        }
    }
    Ok(ReducedLinearBasis::from_sorted(
        basis
            .forms
            .iter()
            .filter(|f| f.variables().all(|v| kept.contains(&v)))
            .cloned()
            .collect(),
    ))
}

fn vector_to_form(v: &[Scalar], n: usize) -> Result<LinearForm, LinGbError> {
    if v.len() != n {
        return Err(LinGbError::LengthMismatch {
            expected: n,
            got: v.len(),
        });
    }
    Ok(LinearForm::from_dense(v))
}

/// A basis of the span of `vectors`, read off the reduced basis of the
/// corresponding forms `Σ v_i y_i`.
pub fn span_to_basis(vectors: &[Vec<Scalar>], n: usize) -> Result<Vec<Vec<Scalar>>, LinGbError> {
    let forms = vectors
        .iter()
        .map(|v| vector_to_form(v, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(reduce(&forms).forms().iter().map(|f| f.to_dense(n)).collect())
}

/// A basis of the solution space of the homogeneous equations `forms = 0`
/// in `n` unknowns, one vector per free variable (in decreasing order).
pub fn cartesian_to_basis(equations: &[LinearForm], n: usize) -> Vec<Vec<Scalar>> {
    cartesian_forms(&reduce(equations), n)
        .into_iter()
        .map(|f| f.to_dense(n))
        .collect()
}

/// Coefficient forms `h_j(y)` of `NF_G(Σ x_i y_i)` for each surviving `x_j`,
/// as sparse forms in the `y`-variables.
pub fn cartesian_forms(basis: &ReducedLinearBasis, n: usize) -> Vec<LinearForm> {
    let nf = bilinear_normal_form(&BilinearForm::diagonal(n), basis);
    nf.rows.into_values().collect()
}

/// Forms representing a basis of `span(V) / span(W)`, both given as forms.
///
/// The result is the reduced basis of `{ NF_{B_W}(f) : f ∈ B_V }`.
pub fn quotient_forms(
    v_forms: &[LinearForm],
    w_forms: &[LinearForm],
) -> Result<ReducedLinearBasis, LinGbError> {
    let bv = reduce(v_forms);
    let bw = reduce(w_forms);
    for (i, f) in bw.forms().iter().enumerate() {
        if !normal_form(f, &bv).is_zero() {
            return Err(LinGbError::NotContained(i));
        }
    }
    let images: Vec<LinearForm> = bv.forms().iter().map(|f| normal_form(f, &bw)).collect();
    let q = reduce(&images);
    let expected = bv.len() - bw.len();
    if q.len() != expected {
        return Err(LinGbError::CardinalityMismatch {
            expected,
            got: q.len(),
        });
    }
    Ok(q)
}

/// [`quotient_forms`] on coordinate vectors of length `n`.
pub fn quotient_basis(
    v_vectors: &[Vec<Scalar>],
    w_vectors: &[Vec<Scalar>],
    n: usize,
) -> Result<Vec<Vec<Scalar>>, LinGbError> {
    let vf = v_vectors
        .iter()
        .map(|v| vector_to_form(v, n))
        .collect::<Result<Vec<_>, _>>()?;
    let wf = w_vectors
        .iter()
        .map(|v| vector_to_form(v, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(quotient_forms(&vf, &wf)?
        .forms()
        .iter()
        .map(|f| f.to_dense(n))
        .collect())
}

impl FromStr for LinearForm {
    type Err = LinGbError;

    /// Parses forms over variables named `x1, x2, …` (any count).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let max = s
            .split(|c: char| !c.is_ascii_alphanumeric())
            .filter_map(|t| t.strip_prefix('x'))
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        LinearForm::parse(s, &VariableUniverse::numbered("x", max))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xs(n: usize) -> VariableUniverse {
        VariableUniverse::numbered("x", n)
    }

    fn lf(s: &str, u: &VariableUniverse) -> LinearForm {
        LinearForm::parse(s, u).unwrap()
    }

    fn show(b: &ReducedLinearBasis, u: &VariableUniverse) -> Vec<String> {
        b.forms().iter().map(|f| f.display(u).to_string()).collect()
    }

    fn q(n: i64) -> Scalar {
        Scalar::from(n)
    }

    #[test]
    fn parse_and_display_round_trip() {
        let u = xs(5);
        for s in ["x2 + 3*x4 - 2*x5", "1/3*x4", "-x1 + x3", "0"] {
            assert_eq!(lf(s, &u).display(&u).to_string(), s);
        }
        assert_eq!(lf("x4 + x2 - x4", &u).display(&u).to_string(), "x2");
        assert!(LinearForm::parse("x1 + 3", &u).is_err());
        assert!(LinearForm::parse("x9", &u).is_err());
        assert!(LinearForm::parse("x1 x2", &u).is_err());
    }

    #[test]
    fn worked_reduction() {
        let u = xs(5);
        let g = reduce(&[
            lf("x1 - x4 + x5", &u),
            lf("2*x1 + x2 + x4", &u),
            lf("-x3 + 2*x4 + x5", &u),
        ]);
        assert_eq!(
            show(&g, &u),
            ["x1 - x4 + x5", "x2 + 3*x4 - 2*x5", "x3 - 2*x4 - x5"]
        );
        assert!(g.is_reduced());
    }

    #[test]
    fn duplicate_and_small_reductions() {
        let u = xs(2);
        let f = lf("2*x1 - 4*x2", &u);
        assert_eq!(show(&reduce(&[f.clone(), f]), &u), ["x1 - 2*x2"]);
        assert_eq!(
            show(&reduce(&[lf("x1 + x2", &u), lf("x1 - x2", &u)]), &u),
            ["x1", "x2"]
        );
        assert!(reduce(&[]).is_empty());
        assert!(reduce(&[LinearForm::zero()]).is_empty());
    }

    #[test]
    fn normal_forms() {
        let u = xs(5);
        let g = reduce(&[
            lf("x1 - x4 + x5", &u),
            lf("x2 + 3*x4 - 2*x5", &u),
            lf("x3 - 2*x4 - x5", &u),
        ]);
        assert!(normal_form(&lf("x1 - x4 + x5", &u), &g).is_zero());
        assert_eq!(normal_form(&lf("x4", &u), &g), lf("x4", &u));
        let nf = bilinear_normal_form(&BilinearForm::diagonal(5), &g);
        let y = VariableUniverse::numbered("y", 5);
        assert_eq!(
            nf.display_by_y(&u, &y),
            "(x4 - x5)*y1 + (-3*x4 + 2*x5)*y2 + (2*x4 + x5)*y3 + x4*y4 + x5*y5"
        );
        let h: Vec<String> = nf.rows.values().map(|f| f.display(&y).to_string()).collect();
        assert_eq!(h, ["y1 - 3*y2 + 2*y3 + y4", "-y1 + 2*y2 + y3 + y5"]);
    }

    #[test]
    fn elimination() {
        let u = xs(5);
        let g = reduce(&[
            lf("x1 - x4 + x5", &u),
            lf("x2 + 3*x4 - 2*x5", &u),
            lf("x3 - 2*x4 - x5", &u),
        ]);
        assert!(eliminate(&g, &[3, 4], 5).unwrap().is_empty());
        assert_eq!(eliminate(&g, &[0, 1, 2, 3, 4], 5).unwrap(), g);
        assert!(matches!(
            eliminate(&g, &[0, 4], 5),
            Err(LinGbError::OrderViolation { .. })
        ));
        // psi1 > phi1 > phi2
        let u = VariableUniverse::new(vec!["psi1".into(), "phi1".into(), "phi2".into()]).unwrap();
        let g = reduce(&[lf("psi1 - phi1", &u), lf("phi2", &u)]);
        assert_eq!(show(&eliminate(&g, &[1, 2], 3).unwrap(), &u), ["phi2"]);
    }

    #[test]
    fn spans_and_solutions() {
        let b = span_to_basis(&[vec![q(1), q(0)], vec![q(2), q(0)]], 2).unwrap();
        assert_eq!(b, vec![vec![q(1), q(0)]]);
        let plane = [
            vec![q(1), q(-3), q(2), q(1), q(0)],
            vec![q(-1), q(2), q(1), q(0), q(1)],
        ];
        assert_eq!(span_to_basis(&plane, 5).unwrap().len(), 2);
        assert_eq!(cartesian_to_basis(&[], 3).len(), 3);
        let u = xs(3);
        let all: Vec<_> = (0..3).map(LinearForm::var).collect();
        assert!(cartesian_to_basis(&all, 3).is_empty());
        let eqs = [lf("x1 + x2 + x3", &u)];
        for v in cartesian_to_basis(&eqs, 3) {
            assert!((&v[0] + &v[1] + &v[2]).is_zero());
        }
    }

    #[test]
    fn quotients() {
        let e = |i: usize| {
            let mut v = vec![q(0); 3];
            v[i] = q(1);
            v
        };
        let v = [e(0), e(1), e(2)];
        assert!(quotient_basis(&v, &v, 3).unwrap().is_empty());
        assert_eq!(quotient_basis(&v, &[], 3).unwrap().len(), 3);
        let w = [vec![q(1), q(1), q(0)]];
        let h = quotient_basis(&v[..2], &w, 3).unwrap();
        assert_eq!(h, vec![vec![q(0), q(1), q(0)]]);
        assert!(matches!(
            quotient_basis(&v[..1], &[e(2)], 3),
            Err(LinGbError::NotContained(0))
        ));
    }
}
