//! A line-oriented text format for algebras and modules.
//!
//! ```text
//! # comment
//! name ms7
//! convention strict            # optional: strict | symmetric
//! basis l1 even -1             # id, parity, optional integer weight
//! basis d even 0
//! bracket l1 l2 = t1           # [l1, l2] = t1
//! bracket t1 d = -2 t1
//! module adjoint l1 l2 t1      # g = span of the listed ids, V = the whole algebra
//! ```
//!
//! Alternatively `module explicit` makes the whole algebra act on a space
//! declared by `vector ID [weight]` lines, with `action X V = expr` entries.
//! Without a `module` line the algebra acts on itself. Right-hand sides are
//! sums of terms like `2 t1`, `-1/3*b`, `t1`, or `0`. Brackets not listed are
//! zero or follow by skew-symmetry; diagonal entries for odd elements must be
//! written out.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::{
    AlgebraError, GModuleAction, LieSuperAlgebra, Parity, SparseVector, Subalgebra, Violation,
};
use crate::cochain::{CochainComplex, CochainError, OddConvention};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{context}: {}", .violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Validation {
        context: &'static str,
        violations: Vec<Violation>,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Cochain(#[from] CochainError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleSpec {
    /// Parent indices of the acting subalgebra; the module is the whole algebra.
    Adjoint(Vec<usize>),
    /// The whole algebra acts on explicitly declared vectors.
    Explicit,
}

/// A parsed algebra file.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraFile {
    pub name: String,
    pub convention: Option<OddConvention>,
    pub algebra: LieSuperAlgebra,
    pub module_spec: ModuleSpec,
    pub subalgebra: Subalgebra,
    pub module: GModuleAction,
}

impl AlgebraFile {
    /// The cochain complex of the file's pair, with an optional override of
    /// the file's odd convention.
    pub fn complex(&self, convention: Option<OddConvention>) -> Result<CochainComplex, FormatError> {
        let conv = convention.or(self.convention).unwrap_or_default();
        Ok(CochainComplex::new(
            self.subalgebra.algebra().clone(),
            self.module.clone(),
            conv,
        )?)
    }

    /// Canonical text form; parsing it gives back an equal file.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let alg = &self.algebra;
        writeln!(out, "name {}", self.name).unwrap();
        if let Some(c) = self.convention {
            writeln!(out, "convention {c}").unwrap();
        }
        for i in 0..alg.dim() {
            write!(out, "basis {} {}", alg.name(i), alg.parity(i)).unwrap();
            if let Some(w) = alg.grading() {
                write!(out, " {}", w[i]).unwrap();
            }
            out.push('\n');
        }
        for (i, j, v) in alg.upper_entries() {
            writeln!(
                out,
                "bracket {} {} = {}",
                alg.name(i),
                alg.name(j),
                render_expr(&v, alg.names())
            )
            .unwrap();
        }
        match &self.module_spec {
            ModuleSpec::Adjoint(members) => {
                let ids: Vec<&str> = members.iter().map(|&i| alg.name(i)).collect();
                writeln!(out, "module adjoint {}", ids.join(" ")).unwrap();
            }
            ModuleSpec::Explicit => {
                out.push_str("module explicit\n");
                let m = &self.module;
                for l in 0..m.dim() {
                    write!(out, "vector {}", m.name(l)).unwrap();
                    if let Some(w) = m.grading() {
                        write!(out, " {}", w[l]).unwrap();
                    }
                    out.push('\n');
                }
                for x in 0..alg.dim() {
                    for l in 0..m.dim() {
                        let v = m.action(x, l).expect("indices in range");
                        if !v.is_zero() {
                            writeln!(
                                out,
                                "action {} {} = {}",
                                alg.name(x),
                                m.name(l),
                                render_expr(v, m.names())
                            )
                            .unwrap();
                        }
                    }
                }
            }
        }
        out
    }
}

/// `2 t1 - l2`, `1/3 b`, or `0`.
pub fn render_expr(v: &SparseVector, names: &[String]) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (i, c)) in v.iter().enumerate() {
        let mag = c.abs();
        match (n, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if !mag.is_one() {
            write!(out, "{mag} ").unwrap();
        }
        out.push_str(&names[i]);
    }
    out
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (pos, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..pos],
                    column: line[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(pos);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: line[..s].chars().count() + 1,
        });
    }
    out
}

struct Ctx {
    line: usize,
}

impl Ctx {
    fn err(&self, column: usize, message: impl Into<String>) -> FormatError {
        FormatError::Parse {
            line: self.line,
            column,
            message: message.into(),
        }
    }
}

fn parse_expr(
    ctx: &Ctx,
    tokens: &[Token<'_>],
    column: usize,
    ids: &HashMap<String, usize>,
) -> Result<SparseVector, FormatError> {
    if tokens.is_empty() {
        return Err(ctx.err(column, "missing right-hand side"));
    }
    if tokens.len() == 1 && tokens[0].text == "0" {
        return Ok(SparseVector::new());
    }
    // Split glued pieces such as "-2*t1+l2" into sign, coefficient and id parts.
    let mut pieces: Vec<(String, usize)> = Vec::new();
    for t in tokens {
        let mut cur = String::new();
        let mut cur_col = t.column;
        for (off, ch) in t.text.chars().enumerate() {
            if ch == '+' || ch == '-' || ch == '*' {
                if !cur.is_empty() {
                    pieces.push((std::mem::take(&mut cur), cur_col));
                }
                if ch != '*' {
                    pieces.push((ch.to_string(), t.column + off));
                }
                cur_col = t.column + off + 1;
            } else {
                if cur.is_empty() {
                    cur_col = t.column + off;
                }
                cur.push(ch);
            }
        }
        if !cur.is_empty() {
            pieces.push((cur, cur_col));
        }
    }
    let mut out = SparseVector::new();
    let mut i = 0;
    let mut first = true;
    while i < pieces.len() {
        let mut sign = Scalar::one();
        match pieces[i].0.as_str() {
            "+" => i += 1,
            "-" => {
                sign = -sign;
                i += 1;
            }
            _ if first => {}
            _ => return Err(ctx.err(pieces[i].1, "expected '+' or '-' between terms")),
        }
        first = false;
        let Some((tok, col)) = pieces.get(i) else {
            return Err(ctx.err(column, "expression ends with an operator"));
        };
        let mut coeff = Scalar::one();
        let mut tok = tok.as_str();
        let mut col = *col;
        if tok.starts_with(|c: char| c.is_ascii_digit()) {
            coeff = tok
                .parse()
                .map_err(|_| ctx.err(col, format!("bad coefficient {tok:?}")))?;
            i += 1;
            let Some((t, c)) = pieces.get(i) else {
                return Err(ctx.err(col, "coefficient without a basis element"));
            };
            tok = t.as_str();
            col = *c;
            if tok == "+" || tok == "-" {
                return Err(ctx.err(col, "coefficient without a basis element"));
            }
        }
        let idx = *ids
            .get(tok)
            .ok_or_else(|| ctx.err(col, format!("unknown id {tok:?}")))?;
        out.add_term(idx, &(sign * coeff));
        i += 1;
    }
    Ok(out)
}

fn parse_weight(ctx: &Ctx, tok: Option<&Token<'_>>) -> Result<Option<i64>, FormatError> {
    tok.map(|t| {
        t.text
            .parse::<i64>()
            .map_err(|_| ctx.err(t.column, format!("bad weight {:?}", t.text)))
    })
    .transpose()
}

fn all_or_none(
    ctx: &Ctx,
    weights: Vec<Option<i64>>,
    what: &str,
) -> Result<Option<Vec<i64>>, FormatError> {
    if weights.iter().all(|w| w.is_none()) {
        Ok(None)
    } else if weights.iter().all(|w| w.is_some()) {
        Ok(Some(weights.into_iter().flatten().collect()))
    } else {
        Err(ctx.err(1, format!("either every {what} has a weight or none does")))
    }
}

/// Parses and validates an algebra file.
pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, FormatError> {
    parse_algebra_file_with(text, true)
}

/// Parses an algebra file, optionally skipping the axiom checks.
pub fn parse_algebra_file_with(text: &str, validate: bool) -> Result<AlgebraFile, FormatError> {
    let mut name: Option<String> = None;
    let mut convention = None;
    let mut basis: Vec<(String, Parity, Option<i64>)> = Vec::new();
    let mut basis_ids: HashMap<String, usize> = HashMap::new();
    let mut brackets: Vec<(usize, usize, SparseVector)> = Vec::new();
    let mut seen_pairs = HashSet::new();
    let mut module: Option<(ModuleSpec, usize)> = None;
    let mut vectors: Vec<(String, Option<i64>)> = Vec::new();
    let mut vector_ids: HashMap<String, usize> = HashMap::new();
    let mut actions: Vec<(usize, usize, SparseVector)> = Vec::new();
    let mut seen_actions = HashSet::new();
    let mut last_line = 0;

    for (n, raw) in text.lines().enumerate() {
        let ctx = Ctx { line: n + 1 };
        last_line = n + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokenize(line);
        let Some(head) = toks.first() else { continue };
        let arity = |want: usize| -> Result<(), FormatError> {
            if toks.len() < want {
                Err(ctx.err(head.column, format!("{} needs more fields", head.text)))
            } else {
                Ok(())
            }
        };
        match head.text {
            "name" => {
                arity(2)?;
                if toks.len() > 2 {
                    return Err(ctx.err(toks[2].column, "unexpected text after name"));
                }
                if name.is_some() {
                    return Err(ctx.err(head.column, "duplicate name line"));
                }
                name = Some(toks[1].text.to_string());
            }
            "convention" => {
                arity(2)?;
                convention = Some(
                    toks[1]
                        .text
                        .parse::<OddConvention>()
                        .map_err(|e| ctx.err(toks[1].column, e))?,
                );
            }
            "basis" => {
                arity(3)?;
                if !brackets.is_empty() || module.is_some() {
                    return Err(ctx.err(head.column, "basis lines must come first"));
                }
                let id = toks[1].text;
                if !is_ident(id) {
                    return Err(ctx.err(toks[1].column, format!("bad id {id:?}")));
                }
                if basis_ids.insert(id.to_string(), basis.len()).is_some() {
                    return Err(ctx.err(toks[1].column, format!("duplicate id {id:?}")));
                }
                let parity = match toks[2].text {
                    "even" => Parity::Even,
                    "odd" => Parity::Odd,
                    other => {
                        return Err(ctx.err(toks[2].column, format!("bad parity {other:?}")))
                    }
                };
                let weight = parse_weight(&ctx, toks.get(3))?;
                if toks.len() > 4 {
                    return Err(ctx.err(toks[4].column, "unexpected text after weight"));
                }
                basis.push((id.to_string(), parity, weight));
            }
            "bracket" => {
                arity(5)?;
                let a = lookup(&ctx, &toks[1], &basis_ids)?;
                let b = lookup(&ctx, &toks[2], &basis_ids)?;
                if toks[3].text != "=" {
                    return Err(ctx.err(toks[3].column, "expected '='"));
                }
                if !seen_pairs.insert((a, b)) {
                    return Err(ctx.err(head.column, "duplicate bracket entry"));
                }
                let v = parse_expr(&ctx, &toks[4..], toks[3].column + 1, &basis_ids)?;
                brackets.push((a, b, v));
            }
            "module" => {
                arity(2)?;
                if module.is_some() {
                    return Err(ctx.err(head.column, "duplicate module line"));
                }
                let spec = match toks[1].text {
                    "adjoint" => {
                        arity(3)?;
                        let ids = toks[2..]
                            .iter()
                            .map(|t| lookup(&ctx, t, &basis_ids))
                            .collect::<Result<Vec<_>, _>>()?;
                        ModuleSpec::Adjoint(ids)
                    }
                    "explicit" => ModuleSpec::Explicit,
                    other => {
                        return Err(ctx.err(toks[1].column, format!("bad module kind {other:?}")))
                    }
                };
                module = Some((spec, n + 1));
            }
            "vector" => {
                arity(2)?;
                if !matches!(module, Some((ModuleSpec::Explicit, _))) {
                    return Err(ctx.err(head.column, "vector lines need 'module explicit' first"));
                }
                let id = toks[1].text;
                if !is_ident(id) {
                    return Err(ctx.err(toks[1].column, format!("bad id {id:?}")));
                }
                if vector_ids.insert(id.to_string(), vectors.len()).is_some() {
                    return Err(ctx.err(toks[1].column, format!("duplicate vector {id:?}")));
                }
                vectors.push((id.to_string(), parse_weight(&ctx, toks.get(2))?));
            }
            "action" => {
                arity(5)?;
                if !matches!(module, Some((ModuleSpec::Explicit, _))) {
                    return Err(ctx.err(head.column, "action lines need 'module explicit' first"));
                }
                let x = lookup(&ctx, &toks[1], &basis_ids)?;
                let v = lookup(&ctx, &toks[2], &vector_ids)?;
                if toks[3].text != "=" {
                    return Err(ctx.err(toks[3].column, "expected '='"));
                }
                if !seen_actions.insert((x, v)) {
                    return Err(ctx.err(head.column, "duplicate action entry"));
                }
                let e = parse_expr(&ctx, &toks[4..], toks[3].column + 1, &vector_ids)?;
                actions.push((x, v, e));
            }
            other => return Err(ctx.err(head.column, format!("unknown keyword {other:?}"))),
        }
    }

    let end = Ctx {
        line: last_line.max(1),
    };
    let name = name.ok_or_else(|| end.err(1, "missing name line"))?;
    if basis.is_empty() {
        return Err(end.err(1, "no basis lines"));
    }
    let weights = all_or_none(&end, basis.iter().map(|b| b.2).collect(), "basis element")?;
    let names: Vec<String> = basis.iter().map(|b| b.0.clone()).collect();
    let parity: Vec<Parity> = basis.iter().map(|b| b.1).collect();
    let algebra = LieSuperAlgebra::new_unchecked(names, parity, brackets, weights)?;
    if validate {
        let v = algebra.validate();
        if !v.is_empty() {
            return Err(FormatError::Validation {
                context: "algebra axioms",
                violations: v,
            });
        }
    }
    let (module_spec, module_line) =
        module.unwrap_or_else(|| (ModuleSpec::Adjoint((0..algebra.dim()).collect()), 0));
    let (subalgebra, module) = match &module_spec {
        ModuleSpec::Adjoint(members) => {
            let sub = Subalgebra::new(&algebra, members).map_err(|e| match e {
                AlgebraError::Invalid(v) => FormatError::Validation {
                    context: "subalgebra closure",
                    violations: v,
                },
                other => FormatError::Algebra(other),
            })?;
            let module = sub.adjoint_action();
            (sub, module)
        }
        ModuleSpec::Explicit => {
            let ctx = Ctx { line: module_line };
            if vectors.is_empty() {
                return Err(ctx.err(1, "explicit module without vector lines"));
            }
            let n = vectors.len();
            let mut table = vec![vec![SparseVector::new(); n]; algebra.dim()];
            for (x, v, e) in actions {
                table[x][v] = e;
            }
            let weights = all_or_none(&ctx, vectors.iter().map(|v| v.1).collect(), "vector")?;
            let names = vectors.into_iter().map(|v| v.0).collect();
            let module = GModuleAction::new_unchecked(&algebra, names, table, weights)?;
            if validate {
                let v = module.validate(&algebra);
                if !v.is_empty() {
                    return Err(FormatError::Validation {
                        context: "module axioms",
                        violations: v,
                    });
                }
            }
            (Subalgebra::full(&algebra), module)
        }
    };
    Ok(AlgebraFile {
        name,
        convention,
        algebra,
        module_spec,
        subalgebra,
        module,
    })
}

fn is_ident(s: &str) -> bool {
    s.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
        && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

fn lookup(ctx: &Ctx, tok: &Token<'_>, ids: &HashMap<String, usize>) -> Result<usize, FormatError> {
    ids.get(tok.text)
        .copied()
        .ok_or_else(|| ctx.err(tok.column, format!("unknown id {:?}", tok.text)))
}
