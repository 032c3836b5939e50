//! Structured and human-readable summaries of cohomology computations.

use std::fmt::Write as _;

use serde::Serialize;

use crate::cochain::{Cochain, CochainComplex};
use crate::cohomology::{CohomologyResult, Dims};
use crate::graded::GradedCohomology;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TermReport {
    pub even: Vec<String>,
    pub odd: Vec<String>,
    pub target: String,
    pub coefficient: Scalar,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CochainReport {
    pub text: String,
    pub terms: Vec<TermReport>,
}

impl CochainReport {
    pub fn new(cx: &CochainComplex, c: &Cochain) -> Self {
        let g = cx.algebra();
        let m = cx.module();
        CochainReport {
            text: c.render(g, m),
            terms: c
                .iter()
                .map(|(idx, s)| TermReport {
                    even: idx.even_part.iter().map(|&i| g.name(i).to_string()).collect(),
                    odd: idx.odd_part.iter().map(|&i| g.name(i).to_string()).collect(),
                    target: m.name(idx.target).to_string(),
                    coefficient: s.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlockReport {
    pub homogeneity: i64,
    pub dims: Dims,
    pub basis_h: Vec<CochainReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeReport {
    pub k: usize,
    pub dims: Dims,
    pub basis_z: Vec<CochainReport>,
    pub basis_b: Vec<CochainReport>,
    pub basis_h: Vec<CochainReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homogeneity: Option<Vec<BlockReport>>,
}

fn reports(cx: &CochainComplex, cs: &[Cochain]) -> Vec<CochainReport> {
    cs.iter().map(|c| CochainReport::new(cx, c)).collect()
}

impl DegreeReport {
    pub fn ungraded(cx: &CochainComplex, r: &CohomologyResult) -> Self {
        DegreeReport {
            k: r.degree,
            dims: r.dims,
            basis_z: reports(cx, &r.basis_z),
            basis_b: reports(cx, &r.basis_b),
            basis_h: reports(cx, &r.basis_h),
            homogeneity: None,
        }
    }

    /// Bases are concatenated over blocks in ascending homogeneity.
    pub fn graded(cx: &CochainComplex, g: &GradedCohomology) -> Self {
        let cat = |f: &dyn Fn(&CohomologyResult) -> &Vec<Cochain>| -> Vec<CochainReport> {
            g.blocks.iter().flat_map(|(_, r)| reports(cx, f(r))).collect()
        };
        DegreeReport {
            k: g.degree,
            dims: g.totals,
            basis_z: cat(&|r| &r.basis_z),
            basis_b: cat(&|r| &r.basis_b),
            basis_h: cat(&|r| &r.basis_h),
            homogeneity: Some(
                g.blocks
                    .iter()
                    .map(|(h, r)| BlockReport {
                        homogeneity: *h,
                        dims: r.dims,
                        basis_h: reports(cx, &r.basis_h),
                    })
                    .collect(),
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Provenance {
    pub input_sha256: String,
    pub version: String,
    pub flags: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub algebra: String,
    pub odd_convention: String,
    pub provenance: Provenance,
    pub degrees: Vec<DegreeReport>,
}

/// `k=4: dim C=35 dim Z=30 dim B=25 dim H=5`.
pub fn degree_line(k: usize, d: &Dims) -> String {
    format!(
        "k={k}: dim C={} dim Z={} dim B={} dim H={}",
        d.c, d.z, d.b, d.h
    )
}

/// The human-readable table: one summary line per degree, the per-homogeneity
/// table when present, then the cohomology representatives.
pub fn render_human(report: &Report) -> String {
    let mut out = String::new();
    writeln!(out, "algebra: {}", report.algebra).unwrap();
    for d in &report.degrees {
        writeln!(out, "{}", degree_line(d.k, &d.dims)).unwrap();
        if let Some(blocks) = &d.homogeneity {
            writeln!(
                out,
                "  {:>12} {:>6} {:>6} {:>6} {:>6}",
                "homogeneity", "dim C", "dim Z", "dim B", "dim H"
            )
            .unwrap();
            for b in blocks {
                writeln!(
                    out,
                    "  {:>12} {:>6} {:>6} {:>6} {:>6}",
                    b.homogeneity, b.dims.c, b.dims.z, b.dims.b, b.dims.h
                )
                .unwrap();
            }
        }
        for (i, c) in d.basis_h.iter().enumerate() {
            writeln!(out, "  H[{}] = {}", i + 1, c.text).unwrap();
        }
    }
    out
}
