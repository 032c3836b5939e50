//! Checks on the bundled algebras against reference values.

use anyhow::Result;

use lsac::cochain::CochainComplex;
use lsac::cohomology::compute_cohomology;
use lsac::format::parse_algebra_file;
use lsac::graded::compute_graded_cohomology;

pub const BUNDLED: [(&str, &str); 5] = [
    ("ms7", include_str!("../../../algebras/ms7.alg")),
    ("ams8", include_str!("../../../algebras/ams8.alg")),
    ("gl3_sl3", include_str!("../../../algebras/gl3_sl3.alg")),
    ("gl11", include_str!("../../../algebras/gl11.alg")),
    ("gl21", include_str!("../../../algebras/gl21.alg")),
];

fn complex(name: &str) -> Result<CochainComplex> {
    let (_, text) = BUNDLED.iter().find(|(n, _)| *n == name).expect("bundled name");
    Ok(parse_algebra_file(text)?.complex(None)?)
}

fn dims(cx: &CochainComplex, k: usize) -> Result<[usize; 4]> {
    let d = compute_cohomology(cx, k)?.dims;
    Ok([d.c, d.z, d.b, d.h])
}

struct Check {
    label: &'static str,
    expected: String,
    actual: String,
}

fn checks() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let ms7 = complex("ms7")?;
    out.push(Check {
        label: "ms7 k=4 (C, Z, B, H)",
        expected: format!("{:?}", [35, 30, 25, 5]),
        actual: format!("{:?}", dims(&ms7, 4)?),
    });
    out.push(Check {
        label: "ms7 dim H for k=2..5",
        expected: format!("{:?}", [8, 8, 5, 2]),
        actual: format!(
            "{:?}",
            (2..=5).map(|k| dims(&ms7, k).map(|d| d[3])).collect::<Result<Vec<_>>>()?
        ),
    });
    let ams8 = complex("ams8")?;
    let g = compute_graded_cohomology(&ams8, 2, None)?;
    out.push(Check {
        label: "ams8 k=2 dim C by homogeneity",
        expected: format!("{:?}", [1, 4, 6, 6, 5, 2]),
        actual: format!("{:?}", g.blocks.iter().map(|(_, r)| r.dims.c).collect::<Vec<_>>()),
    });
    out.push(Check {
        label: "ams8 k=2 dim H by homogeneity",
        expected: format!("{:?}", [0, 0, 0, 0, 2, 0]),
        actual: format!("{:?}", g.blocks.iter().map(|(_, r)| r.dims.h).collect::<Vec<_>>()),
    });
    let gl3 = complex("gl3_sl3")?;
    for (k, c, h) in [(2, 252, 0), (3, 504, 1)] {
        let d = dims(&gl3, k)?;
        out.push(Check {
            label: if k == 2 { "gl3_sl3 k=2 (C, H)" } else { "gl3_sl3 k=3 (C, H)" },
            expected: format!("{:?}", [c, h]),
            actual: format!("{:?}", [d[0], d[3]]),
        });
    }
    for name in ["gl11", "gl21"] {
        let cx = complex(name)?;
        let ok = (0..=3).all(|k| cx.compose_check(k).is_zero());
        out.push(Check {
            label: if name == "gl11" { "gl11 d^2 = 0 for k<=3" } else { "gl21 d^2 = 0 for k<=3" },
            expected: "true".into(),
            actual: ok.to_string(),
        });
    }
    Ok(out)
}

/// Prints one line per check; returns whether all passed.
pub fn run() -> Result<bool> {
    let mut all = true;
    for c in checks()? {
        let pass = c.expected == c.actual;
        all &= pass;
        if pass {
            println!("PASS {}: {}", c.label, c.actual);
        } else {
            println!("FAIL {}: expected {}, got {}", c.label, c.expected, c.actual);
        }
    }
    Ok(all)
}
