//! Report document emitted by the computational subcommands.
//!
//! Complex numbers are serialised as `[re, im]` pairs. The lambda matrix is
//! computed once per unordered pair and mirrored, so antisymmetry and the
//! zero diagonal hold bit for bit.

use horospinor::{BoundaryPointUHS, DecoratedHorosphereUHS, Spinor};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub lambda_matrix: Vec<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distances: Option<Vec<PairDistance>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub horospheres: Option<Vec<HorosphereReport>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ptolemy: Option<Vec<PtolemyReport>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape: Option<ShapeReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plucker: Option<Vec<PluckerEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub totally_positive: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero_pairs: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gauge_normalized: Option<Vec<[f64; 4]>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairDistance {
    pub i: usize,
    pub j: usize,
    pub rho: f64,
    pub theta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HorosphereReport {
    /// `null` encodes the centre at infinity.
    pub centre: Option<[f64; 2]>,
    /// Euclidean diameter, or height for centre infinity.
    pub size: f64,
    /// Unit decoration direction.
    pub direction: [f64; 2],
}

impl From<&DecoratedHorosphereUHS> for HorosphereReport {
    fn from(h: &DecoratedHorosphereUHS) -> Self {
        HorosphereReport {
            centre: match h.centre {
                BoundaryPointUHS::Infinity => None,
                BoundaryPointUHS::Finite(z) => Some(pair(z)),
            },
            size: h.size,
            direction: pair(h.direction),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PtolemyReport {
    pub vertices: [usize; 4],
    pub residual: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PluckerEntry {
    pub i: usize,
    pub j: usize,
    pub value: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShapeReport {
    pub z: [f64; 2],
    pub zp: [f64; 2],
    pub zpp: [f64; 2],
    /// `z + 1/z' = 1` within tolerance.
    pub z_plus_inv_zp_is_one: bool,
    /// `z z' z'' = -1` within tolerance.
    pub product_is_minus_one: bool,
}

/// The full antisymmetric lambda matrix: entries for `i < j` computed once
/// and mirrored with an exact sign flip, zero diagonal.
pub fn lambda_matrix(ks: &[Spinor]) -> Vec<Vec<[f64; 2]>> {
    let d = ks.len();
    let mut m = vec![vec![[0.0, 0.0]; d]; d];
    for i in 0..d {
        for j in (i + 1)..d {
            let l = horospinor::bracket(&ks[i], &ks[j]);
            m[i][j] = pair(l);
            m[j][i] = pair(-l);
        }
    }
    m
}

/// CSV rendering of the lambda matrix, one row per line, complex entries as
/// `re+imi`.
pub fn lambda_matrix_csv(m: &[Vec<[f64; 2]>]) -> String {
    let mut out = String::new();
    for row in m {
        let cells: Vec<String> = row.iter().map(|[re, im]| format_complex(*re, *im)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn format_complex(re: f64, im: f64) -> String {
    if im < 0.0 || (im == 0.0 && im.is_sign_negative()) {
        format!("{}-{}i", re, -im)
    } else {
        format!("{}+{}i", re, im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_matrix_is_exactly_antisymmetric() {
        let ks = vec![
            Spinor::from_parts(0.3, -0.7, 1.1, 0.2),
            Spinor::from_parts(-0.4, 0.9, 0.5, -1.3),
            Spinor::from_parts(1.2, 0.1, -0.8, 0.6),
        ];
        let m = lambda_matrix(&ks);
        for (i, row) in m.iter().enumerate() {
            assert_eq!(row[i], [0.0, 0.0]);
            for (j, cell) in row.iter().enumerate() {
                assert_eq!(cell[0], -m[j][i][0]);
                assert_eq!(cell[1], -m[j][i][1]);
            }
        }
    }

    #[test]
    fn report_roundtrips_through_json() {
        let report = ReportDocument {
            labels: Some(vec!["a".into(), "b".into()]),
            lambda_matrix: vec![
                vec![[0.0, 0.0], [1.0, -0.25]],
                vec![[-1.0, 0.25], [0.0, 0.0]],
            ],
            distances: Some(vec![PairDistance { i: 0, j: 1, rho: 0.5, theta: 1.25 }]),
            horospheres: Some(vec![HorosphereReport {
                centre: None,
                size: 1.0,
                direction: [0.0, 1.0],
            }]),
            ptolemy: None,
            shape: None,
            plucker: None,
            totally_positive: Some(true),
            zero_pairs: None,
            gauge_normalized: Some(vec![[1.0, 0.0, 0.0, 0.0]]),
        };
        let text = serde_json::to_string_pretty(&report).unwrap();
        let back: ReportDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(report, back);
    }

    #[test]
    fn csv_formatting() {
        let m = vec![
            vec![[0.0, 0.0], [2.0, 1.0]],
            vec![[-2.0, -1.0], [0.0, 0.0]],
        ];
        let csv = lambda_matrix_csv(&m);
        assert_eq!(csv, "0+0i,2+1i\n-2-1i,0+0i\n");
    }
}
