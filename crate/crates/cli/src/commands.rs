//! The computational subcommands: `lambda`, `tetra`, `grassmann`.

use horospinor::tol::{DEGENERACY_TOL, IDENTITY_TOL};
use horospinor::{
    complex_distance, decorated_horosphere_uhs, gauge_normalize, is_totally_positive, plucker,
    ptolemy_residual, shape_parameters, Error, Field, Spinor, SpinorTuple,
};
use num_complex::Complex64;

use crate::error::CliError;
use crate::input::InputDocument;
use crate::report::{
    lambda_matrix, pair, HorosphereReport, PairDistance, PluckerEntry, PtolemyReport,
    ReportDocument, ShapeReport,
};

fn base_report(doc: &InputDocument, ks: &[Spinor]) -> ReportDocument {
    ReportDocument {
        labels: doc.labels.clone(),
        lambda_matrix: lambda_matrix(ks),
        distances: None,
        horospheres: None,
        ptolemy: None,
        shape: None,
        plucker: None,
        totally_positive: None,
        zero_pairs: None,
        gauge_normalized: None,
    }
}

fn ptolemy_sections(ks: &[Spinor]) -> Result<Vec<PtolemyReport>, CliError> {
    let d = ks.len();
    let mut out = Vec::new();
    for i in 0..d {
        for j in (i + 1)..d {
            for k in (j + 1)..d {
                for l in (k + 1)..d {
                    let residual = ptolemy_residual(&ks[i], &ks[j], &ks[k], &ks[l])?;
                    out.push(PtolemyReport {
                        vertices: [i, j, k, l],
                        residual: pair(residual),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Lambda matrix together with the complex distance of every pair whose
/// bracket clears the degeneracy threshold, the upper-half-space description
/// of each horosphere, and Ptolemy residuals per 4-subset when `d >= 4`.
pub fn cmd_lambda(doc: &InputDocument) -> Result<ReportDocument, CliError> {
    let ks = doc.nonzero_spinor_values()?;
    let mut report = base_report(doc, &ks);

    let mut distances = Vec::new();
    for i in 0..ks.len() {
        for j in (i + 1)..ks.len() {
            match complex_distance(&ks[i], &ks[j]) {
                Ok(d) => distances.push(PairDistance { i, j, rho: d.rho, theta: d.theta }),
                Err(Error::CommonCentre) => {}
                Err(e) => return Err(e.into()),
            }
        }
    }
    report.distances = Some(distances);

    let mut horospheres = Vec::new();
    for k in &ks {
        horospheres.push(HorosphereReport::from(&decorated_horosphere_uhs(k)?));
    }
    report.horospheres = Some(horospheres);

    if ks.len() >= 4 {
        report.ptolemy = Some(ptolemy_sections(&ks)?);
    }
    Ok(report)
}

/// Ptolemy residual, shape triple and the verification flags for exactly
/// four spinors.
pub fn cmd_tetra(doc: &InputDocument) -> Result<ReportDocument, CliError> {
    if doc.spinors.len() != 4 {
        return Err(CliError::Parse(format!(
            "WrongArity: tetra expects exactly 4 spinors, got {}",
            doc.spinors.len()
        )));
    }
    let ks = doc.nonzero_spinor_values()?;
    let tol = doc.tol.unwrap_or(IDENTITY_TOL);

    let shape = shape_parameters(&ks[0], &ks[1], &ks[2], &ks[3])?;
    let residual = ptolemy_residual(&ks[0], &ks[1], &ks[2], &ks[3])?;

    let one = Complex64::ONE;
    let mut report = base_report(doc, &ks);
    report.ptolemy = Some(vec![PtolemyReport { vertices: [0, 1, 2, 3], residual: pair(residual) }]);
    report.shape = Some(ShapeReport {
        z: pair(shape.z),
        zp: pair(shape.zp),
        zpp: pair(shape.zpp),
        z_plus_inv_zp_is_one: (shape.z + one / shape.zp - one).norm() <= tol * shape.z.norm().max(1.0),
        product_is_minus_one: (shape.z * shape.zp * shape.zpp + one).norm() <= tol,
    });
    Ok(report)
}

/// Pluecker coordinates, the totally-positive verdict (real mode) or the
/// vanishing-coordinate report (complex mode), and the gauge-normalised
/// tuple when the leading pair is nondegenerate.
pub fn cmd_grassmann(doc: &InputDocument, field: Field) -> Result<ReportDocument, CliError> {
    if doc.spinors.len() < 3 {
        return Err(CliError::Parse(format!(
            "grassmann expects at least 3 spinors, got {}",
            doc.spinors.len()
        )));
    }
    let ks = doc.nonzero_spinor_values()?;
    let tol = doc.tol.unwrap_or(IDENTITY_TOL);
    let tuple = SpinorTuple::new(ks.clone()).map_err(CliError::domain)?;

    let p = plucker(&tuple)?;
    let mut report = base_report(doc, &ks);
    report.plucker = Some(
        p.pairs()
            .map(|((i, j), v)| PluckerEntry { i, j, value: pair(v) })
            .collect(),
    );

    match field {
        Field::Real => {
            report.totally_positive = Some(is_totally_positive(&tuple, tol));
        }
        Field::Complex => {
            let zero_pairs: Vec<[usize; 2]> = p
                .pairs()
                .filter(|((i, j), v)| {
                    v.norm() <= DEGENERACY_TOL * ks[*i].norm() * ks[*j].norm()
                })
                .map(|((i, j), _)| [i, j])
                .collect();
            report.zero_pairs = Some(zero_pairs);
        }
    }

    match gauge_normalize(&tuple, field, tol) {
        Ok(n) => {
            report.gauge_normalized = Some(
                n.spinors()
                    .iter()
                    .map(|k| [k.xi.re, k.xi.im, k.eta.re, k.eta.im])
                    .collect(),
            );
        }
        Err(Error::DegeneratePair) | Err(Error::NotRealTuple) => {}
        Err(e) => return Err(e.into()),
    }
    Ok(report)
}
