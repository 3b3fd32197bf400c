//! Input document: a list of spinors as real quadruples, with optional
//! labels and tolerance override.

use horospinor::Spinor;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputDocument {
    /// Spinors as `[re_xi, im_xi, re_eta, im_eta]` quadruples.
    pub spinors: Vec<[f64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let doc: InputDocument =
            serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    /// Parses repeated `--spinor re,im,re,im` values.
    pub fn from_inline(specs: &[String]) -> Result<Self, CliError> {
        let mut spinors = Vec::with_capacity(specs.len());
        for spec in specs {
            let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
            if parts.len() != 4 {
                return Err(CliError::Parse(format!(
                    "--spinor expects four comma-separated numbers, got `{spec}`"
                )));
            }
            let mut quad = [0.0; 4];
            for (slot, part) in quad.iter_mut().zip(&parts) {
                *slot = part
                    .parse::<f64>()
                    .map_err(|_| CliError::Parse(format!("invalid number `{part}` in --spinor")))?;
            }
            spinors.push(quad);
        }
        let doc = InputDocument { spinors, labels: None, tol: None };
        doc.validate()?;
        Ok(doc)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.spinors.is_empty() {
            return Err(CliError::Parse("input must contain at least one spinor".into()));
        }
        for (i, quad) in self.spinors.iter().enumerate() {
            if quad.iter().any(|v| !v.is_finite()) {
                return Err(CliError::Parse(format!("spinor {i} has a non-finite entry")));
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.spinors.len() {
                return Err(CliError::Parse(
                    "labels, when present, must match the number of spinors".into(),
                ));
            }
        }
        if let Some(tol) = self.tol {
            if !(tol.is_finite() && tol > 0.0) {
                return Err(CliError::Parse("tol must be a positive finite number".into()));
            }
        }
        Ok(())
    }

    pub fn spinor_values(&self) -> Vec<Spinor> {
        self.spinors
            .iter()
            .map(|q| Spinor::from_parts(q[0], q[1], q[2], q[3]))
            .collect()
    }

    /// Rejects zero spinors, naming the offending index.
    pub fn nonzero_spinor_values(&self) -> Result<Vec<Spinor>, CliError> {
        let ks = self.spinor_values();
        for (i, k) in ks.iter().enumerate() {
            if !k.is_nonzero() {
                return Err(CliError::Domain(format!("ZeroSpinor: spinor {i} is zero")));
            }
        }
        Ok(ks)
    }
}
