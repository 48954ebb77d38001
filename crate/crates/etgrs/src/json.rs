//! JSON forms of fields, codes, specs, weight tables, reports and certificates.

use anyhow::{bail, Context, Result};
use etgrs_core::analysis::{EtgrsClass, NonGrsCertificate};
use etgrs_core::grs::GrsSpec;
use etgrs_core::selfdual::{DualityCertificate, SelfOrthWitness};
use etgrs_core::{CodeSpec, Elem, Field, LinearCode, Matrix, WeightDistribution};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u32,
    pub m: u32,
    /// Coefficients `c_0..c_m` of the defining polynomial, low degree first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

impl FieldJson {
    pub fn from_field(f: &Field) -> Self {
        FieldJson {
            p: f.characteristic(),
            m: f.degree(),
            modulus: Some(f.modulus().to_vec()),
        }
    }

    /// Builds the field, rejecting a modulus other than the canonical one.
    pub fn to_field(&self) -> Result<Field> {
        let f = Field::new(self.p, self.m)?;
        if let Some(modulus) = &self.modulus {
            if modulus.as_slice() != f.modulus() {
                bail!(
                    "modulus {:?} differs from the canonical modulus {:?} of GF({}^{})",
                    modulus,
                    f.modulus(),
                    self.p,
                    self.m
                );
            }
        }
        Ok(f)
    }
}

pub fn codes(v: &[Elem]) -> Vec<u32> {
    v.iter().map(|e| e.0).collect()
}

pub fn elems(v: &[u32]) -> Vec<Elem> {
    v.iter().map(|&c| Elem(c)).collect()
}

pub fn matrix_rows(m: &Matrix) -> Vec<Vec<u32>> {
    (0..m.rows()).map(|r| codes(m.row(r))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub field: FieldJson,
    pub alpha: Vec<u32>,
    pub v: Vec<u32>,
    pub eta: u32,
    pub k: usize,
    pub extended: bool,
}

impl SpecJson {
    pub fn from_spec(s: &CodeSpec) -> Self {
        SpecJson {
            field: FieldJson::from_field(s.field()),
            alpha: codes(s.alpha()),
            v: codes(s.v()),
            eta: s.eta().0,
            k: s.k(),
            extended: s.extended(),
        }
    }

    pub fn to_spec(&self) -> Result<CodeSpec> {
        let f = self.field.to_field()?;
        Ok(CodeSpec::new(
            f,
            elems(&self.alpha),
            elems(&self.v),
            Elem(self.eta),
            self.k,
            self.extended,
        )?)
    }
}

/// A spec file holds either a bare spec or an object with a `spec` member.
pub fn parse_spec(text: &str) -> Result<CodeSpec> {
    let value: serde_json::Value = serde_json::from_str(text).context("spec file is not valid JSON")?;
    let inner = match value.get("spec") {
        Some(s) => s.clone(),
        None => value,
    };
    let spec: SpecJson = serde_json::from_value(inner).context("spec file does not describe a code spec")?;
    spec.to_spec()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrsJson {
    pub alpha: Vec<u32>,
    pub v: Vec<u32>,
    pub k: usize,
    pub extended: bool,
}

impl GrsJson {
    pub fn from_spec(s: &GrsSpec) -> Self {
        GrsJson {
            alpha: codes(s.alpha()),
            v: codes(s.v()),
            k: s.k(),
            extended: s.extended(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub field: FieldJson,
    pub length: usize,
    pub dimension: usize,
    pub generator: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<GrsJson>,
}

impl CodeJson {
    pub fn from_code(c: &LinearCode) -> Self {
        CodeJson {
            field: FieldJson::from_field(c.field()),
            length: c.length(),
            dimension: c.dimension(),
            generator: matrix_rows(c.generator()),
            spec: None,
        }
    }

    pub fn from_grs(s: &GrsSpec) -> Self {
        CodeJson {
            spec: Some(GrsJson::from_spec(s)),
            ..CodeJson::from_code(&s.generator())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightsJson {
    pub counts: Vec<String>,
    pub classification: String,
}

impl WeightsJson {
    pub fn from_distribution(w: &WeightDistribution) -> Self {
        WeightsJson {
            counts: w.counts().iter().map(|c| c.to_string()).collect(),
            classification: w.classification().as_str().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_poly: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condition: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub square_dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grs_dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<u32>>,
    pub verified: bool,
}

impl CertificateJson {
    fn bare(kind: &str) -> Self {
        CertificateJson {
            kind: kind.to_string(),
            lambda: None,
            witness_poly: None,
            condition: None,
            square_dimension: None,
            grs_dimension: None,
            witness: None,
            verified: true,
        }
    }

    pub fn from_witness(w: &SelfOrthWitness) -> Self {
        CertificateJson {
            lambda: w.lambda.map(|l| l.0),
            witness_poly: Some(codes(w.g.coeffs())),
            condition: Some(w.condition.as_str().to_string()),
            ..CertificateJson::bare("self-orthogonal")
        }
    }

    pub fn from_duality(c: &DualityCertificate) -> Self {
        CertificateJson {
            lambda: Some(c.lambda.0),
            ..CertificateJson::bare(c.verdict.as_str())
        }
    }

    pub fn from_non_grs(c: &NonGrsCertificate) -> Self {
        match c {
            NonGrsCertificate::LowRate {
                square_dimension,
                grs_dimension,
            } => CertificateJson {
                square_dimension: Some(*square_dimension),
                grs_dimension: Some(*grs_dimension),
                ..CertificateJson::bare("non-GRS low-rate dimension")
            },
            NonGrsCertificate::HighRate { witness } => CertificateJson {
                witness: Some(codes(witness)),
                ..CertificateJson::bare("non-GRS high-rate weight-one")
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub classification: String,
    #[serde(rename = "A_min")]
    pub a_min: String,
    pub distribution: WeightsJson,
    pub dual_distribution: WeightsJson,
    pub certificates: Vec<CertificateJson>,
}

impl ReportJson {
    pub fn new(
        class: &EtgrsClass,
        weights: &(WeightDistribution, WeightDistribution),
        certificates: Vec<CertificateJson>,
    ) -> Self {
        ReportJson {
            classification: class.classification.as_str().to_string(),
            a_min: class.a_min.to_string(),
            distribution: WeightsJson::from_distribution(&weights.0),
            dual_distribution: WeightsJson::from_distribution(&weights.1),
            certificates,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_round_trip() {
        let f = Field::new(7, 1).unwrap();
        let spec = CodeSpec::unit(f, elems(&[1, 2, 3, 4]), Elem(2), 3, true).unwrap();
        let text = serde_json::to_string(&SpecJson::from_spec(&spec)).unwrap();
        assert_eq!(parse_spec(&text).unwrap(), spec);
        let wrapped = format!("{{\"spec\": {text}, \"generator\": []}}");
        assert_eq!(parse_spec(&wrapped).unwrap(), spec);
    }

    #[test]
    fn modulus_must_be_canonical() {
        let bad = r#"{"field":{"p":2,"m":3,"modulus":[1,1,0,1]},"alpha":[1,2,3],"v":[1,1,1],"eta":1,"k":2,"extended":true}"#;
        assert!(parse_spec(bad).is_err());
        let bare = r#"{"field":{"p":2,"m":3},"alpha":[1,2,3],"v":[1,1,1],"eta":1,"k":2,"extended":true}"#;
        assert!(parse_spec(bare).is_ok());
    }

    #[test]
    fn certificate_shape() {
        let c = CertificateJson::from_non_grs(&NonGrsCertificate::LowRate {
            square_dimension: 6,
            grs_dimension: 5,
        });
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["type"], "non-GRS low-rate dimension");
        assert_eq!(v["verified"], true);
        assert!(v.get("lambda").is_none());
    }
}
