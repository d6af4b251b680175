//! JSON ring documents: `{name, scalar, dim, unit_index, structure: [[i, j, k, c], ...]}`.

use std::path::Path;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::assoc::AssocAlgebra;
use crate::error::{Error, Result};
use crate::rings::{ring_catalog, CATALOG};
use crate::scalar::{Scalar, ScalarDomain};

/// A structure coefficient: an integer, or a string such as `"-3"` or `"1/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Int(i64),
    Text(String),
}

impl Coefficient {
    fn to_scalar(&self, domain: ScalarDomain) -> Result<Scalar> {
        match self {
            Coefficient::Int(v) => Ok(domain.from_i64(*v)),
            Coefficient::Text(s) => {
                let q: BigRational = s
                    .trim()
                    .parse()
                    .map_err(|_| Error::RingFile(format!("bad coefficient `{s}`")))?;
                domain
                    .from_rational(&q)
                    .ok_or_else(|| Error::RingFile(format!("`{s}` is not defined over {domain}")))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDocument {
    pub name: String,
    pub scalar: String,
    pub dim: usize,
    pub unit_index: usize,
    pub structure: Vec<(usize, usize, usize, Coefficient)>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
}

impl RingDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::RingFile(e.to_string()))
    }

    pub fn domain(&self) -> Result<ScalarDomain> {
        ScalarDomain::parse(&self.scalar)
    }

    /// Validates associativity and the unit; missing entries are zero.
    pub fn to_algebra(&self) -> Result<AssocAlgebra> {
        let domain = self.domain()?;
        let labels = match &self.labels {
            Some(l) if l.len() == self.dim => l.clone(),
            Some(l) => {
                return Err(Error::RingFile(format!(
                    "{} labels for dimension {}",
                    l.len(),
                    self.dim
                )))
            }
            None => (0..self.dim).map(|i| format!("r{i}")).collect(),
        };
        let structure = self
            .structure
            .iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, c.to_scalar(domain)?)))
            .collect::<Result<Vec<_>>>()?;
        AssocAlgebra::new(
            self.name.clone(),
            domain,
            labels,
            &structure,
            self.unit_index,
        )
    }
}

/// Reads and validates a ring document from disk.
pub fn load_ring_file(path: &Path) -> Result<AssocAlgebra> {
    let text = std::fs::read_to_string(path)?;
    RingDocument::parse(&text)?.to_algebra()
}

/// A catalog name, or otherwise a path to a ring document. The requested scalars must
/// agree with the document's own.
pub fn resolve_ring(spec: &str, scalar: ScalarDomain) -> Result<AssocAlgebra> {
    if CATALOG.contains(&spec) {
        return ring_catalog(spec, scalar);
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(Error::UnknownRing(spec.to_string()));
    }
    let r = load_ring_file(path)?;
    if r.domain() != scalar {
        return Err(Error::Config(format!(
            "ring file `{spec}` is over {} but {scalar} was requested",
            r.domain()
        )));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    const DUAL_Q: &str = r#"{"name": "dual-file", "scalar": "q", "dim": 2, "unit_index": 0,
        "structure": [[0,0,0,1],[0,1,1,1],[1,0,1,1]]}"#;

    #[test]
    fn parses_document() {
        let r = RingDocument::parse(DUAL_Q).unwrap().to_algebra().unwrap();
        assert_eq!(r.dim(), 2);
        assert_eq!(r.hochschild_h1().dimension(), 1);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(RingDocument::parse(r#"{"name": "x"}"#).is_err());
        let not_assoc = r#"{"name": "x", "scalar": "f2", "dim": 1, "unit_index": 0,
            "structure": []}"#;
        assert!(RingDocument::parse(not_assoc)
            .unwrap()
            .to_algebra()
            .is_err());
        let half = r#"{"name": "x", "scalar": "z", "dim": 1, "unit_index": 0,
            "structure": [[0,0,0,"1/2"]]}"#;
        assert!(RingDocument::parse(half).unwrap().to_algebra().is_err());
    }
}
