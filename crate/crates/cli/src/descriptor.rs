//! Descriptor file schema: a JSON document
//! `{"factors": [{"type": "I"|"II"|"III"|"IV", "f": .., "d": .., "g": .., "m": ..}]}`
//! validated and converted into core descriptor values.

use serde::{Deserialize, Serialize};

use lefrep_core::lefschetz::{AbelianDescriptor, AbelianFactor, AlbertType};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescriptorFile {
    pub factors: Vec<FactorEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorEntry {
    #[serde(rename = "type")]
    pub albert_type: String,
    pub f: u32,
    pub d: u32,
    pub g: u32,
    pub m: u32,
}

impl DescriptorFile {
    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("descriptor JSON: {e}"))
    }

    pub fn to_descriptor(&self) -> Result<AbelianDescriptor, String> {
        let factors = self
            .factors
            .iter()
            .map(|entry| {
                let albert_type = match entry.albert_type.as_str() {
                    "I" => AlbertType::I,
                    "II" => AlbertType::II,
                    "III" => AlbertType::III,
                    "IV" => AlbertType::IV,
                    other => return Err(format!("unknown Albert type {other:?}")),
                };
                Ok(AbelianFactor {
                    albert_type,
                    f: entry.f,
                    d: entry.d,
                    g: entry.g,
                    m: entry.m,
                })
            })
            .collect::<Result<Vec<_>, String>>()?;
        Ok(AbelianDescriptor::new(factors))
    }
}
