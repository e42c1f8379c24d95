use serde::{Deserialize, Serialize};

use super::{GroupTable, KernelError, MAX_TABLE_ORDER};

/// Number of random associativity triples checked when loading a table.
const LOAD_ASSOC_SAMPLES: usize = 10_000;

/// JSON form of a group table: `{order, mul (row-major), label}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub order: usize,
    pub mul: Vec<usize>,
    pub label: String,
}

impl GroupTable {
    pub fn to_document(&self) -> TableDocument {
        TableDocument {
            order: self.order(),
            mul: self.raw_mul().iter().map(|&v| v as usize).collect(),
            label: self.label().to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("table documents always serialize")
    }

    /// Loads a table from untrusted data: full Latin-square, identity and
    /// inverse checks plus sampled associativity. Element 0 must be the identity.
    pub fn from_document(doc: &TableDocument) -> Result<GroupTable, KernelError> {
        let n = doc.order;
        if n == 0 || n > MAX_TABLE_ORDER {
            return Err(KernelError::InvalidTable(format!("unsupported order {n}")));
        }
        if doc.mul.len() != n * n {
            return Err(KernelError::InvalidTable(format!(
                "expected {} entries, found {}",
                n * n,
                doc.mul.len()
            )));
        }
        if let Some(&bad) = doc.mul.iter().find(|&&v| v >= n) {
            return Err(KernelError::InvalidTable(format!(
                "entry {bad} out of range"
            )));
        }
        if (0..n).any(|x| doc.mul[x] != x || doc.mul[x * n] != x) {
            return Err(KernelError::InvalidTable(
                "element 0 is not the identity".into(),
            ));
        }
        if (0..n).any(|x| !doc.mul[x * n..(x + 1) * n].contains(&0)) {
            return Err(KernelError::InvalidTable(
                "some row lacks the identity".into(),
            ));
        }
        let mul: Vec<u16> = doc.mul.iter().map(|&v| v as u16).collect();
        let table = GroupTable::from_trusted(n, mul, doc.label.clone());
        table.validate(LOAD_ASSOC_SAMPLES)?;
        Ok(table)
    }

    pub fn from_json(text: &str) -> Result<GroupTable, KernelError> {
        let doc: TableDocument =
            serde_json::from_str(text).map_err(|e| KernelError::Json(e.to_string()))?;
        GroupTable::from_document(&doc)
    }
}
