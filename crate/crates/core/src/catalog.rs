//! Static list of the known commutative triples `(K ⋉ N, K, τ)` whose
//! nilpotent part has square-integrable representations.
//!
//! Entries are documentation, not computations; `reproduced_by` names the
//! case algebra whose classifier run re-derives the entry.

use serde::{Deserialize, Serialize};

use crate::nilpotent::CaseTag;

const RAW: &str = include_str!("../data/catalog.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CatalogEntry {
    pub item: u32,
    pub group: String,
    pub nilpotent: String,
    pub tau: String,
    pub kind: String,
    pub reproduced_by: Option<String>,
}

impl CatalogEntry {
    pub fn case(&self) -> Option<CaseTag> {
        self.reproduced_by.as_deref().and_then(|s| s.parse().ok())
    }
}

pub fn catalog() -> Vec<CatalogEntry> {
    serde_json::from_str(RAW).expect("bundled catalog is valid JSON")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_entries() {
        let c = catalog();
        assert_eq!(
            c.iter().map(|e| e.item).collect::<Vec<_>>(),
            (1..=8).collect::<Vec<_>>()
        );
        let reproduced: Vec<(u32, CaseTag)> = c
            .iter()
            .filter_map(|e| e.case().map(|t| (e.item, t)))
            .collect();
        assert_eq!(reproduced, vec![(1, CaseTag::B), (4, CaseTag::C)]);
    }
}
