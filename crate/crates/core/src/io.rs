//! JSON documents for posets and certificates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{Poset, RelationMode};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDoc {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub mode: RelationMode,
    pub pairs: Vec<(usize, usize)>,
}

impl PosetDoc {
    /// Cover-mode document with lexicographically sorted pairs.
    pub fn from_poset(p: &Poset) -> Self {
        PosetDoc {
            n: p.len(),
            labels: p.labels().map(<[String]>::to_vec),
            mode: RelationMode::Cover,
            pairs: p.cover_pairs(),
        }
    }

    pub fn to_poset(&self) -> Result<Poset> {
        let p = Poset::from_relation(self.n, &self.pairs, self.mode)?;
        match &self.labels {
            Some(l) if l.len() != self.n => Err(Error::InvalidInput(format!(
                "{} labels for {} elements",
                l.len(),
                self.n
            ))),
            Some(l) => Ok(p.with_labels(l.clone())),
            None => Ok(p),
        }
    }
}

pub fn poset_from_json(text: &str) -> Result<Poset> {
    let doc: PosetDoc = serde_json::from_str(text)?;
    doc.to_poset()
}

pub fn poset_to_json(p: &Poset) -> String {
    serde_json::to_string(&PosetDoc::from_poset(p)).expect("poset documents serialize")
}
