use serde::{Deserialize, Serialize};

/// Result of a yes/no check together with the first counterexample found.
///
/// Every checker scans its index space in lexicographic order, so the
/// witness is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome<W> {
    pub holds: bool,
    pub witness: Option<W>,
}

impl<W> Outcome<W> {
    pub fn from_witness(witness: Option<W>) -> Self {
        Outcome { holds: witness.is_none(), witness }
    }
}
