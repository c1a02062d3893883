//! Law-check reports.
//!
//! Every checker in this crate returns an [`AxiomReport`]: one entry per
//! axiom, each either passing or failing with a witness. Reports always list
//! *all* axioms of the structure, not just the first failure, so that a
//! mis-entered structure constant shows up in every law it breaks.

use crate::mor::Mor;
use serde::Serialize;
use std::fmt;

/// Where and how an equality check failed.
///
/// `at` is a basis-index tuple. For a matrix comparison it is the decoded
/// codomain tuple followed by the decoded domain tuple of the first
/// differing entry in row-major order (which is also the lexicographically
/// first such tuple); quantified checks prefix the tuple with their
/// quantifier indices. For element-level (finite monoid) checks it is the
/// tuple of element indices. `lhs`/`rhs` are the differing values, rendered
/// exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub at: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

/// One axiom of a structure: a stable identifier, a short human description,
/// and the outcome. A failing entry always carries a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomEntry {
    pub id: String,
    pub desc: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl AxiomEntry {
    pub fn pass(id: &str, desc: &str) -> Self {
        AxiomEntry {
            id: id.to_string(),
            desc: desc.to_string(),
            pass: true,
            witness: None,
        }
    }

    pub fn fail(id: &str, desc: &str, witness: Witness) -> Self {
        AxiomEntry {
            id: id.to_string(),
            desc: desc.to_string(),
            pass: false,
            witness: Some(witness),
        }
    }

    /// Compare two morphisms with identical endpoints; a mismatch records the
    /// first row-major differing entry as the witness.
    pub(crate) fn compare(id: &str, desc: &str, lhs: &Mor, rhs: &Mor) -> Self {
        Self::compare_under(id, desc, &[], lhs, rhs)
    }

    /// Like [`AxiomEntry::compare`], but prefixes the witness tuple with the
    /// indices of whatever the enclosing check quantifies over.
    pub(crate) fn compare_under(
        id: &str,
        desc: &str,
        quantifiers: &[usize],
        lhs: &Mor,
        rhs: &Mor,
    ) -> Self {
        match lhs.first_difference(rhs) {
            None => AxiomEntry::pass(id, desc),
            Some((r, c)) => {
                let mut at = quantifiers.to_vec();
                at.extend(lhs.cod().decode(r));
                at.extend(lhs.dom().decode(c));
                AxiomEntry::fail(
                    id,
                    desc,
                    Witness {
                        at,
                        lhs: lhs.entry(r, c).to_string(),
                        rhs: rhs.entry(r, c).to_string(),
                    },
                )
            }
        }
    }
}

/// The outcome of checking every axiom of a structure.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub entries: Vec<AxiomEntry>,
}

impl AxiomReport {
    pub fn new(entries: Vec<AxiomEntry>) -> Self {
        AxiomReport { entries }
    }

    /// Overall pass: every entry passed.
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    /// Look up an entry by its stable identifier.
    pub fn entry(&self, id: &str) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Ids of all failing entries, in report order.
    pub fn failing_ids(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|e| !e.pass)
            .map(|e| e.id.as_str())
            .collect()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for entry in &self.entries {
            if entry.pass {
                writeln!(f, "[PASS] {} — {}", entry.id, entry.desc)?;
            } else {
                let w = entry.witness.as_ref().expect("failing entry has witness");
                writeln!(
                    f,
                    "[FAIL] {} — {}; witness at {:?}: left = {}, right = {}",
                    entry.id, entry.desc, w.at, w.lhs, w.rhs
                )?;
            }
        }
        write!(
            f,
            "overall: {}",
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}
