use serde::{Deserialize, Serialize};

use super::rational::{format_rational, parse_rational};
use super::ring::BurnsideElement;
use crate::error::{Error, Result};
use crate::group::Group;

/// Serialized form: `{"group", "basis": ["order:index", ...], "coeffs": ["p/q", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub group: String,
    pub basis: Vec<String>,
    pub coeffs: Vec<String>,
}

impl BurnsideElement {
    pub fn to_serialized(&self) -> ElementJson {
        let l = self.group().lattice();
        ElementJson {
            group: self.group().label(),
            basis: (0..l.classes().len()).map(|c| l.class_label(c)).collect(),
            coeffs: self.coeffs().iter().map(format_rational).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_serialized()).expect("plain strings serialize")
    }

    /// Reads an element back over `g`; the group label and basis labels must match.
    pub fn from_serialized(g: &Group, e: &ElementJson) -> Result<Self> {
        if e.group != g.label() {
            return Err(Error::Format(format!(
                "element is over {:?}, expected {:?}",
                e.group,
                g.label()
            )));
        }
        let l = g.lattice();
        let labels: Vec<String> = (0..l.classes().len()).map(|c| l.class_label(c)).collect();
        if e.basis != labels {
            return Err(Error::Format("basis labels do not match the lattice".into()));
        }
        let coeffs = e
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        BurnsideElement::from_coeffs(g, coeffs)
    }

    pub fn from_json(g: &Group, s: &str) -> Result<Self> {
        let e: ElementJson =
            serde_json::from_str(s).map_err(|err| Error::Format(err.to_string()))?;
        Self::from_serialized(g, &e)
    }
}
