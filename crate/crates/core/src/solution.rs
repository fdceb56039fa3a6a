//! Solutions and their JSON interchange form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Interval, Orientation, Transmitter};
use crate::polygon::OrthoPolygon;
use crate::visibility::{Power, Scene};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SolverKind {
    #[serde(rename = "approx")]
    Approx,
    #[serde(rename = "exact")]
    Exact,
    #[serde(rename = "exact-dense")]
    ExactDense,
}

impl SolverKind {
    pub fn name(self) -> &'static str {
        match self {
            SolverKind::Approx => "approx",
            SolverKind::Exact => "exact",
            SolverKind::ExactDense => "exact-dense",
        }
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolverKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "approx" => Ok(SolverKind::Approx),
            "exact" => Ok(SolverKind::Exact),
            "exact-dense" => Ok(SolverKind::ExactDense),
            other => Err(Error::Solution(format!("unknown solver `{other}`"))),
        }
    }
}

/// A set of transmitters with its re-verified coverage status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub transmitters: Vec<Transmitter>,
    pub k: Power,
    pub iterations: usize,
    pub coverage_complete: bool,
    pub solver: SolverKind,
}

/// Whether the transmitters jointly guard `p` with power `k`.
pub fn covers(p: &OrthoPolygon, transmitters: &[Transmitter], k: Power) -> Result<bool> {
    let scene = Scene::new(p.profile(), transmitters);
    Ok(scene.union_of(transmitters, k)?.covers_polygon())
}

impl Solution {
    /// Builds a solution, computing `coverage_complete` from scratch.
    pub fn verified(
        p: &OrthoPolygon,
        transmitters: Vec<Transmitter>,
        k: Power,
        iterations: usize,
        solver: SolverKind,
    ) -> Result<Self> {
        let coverage_complete = covers(p, &transmitters, k)?;
        Ok(Self {
            transmitters,
            k,
            iterations,
            coverage_complete,
            solver,
        })
    }

    pub fn count(&self) -> usize {
        self.transmitters.len()
    }

    pub fn to_doc(&self) -> SolutionDoc {
        SolutionDoc {
            k: self.k,
            solver: self.solver,
            count: self.count(),
            transmitters: self.transmitters.iter().map(TransmitterDoc::from).collect(),
            coverage: if self.coverage_complete {
                Coverage::Complete
            } else {
                Coverage::Incomplete
            },
            iterations: self.iterations,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("solution serializes")
    }

    /// Parses a solution document and re-checks it against `p`; the stored
    /// coverage flag is recomputed rather than trusted.
    pub fn from_json(text: &str, p: &OrthoPolygon) -> Result<Self> {
        let doc: SolutionDoc =
            serde_json::from_str(text).map_err(|e| Error::Solution(e.to_string()))?;
        if doc.count != doc.transmitters.len() {
            return Err(Error::Solution(format!(
                "count {} disagrees with {} transmitters",
                doc.count,
                doc.transmitters.len()
            )));
        }
        let transmitters = doc
            .transmitters
            .into_iter()
            .map(Transmitter::from)
            .collect();
        Self::verified(p, transmitters, doc.k, doc.iterations, doc.solver)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coverage {
    Complete,
    Incomplete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransmitterDoc {
    pub orientation: Orientation,
    pub anchor: i64,
    pub span: [i64; 2],
}

impl From<&Transmitter> for TransmitterDoc {
    fn from(t: &Transmitter) -> Self {
        Self {
            orientation: t.orientation,
            anchor: t.anchor,
            span: [t.span.lo, t.span.hi],
        }
    }
}

impl From<TransmitterDoc> for Transmitter {
    fn from(d: TransmitterDoc) -> Self {
        Transmitter {
            orientation: d.orientation,
            anchor: d.anchor,
            span: Interval::new(d.span[0], d.span[1]),
        }
    }
}

/// Wire form of a [`Solution`], in input coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionDoc {
    pub k: Power,
    pub solver: SolverKind,
    pub count: usize,
    pub transmitters: Vec<TransmitterDoc>,
    pub coverage: Coverage,
    pub iterations: usize,
}
