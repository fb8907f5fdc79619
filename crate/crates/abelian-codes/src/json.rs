//! Stable JSON shapes for machine input and output. Fields serialize in
//! alphabetical order and orbit lists are sorted by representative, so
//! outputs can be compared byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Index, Shape};
use crate::codes::{code_from_orbits, AbelianCode, BchSpec, DimensionBound};
use crate::hypermatrix::OrbitHypermatrix;
use crate::mad::MadTrace;
use crate::Result;

fn index_rows(indices: &[Index]) -> Vec<Vec<u32>> {
    indices.iter().map(|i| i.coords.clone()).collect()
}

/// A code given by its shape and defining-set orbit representatives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub orbit_reps: Vec<Vec<u32>>,
    pub q: u64,
    pub r: Vec<u32>,
}

impl CodeJson {
    pub fn to_code(&self) -> Result<AbelianCode> {
        let shape = Shape::new(self.q, self.r.clone())?;
        let reps: Vec<Index> = self
            .orbit_reps
            .iter()
            .map(|c| Index::new(c.clone()))
            .collect();
        code_from_orbits(&shape, &reps)
    }

    pub fn from_code(c: &AbelianCode) -> CodeJson {
        CodeJson {
            orbit_reps: index_rows(&c.defining_orbit_reps()),
            q: c.shape().q(),
            r: c.shape().r().to_vec(),
        }
    }
}

/// A q^t-orbit hypermatrix, encoded by the orbit representatives of its
/// defining set; the complement (the support) is reconstructed on load.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypermatrixJson {
    pub defining_set_orbit_reps: Vec<Vec<u32>>,
    pub q: u64,
    pub r: Vec<u32>,
    pub t: u64,
}

impl HypermatrixJson {
    pub fn to_matrix(&self) -> Result<OrbitHypermatrix> {
        let shape = Shape::new(self.q, self.r.clone())?;
        let reps: Vec<Index> = self
            .defining_set_orbit_reps
            .iter()
            .map(|c| Index::new(c.clone()))
            .collect();
        OrbitHypermatrix::from_orbit_reps(&shape, self.t, &reps)
    }

    pub fn from_matrix(m: &OrbitHypermatrix) -> HypermatrixJson {
        HypermatrixJson {
            defining_set_orbit_reps: index_rows(&m.defining_orbit_reps()),
            q: m.shape().q(),
            r: m.shape().r().to_vec(),
            t: m.t(),
        }
    }
}

/// BCH parameters; `delta` and `b` are keyed by the directions in `gamma`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BchSpecJson {
    pub b: BTreeMap<usize, u32>,
    pub delta: BTreeMap<usize, u32>,
    pub gamma: Vec<usize>,
}

impl BchSpecJson {
    pub fn to_spec(&self) -> Result<BchSpec> {
        BchSpec::new(self.gamma.clone(), self.delta.clone(), self.b.clone())
    }

    pub fn from_spec(spec: &BchSpec) -> BchSpecJson {
        BchSpecJson {
            b: spec.gamma().iter().map(|&k| (k, spec.offset(k))).collect(),
            delta: spec.gamma().iter().map(|&k| (k, spec.delta(k))).collect(),
            gamma: spec.gamma().to_vec(),
        }
    }
}

/// One explored hypermatrix of a minimum apparent distance run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExploredJson {
    pub d_star: u64,
    pub defining_set_orbit_reps: Vec<Vec<u32>>,
    pub involved_pairs: Vec<(usize, u32)>,
}

/// One stage; `members` and `eta` index into `explored`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageJson {
    pub eta: Vec<usize>,
    pub explored: Vec<ExploredJson>,
    pub m: u64,
    pub members: Vec<usize>,
}

/// Full trace of a minimum apparent distance computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub eval_count: usize,
    pub l: usize,
    pub l_prime: usize,
    pub stages: Vec<StageJson>,
    pub value: u64,
}

impl TraceJson {
    pub fn from_trace(t: &MadTrace) -> TraceJson {
        TraceJson {
            eval_count: t.eval_count,
            l: t.l(),
            l_prime: t.l_prime,
            stages: t
                .stages
                .iter()
                .map(|stage| StageJson {
                    eta: stage.eta.clone(),
                    explored: stage
                        .explored
                        .iter()
                        .map(|e| ExploredJson {
                            d_star: e.d_star,
                            defining_set_orbit_reps: index_rows(&e.matrix.defining_orbit_reps()),
                            involved_pairs: e.involved_pairs.clone(),
                        })
                        .collect(),
                    m: stage.m,
                    members: stage.members.clone(),
                })
                .collect(),
            value: t.value(),
        }
    }
}

/// One orbit of the partition listing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitJson {
    pub members: Vec<Vec<u32>>,
    pub rep: Vec<u32>,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitsJson {
    pub orbits: Vec<OrbitJson>,
    pub q: u64,
    pub r: Vec<u32>,
}

/// Per-root-class apparent distance entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassValueJson {
    pub class: Vec<u32>,
    pub d_star: u64,
}

/// Full apparent-distance report for a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApdistJson {
    pub bch_bound: u64,
    pub d_star_alpha: u64,
    pub d_star_code: u64,
    pub dimension: usize,
    pub optimized_root_classes: Vec<Vec<u32>>,
    pub per_class: Vec<ClassValueJson>,
    pub q: u64,
    pub r: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceJson>,
}

/// Apparent distance with respect to one chosen root class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassApdistJson {
    pub class: Vec<u32>,
    pub d_star: u64,
    pub dimension: usize,
    pub q: u64,
    pub r: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceJson>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionBoundJson {
    pub vacuous: bool,
    pub value: i64,
}

impl DimensionBoundJson {
    pub fn from_bound(b: DimensionBound) -> DimensionBoundJson {
        DimensionBoundJson {
            vacuous: b.vacuous,
            value: b.value,
        }
    }
}

/// Bounds for a BCH parameter set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BchBoundJson {
    pub bch_bound: u64,
    pub designed_distance: u64,
    pub dimension: usize,
    pub dimension_bound: DimensionBoundJson,
    pub q: u64,
    pub r: Vec<u32>,
}

/// A constructed BCH code with its bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BchBuildJson {
    pub bch_bound: u64,
    pub defining_set_orbit_reps: Vec<Vec<u32>>,
    pub designed_distance: u64,
    pub dimension: usize,
    pub dimension_bound: DimensionBoundJson,
    pub q: u64,
    pub r: Vec<u32>,
}

/// Result of extending a cyclic code to n times its dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplyJson {
    pub d_star_code: u64,
    pub defining_set_orbit_reps: Vec<Vec<u32>>,
    pub dimension: usize,
    pub n: u32,
    pub q: u64,
    pub r: Vec<u32>,
}

/// Engine-versus-oracle comparison for one code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub camion_ok: bool,
    pub d_oracle: u64,
    pub d_star_alpha: u64,
    pub d_star_code: u64,
    pub dimension: usize,
    pub dimension_oracle: usize,
    pub mad_oracle: u64,
    pub ok: bool,
    pub q: u64,
    pub r: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHdEntryJson {
    pub d_star_code: u64,
    pub defining_set_orbit_reps: Vec<Vec<u32>>,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHdJson {
    pub budget: usize,
    pub codes: Vec<SearchHdEntryJson>,
    pub q: u64,
    pub r: Vec<u32>,
    pub target: u64,
}
