//! JSON forms of Gauss data, invariants, verdicts and presentation reports.
//!
//! Field order is fixed by the struct declarations, so output is stable.

use serde::{Deserialize, Serialize};
use tvb_core::diagram::{component_count, validate, Crossing};
use tvb_core::markov::MarkovVerdict;
use tvb_core::quotients::{abelian_invariant, signed_perm_image};
use tvb_core::reduced::PresentationReport;
use tvb_core::{BraidWord, Endpoint, GaussData, SiteId, Verdict};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingJson {
    pub id: String,
    pub sign: i8,
}

/// `[from_site, from_slot, to_site, to_slot]`.
pub type ArcJson = (String, u8, String, u8);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GaussDataJson {
    pub crossings: Vec<CrossingJson>,
    pub bars: Vec<String>,
    pub arcs: Vec<ArcJson>,
    pub free_loops: usize,
    /// Recomputed from the arcs when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<usize>,
}

impl From<&GaussData> for GaussDataJson {
    fn from(gd: &GaussData) -> Self {
        GaussDataJson {
            crossings: gd.crossings.iter().map(|c| CrossingJson { id: c.id.0.clone(), sign: c.sign }).collect(),
            bars: gd.bars.iter().map(|b| b.0.clone()).collect(),
            arcs: gd.arcs.iter().map(|(a, b)| (a.site.0.clone(), a.slot, b.site.0.clone(), b.slot)).collect(),
            free_loops: gd.free_loops,
            mu: Some(gd.mu),
        }
    }
}

impl GaussDataJson {
    /// Converts to Gauss data. A given `mu` must match the arcs.
    pub fn to_gauss_data(&self) -> Result<GaussData, CliError> {
        let mut gd = GaussData {
            crossings: self.crossings.iter().map(|c| Crossing { id: SiteId::new(c.id.as_str()), sign: c.sign }).collect(),
            bars: self.bars.iter().map(|b| SiteId::new(b.as_str())).collect(),
            arcs: self
                .arcs
                .iter()
                .map(|(a, i, b, j)| (Endpoint::new(a.as_str(), *i), Endpoint::new(b.as_str(), *j)))
                .collect(),
            free_loops: self.free_loops,
            mu: 0,
        };
        let mu = component_count(&gd)?;
        if let Some(given) = self.mu {
            if given != mu {
                return Err(CliError::Invalid(format!("mu is {given} but the arcs form {mu} components")));
            }
        }
        gd.mu = mu;
        if let Some(first) = validate(&gd).violations.into_iter().next() {
            return Err(CliError::Invalid(first));
        }
        Ok(gd)
    }
}

pub fn parse_gauss_data(text: &str) -> Result<GaussData, CliError> {
    let j: GaussDataJson = serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("Gauss data JSON: {e}")))?;
    j.to_gauss_data()
}

pub fn gauss_data_to_string(gd: &GaussData) -> String {
    serde_json::to_string(&GaussDataJson::from(gd)).expect("plain data serializes")
}

#[derive(Debug, Clone, Serialize)]
pub struct SignedPermJson {
    /// 1-based image of each strand.
    pub perm: Vec<usize>,
    pub flips: Vec<u8>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InvariantsJson {
    pub degree: usize,
    pub signed_perm: SignedPermJson,
    pub writhe: i64,
    pub v_parity: u8,
    pub bar_parity: u8,
    pub closure_components: usize,
}

pub fn invariants(w: &BraidWord) -> InvariantsJson {
    let sp = signed_perm_image(w);
    let ab = abelian_invariant(w);
    InvariantsJson {
        degree: w.degree(),
        signed_perm: SignedPermJson { perm: sp.perm().iter().map(|&p| p as usize + 1).collect(), flips: sp.flips().to_vec() },
        writhe: ab.writhe,
        v_parity: ab.v_parity,
        bar_parity: ab.bar_parity,
        closure_components: tvb_core::diagram::closure_gauss_data(w).mu,
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum VerdictJson {
    Equal {
        /// Derivation script or Markov trace in its text format.
        trace: String,
    },
    Distinct {
        witness: String,
    },
    Unknown {
        reason: String,
        states: usize,
        depth: usize,
    },
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        match v {
            Verdict::Equal(s) => VerdictJson::Equal { trace: s.to_string() },
            Verdict::Distinct(w) => VerdictJson::Distinct { witness: w.clone() },
            Verdict::Unknown(e) => VerdictJson::Unknown { reason: e.reason.clone(), states: e.states, depth: e.depth },
        }
    }
}

impl From<&MarkovVerdict> for VerdictJson {
    fn from(v: &MarkovVerdict) -> Self {
        match v {
            MarkovVerdict::Equal(t) => VerdictJson::Equal { trace: t.to_string() },
            MarkovVerdict::Distinct(w) => VerdictJson::Distinct { witness: w.clone() },
            MarkovVerdict::Unknown(e) => VerdictJson::Unknown { reason: e.reason.clone(), states: e.states, depth: e.depth },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationJson {
    pub relation: String,
    #[serde(flatten)]
    pub verdict: VerdictJson,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportJson {
    pub direction: String,
    pub per_relation: Vec<RelationJson>,
    pub all_proven: bool,
}

impl From<&PresentationReport> for ReportJson {
    fn from(r: &PresentationReport) -> Self {
        ReportJson {
            direction: r.direction.to_string(),
            per_relation: r
                .per_relation
                .iter()
                .map(|(name, v)| RelationJson { relation: name.clone(), verdict: v.into() })
                .collect(),
            all_proven: r.all_proven,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaJson {
    pub lemma: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}
