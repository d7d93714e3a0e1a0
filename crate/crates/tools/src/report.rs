//! JSON report shapes.
//!
//! Floats are rounded to 12 significant digits before serialization, and
//! magnitudes below `1e-12` are written as zero, so eigensolver noise in the
//! last bits does not leak into reports.

use cyclic_core::bounds::{
    CertifyReport, ConditionBranch, ConditionOutcome, EpsilonAnalysis, MooreResult,
    SpectralVerdict, Verdict,
};
use cyclic_core::cyccut::{CutValidation, EdgeCut, OracleResult, OracleStatus, SeparatingCycle};
use cyclic_core::generators::Example48Labels;
use cyclic_core::graph::ComponentSummary;
use cyclic_core::spectral::{MixingFuzzReport, SpectralSummary};
use cyclic_core::{DegreeProfile, Girth, Graph};
use serde::Serialize;
use serde_json::Value;

/// Rounds to 12 significant digits; non-finite values pass through.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    if x.abs() < 1e-12 {
        return 0.0;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn sig12_all(xs: &[f64]) -> Vec<f64> {
    xs.iter().copied().map(sig12).collect()
}

#[derive(Debug, Serialize)]
pub struct ComponentJson {
    pub side: &'static str,
    pub size: usize,
    pub edges: usize,
    pub has_cycle: bool,
}

impl ComponentJson {
    fn new(side: &'static str, c: &ComponentSummary) -> Self {
        ComponentJson {
            side,
            size: c.vertices.len(),
            edges: c.edges,
            has_cycle: c.has_cycle(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EdgeCutJson {
    #[serde(rename = "X")]
    pub x: Vec<usize>,
    pub size: usize,
    pub crossing: Vec<[usize; 2]>,
    pub components: Vec<ComponentJson>,
}

impl From<&EdgeCut> for EdgeCutJson {
    fn from(cut: &EdgeCut) -> Self {
        let components = cut
            .x_components
            .iter()
            .map(|c| ComponentJson::new("X", c))
            .chain(
                cut.rest_components
                    .iter()
                    .map(|c| ComponentJson::new("rest", c)),
            )
            .collect();
        EdgeCutJson {
            x: cut.x.clone(),
            size: cut.size,
            crossing: cut.crossing.iter().map(|&(u, v)| [u, v]).collect(),
            components,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DegreeProfileJson {
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_regular: bool,
    pub d: Option<usize>,
}

impl From<DegreeProfile> for DegreeProfileJson {
    fn from(p: DegreeProfile) -> Self {
        DegreeProfileJson {
            min_degree: p.min_degree,
            max_degree: p.max_degree,
            is_regular: p.is_regular,
            d: p.d,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SpectrumExtremes {
    pub head: Vec<f64>,
    pub tail: Vec<f64>,
}

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub degree_profile: DegreeProfileJson,
    /// Integer girth or the string `"acyclic"`.
    pub girth: Value,
    pub connected: bool,
    pub two_edge_connected: bool,
    pub lambda2: Option<f64>,
    pub lambda_abs: Option<f64>,
    pub spectrum_extremes: Option<SpectrumExtremes>,
    pub tol: f64,
    pub generator_provenance: Option<Value>,
}

pub fn girth_json(g: Girth) -> Value {
    match g {
        Girth::Finite(v) => Value::from(v),
        Girth::Acyclic => Value::from("acyclic"),
    }
}

impl AnalysisReport {
    pub fn new(
        g: &Graph,
        spectrum: Option<&SpectralSummary>,
        tol: f64,
        provenance: Option<Value>,
    ) -> Self {
        AnalysisReport {
            n: g.n(),
            m: g.m(),
            degree_profile: g.degree_profile().into(),
            girth: girth_json(g.girth()),
            connected: g.is_connected(),
            two_edge_connected: cyclic_core::cyccut::is_two_edge_connected(g),
            lambda2: spectrum.and_then(|s| s.lambda2).map(sig12),
            lambda_abs: spectrum.and_then(|s| s.lambda_abs).map(sig12),
            spectrum_extremes: spectrum.map(|s| {
                let (head, tail) = s.extremes(3);
                SpectrumExtremes {
                    head: sig12_all(&head),
                    tail: sig12_all(&tail),
                }
            }),
            tol,
            generator_provenance: provenance,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ConditionJson {
    pub branch: &'static str,
    pub lambda: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    pub outcome: &'static str,
    pub lower_bound: Option<usize>,
    pub notes: Vec<String>,
}

fn branch_name(b: ConditionBranch) -> &'static str {
    match b {
        ConditionBranch::Girth3 => "girth3",
        ConditionBranch::Even => "even",
        ConditionBranch::Odd => "odd",
    }
}

fn outcome_name(o: ConditionOutcome) -> &'static str {
    match o {
        ConditionOutcome::Holds => "Holds",
        ConditionOutcome::Fails => "Fails",
        ConditionOutcome::Marginal => "Marginal",
    }
}

impl From<&SpectralVerdict> for ConditionJson {
    fn from(v: &SpectralVerdict) -> Self {
        ConditionJson {
            branch: branch_name(v.branch),
            lambda: sig12(v.lambda),
            lhs: sig12(v.lhs),
            rhs: sig12(v.rhs),
            holds: v.holds,
            outcome: outcome_name(v.outcome),
            lower_bound: v.lower_bound,
            notes: v.notes.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CertifyJson {
    pub n: usize,
    pub d: usize,
    pub g: usize,
    pub lambda2: f64,
    pub condition: Option<ConditionJson>,
    pub lower_bound: Option<usize>,
    pub upper_bound: Option<usize>,
    pub witness_cycle: Option<Vec<usize>>,
    pub upper_witness: Option<Vec<[usize; 2]>>,
    pub verdict: &'static str,
    pub value: Option<usize>,
    pub notes: Vec<String>,
}

impl From<&CertifyReport> for CertifyJson {
    fn from(r: &CertifyReport) -> Self {
        let (verdict, value) = match r.verdict {
            Verdict::Equality(v) => ("Equality", Some(v)),
            Verdict::LowerOnly(v) => ("LowerOnly", Some(v)),
            Verdict::UpperOnly(v) => ("UpperOnly", Some(v)),
            Verdict::Inconclusive => ("Inconclusive", None),
        };
        CertifyJson {
            n: r.n,
            d: r.d,
            g: r.g,
            lambda2: sig12(r.lambda2),
            condition: r.condition.as_ref().map(ConditionJson::from),
            lower_bound: r.lower_bound,
            upper_bound: r.upper_bound,
            witness_cycle: r.witness_cycle.clone(),
            upper_witness: r
                .upper_witness
                .as_ref()
                .map(|c| c.iter().map(|&(u, v)| [u, v]).collect()),
            verdict,
            value,
            notes: r.notes.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OracleJson {
    pub status: &'static str,
    pub value: Option<usize>,
    pub witness: Option<EdgeCutJson>,
    pub explored: u64,
    /// `null` for the cyclic oracle, `k` for the component-size oracle.
    pub min_side: Option<usize>,
}

impl OracleJson {
    pub fn new(r: &OracleResult, min_side: Option<usize>) -> Self {
        OracleJson {
            status: match r.status {
                OracleStatus::Value => "Value",
                OracleStatus::Undefined => "Undefined",
            },
            value: r.value,
            witness: r.witness.as_ref().map(EdgeCutJson::from),
            explored: r.explored,
            min_side,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CutCheckJson {
    pub valid: bool,
    pub size: usize,
    pub components: Vec<ComponentJson>,
}

impl CutCheckJson {
    pub fn new(v: &CutValidation, size: usize) -> Self {
        CutCheckJson {
            valid: v.valid,
            size,
            components: v
                .components
                .iter()
                .map(|c| ComponentJson::new("remainder", c))
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct FindCycleJson {
    pub cycle: Vec<usize>,
    pub candidates_tried: usize,
    pub cut: EdgeCutJson,
}

impl From<&SeparatingCycle> for FindCycleJson {
    fn from(s: &SeparatingCycle) -> Self {
        FindCycleJson {
            cycle: s.cycle.clone(),
            candidates_tried: s.candidates_tried,
            cut: EdgeCutJson::from(&s.cut),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MooreJson {
    pub d: f64,
    pub g: usize,
    pub r: usize,
    pub value: f64,
}

impl From<&MooreResult> for MooreJson {
    fn from(m: &MooreResult) -> Self {
        MooreJson {
            d: sig12(m.d),
            g: m.g,
            r: m.r,
            value: sig12(m.value),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EpsilonJson {
    pub d: usize,
    pub g: usize,
    pub r: usize,
    pub coefficients: [f64; 3],
    pub epsilon_star: f64,
    pub f_at_zero: f64,
    pub f_at_dminus2: f64,
    pub f_at_epsilon_star: f64,
}

impl From<&EpsilonAnalysis> for EpsilonJson {
    fn from(a: &EpsilonAnalysis) -> Self {
        EpsilonJson {
            d: a.d,
            g: a.g,
            r: a.r,
            coefficients: [sig12(a.quadratic), sig12(a.linear), sig12(a.constant)],
            epsilon_star: sig12(a.epsilon_star),
            f_at_zero: sig12(a.f_at_zero),
            f_at_dminus2: sig12(a.f_at_dminus2),
            f_at_epsilon_star: sig12(a.f(a.epsilon_star)),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MixingJson {
    pub trials: u64,
    pub failures: u64,
    pub min_slack: Option<f64>,
    pub lambda: f64,
    pub seed: u64,
}

impl From<&MixingFuzzReport> for MixingJson {
    fn from(r: &MixingFuzzReport) -> Self {
        MixingJson {
            trials: r.trials,
            failures: r.failures,
            min_slack: r.min_slack.is_finite().then(|| sig12(r.min_slack)),
            lambda: sig12(r.lambda),
            seed: r.seed,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LabelsJson {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub d: Vec<usize>,
    pub matching_cut: Vec<[usize; 2]>,
}

impl From<&Example48Labels> for LabelsJson {
    fn from(l: &Example48Labels) -> Self {
        LabelsJson {
            a: l.a.clone(),
            b: l.b.clone(),
            c: l.c.clone(),
            d: l.d.clone(),
            matching_cut: l.matching_cut().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}
