//! Versioned JSON reports.
//!
//! A report embeds the full [`RunConfig`], so the same configuration and inputs
//! reproduce it byte for byte. There is no timestamp field.

use serde::Serialize;

use crate::algebra::field::FieldSpec;
use crate::groebner::Budget;
use crate::hilbert::HilbertFunction;
use crate::sequences::{SiVerdict, Tail};
use crate::unexpected::{AvReport, Certification, PersistenceTable, UnexpectednessVerdict, Verdict};

pub const SCHEMA: &str = "avkit/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Table,
    Json,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub field_mode: FieldSpec,
    pub seed: u64,
    pub trials: usize,
    pub budgets: Budget,
    pub output: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            field_mode: FieldSpec::default(),
            seed: 0,
            trials: crate::unexpected::DEFAULT_TRIALS,
            budgets: Budget::default(),
            output: OutputFormat::Table,
        }
    }
}

/// Where the ideal came from and what it is.
#[derive(Clone, Debug, Serialize)]
pub struct SchemeInfo {
    pub source: String,
    pub nvars: usize,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleRow {
    pub t: usize,
    pub m: usize,
    pub adim: u64,
    pub vdim: i64,
    pub edim: u64,
    pub verdict: Verdict,
    pub trials_agreed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_hint: Option<String>,
}

impl From<&UnexpectednessVerdict> for TripleRow {
    fn from(v: &UnexpectednessVerdict) -> Self {
        TripleRow {
            t: v.t,
            m: v.m,
            adim: v.adim,
            vdim: v.vdim,
            edim: v.edim,
            verdict: v.verdict,
            trials_agreed: v.trials_agreed,
            witness_hint: v.witness_hint.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AvSummary {
    pub j: usize,
    pub route: String,
    /// `AV_{X,j}(m)` for `m = 1, 2, ...`.
    pub values: Vec<u64>,
    pub tail: Tail,
    pub tail_certified: bool,
    pub positive_part: Vec<u64>,
    pub o_seq: bool,
    pub si: SiVerdict,
}

impl From<&AvReport> for AvSummary {
    fn from(r: &AvReport) -> Self {
        AvSummary {
            j: r.j,
            route: r.route.to_string(),
            values: r.values.values.clone(),
            tail: r.values.tail,
            tail_certified: r.tail_certified,
            positive_part: r.positive_support.values.clone(),
            o_seq: r.o_sequence_check,
            si: crate::sequences::is_si_sequence(&r.values),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GinSummary {
    pub degree_cap: usize,
    pub generators: Vec<String>,
    pub borel_certified: bool,
    pub probabilistic: bool,
    pub lex_segment_through_cap: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessSummary {
    pub a: usize,
    pub b: usize,
    pub j: usize,
    pub nvars: usize,
    pub t: usize,
    pub m: usize,
    pub f: String,
    pub g: String,
    pub matrix_det: String,
    pub witness_form: String,
    pub vdim: i64,
}

/// Result of checking one stored expectation.
#[derive(Clone, Debug, Serialize)]
pub struct ExpectationOutcome {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureOutcome {
    pub fixture: String,
    pub passed: bool,
    /// Set when the fixture could not be evaluated at all.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub checks: Vec<ExpectationOutcome>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub config: RunConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scheme: Option<SchemeInfo>,
    pub field_mode: FieldSpec,
    pub seeds: Vec<u64>,
    pub triples: Vec<TripleRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub av: Option<AvSummary>,
    pub certificates: Vec<Certification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertFunction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gin: Option<GinSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<PersistenceTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub fixtures: Vec<FixtureOutcome>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notices: Vec<String>,
}

impl Report {
    pub fn new(command: &str, config: &RunConfig) -> Self {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            config: config.clone(),
            scheme: None,
            field_mode: config.field_mode,
            seeds: Vec::new(),
            triples: Vec::new(),
            av: None,
            certificates: Vec::new(),
            hilbert: None,
            gin: None,
            table: None,
            witness: None,
            fixtures: Vec::new(),
            notices: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
