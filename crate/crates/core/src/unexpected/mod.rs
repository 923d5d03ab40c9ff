//! Actual and virtual dimensions, AV sequences, verdicts and certificates.

pub mod av;
pub mod curves;
pub mod dims;
pub mod harness;
pub mod sylvester;
pub mod verdict;

pub use av::{av_gin_colon, av_sequence, classify_tail, AvReport, DirectAv, Route};
pub use curves::{curve_av_formula_check, curve_av_value, degree_genus, union_shift_check, CurveAvCheck, UnionShiftCheck};
pub use dims::{adim, dim_triple, fat_point_conditions, vdim_edim, AdimResult, AdimSampler, DimTriple, DEFAULT_TRIALS};
pub use harness::{si_harness, HarnessReport, Outcome};
pub use sylvester::{ci_vdim_closed_form, sylvester_witness, SylvesterWitness};
pub use verdict::{
    certify_no_unexpected, detect, lex_segment_criterion, persistence_table, region, Certification, LexCriterion,
    PersistenceTable, Region, TableCell, UnexpectednessVerdict, Verdict,
};
