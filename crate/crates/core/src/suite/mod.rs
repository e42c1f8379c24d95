//! Corpus of maximal finite groups with expected values, the verification
//! runner, and report rendering.

mod corpus;
pub mod report;
mod verify;

pub use corpus::{
    Aggregate, Corpus, CorpusEntry, CorpusError, Relation, Section, SetRule, Tag, TagSelector,
    BUILTIN_CORPUS,
};
pub use report::Format;
pub use verify::{
    run_verification, verify_entry, RowReport, Selection, SetReport, Status, VerificationReport,
};
