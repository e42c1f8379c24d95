use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::construct::{Builder, Certificate};
use crate::engine::{jordan_constant, normal_abelian_profile, EngineOptions};

use super::corpus::{Corpus, CorpusEntry, Relation, Section, SetRule, Tag};

/// Which part of the corpus to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    One(Section),
    All,
}

impl Selection {
    pub fn name(self) -> &'static str {
        match self {
            Selection::One(s) => s.name(),
            Selection::All => "all",
        }
    }

    fn includes(self, s: Section) -> bool {
        matches!(self, Selection::All) || self == Selection::One(s)
    }
}

impl std::str::FromStr for Selection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            Ok(Selection::All)
        } else {
            s.parse().map(Selection::One)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified corpus row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowReport {
    pub section: Section,
    pub label: String,
    pub expr: String,
    pub tag: Tag,
    /// Computed order (0 when the group could not be built).
    pub order: usize,
    /// Least index of a normal abelian subgroup of the whole group.
    pub i: usize,
    #[serde(rename = "J")]
    pub jordan: usize,
    #[serde(rename = "expectedJ")]
    pub expected_jordan: Option<usize>,
    pub profile: Vec<String>,
    #[serde(rename = "expectedProfile")]
    pub expected_profile: Option<Vec<String>>,
    pub pass: bool,
    /// Mismatches, construction failures and other remarks.
    pub notes: Vec<String>,
    pub millis: u64,
}

/// One aggregate value-set comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetReport {
    pub section: Section,
    pub name: String,
    pub relation: Relation,
    pub computed: Vec<usize>,
    pub expected: Vec<usize>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub section: String,
    pub rows: Vec<RowReport>,
    pub sets: Vec<SetReport>,
    pub status: Status,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The same report with every timing field zeroed, for byte-level
    /// comparisons between runs.
    pub fn without_timing(mut self) -> Self {
        for r in &mut self.rows {
            r.millis = 0;
        }
        self
    }
}

/// Verifies one corpus row: builds the group (the row's expected order,
/// profile and isomorphism partner act as the certificate choosing among
/// candidate constructions), then computes `i`, `J` and the profile.
pub fn verify_entry(entry: &CorpusEntry, opts: &EngineOptions) -> RowReport {
    let start = Instant::now();
    let mut row = RowReport {
        section: entry.section,
        label: entry.label.clone(),
        expr: entry.expr_text.clone(),
        tag: entry.tag,
        order: 0,
        i: 0,
        jordan: 0,
        expected_jordan: entry.jordan,
        profile: Vec::new(),
        expected_profile: entry
            .profile
            .as_ref()
            .map(|p| p.iter().map(|t| t.to_string()).collect()),
        pass: false,
        notes: Vec::new(),
        millis: 0,
    };
    let cert = Certificate {
        order: Some(entry.order),
        profile: entry.profile.clone(),
        iso_reference: entry.isomorphic_to.clone(),
        ..Default::default()
    };
    let g = match Builder::new().build_certified(&entry.expr, &cert) {
        Ok((g, report)) => {
            if let Some(iso) = report.checks.iter().find(|c| c.name == "isomorphism") {
                row.notes.push(iso.detail.clone());
            }
            g
        }
        Err(e) => {
            row.notes.push(format!("construction failed: {e}"));
            row.millis = start.elapsed().as_millis() as u64;
            return row;
        }
    };
    row.order = g.order();
    row.profile = normal_abelian_profile(&g)
        .types()
        .iter()
        .map(|t| t.to_string())
        .collect();
    match jordan_constant(&g, opts) {
        Ok(r) => {
            row.i = r.whole_group_index;
            row.jordan = r.jordan;
        }
        Err(e) => {
            row.notes.push(format!("engine error: {e}"));
            row.millis = start.elapsed().as_millis() as u64;
            return row;
        }
    }
    let mut pass = row.order == entry.order;
    if !pass {
        row.notes.push(format!(
            "order {} differs from the expected {}",
            row.order, entry.order
        ));
    }
    if let Some(j) = entry.jordan {
        if row.jordan != j {
            pass = false;
            row.notes.push(format!(
                "J = {} differs from the stated value {j}",
                row.jordan
            ));
        }
    }
    if let Some(p) = &row.expected_profile {
        if *p != row.profile {
            pass = false;
            row.notes.push("normal abelian profile differs".into());
        }
    }
    // some arguments bound only the whole-group index; a larger J would
    // mean a proper subgroup does worse, which is worth flagging
    if row.i != row.jordan {
        row.notes.push(format!(
            "J = {} exceeds the whole-group index i = {}",
            row.jordan, row.i
        ));
    }
    row.pass = pass;
    row.millis = start.elapsed().as_millis() as u64;
    row
}

fn verify_set(rule: &SetRule, rows: &[RowReport]) -> SetReport {
    let pairs: Vec<(Tag, usize)> = rows
        .iter()
        .filter(|r| r.section == rule.section)
        .map(|r| (r.tag, r.jordan))
        .collect();
    let computed = rule.gather(&pairs);
    SetReport {
        section: rule.section,
        name: rule.name.clone(),
        relation: rule.relation,
        pass: rule.relation.holds(&computed, &rule.expected),
        computed,
        expected: rule.expected.clone(),
    }
}

/// Verifies the selected rows concurrently and then the aggregate sets.
/// Rows come back in corpus order whatever the completion order.
pub fn run_verification(
    corpus: &Corpus,
    selection: Selection,
    opts: &EngineOptions,
) -> VerificationReport {
    let entries: Vec<&CorpusEntry> = corpus
        .entries
        .iter()
        .filter(|e| selection.includes(e.section))
        .collect();
    let rows: Vec<RowReport> =
        opts.run(|| entries.par_iter().map(|e| verify_entry(e, opts)).collect());
    let sets: Vec<SetReport> = corpus
        .sets
        .iter()
        .filter(|s| selection.includes(s.section))
        .map(|s| verify_set(s, &rows))
        .collect();
    let ok = rows.iter().all(|r| r.pass) && sets.iter().all(|s| s.pass);
    VerificationReport {
        section: selection.name().to_string(),
        rows,
        sets,
        status: if ok { Status::Pass } else { Status::Fail },
    }
}
