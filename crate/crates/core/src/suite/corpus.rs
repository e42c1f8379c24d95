use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::GroupExpr;
use crate::engine::AbelianType;

/// The corpus shipped with the crate.
pub const BUILTIN_CORPUS: &str = include_str!("../../data/corpus.txt");

#[derive(Debug, Error, PartialEq, Eq)]
#[error("corpus line {line}: {message}")]
pub struct CorpusError {
    pub line: usize,
    pub message: String,
}

/// The four groups of rows in the corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Section {
    Noniso,
    Ordinary,
    Supersingular,
    Simple,
}

impl Section {
    pub const ALL: [Section; 4] = [
        Section::Noniso,
        Section::Ordinary,
        Section::Supersingular,
        Section::Simple,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section::Noniso => "noniso",
            Section::Ordinary => "ordinary",
            Section::Supersingular => "supersingular",
            Section::Simple => "simple",
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Section {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Section::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown section `{s}`"))
    }
}

/// Characteristic tag of a row: which characteristic the group belongs to,
/// or `Generic` for groups occurring in every characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Tag {
    Char(u32),
    Generic,
    NotApplicable,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::Char(p) => write!(f, "{p}"),
            Tag::Generic => f.write_str("generic"),
            Tag::NotApplicable => f.write_str("n/a"),
        }
    }
}

impl FromStr for Tag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "generic" => Ok(Tag::Generic),
            "n/a" => Ok(Tag::NotApplicable),
            _ => s
                .parse::<u32>()
                .ok()
                .filter(|p| [2, 3, 5].contains(p))
                .map(Tag::Char)
                .ok_or_else(|| format!("unknown tag `{s}` (expected 2, 3, 5, generic or n/a)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub section: Section,
    pub label: String,
    pub expr: GroupExpr,
    /// The expression as written in the corpus.
    pub expr_text: String,
    pub order: usize,
    pub jordan: Option<usize>,
    pub profile: Option<Vec<AbelianType>>,
    pub tag: Tag,
    /// A second expression the constructed group must be isomorphic to.
    pub isomorphic_to: Option<GroupExpr>,
    pub citation: String,
}

/// How a computed value set is compared with the expected one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Equal,
    Subset,
    Superset,
}

impl Relation {
    pub fn holds(self, computed: &[usize], expected: &[usize]) -> bool {
        let within = |a: &[usize], b: &[usize]| a.iter().all(|x| b.contains(x));
        match self {
            Relation::Equal => within(computed, expected) && within(expected, computed),
            Relation::Subset => within(computed, expected),
            Relation::Superset => within(expected, computed),
        }
    }
}

/// How row values are gathered into a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Aggregate {
    /// Every J of the selected rows.
    Values,
    /// One maximum per listed tag.
    Maxima,
}

/// Which rows a set gathers from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TagSelector {
    /// Every row of the section.
    All,
    /// Rows carrying one of these tags. A characteristic tag also pulls in
    /// the generic rows, since those groups occur in every characteristic.
    Tags(Vec<Tag>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetRule {
    pub section: Section,
    pub name: String,
    pub relation: Relation,
    pub aggregate: Aggregate,
    pub tags: TagSelector,
    pub expected: Vec<usize>,
    pub citation: String,
}

impl SetRule {
    /// Gathers the set from `(tag, J)` pairs of the section's rows.
    /// The result is sorted and deduplicated.
    pub fn gather(&self, rows: &[(Tag, usize)]) -> Vec<usize> {
        let pick = |t: Tag| -> Vec<usize> {
            rows.iter()
                .filter(|(rt, _)| *rt == t || (matches!(t, Tag::Char(_)) && *rt == Tag::Generic))
                .map(|&(_, j)| j)
                .collect()
        };
        let mut out: Vec<usize> = match (&self.tags, self.aggregate) {
            (TagSelector::All, Aggregate::Values) => rows.iter().map(|&(_, j)| j).collect(),
            (TagSelector::All, Aggregate::Maxima) => {
                rows.iter().map(|&(_, j)| j).max().into_iter().collect()
            }
            (TagSelector::Tags(ts), Aggregate::Values) => {
                ts.iter().flat_map(|&t| pick(t)).collect()
            }
            (TagSelector::Tags(ts), Aggregate::Maxima) => ts
                .iter()
                .filter_map(|&t| pick(t).into_iter().max())
                .collect(),
        };
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    pub sets: Vec<SetRule>,
}

impl Corpus {
    pub fn builtin() -> Corpus {
        Corpus::parse(BUILTIN_CORPUS).expect("the built-in corpus is well formed")
    }

    pub fn section(&self, s: Section) -> impl Iterator<Item = &CorpusEntry> {
        self.entries.iter().filter(move |e| e.section == s)
    }

    pub fn find(&self, label: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.label == label)
    }

    /// Parses the pipe-separated corpus format. Blank lines and lines
    /// starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Corpus, CorpusError> {
        let mut entries = Vec::new();
        let mut sets = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let err = |message: String| CorpusError { line, message };
            // the citation is last and may itself contain `|`
            let is_set = trimmed.split('|').next().map(str::trim) == Some("set");
            let width = if is_set { 8 } else { 9 };
            let cols: Vec<&str> = trimmed.splitn(width, '|').map(str::trim).collect();
            if is_set {
                sets.push(parse_set(&cols).map_err(err)?);
            } else {
                entries.push(parse_entry(&cols).map_err(err)?);
            }
        }
        let mut seen = std::collections::HashSet::new();
        for e in &entries {
            if !seen.insert(&e.label) {
                return Err(CorpusError {
                    line: 0,
                    message: format!("duplicate label {}", e.label),
                });
            }
        }
        Ok(Corpus { entries, sets })
    }
}

fn optional(s: &str) -> Option<&str> {
    (s != "-").then_some(s)
}

fn parse_entry(cols: &[&str]) -> Result<CorpusEntry, String> {
    let [section, label, expr, order, jordan, profile, tag, iso, citation] = cols else {
        return Err(format!("expected 9 columns, found {}", cols.len()));
    };
    let section: Section = section.parse()?;
    let parsed: GroupExpr = expr
        .parse()
        .map_err(|e| format!("expression `{expr}`: {e}"))?;
    let order: usize = order.parse().map_err(|_| format!("bad order `{order}`"))?;
    let jordan = optional(jordan)
        .map(|j| j.parse::<usize>().map_err(|_| format!("bad J `{j}`")))
        .transpose()?;
    if let Some(j) = jordan {
        if j == 0 || !order.is_multiple_of(j) {
            return Err(format!("expected J {j} does not divide the order {order}"));
        }
    }
    // central products shrink by the identified centre, so their order is
    // only known after building
    let o = parsed.expected_order();
    if !matches!(parsed, GroupExpr::CentralProduct(..)) && o != order {
        return Err(format!("`{expr}` has order {o}, the row says {order}"));
    }
    let profile = optional(profile)
        .map(|p| {
            p.split(',')
                .map(|t| t.trim().parse::<AbelianType>())
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()
        .map_err(|e| format!("profile: {e}"))?
        .map(|mut v| {
            v.sort();
            v.dedup();
            v
        });
    let isomorphic_to = optional(iso)
        .map(|t| {
            t.parse::<GroupExpr>()
                .map_err(|e| format!("expression `{t}`: {e}"))
        })
        .transpose()?;
    Ok(CorpusEntry {
        section,
        label: label.to_string(),
        expr: parsed,
        expr_text: expr.to_string(),
        order,
        jordan,
        profile,
        tag: tag.parse()?,
        isomorphic_to,
        citation: citation.to_string(),
    })
}

fn parse_set(cols: &[&str]) -> Result<SetRule, String> {
    let [_, section, name, relation, aggregate, tags, expected, citation] = cols else {
        return Err(format!(
            "expected 8 columns in a set line, found {}",
            cols.len()
        ));
    };
    let relation = match *relation {
        "equal" => Relation::Equal,
        "subset" => Relation::Subset,
        "superset" => Relation::Superset,
        r => return Err(format!("unknown relation `{r}`")),
    };
    let aggregate = match *aggregate {
        "values" => Aggregate::Values,
        "maxima" => Aggregate::Maxima,
        a => return Err(format!("unknown aggregate `{a}`")),
    };
    let tags = if *tags == "*" {
        TagSelector::All
    } else {
        TagSelector::Tags(
            tags.split(',')
                .map(|t| t.trim().parse())
                .collect::<Result<_, _>>()?,
        )
    };
    let mut expected: Vec<usize> = expected
        .split(',')
        .map(|v| v.trim().parse().map_err(|_| format!("bad value `{v}`")))
        .collect::<Result<_, _>>()?;
    expected.sort_unstable();
    expected.dedup();
    Ok(SetRule {
        section: section.parse()?,
        name: name.to_string(),
        relation,
        aggregate,
        tags,
        expected,
        citation: citation.to_string(),
    })
}
