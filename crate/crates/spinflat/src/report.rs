//! Serialized forms of a [`SpinReport`]: `key=value` text, JSON and TSV rows.
//!
//! The field names `orientable`, `holonomy_order`, `sylow_order`,
//! `spin_exists`, `count_cover`, `hom_z2` and `count_manifold` are stable.

use std::fmt::Write as _;

use serde::Serialize;
use spinflat_core::decide::EpsilonAssignments;
use spinflat_core::word::DisplayWord;
use spinflat_core::SpinReport;

pub const TSV_HEADER: &str =
    "name\torientable\tholonomy_order\tsylow_order\tspin_exists\tcount_cover\thom_z2\tcount_manifold";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDoc {
    pub orientable: bool,
    pub holonomy_order: usize,
    pub sylow_order: usize,
    pub spin_exists: bool,
    pub count_cover: u128,
    pub hom_z2: u128,
    pub count_manifold: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_count: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<EpsilonDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorDoc {
    /// The cover generator as a word in the input generators `g1, g2, ...`.
    pub word: String,
    /// Reference lift `x_j`; solutions flip its sign where `s_j = 1`.
    pub lift: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionDoc {
    /// Bit `i` gives `ε(a_i) = (-1)^{u_i}`.
    pub u: String,
    /// Bit `j` gives `ε(γ_j) = (-1)^{s_j} x_j`.
    pub s: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpsilonDoc {
    pub generators: Vec<GeneratorDoc>,
    pub solutions: Vec<SolutionDoc>,
    /// `true` when fewer than `count_cover` solutions are listed.
    pub truncated: bool,
}

fn bits(v: &[bool]) -> String {
    v.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

impl EpsilonDoc {
    fn new(e: &EpsilonAssignments, count: u128) -> Self {
        Self {
            generators: e
                .generator_words
                .iter()
                .zip(&e.lifts)
                .map(|(w, x)| GeneratorDoc { word: DisplayWord(w).to_string(), lift: x.to_string() })
                .collect(),
            solutions: e.solutions.iter().map(|(u, s)| SolutionDoc { u: bits(u), s: bits(s) }).collect(),
            truncated: (e.solutions.len() as u128) < count,
        }
    }
}

impl From<&SpinReport> for ReportDoc {
    fn from(r: &SpinReport) -> Self {
        Self {
            orientable: r.orientable,
            holonomy_order: r.holonomy_order,
            sylow_order: r.sylow_order,
            spin_exists: r.spin_exists,
            count_cover: r.count_cover,
            hom_z2: r.hom_z2,
            count_manifold: r.count_manifold,
            oracle_count: r.oracle_count,
            epsilon: r.epsilon.as_ref().map(|e| EpsilonDoc::new(e, r.count_cover)),
        }
    }
}

impl ReportDoc {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "orientable={}", self.orientable);
        let _ = writeln!(out, "holonomy_order={}", self.holonomy_order);
        let _ = writeln!(out, "sylow_order={}", self.sylow_order);
        let _ = writeln!(out, "spin_exists={}", self.spin_exists);
        let _ = writeln!(out, "count_cover={}", self.count_cover);
        let _ = writeln!(out, "hom_z2={}", self.hom_z2);
        let _ = writeln!(out, "count_manifold={}", self.count_manifold);
        if let Some(c) = self.oracle_count {
            let _ = writeln!(out, "oracle_count={c}");
        }
        if let Some(e) = &self.epsilon {
            for (j, g) in e.generators.iter().enumerate() {
                let _ = writeln!(out, "generator.{}={}", j + 1, g.word);
                let _ = writeln!(out, "lift.{}={}", j + 1, g.lift);
            }
            for (k, s) in e.solutions.iter().enumerate() {
                let _ = writeln!(out, "solution.{}=u:{} s:{}", k + 1, s.u, s.s);
            }
            if e.truncated {
                let _ = writeln!(out, "solutions_truncated=true");
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }

    pub fn tsv_fields(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.orientable,
            self.holonomy_order,
            self.sylow_order,
            self.spin_exists,
            self.count_cover,
            self.hom_z2,
            self.count_manifold
        )
    }
}
