//! Verification campaigns and their JSON reports.
//!
//! A campaign expands a [`CampaignConfig`] into cases, runs them (in
//! parallel, collected in case order) and aggregates a
//! [`VerificationReport`]. Reports are deterministic for a given config:
//! the `hash` field covers everything except `timings`.

mod campaigns;
pub mod corpus;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::codec::encode_graph6;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::Exec;

pub const REPORT_SCHEMA: &str = "pivotwidth.report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Campaign {
    /// Involutions, pivot identities and cut-rank invariance.
    OpsLaws,
    /// Width under complementation, bipartite complementation and twins.
    Lifting,
    /// Tree path-width against the exact solver; caterpillars; long paths.
    TreeIdentities,
    /// Round trips, canonicity and rewrite rules of split decompositions.
    SplitDecomp,
    /// `pw(T_D) / 2 <= lrw <= pw(T_D) + 1` on distance-hereditary graphs.
    Sandwich,
    /// `(3P1, W4, bw3)`-freeness against the claw pivot-minor search.
    ClawEquivalence,
    /// `P4`-pivot-minor-free graphs have width at most 3.
    P4Bound,
    /// The `(K3, S_{1,2,2})`-free dispatcher.
    #[serde(rename = "k3s122-bound")]
    K3S122Bound,
    /// The complement route for claw-pivot-minor-free graphs.
    ClawBound,
    /// Long bag paths give path pivot-minors, short ones bound the width.
    DhBound,
    /// Class-C graphs over complete binary trees.
    UnboundedMechanism,
}

impl Campaign {
    pub const ALL: [Campaign; 11] = [
        Campaign::OpsLaws,
        Campaign::Lifting,
        Campaign::TreeIdentities,
        Campaign::SplitDecomp,
        Campaign::Sandwich,
        Campaign::ClawEquivalence,
        Campaign::P4Bound,
        Campaign::K3S122Bound,
        Campaign::ClawBound,
        Campaign::DhBound,
        Campaign::UnboundedMechanism,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Campaign::OpsLaws => "ops-laws",
            Campaign::Lifting => "lifting",
            Campaign::TreeIdentities => "tree-identities",
            Campaign::SplitDecomp => "split-decomp",
            Campaign::Sandwich => "sandwich",
            Campaign::ClawEquivalence => "claw-equivalence",
            Campaign::P4Bound => "p4-bound",
            Campaign::K3S122Bound => "k3s122-bound",
            Campaign::ClawBound => "claw-bound",
            Campaign::DhBound => "dh-bound",
            Campaign::UnboundedMechanism => "unbounded-mechanism",
        }
    }

    /// The full-size configuration.
    pub fn default_config(self) -> CampaignConfig {
        let c = |count, max_n, exhaustive_n| CampaignConfig {
            seed: 0,
            count,
            max_n,
            exhaustive_n,
        };
        match self {
            Campaign::OpsLaws => c(500, 12, 6),
            Campaign::Lifting => c(200, 10, 0),
            Campaign::TreeIdentities => c(100, 14, 10),
            Campaign::SplitDecomp => c(200, 12, 7),
            Campaign::Sandwich => c(100, 16, 0),
            Campaign::ClawEquivalence => c(0, 7, 7),
            Campaign::P4Bound => c(300, 8, 7),
            Campaign::K3S122Bound => c(300, 18, 0),
            Campaign::ClawBound => c(200, 14, 0),
            Campaign::DhBound => c(100, 16, 0),
            Campaign::UnboundedMechanism => c(0, 6, 6),
        }
    }

    /// Largest `max_n` and `exhaustive_n` the campaign accepts.
    fn limits(self) -> (usize, usize) {
        match self {
            Campaign::OpsLaws => (64, 6),
            Campaign::Lifting => (14, 0),
            Campaign::TreeIdentities => (22, 12),
            Campaign::SplitDecomp => (64, 7),
            Campaign::Sandwich => (20, 0),
            Campaign::ClawEquivalence => (7, 7),
            Campaign::P4Bound => (12, 7),
            Campaign::K3S122Bound => (22, 0),
            Campaign::ClawBound => (16, 0),
            Campaign::DhBound => (22, 0),
            Campaign::UnboundedMechanism => (6, 6),
        }
    }
}

impl fmt::Display for Campaign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Campaign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Campaign> {
        Campaign::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::precondition(format!("unknown campaign `{s}`")))
    }
}

/// Sizes of a campaign run. Each campaign documents how it reads them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    /// First seed; random case `k` uses `seed + k`.
    pub seed: u64,
    /// Number of random cases.
    pub count: usize,
    /// Largest random order (for the unbounded-mechanism campaign, the
    /// largest tree height).
    pub max_n: usize,
    /// Largest exhaustively enumerated order.
    pub exhaustive_n: usize,
}

impl CampaignConfig {
    pub fn validate(&self, campaign: Campaign) -> Result<()> {
        let (max_n, exhaustive_n) = campaign.limits();
        if self.max_n > max_n {
            return Err(Error::precondition(format!(
                "{campaign}: max_n {} exceeds {max_n}",
                self.max_n
            )));
        }
        if self.exhaustive_n > exhaustive_n {
            return Err(Error::precondition(format!(
                "{campaign}: exhaustive_n {} exceeds {exhaustive_n}",
                self.exhaustive_n
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDescriptor {
    pub generator: String,
    pub seed: Option<u64>,
    /// The graph, or for a batch the first failing graph.
    pub graph6: Option<String>,
}

impl InputDescriptor {
    pub fn seeded(generator: impl Into<String>, seed: u64, g: &Graph) -> InputDescriptor {
        InputDescriptor {
            generator: generator.into(),
            seed: Some(seed),
            graph6: Some(encode_graph6(g)),
        }
    }

    pub fn batch(generator: impl Into<String>) -> InputDescriptor {
        InputDescriptor {
            generator: generator.into(),
            seed: None,
            graph6: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// A size cap was hit; not counted as a failure.
    Capped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationCase {
    pub id: String,
    pub theorem: String,
    pub input: InputDescriptor,
    pub quantities: Value,
    pub verdict: Verdict,
    pub detail: Option<String>,
}

impl VerificationCase {
    pub fn new(
        id: String,
        theorem: &str,
        input: InputDescriptor,
        quantities: Value,
    ) -> VerificationCase {
        VerificationCase {
            id,
            theorem: theorem.to_string(),
            input,
            quantities,
            verdict: Verdict::Pass,
            detail: None,
        }
    }

    /// Marks the case failed unless `ok`.
    pub fn expect(mut self, ok: bool, detail: impl FnOnce() -> String) -> VerificationCase {
        if !ok && self.verdict == Verdict::Pass {
            self.verdict = Verdict::Fail;
            self.detail = Some(detail());
        }
        self
    }

    /// A case whose computation stopped with an error.
    pub fn from_error(
        id: String,
        theorem: &str,
        input: InputDescriptor,
        err: &Error,
    ) -> VerificationCase {
        VerificationCase {
            id,
            theorem: theorem.to_string(),
            input,
            quantities: Value::Null,
            verdict: if matches!(err, Error::SizeCap { .. }) {
                Verdict::Capped
            } else {
                Verdict::Fail
            },
            detail: Some(err.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Suite {
    pub campaign: String,
    pub config: Value,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub total_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub suite: Suite,
    /// Sorted by id.
    pub cases: Vec<VerificationCase>,
    pub passed: usize,
    pub failed: usize,
    pub capped: usize,
    pub ok: bool,
    /// SHA-256 of the report without `hash` and `timings`.
    pub hash: String,
    pub timings: Timings,
}

#[derive(Serialize)]
struct Hashed<'a> {
    schema: &'a str,
    suite: &'a Suite,
    cases: &'a [VerificationCase],
    passed: usize,
    failed: usize,
    capped: usize,
    ok: bool,
}

impl VerificationReport {
    pub fn from_cases(
        suite: Suite,
        mut cases: Vec<VerificationCase>,
        elapsed_ms: u64,
    ) -> VerificationReport {
        cases.sort_by(|a, b| a.id.cmp(&b.id));
        let count = |v: Verdict| cases.iter().filter(|c| c.verdict == v).count();
        let (passed, failed, capped) = (
            count(Verdict::Pass),
            count(Verdict::Fail),
            count(Verdict::Capped),
        );
        let mut report = VerificationReport {
            schema: REPORT_SCHEMA.to_string(),
            suite,
            cases,
            passed,
            failed,
            capped,
            ok: failed == 0,
            hash: String::new(),
            timings: Timings {
                total_ms: elapsed_ms,
            },
        };
        report.hash = report.compute_hash();
        report
    }

    pub fn compute_hash(&self) -> String {
        let view = Hashed {
            schema: &self.schema,
            suite: &self.suite,
            cases: &self.cases,
            passed: self.passed,
            failed: self.failed,
            capped: self.capped,
            ok: self.ok,
        };
        let bytes = serde_json::to_vec(&view).expect("report serializes");
        hex::encode(Sha256::digest(&bytes))
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationCase> {
        self.cases.iter().filter(|c| c.verdict == Verdict::Fail)
    }
}

/// Runs a campaign with its cases spread over `exec`.
pub fn verify_with(
    campaign: Campaign,
    config: &CampaignConfig,
    exec: Exec,
) -> Result<VerificationReport> {
    config.validate(campaign)?;
    let start = Instant::now();
    let cases = campaigns::run(campaign, config, exec);
    let suite = Suite {
        campaign: campaign.id().to_string(),
        config: serde_json::to_value(config).expect("config serializes"),
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    Ok(VerificationReport::from_cases(
        suite,
        cases,
        start.elapsed().as_millis() as u64,
    ))
}

pub fn verify(campaign: Campaign, config: &CampaignConfig) -> Result<VerificationReport> {
    verify_with(campaign, config, Exec::default())
}
