//! Full-size verification campaigns, one line per criterion.
//!
//! Runs as its own test binary with the default campaign configurations.
//! A criterion passes when every case of its campaigns passes, no case hit
//! a size cap and the run stayed inside its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use pivotwidth::harness::{verify, Campaign, VerificationReport};

struct Criterion {
    number: usize,
    name: &'static str,
    campaigns: &'static [Campaign],
    budget: Duration,
}

const fn minutes(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        number: 1,
        name: "operator laws",
        campaigns: &[Campaign::OpsLaws],
        budget: minutes(2),
    },
    Criterion {
        number: 2,
        name: "lifting inequalities",
        campaigns: &[Campaign::Lifting],
        budget: minutes(5),
    },
    Criterion {
        number: 3,
        name: "tree identities",
        campaigns: &[Campaign::TreeIdentities],
        budget: minutes(5),
    },
    Criterion {
        number: 4,
        name: "split decomposition and sandwich",
        campaigns: &[Campaign::SplitDecomp, Campaign::Sandwich],
        budget: minutes(15),
    },
    Criterion {
        number: 5,
        name: "claw pivot-minor equivalence",
        campaigns: &[Campaign::ClawEquivalence],
        budget: minutes(60),
    },
    Criterion {
        number: 6,
        name: "P4 pivot-minor-free width",
        campaigns: &[Campaign::P4Bound],
        budget: minutes(20),
    },
    Criterion {
        number: 7,
        name: "(K3, S122)-free dispatcher",
        campaigns: &[Campaign::K3S122Bound],
        budget: minutes(30),
    },
    Criterion {
        number: 8,
        name: "claw pivot-minor-free width",
        campaigns: &[Campaign::ClawBound],
        budget: minutes(10),
    },
    Criterion {
        number: 9,
        name: "DH path pivot-minor bound",
        campaigns: &[Campaign::DhBound],
        budget: minutes(20),
    },
    Criterion {
        number: 10,
        name: "unbounded class growth",
        campaigns: &[Campaign::UnboundedMechanism],
        budget: minutes(15),
    },
];

fn summary(r: &VerificationReport) -> String {
    let mut s = format!(
        "{}: {} passed, {} failed, {} capped",
        r.suite.campaign, r.passed, r.failed, r.capped
    );
    if let Some(f) = r.failures().next() {
        s += &format!(
            "; first failure {} ({})",
            f.id,
            f.detail.as_deref().unwrap_or("")
        );
        if let Some(g6) = &f.input.graph6 {
            s += &format!(" graph6 {g6}");
        }
    }
    s
}

fn main() -> ExitCode {
    // `cargo test -- <filter>` forwards libtest arguments; keep only filters.
    let filters: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut all_ok = true;
    for c in &CRITERIA {
        let label = format!("criterion {:02} {}", c.number, c.name);
        if !filters.is_empty() && !filters.iter().any(|f| label.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let mut ok = true;
        let mut notes = Vec::new();
        for &campaign in c.campaigns {
            match verify(campaign, &campaign.default_config()) {
                Ok(r) => {
                    ok &= r.ok && r.capped == 0;
                    notes.push(summary(&r));
                }
                Err(e) => {
                    ok = false;
                    notes.push(format!("{campaign}: {e}"));
                }
            }
        }
        let elapsed = start.elapsed();
        if elapsed > c.budget {
            ok = false;
            notes.push(format!("over budget of {}s", c.budget.as_secs()));
        }
        println!(
            "{} {label} [{:.1}s] {}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            notes.join("; ")
        );
        all_ok &= ok;
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
