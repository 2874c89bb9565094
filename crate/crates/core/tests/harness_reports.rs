use pivotwidth::harness::corpus::{self, CorpusEntry, Generator, Manifest};
use pivotwidth::harness::{verify, verify_with, Campaign, CampaignConfig, Verdict, REPORT_SCHEMA};
use pivotwidth::Exec;

fn small(c: Campaign) -> CampaignConfig {
    let d = c.default_config();
    CampaignConfig {
        seed: 7,
        count: d.count.min(5),
        max_n: if c == Campaign::UnboundedMechanism {
            4
        } else {
            d.max_n.min(8)
        },
        exhaustive_n: d.exhaustive_n.min(5),
    }
}

fn without_timings(v: &mut serde_json::Value) {
    v.as_object_mut().unwrap().remove("timings");
}

#[test]
fn reports_are_byte_identical_apart_from_timings() {
    for c in Campaign::ALL {
        let a = verify_with(c, &small(c), Exec::Parallel).unwrap();
        let b = verify_with(c, &small(c), Exec::Sequential).unwrap();
        let (mut x, mut y) = (
            serde_json::to_value(&a).unwrap(),
            serde_json::to_value(&b).unwrap(),
        );
        without_timings(&mut x);
        without_timings(&mut y);
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            serde_json::to_string(&y).unwrap(),
            "{c}"
        );
        assert_eq!(a.schema, REPORT_SCHEMA);
        assert!(a.cases.windows(2).all(|w| w[0].id < w[1].id), "{c}");
        assert_eq!(a.hash, a.compute_hash());
    }
}

#[test]
fn reports_round_trip_through_json() {
    let r = verify(Campaign::Sandwich, &small(Campaign::Sandwich)).unwrap();
    let text = serde_json::to_string_pretty(&r).unwrap();
    let back: pivotwidth::harness::VerificationReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
}

#[test]
fn graph_cases_carry_replayable_inputs() {
    let r = verify(Campaign::ClawBound, &small(Campaign::ClawBound)).unwrap();
    for case in &r.cases {
        let g6 = case.input.graph6.as_ref().expect("graph6 recorded");
        pivotwidth::codec::decode_graph6(g6).unwrap();
    }
}

#[test]
fn failures_are_counted() {
    let cfg = CampaignConfig {
        seed: 0,
        count: 0,
        max_n: 3,
        exhaustive_n: 4,
    };
    let r = verify(Campaign::UnboundedMechanism, &cfg).unwrap();
    assert!(!r.ok);
    assert_eq!(r.failed, 1);
    let f = r.failures().next().unwrap();
    assert_eq!(f.verdict, Verdict::Fail);
    assert!(f.detail.is_some());
}

#[test]
fn corpus_is_deterministic() {
    let base = std::env::temp_dir().join(format!("pivotwidth-corpus-it-{}", std::process::id()));
    let manifest = Manifest {
        entries: vec![
            CorpusEntry {
                name: "trees".into(),
                generator: Generator::RandomTree,
                seed: 3,
                count: 20,
                n: 11,
            },
            CorpusEntry {
                name: "gnp".into(),
                generator: Generator::Gnp { p: 0.3 },
                seed: 3,
                count: 20,
                n: 9,
            },
            CorpusEntry {
                name: "cographs".into(),
                generator: Generator::Cograph,
                seed: 0,
                count: 10,
                n: 8,
            },
            CorpusEntry {
                name: "claw".into(),
                generator: Generator::ClawPmFree,
                seed: 0,
                count: 5,
                n: 10,
            },
        ],
    };
    let a = corpus::build(&manifest, &base.join("a")).unwrap();
    let b = corpus::build(&manifest, &base.join("b")).unwrap();
    assert_eq!(a, b);
    for e in &a.entries {
        for f in &e.files {
            let x = std::fs::read(base.join("a").join(&f.path)).unwrap();
            let y = std::fs::read(base.join("b").join(&f.path)).unwrap();
            assert_eq!(x, y);
        }
    }
    let report = corpus::check(&base.join("b")).unwrap();
    assert!(report.ok);
    assert_eq!(report.cases.len(), 4);
    std::fs::remove_dir_all(&base).unwrap();
}
