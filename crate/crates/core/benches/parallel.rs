use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use pivotwidth::constructions::families::claw_pm_free_instance;
use pivotwidth::constructions::named;
use pivotwidth::constructions::random::{gnp, rng};
use pivotwidth::harness::{verify_with, Campaign, CampaignConfig};
use pivotwidth::minors::{contains_minor_with, MinorKind, MinorOptions};
use pivotwidth::width::{exact_lrw_with, ExactOptions};
use pivotwidth::Exec;

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn exact_dp(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_lrw");
    group.sample_size(10);
    for n in [14, 17] {
        let g = gnp(&mut rng(n as u64), n, 0.35);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &g, |b, g| {
                b.iter(|| {
                    exact_lrw_with(
                        black_box(g),
                        ExactOptions {
                            exec,
                            ..Default::default()
                        },
                    )
                    .unwrap()
                })
            });
        }
    }
    group.finish();
}

fn minor_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("pivot_minor");
    group.sample_size(10);
    // No claw pivot-minor, so the whole closure is explored.
    let host = (0..)
        .map(|seed| claw_pm_free_instance(seed, 12))
        .find(|g| g.n() == 12)
        .unwrap();
    let claw = named::claw();
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| {
                let opts = MinorOptions {
                    exec,
                    ..Default::default()
                };
                contains_minor_with(black_box(&host), &claw, MinorKind::Pivot, opts).unwrap()
            })
        });
    }
    group.finish();
}

fn campaign(c: &mut Criterion) {
    let mut group = c.benchmark_group("campaign_lifting");
    group.sample_size(10);
    let cfg = CampaignConfig {
        seed: 0,
        count: 40,
        max_n: 10,
        exhaustive_n: 0,
    };
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| verify_with(Campaign::Lifting, black_box(&cfg), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, exact_dp, minor_search, campaign);
criterion_main!(benches);
