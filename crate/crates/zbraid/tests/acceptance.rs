//! The acceptance gate: every criterion runs its property suite at full size
//! with a fixed seed and prints one PASS/FAIL line. Exits nonzero if any
//! criterion fails.

use std::process::ExitCode;
use std::time::Duration;

use zbraid::suites::{self, Config};

struct Criterion {
    number: usize,
    title: &'static str,
    suite: &'static str,
    limit: Option<Duration>,
}

const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, title: "Bruhat oracle, exhaustive", suite: "bruhat", limit: Some(Duration::from_secs(10)) },
    Criterion { number: 2, title: "classical germ engine, exhaustive", suite: "classical", limit: Some(Duration::from_secs(60)) },
    Criterion { number: 3, title: "Z^n germ laws", suite: "germ-laws", limit: Some(Duration::from_secs(300)) },
    Criterion { number: 4, title: "lattice laws", suite: "lattice", limit: None },
    Criterion { number: 5, title: "join leastness", suite: "join-leastness", limit: None },
    Criterion { number: 6, title: "normal-form soundness and stability", suite: "nf", limit: Some(Duration::from_secs(600)) },
    Criterion { number: 7, title: "presentation pipeline", suite: "presentation", limit: None },
    Criterion { number: 8, title: "connecting derivations", suite: "connect", limit: None },
    Criterion { number: 9, title: "performance floor", suite: "performance", limit: None },
];

fn main() -> ExitCode {
    // `cargo test -- <filter>` runs the criteria whose suite name matches
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let cfg = Config { seed: 2024, ..Config::default() };
    let mut failed = 0;
    for c in CRITERIA {
        if !filter.is_empty() && !filter.iter().any(|f| c.suite.contains(f.as_str())) {
            continue;
        }
        let r = suites::run(c.suite, &cfg).expect("known suite");
        let in_time = c.limit.is_none_or(|l| r.elapsed <= l);
        let ok = r.passed() && in_time;
        failed += usize::from(!ok);
        let limit = c.limit.map(|l| format!(", limit {}s", l.as_secs())).unwrap_or_default();
        println!(
            "{} criterion {} ({}): {} checks, {} failures, {:.1}s{limit}",
            if ok { "PASS" } else { "FAIL" },
            c.number,
            c.title,
            r.checks,
            r.failures.len(),
            r.elapsed.as_secs_f64(),
        );
        for n in &r.notes {
            println!("    {n}");
        }
        for f in r.failures.iter().take(10) {
            println!("    failure: {f}");
        }
        if !in_time {
            println!("    over the time limit");
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    } else {
        println!("all criteria passed");
        ExitCode::SUCCESS
    }
}
