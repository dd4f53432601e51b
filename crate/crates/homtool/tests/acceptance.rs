//! Acceptance run: every criterion at full scale, one line per criterion.
//! Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use homtool::{run_suite, CaseResult, SuiteConfig};

struct Criterion {
    id: u32,
    title: &'static str,
    suite: &'static str,
    limit: Option<Duration>,
}

const fn minutes(m: u64) -> Option<Duration> {
    Some(Duration::from_secs(60 * m))
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, title: "involution reduction mod 2", suite: "involution", limit: minutes(5) },
    Criterion { id: 2, title: "order-3 reduction mod 3", suite: "prime", limit: None },
    Criterion { id: 3, title: "composite orders do not reduce (K5, order 6)", suite: "composite", limit: None },
    Criterion { id: 4, title: "confluence for p = 2, 3", suite: "confluence", limit: minutes(10) },
    Criterion { id: 5, title: "quotient identity and inj(h, h) = |Aut(h)|", suite: "quotient", limit: None },
    Criterion { id: 6, title: "mod-2 Lovasz discrimination", suite: "lovasz", limit: None },
    Criterion { id: 7, title: "gadget algebra", suite: "gadget-algebra", limit: None },
    Criterion { id: 8, title: "basis construction", suite: "basis", limit: None },
    Criterion { id: 9, title: "pinning oracles", suite: "pinning", limit: None },
    Criterion { id: 10, title: "asymmetric tree structure", suite: "tree-structure", limit: None },
    Criterion { id: 11, title: "independent-set reduction", suite: "indset-reduction", limit: minutes(30) },
    Criterion { id: 12, title: "dichotomy endpoints and easy targets", suite: "dichotomy", limit: None },
    Criterion { id: 13, title: "component restriction", suite: "component", limit: None },
];

fn summary(cases: &[CaseResult]) -> (u64, u64) {
    cases.iter().fold((0, 0), |(c, f), r| (c + r.checked, f + r.failed))
}

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    let mut all = true;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = run_suite(c.suite, &cfg);
        let took = start.elapsed();
        let in_time = c.limit.is_none_or(|l| took < l);
        let line = match &outcome {
            Ok(cases) => {
                let (checked, failed) = summary(cases);
                let ok = cases.iter().all(|r| r.passed) && in_time;
                all &= ok;
                let status = if ok { "PASS" } else { "FAIL" };
                let mut line = format!(
                    "criterion {:>2}: {status} {} ({checked} checks, {failed} failed, {:.1}s",
                    c.id,
                    c.title,
                    took.as_secs_f64()
                );
                if let Some(l) = c.limit {
                    line.push_str(&format!(", limit {}s", l.as_secs()));
                }
                line.push(')');
                for r in cases.iter().filter(|r| !r.passed) {
                    line.push_str(&format!("\n    failing case: {}", r.name));
                    for f in &r.failures {
                        line.push_str(&format!("\n        {f}"));
                    }
                }
                line
            }
            Err(e) => {
                all = false;
                format!("criterion {:>2}: FAIL {} (error: {e})", c.id, c.title)
            }
        };
        println!("{line}");
    }
    if all {
        println!("all {} criteria passed", CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("some criteria failed");
        ExitCode::FAILURE
    }
}
