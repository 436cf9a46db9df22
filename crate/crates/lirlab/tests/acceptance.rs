//! Acceptance suite: one PASS/FAIL line per criterion, each within its time budget.

use std::process::ExitCode;
use std::time::Duration;

use lirlab::sweeps;

/// Criterion number, title, time budget and the sweeps it runs.
const CRITERIA: &[(u32, &str, u64, &[&str])] = &[
    (1, "paths and cycles", 10, &["thm-paths", "thm-cycles"]),
    (2, "trees", 120, &["thm-trees"]),
    (3, "complete graphs", 900, &["thm-kn"]),
    (4, "bow-tie", 60, &["bowtie"]),
    (5, "powers of cycles", 600, &["thm-powcycle"]),
    (6, "block validators", 60, &["lemma-a6-validator"]),
    (7, "complete multipartite", 300, &["thm-multipartite"]),
    (8, "split graphs", 600, &["thm-split"]),
    (9, "special cacti", 900, &["thm-cactus"]),
    (10, "fixture labels", 1, &["fixture-labels"]),
    (11, "oracle equivalence", 600, &["oracle"]),
];

fn main() -> ExitCode {
    let mut failed = 0;
    for &(number, title, limit, names) in CRITERIA {
        let mut total = Duration::ZERO;
        let mut notes = Vec::new();
        let mut error = None;
        for name in names {
            let suite = sweeps::find(name).expect("criterion names a known sweep");
            let (out, took) = suite.run(None);
            total += took;
            match out {
                Ok(s) => notes.push(s),
                Err(e) => {
                    error.get_or_insert(format!("{name}: {e}"));
                }
            }
        }
        let limit = Duration::from_secs(limit);
        if error.is_none() && total > limit {
            error = Some(format!("took {total:.2?}, limit {limit:?}"));
        }
        match error {
            None => println!("criterion {number:>2} PASS {title}: {} ({total:.2?})", notes.join("; ")),
            Some(e) => {
                failed += 1;
                println!("criterion {number:>2} FAIL {title}: {e} ({total:.2?})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
