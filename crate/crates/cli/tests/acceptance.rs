//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach the output.
//! Exits non-zero if any criterion fails.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use bv_core::bench::{log_log_slope, random_braid, run_bench, BenchMode};
use bv_core::braids::{action_equal, BraidWord};
use bv_core::bv::{
    evaluate_word, format_word, generator, project_to_v, BVElement, Family, GenLetter, Side,
};
use bv_core::rng::SplitMix64;
use bv_core::text::parse_element;
use bv_core::trees::Expansion;

const BIN: &str = env!("CARGO_BIN_EXE_bv");

fn bv(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .output()
        .expect("bv binary runs")
}

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        passed,
        detail: detail.into(),
    }
}

// ---------------------------------------------------------------- helpers

fn random_gen_word(rng: &mut SplitMix64, max_len: usize, max_index: usize) -> Vec<GenLetter> {
    let len = rng.below(max_len + 1);
    (0..len)
        .map(|_| {
            let family = [Family::F, Family::B, Family::A][rng.below(3)];
            GenLetter::new(family, rng.below(max_index + 1), rng.coin())
        })
        .collect()
}

fn random_element(rng: &mut SplitMix64, max_len: usize) -> BVElement {
    evaluate_word(&random_gen_word(rng, max_len, 3))
}

fn random_artin(rng: &mut SplitMix64, n: usize, len: usize) -> Vec<i64> {
    (0..len)
        .map(|_| {
            let g = 1 + rng.below(n - 1) as i64;
            if rng.coin() {
                g
            } else {
                -g
            }
        })
        .collect()
}

/// Applies `moves` random braid-relation rewrites; the result is the same braid.
fn rewrite(rng: &mut SplitMix64, n: usize, word: &[i64], moves: usize) -> Vec<i64> {
    let mut w = word.to_vec();
    for _ in 0..moves {
        match rng.below(4) {
            // Insert g g^-1.
            0 => {
                let g = random_artin(rng, n, 1)[0];
                let at = rng.below(w.len() + 1);
                w.splice(at..at, [g, -g]);
            }
            // Cancel a free pair if one exists.
            1 => {
                if let Some(k) = (0..w.len().saturating_sub(1)).find(|&k| w[k] == -w[k + 1]) {
                    w.drain(k..k + 2);
                }
            }
            // Swap far-apart neighbours.
            2 => {
                if w.len() >= 2 {
                    let k = rng.below(w.len() - 1);
                    if (w[k].abs() - w[k + 1].abs()).abs() >= 2 {
                        w.swap(k, k + 1);
                    }
                }
            }
            // a b a -> b a b for adjacent generators of one sign.
            _ => {
                if w.len() >= 3 {
                    let k = rng.below(w.len() - 2);
                    let (a, b, c) = (w[k], w[k + 1], w[k + 2]);
                    if a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1 {
                        w[k] = b;
                        w[k + 1] = a;
                        w[k + 2] = b;
                    }
                }
            }
        }
    }
    w
}

// -------------------------------------------------------------- criteria

fn presentation_suite() -> Verdict {
    let start = Instant::now();
    let out = bv(&["relcheck", "--max-index", "5"]);
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);
    let families = stdout.lines().filter(|l| l.starts_with("family")).count();
    let summary = stdout.lines().last().unwrap_or("").to_string();
    let ok = out.status.code() == Some(0)
        && families == 11
        && !stdout.contains("FAILED")
        && elapsed < Duration::from_secs(60);
    verdict(
        ok,
        format!("{summary}; {families} families; {elapsed:.2?} (limit 60s)"),
    )
}

fn oracle_equivalence() -> Verdict {
    let mut checked = 0usize;
    let mut mismatches = 0usize;
    // Exhaustive: every pair of words with n <= 4 strands and length <= 4.
    for n in 2..=4usize {
        let alphabet: Vec<i64> = (1..n as i64).flat_map(|i| [i, -i]).collect();
        let mut words = vec![vec![]];
        let mut frontier: Vec<Vec<i64>> = vec![vec![]];
        for _ in 0..4 {
            frontier = frontier
                .iter()
                .flat_map(|w| {
                    alphabet.iter().map(move |&g| {
                        let mut v = w.clone();
                        v.push(g);
                        v
                    })
                })
                .collect();
            words.extend(frontier.iter().cloned());
        }
        let braids: Vec<BraidWord> = words
            .iter()
            .map(|w| BraidWord::from_artin(n, w).unwrap())
            .collect();
        let tables: Vec<_> = braids.iter().map(bv_core::braids::artin_action).collect();
        let nfs: Vec<_> = braids.iter().map(|b| b.normal_form()).collect();
        for i in 0..braids.len() {
            for j in i..braids.len() {
                checked += 1;
                if (nfs[i] == nfs[j]) != (tables[i] == tables[j]) {
                    mismatches += 1;
                }
            }
        }
    }
    let exhaustive = checked;
    // Random: 500 pairs, half of them equal by construction.
    let mut rng = SplitMix64::new(2);
    let mut equal_pairs = 0usize;
    for trial in 0..500 {
        let n = 2 + rng.below(7);
        let len = rng.below(31);
        let w = random_artin(&mut rng, n, len);
        let v = if trial % 2 == 0 {
            // Stay within the length bound; an over-long rewrite falls back to w.
            let v = rewrite(&mut rng, n, &w, 12);
            if v.len() <= 30 {
                v
            } else {
                w.clone()
            }
        } else {
            let mut v = w.clone();
            if !v.is_empty() && rng.coin() {
                let k = rng.below(v.len());
                v[k] = -v[k];
            } else {
                let len = rng.below(31);
                v = random_artin(&mut rng, n, len);
            }
            v
        };
        let a = BraidWord::from_artin(n, &w).unwrap();
        let b = BraidWord::from_artin(n, &v).unwrap();
        let eq = a.equals(&b);
        equal_pairs += eq as usize;
        if eq != action_equal(&a, &b) {
            mismatches += 1;
        }
    }
    verdict(
        mismatches == 0,
        format!(
            "{exhaustive} exhaustive pairs + 500 random pairs ({equal_pairs} equal); {mismatches} mismatches"
        ),
    )
}

fn confluence() -> Verdict {
    let mut rng = SplitMix64::new(3);
    let mut failures = 0;
    let mut expansions = 0;
    for _ in 0..500 {
        let e = random_element(&mut rng, 12);
        let mut raw = e.to_raw();
        for _ in 0..rng.below(6) {
            let side = if rng.coin() { Side::Top } else { Side::Bottom };
            let tree = match side {
                Side::Top => &raw.top,
                Side::Bottom => &raw.bot,
            };
            let leaf = 1 + rng.below(tree.leaf_count());
            let leaves = 2 + rng.below(3);
            let sub = bv_core::bench::random_tree(&mut rng, leaves);
            raw = raw
                .expand(
                    side,
                    &Expansion {
                        grafts: vec![(leaf, sub)],
                    },
                )
                .unwrap();
            expansions += 1;
        }
        if !raw.reduce().equals(&e) {
            failures += 1;
        }
    }
    verdict(
        failures == 0,
        format!("500 trials, {expansions} expansions; {failures} failures"),
    )
}

fn group_axioms() -> Verdict {
    let mut rng = SplitMix64::new(4);
    let id = BVElement::identity();
    let mut failures = 0;
    for _ in 0..200 {
        let a = random_element(&mut rng, 8);
        let b = random_element(&mut rng, 8);
        let c = random_element(&mut rng, 8);
        if !a
            .multiply(&b)
            .multiply(&c)
            .equals(&a.multiply(&b.multiply(&c)))
        {
            failures += 1;
        }
    }
    for _ in 0..200 {
        let a = random_element(&mut rng, 12);
        let ok = a.multiply(&a.invert()).is_identity()
            && a.invert().multiply(&a).is_identity()
            && a.multiply(&id).equals(&a)
            && id.multiply(&a).equals(&a);
        failures += !ok as usize;
    }
    verdict(
        failures == 0,
        format!("200 associativity triples, 200 inverse/identity checks; {failures} failures"),
    )
}

fn surgery_laws() -> Verdict {
    let mut rng = SplitMix64::new(5);
    let mut failures = 0;
    for _ in 0..200 {
        let n = 2 + rng.below(7);
        let len = rng.below(13);
        let beta = random_braid(&mut rng, n, len);
        let i = 1 + rng.below(n);
        let doubled = beta.double_strand(i).unwrap();
        let back = doubled.delete_strand(i).unwrap();
        let j = 1 + rng.below(n);
        let deleted = beta.delete_strand(j).unwrap();
        let ok = back.equals(&beta)
            && doubled.len() <= beta.len()
            && back.len() <= doubled.len()
            && deleted.len() <= beta.len();
        failures += !ok as usize;
    }
    verdict(
        failures == 0,
        format!("200 random (braid, i); {failures} failures"),
    )
}

fn quotient_homomorphism() -> Verdict {
    let mut rng = SplitMix64::new(6);
    let mut failures = 0;
    for _ in 0..200 {
        let a = random_element(&mut rng, 10);
        let b = random_element(&mut rng, 10);
        if project_to_v(&a.multiply(&b)) != project_to_v(&a).multiply(&project_to_v(&b)) {
            failures += 1;
        }
    }
    for j in 0..=3 {
        let b = generator(Family::B, j);
        if !project_to_v(&b.multiply(&b)).is_identity() {
            failures += 1;
        }
    }
    verdict(
        failures == 0,
        format!("200 pairs + b_j^2 for j <= 3; {failures} failures"),
    )
}

fn complexity_trend() -> Verdict {
    let rows = run_bench(&[16, 32, 64, 128], 3, BenchMode::Normalized, 1);
    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r.mean_input_bits, r.median_micros))
        .collect();
    let slope = log_log_slope(&points);
    let medians: Vec<String> = rows
        .iter()
        .map(|r| format!("{}:{:.0}us", r.size, r.median_micros))
        .collect();
    verdict(
        slope <= 2.6,
        format!(
            "slope {slope:.3} (limit 2.6); medians {}",
            medians.join(" ")
        ),
    )
}

fn aag_sessions() -> Verdict {
    let start = Instant::now();
    let mut failures = 0;
    for seed in 1..=50u64 {
        let seed = seed.to_string();
        let args = [
            "aag",
            "--seed",
            &seed,
            "--alice-set",
            "4",
            "--alice-len",
            "6",
            "--bob-set",
            "4",
            "--bob-len",
            "6",
            "--gen-len",
            "8",
        ];
        let first = bv(&args);
        let second = bv(&args);
        let ok = first.status.code() == Some(0)
            && String::from_utf8_lossy(&first.stdout)
                .trim_end()
                .ends_with("secrets match")
            && first.stdout == second.stdout;
        failures += !ok as usize;
    }
    let elapsed = start.elapsed();
    verdict(
        failures == 0 && elapsed < Duration::from_secs(120),
        format!("50 seeds, each run twice; {failures} failures; {elapsed:.2?} (limit 120s)"),
    )
}

fn cli_round_trip() -> Verdict {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance-roundtrip");
    std::fs::create_dir_all(&dir).unwrap();
    let mut rng = SplitMix64::new(9);
    let mut failures = 0;
    for k in 0..100 {
        let word = format_word(&random_gen_word(&mut rng, 10, 3));
        let printed = bv(&["nf", &word]);
        let text = String::from_utf8_lossy(&printed.stdout).into_owned();
        let path = dir.join(format!("e{k}.txt"));
        std::fs::write(&path, &text).unwrap();
        let file_arg = format!("@{}", path.display());
        let same = bv(&["eq", &file_arg, &word]);
        let parsed = parse_element(&text)
            .map(|e| e.equals(&evaluate_word(&bv_core::bv::parse_word(&word).unwrap())));
        let ok =
            printed.status.code() == Some(0) && same.status.code() == Some(0) && parsed == Ok(true);
        failures += !ok as usize;
    }
    verdict(
        failures == 0,
        format!("100 elements printed by `bv nf` and re-read; {failures} failures"),
    )
}

fn main() {
    type Criterion = (&'static str, fn() -> Verdict);
    let criteria: [Criterion; 9] = [
        ("presentation suite", presentation_suite),
        ("oracle equivalence", oracle_equivalence),
        ("confluence", confluence),
        ("group axioms", group_axioms),
        ("strand-surgery laws", surgery_laws),
        ("quotient homomorphism", quotient_homomorphism),
        ("complexity trend", complexity_trend),
        ("key-exchange correctness", aag_sessions),
        ("CLI round-trip", cli_round_trip),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = run();
        let tag = if v.passed { "PASS" } else { "FAIL" };
        println!(
            "{tag} {}. {name}: {} [{:.2?}]",
            k + 1,
            v.detail,
            start.elapsed()
        );
        failed += !v.passed as usize;
    }
    println!(
        "acceptance: {}/{} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
