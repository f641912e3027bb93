//! Acceptance suite. Each test prints one `criterion N: PASS|FAIL` line and
//! then asserts. Run with `--nocapture --test-threads=1` for tidy output.
//!
//! Pinned tolerances: every comparison is exact (rational or integer
//! equality, byte equality for CLI output). Wall-clock limits are 1 s, 30 s,
//! 5 s and 120 s for criteria 1, 2, 4 and 5.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use hodge_spectrum::document::{InputDocument, OutputDocument};
use hodge_spectrum::spectrum::{reduced_lines_spectrum, BuildingSetChoice};
use hodge_spectrum::{
    fixtures, frac, rat, verify, Arrangement, GradedPoly, Hyperplane, Rational, SpectrumEngine,
};

const LIMIT_A: Duration = Duration::from_secs(1);
const LIMIT_B: Duration = Duration::from_secs(30);
const LIMIT_LINES: Duration = Duration::from_secs(5);
const LIMIT_EULER: Duration = Duration::from_secs(120);

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hodge-spectrum")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn report(n: u32, passed: bool, detail: &str) {
    println!("criterion {n}: {} {detail}", if passed { "PASS" } else { "FAIL" });
    assert!(passed, "criterion {n} failed: {detail}");
}

fn engine(arr: &Arrangement) -> SpectrumEngine {
    SpectrumEngine::new(arr, &BuildingSetChoice::Maximal).unwrap()
}

/// Example (a) with the first line doubled.
fn weighted_example_a() -> Arrangement {
    Arrangement::new(
        2,
        vec![
            Hyperplane::new(vec![rat(1), rat(0)], 2),
            Hyperplane::reduced(&[0, 1]),
            Hyperplane::reduced(&[1, 1]),
        ],
    )
    .unwrap()
}

fn all_fixtures() -> Vec<(String, Arrangement)> {
    let mut names: Vec<String> =
        ["example-a", "example-b1", "example-b2", "braid4"].map(String::from).to_vec();
    names.extend((2..=8).map(|d| format!("lines:{d}")));
    names.extend((4..=6).map(|m| format!("generic3d:{m}")));
    let mut out: Vec<(String, Arrangement)> =
        names.into_iter().map(|n| (n.clone(), fixtures::by_name(&n).unwrap())).collect();
    out.push(("example-a weighted (2,1,1)".into(), weighted_example_a()));
    out
}

fn timed_compute(name: &str) -> (OutputDocument, Duration, i32) {
    let start = Instant::now();
    let (code, text) = run_cli(&["compute", name, "--no-checks"]);
    let elapsed = start.elapsed();
    (OutputDocument::parse(&text).unwrap(), elapsed, code)
}

fn pairs(doc: &OutputDocument) -> Vec<(Rational, i64)> {
    doc.spectrum.iter().map(|e| (e.alpha.0.clone(), e.mult)).collect()
}

#[test]
fn criterion_1_example_a() {
    let (doc, elapsed, code) = timed_compute("example-a");
    let want = vec![(frac(2, 3), 1), (rat(1), 2), (frac(4, 3), 1)];
    let ok = code == 0 && pairs(&doc) == want && elapsed < LIMIT_A;
    report(1, ok, &format!("Sp = {} in {:.3}s", doc.polynomial(), elapsed.as_secs_f64()));
}

#[test]
fn criterion_2_example_b() {
    let want = vec![(frac(3, 4), 1), (rat(1), 3), (frac(3, 2), 1), (rat(2), -3), (frac(9, 4), 1)];
    let (d1, t1, c1) = timed_compute("example-b1");
    let (d2, t2, c2) = timed_compute("example-b2");
    let ok = c1 == 0
        && c2 == 0
        && pairs(&d1) == want
        && d1.spectrum == d2.spectrum
        && t1 < LIMIT_B
        && t2 < LIMIT_B;
    report(
        2,
        ok,
        &format!(
            "Sp(f1) = {}, Sp(f2) = {} in {:.3}s / {:.3}s",
            d1.polynomial(),
            d2.polynomial(),
            t1.as_secs_f64(),
            t2.as_secs_f64()
        ),
    );
}

#[test]
fn criterion_3_intermediate_classes() {
    let mut failures = Vec::new();

    let e = engine(&fixtures::by_name("example-a").unwrap());
    let (nv, top) = (e.building_set().len(), 1);
    let one = GradedPoly::one(nv, top);
    let c0 = GradedPoly::var(nv, top, 0);
    let lines = GradedPoly::linear(nv, top, (1..nv).map(|v| (v, rat(1))));
    let cl = e.classes();
    let h = &(&one + &c0.scale(&rat(2))) + &lines;
    let checks_a = [
        ("F", e.ideal().congruent(&cl.f, &(&one - &c0.scale(&rat(2))))),
        ("G", e.ideal().congruent(&cl.g, &(&one - &c0))),
        ("H", e.ideal().congruent(&cl.h, &h)),
        ("P_0", e.ideal().congruent(&cl.p[0], &one)),
        ("P_1", e.ideal().congruent(&cl.p[1], &(&one - &(&h - &one)))),
    ];
    failures.extend(checks_a.iter().filter(|c| !c.1).map(|c| format!("example-a {}", c.0)));

    for name in ["example-b1", "example-b2"] {
        let e = engine(&fixtures::by_name(name).unwrap());
        let bs = e.building_set();
        let (nv, top) = (bs.len(), 2);
        let one = GradedPoly::one(nv, top);
        let c0 = GradedPoly::var(nv, top, 0);
        let c00 = &c0 * &c0;
        let lines = GradedPoly::linear(
            nv,
            top,
            (1..nv).filter(|&v| bs.element(v).dim == 1).map(|v| (v, rat(1))),
        );
        // a c_0^2 + b Σ lines + c c_0 + d
        let combo = |a: Rational, b: Rational, c: Rational, d: Rational| {
            &(&(&c00.scale(&a) + &lines.scale(&b)) + &c0.scale(&c)) + &one.scale(&d)
        };
        let cl = e.classes();
        let i = e.ideal();
        let checks = [
            ("F", i.congruent(&cl.f, &combo(rat(9), rat(-1), rat(-3), rat(1)))),
            ("G", i.congruent(&cl.g, &combo(rat(1), frac(-1, 2), frac(-3, 2), rat(1)))),
            ("H", i.congruent(&cl.h, &combo(rat(1), rat(0), rat(-1), rat(1)))),
            ("P_0", i.congruent(&cl.p[0], &one)),
            ("P_1", i.congruent(&cl.p[1], &combo(frac(-1, 2), rat(0), rat(1), rat(2)))),
            ("P_2", i.congruent(&cl.p[2], &combo(frac(1, 2), rat(0), rat(1), rat(1)))),
        ];
        failures.extend(checks.iter().filter(|c| !c.1).map(|c| format!("{name} {}", c.0)));
    }
    let detail = if failures.is_empty() {
        "F, G, H, P_p agree modulo I for example-a, example-b1, example-b2".to_string()
    } else {
        format!("mismatches: {}", failures.join(", "))
    };
    report(3, failures.is_empty(), &detail);
}

#[test]
fn criterion_4_plane_curve_oracle() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for d in 1..=8u64 {
        let s = engine(&fixtures::lines(d as usize).unwrap()).spectrum(0).unwrap();
        let symmetric = s.points.iter().all(|p| s.multiplicity(&(rat(2) - &p.alpha)) == p.mult);
        if s.pairs() != reduced_lines_spectrum(d) || !symmetric {
            bad.push(d);
        }
    }
    let elapsed = start.elapsed();
    report(
        4,
        bad.is_empty() && elapsed < LIMIT_LINES,
        &format!("d = 1..8 oracle and symmetry, mismatches {bad:?}, {:.3}s", elapsed.as_secs_f64()),
    );
}

#[test]
fn criterion_5_euler_identity() {
    let start = Instant::now();
    let mut arrs: Vec<(String, Arrangement)> = ["example-a", "example-b1", "example-b2"]
        .iter()
        .chain(["generic3d:4", "generic3d:5", "generic3d:6"].iter())
        .map(|n| (n.to_string(), fixtures::by_name(n).unwrap()))
        .collect();
    arrs.push(("example-a weighted (2,1,1)".into(), weighted_example_a()));
    let mut bad = Vec::new();
    for (name, arr) in &arrs {
        let e = engine(arr);
        let cells = e.all_multiplicities(0).unwrap();
        let (sums, expected) = verify::euler_sums(&e, &cells).unwrap();
        if sums.iter().any(|&s| s != expected) {
            bad.push(format!("{name}: {sums:?} vs {expected}"));
        }
    }
    let elapsed = start.elapsed();
    report(
        5,
        bad.is_empty() && elapsed < LIMIT_EULER,
        &format!("{} arrangements, failures {bad:?}, {:.3}s", arrs.len(), elapsed.as_secs_f64()),
    );
}

#[test]
fn criterion_6_ring_ranks() {
    let mut bad = Vec::new();
    for (name, arr) in all_fixtures() {
        let ranks = engine(&arr).ideal().quotient_ranks();
        let palindromic = ranks.iter().eq(ranks.iter().rev());
        let ends = ranks.first() == Some(&1) && ranks.last() == Some(&1);
        let b_rank = !name.starts_with("example-b") || ranks.get(1) == Some(&7);
        if !(palindromic && ends && b_rank) {
            bad.push(format!("{name}: {ranks:?}"));
        }
    }
    report(6, bad.is_empty(), &format!("quotient ranks, failures {bad:?}"));
}

#[test]
fn criterion_7_chern_cross_route() {
    let mut bad = Vec::new();
    let fixtures = all_fixtures();
    for (name, arr) in &fixtures {
        let agree = verify::chern_cross_route(&engine(arr)).unwrap();
        if agree.iter().any(|ok| !ok) {
            bad.push(format!("{name}: {agree:?}"));
        }
    }
    report(7, bad.is_empty(), &format!("{} fixtures, every p, failures {bad:?}", fixtures.len()));
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn compute_document(arr: &Arrangement, jobs: &str) -> String {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(InputDocument::from_arrangement(arr).to_json().as_bytes()).unwrap();
    let (code, text) = run_cli(&["compute", f.path().to_str().unwrap(), "--jobs", jobs]);
    assert_eq!(code, 0);
    text
}

#[test]
fn criterion_8_determinism() {
    let mut bad = Vec::new();
    for name in ["example-a", "example-b1", "example-b2", "braid4", "lines:5", "generic3d:4"] {
        let one = run_cli(&["compute", name, "--jobs", "1"]);
        let eight = run_cli(&["compute", name, "--jobs", "8"]);
        if one != eight {
            bad.push(format!("{name}: jobs 1 vs 8"));
        }
    }
    let mut orders = 0;
    for (name, exhaustive) in
        [("example-a", true), ("example-b1", true), ("braid4", false), ("generic3d:5", false)]
    {
        let arr = fixtures::by_name(name).unwrap();
        let reference = compute_document(&arr, "0");
        let perms = permutations(arr.len());
        let chosen: Vec<&Vec<usize>> = if exhaustive {
            perms.iter().collect()
        } else {
            perms.iter().step_by(perms.len() / 6).collect()
        };
        for perm in chosen {
            orders += 1;
            if compute_document(&arr.permuted(perm).unwrap(), "0") != reference {
                bad.push(format!("{name}: order {perm:?}"));
            }
        }
    }
    report(
        8,
        bad.is_empty(),
        &format!("jobs 1 == jobs 8 byte-for-byte, {orders} hyperplane orders, failures {bad:?}"),
    );
}
