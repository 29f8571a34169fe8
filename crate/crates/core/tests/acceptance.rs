//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `--nocapture`) and enforcing its stated time budget.
//!
//! Run with `cargo test -p tmcount --test acceptance -- --nocapture`.

use num::{BigInt, BigRational};
use std::time::{Duration, Instant};
use tmcount::antiprism;
use tmcount::graph::Digraph;
use tmcount::matrix::IntMatrix;
use tmcount::poly::Poly;
use tmcount::series::{largest_real_root, trace_gf, CountSeq, RationalGf};
use tmcount::silent::{self, Variant};
use tmcount::subsets::{self, Kind};

fn assert_within(start: Instant, budget: Duration, what: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= budget,
        "{what} took {elapsed:?}, budget {budget:?}"
    );
}

fn pass(criterion: &str) {
    println!("acceptance {criterion}: PASS");
}

/// Every named builder graph on at most 8 nodes, plus the two fixed
/// digraphs. Used by the oracle-equivalence and determinism criteria.
fn builder_corpus_max8() -> Vec<(String, Digraph)> {
    let mut specs: Vec<String> = Vec::new();
    for n in 1..=8 {
        specs.push(format!("complete:{n}"));
    }
    for n in 3..=8 {
        specs.push(format!("cycle:{n}"));
    }
    for n in 1..=8 {
        specs.push(format!("path:{n}"));
    }
    specs.push("antiprism:3".into());
    specs.push("antiprism:4".into());
    specs.push("circulant:7:1,2".into());
    specs.push("circulant:8:1,3".into());
    specs.push("circulant:6:2,3".into());
    specs.push("gaze".into());
    specs.push("signature".into());
    specs
        .into_iter()
        .map(|s| {
            let g = Digraph::build(&s).expect("corpus builder");
            assert!(g.node_count() <= 8);
            (s, g)
        })
        .collect()
}

/// 220 random digraphs on up to 6 nodes, each ordered pair (self-loops
/// included) present with probability 1/2. Seeded, so the corpus is fixed.
fn random_corpus() -> Vec<(String, Digraph)> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    (0..220)
        .map(|i| {
            let n = rng.gen_range(1..=6);
            let mut g = Digraph::new_directed(n);
            for u in 0..n {
                for v in 0..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            (format!("random#{i}(n={n})"), g)
        })
        .collect()
}

// ---------------------------------------------------------------------
// 1. Silent-circle table for n = 2..10: exact counts and 3-decimal
//    probabilities, under one second.
// ---------------------------------------------------------------------
#[test]
fn c01_silent_circle_table() {
    let start = Instant::now();
    let expected: [(u64, i64, i64, &str, &str); 9] = [
        (2, 32, 30, "0.395", "0.370"),
        (3, 158, 156, "0.217", "0.214"),
        (4, 828, 826, "0.126", "0.126"),
        (5, 4408, 4406, "0.075", "0.075"),
        (6, 23564, 23562, "0.044", "0.044"),
        (7, 126106, 126104, "0.026", "0.026"),
        (8, 675076, 675074, "0.016", "0.016"),
        (9, 3614144, 3614142, "0.009", "0.009"),
        (10, 19349432, 19349430, "0.006", "0.006"),
    ];
    let rows = silent::table(10);
    assert_eq!(rows.len(), expected.len());
    for (row, (n, t, s, p_t, p_s)) in rows.iter().zip(expected) {
        assert_eq!(row.n, n);
        assert_eq!(row.t, BigInt::from(t), "t_{n}");
        assert_eq!(row.s, BigInt::from(s), "s_{n}");
        assert_eq!(row.p_t.1, p_t, "p_t at n = {n}");
        assert_eq!(row.p_s.1, p_s, "p_s at n = {n}");
        let exact_t = BigRational::new(BigInt::from(t), num::pow(BigInt::from(9), n as usize));
        assert_eq!(row.p_t.0, exact_t);
    }
    // the same values through the public single-shot entry points
    assert_eq!(silent::prism_count(6), BigInt::from(23564));
    assert_eq!(silent::circle_count(6).unwrap(), BigInt::from(23562));
    assert_eq!(
        silent::silence_probability(10, Variant::Circle).unwrap().1,
        "0.006"
    );
    assert_within(start, Duration::from_secs(1), "criterion 1");
    pass("1 (silent-circle table)");
}

// ---------------------------------------------------------------------
// 2. Generating functions match the printed closed forms exactly.
// ---------------------------------------------------------------------
#[test]
fn c02_generating_functions() {
    let start = Instant::now();

    let gaze = Digraph::build("gaze").unwrap().adjacency_matrix();
    let t_gf = trace_gf(&gaze);
    assert_eq!(t_gf.num(), &Poly::from_i64(&[8, -56, 96, -50, 4]));
    assert_eq!(t_gf.den(), &Poly::from_i64(&[1, -8, 16, -10, 1]));

    // s-GF reconstructed from four computed initial values and the shared
    // recurrence.
    let initial = CountSeq::new(
        2,
        (2..=5).map(|n| silent::circle_count(n).unwrap()).collect(),
    );
    let rec: Vec<BigInt> = [8, -16, 10, -1].iter().map(|&c| BigInt::from(c)).collect();
    let s_gf = RationalGf::from_recurrence(&initial, &rec).unwrap();
    assert_eq!(s_gf.num(), &Poly::from_i64(&[0, 0, 30, -84, 58, -6]));
    assert_eq!(s_gf.den(), &Poly::from_i64(&[1, -8, 16, -10, 1]));
    assert_eq!((t_gf, s_gf), silent::silent_gfs());

    // combined antiprism Hamiltonian-cycle GF
    let h_gf = antiprism::hc_gf();
    let num = &Poly::monomial(BigInt::from(2), 3) * &Poly::from_i64(&[16, -19, -15, 3, 9]);
    let den = &Poly::from_i64(&[1, -2, 1]) * &Poly::from_i64(&[1, -1, -2, -1]);
    assert_eq!(h_gf.num(), &num);
    assert_eq!(h_gf.den(), &den);

    assert_within(start, Duration::from_secs(1), "criterion 2");
    pass("2 (generating functions)");
}

// ---------------------------------------------------------------------
// 3. Recurrences hold on 50+ computed terms.
// ---------------------------------------------------------------------
#[test]
fn c03_recurrences() {
    let start = Instant::now();

    let gaze = Digraph::build("gaze").unwrap().adjacency_matrix();
    let t = CountSeq::new(0, gaze.powers().take(61).map(|p| p.trace()).collect());
    let rec = silent::silent_recurrence();
    assert!(t.satisfies_recurrence(&rec, 5).unwrap());

    let rows = silent::table(60);
    let s = CountSeq::new(2, rows.iter().map(|r| r.s.clone()).collect());
    assert!(s.satisfies_recurrence(&rec, 6).unwrap());

    let h = antiprism::table(60);
    assert!(h.values().len() >= 50);
    let h_rec: Vec<BigInt> = [3, -1, -2, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
    assert!(h.satisfies_recurrence(&h_rec, 8).unwrap());

    assert_within(start, Duration::from_secs(1), "criterion 3");
    pass("3 (recurrences)");
}

// ---------------------------------------------------------------------
// 4. Antiprism Hamiltonian-cycle values and cross-method equality.
// ---------------------------------------------------------------------
#[test]
fn c04_antiprism_values() {
    let start = Instant::now();
    for (n, h) in [(3u64, 32), (4, 58), (5, 112), (6, 220), (7, 450)] {
        assert_eq!(antiprism::hc_count(n).unwrap(), BigInt::from(h), "h_{n}");
    }
    for n in [3u64, 4, 5] {
        let g = Digraph::build(&format!("antiprism:{n}")).unwrap();
        assert_eq!(
            antiprism::hc_count(n).unwrap(),
            subsets::hamiltonian_cycles(&g),
            "cross-method at n = {n}"
        );
    }
    assert_within(start, Duration::from_secs(10), "criterion 4");
    pass("4 (antiprism values and cross-method equality)");
}

// ---------------------------------------------------------------------
// 5. Growth constant from the reversed denominator quartic.
// ---------------------------------------------------------------------
#[test]
fn c05_growth_constant() {
    let root = largest_real_root(&Poly::from_i64(&[1, -10, 16, -8, 1]), 1e-9).unwrap();
    assert!((root - 5.353856).abs() < 1e-5, "alpha = {root}");
    assert!((root / 9.0 - 0.5948729).abs() < 1e-5);
    let (alpha, ratio) = silent::growth_constant();
    assert!((alpha - 5.353856).abs() < 1e-5);
    assert!((ratio - 0.5948729).abs() < 1e-5);
    pass("5 (growth constant)");
}

// ---------------------------------------------------------------------
// 6. Oracle equivalence of the inclusion-exclusion counters on the whole
//    corpus, for every valid length; divisibility asserts never fire.
// ---------------------------------------------------------------------
#[test]
fn c06_oracle_equivalence() {
    let start = Instant::now();
    let mut corpus = builder_corpus_max8();
    corpus.extend(random_corpus());
    assert!(corpus.len() >= 200 + 30);
    for (name, g) in &corpus {
        let n = g.node_count() as u64;
        if n == 0 {
            continue;
        }
        assert_eq!(
            subsets::hamiltonian_paths(g),
            subsets::brute_force_count(g, Kind::Path, n - 1).unwrap(),
            "HP vs oracle on {name}"
        );
        assert_eq!(
            subsets::hamiltonian_cycles(g),
            subsets::brute_force_count(g, Kind::Cycle, n).unwrap(),
            "HC vs oracle on {name}"
        );
        for k in 1..=n {
            assert_eq!(
                subsets::simple_cycles(g, k).unwrap(),
                subsets::brute_force_count(g, Kind::Cycle, k).unwrap(),
                "SC_{k} vs oracle on {name}"
            );
        }
        for k in 1..n {
            assert_eq!(
                subsets::simple_paths(g, k).unwrap(),
                subsets::brute_force_count(g, Kind::Path, k).unwrap(),
                "SP_{k} vs oracle on {name}"
            );
        }
    }
    assert_within(start, Duration::from_secs(60), "criterion 6");
    pass("6 (oracle equivalence)");
}

// ---------------------------------------------------------------------
// 7. The closed-walk series identity, executable: series coefficients of
//    the trace generating function equal the traces of matrix powers.
// ---------------------------------------------------------------------
#[test]
fn c07_trace_series_identity() {
    let start = Instant::now();
    let specs = [
        "complete:5",
        "cycle:6",
        "path:4",
        "antiprism:3",
        "antiprism:5",
        "circulant:9:1,3",
        "gaze",
        "signature",
        "cell24",
    ];
    for spec in specs {
        let a = Digraph::build(spec).unwrap().adjacency_matrix();
        let series = trace_gf(&a).series(13);
        for (n, p) in a.powers().take(13).enumerate() {
            assert_eq!(series.get(n).unwrap(), &p.trace(), "{spec} at n = {n}");
        }
    }
    assert_within(start, Duration::from_secs(5), "criterion 7");
    pass("7 (trace series identity)");
}

// ---------------------------------------------------------------------
// 8. Exhaustive 3^(2n) silent-configuration oracle for n = 2, 3, 4.
//    Stares are direction choices; two people scream only when their
//    stares run along the same edge in opposite directions (for the
//    2-prism the two ring directions reach the same person but along
//    different edges).
// ---------------------------------------------------------------------
fn prism_silent_exhaustive(n: usize) -> u64 {
    let people = 2 * n;
    let mut silent = 0;
    for config in 0..3u64.pow(people as u32) {
        let mut c = config;
        let mut choice = vec![0u8; people]; // 0 partner, 1 cw, 2 ccw
        for slot in &mut choice {
            *slot = (c % 3) as u8;
            c /= 3;
        }
        let idx = |i: usize, layer: usize| layer * n + i;
        let mut scream = false;
        'outer: for i in 0..n {
            if choice[idx(i, 0)] == 0 && choice[idx(i, 1)] == 0 {
                scream = true;
                break;
            }
            for layer in 0..2 {
                if choice[idx(i, layer)] == 1 && choice[idx((i + 1) % n, layer)] == 2 {
                    scream = true;
                    break 'outer;
                }
            }
        }
        if !scream {
            silent += 1;
        }
    }
    silent
}

fn circle_silent_exhaustive(n: usize) -> u64 {
    let people = 2 * n;
    let mut silent = 0;
    for config in 0..3u64.pow(people as u32) {
        let mut c = config;
        let mut choice = vec![0u8; people]; // 0 opposite, 1 cw, 2 ccw
        for slot in &mut choice {
            *slot = (c % 3) as u8;
            c /= 3;
        }
        let mut scream = false;
        for i in 0..people {
            if choice[i] == 1 && choice[(i + 1) % people] == 2 {
                scream = true;
                break;
            }
            if i < n && choice[i] == 0 && choice[i + n] == 0 {
                scream = true;
                break;
            }
        }
        if !scream {
            silent += 1;
        }
    }
    silent
}

#[test]
fn c08_exhaustive_silent_oracle() {
    let start = Instant::now();
    for n in 2..=4usize {
        assert_eq!(
            BigInt::from(prism_silent_exhaustive(n)),
            silent::prism_count(n as u64),
            "prism n = {n}"
        );
        assert_eq!(
            BigInt::from(circle_silent_exhaustive(n)),
            silent::circle_count(n as u64).unwrap(),
            "circle n = {n}"
        );
    }
    assert_within(start, Duration::from_secs(5), "criterion 8");
    pass("8 (exhaustive silent oracle)");
}

// ---------------------------------------------------------------------
// 9. 24-cell simple-cycle counts against an independent DFS counter
//    (the library's bounded oracle refuses 24 nodes, so the suite brings
//    its own).
// ---------------------------------------------------------------------
fn dfs_rooted_cycles(
    adj: &IntMatrix,
    at: usize,
    start: usize,
    left: u64,
    seen: &mut [bool],
) -> u64 {
    use num::ToPrimitive;
    let m = |i: usize, j: usize| adj.get(i, j).to_u64().unwrap();
    if left == 1 {
        return m(at, start);
    }
    seen[at] = true;
    let mut acc = 0;
    for next in 0..adj.dim() {
        if next != start && !seen[next] && m(at, next) > 0 {
            acc += m(at, next) * dfs_rooted_cycles(adj, next, start, left - 1, seen);
        }
    }
    seen[at] = false;
    acc
}

#[test]
fn c09_cell24_simple_cycles() {
    let start = Instant::now();
    let g = Digraph::build("cell24").unwrap();
    let adj = g.adjacency_matrix();
    for k in [3u64, 4, 5] {
        let mut rooted = 0u64;
        for s in 0..24 {
            rooted += dfs_rooted_cycles(&adj, s, s, k, &mut [false; 24]);
        }
        assert_eq!(rooted % k, 0);
        let expect = BigInt::from(rooted / k);
        assert_eq!(
            subsets::simple_cycles_par(&g, k, 4).unwrap(),
            expect,
            "SC_{k} on the 24-cell"
        );
    }
    assert_within(start, Duration::from_secs(120), "criterion 9");
    pass("9 (24-cell simple cycles)");
}

// ---------------------------------------------------------------------
// 10. Bit-identical results with 1, 2 and 8 workers across the corpus.
// ---------------------------------------------------------------------
#[test]
fn c10_parallel_determinism() {
    let mut corpus = builder_corpus_max8();
    corpus.extend(random_corpus());
    for (name, g) in &corpus {
        let n = g.node_count() as u64;
        if n == 0 {
            continue;
        }
        let hp = subsets::hamiltonian_paths_par(g, 1);
        let hc = subsets::hamiltonian_cycles_par(g, 1);
        let k = (n / 2).max(1);
        let sc = subsets::simple_cycles_par(g, k, 1).unwrap();
        let sp = (n > 1).then(|| subsets::simple_paths_par(g, k.min(n - 1), 1).unwrap());
        for workers in [2, 8] {
            assert_eq!(
                subsets::hamiltonian_paths_par(g, workers),
                hp,
                "HP on {name}"
            );
            assert_eq!(
                subsets::hamiltonian_cycles_par(g, workers),
                hc,
                "HC on {name}"
            );
            assert_eq!(
                subsets::simple_cycles_par(g, k, workers).unwrap(),
                sc,
                "SC on {name}"
            );
            if let Some(sp) = &sp {
                assert_eq!(
                    &subsets::simple_paths_par(g, k.min(n - 1), workers).unwrap(),
                    sp,
                    "SP on {name}"
                );
            }
        }
    }
    pass("10 (parallel determinism)");
}
