//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the measured evidence. Run with `--nocapture` to see the lines.
//!
//! The exhaustive corpora are generated once per process by the built-in
//! enumerator, written as graph6 files, re-ingested through the stream
//! reader, and cross-checked against the published class counts
//! (1,1,2,6,21,112,853,11117 connected graphs on 1..=8 vertices).

use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;
use std::sync::{Mutex, OnceLock};
use std::time::Instant;

use coprobber_core::game::{cop_number, is_dismantlable, solve, Configuration, Side};
use coprobber_core::graph::{small, Graph};
use coprobber_core::graph6::{emit_graph6, parse_graph6};
use coprobber_core::harness::corpus::{enumerate_levels, read_graph6_stream};
use coprobber_core::harness::report::{emit_csv, emit_json, parse_json};
use coprobber_core::harness::{
    verify_theorem, CopNumberCache, SpecId, TheoremSpec, VerificationReport, VerifyOptions,
};
use coprobber_core::pattern::{is_family_free, is_isomorphic, make_pattern, Pattern, PatternKind};
use coprobber_core::strategy::{
    default_budget, run_match, GuardPrefix, MatchOutcome, RobberPolicy, Strategy,
};

const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

fn corpus_path(max_n: usize) -> PathBuf {
    static WRITE_LOCK: Mutex<()> = Mutex::new(());
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(format!("connected_le{max_n}.g6"));
    let _guard = WRITE_LOCK.lock().unwrap();
    if !path.exists() {
        let mut text = String::new();
        for level in enumerate_levels(max_n) {
            for g in level.into_iter().filter(Graph::is_connected) {
                text.push_str(&emit_graph6(&g));
                text.push('\n');
            }
        }
        std::fs::write(&path, text).unwrap();
    }
    path
}

fn load_corpus(max_n: usize) -> Vec<(usize, Graph)> {
    let file = File::open(corpus_path(max_n)).unwrap();
    read_graph6_stream(BufReader::new(file))
        .collect::<Result<Vec<_>, _>>()
        .unwrap()
}

fn corpus7() -> &'static [(usize, Graph)] {
    static C: OnceLock<Vec<(usize, Graph)>> = OnceLock::new();
    C.get_or_init(|| {
        let c = load_corpus(7);
        assert_eq!(c.len(), CONNECTED_COUNTS[..7].iter().sum::<usize>());
        c
    })
}

fn corpus8() -> &'static [(usize, Graph)] {
    static C: OnceLock<Vec<(usize, Graph)>> = OnceLock::new();
    C.get_or_init(|| {
        let c = load_corpus(8);
        assert_eq!(c.len(), CONNECTED_COUNTS.iter().sum::<usize>());
        c
    })
}

/// Cop numbers are shared across criteria through one in-memory cache.
fn shared_cache() -> &'static Mutex<CopNumberCache> {
    static CACHE: OnceLock<Mutex<CopNumberCache>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(CopNumberCache::in_memory()))
}

fn verify_over(
    spec: &TheoremSpec,
    corpus: &[(usize, Graph)],
    with_strategy: bool,
) -> VerificationReport {
    let stream = corpus.iter().map(|(l, g)| Ok((*l, g.clone())));
    let mut cache = shared_cache().lock().unwrap();
    verify_theorem(spec, stream, &mut cache, &VerifyOptions { with_strategy }).unwrap()
}

fn pattern(kind: PatternKind) -> Pattern {
    make_pattern(kind).unwrap()
}

#[test]
fn criterion_01_dismantlability_oracle_equivalence_n7() {
    let started = Instant::now();
    let corpus = corpus7();
    assert_eq!(corpus.len(), 996, "connected n<=7 corpus line count");
    for (_, g) in corpus {
        let one_cop = cop_number(g).unwrap() == 1;
        let corner = is_dismantlable(g).unwrap();
        assert_eq!(one_cop, corner, "oracle disagreement on {}", emit_graph6(g));
    }
    let secs = started.elapsed().as_secs_f64();
    assert!(secs < 60.0, "criterion 1 overran its 60 s target: {secs:.1}s");
    println!("ACCEPTANCE 1: PASS — cop_number==1 <=> dismantlable on all 996 connected n<=7 graphs ({secs:.1}s)");
}

#[test]
fn criterion_02_t1_path_free_bounds_n8() {
    let started = Instant::now();
    let corpus = corpus8();
    for k in [4, 5, 6] {
        let spec = TheoremSpec::new(SpecId::T1 { k }).unwrap();
        let report = verify_over(&spec, corpus, false);
        assert!(
            report.verified,
            "T1(k={k}) violations: {:?}",
            report.violations
        );
        assert!(report.matching > 0);
        println!(
            "ACCEPTANCE 2: T1(k={k}) — {} matching graphs, bound {}, zero violations",
            report.matching, report.bound
        );
    }
    let secs = started.elapsed().as_secs_f64();
    assert!(secs < 600.0, "criterion 2 overran its 10 min target: {secs:.1}s");
    println!("ACCEPTANCE 2: PASS — P_k-free bounds hold on the full n<=8 corpus ({secs:.1}s)");
}

#[test]
fn criterion_03_t2_hooked_structures_n7() {
    let corpus = corpus7();
    for l in [1, 2] {
        let spec = TheoremSpec::new(SpecId::T2 { l }).unwrap();
        let report = verify_over(&spec, corpus, false);
        assert!(report.verified, "T2(l={l}) violations: {:?}", report.violations);
        println!(
            "ACCEPTANCE 3: T2(l={l}) — {} matching graphs, bound {}, zero violations",
            report.matching, report.bound
        );
    }
    // sanity link: the l=1 family equals the {claw, paw}-free family
    let h = [pattern(PatternKind::H1(1)), pattern(PatternKind::H2(1))];
    let cp = [pattern(PatternKind::Claw), pattern(PatternKind::Paw)];
    for (_, g) in corpus {
        assert_eq!(
            is_family_free(g, &h).unwrap(),
            is_family_free(g, &cp).unwrap(),
            "family mismatch on {}",
            emit_graph6(g)
        );
    }
    println!("ACCEPTANCE 3: PASS — {{H1(1),H2(1)}}-free coincides with {{claw,paw}}-free on n<=7");
}

#[test]
fn criterion_04_t3_and_c1_two_cop_bounds_n8() {
    let corpus = corpus8();
    let t3 = TheoremSpec::new(SpecId::T3 { k: 5 }).unwrap();
    let r3 = verify_over(&t3, corpus, false);
    assert_eq!(r3.bound, 2);
    assert!(r3.verified, "T3(5) violations: {:?}", r3.violations);

    let c1 = TheoremSpec::new(SpecId::C1 { k: 5, l: 4 }).unwrap();
    let rc = verify_over(&c1, corpus, false);
    assert_eq!(rc.bound, 2);
    assert!(rc.verified, "C1(5,4) violations: {:?}", rc.violations);
    println!(
        "ACCEPTANCE 4: PASS — {{P5,claw}}-free ({} graphs) and {{P5,C4}}-free ({} graphs) all have cop number <= 2 on n<=8",
        r3.matching, rc.matching
    );
}

#[test]
fn criterion_05_forest_bounds_n8() {
    let corpus = corpus8();
    let t4 = TheoremSpec::new(SpecId::T4 { parts: vec![2, 3] }).unwrap();
    let r4 = verify_over(&t4, corpus, false);
    assert_eq!(r4.bound, 3);
    assert!(r4.verified, "T4(2+3) violations: {:?}", r4.violations);

    let pr1 = TheoremSpec::new(SpecId::PR1 { k: 4 }).unwrap();
    let r1 = verify_over(&pr1, corpus, false);
    assert_eq!(r1.bound, 3);
    assert!(r1.verified, "PR1(4) violations: {:?}", r1.violations);

    let pr2 = TheoremSpec::new(SpecId::PR2 { k: 4 }).unwrap();
    let r2 = verify_over(&pr2, corpus, false);
    assert_eq!(r2.bound, 4);
    assert!(r2.verified, "PR2(4) violations: {:?}", r2.violations);
    println!(
        "ACCEPTANCE 5: PASS — (P2+P3)-free<=3 ({}), (P1+P4)-free<=3 ({}), (P2+P4)-free<=4 ({}) on n<=8",
        r4.matching, r1.matching, r2.matching
    );
}

#[test]
fn criterion_06_t5_house_bound_n8_with_extremal_c5() {
    let corpus = corpus8();
    let spec = TheoremSpec::new(SpecId::T5).unwrap();
    let report = verify_over(&spec, corpus, false);
    assert_eq!(report.bound, 2);
    assert!(report.verified, "T5 violations: {:?}", report.violations);
    let c5 = small::cycle(5);
    let witness = report
        .extremal_witnesses
        .iter()
        .find(|g6| is_isomorphic(&parse_graph6(g6).unwrap(), &c5))
        .expect("C5 must appear among the extremal witnesses");
    assert_eq!(cop_number(&parse_graph6(witness).unwrap()).unwrap(), 2);
    println!(
        "ACCEPTANCE 6: PASS — {{2P2,coP5}}-free cop number <= 2 on n<=8 ({} matching); C5 extremal with cop number exactly 2",
        report.matching
    );
}

#[test]
fn criterion_07_strategy_playouts_n7() {
    let corpus = corpus7();

    // hard requirement: the house strategy captures on every diameter-<=2
    // host of its class using only proof-case moves (no table fallback)
    let house_family = [pattern(PatternKind::LinearForest(vec![2, 2])), pattern(PatternKind::CoP5)];
    let house = Strategy::house_two_cop();
    let mut house_hosts = 0;
    for (_, g) in corpus {
        if !is_family_free(g, &house_family).unwrap() || g.diameter().unwrap() > 2 {
            continue;
        }
        house_hosts += 1;
        let r = run_match(g, &house, &RobberPolicy::Optimal, default_budget(g, 2)).unwrap();
        assert!(
            matches!(r.outcome, MatchOutcome::Captured { .. }),
            "house failed to capture on {}",
            emit_graph6(g)
        );
        assert!(
            r.notes.iter().all(|n| !n.starts_with("fallback:")),
            "house used a non-proof fallback on {}",
            emit_graph6(g)
        );
    }
    println!("ACCEPTANCE 7: house_two_cop captured on all {house_hosts} diameter-<=2 {{2P2,coP5}}-free hosts");

    // hard requirement: guarded recursion captures on every (P1+P4)-free host
    let guard_family = [pattern(PatternKind::LinearForest(vec![1, 4]))];
    let guard = Strategy::guard_recurse(GuardPrefix::Vertex, 4).unwrap();
    let mut guard_hosts = 0;
    for (_, g) in corpus {
        if !is_family_free(g, &guard_family).unwrap() {
            continue;
        }
        guard_hosts += 1;
        let r = run_match(g, &guard, &RobberPolicy::Optimal, default_budget(g, 3)).unwrap();
        assert!(
            matches!(r.outcome, MatchOutcome::Captured { .. }),
            "guarded recursion failed to capture on {}",
            emit_graph6(g)
        );
    }
    println!("ACCEPTANCE 7: guard_vertex(4) captured on all {guard_hosts} (P1+P4)-free hosts");

    // divergence-counted play-outs: capture or log, never silent
    let mut total_div = 0usize;
    let mut tally = |label: String, family: Vec<Pattern>, s: Strategy| {
        let mut hosts = 0;
        let mut captured = 0;
        let mut divergences = 0;
        for (_, g) in corpus {
            if !is_family_free(g, &family).unwrap() {
                continue;
            }
            hosts += 1;
            let k = s.required_cops(g);
            match run_match(g, &s, &RobberPolicy::Optimal, default_budget(g, k)) {
                Ok(r) => match r.outcome {
                    MatchOutcome::Captured { .. } => captured += 1,
                    MatchOutcome::BudgetExhausted => divergences += 1,
                },
                Err(_) => divergences += 1,
            }
        }
        assert_eq!(hosts, captured + divergences, "unreported outcome in {label}");
        total_div += divergences;
        println!("ACCEPTANCE 7: {label} — hosts {hosts}, captured {captured}, divergences {divergences}");
    };
    for k in [4, 5, 6] {
        tally(
            format!("path_push({k})"),
            vec![pattern(PatternKind::Path(k))],
            Strategy::path_push(k).unwrap(),
        );
    }
    for l in [1, 2] {
        tally(
            format!("cycle_trap({l})"),
            vec![pattern(PatternKind::H1(l)), pattern(PatternKind::H2(l))],
            Strategy::cycle_trap(l).unwrap(),
        );
    }
    for k in [5, 6] {
        tally(
            format!("claw_cycle({k})"),
            vec![pattern(PatternKind::Path(k)), pattern(PatternKind::Claw)],
            Strategy::claw_cycle(k).unwrap(),
        );
    }
    println!("ACCEPTANCE 7: PASS — play-outs complete; total logged divergences: {total_div}");
}

#[test]
fn criterion_08_solver_anchors_and_exact_capture_times_n6() {
    assert_eq!(cop_number(&small::cycle(4)).unwrap(), 2);
    assert_eq!(cop_number(&small::cycle(5)).unwrap(), 2);
    assert_eq!(cop_number(&small::petersen()).unwrap(), 3);
    println!("ACCEPTANCE 8: anchors hold — c(C4)=2, c(C5)=2, c(Petersen)=3");

    // optimal-vs-optimal play-out reproduces the tabulated capture time
    // from every winning robber-to-move configuration, n <= 6 exhaustive
    let mut configs_checked = 0usize;
    for level in enumerate_levels(6) {
        for g in level.into_iter().filter(Graph::is_connected) {
            let k = cop_number(&g).unwrap();
            let table = solve(&g, k).unwrap();
            let n = g.vertex_count();
            for m in multisets(n, k) {
                for r in 0..n {
                    let start = Configuration::new(m.clone(), r, Side::Robber);
                    if !table.win(&start).unwrap() {
                        continue;
                    }
                    let expect = table.steps(&start).unwrap().unwrap();
                    let mut c = start;
                    let mut cop_turns = 0u32;
                    while !c.is_capture() {
                        let r1 = table.optimal_robber_move(&c).unwrap();
                        c = Configuration::new(c.cops.clone(), r1, Side::Cop);
                        if c.is_capture() {
                            break;
                        }
                        c = table.optimal_cop_move(&c).unwrap();
                        cop_turns += 1;
                        assert!(cop_turns <= expect, "overran steps on {}", emit_graph6(&g));
                    }
                    assert_eq!(cop_turns, expect, "capture time mismatch on {}", emit_graph6(&g));
                    configs_checked += 1;
                }
            }
        }
    }
    println!("ACCEPTANCE 8: PASS — optimal play-outs matched tabulated capture times on {configs_checked} winning configurations (n<=6)");
}

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in from..n {
            cur.push(v);
            rec(n, k, v, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

#[test]
fn criterion_09_graph6_bit_exact_conformance_n7() {
    // hand-encoded vectors
    assert_eq!(parse_graph6("A_").unwrap(), small::complete(2));
    assert_eq!(
        parse_graph6("A?").unwrap(),
        Graph::from_edges(2, &[]).unwrap()
    );
    assert_eq!(emit_graph6(&small::complete(2)), "A_");

    // the corpus file itself round-trips byte for byte
    let text = std::fs::read_to_string(corpus_path(7)).unwrap();
    let mut lines = 0;
    for line in text.lines() {
        let g = parse_graph6(line).unwrap();
        assert_eq!(emit_graph6(&g), line, "round-trip broke on {line}");
        lines += 1;
    }
    assert_eq!(lines, 996);
    println!("ACCEPTANCE 9: PASS — graph6 parse/emit bit-exact on all 996 corpus lines plus hand-encoded vectors");
}

#[test]
fn criterion_10_conjecture_probes_n8() {
    let corpus = corpus8();
    for id in [SpecId::Conj1, SpecId::Conj2] {
        let spec = TheoremSpec::new(id).unwrap();
        let report = verify_over(&spec, corpus, false);
        // probes never assert truth; violations would be surfaced with
        // their graph6 witnesses in both emitted formats
        let json = emit_json(&report);
        let parsed = parse_json(&json).unwrap();
        assert_eq!(parsed, report);
        let csv = emit_csv(&report);
        assert!(csv.lines().count() >= 2);
        for v in &report.violations {
            assert!(csv.contains(&v.graph6) && json.contains(&v.graph6));
        }
        println!(
            "ACCEPTANCE 10: {} — {} matching graphs, {} violations{}",
            report.spec,
            report.matching,
            report.violations.len(),
            if report.violations.is_empty() { " (bound holds at this scale)" } else { "" }
        );
        assert!(
            report.violations.is_empty(),
            "unexpected counterexample at desk scale: {:?}",
            report.violations
        );
    }
    println!("ACCEPTANCE 10: PASS — conjecture probes completed and reported on the full n<=8 corpus");
}
