//! Acceptance checks. Each check prints one PASS/FAIL line with its elapsed
//! time and the time limit it is held to.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use locality::graphs::{
    connected_graphs, cutwidth_exact, cutwidth_of_arrangement, is_valid_path_decomposition,
    non_isomorphic_graphs, pathwidth_exact, second_order_cutwidth_of_arrangement, MultiGraph,
};
use locality::greedy::{family, greedy_best, Family, Strategy};
use locality::hardness::{build_gadget, verify_gadget};
use locality::reductions::{
    arrangement_to_marking, arrangement_to_pd_gprime, build_g_alpha, build_g_prime,
    build_h_alpha_k, cutwidth_via_locality, cutwidth_via_pathwidth, locality_via_cutwidth,
    locality_via_pathwidth, pd_gprime_to_arrangement, words_from_cycle, words_from_graph,
    words_from_graph_all_edges, ExactLocality, ExactPathwidth,
};
use locality::words::{
    border_priority, condense, locality_bruteforce, locality_subset_dp, marking_number,
    reverse_sequence, tightness_alpha, tightness_beta, zimin, Border, MarkingSequence, SymbolTable,
    Word, WordMode,
};
use locality::Error;
use num_rational::Ratio;
use rand::seq::SliceRandom;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn check(id: usize, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let ok = result.ok && elapsed <= limit;
    println!(
        "{} [{id:>2}] {name}: {} ({elapsed:.2?}, limit {limit:?})",
        if ok { "PASS" } else { "FAIL" },
        result.detail
    );
    ok
}

fn loc(w: &Word) -> usize {
    locality_subset_dp(w).unwrap().0
}

fn chars(s: &str) -> (Word, SymbolTable) {
    SymbolTable::parse_word(s, WordMode::Chars).unwrap()
}

fn worked_examples() -> Outcome {
    let (w, t) = chars("xyxyzxz");
    let seq = |s: &str| t.parse_sequence(s, WordMode::Chars).unwrap();
    let (k, witness) = locality_subset_dp(&w).unwrap();
    let yxz = marking_number(&w, &seq("yxz")).unwrap().0;
    let xyz = marking_number(&w, &seq("xyz")).unwrap().0;
    let wit = marking_number(&w, &witness).unwrap().0;
    outcome(
        k == 2 && yxz == 2 && xyz == 3 && wit == 2,
        format!("loc = {k}, pi(y,x,z) = {yxz}, pi(x,y,z) = {xyz}, witness peak = {wit}"),
    )
}

fn symbol_graph_sample() -> Outcome {
    let (w, _) = chars("abcbcdbada");
    let h = build_h_alpha_k(&w, 2).unwrap();
    let (cw, l) = cutwidth_exact(&h.graph).unwrap();
    let s = arrangement_to_marking(&w, &h, &l).unwrap();
    let pi = marking_number(&w, &s).unwrap().0;
    outcome(
        cw == 4 && pi == 2,
        format!("cw(H) = {cw}, translated marking number = {pi}"),
    )
}

/// The six-vertex, eight-edge graph with vertices u, v, w, x, y, z = 0..5.
fn eight_edge_graph() -> MultiGraph {
    MultiGraph::new(
        6,
        [
            (0, 1),
            (0, 2),
            (0, 3),
            (2, 3),
            (1, 3),
            (1, 4),
            (1, 5),
            (4, 5),
        ],
    )
    .unwrap()
}

fn euler_word_sample() -> Outcome {
    let g = eight_edge_graph();
    let names = ["u", "v", "w", "x", "y", "z"];
    let spell = |w: &Word| w.ids().map(|i| names[i]).collect::<String>();
    let walk: Vec<usize> = "xwuxwuxvuvyzvyzvx"
        .chars()
        .map(|c| names.iter().position(|n| n.starts_with(c)).unwrap())
        .collect();
    let from_walk = words_from_cycle(&g, &walk, false).unwrap();
    let x = &from_walk[3];
    let spelled = spell(&x.word);
    let deleted = (names[x.deleted.from], names[x.deleted.to]);
    let loc_x = loc(&x.word);
    let cw = cutwidth_exact(&g).unwrap().0;
    let min_default = words_from_graph(&g)
        .unwrap()
        .iter()
        .map(|c| loc(&c.word))
        .min()
        .unwrap();
    let min_walk = from_walk.iter().map(|c| loc(&c.word)).min().unwrap();
    outcome(
        spelled == "xwuxwuxvuvyzvyzv"
            && deleted == ("v", "x")
            && loc_x == 3
            && cw == 3
            && min_default == 3
            && min_walk == 3,
        format!(
            "alpha_(v,x) = {spelled}, deleted {}->{}, loc = {loc_x}, cw = {cw}, \
             min over default candidates = {min_default}, over the walk's = {min_walk}",
            deleted.0, deleted.1
        ),
    )
}

fn loc_cut_iff() -> Outcome {
    let mut rng = rng(4);
    let mut violations = 0;
    let mut checks = 0;
    for _ in 0..500 {
        let w = random_condensed_word(&mut rng, 6, 14);
        let l = loc(&w);
        for k in [l - 1, l, l + 1] {
            if k == 0 {
                continue;
            }
            let (cw, _) = cutwidth_exact(&build_h_alpha_k(&w, k).unwrap().graph).unwrap();
            checks += 1;
            if (cw == 2 * k) != (l <= k) {
                violations += 1;
            }
        }
    }
    outcome(
        violations == 0,
        format!("500 words, {checks} (word, k) pairs, {violations} violations"),
    )
}

fn cut_loc_window() -> Outcome {
    let mut graphs: Vec<MultiGraph> = (2..=6).flat_map(connected_graphs).collect();
    let exhaustive = graphs.len();
    let mut rng = rng(5);
    for _ in 0..200 {
        let n = rng_range(&mut rng, 2, 7);
        let max_extra = 12 - (n - 1);
        let extra = rng_range(&mut rng, 0, max_extra);
        graphs.push(random_connected_multigraph(&mut rng, n, extra));
    }
    let mut violations = 0;
    let mut words = 0;
    for g in &graphs {
        let cw = cutwidth_exact(g).unwrap().0;
        let all = words_from_graph_all_edges(g).unwrap();
        let locs: Vec<usize> = all.iter().map(|c| loc(&c.word)).collect();
        words += locs.len();
        let per_vertex_min = words_from_graph(g)
            .unwrap()
            .iter()
            .map(|c| loc(&c.word))
            .min()
            .unwrap();
        if locs.iter().any(|&l| l != cw && l != cw + 1)
            || locs.iter().min() != Some(&cw)
            || per_vertex_min != cw
        {
            violations += 1;
        }
    }
    outcome(
        violations == 0,
        format!(
            "{exhaustive} connected graphs + 200 random multigraphs, {words} words, {violations} violations"
        ),
    )
}

fn rng_range(rng: &mut rand_chacha::ChaCha8Rng, lo: usize, hi: usize) -> usize {
    use rand::Rng;
    rng.gen_range(lo..=hi)
}

/// Words for the position-graph checks: 500 random ones plus the extremes.
fn position_words() -> Vec<Word> {
    let mut rng = rng(6);
    let mut out = Vec::new();
    while out.len() < 500 {
        let w = random_condensed_word(&mut rng, 6, 12);
        if w.len() >= 2 {
            out.push(w);
        }
    }
    out
}

fn pathwidth_sandwich() -> Outcome {
    let mut violations = 0;
    for w in position_words() {
        let l = loc(&w);
        let pw = pathwidth_exact(&build_g_alpha(&w).unwrap().graph)
            .unwrap()
            .0;
        if !(l <= pw && pw <= 2 * l) {
            violations += 1;
        }
    }
    let mut extremes = Vec::new();
    for (n, k) in [(3, 2), (3, 3), (4, 2)] {
        let w = tightness_alpha(n, k).unwrap();
        let pw = pathwidth_exact(&build_g_alpha(&w).unwrap().graph)
            .unwrap()
            .0;
        extremes.push(pw == 2 * k);
    }
    for k in 1..=5 {
        let w = tightness_beta(k).unwrap();
        let pw = if w.len() >= 2 {
            pathwidth_exact(&build_g_alpha(&w).unwrap().graph)
                .unwrap()
                .0
        } else {
            0
        };
        extremes.push(pw == k);
    }
    let extremes_ok = extremes.iter().all(|&b| b);
    outcome(
        violations == 0 && extremes_ok,
        format!(
            "500 words, {violations} sandwich violations; tight families {}",
            if extremes_ok { "match" } else { "differ" }
        ),
    )
}

/// Graphs for the edge-copy checks: every graph on at most 5 vertices with
/// 1 to 8 edges, plus 200 random multigraphs.
fn copy_graphs() -> (usize, Vec<MultiGraph>) {
    let mut graphs: Vec<MultiGraph> = (1..=5)
        .flat_map(non_isomorphic_graphs)
        .filter(|g| (1..=8).contains(&g.edge_count()))
        .collect();
    let exhaustive = graphs.len();
    let mut rng = rng(7);
    for _ in 0..200 {
        let n = rng_range(&mut rng, 2, 7);
        let m = rng_range(&mut rng, 1, 8);
        graphs.push(random_multigraph(&mut rng, n, m));
    }
    (exhaustive, graphs)
}

fn copy_sandwich() -> Outcome {
    let (exhaustive, graphs) = copy_graphs();
    let mut violations = 0;
    let mut contract = 0;
    for g in &graphs {
        let (cw, l) = cutwidth_exact(g).unwrap();
        let gp = build_g_prime(g).unwrap().graph;
        let (pw, q) = pathwidth_exact(&gp).unwrap();
        if !(cw <= pw && pw <= 2 * cw) {
            violations += 1;
        }
        match pd_gprime_to_arrangement(g, &q) {
            Ok(back) => {
                if cutwidth_of_arrangement(g, &back).unwrap() > q.width() {
                    violations += 1;
                }
            }
            Err(Error::ContractViolation(_)) => contract += 1,
            Err(e) => panic!("unexpected error {e}"),
        }
        let forward = arrangement_to_pd_gprime(g, &l).unwrap();
        let socw = second_order_cutwidth_of_arrangement(g, &l).unwrap();
        if !is_valid_path_decomposition(&gp, &forward) || forward.width() > socw || socw > 2 * cw {
            violations += 1;
        }
    }
    outcome(
        violations == 0 && contract == 0,
        format!(
            "{exhaustive} small graphs + 200 random, {violations} violations, {contract} contract violations"
        ),
    )
}

fn pipeline_audit() -> Outcome {
    let mut worst_word = Ratio::new(0, 1);
    let mut bad = 0;
    for w in position_words() {
        let l = loc(&w);
        let (v, s) = locality_via_pathwidth(&w, &ExactPathwidth).unwrap();
        if marking_number(&w, &s).unwrap().0 != v || v > 2 * l {
            bad += 1;
        }
        worst_word = worst_word.max(Ratio::new(v, l));
    }
    let mut worst_graph = Ratio::new(0, 1);
    for g in copy_graphs().1 {
        let cw = cutwidth_exact(&g).unwrap().0;
        let (v, l) = cutwidth_via_pathwidth(&g, &ExactPathwidth).unwrap();
        if cutwidth_of_arrangement(&g, &l).unwrap() != v || v > 2 * cw {
            bad += 1;
        }
        worst_graph = worst_graph.max(Ratio::new(v, cw));
    }
    let beta_ones = (1..=5).all(|k| {
        let w = tightness_beta(k).unwrap();
        locality_via_pathwidth(&w, &ExactPathwidth).unwrap().0 == loc(&w)
    });
    let a = tightness_alpha(3, 2).unwrap();
    let pw_a = pathwidth_exact(&build_g_alpha(&a).unwrap().graph)
        .unwrap()
        .0;
    let bound_ratio = Ratio::new(pw_a, loc(&a));
    let pipeline_a = locality_via_pathwidth(&a, &ExactPathwidth).unwrap().0;
    outcome(
        bad == 0 && beta_ones && bound_ratio == Ratio::from_integer(2),
        format!(
            "worst ratio {worst_word} on words, {worst_graph} on graphs; beta(k) ratio 1: {beta_ones}; \
             alpha(3,2): pw/loc = {bound_ratio}, translated value {pipeline_a}"
        ),
    )
}

fn appendix_a_laws() -> Outcome {
    let zimin_ok = (2..=5).all(|i| loc(&zimin(i).unwrap()) == 1 << (i - 2));
    let words = all_condensed_words(4, 6);
    let mut rep_bad = Vec::new();
    let mut pal_bad = 0;
    for u in &words {
        let k = loc(u);
        let bpm = border_priority(u, Border::Both).unwrap();
        for i in [2usize, 3] {
            let expected = if bpm { i * k - i + 1 } else { i * k };
            let got = loc(&condense(&u.repeat(i)));
            if got != expected {
                rep_bad.push((u.clone(), i, got, expected));
            }
        }
        let ur = u.reversed();
        for a in 0..=u.alphabet_size() {
            let ids: Vec<usize> = u.ids().chain([a]).chain(ur.ids()).collect();
            let w = condense(&Word::new(ids).unwrap());
            let l = loc(&w);
            if !(2 * k - 1..=2 * k + 1).contains(&l) {
                pal_bad += 1;
            }
        }
    }
    let example = rep_bad
        .first()
        .map(|(u, i, got, exp)| {
            format!(
                "; e.g. u = {:?}, i = {i}: loc = {got}, law says {exp}",
                u.ids().collect::<Vec<_>>()
            )
        })
        .unwrap_or_default();
    outcome(
        zimin_ok && rep_bad.is_empty() && pal_bad == 0,
        format!(
            "zimin {}; {} words; repetition violations {}, palindrome violations {pal_bad}{example}",
            if zimin_ok { "ok" } else { "wrong" },
            words.len(),
            rep_bad.len()
        ),
    )
}

fn reversal_law() -> Outcome {
    let mut rng = rng(10);
    let mut violations = 0;
    for _ in 0..10_000 {
        let w = random_word(&mut rng, 8, 24);
        let mut order: Vec<usize> = (0..w.alphabet_size()).collect();
        order.shuffle(&mut rng);
        let s = MarkingSequence::from_ids(order);
        let a = marking_number(&w, &s).unwrap().0;
        let b = marking_number(&w, &reverse_sequence(&s)).unwrap().0;
        if a.abs_diff(b) > 1 {
            violations += 1;
        }
    }
    outcome(
        violations == 0,
        format!("10000 pairs, {violations} violations"),
    )
}

fn gadget_check() -> Outcome {
    let mut cases: Vec<(MultiGraph, usize)> = Vec::new();
    for n in 1..=4 {
        for g in non_isomorphic_graphs(n) {
            for ell in 1..=n {
                cases.push((g.clone(), ell));
            }
        }
    }
    let mut rng = rng(11);
    for _ in 0..20 {
        let g = random_simple_graph(&mut rng, 5, 0.6);
        for ell in 3..=5 {
            cases.push((g.clone(), ell));
        }
    }
    let mut violations = 0;
    let mut with_clique = 0;
    let mut over_baseline = 0;
    for (g, ell) in &cases {
        let check = verify_gadget(&build_gadget(g, *ell).unwrap()).unwrap();
        with_clique += check.has_clique as usize;
        if !check.consistent {
            violations += 1;
        }
        if !check.baseline_within_bound {
            over_baseline += 1;
        }
    }
    outcome(
        violations == 0,
        format!(
            "{} (graph, l) cases ({with_clique} with a clique), {violations} violations; \
             explicit sequence over the baseline on {over_baseline} edgeless cases",
            cases.len()
        ),
    )
}

fn greedy_lower_bounds() -> Outcome {
    let psi = |w: &Word, s: Strategy, l: usize| Ratio::new(greedy_best(w, s).unwrap().0, l);
    let mut failures: Vec<String> = Vec::new();
    for ell in (4..=12).step_by(2) {
        let w = family(Family::Be, ell).unwrap();
        let r = psi(&w, Strategy::Be, loc(&w));
        if r < Ratio::from_integer(2) - Ratio::new(2, ell) {
            failures.push(format!("BE on be({ell}): {r}"));
        }
    }
    for ell in [4, 5] {
        let w = family(Family::Alpha6, ell).unwrap();
        let l = loc(&w);
        if l != 6 {
            failures.push(format!("loc(alpha6({ell})) = {l}"));
        }
        for s in [
            Strategy::So,
            Strategy::Snm,
            Strategy::BeSo,
            Strategy::BeSnm,
            Strategy::BeMostExt,
            Strategy::BeRatio,
        ] {
            let r = psi(&w, s, l);
            if r < Ratio::new(ell - 1, 6) {
                failures.push(format!("{s} on alpha6({ell}): {r}"));
            }
        }
    }
    for ell in 2..=8 {
        let w = family(Family::Gamma, ell).unwrap();
        let l = loc(&w);
        if l != 2 {
            failures.push(format!("loc(gamma({ell})) = {l}"));
        }
        let r = psi(&w, Strategy::BeMo, l);
        if r < Ratio::new(ell - 1, 6) {
            failures.push(format!("BE-MO on gamma({ell}): {r}"));
        }
        let r = psi(&w, Strategy::Mo, l);
        if r < Ratio::new(ell - 1, 2) {
            failures.push(format!("MO on gamma({ell}): {r}"));
        }
    }
    for ell in (2..=10).step_by(2) {
        let w = family(Family::Delta, ell).unwrap();
        let l = loc(&w);
        if l != 2 {
            failures.push(format!("loc(delta({ell})) = {l}"));
        }
        for s in [Strategy::Lr, Strategy::BeLr] {
            let r = psi(&w, s, l);
            if r < Ratio::new(ell, 4) {
                failures.push(format!("{s} on delta({ell}): {r}"));
            }
        }
    }
    let detail = if failures.is_empty() {
        "all five bounds hold; loc(gamma) = loc(delta) = 2, loc(alpha6) = 6".to_string()
    } else {
        failures.join("; ")
    };
    outcome(failures.is_empty(), detail)
}

fn cross_oracles() -> Outcome {
    let mut rng = rng(13);
    let mut disagreements = 0;
    let mut naive_checked = 0;
    for i in 0..10_000 {
        let w = random_word(&mut rng, 6, 14);
        let a = locality_bruteforce(&w).unwrap();
        let b = locality_subset_dp(&w).unwrap();
        let c = locality_via_cutwidth(&w).unwrap();
        let peaks_ok = [&a, &b, &c]
            .iter()
            .all(|(v, s)| marking_number(&w, s).unwrap().0 == *v);
        if a.0 != b.0 || b.0 != c.0 || !peaks_ok {
            disagreements += 1;
        }
        if i % 20 == 0 {
            naive_checked += 1;
            if locality_oracle(&w) != a.0 {
                disagreements += 1;
            }
        }
    }
    let mut graphs: Vec<MultiGraph> = (2..=6).flat_map(connected_graphs).collect();
    for _ in 0..100 {
        let extra = rng_range(&mut rng, 0, 6);
        graphs.push(random_connected_multigraph(&mut rng, 7, extra));
    }
    for g in &graphs {
        let (cw, _) = cutwidth_exact(g).unwrap();
        let (via, l) = cutwidth_via_locality(g, &ExactLocality).unwrap();
        if cw != via || cutwidth_of_arrangement(g, &l).unwrap() != via || cutwidth_oracle(g) != cw {
            disagreements += 1;
        }
    }
    outcome(
        disagreements == 0,
        format!(
            "10000 words ({naive_checked} also against the naive oracle), {} graphs, {disagreements} disagreements",
            graphs.len()
        ),
    )
}

/// Checks that cannot pass because the value they demand is not the true
/// one. Their lines still print FAIL; the binary fails only if anything else
/// does, or if one of these starts passing.
///
/// 12: `loc(alpha6(4))` is 5, not 6. The sequence
/// `y1 y2 y3 y4 x1 x2 x3 x4 y5 y6` peaks at 5 (after `y3`), and both exact
/// solvers agree that 5 is optimal.
const KNOWN_FAILURES: [usize; 1] = [12];

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let results = [
        check(
            1,
            "worked examples",
            Duration::from_millis(1),
            worked_examples,
        ),
        check(2, "symbol graph with k = 2", secs(1), symbol_graph_sample),
        check(
            3,
            "Eulerian word of the eight-edge graph",
            secs(1),
            euler_word_sample,
        ),
        check(4, "cw(H_k) = 2k iff loc <= k", secs(120), loc_cut_iff),
        check(
            5,
            "Eulerian words have loc in {cw, cw + 1}",
            secs(300),
            cut_loc_window,
        ),
        check(
            6,
            "loc <= pw(G_a) <= 2 loc and tight families",
            secs(300),
            pathwidth_sandwich,
        ),
        check(
            7,
            "cw <= pw(G') <= 2 cw and translations",
            secs(600),
            copy_sandwich,
        ),
        check(8, "factor-2 pipelines", secs(600), pipeline_audit),
        check(
            9,
            "Zimin, repetition and palindrome laws",
            secs(600),
            appendix_a_laws,
        ),
        check(10, "reversal law", secs(60), reversal_law),
        check(11, "clique gadget", secs(600), gadget_check),
        check(12, "greedy lower bounds", secs(600), greedy_lower_bounds),
        check(13, "cross-oracle identity", secs(600), cross_oracles),
    ];
    let passed = results.iter().filter(|&&b| b).count();
    let unexpected: Vec<usize> = results
        .iter()
        .enumerate()
        .map(|(i, &ok)| (i + 1, ok))
        .filter(|&(id, ok)| ok == KNOWN_FAILURES.contains(&id))
        .map(|(id, _)| id)
        .collect();
    println!(
        "{passed}/{} acceptance checks passed; known failures {:?}; unexpected outcomes {:?}",
        results.len(),
        KNOWN_FAILURES,
        unexpected
    );
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
