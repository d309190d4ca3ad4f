use std::fs;
use std::path::Path;
use std::thread;

use anyhow::{anyhow, bail, Context, Result};
use num_rational::Ratio;
use serde_json::{json, Value};

use locality::graphs::io::{format_graph, parse_graph};
use locality::graphs::{
    check_path_decomposition, cutwidth_exact, cutwidth_of_arrangement, pathwidth_exact, MultiGraph,
};
use locality::greedy::{self, Family, Strategy};
use locality::hardness::{build_gadget, verify_gadget};
use locality::reductions::{self as red, ExactLocality, ExactPathwidth, LabeledReduction};
use locality::words::{self, marking_number, MarkingSequence, SymbolTable, Word, WordMode};
use locality::Error;

use crate::certs::{
    format_arrangement, format_decomposition, parse_arrangement, parse_decomposition,
    resolve_vertex,
};
use crate::report::RunReport;
use crate::{CertKind, Command, LocMethod, ReduceKind, Which, WidthMethod};

pub fn run(cmd: &Command) -> Result<RunReport> {
    match cmd {
        Command::Loc {
            word,
            method,
            tokens,
            batch,
            cert,
        } => match batch {
            Some(file) => loc_batch(file, *method, *tokens),
            None => loc(
                word.as_deref().unwrap_or(""),
                *method,
                *tokens,
                cert.as_deref(),
            ),
        },
        Command::Width {
            graph,
            which,
            method,
            cert,
        } => width(graph, *which, *method, cert.as_deref()),
        Command::Reduce {
            input,
            kind,
            k,
            cycle,
            all_edges,
            anchor,
            tokens,
            translate,
            output,
        } => {
            let opts = ReduceOpts {
                k: *k,
                cycle: cycle.as_deref(),
                all_edges: *all_edges,
                anchor: anchor.as_deref(),
                tokens: *tokens,
                translate: translate.as_deref(),
                output: output.as_deref(),
            };
            reduce(input, *kind, &opts)
        }
        Command::Greedy {
            word,
            family,
            strategy,
            ratio,
            tokens,
        } => greedy_cmd(
            word.as_deref(),
            family.as_deref(),
            strategy,
            *ratio,
            *tokens,
        ),
        Command::Gadget {
            graph,
            ell,
            verify,
            output,
        } => gadget(graph, *ell, *verify, output.as_deref()),
        Command::Family { name, params } => family_cmd(name, params),
        Command::Check {
            word,
            tokens,
            graph,
            kind,
            cert,
        } => check(word.as_deref(), *tokens, graph.as_deref(), *kind, cert),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn word_mode(text: &str, tokens: bool) -> WordMode {
    if tokens {
        WordMode::Tokens
    } else {
        WordMode::detect(text)
    }
}

/// Sequences and walks follow the same rule as words, except that a single
/// multi-character name is still one symbol when the table needs tokens.
fn sequence_mode(table: &SymbolTable, text: &str) -> WordMode {
    if text.trim().contains(char::is_whitespace) {
        WordMode::Tokens
    } else {
        table.preferred_mode()
    }
}

fn solve(w: &Word, method: LocMethod) -> locality::Result<(usize, MarkingSequence)> {
    match method {
        LocMethod::Dp => words::locality_subset_dp(w),
        LocMethod::Bruteforce => words::locality_bruteforce(w),
        LocMethod::ViaCutwidth => red::locality_via_cutwidth(w),
        LocMethod::ViaPathwidth => red::locality_via_pathwidth(w, &ExactPathwidth),
    }
}

fn method_name(method: LocMethod) -> &'static str {
    match method {
        LocMethod::Dp => "dp",
        LocMethod::Bruteforce => "bruteforce",
        LocMethod::ViaCutwidth => "via-cutwidth",
        LocMethod::ViaPathwidth => "via-pathwidth",
    }
}

struct Solved {
    input: String,
    value: usize,
    witness: String,
    valid: bool,
}

fn solve_text(text: &str, method: LocMethod, tokens: bool) -> Result<Solved> {
    let mode = word_mode(text, tokens);
    let (w, table) = SymbolTable::parse_word(text, mode)?;
    let (value, s) = solve(&w, method)?;
    let valid = marking_number(&w, &s)?.0 == value;
    Ok(Solved {
        input: text.to_string(),
        value,
        witness: table.format_sequence(&s, mode),
        valid,
    })
}

fn loc(text: &str, method: LocMethod, tokens: bool, cert: Option<&Path>) -> Result<RunReport> {
    let mut r = RunReport::new("loc", text.as_bytes());
    let s = solve_text(text, method, tokens)?;
    if let Some(path) = cert {
        write(path, &s.witness)?;
    }
    r.line(format!("loc: {}", s.value));
    r.line(format!("witness: {}", s.witness));
    r.value = json!(s.value);
    r.valid = s.valid;
    r.certificate = Some(s.witness);
    r.details = json!({ "method": method_name(method) });
    Ok(r)
}

fn loc_batch(file: &Path, method: LocMethod, tokens: bool) -> Result<RunReport> {
    let text = read(file)?;
    let mut r = RunReport::new("loc", text.as_bytes());
    let inputs: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(inputs.len().max(1));
    let chunk = inputs.len().div_ceil(workers).max(1);
    let results: Vec<Result<Solved>> = thread::scope(|scope| {
        let handles: Vec<_> = inputs
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|&(line, w)| {
                            solve_text(w, method, tokens).with_context(|| format!("line {line}"))
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let solved = results.into_iter().collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::with_capacity(solved.len());
    for s in &solved {
        r.line(format!("{}\t{}\t{}", s.input, s.value, s.witness));
        rows.push(
            json!({ "word": s.input, "loc": s.value, "witness": s.witness, "valid": s.valid }),
        );
    }
    r.valid = solved.iter().all(|s| s.valid);
    r.value = Value::Array(rows);
    r.details = json!({ "method": method_name(method), "count": solved.len() });
    Ok(r)
}

fn width(path: &Path, which: Which, method: WidthMethod, cert: Option<&Path>) -> Result<RunReport> {
    let text = read(path)?;
    let g = parse_graph(&text)?;
    let mut r = RunReport::new("width", text.as_bytes());
    let (value, certificate, valid) = match which {
        Which::Cutwidth => {
            let (cw, l) = match method {
                WidthMethod::Exact => cutwidth_exact(&g)?,
                WidthMethod::ViaLocality => red::cutwidth_via_locality(&g, &ExactLocality)?,
                WidthMethod::ViaPathwidth => red::cutwidth_via_pathwidth(&g, &ExactPathwidth)?,
            };
            let valid = cutwidth_of_arrangement(&g, &l)? == cw;
            let c = format_arrangement(&g, &l);
            r.line(format!("cutwidth: {cw}"));
            r.line(format!("arrangement: {c}"));
            (cw, c, valid)
        }
        Which::Pathwidth => {
            if method != WidthMethod::Exact {
                bail!(Error::Precondition(
                    "pathwidth is only solved exactly".into()
                ));
            }
            let (pw, q) = pathwidth_exact(&g)?;
            let valid = check_path_decomposition(&g, &q).is_ok() && q.width() == pw;
            let c = format_decomposition(&g, &q);
            r.line(format!("pathwidth: {pw}"));
            r.line("decomposition:");
            r.line(&c);
            (pw, c, valid)
        }
    };
    if let Some(path) = cert {
        write(path, &certificate)?;
    }
    r.value = json!(value);
    r.valid = valid;
    r.certificate = Some(certificate);
    r.details = json!({
        "which": if which == Which::Cutwidth { "cutwidth" } else { "pathwidth" },
        "vertices": g.n(),
        "edges": g.edge_count(),
    });
    Ok(r)
}

struct ReduceOpts<'a> {
    k: Option<usize>,
    cycle: Option<&'a str>,
    all_edges: bool,
    anchor: Option<&'a str>,
    tokens: bool,
    translate: Option<&'a Path>,
    output: Option<&'a Path>,
}

fn reduce(input: &str, kind: ReduceKind, o: &ReduceOpts) -> Result<RunReport> {
    match kind {
        ReduceKind::Word2cut | ReduceKind::Word2pw => reduce_word(input, kind, o),
        ReduceKind::Graph2word => graph_to_word(input, o),
        ReduceKind::Graph2pw => graph_to_pathwidth(input, o),
    }
}

/// Emits `body` to the output file or the report text.
fn emit(r: &mut RunReport, o: &ReduceOpts, body: &str) -> Result<()> {
    match o.output {
        Some(path) => write(path, body),
        None => {
            r.line(body.trim_end());
            Ok(())
        }
    }
}

fn graph_summary(g: &MultiGraph, text: &str) -> Value {
    json!({ "vertices": g.n(), "edges": g.edge_count(), "graph": text })
}

fn reduce_word(text: &str, kind: ReduceKind, o: &ReduceOpts) -> Result<RunReport> {
    let mode = word_mode(text, o.tokens);
    let (w, table) = SymbolTable::parse_word(text, mode)?;
    let mut r = RunReport::new("reduce", text.as_bytes());
    let red: LabeledReduction = match (kind, o.k) {
        (ReduceKind::Word2cut, Some(k)) => red::build_h_alpha_k(&w, k)?,
        (ReduceKind::Word2cut, None) => red::build_h_alpha(&w)?,
        _ => red::build_g_alpha(&w)?,
    };
    let named = red.named_graph(table.names(), Some(&w));
    match o.translate {
        None => {
            let body = format_graph(&named);
            emit(&mut r, o, &body)?;
            r.value = json!({ "vertices": named.n(), "edges": named.edge_count(), "k": red.k });
            r.details = graph_summary(&named, &body);
        }
        Some(path) => {
            let cert = read(path)?;
            let (s, bound) = if kind == ReduceKind::Word2cut {
                let l = parse_arrangement(&named, &cert)?;
                let cw = cutwidth_of_arrangement(&named, &l)?;
                (red::arrangement_to_marking(&w, &red, &l)?, cw / 2 + 1)
            } else {
                let q = parse_decomposition(&named, &cert)?;
                (red::path_decomposition_to_marking(&w, &q)?, q.width())
            };
            let (pi, _) = marking_number(&w, &s)?;
            let seq = table.format_sequence(&s, mode);
            emit(&mut r, o, &seq)?;
            r.value = json!(pi);
            r.valid = pi <= bound;
            r.details = json!({ "bound": bound });
            r.certificate = Some(seq);
        }
    }
    Ok(r)
}

fn vertex_table(g: &MultiGraph) -> Result<SymbolTable> {
    Ok(SymbolTable::from_names((0..g.n()).map(|v| g.label(v)))?)
}

fn parse_walk(g: &MultiGraph, table: &SymbolTable, walk: &str) -> Result<Vec<usize>> {
    let toks: Vec<String> = match sequence_mode(table, walk) {
        WordMode::Tokens => walk.split_whitespace().map(String::from).collect(),
        WordMode::Chars => walk.trim().chars().map(String::from).collect(),
    };
    toks.iter().map(|t| resolve_vertex(g, t)).collect()
}

fn graph_to_word(path: &str, o: &ReduceOpts) -> Result<RunReport> {
    let text = read(Path::new(path))?;
    let g = parse_graph(&text)?;
    let table = vertex_table(&g)?;
    let mode = table.preferred_mode();
    let mut r = RunReport::new("reduce", text.as_bytes());
    let mut cands = match o.cycle {
        Some(walk) => red::words_from_cycle(&g, &parse_walk(&g, &table, walk)?, o.all_edges)?,
        None if o.all_edges => red::words_from_graph_all_edges(&g)?,
        None => red::words_from_graph(&g)?,
    };
    if let Some(a) = o.anchor {
        if o.all_edges {
            bail!(Error::Precondition(
                "--anchor selects among per-vertex words".into()
            ));
        }
        let v = resolve_vertex(&g, a)?;
        cands.retain(|c| c.anchor == Some(v));
    }
    let name = |v: usize| g.label(v);
    let rows: Vec<Value> = cands
        .iter()
        .map(|c| {
            json!({
                "anchor": c.anchor.map(name),
                "deleted": [name(c.deleted.from), name(c.deleted.to)],
                "word": table.format_word(&c.word, mode),
            })
        })
        .collect();
    match o.translate {
        None => {
            let body = cands
                .iter()
                .map(|c| {
                    format!(
                        "{}\t{}-{}\t{}",
                        c.anchor.map_or("-".to_string(), name),
                        name(c.deleted.from),
                        name(c.deleted.to),
                        table.format_word(&c.word, mode)
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            emit(&mut r, o, &body)?;
            r.value = Value::Array(rows);
        }
        Some(cert_path) => {
            let cand = cands.first().ok_or_else(|| {
                anyhow!(Error::Precondition("no word to translate against".into()))
            })?;
            let cert = read(cert_path)?;
            let s = table.parse_sequence(&cert, sequence_mode(&table, &cert))?;
            let (pi, _) = marking_number(&cand.word, &s)?;
            let l = red::marking_to_arrangement(&g, &cand.word, &s)?;
            let cw = cutwidth_of_arrangement(&g, &l)?;
            let arr = format_arrangement(&g, &l);
            emit(&mut r, o, &arr)?;
            r.value = json!(cw);
            r.valid = cw <= pi;
            r.certificate = Some(arr);
            r.details = json!({ "word": rows[0], "bound": pi });
        }
    }
    Ok(r)
}

fn graph_to_pathwidth(path: &str, o: &ReduceOpts) -> Result<RunReport> {
    let text = read(Path::new(path))?;
    let g = parse_graph(&text)?;
    let mut r = RunReport::new("reduce", text.as_bytes());
    let red = red::build_g_prime(&g)?;
    let named = red.graph.clone();
    match o.translate {
        None => {
            let body = format_graph(&named);
            emit(&mut r, o, &body)?;
            r.value = json!({ "vertices": named.n(), "edges": named.edge_count() });
            r.details = graph_summary(&named, &body);
        }
        Some(cert_path) => {
            let q = parse_decomposition(&named, &read(cert_path)?)?;
            let l = red::pd_gprime_to_arrangement(&g, &q)?;
            let cw = cutwidth_of_arrangement(&g, &l)?;
            let arr = format_arrangement(&g, &l);
            emit(&mut r, o, &arr)?;
            r.value = json!(cw);
            r.valid = cw <= q.width();
            r.certificate = Some(arr);
            r.details = json!({ "bound": q.width() });
        }
    }
    Ok(r)
}

/// Symbol names for the greedy families: `x1..xl`, then the `y` letters.
fn family_names(f: Family, l: usize, sigma: usize) -> Vec<String> {
    let xs = (1..=l).map(|i| format!("x{i}"));
    match (f, sigma - l) {
        (_, 0) => xs.collect(),
        (Family::Be, _) => xs.chain(["y".to_string()]).collect(),
        (_, ys) => xs.chain((1..=ys).map(|i| format!("y{i}"))).collect(),
    }
}

fn parse_family(spec: &str) -> Result<(Word, SymbolTable)> {
    let (name, l) = spec
        .split_once(':')
        .ok_or_else(|| anyhow!(Error::Parse(format!("expected NAME:L, got {spec:?}"))))?;
    let f: Family = name.parse()?;
    let l: usize = l
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad family size {l:?}")))?;
    let w = greedy::family(f, l)?;
    let table = SymbolTable::from_names(family_names(f, l, w.alphabet_size()))?;
    Ok((w, table))
}

fn greedy_cmd(
    word: Option<&str>,
    family: Option<&str>,
    strategy: &str,
    ratio: bool,
    tokens: bool,
) -> Result<RunReport> {
    let source = word.or(family).unwrap_or("");
    let mut r = RunReport::new("greedy", source.as_bytes());
    let (w, table) = match family {
        Some(spec) => parse_family(spec)?,
        None => SymbolTable::parse_word(source, word_mode(source, tokens))?,
    };
    let mode = table.preferred_mode();
    let strategies: Vec<Strategy> = if strategy.eq_ignore_ascii_case("all") {
        Strategy::ALL.to_vec()
    } else {
        vec![strategy.parse()?]
    };
    let loc = if ratio {
        if w.is_empty() {
            bail!(Error::Precondition(
                "the ratio is undefined for the empty word".into()
            ));
        }
        Some(words::locality_subset_dp(&w)?.0)
    } else {
        None
    };
    let mut rows = Vec::new();
    let mut witness = None;
    for s in &strategies {
        let (g, seq) = greedy::greedy_best(&w, *s)?;
        r.valid &= marking_number(&w, &seq)?.0 == g;
        let wit = table.format_sequence(&seq, mode);
        let psi = loc.map(|l| Ratio::new(g, l).to_string());
        let mut line = format!("{}\t{}", s.tag(), g);
        if let (Some(l), Some(p)) = (loc, &psi) {
            line.push_str(&format!("\t{l}\t{p}"));
        }
        line.push_str(&format!("\t{wit}"));
        r.line(line);
        rows.push(
            json!({ "strategy": s.tag(), "greedy": g, "loc": loc, "psi": psi, "witness": wit }),
        );
        witness = Some(wit);
    }
    if strategies.len() == 1 {
        r.certificate = witness;
    }
    r.value = Value::Array(rows);
    r.details = json!({ "word": table.format_word(&w, mode), "length": w.len() });
    Ok(r)
}

fn gadget(path: &Path, ell: usize, verify: bool, output: Option<&Path>) -> Result<RunReport> {
    let text = read(path)?;
    let g = parse_graph(&text)?;
    let mut r = RunReport::new("gadget", text.as_bytes());
    let gd = build_gadget(&g, ell)?;
    let table = SymbolTable::from_names(gd.symbol_names())?;
    let word = table.format_word(&gd.word, WordMode::Tokens);
    r.line(format!("rho: {}", gd.rho));
    r.line(format!("length: {}", gd.word.len()));
    r.line(format!("gammas: {} {} {}", gd.gamma1, gd.gamma2, gd.gamma3));
    let mut details = json!({
        "ell": ell,
        "mu": gd.mu,
        "max_degree": gd.max_degree,
        "gamma": [gd.gamma1, gd.gamma2, gd.gamma3],
        "factor_lengths": gd.factor_lengths,
        "length": gd.word.len(),
    });
    if verify {
        let c = verify_gadget(&gd)?;
        r.line(format!("loc: {}", c.loc));
        r.line(format!("has_clique: {}", c.has_clique));
        r.line(format!("consistent: {}", c.consistent));
        r.valid = c.consistent;
        details["loc"] = json!(c.loc);
        details["has_clique"] = json!(c.has_clique);
        details["consistent"] = json!(c.consistent);
        details["baseline_peak"] = json!(c.baseline_peak);
        details["baseline_within_bound"] = json!(c.baseline_within_bound);
    }
    match output {
        Some(p) => write(p, &word)?,
        None => r.line(format!("word: {word}")),
    }
    details["word"] = json!(word);
    r.value = json!(gd.rho);
    r.details = details;
    Ok(r)
}

fn family_cmd(name: &str, params: &[usize]) -> Result<RunReport> {
    let arity = |n: usize| -> Result<()> {
        if params.len() != n {
            bail!(Error::Parse(format!(
                "{name} takes {n} parameter(s), got {}",
                params.len()
            )));
        }
        Ok(())
    };
    let xs = |n: usize| (1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>();
    let (w, table) = match name.to_ascii_lowercase().as_str() {
        "zimin" => {
            arity(1)?;
            (
                words::zimin(params[0])?,
                SymbolTable::from_names(xs(params[0]))?,
            )
        }
        "alpha" => {
            arity(2)?;
            (
                words::tightness_alpha(params[0], params[1])?,
                SymbolTable::from_names(xs(params[0]))?,
            )
        }
        "beta" => {
            arity(1)?;
            (
                words::tightness_beta(params[0])?,
                SymbolTable::from_names(xs(2))?,
            )
        }
        other => {
            let f: Family = other.parse()?;
            arity(1)?;
            let w = greedy::family(f, params[0])?;
            let t = SymbolTable::from_names(family_names(f, params[0], w.alphabet_size()))?;
            (w, t)
        }
    };
    let spec = format!("{name} {params:?}");
    let mut r = RunReport::new("family", spec.as_bytes());
    let text = table.format_word(&w, WordMode::Tokens);
    r.line(&text);
    r.value = json!(w.len());
    r.details = json!({ "word": text, "alphabet": w.alphabet_size() });
    Ok(r)
}

fn check(
    word: Option<&str>,
    tokens: bool,
    graph: Option<&Path>,
    kind: Option<CertKind>,
    cert_path: &Path,
) -> Result<RunReport> {
    let cert = read(cert_path)?;
    if let Some(text) = word {
        let mode = word_mode(text, tokens);
        let (w, table) = SymbolTable::parse_word(text, mode)?;
        let s = table.parse_sequence(&cert, sequence_mode(&table, &cert))?;
        let (pi, _) = marking_number(&w, &s)?;
        let mut r = RunReport::new("check", text.as_bytes());
        r.line(format!("marking number: {pi}"));
        r.value = json!(pi);
        r.certificate = Some(table.format_sequence(&s, mode));
        return Ok(r);
    }
    let path = graph.expect("clap requires --word or --graph");
    let text = read(path)?;
    let g = parse_graph(&text)?;
    let mut r = RunReport::new("check", text.as_bytes());
    match kind.unwrap_or(CertKind::Arrangement) {
        CertKind::Arrangement => {
            let l = parse_arrangement(&g, &cert)?;
            let cw = cutwidth_of_arrangement(&g, &l)?;
            r.line(format!("cutwidth of arrangement: {cw}"));
            r.value = json!(cw);
            r.certificate = Some(format_arrangement(&g, &l));
        }
        CertKind::Decomposition => {
            let q = parse_decomposition(&g, &cert)?;
            check_path_decomposition(&g, &q)
                .map_err(|v| Error::InvalidCertificate(v.to_string()))?;
            r.line(format!("width of decomposition: {}", q.width()));
            r.value = json!(q.width());
            r.certificate = Some(format_decomposition(&g, &q));
        }
    }
    Ok(r)
}
