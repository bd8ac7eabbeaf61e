use std::io::Write;

use serde_json::{json, Value};
use unavoid_core::bounds::{self, audit, RamseyMode};
use unavoid_core::detect;
use unavoid_core::enumerate::{self, Probability};
use unavoid_core::extract::{self, Scope};
use unavoid_core::harness::{self, EnumerationScope, GraphSource, SuiteReport, WitnessConfig};
use unavoid_core::params::{self, PropertyKind};
use unavoid_core::{graph6, Error, Exec, FamilyKind, FamilySpec, Graph, Pattern, TheoremId};

use crate::{Command, Common, Failure, Format, GraphInput, Suite};

type Run<T = ()> = Result<T, Failure>;

/// Flag values that fail to parse are usage errors, not domain errors.
fn flag<T>(r: unavoid_core::Result<T>) -> Run<T> {
    r.map_err(|e| Failure::Usage(e.to_string()))
}

fn unsupported(format: Format, what: &str) -> Failure {
    Failure::Usage(format!("--format {format:?} is not available for {what}").to_lowercase())
}

fn exec_for(common: &Common) -> Run<Exec> {
    match common.jobs {
        None => Ok(Exec::Parallel),
        Some(0) => Err(Failure::Usage("--jobs must be at least 1".into())),
        Some(1) => Ok(Exec::Sequential),
        Some(j) => {
            // A pool can only be installed once per process; later calls keep the first.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
            Ok(Exec::Parallel)
        }
    }
}

fn emit(common: &Common, mut text: String) -> Run {
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &common.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(Error::from)?,
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn one_or_many(mut vs: Vec<Value>) -> Value {
    if vs.len() == 1 {
        vs.pop().unwrap()
    } else {
        Value::Array(vs)
    }
}

fn load_graphs(input: &GraphInput) -> Run<Vec<Graph>> {
    let graphs = match (&input.graph6, input.file.as_deref()) {
        (Some(s), _) => vec![graph6::decode(s.trim())?],
        (None, Some("-")) => enumerate::read_graph6_stream(std::io::stdin().lock()).collect::<Result<_, _>>()?,
        (None, Some(f)) => match f.strip_prefix('@') {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
                vec![Graph::parse_edge_list(&text)?]
            }
            None => enumerate::read_graph6_file(f.as_ref())?,
        },
        (None, None) => return Err(Failure::Usage("one of --graph6 or --file is required".into())),
    };
    if graphs.is_empty() {
        return Err(Error::InvalidParameter("input contains no graphs".into()).into());
    }
    Ok(graphs)
}

fn g6(g: &Graph) -> String {
    graph6::encode(g).unwrap_or_default()
}

fn graph_json(name: &str, g: &Graph) -> Value {
    json!({
        "pattern": name,
        "order": g.order(),
        "edges": g.edge_count(),
        "graph6": g6(g),
        "edge_list": g.edges(),
    })
}

pub(crate) fn run(cmd: Command) -> Run {
    match cmd {
        Command::Analyze { input, k, common } => analyze(&input, k, &common),
        Command::Pattern { family, theorem, n, common } => pattern(family, theorem, n, &common),
        Command::Detect { input, pattern, theorem, n, budget, common } => {
            detect_cmd(&input, pattern, theorem, n, budget, &common)
        }
        Command::Extract { input, theorem, prop, scope, n, common } => {
            extract_cmd(&input, theorem, prop, &scope, n, &common)
        }
        Command::Bounds { theorem, n, no_table, audit, common } => bounds_cmd(&theorem, n, no_table, audit, &common),
        Command::Verify { suite, max_order, connected, file, theorem, n, trials, edge_prob, seed, common } => {
            let exec = exec_for(&common)?;
            let theorem = theorem.map(|t| flag(TheoremId::parse(&t))).transpose()?;
            let prob = flag(Probability::parse(&edge_prob))?;
            let source = file.map_or(GraphSource::Builtin, GraphSource::File);
            let scope = |connected_only| EnumerationScope { max_order, connected_only, source: source.clone() };
            let reports = match suite {
                Suite::PatternCounts => {
                    let ts = theorem.map_or(TheoremId::ALL.to_vec(), |t| vec![t]);
                    let hi = n.unwrap_or(8);
                    ts.into_iter().map(|t| harness::check_pattern_counts(t, 2.min(hi)..=hi)).collect::<Result<_, _>>()?
                }
                Suite::LocalChain => vec![harness::check_local_chain(&scope(connected), exec)?],
                Suite::Cds => vec![harness::check_cds_claim(&scope(true), exec)?],
                Suite::Hindex => vec![harness::check_hindex_equivalence(&scope(connected), exec)?],
                Suite::Matching => vec![harness::check_matching_lemma(trials, 3, 4, seed)?],
                Suite::Witnesses => {
                    let cfg = WitnessConfig { trials, max_order, edge_prob: prob, seed };
                    vec![harness::validate_witnesses(cfg, exec)?]
                }
                Suite::Scan => {
                    let t = theorem.unwrap_or(TheoremId::B1Deg);
                    vec![harness::empirical_bound_scan(t, n.unwrap_or(4), max_order, connected, exec)?]
                }
            };
            verify_output(&reports, &common)
        }
        Command::Enumerate { n, max_order, connected, random, edge_prob, seed, common } => {
            let exec = exec_for(&common)?;
            let graphs = match (random, n, max_order) {
                (Some(count), Some(order), _) => {
                    let p = flag(Probability::parse(&edge_prob))?;
                    (0..count).map(|i| enumerate::random_graph(order, p, seed.wrapping_add(i))).collect()
                }
                (None, Some(order), _) => enumerate::enumerate_graphs_with(order, connected, exec)?,
                (None, None, Some(m)) => enumerate::enumerate_up_to(m, connected, exec)?,
                _ => return Err(Failure::Usage("enumerate needs --n or --max-order".into())),
            };
            let codes: Vec<String> = graphs.iter().map(g6).collect();
            let text = match common.format {
                Format::Json => pretty(&json!({ "count": codes.len(), "graphs": codes })),
                Format::Graph6 => codes.join("\n"),
                Format::Csv | Format::Table => {
                    let sep = if common.format == Format::Csv { "," } else { "\t" };
                    let mut s = ["order", "edges", "graph6"].join(sep) + "\n";
                    for (g, c) in graphs.iter().zip(&codes) {
                        s.push_str(&format!("{}{sep}{}{sep}{c}\n", g.order(), g.edge_count()));
                    }
                    s
                }
            };
            emit(&common, text)
        }
    }
}

fn analyze(input: &GraphInput, k: usize, common: &Common) -> Run {
    let exec = exec_for(common)?;
    if common.format == Format::Graph6 {
        return Err(unsupported(common.format, "analyze"));
    }
    let graphs = load_graphs(input)?;
    let mut out = Vec::new();
    let mut text = String::new();
    if common.format == Format::Csv {
        text.push_str("graph6,vertex,deg,alphaL,cL,sdeg\n");
    }
    for g in &graphs {
        let profiles = params::all_profiles_with(g, exec);
        let code = g6(g);
        let counts: serde_json::Map<String, Value> = PropertyKind::ALL
            .iter()
            .map(|&p| {
                let vals: Vec<usize> = profiles.iter().map(|x| x.get(p)).collect();
                (p.name().to_string(), json!(params::p_k_from_values(&vals, k)))
            })
            .collect();
        let h: serde_json::Map<String, Value> = PropertyKind::ALL
            .iter()
            .map(|&p| {
                let vals: Vec<usize> = profiles.iter().map(|x| x.get(p)).collect();
                (p.name().to_string(), json!(params::h_index_from_values(&vals)))
            })
            .collect();
        match common.format {
            Format::Json => {
                let rows: Vec<Value> = profiles
                    .iter()
                    .enumerate()
                    .map(|(v, p)| json!({ "vertex": v, "deg": p.deg, "alphaL": p.alpha_l, "cL": p.c_l, "sdeg": p.sdeg }))
                    .collect();
                let mut obj = json!({
                    "graph6": code,
                    "order": g.order(),
                    "edges": g.edge_count(),
                    "connected": g.is_connected(),
                    "profiles": rows,
                    "h_index": h,
                });
                obj[format!("p{k}")] = Value::Object(counts);
                out.push(obj);
            }
            Format::Csv => {
                for (v, p) in profiles.iter().enumerate() {
                    text.push_str(&format!("{code},{v},{},{},{},{}\n", p.deg, p.alpha_l, p.c_l, p.sdeg));
                }
            }
            _ => {
                text.push_str(&format!("{code}  order {}  edges {}\n", g.order(), g.edge_count()));
                text.push_str("vertex\tdeg\talphaL\tcL\tsdeg\n");
                for (v, p) in profiles.iter().enumerate() {
                    text.push_str(&format!("{v}\t{}\t{}\t{}\t{}\n", p.deg, p.alpha_l, p.c_l, p.sdeg));
                }
                let line = |m: &serde_json::Map<String, Value>| {
                    m.iter().map(|(a, b)| format!("{a}={b}")).collect::<Vec<_>>().join(" ")
                };
                text.push_str(&format!("p{k}: {}\nh-index: {}\n", line(&counts), line(&h)));
            }
        }
    }
    if common.format == Format::Json {
        text = pretty(&one_or_many(out));
    }
    emit(common, text)
}

fn pattern(family: Option<String>, theorem: Option<String>, n: usize, common: &Common) -> Run {
    let members: Vec<Pattern> = match (family, theorem) {
        (Some(f), _) => vec![flag(FamilyKind::parse(&f))?.instance(n)],
        (None, Some(t)) => flag(FamilySpec::new(flag(TheoremId::parse(&t))?, n))?.members,
        (None, None) => return Err(Failure::Usage("one of --family or --theorem is required".into())),
    };
    let built: Vec<(Pattern, Graph)> =
        members.into_iter().map(|p| p.build().map(|g| (p, g))).collect::<Result<_, _>>()?;
    let text = match common.format {
        Format::Json => pretty(&one_or_many(built.iter().map(|(p, g)| graph_json(&p.to_string(), g)).collect())),
        Format::Graph6 => built.iter().map(|(_, g)| g6(g)).collect::<Vec<_>>().join("\n"),
        Format::Table if built.len() == 1 => built[0].1.to_edge_list(),
        Format::Table | Format::Csv => {
            let sep = if common.format == Format::Csv { "," } else { "\t" };
            let mut s = ["pattern", "order", "edges", "graph6"].join(sep) + "\n";
            for (p, g) in &built {
                s.push_str(&format!("{p}{sep}{}{sep}{}{sep}{}\n", g.order(), g.edge_count(), g6(g)));
            }
            s
        }
    };
    emit(common, text)
}

fn parse_pattern(s: &str) -> Run<Graph> {
    match s.rsplit_once(':') {
        Some((fam, n)) => {
            let n: usize = n.parse().map_err(|_| Failure::Usage(format!("bad pattern size in {s:?}")))?;
            Ok(flag(FamilyKind::parse(fam))?.instance(n).build()?)
        }
        None => flag(graph6::decode(s)),
    }
}

fn detect_cmd(
    input: &GraphInput,
    pattern: Option<String>,
    theorem: Option<String>,
    n: Option<usize>,
    budget: Option<u64>,
    common: &Common,
) -> Run {
    let exec = exec_for(common)?;
    if !matches!(common.format, Format::Json | Format::Table) {
        return Err(unsupported(common.format, "detect"));
    }
    enum Target {
        One(Graph),
        Family(FamilySpec),
    }
    let target = match (pattern, theorem, n) {
        (Some(p), _, _) => Target::One(parse_pattern(&p)?),
        (None, Some(t), Some(n)) => Target::Family(flag(FamilySpec::new(flag(TheoremId::parse(&t))?, n))?),
        _ => return Err(Failure::Usage("detect needs --pattern, or --theorem with --n".into())),
    };
    let graphs = load_graphs(input)?;
    let mut out = Vec::new();
    for host in &graphs {
        let v = match &target {
            Target::One(p) => {
                let found = detect::find_induced_budget(host, p, budget)?;
                json!({ "graph6": g6(host), "found": found.is_some(), "embedding": found.map(|e| e.map) })
            }
            Target::Family(spec) => {
                let f = detect::is_hfree_with(host, spec, exec);
                json!({ "graph6": g6(host), "theorem": spec.theorem, "n": spec.n, "outcome": f })
            }
        };
        out.push(v);
    }
    let text = match common.format {
        Format::Json => pretty(&one_or_many(out)),
        _ => out
            .iter()
            .map(|v| {
                let host = v["graph6"].as_str().unwrap_or("");
                match &target {
                    Target::One(_) => format!("{host}\tfound={}\t{}", v["found"], v["embedding"]),
                    Target::Family(_) => {
                        let o = &v["outcome"];
                        if o["result"] == "free" {
                            format!("{host}\tfree")
                        } else {
                            format!("{host}\t{}\t{}", o["member"], o["embedding"]["map"])
                        }
                    }
                }
            })
            .collect::<Vec<_>>()
            .join("\n"),
    };
    emit(common, text)
}

fn extract_cmd(
    input: &GraphInput,
    theorem: Option<String>,
    prop: Option<String>,
    scope: &str,
    n: usize,
    common: &Common,
) -> Run {
    let exec = exec_for(common)?;
    if !matches!(common.format, Format::Json | Format::Table) {
        return Err(unsupported(common.format, "extract"));
    }
    let scope = flag(Scope::parse(scope))?;
    let theorem = theorem.map(|t| flag(TheoremId::parse(&t))).transpose()?;
    let prop = prop.map(|p| flag(PropertyKind::parse(&p))).transpose()?;
    let graphs = load_graphs(input)?;
    let mut out = Vec::new();
    let mut lines = Vec::new();
    for g in &graphs {
        let r = match (theorem, prop) {
            (Some(t), _) => extract::extract_for_theorem(g, t, n, exec)?,
            (None, Some(p)) => extract::extract_b1_witness_with(g, p, n, scope, exec)?,
            (None, None) => return Err(Failure::Usage("one of --theorem or --prop is required".into())),
        };
        lines.push(match &r {
            Some(w) => format!("{}\t{}\t{:?}\t{:?}", g6(g), w.member, w.embedding.map, w.method),
            None => format!("{}\tnone", g6(g)),
        });
        out.push(match r {
            Some(w) => json!({ "graph6": g6(g), "witness": w }),
            None => json!({ "graph6": g6(g), "witness": null }),
        });
    }
    let text = match common.format {
        Format::Json => pretty(&one_or_many(out)),
        _ => lines.join("\n"),
    };
    emit(common, text)
}

fn bounds_cmd(theorem: &str, n: u64, no_table: bool, with_audit: bool, common: &Common) -> Run {
    if !matches!(common.format, Format::Json | Format::Table) {
        return Err(unsupported(common.format, "bounds"));
    }
    let theorem = flag(TheoremId::parse(theorem))?;
    let mode = if no_table { RamseyMode::RecursionOnly } else { RamseyMode::KnownTable };
    let set = bounds::theorem_thresholds(theorem, n, mode)?;
    let checked = if with_audit { Some(audit::reevaluate(&set)?) } else { None };
    let text = match common.format {
        Format::Json => {
            let mut v = serde_json::to_value(&set).expect("bound set serializes");
            if let Some(rows) = &checked {
                let rows: Vec<Value> = set
                    .entries
                    .iter()
                    .zip(rows)
                    .map(|(e, (_, again))| json!({ "name": e.name, "value": again, "agrees": e.value == *again }))
                    .collect();
                v["audit"] = Value::Array(rows);
            }
            pretty(&v)
        }
        _ => {
            let mut s = format!("{theorem} n={n} ({mode:?}); free graphs have {} < threshold\n", set.count);
            for e in set.entries.iter().chain(std::iter::once(&set.threshold)) {
                s.push_str(&format!("{:<10} {:<26} {}\n", e.name, e.formula, e.value));
            }
            if let Some(rows) = &checked {
                let ok = set.entries.iter().zip(rows).all(|(e, (_, v))| e.value == *v);
                s.push_str(&format!("audit: {}\n", if ok { "all entries agree" } else { "MISMATCH" }));
            }
            s
        }
    };
    emit(common, text)
}

fn report_table(r: &SuiteReport) -> String {
    let mut s = format!("{}: {} ({} checks) {:?}\n", r.suite, r.scope, r.checks, r.verdict);
    for v in &r.violations {
        s.push_str(&format!("  violation {} {}: expected {}, got {}\n", v.graph6, v.claim, v.expected, v.actual));
    }
    for v in &r.warnings {
        s.push_str(&format!("  warning {} {}: stated {}, computed {}\n", v.graph6, v.claim, v.expected, v.actual));
    }
    for n in &r.notes {
        s.push_str(&format!("  note {n}\n"));
    }
    if let Some(rows) = &r.scan {
        s.push_str("  order\tfree\tmax\targmax\n");
        for row in rows {
            s.push_str(&format!(
                "  {}\t{}\t{}\t{}\n",
                row.order,
                row.free_graphs,
                row.max_value,
                row.argmax.as_deref().unwrap_or("-")
            ));
        }
    }
    s
}

fn verify_output(reports: &[SuiteReport], common: &Common) -> Run {
    let text = match common.format {
        Format::Json if reports.len() == 1 => reports[0].to_json(),
        Format::Json => {
            let vs: Vec<Value> = reports.iter().map(|r| serde_json::to_value(r).expect("report serializes")).collect();
            pretty(&Value::Array(vs))
        }
        Format::Table => reports.iter().map(report_table).collect(),
        Format::Csv => match reports.first().and_then(|r| r.scan_csv()) {
            Some(csv) => csv,
            None => return Err(unsupported(common.format, "this suite")),
        },
        Format::Graph6 => return Err(unsupported(common.format, "verify")),
    };
    emit(common, text)?;
    if reports.iter().all(SuiteReport::passed) {
        Ok(())
    } else {
        Err(Failure::Verdict)
    }
}
