//! Verb implementations. Each builds one report holding both the text and
//! the JSON rendering, so the two always carry the same facts.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use qbmg::dgf::{self, Graph};
use qbmg::enumerate::{self, ClassificationResult};
use qbmg::orient::{self, star_conditions};
use qbmg::paths::{find_induced_cycle, find_induced_path};
use qbmg::sweeps::{self, Tally};
use qbmg::tree::{self, TruncationMap};
use qbmg::{biclique, decompose, recognize, Digraph, Exec, UGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{Cli, Command, EnumerateArgs, ExplainArgs};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input { path: PathBuf, source: qbmg::Error },
    #[error(transparent)]
    Library(#[from] qbmg::Error),
    #[error("{0}")]
    Usage(String),
}

type Result<T> = std::result::Result<T, CliError>;

pub struct Report {
    pub text: String,
    pub json: Value,
}

pub struct Outcome {
    pub report: Report,
    /// A property check failed (`verify` only).
    pub failed: bool,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome {
            report,
            failed: false,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Recognize { file } => recognize_cmd(&read_digraph(file)?).map(Into::into),
        Command::Analyze { file, check } => analyze(&read_graph(file)?.underlying(), check).map(Into::into),
        Command::Dominate { file } => dominate(&read_graph(file)?.underlying()).map(Into::into),
        Command::Decompose { file } => decompose_cmd(&read_digraph(file)?).map(Into::into),
        Command::Orient { file, all } => orient_cmd(&read_digraph(file)?, *all).map(Into::into),
        Command::Enumerate(args) => enumerate_cmd(args).map(Into::into),
        Command::Explain(args) => explain(args).map(Into::into),
        Command::Verify { exhaustive } => verify(*exhaustive, cli.seed),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_graph(path: &Path) -> Result<Graph> {
    dgf::parse(&read(path)?).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

fn read_digraph(path: &Path) -> Result<Digraph> {
    dgf::parse_digraph(&read(path)?).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn names(g: &Digraph, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
    vs.into_iter().map(|v| g.name(v).into_owned()).collect()
}

fn unames(g: &UGraph, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
    vs.into_iter().map(|v| g.name(v).into_owned()).collect()
}

fn recognize_cmd(g: &Digraph) -> Result<Report> {
    let r = recognize(g);
    let witness = r.witness.as_ref().map(|w| (format!("{:?}", w.axiom), names(g, w.vertices.iter().copied())));
    let sinks = names(g, r.sinks);
    let mut text = String::new();
    let _ = writeln!(text, "is_qbmg: {}", yes_no(r.is_qbmg));
    let _ = writeln!(text, "is_bmg: {}", yes_no(r.is_bmg));
    let _ = writeln!(text, "is_reciprocal: {}", yes_no(r.is_reciprocal));
    match &witness {
        Some((axiom, vs)) => {
            let _ = writeln!(text, "witness: {axiom} ({})", vs.join(", "));
        }
        None => text.push_str("witness: none\n"),
    }
    let _ = writeln!(text, "sinks: {}", if sinks.is_empty() { "none".to_string() } else { sinks.join(" ") });
    let _ = writeln!(text, "symmetric_edges: {}", r.symmetric_edge_count);
    let json = json!({
        "is_qbmg": r.is_qbmg,
        "is_bmg": r.is_bmg,
        "is_reciprocal": r.is_reciprocal,
        "witness": witness.map(|(axiom, vertices)| json!({ "axiom": axiom, "vertices": vertices })),
        "sinks": sinks,
        "symmetric_edges": r.symmetric_edge_count,
    });
    Ok(Report { text, json })
}

/// `p4` -> (path, 4); `c6` -> (cycle, 6).
fn parse_check(token: &str) -> Result<(bool, usize)> {
    let token = token.trim().to_ascii_lowercase();
    let bad = || CliError::Usage(format!("invalid check {token:?}; expected pK (3..=8) or cK (4..=8)"));
    let (kind, k) = token.split_at(token.len().min(1));
    let k: usize = k.parse().map_err(|_| bad())?;
    match kind {
        "p" if (3..=8).contains(&k) => Ok((true, k)),
        "c" if (4..=8).contains(&k) => Ok((false, k)),
        _ => Err(bad()),
    }
}

fn analyze(g: &UGraph, checks: &[String]) -> Result<Report> {
    let mut text = String::new();
    let mut rows = Vec::new();
    for token in checks {
        let (is_path, k) = parse_check(token)?;
        let witness = if is_path {
            find_induced_path(g, k).map(|p| p.vertices().to_vec())
        } else {
            find_induced_cycle(g, k).map(|c| c.vertices().to_vec())
        };
        let label = format!("{}{k}", if is_path { "P" } else { "C" });
        let witness = witness.map(|w| unames(g, w));
        match &witness {
            Some(w) => {
                let _ = writeln!(text, "{label}-free: no (witness: {})", w.join(" "));
            }
            None => {
                let _ = writeln!(text, "{label}-free: yes");
            }
        }
        rows.push(json!({ "check": label, "free": witness.is_none(), "witness": witness }));
    }
    Ok(Report {
        text,
        json: json!({ "checks": rows }),
    })
}

fn dominate(g: &UGraph) -> Result<Report> {
    let b = biclique::find_dominating_biclique(g)?;
    let (text, json) = match b {
        Some(b) => {
            let left = unames(g, b.left);
            let right = unames(g, b.right);
            (
                format!("left: {}\nright: {}\n", left.join(" "), right.join(" ")),
                json!({ "biclique": { "left": left, "right": right } }),
            )
        }
        None => ("none\n".to_string(), json!({ "biclique": null })),
    };
    Ok(Report { text, json })
}

fn decompose_cmd(g: &Digraph) -> Result<Report> {
    let d = decompose::decompose_type_a(g)?;
    let mut text = String::new();
    let mut parts = Vec::new();
    for &p in &d.parts {
        let (sub, _) = g.induced(p);
        let type_a = decompose::is_type_a(&sub);
        let vs = names(g, p);
        let _ = writeln!(text, "{}  type-A: {}", vs.join(" "), yes_no(type_a));
        parts.push(json!({ "vertices": vs, "type_a": type_a }));
    }
    Ok(Report {
        text,
        json: json!({ "parts": parts }),
    })
}

fn orient_cmd(g: &Digraph, all: bool) -> Result<Report> {
    let stars = star_conditions(g);
    let pairs: Vec<[String; 2]> = stars
        .symmetric_pairs
        .iter()
        .map(|&(u, v)| [g.name(u).into_owned(), g.name(v).into_owned()])
        .collect();
    let mut text = String::new();
    let _ = writeln!(text, "star: {}", yes_no(stars.star));
    let _ = writeln!(text, "starstar: {}", yes_no(stars.starstar));
    let _ = writeln!(text, "symmetric_pairs: {}", pairs.len());
    let mut json = json!({
        "star": stars.star,
        "starstar": stars.starstar,
        "symmetric_pairs": pairs,
    });
    if all {
        let k = pairs.len();
        if k >= 32 {
            return Err(CliError::Usage(format!("{k} symmetric pairs are too many to sweep")));
        }
        let first_cyclic = (0..1u64 << k)
            .find(|&choice| matches!(orient::topological_order(&orient::orient_with(g, choice)), Ok(None)));
        let _ = writeln!(text, "orientations: {}", 1u64 << k);
        let _ = writeln!(text, "all_acyclic: {}", yes_no(first_cyclic.is_none()));
        if let Some(c) = first_cyclic {
            let _ = writeln!(text, "first_cyclic_choice: {c}");
        }
        json["orientations"] = json!(1u64 << k);
        json["all_acyclic"] = json!(first_cyclic.is_none());
        json["first_cyclic_choice"] = json!(first_cyclic);
    } else {
        let o = orient::orient(g);
        let order = orient::topological_order(&o)?;
        let order = order.map(|ord| names(&o, ord));
        text.push_str(&dgf::write_digraph(&o));
        match &order {
            Some(ord) => {
                let _ = writeln!(text, "order: {}", ord.join(" "));
            }
            None => text.push_str("order: cyclic\n"),
        }
        json["orientation"] = json!(dgf::write_digraph(&o));
        json["topological_order"] = json!(order);
    }
    Ok(Report { text, json })
}

fn parse_template(spec: &str) -> Result<UGraph> {
    let bad = || CliError::Usage(format!("invalid template {spec:?}; expected path:K or cycle:K"));
    let (kind, k) = spec.split_once(':').ok_or_else(bad)?;
    let k: usize = k.parse().map_err(|_| bad())?;
    match kind {
        "path" if (1..=10).contains(&k) => Ok(qbmg::fixtures::path(k)),
        "cycle" if (4..=10).contains(&k) && k.is_multiple_of(2) => Ok(qbmg::fixtures::cycle(k)),
        _ => Err(bad()),
    }
}

fn classification_report(label: &str, result: &ClassificationResult) -> Report {
    let mut text = format!("{label}\nclasses: {}\nfiltered: {}\n", result.classes.len(), result.total_filtered);
    let mut reps = Vec::new();
    for c in &result.classes {
        let block = dgf::write_digraph(&c.witness);
        text.push('\n');
        text.push_str(&block);
        reps.push(json!({ "members": c.members, "dgf": block }));
    }
    Report {
        text,
        json: json!({
            "source": label,
            "classes": result.classes.len(),
            "filtered": result.total_filtered,
            "representatives": reps,
        }),
    }
}

fn enumerate_cmd(args: &EnumerateArgs) -> Result<Report> {
    let exec = Exec::default();
    match (&args.underlying, args.all) {
        (Some(spec), _) => {
            let template = parse_template(spec)?;
            let result = enumerate::classify_template(exec, &template)?;
            Ok(classification_report(&format!("template: {spec}"), &result))
        }
        (None, Some(n)) => {
            let space = enumerate::all_bipartite_digraphs(n)?;
            let result = enumerate::classify_indexed(exec, space.len(), |i| space.get(i), None)?;
            Ok(classification_report(&format!("all: {n}"), &result))
        }
        (None, None) => Err(CliError::Usage("pass --underlying or --all".into())),
    }
}

fn explain(args: &ExplainArgs) -> Result<Report> {
    if let Some(path) = &args.source.tree {
        let text = read(path)?;
        let (t, sigma) = tree::parse_tree(&text).map_err(|source| CliError::Input {
            path: path.clone(),
            source,
        })?;
        let u = match &args.trunc {
            Some(tp) => tree::parse_truncation(&read(tp)?, &t, &sigma).map_err(|source| CliError::Input {
                path: tp.clone(),
                source,
            })?,
            None => TruncationMap::root(&t, &sigma),
        };
        let g = tree::qbmg_from_tree(&t, &sigma, &u)?;
        let block = dgf::write_digraph(&g);
        return Ok(Report {
            json: json!({ "dgf": block }),
            text: block,
        });
    }
    let path = args.source.search.as_ref().expect("clap requires one source");
    let g = read_digraph(path)?;
    let found = tree::search_explanation(&g, args.max_leaves)?;
    Ok(match found {
        Some(e) => {
            let newick = e.tree.to_newick(&e.coloring);
            let trunc = tree::write_truncation(&e.tree, &e.coloring, &e.truncation);
            Report {
                text: format!("tree: {newick}\ntruncation:\n{trunc}"),
                json: json!({ "tree": newick, "truncation": trunc }),
            }
        }
        None => Report {
            text: "none\n".into(),
            json: json!({ "tree": null, "truncation": null }),
        },
    })
}

fn tally_line(t: &Tally) -> String {
    match t.first_failure {
        None => format!("{} checked", t.checked),
        Some((n, i)) => format!("{} checked, {} failed, first at n={n} index={i}", t.checked, t.failed),
    }
}

fn verify(exhaustive: bool, seed: u64) -> Result<Outcome> {
    let exec = Exec::default();
    let mut rows: Vec<(String, bool, String)> = enumerate::verify_paper_counts(exec)?
        .checks
        .into_iter()
        .map(|c| (c.name, c.passed, c.detail))
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = 200;
    let mut ok = 0;
    for _ in 0..trials {
        let n = rng.gen_range(2..=10);
        let t = tree::random_tree(&mut rng, (1..=n).map(|i| format!("x{i}")).collect());
        let sigma = tree::random_coloring(&mut rng, n);
        let u = tree::random_truncation(&mut rng, &t, &sigma);
        ok += tree::qbmg_from_tree(&t, &sigma, &u).is_ok_and(|g| recognize(&g).is_qbmg) as usize;
    }
    rows.push((
        "random tree constructions are 2-qBMGs".into(),
        ok == trials,
        format!("{ok} of {trials}, seed {seed}"),
    ));

    if exhaustive {
        let s = sweeps::theorem_sweep(exec, 6, 5)?;
        for (name, t) in [
            ("P6-free underlying graphs", s.p6_free),
            ("C6-free underlying graphs", s.c6_free),
            ("hereditarity (n <= 5)", s.hereditary),
            ("sink-free 2-qBMGs are cographs", s.cograph),
            ("type-(A) decomposition", s.decomposition),
            ("acyclic orientations under (*) or (**)", s.orientation_acyclic),
            ("oriented biclique sub-digraphs", s.biclique_subdigraph),
            ("oriented dominating bicliques are bitransitive bitournaments", s.dominating_bitournament),
        ] {
            rows.push((name.into(), t.passed(), tally_line(&t)));
        }
    }

    let mut text = String::new();
    let mut checks = Vec::new();
    for (name, passed, detail) in &rows {
        let _ = writeln!(text, "{} {name}: {detail}", if *passed { "PASS" } else { "FAIL" });
        checks.push(json!({ "name": name, "passed": passed, "detail": detail }));
    }
    let failed = rows.iter().any(|r| !r.1);
    Ok(Outcome {
        report: Report {
            text,
            json: json!({ "passed": !failed, "checks": checks }),
        },
        failed,
    })
}
