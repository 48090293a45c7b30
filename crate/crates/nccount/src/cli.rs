//! The `nccount` command line.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::affine::{self, AffGroup, AffKind, AffQuiver};
use crate::count::Count;
use crate::d4::{self, D4Group, D4Kind};
use crate::digraph::{self, Category, ValuedDigraph};
use crate::error::Error;
use crate::incidence::{self, IncCategory};
use crate::markov::{self, ExcTriple, Order};
use crate::necklace;
use crate::type_a::{self, Group};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Plain,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    Id,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum D4GroupArg {
    Id,
    Kappa,
    Serre,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AffGroupArg {
    Id,
    Serre,
    Full,
}

#[derive(Debug, Parser)]
#[command(name = "nccount", version, about = "Counting non-commutative curves")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Subcategories of D^b(A_N).
    An {
        #[command(subcommand)]
        cmd: AnCmd,
    },
    /// Rotation classes of sub-polygons.
    Necklace {
        #[command(subcommand)]
        cmd: NecklaceCmd,
    },
    /// D^b(D_4).
    D4 {
        #[command(subcommand)]
        cmd: D4Cmd,
    },
    /// The affine quivers Q1 and Q2.
    Affine {
        #[command(subcommand)]
        cmd: AffineCmd,
    },
    /// Exceptional bundles on P^2.
    Markov {
        #[command(subcommand)]
        cmd: MarkovCmd,
    },
    /// Points and genus-0 curves as an incidence structure.
    Incidence {
        #[arg(long)]
        category: String,
    },
    /// Simplices of the complex spanned by a point graph.
    Sc {
        #[arg(long)]
        category: String,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        #[arg(long, default_value_t = 2)]
        window: i64,
    },
}

#[derive(Debug, Subcommand)]
enum AnCmd {
    Count {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        vertices: usize,
        #[arg(long, value_enum, default_value_t = GroupArg::Id)]
        group: GroupArg,
        #[arg(long)]
        verify: bool,
    },
    Orbits {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        vertices: usize,
    },
    Genus {
        #[arg(long, allow_hyphen_values = true)]
        genus: i64,
        #[arg(long)]
        vertices: usize,
        #[arg(long, value_enum, default_value_t = GroupArg::Id)]
        group: GroupArg,
        #[arg(long)]
        verify: bool,
    },
    Graph {
        #[arg(long)]
        vertices: usize,
    },
}

#[derive(Debug, Subcommand)]
enum NecklaceCmd {
    Count {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Debug, Subcommand)]
enum D4Cmd {
    Table,
    Graph {
        #[arg(long)]
        curves: bool,
    },
    Enum {
        #[arg(long)]
        kind: String,
    },
}

#[derive(Debug, Subcommand)]
enum AffineCmd {
    Count {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, value_enum)]
        group: Option<AffGroupArg>,
        #[arg(long)]
        verify: bool,
    },
    Graph {
        #[arg(long)]
        quiver: String,
        #[arg(long, default_value_t = 2)]
        window: i64,
        #[arg(long)]
        curves: bool,
    },
}

#[derive(Debug, Subcommand)]
enum MarkovCmd {
    Table {
        #[arg(long, default_value_t = 200)]
        limit: u64,
    },
    Slopes {
        #[arg(long, default_value_t = 200)]
        max_rank: u64,
    },
    Tree {
        #[arg(long, default_value_t = 200)]
        max_rank: u64,
    },
    Tyurin {
        #[arg(long, default_value_t = 200)]
        max_rank: u64,
    },
}

enum Output {
    Doc { json: Value, plain: String },
    Graph(ValuedDigraph),
}

enum Failure {
    Usage(String),
    Mismatch(Output),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = std::result::Result<Output, Failure>;

fn doc(json: Value, plain: impl Into<String>) -> Output {
    Output::Doc {
        json,
        plain: plain.into(),
    }
}

fn verified(out: Output, ok: bool) -> CmdResult {
    let out = match out {
        Output::Doc { json, plain } => {
            let json = match json {
                Value::Object(mut m) => {
                    m.insert("verified".into(), Value::Bool(ok));
                    Value::Object(m)
                }
                other => json!({ "result": other, "verified": ok }),
            };
            Output::Doc {
                json,
                plain: format!("{plain}\nverified: {ok}"),
            }
        }
        g => g,
    };
    if ok {
        Ok(out)
    } else {
        Err(Failure::Mismatch(out))
    }
}

fn count_doc(c: &Count) -> Output {
    doc(json!({ "count": c.to_string() }), c.to_string())
}

/// Caps the rayon pool at `NC_COUNT_THREADS` when it is set.
pub fn init_threads() {
    if let Some(n) = std::env::var("NC_COUNT_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

/// Runs the command line, writing the document to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let (result, code) = match dispatch(cli.cmd) {
        Ok(o) => (o, 0),
        Err(Failure::Mismatch(o)) => (o, 1),
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    match render(&result, cli.format) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn render(o: &Output, format: Format) -> std::result::Result<String, String> {
    match (o, format) {
        (Output::Doc { json, .. }, Format::Json) => Ok(json.to_string()),
        (Output::Doc { plain, .. }, Format::Plain) => Ok(plain.clone()),
        (Output::Doc { .. }, Format::Dot) => Err("dot output is only available for graphs".into()),
        (Output::Graph(g), Format::Json) => Ok(g.to_json_value().to_string()),
        (Output::Graph(g), Format::Dot) => Ok(g.to_dot().trim_end().to_string()),
        (Output::Graph(g), Format::Plain) => {
            let c = g.census();
            let mut lines = vec![format!(
                "{}: {} vertices, {} one-sided, {} double-sided",
                g.category(),
                c.vertices,
                c.one_sided,
                c.double_sided
            )];
            let v = g.vertices();
            for (a, b, w) in g.arcs() {
                if g.is_double(a, b) {
                    if a < b {
                        lines.push(format!("{} <-> {}", v[a].id, v[b].id));
                    }
                } else {
                    let w = w.map(|w| format!(" ({w})")).unwrap_or_default();
                    lines.push(format!("{} -> {}{w}", v[a].id, v[b].id));
                }
            }
            Ok(lines.join("\n"))
        }
    }
}

fn dispatch(cmd: Cmd) -> CmdResult {
    match cmd {
        Cmd::An { cmd } => an(cmd),
        Cmd::Necklace {
            cmd: NecklaceCmd::Count { m, s, verify },
        } => {
            let c = Count::from(necklace::count_subgon_classes(m, s)?);
            let out = count_doc(&c);
            if verify {
                let brute = Count::from(necklace::count_subgon_classes_brute(m, s)?);
                verified(out, brute == c)
            } else {
                Ok(out)
            }
        }
        Cmd::D4 { cmd } => d4_cmd(cmd),
        Cmd::Affine { cmd } => affine_cmd(cmd),
        Cmd::Markov { cmd } => markov_cmd(cmd),
        Cmd::Incidence { category } => {
            let s = incidence::incidence_structure(category.parse::<IncCategory>()?);
            let plain = s
                .lines
                .iter()
                .map(|l| format!("{}: {}", l.id, l.points.join(" ")))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(doc(serde_json::to_value(&s).expect("serializable"), plain))
        }
        Cmd::Sc {
            category,
            max_dim,
            window,
        } => {
            let g = digraph::build_point_graph(&Category::parse(&category, window)?);
            let simplices: Vec<Vec<String>> = g
                .sc_simplices(max_dim)
                .into_iter()
                .map(|s| s.into_iter().map(|v| g.vertices()[v].id.clone()).collect())
                .collect();
            let plain = simplices
                .iter()
                .map(|s| s.join(" "))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(doc(
                json!({ "category": g.category(), "simplices": simplices }),
                plain,
            ))
        }
    }
}

fn a_group(g: GroupArg) -> Group {
    match g {
        GroupArg::Id => Group::Id,
        GroupArg::Full => Group::Full,
    }
}

fn an(cmd: AnCmd) -> CmdResult {
    match cmd {
        AnCmd::Count {
            k,
            vertices,
            group,
            verify,
        } => {
            if k == 0 || vertices == 0 {
                return Err(Failure::Usage("k and vertices must be positive".into()));
            }
            let c = match group {
                GroupArg::Id => Count::from(type_a::count_id(k as u64, vertices as u64)),
                GroupArg::Full if k > vertices => Count::from(0u64),
                GroupArg::Full => Count::from(type_a::count_orbits_formula(k, vertices)?),
            };
            let out = count_doc(&c);
            if !verify {
                return Ok(out);
            }
            let brute = if k > vertices {
                Count::from(0u64)
            } else {
                match group {
                    GroupArg::Id => Count::from(type_a::enum_seqs(vertices - 1, k).len()),
                    GroupArg::Full => Count::from(type_a::count_orbits_brute(k, vertices)?),
                }
            };
            verified(out, brute == c)
        }
        AnCmd::Orbits { k, vertices } => {
            if k == 0 || k > vertices {
                return Err(Failure::Usage("need 1 <= k <= vertices".into()));
            }
            let orbits: Vec<Vec<String>> = type_a::seq_orbits(vertices - 1, k)
                .iter()
                .map(|o| {
                    o.iter()
                        .map(|a| type_a::seq_to_subcategory(a).to_string())
                        .collect()
                })
                .collect();
            let plain = orbits
                .iter()
                .map(|o| o.join(" "))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(doc(
                json!({ "count": orbits.len().to_string(), "orbits": orbits }),
                plain,
            ))
        }
        AnCmd::Genus {
            genus,
            vertices,
            group,
            verify,
        } => {
            let c = type_a::count_genus(genus, vertices as u64, a_group(group))?;
            let out = count_doc(&c);
            if verify {
                let brute = type_a::count_genus_brute(genus, vertices, a_group(group))?;
                verified(out, brute == c)
            } else {
                Ok(out)
            }
        }
        AnCmd::Graph { vertices } => {
            if vertices == 0 {
                return Err(Failure::Usage("vertices must be positive".into()));
            }
            Ok(Output::Graph(digraph::build_point_graph(&Category::A(
                vertices,
            ))))
        }
    }
}

const D4_KINDS: [(D4Kind, &str); 5] = [
    (D4Kind::Points, "points"),
    (D4Kind::GenusMinus1, "genus-1"),
    (D4Kind::Genus0, "genus0"),
    (D4Kind::TriplesA3, "triples-A3"),
    (D4Kind::TriplesA1Cubed, "triples-A1cubed"),
];

fn d4_cmd(cmd: D4Cmd) -> CmdResult {
    match cmd {
        D4Cmd::Table => {
            let groups = [
                (D4Group::Id, "id"),
                (D4Group::Kappa, "kappa"),
                (D4Group::Serre, "serre"),
                (D4Group::Full, "full"),
            ];
            let mut rows = Vec::new();
            let mut plain = vec!["kind id kappa serre full".to_string()];
            for (kind, name) in D4_KINDS {
                let mut row = json!({ "kind": name });
                let mut line = name.to_string();
                for (g, gname) in groups {
                    let c = d4::d4_count(kind, g).to_string();
                    line.push(' ');
                    line.push_str(&c);
                    row[gname] = Value::String(c);
                }
                rows.push(row);
                plain.push(line);
            }
            Ok(doc(Value::Array(rows), plain.join("\n")))
        }
        D4Cmd::Graph { curves } => Ok(Output::Graph(if curves {
            digraph::d4_curve_graph()
        } else {
            digraph::build_point_graph(&Category::D4)
        })),
        D4Cmd::Enum { kind } => {
            let kind: D4Kind = kind.parse()?;
            let items: Vec<String> = d4::d4_enum(kind).iter().map(|g| g.to_string()).collect();
            Ok(doc(
                json!({ "count": items.len().to_string(), "items": items }),
                items.join("\n"),
            ))
        }
    }
}

const AFF_KINDS: [(AffKind, &str); 5] = [
    (AffKind::GenusMinus1, "genus-1"),
    (AffKind::Genus0, "genus0"),
    (AffKind::Genus1, "genus1"),
    (AffKind::TriplesA3, "triples-A3"),
    (AffKind::TriplesQ1, "triples-Q1"),
];

fn aff_group(g: AffGroupArg) -> AffGroup {
    match g {
        AffGroupArg::Id => AffGroup::Id,
        AffGroupArg::Serre => AffGroup::Serre,
        AffGroupArg::Full => AffGroup::Full,
    }
}

/// Count, and whether it agrees with the published value and a windowed brute force.
fn aff_checked(q: AffQuiver, kind: AffKind, group: AffGroup) -> crate::Result<(Count, bool)> {
    let c = affine::aff_count(q, kind, group)?;
    let mut ok = affine::aff_table_value(q, kind, group).as_ref() == Some(&c);
    if let (Count::Finite(v), false) = (&c, group == AffGroup::Id) {
        ok &= affine::aff_count_window(q, kind, group, 24)? == type_a::to_u64(v);
    }
    Ok((c, ok))
}

fn affine_cmd(cmd: AffineCmd) -> CmdResult {
    match cmd {
        AffineCmd::Count {
            quiver,
            kind,
            group,
            verify,
        } => {
            let q: AffQuiver = quiver.parse()?;
            let kinds: Vec<(AffKind, &str)> = match &kind {
                Some(k) => {
                    let parsed: AffKind = k.parse()?;
                    AFF_KINDS
                        .iter()
                        .copied()
                        .filter(|(x, _)| *x == parsed)
                        .collect()
                }
                None => AFF_KINDS
                    .iter()
                    .copied()
                    .filter(|(k, _)| affine::family_representatives(q, *k).is_ok())
                    .collect(),
            };
            let groups: Vec<(AffGroup, &str)> = match group {
                Some(g) => vec![(aff_group(g), "count")],
                None => vec![
                    (AffGroup::Id, "id"),
                    (AffGroup::Serre, "serre"),
                    (AffGroup::Full, "full"),
                ],
            };
            let mut all_ok = true;
            let mut rows = Vec::new();
            let mut plain = Vec::new();
            for (k, kname) in &kinds {
                let mut row = json!({ "kind": kname });
                let mut line = kname.to_string();
                for (g, gname) in &groups {
                    let (c, ok) = aff_checked(q, *k, *g)?;
                    all_ok &= ok;
                    line.push(' ');
                    line.push_str(&c.to_string());
                    row[*gname] = Value::String(c.to_string());
                }
                rows.push(row);
                plain.push(line);
            }
            let out = if kind.is_some() && group.is_some() {
                let c = rows[0]["count"].clone();
                doc(
                    json!({ "count": c }),
                    plain[0].split(' ').nth(1).unwrap_or("").to_string(),
                )
            } else {
                doc(Value::Array(rows), plain.join("\n"))
            };
            if verify {
                verified(out, all_ok)
            } else {
                Ok(out)
            }
        }
        AffineCmd::Graph {
            quiver,
            window,
            curves,
        } => {
            if window < 0 {
                return Err(Failure::Usage("window must be non-negative".into()));
            }
            let q: AffQuiver = quiver.parse()?;
            let w = -window..=window;
            Ok(Output::Graph(match (q, curves) {
                (AffQuiver::Q2, true) => digraph::q2_curve_graph(&w),
                (AffQuiver::Q1, true) => {
                    return Err(Failure::Usage("curve graphs are built for Q2 only".into()));
                }
                (AffQuiver::Q1, false) => digraph::build_point_graph(&Category::Q1(w)),
                (AffQuiver::Q2, false) => digraph::build_point_graph(&Category::Q2(w)),
            }))
        }
    }
}

fn markov_cmd(cmd: MarkovCmd) -> CmdResult {
    match cmd {
        MarkovCmd::Table { limit } => {
            let rows = markov::markov_table(limit)?;
            let plain = rows
                .iter()
                .map(|r| format!("{} {} {} {}", r.markov, r.slope, r.full, r.serre))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(doc(
                serde_json::to_value(&rows).expect("serializable"),
                plain,
            ))
        }
        MarkovCmd::Slopes { max_rank } => {
            let slopes: Vec<String> = markov::exceptional_slopes(max_rank)?
                .iter()
                .map(|(r, c)| format!("{c}/{r}"))
                .collect();
            Ok(doc(json!(slopes), slopes.join("\n")))
        }
        MarkovCmd::Tree { max_rank } => {
            let tree = markov::mutation_tree(&ExcTriple::seed(), max_rank, Order::Bfs)?;
            let items: Vec<String> = tree.iter().map(|t| t.to_string()).collect();
            Ok(doc(json!(items), items.join("\n")))
        }
        MarkovCmd::Tyurin { max_rank } => {
            let report = markov::tyurin_scan(max_rank)?;
            let plain = report
                .counts
                .iter()
                .map(|(m, c)| format!("{m} {c}"))
                .collect::<Vec<_>>()
                .join("\n");
            let ok = report.violations.is_empty();
            verified(
                doc(serde_json::to_value(&report).expect("serializable"), plain),
                ok,
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("nccount").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn an_count_example() {
        let (code, out, _) = call(&[
            "an",
            "count",
            "--k",
            "2",
            "--vertices",
            "5",
            "--group",
            "full",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"count":"4"}"#);
        let (code, out, _) = call(&[
            "an",
            "count",
            "--k",
            "3",
            "--vertices",
            "6",
            "--group",
            "full",
            "--verify",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"count":"5","verified":true}"#);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["bogus"]).0, 2);
        assert_eq!(call(&["an", "count", "--k", "x", "--vertices", "5"]).0, 2);
        assert_eq!(
            call(&[
                "an",
                "count",
                "--k",
                "2",
                "--vertices",
                "5",
                "--format",
                "dot"
            ])
            .0,
            2
        );
        assert_eq!(call(&["incidence", "--category", "e6"]).0, 2);
        assert_eq!(call(&["markov", "table", "--limit", "0"]).0, 0);
    }

    #[test]
    fn genus_accepts_negative() {
        let (code, out, _) = call(&[
            "an",
            "genus",
            "--genus",
            "-1",
            "--vertices",
            "5",
            "--verify",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"count":"30","verified":true}"#);
    }

    #[test]
    fn markov_table_rows() {
        let (code, out, _) = call(&["markov", "table", "--limit", "200"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 9);
        assert_eq!(v[8]["slope"], "75/194");
    }

    #[test]
    fn d4_table_rows() {
        let (code, out, _) = call(&["d4", "table", "--format", "plain"]);
        assert_eq!(code, 0);
        assert!(out.contains("points 12 6 4 2"));
        assert!(out.contains("triples-A1cubed 3 3 1 1"));
    }

    #[test]
    fn affine_and_graphs() {
        let (code, out, _) = call(&[
            "affine", "count", "--quiver", "q2", "--verify", "--format", "plain",
        ]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("genus0 infinite 8 1"));
        let (code, out, _) = call(&[
            "affine", "count", "--quiver", "q1", "--kind", "genus0", "--group", "serre",
        ]);
        assert_eq!((code, out.trim()), (0, r#"{"count":"3"}"#));
        let (code, out, _) = call(&[
            "affine", "graph", "--quiver", "q1", "--window", "1", "--format", "dot",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("[label=2]"));
        let (code, out, _) = call(&["d4", "graph", "--curves"]);
        assert_eq!(code, 0);
        let g = ValuedDigraph::from_json(&out).unwrap();
        assert_eq!(g.cycle_lengths(), Some(vec![3, 3, 6, 6, 6]));
    }

    #[test]
    fn incidence_and_sc() {
        let (code, out, _) = call(&["incidence", "--category", "d4"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["lines"].as_array().unwrap().len(), 15);
        let (code, out, _) = call(&["sc", "--category", "np0"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["simplices"].as_array().unwrap().len(), 6);
    }

    #[test]
    fn output_is_deterministic() {
        let a = call(&["markov", "tree", "--max-rank", "30"]);
        let b = call(&["markov", "tree", "--max-rank", "30"]);
        assert_eq!(a, b);
    }
}
