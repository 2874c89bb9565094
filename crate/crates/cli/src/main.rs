//! `pivotwidth`: linear rank-width, pivot-minors and split decompositions
//! from the command line.
//!
//! Exit status: 0 when everything checked passes, 1 when a verification
//! or certificate check fails, 2 on usage, input or configuration errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pivotwidth::codec::{self, Format};
use pivotwidth::constructions::{self, families::is_k3_s122_free};
use pivotwidth::harness::corpus::{self, Generator, Manifest};
use pivotwidth::harness::{verify_with, Campaign, CampaignConfig, VerificationReport};
use pivotwidth::minors::{self, contains_minor_with, MinorKind, MinorOptions};
use pivotwidth::pipeline::{claw_pm_free_ordering, k3_s122_ordering, DispatchEvidence};
use pivotwidth::split::{self, SplitDecomposition};
use pivotwidth::width::{self, WidthCertificate};
use pivotwidth::{Error, Exec, Graph, VertexSet};

#[derive(Parser)]
#[command(
    name = "pivotwidth",
    version,
    about = "Linear rank-width, pivot-minors and split decompositions"
)]
struct Cli {
    /// Output graph format (default graph6). Input files are read in either
    /// format; graph6 bytes never include digits or spaces.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Run on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Graph6,
    Edgelist,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Graph6 => Format::Graph6,
            FormatArg::Edgelist => Format::EdgeList,
        }
    }
}

/// A graph argument: a file, `-` for stdin, a named graph such as `C5` or
/// `S1,2,2`, or an inline graph6 string.
#[derive(Args)]
struct Input {
    graph: String,
}

#[derive(Subcommand)]
enum Command {
    /// Exact linear rank-width.
    Lrw(Input),
    /// Cut-rank of a vertex set.
    Cutrank {
        #[command(flatten)]
        input: Input,
        /// Comma-separated vertices, for example `0,2,4`.
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
    },
    /// A constructive ordering with its certificate and route evidence.
    Order {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "auto")]
        route: RouteArg,
    },
    /// Pivot on the edge `u v`.
    Pivot {
        #[command(flatten)]
        input: Input,
        u: usize,
        v: usize,
    },
    /// Local complementation at `u`.
    Localcomp {
        #[command(flatten)]
        input: Input,
        u: usize,
    },
    /// Canonical split decomposition.
    Decompose(Input),
    /// Test membership in a class.
    Recognize {
        #[arg(value_enum)]
        class: ClassArg,
        #[command(flatten)]
        input: Input,
    },
    /// Whether `pattern` is a pivot-minor (or vertex-minor) of `host`.
    PivotMinor {
        host: String,
        pattern: String,
        /// Allow local complementations as well as pivots.
        #[arg(long)]
        vertex_minor: bool,
    },
    /// Generate graphs, one per line.
    Generate {
        /// `random-dh`, `random-tree`, `gnp:<p>`, `cograph`,
        /// `k3-s122-free:<shape>`, `claw-pm-free` or a named graph.
        family: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Order of each graph (an upper bound for the class families).
        #[arg(long = "max-n", default_value_t = 10)]
        max_n: usize,
    },
    /// Run verification campaigns.
    Verify {
        /// A campaign id, or `all`.
        campaign: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[arg(long = "exhaustive-n")]
        exhaustive_n: Option<usize>,
    },
    /// Build or check a graph6 corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Write the corpus described by a manifest into `--out`.
    Build { manifest: PathBuf },
    /// Regenerate a built corpus and compare hashes.
    Check { dir: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Auto,
    K3S122,
    Claw,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Dh,
    Caterpillar,
    ClassM,
    ClawPmFree,
    Lrw1,
}

/// Failure of a check, as opposed to bad input.
#[derive(Debug)]
struct CheckFailed(String);

impl std::fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CheckFailed {}

struct Ctx {
    format: Option<Format>,
    json: bool,
    out: Option<PathBuf>,
    exec: Exec,
}

impl Ctx {
    fn read_graph(&self, arg: &str) -> anyhow::Result<Graph> {
        let text = if arg == "-" {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Some(s)
        } else if Path::new(arg).is_file() {
            Some(fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?)
        } else {
            None
        };
        let Some(text) = text else {
            if let Ok(g) = constructions::named(arg) {
                return Ok(g);
            }
            return codec::decode_graph6(arg).with_context(|| {
                format!("`{arg}` is not a file, a named graph or a graph6 string")
            });
        };
        let format = codec::detect_format(&text);
        if format == Format::Graph6 {
            let graphs = codec::decode_graph6_lines(&text)?;
            return match graphs.len() {
                1 => Ok(graphs.into_iter().next().unwrap()),
                k => bail!("expected one graph in {arg}, found {k}"),
            };
        }
        Ok(codec::decode(&text, format)?)
    }

    fn encode(&self, g: &Graph) -> String {
        let s = codec::encode(g, self.format.unwrap_or(Format::Graph6));
        if s.ends_with('\n') {
            s
        } else {
            s + "\n"
        }
    }

    fn emit(&self, text: &str) -> anyhow::Result<()> {
        match &self.out {
            Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
            None => io::stdout().write_all(text.as_bytes())?,
        }
        Ok(())
    }

    /// JSON `value` in `--json` mode, otherwise `plain`.
    fn report(&self, value: Value, plain: impl FnOnce() -> String) -> anyhow::Result<()> {
        if self.json {
            self.emit(&(serde_json::to_string_pretty(&value)? + "\n"))
        } else {
            let mut s = plain();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            self.emit(&s)
        }
    }

    fn graph_out(&self, g: &Graph) -> anyhow::Result<()> {
        let text = self.encode(g);
        self.report(
            json!({ "n": g.n(), "edges": g.edge_count(), "graph": text.trim_end() }),
            || text.clone(),
        )
    }
}

fn certificate_text(cert: &WidthCertificate) -> String {
    format!(
        "width {}\nordering {:?}\nprefix cut-ranks {:?}",
        cert.width, cert.ordering, cert.prefix_cutranks
    )
}

fn order(ctx: &Ctx, g: &Graph, route: RouteArg) -> anyhow::Result<()> {
    let (name, result): (
        &str,
        pivotwidth::Result<(WidthCertificate, DispatchEvidence)>,
    ) = match route {
        RouteArg::K3S122 => ("k3-s122", k3_s122_ordering(g)),
        RouteArg::Claw => ("claw", claw_pm_free_ordering(g)),
        RouteArg::Auto if is_k3_s122_free(g) => ("k3-s122", k3_s122_ordering(g)),
        RouteArg::Auto => match minors::claw_pm_free(g) {
            Ok(true) => ("claw", claw_pm_free_ordering(g)),
            Ok(false) => bail!("graph is neither (K3, S122)-free nor claw-pivot-minor-free"),
            Err(e) => return Err(e.into()),
        },
    };
    let (cert, evidence) = result?;
    if !cert.verify(g) || cert.width > evidence.bound {
        return Err(CheckFailed(format!(
            "certificate of width {} does not verify",
            cert.width
        ))
        .into());
    }
    ctx.report(
        json!({ "route": name, "certificate": cert, "evidence": evidence }),
        || {
            let routes: Vec<String> = evidence
                .components
                .iter()
                .map(|c| {
                    format!(
                        "{} on {} vertices (width {})",
                        serde_json::to_value(c.route).unwrap().as_str().unwrap(),
                        c.vertices.len(),
                        c.width
                    )
                })
                .collect();
            format!(
                "{}\nbound {}{}\nroutes: {}",
                certificate_text(&cert),
                evidence.bound,
                if evidence.complemented {
                    " (via the complement)"
                } else {
                    ""
                },
                routes.join(", ")
            )
        },
    )
}

fn decompose_text(d: &SplitDecomposition) -> String {
    let mut s = format!(
        "{} bags, {} marked edges\n",
        d.bags().len(),
        d.marked_edge_count()
    );
    for (i, bag) in d.bags().iter().enumerate() {
        let nodes: Vec<String> = bag
            .nodes
            .iter()
            .map(|n| match n {
                split::Node::Vertex(v) => v.to_string(),
                split::Node::Marker(m) => format!("m{m}"),
            })
            .collect();
        let kind = match bag.kind {
            split::BagKind::Prime => "prime".to_string(),
            split::BagKind::Complete => "complete".to_string(),
            split::BagKind::Star { center } => format!("star centre {}", nodes[center]),
        };
        s += &format!("bag {i}: {kind}: {}\n", nodes.join(" "));
    }
    s
}

fn recognize(g: &Graph, class: ClassArg) -> anyhow::Result<bool> {
    Ok(match class {
        ClassArg::Dh => split::is_distance_hereditary(g),
        ClassArg::Caterpillar => match constructions::is_caterpillar(g) {
            Ok(b) => b,
            Err(Error::NotATree) => false,
            Err(e) => return Err(e.into()),
        },
        ClassArg::ClassM => split::is_in_class_m(g),
        ClassArg::ClawPmFree => minors::claw_pm_free(g)?,
        ClassArg::Lrw1 => split::lrw_at_most_1(g),
    })
}

fn generate(family: &str, seed: u64, count: usize, n: usize) -> anyhow::Result<Vec<Graph>> {
    match family.parse::<Generator>() {
        Ok(gen) => Ok((0..count)
            .map(|i| gen.generate(seed.wrapping_add(i as u64), n))
            .collect()),
        Err(_) => {
            let g =
                constructions::named(family).map_err(|_| anyhow!("unknown family `{family}`"))?;
            Ok(vec![g; count])
        }
    }
}

fn report_text(r: &VerificationReport) -> String {
    let mut s = format!(
        "{} {}: {} passed, {} failed, {} capped ({} ms)\n",
        if r.ok { "PASS" } else { "FAIL" },
        r.suite.campaign,
        r.passed,
        r.failed,
        r.capped,
        r.timings.total_ms
    );
    for f in r.failures() {
        s += &format!("  {}: {}", f.id, f.detail.as_deref().unwrap_or("failed"));
        if let Some(g6) = &f.input.graph6 {
            s += &format!(" [{g6}]");
        }
        s.push('\n');
    }
    s
}

fn reports_out(ctx: &Ctx, reports: &[VerificationReport]) -> anyhow::Result<()> {
    let value = if reports.len() == 1 {
        serde_json::to_value(&reports[0])?
    } else {
        serde_json::to_value(reports)?
    };
    ctx.report(value, || reports.iter().map(report_text).collect())?;
    match reports.iter().find(|r| !r.ok) {
        Some(r) => Err(CheckFailed(format!("{} has failing cases", r.suite.campaign)).into()),
        None => Ok(()),
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let ctx = Ctx {
        format: cli.format.map(Format::from),
        json: cli.json,
        out: cli.out,
        exec: if cli.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        },
    };
    match cli.command {
        Command::Lrw(input) => {
            let g = ctx.read_graph(&input.graph)?;
            let opts = width::ExactOptions {
                exec: ctx.exec,
                ..Default::default()
            };
            let (w, cert) = width::exact_lrw_with(&g, opts)?;
            ctx.report(json!({ "lrw": w, "certificate": cert }), || w.to_string())
        }
        Command::Cutrank { input, set } => {
            let g = ctx.read_graph(&input.graph)?;
            let mut x = VertexSet::empty();
            for v in set {
                g.check_vertex(v)?;
                x.insert(v);
            }
            let r = width::cutrank(&g, &x);
            ctx.report(json!({ "set": x.to_vec(), "cutrank": r }), || r.to_string())
        }
        Command::Order { input, route } => order(&ctx, &ctx.read_graph(&input.graph)?, route),
        Command::Pivot { input, u, v } => {
            ctx.graph_out(&ctx.read_graph(&input.graph)?.pivot(u, v)?)
        }
        Command::Localcomp { input, u } => {
            ctx.graph_out(&ctx.read_graph(&input.graph)?.local_complement(u)?)
        }
        Command::Decompose(input) => {
            let g = ctx.read_graph(&input.graph)?;
            let d = split::decompose_canonical(&g)?;
            ctx.report(serde_json::to_value(&d)?, || decompose_text(&d))
        }
        Command::Recognize { class, input } => {
            let g = ctx.read_graph(&input.graph)?;
            let b = recognize(&g, class)?;
            ctx.report(
                json!({ "class": class.to_possible_value().unwrap().get_name(), "member": b }),
                || b.to_string(),
            )
        }
        Command::PivotMinor {
            host,
            pattern,
            vertex_minor,
        } => {
            let (g, h) = (ctx.read_graph(&host)?, ctx.read_graph(&pattern)?);
            let kind = if vertex_minor {
                MinorKind::Vertex
            } else {
                MinorKind::Pivot
            };
            let opts = MinorOptions {
                exec: ctx.exec,
                ..Default::default()
            };
            let w = contains_minor_with(&g, &h, kind, opts)?;
            if let Some(w) = &w {
                if !w.verify(&g, &h) {
                    return Err(CheckFailed("witness does not replay".into()).into());
                }
            }
            ctx.report(
                json!({ "contains": w.is_some(), "witness": w }),
                || match &w {
                    Some(w) => format!("true\n{}", serde_json::to_string(&w.sequence).unwrap()),
                    None => "false".into(),
                },
            )
        }
        Command::Generate {
            family,
            seed,
            count,
            max_n,
        } => {
            let graphs = generate(&family, seed, count, max_n)?;
            let lines: Vec<String> = graphs.iter().map(|g| ctx.encode(g)).collect();
            let value = json!(lines.iter().map(|l| l.trim_end()).collect::<Vec<_>>());
            ctx.report(value, || lines.concat())
        }
        Command::Verify {
            campaign,
            seed,
            count,
            max_n,
            exhaustive_n,
        } => {
            let campaigns: Vec<Campaign> = if campaign == "all" {
                Campaign::ALL.to_vec()
            } else {
                vec![campaign.parse()?]
            };
            let mut reports = Vec::new();
            for c in campaigns {
                let d = c.default_config();
                let cfg = CampaignConfig {
                    seed: seed.unwrap_or(d.seed),
                    count: count.unwrap_or(d.count),
                    max_n: max_n.unwrap_or(d.max_n),
                    exhaustive_n: exhaustive_n.unwrap_or(d.exhaustive_n),
                };
                reports.push(verify_with(c, &cfg, ctx.exec)?);
            }
            reports_out(&ctx, &reports)
        }
        Command::Corpus { action } => match action {
            CorpusAction::Build { manifest } => {
                let out = ctx
                    .out
                    .clone()
                    .ok_or_else(|| anyhow!("corpus build needs --out DIR"))?;
                let text = fs::read_to_string(&manifest)
                    .with_context(|| format!("reading {}", manifest.display()))?;
                let m: Manifest = serde_json::from_str(&text)
                    .with_context(|| format!("parsing {}", manifest.display()))?;
                let built = corpus::build(&m, &out)?;
                let files: usize = built.entries.iter().map(|e| e.files.len()).sum();
                let msg = format!(
                    "wrote {files} graphs in {} entries to {}\n",
                    built.entries.len(),
                    out.display()
                );
                if ctx.json {
                    println!("{}", serde_json::to_string_pretty(&built)?);
                } else {
                    print!("{msg}");
                }
                Ok(())
            }
            CorpusAction::Check { dir } => reports_out(&ctx, &[corpus::check(&dir)?]),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            let failed_check = e.downcast_ref::<CheckFailed>().is_some()
                || matches!(e.downcast_ref::<Error>(), Some(Error::Structure(_)));
            ExitCode::from(if failed_check { 1 } else { 2 })
        }
    }
}
