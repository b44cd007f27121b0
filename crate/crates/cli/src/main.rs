use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use quadric_gkm::cohomology::{is_class, product_formula, Cochain, VertexSet};
use quadric_gkm::graph::validate;
use quadric_gkm::lattice::hilbert_table;
use quadric_gkm::ordinary::ordinary_report;
use quadric_gkm::reduction::Reducer;
use quadric_gkm::suite::verify_all;
use quadric_gkm::{Exec, QuadricGraph};

const VERIFY_FAILED: u8 = 1;
const USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "qgkm", version, about = "GKM graph cohomology of the complex quadric Q_2n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Run everything on the calling thread
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build and validate the graph, then print it
    Graph {
        #[arg(long, value_parser = parse_n)]
        n: usize,
        #[command(flatten)]
        io: Io,
    },
    /// Run the relation, product-formula and reduction suites
    Verify {
        #[arg(long, value_parser = parse_n, required_unless_present = "graph")]
        n: Option<usize>,
        /// Load the graph from a JSON file instead of building it
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        io: Io,
    },
    /// Canonical decomposition of a cochain given as {"vertex": "poly", ...}
    Reduce {
        #[arg(long, value_parser = parse_n)]
        n: usize,
        cochain: PathBuf,
        #[command(flatten)]
        io: Io,
    },
    /// Oracle ranks of the class lattices against the predicted ranks
    Hilbert {
        #[arg(long, value_parser = parse_n)]
        n: usize,
        #[arg(long = "max-d")]
        max_d: Option<u32>,
        #[command(flatten)]
        io: Io,
    },
    /// Betti numbers, presentation relations and parity modulo the ideal
    Ordinary {
        #[arg(long, value_parser = parse_n)]
        n: usize,
        #[command(flatten)]
        io: Io,
    },
    /// Check the product formula for Delta_K * Delta_H
    Product {
        #[arg(long, value_parser = parse_n)]
        n: usize,
        #[arg(long = "K", value_parser = parse_set)]
        k: VertexSet,
        #[arg(long = "H", value_parser = parse_set)]
        h: VertexSet,
        #[command(flatten)]
        io: Io,
    },
}

#[derive(Args, Debug)]
struct Io {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Dot,
    Text,
    Csv,
}

fn parse_n(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|e| format!("{}", e))?;
    if !(1..=31).contains(&n) {
        return Err("n must be between 1 and 31".into());
    }
    Ok(n)
}

fn parse_set(s: &str) -> Result<VertexSet, String> {
    s.parse::<VertexSet>().map_err(|e| e.to_string())
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command()
        .error(clap::error::ErrorKind::InvalidValue, msg)
        .exit()
}

fn only(format: Format, allowed: &[Format]) {
    if !allowed.contains(&format) {
        usage_error(format!(
            "format {:?} is not available here (use one of {:?})",
            format, allowed
        ));
    }
}

struct Output {
    text: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    let io = match &cli.command {
        Command::Graph { io, .. }
        | Command::Verify { io, .. }
        | Command::Reduce { io, .. }
        | Command::Hilbert { io, .. }
        | Command::Ordinary { io, .. }
        | Command::Product { io, .. } => io,
    };
    let result = run(&cli.command, exec);
    match result {
        Ok(out) => {
            let written = match &io.out {
                Some(path) => std::fs::write(path, &out.text)
                    .with_context(|| format!("writing {}", path.display())),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {:#}", e);
                return ExitCode::from(USAGE);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(VERIFY_FAILED)
            }
        }
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(USAGE)
        }
    }
}

fn json(v: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn run(cmd: &Command, exec: Exec) -> Result<Output> {
    match cmd {
        Command::Graph { n, io } => cmd_graph(*n, io.format),
        Command::Verify { n, graph, seed, io } => cmd_verify(*n, graph.as_ref(), *seed, io.format, exec),
        Command::Reduce { n, cochain, io } => cmd_reduce(*n, cochain, io.format),
        Command::Hilbert { n, max_d, io } => {
            cmd_hilbert(*n, max_d.unwrap_or(2 * *n as u32 + 2), io.format, exec)
        }
        Command::Ordinary { n, io } => cmd_ordinary(*n, io.format, exec),
        Command::Product { n, k, h, io } => cmd_product(*n, k, h, io.format),
    }
}

fn cmd_graph(n: usize, format: Format) -> Result<Output> {
    only(format, &[Format::Json, Format::Dot, Format::Text]);
    let g = QuadricGraph::build(n)?;
    let report = validate(&g);
    let mut text = match format {
        Format::Json => json(&g.to_json())?,
        Format::Dot => g.to_dot(),
        _ => {
            let mut s = String::new();
            writeln!(s, "Q_{}: {} vertices, {} edges", 2 * n, g.num_vertices(), g.num_edges())?;
            for v in g.vertices() {
                writeln!(s, "f({}) = {}", v, g.f(v))?;
            }
            for (i, j) in g.edges() {
                writeln!(s, "alpha({},{}) = {}", i, j, g.alpha(i, j))?;
            }
            s
        }
    };
    let ok = report.all_passed();
    if !ok {
        for c in report.failures() {
            eprintln!("FAIL {}: {}", c.name, c.witness.clone().unwrap_or_default());
        }
        text.clear();
    }
    Ok(Output { text, ok })
}

fn cmd_verify(n: Option<usize>, graph: Option<&PathBuf>, seed: u64, format: Format, exec: Exec) -> Result<Output> {
    only(format, &[Format::Json, Format::Text]);
    let g = match graph {
        Some(path) => {
            let s = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let g = QuadricGraph::from_json_str(&s).with_context(|| format!("parsing {}", path.display()))?;
            if let Some(n) = n {
                if n != g.n() {
                    return Err(anyhow!("--n {} does not match the graph file (n = {})", n, g.n()));
                }
            }
            g
        }
        None => QuadricGraph::build(n.expect("clap requires --n without --graph"))?,
    };
    let report = verify_all(&g, seed, exec);
    let ok = report.all_passed();
    let text = if format == Format::Json {
        json(&report)?
    } else {
        let mut s = String::new();
        for r in &report.suites {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            writeln!(s, "{} {} ({} cases)", status, r.name, r.cases)?;
            if let Some(w) = &r.witness {
                writeln!(s, "  witness: {}", w)?;
            }
        }
        writeln!(s, "{}", if ok { "all suites pass" } else { "verification failed" })?;
        s
    };
    Ok(Output { text, ok })
}

fn cmd_reduce(n: usize, path: &PathBuf, format: Format) -> Result<Output> {
    only(format, &[Format::Json, Format::Text]);
    let g = QuadricGraph::build(n)?;
    let s = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let h = Cochain::from_json_str(&g, &s).with_context(|| format!("parsing {}", path.display()))?;
    if let Err(v) = is_class(&g, &h) {
        eprintln!("not a class: {}", v);
        return Ok(Output {
            text: String::new(),
            ok: false,
        });
    }
    let cf = Reducer::new(&g).reduce(&h)?;
    let text = if format == Format::Json {
        json(&cf.to_json())?
    } else {
        format!("{}\n", cf)
    };
    Ok(Output { text, ok: true })
}

fn cmd_hilbert(n: usize, max_d: u32, format: Format, exec: Exec) -> Result<Output> {
    only(format, &[Format::Json, Format::Text, Format::Csv]);
    let g = QuadricGraph::build(n)?;
    let rows = hilbert_table(&g, max_d, exec)?;
    let ok = rows.iter().all(|r| r.matches());
    let text = match format {
        Format::Json => json(&rows)?,
        Format::Csv => {
            let mut s = String::from("d,degree,rank,expected,torsion\n");
            for r in &rows {
                writeln!(s, "{},{},{},{},{}", r.d, r.degree, r.rank, r.expected, r.torsion.join(" "))?;
            }
            s
        }
        _ => {
            let mut s = format!("{:>3} {:>6} {:>8} {:>8}  torsion\n", "d", "degree", "rank", "expected");
            for r in &rows {
                let t = if r.torsion.is_empty() {
                    "none".to_string()
                } else {
                    r.torsion.join(" ")
                };
                writeln!(s, "{:>3} {:>6} {:>8} {:>8}  {}", r.d, r.degree, r.rank, r.expected, t)?;
            }
            let ranks: Vec<String> = rows.iter().map(|r| r.rank.to_string()).collect();
            writeln!(s, "ranks: {}", ranks.join(","))?;
            writeln!(s, "{}", if ok { "all ranks match" } else { "rank mismatch" })?;
            s
        }
    };
    Ok(Output { text, ok })
}

fn cmd_ordinary(n: usize, format: Format, exec: Exec) -> Result<Output> {
    only(format, &[Format::Json, Format::Text]);
    let g = QuadricGraph::build(n)?;
    let r = ordinary_report(&g, exec)?;
    let ok = r.all_pass();
    let text = if format == Format::Json {
        json(&r)?
    } else {
        let mut s = String::new();
        let betti: Vec<String> = r.betti.betti.iter().map(|b| b.to_string()).collect();
        writeln!(s, "Betti: ({})", betti.join(","))?;
        writeln!(s, "torsion-free: {}", r.betti.torsion_free)?;
        for c in r.presentation.iter() {
            writeln!(s, "{} {}", if c.holds { "PASS" } else { "FAIL" }, c.name)?;
        }
        let [k, alt] = quadric_gkm::ordinary::presentation_sets(n);
        writeln!(s, "x = Delta_{} (repeated with Delta_{}: {})", k, alt, r.presentation_alternative.iter().all(|c| c.holds))?;
        writeln!(
            s,
            "parity ({}): {} over {} sets",
            r.parity.rule,
            if r.parity.all_hold { "holds" } else { "fails" },
            r.parity.sets_checked
        )?;
        writeln!(s, "parity verdict: {}", r.verdict)?;
        let rewrites_ok = r.rewrites.iter().all(|c| c.holds);
        writeln!(s, "Delta rewrites mod J: {} ({} sets)", rewrites_ok, r.rewrites.len())?;
        writeln!(s, "M_v = M_1 mod J: {}", r.m_classes_collapse)?;
        s
    };
    Ok(Output { text, ok })
}

fn cmd_product(n: usize, k: &VertexSet, h: &VertexSet, format: Format) -> Result<Output> {
    only(format, &[Format::Json, Format::Text]);
    let g = QuadricGraph::build(n)?;
    let p = match product_formula(&g, k, h) {
        Ok(p) => p,
        Err(e) => usage_error(e),
    };
    let ok = p.check.equal;
    let text = if format == Format::Json {
        json(&serde_json::json!({
            "K": k,
            "H": h,
            "intersection": p.intersection,
            "factor": p.factor_text,
            "lhs": p.check.lhs.to_json(),
            "rhs": p.check.rhs.to_json(),
            "equal": ok,
        }))?
    } else {
        let mut s = String::new();
        writeln!(s, "Delta_{} * Delta_{} = Delta_{} * ({})", k, h, p.intersection, p.factor_text)?;
        writeln!(s, "lhs: {}", p.check.lhs)?;
        writeln!(s, "rhs: {}", p.check.rhs)?;
        writeln!(s, "equal: {}", ok)?;
        s
    };
    Ok(Output { text, ok })
}
