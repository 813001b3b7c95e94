use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use grape::diagram::{bottleneck_distance, bottleneck_oracle, natural_pseudodistance_oracle, GapChoice};
use grape::features::{BuiltinFeature, EnumLimits, Feature};
use grape::graph::{Filtration, GraphKind, WeightedGraph};
use grape::hubs::{persistent_hubs, search_unbalanced, track_hubs, SearchOptions, DEFAULT_TOP};
use grape::io::{
    export_diagram, load_edge_table, read_diagram, render_svg, CsvOptions, HeaderMode, SvgOptions, Transform,
};
use grape::persistence::{compute_diagram, BruteForce, Mode};
use grape::{Error, Result};

#[derive(Parser)]
#[command(name = "grape", version, about = "Persistence diagrams of graph features")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// Edge-list CSV: source, target, weight column(s).
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    load: LoadOpts,
}

#[derive(Args, Clone)]
struct LoadOpts {
    /// Read arcs instead of edges (implied by digraph features).
    #[arg(long)]
    directed: bool,
    /// identity, inverse, negshift or product.
    #[arg(long, default_value = "identity")]
    transform: String,
    /// Weight columns multiplied by `--transform product`, by name or index.
    #[arg(long, value_delimiter = ',', num_args = 2)]
    columns: Option<Vec<String>>,
    #[arg(long, default_value = ",")]
    delimiter: char,
    /// Treat the first row as a header.
    #[arg(long, conflicts_with = "no_header")]
    header: bool,
    #[arg(long)]
    no_header: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a persistence diagram and write it as JSON.
    Diagram {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        feature: String,
        #[arg(long, value_parser = parse_mode)]
        mode: Mode,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// List persistent hubs above a diagonal gap.
    Hubs {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = ["hub", "whub", "dhub"])]
        feature: String,
        #[arg(long, value_parser = parse_mode)]
        mode: Mode,
        /// 1-based gap rank, or `floor` for the gap next to the diagonal.
        #[arg(long, default_value = "1", value_parser = parse_gap)]
        gap: GapChoice,
        #[arg(long)]
        top: Option<usize>,
    },
    /// Bottleneck distance between two diagram documents.
    Bottleneck { first: PathBuf, second: PathBuf },
    /// Ranked hubs per snapshot of a time-ordered list of edge lists.
    Track {
        #[arg(long, num_args = 1.., required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long, value_parser = ["hub", "whub", "dhub"])]
        feature: String,
        #[arg(long, value_parser = parse_mode)]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_TOP)]
        top: usize,
        #[arg(long)]
        directed: bool,
        #[arg(long, default_value = "inverse")]
        transform: String,
    },
    /// Definition-level checks.
    #[command(subcommand)]
    Oracle(Oracle),
}

#[derive(Subcommand)]
enum Oracle {
    /// Steady count at (u, v) by brute force and from the diagram.
    Sigma(CountArgs),
    /// Ranging count at (u, v) by brute force and from the diagram.
    Rho(CountArgs),
    /// Bottleneck distance by exhaustive matching (at most 6 points per diagram).
    Bottleneck { first: PathBuf, second: PathBuf },
    /// Natural pseudodistance by enumerating isomorphisms (at most 8 vertices).
    Pseudodistance {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        directed: bool,
    },
    /// Random search for a violation of the balanced inequality.
    Unbalanced {
        #[arg(long)]
        feature: String,
        #[arg(long, value_parser = parse_mode)]
        mode: Mode,
        #[arg(long, default_value_t = 7)]
        max_vertices: usize,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long)]
    feature: String,
    #[arg(long, allow_negative_numbers = true)]
    u: f64,
    #[arg(long, allow_negative_numbers = true)]
    v: f64,
}

fn parse_mode(s: &str) -> std::result::Result<Mode, String> {
    Mode::from_name(s).ok_or_else(|| format!("expected steady or ranging, got `{s}`"))
}

fn parse_gap(s: &str) -> std::result::Result<GapChoice, String> {
    if s == "floor" {
        return Ok(GapChoice::Floor);
    }
    match s.parse::<usize>() {
        Ok(k) if k > 0 => Ok(GapChoice::Rank(k)),
        _ => Err(format!("expected a positive integer or `floor`, got `{s}`")),
    }
}

fn fmt_level(x: f64) -> String {
    if x == f64::INFINITY {
        "inf".to_owned()
    } else {
        x.to_string()
    }
}

fn transform(name: &str, columns: &Option<Vec<String>>) -> Result<Transform> {
    match (name.parse::<Transform>()?, columns) {
        (Transform::Product(..), Some(c)) => Ok(Transform::Product(c[0].clone(), c[1].clone())),
        (t, _) => Ok(t),
    }
}

fn load(path: &Path, opts: &LoadOpts, kind: GraphKind) -> Result<WeightedGraph> {
    if !opts.delimiter.is_ascii() {
        return Err(Error::InvalidQuery(format!(
            "delimiter `{}` is not ASCII",
            opts.delimiter
        )));
    }
    let csv = CsvOptions {
        delimiter: opts.delimiter as u8,
        header: match (opts.header, opts.no_header) {
            (true, _) => HeaderMode::Present,
            (_, true) => HeaderMode::Absent,
            _ => HeaderMode::Auto,
        },
        directed: kind == GraphKind::Directed,
    };
    load_edge_table(path, &csv)?.build(kind, &transform(&opts.transform, &opts.columns)?)
}

fn load_for(input: &Input, feature: &BuiltinFeature) -> Result<WeightedGraph> {
    let kind = if input.load.directed || feature.graph_kind() == GraphKind::Directed {
        GraphKind::Directed
    } else {
        GraphKind::Undirected
    };
    load(&input.input, &input.load, kind)
}

fn run(cli: Cli) -> Result<()> {
    let limits = EnumLimits::from_env();
    match cli.command {
        Command::Diagram {
            input,
            feature,
            mode,
            out,
            svg,
        } => {
            let feature = BuiltinFeature::from_name(&feature)?;
            let g = load_for(&input, &feature)?;
            let mut d = compute_diagram(&feature, &g, mode, limits)?;
            d.meta.source = input.input.display().to_string();
            std::fs::write(&out, export_diagram(&d, &g).to_json())?;
            if let Some(svg) = svg {
                std::fs::write(svg, render_svg(&d, &SvgOptions::default()))?;
            }
            println!(
                "{} cornerpoints ({} with multiplicity)",
                d.cornerpoints().len(),
                d.total_multiplicity()
            );
        }
        Command::Hubs {
            input,
            feature,
            mode,
            gap,
            top,
        } => {
            let feature = BuiltinFeature::from_name(&feature)?;
            let g = load_for(&input, &feature)?;
            let r = persistent_hubs(&g, &feature, mode, gap, limits)?;
            println!(
                "# feature={} mode={} gap={}/{} threshold={}",
                r.feature,
                r.mode,
                r.gap_index,
                r.gap_count,
                fmt_level(r.threshold)
            );
            println!("label\tbirth\tdeath\tpersistence");
            for e in r.entries.iter().take(top.unwrap_or(usize::MAX)) {
                println!(
                    "{}\t{}\t{}\t{}",
                    e.label,
                    e.birth,
                    fmt_level(e.death),
                    fmt_level(e.persistence)
                );
            }
        }
        Command::Bottleneck { first, second } => {
            let a = read_diagram(first, None)?;
            let b = read_diagram(second, None)?;
            println!("{}", fmt_level(bottleneck_distance(&a, &b)));
        }
        Command::Track {
            inputs,
            feature,
            mode,
            top,
            directed,
            transform,
        } => {
            let feature = BuiltinFeature::from_name(&feature)?;
            let opts = LoadOpts {
                directed,
                transform,
                columns: None,
                delimiter: ',',
                header: false,
                no_header: false,
            };
            let kind = if directed || feature.graph_kind() == GraphKind::Directed {
                GraphKind::Directed
            } else {
                GraphKind::Undirected
            };
            let snapshots = inputs
                .iter()
                .map(|p| Ok((p.display().to_string(), load(p, &opts, kind)?)))
                .collect::<Result<Vec<_>>>()?;
            let t = track_hubs(&snapshots, &feature, mode, top, limits)?;
            println!("snapshot\trank\tlabel\tpersistence");
            for col in &t.columns {
                for (rank, (label, p)) in col.hubs.iter().enumerate() {
                    println!("{}\t{}\t{}\t{}", col.label, rank + 1, label, fmt_level(*p));
                }
            }
        }
        Command::Oracle(o) => run_oracle(o, limits)?,
    }
    Ok(())
}

fn run_oracle(o: Oracle, limits: EnumLimits) -> Result<()> {
    match o {
        Oracle::Sigma(args) | Oracle::Rho(args) if args.u >= args.v => {
            return Err(Error::InvalidQuery(format!("need u < v, got ({}, {})", args.u, args.v)));
        }
        Oracle::Sigma(args) => count(args, Mode::Steady, limits)?,
        Oracle::Rho(args) => count(args, Mode::Ranging, limits)?,
        Oracle::Bottleneck { first, second } => {
            let a = read_diagram(first, None)?;
            let b = read_diagram(second, None)?;
            println!("{}", fmt_level(bottleneck_oracle(&a, &b)?));
        }
        Oracle::Pseudodistance {
            first,
            second,
            directed,
        } => {
            let kind = if directed {
                GraphKind::Directed
            } else {
                GraphKind::Undirected
            };
            let opts = LoadOpts {
                directed,
                transform: "identity".into(),
                columns: None,
                delimiter: ',',
                header: false,
                no_header: false,
            };
            let a = load(&first, &opts, kind)?;
            let b = load(&second, &opts, kind)?;
            println!("{}", fmt_level(natural_pseudodistance_oracle(&a, &b)?));
        }
        Oracle::Unbalanced {
            feature,
            mode,
            max_vertices,
            trials,
            seed,
        } => {
            let feature = BuiltinFeature::from_name(&feature)?;
            let opts = SearchOptions {
                max_vertices,
                trials,
                seed,
                limits,
            };
            match search_unbalanced(&feature, mode, opts)? {
                None => println!("no counterexample in {trials} trials"),
                Some(c) => {
                    let p = if mode == Mode::Steady { "sigma" } else { "rho" };
                    println!("trial {} h={}", c.trial, c.h);
                    println!(
                        "{p}_f({}, {}) = {} > {} = {p}_g({}, {})",
                        c.u - c.h,
                        c.v + c.h,
                        c.p_f,
                        c.p_g,
                        c.u,
                        c.v
                    );
                    println!("edge\tf\tg");
                    for (a, b) in c.f.edges().iter().zip(c.g.edges()) {
                        println!("{}\t{}\t{}", c.f.edge_label(a.id), a.weight, b.weight);
                    }
                }
            }
        }
    }
    Ok(())
}

fn count(args: CountArgs, mode: Mode, limits: EnumLimits) -> Result<()> {
    let feature = BuiltinFeature::from_name(&args.feature)?;
    let g = load_for(&args.input, &feature)?;
    let filt = Filtration::new(&g);
    let mut bf = BruteForce::new(&feature, &filt, limits)?;
    let brute = match mode {
        Mode::Steady => bf.sigma(args.u, args.v)?,
        Mode::Ranging => bf.rho(args.u, args.v)?,
    };
    let from_diagram = compute_diagram(&feature, &g, mode, limits)?.count_at(args.u, args.v)?;
    println!("brute-force {brute}");
    println!("diagram {from_diagram}");
    if brute != from_diagram {
        return Err(Error::InvalidQuery(format!(
            "{} disagrees with its diagram",
            feature.name()
        )));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
