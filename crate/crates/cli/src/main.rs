use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use jspec::formats::{from_json, to_json_line as to_json, MapFile, ProjectionFile, TupleFile};
use jspec::maps::make_induced;
use jspec::scalar::parse_scalar;
use jspec::spectrum::{classify_tuple, pencil_poly};
use jspec::verify::{find_witness, run_suite, Suite, WitnessFamily};
use jspec::{Automorphism, Error, FieldContext, Matrix, Projection, ProjectionMap, TrialConfig};

#[derive(Parser)]
#[command(name = "jspec", version, about = "Exact joint spectra of projection tuples")]
struct Cli {
    /// Field parameter: scalars live in Q(i, sqrt d).
    #[arg(long, global = true, default_value_t = 2)]
    d: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the pencil polynomial det(c1 P1 + ... + ck Pk).
    Poly {
        #[arg(long)]
        tuple: PathBuf,
    },
    /// Print full, coordinate-hyperplanes or hypersurface.
    Classify {
        #[arg(long)]
        tuple: PathBuf,
    },
    /// Test whether a point lies in the joint spectrum.
    Member {
        #[arg(long)]
        tuple: PathBuf,
        /// Comma-separated scalars, e.g. "1,1/2+i,-r".
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Lattice operations on projections.
    Lattice {
        #[arg(long, value_enum)]
        op: LatticeOp,
        #[arg(long)]
        p: PathBuf,
        #[arg(long)]
        q: Option<PathBuf>,
    },
    /// Apply a map to one projection or to a tuple.
    MapApply {
        #[arg(long)]
        map: PathBuf,
        #[arg(long, conflicts_with = "tuple", required_unless_present = "tuple")]
        p: Option<PathBuf>,
        #[arg(long)]
        tuple: Option<PathBuf>,
    },
    /// Run a seeded property suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Map for map-based suites; defaults to the flip-induced map.
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        sequential: bool,
    },
    /// Search for a tuple whose spectrum a map does not preserve.
    Witness {
        #[arg(long, value_enum)]
        kind: WitnessKind,
        #[arg(long)]
        budget: u64,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Tuple length; defaults to 3 for flip-triple and n + 1 for flip-rank-one.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Map to search against; defaults to the flip-induced map.
        #[arg(long)]
        map: Option<PathBuf>,
        /// Succeed only when no witness is found.
        #[arg(long)]
        expect_none: bool,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeOp {
    Meet,
    Join,
    Rank,
    Leq,
    Orth,
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessKind {
    FlipTriple,
    FlipRankOne,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::from_name(s).map_err(|_| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

/// Input problems map to exit code 2, failed checks to exit code 1.
enum Failure {
    Input(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: jspec::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_tuple(path: &Path, ctx: FieldContext) -> Result<Vec<Projection>, Failure> {
    let text = read(path)?;
    in_file(path, from_json::<TupleFile>(&text).and_then(|f| f.to_tuple(ctx)))
}

fn load_projection(path: &Path, ctx: FieldContext) -> Result<Projection, Failure> {
    let text = read(path)?;
    in_file(path, from_json::<ProjectionFile>(&text).and_then(|f| f.to_projection(ctx)))
}

fn load_map(path: &Path, ctx: FieldContext) -> Result<ProjectionMap, Failure> {
    let text = read(path)?;
    in_file(path, from_json::<MapFile>(&text).and_then(|f| f.to_map(ctx)))
}

fn write_report(path: &Path, json: &str) -> Outcome {
    fs::write(path, format!("{json}\n"))
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_point(text: &str, ctx: FieldContext) -> Result<Vec<jspec::FieldElem>, Failure> {
    text.split(',')
        .enumerate()
        .map(|(i, s)| {
            parse_scalar(s, ctx)
                .map_err(|e| Failure::Input(format!("point coordinate {}: {e}", i + 1)))
        })
        .collect()
}

fn flip_map(ctx: FieldContext, n: usize) -> Result<ProjectionMap, Failure> {
    Ok(make_induced(Automorphism::Flip, Matrix::identity(ctx, n))?)
}

fn run(cli: Cli) -> Outcome {
    let ctx = FieldContext::new(cli.d)?;
    match cli.command {
        Command::Poly { tuple } => {
            let t = load_tuple(&tuple, ctx)?;
            println!("{}", pencil_poly(&t)?.pencil());
        }
        Command::Classify { tuple } => {
            let t = load_tuple(&tuple, ctx)?;
            println!("{}", classify_tuple(&t)?.token());
        }
        Command::Member { tuple, point } => {
            let t = load_tuple(&tuple, ctx)?;
            let x = parse_point(&point, ctx)?;
            let inside = pencil_poly(&t)?.member(&x)?;
            println!("{}", if inside { "in-spectrum" } else { "not-in-spectrum" });
        }
        Command::Lattice { op, p, q } => {
            let pp = load_projection(&p, ctx)?;
            let qq = match &q {
                Some(path) => Some(load_projection(path, ctx)?),
                None => None,
            };
            let need_q = || {
                qq.as_ref().ok_or_else(|| Failure::Input("this operation needs --q".into()))
            };
            match op {
                LatticeOp::Rank => println!("{}", pp.rank()),
                LatticeOp::Meet => {
                    println!("{}", to_json(&ProjectionFile::from_projection(&pp.meet(need_q()?)?)))
                }
                LatticeOp::Join => {
                    println!("{}", to_json(&ProjectionFile::from_projection(&pp.join(need_q()?)?)))
                }
                LatticeOp::Leq => println!("{}", pp.leq(need_q()?)?),
                LatticeOp::Orth => println!("{}", pp.orthogonal(need_q()?)?),
            }
        }
        Command::MapApply { map, p, tuple } => {
            let m = load_map(&map, ctx)?;
            if let Some(path) = p {
                let proj = load_projection(&path, ctx)?;
                println!("{}", to_json(&ProjectionFile::from_projection(&m.apply(&proj)?)));
            } else if let Some(path) = tuple {
                let t = load_tuple(&path, ctx)?;
                println!("{}", to_json(&TupleFile::from_tuple(&m.apply_tuple(&t)?)));
            }
        }
        Command::Verify { suite, n, k, trials, seed, map, report, sequential } => {
            let m = match &map {
                Some(path) => Some(load_map(path, ctx)?),
                None => None,
            };
            let mut cfg = TrialConfig::new(n, k, trials, seed).with_ctx(ctx);
            cfg.parallel = !sequential;
            let r = run_suite(suite, &cfg, m.as_ref())?;
            if let Some(path) = &report {
                write_report(path, &r.to_json())?;
            }
            println!("{r}");
            if !r.passed {
                return Err(Failure::Check);
            }
        }
        Command::Witness { kind, budget, n, k, seed, map, expect_none, report, sequential } => {
            let (family, default_k) = match kind {
                WitnessKind::FlipTriple => (WitnessFamily::MixedTriple, 3),
                WitnessKind::FlipRankOne => (WitnessFamily::RankOne, n + 1),
            };
            let m = match &map {
                Some(path) => load_map(path, ctx)?,
                None => flip_map(ctx, n)?,
            };
            let mut cfg = TrialConfig::new(n, k.unwrap_or(default_k), 1, seed).with_ctx(ctx);
            cfg.parallel = !sequential;
            let found = find_witness(&m, family, &cfg, budget)?;
            if let Some(path) = &report {
                let json = serde_json::to_string_pretty(&found).expect("witness serializes");
                write_report(path, &json)?;
            }
            match &found {
                Some(w) => {
                    println!("pencil: {}", w.pencil);
                    println!("image pencil: {}", w.image_pencil);
                    println!("spectrum {} under the map", w.relation.tag());
                    println!("{}", to_json(&w.tuple));
                    println!("witness found after {} candidates ({})", w.candidates, w.source);
                }
                None => println!("no witness within {budget} candidates"),
            }
            if found.is_some() == expect_none {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
