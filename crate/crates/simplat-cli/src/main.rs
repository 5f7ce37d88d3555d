//! Command-line pipeline over the granule codecs: validate JSON envelopes,
//! convert between kinds through the monotone-tuple space, rescale
//! probabilistic linguistic values, estimate volumes, verify the simplicial
//! identities, and draw dimension-2/3 diagrams.
//!
//! Exit codes: 0 success, 1 domain error (the violated invariant is named on
//! stderr), 2 I/O or parse error.

mod plot;

use clap::{Parser, Subcommand};
use simplat::envelope::{Envelope, Object};
use simplat::granularity::embed_plts;
use simplat::zoo::{asymmetry_coefficient, Granule, GranuleKind, LinguisticScale, Plts};
use simplat::{estimate_volume, exact_volume, verify_identities, Error, MapWord};
use std::fs;
use std::io::Read;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "simplat",
    version,
    about = "Validate, convert, and inspect uncertainty granules on the monotone-tuple lattice",
    long_about = "Values travel as JSON envelopes tagged with a \"kind\" field, e.g.\n\
        {\"kind\":\"bui\",\"x\":0.7,\"c\":0.8}. Conversions pass through the\n\
        monotone-tuple space; dimension changes are spelled out with map words\n\
        such as \"s0 s2\" (whitespace-separated d<i>/s<j> tokens, applied left\n\
        to right). Dimension-3 plots use the fixed oblique projection with\n\
        columns (-0.5, -0.3), (1, 0), (0, 1)."
)]
struct Cli {
    /// Input file; stdin when omitted
    #[arg(short, long, global = true)]
    input: Option<PathBuf>,
    /// Output file; stdout when omitted
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Validation tolerance used when ingesting values
    #[arg(long, global = true, default_value_t = simplat::DEFAULT_TOLERANCE)]
    tolerance: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a JSON envelope and check its invariants
    Validate,
    /// Convert the input to another kind, optionally through a map word
    Convert {
        /// Target kind tag (also "simplex" or "weights")
        #[arg(long)]
        to: String,
        /// Map word applied between encode and decode, e.g. "s0 s2"
        #[arg(long)]
        via: Option<String>,
        /// Comma-separated labels, required when converting to plts
        #[arg(long)]
        scale: Option<String>,
    },
    /// Re-express a plts input on a finer scale with a degeneracy word
    EmbedPlts {
        /// Degeneracy-only map word, e.g. "s0 s2"
        #[arg(long)]
        word: String,
        /// Size of the target scale; labels default to s1..sm
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        target_size: Option<u64>,
        /// Explicit comma-separated target labels (overrides --target-size)
        #[arg(long)]
        target_scale: Option<String>,
    },
    /// Monte-Carlo volume of the monotone region against the exact value
    Volume {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=20))]
        dim: u64,
        #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the five face/degeneracy identities on random tuples
    Identities {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=32))]
        dim: u64,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Render the input point(s) into a fixed-frame SVG diagram
    Plot {
        /// Output SVG path
        #[arg(long)]
        out: PathBuf,
        /// Frame dimension when the input list is empty
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(2..=3))]
        dim: u64,
    },
    /// Print the skew coefficient of a dimension-3 input
    Asymmetry,
    /// Componentwise meet and join of a two-element input array
    Lattice,
}

enum Failure {
    Domain(String),
    Parse(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Parse(_) | Failure::Io(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Domain(m) | Failure::Parse(m) | Failure::Io(m) => m,
        }
    }
}

fn domain(err: Error) -> Failure {
    Failure::Domain(format!("error: {err}"))
}

struct Io {
    input: Option<PathBuf>,
    output: Option<PathBuf>,
}

impl Io {
    fn read_input(&self) -> Result<String, Failure> {
        match &self.input {
            Some(path) => fs::read_to_string(path)
                .map_err(|e| Failure::Io(format!("io error: {}: {e}", path.display()))),
            None => {
                let mut text = String::new();
                std::io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|e| Failure::Io(format!("io error: stdin: {e}")))?;
                Ok(text)
            }
        }
    }

    fn write_line(&self, line: &str) -> Result<(), Failure> {
        let mut text = line.to_string();
        text.push('\n');
        self.write_raw(&text)
    }

    fn write_raw(&self, text: &str) -> Result<(), Failure> {
        match &self.output {
            Some(path) => fs::write(path, text)
                .map_err(|e| Failure::Io(format!("io error: {}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let io = Io {
        input: cli.input,
        output: cli.output,
    };
    if let Err(failure) = run(cli.command, &io, cli.tolerance) {
        eprintln!("{}", failure.message());
        std::process::exit(failure.code());
    }
}

fn read_object(io: &Io, tolerance: f64) -> Result<Object, Failure> {
    let text = io.read_input()?;
    let envelope =
        Envelope::parse(&text).map_err(|e| Failure::Parse(format!("parse error: {e}")))?;
    envelope
        .validate(tolerance)
        .map_err(|e| Failure::Domain(format!("invalid: {e}")))
}

fn parse_labels(csv: &str) -> Result<LinguisticScale, Failure> {
    LinguisticScale::new(csv.split(',').map(|t| t.trim().to_string()).collect()).map_err(domain)
}

fn run(command: Command, io: &Io, tolerance: f64) -> Result<(), Failure> {
    match command {
        Command::Validate => {
            let obj = read_object(io, tolerance)?;
            io.write_line(&format!("valid: {}", obj.kind_str()))
        }
        Command::Convert { to, via, scale } => {
            let obj = read_object(io, tolerance)?;
            let mut s = obj.to_simplex();
            let had_via = via.is_some();
            if let Some(via) = via {
                let word = MapWord::parse(&via, s.dim()).map_err(domain)?;
                s = word.apply(&s).map_err(domain)?;
            }
            let out = match to.as_str() {
                "simplex" => Envelope::from_object(&Object::Simplex(s)),
                "weights" => Envelope::from_object(&Object::Weights(s.to_weights())),
                "plts" => {
                    let labels = scale.ok_or_else(|| {
                        Failure::Domain(
                            "error: converting to plts needs --scale label,label,...".to_string(),
                        )
                    })?;
                    let p = Plts::from_simplex(parse_labels(&labels)?, &s).map_err(domain)?;
                    Envelope::from_granule(&Granule::Plts(p))
                }
                other => {
                    let kind: GranuleKind = other.parse().map_err(domain)?;
                    match Granule::from_simplex(kind, &s, tolerance) {
                        Ok(g) => Envelope::from_granule(&g),
                        Err(Error::DimensionMismatch { expected, actual }) if !had_via => {
                            return Err(Failure::Domain(format!(
                                "error: NoPath: input encodes to dimension {actual} but {other} \
                                 needs {expected}; supply --via with a map word"
                            )))
                        }
                        Err(e) => return Err(domain(e)),
                    }
                }
            };
            io.write_line(&out.to_json())
        }
        Command::EmbedPlts {
            word,
            target_size,
            target_scale,
        } => {
            let obj = read_object(io, tolerance)?;
            let Object::Granule(Granule::Plts(p)) = obj else {
                return Err(Failure::Domain(
                    "error: embed-plts expects a plts input".to_string(),
                ));
            };
            let target = match (target_scale, target_size) {
                (Some(labels), _) => parse_labels(&labels)?,
                (None, Some(m)) => LinguisticScale::generic(m as usize).map_err(domain)?,
                (None, None) => {
                    return Err(Failure::Domain(
                        "error: embed-plts needs --target-size or --target-scale".to_string(),
                    ))
                }
            };
            let word = MapWord::parse(&word, p.scale().size()).map_err(domain)?;
            let lifted = embed_plts(&p, &target, &word).map_err(domain)?;
            io.write_line(&Envelope::from_granule(&Granule::Plts(lifted)).to_json())
        }
        Command::Volume { dim, samples, seed } => {
            let v = estimate_volume(dim as usize, samples, seed).map_err(domain)?;
            let exact = exact_volume(dim as usize).map_err(domain)?;
            io.write_raw(&format!(
                "estimate exact stderr\n{:.17e} {:.17e} {:.17e}\n",
                v.estimate,
                exact.to_f64(),
                v.stderr
            ))
        }
        Command::Identities { dim, trials, seed } => {
            let report = verify_identities(dim as usize, trials, seed).map_err(domain)?;
            let mut table = String::new();
            for f in &report.families {
                table.push_str(&format!(
                    "{}: checked {} passed {} failed {}\n",
                    f.family.label(),
                    f.checked,
                    f.passed(),
                    f.failed
                ));
            }
            io.write_raw(&table)?;
            if report.all_pass() {
                Ok(())
            } else {
                Err(Failure::Domain(
                    "error: an identity family failed".to_string(),
                ))
            }
        }
        Command::Plot { out, dim } => {
            let text = io.read_input()?;
            let envelopes: Vec<Envelope> = match serde_json::from_str::<Vec<Envelope>>(&text) {
                Ok(list) => list,
                Err(_) => vec![Envelope::parse(&text)
                    .map_err(|e| Failure::Parse(format!("parse error: {e}")))?],
            };
            let mut points = Vec::with_capacity(envelopes.len());
            for (i, env) in envelopes.iter().enumerate() {
                let obj = env
                    .validate(tolerance)
                    .map_err(|e| Failure::Domain(format!("invalid: {e}")))?;
                points.push((obj.to_simplex(), format!("p{i}:{}", obj.kind_str())));
            }
            let dim = points.first().map(|(s, _)| s.dim()).unwrap_or(dim as usize);
            let svg =
                plot::render(&points, dim).map_err(|m| Failure::Domain(format!("error: {m}")))?;
            fs::write(&out, svg)
                .map_err(|e| Failure::Io(format!("io error: {}: {e}", out.display())))?;
            io.write_line(&format!("wrote {}", out.display()))
        }
        Command::Asymmetry => {
            let obj = read_object(io, tolerance)?;
            let a = asymmetry_coefficient(&obj.to_simplex()).map_err(domain)?;
            io.write_line(&format!("{a:.17e}"))
        }
        Command::Lattice => {
            let text = io.read_input()?;
            let envelopes: Vec<Envelope> = serde_json::from_str(&text)
                .map_err(|e| Failure::Parse(format!("parse error: {e}")))?;
            if envelopes.len() != 2 {
                return Err(Failure::Domain(format!(
                    "error: lattice expects exactly two inputs, got {}",
                    envelopes.len()
                )));
            }
            let a = envelopes[0]
                .validate(tolerance)
                .map_err(|e| Failure::Domain(format!("invalid: {e}")))?
                .to_simplex();
            let b = envelopes[1]
                .validate(tolerance)
                .map_err(|e| Failure::Domain(format!("invalid: {e}")))?
                .to_simplex();
            let meet = a.meet(&b).map_err(domain)?;
            let join = a.join(&b).map_err(domain)?;
            io.write_line(&format!(
                "{{\"meet\":{},\"join\":{}}}",
                Envelope::from_object(&Object::Simplex(meet)).to_json(),
                Envelope::from_object(&Object::Simplex(join)).to_json()
            ))
        }
    }
}
