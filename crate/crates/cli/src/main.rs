mod selftest;

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lmap_core::analysis::{heilbronn4, oracle_map, random_polygon, regular_polygon_with, OracleResult};
use lmap_core::report::{CandidateJson, PolygonJson, ReportJson};
use lmap_core::{
    find_all_lmaps, find_map, svg, BuildOptions, Error, Perturbation, Pgram, Polygon, SearchOptions, Tolerances,
};

#[derive(Parser)]
#[command(name = "lmap", version, about = "Largest parallelograms inscribed in convex polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Every locally maximal inscribed parallelogram.
    Lmaps(Query),
    /// The maximum area inscribed parallelogram.
    Map(Query),
    /// Best four-point placement maximizing the smallest triangle.
    Heilbronn4(Query),
    /// Brute-force sampled maximum, for cross-checking.
    Oracle {
        #[command(flatten)]
        query: Query,
        /// Boundary samples.
        #[arg(long, default_value_t = 120)]
        samples: usize,
    },
    /// Print a random (or regular) convex polygon as JSON.
    Gen {
        /// Number of vertices.
        #[arg(short, long)]
        n: usize,
        /// Seed for the random generator or the perturbation.
        #[arg(long, required_unless_present = "regular")]
        seed: Option<u64>,
        /// Regular polygon instead of a random one. Even n needs `--perturb`.
        #[arg(long)]
        regular: bool,
        /// Rotate the vertices of a regular polygon by random angles up to
        /// this many radians, which repairs parallel edges.
        #[arg(long, requires_all = ["seed", "regular"])]
        perturb: Option<f64>,
    },
    /// Run the built-in invariant checks.
    Selftest {
        /// Polygon JSON file to check instead of random polygons (`-` for stdin).
        input: Option<PathBuf>,
        /// Random polygons per family.
        #[arg(long, default_value_t = 25)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Corrupt one candidate before the anchoring checks.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Svg,
    Text,
}

#[derive(Args)]
struct Query {
    /// Polygon JSON file (`{"vertices": [[x, y], ...]}`), or `-` for stdin.
    #[arg(default_value = "-")]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Screen candidates with the local-maximality probe.
    #[arg(long, overrides_with = "no_probe")]
    probe: bool,
    /// Skip the local-maximality probe.
    #[arg(long, overrides_with = "probe")]
    no_probe: bool,
    /// Rotate vertices by independent random angles up to this many radians.
    #[arg(long, requires = "seed")]
    perturb: Option<f64>,
    /// Seed for `--perturb`.
    #[arg(long)]
    seed: Option<u64>,
    /// Report candidates that failed validation.
    #[arg(long)]
    keep_rejected: bool,
    /// Multiply every numeric tolerance.
    #[arg(long, default_value_t = 1.0)]
    tol_scale: f64,
    /// Worker threads (0 picks the number of cores).
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

fn read_polygon(path: &Path, opts: &BuildOptions) -> Result<Polygon, Error> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::InvalidSpec(format!("{}: {e}", path.display())))?
    };
    let input: PolygonJson = serde_json::from_str(&text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
    Polygon::build(&input.vertices, opts)
}

impl Query {
    fn polygon(&self) -> Result<Polygon, Error> {
        if !(self.tol_scale > 0.0 && self.tol_scale.is_finite()) {
            return Err(Error::InvalidSpec("--tol-scale must be positive".into()));
        }
        let opts = BuildOptions {
            tol: Tolerances::default().scaled(self.tol_scale),
            perturb: self.perturb.zip(self.seed).map(|(eps, seed)| Perturbation { eps, seed }),
        };
        read_polygon(&self.input, &opts)
    }

    fn options(&self) -> SearchOptions {
        SearchOptions { probe: !self.no_probe, keep_rejected: self.keep_rejected, parallel: self.threads != 1 }
    }
}

#[derive(Serialize)]
struct OracleJson {
    oracle: OracleResult,
    map_area: f64,
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize") + "\n"
}

fn text_line(k: usize, c: &CandidateJson, is_map: bool) -> String {
    let corners: Vec<String> = c.corners.iter().map(|p| format!("({}, {})", p.x, p.y)).collect();
    format!(
        "{}{k}: area {} source {:?} corners {}\n",
        if is_map { "* " } else { "  " },
        c.area,
        c.source,
        corners.join(" ")
    )
}

fn render(cmd: Command) -> Result<String, Error> {
    Ok(match cmd {
        Command::Lmaps(q) => {
            let p = q.polygon()?;
            let r = find_all_lmaps(&p, &q.options())?;
            match q.format {
                Format::Json => to_json(&ReportJson::new(&p, &r)),
                Format::Svg => {
                    let pg: Vec<Pgram> = r.lmaps.iter().map(|c| c.pgram).collect();
                    svg::render(&p, &pg, r.map_index)
                }
                Format::Text => {
                    let rep = ReportJson::new(&p, &r);
                    let mut s =
                        format!("{} locally maximal parallelograms, {} triples\n", rep.lmaps.len(), r.stats.triples());
                    for (k, c) in rep.lmaps.iter().enumerate() {
                        s += &text_line(k, c, Some(k) == rep.map_index);
                    }
                    for (k, c) in rep.rejected.iter().enumerate() {
                        s += &format!("  rejected {k}: area {} flags {:?}\n", c.area, c.flags);
                    }
                    s
                }
            }
        }
        Command::Map(q) => {
            let p = q.polygon()?;
            let c = find_map(&p, &q.options())?;
            match q.format {
                Format::Json => to_json(&CandidateJson::from(&c)),
                Format::Svg => svg::render(&p, &[c.pgram], Some(0)),
                Format::Text => text_line(0, &CandidateJson::from(&c), true),
            }
        }
        Command::Heilbronn4(q) => {
            let p = q.polygon()?;
            let h = heilbronn4(&p, &q.options())?;
            match q.format {
                Format::Json => to_json(&h),
                Format::Svg => svg::render(&p, &[Pgram::new(h.placement)], Some(0)),
                Format::Text => {
                    let pts: Vec<String> = h.placement.iter().map(|p| format!("({}, {})", p.x, p.y)).collect();
                    format!("value {} (triangle {}, parallelogram {})\n{}\n", h.value, h.t, h.p, pts.join(" "))
                }
            }
        }
        Command::Oracle { query: q, samples } => {
            let p = q.polygon()?;
            let map_area = find_map(&p, &q.options())?.area();
            let oracle = oracle_map(&p, samples);
            match q.format {
                Format::Json => to_json(&OracleJson { oracle, map_area }),
                Format::Svg => svg::render(&p, &[oracle.best], Some(0)),
                Format::Text => {
                    let corners: Vec<String> =
                        oracle.best.corners.iter().map(|p| format!("({}, {})", p.x, p.y)).collect();
                    format!(
                        "oracle {} (N = {}, slack {}), search {}\ncorners {}\n",
                        oracle.best.area(),
                        oracle.samples_per_boundary,
                        oracle.slack_estimate,
                        map_area,
                        corners.join(" ")
                    )
                }
            }
        }
        Command::Gen { n, seed, regular, perturb } => {
            let p = if regular {
                let perturb = perturb.zip(seed).map(|(eps, seed)| Perturbation { eps, seed });
                regular_polygon_with(n, &BuildOptions { perturb, ..BuildOptions::default() })?
            } else {
                random_polygon(n, seed.expect("clap requires a seed without --regular"))?
            };
            to_json(&PolygonJson::from(&p))
        }
        Command::Selftest { .. } => unreachable!("handled in main"),
    })
}

fn threads(cmd: &Command) -> usize {
    match cmd {
        Command::Lmaps(q) | Command::Map(q) | Command::Heilbronn4(q) | Command::Oracle { query: q, .. } => q.threads,
        _ => 0,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let n = threads(&cli.command);
    if n > 0 {
        // Only fails when a global pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    if let Command::Selftest { input, count, seed, inject_fault } = cli.command {
        let given = match input.map(|path| read_polygon(&path, &BuildOptions::default())).transpose() {
            Ok(p) => p,
            Err(e) => {
                eprintln!("{}: {e}", e.name());
                return ExitCode::from(2);
            }
        };
        return match selftest::run(given, count, seed, inject_fault) {
            None => ExitCode::SUCCESS,
            Some(family) => {
                eprintln!("selftest failed: {family}");
                ExitCode::from(1)
            }
        };
    }
    match render(cli.command) {
        Ok(out) => {
            let _ = io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}: {e}", e.name());
            ExitCode::from(2)
        }
    }
}
