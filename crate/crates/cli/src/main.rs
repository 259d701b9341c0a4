use std::error::Error;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cfk_core::builders::{cable_exponents, staircase, torus_knot_exponents, AlexanderExponents};
use cfk_core::complex::{mirror, tensor, validate, CfkComplex};
use cfk_core::filtration::{hook_step_level, meridian_filtration};
use cfk_core::format::{load_file, parse, serialize};
use cfk_core::invariants::{a1_algebraic, a1_surgery, InvariantReport};
use cfk_core::library;
use cfk_core::region::{realize, Region};
use cfk_core::suite::{self, SuiteConfig};

type Result<T> = std::result::Result<T, Box<dyn Error>>;

#[derive(Parser)]
#[command(name = "cfk", version, about = "Filtered knot Floer complexes and the invariants tau, epsilon, a1")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a complex against the filtered-complex axioms.
    Validate(Input),
    /// Report tau, epsilon, a1 (both routes) and homology dimensions.
    Invariants {
        #[command(flatten)]
        input: Input,
        /// Cable parameter for the surgery route (default 2g+1).
        #[arg(long)]
        n: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Print a1 alone.
    A1 {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Cable parameter for the surgery route (default 2g+1).
        #[arg(long)]
        n: Option<i64>,
    },
    /// Meridian-cable filtration levels of the hook points in slot m.
    Filtration {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Tensor product of two or more complexes (library knots first, then files).
    Tensor(Inputs),
    /// Mirror of a complex.
    Mirror(Input),
    /// Staircase complex from exponents, a torus knot, or an L-space cable of one.
    Staircase {
        /// Alexander exponents, strictly decreasing and symmetric.
        #[arg(allow_negative_numbers = true, conflicts_with = "torus")]
        exponents: Vec<i64>,
        /// Torus knot `P,Q`.
        #[arg(long, value_parser = pair)]
        torus: Option<(i64, i64)>,
        /// Cable `P,Q` of the torus knot.
        #[arg(long, value_parser = pair, requires = "torus")]
        cable: Option<(i64, i64)>,
        #[arg(long)]
        name: Option<String>,
    },
    /// Run the property suite over the library and random models.
    Suite {
        /// Number of random seeds.
        #[arg(long, default_value_t = 200)]
        seeds: u64,
        /// Maximum number of tensor factors per random model.
        #[arg(long, default_value_t = 2)]
        size: usize,
        /// Extra complex files, included without prior validation.
        #[arg(long)]
        inject: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Basis and boundary of a realized region, with its homology.
    Realize {
        #[command(flatten)]
        input: Input,
        /// `vertical:I`, `vclip:I,S`, `hook:M`, `hookclip:M,S`, `lhook:M`, `lhookclip:M,S`.
        #[arg(long, value_parser = region, allow_hyphen_values = true)]
        region: Region,
    },
    /// List the library knots.
    List,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Library knot name, e.g. `T(2,9)`.
    #[arg(long, allow_hyphen_values = true)]
    knot: Option<String>,
    /// Complex file.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct Inputs {
    #[arg(long, allow_hyphen_values = true)]
    knot: Vec<String>,
    #[arg(long)]
    file: Vec<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Algebraic,
    Surgery,
    Both,
}

fn pair(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or("expected P,Q")?;
    Ok((a.trim().parse().map_err(|e| format!("{e}"))?, b.trim().parse().map_err(|e| format!("{e}"))?))
}

fn region(s: &str) -> std::result::Result<Region, String> {
    let (kind, args) = s.split_once(':').ok_or("expected KIND:ARGS")?;
    let nums: Vec<i64> = args
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("`{x}`: {e}")))
        .collect::<std::result::Result<_, _>>()?;
    match (kind, nums.as_slice()) {
        ("vertical", [i]) => Ok(Region::VerticalSlice { i: *i }),
        ("vclip", [i, s]) => Ok(Region::VerticalClipped { i: *i, s: *s }),
        ("hook", [m]) => Ok(Region::Hook { m: *m }),
        ("hookclip", [m, s]) => Ok(Region::HookClipped { m: *m, s: *s }),
        ("lhook", [m]) => Ok(Region::LHook { m: *m }),
        ("lhookclip", [m, s]) => Ok(Region::LHookClipped { m: *m, s: *s }),
        _ => Err(format!("unknown region `{s}`")),
    }
}

impl Input {
    fn load(&self) -> Result<CfkComplex> {
        match (&self.knot, &self.file) {
            (Some(k), _) => Ok(library::knot(k)?),
            (_, Some(f)) => Ok(load_file(f)?),
            _ => unreachable!("clap requires one input"),
        }
    }
}

fn read_unchecked(path: &PathBuf) -> Result<CfkComplex> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Ok(parse(&text)?)
}

/// Aligned table with a header row.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Validate(input) => {
            let c = match (&input.knot, &input.file) {
                (Some(_), _) => input.load()?,
                (_, Some(f)) => read_unchecked(f)?,
                _ => unreachable!(),
            };
            let report = validate(&c);
            print!("{report}");
            if !report.is_valid() {
                return Err(format!("`{}` is not a valid complex", c.name()).into());
            }
            println!("`{}` is valid", c.name());
        }
        Command::Invariants { input, n, format } => {
            let c = input.load()?;
            let r = match n {
                Some(n) => InvariantReport::compute_with_n(&c, n)?,
                None => InvariantReport::compute(&c)?,
            };
            match format {
                Format::Table => print!("{}", r.table()),
                Format::Json => println!("{}", serde_json::to_string_pretty(&r)?),
            }
            if r.a1 != r.a1_surgery {
                return Err(format!("a1 = {} but surgery a1 = {}", r.a1, r.a1_surgery).into());
            }
        }
        Command::A1 { input, method, n } => {
            let c = input.load()?;
            let n = n.unwrap_or(2 * c.genus_bound() + 1);
            let a = (method != Method::Surgery).then(|| a1_algebraic(&c)).transpose()?;
            let s = (method != Method::Algebraic).then(|| a1_surgery(&c, n)).transpose()?;
            match (a, s) {
                (Some(a), Some(s)) if a != s => {
                    return Err(format!("algebraic a1 = {a}, surgery a1 = {s} (n = {n})").into())
                }
                (Some(v), _) | (None, Some(v)) => println!("{v}"),
                (None, None) => unreachable!(),
            }
        }
        Command::Filtration { input, m, n, format } => {
            let c = input.load()?;
            let hook = realize(&c, Region::Hook { m })?;
            let mut rows = Vec::new();
            let mut points = Vec::new();
            for p in hook.basis() {
                let l = meridian_filtration(p.i, p.j, m, n)?;
                let step = hook_step_level(p.i, p.j, m, n)?.0;
                rows.push(vec![p.to_string(), format!("[{}, {}]", l.first, l.second), step.to_string()]);
                points.push(json!({"point": p.to_string(), "i": p.i, "j": p.j, "level": l, "step": step}));
            }
            match format {
                Format::Table => {
                    println!("{} with m = {m}, n = {n}", Region::Hook { m });
                    print!("{}", table(&["point", "level", "step"], &rows));
                }
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(
                        &json!({"name": c.name(), "m": m, "n": n, "points": points})
                    )?
                ),
            }
        }
        Command::Tensor(inputs) => {
            let mut all = Vec::new();
            for k in &inputs.knot {
                all.push(library::knot(k)?);
            }
            for f in &inputs.file {
                all.push(load_file(f)?);
            }
            if all.len() < 2 {
                return Err("tensor needs at least two complexes".into());
            }
            let product = all[1..].iter().fold(all[0].clone(), |acc, c| tensor(&acc, c));
            print!("{}", serialize(&product));
        }
        Command::Mirror(input) => print!("{}", serialize(&mirror(&input.load()?))),
        Command::Staircase { exponents, torus, cable, name } => {
            let e = match (torus, cable) {
                (Some((p, q)), None) => torus_knot_exponents(p, q)?,
                (Some((p, q)), Some((cp, cq))) => cable_exponents(&torus_knot_exponents(p, q)?, cp, cq)?,
                _ if exponents.is_empty() => return Err("give exponents or --torus".into()),
                _ => AlexanderExponents::new(exponents)?,
            };
            let c = staircase(&e);
            let c = match name {
                Some(n) => c.with_name(n),
                None => c,
            };
            print!("{}", serialize(&c));
        }
        Command::Suite { seeds, size, inject, format } => {
            let extra = inject.iter().map(read_unchecked).collect::<Result<Vec<_>>>()?;
            let report = suite::run(&SuiteConfig { seeds, random_size: size, extra });
            match format {
                Format::Table => {
                    for v in &report.violations {
                        println!("{v}");
                    }
                    println!("{}", report.summary());
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
            }
            if !report.passed() {
                return Err(format!("{} property violations", report.violations.len()).into());
            }
        }
        Command::Realize { input, region } => {
            let c = input.load()?;
            let r = realize(&c, region)?;
            println!(
                "{region} of `{}`: {} points, homology dimension {}",
                c.name(),
                r.len(),
                r.homology().dim()
            );
            print!("{}", r.listing());
        }
        Command::List => {
            for n in library::names() {
                println!("{n}");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_regions() {
        assert_eq!(region("hook:-2"), Ok(Region::Hook { m: -2 }));
        assert_eq!(region("lhookclip:1,3"), Ok(Region::LHookClipped { m: 1, s: 3 }));
        assert!(region("hook:1,2").is_err());
        assert!(region("box:0").is_err());
    }

    #[test]
    fn table_is_aligned() {
        let t = table(&["a", "bb"], &[vec!["ccc".into(), "d".into()]]);
        assert_eq!(t, "a    bb\nccc  d\n");
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
