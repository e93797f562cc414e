//! The `qi` command-line tool.
//!
//! [`run`] parses arguments, dispatches and writes to the given streams, so
//! the whole tool can be driven from tests. Exit codes: `0` success, `2`
//! parse error, `3` unsupported case, `4` invalid input data.
//!
//! File arguments are paths, or names of shipped presets (`t3`,
//! `presets/t3`, `k3.json`). Presets are looked up in `$QI_PRESET_DIR`,
//! falling back to the `presets/` directory of this crate.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::berezin::{
    pfaffian, vertex_integral_b2, vertex_integral_b2_auxiliary, vertex_integral_b3, PfaffianMethod,
};
use crate::error::{Error, ErrorKind, Result};
use crate::io::{self, CurvatureSpec, GSpec, ManifoldSpec, MatrixSpec, SpaceSpec, ZSpec};
use crate::lambda::{lambda_from_z, verify_consum};
use crate::lmo::z_lmo;
use crate::rw::{euler_hilb, euler_kummer, z_rw_with, TorsionPolicy};
use crate::series::parse_rational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    MachineReadable,
}

#[derive(Debug, Parser)]
#[command(name = "qi", about = "Exact perturbative invariants of closed 3-manifolds")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// LMO invariant of a manifold file.
    Lmo {
        manifold: String,
        #[arg(long, default_value_t = 3)]
        order: u32,
    },
    /// Rozansky-Witten invariant of a manifold for a hyper-Kähler space.
    ///
    /// For b1 = 2 the Lescop value is taken as +torOrder·linkingMu.
    Rw {
        manifold: String,
        space: String,
        /// Multiply by |Tor H_1|^n when b1 = 1 instead of rejecting torsion.
        #[arg(long)]
        torsion_factor: bool,
    },
    /// Euler characteristics of Hilbert schemes of K3 and generalized Kummer varieties.
    Hilb {
        #[arg(long, default_value_t = 7)]
        max: u32,
    },
    /// Recover λ^0..λ^n from Z values and the G data.
    Lambda {
        z_file: String,
        g_file: String,
        #[arg(long, default_value_t = 0)]
        b1: u32,
    },
    /// Pfaffian of an antisymmetric matrix, by both methods.
    Pfaffian { matrix_file: String },
    /// Zero-mode vertex integrals of a curvature file.
    Vertex {
        curvature_file: String,
        /// Coupling of the b1 = 3 vertex.
        #[arg(long, default_value = "1")]
        coupling: String,
    },
    /// Symbolic connected-sum identity for the λ invariants.
    Consum {
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
}

/// Runs `qi` with `args` (including the program name). Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e.kind() {
        ErrorKind::Parse => EXIT_PARSE,
        ErrorKind::Unsupported => EXIT_UNSUPPORTED,
        ErrorKind::Invariant => EXIT_INVARIANT,
    }
}

/// Directory searched for preset names.
pub fn preset_dir() -> PathBuf {
    std::env::var_os("QI_PRESET_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("presets"))
}

/// Existing path, else a preset of that name.
pub fn resolve(arg: &str) -> PathBuf {
    let direct = PathBuf::from(arg);
    if direct.is_file() {
        return direct;
    }
    let name = arg.strip_prefix("presets/").unwrap_or(arg);
    let dir = preset_dir();
    let exact = dir.join(name);
    if exact.is_file() {
        return exact;
    }
    dir.join(format!("{name}.json"))
}

fn load<T: for<'de> serde::Deserialize<'de>>(arg: &str) -> Result<T> {
    io::read_json(&resolve(arg))
}

fn emit(out: &mut dyn Write, text: impl std::fmt::Display) -> Result<()> {
    writeln!(out, "{text}").map_err(|e| Error::Invalid(format!("cannot write output: {e}")))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    let machine = cli.format == Format::MachineReadable;
    match &cli.command {
        Command::Lmo { manifold, order } => {
            let spec: ManifoldSpec = load(manifold)?;
            let s = z_lmo(&spec.to_data()?, *order)?;
            if machine {
                emit(out, s.to_machine())
            } else {
                emit(out, s)
            }
        }
        Command::Rw { manifold, space, torsion_factor } => {
            let m: ManifoldSpec = load(manifold)?;
            let x: SpaceSpec = load(space)?;
            let policy = if *torsion_factor { TorsionPolicy::Multiply } else { TorsionPolicy::RequireTrivial };
            let z = z_rw_with(&m.to_data()?, &x.to_data()?, policy)?;
            if machine {
                emit(out, json!({ "manifold": m.name, "space": x.name, "z": z.to_string() }))
            } else {
                emit(out, z)
            }
        }
        Command::Hilb { max } => {
            let rows: Vec<(u32, String, String)> = (0..=*max)
                .map(|n| {
                    let kummer = euler_kummer(n).map(|k| k.to_string()).unwrap_or_else(|_| "-".into());
                    (n, euler_hilb(n).to_string(), kummer)
                })
                .collect();
            if machine {
                let rows: Vec<_> =
                    rows.iter().map(|(n, h, k)| json!({ "n": n, "hilb": h, "kummer": k })).collect();
                return emit(out, json!(rows));
            }
            let wh = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max(4);
            emit(out, format!("n  {:<wh$}  kummer", "hilb"))?;
            for (n, h, k) in rows {
                emit(out, format!("{n:<2} {h:<wh$}  {k}"))?;
            }
            Ok(())
        }
        Command::Lambda { z_file, g_file, b1 } => {
            let z: ZSpec = load(z_file)?;
            let g: GSpec = load(g_file)?;
            let mut l = lambda_from_z(&z.to_data()?, &g.to_data()?)?;
            l.b1 = *b1;
            if machine {
                emit(out, io::lambda_to_json(&l))
            } else {
                emit(out, l)
            }
        }
        Command::Pfaffian { matrix_file } => {
            let m: MatrixSpec = load(matrix_file)?;
            let a = m.to_data()?;
            let berezin = pfaffian(&a, PfaffianMethod::Berezin)?;
            let combinatorial = pfaffian(&a, PfaffianMethod::Combinatorial)?;
            if berezin != combinatorial {
                return Err(Error::Invalid(format!("Pfaffian methods disagree: {berezin} vs {combinatorial}")));
            }
            if machine {
                emit(out, json!({ "size": a.size(), "pfaffian": berezin.to_string() }))
            } else {
                emit(out, berezin)
            }
        }
        Command::Vertex { curvature_file, coupling } => {
            let spec: CurvatureSpec = load(curvature_file)?;
            let c = spec.to_data()?;
            let coupling = parse_rational(coupling)?;
            let b3 = vertex_integral_b3(&c, &coupling)?;
            let b2 = vertex_integral_b2(&c)?;
            let b2_aux = vertex_integral_b2_auxiliary(&c)?;
            if machine {
                emit(
                    out,
                    json!({
                        "n": c.n(),
                        "b3": b3.to_string(),
                        "b2": b2.to_string(),
                        "b2Auxiliary": b2_aux.to_string(),
                    }),
                )
            } else {
                emit(out, format!("b3 {b3}\nb2 {b2}\nb2-auxiliary {b2_aux}"))
            }
        }
        Command::Consum { n } => {
            let report = verify_consum(*n);
            if machine {
                let ids: Vec<String> = report.identities.iter().map(|p| p.to_string()).collect();
                emit(out, json!({ "n": report.n, "holds": report.holds, "lambda": ids }))?;
            } else {
                write!(out, "{report}").map_err(|e| Error::Invalid(format!("cannot write output: {e}")))?;
            }
            if report.holds {
                Ok(())
            } else {
                Err(Error::Invalid(format!("connected-sum identity fails at n = {n}")))
            }
        }
    }
}
