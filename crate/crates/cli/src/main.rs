//! `hombra`: check, solve and construct Hom-bialgebras from structure files.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 a checked property
//! fails, 3 no antipode within the exponent bound.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hombra::antipode::{
    find_relative_antipode, run_propositions, verify_relative_antipode, verify_strict_antipode,
};
use hombra::constructions::{
    hom_group_algebra, tensor_hopf, twist_group, yau_twist, yau_twist_hopf, ClassicalBialgebra,
    FiniteGroup,
};
use hombra::format::{parse_matrix_literal, StructureFile};
use hombra::qmatrix::{self, QParams};
use hombra::report::{AntipodeSection, Report, StructureInfo};
use hombra::structures::{check_axioms, compute_flags, Structure};
use hombra::{Error, Scalar};

const DEFAULT_KMAX: u32 = 8;

#[derive(Parser)]
#[command(
    name = "hombra",
    version,
    about = "Exact checks for finite-dimensional Hom-bialgebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Common {
    /// Largest exponent searched; defaults to $HOMBRA_KMAX or 8.
    #[arg(long)]
    kmax: Option<u32>,
    /// Print the machine-readable report.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a structure file.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        #[command(flatten)]
        common: Common,
    },
    /// Solve for or verify an antipode.
    Antipode {
        #[command(subcommand)]
        action: AntipodeAction,
    },
    /// Run the antipode property suite.
    Props {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Build a structure file.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
}

#[derive(Subcommand)]
enum AntipodeAction {
    /// Find the relative antipode with the smallest exponent and write the
    /// structure file with it.
    Find {
        file: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Run the strict and relative antipode checks.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Yau twist of a classical bialgebra by an endomorphism, given as
    /// rows like "1,0;0,1".
    Twist {
        file: PathBuf,
        #[arg(long)]
        map: String,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Tensor product of two Hopf candidates.
    Tensor {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Group algebra of C<n>, K4 or S3, optionally twisted into a Hom-group
    /// by an endomorphism: id, inv, sq, or images like "0,3,2,1".
    GroupAlgebra {
        #[arg(long)]
        group: String,
        #[arg(long)]
        twist: Option<String>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Truncated twisted quantum matrices.
    Qmatrix {
        #[arg(long, default_value = "2")]
        q: String,
        #[arg(long, default_value = "3")]
        lambda: String,
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Coalgebra => "coalgebra",
            Kind::Bialgebra => "bialgebra",
            Kind::Hopf => "hopf",
        }
    }
}

enum Failure {
    Usage(String),
    Check,
    NotFound(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn kmax(common: &Common) -> Result<u32, Failure> {
    if let Some(k) = common.kmax {
        return Ok(k);
    }
    match std::env::var("HOMBRA_KMAX") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "HOMBRA_KMAX must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_KMAX),
    }
}

fn load(path: &PathBuf) -> Result<StructureFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    StructureFile::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_out(text: &str, out: &Option<PathBuf>) -> Outcome {
    match out {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn info(f: &StructureFile, kind: &str) -> StructureInfo {
    StructureInfo {
        kind: kind.into(),
        dim: f.dim(),
        basis: f.basis.clone(),
    }
}

fn emit(report: &Report, common: &Common) -> Outcome {
    if common.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.all_pass() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn infer_kind(f: &StructureFile) -> Kind {
    match (&f.algebra, &f.coalgebra, &f.antipode) {
        (Some(_), Some(_), Some(_)) => Kind::Hopf,
        (Some(_), Some(_), None) => Kind::Bialgebra,
        (Some(_), None, _) => Kind::Algebra,
        _ => Kind::Coalgebra,
    }
}

fn cmd_check(file: &PathBuf, kind: Option<Kind>, common: &Common) -> Outcome {
    let f = load(file)?;
    let kind = kind.unwrap_or_else(|| infer_kind(&f));
    let mut report = Report::new(info(&f, kind.name()));
    match kind {
        Kind::Algebra => {
            let a = f
                .algebra
                .as_ref()
                .ok_or_else(|| Failure::Usage("file has no algebra data".into()))?;
            report.axioms = check_axioms(Structure::Algebra(a));
        }
        Kind::Coalgebra => {
            let c = f
                .coalgebra
                .as_ref()
                .ok_or_else(|| Failure::Usage("file has no coalgebra data".into()))?;
            report.axioms = check_axioms(Structure::Coalgebra(c));
        }
        Kind::Bialgebra => {
            let b = f.bialgebra()?;
            report.axioms = check_axioms(Structure::Bialgebra(&b));
            report.flags = Some(compute_flags(&b));
        }
        Kind::Hopf => {
            let h = f.hopf()?;
            report.axioms = check_axioms(Structure::Bialgebra(&h.bialgebra));
            report.flags = Some(compute_flags(&h.bialgebra));
            report.antipode = Some(AntipodeSection {
                strict: Some(verify_strict_antipode(&h)),
                relative: Some(verify_relative_antipode(&h, kmax(common)?)),
            });
        }
    }
    emit(&report, common)
}

fn cmd_find(file: &PathBuf, out: &Option<PathBuf>, common: &Common) -> Outcome {
    let mut f = load(file)?;
    let b = f.bialgebra()?;
    let axioms = check_axioms(Structure::Bialgebra(&b));
    for e in axioms.failures() {
        eprintln!("warning: bialgebra axiom {} fails", e.name);
    }
    let k_max = kmax(common)?;
    let found = find_relative_antipode(&b, k_max)?;
    let Some(result) = found else {
        return Err(Failure::NotFound(format!(
            "no relative antipode with exponent at most {k_max}"
        )));
    };
    f.antipode = Some(result.inverse);
    f.params.insert(
        "antipode_k".into(),
        Scalar::from_int(result.exponent.into()),
    );
    write_out(&f.emit(), out)?;
    if out.is_some() {
        if common.json {
            let summary = serde_json::json!({
                "antipode_k": result.exponent,
                "nullspace_dim": result.nullspace.len(),
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&summary).expect("serializes")
            );
        } else {
            println!(
                "antipode found with k = {} (solution nullspace dimension {})",
                result.exponent,
                result.nullspace.len()
            );
        }
    }
    Ok(())
}

fn cmd_verify(file: &PathBuf, common: &Common) -> Outcome {
    let f = load(file)?;
    let h = f.hopf()?;
    let mut report = Report::new(info(&f, "hopf"));
    report.flags = Some(compute_flags(&h.bialgebra));
    report.antipode = Some(AntipodeSection {
        strict: Some(verify_strict_antipode(&h)),
        relative: Some(verify_relative_antipode(&h, kmax(common)?)),
    });
    emit(&report, common)
}

fn cmd_props(file: &PathBuf, common: &Common) -> Outcome {
    let f = load(file)?;
    let h = f.hopf()?;
    let mut report = Report::new(info(&f, "hopf"));
    report.flags = Some(compute_flags(&h.bialgebra));
    report.propositions = Some(run_propositions(&h, kmax(common)?));
    emit(&report, common)
}

fn parse_twist(g: &FiniteGroup, text: &str) -> Result<Vec<usize>, Failure> {
    let n = g.order();
    let phi: Vec<usize> = match text {
        "id" => (0..n).collect(),
        "inv" => (0..n).map(|a| g.inverse(a)).collect(),
        "sq" => (0..n).map(|a| g.mul(a, a)).collect(),
        _ => text
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| Failure::Usage(format!("bad twist {text:?}")))?,
    };
    if phi.len() != n || phi.iter().any(|&x| x >= n) {
        return Err(Failure::Usage(format!(
            "twist must list {n} images in 0..{n}"
        )));
    }
    Ok(phi)
}

fn cmd_construct(what: &Construct) -> Outcome {
    match what {
        Construct::Twist { file, map, out } => {
            let f = load(file)?;
            let phi = parse_matrix_literal(map)?;
            let twisted = match &f.antipode {
                Some(_) => {
                    let h = yau_twist_hopf(&f.hopf()?, &phi)?;
                    StructureFile::from_hopf(&h, Some(f.basis.clone()))
                }
                None => {
                    let b = yau_twist(&ClassicalBialgebra::new(f.bialgebra()?)?, &phi)?;
                    StructureFile::from_bialgebra(&b, Some(f.basis.clone()))
                }
            };
            write_out(&twisted.emit(), out)
        }
        Construct::Tensor { left, right, out } => {
            let (l, r) = (load(left)?, load(right)?);
            let h = tensor_hopf(&l.hopf()?, &r.hopf()?)?;
            let names = l
                .basis
                .iter()
                .flat_map(|a| r.basis.iter().map(move |b| format!("{a}⊗{b}")))
                .collect();
            write_out(&StructureFile::from_hopf(&h, Some(names)).emit(), out)
        }
        Construct::GroupAlgebra { group, twist, out } => {
            let g = FiniteGroup::by_name(group)?;
            let phi = match twist {
                Some(t) => parse_twist(&g, t)?,
                None => (0..g.order()).collect(),
            };
            let hg = twist_group(&g, &phi)?;
            let h = hom_group_algebra(&hg, false)?;
            write_out(
                &StructureFile::from_hopf(&h, Some(g.names.clone())).emit(),
                out,
            )
        }
        Construct::Qmatrix {
            q,
            lambda,
            degree,
            out,
        } => {
            let p = QParams::new(q.parse()?, lambda.parse()?)?;
            let b = qmatrix::to_hom_bialgebra(&p, *degree)?;
            let mut f = StructureFile::from_bialgebra(&b, Some(qmatrix::basis_names(*degree)));
            f.params
                .insert("degree".into(), Scalar::from_int((*degree).into()));
            f.params.insert("lambda".into(), p.lambda().clone());
            f.params.insert("q".into(), p.q().clone());
            write_out(&f.emit(), out)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Check { file, kind, common } => cmd_check(file, *kind, common),
        Command::Antipode { action } => match action {
            AntipodeAction::Find { file, out, common } => cmd_find(file, out, common),
            AntipodeAction::Verify { file, common } => cmd_verify(file, common),
        },
        Command::Props { file, common } => cmd_props(file, common),
        Command::Construct { what } => cmd_construct(what),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Check) => ExitCode::from(2),
        Err(Failure::NotFound(msg)) => {
            eprintln!("not found: {msg}");
            ExitCode::from(3)
        }
    }
}
