//! `hopf-frob`: verify structure-constant files of semisimple Hopf algebras.
//!
//! Exit status: 0 when the check passes, 1 when it fails, 2 on input errors.

mod matrix_file;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use hopf_frobenius::corpus::{dual_group_algebra, group_algebra, CayleyTable};
use hopf_frobenius::forms::{frobenius_certificate, theorem2_replay, weak_form_check};
use hopf_frobenius::hopf::HopfFile;
use hopf_frobenius::integrals::{find_integral, nu_tensor};
use hopf_frobenius::wedderburn::{decompose_center, lemma1_equivalence};
use hopf_frobenius::{Error, FieldScalar, HopfData, Matrix, SubringSpec};

#[derive(Parser)]
#[command(name = "hopf-frob", version, about = "Exact checks for semisimple Hopf algebras")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Work over Q(zeta_N) instead of the field named in the file.
    #[arg(long, global = true, value_name = "N")]
    conductor: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf algebra axioms.
    Axioms { file: PathBuf },
    /// Print the normalized integral and nu.
    Integral { file: PathBuf },
    /// Primitive central idempotents, degrees and characters.
    Decompose { file: PathBuf },
    /// Rebuild every central idempotent from its character.
    Lemma1 { file: PathBuf },
    /// Check that a basis spans a weak R-form.
    FormCheck {
        file: PathBuf,
        /// Basis matrix; columns are the basis vectors (default: identity).
        #[arg(long, value_name = "MATRIXFILE")]
        basis: Option<PathBuf>,
        /// Z, Zp:<p> or OK:<N>; repeatable.
        #[arg(long = "ring", default_value = "Z")]
        rings: Vec<SubringSpec>,
    },
    /// Divisibility certificate n/k in R for every block degree.
    Frobenius {
        file: PathBuf,
        /// Z, Zp:<p> or OK:<N>; repeatable.
        #[arg(long = "ring", default_value = "Z")]
        rings: Vec<SubringSpec>,
    },
    /// Replay the integrality argument for one block over Z.
    Replay {
        file: PathBuf,
        #[arg(long, value_name = "MATRIXFILE")]
        basis: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        block: usize,
    },
    /// List the built-in groups, optionally writing their algebras as JSON.
    Corpus {
        /// Directory to write `<NAME>.json` and `<NAME>-dual.json` into.
        #[arg(long, value_name = "DIR")]
        emit: Option<PathBuf>,
    },
}

/// Outcome of a command: a pass/fail verdict plus text and JSON renderings.
struct Outcome {
    passed: bool,
    text: String,
    json: Value,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotSemisimple
        | Error::SplittingFieldTooSmall { .. }
        | Error::ModuleSearchFailed { .. }
        | Error::RankDeficient { .. }
        | Error::ReplayFailed { .. } => 1,
        _ => 2,
    }
}

fn load(path: &Path, conductor: Option<u32>) -> hopf_frobenius::Result<HopfData> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let mut file: HopfFile = serde_json::from_str(&text)?;
    if let Some(n) = conductor {
        file.conductor = n;
    }
    file.into_hopf()
}

fn load_basis(path: Option<&Path>, n: usize) -> hopf_frobenius::Result<Matrix> {
    let Some(path) = path else {
        return Ok(Matrix::identity(n));
    };
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let m = matrix_file::parse_matrix(&text)?;
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimMismatch {
            expected: n,
            got: if m.rows() != n { m.rows() } else { m.cols() },
        });
    }
    Ok(m)
}

fn strings(v: &[FieldScalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn matrix_json(m: &Matrix) -> Value {
    json!(m.to_rows().iter().map(|r| strings(r)).collect::<Vec<_>>())
}

fn axioms(h: &HopfData) -> Outcome {
    let report = h.check_axioms();
    Outcome {
        passed: report.is_hopf_algebra(),
        text: format!("{report}"),
        json: json!({ "hopf_algebra": report.is_hopf_algebra(), "report": report }),
    }
}

fn integral(h: &HopfData) -> hopf_frobenius::Result<Outcome> {
    let lambda = find_integral(h)?;
    let nu = nu_tensor(h, &lambda)?;
    let entries: Vec<(usize, usize, String)> = nu.nonzero().into_iter().map(|(i, j, c)| (i, j, c.to_string())).collect();
    let mut text = format!("Lambda = {lambda}\nnu:\n");
    for (i, j, c) in &entries {
        text.push_str(&format!("  x_{i} (x) x_{j}: {c}\n"));
    }
    Ok(Outcome {
        passed: true,
        text,
        json: json!({ "integral": strings(lambda.coeffs()), "nu": entries }),
    })
}

fn decompose(h: &HopfData) -> hopf_frobenius::Result<Outcome> {
    let blocks = decompose_center(h)?;
    let mut text = String::new();
    let mut out = Vec::new();
    for (b, blk) in blocks.iter().enumerate() {
        text.push_str(&format!(
            "block {b}: degree {}\n  e = {}\n  chi = ({})\n",
            blk.degree,
            blk.idempotent,
            strings(&blk.character.values).join(", ")
        ));
        out.push(json!({
            "block": b,
            "degree": blk.degree,
            "idempotent": strings(blk.idempotent.coeffs()),
            "character": strings(&blk.character.values),
        }));
    }
    Ok(Outcome {
        passed: true,
        text,
        json: json!({ "blocks": out }),
    })
}

fn lemma1(h: &HopfData) -> hopf_frobenius::Result<Outcome> {
    let rows = lemma1_equivalence(h)?;
    let passed = rows.iter().all(|r| r.matches && r.central);
    let text = rows.iter().map(|r| format!("{r}\n")).collect();
    Ok(Outcome {
        passed,
        text,
        json: json!({ "passed": passed, "blocks": rows }),
    })
}

fn form_check(h: &HopfData, basis: &Matrix, rings: &[SubringSpec]) -> hopf_frobenius::Result<Outcome> {
    let lambda = find_integral(h)?;
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut passed = true;
    for r in rings {
        let rep = weak_form_check(h, &lambda, basis, r)?;
        passed &= rep.passed;
        text.push_str(&rep.to_string());
        reports.push(serde_json::to_value(&rep)?);
    }
    Ok(Outcome {
        passed,
        text,
        json: json!({ "passed": passed, "basis": matrix_json(basis), "reports": reports }),
    })
}

fn frobenius(h: &HopfData, rings: &[SubringSpec]) -> hopf_frobenius::Result<Outcome> {
    let degrees: Vec<u64> = decompose_center(h)?.iter().map(|b| b.degree as u64).collect();
    let cert = frobenius_certificate(h.dim() as u64, &degrees, rings)?;
    Ok(Outcome {
        passed: cert.overall,
        text: format!("{cert}\n"),
        json: serde_json::to_value(&cert)?,
    })
}

fn replay(h: &HopfData, basis: &Matrix, block: usize) -> hopf_frobenius::Result<Outcome> {
    let blocks = decompose_center(h)?;
    let blk = blocks.get(block).ok_or_else(|| {
        Error::InvalidInput(format!("block {block} out of range ({} blocks)", blocks.len()))
    })?;
    let lambda = find_integral(h)?;
    let rep = theorem2_replay(h, &lambda, basis, blk)?;
    let lattice: Vec<Vec<String>> = rep
        .lattice_basis
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    Ok(Outcome {
        passed: true,
        text: rep.to_string(),
        json: json!({
            "passed": true,
            "block": block,
            "degree": rep.degree,
            "n": rep.n,
            "generator_index": rep.generator_index,
            "lattice_scale": rep.lattice_scale.to_string(),
            "lattice_basis": lattice,
            "characters": strings(&rep.characters),
            "identity_lhs": matrix_json(&rep.identity_lhs),
            "quotient": rep.quotient.to_string(),
        }),
    })
}

fn corpus(conductor: Option<u32>, emit: Option<&Path>) -> hopf_frobenius::Result<Outcome> {
    let mut text = String::new();
    let mut listed = Vec::new();
    if let Some(dir) = emit {
        fs::create_dir_all(dir).map_err(|e| Error::InvalidInput(format!("cannot create {}: {e}", dir.display())))?;
    }
    for name in CayleyTable::BUILTIN_NAMES {
        let g = CayleyTable::builtin(name).expect("listed");
        let n = conductor.unwrap_or_else(|| g.exponent());
        text.push_str(&format!("{name}\torder {}\texponent {}\n", g.order(), g.exponent()));
        let mut files = Vec::new();
        if let Some(dir) = emit {
            for (suffix, h) in [("", group_algebra(&g, n)?), ("-dual", dual_group_algebra(&g, n)?)] {
                let path = dir.join(format!("{name}{suffix}.json"));
                fs::write(&path, h.to_json() + "\n")
                    .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))?;
                text.push_str(&format!("  wrote {}\n", path.display()));
                files.push(path.display().to_string());
            }
        }
        listed.push(json!({ "name": name, "order": g.order(), "exponent": g.exponent(), "files": files }));
    }
    Ok(Outcome {
        passed: true,
        text,
        json: json!({ "groups": listed }),
    })
}

fn run(cli: &Cli) -> hopf_frobenius::Result<Outcome> {
    let c = cli.conductor;
    match &cli.command {
        Command::Axioms { file } => Ok(axioms(&load(file, c)?)),
        Command::Integral { file } => integral(&load(file, c)?),
        Command::Decompose { file } => decompose(&load(file, c)?),
        Command::Lemma1 { file } => lemma1(&load(file, c)?),
        Command::FormCheck { file, basis, rings } => {
            let h = load(file, c)?;
            let b = load_basis(basis.as_deref(), h.dim())?;
            form_check(&h, &b, rings)
        }
        Command::Frobenius { file, rings } => frobenius(&load(file, c)?, rings),
        Command::Replay { file, basis, block } => {
            let h = load(file, c)?;
            let b = load_basis(basis.as_deref(), h.dim())?;
            replay(&h, &b, *block)
        }
        Command::Corpus { emit } => corpus(c, emit.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json values serialize"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
