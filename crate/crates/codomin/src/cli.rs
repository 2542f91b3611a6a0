//! Command-line front end: loads a workspace file, runs one decision
//! procedure, and prints a deterministic report (plain text or `--json`).
//! Exit codes: 0 success (including `false` answers), 2 parse or validation
//! failure, 3 unsupported input (for example a characteristic outside the
//! cosemisimplicity gate).

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value as Json};

use crate::catalog;
use crate::comodules::{self, Side};
use crate::dominion;
use crate::error::{Error, Result};
use crate::extension;
use crate::linalg::Subspace;
use crate::scalars::Field;
use crate::structures::{Morphism, QuotientPresentation};
use crate::takeuchi::{self, CoidealSubalgebra, ModuleQuotientCoalgebra};
use crate::wsfile::{self, matrix_rows_json, Workspace};

#[derive(Parser)]
#[command(
    name = "codomin",
    about = "Exact decision procedures for coalgebras, bialgebras and Hopf algebras",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a workspace, reporting its contents.
    Validate {
        ws: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Is the named coalgebra morphism a monomorphism?
    Monic {
        ws: PathBuf,
        #[arg(long)]
        morphism: String,
        #[arg(long)]
        json: bool,
    },
    /// Is the named coalgebra morphism an epimorphism (surjective)?
    Epic {
        ws: PathBuf,
        #[arg(long)]
        morphism: String,
        #[arg(long)]
        json: bool,
    },
    /// Codominion kernel and quotient of the named morphism.
    Codominion {
        ws: PathBuf,
        #[arg(long)]
        morphism: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Dominion of the named algebra morphism.
    Dominion {
        ws: PathBuf,
        #[arg(long)]
        morphism: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Does the named morphism dominate the quotient given by a surjective
    /// morphism out of the same source?
    Dominates {
        ws: PathBuf,
        #[arg(long)]
        morphism: String,
        #[arg(long)]
        quotient: String,
        #[arg(long)]
        json: bool,
    },
    /// Equalizer of a comma-separated family of morphisms.
    Equalizer {
        ws: PathBuf,
        #[arg(long, value_delimiter = ',')]
        morphisms: Vec<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Largest subcoalgebra of an object contained in a named subspace.
    LargestSubcoalgebra {
        ws: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long)]
        subspace: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Coinvariants of a named comodule, optionally along a morphism.
    Coinvariants {
        ws: PathBuf,
        #[arg(long)]
        comodule: String,
        #[arg(long)]
        along: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// The space of colinear maps between two named comodules.
    Hom {
        ws: PathBuf,
        #[arg(long)]
        src: String,
        #[arg(long)]
        dst: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Is the named comodule injective (equivalently coflat)?
    Injective {
        ws: PathBuf,
        #[arg(long)]
        comodule: String,
        #[arg(long)]
        json: bool,
    },
    /// Find a one-sided comodule splitting of a surjective morphism.
    Split {
        ws: PathBuf,
        #[arg(long)]
        morphism: String,
        #[arg(long, default_value = "right")]
        side: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Is the named coalgebra cosemisimple? (trace-form criterion)
    Cosemisimple {
        ws: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long)]
        json: bool,
    },
    /// Takeuchi r: quotient of a Hopf object by a right coideal subalgebra.
    TakeuchiR {
        ws: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long)]
        subspace: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Takeuchi l: coideal subalgebra attached to a module quotient.
    TakeuchiL {
        ws: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long)]
        quotient: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Takeuchi closure of a coideal subalgebra or module quotient.
    Closure {
        ws: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long)]
        subspace: Option<String>,
        #[arg(long)]
        quotient: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Extend the whole workspace along `field[t]/minpoly`.
    Extend {
        ws: PathBuf,
        #[arg(long)]
        minpoly: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Build a catalog entry (or the whole standard corpus) over a field.
    Catalog {
        name: String,
        #[arg(long)]
        field: String,
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with success codes
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn load(path: &Path) -> Result<Workspace> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    wsfile::parse_workspace(&text)
}

fn write_file(path: &Path, content: &str) -> Result<()> {
    std::fs::write(path, content).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn subspace_lines(s: &Subspace) -> Vec<String> {
    let f = s.field();
    s.basis_rows()
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|v| f.value_string(v)).collect();
            format!("  [{}]", cells.join(" "))
        })
        .collect()
}

fn matrix_lines(m: &crate::linalg::ExactMatrix) -> Vec<String> {
    let f = m.field();
    (0..m.rows())
        .map(|i| {
            let cells: Vec<String> = m.row(i).iter().map(|v| f.value_string(v)).collect();
            format!("  [{}]", cells.join(" "))
        })
        .collect()
}

fn subspace_json(s: &Subspace) -> Json {
    json!({
        "ambient": s.ambient_dim(),
        "dim": s.dim(),
        "basis": matrix_rows_json(s.field(), s.basis()),
    })
}

fn print_bool(out: &mut dyn Write, json: bool, command: &str, value: bool) -> Result<()> {
    if json {
        let _ = writeln!(out, "{}", json!({ "command": command, "result": value }));
    } else {
        let _ = writeln!(out, "{value}");
    }
    Ok(())
}

/// Builds a quotient presentation from a named surjective morphism.
fn quotient_from_morphism(ws: &Workspace, name: &str) -> Result<QuotientPresentation> {
    let pi = ws.morphism(name)?;
    if !pi.kind.respects_coalgebra() {
        return Err(Error::ShapeMismatch(format!(
            "morphism `{name}` does not respect comultiplication"
        )));
    }
    let dc = pi.dst.dim();
    if pi.rank() != dc {
        return Err(Error::NotSurjective);
    }
    let section = pi.matrix.right_inverse().ok_or(Error::NotSurjective)?;
    Ok(QuotientPresentation {
        total: pi.src.clone(),
        kernel: pi.matrix.kernel(),
        projection: pi.matrix.clone(),
        section,
        quotient: pi.dst.clone(),
    })
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::Validate { ws, json } => {
            let w = load(&ws)?;
            if json {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({
                        "command": "validate",
                        "field": w.field().to_string(),
                        "objects": w.objects.len(),
                        "morphisms": w.morphisms.len(),
                        "comodules": w.comodules.len(),
                        "subspaces": w.subspaces.len(),
                    })
                );
            } else {
                let _ = writeln!(
                    out,
                    "ok: field {}, {} objects, {} morphisms, {} comodules, {} subspaces",
                    w.field(),
                    w.objects.len(),
                    w.morphisms.len(),
                    w.comodules.len(),
                    w.subspaces.len()
                );
            }
            Ok(())
        }
        Command::Monic { ws, morphism, json } => {
            let w = load(&ws)?;
            let value = dominion::is_monic(w.morphism(&morphism)?)?;
            print_bool(out, json, "monic", value)
        }
        Command::Epic { ws, morphism, json } => {
            let w = load(&ws)?;
            let value = dominion::is_epic(w.morphism(&morphism)?);
            print_bool(out, json, "epic", value)
        }
        Command::Codominion {
            ws,
            morphism,
            json,
            emit,
        } => {
            let w = load(&ws)?;
            let entry = w
                .morphisms
                .get(&morphism)
                .ok_or_else(|| Error::UnknownReference(morphism.clone()))?;
            let r = dominion::codominion(&entry.morphism)?;
            if json {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({
                        "command": "codominion",
                        "kernel_dim": r.kernel.dim(),
                        "kernel": matrix_rows_json(w.field(), r.kernel.basis()),
                        "quotient_dim": r.quotient.quotient_dim(),
                        "is_codominion": r.is_codominion,
                    })
                );
            } else {
                let _ = writeln!(out, "kernel dim = {}", r.kernel.dim());
                if r.kernel.dim() > 0 {
                    let _ = writeln!(out, "kernel basis:");
                    for line in subspace_lines(&r.kernel) {
                        let _ = writeln!(out, "{line}");
                    }
                }
                let _ = writeln!(out, "quotient dim = {}", r.quotient.quotient_dim());
                let _ = writeln!(out, "is_codominion = {}", r.is_codominion);
            }
            if let Some(path) = emit {
                let mut outws = Workspace::new(w.field().clone());
                outws
                    .objects
                    .insert("total".into(), r.quotient.total.clone());
                outws
                    .objects
                    .insert("quotient".into(), r.quotient.quotient.clone());
                outws
                    .objects
                    .insert("target".into(), entry.morphism.dst.clone());
                outws.insert_morphism("projection", r.quotient.projection_morphism())?;
                outws.subspaces.insert("kernel".into(), r.kernel.clone());
                write_file(&path, &wsfile::emit_workspace(&outws))?;
                let _ = writeln!(out, "emitted: {}", path.display());
            }
            Ok(())
        }
        Command::Dominion {
            ws,
            morphism,
            json,
            emit,
        } => {
            let w = load(&ws)?;
            let entry = w
                .morphisms
                .get(&morphism)
                .ok_or_else(|| Error::UnknownReference(morphism.clone()))?;
            let r = dominion::dominion_alg(&entry.morphism)?;
            if json {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({
                        "command": "dominion",
                        "dominion_dim": r.dominion.dim(),
                        "dominion": matrix_rows_json(w.field(), r.dominion.basis()),
                        "relative_square_dim": r.relative_square_dim,
                        "is_dominion": r.is_dominion,
                        "epic": r.is_epic,
                    })
                );
            } else {
                let _ = writeln!(out, "dominion dim = {}", r.dominion.dim());
                let _ = writeln!(out, "dominion basis:");
                for line in subspace_lines(&r.dominion) {
                    let _ = writeln!(out, "{line}");
                }
                let _ = writeln!(out, "relative square dim = {}", r.relative_square_dim);
                let _ = writeln!(out, "is_dominion = {}", r.is_dominion);
                let _ = writeln!(out, "epic = {}", r.is_epic);
            }
            if let Some(path) = emit {
                let mut outws = Workspace::new(w.field().clone());
                outws
                    .objects
                    .insert("source".into(), entry.morphism.src.clone());
                outws
                    .objects
                    .insert("target".into(), entry.morphism.dst.clone());
                outws.insert_morphism("map", entry.morphism.clone())?;
                outws
                    .subspaces
                    .insert("dominion".into(), r.dominion.clone());
                write_file(&path, &wsfile::emit_workspace(&outws))?;
                let _ = writeln!(out, "emitted: {}", path.display());
            }
            Ok(())
        }
        Command::Dominates {
            ws,
            morphism,
            quotient,
            json,
        } => {
            let w = load(&ws)?;
            let f = w.morphism(&morphism)?;
            let q = quotient_from_morphism(&w, &quotient)?;
            let value = dominion::dominates(f, &q)?;
            print_bool(out, json, "dominates", value)
        }
        Command::Equalizer {
            ws,
            morphisms,
            json,
            emit,
        } => {
            let w = load(&ws)?;
            let family: Vec<&Morphism> = morphisms
                .iter()
                .map(|n| w.morphism(n))
                .collect::<Result<_>>()?;
            let r = dominion::equalizer_coalg(&family)?;
            report_subcoalgebra(out, json, "equalizer", &r, emit.as_deref(), w.field())
        }
        Command::LargestSubcoalgebra {
            ws,
            object,
            subspace,
            json,
            emit,
        } => {
            let w = load(&ws)?;
            let obj = w.object(&object)?;
            let c = obj
                .coalgebra()
                .ok_or_else(|| Error::ShapeMismatch(format!("`{object}` has no coalgebra part")))?;
            let v = w.subspace(&subspace)?;
            let e = dominion::largest_subcoalgebra(c, v)?;
            if json {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({ "command": "largest-subcoalgebra", "result": subspace_json(&e) })
                );
            } else {
                let _ = writeln!(out, "dim = {}", e.dim());
                if e.dim() > 0 {
                    let _ = writeln!(out, "basis:");
                    for line in subspace_lines(&e) {
                        let _ = writeln!(out, "{line}");
                    }
                }
            }
            if let Some(path) = emit {
                let mut outws = Workspace::new(w.field().clone());
                outws.objects.insert("ambient".into(), obj.clone());
                outws.subspaces.insert("subcoalgebra".into(), e.clone());
                write_file(&path, &wsfile::emit_workspace(&outws))?;
                let _ = writeln!(out, "emitted: {}", path.display());
            }
            Ok(())
        }
        Command::Coinvariants {
            ws,
            comodule,
            along,
            json,
            emit,
        } => {
            let w = load(&ws)?;
            let v = w.comodule(&comodule)?;
            let coin = match along {
                Some(name) => comodules::coinvariants_along(v, w.morphism(&name)?)?,
                None => {
                    let (over_name, _) = &w.comodules[&comodule];
                    comodules::coinvariants(v, w.object(over_name)?)?
                }
            };
            if json {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({ "command": "coinvariants", "result": subspace_json(&coin) })
                );
            } else {
                let _ = writeln!(out, "dim = {}", coin.dim());
                if coin.dim() > 0 {
                    let _ = writeln!(out, "basis:");
                    for line in subspace_lines(&coin) {
                        let _ = writeln!(out, "{line}");
                    }
                }
            }
            if let Some(path) = emit {
                let mut outws = Workspace::new(w.field().clone());
                outws.subspaces.insert("coinvariants".into(), coin.clone());
                write_file(&path, &wsfile::emit_workspace(&outws))?;
                let _ = writeln!(out, "emitted: {}", path.display());
            }
            Ok(())
        }
        Command::Hom {
            ws,
            src,
            dst,
            json,
            emit,
        } => {
            let w = load(&ws)?;
            let hom = comodules::hom_colinear(w.comodule(&src)?, w.comodule(&dst)?)?;
            if json {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({ "command": "hom", "result": subspace_json(&hom) })
                );
            } else {
                let _ = writeln!(out, "dim = {}", hom.dim());
                if hom.dim() > 0 {
                    let _ = writeln!(out, "basis:");
                    for line in subspace_lines(&hom) {
                        let _ = writeln!(out, "{line}");
                    }
                }
            }
            if let Some(path) = emit {
                let mut outws = Workspace::new(w.field().clone());
                outws.subspaces.insert("hom".into(), hom.clone());
                write_file(&path, &wsfile::emit_workspace(&outws))?;
                let _ = writeln!(out, "emitted: {}", path.display());
            }
            Ok(())
        }
        Command::Injective { ws, comodule, json } => {
            let w = load(&ws)?;
            let witness = comodules::injective_witness(w.comodule(&comodule)?);
            print_bool(out, json, "injective", witness.is_some())
        }
        Command::Split {
            ws,
            morphism,
            side,
            json,
            emit,
        } => {
            let w = load(&ws)?;
            let side = match side.as_str() {
                "right" => Side::Right,
                "left" => Side::Left,
                other => {
                    return Err(Error::BadParams(format!(
                        "side must be left or right, got {other}"
                    )))
                }
            };
            let s = comodules::find_comodule_splitting(w.morphism(&morphism)?, side)?;
            if json {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({
                        "command": "split",
                        "found": s.is_some(),
                        "section": s.as_ref().map(|m| matrix_rows_json(w.field(), &m.matrix)),
                    })
                );
            } else {
                match &s {
                    Some(m) => {
                        let _ = writeln!(out, "splitting: found");
                        for line in matrix_lines(&m.matrix) {
                            let _ = writeln!(out, "{line}");
                        }
                    }
                    None => {
                        let _ = writeln!(out, "splitting: none");
                    }
                }
            }
            if let (Some(path), Some(m)) = (emit, s) {
                let mut outws = Workspace::new(w.field().clone());
                outws.objects.insert("source".into(), m.src.clone());
                outws.objects.insert("target".into(), m.dst.clone());
                outws.insert_morphism("section", m)?;
                write_file(&path, &wsfile::emit_workspace(&outws))?;
                let _ = writeln!(out, "emitted: {}", path.display());
            }
            Ok(())
        }
        Command::Cosemisimple { ws, object, json } => {
            let w = load(&ws)?;
            let obj = w.object(&object)?;
            let c = obj
                .coalgebra()
                .ok_or_else(|| Error::ShapeMismatch(format!("`{object}` has no coalgebra part")))?;
            let value = dominion::is_cosemisimple(c)?;
            print_bool(out, json, "cosemisimple", value)
        }
        Command::TakeuchiR {
            ws,
            object,
            subspace,
            json,
            emit,
        } => {
            let w = load(&ws)?;
            let h = w.object(&object)?;
            let a = CoidealSubalgebra::new(h, w.subspace(&subspace)?)?;
            let r = takeuchi::op_r(&a)?;
            if json {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({
                        "command": "takeuchi-r",
                        "kernel_dim": r.kernel().dim(),
                        "kernel": matrix_rows_json(w.field(), r.kernel().basis()),
                        "quotient_dim": r.quotient_dim(),
                    })
                );
            } else {
                let _ = writeln!(out, "kernel dim = {}", r.kernel().dim());
                if r.kernel().dim() > 0 {
                    let _ = writeln!(out, "kernel basis:");
                    for line in subspace_lines(r.kernel()) {
                        let _ = writeln!(out, "{line}");
                    }
                }
                let _ = writeln!(out, "quotient dim = {}", r.quotient_dim());
            }
            if let Some(path) = emit {
                let mut outws = Workspace::new(w.field().clone());
                outws
                    .objects
                    .insert("total".into(), r.quotient.total.clone());
                outws
                    .objects
                    .insert("quotient".into(), r.quotient.quotient.clone());
                outws.insert_morphism("projection", r.quotient.projection_morphism())?;
                outws.subspaces.insert("kernel".into(), r.kernel().clone());
                write_file(&path, &wsfile::emit_workspace(&outws))?;
                let _ = writeln!(out, "emitted: {}", path.display());
            }
            Ok(())
        }
        Command::TakeuchiL {
            ws,
            object,
            quotient,
            json,
            emit,
        } => {
            let w = load(&ws)?;
            let h = w.object(&object)?;
            let pres = quotient_from_morphism(&w, &quotient)?;
            if pres.total != *h {
                return Err(Error::ShapeMismatch(format!(
                    "`{quotient}` is not a quotient of `{object}`"
                )));
            }
            let q = ModuleQuotientCoalgebra::from_kernel(h, &pres.kernel)?;
            let l = takeuchi::op_l(&q)?;
            if json {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({ "command": "takeuchi-l", "result": subspace_json(l.subspace()) })
                );
            } else {
                let _ = writeln!(out, "subalgebra dim = {}", l.dim());
                let _ = writeln!(out, "basis:");
                for line in subspace_lines(l.subspace()) {
                    let _ = writeln!(out, "{line}");
                }
            }
            if let Some(path) = emit {
                let mut outws = Workspace::new(w.field().clone());
                outws.objects.insert("ambient".into(), h.clone());
                outws
                    .subspaces
                    .insert("subalgebra".into(), l.subspace().clone());
                write_file(&path, &wsfile::emit_workspace(&outws))?;
                let _ = writeln!(out, "emitted: {}", path.display());
            }
            Ok(())
        }
        Command::Closure {
            ws,
            object,
            subspace,
            quotient,
            json,
        } => {
            let w = load(&ws)?;
            let h = w.object(&object)?;
            match (subspace, quotient) {
                (Some(sname), None) => {
                    let a = CoidealSubalgebra::new(h, w.subspace(&sname)?)?;
                    let closed = takeuchi::closure_subalgebra(&a)?;
                    let same = closed.subspace() == a.subspace();
                    if json {
                        let _ = writeln!(
                            out,
                            "{}",
                            json!({
                                "command": "closure",
                                "result": subspace_json(closed.subspace()),
                                "closed": same,
                            })
                        );
                    } else {
                        let _ = writeln!(out, "closure dim = {}", closed.dim());
                        let _ = writeln!(out, "basis:");
                        for line in subspace_lines(closed.subspace()) {
                            let _ = writeln!(out, "{line}");
                        }
                        let _ = writeln!(out, "closed = {same}");
                    }
                    Ok(())
                }
                (None, Some(qname)) => {
                    let pres = quotient_from_morphism(&w, &qname)?;
                    let q = ModuleQuotientCoalgebra::from_kernel(h, &pres.kernel)?;
                    let closed = takeuchi::closure_quotient(&q)?;
                    let same = closed.kernel() == q.kernel();
                    if json {
                        let _ = writeln!(
                            out,
                            "{}",
                            json!({
                                "command": "closure",
                                "kernel_dim": closed.kernel().dim(),
                                "kernel": matrix_rows_json(w.field(), closed.kernel().basis()),
                                "closed": same,
                            })
                        );
                    } else {
                        let _ = writeln!(out, "closure kernel dim = {}", closed.kernel().dim());
                        let _ = writeln!(out, "kernel basis:");
                        for line in subspace_lines(closed.kernel()) {
                            let _ = writeln!(out, "{line}");
                        }
                        let _ = writeln!(out, "closed = {same}");
                    }
                    Ok(())
                }
                _ => Err(Error::BadParams(
                    "closure needs exactly one of --subspace or --quotient".into(),
                )),
            }
        }
        Command::Extend {
            ws,
            minpoly,
            json,
            emit,
        } => {
            let w = load(&ws)?;
            let base = w.field().clone();
            let coeffs = base
                .parse_scalar("0")
                .and_then(|_| parse_minpoly(&base, &minpoly))?;
            let ext = Field::extension(&base, &coeffs)?;
            let mut outws = Workspace::new(ext.clone());
            for (name, obj) in &w.objects {
                outws
                    .objects
                    .insert(name.clone(), extension::extend_object(obj, &ext)?);
            }
            for (name, s) in &w.subspaces {
                outws
                    .subspaces
                    .insert(name.clone(), extension::extend_subspace(s, &ext)?);
            }
            for (name, m) in &w.morphisms {
                outws.insert_morphism(name, extension::extend_morphism(&m.morphism, &ext)?)?;
            }
            for (name, (_, v)) in &w.comodules {
                outws.insert_comodule(name, extension::extend_comodule(v, &ext)?)?;
            }
            if json {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({
                        "command": "extend",
                        "field": ext.to_string(),
                        "objects": outws.objects.len(),
                        "morphisms": outws.morphisms.len(),
                        "comodules": outws.comodules.len(),
                        "subspaces": outws.subspaces.len(),
                    })
                );
            } else {
                let _ = writeln!(out, "field: {ext}");
                let _ = writeln!(
                    out,
                    "extended {} objects, {} morphisms, {} comodules, {} subspaces",
                    outws.objects.len(),
                    outws.morphisms.len(),
                    outws.comodules.len(),
                    outws.subspaces.len()
                );
            }
            if let Some(path) = emit {
                write_file(&path, &wsfile::emit_workspace(&outws))?;
                let _ = writeln!(out, "emitted: {}", path.display());
            }
            Ok(())
        }
        Command::Catalog {
            name,
            field,
            params,
            json,
            emit,
        } => {
            let f = Field::parse(&field)?;
            let mut map = BTreeMap::new();
            for p in params {
                let (k, v) = p.split_once('=').ok_or_else(|| {
                    Error::BadParams(format!("parameter `{p}` is not of the form key=value"))
                })?;
                map.insert(k.to_string(), v.to_string());
            }
            let built = catalog::build(&f, &name, &map)?;
            let outws = wsfile::workspace_from_catalog(&f, &built)?;
            if json {
                let objects: Map<String, Json> = built
                    .objects
                    .iter()
                    .map(|(n, o)| {
                        (
                            n.clone(),
                            json!({ "kind": o.kind().to_string(), "dim": o.dim() }),
                        )
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    "{}",
                    json!({
                        "command": "catalog",
                        "field": f.to_string(),
                        "objects": objects,
                        "morphisms": built.morphisms.len(),
                    })
                );
            } else {
                for (n, o) in &outws.objects {
                    let _ = writeln!(out, "object {n}: {}, dim {}", o.kind(), o.dim());
                }
                for (n, m) in &outws.morphisms {
                    let _ = writeln!(
                        out,
                        "morphism {n}: {}, {} -> {}",
                        m.morphism.kind, m.from, m.to
                    );
                }
            }
            if let Some(path) = emit {
                write_file(&path, &wsfile::emit_workspace(&outws))?;
                let _ = writeln!(out, "emitted: {}", path.display());
            }
            Ok(())
        }
    }
}

fn report_subcoalgebra(
    out: &mut dyn Write,
    json: bool,
    command: &str,
    r: &dominion::SubcoalgebraResult,
    emit: Option<&Path>,
    field: &Field,
) -> Result<()> {
    if json {
        let _ = writeln!(
            out,
            "{}",
            json!({ "command": command, "result": subspace_json(&r.subspace) })
        );
    } else {
        let _ = writeln!(out, "dim = {}", r.subspace.dim());
        if r.subspace.dim() > 0 {
            let _ = writeln!(out, "basis:");
            for line in subspace_lines(&r.subspace) {
                let _ = writeln!(out, "{line}");
            }
        }
    }
    if let Some(path) = emit {
        let mut outws = Workspace::new(field.clone());
        outws
            .objects
            .insert("ambient".into(), r.inclusion.dst.clone());
        outws
            .objects
            .insert("subcoalgebra".into(), r.inclusion.src.clone());
        outws.insert_morphism("inclusion", r.inclusion.clone())?;
        outws
            .subspaces
            .insert("subspace".into(), r.subspace.clone());
        write_file(path, &wsfile::emit_workspace(&outws))?;
        let _ = writeln!(out, "emitted: {}", path.display());
    }
    Ok(())
}

fn parse_minpoly(base: &Field, spec: &str) -> Result<Vec<crate::scalars::Scalar>> {
    // reuse the field-spec parser by assembling `base[t]/spec` and taking the
    // polynomial back apart is wasteful; parse the polynomial directly
    let probe = Field::parse(&format!("{base}[t]/{spec}"))?;
    let (_, coeffs) = probe.extension_parts().expect("just built an extension");
    Ok(coeffs.iter().map(|v| base.scalar(v.clone())).collect())
}
