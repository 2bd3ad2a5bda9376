//! `hopfgal verify FILE --mode M`.

use std::path::Path;

use anyhow::Context;
use hopfgal::comodule::ComoduleAlgebra;
use hopfgal::homotopy::{verify_homotopy_witness, verify_poly_galois, PolyComoduleAlgebra};
use hopfgal::json::{cocycle_from_json, comodule_from_json, hopf_from_json, pairing_from_json, read_json_file};
use hopfgal::report::Report;
use hopfgal::twisting::{verify_cocycle, verify_skew_pairing};
use hopfgal::Error;
use serde_json::{json, Value};

use crate::{document, print_json, Outcome};

#[derive(clap::ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Hopf,
    Comodule,
    Cocycle,
    Pairing,
    Witness,
}

impl Mode {
    fn as_str(self) -> &'static str {
        match self {
            Mode::Hopf => "hopf",
            Mode::Comodule => "comodule",
            Mode::Cocycle => "cocycle",
            Mode::Pairing => "pairing",
            Mode::Witness => "witness",
        }
    }
}

/// The object itself, or the `object` member of an `example` document.
fn load(path: &Path) -> anyhow::Result<Value> {
    let v = read_json_file(path)?;
    Ok(match v.get("object") {
        Some(o) if v.get("tool").is_some() => o.clone(),
        _ => v,
    })
}

fn name_of(path: &Path) -> String {
    path.file_stem().map_or_else(|| "object".into(), |s| s.to_string_lossy().into_owned())
}

/// Errors that are an answer about the object rather than a problem with
/// the input.
fn is_verdict(e: &Error) -> bool {
    matches!(
        e,
        Error::NonUnitDeterminant(_)
            | Error::NoAntipode(_)
            | Error::NotConvInvertible(_)
            | Error::IllDefined(_)
            | Error::SingularMatrix
    )
}

fn witness_report(file: &Path, e0: Option<&Path>, e1: Option<&Path>) -> anyhow::Result<Report> {
    let (Some(e0), Some(e1)) = (e0, e1) else {
        anyhow::bail!("witness mode needs --endpoint0 and --endpoint1");
    };
    let dir = file.parent();
    let w: PolyComoduleAlgebra = comodule_from_json(&load(file)?, &name_of(file), dir)?;
    let a0: ComoduleAlgebra = comodule_from_json(&load(e0)?, &name_of(e0), e0.parent())?;
    let a1: ComoduleAlgebra = comodule_from_json(&load(e1)?, &name_of(e1), e1.parent())?;
    let mut rep = Report::new();
    match verify_poly_galois(&w) {
        Ok(v) => {
            let ok = v.is_galois();
            rep.extend("axioms", v.axioms);
            rep.record("coinvariants = k[t]", (!v.coinvariants_equal_base).then(|| format!("rank {}", v.coinvariant_rank)));
            if ok {
                rep.pass("canonical map invertible", v.determinant.map(|d| format!("det = {d}")));
            }
        }
        Err(e) if is_verdict(&e) => rep.fail("canonical map invertible", e.to_string()),
        Err(e) => return Err(e.into()),
    }
    if rep.passed() {
        rep.extend("endpoints", verify_homotopy_witness(&w, &a0, &a1)?.report());
    }
    Ok(rep)
}

fn build_report(file: &Path, mode: Mode, e0: Option<&Path>, e1: Option<&Path>) -> anyhow::Result<Report> {
    let dir = file.parent();
    let rep = match mode {
        Mode::Hopf => hopf_from_json(&load(file)?, &name_of(file))?.verify(),
        Mode::Comodule => {
            let ca: ComoduleAlgebra = comodule_from_json(&load(file)?, &name_of(file), dir)?;
            let mut rep = ca.hopf().verify();
            rep.checks.iter_mut().for_each(|c| c.name = format!("hopf.{}", c.name));
            rep.extend("", ca.verify());
            rep
        }
        Mode::Cocycle => {
            let (form, h) = cocycle_from_json(&load(file)?, dir)?;
            verify_cocycle(&form, &h)
        }
        Mode::Pairing => {
            let (form, u, a) = pairing_from_json(&load(file)?, dir)?;
            verify_skew_pairing(&form, &u, &a)
        }
        Mode::Witness => witness_report(file, e0, e1)?,
    };
    Ok(rep)
}

pub fn run(file: &Path, mode: Mode, e0: Option<&Path>, e1: Option<&Path>) -> Result<(), Outcome> {
    let rep = build_report(file, mode, e0, e1).with_context(|| format!("verify {}", file.display()))?;
    let body = json!({
        "mode": mode.as_str(),
        "file": file.display().to_string(),
        "report": rep,
    });
    print_json(&document("verify", rep.status(), body))?;
    if rep.passed() {
        Ok(())
    } else {
        Err(Outcome::Failed)
    }
}
