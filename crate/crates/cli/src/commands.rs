use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use sha2::{Digest, Sha256};

use d2kit_core::complex::{d2_split, ChainComplex, SplitOutcome};
use d2kit_core::error::Error;
use d2kit_core::format::{
    parse_certificate, parse_complex, parse_presentation, parse_script, write_certificate,
    write_complex,
};
use d2kit_core::fox::{fundamental_identity_holds, presentation_complex, relation_module_rank};
use d2kit_core::group::{catalog, MarkedGroup};
use d2kit_core::moves::{apply_moves, reduce_d2, schanuel_compare, CompareOutcome};
use d2kit_core::report::RunReport;

use crate::Command;

pub struct Outcome {
    pub report: RunReport,
    /// Raw output replacing the report, e.g. a complex written to stdout.
    pub stdout: Option<String>,
}

impl From<RunReport> for Outcome {
    fn from(report: RunReport) -> Self {
        Outcome {
            report,
            stdout: None,
        }
    }
}

fn read_input(path: &Path, report: &mut RunReport) -> Result<String> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    report.input(path.display().to_string(), hex::encode(Sha256::digest(&bytes)));
    String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))
}

fn write_output(path: &Path, text: &str, report: &mut RunReport) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?;
    report.value("wrote", path.display());
    Ok(())
}

enum Input {
    Presentation(MarkedGroup),
    Complex(ChainComplex),
}

fn first_word(text: &str) -> &str {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("")
}

fn parse_input(text: &str) -> Result<Input> {
    Ok(match first_word(text) {
        "complex" => Input::Complex(parse_complex(text)?),
        _ => Input::Presentation(parse_presentation(text)?),
    })
}

/// Runs a command; `Err` means malformed input or an unusable request.
pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Catalog => Ok(cmd_catalog().into()),
        Command::Build { presentation, out } => cmd_build(presentation, out.as_deref()),
        Command::Verify { file } => cmd_verify(file).map(Outcome::from),
        Command::Invariants { file } => cmd_invariants(file).map(Outcome::from),
        Command::Reduce { complex, out } => cmd_reduce(complex, out.as_deref()).map(Outcome::from),
        Command::Compare {
            first,
            second,
            budget,
            seed,
            out,
        } => cmd_compare(first, second, *budget, *seed, out.as_deref()).map(Outcome::from),
        Command::Apply {
            complex,
            script,
            out,
        } => cmd_apply(complex, script, out.as_deref()).map(Outcome::from),
    }
}

fn cmd_catalog() -> RunReport {
    let mut report = RunReport::new("catalog");
    for e in catalog() {
        let p = e.marked.presentation();
        report.value(
            e.family.to_string(),
            format!(
                "order {}; presentation {}; deficiency {}; chi {}; known Def(G) {}",
                e.order(),
                p,
                e.deficiency(),
                e.euler_characteristic(),
                e.family.known_deficiency()
            ),
        );
    }
    report
}

fn cmd_build(path: &Path, out: Option<&Path>) -> Result<Outcome> {
    let mut report = RunReport::new(format!("build {}", path.display()));
    let text = read_input(path, &mut report)?;
    let marked = parse_presentation(&text)?;
    let complex = presentation_complex(&marked);
    let body = write_complex(&complex);
    let Some(out) = out else {
        return Ok(Outcome {
            report,
            stdout: Some(body),
        });
    };
    report.check(
        "fundamental identity",
        fundamental_identity_holds(&marked),
        "sum of derivatives times (x - 1) equals r - 1",
    );
    report.add_diagnostics(&complex.validate());
    write_output(out, &body, &mut report)?;
    Ok(report.into())
}

fn verify_complex(c: &ChainComplex, report: &mut RunReport) -> Result<()> {
    let diag = c.validate();
    report.add_diagnostics(&diag);
    if !diag.all_pass() {
        return Ok(());
    }
    let h = c.integer_homology(false)?;
    report.homology(&h);
    let h0 = h.degree(0).expect("degree 0");
    report.check("H0 = Z", h0.is_integers(), h0.to_string());
    let h1 = h.degree(1).expect("degree 1");
    report.check("H1 = 0", h1.is_zero(), h1.to_string());
    if c.is_augmented() {
        let a = c.integer_homology(true)?;
        let exact = [-1, 0].iter().all(|&k| a.degree(k).expect("degree").is_zero());
        report.check(
            "augmentation exact",
            exact,
            if exact { "coker and H0 of the augmented complex vanish" } else { "augmented complex not exact in degrees -1, 0" },
        );
    }
    if c.rank(3) > 0 {
        let outcome = d2_split(c)?;
        report.check("d2 split", matches!(outcome, SplitOutcome::Split(_)), outcome.label());
    }
    Ok(())
}

fn cmd_verify(path: &Path) -> Result<RunReport> {
    let mut report = RunReport::new(format!("verify {}", path.display()));
    let text = read_input(path, &mut report)?;
    match first_word(&text) {
        "certificate" => {
            let cert = parse_certificate(&text)?;
            report.add_diagnostics(&cert.verify());
        }
        _ => match parse_input(&text)? {
            Input::Complex(c) => verify_complex(&c, &mut report)?,
            Input::Presentation(m) => {
                report.check("fundamental identity", fundamental_identity_holds(&m), "checked exactly");
                verify_complex(&presentation_complex(&m), &mut report)?;
            }
        },
    }
    Ok(report)
}

fn cmd_invariants(path: &Path) -> Result<RunReport> {
    let mut report = RunReport::new(format!("invariants {}", path.display()));
    let text = read_input(path, &mut report)?;
    let (c, presentation_counts, relation_rank) = match parse_input(&text)? {
        Input::Presentation(m) => {
            let p = m.presentation();
            let counts = (p.generator_count(), p.relator_count());
            (presentation_complex(&m), Some(counts), relation_module_rank(&m))
        }
        Input::Complex(c) => {
            let n = c.group().order();
            let rel = c.rank(1) * n - c.boundary(1).integerize().rank();
            let counts = (c.rank(0) == 1 && c.rank(3) == 0).then(|| (c.rank(1), c.rank(2)));
            (c, counts, rel)
        }
    };
    let diag = c.validate();
    if !diag.all_pass() {
        report.add_diagnostics(&diag);
        return Ok(report);
    }
    let r = c.ranks();
    report.value("ranks", format!("{} {} {} {}", r[0], r[1], r[2], r[3]));
    report.value("group order", c.group().order());
    let chi = c.euler_char();
    report.value("chi", chi);
    if c.rank(3) == 0 {
        report.value("pi2 rank", c.pi2_lattice()?.len());
    }
    report.value("relation module rank", relation_rank);
    report.check("chi >= 1", chi >= 1, format!("chi = {chi}"));
    if let Some((g, rel)) = presentation_counts {
        let def = g as i64 - rel as i64;
        report.value("deficiency", def);
        report.check(
            "chi = 1 - (g - r)",
            chi == 1 - def,
            format!("g = {g}, r = {rel}, 1 - (g - r) = {}", 1 - def),
        );
    }
    Ok(report)
}

fn cmd_reduce(path: &Path, out: Option<&Path>) -> Result<RunReport> {
    let mut report = RunReport::new(format!("reduce {}", path.display()));
    let text = read_input(path, &mut report)?;
    let x = parse_complex(&text)?;
    match reduce_d2(&x) {
        Ok((k, cert)) => {
            report.check("d2 split", true, if x.rank(3) == 0 { "no 3-cells" } else { "Split" });
            report.add_diagnostics(&cert.verify());
            let r = k.ranks();
            report.value("ranks", format!("{} {} {} {}", r[0], r[1], r[2], r[3]));
            report.value("chi", k.euler_char());
            report.value("moves", cert.log.len());
            if let Some(out) = out {
                write_output(out, &write_complex(&k), &mut report)?;
                let cert_path = out.with_extension(match out.extension() {
                    Some(e) => format!("{}.cert", e.to_string_lossy()),
                    None => "cert".into(),
                });
                write_output(&cert_path, &write_certificate(&cert), &mut report)?;
            }
        }
        Err(Error::NotInjective) => report.check("d2 split", false, "NotInjective"),
        Err(Error::NoSplit) => report.check("d2 split", false, "NoSplit"),
        Err(Error::Precondition(msg)) => report.check("preconditions", false, msg),
        Err(e) => bail!(e),
    }
    Ok(report)
}

fn cmd_compare(
    first: &Path,
    second: &Path,
    budget: usize,
    seed: u64,
    out: Option<&Path>,
) -> Result<RunReport> {
    let mut report = RunReport::new(format!(
        "compare {} {} --budget {budget} --seed {seed}",
        first.display(),
        second.display()
    ));
    let a = parse_complex(&read_input(first, &mut report)?)?;
    let b = parse_complex(&read_input(second, &mut report)?)?;
    match schanuel_compare(&a, &b, budget, seed) {
        Ok(CompareOutcome::Equivalent(cert)) => {
            report.check("equivalence", true, "certificate found");
            report.add_diagnostics(&cert.verify());
            if let Some(out) = out {
                write_output(out, &write_certificate(&cert), &mut report)?;
            }
        }
        Ok(CompareOutcome::Unknown { candidates_tried }) => {
            report.check(
                "equivalence",
                false,
                format!("Unknown after {candidates_tried} candidates"),
            );
        }
        Err(Error::Precondition(msg)) => report.check("preconditions", false, msg),
        Err(e) => bail!(e),
    }
    Ok(report)
}

fn cmd_apply(complex: &Path, script: &Path, out: Option<&Path>) -> Result<RunReport> {
    let mut report = RunReport::new(format!("apply {} {}", complex.display(), script.display()));
    let c = parse_complex(&read_input(complex, &mut report)?)?;
    let moves = parse_script(&read_input(script, &mut report)?, c.group())?;
    match apply_moves(&c, &moves) {
        Ok((end, log)) => {
            for (i, e) in log.entries.iter().enumerate() {
                let b = e.before;
                let a = e.after;
                report.value(
                    format!("move {i}"),
                    format!(
                        "{}: {} {} {} {} -> {} {} {} {}",
                        e.mv, b[0], b[1], b[2], b[3], a[0], a[1], a[2], a[3]
                    ),
                );
            }
            report.check("replay", log.replay().is_ok(), format!("{} moves", log.len()));
            report.add_diagnostics(&end.validate());
            if let Some(out) = out {
                write_output(out, &write_complex(&end), &mut report)?;
            }
        }
        Err(e @ Error::Move { .. }) => report.check("apply", false, e.to_string()),
        Err(e) => bail!(e),
    }
    Ok(report)
}
