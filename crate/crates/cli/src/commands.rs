use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde_json::json;

use d2kit_core::chain::{
    attach_three_cells, certify_chain_equivalence, presentation_complex, quotient_by_split_summand, read_acx,
    split_test, stabilize_wedge, write_acx, AlgebraicComplex, Boundary, EquivalenceOutcome, GroupSpec,
};
use d2kit_core::coset::{
    find_normal_generator, group_model, todd_coxeter, NormalGeneratorOptions, NormalGeneratorOutcome,
};
use d2kit_core::fp::Presentation;
use d2kit_core::group_ring::{GroupRingElement, GroupRingMatrix};
use d2kit_core::invariants::analyze;

use crate::args::{Cli, Command, Format};
use crate::corpus::{default_dir, fp_files, read_text, CorpusEntry};
use crate::report::{analysis_json, render_jsonl, render_table, report_rows};
use crate::{input_err, CliError};

type Out<'a> = &'a mut dyn Write;

fn emit(out: Out, s: &str) -> Result<(), CliError> {
    out.write_all(s.as_bytes()).map_err(input_err)
}

fn load_presentation(path: &Path) -> Result<Presentation, CliError> {
    read_text(path)?
        .parse()
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_complex(path: &Path) -> Result<AlgebraicComplex, CliError> {
    read_acx(&read_text(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn save_complex(f: &AlgebraicComplex, dest: Option<&PathBuf>, out: Out, err: Out) -> Result<(), CliError> {
    let text = write_acx(f);
    match dest {
        Some(p) => {
            fs::write(p, text).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
            let _ = writeln!(err, "wrote {}", p.display());
            Ok(())
        }
        None => emit(out, &text),
    }
}

pub fn dispatch(cli: &Cli, out: Out, err: Out) -> Result<(), CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Analyze { file, check } => cmd_analyze(file, *check, cli, out),
        Command::Order { file } => {
            let p = load_presentation(file)?;
            let order = todd_coxeter(&p, g.max_cosets).order();
            match g.format {
                Format::Json => emit(out, &format!("{}\n", json!({"order": order}))),
                Format::Text => emit(
                    out,
                    &match order {
                        Some(n) => format!("order: {n}\n"),
                        None => format!("order: unknown (no closed table within {} cosets)\n", g.max_cosets),
                    },
                ),
            }
        }
        Command::NormalGen {
            file,
            max_len,
            search_non_perfect,
        } => {
            let p = load_presentation(file)?;
            let mut opts = NormalGeneratorOptions::new(*max_len, g.max_cosets);
            opts.search_non_perfect = *search_non_perfect;
            let s = find_normal_generator(&p, opts);
            let word = match &s.outcome {
                NormalGeneratorOutcome::Found(w) => Some(p.display_word(w)),
                NormalGeneratorOutcome::NotFoundWithinBounds => None,
            };
            let warnings: Vec<String> = s.warnings.iter().map(|w| format!("{w:?}")).collect();
            match g.format {
                Format::Json => emit(
                    out,
                    &format!(
                        "{}\n",
                        json!({"normal_generator": word, "candidates_tested": s.candidates_tested, "warnings": warnings})
                    ),
                ),
                Format::Text => {
                    let mut text = format!(
                        "normal_generator: {}\ncandidates_tested: {}\n",
                        word.as_deref().unwrap_or("not found within bounds"),
                        s.candidates_tested
                    );
                    for w in warnings {
                        text.push_str(&format!("warning: {w}\n"));
                    }
                    emit(out, &text)
                }
            }
        }
        Command::Chain { file, finite, out: dest } => {
            let p = load_presentation(file)?;
            let group = if *finite {
                let m = group_model(&p, g.max_cosets).map_err(|e| CliError::Input(format!("--finite: {e}")))?;
                GroupSpec::Finite(Arc::new(m))
            } else {
                GroupSpec::Symbolic
            };
            let f = presentation_complex(&p, &group).map_err(input_err)?;
            save_complex(&f, dest.as_ref(), out, err)
        }
        Command::Wedge { file, n, out: dest } => {
            let f = stabilize_wedge(&load_complex(file)?, *n).map_err(input_err)?;
            save_complex(&f, dest.as_ref(), out, err)
        }
        Command::Attach {
            file,
            slot,
            entries,
            out: dest,
        } => {
            let f = load_complex(file)?;
            let d3 = match entries {
                Some(text) => parse_boundary(&f, text)?,
                None => inclusion_boundary(&f, *slot)?,
            };
            let g3 = attach_three_cells(&f, &d3).map_err(input_err)?;
            save_complex(&g3, dest.as_ref(), out, err)
        }
        Command::Split { file } => {
            let r = split_test(&load_complex(file)?).map_err(input_err)?;
            match g.format {
                Format::Json => emit(
                    out,
                    &format!(
                        "{}\n",
                        json!({
                            "splits": r.splits,
                            "retraction": r.retraction.as_ref().map(|m| m.to_string()),
                            "obstruction": r.obstruction.as_ref().map(|o| format!("{o:?}")),
                        })
                    ),
                ),
                Format::Text => {
                    let mut text = format!("splits: {}\n", r.splits);
                    if let Some(m) = &r.retraction {
                        text.push_str(&format!("retraction: {}\n", m.to_string().trim_end()));
                    }
                    if let Some(o) = &r.obstruction {
                        text.push_str(&format!("obstruction: {o:?}\n"));
                    }
                    emit(out, &text)
                }
            }
        }
        Command::Quotient { file, out: dest } => {
            let f = load_complex(file)?;
            let r = split_test(&f).map_err(input_err)?;
            let q = quotient_by_split_summand(&f, &r).map_err(input_err)?;
            save_complex(&q, dest.as_ref(), out, err)
        }
        Command::CertifyEquiv { source, target } => {
            let (a, b) = (load_complex(source)?, load_complex(target)?);
            let outcome = certify_chain_equivalence(&a, &b, g.budget).map_err(input_err)?;
            let (kind, detail, calls) = match &outcome {
                EquivalenceOutcome::Certificate(c) => (
                    "certificate",
                    format!("{:?}, verified", c.method),
                    Some(c.solver_calls),
                ),
                EquivalenceOutcome::NotEquivalent(m) => ("not-equivalent", format!("{m:?}"), None),
                EquivalenceOutcome::Unknown { reason, solver_calls } => ("unknown", reason.clone(), Some(*solver_calls)),
            };
            match g.format {
                Format::Json => emit(
                    out,
                    &format!("{}\n", json!({"outcome": kind, "detail": detail, "solver_calls": calls})),
                ),
                Format::Text => {
                    let mut text = format!("outcome: {kind}\ndetail: {detail}\n");
                    if let Some(c) = calls {
                        text.push_str(&format!("solver_calls: {c}\n"));
                    }
                    emit(out, &text)
                }
            }
        }
        Command::Report { dir, sidecar } => {
            let dir = default_dir(dir.as_deref());
            let rows = report_rows(&fp_files(&dir)?, g.budget, g.max_cosets);
            let jsonl = render_jsonl(&rows);
            let side = sidecar.clone().unwrap_or_else(|| dir.join("report.jsonl"));
            fs::write(&side, &jsonl).map_err(|e| CliError::Input(format!("{}: {e}", side.display())))?;
            match g.format {
                Format::Json => emit(out, &jsonl),
                Format::Text => emit(out, &render_table(&rows)),
            }
        }
        Command::Check { dir } => cmd_check(&default_dir(dir.as_deref()), cli, out),
    }
}

fn cmd_analyze(file: &Path, check: bool, cli: &Cli, out: Out) -> Result<(), CliError> {
    let g = &cli.global;
    let entry = CorpusEntry::load(file)?;
    let report = analyze(&entry.presentation, g.budget, g.max_cosets).map_err(input_err)?;
    match g.format {
        Format::Json => emit(out, &format!("{}\n", analysis_json(&report)))?,
        Format::Text => emit(out, &report.to_string())?,
    }
    if check {
        if entry.expected.is_none() {
            return Err(CliError::Input(format!("{}: no .expect file", entry.path.display())));
        }
        let mismatches = entry.mismatches(&report);
        if !mismatches.is_empty() {
            return Err(CliError::Mismatch(mismatches));
        }
    }
    Ok(())
}

fn cmd_check(dir: &Path, cli: &Cli, out: Out) -> Result<(), CliError> {
    let g = &cli.global;
    let (mut failures, mut errors) = (Vec::new(), 0);
    let mut text = String::new();
    for path in fp_files(dir)? {
        let name = path.file_name().unwrap_or_default().to_string_lossy().into_owned();
        let entry = match CorpusEntry::load(&path) {
            Ok(e) => e,
            Err(e) => {
                errors += 1;
                text.push_str(&format!("ERROR {name}: {e}\n"));
                continue;
            }
        };
        if entry.expected.is_none() {
            continue;
        }
        match analyze(&entry.presentation, g.budget, g.max_cosets) {
            Ok(r) => {
                let ms = entry.mismatches(&r);
                if ms.is_empty() {
                    text.push_str(&format!("PASS {name}\n"));
                } else {
                    text.push_str(&format!("FAIL {name}: {}\n", ms.join("; ")));
                    failures.extend(ms.into_iter().map(|m| format!("{name}: {m}")));
                }
            }
            Err(e) => {
                errors += 1;
                text.push_str(&format!("ERROR {name}: {e}\n"));
            }
        }
    }
    emit(out, &text)?;
    if !failures.is_empty() {
        Err(CliError::Mismatch(failures))
    } else if errors > 0 {
        Err(CliError::Input(format!("{errors} file(s) could not be analyzed")))
    } else {
        Ok(())
    }
}

/// One 3-cell whose boundary is the 2-cell `slot` (default: the last).
fn inclusion_boundary(f: &AlgebraicComplex, slot: Option<usize>) -> Result<Boundary, CliError> {
    let f2 = f.rank(2);
    let slot = slot.unwrap_or(f2.saturating_sub(1));
    if slot >= f2 {
        return Err(CliError::Input(format!("slot {slot} out of range: the complex has {f2} 2-cells")));
    }
    Ok(match f.model() {
        Some(m) => {
            let mut col = vec![vec![GroupRingElement::zero(m)]; f2];
            col[slot] = vec![GroupRingElement::one(m)];
            Boundary::Matrix(GroupRingMatrix::from_rows(m, 1, col).map_err(input_err)?)
        }
        None => {
            let mut a = d2kit_core::linalg::IntMatrix::zeros(f2, 1);
            a[(slot, 0)] = 1.into();
            Boundary::ExponentOnly(a)
        }
    })
}

/// Parses `d3` entries by reading them as the `[d3]` section of a 3-complex.
fn parse_boundary(f: &AlgebraicComplex, entries: &str) -> Result<Boundary, CliError> {
    let tokens = entries.split_whitespace().count();
    let f2 = f.rank(2);
    if f2 == 0 || !tokens.is_multiple_of(f2) {
        return Err(CliError::Input(format!("{tokens} entries do not fill {f2} rows")));
    }
    let mut text = write_acx(f);
    let ranks: Vec<String> = f.ranks().iter().map(|r| r.to_string()).collect();
    let old = format!("[ranks]\n{}\n", ranks.join(" "));
    let new = format!("[ranks]\n{} {}\n", ranks.join(" "), tokens / f2);
    text = text.replacen(&old, &new, 1);
    text.push_str(&format!("[d3]\n{entries}\n"));
    let g = read_acx(&text).map_err(|e| CliError::Input(format!("--entries: {e}")))?;
    Ok(g.boundary(3).expect("three boundaries").clone())
}
