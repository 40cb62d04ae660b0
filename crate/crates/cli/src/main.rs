//! `spinstack` — exact computations for fermionic symmetry data from the
//! command line.
//!
//! Subcommands: `cohomology`, `steenrod`, `shift-orbit`, `condense`,
//! `consistency`, `verify`. Exit codes: 0 on success, 1 when a verification
//! check fails, 2 on input errors. Output is deterministic: identical
//! inputs (and seed) produce byte-identical JSON.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use spinstack_core::cochain::{bockstein, steenrod_sq, BarComplex, CohomologyClass, DEFAULT_ROW_CAP};
use spinstack_core::consistency::{consistent_set, crosscheck_equivalence};
use spinstack_core::group::{build_group, FiniteGroup};
use spinstack_core::io;
use spinstack_core::premodular::{
    category_from_label, condense, deligne_product, identify, AlgebraObject,
};
use spinstack_core::supercoh::{orbit_period, validate_cocycle};
use spinstack_core::verify::{full_suite, paper_suite, property_suite, render_summary};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "spinstack",
    version,
    about = "Exact cochain-level toolkit: group cohomology over F2, supercohomology shift orbits, Spin(n)1 condensation, and the spin consistency solver"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the report here (atomically) instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Cap on coboundary-matrix rows before operations refuse to materialize.
    #[arg(long, global = true, default_value_t = DEFAULT_ROW_CAP)]
    row_cap: usize,
    /// Seed for the randomized property checks.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// dim H^n(BG; F2), with optional class representatives.
    Cohomology {
        /// Group preset (z2, z4, z2xz2, zN, s3, s4, d8, q8) or @group.json.
        #[arg(long)]
        group: String,
        #[arg(long)]
        degree: usize,
        /// Also emit a basis of class representatives.
        #[arg(long)]
        basis: bool,
    },
    /// Sq^k of a named class, with the Bockstein cross-check for k = 1.
    Steenrod {
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: usize,
        /// Class selector: x, x^2, y, sums like x^2+y, b2:<i>, 0, or @cochain.json.
        #[arg(long)]
        class: String,
    },
    /// Orbit of a supercohomology cocycle bundle under stack-and-condense.
    ShiftOrbit {
        /// Bundle file: {"group", "kappa", "alpha", "beta", "gamma"?}.
        #[arg(long)]
        bundle: PathBuf,
    },
    /// Condense the composite boson in SO(n)1 ⊠ Spin(m)1 and identify the result.
    Condense {
        /// Left factor, e.g. so:3.
        #[arg(long)]
        left: String,
        /// Right factor, e.g. spin:5.
        #[arg(long)]
        right: String,
    },
    /// Which Spin(n)1 admit (n1, n2) on the (G, κ) background; the ℤ/16 subgroup.
    Consistency {
        #[arg(long)]
        group: String,
        /// κ selector: 0, x^2, y, sums, b2:<i>, or @cochain.json.
        #[arg(long)]
        kappa: String,
    },
    /// Run the named verification suites; nonzero exit on any failure.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Paper,
    Properties,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load_group(selector: &str) -> Result<Arc<FiniteGroup>> {
    if let Some(path) = selector.strip_prefix('@') {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading group file {path}"))?;
        Ok(Arc::new(io::group_from_json(&text)?))
    } else {
        Ok(build_group(selector)?)
    }
}

fn load_class(cx: &BarComplex, selector: &str) -> Result<CohomologyClass> {
    if let Some(path) = selector.strip_prefix('@') {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading cochain file {path}"))?;
        let file: io::CochainFile = serde_json::from_str(&text)
            .map_err(|e| anyhow!("line {}, column {}: {e}", e.line(), e.column()))?;
        let cochain = io::cochain_from_file(&file, cx.group())?;
        Ok(CohomologyClass::new(cochain)?)
    } else if selector == "x" {
        Ok(CohomologyClass::new(cx.generator_x()?)?)
    } else {
        Ok(cx.named_class(selector)?)
    }
}

/// Write atomically (temp file + rename) or print to stdout. No partial
/// output ever lands at the target path.
fn emit(output: &OutputArgs, content: &str) -> Result<()> {
    match &output.out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => {
            let dir = path
                .parent()
                .filter(|p| !p.as_os_str().is_empty())
                .unwrap_or(Path::new("."));
            let mut tmp = tempfile::NamedTempFile::new_in(dir)
                .with_context(|| format!("creating temp file next to {}", path.display()))?;
            std::io::Write::write_all(&mut tmp, content.as_bytes())?;
            tmp.persist(path)
                .with_context(|| format!("renaming into {}", path.display()))?;
            Ok(())
        }
    }
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

/// Ok(true) means a verification check failed (exit 1); input problems
/// surface as Err (exit 2).
fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Cohomology {
            group,
            degree,
            basis,
        } => {
            let g = load_group(group)?;
            let cx = BarComplex::with_row_cap(g.clone(), cli.output.row_cap);
            let dim = cx.cohomology_dim(*degree)?;
            let mut report = json!({
                "group": io::group_ref(&g),
                "degree": degree,
                "dim": dim,
            });
            if *basis {
                let reps = cx.cohomology_basis(*degree)?;
                report["basis"] = Value::Array(
                    reps.iter()
                        .map(|c| serde_json::to_value(io::cochain_to_file(c)).unwrap())
                        .collect(),
                );
            }
            let text = match cli.output.format {
                Format::Json => render_json(&report),
                Format::Text => format!("dim H^{degree}(B{}; F2) = {dim}\n", g.name),
            };
            emit(&cli.output, &text)?;
            Ok(false)
        }

        Command::Steenrod { group, k, class } => {
            let g = load_group(group)?;
            let cx = BarComplex::with_row_cap(g.clone(), cli.output.row_cap);
            let z = load_class(&cx, class)?;
            let sq = steenrod_sq(*k, &z)?;
            let trivial = match cx.is_coboundary(sq.representative()) {
                Ok(w) => Some(w.is_some()),
                Err(_) => None, // over the row cap: membership left undecided
            };
            let mut report = json!({
                "group": io::group_ref(&g),
                "k": k,
                "class": class,
                "inputDegree": z.degree(),
                "sq": serde_json::to_value(io::cochain_to_file(sq.representative())).unwrap(),
                "sqIsTrivialClass": trivial,
            });
            if *k == 1 {
                let b = bockstein(&z)?;
                report["bocksteinAgrees"] =
                    json!(cx.cohomologous(sq.representative(), b.representative())?);
            }
            let text = match cli.output.format {
                Format::Json => render_json(&report),
                Format::Text => {
                    let verdict = match trivial {
                        Some(true) => "trivial",
                        Some(false) => "nontrivial",
                        None => "undecided (over row cap)",
                    };
                    format!(
                        "Sq^{k}[{class}] on B{}: degree-{} class, {verdict}\n",
                        g.name,
                        z.degree() + k
                    )
                }
            };
            emit(&cli.output, &text)?;
            Ok(false)
        }

        Command::ShiftOrbit { bundle } => {
            let text = std::fs::read_to_string(bundle)
                .with_context(|| format!("reading bundle {}", bundle.display()))?;
            let (group, cocycle) = io::bundle_from_json(&text)?;
            let report = validate_cocycle(&cocycle, None)?;
            if !report.alpha_beta_valid() {
                bail!(
                    "bundle fails validation — {}",
                    report
                        .first_failure()
                        .unwrap_or_else(|| "unknown layer".into())
                );
            }
            let orbit = orbit_period(&cocycle)?;
            let mut out = io::orbit_to_json(&group, &orbit);
            out["validation"] = io::validation_to_json(&report);
            let text = match cli.output.format {
                Format::Json => render_json(&out),
                Format::Text => format!(
                    "orbit period {} on B{} (validity {}, two-step identity {}, four-step return {})\n",
                    orbit.period,
                    group.name,
                    orbit.checks.validity_preserved,
                    orbit.checks.beta_two_step_identity,
                    orbit.checks.beta_four_step_return,
                ),
            };
            emit(&cli.output, &text)?;
            Ok(false)
        }

        Command::Condense { left, right } => {
            if !left.starts_with("so:") || !right.starts_with("spin:") {
                bail!("condense expects --left so:<n> --right spin:<m>");
            }
            let so = category_from_label(left)?;
            let spin = category_from_label(right)?;
            let product = deligne_product(&so, &spin);
            let boson = spin.rank() + 1; // ψ⊠f
            let cond = condense(&product, &AlgebraObject::unit_plus(boson))?;
            let label = identify(&cond.result);
            let text = match cli.output.format {
                Format::Json => render_json(&io::condensation_to_json(&label, &cond)),
                Format::Text => {
                    let mut s = String::new();
                    let _ = writeln!(s, "condensing 1⊕ψ⊠f in {} ⊠ {}:", so.label, spin.label);
                    for m in &cond.modules {
                        let _ = writeln!(
                            s,
                            "  A ⊗ ({}) = {} ⊕ {}   [{}]",
                            m.generator,
                            m.summands[0],
                            m.summands[1],
                            if m.local { "local" } else { "not local" }
                        );
                    }
                    let _ = writeln!(s, "result: {label}");
                    s
                }
            };
            emit(&cli.output, &text)?;
            Ok(false)
        }

        Command::Consistency { group, kappa } => {
            let g = load_group(group)?;
            let cx = BarComplex::with_row_cap(g.clone(), cli.output.row_cap);
            let class = load_class(&cx, kappa)?;
            let report = consistent_set(&cx, &class)?;
            let crosscheck = crosscheck_equivalence(&cx, &class, g.order <= 8)?;
            let out = io::consistency_to_json(&g, kappa, &report, &crosscheck);
            let text = match cli.output.format {
                Format::Json => render_json(&out),
                Format::Text => {
                    let mut s = String::new();
                    let _ = writeln!(
                        s,
                        "consistent Spin(n)1 on (B{}, κ = {kappa}): {:?}",
                        g.name, report.subgroup.elements
                    );
                    let _ = writeln!(
                        s,
                        "subgroup ⟨{}⟩ of order {}; predicted period {}; equivalence check {}",
                        report.subgroup.generator,
                        report.subgroup.order,
                        crosscheck.predicted_period,
                        if crosscheck.period_match { "pass" } else { "FAIL" },
                    );
                    s
                }
            };
            emit(&cli.output, &text)?;
            Ok(false)
        }

        Command::Verify { suite } => {
            let checks = match suite {
                Suite::Paper => paper_suite(),
                Suite::Properties => property_suite(cli.output.seed),
                Suite::All => full_suite(cli.output.seed),
            };
            let summary = render_summary(&checks);
            emit(&cli.output, &summary)?;
            if cli.output.out.is_some() {
                // Keep the console informative even when writing to a file.
                print!("{summary}");
            }
            Ok(checks.iter().any(|c| !c.passed))
        }
    }
}
