//! The `wreathkit` command line: load a JSON bundle, check the laws of a
//! named structure, or run one of the computations and print the result.
//!
//! Exit codes: `0` when everything passed (or for `--help`/`--version`),
//! `1` when a law check failed or input data failed validation (the report
//! is printed), `2` for unusable input — unreadable files, malformed
//! documents, unknown names, shape mismatches, or refused searches.

use crate::bundle::{mor_doc, Bundle, BundleDoc, StructureDoc};
use crate::coaction::{
    check_eckmann_hilton, check_monoidal_twisted_coaction, check_opmonoidal,
    check_twisted_coaction, generated_opwreath_unchecked, OpmonoidalStructure,
};
use crate::error::{Error, Result};
use crate::extension::{
    enumerate_cocycles, extension_to_wreath, reconstruct, verify_extension_data,
    DEFAULT_MAX_CANDIDATES,
};
use crate::mixed::{convolve, heisenberg_product, kleisli_compose, KleisliMor, MixedOpwreathData};
use crate::mor::Mor;
use crate::report::AxiomReport;
use crate::structures::{check_bimonoid, check_comonoid, check_monoid, FinMonoid, MonoidData};
use crate::word::ObjWord;
use crate::wreath::{check_wreath, wreath_product, wreath_product_unchecked, WreathData};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "wreathkit",
    version,
    about = "Exact-arithmetic checks and computations for wreaths, mixed wreaths and twisted coactions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the laws of a named structure in a bundle.
    Check(CheckArgs),
    /// Run a computation and print the result as JSON.
    #[command(subcommand)]
    Compute(ComputeTask),
    /// Analyze, verify and rebuild fibered monoids.
    #[command(subcommand)]
    Extension(ExtensionAction),
}

#[derive(Copy, Clone, ValueEnum)]
enum CheckKind {
    Monoid,
    Comonoid,
    Bimonoid,
    Wreath,
    Opwreath,
    Coaction,
    MonoidalCoaction,
    Opmonoidal,
}

#[derive(Copy, Clone, Default, ValueEnum)]
enum ReportFormat {
    #[default]
    Text,
    Json,
}

#[derive(Args)]
struct CheckArgs {
    /// What kind of structure to check.
    #[arg(value_enum)]
    kind: CheckKind,
    /// Bundle document to read.
    #[arg(long)]
    bundle: PathBuf,
    /// Name of the structure inside the bundle.
    #[arg(long)]
    structure: String,
    #[arg(long, value_enum, default_value_t)]
    report: ReportFormat,
    /// Generating objects for quantified checks (defaults to the unit
    /// object plus every object declared by the bundle).
    #[arg(long, num_args = 0..)]
    gens: Option<Vec<String>>,
}

#[derive(Args)]
struct BundleRef {
    /// Bundle document to read.
    #[arg(long)]
    bundle: PathBuf,
    /// Name of the structure inside the bundle.
    #[arg(long)]
    structure: String,
}

#[derive(Args)]
struct OutArg {
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ComputeTask {
    /// Multiply out validated wreath data into the product monoid on S⊗A.
    ProductWreath {
        #[command(flatten)]
        target: BundleRef,
        /// Skip the law checks and only verify shapes.
        #[arg(long)]
        skip_validate: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Rebuild the total monoid of an extension from its classifying data.
    Reconstruct {
        #[command(flatten)]
        target: BundleRef,
        #[command(flatten)]
        out: OutArg,
    },
    /// List every factor set compatible with the action of an extension.
    EnumerateCocycles {
        #[command(flatten)]
        target: BundleRef,
        /// Refuse searches with more raw candidates than this.
        #[arg(long, default_value_t = DEFAULT_MAX_CANDIDATES)]
        max_candidates: u128,
        #[command(flatten)]
        out: OutArg,
    },
    /// Convolve two maps u, v : C → A in an opwreath context.
    Convolve {
        #[command(flatten)]
        target: BundleRef,
        #[arg(short)]
        u: String,
        #[arg(short)]
        v: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Convolve two endomorphisms of a bimonoid through the twisted crossing.
    Heisenberg {
        #[command(flatten)]
        target: BundleRef,
        #[arg(short)]
        u: String,
        #[arg(short)]
        v: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Compose two morphisms in the Kleisli category of an opwreath.
    KleisliCompose {
        #[command(flatten)]
        target: BundleRef,
        /// The morphism applied first.
        #[arg(short)]
        f: String,
        /// The morphism applied second.
        #[arg(short)]
        g: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Check that convolution on maps B → A of a monoidal coaction commutes.
    EckmannHilton {
        #[command(flatten)]
        target: BundleRef,
        #[arg(long, value_enum, default_value_t)]
        report: ReportFormat,
        /// Generating objects used to validate the opmonoidal structure.
        #[arg(long, num_args = 0..)]
        gens: Option<Vec<String>>,
    },
}

#[derive(Subcommand)]
enum ExtensionAction {
    /// Extract fiber, action and factor set from a fibration.
    Analyze {
        #[command(flatten)]
        target: BundleRef,
        #[command(flatten)]
        out: OutArg,
    },
    /// Check the classifying laws of extension data.
    Verify {
        #[command(flatten)]
        target: BundleRef,
        #[arg(long, value_enum, default_value_t)]
        report: ReportFormat,
    },
    /// Rebuild the total monoid from extension data.
    Reconstruct {
        #[command(flatten)]
        target: BundleRef,
        #[command(flatten)]
        out: OutArg,
    },
    /// List every factor set compatible with the action of an extension.
    Enumerate {
        #[command(flatten)]
        target: BundleRef,
        /// Refuse searches with more raw candidates than this.
        #[arg(long, default_value_t = DEFAULT_MAX_CANDIDATES)]
        max_candidates: u128,
        #[command(flatten)]
        out: OutArg,
    },
    /// Induce wreath data on the monoid algebra of the fiber.
    ToWreath {
        #[command(flatten)]
        target: BundleRef,
        #[command(flatten)]
        out: OutArg,
    },
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0u8,
                _ => 2u8,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Error::ValidationFailed { what, report }) => {
            eprintln!("validation failed for {what}:");
            eprintln!("{report}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Check(args) => run_check(args),
        Command::Compute(task) => run_compute(task),
        Command::Extension(action) => run_extension(action),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn emit_report(report: &AxiomReport, format: ReportFormat) -> Result<ExitCode> {
    match format {
        ReportFormat::Text => println!("{report}"),
        ReportFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(report).expect("report serialization")
            );
        }
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// The unit object plus either the requested objects or everything the
/// bundle declares.
fn quantifier_gens(bundle: &Bundle, requested: Option<&[String]>) -> Result<Vec<ObjWord>> {
    let mut gens = vec![ObjWord::unit()];
    match requested {
        Some(names) => {
            for name in names {
                gens.push(bundle.word(std::slice::from_ref(name))?);
            }
        }
        None => {
            for g in bundle.generators() {
                gens.push(ObjWord::gen(&g));
            }
        }
    }
    Ok(gens)
}

fn run_check(args: CheckArgs) -> Result<ExitCode> {
    let bundle = Bundle::from_path(&args.bundle)?;
    let name = args.structure.as_str();
    let report = match args.kind {
        CheckKind::Monoid => check_monoid(&bundle.monoid(name)?)?,
        CheckKind::Comonoid => check_comonoid(&bundle.comonoid(name)?)?,
        CheckKind::Bimonoid => check_bimonoid(&bundle.bimonoid(name)?)?,
        CheckKind::Wreath => check_wreath(&bundle.wreath(name)?)?,
        CheckKind::Opwreath => crate::mixed::check_opwreath(&bundle.opwreath(name)?)?,
        CheckKind::Coaction => check_twisted_coaction(&bundle.coaction(name)?)?,
        CheckKind::MonoidalCoaction => {
            check_monoidal_twisted_coaction(&bundle.monoidal_coaction(name)?)?
        }
        CheckKind::Opmonoidal => {
            let mc = bundle.monoidal_coaction(name)?;
            let context = generated_opwreath_unchecked(&mc.base)?;
            let gens = quantifier_gens(&bundle, args.gens.as_deref())?;
            check_opmonoidal(&context, &mc.dd, &gens)?
        }
    };
    emit_report(&report, args.report)
}

fn mor_json(m: &Mor) -> String {
    let mut text =
        serde_json::to_string_pretty(&mor_doc(m)).expect("morphism serialization");
    text.push('\n');
    text
}

fn finmonoid_json(fm: &FinMonoid) -> String {
    let mut text = serde_json::to_string_pretty(fm).expect("table serialization");
    text.push('\n');
    text
}

/// Package a computed monoid as a self-contained bundle document.
fn monoid_bundle(field: crate::scalar::FieldDescriptor, m: &MonoidData) -> Result<String> {
    let mut objects = BTreeMap::new();
    for g in m.carrier.factors() {
        objects.insert(g.name.clone(), g.dim);
    }
    let mut morphisms = BTreeMap::new();
    morphisms.insert("product-mul".to_string(), mor_doc(&m.mul));
    morphisms.insert("product-unit".to_string(), mor_doc(&m.unit));
    let mut structures = BTreeMap::new();
    structures.insert(
        "product".to_string(),
        StructureDoc::Monoid {
            carrier: m.carrier.factors().iter().map(|g| g.name.clone()).collect(),
            mul: "product-mul".to_string(),
            unit: "product-unit".to_string(),
        },
    );
    let doc = BundleDoc {
        field,
        objects,
        morphisms,
        finmonoids: BTreeMap::new(),
        structures,
    };
    Ok(Bundle::from_doc(doc)?.to_canonical_json())
}

/// Package induced wreath data as a self-contained bundle document.
fn wreath_bundle(field: crate::scalar::FieldDescriptor, w: &WreathData) -> Result<String> {
    let mut objects = BTreeMap::new();
    for g in w.s.factors().iter().chain(w.monoid.carrier.factors()) {
        objects.insert(g.name.clone(), g.dim);
    }
    let mut morphisms = BTreeMap::new();
    morphisms.insert("a-mul".to_string(), mor_doc(&w.monoid.mul));
    morphisms.insert("a-unit".to_string(), mor_doc(&w.monoid.unit));
    morphisms.insert("nu".to_string(), mor_doc(&w.nu));
    morphisms.insert("sigma0".to_string(), mor_doc(&w.sigma0));
    morphisms.insert("lambda".to_string(), mor_doc(&w.lambda));
    let name_list = |word: &ObjWord| word.factors().iter().map(|g| g.name.clone()).collect();
    let mut structures = BTreeMap::new();
    structures.insert(
        "amon".to_string(),
        StructureDoc::Monoid {
            carrier: name_list(&w.monoid.carrier),
            mul: "a-mul".to_string(),
            unit: "a-unit".to_string(),
        },
    );
    structures.insert(
        "wreath".to_string(),
        StructureDoc::Wreath {
            monoid: "amon".to_string(),
            s: name_list(&w.s),
            nu: "nu".to_string(),
            sigma0: "sigma0".to_string(),
            lambda: "lambda".to_string(),
        },
    );
    let doc = BundleDoc {
        field,
        objects,
        morphisms,
        finmonoids: BTreeMap::new(),
        structures,
    };
    Ok(Bundle::from_doc(doc)?.to_canonical_json())
}

/// Reinterpret a plain morphism as a Kleisli morphism by peeling the `C`
/// prefix off its domain and the `A` prefix off its codomain.
fn as_kleisli(ctx: &Arc<MixedOpwreathData>, name: &str, m: &Mor) -> Result<KleisliMor> {
    let x = m.dom().strip_prefix(&ctx.c).ok_or_else(|| {
        Error::Bundle(format!(
            "morphism '{name}': domain {} does not start with the carrier {}",
            m.dom(),
            ctx.c
        ))
    })?;
    let y = m.cod().strip_prefix(&ctx.monoid.carrier).ok_or_else(|| {
        Error::Bundle(format!(
            "morphism '{name}': codomain {} does not start with the monoid carrier {}",
            m.cod(),
            ctx.monoid.carrier
        ))
    })?;
    KleisliMor::new(ctx.clone(), x, y, m.clone())
}

fn enumerate_json(
    bundle: &Bundle,
    structure: &str,
    max_candidates: u128,
) -> Result<String> {
    let (m, a, alpha) = bundle.extension_action(structure)?;
    let found = enumerate_cocycles(&m, &a, &alpha, max_candidates)?;
    let mut text = serde_json::to_string_pretty(&serde_json::json!({
        "count": found.len(),
        "factor_sets": found,
    }))
    .expect("result serialization");
    text.push('\n');
    Ok(text)
}

fn run_compute(task: ComputeTask) -> Result<ExitCode> {
    match task {
        ComputeTask::ProductWreath {
            target,
            skip_validate,
            out,
        } => {
            let bundle = Bundle::from_path(&target.bundle)?;
            let w = bundle.wreath(&target.structure)?;
            let product = if skip_validate {
                wreath_product_unchecked(&w)?
            } else {
                wreath_product(&w)?
            };
            emit(out.out.as_deref(), &monoid_bundle(bundle.field(), &product)?)?;
        }
        ComputeTask::Reconstruct { target, out } => {
            let bundle = Bundle::from_path(&target.bundle)?;
            let ext = bundle.extension(&target.structure)?;
            emit(out.out.as_deref(), &finmonoid_json(&reconstruct(&ext)?))?;
        }
        ComputeTask::EnumerateCocycles {
            target,
            max_candidates,
            out,
        } => {
            let bundle = Bundle::from_path(&target.bundle)?;
            let text = enumerate_json(&bundle, &target.structure, max_candidates)?;
            emit(out.out.as_deref(), &text)?;
        }
        ComputeTask::Convolve { target, u, v, out } => {
            let bundle = Bundle::from_path(&target.bundle)?;
            let ow = bundle.opwreath(&target.structure)?;
            let result = convolve(bundle.morphism(&u)?, bundle.morphism(&v)?, &ow)?;
            emit(out.out.as_deref(), &mor_json(&result))?;
        }
        ComputeTask::Heisenberg { target, u, v, out } => {
            let bundle = Bundle::from_path(&target.bundle)?;
            let b = bundle.bimonoid(&target.structure)?;
            let result = heisenberg_product(bundle.morphism(&u)?, bundle.morphism(&v)?, &b)?;
            emit(out.out.as_deref(), &mor_json(&result))?;
        }
        ComputeTask::KleisliCompose { target, f, g, out } => {
            let bundle = Bundle::from_path(&target.bundle)?;
            let ctx = Arc::new(bundle.opwreath(&target.structure)?);
            let kf = as_kleisli(&ctx, &f, bundle.morphism(&f)?)?;
            let kg = as_kleisli(&ctx, &g, bundle.morphism(&g)?)?;
            let composed = kleisli_compose(&kf, &kg)?;
            emit(out.out.as_deref(), &mor_json(composed.mat()))?;
        }
        ComputeTask::EckmannHilton {
            target,
            report,
            gens,
        } => {
            let bundle = Bundle::from_path(&target.bundle)?;
            let mc = bundle.monoidal_coaction(&target.structure)?;
            let context = Arc::new(generated_opwreath_unchecked(&mc.base)?);
            let gens = quantifier_gens(&bundle, gens.as_deref())?;
            let os = OpmonoidalStructure::new(context, mc.dd.clone(), &gens)?;
            return emit_report(&check_eckmann_hilton(&os)?, report);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_extension(action: ExtensionAction) -> Result<ExitCode> {
    match action {
        ExtensionAction::Analyze { target, out } => {
            let bundle = Bundle::from_path(&target.bundle)?;
            let fib = bundle.fibration(&target.structure)?;
            let ext = fib.analyze()?;
            let mut text = serde_json::to_string_pretty(&serde_json::json!({
                "m": ext.m,
                "a": ext.a,
                "alpha": ext.alpha,
                "rho": ext.rho,
            }))
            .expect("result serialization");
            text.push('\n');
            emit(out.out.as_deref(), &text)?;
        }
        ExtensionAction::Verify { target, report } => {
            let bundle = Bundle::from_path(&target.bundle)?;
            let ext = bundle.extension(&target.structure)?;
            return emit_report(&verify_extension_data(&ext)?, report);
        }
        ExtensionAction::Reconstruct { target, out } => {
            let bundle = Bundle::from_path(&target.bundle)?;
            let ext = bundle.extension(&target.structure)?;
            emit(out.out.as_deref(), &finmonoid_json(&reconstruct(&ext)?))?;
        }
        ExtensionAction::Enumerate {
            target,
            max_candidates,
            out,
        } => {
            let bundle = Bundle::from_path(&target.bundle)?;
            let text = enumerate_json(&bundle, &target.structure, max_candidates)?;
            emit(out.out.as_deref(), &text)?;
        }
        ExtensionAction::ToWreath { target, out } => {
            let bundle = Bundle::from_path(&target.bundle)?;
            let ext = bundle.extension(&target.structure)?;
            let w = extension_to_wreath(&ext, bundle.field())?;
            emit(out.out.as_deref(), &wreath_bundle(bundle.field(), &w)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
