//! Command-line front end. [`run_command`] is the whole program minus process I/O.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::conoid::{axis_section, conoid_surface, final_verdict, solve_conic_constraints, Axis, ConoidParams};
use crate::division::multivariate_divide;
use crate::error::{Error, Result};
use crate::groebner::{reduced_groebner_basis, GroebnerBasis};
use crate::numeric::Rational;
use crate::planarity::{detect_planes, PlanarityOutcome, Plane};
use crate::poly::{Monomial, MonomialOrder, Polynomial, VarContext};

use super::{parse_expression, render, render_coefficient, RenderMode, SystemFile};

#[derive(Debug, Parser)]
#[command(
    name = "gbsurf",
    version,
    about = "Reduced Groebner bases, planarity of surface intersections and the egg-curve conoid"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the reduced Groebner basis of a system.
    Basis {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Divide a target by the reduced basis: normal form and cofactors.
    Reduce {
        #[command(flatten)]
        system: SystemArgs,
        /// Expression to reduce.
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print every plane containing the solution set of a system in x, y, z.
    Planar {
        #[command(flatten)]
        system: SystemArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The egg-curve conoid study.
    Conoid {
        #[command(subcommand)]
        command: ConoidCommand,
    },
}

#[derive(Debug, Subcommand)]
enum ConoidCommand {
    /// Classify the section by a plane x = value, y = value or z = value.
    Section {
        #[arg(long)]
        axis: String,
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        json: bool,
    },
    /// Solve the conditions for a plane section to project to a conic.
    ConicAnalysis {
        #[arg(long)]
        json: bool,
    },
    /// Run the full plane-section case analysis.
    Verdict {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct SystemArgs {
    /// System file (`vars:`, `params:`, `order:`, `poly:` lines).
    file: Option<PathBuf>,
    /// Comma-separated variables, overriding the file.
    #[arg(long)]
    vars: Option<String>,
    /// Comma-separated parameters, overriding the file.
    #[arg(long)]
    params: Option<String>,
    /// Monomial order: lex, deglex or grevlex.
    #[arg(long)]
    order: Option<String>,
    /// Additional generator; may be repeated.
    #[arg(long, allow_hyphen_values = true)]
    poly: Vec<String>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Print polynomials as stored (monic basis elements).
    #[arg(long, conflicts_with = "cleared")]
    monic: bool,
    /// Print polynomials with denominators cleared.
    #[arg(long)]
    cleared: bool,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct ShapeArgs {
    #[arg(long, default_value = "2")]
    a: String,
    #[arg(long, default_value = "1")]
    b: String,
    #[arg(long, default_value = "1")]
    d: String,
    #[arg(long, default_value = "1")]
    h: String,
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `args` (including the program name).
pub fn run_command<I, T>(args: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandOutput {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandOutput {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(stdout) => CommandOutput {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => CommandOutput {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn split_names(s: &str) -> Vec<String> {
    s.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

impl SystemArgs {
    fn load(&self) -> Result<SystemFile> {
        let mut sys = match &self.file {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::usage(format!("cannot read {}: {e}", path.display())))?;
                SystemFile::parse(&text)?
            }
            None => SystemFile::default(),
        };
        if let Some(v) = &self.vars {
            sys.vars = split_names(v);
        }
        if let Some(p) = &self.params {
            sys.params = split_names(p);
        }
        if let Some(o) = &self.order {
            sys.order = MonomialOrder::from_name(o)?;
        }
        sys.polynomials.extend(self.poly.iter().cloned());
        if self.file.is_none() && sys.vars.is_empty() {
            return Err(Error::usage("give a system file or --vars"));
        }
        sys.validate()?;
        Ok(sys)
    }
}

impl OutputArgs {
    fn mode(&self, default: RenderMode) -> RenderMode {
        if self.cleared {
            RenderMode::Cleared
        } else if self.monic {
            RenderMode::Monic
        } else {
            default
        }
    }
}

#[derive(Serialize)]
struct BasisEntry {
    monic: String,
    cleared: String,
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct PlaneEntry {
    A: String,
    B: String,
    C: String,
    D: String,
}

#[derive(Serialize)]
struct Report {
    order: String,
    vars: Vec<String>,
    params: Vec<String>,
    basis: Vec<BasisEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    planes: Option<Vec<PlaneEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    outcome: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    target: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    normal_form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cofactors: Option<Vec<String>>,
}

impl Report {
    fn new(sys: &SystemFile, basis: &GroebnerBasis) -> Self {
        Report {
            order: sys.order.name().to_string(),
            vars: sys.vars.clone(),
            params: sys.params.clone(),
            basis: basis
                .elements()
                .iter()
                .map(|g| BasisEntry {
                    monic: render(g, RenderMode::Monic),
                    cleared: render(g, RenderMode::Cleared),
                })
                .collect(),
            planes: None,
            outcome: None,
            target: None,
            normal_form: None,
            cofactors: None,
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn basis_lines(basis: &GroebnerBasis, mode: RenderMode) -> String {
    if basis.is_empty() {
        return "0\n".into();
    }
    basis.elements().iter().map(|g| render(g, mode) + "\n").collect()
}

/// The plane as displayed: its polynomial in `mode`, with the coefficients of
/// `x`, `y`, `z` and `1` read back from it.
fn plane_display(
    plane: &Plane,
    ctx: &std::sync::Arc<VarContext>,
    order: MonomialOrder,
    mode: RenderMode,
) -> (String, PlaneEntry) {
    let poly = plane.to_polynomial(ctx, order);
    let shown = match mode {
        RenderMode::Monic => poly,
        RenderMode::Cleared => poly.clear_denominators(),
    };
    let n = ctx.nvars();
    let coef = |m: Monomial| render_coefficient(&shown.coefficient_of(&m), ctx.parameters());
    let entry = PlaneEntry {
        A: coef(Monomial::var(n, 0)),
        B: coef(Monomial::var(n, 1)),
        C: coef(Monomial::var(n, 2)),
        D: coef(Monomial::one(n)),
    };
    (format!("{} = 0", render(&shown, RenderMode::Monic)), entry)
}

fn parse_rational(flag: &str, s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|e| Error::usage(format!("--{flag}: cannot read `{s}` as a rational: {e}")))
}

fn execute(command: Command) -> Result<String> {
    match command {
        Command::Basis { system, output } => {
            let sys = system.load()?;
            let basis = reduced_groebner_basis(&sys.ideal()?);
            Ok(if output.json {
                to_json(&Report::new(&sys, &basis))
            } else {
                basis_lines(&basis, output.mode(RenderMode::Monic))
            })
        }
        Command::Reduce { system, target, output } => {
            let sys = system.load()?;
            let ideal = sys.ideal()?;
            let basis = reduced_groebner_basis(&ideal);
            let f = parse_expression(&target, ideal.context(), sys.order)?;
            let div = if basis.is_empty() {
                None
            } else {
                Some(multivariate_divide(&f, basis.elements())?)
            };
            let (nf, cofactors) = match &div {
                Some(d) => (d.remainder.clone(), d.quotients.clone()),
                None => (f.clone(), Vec::new()),
            };
            if output.json {
                let mut r = Report::new(&sys, &basis);
                r.target = Some(render(&f, RenderMode::Monic));
                r.normal_form = Some(render(&nf, RenderMode::Monic));
                r.cofactors = Some(cofactors.iter().map(|q| render(q, RenderMode::Monic)).collect());
                return Ok(to_json(&r));
            }
            let mode = output.mode(RenderMode::Monic);
            let mut out = String::from("basis:\n");
            for g in basis.elements() {
                out += &format!("  {}\n", render(g, mode));
            }
            out += &format!("normal form: {}\n", render(&nf, RenderMode::Monic));
            out += "cofactors:\n";
            for q in &cofactors {
                out += &format!("  {}\n", render(q, RenderMode::Monic));
            }
            Ok(out)
        }
        Command::Planar { system, output } => {
            let sys = system.load()?;
            let ideal = sys.ideal()?;
            let report = detect_planes(&ideal)?;
            let mode = output.mode(RenderMode::Cleared);
            let (outcome, lines, entries) = match &report.outcome {
                PlanarityOutcome::Planes(family) => {
                    let (lines, entries): (Vec<String>, Vec<PlaneEntry>) = family
                        .planes
                        .iter()
                        .map(|p| plane_display(p, ideal.context(), ideal.order(), mode))
                        .unzip();
                    ("planes", lines, entries)
                }
                PlanarityOutcome::None => ("none", vec!["none".to_string()], Vec::new()),
                PlanarityOutcome::EmptyVariety => ("empty-variety", vec!["empty-variety".to_string()], Vec::new()),
            };
            if output.json {
                let mut r = Report::new(&sys, &report.basis);
                r.planes = Some(entries);
                r.outcome = Some(outcome.to_string());
                return Ok(to_json(&r));
            }
            Ok(lines.into_iter().map(|l| l + "\n").collect())
        }
        Command::Conoid { command } => conoid(command),
    }
}

fn conoid(command: ConoidCommand) -> Result<String> {
    let cleared = |p: &Polynomial| render(p, RenderMode::Cleared);
    let monic = |p: &Polynomial| render(p, RenderMode::Monic);
    match command {
        ConoidCommand::Section {
            axis,
            value,
            shape,
            json,
        } => {
            let axis = Axis::from_name(&axis)?;
            let value = parse_rational("value", &value)?;
            let params = ConoidParams::numeric(
                parse_rational("a", &shape.a)?,
                parse_rational("b", &shape.b)?,
                parse_rational("d", &shape.d)?,
                parse_rational("h", &shape.h)?,
            )?;
            let report = axis_section(&params, axis, &value)?;
            let surface = conoid_surface(&params);
            let components: Vec<String> = report.components.iter().map(|c| format!("{} = 0", monic(c))).collect();
            if json {
                return Ok(to_json(&json!({
                    "params": { "a": shape.a, "b": shape.b, "d": shape.d, "h": shape.h },
                    "surface": monic(&surface),
                    "plane": format!("{} = {}", axis.name(), value),
                    "kind": report.kind.to_string(),
                    "section": monic(&report.section),
                    "discriminant": report.discriminant.as_ref().map(|d| d.to_string()),
                    "components": components,
                    "notes": report.notes,
                    "verified": report.verified,
                })));
            }
            let mut out = format!(
                "conoid: {} = 0 (a = {}, b = {}, d = {}, h = {})\n",
                monic(&surface),
                shape.a,
                shape.b,
                shape.d,
                shape.h
            );
            out += &format!("plane: {} = {}\n", axis.name(), value);
            out += &format!("section: {} = 0\n", monic(&report.section));
            out += &format!("kind: {}\n", report.kind);
            if let Some(d) = &report.discriminant {
                out += &format!("discriminant: {d}\n");
            }
            for c in &components {
                out += &format!("component: {c}\n");
            }
            for n in &report.notes {
                out += &format!("note: {n}\n");
            }
            out += &format!("verified: {}\n", report.verified);
            Ok(out)
        }
        ConoidCommand::ConicAnalysis { json } => {
            let a = solve_conic_constraints();
            if json {
                let families: Vec<Value> = a
                    .families
                    .iter()
                    .zip(&a.families_satisfy_constraints)
                    .map(|(f, ok)| {
                        let names = crate::conoid::constraint_context();
                        let [pa, pb, pd] = f.normalized();
                        json!({
                            "family": f.id.to_string(),
                            "A": render_coefficient(&pa, names.parameters()),
                            "B": render_coefficient(&pb, names.parameters()),
                            "C": "1",
                            "D": render_coefficient(&pd, names.parameters()),
                            "satisfies_constraints": ok,
                        })
                    })
                    .collect();
                return Ok(to_json(&json!({
                    "constraints": a.constraints.iter().map(|c| json!({
                        "monomial": c.monomial,
                        "polynomial": monic(&c.polynomial),
                    })).collect::<Vec<_>>(),
                    "basis": a.basis.elements().iter().map(|g| json!({
                        "monic": monic(g),
                        "cleared": cleared(g),
                    })).collect::<Vec<_>>(),
                    "families": families,
                    "no_other_solutions": a.no_other_solutions,
                    "y4_forces_b_zero": a.y4_forces_b_zero,
                })));
            }
            let names = crate::conoid::constraint_context();
            let mut out = String::from("conic constraints (C = 1):\n");
            for c in &a.constraints {
                out += &format!("  [{}] {} = 0\n", c.monomial, monic(&c.polynomial));
            }
            out += "reduced basis (lex A > B > D over Q(a, b, d, h)):\n";
            for g in a.basis.elements() {
                out += &format!("  {}\n", monic(g));
            }
            for (f, ok) in a.families.iter().zip(&a.families_satisfy_constraints) {
                let [pa, pb, pd] = f.normalized();
                let r = |c| render_coefficient(c, names.parameters());
                out += &format!(
                    "family {}: (A, B, C, D) = ({}, {}, 1, {}) satisfies all constraints: {}\n",
                    f.id,
                    r(&pa),
                    r(&pb),
                    r(&pd),
                    ok
                );
            }
            out += &format!("no other solutions: {}\n", a.no_other_solutions);
            out += &format!("y^4 constraint forces B = 0: {}\n", a.y4_forces_b_zero);
            Ok(out)
        }
        ConoidCommand::Verdict { json } => {
            let v = final_verdict();
            if json {
                return Ok(to_json(&json!({
                    "family_sections": v.family_sections.iter().map(|s| json!({
                        "family": s.family.to_string(),
                        "plane": cleared(&s.plane),
                        "basis": s.basis.elements().iter().map(|g| json!({
                            "monic": monic(g),
                            "cleared": cleared(g),
                        })).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                    "no_other_solutions": v.analysis.no_other_solutions,
                    "a_forced_zero": v.a_forced_zero,
                    "y_section_lines_verified": v.y_section_lines_verified,
                    "x_section_degree": v.x_section_degree,
                    "report": v.lines,
                    "conclusion": v.conclusion,
                })));
            }
            Ok(v.lines.iter().map(|l| format!("{l}\n")).collect())
        }
    }
}
