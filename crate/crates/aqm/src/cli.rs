//! The `aqm` command line.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use aqm_core::assurance::{evaluate, generate_checklist, generate_guidelines, trace};
use aqm_core::requirements::{derive_activities, rank_activities, validate_requirements, PipelineError};
use aqm_core::{
    refine, validate_model, Comparator, FactRef, NodeId, QualityModel, QuantifiedRequirement, Ratings,
    RequirementsDocument,
};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::documents::{load_requirements, parse_metrics, serialize_requirements};
use crate::error::ParseError;
use crate::fsio::{read_text, write_atomic, IoError};
use crate::json::to_canonical;
use crate::matrix::ImpactMatrix;
use crate::model_doc::{parse_model, parse_model_unchecked};
use crate::render::{self, Style};
use crate::templates::Template;

#[derive(Debug, Parser)]
#[command(name = "aqm", version, about = "Activity-based quality models: requirements and assurance")]
pub struct Cli {
    /// Output format for stdout and `--out` files.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a model (and optionally a requirements document against it).
    Validate {
        model: PathBuf,
        #[arg(long)]
        req: Option<PathBuf>,
    },
    /// Rank the stakeholders' activities and store the ranking.
    Rank {
        model: PathBuf,
        #[arg(long)]
        req: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        order: Vec<NodeId>,
        #[arg(long)]
        cutoff: usize,
    },
    /// Set the qualitative ratings of a ranked activity.
    Qualify(QualifyArgs),
    /// Derive requirements on facts from the impacts on an activity.
    Refine {
        model: PathBuf,
        #[arg(long)]
        activity: NodeId,
        /// Append the refined requirements to this document.
        #[arg(long)]
        req: Option<PathBuf>,
    },
    /// Append a quantified requirement.
    Quantify(QuantifyArgs),
    /// Manual review checklist for one artifact type.
    Checklist {
        model: PathBuf,
        #[arg(long)]
        artifact_type: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Do/don't guidelines derived from every impact.
    Guidelines {
        model: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fact × leaf activity matrix (CSV in text mode).
    Matrix {
        model: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check quantified requirements against a tool report.
    Evaluate {
        model: PathBuf,
        #[arg(long)]
        req: PathBuf,
        #[arg(long)]
        report: PathBuf,
    },
    /// Activity → ratings → facts → quantified requirements → verdicts.
    Trace {
        model: PathBuf,
        #[arg(long)]
        req: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Write a template model and requirements skeleton.
    Init {
        #[arg(long, value_enum)]
        template: Template,
        #[arg(long, default_value = ".")]
        dir: PathBuf,
        /// Overwrite existing files.
        #[arg(long)]
        force: bool,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("level").required(true).args(["ratings", "dont_care"])))]
pub struct QualifyArgs {
    pub model: PathBuf,
    #[arg(long)]
    pub req: PathBuf,
    #[arg(long)]
    pub activity: NodeId,
    #[arg(long, value_delimiter = ',')]
    pub ratings: Vec<String>,
    #[arg(long)]
    pub dont_care: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("measure").required(true).args(["metric", "constraint"])))]
pub struct QuantifyArgs {
    pub model: PathBuf,
    #[arg(long)]
    pub req: PathBuf,
    /// `fact:ENTITY:ATTRIBUTE` or `activity:ID`
    #[arg(long)]
    pub scope: ScopeArg,
    #[arg(long, requires_all = ["cmp", "threshold", "unit"])]
    pub metric: Option<String>,
    #[arg(long)]
    pub cmp: Option<Comparator>,
    #[arg(long, allow_negative_numbers = true)]
    pub threshold: Option<f64>,
    #[arg(long)]
    pub unit: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    pub nominal: Option<f64>,
    /// Prose constraint checked by review instead of a metric.
    #[arg(long, conflicts_with_all = ["cmp", "threshold", "unit", "nominal"])]
    pub constraint: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScopeArg(pub aqm_core::Scope);

impl FromStr for ScopeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_id = |raw: &str| NodeId::parse(raw).map_err(|e| e.to_string());
        match s.split_once(':') {
            Some(("fact", rest)) => {
                let (entity, attribute) = rest
                    .rsplit_once(':')
                    .ok_or_else(|| format!("expected fact:ENTITY:ATTRIBUTE, got `{s}`"))?;
                Ok(ScopeArg(aqm_core::Scope::Fact(FactRef::new(parse_id(entity)?, attribute))))
            }
            Some(("activity", id)) => Ok(ScopeArg(aqm_core::Scope::Activity(parse_id(id)?))),
            _ => Err(format!("expected fact:ENTITY:ATTRIBUTE or activity:ID, got `{s}`")),
        }
    }
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_FINDINGS: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Reasons a command stops early.
#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
    /// Findings were already reported on stdout.
    #[error("findings reported")]
    Findings,
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Io(_) => EXIT_USAGE,
            Failure::Parse { source: ParseError::Semantic(_), .. } => EXIT_FINDINGS,
            Failure::Parse { .. } => EXIT_USAGE,
            Failure::Pipeline(_) | Failure::Findings => EXIT_FINDINGS,
        }
    }
}

/// Where a command sends its output.
pub struct Console<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
    pub style: Style,
}

struct Ctx<'a, 'b> {
    format: Format,
    console: &'a mut Console<'b>,
}

impl Ctx<'_, '_> {
    fn emit(&mut self, text: &str) -> Result<(), Failure> {
        self.console
            .out
            .write_all(text.as_bytes())
            .map_err(|source| Failure::Io(IoError { path: "<stdout>".into(), source }))
    }

    /// Text rendering or canonical JSON of `value`, per `--format`.
    fn pick<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> String {
        match self.format {
            Format::Text => text(),
            Format::Json => to_canonical(value),
        }
    }

    fn deliver(&mut self, out: Option<&Path>, contents: &str) -> Result<(), Failure> {
        match out {
            Some(path) => Ok(write_atomic(path, contents)?),
            None => self.emit(contents),
        }
    }

    fn style(&self) -> Style {
        self.console.style
    }
}

fn parse_failure(path: &Path) -> impl FnOnce(ParseError) -> Failure + '_ {
    move |source| Failure::Parse {
        path: path.to_owned(),
        source,
    }
}

fn load_model(path: &Path) -> Result<QualityModel, Failure> {
    parse_model(&read_text(path)?).map_err(parse_failure(path))
}

fn load_doc(model: &QualityModel, path: &Path) -> Result<RequirementsDocument, Failure> {
    load_requirements(model, &read_text(path)?).map_err(parse_failure(path))
}

fn save_doc(path: &Path, doc: &RequirementsDocument) -> Result<(), Failure> {
    Ok(write_atomic(path, &serialize_requirements(doc))?)
}

/// Runs one parsed invocation and returns the process exit code.
pub fn run(cli: Cli, console: &mut Console<'_>) -> u8 {
    let mut ctx = Ctx {
        format: cli.format,
        console,
    };
    match dispatch(cli.command, &mut ctx) {
        Ok(()) => EXIT_OK,
        Err(Failure::Findings) => EXIT_FINDINGS,
        Err(failure) => {
            let _ = writeln!(ctx.console.err, "aqm: {failure}");
            if let Failure::Parse { source, .. } = &failure {
                let _ = ctx
                    .console
                    .err
                    .write_all(render::diagnostics(source.diagnostics(), ctx.style()).as_bytes());
            }
            failure.exit_code()
        }
    }
}

fn dispatch(command: Command, ctx: &mut Ctx<'_, '_>) -> Result<(), Failure> {
    match command {
        Command::Validate { model, req } => validate(ctx, &model, req.as_deref()),
        Command::Rank {
            model,
            req,
            order,
            cutoff,
        } => {
            let model = load_model(&model)?;
            let doc = load_doc(&model, &req)?;
            let activities = derive_activities(&model, &doc.stakeholders)?;
            let ranking = rank_activities(&activities, &order, cutoff)?;
            let doc = doc.with_ranking(ranking);
            save_doc(&req, &doc)?;
            let text = ctx.pick(&doc.ranking, || {
                doc.ranking
                    .ordered
                    .iter()
                    .enumerate()
                    .map(|(i, a)| {
                        let note = if doc.ranking.is_default_dont_care(a) { "  (don't care)" } else { "" };
                        format!("{}. {} ({a}){note}\n", i + 1, model.activity_label(a))
                    })
                    .collect()
            });
            ctx.emit(&text)
        }
        Command::Qualify(args) => {
            let model = load_model(&args.model)?;
            let doc = load_doc(&model, &args.req)?;
            let ratings = if args.dont_care {
                Ratings::DontCare
            } else {
                Ratings::Listed(args.ratings.iter().map(|r| r.trim().to_owned()).collect())
            };
            let doc = doc.set_qualitative(&args.activity, ratings)?;
            save_doc(&args.req, &doc)?;
            let entry = doc.qualitative.iter().find(|q| q.activity == args.activity);
            let text = ctx.pick(&entry, || {
                let ratings = entry.map(|q| q.ratings.to_string()).unwrap_or_default();
                format!("{}: {ratings}\n", args.activity)
            });
            ctx.emit(&text)
        }
        Command::Refine { model, activity, req } => {
            let model = load_model(&model)?;
            let doc = req.as_deref().map(|p| load_doc(&model, p)).transpose()?;
            let refined = refine(&model, &activity)?;
            if let (Some(path), Some(doc)) = (req.as_deref(), doc) {
                save_doc(path, &doc.add_refined(refined.iter().cloned()))?;
            }
            let text = ctx.pick(&refined, || render::refined(&refined));
            ctx.emit(&text)
        }
        Command::Quantify(args) => quantify(ctx, args),
        Command::Checklist {
            model,
            artifact_type,
            out,
        } => {
            let model = load_model(&model)?;
            let list = generate_checklist(&model, &artifact_type);
            let text = ctx.pick(&list, || render::checklist(&list, Style::default()));
            ctx.deliver(out.as_deref(), &text)
        }
        Command::Guidelines { model, out } => {
            let model = load_model(&model)?;
            let set = generate_guidelines(&model);
            let text = ctx.pick(&set, || render::guidelines(&model, &set));
            ctx.deliver(out.as_deref(), &text)
        }
        Command::Matrix { model, out } => {
            let model = load_model(&model)?;
            let matrix = ImpactMatrix::build(&model);
            let text = ctx.pick(&matrix, || matrix.to_csv());
            ctx.deliver(out.as_deref(), &text)
        }
        Command::Evaluate { model, req, report } => {
            let model = load_model(&model)?;
            let doc = load_doc(&model, &req)?;
            let metrics = parse_metrics(&read_text(&report)?).map_err(parse_failure(&report))?;
            let result = evaluate(&model, &doc, &metrics);
            let style = ctx.style();
            let text = ctx.pick(&result, || render::conformance(&result, style));
            ctx.emit(&text)?;
            if result.has_failures() {
                return Err(Failure::Findings);
            }
            Ok(())
        }
        Command::Trace { model, req, report } => {
            let model = load_model(&model)?;
            let doc = load_doc(&model, &req)?;
            let latest = match report {
                Some(path) => {
                    let metrics = parse_metrics(&read_text(&path)?).map_err(parse_failure(&path))?;
                    Some(evaluate(&model, &doc, &metrics))
                }
                None => None,
            };
            let result = trace(&model, &doc, latest.as_ref());
            let style = ctx.style();
            let text = ctx.pick(&result, || render::trace(&result, style));
            ctx.emit(&text)
        }
        Command::Init { template, dir, force } => {
            let mut written = Vec::new();
            for (name, contents) in template.files() {
                let path = dir.join(name);
                if path.exists() && !force {
                    return Err(Failure::Usage(format!(
                        "{} already exists (use --force to overwrite)",
                        path.display()
                    )));
                }
                written.push((path, contents));
            }
            for (path, contents) in &written {
                write_atomic(path, contents)?;
            }
            let paths: Vec<String> = written.iter().map(|(p, _)| p.display().to_string()).collect();
            let text = ctx.pick(&paths, || paths.iter().map(|p| format!("wrote {p}\n")).collect());
            ctx.emit(&text)
        }
    }
}

fn validate(ctx: &mut Ctx<'_, '_>, model_path: &Path, req: Option<&Path>) -> Result<(), Failure> {
    let model = parse_model_unchecked(&read_text(model_path)?).map_err(parse_failure(model_path))?;
    let mut diagnostics = validate_model(&model);
    if let Some(path) = req {
        let doc = crate::documents::parse_requirements(&read_text(path)?).map_err(parse_failure(path))?;
        // Document checks assume a well-formed model.
        if diagnostics.is_empty() {
            diagnostics = validate_requirements(&model, &doc);
        }
    }
    let style = ctx.style();
    let text = ctx.pick(&diagnostics, || {
        if diagnostics.is_empty() {
            "OK\n".into()
        } else {
            render::diagnostics(&diagnostics, style)
        }
    });
    ctx.emit(&text)?;
    if diagnostics.is_empty() {
        Ok(())
    } else {
        Err(Failure::Findings)
    }
}

fn quantify(ctx: &mut Ctx<'_, '_>, args: QuantifyArgs) -> Result<(), Failure> {
    let model = load_model(&args.model)?;
    let doc = load_doc(&model, &args.req)?;
    let scope = args.scope.0;
    let req = match (args.constraint, args.metric, args.cmp, args.threshold, args.unit) {
        (Some(text), None, ..) => QuantifiedRequirement::constraint(scope, text),
        (None, Some(metric), Some(cmp), Some(threshold), Some(unit)) => {
            let mut req = QuantifiedRequirement::threshold(scope, metric, cmp, threshold, unit);
            if let aqm_core::Measure::Threshold { nominal, .. } = &mut req.measure {
                *nominal = args.nominal;
            }
            req
        }
        _ => {
            return Err(Failure::Usage(
                "give either --constraint or all of --metric, --cmp, --threshold and --unit".into(),
            ))
        }
    };
    let doc = doc.quantify(&model, req)?;
    save_doc(&args.req, &doc)?;
    let added = doc.quantified.last().expect("quantify appends");
    let text = ctx.pick(added, || format!("{added}\n"));
    ctx.emit(&text)
}
