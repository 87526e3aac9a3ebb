//! `knotbound` command-line front end.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use knotbound::bounds::SlicingData;
use knotbound::bracket::{BracketOptions, Engine};
use knotbound::builtins::{builtin, BUILTIN_NAMES};
use knotbound::checkerboard::{invariant_report, InvariantReport};
use knotbound::diagram::{parse_diagram_file, parse_dt, parse_pd, PlanarDiagram, Sign};
use knotbound::moves::{
    blowup, linking_number, verify_lemma31_with, whitehead_double, BlowupSite, CrossingSelector, DoubleSpec,
    LemmaReport,
};
use knotbound::pipeline::{bounds_report, family_row, FAMILY_CSV_HEADER};
use knotbound::{Error, ErrorKind};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "knotbound",
    version,
    about = "Knot diagram invariants and concordance bounds"
)]
struct Cli {
    /// Bracket engine.
    #[arg(long, global = true, env = "KNOT_ENGINE", default_value = "auto", value_parser = parse_engine)]
    engine: Engine,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant report for one diagram, or every diagram of a file.
    Invariants {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        format: Format,
    },
    /// Table for the twist-knot family K_3, K_5, ...
    Family {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[command(flatten)]
        format: Format,
    },
    /// Twisted positive-clasped Whitehead double.
    Double {
        #[command(flatten)]
        input: Input,
        /// Framing parameter k.
        #[arg(long, visible_alias = "k", allow_negative_numbers = true, default_value_t = 0)]
        twists: i64,
    },
    /// Full twist on the strands crossed by a fiducial arc.
    Blowup {
        #[command(flatten)]
        input: Input,
        /// Arc labels in the order the fiducial arc crosses them, e.g. "3,4,7".
        #[arg(long)]
        site: String,
        #[arg(long, allow_negative_numbers = true, default_value = "+1", value_parser = parse_sign)]
        sign: Sign,
    },
    /// Checks both blow-up identities at a positive crossing of the companion.
    VerifyLemma {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        crossing: usize,
        #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
        k: i64,
    },
    /// Interval for t_nu from the Thurston-Bennequin bounds and optional slicing data.
    Bounds {
        #[command(flatten)]
        input: Input,
        /// Crossing-change recipes "p,n;p,n;...".
        #[arg(long)]
        slicing: Option<String>,
        #[command(flatten)]
        format: Format,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// PD code, e.g. "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"; empty for the unknot.
    #[arg(long)]
    pd: Option<String>,
    /// DT code, e.g. "4 6 2".
    #[arg(long, allow_hyphen_values = true)]
    dt: Option<String>,
    /// Built-in diagram name.
    #[arg(long)]
    name: Option<String>,
    /// File with one `[name:] code` line per diagram.
    #[arg(long)]
    file: Option<String>,
}

#[derive(Args)]
#[group(multiple = false)]
struct Format {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    csv: bool,
}

fn parse_engine(s: &str) -> Result<Engine, String> {
    s.parse()
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s.trim() {
        "+1" | "1" | "+" => Ok(Sign::Positive),
        "-1" | "-" => Ok(Sign::Negative),
        other => Err(format!("sign must be +1 or -1, got `{other}`")),
    }
}

impl Input {
    fn diagrams(&self) -> Result<Vec<(Option<String>, PlanarDiagram)>, Error> {
        if let Some(pd) = &self.pd {
            return Ok(vec![(None, parse_pd(pd)?)]);
        }
        if let Some(dt) = &self.dt {
            return Ok(vec![(None, parse_dt(dt)?)]);
        }
        if let Some(name) = &self.name {
            let d = builtin(name).ok_or_else(|| {
                Error::Input(format!(
                    "unknown built-in `{name}` (known: {})",
                    BUILTIN_NAMES.join(", ")
                ))
            })?;
            return Ok(vec![(Some(name.clone()), d)]);
        }
        let path = self.file.as_deref().expect("clap requires one input");
        let text = fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}")))?;
        let parsed = parse_diagram_file(&text).map_err(|(line, e)| Error::Input(format!("{path}:{line}: {e}")))?;
        if parsed.is_empty() {
            return Err(Error::Input(format!("{path}: no diagrams")));
        }
        Ok(parsed.into_iter().map(|nd| (nd.name, nd.diagram)).collect())
    }

    fn single(&self) -> Result<(Option<String>, PlanarDiagram), Error> {
        let mut all = self.diagrams()?;
        if all.len() != 1 {
            return Err(Error::Input(format!("expected one diagram, got {}", all.len())));
        }
        Ok(all.pop().expect("one diagram"))
    }
}

#[derive(Serialize)]
struct Named<T: Serialize> {
    name: Option<String>,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct DiagramOutput {
    crossings: usize,
    writhe: i64,
    pd: String,
}

impl DiagramOutput {
    fn of(d: &PlanarDiagram) -> Self {
        DiagramOutput {
            crossings: d.crossing_count(),
            writhe: d.writhe(),
            pd: d.to_pd_string(),
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn csv_cell<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

const INVARIANTS_CSV_HEADER: &str = "name,n,w,nplus,X,Y,s0,sigma,m,tb,tb_mirror,jones";

fn invariants_csv(name: &Option<String>, r: &InvariantReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{}",
        name.as_deref().unwrap_or(""),
        r.n,
        r.w,
        r.nplus,
        csv_cell(r.x),
        csv_cell(r.y),
        csv_cell(r.s0),
        csv_cell(r.sigma),
        r.m,
        csv_cell(r.tb),
        csv_cell(r.tb_mirror),
        r.jones
    )
}

fn run(cli: Cli) -> Result<String, Error> {
    let opts = BracketOptions::with_engine(cli.engine);
    match cli.command {
        Command::Invariants { input, format } => {
            let reports = input
                .diagrams()?
                .into_iter()
                .map(|(name, d)| {
                    Ok(Named {
                        name,
                        body: invariant_report(&d, &opts)?,
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            if format.csv {
                let mut lines = vec![INVARIANTS_CSV_HEADER.to_string()];
                lines.extend(reports.iter().map(|r| invariants_csv(&r.name, &r.body)));
                Ok(lines.join("\n"))
            } else if input.file.is_some() {
                Ok(json(&reports))
            } else {
                Ok(json(&reports[0]))
            }
        }
        Command::Family { max_n, format } => {
            if max_n == 0 {
                return Err(Error::Input("--max-n must be at least 1".into()));
            }
            let rows = (1..=max_n)
                .map(|n| family_row(n, &opts))
                .collect::<Result<Vec<_>, _>>()?;
            if format.json {
                Ok(json(&rows))
            } else {
                let mut lines = vec![FAMILY_CSV_HEADER.to_string()];
                lines.extend(rows.iter().map(|r| r.to_csv()));
                Ok(lines.join("\n"))
            }
        }
        Command::Double { input, twists } => {
            let (name, d) = input.single()?;
            let spec = DoubleSpec::new(d, twists);
            let out = whitehead_double(&spec);
            Ok(json(&Named {
                name,
                body: DoubleReport {
                    k: twists,
                    box_twists: spec.box_twists(),
                    diagram: DiagramOutput::of(&out),
                },
            }))
        }
        Command::Blowup { input, site, sign } => {
            let (name, d) = input.single()?;
            let mut site: BlowupSite = site.parse()?;
            site.sign = sign;
            let linking = linking_number(&d, &site)?;
            let out = blowup(&d, &site)?;
            Ok(json(&Named {
                name,
                body: BlowupReport {
                    site,
                    linking_number: linking,
                    diagram: DiagramOutput::of(&out),
                },
            }))
        }
        Command::VerifyLemma { input, crossing, k } => {
            let (name, d) = input.single()?;
            let report = verify_lemma31_with(&d, CrossingSelector::new(crossing), k, &opts)?;
            Ok(json(&Named {
                name,
                body: LemmaOutput { status: "PASS", report },
            }))
        }
        Command::Bounds { input, slicing, format } => {
            let (name, d) = input.single()?;
            let slicing = slicing.map(|s| s.parse::<SlicingData>()).transpose()?;
            let r = bounds_report(&d, slicing.as_ref(), &opts)?;
            if format.csv {
                let c = &r.combined;
                Ok(format!(
                    "name,tb,tb_mirror,lower,upper,lower_source,upper_source\n{},{},{},{},{},{},{}",
                    name.as_deref().unwrap_or(""),
                    r.tb,
                    r.tb_mirror,
                    c.lower,
                    c.upper,
                    c.lower_source,
                    c.upper_source
                ))
            } else {
                Ok(json(&Named { name, body: r }))
            }
        }
    }
}

#[derive(Serialize)]
struct DoubleReport {
    k: i64,
    box_twists: i64,
    #[serde(flatten)]
    diagram: DiagramOutput,
}

#[derive(Serialize)]
struct BlowupReport {
    site: BlowupSite,
    linking_number: i64,
    #[serde(flatten)]
    diagram: DiagramOutput,
}

#[derive(Serialize)]
struct LemmaOutput {
    status: &'static str,
    #[serde(flatten)]
    report: LemmaReport,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::Input => 2,
                ErrorKind::Precondition => 3,
                ErrorKind::Internal => 4,
            };
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
