//! Command-line front end: `verify`, `classify` and `diagram`.

use std::ffi::OsString;
use std::fmt::Write;

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::catalog::{
    classify, coarse_label, fixed_space_dims, is_involution, parse_element, suborbit_name, E8GroupElem,
    Encoding,
};
use crate::diagram::emit_diagram;
use crate::e8model::Level;
use crate::error::Error;
use crate::suites::{run_verify, Format, JacobiMode, RunConfig, DEFAULT_SEED};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "antipodal", version, about = "Exact checks of maximal antipodal sets in E8 and its subgroups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Md,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassifyFormat {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Which {
    EixOrbits,
    EviiiOrbits,
    Inclusion,
}

impl Which {
    fn name(self) -> &'static str {
        match self {
            Which::EixOrbits => "eix_orbits",
            Which::EviiiOrbits => "eviii_orbits",
            Which::Inclusion => "inclusion",
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("expected a positive integer, got {}", s)),
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run verification suites and print a report
    Verify {
        #[arg(long = "suite", value_parser = [
            "octonion", "triality", "clifford", "rootsys", "e8", "catalog", "tables", "diagrams", "all"
        ])]
        suites: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// full | sampled:N
        #[arg(long, default_value = "sampled:10000")]
        jacobi: JacobiMode,
        #[arg(long, value_parser = positive)]
        parallel: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Fixed dimensions and orbit labels of one element
    Classify {
        #[arg(long)]
        element: String,
        #[arg(long, value_enum, default_value_t = ClassifyFormat::Text)]
        format: ClassifyFormat,
    },
    /// Emit an orbit or inclusion diagram as DOT
    Diagram {
        #[arg(long, value_enum)]
        which: Which,
    },
}

/// What a run printed and how it exited.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn out(code: i32, stdout: String) -> Self {
        CliOutput {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn err(code: i32, stderr: String) -> Self {
        CliOutput {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliOutput::out(EXIT_PASS, text),
                _ => CliOutput::err(EXIT_USAGE, text),
            };
        }
    };
    match cli.command {
        Command::Verify {
            suites,
            seed,
            jacobi,
            parallel,
            format,
        } => {
            let cfg = RunConfig {
                suites,
                seed,
                jacobi,
                parallel,
                format: match format {
                    ReportFormat::Json => Format::Json,
                    ReportFormat::Md => Format::Markdown,
                },
            };
            verify(&cfg)
        }
        Command::Classify { element, format } => classify_cmd(&element, format),
        Command::Diagram { which } => match emit_diagram(which.name()) {
            Ok(dot) => CliOutput::out(EXIT_PASS, dot),
            Err(e) => CliOutput::err(EXIT_FAIL, format!("error: {}\n", e)),
        },
    }
}

pub fn verify(cfg: &RunConfig) -> CliOutput {
    match run_verify(cfg) {
        Ok(report) => {
            let text = match cfg.format {
                Format::Json => format!("{}\n", report.to_json()),
                Format::Markdown => report.to_markdown(),
            };
            CliOutput::out(if report.passed() { EXIT_PASS } else { EXIT_FAIL }, text)
        }
        Err(e @ Error::UnknownSuite(_)) => CliOutput::err(EXIT_USAGE, format!("error: {}\n", e)),
        Err(e) => CliOutput::err(EXIT_FAIL, format!("error: {}\n", e)),
    }
}

/// Per-level outcome of `classify`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LevelResult {
    Label {
        label: String,
        orbit: String,
        restricted_dim: usize,
    },
    NotNormalizing,
    Error(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub element: String,
    pub encoding: &'static str,
    pub involution: bool,
    pub e8_dims: Option<(usize, usize)>,
    pub levels: Vec<(Level, LevelResult)>,
}

pub fn classify_element(g: &E8GroupElem) -> Classification {
    let involution = is_involution(g);
    let encoding = match g.encoding {
        Encoding::PsiPair(..) => "psi",
        Encoding::TorusX(..) => "torus",
    };
    let mut out = Classification {
        element: g.to_string(),
        encoding,
        involution,
        e8_dims: None,
        levels: Vec::new(),
    };
    if !involution {
        return out;
    }
    out.e8_dims = fixed_space_dims(g).ok();
    for level in [Level::F4, Level::E6, Level::E7, Level::E8] {
        let r = (|| -> crate::Result<LevelResult> {
            let o = classify(g, level)?;
            Ok(LevelResult::Label {
                label: coarse_label(g, level)?,
                orbit: suborbit_name(g, level)?,
                restricted_dim: o.restricted_dim,
            })
        })();
        let r = match r {
            Ok(l) => l,
            Err(Error::NotNormalizing(_)) => LevelResult::NotNormalizing,
            Err(e) => LevelResult::Error(e.to_string()),
        };
        out.levels.push((level, r));
    }
    out
}

impl Classification {
    pub fn label(&self, level: Level) -> Option<&str> {
        self.levels.iter().find(|(l, _)| *l == level).and_then(|(_, r)| match r {
            LevelResult::Label { label, .. } => Some(label.as_str()),
            _ => None,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "element: {}", self.element).unwrap();
        writeln!(s, "encoding: {}", self.encoding).unwrap();
        writeln!(s, "involution: {}", if self.involution { "yes" } else { "no" }).unwrap();
        if let Some((p, m)) = self.e8_dims {
            writeln!(s, "e8 fixed dims: ({}, {})", p, m).unwrap();
        }
        for (level, r) in &self.levels {
            match r {
                LevelResult::Label {
                    label,
                    orbit,
                    restricted_dim,
                } => writeln!(s, "{}: {} (orbit {}, fixed dim {})", level.name(), label, orbit, restricted_dim),
                LevelResult::NotNormalizing => writeln!(s, "{}: not normalizing", level.name()),
                LevelResult::Error(e) => writeln!(s, "{}: error: {}", level.name(), e),
            }
            .unwrap();
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let mut levels = Map::new();
        for (level, r) in &self.levels {
            let v = match r {
                LevelResult::Label {
                    label,
                    orbit,
                    restricted_dim,
                } => json!({"label": label, "orbit": orbit, "fixed_dim": restricted_dim}),
                LevelResult::NotNormalizing => json!({"not_normalizing": true}),
                LevelResult::Error(e) => json!({"error": e}),
            };
            levels.insert(level.name().to_string(), v);
        }
        json!({
            "element": self.element,
            "encoding": self.encoding,
            "involution": self.involution,
            "e8_fixed_dims": self.e8_dims.map(|(p, m)| vec![p, m]),
            "levels": levels,
        })
    }
}

fn classify_cmd(expr: &str, format: ClassifyFormat) -> CliOutput {
    let g = match parse_element(expr) {
        Ok(g) => g,
        Err(e) => return CliOutput::err(EXIT_USAGE, format!("error: {}\n", e)),
    };
    let c = classify_element(&g);
    let text = match format {
        ClassifyFormat::Text => c.to_text(),
        ClassifyFormat::Json => format!("{}\n", c.to_json()),
    };
    CliOutput::out(EXIT_PASS, text)
}
