//! Command-line front end. `run` takes argv and two writers and returns
//! the process exit code, so it can be driven from tests.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::certify::{search, CertifyMode, CoefficientBox, SearchConfig, Verdict};
use crate::error::Error;
use crate::picard::DivisorClass;
use crate::regression::{self, Catalog, Family};
use crate::report::{verdict_summary, write_certificates, Format};
use crate::sheaf::{ChernCharacter, PointScheme};
use crate::stability::compare_k_slopes;
use crate::surface::{Surface, SurfaceName};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_NOT_CONSTRUCTIBLE: i32 = 3;
pub const EXIT_CONFIG: i32 = 64;
pub const EXIT_IO: i32 = 74;

pub fn verdict_exit_code(v: Verdict) -> i32 {
    match v {
        Verdict::StrictlyAzStable => EXIT_OK,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
        Verdict::NotConstructible => EXIT_NOT_CONSTRUCTIBLE,
    }
}

const VECTOR_HELP: &str = "Divisor classes are comma-separated integers in the basis \
H (p2), A,B (p1xp1) or H,E (blp2). Quote values with a leading minus sign, \
e.g. -D \" -1,4\" or -D=-1,4.";

#[derive(Debug, Parser)]
#[command(name = "azstab", version, about = "Exact stability certificates on rational surfaces", after_help = VECTOR_HELP)]
pub struct Cli {
    /// Flat `key = value` file; keys are long flag names, flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Default)]
pub struct Common {
    /// p2, p1xp1 or blp2.
    #[arg(short = 's', long)]
    pub surface: Option<String>,
    /// Override the default polarization.
    #[arg(long, allow_hyphen_values = true)]
    pub polarization: Option<String>,
    /// jsonl, csv or table.
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the built-in regression suite.
    Verify {
        /// Restrict to one family: p2, p1xp1, blp2, p2-twist.
        #[arg(long)]
        only: Option<String>,
    },
    /// Certify one (D, C1, C2) candidate.
    Certify {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'D', long = "D", allow_hyphen_values = true)]
        d: Option<String>,
        #[arg(long = "C1", allow_hyphen_values = true)]
        c1: Option<String>,
        #[arg(long = "C2", allow_hyphen_values = true)]
        c2: Option<String>,
        /// theorem1 (all five conditions) or direct.
        #[arg(long)]
        mode: Option<String>,
        /// Treat Z as a special, non-generic intersection.
        #[arg(long)]
        special: bool,
    },
    /// Certify every candidate in a coefficient box.
    Search {
        #[command(flatten)]
        common: Common,
        /// `lo:hi` for every coordinate, or one `lo:hi` per coordinate.
        #[arg(long = "d-box", allow_hyphen_values = true)]
        d_box: Option<String>,
        #[arg(long = "c-box", allow_hyphen_values = true)]
        c_box: Option<String>,
        #[arg(long)]
        mode: Option<String>,
        /// Keep NOT_CONSTRUCTIBLE certificates.
        #[arg(long)]
        all: bool,
    },
    /// Print `h0 h1 h2 chi` of a line bundle.
    Cohomology {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'B', long = "B", allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Compare k-slopes of a subobject F against E, each `rank,c1...,ch2`.
    Compare {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        e: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => EXIT_IO,
            _ => EXIT_CONFIG,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parsed `key = value` file.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct ConfigFile(BTreeMap<String, String>);

const CONFIG_KEYS: [&str; 14] = [
    "surface",
    "polarization",
    "format",
    "workers",
    "output",
    "D",
    "C1",
    "C2",
    "B",
    "mode",
    "special",
    "d-box",
    "c-box",
    "all",
];

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut map = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("config line {}: expected key = value", n + 1))
            })?;
            let k = k.trim().trim_start_matches('-');
            if !CONFIG_KEYS.contains(&k) {
                return Err(Error::Parse(format!(
                    "config line {}: unknown key `{k}`",
                    n + 1
                )));
            }
            map.insert(k.to_owned(), v.trim().trim_matches('"').to_owned());
        }
        Ok(ConfigFile(map))
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        ConfigFile::parse(&text)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    fn flag(&self, key: &str) -> CliResult<bool> {
        match self.get(key) {
            None => Ok(false),
            Some("true" | "1" | "yes") => Ok(true),
            Some("false" | "0" | "no") => Ok(false),
            Some(v) => Err(CliError::Config(format!(
                "`{key}` expects true or false, got `{v}`"
            ))),
        }
    }
}

/// Rewrites `-C1 x` / `-C1=x` into the long form clap understands.
fn normalize_args(args: impl IntoIterator<Item = OsString>) -> Vec<OsString> {
    args.into_iter()
        .map(|a| match a.to_str() {
            Some(s)
                if s == "-C1" || s == "-C2" || s.starts_with("-C1=") || s.starts_with("-C2=") =>
            {
                OsString::from(format!("-{s}"))
            }
            _ => a,
        })
        .collect()
}

pub fn parse_class(text: &str, rank: usize) -> Result<DivisorClass, Error> {
    let coeffs = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("`{}` is not an integer", t.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.len() != rank {
        return Err(Error::DimensionMismatch {
            expected: rank,
            found: coeffs.len(),
        });
    }
    Ok(DivisorClass::new(coeffs))
}

fn parse_mode(text: Option<&str>) -> CliResult<CertifyMode> {
    match text.map(str::trim) {
        None | Some("theorem1") | Some("construction") => Ok(CertifyMode::Construction),
        Some("direct") => Ok(CertifyMode::Direct),
        Some(other) => Err(CliError::Config(format!(
            "unknown mode `{other}` (expected theorem1 or direct)"
        ))),
    }
}

struct Resolved<'a> {
    file: &'a ConfigFile,
}

impl Resolved<'_> {
    fn pick(&self, flag: Option<&str>, key: &str) -> Option<String> {
        flag.map(str::to_owned)
            .or_else(|| self.file.get(key).map(str::to_owned))
    }

    fn require(&self, flag: Option<&str>, key: &str) -> CliResult<String> {
        self.pick(flag, key)
            .ok_or_else(|| CliError::Config(format!("missing required value `{key}`")))
    }

    fn surface(&self, c: &Common) -> CliResult<Surface> {
        let name: SurfaceName = self.require(c.surface.as_deref(), "surface")?.parse()?;
        let s = Surface::by_name(name);
        match self.pick(c.polarization.as_deref(), "polarization") {
            Some(p) => {
                let l = parse_class(&p, s.picard_rank())?;
                Ok(s.with_polarization(l)?)
            }
            None => Ok(s),
        }
    }

    fn format(&self, c: &Common) -> CliResult<Format> {
        Ok(match self.pick(c.format.as_deref(), "format") {
            Some(f) => f.parse()?,
            None => Format::Jsonl,
        })
    }

    fn workers(&self, c: &Common) -> CliResult<usize> {
        match c.workers {
            Some(n) => Ok(n.max(1)),
            None => match self.file.get("workers") {
                Some(v) => v.parse::<usize>().map(|n| n.max(1)).map_err(|_| {
                    CliError::Config(format!("`workers` expects an integer, got `{v}`"))
                }),
                None => Ok(1),
            },
        }
    }

    fn output(&self, c: &Common) -> Option<PathBuf> {
        c.output
            .clone()
            .or_else(|| self.file.get("output").map(PathBuf::from))
    }

    fn class(&self, flag: Option<&str>, key: &str, s: &Surface) -> CliResult<DivisorClass> {
        Ok(parse_class(&self.require(flag, key)?, s.picard_rank())?)
    }
}

fn open_output<'a>(
    path: Option<&Path>,
    stdout: &'a mut dyn Write,
) -> CliResult<Box<dyn Write + 'a>> {
    Ok(match path {
        Some(p) => Box::new(io::BufWriter::new(fs::File::create(p)?)),
        None => Box::new(stdout),
    })
}

/// Entry point: parses `args` (including the program name) and runs.
pub fn run(
    args: impl IntoIterator<Item = OsString>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(normalize_args(args)) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let display = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            if display {
                let _ = write!(stdout, "{rendered}");
                return EXIT_OK;
            }
            let _ = write!(stderr, "{rendered}");
            return EXIT_CONFIG;
        }
    };
    match dispatch(cli, stdout, stderr) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    let file = match &cli.config {
        Some(p) => ConfigFile::load(p)?,
        None => ConfigFile::default(),
    };
    let cfg = Resolved { file: &file };
    match cli.command {
        Command::Verify { only } => cmd_verify(only.as_deref(), stdout),
        Command::Certify {
            common,
            d,
            c1,
            c2,
            mode,
            special,
        } => {
            let s = cfg.surface(&common)?;
            let d = cfg.class(d.as_deref(), "D", &s)?;
            let c1 = cfg.class(c1.as_deref(), "C1", &s)?;
            let c2 = cfg.class(c2.as_deref(), "C2", &s)?;
            let mode = parse_mode(cfg.pick(mode.as_deref(), "mode").as_deref())?;
            let generic = !(special || file.flag("special")?);
            let z = PointScheme::new(c1, c2, generic);
            let cert = mode.certify(&s, &d, &z)?;
            let format = cfg.format(&common)?;
            let mut out = open_output(cfg.output(&common).as_deref(), stdout)?;
            write_certificates(&mut out, format, &s, std::slice::from_ref(&cert))?;
            Ok(verdict_exit_code(cert.verdict))
        }
        Command::Search {
            common,
            d_box,
            c_box,
            mode,
            all,
        } => {
            let s = cfg.surface(&common)?;
            let rank = s.picard_rank();
            let d_box = CoefficientBox::parse(&cfg.require(d_box.as_deref(), "d-box")?, rank)?;
            let c_box = CoefficientBox::parse(&cfg.require(c_box.as_deref(), "c-box")?, rank)?;
            let mut config = SearchConfig::new(d_box, c_box);
            config.mode = parse_mode(cfg.pick(mode.as_deref(), "mode").as_deref())?;
            config.workers = cfg.workers(&common)?;
            config.keep_not_constructible = all || file.flag("all")?;
            cmd_search(
                &s,
                &config,
                cfg.format(&common)?,
                cfg.output(&common).as_deref(),
                stdout,
                stderr,
            )
        }
        Command::Cohomology { common, b } => {
            let s = cfg.surface(&common)?;
            let b = cfg.class(b.as_deref(), "B", &s)?;
            let t = s.line_bundle_cohomology(&b)?;
            writeln!(stdout, "{} {} {} {}", t.h0, t.h1, t.h2, t.euler())?;
            Ok(EXIT_OK)
        }
        Command::Compare { common, e, f } => {
            let s = cfg.surface(&common)?;
            let e = ChernCharacter::parse(&e, s.picard_rank())?;
            let f = ChernCharacter::parse(&f, s.picard_rank())?;
            let cmp = compare_k_slopes(&s, &e, &f)?;
            writeln!(stdout, "verdict {:?}", cmp.verdict)?;
            writeln!(stdout, "witness_k0 {}", cmp.witness_k0)?;
            match cmp.leading_term_degree {
                Some(deg) => writeln!(stdout, "leading_term_degree {deg}")?,
                None => writeln!(stdout, "leading_term_degree none")?,
            }
            writeln!(stdout, "cross {}", cmp.cross)?;
            Ok(EXIT_OK)
        }
    }
}

fn cmd_verify(only: Option<&str>, stdout: &mut dyn Write) -> CliResult<i32> {
    let only = only.map(str::parse::<Family>).transpose()?;
    let outcomes = regression::run(&Catalog::default(), only);
    write!(stdout, "{}", regression::render(&outcomes))?;
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    writeln!(stdout, "\n{} checks, {failed} failed", outcomes.len())?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_search(
    s: &Surface,
    config: &SearchConfig,
    format: Format,
    output: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CliResult<i32> {
    let single = config.d_box.points().len() == 1;
    let mut config = config.clone();
    let candidates = crate::certify::search_candidates(s, &config)?.len();
    if single && candidates == 1 {
        config.keep_not_constructible = true;
    }
    let outcome = search(s, &config)?;
    {
        let mut out = open_output(output, stdout)?;
        write_certificates(&mut out, format, s, &outcome.certificates)?;
    }
    write!(stderr, "{}", verdict_summary(&outcome.certificates))?;
    writeln!(
        stderr,
        "examined {}, filtered {}, failed {}",
        outcome.examined,
        outcome.filtered,
        outcome.failures.len()
    )?;
    for f in &outcome.failures {
        writeln!(
            stderr,
            "candidate D={} C1={} C2={}: {}",
            f.d, f.c1, f.c2, f.error
        )?;
    }
    if single && candidates == 1 {
        if let Some(cert) = outcome.certificates.first() {
            return Ok(verdict_exit_code(cert.verdict));
        }
    }
    Ok(EXIT_OK)
}
