//! Command-line surface for `mbm-core`.
//!
//! [`run`] parses arguments, executes one command and returns what should
//! be written to stdout/stderr together with the exit code, so the binary
//! is a thin wrapper and the whole surface is testable in-process.
//!
//! Exit codes: `0` success, `1` invalid input, `2` internal consistency
//! failure.

pub mod record;

use std::ffi::OsString;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mbm_core::{
    bridge_scan, chamber_of, classify, enumerate_mbm_orbits, extremal_qhat, genus_bound, realize_orbit, scan_walls,
    BridgeBounds, Error, Family, FamilyKind, PicClass, Rational, ScanWindow,
};

use record::{
    BmCheckPayload, ChamberOut, ClassifyPayload, CompletenessOut, EnumeratePayload, OrbitOut, OutputRecord, Payload,
    WallsPayload, COMPLETENESS_NOTE,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_INTERNAL: u8 = 2;

/// Enumerate and classify MBM classes of K3^[n] and Kummer type manifolds.
///
/// Classes are written f*x + c*e where e is half the exceptional divisor
/// (q(e) = -t) and x is orthogonal to e with q(x) = 2d. Note that --d is
/// the HALF-square of x.
#[derive(Debug, Parser)]
#[command(name = "mbm", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every MBM monodromy orbit with its canonical class and curve.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Decide whether f*x + c*e is MBM and report its orbit.
    Classify {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        f: i64,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        /// Half-square of x: q(x) = 2d.
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Scan MBM walls in the positive cone of <2d> + <-t>.
    Walls {
        #[command(flatten)]
        family: FamilyArgs,
        /// Half-square of x: q(x) = 2d.
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        /// Bound on |f| and |c| of wall sources.
        #[arg(long, allow_hyphen_values = true)]
        bound: i64,
        /// Lower bound on the ray slope q/p, as an integer or p/q.
        #[arg(long, allow_hyphen_values = true)]
        slope_lo: Option<RationalArg>,
        /// Upper bound on the ray slope q/p, as an integer or p/q.
        #[arg(long, allow_hyphen_values = true)]
        slope_hi: Option<RationalArg>,
        /// Report the chamber containing the class f*x + c*e, given as "f,c".
        #[arg(long, allow_hyphen_values = true)]
        probe: Option<ProbeArg>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compare orbits reached from Mukai-vector walls with the enumeration.
    BmCheck {
        #[command(flatten)]
        family: FamilyArgs,
        /// Bound on |u|.
        #[arg(long)]
        u: i64,
        /// Bound on |s|.
        #[arg(long)]
        s: i64,
        /// Bound on |kappa^2|.
        #[arg(long)]
        kappa: i64,
    },
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long = "type", value_enum)]
    pub kind: KindArg,
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
}

impl FamilyArgs {
    fn family(&self) -> Result<Family, Error> {
        let kind = match self.kind {
            KindArg::K3 => FamilyKind::K3Type,
            KindArg::Kummer => FamilyKind::KummerType,
        };
        Family::new(kind, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    K3,
    Kummer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalArg(pub Rational);

impl FromStr for RationalArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |x: &str| x.trim().parse::<i128>().map_err(|e| format!("invalid rational {s:?}: {e}"));
        match s.split_once('/') {
            Some((num, den)) => {
                let den = parse(den)?;
                if den == 0 {
                    return Err(format!("invalid rational {s:?}: zero denominator"));
                }
                Ok(RationalArg(Rational::new(parse(num)?, den)))
            }
            None => Ok(RationalArg(Rational::from_integer(parse(s)?))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProbeArg {
    pub f: i64,
    pub c: i64,
}

impl FromStr for ProbeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (f, c) = s.split_once(',').ok_or_else(|| format!("expected \"f,c\", got {s:?}"))?;
        let parse = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("invalid probe {s:?}: {e}"));
        Ok(ProbeArg { f: parse(f)?, c: parse(c)? })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn input_error(msg: impl Into<String>) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {}\n", msg.into()), code: EXIT_INPUT }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        let code = if e.is_internal() { EXIT_INTERNAL } else { EXIT_INPUT };
        Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: rendered, code: EXIT_INPUT }
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    execute(&cli.command).unwrap_or_else(Outcome::from)
}

fn execute(command: &Command) -> Result<Outcome, Error> {
    match command {
        Command::Enumerate { family, format } => cmd_enumerate(family.family()?, *format),
        Command::Classify { family, f, c, d } => {
            cmd_classify(PicClass::new((*f).into(), (*c).into(), (*d).into(), family.family()?))
        }
        Command::Walls { family, d, bound, slope_lo, slope_hi, probe, format } => {
            let window = ScanWindow::new(slope_lo.map(|r| r.0), slope_hi.map(|r| r.0), (*bound).into())?;
            cmd_walls(family.family()?, (*d).into(), &window, *probe, *format)
        }
        Command::BmCheck { family, u, s, kappa } => {
            let family = family.family()?;
            if *u <= 0 || *s <= 0 || *kappa <= 0 {
                return Ok(Outcome::input_error("bm-check bounds --u, --s and --kappa must be positive"));
            }
            cmd_bm_check(family, BridgeBounds { u: (*u).into(), s: (*s).into(), kappa_sq: (*kappa).into() })
        }
    }
}

pub fn cmd_enumerate(family: Family, format: Format) -> Result<Outcome, Error> {
    let rows = enumerate_mbm_orbits(family)
        .into_iter()
        .map(|o| realize_orbit(family, &o).map(|c| (o, c)))
        .collect::<Result<Vec<_>, _>>()?;
    let out = match format {
        Format::Csv => record::orbits_csv(&rows),
        Format::Json => {
            let payload = EnumeratePayload {
                orbit_count: rows.len(),
                extremal_q_hat: extremal_qhat(family).into(),
                genus_bound: genus_bound(family),
                orbits: rows.iter().map(|(o, c)| OrbitOut::new(o, Some(c))).collect(),
            };
            OutputRecord::new("enumerate", family, Payload::Enumerate(payload)).to_json()
        }
    };
    Ok(Outcome::ok(out))
}

pub fn cmd_classify(alpha: PicClass) -> Result<Outcome, Error> {
    let verdict = classify(&alpha)?;
    let payload = ClassifyPayload::new(
        &alpha,
        alpha.divisibility()?,
        alpha.delta()?,
        alpha.dual_class()?.square(),
        &verdict,
    );
    Ok(Outcome::ok(OutputRecord::new("classify", alpha.family, Payload::Classify(payload)).to_json()))
}

pub fn cmd_walls(
    family: Family,
    d: i128,
    window: &ScanWindow,
    probe: Option<ProbeArg>,
    format: Format,
) -> Result<Outcome, Error> {
    if format == Format::Csv && probe.is_some() {
        return Ok(Outcome::input_error("--probe output is only available with --format json"));
    }
    let walls = scan_walls(family, d, window)?;
    if format == Format::Csv {
        return Ok(Outcome::ok(record::walls_csv(&walls)));
    }
    let chamber = match probe {
        Some(p) => {
            let probe = PicClass::new(p.f.into(), p.c.into(), d, family);
            Some(ChamberOut::new(&probe, &chamber_of(family, d, &probe, window)?))
        }
        None => None,
    };
    let payload = WallsPayload {
        d,
        window: window.into(),
        completeness: CompletenessOut { complete_within_bound: window.coeff_bound, note: COMPLETENESS_NOTE },
        wall_count: walls.len(),
        walls: walls.iter().map(Into::into).collect(),
        chamber,
    };
    Ok(Outcome::ok(OutputRecord::new("walls", family, Payload::Walls(payload)).to_json()))
}

pub fn cmd_bm_check(family: Family, bounds: BridgeBounds) -> Result<Outcome, Error> {
    let report = bridge_scan(family, bounds)?;
    let payload = BmCheckPayload::from(&report);
    let stdout = OutputRecord::new("bm-check", family, Payload::BmCheck(payload)).to_json();
    let (code, stderr) = if !report.unexpected().is_empty() {
        (EXIT_INTERNAL, format!("error: walls produced orbits outside the enumeration: {:?}\n", report.unexpected()))
    } else if !report.matches() {
        (EXIT_INPUT, format!("bounds too small: {} orbit(s) not reached\n", report.unreached().len()))
    } else {
        (EXIT_OK, String::new())
    };
    Ok(Outcome { stdout, stderr, code })
}
