//! Run configuration files.
//!
//! The format is line oriented:
//!
//! ```text
//! # slow Hermitian sweep
//! [chain]
//! n = 1024
//! tau = 1000
//!
//! [evolve]
//! sample_count = 201
//! ```
//!
//! Every key belongs to a section. Overrides given on the command line may
//! name the section explicitly (`chain.tau=50`) or use the bare key, which
//! resolves first to the section of the running command and then to the
//! shared sections.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use nqa_core::ode::OdeOptions;
use nqa_core::quench::InitialState;
use nqa_core::ChainParams;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Evolve,
    SweepTau,
    Correlations,
    Defects,
    Scaling,
}

impl Command {
    pub const ALL: [Command; 5] =
        [Command::Evolve, Command::SweepTau, Command::Correlations, Command::Defects, Command::Scaling];

    pub fn name(self) -> &'static str {
        match self {
            Command::Evolve => "evolve",
            Command::SweepTau => "sweep-tau",
            Command::Correlations => "correlations",
            Command::Defects => "defects",
            Command::Scaling => "scaling",
        }
    }
}

impl FromStr for Command {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| ConfigError::new(format!("unknown command `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    pub message: String,
}

impl ConfigError {
    pub fn new(message: impl Into<String>) -> Self {
        Self { message: message.into() }
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for ConfigError {}

/// Sections shared by every command.
const SHARED: [&str; 3] = ["chain", "run", "tolerances"];

/// Every accepted `(section, key)` pair.
const KEYS: &[(&str, &str)] = &[
    ("chain", "n"),
    ("chain", "j"),
    ("chain", "g"),
    ("chain", "delta"),
    ("chain", "tau"),
    ("run", "command"),
    ("run", "output"),
    ("run", "initial"),
    ("tolerances", "ode_rtol"),
    ("tolerances", "ode_atol"),
    ("tolerances", "ode_max_steps"),
    ("tolerances", "determinant_imag"),
    ("evolve", "sample_count"),
    ("sweep-tau", "n_values"),
    ("sweep-tau", "deltas"),
    ("sweep-tau", "target"),
    ("sweep-tau", "rel_width"),
    ("sweep-tau", "cap_factor"),
    ("sweep-tau", "screen_exponent"),
    ("sweep-tau", "initial"),
    ("correlations", "max_p"),
    ("correlations", "deltas"),
    ("correlations", "ground_state"),
    ("defects", "deltas"),
    ("defects", "numeric"),
    ("scaling", "n_values"),
    ("scaling", "deltas"),
    ("scaling", "target"),
];

/// Raw `section.key -> value` entries, before interpretation.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RawConfig {
    entries: BTreeMap<(String, String), String>,
}

impl RawConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut raw = RawConfig::default();
        let mut section: Option<String> = None;
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |msg: String| ConfigError::new(format!("line {}: {msg}", i + 1));
            if let Some(rest) = line.strip_prefix('[') {
                let name = rest.strip_suffix(']').ok_or_else(|| at("unterminated section header".into()))?.trim();
                if !KEYS.iter().any(|(s, _)| *s == name) {
                    return Err(at(format!("unknown section [{name}]")));
                }
                section = Some(name.to_string());
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| at(format!("expected `key = value`, got `{line}`")))?;
            let key = key.trim();
            let sec = match &section {
                Some(s) => s.clone(),
                None => resolve(key, None).map_err(|e| at(e.message))?.0,
            };
            if !KEYS.contains(&(sec.as_str(), key)) {
                return Err(at(format!("unknown key `{key}` in [{sec}]")));
            }
            raw.entries.insert((sec, key.to_string()), value.trim().to_string());
        }
        Ok(raw)
    }

    /// Applies one `key=value` or `section.key=value` override.
    pub fn set_override(&mut self, spec: &str, command: Option<Command>) -> Result<(), ConfigError> {
        let (key, value) = spec
            .split_once('=')
            .ok_or_else(|| ConfigError::new(format!("override `{spec}` is not of the form key=value")))?;
        let key = key.trim().trim_start_matches("--");
        let (sec, key) = match key.split_once('.') {
            Some((s, k)) => {
                if !KEYS.contains(&(s, k)) {
                    return Err(ConfigError::new(format!("unknown key `{s}.{k}`")));
                }
                (s.to_string(), k.to_string())
            }
            None => resolve(key, command)?,
        };
        self.entries.insert((sec, key), value.trim().to_string());
        Ok(())
    }

    fn get(&self, section: &str, key: &str) -> Option<&str> {
        self.entries.get(&(section.to_string(), key.to_string())).map(String::as_str)
    }

    fn parse_value<T: FromStr>(&self, section: &str, key: &str) -> Result<Option<T>, ConfigError>
    where
        T::Err: fmt::Display,
    {
        match self.get(section, key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|e| ConfigError::new(format!("{section}.{key} = `{v}`: {e}"))),
        }
    }

    fn parse_list<T: FromStr>(&self, section: &str, key: &str) -> Result<Option<Vec<T>>, ConfigError>
    where
        T::Err: fmt::Display,
    {
        match self.get(section, key) {
            None => Ok(None),
            Some(v) => v
                .split(',')
                .map(|x| x.trim())
                .filter(|x| !x.is_empty())
                .map(|x| x.parse().map_err(|e| ConfigError::new(format!("{section}.{key}: `{x}`: {e}"))))
                .collect::<Result<Vec<T>, _>>()
                .map(Some),
        }
    }
}

/// Section a bare key belongs to.
fn resolve(key: &str, command: Option<Command>) -> Result<(String, String), ConfigError> {
    let mut candidates: Vec<&str> = Vec::new();
    if let Some(c) = command {
        candidates.push(c.name());
    }
    candidates.extend(SHARED);
    for s in candidates {
        if KEYS.contains(&(s, key)) {
            return Ok((s.to_string(), key.to_string()));
        }
    }
    let owners: Vec<&str> = KEYS.iter().filter(|(_, k)| *k == key).map(|(s, _)| *s).collect();
    match owners.as_slice() {
        [] => Err(ConfigError::new(format!("unknown key `{key}`"))),
        [only] => Ok((only.to_string(), key.to_string())),
        _ => Err(ConfigError::new(format!("key `{key}` is ambiguous here; write it as section.{key}"))),
    }
}

fn parse_initial(s: &str) -> Result<InitialState, ConfigError> {
    match s {
        "diabatic" => Ok(InitialState::Diabatic),
        "adiabatic" | "adiabatic-ground" => Ok(InitialState::AdiabaticGround),
        other => Err(ConfigError::new(format!("initial must be `diabatic` or `adiabatic`, got `{other}`"))),
    }
}

pub fn initial_name(s: InitialState) -> &'static str {
    match s {
        InitialState::Diabatic => "diabatic",
        InitialState::AdiabaticGround => "adiabatic",
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tolerances {
    pub ode_rtol: f64,
    pub ode_atol: f64,
    pub ode_max_steps: u64,
    /// Largest imaginary part accepted in a correlator determinant.
    pub determinant_imag: f64,
}

impl Tolerances {
    pub fn ode(&self) -> OdeOptions {
        OdeOptions { rtol: self.ode_rtol, atol: self.ode_atol, max_steps: self.ode_max_steps }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainConfig {
    pub n: usize,
    pub j: f64,
    pub g: f64,
    pub delta: f64,
    pub tau: f64,
}

impl ChainConfig {
    pub fn params(&self) -> ChainParams {
        ChainParams { n: self.n, j: self.j, g: self.g, delta: self.delta, tau: self.tau }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum CommandConfig {
    Evolve {
        sample_count: usize,
    },
    SweepTau {
        n_values: Vec<usize>,
        deltas: Vec<f64>,
        target: f64,
        rel_width: f64,
        cap_factor: f64,
        screen_exponent: f64,
        #[serde(serialize_with = "ser_initial")]
        initial: InitialState,
    },
    Correlations {
        max_p: usize,
        deltas: Vec<f64>,
        ground_state: bool,
    },
    Defects {
        deltas: Vec<f64>,
        numeric: bool,
    },
    Scaling {
        n_values: Vec<usize>,
        deltas: Vec<f64>,
        target: f64,
    },
}

fn ser_initial<S: serde::Serializer>(s: &InitialState, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(initial_name(*s))
}

/// A fully interpreted, validated run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub chain: ChainConfig,
    #[serde(serialize_with = "ser_initial")]
    pub initial: InitialState,
    pub tolerances: Tolerances,
    pub output: PathBuf,
    pub command: CommandConfig,
}

impl RunConfig {
    pub fn kind(&self) -> Command {
        match self.command {
            CommandConfig::Evolve { .. } => Command::Evolve,
            CommandConfig::SweepTau { .. } => Command::SweepTau,
            CommandConfig::Correlations { .. } => Command::Correlations,
            CommandConfig::Defects { .. } => Command::Defects,
            CommandConfig::Scaling { .. } => Command::Scaling,
        }
    }

    /// Interprets raw entries for `command`, filling defaults.
    pub fn from_raw(raw: &RawConfig, command: Command) -> Result<Self, ConfigError> {
        if let Some(c) = raw.get("run", "command") {
            let named: Command = c.parse()?;
            if named != command {
                return Err(ConfigError::new(format!(
                    "configuration is for `{}` but `{}` was requested",
                    named.name(),
                    command.name()
                )));
            }
        }
        let chain = ChainConfig {
            n: raw.parse_value("chain", "n")?.unwrap_or(512),
            j: raw.parse_value("chain", "j")?.unwrap_or(0.5),
            g: raw.parse_value("chain", "g")?.unwrap_or(10.0),
            delta: raw.parse_value("chain", "delta")?.unwrap_or(0.0),
            tau: raw.parse_value("chain", "tau")?.unwrap_or(1000.0),
        };
        chain.params().validate().map_err(|e| ConfigError::new(e.to_string()))?;
        let ode = OdeOptions::default();
        let tolerances = Tolerances {
            ode_rtol: raw.parse_value("tolerances", "ode_rtol")?.unwrap_or(ode.rtol),
            ode_atol: raw.parse_value("tolerances", "ode_atol")?.unwrap_or(ode.atol),
            ode_max_steps: raw.parse_value("tolerances", "ode_max_steps")?.unwrap_or(ode.max_steps),
            determinant_imag: raw
                .parse_value("tolerances", "determinant_imag")?
                .unwrap_or(nqa_core::observables::correlation::IMAG_TOLERANCE),
        };
        tolerances.ode().validate().map_err(ConfigError::new)?;
        if !(tolerances.determinant_imag > 0.0 && tolerances.determinant_imag.is_finite()) {
            return Err(ConfigError::new("tolerances.determinant_imag must be positive"));
        }
        let initial = match raw.get("run", "initial") {
            Some(s) => parse_initial(s)?,
            None => InitialState::Diabatic,
        };
        let output = PathBuf::from(raw.get("run", "output").unwrap_or(match command {
            Command::Evolve => "evolve.csv",
            Command::SweepTau => "sweep-tau.csv",
            Command::Correlations => "correlations.csv",
            Command::Defects => "defects.csv",
            Command::Scaling => "scaling.csv",
        }));
        let sec = command.name();
        let deltas = |raw: &RawConfig| -> Result<Vec<f64>, ConfigError> {
            let d = raw.parse_list(sec, "deltas")?.unwrap_or_else(|| vec![chain.delta]);
            if d.is_empty() {
                return Err(ConfigError::new(format!("{sec}.deltas is empty")));
            }
            for &x in &d {
                if !(x.is_finite() && x >= 0.0) {
                    return Err(ConfigError::new(format!("{sec}.deltas: {x} is not a non-negative number")));
                }
            }
            Ok(d)
        };
        let n_values = |raw: &RawConfig| -> Result<Vec<usize>, ConfigError> {
            let ns: Vec<usize> = raw.parse_list(sec, "n_values")?.unwrap_or_else(|| vec![chain.n]);
            if ns.is_empty() {
                return Err(ConfigError::new(format!("{sec}.n_values is empty")));
            }
            for &n in &ns {
                if n < 4 || n % 2 != 0 {
                    return Err(ConfigError::new(format!("{sec}.n_values: N must be even and >= 4, got {n}")));
                }
            }
            Ok(ns)
        };
        let target = |raw: &RawConfig| -> Result<f64, ConfigError> {
            let t = raw.parse_value(sec, "target")?.unwrap_or(0.99);
            if !(t > 0.0 && t < 1.0) {
                return Err(ConfigError::new(format!("{sec}.target must lie in (0, 1), got {t}")));
            }
            Ok(t)
        };
        let command = match command {
            Command::Evolve => {
                let sample_count = raw.parse_value("evolve", "sample_count")?.unwrap_or(101);
                if sample_count < 2 {
                    return Err(ConfigError::new(format!("evolve.sample_count must be at least 2, got {sample_count}")));
                }
                CommandConfig::Evolve { sample_count }
            }
            Command::SweepTau => {
                let rel_width: f64 = raw.parse_value("sweep-tau", "rel_width")?.unwrap_or(1e-3);
                let cap_factor: f64 = raw.parse_value("sweep-tau", "cap_factor")?.unwrap_or(16.0);
                let screen_exponent: f64 = raw.parse_value("sweep-tau", "screen_exponent")?.unwrap_or(12.0 * std::f64::consts::LN_10);
                if !(rel_width > 0.0 && rel_width < 1.0) {
                    return Err(ConfigError::new("sweep-tau.rel_width must lie in (0, 1)"));
                }
                if !(cap_factor >= 1.0 && cap_factor.is_finite()) {
                    return Err(ConfigError::new("sweep-tau.cap_factor must be at least 1"));
                }
                if !(screen_exponent > 0.0) {
                    return Err(ConfigError::new("sweep-tau.screen_exponent must be positive"));
                }
                let initial = match raw.get("sweep-tau", "initial") {
                    Some(s) => parse_initial(s)?,
                    None => InitialState::AdiabaticGround,
                };
                CommandConfig::SweepTau {
                    n_values: n_values(raw)?,
                    deltas: deltas(raw)?,
                    target: target(raw)?,
                    rel_width,
                    cap_factor,
                    screen_exponent,
                    initial,
                }
            }
            Command::Correlations => {
                let max_p = raw.parse_value("correlations", "max_p")?.unwrap_or(100);
                // One extra order is kept so that G_p is reported up to max_p.
                let limit = nqa_core::observables::correlation::MAX_ORDER - 1;
                if max_p == 0 || max_p > limit {
                    return Err(ConfigError::new(format!("correlations.max_p must lie in 1..={limit}, got {max_p}")));
                }
                CommandConfig::Correlations {
                    max_p,
                    deltas: deltas(raw)?,
                    ground_state: raw.parse_value("correlations", "ground_state")?.unwrap_or(false),
                }
            }
            Command::Defects => CommandConfig::Defects {
                deltas: deltas(raw)?,
                numeric: raw.parse_value("defects", "numeric")?.unwrap_or(true),
            },
            Command::Scaling => {
                CommandConfig::Scaling { n_values: n_values(raw)?, deltas: deltas(raw)?, target: target(raw)? }
            }
        };
        Ok(RunConfig { chain, initial, tolerances, output, command })
    }
}
