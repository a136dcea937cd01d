//! Flag parsing and the audit configuration shared by every command.

use std::collections::BTreeMap;

use gmet::catalog::{self, ExclusionBands, CURVATURE_BANDS};
use gmet::metric::MetricSpec;
use gmet::parse::parse_metric_document;

use crate::json::Json;

#[derive(Clone, Debug)]
pub struct AuditConfig {
    pub command: String,
    /// Catalog name or .gmet path.
    pub metric: String,
    pub params: BTreeMap<String, f64>,
    pub lambda: f64,
    pub samples: usize,
    pub seed: u64,
    /// Command-specific tolerance (claim verdicts, identity bound,
    /// quadrature comparison); None means the command default.
    pub tol: Option<f64>,
    pub out: Option<String>,
    pub format: Format,
    pub bands: ExclusionBands,
    // horizon-specific knobs
    pub k_max: i64,
    pub cases: Vec<gmet::analysis::HorizonCase>,
    pub arcs: Vec<gmet::analysis::ArcTag>,
    pub r_samples: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Svg,
}

pub const USAGE: &str = "\
usage: gmet <verify|identities|horizons|construct> [flags]

flags:
  --metric <name|path>   catalog metric or .gmet document
                         (catalog: minkowski, schwarzschild,
                          time-periodic-polar, time-periodic-tilde;
                          construct also accepts ansatz-x, ansatz-log,
                          ansatz-2x or a template file)
  --param k=v            parameter override, repeatable
  --lambda <real>        cosmological constant (default 0)
  --samples <n>          sample count (defaults per command)
  --seed <u64>           sampler seed (default 42)
  --tol <real>           tolerance override (defaults per command)
  --out <path>           write the report here instead of stdout
  --format json|csv|svg  output format (horizons: csv default)
  --k-max <int>          horizons: largest branch index (default 2; -1 empty)
  --cases <I,II>         horizons: case list (default both)
  --arcs <list>          horizons: principal,conjugate (default both)
  --r-samples <n>        horizons: samples per branch (default 64)
";

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable files, malformed documents: exit 2.
    Config(String),
    /// Singular points or domain violations during evaluation: exit 3.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Domain(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Config(m) | CliError::Domain(m) => m,
        }
    }
}

pub fn parse_args(args: &[String]) -> Result<AuditConfig, CliError> {
    if args.is_empty() {
        return Err(CliError::Config(format!("missing command\n{USAGE}")));
    }
    let command = args[0].clone();
    if !matches!(command.as_str(), "verify" | "identities" | "horizons" | "construct") {
        return Err(CliError::Config(format!(
            "unknown command `{command}`\n{USAGE}"
        )));
    }
    let mut config = AuditConfig {
        command: command.clone(),
        metric: default_metric(&command).to_string(),
        params: BTreeMap::new(),
        lambda: 0.0,
        samples: default_samples(&command),
        seed: 42,
        tol: None,
        out: None,
        format: if command == "horizons" { Format::Csv } else { Format::Json },
        bands: CURVATURE_BANDS,
        k_max: 2,
        cases: vec![gmet::analysis::HorizonCase::I, gmet::analysis::HorizonCase::II],
        arcs: vec![gmet::analysis::ArcTag::Principal, gmet::analysis::ArcTag::Conjugate],
        r_samples: 64,
    };
    let mut i = 1;
    let mut format_set = false;
    while i < args.len() {
        let flag = args[i].as_str();
        let mut value = || -> Result<&str, CliError> {
            i += 1;
            args.get(i)
                .map(|s| s.as_str())
                .ok_or_else(|| CliError::Config(format!("flag {flag} needs a value")))
        };
        match flag {
            "--metric" => config.metric = value()?.to_string(),
            "--param" => {
                let kv = value()?;
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| CliError::Config(format!("--param wants k=v, got `{kv}`")))?;
                let v: f64 = v
                    .parse()
                    .map_err(|_| CliError::Config(format!("--param {k}: bad number `{v}`")))?;
                config.params.insert(k.to_string(), v);
            }
            "--lambda" => config.lambda = parse_num(flag, value()?)?,
            "--samples" => {
                config.samples = parse_num(flag, value()?)? as usize;
                if config.samples < 1 {
                    return Err(CliError::Config("--samples must be at least 1".into()));
                }
            }
            "--seed" => {
                let v = value()?;
                config.seed = v
                    .parse()
                    .map_err(|_| CliError::Config(format!("--seed: bad integer `{v}`")))?;
            }
            "--tol" => {
                let t = parse_num(flag, value()?)?;
                if t <= 0.0 {
                    return Err(CliError::Config("--tol must be positive".into()));
                }
                config.tol = Some(t);
            }
            "--out" => config.out = Some(value()?.to_string()),
            "--format" => {
                config.format = match value()? {
                    "json" => Format::Json,
                    "csv" => Format::Csv,
                    "svg" => Format::Svg,
                    other => {
                        return Err(CliError::Config(format!("unknown format `{other}`")))
                    }
                };
                format_set = true;
            }
            "--k-max" => {
                let v = value()?;
                config.k_max = v
                    .parse()
                    .map_err(|_| CliError::Config(format!("--k-max: bad integer `{v}`")))?;
            }
            "--cases" => {
                let v = value()?;
                config.cases = v
                    .split(',')
                    .filter(|s| !s.is_empty())
                    .map(|s| match s {
                        "I" | "i" | "1" => Ok(gmet::analysis::HorizonCase::I),
                        "II" | "ii" | "2" => Ok(gmet::analysis::HorizonCase::II),
                        other => Err(CliError::Config(format!("unknown case `{other}`"))),
                    })
                    .collect::<Result<_, _>>()?;
            }
            "--arcs" => {
                let v = value()?;
                config.arcs = v
                    .split(',')
                    .filter(|s| !s.is_empty())
                    .map(|s| match s {
                        "principal" => Ok(gmet::analysis::ArcTag::Principal),
                        "conjugate" => Ok(gmet::analysis::ArcTag::Conjugate),
                        other => Err(CliError::Config(format!("unknown arc `{other}`"))),
                    })
                    .collect::<Result<_, _>>()?;
            }
            "--r-samples" => {
                config.r_samples = parse_num(flag, value()?)? as usize;
                if config.r_samples < 2 {
                    return Err(CliError::Config("--r-samples must be at least 2".into()));
                }
            }
            other => {
                return Err(CliError::Config(format!("unknown flag `{other}`\n{USAGE}")));
            }
        }
        i += 1;
    }
    let _ = format_set;
    Ok(config)
}

fn parse_num(flag: &str, v: &str) -> Result<f64, CliError> {
    v.parse()
        .map_err(|_| CliError::Config(format!("{flag}: bad number `{v}`")))
}

fn default_metric(command: &str) -> &'static str {
    match command {
        "identities" | "horizons" => "time-periodic-polar",
        "construct" => "ansatz-x",
        _ => "time-periodic-polar",
    }
}

fn default_samples(command: &str) -> usize {
    match command {
        "identities" => 1000,
        "construct" => 20,
        _ => 100,
    }
}

/// Resolves the metric source: a catalog name or a document path.
pub fn resolve_metric(config: &AuditConfig) -> Result<MetricSpec, CliError> {
    if catalog::CATALOG_NAMES.contains(&config.metric.as_str()) {
        return catalog::by_name(&config.metric, &config.params)
            .map_err(|e| CliError::Config(e.to_string()));
    }
    if config.metric.ends_with(".gmet") || std::path::Path::new(&config.metric).exists() {
        let text = std::fs::read_to_string(&config.metric)
            .map_err(|e| CliError::Config(format!("cannot read `{}`: {e}", config.metric)))?;
        let spec = parse_metric_document(&text)
            .map_err(|e| CliError::Config(format!("{}: {e}", config.metric)))?;
        return Ok(spec);
    }
    Err(CliError::Config(format!(
        "`{}` is neither a catalog metric nor a readable .gmet file",
        config.metric
    )))
}

/// The config echo embedded in every JSON report.
pub fn config_json(config: &AuditConfig) -> Json {
    let mut params = Json::Arr(
        config
            .params
            .iter()
            .map(|(k, v)| {
                let mut entry = Json::obj();
                entry.push("name", Json::Str(k.clone()));
                entry.push("value", Json::Num(*v));
                entry
            })
            .collect(),
    );
    if config.params.is_empty() {
        params = Json::Arr(Vec::new());
    }
    let mut obj = Json::obj();
    obj.push("command", Json::Str(config.command.clone()));
    obj.push("metric", Json::Str(config.metric.clone()));
    obj.push("params", params);
    obj.push("lambda", Json::Num(config.lambda));
    obj.push("samples", Json::Int(config.samples as i64));
    obj.push("seed", Json::Int(config.seed as i64));
    let mut bands = Json::obj();
    bands.push("theta", Json::Num(config.bands.theta));
    bands.push("r_from_m", Json::Num(config.bands.r_from_m));
    bands.push("k", Json::Num(config.bands.k));
    bands.push("bracket", Json::Num(config.bands.bracket));
    obj.push("bands", bands);
    obj
}
