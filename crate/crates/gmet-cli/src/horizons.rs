//! The `horizons` command: traces the zero-set branches of the radial
//! potential and emits a CSV atlas or per-case SVG plots.

use gmet::analysis::{
    horizon_extent, trace_horizon_branch, ArcTag, Extent, HorizonBranch,
    HorizonError,
};
use gmet::catalog::TimePeriodicParams;

use crate::args::{AuditConfig, CliError, Format};
use crate::json::format_f64;
use crate::svg;

pub struct HorizonOutput {
    /// (path, contents) pairs when writing SVG; CSV goes through the
    /// normal report path.
    pub files: Vec<(String, String)>,
    pub report: String,
    pub summary: Vec<String>,
}

pub fn run_horizons(config: &AuditConfig) -> Result<HorizonOutput, CliError> {
    let spec = crate::args::resolve_metric(config)?;
    let params = spec.params_with(&config.params);
    let tp = TimePeriodicParams::from_map(&params).ok_or_else(|| {
        CliError::Config("horizons need the time-periodic metric (params eps, m)".into())
    })?;
    if !(tp.eps > 0.0 && tp.m > 0.0) {
        return Err(CliError::Config(format!(
            "horizons assume eps > 0 and m > 0 (got eps = {}, m = {})",
            tp.eps, tp.m
        )));
    }

    let mut notices: Vec<String> = Vec::new();
    let mut branches: Vec<HorizonBranch> = Vec::new();
    for &case in &config.cases {
        // feasibility is per case; an infeasible case leaves a notice and
        // the other case's output intact
        let mut case_failed = false;
        for k in 0..=config.k_max.max(-1) {
            if k < 0 {
                continue;
            }
            for &arc in &config.arcs {
                match trace_horizon_branch(&tp, k as u32, case, arc, config.r_samples) {
                    Ok(branch) => branches.push(branch),
                    Err(HorizonError::Infeasible { ratio }) => {
                        if !case_failed {
                            notices.push(format!(
                                "case {case} infeasible: |m ln m / eps| = {} > 1",
                                format_f64(ratio.abs())
                            ));
                            case_failed = true;
                        }
                    }
                    Err(HorizonError::NoCaseIExtent { gamma0 }) => {
                        if !case_failed {
                            notices.push(format!(
                                "case {case} has no extent: gamma(0) = {} < -eps",
                                format_f64(gamma0)
                            ));
                            case_failed = true;
                        }
                    }
                    Err(e) => return Err(CliError::Domain(e.to_string())),
                }
            }
            if case_failed {
                break;
            }
        }
    }

    let mut summary = Vec::new();
    for notice in &notices {
        summary.push(notice.clone());
    }
    summary.push(format!("{} branch(es) traced", branches.len()));

    match config.format {
        Format::Json => Err(CliError::Config(
            "horizons emits csv (default) or svg; json is not a horizon format".into(),
        )),
        Format::Svg => {
            let mut files = Vec::new();
            let stem = config
                .out
                .clone()
                .unwrap_or_else(|| "horizons.svg".to_string());
            let stem = stem.strip_suffix(".svg").unwrap_or(&stem).to_string();
            for &case in &config.cases {
                let case_branches: Vec<&HorizonBranch> =
                    branches.iter().filter(|b| b.case == case).collect();
                if case_branches.is_empty() {
                    continue;
                }
                let extent = horizon_extent(&tp, case)
                    .map_err(|e| CliError::Domain(e.to_string()))?;
                let content = svg::horizon_figure(&tp, case, &case_branches, extent);
                files.push((format!("{stem}-case-{case}.svg"), content));
            }
            Ok(HorizonOutput {
                files,
                report: String::new(),
                summary,
            })
        }
        Format::Csv => {
            let csv = render_csv(&tp, &notices, &branches);
            Ok(HorizonOutput {
                files: Vec::new(),
                report: csv,
                summary,
            })
        }
    }
}

fn arc_name(arc: ArcTag) -> &'static str {
    match arc {
        ArcTag::Principal => "principal",
        ArcTag::Conjugate => "conjugate",
    }
}

fn render_csv(tp: &TimePeriodicParams, notices: &[String], branches: &[HorizonBranch]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# horizon candidate atlas: eps={} m={}\n",
        format_f64(tp.eps),
        format_f64(tp.m)
    ));
    for branch in branches {
        match branch.extent {
            Extent::CaseI { r_minus } => out.push_str(&format!(
                "# case I k={} {}: band [0, {}], slots t_k={} t_k-={}\n",
                branch.k,
                arc_name(branch.arc),
                format_f64(r_minus),
                format_f64(branch.slot_open),
                format_f64(branch.slot_close),
            )),
            Extent::CaseII { r0, r_plus } => out.push_str(&format!(
                "# case II k={} {}: band [{}, {}], slots t_k={} t_k+={}\n",
                branch.k,
                arc_name(branch.arc),
                format_f64(r0),
                format_f64(r_plus),
                format_f64(branch.slot_open),
                format_f64(branch.slot_close),
            )),
        }
    }
    for notice in notices {
        out.push_str(&format!("# {notice}\n"));
    }
    out.push_str("case,k,arc,r,t,f_residual\n");
    for branch in branches {
        for s in &branch.samples {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                branch.case,
                branch.k,
                arc_name(branch.arc),
                format_f64(s.r),
                format_f64(s.t),
                format_f64(s.f_residual)
            ));
        }
    }
    out
}
