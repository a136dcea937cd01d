//! Plain SVG rendering of traced horizon branches: one polyline per
//! branch over (r, t) axes, with dashed verticals at the band endpoints
//! and at r = m.

use gmet::analysis::{Extent, HorizonBranch, HorizonCase};
use gmet::catalog::TimePeriodicParams;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 52.0;

fn fmt(v: f64) -> String {
    format!("{:.3}", v)
}

pub fn horizon_figure(
    tp: &TimePeriodicParams,
    case: HorizonCase,
    branches: &[&HorizonBranch],
    extent: Extent,
) -> String {
    // data ranges
    let mut r_min = f64::INFINITY;
    let mut r_max = f64::NEG_INFINITY;
    let mut t_min = f64::INFINITY;
    let mut t_max = f64::NEG_INFINITY;
    for b in branches {
        for s in &b.samples {
            r_min = r_min.min(s.r);
            r_max = r_max.max(s.r);
            t_min = t_min.min(s.t);
            t_max = t_max.max(s.t);
        }
    }
    // include the r = m wall and pad
    let mut guides: Vec<(f64, &str)> = vec![(tp.m, "m")];
    match extent {
        Extent::CaseI { r_minus } => guides.push((r_minus, "r-")),
        Extent::CaseII { r0, r_plus } => {
            guides.push((r0, "r0"));
            guides.push((r_plus, "r+"));
        }
    }
    for &(r, _) in &guides {
        r_min = r_min.min(r);
        r_max = r_max.max(r);
    }
    let r_pad = 0.06 * (r_max - r_min).max(1e-9);
    let t_pad = 0.06 * (t_max - t_min).max(1e-9);
    r_min -= r_pad;
    r_max += r_pad;
    t_min -= t_pad;
    t_max += t_pad;

    let x_of = |r: f64| MARGIN + (r - r_min) / (r_max - r_min) * (WIDTH - 2.0 * MARGIN);
    let y_of = |t: f64| HEIGHT - MARGIN - (t - t_min) / (t_max - t_min) * (HEIGHT - 2.0 * MARGIN);

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    out.push_str(&format!(
        "  <title>horizon candidates, case {case}: eps={} m={}</title>\n",
        tp.eps, tp.m
    ));
    out.push_str("  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    // axes
    out.push_str(&format!(
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
        fmt(MARGIN),
        fmt(HEIGHT - MARGIN),
        fmt(WIDTH - MARGIN / 2.0),
        fmt(HEIGHT - MARGIN)
    ));
    out.push_str(&format!(
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
        fmt(MARGIN),
        fmt(HEIGHT - MARGIN),
        fmt(MARGIN),
        fmt(MARGIN / 2.0)
    ));
    out.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" font-size=\"14\">r</text>\n",
        fmt(WIDTH - MARGIN / 2.0 + 6.0),
        fmt(HEIGHT - MARGIN + 4.0)
    ));
    out.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" font-size=\"14\">t</text>\n",
        fmt(MARGIN - 16.0),
        fmt(MARGIN / 2.0)
    ));
    // dashed verticals with labels
    for (r, label) in &guides {
        if *r < r_min || *r > r_max {
            continue;
        }
        let x = x_of(*r);
        out.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n",
            fmt(x),
            fmt(HEIGHT - MARGIN),
            fmt(x),
            fmt(MARGIN / 2.0)
        ));
        out.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{label}</text>\n",
            fmt(x),
            fmt(HEIGHT - MARGIN + 18.0)
        ));
    }
    // one polyline per branch
    for b in branches {
        let points: Vec<String> = b
            .samples
            .iter()
            .map(|s| format!("{},{}", fmt(x_of(s.r)), fmt(y_of(s.t))))
            .collect();
        out.push_str(&format!(
            "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.2\" points=\"{}\"/>\n",
            points.join(" ")
        ));
    }
    out.push_str("</svg>\n");
    out
}
