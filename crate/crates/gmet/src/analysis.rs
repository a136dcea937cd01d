//! Signature classification, closed-form determinant and minors,
//! singular-set membership, horizon-candidate extents and branch
//! tracing, congruence diagonalization and asymptotic/anisotropy audits
//! for the time-periodic catalog metric.
//!
//! Horizon outputs are labelled candidate sets: they are the zero sets
//! of the radial potential, traced numerically; no global causal
//! analysis is attempted.

use std::f64::consts::PI;

use thiserror::Error;

use crate::catalog::TimePeriodicParams;
use crate::chart::Point4;
use crate::expr::ParamMap;
use crate::geometry::{metric_at, GeometryError};
use crate::linalg::{leading_minor, sym_eigenvalues};
use crate::metric::{MetricKind, MetricSpec};
use crate::roots::{bisect_bracket, RootError};

// --- singular sets -------------------------------------------------------

/// The named singular sets of the polar-chart catalog metric.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularSet {
    RZero,
    REqualsM,
    KZero,
    ThetaPole,
}

impl std::fmt::Display for SingularSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            SingularSet::RZero => "S_{r=0}",
            SingularSet::REqualsM => "S_{r=m}",
            SingularSet::KZero => "S_{K=0}",
            SingularSet::ThetaPole => "S_{theta=0,pi}",
        };
        write!(f, "{name}")
    }
}

/// Memberships by tolerance; an empty result means the point is regular.
/// Multiple memberships are possible (r = 0 with K = 0, for instance).
pub fn singular_set_classify(p: &TimePeriodicParams, point: Point4, tol: f64) -> Vec<SingularSet> {
    let [t, r, theta, _] = point.0;
    let mut sets = Vec::new();
    if r.abs() <= tol {
        sets.push(SingularSet::RZero);
    }
    if (r - p.m).abs() <= tol {
        sets.push(SingularSet::REqualsM);
    } else {
        let k = r + p.m * (r - p.m).abs().ln() + p.eps * (t - r).sin();
        if k.abs() <= tol {
            sets.push(SingularSet::KZero);
        }
    }
    if theta.min(PI - theta) <= tol {
        sets.push(SingularSet::ThetaPole);
    }
    sets
}

pub(crate) fn classify_with(p: &TimePeriodicParams, point: Point4, tol: f64) -> Vec<SingularSet> {
    singular_set_classify(p, point, tol)
}

/// Default membership tolerance: above root-finder noise, far below any
/// sample spacing.
pub const SINGULAR_TOL: f64 = 1e-9;

// --- signature -----------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LorentzPredicate {
    /// Block shape with both angular diagonal entries negative and a
    /// negative determinant.
    Theorem1,
    /// Type I: angular entries negative, (0,1) entry nonzero.
    Conclusion1,
    /// Type II: w, ρ, σ negative and some off-diagonal nonzero.
    Conclusion2,
    /// Type III: positive (0,0), negative w, ρ, σ.
    Conclusion3,
    /// No structural predicate applied; eigenvalue signs only.
    EigenFallback,
}

#[derive(Clone, Debug)]
pub struct SignatureReport {
    /// Signs of the eigenvalues, sorted descending; 0 marks a
    /// numerically zero eigenvalue.
    pub eigen_signs: [i8; 4],
    pub eigenvalues: [f64; 4],
    /// Leading principal minors of sizes 1..4.
    pub minors: [f64; 4],
    /// None when the metric is degenerate at the point.
    pub lorentzian: Option<bool>,
    pub predicate: LorentzPredicate,
}

pub fn signature_at(
    spec: &MetricSpec,
    params: &ParamMap,
    point: Point4,
) -> Result<SignatureReport, GeometryError> {
    let mv = metric_at(spec, params, point)?;
    Ok(signature_of(spec, &mv.g, mv.det))
}

fn sign_with_tol(v: f64, scale: f64) -> i8 {
    if v.abs() <= 1e-12 * scale {
        0
    } else if v > 0.0 {
        1
    } else {
        -1
    }
}

pub(crate) fn signature_of(spec: &MetricSpec, g: &crate::linalg::Mat4, det: f64) -> SignatureReport {
    let eigenvalues = sym_eigenvalues(g);
    let scale = 1.0 + eigenvalues.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let eigen_signs = [
        sign_with_tol(eigenvalues[0], scale),
        sign_with_tol(eigenvalues[1], scale),
        sign_with_tol(eigenvalues[2], scale),
        sign_with_tol(eigenvalues[3], scale),
    ];
    let minors = [
        leading_minor(g, 1),
        leading_minor(g, 2),
        leading_minor(g, 3),
        leading_minor(g, 4),
    ];
    let lorentzian = if eigen_signs.contains(&0) {
        None
    } else {
        let plus = eigen_signs.iter().filter(|&&s| s > 0).count();
        Some(plus == 1)
    };
    let shape = spec.shape();
    let (u, v, p, q) = (g[0][0], g[0][1], g[0][2], g[0][3]);
    let (w, rho, sigma) = (g[1][1], g[2][2], g[3][3]);
    let predicate = if shape.type1 && rho < 0.0 && sigma < 0.0 && v != 0.0 {
        LorentzPredicate::Conclusion1
    } else if shape.type2 && w < 0.0 && rho < 0.0 && sigma < 0.0 && v * v + p * p + q * q != 0.0 {
        LorentzPredicate::Conclusion2
    } else if shape.type3 && u > 0.0 && w < 0.0 && rho < 0.0 && sigma < 0.0 {
        LorentzPredicate::Conclusion3
    } else if shape.block && rho < 0.0 && sigma < 0.0 && det < 0.0 {
        LorentzPredicate::Theorem1
    } else {
        LorentzPredicate::EigenFallback
    };
    SignatureReport {
        eigen_signs,
        eigenvalues,
        minors,
        lorentzian,
        predicate,
    }
}

/// Numeric leading principal minors plus, for the polar catalog metric,
/// their closed forms.
#[derive(Clone, Copy, Debug)]
pub struct MinorsReport {
    pub minors: [f64; 4],
    pub closed_form: Option<[f64; 4]>,
}

pub fn principal_minors(
    spec: &MetricSpec,
    params: &ParamMap,
    point: Point4,
) -> Result<MinorsReport, GeometryError> {
    let mv = metric_at(spec, params, point)?;
    let minors = [
        leading_minor(&mv.g, 1),
        leading_minor(&mv.g, 2),
        leading_minor(&mv.g, 3),
        leading_minor(&mv.g, 4),
    ];
    let closed_form = if spec.kind == MetricKind::TimePeriodicPolar {
        TimePeriodicParams::from_map(params).and_then(|tp| {
            let f = crate::catalog::helpers_at(&tp, point).ok()?;
            let r = point.0[1];
            let x2 = (f.m * r / (r - tp.m)).powi(2);
            let sin_th = point.0[2].sin();
            Some([
                f.g,
                -x2,
                f.k * f.k * x2,
                -f.k.powi(4) * sin_th * sin_th * x2,
            ])
        })
    } else {
        None
    };
    Ok(MinorsReport { minors, closed_form })
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum AnalysisError {
    #[error("closed form needs r != m (r = {0})")]
    RAtM(f64),
    #[error("theta = {0} outside (0, pi)")]
    ThetaOutOfRange(f64),
    #[error("congruence pivot {index} vanished (value {value:e})")]
    PivotFailure { index: usize, value: f64 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// The closed-form determinant of the polar catalog metric:
/// −(Ω⁺)² sin⁴θ K⁴ r² / (r−m)².
pub fn det_closed_form(p: &TimePeriodicParams, point: Point4) -> Result<f64, AnalysisError> {
    let [t, r, theta, _] = point.0;
    if r == p.m {
        return Err(AnalysisError::RAtM(r));
    }
    if !(0.0..PI).contains(&theta) || theta == 0.0 {
        return Err(AnalysisError::ThetaOutOfRange(theta));
    }
    let w = (theta / 2.0).tan().sqrt();
    let omega_plus = w + 1.0 / w;
    let k = r + p.m * (r - p.m).abs().ln() + p.eps * (t - r).sin();
    let sin_th = theta.sin();
    Ok(-omega_plus * omega_plus * sin_th.powi(4) * k.powi(4) * r * r / ((r - p.m) * (r - p.m)))
}

// --- congruence diagonalization ------------------------------------------

/// Diagonal of the metric after symmetric Gaussian elimination in index
/// order 0..3 (unit-triangular congruence, so the product equals det and
/// the sign pattern matches the eigenvalue signs).
#[derive(Clone, Copy, Debug)]
pub struct DiagonalForm {
    pub entries: [f64; 4],
    /// Closed form for the polar catalog metric:
    /// diag{G, −M²r²/(G(r−m)²), −K², −K² sin²θ}.
    pub closed_form: Option<[f64; 4]>,
}

impl DiagonalForm {
    pub fn product(&self) -> f64 {
        self.entries.iter().product()
    }

    pub fn signs(&self) -> [i8; 4] {
        self.entries.map(|v| if v > 0.0 { 1 } else if v < 0.0 { -1 } else { 0 })
    }
}

pub fn congruence_diagonal(
    spec: &MetricSpec,
    params: &ParamMap,
    point: Point4,
) -> Result<DiagonalForm, AnalysisError> {
    let mv = metric_at(spec, params, point)?;
    let mut a = mv.g;
    let mut entries = [0.0; 4];
    for i in 0..4 {
        let pivot = a[i][i];
        if pivot.abs() < 1e-14 {
            return Err(AnalysisError::PivotFailure {
                index: i,
                value: pivot,
            });
        }
        entries[i] = pivot;
        for j in (i + 1)..4 {
            let factor = a[j][i] / pivot;
            for k in i..4 {
                a[j][k] -= factor * a[i][k];
            }
            for k in i..4 {
                a[k][j] -= factor * a[k][i];
            }
        }
    }
    let closed_form = if spec.kind == MetricKind::TimePeriodicPolar {
        TimePeriodicParams::from_map(params).and_then(|tp| {
            let f = crate::catalog::helpers_at(&tp, point).ok()?;
            let r = point.0[1];
            let sin_th = point.0[2].sin();
            Some([
                f.g,
                -f.m * f.m * r * r / (f.g * (r - tp.m) * (r - tp.m)),
                -f.k * f.k,
                -f.k * f.k * sin_th * sin_th,
            ])
        })
    } else {
        None
    };
    Ok(DiagonalForm { entries, closed_form })
}

// --- horizon candidates ----------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HorizonCase {
    /// 0 ≤ r < m.
    I,
    /// r > m.
    II,
}

impl std::fmt::Display for HorizonCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HorizonCase::I => write!(f, "I"),
            HorizonCase::II => write!(f, "II"),
        }
    }
}

/// Which branch of the inverse sine parameterizes the curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcTag {
    Principal,
    Conjugate,
}

impl std::fmt::Display for ArcTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ArcTag::Principal => write!(f, "principal"),
            ArcTag::Conjugate => write!(f, "conjugate"),
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum HorizonError {
    #[error("horizon analysis assumes eps > 0 and m > 0 (got eps = {eps}, m = {m})")]
    BadParams { eps: f64, m: f64 },
    #[error("no time slot at r = 0: |m ln m / eps| = {} > 1", ratio.abs())]
    Infeasible { ratio: f64 },
    #[error("no case-I extent in [0, m): gamma(0) = {gamma0} < -eps")]
    NoCaseIExtent { gamma0: f64 },
    #[error("r = m is excluded from the horizon function")]
    RAtM,
    #[error(transparent)]
    Root(#[from] RootError),
}

/// The t-independent part of the radial potential: γ(r) = r + m ln|r−m|.
/// f(r; t) = 0 is solvable in t exactly when |γ(r)| ≤ ε.
pub fn gamma_radial(p: &TimePeriodicParams, r: f64) -> f64 {
    r + p.m * (r - p.m).abs().ln()
}

/// γ′(r) = 1 + m/(r−m); negative on (0, m), positive on (m, ∞).
pub fn gamma_radial_prime(p: &TimePeriodicParams, r: f64) -> f64 {
    1.0 + p.m / (r - p.m)
}

/// The radial potential f(r; t) = r + m ln|m−r| + ε sin(t−r).
pub fn horizon_f(p: &TimePeriodicParams, r: f64, t: f64) -> Result<f64, HorizonError> {
    if r == p.m {
        return Err(HorizonError::RAtM);
    }
    Ok(gamma_radial(p, r) + p.eps * (t - r).sin())
}

fn require_positive(p: &TimePeriodicParams) -> Result<(), HorizonError> {
    if p.eps > 0.0 && p.m > 0.0 {
        Ok(())
    } else {
        Err(HorizonError::BadParams { eps: p.eps, m: p.m })
    }
}

/// Time slots at the opening radius of a branch family.
///
/// Case I slots solve f(0; t) = 0: for 0 < m ≤ 1 the k-th slot is
/// 2kπ + arcsin(−m ln m/ε); for m > 1 it is 2(k+1)π + arcsin(·), which
/// keeps the slots nonnegative. Case II slots sit at the opening radius
/// r₀ where the inverse sine reaches its peak: r₀ + π/2 + 2kπ.
pub fn horizon_time_slots(
    p: &TimePeriodicParams,
    k: u32,
    case: HorizonCase,
) -> Result<f64, HorizonError> {
    require_positive(p)?;
    match case {
        HorizonCase::I => {
            let ratio = p.m * p.m.ln() / p.eps;
            if ratio.abs() > 1.0 {
                return Err(HorizonError::Infeasible { ratio });
            }
            let arc = (-ratio).asin();
            let turns = if p.m <= 1.0 { k as f64 } else { k as f64 + 1.0 };
            Ok(2.0 * PI * turns + arc)
        }
        HorizonCase::II => {
            let (r0, _) = case_two_extent(p)?;
            Ok(r0 + PI / 2.0 + 2.0 * PI * k as f64)
        }
    }
}

/// Feasible radius interval endpoints per case.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Extent {
    /// Solvable band [0, r₋] inside [0, m).
    CaseI { r_minus: f64 },
    /// Solvable band [r₀, r₊] inside (m, ∞).
    CaseII { r0: f64, r_plus: f64 },
}

const BISECT_TOL: f64 = 1e-13;

/// Newton polish after bisection; γ is smooth and monotone on each side.
fn polish(p: &TimePeriodicParams, mut r: f64, target: f64, lo: f64, hi: f64) -> f64 {
    for _ in 0..3 {
        let f = gamma_radial(p, r) - target;
        let d = gamma_radial_prime(p, r);
        let next = r - f / d;
        if next.is_finite() && next > lo && next < hi {
            r = next;
        }
    }
    r
}

fn case_one_extent(p: &TimePeriodicParams) -> Result<f64, HorizonError> {
    let gamma0 = p.m * p.m.ln();
    if gamma0 < -p.eps {
        return Err(HorizonError::NoCaseIExtent { gamma0 });
    }
    // γ decreases to −∞ as r → m⁻; find an inner bracket endpoint
    let mut hi = p.m;
    let mut step = p.m / 2.0;
    for _ in 0..200 {
        let candidate = p.m - step;
        if candidate > 0.0 && gamma_radial(p, candidate) < -p.eps {
            hi = candidate;
            break;
        }
        step /= 2.0;
    }
    let (feasible, _) = bisect_bracket(
        |r| Ok(gamma_radial(p, r) + p.eps),
        0.0,
        hi,
        BISECT_TOL,
    )?;
    Ok(polish(p, feasible, -p.eps, 0.0, p.m))
}

fn case_two_extent(p: &TimePeriodicParams) -> Result<(f64, f64), HorizonError> {
    // lower bracket endpoint: walk towards m until γ < −ε
    let mut lo = p.m + p.m;
    let mut step = p.m / 2.0;
    for _ in 0..200 {
        let candidate = p.m + step;
        if gamma_radial(p, candidate) < -p.eps {
            lo = candidate;
            break;
        }
        step /= 2.0;
    }
    // upper bracket: double from m + 1 until γ > ε
    let mut hi = p.m + 1.0;
    for _ in 0..200 {
        if gamma_radial(p, hi) > p.eps {
            break;
        }
        hi = p.m + 2.0 * (hi - p.m);
    }
    let (_, r0_side) = bisect_bracket(
        |r| Ok(gamma_radial(p, r) + p.eps),
        lo,
        hi,
        BISECT_TOL,
    )?;
    let r0 = polish(p, r0_side, -p.eps, p.m, hi);
    let (r_plus_side, _) = bisect_bracket(
        |r| Ok(gamma_radial(p, r) - p.eps),
        r0.max(lo),
        hi,
        BISECT_TOL,
    )?;
    let r_plus = polish(p, r_plus_side, p.eps, p.m, hi);
    Ok((r0, r_plus))
}

/// Endpoints of the solvable radius band.
///
/// Case I: γ is strictly decreasing on (0, m), so γ(r) = −ε has the
/// unique root r₋ whenever γ(0) ≥ −ε. Case II: γ is strictly increasing
/// on (m, ∞) from −∞ to +∞, giving r₀ (γ = −ε) and r₊ (γ = +ε).
pub fn horizon_extent(p: &TimePeriodicParams, case: HorizonCase) -> Result<Extent, HorizonError> {
    require_positive(p)?;
    match case {
        HorizonCase::I => Ok(Extent::CaseI {
            r_minus: case_one_extent(p)?,
        }),
        HorizonCase::II => {
            let (r0, r_plus) = case_two_extent(p)?;
            Ok(Extent::CaseII { r0, r_plus })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HorizonSample {
    pub r: f64,
    pub t: f64,
    pub f_residual: f64,
}

/// One traced solution curve of f(r; t) = 0.
#[derive(Clone, Debug)]
pub struct HorizonBranch {
    pub k: u32,
    pub case: HorizonCase,
    pub arc: ArcTag,
    pub samples: Vec<HorizonSample>,
    pub extent: Extent,
    /// Time at the opening endpoint (r = 0 for case I, r₀ for case II).
    pub slot_open: f64,
    /// Time at the closing endpoint (r₋ or r₊).
    pub slot_close: f64,
}

/// Traces t(r) = r + arcsin(−γ(r)/ε) + offset (principal arc) or
/// t(r) = r + π − arcsin(−γ(r)/ε) + offset (conjugate arc) over the
/// feasible band, with the band endpoints placed analytically where the
/// inverse sine reaches ±π/2.
pub fn trace_horizon_branch(
    p: &TimePeriodicParams,
    k: u32,
    case: HorizonCase,
    arc: ArcTag,
    samples: usize,
) -> Result<HorizonBranch, HorizonError> {
    require_positive(p)?;
    let n = samples.max(2);
    let extent = horizon_extent(p, case)?;
    let (lo, hi, offset) = match (case, extent) {
        (HorizonCase::I, Extent::CaseI { r_minus }) => {
            // the r = 0 endpoint needs the Eq.-(52)-style slot to exist
            let ratio = p.m * p.m.ln() / p.eps;
            if ratio.abs() > 1.0 {
                return Err(HorizonError::Infeasible { ratio });
            }
            let turns = if p.m <= 1.0 { k as f64 } else { k as f64 + 1.0 };
            (0.0, r_minus, 2.0 * PI * turns)
        }
        (HorizonCase::II, Extent::CaseII { r0, r_plus }) => (r0, r_plus, 2.0 * PI * k as f64),
        _ => unreachable!(),
    };
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let frac = i as f64 / (n - 1) as f64;
        let r = lo + (hi - lo) * frac;
        let closing = i == n - 1;
        let opening = i == 0;
        let t = if closing {
            // γ = −ε here (r₋ or r₊ for the conjugate pairing below)
            match (case, arc) {
                (HorizonCase::I, _) => r + PI / 2.0 + offset,
                (HorizonCase::II, ArcTag::Principal) => r - PI / 2.0 + offset,
                (HorizonCase::II, ArcTag::Conjugate) => r + 3.0 * PI / 2.0 + offset,
            }
        } else if opening && case == HorizonCase::II {
            r + PI / 2.0 + offset
        } else {
            let arg = (-gamma_radial(p, r) / p.eps).clamp(-1.0, 1.0);
            match arc {
                ArcTag::Principal => r + arg.asin() + offset,
                ArcTag::Conjugate => r + PI - arg.asin() + offset,
            }
        };
        let f_residual = horizon_f(p, r, t)?;
        out.push(HorizonSample { r, t, f_residual });
    }
    let slot_open = out.first().unwrap().t;
    let slot_close = out.last().unwrap().t;
    Ok(HorizonBranch {
        k,
        case,
        arc,
        samples: out,
        extent,
        slot_open,
        slot_close,
    })
}

// --- asymptotics -----------------------------------------------------------

#[derive(Clone, Copy, Debug)]
pub struct AsymptoticRow {
    pub r: f64,
    /// K/r; drifts to 1 like m ln r / r.
    pub k_over_r: f64,
    /// (K/r − 1) divided by m ln r / r, the predicted drift rate.
    pub drift_rate_ratio: f64,
    /// Congruence entry 2 over −r².
    pub entry2_ratio: f64,
    /// Congruence entry 3 over −r² sin²θ.
    pub entry3_ratio: f64,
    pub entry0: f64,
    pub entry1: f64,
}

/// θ-dependence of the first two congruence entries at the largest
/// radius: values at θ = π/3 against θ = π/2.
#[derive(Clone, Copy, Debug)]
pub struct AnisotropyWitness {
    pub entry0_at_pi_3: f64,
    pub entry0_at_pi_2: f64,
    pub entry1_at_pi_3: f64,
    pub entry1_at_pi_2: f64,
}

impl AnisotropyWitness {
    pub fn delta_entry0(&self) -> f64 {
        (self.entry0_at_pi_3 - self.entry0_at_pi_2).abs()
    }

    pub fn delta_entry1(&self) -> f64 {
        (self.entry1_at_pi_3 - self.entry1_at_pi_2).abs()
    }
}

#[derive(Clone, Debug)]
pub struct AsymptoticAudit {
    pub theta: f64,
    pub rows: Vec<AsymptoticRow>,
    pub anisotropy: AnisotropyWitness,
}

/// Diagonal entries along an increasing radius sequence, evaluated at
/// t = r so the oscillatory phase is held at cos(t−r) = 1, plus the
/// anisotropy witness at the largest radius.
pub fn asymptotic_audit(
    p: &TimePeriodicParams,
    theta: f64,
    radii: &[f64],
) -> Result<AsymptoticAudit, AnalysisError> {
    let spec = crate::catalog::time_periodic_polar(p);
    let params = p.to_map();
    let mut rows = Vec::with_capacity(radii.len());
    for &r in radii {
        let point = Point4::new(r, r, theta, 0.0);
        let diag = congruence_diagonal(&spec, &params, point)?;
        let f = crate::catalog::helpers_at(p, point).map_err(|_| AnalysisError::RAtM(r))?;
        let sin_th = theta.sin();
        rows.push(AsymptoticRow {
            r,
            k_over_r: f.k / r,
            drift_rate_ratio: (f.k / r - 1.0) / (p.m * r.ln() / r),
            entry2_ratio: diag.entries[2] / (-r * r),
            entry3_ratio: diag.entries[3] / (-r * r * sin_th * sin_th),
            entry0: diag.entries[0],
            entry1: diag.entries[1],
        });
    }
    let r_big = *radii.last().expect("nonempty radius sequence");
    let witness = |th: f64| -> Result<[f64; 4], AnalysisError> {
        let d = congruence_diagonal(&spec, &params, Point4::new(r_big, r_big, th, 0.0))?;
        Ok(d.entries)
    };
    let at_pi_3 = witness(PI / 3.0)?;
    let at_pi_2 = witness(PI / 2.0)?;
    Ok(AsymptoticAudit {
        theta,
        rows,
        anisotropy: AnisotropyWitness {
            entry0_at_pi_3: at_pi_3[0],
            entry0_at_pi_2: at_pi_2[0],
            entry1_at_pi_3: at_pi_3[1],
            entry1_at_pi_2: at_pi_2[1],
        },
    })
}
