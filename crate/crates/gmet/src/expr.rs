//! Closed-form expression trees over a four-coordinate chart.
//!
//! The function set is frozen to what the metric catalog needs:
//! sin, cos, tan, asin, exp, ln, abs, sqrt, unary minus, the four
//! arithmetic operators, and powers with constant integer or
//! half-integer exponents. There is no simplification and no symbolic
//! equality; expressions evaluate to values or to second-order jets.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::chart::Point4;
use crate::jet::Jet2;

pub type ParamMap = BTreeMap<String, f64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnaryFn {
    Sin,
    Cos,
    Tan,
    Asin,
    Exp,
    Ln,
    Abs,
    Sqrt,
    Neg,
}

impl UnaryFn {
    pub fn name(self) -> &'static str {
        match self {
            UnaryFn::Sin => "sin",
            UnaryFn::Cos => "cos",
            UnaryFn::Tan => "tan",
            UnaryFn::Asin => "asin",
            UnaryFn::Exp => "exp",
            UnaryFn::Ln => "ln",
            UnaryFn::Abs => "abs",
            UnaryFn::Sqrt => "sqrt",
            UnaryFn::Neg => "neg",
        }
    }

    pub fn by_name(name: &str) -> Option<UnaryFn> {
        Some(match name {
            "sin" => UnaryFn::Sin,
            "cos" => UnaryFn::Cos,
            "tan" => UnaryFn::Tan,
            "asin" => UnaryFn::Asin,
            "exp" => UnaryFn::Exp,
            "ln" => UnaryFn::Ln,
            "abs" => UnaryFn::Abs,
            "sqrt" => UnaryFn::Sqrt,
            "neg" => UnaryFn::Neg,
            _ => return None,
        })
    }
}

/// Constant rational exponent with denominator 1 or 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exponent {
    num: i32,
    den: u8,
}

impl Exponent {
    /// Builds an exponent from twice its value; rejects anything that is
    /// not an integer or half-integer of modest size.
    pub fn from_twice(twice: i32) -> Option<Exponent> {
        if twice.abs() > 32 {
            return None;
        }
        if twice % 2 == 0 {
            Some(Exponent {
                num: twice / 2,
                den: 1,
            })
        } else {
            Some(Exponent { num: twice, den: 2 })
        }
    }

    pub fn from_value(q: f64) -> Option<Exponent> {
        let twice = 2.0 * q;
        if !twice.is_finite() || (twice - twice.round()).abs() > 1e-12 {
            return None;
        }
        Exponent::from_twice(twice.round() as i32)
    }

    pub fn value(self) -> f64 {
        f64::from(self.num) / f64::from(self.den)
    }

    pub fn is_integer(self) -> bool {
        self.den == 1
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            if self.num < 0 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({}/2)", self.num)
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Const(f64),
    Coord(usize),
    Param(String),
    Unary(UnaryFn, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Exponent),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainErrorKind {
    LnNonPositive,
    SqrtNegative,
    SqrtDerivativeAtZero,
    AsinOutOfRange,
    AbsAtZero,
    DivisionByZero,
    PowNegativeBase,
    PowZeroBase,
}

impl DomainErrorKind {
    fn describe(self) -> &'static str {
        match self {
            DomainErrorKind::LnNonPositive => "ln of a non-positive argument",
            DomainErrorKind::SqrtNegative => "sqrt of a negative argument",
            DomainErrorKind::SqrtDerivativeAtZero => "sqrt derivative at zero",
            DomainErrorKind::AsinOutOfRange => "asin outside (-1, 1)",
            DomainErrorKind::AbsAtZero => "abs is not differentiable at zero",
            DomainErrorKind::DivisionByZero => "division by zero",
            DomainErrorKind::PowNegativeBase => "half-integer power of a negative base",
            DomainErrorKind::PowZeroBase => "negative power of zero",
        }
    }
}

/// Evaluation failure, naming the offending sub-expression and the point.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum EvalError {
    #[error("{} in `{expr}` at point ({})", kind.describe(), fmt_point(point))]
    Domain {
        kind: DomainErrorKind,
        expr: String,
        point: [f64; 4],
    },
    #[error("parameter `{0}` is not bound")]
    UnknownParam(String),
}

fn fmt_point(p: &[f64; 4]) -> String {
    format!("{}, {}, {}, {}", p[0], p[1], p[2], p[3])
}

impl Expr {
    fn domain_err<T>(&self, kind: DomainErrorKind, point: Point4) -> Result<T, EvalError> {
        Err(EvalError::Domain {
            kind,
            expr: self.to_string(),
            point: point.0,
        })
    }

    pub fn is_zero_literal(&self) -> bool {
        matches!(self, Expr::Const(c) if *c == 0.0)
    }

    /// Plain value evaluation; flags the same domain violations as the
    /// jet path except those that only affect derivatives (abs at 0,
    /// sqrt at 0, asin at ±1 stay legal here).
    pub fn eval_value(&self, point: Point4, params: &ParamMap) -> Result<f64, EvalError> {
        Ok(match self {
            Expr::Const(c) => *c,
            Expr::Coord(i) => point.0[*i],
            Expr::Param(name) => *params
                .get(name)
                .ok_or_else(|| EvalError::UnknownParam(name.clone()))?,
            Expr::Unary(f, inner) => {
                let x = inner.eval_value(point, params)?;
                match f {
                    UnaryFn::Sin => x.sin(),
                    UnaryFn::Cos => x.cos(),
                    UnaryFn::Tan => x.tan(),
                    UnaryFn::Asin => {
                        if x.abs() > 1.0 {
                            return self.domain_err(DomainErrorKind::AsinOutOfRange, point);
                        }
                        x.asin()
                    }
                    UnaryFn::Exp => x.exp(),
                    UnaryFn::Ln => {
                        if x <= 0.0 {
                            return self.domain_err(DomainErrorKind::LnNonPositive, point);
                        }
                        x.ln()
                    }
                    UnaryFn::Abs => x.abs(),
                    UnaryFn::Sqrt => {
                        if x < 0.0 {
                            return self.domain_err(DomainErrorKind::SqrtNegative, point);
                        }
                        x.sqrt()
                    }
                    UnaryFn::Neg => -x,
                }
            }
            Expr::Add(a, b) => a.eval_value(point, params)? + b.eval_value(point, params)?,
            Expr::Sub(a, b) => a.eval_value(point, params)? - b.eval_value(point, params)?,
            Expr::Mul(a, b) => a.eval_value(point, params)? * b.eval_value(point, params)?,
            Expr::Div(a, b) => {
                let den = b.eval_value(point, params)?;
                if den == 0.0 {
                    return self.domain_err(DomainErrorKind::DivisionByZero, point);
                }
                a.eval_value(point, params)? / den
            }
            Expr::Pow(base, q) => {
                let x = base.eval_value(point, params)?;
                if q.is_integer() {
                    let k = q.num;
                    if x == 0.0 && k < 0 {
                        return self.domain_err(DomainErrorKind::PowZeroBase, point);
                    }
                    x.powi(k)
                } else {
                    if x < 0.0 {
                        return self.domain_err(DomainErrorKind::PowNegativeBase, point);
                    }
                    if x == 0.0 && q.num < 0 {
                        return self.domain_err(DomainErrorKind::PowZeroBase, point);
                    }
                    x.powf(q.value())
                }
            }
        })
    }

    /// Evaluates the expression together with its exact gradient and
    /// Hessian. Non-differentiable loci are domain errors, never
    /// smoothed over.
    pub fn eval_jet(&self, point: Point4, params: &ParamMap) -> Result<Jet2, EvalError> {
        Ok(match self {
            Expr::Const(c) => Jet2::constant(*c),
            Expr::Coord(i) => Jet2::coordinate(point.0[*i], *i),
            Expr::Param(name) => Jet2::constant(
                *params
                    .get(name)
                    .ok_or_else(|| EvalError::UnknownParam(name.clone()))?,
            ),
            Expr::Unary(f, inner) => {
                let x = inner.eval_jet(point, params)?;
                match f {
                    UnaryFn::Sin => x.sin(),
                    UnaryFn::Cos => x.cos(),
                    UnaryFn::Tan => x.tan(),
                    UnaryFn::Asin => {
                        if x.value.abs() >= 1.0 {
                            return self.domain_err(DomainErrorKind::AsinOutOfRange, point);
                        }
                        x.asin()
                    }
                    UnaryFn::Exp => x.exp(),
                    UnaryFn::Ln => {
                        if x.value <= 0.0 {
                            return self.domain_err(DomainErrorKind::LnNonPositive, point);
                        }
                        x.ln()
                    }
                    UnaryFn::Abs => {
                        if x.value == 0.0 {
                            return self.domain_err(DomainErrorKind::AbsAtZero, point);
                        }
                        x.abs()
                    }
                    UnaryFn::Sqrt => {
                        if x.value < 0.0 {
                            return self.domain_err(DomainErrorKind::SqrtNegative, point);
                        }
                        if x.value == 0.0 {
                            return self.domain_err(DomainErrorKind::SqrtDerivativeAtZero, point);
                        }
                        x.sqrt()
                    }
                    UnaryFn::Neg => -x,
                }
            }
            Expr::Add(a, b) => a.eval_jet(point, params)? + b.eval_jet(point, params)?,
            Expr::Sub(a, b) => a.eval_jet(point, params)? - b.eval_jet(point, params)?,
            Expr::Mul(a, b) => a.eval_jet(point, params)? * b.eval_jet(point, params)?,
            Expr::Div(a, b) => {
                let den = b.eval_jet(point, params)?;
                if den.value == 0.0 {
                    return self.domain_err(DomainErrorKind::DivisionByZero, point);
                }
                a.eval_jet(point, params)? / den
            }
            Expr::Pow(base, q) => {
                let x = base.eval_jet(point, params)?;
                if q.is_integer() {
                    let k = q.num;
                    if x.value == 0.0 && k < 0 {
                        return self.domain_err(DomainErrorKind::PowZeroBase, point);
                    }
                    x.powi(k)
                } else {
                    if x.value < 0.0 {
                        return self.domain_err(DomainErrorKind::PowNegativeBase, point);
                    }
                    if x.value == 0.0 {
                        return self.domain_err(DomainErrorKind::PowZeroBase, point);
                    }
                    x.powf(q.value())
                }
            }
        })
    }

    /// Folds an expression with no coordinates or parameters to a number.
    pub fn const_fold(&self) -> Option<f64> {
        match self {
            Expr::Const(c) => Some(*c),
            Expr::Coord(_) | Expr::Param(_) => None,
            Expr::Unary(UnaryFn::Neg, inner) => inner.const_fold().map(|v| -v),
            Expr::Unary(..) => None,
            Expr::Add(a, b) => Some(a.const_fold()? + b.const_fold()?),
            Expr::Sub(a, b) => Some(a.const_fold()? - b.const_fold()?),
            Expr::Mul(a, b) => Some(a.const_fold()? * b.const_fold()?),
            Expr::Div(a, b) => {
                let d = b.const_fold()?;
                if d == 0.0 {
                    None
                } else {
                    Some(a.const_fold()? / d)
                }
            }
            Expr::Pow(a, q) => Some(a.const_fold()?.powf(q.value())),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Unary(UnaryFn::Neg, _) => 3,
            Expr::Const(c) if *c < 0.0 => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    fn fmt_child(
        &self,
        f: &mut fmt::Formatter<'_>,
        names: Option<&[&str; 4]>,
        min_prec: u8,
    ) -> fmt::Result {
        if self.precedence() < min_prec {
            write!(f, "(")?;
            self.fmt_with(f, names)?;
            write!(f, ")")
        } else {
            self.fmt_with(f, names)
        }
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, names: Option<&[&str; 4]>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "{}", c),
            Expr::Coord(i) => match names {
                Some(n) => write!(f, "{}", n[*i]),
                None => write!(f, "x{}", i),
            },
            Expr::Param(name) => write!(f, "{}", name),
            Expr::Unary(UnaryFn::Neg, inner) => {
                write!(f, "-")?;
                inner.fmt_child(f, names, 3)
            }
            Expr::Unary(func, inner) => {
                write!(f, "{}(", func.name())?;
                inner.fmt_with(f, names)?;
                write!(f, ")")
            }
            Expr::Add(a, b) => {
                a.fmt_child(f, names, 1)?;
                write!(f, " + ")?;
                b.fmt_child(f, names, 2)
            }
            Expr::Sub(a, b) => {
                a.fmt_child(f, names, 1)?;
                write!(f, " - ")?;
                b.fmt_child(f, names, 2)
            }
            Expr::Mul(a, b) => {
                a.fmt_child(f, names, 2)?;
                write!(f, "*")?;
                b.fmt_child(f, names, 3)
            }
            Expr::Div(a, b) => {
                a.fmt_child(f, names, 2)?;
                write!(f, "/")?;
                b.fmt_child(f, names, 3)
            }
            Expr::Pow(base, q) => {
                base.fmt_child(f, names, 5)?;
                write!(f, "^{}", q)
            }
        }
    }

    /// Renders with the chart's coordinate names instead of `x0..x3`.
    pub fn display_with<'a>(&'a self, names: &'a [&'a str; 4]) -> DisplayWith<'a> {
        DisplayWith { expr: self, names }
    }
}

pub struct DisplayWith<'a> {
    expr: &'a Expr,
    names: &'a [&'a str; 4],
}

impl fmt::Display for DisplayWith<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.expr.fmt_with(f, Some(self.names))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, None)
    }
}

// Builders used by the catalog and tests. Consuming operators keep
// construction code close to the written formulas.

pub fn con(c: f64) -> Expr {
    Expr::Const(c)
}

pub fn coord(axis: usize) -> Expr {
    Expr::Coord(axis)
}

pub fn param(name: &str) -> Expr {
    Expr::Param(name.to_string())
}

macro_rules! unary_builder {
    ($fn_name:ident, $variant:ident) => {
        pub fn $fn_name(e: Expr) -> Expr {
            Expr::Unary(UnaryFn::$variant, Box::new(e))
        }
    };
}

unary_builder!(sin, Sin);
unary_builder!(cos, Cos);
unary_builder!(tan, Tan);
unary_builder!(asin, Asin);
unary_builder!(exp, Exp);
unary_builder!(ln, Ln);
unary_builder!(abs, Abs);
unary_builder!(sqrt, Sqrt);

pub fn powi(e: Expr, k: i32) -> Expr {
    Expr::Pow(Box::new(e), Exponent::from_twice(2 * k).expect("integer exponent"))
}

/// Power with exponent `num_half / 2`.
pub fn powh(e: Expr, num_half: i32) -> Expr {
    Expr::Pow(Box::new(e), Exponent::from_twice(num_half).expect("half exponent"))
}

impl std::ops::Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(rhs))
    }
}

impl std::ops::Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(rhs))
    }
}

impl std::ops::Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(rhs))
    }
}

impl std::ops::Div for Expr {
    type Output = Expr;
    fn div(self, rhs: Expr) -> Expr {
        Expr::Div(Box::new(self), Box::new(rhs))
    }
}

impl std::ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Unary(UnaryFn::Neg, Box::new(self))
    }
}
