//! Line-oriented parser for metric documents (`.gmet`).
//!
//! ```text
//! # comment to end of line
//! chart t r theta phi
//! param m = 1
//! g 0 0 = 1 - 2*m/r
//! ```
//!
//! Slots carry the upper triangle only (mu <= nu); omitted slots are
//! exactly zero. Every diagnostic reports a 1-based line and column.

use thiserror::Error;

use crate::chart::Chart;
use crate::expr::{Exponent, Expr, UnaryFn};
use crate::metric::MetricSpec;

#[derive(Clone, Debug, Error, PartialEq)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Number(f64),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Equals,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Number(n) => format!("`{n}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Equals => "`=`".into(),
        }
    }
}

/// Tokenizes one line; `col` values are 1-based byte columns.
fn lex_line(text: &str, line_no: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let col = i + 1;
        match c {
            '#' => break,
            c if c.is_whitespace() => {
                i += 1;
            }
            '+' => {
                toks.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, col));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, col));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, col));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, col));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, col));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, col));
                i += 1;
            }
            '=' => {
                toks.push((Tok::Equals, col));
                i += 1;
            }
            c if c.is_ascii_digit() || c == '.' => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] as char == '.' {
                    i += 1;
                    while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                        i += 1;
                    }
                }
                if i < bytes.len() && matches!(bytes[i] as char, 'e' | 'E') {
                    let mark = i;
                    i += 1;
                    if i < bytes.len() && matches!(bytes[i] as char, '+' | '-') {
                        i += 1;
                    }
                    if i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                        while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                            i += 1;
                        }
                    } else {
                        // not an exponent after all (e.g. `2*e` would be an ident)
                        i = mark;
                    }
                }
                let text = &text[start..i];
                let value: f64 = text.parse().map_err(|_| {
                    ParseError::new(line_no, col, format!("malformed number `{text}`"))
                })?;
                toks.push((Tok::Number(value), col));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] as char == '_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), col));
            }
            other => {
                return Err(ParseError::new(
                    line_no,
                    col,
                    format!("unexpected character `{other}`"),
                ));
            }
        }
    }
    Ok(toks)
}

/// Name resolution context for expressions.
struct Names<'a> {
    coords: [&'a str; 4],
    params: &'a [String],
}

struct ExprParser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    line: usize,
    names: &'a Names<'a>,
    end_col: usize,
}

impl<'a> ExprParser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, c)| *c)
            .unwrap_or(self.end_col)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::new(self.line, self.col(), message))
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if *t == tok => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => {
                let found = t.describe();
                self.err(format!("expected {}, found {}", tok.describe(), found))
            }
            None => self.err(format!("expected {}, found end of line", tok.describe())),
        }
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = lhs + self.parse_term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = lhs - self.parse_term()?;
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = lhs * self.parse_factor()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    lhs = lhs / self.parse_factor()?;
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Expr, ParseError> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.pos += 1;
            let inner = self.parse_factor()?;
            return Ok(match inner {
                Expr::Const(c) => Expr::Const(-c),
                other => -other,
            });
        }
        self.parse_power()
    }

    fn parse_power(&mut self) -> Result<Expr, ParseError> {
        let base = self.parse_atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.pos += 1;
            let exp_col = self.col();
            let q = self.parse_exponent(exp_col)?;
            return Ok(Expr::Pow(Box::new(base), q));
        }
        Ok(base)
    }

    fn parse_exponent(&mut self, exp_col: usize) -> Result<Exponent, ParseError> {
        // number, -number, or a parenthesized constant expression
        let negate = if matches!(self.peek(), Some(Tok::Minus)) {
            self.pos += 1;
            true
        } else {
            false
        };
        let value = match self.peek() {
            Some(Tok::Number(n)) => {
                let n = *n;
                self.pos += 1;
                n
            }
            Some(Tok::LParen) => {
                let expr = {
                    self.pos += 1;
                    let e = self.parse_expr()?;
                    self.expect(Tok::RParen)?;
                    e
                };
                match expr.const_fold() {
                    Some(v) => v,
                    None => {
                        return Err(ParseError::new(
                            self.line,
                            exp_col,
                            "exponent must be a constant",
                        ))
                    }
                }
            }
            _ => return self.err("expected a constant exponent after `^`"),
        };
        let value = if negate { -value } else { value };
        Exponent::from_value(value).ok_or_else(|| {
            ParseError::new(
                self.line,
                exp_col,
                format!("exponent {value} is not an integer or half-integer"),
            )
        })
    }

    fn parse_atom(&mut self) -> Result<Expr, ParseError> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Number(n)) => Ok(Expr::Const(n)),
            Some(Tok::LParen) => {
                let e = self.parse_expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                if matches!(self.peek(), Some(Tok::LParen)) {
                    let func = UnaryFn::by_name(&name).ok_or_else(|| {
                        ParseError::new(self.line, col, format!("unknown function `{name}`"))
                    })?;
                    self.pos += 1;
                    let arg = self.parse_expr()?;
                    self.expect(Tok::RParen)?;
                    return Ok(Expr::Unary(func, Box::new(arg)));
                }
                if name == "pi" {
                    return Ok(Expr::Const(std::f64::consts::PI));
                }
                if let Some(axis) = self.names.coords.iter().position(|c| *c == name) {
                    return Ok(Expr::Coord(axis));
                }
                if self.names.params.contains(&name) {
                    return Ok(Expr::Param(name));
                }
                Err(ParseError::new(
                    self.line,
                    col,
                    format!("undeclared parameter `{name}`"),
                ))
            }
            Some(t) => Err(ParseError::new(
                self.line,
                col,
                format!("expected an expression, found {}", t.describe()),
            )),
            None => Err(ParseError::new(
                self.line,
                self.end_col,
                "expected an expression, found end of line",
            )),
        }
    }
}

/// Parses an expression from already-lexed tokens; used by the document
/// parser and by the constructor template format.
fn parse_expr_tokens(
    toks: &[(Tok, usize)],
    line: usize,
    end_col: usize,
    names: &Names<'_>,
) -> Result<Expr, ParseError> {
    let mut p = ExprParser {
        toks,
        pos: 0,
        line,
        names,
        end_col,
    };
    let expr = p.parse_expr()?;
    if p.pos != toks.len() {
        return p.err(format!(
            "unexpected trailing input starting at {}",
            p.peek().unwrap().describe()
        ));
    }
    Ok(expr)
}

/// Parses a single expression string against a chart and parameter list.
pub fn parse_expression(
    text: &str,
    line_no: usize,
    coords: [&str; 4],
    params: &[String],
) -> Result<Expr, ParseError> {
    let toks = lex_line(text, line_no)?;
    let names = Names { coords, params };
    parse_expr_tokens(&toks, line_no, text.len() + 1, &names)
}

fn ident(tok: Option<&(Tok, usize)>, line: usize, what: &str, end: usize) -> Result<(String, usize), ParseError> {
    match tok {
        Some((Tok::Ident(s), c)) => Ok((s.clone(), *c)),
        Some((t, c)) => Err(ParseError::new(
            line,
            *c,
            format!("expected {what}, found {}", t.describe()),
        )),
        None => Err(ParseError::new(line, end, format!("expected {what}"))),
    }
}

fn slot_index(tok: Option<&(Tok, usize)>, line: usize, end: usize) -> Result<(usize, usize), ParseError> {
    match tok {
        Some((Tok::Number(n), c)) => {
            if n.fract() == 0.0 && (0.0..=3.0).contains(n) {
                Ok((*n as usize, *c))
            } else {
                Err(ParseError::new(
                    line,
                    *c,
                    format!("slot index must be an integer in 0..3, found `{n}`"),
                ))
            }
        }
        Some((t, c)) => Err(ParseError::new(
            line,
            *c,
            format!("expected a slot index in 0..3, found {}", t.describe()),
        )),
        None => Err(ParseError::new(line, end, "expected a slot index in 0..3")),
    }
}

/// Parses a full metric document.
pub fn parse_metric_document(text: &str) -> Result<MetricSpec, ParseError> {
    let mut spec: Option<MetricSpec> = None;
    let mut param_names: Vec<String> = Vec::new();
    let mut seen_slot = false;
    let mut filled = [false; 10];

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let end = raw.len() + 1;
        let toks = lex_line(raw, line_no)?;
        if toks.is_empty() {
            continue;
        }
        let (head, head_col) = ident(toks.first(), line_no, "a directive", end)?;
        match head.as_str() {
            "chart" => {
                if spec.is_some() {
                    return Err(ParseError::new(line_no, head_col, "duplicate chart line"));
                }
                let rest = &toks[1..];
                if rest.len() != 4 || !rest.iter().all(|(t, _)| matches!(t, Tok::Ident(_))) {
                    return Err(ParseError::new(
                        line_no,
                        head_col,
                        format!("chart requires exactly 4 coordinate names, found {}", rest.len()),
                    ));
                }
                let mut names = ["", "", "", ""];
                for (i, (t, _)) in rest.iter().enumerate() {
                    if let Tok::Ident(s) = t {
                        names[i] = s;
                    }
                }
                let chart = Chart::new(names).map_err(|e| {
                    ParseError::new(line_no, head_col, e.to_string())
                })?;
                spec = Some(MetricSpec::new(chart));
            }
            "param" => {
                let spec = spec.as_mut().ok_or_else(|| {
                    ParseError::new(line_no, head_col, "chart line must come first")
                })?;
                if seen_slot {
                    return Err(ParseError::new(
                        line_no,
                        head_col,
                        "parameter declared after the first slot",
                    ));
                }
                let (name, name_col) = ident(toks.get(1), line_no, "a parameter name", end)?;
                if spec.chart.axis_of(&name).is_some() || param_names.contains(&name) {
                    return Err(ParseError::new(
                        line_no,
                        name_col,
                        format!("name `{name}` is already in use"),
                    ));
                }
                match toks.get(2) {
                    Some((Tok::Equals, _)) => {}
                    other => {
                        let col = other.map(|(_, c)| *c).unwrap_or(end);
                        return Err(ParseError::new(line_no, col, "expected `=`"));
                    }
                }
                // a signed real literal
                let value = match (toks.get(3), toks.get(4), toks.len()) {
                    (Some((Tok::Number(n), _)), None, 4) => *n,
                    (Some((Tok::Minus, _)), Some((Tok::Number(n), _)), 5) => -*n,
                    _ => {
                        let col = toks.get(3).map(|(_, c)| *c).unwrap_or(end);
                        return Err(ParseError::new(
                            line_no,
                            col,
                            "expected a real default value",
                        ));
                    }
                };
                spec.declare_param(&name, value);
                param_names.push(name);
            }
            "g" => {
                let spec = spec.as_mut().ok_or_else(|| {
                    ParseError::new(line_no, head_col, "chart line must come first")
                })?;
                seen_slot = true;
                let (mu, _) = slot_index(toks.get(1), line_no, end)?;
                let (nu, nu_col) = slot_index(toks.get(2), line_no, end)?;
                if mu > nu {
                    return Err(ParseError::new(
                        line_no,
                        nu_col,
                        format!("slot indices must satisfy mu <= nu, found g {mu} {nu}"),
                    ));
                }
                let k = crate::jet::sym_index(mu, nu);
                if filled[k] {
                    return Err(ParseError::new(
                        line_no,
                        head_col,
                        format!("duplicate slot g {mu} {nu}"),
                    ));
                }
                match toks.get(3) {
                    Some((Tok::Equals, _)) => {}
                    other => {
                        let col = other.map(|(_, c)| *c).unwrap_or(end);
                        return Err(ParseError::new(line_no, col, "expected `=`"));
                    }
                }
                let names = Names {
                    coords: spec.chart.names(),
                    params: &param_names,
                };
                let expr = parse_expr_tokens(&toks[4..], line_no, end, &names)?;
                filled[k] = true;
                spec.set_slot(mu, nu, expr);
            }
            other => {
                return Err(ParseError::new(
                    line_no,
                    head_col,
                    format!("unknown directive `{other}` (expected chart, param or g)"),
                ));
            }
        }
    }

    let spec = spec.ok_or_else(|| ParseError::new(1, 1, "document has no chart line"))?;
    if !seen_slot {
        return Err(ParseError::new(1, 1, "document declares no metric components"));
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::Point4;

    const MINKOWSKI_DOC: &str = "\
# flat metric, diagonal (+,-,-,-)
chart t x y z
g 0 0 = 1
g 1 1 = -1
g 2 2 = -1
g 3 3 = -1
";

    #[test]
    fn minkowski_document_has_expected_slots() {
        let spec = parse_metric_document(MINKOWSKI_DOC).unwrap();
        assert_eq!(spec.chart.names(), ["t", "x", "y", "z"]);
        let mut diag = 0;
        let mut zero = 0;
        for &(mu, nu) in crate::jet::SYM_PAIRS.iter() {
            if spec.is_structurally_zero(mu, nu) {
                zero += 1;
            } else {
                assert_eq!(mu, nu);
                diag += 1;
            }
        }
        assert_eq!((diag, zero), (4, 6));
    }

    #[test]
    fn unknown_function_reports_position() {
        let doc = "chart t x y z\ng 0 0 = sinh(t)\n";
        let err = parse_metric_document(doc).unwrap_err();
        assert_eq!((err.line, err.col), (2, 9));
        assert!(err.message.contains("unknown function `sinh`"));
    }

    #[test]
    fn undeclared_parameter_reports_position() {
        let doc = "chart t x y z\ng 0 0 = 1 - 2*mu/x\n";
        let err = parse_metric_document(doc).unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("undeclared parameter `mu`"));
    }

    #[test]
    fn duplicate_slot_is_rejected() {
        let doc = "chart t x y z\ng 0 0 = 1\ng 0 0 = 2\n";
        let err = parse_metric_document(doc).unwrap_err();
        assert!(err.message.contains("duplicate slot g 0 0"));
        let doc2 = "chart t x y z\ng 1 0 = 1\n";
        let err2 = parse_metric_document(doc2).unwrap_err();
        assert!(err2.message.contains("mu <= nu"));
    }

    #[test]
    fn wrong_coordinate_count_is_rejected() {
        let doc = "chart t x y\ng 0 0 = 1\n";
        let err = parse_metric_document(doc).unwrap_err();
        assert!(err.message.contains("exactly 4 coordinate names"));
    }

    #[test]
    fn expressions_support_precedence_and_pi() {
        let expr = parse_expression("1 + 2*t^2 - pi/2", 1, ["t", "x", "y", "z"], &[]).unwrap();
        let v = expr
            .eval_value(Point4::new(3.0, 0.0, 0.0, 0.0), &Default::default())
            .unwrap();
        assert!((v - (1.0 + 18.0 - std::f64::consts::FRAC_PI_2)).abs() < 1e-15);
    }

    #[test]
    fn caret_binds_tighter_than_unary_minus() {
        let expr = parse_expression("-t^2", 1, ["t", "x", "y", "z"], &[]).unwrap();
        let v = expr
            .eval_value(Point4::new(3.0, 0.0, 0.0, 0.0), &Default::default())
            .unwrap();
        assert_eq!(v, -9.0);
    }

    #[test]
    fn half_integer_exponents_parse() {
        let expr = parse_expression("tan(y/2)^(1/2) + tan(y/2)^(-1/2)", 1, ["t", "x", "y", "z"], &[])
            .unwrap();
        let v = expr
            .eval_value(
                Point4::new(0.0, 0.0, std::f64::consts::FRAC_PI_2, 0.0),
                &Default::default(),
            )
            .unwrap();
        assert!((v - 2.0).abs() < 1e-15);
    }

    #[test]
    fn scientific_notation_and_comments() {
        let doc = "chart t x y z\nparam a = -2.5e-3\ng 0 0 = a # inline comment\n";
        let spec = parse_metric_document(doc).unwrap();
        assert_eq!(spec.params, vec![("a".to_string(), -2.5e-3)]);
    }

    #[test]
    fn garbage_input_errors_without_panicking() {
        let mut rng = crate::rng::SplitMix64::new(99);
        let alphabet: Vec<char> =
            "chart param g = + - * / ^ ( ) 0 1 2 3 . e pi sin ln abs t x y z \n#"
                .chars()
                .collect();
        for _ in 0..2000 {
            let len = (rng.next_u64() % 120) as usize;
            let doc: String = (0..len)
                .map(|_| alphabet[(rng.next_u64() % alphabet.len() as u64) as usize])
                .collect();
            // any outcome is fine as long as errors carry positions
            if let Err(e) = parse_metric_document(&doc) {
                assert!(e.line >= 1 && e.col >= 1, "doc {doc:?} -> {e:?}");
            }
        }
    }

    #[test]
    fn round_trip_reparses_identically() {
        let doc = "chart t r theta phi\nparam m = 1\ng 0 0 = 1 - 2*m/r\ng 2 2 = -r^2\ng 3 3 = -r^2*sin(theta)^2\n";
        let spec = parse_metric_document(doc).unwrap();
        let rendered = spec.to_document();
        let reparsed = parse_metric_document(&rendered).unwrap();
        assert_eq!(spec, reparsed);
    }
}
