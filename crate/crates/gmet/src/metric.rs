//! Metric specifications: a chart, named parameters and the ten
//! upper-triangle component expressions of a symmetric 4×4 metric.

use std::collections::BTreeMap;

use crate::chart::Chart;
use crate::expr::{Expr, ParamMap};
use crate::jet::{sym_index, SYM_PAIRS};

/// Which catalog entry a spec came from; drives the closed-form
/// cross-checks and singular-set labelling that only apply there.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MetricKind {
    General,
    Minkowski,
    Schwarzschild,
    TimePeriodicPolar,
    TimePeriodicTilde,
}

/// Structural sparsity of the component matrix.
///
/// `block` is the shape with zero (1,2), (1,3) and (2,3) slots; the three
/// named types refine it by one more zero on the diagonal or edge.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MetricShape {
    pub block: bool,
    pub type1: bool,
    pub type2: bool,
    pub type3: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MetricSpec {
    pub chart: Chart,
    /// Declared parameters with default values, in declaration order.
    pub params: Vec<(String, f64)>,
    slots: [Option<Expr>; 10],
    pub kind: MetricKind,
}

impl MetricSpec {
    pub fn new(chart: Chart) -> Self {
        MetricSpec {
            chart,
            params: Vec::new(),
            slots: Default::default(),
            kind: MetricKind::General,
        }
    }

    pub fn declare_param(&mut self, name: &str, default: f64) {
        self.params.push((name.to_string(), default));
    }

    pub fn set_slot(&mut self, mu: usize, nu: usize, expr: Expr) {
        self.slots[sym_index(mu, nu)] = Some(expr);
    }

    pub fn slot(&self, mu: usize, nu: usize) -> Option<&Expr> {
        self.slots[sym_index(mu, nu)].as_ref()
    }

    /// A slot is structurally zero when omitted or a literal 0.
    pub fn is_structurally_zero(&self, mu: usize, nu: usize) -> bool {
        match self.slot(mu, nu) {
            None => true,
            Some(e) => e.is_zero_literal(),
        }
    }

    pub fn shape(&self) -> MetricShape {
        let z = |mu, nu| self.is_structurally_zero(mu, nu);
        let block = z(1, 2) && z(1, 3) && z(2, 3);
        MetricShape {
            block,
            type1: block && z(1, 1),
            type2: block && z(0, 0),
            type3: block && z(0, 3),
        }
    }

    /// Default parameter values as an evaluation map.
    pub fn default_params(&self) -> ParamMap {
        self.params.iter().cloned().collect()
    }

    /// Default parameters with overrides applied on top.
    pub fn params_with(&self, overrides: &BTreeMap<String, f64>) -> ParamMap {
        let mut map = self.default_params();
        for (k, v) in overrides {
            map.insert(k.clone(), *v);
        }
        map
    }

    pub fn is_param(&self, name: &str) -> bool {
        self.params.iter().any(|(n, _)| n == name)
    }

    /// Canonical document form; parsing it back yields a structurally
    /// identical spec (modulo validity intervals, which are not part of
    /// the text format).
    pub fn to_document(&self) -> String {
        let names = self.chart.names();
        let mut out = String::new();
        out.push_str(&format!(
            "chart {} {} {} {}\n",
            names[0], names[1], names[2], names[3]
        ));
        for (name, value) in &self.params {
            out.push_str(&format!("param {} = {}\n", name, value));
        }
        for (k, &(mu, nu)) in SYM_PAIRS.iter().enumerate() {
            if let Some(expr) = &self.slots[k] {
                out.push_str(&format!(
                    "g {} {} = {}\n",
                    mu,
                    nu,
                    expr.display_with(&names)
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{con, coord};

    fn chart() -> Chart {
        Chart::new(["t", "x", "y", "z"]).unwrap()
    }

    #[test]
    fn omitted_and_literal_zero_slots_are_structural_zeros() {
        let mut spec = MetricSpec::new(chart());
        spec.set_slot(0, 0, con(1.0));
        spec.set_slot(0, 3, con(0.0));
        assert!(spec.is_structurally_zero(0, 3));
        assert!(spec.is_structurally_zero(1, 2));
        assert!(!spec.is_structurally_zero(0, 0));
    }

    #[test]
    fn shape_classification() {
        // Type I: zero (1,1) with block zeros
        let mut spec = MetricSpec::new(chart());
        spec.set_slot(0, 0, con(1.0));
        spec.set_slot(0, 1, coord(1));
        spec.set_slot(2, 2, con(-1.0));
        spec.set_slot(3, 3, con(-1.0));
        let shape = spec.shape();
        assert!(shape.block && shape.type1 && !shape.type2);
        // also type3 because (0,3) is omitted
        assert!(shape.type3);
    }

    #[test]
    fn document_serialization_is_stable() {
        let mut spec = MetricSpec::new(chart());
        spec.declare_param("mu", 1.0);
        spec.set_slot(0, 0, con(1.0) - con(2.0) * crate::expr::param("mu") / coord(1));
        let doc = spec.to_document();
        assert_eq!(doc, "chart t x y z\nparam mu = 1\ng 0 0 = 1 - 2*mu/x\n");
    }
}
