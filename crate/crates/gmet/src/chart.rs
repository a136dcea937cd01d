//! Coordinate charts and points.

use thiserror::Error;

/// A coordinate validity interval with open/closed endpoint flags.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn open(lo: f64, hi: f64) -> Self {
        Interval {
            lo,
            hi,
            lo_closed: false,
            hi_closed: false,
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        let above = if self.lo_closed { x >= self.lo } else { x > self.lo };
        let below = if self.hi_closed { x <= self.hi } else { x < self.hi };
        above && below
    }

    pub fn is_empty(&self) -> bool {
        if self.lo_closed && self.hi_closed {
            self.lo > self.hi
        } else {
            self.lo >= self.hi
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ChartError {
    #[error("coordinate names must be distinct, `{0}` repeats")]
    DuplicateName(String),
    #[error("validity interval for `{0}` is empty")]
    EmptyInterval(String),
}

/// An ordered list of four coordinate names with optional validity intervals.
#[derive(Clone, Debug, PartialEq)]
pub struct Chart {
    names: [String; 4],
    intervals: [Option<Interval>; 4],
}

impl Chart {
    pub fn new(names: [&str; 4]) -> Result<Self, ChartError> {
        for i in 0..4 {
            for j in (i + 1)..4 {
                if names[i] == names[j] {
                    return Err(ChartError::DuplicateName(names[i].to_string()));
                }
            }
        }
        Ok(Chart {
            names: names.map(str::to_string),
            intervals: [None; 4],
        })
    }

    pub fn with_interval(mut self, axis: usize, interval: Interval) -> Result<Self, ChartError> {
        if interval.is_empty() {
            return Err(ChartError::EmptyInterval(self.names[axis].clone()));
        }
        self.intervals[axis] = Some(interval);
        Ok(self)
    }

    pub fn names(&self) -> [&str; 4] {
        [&self.names[0], &self.names[1], &self.names[2], &self.names[3]]
    }

    pub fn axis_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn interval(&self, axis: usize) -> Option<Interval> {
        self.intervals[axis]
    }

    /// First axis whose declared interval excludes the point, if any.
    pub fn violated_axis(&self, point: Point4) -> Option<usize> {
        (0..4).find(|&i| {
            self.intervals[i]
                .map(|iv| !iv.contains(point.0[i]))
                .unwrap_or(false)
        })
    }
}

/// A point in chart order; geometric units (c = G = 1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point4(pub [f64; 4]);

impl Point4 {
    pub fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Point4([x0, x1, x2, x3])
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_names() {
        assert_eq!(
            Chart::new(["t", "r", "t", "phi"]).unwrap_err(),
            ChartError::DuplicateName("t".into())
        );
    }

    #[test]
    fn open_interval_excludes_endpoints() {
        let iv = Interval::open(0.0, std::f64::consts::PI);
        assert!(!iv.contains(0.0));
        assert!(iv.contains(1.5));
        assert!(!iv.contains(std::f64::consts::PI));
    }

    #[test]
    fn violated_axis_reports_first_offender() {
        let chart = Chart::new(["t", "r", "theta", "phi"])
            .unwrap()
            .with_interval(2, Interval::open(0.0, std::f64::consts::PI))
            .unwrap();
        assert_eq!(chart.violated_axis(Point4::new(0.0, 1.0, 0.0, 0.0)), Some(2));
        assert_eq!(chart.violated_axis(Point4::new(0.0, 1.0, 1.0, 0.0)), None);
    }
}
