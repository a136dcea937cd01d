//! Second-order jets over a four-coordinate chart.
//!
//! A [`Jet2`] carries a value, its four first partials and the ten
//! independent second partials. Arithmetic propagates derivatives through
//! the exact Leibniz and chain rules, so evaluating a closed-form
//! expression on jets yields the exact gradient and Hessian of that
//! expression at the point (up to floating-point rounding).

/// Index of the (i, j) entry (i ≤ j) in the packed upper-triangle Hessian.
#[inline]
pub fn sym_index(i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * 4 + j - i * (i + 1) / 2
}

/// The ten (i, j) pairs with i ≤ j, in packed order.
pub const SYM_PAIRS: [(usize, usize); 10] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 2),
    (2, 3),
    (3, 3),
];

/// Value, gradient and packed symmetric Hessian of a scalar at a point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet2 {
    pub value: f64,
    pub grad: [f64; 4],
    /// Upper triangle of the Hessian, see [`sym_index`].
    pub hess: [f64; 10],
}

impl Jet2 {
    pub const ZERO: Jet2 = Jet2 {
        value: 0.0,
        grad: [0.0; 4],
        hess: [0.0; 10],
    };

    /// A constant: all derivatives vanish.
    pub fn constant(value: f64) -> Self {
        Jet2 {
            value,
            ..Jet2::ZERO
        }
    }

    /// The coordinate function of the given axis: unit first derivative.
    pub fn coordinate(value: f64, axis: usize) -> Self {
        let mut grad = [0.0; 4];
        grad[axis] = 1.0;
        Jet2 {
            value,
            grad,
            hess: [0.0; 10],
        }
    }

    /// Second partial by axes (i, j).
    #[inline]
    pub fn hess_at(&self, i: usize, j: usize) -> f64 {
        self.hess[sym_index(i, j)]
    }

    /// Composition with a scalar function g given g(v), g'(v), g''(v).
    ///
    /// (g∘f)_i = g' f_i, (g∘f)_ij = g' f_ij + g'' f_i f_j.
    pub fn chain(&self, value: f64, d1: f64, d2: f64) -> Self {
        let mut grad = [0.0; 4];
        for i in 0..4 {
            grad[i] = d1 * self.grad[i];
        }
        let mut hess = [0.0; 10];
        for (k, &(i, j)) in SYM_PAIRS.iter().enumerate() {
            hess[k] = d1 * self.hess[k] + d2 * self.grad[i] * self.grad[j];
        }
        Jet2 { value, grad, hess }
    }

    pub fn recip(&self) -> Self {
        let v = self.value;
        self.chain(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v))
    }

    pub fn sin(&self) -> Self {
        let (s, c) = self.value.sin_cos();
        self.chain(s, c, -s)
    }

    pub fn cos(&self) -> Self {
        let (s, c) = self.value.sin_cos();
        self.chain(c, -s, -c)
    }

    pub fn tan(&self) -> Self {
        let t = self.value.tan();
        let d1 = 1.0 + t * t;
        self.chain(t, d1, 2.0 * t * d1)
    }

    /// Caller must keep |value| < 1; the derivative poles at ±1 are the
    /// evaluator's domain errors.
    pub fn asin(&self) -> Self {
        let x = self.value;
        let one_m = 1.0 - x * x;
        let root = one_m.sqrt();
        self.chain(x.asin(), 1.0 / root, x / (one_m * root))
    }

    pub fn exp(&self) -> Self {
        let e = self.value.exp();
        self.chain(e, e, e)
    }

    /// Caller must keep value > 0.
    pub fn ln(&self) -> Self {
        let v = self.value;
        self.chain(v.ln(), 1.0 / v, -1.0 / (v * v))
    }

    /// Caller must keep value > 0.
    pub fn sqrt(&self) -> Self {
        let r = self.value.sqrt();
        self.chain(r, 0.5 / r, -0.25 / (r * self.value))
    }

    /// Caller must keep value ≠ 0; |f|'' = sign(f) f'' away from zero.
    pub fn abs(&self) -> Self {
        let s = if self.value < 0.0 { -1.0 } else { 1.0 };
        self.chain(self.value.abs(), s, 0.0)
    }

    /// Integer power, valid for any base except 0 with k < 2.
    pub fn powi(&self, k: i32) -> Self {
        match k {
            0 => Jet2::constant(1.0),
            1 => *self,
            _ => {
                let v = self.value;
                self.chain(
                    v.powi(k),
                    f64::from(k) * v.powi(k - 1),
                    f64::from(k) * f64::from(k - 1) * v.powi(k - 2),
                )
            }
        }
    }

    /// Real power for positive base (half-integer exponents in practice).
    pub fn powf(&self, p: f64) -> Self {
        let v = self.value;
        self.chain(v.powf(p), p * v.powf(p - 1.0), p * (p - 1.0) * v.powf(p - 2.0))
    }
}

impl std::ops::Neg for Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        let mut grad = [0.0; 4];
        let mut hess = [0.0; 10];
        for i in 0..4 {
            grad[i] = -self.grad[i];
        }
        for k in 0..10 {
            hess[k] = -self.hess[k];
        }
        Jet2 {
            value: -self.value,
            grad,
            hess,
        }
    }
}

impl std::ops::Add for Jet2 {
    type Output = Jet2;
    fn add(self, rhs: Jet2) -> Jet2 {
        let mut out = self;
        out.value += rhs.value;
        for i in 0..4 {
            out.grad[i] += rhs.grad[i];
        }
        for k in 0..10 {
            out.hess[k] += rhs.hess[k];
        }
        out
    }
}

impl std::ops::Sub for Jet2 {
    type Output = Jet2;
    fn sub(self, rhs: Jet2) -> Jet2 {
        let mut out = self;
        out.value -= rhs.value;
        for i in 0..4 {
            out.grad[i] -= rhs.grad[i];
        }
        for k in 0..10 {
            out.hess[k] -= rhs.hess[k];
        }
        out
    }
}

impl std::ops::Mul for Jet2 {
    type Output = Jet2;
    fn mul(self, rhs: Jet2) -> Jet2 {
        // (fg)_ij = f_ij g + f_i g_j + f_j g_i + f g_ij
        let mut grad = [0.0; 4];
        for i in 0..4 {
            grad[i] = self.grad[i] * rhs.value + self.value * rhs.grad[i];
        }
        let mut hess = [0.0; 10];
        for (k, &(i, j)) in SYM_PAIRS.iter().enumerate() {
            hess[k] = self.hess[k] * rhs.value
                + self.grad[i] * rhs.grad[j]
                + self.grad[j] * rhs.grad[i]
                + self.value * rhs.hess[k];
        }
        Jet2 {
            value: self.value * rhs.value,
            grad,
            hess,
        }
    }
}

impl std::ops::Div for Jet2 {
    type Output = Jet2;
    #[allow(clippy::suspicious_arithmetic_impl)] // f/g computed as f * (1/g)
    fn div(self, rhs: Jet2) -> Jet2 {
        self * rhs.recip()
    }
}
