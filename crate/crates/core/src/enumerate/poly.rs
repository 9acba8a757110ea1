use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A polynomial in `x` and `y` with exact integer coefficients, truncated to
/// `x`-degree at most `x_cap` and `y`-degree at most `y_cap`. Every operation
/// drops terms above the caps, so the stored coefficients are exactly those
/// of the untruncated result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariatePoly {
    x_cap: usize,
    y_cap: usize,
    // c[i][j] is the coefficient of x^i y^j.
    c: Vec<Vec<BigInt>>,
}

impl BivariatePoly {
    pub fn zero(x_cap: usize, y_cap: usize) -> Self {
        BivariatePoly { x_cap, y_cap, c: vec![vec![BigInt::zero(); y_cap + 1]; x_cap + 1] }
    }

    pub fn one(x_cap: usize, y_cap: usize) -> Self {
        Self::monomial(x_cap, y_cap, 0, 0, BigInt::one())
    }

    /// `coef * x^i * y^j`, or zero if the term lies above the caps.
    pub fn monomial(x_cap: usize, y_cap: usize, i: usize, j: usize, coef: BigInt) -> Self {
        let mut p = Self::zero(x_cap, y_cap);
        if i <= x_cap && j <= y_cap {
            p.c[i][j] = coef;
        }
        p
    }

    pub fn x_cap(&self) -> usize {
        self.x_cap
    }

    pub fn y_cap(&self) -> usize {
        self.y_cap
    }

    /// Coefficient of `x^i y^j`; zero above the caps.
    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.c.get(i).and_then(|row| row.get(j)).cloned().unwrap_or_default()
    }

    /// The coefficients of `x^i` as a polynomial in `y`.
    pub fn x_coeff(&self, i: usize) -> &[BigInt] {
        &self.c[i]
    }

    /// Sum of the coefficients of `x^i`, i.e. the `x^i` coefficient at `y = 1`.
    pub fn at_y_one(&self, i: usize) -> BigInt {
        self.c.get(i).map(|row| row.iter().sum()).unwrap_or_default()
    }

    /// Whether the polynomial has no `x` terms.
    pub fn is_x_free(&self) -> bool {
        self.c.iter().skip(1).all(|row| row.iter().all(Zero::is_zero))
    }

    fn check_caps(&self, other: &Self) {
        assert!(
            self.x_cap == other.x_cap && self.y_cap == other.y_cap,
            "polynomial caps differ: ({}, {}) vs ({}, {})",
            self.x_cap,
            self.y_cap,
            other.x_cap,
            other.y_cap
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_caps(other);
        let mut out = self.clone();
        for (ro, rb) in out.c.iter_mut().zip(&other.c) {
            for (a, b) in ro.iter_mut().zip(rb) {
                *a += b;
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        let mut out = self.clone();
        out.c.iter_mut().flatten().for_each(|a| *a *= s);
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_caps(other);
        let mut out = Self::zero(self.x_cap, self.y_cap);
        for (i1, r1) in self.c.iter().enumerate() {
            for (j1, a) in r1.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                for (i2, r2) in other.c[..=self.x_cap - i1].iter().enumerate() {
                    for (j2, b) in r2[..=self.y_cap - j1].iter().enumerate() {
                        if !b.is_zero() {
                            out.c[i1 + i2][j1 + j2] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.x_cap, self.y_cap);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplies by `x^s`, dropping what falls above the cap.
    pub fn shift_x(&self, s: usize) -> Self {
        let mut out = Self::zero(self.x_cap, self.y_cap);
        for i in s..=self.x_cap {
            out.c[i] = self.c[i - s].clone();
        }
        out
    }

    /// `1 / (1 - a x)^p` for an `x`-free `a`, expanded as
    /// `sum_t C(p - 1 + t, t) a^t x^t`. Panics if `a` mentions `x` or `p == 0`.
    pub fn inverse_power(a: &Self, p: usize) -> Self {
        assert!(a.is_x_free(), "inverse_power needs an x-free polynomial");
        assert!(p >= 1, "inverse_power needs p >= 1");
        let mut out = Self::zero(a.x_cap, a.y_cap);
        let mut a_t = Self::one(a.x_cap, a.y_cap);
        let mut binom = BigInt::one();
        for t in 0..=a.x_cap {
            if t > 0 {
                a_t = a_t.mul(a);
                // C(p-1+t, t) from C(p-2+t, t-1).
                binom = binom * BigInt::from(p - 1 + t) / BigInt::from(t);
            }
            for (j, v) in a_t.c[0].iter().enumerate() {
                out.c[t][j] = &binom * v;
            }
        }
        out
    }
}
