//! Truncated formal power series `Σ c_k t^k + O(t^N)` with exact rational
//! coefficients.
//!
//! Coefficients are stored in the ordinary basis. The exponential view
//! `a_k = k! c_k` is exposed only through [`Series::egf_coefficient`] (and the
//! pairing in [`crate::sheffer`]).
//!
//! Truncation rules: binary operations keep the smaller truncation of their
//! operands, reversion keeps the truncation of its input, and nothing ever
//! extends a series past the coefficients it actually knows.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, parse_rational, Rational};

/// Index of the first nonzero coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(usize),
    /// Every retained coefficient is zero.
    BeyondTruncation,
}

impl Order {
    pub fn finite(self) -> Option<usize> {
        match self {
            Order::Finite(k) => Some(k),
            Order::BeyondTruncation => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::BeyondTruncation => f.write_str("beyond truncation"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesClass {
    /// Order 0.
    Invertible,
    /// Order 1.
    Delta,
    Other,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// A series whose truncation is the number of coefficients given.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Series { coeffs }
    }

    pub fn from_fn(trunc: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Series::new((0..trunc).map(f).collect())
    }

    /// Coefficients from small integers/ratios, handy in tests.
    pub fn from_ratios(coeffs: &[(i64, i64)]) -> Self {
        Series::new(coeffs.iter().map(|&(p, q)| rational::ratio(p, q)).collect())
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Series::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero(trunc: usize) -> Self {
        Series::from_fn(trunc, |_| Rational::zero())
    }

    pub fn constant(c: Rational, trunc: usize) -> Self {
        let mut s = Series::zero(trunc);
        if trunc > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn one(trunc: usize) -> Self {
        Series::constant(Rational::one(), trunc)
    }

    /// `c t^k`, or the zero series when `k >= trunc`.
    pub fn monomial(c: Rational, k: usize, trunc: usize) -> Self {
        let mut s = Series::zero(trunc);
        if k < trunc {
            s.coeffs[k] = c;
        }
        s
    }

    /// The identity delta series `t`.
    pub fn t(trunc: usize) -> Self {
        Series::monomial(Rational::one(), 1, trunc)
    }

    /// `e^{a t}`.
    pub fn exp_linear(a: &Rational, trunc: usize) -> Self {
        let mut coeffs = Vec::with_capacity(trunc);
        let mut term = Rational::one();
        for k in 0..trunc {
            if k > 0 {
                term = term * a / rational::int(k as i64);
            }
            coeffs.push(term.clone());
        }
        Series::new(coeffs)
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `t^k`; `None` past the truncation.
    pub fn coeff(&self, k: usize) -> Option<&Rational> {
        self.coeffs.get(k)
    }

    pub fn order(&self) -> Order {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map_or(Order::BeyondTruncation, Order::Finite)
    }

    pub fn class(&self) -> SeriesClass {
        match self.order() {
            Order::Finite(0) => SeriesClass::Invertible,
            Order::Finite(1) => SeriesClass::Delta,
            _ => SeriesClass::Other,
        }
    }

    pub fn is_delta(&self) -> bool {
        self.class() == SeriesClass::Delta
    }

    pub fn is_invertible(&self) -> bool {
        self.class() == SeriesClass::Invertible
    }

    /// Drops coefficients at and beyond `trunc`. Never extends.
    pub fn truncate(&self, trunc: usize) -> Series {
        Series::new(self.coeffs[..trunc.min(self.trunc())].to_vec())
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    fn zip_with(&self, other: &Series, op: impl Fn(&Rational, &Rational) -> Rational) -> Series {
        Series::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| op(a, b))
                .collect(),
        )
    }

    /// Cauchy product at the smaller truncation.
    pub fn mul_series(&self, other: &Series) -> Series {
        let n = self.trunc().min(other.trunc());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series::new(out)
    }

    /// Multiplicative inverse of an invertible series.
    pub fn inv(&self) -> Result<Series> {
        if !self.is_invertible() {
            return Err(Error::class(format!(
                "inverse needs a nonzero constant term (order {})",
                self.order()
            )));
        }
        let n = self.trunc();
        let c0_inv = self.coeffs[0].recip();
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        out.push(c0_inv.clone());
        for k in 1..n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out.push(-acc * &c0_inv);
        }
        Ok(Series::new(out))
    }

    /// `s^m`; negative exponents go through [`Series::inv`].
    pub fn int_pow(&self, m: i64) -> Result<Series> {
        let base = if m < 0 { self.inv()? } else { self.clone() };
        let mut e = m.unsigned_abs();
        let mut acc = Series::one(self.trunc());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_series(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_series(&sq);
            }
        }
        Ok(acc)
    }

    fn require_unit_constant(&self, what: &str) -> Result<()> {
        match self.coeffs.first() {
            Some(c) if c.is_one() => Ok(()),
            _ => Err(Error::class(format!("{what} needs constant term 1"))),
        }
    }

    /// `log s` for `s(0) = 1`, computed as `∫ s'/s`.
    pub fn log(&self) -> Result<Series> {
        self.require_unit_constant("log")?;
        let q = self.derivative().mul_series(&self.inv()?);
        Ok(q.integral())
    }

    /// `exp s` for `order(s) >= 1`.
    pub fn exp(&self) -> Result<Series> {
        let n = self.trunc();
        if n > 0 && !self.coeffs[0].is_zero() {
            return Err(Error::class("exp needs a vanishing constant term"));
        }
        // k e_k = Σ_{j=1..k} j s_j e_{k-j}
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                out.push(Rational::one());
                continue;
            }
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j] * rational::int(j as i64);
                }
            }
            out.push(acc / rational::int(k as i64));
        }
        Ok(Series::new(out))
    }

    /// `s^alpha = exp(alpha log s)` for `s(0) = 1`.
    pub fn rat_pow(&self, alpha: &Rational) -> Result<Series> {
        self.require_unit_constant("rational power")?;
        if alpha.is_zero() {
            return Ok(Series::one(self.trunc()));
        }
        self.log()?.scale(alpha).exp()
    }

    /// `outer(inner(t))`, requires `order(inner) >= 1`.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        let n = self.trunc().min(inner.trunc());
        if n > 0 && !inner.coeffs[0].is_zero() {
            return Err(Error::class(
                "composition needs an inner series with vanishing constant term",
            ));
        }
        let inner = inner.truncate(n);
        // Horner: ((o_{n-1} u + o_{n-2}) u + ...) u + o_0
        let mut acc = Series::zero(n);
        for k in (0..n).rev() {
            acc = acc.mul_series(&inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse of a delta series, same truncation as the input.
    ///
    /// Uses Lagrange inversion: `[t^n] f̄ = (1/n) [t^{n-1}] (t/f)^n`.
    pub fn revert(&self) -> Result<Series> {
        if !self.is_delta() {
            return Err(Error::class(format!(
                "reversion needs a delta series (order {})",
                self.order()
            )));
        }
        let n = self.trunc();
        let h = self.div_t()?.inv()?;
        let mut out = vec![Rational::zero(); n];
        let mut h_pow = Series::one(h.trunc());
        for k in 1..n {
            h_pow = h_pow.mul_series(&h);
            out[k] = &h_pow.coeffs[k - 1] / rational::int(k as i64);
        }
        Ok(Series::new(out))
    }

    /// `d/dt`; the truncation drops by one.
    pub fn derivative(&self) -> Series {
        Series::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rational::int(k as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term; the truncation grows by one
    /// because the new constant term is exact.
    fn integral(&self) -> Series {
        let mut out = Vec::with_capacity(self.trunc() + 1);
        out.push(Rational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            out.push(c / rational::int(k as i64 + 1));
        }
        Series::new(out)
    }

    /// `s / t` for a series with vanishing constant term; truncation drops by one.
    pub fn div_t(&self) -> Result<Series> {
        match self.coeffs.first() {
            Some(c) if c.is_zero() => Ok(Series::new(self.coeffs[1..].to_vec())),
            Some(_) => Err(Error::class(
                "division by t needs a vanishing constant term",
            )),
            None => Err(Error::range("division by t of an empty series")),
        }
    }

    /// `t · s`; truncation grows by one.
    pub fn mul_t(&self) -> Series {
        let mut out = Vec::with_capacity(self.trunc() + 1);
        out.push(Rational::zero());
        out.extend(self.coeffs.iter().cloned());
        Series::new(out)
    }

    /// The exponential-generating-function coefficient `a_n = n! c_n`.
    pub fn egf_coefficient(&self, n: usize) -> Result<Rational> {
        let c = self.coeffs.get(n).ok_or_else(|| {
            Error::range(format!(
                "coefficient {n} requested from a series truncated at {}",
                self.trunc()
            ))
        })?;
        Ok(c * Rational::from_integer(rational::factorial(n)))
    }

    /// Builds a series from exponential coefficients `a_k`, i.e. `c_k = a_k / k!`.
    pub fn from_egf(egf: &[Rational]) -> Series {
        let mut fact = BigInt::one();
        Series::new(
            egf.iter()
                .enumerate()
                .map(|(k, a)| {
                    if k > 0 {
                        fact *= BigInt::from(k);
                    }
                    a / Rational::from_integer(fact.clone())
                })
                .collect(),
        )
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        self.mul_series(rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Series {
    /// The comma-separated literal `c0,c1,...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{self}; N={}]", self.trunc())
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Series> {
        if s.is_empty() {
            return Err(Error::Parse("empty series literal".into()));
        }
        s.split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map(Series::new)
    }
}
