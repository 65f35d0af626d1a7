//! The umbral algebra: Sheffer pairs `(g, f)`, the pairing
//! `<f(t) | x^n> = a_n`, `t` acting as `d/dx`, the transfer formula, umbral
//! composition and `m`-th umbral powers.
//!
//! An umbral power `s^(m)` can be reached three ways and every one is exposed:
//!
//! * [`umbral_power_matrix`]: the `m`-th power of the coefficient triangle;
//! * [`umbral_power_gf`]: the triangle of the powered pair
//!   `(Π_{i<m} g(f^i), f^m)` read off its generating function;
//! * [`umbral_power_transfer`]: for associated sequences (`g = 1`), `m`
//!   successive transfers `s^(j) = x (f^{j-1}/f^j)^n x^{-1} s^(j-1)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{self, factorial, Rational};
use crate::series::{Series, SeriesClass};
use crate::special;
use crate::triangle::CoeffTriangle;

/// An invertible `g` and a delta `f` sharing one working truncation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ShefferPair {
    g: Series,
    f: Series,
}

impl ShefferPair {
    /// Both series are cut to the smaller of their truncations.
    pub fn new(g: Series, f: Series) -> Result<Self> {
        let trunc = g.trunc().min(f.trunc());
        let (g, f) = (g.truncate(trunc), f.truncate(trunc));
        if g.class() != SeriesClass::Invertible {
            return Err(Error::class(format!(
                "g must be invertible (order {})",
                g.order()
            )));
        }
        if f.class() != SeriesClass::Delta {
            return Err(Error::class(format!(
                "f must be a delta series (order {})",
                f.order()
            )));
        }
        Ok(ShefferPair { g, f })
    }

    /// `(1, f)`.
    pub fn associated(f: Series) -> Result<Self> {
        let trunc = f.trunc();
        ShefferPair::new(Series::one(trunc), f)
    }

    /// `(1, t)`, whose sequence is `x^n`.
    pub fn identity(trunc: usize) -> Self {
        ShefferPair {
            g: Series::one(trunc),
            f: Series::t(trunc),
        }
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    pub fn trunc(&self) -> usize {
        self.f.trunc()
    }

    pub fn is_associated(&self) -> bool {
        self.g == Series::one(self.trunc())
    }

    pub fn truncate(&self, trunc: usize) -> ShefferPair {
        ShefferPair {
            g: self.g.truncate(trunc),
            f: self.f.truncate(trunc),
        }
    }

    /// The pair of `r ∘ s` for `r ~ self = (h, l)` and `s ~ inner = (g, f)`:
    /// `(g · h(f), l(f))`.
    pub fn compose_after(&self, inner: &ShefferPair) -> Result<ShefferPair> {
        let g = inner.g.mul_series(&self.g.compose(&inner.f)?);
        let f = self.f.compose(&inner.f)?;
        ShefferPair::new(g, f)
    }

    /// The pair of the umbral inverse, `(1/g(f̄), f̄)`.
    pub fn inverse(&self) -> Result<ShefferPair> {
        let fbar = self.f.revert()?;
        ShefferPair::new(self.g.compose(&fbar)?.inv()?, fbar)
    }
}

impl fmt::Display for ShefferPair {
    /// `g=<literal>; f=<literal>; N=<trunc>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g={}; f={}; N={}", self.g, self.f, self.trunc())
    }
}

impl fmt::Debug for ShefferPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ShefferPair({self})")
    }
}

impl FromStr for ShefferPair {
    type Err = Error;

    /// Parses `g=<literal>; f=<literal>; N=<trunc>`. `N` may not exceed the
    /// number of coefficients given for either series.
    fn from_str(s: &str) -> Result<Self> {
        let mut g = None;
        let mut f = None;
        let mut n = None;
        for field in s.split(';') {
            let (key, value) = field
                .trim()
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {field:?}")))?;
            match key.trim() {
                "g" => g = Some(value.trim().parse::<Series>()?),
                "f" => f = Some(value.trim().parse::<Series>()?),
                "N" => {
                    n = Some(
                        value
                            .trim()
                            .parse::<usize>()
                            .map_err(|e| Error::Parse(format!("bad truncation {value:?}: {e}")))?,
                    )
                }
                other => return Err(Error::Parse(format!("unknown pair field {other:?}"))),
            }
        }
        let missing = |name: &str| Error::Parse(format!("pair description lacks {name}"));
        let (g, f, n) = (
            g.ok_or_else(|| missing("g"))?,
            f.ok_or_else(|| missing("f"))?,
            n.ok_or_else(|| missing("N"))?,
        );
        if n == 0 || n > g.trunc() || n > f.trunc() {
            return Err(Error::Parse(format!(
                "N={n} must be positive and at most the given coefficient counts ({}, {})",
                g.trunc(),
                f.trunc()
            )));
        }
        ShefferPair::new(g.truncate(n), f.truncate(n))
    }
}

/// The four classical associated sequences, plus arbitrary pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceFamily {
    /// `x^(n) ~ (1, 1 - e^{-t})`.
    RisingFactorial,
    /// `Σ L(n,k) (-x)^k ~ (1, t/(t-1))`.
    Lah,
    /// `x(x - an)^{n-1} ~ (1, t e^{at})`, `a != 0`.
    Abel(Rational),
    /// `M_n(x) ~ (1, (e^t - 1)/(e^t + 1))`.
    MittagLeffler,
    Custom(ShefferPair),
}

impl SequenceFamily {
    pub fn abel(a: Rational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::param("Abel family needs a != 0"));
        }
        Ok(SequenceFamily::Abel(a))
    }

    pub fn name(&self) -> String {
        match self {
            SequenceFamily::RisingFactorial => "rising-factorial".into(),
            SequenceFamily::Lah => "lah".into(),
            SequenceFamily::Abel(a) => format!("abel(a={a})"),
            SequenceFamily::MittagLeffler => "mittag-leffler".into(),
            SequenceFamily::Custom(p) => format!("custom({p})"),
        }
    }

    /// The delta series `f` of the family at truncation `trunc`.
    pub fn delta(&self, trunc: usize) -> Result<Series> {
        Ok(match self {
            SequenceFamily::RisingFactorial => {
                &Series::one(trunc) - &Series::exp_linear(&rational::int(-1), trunc)
            }
            SequenceFamily::Lah => Series::from_fn(trunc, |k| {
                if k == 0 {
                    Rational::zero()
                } else {
                    rational::int(-1)
                }
            }),
            SequenceFamily::Abel(a) => {
                if a.is_zero() {
                    return Err(Error::param("Abel family needs a != 0"));
                }
                Series::exp_linear(a, trunc.saturating_sub(1)).mul_t()
            }
            SequenceFamily::MittagLeffler => {
                let e = Series::exp_linear(&Rational::one(), trunc);
                let one = Series::one(trunc);
                (&e - &one).mul_series(&(&e + &one).inv()?)
            }
            SequenceFamily::Custom(p) => p.f().truncate(trunc),
        })
    }

    pub fn pair(&self, trunc: usize) -> Result<ShefferPair> {
        match self {
            SequenceFamily::Custom(p) => {
                if trunc > p.trunc() {
                    return Err(Error::range(format!(
                        "custom pair is known to {} coefficients, {trunc} requested",
                        p.trunc()
                    )));
                }
                Ok(p.truncate(trunc))
            }
            _ => ShefferPair::associated(self.delta(trunc)?),
        }
    }

    /// The coefficient triangle from the family's closed form, independent of
    /// any series machinery.
    pub fn closed_form(&self, n_max: usize) -> Result<CoeffTriangle> {
        match self {
            SequenceFamily::RisingFactorial => Ok(special::stirling1_unsigned_triangle(n_max)),
            SequenceFamily::Lah => Ok(special::lah_signed_triangle(n_max)),
            SequenceFamily::Abel(a) => special::abel_triangle(n_max, a),
            SequenceFamily::MittagLeffler => Ok(special::mittag_leffler_triangle(n_max)),
            SequenceFamily::Custom(p) => sheffer_triangle(p, n_max),
        }
    }
}

/// `<f(t) | p(x)> = Σ_n p_n n! c_n(f)`.
pub fn pairing(f: &Series, p: &Polynomial) -> Result<Rational> {
    if let Some(d) = p.degree() {
        if d >= f.trunc() {
            return Err(Error::range(format!(
                "pairing a degree-{d} polynomial needs more than {} coefficients",
                f.trunc()
            )));
        }
    }
    let mut acc = Rational::zero();
    for (n, pn) in p.coeffs().iter().enumerate() {
        if !pn.is_zero() {
            acc += pn * f.egf_coefficient(n)?;
        }
    }
    Ok(acc)
}

/// `h(t) p(x) = Σ_k c_k(h) p^{(k)}(x)` with `t^k` acting as `d^k/dx^k`.
///
/// Every coefficient of `h` up to `deg p` takes part, so `h` must be known
/// that far.
pub fn apply_operator(h: &Series, p: &Polynomial) -> Result<Polynomial> {
    let Some(d) = p.degree() else {
        return Ok(Polynomial::zero());
    };
    if d >= h.trunc() {
        return Err(Error::range(format!(
            "operator known to {} coefficients applied to degree {d}",
            h.trunc()
        )));
    }
    let mut out = Polynomial::zero();
    let mut deriv = p.clone();
    for c in &h.coeffs()[..=d] {
        if !c.is_zero() {
            out = &out + &deriv.scale(c);
        }
        deriv = deriv.derivative();
    }
    Ok(out)
}

/// Rows `0..=n_max` of the Sheffer sequence of `pair`, from
/// `Σ s_n(x) t^n/n! = e^{x f̄(t)} / g(f̄(t))`:
/// `s_{n,k} = (n!/k!) [t^n] f̄(t)^k / g(f̄(t))`.
pub fn sheffer_triangle(pair: &ShefferPair, n_max: usize) -> Result<CoeffTriangle> {
    if pair.trunc() <= n_max {
        return Err(Error::range(format!(
            "pair truncated at {} cannot produce rows up to {n_max}",
            pair.trunc()
        )));
    }
    let pair = pair.truncate(n_max + 1);
    let fbar = pair.f.revert()?;
    let mut term = pair.g.compose(&fbar)?.inv()?;
    let mut tri = CoeffTriangle::identity(n_max);
    let facts: Vec<Rational> = (0..=n_max)
        .map(|n| Rational::from_integer(factorial(n)))
        .collect();
    for k in 0..=n_max {
        if k > 0 {
            term = term.mul_series(&fbar);
        }
        for n in k..=n_max {
            let c = &term.coeffs()[n];
            let v = if c.is_zero() {
                Rational::zero()
            } else {
                c * &facts[n] / &facts[k]
            };
            tri.set(n, k, v);
        }
    }
    Ok(tri)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalityCase {
    pub n: usize,
    pub k: usize,
    /// `<g f^k | s_n>`.
    pub value: Rational,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub cases: Vec<OrthogonalityCase>,
    pub all_pass: bool,
}

impl OrthogonalityReport {
    pub fn failures(&self) -> impl Iterator<Item = &OrthogonalityCase> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

/// Checks `<g(t) f(t)^k | s_n(x)> = n! δ_{n,k}` for `0 <= n, k <= n_max`.
pub fn verify_orthogonality(
    pair: &ShefferPair,
    triangle: &CoeffTriangle,
    n_max: usize,
) -> Result<OrthogonalityReport> {
    if triangle.n_max() < n_max {
        return Err(Error::range(format!(
            "triangle has rows up to {}, {n_max} requested",
            triangle.n_max()
        )));
    }
    if pair.trunc() <= n_max {
        return Err(Error::range(format!(
            "pair truncated at {} cannot pair with degree {n_max}",
            pair.trunc()
        )));
    }
    let polys: Vec<Polynomial> = (0..=n_max).map(|n| triangle.row_polynomial(n)).collect();
    let mut cases = Vec::with_capacity((n_max + 1) * (n_max + 1));
    let mut functional = pair.g.clone();
    for k in 0..=n_max {
        if k > 0 {
            functional = functional.mul_series(&pair.f);
        }
        for (n, p) in polys.iter().enumerate() {
            let value = pairing(&functional, p)?;
            let expected = if n == k {
                Rational::from_integer(factorial(n))
            } else {
                Rational::zero()
            };
            let pass = value == expected;
            cases.push(OrthogonalityCase { n, k, value, pass });
        }
    }
    cases.sort_by_key(|c| (c.n, c.k));
    let all_pass = cases.iter().all(|c| c.pass);
    Ok(OrthogonalityReport { cases, all_pass })
}

/// For `p_n ~ (1, f)` and `q_n ~ (1, g)`:
/// `q_n(x) = x (f(t)/g(t))^n x^{-1} p_n(x)`.
///
/// `f/g` is formed as `(f/t) · (t/g)`, both factors of order 0.
pub fn transfer(
    p_triangle: &CoeffTriangle,
    f: &Series,
    g: &Series,
    n_max: usize,
) -> Result<CoeffTriangle> {
    if !f.is_delta() || !g.is_delta() {
        return Err(Error::class("transfer needs two delta series"));
    }
    if p_triangle.n_max() < n_max {
        return Err(Error::range(format!(
            "triangle has rows up to {}, {n_max} requested",
            p_triangle.n_max()
        )));
    }
    if f.trunc().min(g.trunc()) <= n_max {
        return Err(Error::range(format!(
            "series truncated at {} cannot transfer rows up to {n_max}",
            f.trunc().min(g.trunc())
        )));
    }
    if let Some(n) = (1..=n_max).find(|&n| !p_triangle.get(n, 0).is_zero()) {
        return Err(Error::input(format!(
            "row {n} has a nonzero constant term; x^-1 p_n is not a polynomial"
        )));
    }
    let ratio = f.div_t()?.mul_series(&g.div_t()?.inv()?);
    let mut rows = vec![vec![Rational::one()]];
    let mut op = Series::one(ratio.trunc());
    for n in 1..=n_max {
        op = op.mul_series(&ratio);
        let reduced = p_triangle.row_polynomial(n).div_x()?;
        let q = apply_operator(&op, &reduced)?.mul_x();
        rows.push((0..=n).map(|k| q.coeff(k)).collect());
    }
    CoeffTriangle::from_rows(rows)
}

/// `f^m = f ∘ ... ∘ f` (`m` times), with `f^0 = t`.
pub fn compositional_power(f: &Series, m: usize) -> Result<Series> {
    if !f.is_delta() {
        return Err(Error::class("compositional powers need a delta series"));
    }
    let mut acc = Series::t(f.trunc());
    for _ in 0..m {
        acc = f.compose(&acc)?;
    }
    Ok(acc)
}

/// `(Π_{i=0}^{m-1} g(f^i(t)), f^m(t))`, the pair of the `m`-th umbral power.
///
/// `m = 0` is rejected; the identity pair is [`ShefferPair::identity`].
pub fn pair_power(pair: &ShefferPair, m: usize) -> Result<ShefferPair> {
    if m == 0 {
        return Err(Error::param("pair power needs m >= 1"));
    }
    if m == 1 {
        return Ok(pair.clone());
    }
    let mut g_part = Series::one(pair.trunc());
    let mut f_iter = Series::t(pair.trunc());
    for _ in 0..m {
        g_part = g_part.mul_series(&pair.g.compose(&f_iter)?);
        f_iter = pair.f.compose(&f_iter)?;
    }
    ShefferPair::new(g_part, f_iter)
}

/// `(q ∘ p)_n(x) = Σ_k q_{n,k} p_k(x)`, i.e. the matrix product `q · p`.
pub fn umbral_compose(q: &CoeffTriangle, p: &CoeffTriangle) -> Result<CoeffTriangle> {
    q.matmul(p)
}

/// `s^(m)_{n,k} = Σ s_{n,l_1} s_{l_1,l_2} ... s_{l_{m-1},k}`.
pub fn umbral_power_matrix(s: &CoeffTriangle, m: usize) -> Result<CoeffTriangle> {
    if m == 0 {
        return Err(Error::param("umbral power needs m >= 1"));
    }
    s.pow(m)
}

/// The triangle of [`pair_power`], read from its generating function.
pub fn umbral_power_gf(pair: &ShefferPair, m: usize, n_max: usize) -> Result<CoeffTriangle> {
    if pair.trunc() <= n_max {
        return Err(Error::range(format!(
            "pair truncated at {} cannot produce rows up to {n_max}",
            pair.trunc()
        )));
    }
    sheffer_triangle(&pair_power(&pair.truncate(n_max + 1), m)?, n_max)
}

/// `m` chained transfers `x^n -> s^(1) -> ... -> s^(m)` for an associated
/// sequence `s ~ (1, f)`.
pub fn umbral_power_transfer(f: &Series, m: usize, n_max: usize) -> Result<CoeffTriangle> {
    if m == 0 {
        return Err(Error::param("umbral power needs m >= 1"));
    }
    if f.trunc() <= n_max {
        return Err(Error::range(format!(
            "series truncated at {} cannot produce rows up to {n_max}",
            f.trunc()
        )));
    }
    let f = f.truncate(n_max + 1);
    let mut prev_f = Series::t(f.trunc());
    let mut tri = CoeffTriangle::identity(n_max);
    for _ in 0..m {
        let next_f = f.compose(&prev_f)?;
        tri = transfer(&tri, &prev_f, &next_f, n_max)?;
        prev_f = next_f;
    }
    Ok(tri)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::special::{lah_signed_triangle, stirling1_unsigned_triangle};

    fn rising(trunc: usize) -> Series {
        SequenceFamily::RisingFactorial.delta(trunc).unwrap()
    }

    fn lah_f(trunc: usize) -> Series {
        SequenceFamily::Lah.delta(trunc).unwrap()
    }

    #[test]
    fn pair_construction_checks_orders() {
        assert!(ShefferPair::new(Series::t(4), Series::t(4)).is_err());
        assert!(ShefferPair::new(Series::one(4), Series::one(4)).is_err());
        let p = ShefferPair::new(Series::one(6), Series::t(4)).unwrap();
        assert_eq!(p.trunc(), 4);
        assert!(p.is_associated());
    }

    #[test]
    fn pair_text_round_trip() {
        let p: ShefferPair = "g=1,1,0,0; f=0,1,1,1; N=4".parse().unwrap();
        assert_eq!(p.to_string(), "g=1,1,0,0; f=0,1,1,1; N=4");
        assert_eq!(p.to_string().parse::<ShefferPair>().unwrap(), p);
        let short: ShefferPair = "g=1,1,0,0; f=0,1,1,1; N=2".parse().unwrap();
        assert_eq!(short.trunc(), 2);
        assert!("g=1,1; f=0,1; N=3".parse::<ShefferPair>().is_err());
        assert!("g=0,1; f=0,1; N=2".parse::<ShefferPair>().is_err());
        assert!("g=1; N=1".parse::<ShefferPair>().is_err());
    }

    #[test]
    fn pairing_examples() {
        for n in 0..5 {
            for k in 0..5 {
                let tk = Series::monomial(int(1), k, 6);
                let expected = if n == k {
                    Rational::from_integer(factorial(n))
                } else {
                    int(0)
                };
                assert_eq!(pairing(&tk, &Polynomial::power(n)).unwrap(), expected);
            }
        }
        let e = Series::exp_linear(&int(1), 4);
        assert_eq!(pairing(&e, &Polynomial::power(2)).unwrap(), int(1));
        let bern = special::bernoulli_gf(&int(1), 4);
        assert_eq!(pairing(&bern, &Polynomial::power(1)).unwrap(), ratio(-1, 2));
        assert!(matches!(
            pairing(&e, &Polynomial::power(4)),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn operator_examples() {
        assert_eq!(
            apply_operator(&Series::t(5), &Polynomial::power(3)).unwrap(),
            Polynomial::from_ints(&[0, 0, 3])
        );
        let p = Polynomial::from_ints(&[4, -1, 7]);
        assert_eq!(apply_operator(&Series::one(4), &p).unwrap(), p);
        // (t/(1-e^{-t}))^2 x = x + 1
        let h = rising(4)
            .div_t()
            .unwrap()
            .inv()
            .unwrap()
            .int_pow(2)
            .unwrap();
        assert_eq!(
            apply_operator(&h, &Polynomial::power(1)).unwrap(),
            Polynomial::from_ints(&[1, 1])
        );
        assert!(apply_operator(&Series::t(2), &Polynomial::power(3)).is_err());
    }

    #[test]
    fn triangle_examples() {
        let id = sheffer_triangle(&ShefferPair::identity(6), 5).unwrap();
        assert_eq!(id, CoeffTriangle::identity(5));
        let st = sheffer_triangle(&ShefferPair::associated(rising(4)).unwrap(), 3).unwrap();
        assert_eq!(st.row(3), &[int(0), int(2), int(3), int(1)]);
        let lah = sheffer_triangle(&ShefferPair::associated(lah_f(3)).unwrap(), 2).unwrap();
        assert_eq!(lah.row(2), &[int(0), int(-2), int(1)]);
        assert!(sheffer_triangle(&ShefferPair::identity(3), 3).is_err());
    }

    #[test]
    fn orthogonality_examples() {
        let id = CoeffTriangle::identity(5);
        assert!(
            verify_orthogonality(&ShefferPair::identity(6), &id, 5)
                .unwrap()
                .all_pass
        );
        let pair = ShefferPair::associated(rising(7)).unwrap();
        let st = stirling1_unsigned_triangle(6);
        assert!(verify_orthogonality(&pair, &st, 6).unwrap().all_pass);

        let mut bad = CoeffTriangle::identity(4);
        bad.set(3, 2, int(5));
        let report = verify_orthogonality(&ShefferPair::identity(5), &bad, 4).unwrap();
        assert!(!report.all_pass);
        let fails: Vec<_> = report.failures().map(|c| (c.n, c.k)).collect();
        assert_eq!(fails, vec![(3, 2)]);
    }

    #[test]
    fn transfer_examples() {
        let id = CoeffTriangle::identity(3);
        let st = transfer(&id, &Series::t(4), &rising(4), 3).unwrap();
        assert_eq!(st, stirling1_unsigned_triangle(3));
        assert_eq!(transfer(&st, &rising(4), &rising(4), 3).unwrap(), st);
        let abel = SequenceFamily::Abel(int(1)).delta(3).unwrap();
        let a2 = transfer(&CoeffTriangle::identity(2), &Series::t(3), &abel, 2).unwrap();
        assert_eq!(a2.row(2), &[int(0), int(-2), int(1)]);

        let mut bad = CoeffTriangle::identity(2);
        bad.set(2, 0, int(1));
        assert!(matches!(
            transfer(&bad, &Series::t(3), &abel, 2),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn compositional_power_examples() {
        let f = lah_f(8);
        assert_eq!(compositional_power(&f, 0).unwrap(), Series::t(8));
        assert_eq!(compositional_power(&f, 2).unwrap(), Series::t(8));
        let r = rising(5);
        let expected = (&Series::one(5) - &Series::exp_linear(&int(-1), 5))
            .compose(&r)
            .unwrap();
        assert_eq!(compositional_power(&r, 2).unwrap(), expected);
        assert!(compositional_power(&Series::one(3), 1).is_err());
    }

    #[test]
    fn pair_power_examples() {
        let n = 6;
        let pair = ShefferPair::associated(rising(n)).unwrap();
        let p3 = pair_power(&pair, 3).unwrap();
        assert_eq!(p3.g(), &Series::one(n));
        assert_eq!(p3.f(), &compositional_power(&rising(n), 3).unwrap());
        assert_eq!(pair_power(&pair, 1).unwrap(), pair);
        assert!(pair_power(&pair, 0).is_err());

        // (1+t, t/(1-t)) squared
        let g = Series::from_ints(&[1, 1, 0, 0, 0, 0]);
        let f = Series::from_ints(&[0, 1, 1, 1, 1, 1]);
        let sq = pair_power(&ShefferPair::new(g.clone(), f.clone()).unwrap(), 2).unwrap();
        let g_expected = g.mul_series(&(&Series::one(6) + &f));
        let f_expected = Series::from_ints(&[0, 1, 2, 4, 8, 16]);
        assert_eq!(sq.g(), &g_expected);
        assert_eq!(sq.f(), &f_expected);
    }

    #[test]
    fn umbral_compose_examples() {
        let q = stirling1_unsigned_triangle(5);
        let id = CoeffTriangle::identity(5);
        assert_eq!(umbral_compose(&q, &id).unwrap(), q);
        assert_eq!(umbral_compose(&id, &q).unwrap(), q);
        let lah = lah_signed_triangle(5);
        assert_eq!(umbral_compose(&lah, &lah).unwrap(), id);
        assert!(umbral_compose(&q, &CoeffTriangle::identity(4)).is_err());
    }

    #[test]
    fn umbral_power_examples() {
        let s = stirling1_unsigned_triangle(4);
        assert_eq!(umbral_power_matrix(&s, 1).unwrap(), s);
        assert_eq!(
            umbral_power_matrix(&CoeffTriangle::identity(4), 3).unwrap(),
            CoeffTriangle::identity(4)
        );
        assert_eq!(
            umbral_power_matrix(&lah_signed_triangle(6), 2).unwrap(),
            CoeffTriangle::identity(6)
        );
        assert!(umbral_power_matrix(&s, 0).is_err());

        let pair = ShefferPair::associated(rising(5)).unwrap();
        assert_eq!(
            umbral_power_gf(&pair, 1, 4).unwrap(),
            sheffer_triangle(&pair, 4).unwrap()
        );
        assert_eq!(
            umbral_power_gf(&pair, 2, 4).unwrap(),
            umbral_power_matrix(&s, 2).unwrap()
        );

        let abel = SequenceFamily::Abel(int(1));
        let abel_pair = abel.pair(5).unwrap();
        let abel_tri = abel.closed_form(4).unwrap();
        assert_eq!(
            umbral_power_gf(&abel_pair, 2, 4).unwrap(),
            umbral_power_matrix(&abel_tri, 2).unwrap()
        );
        assert_eq!(
            umbral_power_transfer(abel_pair.f(), 2, 4).unwrap(),
            umbral_power_matrix(&abel_tri, 2).unwrap()
        );
    }

    #[test]
    fn family_closed_forms_match_generating_functions() {
        for fam in [
            SequenceFamily::RisingFactorial,
            SequenceFamily::Lah,
            SequenceFamily::Abel(ratio(-1, 3)),
            SequenceFamily::MittagLeffler,
        ] {
            let gf = sheffer_triangle(&fam.pair(8).unwrap(), 7).unwrap();
            assert_eq!(gf, fam.closed_form(7).unwrap(), "{}", fam.name());
        }
        assert!(SequenceFamily::abel(int(0)).is_err());
    }
}
