//! Named number and polynomial families: Stirling numbers of the first kind,
//! Lah numbers, higher-order Bernoulli and Euler numbers, factorial
//! polynomials, the Abel and Mittag-Leffler coefficient triangles,
//! multinomial coefficients and integer compositions.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{self, binomial, factorial, from_big, Rational};
use crate::series::Series;
use crate::triangle::CoeffTriangle;

// ---------------------------------------------------------------------------
// Stirling numbers of the first kind

/// Dense cache of signed `S1(n, k)`, grown on demand.
fn stirling_cache() -> &'static Mutex<Vec<Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<Vec<Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![vec![BigInt::one()]]))
}

fn with_stirling_rows<T>(n: usize, f: impl FnOnce(&[Vec<BigInt>]) -> T) -> T {
    let mut rows = stirling_cache().lock().unwrap_or_else(|e| e.into_inner());
    // S1(n+1, k) = S1(n, k-1) - n S1(n, k)
    while rows.len() <= n {
        let prev = rows.last().expect("row 0 is seeded");
        let m = prev.len() - 1;
        let next: Vec<BigInt> = (0..=m + 1)
            .map(|k| {
                let left = if k > 0 {
                    prev[k - 1].clone()
                } else {
                    BigInt::zero()
                };
                let right = prev
                    .get(k)
                    .map_or_else(BigInt::zero, |v| v * BigInt::from(m));
                left - right
            })
            .collect();
        rows.push(next);
    }
    f(&rows[..=n])
}

/// Signed Stirling number of the first kind; zero outside `0 <= k <= n`.
pub fn stirling1_signed(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    with_stirling_rows(n, |rows| from_big(rows[n][k].clone()))
}

/// `|S1(n, k)|`, the coefficients of the rising factorial.
pub fn stirling1_unsigned(n: usize, k: usize) -> Rational {
    let v = stirling1_signed(n, k);
    if v < Rational::zero() {
        -v
    } else {
        v
    }
}

pub fn stirling1_signed_triangle(n_max: usize) -> CoeffTriangle {
    with_stirling_rows(n_max, |rows| {
        CoeffTriangle::from_fn(n_max, |n, k| from_big(rows[n][k].clone()))
    })
}

/// Coefficients of `x^(n) = x(x+1)...(x+n-1)`.
pub fn stirling1_unsigned_triangle(n_max: usize) -> CoeffTriangle {
    with_stirling_rows(n_max, |rows| {
        CoeffTriangle::from_fn(n_max, |n, k| {
            let v = &rows[n][k];
            from_big(if v.sign() == num_bigint::Sign::Minus {
                -v
            } else {
                v.clone()
            })
        })
    })
}

// ---------------------------------------------------------------------------
// Lah numbers

/// Unsigned Lah number `C(n-1, k-1) n!/k!`, with `L(0,0) = 1` and
/// `L(n,0) = 0` for `n >= 1`.
pub fn lah(n: usize, k: usize) -> Rational {
    match (n, k) {
        (0, 0) => Rational::one(),
        (_, 0) => Rational::zero(),
        _ if k > n => Rational::zero(),
        _ => Rational::new(binomial(n - 1, k - 1) * factorial(n), factorial(k)),
    }
}

pub fn lah_triangle(n_max: usize) -> CoeffTriangle {
    CoeffTriangle::from_fn(n_max, lah)
}

/// `s_{n,k} = (-1)^k L(n,k)`, the coefficients of `Σ_k L(n,k) (-x)^k`.
pub fn lah_signed_triangle(n_max: usize) -> CoeffTriangle {
    CoeffTriangle::from_fn(n_max, |n, k| rational::sign(k) * lah(n, k))
}

// ---------------------------------------------------------------------------
// Higher-order Bernoulli and Euler numbers

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum GfFamily {
    Bernoulli,
    Euler,
}

/// `(e^t - 1)/t`, coefficients `1/(k+1)!`.
fn expm1_over_t(trunc: usize) -> Series {
    let e = Series::exp_linear(&Rational::one(), trunc + 1);
    Series::new(e.coeffs()[1..].to_vec())
}

/// `(e^t + 1)/2`.
fn half_exp_plus_one(trunc: usize) -> Series {
    let mut s = Series::exp_linear(&Rational::one(), trunc).scale(&rational::ratio(1, 2));
    if trunc > 0 {
        let mut coeffs = s.into_coeffs();
        coeffs[0] = Rational::one();
        s = Series::new(coeffs);
    }
    s
}

/// `(t/(e^t - 1))^alpha` to `trunc` coefficients.
pub fn bernoulli_gf(alpha: &Rational, trunc: usize) -> Series {
    expm1_over_t(trunc)
        .rat_pow(&-alpha)
        .expect("(e^t-1)/t has constant term 1")
}

/// `(2/(e^t + 1))^alpha` to `trunc` coefficients.
pub fn euler_gf(alpha: &Rational, trunc: usize) -> Series {
    half_exp_plus_one(trunc)
        .rat_pow(&-alpha)
        .expect("(e^t+1)/2 has constant term 1")
}

type GfCache = HashMap<(GfFamily, Rational), Series>;

fn gf_cache() -> &'static Mutex<GfCache> {
    static CACHE: OnceLock<Mutex<GfCache>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached_egf(family: GfFamily, n: usize, alpha: &Rational) -> Rational {
    let key = (family, alpha.clone());
    let cached_trunc = {
        let cache = gf_cache().lock().unwrap_or_else(|e| e.into_inner());
        match cache.get(&key) {
            Some(s) if s.trunc() > n => {
                return s
                    .egf_coefficient(n)
                    .expect("n is below the cached truncation")
            }
            Some(s) => s.trunc(),
            None => 0,
        }
    };
    // Computed outside the lock; truncations are prefix-consistent so any
    // racing writer stores an equally valid series.
    let trunc = (n + 1).max(2 * cached_trunc).max(8);
    let series = match family {
        GfFamily::Bernoulli => bernoulli_gf(alpha, trunc),
        GfFamily::Euler => euler_gf(alpha, trunc),
    };
    let value = series.egf_coefficient(n).expect("trunc exceeds n");
    let mut cache = gf_cache().lock().unwrap_or_else(|e| e.into_inner());
    let keep = cache
        .get(&key)
        .is_none_or(|old| old.trunc() < series.trunc());
    if keep {
        cache.insert(key, series);
    }
    value
}

/// Bernoulli number of order `alpha`, `B_n^(alpha)`; any rational order.
pub fn bernoulli_high(n: usize, alpha: &Rational) -> Rational {
    cached_egf(GfFamily::Bernoulli, n, alpha)
}

/// Euler number of order `alpha`, `E_n^(alpha)`; any rational order.
pub fn euler_high(n: usize, alpha: &Rational) -> Rational {
    cached_egf(GfFamily::Euler, n, alpha)
}

// ---------------------------------------------------------------------------
// Factorial polynomials

/// `(x)_n = x(x-1)...(x-n+1)`.
pub fn falling_factorial(n: usize) -> Polynomial {
    (0..n).fold(Polynomial::one(), |acc, i| {
        &acc * &Polynomial::new(vec![rational::int(-(i as i64)), Rational::one()])
    })
}

/// `x^(n) = x(x+1)...(x+n-1)`.
pub fn rising_factorial(n: usize) -> Polynomial {
    (0..n).fold(Polynomial::one(), |acc, i| {
        &acc * &Polynomial::new(vec![rational::int(i as i64), Rational::one()])
    })
}

// ---------------------------------------------------------------------------
// Abel and Mittag-Leffler triangles

/// Coefficients of `A_n(x; a) = x(x - an)^{n-1}`:
/// `s_{n,k} = C(n-1, k-1) (-an)^{n-k}`, row 0 = `[1]`.
pub fn abel_triangle(n_max: usize, a: &Rational) -> Result<CoeffTriangle> {
    if a.is_zero() {
        return Err(Error::param("Abel polynomials need a != 0"));
    }
    Ok(CoeffTriangle::from_fn(n_max, |n, k| match (n, k) {
        (0, 0) => Rational::one(),
        (_, 0) => Rational::zero(),
        _ => {
            let base = -a * rational::int(n as i64);
            from_big(binomial(n - 1, k - 1)) * rational::pow(&base, n - k)
        }
    }))
}

/// Coefficients of the Mittag-Leffler polynomials
/// `M_n(x) = Σ_r C(n,r) (n-1)!/(r-1)! 2^r (x)_r`, expanded through `S1(r,k)`.
///
/// `1/(-1)! = 0` removes the `r = 0` term for `n >= 1`; `M_0 = 1`.
pub fn mittag_leffler_triangle(n_max: usize) -> CoeffTriangle {
    let s1 = stirling1_signed_triangle(n_max);
    CoeffTriangle::from_fn(n_max, |n, k| {
        if n == 0 {
            return Rational::one();
        }
        let mut acc = Rational::zero();
        for r in k.max(1)..=n {
            let weight = binomial(n, r) * factorial(n - 1) * (BigInt::one() << r);
            acc += Rational::new(weight, factorial(r - 1)) * s1.get(r, k);
        }
        acc
    })
}

// ---------------------------------------------------------------------------
// Multinomials and compositions

/// `top! / Π parts_i!`; the parts must be nonnegative and sum to `top`.
pub fn multinomial(top: i64, parts: &[i64]) -> Result<Rational> {
    if top < 0 || parts.iter().any(|&p| p < 0) {
        return Err(Error::param("multinomial parts must be nonnegative"));
    }
    if parts.iter().sum::<i64>() != top {
        return Err(Error::param(format!(
            "multinomial parts {parts:?} do not sum to {top}"
        )));
    }
    let den = parts
        .iter()
        .fold(BigInt::one(), |acc, &p| acc * factorial(p as usize));
    Ok(Rational::new(factorial(top as usize), den))
}

/// Every tuple of `parts` nonnegative integers summing to `total`, in
/// lexicographic order.
pub fn compositions(total: usize, parts: usize) -> Result<Compositions> {
    if parts == 0 && total > 0 {
        return Err(Error::param(format!(
            "{total} cannot be split into zero parts"
        )));
    }
    let mut first = vec![0; parts];
    if let Some(last) = first.last_mut() {
        *last = total;
    }
    Ok(Compositions { next: Some(first) })
}

#[derive(Debug, Clone)]
pub struct Compositions {
    next: Option<Vec<usize>>,
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let p = current.len();
        // Successor: bump the rightmost non-final slot whose tail still has
        // mass, then pour the remaining tail into the final slot.
        let mut tail = 0;
        for i in (0..p.saturating_sub(1)).rev() {
            tail += current[i + 1];
            if tail > 0 {
                let mut succ = current.clone();
                succ[i] += 1;
                for slot in &mut succ[i + 1..] {
                    *slot = 0;
                }
                succ[p - 1] = tail - 1;
                self.next = Some(succ);
                break;
            }
        }
        Some(current)
    }
}
