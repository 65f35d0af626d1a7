//! Both sides of the umbral-power identities for the rising-factorial (T1),
//! Lah (T2), Abel (T3) and Mittag-Leffler (REMARK) sequences, plus a
//! theorem-free cross-check of the matrix and generating-function routes
//! (XCHECK).
//!
//! Left-hand sides are entries of `m`-th matrix powers of the family's
//! coefficient triangle. Right-hand sides are sums over integer compositions
//! `k_1 + ... + k_m = n - k` (`2m` parts for REMARK) built only from
//! multinomials and higher-order Bernoulli/Euler numbers, so the two sides
//! share no code beyond the scalar field.

pub mod nested;
mod report;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rational::{self, factorial, Rational};
use crate::sheffer::{self, SequenceFamily};
use crate::special::{self, bernoulli_high, compositions, euler_high, multinomial};
use crate::triangle::CoeffTriangle;

pub use report::{Case, Diagnostic, IdentityReport, ReportParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    T1,
    T2,
    T3,
    Remark,
    XCheck,
}

impl IdentityId {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::T1 => "T1",
            IdentityId::T2 => "T2",
            IdentityId::T3 => "T3",
            IdentityId::Remark => "REMARK",
            IdentityId::XCheck => "XCHECK",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "t1" => Ok(IdentityId::T1),
            "t2" => Ok(IdentityId::T2),
            "t3" => Ok(IdentityId::T3),
            "remark" => Ok(IdentityId::Remark),
            "xcheck" => Ok(IdentityId::XCheck),
            _ => Err(Error::param(format!("unknown identity {s:?}"))),
        }
    }
}

/// How to read the Euler/Bernoulli subscripts of the Mittag-Leffler
/// right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Interpretation {
    /// Subscripts `2i+1` and `2i+2` taken as the printed integers.
    Literal,
    /// Subscripts `k_{2i+1}` and `k_{2i+2}`, the pattern of T1-T3.
    Indexed,
}

impl Interpretation {
    pub const ALL: [Interpretation; 2] = [Interpretation::Literal, Interpretation::Indexed];

    pub fn as_str(self) -> &'static str {
        match self {
            Interpretation::Literal => "literal",
            Interpretation::Indexed => "indexed",
        }
    }
}

impl FromStr for Interpretation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "literal" | "i" => Ok(Interpretation::Literal),
            "indexed" | "ii" => Ok(Interpretation::Indexed),
            _ => Err(Error::param(format!("unknown interpretation flag {s:?}"))),
        }
    }
}

/// One summand of a right-hand side, keyed by its composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub composition: Vec<usize>,
    pub value: Rational,
}

fn check_nkm(n: usize, k: usize, m: usize) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::param(format!("need n, m >= 1 (got n={n}, m={m})")));
    }
    if k == 0 || k > n {
        return Err(Error::param(format!("need 1 <= k <= n (got k={k}, n={n})")));
    }
    Ok(())
}

fn check_a(a: &Rational) -> Result<()> {
    if a.is_zero() {
        return Err(Error::param("Abel parameter a must be nonzero"));
    }
    Ok(())
}

/// `multinomial(n-1; k_1, ..., k_p, k-1)`.
fn theorem_multinomial(n: usize, k: usize, comp: &[usize]) -> Rational {
    let mut parts: Vec<i64> = comp.iter().map(|&c| c as i64).collect();
    parts.push(k as i64 - 1);
    multinomial(n as i64 - 1, &parts).expect("composition of n-k plus k-1 sums to n-1")
}

/// `n - k_p - k_{p-1} - ... - k_{j+1}` for the 1-based index `j`.
fn tail_order(n: usize, comp: &[usize], j: usize) -> usize {
    n - comp[j..].iter().sum::<usize>()
}

fn terms(n: usize, k: usize, parts: usize, term: impl Fn(&[usize]) -> Rational) -> Vec<Term> {
    compositions(n - k, parts)
        .expect("parts >= 1")
        .map(|composition| {
            let value = term(&composition);
            Term { composition, value }
        })
        .collect()
}

fn sum_terms(terms: &[Term]) -> Rational {
    terms.iter().fold(Rational::zero(), |acc, t| acc + &t.value)
}

fn power_entry(triangle: &CoeffTriangle, n: usize, k: usize, m: usize) -> Result<Rational> {
    Ok(sheffer::umbral_power_matrix(triangle, m)?.get(n, k))
}

// ---------------------------------------------------------------------------
// T1: unsigned Stirling numbers of the first kind / Bernoulli numbers

/// `Σ |S1(n,l_1) S1(l_1,l_2) ... S1(l_{m-1},k)|`, the `(n,k)` entry of the
/// `m`-th power of the unsigned Stirling triangle.
pub fn t1_lhs(n: usize, k: usize, m: usize) -> Result<Rational> {
    check_nkm(n, k, m)?;
    power_entry(&special::stirling1_unsigned_triangle(n), n, k, m)
}

pub fn t1_terms(n: usize, k: usize, m: usize) -> Result<Vec<Term>> {
    check_nkm(n, k, m)?;
    Ok(terms(n, k, m, |c| {
        let mut v = rational::sign(c.iter().sum()) * theorem_multinomial(n, k, c);
        for j in (0..m).rev() {
            let order = rational::int(tail_order(n, c, j + 1) as i64);
            v *= bernoulli_high(c[j], &order);
        }
        v
    }))
}

/// `Σ_{k_1+...+k_m=n-k} (-1)^{Σk_i} multinomial(n-1; k_1..k_m, k-1)
/// B_{k_m}^{(n)} B_{k_{m-1}}^{(n-k_m)} ... B_{k_1}^{(n-k_m-...-k_2)}`.
pub fn t1_rhs(n: usize, k: usize, m: usize) -> Result<Rational> {
    Ok(sum_terms(&t1_terms(n, k, m)?))
}

// ---------------------------------------------------------------------------
// T2: Lah numbers

/// `Σ (-1)^{l_1+...+l_{m-1}+k} L(n,l_1) ... L(l_{m-1},k)`, the `(n,k)` entry
/// of the `m`-th power of the signed Lah triangle `(-1)^k L(n,k)`.
pub fn t2_lhs(n: usize, k: usize, m: usize) -> Result<Rational> {
    check_nkm(n, k, m)?;
    power_entry(&special::lah_signed_triangle(n), n, k, m)
}

pub fn t2_terms(n: usize, k: usize, m: usize) -> Result<Vec<Term>> {
    check_nkm(n, k, m)?;
    let n_over_k = Rational::new(factorial(n), factorial(k));
    Ok(terms(n, k, m, |c| {
        // (n-k_m) + (n-k_m-k_{m-1}) + ... + (n-k_m-...-k_2) + k
        let exponent: usize = (1..m).map(|j| tail_order(n, c, j)).sum::<usize>() + k;
        rational::sign(exponent) * &n_over_k * theorem_multinomial(n, k, c)
    }))
}

pub fn t2_rhs(n: usize, k: usize, m: usize) -> Result<Rational> {
    Ok(sum_terms(&t2_terms(n, k, m)?))
}

// ---------------------------------------------------------------------------
// T3: Abel polynomials

/// The `(n,k)` entry of the `m`-th power of the Abel triangle
/// `C(n-1,k-1) (-an)^{n-k}`.
pub fn t3_lhs(n: usize, k: usize, m: usize, a: &Rational) -> Result<Rational> {
    check_nkm(n, k, m)?;
    check_a(a)?;
    power_entry(&special::abel_triangle(n, a)?, n, k, m)
}

pub fn t3_terms(n: usize, k: usize, m: usize, a: &Rational) -> Result<Vec<Term>> {
    check_nkm(n, k, m)?;
    check_a(a)?;
    Ok(terms(n, k, m, |c| {
        let mut v = theorem_multinomial(n, k, c);
        for i in 0..m {
            let base = -a * rational::int(tail_order(n, c, i + 1) as i64);
            v *= rational::pow(&base, c[i]);
        }
        v
    }))
}

/// `Σ multinomial(n-1; k_1..k_m, k-1) Π_{i=1}^m (-a(n-k_m-...-k_{i+1}))^{k_i}`.
pub fn t3_rhs(n: usize, k: usize, m: usize, a: &Rational) -> Result<Rational> {
    Ok(sum_terms(&t3_terms(n, k, m, a)?))
}

// ---------------------------------------------------------------------------
// REMARK: Mittag-Leffler polynomials

/// The `(n,k)` entry of the `m`-th power of the Mittag-Leffler triangle.
pub fn remark_lhs(n: usize, k: usize, m: usize) -> Result<Rational> {
    check_nkm(n, k, m)?;
    power_entry(&special::mittag_leffler_triangle(n), n, k, m)
}

pub fn remark_terms(n: usize, k: usize, m: usize, interp: Interpretation) -> Result<Vec<Term>> {
    check_nkm(n, k, m)?;
    let two = rational::int(2);
    Ok(terms(n, k, 2 * m, |c| {
        let mut v = theorem_multinomial(n, k, c);
        for i in 0..m {
            // P = k_1 + ... + k_{2i}
            let prefix: usize = c[..2 * i].iter().sum();
            let (e_sub, b_sub) = match interp {
                Interpretation::Literal => (2 * i + 1, 2 * i + 2),
                Interpretation::Indexed => (c[2 * i], c[2 * i + 1]),
            };
            let rest = (n - prefix) as i64;
            v *= euler_high(e_sub, &rational::int(-rest));
            v *= bernoulli_high(b_sub, &rational::int(rest));
            v *= rational::pow(&two, n - prefix);
        }
        v
    }))
}

pub fn remark_rhs(n: usize, k: usize, m: usize, interp: Interpretation) -> Result<Rational> {
    Ok(sum_terms(&remark_terms(n, k, m, interp)?))
}

// ---------------------------------------------------------------------------
// Grid driver

/// Optional parameters of [`verify`].
#[derive(Debug, Clone, Default)]
pub struct VerifyParams {
    /// Abel parameter for T3 (default 1).
    pub a: Option<Rational>,
    /// Family for XCHECK; `None` runs all four classical families.
    pub family: Option<SequenceFamily>,
    /// Reading of the REMARK subscripts; `None` runs both.
    pub interpretation: Option<Interpretation>,
}

fn grid(n_max: usize, m_max: usize, k_from: usize) -> Vec<(usize, usize, usize)> {
    let mut points = Vec::new();
    for n in k_from.max(1).min(n_max)..=n_max {
        for m in 1..=m_max {
            for k in k_from..=n {
                points.push((n, m, k));
            }
        }
    }
    if k_from == 0 {
        // Row 0 of every triangle, for whole-triangle comparisons.
        let mut row0: Vec<_> = (1..=m_max).map(|m| (0, m, 0)).collect();
        row0.append(&mut points);
        points = row0;
    }
    points
}

/// Matrix powers `s^1 .. s^{m_max}` of one triangle.
fn powers(tri: &CoeffTriangle, m_max: usize) -> Result<Vec<CoeffTriangle>> {
    let mut out: Vec<CoeffTriangle> = Vec::with_capacity(m_max);
    for _ in 0..m_max {
        let next = match out.last() {
            None => tri.clone(),
            Some(prev) => prev.matmul(tri)?,
        };
        out.push(next);
    }
    Ok(out)
}

fn theorem_report(
    id: IdentityId,
    params: ReportParams,
    n_max: usize,
    m_max: usize,
    lhs_triangle: CoeffTriangle,
    rhs_terms: impl Fn(usize, usize, usize) -> Result<Vec<Term>> + Sync,
) -> Result<IdentityReport> {
    let lhs = powers(&lhs_triangle, m_max)?;
    let cases = grid(n_max, m_max, 1)
        .into_par_iter()
        .map(|(n, m, k)| {
            let terms = rhs_terms(n, k, m)?;
            let rhs = sum_terms(&terms);
            Ok(Case::new(n, m, k, lhs[m - 1].get(n, k), rhs, || {
                terms
                    .into_iter()
                    .map(|t| Diagnostic::composition(&t.composition, t.value))
                    .collect()
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IdentityReport::new(id, params, cases))
}

fn xcheck_report(family: &SequenceFamily, n_max: usize, m_max: usize) -> Result<IdentityReport> {
    let closed = family.closed_form(n_max)?;
    let matrix = powers(&closed, m_max)?;
    let pair = family.pair(n_max + 1)?;
    let per_m = (1..=m_max)
        .into_par_iter()
        .map(|m| {
            let gf = sheffer::umbral_power_gf(&pair, m, n_max)?;
            let chained = if pair.is_associated() {
                Some(sheffer::umbral_power_transfer(pair.f(), m, n_max)?)
            } else {
                None
            };
            Ok((gf, chained))
        })
        .collect::<Result<Vec<_>>>()?;
    let cases = grid(n_max, m_max, 0)
        .into_iter()
        .map(|(n, m, k)| {
            let (gf, chained) = &per_m[m - 1];
            let lhs = matrix[m - 1].get(n, k);
            let rhs = gf.get(n, k);
            let third = chained.as_ref().map(|t| t.get(n, k));
            let third_ok = third.as_ref().is_none_or(|v| *v == lhs);
            let mut case = Case::new(n, m, k, lhs, rhs, Vec::new);
            if !third_ok {
                case.equal = false;
            }
            if !case.equal {
                if let Some(v) = third {
                    case.diagnostics.push(Diagnostic::labelled("transfer", v));
                }
            }
            case
        })
        .collect();
    let params = ReportParams {
        n_max,
        m_max,
        family: Some(family.name()),
        ..ReportParams::default()
    };
    Ok(IdentityReport::new(IdentityId::XCheck, params, cases))
}

/// Evaluates an identity on every `1 <= n <= n_max`, `1 <= m <= m_max`,
/// `1 <= k <= n` (XCHECK compares whole triangles, `0 <= k <= n <= n_max`).
///
/// REMARK yields one report per interpretation and XCHECK one per family;
/// the other identities yield exactly one report. Case order is always
/// `(n, m, k)` ascending.
pub fn verify(
    id: IdentityId,
    n_max: usize,
    m_max: usize,
    params: &VerifyParams,
) -> Result<Vec<IdentityReport>> {
    if n_max == 0 || m_max == 0 {
        return Err(Error::param("verification ranges must be >= 1"));
    }
    let base = ReportParams {
        n_max,
        m_max,
        ..ReportParams::default()
    };
    match id {
        IdentityId::T1 => Ok(vec![theorem_report(
            id,
            base,
            n_max,
            m_max,
            special::stirling1_unsigned_triangle(n_max),
            t1_terms,
        )?]),
        IdentityId::T2 => Ok(vec![theorem_report(
            id,
            base,
            n_max,
            m_max,
            special::lah_signed_triangle(n_max),
            t2_terms,
        )?]),
        IdentityId::T3 => {
            let a = params.a.clone().unwrap_or_else(Rational::one);
            check_a(&a)?;
            let tri = special::abel_triangle(n_max, &a)?;
            let report_params = ReportParams {
                a: Some(a.to_string()),
                ..base
            };
            Ok(vec![theorem_report(
                id,
                report_params,
                n_max,
                m_max,
                tri,
                |n, k, m| t3_terms(n, k, m, &a),
            )?])
        }
        IdentityId::Remark => {
            let interps = match params.interpretation {
                Some(i) => vec![i],
                None => Interpretation::ALL.to_vec(),
            };
            interps
                .into_iter()
                .map(|interp| {
                    let report_params = ReportParams {
                        interpretation: Some(interp.as_str().to_string()),
                        ..base.clone()
                    };
                    theorem_report(
                        id,
                        report_params,
                        n_max,
                        m_max,
                        special::mittag_leffler_triangle(n_max),
                        |n, k, m| remark_terms(n, k, m, interp),
                    )
                })
                .collect()
        }
        IdentityId::XCheck => {
            let families = match &params.family {
                Some(f) => vec![f.clone()],
                None => vec![
                    SequenceFamily::RisingFactorial,
                    SequenceFamily::Lah,
                    SequenceFamily::Abel(params.a.clone().unwrap_or_else(Rational::one)),
                    SequenceFamily::MittagLeffler,
                ],
            };
            families
                .iter()
                .map(|f| xcheck_report(f, n_max, m_max))
                .collect()
        }
    }
}
