//! Left-hand sides evaluated as the literal `(m-1)`-fold sums over
//! `l_1, ..., l_{m-1} in 0..=n`, with no matrix algebra.
//!
//! Exponential in `m`; meant as a reference for small `n` against the
//! matrix-power evaluation in the parent module.

use num_traits::Zero;

use super::{check_a, check_nkm};
use crate::error::Result;
use crate::rational::{self, binomial, factorial, from_big, Rational};
use crate::special::{lah, stirling1_signed, stirling1_unsigned};

/// Calls `visit` with every chain `[n, l_1, ..., l_{m-1}, k]`.
fn for_each_chain(n: usize, k: usize, m: usize, mut visit: impl FnMut(&[usize])) {
    let mut chain = vec![0; m + 1];
    chain[0] = n;
    chain[m] = k;
    loop {
        visit(&chain);
        // odometer over the interior indices
        let mut i = 1;
        while i < m {
            if chain[i] < n {
                chain[i] += 1;
                break;
            }
            chain[i] = 0;
            i += 1;
        }
        if i >= m {
            return;
        }
    }
}

fn chain_sum(n: usize, k: usize, m: usize, link: impl Fn(usize, usize) -> Rational) -> Rational {
    let mut total = Rational::zero();
    for_each_chain(n, k, m, |chain| {
        let mut term = rational::int(1);
        for w in chain.windows(2) {
            term *= link(w[0], w[1]);
            if term.is_zero() {
                return;
            }
        }
        total += term;
    });
    total
}

/// `Σ |S1(n,l_1) S1(l_1,l_2) ... S1(l_{m-1},k)|`.
pub fn t1_lhs(n: usize, k: usize, m: usize) -> Result<Rational> {
    check_nkm(n, k, m)?;
    Ok(chain_sum(n, k, m, stirling1_unsigned))
}

/// `Σ (-1)^{l_1+...+l_{m-1}+k} L(n,l_1) L(l_1,l_2) ... L(l_{m-1},k)`.
pub fn t2_lhs(n: usize, k: usize, m: usize) -> Result<Rational> {
    check_nkm(n, k, m)?;
    let mut total = Rational::zero();
    for_each_chain(n, k, m, |chain| {
        let exponent: usize = chain[1..].iter().sum();
        let mut term = rational::sign(exponent);
        for w in chain.windows(2) {
            term *= lah(w[0], w[1]);
        }
        total += term;
    });
    Ok(total)
}

/// `C(p-1, q-1)` where a `-1` in the top row only ever meets chains that are
/// killed by a later link, so it is taken as zero.
fn shifted_binomial(p: usize, q: usize) -> Rational {
    if p == 0 || q == 0 {
        return if p == q {
            rational::int(1)
        } else {
            Rational::zero()
        };
    }
    from_big(binomial(p - 1, q - 1))
}

/// `Σ C(n-1,l_1-1) ... C(l_{m-1}-1,k-1) (-an)^{n-l_1} (-a l_1)^{l_1-l_2} ... (-a l_{m-1})^{l_{m-1}-k}`.
pub fn t3_lhs(n: usize, k: usize, m: usize, a: &Rational) -> Result<Rational> {
    check_nkm(n, k, m)?;
    check_a(a)?;
    Ok(chain_sum(n, k, m, |p, q| {
        if q > p {
            return Rational::zero();
        }
        let base = -a * rational::int(p as i64);
        shifted_binomial(p, q) * rational::pow(&base, p - q)
    }))
}

/// The Mittag-Leffler nested sum
/// `Σ_l Σ_{r_j = l_j}^{l_{j-1}} Π_j C(l_{j-1}, r_j) (l_{j-1}-1)!/(r_j-1)! 2^{r_j} S1(r_j, l_j)`
/// with `l_0 = n`, `l_m = k` and `1/(-1)! = 0`.
pub fn remark_lhs(n: usize, k: usize, m: usize) -> Result<Rational> {
    check_nkm(n, k, m)?;
    Ok(chain_sum(n, k, m, |p, q| {
        let mut acc = Rational::zero();
        for r in q.max(1)..=p {
            let weight = binomial(p, r) * factorial(p - 1) * (num_bigint::BigInt::from(1) << r);
            acc += Rational::new(weight, factorial(r - 1)) * stirling1_signed(r, q);
        }
        acc
    }))
}
