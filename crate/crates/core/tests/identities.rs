use umbral::identity::{
    self, nested, remark_lhs, t1_lhs, t1_rhs, t1_terms, t2_lhs, t2_rhs, t3_lhs, t3_rhs, IdentityId,
    Interpretation, VerifyParams,
};
use umbral::rational::{int, pow, ratio};
use umbral::special::{abel_triangle, lah, mittag_leffler_triangle, stirling1_unsigned};
use umbral::Rational;

#[test]
fn matrix_and_nested_left_sides_agree() {
    let a_values = [int(1), int(-1), ratio(1, 2)];
    for n in 1..=6 {
        for k in 1..=n {
            for m in 1..=4 {
                assert_eq!(t1_lhs(n, k, m).unwrap(), nested::t1_lhs(n, k, m).unwrap());
                assert_eq!(t2_lhs(n, k, m).unwrap(), nested::t2_lhs(n, k, m).unwrap());
                for a in &a_values {
                    assert_eq!(
                        t3_lhs(n, k, m, a).unwrap(),
                        nested::t3_lhs(n, k, m, a).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn remark_left_side_is_the_mittag_leffler_power() {
    for n in 1..=8 {
        for k in 1..=n {
            for m in 1..=2 {
                assert_eq!(
                    remark_lhs(n, k, m).unwrap(),
                    nested::remark_lhs(n, k, m).unwrap()
                );
            }
        }
    }
    for n in 1..=5 {
        for k in 1..=n {
            assert_eq!(
                remark_lhs(n, k, 3).unwrap(),
                nested::remark_lhs(n, k, 3).unwrap()
            );
        }
    }
}

#[test]
fn right_sides_at_m_one_are_the_closed_forms() {
    for n in 1..=10 {
        for k in 1..=n {
            assert_eq!(t1_rhs(n, k, 1).unwrap(), stirling1_unsigned(n, k));
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(t2_rhs(n, k, 1).unwrap(), sign * lah(n, k));
            for a in [int(1), ratio(-2, 3)] {
                assert_eq!(
                    t3_rhs(n, k, 1, &a).unwrap(),
                    abel_triangle(n, &a).unwrap().get(n, k)
                );
            }
            assert_eq!(
                identity::remark_rhs(n, k, 1, Interpretation::Indexed).unwrap(),
                mittag_leffler_triangle(n).get(n, k)
            );
        }
    }
}

#[test]
fn right_sides_do_not_depend_on_summation_order() {
    for (n, k, m) in [(7, 2, 3), (9, 4, 2), (6, 1, 4)] {
        let terms = t1_terms(n, k, m).unwrap();
        let forward = terms.iter().fold(int(0), |acc, t| acc + &t.value);
        let backward = terms.iter().rev().fold(int(0), |acc, t| acc + &t.value);
        // interleave even and odd positions
        let (even, odd): (Vec<_>, Vec<_>) = terms.iter().enumerate().partition(|(i, _)| i % 2 == 0);
        let shuffled = even
            .iter()
            .chain(odd.iter())
            .fold(int(0), |acc, (_, t)| acc + &t.value);
        assert_eq!(forward, backward);
        assert_eq!(forward, shuffled);
        assert_eq!(forward, t1_rhs(n, k, m).unwrap());
    }
}

/// Both sides are `a^{n-k}` times a constant, so dividing by `a^{n-k}` must
/// give the same number at every `a`.
#[test]
fn abel_sides_are_homogeneous_in_a() {
    let a_values = [int(1), int(-2), ratio(1, 3)];
    for n in 1..=7 {
        for k in 1..=n {
            for m in 1..=3 {
                let scaled = |a: &Rational, v: Rational| v / pow(a, n - k);
                let lhs: Vec<_> = a_values
                    .iter()
                    .map(|a| scaled(a, t3_lhs(n, k, m, a).unwrap()))
                    .collect();
                let rhs: Vec<_> = a_values
                    .iter()
                    .map(|a| scaled(a, t3_rhs(n, k, m, a).unwrap()))
                    .collect();
                assert!(
                    lhs.windows(2).all(|w| w[0] == w[1]),
                    "lhs n={n} k={k} m={m}"
                );
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn verify_examples() {
    let t1 = identity::verify(IdentityId::T1, 6, 3, &VerifyParams::default()).unwrap();
    assert!(t1[0].all_equal);
    let params = VerifyParams {
        a: Some(ratio(1, 2)),
        ..VerifyParams::default()
    };
    let t3 = identity::verify(IdentityId::T3, 6, 3, &params).unwrap();
    assert!(t3[0].all_equal);
    assert_eq!(t3[0].params.a.as_deref(), Some("1/2"));
    let lah = VerifyParams {
        family: Some(umbral::SequenceFamily::Lah),
        ..VerifyParams::default()
    };
    let x = identity::verify(IdentityId::XCheck, 12, 4, &lah).unwrap();
    assert_eq!(x.len(), 1);
    assert!(x[0].all_equal);
    assert_eq!(x[0].label(), "XCHECK/lah");
}

#[test]
fn remark_runs_both_readings_with_diagnostics() {
    let reports = identity::verify(IdentityId::Remark, 5, 2, &VerifyParams::default()).unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0].params.interpretation.as_deref(), Some("literal"));
    assert_eq!(reports[1].params.interpretation.as_deref(), Some("indexed"));
    for r in &reports {
        for c in r.failures() {
            assert!(!c.diagnostics.is_empty());
        }
        // diagonal cases have only the all-zero composition
        for c in r.cases.iter().filter(|c| c.n == c.k && c.m == 1) {
            assert_eq!(c.lhs, pow(&int(2), c.n));
        }
    }
    let again = identity::verify(IdentityId::Remark, 5, 2, &VerifyParams::default()).unwrap();
    assert_eq!(reports, again);
}
