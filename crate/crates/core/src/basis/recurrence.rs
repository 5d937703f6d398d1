//! The three-term recurrences linking `X_n^{m−1}, X_n^m, X_n^{m+1}` and the
//! Y family within one degree.

use serde::Serialize;

use crate::basis::{basis_or_zero, Family};
use crate::poly::APoly;
use crate::quaternion::Quaternion;
use crate::scalar::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Recurrence {
    /// `X_n^0 = (X_n^1 e1 + Y_n^1 e2) / (n + 2)`
    Start,
    /// `X_n^m` from `X/Y_n^{m−1}` and `X/Y_n^{m+1}`
    X,
    /// `Y_n^m` from `X/Y_n^{m−1}` and `X/Y_n^{m+1}`
    Y,
}

#[derive(Clone, Debug, Serialize)]
pub struct RecurrenceOutcome {
    pub recurrence: Recurrence,
    pub n: u32,
    pub m: u32,
    pub passed: bool,
}

/// Checks every recurrence of degree `n` as an exact polynomial identity,
/// using the memoized basis (with `Y_n^0 = 0` and zero for `m ≥ n + 2`).
pub fn recurrence_check(n: u32) -> Vec<RecurrenceOutcome> {
    recurrence_check_with(n, &|family, m| (*basis_or_zero(n, family, m)).clone())
}

/// As [`recurrence_check`], with the degree-`n` polynomials supplied by
/// `lookup(family, m)`; used to confirm that a corrupted table is caught.
pub fn recurrence_check_with(n: u32, lookup: &dyn Fn(Family, u32) -> APoly) -> Vec<RecurrenceOutcome> {
    let e1 = Quaternion::<Rational>::e1();
    let e2 = Quaternion::<Rational>::e2();
    let x = |m: u32| lookup(Family::X, m);
    let y = |m: u32| if m == 0 { APoly::zero() } else { lookup(Family::Y, m) };
    let q = |num: i64, den: i64| Rational::new(num.into(), den.into());
    let nn = n as i64;

    let mut out = Vec::new();
    let start = (&x(1).right_mul(&e1) + &y(1).right_mul(&e2)).scale(&q(1, nn + 2));
    out.push(RecurrenceOutcome {
        recurrence: Recurrence::Start,
        n,
        m: 0,
        passed: start == x(0),
    });
    for m in 1..=n + 1 {
        let mm = m as i64;
        let down = q(-(nn + mm + 1), 2);
        let up = q(1, 2 * (nn + mm + 2));
        let rhs_x = &(&x(m - 1).right_mul(&e1) - &y(m - 1).right_mul(&e2)).scale(&down)
            + &(&x(m + 1).right_mul(&e1) + &y(m + 1).right_mul(&e2)).scale(&up);
        let rhs_y = &(&y(m - 1).right_mul(&e1) + &x(m - 1).right_mul(&e2)).scale(&down)
            + &(&y(m + 1).right_mul(&e1) - &x(m + 1).right_mul(&e2)).scale(&up);
        out.push(RecurrenceOutcome {
            recurrence: Recurrence::X,
            n,
            m,
            passed: rhs_x == x(m),
        });
        out.push(RecurrenceOutcome {
            recurrence: Recurrence::Y,
            n,
            m,
            passed: rhs_y == y(m),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ScalarPoly;

    #[test]
    fn holds_for_low_degrees() {
        for n in 0..=5 {
            let report = recurrence_check(n);
            assert_eq!(report.len(), 1 + 2 * (n as usize + 1));
            for r in &report {
                assert!(r.passed, "{r:?}");
            }
        }
    }

    #[test]
    fn corruption_is_flagged() {
        let n = 2;
        let corrupt = |family: Family, m: u32| {
            let p = (*basis_or_zero(n, family, m)).clone();
            if family == Family::Y && m == 2 {
                &p + &APoly::from_scalar(ScalarPoly::var(0).pow(2))
            } else {
                p
            }
        };
        let report = recurrence_check_with(n, &corrupt);
        let failed: Vec<_> = report.iter().filter(|r| !r.passed).collect();
        assert!(!failed.is_empty());
        assert!(failed.iter().any(|r| r.recurrence == Recurrence::Y && r.m == 2));
    }
}
