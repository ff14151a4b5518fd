use num_bigint::BigInt;

use crate::poly::IntPolynomial;

/// The Chebyshev polynomial with `T_d(x + 1/x) = x^d + x^-d`, by the
/// recurrence `T_(d+1) = x T_d - T_(d-1)` from `T_0 = 2`, `T_1 = x`.
pub fn chebyshev(d: u32) -> IntPolynomial {
    let mut prev = IntPolynomial::constant(BigInt::from(2));
    if d == 0 {
        return prev;
    }
    let x = IntPolynomial::x();
    let mut cur = x.clone();
    for _ in 1..d {
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degrees() {
        assert_eq!(chebyshev(1), IntPolynomial::from_i64s(&[0, 1]));
        assert_eq!(chebyshev(2), IntPolynomial::from_i64s(&[-2, 0, 1]));
        assert_eq!(chebyshev(3), IntPolynomial::from_i64s(&[0, -3, 0, 1]));
    }

    #[test]
    fn composition_rule() {
        // T_2 o T_3 = T_6
        assert_eq!(chebyshev(2).compose(&chebyshev(3)), chebyshev(6));
    }
}
