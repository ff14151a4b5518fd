use crate::poly::IntPolynomial;

/// The `k`-th cyclotomic polynomial, `(x^k - 1) / prod_{d | k, d < k} Phi_d`.
pub fn cyclotomic(k: u32) -> IntPolynomial {
    assert!(k >= 1, "cyclotomic index must be positive");
    let mut coeffs = vec![0i64; k as usize + 1];
    coeffs[0] = -1;
    coeffs[k as usize] = 1;
    let mut p = IntPolynomial::from_i64s(&coeffs);
    for d in (1..k).filter(|d| k.is_multiple_of(*d)) {
        let (q, r) = p.div_rem_monic(&cyclotomic(d));
        debug_assert!(r.is_zero());
        p = q;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    #[test]
    fn known_values() {
        assert_eq!(cyclotomic(1), IntPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic(8), IntPolynomial::from_i64s(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic(12), IntPolynomial::from_i64s(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(6), IntPolynomial::from_i64s(&[1, -1, 1]));
    }

    #[test]
    fn degree_is_euler_phi() {
        let phi = |k: u32| (1..=k).filter(|j| j.gcd(&k) == 1).count();
        for k in 1..=32 {
            assert_eq!(cyclotomic(k).degree(), Some(phi(k)), "k={k}");
        }
    }
}
