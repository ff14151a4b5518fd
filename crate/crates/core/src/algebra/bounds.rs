use num_bigint::BigUint;
use num_traits::One;

use crate::{Error, Result};

/// Largest exponent `(d^n - 1)/(d - 1)` accepted for the upper bound.
const MAX_EXPONENT: u64 = 1 << 20;

/// `d^n <= |Gal| <= (d!)^((d^n - 1)/(d - 1))` for the splitting field of
/// `phi^n(x) - alpha` with `deg phi = d`.
pub fn galois_order_bounds(d: u32, n: u32) -> Result<(BigUint, BigUint)> {
    if d < 2 || n < 1 {
        return Err(Error::InvalidArgument(format!(
            "need d >= 2 and n >= 1, got d={d}, n={n}"
        )));
    }
    let too_large =
        || Error::InvalidArgument(format!("bounds for d={d}, n={n} are too large to expand"));
    let tree_nodes = (d as u64)
        .checked_pow(n)
        .map(|p| (p - 1) / (d as u64 - 1))
        .filter(|&e| e <= MAX_EXPONENT)
        .ok_or_else(too_large)?;
    let lower = num_traits::pow(BigUint::from(d), n as usize);
    let factorial: BigUint = (1..=d).fold(BigUint::one(), |acc, k| acc * k);
    let upper = num_traits::pow(factorial, tree_nodes as usize);
    Ok((lower, upper))
}
