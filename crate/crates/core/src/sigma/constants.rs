//! Growth constants for sparse σ-specifications and the length bounds they
//! guarantee. Every comparison against `α = √(2/(d+1))` is decided on squares
//! with integers: `C·α > r` iff `2C² > r²(d+1)`.

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

/// `√(2/(d+1))`, for display only.
pub fn alpha(d: u64) -> f64 {
    (2.0 / (d as f64 + 1.0)).sqrt()
}

/// `C·α > r`, decided exactly.
pub fn alpha_times_exceeds(c: u64, r: u64, d: u64) -> bool {
    2 * u128::from(c) * u128::from(c) > u128::from(r) * u128::from(r) * (u128::from(d) + 1)
}

/// `M·√(2/(d+1))`, rounded once at the end.
pub fn min_kernel_length_bound(m: u64, d: u64) -> f64 {
    assert!(d >= 1, "dimension must be positive");
    if d == 1 {
        return m as f64;
    }
    let m = m as f64;
    m * alpha(d)
}

/// Index into the cover sequence used at support index `n`: `a_m` for
/// `n = 2m + 1`, the fixed entry `L_1` for even `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BTerm {
    A(usize),
    One,
}

pub fn b_term(n: usize) -> BTerm {
    if n % 2 == 1 {
        BTerm::A(n / 2)
    } else {
        BTerm::One
    }
}

/// Lexicographically least `C_1 < C_2 < … < C_m` with `C_1·α > 3` and
/// `C_n·α > r_{b_{n−1}}`, `C_n·α > r_{b_n}`. `r_b[n]` is `r_{b_n}`; missing
/// or `None` entries impose nothing.
pub fn choose_constants(d: u64, r_b: &[Option<u64>], m: usize) -> Vec<u64> {
    let r = |n: usize| r_b.get(n).copied().flatten();
    let mut out: Vec<u64> = Vec::with_capacity(m);
    for n in 1..=m {
        let mut bounds = vec![r(n - 1), r(n)];
        if n == 1 {
            bounds.push(Some(3));
        }
        let mut c = out.last().map_or(1, |&prev| prev + 1);
        while !bounds.iter().flatten().all(|&b| alpha_times_exceeds(c, b, d)) {
            c += 1;
        }
        out.push(c);
    }
    out
}

/// The ratio bounds `C_m^(2^m − 2)` for every checked index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioBound {
    pub per_index: Vec<BigUint>,
    /// Smallest of `per_index`; 1 for an empty sequence.
    pub minimum: BigUint,
}

/// The first inequality that fails, with its indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[error("separation fails at m = {m}{}: {condition}", .n.map(|n| format!(", n = {n}")).unwrap_or_default())]
pub struct SeparationFailure {
    pub m: usize,
    pub n: Option<usize>,
    pub condition: String,
}

/// Rechecks, for all `m` and `n ≥ 1` with `m + n` in range, the chain
/// `αC_{m+n}^(2^(m+n)) / (r_{b_m} C_m^(2^m)) > C_m^(2^m − 2)`: its links are
/// `C_{m+n} > C_m`, `αC_{m+n}^(2^(m+n)) > r_{b_m}C_m^(2^m)` and `αC_m > r_{b_m}`.
/// Absent `r` values count as 1.
pub fn separation_ratio_check(
    constants: &[u64],
    r_b: &[Option<u64>],
    d: u64,
) -> Result<RatioBound, SeparationFailure> {
    let fail = |m, n, condition: &str| SeparationFailure { m, n, condition: condition.to_string() };
    let r = |n: usize| r_b.get(n).copied().flatten().unwrap_or(1).max(1);
    let c = |i: usize| constants[i - 1];
    let len = constants.len();
    if len >= 1 && !alpha_times_exceeds(c(1), 3, d) {
        return Err(fail(1, None, "C_1·α > 3"));
    }
    // C^(2^i) squared is C^(2^(i+1)).
    let big_pow = |base: u64, i: usize| -> BigUint { Pow::pow(BigUint::from(base), BigUint::one() << (i + 1)) };
    let two = BigUint::from(2u32);
    let d1 = BigUint::from(d + 1);
    let mut per_index = Vec::with_capacity(len);
    for m in 1..=len {
        let rm = r(m);
        if !alpha_times_exceeds(c(m), rm, d) {
            return Err(fail(m, None, "C_m·α > r_{b_m}"));
        }
        let lower = BigUint::from(rm) * BigUint::from(rm) * &d1 * big_pow(c(m), m);
        for n in 1..=len - m {
            if c(m + n) <= c(m) {
                return Err(fail(m, Some(n), "C_{m+n} > C_m"));
            }
            if &two * big_pow(c(m + n), m + n) <= lower {
                return Err(fail(m, Some(n), "α·C_{m+n}^(2^(m+n)) > r_{b_m}·C_m^(2^m)"));
            }
        }
        per_index.push(Pow::pow(BigUint::from(c(m)), (1u64 << m) - 2));
    }
    let minimum = per_index.iter().min().cloned().unwrap_or_else(BigUint::one);
    Ok(RatioBound { per_index, minimum })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_constant_in_dimension_two() {
        assert!((alpha(2) - 0.816_496_580_927_726).abs() < 1e-15);
        assert_eq!(choose_constants(2, &[], 1), vec![4]);
        assert!(!alpha_times_exceeds(3, 3, 2));
        assert!(alpha_times_exceeds(4, 3, 2));
    }

    #[test]
    fn constants_respect_r_values() {
        let r = [Some(3), Some(8), Some(4), Some(20)];
        let c = choose_constants(2, &r, 3);
        // 2C² > 3r²: r=8 needs C ≥ 10, r=20 needs C ≥ 25.
        assert_eq!(c, vec![10, 11, 25]);
        let bound = separation_ratio_check(&c, &r, 2).unwrap();
        assert_eq!(bound.minimum, BigUint::one());
        assert_eq!(bound.per_index[1], BigUint::from(11u32 * 11));
    }

    #[test]
    fn non_increasing_constants_fail() {
        let err = separation_ratio_check(&[4, 4], &[], 2).unwrap_err();
        assert_eq!((err.m, err.n), (1, Some(1)));
        assert!(separation_ratio_check(&[3], &[], 2).is_err());
    }

    #[test]
    fn single_constant_bound_is_one() {
        let bound = separation_ratio_check(&[4], &[], 2).unwrap();
        assert_eq!(bound.per_index, vec![BigUint::one()]);
    }

    #[test]
    fn kernel_bound() {
        assert_eq!(min_kernel_length_bound(0, 2), 0.0);
        assert!((min_kernel_length_bound(7, 2) - 5.715_476_066).abs() < 1e-9);
        assert_eq!(min_kernel_length_bound(13, 1), 13.0);
    }

    #[test]
    fn b_sequence() {
        assert_eq!(b_term(1), BTerm::A(0));
        assert_eq!(b_term(2), BTerm::One);
        assert_eq!(b_term(5), BTerm::A(2));
    }
}
