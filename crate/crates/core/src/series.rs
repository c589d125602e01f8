//! Dense integer power series truncated at a fixed order, and the
//! lower-central-series exponent solver: given c₀..c_R with c₀ = 1, find the
//! unique integers φ₁..φ_R with ∏_{r≥1} (1−t^r)^{φ_r} ≡ Σ c_k t^k (mod t^{R+1}).

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// Coefficients c₀..c_R of a truncated integer power series.
#[derive(Clone, Debug, PartialEq)]
pub struct Series {
    pub coeffs: Vec<BigInt>,
}

impl Series {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Series { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Series::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one(order: usize) -> Self {
        let mut c = vec![BigInt::zero(); order + 1];
        c[0] = BigInt::one();
        Series::new(c)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        while self.coeffs.len() <= order {
            self.coeffs.push(BigInt::zero());
        }
        self
    }

    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if !other.coeffs[j].is_zero() {
                    out[i + j] += &self.coeffs[i] * &other.coeffs[j];
                }
            }
        }
        Series::new(out)
    }

    /// Multiplicative inverse; requires constant term ±1 (stays integral).
    pub fn inverse(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(Error::BadConstantTerm);
        }
        let order = self.order();
        let mut inv = vec![BigInt::zero(); order + 1];
        inv[0] = c0.clone(); // 1/±1 = ±1
        for k in 1..=order {
            let mut acc = BigInt::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = -acc * c0; // divide by c0 = ±1
        }
        Ok(Series::new(inv))
    }

    /// (1 − t^r)^e for any integer exponent e, truncated.
    pub fn one_minus_tr_pow(r: usize, e: i64, order: usize) -> Series {
        let base = {
            let mut c = vec![BigInt::zero(); order + 1];
            c[0] = BigInt::one();
            if r <= order {
                c[r] = BigInt::from(-1);
            }
            Series::new(c)
        };
        if e >= 0 {
            base.pow(e as u64)
        } else {
            base.inverse().expect("unit constant term").pow((-e) as u64)
        }
    }

    pub fn pow(&self, mut e: u64) -> Series {
        let order = self.order();
        let mut acc = Series::one(order);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// Expand ∏_r (1 − t^r)^{φ_r}, with φ given from degree 1 on.
    pub fn lcs_product(phi: &[i64], order: usize) -> Series {
        let mut acc = Series::one(order);
        for (i, &e) in phi.iter().enumerate() {
            let r = i + 1;
            if r > order || e == 0 {
                continue;
            }
            acc = acc.mul(&Series::one_minus_tr_pow(r, e, order));
        }
        acc
    }
}

/// Solve ∏_{r≥1} (1−t^r)^{φ_r} ≡ series (mod t^{R+1}) for integer exponents.
///
/// Works one degree at a time: after dividing out the exponents found so
/// far, the remaining ratio is 1 + q_r t^r + …, forcing φ_r = −q_r.
pub fn solve_exponents(series: &Series) -> Result<Vec<i64>> {
    if !series.coeffs[0].is_one() {
        return Err(Error::BadConstantTerm);
    }
    let order = series.order();
    let mut ratio = series.clone();
    let mut phi = Vec::with_capacity(order);
    for r in 1..=order {
        let q = &ratio.coeffs[r];
        let exp = -q;
        let e = exp
            .to_i64()
            .ok_or(Error::NonIntegralExponent(r))?;
        phi.push(e);
        if e != 0 {
            ratio = ratio.mul(&Series::one_minus_tr_pow(r, -e, order));
        }
        debug_assert!(ratio.coeffs[r].is_zero());
    }
    for k in 1..=order {
        if !ratio.coeffs[k].is_zero() {
            return Err(Error::NonIntegralExponent(k));
        }
    }
    Ok(phi)
}

/// Number-theoretic Möbius function, for the Witt rank formula.
pub fn moebius(n: u64) -> i64 {
    if n == 1 {
        return 1;
    }
    let mut m = n;
    let mut k = 0u32;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0;
            }
            k += 1;
        }
        d += 1;
    }
    if m > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Witt number: rank of the degree-r part of the free Lie algebra on n
/// generators, (1/r) Σ_{d|r} μ(d) n^{r/d}.
pub fn witt(n: i64, r: u64) -> i64 {
    let mut acc = BigInt::zero();
    for d in 1..=r {
        if r % d == 0 {
            let mu = moebius(d);
            if mu != 0 {
                acc += BigInt::from(mu) * BigInt::from(n).pow((r / d) as u32);
            }
        }
    }
    let q = acc / BigInt::from(r);
    q.to_i64().expect("Witt number fits i64")
}

/// Binomial coefficient as i64 (inputs are desk-scale).
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc.to_i64().expect("binomial fits i64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moebius_small() {
        let vals: Vec<i64> = (1..=12).map(moebius).collect();
        assert_eq!(vals, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, 1, 0]);
    }

    #[test]
    fn witt_matches_prime_formula() {
        // for prime r the rank is (n^r − n)/r
        assert_eq!(witt(2, 3), 2);
        assert_eq!(witt(7, 2), 21);
        assert_eq!(witt(3, 1), 3);
        assert_eq!(witt(9, 5), (9i64.pow(5) - 9) / 5);
    }

    #[test]
    fn solve_exponents_braid_product() {
        // (1−t)(1−2t)(1−3t) = 1 − 6t + 11t² − 6t³; exponents cross-checked
        // against Witt numbers: φ_r = Σ_{j=1..3} witt(j, r)
        let s = Series::from_i64(&[1, -6, 11, -6, 0]);
        let phi = solve_exponents(&s).unwrap();
        assert_eq!(phi, vec![6, 4, 10, 21]);
        for (i, &p) in phi.iter().enumerate() {
            let r = (i + 1) as u64;
            let oracle: i64 = (1..=3).map(|j| witt(j, r)).sum();
            assert_eq!(p, oracle, "degree {r}");
        }
    }

    #[test]
    fn solve_exponents_one_minus_t() {
        let s = Series::from_i64(&[1, -1, 0, 0, 0]);
        assert_eq!(solve_exponents(&s).unwrap(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn solve_exponents_rank2_free() {
        let s = Series::from_i64(&[1, -2, 0, 0, 0, 0]);
        let phi = solve_exponents(&s).unwrap();
        let witts: Vec<i64> = (1..=5).map(|r| witt(2, r)).collect();
        assert_eq!(phi, witts);
        assert_eq!(witts, vec![2, 1, 2, 3, 6]);
    }

    #[test]
    fn constant_term_must_be_one() {
        let s = Series::from_i64(&[2, 1]);
        assert!(solve_exponents(&s).is_err());
    }

    #[test]
    fn binom_basics() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(4, 0), 1);
        assert_eq!(binom(3, 5), 0);
        assert_eq!(binom(10, 5), 252);
    }
}
