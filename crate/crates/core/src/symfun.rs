//! Denominators of `⊙` and `∗` products through power sums.
//!
//! A denominator `∏(1 − uᵢx)` carries the elementary symmetric functions of
//! its reciprocal roots: the coefficient of `x^k` is `(−1)^k e_k`. Newton's
//! identities turn those into power sums `p_k`, where the two products are
//! easy: `p_k(α∗β) = p_k(α)p_k(β)` and
//! `p_k(α⊙β) = Σ_l C(k,l) p_l(α) p_{k−l}(β)`. Converting back gives the
//! product denominator without ever touching the roots.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::poly::Poly;
use crate::rational::{self, Rational};

/// Power sums `p_0..=p_upto`; `p_0` is the number of reciprocal roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSums {
    values: Vec<Rational>,
}

impl PowerSums {
    /// `values[0]` is `p_0`.
    pub fn new(values: Vec<Rational>) -> PowerSums {
        assert!(!values.is_empty(), "power sums need p_0");
        PowerSums { values }
    }

    pub fn p0(&self) -> &Rational {
        &self.values[0]
    }

    pub fn get(&self, k: usize) -> &Rational {
        &self.values[k]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Highest index held.
    pub fn upto(&self) -> usize {
        self.values.len() - 1
    }
}

/// Which product the denominator is for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DenominatorKind {
    Binomial,
    Hadamard,
}

/// `e_k` read off a denominator with `den(0) = 1`, for `k = 0..=upto`.
pub fn elementary_from_denominator(den: &Poly, upto: usize) -> Vec<Rational> {
    (0..=upto).map(|k| den.coeff(k) * rational::sign_pow(k)).collect()
}

/// Power sums from a denominator `∏(1 − uᵢx)` through index `upto`, by
/// Newton's recurrence `k·e_k = Σ_{i=1..k} (−1)^(i−1) e_{k−i} p_i`.
pub fn elementary_to_power(den: &Poly, upto: usize) -> PowerSums {
    assert!(den.coeff(0).is_one(), "denominator must have constant term 1");
    let e = elementary_from_denominator(den, upto);
    let mut p: Vec<Rational> = Vec::with_capacity(upto + 1);
    p.push(rational::int(den.degree().unwrap_or(0) as i64));
    for k in 1..=upto {
        // p_k = (−1)^(k−1) [k e_k − Σ_{i=1..k−1} (−1)^(i−1) e_{k−i} p_i]
        let mut acc = &e[k] * rational::int(k as i64);
        for i in 1..k {
            let term = &e[k - i] * &p[i];
            if i % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        p.push(acc * rational::sign_pow(k - 1));
    }
    PowerSums { values: p }
}

/// Elementary symmetric functions `e_0..=e_upto` from power sums, by the
/// same recurrence solved for `e_k`.
pub fn power_to_elementary(p: &PowerSums, upto: usize) -> Vec<Rational> {
    assert!(p.upto() >= upto, "power sums do not reach the requested index");
    let mut e: Vec<Rational> = Vec::with_capacity(upto + 1);
    e.push(Rational::one());
    for k in 1..=upto {
        let mut acc = Rational::zero();
        for i in 1..=k {
            let term = &e[k - i] * p.get(i);
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / rational::int(k as i64));
    }
    e
}

/// Power sums of the pairwise products `αᵢβⱼ`.
pub fn powersum_hadamard(pa: &PowerSums, pb: &PowerSums, upto: usize) -> PowerSums {
    PowerSums { values: (0..=upto).map(|k| pa.get(k) * pb.get(k)).collect() }
}

/// Power sums of the pairwise sums `αᵢ + βⱼ`.
pub fn powersum_binomial(pa: &PowerSums, pb: &PowerSums, upto: usize) -> PowerSums {
    let pascal = rational::pascal(upto);
    let values = (0..=upto)
        .map(|k| {
            let mut acc = Rational::zero();
            for l in 0..=k {
                acc += pa.get(l) * pb.get(k - l) * Rational::from_integer(pascal[k][l].clone());
            }
            acc
        })
        .collect();
    PowerSums { values }
}

/// `∏(1 − (αᵢ+βⱼ)x)` or `∏(1 − αᵢβⱼx)` from the two denominators.
pub fn denominator_via_symfun(uden: &Poly, vden: &Poly, kind: DenominatorKind) -> Poly {
    let m = uden.degree().unwrap_or(0);
    let n = vden.degree().unwrap_or(0);
    if m == 0 || n == 0 {
        return Poly::one();
    }
    let upto = m * n;
    let pa = elementary_to_power(uden, upto);
    let pb = elementary_to_power(vden, upto);
    let pc = match kind {
        DenominatorKind::Binomial => powersum_binomial(&pa, &pb, upto),
        DenominatorKind::Hadamard => powersum_hadamard(&pa, &pb, upto),
    };
    let e = power_to_elementary(&pc, upto);
    Poly::from_coeffs(
        e.into_iter()
            .enumerate()
            .map(|(k, v)| v * rational::sign_pow(k))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn lucas_and_companion_pell_power_sums() {
        let fib = Poly::from_ints(&[1, -1, -1]);
        let pell = Poly::from_ints(&[1, -2, -1]);
        assert_eq!(elementary_to_power(&fib, 4).values(), ints(&[2, 1, 3, 4, 7]).as_slice());
        assert_eq!(elementary_to_power(&pell, 4).values(), ints(&[2, 2, 6, 14, 34]).as_slice());
    }

    #[test]
    fn triple_root() {
        let cube = Poly::from_ints(&[1, -1]).pow(3);
        assert!(elementary_to_power(&cube, 6).values().iter().all(|v| *v == int(3)));
    }

    #[test]
    fn equal_roots_give_binomials() {
        let p = PowerSums::new(ints(&[4, 4, 4, 4, 4, 4]));
        assert_eq!(power_to_elementary(&p, 5), ints(&[1, 4, 6, 4, 1, 0]));
    }

    #[test]
    fn explicit_root_power_sums() {
        // (1−x)(1−2x) and (1−3x)(1−5x): pairwise sums {4, 6, 5, 7}
        let u = Poly::from_ints(&[1, -3, 2]);
        let v = Poly::from_ints(&[1, -8, 15]);
        let pa = elementary_to_power(&u, 4);
        let pb = elementary_to_power(&v, 4);
        let sums = powersum_binomial(&pa, &pb, 2);
        assert_eq!(sums.values(), ints(&[4, 22, 126]).as_slice());
        let prods = powersum_hadamard(&pa, &pb, 2);
        // products {3, 5, 6, 10}
        assert_eq!(prods.values(), ints(&[4, 24, 9 + 25 + 36 + 100]).as_slice());
        let expected = [4, 5, 6, 7]
            .iter()
            .fold(Poly::one(), |acc, &r| &acc * &Poly::from_ints(&[1, -r]));
        assert_eq!(denominator_via_symfun(&u, &v, DenominatorKind::Binomial), expected);
    }

    #[test]
    fn empty_product() {
        let v = Poly::from_ints(&[1, -2, -1]);
        assert_eq!(denominator_via_symfun(&Poly::one(), &v, DenominatorKind::Binomial), Poly::one());
        assert_eq!(denominator_via_symfun(&v, &Poly::one(), DenominatorKind::Hadamard), Poly::one());
    }
}
