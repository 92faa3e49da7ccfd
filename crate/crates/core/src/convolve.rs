//! Binomial (`⊙`) and Hadamard (`∗`) products of rational power series.
//!
//! The main engine never factors a denominator. For `A = R/U` and `B = S/V`
//! with `m = deg U`, `n = deg V`:
//!
//! * `∏(1 − (αᵢ+βⱼ)x) = (−1)^(mn) Res_y((1−y)^m U(x/(1−y)), y^n V(x/y))`
//! * `∏(1 − αᵢβⱼx)   = (−1)^(mn) Res_y(U(y), y^n V(x/y))`
//!
//! where `αᵢ`, `βⱼ` are the reciprocal roots of `U` and `V`. With the
//! denominator `D` and a numerator degree bound `d` in hand, the numerator
//! is the degree-`≤ d` part of `(A ⊙ B)·D`, computed from a truncated
//! brute-force product. Two extra coefficients of `(A ⊙ B)·D` are checked to
//! vanish.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::bipoly::BiPoly;
use crate::error::{invalid, invariant, Error, Result};
use crate::linalg;
use crate::matrix;
use crate::pfrac;
use crate::poly::Poly;
use crate::ratfun::{reconstruct_rational, RatFun, Series};
use crate::rational::{self, Rational};
use crate::symfun::{self, DenominatorKind};

/// Number of extra coefficients of `series · denominator` checked to vanish.
const VERIFY_WINDOW: usize = 2;

/// How a product is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Denominator from a Sylvester resultant.
    Resultant,
    /// Denominator from power sums and Newton's identities.
    Symfun,
    /// Constant term of a Laurent series via a two-term partial fraction.
    Pfrac,
    /// Linear-system reconstruction from brute-force coefficients.
    Reconstruct,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Resultant, Method::Symfun, Method::Pfrac, Method::Reconstruct];

    pub fn name(self) -> &'static str {
        match self {
            Method::Resultant => "resultant",
            Method::Symfun => "symfun",
            Method::Pfrac => "pfrac",
            Method::Reconstruct => "reconstruct",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Binomial,
    Hadamard,
}

/// Denominator and numerator-degree bound for a product, before reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductPlan {
    pub kind: ProductKind,
    pub method: Method,
    /// A denominator of the product, not necessarily in lowest terms.
    pub den_bound: Poly,
    /// The numerator over `den_bound` has degree at most this.
    pub num_deg_bound: usize,
}

impl ProductPlan {
    /// Plan for `a ⊙ b`. Exponents follow the improper-input correction:
    /// `u = max(deg R + 1 − m, 0)`, `v = max(deg S + 1 − n, 0)`, and
    /// `D = U^v · V^u · ∏(1 − (αᵢ+βⱼ)x)` with `deg T < (u+m)(v+n)`.
    /// Both inputs must be nonzero.
    pub fn binomial(a: &RatFun, b: &RatFun, method: Method) -> Result<ProductPlan> {
        let (Some(ra), Some(sb)) = (a.num().degree(), b.num().degree()) else {
            return Err(invalid("product plan for a zero operand"));
        };
        let m = a.den().degree().unwrap_or(0);
        let n = b.den().degree().unwrap_or(0);
        let u = (ra + 1).saturating_sub(m);
        let v = (sb + 1).saturating_sub(n);
        let core = match method {
            Method::Symfun => symfun::denominator_via_symfun(a.den(), b.den(), DenominatorKind::Binomial),
            _ => binomial_denominator(a.den(), b.den())?,
        };
        let den_bound = &(&a.den().pow(v) * &b.den().pow(u)) * &core;
        Ok(ProductPlan {
            kind: ProductKind::Binomial,
            method,
            den_bound,
            num_deg_bound: (u + m) * (v + n) - 1,
        })
    }

    /// Plan for `a ∗ b`: `D = ∏(1 − αᵢβⱼx)`; proper parts contribute degree
    /// below `mn`, polynomial parts of degree `≤ p` add up to `p + mn`.
    pub fn hadamard(a: &RatFun, b: &RatFun, method: Method) -> Result<ProductPlan> {
        if a.is_zero() || b.is_zero() {
            return Err(invalid("product plan for a zero operand"));
        }
        let m = a.den().degree().unwrap_or(0);
        let n = b.den().degree().unwrap_or(0);
        let den_bound = match method {
            Method::Symfun => symfun::denominator_via_symfun(a.den(), b.den(), DenominatorKind::Hadamard),
            _ => hadamard_denominator(a.den(), b.den())?,
        };
        let poly_part = [a, b]
            .iter()
            .filter_map(|f| f.proper_split().0.degree())
            .max();
        let num_deg_bound = match poly_part {
            Some(p) => p + m * n,
            None => m * n - 1,
        };
        Ok(ProductPlan { kind: ProductKind::Hadamard, method, den_bound, num_deg_bound })
    }

    /// Number of coefficients the numerator recovery consumes.
    pub fn series_order(&self) -> usize {
        self.num_deg_bound + 1 + VERIFY_WINDOW
    }
}

fn check_denominator(p: &Poly) -> Result<()> {
    if p.is_zero() || !p.coeff(0).is_one() {
        return Err(invalid("denominator must have constant term 1"));
    }
    Ok(())
}

fn mn_sign(m: usize, n: usize) -> Rational {
    rational::sign_pow(m * n)
}

/// `∏ᵢ∏ⱼ (1 − (αᵢ+βⱼ)x)` for `U = ∏(1−αᵢx)`, `V = ∏(1−βⱼx)`.
pub fn binomial_denominator(uden: &Poly, vden: &Poly) -> Result<Poly> {
    check_denominator(uden)?;
    check_denominator(vden)?;
    let m = uden.degree().unwrap_or(0);
    let n = vden.degree().unwrap_or(0);
    let a = BiPoly::one_minus_y_form(uden, m)?;
    let b = BiPoly::over_y_form(vden, n)?;
    Ok(matrix::resultant(&a, &b)?.scale(&mn_sign(m, n)))
}

/// `∏ᵢ∏ⱼ (1 − αᵢβⱼx)` for `U = ∏(1−αᵢx)`, `V = ∏(1−βⱼx)`.
pub fn hadamard_denominator(uden: &Poly, vden: &Poly) -> Result<Poly> {
    check_denominator(uden)?;
    check_denominator(vden)?;
    let m = uden.degree().unwrap_or(0);
    let n = vden.degree().unwrap_or(0);
    let a = BiPoly::lift(uden);
    let b = BiPoly::over_y_form(vden, n)?;
    Ok(matrix::resultant(&a, &b)?.scale(&mn_sign(m, n)))
}

/// Numerator `T = (c·D) mod x^(bound+1)`; the next coefficients must vanish.
fn recover_numerator(plan: &ProductPlan, series: &Series) -> Result<RatFun> {
    let order = plan.series_order();
    debug_assert!(series.order() >= order);
    let full = series.to_poly().mul_trunc(&plan.den_bound, order);
    if (plan.num_deg_bound + 1..order).any(|k| !full.coeff(k).is_zero()) {
        return Err(invariant("numerator tail does not vanish"));
    }
    RatFun::new(full.truncate(plan.num_deg_bound + 1), plan.den_bound.clone())
}

fn product_series(kind: ProductKind, a: &RatFun, b: &RatFun, order: usize) -> Series {
    let (sa, sb) = (a.expand(order), b.expand(order));
    match kind {
        ProductKind::Binomial => sa.binomial_convolution(&sb),
        ProductKind::Hadamard => sa.hadamard(&sb),
    }
}

fn product_from_plan(plan: &ProductPlan, a: &RatFun, b: &RatFun) -> Result<RatFun> {
    match plan.method {
        Method::Reconstruct => {
            let den_deg = plan.den_bound.degree().unwrap_or(0);
            let order = den_deg + plan.num_deg_bound + 3;
            let s = product_series(plan.kind, a, b, order);
            reconstruct_rational(&s, den_deg, plan.num_deg_bound)
        }
        _ => {
            let s = product_series(plan.kind, a, b, plan.series_order());
            recover_numerator(plan, &s)
        }
    }
}

/// `a ⊙ b` by the resultant engine.
pub fn binomial_product(a: &RatFun, b: &RatFun) -> Result<RatFun> {
    binomial_product_with(a, b, Method::Resultant)
}

/// `a ⊙ b` by the chosen method; every method returns the reduced form.
pub fn binomial_product_with(a: &RatFun, b: &RatFun, method: Method) -> Result<RatFun> {
    if a.is_zero() || b.is_zero() {
        return Ok(RatFun::zero());
    }
    if method == Method::Pfrac {
        return pfrac::binomial_via_constant_term(a, b);
    }
    let plan = ProductPlan::binomial(a, b, method)?;
    product_from_plan(&plan, a, b)
}

/// `a ∗ b` by the resultant engine.
pub fn hadamard_product(a: &RatFun, b: &RatFun) -> Result<RatFun> {
    hadamard_product_with(a, b, Method::Resultant)
}

pub fn hadamard_product_with(a: &RatFun, b: &RatFun, method: Method) -> Result<RatFun> {
    if a.is_zero() || b.is_zero() {
        return Ok(RatFun::zero());
    }
    if method == Method::Pfrac {
        return pfrac::hadamard_via_constant_term(a, b);
    }
    let plan = ProductPlan::hadamard(a, b, method)?;
    product_from_plan(&plan, a, b)
}

/// Dispatches on the product kind.
pub fn product(kind: ProductKind, a: &RatFun, b: &RatFun, method: Method) -> Result<RatFun> {
    match kind {
        ProductKind::Binomial => binomial_product_with(a, b, method),
        ProductKind::Hadamard => hadamard_product_with(a, b, method),
    }
}

/// `p ∗ f` for a polynomial `p`: a polynomial of degree at most `deg p`.
pub fn hadamard_with_poly(p: &Poly, f: &RatFun) -> Poly {
    let s = f.expand(p.len());
    Poly::from_coeffs(p.coeffs().iter().zip(s.coeffs()).map(|(a, b)| a * b).collect())
}

/// `x^m ⊙ a = (x^m/m!)·dᵐ/dxᵐ (x^m·a)`.
pub fn poly_bprod(m: usize, a: &RatFun) -> RatFun {
    let mut g = a.shift(m);
    for _ in 0..m {
        g = g.derivative();
    }
    g.shift(m).scale(&Rational::new(One::one(), rational::factorial(m)))
}

/// `p ⊙ a` for a polynomial `p`, by linearity over [`poly_bprod`].
pub fn poly_bprod_poly(p: &Poly, a: &RatFun) -> RatFun {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(RatFun::zero(), |acc, (m, c)| &acc + &poly_bprod(m, a).scale(c))
}

/// `a ⊙ b` through `proper_split` and [`poly_bprod`]; the proper-by-proper
/// part uses the resultant engine with no exponent correction. Kept as an
/// independent route for improper inputs.
pub fn binomial_product_by_split(a: &RatFun, b: &RatFun) -> Result<RatFun> {
    let (pa, ra) = a.proper_split();
    let (pb, rb) = b.proper_split();
    let mut acc = &poly_bprod_poly(&pa, b) + &poly_bprod_poly(&pb, &ra);
    acc = &acc + &binomial_product(&ra, &rb)?;
    Ok(acc)
}

/// `x^j/(1−αx)^(j+1) ⊙ x^k/(1−βx)^(k+1) = C(j+k,j)·x^(j+k)/(1−(α+β)x)^(j+k+1)`.
pub fn closed_form_bprod(j: usize, alpha: &Rational, k: usize, beta: &Rational) -> RatFun {
    let c = Rational::from_integer(rational::binomial(j + k, j));
    let lin = Poly::from_coeffs(alloc::vec![Rational::one(), -(alpha + beta)]);
    RatFun::new(Poly::monomial(c, j + k), lin.pow(j + k + 1)).expect("constant term 1")
}

/// The left operand `x^j/(1−αx)^(k+1)` of the closed forms, as a RatFun.
pub fn power_fraction(j: usize, alpha: &Rational, e: usize) -> RatFun {
    let lin = Poly::from_coeffs(alloc::vec![Rational::one(), -alpha.clone()]);
    RatFun::new(Poly::monomial(Rational::one(), j), lin.pow(e)).expect("constant term 1")
}

/// `x^i/(1−ax)^(m+1) ∗ x^j/(1−bx)^(n+1)` in closed form: numerator
/// `Σ_k C(m+j−i, k−i)·C(n+i−j, k−j)·a^(k−i)·b^(k−j)·x^k` over
/// `(1 − abx)^(m+n+1)`, summed over `max(i,j) ≤ k ≤ min(n+i, m+j)`.
/// Requires `i ≤ m+j` and `j ≤ n+i`.
pub fn closed_form_hprod(
    i: usize,
    a: &Rational,
    m: usize,
    j: usize,
    b: &Rational,
    n: usize,
) -> Result<RatFun> {
    if i > m + j || j > n + i {
        return Err(Error::InvalidInput(format!(
            "closed Hadamard form needs i <= m+j and j <= n+i, got i={i} j={j} m={m} n={n}"
        )));
    }
    let lo = i.max(j);
    let hi = (n + i).min(m + j);
    let mut num = alloc::vec![Rational::zero(); hi + 1];
    for (k, slot) in num.iter_mut().enumerate().take(hi + 1).skip(lo) {
        let c = rational::binomial(m + j - i, k - i) * rational::binomial(n + i - j, k - j);
        *slot = Rational::from_integer(c) * rational::pow(a, k - i) * rational::pow(b, k - j);
    }
    let lin = Poly::from_coeffs(alloc::vec![Rational::one(), -(a * b)]);
    RatFun::new(Poly::from_coeffs(num), lin.pow(m + n + 1))
}

/// `∏_{i<j} (1 − (αᵢ+αⱼ)x)` for `D = ∏(1 − αᵢx)`, from power sums:
/// `Σ_{i<j}(αᵢ+αⱼ)^k = (Σ_{i,j}(αᵢ+αⱼ)^k − 2^k p_k)/2`.
pub fn pair_sum_denominator(den: &Poly) -> Poly {
    let d = den.degree().unwrap_or(0);
    let upto = d * (d.max(1) - 1) / 2;
    if upto == 0 {
        return Poly::one();
    }
    let p = symfun::elementary_to_power(den, upto);
    let full = symfun::powersum_binomial(&p, &p, upto);
    let half = rational::rat(1, 2);
    let values: Vec<Rational> = (0..=upto)
        .map(|k| (full.get(k) - rational::pow(&rational::int(2), k) * p.get(k)) * &half)
        .collect();
    let e = symfun::power_to_elementary(&symfun::PowerSums::new(values), upto);
    Poly::from_coeffs(e.into_iter().enumerate().map(|(k, v)| v * rational::sign_pow(k)).collect())
}

/// Splits `r ⊙ s` for proper `r`, `s` over a common cubic denominator
/// `D = 1 + Ax + Bx² + Cx³` (`C ≠ 0`) as
///
/// `r ⊙ s = u(x)/D(2x) + 1/(1+Ax) ⊙ v(x)/D(−x)`, `deg u, deg v ≤ 2`.
///
/// The factor `D(2x)` collects the doubled reciprocal roots `2αᵢ`; the rest
/// of the denominator, `∏_{i<j}(1 − (αᵢ+αⱼ)x)`, has reciprocal roots
/// `−A − αₖ`, which a `⊙` with `1/(1−Ax)` moves to `−αₖ`, the roots of
/// `D(−x)`. The two parts are found by solving the partial-fraction system
/// `u·D₂ + w·D₁ = numerator` directly.
pub fn komatsu_decompose(r: &RatFun, s: &RatFun) -> Result<(Poly, Poly)> {
    let den = r.den();
    if den != s.den() || den.degree() != Some(3) {
        return Err(invalid("operands must share a cubic denominator"));
    }
    if r.is_zero() || s.is_zero() || !r.is_proper() || !s.is_proper() {
        return Err(invalid("operands must be nonzero and proper"));
    }
    if !den.gcd(&den.derivative())?.is_one() {
        return Err(Error::DecompositionUnavailable(format!("denominator {den} has a repeated root")));
    }
    let d1 = den.compose_scale(&rational::int(2));
    let d2 = pair_sum_denominator(den);
    if !d1.gcd(&d2)?.is_one() {
        return Err(Error::DecompositionUnavailable(format!(
            "doubled roots and pair sums share a factor: gcd({d1}, {d2}) != 1"
        )));
    }
    let prod = binomial_product(r, s)?;
    let full_den = &d1 * &d2;
    let cofactor = full_den
        .exact_div(prod.den())
        .map_err(|_| invariant("product denominator does not divide D(2x)·D2(x)"))?;
    let numer = prod.num() * &cofactor;
    if numer.degree().is_some_and(|d| d > 5) {
        return Err(invariant("partial-fraction numerator exceeds degree 5"));
    }
    // unknowns u0 u1 u2 w0 w1 w2; rows: coefficient of x^t, t = 0..=5
    let rows: Vec<Vec<Rational>> = (0..6)
        .map(|t| {
            (0..6)
                .map(|col| {
                    let (factor, shift) = if col < 3 { (&d2, col) } else { (&d1, col - 3) };
                    if t >= shift { factor.coeff(t - shift) } else { Rational::zero() }
                })
                .collect()
        })
        .collect();
    let rhs: Vec<Rational> = (0..6).map(|t| numer.coeff(t)).collect();
    let sol = linalg::solve(&rows, &rhs).ok_or_else(|| invariant("singular partial-fraction system"))?;
    let u = Poly::from_coeffs(sol[..3].to_vec());
    let w = Poly::from_coeffs(sol[3..].to_vec());
    let a_coeff = den.coeff(1);
    // v/D(−x) = 1/(1−Ax) ⊙ w/D₂
    let shifted = RatFun::new(w, d2)?.compose_mobius(&a_coeff);
    let dneg = den.compose_scale(&rational::int(-1));
    let v_cof = dneg
        .exact_div(shifted.den())
        .map_err(|_| invariant("shifted pair-sum part is not over D(-x)"))?;
    let v = shifted.num() * &v_cof;
    Ok((u, v))
}

/// Right-hand side of [`komatsu_decompose`]:
/// `u/D(2x) + 1/(1+Ax) ⊙ v/D(−x)`.
pub fn komatsu_reassemble(den: &Poly, u: &Poly, v: &Poly) -> Result<RatFun> {
    let first = RatFun::new(u.clone(), den.compose_scale(&rational::int(2)))?;
    let second = RatFun::new(v.clone(), den.compose_scale(&rational::int(-1)))?
        .compose_mobius(&(-den.coeff(1)));
    Ok(&first + &second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFun {
        RatFun::from_ints(n, d).unwrap()
    }

    fn fib() -> RatFun {
        rf(&[0, 1], &[1, -1, -1])
    }

    fn pell() -> RatFun {
        rf(&[0, 1], &[1, -2, -1])
    }

    #[test]
    fn fibonacci_pell_binomial() {
        let expected = rf(&[0, 0, 2, -3], &[1, -6, 7, 6, -9]);
        for m in Method::ALL {
            assert_eq!(binomial_product_with(&fib(), &pell(), m).unwrap(), expected, "{m:?}");
        }
    }

    #[test]
    fn denominators() {
        assert_eq!(binomial_denominator(&p(&[1, -1, -1]), &p(&[1, -2, -1])).unwrap(), p(&[1, -6, 7, 6, -9]));
        let trib = p(&[1, -1, -1, -1]);
        assert_eq!(binomial_denominator(&trib, &trib).unwrap().degree(), Some(9));
        assert_eq!(hadamard_denominator(&p(&[1, -1, -1]), &p(&[1, -2, -1])).unwrap(), p(&[1, -2, -7, -2, 1]));
        assert_eq!(hadamard_denominator(&p(&[1, -1]), &p(&[1, -1])).unwrap(), p(&[1, -1]));
        assert!(binomial_denominator(&p(&[2, 1]), &p(&[1])).is_err());
    }

    #[test]
    fn improper_examples() {
        let a = rf(&[0, 0, 0, 1], &[1, -1]);
        let b = RatFun::geometric(int(2));
        let d = &p(&[1, -2]).pow(3) * &p(&[1, -3]);
        let expected = RatFun::new(p(&[0, 0, 0, 1]), d).unwrap();
        assert_eq!(binomial_product(&a, &b).unwrap(), expected);
        assert_eq!(binomial_product_by_split(&a, &b).unwrap(), expected);
        let plan = ProductPlan::binomial(&a, &b, Method::Resultant).unwrap();
        assert_eq!(plan.num_deg_bound, 3);
    }

    #[test]
    fn identity_and_inverses() {
        let f = rf(&[2, -1, 3], &[1, 4, 0, -2]);
        assert_eq!(binomial_product(&RatFun::one(), &f).unwrap(), f);
        let a = rat(3, 7);
        let prod = binomial_product(&RatFun::geometric(a.clone()), &RatFun::geometric(-a)).unwrap();
        assert_eq!(prod, RatFun::one());
        assert_eq!(hadamard_product(&f, &RatFun::geometric(int(1))).unwrap(), f);
    }

    #[test]
    fn hadamard_examples() {
        assert_eq!(hadamard_product(&fib(), &pell()).unwrap(), rf(&[0, 1, 0, -1], &[1, -2, -7, -2, 1]));
        assert_eq!(hadamard_product(&fib(), &fib()).unwrap(), rf(&[0, 1, -1], &[1, -2, -2, 1]));
        let poly = RatFun::from_poly(p(&[1, 2, 3]));
        assert_eq!(hadamard_product(&poly, &fib()).unwrap(), RatFun::from_poly(p(&[0, 2, 3])));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_bprod(0, &int(1), 0, &int(1)), RatFun::geometric(int(2)));
        assert_eq!(closed_form_bprod(1, &int(1), 1, &int(-1)), RatFun::from_poly(p(&[0, 0, 2])));
        assert_eq!(closed_form_bprod(2, &int(0), 0, &int(2)), rf(&[0, 0, 1], &[1, -6, 12, -8]));
        assert_eq!(closed_form_hprod(0, &int(2), 0, 0, &int(3), 0).unwrap(), RatFun::geometric(int(6)));
        assert_eq!(closed_form_hprod(0, &int(1), 1, 0, &int(1), 0).unwrap(), rf(&[1], &[1, -2, 1]));
        assert!(closed_form_hprod(3, &int(1), 0, 0, &int(1), 0).is_err());
    }

    #[test]
    fn poly_bprod_cases() {
        let f = rf(&[1, 2], &[1, -1, 3]);
        assert_eq!(poly_bprod(0, &f), f);
        assert_eq!(poly_bprod(1, &RatFun::geometric(int(1))), rf(&[0, 1], &[1, -2, 1]));
        let x3 = RatFun::from_poly(Poly::monomial(int(1), 3));
        assert_eq!(poly_bprod(3, &f), binomial_product(&x3, &f).unwrap());
    }

    #[test]
    fn tribonacci_komatsu_split() {
        let t = rf(&[0, 1], &[1, -1, -1, -1]);
        let (u, v) = komatsu_decompose(&t, &t).unwrap();
        assert_eq!(u, Poly::from_coeffs(alloc::vec![rat(1, 11), rat(1, 11), rat(10, 11)]));
        assert_eq!(v, Poly::from_coeffs(alloc::vec![rat(-1, 11), rat(-3, 11), rat(6, 11)]));
        assert_eq!(komatsu_reassemble(t.den(), &u, &v).unwrap(), binomial_product(&t, &t).unwrap());
    }

    #[test]
    fn komatsu_rejects_repeated_roots() {
        let d = &p(&[1, -1]).pow(2) * &p(&[1, -2]);
        let r = RatFun::new(p(&[0, 1]), d).unwrap();
        assert!(matches!(komatsu_decompose(&r, &r), Err(Error::DecompositionUnavailable(_))));
    }

    #[test]
    fn pair_sums_of_distinct_roots() {
        // roots 1, 2, 3 -> pair sums 3, 4, 5
        let d = &(&p(&[1, -1]) * &p(&[1, -2])) * &p(&[1, -3]);
        let expected = &(&p(&[1, -3]) * &p(&[1, -4])) * &p(&[1, -5]);
        assert_eq!(pair_sum_denominator(&d), expected);
    }
}
