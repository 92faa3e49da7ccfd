use binconv_core::convolve::{self, Method};
use binconv_core::matrix::resultant;
use binconv_core::rational::{int, Rational};
use binconv_core::ratfun::reconstruct_rational;
use binconv_core::symfun;
use binconv_core::{BiPoly, Matrix, Poly, RatFun, Series};
use num_traits::Zero;
use proptest::prelude::*;

fn poly_from(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

/// `den(0) = 1`, degree ≤ 3, coefficients in [−5, 5].
fn denominator() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-5i64..=5, 0..=3).prop_map(|tail| {
        let mut c = vec![1];
        c.extend(tail);
        poly_from(&c)
    })
}

fn proper_ratfun() -> impl Strategy<Value = RatFun> {
    denominator().prop_flat_map(|den| {
        let d = den.degree().unwrap_or(0);
        prop::collection::vec(-5i64..=5, d..=d).prop_map(move |num| {
            RatFun::from_fraction(poly_from(&num), den.clone()).unwrap()
        })
    })
}

fn any_ratfun() -> impl Strategy<Value = RatFun> {
    (denominator(), prop::collection::vec(-5i64..=5, 0..=4))
        .prop_map(|(den, num)| RatFun::from_fraction(poly_from(&num), den).unwrap())
}

fn small_poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-6i64..=6, 0..=max_len).prop_map(|c| poly_from(&c))
}

/// Determinant by cofactor expansion along the first row.
fn cofactor_det(m: &[Vec<Poly>]) -> Poly {
    if m.is_empty() {
        return Poly::one();
    }
    let mut acc = Poly::zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = entry * &cofactor_det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn brute_binomial(a: &RatFun, b: &RatFun, order: usize) -> Vec<Rational> {
    let (x, y) = (a.expand(order).into_coeffs(), b.expand(order).into_coeffs());
    let mut row = vec![Rational::from_integer(1.into())];
    let mut out = Vec::with_capacity(order);
    for n in 0..order {
        if n > 0 {
            let mut next = vec![Rational::from_integer(1.into()); n + 1];
            for k in 1..n {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
        out.push((0..=n).fold(Rational::zero(), |s, k| s + &row[k] * &x[k] * &y[n - k]));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn binomial_product_matches_raw_convolution(a in any_ratfun(), b in any_ratfun()) {
        let p = convolve::binomial_product(&a, &b).unwrap();
        prop_assert_eq!(p.expand(25).into_coeffs(), brute_binomial(&a, &b, 25));
    }

    #[test]
    fn hadamard_product_matches_termwise(a in any_ratfun(), b in any_ratfun()) {
        let p = convolve::hadamard_product(&a, &b).unwrap();
        let (x, y) = (a.expand(25).into_coeffs(), b.expand(25).into_coeffs());
        let direct: Vec<Rational> = x.iter().zip(&y).map(|(u, v)| u * v).collect();
        prop_assert_eq!(p.expand(25).into_coeffs(), direct);
    }

    #[test]
    fn methods_agree(a in any_ratfun(), b in any_ratfun()) {
        let reference = convolve::binomial_product_with(&a, &b, Method::Resultant).unwrap();
        let had = convolve::hadamard_product_with(&a, &b, Method::Resultant).unwrap();
        for m in [Method::Symfun, Method::Pfrac, Method::Reconstruct] {
            prop_assert_eq!(&convolve::binomial_product_with(&a, &b, m).unwrap(), &reference, "{}", m.name());
            prop_assert_eq!(&convolve::hadamard_product_with(&a, &b, m).unwrap(), &had, "{}", m.name());
        }
        prop_assert_eq!(convolve::binomial_product_by_split(&a, &b).unwrap(), reference);
    }

    #[test]
    fn binomial_laws(a in proper_ratfun(), b in proper_ratfun(), c in proper_ratfun(), beta in -4i64..=4) {
        let ab = convolve::binomial_product(&a, &b).unwrap();
        prop_assert_eq!(&ab, &convolve::binomial_product(&b, &a).unwrap());
        let left = convolve::binomial_product(&ab, &c).unwrap();
        let right = convolve::binomial_product(&a, &convolve::binomial_product(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(convolve::binomial_product(&RatFun::one(), &a).unwrap(), a.clone());
        let g = RatFun::geometric(int(beta));
        let shifted = convolve::binomial_product(&a, &g).unwrap();
        prop_assert_eq!(&shifted, &a.compose_mobius(&int(beta)));
        let back = convolve::binomial_product(&shifted, &RatFun::geometric(int(-beta))).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn hadamard_laws(a in proper_ratfun(), b in proper_ratfun(), c in proper_ratfun()) {
        let ab = convolve::hadamard_product(&a, &b).unwrap();
        prop_assert!(ab.is_proper());
        prop_assert_eq!(&ab, &convolve::hadamard_product(&b, &a).unwrap());
        let left = convolve::hadamard_product(&ab, &c).unwrap();
        let right = convolve::hadamard_product(&a, &convolve::hadamard_product(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(convolve::hadamard_product(&a, &RatFun::geometric(int(1))).unwrap(), a);
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(entries in prop::collection::vec(small_poly(3), 16), n in 1usize..=4) {
        let rows: Vec<Vec<Poly>> = entries.chunks(4).take(n).map(|r| r[..n].to_vec()).collect();
        let m = Matrix::from_rows(rows.clone()).unwrap();
        prop_assert_eq!(m.det_fraction_free().unwrap(), cofactor_det(&rows));
    }

    #[test]
    fn resultant_is_multiplicative(a in small_poly(3), b in small_poly(3), c in small_poly(3)) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let ab = &a * &b;
        let lhs = resultant(&BiPoly::lift(&ab), &BiPoly::lift(&c)).unwrap();
        let rhs = &resultant(&BiPoly::lift(&a), &BiPoly::lift(&c)).unwrap()
            * &resultant(&BiPoly::lift(&b), &BiPoly::lift(&c)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_of_split_polynomials(r in prop::collection::vec(-4i64..=4, 1..=3), s in prop::collection::vec(-4i64..=4, 1..=3)) {
        let monic = |roots: &[i64]| roots.iter().fold(Poly::one(), |acc, &t| &acc * &poly_from(&[-t, 1]));
        let expected: i64 = r.iter().flat_map(|&x| s.iter().map(move |&y| x - y)).product();
        let got = resultant(&BiPoly::lift(&monic(&r)), &BiPoly::lift(&monic(&s))).unwrap();
        prop_assert_eq!(got, Poly::constant(int(expected)));
    }

    #[test]
    fn reconstruction_round_trip(f in any_ratfun()) {
        let d = f.den().degree().unwrap_or(0);
        let e = f.num().degree().unwrap_or(0);
        let s = f.expand(d + e + 3);
        prop_assert_eq!(reconstruct_rational(&s, d, e).unwrap(), f);
    }

    #[test]
    fn power_sum_round_trip(den in denominator()) {
        let d = den.degree().unwrap_or(0);
        let upto = d + 3;
        let p = symfun::elementary_to_power(&den, upto);
        let e = symfun::power_to_elementary(&p, upto);
        prop_assert_eq!(e, symfun::elementary_from_denominator(&den, upto));
    }

    #[test]
    fn division_round_trip(a in small_poly(6), b in small_poly(3)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree() < b.degree() || r.is_zero());
    }

    #[test]
    fn proper_split_resums(f in any_ratfun()) {
        let (p, r) = f.proper_split();
        prop_assert!(r.is_proper());
        prop_assert_eq!(&RatFun::from_poly(p) + &r, f);
    }

    #[test]
    fn binomial_degree_bound(a in any_ratfun(), b in any_ratfun()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let plan = convolve::ProductPlan::binomial(&a, &b, Method::Resultant).unwrap();
        let p = convolve::binomial_product(&a, &b).unwrap();
        prop_assert!(p.num().degree().is_none_or(|d| d <= plan.num_deg_bound));
        prop_assert!(plan.den_bound.exact_div(p.den()).is_ok());
    }
}

#[test]
fn resultant_against_evaluation() {
    // Res(y − c, g) = g(c) for monic linear first argument
    let g = poly_from(&[-1, -1, 1]);
    for c in -3..=3 {
        let r = resultant(&BiPoly::lift(&poly_from(&[-c, 1])), &BiPoly::lift(&g)).unwrap();
        assert_eq!(r, Poly::constant(g.eval(&int(c))));
    }
}

#[test]
fn series_brute_force_helpers_agree() {
    let a = RatFun::from_ints(&[0, 1], &[1, -1, -1]).unwrap();
    let s: Series = a.expand(10);
    assert_eq!(s.binomial_convolution(&s).into_coeffs(), brute_binomial(&a, &a, 10));
}
