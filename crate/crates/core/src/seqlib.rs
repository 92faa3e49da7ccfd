//! Named generating functions and a catalog of convolution identities.
//!
//! Every identity is checked twice: as an exact equality of reduced rational
//! functions, and coefficientwise to order [`ORDER`] against a scalar formula
//! evaluated on sequences built without any product engine.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::convolve::{self, Method};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfun::{RatFun, Series};
use crate::rational::{self, int, rat, Rational};

/// Number of coefficients compared per identity.
pub const ORDER: usize = 40;

/// Seed of the sampled parameter grids.
pub const GRID_SEED: u64 = 0x5eed_0b1d;

fn rf(num: &[i64], den: &[i64]) -> RatFun {
    RatFun::from_ints(num, den).expect("catalog generating functions have den(0) = 1")
}

/// `x/(1−x−x²)`.
pub fn fib() -> RatFun {
    rf(&[0, 1], &[1, -1, -1])
}

/// `(2−x)/(1−x−x²)`.
pub fn lucas() -> RatFun {
    rf(&[2, -1], &[1, -1, -1])
}

/// `x/(1−2x−x²)`.
pub fn pell() -> RatFun {
    rf(&[0, 1], &[1, -2, -1])
}

/// Companion Pell numbers, `(2−2x)/(1−2x−x²)`.
pub fn pell_lucas() -> RatFun {
    rf(&[2, -2], &[1, -2, -1])
}

/// `x/(1−x−x²−x³)`.
pub fn trib() -> RatFun {
    rf(&[0, 1], &[1, -1, -1, -1])
}

/// Tribonacci recurrence with `T_0, T_1, T_2 = s0, s1, s2`:
/// `(a + bx + cx²)/(1−x−x²−x³)` with `a = s0`, `b = s1−s0`, `c = s2−s1−s0`.
pub fn trib_with(s0: &Rational, s1: &Rational, s2: &Rational) -> RatFun {
    let num = Poly::from_coeffs(alloc::vec![s0.clone(), s1 - s0, s2 - s1 - s0]);
    RatFun::new(num, Poly::from_ints(&[1, -1, -1, -1])).expect("den(0) = 1")
}

/// `(3−x²)/(1−x²−x³)`.
pub fn perrin() -> RatFun {
    rf(&[3, 0, -1], &[1, 0, -1, -1])
}

/// `(3−x²)/(1−x²−ax³)`.
pub fn perrin_q(a: &Rational) -> RatFun {
    let den = Poly::from_coeffs(alloc::vec![int(1), int(0), int(-1), -a.clone()]);
    RatFun::new(Poly::from_ints(&[3, 0, -1]), den).expect("den(0) = 1")
}

/// `x/(1−x−2x²)`.
pub fn jacobsthal() -> RatFun {
    rf(&[0, 1], &[1, -1, -2])
}

/// `(2−x)/(1−x−2x²)`.
pub fn jacobsthal_lucas() -> RatFun {
    rf(&[2, -1], &[1, -1, -2])
}

/// `(1−2x³)/(1−8x³+4x⁴)`.
pub fn quartic_r() -> RatFun {
    rf(&[1, 0, 0, -2], &[1, 0, 0, -8, 4])
}

/// `(2−ax)/(1−ax−bx²)`.
pub fn lucas_type(a: &Rational, b: &Rational) -> RatFun {
    let num = Poly::from_coeffs(alloc::vec![int(2), -a.clone()]);
    let den = Poly::from_coeffs(alloc::vec![int(1), -a.clone(), -b.clone()]);
    RatFun::new(num, den).expect("den(0) = 1")
}

/// `x/(1−ax−bx²)`.
pub fn second_order(a: &Rational, b: &Rational) -> RatFun {
    let den = Poly::from_coeffs(alloc::vec![int(1), -a.clone(), -b.clone()]);
    RatFun::new(Poly::x(), den).expect("den(0) = 1")
}

/// Squares of the Fibonacci numbers, `(x−x²)/(1−2x−2x²+x³)`.
pub fn fib_squares() -> RatFun {
    rf(&[0, 1, -1], &[1, -2, -2, 1])
}

/// `F_n` for any integer `n`, with `F_{−n} = (−1)^(n−1) F_n`.
pub fn fibonacci(n: i64) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n.unsigned_abs() {
        let next = &a + &b;
        a = core::mem::replace(&mut b, next);
    }
    if n < 0 && n % 2 == 0 {
        -a
    } else {
        a
    }
}

/// `L_n` for any integer `n`, with `L_{−n} = (−1)^n L_n`.
pub fn lucas_number(n: i64) -> BigInt {
    let l = fibonacci(n.abs() - 1) + fibonacci(n.abs() + 1);
    if n < 0 && n % 2 != 0 {
        -l
    } else {
        l
    }
}

fn parity_sign(k: i64) -> Rational {
    if k.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

fn section_den(p: i64) -> Poly {
    Poly::from_coeffs(alloc::vec![int(1), -big(lucas_number(p)), parity_sign(p)])
}

/// `Σ F_{pn+q} xⁿ = (F_q + (−1)^q F_{p−q} x)/(1 − L_p x + (−1)^p x²)`.
pub fn fibonacci_multisection(p: i64, q: i64) -> RatFun {
    let num = Poly::from_coeffs(alloc::vec![big(fibonacci(q)), parity_sign(q) * big(fibonacci(p - q))]);
    RatFun::from_fraction(num, section_den(p)).expect("den(0) = 1")
}

/// `Σ L_{pn+q} xⁿ = (L_q − (−1)^q L_{p−q} x)/(1 − L_p x + (−1)^p x²)`.
pub fn lucas_multisection(p: i64, q: i64) -> RatFun {
    let num = Poly::from_coeffs(alloc::vec![big(lucas_number(q)), -parity_sign(q) * big(lucas_number(p - q))]);
    RatFun::from_fraction(num, section_den(p)).expect("den(0) = 1")
}

/// A generating function from the registry with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGF {
    pub name: String,
    pub params: Vec<Rational>,
    pub gf: RatFun,
}

/// Registry entry: name, accepted parameter counts and a short description.
#[derive(Clone, Copy, Debug)]
pub struct SequenceInfo {
    pub name: &'static str,
    pub arities: &'static [usize],
    pub description: &'static str,
}

pub const SEQUENCES: &[SequenceInfo] = &[
    SequenceInfo { name: "fib", arities: &[0], description: "Fibonacci x/(1-x-x^2)" },
    SequenceInfo { name: "lucas", arities: &[0], description: "Lucas (2-x)/(1-x-x^2)" },
    SequenceInfo { name: "pell", arities: &[0], description: "Pell x/(1-2x-x^2)" },
    SequenceInfo { name: "pell_lucas", arities: &[0], description: "companion Pell (2-2x)/(1-2x-x^2)" },
    SequenceInfo { name: "trib", arities: &[0, 3], description: "tribonacci; trib(s0,s1,s2) sets T_0, T_1, T_2" },
    SequenceInfo { name: "perrin", arities: &[0], description: "Perrin (3-x^2)/(1-x^2-x^3)" },
    SequenceInfo { name: "jacobsthal", arities: &[0], description: "Jacobsthal x/(1-x-2x^2)" },
    SequenceInfo { name: "jacobsthal_lucas", arities: &[0], description: "Jacobsthal-Lucas (2-x)/(1-x-2x^2)" },
    SequenceInfo { name: "q", arities: &[1], description: "q(a) = (3-x^2)/(1-x^2-a*x^3)" },
    SequenceInfo { name: "r", arities: &[0], description: "(1-2x^3)/(1-8x^3+4x^4)" },
    SequenceInfo { name: "g", arities: &[2], description: "g(a,b) = (2-a*x)/(1-a*x-b*x^2)" },
    SequenceInfo { name: "second", arities: &[2], description: "second(a,b) = x/(1-a*x-b*x^2)" },
    SequenceInfo { name: "geom", arities: &[1], description: "geom(a) = 1/(1-a*x)" },
    SequenceInfo { name: "fibsq", arities: &[0], description: "Fibonacci squares (x-x^2)/(1-2x-2x^2+x^3)" },
    SequenceInfo { name: "fibsec", arities: &[2], description: "fibsec(p,q): sum of F_(pn+q) x^n, integers p, q" },
    SequenceInfo { name: "lucsec", arities: &[2], description: "lucsec(p,q): sum of L_(pn+q) x^n, integers p, q" },
];

fn integer_param(v: &Rational, name: &str) -> Result<i64> {
    if !v.is_integer() {
        return Err(Error::InvalidInput(format!("{name} needs integer parameters, got {v}")));
    }
    i64::try_from(v.to_integer()).map_err(|_| Error::InvalidInput(format!("{name} parameter {v} out of range")))
}

/// Looks up a named generating function.
pub fn named(name: &str, params: &[Rational]) -> Result<NamedGF> {
    let info = SEQUENCES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::InvalidInput(format!("unknown sequence `{name}`")))?;
    if !info.arities.contains(&params.len()) {
        return Err(Error::InvalidInput(format!(
            "`{name}` takes {:?} parameters, got {}",
            info.arities,
            params.len()
        )));
    }
    let gf = match (name, params) {
        ("fib", _) => fib(),
        ("lucas", _) => lucas(),
        ("pell", _) => pell(),
        ("pell_lucas", _) => pell_lucas(),
        ("trib", []) => trib(),
        ("trib", [s0, s1, s2]) => trib_with(s0, s1, s2),
        ("perrin", _) => perrin(),
        ("jacobsthal", _) => jacobsthal(),
        ("jacobsthal_lucas", _) => jacobsthal_lucas(),
        ("q", [a]) => perrin_q(a),
        ("r", _) => quartic_r(),
        ("g", [a, b]) => lucas_type(a, b),
        ("second", [a, b]) => second_order(a, b),
        ("geom", [a]) => RatFun::geometric(a.clone()),
        ("fibsq", _) => fib_squares(),
        ("fibsec", [p, q]) => fibonacci_multisection(integer_param(p, name)?, integer_param(q, name)?),
        ("lucsec", [p, q]) => lucas_multisection(integer_param(p, name)?, integer_param(q, name)?),
        _ => unreachable!("arity checked above"),
    };
    Ok(NamedGF { name: name.to_owned(), params: params.to_vec(), gf })
}

/// Which product an identity is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    Binomial,
    Hadamard,
}

impl Group {
    pub fn name(self) -> &'static str {
        match self {
            Group::Binomial => "binomial",
            Group::Hadamard => "hadamard",
        }
    }
}

/// Catalog entry.
#[derive(Clone, Copy, Debug)]
pub struct IdentityInfo {
    pub id: &'static str,
    pub title: &'static str,
    pub group: Group,
}

pub const IDENTITIES: &[IdentityInfo] = &[
    IdentityInfo { id: "a", title: "sum C(n,k) F_k F_(n-k) = (2^n L_n - 2)/5", group: Group::Binomial },
    IdentityInfo {
        id: "b",
        title: "sum C(n,k) F_(p-1)^k F_(p+1)^(n-k) F_k F_(n-k) = (L_p^n L_n - L_(pn))/5",
        group: Group::Binomial,
    },
    IdentityInfo { id: "c", title: "sum C(n,2k) F_(n-2k) = ((-1)^(n-1) F_n + F_(2n))/2", group: Group::Binomial },
    IdentityInfo {
        id: "d",
        title: "10 sum C(n,2k) 5^k F_(n-2k)^2 = L_(2n) + (3^n + (-2)^(n+1)) L_n",
        group: Group::Binomial,
    },
    IdentityInfo { id: "e", title: "g = (2-ax)/(1-ax-bx^2): g (.) g = 2/(1-ax) + g(2x)", group: Group::Binomial },
    IdentityInfo { id: "f", title: "tribonacci self-convolution and its cubic split", group: Group::Binomial },
    IdentityInfo { id: "g", title: "Perrin-type Q (.) Q = Q(2x) + 2Q(-x)", group: Group::Binomial },
    IdentityInfo { id: "h", title: "Jacobsthal 3 J (.) J = J(2x) + 2J(-x)", group: Group::Binomial },
    IdentityInfo { id: "i", title: "R (.) R = (R(2x) + P(4x^2))/4", group: Group::Binomial },
    IdentityInfo { id: "j", title: "x/(1-ax-bx^2) * x/(1-cx-dx^2) closed form", group: Group::Hadamard },
    IdentityInfo { id: "k", title: "Fibonacci squares F * F", group: Group::Hadamard },
    IdentityInfo { id: "l", title: "worked binomial products", group: Group::Binomial },
];

/// Outcome of one catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// One record per identity: its parameter grid, how many equalities were
/// checked, and the first failing check if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub title: &'static str,
    pub group: Group,
    pub params: Vec<String>,
    pub checks: usize,
    pub status: Status,
    pub witness: Option<String>,
}

/// Records ordered by identity id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<IdentityRecord>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status == Status::Pass)
    }

    pub fn get(&self, id: &str) -> Option<&IdentityRecord> {
        self.records.iter().find(|r| r.id == id)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            writeln!(f, "({}) {} [{}]: {} ({} checks)", r.id, r.title, r.group.name(), r.status.name(), r.checks)?;
            if !r.params.is_empty() {
                writeln!(f, "    params: {}", r.params.join("; "))?;
            }
            if let Some(w) = &r.witness {
                writeln!(f, "    witness: {w}")?;
            }
        }
        let failed = self.records.iter().filter(|r| r.status == Status::Fail).count();
        write!(f, "{} identities, {} failed", self.records.len(), failed)
    }
}

/// Suite configuration. `only` holds identity ids or group names (empty
/// runs everything); `lucas` replaces the Lucas generating function used on
/// right-hand sides, which lets tests confirm that a wrong input is caught.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub only: Vec<String>,
    pub lucas: Option<RatFun>,
}

impl SuiteOptions {
    pub fn only<S: AsRef<str>>(ids: &[S]) -> SuiteOptions {
        SuiteOptions { only: ids.iter().map(|s| s.as_ref().to_owned()).collect(), lucas: None }
    }
}

fn selected(opts: &SuiteOptions) -> Result<Vec<&'static IdentityInfo>> {
    if opts.only.is_empty() {
        return Ok(IDENTITIES.iter().collect());
    }
    for key in &opts.only {
        let known = IDENTITIES.iter().any(|i| i.id == key || i.group.name() == key);
        if !known {
            return Err(Error::InvalidInput(format!("unknown identity or group `{key}`")));
        }
    }
    Ok(IDENTITIES
        .iter()
        .filter(|i| opts.only.iter().any(|k| k == i.id || k == i.group.name()))
        .collect())
}

/// Runs the selected identities. Failures are reported, not raised; the
/// only error is an unknown id in `opts.only`.
pub fn run_identity_suite(opts: &SuiteOptions) -> Result<Report> {
    let ctx = Ctx { lucas: opts.lucas.clone().unwrap_or_else(lucas) };
    let records = selected(opts)?
        .into_iter()
        .map(|info| {
            let mut c = Checker::default();
            match info.id {
                "a" => check_a(&ctx, &mut c),
                "b" => check_b(&ctx, &mut c),
                "c" => check_c(&mut c),
                "d" => check_d(&ctx, &mut c),
                "e" => check_e(&mut c),
                "f" => check_f(&mut c),
                "g" => check_g(&mut c),
                "h" => check_h(&mut c),
                "i" => check_i(&mut c),
                "j" => check_j(&mut c),
                "k" => check_k(&mut c),
                "l" => check_l(&mut c),
                _ => unreachable!("catalog ids are exhaustive"),
            }
            c.finish(info)
        })
        .collect();
    Ok(Report { records })
}

struct Ctx {
    lucas: RatFun,
}

#[derive(Default)]
struct Checker {
    params: Vec<String>,
    current: String,
    checks: usize,
    witness: Option<String>,
}

impl Checker {
    fn case(&mut self, p: String) {
        self.current = p.clone();
        self.params.push(p);
    }

    fn fail(&mut self, what: String) {
        if self.witness.is_none() {
            self.witness = Some(if self.current.is_empty() { what } else { format!("[{}] {what}", self.current) });
        }
    }

    fn gf(&mut self, label: &str, lhs: &Result<RatFun>, rhs: &Result<RatFun>) {
        self.checks += 1;
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                if l != r {
                    self.fail(format!("{label}: {l} != {r}"));
                } else if l.expand(ORDER) != r.expand(ORDER) {
                    self.fail(format!("{label}: equal functions with different expansions"));
                }
            }
            (Err(e), _) | (_, Err(e)) => self.fail(format!("{label}: {e}")),
        }
    }

    fn poly(&mut self, label: &str, lhs: &Poly, rhs: &Poly) {
        self.checks += 1;
        if lhs != rhs {
            self.fail(format!("{label}: {lhs} != {rhs}"));
        }
    }

    fn seq(&mut self, label: &str, lhs: &[Rational], rhs: &[Rational]) {
        self.checks += 1;
        if let Some(n) = (0..lhs.len().max(rhs.len())).find(|&n| lhs.get(n) != rhs.get(n)) {
            let show = |v: Option<&Rational>| v.map_or("-".to_string(), |r| r.to_string());
            self.fail(format!("{label}: coefficient {n} is {} vs {}", show(lhs.get(n)), show(rhs.get(n))));
        }
    }

    /// `product` expanded against the brute-force coefficients, and those
    /// against the closed scalar formula.
    fn coefficients(&mut self, product: &Result<RatFun>, brute: &[Rational], formula: &[Rational]) {
        match product {
            Ok(p) => self.seq("expansion vs direct convolution", p.expand(ORDER).coeffs(), brute),
            Err(e) => {
                self.checks += 1;
                self.fail(format!("product: {e}"));
            }
        }
        self.seq("direct convolution vs scalar formula", brute, formula);
    }

    fn finish(self, info: &IdentityInfo) -> IdentityRecord {
        IdentityRecord {
            id: info.id,
            title: info.title,
            group: info.group,
            params: self.params,
            checks: self.checks,
            status: if self.witness.is_none() { Status::Pass } else { Status::Fail },
            witness: self.witness,
        }
    }
}

fn bprod(a: &RatFun, b: &RatFun) -> Result<RatFun> {
    convolve::binomial_product(a, b)
}

fn hprod(a: &RatFun, b: &RatFun) -> Result<RatFun> {
    convolve::hadamard_product(a, b)
}

fn eleventh(r: &RatFun) -> RatFun {
    r.scale(&rat(1, 11))
}

fn ok(r: RatFun) -> Result<RatFun> {
    Ok(r)
}

fn frac(num: &[i64], den: &[i64]) -> Result<RatFun> {
    RatFun::from_fraction(Poly::from_ints(num), Poly::from_ints(den))
}

fn fib_seq(len: usize) -> Vec<Rational> {
    (0..len as i64).map(|n| big(fibonacci(n))).collect()
}

fn lucas_seq(len: usize) -> Vec<Rational> {
    (0..len as i64).map(|n| big(lucas_number(n))).collect()
}

fn powers(base: &Rational, len: usize) -> Vec<Rational> {
    (0..len).map(|n| rational::pow(base, n)).collect()
}

fn termwise(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}

fn conv(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    Series::new(a.to_vec()).binomial_convolution(&Series::new(b.to_vec())).into_coeffs()
}

fn expand(f: &RatFun) -> Vec<Rational> {
    f.expand(ORDER).into_coeffs()
}

fn check_a(ctx: &Ctx, c: &mut Checker) {
    let lhs = bprod(&fib(), &fib());
    let rhs = (&ctx.lucas.compose_scale(&int(2)) - &RatFun::geometric(int(1)).scale(&int(2))).scale(&rat(1, 5));
    c.gf("F (.) F", &lhs, &ok(rhs));
    let f = fib_seq(ORDER);
    let l = lucas_seq(ORDER);
    let formula: Vec<Rational> =
        (0..ORDER).map(|n| (rational::pow(&int(2), n) * &l[n] - int(2)) * rat(1, 5)).collect();
    c.coefficients(&lhs, &conv(&f, &f), &formula);
}

fn check_b(ctx: &Ctx, c: &mut Checker) {
    let f = fib_seq(ORDER);
    let l = lucas_seq(ORDER);
    for p in -3i64..=5 {
        c.case(format!("p={p}"));
        let a = big(fibonacci(p - 1));
        let b = big(fibonacci(p + 1));
        let lp = big(lucas_number(p));
        let lhs = bprod(&fib().compose_scale(&a), &fib().compose_scale(&b)).map(|r| r.scale(&int(5)));
        let rhs = &ctx.lucas.compose_scale(&lp) - &lucas_multisection(p, 0);
        c.gf("5 f(ax) (.) f(bx)", &lhs, &ok(rhs));
        // general two-parameter form, before a, b are specialised
        let s = &a + &b;
        let two = Poly::from_coeffs(alloc::vec![int(2), -s.clone()]);
        let d1 = Poly::from_coeffs(alloc::vec![int(1), -s.clone(), -(&s * &s)]);
        let d2 = Poly::from_coeffs(alloc::vec![int(1), -s.clone(), -(&a * &a - int(3) * &a * &b + &b * &b)]);
        let general = RatFun::new(two.clone(), d1).and_then(|x| Ok(&x - &RatFun::new(two, d2)?));
        c.gf("5 f(ax) (.) f(bx), general form", &lhs, &general);
        let left = termwise(&powers(&a, ORDER), &f);
        let right = termwise(&powers(&b, ORDER), &f);
        let brute: Vec<Rational> = conv(&left, &right).into_iter().map(|v| v * int(5)).collect();
        let formula: Vec<Rational> = (0..ORDER)
            .map(|n| rational::pow(&lp, n) * &l[n] - big(lucas_number(p * n as i64)))
            .collect();
        c.coefficients(&lhs, &brute, &formula);
    }
}

fn check_c(c: &mut Checker) {
    let even = rf(&[1], &[1, 0, -1]);
    let lhs = bprod(&fib(), &even);
    c.gf("F (.) 1/(1-x^2)", &lhs, &frac(&[0, 1, -1], &[1, -2, -3, 4, -1]));
    let halves = frac(&[0, 1], &[1, 1, -1]).and_then(|x| Ok((&x + &frac(&[0, 1], &[1, -3, 1])?).scale(&rat(1, 2))));
    c.gf("partial fractions", &lhs, &halves);
    let sections = (&fibonacci_multisection(2, 0) - &fib().compose_scale(&int(-1))).scale(&rat(1, 2));
    c.gf("multisection form", &lhs, &ok(sections));
    let f = fib_seq(2 * ORDER);
    let ones: Vec<Rational> = (0..ORDER).map(|n| int(if n % 2 == 0 { 1 } else { 0 })).collect();
    let formula: Vec<Rational> = (0..ORDER)
        .map(|n| (parity_sign(n as i64 - 1) * &f[n] + &f[2 * n]) * rat(1, 2))
        .collect();
    c.coefficients(&lhs, &conv(&f[..ORDER], &ones), &formula);
}

fn check_d(ctx: &Ctx, c: &mut Checker) {
    let ten = rf(&[10], &[1, 0, -5]);
    let lhs = bprod(&fib_squares(), &ten);
    c.gf(
        "F^2 (.) 10/(1-5x^2)",
        &lhs,
        // the commonly printed numerator x - 3x^2 - 2x^4 - 6x^5 omits the factor 10
        &frac(&[0, 1, -3, 0, -2, -6], &[1, -4, -15, 50, 35, -114, 36]).map(|r| r.scale(&int(10))),
    );
    let parts = frac(&[2, -3], &[1, -3, 1]).and_then(|p1| {
        let p2 = frac(&[4, 4], &[1, 2, -4])?;
        let p3 = frac(&[2, -3], &[1, -3, -9])?;
        Ok(&(&p1 - &p2) + &p3)
    });
    c.gf("partial fractions", &lhs, &parts);
    let named = &(&lucas_multisection(2, 0) - &ctx.lucas.compose_scale(&int(-2)).scale(&int(2)))
        + &ctx.lucas.compose_scale(&int(3));
    c.gf("Lucas form", &lhs, &ok(named));
    let f = fib_seq(ORDER);
    let l = lucas_seq(2 * ORDER);
    let squares = termwise(&f, &f);
    let tens: Vec<Rational> = (0..ORDER)
        .map(|n| if n % 2 == 0 { int(10) * rational::pow(&int(5), n / 2) } else { int(0) })
        .collect();
    let formula: Vec<Rational> = (0..ORDER)
        .map(|n| &l[2 * n] + (rational::pow(&int(3), n) + rational::pow(&int(-2), n + 1)) * &l[n])
        .collect();
    c.coefficients(&lhs, &conv(&squares, &tens), &formula);
}

/// Nonzero integers in `-5..=5` from the fixed-seed generator.
fn sample_nonzero(rng: &mut ChaCha8Rng) -> i64 {
    loop {
        let v: i64 = rng.gen_range(-5..=5);
        if v != 0 {
            return v;
        }
    }
}

/// The sampled `(a, b)` pairs of identity (e).
pub fn sampled_pairs() -> Vec<(i64, i64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(GRID_SEED);
    (0..5).map(|_| (sample_nonzero(&mut rng), sample_nonzero(&mut rng))).collect()
}

/// The sampled `(a, b, c, d)` tuples of identity (j).
pub fn sampled_quadruples() -> Vec<[i64; 4]> {
    let mut rng = ChaCha8Rng::seed_from_u64(GRID_SEED ^ 0x4ad4);
    (0..10).map(|_| core::array::from_fn(|_| sample_nonzero(&mut rng))).collect()
}

fn check_e(c: &mut Checker) {
    let mut grid = alloc::vec![(1, 1), (1, 2), (2, 1)];
    grid.extend(sampled_pairs());
    for (a, b) in grid {
        c.case(format!("a={a},b={b}"));
        let (ar, br) = (int(a), int(b));
        let g = lucas_type(&ar, &br);
        let lhs = bprod(&g, &g);
        let rhs = &RatFun::geometric(ar.clone()).scale(&int(2)) + &g.compose_scale(&int(2));
        c.gf("g (.) g", &lhs, &ok(rhs));
        let gs = linear(&[int(2), ar.clone()], &[ar.clone(), br.clone()], ORDER);
        let formula: Vec<Rational> = (0..ORDER)
            .map(|n| int(2) * rational::pow(&ar, n) + rational::pow(&int(2), n) * &gs[n])
            .collect();
        c.coefficients(&lhs, &conv(&gs, &gs), &formula);
    }
}

/// `s_n = Σ rec[i]·s_{n−1−i}` past the given initial values.
fn linear(init: &[Rational], rec: &[Rational], len: usize) -> Vec<Rational> {
    let mut s: Vec<Rational> = init.to_vec();
    while s.len() < len {
        let n = s.len();
        let next = rec
            .iter()
            .enumerate()
            .filter(|(i, _)| n > *i)
            .fold(Rational::zero(), |acc, (i, r)| acc + r * &s[n - 1 - i]);
        s.push(next);
    }
    s.truncate(len);
    s
}

fn tribonacci_seq(s0: i64, s1: i64, s2: i64) -> Vec<Rational> {
    linear(&[int(s0), int(s1), int(s2)], &[int(1), int(1), int(1)], ORDER)
}

fn check_f(c: &mut Checker) {
    let t = trib();
    let lhs = bprod(&t, &t);
    c.gf(
        "T (.) T",
        &lhs,
        &frac(&[0, 0, 2, -2, -2, -4], &[1, -4, 0, 2, 12, -8, -16]),
    );
    let first = RatFun::new(Poly::from_ints(&[1, 1, 10]), Poly::from_ints(&[1, -2, -4, -8])).map(|r| eleventh(&r));
    let second = RatFun::new(Poly::from_ints(&[1, 1, -8]), Poly::from_ints(&[1, -2, 0, 2])).map(|r| eleventh(&r));
    let split = first.clone().and_then(|f| Ok(&f - &second.clone()?));
    c.gf("cubic split", &lhs, &split);
    let t2310 = trib_with(&int(2), &int(3), &int(10)).compose_scale(&int(2)).scale(&rat(1, 22));
    c.gf("first term as 2^n T^(2,3,10)/22", &first, &ok(t2310));
    let shifted = frac(&[1, 3, -6], &[1, 1, -1, 1]);
    let aux = shifted.clone().and_then(|s| bprod(&RatFun::geometric(int(1)), &s));
    c.gf("auxiliary 1/(1-x) product", &frac(&[1, 1, -8], &[1, -2, 0, 2]), &aux);
    c.gf("T^(1,-2,-7)(-x)", &shifted, &ok(trib_with(&int(1), &int(-2), &int(-7)).compose_scale(&int(-1))));
    c.gf("-T^(-1,2,7)(-x)", &shifted, &ok(-trib_with(&int(-1), &int(2), &int(7)).compose_scale(&int(-1))));
    match convolve::komatsu_decompose(&t, &t) {
        Ok((u, v)) => {
            c.poly("u", &u, &Poly::from_ints(&[1, 1, 10]).scale(&rat(1, 11)));
            c.poly("v", &v, &Poly::from_ints(&[-1, -3, 6]).scale(&rat(1, 11)));
            let den = t.den().clone();
            c.gf("reassembled", &lhs, &convolve::komatsu_reassemble(&den, &u, &v));
        }
        Err(e) => {
            c.checks += 1;
            c.fail(format!("cubic split: {e}"));
        }
    }
    let ts = tribonacci_seq(0, 1, 1);
    let a = tribonacci_seq(2, 3, 10);
    let b: Vec<Rational> = tribonacci_seq(-1, 2, 7)
        .into_iter()
        .enumerate()
        .map(|(k, v)| parity_sign(k as i64) * v)
        .collect();
    let inner = conv(&b, &alloc::vec![int(1); ORDER]);
    let formula: Vec<Rational> = (0..ORDER)
        .map(|n| (rational::pow(&int(2), n) * &a[n] + int(2) * &inner[n]) * rat(1, 22))
        .collect();
    c.coefficients(&lhs, &conv(&ts, &ts), &formula);
}

fn doubling_formula(seq: &[Rational]) -> Vec<Rational> {
    (0..seq.len())
        .map(|n| (rational::pow(&int(2), n) + int(2) * rational::sign_pow(n)) * &seq[n])
        .collect()
}

fn check_g(c: &mut Checker) {
    c.case("Perrin".into());
    let p = perrin();
    let lhs = bprod(&p, &p);
    c.gf(
        "P (.) P",
        &lhs,
        &frac(&[3, 0, -11, -15, 4, 4], &[1, 0, -5, -7, 4, 4, -8]).map(|r| r.scale(&int(3))),
    );
    let parts = frac(&[3, 0, -4], &[1, 0, -4, -8]).and_then(|x| Ok(&x + &frac(&[6, 0, -2], &[1, 0, -1, 1])?));
    c.gf("partial fractions", &lhs, &parts);
    let rhs = &p.compose_scale(&int(2)) + &p.compose_scale(&int(-1)).scale(&int(2));
    c.gf("P(2x) + 2P(-x)", &lhs, &ok(rhs));
    let reassembled =
        convolve::komatsu_decompose(&p, &p).and_then(|(u, v)| convolve::komatsu_reassemble(p.den(), &u, &v));
    c.gf("cubic split reassembled", &lhs, &reassembled);
    let ps = expand(&p);
    c.coefficients(&lhs, &conv(&ps, &ps), &doubling_formula(&ps));
    for a in [-2i64, -1, 1, 2, 3] {
        c.case(format!("Q with a={a}"));
        let q = perrin_q(&int(a));
        let lhs = bprod(&q, &q);
        let rhs = &q.compose_scale(&int(2)) + &q.compose_scale(&int(-1)).scale(&int(2));
        c.gf("Q (.) Q", &lhs, &ok(rhs));
        let qs = linear(&[int(3), int(0), int(2)], &[int(0), int(1), int(a)], ORDER);
        c.seq("Q expansion vs recurrence", &expand(&q), &qs);
        c.coefficients(&lhs, &conv(&qs, &qs), &doubling_formula(&qs));
    }
}

fn check_h(c: &mut Checker) {
    let j = jacobsthal();
    let lhs = bprod(&j, &j).map(|r| r.scale(&int(3)));
    let rhs = &j.compose_scale(&int(2)) + &j.compose_scale(&int(-1)).scale(&int(2));
    c.gf("3 J (.) J", &lhs, &ok(rhs));
    let js = linear(&[int(0), int(1)], &[int(1), int(2)], ORDER);
    let brute: Vec<Rational> = conv(&js, &js).into_iter().map(|v| v * int(3)).collect();
    c.coefficients(&lhs, &brute, &doubling_formula(&js));
}

fn check_i(c: &mut Checker) {
    let r = quartic_r();
    let lhs = bprod(&r, &r);
    let rhs = (&r.compose_scale(&int(2)) + &perrin().compose_monomial(&int(4), 2)).scale(&rat(1, 4));
    c.gf("R (.) R", &lhs, &ok(rhs));
    let rs = expand(&r);
    let ps = expand(&perrin());
    let formula: Vec<Rational> = (0..ORDER)
        .map(|n| {
            let even = if n % 2 == 0 { rational::pow(&int(4), n / 2) * &ps[n / 2] } else { int(0) };
            (rational::pow(&int(2), n) * &rs[n] + even) * rat(1, 4)
        })
        .collect();
    c.coefficients(&lhs, &conv(&rs, &rs), &formula);
}

fn check_j(c: &mut Checker) {
    let mut grid = alloc::vec![[1, 1, 2, 1], [1, 1, 1, 1]];
    grid.extend(sampled_quadruples());
    for [a, b, cc, d] in grid {
        c.case(format!("a={a},b={b},c={cc},d={d}"));
        let ra = second_order(&int(a), &int(b));
        let rb = second_order(&int(cc), &int(d));
        let lhs = hprod(&ra, &rb);
        let den = Poly::from_coeffs(alloc::vec![
            int(1),
            int(-a * cc),
            int(-(a * a * d + b * cc * cc + 2 * b * d)),
            int(-a * b * cc * d),
            int(b * b * d * d),
        ]);
        match convolve::hadamard_denominator(ra.den(), rb.den()) {
            Ok(res) => c.poly("resultant denominator", &res, &den),
            Err(e) => {
                c.checks += 1;
                c.fail(format!("resultant denominator: {e}"));
            }
        }
        let num = Poly::from_coeffs(alloc::vec![int(0), int(1), int(0), int(-b * d)]);
        c.gf("A * B", &lhs, &RatFun::from_fraction(num, den));
        for m in [Method::Symfun, Method::Pfrac, Method::Reconstruct] {
            c.gf(m.name(), &lhs, &convolve::hadamard_product_with(&ra, &rb, m));
        }
        let xs = linear(&[int(0), int(1)], &[int(a), int(b)], ORDER);
        let ys = linear(&[int(0), int(1)], &[int(cc), int(d)], ORDER);
        let brute = termwise(&xs, &ys);
        c.coefficients(&lhs, &brute, &termwise(&expand(&ra), &expand(&rb)));
    }
}

fn check_k(c: &mut Checker) {
    let lhs = hprod(&fib(), &fib());
    c.gf("F * F unreduced", &lhs, &frac(&[0, 1, 0, -1], &[1, -1, -4, -1, 1]));
    c.gf("F * F", &lhs, &ok(fib_squares()));
    let f = fib_seq(ORDER);
    let squares: Vec<Rational> = (0..ORDER as i64).map(|n| big(fibonacci(n).pow(2))).collect();
    c.coefficients(&lhs, &termwise(&f, &f), &squares);
}

fn check_l(c: &mut Checker) {
    let cases: [(&str, RatFun, RatFun, Result<RatFun>); 5] = [
        ("F (.) F", fib(), fib(), frac(&[0, 0, 2], &[1, -3, -2, 4])),
        (
            "x/((1-x)(1-2x)) (.) x/((1-3x)(1-5x))",
            rf(&[0, 1], &[1, -3, 2]),
            rf(&[0, 1], &[1, -8, 15]),
            RatFun::new(
                Poly::from_ints(&[0, 0, 2, -11]),
                [4, 5, 6, 7].iter().fold(Poly::one(), |acc, &r| &acc * &Poly::from_ints(&[1, -r])),
            ),
        ),
        (
            "x^3/(1-x) (.) 1/(1-2x)",
            rf(&[0, 0, 0, 1], &[1, -1]),
            rf(&[1], &[1, -2]),
            RatFun::new(Poly::from_ints(&[0, 0, 0, 1]), &Poly::from_ints(&[1, -2]).pow(3) * &Poly::from_ints(&[1, -3])),
        ),
        (
            "x^2/(1-x)^2 (.) x^2/(1-2x)^2",
            rf(&[0, 0, 1], &[1, -2, 1]),
            rf(&[0, 0, 1], &[1, -4, 4]),
            RatFun::new(
                Poly::from_ints(&[0, 0, 0, 0, 6, -30, 49, -27]),
                &(&Poly::from_ints(&[1, -1]).pow(2) * &Poly::from_ints(&[1, -2]).pow(2))
                    * &Poly::from_ints(&[1, -3]).pow(3),
            ),
        ),
        ("F (.) Pell", fib(), pell(), frac(&[0, 0, 2, -3], &[1, -6, 7, 6, -9])),
    ];
    for (name, a, b, expected) in cases {
        c.case(name.to_string());
        let lhs = bprod(&a, &b);
        c.gf(name, &lhs, &expected);
        let brute = conv(&expand(&a), &expand(&b));
        let formula = match &expected {
            Ok(e) => expand(e),
            Err(_) => Vec::new(),
        };
        c.coefficients(&lhs, &brute, &formula);
    }
    match convolve::binomial_denominator(fib().den(), pell().den()) {
        Ok(d) => c.poly("F (.) Pell resultant", &d, &Poly::from_ints(&[1, -6, 7, 6, -9])),
        Err(e) => {
            c.checks += 1;
            c.fail(format!("resultant: {e}"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signed_fibonacci_and_lucas() {
        let f: Vec<i64> = (-6..=6).map(|n| i64::try_from(fibonacci(n)).unwrap()).collect();
        assert_eq!(f, [-8, 5, -3, 2, -1, 1, 0, 1, 1, 2, 3, 5, 8]);
        let l: Vec<i64> = (-5..=5).map(|n| i64::try_from(lucas_number(n)).unwrap()).collect();
        assert_eq!(l, [-11, 7, -4, 3, -1, 2, 1, 3, 4, 7, 11]);
    }

    #[test]
    fn multisection_examples() {
        assert_eq!(fibonacci_multisection(1, 0), fib());
        assert_eq!(fibonacci_multisection(2, 0), rf(&[0, 1], &[1, -3, 1]));
        let c: Vec<Rational> = fibonacci_multisection(3, 1).expand(4).into_coeffs();
        assert_eq!(c, [int(1), int(3), int(13), int(55)]);
        assert_eq!(lucas_multisection(1, 0), lucas());
        assert_eq!(lucas_multisection(0, 0), rf(&[2], &[1, -1]));
    }

    #[test]
    fn registry_lookup() {
        assert_eq!(named("fib", &[]).unwrap().gf, fib());
        assert_eq!(named("trib", &[int(0), int(1), int(1)]).unwrap().gf, trib());
        assert_eq!(named("g", &[int(1), int(1)]).unwrap().gf, lucas());
        assert!(matches!(named("fib", &[int(1)]), Err(Error::InvalidInput(_))));
        assert!(matches!(named("nope", &[]), Err(Error::InvalidInput(_))));
        assert!(matches!(named("fibsec", &[rat(1, 2), int(0)]), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn filter_by_group() {
        let r = run_identity_suite(&SuiteOptions::only(&["hadamard"])).unwrap();
        let ids: Vec<&str> = r.records.iter().map(|r| r.id).collect();
        assert_eq!(ids, ["j", "k"]);
        assert!(r.passed(), "{r}");
        assert!(run_identity_suite(&SuiteOptions::only(&["zz"])).is_err());
    }

    #[test]
    fn grids_are_fixed() {
        assert_eq!(sampled_pairs(), sampled_pairs());
        assert_eq!(sampled_quadruples().len(), 10);
        assert!(sampled_quadruples().iter().flatten().all(|&v| v != 0 && (-5..=5).contains(&v)));
    }
}
