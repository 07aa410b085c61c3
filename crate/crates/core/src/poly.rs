//! Coefficient rings: Laurent polynomials in one variable over arbitrary
//! precision integers, reduced rational functions, and truncated power
//! series with exact rational coefficients.
//!
//! The same Laurent type serves both the `t` of Hall-Littlewood theory and
//! the `q` of the affine Hecke algebra; the conversions `t = q^2` and
//! `t = q^{-2}` are explicit substitutions ([`ZPoly::subst_power`]) so a
//! reader of any call site can see which convention is in force.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial with `BigInt` coefficients.
///
/// Canonical form: no zero coefficients are stored, so `==` is structural
/// equality of values.
#[derive(Clone, PartialEq, Eq, Default, Debug, PartialOrd, Ord)]
pub struct ZPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        ZPoly::term(0, 1)
    }

    /// The single term `c * x^e`.
    pub fn term(e: i64, c: i64) -> Self {
        ZPoly::term_big(e, BigInt::from(c))
    }

    pub fn term_big(e: i64, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        ZPoly { terms }
    }

    /// The variable itself, `x^1`.
    pub fn var() -> Self {
        ZPoly::term(1, 1)
    }

    pub fn constant(c: i64) -> Self {
        ZPoly::term(0, c)
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        let mut p = ZPoly::zero();
        for &(e, c) in pairs {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(*e, c.clone());
        }
        r
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(*e, -c.clone());
        }
        r
    }

    pub fn neg(&self) -> ZPoly {
        let mut r = ZPoly::zero();
        for (e, c) in &self.terms {
            r.terms.insert(*e, -c.clone());
        }
        r
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        let mut r = ZPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                r.add_term(e1 + e2, c1 * c2);
            }
        }
        r
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        let mut r = ZPoly::zero();
        for (e, v) in &self.terms {
            r.terms.insert(*e, v * c);
        }
        r
    }

    pub fn scale_i64(&self, c: i64) -> ZPoly {
        self.scale(&BigInt::from(c))
    }

    /// Multiply by `x^s`.
    pub fn shift(&self, s: i64) -> ZPoly {
        let mut r = ZPoly::zero();
        for (e, c) in &self.terms {
            r.terms.insert(e + s, c.clone());
        }
        r
    }

    /// Substitute `x -> x^k` (k may be negative; `k = -1` is the bar map
    /// `q -> q^{-1}`).
    pub fn subst_power(&self, k: i64) -> ZPoly {
        assert!(k != 0, "substitution power must be nonzero");
        let mut r = ZPoly::zero();
        for (e, c) in &self.terms {
            r.terms.insert(e * k, c.clone());
        }
        r
    }

    /// Evaluate at `x = 0`; requires no negative exponents.
    pub fn eval_at_zero(&self) -> BigInt {
        assert!(
            self.min_exp().map_or(true, |m| m >= 0),
            "cannot evaluate a Laurent polynomial with poles at 0"
        );
        self.coeff(0)
    }

    /// Evaluate at `x = 1` (sum of coefficients).
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact division; returns `None` when `other` does not divide `self`.
    pub fn divide_exact(&self, other: &ZPoly) -> Option<ZPoly> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        // Shift both to ordinary polynomials; Laurent units x^s are free.
        let ds = other.min_exp().unwrap();
        let ns = self.min_exp().unwrap();
        let d = other.shift(-ds);
        let mut rem = self.shift(-ns);
        let dlead_e = d.max_exp().unwrap();
        let dlead_c = d.coeff(dlead_e);
        let mut quot = ZPoly::zero();
        while !rem.is_zero() {
            let rl = rem.max_exp().unwrap();
            if rl < dlead_e {
                return None;
            }
            let rc = rem.coeff(rl);
            let (qc, r) = num_integer::div_rem(rc, dlead_c.clone());
            if !r.is_zero() {
                return None;
            }
            let qe = rl - dlead_e;
            quot.add_term(qe, qc.clone());
            rem = rem.sub(&d.mul(&ZPoly::term_big(qe, qc)));
        }
        Some(quot.shift(ns - ds))
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Strictly negative-exponent part, used by the Kazhdan-Lusztig solver.
    pub fn negative_part(&self) -> ZPoly {
        let mut r = ZPoly::zero();
        for (e, c) in &self.terms {
            if *e < 0 {
                r.terms.insert(*e, c.clone());
            }
        }
        r
    }

    /// Render with the given variable name, highest exponent first.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (e, c) in self.terms.iter().rev() {
            let mag = c.abs();
            if s.is_empty() {
                if c.is_negative() {
                    s.push('-');
                }
            } else if c.is_negative() {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || *e == 0;
            if show_coeff {
                s.push_str(&mag.to_string());
            }
            if *e != 0 {
                if show_coeff {
                    s.push('*');
                }
                s.push_str(var);
                if *e != 1 {
                    s.push_str(&format!("^{}", e));
                }
            }
        }
        s
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("t"))
    }
}

// --- integer polynomial gcd (primitive Euclid on dense vectors) ---

fn content(p: &ZPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p.terms.values() {
        g = num_integer::gcd(g, c.abs());
    }
    g
}

fn primitive_part(p: &ZPoly) -> ZPoly {
    let c = content(p);
    if c.is_zero() || c.is_one() {
        return p.clone();
    }
    p.divide_by_int(&c)
}

impl ZPoly {
    fn divide_by_int(&self, c: &BigInt) -> ZPoly {
        let mut r = ZPoly::zero();
        for (e, v) in &self.terms {
            let (q, rem) = num_integer::div_rem(v.clone(), c.clone());
            assert!(rem.is_zero(), "non-exact integer division of coefficients");
            r.add_term(*e, q);
        }
        r
    }
}

/// Gcd of two ordinary (nonnegative exponent) polynomials, primitive and
/// with positive leading coefficient.
fn poly_gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() {
        return normalize_sign(primitive_part(b));
    }
    if b.is_zero() {
        return normalize_sign(primitive_part(a));
    }
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    while !y.is_zero() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    normalize_sign(x)
}

fn normalize_sign(p: ZPoly) -> ZPoly {
    match p.max_exp() {
        Some(e) if p.coeff(e).is_negative() => p.neg(),
        _ => p,
    }
}

fn pseudo_rem(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let db = b.max_exp().unwrap();
    let lb = b.coeff(db);
    let mut r = a.clone();
    while let Some(dr) = r.max_exp() {
        if dr < db {
            break;
        }
        let lr = r.coeff(dr);
        r = r.scale(&lb).sub(&b.mul(&ZPoly::term_big(dr - db, lr)));
    }
    r
}

/// Reduced rational function `num/den` in one variable over the integers.
///
/// Canonical form: `den` is an ordinary polynomial with nonzero constant
/// term and positive leading coefficient, `gcd(num_shifted, den) = 1`, and
/// the pair has no common integer content. Laurent powers of the variable
/// live in `num`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatQ {
    num: ZPoly,
    den: ZPoly,
}

impl RatQ {
    pub fn new(num: ZPoly, den: ZPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatQ { num, den: ZPoly::one() };
        }
        // Make den an ordinary polynomial with nonzero constant term.
        let s = den.min_exp().unwrap();
        let mut den = den.shift(-s);
        let mut num = num.shift(-s);
        // Pull the monomial unit out of num before gcd.
        let t = num.min_exp().unwrap();
        let num0 = num.shift(-t);
        let g = poly_gcd(&num0, &den);
        if !g.is_one() {
            num = num0.divide_exact(&g).expect("gcd divides numerator").shift(t);
            den = den.divide_exact(&g).expect("gcd divides denominator");
        }
        let cn = content(&num);
        let cd = content(&den);
        let c = num_integer::gcd(cn, cd);
        if !c.is_one() {
            num = num.divide_by_int(&c);
            den = den.divide_by_int(&c);
        }
        if den.coeff(den.max_exp().unwrap()).is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatQ { num, den }
    }

    pub fn zero() -> Self {
        RatQ { num: ZPoly::zero(), den: ZPoly::one() }
    }

    pub fn one() -> Self {
        RatQ { num: ZPoly::one(), den: ZPoly::one() }
    }

    pub fn from_poly(p: ZPoly) -> Self {
        RatQ { num: p, den: ZPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        RatQ::from_poly(ZPoly::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &ZPoly {
        &self.num
    }

    pub fn denominator(&self) -> &ZPoly {
        &self.den
    }

    /// The underlying Laurent polynomial; panics when the denominator is
    /// not 1 (callers use this to certify that a computation stayed
    /// polynomial).
    pub fn expect_poly(&self) -> ZPoly {
        assert!(self.den.is_one(), "expected a Laurent polynomial, got denominator {}", self.den);
        self.num.clone()
    }

    pub fn add(&self, other: &RatQ) -> RatQ {
        RatQ::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RatQ) -> RatQ {
        RatQ::new(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> RatQ {
        RatQ { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &RatQ) -> RatQ {
        RatQ::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &RatQ) -> RatQ {
        assert!(!other.is_zero(), "division by zero rational function");
        RatQ::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn scale_poly(&self, p: &ZPoly) -> RatQ {
        RatQ::new(self.num.mul(p), self.den.clone())
    }

    /// The bar map `q -> q^{-1}`.
    pub fn bar(&self) -> RatQ {
        RatQ::new(self.num.subst_power(-1), self.den.subst_power(-1))
    }

    pub fn display(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.display(var)
        } else {
            format!("({}) / ({})", self.num.display(var), self.den.display(var))
        }
    }
}

impl fmt::Display for RatQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("q"))
    }
}

/// Power series in `t` truncated at `t^prec`, coefficients exact rationals.
///
/// All arithmetic tracks the weakest precision of its inputs, so a value is
/// trustworthy exactly up to its own `prec`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TSeries {
    coeffs: Vec<BigRational>,
}

impl TSeries {
    pub fn zero(prec: usize) -> Self {
        TSeries { coeffs: vec![BigRational::zero(); prec] }
    }

    pub fn one(prec: usize) -> Self {
        let mut s = TSeries::zero(prec);
        if prec > 0 {
            s.coeffs[0] = BigRational::one();
        }
        s
    }

    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, e: usize) -> BigRational {
        self.coeffs.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn set_coeff(&mut self, e: usize, c: BigRational) {
        if e < self.coeffs.len() {
            self.coeffs[e] = c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Embed a Laurent polynomial (no negative exponents allowed).
    pub fn from_zpoly(p: &ZPoly, prec: usize) -> Self {
        let mut s = TSeries::zero(prec);
        for (e, c) in p.iter() {
            assert!(*e >= 0, "negative exponent in a power series embedding");
            if (*e as usize) < prec {
                s.coeffs[*e as usize] += BigRational::from_integer(c.clone());
            }
        }
        s
    }

    fn join_prec(&self, other: &TSeries) -> usize {
        self.prec().min(other.prec())
    }

    pub fn add(&self, other: &TSeries) -> TSeries {
        let p = self.join_prec(other);
        let mut s = TSeries::zero(p);
        for e in 0..p {
            s.coeffs[e] = self.coeff(e) + other.coeff(e);
        }
        s
    }

    pub fn sub(&self, other: &TSeries) -> TSeries {
        let p = self.join_prec(other);
        let mut s = TSeries::zero(p);
        for e in 0..p {
            s.coeffs[e] = self.coeff(e) - other.coeff(e);
        }
        s
    }

    pub fn neg(&self) -> TSeries {
        TSeries { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, other: &TSeries) -> TSeries {
        let p = self.join_prec(other);
        let mut s = TSeries::zero(p);
        for (i, a) in self.coeffs.iter().enumerate().take(p) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= p {
                    break;
                }
                if !b.is_zero() {
                    s.coeffs[i + j] += a * b;
                }
            }
        }
        s
    }

    pub fn mul_zpoly(&self, p: &ZPoly) -> TSeries {
        self.mul(&TSeries::from_zpoly(p, self.prec()))
    }

    pub fn scale(&self, c: &BigRational) -> TSeries {
        TSeries { coeffs: self.coeffs.iter().map(|v| v * c).collect() }
    }

    /// Series division; the divisor needs a nonzero constant term.
    pub fn div(&self, other: &TSeries) -> TSeries {
        let p = self.join_prec(other);
        let d0 = other.coeff(0);
        assert!(!d0.is_zero(), "series division by a series with zero constant term");
        let mut q = TSeries::zero(p);
        let mut rem: Vec<BigRational> = (0..p).map(|e| self.coeff(e)).collect();
        for e in 0..p {
            let c = &rem[e] / &d0;
            q.coeffs[e] = c.clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..(p - e) {
                let sub = &c * other.coeff(j);
                rem[e + j] -= sub;
            }
        }
        q
    }

    /// Interpret the series as an exact integer polynomial: every stored
    /// coefficient must be an integer and coefficients at or above
    /// `expect_zero_from` must vanish. Returns `None` otherwise.
    pub fn to_zpoly_checked(&self, expect_zero_from: usize) -> Option<ZPoly> {
        let mut p = ZPoly::zero();
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if e >= expect_zero_from {
                return None;
            }
            if !c.is_integer() {
                return None;
            }
            p.add_term(e as i64, c.to_integer());
        }
        Some(p)
    }

    /// Truncate to a lower precision.
    pub fn truncate(&self, prec: usize) -> TSeries {
        let p = prec.min(self.prec());
        TSeries { coeffs: self.coeffs[..p].to_vec() }
    }
}
