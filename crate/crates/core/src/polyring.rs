//! The group algebra K[P]: finite maps from weights to Laurent polynomials
//! in t, with the Weyl group action, the bar map, constant terms, the
//! t-deformed inner product, and the q-analogue of the Kostant partition
//! function.

use crate::error::{Error, Result};
use crate::poly::{TSeries, ZPoly};
use crate::root_data::{RootSystem, Weight, WeylElement};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};

/// Element of K[P]: a finite sum of terms `c_mu(t) x^mu`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupAlgebraElement {
    terms: BTreeMap<Weight, ZPoly>,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        GroupAlgebraElement { terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        GroupAlgebraElement::monomial_weight(Weight::zero(dim))
    }

    /// The single term `x^mu`.
    pub fn monomial_weight(mu: Weight) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(mu, ZPoly::one());
        GroupAlgebraElement { terms }
    }

    pub fn from_terms(terms: BTreeMap<Weight, ZPoly>) -> Self {
        let mut el = GroupAlgebraElement { terms };
        el.terms.retain(|_, c| !c.is_zero());
        el
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mu: &Weight) -> ZPoly {
        self.terms.get(mu).cloned().unwrap_or_else(ZPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &ZPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, mu: Weight, c: ZPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mu.clone()).or_insert_with(ZPoly::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&mu);
        }
    }

    pub fn add(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut r = self.clone();
        for (mu, c) in &other.terms {
            r.add_term(mu.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut r = self.clone();
        for (mu, c) in &other.terms {
            r.add_term(mu.clone(), c.neg());
        }
        r
    }

    pub fn neg(&self) -> GroupAlgebraElement {
        let mut r = GroupAlgebraElement::zero();
        for (mu, c) in &self.terms {
            r.terms.insert(mu.clone(), c.neg());
        }
        r
    }

    pub fn mul(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut r = GroupAlgebraElement::zero();
        for (mu, c) in &self.terms {
            for (nu, d) in &other.terms {
                r.add_term(mu.add(nu), c.mul(d));
            }
        }
        r
    }

    pub fn scale(&self, c: &ZPoly) -> GroupAlgebraElement {
        if c.is_zero() {
            return GroupAlgebraElement::zero();
        }
        let mut r = GroupAlgebraElement::zero();
        for (mu, v) in &self.terms {
            r.add_term(mu.clone(), v.mul(c));
        }
        r
    }

    pub fn scale_int(&self, c: i64) -> GroupAlgebraElement {
        self.scale(&ZPoly::constant(c))
    }

    /// Multiply by `x^nu`.
    pub fn shift(&self, nu: &Weight) -> GroupAlgebraElement {
        let mut r = GroupAlgebraElement::zero();
        for (mu, c) in &self.terms {
            r.terms.insert(mu.add(nu), c.clone());
        }
        r
    }

    /// Apply a map to every coefficient (e.g. a variable substitution).
    pub fn map_coeffs<F: Fn(&ZPoly) -> ZPoly>(&self, f: F) -> GroupAlgebraElement {
        let mut r = GroupAlgebraElement::zero();
        for (mu, c) in &self.terms {
            r.add_term(mu.clone(), f(c));
        }
        r
    }

    /// Specialize the coefficient variable t to an integer (0 or 1 in
    /// practice), keeping the result in the group algebra over Z.
    pub fn eval_coeff_at(&self, t: i64) -> GroupAlgebraElement {
        self.map_coeffs(|c| {
            let v = match t {
                0 => c.eval_at_zero(),
                1 => c.eval_at_one(),
                _ => {
                    let mut acc = BigInt::zero();
                    for (e, coef) in c.iter() {
                        assert!(*e >= 0, "negative exponent in integer evaluation");
                        acc += coef * BigInt::from(t).pow(*e as u32);
                    }
                    acc
                }
            };
            ZPoly::term_big(0, v)
        })
    }
}

/// `w f = sum c_mu x^{w mu}` (Weyl group action, a ring automorphism).
pub fn w_action(w: &WeylElement, f: &GroupAlgebraElement) -> GroupAlgebraElement {
    let mut r = GroupAlgebraElement::zero();
    for (mu, c) in f.iter() {
        r.add_term(w.act(mu), c.clone());
    }
    r
}

/// `bar f = sum f_mu x^{-mu}`.
pub fn bar(f: &GroupAlgebraElement) -> GroupAlgebraElement {
    let mut r = GroupAlgebraElement::zero();
    for (mu, c) in f.iter() {
        r.add_term(mu.neg(), c.clone());
    }
    r
}

/// Constant term `[f]_1`, the coefficient of `x^0`.
pub fn constant_term(f: &GroupAlgebraElement) -> ZPoly {
    let dim = f.support().next().map_or(0, |w| w.dim());
    f.coeff(&Weight::zero(dim))
}

pub fn is_w_invariant(rs: &RootSystem, f: &GroupAlgebraElement) -> bool {
    (0..rs.n_simple).all(|i| {
        let si = WeylElement::simple(rs, i);
        w_action(&si, f) == *f
    })
}

/// Memoized q-analogue of the Kostant partition function:
/// `F(gamma; t)` is the coefficient of `x^gamma` in
/// `prod_{alpha > 0} 1/(1 - t x^alpha)`.
pub struct PartitionFn<'a> {
    rs: &'a RootSystem,
    /// Positive roots in a fixed processing order, as simple-root coords.
    order: Vec<Vec<i64>>,
    memo: HashMap<(usize, Vec<i64>), ZPoly>,
}

impl<'a> PartitionFn<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        let order: Vec<Vec<i64>> =
            rs.positive_roots.iter().map(|r| r.simple_coords.clone()).collect();
        PartitionFn { rs, order, memo: HashMap::new() }
    }

    /// Custom processing order (the result must not depend on it).
    pub fn with_order(rs: &'a RootSystem, perm: &[usize]) -> Self {
        let order: Vec<Vec<i64>> =
            perm.iter().map(|&i| rs.positive_roots[i].simple_coords.clone()).collect();
        PartitionFn { rs, order, memo: HashMap::new() }
    }

    pub fn eval(&mut self, gamma: &Weight) -> ZPoly {
        match self.rs.root_coords(gamma) {
            Some(c) if c.iter().all(|&x| x >= 0) => self.eval_coords(self.order.len(), c),
            _ => ZPoly::zero(),
        }
    }

    fn eval_coords(&mut self, k: usize, c: Vec<i64>) -> ZPoly {
        if c.iter().all(|&x| x == 0) {
            return ZPoly::one();
        }
        if k == 0 {
            return ZPoly::zero();
        }
        let key = (k, c.clone());
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        // F_k(c) = sum_{r >= 0} t^r F_{k-1}(c - r * alpha_k)
        let alpha = self.order[k - 1].clone();
        let mut acc = ZPoly::zero();
        let mut rem = c;
        let mut r = 0i64;
        loop {
            if rem.iter().all(|&x| x >= 0) {
                let term = self.eval_coords(k - 1, rem.clone());
                acc = acc.add(&term.shift(r));
            } else {
                break;
            }
            for (x, a) in rem.iter_mut().zip(&alpha) {
                *x -= a;
            }
            r += 1;
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

/// Plain constant-term pairing `[f bar(g)]_1` (integer polynomial).
pub fn ct_pair(f: &GroupAlgebraElement, g: &GroupAlgebraElement) -> ZPoly {
    let mut acc = ZPoly::zero();
    for (mu, c) in f.iter() {
        let d = g.coeff(mu);
        if !d.is_zero() {
            acc = acc.add(&c.mul(&d));
        }
    }
    acc
}

/// The inner product at t = 1: `(1/|W|) [f bar(g)]_1`, returned as
/// `(numerator polynomial, |W|)`.
pub fn inner_product_one(rs: &RootSystem, f: &GroupAlgebraElement, g: &GroupAlgebraElement) -> (ZPoly, u64) {
    (ct_pair(f, g), rs.weyl_order())
}

/// Exact t-power series for the bilinear form of the t-deformed kernel,
///
/// `<f, g>_t = (1/|W|) [ f bar(g) prod_{alpha in R} (1-x^alpha)/(1-t x^alpha) ]_1`,
///
/// truncated at `t^prec` with every stored coefficient exact. Truncation is
/// sound because a partition-function value `F(b; t)` has minimum t-degree
/// at least `ht(b) / ht(theta)`, so lattice points beyond the induced
/// height bound cannot touch coefficients below `t^prec`.
pub struct InnerProduct<'a> {
    rs: &'a RootSystem,
    prec: usize,
    pf: PartitionFn<'a>,
    g_memo: HashMap<Weight, TSeries>,
    /// Q+ lattice points with height <= ht_theta * (prec - 1), by coords.
    cone_points: Vec<Vec<i64>>,
    max_root_height: i64,
}

impl<'a> InnerProduct<'a> {
    pub fn new(rs: &'a RootSystem, prec: usize) -> Self {
        let max_ht = rs
            .positive_roots
            .iter()
            .map(|r| r.root_height())
            .max()
            .unwrap_or(1);
        let bound = max_ht * (prec.max(1) as i64 - 1);
        // Enumerate {b in Q+ : ht(b) <= bound} by simple-root coordinates.
        let n = rs.n_simple;
        let mut cone_points = Vec::new();
        let mut cur = vec![0i64; n];
        loop {
            cone_points.push(cur.clone());
            // odometer increment subject to sum <= bound
            let mut k = 0;
            loop {
                if k == n {
                    break;
                }
                cur[k] += 1;
                if cur.iter().sum::<i64>() <= bound {
                    break;
                }
                cur[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
        InnerProduct {
            rs,
            prec,
            pf: PartitionFn::new(rs),
            g_memo: HashMap::new(),
            cone_points,
            max_root_height: max_ht,
        }
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    /// Coefficient of `x^nu` in `prod_{alpha>0} 1/((1-t x^alpha)(1-t x^-alpha))`
    /// as a series in t.
    fn kernel_coeff(&mut self, nu: &Weight) -> TSeries {
        if let Some(s) = self.g_memo.get(nu) {
            return s.clone();
        }
        let mut acc = TSeries::zero(self.prec);
        // A product F(b) F(b+nu) has minimum t-degree at least
        // (ht(b) + ht(b+nu)) / max_root_height; prune points beyond prec.
        let nu_coords = self.rs.root_coords(nu);
        let nu_height: Option<i64> = nu_coords.map(|c| c.iter().sum());
        let nu_height = match nu_height {
            Some(h) => h,
            None => {
                // nu is not in Q: no lattice point b has b + nu in Q+.
                self.g_memo.insert(nu.clone(), acc.clone());
                return acc;
            }
        };
        let points = self.cone_points.clone();
        for b_coords in &points {
            let ht_b: i64 = b_coords.iter().sum();
            let ht_bn = ht_b + nu_height;
            if ht_bn < 0 {
                continue;
            }
            let min_deg = (ht_b + self.max_root_height - 1) / self.max_root_height
                + (ht_bn + self.max_root_height - 1) / self.max_root_height;
            if min_deg >= self.prec as i64 {
                continue;
            }
            let b = self.weight_of_coords(b_coords);
            let f_b = self.pf.eval(&b);
            if f_b.is_zero() {
                continue;
            }
            let bn = b.add(nu);
            let f_bn = self.pf.eval(&bn);
            if f_bn.is_zero() {
                continue;
            }
            let prod = f_b.mul(&f_bn);
            acc = acc.add(&TSeries::from_zpoly(&prod, self.prec));
        }
        self.g_memo.insert(nu.clone(), acc.clone());
        acc
    }

    fn weight_of_coords(&self, coords: &[i64]) -> Weight {
        let mut w = Weight::zero(self.rs.dim);
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                w = w.add(&self.rs.simple_root(i).scale(c));
            }
        }
        w
    }

    /// The inner product as an exact truncated series.
    pub fn pair(&mut self, f: &GroupAlgebraElement, g: &GroupAlgebraElement) -> TSeries {
        // h = f * bar(g) * prod_{alpha>0} (1-x^alpha)(1-x^{-alpha})
        let mut h = f.mul(&bar(g));
        for r in 0..self.rs.num_positive_roots() {
            let alpha = self.rs.positive_roots[r].vec.clone();
            let mut factor = GroupAlgebraElement::one(self.rs.dim);
            factor.add_term(alpha.clone(), ZPoly::constant(-1));
            let mut factor2 = GroupAlgebraElement::one(self.rs.dim);
            factor2.add_term(alpha.neg(), ZPoly::constant(-1));
            h = h.mul(&factor).mul(&factor2);
        }
        let mut acc = TSeries::zero(self.prec);
        for (mu, c) in h.iter() {
            let k = self.kernel_coeff(&mu.neg());
            acc = acc.add(&k.mul_zpoly(c));
        }
        let order = BigRational::from_integer(BigInt::from(self.rs.weyl_order()));
        acc.scale(&order.recip())
    }
}

/// `W_mu(t) <f, P_mu>`-style extraction: interpret a series as an exact
/// integer polynomial, requiring all coefficients at or beyond
/// `expect_zero_from` to vanish.
pub fn series_to_poly(s: &TSeries, expect_zero_from: usize) -> Result<ZPoly> {
    s.to_zpoly_checked(expect_zero_from).ok_or_else(|| {
        Error::Invalid(format!(
            "series is not an integer polynomial of degree < {} at precision {}",
            expect_zero_from,
            s.prec()
        ))
    })
}
