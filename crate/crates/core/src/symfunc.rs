//! Symmetric and alternating functions in K[P]: the monomial basis m_mu,
//! alternating sums a_mu, the Weyl denominator, Schur functions (Weyl
//! characters) by exact division, Hall-Littlewood polynomials P_mu(x;t) by
//! the signed subset sum over positive roots, and triangular base-change
//! expansions.

use crate::error::{Error, Result};
use crate::poly::ZPoly;
use crate::polyring::{is_w_invariant, GroupAlgebraElement, InnerProduct};
use crate::root_data::{RootSystem, Weight};
use std::collections::BTreeMap;

/// Monomial symmetric function: orbit sum of `x^mu`.
pub fn monomial(rs: &RootSystem, mu: &Weight) -> GroupAlgebraElement {
    let mut el = GroupAlgebraElement::zero();
    for g in rs.orbit(mu) {
        el.add_term(g, ZPoly::one());
    }
    el
}

/// Alternating sum `a_mu = sum_w (-1)^{l(w)} x^{w mu}`.
pub fn alternating(rs: &RootSystem, mu: &Weight) -> Result<GroupAlgebraElement> {
    let mut el = GroupAlgebraElement::zero();
    for w in rs.enumerate_weyl()? {
        el.add_term(w.act(mu), ZPoly::constant(w.sign()));
    }
    Ok(el)
}

/// `x^rho prod_{alpha > 0} (1 - x^{-alpha})`, the product side of the Weyl
/// denominator formula.
pub fn weyl_denominator(rs: &RootSystem) -> GroupAlgebraElement {
    let mut el = GroupAlgebraElement::monomial_weight(rs.rho.clone());
    for r in &rs.positive_roots {
        let mut f = GroupAlgebraElement::one(rs.dim);
        f.add_term(r.vec.neg(), ZPoly::constant(-1));
        el = el.mul(&f);
    }
    el
}

/// Total order refining dominance used for leading-term division:
/// compare `<mu, 2 rho^vee>` first, then lexicographic on coordinates.
fn height_lex_key(rs: &RootSystem, mu: &Weight) -> (i64, Vec<i64>) {
    (rs.pairing_2rho_check(mu), mu.0.clone())
}

fn leading_weight(rs: &RootSystem, f: &GroupAlgebraElement) -> Option<Weight> {
    f.support().max_by_key(|mu| height_lex_key(rs, mu)).cloned()
}

/// Exact division in K[P] by a divisor whose leading term is monic.
fn divide_exact(
    rs: &RootSystem,
    f: &GroupAlgebraElement,
    d: &GroupAlgebraElement,
) -> GroupAlgebraElement {
    let dl = leading_weight(rs, d).expect("division by zero in K[P]");
    assert!(
        d.coeff(&dl).is_one(),
        "leading coefficient of the divisor must be 1"
    );
    let mut rem = f.clone();
    let mut quot = GroupAlgebraElement::zero();
    let budget = f.num_terms() * d.num_terms() * 4 + 16;
    let mut steps = 0usize;
    while !rem.is_zero() {
        steps += 1;
        assert!(steps <= budget, "division in K[P] failed to terminate: inexact quotient");
        let rl = leading_weight(rs, &rem).unwrap();
        let c = rem.coeff(&rl);
        let q = rl.sub(&dl);
        let mut qt = GroupAlgebraElement::zero();
        qt.add_term(q, c);
        quot = quot.add(&qt);
        rem = rem.sub(&qt.mul(d));
    }
    quot
}

/// Schur function (Weyl character) `s_lambda = a_{lambda+rho} / a_rho` for
/// dominant lambda.
pub fn schur(rs: &RootSystem, lambda: &Weight) -> Result<GroupAlgebraElement> {
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let num = alternating(rs, &lambda.add(&rs.rho))?;
    let den = weyl_denominator(rs);
    Ok(divide_exact(rs, &num, &den))
}

/// Straighten a Schur index: `s_mu = sign * s_lambda` with lambda dominant,
/// or None when `mu + rho` lies on a reflection hyperplane (s_mu = 0).
pub fn straighten_schur(rs: &RootSystem, mu: &Weight) -> Option<(i64, Weight)> {
    let mut x = mu.add(&rs.rho);
    let mut sign = 1i64;
    loop {
        let mut moved = false;
        for i in 0..rs.n_simple {
            let p = rs.simple_pairing(&x, i);
            if p == 0 {
                return None;
            }
            if p < 0 {
                x = rs.reflect_simple(&x, i);
                sign = -sign;
                moved = true;
                break;
            }
        }
        if !moved {
            break;
        }
    }
    if (0..rs.n_simple).any(|i| rs.simple_pairing(&x, i) == 0) {
        return None;
    }
    Some((sign, x.sub(&rs.rho)))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    Monomial,
    Schur,
    HallLittlewood,
}

impl Basis {
    pub fn tag(&self) -> &'static str {
        match self {
            Basis::Monomial => "monomial",
            Basis::Schur => "schur",
            Basis::HallLittlewood => "hall-littlewood",
        }
    }
}

/// Expansion of a W-invariant element over a basis indexed by dominant
/// weights, with polynomial coefficients in t.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisExpansion {
    pub basis: Basis,
    pub terms: BTreeMap<Weight, ZPoly>,
}

impl BasisExpansion {
    pub fn coeff(&self, mu: &Weight) -> ZPoly {
        self.terms.get(mu).cloned().unwrap_or_else(ZPoly::zero)
    }
}

/// Poincare polynomial of the stabilizer of lambda.
pub fn stabilizer_poincare(rs: &RootSystem, lambda: &Weight) -> Result<ZPoly> {
    let (_, p) = rs.orbit_and_stabilizer(lambda)?;
    Ok(p)
}

/// `W_lambda(t) P_lambda` in the Schur basis, via the signed subset sum
/// over positive roots: `sum_{E subset R+} (-1)^{|E|} t^{|E|} s_{lambda - alpha_E}`
/// (each index straightened through the dot action).
pub fn hl_times_stabilizer_in_schur(
    rs: &RootSystem,
    lambda: &Weight,
) -> Result<BTreeMap<Weight, ZPoly>> {
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let m = rs.num_positive_roots();
    assert!(m < 30, "too many positive roots for the subset sum");
    let mut acc: BTreeMap<Weight, ZPoly> = BTreeMap::new();
    for mask in 0u64..(1u64 << m) {
        let k = mask.count_ones() as i64;
        let mut idx = lambda.clone();
        for r in 0..m {
            if mask >> r & 1 == 1 {
                idx = idx.sub(&rs.positive_roots[r].vec);
            }
        }
        if let Some((sign, nu)) = straighten_schur(rs, &idx) {
            let sgn = if k % 2 == 0 { sign } else { -sign };
            let entry = acc.entry(nu).or_insert_with(ZPoly::zero);
            *entry = entry.add(&ZPoly::term(k, sgn));
        }
    }
    acc.retain(|_, c| !c.is_zero());
    Ok(acc)
}

/// Hall-Littlewood polynomial P_lambda(x;t) in the Schur basis, as a map
/// `nu -> c_{lambda nu}(t)`; unitriangular with entries 0 unless nu <= lambda.
pub fn hall_littlewood_in_schur(
    rs: &RootSystem,
    lambda: &Weight,
) -> Result<BTreeMap<Weight, ZPoly>> {
    let raw = hl_times_stabilizer_in_schur(rs, lambda)?;
    let wl = stabilizer_poincare(rs, lambda)?;
    let mut out = BTreeMap::new();
    for (nu, c) in raw {
        let q = c
            .divide_exact(&wl)
            .expect("subset sum is not divisible by the stabilizer Poincare polynomial");
        out.insert(nu, q);
    }
    Ok(out)
}

/// Hall-Littlewood polynomial as an element of K[P] with coefficients in t.
pub fn hall_littlewood(rs: &RootSystem, lambda: &Weight) -> Result<GroupAlgebraElement> {
    let exp = hall_littlewood_in_schur(rs, lambda)?;
    let mut acc = GroupAlgebraElement::zero();
    for (nu, c) in exp {
        let s = schur(rs, &nu)?;
        acc = acc.add(&s.scale(&c));
    }
    Ok(acc)
}

/// Expand a W-invariant element over the requested basis by repeated
/// subtraction at dominance-maximal support weights.
pub fn expand_in(rs: &RootSystem, basis: Basis, f: &GroupAlgebraElement) -> Result<BasisExpansion> {
    if !is_w_invariant(rs, f) {
        return Err(Error::NotInvariant("expand_in requires a W-invariant element".into()));
    }
    let mut rem = f.clone();
    let mut terms = BTreeMap::new();
    // Step budget: a symmetric element consumes at least one support orbit
    // per subtraction, so this bound is generous.
    let budget = 4 * rem.num_terms() + 16;
    let mut steps = 0usize;
    while !rem.is_zero() {
        steps += 1;
        assert!(
            steps <= budget,
            "basis expansion failed to terminate; input was not in the span"
        );
        let mu = rem
            .support()
            .filter(|w| rs.is_dominant(w))
            .max_by_key(|w| height_lex_key(rs, w))
            .cloned()
            .ok_or_else(|| {
                Error::Invalid("no dominant leading weight; element not W-invariant?".into())
            })?;
        let c = rem.coeff(&mu);
        let b = match basis {
            Basis::Monomial => monomial(rs, &mu),
            Basis::Schur => schur(rs, &mu)?,
            Basis::HallLittlewood => hall_littlewood(rs, &mu)?,
        };
        rem = rem.sub(&b.scale(&c));
        terms.insert(mu, c);
    }
    Ok(BasisExpansion { basis, terms })
}

/// All dominant weights `nu <= lambda` in dominance order (including
/// lambda itself).
pub fn dominant_weights_below(rs: &RootSystem, lambda: &Weight) -> Vec<Weight> {
    // Search the box of nonnegative simple-root coordinate vectors kappa
    // with lambda - kappa dominant; heights are bounded by <lambda, 2rho^vee>.
    let n = rs.n_simple;
    let mut out = Vec::new();
    let height_cap = rs.pairing_2rho_check(lambda).max(0);
    let mut stack = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == n {
            let mut nu = lambda.clone();
            for (i, &c) in prefix.iter().enumerate() {
                nu = nu.sub(&rs.simple_root(i).scale(c));
            }
            if rs.is_dominant(&nu) {
                out.push(nu);
            }
            continue;
        }
        let used: i64 = prefix.iter().sum();
        for c in 0..=(height_cap - used).max(0) {
            let mut p: Vec<i64> = prefix.clone();
            p.push(c);
            stack.push(p);
        }
    }
    out.sort_by(|a, b| height_lex_key(rs, a).cmp(&height_lex_key(rs, b)));
    out.dedup();
    out
}

/// Gram-Schmidt construction of P_lambda from triangularity plus
/// orthogonality: the unique element `m_lambda + lower terms` orthogonal to
/// all P_nu, nu < lambda. `prec` is the t-series working precision;
/// coefficients are extracted as exact polynomials and the result must
/// match `hall_littlewood`.
pub fn hall_littlewood_gram_schmidt(
    rs: &RootSystem,
    lambda: &Weight,
    prec: usize,
) -> Result<GroupAlgebraElement> {
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let below = dominant_weights_below(rs, lambda);
    let mut ip = InnerProduct::new(rs, prec);
    let mut built: Vec<GroupAlgebraElement> = Vec::new();
    for nu in &below {
        let mut p = monomial(rs, nu);
        let m_nu = p.clone();
        for p_prev in &built {
            let num = ip.pair(&m_nu, p_prev);
            let den = ip.pair(p_prev, p_prev);
            let coeff_series = num.div(&den).neg();
            // The coefficient is a genuine polynomial in t; extract it,
            // requiring the tail of the working precision to vanish.
            let deg_cap = prec.saturating_sub(2).max(1);
            let c = coeff_series.to_zpoly_checked(deg_cap).ok_or_else(|| {
                Error::Invalid(
                    "Gram-Schmidt coefficient did not stabilize; raise the height bound".into(),
                )
            })?;
            p = p.add(&p_prev.scale(&c));
        }
        built.push(p);
    }
    Ok(built.pop().expect("lambda itself is in the list"))
}
