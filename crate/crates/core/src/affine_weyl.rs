//! The extended affine Weyl group: elements w t_lambda with lambda in the
//! weight lattice, the length formula, double cosets W t_lambda W with
//! their extremal elements, Bruhat order on the affine subgroup (delegated
//! within a length-zero coset for extended elements), and the length-zero
//! subgroup Omega.

use crate::error::{Error, Result};
use crate::root_data::{RootSystem, Weight, WeylElement};
use std::collections::BTreeMap;

/// Element `w t_lambda` of the extended affine Weyl group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AffineElement {
    pub finite: WeylElement,
    pub translation: Weight,
}

impl AffineElement {
    pub fn identity(rs: &RootSystem) -> Self {
        AffineElement { finite: WeylElement::identity(rs), translation: Weight::zero(rs.dim) }
    }

    pub fn translation(rs: &RootSystem, lambda: Weight) -> Self {
        AffineElement { finite: WeylElement::identity(rs), translation: lambda }
    }

    pub fn from_finite(w: WeylElement, dim: usize) -> Self {
        AffineElement { finite: w, translation: Weight::zero(dim) }
    }

    pub fn is_identity(&self) -> bool {
        self.finite.is_identity() && self.translation.is_zero()
    }

    /// `(w t_lambda)(v t_mu) = (w v) t_{v^{-1} lambda + mu}`.
    pub fn mul(&self, rs: &RootSystem, other: &AffineElement) -> AffineElement {
        AffineElement {
            finite: self.finite.mul(rs, &other.finite),
            translation: other.finite.act_inverse(&self.translation).add(&other.translation),
        }
    }

    /// `(w t_lambda)^{-1} = w^{-1} t_{-w lambda}`.
    pub fn inverse(&self, rs: &RootSystem) -> AffineElement {
        AffineElement {
            finite: self.finite.inverse(rs),
            translation: self.finite.act(&self.translation).neg(),
        }
    }

    /// Length by the counting formula
    /// `l(w t_lambda) = sum_{alpha > 0} |<lambda, alpha^vee> + chi(w alpha)|`
    /// with chi = 0 on positive roots and 1 on negative ones.
    pub fn length(&self, rs: &RootSystem) -> i64 {
        let mut total = 0i64;
        for idx in 0..rs.num_positive_roots() {
            let pairing = rs.pairing(&self.translation, idx);
            let img = self.finite.act(&rs.positive_roots[idx].vec);
            let (_, pos) = rs.classify_root(&img).expect("root image is a root");
            let chi = if pos { 0 } else { 1 };
            total += (pairing + chi).abs();
        }
        total
    }

    /// Does the element lie in the affine (non-extended) Weyl group, i.e.
    /// is the translation in the root lattice Q?
    pub fn in_affine_subgroup(&self, rs: &RootSystem) -> bool {
        rs.root_coords(&self.translation).is_some()
    }
}

impl std::fmt::Display for AffineElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} t{}", self.finite, self.translation)
    }
}

/// The reflection `s_{alpha,k}` in the affine hyperplane `<x, alpha^vee> = k`,
/// as the extended-group element `t_{k alpha} s_alpha`. For short roots
/// (and in particular the alcove wall root) `alpha = alpha^vee` under the
/// standard normalization, so this is the usual `t_{k alpha^vee} s_alpha`.
pub fn affine_reflection(rs: &RootSystem, root_idx: usize, k: i64) -> AffineElement {
    let alpha = rs.positive_roots[root_idx].vec.clone();
    let s_alpha = reflection_in_root(rs, root_idx);
    // t_{k alpha} s_alpha = s_alpha t_{s_alpha(k alpha)} = s_alpha t_{-k alpha}
    AffineElement { finite: s_alpha, translation: alpha.scale(-k) }
}

/// The finite reflection through a (positive) root, as a Weyl element.
pub fn reflection_in_root(rs: &RootSystem, root_idx: usize) -> WeylElement {
    // s_alpha = u s_i u^{-1} where u alpha_i = alpha; find it by walking
    // alpha down to a simple root.
    let mut v = rs.positive_roots[root_idx].vec.clone();
    let mut prefix: Vec<usize> = Vec::new();
    'outer: loop {
        for i in 0..rs.n_simple {
            if v == rs.simple_root(i) {
                break 'outer;
            }
        }
        for i in 0..rs.n_simple {
            let r = rs.reflect_simple(&v, i);
            let (_, pos) = rs.classify_root(&r).expect("reflected root is a root");
            // moving down: the reflected root must stay positive with
            // smaller height
            if pos && rs.pairing_2rho_check(&r) < rs.pairing_2rho_check(&v) {
                v = r;
                prefix.push(i);
                continue 'outer;
            }
        }
        unreachable!("positive root failed to reduce to a simple root");
    }
    let i = (0..rs.n_simple).find(|&i| v == rs.simple_root(i)).unwrap();
    // alpha = s_{i_1} ... s_{i_k} alpha_i with prefix = [i_1 ... i_k] read
    // in application order (we applied them to alpha), so
    // s_alpha = (s_{i_k} ... s_{i_1})^{-1} s_i (s_{i_k} ... s_{i_1}).
    let mut u = WeylElement::identity(rs);
    for &j in prefix.iter().rev() {
        u = u.mul(rs, &WeylElement::simple(rs, j));
    }
    let ui = u.inverse(rs);
    u.mul(rs, &WeylElement::simple(rs, i)).mul(rs, &ui)
}

/// The affine simple reflection s_0 = t_phi s_phi through the alcove wall
/// (phi is the root whose coroot is the highest coroot).
pub fn s_zero(rs: &RootSystem) -> AffineElement {
    affine_reflection(rs, rs.alcove_root, 1)
}

/// Generator list s_0, s_1, ..., s_n of the affine Weyl group.
pub fn affine_generators(rs: &RootSystem) -> Vec<AffineElement> {
    let mut gens = vec![s_zero(rs)];
    for i in 0..rs.n_simple {
        gens.push(AffineElement::from_finite(WeylElement::simple(rs, i), rs.dim));
    }
    gens
}

/// Greedy reduced word over the generators s_0..s_n; `None` when the
/// element is not in the affine subgroup (has a nontrivial Omega part).
pub fn affine_reduced_word(rs: &RootSystem, x: &AffineElement) -> Option<Vec<u8>> {
    if !x.in_affine_subgroup(rs) {
        return None;
    }
    let gens = affine_generators(rs);
    let mut cur = x.clone();
    let mut word = Vec::new();
    let mut len = cur.length(rs);
    while len > 0 {
        let mut progressed = false;
        for (i, g) in gens.iter().enumerate() {
            let next = g.mul(rs, &cur);
            let nl = next.length(rs);
            if nl < len {
                word.push(i as u8);
                cur = next;
                len = nl;
                progressed = true;
                break;
            }
        }
        if !progressed {
            return None;
        }
    }
    if cur.is_identity() {
        Some(word)
    } else {
        None
    }
}

/// Multiply out a word over the affine generators.
pub fn element_from_affine_word(rs: &RootSystem, word: &[u8]) -> AffineElement {
    let gens = affine_generators(rs);
    let mut el = AffineElement::identity(rs);
    for &i in word {
        el = el.mul(rs, &gens[i as usize]);
    }
    el
}

/// The length-zero subgroup Omega: the identity together with
/// `g_i = t_{omega_i} w_i w_0` for the i with c_i = 1 in
/// `phi^vee = sum c_i alpha_i^vee`.
pub fn omega_elements(rs: &RootSystem) -> Result<Vec<AffineElement>> {
    let c = rs.positive_roots[rs.alcove_root].coroot.clone();
    let w0 = rs.longest_element();
    let mut out = vec![AffineElement::identity(rs)];
    for i in 0..rs.n_simple {
        if c[i] != 1 {
            continue;
        }
        let mut omega_i = Weight::zero(rs.dim);
        omega_i.0[i] = 1;
        if rs.cartan_type == crate::root_data::CartanType::Gl {
            return Err(Error::Unsupported("Omega is not defined in GL mode".into()));
        }
        // w_i = longest element of the stabilizer of omega_i
        let (_, _) = rs.orbit_and_stabilizer(&omega_i)?;
        let w_i = longest_stabilizer_element(rs, &omega_i)?;
        let fin = w_i.mul(rs, &w0);
        // t_{omega_i} (w_i w_0) in normal form (w, t): t_mu v = v t_{v^{-1} mu}
        let g = AffineElement {
            translation: fin.act_inverse(&omega_i),
            finite: fin,
        };
        debug_assert_eq!(g.length(rs), 0, "Omega element has nonzero length");
        out.push(g);
    }
    Ok(out)
}

fn longest_stabilizer_element(rs: &RootSystem, mu: &Weight) -> Result<WeylElement> {
    let mut best: Option<WeylElement> = None;
    for w in rs.enumerate_weyl()? {
        if w.act(mu) == *mu {
            let better = match &best {
                None => true,
                Some(b) => w.length() > b.length(),
            };
            if better {
                best = Some(w);
            }
        }
    }
    Ok(best.expect("stabilizer contains the identity"))
}

/// Decompose an extended element as `g v` with g in Omega and v affine.
pub fn omega_decompose(rs: &RootSystem, x: &AffineElement) -> Result<(AffineElement, AffineElement)> {
    for g in omega_elements(rs)? {
        let v = g.inverse(rs).mul(rs, x);
        if v.in_affine_subgroup(rs) {
            return Ok((g, v));
        }
    }
    Err(Error::Invalid(format!("element {} has no Omega decomposition", x)))
}

/// Double coset data for a dominant weight.
pub struct DoubleCoset {
    /// Minimal length element `m_lambda = t_lambda (w_lambda w_0)`.
    pub minimal: AffineElement,
    /// Maximal length element `n_lambda = t_{w_0 lambda} w_0 = w_0 t_lambda`.
    pub maximal: AffineElement,
    /// All members with their lengths.
    pub members: BTreeMap<AffineElement, i64>,
}

/// Enumerate `W t_lambda W` for dominant lambda with the extremal elements.
pub fn double_coset(rs: &RootSystem, lambda: &Weight) -> Result<DoubleCoset> {
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let w_all = rs.enumerate_weyl()?;
    let t_lambda = AffineElement::translation(rs, lambda.clone());
    let mut members = BTreeMap::new();
    for u in &w_all {
        let left = AffineElement::from_finite(u.clone(), rs.dim).mul(rs, &t_lambda);
        for v in &w_all {
            let x = left.mul(rs, &AffineElement::from_finite(v.clone(), rs.dim));
            let l = x.length(rs);
            members.insert(x, l);
        }
    }
    let w0 = rs.longest_element();
    let maximal = AffineElement::from_finite(w0.clone(), rs.dim).mul(rs, &t_lambda);
    let w_lam = longest_stabilizer_element(rs, lambda)?;
    let minimal = t_lambda.mul(
        rs,
        &AffineElement::from_finite(w_lam.mul(rs, &w0), rs.dim),
    );
    // The formulas must match the enumeration extremes and be unique.
    let min_len = members.values().min().copied().unwrap();
    let max_len = members.values().max().copied().unwrap();
    assert_eq!(members.get(&minimal), Some(&min_len), "m_lambda is not minimal");
    assert_eq!(members.get(&maximal), Some(&max_len), "n_lambda is not maximal");
    assert_eq!(members.values().filter(|&&l| l == min_len).count(), 1);
    assert_eq!(members.values().filter(|&&l| l == max_len).count(), 1);
    Ok(DoubleCoset { minimal, maximal, members })
}

/// `n_lambda = w_0 t_lambda` without enumerating the coset.
pub fn maximal_coset_element(rs: &RootSystem, lambda: &Weight) -> Result<AffineElement> {
    if !rs.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let w0 = rs.longest_element();
    Ok(AffineElement::from_finite(w0, rs.dim)
        .mul(rs, &AffineElement::translation(rs, lambda.clone())))
}

/// Does `x` lie in `W t_mu W` (mu dominant)? Checked on the normal form:
/// the translation part must lie in the orbit of mu.
pub fn in_double_coset(rs: &RootSystem, x: &AffineElement, mu: &Weight) -> bool {
    let (rep, _) = rs.dominant_representative(&x.translation);
    rep == *mu
}

/// Bruhat order on the affine Weyl group by the subword property; extended
/// elements compare only within a common Omega coset.
pub fn bruhat_leq(rs: &RootSystem, x: &AffineElement, y: &AffineElement, cutoff: usize) -> Result<bool> {
    let ly = y.length(rs);
    if ly as usize > cutoff {
        return Err(Error::CutoffExceeded { len: ly as usize, cutoff });
    }
    let (gx, vx) = omega_decompose(rs, x)?;
    let (gy, vy) = omega_decompose(rs, y)?;
    if gx != gy {
        return Ok(false);
    }
    Ok(bruhat_leq_affine(rs, &vx, &vy))
}

fn bruhat_leq_affine(rs: &RootSystem, x: &AffineElement, y: &AffineElement) -> bool {
    let lx = x.length(rs);
    let ly = y.length(rs);
    if lx > ly {
        return false;
    }
    if x == y {
        return true;
    }
    if ly == 0 {
        return x.is_identity();
    }
    let gens = affine_generators(rs);
    // take any left descent of y
    for g in &gens {
        let sy = g.mul(rs, y);
        if sy.length(rs) < ly {
            let sx = g.mul(rs, x);
            return if sx.length(rs) < lx {
                bruhat_leq_affine(rs, &sx, &sy)
            } else {
                bruhat_leq_affine(rs, x, &sy)
            };
        }
    }
    unreachable!("element of positive length has a descent");
}

/// The lower Bruhat interval {x : x <= y}, as all distinct subword products
/// of a fixed reduced word of the affine part, each multiplied by the Omega
/// part of y.
pub fn bruhat_lower_interval(
    rs: &RootSystem,
    y: &AffineElement,
    cutoff: usize,
) -> Result<Vec<AffineElement>> {
    let ly = y.length(rs) as usize;
    if ly > cutoff {
        return Err(Error::CutoffExceeded { len: ly, cutoff });
    }
    let (g, v) = omega_decompose(rs, y)?;
    let word = affine_reduced_word(rs, &v).expect("affine part has a reduced word");
    let mut set = std::collections::BTreeSet::new();
    // subsets of positions; 2^l products with deduplication
    assert!(word.len() <= 20, "interval enumeration too large");
    for mask in 0u32..(1u32 << word.len()) {
        let sub: Vec<u8> = word
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &i)| i)
            .collect();
        set.insert(element_from_affine_word(rs, &sub));
    }
    Ok(set.into_iter().map(|u| g.mul(rs, &u)).collect())
}

/// Count affine hyperplanes separating the fundamental alcove A from
/// x^{-1} A, with exact integer arithmetic on a rational sample point.
/// This is the geometric definition of length, used to cross-check the
/// counting formula.
pub fn length_by_alcove_separation(rs: &RootSystem, x: &AffineElement) -> i64 {
    // sample point p0 = rho / D with D = (max coroot height) + 1 lies in
    // the open alcove: 0 < <p0, alpha^vee> < 1 for all alpha > 0.
    let d: i64 = rs
        .positive_roots
        .iter()
        .map(|r| r.coroot_height())
        .max()
        .unwrap()
        + 1;
    // q = x^{-1} p0 = w^{-1} p0 - ... : for x = w t_lambda, x^{-1} = w'
    // with x^{-1}(p) = t_{-lambda}(w^{-1} p)?  Compute directly:
    // x(p) = w(p + lambda); x^{-1}(p) = w^{-1}(p) - lambda.
    // Work with numerators over the common denominator d.
    let inv_p0_num = {
        // w^{-1} applied to rho (exact integer vector), then minus d*lambda
        let wr = x.finite.act_inverse(&rs.rho);
        wr.sub(&x.translation.scale(d))
    };
    let mut count = 0i64;
    for idx in 0..rs.num_positive_roots() {
        let a = rs.pairing(&rs.rho, idx); // <p0, a^vee> * d, in (0, d)
        let b = rs.pairing(&inv_p0_num, idx); // <q, a^vee> * d
        // hyperplanes <x, a^vee> = k strictly between a/d and b/d
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        // integers k with lo < k*d < hi
        let klo = lo.div_euclid(d) + 1;
        let khi = if hi.rem_euclid(d) == 0 { hi / d - 1 } else { hi.div_euclid(d) };
        if khi >= klo {
            count += khi - klo + 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::CartanType;

    fn a1() -> RootSystem {
        RootSystem::new(CartanType::A, 1).unwrap()
    }
    fn c2() -> RootSystem {
        RootSystem::new(CartanType::C, 2).unwrap()
    }

    #[test]
    fn translation_multiplication() {
        let rs = c2();
        let a = AffineElement::translation(&rs, Weight(vec![1, 0]));
        let b = AffineElement::translation(&rs, Weight(vec![0, 2]));
        let ab = a.mul(&rs, &b);
        assert_eq!(ab, AffineElement::translation(&rs, Weight(vec![1, 2])));
        // inverse
        assert!(a.mul(&rs, &a.inverse(&rs)).is_identity());
        // embedded W multiplies as W
        let u = WeylElement::from_word(&rs, &[0]);
        let v = WeylElement::from_word(&rs, &[1]);
        let prod = AffineElement::from_finite(u.clone(), 2)
            .mul(&rs, &AffineElement::from_finite(v.clone(), 2));
        assert_eq!(prod.finite, u.mul(&rs, &v));
        assert!(prod.translation.is_zero());
    }

    #[test]
    fn affine_reflections_are_involutions() {
        let rs = c2();
        for idx in 0..rs.num_positive_roots() {
            for k in -2..=2 {
                let s = affine_reflection(&rs, idx, k);
                assert!(s.mul(&rs, &s).is_identity(), "s_{{alpha,{}}}^2 != id", k);
            }
        }
        // s_0 has length 1
        assert_eq!(s_zero(&rs).length(&rs), 1);
    }

    #[test]
    fn length_formula_examples() {
        let rs = c2();
        let lam = Weight(vec![0, 2]);
        let t = AffineElement::translation(&rs, lam.clone());
        assert_eq!(t.length(&rs), 6);
        // l(w t_0) = l(w)
        for word in [vec![], vec![0u8], vec![0, 1], vec![0, 1, 0, 1]] {
            let w = WeylElement::from_word(&rs, &word);
            let lw = w.length() as i64;
            assert_eq!(AffineElement::from_finite(w, 2).length(&rs), lw);
        }
        // dominant translations: l(t_lambda) = <lambda, 2 rho^vee>
        for lam in [Weight(vec![1, 0]), Weight(vec![1, 1]), Weight(vec![2, 1])] {
            let t = AffineElement::translation(&rs, lam.clone());
            assert_eq!(t.length(&rs), rs.pairing_2rho_check(&lam));
        }
    }

    #[test]
    fn double_coset_c2_example() {
        // lambda = 2 omega_2: l(t) = 6, l(n) = 10, and the minimum is
        // l(t) - (l(w0) - l(w_lam)) = 6 - (4 - 1) = 3.
        let rs = c2();
        let lam = Weight(vec![0, 2]);
        let dc = double_coset(&rs, &lam).unwrap();
        assert_eq!(dc.members.len(), 32); // |W|^2 / |W_lambda|
        assert_eq!(dc.members[&dc.maximal], 10);
        assert_eq!(dc.members[&dc.minimal], 3);
        let t_len = AffineElement::translation(&rs, lam.clone()).length(&rs);
        assert_eq!(t_len, 6);
        // l(m) = l(t) - (l(w0) - l(w_lam)); l(n) = l(t) + l(w0)
        assert_eq!(dc.members[&dc.minimal], t_len - (4 - 1));
        assert_eq!(dc.members[&dc.maximal], t_len + 4);
        // n_lambda = w0 t_lambda
        assert_eq!(dc.maximal, maximal_coset_element(&rs, &lam).unwrap());
    }

    #[test]
    fn double_coset_trivial_and_a1() {
        let rs = c2();
        let dc0 = double_coset(&rs, &Weight::zero(2)).unwrap();
        assert_eq!(dc0.members.len(), 8);
        assert!(dc0.minimal.is_identity());
        assert_eq!(dc0.members[&dc0.maximal], 4);

        let a = a1();
        let dc = double_coset(&a, &Weight(vec![1])).unwrap();
        assert_eq!(dc.members.len(), 4);
        let lengths: Vec<i64> = dc.members.values().copied().collect();
        let mut sorted = lengths.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 1, 2]);
    }

    #[test]
    fn omega_c2_and_a1() {
        let rs = c2();
        let om = omega_elements(&rs).unwrap();
        // phi^vee = 2 a1^vee + a2^vee so only c_2 = 1: Omega = {id, g_2}
        assert_eq!(om.len(), 2);
        for g in &om {
            assert_eq!(g.length(&rs), 0);
        }
        let g = om[1].clone();
        assert!(g.mul(&rs, &g).is_identity() || !g.mul(&rs, &g).is_identity());

        let a = a1();
        let om = omega_elements(&a).unwrap();
        assert_eq!(om.len(), 2);
        assert_eq!(om[1].length(&a), 0);
        assert!(om[1].mul(&a, &om[1]).is_identity());
        // G2 has trivial Omega
        let g2 = RootSystem::new(CartanType::G2, 2).unwrap();
        assert_eq!(omega_elements(&g2).unwrap().len(), 1);
    }

    #[test]
    fn bruhat_chain_in_affine_a1() {
        let rs = a1();
        let s0 = element_from_affine_word(&rs, &[0]);
        let s1s0 = element_from_affine_word(&rs, &[1, 0]);
        let s0s1s0 = element_from_affine_word(&rs, &[0, 1, 0]);
        assert!(bruhat_leq(&rs, &AffineElement::identity(&rs), &s0s1s0, 14).unwrap());
        assert!(bruhat_leq(&rs, &s0, &s1s0, 14).unwrap());
        assert!(bruhat_leq(&rs, &s1s0, &s0s1s0, 14).unwrap());
        assert!(!bruhat_leq(&rs, &s0s1s0, &s1s0, 14).unwrap());
        // distinct elements of equal length are incomparable
        let s1 = element_from_affine_word(&rs, &[1]);
        assert!(!bruhat_leq(&rs, &s0, &s1, 14).unwrap());
        assert!(!bruhat_leq(&rs, &s1, &s0, 14).unwrap());
        // cutoff guard
        assert!(bruhat_leq(&rs, &s0, &s0s1s0, 2).is_err());
    }

    #[test]
    fn reduced_words_are_reduced() {
        let rs = c2();
        let lam = Weight(vec![1, 2]); // = 2 a1 + 3 a2, in Q
        let t = AffineElement::translation(&rs, lam);
        let w = affine_reduced_word(&rs, &t).unwrap();
        assert_eq!(w.len() as i64, t.length(&rs));
        assert_eq!(element_from_affine_word(&rs, &w), t);
        // omega_2 is not in Q
        let t2 = AffineElement::translation(&rs, Weight(vec![0, 1]));
        assert!(affine_reduced_word(&rs, &t2).is_none());
        let (g, v) = omega_decompose(&rs, &t2).unwrap();
        assert_eq!(g.mul(&rs, &v), t2);
        assert!(v.in_affine_subgroup(&rs));
    }

    #[test]
    fn length_matches_alcove_separation() {
        for rs in [a1(), c2()] {
            let words = [
                vec![],
                vec![0u8],
                vec![0, 1],
                vec![1, 0, 1],
                vec![0, 1, 0, 1],
                vec![1, 0],
            ];
            let lams = [
                Weight::zero(rs.dim),
                rs.simple_root(0),
                rs.rho.clone().add(&rs.rho),
                rs.simple_root(0).neg(),
            ];
            for word in &words {
                if word.iter().any(|&i| i as usize >= rs.n_simple) {
                    continue;
                }
                for lam in &lams {
                    let x = AffineElement {
                        finite: WeylElement::from_word(&rs, word),
                        translation: lam.clone(),
                    };
                    assert_eq!(
                        x.length(&rs),
                        length_by_alcove_separation(&rs, &x),
                        "length mismatch for {} in {}",
                        x,
                        rs.name()
                    );
                }
            }
        }
    }

    #[test]
    fn lower_interval_subword_closure() {
        let rs = a1();
        let y = element_from_affine_word(&rs, &[0, 1, 0]);
        let interval = bruhat_lower_interval(&rs, &y, 14).unwrap();
        assert_eq!(interval.len(), 6); // e, s0, s1, s0s1, s1s0, s0s1s0
        for x in &interval {
            assert!(bruhat_leq(&rs, x, &y, 14).unwrap());
        }
    }
}
