//! Reduced irreducible root systems of types A, B, C, D, G2 (plus the
//! reductive GL(n) weight lattice used by the type A tableau formulas),
//! with Weyl group actions, lengths, inversion sets, orbits, stabilizers,
//! and the dominance order.
//!
//! Weights are stored in fundamental-weight coordinates: the i-th entry of
//! a weight is its pairing with the i-th simple coroot. In GL(n) mode a
//! weight is an ordinary integer vector on the Z^n lattice. Every positive
//! root carries its coordinates in all three relevant bases (weight
//! coordinates, simple-root coordinates, simple-coroot coordinates of its
//! coroot), so pairings are table lookups.

use crate::error::Error;
use crate::poly::ZPoly;
use std::collections::{HashMap, VecDeque};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    G2,
    /// Reductive GL(n): the Z^n lattice with S_n permuting coordinates.
    Gl,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::G2 => "G2",
            CartanType::Gl => "GL",
        };
        write!(f, "{}", s)
    }
}

/// Integer weight vector; fundamental-weight coordinates, or plain Z^n
/// coordinates in GL(n) mode.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.dim(), other.dim(), "weight dimension mismatch");
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.dim(), other.dim(), "weight dimension mismatch");
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }

    fn dot(&self, functional: &[i64]) -> i64 {
        self.0.iter().zip(functional).map(|(a, b)| a * b).sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Small dense integer matrix acting on weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat {
    pub n: usize,
    pub a: Vec<i64>,
}

impl Mat {
    pub fn identity(n: usize) -> Self {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        Mat { n, a }
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let n = self.n;
        let mut out = vec![0i64; n];
        for i in 0..n {
            let mut s = 0;
            for j in 0..n {
                s += self.a[i * n + j] * w.0[j];
            }
            out[i] = s;
        }
        Weight(out)
    }

    pub fn compose(&self, other: &Mat) -> Mat {
        // (self * other)(v) = self(other(v))
        let n = self.n;
        let mut a = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let c = self.a[i * n + k];
                if c == 0 {
                    continue;
                }
                for j in 0..n {
                    a[i * n + j] += c * other.a[k * n + j];
                }
            }
        }
        Mat { n, a }
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(self.n)
    }
}

/// A positive root with all bases precomputed.
#[derive(Clone, Debug)]
pub struct PosRoot {
    /// The root as a weight vector (for `x^alpha` shifts).
    pub vec: Weight,
    /// Coordinates of the coroot over the simple coroots; doubles as the
    /// linear functional `<., alpha^vee>` on weight coordinates.
    pub coroot: Vec<i64>,
    /// Coordinates of the root over the simple roots.
    pub simple_coords: Vec<i64>,
}

impl PosRoot {
    /// Height of the coroot, `<rho, alpha^vee>`.
    pub fn coroot_height(&self) -> i64 {
        self.coroot.iter().sum()
    }

    pub fn root_height(&self) -> i64 {
        self.simple_coords.iter().sum()
    }
}

pub struct RootSystem {
    pub cartan_type: CartanType,
    /// User-facing rank (for GL(n) this is n).
    pub rank: usize,
    /// Number of simple reflections (rank, or n-1 for GL(n)).
    pub n_simple: usize,
    /// Length of weight coordinate vectors (rank, or n for GL(n)).
    pub dim: usize,
    /// Cartan matrix `<alpha_i, alpha_j^vee>`; empty in GL(n) mode.
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<PosRoot>,
    /// Dominance-highest root theta.
    pub highest_root: usize,
    /// Root whose coroot is the highest coroot; wall of the fundamental
    /// alcove. Coincides with `highest_root` in simply-laced types.
    pub alcove_root: usize,
    /// rho (all-ones fundamental coordinates) or delta = (n-1,...,1,0) in
    /// GL(n) mode.
    pub rho: Weight,
    /// Functional `<., 2 rho^vee>` = sum of all positive coroots.
    pub two_rho_check: Vec<i64>,
    /// Largest rank for which whole-Weyl-group enumerations are permitted.
    pub rank_guard: usize,
    simple_mats: Vec<Mat>,
    /// weight-vector -> (positive root index, is_positive)
    root_lookup: HashMap<Vec<i64>, (usize, bool)>,
    /// Rational inverse for root-coordinate conversion: row vector w times
    /// `coords_inv` divided by `coords_den` gives simple-root coordinates.
    coords_inv: Vec<Vec<i64>>,
    coords_den: i64,
}

fn cartan_matrix(ct: CartanType, n: usize) -> Result<Vec<Vec<i64>>, Error> {
    let chain = |n: usize| {
        let mut c = vec![vec![0i64; n]; n];
        for i in 0..n {
            c[i][i] = 2;
        }
        for i in 0..n.saturating_sub(1) {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
        c
    };
    match ct {
        CartanType::A => {
            if n < 1 {
                return Err(Error::Unsupported(format!("type A requires rank >= 1, got {}", n)));
            }
            Ok(chain(n))
        }
        CartanType::B => {
            if n < 2 {
                return Err(Error::Unsupported(format!("type B requires rank >= 2, got {}", n)));
            }
            // Short simple root first: <alpha_1, alpha_2^vee> = -1,
            // <alpha_2, alpha_1^vee> = -2.
            let mut c = chain(n);
            c[1][0] = -2;
            Ok(c)
        }
        CartanType::C => {
            if n < 2 {
                return Err(Error::Unsupported(format!("type C requires rank >= 2, got {}", n)));
            }
            // Long simple root first: <alpha_1, alpha_2^vee> = -2, matching
            // the C2 conventions with R+ = {a1, a2, a1+a2, a1+2a2}.
            let mut c = chain(n);
            c[0][1] = -2;
            Ok(c)
        }
        CartanType::D => {
            if n < 3 {
                return Err(Error::Unsupported(format!(
                    "type D requires rank >= 3 (D3 = A3), got {}",
                    n
                )));
            }
            let mut c = vec![vec![0i64; n]; n];
            for i in 0..n {
                c[i][i] = 2;
            }
            for i in 0..n - 2 {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
            c[n - 3][n - 1] = -1;
            c[n - 1][n - 3] = -1;
            Ok(c)
        }
        CartanType::G2 => {
            if n != 2 {
                return Err(Error::Unsupported(format!("type G2 has rank 2, got {}", n)));
            }
            Ok(vec![vec![2, -1], [-3, 2].to_vec()])
        }
        CartanType::Gl => unreachable!("GL(n) has no Cartan matrix here"),
    }
}

/// Invert a small integer matrix, returning (adjugate-style inverse, den)
/// with inverse = mat / den exactly.
fn invert_int_matrix(m: &[Vec<i64>]) -> (Vec<Vec<i64>>, i64) {
    let n = m.len();
    // Fraction-free Gauss-Jordan on rationals encoded as i128 fractions is
    // overkill at rank <= 8; use f64-free exact adjugate via Bareiss.
    // Simpler: compute det and solve n linear systems by Cramer with
    // cofactor expansion. n <= 8 so this is fine.
    fn det(a: &mut Vec<Vec<i128>>) -> i128 {
        let n = a.len();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k][k] == 0 {
                let mut found = false;
                for r in k + 1..n {
                    if a[r][k] != 0 {
                        a.swap(k, r);
                        sign = -sign;
                        found = true;
                        break;
                    }
                }
                if !found {
                    return 0;
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
                a[i][k] = 0;
            }
            prev = a[k][k];
        }
        sign * a[n - 1][n - 1]
    }
    let as_i128: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let d = det(&mut as_i128.clone());
    assert!(d != 0, "Cartan matrix is singular");
    let mut inv = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            // Cofactor C_ji / det.
            let mut minor: Vec<Vec<i128>> = Vec::with_capacity(n - 1);
            for r in 0..n {
                if r == j {
                    continue;
                }
                let mut row = Vec::with_capacity(n - 1);
                for c in 0..n {
                    if c == i {
                        continue;
                    }
                    row.push(as_i128[r][c]);
                }
                minor.push(row);
            }
            let md = if n == 1 { 1 } else { det(&mut minor) };
            let sgn = if (i + j) % 2 == 0 { 1 } else { -1 };
            inv[i][j] = (sgn * md) as i64;
        }
    }
    if d < 0 {
        for row in inv.iter_mut() {
            for x in row.iter_mut() {
                *x = -*x;
            }
        }
    }
    (inv, d.unsigned_abs() as i64 * if d < 0 { 1 } else { 1 })
}

impl RootSystem {
    pub fn new(cartan_type: CartanType, rank: usize) -> Result<RootSystem, Error> {
        Self::with_guard(cartan_type, rank, 6)
    }

    pub fn with_guard(cartan_type: CartanType, rank: usize, rank_guard: usize) -> Result<RootSystem, Error> {
        match cartan_type {
            CartanType::Gl => Self::build_gl(rank, rank_guard),
            _ => Self::build_semisimple(cartan_type, rank, rank_guard),
        }
    }

    fn build_semisimple(ct: CartanType, rank: usize, rank_guard: usize) -> Result<RootSystem, Error> {
        let cartan = cartan_matrix(ct, rank)?;
        let n = rank;
        // Close the simple (root, coroot) pairs under all simple reflections.
        // Track simple-root coordinates c and simple-coroot coordinates d:
        //   s_i(c) = c - (sum_j c_j C[j][i]) e_i
        //   s_i(d) = d - (sum_j d_j C[i][j]) e_i
        let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = VecDeque::new();
        for i in 0..n {
            let mut c = vec![0i64; n];
            c[i] = 1;
            let d = c.clone();
            seen.insert(c.clone(), d.clone());
            queue.push_back((c, d));
        }
        while let Some((c, d)) = queue.pop_front() {
            for i in 0..n {
                let pc: i64 = (0..n).map(|j| c[j] * cartan[j][i]).sum();
                let mut c2 = c.clone();
                c2[i] -= pc;
                let pd: i64 = (0..n).map(|j| d[j] * cartan[i][j]).sum();
                let mut d2 = d.clone();
                d2[i] -= pd;
                if !seen.contains_key(&c2) {
                    seen.insert(c2.clone(), d2.clone());
                    queue.push_back((c2, d2));
                }
            }
        }
        let mut positive_roots = Vec::new();
        for (c, d) in seen.iter() {
            if c.iter().all(|&x| x >= 0) {
                // weight coordinates: fc_j = sum_i c_i C[i][j]
                let fc: Vec<i64> = (0..n).map(|j| (0..n).map(|i| c[i] * cartan[i][j]).sum()).collect();
                positive_roots.push(PosRoot {
                    vec: Weight(fc),
                    coroot: d.clone(),
                    simple_coords: c.clone(),
                });
            }
        }
        // Deterministic order: by root height, then by coordinates.
        positive_roots.sort_by(|a, b| {
            (a.root_height(), &a.simple_coords).cmp(&(b.root_height(), &b.simple_coords))
        });
        // Sanity: reducedness and the simple-root count.
        let n_simple_found = positive_roots
            .iter()
            .filter(|r| r.simple_coords.iter().sum::<i64>() == 1)
            .count();
        assert_eq!(n_simple_found, n, "closure lost simple roots");

        let mut root_lookup = HashMap::new();
        for (idx, r) in positive_roots.iter().enumerate() {
            root_lookup.insert(r.vec.0.clone(), (idx, true));
            root_lookup.insert(r.vec.neg().0, (idx, false));
        }
        let highest_root = positive_roots
            .iter()
            .enumerate()
            .max_by_key(|(_, r)| (r.root_height(), r.simple_coords.clone()))
            .map(|(i, _)| i)
            .unwrap();
        let alcove_root = positive_roots
            .iter()
            .enumerate()
            .max_by_key(|(_, r)| (r.coroot_height(), r.coroot.clone()))
            .map(|(i, _)| i)
            .unwrap();
        let mut two_rho_check = vec![0i64; n];
        for r in &positive_roots {
            for j in 0..n {
                two_rho_check[j] += r.coroot[j];
            }
        }
        let mut simple_mats = Vec::with_capacity(n);
        for i in 0..n {
            // s_i(lambda)_k = lambda_k - lambda_i * C[i][k]
            let mut m = Mat::identity(n);
            for k in 0..n {
                m.a[k * n + i] -= cartan[i][k];
            }
            simple_mats.push(m);
        }
        let (coords_inv, coords_den) = invert_int_matrix(&cartan);
        let rs = RootSystem {
            cartan_type: ct,
            rank,
            n_simple: n,
            dim: n,
            cartan,
            positive_roots,
            highest_root,
            alcove_root,
            rho: Weight(vec![1; n]),
            two_rho_check,
            rank_guard,
            simple_mats,
            root_lookup,
            coords_inv,
            coords_den,
        };
        rs.validate();
        Ok(rs)
    }

    fn build_gl(n: usize, rank_guard: usize) -> Result<RootSystem, Error> {
        if n < 1 {
            return Err(Error::Unsupported(format!("GL(n) requires n >= 1, got {}", n)));
        }
        let mut positive_roots = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut v = vec![0i64; n];
                v[i] = 1;
                v[j] = -1;
                let mut sc = vec![0i64; n.saturating_sub(1)];
                for k in i..j {
                    sc[k] = 1;
                }
                positive_roots.push(PosRoot {
                    vec: Weight(v.clone()),
                    coroot: v,
                    simple_coords: sc,
                });
            }
        }
        positive_roots.sort_by(|a, b| {
            (a.root_height(), &a.simple_coords).cmp(&(b.root_height(), &b.simple_coords))
        });
        let mut root_lookup = HashMap::new();
        for (idx, r) in positive_roots.iter().enumerate() {
            root_lookup.insert(r.vec.0.clone(), (idx, true));
            root_lookup.insert(r.vec.neg().0, (idx, false));
        }
        let highest = positive_roots
            .iter()
            .enumerate()
            .max_by_key(|(_, r)| r.root_height())
            .map(|(i, _)| i)
            .unwrap_or(0);
        let mut two_rho_check = vec![0i64; n];
        for r in &positive_roots {
            for j in 0..n {
                two_rho_check[j] += r.coroot[j];
            }
        }
        let mut simple_mats = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let mut m = Mat::identity(n);
            m.a[i * n + i] = 0;
            m.a[i * n + i + 1] = 1;
            m.a[(i + 1) * n + i] = 1;
            m.a[(i + 1) * n + i + 1] = 0;
            simple_mats.push(m);
        }
        let rho = Weight((0..n).map(|i| (n - 1 - i) as i64).collect());
        Ok(RootSystem {
            cartan_type: CartanType::Gl,
            rank: n,
            n_simple: n.saturating_sub(1),
            dim: n,
            cartan: Vec::new(),
            positive_roots,
            highest_root: highest,
            alcove_root: highest,
            rho,
            two_rho_check,
            rank_guard,
            simple_mats,
            root_lookup,
            coords_inv: Vec::new(),
            coords_den: 1,
        })
    }

    fn validate(&self) {
        // <rho, alpha_i^vee> = 1 on simple roots, and positivity structure.
        for r in &self.positive_roots {
            assert!(r.simple_coords.iter().all(|&c| c >= 0));
            if r.root_height() == 1 {
                assert_eq!(self.pairing_weight(&self.rho, r), 1);
            }
            // reducedness: 2*alpha is not a root
            assert!(!self.root_lookup.contains_key(&r.vec.scale(2).0));
        }
    }

    /// Parse "A2", "C3", "G2", "GL4".
    pub fn parse_name(name: &str) -> Result<RootSystem, Error> {
        let upper = name.to_uppercase();
        let (ct, rest) = if let Some(r) = upper.strip_prefix("GL") {
            (CartanType::Gl, r)
        } else if let Some(r) = upper.strip_prefix("G2") {
            if !r.is_empty() && r != "2" {
                return Err(Error::Unsupported(format!("bad root system name {}", name)));
            }
            return RootSystem::new(CartanType::G2, 2);
        } else {
            let ct = match upper.chars().next() {
                Some('A') => CartanType::A,
                Some('B') => CartanType::B,
                Some('C') => CartanType::C,
                Some('D') => CartanType::D,
                _ => return Err(Error::Unsupported(format!("bad root system name {}", name))),
            };
            (ct, &upper[1..])
        };
        let rank: usize = rest
            .parse()
            .map_err(|_| Error::Unsupported(format!("bad rank in root system name {}", name)))?;
        RootSystem::new(ct, rank)
    }

    pub fn name(&self) -> String {
        match self.cartan_type {
            CartanType::G2 => "G2".to_string(),
            CartanType::Gl => format!("GL{}", self.rank),
            t => format!("{}{}", t, self.rank),
        }
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// `<lambda, alpha^vee>` for the positive root with the given index.
    pub fn pairing(&self, lambda: &Weight, root_idx: usize) -> i64 {
        self.pairing_weight(lambda, &self.positive_roots[root_idx])
    }

    fn pairing_weight(&self, lambda: &Weight, r: &PosRoot) -> i64 {
        lambda.dot(&r.coroot)
    }

    /// `<lambda, alpha_i^vee>` for a simple root.
    pub fn simple_pairing(&self, lambda: &Weight, i: usize) -> i64 {
        match self.cartan_type {
            CartanType::Gl => lambda.0[i] - lambda.0[i + 1],
            _ => lambda.0[i],
        }
    }

    /// The i-th simple root as a weight vector.
    pub fn simple_root(&self, i: usize) -> Weight {
        match self.cartan_type {
            CartanType::Gl => {
                let mut v = vec![0i64; self.dim];
                v[i] = 1;
                v[i + 1] = -1;
                Weight(v)
            }
            _ => Weight(self.cartan[i].clone()),
        }
    }

    /// `<lambda, 2 rho^vee>`, and its half when integral.
    pub fn pairing_2rho_check(&self, lambda: &Weight) -> i64 {
        lambda.dot(&self.two_rho_check)
    }

    /// `<lambda, rho^vee>`; asserts integrality (true on the root lattice).
    pub fn pairing_rho_check(&self, lambda: &Weight) -> i64 {
        let d = self.pairing_2rho_check(lambda);
        assert!(d % 2 == 0, "<lambda, rho^vee> is not integral for {}", lambda);
        d / 2
    }

    pub fn simple_reflection_mat(&self, i: usize) -> &Mat {
        &self.simple_mats[i]
    }

    pub fn reflect_simple(&self, lambda: &Weight, i: usize) -> Weight {
        self.simple_mats[i].apply(lambda)
    }

    /// Look up a weight vector as a root: (positive index, is_positive).
    pub fn classify_root(&self, v: &Weight) -> Option<(usize, bool)> {
        self.root_lookup.get(&v.0).copied()
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        (0..self.n_simple).all(|i| self.simple_pairing(lambda, i) >= 0)
    }

    pub fn is_strictly_dominant(&self, lambda: &Weight) -> bool {
        (0..self.n_simple).all(|i| self.simple_pairing(lambda, i) > 0)
    }

    /// Simple-root coordinates of a weight, when it lies in the root
    /// lattice Q (tensor rationals otherwise -> None when non-integral;
    /// None also when outside the span, which only happens for GL).
    pub fn root_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        match self.cartan_type {
            CartanType::Gl => {
                // w = sum c_k (e_k - e_{k+1}): c_k = partial sums; need total 0.
                let total: i64 = w.0.iter().sum();
                if total != 0 {
                    return None;
                }
                let mut c = Vec::with_capacity(self.dim - 1);
                let mut acc = 0;
                for k in 0..self.dim - 1 {
                    acc += w.0[k];
                    c.push(acc);
                }
                Some(c)
            }
            _ => {
                // solve c * C = w  =>  c = w * C^{-1}; coords_inv is det*C^{-1}.
                let n = self.dim;
                let mut c = vec![0i64; n];
                for k in 0..n {
                    let mut s: i64 = 0;
                    for j in 0..n {
                        s += w.0[j] * self.coords_inv[j][k];
                    }
                    if s % self.coords_den != 0 {
                        return None;
                    }
                    c[k] = s / self.coords_den;
                }
                Some(c)
            }
        }
    }

    /// Is `w` a nonnegative integer combination of positive roots?
    pub fn in_positive_root_cone(&self, w: &Weight) -> bool {
        match self.root_coords(w) {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        }
    }

    /// Dominance order: mu <= lambda iff lambda - mu is a nonnegative
    /// integer combination of positive roots.
    pub fn dominance_leq(&self, mu: &Weight, lambda: &Weight) -> bool {
        self.in_positive_root_cone(&lambda.sub(mu))
    }

    /// The unique dominant element of the orbit, with w such that
    /// w(dominant) = lambda.
    pub fn dominant_representative(&self, lambda: &Weight) -> (Weight, WeylElement) {
        let mut x = lambda.clone();
        let mut word = Vec::new();
        loop {
            let mut done = true;
            for i in 0..self.n_simple {
                if self.simple_pairing(&x, i) < 0 {
                    x = self.reflect_simple(&x, i);
                    word.push(i as u8);
                    done = false;
                    break;
                }
            }
            if done {
                break;
            }
        }
        let w = WeylElement::from_word(self, &word);
        debug_assert_eq!(w.act(&x), *lambda);
        (x, w)
    }

    /// Orbit of a weight under W (BFS; no full group enumeration).
    pub fn orbit(&self, mu: &Weight) -> Vec<Weight> {
        let mut seen = std::collections::BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(mu.clone());
        queue.push_back(mu.clone());
        while let Some(x) = queue.pop_front() {
            for i in 0..self.n_simple {
                let y = self.reflect_simple(&x, i);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn check_rank_guard(&self) -> Result<(), Error> {
        if self.rank > self.rank_guard {
            Err(Error::RankGuard { rank: self.rank, guard: self.rank_guard })
        } else {
            Ok(())
        }
    }

    /// All Weyl group elements with their lengths, by BFS from the identity.
    pub fn enumerate_weyl(&self) -> Result<Vec<WeylElement>, Error> {
        self.check_rank_guard()?;
        let mut seen: HashMap<Mat, usize> = HashMap::new();
        let id = WeylElement::identity(self);
        seen.insert(id.mat.clone(), 0);
        let mut out = vec![id];
        let mut head = 0;
        while head < out.len() {
            let cur = out[head].clone();
            head += 1;
            for i in 0..self.n_simple {
                let next_mat = self.simple_mats[i].compose(&cur.mat);
                if !seen.contains_key(&next_mat) {
                    seen.insert(next_mat.clone(), 0);
                    let mut word = vec![i as u8];
                    word.extend_from_slice(&cur.word);
                    let inv = cur.inv.compose(&self.simple_mats[i]);
                    let el = WeylElement {
                        word: canonical_word(self, &next_mat, &inv),
                        mat: next_mat,
                        inv,
                    };
                    out.push(el);
                }
            }
        }
        Ok(out)
    }

    /// |W| from the classification (no enumeration).
    pub fn weyl_order(&self) -> u64 {
        fn fact(n: u64) -> u64 {
            (1..=n).product::<u64>().max(1)
        }
        let n = self.rank as u64;
        match self.cartan_type {
            CartanType::A => fact(n + 1),
            CartanType::B | CartanType::C => (1u64 << n) * fact(n),
            CartanType::D => (1u64 << (n - 1)) * fact(n),
            CartanType::G2 => 12,
            CartanType::Gl => fact(n),
        }
    }

    /// Poincare polynomial of the stabilizer of mu, and the orbit.
    pub fn orbit_and_stabilizer(&self, mu: &Weight) -> Result<(Vec<Weight>, ZPoly), Error> {
        let w_all = self.enumerate_weyl()?;
        let mut poincare = ZPoly::zero();
        for w in &w_all {
            if w.act(mu) == *mu {
                poincare.add_term(w.length() as i64, 1.into());
            }
        }
        let orbit = self.orbit(mu);
        assert_eq!(
            orbit.len() as u64 * poincare.eval_at_one().to_string().parse::<u64>().unwrap(),
            self.weyl_order(),
            "orbit-stabilizer mismatch"
        );
        Ok((orbit, poincare))
    }

    /// Poincare polynomial W_0(t) of the full Weyl group.
    pub fn poincare_w0(&self) -> Result<ZPoly, Error> {
        let w_all = self.enumerate_weyl()?;
        let mut p = ZPoly::zero();
        for w in &w_all {
            p.add_term(w.length() as i64, 1.into());
        }
        Ok(p)
    }

    /// The longest element of W (no enumeration; walks rho to the
    /// antidominant chamber).
    pub fn longest_element(&self) -> WeylElement {
        let mut x = self.rho.clone();
        let mut word = Vec::new();
        loop {
            let mut found = false;
            for i in 0..self.n_simple {
                if self.simple_pairing(&x, i) > 0 {
                    x = self.reflect_simple(&x, i);
                    word.push(i as u8);
                    found = true;
                    break;
                }
            }
            if !found {
                break;
            }
        }
        // word applied to rho lands antidominant: w0 = s_{i_k} ... s_{i_1}
        let rev: Vec<u8> = word.iter().rev().copied().collect();
        WeylElement::from_word(self, &rev)
    }
}

/// Finite Weyl group element with canonical (lexicographically least)
/// reduced word and cached action matrices.
#[derive(Clone, Debug)]
pub struct WeylElement {
    word: Vec<u8>,
    mat: Mat,
    inv: Mat,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}
impl Eq for WeylElement {}
impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.word.len(), &self.word).cmp(&(other.word.len(), &other.word))
    }
}
impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

/// Lexicographically least reduced word for the element with action matrix
/// `mat` and inverse `inv`.
fn canonical_word(rs: &RootSystem, mat: &Mat, inv: &Mat) -> Vec<u8> {
    let mut word = Vec::new();
    let mut m = mat.clone();
    let mut mi = inv.clone();
    loop {
        if m.is_identity() {
            break;
        }
        let mut chosen = None;
        for i in 0..rs.n_simple {
            // left descent at i <=> w^{-1} alpha_i < 0
            let img = mi.apply(&rs.simple_root(i));
            let (_, pos) = rs.classify_root(&img).expect("image of a root is a root");
            if !pos {
                chosen = Some(i);
                break;
            }
        }
        let i = chosen.expect("non-identity element with no descent");
        m = rs.simple_mats[i].compose(&m);
        mi = mi.compose(&rs.simple_mats[i]);
        word.push(i as u8);
    }
    word
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement { word: Vec::new(), mat: Mat::identity(rs.dim), inv: Mat::identity(rs.dim) }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        assert!(i < rs.n_simple, "simple reflection index out of range");
        WeylElement {
            word: vec![i as u8],
            mat: rs.simple_mats[i].clone(),
            inv: rs.simple_mats[i].clone(),
        }
    }

    pub fn from_word(rs: &RootSystem, word: &[u8]) -> Self {
        let mut el = WeylElement::identity(rs);
        for &i in word {
            el = el.mul(rs, &WeylElement::simple(rs, i as usize));
        }
        el
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn sign(&self) -> i64 {
        if self.word.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn act(&self, lambda: &Weight) -> Weight {
        self.mat.apply(lambda)
    }

    pub fn act_inverse(&self, lambda: &Weight) -> Weight {
        self.inv.apply(lambda)
    }

    /// The shifted dot action `w(lambda + rho) - rho`.
    pub fn dot_act(&self, rs: &RootSystem, lambda: &Weight) -> Weight {
        self.act(&lambda.add(&rs.rho)).sub(&rs.rho)
    }

    pub fn mul(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        let mat = self.mat.compose(&other.mat);
        let inv = other.inv.compose(&self.inv);
        let word = canonical_word(rs, &mat, &inv);
        WeylElement { word, mat, inv }
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let word = canonical_word(rs, &self.inv, &self.mat);
        WeylElement { word, mat: self.inv.clone(), inv: self.mat.clone() }
    }

    /// Inversion set R(w) = {alpha > 0 | w alpha < 0} as root indices.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<usize> {
        let mut out = Vec::new();
        for (idx, r) in rs.positive_roots.iter().enumerate() {
            let img = self.mat.apply(&r.vec);
            let (_, pos) = rs.classify_root(&img).expect("root image is a root");
            if !pos {
                out.push(idx);
            }
        }
        out
    }

    /// Inversion set computed from a reduced word:
    /// {alpha_{i_p}, s_{i_p} alpha_{i_{p-1}}, ...}.
    pub fn inversion_set_from_word(&self, rs: &RootSystem) -> Vec<usize> {
        let p = self.word.len();
        let mut out = Vec::new();
        let mut acc = WeylElement::identity(rs);
        // acc runs s_{i_p}, s_{i_p} s_{i_{p-1}}, ... from the right end.
        for k in (0..p).rev() {
            let alpha = rs.simple_root(self.word[k] as usize);
            let img = acc.act(&alpha);
            let (idx, pos) = rs.classify_root(&img).expect("root image is a root");
            assert!(pos, "word-based inversion listing produced a negative root");
            out.push(idx);
            acc = acc.mul(rs, &WeylElement::simple(rs, self.word[k] as usize));
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.word.iter().map(|i| format!("s{}", i + 1)).collect();
        write!(f, "{}", parts.join(""))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_positive_roots_match_example() {
        let rs = RootSystem::new(CartanType::C, 2).unwrap();
        let coords: Vec<Vec<i64>> =
            rs.positive_roots.iter().map(|r| r.simple_coords.clone()).collect();
        assert_eq!(coords, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]);
        assert_eq!(rs.weyl_order(), 8);
        assert_eq!(rs.enumerate_weyl().unwrap().len(), 8);
        // (a1+a2)^vee = 2 a1^vee + a2^vee
        let idx = rs
            .positive_roots
            .iter()
            .position(|r| r.simple_coords == vec![1, 1])
            .unwrap();
        assert_eq!(rs.positive_roots[idx].coroot, vec![2, 1]);
        // alcove root is a1+a2, dominance-highest root is a1+2a2
        assert_eq!(rs.positive_roots[rs.alcove_root].simple_coords, vec![1, 1]);
        assert_eq!(rs.positive_roots[rs.highest_root].simple_coords, vec![1, 2]);
    }

    #[test]
    fn a1_trivial_data() {
        let rs = RootSystem::new(CartanType::A, 1).unwrap();
        assert_eq!(rs.num_positive_roots(), 1);
        assert_eq!(rs.rho, Weight(vec![1]));
        let w0 = rs.longest_element();
        assert_eq!(w0.word(), &[0]);
    }

    #[test]
    fn g2_root_count_and_rho_pairings() {
        let rs = RootSystem::new(CartanType::G2, 2).unwrap();
        assert_eq!(rs.num_positive_roots(), 6);
        assert_eq!(rs.weyl_order(), 12);
        assert_eq!(rs.enumerate_weyl().unwrap().len(), 12);
        let mut hts: Vec<i64> =
            (0..6).map(|i| rs.pairing(&rs.rho, i)).collect();
        hts.sort_unstable();
        assert_eq!(hts, vec![1, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn pairing_examples() {
        let rs = RootSystem::new(CartanType::C, 2).unwrap();
        let idx = rs
            .positive_roots
            .iter()
            .position(|r| r.simple_coords == vec![1, 1])
            .unwrap();
        assert_eq!(rs.pairing(&rs.rho, idx), 3);
        for i in 0..rs.n_simple {
            let simple_idx = rs
                .positive_roots
                .iter()
                .position(|r| r.root_height() == 1 && r.simple_coords[i] == 1)
                .unwrap();
            assert_eq!(rs.pairing(&rs.rho, simple_idx), 1);
        }
        // <2 omega_2, rho^vee> = 3, so l(t_{2 omega_2}) = 6
        let lam = Weight(vec![0, 2]);
        assert_eq!(rs.pairing_rho_check(&lam), 3);
    }

    #[test]
    fn actions_and_dot_action() {
        for rs in [
            RootSystem::new(CartanType::A, 2).unwrap(),
            RootSystem::new(CartanType::C, 2).unwrap(),
        ] {
            for i in 0..rs.n_simple {
                let si = WeylElement::simple(&rs, i);
                // s_i rho = rho - alpha_i
                assert_eq!(si.act(&rs.rho), rs.rho.sub(&rs.simple_root(i)));
                // identity fixes everything
                let id = WeylElement::identity(&rs);
                assert_eq!(id.act(&rs.rho), rs.rho);
                // w(lambda+rho)-rho with w = s_i sends -alpha_i to 0
                let ma = rs.simple_root(i).neg();
                assert_eq!(si.dot_act(&rs, &ma), Weight::zero(rs.dim));
            }
        }
    }

    #[test]
    fn inversion_sets_and_lengths() {
        let rs = RootSystem::new(CartanType::A, 2).unwrap();
        let id = WeylElement::identity(&rs);
        assert!(id.inversion_set(&rs).is_empty());
        // s1 s2 in A2: R(w) = {alpha_2, s_2 alpha_1 = alpha_1 + alpha_2}
        let w = WeylElement::from_word(&rs, &[0, 1]);
        assert_eq!(w.length(), 2);
        let inv = w.inversion_set(&rs);
        let coords: Vec<Vec<i64>> =
            inv.iter().map(|&i| rs.positive_roots[i].simple_coords.clone()).collect();
        assert_eq!(coords, vec![vec![0, 1], vec![1, 1]]);
        assert_eq!(w.inversion_set_from_word(&rs), inv);

        let c2 = RootSystem::new(CartanType::C, 2).unwrap();
        let w0 = c2.longest_element();
        assert_eq!(w0.length(), 4);
        assert_eq!(w0.inversion_set(&c2).len(), 4);
        assert!(w0.mul(&c2, &w0).is_identity());
    }

    #[test]
    fn word_inversion_formula_all_ranks_up_to_three() {
        for rs in [
            RootSystem::new(CartanType::A, 1).unwrap(),
            RootSystem::new(CartanType::A, 2).unwrap(),
            RootSystem::new(CartanType::A, 3).unwrap(),
            RootSystem::new(CartanType::B, 2).unwrap(),
            RootSystem::new(CartanType::C, 2).unwrap(),
            RootSystem::new(CartanType::B, 3).unwrap(),
            RootSystem::new(CartanType::C, 3).unwrap(),
            RootSystem::new(CartanType::D, 3).unwrap(),
            RootSystem::new(CartanType::G2, 2).unwrap(),
        ] {
            let all = rs.enumerate_weyl().unwrap();
            assert_eq!(all.len() as u64, rs.weyl_order());
            for w in &all {
                assert_eq!(w.inversion_set(&rs), w.inversion_set_from_word(&rs));
                assert_eq!(w.length(), w.inversion_set(&rs).len());
            }
            let w0 = rs.longest_element();
            assert_eq!(w0.length(), rs.num_positive_roots());
        }
    }

    #[test]
    fn braid_and_involution_relations() {
        for rs in [
            RootSystem::new(CartanType::A, 3).unwrap(),
            RootSystem::new(CartanType::C, 3).unwrap(),
            RootSystem::new(CartanType::B, 3).unwrap(),
            RootSystem::new(CartanType::G2, 2).unwrap(),
        ] {
            for i in 0..rs.n_simple {
                let si = WeylElement::simple(&rs, i);
                assert!(si.mul(&rs, &si).is_identity());
                for j in 0..rs.n_simple {
                    if i == j {
                        continue;
                    }
                    let prod = rs.cartan[i][j] * rs.cartan[j][i];
                    let m = match prod {
                        0 => 2,
                        1 => 3,
                        2 => 4,
                        3 => 6,
                        _ => panic!("unexpected Cartan product"),
                    };
                    let mut a = WeylElement::identity(&rs);
                    let mut b = WeylElement::identity(&rs);
                    for k in 0..m {
                        a = a.mul(&rs, &WeylElement::simple(&rs, if k % 2 == 0 { i } else { j }));
                        b = b.mul(&rs, &WeylElement::simple(&rs, if k % 2 == 0 { j } else { i }));
                    }
                    assert_eq!(a, b, "braid relation failed for ({}, {})", i, j);
                }
            }
        }
    }

    #[test]
    fn orbit_stabilizer_and_dominance() {
        let rs = RootSystem::new(CartanType::C, 2).unwrap();
        // mu = 2 omega_2: stabilizer {1, s1}, Poincare 1 + t
        let mu = Weight(vec![0, 2]);
        let (orbit, stab) = rs.orbit_and_stabilizer(&mu).unwrap();
        assert_eq!(orbit.len(), 4);
        assert_eq!(stab, ZPoly::from_pairs(&[(0, 1), (1, 1)]));
        // strictly dominant weight: trivial stabilizer
        let (_, stab2) = rs.orbit_and_stabilizer(&rs.rho).unwrap();
        assert_eq!(stab2, ZPoly::one());
        // mu = 0: W_0(t) = (1+t)^2 (1+t^2)
        let (_, w0t) = rs.orbit_and_stabilizer(&Weight::zero(2)).unwrap();
        let expect = ZPoly::from_pairs(&[(0, 1), (1, 1)])
            .mul(&ZPoly::from_pairs(&[(0, 1), (1, 1)]))
            .mul(&ZPoly::from_pairs(&[(0, 1), (2, 1)]));
        assert_eq!(w0t, expect);

        // dominance examples
        assert!(rs.dominance_leq(&mu, &mu));
        let a2 = RootSystem::new(CartanType::A, 2).unwrap();
        let theta = a2.positive_roots[a2.highest_root].vec.clone();
        assert!(a2.dominance_leq(&Weight::zero(2), &theta));
        // dominant representative round trip
        let w = WeylElement::from_word(&rs, &[0, 1]);
        let moved = w.act(&mu);
        let (rep, back) = rs.dominant_representative(&moved);
        assert_eq!(rep, mu);
        assert_eq!(back.act(&rep), moved);
    }

    #[test]
    fn unsupported_combinations_error() {
        assert!(RootSystem::new(CartanType::G2, 3).is_err());
        assert!(RootSystem::new(CartanType::D, 2).is_err());
        assert!(RootSystem::new(CartanType::B, 1).is_err());
        assert!(RootSystem::parse_name("E8").is_err());
        assert!(RootSystem::parse_name("A2").is_ok());
        assert!(RootSystem::parse_name("GL3").is_ok());
    }

    #[test]
    fn gl_mode_basics() {
        let rs = RootSystem::new(CartanType::Gl, 3).unwrap();
        assert_eq!(rs.num_positive_roots(), 3);
        assert_eq!(rs.rho, Weight(vec![2, 1, 0]));
        let w = WeylElement::simple(&rs, 0);
        assert_eq!(w.act(&Weight(vec![3, 1, 0])), Weight(vec![1, 3, 0]));
        assert!(rs.dominance_leq(&Weight(vec![1, 1, 1]), &Weight(vec![2, 1, 0])));
        assert!(!rs.dominance_leq(&Weight(vec![2, 1, 1]), &Weight(vec![2, 1, 0])));
        let w0 = rs.longest_element();
        assert_eq!(w0.length(), 3);
    }
}
