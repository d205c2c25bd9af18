//! Clifford algebras Cl(R^n), n ≤ 16, with `e_i e_j + e_j e_i = −2δ_ij`.
//!
//! The Cl(R^8) module is `O ⊕ O` with `e_i ↦ [(u, w) ↦ (e_i w, −ē_i u)]`; Cl(R^16) acts on
//! its graded tensor square, so every blade acts by a signed permutation.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::octonion::{mul_table, LinearMap8, TrialityTriple};
use crate::scalar::{ExactMatrix, ExactScalar, SparseMatrix, SparseVec};

/// A signed basis blade `coefficient · e_{i_1} ⋯ e_{i_k}`, indices as a bitmask.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Blade {
    pub n: usize,
    pub indices: u32,
    pub coefficient: ExactScalar,
}

impl Blade {
    pub fn new(n: usize, idx: &[usize], coefficient: ExactScalar) -> Self {
        assert!(n <= 16);
        // reorder into increasing indices, absorbing the sign
        let mut e = CliffordElem::scalar(n, coefficient);
        for &i in idx {
            assert!(i < n);
            e = e.mul(&CliffordElem::generator(n, i));
        }
        let (mask, c) = e.terms.into_iter().next().unwrap_or((0, ExactScalar::zero()));
        Blade {
            n,
            indices: mask,
            coefficient: c,
        }
    }

    pub fn grade(&self) -> u32 {
        self.indices.count_ones()
    }

    pub fn index_list(&self) -> Vec<usize> {
        (0..self.n).filter(|i| self.indices >> i & 1 == 1).collect()
    }
}

/// Sign of `e_A e_B` in terms of the blade `e_{A△B}`.
pub fn blade_sign(a: u32, b: u32) -> i64 {
    let mut swaps = 0u32;
    let mut bb = b;
    while bb != 0 {
        let j = bb.trailing_zeros();
        swaps += (a >> (j + 1)).count_ones();
        bb &= bb - 1;
    }
    swaps += (a & b).count_ones();
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn blade_mul(a: &Blade, b: &Blade) -> Result<Blade> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch(a.n, b.n));
    }
    let s = blade_sign(a.indices, b.indices);
    Ok(Blade {
        n: a.n,
        indices: a.indices ^ b.indices,
        coefficient: &(&a.coefficient * &b.coefficient) * &ExactScalar::from_int(s),
    })
}

/// Sparse element of Cl(R^n).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CliffordElem {
    pub n: usize,
    pub terms: BTreeMap<u32, ExactScalar>,
}

impl CliffordElem {
    pub fn zero(n: usize) -> Self {
        CliffordElem {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(n: usize, c: ExactScalar) -> Self {
        let mut e = Self::zero(n);
        if !c.is_zero() {
            e.terms.insert(0, c);
        }
        e
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, ExactScalar::one())
    }

    pub fn generator(n: usize, i: usize) -> Self {
        Self::blade(n, 1 << i, ExactScalar::one())
    }

    pub fn blade(n: usize, mask: u32, c: ExactScalar) -> Self {
        let mut e = Self::zero(n);
        if !c.is_zero() {
            e.terms.insert(mask, c);
        }
        e
    }

    /// `s · e_{i_1} ⋯ e_{i_k}` for the listed indices in the given order.
    pub fn product_of(n: usize, idx: &[usize], s: i64) -> Self {
        let mut e = Self::scalar(n, ExactScalar::from_int(s));
        for &i in idx {
            e = e.mul(&Self::generator(n, i));
        }
        e
    }

    pub fn from_blade(b: &Blade) -> Self {
        Self::blade(b.n, b.indices, b.coefficient.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.count_ones() % 2 == 0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut t = self.terms.clone();
        for (m, c) in &o.terms {
            let e = t.entry(*m).or_insert_with(ExactScalar::zero);
            *e += c;
            if e.is_zero() {
                t.remove(m);
            }
        }
        CliffordElem { n: self.n, terms: t }
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        CliffordElem {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&ExactScalar::from_int(-1))
    }

    pub fn mul(&self, o: &Self) -> Self {
        clifford_mul(self, o).expect("dimension mismatch")
    }

    /// Reversion `e_{i_1}⋯e_{i_k} ↦ e_{i_k}⋯e_{i_1}`.
    pub fn reverse(&self) -> Self {
        CliffordElem {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let k = m.count_ones();
                    if (k * (k.saturating_sub(1)) / 2) % 2 == 0 {
                        (*m, c.clone())
                    } else {
                        (*m, -c)
                    }
                })
                .collect(),
        }
    }

    pub fn scalar_part(&self) -> ExactScalar {
        self.terms.get(&0).cloned().unwrap_or_default()
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|m| *m == 0)
    }

    /// Inverse for elements with `g·reverse(g)` a nonzero scalar.
    pub fn inverse(&self) -> Result<Self> {
        let s = self.mul(&self.reverse());
        if !s.is_scalar() {
            return Err(Error::NotInvertible);
        }
        let inv = s.scalar_part().inv().ok_or(Error::NotInvertible)?;
        Ok(self.reverse().scale(&inv))
    }

    /// Image under `e_i ↦ e_{i+k}` in Cl(R^m).
    pub fn shifted(&self, k: usize, m: usize) -> Self {
        assert!(self.n + k <= m);
        CliffordElem {
            n: m,
            terms: self.terms.iter().map(|(mask, c)| (mask << k, c.clone())).collect(),
        }
    }

    /// Pseudoscalar `e_0 ⋯ e_{n−1}`.
    pub fn volume(n: usize) -> Self {
        Self::blade(n, (1u32 << n) - 1, ExactScalar::one())
    }
}

pub fn clifford_mul(a: &CliffordElem, b: &CliffordElem) -> Result<CliffordElem> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch(a.n, b.n));
    }
    let mut t: BTreeMap<u32, ExactScalar> = BTreeMap::new();
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let s = blade_sign(*ma, *mb);
            let p = ca * cb;
            let e = t.entry(ma ^ mb).or_insert_with(ExactScalar::zero);
            if s > 0 {
                *e += &p;
            } else {
                *e -= &p;
            }
        }
    }
    t.retain(|_, c| !c.is_zero());
    Ok(CliffordElem { n: a.n, terms: t })
}

/// Matrix of `u ↦ g u g^{−1}` on the vector grade.
pub fn vector_rep_matrix(g: &CliffordElem, n: usize) -> Result<ExactMatrix> {
    if g.n != n {
        return Err(Error::DimensionMismatch(g.n, n));
    }
    let ginv = g.inverse()?;
    let mut m = ExactMatrix::zeros(n, n);
    for i in 0..n {
        let img = g.mul(&CliffordElem::generator(n, i)).mul(&ginv);
        for (mask, c) in &img.terms {
            if mask.count_ones() != 1 {
                return Err(Error::NotInvertible);
            }
            m[(mask.trailing_zeros() as usize, i)] = c.clone();
        }
    }
    Ok(m)
}

/// `cos(θπ/4)`, `sin(θπ/4)` for integer θ.
pub fn quarter_cos_sin(theta: i64) -> (ExactScalar, ExactScalar) {
    let h = ExactScalar::inv_sqrt2();
    let z = ExactScalar::zero;
    let one = ExactScalar::one;
    let m1 = || ExactScalar::from_int(-1);
    match theta.rem_euclid(8) {
        0 => (one(), z()),
        1 => (h.clone(), h),
        2 => (z(), one()),
        3 => (-&h, h),
        4 => (m1(), z()),
        5 => (-&h, -&h),
        6 => (z(), m1()),
        _ => (h.clone(), -&h),
    }
}

/// `Π_k (cos(θ_k π/4) + sin(θ_k π/4) e_p e_q)` over the listed pairs; θ_k is in units of π/2.
pub fn torus_element(quarter_turns: &[i64], pairing: &[(usize, usize)], n: usize) -> CliffordElem {
    assert_eq!(quarter_turns.len(), pairing.len());
    let mut g = CliffordElem::one(n);
    for (&t, &(p, q)) in quarter_turns.iter().zip(pairing) {
        let (c, s) = quarter_cos_sin(t);
        let f = CliffordElem::scalar(n, c).add(&CliffordElem::product_of(n, &[p, q], 1).scale(&s));
        g = g.mul(&f);
    }
    g
}

/// The standard pairing `(e_{2k}, e_{2k+1})`, k = 0..n/2.
pub fn standard_pairing(n: usize) -> Vec<(usize, usize)> {
    (0..n / 2).map(|k| (2 * k, 2 * k + 1)).collect()
}

/// `e_j ↦ sign[j] · e_{perm[j]}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPerm {
    pub perm: Vec<usize>,
    pub sign: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            perm: (0..n).collect(),
            sign: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    /// `self ∘ o`
    pub fn compose(&self, o: &SignedPerm) -> SignedPerm {
        let n = self.len();
        let mut perm = vec![0; n];
        let mut sign = vec![0; n];
        for j in 0..n {
            let k = o.perm[j];
            perm[j] = self.perm[k];
            sign[j] = o.sign[j] * self.sign[k];
        }
        SignedPerm { perm, sign }
    }

    pub fn negate(&self) -> SignedPerm {
        SignedPerm {
            perm: self.perm.clone(),
            sign: self.sign.iter().map(|s| -s).collect(),
        }
    }

    pub fn to_dense(&self) -> ExactMatrix {
        let n = self.len();
        let mut m = ExactMatrix::zeros(n, n);
        for j in 0..n {
            m[(self.perm[j], j)] = ExactScalar::from_int(self.sign[j] as i64);
        }
        m
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix::from_cols(
            self.len(),
            (0..self.len())
                .map(|j| vec![(self.perm[j], ExactScalar::from_int(self.sign[j] as i64))])
                .collect(),
        )
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, p)| i == *p)
    }
}

/// `Γ_i` on `O ⊕ O` (indices 0..8 first summand, 8..16 second).
pub fn cl8_generator(i: usize) -> SignedPerm {
    let t = mul_table();
    let mut perm = vec![0; 16];
    let mut sign = vec![0i8; 16];
    for u in 0..8 {
        // (u, 0) ↦ (0, −ē_i u)
        let (s, k) = t[i][u];
        let conj_sign: i8 = if i == 0 { 1 } else { -1 };
        perm[u] = 8 + k;
        sign[u] = -conj_sign * s;
        // (0, w) ↦ (e_i w, 0)
        perm[8 + u] = k;
        sign[8 + u] = s;
    }
    SignedPerm { perm, sign }
}

/// Action of the blade `e_S` on the Cl(R^8) module.
pub fn cl8_blade_action(mask: u32) -> SignedPerm {
    let mut acc = SignedPerm::identity(16);
    for i in 0..8 {
        if mask >> i & 1 == 1 {
            acc = acc.compose(&cl8_generator(i));
        }
    }
    acc
}

/// Real 256-dimensional Cl(R^16) module with its 128-dimensional `ω = +1` summand.
#[derive(Clone, Debug)]
pub struct SpinModule {
    pub n: usize,
    pub generator_actions: Vec<SignedPerm>,
    /// module index of each plus-basis vector
    pub plus_index: Vec<usize>,
    /// inverse of `plus_index` (usize::MAX off the summand)
    pub plus_position: Vec<usize>,
}

fn tensor_perm(a: &SignedPerm, b: &SignedPerm) -> SignedPerm {
    let (na, nb) = (a.len(), b.len());
    let mut perm = vec![0; na * nb];
    let mut sign = vec![0i8; na * nb];
    for p in 0..na {
        for q in 0..nb {
            perm[p * nb + q] = a.perm[p] * nb + b.perm[q];
            sign[p * nb + q] = a.sign[p] * b.sign[q];
        }
    }
    SignedPerm { perm, sign }
}

pub fn build_spin_module() -> SpinModule {
    let omega8 = cl8_blade_action(0xff);
    let id16 = SignedPerm::identity(16);
    let mut gens = Vec::with_capacity(16);
    for i in 0..8 {
        gens.push(tensor_perm(&cl8_generator(i), &id16));
    }
    for j in 0..8 {
        gens.push(tensor_perm(&omega8, &cl8_generator(j)));
    }
    let mut omega = SignedPerm::identity(256);
    for g in &gens {
        omega = omega.compose(g);
    }
    assert!(omega.is_diagonal(), "volume element is not diagonal");
    let plus_index: Vec<usize> = (0..256).filter(|&k| omega.sign[k] == 1).collect();
    assert_eq!(plus_index.len(), 128);
    let mut plus_position = vec![usize::MAX; 256];
    for (v, &k) in plus_index.iter().enumerate() {
        plus_position[k] = v;
    }
    SpinModule {
        n: 16,
        generator_actions: gens,
        plus_index,
        plus_position,
    }
}

/// Shared module instance.
pub fn spin_module() -> &'static SpinModule {
    static M: OnceLock<SpinModule> = OnceLock::new();
    M.get_or_init(build_spin_module)
}

impl SpinModule {
    pub fn generator_matrix(&self, i: usize) -> ExactMatrix {
        self.generator_actions[i].to_dense()
    }

    /// Action of `e_S` on the full module.
    pub fn blade_action(&self, mask: u32) -> SignedPerm {
        let mut acc = SignedPerm::identity(256);
        for i in 0..16 {
            if mask >> i & 1 == 1 {
                acc = acc.compose(&self.generator_actions[i]);
            }
        }
        acc
    }

    pub fn volume_action(&self) -> SignedPerm {
        self.blade_action(0xffff)
    }

    /// `(1 + ρ(ω))/2`
    pub fn chirality_projector(&self) -> ExactMatrix {
        let w = self.volume_action().to_dense();
        ExactMatrix::identity(256)
            .add(&w)
            .scale(&ExactScalar::from_frac(1, 2))
    }

    pub fn plus_basis(&self) -> Vec<Vec<ExactScalar>> {
        self.plus_index
            .iter()
            .map(|&k| {
                let mut v = vec![ExactScalar::zero(); 256];
                v[k] = ExactScalar::one();
                v
            })
            .collect()
    }

    /// Even blade restricted to the plus summand, as a signed permutation of 128 coordinates.
    pub fn half_spin_blade(&self, mask: u32) -> SignedPerm {
        assert!(mask.count_ones() % 2 == 0);
        let full = self.blade_action(mask);
        let mut perm = vec![0; 128];
        let mut sign = vec![0i8; 128];
        for (v, &k) in self.plus_index.iter().enumerate() {
            let img = self.plus_position[full.perm[k]];
            assert!(img != usize::MAX, "even blade leaves the plus summand");
            perm[v] = img;
            sign[v] = full.sign[k];
        }
        SignedPerm { perm, sign }
    }
}

/// Sparse 128×128 matrix of `ρ(g)` on the plus summand.
pub fn half_spin_sparse(module: &SpinModule, g: &CliffordElem) -> Result<SparseMatrix> {
    if !g.is_even() {
        return Err(Error::NotEven);
    }
    if g.n != 16 {
        return Err(Error::DimensionMismatch(g.n, 16));
    }
    let mut cols: Vec<Vec<(usize, ExactScalar)>> = vec![Vec::new(); 128];
    for (mask, c) in &g.terms {
        let p = module.half_spin_blade(*mask);
        for j in 0..128 {
            let v = if p.sign[j] > 0 { c.clone() } else { -c };
            cols[j].push((p.perm[j], v));
        }
    }
    Ok(SparseMatrix::from_cols(
        128,
        cols.into_iter().map(crate::scalar::sparse_collect).collect(),
    ))
}

pub fn half_spin_matrix(module: &SpinModule, g: &CliffordElem) -> Result<ExactMatrix> {
    Ok(half_spin_sparse(module, g)?.to_dense())
}

fn block8(m: &SparseMatrix, off: usize) -> LinearMap8 {
    let mut out = ExactMatrix::zeros(8, 8);
    for j in 0..8 {
        for (i, c) in &m.cols[off + j] {
            assert!(*i >= off && *i < off + 8, "even element mixes summands");
            out[(*i - off, j)] = c.clone();
        }
    }
    out
}

/// Action of an even element of Cl(R^8) on `O ⊕ O` as a sparse 16×16 matrix.
pub fn cl8_action(g: &CliffordElem) -> SparseMatrix {
    assert_eq!(g.n, 8);
    let mut cols: Vec<SparseVec> = vec![Vec::new(); 16];
    for (mask, c) in &g.terms {
        let p = cl8_blade_action(*mask);
        for j in 0..16 {
            let v = if p.sign[j] > 0 { c.clone() } else { -c };
            cols[j].push((p.perm[j], v));
        }
    }
    SparseMatrix::from_cols(16, cols.into_iter().map(crate::scalar::sparse_collect).collect())
}

/// Spin(8) element as a triple `(π(g), ρ^−(g), ρ^+(g))`, where `ρ^+` is the action on the
/// first summand of `O ⊕ O` and `ρ^−` on the second.
pub fn spin8_triple(g: &CliffordElem) -> Result<TrialityTriple> {
    if !g.is_even() {
        return Err(Error::NotEven);
    }
    let x1 = vector_rep_matrix(g, 8)?;
    let act = cl8_action(g);
    Ok(TrialityTriple {
        x1,
        x2: block8(&act, 8),
        x3: block8(&act, 0),
    })
}

/// Inverse of [`spin8_triple`] on triples whose vector part is diagonal ±1
/// (images of signed blades).
pub fn blade_from_triple(t: &TrialityTriple) -> Option<CliffordElem> {
    let mut mask = 0u32;
    for i in 0..8 {
        for j in 0..8 {
            let x = &t.x1[(i, j)];
            if i != j && !x.is_zero() {
                return None;
            }
        }
        match t.x1[(i, i)].to_i64() {
            Some(1) => {}
            Some(-1) => mask |= 1 << i,
            _ => return None,
        }
    }
    // conjugation by e_S flips the vectors in S when |S| is even
    if mask.count_ones() % 2 == 1 {
        return None;
    }
    for s in [1i64, -1] {
        let g = CliffordElem::blade(8, mask, ExactScalar::from_int(s));
        if spin8_triple(&g).ok().as_ref() == Some(t) {
            return Some(g);
        }
    }
    None
}

/// Signed blades of the γ_i^{a,b}, columns `(a,b) = (0,0), (1,0), (0,1), (1,1)`.
const GAMMA_BLADES: [[(i64, &[usize]); 4]; 8] = [
    [(1, &[]), (-1, &[]), (1, &[0, 1, 2, 3, 4, 5, 6, 7]), (-1, &[0, 1, 2, 3, 4, 5, 6, 7])],
    [(-1, &[4, 5, 6, 7]), (1, &[4, 5, 6, 7]), (-1, &[0, 1, 2, 3]), (1, &[0, 1, 2, 3])],
    [(-1, &[2, 3, 6, 7]), (1, &[2, 3, 6, 7]), (-1, &[0, 1, 4, 5]), (1, &[0, 1, 4, 5])],
    [(-1, &[2, 3, 4, 5]), (1, &[2, 3, 4, 5]), (-1, &[0, 1, 6, 7]), (1, &[0, 1, 6, 7])],
    [(1, &[1, 3, 5, 7]), (-1, &[1, 3, 5, 7]), (1, &[0, 2, 4, 6]), (-1, &[0, 2, 4, 6])],
    [(-1, &[1, 3, 4, 6]), (1, &[1, 3, 4, 6]), (-1, &[0, 2, 5, 7]), (1, &[0, 2, 5, 7])],
    [(-1, &[1, 2, 5, 6]), (1, &[1, 2, 5, 6]), (-1, &[0, 3, 4, 7]), (1, &[0, 3, 4, 7])],
    [(-1, &[1, 2, 4, 7]), (1, &[1, 2, 4, 7]), (-1, &[0, 3, 5, 6]), (1, &[0, 3, 5, 6])],
];

/// `((i, a, b), blade)` for all 32 elements of A(Spin(8)).
pub fn gamma_blade_table() -> Vec<((usize, u8, u8), CliffordElem)> {
    let ab = [(0u8, 0u8), (1, 0), (0, 1), (1, 1)];
    let mut out = Vec::with_capacity(32);
    for (i, row) in GAMMA_BLADES.iter().enumerate() {
        for (k, (s, idx)) in row.iter().enumerate() {
            out.push(((i, ab[k].0, ab[k].1), CliffordElem::product_of(8, idx, *s)));
        }
    }
    out
}

/// `exp π(iA_v)` for `v = x_p ± x_q` in Spin(8), paired with its γ label:
/// doubled coordinates of v on x_1..x_4.
pub fn torus_gamma_table() -> Vec<([i64; 4], (usize, u8, u8))> {
    vec![
        ([2, -2, 0, 0], (1, 0, 1)),
        ([2, 2, 0, 0], (1, 1, 1)),
        ([0, 0, 2, -2], (1, 0, 0)),
        ([0, 0, 2, 2], (1, 1, 0)),
        ([2, 0, -2, 0], (2, 0, 1)),
        ([2, 0, 2, 0], (2, 1, 1)),
        ([0, 2, 0, -2], (2, 0, 0)),
        ([0, 2, 0, 2], (2, 1, 0)),
        ([2, 0, 0, -2], (3, 0, 1)),
        ([2, 0, 0, 2], (3, 1, 1)),
        ([0, 2, -2, 0], (3, 0, 0)),
        ([0, 2, 2, 0], (3, 1, 0)),
    ]
}

/// Spin(8) torus element for doubled coordinates on x_1..x_4.
pub fn torus_spin8(doubled: [i64; 4]) -> CliffordElem {
    torus_element(&doubled, &standard_pairing(8), 8)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blade_examples() {
        let e = |i: usize| Blade::new(4, &[i], ExactScalar::one());
        let p = blade_mul(&e(0), &e(1)).unwrap();
        assert_eq!(p.indices, 0b11);
        assert!(p.coefficient.is_one());
        let sq = blade_mul(&e(1), &e(1)).unwrap();
        assert_eq!(sq.indices, 0);
        assert_eq!(sq.coefficient, ExactScalar::from_int(-1));
        // e0e1 · e1e2 = e0 (e1 e1) e2 = −e0e2
        let a = Blade::new(4, &[0, 1], ExactScalar::one());
        let b = Blade::new(4, &[1, 2], ExactScalar::one());
        let c = blade_mul(&a, &b).unwrap();
        assert_eq!(c.indices, 0b101);
        assert_eq!(c.coefficient, ExactScalar::from_int(-1));
    }

    #[test]
    fn cl8_relations() {
        for i in 0..8 {
            for j in 0..8 {
                let gi = cl8_generator(i).to_dense();
                let gj = cl8_generator(j).to_dense();
                let ac = gi.mul(&gj).add(&gj.mul(&gi));
                let expect = if i == j {
                    ExactMatrix::identity(16).scale(&ExactScalar::from_int(-2))
                } else {
                    ExactMatrix::zeros(16, 16)
                };
                assert_eq!(ac, expect);
            }
        }
    }

    #[test]
    fn module_plus_dim() {
        let m = spin_module();
        assert_eq!(m.plus_index.len(), 128);
    }
}
