//! e8 = L ⊕ V with L = spin(16) on the blades `e_r e_s` and V the 128-dim half-spin module.
//!
//! Basis order: indices `0..120` are the blades `e_r e_s` (r < s, lexicographic), `120..248`
//! are the plus-summand coordinates of the spin module.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::clifford::{
    blade_sign, half_spin_sparse, spin_module, standard_pairing, torus_element, vector_rep_matrix,
    CliffordElem, SpinModule,
};
use crate::error::{Error, Result};
use crate::octonion::{g2_family_basis, LinearMap8};
use crate::rootsys::{
    alpha_beta, combinatorial_fixed_dim, formula_spec_for, parity_fixed_dim, positive_roots,
    Ambient, HalfVec, RootE8, TorusInvolution, TorusOrigin,
};
use crate::scalar::{
    fixed_space_dims_sparse, kernel_of_rows, sparse_collect, sparse_scale, ExactScalar, SparseMatrix,
    SparseVec,
    SubspaceCoords,
};

pub const DIM: usize = 248;
pub const L_DIM: usize = 120;
pub const V_DIM: usize = 128;

/// Integer sparse vector.
pub type IntVec = Vec<(u16, i64)>;

fn l_pairs() -> &'static [(usize, usize)] {
    static P: OnceLock<Vec<(usize, usize)>> = OnceLock::new();
    P.get_or_init(|| {
        let mut v = Vec::with_capacity(L_DIM);
        for r in 0..16 {
            for s in r + 1..16 {
                v.push((r, s));
            }
        }
        v
    })
}

/// Basis index of `e_r e_s`, r < s.
pub fn l_index(r: usize, s: usize) -> usize {
    assert!(r < s && s < 16);
    // rows before r contribute 15 + 14 + … + (16 − r)
    r * (31 - r) / 2 + (s - r - 1)
}

pub fn l_pair(i: usize) -> (usize, usize) {
    l_pairs()[i]
}

fn l_mask(i: usize) -> u32 {
    let (r, s) = l_pair(i);
    (1 << r) | (1 << s)
}

fn int_collect(mut v: Vec<(u16, i64)>) -> IntVec {
    v.sort_by_key(|e| e.0);
    let mut out: IntVec = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, d)) if *j == i => *d += c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}


/// The algebra with integer structure constants.
#[derive(Clone)]
pub struct E8Algebra {
    table: Vec<Vec<IntVec>>,
    /// scale of the V × V bracket
    pub lambda: i64,
    /// Killing form equals `killing_scale · ( , )`
    pub killing_scale: i64,
}

impl fmt::Debug for E8Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E8Algebra(dim={}, lambda={})", DIM, self.lambda)
    }
}

fn raw_table(module: &SpinModule, lambda: i64) -> Vec<Vec<IntVec>> {
    let mut t = vec![vec![Vec::new(); DIM]; DIM];
    // L × L: Clifford commutator of bivectors
    for i in 0..L_DIM {
        for j in 0..L_DIM {
            let (a, b) = (l_mask(i), l_mask(j));
            let c = a ^ b;
            if c.count_ones() != 2 {
                continue;
            }
            let coef = blade_sign(a, b) - blade_sign(b, a);
            if coef != 0 {
                let r = c.trailing_zeros() as usize;
                let s = 31 - c.leading_zeros() as usize;
                t[i][j] = vec![(l_index(r, s) as u16, coef)];
            }
        }
    }
    // L × V: module action; V × V: adjunction against ( , )_L
    let perms: Vec<_> = (0..L_DIM).map(|i| module.half_spin_blade(l_mask(i))).collect();
    for (i, p) in perms.iter().enumerate() {
        for j in 0..V_DIM {
            let img = (L_DIM + p.perm[j]) as u16;
            let sg = p.sign[j] as i64;
            t[i][L_DIM + j] = vec![(img, sg)];
            t[L_DIM + j][i] = vec![(img, -sg)];
        }
    }
    for u in 0..V_DIM {
        let mut per_v: Vec<Vec<(u16, i64)>> = vec![Vec::new(); V_DIM];
        for (e, p) in perms.iter().enumerate() {
            // (ρ(E)u, v) = sign if v = perm(u)
            per_v[p.perm[u]].push((e as u16, lambda * p.sign[u] as i64));
        }
        for (v, entries) in per_v.into_iter().enumerate() {
            t[L_DIM + u][L_DIM + v] = int_collect(entries);
        }
    }
    t
}

fn apply_int(table: &[Vec<IntVec>], x: &IntVec, y: &IntVec) -> IntVec {
    let mut acc = Vec::new();
    for (i, a) in x {
        for (j, b) in y {
            for (k, c) in &table[*i as usize][*j as usize] {
                acc.push((*k, a * b * c));
            }
        }
    }
    int_collect(acc)
}

fn killing_diag(table: &[Vec<IntVec>], i: usize) -> i64 {
    // tr(ad b_i ∘ ad b_i)
    let mut tr = 0;
    for j in 0..DIM {
        for (k, c) in &table[i][j] {
            for (l, d) in &table[i][*k as usize] {
                if *l as usize == j {
                    tr += c * d;
                }
            }
        }
    }
    tr
}

/// Builds the algebra and calibrates the V × V scale.
pub fn build_e8_algebra(module: &SpinModule) -> Result<E8Algebra> {
    // Every Jacobi term carries exactly one V × V bracket, so Jacobi cannot fix the scale.
    // Killing proportionality on L and V does.
    let t1 = raw_table(module, 1);
    let k_l = killing_diag(&t1, 0);
    let k_v = killing_diag(&t1, L_DIM);
    if k_v == 0 || k_l % k_v != 0 {
        return Err(Error::CalibrationFailure(format!(
            "Killing ratio {}/{} is not an integer",
            k_l, k_v
        )));
    }
    let lambda = k_l / k_v;
    if lambda <= 0 {
        return Err(Error::CalibrationFailure(format!("negative scale {}", lambda)));
    }
    let table = if lambda == 1 { t1 } else { raw_table(module, lambda) };
    let alg = E8Algebra {
        table,
        lambda,
        killing_scale: k_l,
    };
    // one mixed triple, as a sanity gate
    let r = alg.jacobi_residual(0, L_DIM, L_DIM + 1);
    if !r.is_empty() {
        return Err(Error::CalibrationFailure("mixed Jacobi triple fails".into()));
    }
    Ok(alg)
}

/// Shared algebra instance.
pub fn e8_algebra() -> &'static E8Algebra {
    static A: OnceLock<E8Algebra> = OnceLock::new();
    A.get_or_init(|| build_e8_algebra(spin_module()).expect("e8 calibration"))
}

impl E8Algebra {
    pub fn dim(&self) -> usize {
        DIM
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &IntVec {
        &self.table[i][j]
    }

    pub fn bracket_int(&self, x: &IntVec, y: &IntVec) -> IntVec {
        apply_int(&self.table, x, y)
    }

    pub fn bracket(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                let ab = a * b;
                for (k, c) in &self.table[*i][*j] {
                    acc.push((*k as usize, &ab * &ExactScalar::from_int(*c)));
                }
            }
        }
        sparse_collect(acc)
    }

    /// `[[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j]`
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> IntVec {
        let e = |n: usize| vec![(n as u16, 1i64)];
        let mut acc = Vec::new();
        acc.extend(self.bracket_int(&self.table[i][j], &e(k)));
        acc.extend(self.bracket_int(&self.table[j][k], &e(i)));
        acc.extend(self.bracket_int(&self.table[k][i], &e(j)));
        int_collect(acc)
    }

    /// `([b_i,b_j], b_k) + (b_j, [b_i,b_k])` for the orthonormal basis.
    pub fn invariance_residual(&self, i: usize, j: usize, k: usize) -> i64 {
        let a = self.table[i][j]
            .iter()
            .find(|e| e.0 as usize == k)
            .map_or(0, |e| e.1);
        let b = self.table[i][k]
            .iter()
            .find(|e| e.0 as usize == j)
            .map_or(0, |e| e.1);
        a + b
    }

    pub fn is_skew(&self) -> bool {
        (0..DIM).all(|i| {
            (i..DIM).all(|j| {
                let a = &self.table[i][j];
                let b = &self.table[j][i];
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.0 == y.0 && x.1 == -y.1)
            })
        })
    }

    /// Basis triples drawn from a seeded stream; returns the number of failures.
    pub fn jacobi_sampled(&self, n: usize, seed: u64) -> usize {
        let triples = sample_triples(n, seed);
        triples
            .par_iter()
            .filter(|(i, j, k)| !self.jacobi_residual(*i, *j, *k).is_empty())
            .count()
    }

    /// All unordered triples i < j < k; returns the number of failures.
    pub fn jacobi_full(&self) -> usize {
        (0..DIM)
            .into_par_iter()
            .map(|i| {
                let mut bad = 0;
                for j in i + 1..DIM {
                    for k in j + 1..DIM {
                        if !self.jacobi_residual(i, j, k).is_empty() {
                            bad += 1;
                        }
                    }
                }
                bad
            })
            .sum()
    }

    pub fn invariance_sampled(&self, n: usize, seed: u64) -> usize {
        sample_triples(n, seed)
            .iter()
            .filter(|(i, j, k)| self.invariance_residual(*i, *j, *k) != 0)
            .count()
    }

    /// `tr(ad b_i ad b_j)` for all basis pairs, compared with `killing_scale · δ_ij`.
    pub fn killing_is_proportional(&self) -> bool {
        (0..DIM).into_par_iter().all(|i| {
            let mut row = vec![0i64; DIM];
            // tr(ad b_i ad b_j) = Σ_m coefficient of b_m in [b_i, [b_j, b_m]]
            for m in 0..DIM {
                for j in 0..DIM {
                    for (k, c) in &self.table[j][m] {
                        for (l, d) in &self.table[i][*k as usize] {
                            if *l as usize == m {
                                row[j] += c * d;
                            }
                        }
                    }
                }
            }
            row.iter()
                .enumerate()
                .all(|(j, v)| *v == if i == j { self.killing_scale } else { 0 })
        })
    }

    /// Matrix of `ad x`.
    pub fn ad_matrix(&self, x: &SparseVec) -> SparseMatrix {
        let cols = (0..DIM)
            .map(|j| self.bracket(x, &vec![(j, ExactScalar::one())]))
            .collect();
        SparseMatrix::from_cols(DIM, cols)
    }

    /// Basis of `∩ ker ad(g)` over the generators.
    pub fn centralizer(&self, generators: &[SparseVec]) -> Vec<SparseVec> {
        let mut rows = Vec::new();
        for g in generators {
            rows.extend(self.ad_matrix(g).transpose_rows());
        }
        rows.retain(|r| !r.is_empty());
        kernel_of_rows(rows, DIM)
    }

    pub fn is_closed(&self, basis: &[SparseVec]) -> bool {
        let sub = SubspaceCoords::new(basis, DIM);
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if !sub.contains(&self.bracket(&basis[i], &basis[j])) {
                    return false;
                }
            }
        }
        true
    }
}

fn sample_triples(n: usize, seed: u64) -> Vec<(usize, usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            (
                rng.gen_range(0..DIM),
                rng.gen_range(0..DIM),
                rng.gen_range(0..DIM),
            )
        })
        .collect()
}

/// `( , )` in the orthonormal basis.
pub fn inner(x: &SparseVec, y: &SparseVec) -> ExactScalar {
    crate::scalar::sparse_dot(x, y)
}

/// `h_k = (1/2) e_{2k−2} e_{2k−1}`, k = 1..8.
pub fn torus_generator(k: usize) -> SparseVec {
    vec![(l_index(2 * k - 2, 2 * k - 1), ExactScalar::from_frac(1, 2))]
}

/// `i A_v = Σ v_k h_k`.
pub fn torus_vector(v: HalfVec) -> SparseVec {
    let mut acc = Vec::new();
    for k in 1..=8 {
        let c = ExactScalar::from_frac(v.0[k - 1] as i64, 4);
        acc.push((l_index(2 * k - 2, 2 * k - 1), c));
    }
    sparse_collect(acc)
}

/// Generic torus element `h* = Σ 5^k h_k`; root values are distinct up to sign.
fn generic_weights() -> [i64; 8] {
    std::array::from_fn(|k| 5i64.pow(k as u32))
}

/// `γ(h*)` in halves: `2·Σ γ_k 5^k`.
fn root_value_doubled(g: RootE8) -> i64 {
    let w = generic_weights();
    (0..8).map(|k| g.0[k] as i64 * w[k]).sum()
}

/// Real root spaces `r_γ = ker(ad(h*)^2 + γ(h*)^2)` for positive roots.
pub fn root_spaces() -> &'static BTreeMap<RootE8, Vec<SparseVec>> {
    static R: OnceLock<BTreeMap<RootE8, Vec<SparseVec>>> = OnceLock::new();
    R.get_or_init(|| {
        let alg = e8_algebra();
        let w = generic_weights();
        let mut h = Vec::new();
        for k in 1..=8 {
            h.push((
                l_index(2 * k - 2, 2 * k - 1),
                ExactScalar::from_frac(w[k - 1], 2),
            ));
        }
        let adh = alg.ad_matrix(&sparse_collect(h));
        let sq = adh.mul(&adh);
        positive_roots()
            .par_iter()
            .map(|g| {
                let c = root_value_doubled(*g);
                // γ(h*) = c/2, so add (c/2)^2
                let m = sq.add_scaled_identity(&ExactScalar::from_frac(c * c, 4));
                (*g, m.kernel())
            })
            .collect()
    })
}

/// `r_γ` for any root (the space of `−γ` is the same).
pub fn root_space(g: RootE8) -> Vec<SparseVec> {
    let key = if g.is_positive() { g } else { g.neg() };
    root_spaces()
        .get(&key)
        .cloned()
        .unwrap_or_else(|| panic!("{} is not a root", g))
}

/// Named subalgebra with a coordinate system.
#[derive(Clone)]
pub struct SubalgebraBasis {
    pub name: String,
    pub coords: SubspaceCoords,
}

impl fmt::Debug for SubalgebraBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(dim {})", self.name, self.dim())
    }
}

impl SubalgebraBasis {
    pub fn new(name: &str, basis: Vec<SparseVec>) -> Self {
        SubalgebraBasis {
            name: name.to_string(),
            coords: SubspaceCoords::new(&basis, DIM),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.dim()
    }

    pub fn basis(&self) -> &[SparseVec] {
        self.coords.basis()
    }

    /// Direct sum with another subalgebra (bases concatenated).
    pub fn direct_sum(&self, o: &SubalgebraBasis, name: &str) -> Self {
        let mut b = self.basis().to_vec();
        b.extend_from_slice(o.basis());
        SubalgebraBasis::new(name, b)
    }
}

/// `so(8)` matrix `Σ c_ij E_ij ↦ Σ c_ij (1/2) e_{off+i} e_{off+j}`.
pub fn embed_so8(x: &LinearMap8, off: usize) -> SparseVec {
    let mut acc = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            let c = &x[(j, i)];
            if !c.is_zero() {
                acc.push((l_index(off + i, off + j), c * &ExactScalar::from_frac(1, 2)));
            }
        }
    }
    sparse_collect(acc)
}

/// The standard subalgebras for `α = x_7 − x_8`, `β = x_6 − x_7`.
pub struct Subalgebras {
    pub su2: SubalgebraBasis,
    pub su3: SubalgebraBasis,
    pub g2: SubalgebraBasis,
    pub e7: SubalgebraBasis,
    pub e6: SubalgebraBasis,
    pub f4: SubalgebraBasis,
    pub spin1_8: SubalgebraBasis,
}

pub fn su2_basis(alpha: RootE8) -> Vec<SparseVec> {
    let mut b = vec![torus_vector(alpha)];
    b.extend(root_space(alpha));
    b
}

pub fn su3_basis(alpha: RootE8, beta: RootE8) -> Vec<SparseVec> {
    let mut b = vec![torus_vector(alpha), torus_vector(beta)];
    b.extend(root_space(alpha));
    b.extend(root_space(beta));
    b.extend(root_space(alpha.add(beta)));
    b
}

pub fn g2_basis() -> Vec<SparseVec> {
    g2_family_basis().iter().map(|x| embed_so8(x, 8)).collect()
}

pub fn subalgebras() -> &'static Subalgebras {
    static S: OnceLock<Subalgebras> = OnceLock::new();
    S.get_or_init(|| {
        let alg = e8_algebra();
        let (a, b) = alpha_beta();
        let su2 = su2_basis(a);
        let su3 = su3_basis(a, b);
        let g2 = g2_basis();
        let e7 = alg.centralizer(&su2);
        let e6 = alg.centralizer(&su3);
        let f4 = alg.centralizer(&g2);
        let spin1: Vec<SparseVec> = (0..8)
            .flat_map(|r| (r + 1..8).map(move |s| vec![(l_index(r, s), ExactScalar::one())]))
            .collect();
        Subalgebras {
            su2: SubalgebraBasis::new("su2_alpha", su2),
            su3: SubalgebraBasis::new("su3_alphabeta", su3),
            g2: SubalgebraBasis::new("g2", g2),
            e7: SubalgebraBasis::new("e7", e7),
            e6: SubalgebraBasis::new("e6", e6),
            f4: SubalgebraBasis::new("f4", f4),
            spin1_8: SubalgebraBasis::new("spin1_8", spin1),
        }
    })
}

fn wedge2(p: &crate::scalar::ExactMatrix) -> SparseMatrix {
    // image of e_r e_s is (P e_r)(P e_s) = Σ_{a<b} (P_ar P_bs − P_br P_as) e_a e_b
    let cols = (0..L_DIM)
        .map(|i| {
            let (r, s) = l_pair(i);
            let mut acc = Vec::new();
            for a in 0..16 {
                if p[(a, r)].is_zero() && p[(a, s)].is_zero() {
                    continue;
                }
                for b in a + 1..16 {
                    let c = &(&p[(a, r)] * &p[(b, s)]) - &(&p[(b, r)] * &p[(a, s)]);
                    if !c.is_zero() {
                        acc.push((l_index(a, b), c));
                    }
                }
            }
            sparse_collect(acc)
        })
        .collect();
    SparseMatrix::from_cols(L_DIM, cols)
}

/// `Ad(g)` for an even invertible element of Cl(R^16).
pub fn adjoint_of_spin16(g: &CliffordElem) -> Result<SparseMatrix> {
    if g.n != 16 {
        return Err(Error::DimensionMismatch(g.n, 16));
    }
    let p = vector_rep_matrix(g, 16)?;
    let l = wedge2(&p);
    let v = half_spin_sparse(spin_module(), g)?;
    let mut cols = l.cols;
    for c in v.cols {
        cols.push(c.into_iter().map(|(i, x)| (i + L_DIM, x)).collect());
    }
    Ok(SparseMatrix::from_cols(DIM, cols))
}

/// `Ad` of a product of factors.
pub fn adjoint_of_factors(factors: &[CliffordElem]) -> Result<SparseMatrix> {
    let mut m = SparseMatrix::identity(DIM);
    for f in factors {
        m = m.mul(&adjoint_of_spin16(f)?);
    }
    Ok(m)
}

/// `τ_v` as an element of Spin(16).
pub fn torus_spin16(v: HalfVec) -> CliffordElem {
    let turns: Vec<i64> = v.0.iter().map(|d| *d as i64).collect();
    torus_element(&turns, &standard_pairing(16), 16)
}

/// `τ_v` as its commuting plane-rotation factors (identity factors dropped).
pub fn torus_spin16_factors(v: HalfVec) -> Vec<CliffordElem> {
    let pairs = standard_pairing(16);
    (0..8)
        .filter(|k| v.0[*k] % 8 != 0)
        .map(|k| torus_element(&[v.0[k] as i64], &[pairs[k]], 16))
        .collect()
}

/// `x = e_0 e_2 e_4 e_6 · e_8 e_10 e_12 e_14`.
pub fn x_spin16() -> CliffordElem {
    CliffordElem::product_of(16, &[0, 2, 4, 6, 8, 10, 12, 14], 1)
}

/// `(d_plus, d_minus)` by the trace: for an involution, `d_plus − d_minus = tr`.
pub fn fixed_dims_by_trace(m: &SparseMatrix) -> Result<(usize, usize)> {
    if m.nrows != m.ncols || !m.mul(m).is_identity() {
        return Err(Error::NotInvolution);
    }
    let t = m.trace().to_i64().ok_or(Error::NotInvolution)?;
    let n = m.ncols as i64;
    Ok((((n + t) / 2) as usize, ((n - t) / 2) as usize))
}

/// Fixed dims of `Ad(g)` on a subalgebra, computed by the trace of the restriction.
pub fn fixed_dims_in(adj: &SparseMatrix, sub: &SubalgebraBasis) -> Result<(usize, usize)> {
    let r = sub.coords.restrict(adj).map_err(|e| match e {
        Error::NotInvariant(_) => Error::NotNormalizing(sub.name.clone()),
        other => other,
    })?;
    fixed_dims_by_trace(&r)
}

/// Same, by ranks of `M ∓ I`.
pub fn fixed_dims_in_by_rank(adj: &SparseMatrix, sub: &SubalgebraBasis) -> Result<(usize, usize)> {
    let r = sub.coords.restrict(adj)?;
    fixed_space_dims_sparse(&r)
}

/// Fixed subalgebra `{y ∈ sub : Ad(g) y = y}`.
pub fn fixed_subalgebra(adj: &SparseMatrix, sub: &SubalgebraBasis, name: &str) -> Result<SubalgebraBasis> {
    let r = sub.coords.restrict(adj).map_err(|e| match e {
        Error::NotInvariant(_) => Error::NotNormalizing(sub.name.clone()),
        other => other,
    })?;
    let ker = r.add_scaled_identity(&ExactScalar::from_int(-1)).kernel();
    let basis = ker
        .iter()
        .map(|c| {
            let mut acc = Vec::new();
            for (i, x) in c {
                acc.extend(sparse_scale(&sub.basis()[*i], x));
            }
            sparse_collect(acc)
        })
        .collect();
    Ok(SubalgebraBasis::new(name, basis))
}

/// Dimension of the centre of a subalgebra: `dim(k ∩ C(k))`.
pub fn center_dim(sub: &SubalgebraBasis) -> usize {
    let c = e8_algebra().centralizer(sub.basis());
    let mut ech = crate::scalar::Echelon::new(DIM);
    for v in sub.basis().iter().chain(c.iter()) {
        ech.insert(v.clone());
    }
    sub.dim() + c.len() - ech.rank()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    F4,
    E6,
    E7,
    E8,
}

impl Level {
    pub fn name(self) -> &'static str {
        match self {
            Level::F4 => "F4",
            Level::E6 => "E6",
            Level::E7 => "E7",
            Level::E8 => "E8",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Level::F4 => 52,
            Level::E6 => 78,
            Level::E7 => 133,
            Level::E8 => 248,
        }
    }

    pub fn subalgebra(self) -> Option<&'static SubalgebraBasis> {
        let s = subalgebras();
        match self {
            Level::F4 => Some(&s.f4),
            Level::E6 => Some(&s.e6),
            Level::E7 => Some(&s.e7),
            Level::E8 => None,
        }
    }
}

/// Symmetric-space type from the fixed dimension of an involution of the given level.
pub fn type_from_dim(level: Level, plus: usize) -> Option<&'static str> {
    let t = match (level, plus) {
        (Level::E8, 248) | (Level::E7, 133) | (Level::E6, 78) | (Level::F4, 52) => "fixed",
        (Level::E8, 136) => "EIX",
        (Level::E8, 120) => "EVIII",
        (Level::E7, 79) => "EVII",
        (Level::E7, 69) => "EVI",
        (Level::E7, 63) => "EV",
        (Level::E6, 52) => "EIV",
        (Level::E6, 46) => "EIII",
        (Level::E6, 38) => "EII",
        (Level::E6, 36) => "EI",
        (Level::F4, 36) => "FII",
        (Level::F4, 24) => "FI",
        _ => return None,
    };
    Some(t)
}

/// Orbit type of an involution under a level, with the e8-level dimension as a tag.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitType {
    pub level: Level,
    pub kind: &'static str,
    pub restricted_dim: usize,
    pub e8_dim: usize,
}

impl fmt::Display for OrbitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.level.name(), self.kind)
    }
}

pub fn classify_adjoint(adj: &SparseMatrix, level: Level) -> Result<OrbitType> {
    let (e8_dim, _) = fixed_dims_by_trace(adj)?;
    let restricted_dim = match level.subalgebra() {
        None => e8_dim,
        Some(sub) => fixed_dims_in(adj, sub)?.0,
    };
    let kind = type_from_dim(level, restricted_dim).ok_or(Error::UnclassifiedInvolution {
        group: level.name().to_string(),
        ambient: e8_dim,
        restricted: restricted_dim,
    })?;
    Ok(OrbitType {
        level,
        kind,
        restricted_dim,
        e8_dim,
    })
}

/// One row of the two-backend comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BackendRow {
    pub exponent: HalfVec,
    pub with_x: bool,
    /// (ambient name, formula, parity rule, matrix)
    pub values: Vec<(String, usize, usize, usize)>,
}

impl BackendRow {
    pub fn agrees(&self) -> bool {
        self.values.iter().all(|(_, f, p, m)| f == p && p == m)
    }
}

/// Formula, parity rule and concrete matrix for `τ_v` (times `x`) on e8, e7 and e6.
pub fn backend_consistency_check(
    t: TorusInvolution,
    origin: TorusOrigin,
    with_x: bool,
) -> Result<BackendRow> {
    let (a, b) = alpha_beta();
    let mut factors = torus_spin16_factors(t.exponent);
    if with_x {
        factors.push(x_spin16());
    }
    let adj = adjoint_of_factors(&factors)?;
    let subs = subalgebras();
    let spec = formula_spec_for(origin, with_x);
    let mut values = Vec::new();
    for (amb, sub) in [
        (Ambient::e8(), None),
        (Ambient::e7(a), Some(&subs.e7)),
        (Ambient::e6(a, b), Some(&subs.e6)),
    ] {
        let f = combinatorial_fixed_dim(spec, &amb)?;
        let p = parity_fixed_dim(t.exponent, with_x, &amb);
        let m = match sub {
            None => fixed_dims_by_trace(&adj)?.0,
            Some(s) => fixed_dims_in(&adj, s)?.0,
        };
        values.push((amb.name.clone(), f, p, m));
    }
    Ok(BackendRow {
        exponent: t.exponent,
        with_x,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l_index_roundtrip() {
        for i in 0..L_DIM {
            let (r, s) = l_pair(i);
            assert_eq!(l_index(r, s), i);
        }
    }

    #[test]
    fn so16_bracket_example() {
        let alg = e8_algebra();
        // [e0e1, e1e2] = e0e1e1e2 − e1e2e0e1 = −e0e2 − e0e2
        let r = alg.bracket_basis(l_index(0, 1), l_index(1, 2));
        assert_eq!(r, &vec![(l_index(0, 2) as u16, -2)]);
    }
}
