//! Octonions, G2, the triality automorphisms of so(8) and the triple model of Spin(8).
//!
//! The multiplication table is derived from the seven expansions of `2F_{0i} = L_{e_i}`
//! as sums of `E_{jk}`, with the skew convention `E_jk(e_j) = e_k`, `E_jk(e_k) = −e_j`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::scalar::{kernel_of_rows, sparse_collect, ExactMatrix, ExactScalar, SparseVec};

/// 8×8 matrix acting on octonion coordinates.
pub type LinearMap8 = ExactMatrix;

/// `(sign, j, k)` terms of `2F_{pq} = Σ sign·E_{jk}` as displayed, keyed by `(p, q)`.
const F_TABLE: [((usize, usize), [(i8, usize, usize); 4]); 28] = [
    ((0, 1), [(1, 0, 1), (1, 2, 3), (1, 4, 5), (1, 6, 7)]),
    ((2, 3), [(1, 0, 1), (1, 2, 3), (-1, 4, 5), (-1, 6, 7)]),
    ((4, 5), [(1, 0, 1), (-1, 2, 3), (1, 4, 5), (-1, 6, 7)]),
    ((6, 7), [(1, 0, 1), (-1, 2, 3), (-1, 4, 5), (1, 6, 7)]),
    ((0, 2), [(1, 0, 2), (-1, 1, 3), (-1, 4, 6), (1, 5, 7)]),
    ((1, 3), [(-1, 0, 2), (1, 1, 3), (-1, 4, 6), (1, 5, 7)]),
    ((4, 6), [(-1, 0, 2), (-1, 1, 3), (1, 4, 6), (1, 5, 7)]),
    ((5, 7), [(1, 0, 2), (1, 1, 3), (1, 4, 6), (1, 5, 7)]),
    ((0, 3), [(1, 0, 3), (1, 1, 2), (1, 4, 7), (1, 5, 6)]),
    ((1, 2), [(1, 0, 3), (1, 1, 2), (-1, 4, 7), (-1, 5, 6)]),
    ((4, 7), [(1, 0, 3), (-1, 1, 2), (1, 4, 7), (-1, 5, 6)]),
    ((5, 6), [(1, 0, 3), (-1, 1, 2), (-1, 4, 7), (1, 5, 6)]),
    ((0, 4), [(1, 0, 4), (-1, 1, 5), (1, 2, 6), (-1, 3, 7)]),
    ((1, 5), [(-1, 0, 4), (1, 1, 5), (1, 2, 6), (-1, 3, 7)]),
    ((2, 6), [(1, 0, 4), (1, 1, 5), (1, 2, 6), (1, 3, 7)]),
    ((3, 7), [(-1, 0, 4), (-1, 1, 5), (1, 2, 6), (1, 3, 7)]),
    ((0, 5), [(1, 0, 5), (1, 1, 4), (-1, 2, 7), (-1, 3, 6)]),
    ((1, 4), [(1, 0, 5), (1, 1, 4), (1, 2, 7), (1, 3, 6)]),
    ((2, 7), [(-1, 0, 5), (1, 1, 4), (1, 2, 7), (-1, 3, 6)]),
    ((3, 6), [(-1, 0, 5), (1, 1, 4), (-1, 2, 7), (1, 3, 6)]),
    ((0, 6), [(1, 0, 6), (-1, 1, 7), (-1, 2, 4), (1, 3, 5)]),
    ((1, 7), [(-1, 0, 6), (1, 1, 7), (-1, 2, 4), (1, 3, 5)]),
    ((2, 4), [(-1, 0, 6), (-1, 1, 7), (1, 2, 4), (1, 3, 5)]),
    ((3, 5), [(1, 0, 6), (1, 1, 7), (1, 2, 4), (1, 3, 5)]),
    ((0, 7), [(1, 0, 7), (1, 1, 6), (1, 2, 5), (1, 3, 4)]),
    ((1, 6), [(1, 0, 7), (1, 1, 6), (-1, 2, 5), (-1, 3, 4)]),
    ((2, 5), [(1, 0, 7), (-1, 1, 6), (1, 2, 5), (-1, 3, 4)]),
    ((3, 4), [(1, 0, 7), (-1, 1, 6), (-1, 2, 5), (1, 3, 4)]),
];

/// `+1` positions of the diagonal maps γ_1..γ_7.
const GAMMA_PLUS: [[usize; 4]; 7] = [
    [0, 1, 2, 3],
    [0, 1, 4, 5],
    [0, 1, 6, 7],
    [0, 2, 4, 6],
    [0, 2, 5, 7],
    [0, 3, 4, 7],
    [0, 3, 5, 6],
];

/// `e_i e_j = sign · e_k` stored as `(sign, k)`.
pub fn mul_table() -> &'static [[(i8, usize); 8]; 8] {
    static TABLE: OnceLock<[[(i8, usize); 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[(0i8, 0usize); 8]; 8];
        for j in 0..8 {
            t[0][j] = (1, j);
        }
        for i in 1..8 {
            let row = F_TABLE.iter().find(|(k, _)| *k == (0, i)).unwrap().1;
            for (s, j, k) in row {
                t[i][j] = (s, k);
                t[i][k] = (-s, j);
            }
        }
        t
    })
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Octonion {
    pub coeffs: [ExactScalar; 8],
}

impl Octonion {
    pub fn zero() -> Self {
        Octonion {
            coeffs: std::array::from_fn(|_| ExactScalar::zero()),
        }
    }

    pub fn basis(i: usize) -> Self {
        let mut o = Self::zero();
        o.coeffs[i] = ExactScalar::one();
        o
    }

    pub fn from_ints(v: [i64; 8]) -> Self {
        Octonion {
            coeffs: v.map(ExactScalar::from_int),
        }
    }

    pub fn from_slice(v: &[ExactScalar]) -> Self {
        Octonion {
            coeffs: std::array::from_fn(|i| v[i].clone()),
        }
    }

    pub fn conj(&self) -> Self {
        Octonion {
            coeffs: std::array::from_fn(|i| {
                if i == 0 {
                    self.coeffs[0].clone()
                } else {
                    -&self.coeffs[i]
                }
            }),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        Octonion {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &o.coeffs[i]),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Octonion {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &o.coeffs[i]),
        }
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        Octonion {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * s),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        oct_mul(self, o)
    }

    /// Coordinatewise squared length.
    pub fn norm2(&self) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for c in &self.coeffs {
            acc += &(c * c);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

pub fn oct_mul(x: &Octonion, y: &Octonion) -> Octonion {
    let t = mul_table();
    let mut out = Octonion::zero();
    for i in 0..8 {
        if x.coeffs[i].is_zero() {
            continue;
        }
        for j in 0..8 {
            if y.coeffs[j].is_zero() {
                continue;
            }
            let (s, k) = t[i][j];
            let p = &x.coeffs[i] * &y.coeffs[j];
            if s > 0 {
                out.coeffs[k] += &p;
            } else {
                out.coeffs[k] -= &p;
            }
        }
    }
    out
}

/// Conjugate of `x` and `(x, y)`; the inner product is computed both as the
/// coordinate dot product and as the real part of `(x ȳ + y x̄)/2`, and the two must agree.
pub fn oct_conj_inner(x: &Octonion, y: &Octonion) -> (Octonion, ExactScalar) {
    let mut dot = ExactScalar::zero();
    for i in 0..8 {
        dot += &(&x.coeffs[i] * &y.coeffs[i]);
    }
    let s = oct_mul(x, &y.conj()).add(&oct_mul(y, &x.conj()));
    let half = ExactScalar::from_frac(1, 2);
    let via_product = &s.coeffs[0] * &half;
    assert!(
        s.coeffs[1..].iter().all(|c| c.is_zero()),
        "x ybar + y xbar is not real"
    );
    assert_eq!(dot, via_product, "inner product routes disagree");
    (x.conj(), dot)
}

fn col_oct(m: &LinearMap8, c: usize) -> Octonion {
    Octonion::from_slice(&m.col(c))
}

pub fn apply(m: &LinearMap8, x: &Octonion) -> Octonion {
    Octonion::from_slice(&m.mul_vec(&x.coeffs))
}

fn map_from_fn(f: impl Fn(&Octonion) -> Octonion) -> LinearMap8 {
    let mut m = ExactMatrix::zeros(8, 8);
    for c in 0..8 {
        let v = f(&Octonion::basis(c));
        for r in 0..8 {
            m[(r, c)] = v.coeffs[r].clone();
        }
    }
    m
}

/// `L_a(u) = au`
pub fn left_mul(a: &Octonion) -> LinearMap8 {
    map_from_fn(|u| oct_mul(a, u))
}

/// `R_a(u) = ua`
pub fn right_mul(a: &Octonion) -> LinearMap8 {
    map_from_fn(|u| oct_mul(u, a))
}

/// `T_a(u) = au + ua`
pub fn t_map(a: &Octonion) -> LinearMap8 {
    left_mul(a).add(&right_mul(a))
}

/// `E_ij(e_i) = e_j`, `E_ij(e_j) = −e_i`; `E_ji = −E_ij`.
pub fn e_ij(i: usize, j: usize) -> LinearMap8 {
    e_ij_n(8, i, j)
}

pub fn e_ij_n(n: usize, i: usize, j: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n, n);
    if i != j {
        m[(j, i)] = ExactScalar::one();
        m[(i, j)] = ExactScalar::from_int(-1);
    }
    m
}

/// `F_ij` read off the displayed table (`2F_ij = Σ ±E_kl`).
pub fn f_ij_table(i: usize, j: usize) -> LinearMap8 {
    if i == j {
        return ExactMatrix::zeros(8, 8);
    }
    let (p, q, flip) = if i < j { (i, j, false) } else { (j, i, true) };
    let row = F_TABLE.iter().find(|(k, _)| *k == (p, q)).unwrap().1;
    let mut m = ExactMatrix::zeros(8, 8);
    for (s, k, l) in row {
        m = m.add(&e_ij(k, l).scale(&ExactScalar::from_int(s as i64)));
    }
    let half = ExactScalar::from_frac(if flip { -1 } else { 1 }, 2);
    m.scale(&half)
}

/// `F_0i = L_{e_i}/2`, `F_ij = L_{e_i} L_{e_j}/2` for distinct nonzero `i, j`.
pub fn f_ij_formula(i: usize, j: usize) -> LinearMap8 {
    let half = ExactScalar::from_frac(1, 2);
    if i == j {
        return ExactMatrix::zeros(8, 8);
    }
    if i == 0 {
        return left_mul(&Octonion::basis(j)).scale(&half);
    }
    if j == 0 {
        return left_mul(&Octonion::basis(i)).scale(&half).neg();
    }
    left_mul(&Octonion::basis(i))
        .mul(&left_mul(&Octonion::basis(j)))
        .scale(&half)
}

/// Coefficients `c_ij` (i < j) with `X = Σ c_ij E_ij`.
pub fn so8_coords(x: &LinearMap8) -> Result<Vec<ExactScalar>> {
    if !x.is_skew() {
        return Err(Error::NotSkew);
    }
    let mut out = Vec::with_capacity(28);
    for i in 0..8 {
        for j in i + 1..8 {
            out.push(x[(j, i)].clone());
        }
    }
    Ok(out)
}

/// The 28 pairs `(i, j)`, `i < j`, in the order used by [`so8_coords`].
pub fn so8_pairs() -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(28);
    for i in 0..8 {
        for j in i + 1..8 {
            v.push((i, j));
        }
    }
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrialityKind {
    Alpha,
    Beta,
    Gamma,
}

fn conj_matrix() -> LinearMap8 {
    let mut c = ExactMatrix::identity(8);
    for i in 1..8 {
        c[(i, i)] = ExactScalar::from_int(-1);
    }
    c
}

/// α(X)(a) = conj(X(conj a)); β(E_ij) = F_ij; γ = β∘α.
pub fn so8_triality_map(kind: TrialityKind, x: &LinearMap8) -> Result<LinearMap8> {
    let coords = so8_coords(x)?;
    match kind {
        TrialityKind::Alpha => {
            let c = conj_matrix();
            Ok(c.mul(x).mul(&c))
        }
        TrialityKind::Beta => {
            let mut m = ExactMatrix::zeros(8, 8);
            for (c, (i, j)) in coords.iter().zip(so8_pairs()) {
                if !c.is_zero() {
                    m = m.add(&f_ij_table(i, j).scale(c));
                }
            }
            Ok(m)
        }
        TrialityKind::Gamma => {
            let a = so8_triality_map(TrialityKind::Alpha, x)?;
            so8_triality_map(TrialityKind::Beta, &a)
        }
    }
}

/// Residual of `(X1 u)v + u(X2 v) − X3(uv)` on the 64 basis pairs is zero.
pub fn lie_triality_holds(x1: &LinearMap8, x2: &LinearMap8, x3: &LinearMap8) -> bool {
    for a in 0..8 {
        for b in 0..8 {
            let u = Octonion::basis(a);
            let v = Octonion::basis(b);
            let lhs = oct_mul(&col_oct(x1, a), &v).add(&oct_mul(&u, &col_oct(x2, b)));
            let rhs = apply(x3, &oct_mul(&u, &v));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Solves `(X1 u)v + u(X2 v) = X3(uv)` for skew `X2, X3` by exact linear algebra.
/// The answer should be `(γ(X1), β(X1))`; callers compare.
pub fn solve_triality(x1: &LinearMap8) -> Result<(LinearMap8, LinearMap8)> {
    so8_coords(x1)?;
    let pairs = so8_pairs();
    // unknowns: 28 coords of X2, 28 of X3, then one slot for the constant term
    let ncols = 57;
    let mut rows: Vec<SparseVec> = Vec::new();
    let t = mul_table();
    for a in 0..8 {
        for b in 0..8 {
            let (s_ab, k_ab) = t[a][b];
            let lhs1 = oct_mul(&col_oct(x1, a), &Octonion::basis(b));
            for comp in 0..8 {
                let mut row: Vec<(usize, ExactScalar)> = Vec::new();
                // u (X2 v): X2 e_b = Σ c_p E_p e_b
                for (p, &(i, j)) in pairs.iter().enumerate() {
                    let (sgn, img) = if b == i {
                        (1i64, j)
                    } else if b == j {
                        (-1, i)
                    } else {
                        continue;
                    };
                    let (s2, k2) = t[a][img];
                    if k2 == comp {
                        row.push((p, ExactScalar::from_int(sgn * s2 as i64)));
                    }
                    // −X3(e_a e_b) = −s_ab X3 e_{k_ab}
                }
                for (p, &(i, j)) in pairs.iter().enumerate() {
                    let (sgn, img) = if k_ab == i {
                        (1i64, j)
                    } else if k_ab == j {
                        (-1, i)
                    } else {
                        continue;
                    };
                    if img == comp {
                        row.push((28 + p, ExactScalar::from_int(-sgn * s_ab as i64)));
                    }
                }
                if !lhs1.coeffs[comp].is_zero() {
                    row.push((56, lhs1.coeffs[comp].clone()));
                }
                let row = sparse_collect(row);
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    let ker = kernel_of_rows(rows, ncols);
    // solutions with constant slot 1; uniqueness means one kernel vector with nonzero last entry
    let sol: Vec<&SparseVec> = ker
        .iter()
        .filter(|v| v.last().map_or(false, |e| e.0 == 56))
        .collect();
    assert!(ker.len() == 1 && sol.len() == 1, "triality solution not unique");
    let v = sol[0];
    let scale = v.last().unwrap().1.inv().unwrap();
    let mut x2 = ExactMatrix::zeros(8, 8);
    let mut x3 = ExactMatrix::zeros(8, 8);
    for (idx, c) in v {
        if *idx == 56 {
            continue;
        }
        let c = c * &scale;
        let (i, j) = pairs[idx % 28];
        let target = if *idx < 28 { &mut x2 } else { &mut x3 };
        *target = target.add(&e_ij(i, j).scale(&c));
    }
    Ok((x2, x3))
}

/// Diagonal map γ_i; γ_0 = id.
pub fn gamma_element(i: usize) -> LinearMap8 {
    assert!(i < 8);
    let mut m = ExactMatrix::identity(8);
    if i == 0 {
        return m;
    }
    for k in 0..8 {
        if !GAMMA_PLUS[i - 1].contains(&k) {
            m[(k, k)] = ExactScalar::from_int(-1);
        }
    }
    m
}

pub fn is_orthogonal(m: &LinearMap8) -> bool {
    m.transpose().mul(m).is_identity()
}

/// Orthogonal, fixes `e_0`, and multiplicative on all basis pairs.
pub fn is_g2(f: &LinearMap8) -> bool {
    if f.rows != 8 || f.cols != 8 || !is_orthogonal(f) {
        return false;
    }
    if col_oct(f, 0) != Octonion::basis(0) {
        return false;
    }
    for a in 0..8 {
        for b in 0..8 {
            let lhs = oct_mul(&col_oct(f, a), &col_oct(f, b));
            let rhs = apply(f, &oct_mul(&Octonion::basis(a), &Octonion::basis(b)));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// A Spin(8) element as `(x1, x2, x3)` with `(x1 u)(x2 v) = x3(uv)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TrialityTriple {
    pub x1: LinearMap8,
    pub x2: LinearMap8,
    pub x3: LinearMap8,
}

impl TrialityTriple {
    pub fn identity() -> Self {
        TrialityTriple {
            x1: ExactMatrix::identity(8),
            x2: ExactMatrix::identity(8),
            x3: ExactMatrix::identity(8),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.x1.is_identity() && self.x2.is_identity() && self.x3.is_identity()
    }

    /// Group identity on all 64 basis pairs plus orthogonality of each component.
    pub fn is_valid(&self) -> bool {
        if !(is_orthogonal(&self.x1) && is_orthogonal(&self.x2) && is_orthogonal(&self.x3)) {
            return false;
        }
        group_triality_holds(&self.x1, &self.x2, &self.x3)
    }

    /// Componentwise negation pattern `(s1 x1, s2 x2, s3 x3)`.
    pub fn signed(&self, s: [i64; 3]) -> Self {
        TrialityTriple {
            x1: self.x1.scale(&ExactScalar::from_int(s[0])),
            x2: self.x2.scale(&ExactScalar::from_int(s[1])),
            x3: self.x3.scale(&ExactScalar::from_int(s[2])),
        }
    }

    pub fn inverse(&self) -> Self {
        TrialityTriple {
            x1: self.x1.transpose(),
            x2: self.x2.transpose(),
            x3: self.x3.transpose(),
        }
    }

    /// Concatenated entries, for lexicographic comparison.
    pub fn entries(&self) -> impl Iterator<Item = &ExactScalar> {
        self.x1
            .data
            .iter()
            .chain(self.x2.data.iter())
            .chain(self.x3.data.iter())
    }
}

pub fn group_triality_holds(x1: &LinearMap8, x2: &LinearMap8, x3: &LinearMap8) -> bool {
    for a in 0..8 {
        for b in 0..8 {
            let lhs = oct_mul(&col_oct(x1, a), &col_oct(x2, b));
            let rhs = apply(x3, &oct_mul(&Octonion::basis(a), &Octonion::basis(b)));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Sign pattern of `g^{a,b}`: (g,g,g), (g,−g,−g), (−g,−g,g), (−g,g,−g).
pub fn sign_pattern(a: u8, b: u8) -> [i64; 3] {
    match (a, b) {
        (0, 0) => [1, 1, 1],
        (1, 0) => [1, -1, -1],
        (0, 1) => [-1, -1, 1],
        (1, 1) => [-1, 1, -1],
        _ => panic!("sign pattern bits must be 0 or 1"),
    }
}

pub fn triple_from_gamma(i: usize, a: u8, b: u8) -> TrialityTriple {
    let g = gamma_element(i);
    TrialityTriple {
        x1: g.clone(),
        x2: g.clone(),
        x3: g,
    }
    .signed(sign_pattern(a, b))
}

pub fn triple_mul(s: &TrialityTriple, t: &TrialityTriple) -> TrialityTriple {
    let r = TrialityTriple {
        x1: s.x1.mul(&t.x1),
        x2: s.x2.mul(&t.x2),
        x3: s.x3.mul(&t.x3),
    };
    debug_assert!(group_triality_holds(&r.x1, &r.x2, &r.x3));
    r
}

/// Recovers `(i, a, b)` if the triple is some γ_i^{a,b}.
pub fn gamma_label(t: &TrialityTriple) -> Option<(usize, u8, u8)> {
    for i in 0..8 {
        for a in 0..2 {
            for b in 0..2 {
                if &triple_from_gamma(i, a, b) == t {
                    return Some((i, a, b));
                }
            }
        }
    }
    None
}

/// A(G2) = {γ_0, …, γ_7}.
pub fn a_g2() -> Vec<LinearMap8> {
    (0..8).map(gamma_element).collect()
}

/// A(Spin(8)) = {γ_i^{a,b}}.
pub fn a_spin8() -> Vec<TrialityTriple> {
    let mut v = Vec::with_capacity(32);
    for i in 0..8 {
        for a in 0..2 {
            for b in 0..2 {
                v.push(triple_from_gamma(i, a, b));
            }
        }
    }
    v
}

/// Derivations of O with `X(e_0) = 0`, as a basis of skew 8×8 matrices (dimension 14).
pub fn g2_derivation_basis() -> Vec<LinearMap8> {
    let pairs = so8_pairs();
    let t = mul_table();
    let mut rows: Vec<SparseVec> = Vec::new();
    // X(e_a e_b) − X(e_a) e_b − e_a X(e_b) = 0, with X = Σ c_p E_p
    for a in 0..8 {
        for b in 0..8 {
            let (s_ab, k_ab) = t[a][b];
            let mut eqs: Vec<Vec<(usize, ExactScalar)>> = vec![Vec::new(); 8];
            for (p, &(i, j)) in pairs.iter().enumerate() {
                let img = |m: usize| -> Option<(i64, usize)> {
                    if m == i {
                        Some((1, j))
                    } else if m == j {
                        Some((-1, i))
                    } else {
                        None
                    }
                };
                if let Some((s, k)) = img(k_ab) {
                    eqs[k].push((p, ExactScalar::from_int(s * s_ab as i64)));
                }
                if let Some((s, k)) = img(a) {
                    let (s2, k2) = t[k][b];
                    eqs[k2].push((p, ExactScalar::from_int(-s * s2 as i64)));
                }
                if let Some((s, k)) = img(b) {
                    let (s2, k2) = t[a][k];
                    eqs[k2].push((p, ExactScalar::from_int(-s * s2 as i64)));
                }
            }
            for e in eqs {
                let r = sparse_collect(e);
                if !r.is_empty() {
                    rows.push(r);
                }
            }
        }
    }
    // X(e_0) = 0
    for (p, &(i, _)) in pairs.iter().enumerate() {
        if i == 0 {
            rows.push(vec![(p, ExactScalar::one())]);
        }
    }
    kernel_of_rows(rows, 28)
        .into_iter()
        .map(|v| {
            let mut m = ExactMatrix::zeros(8, 8);
            for (p, c) in v {
                let (i, j) = pairs[p];
                m = m.add(&e_ij(i, j).scale(&c));
            }
            m
        })
        .collect()
}

/// The seven displayed two-parameter families `xE + yE + zE` (x + y + z = 0), sign
/// pattern taken from the matching `2F_{0i}` row; each family yields two basis maps.
pub fn g2_family_basis() -> Vec<LinearMap8> {
    let mut out = Vec::with_capacity(14);
    for i in 1..8 {
        let row = F_TABLE.iter().find(|(k, _)| *k == (0, i)).unwrap().1;
        let terms: Vec<LinearMap8> = row[1..]
            .iter()
            .map(|&(s, j, k)| e_ij(j, k).scale(&ExactScalar::from_int(s as i64)))
            .collect();
        // (x,y,z) = (1,-1,0) and (0,1,-1)
        out.push(terms[0].sub(&terms[1]));
        out.push(terms[1].sub(&terms[2]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        let e = Octonion::basis;
        assert_eq!(oct_mul(&e(1), &e(2)), e(3));
        assert_eq!(oct_mul(&e(2), &e(3)), e(1));
        assert_eq!(oct_mul(&e(1), &e(4)), e(5));
        for i in 1..8 {
            assert_eq!(oct_mul(&e(i), &e(i)), e(0).scale(&ExactScalar::from_int(-1)));
        }
    }

    #[test]
    fn t_is_twice_e0k() {
        for k in 1..8 {
            assert_eq!(t_map(&Octonion::basis(k)), e_ij(0, k).scale(&ExactScalar::from_int(2)));
        }
    }

    #[test]
    fn f_table_matches_formula() {
        for (i, j) in so8_pairs() {
            assert_eq!(f_ij_table(i, j), f_ij_formula(i, j), "F_{}{}", i, j);
        }
    }
}
