//! E8 root combinatorics: roots, pairing slices, the lattice Γ = 2·E8, torus involutions
//! and the counting formulas for fixed-space dimensions.
//!
//! Vectors in `(1/2)Z^8` are stored with doubled coordinates.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// A vector of `(1/2)Z^8`, stored as twice its coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfVec(pub [i32; 8]);

/// Roots are half-vectors of squared length 2.
pub type RootE8 = HalfVec;

impl HalfVec {
    pub fn zero() -> Self {
        HalfVec([0; 8])
    }

    /// `x_i`, 1-based like the coordinates `x_1..x_8`.
    pub fn unit(i: usize) -> Self {
        let mut v = [0; 8];
        v[i - 1] = 2;
        HalfVec(v)
    }

    /// `x_i ± x_j` with 1-based indices.
    pub fn int_root(i: usize, si: i32, j: usize, sj: i32) -> Self {
        let mut v = [0; 8];
        v[i - 1] += 2 * si;
        v[j - 1] += 2 * sj;
        HalfVec(v)
    }

    /// `(1/2)(ε_1, …, ε_8)`
    pub fn half(signs: [i32; 8]) -> Self {
        HalfVec(signs)
    }

    pub fn add(self, o: Self) -> Self {
        HalfVec(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }

    pub fn sub(self, o: Self) -> Self {
        HalfVec(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }

    pub fn neg(self) -> Self {
        HalfVec(self.0.map(|x| -x))
    }

    pub fn scale(self, k: i32) -> Self {
        HalfVec(self.0.map(|x| k * x))
    }

    /// Four times the inner product.
    pub fn dot4(self, o: Self) -> i32 {
        self.0.iter().zip(o.0.iter()).map(|(a, b)| a * b).sum()
    }

    /// `(self, o)`; panics if not an integer.
    pub fn inner(self, o: Self) -> i32 {
        let d = self.dot4(o);
        assert!(d % 4 == 0, "inner product is not an integer");
        d / 4
    }

    /// `(self, o)` as a pair (numerator, denominator 4).
    pub fn inner_q(self, o: Self) -> (i32, i32) {
        (self.dot4(o), 4)
    }

    pub fn norm4(self) -> i32 {
        self.dot4(self)
    }

    /// Member of the E8 lattice: all integer or all half-odd, even coordinate sum.
    pub fn in_e8_lattice(self) -> bool {
        let all_even = self.0.iter().all(|x| x % 2 == 0);
        let all_odd = self.0.iter().all(|x| x.rem_euclid(2) == 1);
        let sum: i32 = self.0.iter().sum();
        (all_even || all_odd) && sum.rem_euclid(4) == 0
    }

    /// Member of Γ = 2·E8, by the coordinate characterization.
    pub fn in_gamma_direct(self) -> bool {
        // v/2 has doubled coordinates d/2
        if self.0.iter().any(|x| x % 2 != 0) {
            return false;
        }
        HalfVec(self.0.map(|x| x / 2)).in_e8_lattice()
    }

    /// First nonzero coordinate is positive.
    pub fn is_positive(self) -> bool {
        self.0.iter().find(|x| **x != 0).map_or(false, |x| *x > 0)
    }

    /// Coordinates as `(numerator, 2)` strings like `1/2`, `-1`, `0`.
    pub fn coord_strings(self) -> Vec<String> {
        self.0
            .iter()
            .map(|&d| {
                if d % 2 == 0 {
                    format!("{}", d / 2)
                } else {
                    format!("{}/2", d)
                }
            })
            .collect()
    }

    /// Reflection `v − (v, γ) γ` in a root.
    pub fn reflect(self, root: RootE8) -> Self {
        let k = self.inner(root);
        self.sub(root.scale(k))
    }
}

impl fmt::Display for HalfVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // integral roots as x_i ± x_j, everything else as a coordinate list
        let nz: Vec<(usize, i32)> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, x)| **x != 0)
            .map(|(i, x)| (i, *x))
            .collect();
        if nz.is_empty() {
            return write!(f, "0");
        }
        if nz.iter().all(|(_, x)| x.abs() == 2) && nz.len() <= 4 {
            let mut s = String::new();
            for (k, (i, x)) in nz.iter().enumerate() {
                if *x < 0 {
                    s.push('-');
                } else if k > 0 {
                    s.push('+');
                }
                s.push_str(&format!("x{}", i + 1));
            }
            return write!(f, "{}", s);
        }
        write!(f, "({})", self.coord_strings().join(","))
    }
}

impl fmt::Debug for HalfVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All 240 roots: 112 integral, 128 half-integral.
pub fn roots_e8() -> &'static [RootE8] {
    static R: OnceLock<Vec<RootE8>> = OnceLock::new();
    R.get_or_init(|| {
        let mut out = Vec::with_capacity(240);
        for i in 1..=8 {
            for j in i + 1..=8 {
                for si in [1, -1] {
                    for sj in [1, -1] {
                        out.push(HalfVec::int_root(i, si, j, sj));
                    }
                }
            }
        }
        for bits in 0u32..256 {
            if bits.count_ones() % 2 == 0 {
                out.push(HalfVec(std::array::from_fn(|k| {
                    if bits >> k & 1 == 1 {
                        -1
                    } else {
                        1
                    }
                })));
            }
        }
        out.sort();
        out
    })
}

/// Σ^+: `x_i ± x_j` (i < j) and `(1/2)(x_1 + Σ ε_i x_i)` with `Π_{i≥2} ε_i = 1`.
pub fn positive_roots() -> Vec<RootE8> {
    roots_e8().iter().copied().filter(|r| r.is_positive()).collect()
}

/// `2(α, β)/(α, α)`; equals `(α, β)` for roots.
pub fn pairing(alpha: RootE8, beta: HalfVec) -> i32 {
    2 * beta.dot4(alpha) / alpha.norm4()
}

/// Σ_{α,n}
pub fn pairing_slice(alpha: RootE8, n: i32) -> Vec<RootE8> {
    roots_e8()
        .iter()
        .copied()
        .filter(|b| b.dot4(alpha) == 4 * n)
        .collect()
}

/// Roots with prescribed pairings against a list of roots.
pub fn slice_multi(conds: &[(RootE8, &[i32])]) -> Vec<RootE8> {
    roots_e8()
        .iter()
        .copied()
        .filter(|b| conds.iter().all(|(a, ns)| ns.contains(&(b.dot4(*a) / 4))))
        .collect()
}

/// The fixed pair `α = x_7 − x_8`, `β = x_6 − x_7`.
pub fn alpha_beta() -> (RootE8, RootE8) {
    (HalfVec::int_root(7, 1, 8, -1), HalfVec::int_root(6, 1, 7, -1))
}

/// A Z-basis of the E8 lattice made of simple roots.
pub fn simple_roots() -> [RootE8; 8] {
    [
        HalfVec::half([1, -1, -1, -1, -1, -1, -1, 1]),
        HalfVec::int_root(1, 1, 2, 1),
        HalfVec::int_root(1, -1, 2, 1),
        HalfVec::int_root(2, -1, 3, 1),
        HalfVec::int_root(3, -1, 4, 1),
        HalfVec::int_root(4, -1, 5, 1),
        HalfVec::int_root(5, -1, 6, 1),
        HalfVec::int_root(6, -1, 7, 1),
    ]
}

/// Class of an E8-lattice vector modulo Γ: parities of its pairings with the simple roots.
pub fn gamma_class_key(v: HalfVec) -> u8 {
    assert!(v.in_e8_lattice(), "{} is not in the E8 lattice", v);
    let mut key = 0u8;
    for (k, s) in simple_roots().iter().enumerate() {
        if v.inner(*s).rem_euclid(2) == 1 {
            key |= 1 << k;
        }
    }
    key
}

/// Membership in Γ via the pairing criterion: some root with odd pairing excludes `v`;
/// otherwise the coordinate characterization decides.
pub fn in_gamma(v: HalfVec) -> bool {
    for r in roots_e8() {
        let d = v.dot4(*r);
        if d % 4 != 0 || (d / 4) % 2 != 0 {
            return false;
        }
    }
    v.in_gamma_direct()
}

pub fn congruent_mod_gamma(u: HalfVec, v: HalfVec) -> bool {
    in_gamma(u.sub(v))
}

fn canonical_table() -> &'static BTreeMap<u8, HalfVec> {
    static T: OnceLock<BTreeMap<u8, HalfVec>> = OnceLock::new();
    T.get_or_init(|| {
        let mut cands: BTreeSet<HalfVec> = BTreeSet::new();
        cands.insert(HalfVec::zero());
        let roots = roots_e8();
        for a in roots {
            cands.insert(*a);
            for b in roots {
                if a.dot4(*b) == 0 {
                    cands.insert(a.add(*b));
                }
            }
        }
        let mut table: BTreeMap<u8, HalfVec> = BTreeMap::new();
        for c in cands {
            let k = gamma_class_key(c);
            let better = match table.get(&k) {
                None => true,
                Some(old) => (c.norm4(), std::cmp::Reverse(c)) < (old.norm4(), std::cmp::Reverse(*old)),
            };
            if better {
                table.insert(k, c);
            }
        }
        assert_eq!(table.len(), 256);
        table
    })
}

/// The torus involution `exp π(iA_v)`, stored by a canonical representative of `v mod Γ`:
/// minimal norm, then lexicographically greatest.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TorusInvolution {
    pub exponent: HalfVec,
}

impl TorusInvolution {
    pub fn new(v: HalfVec) -> Self {
        let key = gamma_class_key(v);
        TorusInvolution {
            exponent: canonical_table()[&key],
        }
    }

    pub fn identity() -> Self {
        Self::new(HalfVec::zero())
    }

    pub fn is_identity(&self) -> bool {
        self.exponent == HalfVec::zero()
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.exponent.add(o.exponent))
    }

    /// Doubling lands in Γ.
    pub fn is_involutive(&self) -> bool {
        in_gamma(self.exponent.scale(2))
    }

    /// Quarter turns `θ_k = 2 v_k` for the pairs `(e_{2k−2}, e_{2k−1})`.
    pub fn quarter_turns(&self) -> [i64; 8] {
        self.exponent.0.map(|x| x as i64)
    }
}

/// Outcome of the lattice lemma check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeLemmaReport {
    pub size: usize,
    pub pairs: usize,
    pub collisions: Vec<(HalfVec, HalfVec)>,
    /// pairs decided by the pairing criterion alone
    pub decided_by_pairing: usize,
}

impl LatticeLemmaReport {
    pub fn holds(&self) -> bool {
        self.collisions.is_empty()
    }
}

/// Λ_{α,β} = {α + γ : γ ∈ Σ^+_{α,0}} ∪ {β + δ, α + β + δ : δ ∈ Σ^+_{α,0} ∩ Σ_{β,0}}.
pub fn lambda_set(alpha: RootE8, beta: RootE8) -> Vec<HalfVec> {
    let mut out = Vec::new();
    for g in pairing_slice(alpha, 0).into_iter().filter(|r| r.is_positive()) {
        out.push(alpha.add(g));
    }
    for d in slice_multi(&[(alpha, &[0]), (beta, &[0])])
        .into_iter()
        .filter(|r| r.is_positive())
    {
        out.push(beta.add(d));
        out.push(alpha.add(beta).add(d));
    }
    out
}

pub fn check_lattice_lemma(alpha: RootE8, beta: RootE8) -> LatticeLemmaReport {
    let lam = lambda_set(alpha, beta);
    let mut collisions = Vec::new();
    let mut pairs = 0;
    let mut by_pairing = 0;
    for i in 0..lam.len() {
        for j in i + 1..lam.len() {
            pairs += 1;
            let d = lam[i].sub(lam[j]);
            let witness = roots_e8().iter().any(|r| {
                let p = d.dot4(*r);
                p % 4 != 0 || (p / 4) % 2 != 0
            });
            if witness {
                by_pairing += 1;
            } else if d.in_gamma_direct() {
                collisions.push((lam[i], lam[j]));
            }
        }
    }
    LatticeLemmaReport {
        size: lam.len(),
        pairs,
        collisions,
        decided_by_pairing: by_pairing,
    }
}

/// Which family of A(T) a class came from, with its root decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorusOrigin {
    Identity,
    /// τ_γ, γ ∈ Σ^+
    Root(RootE8),
    /// τ_a τ_b with orthogonal roots a, b
    Pair(RootE8, RootE8),
}

/// The 256 classes {0} ∪ Σ^+ ∪ {γ+α} ∪ {δ+β, δ+α+β}, with their origin.
pub fn enumerate_torus_involutions_with_origin(
    alpha: RootE8,
    beta: RootE8,
) -> Vec<(TorusInvolution, TorusOrigin)> {
    let mut out = vec![(TorusInvolution::identity(), TorusOrigin::Identity)];
    for g in positive_roots() {
        out.push((TorusInvolution::new(g), TorusOrigin::Root(g)));
    }
    for g in pairing_slice(alpha, 0).into_iter().filter(|r| r.is_positive()) {
        out.push((TorusInvolution::new(alpha.add(g)), TorusOrigin::Pair(alpha, g)));
    }
    for d in slice_multi(&[(alpha, &[0]), (beta, &[0])])
        .into_iter()
        .filter(|r| r.is_positive())
    {
        out.push((TorusInvolution::new(beta.add(d)), TorusOrigin::Pair(beta, d)));
        out.push((
            TorusInvolution::new(alpha.add(beta).add(d)),
            TorusOrigin::Pair(alpha.add(beta), d),
        ));
    }
    out
}

pub fn enumerate_torus_involutions(alpha: RootE8, beta: RootE8) -> Vec<TorusInvolution> {
    enumerate_torus_involutions_with_origin(alpha, beta)
        .into_iter()
        .map(|x| x.0)
        .collect()
}

/// Root subsystem used as the ambient of a counting formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambient {
    pub name: String,
    pub positive: Vec<RootE8>,
    pub torus_rank: usize,
}

impl Ambient {
    pub fn e8() -> Self {
        Ambient {
            name: "e8".into(),
            positive: positive_roots(),
            torus_rank: 8,
        }
    }

    /// Σ_{α,0}, rank 7.
    pub fn e7(alpha: RootE8) -> Self {
        Ambient {
            name: "e7".into(),
            positive: positive_roots()
                .into_iter()
                .filter(|r| r.dot4(alpha) == 0)
                .collect(),
            torus_rank: 7,
        }
    }

    /// Σ_{α,0} ∩ Σ_{β,0}, rank 6.
    pub fn e6(alpha: RootE8, beta: RootE8) -> Self {
        Ambient {
            name: "e6".into(),
            positive: positive_roots()
                .into_iter()
                .filter(|r| r.dot4(alpha) == 0 && r.dot4(beta) == 0)
                .collect(),
            torus_rank: 6,
        }
    }

    fn contains(&self, r: RootE8) -> bool {
        self.positive.contains(&r) || self.positive.contains(&r.neg())
    }

    /// All roots (both signs).
    fn all(&self) -> Vec<RootE8> {
        self.positive
            .iter()
            .flat_map(|r| [*r, r.neg()])
            .collect()
    }
}

/// Element `τ_α`, `τ_α τ_β` (β ⊥ α) or the identity, optionally times `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaSpec {
    pub alpha: Option<RootE8>,
    pub beta: Option<RootE8>,
    pub with_x: bool,
}

/// Evaluates the displayed slice formulas: each real root space counts 2, each half
/// `r^±` counts 1, the torus counts its rank unless `x` is present.
pub fn combinatorial_fixed_dim(spec: FormulaSpec, ambient: &Ambient) -> Result<usize> {
    let amb_all = ambient.all();
    let count = |f: &dyn Fn(RootE8) -> bool| amb_all.iter().filter(|r| f(**r)).count();
    let count_pos = |f: &dyn Fn(RootE8) -> bool| ambient.positive.iter().filter(|r| f(**r)).count();
    let ind = |r: RootE8| usize::from(ambient.contains(r));
    let p = |a: RootE8, r: RootE8| r.dot4(a) / 4;
    match (spec.alpha, spec.beta, spec.with_x) {
        (None, None, false) => Ok(ambient.torus_rank + 2 * ambient.positive.len()),
        // Σ_{γ∈Σ^+} r_γ^+
        (None, None, true) => Ok(ambient.positive.len()),
        (Some(a), None, false) => {
            // t + r_α + Σ_{Σ^+_{α,0}} r_γ
            Ok(ambient.torus_rank + 2 * ind(a) + 2 * count_pos(&|r| p(a, r) == 0))
        }
        (Some(a), None, true) => {
            // r_α^+ + Σ_{Σ^+_{α,0}} r^+ + Σ_{Σ_{α,1}} r^−
            Ok(ind(a) + count_pos(&|r| p(a, r) == 0) + count(&|r| p(a, r) == 1))
        }
        (Some(a), Some(b), wx) => {
            if a.dot4(b) != 0 {
                return Err(Error::UnsupportedSpec(format!(
                    "beta must be orthogonal to alpha ({} vs {})",
                    a, b
                )));
            }
            let both0 = count_pos(&|r| p(a, r) == 0 && p(b, r) == 0);
            let a1b1 = count(&|r| p(a, r) == 1 && p(b, r).abs() == 1);
            if !wx {
                // t + r_α + r_β + Σ_{Σ^+_{α,0}∩Σ_{β,0}} r + Σ_{Σ_{α,1}∩Σ_{β,±1}} r
                Ok(ambient.torus_rank + 2 * ind(a) + 2 * ind(b) + 2 * both0 + 2 * a1b1)
            } else {
                // r_α^+ + r_β^+ + Σ r^+ + Σ r^+ + Σ_{Σ_{α,0}∩Σ_{β,1}} r^− + Σ_{Σ_{α,1}∩Σ_{β,0}} r^−
                let a0b1 = count(&|r| p(a, r) == 0 && p(b, r) == 1);
                let a1b0 = count(&|r| p(a, r) == 1 && p(b, r) == 0);
                Ok(ind(a) + ind(b) + both0 + a1b1 + a0b1 + a1b0)
            }
        }
        (None, Some(_), _) => Err(Error::UnsupportedSpec("beta without alpha".into())),
    }
}

/// General rule for `τ_v` (times `x` if flagged): a root space is fixed by `τ_v` iff
/// `(γ, v)` is even; with `x` each root contributes exactly one of `r_γ^±`.
pub fn parity_fixed_dim(v: HalfVec, with_x: bool, ambient: &Ambient) -> usize {
    if with_x {
        return ambient.positive.len();
    }
    let even = ambient
        .positive
        .iter()
        .filter(|r| r.inner(v).rem_euclid(2) == 0)
        .count();
    ambient.torus_rank + 2 * even
}

/// Formula spec for a class of A(T) given its origin.
pub fn formula_spec_for(origin: TorusOrigin, with_x: bool) -> FormulaSpec {
    match origin {
        TorusOrigin::Identity => FormulaSpec {
            alpha: None,
            beta: None,
            with_x,
        },
        TorusOrigin::Root(g) => FormulaSpec {
            alpha: Some(g),
            beta: None,
            with_x,
        },
        TorusOrigin::Pair(a, b) => FormulaSpec {
            alpha: Some(a),
            beta: Some(b),
            with_x,
        },
    }
}

/// Orbit of `seed` under the group generated by reflections in `gens`.
pub fn reflection_orbit(seed: RootE8, gens: &[RootE8]) -> BTreeSet<RootE8> {
    let mut seen = BTreeSet::new();
    seen.insert(seed);
    let mut stack = vec![seed];
    while let Some(v) = stack.pop() {
        for g in gens {
            let w = v.reflect(*g);
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitivityReport {
    /// (slice name, slice size, orbit size of its first element)
    pub rows: Vec<(String, usize, usize)>,
}

impl TransitivityReport {
    pub fn all_transitive(&self) -> bool {
        self.rows.iter().all(|(_, n, o)| n == o && *n > 0)
    }
}

/// W(Σ_{α,0}) on Σ_{α,0}, Σ_{α,±1}; W(Σ_{α,0}∩Σ_{β,0}) on the four slices.
pub fn weyl_transitivity_check(alpha: RootE8, beta: RootE8) -> TransitivityReport {
    let mut rows = Vec::new();
    let w7: Vec<RootE8> = pairing_slice(alpha, 0);
    for (name, n) in [("S(a,0)", 0), ("S(a,1)", 1), ("S(a,-1)", -1)] {
        let sl = pairing_slice(alpha, n);
        let orb = reflection_orbit(sl[0], &w7);
        let inside = orb.iter().all(|r| sl.contains(r));
        rows.push((name.to_string(), sl.len(), if inside { orb.len() } else { 0 }));
    }
    let w6 = slice_multi(&[(alpha, &[0]), (beta, &[0])]);
    for (name, na, nb) in [
        ("S(a,0)&S(b,0)", 0, 0),
        ("S(a,0)&S(b,1)", 0, 1),
        ("S(a,1)&S(b,0)", 1, 0),
        ("S(a,1)&S(b,-1)", 1, -1),
    ] {
        let sl = slice_multi(&[(alpha, &[na]), (beta, &[nb])]);
        let orb = reflection_orbit(sl[0], &w6);
        let inside = orb.iter().all(|r| sl.contains(r));
        rows.push((name.to_string(), sl.len(), if inside { orb.len() } else { 0 }));
    }
    TransitivityReport { rows }
}

/// Parses `x7-x8`, `x1+x2`, `-x6-x7`, `(+ + + + - - + +)/2` or a coordinate list.
pub fn parse_root_expr(s: &str) -> Result<HalfVec> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    // coordinate list as printed by Display, e.g. (2,0,0,0,0,0,0,0) or (1/2,-3/2,...)
    if let Some(inner) = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
        let bad = |c: &str| Error::ParseError(format!("bad coordinate '{}' in {}", c, s));
        let coords: Vec<i32> = inner
            .split(',')
            .map(|c| match c.strip_suffix("/2") {
                Some(n) => n.parse::<i32>().map_err(|_| bad(c)),
                None => c.parse::<i32>().map(|n| 2 * n).map_err(|_| bad(c)),
            })
            .collect::<Result<_>>()?;
        if coords.len() != 8 {
            return Err(Error::ParseError(format!("expected 8 coordinates in {}", s)));
        }
        return Ok(HalfVec(std::array::from_fn(|i| coords[i])));
    }
    if t.starts_with('(') {
        let inner = t
            .strip_suffix("/2")
            .and_then(|x| x.strip_prefix('('))
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::ParseError(format!("bad half vector: {}", s)))?;
        let signs: Vec<i32> = inner
            .chars()
            .filter(|c| *c != ',')
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(Error::ParseError(format!("bad sign '{}' in {}", c, s))),
            })
            .collect::<Result<_>>()?;
        if signs.len() != 8 {
            return Err(Error::ParseError(format!("expected 8 signs in {}", s)));
        }
        return Ok(HalfVec(std::array::from_fn(|i| signs[i])));
    }
    let mut v = HalfVec::zero();
    let bytes: Vec<char> = t.chars().collect();
    let mut i = 0;
    if bytes.is_empty() {
        return Err(Error::ParseError("empty root expression".into()));
    }
    while i < bytes.len() {
        let mut sign = 1;
        if bytes[i] == '+' || bytes[i] == '-' {
            if bytes[i] == '-' {
                sign = -1;
            }
            i += 1;
        }
        if i >= bytes.len() || bytes[i] != 'x' {
            return Err(Error::ParseError(format!("expected x<k> in {}", s)));
        }
        i += 1;
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let k: usize = bytes[start..i]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| Error::ParseError(format!("bad index in {}", s)))?;
        if !(1..=8).contains(&k) {
            return Err(Error::ParseError(format!("index out of range in {}", s)));
        }
        v.0[k - 1] += 2 * sign;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(roots_e8().len(), 240);
        assert_eq!(positive_roots().len(), 120);
        let (a, b) = alpha_beta();
        assert_eq!(pairing_slice(a, 0).len(), 126);
        assert_eq!(pairing_slice(a, 1).len(), 56);
        assert_eq!(pairing_slice(a, 2), vec![a]);
        assert_eq!(pairing(a, b), -1);
    }

    #[test]
    fn simple_roots_are_a_basis() {
        // Cartan matrix of E8 has determinant 1; check via integer elimination
        let s = simple_roots();
        let mut m: Vec<Vec<i64>> = (0..8)
            .map(|i| (0..8).map(|j| s[i].inner(s[j]) as i64).collect())
            .collect();
        // Bareiss
        let mut prev = 1i64;
        let mut sign = 1i64;
        for k in 0..7 {
            if m[k][k] == 0 {
                let p = (k + 1..8).find(|&r| m[r][k] != 0).unwrap();
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..8 {
                for j in k + 1..8 {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
            }
            prev = m[k][k];
        }
        assert_eq!(sign * m[7][7], 1);
        let mut keys = BTreeSet::new();
        for r in roots_e8() {
            keys.insert(gamma_class_key(*r));
        }
        assert_eq!(keys.len(), 120);
    }

    #[test]
    fn parse_roots() {
        assert_eq!(parse_root_expr("x7-x8").unwrap(), HalfVec::int_root(7, 1, 8, -1));
        assert_eq!(parse_root_expr("-x6-x7").unwrap(), HalfVec::int_root(6, -1, 7, -1));
        assert_eq!(
            parse_root_expr("(+ + + + - - + +)/2").unwrap(),
            HalfVec([1, 1, 1, 1, -1, -1, 1, 1])
        );
        assert!(parse_root_expr("y1").is_err());
    }
}
