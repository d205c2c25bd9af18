//! Elements of E8 in the ψ and torus encodings, the named antipodal sets, and their
//! orbit types under F4 ⊂ E6 ⊂ E7 ⊂ E8.
//!
//! Every element also resolves to a pair `(a, b)` of even Cl(R^8) elements with
//! `g = a · b'` in Spin(16) (b' is b moved to e_8..e_15), taken modulo
//! `(a, b) ~ (ak, bk)` for `k ∈ {±1, ±ω_8}`. Equality and hashing use that pair.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use crate::clifford::{blade_from_triple, standard_pairing, torus_element, CliffordElem};
use crate::e8model::{
    adjoint_of_factors, center_dim, e8_algebra, fixed_dims_by_trace, fixed_subalgebra, su2_basis,
    subalgebras, torus_spin16_factors, type_from_dim, x_spin16, Level, OrbitType,
    SubalgebraBasis,
};
use crate::error::{Error, Result};
use crate::octonion::{gamma_label, triple_from_gamma, triple_mul, TrialityTriple};
use crate::rootsys::{
    alpha_beta, enumerate_torus_involutions, parse_root_expr, positive_roots, slice_multi,
    HalfVec, RootE8, TorusInvolution,
};
use crate::scalar::{SparseMatrix, SparseVec};

// ---------------------------------------------------------------------------
// triples by index, with memoized products

#[derive(Default)]
struct TripleTable {
    index: HashMap<TrialityTriple, usize>,
    list: Vec<TrialityTriple>,
    blades: HashMap<usize, Option<CliffordElem>>,
    products: HashMap<(usize, usize), usize>,
    inverses: HashMap<usize, usize>,
}

fn table() -> &'static Mutex<TripleTable> {
    static T: OnceLock<Mutex<TripleTable>> = OnceLock::new();
    T.get_or_init(Default::default)
}

fn intern(t: &TrialityTriple) -> usize {
    let mut tb = table().lock().unwrap();
    if let Some(&i) = tb.index.get(t) {
        return i;
    }
    let i = tb.list.len();
    tb.list.push(t.clone());
    tb.index.insert(t.clone(), i);
    i
}

fn triple(i: usize) -> TrialityTriple {
    table().lock().unwrap().list[i].clone()
}

fn tmul(i: usize, j: usize) -> usize {
    let hit = table().lock().unwrap().products.get(&(i, j)).copied();
    if let Some(k) = hit {
        return k;
    }
    let k = intern(&triple_mul(&triple(i), &triple(j)));
    table().lock().unwrap().products.insert((i, j), k);
    k
}

fn tinv(i: usize) -> usize {
    let hit = table().lock().unwrap().inverses.get(&i).copied();
    if let Some(k) = hit {
        return k;
    }
    let k = intern(&triple(i).inverse());
    table().lock().unwrap().inverses.insert(i, k);
    k
}

fn blade_of(i: usize) -> Option<CliffordElem> {
    let hit = table().lock().unwrap().blades.get(&i).cloned();
    if let Some(b) = hit {
        return b;
    }
    let b = blade_from_triple(&triple(i));
    table().lock().unwrap().blades.insert(i, b.clone());
    b
}

/// Indices of γ_0^{0,0}, γ_0^{1,0}, γ_0^{0,1}, γ_0^{1,1}.
fn kernel_ids() -> [usize; 4] {
    static K: OnceLock<[usize; 4]> = OnceLock::new();
    *K.get_or_init(|| [(0, 0), (1, 0), (0, 1), (1, 1)].map(|(a, b)| intern(&triple_from_gamma(0, a, b))))
}

fn cmp_triples(i: usize, j: usize) -> Ordering {
    if i == j {
        return Ordering::Equal;
    }
    let (s, t) = (triple(i), triple(j));
    s.entries().cmp(t.entries())
}

// ---------------------------------------------------------------------------
// concrete pairs

type Cl8Pair = (CliffordElem, CliffordElem);

fn kernel_multipliers() -> &'static [CliffordElem; 4] {
    static K: OnceLock<[CliffordElem; 4]> = OnceLock::new();
    K.get_or_init(|| {
        let w = CliffordElem::volume(8);
        [CliffordElem::one(8), CliffordElem::one(8).neg(), w.neg(), w]
    })
}

fn pair_cmp(x: &Cl8Pair, y: &Cl8Pair) -> Ordering {
    x.0.terms
        .iter()
        .cmp(y.0.terms.iter())
        .then_with(|| x.1.terms.iter().cmp(y.1.terms.iter()))
}

fn canonical_pair(a: &CliffordElem, b: &CliffordElem) -> Cl8Pair {
    kernel_multipliers()
        .iter()
        .map(|k| (a.mul(k), b.mul(k)))
        .min_by(pair_cmp)
        .unwrap()
}

fn x_half() -> CliffordElem {
    CliffordElem::product_of(8, &[0, 2, 4, 6], 1)
}

// ---------------------------------------------------------------------------
// group elements

/// How an element was written down.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Encoding {
    /// `ψ(s, t)`, normalized so that `s` is the smallest of the four kernel translates.
    PsiPair(TrialityTriple, TrialityTriple),
    /// `τ_v · x^f`
    TorusX(TorusInvolution, bool),
}

#[derive(Clone, Debug)]
pub struct E8GroupElem {
    pub encoding: Encoding,
    psi_ids: Option<(usize, usize)>,
    concrete: Cl8Pair,
}

impl PartialEq for E8GroupElem {
    fn eq(&self, o: &Self) -> bool {
        self.concrete == o.concrete
    }
}

impl Eq for E8GroupElem {}

impl Hash for E8GroupElem {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.concrete.hash(h);
    }
}

impl PartialOrd for E8GroupElem {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for E8GroupElem {
    fn cmp(&self, o: &Self) -> Ordering {
        pair_cmp(&self.concrete, &o.concrete)
    }
}

impl E8GroupElem {
    fn from_ids(i: usize, j: usize) -> Result<Self> {
        let (i, j) = kernel_ids()
            .iter()
            .map(|&k| (tmul(i, k), tmul(j, k)))
            .min_by(|x, y| cmp_triples(x.0, y.0))
            .unwrap();
        let no_blade = || Error::UnsupportedSpec("triple is not the image of a signed blade".into());
        let a = blade_of(i).ok_or_else(no_blade)?;
        let b = blade_of(j).ok_or_else(no_blade)?;
        Ok(E8GroupElem {
            encoding: Encoding::PsiPair(triple(i), triple(j)),
            psi_ids: Some((i, j)),
            concrete: canonical_pair(&a, &b),
        })
    }

    pub fn from_triples(s: &TrialityTriple, t: &TrialityTriple) -> Result<Self> {
        Self::from_ids(intern(s), intern(t))
    }

    /// `ψ(γ_i^{a,b}, γ_j^{c,d})`
    pub fn psi(i: usize, a: u8, b: u8, j: usize, c: u8, d: u8) -> Self {
        Self::from_triples(&triple_from_gamma(i, a, b), &triple_from_gamma(j, c, d))
            .expect("γ triples come from blades")
    }

    /// `ψ(γ_i, γ_j)`
    pub fn gamma_pair(i: usize, j: usize) -> Self {
        Self::psi(i, 0, 0, j, 0, 0)
    }

    pub fn torus(t: TorusInvolution, with_x: bool) -> Self {
        let q = t.quarter_turns();
        let pairs = standard_pairing(8);
        let mut a = torus_element(&q[..4], &pairs, 8);
        let mut b = torus_element(&q[4..], &pairs, 8);
        if with_x {
            a = a.mul(&x_half());
            b = b.mul(&x_half());
        }
        E8GroupElem {
            encoding: Encoding::TorusX(t, with_x),
            psi_ids: None,
            concrete: canonical_pair(&a, &b),
        }
    }

    pub fn tau(v: HalfVec) -> Self {
        Self::torus(TorusInvolution::new(v), false)
    }

    pub fn x() -> Self {
        Self::torus(TorusInvolution::identity(), true)
    }

    pub fn identity() -> Self {
        Self::gamma_pair(0, 0)
    }

    pub fn is_identity(&self) -> bool {
        static E: OnceLock<Cl8Pair> = OnceLock::new();
        &self.concrete == E.get_or_init(|| canonical_pair(&CliffordElem::one(8), &CliffordElem::one(8)))
    }

    /// Whether the element is the image of `−1 ∈ Spin(16)`.
    pub fn is_minus_one(&self) -> bool {
        let m = CliffordElem::one(8);
        self.concrete == canonical_pair(&m.neg(), &m)
    }

    pub fn is_psi(&self) -> bool {
        matches!(self.encoding, Encoding::PsiPair(..))
    }

    /// The Cl(R^8) pair `(a, b)`, canonical among its kernel translates.
    pub fn concrete(&self) -> &Cl8Pair {
        &self.concrete
    }

    /// `a · b'` in Cl(R^16).
    pub fn spin16(&self) -> CliffordElem {
        self.concrete.0.shifted(0, 16).mul(&self.concrete.1.shifted(8, 16))
    }

    /// Factors of the Spin(16) element, in order.
    pub fn spin16_factors(&self) -> Vec<CliffordElem> {
        match &self.encoding {
            Encoding::PsiPair(..) => vec![
                self.concrete.0.shifted(0, 16),
                self.concrete.1.shifted(8, 16),
            ],
            Encoding::TorusX(t, wx) => {
                let mut f = torus_spin16_factors(t.exponent);
                if *wx {
                    f.push(x_spin16());
                }
                f
            }
        }
    }

    /// `Ad(g)` on e8 as a sparse 248×248 matrix.
    pub fn adjoint_matrix(&self) -> Result<SparseMatrix> {
        adjoint_of_factors(&self.spin16_factors())
    }

    /// `(i, a, b, j, c, d)` when the element is `ψ(γ_i^{a,b}, γ_j^{c,d})`.
    /// Prefers the kernel translate with first entry `γ_i^{0,0}`.
    pub fn gamma_labels(&self) -> Option<((usize, u8, u8), (usize, u8, u8))> {
        let (i, j) = self.psi_ids?;
        let mut best = None;
        for k in kernel_ids() {
            let s = gamma_label(&triple(tmul(i, k)))?;
            let t = gamma_label(&triple(tmul(j, k)))?;
            if s.1 == 0 && s.2 == 0 {
                return Some((s, t));
            }
            best.get_or_insert((s, t));
        }
        best
    }
}

fn root_text(v: HalfVec) -> String {
    if v.0.iter().all(|d| d.abs() == 1) {
        let s: Vec<&str> = v.0.iter().map(|d| if *d > 0 { "+" } else { "-" }).collect();
        format!("({})/2", s.join(" "))
    } else {
        format!("{}", v)
    }
}

impl fmt::Display for E8GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        match &self.encoding {
            Encoding::PsiPair(..) => match self.gamma_labels() {
                Some(((i, a, b), (j, c, d))) => {
                    write!(f, "psi(g{}:{}:{}, g{}:{}:{})", i, a, b, j, c, d)
                }
                None => write!(f, "psi(?)"),
            },
            Encoding::TorusX(t, wx) => match (t.is_identity(), wx) {
                (true, true) => write!(f, "x"),
                (true, false) => write!(f, "e"),
                (false, false) => write!(f, "tau({})", root_text(t.exponent)),
                (false, true) => write!(f, "tau({})*x", root_text(t.exponent)),
            },
        }
    }
}

fn torus_inverse(t: &TorusInvolution) -> TorusInvolution {
    TorusInvolution::new(t.exponent.neg())
}

fn torus_product(t1: &TorusInvolution, f1: bool, t2: &TorusInvolution, f2: bool) -> (TorusInvolution, bool) {
    // x τ x^{-1} = τ^{-1}
    let t2 = if f1 { torus_inverse(t2) } else { *t2 };
    (t1.mul(&t2), f1 ^ f2)
}

/// Product in the shared encoding: triple products for ψ, the dihedral rule
/// `τ x^f · τ' x^{f'} = τ τ'^{±1} x^{f+f'}` for the torus.
pub fn elem_mul(g: &E8GroupElem, h: &E8GroupElem) -> Result<E8GroupElem> {
    match (&g.encoding, &h.encoding) {
        (Encoding::PsiPair(..), Encoding::PsiPair(..)) => {
            let (a1, b1) = g.psi_ids.unwrap();
            let (a2, b2) = h.psi_ids.unwrap();
            E8GroupElem::from_ids(tmul(a1, a2), tmul(b1, b2))
        }
        (Encoding::TorusX(t1, f1), Encoding::TorusX(t2, f2)) => {
            let (t, f) = torus_product(t1, *f1, t2, *f2);
            Ok(E8GroupElem::torus(t, f))
        }
        _ if g.is_identity() => Ok(h.clone()),
        _ if h.is_identity() => Ok(g.clone()),
        _ => Err(Error::MixedEncoding),
    }
}

/// Product of the concrete pairs; works across encodings.
pub fn concrete_mul(g: &E8GroupElem, h: &E8GroupElem) -> Cl8Pair {
    let (a1, b1) = g.concrete();
    let (a2, b2) = h.concrete();
    canonical_pair(&a1.mul(a2), &b1.mul(b2))
}

pub fn commutes_concrete(g: &E8GroupElem, h: &E8GroupElem) -> bool {
    concrete_mul(g, h) == concrete_mul(h, g)
}

fn in_kernel(i: usize) -> bool {
    kernel_ids().contains(&i)
}

pub fn is_involution(g: &E8GroupElem) -> bool {
    match &g.encoding {
        Encoding::PsiPair(..) => {
            let (a, b) = g.psi_ids.unwrap();
            let (s, t) = (tmul(a, a), tmul(b, b));
            s == t && in_kernel(s)
        }
        Encoding::TorusX(t, wx) => *wx || t.is_involutive(),
    }
}

/// Whether two involutions commute, decided in their encoding.
pub fn is_antipodal_pair(g: &E8GroupElem, h: &E8GroupElem) -> Result<bool> {
    if !is_involution(g) || !is_involution(h) {
        return Err(Error::NotInvolution);
    }
    match (&g.encoding, &h.encoding) {
        (Encoding::PsiPair(..), Encoding::PsiPair(..)) => {
            let (a1, b1) = g.psi_ids.unwrap();
            let (a2, b2) = h.psi_ids.unwrap();
            // k = s^{-1} t^{-1} s t must be the same kernel element on both sides
            let k1 = tmul(tmul(tinv(a1), tinv(a2)), tmul(a1, a2));
            let k2 = tmul(tmul(tinv(b1), tinv(b2)), tmul(b1, b2));
            Ok(k1 == k2 && in_kernel(k1))
        }
        (Encoding::TorusX(t1, f1), Encoding::TorusX(t2, f2)) => {
            Ok(torus_product(t1, *f1, t2, *f2) == torus_product(t2, *f2, t1, *f1))
        }
        _ => Ok(commutes_concrete(g, h)),
    }
}

// ---------------------------------------------------------------------------
// roots used by the catalog

fn roots() -> (RootE8, RootE8) {
    alpha_beta()
}

/// `ᾱ = x_7 + x_8`
pub fn alpha_bar() -> RootE8 {
    HalfVec::int_root(7, 1, 8, 1)
}

/// `γ = (1, …, 1)/2`
pub fn gamma_half() -> RootE8 {
    HalfVec::half([1; 8])
}

fn positive(v: Vec<RootE8>) -> Vec<RootE8> {
    v.into_iter().filter(|r| r.is_positive()).collect()
}

fn tau2(u: RootE8, v: RootE8) -> E8GroupElem {
    elem_mul(&E8GroupElem::tau(u), &E8GroupElem::tau(v)).unwrap()
}

// ---------------------------------------------------------------------------
// classification

/// Orbit data of an involution for one level.
#[derive(Clone, Debug)]
pub struct LevelInfo {
    pub orbit: OrbitType,
    /// `Ad(g)` on the centralizer of the level (su2, su3, g2; empty for E8)
    pub centre_action: Vec<SparseVec>,
    pub centre_trivial: bool,
}

#[derive(Clone, Debug)]
pub struct ElementInfo {
    pub fixed_dims: (usize, usize),
    /// levels whose subalgebra `Ad(g)` preserves
    pub levels: BTreeMap<Level, LevelInfo>,
    pub fixes_f4: bool,
    pub fixes_spin1_8: bool,
    pub g2_fixed_dim: Option<usize>,
}

fn centre_of(level: Level) -> Option<&'static SubalgebraBasis> {
    let s = subalgebras();
    match level {
        Level::E7 => Some(&s.su2),
        Level::E6 => Some(&s.su3),
        Level::F4 => Some(&s.g2),
        Level::E8 => None,
    }
}

fn restrict(adj: &SparseMatrix, sub: &SubalgebraBasis) -> Result<Option<SparseMatrix>> {
    match sub.coords.restrict(adj) {
        Ok(r) => Ok(Some(r)),
        Err(Error::NotInvariant(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn compute_info(g: &E8GroupElem) -> Result<ElementInfo> {
    let adj = g.adjoint_matrix()?;
    let fixed_dims = fixed_dims_by_trace(&adj)?;
    let mut levels = BTreeMap::new();
    let mut fixes_f4 = false;
    let mut g2_fixed_dim = None;
    levels.insert(
        Level::E8,
        LevelInfo {
            orbit: orbit_type(Level::E8, fixed_dims.0, fixed_dims.0)?,
            centre_action: Vec::new(),
            centre_trivial: true,
        },
    );
    for level in [Level::E7, Level::E6, Level::F4] {
        let Some(r) = restrict(&adj, level.subalgebra().unwrap())? else {
            continue;
        };
        let Some(c) = restrict(&adj, centre_of(level).unwrap())? else {
            continue;
        };
        let plus = fixed_dims_by_trace(&r)?.0;
        if level == Level::F4 {
            fixes_f4 = r.is_identity();
            g2_fixed_dim = Some(fixed_dims_by_trace(&c)?.0);
        }
        levels.insert(
            level,
            LevelInfo {
                orbit: orbit_type(level, fixed_dims.0, plus)?,
                centre_trivial: c.is_identity(),
                centre_action: c.cols,
            },
        );
    }
    let fixes_spin1_8 = restrict(&adj, &subalgebras().spin1_8)?.map_or(false, |r| r.is_identity());
    Ok(ElementInfo {
        fixed_dims,
        levels,
        fixes_f4,
        fixes_spin1_8,
        g2_fixed_dim,
    })
}

fn orbit_type(level: Level, e8_dim: usize, plus: usize) -> Result<OrbitType> {
    let kind = type_from_dim(level, plus).ok_or(Error::UnclassifiedInvolution {
        group: level.name().to_string(),
        ambient: e8_dim,
        restricted: plus,
    })?;
    Ok(OrbitType {
        level,
        kind,
        restricted_dim: plus,
        e8_dim,
    })
}

/// Cached orbit data; `NotInvolution` for non-involutions.
pub fn element_info(g: &E8GroupElem) -> Result<Arc<ElementInfo>> {
    static CACHE: OnceLock<Mutex<HashMap<E8GroupElem, Arc<ElementInfo>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let hit = cache.lock().unwrap().get(g).cloned();
    if let Some(i) = hit {
        return Ok(i);
    }
    let info = Arc::new(compute_info(g)?);
    cache.lock().unwrap().insert(g.clone(), info.clone());
    Ok(info)
}

fn level_info(g: &E8GroupElem, level: Level) -> Result<(Arc<ElementInfo>, LevelInfo)> {
    let info = element_info(g)?;
    let li = info
        .levels
        .get(&level)
        .cloned()
        .ok_or_else(|| Error::NotNormalizing(level.subalgebra().map_or("e8".into(), |s| s.name.clone())))?;
    Ok((info, li))
}

/// `fixed_space_dims` of `Ad(g)` on e8.
pub fn fixed_space_dims(g: &E8GroupElem) -> Result<(usize, usize)> {
    Ok(element_info(g)?.fixed_dims)
}

pub fn classify(g: &E8GroupElem, level: Level) -> Result<OrbitType> {
    Ok(level_info(g, level)?.1.orbit)
}

/// Orbit label: `e`, `EIX_+`, `EVIII_+` for E8; `pole`, `EVI`, `EVI'`, `EVII`, `EV` for E7;
/// `fixed` or the symmetric-space type below.
pub fn coarse_label(g: &E8GroupElem, level: Level) -> Result<String> {
    let (_, li) = level_info(g, level)?;
    Ok(label_from(&li))
}

fn label_from(li: &LevelInfo) -> String {
    let o = &li.orbit;
    match (o.level, o.kind) {
        (Level::E8, "fixed") => "e".into(),
        (Level::E8, k) => format!("{}_+", k),
        (Level::E7, "fixed") => "pole".into(),
        (Level::E7, "EVI") if o.e8_dim == 120 => "EVI'".into(),
        (_, k) => k.into(),
    }
}

/// Points fixed by E6 and F4 inside A_1(E8): `p_i = ψ(γ_0, γ_i)`.
fn fixed_point_name(g: &E8GroupElem) -> Option<String> {
    (1..8)
        .find(|&i| &E8GroupElem::gamma_pair(0, i) == g)
        .map(|i| format!("p_{}", i))
}

/// Representatives of the numbered polars; their index is the orbit number.
fn representatives(level: Level, kind: &str) -> Vec<(usize, E8GroupElem)> {
    let p = E8GroupElem::psi;
    match (level, kind) {
        (Level::E7, "EVII") => (1..=3).map(|i| (i, p(0, 0, 0, 2 * i, 0, 0))).collect(),
        (Level::E7, "EV") => (1..=3).map(|i| (i, p(1, 0, 0, 2 * i, 0, 0))).collect(),
        (Level::E6, "EIII") => (1..=3).map(|i| (i, p(0, 0, 0, i, 1, 0))).collect(),
        (Level::E6, "EIV") => (4..=7).map(|j| (j, p(0, 0, 0, j, 0, 0))).collect(),
        (Level::E6, "EII") => (1..=3).map(|i| (i, p(1, 0, 0, i, 0, 0))).collect(),
        (Level::E6, "EI") => (4..=7).map(|j| (j, p(1, 0, 0, j, 0, 0))).collect(),
        (Level::F4, "FII") => (1..=7).map(|i| (i, p(0, 0, 0, i, 1, 0))).collect(),
        (Level::F4, "FI") => (1..=7).map(|i| (i, p(1, 0, 0, i, 0, 0))).collect(),
        _ => Vec::new(),
    }
}

/// Name of the H-orbit: `<type>_+` when `Ad(g)` is trivial on the centralizer of H,
/// `<type>_i` when it acts like the i-th representative, `p_i` for fixed points.
pub fn suborbit_name(g: &E8GroupElem, level: Level) -> Result<String> {
    let (_, li) = level_info(g, level)?;
    let label = label_from(&li);
    if level == Level::E8 {
        return Ok(label);
    }
    if li.orbit.kind == "fixed" {
        return Ok(fixed_point_name(g).unwrap_or_else(|| format!("{}:{}", label, g)));
    }
    if li.centre_trivial {
        return Ok(format!("{}_+", label));
    }
    for (i, rep) in representatives(level, li.orbit.kind) {
        let (_, rl) = level_info(&rep, level)?;
        if rl.centre_action == li.centre_action {
            return Ok(format!("{}_{}", label, i));
        }
    }
    Ok(format!("{}_?", label))
}

// ---------------------------------------------------------------------------
// ambient spaces

/// Where a catalog set is supposed to live.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Space {
    E8,
    E7,
    E6,
    F4,
    G2,
    /// G2/SO(4)
    G,
    /// second Spin(8) factor
    Spin8,
    FIPlus,
    FIIPlus,
    EIx,
    EIIPlus,
    EIIIPlus,
    EIVz,
    EVx,
    EVPhi,
    EVIPlus,
    EVIIBeta,
    EVIIIPlus,
    EIXPlus,
}

impl Space {
    pub fn name(self) -> &'static str {
        match self {
            Space::E8 => "E8",
            Space::E7 => "E7",
            Space::E6 => "E6",
            Space::F4 => "F4",
            Space::G2 => "G2",
            Space::G => "G",
            Space::Spin8 => "Spin(8)",
            Space::FIPlus => "FI_+",
            Space::FIIPlus => "FII_+",
            Space::EIx => "EI_x",
            Space::EIIPlus => "EII_+",
            Space::EIIIPlus => "EIII_+",
            Space::EIVz => "EIV_z",
            Space::EVx => "EV_x",
            Space::EVPhi => "EV_phi(-1)",
            Space::EVIPlus => "EVI_+",
            Space::EVIIBeta => "EVII_beta",
            Space::EVIIIPlus => "EVIII_+",
            Space::EIXPlus => "EIX_+",
        }
    }
}

fn same_centre_action(g: &E8GroupElem, base: &E8GroupElem, level: Level, kind: &str) -> Result<bool> {
    let info = element_info(g)?;
    let Some(li) = info.levels.get(&level) else {
        return Ok(false);
    };
    if li.orbit.kind != kind {
        return Ok(false);
    }
    let (_, bl) = level_info(base, level)?;
    Ok(li.centre_action == bl.centre_action)
}

fn trivial_kind(g: &E8GroupElem, level: Level, kind: &str) -> Result<bool> {
    let info = element_info(g)?;
    Ok(info
        .levels
        .get(&level)
        .map_or(false, |li| li.orbit.kind == kind && li.centre_trivial))
}

/// `su^γ(2)` and its centralizer `e7^γ` for `γ = (1, …, 1)/2`.
fn gamma_subalgebras() -> &'static (SubalgebraBasis, SubalgebraBasis) {
    static S: OnceLock<(SubalgebraBasis, SubalgebraBasis)> = OnceLock::new();
    S.get_or_init(|| {
        let su2 = su2_basis(gamma_half());
        let e7 = e8_algebra().centralizer(&su2);
        (
            SubalgebraBasis::new("su2_gamma", su2),
            SubalgebraBasis::new("e7_gamma", e7),
        )
    })
}

/// Fixed dim on `e7^γ` and the action on `su^γ(2)`, if both are preserved.
fn gamma_level(g: &E8GroupElem) -> Result<Option<(usize, Vec<SparseVec>)>> {
    static CACHE: OnceLock<Mutex<HashMap<E8GroupElem, Option<(usize, Vec<SparseVec>)>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let hit = cache.lock().unwrap().get(g).cloned();
    if let Some(v) = hit {
        return Ok(v);
    }
    let (su2, e7) = gamma_subalgebras();
    let adj = g.adjoint_matrix()?;
    let v = match (restrict(&adj, e7)?, restrict(&adj, su2)?) {
        (Some(r), Some(c)) => Some((fixed_dims_by_trace(&r)?.0, c.cols)),
        _ => None,
    };
    cache.lock().unwrap().insert(g.clone(), v.clone());
    Ok(v)
}

/// `φ(−1) = τ_α τ_ᾱ`
pub fn phi_minus_one() -> E8GroupElem {
    tau2(roots().0, alpha_bar())
}

pub fn in_space(g: &E8GroupElem, space: Space) -> Result<bool> {
    let info = element_info(g)?;
    let fixes = |level: Level| info.levels.get(&level).map_or(false, |li| li.centre_trivial);
    let (_, b) = roots();
    Ok(match space {
        Space::E8 => true,
        Space::E7 => fixes(Level::E7),
        Space::E6 => fixes(Level::E6),
        Space::F4 => fixes(Level::F4),
        Space::G2 => info.fixes_f4,
        Space::G => info.fixes_f4 && info.g2_fixed_dim == Some(6),
        Space::Spin8 => info.fixes_spin1_8,
        Space::FIPlus => trivial_kind(g, Level::F4, "FI")?,
        Space::FIIPlus => trivial_kind(g, Level::F4, "FII")?,
        Space::EIIPlus => trivial_kind(g, Level::E6, "EII")?,
        Space::EIIIPlus => trivial_kind(g, Level::E6, "EIII")?,
        Space::EIx => same_centre_action(g, &E8GroupElem::x(), Level::E6, "EI")?,
        Space::EIVz => same_centre_action(g, &E8GroupElem::gamma_pair(0, 4), Level::E6, "EIV")?,
        Space::EVx => same_centre_action(g, &E8GroupElem::x(), Level::E7, "EV")?,
        Space::EVIIBeta => same_centre_action(g, &E8GroupElem::tau(b), Level::E7, "EVII")?,
        Space::EVIPlus => trivial_kind(g, Level::E7, "EVI")? && info.fixed_dims.0 == 136,
        Space::EVIIIPlus => info.fixed_dims.0 == 120,
        Space::EIXPlus => info.fixed_dims.0 == 136,
        Space::EVPhi => {
            let base = gamma_level(&phi_minus_one())?;
            match (gamma_level(g)?, base) {
                (Some((d, c)), Some((_, cb))) => d == 63 && c == cb,
                _ => false,
            }
        }
    })
}

// ---------------------------------------------------------------------------
// named sets

#[derive(Clone, Debug)]
pub struct AntipodalSet {
    pub name: String,
    pub elements: Vec<E8GroupElem>,
    /// `None` for sets derived by filtering
    pub expected_cardinality: Option<usize>,
    pub ambient: String,
}

/// Which maximal antipodal set of E8 a catalog set is cut out of.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    A1,
    A2,
    Itself,
}

#[derive(Clone, Copy, Debug)]
pub struct SetSpec {
    pub name: &'static str,
    pub expected: usize,
    pub space: Space,
    pub source: Source,
}

const fn spec(name: &'static str, expected: usize, space: Space, source: Source) -> SetSpec {
    SetSpec {
        name,
        expected,
        space,
        source,
    }
}

pub const SET_SPECS: &[SetSpec] = &[
    spec("A(G2)", 8, Space::G2, Source::A1),
    spec("A(G)", 7, Space::G, Source::A1),
    spec("A(Spin(8))", 32, Space::Spin8, Source::A1),
    spec("A(F4)", 32, Space::F4, Source::A1),
    spec("A_1(E6)", 32, Space::E6, Source::A1),
    spec("A_2(E6)", 64, Space::E6, Source::A2),
    spec("A_1(E7)", 64, Space::E7, Source::A1),
    spec("A_2(E7)", 128, Space::E7, Source::A2),
    spec("A_1(E8)", 256, Space::E8, Source::Itself),
    spec("A_2(E8)", 512, Space::E8, Source::Itself),
    spec("A(T)", 256, Space::E8, Source::Itself),
    spec("A(FI_+)", 28, Space::FIPlus, Source::A1),
    spec("A(FII_+)", 3, Space::FIIPlus, Source::A1),
    spec("A(FII_+)'", 3, Space::FIIPlus, Source::Itself),
    spec("A_1(EI_x)", 28, Space::EIx, Source::A1),
    spec("A_2(EI_x)", 64, Space::EIx, Source::A2),
    spec("A_1(EII_+)", 28, Space::EIIPlus, Source::A1),
    spec("A_2(EII_+)", 36, Space::EIIPlus, Source::A2),
    spec("A(EIII_+)", 27, Space::EIIIPlus, Source::A2),
    spec("A(EIV_z)", 4, Space::EIVz, Source::A1),
    spec("A_1(EV_x)", 56, Space::EVx, Source::A1),
    spec("A_2(EV_phi(-1))", 72, Space::EVPhi, Source::A2),
    spec("A_3(EV_x)", 128, Space::EVx, Source::A2),
    spec("A_1(EVI_+)", 31, Space::EVIPlus, Source::A1),
    spec("A_2(EVI_+)", 63, Space::EVIPlus, Source::A2),
    spec("A(EVII_beta)", 56, Space::EVIIBeta, Source::A2),
    spec("A_1(EVIII_+)", 199, Space::EVIIIPlus, Source::A1),
    spec("A_2(EVIII_+)", 391, Space::EVIIIPlus, Source::A2),
    spec("A_1(EIX_+)", 56, Space::EIXPlus, Source::A1),
    spec("A_2(EIX_+)", 120, Space::EIXPlus, Source::A2),
];

pub fn set_spec(name: &str) -> Result<SetSpec> {
    SET_SPECS
        .iter()
        .find(|s| s.name == name)
        .copied()
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

const AB: [(u8, u8); 4] = [(0, 0), (1, 0), (0, 1), (1, 1)];

fn psi_family(is: impl Iterator<Item = usize> + Clone, js: &[usize], abs: &[(u8, u8)]) -> Vec<E8GroupElem> {
    let mut out = Vec::new();
    for i in is {
        for &j in js {
            for &(a, b) in abs {
                out.push(E8GroupElem::psi(i, 0, 0, j, a, b));
            }
        }
    }
    out
}

/// A(T) as displayed: `{e} ∪ τ_γ ∪ τ_γ τ_α ∪ {τ_δ τ_β, τ_δ τ_{α+β}}`.
fn a_t_display() -> Vec<E8GroupElem> {
    let (a, b) = roots();
    let mut out = vec![E8GroupElem::torus(TorusInvolution::identity(), false)];
    out.extend(positive_roots().into_iter().map(E8GroupElem::tau));
    for g in positive(slice_multi(&[(a, &[0])])) {
        out.push(tau2(g, a));
    }
    for d in positive(slice_multi(&[(a, &[0]), (b, &[0])])) {
        out.push(tau2(d, b));
        out.push(tau2(d, a.add(b)));
    }
    out
}

fn times_x(v: &[E8GroupElem]) -> Vec<E8GroupElem> {
    v.iter()
        .map(|g| elem_mul(g, &E8GroupElem::x()).unwrap())
        .collect()
}

fn a2_e6_display() -> Vec<E8GroupElem> {
    let (a, b) = roots();
    let mut out = vec![E8GroupElem::torus(TorusInvolution::identity(), false)];
    out.extend(positive(slice_multi(&[(a, &[0]), (b, &[0])])).into_iter().map(E8GroupElem::tau));
    for d in slice_multi(&[(a, &[0]), (b, &[1])]) {
        out.push(tau2(d, a));
    }
    out
}

fn build_elements(name: &str) -> Result<Vec<E8GroupElem>> {
    let (a, b) = roots();
    let p = E8GroupElem::psi;
    let nonzero = &AB[1..];
    let all: Vec<usize> = (0..8).collect();
    let one_to_seven = 1..8usize;
    let e = || E8GroupElem::torus(TorusInvolution::identity(), false);
    let v = match name {
        "A(G2)" => (0..8).map(|i| E8GroupElem::gamma_pair(0, i)).collect(),
        "A(G)" => (1..8).map(|i| E8GroupElem::gamma_pair(0, i)).collect(),
        "A(Spin(8))" => psi_family(0..1, &all, &AB),
        "A(F4)" | "A_1(E6)" => (0..8)
            .flat_map(|i| AB.iter().map(move |&(c, d)| p(i, 0, 0, 0, c, d)))
            .collect(),
        "A_2(E6)" => a2_e6_display(),
        "A_1(E7)" => {
            // {e, τ_α} ∪ A_1(EVI_+) ∪ τ_α A_1(EVI_+), with τ_α = ψ(γ_0, γ_1)
            let evi = build_elements("A_1(EVI_+)")?;
            let ta = E8GroupElem::gamma_pair(0, 1);
            let mut out = vec![E8GroupElem::identity(), ta.clone()];
            for g in &evi {
                out.push(g.clone());
                out.push(elem_mul(&ta, g)?);
            }
            out
        }
        "A_2(E7)" => {
            let mut out = vec![e(), E8GroupElem::tau(a)];
            for g in positive(slice_multi(&[(a, &[0])])) {
                out.push(E8GroupElem::tau(g));
                out.push(tau2(g, a));
            }
            out
        }
        "A_1(E8)" => psi_family(0..8, &all, &AB),
        "A(T)" => a_t_display(),
        "A_2(E8)" => {
            let t = a_t_display();
            let mut out = t.clone();
            out.extend(times_x(&t));
            out
        }
        "A(FI_+)" | "A_1(EII_+)" => one_to_seven
            .flat_map(|i| AB.iter().map(move |&(c, d)| p(i, 0, 0, 0, c, d)))
            .collect(),
        "A(FII_+)" => nonzero.iter().map(|&(c, d)| p(0, 0, 0, 0, c, d)).collect(),
        "A(FII_+)'" => {
            let r = |i, si, j, sj| HalfVec::int_root(i, si, j, sj);
            vec![
                tau2(r(1, 1, 2, 1), r(3, 1, 4, 1)),
                tau2(r(1, 1, 2, -1), r(3, 1, 4, 1)),
                tau2(r(1, 1, 2, 1), r(1, 1, 2, -1)),
            ]
        }
        "A_1(EI_x)" => psi_family(one_to_seven, &[4], &AB),
        "A_2(EI_x)" => times_x(&a2_e6_display()),
        "A_2(EII_+)" => positive(slice_multi(&[(a, &[0]), (b, &[0])]))
            .into_iter()
            .map(E8GroupElem::tau)
            .collect(),
        "A(EIII_+)" => slice_multi(&[(a, &[0]), (b, &[1])])
            .into_iter()
            .map(|d| tau2(d, a))
            .collect(),
        "A(EIV_z)" => psi_family(0..1, &[4], &AB),
        "A_1(EV_x)" => psi_family(one_to_seven, &[4, 5], &AB),
        "A_2(EV_phi(-1))" => {
            let g = gamma_half();
            let mut out = Vec::new();
            for d in positive(slice_multi(&[(a, &[0]), (g, &[-1, 1])])) {
                out.push(tau2(d, a));
            }
            for d in positive(slice_multi(&[(a, &[0]), (b, &[0]), (g, &[-1, 1])])) {
                out.push(tau2(d, b));
                out.push(tau2(d, a.add(b)));
            }
            out
        }
        "A_3(EV_x)" => {
            let mut base = vec![e(), E8GroupElem::tau(a)];
            for g in positive(slice_multi(&[(a, &[0])])) {
                base.push(E8GroupElem::tau(g));
                base.push(tau2(g, a));
            }
            times_x(&base)
        }
        "A_1(EVI_+)" => {
            let mut out = psi_family(one_to_seven, &[0], &AB);
            out.extend(nonzero.iter().map(|&(c, d)| p(0, 0, 0, 1, c, d)));
            out
        }
        "A_2(EVI_+)" => positive(slice_multi(&[(a, &[0])]))
            .into_iter()
            .map(E8GroupElem::tau)
            .collect(),
        "A(EVII_beta)" => slice_multi(&[(a, &[-1])]).into_iter().map(E8GroupElem::tau).collect(),
        "A_1(EVIII_+)" => {
            let mut out = psi_family(one_to_seven, &(1..8).collect::<Vec<_>>(), &AB);
            out.extend(nonzero.iter().map(|&(c, d)| p(0, 0, 0, 0, c, d)));
            out
        }
        "A_2(EVIII_+)" => {
            let mut out = times_x(&a_t_display());
            for g in positive(slice_multi(&[(a, &[0])])) {
                out.push(tau2(g, a));
            }
            for d in positive(slice_multi(&[(a, &[0]), (b, &[0])])) {
                out.push(tau2(d, b));
                out.push(tau2(d, a.add(b)));
            }
            out
        }
        "A_1(EIX_+)" => {
            let mut out = psi_family(0..1, &(1..8).collect::<Vec<_>>(), &AB);
            out.extend(psi_family(one_to_seven, &[0], &AB));
            out
        }
        "A_2(EIX_+)" => positive_roots().into_iter().map(E8GroupElem::tau).collect(),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(v)
}

pub fn build_named_set(name: &str) -> Result<AntipodalSet> {
    let spec = set_spec(name)?;
    Ok(AntipodalSet {
        name: spec.name.to_string(),
        elements: build_elements(name)?,
        expected_cardinality: Some(spec.expected),
        ambient: spec.space.name().to_string(),
    })
}

/// Cached copies of the two maximal antipodal sets of E8.
pub fn a1_e8() -> &'static AntipodalSet {
    static S: OnceLock<AntipodalSet> = OnceLock::new();
    S.get_or_init(|| build_named_set("A_1(E8)").unwrap())
}

pub fn a2_e8() -> &'static AntipodalSet {
    static S: OnceLock<AntipodalSet> = OnceLock::new();
    S.get_or_init(|| build_named_set("A_2(E8)").unwrap())
}

/// Outcome of [`check_antipodal_set`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCheck {
    pub size: usize,
    pub distinct: usize,
    pub non_involutions: usize,
    pub non_commuting_pairs: usize,
    pub outside_ambient: usize,
}

impl SetCheck {
    pub fn is_antipodal(&self) -> bool {
        self.distinct == self.size && self.non_involutions == 0 && self.non_commuting_pairs == 0
    }
}

/// Involutions, pairwise commuting (in the encoding), distinct, inside the ambient.
pub fn check_antipodal_set(set: &AntipodalSet, space: Space) -> Result<SetCheck> {
    let distinct: BTreeSet<&E8GroupElem> = set.elements.iter().collect();
    let non_involutions = set.elements.iter().filter(|g| !is_involution(g)).count();
    let mut non_commuting_pairs = 0;
    if non_involutions == 0 {
        for (i, g) in set.elements.iter().enumerate() {
            for h in &set.elements[i + 1..] {
                if !is_antipodal_pair(g, h)? {
                    non_commuting_pairs += 1;
                }
            }
        }
    }
    let mut outside_ambient = 0;
    for g in &set.elements {
        if !in_space(g, space)? {
            outside_ambient += 1;
        }
    }
    Ok(SetCheck {
        size: set.elements.len(),
        distinct: distinct.len(),
        non_involutions,
        non_commuting_pairs,
        outside_ambient,
    })
}

/// Elements of a source set lying in a space.
pub fn filter_space(source: &AntipodalSet, space: Space) -> Result<AntipodalSet> {
    let mut elements = Vec::new();
    for g in &source.elements {
        if in_space(g, space)? {
            elements.push(g.clone());
        }
    }
    Ok(AntipodalSet {
        name: format!("{} ∩ {}", source.name, space.name()),
        elements,
        expected_cardinality: None,
        ambient: space.name().to_string(),
    })
}

/// Elements whose orbit label (coarse or sub-orbit) under `level` equals `label`;
/// elements outside the normalizer of the level are skipped.
pub fn intersect_with_orbit(set: &AntipodalSet, level: Level, label: &str) -> Result<AntipodalSet> {
    let mut elements = Vec::new();
    for g in &set.elements {
        match coarse_label(g, level) {
            Ok(l) if l == label || suborbit_name(g, level)? == label => elements.push(g.clone()),
            Ok(_) | Err(Error::NotNormalizing(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(AntipodalSet {
        name: format!("{} ∩ {}", set.name, label),
        elements,
        expected_cardinality: None,
        ambient: label.to_string(),
    })
}

/// Coarse orbit labels under a level; every element must normalize it.
pub fn orbit_histogram(set: &AntipodalSet, level: Level) -> Result<BTreeMap<String, usize>> {
    let mut h = BTreeMap::new();
    for g in &set.elements {
        *h.entry(coarse_label(g, level)?).or_insert(0) += 1;
    }
    Ok(h)
}

pub fn suborbit_histogram(set: &AntipodalSet, level: Level) -> Result<BTreeMap<String, usize>> {
    let mut h = BTreeMap::new();
    for g in &set.elements {
        *h.entry(suborbit_name(g, level)?).or_insert(0) += 1;
    }
    Ok(h)
}

/// `"1+31+3·8"`-style summary: distinct counts in decreasing multiplicity groups.
pub fn histogram_shape(h: &BTreeMap<String, usize>) -> BTreeMap<usize, usize> {
    let mut shape = BTreeMap::new();
    for c in h.values() {
        *shape.entry(*c).or_insert(0) += 1;
    }
    shape
}

// ---------------------------------------------------------------------------
// structural checks

/// Subgroup generated by a set, by breadth-first closure under `elem_mul`.
pub fn generated_subgroup(gens: &[E8GroupElem]) -> Result<BTreeSet<E8GroupElem>> {
    let mut seen: BTreeSet<E8GroupElem> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let e = E8GroupElem::identity();
    seen.insert(e.clone());
    queue.push_back(e);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = elem_mul(&g, s)?;
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    Ok(seen)
}

/// Closed under products, all involutions, abelian; in the encoding.
pub fn is_abelian_subgroup(set: &AntipodalSet) -> Result<bool> {
    let members: BTreeSet<&E8GroupElem> = set.elements.iter().collect();
    for g in &set.elements {
        if !is_involution(g) {
            return Ok(false);
        }
        for h in &set.elements {
            if !members.contains(&elem_mul(g, h)?) {
                return Ok(false);
            }
        }
    }
    Ok(check_antipodal_set(set, Space::E8)?.non_commuting_pairs == 0)
}

/// Elements of A_1(E8) equal to an element of A_2(E8), and whether their two
/// adjoint matrices agree.
pub fn a1_a2_overlap() -> Result<Vec<(E8GroupElem, E8GroupElem, bool)>> {
    let a2: HashMap<&E8GroupElem, &E8GroupElem> = a2_e8().elements.iter().map(|g| (g, g)).collect();
    let mut out = Vec::new();
    for g in &a1_e8().elements {
        if let Some(h) = a2.get(g) {
            let same = g.adjoint_matrix()? == h.adjoint_matrix()?;
            out.push((g.clone(), (*h).clone(), same));
        }
    }
    Ok(out)
}

/// Identities between the ψ and torus encodings.
pub fn encoding_identities() -> Vec<(&'static str, E8GroupElem, E8GroupElem)> {
    let (a, b) = roots();
    let p = E8GroupElem::psi;
    let t = E8GroupElem::tau;
    let r = |s: &str| parse_root_expr(s).unwrap();
    let x = E8GroupElem::x();
    let tx = |v: RootE8| elem_mul(&t(v), &x).unwrap();
    vec![
        ("x = psi(g4, g4)", x.clone(), p(4, 0, 0, 4, 0, 0)),
        ("tau_alpha = psi(g0, g1)", t(a), p(0, 0, 0, 1, 0, 0)),
        ("tau_beta = psi(g0, g3)", t(b), p(0, 0, 0, 3, 0, 0)),
        ("tau_alpha+beta = psi(g0, g2)", t(a.add(b)), p(0, 0, 0, 2, 0, 0)),
        ("tau_x3-x4 = psi(g1, g0)", t(r("x3-x4")), p(1, 0, 0, 0, 0, 0)),
        ("tau_x7+x8 = psi(g0, g1^10)", t(r("x7+x8")), p(0, 0, 0, 1, 1, 0)),
        ("tau_x6+x8 = psi(g0, g2^10)", t(r("x6+x8")), p(0, 0, 0, 2, 1, 0)),
        ("tau_-x6-x7 = psi(g0, g3^10)", t(r("-x6-x7")), p(0, 0, 0, 3, 1, 0)),
        ("tau_x3-x4 tau_alpha = psi(g1, g1)", tau2(r("x3-x4"), a), p(1, 0, 0, 1, 0, 0)),
        (
            "tau_x3-x4 tau_alpha+beta = psi(g1, g2)",
            tau2(r("x3-x4"), a.add(b)),
            p(1, 0, 0, 2, 0, 0),
        ),
        ("tau_x3-x4 tau_beta = psi(g1, g3)", tau2(r("x3-x4"), b), p(1, 0, 0, 3, 0, 0)),
        ("x tau_alpha = psi(g4, g5)", tx(a), p(4, 0, 0, 5, 0, 0)),
        ("x tau_alpha+beta = psi(g4, g6)", tx(a.add(b)), p(4, 0, 0, 6, 0, 0)),
        ("x tau_beta = psi(g4, g7)", tx(b), p(4, 0, 0, 7, 0, 0)),
    ]
}

/// The polar of `q = τ_ᾱ` an element `r ∈ EVI_+` commuting with `q` lies in,
/// read off from the centre of the fixed algebra of `Ad(r)` on `F(Ad q, e7)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EviPolar {
    /// centre 0: spin(8) + spin(4) + su(2)
    Grass4,
    /// centre of dimension 2: su(6) + R^2
    DIII,
    /// `r = q`
    Pole,
    Other(usize),
}

fn q_fixed_e7() -> &'static SubalgebraBasis {
    static K: OnceLock<SubalgebraBasis> = OnceLock::new();
    K.get_or_init(|| {
        let q = E8GroupElem::tau(alpha_bar());
        let adj = q.adjoint_matrix().unwrap();
        fixed_subalgebra(&adj, &subalgebras().e7, "e7^q").unwrap()
    })
}

pub fn evi_polar(r: &E8GroupElem) -> Result<EviPolar> {
    let q = E8GroupElem::tau(alpha_bar());
    if r == &q {
        return Ok(EviPolar::Pole);
    }
    let k = q_fixed_e7();
    let fixed = fixed_subalgebra(&r.adjoint_matrix()?, k, "fixed")?;
    Ok(match center_dim(&fixed) {
        0 => EviPolar::Grass4,
        2 => EviPolar::DIII,
        d => EviPolar::Other(d),
    })
}

/// `dim F(Ad q, e7)`
pub fn q_fixed_dim() -> usize {
    q_fixed_e7().dim()
}

/// Elements of a subset of EVI_+ lying in the polar `G̃_4(R^12)_+` of `q`.
pub fn grass4_intersection(set: &AntipodalSet) -> Result<AntipodalSet> {
    let mut elements = Vec::new();
    for g in &set.elements {
        if evi_polar(g)? == EviPolar::Grass4 {
            elements.push(g.clone());
        }
    }
    Ok(AntipodalSet {
        name: format!("{} ∩ G4(R^12)_+", set.name),
        elements,
        expected_cardinality: None,
        ambient: "G4(R^12)_+".into(),
    })
}

/// Parses `psi(g1:0:0, g0:0:0)`, `tau(x7-x8)`, `x`, `e` and products with `*`.
pub fn parse_element(s: &str) -> Result<E8GroupElem> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::ParseError("empty element".into()));
    }
    let mut factors = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in t.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => {
                factors.push(&t[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::ParseError(format!("unbalanced parentheses in {}", s)));
        }
    }
    if depth != 0 {
        return Err(Error::ParseError(format!("unbalanced parentheses in {}", s)));
    }
    factors.push(&t[start..]);
    let mut acc: Option<E8GroupElem> = None;
    for f in factors {
        let g = parse_factor(f)?;
        acc = Some(match acc {
            None => g,
            Some(h) => elem_mul(&h, &g)?,
        });
    }
    Ok(acc.unwrap())
}

fn parse_gamma(s: &str) -> Result<(usize, u8, u8)> {
    let bad = || Error::ParseError(format!("expected g<i>:<a>:<b>, got {}", s));
    let body = s.strip_prefix('g').ok_or_else(bad)?;
    let parts: Vec<&str> = body.split(':').collect();
    let (i, a, b) = match parts.as_slice() {
        [i] => (i.parse().map_err(|_| bad())?, 0, 0),
        [i, a, b] => (
            i.parse().map_err(|_| bad())?,
            a.parse().map_err(|_| bad())?,
            b.parse().map_err(|_| bad())?,
        ),
        _ => return Err(bad()),
    };
    if i > 7 || a > 1 || b > 1 {
        return Err(bad());
    }
    Ok((i, a, b))
}

fn parse_factor(f: &str) -> Result<E8GroupElem> {
    match f {
        "x" => return Ok(E8GroupElem::x()),
        "e" => return Ok(E8GroupElem::identity()),
        _ => {}
    }
    if let Some(body) = f.strip_prefix("psi(").and_then(|r| r.strip_suffix(')')) {
        let parts: Vec<&str> = body.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::ParseError(format!("psi needs two arguments: {}", f)));
        }
        let (i, a, b) = parse_gamma(parts[0])?;
        let (j, c, d) = parse_gamma(parts[1])?;
        return Ok(E8GroupElem::psi(i, a, b, j, c, d));
    }
    if let Some(body) = f.strip_prefix("tau(").and_then(|r| r.strip_suffix(')')) {
        return Ok(E8GroupElem::tau(parse_root_expr(body)?));
    }
    Err(Error::ParseError(format!("unrecognized factor {}", f)))
}

/// The roots `α`, `β`, `ᾱ` and `γ` used throughout.
pub fn reference_roots() -> [(&'static str, RootE8); 4] {
    let (a, b) = roots();
    [("alpha", a), ("beta", b), ("alpha_bar", alpha_bar()), ("gamma", gamma_half())]
}

/// Every named-set identifier.
pub fn set_names() -> Vec<&'static str> {
    SET_SPECS.iter().map(|s| s.name).collect()
}

/// Exponents of A(T) from the lattice enumeration, as a cross-check of the display.
pub fn a_t_enumerated() -> Vec<E8GroupElem> {
    let (a, b) = roots();
    enumerate_torus_involutions(a, b)
        .into_iter()
        .map(|t| E8GroupElem::torus(t, false))
        .collect()
}

