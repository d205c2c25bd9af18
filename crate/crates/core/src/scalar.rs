//! Exact arithmetic over Q(√2) and exact linear algebra.
//!
//! Dense [`ExactMatrix`] is the public shape. Elimination runs on sparse rows
//! because almost every matrix in this crate is a signed permutation or close to it.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `a + b·√2` with rational `a`, `b`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    pub a: BigRational,
    pub b: BigRational,
}

impl ExactScalar {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        ExactScalar { a, b }
    }

    pub fn zero() -> Self {
        ExactScalar {
            a: BigRational::zero(),
            b: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        ExactScalar {
            a: BigRational::from_integer(BigInt::from(n)),
            b: BigRational::zero(),
        }
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        ExactScalar {
            a: BigRational::new(BigInt::from(n), BigInt::from(d)),
            b: BigRational::zero(),
        }
    }

    pub fn from_rational(a: BigRational) -> Self {
        ExactScalar {
            a,
            b: BigRational::zero(),
        }
    }

    /// √2
    pub fn sqrt2() -> Self {
        ExactScalar {
            a: BigRational::zero(),
            b: BigRational::one(),
        }
    }

    /// 1/√2 = √2/2
    pub fn inv_sqrt2() -> Self {
        ExactScalar {
            a: BigRational::zero(),
            b: BigRational::new(BigInt::from(1), BigInt::from(2)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a − b√2`.
    pub fn galois(&self) -> Self {
        ExactScalar {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm `a² − 2b²`.
    pub fn field_norm(&self) -> BigRational {
        let two = BigRational::from_integer(BigInt::from(2));
        &self.a * &self.a - two * &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.b.is_zero() {
            return Some(ExactScalar::from_rational(self.a.recip()));
        }
        let n = self.field_norm();
        Some(ExactScalar {
            a: &self.a / &n,
            b: -(&self.b / &n),
        })
    }

    /// Sign as a real number.
    pub fn signum(&self) -> i32 {
        // compare a and -b√2 via squares
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let a2 = &self.a * &self.a;
        let b2 = two * &self.b * &self.b;
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    /// Integer value if the scalar is a rational integer.
    pub fn to_i64(&self) -> Option<i64> {
        if !self.b.is_zero() || !self.a.is_integer() {
            return None;
        }
        i64::try_from(self.a.to_integer()).ok()
    }
}

fn sign_of(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Lexicographic on `(a, b)`; used only for canonical representatives.
impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.a.cmp(&other.a).then_with(|| self.b.cmp(&other.b))
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt2", self.b),
            (false, false) => {
                if self.b.is_negative() {
                    write!(f, "{}-{}*sqrt2", self.a, -self.b.clone())
                } else {
                    write!(f, "{}+{}*sqrt2", self.a, self.b)
                }
            }
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn add(self, o: &ExactScalar) -> ExactScalar {
        let b = if self.b.is_zero() {
            o.b.clone()
        } else if o.b.is_zero() {
            self.b.clone()
        } else {
            &self.b + &o.b
        };
        ExactScalar {
            a: &self.a + &o.a,
            b,
        }
    }
}

impl<'a> Sub<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn sub(self, o: &ExactScalar) -> ExactScalar {
        let b = if o.b.is_zero() {
            self.b.clone()
        } else {
            &self.b - &o.b
        };
        ExactScalar {
            a: &self.a - &o.a,
            b,
        }
    }
}

impl<'a> Mul<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn mul(self, o: &ExactScalar) -> ExactScalar {
        if self.b.is_zero() && o.b.is_zero() {
            return ExactScalar::from_rational(&self.a * &o.a);
        }
        let two = BigRational::from_integer(BigInt::from(2));
        ExactScalar {
            a: &self.a * &o.a + two * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

impl<'a> Div<&'a ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn div(self, o: &ExactScalar) -> ExactScalar {
        let inv = o.inv().expect("division by zero in ExactScalar");
        self * &inv
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: ExactScalar) -> ExactScalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $m(self, o: &ExactScalar) -> ExactScalar {
                (&self).$m(o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -(self.clone())
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, o: &ExactScalar) {
        self.a += &o.a;
        if !o.b.is_zero() {
            self.b += &o.b;
        }
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, o: &ExactScalar) {
        self.a -= &o.a;
        if !o.b.is_zero() {
            self.b -= &o.b;
        }
    }
}

/// Formal complexification of Q(√2).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ComplexScalar {
    pub re: ExactScalar,
    pub im: ExactScalar,
}

impl ComplexScalar {
    pub fn new(re: ExactScalar, im: ExactScalar) -> Self {
        ComplexScalar { re, im }
    }
    pub fn zero() -> Self {
        ComplexScalar::default()
    }
    pub fn real(re: ExactScalar) -> Self {
        ComplexScalar {
            re,
            im: ExactScalar::zero(),
        }
    }
    pub fn i() -> Self {
        ComplexScalar {
            re: ExactScalar::zero(),
            im: ExactScalar::one(),
        }
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn conj(&self) -> Self {
        ComplexScalar {
            re: self.re.clone(),
            im: -&self.im,
        }
    }
    pub fn add(&self, o: &Self) -> Self {
        ComplexScalar {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
    pub fn sub(&self, o: &Self) -> Self {
        ComplexScalar {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    pub fn mul(&self, o: &Self) -> Self {
        ComplexScalar {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    pub fn inv(&self) -> Option<Self> {
        let n = &self.re * &self.re + &self.im * &self.im;
        let ni = n.inv()?;
        Some(ComplexScalar {
            re: &self.re * &ni,
            im: -(&self.im * &ni),
        })
    }
}

pub type ExactVector = Vec<ExactScalar>;

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, ExactScalar)>;

pub fn sparse_from_dense(v: &[ExactScalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &SparseVec, n: usize) -> ExactVector {
    let mut out = vec![ExactScalar::zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `x + c·y`
pub fn sparse_axpy(x: &SparseVec, c: &ExactScalar, y: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            let v = c * &y[j].1;
            if !v.is_zero() {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = &x[i].1 + &(c * &y[j].1);
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_scale(x: &SparseVec, c: &ExactScalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    x.iter().map(|(i, v)| (*i, v * c)).collect()
}

pub fn sparse_dot(x: &SparseVec, y: &SparseVec) -> ExactScalar {
    let mut acc = ExactScalar::zero();
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                acc += &(&x[i].1 * &y[j].1);
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// Accumulates sparse contributions in arbitrary index order.
pub fn sparse_collect(mut entries: Vec<(usize, ExactScalar)>) -> SparseVec {
    entries.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some((j, w)) if *j == i => *w += &v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// Dense matrix over Q(√2), row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<ExactScalar>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = ExactScalar;
    fn index(&self, (r, c): (usize, usize)) -> &ExactScalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut ExactScalar {
        &mut self.data[r * self.cols + c]
    }
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![ExactScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ExactScalar::one();
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, vals: &[i64]) -> Self {
        assert_eq!(vals.len(), rows * cols);
        ExactMatrix {
            rows,
            cols,
            data: vals.iter().map(|&v| ExactScalar::from_int(v)).collect(),
        }
    }

    pub fn from_rows(rows: &[ExactVector]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row.iter().cloned());
        }
        ExactMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn row(&self, r: usize) -> ExactVector {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col(&self, c: usize) -> ExactVector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&ExactScalar::from_int(-1))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows);
        let mut out = Self::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let x = &self[(r, k)];
                if x.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let y = &o[(k, c)];
                    if !y.is_zero() {
                        let p = x * y;
                        out[(r, c)] += &p;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[ExactScalar]) -> ExactVector {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = ExactScalar::zero();
                for c in 0..self.cols {
                    let x = &self[(r, c)];
                    if !x.is_zero() && !v[c].is_zero() {
                        acc += &(x * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Commutator `AB − BA`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = &self[(r, c)];
                    if r == c {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn is_skew(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|r| (0..self.cols).all(|c| (&self[(r, c)] + &self[(c, r)]).is_zero()))
    }

    pub fn trace(&self) -> ExactScalar {
        let mut t = ExactScalar::zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix {
            nrows: self.rows,
            ncols: self.cols,
            cols: (0..self.cols).map(|c| sparse_from_dense(&self.col(c))).collect(),
        }
    }
}

/// Column-major sparse matrix. Column `j` is the image of basis vector `j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            nrows: n,
            ncols: n,
            cols: (0..n).map(|i| vec![(i, ExactScalar::one())]).collect(),
        }
    }

    pub fn from_cols(nrows: usize, cols: Vec<SparseVec>) -> Self {
        SparseMatrix {
            nrows,
            ncols: cols.len(),
            cols,
        }
    }

    pub fn mul_sparse_vec(&self, v: &SparseVec) -> SparseVec {
        let mut acc: Vec<(usize, ExactScalar)> = Vec::new();
        for (j, x) in v {
            for (i, y) in &self.cols[*j] {
                acc.push((*i, x * y));
            }
        }
        sparse_collect(acc)
    }

    /// `self · o`
    pub fn mul(&self, o: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, o.nrows);
        SparseMatrix {
            nrows: self.nrows,
            ncols: o.ncols,
            cols: o.cols.iter().map(|c| self.mul_sparse_vec(c)).collect(),
        }
    }

    pub fn transpose_rows(&self) -> Vec<SparseVec> {
        let mut rows: Vec<SparseVec> = vec![Vec::new(); self.nrows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in col {
                rows[*i].push((j, x.clone()));
            }
        }
        rows
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            cols: self.transpose_rows(),
        }
    }

    pub fn to_dense(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.nrows, self.ncols);
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in col {
                m[(*i, j)] = x.clone();
            }
        }
        m
    }

    /// `self + c·I`
    pub fn add_scaled_identity(&self, c: &ExactScalar) -> SparseMatrix {
        let cols = self
            .cols
            .iter()
            .enumerate()
            .map(|(j, col)| sparse_axpy(col, c, &vec![(j, ExactScalar::one())]))
            .collect();
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            cols,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols
            && self
                .cols
                .iter()
                .enumerate()
                .all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    pub fn trace(&self) -> ExactScalar {
        let mut t = ExactScalar::zero();
        for (j, col) in self.cols.iter().enumerate() {
            if let Ok(k) = col.binary_search_by_key(&j, |e| e.0) {
                t += &col[k].1;
            }
        }
        t
    }

    pub fn rank(&self) -> usize {
        // rank of columns = rank of matrix
        let mut e = Echelon::new(self.nrows);
        for c in &self.cols {
            e.insert(c.clone());
        }
        e.rank()
    }

    pub fn kernel(&self) -> Vec<SparseVec> {
        kernel_of_rows(self.transpose_rows(), self.ncols)
    }
}

/// Incremental row echelon form over sparse rows with lead-1 pivots.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    pivots: Vec<Option<usize>>,
    rows: Vec<SparseVec>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivots: vec![None; ncols],
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current pivots; returns the remainder.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut start = 0;
        loop {
            let pos = v[start..]
                .iter()
                .position(|(c, _)| self.pivots[*c].is_some())
                .map(|p| p + start);
            match pos {
                None => return v,
                Some(p) => {
                    let (c, x) = v[p].clone();
                    let r = &self.rows[self.pivots[c].unwrap()];
                    v = sparse_axpy(&v, &(-x), r);
                    start = v.partition_point(|e| e.0 < c);
                }
            }
        }
    }

    /// Inserts a row; returns true if it increased the rank.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        if v.is_empty() {
            return false;
        }
        let (lead, x) = v[0].clone();
        let v = sparse_scale(&v, &x.inv().unwrap());
        self.pivots[lead] = Some(self.rows.len());
        self.rows.push(v);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Fully reduced rows, sorted by pivot column.
    pub fn rref(&self) -> Vec<SparseVec> {
        let mut leads: Vec<usize> = (0..self.ncols).filter(|c| self.pivots[*c].is_some()).collect();
        leads.reverse();
        let mut done: Vec<Option<SparseVec>> = vec![None; self.ncols];
        for &l in &leads {
            let mut v = self.rows[self.pivots[l].unwrap()].clone();
            let mut start = 1;
            loop {
                let pos = v[start..]
                    .iter()
                    .position(|(c, _)| done[*c].is_some())
                    .map(|p| p + start);
                match pos {
                    None => break,
                    Some(p) => {
                        let (c, x) = v[p].clone();
                        v = sparse_axpy(&v, &(-x), done[c].as_ref().unwrap());
                        start = v.partition_point(|e| e.0 < c);
                    }
                }
            }
            done[l] = Some(v);
        }
        leads.reverse();
        leads.into_iter().map(|l| done[l].take().unwrap()).collect()
    }
}

/// Kernel of the matrix whose rows are given, as vectors of length `ncols`.
pub fn kernel_of_rows(rows: Vec<SparseVec>, ncols: usize) -> Vec<SparseVec> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    let rref = e.rref();
    let mut is_pivot = vec![false; ncols];
    for r in &rref {
        is_pivot[r[0].0] = true;
    }
    let mut basis = Vec::new();
    for f in (0..ncols).filter(|c| !is_pivot[*c]) {
        let mut v: Vec<(usize, ExactScalar)> = vec![(f, ExactScalar::one())];
        for r in &rref {
            if let Ok(k) = r.binary_search_by_key(&f, |e| e.0) {
                v.push((r[0].0, -&r[k].1));
            }
        }
        basis.push(sparse_collect(v));
    }
    basis
}

/// Coordinates with respect to a fixed basis of a subspace.
#[derive(Clone, Debug)]
pub struct SubspaceCoords {
    dim: usize,
    n: usize,
    // rows of [B | I] in echelon form over the first n columns
    ech: Echelon,
    basis: Vec<SparseVec>,
}

impl SubspaceCoords {
    /// Panics if the basis is linearly dependent.
    pub fn new(basis: &[SparseVec], n: usize) -> Self {
        let k = basis.len();
        let mut ech = Echelon::new(n + k);
        for (i, b) in basis.iter().enumerate() {
            let mut row = b.clone();
            row.push((n + i, ExactScalar::one()));
            let ok = ech.insert(row);
            assert!(ok, "dependent basis");
            assert!(ech.rows.last().unwrap()[0].0 < n, "dependent basis");
        }
        SubspaceCoords {
            dim: k,
            n,
            ech,
            basis: basis.to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    /// Coordinates of `w` in the basis, or `None` if `w` is outside the span.
    pub fn coords(&self, w: &SparseVec) -> Option<SparseVec> {
        // reduce [w | 0]; inside the span iff the first n columns vanish,
        // then the tail equals −coords
        let r = self.ech.reduce(w.clone());
        if r.first().map_or(false, |e| e.0 < self.n) {
            return None;
        }
        Some(r.into_iter().map(|(i, x)| (i - self.n, -x)).collect())
    }

    pub fn contains(&self, w: &SparseVec) -> bool {
        self.coords(w).is_some()
    }

    /// Matrix of `m` on the subspace, or `NotInvariant`.
    pub fn restrict(&self, m: &SparseMatrix) -> Result<SparseMatrix> {
        let mut cols = Vec::with_capacity(self.dim);
        for (i, b) in self.basis.iter().enumerate() {
            let w = m.mul_sparse_vec(b);
            cols.push(self.coords(&w).ok_or(Error::NotInvariant(i))?);
        }
        Ok(SparseMatrix::from_cols(self.dim, cols))
    }
}

/// Rank by exact Gaussian elimination.
pub fn rank(m: &ExactMatrix) -> usize {
    m.to_sparse().rank()
}

/// Basis of the kernel, `cols − rank` vectors.
pub fn kernel_basis(m: &ExactMatrix) -> Vec<ExactVector> {
    m.to_sparse()
        .kernel()
        .iter()
        .map(|v| dense_from_sparse(v, m.cols))
        .collect()
}

/// `(dim ker(M − I), dim ker(M + I))` for an involution `M`.
pub fn fixed_space_dims(m: &ExactMatrix) -> Result<(usize, usize)> {
    fixed_space_dims_sparse(&m.to_sparse())
}

pub fn fixed_space_dims_sparse(m: &SparseMatrix) -> Result<(usize, usize)> {
    if m.nrows != m.ncols || !m.mul(m).is_identity() {
        return Err(Error::NotInvolution);
    }
    let n = m.ncols;
    let plus = n - m.add_scaled_identity(&ExactScalar::from_int(-1)).rank();
    let minus = n - m.add_scaled_identity(&ExactScalar::one()).rank();
    Ok((plus, minus))
}

/// Matrix of `M` in the coordinates of `basis`; errors if the span is not invariant.
pub fn restrict_to_subspace(m: &ExactMatrix, basis: &[ExactVector]) -> Result<ExactMatrix> {
    let sb: Vec<SparseVec> = basis.iter().map(|b| sparse_from_dense(b)).collect();
    let sub = SubspaceCoords::new(&sb, m.cols);
    Ok(sub.restrict(&m.to_sparse())?.to_dense())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_squares_to_two() {
        let s = ExactScalar::sqrt2();
        assert_eq!(&s * &s, ExactScalar::from_int(2));
        let h = ExactScalar::inv_sqrt2();
        assert_eq!(&h * &h, ExactScalar::from_frac(1, 2));
        assert_eq!(s.inv().unwrap(), h);
    }

    #[test]
    fn signum_of_mixed() {
        let x = ExactScalar::new(BigRational::from_integer(3.into()), BigRational::from_integer((-2).into()));
        assert_eq!(x.signum(), 1); // 3 - 2.83
        let y = ExactScalar::new(BigRational::from_integer(1.into()), BigRational::from_integer((-1).into()));
        assert_eq!(y.signum(), -1);
    }

    #[test]
    fn rank_small_cases() {
        assert_eq!(rank(&ExactMatrix::identity(3)), 3);
        assert_eq!(rank(&ExactMatrix::zeros(5, 5)), 0);
        let m = ExactMatrix::from_i64(2, 3, &[1, 2, 3, 2, 4, 6]);
        assert_eq!(rank(&m), 1);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in k {
            assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rref_is_reduced() {
        let m = ExactMatrix::from_i64(3, 4, &[1, 2, 0, 1, 2, 4, 1, 1, 0, 0, 1, -1]);
        let mut e = Echelon::new(4);
        for r in 0..3 {
            e.insert(sparse_from_dense(&m.row(r)));
        }
        let rr = e.rref();
        assert_eq!(rr.len(), 2);
        for (i, r) in rr.iter().enumerate() {
            for (j, s) in rr.iter().enumerate() {
                if i != j {
                    assert!(s.binary_search_by_key(&r[0].0, |x| x.0).is_err());
                }
            }
        }
    }

    #[test]
    fn restrict_identity_and_failure() {
        let basis = vec![
            vec![ExactScalar::one(), ExactScalar::one(), ExactScalar::zero()],
            vec![ExactScalar::zero(), ExactScalar::one(), ExactScalar::one()],
        ];
        let r = restrict_to_subspace(&ExactMatrix::identity(3), &basis).unwrap();
        assert!(r.is_identity());
        // swap of first two coordinates does not preserve this plane
        let p = ExactMatrix::from_i64(3, 3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]);
        assert!(matches!(
            restrict_to_subspace(&p, &basis),
            Err(Error::NotInvariant(_))
        ));
    }

    #[test]
    fn fixed_dims_of_reflection() {
        let p = ExactMatrix::from_i64(3, 3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]);
        assert_eq!(fixed_space_dims(&p).unwrap(), (2, 1));
        let q = ExactMatrix::from_i64(2, 2, &[1, 1, 0, 1]);
        assert_eq!(fixed_space_dims(&q), Err(Error::NotInvolution));
    }
}
