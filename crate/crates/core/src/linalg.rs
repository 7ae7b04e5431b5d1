//! Exact integer linear algebra: dense matrices, Smith normal form, kernels and
//! integral solutions.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    rows: usize,
    cols: usize,
    entries: Vec<String>,
}

impl Serialize for IntegerMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixFile {
            rows: self.rows,
            cols: self.cols,
            entries: self.data.iter().map(|x| x.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntegerMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let file = MatrixFile::deserialize(d)?;
        if file.entries.len() != file.rows * file.cols {
            return Err(D::Error::custom(format!(
                "expected {} entries for a {}x{} matrix, found {}",
                file.rows * file.cols,
                file.rows,
                file.cols,
                file.entries.len()
            )));
        }
        let data = file
            .entries
            .iter()
            .map(|e| {
                e.parse::<BigInt>()
                    .map_err(|_| D::Error::custom(format!("bad integer entry {e:?}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntegerMatrix {
            rows: file.rows,
            cols: file.cols,
            data,
        })
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::SizeMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().cloned().map(Into::into));
        }
        Ok(IntegerMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a `rows x cols` matrix from its columns.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::SizeMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::SizeMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.rows != other.rows {
            return Err(Error::SizeMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let cols = self.cols + other.cols;
        let mut out = Self::zeros(self.rows, cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        Ok(out)
    }

    /// The first `k` rows.
    pub fn top_rows(&self, k: usize) -> IntegerMatrix {
        IntegerMatrix {
            rows: k,
            cols: self.cols,
            data: self.data[..k * self.cols].to_vec(),
        }
    }

    /// Columns `range` as a new matrix.
    pub fn column_range(&self, range: std::ops::Range<usize>) -> IntegerMatrix {
        let mut out = Self::zeros(self.rows, range.len());
        for r in 0..self.rows {
            for (k, c) in range.clone().enumerate() {
                out.set(r, k, self.get(r, c).clone());
            }
        }
        out
    }

    /// Rank over `ℚ`.
    pub fn rank(&self) -> usize {
        column_echelon(self, false).0
    }

    /// Determinant by fraction-free elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        Ok(sign * prev)
    }
}

/// Column-style echelon reduction by integer column operations.
///
/// Returns the rank `r` and, when `track` is set, a unimodular `R` such that
/// the first `r` columns of `M·R` are independent and the rest are zero; the
/// last `cols - r` columns of `R` are then a `ℤ`-basis of the kernel.
fn column_echelon(m: &IntegerMatrix, track: bool) -> (usize, Option<Vec<Vec<BigInt>>>) {
    let n = m.cols;
    let mut cols: Vec<Vec<BigInt>> = m.columns();
    let mut transform: Option<Vec<Vec<BigInt>>> = track.then(|| {
        (0..n)
            .map(|j| {
                let mut e = vec![BigInt::zero(); n];
                e[j] = BigInt::one();
                e
            })
            .collect()
    });
    let mut t = 0;
    for r in 0..m.rows {
        if t == n {
            break;
        }
        loop {
            let pivot = (t..n)
                .filter(|&j| !cols[j][r].is_zero())
                .min_by(|&a, &b| cols[a][r].magnitude().cmp(cols[b][r].magnitude()));
            let Some(p) = pivot else { break };
            cols.swap(t, p);
            if let Some(tr) = transform.as_mut() {
                tr.swap(t, p);
            }
            let mut done = true;
            for j in t + 1..n {
                if cols[j][r].is_zero() {
                    continue;
                }
                let q = &cols[j][r] / &cols[t][r];
                let (head, tail) = cols.split_at_mut(j);
                axpy(&mut tail[0], &head[t], &q);
                if let Some(tr) = transform.as_mut() {
                    let (head, tail) = tr.split_at_mut(j);
                    axpy(&mut tail[0], &head[t], &q);
                }
                if !cols[j][r].is_zero() {
                    done = false;
                }
            }
            if done {
                t += 1;
                break;
            }
        }
    }
    (t, transform)
}

/// `y -= q·x`.
fn axpy(y: &mut [BigInt], x: &[BigInt], q: &BigInt) {
    for (a, b) in y.iter_mut().zip(x) {
        if !b.is_zero() {
            *a -= q * b;
        }
    }
}

/// A `ℤ`-basis of `{x : M x = 0}` as the columns of a `cols x k` matrix.
pub fn kernel_basis(m: &IntegerMatrix) -> IntegerMatrix {
    let (rank, transform) = column_echelon(m, true);
    let transform = transform.expect("tracked");
    IntegerMatrix::from_columns(m.cols, &transform[rank..]).expect("columns have length cols")
}

/// Rank over `ℚ` of a matrix given by rational columns.
pub fn rational_rank(rows: usize, columns: &[Vec<BigRational>]) -> usize {
    let scaled: Vec<Vec<BigInt>> = columns
        .iter()
        .map(|col| {
            let l = col.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            col.iter()
                .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    IntegerMatrix::from_columns(rows, &scaled)
        .expect("columns have length rows")
        .rank()
}

/// Smith normal form `L·M·R = D`, with `U = L⁻¹` and `V = R⁻¹` so `M = U·D·V`.
#[derive(Clone, Debug)]
pub struct SnfResult {
    /// Nonzero diagonal entries `d_1 | d_2 | …`, all positive.
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
    pub diagonal: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
    pub l: IntegerMatrix,
    pub r: IntegerMatrix,
}

impl SnfResult {
    /// Checks `U·D·V = M`, `L·M·R = D`, `L·U = I`, `R·V = I` exactly.
    pub fn check(&self, m: &IntegerMatrix) -> Result<bool> {
        let udv = self.u.mul(&self.diagonal)?.mul(&self.v)?;
        let lmr = self.l.mul(m)?.mul(&self.r)?;
        let lu = self.l.mul(&self.u)?;
        let rv = self.r.mul(&self.v)?;
        Ok(&udv == m
            && lmr == self.diagonal
            && lu == IntegerMatrix::identity(m.rows())
            && rv == IntegerMatrix::identity(m.cols()))
    }
}

struct SnfWork {
    a: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
    // L, U stored by rows of L and columns of U; R, V by columns of R and rows of V
    l_rows: Option<Vec<Vec<BigInt>>>,
    u_cols: Option<Vec<Vec<BigInt>>>,
    r_cols: Option<Vec<Vec<BigInt>>>,
    v_rows: Option<Vec<Vec<BigInt>>>,
}

fn unit_vectors(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|j| {
            let mut e = vec![BigInt::zero(); n];
            e[j] = BigInt::one();
            e
        })
        .collect()
}

impl SnfWork {
    fn new(m: &IntegerMatrix, track_rows: bool, track_cols: bool) -> Self {
        SnfWork {
            a: (0..m.rows).map(|r| m.row(r).to_vec()).collect(),
            rows: m.rows,
            cols: m.cols,
            l_rows: track_rows.then(|| unit_vectors(m.rows)),
            u_cols: track_rows.then(|| unit_vectors(m.rows)),
            r_cols: track_cols.then(|| unit_vectors(m.cols)),
            v_rows: track_cols.then(|| unit_vectors(m.cols)),
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let (Some(l), Some(u)) = (self.l_rows.as_mut(), self.u_cols.as_mut()) {
            l.swap(i, j);
            u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in &mut self.a {
            row.swap(i, j);
        }
        if let (Some(r), Some(v)) = (self.r_cols.as_mut(), self.v_rows.as_mut()) {
            r.swap(i, j);
            v.swap(i, j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -std::mem::take(x);
        }
        if let (Some(l), Some(u)) = (self.l_rows.as_mut(), self.u_cols.as_mut()) {
            for x in l[i].iter_mut().chain(u[i].iter_mut()) {
                *x = -std::mem::take(x);
            }
        }
    }

    /// `row_i -= q·row_j`.
    fn sub_row(&mut self, i: usize, j: usize, q: &BigInt) {
        let (src, dst) = pair_mut(&mut self.a, j, i);
        axpy(dst, src, q);
        if let (Some(l), Some(u)) = (self.l_rows.as_mut(), self.u_cols.as_mut()) {
            let (src, dst) = pair_mut(l, j, i);
            axpy(dst, src, q);
            // U ← U·E⁻¹ with E⁻¹ = I + q e_i e_jᵀ: column j of U gains q·column i
            let (ui, uj) = pair_mut(u, i, j);
            axpy(uj, ui, &-q);
        }
    }

    /// `col_i -= q·col_j`.
    fn sub_col(&mut self, i: usize, j: usize, q: &BigInt) {
        for row in &mut self.a {
            if !row[j].is_zero() {
                let d = q * &row[j];
                row[i] -= d;
            }
        }
        if let (Some(r), Some(v)) = (self.r_cols.as_mut(), self.v_rows.as_mut()) {
            let (src, dst) = pair_mut(r, j, i);
            axpy(dst, src, q);
            // V ← F⁻¹·V with F⁻¹ = I + q e_j e_iᵀ: row j of V gains q·row i
            let (vi, vj) = pair_mut(v, i, j);
            axpy(vj, vi, &-q);
        }
    }

    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..self.rows {
            for c in t..self.cols {
                let x = &self.a[r][c];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(br, bc)| x.magnitude() < self.a[br][bc].magnitude()) {
                    best = Some((r, c));
                    if x.magnitude().is_one() {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn run(&mut self) -> Vec<BigInt> {
        let mut factors = Vec::new();
        let limit = self.rows.min(self.cols);
        let mut t = 0;
        while t < limit {
            let Some((pr, pc)) = self.min_entry(t) else {
                break;
            };
            self.swap_rows(t, pr);
            self.swap_cols(t, pc);
            loop {
                let mut clean = true;
                for i in t + 1..self.rows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = &self.a[i][t] / &self.a[t][t];
                    self.sub_row(i, t, &q);
                    if !self.a[i][t].is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..self.cols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = &self.a[t][j] / &self.a[t][t];
                    self.sub_col(j, t, &q);
                    if !self.a[t][j].is_zero() {
                        clean = false;
                    }
                }
                if clean {
                    // the pivot must divide the rest of the block
                    let offender = (t + 1..self.rows).find(|&i| {
                        (t + 1..self.cols).any(|j| !(&self.a[i][j] % &self.a[t][t]).is_zero())
                    });
                    match offender {
                        None => break,
                        Some(i) => {
                            // row_t += row_i brings a non-multiple into row t
                            self.sub_row(t, i, &BigInt::from(-1));
                            continue;
                        }
                    }
                }
                // move the smallest remaining entry of row t / column t to the pivot
                let mut best = (t, t);
                for i in t + 1..self.rows {
                    if !self.a[i][t].is_zero()
                        && self.a[i][t].magnitude() < self.a[best.0][best.1].magnitude()
                    {
                        best = (i, t);
                    }
                }
                for j in t + 1..self.cols {
                    if !self.a[t][j].is_zero()
                        && self.a[t][j].magnitude() < self.a[best.0][best.1].magnitude()
                    {
                        best = (t, j);
                    }
                }
                self.swap_rows(t, best.0);
                self.swap_cols(t, best.1);
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            factors.push(self.a[t][t].clone());
            t += 1;
        }
        factors
    }
}

fn pair_mut<T>(v: &mut [T], src: usize, dst: usize) -> (&T, &mut T) {
    assert_ne!(src, dst);
    if src < dst {
        let (a, b) = v.split_at_mut(dst);
        (&a[src], &mut b[0])
    } else {
        let (a, b) = v.split_at_mut(src);
        (&b[0], &mut a[dst])
    }
}

/// Nonzero invariant factors of `m`, without transformation matrices.
pub fn invariant_factors(m: &IntegerMatrix) -> Vec<BigInt> {
    SnfWork::new(m, false, false).run()
}

/// Full Smith normal form with unimodular transformations.
pub fn smith_normal_form(m: &IntegerMatrix) -> SnfResult {
    let mut w = SnfWork::new(m, true, true);
    let factors = w.run();
    let mut diagonal = IntegerMatrix::zeros(m.rows, m.cols);
    for (i, d) in factors.iter().enumerate() {
        diagonal.set(i, i, d.clone());
    }
    let l_rows = w.l_rows.take().expect("tracked");
    let u_cols = w.u_cols.take().expect("tracked");
    let r_cols = w.r_cols.take().expect("tracked");
    let v_rows = w.v_rows.take().expect("tracked");
    SnfResult {
        rank: factors.len(),
        invariant_factors: factors,
        diagonal,
        u: IntegerMatrix::from_columns(m.rows, &u_cols).expect("square"),
        v: IntegerMatrix::from_rows(&v_rows).expect("square"),
        l: IntegerMatrix::from_rows(&l_rows).expect("square"),
        r: IntegerMatrix::from_columns(m.cols, &r_cols).expect("square"),
    }
}

/// Solves `A·X = B` over `ℤ` for `A` of full column rank.
pub fn solve_integral(a: &IntegerMatrix, b: &IntegerMatrix) -> Result<IntegerMatrix> {
    if a.rows != b.rows {
        return Err(Error::SizeMismatch {
            expected: a.rows,
            found: b.rows,
        });
    }
    let snf = smith_normal_form(a);
    let k = a.cols;
    if snf.rank != k {
        return Err(Error::Dimension(format!(
            "solve needs full column rank, got rank {} of {k}",
            snf.rank
        )));
    }
    let lb = snf.l.mul(b)?;
    let mut y = IntegerMatrix::zeros(k, b.cols);
    for r in 0..lb.rows {
        for c in 0..lb.cols {
            let x = lb.get(r, c);
            if r >= k {
                if !x.is_zero() {
                    return Err(Error::Dimension(
                        "right-hand side outside the column span".into(),
                    ));
                }
                continue;
            }
            let (q, rem) = x.div_rem(&snf.invariant_factors[r]);
            if !rem.is_zero() {
                return Err(Error::Dimension("no integral solution".into()));
            }
            y.set(r, c, q);
        }
    }
    snf.r.mul(&y)
}

/// Whether every column of `vectors` is an integer combination of the columns of `b`.
pub fn span_contains(b: &IntegerMatrix, vectors: &IntegerMatrix) -> Result<bool> {
    if b.rows != vectors.rows {
        return Err(Error::SizeMismatch {
            expected: b.rows,
            found: vectors.rows,
        });
    }
    let mut w = SnfWork::new(b, true, false);
    let factors = w.run();
    let l = IntegerMatrix::from_rows(&w.l_rows.take().expect("tracked")).expect("square");
    let y = l.mul(vectors)?;
    for r in 0..y.rows {
        for c in 0..y.cols {
            let x = y.get(r, c);
            let ok = match factors.get(r) {
                Some(d) => (x % d).is_zero(),
                None => x.is_zero(),
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A finitely generated abelian group `ℤ^r ⊕ ℤ/d_1 ⊕ … ⊕ ℤ/d_k` with `d_1 | … | d_k`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn new(free_rank: usize, torsion: &[u64]) -> Self {
        let mut torsion: Vec<BigInt> = torsion.iter().map(|&d| BigInt::from(d)).collect();
        torsion.sort();
        AbelianGroup { free_rank, torsion }
    }

    /// The cokernel `ℤ^generators / im(relations)` from the invariant factors of the relation matrix.
    pub fn cokernel(generators: usize, factors: &[BigInt]) -> Self {
        let mut torsion: Vec<BigInt> = factors.iter().filter(|d| !d.is_one()).cloned().collect();
        torsion.sort();
        AbelianGroup {
            free_rank: generators - factors.len(),
            torsion,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

impl fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_examples() {
        let a = m(&[vec![2, 4], vec![6, 8]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.invariant_factors, ints(&[2, 4]));
        assert!(snf.check(&a).unwrap());
        assert_eq!(
            invariant_factors(&IntegerMatrix::identity(3)),
            ints(&[1, 1, 1])
        );
        let z = IntegerMatrix::zeros(2, 3);
        let snf = smith_normal_form(&z);
        assert_eq!(snf.rank, 0);
        assert!(snf.check(&z).unwrap());
    }

    #[test]
    fn snf_enforces_divisibility() {
        // diag(2, 3) is equivalent to diag(1, 6)
        let a = m(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(invariant_factors(&a), ints(&[1, 6]));
        let a = m(&[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.invariant_factors, ints(&[2, 2, 60]));
        assert!(snf.check(&a).unwrap());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(
            m(&[vec![2, 4], vec![6, 8]]).determinant().unwrap(),
            BigInt::from(-8)
        );
        assert_eq!(
            m(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 5]])
                .determinant()
                .unwrap(),
            BigInt::from(-5)
        );
        assert!(m(&[vec![1, 2]]).determinant().is_err());
    }

    #[test]
    fn kernel_and_rank() {
        let a = m(&[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(a.rank(), 1);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).unwrap().is_zero());
        // the kernel basis extends to a unimodular matrix, so it is saturated
        let k = kernel_basis(&m(&[vec![2, 4]]));
        assert_eq!(k.column(0), ints(&[-2, 1]));
    }

    #[test]
    fn solve_examples() {
        let a = m(&[vec![2, 0], vec![0, 1], vec![0, 0]]);
        let b = m(&[vec![4], vec![3], vec![0]]);
        assert_eq!(solve_integral(&a, &b).unwrap(), m(&[vec![2], vec![3]]));
        assert!(solve_integral(&a, &m(&[vec![1], vec![0], vec![0]])).is_err());
        assert!(solve_integral(&a, &m(&[vec![0], vec![0], vec![1]])).is_err());
    }

    #[test]
    fn span_membership() {
        let b = m(&[vec![2, 0], vec![0, 3], vec![0, 0]]);
        assert!(span_contains(&b, &m(&[vec![4], vec![-3], vec![0]])).unwrap());
        assert!(!span_contains(&b, &m(&[vec![1], vec![0], vec![0]])).unwrap());
        assert!(!span_contains(&b, &m(&[vec![0], vec![0], vec![1]])).unwrap());
        let empty = IntegerMatrix::zeros(2, 0);
        assert!(span_contains(&empty, &IntegerMatrix::zeros(2, 1)).unwrap());
        assert!(!span_contains(&empty, &m(&[vec![0], vec![1]])).unwrap());
    }

    #[test]
    fn group_display() {
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
        assert_eq!(AbelianGroup::free(1).to_string(), "Z");
        assert_eq!(AbelianGroup::free(2).to_string(), "Z^2");
        assert_eq!(AbelianGroup::new(0, &[2]).to_string(), "Z/2");
        assert_eq!(AbelianGroup::new(1, &[2]).to_string(), "Z+Z/2");
    }

    #[test]
    fn matrix_json_round_trip() {
        let a = m(&[vec![1, -2], vec![30, 4]]);
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, r#"{"rows":2,"cols":2,"entries":["1","-2","30","4"]}"#);
        assert_eq!(serde_json::from_str::<IntegerMatrix>(&text).unwrap(), a);
        assert!(
            serde_json::from_str::<IntegerMatrix>(r#"{"rows":1,"cols":2,"entries":["1"]}"#)
                .is_err()
        );
    }
}
