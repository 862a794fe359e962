//! Dense exact matrices over `ℚ(i)` and fraction-free Gaussian elimination.
//!
//! Everything downstream (solution spaces, rank certificates, basis
//! decompositions) reduces to three primitives implemented here:
//!
//! * `rank` — number of pivots of the echelon form,
//! * `kernel_basis` — an exact basis of the right null space,
//! * repeated `solve` against one factorization.
//!
//! Elimination is Bareiss-style fraction-free: rows are first cleared to
//! Gaussian-integer form, and every elimination step divides out the previous
//! pivot, so intermediate entries are (Gaussian-integer) minors of the input
//! rather than exploding products. Pivoting is deterministic — the first
//! nonzero entry of the current column, lowest row index first — which keeps
//! every derived basis reproducible byte for byte.

use crate::scalar::Scalar;
use crate::{Error, Result};
use num::BigInt;
use std::fmt;

/// A dense `rows × cols` matrix of [`Scalar`]s, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Builds from explicit rows. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Builds from explicit columns (each of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    m.set(r, c, v.clone());
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Matrix product. Errors when the inner dimensions disagree.
    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    let cell = &mut out.data[i * other.cols + j];
                    *cell += &prod;
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).expect("matrix dimension mismatch")
    }

    /// Matrix–vector product. Panics if the length disagrees.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![Scalar::zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = Scalar::zero();
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    acc += &(a * &v[j]);
                }
            }
            out[i] = acc;
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= c;
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Exact rank via fraction-free elimination.
    pub fn rank(&self) -> usize {
        Echelon::reduce(self.clone(), false).pivots.len()
    }

    /// Exact basis of `{v : A·v = 0}`.
    ///
    /// One vector per non-pivot column, in ascending column order: the vector
    /// for free column `f` has `v[f] = 1`, all other free coordinates `0`, and
    /// pivot coordinates determined by back-substitution. The result is
    /// deterministic and satisfies `A·v = 0` exactly.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let ech = Echelon::reduce(self.clone(), false);
        ech.kernel_basis()
    }

    /// Factorization usable for repeated exact solves of `A·x = b`.
    pub fn solver(&self) -> Echelon {
        Echelon::reduce(self.clone(), true)
    }

    /// One-shot solve; returns `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        self.solver().solve(rhs)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// One recorded row operation, replayable on a right-hand side.
#[derive(Clone, Debug)]
enum RowOp {
    /// `row ← factor · row` (denominator clearing).
    Scale { row: usize, factor: Scalar },
    Swap(usize, usize),
    /// `row[target] ← (pivot_value · row[target] − factor · row[pivot_row]) / divisor`.
    Axpy {
        target: usize,
        pivot_row: usize,
        pivot_value: Scalar,
        factor: Scalar,
        divisor: Scalar,
    },
}

/// Row-echelon form produced by fraction-free elimination, together with the
/// pivot layout and (optionally) the operation log needed to replay the
/// reduction on new right-hand sides.
pub struct Echelon {
    matrix: Matrix,
    pivots: Vec<usize>,
    ops: Vec<RowOp>,
}

impl Echelon {
    fn reduce(mut m: Matrix, record_ops: bool) -> Echelon {
        let mut ops = Vec::new();
        // Clear each row to Gaussian-integer form so Bareiss divisions below
        // stay exact and intermediate values are bounded minors.
        for r in 0..m.rows {
            let mut lcm = BigInt::from(1);
            for c in 0..m.cols {
                let entry = m.get(r, c);
                if !entry.is_zero() {
                    use num::Integer;
                    lcm = lcm.lcm(&entry.denominator_lcm());
                }
            }
            if lcm != BigInt::from(1) {
                for c in 0..m.cols {
                    let idx = r * m.cols + c;
                    m.data[idx].scale_int(&lcm);
                }
                if record_ops {
                    ops.push(RowOp::Scale {
                        row: r,
                        factor: Scalar::from_rational(num::BigRational::from_integer(lcm)),
                    });
                }
            }
        }

        let mut pivots = Vec::new();
        let mut prev = Scalar::one();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            // First nonzero entry in this column at or below pivot_row.
            let Some(p) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != pivot_row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, pivot_row * m.cols + c);
                }
                if record_ops {
                    ops.push(RowOp::Swap(p, pivot_row));
                }
            }
            let pivot_value = m.get(pivot_row, col).clone();
            for i in pivot_row + 1..m.rows {
                let factor = m.get(i, col).clone();
                if factor.is_zero() {
                    continue;
                }
                // Bareiss step: row_i ← (pivot·row_i − factor·row_pivot)/prev.
                // Entries left of `col` in row i are already zero.
                let inv_prev = prev.inv();
                for c in col..m.cols {
                    let a = &pivot_value * m.get(i, c);
                    let b = &factor * m.get(pivot_row, c);
                    let val = &(&a - &b) * &inv_prev;
                    m.set(i, c, val);
                }
                if record_ops {
                    ops.push(RowOp::Axpy {
                        target: i,
                        pivot_row,
                        pivot_value: pivot_value.clone(),
                        factor,
                        divisor: prev.clone(),
                    });
                }
            }
            prev = pivot_value;
            pivots.push(col);
            pivot_row += 1;
        }

        Echelon { matrix: m, pivots, ops }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Column indices of the pivots, ascending.
    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    fn back_substitute(&self, rhs_reduced: &[Scalar]) -> Vec<Scalar> {
        let m = &self.matrix;
        let mut x = vec![Scalar::zero(); m.cols];
        for t in (0..self.pivots.len()).rev() {
            let c = self.pivots[t];
            let mut acc = rhs_reduced[t].clone();
            for j in c + 1..m.cols {
                let e = m.get(t, j);
                if !e.is_zero() && !x[j].is_zero() {
                    acc -= &(e * &x[j]);
                }
            }
            x[c] = &acc / m.get(t, c);
        }
        x
    }

    /// Exact kernel basis (see [`Matrix::kernel_basis`]).
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let m = &self.matrix;
        let pivot_set: std::collections::BTreeSet<usize> = self.pivots.iter().copied().collect();
        let mut basis = Vec::with_capacity(m.cols - self.pivots.len());
        for f in 0..m.cols {
            if pivot_set.contains(&f) {
                continue;
            }
            let mut v = vec![Scalar::zero(); m.cols];
            v[f] = Scalar::one();
            for t in (0..self.pivots.len()).rev() {
                let c = self.pivots[t];
                if c > f {
                    continue; // row only involves columns ≥ c, all still zero
                }
                let mut acc = Scalar::zero();
                for j in c + 1..m.cols {
                    let e = m.get(t, j);
                    if !e.is_zero() && !v[j].is_zero() {
                        acc += &(e * &v[j]);
                    }
                }
                v[c] = &(-&acc) / m.get(t, c);
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `A·x = rhs` against the recorded reduction; `None` when
    /// inconsistent. Free coordinates of the solution are set to zero.
    /// Requires the factorization to have been built with [`Matrix::solver`].
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        let m = &self.matrix;
        assert_eq!(rhs.len(), m.rows, "rhs length mismatch");
        let mut b = rhs.to_vec();
        for op in &self.ops {
            match op {
                RowOp::Scale { row, factor } => {
                    b[*row] *= factor;
                }
                RowOp::Swap(i, j) => b.swap(*i, *j),
                RowOp::Axpy {
                    target,
                    pivot_row,
                    pivot_value,
                    factor,
                    divisor,
                } => {
                    let t = &(&(pivot_value * &b[*target]) - &(factor * &b[*pivot_row]))
                        / divisor;
                    b[*target] = t;
                }
            }
        }
        // Rows below the pivot block are entirely zero; the right-hand side
        // must vanish there or the system is inconsistent.
        for row in b.iter().skip(self.pivots.len()) {
            if !row.is_zero() {
                return None;
            }
        }
        Some(self.back_substitute(&b[..self.pivots.len()]))
    }
}

/// A sparse row: strictly ascending column indices paired with nonzero
/// entries.
pub type SparseRow = Vec<(usize, Scalar)>;

/// One recorded sparse row operation, replayable on a right-hand side
/// indexed by original row id.
#[derive(Clone, Debug)]
enum SparseOp {
    /// `b[row] ← factor · b[row]` (pivot normalization).
    Scale { row: usize, factor: Scalar },
    /// `b[target] ← b[target] − factor · b[source]`.
    Axpy {
        target: usize,
        source: usize,
        factor: Scalar,
    },
}

/// Echelon form of a sparse matrix over `ℚ(i)`, built by ordinary rational
/// Gaussian elimination that only ever touches nonzero entries.
///
/// Columns are processed in ascending order exactly as in the dense
/// [`Echelon`], so the pivot-column set — and therefore the canonical
/// [`kernel_basis`](Self::kernel_basis) and the free-coordinates-zero
/// particular solution of [`solve`](Self::solve) — coincide with the dense
/// path entry for entry. This is the workhorse for the large, very sparse
/// operator matrices arising from polynomial solution spaces.
pub struct SparseEchelon {
    nrows: usize,
    cols: usize,
    /// Pivot rows in pivot order; each row's first entry is its pivot column
    /// with coefficient exactly 1.
    rows: Vec<SparseRow>,
    /// Pivot column of `rows[t]` (strictly increasing).
    pivots: Vec<usize>,
    /// Original row ids of the pivot rows, aligned with `rows`.
    pivot_ids: Vec<usize>,
    ops: Vec<SparseOp>,
}

impl SparseEchelon {
    /// Reduces a matrix given as dense columns (each of length `nrows`).
    pub fn from_columns(nrows: usize, columns: &[Vec<Scalar>], record_ops: bool) -> Self {
        let mut rows: Vec<SparseRow> = vec![Vec::new(); nrows];
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), nrows, "column length mismatch");
            for (r, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    rows[r].push((c, v.clone()));
                }
            }
        }
        Self::from_sparse_rows(columns.len(), rows, record_ops)
    }

    /// Reduces a matrix given as sparse rows (ascending column order).
    pub fn from_sparse_rows(cols: usize, rows: Vec<SparseRow>, record_ops: bool) -> Self {
        let nrows = rows.len();
        let mut current: Vec<SparseRow> = rows;
        let mut ops = Vec::new();
        // Active rows bucketed by leading column. An active row always has
        // its leading column ≥ every processed column, so "nonzero in the
        // current column" ⟺ "leading column = current column".
        let mut buckets: std::collections::BTreeMap<usize, Vec<usize>> =
            std::collections::BTreeMap::new();
        for (id, row) in current.iter().enumerate() {
            if let Some(&(lead, _)) = row.first() {
                buckets.entry(lead).or_default().push(id);
            }
        }
        let mut pivots = Vec::new();
        let mut pivot_ids = Vec::new();
        let mut echelon_rows: Vec<SparseRow> = Vec::new();
        while let Some((&col, _)) = buckets.iter().next() {
            let mut ids = buckets.remove(&col).expect("bucket exists");
            ids.sort_unstable();
            // Deterministic pivot: lowest original row id.
            let pivot_id = ids[0];
            let mut pivot_row = std::mem::take(&mut current[pivot_id]);
            let pivot_value = pivot_row[0].1.clone();
            if !pivot_value.is_one() {
                let inv = pivot_value.inv();
                for (_, v) in pivot_row.iter_mut() {
                    *v *= &inv;
                }
                if record_ops {
                    ops.push(SparseOp::Scale {
                        row: pivot_id,
                        factor: inv,
                    });
                }
            }
            for &id in &ids[1..] {
                let row = std::mem::take(&mut current[id]);
                debug_assert_eq!(row[0].0, col);
                let factor = row[0].1.clone();
                let reduced = sparse_axpy(&row, &pivot_row, &factor);
                if record_ops {
                    ops.push(SparseOp::Axpy {
                        target: id,
                        source: pivot_id,
                        factor,
                    });
                }
                if let Some(&(lead, _)) = reduced.first() {
                    buckets.entry(lead).or_default().push(id);
                }
                current[id] = reduced;
            }
            pivots.push(col);
            pivot_ids.push(pivot_id);
            echelon_rows.push(pivot_row);
        }
        SparseEchelon {
            nrows,
            cols,
            rows: echelon_rows,
            pivots,
            pivot_ids,
            ops,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Pivot column indices, ascending.
    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Exact kernel basis with the same canonical form as
    /// [`Matrix::kernel_basis`]: one vector per free column, free coordinate
    /// set to 1, other free coordinates 0.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let pivot_set: std::collections::BTreeSet<usize> = self.pivots.iter().copied().collect();
        let mut basis = Vec::with_capacity(self.cols - self.pivots.len());
        for f in 0..self.cols {
            if pivot_set.contains(&f) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for t in (0..self.pivots.len()).rev() {
                let c = self.pivots[t];
                if c > f {
                    continue;
                }
                let mut acc = Scalar::zero();
                for (j, coeff) in self.rows[t].iter().skip(1) {
                    if !v[*j].is_zero() {
                        acc += &(coeff * &v[*j]);
                    }
                }
                if !acc.is_zero() {
                    v[c] = -&acc;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `A·x = rhs`; `None` when inconsistent. Free coordinates are
    /// zero. Requires the reduction to have been built with `record_ops`.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.nrows, "rhs length mismatch");
        let mut b = rhs.to_vec();
        for op in &self.ops {
            match op {
                SparseOp::Scale { row, factor } => b[*row] *= factor,
                SparseOp::Axpy {
                    target,
                    source,
                    factor,
                } => {
                    if !factor.is_zero() && !b[*source].is_zero() {
                        let delta = factor * &b[*source];
                        b[*target] -= &delta;
                    }
                }
            }
        }
        // Every non-pivot row reduced to zero; its right-hand side must too.
        let pivot_id_set: std::collections::BTreeSet<usize> =
            self.pivot_ids.iter().copied().collect();
        for (id, value) in b.iter().enumerate() {
            if !pivot_id_set.contains(&id) && !value.is_zero() {
                return None;
            }
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for t in (0..self.pivots.len()).rev() {
            let c = self.pivots[t];
            let mut acc = b[self.pivot_ids[t]].clone();
            for (j, coeff) in self.rows[t].iter().skip(1) {
                if !x[*j].is_zero() {
                    acc -= &(coeff * &x[*j]);
                }
            }
            x[c] = acc;
        }
        Some(x)
    }
}

/// `target − factor·source` for sorted sparse rows.
fn sparse_axpy(target: &SparseRow, source: &SparseRow, factor: &Scalar) -> SparseRow {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let mut it_t = target.iter().peekable();
    let mut it_s = source.iter().peekable();
    loop {
        match (it_t.peek(), it_s.peek()) {
            (Some(&&(ct, _)), Some(&&(cs, _))) if ct == cs => {
                let (_, vt) = it_t.next().unwrap();
                let (_, vs) = it_s.next().unwrap();
                let v = vt - &(factor * vs);
                if !v.is_zero() {
                    out.push((ct, v));
                }
            }
            (Some(&&(ct, _)), Some(&&(cs, _))) if ct < cs => {
                let (_, vt) = it_t.next().unwrap();
                out.push((ct, vt.clone()));
            }
            (Some(_), Some(&&(cs, _))) => {
                let (_, vs) = it_s.next().unwrap();
                out.push((cs, -&(factor * vs)));
            }
            (Some(_), None) => {
                let (ct, vt) = it_t.next().unwrap();
                out.push((*ct, vt.clone()));
            }
            (None, Some(_)) => {
                let (cs, vs) = it_s.next().unwrap();
                out.push((*cs, -&(factor * vs)));
            }
            (None, None) => break,
        }
    }
    out
}
