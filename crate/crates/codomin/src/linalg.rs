//! Dense exact linear algebra: reduced row-echelon forms, kernels, images,
//! solving, canonical subspaces with lattice operations, and Kronecker
//! products.
//!
//! The flat index of `e_i (x) e_j` in `k^a (x) k^b` is `i*b + j` throughout;
//! every tensor-leg convention in the crate is derived from this one rule.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::{Field, Scalar, Value};

/// Dense matrix over an exact field, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Value>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "ExactMatrix {}x{} over {}",
            self.rows, self.cols, self.field
        )?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.field.value_string(self.at(i, j)))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl ExactMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Value>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        ExactMatrix {
            field: field.clone(),
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Value,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Column vector from entries.
    pub fn column(field: &Field, entries: Vec<Value>) -> Self {
        let rows = entries.len();
        ExactMatrix {
            field: field.clone(),
            rows,
            cols: 1,
            data: entries,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Value {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Value) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    pub fn scalar_at(&self, i: usize, j: usize) -> Scalar {
        self.field.scalar(self.at(i, j).clone())
    }

    pub fn row(&self, i: usize) -> Vec<Value> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Value> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| self.field.is_zero(v))
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(&self.field, self.cols, self.rows, |i, j| {
            self.at(j, i).clone()
        })
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        assert_eq!(self.field, other.field, "field mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        ExactMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        assert_eq!(self.field, other.field, "field mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        ExactMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &Value) -> ExactMatrix {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        ExactMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn matmul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        let f = &self.field;
        let mut out = ExactMatrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let t = f.mul(a, b);
                    let cur = out.at(i, j);
                    out.set(i, j, f.add(cur, &t));
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Value]) -> Vec<Value> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate() {
                let a = self.at(i, j);
                if !f.is_zero(a) {
                    *slot = f.add(slot, &f.mul(a, x));
                }
            }
        }
        out
    }

    /// Kronecker product with the crate-wide flat index convention:
    /// `(A (x) B)[(i*rB + k), (j*cB + l)] = A[i,j] * B[k,l]`.
    pub fn kron(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.field, other.field, "field mismatch");
        let f = &self.field;
        let mut out = ExactMatrix::zeros(f, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.at(k, l);
                        if f.is_zero(b) {
                            continue;
                        }
                        out.set(i * other.rows + k, j * other.cols + l, f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.cols, "column mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        ExactMatrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !f.is_zero(self.at(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.at(r, c)).expect("nonzero pivot");
            if !f.is_one(self.at(r, c)) {
                for j in c..self.cols {
                    let v = f.mul(self.at(r, j), &inv);
                    self.set(r, j, v);
                }
            }
            for i in 0..self.rows {
                if i == r || f.is_zero(self.at(i, c)) {
                    continue;
                }
                let factor = self.at(i, c).clone();
                for j in c..self.cols {
                    let t = f.mul(&factor, self.at(r, j));
                    let v = f.sub(self.at(i, j), &t);
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Kernel, image (column space) and rank.
    pub fn kernel_image_rank(&self) -> (Subspace, Subspace, usize) {
        let kernel = self.kernel();
        let image = Subspace::from_matrix_rows(&self.transpose());
        let rank = image.dim();
        debug_assert_eq!(rank + kernel.dim(), self.cols);
        (kernel, image, rank)
    }

    /// Null space as a canonical subspace of `k^cols`.
    pub fn kernel(&self) -> Subspace {
        let f = &self.field;
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut rows = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![f.zero(); self.cols];
            vec[free] = f.one();
            for (c, slot) in pivot_set.iter().enumerate() {
                if let Some(r) = slot {
                    vec[c] = f.neg(m.at(*r, free));
                }
            }
            rows.push(vec);
        }
        Subspace::from_rows(f, self.cols, rows)
    }

    /// One solution of `M x = b` together with the kernel, or `None`.
    pub fn solve(&self, b: &[Value]) -> Option<LinearSolution> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let f = &self.field;
        let mut aug = ExactMatrix::zeros(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref_in_place();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(r, self.cols).clone();
        }
        Some(LinearSolution {
            particular: x,
            kernel: self.kernel(),
        })
    }

    /// Solves `M S = I` column-by-column; `None` when `M` is not surjective.
    pub fn right_inverse(&self) -> Option<ExactMatrix> {
        let f = &self.field;
        let mut out = ExactMatrix::zeros(f, self.cols, self.rows);
        for j in 0..self.rows {
            let mut e = vec![f.zero(); self.rows];
            e[j] = f.one();
            let sol = self.solve(&e)?;
            for i in 0..self.cols {
                out.set(i, j, sol.particular[i].clone());
            }
        }
        Some(out)
    }

    /// Entry-wise embedding along a simple extension of the base field.
    pub fn embed(&self, ext: &Field) -> Result<ExactMatrix> {
        match ext.extension_parts() {
            Some((base, _)) if *base == self.field => Ok(ExactMatrix {
                field: ext.clone(),
                rows: self.rows,
                cols: self.cols,
                data: self.data.iter().map(|v| ext.embed(v)).collect(),
            }),
            _ => Err(Error::FieldMismatch(
                self.field.to_string(),
                ext.to_string(),
            )),
        }
    }
}

/// Solution of a linear system: one particular solution plus the kernel.
#[derive(Debug, Clone)]
pub struct LinearSolution {
    pub particular: Vec<Value>,
    pub kernel: Subspace,
}

/// The flip `tau: k^m (x) k^n -> k^n (x) k^m`, `e_i (x) e_j -> e_j (x) e_i`,
/// as a permutation matrix on flat coordinates.
pub fn flip(field: &Field, m: usize, n: usize) -> ExactMatrix {
    let mut out = ExactMatrix::zeros(field, m * n, m * n);
    for i in 0..m {
        for j in 0..n {
            out.set(j * m + i, i * n + j, field.one());
        }
    }
    out
}

/// Subspace of `k^ambient` in canonical form: basis rows in RREF with
/// strictly increasing pivots. Equal subspaces have identical bases.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: ExactMatrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace dim {} of k^{}: {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: ExactMatrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: ExactMatrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_rows(field: &Field, ambient: usize, rows: Vec<Vec<Value>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ambient, "row length mismatch");
        }
        let mut m = if rows.is_empty() {
            ExactMatrix::zeros(field, 0, ambient)
        } else {
            ExactMatrix::from_rows(field, rows)
        };
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        let mut basis = ExactMatrix::zeros(field, rank, ambient);
        for i in 0..rank {
            for j in 0..ambient {
                basis.set(i, j, m.at(i, j).clone());
            }
        }
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    /// Row space of a matrix.
    pub fn from_matrix_rows(m: &ExactMatrix) -> Self {
        let rows = (0..m.rows()).map(|i| m.row(i)).collect();
        Subspace::from_rows(m.field(), m.cols(), rows)
    }

    /// Column space of a matrix.
    pub fn from_matrix_cols(m: &ExactMatrix) -> Self {
        Subspace::from_matrix_rows(&m.transpose())
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_rows(&self) -> Vec<Vec<Value>> {
        (0..self.dim()).map(|i| self.basis.row(i)).collect()
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(
                self.field().to_string(),
                other.field().to_string(),
            ));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Ok(Subspace::from_rows(self.field(), self.ambient, rows))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let f = self.field();
        let (u, w) = (self.dim(), other.dim());
        if u == 0 || w == 0 {
            return Ok(Subspace::zero(f, self.ambient));
        }
        // Solve A^T x = B^T y; intersection points are A^T x.
        let mut m = ExactMatrix::zeros(f, self.ambient, u + w);
        for i in 0..self.ambient {
            for j in 0..u {
                m.set(i, j, self.basis.at(j, i).clone());
            }
            for j in 0..w {
                m.set(i, u + j, f.neg(other.basis.at(j, i)));
            }
        }
        let ker = m.kernel();
        let mut rows = Vec::new();
        for k in 0..ker.dim() {
            let coeffs = ker.basis.row(k);
            let mut point = vec![f.zero(); self.ambient];
            for j in 0..u {
                if f.is_zero(&coeffs[j]) {
                    continue;
                }
                for (c, slot) in point.iter_mut().enumerate() {
                    let t = f.mul(&coeffs[j], self.basis.at(j, c));
                    *slot = f.add(slot, &t);
                }
            }
            rows.push(point);
        }
        Ok(Subspace::from_rows(f, self.ambient, rows))
    }

    /// Subset test: does `self` contain `other`?
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok((0..other.dim()).all(|i| self.contains_vector(&other.basis.row(i))))
    }

    pub fn contains_vector(&self, v: &[Value]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Value]) -> Option<Vec<Value>> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field();
        let coords: Vec<Value> = self.pivots.iter().map(|&c| v[c].clone()).collect();
        // Verify the pivot coordinates reproduce v.
        let mut rest = v.to_vec();
        for (r, coef) in coords.iter().enumerate() {
            if f.is_zero(coef) {
                continue;
            }
            for (c, slot) in rest.iter_mut().enumerate() {
                let t = f.mul(coef, self.basis.at(r, c));
                *slot = f.sub(slot, &t);
            }
        }
        if rest.iter().all(|x| f.is_zero(x)) {
            Some(coords)
        } else {
            None
        }
    }

    /// Reduces `v` modulo the subspace: subtracts the pivot components so the
    /// result is supported away from pivot columns and represents `v`'s class.
    pub fn reduce_vector(&self, v: &[Value]) -> Vec<Value> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field();
        let mut rest = v.to_vec();
        for (r, &c) in self.pivots.iter().enumerate() {
            let coef = rest[c].clone();
            if f.is_zero(&coef) {
                continue;
            }
            for (j, slot) in rest.iter_mut().enumerate() {
                let t = f.mul(&coef, self.basis.at(r, j));
                *slot = f.sub(slot, &t);
            }
        }
        rest
    }

    /// Quotient of the ambient space by this subspace: a projection onto the
    /// complement spanned by the non-pivot standard basis vectors, and a
    /// section with `projection * section = identity`.
    pub fn quotient_maps(&self) -> (ExactMatrix, ExactMatrix) {
        let f = self.field();
        let free: Vec<usize> = (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect();
        let q = free.len();
        let mut projection = ExactMatrix::zeros(f, q, self.ambient);
        for e in 0..self.ambient {
            let mut v = vec![f.zero(); self.ambient];
            v[e] = f.one();
            let reduced = self.reduce_vector(&v);
            for (row, &c) in free.iter().enumerate() {
                projection.set(row, e, reduced[c].clone());
            }
        }
        let mut section = ExactMatrix::zeros(f, self.ambient, q);
        for (row, &c) in free.iter().enumerate() {
            section.set(c, row, f.one());
        }
        (projection, section)
    }

    /// Entry-wise embedding along a simple extension; RREF form is preserved.
    pub fn embed(&self, ext: &Field) -> Result<Subspace> {
        let basis = self.basis.embed(ext)?;
        Ok(Subspace {
            ambient: self.ambient,
            basis,
            pivots: self.pivots.clone(),
        })
    }
}
