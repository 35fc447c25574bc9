//! Dense exact matrix algebra over a [`FieldCtx`]: reduced row echelon
//! form, rank, kernel bases, products, and the conjugate transpose.
//!
//! Elimination is plain O(n³) Gaussian elimination with deterministic
//! pivoting (leftmost pivot column, topmost available row), so every
//! derived quantity — and therefore every report — is byte-reproducible.

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};

/// A rows×cols matrix over one field context, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    ctx: u32,
    data: Vec<u32>,
}

impl Matrix {
    /// Zero matrix of the given shape.
    pub fn zero(ctx: &FieldCtx, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            ctx: ctx.id(),
            data: vec![0; rows * cols],
        }
    }

    /// Identity matrix of size n.
    pub fn identity(ctx: &FieldCtx, n: usize) -> Matrix {
        let mut m = Matrix::zero(ctx, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Build from row-major elements.
    pub fn from_elems(
        ctx: &FieldCtx,
        rows: usize,
        cols: usize,
        elems: &[FieldElem],
    ) -> Result<Matrix> {
        if elems.len() != rows * cols {
            return Err(Error::DimensionMismatch);
        }
        let mut data = Vec::with_capacity(elems.len());
        for &x in elems {
            ctx.mul(x, ctx.one())?; // context check
            data.push(x.code());
        }
        Ok(Matrix {
            rows,
            cols,
            ctx: ctx.id(),
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        assert!(i < self.rows && j < self.cols);
        FieldElem {
            code: self.data[i * self.cols + j],
            ctx: self.ctx,
        }
    }

    pub fn set(&mut self, ctx: &FieldCtx, i: usize, j: usize, x: FieldElem) -> Result<()> {
        if ctx.id() != self.ctx {
            return Err(Error::FieldMismatch);
        }
        ctx.mul(x, ctx.one())?;
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = x.code();
        Ok(())
    }

    fn check_ctx(&self, ctx: &FieldCtx) -> Result<()> {
        if ctx.id() == self.ctx {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Reduced row echelon form; returns (rref, pivot columns, rank).
    pub fn rref(&self, ctx: &FieldCtx) -> Result<(Matrix, Vec<usize>, usize)> {
        self.check_ctx(ctx)?;
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..cols {
            // find the topmost nonzero entry at or below row `lead`
            let Some(pr) = (lead..rows).find(|&r| m.data[r * cols + col] != 0) else {
                continue;
            };
            m.data.swap_chunks(pr, lead, cols);
            // normalize the pivot row to leading 1
            let inv = ctx.inv_code(m.data[lead * cols + col]);
            if inv != 1 {
                for j in col..cols {
                    let v = m.data[lead * cols + j];
                    m.data[lead * cols + j] = ctx.mul_code(v, inv);
                }
            }
            // eliminate the column from every other row
            for r in 0..rows {
                if r == lead {
                    continue;
                }
                let factor = m.data[r * cols + col];
                if factor == 0 {
                    continue;
                }
                let neg_factor = ctx.neg_code(factor);
                for j in col..cols {
                    let piv = m.data[lead * cols + j];
                    if piv != 0 {
                        let add = ctx.mul_code(neg_factor, piv);
                        let v = m.data[r * cols + j];
                        m.data[r * cols + j] = ctx.add_code(v, add);
                    }
                }
            }
            pivots.push(col);
            lead += 1;
            if lead == rows {
                break;
            }
        }
        let rank = pivots.len();
        Ok((m, pivots, rank))
    }

    /// Rank via [`rref`](Self::rref).
    pub fn rank(&self, ctx: &FieldCtx) -> Result<usize> {
        Ok(self.rref(ctx)?.2)
    }

    /// A basis of `{x : M xᵀ = 0}` as the rows of a (cols−rank)×cols matrix,
    /// one basis vector per free column in ascending column order.
    pub fn kernel_basis(&self, ctx: &FieldCtx) -> Result<Matrix> {
        let (r, pivots, rank) = self.rref(ctx)?;
        let cols = self.cols;
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zero(ctx, cols - rank, cols);
        for (row, &fc) in free.iter().enumerate() {
            out.data[row * cols + fc] = 1;
            for (pi, &pc) in pivots.iter().enumerate() {
                let v = r.data[pi * cols + fc];
                out.data[row * cols + pc] = ctx.neg_code(v);
            }
        }
        Ok(out)
    }

    /// Conjugate transpose `M† = (m_{ji}^q)` over a quadratic extension.
    pub fn conj_transpose(&self, ctx: &FieldCtx) -> Result<Matrix> {
        self.check_ctx(ctx)?;
        let q = ctx.hermitian_q().ok_or(Error::NotQuadraticExtension)?;
        let mut out = Matrix::zero(ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = ctx.conj_code(self.data[i * self.cols + j], q);
            }
        }
        Ok(out)
    }

    /// Entry-wise conjugation (no transpose).
    pub fn conj(&self, ctx: &FieldCtx) -> Result<Matrix> {
        self.check_ctx(ctx)?;
        let q = ctx.hermitian_q().ok_or(Error::NotQuadraticExtension)?;
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = ctx.conj_code(*v, q);
        }
        Ok(out)
    }

    /// Plain transpose.
    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix {
            rows: self.cols,
            cols: self.rows,
            ctx: self.ctx,
            data: vec![0; self.data.len()],
        };
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        out
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize);
}

impl SwapChunks for Vec<u32> {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize) {
        if a == b {
            return;
        }
        for j in 0..width {
            self.swap(a * width + j, b * width + j);
        }
    }
}

/// Exact matrix product.
pub fn mat_mul(ctx: &FieldCtx, a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.check_ctx(ctx)?;
    b.check_ctx(ctx)?;
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch);
    }
    let mut out = Matrix::zero(ctx, a.rows, b.cols);
    for i in 0..a.rows {
        for t in 0..a.cols {
            let av = a.data[i * a.cols + t];
            if av == 0 {
                continue;
            }
            for j in 0..b.cols {
                let bv = b.data[t * b.cols + j];
                if bv != 0 {
                    let idx = i * b.cols + j;
                    out.data[idx] = ctx.add_code(out.data[idx], ctx.mul_code(av, bv));
                }
            }
        }
    }
    Ok(out)
}

/// Rank of the vertical stack of two matrices with equal column counts.
pub fn stack_rank(ctx: &FieldCtx, a: &Matrix, b: &Matrix) -> Result<usize> {
    a.check_ctx(ctx)?;
    b.check_ctx(ctx)?;
    if a.cols != b.cols && a.rows > 0 && b.rows > 0 {
        return Err(Error::DimensionMismatch);
    }
    let cols = if a.rows > 0 { a.cols } else { b.cols };
    let mut stacked = Matrix {
        rows: a.rows + b.rows,
        cols,
        ctx: a.ctx,
        data: Vec::with_capacity((a.rows + b.rows) * cols),
    };
    stacked.data.extend_from_slice(&a.data);
    stacked.data.extend_from_slice(&b.data);
    stacked.rank(ctx)
}
