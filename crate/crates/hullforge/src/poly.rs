//! Univariate polynomials over a [`FieldCtx`]: evaluation, products of
//! linear factors, coefficient access, and Lagrange interpolation.
//!
//! Coefficients are stored lowest degree first with the invariant that the
//! highest-index coefficient is nonzero; the zero polynomial is the empty
//! vector and its degree is `None` (a sentinel, never an integer).

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};

/// A polynomial over one field context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<FieldElem>,
}

impl Poly {
    /// The zero polynomial.
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    /// Build from coefficients (lowest degree first); trailing zeros trimmed.
    pub fn new(ctx: &FieldCtx, coeffs: &[FieldElem]) -> Result<Poly> {
        let mut c = coeffs.to_vec();
        for &x in &c {
            ctx.mul(x, ctx.one())?; // context check
        }
        while c.last().map(|x| x.code()) == Some(0) {
            c.pop();
        }
        Ok(Poly { coeffs: c })
    }

    /// The constant polynomial c.
    pub fn constant(c: FieldElem) -> Poly {
        if c.code() == 0 {
            Poly::zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, ctx: &FieldCtx, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or_else(|| ctx.zero())
    }

    /// All coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Horner evaluation at a point.
    pub fn eval(&self, ctx: &FieldCtx, a: FieldElem) -> Result<FieldElem> {
        let mut acc = ctx.zero();
        for &c in self.coeffs.iter().rev() {
            acc = ctx.add(ctx.mul(acc, a)?, c)?;
        }
        Ok(acc)
    }

    pub fn add(&self, ctx: &FieldCtx, other: &Poly) -> Result<Poly> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(ctx.add(self.coeff(ctx, i), other.coeff(ctx, i))?);
        }
        Poly::new(ctx, &out)
    }

    pub fn scale(&self, ctx: &FieldCtx, c: FieldElem) -> Result<Poly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &x in &self.coeffs {
            out.push(ctx.mul(x, c)?);
        }
        Poly::new(ctx, &out)
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &Poly) -> Result<Poly> {
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero());
        }
        let mut out = vec![ctx.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.code() == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b)?)?;
            }
        }
        Poly::new(ctx, &out)
    }

    /// Coefficient-wise conjugation `cᵢ ↦ cᵢ^q` over a quadratic extension.
    /// Satisfies `eval(conj(f), a^q) = eval(f, a)^q`.
    pub fn frobenius_poly(&self, ctx: &FieldCtx) -> Result<Poly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            out.push(ctx.frobenius_q(c)?);
        }
        Poly::new(ctx, &out)
    }
}

/// `∏ (x − r)` over the given roots; the empty product is the constant 1.
pub fn product_linear(ctx: &FieldCtx, roots: &[FieldElem]) -> Result<Poly> {
    let mut acc = Poly::constant(ctx.one());
    for &r in roots {
        let factor = Poly::new(ctx, &[ctx.neg(r)?, ctx.one()])?;
        acc = acc.mul(ctx, &factor)?;
    }
    Ok(acc)
}

/// The unique polynomial of degree < points.len() through the given
/// (x, y) points (x-values pairwise distinct), by Lagrange interpolation.
pub fn interpolate(ctx: &FieldCtx, points: &[(FieldElem, FieldElem)]) -> Result<Poly> {
    let n = points.len();
    let mut acc = Poly::zero();
    let xs: Vec<FieldElem> = points.iter().map(|&(x, _)| x).collect();
    for i in 0..n {
        if points[i].1.code() == 0 {
            continue;
        }
        // basis_i = ∏_{j≠i} (x − x_j) / (x_i − x_j)
        let others: Vec<FieldElem> = xs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &x)| x)
            .collect();
        let numer = product_linear(ctx, &others)?;
        let mut denom = ctx.one();
        for &xj in &others {
            let d = ctx.sub(xs[i], xj)?;
            if d.code() == 0 {
                return Err(Error::DuplicateLocators);
            }
            denom = ctx.mul(denom, d)?;
        }
        let term = numer.scale(ctx, ctx.mul(points[i].1, ctx.inv(denom)?)?)?;
        acc = acc.add(ctx, &term)?;
    }
    Ok(acc)
}
