//! (Extended) generalized Reed–Solomon codes: generator and parity-check
//! matrices, Euclidean/Hermitian duals and hulls, the per-locator constants
//! `uᵢ`, exhaustive minimum-distance verification, and the polynomial
//! dual-membership oracle that cross-checks the linear-algebra route.
//!
//! A `GRS_k(a, v)` codeword is `(v₁f(a₁), …, v_nf(a_n))` for a message
//! polynomial `f` of degree < k; the extended variant appends the
//! coefficient `f_{k−1}` as an extra coordinate.

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};
use crate::linalg::{mat_mul, stack_rank, Matrix};
use crate::poly::{interpolate, Poly};

/// Which bilinear/sesquilinear form duals and hulls are taken under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerProduct {
    /// `⟨x,y⟩ = Σ xᵢyᵢ` over F_q.
    Euclidean,
    /// `⟨x,y⟩ = Σ xᵢyᵢ^q` over F_{q²}.
    Hermitian,
}

/// How a reported minimum distance was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceProvenance {
    /// Exhaustively enumerated over all messages.
    Exhaustive,
    /// Above the enumeration cap: the GRS value `len−k+1` is reported.
    ByConstruction,
}

impl DistanceProvenance {
    pub fn as_str(self) -> &'static str {
        match self {
            DistanceProvenance::Exhaustive => "exhaustive",
            DistanceProvenance::ByConstruction => "by-construction",
        }
    }
}

/// Default cap on the number of enumerated messages for exact distance.
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

/// One (extended) GRS code over a field context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrsCode {
    locators: Vec<FieldElem>,
    multipliers: Vec<FieldElem>,
    k: usize,
    extended: bool,
}

/// The per-locator constants `uᵢ = ∏_{j≠i} (aᵢ − a_j)^{−1}`.
pub fn u_values(ctx: &FieldCtx, locators: &[FieldElem]) -> Result<Vec<FieldElem>> {
    if locators.is_empty() {
        return Err(Error::DuplicateLocators);
    }
    let mut u = Vec::with_capacity(locators.len());
    for (i, &ai) in locators.iter().enumerate() {
        let mut prod = ctx.one();
        for (j, &aj) in locators.iter().enumerate() {
            if i == j {
                continue;
            }
            let d = ctx.sub(ai, aj)?;
            if d.code() == 0 {
                return Err(Error::DuplicateLocators);
            }
            prod = ctx.mul(prod, d)?;
        }
        u.push(ctx.inv(prod)?);
    }
    Ok(u)
}

impl GrsCode {
    /// Validate and build a code: locators pairwise distinct, multipliers
    /// nonzero and of equal length, `1 ≤ k ≤ n` (`n+1` when extended), and
    /// a full-rank generator matrix.
    pub fn new(
        ctx: &FieldCtx,
        locators: Vec<FieldElem>,
        multipliers: Vec<FieldElem>,
        k: usize,
        extended: bool,
    ) -> Result<GrsCode> {
        let n = locators.len();
        if multipliers.len() != n {
            return Err(Error::InvalidCode(
                "locator/multiplier length mismatch".into(),
            ));
        }
        if n == 0 {
            return Err(Error::InvalidCode("empty locator set".into()));
        }
        let max_k = if extended { n + 1 } else { n };
        if k < 1 || k > max_k {
            return Err(Error::InvalidCode(format!(
                "dimension k={k} out of range for n={n}"
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for &a in &locators {
            ctx.mul(a, ctx.one())?;
            if !seen.insert(a.code()) {
                return Err(Error::DuplicateLocators);
            }
        }
        for &v in &multipliers {
            if v.code() == 0 {
                return Err(Error::InvalidCode("zero column multiplier".into()));
            }
            ctx.mul(v, ctx.one())?;
        }
        let code = GrsCode {
            locators,
            multipliers,
            k,
            extended,
        };
        if code.generator_matrix(ctx)?.rank(ctx)? != k {
            return Err(Error::InvalidCode(
                "generator matrix is rank-deficient".into(),
            ));
        }
        Ok(code)
    }

    pub fn locators(&self) -> &[FieldElem] {
        &self.locators
    }
    pub fn multipliers(&self) -> &[FieldElem] {
        &self.multipliers
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn extended(&self) -> bool {
        self.extended
    }
    /// Number of evaluation points n (excludes the extension coordinate).
    pub fn n(&self) -> usize {
        self.locators.len()
    }
    /// Code length: n, plus one when extended.
    pub fn len(&self) -> usize {
        self.locators.len() + usize::from(self.extended)
    }
    pub fn is_empty(&self) -> bool {
        false // a valid code always has positive length
    }

    /// Replace the column multipliers (used by hull reduction); re-validates.
    pub fn with_multipliers(&self, ctx: &FieldCtx, multipliers: Vec<FieldElem>) -> Result<GrsCode> {
        GrsCode::new(
            ctx,
            self.locators.clone(),
            multipliers,
            self.k,
            self.extended,
        )
    }

    /// The k×len generator matrix: row i is `(v₁a₁^i, …, v_na_n^i)`, with an
    /// extra indicator column for row k−1 when extended.
    pub fn generator_matrix(&self, ctx: &FieldCtx) -> Result<Matrix> {
        let len = self.len();
        let mut g = Matrix::zero(ctx, self.k, len);
        for (j, (&a, &v)) in self.locators.iter().zip(&self.multipliers).enumerate() {
            let mut acc = v;
            for i in 0..self.k {
                g.set(ctx, i, j, acc)?;
                acc = ctx.mul(acc, a)?;
            }
        }
        if self.extended {
            g.set(ctx, self.k - 1, len - 1, ctx.one())?;
        }
        Ok(g)
    }

    /// A parity-check matrix H: (len−k)×len with G·Hᵀ = 0 and full rank.
    pub fn parity_check_matrix(&self, ctx: &FieldCtx) -> Result<Matrix> {
        self.generator_matrix(ctx)?.kernel_basis(ctx)
    }

    /// The codeword generated by a message polynomial of degree ≤ k−1.
    pub fn encode(&self, ctx: &FieldCtx, f: &Poly) -> Result<Vec<FieldElem>> {
        if f.degree().is_some_and(|d| d > self.k - 1) {
            return Err(Error::DegreeTooHigh);
        }
        let mut w = Vec::with_capacity(self.len());
        for (&a, &v) in self.locators.iter().zip(&self.multipliers) {
            w.push(ctx.mul(v, f.eval(ctx, a)?)?);
        }
        if self.extended {
            w.push(f.coeff(ctx, self.k - 1));
        }
        Ok(w)
    }

    /// Hull dimension `dim(C ∩ C^⊥)` under the chosen inner product, by the
    /// dimension formula `dim(C ∩ D) = dim C + dim D − dim(C + D)` with
    /// `C + D` ranked from the stacked generator matrices.
    pub fn hull_dim(&self, ctx: &FieldCtx, ip: InnerProduct) -> Result<usize> {
        let g = self.generator_matrix(ctx)?;
        hull_dim_of_generator(ctx, &g, ip)
    }

    /// Fast Gram-matrix route to the same hull dimension:
    /// `dim Hull = k − rank(G·Ḡᵀ)`. Used inside search loops; the public
    /// [`hull_dim`](Self::hull_dim) stack-rank route stays authoritative.
    pub(crate) fn hull_dim_gram(&self, ctx: &FieldCtx, ip: InnerProduct) -> Result<usize> {
        let g = self.generator_matrix(ctx)?;
        let gt = match ip {
            InnerProduct::Euclidean => g.transpose(),
            InnerProduct::Hermitian => g.conj_transpose(ctx)?,
        };
        let gram = mat_mul(ctx, &g, &gt)?;
        Ok(self.k - gram.rank(ctx)?)
    }

    /// Exact minimum distance by enumerating all messages, one message per
    /// projective class (first nonzero coefficient fixed to 1).
    pub fn min_distance_exhaustive(&self, ctx: &FieldCtx, cap: u64) -> Result<usize> {
        let q = ctx.order() as u64;
        let total = q
            .checked_pow(self.k as u32)
            .ok_or(Error::EnumerationCapExceeded(u64::MAX, cap))?;
        if total > cap {
            return Err(Error::EnumerationCapExceeded(total, cap));
        }
        let elements = ctx.elements();
        let mut best = self.len();
        let mut coeffs = vec![ctx.zero(); self.k];
        // lead = index of the first nonzero coefficient, pinned to 1
        for lead in 0..self.k {
            for c in coeffs.iter_mut().take(lead) {
                *c = ctx.zero();
            }
            coeffs[lead] = ctx.one();
            // odometer over the k-1-lead free coefficients above `lead`
            let free = self.k - lead - 1;
            let mut idx = vec![0usize; free];
            loop {
                for (t, &i) in idx.iter().enumerate() {
                    coeffs[lead + 1 + t] = elements[i];
                }
                let mut weight = 0usize;
                for (&a, &v) in self.locators.iter().zip(&self.multipliers) {
                    // Horner from the top coefficient
                    let mut acc = ctx.zero();
                    for &c in coeffs.iter().rev() {
                        acc = ctx.add(ctx.mul(acc, a)?, c)?;
                    }
                    if ctx.mul(v, acc)?.code() != 0 {
                        weight += 1;
                    }
                }
                if self.extended && coeffs[self.k - 1].code() != 0 {
                    weight += 1;
                }
                best = best.min(weight);
                // advance odometer
                let mut pos = 0;
                while pos < free {
                    idx[pos] += 1;
                    if idx[pos] < elements.len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
                if pos == free {
                    break;
                }
            }
        }
        Ok(best)
    }

    /// Verified-or-asserted minimum distance: exhaustive when the message
    /// count fits under `cap`, otherwise the GRS value `len−k+1` flagged
    /// [`DistanceProvenance::ByConstruction`].
    pub fn min_distance(&self, ctx: &FieldCtx, cap: u64) -> Result<(usize, DistanceProvenance)> {
        match self.min_distance_exhaustive(ctx, cap) {
            Ok(d) => Ok((d, DistanceProvenance::Exhaustive)),
            Err(Error::EnumerationCapExceeded(..)) => {
                Ok((self.len() - self.k + 1, DistanceProvenance::ByConstruction))
            }
            Err(e) => Err(e),
        }
    }

    /// Decide whether this code's own codeword generated by `f` lies in the
    /// code's dual, via the interpolation criterion: there must exist `g`
    /// with `vᵢ²f(aᵢ) = uᵢg(aᵢ)` (Euclidean) or `vᵢ^{q+1}f(aᵢ)^q = uᵢg(aᵢ)`
    /// (Hermitian) for all i, of degree ≤ n−k−1 — relaxed to ≤ n−k plus the
    /// trailing-coefficient condition for extended codes.
    pub fn dual_membership_oracle(
        &self,
        ctx: &FieldCtx,
        f: &Poly,
        ip: InnerProduct,
    ) -> Result<bool> {
        if f.degree().is_some_and(|d| d > self.k - 1) {
            return Err(Error::DegreeTooHigh);
        }
        let n = self.n();
        let u = u_values(ctx, &self.locators)?;
        let mut points = Vec::with_capacity(n);
        for ((&a, &v), &ui) in self.locators.iter().zip(&self.multipliers).zip(&u) {
            let fa = f.eval(ctx, a)?;
            let num = match ip {
                InnerProduct::Euclidean => ctx.mul(ctx.mul(v, v)?, fa)?,
                InnerProduct::Hermitian => {
                    let q = ctx.hermitian_q().ok_or(Error::NotQuadraticExtension)?;
                    let vq1 = ctx.pow(v, (q + 1) as u64)?;
                    ctx.mul(vq1, ctx.frobenius_q(fa)?)?
                }
            };
            points.push((a, ctx.mul(num, ctx.inv(ui)?)?));
        }
        let g = interpolate(ctx, &points)?;
        if !self.extended {
            // need deg g ≤ n−k−1
            return Ok(g
                .degree()
                .is_none_or(|d| (d as i64) < n as i64 - self.k as i64));
        }
        // extended: deg g ≤ n−k and the trailing coordinate condition
        if g.degree().is_some_and(|d| d > n - self.k) {
            return Ok(false);
        }
        let g_top = g.coeff(ctx, n - self.k);
        let fk1 = f.coeff(ctx, self.k - 1);
        let lhs = match ip {
            InnerProduct::Euclidean => fk1,
            InnerProduct::Hermitian => ctx.frobenius_q(fk1)?,
        };
        Ok(lhs == ctx.neg(g_top)?)
    }

    /// Direct linear-algebra dual membership of an arbitrary word:
    /// `w ∈ C^⊥` iff `G·wᵀ = 0` (Euclidean) or `G·conj(w)ᵀ = 0` (Hermitian).
    pub fn dual_membership_linalg(
        &self,
        ctx: &FieldCtx,
        word: &[FieldElem],
        ip: InnerProduct,
    ) -> Result<bool> {
        if word.len() != self.len() {
            return Err(Error::DimensionMismatch);
        }
        let g = self.generator_matrix(ctx)?;
        let w = match ip {
            InnerProduct::Euclidean => word.to_vec(),
            InnerProduct::Hermitian => {
                let mut w = Vec::with_capacity(word.len());
                for &x in word {
                    w.push(ctx.frobenius_q(x)?);
                }
                w
            }
        };
        let col = Matrix::from_elems(ctx, w.len(), 1, &w)?;
        let prod = mat_mul(ctx, &g, &col)?;
        Ok((0..prod.rows()).all(|i| prod.get(i, 0).code() == 0))
    }
}

/// Hull dimension of the row space of `g` under the chosen inner product.
pub(crate) fn hull_dim_of_generator(ctx: &FieldCtx, g: &Matrix, ip: InnerProduct) -> Result<usize> {
    let k = g.rank(ctx)?;
    let len = g.cols();
    let dual = match ip {
        InnerProduct::Euclidean => g.kernel_basis(ctx)?,
        InnerProduct::Hermitian => g.kernel_basis(ctx)?.conj(ctx)?,
    };
    let total = stack_rank(ctx, g, &dual)?;
    Ok(k + (len - k) - total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::product_linear;

    fn f9() -> FieldCtx {
        FieldCtx::field_create(3, 2).unwrap()
    }

    /// The [8,2] code of the first Hermitian-hull construction at
    /// q=3, k=2, n=8, l=1: s = 0, all multipliers 1, plain.
    fn a1_3_2_8_1(ctx: &FieldCtx) -> GrsCode {
        let locs = ctx.elements()[..8].to_vec();
        let mults = vec![ctx.one(); 8];
        GrsCode::new(ctx, locs, mults, 2, false).unwrap()
    }

    #[test]
    fn u_values_basics() {
        let ctx = f9();
        // locators (0, 1): u = (-1, 1)
        let zero_one = vec![ctx.zero(), ctx.one()];
        let u = u_values(&ctx, &zero_one).unwrap();
        assert_eq!(u, vec![ctx.neg(ctx.one()).unwrap(), ctx.one()]);
        // locators = all of F_9: every u_i = -1
        let u = u_values(&ctx, &ctx.elements()).unwrap();
        let minus_one = ctx.neg(ctx.one()).unwrap();
        assert!(u.iter().all(|&x| x == minus_one));
        // duplicate locators rejected
        let dup = vec![ctx.one(), ctx.one()];
        assert_eq!(u_values(&ctx, &dup).unwrap_err(), Error::DuplicateLocators);
    }

    #[test]
    fn u_values_match_complement_product_in_f4() {
        let f4 = FieldCtx::field_create(2, 2).unwrap();
        // locators (0, 1, w); complement {w^2} in F_4
        let w = f4.omega();
        let locs = vec![f4.zero(), f4.one(), w];
        let comp = f4.pow(w, 2).unwrap();
        let u = u_values(&f4, &locs).unwrap();
        for (i, &ai) in locs.iter().enumerate() {
            // u_i = -(a_i - c) for the single complement element c
            let expect = f4.neg(f4.sub(ai, comp).unwrap()).unwrap();
            assert_eq!(u[i], expect, "Eq-2 cross-check at i={i}");
        }
    }

    #[test]
    fn u_values_satisfy_power_sum_identities() {
        let ctx = f9();
        let locs = &ctx.elements()[..6];
        let u = u_values(&ctx, locs).unwrap();
        let n = locs.len();
        for t in 0..n {
            let mut sum = ctx.zero();
            for (i, &a) in locs.iter().enumerate() {
                sum = ctx
                    .add(sum, ctx.mul(u[i], ctx.pow(a, t as u64).unwrap()).unwrap())
                    .unwrap();
            }
            let expect = if t == n - 1 { ctx.one() } else { ctx.zero() };
            assert_eq!(sum, expect, "sum u_i a_i^{t}");
        }
    }

    #[test]
    fn generator_matrix_shapes() {
        let ctx = f9();
        let locs = ctx.elements()[..5].to_vec();
        let mults = vec![ctx.one(); 5];
        // k = 1 plain: single all-ones row
        let c = GrsCode::new(&ctx, locs.clone(), mults.clone(), 1, false).unwrap();
        let g = c.generator_matrix(&ctx).unwrap();
        assert_eq!((g.rows(), g.cols()), (1, 5));
        assert!((0..5).all(|j| g.get(0, j) == ctx.one()));
        // k = 1 extended: trailing 1 (f_0 of the constant-1 message)
        let ce = GrsCode::new(&ctx, locs.clone(), mults.clone(), 1, true).unwrap();
        let ge = ce.generator_matrix(&ctx).unwrap();
        assert_eq!((ge.rows(), ge.cols()), (1, 6));
        assert_eq!(ge.get(0, 5), ctx.one());
        // full rank for a bigger instance
        let c3 = GrsCode::new(
            &ctx,
            ctx.elements()[..8].to_vec(),
            vec![ctx.one(); 8],
            3,
            true,
        )
        .unwrap();
        assert_eq!(c3.generator_matrix(&ctx).unwrap().rank(&ctx).unwrap(), 3);
    }

    #[test]
    fn parity_check_matrix_properties() {
        let ctx = f9();
        let code = a1_3_2_8_1(&ctx);
        let g = code.generator_matrix(&ctx).unwrap();
        let h = code.parity_check_matrix(&ctx).unwrap();
        assert_eq!((h.rows(), h.cols()), (6, 8));
        assert_eq!(h.rank(&ctx).unwrap(), 6);
        let prod = mat_mul(&ctx, &g, &h.transpose()).unwrap();
        assert_eq!(prod, Matrix::zero(&ctx, 2, 6));
        // extended code: len = n+1 columns
        let ce = GrsCode::new(
            &ctx,
            ctx.elements()[..8].to_vec(),
            vec![ctx.one(); 8],
            3,
            true,
        )
        .unwrap();
        assert_eq!(ce.parity_check_matrix(&ctx).unwrap().cols(), 9);
    }

    #[test]
    fn construction_validation() {
        let ctx = f9();
        let locs = ctx.elements()[..4].to_vec();
        let dup = vec![locs[0], locs[0], locs[2], locs[3]];
        assert_eq!(
            GrsCode::new(&ctx, dup, vec![ctx.one(); 4], 2, false).unwrap_err(),
            Error::DuplicateLocators
        );
        let zero_mult = vec![ctx.one(), ctx.zero(), ctx.one(), ctx.one()];
        assert!(matches!(
            GrsCode::new(&ctx, locs.clone(), zero_mult, 2, false).unwrap_err(),
            Error::InvalidCode(_)
        ));
        assert!(matches!(
            GrsCode::new(&ctx, locs.clone(), vec![ctx.one(); 4], 5, false).unwrap_err(),
            Error::InvalidCode(_)
        ));
        assert!(GrsCode::new(&ctx, locs, vec![ctx.one(); 4], 5, true).is_ok());
    }

    #[test]
    fn hermitian_hull_of_frozen_instances() {
        let ctx = f9();
        // [8,2] instance: hull 1 (independently computed)
        let code = a1_3_2_8_1(&ctx);
        assert_eq!(code.hull_dim(&ctx, InnerProduct::Hermitian).unwrap(), 1);
        assert_eq!(
            code.hull_dim_gram(&ctx, InnerProduct::Hermitian).unwrap(),
            1
        );
        // [9,1] all-locators code: Hermitian self-orthogonal, hull = k = 1
        let c91 = GrsCode::new(&ctx, ctx.elements(), vec![ctx.one(); 9], 1, false).unwrap();
        assert_eq!(c91.hull_dim(&ctx, InnerProduct::Hermitian).unwrap(), 1);
        // hull bounded by min(k, len-k)
        let h = code.hull_dim(&ctx, InnerProduct::Hermitian).unwrap();
        assert!(h <= code.k().min(code.len() - code.k()));
    }

    #[test]
    fn euclidean_hull_of_frozen_instance() {
        // the [4,2] code over F_5 with locators (0,1,2,4), unit multipliers
        let f5 = FieldCtx::field_create(5, 1).unwrap();
        let locs = f5.elements()[..4].to_vec();
        let code = GrsCode::new(&f5, locs, vec![f5.one(); 4], 2, false).unwrap();
        assert_eq!(code.hull_dim(&f5, InnerProduct::Euclidean).unwrap(), 1);
        assert_eq!(code.hull_dim_gram(&f5, InnerProduct::Euclidean).unwrap(), 1);
        assert_eq!(code.min_distance_exhaustive(&f5, 1000).unwrap(), 3);
    }

    #[test]
    fn hull_of_code_equals_hull_of_dual() {
        let ctx = f9();
        let code = a1_3_2_8_1(&ctx);
        let g = code.generator_matrix(&ctx).unwrap();
        let h = code.hull_dim(&ctx, InnerProduct::Hermitian).unwrap();
        // generator of the Hermitian dual = conjugated Euclidean kernel
        let dual_gen = g.kernel_basis(&ctx).unwrap().conj(&ctx).unwrap();
        let h_dual = hull_dim_of_generator(&ctx, &dual_gen, InnerProduct::Hermitian).unwrap();
        assert_eq!(h, h_dual);
        // Euclidean analogue over F_5
        let f5 = FieldCtx::field_create(5, 1).unwrap();
        let c5 = GrsCode::new(
            &f5,
            f5.elements()[..4].to_vec(),
            vec![f5.one(); 4],
            2,
            false,
        )
        .unwrap();
        let g5 = c5.generator_matrix(&f5).unwrap();
        let d5 = g5.kernel_basis(&f5).unwrap();
        assert_eq!(
            c5.hull_dim(&f5, InnerProduct::Euclidean).unwrap(),
            hull_dim_of_generator(&f5, &d5, InnerProduct::Euclidean).unwrap()
        );
    }

    #[test]
    fn min_distance_spot_values() {
        let ctx = f9();
        // [n,1] with nonzero multipliers: d = n
        let c1 = GrsCode::new(
            &ctx,
            ctx.elements()[..7].to_vec(),
            vec![ctx.omega(); 7],
            1,
            false,
        )
        .unwrap();
        assert_eq!(c1.min_distance_exhaustive(&ctx, 100).unwrap(), 7);
        // [8,2] over F_9: d = 7 = n-k+1
        let code = a1_3_2_8_1(&ctx);
        assert_eq!(code.min_distance_exhaustive(&ctx, 1000).unwrap(), 7);
        // cap behaviour
        assert_eq!(
            code.min_distance_exhaustive(&ctx, 10).unwrap_err(),
            Error::EnumerationCapExceeded(81, 10)
        );
        assert_eq!(
            code.min_distance(&ctx, 10).unwrap(),
            (7, DistanceProvenance::ByConstruction)
        );
        assert_eq!(
            code.min_distance(&ctx, 1000).unwrap(),
            (7, DistanceProvenance::Exhaustive)
        );
    }

    #[test]
    fn encode_matches_generator_rows() {
        let ctx = f9();
        let code = GrsCode::new(
            &ctx,
            ctx.elements()[..8].to_vec(),
            vec![ctx.one(); 8],
            3,
            true,
        )
        .unwrap();
        let g = code.generator_matrix(&ctx).unwrap();
        // message x^i reproduces row i
        for i in 0..3 {
            let mut coeffs = vec![ctx.zero(); i + 1];
            coeffs[i] = ctx.one();
            let f = Poly::new(&ctx, &coeffs).unwrap();
            let w = code.encode(&ctx, &f).unwrap();
            for (j, &x) in w.iter().enumerate() {
                assert_eq!(x, g.get(i, j));
            }
        }
        let too_big = product_linear(&ctx, &ctx.elements()[..3]).unwrap();
        assert_eq!(
            code.encode(&ctx, &too_big).unwrap_err(),
            Error::DegreeTooHigh
        );
    }

    #[test]
    fn oracle_agrees_with_linear_algebra_hermitian() {
        let ctx = f9();
        let code = a1_3_2_8_1(&ctx);
        let elements = ctx.elements();
        let mut hull_count = 0;
        for &c0 in &elements {
            for &c1 in &elements {
                let f = Poly::new(&ctx, &[c0, c1]).unwrap();
                let by_oracle = code
                    .dual_membership_oracle(&ctx, &f, InnerProduct::Hermitian)
                    .unwrap();
                let w = code.encode(&ctx, &f).unwrap();
                let by_la = code
                    .dual_membership_linalg(&ctx, &w, InnerProduct::Hermitian)
                    .unwrap();
                assert_eq!(by_oracle, by_la, "message ({}, {})", c0.code(), c1.code());
                if by_oracle && !(c0.code() == 0 && c1.code() == 0) {
                    hull_count += 1;
                }
            }
        }
        // hull dim 1 over F_9: 9 - 1 = 8 nonzero hull words among the messages
        assert_eq!(hull_count, 8);
    }

    #[test]
    fn oracle_agrees_with_linear_algebra_euclidean_extended() {
        let f5 = FieldCtx::field_create(5, 1).unwrap();
        // extended [5,2] code over F_5
        let code =
            GrsCode::new(&f5, f5.elements()[..4].to_vec(), vec![f5.one(); 4], 2, true).unwrap();
        let elements = f5.elements();
        for &c0 in &elements {
            for &c1 in &elements {
                let f = Poly::new(&f5, &[c0, c1]).unwrap();
                let by_oracle = code
                    .dual_membership_oracle(&f5, &f, InnerProduct::Euclidean)
                    .unwrap();
                let w = code.encode(&f5, &f).unwrap();
                let by_la = code
                    .dual_membership_linalg(&f5, &w, InnerProduct::Euclidean)
                    .unwrap();
                assert_eq!(by_oracle, by_la);
            }
        }
        // zero message is always in the dual
        assert!(code
            .dual_membership_oracle(&f5, &Poly::zero(), InnerProduct::Euclidean)
            .unwrap());
    }

    #[test]
    fn oracle_on_self_orthogonal_code_accepts_everything() {
        let ctx = f9();
        // [9,1] all-locators, unit multipliers: Hermitian self-orthogonal
        let code = GrsCode::new(&ctx, ctx.elements(), vec![ctx.one(); 9], 1, false).unwrap();
        for &c in &ctx.elements() {
            let f = Poly::new(&ctx, &[c]).unwrap();
            assert!(code
                .dual_membership_oracle(&ctx, &f, InnerProduct::Hermitian)
                .unwrap());
        }
    }
}
