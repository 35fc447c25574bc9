//! Factories producing (extended) GRS codes with prescribed hull dimension:
//! the A family (Hermitian hulls over F_{q²}), the coset-based B family
//! (Hermitian almost self-orthogonal, hull k−1) with its greedy
//! hull-reduction procedure, and the C families (Euclidean hulls over F_q);
//! plus the legal parameter grids that sweeps and acceptance tests enumerate.
//!
//! Factories only *claim* the hull dimension stated by the corresponding
//! theorem; verification against exact linear algebra is the caller's job
//! (see [`crate::code::GrsCode::hull_dim`]).

use crate::code::{GrsCode, InnerProduct};
use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};

/// Identifies which construction produced a record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    A1,
    A2,
    A3,
    B,
    BReduced,
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::A1 => "A1",
            TheoremId::A2 => "A2",
            TheoremId::A3 => "A3",
            TheoremId::B => "B",
            TheoremId::BReduced => "B_REDUCED",
            TheoremId::C1 => "C1",
            TheoremId::C2 => "C2",
            TheoremId::C3 => "C3",
            TheoremId::C4 => "C4",
            TheoremId::C5 => "C5",
            TheoremId::C6 => "C6",
        }
    }

    /// Which inner product the construction's hull claim refers to.
    pub fn inner_product(self) -> InnerProduct {
        match self {
            TheoremId::A1 | TheoremId::A2 | TheoremId::A3 | TheoremId::B | TheoremId::BReduced => {
                InnerProduct::Hermitian
            }
            _ => InnerProduct::Euclidean,
        }
    }

    /// Every directly constructible id (excludes the derived B_REDUCED).
    pub fn all_primary() -> [TheoremId; 10] {
        [
            TheoremId::A1,
            TheoremId::A2,
            TheoremId::A3,
            TheoremId::B,
            TheoremId::C1,
            TheoremId::C2,
            TheoremId::C3,
            TheoremId::C4,
            TheoremId::C5,
            TheoremId::C6,
        ]
    }
}

impl std::str::FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<TheoremId> {
        match s.to_ascii_uppercase().as_str() {
            "A1" => Ok(TheoremId::A1),
            "A2" => Ok(TheoremId::A2),
            "A3" => Ok(TheoremId::A3),
            "B" => Ok(TheoremId::B),
            "B_REDUCED" | "BREDUCED" => Ok(TheoremId::BReduced),
            "C1" => Ok(TheoremId::C1),
            "C2" => Ok(TheoremId::C2),
            "C3" => Ok(TheoremId::C3),
            "C4" => Ok(TheoremId::C4),
            "C5" => Ok(TheoremId::C5),
            "C6" => Ok(TheoremId::C6),
            other => Err(Error::ParamsOutOfRange(format!(
                "unknown theorem id '{other}'"
            ))),
        }
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// All parameters that fed a construction, for provenance and reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionParams {
    /// Base prime power: Hermitian codes live over F_{q²}, Euclidean over F_q.
    pub q: u32,
    /// Coset count (B family only).
    pub m: Option<u32>,
    /// Number of evaluation points (code length minus the extension column).
    pub n: usize,
    /// Code dimension.
    pub k: usize,
    /// Claimed hull dimension.
    pub l: usize,
    /// The split index s: multipliers differ from 1 on the first s coordinates
    /// (A/C1–C3), or the tail-product length (C4–C6).
    pub s: Option<usize>,
    /// The scaling constant λ of the B family.
    pub lambda: Option<FieldElem>,
    /// deg h(x) = q−m of the B family.
    pub h_degree: Option<usize>,
    /// Number of accepted rescalings performed by hull reduction.
    pub reduction_steps: Option<usize>,
}

impl ConstructionParams {
    fn basic(q: u32, n: usize, k: usize, l: usize, s: usize) -> Self {
        ConstructionParams {
            q,
            m: None,
            n,
            k,
            l,
            s: Some(s),
            lambda: None,
            h_degree: None,
            reduction_steps: None,
        }
    }
}

/// A constructed code together with full provenance of how it was built.
#[derive(Debug, Clone)]
pub struct ConstructionRecord {
    pub theorem_id: TheoremId,
    pub params: ConstructionParams,
    pub code: GrsCode,
    /// (inner product, dimension) the construction claims for the hull.
    pub claimed_hull: (InnerProduct, usize),
}

/// Decompose a prime power q = p^e.
pub fn prime_power(q: u32) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::ParamsOutOfRange(format!(
            "q={q} is not a prime power"
        )));
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p * p > q {
        return Ok((q, 1)); // q itself is prime
    }
    let mut e = 0;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    if rest != 1 {
        return Err(Error::ParamsOutOfRange(format!(
            "q={q} is not a prime power"
        )));
    }
    Ok((p, e))
}

/// The field F_{q²} that Hermitian-hull constructions for base q live over.
pub fn hermitian_field(q: u32) -> Result<FieldCtx> {
    let (p, e) = prime_power(q)?;
    FieldCtx::field_create(p, 2 * e)
}

/// The field F_q that Euclidean-hull constructions live over.
pub fn euclidean_field(q: u32) -> Result<FieldCtx> {
    let (p, e) = prime_power(q)?;
    FieldCtx::field_create(p, e)
}

fn require_hermitian(ctx: &FieldCtx, q: u32) -> Result<()> {
    if ctx.hermitian_q() == Some(q) {
        Ok(())
    } else {
        Err(Error::FieldMismatch)
    }
}

fn require_euclidean(ctx: &FieldCtx, q: u32) -> Result<()> {
    if ctx.order() == q {
        Ok(())
    } else {
        Err(Error::FieldMismatch)
    }
}

fn range_err(msg: impl Into<String>) -> Error {
    Error::ParamsOutOfRange(msg.into())
}

// ---------------------------------------------------------------------------
// A family: Hermitian hulls over F_{q²}, multipliers ω on a prefix.
// ---------------------------------------------------------------------------

#[allow(clippy::too_many_arguments)]
fn build_a(
    ctx: &FieldCtx,
    theorem: TheoremId,
    q: u32,
    n: usize,
    k: usize,
    l: usize,
    s: usize,
    extended: bool,
) -> Result<ConstructionRecord> {
    let locators = ctx.elements()[..n].to_vec();
    // v_i = ω for the first s coordinates (ω^{q+1} ≠ 1 for q ≥ 3), else 1
    let mut multipliers = vec![ctx.omega(); s];
    multipliers.resize(n, ctx.one());
    let code = GrsCode::new(ctx, locators, multipliers, k, extended)?;
    Ok(ConstructionRecord {
        theorem_id: theorem,
        params: ConstructionParams::basic(q, n, k, l, s),
        code,
        claimed_hull: (InnerProduct::Hermitian, l),
    })
}

/// `[n,k]_{q²}` MDS code with l-dimensional Hermitian hull;
/// q ≥ 3, 1 ≤ k ≤ q−1, q²−k ≤ n ≤ q², 0 ≤ l ≤ n+k−q².
pub fn construct_a1(
    ctx: &FieldCtx,
    q: u32,
    k: usize,
    n: usize,
    l: usize,
) -> Result<ConstructionRecord> {
    require_hermitian(ctx, q)?;
    let q2 = (q as usize) * (q as usize);
    if q < 3 {
        return Err(range_err(format!("A1 requires q >= 3, got q={q}")));
    }
    if k < 1 || k > q as usize - 1 {
        return Err(range_err(format!("A1 requires 1 <= k <= q-1, got k={k}")));
    }
    if n + k < q2 || n > q2 {
        return Err(range_err(format!(
            "A1 requires q^2-k <= n <= q^2, got n={n}"
        )));
    }
    if l > n + k - q2 {
        return Err(range_err(format!(
            "A1 requires l <= n+k-q^2 = {}, got l={l}",
            n + k - q2
        )));
    }
    let s = n + k - q2 - l;
    build_a(ctx, TheoremId::A1, q, n, k, l, s, false)
}

/// `[n+1,k]_{q²}` extended MDS code with l-dimensional Hermitian hull;
/// q ≥ 3, 1 ≤ k ≤ q−1, q²−k+1 ≤ n ≤ q², 0 ≤ l ≤ n+k−q²−1.
pub fn construct_a2(
    ctx: &FieldCtx,
    q: u32,
    k: usize,
    n: usize,
    l: usize,
) -> Result<ConstructionRecord> {
    require_hermitian(ctx, q)?;
    let q2 = (q as usize) * (q as usize);
    if q < 3 {
        return Err(range_err(format!("A2 requires q >= 3, got q={q}")));
    }
    if k < 1 || k > q as usize - 1 {
        return Err(range_err(format!("A2 requires 1 <= k <= q-1, got k={k}")));
    }
    if n + k < q2 + 1 || n > q2 {
        return Err(range_err(format!(
            "A2 requires q^2-k+1 <= n <= q^2, got n={n}"
        )));
    }
    if l + 1 > n + k - q2 {
        return Err(range_err(format!(
            "A2 requires l <= n+k-q^2-1 = {}, got l={l}",
            n + k - q2 - 1
        )));
    }
    let s = n + k - q2 - l - 1;
    build_a(ctx, TheoremId::A2, q, n, k, l, s, true)
}

/// `[n+1,q]_{q²}` extended MDS code with l-dimensional Hermitian hull;
/// q ≥ 3, q²−q ≤ n ≤ q², 0 ≤ l ≤ n+q−q².
pub fn construct_a3(ctx: &FieldCtx, q: u32, n: usize, l: usize) -> Result<ConstructionRecord> {
    require_hermitian(ctx, q)?;
    let q2 = (q as usize) * (q as usize);
    let k = q as usize;
    if q < 3 {
        return Err(range_err(format!("A3 requires q >= 3, got q={q}")));
    }
    if n + k < q2 || n > q2 {
        return Err(range_err(format!(
            "A3 requires q^2-q <= n <= q^2, got n={n}"
        )));
    }
    if l > n + k - q2 {
        return Err(range_err(format!(
            "A3 requires l <= n+q-q^2 = {}, got l={l}",
            n + k - q2
        )));
    }
    let s = n + k - q2 - l;
    build_a(ctx, TheoremId::A3, q, n, k, l, s, true)
}

// ---------------------------------------------------------------------------
// B family: coset locators, norm-root multipliers, Hermitian hull k−1.
// ---------------------------------------------------------------------------

/// `[m(q−1)+1, k]_{q²}` extended MDS code with Hermitian hull dimension k−1;
/// q ≥ 2, 2 ≤ m ≤ q, 1 ≤ k ≤ m−1.
///
/// Locators are the union of the cosets `I_t = {ω^{(q+1)i + t−1}}`, emitted
/// t-major. Multipliers solve `v_i^{q+1} = β_i` with `β_i = λ·u_i·h(a_i)`,
/// `h(x) = x^{q−m}`, and λ chosen so every β_i lands in F_q^*.
pub fn construct_b(ctx: &FieldCtx, q: u32, m: u32, k: usize) -> Result<ConstructionRecord> {
    require_hermitian(ctx, q)?;
    if q < 2 {
        return Err(range_err(format!("B requires q >= 2, got q={q}")));
    }
    if m < 2 || m > q {
        return Err(range_err(format!("B requires 2 <= m <= q, got m={m}")));
    }
    if k < 1 || k as u32 > m - 1 {
        return Err(range_err(format!("B requires 1 <= k <= m-1, got k={k}")));
    }
    let (qu, mu) = (q as usize, m as usize);
    let n = mu * (qu - 1);
    let order1 = (qu * qu - 1) as u64; // |F_{q²}^*|
    let mut locators = Vec::with_capacity(n);
    for t in 1..=mu {
        for i in 0..qu - 1 {
            let e = ((qu + 1) * i + t - 1) as u64 % order1;
            locators.push(ctx.omega_pow(e));
        }
    }
    let u = crate::code::u_values(ctx, &locators)?;
    // λ = (q−1)·ω^t = −ω^t; the exponent differs by parity of q
    let lam_exp: i64 = if q.is_multiple_of(2) {
        -((mu as i64) * (mu as i64 - 1) / 2)
    } else {
        (qu as i64 - mu as i64 + 1) * (mu as i64 - 1) / 2
    };
    let lam_exp = lam_exp.rem_euclid(order1 as i64) as u64;
    let lambda = ctx.neg(ctx.omega_pow(lam_exp))?;
    let h_degree = qu - mu;
    // the hull claim needs deg h strictly below q+n−(q+1)k
    let bound = qu as i64 + n as i64 - (qu as i64 + 1) * k as i64;
    if (h_degree as i64) >= bound {
        return Err(Error::ConstructionAssertionFailed(format!(
            "deg h = {h_degree} not strictly below q+n-(q+1)k = {bound}"
        )));
    }
    let mut multipliers = Vec::with_capacity(n);
    for i in 0..n {
        let ha = ctx.pow(locators[i], h_degree as u64)?;
        let beta = ctx.mul(ctx.mul(lambda, u[i])?, ha)?;
        if beta.code() == 0 || !ctx.subfield_test(beta)? {
            return Err(Error::ConstructionAssertionFailed(format!(
                "beta_{i} = lambda*u_i*h(a_i) is not a nonzero subfield element"
            )));
        }
        multipliers.push(ctx.norm_root(beta)?);
    }
    let code = GrsCode::new(ctx, locators, multipliers, k, true)?;
    Ok(ConstructionRecord {
        theorem_id: TheoremId::B,
        params: ConstructionParams {
            q,
            m: Some(m),
            n,
            k,
            l: k - 1,
            s: None,
            lambda: Some(lambda),
            h_degree: Some(h_degree),
            reduction_steps: None,
        },
        code,
        claimed_hull: (InnerProduct::Hermitian, k - 1),
    })
}

/// Lower a record's Hermitian hull dimension to `l_target` by greedy
/// single-coordinate rescalings `v_i ← c·v_i` with `c^{q+1} ≠ 1`, each
/// accepted only if it drops the hull dimension by exactly one. The result
/// is monomially equivalent to the input (same locators, k, extension), so
/// the [n,k,d] parameters are preserved.
pub fn hull_reduce(
    ctx: &FieldCtx,
    record: &ConstructionRecord,
    l_target: usize,
) -> Result<ConstructionRecord> {
    if record.claimed_hull.0 != InnerProduct::Hermitian {
        return Err(range_err(
            "hull reduction applies to Hermitian-hull records",
        ));
    }
    let q = ctx.hermitian_q().ok_or(Error::NotQuadraticExtension)?;
    let order1 = ctx.order() - 1;
    let mut current = record.code.hull_dim(ctx, InnerProduct::Hermitian)?;
    if l_target > current {
        return Err(Error::TargetOutOfRange(l_target, current));
    }
    let mut code = record.code.clone();
    let mut steps = 0usize;
    while current > l_target {
        let mut accepted = false;
        'search: for i in 0..code.n() {
            // candidates c = ω^j with c^{q+1} ≠ 1, i.e. (q−1) ∤ j
            for j in 1..order1 {
                if j % (q - 1) == 0 {
                    continue;
                }
                let c = ctx.omega_pow(j as u64);
                let mut mults = code.multipliers().to_vec();
                mults[i] = ctx.mul(c, mults[i])?;
                let trial = code.with_multipliers(ctx, mults)?;
                if trial.hull_dim_gram(ctx, InnerProduct::Hermitian)? == current - 1 {
                    code = trial;
                    current -= 1;
                    steps += 1;
                    accepted = true;
                    break 'search;
                }
            }
        }
        if !accepted {
            return Err(Error::SearchExhausted);
        }
    }
    // authoritative re-verification of the final hull by the stack route
    let verified = code.hull_dim(ctx, InnerProduct::Hermitian)?;
    if verified != l_target {
        return Err(Error::ConstructionAssertionFailed(format!(
            "hull reduction verified dimension {verified} != target {l_target}"
        )));
    }
    let mut params = record.params.clone();
    params.l = l_target;
    params.reduction_steps = Some(steps);
    Ok(ConstructionRecord {
        theorem_id: TheoremId::BReduced,
        params,
        code,
        claimed_hull: (InnerProduct::Hermitian, l_target),
    })
}

// ---------------------------------------------------------------------------
// C1–C3: Euclidean mirrors of the A family over F_q, multipliers g on a prefix.
// ---------------------------------------------------------------------------

#[allow(clippy::too_many_arguments)]
fn build_c123(
    ctx: &FieldCtx,
    theorem: TheoremId,
    q: u32,
    n: usize,
    k: usize,
    l: usize,
    s: usize,
    extended: bool,
) -> Result<ConstructionRecord> {
    let locators = ctx.elements()[..n].to_vec();
    // v_i = g (a fixed generator of F_q^*, g² ≠ 1 since q > 3) on the prefix
    let mut multipliers = vec![ctx.omega(); s];
    multipliers.resize(n, ctx.one());
    let code = GrsCode::new(ctx, locators, multipliers, k, extended)?;
    Ok(ConstructionRecord {
        theorem_id: theorem,
        params: ConstructionParams::basic(q, n, k, l, s),
        code,
        claimed_hull: (InnerProduct::Euclidean, l),
    })
}

/// `[n,k]_q` MDS code with l-dimensional Euclidean hull;
/// q > 3, 1 ≤ k ≤ ⌊q/2⌋, q−k ≤ n ≤ q, 0 ≤ l ≤ n+k−q.
pub fn construct_c1(
    ctx: &FieldCtx,
    q: u32,
    k: usize,
    n: usize,
    l: usize,
) -> Result<ConstructionRecord> {
    require_euclidean(ctx, q)?;
    let qu = q as usize;
    if q <= 3 {
        return Err(range_err(format!("C1 requires q > 3, got q={q}")));
    }
    if k < 1 || k > qu / 2 {
        return Err(range_err(format!(
            "C1 requires 1 <= k <= floor(q/2), got k={k}"
        )));
    }
    if n + k < qu || n > qu {
        return Err(range_err(format!("C1 requires q-k <= n <= q, got n={n}")));
    }
    if l > n + k - qu {
        return Err(range_err(format!(
            "C1 requires l <= n+k-q = {}, got l={l}",
            n + k - qu
        )));
    }
    build_c123(ctx, TheoremId::C1, q, n, k, l, n + k - qu - l, false)
}

/// `[n+1,k]_q` extended MDS code with l-dimensional Euclidean hull;
/// q > 3, 1 ≤ k ≤ ⌊q/2⌋, q−k+1 ≤ n ≤ q, 0 ≤ l ≤ n+k−q−1.
pub fn construct_c2(
    ctx: &FieldCtx,
    q: u32,
    k: usize,
    n: usize,
    l: usize,
) -> Result<ConstructionRecord> {
    require_euclidean(ctx, q)?;
    let qu = q as usize;
    if q <= 3 {
        return Err(range_err(format!("C2 requires q > 3, got q={q}")));
    }
    if k < 1 || k > qu / 2 {
        return Err(range_err(format!(
            "C2 requires 1 <= k <= floor(q/2), got k={k}"
        )));
    }
    if n + k < qu + 1 || n > qu {
        return Err(range_err(format!("C2 requires q-k+1 <= n <= q, got n={n}")));
    }
    if l + 1 > n + k - qu {
        return Err(range_err(format!(
            "C2 requires l <= n+k-q-1 = {}, got l={l}",
            n + k - qu - 1
        )));
    }
    build_c123(ctx, TheoremId::C2, q, n, k, l, n + k - qu - l - 1, true)
}

/// `[n+1,(q+1)/2]_q` extended MDS code with l-dimensional Euclidean hull;
/// q odd > 3, (q−1)/2 ≤ n ≤ q, 0 ≤ l ≤ n−(q−1)/2.
pub fn construct_c3(ctx: &FieldCtx, q: u32, n: usize, l: usize) -> Result<ConstructionRecord> {
    require_euclidean(ctx, q)?;
    let qu = q as usize;
    if q <= 3 || q.is_multiple_of(2) {
        return Err(range_err(format!("C3 requires odd q > 3, got q={q}")));
    }
    let k = qu.div_ceil(2);
    if n < (qu - 1) / 2 || n > qu {
        return Err(range_err(format!(
            "C3 requires (q-1)/2 <= n <= q, got n={n}"
        )));
    }
    if l > n - (qu - 1) / 2 {
        return Err(range_err(format!(
            "C3 requires l <= n-(q-1)/2 = {}, got l={l}",
            n - (qu - 1) / 2
        )));
    }
    let s = n + k - qu - l;
    build_c123(ctx, TheoremId::C3, q, n, k, l, s, true)
}

// ---------------------------------------------------------------------------
// C4–C6: Euclidean hulls with tail-product multipliers over F_q.
// ---------------------------------------------------------------------------

#[allow(clippy::too_many_arguments)]
fn build_c456(
    ctx: &FieldCtx,
    theorem: TheoremId,
    q: u32,
    n: usize,
    k: usize,
    l: usize,
    s: usize,
    extended: bool,
) -> Result<ConstructionRecord> {
    let elements = ctx.elements();
    let locators = elements[..n].to_vec();
    // v_i = ∏_{j=n+1}^{n+s} (a_i − a_j), the empty product being 1
    let tail = &elements[n..n + s];
    let mut multipliers = Vec::with_capacity(n);
    for &a in &locators {
        let mut v = ctx.one();
        for &b in tail {
            v = ctx.mul(v, ctx.sub(a, b)?)?;
        }
        multipliers.push(v);
    }
    let code = GrsCode::new(ctx, locators, multipliers, k, extended)?;
    Ok(ConstructionRecord {
        theorem_id: theorem,
        params: ConstructionParams::basic(q, n, k, l, s),
        code,
        claimed_hull: (InnerProduct::Euclidean, l),
    })
}

/// `[n,k]_q` MDS code with l-dimensional Euclidean hull;
/// 1 ≤ k ≤ ⌊q/2⌋, ⌈q/2⌉ ≤ n ≤ min{q−k, ⌈q/2⌉+k}, 0 ≤ l ≤ n−⌈q/2⌉.
pub fn construct_c4(
    ctx: &FieldCtx,
    q: u32,
    k: usize,
    n: usize,
    l: usize,
) -> Result<ConstructionRecord> {
    require_euclidean(ctx, q)?;
    let qu = q as usize;
    let lo = qu.div_ceil(2);
    if k < 1 || k > qu / 2 {
        return Err(range_err(format!(
            "C4 requires 1 <= k <= floor(q/2), got k={k}"
        )));
    }
    if n < lo || n > (qu - k).min(lo + k) {
        return Err(range_err(format!(
            "C4 requires ceil(q/2) <= n <= min(q-k, ceil(q/2)+k), got n={n}"
        )));
    }
    if l > n - lo {
        return Err(range_err(format!(
            "C4 requires l <= n-ceil(q/2) = {}, got l={l}",
            n - lo
        )));
    }
    let s = qu + l - n - k; // q−n−k+l, nonnegative since n ≤ q−k
    if s > qu - n {
        return Err(range_err(format!(
            "C4 requires s = q-n-k+l <= q-n, got s={s}"
        )));
    }
    build_c456(ctx, TheoremId::C4, q, n, k, l, s, false)
}

/// `[n+1,k]_q` extended MDS code with l-dimensional Euclidean hull;
/// 1 ≤ k ≤ ⌊(q+1)/2⌋, ⌈(q+1)/2⌉ ≤ n ≤ min{q−k+1, ⌈(q+1)/2⌉+k−1},
/// 0 ≤ l ≤ n−⌈(q+1)/2⌉ and (odd q) l ≠ n−(q+1)/2.
pub fn construct_c5(
    ctx: &FieldCtx,
    q: u32,
    k: usize,
    n: usize,
    l: usize,
) -> Result<ConstructionRecord> {
    require_euclidean(ctx, q)?;
    let qu = q as usize;
    let lo = (qu + 1).div_ceil(2);
    if k < 1 || k > qu.div_ceil(2) {
        return Err(range_err(format!(
            "C5 requires 1 <= k <= floor((q+1)/2), got k={k}"
        )));
    }
    if n < lo || n > (qu - k + 1).min(lo + k - 1) {
        return Err(range_err(format!(
            "C5 requires ceil((q+1)/2) <= n <= min(q-k+1, ceil((q+1)/2)+k-1), got n={n}"
        )));
    }
    if l > n - lo {
        return Err(range_err(format!(
            "C5 requires l <= n-ceil((q+1)/2) = {}, got l={l}",
            n - lo
        )));
    }
    if qu % 2 == 1 && l == n - qu.div_ceil(2) {
        return Err(Error::ExcludedHullDim(l));
    }
    let s = qu + l + 1 - n - k; // q−n−k+l+1
    if s > qu - n {
        return Err(range_err(format!(
            "C5 requires s = q-n-k+l+1 <= q-n, got s={s}"
        )));
    }
    build_c456(ctx, TheoremId::C5, q, n, k, l, s, true)
}

/// `[n+1,k]_q` extended MDS code with Euclidean hull dimension exactly
/// n−(q+1)/2+1; q odd, 1 ≤ k ≤ (q+1)/2, (q+1)/2 ≤ n ≤ min{q−k+1, (q+1)/2+k−1}.
pub fn construct_c6(ctx: &FieldCtx, q: u32, k: usize, n: usize) -> Result<ConstructionRecord> {
    require_euclidean(ctx, q)?;
    let qu = q as usize;
    if q.is_multiple_of(2) || q < 3 {
        return Err(range_err(format!("C6 requires odd q >= 3, got q={q}")));
    }
    let half = qu.div_ceil(2);
    if k < 1 || k > half {
        return Err(range_err(format!(
            "C6 requires 1 <= k <= (q+1)/2, got k={k}"
        )));
    }
    if n < half || n > (qu - k + 1).min(half + k - 1) {
        return Err(range_err(format!(
            "C6 requires (q+1)/2 <= n <= min(q-k+1, (q+1)/2+k-1), got n={n}"
        )));
    }
    let l = n - half + 1;
    let s = qu + (n - half) + 1 - n - k; // q−n−k+(n−(q+1)/2)+1
    if s > qu - n {
        return Err(range_err(format!("C6 requires s <= q-n, got s={s}")));
    }
    build_c456(ctx, TheoremId::C6, q, n, k, l, s, true)
}

// ---------------------------------------------------------------------------
// Dispatcher and legal parameter grids.
// ---------------------------------------------------------------------------

/// One point of a legal parameter grid. `l = None` means the construction
/// fixes the hull dimension itself (C6).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridPoint {
    pub q: u32,
    pub m: Option<u32>,
    pub n: usize,
    pub k: usize,
    pub l: Option<usize>,
}

/// Dispatch to the factory for `theorem`, validating which parameters it
/// needs. For theorem B, an `l` below k−1 triggers hull reduction to `l`.
pub fn construct(
    ctx: &FieldCtx,
    theorem: TheoremId,
    q: u32,
    m: Option<u32>,
    n: Option<usize>,
    k: Option<usize>,
    l: Option<usize>,
) -> Result<ConstructionRecord> {
    let need = |opt: Option<usize>, name: &str| {
        opt.ok_or_else(|| range_err(format!("theorem {theorem} requires --{name}")))
    };
    match theorem {
        TheoremId::A1 => construct_a1(ctx, q, need(k, "k")?, need(n, "n")?, need(l, "l")?),
        TheoremId::A2 => construct_a2(ctx, q, need(k, "k")?, need(n, "n")?, need(l, "l")?),
        TheoremId::A3 => {
            if k.is_some_and(|k| k != q as usize) {
                return Err(range_err("theorem A3 fixes k = q; omit --k or pass k = q"));
            }
            construct_a3(ctx, q, need(n, "n")?, need(l, "l")?)
        }
        TheoremId::B | TheoremId::BReduced => {
            let m = m.ok_or_else(|| range_err(format!("theorem {theorem} requires --m")))?;
            let k = need(k, "k")?;
            if n.is_some_and(|n| n != m as usize * (q as usize - 1)) {
                return Err(range_err("theorem B fixes n = m(q-1); omit --n"));
            }
            let record = construct_b(ctx, q, m, k)?;
            match l {
                None => Ok(record),
                Some(l) if l == k - 1 => Ok(record),
                Some(l) if l < k - 1 => hull_reduce(ctx, &record, l),
                Some(l) => Err(Error::TargetOutOfRange(l, k - 1)),
            }
        }
        TheoremId::C1 => construct_c1(ctx, q, need(k, "k")?, need(n, "n")?, need(l, "l")?),
        TheoremId::C2 => construct_c2(ctx, q, need(k, "k")?, need(n, "n")?, need(l, "l")?),
        TheoremId::C3 => {
            if k.is_some_and(|k| k != (q as usize).div_ceil(2)) {
                return Err(range_err("theorem C3 fixes k = (q+1)/2; omit --k"));
            }
            construct_c3(ctx, q, need(n, "n")?, need(l, "l")?)
        }
        TheoremId::C4 => construct_c4(ctx, q, need(k, "k")?, need(n, "n")?, need(l, "l")?),
        TheoremId::C5 => construct_c5(ctx, q, need(k, "k")?, need(n, "n")?, need(l, "l")?),
        TheoremId::C6 => {
            let record = construct_c6(ctx, q, need(k, "k")?, need(n, "n")?)?;
            if l.is_some_and(|l| l != record.params.l) {
                return Err(range_err(format!(
                    "theorem C6 fixes l = n-(q+1)/2+1 = {}; omit --l",
                    record.params.l
                )));
            }
            Ok(record)
        }
    }
}

/// Construct the instance at one grid point.
pub fn construct_grid_point(
    ctx: &FieldCtx,
    theorem: TheoremId,
    pt: &GridPoint,
) -> Result<ConstructionRecord> {
    construct(ctx, theorem, pt.q, pt.m, Some(pt.n), Some(pt.k), pt.l)
}

/// Enumerate every legal parameter tuple of a theorem at base q, in
/// deterministic (k, n, l) order. Matches the factories' preconditions
/// exactly: every emitted point constructs without error, and no point
/// outside the grid is claimed by the theorem.
pub fn legal_grid(theorem: TheoremId, q: u32) -> Result<Vec<GridPoint>> {
    prime_power(q)?;
    let qu = q as usize;
    let q2 = qu * qu;
    let mut grid = Vec::new();
    let mut push = |m: Option<u32>, n: usize, k: usize, l: Option<usize>| {
        grid.push(GridPoint { q, m, n, k, l });
    };
    match theorem {
        TheoremId::A1 => {
            if q < 3 {
                return Err(range_err(format!("A1 requires q >= 3, got q={q}")));
            }
            for k in 1..qu {
                for n in q2 - k..=q2 {
                    for l in 0..=n + k - q2 {
                        push(None, n, k, Some(l));
                    }
                }
            }
        }
        TheoremId::A2 => {
            if q < 3 {
                return Err(range_err(format!("A2 requires q >= 3, got q={q}")));
            }
            for k in 1..qu {
                for n in q2 - k + 1..=q2 {
                    for l in 0..n + k - q2 {
                        push(None, n, k, Some(l));
                    }
                }
            }
        }
        TheoremId::A3 => {
            if q < 3 {
                return Err(range_err(format!("A3 requires q >= 3, got q={q}")));
            }
            for n in q2 - qu..=q2 {
                for l in 0..=n + qu - q2 {
                    push(None, n, qu, Some(l));
                }
            }
        }
        TheoremId::B => {
            if q < 2 {
                return Err(range_err(format!("B requires q >= 2, got q={q}")));
            }
            for m in 2..=q {
                for k in 1..m as usize {
                    push(Some(m), m as usize * (qu - 1), k, Some(k - 1));
                }
            }
        }
        TheoremId::BReduced => {
            return Err(range_err(
                "B_REDUCED is derived by hull reduction, not swept directly",
            ));
        }
        TheoremId::C1 => {
            if q <= 3 {
                return Err(range_err(format!("C1 requires q > 3, got q={q}")));
            }
            for k in 1..=qu / 2 {
                for n in qu - k..=qu {
                    for l in 0..=n + k - qu {
                        push(None, n, k, Some(l));
                    }
                }
            }
        }
        TheoremId::C2 => {
            if q <= 3 {
                return Err(range_err(format!("C2 requires q > 3, got q={q}")));
            }
            for k in 1..=qu / 2 {
                for n in qu - k + 1..=qu {
                    for l in 0..n + k - qu {
                        push(None, n, k, Some(l));
                    }
                }
            }
        }
        TheoremId::C3 => {
            if q <= 3 || q.is_multiple_of(2) {
                return Err(range_err(format!("C3 requires odd q > 3, got q={q}")));
            }
            for n in (qu - 1) / 2..=qu {
                for l in 0..=n - (qu - 1) / 2 {
                    push(None, n, qu.div_ceil(2), Some(l));
                }
            }
        }
        TheoremId::C4 => {
            let lo = qu.div_ceil(2);
            for k in 1..=qu / 2 {
                let hi = (qu - k).min(lo + k);
                for n in lo..=hi {
                    for l in 0..=n - lo {
                        push(None, n, k, Some(l));
                    }
                }
            }
        }
        TheoremId::C5 => {
            let lo = (qu + 1).div_ceil(2);
            for k in 1..=qu.div_ceil(2) {
                let hi = (qu - k + 1).min(lo + k - 1);
                for n in lo..=hi {
                    for l in 0..=n - lo {
                        if qu % 2 == 1 && l == n - qu.div_ceil(2) {
                            continue;
                        }
                        push(None, n, k, Some(l));
                    }
                }
            }
        }
        TheoremId::C6 => {
            if q.is_multiple_of(2) || q < 3 {
                return Err(range_err(format!("C6 requires odd q >= 3, got q={q}")));
            }
            let half = qu.div_ceil(2);
            for k in 1..=half {
                let hi = (qu - k + 1).min(half + k - 1);
                for n in half..=hi {
                    push(None, n, k, None);
                }
            }
        }
    }
    Ok(grid)
}
