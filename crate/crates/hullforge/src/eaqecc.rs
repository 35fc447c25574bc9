//! Entanglement-assisted quantum code parameters derived from codes with
//! known Hermitian hull dimension: the entanglement count c = rank(H·H†)
//! (verified against the hull identity c = len−k−dim Hull), the
//! `[[n, 2k−n+c, d; c]]_q` derivation, the MDS pair
//! `[[n, k−l, n−k+1; n−k−l]]_q` / `[[n, n−k−l, k+1; k−l]]_q`, and the
//! quantum Singleton bound check.

use crate::code::{GrsCode, InnerProduct};
use crate::error::{Error, Result};
use crate::gf::FieldCtx;
use crate::linalg::mat_mul;

/// Parameters `[[n, k, d; c]]_q` of an entanglement-assisted quantum code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EaqeccParams {
    pub n: usize,
    pub k_logical: usize,
    pub d: usize,
    /// Number of maximally entangled pairs consumed.
    pub c: usize,
    /// Base alphabet: the classical source code lives over F_{q²}.
    pub q: u32,
    /// Meets the quantum Singleton bound with equality.
    pub is_mds: bool,
    /// Theorem id of the source construction, when known.
    pub source: Option<String>,
}

impl std::fmt::Display for EaqeccParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[[{},{},{};{}]]_{}",
            self.n, self.k_logical, self.d, self.c, self.q
        )
    }
}

/// Outcome of the quantum Singleton bound `k ≤ n + c − 2(d−1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingletonCheck {
    /// The bound presupposes 2d ≤ n+2.
    pub applicable: bool,
    pub satisfied: bool,
    pub equality: bool,
}

/// The entanglement count c = rank(H·H†), computed independently as
/// len − k − dim Hull_H and asserted equal.
pub fn entanglement_count(ctx: &FieldCtx, code: &GrsCode) -> Result<usize> {
    let h = code.parity_check_matrix(ctx)?;
    let gram = mat_mul(ctx, &h, &h.conj_transpose(ctx)?)?;
    let by_rank = gram.rank(ctx)?;
    let hull = code.hull_dim(ctx, InnerProduct::Hermitian)?;
    let by_hull = code.len() - code.k() - hull;
    if by_rank != by_hull {
        return Err(Error::RankIdentityViolated(by_rank, by_hull));
    }
    Ok(by_rank)
}

fn finish(mut p: EaqeccParams) -> EaqeccParams {
    let sc = singleton_check(&p);
    p.is_mds = sc.applicable && sc.equality;
    p
}

/// `[[len, 2k−len+c, d; c]]_q` from a code of verified minimum distance d.
pub fn eaqecc_from_code(ctx: &FieldCtx, code: &GrsCode, d: usize) -> Result<EaqeccParams> {
    let q = ctx.hermitian_q().ok_or(Error::NotQuadraticExtension)?;
    let c = entanglement_count(ctx, code)?;
    // 2k − len + c = k − hull ≥ 0
    let k_logical = 2 * code.k() + c - code.len();
    Ok(finish(EaqeccParams {
        n: code.len(),
        k_logical,
        d,
        c,
        q,
        is_mds: false,
        source: None,
    }))
}

/// The pair (Q, Q′) derived from an `[len,k]` code with Hermitian hull l
/// and k ≤ ⌊len/2⌋: Q = `[[len, k−l, len−k+1; len−k−l]]_q` and the MDS
/// Q′ = `[[len, len−k−l, k+1; k−l]]_q`. The passed `l` is re-verified
/// against the linear-algebra hull dimension.
pub fn mds_eaqecc_pair(
    ctx: &FieldCtx,
    code: &GrsCode,
    l: usize,
) -> Result<(EaqeccParams, EaqeccParams)> {
    let q = ctx.hermitian_q().ok_or(Error::NotQuadraticExtension)?;
    let (len, k) = (code.len(), code.k());
    if k > len / 2 {
        return Err(Error::DimensionTooLarge);
    }
    let hull = code.hull_dim(ctx, InnerProduct::Hermitian)?;
    if hull != l {
        return Err(Error::InvalidCode(format!(
            "claimed hull {l} != computed hull {hull}"
        )));
    }
    let primal = finish(EaqeccParams {
        n: len,
        k_logical: k - l,
        d: len - k + 1,
        c: len - k - l,
        q,
        is_mds: false,
        source: None,
    });
    let dual = finish(EaqeccParams {
        n: len,
        k_logical: len - k - l,
        d: k + 1,
        c: k - l,
        q,
        is_mds: false,
        source: None,
    });
    Ok((primal, dual))
}

/// Evaluate the quantum Singleton bound `k ≤ n + c − 2(d−1)` (applicable
/// when 2d ≤ n+2).
pub fn singleton_check(p: &EaqeccParams) -> SingletonCheck {
    let applicable = 2 * p.d <= p.n + 2;
    let bound = p.n as i64 + p.c as i64 - 2 * (p.d as i64 - 1);
    let satisfied = !applicable || (p.k_logical as i64) <= bound;
    let equality = applicable && (p.k_logical as i64) == bound;
    SingletonCheck {
        applicable,
        satisfied,
        equality,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::hull_dim_of_generator;
    use crate::constructions::{construct_a1, construct_b, hermitian_field, hull_reduce};

    #[test]
    fn entanglement_count_routes_agree_on_frozen_instance() {
        // the [76,8] code over F_81 with Hermitian hull 3: c = 76-8-3 = 65
        let ctx = hermitian_field(9).unwrap();
        let r = construct_a1(&ctx, 9, 8, 76, 3).unwrap();
        assert_eq!(entanglement_count(&ctx, &r.code).unwrap(), 65);
        // small instance over F_9: c = 8-2-1 = 5
        let f9 = hermitian_field(3).unwrap();
        let r = construct_a1(&f9, 3, 2, 8, 1).unwrap();
        assert_eq!(entanglement_count(&f9, &r.code).unwrap(), 5);
    }

    #[test]
    fn entanglement_count_matches_dual_hull_route() {
        let f9 = hermitian_field(3).unwrap();
        let r = construct_a1(&f9, 3, 2, 8, 1).unwrap();
        let c = entanglement_count(&f9, &r.code).unwrap();
        // second identity: c = len - k - dim Hull_H(dual), the dual's
        // generator being the conjugated kernel of G
        let g = r.code.generator_matrix(&f9).unwrap();
        let dual_gen = g.kernel_basis(&f9).unwrap().conj(&f9).unwrap();
        let dual_hull = hull_dim_of_generator(&f9, &dual_gen, InnerProduct::Hermitian).unwrap();
        assert_eq!(c, r.code.len() - r.code.k() - dual_hull);
    }

    #[test]
    fn eaqecc_from_frozen_code() {
        let ctx = hermitian_field(9).unwrap();
        let r = construct_a1(&ctx, 9, 8, 76, 3).unwrap();
        let p = eaqecc_from_code(&ctx, &r.code, 69).unwrap();
        assert_eq!((p.n, p.k_logical, p.d, p.c, p.q), (76, 5, 69, 65, 9));
        assert!(!p.is_mds); // bound not applicable: 2d = 138 > 78
        assert_eq!(p.to_string(), "[[76,5,69;65]]_9");
    }

    #[test]
    fn mds_pair_reproduces_headline_tuples() {
        // [[76,65,9;5]]_9 from the [76,8] hull-3 code
        let ctx = hermitian_field(9).unwrap();
        let r = construct_a1(&ctx, 9, 8, 76, 3).unwrap();
        let (q_side, q_prime) = mds_eaqecc_pair(&ctx, &r.code, 3).unwrap();
        assert_eq!(q_side.to_string(), "[[76,5,69;65]]_9");
        assert_eq!(q_prime.to_string(), "[[76,65,9;5]]_9");
        assert!(q_prime.is_mds);
        assert!(singleton_check(&q_prime).equality);
        // [[36,30,5;2]]_8 from the reduced coset construction
        let f64 = hermitian_field(8).unwrap();
        let b = construct_b(&f64, 8, 5, 4).unwrap();
        let red = hull_reduce(&f64, &b, 2).unwrap();
        let (_, q_prime) = mds_eaqecc_pair(&f64, &red.code, 2).unwrap();
        assert_eq!(q_prime.to_string(), "[[36,30,5;2]]_8");
        assert!(q_prime.is_mds);
    }

    #[test]
    fn pair_rejects_large_k_and_wrong_hull() {
        let f9 = hermitian_field(3).unwrap();
        // [4,3] over F_9: k = 3 > len/2 = 2
        let code = crate::code::GrsCode::new(
            &f9,
            f9.elements()[..4].to_vec(),
            vec![f9.one(); 4],
            3,
            false,
        )
        .unwrap();
        assert_eq!(
            mds_eaqecc_pair(&f9, &code, 0).unwrap_err(),
            Error::DimensionTooLarge
        );
        // wrong claimed hull is rejected
        let r = construct_a1(&f9, 3, 2, 8, 1).unwrap();
        assert!(matches!(
            mds_eaqecc_pair(&f9, &r.code, 0),
            Err(Error::InvalidCode(_))
        ));
    }

    #[test]
    fn singleton_bound_cases() {
        let exact = EaqeccParams {
            n: 36,
            k_logical: 30,
            d: 5,
            c: 2,
            q: 8,
            is_mds: true,
            source: None,
        };
        let sc = singleton_check(&exact);
        assert!(sc.applicable && sc.satisfied && sc.equality);
        // one logical qudit fewer: satisfied, no equality
        let slack = EaqeccParams {
            k_logical: 29,
            ..exact.clone()
        };
        let sc = singleton_check(&slack);
        assert!(sc.applicable && sc.satisfied && !sc.equality);
        // violated bound
        let over = EaqeccParams {
            k_logical: 31,
            ..exact.clone()
        };
        let sc = singleton_check(&over);
        assert!(sc.applicable && !sc.satisfied);
        // inapplicable: 2d > n+2
        let inapp = EaqeccParams {
            n: 10,
            k_logical: 1,
            d: 9,
            c: 2,
            q: 3,
            is_mds: false,
            source: None,
        };
        let sc = singleton_check(&inapp);
        assert!(!sc.applicable && sc.satisfied && !sc.equality);
    }

    #[test]
    fn zero_hull_code_formulas() {
        // zero-hull [n,k]: from_code gives [[n, k, d; n-k]]
        let f9 = hermitian_field(3).unwrap();
        let r = construct_a1(&f9, 3, 2, 7, 0).unwrap();
        let p = eaqecc_from_code(&f9, &r.code, 6).unwrap();
        assert_eq!((p.n, p.k_logical, p.d, p.c), (7, 2, 6, 5));
        // pair with l = 0: Q' = [[n, n-k, k+1; k]]
        let (_, qp) = mds_eaqecc_pair(&f9, &r.code, 0).unwrap();
        assert_eq!((qp.n, qp.k_logical, qp.d, qp.c), (7, 5, 3, 2));
        assert!(qp.is_mds);
    }
}
