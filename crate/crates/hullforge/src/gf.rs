//! Exact arithmetic in finite fields `F_{p^e}`, including the quadratic
//! tower `F_q ⊂ F_{q²}` with the conjugation `x ↦ x^q`.
//!
//! Elements are stored as packed integer codes `Σ cᵢ·pⁱ` over the power
//! basis of the modulus; multiplication goes through precomputed exp/dlog
//! tables, addition through a full table for small orders or a digit loop
//! otherwise. Every context is immutable after creation and all operations
//! are pure, so contexts can be shared freely across threads.

use crate::error::{Error, Result};
use std::sync::atomic::{AtomicU32, Ordering};

/// Largest supported field order.
pub const FIELD_ORDER_CAP: u64 = 65536;

/// Orders up to this size get a full addition table.
const ADD_TABLE_MAX: u32 = 2048;

static NEXT_CTX_ID: AtomicU32 = AtomicU32::new(1);

/// One element of a finite field, tied to its context by id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    pub(crate) code: u32,
    pub(crate) ctx: u32,
}

impl FieldElem {
    /// Packed integer code `Σ cᵢ·pⁱ` of the element.
    pub fn code(self) -> u32 {
        self.code
    }
}

/// A finite field `F_{p^e}`: modulus, primitive element, and log tables.
pub struct FieldCtx {
    id: u32,
    p: u32,
    e: u32,
    order: u32,
    /// Monic modulus, coefficients lowest degree first, length e+1.
    modulus: Vec<u32>,
    /// Code of the fixed primitive element.
    omega: u32,
    /// exp[t] = code of omega^t, length order-1.
    exp: Vec<u32>,
    /// dlog[code] = t with omega^t = code; u32::MAX sentinel at index 0.
    dlog: Vec<u32>,
    /// Full addition table for small orders, indexed a*order+b.
    add_table: Option<Vec<u32>>,
    /// neg_table[code] = code of the additive inverse.
    neg_table: Vec<u32>,
    /// p^(e/2) when e is even — the subfield order for Hermitian towers.
    hermitian_q: Option<u32>,
}

// ---------- polynomial helpers on digit vectors (construction time only) ----------

fn code_to_digits(mut code: u32, p: u32, len: usize) -> Vec<u32> {
    let mut d = vec![0u32; len];
    for slot in d.iter_mut() {
        *slot = code % p;
        code /= p;
    }
    debug_assert_eq!(code, 0);
    d
}

fn digits_to_code(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn trim(digits: &mut Vec<u32>) {
    while digits.last() == Some(&0) {
        digits.pop();
    }
}

/// Remainder of a by b (b monic-normalizable, nonzero), digits mod p.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty());
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = (r[dr] * lead_inv) % p;
        if factor != 0 {
            let shift = dr - db;
            for i in 0..=db {
                let sub = (factor * b[i]) % p;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    poly_rem(&prod, modulus, p)
}

fn mod_inv(a: u32, p: u32) -> u32 {
    // p is prime and small; Fermat by square-and-multiply.
    let mut result: u64 = 1;
    let mut base: u64 = (a % p) as u64;
    let mut t = p - 2;
    while t > 0 {
        if t & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        t >>= 1;
    }
    result as u32
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// True iff the monic polynomial (digits, degree = len-1) is irreducible
/// over F_p: no monic divisor of degree 1..=deg/2 leaves remainder zero.
fn is_irreducible(digits: &[u32], p: u32) -> bool {
    let deg = digits.len() - 1;
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        // enumerate all monic polynomials of degree d
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut div = code_to_digits(low, p, d);
            div.push(1);
            if poly_rem(digits, &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl std::fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("order", &self.order)
            .field("modulus", &self.modulus)
            .field("omega", &self.omega)
            .finish()
    }
}

impl FieldCtx {
    /// Build `F_{p^e}` with the lexicographically smallest monic irreducible
    /// modulus and a fixed primitive element: the modulus root `x` when it
    /// is primitive and `e ≥ 2`, otherwise the smallest primitive element
    /// in packed-code order (exhaustive order test).
    pub fn field_create(p: u32, e: u32) -> Result<FieldCtx> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e < 1 {
            return Err(Error::DegreeOutOfRange(e));
        }
        let order64 = (p as u64)
            .checked_pow(e)
            .ok_or(Error::CapExceeded(u64::MAX, FIELD_ORDER_CAP))?;
        if order64 > FIELD_ORDER_CAP {
            return Err(Error::CapExceeded(order64, FIELD_ORDER_CAP));
        }
        let order = order64 as u32;

        // modulus: smallest packed code among monic degree-e irreducibles
        let modulus: Vec<u32> = if e == 1 {
            vec![0, 1] // x
        } else {
            let mut found = None;
            for low in 0..p.pow(e) {
                let mut cand = code_to_digits(low, p, e as usize);
                cand.push(1);
                if is_irreducible(&cand, p) {
                    found = Some(cand);
                    break;
                }
            }
            found.ok_or(Error::DegreeOutOfRange(e))?
        };

        let mul = |a: u32, b: u32| -> u32 {
            let da = code_to_digits(a, p, e as usize);
            let db = code_to_digits(b, p, e as usize);
            let mut r = poly_mul_mod(&da, &db, &modulus, p);
            r.resize(e as usize, 0);
            digits_to_code(&r, p)
        };
        let mult_order = |c: u32| -> u32 {
            let mut acc = c;
            let mut n = 1;
            while acc != 1 {
                acc = mul(acc, c);
                n += 1;
            }
            n
        };

        // primitive element: x first (e >= 2), then ascending codes
        let omega = {
            let mut found = None;
            if e >= 2 && mult_order(p) == order - 1 {
                found = Some(p);
            } else {
                for c in 2..order {
                    if mult_order(c) == order - 1 {
                        found = Some(c);
                        break;
                    }
                }
            }
            found.unwrap_or(1)
        };

        let mut exp = Vec::with_capacity((order - 1) as usize);
        let mut dlog = vec![u32::MAX; order as usize];
        let mut acc = 1u32;
        for t in 0..order - 1 {
            exp.push(acc);
            dlog[acc as usize] = t;
            acc = mul(acc, omega);
        }
        debug_assert_eq!(acc, 1);

        let mut neg_table = vec![0u32; order as usize];
        for c in 0..order {
            let digits = code_to_digits(c, p, e as usize);
            let neg: Vec<u32> = digits.iter().map(|&d| (p - d) % p).collect();
            neg_table[c as usize] = digits_to_code(&neg, p);
        }

        let add_table = if order <= ADD_TABLE_MAX {
            let mut t = vec![0u32; (order as usize) * (order as usize)];
            for a in 0..order {
                let da = code_to_digits(a, p, e as usize);
                for b in 0..order {
                    let db = code_to_digits(b, p, e as usize);
                    let sum: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                    t[(a * order + b) as usize] = digits_to_code(&sum, p);
                }
            }
            Some(t)
        } else {
            None
        };

        Ok(FieldCtx {
            id: NEXT_CTX_ID.fetch_add(1, Ordering::Relaxed),
            p,
            e,
            order,
            modulus,
            omega,
            exp,
            dlog,
            add_table,
            neg_table,
            hermitian_q: if e.is_multiple_of(2) {
                Some(p.pow(e / 2))
            } else {
                None
            },
        })
    }

    pub(crate) fn id(&self) -> u32 {
        self.id
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn e(&self) -> u32 {
        self.e
    }
    pub fn order(&self) -> u32 {
        self.order
    }
    /// Monic modulus coefficients, lowest degree first (length e+1).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    /// The subfield order q when this field is F_{q²}, i.e. e is even.
    pub fn hermitian_q(&self) -> Option<u32> {
        self.hermitian_q
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            code: 0,
            ctx: self.id,
        }
    }
    pub fn one(&self) -> FieldElem {
        FieldElem {
            code: 1,
            ctx: self.id,
        }
    }
    pub fn omega(&self) -> FieldElem {
        FieldElem {
            code: self.omega,
            ctx: self.id,
        }
    }

    /// The element with the given packed code.
    pub fn elem(&self, code: u32) -> Result<FieldElem> {
        if code < self.order {
            Ok(FieldElem { code, ctx: self.id })
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// The image of an integer under `Z → F_{p^e}` (repeated addition of 1).
    pub fn from_int(&self, n: u64) -> FieldElem {
        FieldElem {
            code: (n % self.p as u64) as u32,
            ctx: self.id,
        }
    }

    fn check(&self, a: FieldElem) -> Result<()> {
        if a.ctx == self.id {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Coefficients of the element in the power basis, lowest first (length e).
    pub fn coeffs(&self, a: FieldElem) -> Result<Vec<u32>> {
        self.check(a)?;
        Ok(code_to_digits(a.code, self.p, self.e as usize))
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(FieldElem {
            code: self.add_code(a.code, b.code),
            ctx: self.id,
        })
    }

    #[inline]
    pub(crate) fn add_code(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        if let Some(t) = &self.add_table {
            return t[(a * self.order + b) as usize];
        }
        let da = code_to_digits(a, self.p, self.e as usize);
        let db = code_to_digits(b, self.p, self.e as usize);
        let sum: Vec<u32> = da
            .iter()
            .zip(&db)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        digits_to_code(&sum, self.p)
    }

    pub fn neg(&self, a: FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        Ok(FieldElem {
            code: self.neg_code(a.code),
            ctx: self.id,
        })
    }

    #[inline]
    pub(crate) fn neg_code(&self, a: u32) -> u32 {
        self.neg_table[a as usize]
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(FieldElem {
            code: self.add_code(a.code, self.neg_code(b.code)),
            ctx: self.id,
        })
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        self.check(b)?;
        Ok(FieldElem {
            code: self.mul_code(a.code, b.code),
            ctx: self.id,
        })
    }

    #[inline]
    pub(crate) fn mul_code(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = self.dlog[a as usize] as u64 + self.dlog[b as usize] as u64;
        self.exp[(t % (self.order as u64 - 1)) as usize]
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        if a.code == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElem {
            code: self.inv_code(a.code),
            ctx: self.id,
        })
    }

    #[inline]
    pub(crate) fn inv_code(&self, a: u32) -> u32 {
        let n = self.order - 1;
        let t = self.dlog[a as usize];
        self.exp[((n - t) % n) as usize]
    }

    /// `a^t`, with the convention `0^0 = 1`.
    pub fn pow(&self, a: FieldElem, t: u64) -> Result<FieldElem> {
        self.check(a)?;
        Ok(FieldElem {
            code: self.pow_code(a.code, t),
            ctx: self.id,
        })
    }

    #[inline]
    pub(crate) fn pow_code(&self, a: u32, t: u64) -> u32 {
        if t == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = self.order as u64 - 1;
        let d = self.dlog[a as usize] as u64;
        self.exp[(d * (t % n) % n) as usize]
    }

    /// Discrete log base omega of a nonzero element.
    pub fn dlog(&self, a: FieldElem) -> Result<u32> {
        self.check(a)?;
        if a.code == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.dlog[a.code as usize])
    }

    /// `omega^t`.
    pub fn omega_pow(&self, t: u64) -> FieldElem {
        let n = self.order as u64 - 1;
        FieldElem {
            code: self.exp[(t % n) as usize],
            ctx: self.id,
        }
    }

    /// The conjugation `x ↦ x^q` of the quadratic tower F_q ⊂ F_{q²}.
    pub fn frobenius_q(&self, a: FieldElem) -> Result<FieldElem> {
        self.check(a)?;
        let q = self.hermitian_q.ok_or(Error::NotQuadraticExtension)?;
        Ok(FieldElem {
            code: self.pow_code(a.code, q as u64),
            ctx: self.id,
        })
    }

    #[inline]
    pub(crate) fn conj_code(&self, a: u32, q: u32) -> u32 {
        self.pow_code(a, q as u64)
    }

    /// Whether `x^q = x`, i.e. x lies in the subfield F_q of F_{q²}.
    pub fn subfield_test(&self, a: FieldElem) -> Result<bool> {
        self.check(a)?;
        let q = self.hermitian_q.ok_or(Error::NotQuadraticExtension)?;
        if a.code == 0 {
            return Ok(true);
        }
        Ok(self.dlog[a.code as usize].is_multiple_of(q + 1))
    }

    /// A deterministic solution v of `v^{q+1} = beta` for beta ∈ F_q^*:
    /// v = omega^t with t = dlog(beta)/(q+1), the smallest such exponent.
    pub fn norm_root(&self, beta: FieldElem) -> Result<FieldElem> {
        self.check(beta)?;
        let q = self.hermitian_q.ok_or(Error::NotQuadraticExtension)?;
        if beta.code == 0 {
            return Err(Error::DivisionByZero);
        }
        let d = self.dlog[beta.code as usize];
        if !d.is_multiple_of(q + 1) {
            return Err(Error::NotInSubfield);
        }
        Ok(FieldElem {
            code: self.exp[(d / (q + 1)) as usize],
            ctx: self.id,
        })
    }

    /// Deterministic enumeration of all field elements: 0 first, then
    /// omega^0, omega^1, … in exponent order.
    pub fn elements(&self) -> Vec<FieldElem> {
        let mut v = Vec::with_capacity(self.order as usize);
        v.push(self.zero());
        for t in 0..self.order - 1 {
            v.push(FieldElem {
                code: self.exp[t as usize],
                ctx: self.id,
            });
        }
        v
    }

    /// Render an element as "0" or "w^t" with t its discrete log.
    pub fn elem_to_string(&self, a: FieldElem) -> String {
        if a.code == 0 {
            "0".to_string()
        } else {
            format!("w^{}", self.dlog[a.code as usize])
        }
    }

    /// Parse the rendering produced by [`elem_to_string`](Self::elem_to_string).
    pub fn elem_from_string(&self, s: &str) -> Result<FieldElem> {
        if s == "0" {
            return Ok(self.zero());
        }
        let t = s
            .strip_prefix("w^")
            .and_then(|t| t.parse::<u64>().ok())
            .ok_or(Error::FieldMismatch)?;
        Ok(self.omega_pow(t))
    }
}

/// A fixed field embedding `F_{p^e} → F_{p^{2e}}`.
///
/// The image of the small field's basis element x is the smallest root (in
/// packed-code order) of the small modulus inside the big field, which makes
/// the map a ring homomorphism; the prime field embeds canonically.
pub struct Embedding {
    small_id: u32,
    big_id: u32,
    map: Vec<u32>,
}

impl Embedding {
    pub fn new(small: &FieldCtx, big: &FieldCtx) -> Result<Embedding> {
        if small.p != big.p || big.e != 2 * small.e {
            return Err(Error::IncompatibleTower);
        }
        let map = if small.e == 1 {
            // prime subfield: integer codes coincide
            (0..small.order).collect()
        } else {
            // smallest root of the small modulus inside the big field
            let mut root = None;
            for c in 0..big.order {
                let mut val = 0u32; // Horner on the small modulus at c
                for &coef in small.modulus.iter().rev() {
                    val = big.add_code(big.mul_code(val, c), coef % big.p);
                }
                if val == 0 {
                    root = Some(c);
                    break;
                }
            }
            let root = root.ok_or(Error::IncompatibleTower)?;
            (0..small.order)
                .map(|code| {
                    let digits = code_to_digits(code, small.p, small.e as usize);
                    let mut val = 0u32;
                    for &coef in digits.iter().rev() {
                        val = big.add_code(big.mul_code(val, root), coef);
                    }
                    val
                })
                .collect()
        };
        Ok(Embedding {
            small_id: small.id,
            big_id: big.id,
            map,
        })
    }

    pub fn embed(&self, big: &FieldCtx, x: FieldElem) -> Result<FieldElem> {
        if x.ctx != self.small_id || big.id != self.big_id {
            return Err(Error::IncompatibleTower);
        }
        Ok(FieldElem {
            code: self.map[x.code as usize],
            ctx: self.big_id,
        })
    }
}

/// One-shot convenience around [`Embedding`]: embed a single element of
/// `small` into `big` (recomputes the embedding each call).
pub fn subfield_embed(small: &FieldCtx, big: &FieldCtx, x: FieldElem) -> Result<FieldElem> {
    Embedding::new(small, big)?.embed(big, x)
}
