//! Exact integer primitives.
//!
//! Every quantity is a [`Natural`] (`u128`). Arithmetic that can exceed the
//! width goes through the checked helpers here, which report
//! [`Error::OverflowDetected`] instead of wrapping.
//!
//! The factorization lemmas for coprime pairs live here as operations:
//! a coprime pair whose product is a perfect power splits into two perfect
//! powers, and the same holds, up to one prime factor, when the product is a
//! prime times a power or the prime times the product is a power.

use crate::error::{Error, Result};

pub type Natural = u128;

#[inline]
pub fn add(a: Natural, b: Natural) -> Result<Natural> {
    a.checked_add(b).ok_or(Error::OverflowDetected)
}

#[inline]
pub fn sub(a: Natural, b: Natural) -> Result<Natural> {
    a.checked_sub(b).ok_or(Error::OverflowDetected)
}

#[inline]
pub fn mul(a: Natural, b: Natural) -> Result<Natural> {
    a.checked_mul(b).ok_or(Error::OverflowDetected)
}

#[inline]
pub fn square(a: Natural) -> Result<Natural> {
    mul(a, a)
}

#[inline]
pub fn pow(a: Natural, n: u32) -> Result<Natural> {
    a.checked_pow(n).ok_or(Error::OverflowDetected)
}

/// Greatest common divisor, with `gcd(0, 0) = 0`.
#[inline]
pub fn gcd(a: Natural, b: Natural) -> Natural {
    num_integer::gcd(a, b)
}

#[inline]
pub fn coprime(a: Natural, b: Natural) -> bool {
    gcd(a, b) == 1
}

/// Floor of an integer root together with an exactness flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IsqrtResult {
    pub root: Natural,
    pub exact: bool,
}

impl IsqrtResult {
    /// The root when the input was a perfect power.
    pub fn exact_root(self) -> Option<Natural> {
        self.exact.then_some(self.root)
    }
}

pub fn isqrt(v: Natural) -> IsqrtResult {
    let root = v.isqrt();
    IsqrtResult {
        root,
        exact: root * root == v,
    }
}

/// `Some(r)` when `v = r²`.
#[inline]
pub fn square_root(v: Natural) -> Option<Natural> {
    isqrt(v).exact_root()
}

#[inline]
pub fn is_square(v: Natural) -> bool {
    isqrt(v).exact
}

/// Floor n-th root by integer Newton iteration, exactness checked by powering
/// back. `n` must be at least 1.
pub fn nth_root(v: Natural, n: u32) -> Result<IsqrtResult> {
    match n {
        0 => return Err(Error::PreconditionViolated("root exponent must be positive".into())),
        1 => return Ok(IsqrtResult { root: v, exact: true }),
        2 => return Ok(isqrt(v)),
        _ => {}
    }
    if v < 2 {
        return Ok(IsqrtResult { root: v, exact: true });
    }
    let bits = Natural::BITS - v.leading_zeros();
    let wide = Natural::from(n);
    // Start above the root; Newton then decreases monotonically onto the floor.
    let mut x: Natural = 1 << bits.div_ceil(n);
    loop {
        let quotient = x.checked_pow(n - 1).map_or(0, |p| v / p);
        // A quotient above x means the next iterate cannot decrease.
        if quotient >= x {
            break;
        }
        let next = ((wide - 1) * x + quotient) / wide;
        if next >= x {
            break;
        }
        x = next;
    }
    Ok(IsqrtResult {
        root: x,
        exact: x.checked_pow(n) == Some(v),
    })
}

/// Trial division; adequate for the small primes the families use.
pub fn is_prime(p: Natural) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d: Natural = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Given coprime `a`, `b` whose product is an n-th power, return `(c1, c2)`
/// with `a = c1ⁿ`, `b = c2ⁿ`.
pub fn split_coprime_power(a: Natural, b: Natural, n: u32) -> Result<(Natural, Natural)> {
    if a == 0 || b == 0 {
        return Err(Error::PreconditionViolated("arguments must be positive".into()));
    }
    if n < 2 {
        return Err(Error::PreconditionViolated("exponent must be at least 2".into()));
    }
    if !coprime(a, b) {
        return Err(Error::NotACoprimePair);
    }
    let (ra, rb) = (nth_root(a, n)?, nth_root(b, n)?);
    if ra.exact && rb.exact {
        return Ok((ra.root, rb.root));
    }
    // Report the product when it fits, else whichever factor failed.
    let value = a
        .checked_mul(b)
        .unwrap_or(if ra.exact { b } else { a });
    Err(Error::NotAPerfectPower { value, exponent: n })
}

/// Which argument of a prime split carries the prime factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeSplit {
    pub side: Side,
    pub c1: Natural,
    pub c2: Natural,
    /// The base `c` of the power in the hypothesis.
    pub c: Natural,
}

fn check_prime_split_args(p: Natural, a: Natural, b: Natural, n: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::PreconditionViolated(format!("{p} is not prime")));
    }
    if a == 0 || b == 0 {
        return Err(Error::PreconditionViolated("arguments must be positive".into()));
    }
    if n < 2 {
        return Err(Error::PreconditionViolated("exponent must be at least 2".into()));
    }
    if !coprime(a, b) {
        return Err(Error::NotACoprimePair);
    }
    Ok(())
}

/// Coprime `a`, `b` with `a·b = p·cⁿ`: one of them is `p` times an n-th power
/// and the other an n-th power. Returns `c1`, `c2` with
/// `a = p·c1ⁿ, b = c2ⁿ` (side [`Side::Left`]) or `a = c1ⁿ, b = p·c2ⁿ`
/// (side [`Side::Right`]), and `c = c1·c2`.
pub fn split_coprime_prime_power(p: Natural, a: Natural, b: Natural, n: u32) -> Result<PrimeSplit> {
    check_prime_split_args(p, a, b, n)?;
    let (side, with_p, without_p) = if a.is_multiple_of(p) {
        (Side::Left, a, b)
    } else if b.is_multiple_of(p) {
        (Side::Right, b, a)
    } else {
        return Err(Error::PreconditionViolated(format!("{p} divides neither argument")));
    };
    let reduced = with_p / p;
    let roots = (nth_root(reduced, n)?, nth_root(without_p, n)?);
    let (IsqrtResult { root: r_p, exact: true }, IsqrtResult { root: r, exact: true }) = roots else {
        return Err(Error::PreconditionViolated(format!(
            "{a}·{b}/{p} is not a perfect {n}-th power"
        )));
    };
    let (c1, c2) = match side {
        Side::Left => (r_p, r),
        Side::Right => (r, r_p),
    };
    Ok(PrimeSplit { side, c1, c2, c: mul(c1, c2)? })
}

/// Coprime `a`, `b` with `p·a·b = cⁿ`: one of them is `p^(n-1)` times an n-th
/// power and the other an n-th power. Returns `c1`, `c2` with
/// `a = p^(n-1)·c1ⁿ, b = c2ⁿ` (side [`Side::Left`]) or the mirror image, and
/// `c = p·c1·c2`.
pub fn split_prime_scaled_power(p: Natural, a: Natural, b: Natural, n: u32) -> Result<PrimeSplit> {
    check_prime_split_args(p, a, b, n)?;
    let (side, with_p, without_p) = if a.is_multiple_of(p) {
        (Side::Left, a, b)
    } else if b.is_multiple_of(p) {
        (Side::Right, b, a)
    } else {
        return Err(Error::PreconditionViolated(format!("{p} divides neither argument")));
    };
    let scale = pow(p, n - 1)?;
    if with_p % scale != 0 {
        return Err(Error::PreconditionViolated(format!(
            "{p}^{} does not divide {with_p}",
            n - 1
        )));
    }
    let roots = (nth_root(with_p / scale, n)?, nth_root(without_p, n)?);
    let (IsqrtResult { root: r_p, exact: true }, IsqrtResult { root: r, exact: true }) = roots else {
        return Err(Error::PreconditionViolated(format!(
            "{p}·{a}·{b} is not a perfect {n}-th power"
        )));
    };
    let (c1, c2) = match side {
        Side::Left => (r_p, r),
        Side::Right => (r, r_p),
    };
    Ok(PrimeSplit { side, c1, c2, c: mul(mul(p, c1)?, c2)? })
}
