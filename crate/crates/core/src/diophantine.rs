//! The equations `x² + 2y² = z²` (equation A) and `x² + y² = 2z²`
//! (equation B) in coprime positive integers.
//!
//! Equation A is solved completely by `(|k²-2λ²|, 2kλ, k²+2λ²)` with `k` odd
//! and `gcd(k, λ) = 1`. Equation B is solved, up to swapping `x` and `y`, by
//! `(|k²+2kλ-λ²|, |-k²+2kλ+λ²|, k²+λ²)` with `k + λ` odd and
//! `gcd(k, λ) = 1`, except for `(1, 1, 1)`. Both parametrizations are checked
//! here against exhaustive scans.

use std::fmt;
use std::str::FromStr;

use crate::arith::{self, add, mul, square, Natural};
use crate::error::{Error, Result};
use crate::exec::Exec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Equation {
    /// `x² + 2y² = z²`
    A,
    /// `x² + y² = 2z²`
    B,
}

impl Equation {
    /// Whether `(x, y, z)` satisfies the equation (ignores coprimality).
    pub fn holds(self, x: Natural, y: Natural, z: Natural) -> Result<bool> {
        let (x2, y2, z2) = (square(x)?, square(y)?, square(z)?);
        Ok(match self {
            Equation::A => add(x2, mul(2, y2)?)? == z2,
            Equation::B => add(x2, y2)? == mul(2, z2)?,
        })
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Equation::A => "A",
            Equation::B => "B",
        })
    }
}

impl FromStr for Equation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Equation::A),
            "B" | "b" => Ok(Equation::B),
            other => Err(Error::BadParams(format!("unknown equation {other:?}, expected A or B"))),
        }
    }
}

/// A parametric solution together with the parameters that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiophSolution {
    pub equation: Equation,
    pub x: Natural,
    pub y: Natural,
    pub z: Natural,
    pub k: Natural,
    pub lam: Natural,
}

impl DiophSolution {
    pub fn xyz(&self) -> (Natural, Natural, Natural) {
        (self.x, self.y, self.z)
    }
}

pub fn gen_a(k: Natural, lam: Natural) -> Result<DiophSolution> {
    if k == 0 || lam == 0 {
        return Err(Error::BadParams("parameters must be positive".into()));
    }
    if k.is_multiple_of(2) {
        return Err(Error::BadParams(format!("k = {k} must be odd")));
    }
    if !arith::coprime(k, lam) {
        return Err(Error::BadParams(format!("gcd({k}, {lam}) ≠ 1")));
    }
    let (k2, l2) = (square(k)?, mul(2, square(lam)?)?);
    // k² is odd and 2λ² even, so x never vanishes.
    let s = DiophSolution {
        equation: Equation::A,
        x: k2.abs_diff(l2),
        y: mul(mul(2, k)?, lam)?,
        z: add(k2, l2)?,
        k,
        lam,
    };
    debug_assert!(Equation::A.holds(s.x, s.y, s.z).unwrap_or(true));
    Ok(s)
}

pub fn gen_b(k: Natural, lam: Natural) -> Result<DiophSolution> {
    if k == 0 || lam == 0 {
        return Err(Error::BadParams("parameters must be positive".into()));
    }
    if (k + lam).is_multiple_of(2) {
        return Err(Error::BadParams(format!("k + λ = {} must be odd", k + lam)));
    }
    if !arith::coprime(k, lam) {
        return Err(Error::BadParams(format!("gcd({k}, {lam}) ≠ 1")));
    }
    let (k2, l2, cross) = (square(k)?, square(lam)?, mul(mul(2, k)?, lam)?);
    // |k² + 2kλ - λ²| and |-k² + 2kλ + λ²|; neither vanishes since 2 is not a
    // rational square.
    let s = DiophSolution {
        equation: Equation::B,
        x: add(k2, cross)?.abs_diff(l2),
        y: add(l2, cross)?.abs_diff(k2),
        z: add(k2, l2)?,
        k,
        lam,
    };
    debug_assert!(Equation::B.holds(s.x, s.y, s.z).unwrap_or(true));
    Ok(s)
}

fn sort_solutions(mut out: Vec<DiophSolution>) -> Vec<DiophSolution> {
    out.sort_unstable_by_key(|s| (s.z, s.x, s.y, s.k, s.lam));
    out.dedup_by_key(|s| s.xyz());
    out
}

/// All parametric solutions with `z ≤ z_max`, ordered by `(z, x)`, one per
/// solution value. Equation B solutions are oriented `x < y`.
pub fn enumerate_solutions(eq: Equation, z_max: Natural, exec: Exec) -> Result<Vec<DiophSolution>> {
    let k_max = u64::try_from(z_max.isqrt()).map_err(|_| Error::OverflowDetected)?;
    if k_max == 0 {
        return Ok(Vec::new());
    }
    let per_k = |k: u64| -> Vec<DiophSolution> {
        let k = k as Natural;
        let k2 = k * k;
        let mut row = Vec::new();
        match eq {
            Equation::A => {
                if k.is_multiple_of(2) {
                    return row;
                }
                let mut lam: Natural = 1;
                while k2.saturating_add(lam.saturating_mul(lam).saturating_mul(2)) <= z_max {
                    if let Ok(s) = gen_a(k, lam) {
                        row.push(s);
                    }
                    lam += 1;
                }
            }
            Equation::B => {
                let mut lam: Natural = 1;
                while k2.saturating_add(lam.saturating_mul(lam)) <= z_max {
                    if let Ok(s) = gen_b(k, lam) {
                        // The swapped orientation comes from (λ, k).
                        if s.x < s.y {
                            row.push(s);
                        }
                    }
                    lam += 1;
                }
            }
        }
        row
    };
    Ok(sort_solutions(exec.flat_map(1..=k_max, per_k)))
}

/// Largest `z_max` the exhaustive scan accepts.
pub const BRUTE_Z_LIMIT: Natural = 1 << 31;

/// Exhaustive scan for coprime positive solutions with `z ≤ z_max`, ordered
/// by `(z, x)`. Equation B solutions are reported with `x ≤ y` and include
/// `(1, 1, 1)`.
pub fn brute_solutions(
    eq: Equation,
    z_max: Natural,
    exec: Exec,
) -> Result<Vec<(Natural, Natural, Natural)>> {
    if z_max > BRUTE_Z_LIMIT {
        return Err(Error::RangeViolation(format!(
            "exhaustive scan limited to z ≤ {BRUTE_Z_LIMIT}"
        )));
    }
    if z_max == 0 {
        return Ok(Vec::new());
    }
    let per_z = |z: u64| -> Vec<(u64, u64, u64)> {
        let z2 = z * z;
        let mut row = Vec::new();
        match eq {
            Equation::A => {
                // x² = z² - 2y² > 0
                let mut y = 1u64;
                while 2 * y * y < z2 {
                    let x2 = z2 - 2 * y * y;
                    let x = x2.isqrt();
                    if x * x == x2 && num_integer::gcd(x, y) == 1 {
                        row.push((x, y, z));
                    }
                    y += 1;
                }
            }
            Equation::B => {
                // y² = 2z² - x² ≥ x² exactly when x ≤ z
                for x in 1..=z {
                    let y2 = 2 * z2 - x * x;
                    let y = y2.isqrt();
                    if y * y == y2 && num_integer::gcd(x, y) == 1 {
                        row.push((x, y, z));
                    }
                }
            }
        }
        row.sort_unstable();
        row
    };
    let top = z_max as u64;
    Ok(exec
        .flat_map(1..=top, per_z)
        .into_iter()
        .map(|(x, y, z)| (x as Natural, y as Natural, z as Natural))
        .collect())
}

/// Parameters `(K, λ)` of a solution of equation B, read off the slope of the
/// chord through `(1, 1)` and the rational point `(x/z, y/z)` on
/// `X² + Y² = 2`. The returned pair satisfies `gen_b(K, λ) = (x, y, z)`.
///
/// The slope `(y-z)/(x-z) = -K/λ` gives parameters of opposite parity
/// directly; when the reduced `K` and `λ` are both odd, the chord to the
/// reflected point `(x/z, -y/z)` or `(-x/z, y/z)` is used instead, whichever
/// has negative slope.
pub fn recover_chord_params(x: Natural, y: Natural, z: Natural) -> Result<(Natural, Natural)> {
    if x == 0 || y == 0 || z == 0 {
        return Err(Error::PreconditionViolated("coordinates must be positive".into()));
    }
    if !Equation::B.holds(x, y, z)? {
        return Err(Error::PreconditionViolated(format!("({x}, {y}, {z}) does not satisfy x² + y² = 2z²")));
    }
    if !arith::coprime(x, y) {
        return Err(Error::PreconditionViolated(format!("gcd({x}, {y}) ≠ 1")));
    }
    if (x, y, z) == (1, 1, 1) {
        return Err(Error::ExceptionalSolution);
    }
    let signed = |v: Natural| i128::try_from(v).map_err(|_| Error::OverflowDetected);
    let (xs, ys, zs) = (signed(x)?, signed(y)?, signed(z)?);
    for (sx, sy) in [(1, 1), (1, -1), (-1, 1)] {
        let rise = sy * ys - zs;
        let run = sx * xs - zs;
        // x = z forces y = z, excluded above; a reflected point never has run 0.
        if run == 0 || (rise < 0) == (run < 0) {
            continue;
        }
        let g = num_integer::gcd(rise, run);
        let (big_k, lam) = (rise.unsigned_abs() / g.unsigned_abs(), run.unsigned_abs() / g.unsigned_abs());
        if (big_k + lam) % 2 == 1 {
            debug_assert_eq!(gen_b(big_k, lam).map(|s| s.xyz()), Ok((x, y, z)));
            return Ok((big_k, lam));
        }
    }
    Err(Error::PreconditionViolated(format!(
        "no chord parameters of opposite parity for ({x}, {y}, {z})"
    )))
}
