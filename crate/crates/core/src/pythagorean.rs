//! Primitive Pythagorean triples `(α, β, γ) = (m²+n², 2mn, m²-n²)` and their
//! closed-form tangent-circle diameters.

use std::fmt;

use crate::arith::{self, add, mul, square, sub, Natural};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::geometry::{Diameters, TriangleSides};

/// Generating pair of a primitive triple: `m > n ≥ 1`, coprime, opposite parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimParams {
    m: Natural,
    n: Natural,
}

impl PrimParams {
    pub fn new(m: Natural, n: Natural) -> Result<Self> {
        if n == 0 || m <= n {
            return Err(Error::BadParams(format!("need m > n ≥ 1, got m = {m}, n = {n}")));
        }
        if (m + n).is_multiple_of(2) {
            return Err(Error::BadParams(format!("m + n = {} is even", m + n)));
        }
        if !arith::coprime(m, n) {
            return Err(Error::BadParams(format!("gcd({m}, {n}) ≠ 1")));
        }
        Ok(PrimParams { m, n })
    }

    pub fn m(&self) -> Natural {
        self.m
    }

    pub fn n(&self) -> Natural {
        self.n
    }
}

/// `alpha` is the hypotenuse, `beta` the even leg, `gamma` the odd leg.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimitiveTriple {
    pub params: PrimParams,
    pub alpha: Natural,
    pub beta: Natural,
    pub gamma: Natural,
}

impl PrimitiveTriple {
    pub fn from_params(params: PrimParams) -> Result<Self> {
        let (m, n) = (params.m, params.n);
        let (m2, n2) = (square(m)?, square(n)?);
        Ok(PrimitiveTriple {
            params,
            alpha: add(m2, n2)?,
            beta: mul(mul(2, m)?, n)?,
            gamma: m2 - n2,
        })
    }

    pub fn as_tuple(&self) -> (Natural, Natural, Natural) {
        (self.alpha, self.beta, self.gamma)
    }

    pub fn sides(&self) -> TriangleSides {
        // A right triangle always satisfies the strict inequalities.
        TriangleSides::new(self.alpha, self.beta, self.gamma).expect("right triangle")
    }

    pub fn diameters(&self) -> Result<Diameters<Natural>> {
        pyth_diameters(&self.params)
    }
}

impl fmt::Display for PrimitiveTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

pub fn make_primitive(m: Natural, n: Natural) -> Result<PrimitiveTriple> {
    PrimitiveTriple::from_params(PrimParams::new(m, n)?)
}

/// The δ-multiple `(δα, δβ, δγ)` of a primitive triple.
pub fn scale(t: &PrimitiveTriple, delta: Natural) -> Result<TriangleSides> {
    if delta == 0 {
        return Err(Error::BadParams("scale factor must be positive".into()));
    }
    TriangleSides::new(mul(delta, t.alpha)?, mul(delta, t.beta)?, mul(delta, t.gamma)?)
}

/// `(2n(m-n), 2m(m+n), 2n(m+n), 2m(m-n))` for incircle and the excircles on
/// α, β, γ.
pub fn pyth_diameters(p: &PrimParams) -> Result<Diameters<Natural>> {
    let (m, n) = (p.m, p.n);
    let (sum, diff) = (add(m, n)?, m - n);
    let (two_m, two_n) = (mul(2, m)?, mul(2, n)?);
    Ok(Diameters {
        d: mul(two_n, diff)?,
        d_a: mul(two_m, sum)?,
        d_b: mul(two_n, sum)?,
        d_g: mul(two_m, diff)?,
    })
}

/// Generating pair of a primitive right triangle given in any side order.
pub fn recover_params(t: &TriangleSides) -> Result<PrimParams> {
    let mut sides = [t.a(), t.b(), t.c()];
    sides.sort_unstable();
    let [x, y, hyp] = sides;
    if square(hyp)? != add(square(x)?, square(y)?)? {
        return Err(Error::NotPythagorean);
    }
    if !arith::coprime(x, y) {
        return Err(Error::NotPrimitive);
    }
    let (beta, gamma) = match (x % 2, y % 2) {
        (0, 1) => (x, y),
        (1, 0) => (y, x),
        _ => return Err(Error::NotPrimitive),
    };
    let m2 = add(hyp, gamma)? / 2;
    let n2 = sub(hyp, gamma)? / 2;
    let (Some(m), Some(n)) = (arith::square_root(m2), arith::square_root(n2)) else {
        return Err(Error::NotPrimitive);
    };
    let params = PrimParams::new(m, n).map_err(|_| Error::NotPrimitive)?;
    debug_assert_eq!(mul(2, mul(m, n)?)?, beta);
    Ok(params)
}

/// Largest `m` with `m² + 1 ≤ alpha_max`.
pub(crate) fn max_m(alpha_max: Natural) -> Natural {
    alpha_max.saturating_sub(1).isqrt()
}

/// Primitive triples with generating pair `(m, n)` for one fixed `m` and
/// hypotenuse at most `alpha_max`, ascending in `n`.
pub fn primitives_with_m(m: Natural, alpha_max: Natural) -> impl Iterator<Item = PrimitiveTriple> {
    let m2 = m.saturating_mul(m);
    let n_max = if m2 >= alpha_max {
        0
    } else {
        (alpha_max - m2).isqrt().min(m.saturating_sub(1))
    };
    // Opposite parity: n starts at 1 for even m, 2 for odd m.
    let first = if m.is_multiple_of(2) { 1 } else { 2 };
    (first..=n_max)
        .step_by(2)
        .filter(move |&n| arith::coprime(m, n))
        .map(move |n| {
            let (n2, beta) = (n * n, 2 * m * n);
            PrimitiveTriple {
                params: PrimParams { m, n },
                alpha: m2 + n2,
                beta,
                gamma: m2 - n2,
            }
        })
}

/// Every primitive triple with `α ≤ alpha_max`, each exactly once, in
/// lexicographic `(m, n)` order.
pub fn enumerate_primitive(alpha_max: Natural) -> impl Iterator<Item = PrimitiveTriple> {
    (2..=max_m(alpha_max)).flat_map(move |m| primitives_with_m(m, alpha_max))
}

/// [`enumerate_primitive`] collected with the given strategy; the order is the
/// same.
pub fn primitive_triples(alpha_max: Natural, exec: Exec) -> Result<Vec<PrimitiveTriple>> {
    let top = u64::try_from(max_m(alpha_max)).map_err(|_| Error::OverflowDetected)?;
    if top < 2 {
        return Ok(Vec::new());
    }
    Ok(exec.flat_map(2..=top, |m| primitives_with_m(m as Natural, alpha_max).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(a: Natural, b: Natural, c: Natural) -> TriangleSides {
        TriangleSides::new(a, b, c).unwrap()
    }

    #[test]
    fn make_primitive_examples() {
        assert_eq!(make_primitive(2, 1).unwrap().as_tuple(), (5, 4, 3));
        assert_eq!(make_primitive(8, 1).unwrap().as_tuple(), (65, 16, 63));
        assert!(matches!(make_primitive(3, 1), Err(Error::BadParams(_))));
        assert!(matches!(make_primitive(1, 2), Err(Error::BadParams(_))));
        assert!(matches!(make_primitive(6, 3), Err(Error::BadParams(_))));
        assert!(matches!(make_primitive(4, 0), Err(Error::BadParams(_))));
        assert_eq!(make_primitive(1 << 64, 1), Err(Error::OverflowDetected));
    }

    #[test]
    fn scale_examples() {
        let t = make_primitive(2, 1).unwrap();
        assert_eq!(scale(&t, 1), Ok(tri(5, 4, 3)));
        assert_eq!(scale(&t, 2), Ok(tri(10, 8, 6)));
        assert_eq!(scale(&make_primitive(8, 1).unwrap(), 3), Ok(tri(195, 48, 189)));
        assert!(scale(&t, 0).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let list = |a| enumerate_primitive(a).map(|t| t.as_tuple()).collect::<Vec<_>>();
        assert_eq!(list(5), vec![(5, 4, 3)]);
        assert_eq!(
            list(30),
            vec![(5, 4, 3), (13, 12, 5), (17, 8, 15), (25, 24, 7), (29, 20, 21)]
        );
        assert!(list(4).is_empty());
        assert!(list(0).is_empty());
    }

    #[test]
    fn parallel_enumeration_matches_sequential() {
        let seq: Vec<_> = enumerate_primitive(50_000).collect();
        assert_eq!(primitive_triples(50_000, Exec::Parallel).unwrap(), seq);
        assert_eq!(primitive_triples(50_000, Exec::Sequential).unwrap(), seq);
    }

    #[test]
    fn diameter_examples() {
        let d = |m, n| pyth_diameters(&PrimParams::new(m, n).unwrap()).unwrap().to_array();
        assert_eq!(d(2, 1), [2, 12, 6, 4]);
        assert_eq!(d(8, 1), [14, 144, 18, 112]);
        assert_eq!(d(17, 8), [144, 850, 400, 306]);
    }

    #[test]
    fn recover_examples() {
        let r = |a, b, c| recover_params(&tri(a, b, c)).map(|p| (p.m(), p.n()));
        assert_eq!(r(5, 4, 3), Ok((2, 1)));
        assert_eq!(r(3, 5, 4), Ok((2, 1)));
        assert_eq!(r(65, 16, 63), Ok((8, 1)));
        assert_eq!(r(3425, 3136, 1377), Ok((49, 32)));
        assert_eq!(r(10, 8, 6), Err(Error::NotPrimitive));
        assert_eq!(r(6, 4, 3), Err(Error::NotPythagorean));
    }
}
