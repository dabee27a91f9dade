//! Incircle and excircle diameters of integer-sided triangles.
//!
//! With `P = a+b+c` and the three reduced perimeters `Pa = -a+b+c`,
//! `Pb = a-b+c`, `Pc = a+b-c`, the Heron product `H = P·Pa·Pb·Pc` equals
//! `16·AREA²`. The four diameters are `4·AREA` divided by `P`, `Pa`, `Pb`,
//! `Pc`, so their squares are the exact rationals `H/P²`, `H/Pa²`, `H/Pb²`,
//! `H/Pc²`. For a right triangle with hypotenuse `a` all four are integers:
//! `(b+c-a, a+b+c, a+b-c, a-b+c)`.

use num_rational::Ratio;

use crate::arith::{self, add, mul, square, Natural};
use crate::error::{Error, Result};

/// Exact non-negative rational, always held in lowest terms.
pub type Rational = Ratio<Natural>;

/// Side lengths `(a, b, c)`; `a` is the side the first excircle touches and
/// the hypotenuse of a right triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangleSides {
    a: Natural,
    b: Natural,
    c: Natural,
}

impl TriangleSides {
    pub fn new(a: Natural, b: Natural, c: Natural) -> Result<Self> {
        let invalid = || Error::InvalidTriangle(a, b, c);
        if a == 0 || b == 0 || c == 0 {
            return Err(invalid());
        }
        let (ab, ac, bc) = (
            add(a, b).map_err(|_| invalid())?,
            add(a, c).map_err(|_| invalid())?,
            add(b, c).map_err(|_| invalid())?,
        );
        if ab <= c || ac <= b || bc <= a {
            return Err(invalid());
        }
        // The perimeter must fit too.
        add(ab, c)?;
        Ok(TriangleSides { a, b, c })
    }

    pub fn a(&self) -> Natural {
        self.a
    }

    pub fn b(&self) -> Natural {
        self.b
    }

    pub fn c(&self) -> Natural {
        self.c
    }

    pub fn as_tuple(&self) -> (Natural, Natural, Natural) {
        (self.a, self.b, self.c)
    }

    pub fn perimeter(&self) -> Natural {
        self.a + self.b + self.c
    }

    /// `(P, Pa, Pb, Pc)`; each is positive by the triangle inequalities.
    pub fn perimeters(&self) -> [Natural; 4] {
        let (a, b, c) = self.as_tuple();
        [a + b + c, b + c - a, a + c - b, a + b - c]
    }
}

/// `(a+b+c)(-a+b+c)(a-b+c)(a+b-c)`, i.e. sixteen times the squared area.
pub fn heron16(s: &TriangleSides) -> Result<Natural> {
    s.perimeters().into_iter().try_fold(1, mul)
}

/// The four tangent-circle diameters, named after the circle they belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Diameters<T> {
    /// Incircle.
    pub d: T,
    /// Excircle tangent to side `a`.
    pub d_a: T,
    /// Excircle tangent to side `b`.
    pub d_b: T,
    /// Excircle tangent to side `c`.
    pub d_g: T,
}

impl<T: Copy> Diameters<T> {
    pub fn to_array(&self) -> [T; 4] {
        [self.d, self.d_a, self.d_b, self.d_g]
    }

    pub fn map<U>(&self, mut f: impl FnMut(T) -> U) -> Diameters<U> {
        Diameters {
            d: f(self.d),
            d_a: f(self.d_a),
            d_b: f(self.d_b),
            d_g: f(self.d_g),
        }
    }
}

impl Diameters<Natural> {
    /// Product of the four diameters.
    pub fn product(&self) -> Result<Natural> {
        self.to_array().into_iter().try_fold(1, mul)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiameterSquares {
    pub squares: Diameters<Rational>,
    pub heron16: Natural,
}

impl DiameterSquares {
    /// Diameters that are integers, i.e. whose square is an integer square.
    pub fn integer_diameters(&self) -> Diameters<Option<Natural>> {
        self.squares.map(|q| {
            if *q.denom() == 1 {
                arith::square_root(*q.numer())
            } else {
                None
            }
        })
    }

    /// Whether the squared diameters multiply to `heron16²`.
    pub fn product_identity_holds(&self) -> Result<bool> {
        let mut product = Rational::from_integer(1);
        for q in self.squares.to_array() {
            let numer = mul(*product.numer(), *q.numer())?;
            let denom = mul(*product.denom(), *q.denom())?;
            product = Rational::new(numer, denom);
        }
        Ok(product == Rational::from_integer(square(self.heron16)?))
    }
}

pub fn diameter_squares(s: &TriangleSides) -> Result<DiameterSquares> {
    let h = heron16(s)?;
    let [p, pa, pb, pc] = s.perimeters();
    let over = |den: Natural| -> Result<Rational> { Ok(Rational::new(h, square(den)?)) };
    Ok(DiameterSquares {
        squares: Diameters {
            d: over(p)?,
            d_a: over(pa)?,
            d_b: over(pb)?,
            d_g: over(pc)?,
        },
        heron16: h,
    })
}

/// Integer diameters of a right triangle whose hypotenuse is side `a`.
pub fn right_diameters(s: &TriangleSides) -> Result<Diameters<Natural>> {
    let (a, b, c) = s.as_tuple();
    if square(a)? != add(square(b)?, square(c)?)? {
        return Err(Error::NotRightTriangle(a, b, c));
    }
    Ok(Diameters {
        d: b + c - a,
        d_a: a + b + c,
        d_b: a + b - c,
        d_g: a + c - b,
    })
}

/// Triangle with sides `(k², (l²-k²+t)/2, (l²-k²-t)/2)`: one side a perfect
/// square and perimeter `l²`.
pub fn square_side_perimeter_triangle(k: Natural, l: Natural, t: i128) -> Result<TriangleSides> {
    if k == 0 {
        return Err(Error::RangeViolation("k must be positive".into()));
    }
    let k2 = square(k)?;
    let l2 = square(l)?;
    if l2 <= mul(2, k2)? {
        return Err(Error::RangeViolation(format!("l² = {l2} must exceed 2k² = {}", 2 * k2)));
    }
    if t.unsigned_abs() >= k2 {
        return Err(Error::RangeViolation(format!("|t| = {} must be below k² = {k2}", t.unsigned_abs())));
    }
    let rest = l2 - k2;
    if (rest % 2) != (t.unsigned_abs() % 2) {
        return Err(Error::ParityViolation(format!(
            "l² - k² = {rest} and t = {t} differ in parity"
        )));
    }
    // rest > k² > |t|, so both halves are positive.
    let (b, c) = if t >= 0 {
        (add(rest, t.unsigned_abs())? / 2, (rest - t.unsigned_abs()) / 2)
    } else {
        ((rest - t.unsigned_abs()) / 2, add(rest, t.unsigned_abs())? / 2)
    };
    TriangleSides::new(k2, b, c)
}
