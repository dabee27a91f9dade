//! Primitive triples with a square leg and a square tangent-circle diameter.
//!
//! There are eight ways to pair a leg (`β` even, `γ` odd) with one of the four
//! diameters. Two of them, `γ` with the excircle on `α` and `γ` with the
//! excircle on `γ`, are impossible: both diameters are `≡ 2 (mod 4)` when `γ`
//! is a square. The other six are realized by the two-parameter families
//! F1, F2, F3, F4 and F6; combinations 5 and 7 share F4.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::arith::{self, add, mul, square, Natural};
use crate::diophantine::{self, Equation};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::geometry::Diameters;
use crate::pythagorean::{self, make_primitive, PrimitiveTriple};

/// A named side or diameter of a primitive triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quantity {
    Beta,
    Gamma,
    /// Incircle diameter.
    D,
    DA,
    DB,
    DG,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::Beta => "beta",
            Quantity::Gamma => "gamma",
            Quantity::D => "d",
            Quantity::DA => "d_a",
            Quantity::DB => "d_b",
            Quantity::DG => "d_g",
        }
    }

    pub fn of(self, t: &PrimitiveTriple, diameters: &Diameters<Natural>) -> Natural {
        match self {
            Quantity::Beta => t.beta,
            Quantity::Gamma => t.gamma,
            Quantity::D => diameters.d,
            Quantity::DA => diameters.d_a,
            Quantity::DB => diameters.d_b,
            Quantity::DG => diameters.d_g,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

const DIAMETERS: [Quantity; 4] = [Quantity::D, Quantity::DA, Quantity::DB, Quantity::DG];

/// One of the eight leg/diameter pairings, numbered 1 through 8: `β` with
/// `2ρ, 2ρ_α, 2ρ_β, 2ρ_γ` are 1–4 and `γ` with the same diameters are 5–8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Combination(u8);

impl Combination {
    pub const ALL: [Combination; 8] = [
        Combination(1),
        Combination(2),
        Combination(3),
        Combination(4),
        Combination(5),
        Combination(6),
        Combination(7),
        Combination(8),
    ];

    pub fn new(id: u8) -> Result<Self> {
        if (1..=8).contains(&id) {
            Ok(Combination(id))
        } else {
            Err(Error::BadParams(format!("combination {id} is not in 1..=8")))
        }
    }

    pub fn id(self) -> u8 {
        self.0
    }

    pub fn leg(self) -> Quantity {
        if self.0 <= 4 {
            Quantity::Beta
        } else {
            Quantity::Gamma
        }
    }

    pub fn diameter(self) -> Quantity {
        DIAMETERS[usize::from((self.0 - 1) % 4)]
    }

    /// The family realizing this combination; `None` for the impossible 6 and 8.
    pub fn family(self) -> Option<FamilyId> {
        match self.0 {
            1 => Some(FamilyId::F6),
            2 => Some(FamilyId::F1),
            3 => Some(FamilyId::F2),
            4 => Some(FamilyId::F3),
            5 | 7 => Some(FamilyId::F4),
            _ => None,
        }
    }

    fn bit(self) -> u8 {
        1 << (self.0 - 1)
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Small set of combinations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct CombinationSet(u8);

impl CombinationSet {
    pub fn insert(&mut self, c: Combination) {
        self.0 |= c.bit();
    }

    pub fn contains(&self, c: Combination) -> bool {
        self.0 & c.bit() != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Combination> + '_ {
        Combination::ALL.into_iter().filter(|c| self.contains(*c))
    }

    pub fn ids(&self) -> Vec<u8> {
        self.iter().map(Combination::id).collect()
    }
}

impl FromIterator<Combination> for CombinationSet {
    fn from_iter<I: IntoIterator<Item = Combination>>(iter: I) -> Self {
        let mut set = CombinationSet::default();
        for c in iter {
            set.insert(c);
        }
        set
    }
}

/// Which leg-square decomposition of `β = 2mn` to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvenLegVariant {
    /// `m = 2t1²`, `n = t2²`
    MEven,
    /// `m = t1²`, `n = 2t2²`
    NEven,
}

fn check_positive_coprime(a: Natural, b: Natural) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::BadParams("parameters must be positive".into()));
    }
    if !arith::coprime(a, b) {
        return Err(Error::BadParams(format!("gcd({a}, {b}) ≠ 1")));
    }
    Ok(())
}

/// Primitive triple whose even leg `β = 2mn` is the square of `2·t1·t2`.
pub fn prop1_even_leg(t1: Natural, t2: Natural, variant: EvenLegVariant) -> Result<PrimitiveTriple> {
    check_positive_coprime(t1, t2)?;
    let (s1, s2) = (square(t1)?, square(t2)?);
    let (m, n) = match variant {
        EvenLegVariant::MEven => {
            if t2.is_multiple_of(2) {
                return Err(Error::BadParams(format!("t2 = {t2} must be odd")));
            }
            (mul(2, s1)?, s2)
        }
        EvenLegVariant::NEven => {
            if t1.is_multiple_of(2) {
                return Err(Error::BadParams(format!("t1 = {t1} must be odd")));
            }
            (s1, mul(2, s2)?)
        }
    };
    if m <= n {
        return Err(Error::BadParams(format!("m = {m} must exceed n = {n}")));
    }
    make_primitive(m, n)
}

/// Primitive triple whose odd leg `γ = m² - n²` is the square of `t1² - t2²`,
/// with `m = t1² + t2²` and `n = 2·t1·t2`. The pair is taken unordered.
pub fn prop1_odd_leg(t1: Natural, t2: Natural) -> Result<PrimitiveTriple> {
    check_positive_coprime(t1, t2)?;
    if (t1 + t2).is_multiple_of(2) {
        return Err(Error::BadParams(format!("t1 + t2 = {} must be odd", t1 + t2)));
    }
    let (t1, t2) = (t1.max(t2), t1.min(t2));
    let m = add(square(t1)?, square(t2)?)?;
    let n = mul(mul(2, t1)?, t2)?;
    make_primitive(m, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    F1,
    F2,
    F3,
    /// Also realizes combination 7 (sometimes listed as F5).
    F4,
    F6,
}

impl FamilyId {
    pub const ALL: [FamilyId; 5] = [FamilyId::F1, FamilyId::F2, FamilyId::F3, FamilyId::F4, FamilyId::F6];

    pub fn combinations(self) -> &'static [Combination] {
        match self {
            FamilyId::F1 => &[Combination(2)],
            FamilyId::F2 => &[Combination(3)],
            FamilyId::F3 => &[Combination(4)],
            FamilyId::F4 => &[Combination(5), Combination(7)],
            FamilyId::F6 => &[Combination(1)],
        }
    }

    /// The square leg followed by the square diameters members carry.
    pub fn witnessed(self) -> &'static [Quantity] {
        match self {
            FamilyId::F1 => &[Quantity::Beta, Quantity::DA],
            FamilyId::F2 => &[Quantity::Beta, Quantity::DB],
            FamilyId::F3 => &[Quantity::Beta, Quantity::DG],
            FamilyId::F4 => &[Quantity::Gamma, Quantity::D, Quantity::DB],
            FamilyId::F6 => &[Quantity::Beta, Quantity::D],
        }
    }

    /// Families whose parameters are `κ` odd with `gcd(κ, λ) = 1`; the others
    /// need `κ + λ` odd instead.
    fn kappa_odd(self) -> bool {
        matches!(self, FamilyId::F1 | FamilyId::F2 | FamilyId::F6)
    }

    /// Increasing in both `κ` and `λ` and strictly below `√α` for every
    /// member, which bounds the parameter scan.
    fn growth(self, kappa: Natural, lam: Natural) -> Natural {
        let (k2, l2) = (kappa.saturating_mul(kappa), lam.saturating_mul(lam));
        match self {
            FamilyId::F1 | FamilyId::F2 => k2.saturating_mul(l2).saturating_mul(8),
            FamilyId::F3 => {
                let t1 = k2.saturating_add(l2);
                t1.saturating_mul(t1).saturating_mul(2)
            }
            FamilyId::F4 => k2.saturating_mul(k2).saturating_add(l2.saturating_mul(l2)),
            FamilyId::F6 => {
                let t1 = k2.saturating_add(l2.saturating_mul(2));
                t1.saturating_mul(t1)
            }
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyId::F1 => "F1",
            FamilyId::F2 => "F2",
            FamilyId::F3 => "F3",
            FamilyId::F4 => "F4",
            FamilyId::F6 => "F6",
        })
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "F1" => Ok(FamilyId::F1),
            "F2" => Ok(FamilyId::F2),
            "F3" => Ok(FamilyId::F3),
            "F4" | "F5" => Ok(FamilyId::F4),
            "F6" => Ok(FamilyId::F6),
            _ => Err(Error::BadParams(format!("unknown family {s:?}"))),
        }
    }
}

/// `(t1, t2)` from `(κ, λ)` exactly as the family formulas give them, without
/// reordering. `sign_variant` selects `t2 = |-κ² - 2κλ + λ²|` for F3.
pub fn family_parameters(
    f: FamilyId,
    kappa: Natural,
    lam: Natural,
    sign_variant: bool,
) -> Result<(Natural, Natural)> {
    check_positive_coprime(kappa, lam)?;
    if f.kappa_odd() && kappa.is_multiple_of(2) {
        return Err(Error::BadParams(format!("κ = {kappa} must be odd for {f}")));
    }
    if !f.kappa_odd() && (kappa + lam).is_multiple_of(2) {
        return Err(Error::BadParams(format!("κ + λ = {} must be odd for {f}", kappa + lam)));
    }
    if sign_variant && f != FamilyId::F3 {
        return Err(Error::BadParams(format!("{f} has no sign variant")));
    }
    let (k2, l2) = (square(kappa)?, square(lam)?);
    let cross = mul(mul(2, kappa)?, lam)?;
    Ok(match f {
        FamilyId::F1 => (cross, k2.abs_diff(mul(2, l2)?)),
        FamilyId::F2 => (k2.abs_diff(mul(2, l2)?), cross),
        FamilyId::F3 => {
            let t2 = if sign_variant {
                add(k2, cross)?.abs_diff(l2)
            } else {
                add(l2, cross)?.abs_diff(k2)
            };
            (add(k2, l2)?, t2)
        }
        FamilyId::F4 => (k2, l2),
        FamilyId::F6 => (add(k2, mul(2, l2)?)?, cross),
    })
}

/// The generating pair `(m, n)` a family builds from `(t1, t2)`, before the
/// `m > n` check.
pub fn family_mn(f: FamilyId, t1: Natural, t2: Natural) -> Result<(Natural, Natural)> {
    let (s1, s2) = (square(t1)?, square(t2)?);
    Ok(match f {
        FamilyId::F1 | FamilyId::F3 => (mul(2, s1)?, s2),
        FamilyId::F2 | FamilyId::F6 => (s1, mul(2, s2)?),
        FamilyId::F4 => (add(s1, s2)?, mul(mul(2, t1)?, t2)?),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyMember {
    pub family: FamilyId,
    pub kappa: Natural,
    pub lam: Natural,
    pub sign_variant: bool,
    pub t1: Natural,
    pub t2: Natural,
    pub m: Natural,
    pub n: Natural,
    pub triple: PrimitiveTriple,
    /// Square quantities with their integer roots, leg first.
    pub square_witnesses: Vec<(Quantity, Natural)>,
}

impl FamilyMember {
    pub fn combinations(&self) -> &'static [Combination] {
        self.family.combinations()
    }
}

/// The member of family `f` with parameters `(κ, λ)`. F4 parameters are
/// taken unordered and stored with `κ > λ`.
pub fn gen_family(f: FamilyId, kappa: Natural, lam: Natural, sign_variant: bool) -> Result<FamilyMember> {
    let (kappa, lam) = if f == FamilyId::F4 && kappa < lam { (lam, kappa) } else { (kappa, lam) };
    let (t1, t2) = family_parameters(f, kappa, lam, sign_variant)?;
    let (m, n) = family_mn(f, t1, t2)?;
    if m <= n {
        return Err(Error::ConstraintViolated(format!(
            "{f} with (κ, λ) = ({kappa}, {lam}) gives m = {m} ≤ n = {n}"
        )));
    }
    let triple = make_primitive(m, n).map_err(|e| match e {
        Error::BadParams(msg) => Error::ConstraintViolated(msg),
        other => other,
    })?;
    let diameters = triple.diameters()?;
    let square_witnesses = f
        .witnessed()
        .iter()
        .map(|&q| {
            let v = q.of(&triple, &diameters);
            arith::square_root(v)
                .map(|r| (q, r))
                .ok_or_else(|| Error::ConstraintViolated(format!("{q} = {v} is not a square in {triple}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FamilyMember {
        family: f,
        kappa,
        lam,
        sign_variant,
        t1,
        t2,
        m,
        n,
        triple,
        square_witnesses,
    })
}

/// All members of `f` with `α ≤ alpha_max`, one per triple, ordered by `α`
/// (then `β`).
pub fn enumerate_family(f: FamilyId, alpha_max: Natural, exec: Exec) -> Result<Vec<FamilyMember>> {
    let fits = |kappa: Natural, lam: Natural| {
        let g = f.growth(kappa, lam);
        g.saturating_mul(g) < alpha_max
    };
    let mut kappa_max: u64 = 0;
    while fits(Natural::from(kappa_max) + 1, 1) {
        kappa_max += 1;
    }
    if kappa_max == 0 {
        return Ok(Vec::new());
    }
    let variants: &[bool] = if f == FamilyId::F3 { &[false, true] } else { &[false] };
    let per_kappa = |kappa: u64| -> Vec<Result<FamilyMember>> {
        let kappa = Natural::from(kappa);
        let mut row = Vec::new();
        let mut lam: Natural = 1;
        while fits(kappa, lam) {
            for &v in variants {
                match gen_family(f, kappa, lam, v) {
                    Ok(member) if member.triple.alpha <= alpha_max => row.push(Ok(member)),
                    Ok(_) | Err(Error::BadParams(_)) | Err(Error::ConstraintViolated(_)) => {}
                    Err(other) => row.push(Err(other)),
                }
            }
            lam += 1;
        }
        row
    };
    let mut members = exec
        .flat_map(1..=kappa_max, per_kappa)
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    members.sort_by_key(|mb| (mb.triple.alpha, mb.triple.beta, mb.kappa, mb.lam, mb.sign_variant));
    members.dedup_by_key(|mb| mb.triple.as_tuple());
    Ok(members)
}

/// Every combination whose leg and diameter are both perfect squares.
pub fn classify_combinations(t: &PrimitiveTriple) -> Result<CombinationSet> {
    let diameters = t.diameters()?;
    let square_diameters = DIAMETERS.map(|q| arith::is_square(q.of(t, &diameters)));
    let mut set = CombinationSet::default();
    for (offset, leg) in [(0u8, t.beta), (4, t.gamma)] {
        if !arith::is_square(leg) {
            continue;
        }
        for (i, &sq) in square_diameters.iter().enumerate() {
            if sq {
                set.insert(Combination(offset + i as u8 + 1));
            }
        }
    }
    Ok(set)
}

/// Outcome of the exhaustive search for the impossible combinations 6 and 8.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Report {
    pub alpha_max: Natural,
    pub triples: u64,
    /// Number of triples realizing each combination, indexed by `id - 1`.
    pub census: [u64; 8],
    /// Triples with a square odd leg; each was checked against the mod-4
    /// obstruction.
    pub gamma_squares: u64,
    /// Triples with both legs square; none can exist.
    pub both_legs_square: Vec<PrimitiveTriple>,
}

impl Theorem1Report {
    pub fn count(&self, c: Combination) -> u64 {
        self.census[usize::from(c.id() - 1)]
    }

    pub fn counterexamples(&self) -> u64 {
        self.count(Combination(6)) + self.count(Combination(8))
    }
}

#[derive(Debug, Clone, Default)]
struct SearchPart {
    triples: u64,
    census: [u64; 8],
    gamma_squares: u64,
    both_legs_square: Vec<PrimitiveTriple>,
    first_failure: Option<(PrimitiveTriple, Error)>,
}

impl SearchPart {
    fn merge(mut self, other: SearchPart) -> SearchPart {
        self.triples += other.triples;
        for (a, b) in self.census.iter_mut().zip(other.census) {
            *a += b;
        }
        self.gamma_squares += other.gamma_squares;
        self.both_legs_square.extend(other.both_legs_square);
        self.first_failure = match (self.first_failure, other.first_failure) {
            (Some(a), Some(b)) => Some(if a.0.params <= b.0.params { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }

    fn fail(&mut self, t: PrimitiveTriple, e: Error) {
        if self.first_failure.as_ref().is_none_or(|(old, _)| t.params < old.params) {
            self.first_failure = Some((t, e));
        }
    }
}

fn counterexample(t: &PrimitiveTriple, c: Combination) -> Error {
    Error::CounterexampleFound {
        alpha: t.alpha,
        beta: t.beta,
        gamma: t.gamma,
        combination: c,
    }
}

/// Scan every primitive triple with `α ≤ alpha_max`, count each combination,
/// confirm that combinations 6 and 8 never occur and that both `2ρ_α` and
/// `2ρ_γ` are `≡ 2 (mod 4)` whenever `γ` is a square. Also collects triples
/// with two square legs.
pub fn theorem1_search(alpha_max: Natural, exec: Exec) -> Result<Theorem1Report> {
    let top = u64::try_from(pythagorean::max_m(alpha_max)).map_err(|_| Error::OverflowDetected)?;
    let per_m = |m: u64| -> SearchPart {
        let mut part = SearchPart::default();
        for t in pythagorean::primitives_with_m(Natural::from(m), alpha_max) {
            part.triples += 1;
            let set = match classify_combinations(&t) {
                Ok(set) => set,
                Err(e) => {
                    part.fail(t, e);
                    continue;
                }
            };
            for c in set.iter() {
                part.census[usize::from(c.id() - 1)] += 1;
            }
            if arith::is_square(t.gamma) {
                part.gamma_squares += 1;
                // Diameters were already computed without overflow above.
                let d = t.diameters().expect("diameters");
                if d.d_a % 4 != 2 {
                    part.fail(t, counterexample(&t, Combination(6)));
                }
                if d.d_g % 4 != 2 {
                    part.fail(t, counterexample(&t, Combination(8)));
                }
                if arith::is_square(t.beta) {
                    part.both_legs_square.push(t);
                }
            }
            for c in [Combination(6), Combination(8)] {
                if set.contains(c) {
                    part.fail(t, counterexample(&t, c));
                }
            }
        }
        part
    };
    let total = if top < 2 {
        SearchPart::default()
    } else {
        exec.map_reduce(2..=top, per_m, SearchPart::default, SearchPart::merge)
    };
    if let Some((_, e)) = total.first_failure {
        return Err(e);
    }
    let mut both_legs_square = total.both_legs_square;
    both_legs_square.sort_by_key(|t| t.params);
    Ok(Theorem1Report {
        alpha_max,
        triples: total.triples,
        census: total.census,
        gamma_squares: total.gamma_squares,
        both_legs_square,
    })
}

pub type Triple = (Natural, Natural, Natural);

/// The solution of equation A or B that a triple realizing combination `c`
/// reduces to, i.e. the solution its family's `(κ, λ)` would parametrize.
/// `None` for combinations 5–8, which reduce to a product of coprime squares
/// instead, or when the triple does not have the required shape.
pub fn descend(t: &PrimitiveTriple, c: Combination) -> Option<(Equation, Triple)> {
    descend_params(t.params.m(), t.params.n(), c)
}

fn descend_params(m: Natural, n: Natural, c: Combination) -> Option<(Equation, Triple)> {
    let root = arith::square_root;
    let half_root = |v: Natural| if v.is_multiple_of(2) { root(v / 2) } else { None };
    let sum = m.checked_add(n)?;
    match c.id() {
        // m = t1², n = 2t2², t1² - 2t2² = L²
        1 => Some((Equation::A, (root(m - n)?, half_root(n)?, root(m)?))),
        // m = 2t1², n = t2², t2² + 2t1² = L²
        2 => Some((Equation::A, (root(n)?, half_root(m)?, root(sum)?))),
        // m = t1², n = 2t2², t1² + 2t2² = L²
        3 => Some((Equation::A, (root(m)?, half_root(n)?, root(sum)?))),
        // m = 2t1², n = t2², t2² + L² = 2t1²
        4 => {
            let (t2, l) = (root(n)?, root(m - n)?);
            Some((Equation::B, (t2.min(l), t2.max(l), half_root(m)?)))
        }
        _ => None,
    }
}

/// Whether an exceptional triple reduces to a solution that the
/// parametrization of its equation does not produce.
fn exception_explained(t: &PrimitiveTriple, c: Combination) -> Result<bool> {
    let Some((eq, (x, y, z))) = descend(t, c) else {
        return Ok(false);
    };
    if !eq.holds(x, y, z)? || !arith::coprime(x, y) {
        return Ok(false);
    }
    let produced = diophantine::enumerate_solutions(eq, z, Exec::Sequential)?
        .iter()
        .any(|s| s.xyz() == (x, y, z));
    Ok(!produced)
}

/// Two-sided comparison of one combination's classified triples against its
/// family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinationCensus {
    pub combination: Combination,
    pub family: Option<FamilyId>,
    pub classified: usize,
    pub enumerated: usize,
    /// Classified but not produced by the family.
    pub exceptions: Vec<Triple>,
    /// Exceptions that do not reduce to a non-parametric diophantine solution.
    pub unexplained: Vec<Triple>,
    /// Produced by the family but not classified; must stay empty.
    pub unsound: Vec<Triple>,
}

/// Classify every primitive triple with `α ≤ alpha_max` and compare each
/// combination's triples with the members of its family.
pub fn family_census(alpha_max: Natural, exec: Exec) -> Result<Vec<CombinationCensus>> {
    let top = u64::try_from(pythagorean::max_m(alpha_max)).map_err(|_| Error::OverflowDetected)?;
    let classified: Vec<Result<(Combination, Triple)>> = if top < 2 {
        Vec::new()
    } else {
        exec.flat_map(2..=top, |m| {
            let mut row = Vec::new();
            for t in pythagorean::primitives_with_m(Natural::from(m), alpha_max) {
                match classify_combinations(&t) {
                    Ok(set) => row.extend(set.iter().map(|c| Ok((c, t.as_tuple())))),
                    Err(e) => row.push(Err(e)),
                }
            }
            row
        })
    };
    let mut by_combination: [BTreeSet<Triple>; 8] = Default::default();
    for entry in classified {
        let (c, t) = entry?;
        by_combination[usize::from(c.id() - 1)].insert(t);
    }
    let mut by_family = Vec::new();
    for f in FamilyId::ALL {
        let members: BTreeSet<Triple> = enumerate_family(f, alpha_max, exec)?
            .iter()
            .map(|mb| mb.triple.as_tuple())
            .collect();
        by_family.push((f, members));
    }
    let empty = BTreeSet::new();
    Combination::ALL
        .into_iter()
        .map(|c| {
            let family = c.family();
            let enumerated = family
                .and_then(|f| by_family.iter().find(|(g, _)| *g == f))
                .map_or(&empty, |(_, s)| s);
            let classified = &by_combination[usize::from(c.id() - 1)];
            let exceptions: Vec<Triple> = classified.difference(enumerated).copied().collect();
            let mut unexplained = Vec::new();
            for &(alpha, beta, gamma) in &exceptions {
                let t = pythagorean::recover_params(&crate::geometry::TriangleSides::new(alpha, beta, gamma)?)
                    .and_then(PrimitiveTriple::from_params)?;
                if !exception_explained(&t, c)? {
                    unexplained.push((alpha, beta, gamma));
                }
            }
            Ok(CombinationCensus {
                combination: c,
                family,
                classified: classified.len(),
                enumerated: enumerated.len(),
                exceptions,
                unexplained,
                unsound: enumerated.difference(classified).copied().collect(),
            })
        })
        .collect()
}
