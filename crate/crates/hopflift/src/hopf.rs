//! The Hopf maps S^(2^(n+1)−1) → S^(2^n) for n = 1, 2, 3, in exact
//! arithmetic.
//!
//! A point of the total sphere is a pair (w, z) of level-n
//! Cayley–Dickson numbers with |w|² + |z|² = 1; the direct form of the
//! map sends it to
//!
//! ```text
//! (w, z) ↦ (2 w z*, |z|² − |w|²)
//! ```
//!
//! landing on the unit sphere of 𝔸ₙ × ℝ. The same map factors as a
//! division step `h1 : (w, z) ↦ w z⁻¹ ∈ 𝔸ₙ ∪ {∞}` followed by inverse
//! stereographic projection `h2 : c ↦ (2c, 1 − |c|²)/(1 + |c|²)`; the
//! orientation of `h2` is fixed so that `h2 ∘ h1` agrees with the
//! direct form exactly, including at z = 0.
//!
//! Fibers are parameterized by unit elements q of 𝔸ₙ: the fiber over a
//! base point (a, t) with t ≠ −1 is
//!
//! ```text
//! q ↦ ( (a·q)/√(2(1+t)),  q·√((1+t)/2) )
//! ```
//!
//! and the fiber over the south pole (0, −1) is q ↦ (q, 0). The radical
//! √(2(1+t)) must stay inside ℚ(√2) (it does for every t ∈ {0, ±1},
//! which covers all the lattice constructions); other base points are
//! rejected with [`HopfError::FieldOverflow`]. For such points
//! [`section_seed`] can still find one exact fiber point by a small
//! bounded search, which is enough to enumerate whole fibers since the
//! fiber through a seed (w₀, z₀) is q ↦ (w₀·q, z₀·q).

use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{AlgebraError, ExactScalar, Hyper};

/// A point of S^(2^(n+1)−1) as a pair (w, z) of level-n elements with
/// |w|² + |z|² = 1. Ambient coordinates are coords(w) then coords(z).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpherePair {
    level: u8,
    w: Hyper,
    z: Hyper,
}

/// A point (a, t) of S^(2^n) ⊂ 𝔸ₙ × ℝ with |a|² + t² = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePoint {
    level: u8,
    a: Hyper,
    t: ExactScalar,
}

/// Value of `h1`: an element of 𝔸ₙ or the point at infinity (z = 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtendedValue {
    Finite(Hyper),
    Infinity(u8),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfError {
    Algebra(AlgebraError),
    /// Levels must be equal and within 1..=3.
    BadLevel { level: u8 },
    /// |w|² + |z|² ≠ 1 (or |a|² + t² ≠ 1).
    NotOnSphere,
    /// Fiber parameter must be a unit.
    NonUnitFiberParameter,
    /// The fiber radical √(2(1+t)) leaves ℚ(√2).
    FieldOverflow,
}

impl fmt::Display for HopfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfError::Algebra(e) => write!(f, "{e}"),
            HopfError::BadLevel { level } => write!(f, "hopf map undefined at level {level}"),
            HopfError::NotOnSphere => write!(f, "point does not lie on the unit sphere"),
            HopfError::NonUnitFiberParameter => write!(f, "fiber parameter is not a unit"),
            HopfError::FieldOverflow => {
                write!(f, "fiber radical leaves ℚ(√2) for this base point")
            }
        }
    }
}

impl From<AlgebraError> for HopfError {
    fn from(e: AlgebraError) -> Self {
        HopfError::Algebra(e)
    }
}

impl SpherePair {
    pub fn new(w: Hyper, z: Hyper) -> Result<Self, HopfError> {
        let level = w.level();
        if level != z.level() || !(1..=3).contains(&level) {
            return Err(HopfError::BadLevel { level });
        }
        if &w.norm2() + &z.norm2() != ExactScalar::one() {
            return Err(HopfError::NotOnSphere);
        }
        Ok(SpherePair { level, w, z })
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn w(&self) -> &Hyper {
        &self.w
    }

    pub fn z(&self) -> &Hyper {
        &self.z
    }

    /// Flattened ambient coordinates: coords(w) followed by coords(z).
    pub fn ambient(&self) -> Vec<ExactScalar> {
        let mut v = self.w.coords().to_vec();
        v.extend_from_slice(self.z.coords());
        v
    }
}

impl BasePoint {
    pub fn new(a: Hyper, t: ExactScalar) -> Result<Self, HopfError> {
        let level = a.level();
        if !(1..=3).contains(&level) {
            return Err(HopfError::BadLevel { level });
        }
        if &a.norm2() + &t.square() != ExactScalar::one() {
            return Err(HopfError::NotOnSphere);
        }
        Ok(BasePoint { level, a, t })
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn a(&self) -> &Hyper {
        &self.a
    }

    pub fn t(&self) -> &ExactScalar {
        &self.t
    }

    /// Coordinates in ℝ^(2^n + 1): coords(a) followed by t.
    pub fn ambient(&self) -> Vec<ExactScalar> {
        let mut v = self.a.coords().to_vec();
        v.push(self.t.clone());
        v
    }
}

/// Direct Hopf map: (w, z) ↦ (2wz*, |z|² − |w|²).
pub fn hopf_direct(p: &SpherePair) -> BasePoint {
    let two = ExactScalar::integer(2);
    let a = p
        .w
        .mul(&p.z.conj())
        .expect("levels match by construction")
        .scale(&two);
    let t = &p.z.norm2() - &p.w.norm2();
    BasePoint::new(a, t).expect("the norm identity puts the image on the base sphere")
}

/// First factor: (w, z) ↦ w z⁻¹, with ∞ when z = 0.
pub fn h1(p: &SpherePair) -> ExtendedValue {
    if p.z.is_zero() {
        ExtendedValue::Infinity(p.level)
    } else {
        let z_inv = p.z.inv().expect("nonzero, level ≤ 3");
        ExtendedValue::Finite(p.w.mul(&z_inv).expect("levels match"))
    }
}

/// Second factor, inverse stereographic projection:
/// c ↦ (2c, 1 − |c|²)/(1 + |c|²), with ∞ ↦ (0, −1).
pub fn h2(c: &ExtendedValue) -> BasePoint {
    match c {
        ExtendedValue::Infinity(level) => {
            BasePoint::new(Hyper::zero(*level), ExactScalar::integer(-1))
                .expect("south pole is on the sphere")
        }
        ExtendedValue::Finite(c) => {
            let n = c.norm2();
            let one = ExactScalar::one();
            let denom_inv = (&one + &n).inv().expect("1 + |c|² > 0");
            let a = c.scale(&(&ExactScalar::integer(2) * &denom_inv));
            let t = &(&one - &n) * &denom_inv;
            BasePoint::new(a, t).expect("stereographic image is on the sphere")
        }
    }
}

/// Inverse stereographic projection on raw coordinate slices:
/// u ↦ (2u, 1 − |u|²)/(1 + |u|²), a unit vector in ℝ^(len+1).
///
/// This is the same formula as [`h2`] without the algebra wrapper; it
/// is handy for producing exact unit vectors of any dimension.
pub fn stereographic_unit(u: &[ExactScalar]) -> Vec<ExactScalar> {
    let one = ExactScalar::one();
    let mut n = ExactScalar::zero();
    for c in u {
        n = &n + &c.square();
    }
    let denom_inv = (&one + &n).inv().expect("1 + |u|² > 0");
    let two_d = &ExactScalar::integer(2) * &denom_inv;
    let mut out: Vec<ExactScalar> = u.iter().map(|c| c * &two_d).collect();
    out.push(&(&one - &n) * &denom_inv);
    out
}

/// Exact fiber point over `base` with fiber parameter `q` (a unit of
/// the same level): t ≠ −1 gives ((a·q)/√(2(1+t)), q·√((1+t)/2)),
/// t = −1 gives (q, 0).
pub fn fiber_point(base: &BasePoint, q: &Hyper) -> Result<SpherePair, HopfError> {
    if q.level() != base.level {
        return Err(HopfError::Algebra(AlgebraError::LevelMismatch {
            left: base.level,
            right: q.level(),
        }));
    }
    if !q.is_unit() {
        return Err(HopfError::NonUnitFiberParameter);
    }
    let one = ExactScalar::one();
    if base.t == -&one {
        return Ok(SpherePair {
            level: base.level,
            w: q.clone(),
            z: Hyper::zero(base.level),
        });
    }
    // r = √(2(1+t)); then √((1+t)/2) = r/2.
    let r2 = &ExactScalar::integer(2) * &(&one + &base.t);
    let r = r2.sqrt().ok_or(HopfError::FieldOverflow)?;
    let r_inv = r.inv().expect("t ≠ −1 so r > 0");
    let w = base.a.mul(q)?.scale(&r_inv);
    let z = q.scale(&(&r * &ExactScalar::ratio(1, 2)));
    SpherePair::new(w, z)
}

/// One exact point in the fiber over `base`, found without requiring
/// the radical √(2(1+t)) to exist in ℚ(√2).
///
/// For t ∈ {±1} and for representable radicals this agrees with
/// `fiber_point(base, 1)`. Otherwise it searches small-denominator
/// pairs (z₀, z₁) ∈ ℚ(√2)² with z₀² + z₁² = (1+t)/2, embeds z = z₀ +
/// z₁e₁ and takes w = a·z/(2|z|²), which satisfies 2wz* = a exactly.
pub fn section_seed(base: &BasePoint) -> Result<SpherePair, HopfError> {
    match fiber_point(base, &Hyper::one(base.level)) {
        Ok(p) => return Ok(p),
        Err(HopfError::FieldOverflow) => {}
        Err(e) => return Err(e),
    }
    let one = ExactScalar::one();
    let target = &(&one + &base.t) * &ExactScalar::ratio(1, 2); // |z|²
    let (z0, z1) = two_square_decomposition(&target).ok_or(HopfError::FieldOverflow)?;
    let mut z = Hyper::zero(base.level);
    {
        let coords = z.coords().to_vec();
        let mut coords = coords;
        coords[0] = z0;
        coords[1] = z1;
        z = Hyper::new(base.level, coords).expect("coordinate count unchanged");
    }
    let s = z.norm2();
    debug_assert_eq!(s, target);
    let factor = (&ExactScalar::integer(2) * &s).inv().expect("t ≠ −1");
    let w = base.a.mul(&z)?.scale(&factor);
    SpherePair::new(w, z)
}

/// Finds x, y ∈ ℚ(√2) with x² + y² = s, over a small denominator-8
/// grid for x; y is then pinned by the irrational component.
fn two_square_decomposition(s: &ExactScalar) -> Option<(ExactScalar, ExactScalar)> {
    if s.signum() < 0 {
        return None;
    }
    if let Some(x) = s.sqrt() {
        return Some((x, ExactScalar::zero()));
    }
    // x = p + q√2 with 2pq fixed by the target's irrational part:
    // given p, q = irr(s − x²) forces rat(x²) ≤ rat(s). Scan p over
    // n/8, n = −16..=16, q over m/8 likewise, and test the remainder
    // for a square root in the field.
    for n in -16i64..=16 {
        for m in -16i64..=16 {
            let x = &ExactScalar::ratio(n, 8) + &ExactScalar::sqrt2_ratio(m, 8);
            let rem = s - &x.square();
            if rem.signum() < 0 {
                continue;
            }
            if let Some(y) = rem.sqrt() {
                return Some((x, y));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::basis_element;
    use alloc::vec;

    fn sqrt2_over_2() -> ExactScalar {
        ExactScalar::sqrt2_ratio(1, 2)
    }

    fn pair(level: u8, w: Hyper, z: Hyper) -> SpherePair {
        let _ = level;
        SpherePair::new(w, z).unwrap()
    }

    #[test]
    fn north_pole() {
        let p = pair(1, Hyper::zero(1), Hyper::one(1));
        let b = hopf_direct(&p);
        assert!(b.a().is_zero());
        assert_eq!(b.t(), &ExactScalar::one());
    }

    #[test]
    fn diagonal_maps_to_equator() {
        // (1/√2, 1/√2) ↦ (1, 0)
        let w = Hyper::real(1, sqrt2_over_2());
        let z = Hyper::real(1, sqrt2_over_2());
        let b = hopf_direct(&pair(1, w, z));
        assert_eq!(b.a(), &Hyper::one(1));
        assert!(b.t().is_zero());
    }

    #[test]
    fn twisted_diagonal_maps_to_i() {
        // (i/√2, 1/√2) ↦ (i, 0)
        let i = basis_element(1, 1).unwrap();
        let w = i.scale(&sqrt2_over_2());
        let z = Hyper::real(1, sqrt2_over_2());
        let b = hopf_direct(&pair(1, w, z));
        assert_eq!(b.a(), &i);
        assert!(b.t().is_zero());
    }

    #[test]
    fn h1_values() {
        let p = pair(1, Hyper::zero(1), Hyper::one(1));
        assert_eq!(h1(&p), ExtendedValue::Finite(Hyper::zero(1)));

        let p = pair(1, Hyper::one(1), Hyper::zero(1));
        assert_eq!(h1(&p), ExtendedValue::Infinity(1));

        let w = Hyper::real(1, sqrt2_over_2());
        let z = Hyper::real(1, sqrt2_over_2());
        assert_eq!(h1(&pair(1, w, z)), ExtendedValue::Finite(Hyper::one(1)));
    }

    #[test]
    fn h2_values() {
        let b = h2(&ExtendedValue::Finite(Hyper::zero(1)));
        assert!(b.a().is_zero());
        assert_eq!(b.t(), &ExactScalar::one());

        let b = h2(&ExtendedValue::Infinity(1));
        assert!(b.a().is_zero());
        assert_eq!(b.t(), &ExactScalar::integer(-1));

        let b = h2(&ExtendedValue::Finite(Hyper::one(1)));
        assert_eq!(b.a(), &Hyper::one(1));
        assert!(b.t().is_zero());
    }

    #[test]
    fn factored_equals_direct_including_z_zero() {
        let samples = [
            pair(1, Hyper::zero(1), Hyper::one(1)),
            pair(1, Hyper::one(1), Hyper::zero(1)),
            pair(
                1,
                Hyper::new(1, vec![ExactScalar::ratio(3, 5), ExactScalar::zero()]).unwrap(),
                Hyper::new(1, vec![ExactScalar::zero(), ExactScalar::ratio(4, 5)]).unwrap(),
            ),
        ];
        for p in &samples {
            assert_eq!(h2(&h1(p)), hopf_direct(p));
        }
    }

    #[test]
    fn fiber_over_north_pole_is_z_circle() {
        let base = BasePoint::new(Hyper::zero(1), ExactScalar::one()).unwrap();
        let q = basis_element(1, 1).unwrap(); // i
        let p = fiber_point(&base, &q).unwrap();
        assert!(p.w().is_zero());
        assert_eq!(p.z(), &q);
    }

    #[test]
    fn fiber_over_equator() {
        let base = BasePoint::new(Hyper::one(1), ExactScalar::zero()).unwrap();
        let p = fiber_point(&base, &Hyper::one(1)).unwrap();
        assert_eq!(p.w(), &Hyper::real(1, sqrt2_over_2()));
        assert_eq!(p.z(), &Hyper::real(1, sqrt2_over_2()));
    }

    #[test]
    fn fiber_over_south_pole() {
        let base = BasePoint::new(Hyper::zero(1), ExactScalar::integer(-1)).unwrap();
        let p = fiber_point(&base, &Hyper::one(1)).unwrap();
        assert_eq!(p.w(), &Hyper::one(1));
        assert!(p.z().is_zero());
    }

    #[test]
    fn fiber_rejects_non_unit_parameter() {
        let base = BasePoint::new(Hyper::one(1), ExactScalar::zero()).unwrap();
        let q = Hyper::real(1, ExactScalar::integer(2));
        assert_eq!(
            fiber_point(&base, &q).unwrap_err(),
            HopfError::NonUnitFiberParameter
        );
    }

    #[test]
    fn fiber_rejects_unrepresentable_radical() {
        // t = 3/5: 2(1+t) = 16/5 is not a square in ℚ(√2).
        let a = Hyper::new(1, vec![ExactScalar::ratio(4, 5), ExactScalar::zero()]).unwrap();
        let base = BasePoint::new(a, ExactScalar::ratio(3, 5)).unwrap();
        assert_eq!(
            fiber_point(&base, &Hyper::one(1)).unwrap_err(),
            HopfError::FieldOverflow
        );
    }

    #[test]
    fn section_seed_handles_sqrt2_over_2_heights() {
        // Base (a, t) with a = e0/√2 at level 2 and t = ±√2/2: the
        // radical 2 ± √2 leaves the field, but a seed still exists.
        for sign in [1i64, -1] {
            let a = Hyper::real(2, sqrt2_over_2());
            let t = ExactScalar::sqrt2_ratio(sign, 2);
            let base = BasePoint::new(a, t).unwrap();
            assert_eq!(
                fiber_point(&base, &Hyper::one(2)).unwrap_err(),
                HopfError::FieldOverflow
            );
            let seed = section_seed(&base).unwrap();
            assert_eq!(hopf_direct(&seed), base);
        }
    }

    #[test]
    fn stereographic_unit_is_unit() {
        let u = vec![
            ExactScalar::ratio(1, 3),
            ExactScalar::sqrt2_ratio(-2, 5),
            ExactScalar::ratio(7, 2),
        ];
        let x = stereographic_unit(&u);
        assert_eq!(x.len(), 4);
        let mut n = ExactScalar::zero();
        for c in &x {
            n = &n + &c.square();
        }
        assert_eq!(n, ExactScalar::one());
    }
}
