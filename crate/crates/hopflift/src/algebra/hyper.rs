//! The Cayley–Dickson tower 𝔸₀ … 𝔸₄ over ℚ(√2).
//!
//! An element of 𝔸ₙ is a pair (a, b) of elements of 𝔸ₙ₋₁ with product
//!
//! ```text
//! (a, b)(c, d) = (ac − db*, a*d + cb)
//! ```
//!
//! and conjugation `(a, b)* = (a*, −b)`. Level 0 is ℚ(√2) itself, and
//! levels 1–4 are the complex numbers, quaternions, octonions and
//! sedenions over that field. All basis multiplication signs are the
//! ones this doubling formula induces on the coordinate split
//! `(coords[..2^(n-1)], coords[2^(n-1)..])`; no external sign table is
//! used. Note this yields e₁e₂ = −e₃ at level 2, the mirror of the
//! usual Hamilton convention.
//!
//! Multiplication is associative up to level 2, alternative at level 3,
//! and admits zero divisors at level 4, all of which is exercised by
//! the test suite.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::scalar::ExactScalar;

pub const MAX_LEVEL: u8 = 4;

/// Element of the level-`level` Cayley–Dickson algebra: 2^level
/// coordinates in ℚ(√2), real part first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hyper {
    level: u8,
    coords: Vec<ExactScalar>,
}

/// Errors from algebra-level operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    LevelMismatch { left: u8, right: u8 },
    BadLevel { level: u8 },
    IndexOutOfRange { level: u8, index: usize },
    WrongCoordinateCount { level: u8, got: usize },
    ZeroInverse,
    /// Inversion requested at level 4, which has zero divisors.
    NotDivisionAlgebra,
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::LevelMismatch { left, right } => {
                write!(f, "level mismatch: {left} vs {right}")
            }
            AlgebraError::BadLevel { level } => write!(f, "unsupported level {level}"),
            AlgebraError::IndexOutOfRange { level, index } => {
                write!(f, "basis index {index} out of range for level {level}")
            }
            AlgebraError::WrongCoordinateCount { level, got } => {
                write!(f, "level {level} needs {} coordinates, got {got}", 1usize << level)
            }
            AlgebraError::ZeroInverse => write!(f, "zero has no inverse"),
            AlgebraError::NotDivisionAlgebra => {
                write!(f, "level 4 is not a division algebra; inverse undefined")
            }
        }
    }
}

impl Hyper {
    pub fn new(level: u8, coords: Vec<ExactScalar>) -> Result<Self, AlgebraError> {
        if level > MAX_LEVEL {
            return Err(AlgebraError::BadLevel { level });
        }
        if coords.len() != 1usize << level {
            return Err(AlgebraError::WrongCoordinateCount {
                level,
                got: coords.len(),
            });
        }
        Ok(Hyper { level, coords })
    }

    pub fn zero(level: u8) -> Self {
        Hyper {
            level,
            coords: vec![ExactScalar::zero(); 1usize << level],
        }
    }

    pub fn one(level: u8) -> Self {
        basis_element(level, 0).expect("level 0..=4")
    }

    /// A real scalar embedded at the given level.
    pub fn real(level: u8, value: ExactScalar) -> Self {
        let mut h = Hyper::zero(level);
        h.coords[0] = value;
        h
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn coords(&self) -> &[ExactScalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<ExactScalar> {
        self.coords
    }

    pub fn real_part(&self) -> &ExactScalar {
        &self.coords[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(ExactScalar::is_zero)
    }

    /// Conjugation: real part kept, all other coordinates negated.
    pub fn conj(&self) -> Self {
        let mut coords = self.coords.clone();
        for c in &mut coords[1..] {
            *c = -&*c;
        }
        Hyper {
            level: self.level,
            coords,
        }
    }

    pub fn neg(&self) -> Self {
        Hyper {
            level: self.level,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, rhs: &Hyper) -> Result<Self, AlgebraError> {
        self.check_level(rhs)?;
        Ok(Hyper {
            level: self.level,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Hyper) -> Result<Self, AlgebraError> {
        self.check_level(rhs)?;
        Ok(Hyper {
            level: self.level,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        Hyper {
            level: self.level,
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// Cayley–Dickson product. The levels must match.
    pub fn mul(&self, rhs: &Hyper) -> Result<Self, AlgebraError> {
        self.check_level(rhs)?;
        let mut out = vec![ExactScalar::zero(); self.coords.len()];
        cd_mul_slices(&self.coords, &rhs.coords, &mut out);
        Ok(Hyper {
            level: self.level,
            coords: out,
        })
    }

    /// Σ coordᵢ² — equals the real part of `x·x*` at every level.
    pub fn norm2(&self) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for c in &self.coords {
            acc = &acc + &c.square();
        }
        acc
    }

    pub fn is_unit(&self) -> bool {
        self.norm2() == ExactScalar::one()
    }

    /// Multiplicative inverse `x*/|x|²`; defined for nonzero elements
    /// of levels 0–3 only.
    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.level >= 4 {
            return Err(AlgebraError::NotDivisionAlgebra);
        }
        if self.is_zero() {
            return Err(AlgebraError::ZeroInverse);
        }
        let n = self.norm2();
        let n_inv = n.inv().expect("nonzero norm");
        Ok(self.conj().scale(&n_inv))
    }

    fn check_level(&self, rhs: &Hyper) -> Result<(), AlgebraError> {
        if self.level != rhs.level {
            Err(AlgebraError::LevelMismatch {
                left: self.level,
                right: rhs.level,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Hyper {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}[", self.level)?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Recursive doubling product on coordinate slices.
fn cd_mul_slices(x: &[ExactScalar], y: &[ExactScalar], out: &mut [ExactScalar]) {
    let n = x.len();
    if n == 1 {
        out[0] = &x[0] * &y[0];
        return;
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);

    let mut t1 = vec![ExactScalar::zero(); h];
    let mut t2 = vec![ExactScalar::zero(); h];

    // left half: ac − db*
    cd_mul_slices(a, c, &mut t1);
    let b_conj = conj_slice(b);
    cd_mul_slices(d, &b_conj, &mut t2);
    for i in 0..h {
        out[i] = &t1[i] - &t2[i];
    }

    // right half: a*d + cb
    let a_conj = conj_slice(a);
    cd_mul_slices(&a_conj, d, &mut t1);
    cd_mul_slices(c, b, &mut t2);
    for i in 0..h {
        out[h + i] = &t1[i] + &t2[i];
    }
}

fn conj_slice(x: &[ExactScalar]) -> Vec<ExactScalar> {
    let mut v = x.to_vec();
    for c in &mut v[1..] {
        *c = -&*c;
    }
    v
}

/// Unit coordinate vector eᵢ at the given level.
pub fn basis_element(level: u8, index: usize) -> Result<Hyper, AlgebraError> {
    if level > MAX_LEVEL {
        return Err(AlgebraError::BadLevel { level });
    }
    if index >= 1usize << level {
        return Err(AlgebraError::IndexOutOfRange { level, index });
    }
    let mut h = Hyper::zero(level);
    h.coords[index] = ExactScalar::one();
    Ok(h)
}

/// Searches `(eᵢ ± eⱼ)(eₖ ± eₗ)`, i < j, k < l, for an exact zero
/// product of nonzero factors. Levels 0–3 are division algebras and
/// yield `None` after the full scan; level 4 yields a sedenion witness.
pub fn find_zero_divisor(level: u8) -> Result<Option<(Hyper, Hyper)>, AlgebraError> {
    if level > MAX_LEVEL {
        return Err(AlgebraError::BadLevel { level });
    }
    let dim = 1usize << level;
    for i in 0..dim {
        for j in (i + 1)..dim {
            for si in [1i64, -1] {
                let ei = basis_element(level, i)?;
                let ej = basis_element(level, j)?.scale(&ExactScalar::integer(si));
                let x = ei.add(&ej)?;
                for k in 0..dim {
                    for l in (k + 1)..dim {
                        for sk in [1i64, -1] {
                            let ek = basis_element(level, k)?;
                            let el = basis_element(level, l)?.scale(&ExactScalar::integer(sk));
                            let y = ek.add(&el)?;
                            if x.mul(&y)?.is_zero() {
                                return Ok(Some((x, y)));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}
