//! Builders for the target point configurations.
//!
//! Three antipodal kissing configurations are built twice each, by two
//! independent routes:
//!
//! | points | sphere | Hopf lift                       | canonical oracle          |
//! |--------|--------|---------------------------------|---------------------------|
//! | 24     | S³     | 6 octahedron fibers × 4 phases  | standard 24-cell vertices |
//! | 240    | S⁷     | 10 axis fibers × 24 Hurwitz     | E8 root system            |
//! | 4320   | S¹⁵    | 18 axis fibers × 240 octonions  | Barnes–Wall BW₁₆ shell    |
//!
//! Each lift places a copy of the previous configuration on every
//! fiber over the antipodal axis points of the base sphere. The two
//! pole fibers carry a phase offset — (e₀+e₁)/√2, the generalization
//! of the π/4 twist that turns six octahedron circles into a 24-cell —
//! without which pole/equator pairs come too close. At level 3 the
//! builder verifies the kissing property exactly and, should the
//! default offset ever fail, falls back to a search over simple unit
//! octonion candidates, recording the choice in the metadata.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::algebra::{basis_element, AlgebraError, ExactScalar, Hyper};
use crate::analysis;
use crate::hopf::{fiber_point, BasePoint, HopfError};

/// Which fiber of the lift a point came from.
///
/// Base points are the antipodal axis points of the base sphere: the
/// two poles `(0, ±1)` and `(±eᵢ, 0)` for each basis unit. Experiment
/// configurations use sequential `b{nn}` labels, and canonical oracle
/// constructions carry no fiber structure (`-`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FiberLabel {
    PolePos,
    PoleNeg,
    Axis { index: u8, neg: bool },
    Seq(u16),
    Unlabeled,
}

impl FiberLabel {
    /// Label of the fiber over the negated base point, when that is
    /// determined by the label alone.
    pub fn antipode(&self) -> Option<FiberLabel> {
        match *self {
            FiberLabel::PolePos => Some(FiberLabel::PoleNeg),
            FiberLabel::PoleNeg => Some(FiberLabel::PolePos),
            FiberLabel::Axis { index, neg } => Some(FiberLabel::Axis { index, neg: !neg }),
            FiberLabel::Seq(_) | FiberLabel::Unlabeled => None,
        }
    }
}

impl fmt::Display for FiberLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FiberLabel::PolePos => f.write_str("pole+"),
            FiberLabel::PoleNeg => f.write_str("pole-"),
            FiberLabel::Axis { index, neg } => {
                write!(f, "e{}{}", index, if neg { '-' } else { '+' })
            }
            FiberLabel::Seq(i) => write!(f, "b{i:02}"),
            FiberLabel::Unlabeled => f.write_str("-"),
        }
    }
}

impl FromStr for FiberLabel {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pole+" => return Ok(FiberLabel::PolePos),
            "pole-" => return Ok(FiberLabel::PoleNeg),
            "-" => return Ok(FiberLabel::Unlabeled),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix('e') {
            let (digits, sign) = rest.split_at(rest.len().checked_sub(1).ok_or(())?);
            let index: u8 = digits.parse().map_err(|_| ())?;
            let neg = match sign {
                "+" => false,
                "-" => true,
                _ => return Err(()),
            };
            return Ok(FiberLabel::Axis { index, neg });
        }
        if let Some(rest) = s.strip_prefix('b') {
            let i: u16 = rest.parse().map_err(|_| ())?;
            return Ok(FiberLabel::Seq(i));
        }
        Err(())
    }
}

/// How a configuration was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Hopf,
    Canonical,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Hopf => "hopf",
            Method::Canonical => "canonical",
        })
    }
}

impl FromStr for Method {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "hopf" => Ok(Method::Hopf),
            "canonical" => Ok(Method::Canonical),
            _ => Err(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigMeta {
    pub name: String,
    pub method: Method,
    /// Cayley–Dickson level of the lift, absent for canonical builds.
    pub level: Option<u8>,
    /// Whether the point set is required to be closed under negation.
    pub antipodal: bool,
    /// Per-fiber unit offsets applied on top of the fiber parameters.
    pub offsets: BTreeMap<FiberLabel, Hyper>,
}

impl ConfigMeta {
    pub fn canonical(name: &str) -> Self {
        ConfigMeta {
            name: name.to_owned(),
            method: Method::Canonical,
            level: None,
            antipodal: true,
            offsets: BTreeMap::new(),
        }
    }

    pub fn hopf(name: &str, level: u8, offsets: BTreeMap<FiberLabel, Hyper>) -> Self {
        ConfigMeta {
            name: name.to_owned(),
            method: Method::Hopf,
            level: Some(level),
            antipodal: true,
            offsets,
        }
    }
}

/// A finite labeled set of exact unit vectors on a sphere.
///
/// Points are stored sorted lexicographically by coordinates, so a
/// configuration has one canonical serialization; the constructor
/// enforces unit norms, distinctness, and (when the metadata says so)
/// closure under negation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    ambient_dim: usize,
    points: Vec<Vec<ExactScalar>>,
    labels: Vec<FiberLabel>,
    meta: ConfigMeta,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionError {
    Algebra(AlgebraError),
    Hopf(HopfError),
    WrongDimension { index: usize, got: usize, expected: usize },
    NonUnitPoint { index: usize },
    DuplicatePoint { point: Vec<ExactScalar>, labels: (FiberLabel, FiberLabel) },
    NotAntipodal { point: Vec<ExactScalar> },
    /// The exact kissing gate failed: a pair with dot > 1/2.
    KissingViolation { first: usize, second: usize, dot: ExactScalar },
    /// No candidate pole offset produced a valid kissing configuration.
    NoValidOffset,
    BadLevel { level: u8 },
    /// Fiber circles can only be subdivided exactly into 1, 2, 4 or 8.
    UnsupportedFiberSize { size: u8 },
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::Algebra(e) => write!(f, "{e}"),
            ConstructionError::Hopf(e) => write!(f, "{e}"),
            ConstructionError::WrongDimension { index, got, expected } => {
                write!(f, "point {index} has {got} coordinates, expected {expected}")
            }
            ConstructionError::NonUnitPoint { index } => {
                write!(f, "point {index} is not a unit vector")
            }
            ConstructionError::DuplicatePoint { point, labels } => {
                write!(f, "duplicate point (fibers {} and {}):", labels.0, labels.1)?;
                for c in point {
                    write!(f, " {c}")?;
                }
                Ok(())
            }
            ConstructionError::NotAntipodal { point } => {
                write!(f, "negation of a point is missing from an antipodal configuration:")?;
                for c in point {
                    write!(f, " {c}")?;
                }
                Ok(())
            }
            ConstructionError::KissingViolation { first, second, dot } => {
                write!(f, "kissing gate failed: points {first} and {second} have dot {dot} > 1/2")
            }
            ConstructionError::NoValidOffset => {
                write!(f, "no pole offset candidate produced a kissing configuration")
            }
            ConstructionError::BadLevel { level } => write!(f, "unsupported level {level}"),
            ConstructionError::UnsupportedFiberSize { size } => {
                write!(f, "fiber size {size} not expressible exactly (use 1, 2, 4 or 8)")
            }
        }
    }
}

impl From<AlgebraError> for ConstructionError {
    fn from(e: AlgebraError) -> Self {
        ConstructionError::Algebra(e)
    }
}

impl From<HopfError> for ConstructionError {
    fn from(e: HopfError) -> Self {
        ConstructionError::Hopf(e)
    }
}

impl Configuration {
    pub fn new(
        meta: ConfigMeta,
        ambient_dim: usize,
        labeled_points: Vec<(Vec<ExactScalar>, FiberLabel)>,
    ) -> Result<Self, ConstructionError> {
        let one = ExactScalar::one();
        for (index, (p, _)) in labeled_points.iter().enumerate() {
            if p.len() != ambient_dim {
                return Err(ConstructionError::WrongDimension {
                    index,
                    got: p.len(),
                    expected: ambient_dim,
                });
            }
            let mut norm = ExactScalar::zero();
            for c in p {
                norm = &norm + &c.square();
            }
            if norm != one {
                return Err(ConstructionError::NonUnitPoint { index });
            }
        }
        let mut labeled_points = labeled_points;
        labeled_points.sort_by(|x, y| x.0.cmp(&y.0));
        for pair in labeled_points.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(ConstructionError::DuplicatePoint {
                    point: pair[0].0.clone(),
                    labels: (pair[0].1, pair[1].1),
                });
            }
        }
        let (points, labels): (Vec<_>, Vec<_>) = labeled_points.into_iter().unzip();
        if meta.antipodal {
            for p in &points {
                let neg: Vec<ExactScalar> = p.iter().map(|c| -c).collect();
                if points.binary_search(&neg).is_err() {
                    return Err(ConstructionError::NotAntipodal { point: p.clone() });
                }
            }
        }
        Ok(Configuration {
            ambient_dim,
            points,
            labels,
            meta,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<ExactScalar>] {
        &self.points
    }

    pub fn labels(&self) -> &[FiberLabel] {
        &self.labels
    }

    pub fn meta(&self) -> &ConfigMeta {
        &self.meta
    }

    /// The distinct fiber labels present, in sorted order.
    pub fn label_set(&self) -> Vec<FiberLabel> {
        let mut set: Vec<FiberLabel> = self.labels.clone();
        set.sort();
        set.dedup();
        set
    }

    /// True if the point sets coincide exactly (labels ignored).
    pub fn same_point_set(&self, other: &Configuration) -> bool {
        self.points == other.points
    }
}

/// A lift specification: base points with labels, the set of fiber
/// parameters placed on every fiber, and optional per-fiber offsets.
#[derive(Clone, Debug)]
pub struct LiftPlan {
    pub base: Vec<(BasePoint, FiberLabel)>,
    pub fiber_set: Vec<Hyper>,
    pub offsets: BTreeMap<FiberLabel, Hyper>,
}

/// Runs a lift: emits `fiber_point(b, offset·q)` for every base point
/// b and fiber parameter q, flattened to ambient coordinates.
///
/// The offset multiplies the fiber parameter on the left. At levels 1
/// and 2 the two sides agree as point sets (the plane is commutative,
/// and the Hurwitz units are normal in the binary octahedral group);
/// at level 3 they differ, and only the left action lands the pole
/// fibers inside the Barnes–Wall lattice spanned by the equator
/// fibers — the right action produces a cospectral configuration
/// spanning a strictly denser lattice of determinant 64.
pub fn lift(plan: &LiftPlan, name: &str) -> Result<Configuration, ConstructionError> {
    let level = match plan.base.first() {
        Some((b, _)) => b.level(),
        None => return Err(ConstructionError::BadLevel { level: 0 }),
    };
    let mut labeled = Vec::with_capacity(plan.base.len() * plan.fiber_set.len());
    for (b, label) in &plan.base {
        let offset = plan.offsets.get(label);
        for q in &plan.fiber_set {
            let param = match offset {
                Some(o) => o.mul(q)?,
                None => q.clone(),
            };
            let p = fiber_point(b, &param)?;
            labeled.push((p.ambient(), *label));
        }
    }
    let meta = ConfigMeta::hopf(name, level, plan.offsets.clone());
    Configuration::new(meta, 2usize << level, labeled)
}

/// The six vertices of an octahedron on S², as base points:
/// (0, ±1), (±1, 0), (±i, 0).
pub fn octahedron_base() -> Vec<(BasePoint, FiberLabel)> {
    axis_base(1).expect("level 1 is valid")
}

/// The 2·(2^level + 1) antipodal unit axis points of S^(2^level):
/// the two poles (0, ±1) and (±eᵢ, 0) for each basis unit eᵢ.
pub fn axis_base(level: u8) -> Result<Vec<(BasePoint, FiberLabel)>, ConstructionError> {
    if !(1..=3).contains(&level) {
        return Err(ConstructionError::BadLevel { level });
    }
    let one = ExactScalar::one();
    let mut out = Vec::new();
    out.push((
        BasePoint::new(Hyper::zero(level), one.clone()).expect("north pole"),
        FiberLabel::PolePos,
    ));
    out.push((
        BasePoint::new(Hyper::zero(level), -&one).expect("south pole"),
        FiberLabel::PoleNeg,
    ));
    for index in 0..(1u8 << level) {
        for neg in [false, true] {
            let mut e = basis_element(level, index as usize)?;
            if neg {
                e = e.neg();
            }
            out.push((
                BasePoint::new(e, ExactScalar::zero()).expect("equator point"),
                FiberLabel::Axis { index, neg },
            ));
        }
    }
    Ok(out)
}

/// The 24 standard 24-cell vertices: two coordinates ±√2/2, two zero.
pub fn cell24_standard() -> Result<Configuration, ConstructionError> {
    let h = ExactScalar::sqrt2_ratio(1, 2);
    let mut pts = Vec::with_capacity(24);
    for i in 0..4 {
        for j in (i + 1)..4 {
            for si in [1i64, -1] {
                for sj in [1i64, -1] {
                    let mut v = vec![ExactScalar::zero(); 4];
                    v[i] = &h * &ExactScalar::integer(si);
                    v[j] = &h * &ExactScalar::integer(sj);
                    pts.push((v, FiberLabel::Unlabeled));
                }
            }
        }
    }
    Configuration::new(ConfigMeta::canonical("cell24"), 4, pts)
}

/// Pole-fiber phase offset (e₀ + e₁)/√2 at the given level — the π/4
/// twist of the pole circles, in Cayley–Dickson form.
fn pole_offset(level: u8) -> Hyper {
    let h = ExactScalar::sqrt2_ratio(1, 2);
    let e0 = basis_element(level, 0).expect("e0");
    let e1 = basis_element(level, 1).expect("e1");
    e0.add(&e1).expect("same level").scale(&h)
}

fn pole_offsets(offset: &Hyper) -> BTreeMap<FiberLabel, Hyper> {
    let mut m = BTreeMap::new();
    m.insert(FiberLabel::PolePos, offset.clone());
    m.insert(FiberLabel::PoleNeg, offset.clone());
    m
}

/// The 24-cell by Hopf lift: four phases {1, i, −1, −i} on each of the
/// six octahedron fibers, pole circles twisted by e^{iπ/4}.
pub fn cell24_hopf() -> Result<Configuration, ConstructionError> {
    let e0 = basis_element(1, 0)?;
    let e1 = basis_element(1, 1)?;
    let plan = LiftPlan {
        base: octahedron_base(),
        fiber_set: vec![e0.clone(), e1.clone(), e0.neg(), e1.neg()],
        offsets: pole_offsets(&pole_offset(1)),
    };
    lift(&plan, "cell24")
}

/// The 24 Hurwitz unit quaternions ±eᵢ and (±e₀±e₁±e₂±e₃)/2 — a
/// 24-cell that is closed under multiplication and negation.
pub fn hurwitz_units() -> Vec<Hyper> {
    let mut out = Vec::with_capacity(24);
    for i in 0..4 {
        for neg in [false, true] {
            let e = basis_element(2, i).expect("quaternion basis");
            out.push(if neg { e.neg() } else { e });
        }
    }
    let half = ExactScalar::ratio(1, 2);
    for signs in 0u8..16 {
        let coords: Vec<ExactScalar> = (0..4)
            .map(|k| {
                if signs >> k & 1 == 1 {
                    -&half
                } else {
                    half.clone()
                }
            })
            .collect();
        out.push(Hyper::new(2, coords).expect("four coordinates"));
    }
    out
}

/// E8 kissing configuration on S⁷ by Hopf lift: a Hurwitz 24-cell on
/// each of the ten axis fibers of S⁴, poles twisted by (e₀+e₁)/√2.
/// The kissing property (all dots ≤ 1/2) is verified exactly.
pub fn e8_hopf() -> Result<Configuration, ConstructionError> {
    let plan = LiftPlan {
        base: axis_base(2)?,
        fiber_set: hurwitz_units(),
        offsets: pole_offsets(&pole_offset(2)),
    };
    let config = lift(&plan, "e8")?;
    enforce_kissing(&config)?;
    Ok(config)
}

/// The E8 root system scaled to unit norm: 112 vectors (±1, ±1, 0⁶)/√2
/// and 128 vectors (±1/2)⁸/√2 with an even number of minus signs.
pub fn e8_canonical() -> Result<Configuration, ConstructionError> {
    let h = ExactScalar::sqrt2_ratio(1, 2); // 1/√2
    let q = ExactScalar::sqrt2_ratio(1, 4); // 1/(2√2)
    let mut pts = Vec::with_capacity(240);
    for i in 0..8 {
        for j in (i + 1)..8 {
            for si in [1i64, -1] {
                for sj in [1i64, -1] {
                    let mut v = vec![ExactScalar::zero(); 8];
                    v[i] = &h * &ExactScalar::integer(si);
                    v[j] = &h * &ExactScalar::integer(sj);
                    pts.push((v, FiberLabel::Unlabeled));
                }
            }
        }
    }
    for signs in 0u16..256 {
        if signs.count_ones() % 2 != 0 {
            continue;
        }
        let v: Vec<ExactScalar> = (0..8)
            .map(|k| {
                if signs >> k & 1 == 1 {
                    -&q
                } else {
                    q.clone()
                }
            })
            .collect();
        pts.push((v, FiberLabel::Unlabeled));
    }
    Configuration::new(ConfigMeta::canonical("e8"), 8, pts)
}

/// Λ16 kissing configuration on S¹⁵: the 240 Hopf-built E8 points,
/// read as unit octonions, lifted over the 18 axis fibers of S⁸.
///
/// The default pole offset (e₀+e₁)/√2 is checked by two exact gates:
/// the kissing property, and the Barnes–Wall lattice certificate
/// (rank 16, Gram determinant 256, even) of the points at scale 2.
/// The second gate matters: the kissing check alone also accepts
/// configurations with the same dot spectrum whose integer span is a
/// strictly denser lattice. If the default offset ever failed, the
/// other (e₀+eᵢ)/√2 and the half-unit octonions (e₀±eᵢ±eⱼ±eₖ)/2 are
/// tried in order.
pub fn lambda16_hopf() -> Result<Configuration, ConstructionError> {
    let e8 = e8_hopf()?;
    let fiber_set: Vec<Hyper> = e8
        .points()
        .iter()
        .map(|p| Hyper::new(3, p.clone()).expect("eight coordinates"))
        .collect();
    let base = axis_base(3)?;

    let mut last_err = ConstructionError::NoValidOffset;
    for offset in lambda16_offset_candidates() {
        let plan = LiftPlan {
            base: base.clone(),
            fiber_set: fiber_set.clone(),
            offsets: pole_offsets(&offset),
        };
        match lift(&plan, "lambda16").and_then(|config| {
            enforce_kissing(&config)?;
            enforce_barnes_wall_span(&config)?;
            Ok(config)
        }) {
            Ok(config) => return Ok(config),
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

/// Exact certificate that the scaled-by-2 points span a copy of BW₁₆.
fn enforce_barnes_wall_span(config: &Configuration) -> Result<(), ConstructionError> {
    use num_bigint::BigInt;
    let ok = match analysis::lattice_report(config.points(), &ExactScalar::integer(2)) {
        Ok(rep) => rep.rank == 16 && rep.determinant == BigInt::from(256) && rep.even,
        Err(_) => false,
    };
    if ok {
        Ok(())
    } else {
        Err(ConstructionError::NoValidOffset)
    }
}

fn lambda16_offset_candidates() -> Vec<Hyper> {
    let mut out = Vec::new();
    let h = ExactScalar::sqrt2_ratio(1, 2);
    let e0 = basis_element(3, 0).expect("e0");
    for i in 1..8 {
        let ei = basis_element(3, i).expect("basis");
        out.push(e0.add(&ei).expect("same level").scale(&h));
    }
    let half = ExactScalar::ratio(1, 2);
    for i in 1..8usize {
        for j in (i + 1)..8 {
            for k in (j + 1)..8 {
                for signs in 0u8..8 {
                    let mut coords = vec![ExactScalar::zero(); 8];
                    coords[0] = half.clone();
                    for (pos, idx) in [i, j, k].into_iter().enumerate() {
                        coords[idx] = if signs >> pos & 1 == 1 {
                            -&half
                        } else {
                            half.clone()
                        };
                    }
                    out.push(Hyper::new(3, coords).expect("eight coordinates"));
                }
            }
        }
    }
    out
}

fn enforce_kissing(config: &Configuration) -> Result<(), ConstructionError> {
    match analysis::kissing_witness(config.points()) {
        None => Ok(()),
        Some((first, second, dot)) => Err(ConstructionError::KissingViolation {
            first,
            second,
            dot,
        }),
    }
}

/// The minimal vectors of the Barnes–Wall lattice BW₁₆ at unit norm,
/// enumerated independently of the Hopf machinery as the oracle for
/// the Λ16 lift.
///
/// Bounded search: integer vectors x with Σxᵢ² = 8 whose reduction
/// mod 2 is a Reed–Muller RM(1,4) codeword and whose coordinate sum is
/// divisible by 4, scaled by 1/(2√2).
pub fn bw16_canonical() -> Result<Configuration, ConstructionError> {
    let code = rm14_codewords();
    let mut raw: Vec<[i8; 16]> = Vec::with_capacity(4320);
    let mut v = [0i8; 16];
    enumerate_norm8(&mut v, 0, 8, &code, &mut raw);

    let scale = ExactScalar::sqrt2_ratio(1, 4); // 1/(2√2)
    let pts: Vec<(Vec<ExactScalar>, FiberLabel)> = raw
        .iter()
        .map(|x| {
            let coords = x
                .iter()
                .map(|&c| &scale * &ExactScalar::integer(c as i64))
                .collect();
            (coords, FiberLabel::Unlabeled)
        })
        .collect();
    Configuration::new(ConfigMeta::canonical("lambda16"), 16, pts)
}

/// The 32 codewords of RM(1,4) as 16-bit masks: evaluations of affine
/// functions v ↦ a·v ⊕ b over F₂⁴.
fn rm14_codewords() -> Vec<u16> {
    let mut words = Vec::with_capacity(32);
    for a in 0u16..16 {
        for b in 0u16..2 {
            let mut w = 0u16;
            for v in 0u16..16 {
                let bit = ((a & v).count_ones() as u16 + b) & 1;
                w |= bit << v;
            }
            words.push(w);
        }
    }
    words.sort_unstable();
    words.dedup();
    debug_assert_eq!(words.len(), 32);
    words
}

fn enumerate_norm8(v: &mut [i8; 16], pos: usize, budget: i32, code: &[u16], out: &mut Vec<[i8; 16]>) {
    if pos == 16 {
        if budget != 0 {
            return;
        }
        let mut mask = 0u16;
        let mut sum = 0i32;
        for (i, &c) in v.iter().enumerate() {
            if c & 1 != 0 {
                mask |= 1 << i;
            }
            sum += c as i32;
        }
        if sum.rem_euclid(4) == 0 && code.binary_search(&mask).is_ok() {
            out.push(*v);
        }
        return;
    }
    for c in [-2i8, -1, 0, 1, 2] {
        let sq = (c as i32) * (c as i32);
        if sq <= budget {
            v[pos] = c;
            enumerate_norm8(v, pos + 1, budget - sq, code, out);
        }
    }
    v[pos] = 0;
}

/// The 40 minimal vectors (±eᵢ ± eⱼ)/√2 of D5 as base points on S⁴:
/// the quaternion part is the first four coordinates, t the fifth.
pub fn d5_kissing_40() -> Result<Vec<(BasePoint, FiberLabel)>, ConstructionError> {
    let h = ExactScalar::sqrt2_ratio(1, 2);
    let mut out = Vec::with_capacity(40);
    let mut idx = 0u16;
    for i in 0..5 {
        for j in (i + 1)..5 {
            for si in [1i64, -1] {
                for sj in [1i64, -1] {
                    let mut v = vec![ExactScalar::zero(); 5];
                    v[i] = &h * &ExactScalar::integer(si);
                    v[j] = &h * &ExactScalar::integer(sj);
                    let t = v.pop().expect("five coordinates");
                    let a = Hyper::new(2, v).expect("four coordinates");
                    out.push((BasePoint::new(a, t)?, FiberLabel::Seq(idx)));
                    idx += 1;
                }
            }
        }
    }
    Ok(out)
}
