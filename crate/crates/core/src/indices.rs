//! Degree-based topological indices, computed two independent ways:
//! by summing over the edges of a graph, and by applying the operator calculus
//! to an M-polynomial and evaluating at `x = y = 1`.
//!
//! For an edge `uv` with endpoint degrees `d_u`, `d_v`:
//!
//! | index   | edge contribution                      | operator on `M(G)`        |
//! |---------|----------------------------------------|---------------------------|
//! | `M1`    | `d_u + d_v`                            | `D_x + D_y`               |
//! | `M2`    | `d_u·d_v`                              | `D_x D_y`                 |
//! | `MM2`   | `1/(d_u·d_v)`                          | `S_x S_y`                 |
//! | `R_α`   | `(d_u·d_v)^α`                          | `D_x^α D_y^α`             |
//! | `RR_α`  | `(d_u·d_v)^{−α}`                       | `S_x^α S_y^α`             |
//! | `SDD`   | `min/max + max/min`                    | `D_x S_y + S_x D_y`       |
//!
//! Integer α stays exact. Non-integer α is summed in double precision and
//! compared with a relative tolerance of [`REAL_TOLERANCE`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::graph::Graph;
use crate::json::{format_real, JsonRational, JsonReal};
use crate::polynomial::{MPoly, PolyError, Rational};

/// Relative tolerance for real-valued comparisons.
pub const REAL_TOLERANCE: f64 = 1e-12;

/// The exponent of a (reciprocal) generalized Randić index.
///
/// Always finite; `-0.0` is stored as `0.0` so that keys compare cleanly.
#[derive(Debug, Clone, Copy)]
pub struct Alpha(f64);

impl Alpha {
    /// `None` for NaN or infinities.
    pub fn new(value: f64) -> Option<Self> {
        value.is_finite().then_some(Alpha(value + 0.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// The exponent as an `i32` when it is integral and in range.
    pub fn as_integer(self) -> Option<i32> {
        let v = self.0;
        (v.fract() == 0.0 && v >= i32::MIN as f64 && v <= i32::MAX as f64).then_some(v as i32)
    }

    pub fn negated(self) -> Alpha {
        Alpha(-self.0 + 0.0)
    }
}

impl From<i32> for Alpha {
    fn from(v: i32) -> Self {
        Alpha(v as f64)
    }
}

impl PartialEq for Alpha {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Alpha {}

impl std::hash::Hash for Alpha {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.to_bits().hash(state);
    }
}

impl PartialOrd for Alpha {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Alpha {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(k) => write!(f, "{k}"),
            None => write!(f, "{}", self.0),
        }
    }
}

impl Serialize for Alpha {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        JsonReal(self.0).serialize(serializer)
    }
}

/// An index value: exact for integer exponents, a double otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum IndexValue {
    Exact(Rational),
    Real(f64),
}

impl IndexValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            IndexValue::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            IndexValue::Real(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            IndexValue::Exact(r) => Some(r),
            IndexValue::Real(_) => None,
        }
    }

    /// Exact equality when both sides are exact, otherwise relative closeness
    /// within [`REAL_TOLERANCE`].
    pub fn agrees_with(&self, other: &IndexValue) -> bool {
        match (self, other) {
            (IndexValue::Exact(a), IndexValue::Exact(b)) => a == b,
            _ => relative_close(self.to_f64(), other.to_f64(), REAL_TOLERANCE),
        }
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Exact(r) => write!(f, "{r}"),
            IndexValue::Real(x) => f.write_str(&format_real(*x)),
        }
    }
}

impl Serialize for IndexValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            IndexValue::Exact(r) => JsonRational::from(r).serialize(serializer),
            IndexValue::Real(x) => JsonReal(*x).serialize(serializer),
        }
    }
}

/// `|a − b| <= tol · max(|a|, |b|)`.
pub fn relative_close(a: f64, b: f64, tol: f64) -> bool {
    if a == b {
        return true;
    }
    if !a.is_finite() || !b.is_finite() {
        return false;
    }
    (a - b).abs() <= tol * a.abs().max(b.abs())
}

/// The six indices of one graph. `r_alpha` and `rr_alpha` are keyed by exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexSet {
    pub m1: Rational,
    pub m2: Rational,
    pub mm2: Rational,
    pub sdd: Rational,
    pub r_alpha: BTreeMap<Alpha, IndexValue>,
    pub rr_alpha: BTreeMap<Alpha, IndexValue>,
}

impl IndexSet {
    pub fn r(&self, alpha: impl Into<Alpha>) -> Option<&IndexValue> {
        self.r_alpha.get(&alpha.into())
    }

    pub fn rr(&self, alpha: impl Into<Alpha>) -> Option<&IndexValue> {
        self.rr_alpha.get(&alpha.into())
    }

    /// Field-by-field agreement with another set over the same exponents.
    pub fn agreement(&self, other: &IndexSet) -> IndexAgreement {
        let keyed = |a: &BTreeMap<Alpha, IndexValue>, b: &BTreeMap<Alpha, IndexValue>| {
            a.keys()
                .chain(b.keys())
                .map(|k| {
                    let ok = match (a.get(k), b.get(k)) {
                        (Some(x), Some(y)) => x.agrees_with(y),
                        _ => false,
                    };
                    (*k, ok)
                })
                .collect()
        };
        IndexAgreement {
            m1: self.m1 == other.m1,
            m2: self.m2 == other.m2,
            mm2: self.mm2 == other.mm2,
            sdd: self.sdd == other.sdd,
            r_alpha: keyed(&self.r_alpha, &other.r_alpha),
            rr_alpha: keyed(&self.rr_alpha, &other.rr_alpha),
        }
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        IndexSetJson::from(self).serialize(serializer)
    }
}

#[derive(Serialize)]
struct AlphaValueJson<'a> {
    alpha: Alpha,
    value: &'a IndexValue,
}

#[derive(Serialize)]
struct IndexSetJson<'a> {
    m1: JsonRational,
    m2: JsonRational,
    mm2: JsonRational,
    sdd: JsonRational,
    r_alpha: Vec<AlphaValueJson<'a>>,
    rr_alpha: Vec<AlphaValueJson<'a>>,
}

impl<'a> From<&'a IndexSet> for IndexSetJson<'a> {
    fn from(s: &'a IndexSet) -> Self {
        let list = |m: &'a BTreeMap<Alpha, IndexValue>| {
            m.iter()
                .map(|(&alpha, value)| AlphaValueJson { alpha, value })
                .collect()
        };
        IndexSetJson {
            m1: (&s.m1).into(),
            m2: (&s.m2).into(),
            mm2: (&s.mm2).into(),
            sdd: (&s.sdd).into(),
            r_alpha: list(&s.r_alpha),
            rr_alpha: list(&s.rr_alpha),
        }
    }
}

/// Per-index agreement flags between two [`IndexSet`]s.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexAgreement {
    pub m1: bool,
    pub m2: bool,
    pub mm2: bool,
    pub sdd: bool,
    #[serde(serialize_with = "serialize_flags")]
    pub r_alpha: BTreeMap<Alpha, bool>,
    #[serde(serialize_with = "serialize_flags")]
    pub rr_alpha: BTreeMap<Alpha, bool>,
}

fn serialize_flags<S: Serializer>(
    flags: &BTreeMap<Alpha, bool>,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Flag {
        alpha: Alpha,
        agree: bool,
    }
    serializer.collect_seq(flags.iter().map(|(&alpha, &agree)| Flag { alpha, agree }))
}

impl IndexAgreement {
    pub fn all(&self) -> bool {
        self.m1
            && self.m2
            && self.mm2
            && self.sdd
            && self.r_alpha.values().all(|&b| b)
            && self.rr_alpha.values().all(|&b| b)
    }
}

fn int(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Definitional indices: sums over the edges of `g`.
pub fn indices_from_edges(g: &Graph, alphas: &[Alpha]) -> IndexSet {
    let mut m1 = Rational::zero();
    let mut m2 = Rational::zero();
    let mut mm2 = Rational::zero();
    let mut sdd = Rational::zero();
    let mut r_alpha = BTreeMap::new();
    let mut rr_alpha = BTreeMap::new();

    let pairs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (g.degree(u), g.degree(v)))
        .collect();

    for &(du, dv) in &pairs {
        let (lo, hi) = (du.min(dv), du.max(dv));
        m1 += int(du + dv);
        m2 += int(du * dv);
        mm2 += Rational::new(BigInt::one(), BigInt::from(du * dv));
        sdd += Rational::new(BigInt::from(lo), BigInt::from(hi))
            + Rational::new(BigInt::from(hi), BigInt::from(lo));
    }

    for &alpha in alphas {
        let sum = |a: Alpha| match a.as_integer() {
            Some(k) => IndexValue::Exact(
                pairs
                    .iter()
                    .fold(Rational::zero(), |acc, &(du, dv)| acc + int(du * dv).pow(k)),
            ),
            None => IndexValue::Real(
                pairs
                    .iter()
                    .map(|&(du, dv)| ((du * dv) as f64).powf(a.value()))
                    .sum(),
            ),
        };
        r_alpha.insert(alpha, sum(alpha));
        rr_alpha.insert(alpha, sum(alpha.negated()));
    }

    IndexSet {
        m1,
        m2,
        mm2,
        sdd,
        r_alpha,
        rr_alpha,
    }
}

/// Indices recovered from an M-polynomial through the operator calculus.
///
/// Every term must have both exponents at least 1; otherwise the `S` operators
/// are undefined and [`PolyError::ZeroExponentWeight`] is returned.
pub fn indices_from_mpoly(p: &MPoly, alphas: &[Alpha]) -> Result<IndexSet, PolyError> {
    if let Some((i, j)) = p.exponents().find(|&(i, j)| i == 0 || j == 0) {
        return Err(PolyError::ZeroExponentWeight { i, j, a: -1, b: -1 });
    }
    let at_one = |a: i32, b: i32| p.weight_by(a, b).map(|q| q.eval_at_one());

    let m1 = (p.d_x() + p.d_y()).eval_at_one();
    let m2 = at_one(1, 1)?;
    let mm2 = at_one(-1, -1)?;
    let sdd = (p.weight_by(1, -1)? + p.weight_by(-1, 1)?).eval_at_one();

    let mut r_alpha = BTreeMap::new();
    let mut rr_alpha = BTreeMap::new();
    for &alpha in alphas {
        let recover = |a: Alpha| -> Result<IndexValue, PolyError> {
            Ok(match a.as_integer() {
                Some(k) => IndexValue::Exact(at_one(k, k)?),
                None => IndexValue::Real(
                    p.terms()
                        .map(|((i, j), c)| {
                            c.to_f64().unwrap_or(f64::NAN) * ((i * j) as f64).powf(a.value())
                        })
                        .sum(),
                ),
            })
        };
        r_alpha.insert(alpha, recover(alpha)?);
        rr_alpha.insert(alpha, recover(alpha.negated())?);
    }

    Ok(IndexSet {
        m1,
        m2,
        mm2,
        sdd,
        r_alpha,
        rr_alpha,
    })
}

/// Parses real exponents, rejecting non-finite values.
pub fn alphas(values: &[f64]) -> Option<Vec<Alpha>> {
    values.iter().map(|&v| Alpha::new(v)).collect()
}
