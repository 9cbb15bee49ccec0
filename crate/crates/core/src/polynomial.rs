//! Exact bivariate polynomials in `x` and `y` with rational coefficients, and the
//! degree-weight operator calculus used to read topological indices off an
//! M-polynomial.
//!
//! The derivative-like operator `D_x = x ∂/∂x` maps a term `c·x^i·y^j` to
//! `i·c·x^i·y^j`, and the integral-like operator `S_x = ∫_0^x M(t, y)/t dt` maps it
//! to `(c/i)·x^i·y^j`. Both are coefficient reweightings on a finite term map, so
//! every operator in the index table reduces to [`MPoly::weight_by`] with a pair of
//! integer exponents:
//!
//! | operator                  | `(a, b)`     |
//! |---------------------------|--------------|
//! | `D_x`                     | `(1, 0)`     |
//! | `D_y`                     | `(0, 1)`     |
//! | `S_x`                     | `(-1, 0)`    |
//! | `S_y`                     | `(0, -1)`    |
//! | `D_x^α D_y^α`             | `(α, α)`     |
//! | `S_x^α S_y^α`             | `(-α, -α)`   |
//! | `D_x S_y`                 | `(1, -1)`    |

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::json::JsonInt;

/// Exact integer fraction, always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds a [`Rational`] from a machine integer.
pub fn rational(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Builds the reduced fraction `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// A negative weight met a zero exponent; the `S` operator integral diverges there.
    #[error("negative weight ({a}, {b}) applied to term x^{i}*y^{j} with a zero exponent")]
    ZeroExponentWeight { i: u32, j: u32, a: i32, b: i32 },
}

/// Output flavours for [`MPoly::render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    /// `6*x^3*y^3+12*x^3*y^4`
    Plain,
    /// `6x^{3}y^{3}+12x^{3}y^{4}`
    Latex,
    /// `[{"i":3,"j":3,"num":6,"den":1},...]`
    Json,
}

/// A finite map from exponent pairs `(i, j)` to non-zero rational coefficients.
///
/// Terms are kept in a `BTreeMap`, so iteration is always in ascending
/// lexicographic `(i, j)` order and structural equality is polynomial equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl MPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// A single term `coeff·x^i·y^j` (the zero polynomial if `coeff` is zero).
    pub fn monomial(i: u32, j: u32, coeff: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, coeff);
        p
    }

    /// Collects terms, summing repeated exponent pairs and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), Rational)>,
    {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let key = (i, j);
        let sum = match self.terms.remove(&key) {
            Some(existing) => existing + coeff,
            None => coeff,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (non-zero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `x^i·y^j`, zero when the term is absent.
    pub fn coefficient(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    /// Exponent pairs in ascending order.
    pub fn exponents(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.terms.keys().copied()
    }

    /// Multiplies the coefficient of every term `x^i·y^j` by `i^a · j^b`.
    ///
    /// Negative weights require the matching exponent to be non-zero on every term.
    pub fn weight_by(&self, a: i32, b: i32) -> Result<MPoly, PolyError> {
        let mut terms = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            if (a < 0 && i == 0) || (b < 0 && j == 0) {
                return Err(PolyError::ZeroExponentWeight { i, j, a, b });
            }
            let w = exponent_power(i, a) * exponent_power(j, b);
            let weighted = c * w;
            if !weighted.is_zero() {
                terms.insert((i, j), weighted);
            }
        }
        Ok(MPoly { terms })
    }

    /// `D_x`: `x ∂/∂x`.
    pub fn d_x(&self) -> MPoly {
        self.weight_by(1, 0).expect("non-negative weights never fail")
    }

    /// `D_y`: `y ∂/∂y`.
    pub fn d_y(&self) -> MPoly {
        self.weight_by(0, 1).expect("non-negative weights never fail")
    }

    /// `S_x`: `∫_0^x p(t, y)/t dt`.
    pub fn s_x(&self) -> Result<MPoly, PolyError> {
        self.weight_by(-1, 0)
    }

    /// `S_y`: `∫_0^y p(x, t)/t dt`.
    pub fn s_y(&self) -> Result<MPoly, PolyError> {
        self.weight_by(0, -1)
    }

    /// Value at `x = y = 1`, i.e. the sum of all coefficients.
    pub fn eval_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Deterministic text rendering with terms in ascending `(i, j)` order.
    pub fn render(&self, format: RenderFormat) -> String {
        match format {
            RenderFormat::Plain => self.render_text(false),
            RenderFormat::Latex => self.render_text(true),
            RenderFormat::Json => serde_json::to_string(&self.term_records())
                .expect("term records always serialize"),
        }
    }

    /// The JSON term records `{i, j, num, den}` in rendering order.
    pub fn term_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(&(i, j), c)| TermRecord {
                i,
                j,
                num: JsonInt(c.numer().clone()),
                den: JsonInt(c.denom().clone()),
            })
            .collect()
    }

    fn render_text(&self, latex: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (&(i, j), c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                out.push('-');
            } else if idx > 0 {
                out.push('+');
            }
            out.push_str(&render_term(&c.abs(), i, j, latex));
        }
        out
    }
}

/// One serialized term of an [`MPoly`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermRecord {
    pub i: u32,
    pub j: u32,
    pub num: JsonInt,
    pub den: JsonInt,
}

fn exponent_power(base: u32, exp: i32) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    Rational::from_integer(BigInt::from(base)).pow(exp)
}

fn render_term(magnitude: &Rational, i: u32, j: u32, latex: bool) -> String {
    let mut factors: Vec<String> = Vec::new();
    let unit = magnitude.is_one();
    if !unit || (i == 0 && j == 0) {
        factors.push(render_coefficient(magnitude, latex));
    }
    for (var, e) in [("x", i), ("y", j)] {
        match (e, latex) {
            (0, _) => {}
            (1, _) => factors.push(var.to_string()),
            (_, false) => factors.push(format!("{var}^{e}")),
            (_, true) => factors.push(format!("{var}^{{{e}}}")),
        }
    }
    factors.join(if latex { "" } else { "*" })
}

fn render_coefficient(c: &Rational, latex: bool) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else if latex {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(RenderFormat::Plain))
    }
}

impl Add for &MPoly {
    type Output = MPoly;

    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;

    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Sub for &MPoly {
    type Output = MPoly;

    fn sub(self, rhs: &MPoly) -> MPoly {
        self + &(-rhs)
    }
}

/// Coefficient-wise sum of two polynomials.
pub fn poly_add(p: &MPoly, q: &MPoly) -> MPoly {
    p + q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(i: u32, j: u32, c: i64) -> MPoly {
        MPoly::monomial(i, j, rational(c))
    }

    fn path4() -> MPoly {
        &mono(1, 2, 2) + &mono(2, 2, 1)
    }

    #[test]
    fn like_terms_add() {
        assert_eq!(poly_add(&mono(3, 3, 2), &mono(3, 3, 3)), mono(3, 3, 5));
    }

    #[test]
    fn zero_is_additive_identity() {
        let p = path4();
        assert_eq!(poly_add(&p, &MPoly::zero()), p);
    }

    #[test]
    fn cancellation_removes_term() {
        let sum = poly_add(&mono(1, 2, 1), &mono(1, 2, -1));
        assert!(sum.is_zero());
        assert_eq!(sum.len(), 0);
        assert_eq!(sum, MPoly::zero());
    }

    #[test]
    fn weight_by_realizes_d_and_s() {
        assert_eq!(mono(3, 3, 2).weight_by(1, 0).unwrap(), mono(3, 3, 6));
        assert_eq!(
            mono(4, 4, 1).weight_by(-1, 0).unwrap(),
            MPoly::monomial(4, 4, ratio(1, 4))
        );
        let p = path4();
        assert_eq!(p.weight_by(0, 0).unwrap(), p);
        assert_eq!(p.d_y(), &mono(1, 2, 4) + &mono(2, 2, 2));
    }

    #[test]
    fn negative_weight_on_zero_exponent_fails() {
        let p = &mono(0, 2, 1) + &mono(1, 1, 1);
        assert_eq!(
            p.weight_by(-1, 0),
            Err(PolyError::ZeroExponentWeight { i: 0, j: 2, a: -1, b: 0 })
        );
        assert!(p.weight_by(0, -1).is_ok());
        assert!(mono(3, 0, 1).s_y().is_err());
    }

    #[test]
    fn eval_at_one_sums_coefficients() {
        assert_eq!(MPoly::zero().eval_at_one(), rational(0));
        let ladder_7_3 = MPoly::from_terms([
            ((3, 3), rational(12)),
            ((3, 4), rational(12)),
            ((4, 4), rational(6)),
        ]);
        assert_eq!(ladder_7_3.eval_at_one(), rational(30));
        assert_eq!(path4().eval_at_one(), rational(3));
    }

    #[test]
    fn render_plain() {
        assert_eq!(mono(3, 3, 6).render(RenderFormat::Plain), "6*x^3*y^3");
        assert_eq!(MPoly::zero().render(RenderFormat::Plain), "0");
        assert_eq!(path4().render(RenderFormat::Plain), "2*x*y^2+x^2*y^2");
        let mixed = MPoly::from_terms([
            ((3, 3), rational(6)),
            ((4, 4), rational(-3)),
            ((0, 0), ratio(-1, 2)),
        ]);
        assert_eq!(mixed.render(RenderFormat::Plain), "-1/2+6*x^3*y^3-3*x^4*y^4");
    }

    #[test]
    fn render_latex() {
        let p = MPoly::from_terms([
            ((3, 3), rational(12)),
            ((3, 4), rational(12)),
            ((4, 4), rational(6)),
        ]);
        assert_eq!(
            p.render(RenderFormat::Latex),
            "12x^{3}y^{3}+12x^{3}y^{4}+6x^{4}y^{4}"
        );
        assert_eq!(
            MPoly::monomial(4, 4, ratio(1, 4)).render(RenderFormat::Latex),
            "\\frac{1}{4}x^{4}y^{4}"
        );
    }

    #[test]
    fn render_json() {
        assert_eq!(
            path4().render(RenderFormat::Json),
            r#"[{"i":1,"j":2,"num":2,"den":1},{"i":2,"j":2,"num":1,"den":1}]"#
        );
        assert_eq!(MPoly::zero().render(RenderFormat::Json), "[]");
    }

    #[test]
    fn json_keeps_big_coefficients_exact() {
        let big = Rational::new(
            "123456789012345678901234567890".parse().unwrap(),
            BigInt::from(11),
        );
        let json = MPoly::monomial(1, 1, big).render(RenderFormat::Json);
        assert_eq!(
            json,
            r#"[{"i":1,"j":1,"num":123456789012345678901234567890,"den":11}]"#
        );
    }
}
