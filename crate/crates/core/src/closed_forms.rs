//! Published closed forms for `M_{m,n}` and `L(M_{m,n})`, evaluated exactly as
//! printed. These are comparison targets for [`crate::verify`]; no correction
//! is applied here even where a formula disagrees with the edge-sum oracle.

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::indices::{Alpha, IndexValue};
use crate::polynomial::{rational, MPoly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("{formula} is stated for m >= {min_m}, n >= {min_n}; got m = {m}, n = {n}")]
    OutOfStatedRange {
        formula: &'static str,
        m: i64,
        n: i64,
        min_m: i64,
        min_n: i64,
    },
}

/// A closed-form result with its stated parameter domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatedDomain {
    pub name: &'static str,
    pub min_m: i64,
    pub min_n: i64,
}

impl StatedDomain {
    pub fn contains(&self, m: i64, n: i64) -> bool {
        m >= self.min_m && n >= self.min_n
    }

    fn check(&self, m: i64, n: i64) -> Result<(), ClosedFormError> {
        if self.contains(m, n) {
            Ok(())
        } else {
            Err(ClosedFormError::OutOfStatedRange {
                formula: self.name,
                m,
                n,
                min_m: self.min_m,
                min_n: self.min_n,
            })
        }
    }
}

pub const LADDER_MPOLY: StatedDomain = StatedDomain { name: "ladder M-polynomial", min_m: 4, min_n: 2 };
pub const LINE_MPOLY: StatedDomain = StatedDomain { name: "line-graph M-polynomial", min_m: 4, min_n: 4 };
pub const LADDER_INDICES: StatedDomain = StatedDomain { name: "ladder indices", min_m: 4, min_n: 2 };
pub const LINE_INDICES: StatedDomain = StatedDomain { name: "line-graph indices", min_m: 4, min_n: 4 };

/// `2(m−1)x³y³ + 2(m−1)x³y⁴ + (m−1)(2n−5)x⁴y⁴`
pub fn thm31_mpoly(m: i64, n: i64) -> Result<MPoly, ClosedFormError> {
    LADDER_MPOLY.check(m, n)?;
    Ok(MPoly::from_terms([
        ((3, 3), rational(2 * (m - 1))),
        ((3, 4), rational(2 * (m - 1))),
        ((4, 4), rational((m - 1) * (2 * n - 5))),
    ]))
}

/// `2(m−1)x⁴y⁴ + 4(m−1)x⁴y⁵ + 6(m−1)x⁵y⁶ + 6(m−1)(n−3)x⁶y⁶`
pub fn thm32_mpoly(m: i64, n: i64) -> Result<MPoly, ClosedFormError> {
    LINE_MPOLY.check(m, n)?;
    Ok(MPoly::from_terms([
        ((4, 4), rational(2 * (m - 1))),
        ((4, 5), rational(4 * (m - 1))),
        ((5, 6), rational(6 * (m - 1))),
        ((6, 6), rational(6 * (m - 1) * (n - 3))),
    ]))
}

/// The six published index expressions at one `(m, n, α)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PaperIndexSet {
    pub m1: Rational,
    pub m2: Rational,
    pub mm2: Rational,
    pub r_alpha: IndexValue,
    pub rr_alpha: IndexValue,
    pub sdd: Rational,
    pub alpha: Alpha,
}

fn power(base: &Rational, alpha: Alpha) -> IndexValue {
    match alpha.as_integer() {
        Some(k) => IndexValue::Exact(base.pow(k)),
        None => IndexValue::Real(base.to_f64().unwrap_or(f64::NAN).powf(alpha.value())),
    }
}

fn frac(num: i64, den: i64) -> Rational {
    crate::polynomial::ratio(num, den)
}

/// Published indices of `M_{m,n}`:
///
/// * `M1 = 16mn − 20m − 16n + 14`
/// * `M2 = 16(4n−3)(n−1)(m−1)²`
/// * `MM2 = (1/144)(6n−1)(6n+1)(m−1)²`
/// * `R_α = [M2]^α`, `RR_α = [MM2]^α`
/// * `SDD = (1/72)(48n²−42n+1)(m−1)²`
pub fn prop41_indices(m: i64, n: i64, alpha: Alpha) -> Result<PaperIndexSet, ClosedFormError> {
    LADDER_INDICES.check(m, n)?;
    let sq = (m - 1) * (m - 1);
    let m2 = rational(16 * (4 * n - 3) * (n - 1) * sq);
    let mm2 = frac((6 * n - 1) * (6 * n + 1) * sq, 144);
    Ok(PaperIndexSet {
        m1: rational(16 * m * n - 20 * m - 16 * n + 14),
        r_alpha: power(&m2, alpha),
        rr_alpha: power(&mm2, alpha),
        m2,
        mm2,
        sdd: frac((48 * n * n - 42 * n + 1) * sq, 72),
        alpha,
    })
}

/// Published indices of `L(M_{m,n})`:
///
/// * `M1 = 2(36n−49)(m−1)`
/// * `M2 = 72(9n−11)(2n−3)(m−1)²`
/// * `MM2 = (1/100)(10n−3)(10n−7)(m−1)²`
/// * `R_α = [M2]^α`, `RR_α = [MM2]^α`
/// * `SDD = (1/72)(48n²−42n+1)(m−1)²`
pub fn prop42_indices(m: i64, n: i64, alpha: Alpha) -> Result<PaperIndexSet, ClosedFormError> {
    LINE_INDICES.check(m, n)?;
    let sq = (m - 1) * (m - 1);
    let m2 = rational(72 * (9 * n - 11) * (2 * n - 3) * sq);
    let mm2 = frac((10 * n - 3) * (10 * n - 7) * sq, 100);
    Ok(PaperIndexSet {
        m1: rational(2 * (36 * n - 49) * (m - 1)),
        r_alpha: power(&m2, alpha),
        rr_alpha: power(&mm2, alpha),
        m2,
        mm2,
        sdd: frac((48 * n * n - 42 * n + 1) * sq, 72),
        alpha,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[((u32, u32), i64)]) -> MPoly {
        MPoly::from_terms(terms.iter().map(|&(k, c)| (k, rational(c))))
    }

    #[test]
    fn thm31_substitutions() {
        assert_eq!(
            thm31_mpoly(7, 3).unwrap(),
            poly(&[((3, 3), 12), ((3, 4), 12), ((4, 4), 6)])
        );
        assert_eq!(
            thm31_mpoly(4, 2).unwrap(),
            poly(&[((3, 3), 6), ((3, 4), 6), ((4, 4), -3)])
        );
        assert_eq!(
            thm31_mpoly(5, 6).unwrap(),
            poly(&[((3, 3), 8), ((3, 4), 8), ((4, 4), 28)])
        );
        assert!(thm31_mpoly(3, 4).is_err());
    }

    #[test]
    fn thm32_substitutions() {
        assert_eq!(
            thm32_mpoly(5, 6).unwrap(),
            poly(&[((4, 4), 8), ((4, 5), 16), ((5, 6), 24), ((6, 6), 72)])
        );
        assert_eq!(
            thm32_mpoly(4, 4).unwrap(),
            poly(&[((4, 4), 6), ((4, 5), 12), ((5, 6), 18), ((6, 6), 18)])
        );
        assert_eq!(
            thm32_mpoly(4, 3),
            Err(ClosedFormError::OutOfStatedRange {
                formula: "line-graph M-polynomial",
                m: 4,
                n: 3,
                min_m: 4,
                min_n: 4
            })
        );
    }

    #[test]
    fn closed_form_edge_totals() {
        for m in 4..=12 {
            for n in 2..=10 {
                assert_eq!(
                    thm31_mpoly(m, n).unwrap().eval_at_one(),
                    rational((m - 1) * (2 * n - 1))
                );
                if n >= 4 {
                    assert_eq!(
                        thm32_mpoly(m, n).unwrap().eval_at_one(),
                        rational(6 * (m - 1) * (n - 1))
                    );
                }
            }
        }
    }

    #[test]
    fn prop41_substitutions() {
        let p = prop41_indices(7, 3, Alpha::from(1)).unwrap();
        assert_eq!(p.m1, rational(162));
        assert_eq!(p.m2, rational(10368));
        assert_eq!(p.r_alpha, IndexValue::Exact(rational(10368)));
        assert_eq!(p.mm2, frac(17 * 19 * 36, 144));
        assert_eq!(p.sdd, frac(307 * 36, 72));
        for (m, n) in [(4, 2), (9, 7)] {
            let z = prop41_indices(m, n, Alpha::from(0)).unwrap();
            assert_eq!(z.r_alpha, IndexValue::Exact(rational(1)));
            assert_eq!(z.rr_alpha, IndexValue::Exact(rational(1)));
        }
        assert!(prop41_indices(4, 1, Alpha::from(1)).is_err());
    }

    #[test]
    fn prop42_substitutions() {
        let p = prop42_indices(5, 6, Alpha::from(1)).unwrap();
        assert_eq!(p.m1, rational(1336));
        assert_eq!(p.m2, rational(445824));
        for (m, n) in [(4, 4), (10, 10)] {
            let z = prop42_indices(m, n, Alpha::from(0)).unwrap();
            assert_eq!(z.rr_alpha, IndexValue::Exact(rational(1)));
        }
        assert!(prop42_indices(5, 3, Alpha::from(1)).is_err());
    }

    #[test]
    fn real_alpha_uses_floating_point() {
        let half = Alpha::new(0.5).unwrap();
        let p = prop41_indices(7, 3, half).unwrap();
        assert_eq!(p.r_alpha, IndexValue::Real(10368f64.sqrt()));
        let neg = prop41_indices(7, 3, Alpha::from(-1)).unwrap();
        assert_eq!(neg.r_alpha, IndexValue::Exact(frac(1, 10368)));
    }
}
