//! Generators for the three extremal string families and their predicted
//! counts, enabling exact tightness tests against the enumerations.

use num_rational::Ratio;
use thiserror::Error;

use crate::text::Text;

/// Exact rational parameter; used for the interval family's epsilon so that
/// `x = ceil(3 / (2 eps))` never suffers rounding.
pub type Eps = Ratio<i64>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("alphabet too small: need {needed} distinct symbols besides the separator")]
    AlphabetTooSmall { needed: usize },
    #[error("parameter out of range: {reason}")]
    ParamOutOfRange { reason: String },
}

/// Which construction a generated string realizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `a_1 x a_2 x ... a_{k-1} x a_k`: k distinct symbols interleaved with a
    /// repeated separator; attains the maximum point-SUS count (3n-1)/2.
    PointTight { k: usize },
    /// `a_1 x a_2 x ... a_{sigma-1} x^(n-2*sigma+3)`: exactly sigma symbols,
    /// n + sigma - 2 point SUSs.
    SigmaFamily { n: usize, sigma: usize },
    /// `c_1 a^x c_2 a^x c_3` with `x = ceil(3/(2 eps))`: 4x + 3 non-trivial
    /// interval SUSs from exactly 3 MUSs.
    IntervalFamily { eps: Eps, x: usize },
}

/// A generated extremal string together with its closed-form predictions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalSpec {
    pub family: Family,
    pub text: Text,
    /// Predicted |PS| for the point families, predicted |IS| for the
    /// interval family.
    pub predicted_count: usize,
    /// Predicted MUS count, where the construction pins one down.
    pub predicted_mus_count: Option<usize>,
    /// Interval family only: `(2n - 3) - (2 - eps) * n`, the gap between the
    /// general upper bound `2n - m` (with m = 3) and the attained `(2-eps)n`
    /// lower bound. Always at most `5 eps`.
    pub gap_bound: Option<Eps>,
}

impl ExtremalSpec {
    pub fn n(&self) -> usize {
        self.text.len()
    }
}

const SEPARATOR: u8 = b'x';

/// `count` distinct symbols starting at 'a', skipping the separator and
/// wrapping through the remaining byte space.
fn distinct_symbols(count: usize) -> Result<Vec<u8>, ExtremalError> {
    if count > 255 {
        return Err(ExtremalError::AlphabetTooSmall { needed: count });
    }
    let mut out = Vec::with_capacity(count);
    let mut b = b'a';
    while out.len() < count {
        if b != SEPARATOR {
            out.push(b);
        }
        b = b.wrapping_add(1);
    }
    Ok(out)
}

/// `a_1 x a_2 x ... a_k` for `k >= 3`: odd length `n = 2k - 1` and exactly
/// `(3n - 1) / 2` point SUSs. Every `a_i` is a singleton MUS, so the MUS
/// count is `k`.
pub fn gen_point_tight(k: usize) -> Result<ExtremalSpec, ExtremalError> {
    if k < 3 {
        return Err(ExtremalError::ParamOutOfRange {
            reason: format!("point-tight family needs k >= 3, got {k}"),
        });
    }
    let symbols = distinct_symbols(k)?;
    let mut bytes = Vec::with_capacity(2 * k - 1);
    for (i, &a) in symbols.iter().enumerate() {
        if i > 0 {
            bytes.push(SEPARATOR);
        }
        bytes.push(a);
    }
    let n = bytes.len();
    debug_assert_eq!(n, 2 * k - 1);
    Ok(ExtremalSpec {
        family: Family::PointTight { k },
        text: Text::new(bytes).expect("non-empty by construction"),
        predicted_count: (3 * n - 1) / 2,
        predicted_mus_count: Some(k),
        gap_bound: None,
    })
}

/// `a_1 x a_2 x ... a_{sigma-1} x^(n-2*sigma+3)` over exactly `sigma`
/// symbols, with `n + sigma - 2` point SUSs. Requires `n >= 2` and
/// `2 <= sigma <= (n+3)/2`.
pub fn gen_sigma_family(n: usize, sigma: usize) -> Result<ExtremalSpec, ExtremalError> {
    if n < 2 {
        return Err(ExtremalError::ParamOutOfRange {
            reason: format!("sigma family needs n >= 2, got {n}"),
        });
    }
    if sigma < 2 || 2 * sigma > n + 3 {
        return Err(ExtremalError::ParamOutOfRange {
            reason: format!("sigma family needs 2 <= sigma <= (n+3)/2, got sigma={sigma}, n={n}"),
        });
    }
    // the separator occurs n - sigma + 1 times and must repeat once sigma >= 3;
    // at n = sigma = 3 the construction degenerates and no 3-symbol string of
    // length 3 has n + sigma - 2 point SUSs
    if sigma >= 3 && n - sigma + 1 < 2 {
        return Err(ExtremalError::ParamOutOfRange {
            reason: format!(
                "sigma family needs sigma <= n - 1 when sigma >= 3, got sigma={sigma}, n={n}"
            ),
        });
    }
    let symbols = distinct_symbols(sigma - 1)?;
    let mut bytes = Vec::with_capacity(n);
    for (i, &a) in symbols.iter().enumerate() {
        if i > 0 {
            bytes.push(SEPARATOR);
        }
        bytes.push(a);
    }
    bytes.resize(n, SEPARATOR); // trailing x^(n - 2*sigma + 3)
    debug_assert_eq!(bytes.len(), n);
    Ok(ExtremalSpec {
        family: Family::SigmaFamily { n, sigma },
        text: Text::new(bytes).expect("non-empty by construction"),
        predicted_count: n + sigma - 2,
        predicted_mus_count: None,
        gap_bound: None,
    })
}

/// `c_1 a^x c_2 a^x c_3` with `x = ceil(3 / (2 eps))` for `eps > 0`: exactly
/// 3 MUSs and `4x + 3` non-trivial interval SUSs, which exceeds
/// `(2 - eps) n`, while the `2n - m` upper bound stays within `5 eps` of
/// `(2 - eps) n`.
pub fn gen_interval_family(eps: Eps) -> Result<ExtremalSpec, ExtremalError> {
    if eps <= Ratio::from_integer(0) {
        return Err(ExtremalError::ParamOutOfRange {
            reason: format!("interval family needs eps > 0, got {eps}"),
        });
    }
    let x_ratio = (Ratio::from_integer(3) / (Ratio::from_integer(2) * eps)).ceil();
    let x = x_ratio.to_integer().max(1) as usize;
    let n = 2 * x + 3;
    let mut bytes = Vec::with_capacity(n);
    bytes.push(b'b');
    bytes.extend(std::iter::repeat_n(b'a', x));
    bytes.push(b'c');
    bytes.extend(std::iter::repeat_n(b'a', x));
    bytes.push(b'd');
    let gap = eps * Ratio::from_integer(n as i64) - Ratio::from_integer(3);
    Ok(ExtremalSpec {
        family: Family::IntervalFamily { eps, x },
        text: Text::new(bytes).expect("non-empty by construction"),
        predicted_count: 4 * x + 3,
        predicted_mus_count: Some(3),
        gap_bound: Some(gap),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_tight_small_cases() {
        let spec = gen_point_tight(3).unwrap();
        assert_eq!(spec.text.bytes(), b"axbxc");
        assert_eq!(spec.n(), 5);
        assert_eq!(spec.predicted_count, 7);
        assert_eq!(spec.predicted_mus_count, Some(3));

        let spec = gen_point_tight(4).unwrap();
        assert_eq!(spec.text.bytes(), b"axbxcxd");
        assert_eq!(spec.predicted_count, 10);
    }

    #[test]
    fn point_tight_rejects_bad_params() {
        assert!(matches!(
            gen_point_tight(2),
            Err(ExtremalError::ParamOutOfRange { .. })
        ));
        assert!(matches!(
            gen_point_tight(256),
            Err(ExtremalError::AlphabetTooSmall { .. })
        ));
        // k = 255 is the largest realizable family
        assert!(gen_point_tight(255).is_ok());
    }

    #[test]
    fn sigma_family_small_cases() {
        let spec = gen_sigma_family(8, 3).unwrap();
        assert_eq!(spec.text.bytes(), b"axbxxxxx");
        assert_eq!(spec.predicted_count, 9);

        let spec = gen_sigma_family(4, 2).unwrap();
        assert_eq!(spec.text.bytes(), b"axxx");
        assert_eq!(spec.predicted_count, 4);
    }

    #[test]
    fn sigma_family_constraint_boundaries() {
        // sigma = (n+3)/2 exactly
        assert!(gen_sigma_family(5, 4).is_ok());
        assert!(matches!(
            gen_sigma_family(5, 5),
            Err(ExtremalError::ParamOutOfRange { .. })
        ));
        assert!(matches!(
            gen_sigma_family(1, 2),
            Err(ExtremalError::ParamOutOfRange { .. })
        ));
        assert!(matches!(
            gen_sigma_family(8, 1),
            Err(ExtremalError::ParamOutOfRange { .. })
        ));
        // the one point inside the sigma <= (n+3)/2 range where the separator
        // cannot repeat
        assert!(matches!(
            gen_sigma_family(3, 3),
            Err(ExtremalError::ParamOutOfRange { .. })
        ));
        let spec = gen_sigma_family(2, 2).unwrap();
        assert_eq!(spec.text.bytes(), b"ax");
        assert_eq!(spec.predicted_count, 2);
    }

    #[test]
    fn interval_family_unit_eps() {
        let spec = gen_interval_family(Ratio::from_integer(1)).unwrap();
        assert!(matches!(spec.family, Family::IntervalFamily { x: 2, .. }));
        assert_eq!(spec.text.bytes(), b"baacaad");
        assert_eq!(spec.n(), 7);
        assert_eq!(spec.predicted_count, 11);
        assert_eq!(spec.predicted_mus_count, Some(3));
        // gap = eps*n - 3 = 4, within 5*eps = 5
        assert_eq!(spec.gap_bound, Some(Ratio::from_integer(4)));
    }

    #[test]
    fn interval_family_fractional_eps() {
        let spec = gen_interval_family(Ratio::new(1, 2)).unwrap();
        assert!(matches!(spec.family, Family::IntervalFamily { x: 3, .. }));
        assert_eq!(spec.n(), 9);
        assert_eq!(spec.predicted_count, 15);
        let gap = spec.gap_bound.unwrap();
        assert!(gap <= Ratio::new(5, 2));
    }

    #[test]
    fn interval_family_rejects_nonpositive_eps() {
        assert!(matches!(
            gen_interval_family(Ratio::from_integer(0)),
            Err(ExtremalError::ParamOutOfRange { .. })
        ));
        assert!(matches!(
            gen_interval_family(Ratio::from_integer(-1)),
            Err(ExtremalError::ParamOutOfRange { .. })
        ));
    }

    #[test]
    fn symbols_skip_separator() {
        let syms = distinct_symbols(30).unwrap();
        assert!(!syms.contains(&SEPARATOR));
        assert_eq!(syms.len(), 30);
        let mut dedup = syms.clone();
        dedup.sort_unstable();
        dedup.dedup();
        assert_eq!(dedup.len(), 30);
    }

    #[test]
    fn large_instances_match_predictions() {
        use crate::enumeration::{enumerate_interval_sus, enumerate_point_sus};
        use crate::index::SuffixIndex;
        use crate::mus::compute_mus;

        // largest point-tight family: k = 255, n = 509
        let spec = gen_point_tight(255).unwrap();
        let mus = compute_mus(&SuffixIndex::build(&spec.text));
        assert_eq!(Some(mus.len()), spec.predicted_mus_count);
        assert_eq!(
            enumerate_point_sus(&mus, spec.n()).len(),
            spec.predicted_count
        );

        let spec = gen_sigma_family(1000, 26).unwrap();
        let mus = compute_mus(&SuffixIndex::build(&spec.text));
        assert_eq!(enumerate_point_sus(&mus, 1000).len(), spec.predicted_count);

        // eps = 1/100: x = 150, n = 303, |IS| = 603
        let spec = gen_interval_family(Ratio::new(1, 100)).unwrap();
        assert_eq!(spec.n(), 303);
        let mus = compute_mus(&SuffixIndex::build(&spec.text));
        assert_eq!(mus.len(), 3);
        assert_eq!(
            enumerate_interval_sus(&mus, 303).len(),
            spec.predicted_count
        );
        assert_eq!(spec.predicted_count, 603);
    }
}
