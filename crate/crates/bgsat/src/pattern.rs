//! The Berge-Gabai pattern model: parameter validity, twisting, coordinate
//! changes on the two boundary tori, and exceptional solid-torus filling
//! slopes.
//!
//! A pattern is the closure in the solid torus of the braid word
//! `(s_b ... s_1)(s_{w-1} ... s_1)^t` with winding number `w`, bridge width
//! `b` and twist number `t = t0 + q*w`, `t0` in `[1, w-1]`.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::braid::BraidWord;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("winding number must be at least 2, got {0}")]
    WindingTooSmall(i64),
    #[error("bridge width {b} out of range [0, {max}] for winding number {w}")]
    BridgeOutOfRange { b: i64, w: i64, max: i64 },
    #[error("twist number must be non-zero")]
    ZeroTwist,
    #[error("twist number {t} is a multiple of the winding number {w}")]
    TwistMultipleOfWinding { t: i64, w: i64 },
    #[error("twist residue t0 = w - 1 = {t0} with b = {b} >= 1 closes to a link")]
    DisallowedTwistResidue { t0: i64, b: i64 },
    #[error("torus pattern requires gcd(w, t) = 1, got gcd({w}, {t}) = {g}")]
    NonCoprimeTorus { w: i64, t: i64, g: i64 },
    #[error("closure has {0} components; a pattern must close to a knot")]
    MultiComponentClosure(usize),
    #[error("neither d = {b} nor d = {b_plus_1} is coprime to w = {w}: no solid-torus filling slope exists")]
    NoSolidTorusSlope { w: i64, b: i64, b_plus_1: i64 },
}

/// A Berge-Gabai pattern `(w, b, t)` with derived residue decomposition
/// `t = t0 + q*w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BergeGabaiPattern {
    w: i64,
    b: i64,
    t: i64,
    t0: i64,
    q: i64,
}

impl BergeGabaiPattern {
    /// Validates the parameter triple and the knot-closure condition.
    pub fn new(w: i64, b: i64, t: i64) -> Result<Self, PatternError> {
        if w < 2 {
            return Err(PatternError::WindingTooSmall(w));
        }
        if b < 0 || b > w - 2 {
            return Err(PatternError::BridgeOutOfRange { b, w, max: w - 2 });
        }
        if t == 0 {
            return Err(PatternError::ZeroTwist);
        }
        if b == 0 {
            let g = w.gcd(&t);
            if g != 1 {
                return Err(PatternError::NonCoprimeTorus { w, t, g });
            }
        }
        let t0 = t.rem_euclid(w);
        if t0 == 0 {
            return Err(PatternError::TwistMultipleOfWinding { t, w });
        }
        if b >= 1 && t0 == w - 1 {
            return Err(PatternError::DisallowedTwistResidue { t0, b });
        }
        let q = (t - t0) / w;
        let p = Self { w, b, t, t0, q };
        let components = p.braid_word().closure_components();
        if components != 1 {
            return Err(PatternError::MultiComponentClosure(components));
        }
        // A closure admitting no solid-torus filling slope is not a
        // Berge-Gabai knot, even when it is a knot (e.g. (6, 2, 1)).
        if b >= 1 && p.exceptional_slope_candidates().is_empty() {
            return Err(PatternError::NoSolidTorusSlope { w, b, b_plus_1: b + 1 });
        }
        Ok(p)
    }

    /// The `(m, n)`-cable pattern, i.e. `(w, b, t) = (m, 0, n)`.
    pub fn cable(m: i64, n: i64) -> Result<Self, PatternError> {
        Self::new(m, 0, n)
    }

    pub fn winding(&self) -> i64 {
        self.w
    }

    pub fn bridge(&self) -> i64 {
        self.b
    }

    pub fn twist_number(&self) -> i64 {
        self.t
    }

    pub fn twist_residue(&self) -> i64 {
        self.t0
    }

    pub fn full_twists(&self) -> i64 {
        self.q
    }

    /// The defining braid word.
    ///
    /// For `t > 0` this is the literal positive word
    /// `(s_b ... s_1)(s_{w-1} ... s_1)^t`. For `t < 0` the equivalent
    /// all-negative form `(s_{w-1} ... s_{b+1})^{-1} (s_{w-1} ... s_1)^{t+1}`
    /// is returned, which represents the same braid group element.
    pub fn braid_word(&self) -> BraidWord {
        let mut letters: Vec<i64> = Vec::new();
        if self.t > 0 {
            letters.extend((1..=self.b).rev());
            for _ in 0..self.t {
                letters.extend((1..self.w).rev());
            }
        } else {
            letters.extend((self.b + 1..self.w).map(|i| -i));
            for _ in 0..(self.t + 1).abs() {
                letters.extend((1..self.w).map(|i| -i));
            }
        }
        BraidWord::new(self.w, letters).expect("pattern parameters give a valid word")
    }

    /// Adds `k` full Dehn twists: `t` changes by `k*w`, `t0` is unchanged
    /// and `q` changes by `k`. Valid for any integer `k`, since `t0 != 0`
    /// keeps the twist number away from multiples of the winding number.
    pub fn twist(&self, k: i64) -> BergeGabaiPattern {
        Self::new(self.w, self.b, self.t + k * self.w)
            .expect("full twisting preserves validity")
    }

    /// The possible integral solid-torus filling slopes in surgery
    /// coordinates: `{ t*w + d : d in {b, b+1}, gcd(w, d) = 1 }`.
    ///
    /// These are the only candidates; at least one of them fills to a solid
    /// torus for a genuine Berge-Gabai knot, and validation guarantees the
    /// set is non-empty.
    pub fn exceptional_slope_candidates(&self) -> BTreeSet<i64> {
        [self.b, self.b + 1]
            .into_iter()
            .filter(|d| self.w.gcd(d) == 1)
            .map(|d| self.t * self.w + d)
            .collect()
    }

    /// The `d` values in `{b, b+1}` coprime to `w`, paired with their slopes.
    pub fn candidate_pairs(&self) -> Vec<(i64, i64)> {
        [self.b, self.b + 1]
            .into_iter()
            .filter(|d| self.w.gcd(d) == 1)
            .map(|d| (d, self.t * self.w + d))
            .collect()
    }

    /// Seifert genus of the pattern viewed as a knot in the 3-sphere.
    ///
    /// For `t > 0` this is `((t - 1)(w - 1) + b) / 2`; for `t < 0` it is
    /// computed from the coherent negative braid word, genus being
    /// mirror-invariant.
    pub fn genus(&self) -> i64 {
        if self.t > 0 {
            let num = (self.t - 1) * (self.w - 1) + self.b;
            debug_assert_eq!(num % 2, 0);
            num / 2
        } else {
            self.braid_word()
                .seifert_genus()
                .expect("valid patterns close to knots with coherent words")
        }
    }

    /// Whether the pattern, embedded standardly in the 3-sphere, is an
    /// L-space knot: positive twisting gives a positive lens-space surgery,
    /// while negative-braid patterns never admit an L-space surgery.
    pub fn is_lspace_knot_in_s3(&self) -> bool {
        self.t > 0
    }
}

impl fmt::Display for BergeGabaiPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 0 {
            write!(f, "C({},{})", self.w, self.t)
        } else {
            write!(f, "BG({},{},{})", self.w, self.b, self.t)
        }
    }
}

/// Basis tag for curves on the boundary torus of the pattern neighborhood.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternBoundaryBasis {
    /// `(mu, Lambda)`: meridian and the annulus-induced longitude.
    MuLambdaUpper,
    /// `(mu, lambda)`: meridian and the 0-framed surgery longitude.
    MuLambdaSurgery,
}

/// A curve class on `J`, the boundary of a neighborhood of the pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryCurveJ {
    pub mu: i64,
    pub longitude: i64,
    pub basis: PatternBoundaryBasis,
}

impl BoundaryCurveJ {
    pub fn new(mu: i64, longitude: i64, basis: PatternBoundaryBasis) -> Self {
        Self { mu, longitude, basis }
    }

    /// Change of basis `(mu, Lambda) -> (mu, lambda)` via
    /// `Lambda = lambda + w*t*mu`: `(d, s) -> (d + s*t*w, s)`.
    ///
    /// This is a unimodular (determinant 1) change of coordinates.
    pub fn to_surgery_basis(&self, pattern: &BergeGabaiPattern) -> BoundaryCurveJ {
        match self.basis {
            PatternBoundaryBasis::MuLambdaSurgery => *self,
            PatternBoundaryBasis::MuLambdaUpper => BoundaryCurveJ {
                mu: self.mu + self.longitude * pattern.twist_number() * pattern.winding(),
                longitude: self.longitude,
                basis: PatternBoundaryBasis::MuLambdaSurgery,
            },
        }
    }
}

/// A curve class on `T`, the outer boundary of the solid torus, in the
/// `(m, l)` meridian-longitude basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryCurveT {
    pub m: i64,
    pub l: i64,
}

impl BoundaryCurveT {
    pub fn new(m: i64, l: i64) -> Self {
        Self { m, l }
    }

    /// Whether the coefficient pair is primitive, i.e. represents a slope.
    pub fn is_slope(&self) -> bool {
        self.m.gcd(&self.l) == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_examples() {
        assert!(BergeGabaiPattern::new(5, 2, 3).is_ok());
        assert_eq!(
            BergeGabaiPattern::new(5, 3, 3),
            Err(PatternError::MultiComponentClosure(2))
        );
        assert_eq!(
            BergeGabaiPattern::new(4, 2, 3),
            Err(PatternError::DisallowedTwistResidue { t0: 3, b: 2 })
        );
        assert_eq!(
            BergeGabaiPattern::new(4, 0, 2),
            Err(PatternError::NonCoprimeTorus { w: 4, t: 2, g: 2 })
        );
        assert_eq!(BergeGabaiPattern::new(1, 0, 1), Err(PatternError::WindingTooSmall(1)));
        assert_eq!(
            BergeGabaiPattern::new(3, 2, 1),
            Err(PatternError::BridgeOutOfRange { b: 2, w: 3, max: 1 })
        );
        assert_eq!(BergeGabaiPattern::new(5, 2, 0), Err(PatternError::ZeroTwist));
        assert_eq!(
            BergeGabaiPattern::new(5, 1, 10),
            Err(PatternError::TwistMultipleOfWinding { t: 10, w: 5 })
        );
        // A knot closure with no candidate filling slope is not Berge-Gabai.
        assert_eq!(
            BergeGabaiPattern::new(6, 2, 1),
            Err(PatternError::NoSolidTorusSlope { w: 6, b: 2, b_plus_1: 3 })
        );
    }

    #[test]
    fn residue_decomposition() {
        let p = BergeGabaiPattern::new(5, 2, 3).unwrap();
        assert_eq!((p.twist_residue(), p.full_twists()), (3, 0));
        let p = BergeGabaiPattern::new(5, 2, 8).unwrap();
        assert_eq!((p.twist_residue(), p.full_twists()), (3, 1));
        let p = BergeGabaiPattern::new(5, 2, -2).unwrap();
        assert_eq!((p.twist_residue(), p.full_twists()), (3, -1));
    }

    #[test]
    fn braid_word_examples() {
        let p = BergeGabaiPattern::new(5, 2, 3).unwrap();
        let word = p.braid_word();
        assert_eq!(word.len(), 14);
        assert!(word.letters().iter().all(|&l| l > 0));
        assert_eq!(&word.letters()[..6], &[2, 1, 4, 3, 2, 1]);

        let unknot = BergeGabaiPattern::new(2, 0, 1).unwrap();
        assert_eq!(unknot.braid_word().letters(), &[1]);

        let neg = BergeGabaiPattern::new(5, 2, -2).unwrap();
        let word = neg.braid_word();
        assert!(word.letters().iter().all(|&l| l < 0));
        assert_eq!(word.letters(), &[-3, -4, -1, -2, -3, -4]);
    }

    #[test]
    fn twist_examples() {
        let p = BergeGabaiPattern::new(5, 2, 3).unwrap();
        assert_eq!(p.twist(0), p);
        assert_eq!(p.twist(1), BergeGabaiPattern::new(5, 2, 8).unwrap());
        let neg = BergeGabaiPattern::new(5, 2, -2).unwrap();
        assert_eq!(neg.twist(1), p);
    }

    #[test]
    fn twist_preserves_residue_and_shifts_genus() {
        for (w, b, t) in [(5i64, 2i64, 3i64), (4, 1, 2), (7, 4, 5), (2, 0, 3)] {
            let p = BergeGabaiPattern::new(w, b, t).unwrap();
            for k in 0..4 {
                let q = p.twist(k);
                assert_eq!(q.twist_residue(), p.twist_residue());
                assert_eq!(q.bridge(), b);
                assert_eq!(q.winding(), w);
                assert_eq!(q.genus() - p.genus(), k * w * (w - 1) / 2);
            }
        }
    }

    #[test]
    fn curve_basis_change() {
        let p = BergeGabaiPattern::new(5, 2, 3).unwrap();
        let upper = |d, s| BoundaryCurveJ::new(d, s, PatternBoundaryBasis::MuLambdaUpper);
        assert_eq!(upper(0, 1).to_surgery_basis(&p).mu, 15);
        assert_eq!(upper(7, 0).to_surgery_basis(&p).mu, 7);
        // Candidate family: alpha = d mu + Lambda = (tw + d) mu + lambda.
        let alpha = upper(2, 1).to_surgery_basis(&p);
        assert_eq!((alpha.mu, alpha.longitude), (17, 1));
        assert_eq!(alpha.basis, PatternBoundaryBasis::MuLambdaSurgery);
    }

    #[test]
    fn exceptional_slope_examples() {
        let p = BergeGabaiPattern::new(5, 2, 3).unwrap();
        assert_eq!(p.exceptional_slope_candidates(), BTreeSet::from([17, 18]));
        let torus = BergeGabaiPattern::new(5, 0, 3).unwrap();
        assert_eq!(torus.exceptional_slope_candidates(), BTreeSet::from([16]));
    }

    #[test]
    fn candidates_nonempty_for_all_valid_patterns() {
        for w in 2..=10i64 {
            for b in 0..=w - 2 {
                for t in 1..=12i64 {
                    if let Ok(p) = BergeGabaiPattern::new(w, b, t) {
                        assert!(
                            !p.exceptional_slope_candidates().is_empty(),
                            "empty candidates for ({w},{b},{t})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn genus_examples() {
        assert_eq!(BergeGabaiPattern::new(5, 2, 3).unwrap().genus(), 5);
        assert_eq!(BergeGabaiPattern::new(2, 0, 1).unwrap().genus(), 0);
        assert_eq!(BergeGabaiPattern::new(5, 2, 8).unwrap().genus(), 15);
        assert_eq!(BergeGabaiPattern::new(5, 2, -2).unwrap().genus(), 1);
    }

    #[test]
    fn genus_formula_matches_seifert_algorithm() {
        for w in 2..=8i64 {
            for b in 0..=w - 2 {
                for t in 1..=12i64 {
                    if let Ok(p) = BergeGabaiPattern::new(w, b, t) {
                        assert_eq!(
                            p.genus(),
                            p.braid_word().seifert_genus().unwrap(),
                            "({w},{b},{t})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn lspace_in_s3_examples() {
        assert!(BergeGabaiPattern::new(5, 2, 3).unwrap().is_lspace_knot_in_s3());
        assert!(!BergeGabaiPattern::new(5, 2, -2).unwrap().is_lspace_knot_in_s3());
        assert!(BergeGabaiPattern::new(2, 0, 3).unwrap().is_lspace_knot_in_s3());
    }

    #[test]
    fn display_uses_cable_sugar_for_torus_patterns() {
        assert_eq!(BergeGabaiPattern::new(5, 2, 3).unwrap().to_string(), "BG(5,2,3)");
        assert_eq!(BergeGabaiPattern::new(2, 0, 3).unwrap().to_string(), "C(2,3)");
    }
}
