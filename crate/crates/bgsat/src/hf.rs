//! The Heegaard Floer surgery calculus: the `t^{m/n}` invariant, the
//! surgery rank formula, L-space predicates for surgeries and for
//! Berge-Gabai satellites, tau/4-ball-genus propagation, and the parity
//! identities behind the satellite criterion as checkable reports.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::alexander::{self, AlexanderError};
use crate::laurent::LaurentPoly;
use crate::pattern::BergeGabaiPattern;
use crate::surgery::Slope;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HfError {
    #[error("invalid HF knot data: {0}")]
    InvalidData(String),
    #[error("HF data is not determined by this calculus for {0}")]
    NotDetermined(String),
    #[error("rank formula requires L-space knot data")]
    NotLspaceData,
    #[error("negative-slope ranks are out of scope; use rank HF(Y) = rank HF(-Y) and mirror the knot")]
    NegativeSlopeOutOfScope,
    #[error("satellite criterion requires a companion of positive genus")]
    TrivialCompanion,
    #[error("operation requires a positively twisted pattern")]
    NonPositiveTwist,
    #[error("operation requires a satellite descriptor")]
    NotASatellite,
    #[error("satellite hypotheses not satisfied: {0}")]
    HypothesesNotMet(String),
    #[error("no Alexander polynomial data for catalog knot {0}")]
    NoPolynomialData(String),
    #[error(transparent)]
    Alexander(#[from] AlexanderError),
}

/// The Heegaard Floer surgery package of a knot: genus, nu, the
/// subquotient-rank excess `s`, tau, and the L-space-knot flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HfKnotData {
    pub genus: i64,
    pub nu: i64,
    pub s: i64,
    pub tau: i64,
    pub lspace: bool,
}

impl HfKnotData {
    pub fn new(genus: i64, nu: i64, s: i64, tau: i64, lspace: bool) -> Result<Self, HfError> {
        let err = |msg: String| Err(HfError::InvalidData(msg));
        if genus < 0 {
            return err(format!("genus {genus} must be non-negative"));
        }
        if !(tau <= nu && nu <= genus) {
            return err(format!("need tau <= nu <= genus, got tau={tau}, nu={nu}, g={genus}"));
        }
        if nu != tau && nu != tau + 1 {
            return err(format!("nu must be tau or tau+1, got nu={nu}, tau={tau}"));
        }
        if s < 0 || s % 2 != 0 {
            return err(format!("s must be a non-negative even integer, got {s}"));
        }
        if lspace && !(s == 0 && nu == genus && tau == genus) {
            return err(format!(
                "L-space knots need s=0 and nu=tau=g, got s={s}, nu={nu}, tau={tau}, g={genus}"
            ));
        }
        Ok(Self { genus, nu, s, tau, lspace })
    }

    /// The package of an L-space knot of the given genus:
    /// `nu = tau = g`, `s = 0`.
    pub fn lspace_knot(genus: i64) -> Self {
        Self { genus, nu: genus, s: 0, tau: genus, lspace: true }
    }
}

/// A recursive knot description: unknot, torus knot, Berge-Gabai
/// satellite, or a catalog entry with user-asserted HF data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotDescriptor {
    Unknot,
    /// `(p, q)`-torus knot, `p >= 2`, `gcd(p, q) = 1`; negative `q` models
    /// mirrors of positive torus knots.
    Torus { p: i64, q: i64 },
    BgSat {
        pattern: BergeGabaiPattern,
        companion: Box<KnotDescriptor>,
    },
    Catalog {
        name: String,
        data: HfKnotData,
        hyperbolic: bool,
    },
}

impl KnotDescriptor {
    pub fn torus(p: i64, q: i64) -> Result<Self, HfError> {
        if p < 2 {
            return Err(HfError::InvalidData(format!("torus parameter p={p} must be >= 2")));
        }
        if q == 0 || p.gcd(&q) != 1 {
            return Err(HfError::InvalidData(format!(
                "torus parameters must be coprime and q non-zero, got ({p},{q})"
            )));
        }
        Ok(Self::Torus { p, q })
    }

    pub fn satellite(pattern: BergeGabaiPattern, companion: KnotDescriptor) -> Self {
        Self::BgSat { pattern, companion: Box::new(companion) }
    }

    /// The hyperbolic (-2,3,7)-pretzel knot, an L-space knot of genus 5.
    pub fn pretzel_m2_3_7() -> Self {
        Self::Catalog {
            name: "PRETZEL(-2,3,7)".to_string(),
            data: HfKnotData::lspace_knot(5),
            hyperbolic: true,
        }
    }

    /// Seifert genus.
    pub fn genus(&self) -> i64 {
        match self {
            Self::Unknot => 0,
            Self::Torus { p, q } => (p - 1) * (q.abs() - 1) / 2,
            Self::BgSat { pattern, companion } => {
                pattern.genus() + pattern.winding() * companion.genus()
            }
            Self::Catalog { data, .. } => data.genus,
        }
    }

    /// The main satellite predicate.
    ///
    /// A Berge-Gabai satellite is an L-space knot exactly when the
    /// companion is one and the pattern is sufficiently positively twisted
    /// relative to the companion genus; negative-braid patterns never give
    /// L-space knots.
    pub fn is_lspace_knot(&self) -> bool {
        match self {
            Self::Unknot => true,
            Self::Torus { q, .. } => *q > 0,
            Self::Catalog { data, .. } => data.lspace,
            Self::BgSat { pattern, companion } => {
                let gk = companion.genus();
                if gk == 0 {
                    // Genus-zero companions are unknots: the satellite is
                    // just the pattern in the 3-sphere.
                    return pattern.is_lspace_knot_in_s3() && companion.is_lspace_knot();
                }
                if pattern.twist_number() < 0 {
                    return false;
                }
                companion.is_lspace_knot()
                    && satellite_criterion(pattern, gk).expect("gk >= 1 checked")
            }
        }
    }

    /// HF data for knots this calculus pins down: L-space knots (where
    /// `nu = tau = g` and `s = 0`) and catalog entries.
    pub fn hf_data(&self) -> Result<HfKnotData, HfError> {
        if let Self::Catalog { data, .. } = self {
            return Ok(*data);
        }
        if self.is_lspace_knot() {
            Ok(HfKnotData::lspace_knot(self.genus()))
        } else {
            Err(HfError::NotDetermined(self.to_string()))
        }
    }

    /// Symmetrized Alexander polynomial, via the Burau closure computation
    /// for patterns and the satellite product formula.
    pub fn alexander(&self) -> Result<LaurentPoly, HfError> {
        match self {
            Self::Unknot => Ok(LaurentPoly::one()),
            Self::Torus { p, q } => {
                if q.abs() == 1 {
                    Ok(LaurentPoly::one())
                } else {
                    Ok(alexander::torus_alexander(*p, q.abs())?)
                }
            }
            Self::BgSat { pattern, companion } => {
                let d_pattern = alexander::alexander_of_closure(&pattern.braid_word())?;
                let d_companion = companion.alexander()?;
                Ok(alexander::satellite_alexander(
                    &d_pattern,
                    &d_companion,
                    pattern.winding(),
                ))
            }
            Self::Catalog { name, .. } => Err(HfError::NoPolynomialData(name.clone())),
        }
    }
}

impl fmt::Display for KnotDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Unknot => write!(f, "U"),
            Self::Torus { p, q } => write!(f, "T({p},{q})"),
            Self::BgSat { pattern, companion } => write!(f, "{pattern}[{companion}]"),
            Self::Catalog { name, .. } => write!(f, "{name}"),
        }
    }
}

/// `t^{m/n} = 2 max(0, n(2 nu - 1) - m)` for coprime `m, n` with `n >= 1`.
pub fn t_invariant(m: i64, n: i64, nu: i64) -> i64 {
    debug_assert!(n >= 1);
    debug_assert_eq!(m.gcd(&n), 1);
    2 * (n * (2 * nu - 1) - m).max(0)
}

fn require_positive_lspace_surgery(data: &HfKnotData, slope: Slope) -> Result<(), HfError> {
    if !data.lspace {
        return Err(HfError::NotLspaceData);
    }
    if slope.numer() < 1 {
        return Err(HfError::NegativeSlopeOutOfScope);
    }
    Ok(())
}

/// Total rank of the hat-flavor Heegaard Floer homology of `m/n`-surgery:
/// `m + n s + t^{m/n}`. Requires L-space knot data and positive `m`.
pub fn rank_surgery(data: &HfKnotData, slope: Slope) -> Result<i64, HfError> {
    require_positive_lspace_surgery(data, slope)?;
    let (m, n) = (slope.numer(), slope.denom());
    Ok(m + n * data.s + t_invariant(m, n, data.nu))
}

/// Whether `m/n`-surgery yields an L-space: `s = 0` and `m/n >= 2 nu - 1`.
pub fn is_lspace_surgery(data: &HfKnotData, slope: Slope) -> Result<bool, HfError> {
    require_positive_lspace_surgery(data, slope)?;
    let (m, n) = (slope.numer(), slope.denom());
    Ok(data.s == 0 && m >= n * (2 * data.nu - 1))
}

/// The satellite L-space twisting condition for a non-trivial companion of
/// genus `gk`: `(b + t w) / w^2 >= 2 gk - 1`, compared exactly.
pub fn satellite_criterion(pattern: &BergeGabaiPattern, gk: i64) -> Result<bool, HfError> {
    if gk < 1 {
        return Err(HfError::TrivialCompanion);
    }
    let w = pattern.winding();
    Ok(pattern.bridge() + pattern.twist_number() * w >= (2 * gk - 1) * w * w)
}

/// Smallest number of positive full twists making the satellite criterion
/// hold; equals `max(0, (2 gk - 1) - q)`.
pub fn min_twist(pattern: &BergeGabaiPattern, gk: i64) -> Result<i64, HfError> {
    if pattern.twist_number() < 0 {
        return Err(HfError::NonPositiveTwist);
    }
    if gk < 1 {
        return Err(HfError::TrivialCompanion);
    }
    let mut k = 0;
    while !satellite_criterion(&pattern.twist(k), gk)? {
        k += 1;
    }
    debug_assert_eq!(k, (2 * gk - 1 - pattern.full_twists()).max(0));
    Ok(k)
}

/// Tau and smooth 4-ball genus of a Berge-Gabai satellite of an L-space
/// companion, with the sum decomposition over pattern and companion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TauFourBallGenus {
    pub tau: i64,
    pub four_ball_genus: i64,
    pub pattern_tau: i64,
    pub companion_tau: i64,
    pub winding: i64,
}

/// `tau(P(K)) = tau(P) + w tau(K)` and likewise for the 4-ball genus,
/// under the criterion's hypotheses (L-space companion of positive genus,
/// criterion satisfied). Both equal the satellite genus.
pub fn tau_g4_satellite(descriptor: &KnotDescriptor) -> Result<TauFourBallGenus, HfError> {
    let KnotDescriptor::BgSat { pattern, companion } = descriptor else {
        return Err(HfError::NotASatellite);
    };
    let gk = companion.genus();
    if gk < 1 {
        return Err(HfError::TrivialCompanion);
    }
    if !companion.is_lspace_knot() {
        return Err(HfError::HypothesesNotMet("companion is not an L-space knot".into()));
    }
    if pattern.twist_number() < 0 || !satellite_criterion(pattern, gk)? {
        return Err(HfError::HypothesesNotMet(
            "pattern is not sufficiently positively twisted".into(),
        ));
    }
    let tau = descriptor.genus();
    Ok(TauFourBallGenus {
        tau,
        four_ball_genus: tau,
        pattern_tau: pattern.genus(),
        companion_tau: gk,
        winding: pattern.winding(),
    })
}

/// One candidate slope's worth of the proof identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityEntry {
    /// Candidate offset `d` in `{b, b+1}` with `gcd(w, d) = 1`.
    pub d: i64,
    /// The certified integral slope `m = d + t0 w + q w^2`.
    pub m: i64,
    /// `t^m` of the satellite computed from its genus via the rank formula.
    pub t_satellite_rank: i64,
    /// The same invariant expanded in pattern parameters.
    pub t_satellite_params: i64,
    /// The companion side `w^2 s + t^{m/w^2}` with `s = 0`.
    pub companion_side: i64,
    pub sides_equal: bool,
    pub both_zero: bool,
}

/// The two expansions of `t^m` for the satellite and the companion side of
/// the surgery rank identity, per candidate slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub pattern: BergeGabaiPattern,
    pub companion_genus: i64,
    pub entries: Vec<IdentityEntry>,
}

impl IdentityReport {
    /// The parity obstruction: the two sides may only agree when both
    /// vanish.
    pub fn claim_holds(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.sides_equal == (e.t_satellite_rank == 0 && e.companion_side == 0))
    }
}

/// Evaluates, for each candidate slope of a positively twisted pattern and
/// a companion treated as an L-space knot of genus `gk`, the satellite
/// `t^m` both ways and the companion side of the rank identity.
pub fn proof_identity_report(
    pattern: &BergeGabaiPattern,
    gk: i64,
) -> Result<IdentityReport, HfError> {
    if pattern.twist_number() < 0 {
        return Err(HfError::NonPositiveTwist);
    }
    if gk < 1 {
        return Err(HfError::TrivialCompanion);
    }
    let (w, b, t0, q) = (
        pattern.winding(),
        pattern.bridge(),
        pattern.twist_residue(),
        pattern.full_twists(),
    );
    let satellite_genus = pattern.genus() + w * gk;
    let entries = pattern
        .candidate_pairs()
        .into_iter()
        .map(|(d, m)| {
            debug_assert_eq!(m, d + t0 * w + q * w * w);
            let t_rank = t_invariant(m, 1, satellite_genus);
            let t_params = (4 * w * gk - 2 * w - 2 * t0 - 2 * q * w + 2 * b - 2 * d).max(0);
            // The companion contributes w^2 * s + t^{m/w^2}, with s = 0
            // since the companion is an L-space knot.
            let companion_side = t_invariant(m, w * w, gk);
            IdentityEntry {
                d,
                m,
                t_satellite_rank: t_rank,
                t_satellite_params: t_params,
                companion_side,
                sides_equal: t_rank == companion_side,
                both_zero: t_rank == 0 && companion_side == 0,
            }
        })
        .collect();
    Ok(IdentityReport { pattern: *pattern, companion_genus: gk, entries })
}
