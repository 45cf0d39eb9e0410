//! Rational surgery slope arithmetic, first homology of Dehn fillings of
//! the pattern exterior, and the satellite-companion surgery
//! correspondence.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use thiserror::Error;

use crate::pattern::{BergeGabaiPattern, BoundaryCurveT};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SurgeryError {
    #[error("slope denominator must be non-zero")]
    ZeroDenominator,
    #[error("invalid slope literal {0:?}; expected `p` or `p/q` with q > 0")]
    BadSlopeLiteral(String),
    #[error("winding number must be non-zero")]
    ZeroWinding,
    #[error("{p} is not a candidate solid-torus filling slope of {pattern}; candidates are {candidates:?}")]
    NotACandidateSlope {
        p: i64,
        pattern: String,
        candidates: Vec<i64>,
    },
}

/// A reduced rational surgery coefficient `p1/p2` with `p2 >= 1`; the sign
/// lives in the numerator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Slope {
    numer: i64,
    denom: i64,
}

impl Slope {
    pub fn new(numer: i64, denom: i64) -> Result<Self, SurgeryError> {
        if denom == 0 {
            return Err(SurgeryError::ZeroDenominator);
        }
        let sign = denom.signum();
        let (mut n, mut d) = (numer * sign, denom * sign);
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        Ok(Self { numer: n, denom: d })
    }

    pub fn integer(p: i64) -> Self {
        Self { numer: p, denom: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.numer
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl FromStr for Slope {
    type Err = SurgeryError;

    /// Parses `p` or `p/q`; `q > 0` is enforced here, not normalized away.
    fn from_str(s: &str) -> Result<Self, SurgeryError> {
        let bad = || SurgeryError::BadSlopeLiteral(s.to_string());
        match s.split_once('/') {
            None => {
                let p: i64 = s.trim().parse().map_err(|_| bad())?;
                Ok(Slope::integer(p))
            }
            Some((ns, ds)) => {
                let n: i64 = ns.trim().parse().map_err(|_| bad())?;
                let d: i64 = ds.trim().parse().map_err(|_| bad())?;
                if d <= 0 {
                    return Err(bad());
                }
                Slope::new(n, d)
            }
        }
    }
}

/// First homology of a Dehn filling of the pattern exterior, which is
/// always `Z + Z_torsion` with free rank one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FillingHomology {
    pub free_rank: u32,
    /// `1` means no torsion.
    pub torsion_order: i64,
}

/// `H_1` of the `p1/p2` filling of the exterior of a winding-number-`w`
/// pattern: `Z + Z_{gcd(w, p1)}`.
pub fn filling_homology(w: i64, slope: Slope) -> FillingHomology {
    assert!(w >= 1, "winding number must be positive");
    FillingHomology {
        free_rank: 1,
        torsion_order: w.gcd(&slope.numer()),
    }
}

/// Generator of the kernel of the boundary inclusion on first homology, in
/// `(m, l)` coordinates: `(p1/g) m + (p2 w^2 / g) l` with `g = gcd(w, p1)`.
pub fn filling_kernel_generator(w: i64, slope: Slope) -> Result<BoundaryCurveT, SurgeryError> {
    if w == 0 {
        return Err(SurgeryError::ZeroWinding);
    }
    let g = w.gcd(&slope.numer());
    Ok(BoundaryCurveT::new(
        slope.numer() / g,
        slope.denom() * w * w / g,
    ))
}

/// Invariant factors (non-negative, in divisibility order) of an integer
/// matrix, by row and column reduction.
// Indexed loops: row operations read `m[top][j]` while writing `m[i][j]`.
#[allow(clippy::needless_range_loop)]
pub fn smith_invariant_factors(mut m: Vec<Vec<i64>>) -> Vec<i64> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut factors = Vec::new();
    let mut top = 0usize;
    while top < rows && top < cols {
        // Pivot: a smallest-magnitude non-zero entry in the submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for i in top..rows {
            for j in top..cols {
                if m[i][j] != 0
                    && pivot.is_none_or(|(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(top, pi);
        for row in &mut m {
            row.swap(top, pj);
        }
        loop {
            let mut clean = true;
            for i in top + 1..rows {
                let q = m[i][top].div_euclid(m[top][top]);
                if q != 0 {
                    for j in top..cols {
                        m[i][j] -= q * m[top][j];
                    }
                }
                if m[i][top] != 0 {
                    // Remainder is smaller than the pivot: promote it.
                    m.swap(top, i);
                    clean = false;
                }
            }
            for j in top + 1..cols {
                let q = m[top][j].div_euclid(m[top][top]);
                if q != 0 {
                    for row in m.iter_mut() {
                        row[j] -= q * row[top];
                    }
                }
                if m[top][j] != 0 {
                    for row in m.iter_mut() {
                        row.swap(top, j);
                    }
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Pivot must divide every remaining entry.
            let p = m[top][top];
            let offender = (top + 1..rows)
                .find(|&i| (top + 1..cols).any(|j| m[i][j] % p != 0));
            match offender {
                Some(i) => {
                    for j in top..cols {
                        let add = m[i][j];
                        m[top][j] += add;
                    }
                }
                None => break,
            }
        }
        factors.push(m[top][top].abs());
        top += 1;
    }
    factors
}

/// Independent homology oracle: present `H_1` of the filled pattern
/// exterior by generators `(l, mu)` and the single filling relation
/// `(p2 w) l + p1 mu = 0`, then read the group off the Smith normal form.
pub fn snf_homology_oracle(w: i64, slope: Slope) -> FillingHomology {
    assert!(w >= 1, "winding number must be positive");
    let relations = vec![vec![slope.denom() * w, slope.numer()]];
    let factors = smith_invariant_factors(relations);
    let nonzero = factors.iter().filter(|&&f| f != 0).count() as u32;
    FillingHomology {
        free_rank: 2 - nonzero,
        torsion_order: factors.iter().filter(|&&f| f > 1).product::<i64>().max(1),
    }
}

/// Whether the closed-form kernel generator maps to zero in the presented
/// group, i.e. lies in the integer span of the filling relation.
pub fn kernel_generator_annihilated(w: i64, slope: Slope) -> Result<bool, SurgeryError> {
    let gen = filling_kernel_generator(w, slope)?;
    // Image of a*m + c*l in H_1(exterior) = Z<l> + Z<mu>: (c, a*w).
    let v = (gen.l, gen.m * w);
    let r = (slope.denom() * w, slope.numer());
    Ok(if r.0 != 0 {
        v.0 % r.0 == 0 && v.1 == (v.0 / r.0) * r.1
    } else if r.1 != 0 {
        v.1 % r.1 == 0 && v.0 == (v.1 / r.1) * r.0
    } else {
        v == (0, 0)
    })
}

/// The satellite-companion surgery correspondence: filling the pattern
/// along a candidate solid-torus slope `p` identifies `p`-surgery on the
/// satellite with `p/w^2`-surgery on the companion.
///
/// Refuses integers outside the candidate set: the correspondence is only
/// certified when the pattern filling is a solid torus.
pub fn satellite_surgery_correspondence(
    pattern: &BergeGabaiPattern,
    p: i64,
) -> Result<Slope, SurgeryError> {
    let candidates = pattern.exceptional_slope_candidates();
    if !candidates.contains(&p) {
        return Err(SurgeryError::NotACandidateSlope {
            p,
            pattern: pattern.to_string(),
            candidates: candidates.into_iter().collect(),
        });
    }
    let w = pattern.winding();
    debug_assert_eq!(p.gcd(&(w * w)), 1);
    Slope::new(p, w * w)
}
