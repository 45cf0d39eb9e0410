//! Alexander polynomials of braid closures via the reduced Burau
//! representation, the satellite product formula, and genus bridges.

use num_integer::Integer;
use thiserror::Error;

use crate::braid::BraidWord;
use crate::laurent::{LaurentError, LaurentPoly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlexanderError {
    #[error("closure has {0} components; Alexander polynomial requires a knot")]
    MultiComponentClosure(usize),
    #[error("torus knot parameters must be coprime, got ({0}, {1})")]
    NonCoprimeTorus(i64, i64),
    #[error("torus knot parameters must be at least 2, got ({0}, {1})")]
    TorusParameterTooSmall(i64, i64),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("inexact Burau determinant division (internal bug)")]
    InexactDivision,
}

type Matrix = Vec<Vec<LaurentPoly>>;

fn identity_matrix(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![LaurentPoly::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                let prod = &a[i][k] * &b[k][j];
                out[i][j] = &out[i][j] + &prod;
            }
        }
    }
    out
}

/// Reduced Burau image of a single signed generator in `B_w`.
///
/// With matrix indices 1..w-1, the positive generator `i` maps to the
/// identity except for the column `i`:
/// `M[i][i] = -t`, `M[i-1][i] = t`, `M[i+1][i] = 1` (when those rows exist).
/// The inverse uses `-t^-1`, `1` and `t^-1` in the same slots, which is the
/// exact matrix inverse.
fn burau_letter(w: i64, letter: i64) -> Matrix {
    let n = (w - 1) as usize;
    let i = letter.unsigned_abs() as usize;
    let mut m = identity_matrix(n);
    let col = i - 1;
    if letter > 0 {
        m[col][col] = LaurentPoly::term(1, -1);
        if i >= 2 {
            m[col - 1][col] = LaurentPoly::term(1, 1);
        }
        if i < n {
            m[col + 1][col] = LaurentPoly::one();
        }
    } else {
        m[col][col] = LaurentPoly::term(-1, -1);
        if i >= 2 {
            m[col - 1][col] = LaurentPoly::one();
        }
        if i < n {
            m[col + 1][col] = LaurentPoly::term(-1, 1);
        }
    }
    m
}

/// Product of the reduced Burau images of the letters, in word order.
pub fn reduced_burau(word: &BraidWord) -> Matrix {
    let n = (word.width() - 1) as usize;
    let mut m = identity_matrix(n);
    for &letter in word.letters() {
        m = mat_mul(&m, &burau_letter(word.width(), letter));
    }
    m
}

/// Determinant by expansion along the first column; the matrices here are
/// at most 9x9.
fn det(m: &Matrix) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = LaurentPoly::zero();
    for row in 0..n {
        if m[row][0].is_zero() {
            continue;
        }
        let minor: Matrix = (0..n)
            .filter(|&r| r != row)
            .map(|r| m[r][1..].to_vec())
            .collect();
        let cofactor = &m[row][0] * &det(&minor);
        if row % 2 == 0 {
            acc = &acc + &cofactor;
        } else {
            acc = &acc - &cofactor;
        }
    }
    acc
}

/// Symmetrized Alexander polynomial of the knot closure of `word`:
/// `det(I - burau(word)) * (1 - t) / (1 - t^w)`, with the division exact
/// for knot closures.
pub fn alexander_of_closure(word: &BraidWord) -> Result<LaurentPoly, AlexanderError> {
    let components = word.closure_components();
    if components != 1 {
        return Err(AlexanderError::MultiComponentClosure(components));
    }
    let n = (word.width() - 1) as usize;
    let burau = reduced_burau(word);
    let id = identity_matrix(n);
    let diff: Matrix = (0..n)
        .map(|i| (0..n).map(|j| &id[i][j] - &burau[i][j]).collect())
        .collect();
    let one_minus_t = LaurentPoly::from_terms(&[(0, 1), (1, -1)]);
    let one_minus_tw = LaurentPoly::from_terms(&[(0, 1), (word.width(), -1)]);
    let numer = &det(&diff) * &one_minus_t;
    let quot = numer
        .div_exact(&one_minus_tw)
        .ok_or(AlexanderError::InexactDivision)?;
    Ok(quot.symmetrize()?)
}

/// Closed-form symmetric Alexander polynomial of the `(p, q)`-torus knot:
/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`.
pub fn torus_alexander(p: i64, q: i64) -> Result<LaurentPoly, AlexanderError> {
    if p < 2 || q < 2 {
        return Err(AlexanderError::TorusParameterTooSmall(p, q));
    }
    if p.gcd(&q) != 1 {
        return Err(AlexanderError::NonCoprimeTorus(p, q));
    }
    let cyc = |k: i64| LaurentPoly::from_terms(&[(k, 1), (0, -1)]);
    let numer = &cyc(p * q) * &cyc(1);
    let denom = &cyc(p) * &cyc(q);
    let quot = numer.div_exact(&denom).expect("torus closed form divides exactly");
    Ok(quot.symmetrize()?)
}

/// Satellite product formula: `D_{P(K)}(T) = D_P(T) * D_K(T^w)`.
pub fn satellite_alexander(d_pattern: &LaurentPoly, d_companion: &LaurentPoly, w: i64) -> LaurentPoly {
    d_pattern * &d_companion.substitute_power(w)
}

/// Genus of a fibered knot read off its Alexander polynomial degree.
pub fn fibered_genus_from_alexander(d: &LaurentPoly) -> Result<i64, AlexanderError> {
    Ok(d.top_degree()?)
}
