//! Braid-word algebra: permutations, closure component counts, exponent
//! sums, and Seifert-algorithm Euler characteristics for braid closures.
//!
//! Strands are 1-indexed to match the generator subscripts: the letter `i`
//! denotes a positive half twist on strands `i` and `i+1`, and `-i` its
//! inverse. Permutations compose left-to-right in word order.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("braid width must be at least 2, got {0}")]
    WidthTooSmall(i64),
    #[error("generator index {letter} out of range for width {width}")]
    LetterOutOfRange { letter: i64, width: i64 },
    #[error("Seifert-algorithm genus requires a word of coherent sign")]
    MixedSigns,
    #[error("closure has {0} components; operation requires a knot")]
    MultiComponentClosure(usize),
}

/// A word in the braid group `B_w`, stored as signed generator indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    width: i64,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(width: i64, letters: Vec<i64>) -> Result<Self, BraidError> {
        if width < 2 {
            return Err(BraidError::WidthTooSmall(width));
        }
        for &l in &letters {
            if l == 0 || l.abs() > width - 1 {
                return Err(BraidError::LetterOutOfRange { letter: l, width });
            }
        }
        Ok(Self { width, letters })
    }

    pub fn empty(width: i64) -> Result<Self, BraidError> {
        Self::new(width, Vec::new())
    }

    pub fn width(&self) -> i64 {
        self.width
    }

    /// The signed-integer serialization of the word.
    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self . other` (widths must agree).
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.width, other.width, "cannot concatenate words of different widths");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { width: self.width, letters }
    }

    /// The mirror word, with every sign flipped.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            width: self.width,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    /// The underlying permutation of strand endpoints; signs are irrelevant.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.width as usize);
        for &l in &self.letters {
            p.swap_images(l.unsigned_abs() as usize);
        }
        p
    }

    /// Number of components of the braid closure.
    pub fn closure_components(&self) -> usize {
        self.permutation().cycle_count()
    }

    /// Sum of the letter signs.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum()).sum()
    }

    /// Genus of the closure via Seifert's algorithm on the braid diagram:
    /// `g = (1 - chi)/2` with `chi = width - letter count`.
    ///
    /// Valid only for coherent (all-positive or all-negative) words, where
    /// the Bennequin bound makes the Seifert surface minimal, and only for
    /// knot closures.
    pub fn seifert_genus(&self) -> Result<i64, BraidError> {
        let pos = self.letters.iter().any(|&l| l > 0);
        let neg = self.letters.iter().any(|&l| l < 0);
        if pos && neg {
            return Err(BraidError::MixedSigns);
        }
        let components = self.closure_components();
        if components != 1 {
            return Err(BraidError::MultiComponentClosure(components));
        }
        let chi = self.width - self.letters.len() as i64;
        debug_assert_eq!((1 - chi) % 2, 0, "knot closure forces even 1 - chi");
        Ok((1 - chi) / 2)
    }
}

/// A permutation of `{1, ..., w}` in image form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    /// `images[i]` is the image of strand `i + 1`, valued in `1..=w`.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `strand` (1-indexed).
    pub fn image(&self, strand: usize) -> usize {
        self.images[strand - 1]
    }

    /// Post-compose with the transposition `(i, i+1)`, 1-indexed.
    fn swap_images(&mut self, i: usize) {
        for img in &mut self.images {
            if *img == i {
                *img = i + 1;
            } else if *img == i + 1 {
                *img = i;
            }
        }
    }

    /// `self` then `other`: `(self.then(other))(x) = other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x - 1]).collect(),
        }
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] - 1;
            }
        }
        count
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| img == i + 1)
    }
}
