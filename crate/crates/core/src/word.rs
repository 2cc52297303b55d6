//! Words over a finite list of generators and their formal inverses.

use alloc::vec::Vec;
use core::fmt;

/// Generator `gen` (0-indexed), possibly inverted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(gen: usize) -> Self {
        Self { gen, inverse: false }
    }

    pub const fn inv(gen: usize) -> Self {
        Self { gen, inverse: true }
    }

    pub const fn inverted(self) -> Self {
        Self { gen: self.gen, inverse: !self.inverse }
    }
}

pub type Word = Vec<Letter>;

pub fn inverse_word(word: &[Letter]) -> Word {
    word.iter().rev().map(|l| l.inverted()).collect()
}

/// Cancels adjacent `x x^{-1}` pairs.
pub fn free_reduce(word: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&l.inverted()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Renders a word as `g1 g2^-1 ...` (1-indexed), `1` for the empty word.
pub struct DisplayWord<'a>(pub &'a [Letter]);

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "g{}", l.gen + 1)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}
