//! Path words: sequences of turn letters naming trajectory structure.

use std::fmt;

/// One element of a path word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// Counter-clockwise arc (positive signed radius).
    L,
    /// Straight segment.
    S,
    /// Clockwise arc (negative signed radius).
    R,
}

impl Letter {
    /// Turn letter implied by a signed radius.
    #[inline]
    pub fn from_radius(r: f64) -> Self {
        if r > 0.0 {
            Letter::L
        } else {
            Letter::R
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::S => 'S',
            Letter::R => 'R',
        }
    }
}

/// A two- or three-letter path word such as `RSL`, `LRL` or `LL`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: [Letter; 3],
    len: u8,
}

impl Word {
    pub const fn triple(a: Letter, b: Letter, c: Letter) -> Self {
        Self {
            letters: [a, b, c],
            len: 3,
        }
    }

    pub const fn pair(a: Letter, b: Letter) -> Self {
        Self {
            letters: [a, b, a],
            len: 2,
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters[..self.len as usize]
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True when the middle element is a straight segment.
    pub fn has_straight(&self) -> bool {
        self.letters().contains(&Letter::S)
    }

    pub fn parse(s: &str) -> Option<Self> {
        let mut letters = [Letter::L; 3];
        let mut n = 0;
        for ch in s.chars() {
            if n == 3 {
                return None;
            }
            letters[n] = match ch {
                'L' => Letter::L,
                'S' => Letter::S,
                'R' => Letter::R,
                _ => return None,
            };
            n += 1;
        }
        if n < 2 {
            return None;
        }
        Some(Self {
            letters,
            len: n as u8,
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

pub const LSL: Word = Word::triple(Letter::L, Letter::S, Letter::L);
pub const LSR: Word = Word::triple(Letter::L, Letter::S, Letter::R);
pub const RSL: Word = Word::triple(Letter::R, Letter::S, Letter::L);
pub const RSR: Word = Word::triple(Letter::R, Letter::S, Letter::R);
pub const LRL: Word = Word::triple(Letter::L, Letter::R, Letter::L);
pub const RLR: Word = Word::triple(Letter::R, Letter::L, Letter::R);

/// The six classic words in tie-breaking order.
pub const DUBINS_WORDS: [Word; 6] = [LSL, LSR, RSL, RSR, LRL, RLR];
