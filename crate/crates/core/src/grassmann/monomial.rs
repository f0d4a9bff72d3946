//! Canonical monomials as fixed-width bitsets.
//!
//! Bit `i` set means generator `i` is present. A monomial always denotes the
//! product of its generators in ascending index order, so every reordering
//! sign is a transposition count against that order.

use std::fmt;

const WORDS: usize = 4;

/// Upper bound on generators per registry.
pub const MAX_GENERATORS: usize = 64 * WORDS;

#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial([u64; WORDS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; WORDS]);

    pub fn single(index: usize) -> Self {
        let mut m = Self::ONE;
        m.0[index / 64] |= 1 << (index % 64);
        m
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0[index / 64] >> (index % 64) & 1 == 1
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        for (o, b) in out.0.iter_mut().zip(&other.0) {
            *o |= b;
        }
        out
    }

    pub fn without(&self, index: usize) -> Self {
        let mut out = *self;
        out.0[index / 64] &= !(1 << (index % 64));
        out
    }

    /// Number of generators in `self` with index strictly below `index`.
    pub fn count_below(&self, index: usize) -> u32 {
        let word = index / 64;
        let bit = index % 64;
        let full: u32 = self.0[..word].iter().map(|w| w.count_ones()).sum();
        let partial = if bit == 0 {
            0
        } else {
            (self.0[word] & ((1u64 << bit) - 1)).count_ones()
        };
        full + partial
    }

    /// Parity of the transpositions that sort the concatenation `self ‖ other`.
    /// Only meaningful for disjoint monomials.
    pub fn merge_parity(&self, other: &Self) -> bool {
        // each generator j of `other` crosses every generator of `self` above it
        let degree = self.degree();
        let mut swaps = 0u32;
        for j in other.indices() {
            swaps += degree - self.count_below(j);
        }
        swaps % 2 == 1
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            let mut rest = bits;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let tz = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(w * 64 + tz)
                }
            })
        })
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}
