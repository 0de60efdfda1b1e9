//! Braids on three strands and their action on F2 through `i(σ1) = R_a`,
//! `i(σ2) = R_b^-1`. The action is faithful, so triviality of a braid word
//! is decided by comparing generator images.

use std::fmt;
use std::str::FromStr;

use crate::endo::{matrix_letter, r_letter, Endomorphism, IntMatrix2};
use crate::error::{Error, Result};
use crate::freegroup::{FreeWord, Generator, Letter, Sign};

/// `σ_k^{±1}` stored as the signed index `±k`, `k ∈ {1, 2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidLetter(i8);

impl BraidLetter {
    pub const S1: BraidLetter = BraidLetter(1);
    pub const S1_INV: BraidLetter = BraidLetter(-1);
    pub const S2: BraidLetter = BraidLetter(2);
    pub const S2_INV: BraidLetter = BraidLetter(-2);

    pub const ALL: [BraidLetter; 4] = [Self::S1, Self::S1_INV, Self::S2, Self::S2_INV];

    pub fn new(index: i64) -> Option<Self> {
        matches!(index, 1 | -1 | 2 | -2).then_some(BraidLetter(index as i8))
    }

    pub fn index(self) -> i8 {
        self.0
    }

    pub fn inverse(self) -> Self {
        BraidLetter(-self.0)
    }

    pub fn exponent(self) -> i64 {
        self.0.signum() as i64
    }

    /// The free-group letter whose `R` is this generator's image:
    /// `σ1 -> a`, `σ2 -> b^-1`.
    fn as_free_letter(self) -> Letter {
        match self.0 {
            1 => Letter::A,
            -1 => Letter::A_INV,
            2 => Letter::B_INV,
            _ => Letter::B,
        }
    }
}

/// A word in `σ1, σ2` and their inverses. Adjacent inverse pairs are
/// cancelled on construction; that is sound but does not decide equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BraidWord {
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new<I: IntoIterator<Item = BraidLetter>>(letters: I) -> Self {
        let mut out: Vec<BraidLetter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { letters: out }
    }

    pub fn from_indices(indices: &[i64]) -> Result<Self> {
        indices
            .iter()
            .map(|&i| {
                BraidLetter::new(i).ok_or_else(|| {
                    Error::parse(&i.to_string(), "braid index must be one of 1, -1, 2, -2")
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(BraidWord::new)
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        BraidWord::new(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord::new(self.letters.iter().rev().map(|l| l.inverse()))
    }

    pub fn pow(&self, n: i64) -> BraidWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(BraidWord::default(), |acc, _| acc.concat(&base))
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.exponent()).sum()
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let indices = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| Error::parse(s, format!("bad braid token {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::from_indices(&indices).map_err(|_| Error::parse(s, "braid index must be one of 1, -1, 2, -2"))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.0.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `β(a) = σ1`, `β(b) = σ2^-1`.
pub fn beta(w: &FreeWord) -> BraidWord {
    BraidWord::new(w.letters().iter().map(|l| match (l.gen, l.sign) {
        (Generator::A, Sign::Pos) => BraidLetter::S1,
        (Generator::A, Sign::Neg) => BraidLetter::S1_INV,
        (Generator::B, Sign::Pos) => BraidLetter::S2_INV,
        (Generator::B, Sign::Neg) => BraidLetter::S2,
    }))
}

/// The automorphism `i(β)` of F2.
pub fn iota(braid: &BraidWord) -> Endomorphism {
    braid.letters.iter().fold(Endomorphism::identity(), |acc, l| {
        acc.compose(&r_letter(l.as_free_letter()))
    })
}

pub fn is_trivial(braid: &BraidWord) -> bool {
    braid.is_empty() || iota(braid).is_identity()
}

pub fn braids_equal(x: &BraidWord, y: &BraidWord) -> bool {
    is_trivial(&x.concat(&y.inverse()))
}

/// Projection `B3 -> SL2(Z)`: `σ1 -> M_a`, `σ2 -> M_b^-1`.
pub fn sl2(braid: &BraidWord) -> Result<IntMatrix2> {
    braid.letters.iter().try_fold(IntMatrix2::IDENTITY, |acc, l| {
        acc.checked_mul(&matrix_letter(l.as_free_letter()))
    })
}

/// `σ1 σ2^-1 σ1^-1 = β(aba^-1)`, generator of the subgroup `N`.
pub fn n_generator() -> BraidWord {
    BraidWord::new([BraidLetter::S1, BraidLetter::S2_INV, BraidLetter::S1_INV])
}

/// Decides membership in `N = <σ1 σ2^-1 σ1^-1>`. The generator has exponent
/// sum -1, so the only candidate power is `r = -exponent_sum`; returns it on
/// success.
pub fn n_power(braid: &BraidWord) -> Option<i64> {
    let r = -braid.exponent_sum();
    braids_equal(braid, &n_generator().pow(r)).then_some(r)
}

pub fn in_n(braid: &BraidWord) -> bool {
    n_power(braid).is_some()
}

/// `σ1 σ2 σ1`
pub fn delta() -> BraidWord {
    BraidWord::new([BraidLetter::S1, BraidLetter::S2, BraidLetter::S1])
}
