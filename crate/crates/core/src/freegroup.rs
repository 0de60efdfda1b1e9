//! Freely reduced words in the free group on `a`, `b`.
//!
//! Text syntax: lowercase `a`, `b` are the generators, uppercase `A`, `B`
//! their inverses, `1` (or the empty string) is the identity. Whitespace is
//! ignored. [`FreeWord`]'s `Display` emits the same syntax.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    A,
    B,
}

impl Generator {
    pub const ALL: [Generator; 2] = [Generator::A, Generator::B];

    /// The generator swapped by the exchange involution `a <-> b`.
    pub fn other(self) -> Generator {
        match self {
            Generator::A => Generator::B,
            Generator::B => Generator::A,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: Generator,
    pub sign: Sign,
}

impl Letter {
    pub const A: Letter = Letter::new(Generator::A, Sign::Pos);
    pub const A_INV: Letter = Letter::new(Generator::A, Sign::Neg);
    pub const B: Letter = Letter::new(Generator::B, Sign::Pos);
    pub const B_INV: Letter = Letter::new(Generator::B, Sign::Neg);

    /// The four letters in enumeration order `a, A, b, B`.
    pub const ALL: [Letter; 4] = [Letter::A, Letter::A_INV, Letter::B, Letter::B_INV];

    pub const fn new(gen: Generator, sign: Sign) -> Self {
        Letter { gen, sign }
    }

    pub fn inverse(self) -> Letter {
        Letter::new(self.gen, self.sign.flip())
    }

    pub fn is_positive(self) -> bool {
        self.sign == Sign::Pos
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'A' => Some(Letter::A_INV),
            'b' => Some(Letter::B),
            'B' => Some(Letter::B_INV),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match (self.gen, self.sign) {
            (Generator::A, Sign::Pos) => 'a',
            (Generator::A, Sign::Neg) => 'A',
            (Generator::B, Sign::Pos) => 'b',
            (Generator::B, Sign::Neg) => 'B',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Parses a raw letter string without free reduction.
pub fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    let mut out = Vec::with_capacity(s.len());
    for c in s.chars() {
        if c.is_whitespace() || c == '1' {
            continue;
        }
        match Letter::from_char(c) {
            Some(l) => out.push(l),
            None => return Err(Error::parse(s, format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

/// Formats a raw letter string, `1` when empty.
pub fn format_letters(letters: &[Letter]) -> String {
    if letters.is_empty() {
        "1".to_string()
    } else {
        letters.iter().map(|l| l.to_char()).collect()
    }
}

/// An element of F2, always stored freely reduced.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn letter(l: Letter) -> Self {
        FreeWord { letters: vec![l] }
    }

    pub fn a() -> Self {
        FreeWord::letter(Letter::A)
    }

    pub fn b() -> Self {
        FreeWord::letter(Letter::B)
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Self {
        let mut letters: Vec<Letter> = Vec::new();
        for l in raw {
            push_reduced(&mut letters, l);
        }
        FreeWord { letters }
    }

    /// Wraps letters already known to be reduced.
    fn from_reduced(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.windows(2).all(|w| w[0] != w[1].inverse()));
        FreeWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        letters.reserve(other.len());
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        FreeWord { letters }
    }

    pub fn invert(&self) -> FreeWord {
        FreeWord::from_reduced(self.letters.iter().rev().map(|l| l.inverse()).collect())
    }

    /// The anti-automorphism fixing `a` and `b`: reverses the letter order.
    pub fn mirror(&self) -> FreeWord {
        FreeWord::from_reduced(self.letters.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.letters.len();
        (0..n / 2).all(|i| self.letters[i] == self.letters[n - 1 - i])
    }

    /// True when every letter is a positive generator.
    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    pub fn pow(&self, n: i64) -> FreeWord {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Applies a letter-to-letter substitution and reduces.
    pub fn map_letters(&self, f: impl Fn(Letter) -> Letter) -> FreeWord {
        FreeWord::reduce(self.letters.iter().map(|&l| f(l)))
    }

    /// Splits `self = conjugator * core * conjugator^-1` with `core`
    /// cyclically reduced. Inverse pairs are stripped from the outside in.
    pub fn cyclic_reduce(&self) -> (FreeWord, FreeWord) {
        let n = self.letters.len();
        let mut k = 0;
        while n >= 2 * k + 2 && self.letters[k] == self.letters[n - 1 - k].inverse() {
            k += 1;
        }
        let core = FreeWord::from_reduced(self.letters[k..n - k].to_vec());
        let conjugator = FreeWord::from_reduced(self.letters[..k].to_vec());
        (core, conjugator)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(f), Some(l)) => self.len() == 1 || f != l.inverse(),
            _ => true,
        }
    }

    /// Exponent sums of `a` and `b`.
    pub fn abelianize(&self) -> IntVector2 {
        let mut v = IntVector2::default();
        for l in &self.letters {
            match l.gen {
                Generator::A => v.x += l.sign.as_i64(),
                Generator::B => v.y += l.sign.as_i64(),
            }
        }
        v
    }

    /// The positive-monoid view, if the word has no inverse letters.
    pub fn to_monoid(&self) -> Option<MonoidWord> {
        self.letters
            .iter()
            .map(|l| l.is_positive().then_some(l.gen))
            .collect::<Option<Vec<_>>>()
            .map(MonoidWord::new)
    }

    /// Every reduced word of length at most `max_len`, shortest first.
    pub fn all_up_to(max_len: usize) -> Vec<FreeWord> {
        let mut out = vec![FreeWord::identity()];
        let mut layer = vec![FreeWord::identity()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * 3 + 1);
            for w in &layer {
                for l in Letter::ALL {
                    if w.last() == Some(l.inverse()) {
                        continue;
                    }
                    let mut letters = w.letters.clone();
                    letters.push(l);
                    next.push(FreeWord::from_reduced(letters));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

fn push_reduced(letters: &mut Vec<Letter>, l: Letter) {
    if letters.last() == Some(&l.inverse()) {
        letters.pop();
    } else {
        letters.push(l);
    }
}

/// Conjugacy test: equal-length cyclic cores that are rotations of each other.
pub fn are_conjugate(u: &FreeWord, v: &FreeWord) -> bool {
    let (cu, _) = u.cyclic_reduce();
    let (cv, _) = v.cyclic_reduce();
    if cu.len() != cv.len() {
        return false;
    }
    if cu.is_identity() {
        return true;
    }
    let n = cu.len();
    (0..n).any(|shift| (0..n).all(|i| cu.letters[(i + shift) % n] == cv.letters[i]))
}

impl Mul for &FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: &FreeWord) -> FreeWord {
        self.concat(rhs)
    }
}

impl Mul for FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: FreeWord) -> FreeWord {
        self.concat(&rhs)
    }
}

impl From<Letter> for FreeWord {
    fn from(l: Letter) -> Self {
        FreeWord::letter(l)
    }
}

impl FromIterator<Letter> for FreeWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        FreeWord::reduce(iter)
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_letters(s).map(FreeWord::reduce)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.letters))
    }
}

/// A word over the positive alphabet `{a, b}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MonoidWord {
    letters: Vec<Generator>,
}

impl MonoidWord {
    pub fn new(letters: Vec<Generator>) -> Self {
        MonoidWord { letters }
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_free(&self) -> FreeWord {
        FreeWord::from_reduced(
            self.letters
                .iter()
                .map(|&g| Letter::new(g, Sign::Pos))
                .collect(),
        )
    }

    /// Every positive word of length at most `max_len`, shortest first.
    pub fn all_up_to(max_len: usize) -> Vec<MonoidWord> {
        let mut out = vec![MonoidWord::default()];
        let mut start = 0;
        for _ in 0..max_len {
            let end = out.len();
            for i in start..end {
                for g in Generator::ALL {
                    let mut letters = out[i].letters.clone();
                    letters.push(g);
                    out.push(MonoidWord::new(letters));
                }
            }
            start = end;
        }
        out
    }
}

impl FromStr for MonoidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s)?;
        letters
            .iter()
            .map(|l| l.is_positive().then_some(l.gen))
            .collect::<Option<Vec<_>>>()
            .map(MonoidWord::new)
            .ok_or_else(|| Error::parse(s, "positive word expected"))
    }
}

impl fmt::Display for MonoidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_free().to_string())
    }
}

/// An element of Z^2: exponent sums of `a` and `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IntVector2 {
    pub x: i64,
    pub y: i64,
}

impl IntVector2 {
    pub const fn new(x: i64, y: i64) -> Self {
        IntVector2 { x, y }
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }
}

impl Add for IntVector2 {
    type Output = IntVector2;

    fn add(self, rhs: IntVector2) -> IntVector2 {
        IntVector2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl fmt::Display for IntVector2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}
