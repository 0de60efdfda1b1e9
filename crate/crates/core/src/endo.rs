//! Endomorphisms of F2 given by the images of the generators, the families
//! `w -> R_w` and `w -> L_w`, and their abelianizations in SL2(Z).

use std::fmt;

use crate::error::{Error, Result};
use crate::freegroup::{FreeWord, Generator, IntVector2, Letter, Sign};

/// An endomorphism of F2, determined by the images of `a` and `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Endomorphism {
    pub image_a: FreeWord,
    pub image_b: FreeWord,
}

impl Endomorphism {
    pub fn new(image_a: FreeWord, image_b: FreeWord) -> Self {
        Endomorphism { image_a, image_b }
    }

    pub fn identity() -> Self {
        Endomorphism::new(FreeWord::a(), FreeWord::b())
    }

    fn from_strs(a: &str, b: &str) -> Self {
        Endomorphism::new(a.parse().unwrap(), b.parse().unwrap())
    }

    /// `a -> a, b -> ba`
    pub fn r_a() -> Self {
        Self::from_strs("a", "ba")
    }

    /// `a -> ab, b -> b`
    pub fn r_b() -> Self {
        Self::from_strs("ab", "b")
    }

    /// `a -> a, b -> ab`
    pub fn l_a() -> Self {
        Self::from_strs("a", "ab")
    }

    /// `a -> ba, b -> b`
    pub fn l_b() -> Self {
        Self::from_strs("ba", "b")
    }

    /// The exchange involution `a <-> b`.
    pub fn exchange() -> Self {
        Self::from_strs("b", "a")
    }

    /// `a -> b^-1, b -> a`; an automorphism of order four.
    pub fn tau() -> Self {
        Self::from_strs("B", "a")
    }

    /// `a -> b, b -> a^-1`
    pub fn tau_inv() -> Self {
        Self::from_strs("b", "A")
    }

    pub fn image(&self, gen: Generator) -> &FreeWord {
        match gen {
            Generator::A => &self.image_a,
            Generator::B => &self.image_b,
        }
    }

    /// Applies the endomorphism to a word, reducing as it goes.
    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        if w.is_identity() {
            return FreeWord::identity();
        }
        let inv_a = self.image_a.invert();
        let inv_b = self.image_b.invert();
        let mut out = Vec::new();
        for l in w.letters() {
            let img = match (l.gen, l.sign) {
                (Generator::A, Sign::Pos) => &self.image_a,
                (Generator::A, Sign::Neg) => &inv_a,
                (Generator::B, Sign::Pos) => &self.image_b,
                (Generator::B, Sign::Neg) => &inv_b,
            };
            for &x in img.letters() {
                if out.last() == Some(&x.inverse()) {
                    out.pop();
                } else {
                    out.push(x);
                }
            }
        }
        FreeWord::reduce(out)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism::new(self.apply(&other.image_a), self.apply(&other.image_b))
    }

    pub fn is_identity(&self) -> bool {
        self.image_a == FreeWord::a() && self.image_b == FreeWord::b()
    }

    /// Integer matrix of the induced map on Z^2 (columns are the images of
    /// `pi(a)` and `pi(b)`).
    pub fn abelianization(&self) -> IntMatrix2 {
        let ca = self.image_a.abelianize();
        let cb = self.image_b.abelianize();
        IntMatrix2::new(ca.x, cb.x, ca.y, cb.y)
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a -> {}, b -> {}", self.image_a, self.image_b)
    }
}

/// `R_x` for a single letter, including the inverse automorphisms.
pub fn r_letter(l: Letter) -> Endomorphism {
    match (l.gen, l.sign) {
        (Generator::A, Sign::Pos) => Endomorphism::r_a(),
        (Generator::A, Sign::Neg) => Endomorphism::from_strs("a", "bA"),
        (Generator::B, Sign::Pos) => Endomorphism::r_b(),
        (Generator::B, Sign::Neg) => Endomorphism::from_strs("aB", "b"),
    }
}

/// `L_x` for a single letter, including the inverse automorphisms.
pub fn l_letter(l: Letter) -> Endomorphism {
    match (l.gen, l.sign) {
        (Generator::A, Sign::Pos) => Endomorphism::l_a(),
        (Generator::A, Sign::Neg) => Endomorphism::from_strs("a", "Ab"),
        (Generator::B, Sign::Pos) => Endomorphism::l_b(),
        (Generator::B, Sign::Neg) => Endomorphism::from_strs("Ba", "b"),
    }
}

fn fold_letters(w: &FreeWord, base: fn(Letter) -> Endomorphism) -> Endomorphism {
    // Left fold acc ∘ X_l keeps the inner substitution short.
    let cache: [Endomorphism; 4] = Letter::ALL.map(base);
    w.letters().iter().fold(Endomorphism::identity(), |acc, l| {
        let idx = Letter::ALL.iter().position(|x| x == l).unwrap();
        acc.compose(&cache[idx])
    })
}

/// The automorphism `R_w`, with `R_{uv} = R_u ∘ R_v`.
pub fn r_of(w: &FreeWord) -> Endomorphism {
    fold_letters(w, r_letter)
}

/// The automorphism `L_w`, with `L_{uv} = L_u ∘ L_v`.
pub fn l_of(w: &FreeWord) -> Endomorphism {
    fold_letters(w, l_letter)
}

/// `R_w(x)` evaluated right to left without building `R_w` itself.
pub fn apply_r(w: &FreeWord, x: &FreeWord) -> FreeWord {
    w.letters()
        .iter()
        .rev()
        .fold(x.clone(), |acc, &l| r_letter(l).apply(&acc))
}

/// A 2x2 integer matrix `[[m11, m12], [m21, m22]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntMatrix2 {
    pub m11: i64,
    pub m12: i64,
    pub m21: i64,
    pub m22: i64,
}

impl IntMatrix2 {
    pub const IDENTITY: IntMatrix2 = IntMatrix2::new(1, 0, 0, 1);

    pub const fn new(m11: i64, m12: i64, m21: i64, m22: i64) -> Self {
        IntMatrix2 { m11, m12, m21, m22 }
    }

    pub fn neg(&self) -> IntMatrix2 {
        IntMatrix2::new(-self.m11, -self.m12, -self.m21, -self.m22)
    }

    pub fn det(&self) -> Result<i64> {
        let p = self.m11.checked_mul(self.m22);
        let q = self.m12.checked_mul(self.m21);
        p.zip(q)
            .and_then(|(p, q)| p.checked_sub(q))
            .ok_or(Error::Overflow("determinant"))
    }

    pub fn checked_mul(&self, rhs: &IntMatrix2) -> Result<IntMatrix2> {
        let dot = |x1: i64, y1: i64, x2: i64, y2: i64| {
            x1.checked_mul(x2)
                .zip(y1.checked_mul(y2))
                .and_then(|(p, q)| p.checked_add(q))
                .ok_or(Error::Overflow("matrix product"))
        };
        Ok(IntMatrix2::new(
            dot(self.m11, self.m12, rhs.m11, rhs.m21)?,
            dot(self.m11, self.m12, rhs.m12, rhs.m22)?,
            dot(self.m21, self.m22, rhs.m11, rhs.m21)?,
            dot(self.m21, self.m22, rhs.m12, rhs.m22)?,
        ))
    }

    pub fn checked_pow(&self, mut exp: u64) -> Result<IntMatrix2> {
        let mut base = *self;
        let mut acc = IntMatrix2::IDENTITY;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Inverse of an SL2 matrix; `None` when the determinant is not 1.
    pub fn sl2_inverse(&self) -> Option<IntMatrix2> {
        (self.det().ok()? == 1).then(|| IntMatrix2::new(self.m22, -self.m12, -self.m21, self.m11))
    }

    pub fn checked_sub(&self, rhs: &IntMatrix2) -> Result<IntMatrix2> {
        let s = |x: i64, y: i64| x.checked_sub(y).ok_or(Error::Overflow("matrix difference"));
        Ok(IntMatrix2::new(
            s(self.m11, rhs.m11)?,
            s(self.m12, rhs.m12)?,
            s(self.m21, rhs.m21)?,
            s(self.m22, rhs.m22)?,
        ))
    }

    pub fn apply(&self, v: IntVector2) -> Result<IntVector2> {
        let dot = |p: i64, q: i64| {
            p.checked_mul(v.x)
                .zip(q.checked_mul(v.y))
                .and_then(|(s, t)| s.checked_add(t))
                .ok_or(Error::Overflow("matrix-vector product"))
        };
        Ok(IntVector2::new(dot(self.m11, self.m12)?, dot(self.m21, self.m22)?))
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{}],[{},{}]]",
            self.m11, self.m12, self.m21, self.m22
        )
    }
}

/// `M_x` for a single letter.
pub fn matrix_letter(l: Letter) -> IntMatrix2 {
    match (l.gen, l.sign) {
        (Generator::A, Sign::Pos) => IntMatrix2::new(1, 1, 0, 1),
        (Generator::A, Sign::Neg) => IntMatrix2::new(1, -1, 0, 1),
        (Generator::B, Sign::Pos) => IntMatrix2::new(1, 0, 1, 1),
        (Generator::B, Sign::Neg) => IntMatrix2::new(1, 0, -1, 1),
    }
}

/// The abelianization `M_w` of `R_w`, folded letter by letter.
pub fn matrix_of(w: &FreeWord) -> Result<IntMatrix2> {
    w.letters()
        .iter()
        .try_fold(IntMatrix2::IDENTITY, |acc, &l| acc.checked_mul(&matrix_letter(l)))
}
