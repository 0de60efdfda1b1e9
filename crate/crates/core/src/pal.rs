//! The palindromization map `Pal(w) = (ab)^-1 R_w(ab)` and the decision
//! procedures built on it.
//!
//! `Pal` restricts to iterated palindromic closure on the positive monoid,
//! is constant exactly on cosets of `Pal^-1(1)`, and its image is the set of
//! `g` with `abg` conjugate to `bag`.

use crate::endo::{apply_r, l_of, Endomorphism};
use crate::error::{Error, Result};
use crate::freegroup::{are_conjugate, FreeWord, Generator, Letter, MonoidWord};

fn ab() -> FreeWord {
    FreeWord::reduce([Letter::A, Letter::B])
}

fn ba() -> FreeWord {
    FreeWord::reduce([Letter::B, Letter::A])
}

/// `Pal(w) = b^-1 a^-1 R_w(ab)`.
pub fn pal(w: &FreeWord) -> FreeWord {
    ab().invert().concat(&apply_r(w, &ab()))
}

/// `Pal` computed through `Pal(uv) = Pal(u) R_u(Pal(v))`, one letter at a
/// time from the right, seeded with `Pal(x) = x` for single letters.
pub fn pal_recursive(w: &FreeWord) -> FreeWord {
    // Pal(x v) = x R_x(Pal(v))
    w.letters().iter().rev().fold(FreeWord::identity(), |acc, &l| {
        let seed = FreeWord::letter(l);
        seed.concat(&apply_r(&seed, &acc))
    })
}

/// Decides `Pal(u) = Pal(v)` via `R_{u^-1 v}(ab) = ab`.
pub fn pal_equal(u: &FreeWord, v: &FreeWord) -> bool {
    in_kernel(&u.invert().concat(v))
}

/// `Pal(w) = 1`, i.e. `R_w` fixes `ab`.
pub fn in_kernel(w: &FreeWord) -> bool {
    apply_r(w, &ab()) == ab()
}

/// Image criterion: `abg` and `bag` are conjugate.
pub fn in_image(g: &FreeWord) -> bool {
    are_conjugate(&ab().concat(g), &ba().concat(g))
}

/// Recovers some `w` with `Pal(w) = g`.
///
/// Elements starting with `b^-1` peel off `ab^-1a`; those starting with
/// `a^-1` go through the exchange `a <-> b`; positive ones are central words
/// and are read back with [`directive`]. The returned representative is
/// deterministic but not necessarily shortest in its coset `w Pal^-1(1)`.
pub fn preimage(g: &FreeWord) -> Result<FreeWord> {
    if !in_image(g) {
        return Err(Error::NotInImage(g.clone()));
    }
    let w = preimage_unchecked(g).ok_or_else(|| Error::NotInImage(g.clone()))?;
    if pal(&w) != *g {
        return Err(Error::NotInImage(g.clone()));
    }
    Ok(w)
}

fn preimage_unchecked(g: &FreeWord) -> Option<FreeWord> {
    let Some(first) = g.first() else {
        return Some(FreeWord::identity());
    };
    // Single letters are fixed by Pal.
    if g.len() == 1 {
        return Some(g.clone());
    }
    match first {
        Letter::B_INV => {
            if g.last() != Some(Letter::B_INV) {
                return None;
            }
            let h = FreeWord::reduce(g.letters()[1..g.len() - 1].iter().copied());
            let inner = Endomorphism::tau_inv().apply(&h);
            let u = preimage_unchecked(&inner)?;
            Some("aBa".parse::<FreeWord>().ok()?.concat(&u))
        }
        Letter::A_INV => {
            let exchanged = exchange(g);
            preimage_unchecked(&exchanged).map(|w| exchange(&w))
        }
        _ => {
            let m = g.to_monoid()?;
            directive(&m).ok().map(|d| d.to_free())
        }
    }
}

/// The exchange involution `E`.
pub fn exchange(w: &FreeWord) -> FreeWord {
    w.map_letters(|l| Letter::new(l.gen.other(), l.sign))
}

/// Shortest palindrome having `s` as a prefix, over the four symbols
/// `a, A, b, B` treated as plain letters (no cancellation, no inversion).
pub fn closure_plus(s: &[Letter]) -> Vec<Letter> {
    let n = s.len();
    let is_pal = |t: &[Letter]| t.iter().eq(t.iter().rev());
    let start = (0..n).find(|&i| is_pal(&s[i..])).unwrap_or(n);
    let mut out = s.to_vec();
    out.extend(s[..start].iter().rev());
    out
}

fn closure_plus_gen(s: &[Generator]) -> Vec<Generator> {
    let n = s.len();
    let is_pal = |t: &[Generator]| t.iter().eq(t.iter().rev());
    let start = (0..n).find(|&i| is_pal(&s[i..])).unwrap_or(n);
    let mut out = s.to_vec();
    out.extend(s[..start].iter().rev());
    out
}

/// Right iterated palindromic closure: `PP(wx) = (PP(w)x)^+`.
pub fn pp(w: &MonoidWord) -> MonoidWord {
    let mut acc: Vec<Generator> = Vec::new();
    for &g in w.letters() {
        acc.push(g);
        acc = closure_plus_gen(&acc);
    }
    MonoidWord::new(acc)
}

/// Directive word of a central word: the letters immediately following each
/// palindromic prefix (the empty prefix included).
pub fn directive(g: &MonoidWord) -> Result<MonoidWord> {
    let letters = g.letters();
    let n = letters.len();
    let mut out = Vec::new();
    for k in 0..n {
        let prefix = &letters[..k];
        if prefix.iter().eq(prefix.iter().rev()) {
            out.push(letters[k]);
        }
    }
    let d = MonoidWord::new(out);
    if pp(&d) != *g {
        return Err(Error::NotCentral(g.to_string()));
    }
    Ok(d)
}

/// An element `(x, u)` of the semidirect product `F2 ⋊ F2` for the action
/// `u -> R_u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SemiDirectElement {
    pub left: FreeWord,
    pub right: FreeWord,
}

impl SemiDirectElement {
    pub fn new(left: FreeWord, right: FreeWord) -> Self {
        SemiDirectElement { left, right }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    /// `(x, u)(y, v) = (x R_u(y), uv)`
    pub fn mul(&self, other: &SemiDirectElement) -> SemiDirectElement {
        SemiDirectElement::new(
            self.left.concat(&apply_r(&self.right, &other.left)),
            self.right.concat(&other.right),
        )
    }

    /// `(x, u)^-1 = (R_{u^-1}(x^-1), u^-1)`
    pub fn inverse(&self) -> SemiDirectElement {
        let u_inv = self.right.invert();
        SemiDirectElement::new(apply_r(&u_inv, &self.left.invert()), u_inv)
    }
}

pub fn semidirect_mul(x: &SemiDirectElement, y: &SemiDirectElement) -> SemiDirectElement {
    x.mul(y)
}

/// `(Pal(u), u)`
pub fn pal_hat(u: &FreeWord) -> SemiDirectElement {
    SemiDirectElement::new(pal(u), u.clone())
}

/// `L_w(ba)`; equals `Pal(w) ba`.
pub fn l_of_ba(w: &FreeWord) -> FreeWord {
    l_of(w).apply(&ba())
}
