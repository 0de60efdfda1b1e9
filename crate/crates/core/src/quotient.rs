//! Finite quotients of F2 and the right action of F2 on `Hom(F2, G) = G x G`
//! given by `φ·w = φ ∘ R_w`. Orbits of this action are cosets of finite
//! index stabilizers, which is what makes `Pal` profinitely continuous; the
//! tables and certificates here check that at desk scale.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::endo::{matrix_of, IntMatrix2};
use crate::error::{Error, Result};
use crate::freegroup::{FreeWord, Generator, IntVector2, Letter, Sign};
use crate::pal::{closure_plus, pal};

/// Largest symmetric-group degree accepted by default.
pub const DEFAULT_MAX_DEGREE: usize = 5;

/// Loop words checked per orbit by [`continuity_certificate`].
const LOOPS_CHECKED: usize = 16;

/// A permutation of `{0, .., n-1}` in one-line notation.
///
/// Products compose left to right: `(p * q)(i) = q(p(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::parse(&format!("{images:?}"), "not a bijection"));
            }
            seen[i] = true;
        }
        if n > u8::MAX as usize {
            return Err(Error::BoundExceeded {
                what: "degree",
                value: n,
                max: u8::MAX as usize,
            });
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u8).collect(),
        })
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`; `()` is the identity.
    pub fn from_cycles(n: usize, s: &str) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::parse(s, "expected '('"))?;
            let close = body.find(')').ok_or_else(|| Error::parse(s, "unclosed cycle"))?;
            let cycle = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::parse(s, format!("bad point {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            for &p in &cycle {
                if p >= n {
                    return Err(Error::parse(s, format!("point {p} out of range for degree {n}")));
                }
                if seen[p] {
                    return Err(Error::parse(s, format!("point {p} repeated")));
                }
                seen[p] = true;
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(i + 1) % cycle.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        check_degree(self, other)?;
        Ok(Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            out[x as usize] = i as u8;
        }
        Permutation { images: out }
    }

    /// All permutations of degree `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation {
                    images: prefix.clone(),
                });
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    prefix.push(i as u8);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
        out
    }
}

fn check_degree(p: &Permutation, q: &Permutation) -> Result<()> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A point `(φ(a), φ(b))` of `Hom(F2, S_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub g: Permutation,
    pub h: Permutation,
}

impl Point {
    pub fn new(g: Permutation, h: Permutation) -> Result<Self> {
        check_degree(&g, &h)?;
        Ok(Point { g, h })
    }

    fn step(&self, l: Letter) -> Point {
        // Degrees already agree.
        let mul = |x: &Permutation, y: &Permutation| x.then(y).unwrap();
        let (g, h) = (&self.g, &self.h);
        match (l.gen, l.sign) {
            (Generator::A, Sign::Pos) => Point { g: g.clone(), h: mul(h, g) },
            (Generator::A, Sign::Neg) => Point { g: g.clone(), h: mul(h, &g.inverse()) },
            (Generator::B, Sign::Pos) => Point { g: mul(g, h), h: h.clone() },
            (Generator::B, Sign::Neg) => Point { g: mul(g, &h.inverse()), h: h.clone() },
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.g, self.h)
    }
}

/// Right action `(φ(a), φ(b))·w = ((φ∘R_w)(a), (φ∘R_w)(b))`, letter by letter.
pub fn act_point(p: &Point, w: &FreeWord) -> Point {
    w.letters().iter().fold(p.clone(), |acc, &l| acc.step(l))
}

/// A homomorphism `F2 -> S_n` given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteHom {
    pub phi_a: Permutation,
    pub phi_b: Permutation,
}

impl FiniteHom {
    pub fn new(phi_a: Permutation, phi_b: Permutation) -> Result<Self> {
        check_degree(&phi_a, &phi_b)?;
        Ok(FiniteHom { phi_a, phi_b })
    }

    pub fn trivial(n: usize) -> Self {
        FiniteHom {
            phi_a: Permutation::identity(n),
            phi_b: Permutation::identity(n),
        }
    }

    pub fn degree(&self) -> usize {
        self.phi_a.degree()
    }

    pub fn point(&self) -> Point {
        Point {
            g: self.phi_a.clone(),
            h: self.phi_b.clone(),
        }
    }

    /// The image `φ(w)` as a product of generator images, left to right.
    pub fn eval(&self, w: &FreeWord) -> Permutation {
        let inv_a = self.phi_a.inverse();
        let inv_b = self.phi_b.inverse();
        w.letters()
            .iter()
            .fold(Permutation::identity(self.degree()), |acc, l| {
                let x = match (l.gen, l.sign) {
                    (Generator::A, Sign::Pos) => &self.phi_a,
                    (Generator::A, Sign::Neg) => &inv_a,
                    (Generator::B, Sign::Pos) => &self.phi_b,
                    (Generator::B, Sign::Neg) => &inv_b,
                };
                acc.then(x).unwrap()
            })
    }
}

/// One orbit of the action, explored breadth first from `base`.
#[derive(Debug, Clone)]
pub struct Orbit {
    pub points: Vec<Point>,
    /// `transversal[i]` maps the base point to `points[i]`.
    pub transversal: Vec<FreeWord>,
    /// Nontrivial words fixing the base point, one per non-tree edge.
    pub loops: Vec<FreeWord>,
    index: HashMap<Point, usize>,
}

impl Orbit {
    pub fn base(&self) -> &Point {
        &self.points[0]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn position(&self, p: &Point) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Stabilizer words of `points[i]`: base loops conjugated by the
    /// transversal word.
    pub fn stabilizer_words(&self, i: usize) -> impl Iterator<Item = FreeWord> + '_ {
        let t = &self.transversal[i];
        let t_inv = t.invert();
        self.loops.iter().map(move |s| t_inv.concat(s).concat(t))
    }
}

/// BFS orbit of `base`, moves tried in the order `a, A, b, B`.
pub fn orbit_of(base: &Point) -> Orbit {
    let mut points = vec![base.clone()];
    let mut transversal = vec![FreeWord::identity()];
    let mut loops = Vec::new();
    let mut index = HashMap::from([(base.clone(), 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for l in Letter::ALL {
            let q = points[i].step(l);
            let through = transversal[i].concat(&FreeWord::letter(l));
            match index.get(&q) {
                Some(&j) => {
                    let s = through.concat(&transversal[j].invert());
                    if !s.is_identity() {
                        loops.push(s);
                    }
                }
                None => {
                    let j = points.len();
                    index.insert(q.clone(), j);
                    points.push(q);
                    transversal.push(through);
                    queue.push_back(j);
                }
            }
        }
    }
    Orbit {
        points,
        transversal,
        loops,
        index,
    }
}

/// The orbit decomposition of `S_n x S_n`.
#[derive(Debug, Clone)]
pub struct OrbitTable {
    pub degree: usize,
    /// All points, in lexicographic order.
    pub points: Vec<Point>,
    pub orbit_id: Vec<usize>,
    pub transversal: Vec<FreeWord>,
    pub orbits: Vec<Orbit>,
}

impl OrbitTable {
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Orbit::len).collect()
    }

    /// Checks the structural invariants: sizes sum to `|G|^2` and every
    /// transversal word maps its orbit's base point to its point.
    pub fn verify(&self) -> bool {
        let total: usize = self.orbit_sizes().iter().sum();
        total == self.points.len()
            && self.points.iter().enumerate().all(|(i, p)| {
                let base = self.orbits[self.orbit_id[i]].base();
                act_point(base, &self.transversal[i]) == *p
            })
    }

    /// Lines `point<TAB>orbit_id<TAB>transversal_word`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, p) in self.points.iter().enumerate() {
            out.push_str(&format!("{p}\t{}\t{}\n", self.orbit_id[i], self.transversal[i]));
        }
        out
    }
}

pub fn orbit_table(n: usize) -> Result<OrbitTable> {
    orbit_table_bounded(n, DEFAULT_MAX_DEGREE)
}

pub fn orbit_table_bounded(n: usize, max_degree: usize) -> Result<OrbitTable> {
    if n > max_degree {
        return Err(Error::BoundExceeded {
            what: "degree",
            value: n,
            max: max_degree,
        });
    }
    let perms = Permutation::all(n);
    let points: Vec<Point> = perms
        .iter()
        .flat_map(|g| {
            perms.iter().map(move |h| Point {
                g: g.clone(),
                h: h.clone(),
            })
        })
        .collect();
    let lookup: HashMap<&Point, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut orbit_id = vec![usize::MAX; points.len()];
    let mut transversal = vec![FreeWord::identity(); points.len()];
    let mut orbits = Vec::new();
    for i in 0..points.len() {
        if orbit_id[i] != usize::MAX {
            continue;
        }
        let orbit = orbit_of(&points[i]);
        for (p, t) in orbit.points.iter().zip(&orbit.transversal) {
            let k = lookup[p];
            orbit_id[k] = orbits.len();
            transversal[k] = t.clone();
        }
        orbits.push(orbit);
    }
    Ok(OrbitTable {
        degree: n,
        points,
        orbit_id,
        transversal,
        orbits,
    })
}

/// Checks, on sampled pairs, that `φ(Pal(w))` depends only on `(φ(a), φ(b))·w`,
/// and that loop words of the orbit act trivially on the starting point.
pub fn continuity_certificate(phi: &FiniteHom, samples: &[(FreeWord, FreeWord)]) -> bool {
    let p = phi.point();
    let ab_inv = phi.eval(&"BA".parse().unwrap());
    let image_of = |w: &FreeWord| phi.eval(&pal(w));
    for (u, v) in samples {
        let pu = act_point(&p, u);
        let pv = act_point(&p, v);
        let (iu, iv) = (image_of(u), image_of(v));
        // Pal(w) = (ab)^-1 R_w(a) R_w(b)
        let via_orbit = |q: &Point| ab_inv.then(&q.g).and_then(|x| x.then(&q.h)).ok();
        if via_orbit(&pu) != Some(iu.clone()) || via_orbit(&pv) != Some(iv.clone()) {
            return false;
        }
        if pu == pv && iu != iv {
            return false;
        }
    }
    let orbit = orbit_of(&p);
    let stabilizers: Vec<FreeWord> = orbit.stabilizer_words(0).take(LOOPS_CHECKED).collect();
    if stabilizers.iter().any(|s| act_point(&p, s) != p) {
        return false;
    }
    samples.iter().flat_map(|(u, v)| [u, v]).all(|w| {
        let pw = act_point(&p, w);
        stabilizers
            .iter()
            .all(|s| act_point(&p, &s.concat(w)) == pw)
    })
}

/// `M_{a^-1 b}`
pub fn gap_matrix() -> IntMatrix2 {
    matrix_of(&"Ab".parse().unwrap()).expect("small matrix")
}

/// Multiplicative order of `M`, searched up to `limit`.
pub fn matrix_order(m: &IntMatrix2, limit: u64) -> Option<u64> {
    let mut acc = *m;
    for k in 1..=limit {
        if acc == IntMatrix2::IDENTITY {
            return Some(k);
        }
        acc = acc.checked_mul(m).ok()?;
    }
    None
}

/// `(M^k - I)(1,1)^T` for `M = M_{a^-1 b}`, which is `π(Pal((a^-1 b)^k))`.
pub fn gap_for_exponent(k: u64) -> Result<IntVector2> {
    let m = gap_matrix();
    let order = matrix_order(&m, 12).expect("M_{a^-1 b} has finite order");
    m.checked_pow(k % order)?
        .checked_sub(&IntMatrix2::IDENTITY)?
        .apply(IntVector2::new(1, 1))
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    acc
}

/// `π(Pal(w^{p^n}))` for `w = a^-1 b`, computed at matrix level with the
/// exponent reduced modulo the order of `M_w`.
pub fn pro_p_gap(p: u64, n: u64) -> Result<IntVector2> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let order = matrix_order(&gap_matrix(), 12).expect("M_{a^-1 b} has finite order");
    gap_for_exponent(pow_mod(p, n, order))
}

/// Largest `n` accepted by [`closure_discontinuity_demo`].
pub const DEMO_MAX_N: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemoRow {
    pub n: usize,
    /// `a b^{n!}`
    pub word: Vec<Letter>,
    /// `(a b^{n!})^+`
    pub closed: Vec<Letter>,
    /// Whether `closed == a b^{n!} a`.
    pub matches: bool,
}

/// `(a b^{n!})^+ = a b^{n!} a` for `n = 1..=n_max`.
pub fn closure_discontinuity_demo(n_max: usize) -> Result<Vec<DemoRow>> {
    if n_max > DEMO_MAX_N {
        return Err(Error::BoundExceeded {
            what: "n_max",
            value: n_max,
            max: DEMO_MAX_N,
        });
    }
    let mut rows = Vec::with_capacity(n_max);
    let mut factorial = 1usize;
    for n in 1..=n_max {
        factorial *= n;
        let mut word = vec![Letter::A];
        word.extend(std::iter::repeat_n(Letter::B, factorial));
        let closed = closure_plus(&word);
        let mut expected = word.clone();
        expected.push(Letter::A);
        rows.push(DemoRow {
            n,
            matches: closed == expected,
            word,
            closed,
        });
    }
    Ok(rows)
}

impl FromStr for Permutation {
    type Err = Error;

    /// One-line notation `[1,2,0]`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(|| Error::parse(s, "expected [i,j,...]"))?;
        let images = body
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse(s, format!("bad image {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }
}
