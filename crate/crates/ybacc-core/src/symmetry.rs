//! The symmetry group acting on charge-conserving braid operators.
//!
//! Three primitive involutions act on any 9x9 braid-form operator (rlex
//! presentation) and preserve both the charge-conserving shape and the
//! braid relation:
//!
//! * `T` — transpose,
//! * `L` — conjugation by the swap `P` (`|ij> -> |ji>`),
//! * `Z` — conjugation by the charge reversal `(nu (x) nu)` with
//!   `nu |j> = |2 - j>`, which on rlex indices is `k -> 8 - k`.
//!
//! At the parameter level each is an exact entry permutation
//! ([`apply_letter_params`]), so symmetry images of exact solutions are
//! exact solutions. The three letters commute pairwise modulo the overall
//! scaling freedom, so the group they generate mod scaling is elementary
//! abelian of order 8; a generic operator has an orbit of exactly 8
//! matrices up to scale ([`orbit`]).

use serde::{Deserialize, Serialize};

use crate::acc::{convert_ordering, AccParams, BasisOrdering, SWAP_PERM};
use crate::numerics::SquareMatrix;
use crate::C64;

/// A primitive symmetry letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    /// Transpose.
    T,
    /// Conjugation by the swap `P`.
    L,
    /// Conjugation by the charge reversal.
    Z,
}

impl Letter {
    pub fn as_str(&self) -> &'static str {
        match self {
            Letter::T => "T",
            Letter::L => "L",
            Letter::Z => "Z",
        }
    }

    pub fn parse(c: char) -> Option<Letter> {
        match c {
            'T' | 't' => Some(Letter::T),
            'L' | 'l' => Some(Letter::L),
            'Z' | 'z' => Some(Letter::Z),
            _ => None,
        }
    }
}

/// A word in the letters plus an optional overall scale, applied letters
/// first (left to right), scale last. The letters commute, so only the
/// multiset of letters matters for the unscaled action.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryWord {
    pub letters: Vec<Letter>,
    pub scale: Option<C64>,
}

impl SymmetryWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        SymmetryWord { letters, scale: None }
    }

    pub fn with_scale(letters: Vec<Letter>, scale: C64) -> Self {
        SymmetryWord { letters, scale: Some(scale) }
    }

    /// Parse a compact word like `"TLZ"`, `"tz"` or `""`.
    pub fn parse(s: &str) -> Option<Self> {
        let letters = s.chars().map(Letter::parse).collect::<Option<Vec<_>>>()?;
        Some(SymmetryWord::new(letters))
    }

    pub fn to_compact(&self) -> String {
        self.letters.iter().map(|l| l.as_str()).collect()
    }
}

/// Charge-reversal index map on rlex positions.
const REV_PERM: [usize; 9] = [8, 7, 6, 5, 4, 3, 2, 1, 0];

/// Apply one letter to a matrix in rlex presentation (exact: transpose or
/// permutation conjugation, no arithmetic).
pub fn apply_letter(letter: Letter, m: &SquareMatrix) -> SquareMatrix {
    match letter {
        Letter::T => m.transpose(),
        Letter::L => m.conjugate_by_perm(&SWAP_PERM),
        Letter::Z => m.conjugate_by_perm(&REV_PERM),
    }
}

/// Apply a word (letters left to right, then the optional scale).
pub fn apply(word: &SymmetryWord, m: &SquareMatrix) -> SquareMatrix {
    let mut out = m.clone();
    for &letter in &word.letters {
        out = apply_letter(letter, &out);
    }
    if let Some(s) = word.scale {
        out = out.scale(s);
    }
    out
}

/// The exact parameter-level action of one letter (entry swaps only, so
/// bit-exact and trivially consistent with [`apply_letter`] on the
/// assembled matrix).
pub fn apply_letter_params(letter: Letter, p: &AccParams) -> AccParams {
    let mut q = *p;
    let mut swap = |a: &str, b: &str| {
        let (va, vb) = (q.get(a).unwrap(), q.get(b).unwrap());
        q.set(a, vb);
        q.set(b, va);
    };
    match letter {
        Letter::T => {
            swap("b12", "c12");
            swap("b13", "c13");
            swap("b23", "c23");
            swap("x1", "x2");
            swap("x3", "x4");
        }
        Letter::L => {
            swap("a12", "d12");
            swap("a13", "d13");
            swap("a23", "d23");
            swap("b12", "c12");
            swap("b13", "c13");
            swap("b23", "c23");
            swap("x1", "x4");
            swap("x2", "x3");
        }
        Letter::Z => {
            swap("a1", "a3");
            swap("a12", "d23");
            swap("d12", "a23");
            swap("b12", "c23");
            swap("c12", "b23");
            swap("a13", "d13");
            swap("b13", "c13");
            swap("x1", "x4");
            swap("x2", "x3");
        }
    }
    q
}

/// Word action on parameters (no scale component unless set).
pub fn apply_params(word: &SymmetryWord, p: &AccParams) -> AccParams {
    let mut out = *p;
    for &letter in &word.letters {
        out = apply_letter_params(letter, &out);
    }
    if let Some(s) = word.scale {
        out = AccParams::from_array(out.as_array().map(|v| v * s));
    }
    out
}

/// A structurally-nonzero pattern over `{x1, x2, x3, x4}` as four flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct XPattern {
    pub x1: bool,
    pub x2: bool,
    pub x3: bool,
    pub x4: bool,
}

impl XPattern {
    pub fn from_names<'a>(names: impl IntoIterator<Item = &'a str>) -> Option<XPattern> {
        let mut p = XPattern::default();
        for n in names {
            match n {
                "x1" => p.x1 = true,
                "x2" => p.x2 = true,
                "x3" => p.x3 = true,
                "x4" => p.x4 = true,
                _ => return None,
            }
        }
        Some(p)
    }

    pub fn names(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if self.x1 {
            v.push("x1");
        }
        if self.x2 {
            v.push("x2");
        }
        if self.x3 {
            v.push("x3");
        }
        if self.x4 {
            v.push("x4");
        }
        v
    }
}

/// How a word moves an x-vanishing pattern (which classification branch a
/// symmetry image lands in). `T` swaps `x1<->x2, x3<->x4`; `L` and `Z`
/// both swap `x1<->x4, x2<->x3` — so `Z L` fixes every pattern.
pub fn xpattern_action(word: &SymmetryWord, pattern: XPattern) -> XPattern {
    let mut p = pattern;
    for &letter in &word.letters {
        p = match letter {
            Letter::T => XPattern { x1: p.x2, x2: p.x1, x3: p.x4, x4: p.x3 },
            Letter::L | Letter::Z => XPattern { x1: p.x4, x2: p.x3, x3: p.x2, x4: p.x1 },
        };
    }
    p
}

/// One distinct orbit element.
#[derive(Debug, Clone)]
pub struct OrbitElement {
    /// First word (in the fixed subset enumeration) reaching this element.
    pub word: Vec<Letter>,
    /// The image, scale-normalized: its first nonzero entry in grlex scan
    /// order equals 1.
    pub matrix: SquareMatrix,
}

/// Result of an orbit enumeration.
#[derive(Debug, Clone)]
pub struct Orbit {
    /// Distinct normalized images, in first-reached order.
    pub elements: Vec<OrbitElement>,
    /// Number of words applied (always 8: the subsets of `{T, L, Z}`).
    pub words_applied: usize,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// Scale-normalize: divide by the first entry of the grlex presentation
/// (row-major scan) whose magnitude exceeds `tol * max_abs`. Zero
/// matrices are returned unchanged.
pub fn normalize_scale(m: &SquareMatrix, tol: f64) -> SquareMatrix {
    let grlex = convert_ordering(m, BasisOrdering::Rlex, BasisOrdering::Grlex)
        .expect("orbit matrices are 9x9");
    let thresh = tol * m.max_abs();
    let pivot = grlex.entries().iter().find(|z| z.norm() > thresh).copied();
    match pivot {
        Some(z) if z != C64::new(0.0, 0.0) => m.scale(C64::new(1.0, 0.0) / z),
        _ => m.clone(),
    }
}

/// Enumerate the orbit of a matrix (rlex presentation) under all eight
/// letter subsets, modulo scaling: images are scale-normalized and
/// deduplicated entrywise at `tol * max(1, max_abs)`.
pub fn orbit(m: &SquareMatrix, tol: f64) -> Orbit {
    let words: [&[Letter]; 8] = [
        &[],
        &[Letter::T],
        &[Letter::L],
        &[Letter::T, Letter::L],
        &[Letter::Z],
        &[Letter::T, Letter::Z],
        &[Letter::L, Letter::Z],
        &[Letter::T, Letter::L, Letter::Z],
    ];
    let mut elements: Vec<OrbitElement> = Vec::new();
    for word in words {
        let image = word.iter().fold(m.clone(), |acc, &l| apply_letter(l, &acc));
        let normalized = normalize_scale(&image, tol);
        let dup = elements.iter().any(|e| {
            let scale = e.matrix.max_abs().max(1.0);
            e.matrix.max_diff(&normalized) <= tol * scale
        });
        if !dup {
            elements.push(OrbitElement { word: word.to_vec(), matrix: normalized });
        }
    }
    Orbit { elements, words_applied: 8 }
}
