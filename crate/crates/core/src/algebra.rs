//! The algebra `Lambda_{m,N}`: parameters, quiver letters, words and path
//! arithmetic modulo the defining relations.
//!
//! Conventions used throughout the crate:
//! - vertices are `Z/m`; every public API reduces arbitrary integers mod `m`;
//! - `a_i` runs `i -> i+1`, `A_i` (the bar arrow) runs `i+1 -> i`;
//! - a word `w_1 w_2 ... w_n` is stored left to right and composes right to
//!   left, so `source(word) = source(w_n)` and `target(word) = target(w_1)`.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid parameters: need m >= 3 and N >= 1, got m={m}, n={n}")]
    InvalidParameters { m: i64, n: i64 },
    #[error("letters do not compose at position {position}")]
    NotComposable { position: usize },
    #[error("expected a directed path (no formal inverses)")]
    NotDirected,
}

/// The pair `(m, N)` with the derived orbit-count parameter `kappa`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    m: usize,
    relation_exponent: usize,
}

impl Algebra {
    pub fn new(m: i64, relation_exponent: i64) -> Result<Self, AlgebraError> {
        if m < 3 || relation_exponent < 1 {
            return Err(AlgebraError::InvalidParameters {
                m,
                n: relation_exponent,
            });
        }
        Ok(Algebra {
            m: m as usize,
            relation_exponent: relation_exponent as usize,
        })
    }

    /// Number of vertices.
    pub fn m(&self) -> usize {
        self.m
    }

    /// The exponent `N` in the relations `(A_i a_i)^N = (a_{i-1} A_{i-1})^N`.
    pub fn relation_exponent(&self) -> usize {
        self.relation_exponent
    }

    /// `kappa = m/2` for even `m`, `(m-1)/2` for odd `m`.
    pub fn kappa(&self) -> usize {
        self.m / 2
    }

    pub fn vertex(&self, i: i64) -> usize {
        i.rem_euclid(self.m as i64) as usize
    }

    /// Longest nonzero path length, `2N`.
    pub fn socle_path_len(&self) -> usize {
        2 * self.relation_exponent
    }

    pub fn letter(&self, kind: ArrowKind, index: i64, inverted: bool) -> Letter {
        Letter {
            kind,
            index: self.vertex(index),
            inverted,
        }
    }

    pub fn arrow_a(&self, i: i64) -> Letter {
        self.letter(ArrowKind::A, i, false)
    }

    pub fn arrow_bar(&self, i: i64) -> Letter {
        self.letter(ArrowKind::Bar, i, false)
    }

    /// All `2m` arrows of the quiver.
    pub fn arrows(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(2 * self.m);
        for i in 0..self.m as i64 {
            out.push(self.arrow_a(i));
            out.push(self.arrow_bar(i));
        }
        out
    }

    /// Dense index of an arrow, for per-arrow matrix tables.
    pub fn arrow_id(&self, l: Letter) -> usize {
        debug_assert!(!l.inverted);
        2 * l.index
            + match l.kind {
                ArrowKind::A => 0,
                ArrowKind::Bar => 1,
            }
    }

    pub fn arrow_from_id(&self, id: usize) -> Letter {
        let kind = if id % 2 == 0 { ArrowKind::A } else { ArrowKind::Bar };
        Letter {
            kind,
            index: id / 2,
            inverted: false,
        }
    }
}

/// The two arrow families: `A` is `a_i`, `Bar` is the reverse arrow `ā_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrowKind {
    A,
    Bar,
}

/// An arrow of the quiver or the formal inverse of one.
///
/// The derived `Ord` (kind, then index, then inverted) is the total order
/// used for canonical forms of strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub kind: ArrowKind,
    pub index: usize,
    pub inverted: bool,
}

impl Letter {
    pub fn source(&self, alg: &Algebra) -> usize {
        if self.inverted {
            self.as_arrow().target(alg)
        } else {
            match self.kind {
                ArrowKind::A => self.index,
                ArrowKind::Bar => alg.vertex(self.index as i64 + 1),
            }
        }
    }

    pub fn target(&self, alg: &Algebra) -> usize {
        if self.inverted {
            self.as_arrow().source(alg)
        } else {
            match self.kind {
                ArrowKind::A => alg.vertex(self.index as i64 + 1),
                ArrowKind::Bar => self.index,
            }
        }
    }

    pub fn inverse(&self) -> Letter {
        Letter {
            inverted: !self.inverted,
            ..*self
        }
    }

    /// The underlying arrow, forgetting inversion.
    pub fn as_arrow(&self) -> Letter {
        Letter {
            inverted: false,
            ..*self
        }
    }

    /// The arrow that extends a nonzero directed path ending with `self`:
    /// after `a_i` comes `A_i`, after `A_i` comes `a_i`.
    pub fn alternation_partner(&self) -> Letter {
        debug_assert!(!self.inverted);
        Letter {
            kind: match self.kind {
                ArrowKind::A => ArrowKind::Bar,
                ArrowKind::Bar => ArrowKind::A,
            },
            index: self.index,
            inverted: false,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.kind {
            ArrowKind::A => 'a',
            ArrowKind::Bar => 'A',
        };
        write!(f, "{}{}", base, self.index)?;
        if self.inverted {
            write!(f, "-")?;
        }
        Ok(())
    }
}

/// A composable word `w_1 ... w_n` over letters, or the empty word at a vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Word {
    Trivial(usize),
    Letters(Vec<Letter>),
}

impl Word {
    pub fn trivial(alg: &Algebra, i: i64) -> Word {
        Word::Trivial(alg.vertex(i))
    }

    /// Builds a word from letters, checking composability.
    pub fn from_letters(alg: &Algebra, letters: Vec<Letter>) -> Result<Word, AlgebraError> {
        if letters.is_empty() {
            panic!("empty letter list needs a vertex; use Word::trivial");
        }
        for j in 0..letters.len() - 1 {
            if letters[j].source(alg) != letters[j + 1].target(alg) {
                return Err(AlgebraError::NotComposable { position: j + 1 });
            }
        }
        Ok(Word::Letters(letters))
    }

    pub fn len(&self) -> usize {
        match self {
            Word::Trivial(_) => 0,
            Word::Letters(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn letters(&self) -> &[Letter] {
        match self {
            Word::Trivial(_) => &[],
            Word::Letters(v) => v,
        }
    }

    pub fn source(&self, alg: &Algebra) -> usize {
        match self {
            Word::Trivial(i) => *i,
            Word::Letters(v) => v[v.len() - 1].source(alg),
        }
    }

    pub fn target(&self, alg: &Algebra) -> usize {
        match self {
            Word::Trivial(i) => *i,
            Word::Letters(v) => v[0].target(alg),
        }
    }

    pub fn inverse(&self) -> Word {
        match self {
            Word::Trivial(i) => Word::Trivial(*i),
            Word::Letters(v) => {
                Word::Letters(v.iter().rev().map(|l| l.inverse()).collect())
            }
        }
    }

    /// Vertex visited at position `j` (between letters `w_j` and `w_{j+1}`),
    /// for `0 <= j <= len`.
    pub fn vertex_at(&self, alg: &Algebra, j: usize) -> usize {
        match self {
            Word::Trivial(i) => *i,
            Word::Letters(v) => {
                if j < v.len() {
                    v[j].target(alg)
                } else {
                    v[v.len() - 1].source(alg)
                }
            }
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Trivial(i) => write!(f, "e{i}"),
            Word::Letters(v) => {
                for (k, l) in v.iter().enumerate() {
                    if k > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{l}")?;
                }
                Ok(())
            }
        }
    }
}

/// A normal-form element of the path algebra: zero or a directed path
/// modulo the relation ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PathElement {
    Zero,
    /// Nonzero path: start vertex plus its letters (all non-inverted),
    /// with socle paths normalised to the `(A_i a_i)^N` form.
    Path { start: usize, letters: Vec<Letter> },
}

impl PathElement {
    pub fn len(&self) -> usize {
        match self {
            PathElement::Zero => 0,
            PathElement::Path { letters, .. } => letters.len(),
        }
    }
}

/// Is the directed two-letter combination `second` after `first` zero in the
/// path algebra? (`a_{i+1} a_i` and `A_{i-1} A_i` are relations.)
fn directed_pair_is_zero(alg: &Algebra, second: Letter, first: Letter) -> bool {
    debug_assert!(!first.inverted && !second.inverted);
    if second.source(alg) != first.target(alg) {
        return true;
    }
    match (second.kind, first.kind) {
        // a_{i+1} a_i = 0; composability already forces the indices.
        (ArrowKind::A, ArrowKind::A) => true,
        (ArrowKind::Bar, ArrowKind::Bar) => true,
        _ => false,
    }
}

/// Normal form of a directed path given as letters applied right-to-left
/// (`letters[len-1]` acts first). Zero when the path hits a relation or
/// exceeds length `2N`; the two socle paths at a vertex share one normal form.
pub fn path_product(alg: &Algebra, letters: &[Letter]) -> Result<PathElement, AlgebraError> {
    if letters.iter().any(|l| l.inverted) {
        return Err(AlgebraError::NotDirected);
    }
    if letters.is_empty() {
        panic!("path_product of the empty path needs a vertex; use PathElement::Path with no letters");
    }
    for j in 0..letters.len() - 1 {
        if letters[j].source(alg) != letters[j + 1].target(alg) {
            return Err(AlgebraError::NotComposable { position: j + 1 });
        }
    }
    for j in 0..letters.len() - 1 {
        if directed_pair_is_zero(alg, letters[j], letters[j + 1]) {
            return Ok(PathElement::Zero);
        }
    }
    let n2 = alg.socle_path_len();
    if letters.len() > n2 {
        return Ok(PathElement::Zero);
    }
    let start = letters[letters.len() - 1].source(alg);
    if letters.len() == n2 {
        // Socle path at `start`: normalise to the branch through a_start.
        let mut canon = Vec::with_capacity(n2);
        let mut next = alg.arrow_a(start as i64);
        for _ in 0..n2 {
            canon.push(next);
            next = next.alternation_partner();
        }
        canon.reverse();
        return Ok(PathElement::Path {
            start,
            letters: canon,
        });
    }
    Ok(PathElement::Path {
        start,
        letters: letters.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters_and_kappa() {
        let a = Algebra::new(3, 1).unwrap();
        assert_eq!((a.m(), a.relation_exponent(), a.kappa()), (3, 1, 1));
        let a = Algebra::new(6, 2).unwrap();
        assert_eq!(a.kappa(), 3);
        assert_eq!(
            Algebra::new(2, 1),
            Err(AlgebraError::InvalidParameters { m: 2, n: 1 })
        );
        assert!(Algebra::new(3, 0).is_err());
    }

    #[test]
    fn sources_and_targets() {
        let alg = Algebra::new(5, 1).unwrap();
        let a0 = alg.arrow_a(0);
        assert_eq!((a0.source(&alg), a0.target(&alg)), (0, 1));
        let bar0 = alg.arrow_bar(0);
        assert_eq!((bar0.source(&alg), bar0.target(&alg)), (1, 0));
        let inv = bar0.inverse();
        assert_eq!((inv.source(&alg), inv.target(&alg)), (0, 1));
    }

    #[test]
    fn zero_relations() {
        let alg = Algebra::new(3, 1).unwrap();
        // a_1 a_0 = 0.
        let p = path_product(&alg, &[alg.arrow_a(1), alg.arrow_a(0)]).unwrap();
        assert_eq!(p, PathElement::Zero);
        // A_1 A_2 = 0 (bar pair A_{i-1} A_i with i = 2).
        let p = path_product(&alg, &[alg.arrow_bar(1), alg.arrow_bar(2)]).unwrap();
        assert_eq!(p, PathElement::Zero);
        // Single arrow survives.
        let alg4 = Algebra::new(4, 1).unwrap();
        let p = path_product(&alg4, &[alg4.arrow_a(0)]).unwrap();
        assert!(matches!(p, PathElement::Path { start: 0, .. }));
    }

    #[test]
    fn socle_paths_identified() {
        let alg = Algebra::new(3, 2).unwrap();
        // (A_0 a_0)^2 and (a_2 A_2)^2 are both socle paths at vertex 0.
        let via_a = [
            alg.arrow_bar(0),
            alg.arrow_a(0),
            alg.arrow_bar(0),
            alg.arrow_a(0),
        ];
        let via_bar = [
            alg.arrow_a(2),
            alg.arrow_bar(2),
            alg.arrow_a(2),
            alg.arrow_bar(2),
        ];
        let p = path_product(&alg, &via_a).unwrap();
        let q = path_product(&alg, &via_bar).unwrap();
        assert_eq!(p, q);
        assert!(matches!(p, PathElement::Path { start: 0, .. }));
        // Anything longer is zero.
        let mut long = via_a.to_vec();
        long.insert(0, alg.arrow_a(0));
        assert_eq!(path_product(&alg, &long).unwrap(), PathElement::Zero);
    }

    #[test]
    fn non_composable_rejected() {
        let alg = Algebra::new(4, 1).unwrap();
        let err = path_product(&alg, &[alg.arrow_a(0), alg.arrow_a(2)]).unwrap_err();
        assert_eq!(err, AlgebraError::NotComposable { position: 1 });
    }

    #[test]
    fn word_endpoints_and_inverse() {
        let alg = Algebra::new(6, 1).unwrap();
        // Z_0' = A5- a4 A3- a2 A1- a0.
        let w = Word::from_letters(
            &alg,
            vec![
                alg.letter(ArrowKind::Bar, 5, true),
                alg.arrow_a(4),
                alg.letter(ArrowKind::Bar, 3, true),
                alg.arrow_a(2),
                alg.letter(ArrowKind::Bar, 1, true),
                alg.arrow_a(0),
            ],
        )
        .unwrap();
        assert_eq!(w.source(&alg), 0);
        assert_eq!(w.target(&alg), 0);
        assert_eq!(w.inverse().inverse(), w);
        assert_eq!(w.len(), 6);
    }
}
