//! The alternative chain groups `C_n / U_n`, where `U_n` is generated by
//! `act(s, g) - ε(s) g`.
//!
//! `U_n` is never built. Every coset has a canonical representative, the
//! non-decreasing reordering of its tuple:
//!
//! * a tuple with distinct entries is `ε(sort)` times its sorted tuple, a free
//!   `ℤ` generator;
//! * a tuple with a repeated entry is fixed by the odd transposition swapping
//!   the repeats, so its class has order 2. Its coefficient lives in `ℤ₂`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::chain::Chain;
use crate::complex::{support, Limits, OrderedGenerator, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::IntegerMatrix;
use crate::permutation::{inversion_sign, Permutation};

/// Version tag for exported presentations.
pub const PRESENTATION_FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassKind {
    Free,
    Torsion,
}

/// A canonical coset representative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AltChainClass {
    tuple: Vec<usize>,
    kind: ClassKind,
}

impl fmt::Debug for AltChainClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ClassKind::Free => write!(f, "[{:?}]", self.tuple),
            ClassKind::Torsion => write!(f, "[{:?}]₂", self.tuple),
        }
    }
}

impl AltChainClass {
    /// Class of an already sorted (non-decreasing) tuple.
    pub fn from_sorted(tuple: Vec<usize>) -> Self {
        debug_assert!(tuple.windows(2).all(|w| w[0] <= w[1]));
        let kind = if tuple.windows(2).any(|w| w[0] == w[1]) {
            ClassKind::Torsion
        } else {
            ClassKind::Free
        };
        AltChainClass { tuple, kind }
    }

    pub fn tuple(&self) -> &[usize] {
        &self.tuple
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }

    pub fn is_torsion(&self) -> bool {
        self.kind == ClassKind::Torsion
    }

    pub fn degree(&self) -> usize {
        self.tuple.len() - 1
    }

    pub fn representative(&self) -> OrderedGenerator {
        OrderedGenerator::new(self.tuple.clone())
    }
}

/// Signature of a canonicalization routine; swapped out by mutation fixtures.
pub type CanonicalizeFn = fn(&OrderedGenerator) -> (AltChainClass, i64);

/// Maps a tuple to its canonical class and coefficient: `(sorted, ε(sort))` for
/// distinct entries, `(sorted, 1)` (read mod 2) for tuples with a repeat.
pub fn canonicalize(g: &OrderedGenerator) -> (AltChainClass, i64) {
    let v = g.vertices();
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    let class = AltChainClass::from_sorted(sorted);
    match class.kind {
        ClassKind::Free => (class, inversion_sign(v) as i64),
        ClassKind::Torsion => (class, 1),
    }
}

/// An element of `C_{An}`: integer coefficients on free classes, bits on torsion classes.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct AltChain {
    degree: usize,
    free: BTreeMap<Vec<usize>, i64>,
    torsion: BTreeSet<Vec<usize>>,
}

impl fmt::Debug for AltChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, c) in &self.free {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}·{t:?}")?;
        }
        for t in &self.torsion {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{t:?}₂")?;
        }
        Ok(())
    }
}

impl AltChain {
    pub fn zero(degree: usize) -> Self {
        AltChain {
            degree,
            ..Default::default()
        }
    }

    pub fn from_class(class: &AltChainClass, coeff: i64) -> Self {
        let mut c = AltChain::zero(class.degree());
        c.add_class(class, coeff);
        c
    }

    /// Canonicalizes every term of an ordered chain.
    pub fn from_chain(chain: &Chain) -> Self {
        Self::from_chain_with(chain, canonicalize)
    }

    pub fn from_chain_with(chain: &Chain, canon: CanonicalizeFn) -> Self {
        let mut out = AltChain::zero(chain.degree());
        for (g, k) in chain.iter() {
            let (class, c) = canon(g);
            out.add_class(&class, c * k);
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.free.is_empty() && self.torsion.is_empty()
    }

    pub fn free_part(&self) -> &BTreeMap<Vec<usize>, i64> {
        &self.free
    }

    pub fn torsion_part(&self) -> &BTreeSet<Vec<usize>> {
        &self.torsion
    }

    pub fn add_class(&mut self, class: &AltChainClass, coeff: i64) {
        debug_assert_eq!(class.degree(), self.degree);
        match class.kind {
            ClassKind::Free => {
                if coeff == 0 {
                    return;
                }
                let e = self.free.entry(class.tuple.clone()).or_insert(0);
                *e += coeff;
                if *e == 0 {
                    self.free.remove(&class.tuple);
                }
            }
            ClassKind::Torsion => {
                if coeff.rem_euclid(2) == 1 && !self.torsion.remove(&class.tuple) {
                    self.torsion.insert(class.tuple.clone());
                }
            }
        }
    }

    pub fn add(&self, other: &AltChain) -> AltChain {
        assert_eq!(
            self.degree, other.degree,
            "adding chains of different degree"
        );
        let mut out = self.clone();
        for (t, &c) in &other.free {
            out.add_class(&AltChainClass::from_sorted(t.clone()), c);
        }
        for t in &other.torsion {
            out.add_class(&AltChainClass::from_sorted(t.clone()), 1);
        }
        out
    }

    pub fn scale(&self, k: i64) -> AltChain {
        let mut out = AltChain::zero(self.degree);
        for (t, &c) in &self.free {
            out.add_class(&AltChainClass::from_sorted(t.clone()), c * k);
        }
        for t in &self.torsion {
            out.add_class(&AltChainClass::from_sorted(t.clone()), k);
        }
        out
    }

    pub fn sub(&self, other: &AltChain) -> AltChain {
        self.add(&other.scale(-1))
    }

    /// `(class, coefficient)` pairs, free classes first.
    pub fn terms(&self) -> Vec<(AltChainClass, i64)> {
        let mut out: Vec<(AltChainClass, i64)> = self
            .free
            .iter()
            .map(|(t, &c)| (AltChainClass::from_sorted(t.clone()), c))
            .collect();
        out.extend(
            self.torsion
                .iter()
                .map(|t| (AltChainClass::from_sorted(t.clone()), 1)),
        );
        out
    }
}

/// Boundary on the quotient: faces of each canonical representative, canonicalized.
pub fn boundary(c: &AltChain) -> Result<AltChain> {
    boundary_with(c, canonicalize)
}

/// [`boundary`] with a caller-supplied canonicalization.
///
/// A torsion class must have a boundary without free part; a violation means
/// the canonicalization is inconsistent with the order-2 relations and is
/// reported as [`Error::RelationIncompatible`].
pub fn boundary_with(c: &AltChain, canon: CanonicalizeFn) -> Result<AltChain> {
    if c.degree == 0 {
        return Err(Error::NoFaces);
    }
    let mut out = AltChain::zero(c.degree - 1);
    for (class, coeff) in c.terms() {
        let faces = class_boundary_with(&class, canon);
        if class.is_torsion() && !faces.free.is_empty() {
            return Err(Error::RelationIncompatible(c.degree));
        }
        out = out.add(&faces.scale(coeff));
    }
    Ok(out)
}

/// Boundary of a single canonical class, computed on its representative with
/// integer coefficients before any mod-2 reduction of the input.
pub fn class_boundary_with(class: &AltChainClass, canon: CanonicalizeFn) -> AltChain {
    let rep = class.representative();
    let mut out = AltChain::zero(class.degree() - 1);
    for i in 0..=class.degree() {
        let (face_class, c) = canon(&rep.face(i).expect("degree >= 1"));
        out.add_class(&face_class, if i % 2 == 0 { c } else { -c });
    }
    out
}

/// Checks `[act(s', face(g, i))] = ε(s') [face(g, i)]` in the quotient.
pub fn face_class_compat(g: &OrderedGenerator, s: &Permutation, i: usize) -> Result<bool> {
    face_class_compat_with(g, s, i, canonicalize)
}

pub fn face_class_compat_with(
    g: &OrderedGenerator,
    s: &Permutation,
    i: usize,
    canon: CanonicalizeFn,
) -> Result<bool> {
    let face = g.face(i)?;
    let (moved_class, moved_coeff) = canon(&s.act(&face)?);
    let (class, coeff) = canon(&face);
    let lhs = AltChain::from_class(&moved_class, moved_coeff);
    let rhs = AltChain::from_class(&class, coeff * s.sign() as i64);
    Ok(lhs == rhs)
}

/// Canonical generators and integer matrices of one degree of the quotient complex.
///
/// Coordinates list free generators first, then torsion generators. The
/// boundary matrix maps degree `n` coordinates to degree `n - 1` coordinates;
/// rows belonging to torsion generators are reduced mod 2. `relations` has one
/// column per torsion generator, equal to twice its coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreePresentation {
    pub degree: usize,
    pub free_generators: Vec<Vec<usize>>,
    pub torsion_generators: Vec<Vec<usize>>,
    pub boundary: IntegerMatrix,
    pub relations: IntegerMatrix,
}

impl DegreePresentation {
    pub fn rank(&self) -> usize {
        self.free_generators.len() + self.torsion_generators.len()
    }

    /// Coordinate of a canonical class, if it belongs to this degree.
    pub fn coordinate(&self, class: &AltChainClass) -> Option<usize> {
        match class.kind() {
            ClassKind::Free => self
                .free_generators
                .binary_search_by(|t| t.as_slice().cmp(class.tuple()))
                .ok(),
            ClassKind::Torsion => self
                .torsion_generators
                .binary_search_by(|t| t.as_slice().cmp(class.tuple()))
                .ok()
                .map(|i| i + self.free_generators.len()),
        }
    }

    pub fn class_at(&self, coordinate: usize) -> AltChainClass {
        let f = self.free_generators.len();
        if coordinate < f {
            AltChainClass::from_sorted(self.free_generators[coordinate].clone())
        } else {
            AltChainClass::from_sorted(self.torsion_generators[coordinate - f].clone())
        }
    }

    /// Integer coordinate vector of a chain (torsion entries as 0/1).
    pub fn coordinates(&self, chain: &AltChain) -> Result<Vec<BigInt>> {
        let mut out = vec![BigInt::from(0); self.rank()];
        for (class, c) in chain.terms() {
            let i = self
                .coordinate(&class)
                .ok_or_else(|| Error::NotAGenerator(class.tuple().to_vec()))?;
            out[i] = BigInt::from(c);
        }
        Ok(out)
    }
}

/// The presented chain complex `C_{A0} ← C_{A1} ← … ← C_{AD}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AltPresentation {
    pub format_version: u32,
    pub degree_cap: usize,
    pub degrees: Vec<DegreePresentation>,
}

impl AltPresentation {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("presentation serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let p: AltPresentation = serde_json::from_str(text)?;
        if p.format_version != PRESENTATION_FORMAT_VERSION {
            return Err(Error::Malformed(format!(
                "unsupported presentation format_version {}",
                p.format_version
            )));
        }
        Ok(p)
    }

    pub fn boundaries(&self) -> Vec<IntegerMatrix> {
        self.degrees.iter().map(|d| d.boundary.clone()).collect()
    }

    pub fn relations(&self) -> Vec<IntegerMatrix> {
        self.degrees.iter().map(|d| d.relations.clone()).collect()
    }
}

/// Non-decreasing tuples of length `n + 1` whose support is a simplex, lexicographic.
pub fn canonical_tuples(complex: &SimplicialComplex, n: usize) -> Vec<Vec<usize>> {
    fn extend(
        complex: &SimplicialComplex,
        len: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let start = prefix.last().copied().unwrap_or(0);
        for v in start..complex.vertex_count() {
            prefix.push(v);
            if complex.contains(&support(prefix)) {
                extend(complex, len, prefix, out);
            }
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(complex, n + 1, &mut Vec::with_capacity(n + 1), &mut out);
    out
}

fn canonical_count(complex: &SimplicialComplex, n: usize) -> u128 {
    // a simplex with k vertices carries C(n, k-1) non-decreasing surjective tuples
    let binom = |a: u128, b: u128| -> u128 {
        if b > a {
            return 0;
        }
        (0..b).fold(1u128, |acc, i| acc * (a - i) / (i + 1))
    };
    complex
        .simplices()
        .iter()
        .map(|s| binom(n as u128, s.len() as u128 - 1))
        .sum()
}

/// Builds the presented quotient complex up to degree `limits.degree_cap`.
pub fn alt_chain_complex(complex: &SimplicialComplex, limits: &Limits) -> Result<AltPresentation> {
    alt_chain_complex_with(complex, limits, canonicalize)
}

pub fn alt_chain_complex_with(
    complex: &SimplicialComplex,
    limits: &Limits,
    canon: CanonicalizeFn,
) -> Result<AltPresentation> {
    let cap = limits.degree_cap;
    for n in 0..=cap {
        let required = canonical_count(complex, n);
        if required > limits.generator_budget as u128 {
            return Err(Error::BudgetExceeded {
                degree: n,
                required: required.to_string(),
                budget: limits.generator_budget,
            });
        }
    }
    let mut degrees: Vec<DegreePresentation> = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let (torsion, free): (Vec<Vec<usize>>, Vec<Vec<usize>>) = canonical_tuples(complex, n)
            .into_iter()
            .partition(|t| t.windows(2).any(|w| w[0] == w[1]));
        let f = free.len();
        let t = torsion.len();
        let mut relations = IntegerMatrix::zeros(f + t, t);
        for k in 0..t {
            relations.set(f + k, k, BigInt::from(2));
        }
        let rows = if n == 0 { 0 } else { degrees[n - 1].rank() };
        let mut deg = DegreePresentation {
            degree: n,
            free_generators: free,
            torsion_generators: torsion,
            boundary: IntegerMatrix::zeros(rows, f + t),
            relations,
        };
        if n > 0 {
            let below = &degrees[n - 1];
            let mut matrix = IntegerMatrix::zeros(rows, f + t);
            for col in 0..f + t {
                let class = deg.class_at(col);
                let faces = class_boundary_with(&class, canon);
                if class.is_torsion() && !faces.free_part().is_empty() {
                    return Err(Error::RelationIncompatible(n));
                }
                for (fc, c) in faces.terms() {
                    let row = below
                        .coordinate(&fc)
                        .ok_or_else(|| Error::NotAGenerator(fc.tuple().to_vec()))?;
                    matrix.set(row, col, BigInt::from(c));
                }
            }
            deg.boundary = matrix;
        }
        degrees.push(deg);
    }
    let presentation = AltPresentation {
        format_version: PRESENTATION_FORMAT_VERSION,
        degree_cap: cap,
        degrees,
    };
    check_presentation(&presentation)?;
    Ok(presentation)
}

/// Checks that `∂̃_n ∂̃_{n+1}` vanishes on free rows and is even on torsion rows.
pub fn check_presentation(p: &AltPresentation) -> Result<()> {
    for n in 1..p.degrees.len() {
        if n + 1 >= p.degrees.len() {
            break;
        }
        let prod = p.degrees[n].boundary.mul(&p.degrees[n + 1].boundary)?;
        let free_rows = p.degrees[n - 1].free_generators.len();
        for r in 0..prod.rows() {
            for c in 0..prod.cols() {
                let v = prod.get(r, c);
                let ok = if r < free_rows {
                    v == &BigInt::from(0)
                } else {
                    v % 2 == BigInt::from(0)
                };
                if !ok {
                    return Err(Error::NonzeroComposition(n));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: &[usize]) -> OrderedGenerator {
        OrderedGenerator::new(v.to_vec())
    }

    fn free(v: &[usize], c: i64) -> AltChain {
        AltChain::from_class(&AltChainClass::from_sorted(v.to_vec()), c)
    }

    #[test]
    fn canonicalize_examples() {
        // a=0, b=1, c=2
        assert_eq!(
            canonicalize(&g(&[1, 0, 2])),
            (AltChainClass::from_sorted(vec![0, 1, 2]), -1)
        );
        assert_eq!(
            canonicalize(&g(&[2, 0, 1])),
            (AltChainClass::from_sorted(vec![0, 1, 2]), 1)
        );
        let (class, c) = canonicalize(&g(&[0, 0, 1]));
        assert!(class.is_torsion());
        assert_eq!((class.tuple(), c), (&[0, 0, 1][..], 1));
    }

    #[test]
    fn torsion_has_order_two() {
        let class = AltChainClass::from_sorted(vec![3, 3]);
        let mut c = AltChain::zero(1);
        c.add_class(&class, 1);
        c.add_class(&class, 1);
        assert!(c.is_zero());
        assert!(!free(&[0, 1], 1).scale(2).is_zero());
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(
            boundary(&free(&[0, 1], 1)).unwrap(),
            free(&[1], 1).sub(&free(&[0], 1))
        );
        assert!(boundary(&AltChain::from_class(
            &AltChainClass::from_sorted(vec![0, 0]),
            1
        ))
        .unwrap()
        .is_zero());
        let aab = AltChain::from_class(&AltChainClass::from_sorted(vec![0, 0, 1]), 1);
        assert_eq!(
            boundary(&aab).unwrap(),
            AltChain::from_class(&AltChainClass::from_sorted(vec![0, 0]), 1)
        );
        assert!(boundary(&AltChain::zero(0)).is_err());
    }

    #[test]
    fn boundary_squares_to_zero_on_classes() {
        let k = SimplicialComplex::from_facets(4, vec![vec![0, 1, 2, 3]]).unwrap();
        for n in 2..=4 {
            for t in canonical_tuples(&k, n) {
                let c = AltChain::from_class(&AltChainClass::from_sorted(t), 1);
                assert!(boundary(&boundary(&c).unwrap()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn face_class_compat_examples() {
        let abc = g(&[0, 1, 2]);
        assert!(face_class_compat(&abc, &Permutation::identity(2), 1).unwrap());
        let swap = Permutation::transposition(2, 0, 1);
        assert!(face_class_compat(&abc, &swap, 1).unwrap());
        // the face (a, c) flips sign under the swap
        let (moved, c) = canonicalize(&swap.act(&abc.face(1).unwrap()).unwrap());
        assert_eq!((moved.tuple(), c), (&[0, 2][..], -1));
        assert!(face_class_compat(&g(&[0, 0, 1]), &swap, 2).unwrap());
    }

    #[test]
    fn point_presentation() {
        let k = SimplicialComplex::from_facets(1, vec![vec![0]]).unwrap();
        let p = alt_chain_complex(&k, &Limits::default().with_degree_cap(4)).unwrap();
        assert_eq!(p.degrees[0].free_generators, vec![vec![0]]);
        for n in 1..=4 {
            assert!(p.degrees[n].free_generators.is_empty());
            assert_eq!(p.degrees[n].torsion_generators, vec![vec![0; n + 1]]);
        }
    }

    #[test]
    fn tetrahedron_presentation() {
        let k = SimplicialComplex::from_facets(
            4,
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        )
        .unwrap();
        let p = alt_chain_complex(&k, &Limits::default().with_degree_cap(3)).unwrap();
        assert_eq!(p.degrees[0].free_generators.len(), 4);
        assert!(p.degrees[0].torsion_generators.is_empty());
        assert_eq!(p.degrees[2].free_generators.len(), 4);
        // (a,a,b), (a,b,b) for each of 6 edges, plus (a,a,a) for 4 vertices
        assert_eq!(p.degrees[2].torsion_generators.len(), 16);
        let text = p.to_json();
        assert_eq!(AltPresentation::from_json(&text).unwrap(), p);
    }
}
