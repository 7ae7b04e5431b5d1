//! Exact rational cochains: coboundary, cup product, the alternative-maker
//! projector `A` and the alternative cup product `α ⌣_A β = A(α ⌣ β)`.
//!
//! Cochains are finitely supported maps from ordered generators to `ℚ`; a
//! generator missing from the map has value zero. Every operation here keeps
//! the canonical sparse form (no stored zeros), so `==` is exact equality of
//! cochains.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{Limits, OrderedGenerator, SimplicialComplex};
use crate::error::{Error, Result};
use crate::permutation::enumerate_group;

pub type Rational = BigRational;

/// Version tag written into serialized cochains.
pub const COCHAIN_FORMAT_VERSION: u32 = 1;

#[derive(Clone, PartialEq, Eq)]
pub struct RationalCochain {
    degree: usize,
    values: BTreeMap<OrderedGenerator, Rational>,
}

impl fmt::Debug for RationalCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C^{}{{", self.degree)?;
        for (i, (g, v)) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g:?}: {v}")?;
        }
        write!(f, "}}")
    }
}

impl RationalCochain {
    pub fn zero(degree: usize) -> Self {
        RationalCochain {
            degree,
            values: BTreeMap::new(),
        }
    }

    /// Sums the given values; entries whose total is zero are dropped.
    pub fn from_values<I>(degree: usize, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = (OrderedGenerator, Rational)>,
    {
        let mut out = RationalCochain::zero(degree);
        for (g, v) in values {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
            out.add_at(g, v);
        }
        Ok(out)
    }

    /// The cochain that is 1 on `g` and 0 elsewhere.
    pub fn indicator(g: OrderedGenerator) -> Self {
        let mut out = RationalCochain::zero(g.degree());
        out.values.insert(g, Rational::one());
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, g: &OrderedGenerator) -> Rational {
        self.values.get(g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OrderedGenerator, &Rational)> {
        self.values.iter()
    }

    /// Adds `v` to the value at `g`, keeping the sparse form canonical.
    pub fn add_at(&mut self, g: OrderedGenerator, v: Rational) {
        debug_assert_eq!(g.degree(), self.degree);
        if v.is_zero() {
            return;
        }
        match self.values.entry(g) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_same_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_degree(other)?;
        let mut out = self.clone();
        for (g, v) in &other.values {
            out.add_at(g.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RationalCochain::zero(self.degree);
        }
        RationalCochain {
            degree: self.degree,
            values: self
                .values
                .iter()
                .map(|(g, v)| (g.clone(), v * c))
                .collect(),
        }
    }

    /// Largest absolute numerator among the stored values.
    pub fn max_abs_numerator(&self) -> BigInt {
        self.values
            .values()
            .map(|v| v.numer().abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Checks that every supported tuple is a generator of `complex`.
    pub fn validate(&self, complex: &SimplicialComplex) -> Result<()> {
        for g in self.values.keys() {
            if !complex.spans_simplex(g.vertices()) {
                return Err(Error::NotAGenerator(g.vertices().to_vec()));
            }
        }
        Ok(())
    }

    pub fn to_file(&self) -> CochainFile {
        CochainFile {
            format_version: COCHAIN_FORMAT_VERSION,
            degree: self.degree,
            values: self
                .values
                .iter()
                .map(|(g, v)| (g.vertices().to_vec(), format_rational(v)))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("cochain serializes")
    }

    /// Parses a serialized cochain and checks it against `complex`.
    pub fn from_json(text: &str, complex: &SimplicialComplex) -> Result<Self> {
        let file: CochainFile = serde_json::from_str(text)?;
        file.into_cochain(complex)
    }
}

/// Serialized form: degree-tagged list of `(vertex tuple, "num/den")` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainFile {
    pub format_version: u32,
    pub degree: usize,
    pub values: Vec<(Vec<usize>, String)>,
}

impl CochainFile {
    pub fn into_cochain(self, complex: &SimplicialComplex) -> Result<RationalCochain> {
        if self.format_version != COCHAIN_FORMAT_VERSION {
            return Err(Error::Malformed(format!(
                "unsupported cochain format_version {}",
                self.format_version
            )));
        }
        let mut entries = Vec::with_capacity(self.values.len());
        for (tuple, value) in self.values {
            if tuple.len() != self.degree + 1 {
                return Err(Error::DegreeMismatch {
                    expected: self.degree,
                    found: tuple.len().saturating_sub(1),
                });
            }
            let g = OrderedGenerator::checked(tuple, complex)?;
            entries.push((g, parse_rational(&value)?));
        }
        RationalCochain::from_values(self.degree, entries)
    }
}

pub fn format_rational(v: &Rational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

/// Accepts `"n/d"` or a bare integer `"n"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::MalformedRational(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn check_degree(degree: usize, limits: &Limits) -> Result<()> {
    if degree > limits.degree_cap {
        return Err(Error::DegreeExceedsCap {
            degree,
            cap: limits.degree_cap,
        });
    }
    Ok(())
}

/// `(δα)(g) = Σ_i (-1)^i α(face(g, i))`, a cochain of degree `deg α + 1`.
pub fn coboundary(
    complex: &SimplicialComplex,
    alpha: &RationalCochain,
    limits: &Limits,
) -> Result<RationalCochain> {
    let n = alpha.degree + 1;
    check_degree(n, limits)?;
    let mut out = RationalCochain::zero(n);
    // g = face(h, i) exactly when h is g with some vertex inserted at position i
    for (g, value) in &alpha.values {
        let base = g.support();
        for v in 0..complex.vertex_count() {
            let spans = match base.binary_search(&v) {
                Ok(_) => true,
                Err(at) => {
                    let mut s = base.clone();
                    s.insert(at, v);
                    complex.contains(&s)
                }
            };
            if !spans {
                continue;
            }
            for i in 0..=g.vertices().len() {
                let mut h = g.vertices().to_vec();
                h.insert(i, v);
                let term = if i % 2 == 0 {
                    value.clone()
                } else {
                    -value.clone()
                };
                out.add_at(OrderedGenerator::new(h), term);
            }
        }
    }
    Ok(out)
}

/// Whether `α(act(s, g)) = ε(s) α(g)` for every generator `g` and every `s`.
pub fn is_alternative(alpha: &RationalCochain, limits: &Limits) -> Result<bool> {
    let group = enumerate_group(alpha.degree + 1, limits.permutation_cap)?;
    // checking the support suffices: a violation at g off the support shows up
    // as a violation at act(s, g) with s^{-1}
    for (g, value) in &alpha.values {
        for s in group {
            let moved = alpha.get(&s.act(g)?);
            let expected = if s.sign() > 0 {
                value.clone()
            } else {
                -value.clone()
            };
            if moved != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `A(α)(g) = 1/(n+1)! Σ_s ε(s) α(act(s, g))`.
pub fn alternative_maker(alpha: &RationalCochain, limits: &Limits) -> Result<RationalCochain> {
    let n = alpha.degree;
    let group = enumerate_group(n + 1, limits.permutation_cap)?;
    let weight = Rational::new(BigInt::one(), factorial(n + 1));
    // each supported g contributes ε(t) α(g) at act(t, g) for every t
    // (act(t, g) = h iff act(t⁻¹, h) = g, and ε(t) = ε(t⁻¹))
    let mut acc: HashMap<OrderedGenerator, Rational> = HashMap::new();
    for (g, value) in &alpha.values {
        let scaled = value * &weight;
        for t in group {
            let h = t.act(g)?;
            let e = acc.entry(h).or_insert_with(Rational::zero);
            if t.sign() > 0 {
                *e += &scaled;
            } else {
                *e -= &scaled;
            }
        }
    }
    RationalCochain::from_values(n, acc)
}

/// Decomposes `α = A(α) + (α - A(α))` with `A(α - A(α)) = 0`.
pub fn split(
    alpha: &RationalCochain,
    limits: &Limits,
) -> Result<(RationalCochain, RationalCochain)> {
    let alt = alternative_maker(alpha, limits)?;
    let ker = alpha.sub(&alt)?;
    Ok((alt, ker))
}

/// Front-face/back-face product: `(α ⌣ β)(g) = α(g[0..=p]) β(g[p..=p+q])`.
pub fn cup(
    complex: &SimplicialComplex,
    alpha: &RationalCochain,
    beta: &RationalCochain,
    limits: &Limits,
) -> Result<RationalCochain> {
    let (p, q) = (alpha.degree, beta.degree);
    check_degree(p + q, limits)?;
    let mut by_first: HashMap<usize, Vec<(&OrderedGenerator, &Rational)>> = HashMap::new();
    for (b, v) in &beta.values {
        by_first.entry(b.vertices()[0]).or_default().push((b, v));
    }
    let mut out = RationalCochain::zero(p + q);
    for (a, va) in &alpha.values {
        let last = a.vertices()[p];
        let Some(matches) = by_first.get(&last) else {
            continue;
        };
        for (b, vb) in matches {
            let mut g = a.vertices().to_vec();
            g.extend_from_slice(&b.vertices()[1..]);
            if complex.spans_simplex(&g) {
                out.add_at(OrderedGenerator::new(g), va * *vb);
            }
        }
    }
    Ok(out)
}

/// `α ⌣_A β = A(α ⌣ β)`. Defined for any inputs; its algebraic laws are
/// only claimed for alternative ones.
pub fn alt_cup(
    complex: &SimplicialComplex,
    alpha: &RationalCochain,
    beta: &RationalCochain,
    limits: &Limits,
) -> Result<RationalCochain> {
    enumerate_group(alpha.degree + beta.degree + 1, limits.permutation_cap)?;
    alternative_maker(&cup(complex, alpha, beta, limits)?, limits)
}

/// `α ⌣_A δα`, of degree `2p + 1`.
pub fn nonlinear_residual(
    complex: &SimplicialComplex,
    alpha: &RationalCochain,
    limits: &Limits,
) -> Result<RationalCochain> {
    check_degree(2 * alpha.degree + 1, limits)?;
    let d = coboundary(complex, alpha, limits)?;
    alt_cup(complex, alpha, &d, limits)
}

/// Coordinates for the alternative cochains of one degree.
///
/// An alternative cochain vanishes on tuples with a repeated vertex and is
/// determined by its values on strictly increasing tuples, so those tuples
/// (the `n`-simplices) index a basis.
#[derive(Clone, Debug)]
pub struct AltBasis {
    degree: usize,
    simplices: Vec<Vec<usize>>,
    positions: HashMap<Vec<usize>, usize>,
    total_dimension: usize,
}

impl AltBasis {
    pub fn new(complex: &SimplicialComplex, degree: usize) -> Self {
        let simplices: Vec<Vec<usize>> = complex.simplices_of_dim(degree).cloned().collect();
        let positions = simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let total = complex.generator_count(degree);
        AltBasis {
            degree,
            simplices,
            positions,
            total_dimension: total.try_into().unwrap_or(usize::MAX),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `dim C_A^n`.
    pub fn dimension(&self) -> usize {
        self.simplices.len()
    }

    /// `dim C^n - dim C_A^n`, the dimension of `Ker A`.
    pub fn complement_dimension(&self) -> usize {
        self.total_dimension - self.simplices.len()
    }

    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    pub fn position(&self, simplex: &[usize]) -> Option<usize> {
        self.positions.get(simplex).copied()
    }

    /// The alternative cochain with value `ε(s)` on every reordering of `simplex`.
    pub fn basis_cochain(&self, index: usize) -> RationalCochain {
        let simplex = &self.simplices[index];
        let group = enumerate_group(simplex.len(), usize::MAX).expect("simplex within cap");
        let base = OrderedGenerator::new(simplex.clone());
        let values = group.iter().map(|s| {
            (
                s.act(&base).expect("sizes agree"),
                Rational::from_integer(BigInt::from(s.sign())),
            )
        });
        RationalCochain::from_values(self.degree, values).expect("degrees agree")
    }

    /// Values on the sorted simplices.
    pub fn coordinates(&self, alpha: &RationalCochain) -> Vec<Rational> {
        self.simplices
            .iter()
            .map(|s| alpha.get(&OrderedGenerator::new(s.clone())))
            .collect()
    }

    pub fn from_coordinates(&self, coords: &[Rational]) -> RationalCochain {
        let mut out = RationalCochain::zero(self.degree);
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                out = out
                    .add(&self.basis_cochain(i).scale(c))
                    .expect("same degree");
            }
        }
        out
    }
}

/// A random alternative cochain with integer coordinates in `-range..=range`.
pub fn random_alternative<R: Rng>(
    complex: &SimplicialComplex,
    degree: usize,
    range: i64,
    rng: &mut R,
) -> RationalCochain {
    let basis = AltBasis::new(complex, degree);
    let coords: Vec<Rational> = (0..basis.dimension())
        .map(|_| Rational::from_integer(BigInt::from(rng.gen_range(-range..=range))))
        .collect();
    basis.from_coordinates(&coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::enumerate_generators;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn g(v: &[usize]) -> OrderedGenerator {
        OrderedGenerator::new(v.to_vec())
    }

    fn tetra() -> SimplicialComplex {
        SimplicialComplex::from_facets(
            4,
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        )
        .unwrap()
    }

    fn limits() -> Limits {
        Limits::default()
    }

    /// Oracle: evaluate `δα` generator by generator through the face sum.
    fn coboundary_by_faces(k: &SimplicialComplex, alpha: &RationalCochain) -> RationalCochain {
        let idx = enumerate_generators(k, alpha.degree() + 1, 100_000).unwrap();
        let mut out = RationalCochain::zero(alpha.degree() + 1);
        for h in idx.generators(alpha.degree() + 1) {
            let mut total = Rational::zero();
            for i in 0..=alpha.degree() + 1 {
                let v = alpha.get(&h.face(i).unwrap());
                if i % 2 == 0 {
                    total += v;
                } else {
                    total -= v;
                }
            }
            out.add_at(h.clone(), total);
        }
        out
    }

    #[test]
    fn coboundary_of_vertex_indicator() {
        let k = tetra();
        let alpha = RationalCochain::indicator(g(&[0]));
        let d = coboundary(&k, &alpha, &limits()).unwrap();
        assert_eq!(d.get(&g(&[0, 1])), q(-1, 1));
        assert_eq!(d.get(&g(&[1, 0])), q(1, 1));
        assert_eq!(d.get(&g(&[0, 0])), q(0, 1));
        assert_eq!(d, coboundary_by_faces(&k, &alpha));
        assert!(coboundary(&k, &RationalCochain::zero(1), &limits())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn coboundary_matches_face_oracle_on_basis() {
        let k = tetra();
        let idx = enumerate_generators(&k, 3, 10_000).unwrap();
        for n in 0..3 {
            for gen in idx.generators(n) {
                let alpha = RationalCochain::indicator(gen.clone());
                let d = coboundary(&k, &alpha, &limits()).unwrap();
                assert_eq!(d, coboundary_by_faces(&k, &alpha));
                assert!(coboundary(&k, &d, &limits()).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn coboundary_respects_cap() {
        let k = tetra();
        let alpha = RationalCochain::indicator(g(&[0, 1]));
        assert!(matches!(
            coboundary(&k, &alpha, &limits().with_degree_cap(1)),
            Err(Error::DegreeExceedsCap { degree: 2, cap: 1 })
        ));
    }

    #[test]
    fn alternative_examples() {
        let l = limits();
        assert!(is_alternative(&RationalCochain::indicator(g(&[2])), &l).unwrap());
        assert!(!is_alternative(&RationalCochain::indicator(g(&[0, 1])), &l).unwrap());
        let anti =
            RationalCochain::from_values(1, vec![(g(&[0, 1]), q(1, 1)), (g(&[1, 0]), q(-1, 1))])
                .unwrap();
        assert!(is_alternative(&anti, &l).unwrap());
        assert_eq!(alternative_maker(&anti, &l).unwrap(), anti);
    }

    #[test]
    fn alternative_maker_examples() {
        let l = limits();
        let a = alternative_maker(&RationalCochain::indicator(g(&[2, 3])), &l).unwrap();
        assert_eq!(a.get(&g(&[2, 3])), q(1, 2));
        assert_eq!(a.get(&g(&[3, 2])), q(-1, 2));
        assert_eq!(a.support_len(), 2);
        assert!(
            alternative_maker(&RationalCochain::indicator(g(&[2, 2])), &l)
                .unwrap()
                .is_zero()
        );
    }

    /// Oracle: the permutation sum evaluated separately at every generator.
    fn alternative_maker_pointwise(
        k: &SimplicialComplex,
        alpha: &RationalCochain,
    ) -> RationalCochain {
        let n = alpha.degree();
        let idx = enumerate_generators(k, n, 100_000).unwrap();
        let group = enumerate_group(n + 1, 8).unwrap();
        let mut out = RationalCochain::zero(n);
        for h in idx.generators(n) {
            let mut total = Rational::zero();
            for s in group {
                let v = alpha.get(&s.act(h).unwrap());
                if s.sign() > 0 {
                    total += v;
                } else {
                    total -= v;
                }
            }
            out.add_at(h.clone(), total / Rational::from_integer(factorial(n + 1)));
        }
        out
    }

    #[test]
    fn projector_on_basis() {
        let k = tetra();
        let l = limits();
        let idx = enumerate_generators(&k, 2, 10_000).unwrap();
        for n in 0..=2 {
            for gen in idx.generators(n) {
                let alpha = RationalCochain::indicator(gen.clone());
                let a = alternative_maker(&alpha, &l).unwrap();
                assert_eq!(a, alternative_maker_pointwise(&k, &alpha));
                assert!(is_alternative(&a, &l).unwrap());
                assert_eq!(alternative_maker(&a, &l).unwrap(), a);
                let (alt, ker) = split(&alpha, &l).unwrap();
                assert_eq!(alt.add(&ker).unwrap(), alpha);
                assert!(alternative_maker(&ker, &l).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn split_examples() {
        let l = limits();
        let aa = RationalCochain::indicator(g(&[1, 1]));
        let (alt, ker) = split(&aa, &l).unwrap();
        assert!(alt.is_zero());
        assert_eq!(ker, aa);
        let basis = AltBasis::new(&tetra(), 1);
        let e = basis.basis_cochain(0);
        let (alt, ker) = split(&e, &l).unwrap();
        assert_eq!(alt, e);
        assert!(ker.is_zero());
        assert_eq!(basis.dimension(), 6);
        assert_eq!(basis.complement_dimension(), 10);
    }

    #[test]
    fn cup_examples() {
        let k = SimplicialComplex::from_facets(3, vec![vec![0, 1, 2]]).unwrap();
        let l = limits();
        let a = RationalCochain::indicator(g(&[0, 1]));
        let b = RationalCochain::indicator(g(&[1, 2]));
        let c = cup(&k, &a, &b, &l).unwrap();
        assert_eq!(c, RationalCochain::indicator(g(&[0, 1, 2])));
        assert!(cup(&k, &a, &RationalCochain::zero(1), &l)
            .unwrap()
            .is_zero());

        let f =
            RationalCochain::from_values(0, vec![(g(&[0]), q(2, 1)), (g(&[1]), q(3, 1))]).unwrap();
        let h =
            RationalCochain::from_values(0, vec![(g(&[1]), q(5, 1)), (g(&[2]), q(7, 1))]).unwrap();
        let ph = cup(&k, &f, &h, &l).unwrap();
        assert_eq!(ph, RationalCochain::indicator(g(&[1])).scale(&q(15, 1)));
        assert_eq!(alt_cup(&k, &f, &h, &l).unwrap(), ph);
    }

    #[test]
    fn residual_of_closed_cochain_vanishes() {
        let k = tetra();
        let l = limits();
        let basis = AltBasis::new(&k, 0);
        let constant = basis.from_coordinates(&vec![q(1, 1); 4]);
        assert!(coboundary(&k, &constant, &l).unwrap().is_zero());
        assert!(nonlinear_residual(&k, &constant, &l).unwrap().is_zero());
        assert!(nonlinear_residual(&k, &RationalCochain::zero(1), &l)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn serialization_round_trip() {
        let k = tetra();
        let alpha =
            RationalCochain::from_values(1, vec![(g(&[0, 1]), q(1, 2)), (g(&[3, 3]), q(-4, 1))])
                .unwrap();
        let text = alpha.to_json();
        assert!(text.contains("\"1/2\""));
        assert_eq!(RationalCochain::from_json(&text, &k).unwrap(), alpha);
    }

    #[test]
    fn serialization_errors() {
        let k = tetra();
        let bad_tuple = r#"{"format_version": 1, "degree": 1, "values": [[[0, 1, 2], "1"]]}"#;
        assert!(matches!(
            RationalCochain::from_json(bad_tuple, &k),
            Err(Error::DegreeMismatch { .. })
        ));
        let bad_value = r#"{"format_version": 1, "degree": 0, "values": [[[0], "1/0"]]}"#;
        assert!(matches!(
            RationalCochain::from_json(bad_value, &k),
            Err(Error::MalformedRational(_))
        ));
        let k2 = SimplicialComplex::from_facets(3, vec![vec![0, 1], vec![2]]).unwrap();
        let not_simplex = r#"{"format_version": 1, "degree": 1, "values": [[[0, 2], "1"]]}"#;
        assert!(matches!(
            RationalCochain::from_json(not_simplex, &k2),
            Err(Error::NotAGenerator(_))
        ));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3").unwrap(), q(3, 1));
        assert_eq!(parse_rational("-6/4").unwrap(), q(-3, 2));
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&q(-3, 2)), "-3/2");
    }
}
