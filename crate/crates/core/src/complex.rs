//! Finite simplicial complexes and the ordered-tuple generators built on them.
//!
//! A degree-`n` generator is a tuple of `n + 1` vertex indices, repeats allowed,
//! whose set of distinct entries is a simplex. These tuples are closed under
//! deleting an entry (face maps) and under reordering (the symmetric group
//! action), which is all the structure the chain and cochain layers need.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default highest degree for which generators are enumerated.
pub const DEFAULT_DEGREE_CAP: usize = 4;
/// Default maximum number of generators materialized in a single degree.
pub const DEFAULT_GENERATOR_BUDGET: usize = 1_000_000;
/// Environment variable overriding [`DEFAULT_GENERATOR_BUDGET`].
pub const BUDGET_ENV: &str = "ALTCOH_GENERATOR_BUDGET";

/// Size guards shared by enumeration and the permutation sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    pub degree_cap: usize,
    pub generator_budget: usize,
    pub permutation_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            degree_cap: DEFAULT_DEGREE_CAP,
            generator_budget: DEFAULT_GENERATOR_BUDGET,
            permutation_cap: crate::permutation::DEFAULT_PERMUTATION_CAP,
        }
    }
}

impl Limits {
    pub fn with_degree_cap(mut self, cap: usize) -> Self {
        self.degree_cap = cap;
        self
    }

    /// Defaults, with the generator budget taken from `ALTCOH_GENERATOR_BUDGET` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(BUDGET_ENV) {
            limits.generator_budget = raw
                .trim()
                .parse()
                .map_err(|_| Error::Malformed(format!("{BUDGET_ENV}={raw} is not a count")))?;
        }
        Ok(limits)
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
enum VertexSpec {
    Count(usize),
    Names(Vec<String>),
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
enum VertexRef {
    Index(usize),
    Name(String),
}

/// On-disk description of a complex. Unknown fields are rejected.
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct ComplexDescription {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    format_version: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source: Option<String>,
    vertices: VertexSpec,
    facets: Vec<Vec<VertexRef>>,
}

/// A finite abstract simplicial complex on vertices `0..vertex_count`.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    name: Option<String>,
    vertex_names: Option<Vec<String>>,
    vertex_count: usize,
    facets: Vec<Vec<usize>>,
    // sorted by (dimension, lexicographic)
    simplices: Vec<Vec<usize>>,
    lookup: HashSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds the downward closure of `facets`.
    pub fn from_facets(vertex_count: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(facets.len());
        for (k, facet) in facets.into_iter().enumerate() {
            if facet.is_empty() {
                return Err(Error::EmptyFacet(k));
            }
            if let Some(&v) = facet.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    count: vertex_count,
                });
            }
            let mut facet = facet;
            facet.sort_unstable();
            facet.dedup();
            normalized.push(facet);
        }

        let mut lookup = HashSet::new();
        for facet in &normalized {
            let k = facet.len();
            // every nonempty subset, via bitmasks; facets in this crate are small
            if k > 24 {
                return Err(Error::Malformed(format!("facet of size {k} is too large")));
            }
            for mask in 1u32..(1u32 << k) {
                let subset: Vec<usize> = (0..k)
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| facet[b])
                    .collect();
                lookup.insert(subset);
            }
        }
        let mut simplices: Vec<Vec<usize>> = lookup.iter().cloned().collect();
        simplices.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

        // drop facets that are faces of other facets
        let mut maximal: Vec<Vec<usize>> = normalized
            .iter()
            .filter(|f| {
                !normalized
                    .iter()
                    .any(|g| g.len() > f.len() && f.iter().all(|v| g.binary_search(v).is_ok()))
            })
            .cloned()
            .collect();
        maximal.sort();
        maximal.dedup();

        Ok(SimplicialComplex {
            name: None,
            vertex_names: None,
            vertex_count,
            facets: maximal,
            simplices,
            lookup,
        })
    }

    /// Parses the JSON description format:
    /// `{"vertices": 4 | ["a", "b", ...], "facets": [[0, 1, 2], ...]}`
    /// with optional `format_version`, `name` and `source` fields.
    pub fn load_complex(description: &str) -> Result<Self> {
        let desc: ComplexDescription = serde_json::from_str(description)?;
        if let Some(v) = desc.format_version {
            if v != 1 {
                return Err(Error::Malformed(format!("unsupported format_version {v}")));
            }
        }
        let (count, names) = match desc.vertices {
            VertexSpec::Count(n) => (n, None),
            VertexSpec::Names(names) => {
                let mut seen = HashSet::new();
                for name in &names {
                    if !seen.insert(name.as_str()) {
                        return Err(Error::Malformed(format!("duplicate vertex name `{name}`")));
                    }
                }
                (names.len(), Some(names))
            }
        };
        let index_of: HashMap<&str, usize> = names
            .iter()
            .flatten()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();

        let mut facets = Vec::with_capacity(desc.facets.len());
        for facet in &desc.facets {
            let mut out = Vec::with_capacity(facet.len());
            for v in facet {
                out.push(match v {
                    VertexRef::Index(i) => *i,
                    VertexRef::Name(n) => *index_of
                        .get(n.as_str())
                        .ok_or_else(|| Error::UnknownVertex(n.clone()))?,
                });
            }
            facets.push(out);
        }
        let mut complex = SimplicialComplex::from_facets(count, facets)?;
        complex.name = desc.name;
        complex.vertex_names = names;
        Ok(complex)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn vertex_names(&self) -> Option<&[String]> {
        self.vertex_names.as_deref()
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// All simplices as sorted vertex lists, ordered by dimension then lexicographically.
    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    /// Simplices of dimension `dim` (i.e. with `dim + 1` vertices), lexicographic.
    pub fn simplices_of_dim(&self, dim: usize) -> impl Iterator<Item = &Vec<usize>> + '_ {
        self.simplices.iter().filter(move |s| s.len() == dim + 1)
    }

    pub fn dimension(&self) -> usize {
        self.simplices.last().map_or(0, |s| s.len() - 1)
    }

    /// Whether the sorted, duplicate-free vertex list is a simplex.
    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.lookup.contains(simplex)
    }

    /// Whether the distinct entries of `tuple` span a simplex.
    pub fn spans_simplex(&self, tuple: &[usize]) -> bool {
        !tuple.is_empty() && self.contains(&support(tuple))
    }

    /// Number of connected components of the 1-skeleton.
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in self.simplices_of_dim(1) {
            let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
            parent[a] = b;
        }
        let used: HashSet<usize> = self.simplices_of_dim(0).map(|v| v[0]).collect();
        let roots: HashSet<usize> = used.iter().map(|&v| find(&mut parent, v)).collect();
        roots.len()
    }

    /// Number of degree-`n` ordered generators: for each simplex with `k` vertices,
    /// the surjections from `n + 1` positions onto it.
    pub fn generator_count(&self, n: usize) -> BigInt {
        let mut by_size: HashMap<usize, usize> = HashMap::new();
        for s in &self.simplices {
            *by_size.entry(s.len()).or_default() += 1;
        }
        by_size
            .into_iter()
            .map(|(k, count)| surjections(n + 1, k) * count)
            .sum()
    }
}

/// Sorted distinct entries of a tuple.
pub fn support(tuple: &[usize]) -> Vec<usize> {
    let mut s = tuple.to_vec();
    s.sort_unstable();
    s.dedup();
    s
}

fn surjections(m: usize, k: usize) -> BigInt {
    if k > m {
        return BigInt::zero();
    }
    // inclusion-exclusion: sum_j (-1)^j C(k, j) (k - j)^m
    let mut total = BigInt::zero();
    let mut binom = BigInt::one();
    for j in 0..=k {
        let term = &binom * num_traits::pow(BigInt::from(k - j), m);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        binom = binom * (k - j) / (j + 1);
    }
    total
}

/// A vertex tuple standing in for a singular simplex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrderedGenerator(Vec<usize>);

impl OrderedGenerator {
    /// Panics on an empty tuple; degree is `len - 1`.
    pub fn new(vertices: Vec<usize>) -> Self {
        assert!(!vertices.is_empty(), "generators have at least one vertex");
        OrderedGenerator(vertices)
    }

    /// Validates the tuple against `complex`.
    pub fn checked(vertices: Vec<usize>, complex: &SimplicialComplex) -> Result<Self> {
        if vertices.is_empty() || !complex.spans_simplex(&vertices) {
            return Err(Error::NotAGenerator(vertices));
        }
        Ok(OrderedGenerator(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn support(&self) -> Vec<usize> {
        support(&self.0)
    }

    pub fn has_repeat(&self) -> bool {
        self.support().len() < self.0.len()
    }

    /// Deletes entry `i`.
    pub fn face(&self, i: usize) -> Result<OrderedGenerator> {
        if self.degree() == 0 {
            return Err(Error::NoFaces);
        }
        if i > self.degree() {
            return Err(Error::FaceIndexOutOfRange {
                index: i,
                degree: self.degree(),
            });
        }
        let mut v = self.0.clone();
        v.remove(i);
        Ok(OrderedGenerator(v))
    }

    /// Entries `0..=p`.
    pub fn front(&self, p: usize) -> OrderedGenerator {
        OrderedGenerator(self.0[..=p].to_vec())
    }

    /// Entries `p..`.
    pub fn back(&self, p: usize) -> OrderedGenerator {
        OrderedGenerator(self.0[p..].to_vec())
    }
}

impl fmt::Debug for OrderedGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<usize>> for OrderedGenerator {
    fn from(v: Vec<usize>) -> Self {
        OrderedGenerator::new(v)
    }
}

/// Per-degree dense indexing of all ordered generators up to a degree cap.
#[derive(Clone, Debug)]
pub struct GeneratorIndex {
    degree_cap: usize,
    generators: Vec<Vec<OrderedGenerator>>,
    positions: Vec<HashMap<OrderedGenerator, usize>>,
}

impl GeneratorIndex {
    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    /// Generators of degree `n` in lexicographic order.
    pub fn generators(&self, n: usize) -> &[OrderedGenerator] {
        self.generators.get(n).map_or(&[], |g| g.as_slice())
    }

    pub fn count(&self, n: usize) -> usize {
        self.generators(n).len()
    }

    pub fn position(&self, g: &OrderedGenerator) -> Option<usize> {
        self.positions.get(g.degree())?.get(g).copied()
    }

    pub fn get(&self, n: usize, i: usize) -> Option<&OrderedGenerator> {
        self.generators.get(n)?.get(i)
    }
}

/// Enumerates every degree-`n` generator for `n <= degree_cap`, lexicographically.
///
/// Fails before materializing anything if some degree would exceed the generator budget.
pub fn enumerate_generators(
    complex: &SimplicialComplex,
    degree_cap: usize,
    budget: usize,
) -> Result<GeneratorIndex> {
    for n in 0..=degree_cap {
        let required = complex.generator_count(n);
        if required > BigInt::from(budget) {
            return Err(Error::BudgetExceeded {
                degree: n,
                required: required.to_string(),
                budget,
            });
        }
    }
    let mut generators = Vec::with_capacity(degree_cap + 1);
    let mut positions = Vec::with_capacity(degree_cap + 1);
    for n in 0..=degree_cap {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(n + 1);
        extend_tuples(complex, n + 1, &mut prefix, &mut Vec::new(), &mut out);
        let lookup = out
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        generators.push(out);
        positions.push(lookup);
    }
    Ok(GeneratorIndex {
        degree_cap,
        generators,
        positions,
    })
}

fn extend_tuples(
    complex: &SimplicialComplex,
    len: usize,
    prefix: &mut Vec<usize>,
    support: &mut Vec<usize>,
    out: &mut Vec<OrderedGenerator>,
) {
    if prefix.len() == len {
        out.push(OrderedGenerator(prefix.clone()));
        return;
    }
    for v in 0..complex.vertex_count() {
        let pos = support.binary_search(&v);
        let inserted = if let Err(at) = pos {
            support.insert(at, v);
            if !complex.contains(support) {
                support.remove(at);
                continue;
            }
            Some(at)
        } else {
            None
        };
        prefix.push(v);
        extend_tuples(complex, len, prefix, support, out);
        prefix.pop();
        if let Some(at) = inserted {
            support.remove(at);
        }
    }
}
