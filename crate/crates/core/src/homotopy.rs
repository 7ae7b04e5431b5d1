//! Simplicial maps, contiguous pairs and the prism operator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::alt_chain::{
    canonicalize, AltChain, AltChainClass, AltPresentation, CanonicalizeFn, DegreePresentation,
};
use crate::chain::Chain;
use crate::cochain::{AltBasis, RationalCochain};
use crate::complex::{enumerate_generators, support, Limits, OrderedGenerator, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::alternative_coboundaries;
use crate::linalg::{kernel_basis, rational_rank, span_contains, IntegerMatrix};

/// Version tag for serialized maps.
pub const MAP_FORMAT_VERSION: u32 = 1;

/// A vertex assignment sending every simplex onto a simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    assignment: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    format_version: u32,
    assignment: Vec<usize>,
}

impl SimplicialMap {
    pub fn new(
        domain: &SimplicialComplex,
        codomain: &SimplicialComplex,
        assignment: Vec<usize>,
    ) -> Result<Self> {
        if assignment.len() != domain.vertex_count() {
            return Err(Error::SizeMismatch {
                expected: domain.vertex_count(),
                found: assignment.len(),
            });
        }
        if let Some(&v) = assignment.iter().find(|&&v| v >= codomain.vertex_count()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                count: codomain.vertex_count(),
            });
        }
        let map = SimplicialMap { assignment };
        for facet in domain.facets() {
            if !codomain.contains(&support(&map.image(facet))) {
                return Err(Error::NotSimplicial(facet.clone()));
            }
        }
        Ok(map)
    }

    pub fn identity(complex: &SimplicialComplex) -> Self {
        SimplicialMap {
            assignment: (0..complex.vertex_count()).collect(),
        }
    }

    pub fn constant(
        domain: &SimplicialComplex,
        codomain: &SimplicialComplex,
        vertex: usize,
    ) -> Result<Self> {
        Self::new(domain, codomain, vec![vertex; domain.vertex_count()])
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    fn image(&self, vertices: &[usize]) -> Vec<usize> {
        vertices.iter().map(|&v| self.assignment[v]).collect()
    }

    /// Entry-wise relabeling of a tuple.
    pub fn apply(&self, g: &OrderedGenerator) -> OrderedGenerator {
        OrderedGenerator::new(self.image(g.vertices()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&MapFile {
            format_version: MAP_FORMAT_VERSION,
            assignment: self.assignment.clone(),
        })
        .expect("map serializes")
    }

    pub fn from_json(
        text: &str,
        domain: &SimplicialComplex,
        codomain: &SimplicialComplex,
    ) -> Result<Self> {
        let file: MapFile = serde_json::from_str(text)?;
        if file.format_version != MAP_FORMAT_VERSION {
            return Err(Error::Malformed(format!(
                "unsupported map format_version {}",
                file.format_version
            )));
        }
        Self::new(domain, codomain, file.assignment)
    }
}

/// `f_#` on ordered chains.
pub fn push_forward(f: &SimplicialMap, c: &Chain) -> Chain {
    c.map(c.degree(), |g| Chain::generator(f.apply(g)))
}

/// `f_#` on the alternative quotient, through canonical representatives.
pub fn push_forward_alt(f: &SimplicialMap, c: &AltChain) -> AltChain {
    push_forward_alt_with(f, c, canonicalize)
}

pub fn push_forward_alt_with(f: &SimplicialMap, c: &AltChain, canon: CanonicalizeFn) -> AltChain {
    let mut out = AltChain::zero(c.degree());
    for (class, k) in c.terms() {
        let (image, sign) = canon(&f.apply(&class.representative()));
        out.add_class(&image, sign * k);
    }
    out
}

/// `(f*α)(g) = α(f(g))` for every degree-`n` generator `g` of the domain.
pub fn pull_back(
    f: &SimplicialMap,
    domain: &SimplicialComplex,
    alpha: &RationalCochain,
    limits: &Limits,
) -> Result<RationalCochain> {
    let n = alpha.degree();
    let index = enumerate_generators(domain, n, limits.generator_budget)?;
    RationalCochain::from_values(
        n,
        index
            .generators(n)
            .iter()
            .map(|g| (g.clone(), alpha.get(&f.apply(g))))
            .filter(|(_, v)| !v.is_zero()),
    )
}

/// A contiguous pair: `f(S) ∪ g(S)` spans a simplex for every simplex `S`.
#[derive(Clone, Debug)]
pub struct CombinatorialHomotopy {
    f: SimplicialMap,
    g: SimplicialMap,
}

impl CombinatorialHomotopy {
    pub fn new(
        domain: &SimplicialComplex,
        codomain: &SimplicialComplex,
        f: SimplicialMap,
        g: SimplicialMap,
    ) -> Result<Self> {
        for facet in domain.facets() {
            let mut joint = f.image(facet);
            joint.extend(g.image(facet));
            if !codomain.contains(&support(&joint)) {
                return Err(Error::NotContiguous(facet.clone()));
            }
        }
        Ok(CombinatorialHomotopy { f, g })
    }

    pub fn f(&self) -> &SimplicialMap {
        &self.f
    }

    pub fn g(&self) -> &SimplicialMap {
        &self.g
    }

    /// `P(v_0…v_n) = Σ_i (-1)^i (f(v_0), …, f(v_i), g(v_i), …, g(v_n))`.
    pub fn prism(&self, g: &OrderedGenerator) -> Chain {
        let v = g.vertices();
        let n = g.degree();
        let mut out = Chain::zero(n + 1);
        for i in 0..=n {
            let mut tuple = self.f.image(&v[..=i]);
            tuple.extend(self.g.image(&v[i..]));
            out.add_term(
                OrderedGenerator::new(tuple),
                if i % 2 == 0 { 1 } else { -1 },
            );
        }
        out
    }

    pub fn prism_chain(&self, c: &Chain) -> Chain {
        c.map(c.degree() + 1, |g| self.prism(g))
    }

    /// The prism on the quotient, evaluated on canonical representatives.
    pub fn prism_alt(&self, c: &AltChain) -> AltChain {
        self.prism_alt_with(c, canonicalize)
    }

    pub fn prism_alt_with(&self, c: &AltChain, canon: CanonicalizeFn) -> AltChain {
        let mut out = AltChain::zero(c.degree() + 1);
        for (class, k) in c.terms() {
            let image = AltChain::from_chain_with(&self.prism(&class.representative()), canon);
            out = out.add(&image.scale(k));
        }
        out
    }

    /// `∂P(c) + P(∂c) - (g_# c - f_# c)`, zero when the identity holds.
    pub fn identity_defect(&self, c: &Chain) -> Chain {
        let p = self.prism_chain(c);
        let mut lhs = p.boundary();
        if c.degree() > 0 {
            lhs = lhs.add(&self.prism_chain(&c.boundary()));
        }
        lhs.sub(&push_forward(&self.g, c).sub(&push_forward(&self.f, c)))
    }

    /// The same defect on the quotient.
    pub fn alt_identity_defect(&self, c: &AltChain) -> Result<AltChain> {
        self.alt_identity_defect_with(c, canonicalize)
    }

    pub fn alt_identity_defect_with(
        &self,
        c: &AltChain,
        canon: CanonicalizeFn,
    ) -> Result<AltChain> {
        let mut lhs = crate::alt_chain::boundary_with(&self.prism_alt_with(c, canon), canon)?;
        if c.degree() > 0 {
            let dc = crate::alt_chain::boundary_with(c, canon)?;
            lhs = lhs.add(&self.prism_alt_with(&dc, canon));
        }
        let rhs =
            push_forward_alt_with(&self.g, c, canon).sub(&push_forward_alt_with(&self.f, c, canon));
        Ok(lhs.sub(&rhs))
    }
}

fn chain_from_column(generators: &[OrderedGenerator], degree: usize, column: &[BigInt]) -> Chain {
    let mut c = Chain::zero(degree);
    for (g, x) in generators.iter().zip(column) {
        if !x.is_zero() {
            let k: i64 = x.try_into().expect("cycle coefficients fit in i64");
            c.add_term(g.clone(), k);
        }
    }
    c
}

/// Checks `f_* = g_*` on ordered-chain homology in degrees `n < degree_cap`:
/// `(g_# - f_#) z` must be a boundary for every cycle `z` of a cycle basis.
pub fn induced_maps_agree_ordered(
    h: &CombinatorialHomotopy,
    domain: &SimplicialComplex,
    codomain: &SimplicialComplex,
    limits: &Limits,
) -> Result<bool> {
    let (dom_index, dom_d) = crate::homology::ordered_boundaries(domain, limits)?;
    let (cod_index, cod_d) = crate::homology::ordered_boundaries(codomain, limits)?;
    for n in 0..limits.degree_cap {
        let cycles = if n == 0 {
            IntegerMatrix::identity(dom_index.count(0))
        } else {
            kernel_basis(&dom_d[n])
        };
        let mut images = Vec::with_capacity(cycles.cols());
        for column in cycles.columns() {
            let z = chain_from_column(dom_index.generators(n), n, &column);
            let diff = push_forward(&h.g, &z).sub(&push_forward(&h.f, &z));
            let mut v = vec![BigInt::zero(); cod_index.count(n)];
            for (g, k) in diff.iter() {
                v[cod_index.position(g).expect("image is a generator")] = BigInt::from(k);
            }
            images.push(v);
        }
        let images = IntegerMatrix::from_columns(cod_index.count(n), &images)?;
        if !span_contains(&cod_d[n + 1], &images)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn alt_chain_from_coordinates(deg: &DegreePresentation, column: &[BigInt]) -> AltChain {
    let mut c = AltChain::zero(deg.degree);
    for (i, x) in column.iter().enumerate() {
        if !x.is_zero() {
            let k: i64 = x.try_into().expect("cycle coefficients fit in i64");
            c.add_class(&deg.class_at(i), k);
        }
    }
    c
}

/// Checks `f_* = g_*` on the homology of presented alternative complexes in
/// degrees `n < degree_cap`.
pub fn induced_maps_agree_alternative(
    h: &CombinatorialHomotopy,
    domain: &AltPresentation,
    codomain: &AltPresentation,
) -> Result<bool> {
    let top = domain.degree_cap.min(codomain.degree_cap);
    for n in 0..top {
        let here = &domain.degrees[n];
        let cycles = if n == 0 {
            IntegerMatrix::identity(here.rank())
        } else {
            kernel_basis(&here.boundary.hstack(&domain.degrees[n - 1].relations)?)
                .top_rows(here.rank())
        };
        let target = &codomain.degrees[n];
        let mut images = Vec::with_capacity(cycles.cols());
        for column in cycles.columns() {
            let z = alt_chain_from_coordinates(here, &column);
            let diff = push_forward_alt(&h.g, &z).sub(&push_forward_alt(&h.f, &z));
            images.push(target.coordinates(&diff)?);
        }
        let images = IntegerMatrix::from_columns(target.rank(), &images)?;
        let span = codomain.degrees[n + 1].boundary.hstack(&target.relations)?;
        if !span_contains(&span, &images)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `f^* = g^*` on rational alternative cohomology in degrees `n < limits.degree_cap`.
pub fn pullbacks_agree(
    h: &CombinatorialHomotopy,
    domain: &SimplicialComplex,
    codomain: &SimplicialComplex,
    limits: &Limits,
) -> Result<bool> {
    let top = limits.degree_cap;
    let cod_delta = alternative_coboundaries(codomain, top, limits)?;
    let dom_delta = alternative_coboundaries(domain, top, limits)?;
    for n in 0..top {
        let cod_basis = AltBasis::new(codomain, n);
        let dom_basis = AltBasis::new(domain, n);
        let cocycles = kernel_basis(&cod_delta[n]);
        let rational = |col: Vec<BigInt>| -> Vec<BigRational> {
            col.into_iter().map(BigRational::from_integer).collect()
        };
        let mut stacked: Vec<Vec<BigRational>> = if n == 0 {
            Vec::new()
        } else {
            dom_delta[n - 1]
                .columns()
                .into_iter()
                .map(rational)
                .collect()
        };
        let base_rank = rational_rank(dom_basis.dimension(), &stacked);
        for column in cocycles.columns() {
            let alpha = cod_basis.from_coordinates(&rational(column));
            let diff = pull_back(&h.g, domain, &alpha, limits)?
                .sub(&pull_back(&h.f, domain, &alpha, limits)?)?;
            stacked.push(dom_basis.coordinates(&diff));
        }
        if rational_rank(dom_basis.dimension(), &stacked) != base_rank {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The class of a single canonical tuple, as a chain.
pub fn class_chain(tuple: Vec<usize>) -> AltChain {
    AltChain::from_class(&AltChainClass::from_sorted(tuple), 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{corpus_complex, full_simplex};

    fn g(v: &[usize]) -> OrderedGenerator {
        OrderedGenerator::new(v.to_vec())
    }

    fn cone(dim: usize) -> (SimplicialComplex, CombinatorialHomotopy) {
        let k = full_simplex(dim);
        let f = SimplicialMap::constant(&k, &k, 0).unwrap();
        let id = SimplicialMap::identity(&k);
        let h = CombinatorialHomotopy::new(&k, &k, f, id).unwrap();
        (k, h)
    }

    #[test]
    fn map_validation() {
        let sphere = corpus_complex("sphere").unwrap();
        let point = corpus_complex("point").unwrap();
        assert!(SimplicialMap::new(&point, &sphere, vec![2]).is_ok());
        assert!(SimplicialMap::new(&point, &sphere, vec![4]).is_err());
        // the facet {0, 1, 2} would land on the unfilled triangle
        let tri =
            SimplicialComplex::from_facets(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert!(SimplicialMap::new(&sphere, &tri, vec![0, 1, 2, 2]).is_err());
        let json = SimplicialMap::identity(&sphere).to_json();
        assert_eq!(
            SimplicialMap::from_json(&json, &sphere, &sphere).unwrap(),
            SimplicialMap::identity(&sphere)
        );
    }

    #[test]
    fn push_forward_examples() {
        let sphere = corpus_complex("sphere").unwrap();
        let c = Chain::generator(g(&[0, 1]));
        assert_eq!(push_forward(&SimplicialMap::identity(&sphere), &c), c);
        let k = SimplicialMap::constant(&sphere, &sphere, 3).unwrap();
        assert_eq!(push_forward(&k, &c), Chain::generator(g(&[3, 3])));
        // swapping vertices 0 and 1 reverses the orientation of (0, 1, 2)
        let swap = SimplicialMap::new(&sphere, &sphere, vec![1, 0, 2, 3]).unwrap();
        assert_eq!(
            push_forward_alt(&swap, &class_chain(vec![0, 1, 2])),
            class_chain(vec![0, 1, 2]).scale(-1)
        );
    }

    #[test]
    fn prism_examples() {
        let (_, h) = cone(2);
        assert_eq!(h.prism(&g(&[1])), Chain::generator(g(&[0, 1])));
        let expected = Chain::from_terms(2, vec![(g(&[0, 1, 2]), 1), (g(&[0, 0, 2]), -1)]).unwrap();
        assert_eq!(h.prism(&g(&[1, 2])), expected);
        for c in [g(&[1]), g(&[1, 2]), g(&[2, 1, 1]), g(&[0, 1, 2])] {
            assert!(h.identity_defect(&Chain::generator(c)).is_zero());
        }
    }

    #[test]
    fn identity_homotopy_has_nonzero_prism() {
        let k = full_simplex(2);
        let id = SimplicialMap::identity(&k);
        let h = CombinatorialHomotopy::new(&k, &k, id.clone(), id).unwrap();
        let c = Chain::generator(g(&[0, 1]));
        assert!(!h.prism_chain(&c).is_zero());
        assert!(h.identity_defect(&c).is_zero());
    }

    #[test]
    fn alt_prism_on_torsion() {
        let (_, h) = cone(2);
        let aa = class_chain(vec![1, 1]);
        let p = h.prism_alt(&aa);
        assert!(p.free_part().is_empty());
        assert!(h.alt_identity_defect(&aa).unwrap().is_zero());
    }

    #[test]
    fn contiguity_is_checked() {
        let sphere = corpus_complex("sphere").unwrap();
        let a = SimplicialMap::constant(&sphere, &sphere, 0).unwrap();
        let id = SimplicialMap::identity(&sphere);
        // {0} ∪ {1, 2, 3} is the missing 3-simplex
        assert!(matches!(
            CombinatorialHomotopy::new(&sphere, &sphere, a, id),
            Err(Error::NotContiguous(_))
        ));
    }

    #[test]
    fn cone_induces_equal_maps() {
        let (k, h) = cone(2);
        let limits = Limits::default().with_degree_cap(3);
        assert!(induced_maps_agree_ordered(&h, &k, &k, &limits).unwrap());
        let p = crate::alt_chain::alt_chain_complex(&k, &limits).unwrap();
        assert!(induced_maps_agree_alternative(&h, &p, &p).unwrap());
        assert!(pullbacks_agree(&h, &k, &k, &limits).unwrap());
    }

    #[test]
    fn non_contiguous_maps_are_detected() {
        // the swap acts as -1 on H_2, so it is not homotopic to the identity
        let sphere = corpus_complex("sphere").unwrap();
        let id = SimplicialMap::identity(&sphere);
        let swap = SimplicialMap::new(&sphere, &sphere, vec![1, 0, 2, 3]).unwrap();
        let fake = CombinatorialHomotopy { f: id, g: swap };
        let limits = Limits::default().with_degree_cap(3);
        assert!(!induced_maps_agree_ordered(&fake, &sphere, &sphere, &limits).unwrap());
        let p = crate::alt_chain::alt_chain_complex(&sphere, &limits).unwrap();
        assert!(!induced_maps_agree_alternative(&fake, &p, &p).unwrap());
        assert!(!pullbacks_agree(&fake, &sphere, &sphere, &limits).unwrap());
    }
}
