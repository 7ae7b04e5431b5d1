//! The bundled test complexes.

use crate::complex::SimplicialComplex;

const SOURCES: [(&str, &str); 5] = [
    ("point", include_str!("../data/point.json")),
    ("sphere", include_str!("../data/sphere.json")),
    (
        "projective_plane",
        include_str!("../data/projective_plane.json"),
    ),
    ("torus", include_str!("../data/torus.json")),
    ("klein_bottle", include_str!("../data/klein_bottle.json")),
];

/// Names of the bundled complexes, in corpus order.
pub fn corpus_names() -> Vec<&'static str> {
    SOURCES.iter().map(|(n, _)| *n).collect()
}

/// A bundled complex by name.
pub fn corpus_complex(name: &str) -> Option<SimplicialComplex> {
    SOURCES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| SimplicialComplex::load_complex(text).expect("bundled complex parses"))
}

/// Point, sphere, projective plane, torus, Klein bottle.
pub fn default_corpus() -> Vec<SimplicialComplex> {
    corpus_names()
        .into_iter()
        .map(|n| corpus_complex(n).expect("listed"))
        .collect()
}

/// The full simplex on `dim + 1` vertices.
pub fn full_simplex(dim: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets(dim + 1, vec![(0..=dim).collect()])
        .expect("one facet on all vertices")
        .with_name(format!("simplex{dim}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_shapes() {
        let counts: Vec<(usize, usize)> = default_corpus()
            .iter()
            .map(|k| (k.vertex_count(), k.simplices_of_dim(2).count()))
            .collect();
        assert_eq!(counts, vec![(1, 0), (4, 4), (6, 10), (7, 14), (8, 16)]);
        for k in default_corpus() {
            assert_eq!(k.component_count(), 1);
        }
        assert_eq!(full_simplex(3).simplices().len(), 15);
        assert!(corpus_complex("nowhere").is_none());
    }
}
