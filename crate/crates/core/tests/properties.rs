//! Randomized invariants across modules, each against an oracle written here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use altcoh::alt_chain::{
    alt_chain_complex, boundary, canonicalize, AltChain, AltPresentation, ClassKind,
};
use altcoh::chain::Chain;
use altcoh::cochain::{alternative_maker, coboundary, is_alternative, Rational, RationalCochain};
use altcoh::complex::{enumerate_generators, Limits, OrderedGenerator};
use altcoh::corpus::corpus_complex;
use altcoh::homology::{
    homology_free, homology_presented, ordered_boundaries, simplicial_boundaries,
};
use altcoh::linalg::{invariant_factors, smith_normal_form, IntegerMatrix};
use altcoh::permutation::Permutation;
use altcoh::SimplicialComplex;

fn matrix(rows: usize, cols: usize, range: i64) -> impl Strategy<Value = IntegerMatrix> {
    prop::collection::vec(-range..=range, rows * cols).prop_map(move |v| {
        let rows: Vec<Vec<i64>> = v.chunks(cols).map(<[i64]>::to_vec).collect();
        IntegerMatrix::from_rows(&rows).unwrap()
    })
}

fn sized_matrix(max: usize, range: i64) -> impl Strategy<Value = IntegerMatrix> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| matrix(r, c, range))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Laplace expansion along the first row.
fn det(rows: &[Vec<BigInt>]) -> BigInt {
    if rows.is_empty() {
        return BigInt::from(1);
    }
    let mut total = BigInt::zero();
    for c in 0..rows.len() {
        let minor: Vec<Vec<BigInt>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &rows[0][c] * det(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `d_1 ⋯ d_k` equals the gcd of all `k x k` minors.
fn determinantal_divisors(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut out = Vec::new();
    for k in 1..=m.rows().min(m.cols()) {
        let mut g = BigInt::zero();
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m.get(r, c).clone()).collect())
                    .collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(g);
    }
    out
}

fn permutation(k: usize) -> impl Strategy<Value = Permutation> {
    Just((0..k).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn cycle_parity(images: &[usize]) -> i8 {
    let mut seen = vec![false; images.len()];
    let mut even = true;
    for start in 0..images.len() {
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = images[j];
            len += 1;
        }
        if len > 0 && len % 2 == 0 {
            even = !even;
        }
    }
    if even {
        1
    } else {
        -1
    }
}

fn sphere() -> SimplicialComplex {
    corpus_complex("sphere").unwrap()
}

/// A tuple on the sphere: any entries from one facet.
fn sphere_tuple(len: usize) -> impl Strategy<Value = OrderedGenerator> {
    (0..4usize, prop::collection::vec(0..3usize, len)).prop_map(|(skip, picks)| {
        let facet: Vec<usize> = (0..4).filter(|&v| v != skip).collect();
        OrderedGenerator::new(picks.into_iter().map(|i| facet[i]).collect())
    })
}

fn sphere_cochain(degree: usize) -> impl Strategy<Value = RationalCochain> {
    prop::collection::vec((sphere_tuple(degree + 1), -4i64..=4), 0..8).prop_map(move |terms| {
        let mut c = RationalCochain::zero(degree);
        for (g, v) in terms {
            c.add_at(g, Rational::from_integer(BigInt::from(v)));
        }
        c
    })
}

/// Complexes on at most 5 vertices with facets of dimension at most 2.
fn small_complex() -> impl Strategy<Value = SimplicialComplex> {
    (1..=5usize).prop_flat_map(|n| {
        let facet = prop::collection::btree_set(0..n, 1..=3.min(n))
            .prop_map(|s| s.into_iter().collect::<Vec<usize>>());
        prop::collection::vec(facet, 1..6).prop_map(move |mut facets| {
            // every vertex appears
            facets.extend((0..n).map(|v| vec![v]));
            SimplicialComplex::from_facets(n, facets).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_round_trip(m in sized_matrix(5, 6)) {
        let snf = smith_normal_form(&m);
        prop_assert!(snf.check(&m).unwrap());
        prop_assert!(snf.u.determinant().unwrap().abs() == BigInt::from(1));
        prop_assert!(snf.v.determinant().unwrap().abs() == BigInt::from(1));
        for w in snf.invariant_factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert_eq!(&snf.invariant_factors, &invariant_factors(&m));
        prop_assert_eq!(snf.rank, m.rank());
    }

    #[test]
    fn invariant_factors_match_minors(m in sized_matrix(3, 5)) {
        let factors = invariant_factors(&m);
        let divisors = determinantal_divisors(&m);
        prop_assert_eq!(factors.len(), divisors.len());
        let mut product = BigInt::from(1);
        for (d, g) in factors.iter().zip(&divisors) {
            product *= d;
            prop_assert_eq!(&product, g);
        }
    }

    #[test]
    fn matrix_file_round_trip(m in sized_matrix(4, 1000)) {
        let text = serde_json::to_string(&m).unwrap();
        let back: IntegerMatrix = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn permutation_sign_and_action(s in permutation(6), t in permutation(6), g in sphere_tuple(6)) {
        prop_assert_eq!(s.sign(), cycle_parity(s.images()));
        let st = s.compose(&t).unwrap();
        prop_assert_eq!(st.sign(), cycle_parity(st.images()));
        // act is a right action
        prop_assert_eq!(t.act(&s.act(&g).unwrap()).unwrap(), st.act(&g).unwrap());
        prop_assert!(s.compose(&s.inverse()).unwrap().is_identity());
    }

    #[test]
    fn face_of_action(s in permutation(5), g in sphere_tuple(5), i in 0..5usize) {
        let si = s.induced_face_perm(i).unwrap();
        let lhs = s.act(&g).unwrap().face(i).unwrap();
        let rhs = si.act(&g.face(s.apply(i)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ordered_boundary_squares_to_zero(terms in prop::collection::vec((sphere_tuple(4), -3i64..=3), 0..6)) {
        let mut c = Chain::zero(3);
        for (g, k) in terms {
            c.add_term(g, k);
        }
        prop_assert!(c.boundary().boundary().is_zero());
        let alt = AltChain::from_chain(&c);
        prop_assert!(boundary(&boundary(&alt).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn canonicalization_is_equivariant(s in permutation(4), g in sphere_tuple(4)) {
        let (class, sign) = canonicalize(&g);
        let (moved, moved_sign) = canonicalize(&s.act(&g).unwrap());
        prop_assert_eq!(&moved, &class);
        if class.kind() == ClassKind::Free {
            prop_assert_eq!(moved_sign, sign * s.sign() as i64);
        }
        let mut sorted = g.vertices().to_vec();
        sorted.sort_unstable();
        prop_assert_eq!(class.tuple(), sorted.as_slice());
        prop_assert_eq!(class.is_torsion(), g.has_repeat());
    }

    #[test]
    fn projector_and_coboundary(alpha in sphere_cochain(1)) {
        let k = sphere();
        let limits = Limits::default();
        let a = alternative_maker(&alpha, &limits).unwrap();
        prop_assert!(is_alternative(&a, &limits).unwrap());
        prop_assert_eq!(alternative_maker(&a, &limits).unwrap(), a.clone());
        let d = coboundary(&k, &alpha, &limits).unwrap();
        prop_assert!(coboundary(&k, &d, &limits).unwrap().is_zero());
        prop_assert_eq!(
            alternative_maker(&d, &limits).unwrap(),
            coboundary(&k, &a, &limits).unwrap()
        );
    }

    #[test]
    fn cochain_file_round_trip(alpha in sphere_cochain(2)) {
        let k = sphere();
        let back = RationalCochain::from_json(&alpha.to_json(), &k).unwrap();
        prop_assert_eq!(back, alpha);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn presented_homology_matches_simplicial(k in small_complex()) {
        let limits = Limits::default().with_degree_cap(3);
        let presentation = alt_chain_complex(&k, &limits).unwrap();
        let alternative = homology_presented(&presentation).unwrap();
        let simplicial = homology_free(&simplicial_boundaries(&k, 3)).unwrap();
        let (_, d) = ordered_boundaries(&k, &limits).unwrap();
        let ordered = homology_free(&d).unwrap();
        prop_assert_eq!(&alternative[..], &simplicial[..3]);
        prop_assert_eq!(&alternative, &ordered);
        prop_assert_eq!(alternative[0].free_rank, k.component_count());
        let back = AltPresentation::from_json(&presentation.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), presentation.to_json());
    }

    #[test]
    fn generator_counts_are_products(k in small_complex()) {
        // tuples of length n + 1 drawn from a single simplex, counted by inclusion-exclusion
        let index = enumerate_generators(&k, 2, 1_000_000).unwrap();
        for n in 0..=2 {
            let mut count = BigInt::zero();
            for s in k.simplices() {
                // surjections of n + 1 positions onto s
                let m = s.len();
                let mut surj = BigInt::zero();
                for j in 0..=m {
                    let binom: BigInt = (0..j).fold(BigInt::from(1), |acc, i| acc * (m - i) / (i + 1));
                    let term = binom * BigInt::from(m - j).pow(n as u32 + 1);
                    if j % 2 == 0 { surj += term } else { surj -= term }
                }
                count += surj;
            }
            prop_assert_eq!(BigInt::from(index.count(n)), count.clone());
            prop_assert_eq!(k.generator_count(n), count);
        }
    }
}
