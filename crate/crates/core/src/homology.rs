//! Homology and cohomology of the ordered, simplicial and alternative complexes.
//!
//! Presented homology. Degree `n` of the alternative complex is the quotient
//! `ℤ^{c_n} / im R_n`, coordinates listing free generators first, with `R_n`
//! equal to `2` on each torsion coordinate. Then
//!
//! ```text
//! H_n = { x : ∂̃_n x ∈ im R_{n-1} } / (im ∂̃_{n+1} + im R_n)
//! ```
//!
//! is computed in three normal-form steps:
//!
//! 1. a kernel basis of `[∂̃_n | R_{n-1}]`, cut down to its first `c_n`
//!    coordinates, is a basis `Z` of the cycle group (the cut is injective
//!    because `R_{n-1}` is);
//! 2. the Smith form of `Z` solves `Z·X = [∂̃_{n+1} | R_n]` over `ℤ`;
//! 3. the invariant factors of `X` present `H_n ≅ ℤ^k / im X`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::alt_chain::AltPresentation;
use crate::cochain::{alternative_maker, coboundary, AltBasis, RationalCochain};
use crate::complex::{enumerate_generators, GeneratorIndex, Limits, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{
    invariant_factors, kernel_basis, rational_rank, solve_integral, AbelianGroup, IntegerMatrix,
};

/// Boundary matrices `∂_n : C_n → C_{n-1}` of the ordered-tuple complex for
/// `n ≤ degree_cap`; entry 0 is the empty `0 x m_0` matrix.
pub fn ordered_boundaries(
    complex: &SimplicialComplex,
    limits: &Limits,
) -> Result<(GeneratorIndex, Vec<IntegerMatrix>)> {
    let index = enumerate_generators(complex, limits.degree_cap, limits.generator_budget)?;
    let mut out = vec![IntegerMatrix::zeros(0, index.count(0))];
    for n in 1..=limits.degree_cap {
        let mut m = IntegerMatrix::zeros(index.count(n - 1), index.count(n));
        for (col, g) in index.generators(n).iter().enumerate() {
            for i in 0..=n {
                let row = index.position(&g.face(i)?).expect("faces are enumerated");
                let delta: BigInt = if i % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                let v = m.get(row, col) + delta;
                m.set(row, col, v);
            }
        }
        out.push(m);
    }
    Ok((index, out))
}

/// Boundary matrices of the simplicial chain complex on sorted simplices, up to degree `top`.
pub fn simplicial_boundaries(complex: &SimplicialComplex, top: usize) -> Vec<IntegerMatrix> {
    let bases: Vec<AltBasis> = (0..=top).map(|n| AltBasis::new(complex, n)).collect();
    let mut out = vec![IntegerMatrix::zeros(0, bases[0].dimension())];
    for n in 1..=top {
        let mut m = IntegerMatrix::zeros(bases[n - 1].dimension(), bases[n].dimension());
        for (col, s) in bases[n].simplices().iter().enumerate() {
            for i in 0..=n {
                let mut face = s.clone();
                face.remove(i);
                let row = bases[n - 1]
                    .position(&face)
                    .expect("complex is closed under faces");
                m.set(
                    row,
                    col,
                    if i % 2 == 0 {
                        BigInt::one()
                    } else {
                        -BigInt::one()
                    },
                );
            }
        }
        out.push(m);
    }
    out
}

fn check_composition(d: &[IntegerMatrix]) -> Result<()> {
    for n in 1..d.len().saturating_sub(1) {
        if !d[n].mul(&d[n + 1])?.is_zero() {
            return Err(Error::NonzeroComposition(n));
        }
    }
    Ok(())
}

/// `H_n` for `n < boundaries.len() - 1` of a free chain complex.
pub fn homology_free(boundaries: &[IntegerMatrix]) -> Result<Vec<AbelianGroup>> {
    check_composition(boundaries)?;
    let factors: Vec<Vec<BigInt>> = boundaries.iter().map(invariant_factors).collect();
    Ok((0..boundaries.len().saturating_sub(1))
        .map(|n| {
            let cycles = boundaries[n].cols() - factors[n].len();
            let mut torsion: Vec<BigInt> = factors[n + 1]
                .iter()
                .filter(|d| !d.is_one())
                .cloned()
                .collect();
            torsion.sort();
            AbelianGroup {
                free_rank: cycles - factors[n + 1].len(),
                torsion,
            }
        })
        .collect())
}

/// Betti numbers over `ℚ` for `n < boundaries.len() - 1`.
pub fn betti_rational(boundaries: &[IntegerMatrix]) -> Result<Vec<usize>> {
    check_composition(boundaries)?;
    let ranks: Vec<usize> = boundaries.iter().map(IntegerMatrix::rank).collect();
    Ok((0..boundaries.len().saturating_sub(1))
        .map(|n| boundaries[n].cols() - ranks[n] - ranks[n + 1])
        .collect())
}

/// `H_{An}` for `n < degree_cap` of a presented alternative complex.
pub fn homology_presented(p: &AltPresentation) -> Result<Vec<AbelianGroup>> {
    let top = p.degrees.len().saturating_sub(1);
    let mut out = Vec::with_capacity(top);
    for n in 0..top {
        let here = &p.degrees[n];
        let c_n = here.rank();
        let z = if n == 0 {
            IntegerMatrix::identity(c_n)
        } else {
            let below = &p.degrees[n - 1];
            let stacked = here.boundary.hstack(&below.relations)?;
            kernel_basis(&stacked).top_rows(c_n)
        };
        let next = &p.degrees[n + 1];
        let b = next.boundary.hstack(&here.relations)?;
        let k = z.cols();
        let x = solve_integral(&z, &b).map_err(|_| Error::RelationIncompatible(n))?;
        out.push(AbelianGroup::cokernel(k, &invariant_factors(&x)));
    }
    Ok(out)
}

/// Coboundary matrices `δ_n : C^n → C^{n+1}` of the full ordered cochain complex
/// for `n < degree_cap`, computed by applying `δ` to indicator cochains.
pub fn full_coboundaries(
    complex: &SimplicialComplex,
    index: &GeneratorIndex,
    limits: &Limits,
) -> Result<Vec<IntegerMatrix>> {
    (0..index.degree_cap())
        .map(|n| full_coboundary(complex, index, n, limits))
        .collect()
}

fn full_coboundary(
    complex: &SimplicialComplex,
    index: &GeneratorIndex,
    n: usize,
    limits: &Limits,
) -> Result<IntegerMatrix> {
    let mut m = IntegerMatrix::zeros(index.count(n + 1), index.count(n));
    for (col, g) in index.generators(n).iter().enumerate() {
        let d = coboundary(complex, &RationalCochain::indicator(g.clone()), limits)?;
        for (h, v) in d.iter() {
            let row = index
                .position(h)
                .ok_or_else(|| Error::NotAGenerator(h.vertices().to_vec()))?;
            m.set(row, col, integral(v)?);
        }
    }
    Ok(m)
}

fn integral(v: &BigRational) -> Result<BigInt> {
    if !v.is_integer() {
        return Err(Error::Malformed(format!("expected an integer, found {v}")));
    }
    Ok(v.to_integer())
}

/// Coboundary matrices of the alternative subcomplex in simplex coordinates,
/// for `n < top`, obtained by applying `δ` to the alternative basis cochains.
pub fn alternative_coboundaries(
    complex: &SimplicialComplex,
    top: usize,
    limits: &Limits,
) -> Result<Vec<IntegerMatrix>> {
    let bases: Vec<AltBasis> = (0..=top).map(|n| AltBasis::new(complex, n)).collect();
    (0..top)
        .map(|n| alternative_coboundary(complex, &bases[n], &bases[n + 1], limits))
        .collect()
}

fn alternative_coboundary(
    complex: &SimplicialComplex,
    from: &AltBasis,
    to: &AltBasis,
    limits: &Limits,
) -> Result<IntegerMatrix> {
    let columns = (0..from.dimension())
        .map(|i| {
            let d = coboundary(complex, &from.basis_cochain(i), limits)?;
            to.coordinates(&d).iter().map(integral).collect()
        })
        .collect::<Result<Vec<Vec<BigInt>>>>()?;
    IntegerMatrix::from_columns(to.dimension(), &columns)
}

/// `dim H^n` over `ℚ` for `n < coboundaries.len()`.
pub fn cohomology_rational(coboundaries: &[IntegerMatrix]) -> Result<Vec<usize>> {
    for n in 0..coboundaries.len().saturating_sub(1) {
        if !coboundaries[n + 1].mul(&coboundaries[n])?.is_zero() {
            return Err(Error::NonzeroComposition(n + 1));
        }
    }
    let ranks: Vec<usize> = coboundaries.iter().map(IntegerMatrix::rank).collect();
    Ok((0..coboundaries.len())
        .map(|n| {
            let incoming = if n == 0 { 0 } else { ranks[n - 1] };
            coboundaries[n].cols() - ranks[n] - incoming
        })
        .collect())
}

/// How `A` acts on degree-`n` rational cohomology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingReport {
    pub degree: usize,
    /// `dim H^n`.
    pub full_rank: usize,
    /// `dim H_A^n`.
    pub alternative_rank: usize,
    /// Rank of the map `H^n → H_A^n` induced by `A`.
    pub induced_rank: usize,
    pub kernel_rank: usize,
    pub cocycles_preserved: bool,
    pub coboundaries_preserved: bool,
    pub surjective: bool,
}

impl SplittingReport {
    pub fn is_isomorphism(&self) -> bool {
        self.cocycles_preserved
            && self.coboundaries_preserved
            && self.surjective
            && self.kernel_rank == 0
    }
}

/// Measures `A : H^n → H_A^n` over `ℚ`. Needs `limits.degree_cap ≥ n + 1`.
pub fn verify_cohomology_splitting(
    complex: &SimplicialComplex,
    n: usize,
    limits: &Limits,
) -> Result<SplittingReport> {
    if n + 1 > limits.degree_cap {
        return Err(Error::DegreeExceedsCap {
            degree: n + 1,
            cap: limits.degree_cap,
        });
    }
    let index = enumerate_generators(complex, n + 1, limits.generator_budget)?;
    let delta_n = full_coboundary(complex, &index, n, limits)?;
    let delta_prev = if n == 0 {
        None
    } else {
        Some(full_coboundary(complex, &index, n - 1, limits)?)
    };
    let bases: Vec<AltBasis> = (0..=n + 1).map(|k| AltBasis::new(complex, k)).collect();
    let alt_n = alternative_coboundary(complex, &bases[n], &bases[n + 1], limits)?;
    let alt_prev = if n == 0 {
        None
    } else {
        Some(alternative_coboundary(
            complex,
            &bases[n - 1],
            &bases[n],
            limits,
        )?)
    };

    let to_rational = |m: &IntegerMatrix| -> Vec<Vec<BigRational>> {
        m.columns()
            .into_iter()
            .map(|c| c.into_iter().map(BigRational::from_integer).collect())
            .collect()
    };
    let dim_alt = bases[n].dimension();
    let alt_boundaries = alt_prev.as_ref().map(to_rational).unwrap_or_default();
    let rank_alt_boundaries = rational_rank(dim_alt, &alt_boundaries);

    let generators = index.generators(n);
    let cochain_of = |column: &[BigInt]| -> Result<RationalCochain> {
        RationalCochain::from_values(
            n,
            column
                .iter()
                .zip(generators)
                .filter(|(v, _)| !v.is_zero())
                .map(|(v, g)| (g.clone(), BigRational::from_integer(v.clone()))),
        )
    };

    // images of a cocycle basis
    let cocycles = kernel_basis(&delta_n);
    let mut cocycles_preserved = true;
    let mut images = Vec::with_capacity(cocycles.cols());
    for column in cocycles.columns() {
        let az = alternative_maker(&cochain_of(&column)?, limits)?;
        if !coboundary(complex, &az, limits)?.is_zero() {
            cocycles_preserved = false;
        }
        images.push(bases[n].coordinates(&az));
    }
    let mut stacked = alt_boundaries.clone();
    stacked.extend(images);
    let induced_rank = rational_rank(dim_alt, &stacked) - rank_alt_boundaries;

    // images of a coboundary spanning set
    let mut coboundaries_preserved = true;
    if let Some(prev) = &delta_prev {
        let mut stacked = alt_boundaries.clone();
        for column in prev.columns() {
            let image = alternative_maker(&cochain_of(&column)?, limits)?;
            stacked.push(bases[n].coordinates(&image));
        }
        coboundaries_preserved = rational_rank(dim_alt, &stacked) == rank_alt_boundaries;
    }

    let full_rank = cocycles.cols() - delta_prev.as_ref().map_or(0, IntegerMatrix::rank);
    let alternative_rank = (dim_alt - alt_n.rank()) - rank_alt_boundaries;
    Ok(SplittingReport {
        degree: n,
        full_rank,
        alternative_rank,
        induced_rank,
        kernel_rank: full_rank.saturating_sub(induced_rank),
        cocycles_preserved,
        coboundaries_preserved,
        surjective: induced_rank == alternative_rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alt_chain::alt_chain_complex;

    fn tetra() -> SimplicialComplex {
        SimplicialComplex::from_facets(
            4,
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        )
        .unwrap()
    }

    fn point() -> SimplicialComplex {
        SimplicialComplex::from_facets(1, vec![vec![0]]).unwrap()
    }

    fn groups(list: &[AbelianGroup]) -> Vec<String> {
        list.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn sphere_three_ways() {
        let limits = Limits::default().with_degree_cap(3);
        let (_, d) = ordered_boundaries(&tetra(), &limits).unwrap();
        assert_eq!(groups(&homology_free(&d).unwrap()), ["Z", "0", "Z"]);
        let s = simplicial_boundaries(&tetra(), 3);
        assert_eq!(groups(&homology_free(&s).unwrap()), ["Z", "0", "Z"]);
        let p = alt_chain_complex(&tetra(), &limits).unwrap();
        assert_eq!(groups(&homology_presented(&p).unwrap()), ["Z", "0", "Z"]);
    }

    #[test]
    fn point_presented() {
        let p = alt_chain_complex(&point(), &Limits::default().with_degree_cap(4)).unwrap();
        assert_eq!(
            groups(&homology_presented(&p).unwrap()),
            ["Z", "0", "0", "0"]
        );
    }

    #[test]
    fn sphere_cohomology() {
        let limits = Limits::default().with_degree_cap(3);
        let index = enumerate_generators(&tetra(), 3, limits.generator_budget).unwrap();
        let full = full_coboundaries(&tetra(), &index, &limits).unwrap();
        assert_eq!(cohomology_rational(&full).unwrap(), vec![1, 0, 1]);
        let alt = alternative_coboundaries(&tetra(), 3, &limits).unwrap();
        assert_eq!(cohomology_rational(&alt).unwrap(), vec![1, 0, 1]);
        // δ is the transpose of ∂ on the ordered complex
        let (_, d) = ordered_boundaries(&tetra(), &limits).unwrap();
        for n in 0..3 {
            assert_eq!(full[n], d[n + 1].transpose());
        }
    }

    #[test]
    fn splitting_on_sphere() {
        let limits = Limits::default().with_degree_cap(3);
        for n in 0..=2 {
            let r = verify_cohomology_splitting(&tetra(), n, &limits).unwrap();
            assert!(r.is_isomorphism(), "{r:?}");
            assert_eq!(r.full_rank, [1, 0, 1][n]);
        }
    }

    #[test]
    fn nonzero_composition_is_reported() {
        let d1 = IntegerMatrix::from_rows(&[vec![1i64]]).unwrap();
        let d2 = IntegerMatrix::from_rows(&[vec![1i64]]).unwrap();
        let bad = vec![IntegerMatrix::zeros(0, 1), d1, d2];
        assert!(matches!(
            homology_free(&bad),
            Err(Error::NonzeroComposition(1))
        ));
    }
}
