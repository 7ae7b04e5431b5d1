//! Integer chains on ordered generators.

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::OrderedGenerator;
use crate::error::{Error, Result};

/// A finite `ℤ`-combination of ordered generators of one degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Chain {
    degree: usize,
    terms: BTreeMap<OrderedGenerator, i64>,
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{g:?}")?;
        }
        Ok(())
    }
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn generator(g: OrderedGenerator) -> Self {
        let mut c = Chain::zero(g.degree());
        c.add_term(g, 1);
        c
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (OrderedGenerator, i64)>,
    {
        let mut c = Chain::zero(degree);
        for (g, k) in terms {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
            c.add_term(g, k);
        }
        Ok(c)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, g: &OrderedGenerator) -> i64 {
        self.terms.get(g).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OrderedGenerator, i64)> {
        self.terms.iter().map(|(g, &k)| (g, k))
    }

    pub fn add_term(&mut self, g: OrderedGenerator, k: i64) {
        debug_assert_eq!(g.degree(), self.degree);
        if k == 0 {
            return;
        }
        match self.terms.entry(g) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(k);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += k;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Chain) -> Chain {
        assert_eq!(
            self.degree, other.degree,
            "adding chains of different degree"
        );
        let mut out = self.clone();
        for (g, k) in other.iter() {
            out.add_term(g.clone(), k);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Chain {
        if k == 0 {
            return Chain::zero(self.degree);
        }
        Chain {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(g, &c)| (g.clone(), c * k))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        self.add(&other.scale(-1))
    }

    /// `∂g = Σ_i (-1)^i face(g, i)`; zero in degree 0.
    pub fn boundary(&self) -> Chain {
        if self.degree == 0 {
            return Chain::zero(0);
        }
        let mut out = Chain::zero(self.degree - 1);
        for (g, k) in self.iter() {
            for i in 0..=self.degree {
                let sign = if i % 2 == 0 { k } else { -k };
                out.add_term(g.face(i).expect("index in range"), sign);
            }
        }
        out
    }

    /// Applies `f` to every generator and sums.
    pub fn map<F>(&self, degree: usize, mut f: F) -> Chain
    where
        F: FnMut(&OrderedGenerator) -> Chain,
    {
        let mut out = Chain::zero(degree);
        for (g, k) in self.iter() {
            out = out.add(&f(g).scale(k));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_squares_to_zero() {
        let c = Chain::from_terms(
            3,
            vec![
                (OrderedGenerator::new(vec![0, 1, 2, 3]), 2),
                (OrderedGenerator::new(vec![1, 1, 0, 2]), -1),
            ],
        )
        .unwrap();
        assert!(c.boundary().boundary().is_zero());
    }

    #[test]
    fn cancellation_keeps_canonical_form() {
        let g = OrderedGenerator::new(vec![0, 1]);
        let mut c = Chain::generator(g.clone());
        c.add_term(g, -1);
        assert!(c.is_zero());
        assert_eq!(c, Chain::zero(1));
    }
}
