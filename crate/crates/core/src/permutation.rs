//! Symmetric groups acting on generator positions.
//!
//! Composition is `(s ∘ t)(j) = s(t(j))`. The action on tuples reads
//! `act(s, g)[j] = g[s(j)]`, which makes it a right action:
//! `act(s ∘ t, g) = act(t, act(s, g))`.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::complex::OrderedGenerator;
use crate::error::{Error, Result};

/// Largest `k` for which `S_k` is enumerated.
pub const DEFAULT_PERMUTATION_CAP: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Permutation {
    images: Vec<usize>,
    #[serde(skip)]
    sign: i8,
}

/// `(-1)^(number of inversions)` of a sequence of distinct values.
pub fn inversion_sign(values: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] > values[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &x in &images {
            if x >= k || seen[x] {
                return Err(Error::NotAPermutation(images));
            }
            seen[x] = true;
        }
        let sign = inversion_sign(&images);
        Ok(Permutation { images, sign })
    }

    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (0..k).collect(),
            sign: 1,
        }
    }

    /// The transposition of `a` and `b` in `S_k`.
    pub fn transposition(k: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(a, b);
        Permutation::new(images).expect("swap of identity is a bijection")
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, j: usize) -> usize {
        self.images[j]
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (j, &x) in self.images.iter().enumerate() {
            inv[x] = j;
        }
        Permutation {
            images: inv,
            sign: self.sign,
        }
    }

    /// `self ∘ other`, i.e. `j ↦ self(other(j))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
            sign: self.sign * other.sign,
        })
    }

    /// Pull-back of a generator: entry `j` of the result is entry `s(j)` of `g`.
    pub fn act(&self, g: &OrderedGenerator) -> Result<OrderedGenerator> {
        let v = g.vertices();
        if v.len() != self.len() {
            return Err(Error::SizeMismatch {
                expected: self.len(),
                found: v.len(),
            });
        }
        Ok(OrderedGenerator::new(
            self.images.iter().map(|&j| v[j]).collect(),
        ))
    }

    /// The permutation of `{0..n-1}` obtained by deleting `i` from the domain and
    /// `s(i)` from the range, renumbering both in order.
    pub fn induced_face_perm(&self, i: usize) -> Result<Permutation> {
        let k = self.len();
        if k == 0 || i >= k {
            return Err(Error::FaceIndexOutOfRange {
                index: i,
                degree: k.saturating_sub(1),
            });
        }
        let pivot = self.images[i];
        let images: Vec<usize> = (0..k - 1)
            .map(|j| {
                let src = if j < i { j } else { j + 1 };
                let x = self.images[src];
                if x < pivot {
                    x
                } else {
                    x - 1
                }
            })
            .collect();
        let sign = inversion_sign(&images);
        Ok(Permutation { images, sign })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

static GROUPS: [OnceLock<Vec<Permutation>>; DEFAULT_PERMUTATION_CAP + 1] =
    [const { OnceLock::new() }; DEFAULT_PERMUTATION_CAP + 1];

fn build_group(k: usize) -> Vec<Permutation> {
    // lexicographic order of image sequences
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(Permutation {
            sign: inversion_sign(&cur),
            images: cur.clone(),
        });
        let Some(i) = (0..k.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// All `k!` elements of `S_k` in lexicographic order of their image sequences.
pub fn enumerate_group(k: usize, cap: usize) -> Result<&'static [Permutation]> {
    if k > cap || k > DEFAULT_PERMUTATION_CAP {
        return Err(Error::PermutationCapExceeded {
            k,
            cap: cap.min(DEFAULT_PERMUTATION_CAP),
        });
    }
    Ok(GROUPS[k].get_or_init(|| build_group(k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn signs() {
        assert_eq!(Permutation::identity(3).sign(), 1);
        assert_eq!(p(&[1, 0]).sign(), -1);
        assert_eq!(p(&[1, 2, 0]).sign(), 1);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
    }

    #[test]
    fn action_examples() {
        let g = OrderedGenerator::new(vec![10, 11, 12]);
        assert_eq!(p(&[1, 2, 0]).act(&g).unwrap().vertices(), &[11, 12, 10]);
        assert_eq!(Permutation::identity(3).act(&g).unwrap(), g);
        let aa = OrderedGenerator::new(vec![5, 5]);
        assert_eq!(p(&[1, 0]).act(&aa).unwrap(), aa);
        assert!(matches!(
            Permutation::identity(2).act(&g),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn action_composition_convention() {
        let g = OrderedGenerator::new(vec![3, 1, 4, 5]);
        for s in enumerate_group(4, 8).unwrap() {
            for t in enumerate_group(4, 8).unwrap() {
                let st = s.compose(t).unwrap();
                assert_eq!(st.act(&g).unwrap(), t.act(&s.act(&g).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn induced_face_perm_examples() {
        let id = Permutation::identity(3).induced_face_perm(1).unwrap();
        assert!(id.is_identity() && id.len() == 2);
        assert_eq!(
            p(&[1, 2, 0]).induced_face_perm(1).unwrap().images(),
            &[1, 0]
        );
        let one = p(&[1, 0]).induced_face_perm(0).unwrap();
        assert_eq!(one.images(), &[0]);
        assert!(p(&[1, 0]).induced_face_perm(2).is_err());
    }

    #[test]
    fn group_enumeration() {
        assert_eq!(enumerate_group(1, 8).unwrap().len(), 1);
        let s2 = enumerate_group(2, 8).unwrap();
        assert_eq!(s2.iter().map(|s| s.sign()).collect::<Vec<_>>(), vec![1, -1]);
        let s4 = enumerate_group(4, 8).unwrap();
        assert_eq!(s4.len(), 24);
        assert_eq!(s4.iter().filter(|s| s.sign() == 1).count(), 12);
        assert_eq!(s4.iter().map(|s| s.sign() as i32).sum::<i32>(), 0);
        assert!(matches!(
            enumerate_group(5, 4),
            Err(Error::PermutationCapExceeded { k: 5, cap: 4 })
        ));
    }

    #[test]
    fn group_laws_exhaustive() {
        for k in 1..=4 {
            let g = enumerate_group(k, 8).unwrap();
            for a in g {
                assert!(a.compose(&a.inverse()).unwrap().is_identity());
                for b in g {
                    let ab = a.compose(b).unwrap();
                    assert_eq!(ab.sign(), a.sign() * b.sign());
                    assert_eq!(ab.sign(), inversion_sign(ab.images()));
                    for c in g {
                        assert_eq!(
                            ab.compose(c).unwrap(),
                            a.compose(&b.compose(c).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sign_identity_exhaustive() {
        for k in 1..=5 {
            for s in enumerate_group(k, 8).unwrap() {
                for i in 0..k {
                    let si = s.induced_face_perm(i).unwrap();
                    let parity = (i + s.apply(i)) % 2;
                    let expected = if parity == 0 { si.sign() } else { -si.sign() };
                    assert_eq!(s.sign(), expected, "s = {s:?}, i = {i}");
                }
            }
        }
    }

    #[test]
    fn face_action_compatibility() {
        let g = OrderedGenerator::new(vec![4, 2, 2, 9]);
        for s in enumerate_group(4, 8).unwrap() {
            for i in 0..4 {
                let lhs = s.act(&g).unwrap().face(i).unwrap();
                let rhs = s
                    .induced_face_perm(i)
                    .unwrap()
                    .act(&g.face(s.apply(i)).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
