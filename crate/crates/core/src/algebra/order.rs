use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Zero};

use crate::scalar::Scalar;

pub type Exponents = Vec<u32>;

/// Weighted degree, ties broken lexicographically with the last variable
/// most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    pub weights: Vec<u32>,
}

impl MonomialOrder {
    pub fn new(weights: Vec<u32>) -> Self {
        MonomialOrder { weights }
    }

    pub fn weight(&self, e: &[u32]) -> u32 {
        e.iter().zip(&self.weights).map(|(a, w)| a * w).sum()
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.weight(a).cmp(&self.weight(b)).then_with(|| {
            for (x, y) in a.iter().rev().zip(b.iter().rev()) {
                match x.cmp(y) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

/// Polynomial in commuting variables, terms kept in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub terms: Vec<(Exponents, Scalar)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn from_map(order: &MonomialOrder, map: BTreeMap<Exponents, Scalar>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Exponents, Scalar)> {
        self.terms.first()
    }

    pub fn to_map(&self) -> BTreeMap<Exponents, Scalar> {
        self.terms.iter().cloned().collect()
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Scalar::one() / c;
                Poly { terms: self.terms.iter().map(|(e, v)| (e.clone(), v * &inv)).collect() }
            }
        }
    }

    /// `self - c * x^shift * other`.
    pub fn sub_scaled_shifted(&self, order: &MonomialOrder, c: &Scalar, shift: &[u32], other: &Poly) -> Poly {
        let mut map = self.to_map();
        for (e, v) in &other.terms {
            let m: Exponents = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            let entry = map.entry(m).or_insert_with(Scalar::zero);
            *entry -= c * v;
        }
        Poly::from_map(order, map)
    }
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn quotient(b: &[u32], a: &[u32]) -> Exponents {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

pub fn lcm(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn later_variables_break_ties() {
        let o = MonomialOrder::new(vec![2, 4, 6]);
        // alpha^2 vs beta: same weight, beta wins
        assert_eq!(o.cmp(&[2, 0, 0], &[0, 1, 0]), Ordering::Less);
        // alpha*beta vs gamma
        assert_eq!(o.cmp(&[1, 1, 0], &[0, 0, 1]), Ordering::Less);
        assert_eq!(o.cmp(&[4, 0, 0], &[0, 0, 1]), Ordering::Greater);
    }
}
