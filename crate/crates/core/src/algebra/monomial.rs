use alloc::vec::Vec;
use core::cmp::Ordering;

use super::context::Context;

/// A commuting power product times a strictly increasing word of odd
/// generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub even: Vec<u32>,
    pub odd: Vec<u16>,
}

impl Monomial {
    pub fn one(ctx: &Context) -> Self {
        Monomial { even: alloc::vec![0; ctx.even_count()], odd: Vec::new() }
    }

    pub fn from_even(even: Vec<u32>) -> Self {
        Monomial { even, odd: Vec::new() }
    }

    /// Builds a monomial from an arbitrary odd word, returning the sign
    /// needed to sort it, or `None` if a generator repeats.
    pub fn from_word(even: Vec<u32>, word: &[u16]) -> Option<(i8, Self)> {
        let mut odd = word.to_vec();
        let mut sign = 1i8;
        for i in 1..odd.len() {
            let mut j = i;
            while j > 0 && odd[j - 1] > odd[j] {
                odd.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if odd.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((sign, Monomial { even, odd }))
    }

    pub fn is_one(&self) -> bool {
        self.odd.is_empty() && self.even.iter().all(|&e| e == 0)
    }

    pub fn is_even_only(&self) -> bool {
        self.odd.is_empty()
    }

    pub fn degree(&self, ctx: &Context) -> u32 {
        let even: u32 = self.even.iter().enumerate().map(|(k, &e)| e * ctx.even_spec(k).degree).sum();
        let odd: u32 = self.odd.iter().map(|&k| ctx.odd_spec(k as usize).degree).sum();
        even + odd
    }

    /// Product with its Koszul sign; `None` when an odd generator repeats.
    pub fn mul(&self, other: &Monomial) -> Option<(i8, Monomial)> {
        let even = self.even.iter().zip(&other.even).map(|(a, b)| a + b).collect();
        let (a, b) = (&self.odd, &other.odd);
        let mut odd = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut swaps = 0usize;
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    odd.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    // b[j] moves past the remaining a[i..]
                    swaps += a.len() - i;
                    odd.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => return None,
            }
        }
        odd.extend_from_slice(&a[i..]);
        odd.extend_from_slice(&b[j..]);
        let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, Monomial { even, odd }))
    }

    /// `true` if every exponent of `self` is at most that of `other`
    /// (even part only).
    pub fn divides_even(&self, other: &Monomial) -> bool {
        self.even.iter().zip(&other.even).all(|(a, b)| a <= b)
    }

    /// Exponent of a generator given by its declaration index.
    pub fn exponent(&self, ctx: &Context, generator: usize) -> u32 {
        match ctx.slot(generator) {
            super::Slot::Even(k) => self.even[k],
            super::Slot::Odd(k) => self.odd.contains(&(k as u16)) as u32,
        }
    }

    /// Exponents in declaration order; the key used for printing.
    pub fn declared_exponents(&self, ctx: &Context) -> Vec<u32> {
        (0..ctx.generators().len()).map(|g| self.exponent(ctx, g)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn koszul_sign_of_merge() {
        let a = Monomial { even: vec![], odd: vec![1, 3] };
        let b = Monomial { even: vec![], odd: vec![0, 2] };
        // psi1 psi3 * psi0 psi2 = psi0 psi1 psi2 psi3 after three transpositions
        let (s, m) = a.mul(&b).unwrap();
        assert_eq!(m.odd, vec![0, 1, 2, 3]);
        assert_eq!(s, -1);
        assert!(a.mul(&a).is_none());
    }

    #[test]
    fn sorting_a_word() {
        let (s, m) = Monomial::from_word(vec![], &[0, 3, 1, 4, 2, 5]).unwrap();
        assert_eq!(m.odd, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(s, -1);
        assert!(Monomial::from_word(vec![], &[2, 1, 2]).is_none());
    }
}
