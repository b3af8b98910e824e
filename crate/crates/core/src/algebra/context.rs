use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u32,
    pub parity: Parity,
}

impl GeneratorSpec {
    pub fn even(name: &str, degree: u32) -> Self {
        GeneratorSpec { name: name.into(), degree, parity: Parity::Even }
    }

    pub fn odd(name: &str, degree: u32) -> Self {
        GeneratorSpec { name: name.into(), degree, parity: Parity::Odd }
    }
}

/// Where a generator lives inside a [`Monomial`](super::Monomial): even
/// generators index the exponent vector, odd ones the word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    Even(usize),
    Odd(usize),
}

/// The ordered generator list of a graded-commutative algebra.
///
/// Even and odd generators are numbered separately in declaration order.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Context {
    generators: Vec<GeneratorSpec>,
    slots: Vec<Slot>,
    even: Vec<usize>,
    odd: Vec<usize>,
}

impl Context {
    pub fn new(generators: Vec<GeneratorSpec>) -> Result<Arc<Context>, AlgebraError> {
        let mut slots = Vec::with_capacity(generators.len());
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for (i, g) in generators.iter().enumerate() {
            if !is_identifier(&g.name) {
                return Err(AlgebraError::BadGeneratorName(g.name.clone()));
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(AlgebraError::DuplicateGenerator(g.name.clone()));
            }
            match g.parity {
                Parity::Even => {
                    slots.push(Slot::Even(even.len()));
                    even.push(i);
                }
                Parity::Odd => {
                    slots.push(Slot::Odd(odd.len()));
                    odd.push(i);
                }
            }
        }
        Ok(Arc::new(Context { generators, slots, even, odd }))
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.generators
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn slot(&self, generator: usize) -> Slot {
        self.slots[generator]
    }

    pub fn even_count(&self) -> usize {
        self.even.len()
    }

    pub fn odd_count(&self) -> usize {
        self.odd.len()
    }

    /// Generator spec of the `k`-th even generator.
    pub fn even_spec(&self, k: usize) -> &GeneratorSpec {
        &self.generators[self.even[k]]
    }

    pub fn odd_spec(&self, k: usize) -> &GeneratorSpec {
        &self.generators[self.odd[k]]
    }

    pub fn even_degrees(&self) -> Vec<u32> {
        self.even.iter().map(|&i| self.generators[i].degree).collect()
    }

    /// Position of a named generator among the even generators.
    pub fn even_slot(&self, name: &str) -> Option<usize> {
        match self.slot(self.index_of(name)?) {
            Slot::Even(k) => Some(k),
            Slot::Odd(_) => None,
        }
    }

    pub fn odd_slot(&self, name: &str) -> Option<usize> {
        match self.slot(self.index_of(name)?) {
            Slot::Odd(k) => Some(k),
            Slot::Even(_) => None,
        }
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn slots_are_numbered_per_parity() {
        let ctx = Context::new(vec![
            GeneratorSpec::even("alpha", 2),
            GeneratorSpec::odd("psi1", 3),
            GeneratorSpec::even("beta", 4),
            GeneratorSpec::odd("psi2", 3),
        ])
        .unwrap();
        assert_eq!(ctx.even_slot("beta"), Some(1));
        assert_eq!(ctx.odd_slot("psi2"), Some(1));
        assert_eq!(ctx.even_slot("psi1"), None);
        assert_eq!(ctx.even_degrees(), vec![2, 4]);
    }

    #[test]
    fn rejects_duplicates_and_bad_names() {
        let dup = Context::new(vec![GeneratorSpec::even("a", 2), GeneratorSpec::even("a", 2)]);
        assert!(matches!(dup, Err(AlgebraError::DuplicateGenerator(_))));
        let bad = Context::new(vec![GeneratorSpec::even("2a", 2)]);
        assert!(matches!(bad, Err(AlgebraError::BadGeneratorName(_))));
    }
}
