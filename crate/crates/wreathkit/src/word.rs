//! Tensor words: formal products of named generating objects.
//!
//! Objects of the ambient category are words `x₁⊗…⊗xₙ` in a set of generators,
//! each generator carrying a dimension. The empty word is the tensor unit.
//! A word of dimensions `d₁,…,dₙ` has basis indexed by tuples
//! `(i₁,…,iₙ)`, `0 ≤ iₖ < dₖ`, flattened in mixed radix with the **leftmost
//! factor most significant**.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A named generating object with a fixed finite dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub dim: usize,
}

impl Generator {
    pub fn new(name: impl Into<String>, dim: usize) -> Self {
        Generator { name: name.into(), dim }
    }
}

/// A tensor word of generators; the empty word is the unit object `I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ObjWord {
    factors: Vec<Generator>,
}

impl ObjWord {
    /// The tensor unit `I`.
    pub fn unit() -> Self {
        ObjWord { factors: Vec::new() }
    }

    /// A single-letter word.
    pub fn gen(g: &Generator) -> Self {
        ObjWord { factors: vec![g.clone()] }
    }

    pub fn from_factors(factors: Vec<Generator>) -> Self {
        ObjWord { factors }
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total dimension: the product of the factor dimensions (1 for `I`).
    pub fn dim(&self) -> usize {
        self.factors.iter().map(|g| g.dim).product()
    }

    /// Dimensions of the individual factors, left to right.
    pub fn dims(&self) -> Vec<usize> {
        self.factors.iter().map(|g| g.dim).collect()
    }

    /// Concatenation `self ⊗ other`.
    pub fn tensor(&self, other: &ObjWord) -> ObjWord {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        ObjWord { factors }
    }

    /// If `self = prefix ⊗ rest`, return `rest`.
    pub fn strip_prefix(&self, prefix: &ObjWord) -> Option<ObjWord> {
        let rest = self.factors.strip_prefix(prefix.factors.as_slice())?;
        Some(ObjWord { factors: rest.to_vec() })
    }

    /// Decode a flat basis index into one index per factor,
    /// leftmost factor most significant.
    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        debug_assert!(index < self.dim());
        let mut out = vec![0; self.factors.len()];
        for (k, g) in self.factors.iter().enumerate().rev() {
            out[k] = index % g.dim;
            index /= g.dim;
        }
        out
    }

    /// Encode per-factor indices back into a flat basis index.
    pub fn encode(&self, indices: &[usize]) -> usize {
        debug_assert_eq!(indices.len(), self.factors.len());
        let mut index = 0;
        for (g, &i) in self.factors.iter().zip(indices) {
            debug_assert!(i < g.dim);
            index = index * g.dim + i;
        }
        index
    }
}

impl fmt::Display for ObjWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "I");
        }
        for (k, g) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "⊗")?;
            }
            write!(f, "{}", g.name)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_word_has_dimension_one() {
        let i = ObjWord::unit();
        assert_eq!(i.dim(), 1);
        assert_eq!(i.decode(0), Vec::<usize>::new());
        assert_eq!(i.encode(&[]), 0);
        assert_eq!(i.to_string(), "I");
    }

    #[test]
    fn mixed_radix_leftmost_most_significant() {
        let a = Generator::new("a", 2);
        let b = Generator::new("b", 3);
        let w = ObjWord::gen(&a).tensor(&ObjWord::gen(&b));
        assert_eq!(w.dim(), 6);
        // index = i_a * 3 + i_b
        assert_eq!(w.decode(0), vec![0, 0]);
        assert_eq!(w.decode(2), vec![0, 2]);
        assert_eq!(w.decode(3), vec![1, 0]);
        assert_eq!(w.decode(5), vec![1, 2]);
        for i in 0..6 {
            assert_eq!(w.encode(&w.decode(i)), i);
        }
        assert_eq!(w.to_string(), "a⊗b");
    }

    #[test]
    fn strip_prefix_splits_words() {
        let a = Generator::new("a", 2);
        let b = Generator::new("b", 3);
        let ab = ObjWord::gen(&a).tensor(&ObjWord::gen(&b));
        assert_eq!(ab.strip_prefix(&ObjWord::gen(&a)), Some(ObjWord::gen(&b)));
        assert_eq!(ab.strip_prefix(&ObjWord::unit()), Some(ab.clone()));
        assert_eq!(ab.strip_prefix(&ObjWord::gen(&b)), None);
    }
}
