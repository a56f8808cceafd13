//! Words over `S`, the union of the groups `H_i`, each letter tagged with a
//! type `i`.

use alloc::format;
use alloc::vec::Vec;

use crate::engine::{is_minimal, word_product};
use crate::error::{Error, Result};
use crate::lattice::ZnGerm;
use crate::matrix::UniMatrix;

use super::shape::in_h_i;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SLetter {
    pub elem: UniMatrix,
    pub ty: usize,
}

impl SLetter {
    pub fn new(elem: UniMatrix, ty: usize) -> Result<Self> {
        if !in_h_i(&elem, ty) {
            return Err(Error::Precondition(format!("letter {elem} not in H_{ty}")));
        }
        Ok(SLetter { elem, ty })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SWord {
    pub n: usize,
    pub letters: Vec<SLetter>,
}

impl SWord {
    pub fn new(n: usize, letters: Vec<SLetter>) -> Result<Self> {
        for l in &letters {
            if l.elem.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: l.elem.dim() });
            }
        }
        Ok(SWord { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        SWord { n, letters: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn elems(&self) -> Vec<UniMatrix> {
        self.letters.iter().map(|l| l.elem.clone()).collect()
    }

    pub fn type_word(&self) -> Vec<usize> {
        self.letters.iter().map(|l| l.ty).collect()
    }

    pub fn product(&self) -> UniMatrix {
        word_product(&ZnGerm::new(self.n), &self.elems())
    }

    pub fn is_minimal(&self) -> bool {
        is_minimal(&ZnGerm::new(self.n), &self.elems())
    }
}
