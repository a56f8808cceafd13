//! Random inputs for the suites.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use zbraid_core::presentation::shape::embed_block;
use zbraid_core::presentation::{SLetter, SWord};
use zbraid_core::{Int, UniMatrix};

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    rand::SeedableRng::seed_from_u64(seed)
}

/// A unimodular matrix with entries in `[-bound, bound]`, by rejection.
pub fn unimodular(rng: &mut Rng8, n: usize, bound: i64) -> UniMatrix {
    loop {
        let rows: Vec<Vec<Int>> = (0..n).map(|_| (0..n).map(|_| Int::from(rng.random_range(-bound..=bound))).collect()).collect();
        if let Ok(m) = UniMatrix::from_rows(rows) {
            return m;
        }
    }
}

pub fn block(rng: &mut Rng8, bound: i64) -> [[Int; 2]; 2] {
    loop {
        let v: Vec<i64> = (0..4).map(|_| rng.random_range(-bound..=bound)).collect();
        if (v[0] * v[3] - v[1] * v[2]).abs() == 1 {
            return [[v[0].into(), v[1].into()], [v[2].into(), v[3].into()]];
        }
    }
}

/// A random element of `H` with entries in `[-bound, bound]`.
pub fn unit(rng: &mut Rng8, n: usize, bound: i64) -> UniMatrix {
    let mut rows = UniMatrix::identity(n).rows();
    for (i, row) in rows.iter_mut().enumerate() {
        for x in row.iter_mut().skip(i + 1) {
            *x = Int::from(rng.random_range(-bound..=bound));
        }
    }
    UniMatrix::from_rows(rows).expect("unitriangular")
}

/// A product of `steps` random `G_i` blocks.
pub fn bounded_product(rng: &mut Rng8, n: usize, steps: usize) -> UniMatrix {
    (0..steps).fold(UniMatrix::identity(n), |m, _| {
        let i = rng.random_range(1..n);
        m.mul(&embed_block(n, i, block(rng, 3)).expect("block index in range"))
    })
}

/// A minimal S-word grown from random `G_i` letters, optionally with random
/// `H` factors, rejecting letters that break minimality.
pub fn minimal_sword(rng: &mut Rng8, n: usize, len: usize, with_h: bool) -> SWord {
    let mut letters: Vec<SLetter> = Vec::new();
    let mut attempts = 0;
    while letters.len() < len && attempts < 50 * len {
        attempts += 1;
        let i = rng.random_range(1..n);
        let mut g = embed_block(n, i, block(rng, 3)).expect("block index in range");
        if with_h && rng.random_bool(0.5) {
            let h = unit(rng, n, 2);
            g = if rng.random_bool(0.5) { g.mul(&h) } else { h.mul(&g) };
        }
        let Ok(l) = SLetter::new(g.clone(), i) else { continue };
        let mut t = letters.clone();
        t.push(l);
        if (SWord { n, letters: t.clone() }).is_minimal() {
            letters = t;
        }
    }
    SWord { n, letters }
}
