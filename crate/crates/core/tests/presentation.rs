use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zbraid_core::engine::monoid_normal_form;
use zbraid_core::lattice::ZnGerm;
use num_traits::Zero;
use zbraid_core::presentation::shape::{embed_block, shape_of, split_g_h};
use zbraid_core::presentation::*;
use zbraid_core::{Int, UniMatrix};

fn rblock(rng: &mut ChaCha8Rng) -> [[Int; 2]; 2] {
    loop {
        let v: Vec<i64> = (0..4).map(|_| rng.random_range(-3..=3)).collect();
        if (v[0] * v[3] - v[1] * v[2]).abs() == 1 {
            return [[v[0].into(), v[1].into()], [v[2].into(), v[3].into()]];
        }
    }
}

fn rmat(rng: &mut ChaCha8Rng, n: usize, steps: usize) -> UniMatrix {
    (0..steps).fold(UniMatrix::identity(n), |m, _| {
        let i = rng.random_range(1..n);
        m.mul(&embed_block(n, i, rblock(rng)).unwrap())
    })
}

/// A minimal word grown letter by letter from random blocks.
fn rword(rng: &mut ChaCha8Rng, n: usize, len: usize) -> SWord {
    let mut ls: Vec<SLetter> = Vec::new();
    while ls.len() < len {
        let i = rng.random_range(1..n);
        let mut t = ls.clone();
        t.push(SLetter::new(embed_block(n, i, rblock(rng)).unwrap(), i).unwrap());
        if SWord::new(n, t.clone()).unwrap().is_minimal() {
            ls = t;
        }
    }
    SWord::new(n, ls).unwrap()
}

fn check_path(w: &SWord, steps: &[SStep]) {
    let g = ZnGerm::new(w.n);
    let nf = monoid_normal_form(&g, &w.elems()).unwrap();
    let mut cur = w.clone();
    for s in steps {
        cur = s_move(&cur, s).unwrap();
        assert_eq!(cur.product(), w.product());
        assert_eq!(monoid_normal_form(&g, &cur.elems()).unwrap(), nf);
    }
}

#[test]
fn transport_to_standard_type() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in [3usize, 4] {
        for _ in 0..4 {
            let x = rmat(&mut rng, n, 3);
            let w = decompose(&x).unwrap();
            let steps = t_rewrite_to_d1(n, &w.type_word()).unwrap();
            let t = transport_along(&w, &steps, DEFAULT_DEPTH).unwrap();
            assert_eq!(t.word.product(), x);
            assert_eq!(t.word.type_word(), d_word(n, 1));
            let moves = t.moves.expect("derivation found");
            assert_eq!(replay_s(&w, &moves).unwrap(), t.word);
        }
    }
}

#[test]
fn connect_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in [2usize, 3] {
        for _ in 0..6 {
            let w1 = rword(&mut rng, n, 3);
            let w2 = decompose(&w1.product()).unwrap();
            let steps = connect(&w1, &w2, DEFAULT_DEPTH).unwrap();
            assert_eq!(replay_s(&w1, &steps).unwrap(), w2);
            check_path(&w1, &steps);
        }
    }
}

#[test]
fn connect_shuffled_h_placement() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..10 {
        let x = rmat(&mut rng, 2, 4);
        let w1 = decompose(&x).unwrap();
        if w1.len() < 2 {
            continue;
        }
        // move the H part of the first letter into the second
        let (g, h) = split_g_h(&w1.letters[0].elem, 1).unwrap();
        let mut w2 = w1.clone();
        w2.letters[0].elem = g.mul(&UniMatrix::from_i64(&[&[1, 1], &[0, 1]]).unwrap());
        let back = UniMatrix::from_i64(&[&[1, -1], &[0, 1]]).unwrap();
        w2.letters[1].elem = back.mul(&h).mul(&w1.letters[1].elem);
        assert_eq!(w2.product(), x);
        if !w2.is_minimal() {
            continue;
        }
        let steps = connect(&w1, &w2, DEFAULT_DEPTH).unwrap();
        assert_eq!(replay_s(&w1, &steps).unwrap(), w2);
    }
}

#[test]
fn connect_factor_step_ambiguity() {
    // x = y z = (y s_3)(s_3 z): both factorizations killing the (3, 1) entry
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let s3 = UniMatrix::sign_flip(3, 3);
    let mut found = 0;
    for _ in 0..300 {
        let x = rmat(&mut rng, 3, 3);
        if x.get(2, 0).is_zero() {
            continue;
        }
        let (y, z) = factor_step(&x, 2, 1, &shape_of(&x).without(3, 1)).unwrap();
        let word = |y: UniMatrix, z: &UniMatrix| {
            let mut ls = vec![SLetter::new(y, 2).unwrap()];
            ls.extend(decompose(z).unwrap().letters);
            SWord::new(3, ls).unwrap()
        };
        let (a, b) = (word(y.clone(), &z), word(y.mul(&s3), &s3.mul(&z)));
        if !(a.is_minimal() && b.is_minimal()) {
            continue;
        }
        let steps = connect(&a, &b, DEFAULT_DEPTH).unwrap();
        assert_eq!(replay_s(&a, &steps).unwrap(), b);
        check_path(&a, &steps);
        found += 1;
        if found == 3 {
            break;
        }
    }
    assert!(found > 0);
}
