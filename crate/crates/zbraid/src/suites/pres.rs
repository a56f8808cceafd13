//! The presentation pipeline: factorization steps, decompositions, type
//! rewriting, transport and connecting derivations.

use rand::Rng;
use zbraid_core::engine::{is_minimal, monoid_normal_form, MonoidNF};
use zbraid_core::lattice::ZnGerm;
use zbraid_core::lex::precedes;
use zbraid_core::presentation::{
    connect as connect_words, d_word, decompose, factor_step, in_g_i, in_ga, lemma_derivation, replay_s, replay_t,
    s_move, shape_of, t_rewrite_to_d1, transport, Shape, SStep, SWord,
};
use zbraid_core::{Error, UniMatrix};

use super::gen::{self, Rng8};
use super::{Config, Report};
use crate::memo::MemoGerm;

/// Whether `factor_step(x, i, j, a)` should accept, decided from the shape
/// conditions directly.
fn factor_step_applies(x: &UniMatrix, i: usize, j: usize, a: &Shape) -> bool {
    let n = x.dim();
    if i == 0 || i >= n || j == 0 || j > n || !a.is_valid() || a.contains(i + 1, j) {
        return false;
    }
    let c = a.with(i + 1, j);
    c.is_valid() && !a.contains(i, j.wrapping_sub(1)) && !a.contains(i + 2, j) && shape_of(x).is_subset(&c)
}

fn factor_steps(r: &mut Report, rng: &mut Rng8, instances: usize) {
    let mut valid = 0;
    let mut rejected = 0;
    while valid < instances {
        let n = rng.random_range(2..=4);
        let steps = rng.random_range(1..=4);
        let x = gen::bounded_product(rng, n, steps);
        // all shapes between shape_of(x) and the full square are candidates for C
        let c = shape_of(&x);
        let extra: Vec<(usize, usize)> = (0..rng.random_range(0..=2)).map(|_| (rng.random_range(1..=n), rng.random_range(1..=n))).collect();
        let c = Shape::closure(n, &[c.points(), extra].concat());
        let (i, j) = (rng.random_range(1..n), rng.random_range(1..=n));
        let a = c.without(i + 1, j);
        let applies = factor_step_applies(&x, i, j, &a);
        match factor_step(&x, i, j, &a) {
            Ok((y, z)) => {
                valid += 1;
                r.check(applies, || format!("factor_step accepted an invalid instance x = {x}, ({i}, {j})"));
                let ok = y.mul(&z) == x && in_g_i(&y, i) && in_ga(&z, &a) && precedes(&y, &x);
                r.check(ok, || format!("factor_step postcondition on x = {x}, ({i}, {j}): y = {y}, z = {z}"));
            }
            Err(Error::Precondition(_)) => {
                rejected += 1;
                r.check(!applies, || format!("factor_step rejected a valid instance x = {x}, ({i}, {j})"));
            }
            Err(e) => r.fail(format!("factor_step failed ({e}) on x = {x}, ({i}, {j})")),
        }
    }
    r.note(format!("factor_step: {valid} valid instances, {rejected} rejected"));
}

fn decompositions(r: &mut Report, rng: &mut Rng8, trials: usize) {
    for _ in 0..trials {
        let n = rng.random_range(2..=4);
        let steps = rng.random_range(0..=5);
        let x = gen::bounded_product(rng, n, steps);
        match decompose(&x) {
            Ok(w) => {
                let g = ZnGerm::new(n);
                let ok = w.product() == x
                    && is_minimal(&g, &w.elems())
                    && w.letters.iter().all(|l| l.ty >= 1 && l.ty < n);
                r.check(ok, || format!("decomposition of {x} is not a minimal word for it"));
            }
            Err(e) => r.fail(format!("decompose failed ({e}) on {x}")),
        }
    }
    r.note(format!("decompose: {trials} products"));
}

fn all_words(alphabet: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..len {
        layer = layer.iter().flat_map(|w: &Vec<usize>| (1..=alphabet).map(move |a| [w.as_slice(), &[a]].concat())).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn type_rewriting(r: &mut Report, rng: &mut Rng8, trials: usize) {
    let check = |r: &mut Report, n: usize, t: &[usize]| match t_rewrite_to_d1(n, t) {
        Ok(steps) => {
            let end = replay_t(n, t, &steps);
            r.check(end.as_ref().ok() == Some(&d_word(n, 1)), || format!("derivation from {t:?} (n = {n}) ends at {end:?}"));
        }
        Err(e) => r.fail(format!("t_rewrite_to_d1 failed ({e}) on {t:?}, n = {n}")),
    };
    let words = all_words(2, 6);
    for t in &words {
        check(r, 3, t);
    }
    for _ in 0..trials {
        let len = rng.random_range(0..=10);
        let t: Vec<usize> = (0..len).map(|_| rng.random_range(1..=3)).collect();
        check(r, 4, &t);
    }
    r.note(format!("type rewriting: {} words at n = 3, {trials} at n = 4", words.len()));

    for n in 2..=5 {
        for k in 1..n {
            let res = lemma_derivation(n, k).and_then(|(start, steps)| replay_t(n, &start, &steps));
            let expect: Vec<usize> = (1..=k).rev().chain((2..=k).rev()).collect();
            r.check(res.as_ref().ok() == Some(&expect), || format!("lemma derivation for k = {k}, n = {n}: {res:?}"));
        }
    }
}

/// Transport each word along its rewrite to `D_1` one step at a time; the
/// engine normal form must not change.
fn transports(r: &mut Report, rng: &mut Rng8, trials: &[(usize, usize)], depth: usize) {
    for &(n, count) in trials {
        let g = MemoGerm::new(ZnGerm::new(n));
        let (mut steps_done, mut unproved) = (0, 0);
        for _ in 0..count {
            let steps = rng.random_range(1..=3);
        let x = gen::bounded_product(rng, n, steps);
            let res: zbraid_core::Result<()> = (|| {
                let mut w = decompose(&x)?;
                let nf = monoid_normal_form(&g, &w.elems())?;
                for step in t_rewrite_to_d1(n, &w.type_word())? {
                    let t = transport(&w, &step, depth)?;
                    steps_done += 1;
                    match &t.moves {
                        Some(m) => {
                            let replayed = replay_s(&w, m)?;
                            r.check(replayed == t.word, || format!("transport moves do not replay at {step:?}"));
                        }
                        None => unproved += 1,
                    }
                    w = t.word;
                    let same = w.product() == x && w.is_minimal() && monoid_normal_form(&g, &w.elems())? == nf;
                    r.check(same, || format!("transport {step:?} changed the normal form of {x}"));
                }
                r.check(w.type_word() == d_word(n, 1), || format!("transport of {x} did not reach D_1"));
                Ok(())
            })();
            if let Err(e) = res {
                r.fail(format!("transport failed ({e}) on {x}"));
            }
        }
        r.note(format!("transport n = {n}: {count} words, {steps_done} steps, {unproved} without an explicit derivation"));
    }
}

/// Factorization steps, decompositions, type rewriting and transport.
pub fn pipeline(cfg: &Config) -> Report {
    let mut r = Report::new("presentation");
    let mut rng = gen::rng(cfg.seed);
    factor_steps(&mut r, &mut rng, cfg.trials(10_000));
    decompositions(&mut r, &mut rng, cfg.trials(1_000));
    type_rewriting(&mut r, &mut rng, cfg.trials(1_000));
    let sizes: Vec<(usize, usize)> =
        cfg.dims(&[2, 3, 4]).into_iter().map(|n| (n, cfg.trials.map_or(if n <= 3 { 50 } else { 10 }, |t| t.min(50)))).collect();
    transports(&mut r, &mut rng, &sizes, cfg.depth);
    r
}

fn check_derivation<G: zbraid_core::engine::Germ<Elem = UniMatrix>>(
    r: &mut Report,
    g: &G,
    w1: &SWord,
    w2: &SWord,
    steps: &[SStep],
    nf: &MonoidNF<UniMatrix>,
) {
    let x = w1.product();
    let mut cur = w1.clone();
    for s in steps {
        match s_move(&cur, s) {
            Ok(next) => cur = next,
            Err(e) => {
                r.fail(format!("derivation step {s:?} rejected: {e}"));
                return;
            }
        }
        let same = cur.product() == x && monoid_normal_form(g, &cur.elems()).ok().as_ref() == Some(nf);
        r.check(same, || format!("intermediate word changes product or normal form of {x}"));
    }
    r.check(&cur == w2, || format!("derivation for {x} ends at the wrong word"));
}

/// Derivations between independently built minimal words with equal
/// products.
pub fn connect(cfg: &Config) -> Report {
    let mut r = Report::new("connect");
    let mut rng = gen::rng(cfg.seed);
    let pairs = cfg.trials(200);
    for n in cfg.dims(&[2, 3]) {
        let g = MemoGerm::new(ZnGerm::new(n));
        let (mut exceeded, mut moves) = (0, 0);
        for _ in 0..pairs {
            let len = rng.random_range(1..=3);
            let w1 = gen::minimal_sword(&mut rng, n, len, true);
            let res: zbraid_core::Result<()> = (|| {
                let w2 = decompose(&w1.product())?;
                let nf = monoid_normal_form(&g, &w1.elems())?;
                match connect_words(&w1, &w2, cfg.depth) {
                    Ok(steps) => {
                        moves += steps.len();
                        check_derivation(&mut r, &g, &w1, &w2, &steps, &nf);
                    }
                    Err(Error::DepthExceeded) => exceeded += 1,
                    Err(e) => return Err(e),
                }
                Ok(())
            })();
            if let Err(e) = res {
                r.fail(format!("connect failed ({e}) on {:?}", w1.elems()));
            }
        }
        if n == 2 {
            r.check(exceeded == 0, || format!("{exceeded} pairs exceeded the depth bound at n = 2"));
        }
        r.note(format!("n = {n}: {pairs} pairs, {moves} moves, depth exceeded on {exceeded}"));
    }
    r
}
