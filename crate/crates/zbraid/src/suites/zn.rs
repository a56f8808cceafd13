//! Laws of the `Z^n` germ: partial product, coset lattice, normal forms.

use std::time::Instant;

use rand::Rng;
use zbraid_core::engine::{group_normal_form, monoid_normal_form, word_product, Germ, Signed};
use zbraid_core::lattice::{join, leq, meet, Coset, ZnGerm};
use zbraid_core::lex::{in_m, in_n, precedes, precedes_witness, star};
use zbraid_core::{Int, UniMatrix};

use super::gen::{self, Rng8};
use super::{Config, Report};
use crate::memo::MemoGerm;

fn random_vector(rng: &mut Rng8, n: usize) -> Vec<Int> {
    loop {
        let v: Vec<Int> = (0..n).map(|_| Int::from(rng.random_range(-5i64..=5))).collect();
        if v.iter().any(|x| x != &Int::from(0)) {
            return v;
        }
    }
}

/// `p <~ x` for `p` a lower bound of `xH` and a random coset, times a unit.
fn lower_bound(rng: &mut Rng8, x: &UniMatrix) -> zbraid_core::Result<UniMatrix> {
    let n = x.dim();
    let m = meet(&Coset::new(x), &Coset::new(&gen::unimodular(rng, n, 3)))?;
    Ok(m.rep().mul(&gen::unit(rng, n, 2)))
}

/// A triple with `(a * b) * c` defined: `ab` and `a` are successive lower
/// bounds of a random `x`.
fn composable_triple(rng: &mut Rng8, n: usize) -> zbraid_core::Result<(UniMatrix, UniMatrix, UniMatrix)> {
    let x = gen::unimodular(rng, n, 3);
    let ab = lower_bound(rng, &x)?;
    let a = lower_bound(rng, &ab)?;
    Ok((a.clone(), a.inv().mul(&ab), ab.inv().mul(&x)))
}

/// Associativity of definedness, the duality with `a^-1 w0`, invariance
/// under conjugation by `w0`, the sign-flip set identity and witnesses.
pub fn germ_laws(cfg: &Config) -> Report {
    let mut r = Report::new("germ-laws");
    let mut rng = gen::rng(cfg.seed);
    let trials = cfg.trials(10_000);
    for n in cfg.dims(&[2, 3]) {
        let w0 = UniMatrix::neg_identity(n);
        let mut defined = [0usize; 2];
        for _ in 0..trials {
            let (a, b, c) = if rng.random_bool(0.5) {
                (gen::unimodular(&mut rng, n, 3), gen::unimodular(&mut rng, n, 3), gen::unimodular(&mut rng, n, 3))
            } else {
                match composable_triple(&mut rng, n) {
                    Ok(t) => t,
                    Err(e) => {
                        r.fail(format!("meet failed while building a triple: {e}"));
                        continue;
                    }
                }
            };
            let left = star(&a, &b).and_then(|ab| star(&ab, &c));
            let right = star(&b, &c).and_then(|bc| star(&a, &bc));
            defined[0] += usize::from(left.is_some());
            r.check(left == right, || format!("(a*b)*c vs a*(b*c) for a = {a}, b = {b}, c = {c}"));

            let ab = star(&a, &b);
            defined[1] += usize::from(ab.is_some());
            let dual = precedes(&b, &a.inv().mul(&w0));
            r.check(ab.is_some() == dual, || format!("a*b defined vs b <~ a^-1 w0 for a = {a}, b = {b}"));

            let conj = |x: &UniMatrix| w0.mul(x).mul(&w0.inv());
            r.check(precedes(&a, &b) == precedes(&conj(&a), &conj(&b)), || format!("conjugation by w0 for a = {a}, b = {b}"));

            // exact answer against sampled M-set containment
            let prod = a.mul(&b);
            match precedes_witness(&a, &prod) {
                Some(x) => r.check(in_m(&a, &x) && !in_m(&prod, &x), || format!("bad witness {x:?} for a = {a}, ab = {prod}")),
                None => {
                    let ok = (0..10).all(|_| {
                        let x = random_vector(&mut rng, n);
                        !(in_m(&a, &x) && !in_m(&prod, &x))
                    });
                    r.check(ok, || format!("sampled x in M(a) \\ M(ab) though a <~ ab, a = {a}, b = {b}"));
                }
            }
        }
        for _ in 0..trials / 10 {
            let (a, b) = (gen::unimodular(&mut rng, n, 3), gen::unimodular(&mut rng, n, 3));
            let ab = a.mul(&b);
            let ok = (0..100).all(|_| {
                let x = random_vector(&mut rng, n);
                in_n(&ab, &x) == (in_n(&a, &x) ^ in_n(&b, &a.act(&x)))
            });
            r.check(ok, || format!("N(ab) = N(a) + N(b)a^-1 fails for a = {a}, b = {b}"));
        }
        r.note(format!("n = {n}: {trials} triples, (a*b)*c defined {} times, a*b defined {} times", defined[0], defined[1]));
    }
    r
}

fn random_coset(rng: &mut Rng8, n: usize) -> Coset {
    Coset::new(&gen::unimodular(rng, n, 3))
}

/// Diagonal sign matrices with negative set `s`.
fn diag(n: usize, s: u32) -> Coset {
    let signs: Vec<i64> = (0..n).map(|i| if s >> i & 1 == 1 { -1 } else { 1 }).collect();
    Coset::new(&UniMatrix::diag_signs(&signs))
}

/// Lattice identities on random cosets and the Boolean diagonal sublattice.
pub fn lattice(cfg: &Config) -> Report {
    let mut r = Report::new("lattice");
    let mut rng = gen::rng(cfg.seed);
    let trials = cfg.trials(1_000);
    for n in cfg.dims(&[2, 3]) {
        for _ in 0..trials {
            let (a, b, c) = (random_coset(&mut rng, n), random_coset(&mut rng, n), random_coset(&mut rng, n));
            let res: zbraid_core::Result<()> = (|| {
                let (jab, mab) = (join(&a, &b)?, meet(&a, &b)?);
                let ctx = || format!("a = {}, b = {}, c = {}", a.rep(), b.rep(), c.rep());
                r.check(jab == join(&b, &a)?, || format!("join not commutative: {}", ctx()));
                r.check(mab == meet(&b, &a)?, || format!("meet not commutative: {}", ctx()));
                r.check(join(&jab, &c)? == join(&a, &join(&b, &c)?)?, || format!("join not associative: {}", ctx()));
                r.check(meet(&mab, &c)? == meet(&a, &meet(&b, &c)?)?, || format!("meet not associative: {}", ctx()));
                r.check(join(&a, &a)? == a && meet(&a, &a)? == a, || format!("not idempotent: {}", ctx()));
                r.check(join(&a, &mab)? == a && meet(&a, &jab)? == a, || format!("absorption fails: {}", ctx()));
                let le = leq(&a, &b)?;
                r.check(le == (jab == b) && le == (mab == a), || format!("leq inconsistent with join/meet: {}", ctx()));
                r.check(le == precedes(a.rep(), b.rep()), || format!("leq disagrees with precedes: {}", ctx()));
                Ok(())
            })();
            if let Err(e) = res {
                r.fail(format!("error {e} on a = {}, b = {}, c = {}", a.rep(), b.rep(), c.rep()));
            }
        }
        // sign patterns: the order is inclusion of negative sets
        let subsets = 1u32 << n;
        for s in 0..subsets {
            for t in 0..subsets {
                let (ds, dt) = (diag(n, s), diag(n, t));
                let ok = join(&ds, &dt).ok() == Some(diag(n, s | t))
                    && meet(&ds, &dt).ok() == Some(diag(n, s & t))
                    && leq(&ds, &dt).ok() == Some(s & t == s);
                r.check(ok, || format!("diagonal sublattice at n = {n}, sets {s:b} and {t:b}"));
            }
        }
        r.note(format!("n = {n}: {trials} random triples, {} diagonal pairs", subsets * subsets));
    }
    r
}

/// Upper bounds dominate the join; the join of right factors stays a right
/// factor.
pub fn join_leastness(cfg: &Config) -> Report {
    let mut r = Report::new("join-leastness");
    let mut rng = gen::rng(cfg.seed);
    let trials = cfg.trials(1_000);
    for n in cfg.dims(&[2, 3]) {
        let mut bounds = 0;
        for _ in 0..trials {
            let res: zbraid_core::Result<()> = (|| {
                // random cosets filtered to upper bounds
                let (a, b) = (random_coset(&mut rng, n), random_coset(&mut rng, n));
                let j = join(&a, &b)?;
                let mut cands: Vec<Coset> = (0..4).map(|_| random_coset(&mut rng, n)).collect();
                cands.push(Coset::top(n));
                for d in cands {
                    if leq(&a, &d)? && leq(&b, &d)? {
                        bounds += 1;
                        r.check(leq(&j, &d)?, || format!("join({}, {}) not below bound {}", a.rep(), b.rep(), d.rep()));
                    }
                }
                // a common upper bound by construction: D above two of its meets
                let d = random_coset(&mut rng, n);
                let a2 = meet(&d, &random_coset(&mut rng, n))?;
                let b2 = meet(&d, &random_coset(&mut rng, n))?;
                bounds += 1;
                r.check(leq(&join(&a2, &b2)?, &d)?, || format!("join({}, {}) not below {}", a2.rep(), b2.rep(), d.rep()));

                // a*b and a*c defined => a*d defined for dH = bH v cH
                let (x, y) = (gen::unimodular(&mut rng, n, 3), gen::unimodular(&mut rng, n, 3));
                let a = meet(&Coset::new(&x), &Coset::new(&y))?.rep().clone();
                let (b, c) = (a.inv().mul(&x), a.inv().mul(&y));
                r.check(star(&a, &b).is_some() && star(&a, &c).is_some(), || format!("meet {a} is not a left factor of {x} and {y}"));
                let d = join(&Coset::new(&b), &Coset::new(&c))?.rep().clone();
                r.check(star(&a, &d).is_some(), || format!("a*d undefined for a = {a}, d = {d}"));
                Ok(())
            })();
            if let Err(e) = res {
                r.fail(format!("error {e}"));
            }
        }
        r.note(format!("n = {n}: {bounds} upper bounds tested"));
    }
    r
}

/// One random defining-relation move: merge a defined pair, split a letter
/// through a lower bound, or insert/remove a unit.
fn random_move<G: Germ<Elem = UniMatrix>>(g: &G, rng: &mut Rng8, n: usize, w: &[UniMatrix]) -> Option<Vec<UniMatrix>> {
    let len = w.len();
    match rng.random_range(0..4) {
        0 if len >= 2 => {
            let k = rng.random_range(0..len - 1);
            let ab = g.star(&w[k], &w[k + 1])?;
            Some([&w[..k], &[ab], &w[k + 2..]].concat())
        }
        1 if len >= 1 => {
            let k = rng.random_range(0..len);
            let other = gen::unimodular(rng, n, 3);
            let p = g.meet_coset(&w[k], &other).ok()?.mul(&gen::unit(rng, n, 2));
            let rest = p.inv().mul(&w[k]);
            Some([&w[..k], &[p, rest], &w[k + 1..]].concat())
        }
        2 => {
            let k = rng.random_range(0..=len);
            Some([&w[..k], &[UniMatrix::identity(n)], &w[k..]].concat())
        }
        _ => {
            let k = w.iter().position(|x| x.is_identity())?;
            Some([&w[..k], &w[k + 1..]].concat())
        }
    }
}

/// Normal forms reproduce the product, are idempotent and are invariant
/// under random relation moves.
pub fn normal_forms(cfg: &Config) -> Report {
    let mut r = Report::new("nf");
    let mut rng = gen::rng(cfg.seed);
    let trials = cfg.trials(1_000);
    let moves = 100;
    for n in cfg.dims(&[2, 3]) {
        let g = MemoGerm::new(ZnGerm::new(n));
        let w0 = UniMatrix::neg_identity(n);
        let mut applied = 0;
        for _ in 0..trials {
            let len = rng.random_range(1..=6);
            let w: Vec<UniMatrix> = (0..len).map(|_| gen::unimodular(&mut rng, n, 3)).collect();
            let prod = word_product(&g, &w);
            let nf = match monoid_normal_form(&g, &w) {
                Ok(nf) => nf,
                Err(e) => {
                    r.fail(format!("normal form failed ({e}) on {w:?}"));
                    continue;
                }
            };
            r.check(word_product(&g, &nf.letters) == prod, || format!("monoid form changes the product of {w:?}"));
            let signed: Vec<Signed<UniMatrix>> = w.iter().cloned().map(Signed::pos).collect();
            match group_normal_form(&g, &signed) {
                Ok(d) => {
                    let delta = if d.k.rem_euclid(2) == 1 { w0.clone() } else { UniMatrix::identity(n) };
                    let got = delta.mul(&word_product(&g, &d.body));
                    r.check(got == prod, || format!("Delta-form of {w:?} projects to {got}"));
                }
                Err(e) => r.fail(format!("Delta-form failed ({e}) on {w:?}")),
            }
            r.check(monoid_normal_form(&g, &nf.letters).ok().as_ref() == Some(&nf), || format!("normal form of {w:?} not idempotent"));
            let mut cur = w.clone();
            for _ in 0..moves {
                let Some(next) = random_move(&g, &mut rng, n, &cur) else { continue };
                applied += 1;
                cur = next;
                let ok = monoid_normal_form(&g, &cur).ok().as_ref() == Some(&nf);
                r.check(ok, || format!("rewrite {cur:?} of {w:?} changes the normal form"));
                if !ok {
                    break;
                }
            }
        }
        r.note(format!("n = {n}: {trials} words, {applied} relation moves applied"));
    }
    r
}

/// Wall-clock floors at n = 3.
pub fn performance(cfg: &Config) -> Report {
    let mut r = Report::new("performance");
    let mut rng = gen::rng(cfg.seed);
    let n = 3;
    let g = ZnGerm::new(n);
    let words = cfg.trials(5);
    let mut worst = 0f64;
    for _ in 0..words {
        let w: Vec<Signed<UniMatrix>> = (0..10)
            .map(|_| {
                let x = gen::unimodular(&mut rng, n, 3);
                if rng.random_bool(0.5) { Signed::neg(x) } else { Signed::pos(x) }
            })
            .collect();
        let t = Instant::now();
        let res = group_normal_form(&g, &w);
        let s = t.elapsed().as_secs_f64();
        worst = worst.max(s);
        r.check(res.is_ok() && s < 5.0, || format!("group normal form took {s:.2}s ({res:?})"));
    }
    let mut times = Vec::new();
    for _ in 0..21 {
        let (a, b) = (random_coset(&mut rng, n), random_coset(&mut rng, n));
        let t = Instant::now();
        let ok = join(&a, &b).is_ok();
        times.push(t.elapsed().as_secs_f64());
        r.check(ok, || format!("join failed on {} and {}", a.rep(), b.rep()));
    }
    times.sort_by(f64::total_cmp);
    let median = times[times.len() / 2];
    r.check(median < 2.0, || format!("median join time {median:.3}s"));
    r.note(format!("slowest length-10 group normal form {worst:.3}s, median join {:.4}s", median));
    r
}
