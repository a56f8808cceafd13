//! Moving a minimal word along a rewriting step of its type word.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{ext_gcd_bezout, Int};
use crate::error::{Error, Result};
use crate::lex::precedes;
use crate::matrix::UniMatrix;

use super::shape::{factor_step, in_h_i, split_g_h, split_h_g, Shape};
use super::smove::{SDeriv, SStep};
use super::sword::{SLetter, SWord};
use super::tword::{TRule, TStep};

/// Default coefficient bound for the search in the braid case.
pub const DEFAULT_DEPTH: usize = 2;

/// Result of a transport: a minimal word of the new type with the same
/// product, and the (S0)-(S3) derivation reaching it when one was found.
#[derive(Clone, Debug)]
pub struct Transported {
    pub word: SWord,
    pub moves: Option<Vec<SStep>>,
}

type M3 = [[Int; 3]; 3];

fn local(g: &UniMatrix, i: usize) -> M3 {
    core::array::from_fn(|r| core::array::from_fn(|c| g.get(i - 1 + r, i - 1 + c).clone()))
}

fn embed3(n: usize, i: usize, m: &M3) -> UniMatrix {
    let mut rows = UniMatrix::identity(n).rows();
    for r in 0..3 {
        for c in 0..3 {
            rows[i - 1 + r][i - 1 + c] = m[r][c].clone();
        }
    }
    UniMatrix::from_rows(rows).expect("unimodular block")
}

fn m3(rows: [[i64; 3]; 3]) -> M3 {
    rows.map(|r| r.map(Int::from))
}

fn det2(a: &Int, b: &Int, c: &Int, d: &Int) -> Int {
    a * d - b * c
}

fn unit(v: &Int) -> bool {
    v.abs().is_one()
}

/// All ways (up to small coefficient choices) of writing the local block `m`
/// as `c1 c2 c3` with `c1, c3` in `G_2` and `c2` in `G_1`.
fn g2g1g2(m: &M3, bound: i64) -> Vec<[M3; 3]> {
    let mut out = Vec::new();
    let (m21, m31) = (&m[1][0], &m[2][0]);
    let g = m21.gcd(m31);
    let mut lm: Vec<(Int, Int)> = Vec::new();
    if g.is_zero() {
        for a in -bound..=bound {
            for b in -bound..=bound {
                if Int::from(a).gcd(&Int::from(b)).is_one() {
                    lm.push((a.into(), b.into()));
                }
            }
        }
    } else {
        let v = (m31 / &g, -(m21 / &g));
        lm.push((-v.0.clone(), -v.1.clone()));
        lm.push(v);
    }
    let r1 = (&m[0][1], &m[0][2]);
    let (d1, d2) = (det2(r1.0, r1.1, &m[1][1], &m[1][2]), det2(r1.0, r1.1, &m[2][1], &m[2][2]));
    for (lam, mu) in lm {
        let mut kn: Vec<(Int, Int)> = Vec::new();
        if d1.is_zero() && d2.is_zero() {
            let (_, c, d) = match ext_gcd_bezout(&mu, &lam) {
                Ok(x) => x,
                Err(_) => continue,
            };
            // mu*d - lam*c = 1: (kappa, nu) = (d, c)
            for t in -bound..=bound {
                let (k0, n0) = (&d + &lam * t, &c + &mu * t);
                kn.push((-k0.clone(), -n0.clone()));
                kn.push((k0, n0));
            }
        } else {
            let h = d1.gcd(&d2);
            let v = (&d2 / &h, -(&d1 / &h));
            kn.push((-v.0.clone(), -v.1.clone()));
            kn.push(v);
        }
        for (k, nu) in kn {
            let det = &k * &mu - &nu * &lam;
            if !unit(&det) {
                continue;
            }
            // B^-1 = [[k, nu], [lam, mu]]
            let binv = m3([[1, 0, 0], [0, 0, 0], [0, 0, 0]]);
            let mut binv = binv;
            binv[1][1] = k.clone();
            binv[1][2] = nu.clone();
            binv[2][1] = lam.clone();
            binv[2][2] = mu.clone();
            let r = mul3(&binv, m);
            if !r[2][0].is_zero() {
                continue;
            }
            let c1 = inv3(&binv);
            for (beta, q) in rank_one(&r) {
                let p = [[r[0][0].clone(), beta.0.clone()], [r[1][0].clone(), beta.1.clone()]];
                let qm = [[q.0.clone(), q.1.clone()], [r[2][1].clone(), r[2][2].clone()]];
                if !unit(&det2(&p[0][0], &p[0][1], &p[1][0], &p[1][1])) || !unit(&det2(&qm[0][0], &qm[0][1], &qm[1][0], &qm[1][1])) {
                    continue;
                }
                let mut c2 = m3([[0, 0, 0], [0, 0, 0], [0, 0, 1]]);
                let mut c3 = m3([[1, 0, 0], [0, 0, 0], [0, 0, 0]]);
                for a in 0..2 {
                    for b in 0..2 {
                        c2[a][b] = p[a][b].clone();
                        c3[a + 1][b + 1] = qm[a][b].clone();
                    }
                }
                if mul3(&mul3(&c1, &c2), &c3) == *m {
                    out.push([c1.clone(), c2, c3]);
                }
            }
        }
    }
    out
}

/// Factorizations `N = beta q^T` of the upper right 2x2 block, `q` primitive.
fn rank_one(r: &M3) -> Vec<((Int, Int), (Int, Int))> {
    let rows = [(&r[0][1], &r[0][2]), (&r[1][1], &r[1][2])];
    if !det2(rows[0].0, rows[0].1, rows[1].0, rows[1].1).is_zero() {
        return Vec::new();
    }
    let Some(nz) = rows.iter().find(|(a, b)| !a.is_zero() || !b.is_zero()) else { return Vec::new() };
    let g = nz.0.gcd(nz.1);
    let q = (nz.0 / &g, nz.1 / &g);
    let coef = |row: &(&Int, &Int)| if !q.0.is_zero() { row.0 / &q.0 } else { row.1 / &q.1 };
    let beta = (coef(&rows[0]), coef(&rows[1]));
    let neg = ((-beta.0.clone(), -beta.1.clone()), (-q.0.clone(), -q.1.clone()));
    alloc::vec![(beta, q), neg]
}

fn mul3(a: &M3, b: &M3) -> M3 {
    core::array::from_fn(|r| core::array::from_fn(|c| (0..3).fold(Int::zero(), |s, k| s + &a[r][k] * &b[k][c])))
}

fn inv3(a: &M3) -> M3 {
    let g = UniMatrix::from_rows(a.iter().map(|r| r.to_vec()).collect()).expect("unimodular");
    local(&g.inv(), 1)
}

fn star_chain(xs: &[UniMatrix]) -> bool {
    let mut acc = xs[0].clone();
    for x in &xs[1..] {
        let p = acc.mul(x);
        if !precedes(&acc, &p) {
            return false;
        }
        acc = p;
    }
    true
}

fn shear(n: usize, i: usize, j: usize, k: i64) -> UniMatrix {
    let mut rows = UniMatrix::identity(n).rows();
    rows[i - 1][j - 1] = Int::from(k);
    UniMatrix::from_rows(rows).expect("unimodular")
}

/// Coefficient tuples with entries in `[-bound, bound]`, smallest first.
fn small_tuples(len: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut all: Vec<Vec<i64>> = alloc::vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(all.len() * (2 * bound as usize + 1));
        for t in &all {
            for v in -bound..=bound {
                let mut u = t.clone();
                u.push(v);
                next.push(u);
            }
        }
        all = next;
    }
    all.sort_by_key(|t| (t.iter().map(|x| x.abs()).max().unwrap_or(0), t.iter().map(|x| x.abs()).sum::<i64>()));
    all
}

struct BraidPlan {
    p0: UniMatrix,
    b: [UniMatrix; 3],
    c: [UniMatrix; 3],
}

fn plan_braid(u: [&UniMatrix; 3], i: usize, bound: i64) -> Option<BraidPlan> {
    let n = u[0].dim();
    let j = i + 1;
    for t in small_tuples(6, bound) {
        let p0 = embed3(n, i, &m3([[1, t[0], t[1]], [0, 1, t[2]], [0, 0, 1]]));
        let ty = [i, j, i];
        let sh = [shear(n, i, i + 1, t[3]), shear(n, j, j + 1, t[4]), shear(n, i, i + 1, t[5])];
        let mut carry = p0.clone();
        let mut b: Vec<UniMatrix> = Vec::with_capacity(3);
        for k in 0..3 {
            let x = carry.mul(u[k]);
            let (g, _) = split_g_h(&x, ty[k]).ok()?;
            let bk = g.mul(&sh[k]);
            carry = bk.inv().mul(&x);
            b.push(bk);
        }
        let mb = b[0].mul(&b[1]).mul(&b[2]);
        for c in g2g1g2(&local(&mb, i), bound) {
            let c = c.map(|x| embed3(n, i, &x));
            if star_chain(&b) && star_chain(&c) {
                return Some(BraidPlan { p0, b: [b[0].clone(), b[1].clone(), b[2].clone()], c });
            }
        }
    }
    None
}

/// Type `(i+1, i, i+1)` word with the same product, from three factor steps;
/// no derivation is attempted.
fn braid_fallback(u: [&UniMatrix; 3], i: usize) -> Result<[SLetter; 3]> {
    let n = u[0].dim();
    let j = i + 1;
    let x = u[0].mul(u[1]).mul(u[2]);
    let (b1, r1) = split_g_h(u[0], i)?;
    let (b2, r2) = split_g_h(&r1.mul(u[1]), j)?;
    let (b3, r3) = split_g_h(&r2.mul(u[2]), i)?;
    let m = local(&b1.mul(&b2).mul(&b3), i);
    let l = |g: &M3| UniMatrix::from_rows(g.iter().map(|r| r.to_vec()).collect()).expect("unimodular");
    let full = Shape::closure(3, &[(3, 1)]);
    let (y1, z1) = factor_step(&l(&m), 2, 1, &full.without(3, 1))?;
    let a2 = full.without(3, 1).without(2, 1);
    let (y2, z2) = factor_step(&z1, 1, 1, &a2)?;
    let (y3, mut z3) = factor_step(&z2, 2, 2, &Shape::minimal(3))?;
    let mut y2 = y2;
    if z3.get(0, 0).is_negative() {
        let s1 = UniMatrix::sign_flip(3, 1);
        y2 = y2.mul(&s1);
        z3 = s1.mul(&z3);
    }
    let e = |g: &UniMatrix| embed3(n, i, &local(g, 1));
    let c1 = e(&y1);
    let c2 = e(&y2);
    let c3 = e(&y3.mul(&z3)).mul(&r3);
    debug_assert_eq!(c1.mul(&c2).mul(&c3), x);
    Ok([SLetter::new(c1, j)?, SLetter::new(c2, i)?, SLetter::new(c3, j)?])
}

/// Carry the minimal word `w` along one step of its type word.
pub fn transport(w: &SWord, step: &TStep, depth: usize) -> Result<Transported> {
    if !w.is_minimal() {
        return Err(Error::NotMinimal);
    }
    let p = step.pos;
    let ty = |k: usize| w.letters.get(p + k).map(|l| l.ty);
    let mut d = SDeriv::new(w.clone());
    match step.rule {
        TRule::T0 => d.insert_unit(p, step.letter)?,
        TRule::T1 => {
            let i = ty(0).ok_or(Error::InapplicableMove("T1: position".into()))?;
            if ty(1) != Some(i) {
                return Err(Error::InapplicableMove("T1: types differ".into()));
            }
            d.merge(p, i)?;
        }
        TRule::T2 => {
            let (Some(i), Some(j)) = (ty(0), ty(1)) else { return Err(Error::InapplicableMove("T2: position".into())) };
            if i.abs_diff(j) <= 1 {
                return Err(Error::InapplicableMove("T2: types not distant".into()));
            }
            let (hx, _) = split_h_g(&w.letters[p].elem, i)?;
            let (b, hy) = split_g_h(&w.letters[p + 1].elem, j)?;
            let mut q = p;
            if !hx.is_identity() {
                d.split(p, hx.clone(), (i, i))?;
                q += 1;
            }
            if !hy.is_identity() {
                d.split(q + 1, b, (j, j))?;
            }
            d.swap(q)?;
            if !hx.is_identity() {
                d.merge(p, j)?;
            }
            if !hy.is_identity() {
                d.merge(p + 1, i)?;
            }
        }
        TRule::T3 => {
            let (Some(i), Some(j), Some(k)) = (ty(0), ty(1), ty(2)) else {
                return Err(Error::InapplicableMove("T3: position".into()));
            };
            if i != k || j != i + 1 {
                return Err(Error::InapplicableMove("T3: types not (i, i+1, i)".into()));
            }
            let u = [&w.letters[p].elem, &w.letters[p + 1].elem, &w.letters[p + 2].elem];
            let Some(plan) = plan_braid(u, i, depth as i64) else {
                let letters = braid_fallback(u, i)?;
                let mut out = w.clone();
                out.letters.splice(p..p + 3, letters);
                if !out.is_minimal() {
                    return Err(Error::GermBreach("transported word not minimal"));
                }
                return Ok(Transported { word: out, moves: None });
            };
            let mut q = p;
            if !plan.p0.is_identity() {
                d.split(p, plan.p0.inv(), (i, i))?;
                q += 1;
            }
            d.split(q, plan.b[0].clone(), (i, i))?;
            d.merge(q + 1, j)?;
            d.split(q + 1, plan.b[1].clone(), (j, j))?;
            d.merge(q + 2, i)?;
            d.split(q + 2, plan.b[2].clone(), (i, i))?;
            let after = alloc::vec![
                SLetter::new(plan.c[0].clone(), j)?,
                SLetter::new(plan.c[1].clone(), i)?,
                SLetter::new(plan.c[2].clone(), j)?,
            ];
            d.braid(q, after)?;
            d.merge(q + 2, j)?;
            if !plan.p0.is_identity() {
                d.merge(p, j)?;
            }
        }
    }
    if !d.word.is_minimal() {
        return Err(Error::GermBreach("transported word not minimal"));
    }
    Ok(Transported { word: d.word, moves: Some(d.steps) })
}

/// Transport along a whole derivation; the moves are `None` as soon as one
/// step has no derivation.
pub fn transport_along(w: &SWord, steps: &[TStep], depth: usize) -> Result<Transported> {
    let mut cur = Transported { word: w.clone(), moves: Some(Vec::new()) };
    for s in steps {
        let t = transport(&cur.word, s, depth)?;
        cur.moves = match (cur.moves, t.moves) {
            (Some(mut a), Some(b)) => {
                a.extend(b);
                Some(a)
            }
            _ => None,
        };
        cur.word = t.word;
    }
    Ok(cur)
}

/// `x` lies in `H_i` for the letter's type.
pub fn has_type(w: &SWord, t: &[usize]) -> bool {
    w.len() == t.len() && w.letters.iter().zip(t).all(|(l, &i)| in_h_i(&l.elem, i))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::monoid_normal_form;
    use crate::lattice::ZnGerm;
    use crate::presentation::shape::embed_block;

    fn letter(n: usize, i: usize, m: [[i64; 2]; 2]) -> SLetter {
        SLetter::new(embed_block(n, i, m.map(|r| r.map(Int::from))).unwrap(), i).unwrap()
    }

    #[test]
    fn unit_insertion_and_merge() {
        let w = SWord::empty(3);
        let t = transport(&w, &TStep { rule: TRule::T0, pos: 0, letter: 2 }, DEFAULT_DEPTH).unwrap();
        assert_eq!(t.word.type_word(), alloc::vec![2]);
        assert!(t.word.letters[0].elem.is_identity());

        let w = SWord::new(3, alloc::vec![letter(3, 1, [[1, 1], [0, 1]]), letter(3, 1, [[0, 1], [1, 0]])]).unwrap();
        let t = transport(&w, &TStep { rule: TRule::T1, pos: 0, letter: 0 }, DEFAULT_DEPTH).unwrap();
        assert_eq!(t.word.elems(), alloc::vec![w.product()]);
    }

    #[test]
    fn braid_case_keeps_normal_form() {
        let w = SWord::new(3, alloc::vec![
            letter(3, 1, [[2, 1], [1, 0]]),
            letter(3, 2, [[-1, 1], [2, -1]]),
            letter(3, 1, [[1, -1], [0, 1]]),
        ])
        .unwrap();
        assert!(w.is_minimal());
        let t = transport(&w, &TStep { rule: TRule::T3, pos: 0, letter: 0 }, DEFAULT_DEPTH).unwrap();
        assert_eq!(t.word.type_word(), alloc::vec![2, 1, 2]);
        let g = ZnGerm::new(3);
        assert_eq!(monoid_normal_form(&g, &w.elems()).unwrap(), monoid_normal_form(&g, &t.word.elems()).unwrap());
        let moves = t.moves.expect("derivation within the default depth");
        assert_eq!(super::super::smove::replay_s(&w, &moves).unwrap(), t.word);
    }

    #[test]
    fn non_minimal_input_rejected() {
        let a = letter(3, 1, [[0, 1], [1, 0]]);
        let w = SWord::new(3, alloc::vec![a.clone(), a]).unwrap();
        assert!(!w.is_minimal());
        let e = transport(&w, &TStep { rule: TRule::T1, pos: 0, letter: 0 }, DEFAULT_DEPTH).unwrap_err();
        assert_eq!(e, Error::NotMinimal);
    }
}
