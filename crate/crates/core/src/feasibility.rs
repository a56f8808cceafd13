//! Exact feasibility of homogeneous systems
//! `{x : e.x = 0, s.x > 0, t.x >= 0}` over the rationals.
//!
//! Equalities are removed by exact substitution, the remaining inequalities by
//! Fourier-Motzkin elimination with strictness flags. A rational witness is
//! recovered by back-substitution.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::arith::{primitive, rat, rat_of, Int, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Ineq {
    coef: Vec<Int>,
    strict: bool,
}

fn check_dims(n: usize, rows: &[Vec<Int>]) -> Result<()> {
    for r in rows {
        if r.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: r.len() });
        }
    }
    Ok(())
}

/// True iff some `x` in `Q^n` has `e.x = 0` for every equality and `s.x > 0`
/// for every strict covector.
pub fn strict_cone_feasible(n: usize, equalities: &[Vec<Int>], stricts: &[Vec<Int>]) -> Result<bool> {
    Ok(find_point(n, equalities, stricts, &[])?.is_some())
}

/// A rational point of the cone, or `None` when it is empty.
///
/// With no strict constraints the origin is always returned.
pub fn find_point(
    n: usize,
    equalities: &[Vec<Int>],
    stricts: &[Vec<Int>],
    nonstricts: &[Vec<Int>],
) -> Result<Option<Vec<Rat>>> {
    check_dims(n, equalities)?;
    check_dims(n, stricts)?;
    check_dims(n, nonstricts)?;

    let mut ineqs: Vec<Ineq> = stricts
        .iter()
        .map(|c| Ineq { coef: c.clone(), strict: true })
        .chain(nonstricts.iter().map(|c| Ineq { coef: c.clone(), strict: false }))
        .collect();
    let mut eqs: Vec<Vec<Int>> = equalities.to_vec();

    // substitution log: (variable, equation with positive coefficient on it)
    let mut substituted: Vec<(usize, Vec<Int>)> = Vec::new();
    while let Some(e) = eqs.pop() {
        let Some(p) = e.iter().position(|x| !x.is_zero()) else { continue };
        let mut e = e;
        if e[p].is_negative() {
            for x in e.iter_mut() {
                *x = -&*x;
            }
        }
        let ep = e[p].clone();
        let eliminate = |row: &mut Vec<Int>| {
            if row[p].is_zero() {
                return;
            }
            let rp = row[p].clone();
            for (x, y) in row.iter_mut().zip(&e) {
                *x = &*x * &ep - &rp * y;
            }
            primitive(row);
        };
        for r in eqs.iter_mut() {
            eliminate(r);
        }
        for q in ineqs.iter_mut() {
            eliminate(&mut q.coef);
        }
        substituted.push((p, e));
    }
    let eliminated: Vec<usize> = substituted.iter().map(|(p, _)| *p).collect();
    let free: Vec<usize> = (0..n).filter(|v| !eliminated.contains(v)).collect();

    let mut stages: Vec<(usize, Vec<Ineq>)> = Vec::new();
    let mut current = normalize(ineqs);
    if current.is_none() {
        return Ok(None);
    }
    for &v in &free {
        let set = current.take().unwrap_or_default();
        let (pos, rest): (Vec<&Ineq>, Vec<&Ineq>) = set.iter().filter(|q| !q.coef[v].is_zero()).partition(|q| q.coef[v].is_positive());
        let neg: Vec<&Ineq> = rest;
        let mut next: Vec<Ineq> = set.iter().filter(|q| q.coef[v].is_zero()).cloned().collect();
        for p in &pos {
            for q in &neg {
                let a = &p.coef[v];
                let b = -&q.coef[v];
                let coef: Vec<Int> = p.coef.iter().zip(&q.coef).map(|(x, y)| &b * x + a * y).collect();
                next.push(Ineq { coef, strict: p.strict || q.strict });
            }
        }
        stages.push((v, set));
        current = normalize(next);
        if current.is_none() {
            return Ok(None);
        }
    }

    // back-substitution
    let mut x: Vec<Rat> = vec![Rat::zero(); n];
    for (v, set) in stages.iter().rev() {
        x[*v] = choose_value(*v, set, &x);
    }
    for (p, e) in substituted.iter().rev() {
        let mut s = Rat::zero();
        for (j, c) in e.iter().enumerate() {
            if j != *p && !c.is_zero() {
                s += rat_of(c) * &x[j];
            }
        }
        x[*p] = -s / rat_of(&e[*p]);
    }
    debug_assert!(stricts.iter().all(|s| eval(s, &x).is_positive()));
    debug_assert!(nonstricts.iter().all(|s| !eval(s, &x).is_negative()));
    debug_assert!(equalities.iter().all(|s| eval(s, &x).is_zero()));
    Ok(Some(x))
}

fn eval(c: &[Int], x: &[Rat]) -> Rat {
    let mut s = Rat::zero();
    for (a, b) in c.iter().zip(x) {
        if !a.is_zero() {
            s += rat_of(a) * b;
        }
    }
    s
}

/// Drop trivially true rows, detect `0 > 0`, deduplicate. `None` means infeasible.
fn normalize(rows: Vec<Ineq>) -> Option<Vec<Ineq>> {
    let mut out: Vec<Ineq> = Vec::with_capacity(rows.len());
    for mut q in rows {
        if q.coef.iter().all(Zero::is_zero) {
            if q.strict {
                return None;
            }
            continue;
        }
        primitive(&mut q.coef);
        out.push(q);
    }
    // strict rows sort after nonstrict duplicates; keep the strict one
    out.sort();
    let mut dedup: Vec<Ineq> = Vec::with_capacity(out.len());
    for q in out {
        if let Some(last) = dedup.last_mut() {
            if last.coef == q.coef {
                last.strict |= q.strict;
                continue;
            }
        }
        dedup.push(q);
    }
    Some(dedup)
}

fn choose_value(v: usize, set: &[Ineq], x: &[Rat]) -> Rat {
    let mut lower: Option<(Rat, bool)> = None;
    let mut upper: Option<(Rat, bool)> = None;
    for q in set {
        let a = &q.coef[v];
        if a.is_zero() {
            continue;
        }
        let mut rest = Rat::zero();
        for (j, c) in q.coef.iter().enumerate() {
            if j != v && !c.is_zero() {
                rest += rat_of(c) * &x[j];
            }
        }
        let bound = -rest / rat_of(a);
        if a.is_positive() {
            lower = Some(match lower {
                None => (bound, q.strict),
                Some((l, _)) if bound > l => (bound, q.strict),
                Some((l, s)) if bound == l => (l, s || q.strict),
                Some(keep) => keep,
            });
        } else {
            upper = Some(match upper {
                None => (bound, q.strict),
                Some((u, _)) if bound < u => (bound, q.strict),
                Some((u, s)) if bound == u => (u, s || q.strict),
                Some(keep) => keep,
            });
        }
    }
    match (lower, upper) {
        (Some((l, _)), Some((u, _))) => {
            if l == u {
                l
            } else {
                (l + u) / rat(2)
            }
        }
        (Some((l, _)), None) => l + Rat::one(),
        (None, Some((u, _))) => u - Rat::one(),
        (None, None) => Rat::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn v(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn spec_examples() {
        assert!(strict_cone_feasible(2, &[], &[v(&[1, 0])]).unwrap());
        assert!(!strict_cone_feasible(2, &[v(&[1, 0])], &[v(&[1, 0])]).unwrap());
        assert!(!strict_cone_feasible(2, &[], &[v(&[1, 0]), v(&[-1, 0])]).unwrap());
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(strict_cone_feasible(3, &[], &[v(&[1, 0])]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn witness_satisfies_system() {
        let p = find_point(3, &[v(&[1, 1, 1])], &[v(&[1, -2, 0]), v(&[0, 1, 3])], &[v(&[0, 0, 1])])
            .unwrap()
            .expect("feasible");
        assert_eq!(eval(&v(&[1, 1, 1]), &p), Rat::zero());
        assert!(eval(&v(&[1, -2, 0]), &p).is_positive());
        assert!(eval(&v(&[0, 1, 3]), &p).is_positive());
    }

    #[test]
    fn cyclic_system_is_infeasible() {
        // x1 > x2 > x3 > x1
        let s = [v(&[1, -1, 0]), v(&[0, 1, -1]), v(&[-1, 0, 1])];
        assert!(!strict_cone_feasible(3, &[], &s).unwrap());
        // relaxing one strict to nonstrict is still infeasible, all-nonstrict is not
        assert!(find_point(3, &[], &s[..2], &s[2..]).unwrap().is_none());
        assert!(find_point(3, &[], &[], &s).unwrap().is_some());
    }
}
