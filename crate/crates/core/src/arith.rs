//! Exact scalars.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

pub fn rat_of(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

/// Sign of an integer as -1, 0 or 1.
pub fn sign(v: &Int) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

pub fn rat_sign(v: &Rat) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Floor division for integers with positive divisor.
pub fn floor_div(a: &Int, b: &Int) -> Int {
    a.div_floor(b)
}

/// Bezout pair for `(a, b)`: returns `(g, c, d)` with `a*d - b*c = g = gcd(a, b) > 0`.
///
/// Among all valid pairs the one with `|c|` minimal is chosen, ties going to
/// `c >= 0`. When `a = 0`, `c` is forced and `d` is chosen the same way.
pub fn ext_gcd_bezout(a: &Int, b: &Int) -> Result<(Int, Int, Int)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdUndefined);
    }
    let e = a.extended_gcd(b);
    // a*x + b*y = g, possibly with negative g
    let (mut g, mut s, mut t) = (e.gcd, e.x, e.y);
    if g.is_negative() {
        g = -g;
        s = -s;
        t = -t;
    }
    // d = s, c = -t satisfies a*d - b*c = g
    let c0 = -t;
    if a.is_zero() {
        // -b*c = g fixes c; d free in steps of b/g
        let c = c0;
        let step = (b / &g).abs();
        let d = centered_residue(&s, &step);
        return Ok((g, c, d));
    }
    let step = (a / &g).abs();
    let c = centered_residue(&c0, &step);
    let d = (&g + b * &c) / a;
    debug_assert_eq!(a * &d - b * &c, g);
    Ok((g, c, d))
}

/// Representative of `v` modulo `m` in `(-m/2, m/2]`; `m > 0`.
fn centered_residue(v: &Int, m: &Int) -> Int {
    if m.is_one() {
        return Int::zero();
    }
    let mut r = v.mod_floor(m);
    // r in [0, m): move to (-m/2, m/2]
    let two_r: Int = &r * 2;
    if two_r > *m {
        r -= m;
    }
    r
}

/// Divide a vector of integers by the gcd of its entries (sign preserved).
pub fn primitive(v: &mut [Int]) {
    let mut g = Int::zero();
    for x in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}

/// Scale a rational vector to a primitive integer vector with the same direction.
pub fn rat_to_primitive(v: &[Rat]) -> alloc::vec::Vec<Int> {
    let mut l = Int::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let mut out: alloc::vec::Vec<Int> = v.iter().map(|x| (x * rat_of(&l)).to_integer()).collect();
    primitive(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force canonical Bezout pair: scan c by increasing |c|, positive first.
    fn brute(a: i64, b: i64) -> (i64, i64, i64) {
        let g = num_integer::gcd(a, b);
        for k in 0..200i64 {
            for c in [k, -k] {
                if a == 0 {
                    // c forced; d ranges freely
                    for dk in 0..200i64 {
                        for d in [dk, -dk] {
                            if a * d - b * c == g {
                                return (g, c, d);
                            }
                        }
                    }
                    continue;
                }
                if (g + b * c) % a == 0 {
                    return (g, c, (g + b * c) / a);
                }
            }
        }
        unreachable!()
    }

    fn run(a: i64, b: i64) -> (i64, i64, i64) {
        let (g, c, d) = ext_gcd_bezout(&int(a), &int(b)).unwrap();
        let f = |x: Int| i64::try_from(x).unwrap();
        (f(g), f(c), f(d))
    }

    #[test]
    fn bezout_examples() {
        assert_eq!(run(1, 1), (1, 0, 1));
        assert_eq!(run(2, 3), (1, 1, 2));
        assert_eq!(run(5, 0), (5, 0, 1));
        assert_eq!(ext_gcd_bezout(&int(0), &int(0)), Err(Error::GcdUndefined));
    }

    #[test]
    fn bezout_matches_exhaustive_search() {
        for a in -12..=12i64 {
            for b in -12..=12i64 {
                if a == 0 && b == 0 {
                    continue;
                }
                assert_eq!(run(a, b), brute(a, b), "a={a} b={b}");
            }
        }
    }
}
