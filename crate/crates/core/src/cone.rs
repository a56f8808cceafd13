//! Piecewise-linear subsets of `Q^n`: finite unions of relatively open
//! rational cones, with exact H/V conversion used for Minkowski sums.
//!
//! A [`PLSet`] describes nonzero points through its cells; whether the origin
//! belongs to the set is recorded separately in `include_origin`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_traits::{One, Signed, Zero};

use crate::arith::{ext_gcd_bezout, primitive, rat_of, rat_to_primitive, Int, Rat};
use crate::error::{Error, Result};
use crate::feasibility::find_point;
use crate::matrix::{dot_int, format_vec, nullspace, rank, to_rat_vec, RatMatrix, UniMatrix};

pub type Covector = Vec<Int>;

fn normalize_covectors(rows: Vec<Covector>, sign_free: bool) -> Vec<Covector> {
    let mut out: Vec<Covector> = Vec::with_capacity(rows.len());
    for mut r in rows {
        if r.iter().all(Zero::is_zero) {
            if sign_free {
                continue;
            }
            out.push(r);
            continue;
        }
        primitive(&mut r);
        if sign_free {
            let first = r.iter().find(|x| !x.is_zero()).cloned().unwrap_or_default();
            if first.is_negative() {
                for x in r.iter_mut() {
                    *x = -&*x;
                }
            }
        }
        out.push(r);
    }
    out.sort();
    out.dedup();
    out
}

fn ints_to_rats(rows: &[Covector]) -> Vec<Vec<Rat>> {
    rows.iter().map(|r| to_rat_vec(r)).collect()
}

/// `{x : e.x = 0, s.x > 0, t.x >= 0}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    n: usize,
    pub equalities: Vec<Covector>,
    pub stricts: Vec<Covector>,
    pub nonstricts: Vec<Covector>,
}

impl Cell {
    pub fn new(n: usize, equalities: Vec<Covector>, stricts: Vec<Covector>, nonstricts: Vec<Covector>) -> Result<Self> {
        for r in equalities.iter().chain(&stricts).chain(&nonstricts) {
            if r.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: r.len() });
            }
        }
        Ok(Cell {
            n,
            equalities: normalize_covectors(equalities, true),
            stricts: normalize_covectors(stricts, false),
            nonstricts: normalize_covectors(nonstricts, false),
        })
    }

    /// All of `Q^n`.
    pub fn universe(n: usize) -> Self {
        Cell { n, equalities: Vec::new(), stricts: Vec::new(), nonstricts: Vec::new() }
    }

    pub fn dim_ambient(&self) -> usize {
        self.n
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        let ev = |c: &Covector| crate::matrix::dot(&to_rat_vec(c), x);
        self.equalities.iter().all(|e| ev(e).is_zero())
            && self.stricts.iter().all(|s| ev(s).is_positive())
            && self.nonstricts.iter().all(|t| !ev(t).is_negative())
    }

    /// A nonzero point of the cell, if any.
    pub fn witness(&self) -> Option<Vec<Rat>> {
        if !self.stricts.is_empty() {
            return find_point(self.n, &self.equalities, &self.stricts, &self.nonstricts).expect("dims checked");
        }
        let v = self.closure();
        v.lineality.first().or(v.generators.first()).map(|g| to_rat_vec(g))
    }

    /// True iff the cell has no nonzero point.
    pub fn is_empty(&self) -> bool {
        self.witness().is_none()
    }

    pub fn intersect(&self, other: &Cell) -> Cell {
        let cat = |a: &[Covector], b: &[Covector]| a.iter().chain(b).cloned().collect::<Vec<_>>();
        Cell {
            n: self.n,
            equalities: normalize_covectors(cat(&self.equalities, &other.equalities), true),
            stricts: normalize_covectors(cat(&self.stricts, &other.stricts), false),
            nonstricts: normalize_covectors(cat(&self.nonstricts, &other.nonstricts), false),
        }
    }

    pub fn with_equalities(&self, extra: &[Covector]) -> Cell {
        let mut eq = self.equalities.clone();
        eq.extend(extra.iter().cloned());
        Cell { n: self.n, equalities: normalize_covectors(eq, true), stricts: self.stricts.clone(), nonstricts: self.nonstricts.clone() }
    }

    /// `-C = {x : -x in C}`.
    pub fn negate(&self) -> Cell {
        let neg = |rows: &[Covector]| rows.iter().map(|r| r.iter().map(|x| -x).collect()).collect::<Vec<Covector>>();
        Cell {
            n: self.n,
            equalities: self.equalities.clone(),
            stricts: normalize_covectors(neg(&self.stricts), false),
            nonstricts: normalize_covectors(neg(&self.nonstricts), false),
        }
    }

    /// No nonstrict constraints: a nonempty such cell is its own relative interior.
    pub fn is_relint_form(&self) -> bool {
        self.nonstricts.is_empty()
    }

    /// V-representation of the closure (the cell is assumed nonempty).
    pub fn closure(&self) -> VCone {
        let ineqs: Vec<Covector> = self.stricts.iter().chain(&self.nonstricts).cloned().collect();
        hrep_to_vrep(self.n, &self.equalities, &ineqs)
    }

    /// Dimension of the closure, or `None` when the cell is empty.
    pub fn dimension(&self) -> Option<usize> {
        if self.is_empty() {
            return None;
        }
        Some(self.closure().dimension(self.n))
    }

    /// Disjoint pieces whose union is `Q^n` minus this cell.
    fn complement_pieces(&self) -> Vec<Cell> {
        let mut pieces = Vec::new();
        let mut eqs: Vec<Covector> = Vec::new();
        let mut stricts: Vec<Covector> = Vec::new();
        let mut nonstricts: Vec<Covector> = Vec::new();
        let neg = |r: &Covector| r.iter().map(|x| -x).collect::<Covector>();
        for e in &self.equalities {
            for s in [e.clone(), neg(e)] {
                let mut st = stricts.clone();
                st.push(s);
                pieces.push(Cell::new(self.n, eqs.clone(), st, nonstricts.clone()).expect("dims"));
            }
            eqs.push(e.clone());
        }
        for s in &self.stricts {
            let mut ns = nonstricts.clone();
            ns.push(neg(s));
            pieces.push(Cell::new(self.n, eqs.clone(), stricts.clone(), ns).expect("dims"));
            stricts.push(s.clone());
        }
        for t in &self.nonstricts {
            let mut st = stricts.clone();
            st.push(neg(t));
            pieces.push(Cell::new(self.n, eqs.clone(), st, nonstricts.clone()).expect("dims"));
            nonstricts.push(t.clone());
        }
        pieces
    }
}

impl core::fmt::Display for Cell {
    /// `E: ... | S: ... | T: ...`, covectors separated by commas.
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let list = |rows: &[Covector]| rows.iter().map(|r| format_vec(r)).collect::<Vec<_>>().join(", ");
        write!(f, "E: {} | S: {} | T: {}", list(&self.equalities), list(&self.stricts), list(&self.nonstricts))
    }
}

/// The closed cone `cone(generators) + span(lineality)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VCone {
    pub generators: Vec<Vec<Int>>,
    pub lineality: Vec<Vec<Int>>,
}

impl VCone {
    pub fn dimension(&self, n: usize) -> usize {
        let rows: Vec<Vec<Rat>> = self.generators.iter().chain(&self.lineality).map(|g| to_rat_vec(g)).collect();
        rank(&rows, n)
    }

    /// Constraint form of the relative interior.
    pub fn relint(&self, n: usize) -> Cell {
        let (eqs, facets) = vrep_to_hrep(n, &self.generators, &self.lineality);
        Cell::new(n, eqs, facets, Vec::new()).expect("dims")
    }

    pub fn contains(&self, x: &[Rat], n: usize) -> bool {
        let (eqs, facets) = vrep_to_hrep(n, &self.generators, &self.lineality);
        Cell::new(n, eqs, Vec::new(), facets).expect("dims").contains(x)
    }
}

fn subsets(m: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + m - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        if idx[i] == i + m - k {
            return;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn dedup_primitive(rows: Vec<Vec<Int>>) -> Vec<Vec<Int>> {
    let mut out: Vec<Vec<Int>> = rows
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|mut r| {
            primitive(&mut r);
            r
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Closed cone `{x : e.x = 0, t.x >= 0}` to generators and lineality basis.
pub fn hrep_to_vrep(n: usize, equalities: &[Covector], ineqs: &[Covector]) -> VCone {
    let all: Vec<Vec<Rat>> = ints_to_rats(equalities).into_iter().chain(ints_to_rats(ineqs)).collect();
    let lineality: Vec<Vec<Int>> = nullspace(&all, n).iter().map(|v| rat_to_primitive(v)).collect();
    // pointed part lives in {e.x = 0} intersected with the orthogonal complement of the lineality
    let mut base: Vec<Vec<Rat>> = ints_to_rats(equalities);
    base.extend(lineality.iter().map(|l| to_rat_vec(l)));
    let base_rank = rank(&base, n);
    let d = n - base_rank;
    let mut rays: Vec<Vec<Int>> = Vec::new();
    if d > 0 {
        let tin: Vec<Vec<Rat>> = ints_to_rats(ineqs);
        subsets(ineqs.len(), d - 1, |s| {
            let mut rows = base.clone();
            rows.extend(s.iter().map(|&i| tin[i].clone()));
            let ns = nullspace(&rows, n);
            if ns.len() != 1 {
                return;
            }
            let r = rat_to_primitive(&ns[0]);
            let (mut pos, mut negs) = (false, false);
            for t in ineqs {
                let v = dot_int(t, &r);
                pos |= v.is_positive();
                negs |= v.is_negative();
            }
            match (pos, negs) {
                (_, false) => rays.push(r),
                (false, true) => rays.push(r.iter().map(|x| -x).collect()),
                _ => {}
            }
        });
    }
    VCone { generators: dedup_primitive(rays), lineality }
}

/// Generators to `(equalities, facet normals)` of the closed cone they span.
pub fn vrep_to_hrep(n: usize, generators: &[Vec<Int>], lineality: &[Vec<Int>]) -> (Vec<Covector>, Vec<Covector>) {
    let gens = dedup_primitive(generators.to_vec());
    let lin = dedup_primitive(lineality.to_vec());
    let span_rows: Vec<Vec<Rat>> = gens.iter().chain(&lin).map(|g| to_rat_vec(g)).collect();
    let perp: Vec<Vec<Rat>> = nullspace(&span_rows, n);
    let equalities: Vec<Covector> = perp.iter().map(|v| rat_to_primitive(v)).collect();
    let k = n - perp.len();
    let lin_rows: Vec<Vec<Rat>> = lin.iter().map(|g| to_rat_vec(g)).collect();
    let lin_rank = rank(&lin_rows, n);
    let mut facets: Vec<Covector> = Vec::new();
    if k == 0 || lin_rank + 1 > k {
        return (normalize_covectors(equalities, true), facets);
    }
    let need = k - 1 - lin_rank;
    let grats: Vec<Vec<Rat>> = gens.iter().map(|g| to_rat_vec(g)).collect();
    subsets(gens.len(), need, |s| {
        let mut rows = lin_rows.clone();
        rows.extend(s.iter().map(|&i| grats[i].clone()));
        if rank(&rows, n) != k - 1 {
            return;
        }
        rows.extend(perp.iter().cloned());
        let ns = nullspace(&rows, n);
        if ns.len() != 1 {
            return;
        }
        let f = rat_to_primitive(&ns[0]);
        let (mut pos, mut negs) = (false, false);
        for g in &gens {
            let v = dot_int(&f, g);
            pos |= v.is_positive();
            negs |= v.is_negative();
        }
        match (pos, negs) {
            (true, false) => facets.push(f),
            (false, true) => facets.push(f.iter().map(|x| -x).collect()),
            _ => {}
        }
    });
    (normalize_covectors(equalities, true), normalize_covectors(facets, false))
}

/// Finite union of cells, plus an explicit flag for the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLSet {
    n: usize,
    pub cells: Vec<Cell>,
    pub include_origin: bool,
}

impl PLSet {
    pub fn empty(n: usize) -> Self {
        PLSet { n, cells: Vec::new(), include_origin: false }
    }

    /// `{0}`.
    pub fn origin(n: usize) -> Self {
        PLSet { n, cells: Vec::new(), include_origin: true }
    }

    pub fn from_cells(n: usize, cells: Vec<Cell>, include_origin: bool) -> Result<Self> {
        for c in &cells {
            if c.n != n {
                return Err(Error::DimensionMismatch { expected: n, found: c.n });
            }
        }
        Ok(PLSet { n, cells, include_origin })
    }

    pub fn dim_ambient(&self) -> usize {
        self.n
    }

    fn same_dim(&self, other: &PLSet) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn member(&self, x: &[Rat]) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: x.len() });
        }
        if x.iter().all(Zero::is_zero) {
            return Ok(self.include_origin);
        }
        Ok(self.cells.iter().any(|c| c.contains(x)))
    }

    /// Drop empty cells and duplicates; cells are sorted canonically.
    pub fn pruned(mut self) -> Self {
        self.cells.retain(|c| !c.is_empty());
        self.cells.sort();
        self.cells.dedup();
        self
    }

    pub fn union(&self, other: &PLSet) -> Result<PLSet> {
        self.same_dim(other)?;
        let mut cells = self.cells.clone();
        cells.extend(other.cells.iter().cloned());
        Ok(PLSet { n: self.n, cells, include_origin: self.include_origin || other.include_origin }.pruned())
    }

    pub fn intersect(&self, other: &PLSet) -> Result<PLSet> {
        self.same_dim(other)?;
        let mut cells = Vec::new();
        for a in &self.cells {
            for b in &other.cells {
                let c = a.intersect(b);
                if !c.is_empty() {
                    cells.push(c);
                }
            }
        }
        Ok(PLSet { n: self.n, cells, include_origin: self.include_origin && other.include_origin }.pruned())
    }

    /// Complement inside `Q^n \ {0}`.
    pub fn complement(&self) -> PLSet {
        let mut acc: Vec<Cell> = vec![Cell::universe(self.n)];
        for c in &self.cells {
            let pieces = c.complement_pieces();
            let mut next = Vec::new();
            for a in &acc {
                for p in &pieces {
                    let x = a.intersect(p);
                    if !x.is_empty() {
                        next.push(x);
                    }
                }
            }
            acc = next;
        }
        PLSet { n: self.n, cells: acc, include_origin: false }.pruned()
    }

    /// `-P`.
    pub fn negate(&self) -> PLSet {
        PLSet { n: self.n, cells: self.cells.iter().map(Cell::negate).collect(), include_origin: self.include_origin }.pruned()
    }

    pub fn minus(&self, other: &PLSet) -> Result<PLSet> {
        let mut out = self.intersect(&other.complement())?;
        out.include_origin = self.include_origin && !other.include_origin;
        Ok(out)
    }

    /// One cell per line in the `E: ... | S: ... | T: ...` format.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        if self.include_origin {
            s.push_str("origin\n");
        }
        for c in &self.cells {
            let _ = writeln!(s, "{}", c);
        }
        s
    }
}

/// Exact Minkowski sum; every cell must be in relative-interior form.
pub fn minkowski_sum(p: &PLSet, q: &PLSet) -> Result<PLSet> {
    p.same_dim(q)?;
    let n = p.n;
    let p = p.clone().pruned();
    let q = q.clone().pruned();
    for c in p.cells.iter().chain(&q.cells) {
        if !c.is_relint_form() {
            return Err(Error::DegenerateCell);
        }
    }
    let pv: Vec<VCone> = p.cells.iter().map(Cell::closure).collect();
    let qv: Vec<VCone> = q.cells.iter().map(Cell::closure).collect();
    let mut cells = Vec::new();
    let mut include_origin = p.include_origin && q.include_origin;
    for a in &pv {
        for b in &qv {
            let sum = VCone {
                generators: a.generators.iter().chain(&b.generators).cloned().collect(),
                lineality: a.lineality.iter().chain(&b.lineality).cloned().collect(),
            };
            let c = sum.relint(n);
            if c.stricts.is_empty() {
                // a linear subspace: contains the origin
                include_origin = true;
            }
            cells.push(c);
        }
    }
    if q.include_origin {
        cells.extend(p.cells.iter().cloned());
    }
    if p.include_origin {
        cells.extend(q.cells.iter().cloned());
    }
    Ok(PLSet { n, cells, include_origin }.pruned())
}

/// `K(u(a)) = {x : x a >_lex 0}`: one cell per pivot position.
pub fn positivity_set(a: &UniMatrix) -> PLSet {
    let n = a.dim();
    let cols: Vec<Covector> = (0..n).map(|j| a.column(j)).collect();
    let cells = (0..n)
        .map(|i| Cell::new(n, cols[..i].to_vec(), vec![cols[i].clone()], Vec::new()).expect("dims"))
        .collect();
    PLSet { n, cells, include_origin: false }.pruned()
}

/// `M(a) = {x : x > 0 > x a}`, as cells indexed by the two pivot positions.
pub fn flip_set(a: &UniMatrix) -> PLSet {
    let n = a.dim();
    let cols: Vec<Covector> = (0..n).map(|j| a.column(j)).collect();
    let unit = |i: usize| {
        let mut v = vec![Int::zero(); n];
        v[i] = Int::one();
        v
    };
    let mut cells = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut eqs: Vec<Covector> = (0..i).map(unit).collect();
            eqs.extend(cols[..j].iter().cloned());
            let neg: Covector = cols[j].iter().map(|x| -x).collect();
            let c = Cell::new(n, eqs, vec![unit(i), neg], Vec::new()).expect("dims");
            if !c.is_empty() {
                cells.push(c);
            }
        }
    }
    PLSet { n, cells, include_origin: false }.pruned()
}

/// Recover `g` in `GL(n, Q)` with `P = {x : x g >_lex 0}` from a lexicographic
/// positivity set, one column (functional) at a time.
pub fn recover_lex_matrix(p: &PLSet) -> Result<RatMatrix> {
    let n = p.n;
    let mut subspace: Vec<Covector> = Vec::new();
    let mut functionals: Vec<Vec<Rat>> = Vec::new();
    for level in 0..n {
        let dim_v = n - level;
        let mut gens: Vec<Vec<Int>> = Vec::new();
        let mut lin: Vec<Vec<Int>> = Vec::new();
        let mut any = false;
        for c in &p.cells {
            let r = c.with_equalities(&subspace);
            if r.is_empty() {
                continue;
            }
            let v = r.closure();
            if v.dimension(n) == dim_v {
                any = true;
                gens.extend(v.generators);
                lin.extend(v.lineality);
            }
        }
        if !any {
            return Err(Error::NotLexicographic("no full-dimensional cell"));
        }
        let (eqs, facets) = vrep_to_hrep(n, &gens, &lin);
        if n - eqs.len() != dim_v || facets.len() != 1 {
            return Err(Error::NotLexicographic("closure is not a half-space"));
        }
        let f = facets.into_iter().next().expect("one facet");
        functionals.push(to_rat_vec(&f));
        subspace.push(f);
    }
    let g = RatMatrix::from_columns(&functionals);
    if g.det().is_zero() {
        return Err(Error::NotLexicographic("dependent functionals"));
    }
    Ok(g)
}

/// Factor `g = x y` with `x` integral unimodular and `y` upper triangular with
/// positive diagonal.
pub fn rat_to_int_factor(g: &RatMatrix) -> Result<(UniMatrix, RatMatrix)> {
    if g.det().is_zero() {
        return Err(Error::Singular);
    }
    let n = g.dim();
    let rows = g.rows();
    let (x, y) = factor_rows(n, rows);
    let x = UniMatrix::from_rows(x).expect("factor is unimodular");
    let y = RatMatrix::from_rows(y).expect("square");
    debug_assert!(y.is_order_preserving());
    debug_assert_eq!(x.to_rat().mul(&y), *g);
    Ok((x, y))
}

fn identity_int(n: usize) -> Vec<Vec<Int>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect()).collect()
}

fn int_mat_mul(a: &[Vec<Int>], b: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).fold(Int::zero(), |s, k| s + &a[i][k] * &b[k][j])).collect()).collect()
}

fn factor_rows(n: usize, g: Vec<Vec<Rat>>) -> (Vec<Vec<Int>>, Vec<Vec<Rat>>) {
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    // integer column c with g_col = c / l
    let col: Vec<Rat> = g.iter().map(|r| r[0].clone()).collect();
    let mut l = Int::one();
    for v in &col {
        l = num_integer::Integer::lcm(&l, v.denom());
    }
    let mut c: Vec<Int> = col.iter().map(|v| (v * rat_of(&l)).to_integer()).collect();
    // unimodular u with u c = (gcd, 0, ..., 0)
    let mut u = identity_int(n);
    for k in 1..n {
        if c[k].is_zero() {
            continue;
        }
        let (gg, bc, bd) = ext_gcd_bezout(&c[0], &c[k]).expect("nonzero");
        // rows 0,k <- [[d, -c], [-ck/g, c0/g]] applied on the left
        let (p, q) = (bd, -bc);
        let (r, s) = (-(&c[k] / &gg), &c[0] / &gg);
        let row0: Vec<Int> = (0..n).map(|j| &p * &u[0][j] + &q * &u[k][j]).collect();
        let rowk: Vec<Int> = (0..n).map(|j| &r * &u[0][j] + &s * &u[k][j]).collect();
        u[0] = row0;
        u[k] = rowk;
        c[0] = gg;
        c[k] = Int::zero();
    }
    if c[0].is_negative() {
        for v in u[0].iter_mut() {
            *v = -&*v;
        }
    }
    // ug = u * g
    let ug: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| (0..n).fold(Rat::zero(), |s, k| s + rat_of(&u[i][k]) * &g[k][j])).collect())
        .collect();
    let minor: Vec<Vec<Rat>> = ug[1..].iter().map(|r| r[1..].to_vec()).collect();
    let (xm, ym) = factor_rows(n - 1, minor);
    // x = u^{-1} diag(1, xm); y = [[a, r], [0, ym]]
    let mut block = identity_int(n);
    for i in 1..n {
        for j in 1..n {
            block[i][j] = xm[i - 1][j - 1].clone();
        }
    }
    let uinv = UniMatrix::from_rows(u).expect("unimodular").inv().rows();
    let x = int_mat_mul(&uinv, &block);
    let mut y = vec![vec![Rat::zero(); n]; n];
    y[0] = ug[0].clone();
    for i in 1..n {
        for j in 1..n {
            y[i][j] = ym[i - 1][j - 1].clone();
        }
    }
    (x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn v(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| int(x)).collect()
    }
    fn q(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }
    fn m(rows: &[&[i64]]) -> UniMatrix {
        UniMatrix::from_i64(rows).unwrap()
    }

    #[test]
    fn member_examples() {
        let k = positivity_set(&UniMatrix::identity(3));
        assert!(!k.member(&q(&[0, 0, 0])).unwrap());
        assert!(k.member(&q(&[0, 1, -4])).unwrap());
        assert!(!k.member(&q(&[-1, 0, 0])).unwrap());
        assert!(k.member(&q(&[1, 0])).is_err());
        let k2 = positivity_set(&UniMatrix::identity(2));
        assert!(k2.member(&q(&[1, -5])).unwrap());
        assert!(!k2.member(&q(&[0, -1])).unwrap());
        let sw = positivity_set(&m(&[&[0, 1], &[1, 0]]));
        assert!(sw.member(&q(&[-1, 1])).unwrap());
    }

    #[test]
    fn hv_roundtrip_on_quadrant() {
        let c = Cell::new(2, vec![], vec![v(&[1, 0]), v(&[0, 1])], vec![]).unwrap();
        let vc = c.closure();
        assert_eq!(vc.generators.len(), 2);
        assert!(vc.lineality.is_empty());
        assert_eq!(vc.relint(2), c);
    }

    #[test]
    fn halfplane_has_lineality() {
        let c = Cell::new(2, vec![], vec![v(&[1, 0])], vec![]).unwrap();
        let vc = c.closure();
        assert_eq!(vc.lineality.len(), 1);
        assert_eq!(vc.generators, vec![v(&[1, 0])]);
        assert_eq!(vc.relint(2), c);
    }

    #[test]
    fn sum_of_two_flip_sets_fills_positive_cone() {
        // M(diag(-1,1)) = {x1 > 0}; M(diag(1,-1)) = {x1 = 0, x2 > 0}
        let a = flip_set(&UniMatrix::diag_signs(&[-1, 1]));
        let b = flip_set(&UniMatrix::diag_signs(&[1, -1]));
        let mut a0 = a.clone();
        a0.include_origin = true;
        let mut b0 = b.clone();
        b0.include_origin = true;
        let s = minkowski_sum(&a0, &b0).unwrap();
        let target = flip_set(&UniMatrix::neg_identity(2));
        for x in -6..=6 {
            for y in -6..=6 {
                let p = q(&[x, y]);
                let expect = (x, y) == (0, 0) || target.member(&p).unwrap();
                assert_eq!(s.member(&p).unwrap(), expect, "{x} {y}");
            }
        }
    }

    #[test]
    fn minkowski_rejects_nonstrict_cells() {
        let c = Cell::new(2, vec![], vec![], vec![v(&[1, 0])]).unwrap();
        let p = PLSet::from_cells(2, vec![c], false).unwrap();
        assert_eq!(minkowski_sum(&p, &p), Err(Error::DegenerateCell));
    }

    #[test]
    fn complement_of_standard_positive_cone() {
        let k = positivity_set(&UniMatrix::identity(2));
        let c = k.complement();
        let neg = positivity_set(&UniMatrix::neg_identity(2));
        for x in -5..=5 {
            for y in -5..=5 {
                if (x, y) == (0, 0) {
                    continue;
                }
                let p = q(&[x, y]);
                assert_eq!(c.member(&p).unwrap(), neg.member(&p).unwrap());
            }
        }
    }

    #[test]
    fn recover_identity_and_reversal() {
        let g = recover_lex_matrix(&positivity_set(&UniMatrix::identity(3))).unwrap();
        let (x, y) = rat_to_int_factor(&g).unwrap();
        assert!(y.is_order_preserving());
        assert!(crate::hermite::coset_reduce(&x).is_identity());
        let g = recover_lex_matrix(&positivity_set(&UniMatrix::neg_identity(2))).unwrap();
        let (x, _) = rat_to_int_factor(&g).unwrap();
        assert_eq!(crate::hermite::coset_reduce(&x), crate::hermite::coset_reduce(&UniMatrix::neg_identity(2)));
    }

    #[test]
    fn recover_rejects_non_lexicographic() {
        // the open quadrant is not a lexicographic positivity set
        let c = Cell::new(2, vec![], vec![v(&[1, 0]), v(&[0, 1])], vec![]).unwrap();
        let p = PLSet::from_cells(2, vec![c], false).unwrap();
        assert!(matches!(recover_lex_matrix(&p), Err(Error::NotLexicographic(_))));
    }

    #[test]
    fn rat_factor_examples() {
        let half = Rat::new(int(1), int(2));
        let g = RatMatrix::from_rows(vec![vec![half.clone(), Rat::zero()], vec![Rat::zero(), rat(2)]]).unwrap();
        let (x, y) = rat_to_int_factor(&g).unwrap();
        assert!(x.is_identity());
        assert_eq!(y, g);
        let sw = m(&[&[0, 1], &[1, 0]]);
        let (x, y) = rat_to_int_factor(&sw.to_rat()).unwrap();
        assert_eq!(x, sw);
        assert_eq!(y, RatMatrix::identity(2));
        let sing = RatMatrix::from_rows(vec![q(&[1, 2]), q(&[2, 4])]).unwrap();
        assert_eq!(rat_to_int_factor(&sing), Err(Error::Singular));
    }

    #[test]
    fn subsets_enumerates_combinations() {
        let mut count = 0;
        subsets(5, 2, |_| count += 1);
        assert_eq!(count, 10);
        let mut count0 = 0;
        subsets(3, 0, |s| {
            assert!(s.is_empty());
            count0 += 1
        });
        assert_eq!(count0, 1);
        let mut count3 = 0;
        subsets(3, 3, |_| count3 += 1);
        assert_eq!(count3, 1);
    }
}
