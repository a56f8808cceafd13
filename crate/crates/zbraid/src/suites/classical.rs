//! The symmetric-group germ checked by brute force.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use zbraid_core::bruhat::{bruhat_join, bruhat_meet, BraidGerm, Perm};
use zbraid_core::engine::{group_normal_form, monoid_normal_form, Signed};

use super::{Config, Report};

/// Inversion count, computed from one-line notation.
fn length(p: &Perm) -> usize {
    let v = p.one_line();
    (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
}

/// Weak order through lengths: `p <= q` iff `l(q) = l(p) + l(p^-1 q)`.
fn below(p: &Perm, q: &Perm) -> bool {
    length(q) == length(p) + length(&p.inverse().compose(q))
}

fn brute_bound<'a>(cands: Vec<&'a Perm>, least: bool) -> Option<&'a Perm> {
    cands
        .iter()
        .copied()
        .find(|r| cands.iter().all(|s| if least { below(r, s) } else { below(s, r) }))
}

/// Exhaustive joins and meets in the weak order for the given degrees.
pub fn bruhat(cfg: &Config) -> Report {
    let mut r = Report::new("bruhat");
    for m in cfg.dims(&[3, 4]) {
        let all = Perm::all(m);
        for p in &all {
            for q in &all {
                let ub = brute_bound(all.iter().filter(|x| below(p, x) && below(q, x)).collect(), true);
                let lb = brute_bound(all.iter().filter(|x| below(x, p) && below(x, q)).collect(), false);
                let (j, mt) = (bruhat_join(p, q).ok(), bruhat_meet(p, q).ok());
                r.check(j.as_ref() == ub, || format!("join({p}, {q}) = {j:?}, brute force {ub:?}"));
                r.check(mt.as_ref() == lb, || format!("meet({p}, {q}) = {mt:?}, brute force {lb:?}"));
            }
        }
        r.note(format!("m = {m}: {} pairs", all.len() * all.len()));
    }
    r
}

type Word = Vec<Perm>;

/// The class of `w` under `(a, b) ~ (ab)` for length-additive products and
/// deletion of identity letters, represented by its least member.
fn relation_class(w: &Word) -> Word {
    let strip = |w: &Word| -> Word { w.iter().filter(|p| !p.is_identity()).cloned().collect() };
    let m = w.first().map_or(0, Perm::degree);
    let all = Perm::all(m);
    let start = strip(w);
    let mut seen: BTreeSet<Word> = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let mut next = Vec::new();
        for k in 0..u.len() {
            if k + 1 < u.len() {
                let ab = u[k].compose(&u[k + 1]);
                if length(&ab) == length(&u[k]) + length(&u[k + 1]) {
                    let mut v = u[..k].to_vec();
                    v.push(ab);
                    v.extend_from_slice(&u[k + 2..]);
                    next.push(v);
                }
            }
            for a in &all {
                let b = a.inverse().compose(&u[k]);
                if !a.is_identity() && !b.is_identity() && length(a) + length(&b) == length(&u[k]) {
                    let mut v = u[..k].to_vec();
                    v.push(a.clone());
                    v.push(b);
                    v.extend_from_slice(&u[k + 1..]);
                    next.push(v);
                }
            }
        }
        for v in next {
            let v = strip(&v);
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen.into_iter().next().unwrap_or_default()
}

fn product(m: usize, w: &[Perm]) -> Perm {
    w.iter().fold(Perm::identity(m), |acc, p| acc.compose(p))
}

/// All positive words of length at most 3 over the simples of `S_3`: the
/// normal forms separate exactly the relation classes, and Delta-forms
/// project correctly to `S_3`.
pub fn classical(_cfg: &Config) -> Report {
    let mut r = Report::new("classical");
    let m = 3;
    let g = BraidGerm::new(m);
    let simples = Perm::all(m);
    let mut words: Vec<Word> = vec![Vec::new()];
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..3 {
        layer = layer.iter().flat_map(|w| simples.iter().map(move |s| [w.clone(), vec![s.clone()]].concat())).collect();
        words.extend(layer.iter().cloned());
    }
    let mut class_of_nf: HashMap<Vec<Perm>, Word> = HashMap::new();
    let mut nf_of_class: BTreeMap<Word, Vec<Perm>> = BTreeMap::new();
    let w0 = Perm::longest(m);
    for w in &words {
        let class = relation_class(&if w.is_empty() { vec![Perm::identity(m)] } else { w.clone() });
        let nf = match monoid_normal_form(&g, w) {
            Ok(nf) => nf.letters,
            Err(e) => {
                r.fail(format!("normal form of {w:?}: {e}"));
                continue;
            }
        };
        let c1 = class_of_nf.entry(nf.clone()).or_insert_with(|| class.clone()).clone();
        r.check(c1 == class, || format!("words in classes {c1:?} and {class:?} share a normal form"));
        let n1 = nf_of_class.entry(class.clone()).or_insert_with(|| nf.clone()).clone();
        r.check(n1 == nf, || format!("class {class:?} has two normal forms"));

        let signed: Vec<Signed<Perm>> = w.iter().cloned().map(Signed::pos).collect();
        match group_normal_form(&g, &signed) {
            Ok(d) => {
                let delta = (0..d.k.unsigned_abs()).fold(Perm::identity(m), |acc, _| acc.compose(&w0));
                let proj = delta.compose(&product(m, &d.body));
                r.check(proj == product(m, w), || format!("Delta-form of {w:?} projects to {proj}"));
            }
            Err(e) => r.fail(format!("Delta-form of {w:?}: {e}")),
        }
    }
    r.note(format!("{} words, {} relation classes", words.len(), nf_of_class.len()));
    r
}
