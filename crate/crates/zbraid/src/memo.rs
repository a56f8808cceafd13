//! A caching wrapper for germs whose lattice operations are expensive.

use std::collections::HashMap;
use std::sync::Mutex;

use zbraid_core::engine::Germ;
use zbraid_core::Result;

type Pair<E> = (E, E);

/// Caches coset keys, `precedes` and the coset lattice operations. Answers
/// depend only on cosets, so keys are canonical representatives.
pub struct MemoGerm<G: Germ> {
    pub inner: G,
    keys: Mutex<HashMap<G::Elem, G::Elem>>,
    prec: Mutex<HashMap<Pair<G::Elem>, bool>>,
    meets: Mutex<HashMap<Pair<G::Elem>, G::Elem>>,
    joins: Mutex<HashMap<Pair<G::Elem>, G::Elem>>,
}

impl<G: Germ> MemoGerm<G> {
    pub fn new(inner: G) -> Self {
        MemoGerm {
            inner,
            keys: Mutex::default(),
            prec: Mutex::default(),
            meets: Mutex::default(),
            joins: Mutex::default(),
        }
    }

    fn pair(&self, a: &G::Elem, b: &G::Elem) -> Pair<G::Elem> {
        (self.coset_key(a), self.coset_key(b))
    }

    fn cached(
        &self,
        map: &Mutex<HashMap<Pair<G::Elem>, G::Elem>>,
        key: Pair<G::Elem>,
        f: impl FnOnce() -> Result<G::Elem>,
    ) -> Result<G::Elem> {
        if let Some(v) = map.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = f()?;
        map.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }
}

impl<G: Germ> Germ for MemoGerm<G> {
    type Elem = G::Elem;

    fn identity(&self) -> G::Elem {
        self.inner.identity()
    }
    fn w0(&self) -> G::Elem {
        self.inner.w0()
    }
    fn mul(&self, a: &G::Elem, b: &G::Elem) -> G::Elem {
        self.inner.mul(a, b)
    }
    fn inv(&self, a: &G::Elem) -> G::Elem {
        self.inner.inv(a)
    }
    fn is_unit(&self, a: &G::Elem) -> bool {
        self.inner.is_unit(a)
    }
    fn coset_key(&self, a: &G::Elem) -> G::Elem {
        if let Some(k) = self.keys.lock().unwrap().get(a) {
            return k.clone();
        }
        let k = self.inner.coset_key(a);
        self.keys.lock().unwrap().insert(a.clone(), k.clone());
        k
    }
    fn precedes(&self, a: &G::Elem, b: &G::Elem) -> bool {
        let key = self.pair(a, b);
        if let Some(&v) = self.prec.lock().unwrap().get(&key) {
            return v;
        }
        let v = self.inner.precedes(&key.0, &key.1);
        self.prec.lock().unwrap().insert(key, v);
        v
    }
    fn meet_coset(&self, a: &G::Elem, b: &G::Elem) -> Result<G::Elem> {
        let key = self.pair(a, b);
        let (x, y) = key.clone();
        self.cached(&self.meets, key, || self.inner.meet_coset(&x, &y))
    }
    fn join_coset(&self, a: &G::Elem, b: &G::Elem) -> Result<G::Elem> {
        let key = self.pair(a, b);
        let (x, y) = key.clone();
        self.cached(&self.joins, key, || self.inner.join_coset(&x, &y))
    }
    fn tau(&self, a: &G::Elem) -> G::Elem {
        self.inner.tau(a)
    }
    fn tau_inv(&self, a: &G::Elem) -> G::Elem {
        self.inner.tau_inv(a)
    }
    fn tau_pow(&self, a: &G::Elem, m: i64) -> G::Elem {
        self.inner.tau_pow(a, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use zbraid_core::lattice::ZnGerm;
    use zbraid_core::UniMatrix;

    #[test]
    fn answers_match_the_inner_germ() {
        let g = ZnGerm::new(2);
        let m = MemoGerm::new(g);
        let a = UniMatrix::from_i64(&[&[2, 1], &[1, 1]]).unwrap();
        let b = UniMatrix::diag_signs(&[1, -1]);
        // a second round is served from the caches
        for _ in 0..2 {
            assert_eq!(m.precedes(&a, &b), g.precedes(&a, &b));
            assert_eq!(m.meet_coset(&a, &b).unwrap(), g.meet_coset(&a, &b).unwrap());
            assert_eq!(m.join_coset(&a, &b).unwrap(), g.join_coset(&a, &b).unwrap());
            assert_eq!(m.coset_key(&a), g.coset_key(&a));
        }
    }
}
