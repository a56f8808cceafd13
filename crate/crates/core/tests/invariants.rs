use proptest::prelude::*;
use zbraid_core::bruhat::{bruhat_join, bruhat_meet, weak_leq, BraidGerm, Perm};
use zbraid_core::engine::{group_eq, group_inv, group_mul, group_normal_form, Germ, Signed};
use zbraid_core::lattice::ZnGerm;
use zbraid_core::UniMatrix;

/// Inversion count straight from the one-line notation.
fn length(p: &Perm) -> usize {
    let v = p.one_line();
    (0..v.len()).flat_map(|i| (i + 1..v.len()).map(move |j| (i, j))).filter(|&(i, j)| v[i] > v[j]).count()
}

/// Weak order by lengths: `p <= q` iff `l(q) = l(p) + l(p^-1 q)`.
fn below(p: &Perm, q: &Perm) -> bool {
    length(q) == length(p) + length(&p.inverse().compose(q))
}

#[test]
fn weak_order_joins_match_brute_force() {
    let all = Perm::all(4);
    for p in &all {
        for q in &all {
            assert_eq!(weak_leq(p, q), below(p, q));
            let ub: Vec<&Perm> = all.iter().filter(|r| below(p, r) && below(q, r)).collect();
            let lub = ub.iter().find(|r| ub.iter().all(|s| below(r, s))).unwrap();
            assert_eq!(&&bruhat_join(p, q).unwrap(), lub);
            let lb: Vec<&Perm> = all.iter().filter(|r| below(r, p) && below(r, q)).collect();
            let glb = lb.iter().find(|r| lb.iter().all(|s| below(s, r))).unwrap();
            assert_eq!(&&bruhat_meet(p, q).unwrap(), glb);
        }
    }
}

fn signed_word() -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0usize..24, any::<bool>()), 0..6)
}

fn to_signed(all: &[Perm], w: &[(usize, bool)]) -> Vec<Signed<Perm>> {
    w.iter().map(|&(k, neg)| if neg { Signed::neg(all[k].clone()) } else { Signed::pos(all[k].clone()) }).collect()
}

fn unimodular2() -> impl Strategy<Value = UniMatrix> {
    (-4i64..=4, -4i64..=4, -4i64..=4, -4i64..=4)
        .prop_filter("unimodular", |(a, b, c, d)| (a * d - b * c).abs() == 1)
        .prop_map(|(a, b, c, d)| UniMatrix::from_i64(&[&[a, b], &[c, d]]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn braid_group_forms_a_group(u in signed_word(), v in signed_word(), w in signed_word()) {
        let g = BraidGerm::new(4);
        let all = Perm::all(4);
        let nf = |x: &[(usize, bool)]| group_normal_form(&g, &to_signed(&all, x)).unwrap();
        let (a, b, c) = (nf(&u), nf(&v), nf(&w));
        let left = group_mul(&g, &group_mul(&g, &a, &b).unwrap(), &c).unwrap();
        let right = group_mul(&g, &a, &group_mul(&g, &b, &c).unwrap()).unwrap();
        prop_assert!(group_eq(&g, &left, &right));
        let one = group_mul(&g, &a, &group_inv(&g, &a).unwrap()).unwrap();
        prop_assert!(group_eq(&g, &one, &nf(&[])));
        let uv: Vec<_> = u.iter().chain(&v).copied().collect();
        prop_assert!(group_eq(&g, &nf(&uv), &group_mul(&g, &a, &b).unwrap()));
    }

    #[test]
    fn zn_cosets_form_a_lattice(a in unimodular2(), b in unimodular2()) {
        let g = ZnGerm::new(2);
        let j = g.join_coset(&a, &b).unwrap();
        let m = g.meet_coset(&a, &b).unwrap();
        prop_assert!(g.precedes(&a, &j) && g.precedes(&b, &j));
        prop_assert!(g.precedes(&m, &a) && g.precedes(&m, &b));
        prop_assert!(g.same_coset(&g.join_coset(&b, &a).unwrap(), &j));
        if g.precedes(&a, &b) {
            prop_assert!(g.same_coset(&j, &b));
            prop_assert!(g.same_coset(&m, &a));
        }
    }
}
