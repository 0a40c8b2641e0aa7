//! Brute-force group theory on multiplication tables, for |Γ| ≤ 24.
//!
//! Everything here works with plain element sets and never touches the Hopf
//! algebra code, so its answers can be used to check that code.

use std::collections::BTreeSet;

use super::groups::FiniteGroup;

pub type Set = BTreeSet<usize>;

pub const MAX_ORACLE_ORDER: usize = 24;

fn check(g: &FiniteGroup) {
    assert!(g.order() <= MAX_ORACLE_ORDER, "oracle limited to |Γ| ≤ {MAX_ORACLE_ORDER}");
}

pub fn inverse(g: &FiniteGroup, a: usize) -> usize {
    (0..g.order()).find(|&b| g.table[a][b] == 0).expect("inverse exists")
}

/// Close a set under multiplication (enough for finite groups).
pub fn closure(g: &FiniteGroup, gens: &Set) -> Set {
    check(g);
    let mut s: Set = gens.clone();
    s.insert(0);
    loop {
        let mut grown = s.clone();
        for &a in &s {
            for &b in &s {
                grown.insert(g.table[a][b]);
            }
        }
        if grown.len() == s.len() {
            return s;
        }
        s = grown;
    }
}

/// Every subgroup, found by adjoining one element at a time.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Set> {
    check(g);
    let mut found: BTreeSet<Set> = BTreeSet::new();
    let mut todo = vec![Set::from([0])];
    while let Some(h) = todo.pop() {
        if !found.insert(h.clone()) {
            continue;
        }
        for x in 0..g.order() {
            if !h.contains(&x) {
                let mut gens = h.clone();
                gens.insert(x);
                let k = closure(g, &gens);
                if !found.contains(&k) {
                    todo.push(k);
                }
            }
        }
    }
    let mut v: Vec<Set> = found.into_iter().collect();
    v.sort_by_key(|s| (s.len(), s.iter().cloned().collect::<Vec<_>>()));
    v
}

pub fn is_subgroup(g: &FiniteGroup, h: &Set) -> bool {
    h.contains(&0) && h.iter().all(|&a| h.iter().all(|&b| h.contains(&g.table[a][b])))
}

pub fn is_normal_in(g: &FiniteGroup, n: &Set, ambient: &Set) -> bool {
    ambient.iter().all(|&x| {
        let xi = inverse(g, x);
        n.iter().all(|&y| n.contains(&g.table[g.table[x][y]][xi]))
    })
}

pub fn is_normal(g: &FiniteGroup, n: &Set) -> bool {
    is_normal_in(g, n, &(0..g.order()).collect())
}

pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Set> {
    all_subgroups(g).into_iter().filter(|n| is_normal(g, n)).collect()
}

/// [x, y] = x y x⁻¹ y⁻¹.
pub fn commutator_element(g: &FiniteGroup, x: usize, y: usize) -> usize {
    let t = &g.table;
    t[t[t[x][y]][inverse(g, x)]][inverse(g, y)]
}

/// ⟨[n, m] : n ∈ N, m ∈ M⟩.
pub fn commutator(g: &FiniteGroup, n: &Set, m: &Set) -> Set {
    let mut gens = Set::new();
    for &x in n {
        for &y in m {
            gens.insert(commutator_element(g, x, y));
        }
    }
    closure(g, &gens)
}

pub fn whole(g: &FiniteGroup) -> Set {
    (0..g.order()).collect()
}

/// Γ_0 = Γ, Γ_{i+1} = [Γ, Γ_i] until it stabilises.
pub fn lower_central_series(g: &FiniteGroup) -> Vec<Set> {
    let all = whole(g);
    let mut series = vec![all.clone()];
    loop {
        let next = commutator(g, &all, series.last().unwrap());
        if &next == series.last().unwrap() {
            return series;
        }
        series.push(next);
    }
}

/// Least c with Γ_c trivial; None when the series stalls above 1.
pub fn nilpotency_class(g: &FiniteGroup) -> Option<usize> {
    let s = lower_central_series(g);
    if s.last().unwrap().len() == 1 {
        Some(s.len() - 1)
    } else {
        None
    }
}

pub fn is_abelian(g: &FiniteGroup) -> bool {
    (0..g.order()).all(|a| (0..g.order()).all(|b| g.table[a][b] == g.table[b][a]))
}

pub fn product_set(g: &FiniteGroup, k: &Set, m: &Set) -> Set {
    let mut out = Set::new();
    for &a in k {
        for &b in m {
            out.insert(g.table[a][b]);
        }
    }
    out
}

pub fn intersection(a: &Set, b: &Set) -> Set {
    a.intersection(b).cloned().collect()
}

/// Orders of the three Zassenhaus quotients for K ⊴ U, L ⊴ V.
pub fn zassenhaus_orders(g: &FiniteGroup, u: &Set, v: &Set, k: &Set, l: &Set) -> [usize; 3] {
    let uv = intersection(u, v);
    let kv = intersection(k, v);
    let lu = intersection(l, u);
    let left = product_set(g, k, &uv).len() / product_set(g, k, &lu).len();
    let mid = uv.len() / product_set(g, &kv, &lu).len();
    let right = product_set(g, l, &uv).len() / product_set(g, l, &kv).len();
    [left, mid, right]
}

/// conj[x][y] = x y x⁻¹.
pub fn conjugation_table(g: &FiniteGroup) -> Vec<Vec<usize>> {
    (0..g.order())
        .map(|x| {
            let xi = inverse(g, x);
            (0..g.order()).map(|y| g.table[g.table[x][y]][xi]).collect()
        })
        .collect()
}

/// Multiplication table of Γ/N on the cosets, cosets listed by least element.
pub fn quotient_table(g: &FiniteGroup, n: &Set) -> Vec<Vec<usize>> {
    let mut reps: Vec<usize> = vec![];
    let mut coset_of = vec![usize::MAX; g.order()];
    for x in 0..g.order() {
        if coset_of[x] == usize::MAX {
            for &y in n {
                coset_of[g.table[x][y]] = reps.len();
            }
            reps.push(x);
        }
    }
    reps.iter().map(|&a| reps.iter().map(|&b| coset_of[g.table[a][b]]).collect()).collect()
}

pub fn center(g: &FiniteGroup) -> Set {
    (0..g.order())
        .filter(|&a| (0..g.order()).all(|b| g.table[a][b] == g.table[b][a]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroup_counts() {
        assert_eq!(all_subgroups(&FiniteGroup::s3()).len(), 6);
        assert_eq!(all_subgroups(&FiniteGroup::d4()).len(), 10);
        assert_eq!(all_subgroups(&FiniteGroup::q8()).len(), 6);
        assert_eq!(normal_subgroups(&FiniteGroup::s3()).len(), 3);
        assert_eq!(normal_subgroups(&FiniteGroup::d4()).len(), 6);
        assert_eq!(normal_subgroups(&FiniteGroup::q8()).len(), 6);
    }

    #[test]
    fn classes() {
        let c2 = FiniteGroup::cyclic(2);
        assert_eq!(nilpotency_class(&c2), Some(1));
        assert_eq!(nilpotency_class(&FiniteGroup::cyclic(1)), Some(0));
        assert_eq!(nilpotency_class(&FiniteGroup::product(&c2, &c2)), Some(1));
        assert_eq!(nilpotency_class(&FiniteGroup::cyclic(6)), Some(1));
        assert_eq!(nilpotency_class(&FiniteGroup::d4()), Some(2));
        assert_eq!(nilpotency_class(&FiniteGroup::q8()), Some(2));
        assert_eq!(nilpotency_class(&FiniteGroup::s3()), None);
        let s = lower_central_series(&FiniteGroup::s3());
        assert_eq!(s.last().unwrap().len(), 3);
    }

    #[test]
    fn derived_subgroups() {
        let g = FiniteGroup::d4();
        let d = commutator(&g, &whole(&g), &whole(&g));
        assert_eq!(d, center(&g));
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn zassenhaus_sizes_agree() {
        let g = FiniteGroup::d4();
        let r = g.index_of("r").unwrap();
        let u = whole(&g);
        let v = closure(&g, &Set::from([r]));
        let k = closure(&g, &Set::from([g.table[r][r]]));
        let l = Set::from([0]);
        let o = zassenhaus_orders(&g, &u, &v, &k, &l);
        assert_eq!(o, [2, 2, 2]);
    }

    #[test]
    fn quotient_is_group_of_right_order() {
        let g = FiniteGroup::d4();
        let z = center(&g);
        let q = quotient_table(&g, &z);
        assert_eq!(q.len(), 4);
        // D4/Z(D4) is the Klein group
        assert!((0..4).all(|b| q[b][b] == 0));
    }
}
