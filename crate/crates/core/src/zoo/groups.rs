//! Small finite groups as multiplication tables.

use std::collections::{BTreeMap, HashMap, VecDeque};

/// A finite group with identity at index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    // (p∘q)(x) = p(q(x))
    q.iter().map(|&x| p[x]).collect()
}

fn word_label(word: &[usize], names: &[&str]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        out.push_str(names[word[i]]);
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Closure of permutation generators; elements labelled by shortest words
    /// in the generator names, found breadth first.
    pub fn from_permutations(name: &str, gens: &[Vec<usize>], names: &[&str]) -> Self {
        let deg = gens[0].len();
        let id: Vec<usize> = (0..deg).collect();
        let mut elems = vec![id.clone()];
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for (gi, g) in gens.iter().enumerate() {
                let p = compose(&elems[k], g);
                if !seen.contains_key(&p) {
                    seen.insert(p.clone(), elems.len());
                    let mut w = words[k].clone();
                    w.push(gi);
                    words.push(w);
                    elems.push(p);
                    queue.push_back(elems.len() - 1);
                }
            }
        }
        let table = elems
            .iter()
            .map(|a| elems.iter().map(|b| seen[&compose(a, b)]).collect())
            .collect();
        let labels = words.iter().map(|w| word_label(w, names)).collect();
        FiniteGroup { name: name.into(), labels, table }
    }

    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup { name: format!("Z{n}"), labels, table }
    }

    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (n, m) = (a.order(), b.order());
        let labels = (0..n * m)
            .map(|k| match (k / m, k % m) {
                (0, 0) => "e".to_string(),
                (x, 0) => a.labels[x].clone(),
                (0, y) => format!("{}'", b.labels[y]),
                (x, y) => format!("{}{}'", a.labels[x], b.labels[y]),
            })
            .collect();
        let table = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        FiniteGroup { name: format!("{}x{}", a.name, b.name), labels, table }
    }

    /// Symmetric group on three letters, elements named in cycle notation.
    pub fn s3() -> Self {
        let mut g = FiniteGroup::from_permutations("S3", &[vec![1, 0, 2], vec![1, 2, 0]], &["a", "b"]);
        // Relabel by cycle notation: recompute permutations from the table action.
        let perms = [
            vec![0, 1, 2],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![0, 2, 1],
            vec![2, 1, 0],
        ];
        let by_perm: BTreeMap<Vec<usize>, &str> = perms
            .iter()
            .cloned()
            .zip(["e", "(12)", "(123)", "(132)", "(23)", "(13)"])
            .collect();
        let elems = perm_elements(&[vec![1, 0, 2], vec![1, 2, 0]]);
        g.labels = elems.iter().map(|p| by_perm[p].to_string()).collect();
        g
    }

    /// Dihedral group of order 8 generated by a rotation `r` and reflection `s`.
    pub fn d4() -> Self {
        FiniteGroup::from_permutations("D4", &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]], &["r", "s"])
    }

    /// Quaternion group, elements ±1, ±i, ±j, ±k.
    pub fn q8() -> Self {
        // units 0=1,1=i,2=j,3=k; element index = 2·unit + (sign is minus)
        let unit_mul = |u: usize, v: usize| -> (usize, bool) {
            match (u, v) {
                (0, x) | (x, 0) => (x, false),
                (a, b) if a == b => (0, true),
                (1, 2) => (3, false),
                (2, 1) => (3, true),
                (2, 3) => (1, false),
                (3, 2) => (1, true),
                (3, 1) => (2, false),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let names = ["1", "i", "j", "k"];
        let labels = (0..8)
            .map(|x| format!("{}{}", if x % 2 == 1 { "-" } else { "" }, names[x / 2]))
            .collect();
        let table = (0..8)
            .map(|x: usize| {
                (0..8)
                    .map(|y: usize| {
                        let (u, neg) = unit_mul(x / 2, y / 2);
                        let s = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
                        2 * u + s as usize
                    })
                    .collect()
            })
            .collect();
        FiniteGroup { name: "Q8".into(), labels, table }
    }

    /// The subgroup on the listed elements, relabelled, with its embedding.
    /// The listed elements must contain the identity first and be closed.
    pub fn restrict(&self, name: &str, elems: &[usize]) -> (FiniteGroup, Vec<usize>) {
        assert_eq!(elems.first(), Some(&0), "identity must come first");
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(k, &e)| (e, k)).collect();
        let table = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| pos[&self.mul(a, b)]).collect())
            .collect();
        let labels = elems.iter().map(|&e| self.labels[e].clone()).collect();
        (FiniteGroup { name: name.into(), labels, table }, elems.to_vec())
    }

    /// Elements of the subgroup generated by `gens`, identity first, then sorted.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = std::collections::BTreeSet::from([0usize]);
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn subgroup(&self, name: &str, gens: &[&str]) -> (FiniteGroup, Vec<usize>) {
        let idx: Vec<usize> =
            gens.iter().map(|l| self.index_of(l).unwrap_or_else(|| panic!("no element {l}"))).collect();
        self.restrict(name, &self.generated(&idx))
    }
}

fn perm_elements(gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..gens[0].len()).collect();
    let mut elems = vec![id.clone()];
    let mut seen = std::collections::HashSet::from([id]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for g in gens {
            let p = compose(&elems[k], g);
            if seen.insert(p.clone()) {
                elems.push(p);
                queue.push_back(elems.len() - 1);
            }
        }
    }
    elems
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_group(g: &FiniteGroup) -> bool {
        let n = g.order();
        (0..n).all(|a| g.mul(0, a) == a && g.mul(a, 0) == a)
            && (0..n).all(|a| (0..n).any(|b| g.mul(a, b) == 0))
            && (0..n).all(|a| {
                (0..n).all(|b| (0..n).all(|c| g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))))
            })
    }

    #[test]
    fn standard_groups() {
        for (g, n) in [
            (FiniteGroup::s3(), 6),
            (FiniteGroup::d4(), 8),
            (FiniteGroup::q8(), 8),
            (FiniteGroup::cyclic(6), 6),
            (FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)), 4),
        ] {
            assert_eq!(g.order(), n);
            assert!(is_group(&g), "{}", g.name);
        }
    }

    #[test]
    fn s3_labels() {
        let g = FiniteGroup::s3();
        let a = g.index_of("(12)").unwrap();
        let b = g.index_of("(123)").unwrap();
        let c = g.index_of("(23)").unwrap();
        // (12)∘(123) sends 0→0? compose as functions: x ↦ (12)((123)(x))
        assert!(g.labels.contains(&"(13)".to_string()));
        assert_ne!(g.mul(a, b), g.mul(b, a));
        assert_eq!(g.mul(a, a), 0);
        assert_eq!(g.mul(g.mul(b, b), b), 0);
        assert_eq!(g.mul(c, c), 0);
    }

    #[test]
    fn q8_relations() {
        let g = FiniteGroup::q8();
        let i = g.index_of("i").unwrap();
        let j = g.index_of("j").unwrap();
        let k = g.index_of("k").unwrap();
        let m1 = g.index_of("-1").unwrap();
        assert_eq!(g.mul(i, j), k);
        assert_eq!(g.mul(i, i), m1);
        assert_eq!(g.mul(g.mul(i, j), k), m1);
    }
}
