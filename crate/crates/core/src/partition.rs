use std::collections::HashMap;
use std::hash::Hash;

/// An equivalence relation on `0..len`. Class ids are contiguous from 0 and
/// numbered in order of their least member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    class_count: usize,
}

impl Partition {
    /// Groups elements with equal labels.
    pub fn from_labels<L: Hash + Eq>(labels: &[L]) -> Self {
        let mut ids: HashMap<&L, usize> = HashMap::new();
        let class_of: Vec<usize> = labels
            .iter()
            .map(|l| {
                let next = ids.len();
                *ids.entry(l).or_insert(next)
            })
            .collect();
        Partition {
            class_count: ids.len(),
            class_of,
        }
    }

    pub fn discrete(len: usize) -> Self {
        Partition {
            class_of: (0..len).collect(),
            class_count: len,
        }
    }

    pub fn total(len: usize) -> Self {
        Partition {
            class_of: vec![0; len],
            class_count: usize::from(len > 0),
        }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class_of(&self, e: usize) -> usize {
        self.class_of[e]
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn is_discrete(&self) -> bool {
        self.class_count == self.class_of.len()
    }

    /// Members of each class, each list ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (e, &c) in self.class_of.iter().enumerate() {
            out[c].push(e);
        }
        out
    }

    /// Whether every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        let mut image = vec![None; self.class_count];
        self.class_of
            .iter()
            .zip(&coarser.class_of)
            .all(|(&mine, &theirs)| *image[mine].get_or_insert(theirs) == theirs)
    }

    /// Whether `set` (a membership vector) is a union of classes.
    pub fn saturates(&self, set: &[bool]) -> bool {
        let mut seen: Vec<Option<bool>> = vec![None; self.class_count];
        set.iter()
            .zip(&self.class_of)
            .all(|(&m, &c)| *seen[c].get_or_insert(m) == m)
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; returns false if already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn into_partition(mut self) -> Partition {
        let roots: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&roots)
    }
}
