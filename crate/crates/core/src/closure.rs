//! Breadth-first closure of finite function tables under letter actions.

use std::collections::HashMap;
use std::hash::Hash;

use crate::word::Word;

/// The closure of some seed elements under `k` letter actions, discovered in
/// breadth-first order. When seeds are listed shortlex, the stored
/// representatives are the shortlex-least words reaching each element and the
/// element order agrees with representative order.
pub(crate) struct Orbit<K> {
    pub items: Vec<K>,
    pub reps: Vec<Word>,
    pub index: HashMap<K, usize>,
    /// `step[i * k + a]`
    pub step: Vec<usize>,
}

impl<K: Hash + Eq + Clone> Orbit<K> {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn get(&self, key: &K) -> Option<usize> {
        self.index.get(key).copied()
    }
}

pub(crate) fn orbit<K, F>(k: usize, seeds: Vec<(K, Word)>, act: F) -> Orbit<K>
where
    K: Hash + Eq + Clone,
    F: Fn(&K, usize) -> K,
{
    let mut items = Vec::new();
    let mut reps = Vec::new();
    let mut index = HashMap::new();
    for (key, rep) in seeds {
        if !index.contains_key(&key) {
            index.insert(key.clone(), items.len());
            items.push(key);
            reps.push(rep);
        }
    }
    let mut step = Vec::new();
    let mut next = 0;
    while next < items.len() {
        for a in 0..k {
            let image = act(&items[next], a);
            let id = match index.get(&image) {
                Some(&id) => id,
                None => {
                    let id = items.len();
                    index.insert(image.clone(), id);
                    reps.push(reps[next].append(a));
                    items.push(image);
                    id
                }
            };
            step.push(id);
        }
        next += 1;
    }
    Orbit {
        items,
        reps,
        index,
        step,
    }
}

/// `g ∘ f` for functions stored as image vectors.
pub(crate) fn compose(g: &[usize], f: &[usize]) -> Vec<usize> {
    f.iter().map(|&x| g[x]).collect()
}
