//! Hurwitz orbits, the index of the liftable subgroup, Schreier generators,
//! and exhaustive classification of sequences up to Hurwitz moves and sheet
//! renumbering.
//!
//! The orbit of a sequence under `B_n` is in bijection with the cosets of
//! its stabilizer, the liftable subgroup, so the orbit size is the index.

use std::collections::HashMap;

use crate::braid::BraidWord;
use crate::covering::{all_sequences, MonodromySequence};
use crate::error::{Error, Result};
use crate::hurwitz::apply_letter;
use crate::perm::{CycleType, Permutation};

/// `(d(d-1)/2)^n`, the number of length-`n` transposition sequences on `d`
/// sheets, saturating at `u128::MAX`.
pub fn sequence_count_bound(degree: u32, n: usize) -> u128 {
    let base = degree as u128 * degree.saturating_sub(1) as u128 / 2;
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.saturating_mul(base);
    }
    acc
}

/// Default exploration cap: the sequence-count bound, clamped to `usize`.
pub fn default_cap(degree: u32, n: usize) -> usize {
    sequence_count_bound(degree, n).min(usize::MAX as u128) as usize
}

/// Breadth-first Hurwitz orbit with its spanning tree.
#[derive(Clone, Debug)]
pub struct OrbitTable {
    elements: Vec<MonodromySequence>,
    index: HashMap<MonodromySequence, usize>,
    /// Tree edge into each element: (parent index, generator letter).
    parents: Vec<Option<(usize, i32)>>,
    cap: usize,
}

impl OrbitTable {
    pub fn root(&self) -> &MonodromySequence {
        &self.elements[0]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Elements in discovery order; the root is first.
    pub fn elements(&self) -> &[MonodromySequence] {
        &self.elements
    }

    pub fn position(&self, seq: &MonodromySequence) -> Option<usize> {
        self.index.get(seq).copied()
    }

    pub fn contains(&self, seq: &MonodromySequence) -> bool {
        self.index.contains_key(seq)
    }

    pub fn parent(&self, i: usize) -> Option<(usize, i32)> {
        self.parents[i]
    }

    /// Tree word carrying the root to element `i`.
    pub fn tree_word(&self, i: usize) -> BraidWord {
        let mut letters = Vec::new();
        let mut cur = i;
        while let Some((p, l)) = self.parents[cur] {
            letters.push(l);
            cur = p;
        }
        letters.reverse();
        BraidWord::new(self.root().len(), letters).expect("tree letters are generators")
    }
}

/// Orbit of `seq` under the Hurwitz action, explored breadth first with
/// generators in the order `x_1, x_1⁻¹, x_2, x_2⁻¹, …`.
pub fn hurwitz_orbit(seq: &MonodromySequence, cap: usize) -> Result<OrbitTable> {
    if cap == 0 {
        return Err(Error::Precondition("cap must be at least 1".into()));
    }
    let n = seq.len();
    let letters: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
    let mut table = OrbitTable {
        elements: vec![seq.clone()],
        index: HashMap::from([(seq.clone(), 0)]),
        parents: vec![None],
        cap,
    };
    let mut head = 0;
    while head < table.elements.len() {
        for &l in &letters {
            let mut next = table.elements[head].clone();
            apply_letter(next.entries_mut(), l);
            if table.index.contains_key(&next) {
                continue;
            }
            if table.elements.len() == cap {
                return Err(Error::CapExceeded { cap });
            }
            table.index.insert(next.clone(), table.elements.len());
            table.elements.push(next);
            table.parents.push(Some((head, l)));
        }
        head += 1;
    }
    Ok(table)
}

/// Index of the liftable subgroup in `B_n`: the orbit size.
pub fn stabilizer_index(seq: &MonodromySequence, cap: usize) -> Result<usize> {
    Ok(hurwitz_orbit(seq, cap)?.len())
}

/// Schreier generators `t_u · x_i · t_{(u)x_i}⁻¹` of the liftable subgroup,
/// freely reduced, trivial ones dropped, duplicates removed.
pub fn schreier_generators(seq: &MonodromySequence, cap: usize) -> Result<Vec<BraidWord>> {
    let orbit = hurwitz_orbit(seq, cap)?;
    let n = seq.len();
    let words: Vec<BraidWord> = (0..orbit.len()).map(|i| orbit.tree_word(i)).collect();
    let mut out: Vec<BraidWord> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (u, elem) in orbit.elements().iter().enumerate() {
        for g in 1..n as i32 {
            let mut image = elem.clone();
            apply_letter(image.entries_mut(), g);
            let v = orbit.position(&image).expect("orbit is closed");
            let gen = BraidWord::new(n, vec![g])?;
            let w = words[u].juxtapose(&gen)?.concat(&words[v].inverse())?;
            if !w.is_empty() && seen.insert(w.clone()) {
                out.push(w);
            }
        }
    }
    Ok(out)
}

/// One class of sequences under Hurwitz moves and simultaneous renumbering
/// of the sheets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringClass {
    /// Lexicographically least member of the class.
    pub representative: MonodromySequence,
    /// Number of raw sequences in the class.
    pub count: usize,
    pub omega: CycleType,
    pub connected: bool,
}

/// Every permutation of `{1, …, degree}`, lexicographically.
pub fn all_permutations(degree: u32) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if prefix.len() == used.len() {
            out.push(Permutation::from_images(prefix.clone()).expect("bijection"));
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x as u32 + 1);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; degree as usize], &mut out);
    out
}

/// Least renumbering of the sequence in lexicographic order.
pub fn least_relabelling(seq: &MonodromySequence, perms: &[Permutation]) -> MonodromySequence {
    perms
        .iter()
        .map(|g| seq.relabel(g))
        .min()
        .expect("at least the identity")
}

/// Enumerates all length-`n` sequences on `degree` sheets and groups them
/// into classes under Hurwitz moves plus sheet renumbering.
///
/// Fails with [`Error::CapExceeded`] when `(d(d-1)/2)^n > cap`.
pub fn classify_all(degree: u32, n: usize, cap: usize) -> Result<Vec<CoveringClass>> {
    if degree == 0 {
        return Err(Error::ZeroDegree);
    }
    if sequence_count_bound(degree, n) > cap as u128 {
        return Err(Error::CapExceeded { cap });
    }
    let perms = all_permutations(degree);
    let mut key_index: HashMap<MonodromySequence, usize> = HashMap::new();
    let mut keys: Vec<MonodromySequence> = Vec::new();
    let mut counts: Vec<usize> = Vec::new();
    for s in all_sequences(degree, n) {
        let key = least_relabelling(&s, &perms);
        let id = *key_index.entry(key.clone()).or_insert_with(|| {
            keys.push(key);
            counts.push(0);
            keys.len() - 1
        });
        counts[id] += 1;
    }

    let mut parent: Vec<usize> = (0..keys.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (id, key) in keys.iter().enumerate() {
        for g in 1..n as i32 {
            let mut image = key.clone();
            apply_letter(image.entries_mut(), g);
            let other = key_index[&least_relabelling(&image, &perms)];
            let (ra, rb) = (find(&mut parent, id), find(&mut parent, other));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }

    let mut classes: HashMap<usize, CoveringClass> = HashMap::new();
    for id in 0..keys.len() {
        let root = find(&mut parent, id);
        let entry = classes.entry(root).or_insert_with(|| CoveringClass {
            representative: keys[id].clone(),
            count: 0,
            omega: keys[id].omega_class(),
            connected: keys[id].is_connected(),
        });
        entry.count += counts[id];
        if keys[id] < entry.representative {
            entry.representative = keys[id].clone();
        }
    }
    let mut out: Vec<CoveringClass> = classes.into_values().collect();
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(out)
}
