//! Todd–Coxeter coset enumeration over the standard presentation of `B_n`
//! and the end-to-end check that the cubes `x_i³` and squares `x_{i,j}²`
//! generate the liftable subgroup of the disk covering.
//!
//! The enumeration is relator-driven (HLT) with full coincidence
//! processing. Columns `2k` and `2k + 1` hold the action of `x_{k+1}` and its
//! inverse.

use crate::braid::BraidWord;
use crate::covering::MonodromySequence;
use crate::error::{Error, Result};
use crate::lift::{disk_liftable_generators, interval_type, is_liftable, IntervalRef};
use crate::orbit::{sequence_count_bound, stabilizer_index};

const UNDEF: u32 = u32::MAX;

/// `⟨x_1, …, x_{n-1} | x_i x_{i+1} x_i = x_{i+1} x_i x_{i+1}, x_i x_j = x_j x_i (|i-j| ≥ 2)⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    strands: usize,
    relators: Vec<Vec<i32>>,
}

impl Presentation {
    pub fn braid_group(strands: usize) -> Self {
        let g = strands.saturating_sub(1) as i32;
        let mut relators = Vec::new();
        for i in 1..g {
            relators.push(vec![i, i + 1, i, -(i + 1), -i, -(i + 1)]);
        }
        for i in 1..=g {
            for j in i + 2..=g {
                relators.push(vec![i, j, -i, -j]);
            }
        }
        Presentation { strands, relators }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn generator_count(&self) -> usize {
        self.strands.saturating_sub(1)
    }

    pub fn relators(&self) -> &[Vec<i32>] {
        &self.relators
    }
}

fn column(letter: i32) -> usize {
    let k = letter.unsigned_abs() as usize - 1;
    if letter > 0 {
        2 * k
    } else {
        2 * k + 1
    }
}

fn inverse_column(col: usize) -> usize {
    col ^ 1
}

/// A complete coset table: `rows[c][col]` is the image of coset `c` (0-based,
/// coset 0 is the subgroup itself).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    strands: usize,
    rows: Vec<Vec<u32>>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Image of coset `c` under a signed generator.
    pub fn act(&self, coset: usize, letter: i32) -> usize {
        self.rows[coset][column(letter)] as usize
    }

    pub fn act_word(&self, coset: usize, word: &[i32]) -> usize {
        word.iter().fold(coset, |c, &l| self.act(c, l))
    }

    /// Generators act as permutations, every relator fixes every coset, and
    /// every subgroup word fixes coset 0.
    pub fn is_consistent(&self, subgroup: &[BraidWord]) -> bool {
        let pres = Presentation::braid_group(self.strands);
        let g = pres.generator_count();
        for col in 0..2 * g {
            let mut hit = vec![false; self.rows.len()];
            for row in &self.rows {
                let img = row[col] as usize;
                if img >= hit.len() || hit[img] {
                    return false;
                }
                hit[img] = true;
            }
        }
        for c in 0..self.rows.len() {
            for l in 1..=g as i32 {
                if self.act(self.act(c, l), -l) != c {
                    return false;
                }
            }
            if pres.relators().iter().any(|r| self.act_word(c, r) != c) {
                return false;
            }
        }
        subgroup.iter().all(|w| self.act_word(0, w.letters()) == 0)
    }
}

struct Enumerator {
    cols: usize,
    table: Vec<Vec<u32>>,
    forward: Vec<u32>,
    max_cosets: usize,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(cols: usize, max_cosets: usize) -> Self {
        Enumerator {
            cols,
            table: vec![vec![UNDEF; cols]],
            forward: vec![0],
            max_cosets,
            queue: Vec::new(),
        }
    }

    fn is_live(&self, c: u32) -> bool {
        self.forward[c as usize] == c
    }

    fn define(&mut self, c: u32, col: usize) -> Result<u32> {
        if self.table.len() >= self.max_cosets {
            return Err(Error::Inconclusive {
                max_cosets: self.max_cosets,
            });
        }
        let d = self.table.len() as u32;
        self.table.push(vec![UNDEF; self.cols]);
        self.forward.push(d);
        self.table[c as usize][col] = d;
        self.table[d as usize][inverse_column(col)] = c;
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.forward[root as usize] != root {
            root = self.forward[root as usize];
        }
        let mut cur = c;
        while self.forward[cur as usize] != root {
            let next = self.forward[cur as usize];
            self.forward[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.forward[hi as usize] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i];
            i += 1;
            for col in 0..self.cols {
                let target = self.table[dead as usize][col];
                if target == UNDEF {
                    continue;
                }
                let inv = inverse_column(col);
                if self.table[target as usize][inv] == dead {
                    self.table[target as usize][inv] = UNDEF;
                }
                let mu = self.rep(dead);
                let nu = self.rep(target);
                if self.table[mu as usize][col] != UNDEF {
                    let existing = self.table[mu as usize][col];
                    self.merge(nu, existing);
                } else if self.table[nu as usize][inv] != UNDEF {
                    let existing = self.table[nu as usize][inv];
                    self.merge(mu, existing);
                } else {
                    self.table[mu as usize][col] = nu;
                    self.table[nu as usize][inv] = mu;
                }
            }
        }
    }

    /// Traces `word` from coset `c` in both directions, defining new cosets
    /// until the relation closes.
    fn scan_and_fill(&mut self, c: u32, word: &[usize]) -> Result<()> {
        if word.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = word.len() as isize - 1;
        loop {
            while (i as isize) <= j && self.table[f as usize][word[i]] != UNDEF {
                f = self.table[f as usize][word[i]];
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize
                && self.table[b as usize][inverse_column(word[j as usize])] != UNDEF
            {
                b = self.table[b as usize][inverse_column(word[j as usize])];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.table[f as usize][word[i]] = b;
                self.table[b as usize][inverse_column(word[i])] = f;
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }

    fn compact(mut self) -> Vec<Vec<u32>> {
        // renumber live cosets in breadth-first order from coset 0
        let mut order = vec![0u32];
        let mut new_id = vec![UNDEF; self.table.len()];
        new_id[0] = 0;
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            head += 1;
            for col in 0..self.cols {
                let t = self.rep(self.table[c as usize][col]);
                if new_id[t as usize] == UNDEF {
                    new_id[t as usize] = order.len() as u32;
                    order.push(t);
                }
            }
        }
        order
            .iter()
            .map(|&c| {
                (0..self.cols)
                    .map(|col| {
                        let t = self.table[c as usize][col];
                        new_id[self.rep(t) as usize]
                    })
                    .collect()
            })
            .collect()
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in `B_n`.
///
/// Returns [`Error::Inconclusive`] once more than `max_cosets` cosets have
/// been defined; for subgroups of infinite index this always happens.
pub fn todd_coxeter(
    strands: usize,
    subgroup: &[BraidWord],
    max_cosets: usize,
) -> Result<(usize, CosetTable)> {
    if max_cosets == 0 {
        return Err(Error::Precondition("max_cosets must be at least 1".into()));
    }
    for w in subgroup {
        if w.strands() != strands {
            return Err(Error::StrandMismatch {
                expected: strands,
                found: w.strands(),
            });
        }
    }
    let pres = Presentation::braid_group(strands);
    let cols = 2 * pres.generator_count();
    if cols == 0 {
        return Ok((
            1,
            CosetTable {
                strands,
                rows: vec![Vec::new()],
            },
        ));
    }
    let relators: Vec<Vec<usize>> = pres
        .relators()
        .iter()
        .map(|r| r.iter().map(|&l| column(l)).collect())
        .collect();
    let mut en = Enumerator::new(cols, max_cosets);
    for w in subgroup {
        let cols_w: Vec<usize> = w.reduced().letters().iter().map(|&l| column(l)).collect();
        en.scan_and_fill(0, &cols_w)?;
    }
    let mut c = 0u32;
    while (c as usize) < en.table.len() {
        for r in &relators {
            if !en.is_live(c) {
                break;
            }
            en.scan_and_fill(c, r)?;
        }
        if en.is_live(c) {
            for col in 0..cols {
                if en.table[c as usize][col] == UNDEF {
                    en.define(c, col)?;
                }
            }
        }
        c += 1;
    }
    let rows = en.compact();
    Ok((rows.len(), CosetTable { strands, rows }))
}

/// Default coset budget: 64 times the sequence-count bound of the disk
/// covering with `strands` branch points.
pub fn default_max_cosets(strands: usize) -> usize {
    let bound = sequence_count_bound(strands as u32 + 1, strands);
    (bound.saturating_mul(64)).min(usize::MAX as u128) as usize
}

/// Outcome of checking the generator set of the liftable subgroup of the
/// disk covering `p_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorReport {
    pub n: usize,
    pub generators: Vec<BraidWord>,
    /// First generator found not to lift, if any.
    pub non_liftable: Option<BraidWord>,
    pub orbit_index: usize,
    /// `None` when a non-liftable generator stopped the check early.
    pub tc_index: Option<usize>,
    pub pass: bool,
}

/// Checks that every generator lifts and that the subgroup they generate has
/// the same index as the liftable subgroup (the orbit size). Together these
/// show the generators generate exactly the liftable subgroup.
pub fn verify_disk_generators(n: usize, max_cosets: usize) -> Result<GeneratorReport> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let pn = MonodromySequence::disk(n);
    let generators = disk_liftable_generators(n);
    let orbit_index = stabilizer_index(&pn, crate::orbit::default_cap(n as u32 + 1, n))?;
    for w in &generators {
        if !is_liftable(&pn, w)? {
            return Ok(GeneratorReport {
                n,
                non_liftable: Some(w.clone()),
                generators,
                orbit_index,
                tc_index: None,
                pass: false,
            });
        }
    }
    let (tc_index, _) = todd_coxeter(n, &generators, max_cosets)?;
    Ok(GeneratorReport {
        n,
        generators,
        non_liftable: None,
        orbit_index,
        tc_index: Some(tc_index),
        pass: tc_index == orbit_index,
    })
}

/// Outcome of feeding liftable powers of short-word intervals to the coset
/// enumerator for an arbitrary covering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalExploration {
    pub generators: Vec<BraidWord>,
    pub orbit_index: usize,
    pub tc_index: usize,
    /// The interval powers generate the whole liftable subgroup.
    pub generates: bool,
}

/// Collects `x^type` for every interval `(x_i)w` with `|w| <= max_word_len`
/// and compares the index of the subgroup they generate with the orbit size.
pub fn explore_interval_generators(
    seq: &MonodromySequence,
    max_word_len: usize,
    orbit_cap: usize,
    max_cosets: usize,
) -> Result<IntervalExploration> {
    let n = seq.len();
    let orbit_index = stabilizer_index(seq, orbit_cap)?;
    let mut generators: Vec<BraidWord> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let letters: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
    let mut words: Vec<Vec<i32>> = vec![Vec::new()];
    let mut frontier = words.clone();
    for _ in 0..max_word_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                if w.last() == Some(&-l) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    for base in 1..n {
        for w in &words {
            let x = IntervalRef::new(n, base, BraidWord::new(n, w.clone())?)?;
            let k = interval_type(seq, &x)?;
            let g = x.braid_power(k as u32);
            if !g.is_empty() && seen.insert(g.clone()) {
                generators.push(g);
            }
        }
    }
    let (tc_index, _) = todd_coxeter(n, &generators, max_cosets)?;
    Ok(IntervalExploration {
        generates: tc_index == orbit_index,
        generators,
        orbit_index,
        tc_index,
    })
}
