//! The Hurwitz action of the braid group on monodromy sequences, elementary
//! moves, and reduction of connected sequences to canonical form.
//!
//! The generator `x_i` sends `(τ_i, τ_{i+1})` to `(τ_{i+1}, τ_{i+1} τ_i τ_{i+1})`
//! and its inverse sends it to `(τ_i τ_{i+1} τ_i, τ_i)`. The elementary move
//! `O_i` coincides with the action of `x_i⁻¹`.

use std::collections::VecDeque;

use crate::braid::BraidWord;
use crate::covering::{canonical_target, MonodromySequence};
use crate::error::{Error, Result};
use crate::perm::{CycleType, Permutation, Transposition};

/// Applies one signed generator to a slice of transpositions in place.
///
/// Panics if the letter is out of range; callers validate words first.
pub fn apply_letter(entries: &mut [Transposition], letter: i32) {
    let i = letter.unsigned_abs() as usize - 1;
    let (a, b) = (entries[i], entries[i + 1]);
    if letter > 0 {
        entries[i] = b;
        entries[i + 1] = a.conjugate_by(b);
    } else {
        entries[i] = b.conjugate_by(a);
        entries[i + 1] = a;
    }
}

/// Right action of a braid word on a sequence, letters applied left to right.
pub fn act(seq: &MonodromySequence, word: &BraidWord) -> Result<MonodromySequence> {
    if word.strands() != seq.len() {
        // B_0 and B_1 both have no generators, so an empty word is accepted on them
        if !(word.is_empty() && seq.len() <= 1 && word.strands() <= 1) {
            return Err(Error::StrandMismatch {
                expected: seq.len(),
                found: word.strands(),
            });
        }
    }
    let mut out = seq.clone();
    for &l in word.letters() {
        apply_letter(out.entries_mut(), l);
    }
    Ok(out)
}

impl MonodromySequence {
    /// See [`act`].
    pub fn act(&self, word: &BraidWord) -> Result<MonodromySequence> {
        act(self, word)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

/// One elementary move `O_i` or `O_i⁻¹` at 1-based position `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub position: usize,
    pub direction: Direction,
}

impl Move {
    /// The braid letter realizing this move.
    pub fn letter(self) -> i32 {
        match self.direction {
            Direction::Forward => -(self.position as i32),
            Direction::Inverse => self.position as i32,
        }
    }

    pub fn from_letter(letter: i32) -> Move {
        Move {
            position: letter.unsigned_abs() as usize,
            direction: if letter < 0 {
                Direction::Forward
            } else {
                Direction::Inverse
            },
        }
    }
}

/// A sequence of elementary moves, applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MoveWord(pub Vec<Move>);

impl MoveWord {
    pub fn moves(&self) -> &[Move] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_braid(&self, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, self.0.iter().map(|m| m.letter()).collect())
    }

    pub fn apply(&self, seq: &MonodromySequence) -> Result<MonodromySequence> {
        act(seq, &self.to_braid(seq.len())?)
    }
}

/// `O_i` (forward) or its inverse at 1-based position `i`.
///
/// Forward: disjoint or equal neighbours are swapped; `(a b), (b c)` becomes
/// `(a c), (a b)`.
pub fn elementary_move(
    seq: &MonodromySequence,
    position: usize,
    direction: Direction,
) -> Result<MonodromySequence> {
    let n = seq.len();
    if position == 0 || position >= n {
        return Err(Error::GeneratorOutOfRange {
            index: position as i32,
            strands: n,
        });
    }
    let mut entries = seq.entries().to_vec();
    let (ei, ej) = (entries[position - 1], entries[position]);
    match direction {
        Direction::Forward => match ei.shared_sheet(ej) {
            None => entries.swap(position - 1, position),
            Some(b) => {
                let a = if ei.a() == b { ei.b() } else { ei.a() };
                let c = if ej.a() == b { ej.b() } else { ej.a() };
                entries[position - 1] = Transposition::new(a, c)?;
                entries[position] = ei;
            }
        },
        Direction::Inverse => match ei.shared_sheet(ej) {
            None => entries.swap(position - 1, position),
            Some(a) => {
                // inverse of (a b),(b c) -> (a c),(a b): the second entry is the
                // old first one, and the old second is recovered from the shared sheet
                let b = if ej.a() == a { ej.b() } else { ej.a() };
                let c = if ei.a() == a { ei.b() } else { ei.a() };
                entries[position - 1] = ej;
                entries[position] = Transposition::new(b, c)?;
            }
        },
    }
    MonodromySequence::new(seq.degree(), entries)
}

/// A replayable reduction certificate: relabel the sheets of the input by
/// `relabel`, then apply `moves`, to obtain `canonical`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalizationResult {
    pub relabel: Permutation,
    pub moves: MoveWord,
    pub canonical: MonodromySequence,
}

impl CanonicalizationResult {
    /// Re-runs the certificate on `input` and compares with `canonical`.
    pub fn replays(&self, input: &MonodromySequence) -> bool {
        match self.moves.apply(&input.relabel(&self.relabel)) {
            Ok(out) => out == self.canonical,
            Err(_) => false,
        }
    }
}

/// Reduces a connected sequence to [`canonical_target`] of its class.
///
/// Strategy, recursively on the sheet set: pick a top sheet `v` (a fixed
/// point of the total monodromy if any, otherwise a sheet in a shortest
/// cycle), gather all transpositions touching `v` at the end, merge them into
/// a block of copies of one `(h v)`, slide the attachment sheet `h` along the
/// remaining graph when needed, reduce the remaining prefix with `h` pinned as
/// its top sheet, and finally push surplus doubled pairs of the prefix into
/// the tail.
pub fn canonicalize(seq: &MonodromySequence) -> Result<CanonicalizationResult> {
    seq.require_connected()?;
    let mut work = Reducer {
        degree: seq.degree(),
        entries: seq.entries().to_vec(),
        moves: Vec::new(),
    };
    let vertices: Vec<u32> = (1..=seq.degree()).collect();
    let order = work.reduce(seq.len(), vertices, None);
    // order[k] is the sheet that receives label k + 1
    let mut images = vec![0u32; seq.degree() as usize];
    for (label, &sheet) in order.iter().enumerate() {
        images[sheet as usize - 1] = label as u32 + 1;
    }
    let relabel = Permutation::from_images(images).expect("labelling is a bijection");
    let canonical = canonical_target(seq.degree(), seq.len(), &seq.omega_class())?;
    let result = CanonicalizationResult {
        relabel,
        moves: MoveWord(work.moves.into_iter().map(Move::from_letter).collect()),
        canonical,
    };
    debug_assert!(
        result.replays(seq),
        "canonicalization certificate does not replay"
    );
    Ok(result)
}

struct Reducer {
    degree: u32,
    entries: Vec<Transposition>,
    moves: Vec<i32>,
}

impl Reducer {
    fn step(&mut self, letter: i32) {
        apply_letter(&mut self.entries, letter);
        self.moves.push(letter);
    }

    /// `O_p` at 1-based position `p`.
    fn o(&mut self, p: usize) {
        self.step(-(p as i32));
    }

    /// Moves the entry at 0-based `from` left to `to`, keeping it unchanged.
    fn slide_left(&mut self, from: usize, to: usize) {
        for p in (to + 1..=from).rev() {
            self.step(p as i32);
        }
    }

    /// Moves the entries at 0-based `from`, `from + 1` left so that they start
    /// at `to`. The entries passed over are conjugated twice by the same
    /// transposition, hence unchanged, when the two moved entries are equal.
    fn slide_pair_left(&mut self, from: usize, to: usize) {
        for p in (to..from).rev() {
            self.step(p as i32 + 1);
            self.step(p as i32 + 2);
        }
    }

    fn slide_pair_right(&mut self, from: usize, to: usize) {
        for p in from..to {
            self.step(-(p as i32 + 2));
            self.step(-(p as i32 + 1));
        }
    }

    fn prefix_product(&self, len: usize, degree: u32) -> Permutation {
        let mut p = Permutation::identity(degree);
        for &t in &self.entries[..len] {
            p.then_transposition(t);
        }
        p
    }

    /// Sheets of `vertices` allowed to carry the top label for the product `pi`.
    fn valid_tops(pi: &Permutation, vertices: &[u32]) -> Vec<u32> {
        let fixed: Vec<u32> = vertices
            .iter()
            .copied()
            .filter(|&x| pi.apply(x) == x)
            .collect();
        if !fixed.is_empty() {
            return fixed;
        }
        let cycles: Vec<Vec<u32>> = pi
            .cycles()
            .into_iter()
            .filter(|c| vertices.contains(&c[0]))
            .collect();
        let shortest = cycles.iter().map(Vec::len).min().unwrap_or(0);
        let mut out: Vec<u32> = cycles
            .into_iter()
            .filter(|c| c.len() == shortest)
            .flatten()
            .collect();
        out.sort_unstable();
        out
    }

    /// Reduces `entries[..len]`, a connected sequence on `vertices`, and
    /// returns the vertices in canonical label order. The pinned vertex, when
    /// given, ends up last.
    fn reduce(&mut self, len: usize, vertices: Vec<u32>, pin: Option<u32>) -> Vec<u32> {
        if vertices.len() == 1 {
            assert_eq!(len, 0, "transposition on a single sheet");
            return vertices;
        }
        let degree = self.degree;
        let pi = self.prefix_product(len, degree);
        let top = match pin {
            Some(v) => v,
            None => Self::valid_tops(&pi, &vertices)[0],
        };
        debug_assert!(Self::valid_tops(&pi, &vertices).contains(&top));

        // gather the transpositions touching `top` at the end
        loop {
            let pos = (0..len.saturating_sub(1))
                .find(|&i| self.entries[i].contains(top) && !self.entries[i + 1].contains(top));
            match pos {
                Some(i) => self.step(i as i32 + 1),
                None => break,
            }
        }
        let mut tail_start = (0..len)
            .find(|&i| self.entries[i].contains(top))
            .expect("connected");

        // merge the tail into copies of a single (h top)
        let partner = |t: Transposition| if t.a() == top { t.b() } else { t.a() };
        while let Some(i) = (tail_start..len - 1)
            .find(|&i| partner(self.entries[i]) != partner(self.entries[i + 1]))
        {
            self.o(i + 1);
            self.slide_left(i, tail_start);
            tail_start += 1;
        }
        let mut attach = partner(self.entries[tail_start]);
        let tail = len - tail_start;
        let rest: Vec<u32> = vertices.iter().copied().filter(|&x| x != top).collect();

        if tail.is_multiple_of(2) {
            let targets = Self::valid_tops(&pi, &rest);
            if !targets.contains(&attach) {
                let path = self.shortest_path(tail_start, attach, &targets);
                for next in path {
                    let q = (0..tail_start)
                        .rev()
                        .find(|&q| self.entries[q] == Transposition::new(attach, next).unwrap())
                        .expect("edge on path");
                    for s in (tail_start..len).step_by(2) {
                        self.slide_pair_left(s, q + 1);
                        self.o(q + 1);
                        self.o(q + 2);
                        self.o(q + 2);
                        self.o(q + 1);
                        self.slide_pair_right(q + 1, s);
                    }
                    attach = next;
                }
            }
        } else {
            debug_assert_eq!(pi.apply(top), attach);
        }

        let prefix_type = {
            let p = self.prefix_product(tail_start, degree);
            let mut parts: Vec<u32> = p
                .cycles()
                .iter()
                .filter(|c| c.len() > 1)
                .map(|c| c.len() as u32)
                .collect();
            parts.sort_unstable();
            CycleType::new(rest.len() as u32, parts).expect("cycle type of prefix")
        };
        let mut order = self.reduce(tail_start, rest, Some(attach));
        debug_assert_eq!(order.last(), Some(&attach));

        // surplus doubled pairs at the end of the prefix move into the tail
        for _ in 0..surplus_pairs(order.len() as u32, tail_start, &prefix_type) {
            let p = tail_start;
            for q in [p, p - 1, p - 1, p, p - 2, p - 1, p - 1, p - 2] {
                self.o(q);
            }
            tail_start -= 2;
        }
        order.push(top);
        order
    }

    /// Vertices after `from` on a shortest path to `targets` in the graph of
    /// `entries[..len]`; ties broken by smallest vertex.
    fn shortest_path(&self, len: usize, from: u32, targets: &[u32]) -> Vec<u32> {
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); self.degree as usize + 1];
        for t in &self.entries[..len] {
            adj[t.a() as usize].push(t.b());
            adj[t.b() as usize].push(t.a());
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        let mut prev = vec![0u32; adj.len()];
        let mut seen = vec![false; adj.len()];
        let mut queue = VecDeque::from([from]);
        seen[from as usize] = true;
        while let Some(x) = queue.pop_front() {
            if targets.contains(&x) {
                let mut path = vec![x];
                let mut cur = x;
                while prev[cur as usize] != 0 && cur != from {
                    cur = prev[cur as usize];
                    path.push(cur);
                }
                path.pop();
                path.reverse();
                return path;
            }
            for &y in &adj[x as usize] {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    prev[y as usize] = x;
                    queue.push_back(y);
                }
            }
        }
        panic!("no path to a valid attachment sheet");
    }
}

/// Number of doubled `(d-1 d)` pairs in the fourth row of the canonical form.
fn surplus_pairs(degree: u32, n: usize, omega: &CycleType) -> usize {
    if degree <= 1 {
        return 0;
    }
    let sums = omega.partial_sums();
    let (m, lm) = if omega.is_identity() {
        (1i64, 1i64)
    } else {
        (sums.len() as i64, *sums.last().unwrap() as i64)
    };
    let extra = (n as i64 - m + lm) / 2 - degree as i64 + 1;
    assert!(extra >= 0, "prefix shorter than its canonical form");
    extra as usize
}
