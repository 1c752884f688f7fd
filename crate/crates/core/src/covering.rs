//! Monodromy sequences of simple branched coverings of the disk and their
//! invariants.
//!
//! A covering of degree `d` with `n` branch points is presented by the
//! transpositions `τ_1, …, τ_n` it assigns to a fundamental system of curves.
//! Equivalently it is an edge-ordered graph on the sheets whose `i`-th edge
//! joins the two sheets swapped by `τ_i`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{CycleType, Permutation, Transposition};

/// Degree plus an ordered list of transpositions on `{1, …, degree}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonodromySequence {
    degree: u32,
    entries: Vec<Transposition>,
}

impl MonodromySequence {
    pub fn new(degree: u32, entries: Vec<Transposition>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if let Some(t) = entries.iter().find(|t| t.b() > degree) {
            return Err(Error::InvalidTransposition {
                a: t.a(),
                b: t.b(),
                degree,
            });
        }
        Ok(MonodromySequence { degree, entries })
    }

    /// Builds a sequence from 1-based sheet pairs, normalizing each pair.
    pub fn from_pairs(degree: u32, pairs: &[(u32, u32)]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let entries = pairs
            .iter()
            .map(|&(x, y)| Transposition::on(degree, x, y))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonodromySequence { degree, entries })
    }

    /// The canonical disk covering `p_n`: `(1 2), (2 3), …, (n n+1)` on `n + 1` sheets.
    pub fn disk(branch_points: usize) -> Self {
        let d = branch_points as u32 + 1;
        let entries = (1..d)
            .map(|i| Transposition::new(i, i + 1).expect("consecutive sheets"))
            .collect();
        MonodromySequence { degree: d, entries }
    }

    pub(crate) fn from_parts_unchecked(degree: u32, entries: Vec<Transposition>) -> Self {
        debug_assert!(entries.iter().all(|t| t.b() <= degree));
        MonodromySequence { degree, entries }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of branch points.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Transposition] {
        &self.entries
    }

    /// Entry at 1-based position `i`.
    pub fn entry(&self, i: usize) -> Transposition {
        self.entries[i - 1]
    }

    pub(crate) fn entries_mut(&mut self) -> &mut Vec<Transposition> {
        &mut self.entries
    }

    pub fn into_entries(self) -> Vec<Transposition> {
        self.entries
    }

    /// Renumbers the sheets: every sheet `k` becomes `(k)g`.
    pub fn relabel(&self, g: &Permutation) -> MonodromySequence {
        assert_eq!(g.degree(), self.degree, "relabelling degree mismatch");
        MonodromySequence {
            degree: self.degree,
            entries: self.entries.iter().map(|t| t.relabel(g)).collect(),
        }
    }

    /// The product `τ_1 * τ_2 * … * τ_n`, i.e. the monodromy of the boundary loop.
    pub fn total_monodromy(&self) -> Permutation {
        let mut p = Permutation::identity(self.degree);
        for &t in &self.entries {
            p.then_transposition(t);
        }
        p
    }

    /// Cycle type of the total monodromy.
    pub fn omega_class(&self) -> CycleType {
        self.total_monodromy().cycle_type()
    }

    pub fn components(&self) -> ComponentSignature {
        let d = self.degree as usize;
        let mut parent: Vec<usize> = (0..d).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for t in &self.entries {
            let ra = find(&mut parent, t.a() as usize - 1);
            let rb = find(&mut parent, t.b() as usize - 1);
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        // after path compression the root of each class is its least member
        let mut block_of = vec![usize::MAX; d];
        let mut blocks: Vec<Component> = Vec::new();
        for k in 0..d {
            let r = find(&mut parent, k);
            if block_of[r] == usize::MAX {
                block_of[r] = blocks.len();
                blocks.push(Component {
                    sheets: Vec::new(),
                    branch_points: 0,
                });
            }
            blocks[block_of[r]].sheets.push(k as u32 + 1);
        }
        for t in &self.entries {
            let r = find(&mut parent, t.a() as usize - 1);
            blocks[block_of[r]].branch_points += 1;
        }
        ComponentSignature { blocks }
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        let c = self.components().len();
        if c == 1 {
            Ok(())
        } else {
            Err(Error::Disconnected { components: c })
        }
    }

    pub fn surface_invariants(&self) -> SurfaceInvariants {
        let total = self.total_monodromy();
        let mut components = Vec::new();
        for block in self.components().blocks() {
            let e = block.sheets.len() as i64;
            let l = block.branch_points as i64;
            let b = total
                .cycles()
                .iter()
                .filter(|c| block.sheets.binary_search(&c[0]).is_ok())
                .count() as i64;
            let euler = e - l;
            let twice_genus = 2 - b - euler;
            assert!(
                twice_genus >= 0 && twice_genus % 2 == 0,
                "inconsistent component invariants: e={e} l={l} b={b}"
            );
            components.push(ComponentSurface {
                sheets: block.sheets.clone(),
                euler,
                boundary: b as usize,
                genus: (twice_genus / 2) as u32,
            });
        }
        SurfaceInvariants {
            euler: self.degree as i64 - self.entries.len() as i64,
            boundary: total.cycle_count(),
            components,
        }
    }

    /// Same degree, same number of branch points and same class of the total
    /// monodromy. Both coverings must be connected.
    pub fn is_equivalent(&self, other: &MonodromySequence) -> Result<bool> {
        self.require_connected()?;
        other.require_connected()?;
        Ok(self.degree == other.degree
            && self.len() == other.len()
            && self.omega_class() == other.omega_class())
    }

    /// Whether the (connected) covering space is a disk, i.e. `d = n + 1`.
    pub fn is_disk(&self) -> Result<bool> {
        self.require_connected()?;
        Ok(self.degree as usize == self.len() + 1)
    }
}

impl fmt::Debug for MonodromySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MonodromySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|t| t.to_string()).collect();
        write!(f, "d={} [{}]", self.degree, parts.join(", "))
    }
}

/// One connected component of the covering space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component {
    /// Sheets of the component, ascending.
    pub sheets: Vec<u32>,
    /// Number of branch points whose transposition lives on these sheets.
    pub branch_points: usize,
}

/// Components of a covering, ordered by least sheet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComponentSignature {
    blocks: Vec<Component>,
}

impl ComponentSignature {
    pub fn blocks(&self) -> &[Component] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Components carrying at least one branch point.
    pub fn nontrivial(&self) -> impl Iterator<Item = &Component> {
        self.blocks.iter().filter(|b| b.branch_points > 0)
    }

    /// Sheets lying in components without branch points.
    pub fn trivial_sheets(&self) -> Vec<u32> {
        self.blocks
            .iter()
            .filter(|b| b.branch_points == 0)
            .flat_map(|b| b.sheets.iter().copied())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSurface {
    pub sheets: Vec<u32>,
    pub euler: i64,
    pub boundary: usize,
    pub genus: u32,
}

/// Topological invariants of the covering surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceInvariants {
    pub euler: i64,
    /// Number of boundary circles: cycles of the total monodromy.
    pub boundary: usize,
    pub components: Vec<ComponentSurface>,
}

/// The canonical connected sequence of degree `d` with `n` branch points
/// whose total monodromy has cycle type `omega`.
///
/// With `c_1 ≥ … ≥ c_m` the parts of `omega` and `l_i` their partial sums:
/// the chains `(l_{i-1}+1 l_{i-1}+2), …, (l_i - 1 l_i)` separated by doubled
/// `(l_i l_i+1)`, then doubled `(l_m l_m+1), …, (d-1 d)`, then
/// `(n - m + l_m)/2 - d + 1` further doubled `(d-1 d)`. For the identity
/// class `m = l_m = 1`.
pub fn canonical_target(degree: u32, n: usize, omega: &CycleType) -> Result<MonodromySequence> {
    if degree == 0 {
        return Err(Error::ZeroDegree);
    }
    if omega.degree() != degree {
        return Err(Error::DegreeMismatch(omega.degree(), degree));
    }
    let not_realizable = || Error::NotRealizable {
        degree,
        branch_points: n,
        omega: omega.parts().to_vec(),
    };
    if degree == 1 {
        return if n == 0 {
            Ok(MonodromySequence::from_parts_unchecked(1, Vec::new()))
        } else {
            Err(not_realizable())
        };
    }
    if n == 0 {
        return Err(not_realizable());
    }
    let sums = omega.partial_sums();
    let (m, lm) = if omega.is_identity() {
        (1i64, 1i64)
    } else {
        (sums.len() as i64, *sums.last().unwrap() as i64)
    };
    let total = n as i64 - m + lm;
    if total % 2 != 0 {
        return Err(not_realizable());
    }
    let extra = total / 2 - degree as i64 + 1;
    if extra < 0 {
        return Err(not_realizable());
    }

    let tr = |x: u32| Transposition::new(x, x + 1).expect("consecutive sheets");
    let mut entries = Vec::with_capacity(n);
    let mut start = 1;
    for (idx, &end) in sums.iter().enumerate() {
        entries.extend((start..end).map(tr));
        if idx + 1 < sums.len() {
            entries.push(tr(end));
            entries.push(tr(end));
        }
        start = end + 1;
    }
    for x in lm as u32..degree {
        entries.push(tr(x));
        entries.push(tr(x));
    }
    for _ in 0..extra {
        entries.push(tr(degree - 1));
        entries.push(tr(degree - 1));
    }
    debug_assert_eq!(entries.len(), n);
    Ok(MonodromySequence::from_parts_unchecked(degree, entries))
}

/// All transpositions on `degree` sheets, in lexicographic order.
pub fn all_transpositions(degree: u32) -> Vec<Transposition> {
    let mut out = Vec::new();
    for a in 1..=degree {
        for b in a + 1..=degree {
            out.push(Transposition::new(a, b).expect("distinct sheets"));
        }
    }
    out
}

/// Every sequence of `n` transpositions on `degree` sheets, lexicographically.
pub fn all_sequences(degree: u32, n: usize) -> impl Iterator<Item = MonodromySequence> {
    let alphabet = all_transpositions(degree);
    let k = alphabet.len();
    let mut digits = vec![0usize; n];
    let mut done = k == 0 && n > 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let seq = MonodromySequence::from_parts_unchecked(
            degree,
            digits.iter().map(|&i| alphabet[i]).collect(),
        );
        // advance the odometer, last position fastest
        done = true;
        for pos in (0..n).rev() {
            digits[pos] += 1;
            if digits[pos] < k {
                done = false;
                break;
            }
            digits[pos] = 0;
        }
        Some(seq)
    })
}
