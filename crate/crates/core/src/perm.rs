//! Permutations of the sheets `{1, …, d}`.
//!
//! Composition is apply-left-first: `(k)(s * t) = ((k)s)t`. All public
//! indices are 1-based.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A bijection of `{1, …, d}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[k - 1] is the image of k
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: u32) -> Self {
        Permutation {
            images: (1..=degree).collect(),
        }
    }

    /// Builds a permutation from its image list (`images[k-1]` is the image of `k`).
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let d = images.len();
        if d == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut seen = vec![false; d];
        for &x in &images {
            if x == 0 || x as usize > d || seen[x as usize - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
            seen[x as usize - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `{1, …, degree}` from disjoint cycles.
    pub fn from_cycles(degree: u32, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (1..=degree).collect();
        let mut touched = vec![false; degree as usize];
        for cycle in cycles {
            for (pos, &x) in cycle.iter().enumerate() {
                if x == 0 || x > degree || touched[x as usize - 1] {
                    return Err(Error::InvalidPermutation(format!("bad cycle {cycle:?}")));
                }
                touched[x as usize - 1] = true;
                images[x as usize - 1] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    /// Image of the sheet `k` (1-based).
    pub fn apply(&self, k: u32) -> u32 {
        self.images[k as usize - 1]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| x as usize == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = i as u32 + 1;
        }
        Permutation { images }
    }

    /// `self * other`: apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "degree mismatch in composition"
        );
        Permutation {
            images: self.images.iter().map(|&x| other.apply(x)).collect(),
        }
    }

    /// Right multiplication by a transposition, in place.
    pub fn then_transposition(&mut self, t: Transposition) {
        for x in self.images.iter_mut() {
            *x = t.apply(*x);
        }
    }

    /// `g⁻¹ * self * g`, which relabels every sheet `k` as `(k)g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    /// Cycles (including fixed points), each starting at its least element,
    /// ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let d = self.images.len();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 1..=d as u32 {
            if seen[start as usize - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x as usize - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut parts: Vec<u32> = self
            .cycles()
            .iter()
            .map(|c| c.len() as u32)
            .filter(|&l| l >= 2)
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType {
            parts,
            degree: self.degree(),
        }
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// A transposition `(a b)` stored with `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    a: u32,
    b: u32,
}

impl Transposition {
    /// Normalizing constructor; the two sheets must be distinct and nonzero.
    pub fn new(x: u32, y: u32) -> Result<Self> {
        if x == y || x == 0 || y == 0 {
            return Err(Error::InvalidTransposition {
                a: x,
                b: y,
                degree: x.max(y),
            });
        }
        Ok(Transposition {
            a: x.min(y),
            b: x.max(y),
        })
    }

    /// Like [`Transposition::new`] but also checks both sheets are `<= degree`.
    pub fn on(degree: u32, x: u32, y: u32) -> Result<Self> {
        if x > degree || y > degree {
            return Err(Error::InvalidTransposition { a: x, b: y, degree });
        }
        Transposition::new(x, y).map_err(|_| Error::InvalidTransposition { a: x, b: y, degree })
    }

    pub fn a(self) -> u32 {
        self.a
    }

    pub fn b(self) -> u32 {
        self.b
    }

    pub fn apply(self, k: u32) -> u32 {
        if k == self.a {
            self.b
        } else if k == self.b {
            self.a
        } else {
            k
        }
    }

    pub fn contains(self, k: u32) -> bool {
        k == self.a || k == self.b
    }

    pub fn is_disjoint(self, other: Transposition) -> bool {
        !other.contains(self.a) && !other.contains(self.b)
    }

    /// The sheet shared with `other`, when they meet in exactly one sheet.
    pub fn shared_sheet(self, other: Transposition) -> Option<u32> {
        if self == other {
            return None;
        }
        if other.contains(self.a) {
            Some(self.a)
        } else if other.contains(self.b) {
            Some(self.b)
        } else {
            None
        }
    }

    /// `t⁻¹ self t` for a transposition `t`: both sheets are moved by `t`.
    pub fn conjugate_by(self, t: Transposition) -> Transposition {
        Transposition::new(t.apply(self.a), t.apply(self.b)).expect("conjugate of a transposition")
    }

    /// Relabel the sheets through an arbitrary permutation.
    pub fn relabel(self, g: &Permutation) -> Transposition {
        Transposition::new(g.apply(self.a), g.apply(self.b)).expect("relabelled transposition")
    }

    pub fn to_permutation(self, degree: u32) -> Permutation {
        let mut p = Permutation::identity(degree);
        p.images.swap(self.a as usize - 1, self.b as usize - 1);
        p
    }
}

impl fmt::Debug for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.a, self.b)
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.a, self.b)
    }
}

/// Cycle type of a permutation: the lengths of its nontrivial cycles,
/// sorted descending. Fixed points are implied by `degree`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<u32>,
    degree: u32,
}

impl CycleType {
    pub fn new(degree: u32, mut parts: Vec<u32>) -> Result<Self> {
        let sum: u64 = parts.iter().map(|&p| p as u64).sum();
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if parts.iter().any(|&p| p < 2) || sum > degree as u64 {
            return Err(Error::InvalidCycleType { parts, degree });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts, degree })
    }

    pub fn identity(degree: u32) -> Self {
        CycleType {
            parts: Vec::new(),
            degree,
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_identity(&self) -> bool {
        self.parts.is_empty()
    }

    /// Partial sums `l_i = c_1 + … + c_i`.
    pub fn partial_sums(&self) -> Vec<u32> {
        self.parts
            .iter()
            .scan(0, |acc, &c| {
                *acc += c;
                Some(*acc)
            })
            .collect()
    }

    /// Number of fixed points.
    pub fn fixed_points(&self) -> u32 {
        self.degree - self.parts.iter().sum::<u32>()
    }

    /// Parity of the permutation class: number of transpositions mod 2.
    pub fn parity(&self) -> u32 {
        self.parts.iter().map(|&c| c - 1).sum::<u32>() % 2
    }

    /// Enumerates every cycle type of the given degree.
    pub fn all(degree: u32) -> Vec<CycleType> {
        fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            out.push(current.clone());
            for part in (2..=max.min(remaining)).rev() {
                current.push(part);
                rec(remaining - part, part, current, out);
                current.pop();
            }
        }
        let mut raw = Vec::new();
        rec(degree, degree, &mut Vec::new(), &mut raw);
        let mut out: Vec<CycleType> = raw
            .into_iter()
            .map(|parts| CycleType { parts, degree })
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
