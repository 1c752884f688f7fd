//! Liftable braids, curves and intervals given as braid transports of the
//! standard fundamental system, interval types, and curve-system equivalence.
//!
//! A curve is stored as a base index `j` and a word `w`; its monodromy is
//! entry `j` of the sequence acted on by `w`. An interval is stored the same
//! way, and the half-twist around it is the braid `w · x_i · w⁻¹`.
//!
//! Transporting by a braid `b` prepends `b` to the stored word, so the curve
//! `((α_j)b_1)b_2` is stored as `(j, b_2 b_1)`.

use crate::braid::BraidWord;
use crate::covering::{ComponentSignature, MonodromySequence};
use crate::error::{Error, Result};
use crate::hurwitz::act;
use crate::perm::Transposition;
use crate::restrict::{restrict, Base, RestrictionSpec};

/// The curve `(α_base)word`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveRef {
    pub base: usize,
    pub word: BraidWord,
}

/// The interval `(x_base)word`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalRef {
    pub base: usize,
    pub word: BraidWord,
}

fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::InvalidIndexPattern(format!(
            "({i}, {j}) outside 1..={n}"
        )));
    }
    Ok(())
}

/// Stored word of the transport by `x_s^ε ⋯ x_e^ε`, that is `[e, …, s]` with
/// sign `ε`; empty if `s > e`.
fn run(n: usize, start: usize, end: usize, sign: i32) -> BraidWord {
    BraidWord::from_letters_unchecked(n, (start..=end).rev().map(|l| sign * l as i32).collect())
}

impl CurveRef {
    pub fn new(n: usize, base: usize, word: BraidWord) -> Result<Self> {
        if base == 0 || base > n {
            return Err(Error::InvalidCurve(format!(
                "curve base {base} outside 1..={n}"
            )));
        }
        if word.strands() != n {
            return Err(Error::StrandMismatch {
                expected: n,
                found: word.strands(),
            });
        }
        Ok(CurveRef { base, word })
    }

    /// `α_j`.
    pub fn alpha(n: usize, j: usize) -> Result<Self> {
        CurveRef::new(n, j, BraidWord::empty(n))
    }

    /// `α_{i,j}`: `α_i` for `i = j`, `(α_i) x̂_{i,j}⁻¹` for `i < j` and
    /// `(α_i) x̂_{i,j}` for `j < i`.
    pub fn alpha_ij(n: usize, i: usize, j: usize) -> Result<Self> {
        check_pair(n, i, j)?;
        let base = CurveRef::alpha(n, i)?;
        if i == j {
            return Ok(base);
        }
        let hat = IntervalRef::x_hat(n, i, j)?.braid();
        Ok(if i < j {
            base.transported(&hat.inverse())
        } else {
            base.transported(&hat)
        })
    }

    /// `α_{i,j,k}` for `i ≠ j ≠ k`: `α_{i,j}` transported by `x̂_{j,k}` when
    /// `i<j<k`, `j<k≤i` or `k<i<j`, and by its inverse otherwise.
    pub fn alpha_ijk(n: usize, i: usize, j: usize, k: usize) -> Result<Self> {
        check_pair(n, i, j)?;
        check_pair(n, j, k)?;
        if i == j || j == k {
            return Err(Error::InvalidIndexPattern(format!(
                "α_{{{i},{j},{k}}} needs i ≠ j ≠ k"
            )));
        }
        let first = CurveRef::alpha_ij(n, i, j)?;
        let hat = IntervalRef::x_hat(n, j, k)?.braid();
        let forward = (i < j && j < k) || (j < k && k <= i) || (k < i && i < j);
        Ok(if forward {
            first.transported(&hat)
        } else {
            first.transported(&hat.inverse())
        })
    }

    /// `(self)b`.
    pub fn transported(&self, b: &BraidWord) -> CurveRef {
        CurveRef {
            base: self.base,
            word: b.concat(&self.word).expect("matching strand counts"),
        }
    }
}

impl IntervalRef {
    pub fn new(n: usize, base: usize, word: BraidWord) -> Result<Self> {
        if base == 0 || base >= n {
            return Err(Error::InvalidCurve(format!(
                "interval base {base} outside 1..{n}"
            )));
        }
        if word.strands() != n {
            return Err(Error::StrandMismatch {
                expected: n,
                found: word.strands(),
            });
        }
        Ok(IntervalRef { base, word })
    }

    /// `x_i`.
    pub fn x(n: usize, i: usize) -> Result<Self> {
        IntervalRef::new(n, i, BraidWord::empty(n))
    }

    /// `x_{i,j} = (x_i) x_{i+1} ⋯ x_{j-1}`, symmetric in `i, j`.
    pub fn x_ij(n: usize, i: usize, j: usize) -> Result<Self> {
        check_pair(n, i, j)?;
        let (i, j) = (i.min(j), i.max(j));
        if i == j {
            return Err(Error::InvalidIndexPattern(format!(
                "x_{{{i},{j}}} needs i ≠ j"
            )));
        }
        IntervalRef::new(n, i, run(n, i + 1, j - 1, 1))
    }

    /// `x̂_{i,j} = (x_i) x_{i+1}⁻¹ ⋯ x_{j-1}⁻¹`, symmetric in `i, j`.
    pub fn x_hat(n: usize, i: usize, j: usize) -> Result<Self> {
        check_pair(n, i, j)?;
        let (i, j) = (i.min(j), i.max(j));
        if i == j {
            return Err(Error::InvalidIndexPattern(format!(
                "x̂_{{{i},{j}}} needs i ≠ j"
            )));
        }
        IntervalRef::new(n, i, run(n, i + 1, j - 1, -1))
    }

    /// `x̂_{i,j,k}`: `(x̂_{i,j}) x̂_{j,k}` for `i<j<k`, `(x̂_{i,j}) x̂_{j,k}⁻¹`
    /// for `i<k<j` or `j<i<k`; `x̂_{k,j,i}` when `i > k`; and `x̂_{i,k}` when
    /// `j` coincides with `i` or `k`.
    pub fn x_hat3(n: usize, i: usize, j: usize, k: usize) -> Result<Self> {
        check_pair(n, i, j)?;
        check_pair(n, j, k)?;
        let (i, k) = (i.min(k), i.max(k));
        if i == k {
            return Err(Error::InvalidIndexPattern(format!(
                "x̂_{{{i},{j},{k}}} needs i ≠ k"
            )));
        }
        if j == i || j == k {
            return IntervalRef::x_hat(n, i, k);
        }
        let first = IntervalRef::x_hat(n, i, j)?;
        let hat = IntervalRef::x_hat(n, j, k)?.braid();
        Ok(if i < j && j < k {
            first.transported(&hat)
        } else {
            first.transported(&hat.inverse())
        })
    }

    /// `(self)b`.
    pub fn transported(&self, b: &BraidWord) -> IntervalRef {
        IntervalRef {
            base: self.base,
            word: b.concat(&self.word).expect("matching strand counts"),
        }
    }

    /// The half-twist around the interval: `word · x_base · word⁻¹`.
    pub fn braid(&self) -> BraidWord {
        let n = self.word.strands();
        let g = BraidWord::from_letters_unchecked(n, vec![self.base as i32]);
        self.word.conjugating(&g).expect("matching strand counts")
    }

    /// `word · x_base^k · word⁻¹`.
    pub fn braid_power(&self, k: u32) -> BraidWord {
        let n = self.word.strands();
        let g = BraidWord::from_letters_unchecked(n, vec![self.base as i32; k as usize]);
        self.word.conjugating(&g).expect("matching strand counts")
    }
}

/// A braid is liftable iff it fixes the monodromy sequence entrywise.
pub fn is_liftable(seq: &MonodromySequence, word: &BraidWord) -> Result<bool> {
    Ok(&act(seq, word)? == seq)
}

pub fn interval_braid(x: &IntervalRef) -> BraidWord {
    x.braid()
}

/// Least `k ∈ {1, 2, 3}` such that the `k`-th power of the half-twist lifts:
/// 1 when the two curves bounding the interval have equal monodromy, 2 when
/// the monodromies are disjoint, 3 when they share one sheet.
pub fn interval_type(seq: &MonodromySequence, x: &IntervalRef) -> Result<u8> {
    if x.base >= seq.len() {
        return Err(Error::InvalidCurve(format!(
            "interval base {} outside 1..{}",
            x.base,
            seq.len()
        )));
    }
    let moved = act(seq, &x.word)?;
    let (a, b) = (moved.entry(x.base), moved.entry(x.base + 1));
    Ok(if a == b {
        1
    } else if a.is_disjoint(b) {
        2
    } else {
        3
    })
}

/// `x_i³` for every `i`, then `x_{i,j}²` for `i + 1 < j`, in lexicographic order.
pub fn disk_liftable_generators(n: usize) -> Vec<BraidWord> {
    let mut out = Vec::new();
    for i in 1..n {
        out.push(BraidWord::from_letters_unchecked(n, vec![i as i32; 3]));
    }
    for i in 1..n {
        for j in i + 2..=n {
            let x = IntervalRef::x_ij(n, i, j).expect("valid indices");
            out.push(x.braid_power(2));
        }
    }
    out
}

/// Monodromy of the curve: entry `base` of the sequence acted on by `word`.
pub fn curve_monodromy(seq: &MonodromySequence, c: &CurveRef) -> Result<Transposition> {
    if c.base == 0 || c.base > seq.len() {
        return Err(Error::InvalidCurve(format!(
            "curve base {} outside 1..={}",
            c.base,
            seq.len()
        )));
    }
    Ok(act(seq, &c.word)?.entry(c.base))
}

/// Closed-form monodromy of `α_{i,j}` (when `k` is `None`) or `α_{i,j,k}` on
/// the canonical disk covering with `n` branch points.
pub fn reference_alpha_monodromy(
    n: usize,
    i: usize,
    j: usize,
    k: Option<usize>,
) -> Result<Transposition> {
    check_pair(n, i, j)?;
    let t = |a: usize, b: usize| Transposition::new(a as u32, b as u32);
    let Some(k) = k else {
        return if i <= j { t(i, j + 1) } else { t(i + 1, j) };
    };
    check_pair(n, j, k)?;
    if i == j || j == k {
        return Err(Error::InvalidIndexPattern(format!(
            "α_{{{i},{j},{k}}} needs i ≠ j ≠ k"
        )));
    }
    if (i < j && j < k) || (i <= k && k < j) {
        t(j + 1, k + 1)
    } else if (k < j && j < i) || (j < k && k <= i) {
        t(j, k)
    } else if k <= i && i < j {
        t(j + 1, k)
    } else {
        debug_assert!(j < i && i <= k);
        t(j, k + 1)
    }
}

fn require_disk(seq: &MonodromySequence) -> Result<usize> {
    let n = seq.len();
    if n < 2 || !seq.is_connected() || seq.degree() as usize != n + 1 {
        return Err(Error::Precondition(
            "regularity is defined for the disk covering with at least two branch points".into(),
        ));
    }
    Ok(n)
}

/// The restriction along the curve leaves exactly one trivial sheet and a
/// disk covering with `n - 1` branch points on the remaining `n` sheets.
pub fn is_regular_curve(seq: &MonodromySequence, c: &CurveRef) -> Result<bool> {
    let n = require_disk(seq)?;
    let sig = system_restriction(seq, std::slice::from_ref(c))?;
    let blocks = sig.blocks();
    Ok(blocks.len() == 2
        && blocks
            .iter()
            .any(|b| b.sheets.len() == 1 && b.branch_points == 0)
        && blocks
            .iter()
            .any(|b| b.sheets.len() == n && b.branch_points == n - 1))
}

/// Component signature of the restriction along a curve system whose curves
/// share one transporting word, with base point `*′`.
pub fn system_restriction(
    seq: &MonodromySequence,
    system: &[CurveRef],
) -> Result<ComponentSignature> {
    let word = common_word(system)?;
    let moved = act(seq, word)?;
    let spec = RestrictionSpec::new(system.iter().map(|c| c.base).collect(), Base::Start)?;
    Ok(restrict(&moved, &spec)?.components())
}

fn common_word(system: &[CurveRef]) -> Result<&BraidWord> {
    let first = system
        .first()
        .ok_or_else(|| Error::InvalidCurve("empty curve system".into()))?;
    if system.iter().any(|c| c.word != first.word) {
        return Err(Error::InvalidCurve(
            "curves of a system must share their transporting word".into(),
        ));
    }
    Ok(&first.word)
}

/// Whether some liftable braid carries the system `a` onto `b` curvewise:
/// matching monodromies and identical component signatures of the two
/// restrictions.
pub fn systems_liftable_equivalent(
    seq: &MonodromySequence,
    a: &[CurveRef],
    b: &[CurveRef],
) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::InvalidCurve(format!(
            "systems of different sizes {} and {}",
            a.len(),
            b.len()
        )));
    }
    common_word(a)?;
    common_word(b)?;
    for (ca, cb) in a.iter().zip(b) {
        if curve_monodromy(seq, ca)? != curve_monodromy(seq, cb)? {
            return Ok(false);
        }
    }
    let sig_a = system_restriction(seq, a)?;
    let sig_b = system_restriction(seq, b)?;
    if sig_a.nontrivial().count() <= 1
        && sig_b.nontrivial().count() <= 1
        && sig_a.trivial_sheets() == sig_b.trivial_sheets()
    {
        return Ok(true);
    }
    Ok(sig_a == sig_b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn tr(a: u32, b: u32) -> Transposition {
        Transposition::new(a, b).unwrap()
    }

    #[test]
    fn liftability_examples() {
        let p2 = MonodromySequence::disk(2);
        assert!(!is_liftable(&p2, &word(2, &[1])).unwrap());
        assert!(is_liftable(&p2, &word(2, &[1, 1, 1])).unwrap());
        assert!(is_liftable(&p2, &word(2, &[])).unwrap());
        let p3 = MonodromySequence::disk(3);
        assert!(is_liftable(&p3, &word(3, &[2, 1, 1, -2])).unwrap());
    }

    #[test]
    fn interval_braid_examples() {
        assert_eq!(IntervalRef::x(3, 1).unwrap().braid(), word(3, &[1]));
        let x13 = IntervalRef::x_ij(3, 1, 3).unwrap();
        assert_eq!(x13.word, word(3, &[2]));
        assert_eq!(x13.braid(), word(3, &[2, 1, -2]));
        let xh13 = IntervalRef::x_hat(3, 3, 1).unwrap();
        assert_eq!(xh13.word, word(3, &[-2]));
        assert_eq!(xh13.braid(), word(3, &[-2, 1, 2]));
        assert_eq!(x13.braid_power(2), word(3, &[2, 1, 1, -2]));
    }

    #[test]
    fn interval_type_examples() {
        let p3 = MonodromySequence::disk(3);
        assert_eq!(
            interval_type(&p3, &IntervalRef::x(3, 1).unwrap()).unwrap(),
            3
        );
        assert_eq!(
            interval_type(&p3, &IntervalRef::x_ij(3, 1, 3).unwrap()).unwrap(),
            2
        );
        assert_eq!(
            interval_type(&p3, &IntervalRef::x_hat(3, 1, 3).unwrap()).unwrap(),
            3
        );
        let two_sheets = MonodromySequence::from_pairs(2, &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(
            interval_type(&two_sheets, &IntervalRef::x(2, 1).unwrap()).unwrap(),
            1
        );
    }

    #[test]
    fn generator_examples() {
        assert_eq!(disk_liftable_generators(2), vec![word(2, &[1, 1, 1])]);
        assert_eq!(
            disk_liftable_generators(3),
            vec![
                word(3, &[1, 1, 1]),
                word(3, &[2, 2, 2]),
                word(3, &[2, 1, 1, -2])
            ]
        );
        assert!(disk_liftable_generators(1).is_empty());
        assert_eq!(disk_liftable_generators(5).len(), 4 + 6);
    }

    #[test]
    fn curve_examples() {
        let p3 = MonodromySequence::disk(3);
        assert_eq!(
            curve_monodromy(&p3, &CurveRef::alpha(3, 1).unwrap()).unwrap(),
            tr(1, 2)
        );
        let a13 = CurveRef::alpha_ij(3, 1, 3).unwrap();
        assert_eq!(a13.word, word(3, &[-2, -1, 2]));
        assert_eq!(curve_monodromy(&p3, &a13).unwrap(), tr(1, 4));
        let a31 = CurveRef::alpha_ij(3, 3, 1).unwrap();
        assert_eq!((a31.base, a31.word.clone()), (3, word(3, &[-2, 1, 2])));
        assert_eq!(curve_monodromy(&p3, &a31).unwrap(), tr(1, 4));
    }

    #[test]
    fn reference_examples() {
        assert_eq!(reference_alpha_monodromy(3, 1, 3, None).unwrap(), tr(1, 4));
        assert_eq!(reference_alpha_monodromy(3, 3, 1, None).unwrap(), tr(1, 4));
        assert_eq!(
            reference_alpha_monodromy(4, 1, 2, Some(4)).unwrap(),
            tr(3, 5)
        );
        assert!(reference_alpha_monodromy(4, 2, 2, Some(4)).is_err());
        assert!(reference_alpha_monodromy(4, 5, 2, None).is_err());
    }

    #[test]
    fn regular_examples() {
        let p3 = MonodromySequence::disk(3);
        assert!(is_regular_curve(&p3, &CurveRef::alpha(3, 3).unwrap()).unwrap());
        assert!(is_regular_curve(&p3, &CurveRef::alpha_ij(3, 1, 3).unwrap()).unwrap());
        let a12 = CurveRef::alpha_ij(3, 1, 2).unwrap();
        assert_eq!(a12.word, word(3, &[-1]));
        assert!(!is_regular_curve(&p3, &a12).unwrap());
        let annulus = MonodromySequence::from_pairs(2, &[(1, 2), (1, 2)]).unwrap();
        assert!(is_regular_curve(&annulus, &CurveRef::alpha(2, 1).unwrap()).is_err());
    }

    #[test]
    fn systems_examples() {
        let p3 = MonodromySequence::disk(3);
        let a13 = vec![CurveRef::alpha_ij(3, 1, 3).unwrap()];
        let a31 = vec![CurveRef::alpha_ij(3, 3, 1).unwrap()];
        assert!(systems_liftable_equivalent(&p3, &a13, &a31).unwrap());
        assert!(systems_liftable_equivalent(&p3, &a13, &a13).unwrap());
        let a1 = vec![CurveRef::alpha(3, 1).unwrap()];
        let a2 = vec![CurveRef::alpha(3, 2).unwrap()];
        assert!(!systems_liftable_equivalent(&p3, &a1, &a2).unwrap());
        assert!(systems_liftable_equivalent(&p3, &a1, &[]).is_err());
        let mixed = vec![CurveRef::alpha(3, 1).unwrap(), a13[0].clone()];
        assert!(systems_liftable_equivalent(&p3, &mixed, &mixed).is_err());
    }

    #[test]
    fn constructor_validation() {
        assert!(IntervalRef::x(3, 3).is_err());
        assert!(IntervalRef::x_ij(3, 2, 2).is_err());
        assert!(CurveRef::alpha(3, 4).is_err());
        assert!(CurveRef::alpha_ijk(4, 1, 1, 3).is_err());
        assert_eq!(
            IntervalRef::x_hat(4, 1, 2).unwrap(),
            IntervalRef::x(4, 1).unwrap()
        );
        assert_eq!(
            IntervalRef::x_hat3(4, 1, 1, 3).unwrap(),
            IntervalRef::x_hat(4, 1, 3).unwrap()
        );
        assert_eq!(
            IntervalRef::x_hat3(4, 4, 2, 1).unwrap(),
            IntervalRef::x_hat3(4, 1, 2, 4).unwrap()
        );
    }
}
