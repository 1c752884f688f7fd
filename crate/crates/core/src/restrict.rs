//! Restriction of a covering to the complement of a neighbourhood of some
//! curves of its fundamental system.
//!
//! The restriction keeps all `d` sheets, numbered coherently with the
//! original covering; sheets that lose all their branch points show up as
//! singleton components.

use crate::covering::{ComponentSignature, MonodromySequence};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Which end of the removed boundary arc becomes the new base point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    /// The starting point `*′`.
    Start,
    /// The ending point `*″`.
    End,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RestrictionSpec {
    indices: Vec<usize>,
    base: Base,
}

impl RestrictionSpec {
    /// Indices are 1-based branch positions; they are sorted here and must be
    /// distinct and nonempty.
    pub fn new(mut indices: Vec<usize>, base: Base) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidRestriction("empty index set".into()));
        }
        indices.sort_unstable();
        if indices[0] == 0 {
            return Err(Error::InvalidRestriction("indices are 1-based".into()));
        }
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidRestriction(format!(
                "repeated index in {indices:?}"
            )));
        }
        Ok(RestrictionSpec { indices, base })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn base(&self) -> Base {
        self.base
    }

    fn check(&self, seq: &MonodromySequence) -> Result<()> {
        match self.indices.last() {
            Some(&last) if last <= seq.len() => Ok(()),
            _ => Err(Error::InvalidRestriction(format!(
                "indices {:?} out of range for {} branch points",
                self.indices,
                seq.len()
            ))),
        }
    }
}

/// Monodromy sequence of the restriction, with the surviving curves in their
/// original order.
///
/// Base `*′`: a curve after removed ones is conjugated by the removed
/// transpositions preceding it, nearest first. Base `*″`: a curve before
/// removed ones is conjugated by the removed transpositions following it,
/// nearest first.
pub fn restrict(seq: &MonodromySequence, spec: &RestrictionSpec) -> Result<MonodromySequence> {
    spec.check(seq)?;
    let removed = &spec.indices;
    let mut out = Vec::with_capacity(seq.len() - removed.len());
    for j in 1..=seq.len() {
        if removed.binary_search(&j).is_ok() {
            continue;
        }
        let mut t = seq.entry(j);
        match spec.base {
            Base::Start => {
                for &i in removed.iter().rev().filter(|&&i| i < j) {
                    t = t.conjugate_by(seq.entry(i));
                }
            }
            Base::End => {
                for &i in removed.iter().filter(|&&i| i > j) {
                    t = t.conjugate_by(seq.entry(i));
                }
            }
        }
        out.push(t);
    }
    MonodromySequence::new(seq.degree(), out)
}

/// Total monodromy of the restriction computed from the original data:
/// `φ(ω) τ_{i_k} ⋯ τ_{i_1}` for `*′`, `τ_{i_k} ⋯ τ_{i_1} φ(ω)` for `*″`.
pub fn restricted_total_monodromy(
    seq: &MonodromySequence,
    spec: &RestrictionSpec,
) -> Result<Permutation> {
    spec.check(seq)?;
    let mut removed_product = Permutation::identity(seq.degree());
    for &i in spec.indices.iter().rev() {
        removed_product.then_transposition(seq.entry(i));
    }
    let total = seq.total_monodromy();
    Ok(match spec.base {
        Base::Start => total.then(&removed_product),
        Base::End => removed_product.then(&total),
    })
}

pub fn restriction_signature(
    seq: &MonodromySequence,
    spec: &RestrictionSpec,
) -> Result<ComponentSignature> {
    Ok(restrict(seq, spec)?.components())
}
