//! Exact structural subsets of a finite ring: `U`, `Id`, `Nil`, `J`, `J#`,
//! `QN` and `ΔN`.
//!
//! Each set is computed by direct quantifier elimination over the tables and
//! cached on the ring. In a finite ring one-sided inverses are two-sided, so
//! `a ∈ J(R)` iff `1 - ra` is a unit for every `r`; the two-sided
//! characterization lives in [`oracle`] as an independent cross-check.

use serde::{Deserialize, Serialize};

use crate::constructions::is_ideal;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralSets {
    pub units: ElemSet,
    pub idempotents: ElemSet,
    pub nilpotents: ElemSet,
    pub jacobson: ElemSet,
    pub j_sharp: ElemSet,
    pub quasi_nilpotents: ElemSet,
    pub delta_nilpotents: ElemSet,
}

impl StructuralSets {
    /// Field names in report order, paired with the sets.
    pub fn named(&self) -> [(&'static str, &ElemSet); 7] {
        [
            ("units", &self.units),
            ("idempotents", &self.idempotents),
            ("nilpotents", &self.nilpotents),
            ("jacobson", &self.jacobson),
            ("j_sharp", &self.j_sharp),
            ("quasi_nilpotents", &self.quasi_nilpotents),
            ("delta_nilpotents", &self.delta_nilpotents),
        ]
    }

    /// Fix up the universe of every set after deserialization.
    pub fn with_universe(self, order: usize) -> Option<Self> {
        Some(Self {
            units: self.units.with_universe(order)?,
            idempotents: self.idempotents.with_universe(order)?,
            nilpotents: self.nilpotents.with_universe(order)?,
            jacobson: self.jacobson.with_universe(order)?,
            j_sharp: self.j_sharp.with_universe(order)?,
            quasi_nilpotents: self.quasi_nilpotents.with_universe(order)?,
            delta_nilpotents: self.delta_nilpotents.with_universe(order)?,
        })
    }
}

pub fn units(r: &FiniteRing) -> &ElemSet {
    r.cache()
        .units
        .get_or_init(|| ElemSet::from_mask(r.inverses().iter().map(Option::is_some).collect()))
}

pub fn is_unit(r: &FiniteRing, a: usize) -> bool {
    units(r).contains(a)
}

pub fn idempotents(r: &FiniteRing) -> &ElemSet {
    r.cache()
        .idempotents
        .get_or_init(|| ElemSet::from_predicate(r.order(), |e| r.mul(e, e) == e))
}

pub fn nilpotents(r: &FiniteRing) -> &ElemSet {
    r.cache().nilpotents.get_or_init(|| {
        ElemSet::from_predicate(r.order(), |a| r.power_orbit(a).contains(&r.zero()))
    })
}

fn jacobson_unverified(r: &FiniteRing) -> &ElemSet {
    r.cache().jacobson.get_or_init(|| {
        let u = units(r);
        let one = r.one();
        ElemSet::from_predicate(r.order(), |a| (0..r.order()).all(|x| u.contains(r.sub(one, r.mul(x, a)))))
    })
}

/// `{a : 1 - ra ∈ U(R) for all r}`, checked to be a two-sided ideal.
pub fn jacobson_radical(r: &FiniteRing) -> Result<&ElemSet> {
    let j = jacobson_unverified(r);
    if !is_ideal(r, j) {
        return Err(Error::InternalInconsistency(format!(
            "computed Jacobson radical of {} is not an ideal",
            r.label()
        )));
    }
    Ok(j)
}

/// Cached `J(R)` for internal consumers; the ideal check is the job of
/// [`jacobson_radical`].
pub(crate) fn jacobson(r: &FiniteRing) -> &ElemSet {
    jacobson_unverified(r)
}

/// `{z : z^n ∈ J(R) for some n >= 1}`
pub fn j_sharp(r: &FiniteRing) -> &ElemSet {
    r.cache().j_sharp.get_or_init(|| {
        let j = jacobson(r);
        ElemSet::from_predicate(r.order(), |z| r.power_orbit(z).iter().any(|&p| j.contains(p)))
    })
}

/// `{a : 1 - ax ∈ U(R) for every x with ax = xa}`
pub fn quasi_nilpotents(r: &FiniteRing) -> &ElemSet {
    r.cache().quasi_nilpotents.get_or_init(|| {
        let u = units(r);
        let one = r.one();
        ElemSet::from_predicate(r.order(), |a| {
            (0..r.order()).all(|x| !r.commute(a, x) || u.contains(r.sub(one, r.mul(a, x))))
        })
    })
}

/// `{a : 1 - au ∈ U(R) for every unit u with au = ua}`
pub fn delta_nilpotents(r: &FiniteRing) -> &ElemSet {
    r.cache().delta_nilpotents.get_or_init(|| {
        let u = units(r);
        let unit_list = u.to_vec();
        let one = r.one();
        ElemSet::from_predicate(r.order(), |a| {
            unit_list.iter().all(|&v| !r.commute(a, v) || u.contains(r.sub(one, r.mul(a, v))))
        })
    })
}

/// All seven sets, with the cross-set inclusions asserted.
pub fn compute_structural_sets(r: &FiniteRing) -> Result<StructuralSets> {
    let sets = StructuralSets {
        units: units(r).clone(),
        idempotents: idempotents(r).clone(),
        nilpotents: nilpotents(r).clone(),
        jacobson: jacobson_radical(r)?.clone(),
        j_sharp: j_sharp(r).clone(),
        quasi_nilpotents: quasi_nilpotents(r).clone(),
        delta_nilpotents: delta_nilpotents(r).clone(),
    };
    let inclusions = [
        ("J ⊆ J#", &sets.jacobson, &sets.j_sharp),
        ("Nil ⊆ J#", &sets.nilpotents, &sets.j_sharp),
        ("J ⊆ QN", &sets.jacobson, &sets.quasi_nilpotents),
        ("Nil ⊆ QN", &sets.nilpotents, &sets.quasi_nilpotents),
        ("QN ⊆ ΔN", &sets.quasi_nilpotents, &sets.delta_nilpotents),
    ];
    for (name, small, big) in inclusions {
        if let Some(x) = small.first_outside(big) {
            return Err(Error::InternalInconsistency(format!("{name} fails at element {x} of {}", r.label())));
        }
    }
    if !r.is_trivial() {
        if let Some(x) = sets.units.intersection(&sets.j_sharp).iter().next() {
            return Err(Error::InternalInconsistency(format!("unit {x} lies in J# of {}", r.label())));
        }
    }
    Ok(sets)
}

/// Seed a ring's caches with previously computed sets (e.g. from the disk
/// cache). Sets already computed are left alone. Returns `false` when the
/// sets do not fit the ring.
pub fn prime_structural_sets(r: &FiniteRing, sets: &StructuralSets) -> bool {
    if sets.named().iter().any(|(_, s)| s.universe() != r.order()) {
        return false;
    }
    let c = r.cache();
    let _ = c.units.set(sets.units.clone());
    let _ = c.idempotents.set(sets.idempotents.clone());
    let _ = c.nilpotents.set(sets.nilpotents.clone());
    let _ = c.jacobson.set(sets.jacobson.clone());
    let _ = c.j_sharp.set(sets.j_sharp.clone());
    let _ = c.quasi_nilpotents.set(sets.quasi_nilpotents.clone());
    let _ = c.delta_nilpotents.set(sets.delta_nilpotents.clone());
    true
}

/// `1 + X`
pub fn one_plus(r: &FiniteRing, x: &ElemSet) -> ElemSet {
    ElemSet::from_indices(r.order(), x.iter().map(|a| r.add(r.one(), a)))
}

/// Independent characterizations used for differential checks.
pub mod oracle {
    use super::*;

    /// `{a : 1 - r·a·s ∈ U(R) for all r, s}`.
    ///
    /// Evaluated in two stages: first the right quasi-regular elements
    /// `B = {b : 1 - b·s ∈ U for all s}`, then `{a : r·a ∈ B for all r}`.
    /// This is exactly the doubly quantified set, without the cubic loop.
    pub fn jacobson_two_sided(r: &FiniteRing) -> ElemSet {
        let u = units(r);
        let one = r.one();
        let n = r.order();
        let right_qr = ElemSet::from_predicate(n, |b| (0..n).all(|s| u.contains(r.sub(one, r.mul(b, s)))));
        ElemSet::from_predicate(n, |a| (0..n).all(|x| right_qr.contains(r.mul(x, a))))
    }

    /// The same set by the literal triple loop. Cubic; for small rings.
    pub fn jacobson_two_sided_naive(r: &FiniteRing) -> ElemSet {
        let u = units(r);
        let one = r.one();
        let n = r.order();
        ElemSet::from_predicate(n, |a| {
            (0..n).all(|x| (0..n).all(|s| u.contains(r.sub(one, r.mul3(x, a, s)))))
        })
    }
}
