//! Element-level decomposition searches `a = e + j` and ring-level class
//! predicates.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::ring::FiniteRing;
use crate::sets;

/// Which set the complement `j` must lie in.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Units,
    Nil,
    Jacobson,
    JSharp,
    QuasiNil,
    DeltaNil,
}

impl Target {
    pub fn set(self, r: &FiniteRing) -> &ElemSet {
        match self {
            Target::Units => sets::units(r),
            Target::Nil => sets::nilpotents(r),
            Target::Jacobson => sets::jacobson(r),
            Target::JSharp => sets::j_sharp(r),
            Target::QuasiNil => sets::quasi_nilpotents(r),
            Target::DeltaNil => sets::delta_nilpotents(r),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Clean,
    StronglyClean,
    NilClean,
    StronglyNilClean,
    JClean,
    StronglyJClean,
    JsharpClean,
    StronglyJsharpClean,
    QnClean,
    StronglyQnClean,
    DeltanClean,
    StronglyDeltanClean,
}

impl Kind {
    pub const COUNT: usize = 12;

    pub const ALL: [Kind; Kind::COUNT] = [
        Kind::Clean,
        Kind::StronglyClean,
        Kind::NilClean,
        Kind::StronglyNilClean,
        Kind::JClean,
        Kind::StronglyJClean,
        Kind::JsharpClean,
        Kind::StronglyJsharpClean,
        Kind::QnClean,
        Kind::StronglyQnClean,
        Kind::DeltanClean,
        Kind::StronglyDeltanClean,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Clean => "clean",
            Kind::StronglyClean => "strongly-clean",
            Kind::NilClean => "nil-clean",
            Kind::StronglyNilClean => "strongly-nil-clean",
            Kind::JClean => "j-clean",
            Kind::StronglyJClean => "strongly-j-clean",
            Kind::JsharpClean => "jsharp-clean",
            Kind::StronglyJsharpClean => "strongly-jsharp-clean",
            Kind::QnClean => "qn-clean",
            Kind::StronglyQnClean => "strongly-qn-clean",
            Kind::DeltanClean => "deltan-clean",
            Kind::StronglyDeltanClean => "strongly-deltan-clean",
        }
    }

    pub fn is_strong(self) -> bool {
        self.index() % 2 == 1
    }

    pub fn target(self) -> Target {
        match self {
            Kind::Clean | Kind::StronglyClean => Target::Units,
            Kind::NilClean | Kind::StronglyNilClean => Target::Nil,
            Kind::JClean | Kind::StronglyJClean => Target::Jacobson,
            Kind::JsharpClean | Kind::StronglyJsharpClean => Target::JSharp,
            Kind::QnClean | Kind::StronglyQnClean => Target::QuasiNil,
            Kind::DeltanClean | Kind::StronglyDeltanClean => Target::DeltaNil,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.to_ascii_lowercase().replace(['_', ' '], "-").replace('#', "sharp").replace("δ", "delta");
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| format!("unknown decomposition kind {s:?}"))
    }
}

/// A witness `a = e + j` with `e` idempotent and `j` in the kind's target set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub element: usize,
    pub idempotent: usize,
    pub complement: usize,
    pub kind: Kind,
    pub commuting: bool,
}

/// Every decomposition of `a` of the given kind, ordered by idempotent index
/// (the complement is determined by the idempotent).
pub fn decompositions(r: &FiniteRing, a: usize, kind: Kind) -> Vec<Decomposition> {
    let target = kind.target().set(r);
    sets::idempotents(r)
        .iter()
        .filter_map(|e| {
            let j = r.sub(a, e);
            let commuting = r.commute(e, j);
            (target.contains(j) && (commuting || !kind.is_strong())).then_some(Decomposition {
                element: a,
                idempotent: e,
                complement: j,
                kind,
                commuting,
            })
        })
        .collect()
}

/// Number of decompositions of each element, cached per ring.
pub fn decomposition_counts(r: &FiniteRing, kind: Kind) -> &[u32] {
    r.cache().decomposition_counts[kind.index()].get_or_init(|| {
        let target = kind.target().set(r);
        let idems = sets::idempotents(r).to_vec();
        (0..r.order())
            .map(|a| {
                idems
                    .iter()
                    .filter(|&&e| {
                        let j = r.sub(a, e);
                        target.contains(j) && (!kind.is_strong() || r.commute(e, j))
                    })
                    .count() as u32
            })
            .collect()
    })
}

pub fn is_element_of_kind(r: &FiniteRing, a: usize, kind: Kind) -> bool {
    decomposition_counts(r, kind)[a] > 0
}

/// `Ok` if every element decomposes, else the first element that does not.
pub fn ring_is(r: &FiniteRing, kind: Kind) -> Result<(), usize> {
    match decomposition_counts(r, kind).iter().position(|&c| c == 0) {
        None => Ok(()),
        Some(a) => Err(a),
    }
}

pub fn is_ring_of_kind(r: &FiniteRing, kind: Kind) -> bool {
    ring_is(r, kind).is_ok()
}

/// Some `x` with `x²a = x`, `ax = xa` and `a - ax ∈ J#(R)`.
pub fn is_strongly_jsharp_clean_via_x(r: &FiniteRing, a: usize) -> Option<usize> {
    let js = sets::j_sharp(r);
    (0..r.order()).find(|&x| r.mul3(x, x, a) == x && r.commute(a, x) && js.contains(r.sub(a, r.mul(a, x))))
}

/// First element of the symmetric difference of `U(R)` and `1 + X`.
pub fn units_are_one_plus(r: &FiniteRing, x: &ElemSet) -> Result<(), usize> {
    let shifted = sets::one_plus(r, x);
    match (0..r.order()).find(|&a| sets::units(r).contains(a) != shifted.contains(a)) {
        None => Ok(()),
        Some(a) => Err(a),
    }
}

/// `R/J(R)` is Boolean iff `a² - a ∈ J(R)` for every `a`.
pub fn quotient_by_jacobson_is_boolean(r: &FiniteRing) -> Result<(), usize> {
    let j = sets::jacobson(r);
    match (0..r.order()).find(|&a| !j.contains(r.sub(r.mul(a, a), a))) {
        None => Ok(()),
        Some(a) => Err(a),
    }
}

/// Nonunits closed under addition, for a nontrivial ring. Fails with a pair
/// of nonunits whose sum is a unit.
pub fn local_test(r: &FiniteRing) -> Result<(), Vec<usize>> {
    if r.is_trivial() {
        return Err(vec![]);
    }
    let u = sets::units(r);
    let nonunits: Vec<usize> = (0..r.order()).filter(|&a| !u.contains(a)).collect();
    for &a in &nonunits {
        if let Some(&b) = nonunits.iter().find(|&&b| u.contains(r.add(a, b))) {
            return Err(vec![a, b]);
        }
    }
    Ok(())
}

pub fn dedekind_test(r: &FiniteRing) -> Result<(), [usize; 2]> {
    for a in 0..r.order() {
        for b in 0..r.order() {
            if r.mul(a, b) == r.one() && r.mul(b, a) != r.one() {
                return Err([a, b]);
            }
        }
    }
    Ok(())
}

/// Ring-level class flags. Field names are part of the JSON report format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingClassReport {
    pub label: String,
    pub order: usize,
    pub trivial: bool,
    pub boolean_ring: bool,
    pub abelian: bool,
    pub local: bool,
    pub dedekind_finite: bool,
    pub clean: bool,
    pub strongly_clean: bool,
    pub nil_clean: bool,
    pub strongly_nil_clean: bool,
    pub j_clean: bool,
    pub strongly_j_clean: bool,
    pub jsharp_clean: bool,
    pub strongly_jsharp_clean: bool,
    pub uniquely_clean: bool,
    pub uniquely_jsharp_clean: bool,
    pub qn_clean: bool,
    pub strongly_qn_clean: bool,
    pub deltan_clean: bool,
    pub strongly_deltan_clean: bool,
    pub uu: bool,
    pub uj: bool,
    pub uq: bool,
    pub delta_nu: bool,
    pub trivial_idempotents_only: bool,
    pub two_in_jacobson: bool,
    /// Counterexample indices for each false flag, keyed by field name.
    pub witnesses: BTreeMap<String, Vec<usize>>,
    pub notes: Vec<String>,
}

pub fn ring_class_report(r: &FiniteRing) -> RingClassReport {
    let mut witnesses = BTreeMap::new();
    let mut flag = |name: &str, outcome: Result<(), Vec<usize>>| match outcome {
        Ok(()) => true,
        Err(w) => {
            witnesses.insert(name.to_string(), w);
            false
        }
    };
    let one = |res: Result<(), usize>| res.map_err(|a| vec![a]);
    let n = r.order();
    let idems = sets::idempotents(r);

    let boolean_ring = flag("boolean_ring", one(first_failure(n, |a| idems.contains(a))));
    let abelian = flag(
        "abelian",
        idems
            .iter()
            .find_map(|e| (0..n).find(|&x| !r.commute(e, x)).map(|x| vec![e, x]))
            .map_or(Ok(()), Err),
    );
    let local = flag("local", local_test(r));
    let dedekind_finite = flag("dedekind_finite", dedekind_test(r).map_err(|p| p.to_vec()));
    let mut kinds = [false; Kind::COUNT];
    for kind in Kind::ALL {
        kinds[kind.index()] = flag(&kind.name().replace('-', "_"), one(ring_is(r, kind)));
    }
    let k = |kind: Kind| kinds[kind.index()];
    let uniquely_clean = flag(
        "uniquely_clean",
        one(first_failure(n, |a| decomposition_counts(r, Kind::Clean)[a] == 1)),
    );
    let uniquely_jsharp_clean = flag(
        "uniquely_jsharp_clean",
        one(first_failure(n, |a| decomposition_counts(r, Kind::JsharpClean)[a] == 1)),
    );
    let uu = flag("uu", one(units_are_one_plus(r, sets::nilpotents(r))));
    let uj = flag("uj", one(units_are_one_plus(r, sets::jacobson(r))));
    let uq = flag("uq", one(units_are_one_plus(r, sets::quasi_nilpotents(r))));
    let delta_nu = flag("delta_nu", one(units_are_one_plus(r, sets::delta_nilpotents(r))));
    let trivial_idempotents_only = flag(
        "trivial_idempotents_only",
        idems.iter().find(|&e| e != r.zero() && e != r.one()).map_or(Ok(()), |e| Err(vec![e])),
    );
    let two = r.from_int(2);
    let u = sets::units(r);
    let two_in_jacobson = flag(
        "two_in_jacobson",
        (0..n)
            .find(|&x| !u.contains(r.sub(r.one(), r.mul(x, two))))
            .map_or(Ok(()), |x| Err(vec![two, x])),
    );

    let mut notes = vec!["uq is evaluated as U(R) = 1 + QN(R)".to_string()];
    if r.is_trivial() {
        notes.push("trivial ring: every decomposition predicate holds vacuously; not local".to_string());
    }

    RingClassReport {
        label: r.label().to_string(),
        order: n,
        trivial: r.is_trivial(),
        boolean_ring,
        abelian,
        local,
        dedekind_finite,
        clean: k(Kind::Clean),
        strongly_clean: k(Kind::StronglyClean),
        nil_clean: k(Kind::NilClean),
        strongly_nil_clean: k(Kind::StronglyNilClean),
        j_clean: k(Kind::JClean),
        strongly_j_clean: k(Kind::StronglyJClean),
        jsharp_clean: k(Kind::JsharpClean),
        strongly_jsharp_clean: k(Kind::StronglyJsharpClean),
        uniquely_clean,
        uniquely_jsharp_clean,
        qn_clean: k(Kind::QnClean),
        strongly_qn_clean: k(Kind::StronglyQnClean),
        deltan_clean: k(Kind::DeltanClean),
        strongly_deltan_clean: k(Kind::StronglyDeltanClean),
        uu,
        uj,
        uq,
        delta_nu,
        trivial_idempotents_only,
        two_in_jacobson,
        witnesses,
        notes,
    }
}

fn first_failure(n: usize, ok: impl Fn(usize) -> bool) -> Result<(), usize> {
    match (0..n).find(|&a| !ok(a)) {
        None => Ok(()),
        Some(a) => Err(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matrix_ring, ring_zn};

    fn z(n: usize) -> FiniteRing {
        ring_zn(n).unwrap()
    }

    fn pairs(list: &[Decomposition]) -> Vec<(usize, usize)> {
        list.iter().map(|d| (d.idempotent, d.complement)).collect()
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in Kind::ALL {
            assert_eq!(kind.name().parse::<Kind>().unwrap(), kind);
            assert_eq!(serde_json::to_string(&kind).unwrap(), format!("\"{}\"", kind.name()));
        }
        assert_eq!("strongly-J#-clean".parse::<Kind>().unwrap(), Kind::StronglyJsharpClean);
        assert!("clever".parse::<Kind>().is_err());
    }

    #[test]
    fn z4_decompositions() {
        let r = z(4);
        assert_eq!(pairs(&decompositions(&r, 3, Kind::StronglyJsharpClean)), vec![(1, 2)]);
        assert_eq!(pairs(&decompositions(&r, 0, Kind::StronglyJsharpClean)), vec![(0, 0)]);
        assert_eq!(is_strongly_jsharp_clean_via_x(&r, 3), Some(3));
        assert_eq!(is_strongly_jsharp_clean_via_x(&r, 0), Some(0));
    }

    #[test]
    fn z6_decompositions() {
        let r = z(6);
        let clean = pairs(&decompositions(&r, 5, Kind::Clean));
        assert!(clean.contains(&(0, 5)) && clean.contains(&(4, 1)));
        assert!(decompositions(&r, 5, Kind::Clean).iter().all(|d| d.commuting));
        assert!(decompositions(&r, 2, Kind::StronglyJsharpClean).is_empty());
        assert_eq!(is_strongly_jsharp_clean_via_x(&r, 2), None);
    }

    #[test]
    fn z2_report() {
        let rep = ring_class_report(&z(2));
        assert!(rep.boolean_ring && rep.local && rep.strongly_jsharp_clean && rep.uniquely_clean);
        assert!(rep.uu && rep.uj && rep.uq && rep.delta_nu);
        assert!(rep.witnesses.is_empty());
    }

    #[test]
    fn z4_report() {
        let rep = ring_class_report(&z(4));
        assert!(!rep.boolean_ring && rep.local && rep.strongly_jsharp_clean && rep.two_in_jacobson);
        assert_eq!(rep.witnesses["boolean_ring"], vec![2]);
    }

    #[test]
    fn z3_and_m2_reports() {
        let rep = ring_class_report(&z(3));
        assert!(!rep.strongly_jsharp_clean && !rep.two_in_jacobson && rep.local);
        assert!(rep.witnesses.contains_key("strongly_jsharp_clean"));
        let m2 = ring_class_report(&matrix_ring(&z(2), 2).unwrap());
        assert!(!m2.strongly_jsharp_clean && m2.clean && m2.dedekind_finite && !m2.local);
        let a = m2.witnesses["strongly_jsharp_clean"][0];
        assert!(decompositions(&matrix_ring(&z(2), 2).unwrap(), a, Kind::StronglyJsharpClean).is_empty());
    }

    #[test]
    fn trivial_ring_report() {
        let rep = ring_class_report(&z(1));
        assert!(rep.trivial && !rep.local && rep.strongly_jsharp_clean && rep.boolean_ring);
    }
}
