//! Point predicates: the decidable statement each check scans for, evaluated
//! at one tuple of elements (or at the ring as a whole). Check witnesses name
//! a predicate so a failure can be replayed independently.

use std::sync::OnceLock;

use crate::classify::{
    self, decompositions, is_element_of_kind, is_ring_of_kind, is_strongly_jsharp_clean_via_x, Kind,
};
use crate::constructions::{
    augmentation, corner_embedding, corner_ring, product_coordinates, quad_entries, quad_index,
};
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::ring::{FiniteRing, Shape};
use crate::sets;

/// A ring plus memoized auxiliary data some predicates need.
pub struct Env {
    ring: FiniteRing,
    oracle: OnceLock<ElemSet>,
    idempotent_orbits: OnceLock<[ElemSet; 2]>,
    split_diagonal_orbits: OnceLock<ElemSet>,
}

impl Env {
    pub fn new(ring: FiniteRing) -> Self {
        Self {
            ring,
            oracle: OnceLock::new(),
            idempotent_orbits: OnceLock::new(),
            split_diagonal_orbits: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    fn oracle(&self) -> &ElemSet {
        self.oracle.get_or_init(|| sets::oracle::jacobson_two_sided(&self.ring))
    }

    /// Conjugacy orbits of `diag(1,0)` and `diag(0,1)` in a `K_s(R)`.
    fn idempotent_orbits(&self) -> &[ElemSet; 2] {
        self.idempotent_orbits.get_or_init(|| {
            let r = &self.ring;
            let base = ks_base(r);
            let (z, o) = (base.zero(), base.one());
            [orbit(r, quad_index(base, [o, z, z, z])), orbit(r, quad_index(base, [z, z, z, o]))]
        })
    }

    /// Everything similar to `diag(a,b)` with one of `a, b` in `J(R)` and the
    /// other in `1 + J(R)`.
    fn split_diagonal_orbits(&self) -> &ElemSet {
        self.split_diagonal_orbits.get_or_init(|| {
            let r = &self.ring;
            let base = ks_base(r);
            let j = sets::jacobson(base);
            let z = base.zero();
            let mut out = ElemSet::empty(r.order());
            for a in j.iter() {
                for b in sets::one_plus(base, j).iter() {
                    for d in [quad_index(base, [a, z, z, b]), quad_index(base, [b, z, z, a])] {
                        if !out.contains(d) {
                            out = out.union(&orbit(r, d));
                        }
                    }
                }
            }
            out
        })
    }
}

/// `{p x p⁻¹ : p ∈ U(R)}`, by enumerating every unit.
pub fn orbit(r: &FiniteRing, x: usize) -> ElemSet {
    ElemSet::from_indices(
        r.order(),
        sets::units(r).iter().map(|p| r.mul3(p, x, r.inverse(p).expect("unit has an inverse"))),
    )
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ShapeReq {
    Any,
    Product,
    Matrix2,
    GroupRing,
    GenMatrix,
}

impl ShapeReq {
    pub fn admits(self, r: &FiniteRing) -> bool {
        match (self, r.shape()) {
            (ShapeReq::Any, _) => true,
            (ShapeReq::Product, Shape::Product { .. }) => true,
            (ShapeReq::Matrix2, Shape::Matrix { size: 2, .. }) => true,
            (ShapeReq::GroupRing, Shape::GroupRing { .. }) => true,
            (ShapeReq::GenMatrix, Shape::GenMatrix { .. }) => true,
            _ => false,
        }
    }
}

pub struct Predicate {
    pub name: &'static str,
    pub roles: &'static [&'static str],
    pub shape: ShapeReq,
    /// `true` when the statement holds at the given elements.
    pub eval: fn(&Env, &[usize]) -> bool,
}

fn ks_base(r: &FiniteRing) -> &FiniteRing {
    match r.shape() {
        Shape::GenMatrix { base, .. } => base,
        _ => panic!("{} is not a generalized matrix ring", r.label()),
    }
}

fn ks_multiplier(r: &FiniteRing) -> usize {
    match r.shape() {
        Shape::GenMatrix { multiplier, .. } => *multiplier,
        _ => panic!("{} is not a generalized matrix ring", r.label()),
    }
}

fn sj(r: &FiniteRing, a: usize) -> bool {
    is_element_of_kind(r, a, Kind::StronglyJsharpClean)
}

fn ring_sj(r: &FiniteRing) -> bool {
    is_ring_of_kind(r, Kind::StronglyJsharpClean)
}

fn js(r: &FiniteRing, a: usize) -> bool {
    sets::j_sharp(r).contains(a)
}

fn jac(r: &FiniteRing, a: usize) -> bool {
    sets::jacobson(r).contains(a)
}

fn unit(r: &FiniteRing, a: usize) -> bool {
    sets::units(r).contains(a)
}

fn implies(p: bool, q: bool) -> bool {
    !p || q
}

fn units_one_plus(r: &FiniteRing, x: &ElemSet) -> bool {
    classify::units_are_one_plus(r, x).is_ok()
}

pub fn is_abelian(r: &FiniteRing) -> bool {
    sets::idempotents(r).iter().all(|e| r.is_central(e))
}

pub fn is_local(r: &FiniteRing) -> bool {
    classify::local_test(r).is_ok()
}

/// The three sets of the corner identity, on parent indices:
/// `eRe ∩ J#(R)`, `e J#(R) e`, and `J#(eRe)` embedded.
pub fn corner_jsharp_sets(r: &FiniteRing, e: usize) -> Result<(FiniteRing, [ElemSet; 3])> {
    let corner = corner_ring(r, e)?;
    let n = r.order();
    let intersection = ElemSet::from_predicate(n, |x| r.mul3(e, x, e) == x && js(r, x));
    let sandwiched = ElemSet::from_indices(n, sets::j_sharp(r).iter().map(|z| r.mul3(e, z, e)));
    let embedding = corner_embedding(&corner).expect("corner ring");
    let embedded = ElemSet::from_indices(n, sets::j_sharp(&corner).iter().map(|i| embedding[i]));
    Ok((corner, [intersection, sandwiched, embedded]))
}

/// Strong J#-cleanness of `a ∈ eRe` in `R` and in the corner.
pub fn corner_element_agrees(r: &FiniteRing, corner: &FiniteRing, a: usize) -> bool {
    let embedding = corner_embedding(corner).expect("corner ring");
    match embedding.binary_search(&a) {
        Ok(local) => sj(r, a) == sj(corner, local),
        Err(_) => true,
    }
}

/// `[clean ∧ U = 1+J#, J#-clean ∧ U = 1+J#, J#-clean]`
pub fn clean_equiv_items(r: &FiniteRing) -> [bool; 3] {
    let units_ok = units_one_plus(r, sets::j_sharp(r));
    let jsharp_clean = is_ring_of_kind(r, Kind::JsharpClean);
    [is_ring_of_kind(r, Kind::Clean) && units_ok, jsharp_clean && units_ok, jsharp_clean]
}

/// `(item1..=item5)` of the uniquely-clean characterization.
pub fn six_equiv_items(r: &FiniteRing) -> [bool; 5] {
    let abelian = is_abelian(r);
    [
        abelian && is_ring_of_kind(r, Kind::JClean),
        abelian && is_ring_of_kind(r, Kind::JsharpClean),
        abelian && is_ring_of_kind(r, Kind::QnClean),
        abelian && is_ring_of_kind(r, Kind::DeltanClean),
        uniquely_clean(r),
    ]
}

pub fn uniquely_clean(r: &FiniteRing) -> bool {
    classify::decomposition_counts(r, Kind::Clean).iter().all(|&c| c == 1)
}

pub fn uniquely_jsharp_clean(r: &FiniteRing) -> bool {
    classify::decomposition_counts(r, Kind::JsharpClean).iter().all(|&c| c == 1)
}

macro_rules! pred {
    ($name:expr, [$($role:expr),*], $shape:ident, $eval:expr) => {
        Predicate { name: $name, roles: &[$($role),*], shape: ShapeReq::$shape, eval: $eval }
    };
}

pub static PREDICATES: &[Predicate] = &[
    pred!("jsharp-plus-j", ["a", "b"], Any, |env, x| {
        let r = env.ring();
        implies(js(r, x[0]) && jac(r, x[1]), js(r, r.add(x[0], x[1])))
    }),
    pred!("jsharp-neg", ["a"], Any, |env, x| {
        let r = env.ring();
        js(r, x[0]) == js(r, r.neg(x[0]))
    }),
    pred!("jsharp-product", ["x"], Product, |env, x| {
        let r = env.ring();
        let Shape::Product { factors } = r.shape() else { unreachable!() };
        let coords = product_coordinates(r, x[0]).expect("product ring");
        js(r, x[0]) == coords.iter().zip(factors).all(|(&c, f)| js(f, c))
    }),
    pred!("jsharp-conjugation", ["u", "a"], Any, |env, x| {
        let r = env.ring();
        let (u, a) = (x[0], x[1]);
        match r.inverse(u) {
            Some(inv) => implies(js(r, a), js(r, r.mul3(u, a, inv))),
            None => true,
        }
    }),
    pred!("product-iff", [], Product, |env, _| {
        let r = env.ring();
        let Shape::Product { factors } = r.shape() else { unreachable!() };
        ring_sj(r) == factors.iter().all(ring_sj)
    }),
    pred!("strongly-jsharp-element", ["a"], Any, |env, x| sj(env.ring(), x[0])),
    pred!("unit-decomposition", ["u"], Any, |env, x| {
        let r = env.ring();
        let u = x[0];
        if !unit(r, u) {
            return true;
        }
        let list = decompositions(r, u, Kind::StronglyJsharpClean);
        (!list.is_empty()) == js(r, r.sub(r.one(), u)) && list.iter().all(|d| d.idempotent == r.one())
    }),
    pred!("units-one-plus-jsharp", ["x"], Any, |env, x| {
        let r = env.ring();
        unit(r, x[0]) == js(r, r.sub(x[0], r.one()))
    }),
    pred!("two-in-jacobson", ["r"], Any, |env, x| {
        let r = env.ring();
        unit(r, r.sub(r.one(), r.mul(x[0], r.from_int(2))))
    }),
    pred!("corner-jsharp", ["e", "x"], Any, |env, x| {
        let r = env.ring();
        let (e, y) = (x[0], x[1]);
        match corner_jsharp_sets(r, e) {
            Ok((_, [a, b, c])) => a.contains(y) == b.contains(y) && b.contains(y) == c.contains(y),
            Err(_) => true,
        }
    }),
    pred!("annihilator", ["a", "e", "x"], Any, |env, x| {
        let r = env.ring();
        let (a, e, y) = (x[0], x[1], x[2]);
        let j = r.sub(a, e);
        let decomposes = r.mul(e, e) == e && js(r, j) && r.commute(e, j);
        let zero = r.zero();
        implies(decomposes, implies(r.mul(y, a) == zero, r.mul(y, e) == zero))
            && implies(decomposes, implies(r.mul(a, y) == zero, r.mul(e, y) == zero))
    }),
    pred!("corner-element", ["e", "a"], Any, |env, x| {
        let r = env.ring();
        match corner_ring(r, x[0]) {
            Ok(corner) => corner_element_agrees(r, &corner, x[1]),
            Err(_) => true,
        }
    }),
    pred!("not-strongly-jsharp-clean", [], Any, |env, _| !ring_sj(env.ring())),
    pred!("two-unit-identity", [], Matrix2, |env, _| {
        let r = env.ring();
        let Shape::Matrix { base, .. } = r.shape() else { unreachable!() };
        let (z, o) = (base.zero(), base.one());
        let m = base.neg(o);
        let a = quad_index(base, [o, m, m, z]);
        let b = quad_index(base, [z, o, o, o]);
        unit(r, a) && unit(r, b) && r.add(a, b) == r.one()
    }),
    pred!("dedekind", ["a", "b"], Any, |env, x| {
        let r = env.ring();
        implies(r.mul(x[0], x[1]) == r.one(), r.mul(x[1], x[0]) == r.one())
    }),
    pred!("x-characterization", ["a"], Any, |env, x| {
        let r = env.ring();
        is_strongly_jsharp_clean_via_x(r, x[0]).is_some() == sj(r, x[0])
    }),
    pred!("reverse", ["a", "b"], Any, |env, x| {
        let r = env.ring();
        implies(sj(r, r.mul(x[0], x[1])), sj(r, r.mul(x[1], x[0])))
    }),
    pred!("reverse-complement", ["a", "b"], Any, |env, x| {
        let r = env.ring();
        let one = r.one();
        implies(sj(r, r.sub(one, r.mul(x[0], x[1]))), sj(r, r.sub(one, r.mul(x[1], x[0]))))
    }),
    pred!("clean-equiv", [], Any, |env, _| {
        let [one, two, three] = clean_equiv_items(env.ring());
        one == two && two == three
    }),
    pred!("strongly-clean-element", ["a"], Any, |env, x| {
        is_element_of_kind(env.ring(), x[0], Kind::StronglyClean)
    }),
    pred!("iff-split", [], Any, |env, _| {
        let r = env.ring();
        ring_sj(r) == (is_ring_of_kind(r, Kind::StronglyClean) && units_one_plus(r, sets::j_sharp(r)))
    }),
    pred!("uu-element", ["x"], Any, |env, x| {
        let r = env.ring();
        unit(r, x[0]) == sets::nilpotents(r).contains(r.sub(x[0], r.one()))
    }),
    pred!("boolean-mod-j", ["a"], Any, |env, x| {
        let r = env.ring();
        jac(r, r.sub(r.mul(x[0], x[0]), x[0]))
    }),
    pred!("j-eq", [], Any, |env, _| {
        let r = env.ring();
        is_ring_of_kind(r, Kind::StronglyJClean) == (ring_sj(r) && sets::j_sharp(r) == sets::jacobson(r))
    }),
    pred!("nil-eq", [], Any, |env, _| {
        let r = env.ring();
        is_ring_of_kind(r, Kind::StronglyNilClean) == (ring_sj(r) && sets::j_sharp(r) == sets::nilpotents(r))
    }),
    pred!("unique-equiv", [], Any, |env, _| {
        let r = env.ring();
        let one = is_abelian(r) && is_ring_of_kind(r, Kind::JsharpClean);
        one == uniquely_jsharp_clean(r) && one == uniquely_clean(r)
    }),
    pred!("local-family", [], Any, |env, _| {
        let r = env.ring();
        if r.is_trivial() {
            return true;
        }
        let field = sets::units(r).len() == r.order() - 1;
        let sjc = ring_sj(r);
        let j_size = sets::jacobson(r).len();
        implies(field, sjc == (r.order() == 2))
            && (is_local(r) && sjc) == (r.order() == 2 * j_size)
            && implies(j_size == 1 && sjc, sets::idempotents(r).len() == r.order())
    }),
    pred!("local-idem", [], Any, |env, _| {
        let r = env.ring();
        if r.is_trivial() || !ring_sj(r) {
            return true;
        }
        let local = is_local(r);
        let covered = sets::j_sharp(r).union(sets::units(r)).len() == r.order();
        local == (sets::idempotents(r).len() == 2) && local == covered
    }),
    pred!("group-lemma", ["x"], GroupRing, |env, x| {
        let r = env.ring();
        let Shape::GroupRing { base, .. } = r.shape() else { unreachable!() };
        let y = x[0];
        let eps = augmentation(r, y).expect("group ring");
        implies(eps == base.zero(), jac(r, y)) && jac(r, r.sub(r.mul(y, y), y)) && jac(r, y) == jac(base, eps)
    }),
    pred!("group-necessity", [], GroupRing, |env, _| {
        let r = env.ring();
        let Shape::GroupRing { base, group } = r.shape() else { unreachable!() };
        implies(ring_sj(r), ring_sj(base) && group.is_2_group())
    }),
    pred!("group-abelian", [], GroupRing, |env, _| {
        let r = env.ring();
        let Shape::GroupRing { base, group } = r.shape() else { unreachable!() };
        implies(is_abelian(base), ring_sj(r) == (ring_sj(base) && group.is_2_group()))
    }),
    pred!("odd-group", [], GroupRing, |env, _| {
        let r = env.ring();
        let Shape::GroupRing { base, group } = r.shape() else { unreachable!() };
        implies(group.order() % 2 == 1 && group.order() > 1 && !base.is_trivial(), !ring_sj(r))
    }),
    pred!("ks-radical", ["x"], GenMatrix, |env, x| {
        let r = env.ring();
        let base = ks_base(r);
        let s = ks_multiplier(r);
        let [a, b, c, d] = quad_entries(r, x[0]).expect("generalized matrix ring");
        let colon = |t: usize| jac(base, base.mul(t, s));
        let in_j = jac(r, x[0]);
        let block = jac(base, a) && jac(base, d) && colon(b) && colon(c);
        let local_part = if is_local(base) && jac(base, s) {
            in_j == (jac(base, a) && jac(base, d)) && unit(r, x[0]) == (unit(base, a) && unit(base, d))
        } else {
            true
        };
        in_j == block && local_part
    }),
    pred!("conjugation", ["p", "a"], Any, |env, x| {
        let r = env.ring();
        match r.inverse(x[0]) {
            Some(inv) => implies(sj(r, x[1]), sj(r, r.mul3(x[0], x[1], inv))),
            None => true,
        }
    }),
    pred!("ks-idempotent", ["e"], GenMatrix, |env, x| {
        let r = env.ring();
        let base = ks_base(r);
        let e = x[0];
        let nontrivial = r.mul(e, e) == e && e != r.zero() && e != r.one();
        if !nontrivial || !is_local(base) {
            return true;
        }
        let [o10, o01] = env.idempotent_orbits();
        let s = ks_multiplier(r);
        if unit(base, s) {
            o10.contains(e)
        } else {
            o10.contains(e) || o01.contains(e)
        }
    }),
    pred!("ks-diagonal", ["x"], GenMatrix, |env, x| {
        let r = env.ring();
        let base = ks_base(r);
        let [a, b, c, d] = quad_entries(r, x[0]).expect("generalized matrix ring");
        let diagonal = b == base.zero() && c == base.zero();
        implies(is_local(base) && diagonal && js(r, x[0]), jac(base, a) && jac(base, d))
    }),
    pred!("locstr", ["x"], GenMatrix, |env, x| {
        let r = env.ring();
        if !is_local(ks_base(r)) {
            return true;
        }
        let y = x[0];
        let cases = js(r, y) || js(r, r.sub(y, r.one())) || env.split_diagonal_orbits().contains(y);
        sj(r, y) == cases
    }),
    pred!("deltanu", [], Any, |env, _| {
        let r = env.ring();
        implies(
            is_ring_of_kind(r, Kind::StronglyDeltanClean),
            units_one_plus(r, sets::delta_nilpotents(r)) && is_ring_of_kind(r, Kind::StronglyClean),
        )
    }),
    pred!("main-equiv", [], Any, |env, _| {
        let r = env.ring();
        let j = is_ring_of_kind(r, Kind::StronglyJClean);
        j == is_ring_of_kind(r, Kind::StronglyQnClean) && j == is_ring_of_kind(r, Kind::StronglyDeltanClean)
    }),
    pred!("cor8", [], Any, |env, _| {
        let r = env.ring();
        uniquely_clean(r) == (is_abelian(r) && is_ring_of_kind(r, Kind::DeltanClean))
    }),
    pred!("six-equiv", [], Any, |env, _| {
        let items = six_equiv_items(env.ring());
        items.iter().all(|&b| b == items[0])
    }),
    pred!("uniquely-clean", [], Any, |env, _| uniquely_clean(env.ring())),
    pred!("theorem-j", [], Any, |env, _| {
        let r = env.ring();
        is_ring_of_kind(r, Kind::StronglyJClean) == ring_sj(r)
    }),
    pred!("j-oracle", ["a"], Any, |env, x| jac(env.ring(), x[0]) == env.oracle().contains(x[0])),
    pred!("j-ideal", [], Any, |env, _| sets::jacobson_radical(env.ring()).is_ok()),
    pred!("chain", ["a"], Any, |env, x| {
        let r = env.ring();
        let a = x[0];
        let (nil, qn, dn) = (
            sets::nilpotents(r).contains(a),
            sets::quasi_nilpotents(r).contains(a),
            sets::delta_nilpotents(r).contains(a),
        );
        implies(jac(r, a), qn && js(r, a))
            && implies(nil, qn && js(r, a))
            && implies(qn, dn)
            && implies(!r.is_trivial(), !(unit(r, a) && js(r, a)))
    }),
    pred!("complement", ["a"], Any, |env, x| {
        let r = env.ring();
        let a = x[0];
        let b = r.sub(r.one(), a);
        let mut mapped: Vec<(usize, usize)> = decompositions(r, a, Kind::StronglyJsharpClean)
            .iter()
            .map(|d| (r.sub(r.one(), d.idempotent), r.neg(d.complement)))
            .collect();
        mapped.sort_unstable();
        let target: Vec<(usize, usize)> = decompositions(r, b, Kind::StronglyJsharpClean)
            .iter()
            .map(|d| (d.idempotent, d.complement))
            .collect();
        mapped == target
    }),
    pred!("monotone", ["a"], Any, |env, x| {
        let r = env.ring();
        let pairs = |k: Kind| {
            decompositions(r, x[0], k).into_iter().map(|d| d.idempotent).collect::<Vec<_>>()
        };
        let subset = |small: Kind, big: Kind| {
            let big = pairs(big);
            pairs(small).iter().all(|e| big.contains(e))
        };
        subset(Kind::JClean, Kind::JsharpClean)
            && subset(Kind::StronglyJClean, Kind::StronglyJsharpClean)
            && subset(Kind::QnClean, Kind::DeltanClean)
            && subset(Kind::StronglyQnClean, Kind::StronglyDeltanClean)
    }),
];

pub fn predicate(name: &str) -> Option<&'static Predicate> {
    PREDICATES.iter().find(|p| p.name == name)
}
