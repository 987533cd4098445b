use std::sync::Arc;

use super::predicates::{
    clean_equiv_items, corner_element_agrees, corner_jsharp_sets, is_abelian, is_local, predicate, six_equiv_items, uniquely_clean,
    Env, ShapeReq,
};
use super::{Outcome, Subject, Witness};
use crate::classify::{decompositions, is_ring_of_kind, units_are_one_plus, Kind};
use crate::constructions::{
    corner_ring, direct_product, ideals_generated_within, matrix_ring, quotient_ring, ring_zn, IdealSet,
};
use crate::elemset::ElemSet;
use crate::error::Error;
use crate::ring::{check_size, FiniteRing, Shape};
use crate::sets;

/// Rings above this order skip ideal enumeration.
pub const IDEAL_ORDER_LIMIT: usize = 256;

pub struct CheckDef {
    pub id: &'static str,
    pub statement: &'static str,
    pub scope: ShapeReq,
    pub(crate) run: fn(&Subject) -> Outcome,
}

impl CheckDef {
    pub(crate) fn scope_text(&self) -> &'static str {
        match self.scope {
            ShapeReq::GroupRing => "needs a group ring GR(R,G)",
            ShapeReq::GenMatrix => "needs a generalized matrix ring K(R,s)",
            ShapeReq::Product => "needs a direct product",
            ShapeReq::Matrix2 => "needs a 2x2 matrix ring",
            ShapeReq::Any => "applies to every ring",
        }
    }
}

fn fail(env: &Arc<Env>, ring: &str, name: &'static str, elements: &[usize], reason: String) -> Outcome {
    let p = predicate(name).expect("registered predicate");
    Outcome::Fail {
        reason,
        witness: Witness {
            predicate: name.to_string(),
            ring: ring.to_string(),
            roles: p.roles.iter().map(|r| r.to_string()).collect(),
            elements: elements.to_vec(),
            env: Some(env.clone()),
        },
    }
}

/// First tuple at which the predicate fails, as a failure outcome.
fn scan<T: AsRef<[usize]>>(
    env: &Arc<Env>,
    ring: &str,
    name: &'static str,
    tuples: impl IntoIterator<Item = T>,
) -> Option<Outcome> {
    let p = predicate(name).expect("registered predicate");
    for t in tuples {
        let t = t.as_ref();
        if !(p.eval)(env, t) {
            let at: Vec<String> = p.roles.iter().zip(t).map(|(r, x)| format!("{r}={x}")).collect();
            let reason = if at.is_empty() {
                format!("{name} fails in {ring}")
            } else {
                format!("{name} fails in {ring} at {}", at.join(", "))
            };
            return Some(fail(env, ring, name, t, reason));
        }
    }
    None
}

fn holds(env: &Arc<Env>, ring: &str, name: &'static str) -> Option<Outcome> {
    scan(env, ring, name, std::iter::once([0usize; 0]))
}

fn singles(n: usize) -> impl Iterator<Item = [usize; 1]> {
    (0..n).map(|a| [a])
}

fn pairs(n: usize) -> impl Iterator<Item = [usize; 2]> {
    (0..n).flat_map(move |a| (0..n).map(move |b| [a, b]))
}

fn product_of<'a>(left: &'a ElemSet, right: &'a ElemSet) -> impl Iterator<Item = [usize; 2]> + 'a {
    left.iter().flat_map(move |a| right.iter().map(move |b| [a, b]))
}

fn members(set: &ElemSet) -> impl Iterator<Item = [usize; 1]> + '_ {
    set.iter().map(|a| [a])
}

fn pass() -> Outcome {
    Outcome::Pass(None)
}

fn done(first: Option<Outcome>) -> Outcome {
    first.unwrap_or_else(pass)
}

fn sjc(r: &FiniteRing) -> bool {
    is_ring_of_kind(r, Kind::StronglyJsharpClean)
}

fn derived_env(ring: FiniteRing) -> (Arc<Env>, String) {
    let label = ring.label().to_string();
    (Arc::new(Env::new(ring)), label)
}

fn skip_size(what: &str, e: Error) -> Outcome {
    Outcome::Skip(format!("{what} not built: {e}"))
}

/// `R × P` for the fixed partner lists; partners over the order cap are left out.
fn partner_products(r: &FiniteRing) -> (Vec<(Arc<Env>, String)>, Vec<String>) {
    let mut built = Vec::new();
    let mut skipped = Vec::new();
    for partner in [&[2][..], &[3], &[4], &[2, 3]] {
        let mut factors = vec![r.clone()];
        factors.extend(partner.iter().map(|&n| ring_zn(n).expect("small Zn")));
        match direct_product(&factors) {
            Ok(p) => built.push(derived_env(p)),
            Err(e) => skipped.push(format!("product with {partner:?}: {e}")),
        }
    }
    (built, skipped)
}

fn partner_note(skipped: &[String]) -> Option<String> {
    (!skipped.is_empty()).then(|| format!("skipped {}", skipped.join("; ")))
}

fn closeprod_1(s: &Subject) -> Outcome {
    let r = s.ring();
    done(scan(s.env(), &s.expr, "jsharp-plus-j", product_of(sets::j_sharp(r), sets::jacobson(r))))
}

fn closeprod_2(s: &Subject) -> Outcome {
    done(scan(s.env(), &s.expr, "jsharp-neg", singles(s.ring().order())))
}

fn closeprod_3(s: &Subject) -> Outcome {
    let (built, skipped) = partner_products(s.ring());
    if built.is_empty() {
        return Outcome::Skip(format!("no product within the order cap; {}", skipped.join("; ")));
    }
    for (env, label) in &built {
        if let Some(f) = scan(env, label, "jsharp-product", singles(env.ring().order())) {
            return f;
        }
    }
    Outcome::Pass(partner_note(&skipped))
}

fn closeprod_4(s: &Subject) -> Outcome {
    let r = s.ring();
    done(scan(s.env(), &s.expr, "jsharp-conjugation", product_of(sets::units(r), sets::j_sharp(r))))
}

fn product(s: &Subject) -> Outcome {
    let (built, skipped) = partner_products(s.ring());
    if built.is_empty() {
        return Outcome::Skip(format!("no product within the order cap; {}", skipped.join("; ")));
    }
    for (env, label) in &built {
        if let Some(f) = holds(env, label, "product-iff") {
            return f;
        }
    }
    Outcome::Pass(partner_note(&skipped))
}

fn quotient(s: &Subject) -> Outcome {
    let r = s.ring();
    if !sjc(r) {
        return Outcome::Skip("not strongly J#-clean".into());
    }
    if r.order() > IDEAL_ORDER_LIMIT {
        return Outcome::Skip(format!("ideal enumeration limited to order {IDEAL_ORDER_LIMIT}"));
    }
    let ideals = match ideals_generated_within(r, sets::jacobson(r)) {
        Ok(i) => i,
        Err(e) => return skip_size("ideal lattice", e),
    };
    for ideal in &ideals {
        let q = match quotient_ring(ideal) {
            Ok(q) => q,
            Err(e) => return skip_size("quotient", e),
        };
        let (env, label) = derived_env(q);
        if let Some(f) = scan(&env, &label, "strongly-jsharp-element", singles(env.ring().order())) {
            return f;
        }
    }
    Outcome::Pass(Some(format!("{} ideals inside J(R)", ideals.len())))
}

fn unit_decomp(s: &Subject) -> Outcome {
    done(scan(s.env(), &s.expr, "unit-decomposition", members(sets::units(s.ring()))))
}

fn u_eq(s: &Subject) -> Outcome {
    if !sjc(s.ring()) {
        return Outcome::Skip("not strongly J#-clean".into());
    }
    done(scan(s.env(), &s.expr, "units-one-plus-jsharp", singles(s.ring().order())))
}

fn two_in_j(s: &Subject) -> Outcome {
    let r = s.ring();
    let two = r.from_int(2);
    let in_j = sets::jacobson(r).contains(two);
    if !sjc(r) {
        let note = if in_j {
            "2 ∈ J(R) although R is not strongly J#-clean".to_string()
        } else {
            "contrapositive: 2 ∉ J(R), consistent with R not being strongly J#-clean".to_string()
        };
        return Outcome::Skip(format!("not strongly J#-clean; {note}"));
    }
    done(scan(s.env(), &s.expr, "two-in-jacobson", singles(r.order())))
}

fn corner_jsharp(s: &Subject) -> Outcome {
    let r = s.ring();
    for e in sets::idempotents(r).iter() {
        let sets3 = match corner_jsharp_sets(r, e) {
            Ok((_, sets3)) => sets3,
            Err(e) => return skip_size("corner ring", e),
        };
        let [inter, sandwich, inner] = &sets3;
        let bad = (0..r.order())
            .find(|&x| inter.contains(x) != sandwich.contains(x) || sandwich.contains(x) != inner.contains(x));
        if let Some(x) = bad {
            let mark = |b: bool| if b { "∈" } else { "∉" };
            let reason = format!(
                "e={e}, x={x}: x {} eRe∩J#(R), x {} eJ#(R)e, x {} J#(eRe)",
                mark(inter.contains(x)),
                mark(sandwich.contains(x)),
                mark(inner.contains(x))
            );
            return fail(s.env(), &s.expr, "corner-jsharp", &[e, x], reason);
        }
    }
    pass()
}

fn annihilator(s: &Subject) -> Outcome {
    let r = s.ring();
    let n = r.order();
    for a in 0..n {
        for d in decompositions(r, a, Kind::StronglyJsharpClean) {
            let e = d.idempotent;
            if let Some(f) = scan(s.env(), &s.expr, "annihilator", (0..n).map(|x| [a, e, x])) {
                return f;
            }
        }
    }
    pass()
}

fn corner_element(s: &Subject) -> Outcome {
    let r = s.ring();
    for e in sets::idempotents(r).iter() {
        let corner = match corner_ring(r, e) {
            Ok(c) => c,
            Err(err) => return skip_size("corner ring", err),
        };
        let embedding = crate::constructions::corner_embedding(&corner).expect("corner ring").to_vec();
        if let Some(&a) = embedding.iter().find(|&&a| !corner_element_agrees(r, &corner, a)) {
            let reason = format!("a={a} in eRe (e={e}): strong J#-cleanness differs between R and eRe");
            return fail(s.env(), &s.expr, "corner-element", &[e, a], reason);
        }
    }
    pass()
}

fn matrix_negative(s: &Subject) -> Outcome {
    let r = s.ring();
    if r.is_trivial() {
        return Outcome::Skip("trivial base ring: M2(R) is trivial".into());
    }
    if let Err(e) = check_size((r.order() as u128).saturating_pow(4)) {
        return skip_size("M2(R)", e);
    }
    let m = match matrix_ring(r, 2) {
        Ok(m) => m,
        Err(e) => return skip_size("M2(R)", e),
    };
    let (env, label) = derived_env(m);
    done(holds(&env, &label, "two-unit-identity").or_else(|| holds(&env, &label, "not-strongly-jsharp-clean")))
}

fn dedekind(s: &Subject) -> Outcome {
    match scan(s.env(), &s.expr, "dedekind", pairs(s.ring().order())) {
        Some(f) => f,
        None => Outcome::Pass(Some("every finite ring is Dedekind-finite; ab = 1 ⟹ ba = 1 confirmed".into())),
    }
}

fn x_characterization(s: &Subject) -> Outcome {
    done(scan(s.env(), &s.expr, "x-characterization", singles(s.ring().order())))
}

fn reverse(s: &Subject) -> Outcome {
    let n = s.ring().order();
    done(
        scan(s.env(), &s.expr, "reverse", pairs(n))
            .or_else(|| scan(s.env(), &s.expr, "reverse-complement", pairs(n))),
    )
}

fn clean_equiv(s: &Subject) -> Outcome {
    match holds(s.env(), &s.expr, "clean-equiv") {
        Some(Outcome::Fail { witness, .. }) => {
            let r = s.ring();
            let [one, two, three] = clean_equiv_items(r);
            let reason = format!(
                "clean ∧ U = 1+J#: {one}, J#-clean ∧ U = 1+J#: {two}, J#-clean: {three} (|U| = {}, |J#| = {})",
                sets::units(r).len(),
                sets::j_sharp(r).len()
            );
            Outcome::Fail { reason, witness }
        }
        other => done(other),
    }
}

fn strongly_clean(s: &Subject) -> Outcome {
    if !sjc(s.ring()) {
        return Outcome::Skip("not strongly J#-clean".into());
    }
    done(scan(s.env(), &s.expr, "strongly-clean-element", singles(s.ring().order())))
}

fn iff_split(s: &Subject) -> Outcome {
    done(holds(s.env(), &s.expr, "iff-split"))
}

fn uu_quotient(s: &Subject) -> Outcome {
    let r = s.ring();
    if units_are_one_plus(r, sets::j_sharp(r)).is_err() {
        return Outcome::Skip("U(R) ≠ 1 + J#(R)".into());
    }
    let q = match IdealSet::new(r, sets::jacobson(r).clone()).and_then(|i| quotient_ring(&i)) {
        Ok(q) => q,
        Err(e) => return skip_size("R/J(R)", e),
    };
    let (env, label) = derived_env(q);
    done(scan(&env, &label, "uu-element", singles(env.ring().order())))
}

fn boolean_quotient(s: &Subject) -> Outcome {
    if !sjc(s.ring()) {
        return Outcome::Skip("not strongly J#-clean".into());
    }
    done(scan(s.env(), &s.expr, "boolean-mod-j", singles(s.ring().order())))
}

fn ring_level(name: &'static str) -> impl Fn(&Subject) -> Outcome {
    move |s| done(holds(s.env(), &s.expr, name))
}

fn j_eq(s: &Subject) -> Outcome {
    ring_level("j-eq")(s)
}

fn nil_eq(s: &Subject) -> Outcome {
    ring_level("nil-eq")(s)
}

fn unique(s: &Subject) -> Outcome {
    ring_level("unique-equiv")(s)
}

fn local_family(s: &Subject) -> Outcome {
    if s.ring().is_trivial() {
        return Outcome::Skip("trivial ring".into());
    }
    ring_level("local-family")(s)
}

fn local_idem(s: &Subject) -> Outcome {
    let r = s.ring();
    if r.is_trivial() {
        return Outcome::Skip("trivial ring".into());
    }
    if !sjc(r) {
        return Outcome::Skip("not strongly J#-clean".into());
    }
    ring_level("local-idem")(s)
}

fn group_parts(r: &FiniteRing) -> (&FiniteRing, &crate::constructions::GroupTable) {
    match r.shape() {
        Shape::GroupRing { base, group } => (base, group),
        _ => unreachable!("scope admits group rings only"),
    }
}

fn grouplemma(s: &Subject) -> Outcome {
    let (base, group) = group_parts(s.ring());
    if !sjc(base) {
        return Outcome::Skip("base ring not strongly J#-clean".into());
    }
    if !group.is_2_group() {
        return Outcome::Skip("group is not a 2-group".into());
    }
    done(scan(s.env(), &s.expr, "group-lemma", singles(s.ring().order())))
}

fn groupring_necessity(s: &Subject) -> Outcome {
    if !sjc(s.ring()) {
        return Outcome::Skip("group ring not strongly J#-clean".into());
    }
    ring_level("group-necessity")(s)
}

fn groupring_abelian(s: &Subject) -> Outcome {
    let (base, _) = group_parts(s.ring());
    if !is_abelian(base) {
        return Outcome::Skip("base ring not abelian".into());
    }
    ring_level("group-abelian")(s)
}

fn odd_group(s: &Subject) -> Outcome {
    let (base, group) = group_parts(s.ring());
    if group.order() % 2 == 0 || group.order() == 1 {
        return Outcome::Skip("group order is not odd and greater than 1".into());
    }
    if base.is_trivial() {
        return Outcome::Skip("trivial base ring".into());
    }
    ring_level("odd-group")(s)
}

fn ks_base(r: &FiniteRing) -> &FiniteRing {
    match r.shape() {
        Shape::GenMatrix { base, .. } => base,
        _ => unreachable!("scope admits generalized matrix rings only"),
    }
}

fn ks_radical(s: &Subject) -> Outcome {
    done(scan(s.env(), &s.expr, "ks-radical", singles(s.ring().order())))
}

fn ks_conjugation(s: &Subject) -> Outcome {
    let r = s.ring();
    let all = ElemSet::full(r.order());
    done(scan(s.env(), &s.expr, "conjugation", product_of(sets::units(r), &all)))
}

fn local_base_only(s: &Subject) -> Option<Outcome> {
    (!is_local(ks_base(s.ring()))).then(|| Outcome::Skip("base ring is not local".into()))
}

fn ks_idempotents(s: &Subject) -> Outcome {
    if let Some(skip) = local_base_only(s) {
        return skip;
    }
    done(scan(s.env(), &s.expr, "ks-idempotent", members(sets::idempotents(s.ring()))))
}

fn ks_diagonal(s: &Subject) -> Outcome {
    if let Some(skip) = local_base_only(s) {
        return skip;
    }
    done(scan(s.env(), &s.expr, "ks-diagonal", singles(s.ring().order())))
}

fn locstr(s: &Subject) -> Outcome {
    if let Some(skip) = local_base_only(s) {
        return skip;
    }
    done(scan(s.env(), &s.expr, "locstr", singles(s.ring().order())))
}

fn deltanu(s: &Subject) -> Outcome {
    if !is_ring_of_kind(s.ring(), Kind::StronglyDeltanClean) {
        return Outcome::Skip("not strongly ΔN-clean".into());
    }
    ring_level("deltanu")(s)
}

fn main_equiv(s: &Subject) -> Outcome {
    ring_level("main-equiv")(s)
}

fn cor8(s: &Subject) -> Outcome {
    ring_level("cor8")(s)
}

fn six_equiv(s: &Subject) -> Outcome {
    if let Some(f) = holds(s.env(), &s.expr, "six-equiv") {
        return f;
    }
    let r = s.ring();
    if r.order() > IDEAL_ORDER_LIMIT {
        return Outcome::Pass(Some(format!("item (6) not evaluated above order {IDEAL_ORDER_LIMIT}")));
    }
    if !six_equiv_items(r)[0] {
        // R itself is a quotient, so item (6) fails with item (5)
        return pass();
    }
    let ideals = match ideals_generated_within(r, &ElemSet::full(r.order())) {
        Ok(i) => i,
        Err(e) => return skip_size("ideal lattice", e),
    };
    for ideal in &ideals {
        let q = match quotient_ring(ideal) {
            Ok(q) => q,
            Err(e) => return skip_size("quotient", e),
        };
        if !uniquely_clean(&q) {
            let (env, label) = derived_env(q);
            return done(holds(&env, &label, "uniquely-clean"));
        }
    }
    Outcome::Pass(Some(format!("item (6) over {} ideals", ideals.len())))
}

fn theorem_j(s: &Subject) -> Outcome {
    ring_level("theorem-j")(s)
}

fn j_oracle(s: &Subject) -> Outcome {
    done(
        holds(s.env(), &s.expr, "j-ideal")
            .or_else(|| scan(s.env(), &s.expr, "j-oracle", singles(s.ring().order()))),
    )
}

fn chain(s: &Subject) -> Outcome {
    done(scan(s.env(), &s.expr, "chain", singles(s.ring().order())))
}

fn complement(s: &Subject) -> Outcome {
    done(scan(s.env(), &s.expr, "complement", singles(s.ring().order())))
}

fn monotone(s: &Subject) -> Outcome {
    done(scan(s.env(), &s.expr, "monotone", singles(s.ring().order())))
}

macro_rules! check {
    ($id:expr, $scope:ident, $run:expr, $statement:expr) => {
        CheckDef { id: $id, statement: $statement, scope: ShapeReq::$scope, run: $run }
    };
}

pub static CHECKS: &[CheckDef] = &[
    check!("CHK-closeprod-1", Any, closeprod_1, "a ∈ J#(R), b ∈ J(R) ⟹ a + b ∈ J#(R)"),
    check!("CHK-closeprod-2", Any, closeprod_2, "a ∈ J#(R) ⟺ −a ∈ J#(R)"),
    check!("CHK-closeprod-3", Any, closeprod_3, "J#(R × S) = J#(R) × J#(S)"),
    check!("CHK-closeprod-4", Any, closeprod_4, "u ∈ U(R), a ∈ J#(R) ⟹ u a u⁻¹ ∈ J#(R)"),
    check!("CHK-product", Any, product, "R × S strongly J#-clean ⟺ R and S are"),
    check!("CHK-quotient", Any, quotient, "R strongly J#-clean, I ⊆ J(R) ⟹ R/I strongly J#-clean"),
    check!("CHK-unit-decomp", Any, unit_decomp, "unit u strongly J#-clean ⟺ 1 − u ∈ J#(R), with e = 1"),
    check!("CHK-U-eq-1-plus-Jsharp", Any, u_eq, "R strongly J#-clean ⟹ U(R) = 1 + J#(R)"),
    check!("CHK-two-in-J", Any, two_in_j, "R strongly J#-clean ⟹ 2 ∈ J(R)"),
    check!("CHK-corner-Jsharp", Any, corner_jsharp, "J#(eRe) = eRe ∩ J#(R) = eJ#(R)e"),
    check!("CHK-annihilator", Any, annihilator, "a = e + j strongly J#-clean ⟹ ℓ(a) ⊆ R(1−e), r(a) ⊆ (1−e)R"),
    check!("CHK-corner-element", Any, corner_element, "a ∈ eRe strongly J#-clean in R ⟺ in eRe"),
    check!("CHK-matrix-negative", Any, matrix_negative, "M2(R) is not strongly J#-clean"),
    check!("CHK-dedekind", Any, dedekind, "ab = 1 ⟹ ba = 1"),
    check!("CHK-x-characterization", Any, x_characterization, "∃x: x²a = x, ax = xa, a − ax ∈ J#(R) ⟺ a strongly J#-clean"),
    check!("CHK-reverse", Any, reverse, "ab strongly J#-clean ⟹ ba is; same for 1 − ab, 1 − ba"),
    check!("CHK-clean-equiv", Any, clean_equiv, "clean ∧ U = 1+J# ⟺ J#-clean ∧ U = 1+J# ⟺ J#-clean"),
    check!("CHK-strongly-clean", Any, strongly_clean, "R strongly J#-clean ⟹ R strongly clean"),
    check!("CHK-iff-split", Any, iff_split, "R strongly J#-clean ⟺ strongly clean ∧ U = 1+J#"),
    check!("CHK-UU-quotient", Any, uu_quotient, "U = 1+J# ⟹ R/J(R) is UU"),
    check!("CHK-boolean-quotient", Any, boolean_quotient, "R strongly J#-clean ⟹ R/J(R) Boolean"),
    check!("CHK-J-eq", Any, j_eq, "strongly J-clean ⟺ strongly J#-clean ∧ J# = J"),
    check!("CHK-nil-eq", Any, nil_eq, "strongly nil-clean ⟺ strongly J#-clean ∧ J# = Nil"),
    check!("CHK-unique", Any, unique, "abelian ∧ J#-clean ⟺ uniquely J#-clean ⟺ uniquely clean"),
    check!("CHK-local-family", Any, local_family, "field: sJ# ⟺ Z2; local ∧ sJ# ⟺ |R/J| = 2; J = 0 ∧ sJ# ⟹ Boolean"),
    check!("CHK-local-idem", Any, local_idem, "sJ#: local ⟺ trivial idempotents ⟺ R = J# ∪ U"),
    check!("CHK-grouplemma", GroupRing, grouplemma, "R sJ#, G 2-group: Δ ⊆ J(RG), RG/J Boolean, J(RG) = ε⁻¹(J(R))"),
    check!("CHK-groupring-necessity", GroupRing, groupring_necessity, "RG sJ# ⟹ R sJ# ∧ G 2-group"),
    check!("CHK-groupring-abelian", GroupRing, groupring_abelian, "R abelian: RG sJ# ⟺ R sJ# ∧ G 2-group"),
    check!("CHK-odd-group", GroupRing, odd_group, "G odd order > 1 ⟹ RG not sJ#"),
    check!("CHK-Ks-radical", GenMatrix, ks_radical, "J(K_s(R)) = (J, (s:J); (s:J), J)"),
    check!("CHK-Ks-conjugation", Any, ks_conjugation, "a sJ# ⟹ p a p⁻¹ sJ# for every unit p"),
    check!("CHK-Ks-idempotents", GenMatrix, ks_idempotents, "nontrivial idempotents of K_s(R) are similar to diag(1,0) or diag(0,1)"),
    check!("CHK-Ks-diagonal", GenMatrix, ks_diagonal, "diag(a,b) ∈ J#(K_s(R)) ⟹ a, b ∈ J(R)"),
    check!("CHK-locstr", GenMatrix, locstr, "A sJ# ⟺ A ∈ J# ∪ (1 + J#) or A ~ diag(a,b) split across J and 1 + J"),
    check!("CHK-deltanu", Any, deltanu, "strongly ΔN-clean ⟹ U = 1 + ΔN and strongly clean"),
    check!("CHK-main-equiv", Any, main_equiv, "strongly J-clean ⟺ strongly QN-clean ⟺ strongly ΔN-clean"),
    check!("CHK-cor8", Any, cor8, "uniquely clean ⟺ abelian ∧ ΔN-clean"),
    check!("CHK-six-equiv", Any, six_equiv, "uniquely clean characterizations (1)-(6)"),
    check!("CHK-theorem-j", Any, theorem_j, "strongly J-clean ⟺ strongly J#-clean"),
    check!("CHK-J-oracle", Any, j_oracle, "J(R) is an ideal and agrees with the two-sided characterization"),
    check!("CHK-chain", Any, chain, "J, Nil ⊆ QN ⊆ ΔN; J, Nil ⊆ J#; U ∩ J# = ∅"),
    check!("CHK-complement", Any, complement, "a = e + j ⟺ 1 − a = (1 − e) + (−j)"),
    check!("CHK-monotone", Any, monotone, "J-clean decompositions ⊆ J#-clean; QN-clean ⊆ ΔN-clean"),
];
