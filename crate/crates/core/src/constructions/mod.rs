//! Builders for the ring constructions: `Z_n`, direct products, full and
//! upper-triangular matrix rings, generalized matrix rings `K_s(R)`, ideals
//! and quotients, corner rings, and group rings with their augmentation.
//!
//! Every builder tabulates its arithmetic and then runs the full axiom
//! validation of [`FiniteRing`]. Element orderings are fixed (see [`Shape`])
//! so indices are stable across runs.

mod ast;
mod group;

use std::collections::BTreeSet;

pub use ast::{eval_ast, ConstructionAst, GroupSpec};
pub use group::{builtin_group, group_from_cayley, load_cayley, parse_cayley, GroupTable, BUILTIN_GROUPS};

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ring::{check_size, FiniteRing, Shape};

/// Base-`base` digits of `index`, most significant first.
pub fn radix_digits(mut index: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = index % base;
        index /= base;
    }
    out
}

pub fn radix_index(digits: &[usize], base: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * base + d)
}

fn pow_size(base: usize, exp: usize) -> Result<usize> {
    let requested = (base as u128).checked_pow(exp as u32).unwrap_or(u128::MAX);
    check_size(requested)
}

/// Digit vectors of every element, flattened: entry `i * len + k`.
fn digit_table(order: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(order * len);
    for i in 0..order {
        out.extend(radix_digits(i, base, len));
    }
    out
}

pub fn ring_zn(n: usize) -> Result<FiniteRing> {
    let n = check_size(n as u128)?;
    FiniteRing::tabulate(
        n,
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
        0,
        1 % n,
        format!("Z{n}"),
        Shape::Zn { modulus: n },
    )
}

pub fn direct_product(factors: &[FiniteRing]) -> Result<FiniteRing> {
    if factors.is_empty() {
        return Err(Error::MalformedTable("direct product of no factors".into()));
    }
    let requested = factors.iter().fold(1u128, |acc, f| acc.saturating_mul(f.order() as u128));
    let order = check_size(requested)?;
    let radices: Vec<usize> = factors.iter().map(FiniteRing::order).collect();
    let decode = |mut i: usize| -> Vec<usize> {
        let mut out = vec![0; radices.len()];
        for (slot, &r) in out.iter_mut().zip(&radices).rev() {
            *slot = i % r;
            i /= r;
        }
        out
    };
    let digits: Vec<Vec<usize>> = (0..order).map(decode).collect();
    let encode = |parts: &mut dyn Iterator<Item = usize>| -> usize {
        parts.zip(&radices).fold(0, |acc, (d, &r)| acc * r + d)
    };
    let zero = encode(&mut factors.iter().map(FiniteRing::zero));
    let one = encode(&mut factors.iter().map(FiniteRing::one));
    let label = format!("prod({})", factors.iter().map(FiniteRing::label).collect::<Vec<_>>().join(","));
    FiniteRing::tabulate(
        order,
        |a, b| encode(&mut factors.iter().enumerate().map(|(k, f)| f.add(digits[a][k], digits[b][k]))),
        |a, b| encode(&mut factors.iter().enumerate().map(|(k, f)| f.mul(digits[a][k], digits[b][k]))),
        zero,
        one,
        label,
        Shape::Product { factors: factors.to_vec() },
    )
}

/// Componentwise coordinates of a product-ring element.
pub fn product_coordinates(ring: &FiniteRing, index: usize) -> Option<Vec<usize>> {
    let Shape::Product { factors } = ring.shape() else { return None };
    let mut out = vec![0; factors.len()];
    let mut i = index;
    for (slot, f) in out.iter_mut().zip(factors).rev() {
        *slot = i % f.order();
        i /= f.order();
    }
    Some(out)
}

pub fn product_index(factors: &[FiniteRing], coords: &[usize]) -> usize {
    coords.iter().zip(factors).fold(0, |acc, (&c, f)| acc * f.order() + c)
}

pub fn matrix_ring(base: &FiniteRing, k: usize) -> Result<FiniteRing> {
    if k == 0 {
        return Err(Error::MalformedTable("matrix size must be positive".into()));
    }
    let q = base.order();
    let cells = k * k;
    let order = pow_size(q, cells)?;
    let digits = digit_table(order, q, cells);
    let entry = |m: usize, i: usize, j: usize| digits[m * cells + i * k + j];
    let mut identity = vec![base.zero(); cells];
    for i in 0..k {
        identity[i * k + i] = base.one();
    }
    FiniteRing::tabulate(
        order,
        |a, b| (0..cells).fold(0, |acc, c| acc * q + base.add(digits[a * cells + c], digits[b * cells + c])),
        |a, b| {
            let mut acc = 0;
            for i in 0..k {
                for j in 0..k {
                    let mut s = base.zero();
                    for l in 0..k {
                        s = base.add(s, base.mul(entry(a, i, l), entry(b, l, j)));
                    }
                    acc = acc * q + s;
                }
            }
            acc
        },
        0,
        radix_index(&identity, q),
        format!("M{k}({})", base.label()),
        Shape::Matrix { base: base.clone(), size: k },
    )
}

/// Positions `(i, j)` with `i <= j` in row-major order.
pub fn triangular_positions(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect()
}

pub fn upper_triangular_ring(base: &FiniteRing, k: usize) -> Result<FiniteRing> {
    if k == 0 {
        return Err(Error::MalformedTable("matrix size must be positive".into()));
    }
    let q = base.order();
    let positions = triangular_positions(k);
    let cells = positions.len();
    let order = pow_size(q, cells)?;
    let digits = digit_table(order, q, cells);
    let slot = |i: usize, j: usize| positions.iter().position(|&p| p == (i, j));
    let slots: Vec<Vec<Option<usize>>> = (0..k).map(|i| (0..k).map(|j| slot(i, j)).collect()).collect();
    let entry = |m: usize, i: usize, j: usize| slots[i][j].map_or(base.zero(), |s| digits[m * cells + s]);
    let identity: Vec<usize> = positions.iter().map(|&(i, j)| if i == j { base.one() } else { base.zero() }).collect();
    FiniteRing::tabulate(
        order,
        |a, b| (0..cells).fold(0, |acc, c| acc * q + base.add(digits[a * cells + c], digits[b * cells + c])),
        |a, b| {
            positions.iter().fold(0, |acc, &(i, j)| {
                let mut s = base.zero();
                for l in i..=j {
                    s = base.add(s, base.mul(entry(a, i, l), entry(b, l, j)));
                }
                acc * q + s
            })
        },
        0,
        radix_index(&identity, q),
        format!("T{k}({})", base.label()),
        Shape::Triangular { base: base.clone(), size: k },
    )
}

/// `K_s(R)`: 2×2 arrays over `R` with the multiplier `s` twisting the
/// products of off-diagonal entries:
///
/// ```text
/// [a b] [a' b']   [aa' + s·b·c'   ab' + bd'   ]
/// [c d] [c' d'] = [ca' + dc'      s·c·b' + dd']
/// ```
pub fn generalized_matrix_ring(base: &FiniteRing, s: usize) -> Result<FiniteRing> {
    if s >= base.order() {
        return Err(Error::ElementOutOfRange { index: s, order: base.order() });
    }
    if !base.is_central(s) {
        return Err(Error::NotCentral { s });
    }
    let q = base.order();
    let order = pow_size(q, 4)?;
    let digits = digit_table(order, q, 4);
    let r = base;
    FiniteRing::tabulate(
        order,
        |x, y| (0..4).fold(0, |acc, c| acc * q + r.add(digits[x * 4 + c], digits[y * 4 + c])),
        |x, y| {
            let (a, b, c, d) = (digits[x * 4], digits[x * 4 + 1], digits[x * 4 + 2], digits[x * 4 + 3]);
            let (a2, b2, c2, d2) = (digits[y * 4], digits[y * 4 + 1], digits[y * 4 + 2], digits[y * 4 + 3]);
            let tl = r.add(r.mul(a, a2), r.mul3(s, b, c2));
            let tr = r.add(r.mul(a, b2), r.mul(b, d2));
            let bl = r.add(r.mul(c, a2), r.mul(d, c2));
            let br = r.add(r.mul3(s, c, b2), r.mul(d, d2));
            radix_index(&[tl, tr, bl, br], q)
        },
        0,
        radix_index(&[r.one(), r.zero(), r.zero(), r.one()], q),
        format!("K({},{s})", base.label()),
        Shape::GenMatrix { base: base.clone(), multiplier: s },
    )
}

/// Entries `(a, b, c, d)` of a `K_s(R)` or `M_2(R)` element.
pub fn quad_entries(ring: &FiniteRing, index: usize) -> Option<[usize; 4]> {
    let q = match ring.shape() {
        Shape::GenMatrix { base, .. } => base.order(),
        Shape::Matrix { base, size: 2 } => base.order(),
        _ => return None,
    };
    let d = radix_digits(index, q, 4);
    Some([d[0], d[1], d[2], d[3]])
}

pub fn quad_index(base: &FiniteRing, entries: [usize; 4]) -> usize {
    radix_index(&entries, base.order())
}

/// A verified two-sided ideal.
#[derive(Clone, Debug)]
pub struct IdealSet {
    ring: FiniteRing,
    members: ElemSet,
    generators: Vec<usize>,
}

impl IdealSet {
    /// Wrap `members` after checking it is a two-sided ideal. A small
    /// generating set is chosen greedily in index order.
    pub fn new(ring: &FiniteRing, members: ElemSet) -> Result<Self> {
        if members.universe() != ring.order() || !is_ideal(ring, &members) {
            return Err(Error::NotAnIdeal);
        }
        let mut generators = Vec::new();
        let mut span = ElemSet::from_indices(ring.order(), [ring.zero()]);
        for x in members.iter() {
            if !span.contains(x) {
                generators.push(x);
                span = ideal_generated_by(ring, &generators)?.members;
            }
        }
        Ok(Self { ring: ring.clone(), members, generators })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    /// A generating set; used to render quotient labels.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }
}

pub fn is_ideal(ring: &FiniteRing, set: &ElemSet) -> bool {
    if !set.contains(ring.zero()) {
        return false;
    }
    let members = set.to_vec();
    members.iter().all(|&x| {
        set.contains(ring.neg(x))
            && members.iter().all(|&y| set.contains(ring.add(x, y)))
            && (0..ring.order()).all(|r| set.contains(ring.mul(r, x)) && set.contains(ring.mul(x, r)))
    })
}

/// Smallest two-sided ideal containing `gens`, by worklist closure under
/// addition and two-sided absorption.
pub fn ideal_generated_by(ring: &FiniteRing, gens: &[usize]) -> Result<IdealSet> {
    let n = ring.order();
    if let Some(&bad) = gens.iter().find(|&&g| g >= n) {
        return Err(Error::ElementOutOfRange { index: bad, order: n });
    }
    let mut set = ElemSet::empty(n);
    let mut members = Vec::new();
    let mut queue = Vec::new();
    for x in std::iter::once(ring.zero()).chain(gens.iter().copied()) {
        if set.insert(x) {
            members.push(x);
            queue.push(x);
        }
    }
    while let Some(x) = queue.pop() {
        let mut fresh = Vec::new();
        for r in 0..n {
            fresh.push(ring.mul(r, x));
            fresh.push(ring.mul(x, r));
        }
        for &y in &members {
            fresh.push(ring.add(x, y));
        }
        for z in fresh {
            if set.insert(z) {
                members.push(z);
                queue.push(z);
            }
        }
    }
    let mut generators: Vec<usize> = gens.to_vec();
    generators.sort_unstable();
    generators.dedup();
    Ok(IdealSet { ring: ring.clone(), members: set, generators })
}

/// Every ideal generated by elements of `within`: the principal ideals of its
/// members closed under ideal sums. When `within` is itself an ideal this is
/// the full lattice of ideals contained in it.
pub fn ideals_generated_within(ring: &FiniteRing, within: &ElemSet) -> Result<Vec<IdealSet>> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut ideals: Vec<IdealSet> = Vec::new();
    let mut push = |ideal: IdealSet, ideals: &mut Vec<IdealSet>| {
        if seen.insert(ideal.members.to_vec()) {
            ideals.push(ideal);
        }
    };
    push(ideal_generated_by(ring, &[])?, &mut ideals);
    for g in within.iter() {
        push(ideal_generated_by(ring, &[g])?, &mut ideals);
    }
    let mut start = 0;
    loop {
        let count = ideals.len();
        for i in 0..count {
            for j in start.max(i + 1)..count {
                let sum = ideal_sum(ring, &ideals[i], &ideals[j]);
                push(sum, &mut ideals);
            }
        }
        if ideals.len() == count {
            break;
        }
        start = count;
    }
    ideals.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members.to_vec().cmp(&b.members.to_vec())));
    Ok(ideals)
}

fn ideal_sum(ring: &FiniteRing, a: &IdealSet, b: &IdealSet) -> IdealSet {
    let mut set = ElemSet::empty(ring.order());
    for x in a.members.iter() {
        for y in b.members.iter() {
            set.insert(ring.add(x, y));
        }
    }
    let mut generators: Vec<usize> = a.generators.iter().chain(&b.generators).copied().collect();
    generators.sort_unstable();
    generators.dedup();
    IdealSet { ring: ring.clone(), members: set, generators }
}

/// The coset ring `R/I`. Cosets are indexed in increasing order of their
/// minimum member.
pub fn quotient_ring(ideal: &IdealSet) -> Result<FiniteRing> {
    let ring = &ideal.ring;
    if !is_ideal(ring, &ideal.members) {
        return Err(Error::NotAnIdeal);
    }
    let n = ring.order();
    let members = ideal.members.to_vec();
    let mut projection = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for x in 0..n {
        if projection[x] != usize::MAX {
            continue;
        }
        let coset = representatives.len();
        representatives.push(x);
        for &i in &members {
            projection[ring.add(x, i)] = coset;
        }
    }
    let order = representatives.len();
    let gens = ideal.generators.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    FiniteRing::tabulate(
        order,
        |a, b| projection[ring.add(representatives[a], representatives[b])],
        |a, b| projection[ring.mul(representatives[a], representatives[b])],
        projection[ring.zero()],
        projection[ring.one()],
        format!("quot({},{{{gens}}})", ring.label()),
        Shape::Quotient { parent: ring.clone(), representatives: representatives.clone(), projection: projection.clone() },
    )
}

/// Projection `R -> R/I` of a quotient ring built by [`quotient_ring`].
pub fn quotient_projection(quotient: &FiniteRing) -> Option<&[usize]> {
    match quotient.shape() {
        Shape::Quotient { projection, .. } => Some(projection),
        _ => None,
    }
}

/// The corner ring `eRe` with identity `e`, elements ordered by their index
/// in `R`.
pub fn corner_ring(ring: &FiniteRing, e: usize) -> Result<FiniteRing> {
    if e >= ring.order() {
        return Err(Error::ElementOutOfRange { index: e, order: ring.order() });
    }
    if ring.mul(e, e) != e {
        return Err(Error::NotIdempotent { e });
    }
    let corner = ElemSet::from_indices(ring.order(), (0..ring.order()).map(|x| ring.mul3(e, x, e)));
    let embedding = corner.to_vec();
    let mut local = vec![usize::MAX; ring.order()];
    for (i, &x) in embedding.iter().enumerate() {
        local[x] = i;
    }
    FiniteRing::tabulate(
        embedding.len(),
        |a, b| local[ring.add(embedding[a], embedding[b])],
        |a, b| local[ring.mul(embedding[a], embedding[b])],
        local[ring.zero()],
        local[e],
        format!("corner({},{e})", ring.label()),
        Shape::Corner { parent: ring.clone(), idempotent: e, embedding: embedding.clone() },
    )
}

/// Parent index of every element of a corner ring.
pub fn corner_embedding(corner: &FiniteRing) -> Option<&[usize]> {
    match corner.shape() {
        Shape::Corner { embedding, .. } => Some(embedding),
        _ => None,
    }
}

/// The group ring `RG`. Multiplication is convolution over the Cayley table.
pub fn group_ring(base: &FiniteRing, group: &GroupTable) -> Result<FiniteRing> {
    let q = base.order();
    let m = group.order();
    let order = pow_size(q, m)?;
    let digits = digit_table(order, q, m);
    let mut unit = vec![base.zero(); m];
    unit[group.identity()] = base.one();
    FiniteRing::tabulate(
        order,
        |a, b| (0..m).fold(0, |acc, g| acc * q + base.add(digits[a * m + g], digits[b * m + g])),
        |a, b| {
            let mut coeffs = vec![base.zero(); m];
            for g in 0..m {
                let x = digits[a * m + g];
                if x == base.zero() {
                    continue;
                }
                for h in 0..m {
                    let gh = group.op(g, h);
                    coeffs[gh] = base.add(coeffs[gh], base.mul(x, digits[b * m + h]));
                }
            }
            radix_index(&coeffs, q)
        },
        0,
        radix_index(&unit, q),
        format!("GR({},{})", base.label(), group.label()),
        Shape::GroupRing { base: base.clone(), group: group.clone() },
    )
}

/// Coefficient vector of a group-ring element, indexed by group element.
pub fn group_ring_coefficients(ring: &FiniteRing, x: usize) -> Result<Vec<usize>> {
    let Shape::GroupRing { base, group } = ring.shape() else { return Err(Error::NotAGroupRing) };
    if x >= ring.order() {
        return Err(Error::ElementOutOfRange { index: x, order: ring.order() });
    }
    Ok(radix_digits(x, base.order(), group.order()))
}

pub fn group_ring_element(ring: &FiniteRing, coefficients: &[usize]) -> Result<usize> {
    let Shape::GroupRing { base, group } = ring.shape() else { return Err(Error::NotAGroupRing) };
    if coefficients.len() != group.order() {
        return Err(Error::MalformedTable("coefficient vector length differs from group order".into()));
    }
    if let Some(&bad) = coefficients.iter().find(|&&c| c >= base.order()) {
        return Err(Error::ElementOutOfRange { index: bad, order: base.order() });
    }
    Ok(radix_index(coefficients, base.order()))
}

/// `r ↦ r·1_G`
pub fn group_ring_embed(ring: &FiniteRing, r: usize) -> Result<usize> {
    let Shape::GroupRing { base, group } = ring.shape() else { return Err(Error::NotAGroupRing) };
    let mut coeffs = vec![base.zero(); group.order()];
    coeffs[group.identity()] = r;
    group_ring_element(ring, &coeffs)
}

/// The augmentation map `ε(Σ a_g g) = Σ a_g`.
pub fn augmentation(ring: &FiniteRing, x: usize) -> Result<usize> {
    let Shape::GroupRing { base, .. } = ring.shape() else { return Err(Error::NotAGroupRing) };
    let coeffs = group_ring_coefficients(ring, x)?;
    Ok(coeffs.into_iter().fold(base.zero(), |acc, c| base.add(acc, c)))
}

/// `Δ(RG) = ker ε`, verified to be a two-sided ideal.
pub fn augmentation_ideal(ring: &FiniteRing) -> Result<IdealSet> {
    let Shape::GroupRing { base, .. } = ring.shape() else { return Err(Error::NotAGroupRing) };
    let mut kernel = ElemSet::empty(ring.order());
    for x in 0..ring.order() {
        if augmentation(ring, x)? == base.zero() {
            kernel.insert(x);
        }
    }
    IdealSet::new(ring, kernel)
}
