//! Table-based finite unital rings.
//!
//! Elements are dense indices `0..order`; addition and multiplication are
//! `order × order` lookup tables. Every public constructor validates the ring
//! axioms before handing out a [`FiniteRing`].

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};

use sha2::{Digest, Sha256};

use crate::classify::Kind;
use crate::constructions::GroupTable;
use crate::elemset::ElemSet;
use crate::error::{Axiom, Error, Result};

/// Hard ceiling imposed by the `u16` table entries.
pub const MAX_ORDER: usize = 1 << 16;
pub const DEFAULT_ORDER_CAP: usize = 4096;

static ORDER_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_ORDER_CAP);

/// Largest ring order any builder will produce.
pub fn order_cap() -> usize {
    ORDER_CAP.load(Ordering::Relaxed)
}

/// Set the order cap; values are clamped to `1..=MAX_ORDER`.
pub fn set_order_cap(cap: usize) {
    ORDER_CAP.store(cap.clamp(1, MAX_ORDER), Ordering::Relaxed);
}

/// Fail fast if a construction of `requested` elements would exceed the cap.
pub fn check_size(requested: u128) -> Result<usize> {
    let cap = order_cap();
    if requested == 0 || requested > cap as u128 {
        return Err(Error::SizeExceeded { requested, cap });
    }
    Ok(requested as usize)
}

/// How a ring was built. Builders record enough of their inputs here for
/// element rendering and for checks that need the underlying structure.
#[derive(Clone, Debug)]
pub enum Shape {
    Plain,
    Zn { modulus: usize },
    /// Mixed-radix over the factors, first factor most significant.
    Product { factors: Vec<FiniteRing> },
    /// Row-major mixed-radix over the base ring's elements.
    Matrix { base: FiniteRing, size: usize },
    /// Row-major over the upper-triangle entries `(i, j)` with `i <= j`.
    Triangular { base: FiniteRing, size: usize },
    /// Quadruples `(a, b, c, d)` with `a` most significant.
    GenMatrix { base: FiniteRing, multiplier: usize },
    /// Coefficient vectors indexed by group element, the coefficient of group
    /// element 0 most significant.
    GroupRing { base: FiniteRing, group: GroupTable },
    /// Cosets ordered by their minimum member; `representatives[i]` is that
    /// minimum, `projection[x]` the coset of parent element `x`.
    Quotient { parent: FiniteRing, representatives: Vec<usize>, projection: Vec<usize> },
    /// Corner `eRe` ordered by parent index; `embedding[i]` is the parent index.
    Corner { parent: FiniteRing, idempotent: usize, embedding: Vec<usize> },
}

#[derive(Default)]
pub(crate) struct RingCache {
    pub neg: OnceLock<Vec<u16>>,
    pub inverses: OnceLock<Vec<Option<u16>>>,
    pub center: OnceLock<ElemSet>,
    pub units: OnceLock<ElemSet>,
    pub idempotents: OnceLock<ElemSet>,
    pub nilpotents: OnceLock<ElemSet>,
    pub jacobson: OnceLock<ElemSet>,
    pub j_sharp: OnceLock<ElemSet>,
    pub quasi_nilpotents: OnceLock<ElemSet>,
    pub delta_nilpotents: OnceLock<ElemSet>,
    pub decomposition_counts: [OnceLock<Vec<u32>>; Kind::COUNT],
    pub hash: OnceLock<[u8; 32]>,
}

struct RingData {
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    zero: usize,
    one: usize,
    label: String,
    shape: Shape,
    cache: RingCache,
}

/// A validated finite unital ring. Cloning is cheap; all clones share the
/// tables and the lazily computed structural caches.
#[derive(Clone)]
pub struct FiniteRing {
    inner: Arc<RingData>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.inner.label)
            .field("order", &self.inner.order)
            .finish_non_exhaustive()
    }
}

/// Build and validate a ring from nested `n × n` tables.
pub fn make_ring(
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
    zero: usize,
    one: usize,
    label: &str,
) -> Result<FiniteRing> {
    let (order, add, mul) = flatten_tables(add, mul)?;
    FiniteRing::from_flat(order, add, mul, zero, one, label.to_string(), Shape::Plain)
}

fn flatten_tables(add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<(usize, Vec<u16>, Vec<u16>)> {
    let n = add.len();
    if n == 0 {
        return Err(Error::MalformedTable("empty table".into()));
    }
    if mul.len() != n {
        return Err(Error::MalformedTable(format!(
            "addition table has {n} rows but multiplication table has {}",
            mul.len()
        )));
    }
    if n > MAX_ORDER {
        return Err(Error::SizeExceeded { requested: n as u128, cap: MAX_ORDER });
    }
    let mut flat_add = Vec::with_capacity(n * n);
    let mut flat_mul = Vec::with_capacity(n * n);
    for (name, table, out) in [("addition", add, &mut flat_add), ("multiplication", mul, &mut flat_mul)] {
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "{name} row {r} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, order: n });
                }
                out.push(x as u16);
            }
        }
    }
    Ok((n, flat_add, flat_mul))
}

impl FiniteRing {
    pub(crate) fn from_flat(
        order: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
        label: String,
        shape: Shape,
    ) -> Result<Self> {
        let ring = Self::from_flat_unchecked(order, add, mul, zero, one, label, shape)?;
        ring.validate()?;
        Ok(ring)
    }

    /// Assemble a ring without checking the ring axioms. Table shape and
    /// index ranges are still checked. Intended for mutation tests that need
    /// deliberately broken tables.
    pub fn from_tables_unchecked(
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
        zero: usize,
        one: usize,
        label: &str,
    ) -> Result<Self> {
        let (order, add, mul) = flatten_tables(add, mul)?;
        Self::from_flat_unchecked(order, add, mul, zero, one, label.to_string(), Shape::Plain)
    }

    fn from_flat_unchecked(
        order: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
        label: String,
        shape: Shape,
    ) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::SizeExceeded { requested: order as u128, cap: MAX_ORDER });
        }
        if add.len() != order * order || mul.len() != order * order {
            return Err(Error::MalformedTable("table size does not match order".into()));
        }
        for index in [zero, one] {
            if index >= order {
                return Err(Error::IndexOutOfRange { index, order });
            }
        }
        if let Some(&bad) = add.iter().chain(&mul).find(|&&x| x as usize >= order) {
            return Err(Error::IndexOutOfRange { index: bad as usize, order });
        }
        Ok(Self {
            inner: Arc::new(RingData {
                order,
                add,
                mul,
                zero,
                one,
                label,
                shape,
                cache: RingCache::default(),
            }),
        })
    }

    /// Tabulate a ring from arithmetic closures and validate it.
    pub(crate) fn tabulate(
        order: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        zero: usize,
        one: usize,
        label: String,
        shape: Shape,
    ) -> Result<Self> {
        let mut add_t = Vec::with_capacity(order * order);
        let mut mul_t = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                add_t.push(add(a, b) as u16);
                mul_t.push(mul(a, b) as u16);
            }
        }
        Self::from_flat(order, add_t, mul_t, zero, one, label, shape)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.inner.order
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.inner.zero
    }

    #[inline]
    pub fn one(&self) -> usize {
        self.inner.one
    }

    pub fn label(&self) -> &str {
        &self.inner.label
    }

    pub fn shape(&self) -> &Shape {
        &self.inner.shape
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.order == 1
    }

    pub(crate) fn cache(&self) -> &RingCache {
        &self.inner.cache
    }

    /// True when both handles refer to the same underlying tables.
    pub fn ptr_eq(&self, other: &FiniteRing) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.inner.add[a * self.inner.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.inner.mul[a * self.inner.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg_table()[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    fn neg_table(&self) -> &[u16] {
        self.inner.cache.neg.get_or_init(|| {
            let n = self.order();
            (0..n)
                .map(|a| (0..n).find(|&b| self.add(a, b) == self.zero()).unwrap_or(self.zero()) as u16)
                .collect()
        })
    }

    /// `x * y * z`
    #[inline]
    pub fn mul3(&self, x: usize, y: usize, z: usize) -> usize {
        self.mul(self.mul(x, y), z)
    }

    /// The image of the integer `k` under `Z -> R`.
    pub fn from_int(&self, k: i64) -> usize {
        let mut acc = self.zero();
        for _ in 0..k.unsigned_abs() {
            acc = self.add(acc, self.one());
        }
        if k < 0 {
            self.neg(acc)
        } else {
            acc
        }
    }

    pub fn element(&self, index: usize) -> Result<ElementRef<'_>> {
        if index >= self.order() {
            return Err(Error::ElementOutOfRange { index, order: self.order() });
        }
        Ok(ElementRef { ring: self, index })
    }

    /// `a, a², a³, …` up to and including the first value that repeats an
    /// earlier entry; the repeat itself is not included.
    pub fn power_orbit(&self, a: usize) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut orbit = Vec::new();
        let mut x = a;
        while !seen[x] {
            seen[x] = true;
            orbit.push(x);
            x = self.mul(x, a);
        }
        orbit
    }

    /// `{x : xa = 0}`
    pub fn left_annihilator(&self, a: usize) -> ElemSet {
        ElemSet::from_predicate(self.order(), |x| self.mul(x, a) == self.zero())
    }

    /// `{x : ax = 0}`
    pub fn right_annihilator(&self, a: usize) -> ElemSet {
        ElemSet::from_predicate(self.order(), |x| self.mul(a, x) == self.zero())
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn center(&self) -> &ElemSet {
        self.inner.cache.center.get_or_init(|| {
            let n = self.order();
            ElemSet::from_predicate(n, |a| (0..n).all(|r| self.commute(a, r)))
        })
    }

    pub fn is_central(&self, a: usize) -> bool {
        self.center().contains(a)
    }

    pub fn is_commutative(&self) -> bool {
        self.center().len() == self.order()
    }

    /// Multiplicative inverse of every unit, `None` for non-units.
    pub fn inverses(&self) -> &[Option<u16>] {
        self.inner.cache.inverses.get_or_init(|| {
            let n = self.order();
            let one = self.one();
            (0..n)
                .map(|a| {
                    (0..n)
                        .find(|&b| self.mul(a, b) == one && self.mul(b, a) == one)
                        .map(|b| b as u16)
                })
                .collect()
        })
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        self.inverses()[a].map(usize::from)
    }

    /// SHA-256 over order, distinguished elements and both tables.
    pub fn content_hash(&self) -> [u8; 32] {
        *self.inner.cache.hash.get_or_init(|| {
            let mut h = Sha256::new();
            h.update((self.order() as u64).to_le_bytes());
            h.update((self.zero() as u64).to_le_bytes());
            h.update((self.one() as u64).to_le_bytes());
            for table in [&self.inner.add, &self.inner.mul] {
                for &x in table.iter() {
                    h.update(x.to_le_bytes());
                }
            }
            h.finalize().into()
        })
    }

    pub fn content_hash_hex(&self) -> String {
        hex::encode(self.content_hash())
    }

    /// Copy of the tables in nested form.
    pub fn tables(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let n = self.order();
        let nest = |t: &[u16]| -> Vec<Vec<usize>> {
            t.chunks(n).map(|row| row.iter().map(|&x| x as usize).collect()).collect()
        };
        (nest(&self.inner.add), nest(&self.inner.mul))
    }

    /// Check every ring axiom.
    ///
    /// Rings of order at most 64 are checked triple by triple. Larger rings
    /// use an additive generating set `S`: two additive maps agreeing on `S`
    /// agree everywhere, so distributivity and multiplicative associativity
    /// only need one argument ranging over `S`, and additive associativity
    /// follows from Light's test over the same generators. Either way the
    /// result is a complete verdict, not a sample.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        let (zero, one) = (self.zero(), self.one());
        let viol = |kind, a: usize, b: usize, c: usize| Err(Error::AxiomViolation { kind, witness: [a, b, c] });

        if n > 1 && zero == one {
            return viol(Axiom::ZeroEqualsOne, zero, one, zero);
        }
        for a in 0..n {
            if self.add(zero, a) != a || self.add(a, zero) != a {
                return viol(Axiom::AdditiveIdentity, zero, a, a);
            }
            if self.mul(one, a) != a || self.mul(a, one) != a {
                return viol(Axiom::MultiplicativeIdentity, one, a, a);
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                if self.add(a, b) != self.add(b, a) {
                    return viol(Axiom::AdditiveCommutativity, a, b, 0);
                }
            }
            if !(0..n).any(|b| self.add(a, b) == zero) {
                return viol(Axiom::AdditiveInverse, a, 0, 0);
            }
        }
        if n <= 64 {
            self.validate_exhaustive()
        } else {
            self.validate_by_generators()
        }
    }

    fn validate_exhaustive(&self) -> Result<()> {
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                let ab_add = self.add(a, b);
                let ab_mul = self.mul(a, b);
                for c in 0..n {
                    if self.add(ab_add, c) != self.add(a, self.add(b, c)) {
                        return Err(Error::AxiomViolation { kind: Axiom::AdditiveAssociativity, witness: [a, b, c] });
                    }
                    if self.mul(ab_mul, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::AxiomViolation {
                            kind: Axiom::MultiplicativeAssociativity,
                            witness: [a, b, c],
                        });
                    }
                    if self.mul(a, self.add(b, c)) != self.add(ab_mul, self.mul(a, c)) {
                        return Err(Error::AxiomViolation { kind: Axiom::LeftDistributivity, witness: [a, b, c] });
                    }
                    if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                        return Err(Error::AxiomViolation { kind: Axiom::RightDistributivity, witness: [a, b, c] });
                    }
                }
            }
        }
        Ok(())
    }

    fn validate_by_generators(&self) -> Result<()> {
        let n = self.order();
        let gens = additive_generators(self);
        // Light's test: (x + g) + y = x + (g + y) for generators g.
        for x in 0..n {
            for &g in &gens {
                let xg = self.add(x, g);
                for y in 0..n {
                    if self.add(xg, y) != self.add(x, self.add(g, y)) {
                        return Err(Error::AxiomViolation { kind: Axiom::AdditiveAssociativity, witness: [x, g, y] });
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                let yx = self.mul(y, x);
                for &g in &gens {
                    if self.mul(x, self.add(y, g)) != self.add(xy, self.mul(x, g)) {
                        return Err(Error::AxiomViolation { kind: Axiom::LeftDistributivity, witness: [x, y, g] });
                    }
                    if self.mul(self.add(y, g), x) != self.add(yx, self.mul(g, x)) {
                        return Err(Error::AxiomViolation { kind: Axiom::RightDistributivity, witness: [y, g, x] });
                    }
                    if self.mul(xy, g) != self.mul(x, self.mul(y, g)) {
                        return Err(Error::AxiomViolation {
                            kind: Axiom::MultiplicativeAssociativity,
                            witness: [x, y, g],
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Greedy generating set of the additive group: every element is reachable as
/// a left-nested sum of generators.
fn additive_generators(ring: &FiniteRing) -> Vec<usize> {
    let n = ring.order();
    let mut gens = Vec::new();
    let mut reached = vec![false; n];
    reached[ring.zero()] = true;
    for candidate in 0..n {
        if reached[candidate] {
            continue;
        }
        gens.push(candidate);
        let mut stack: Vec<usize> = (0..n).filter(|&x| reached[x]).collect();
        stack.push(candidate);
        reached[candidate] = true;
        while let Some(x) = stack.pop() {
            for &g in &gens {
                let y = ring.add(x, g);
                if !reached[y] {
                    reached[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    gens
}

/// An element index tied to the ring it lives in.
#[derive(Clone, Copy, Debug)]
pub struct ElementRef<'a> {
    ring: &'a FiniteRing,
    index: usize,
}

impl<'a> ElementRef<'a> {
    pub fn ring(&self) -> &'a FiniteRing {
        self.ring
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn power_orbit(&self) -> Vec<usize> {
        self.ring.power_orbit(self.index)
    }

    pub fn left_annihilator(&self) -> ElemSet {
        self.ring.left_annihilator(self.index)
    }

    pub fn right_annihilator(&self) -> ElemSet {
        self.ring.right_annihilator(self.index)
    }
}
