use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A subset of the element indices `0..order` of some ring, stored as a
/// membership mask. Serializes as the sorted list of member indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    mask: Vec<bool>,
}

impl ElemSet {
    pub fn empty(order: usize) -> Self {
        Self { mask: vec![false; order] }
    }

    pub fn full(order: usize) -> Self {
        Self { mask: vec![true; order] }
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        Self { mask }
    }

    /// Indices `>= order` are ignored.
    pub fn from_indices<I: IntoIterator<Item = usize>>(order: usize, indices: I) -> Self {
        let mut set = Self::empty(order);
        for i in indices {
            if i < order {
                set.mask[i] = true;
            }
        }
        set
    }

    pub fn from_predicate(order: usize, pred: impl Fn(usize) -> bool) -> Self {
        Self { mask: (0..order).map(pred).collect() }
    }

    /// Size of the ambient ring, not the number of members.
    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.mask.get(i).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, i: usize) -> bool {
        let fresh = !self.mask[i];
        self.mask[i] = true;
        fresh
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&b| b)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.mask.iter().zip(&other.mask).all(|(&a, &b)| !a || b)
    }

    /// First member of `self` missing from `other`.
    pub fn first_outside(&self, other: &ElemSet) -> Option<usize> {
        self.iter().find(|&i| !other.contains(i))
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        ElemSet::from_mask(self.mask.iter().zip(&other.mask).map(|(&a, &b)| a && b).collect())
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        ElemSet::from_mask(self.mask.iter().zip(&other.mask).map(|(&a, &b)| a || b).collect())
    }

    pub fn as_mask(&self) -> &[bool] {
        &self.mask
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Deserialization alone cannot know the universe size; callers fix it up
/// with [`ElemSet::with_universe`].
impl<'de> Deserialize<'de> for ElemSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        let order = members.iter().max().map_or(0, |&m| m + 1);
        Ok(ElemSet::from_indices(order, members))
    }
}

impl ElemSet {
    /// Re-home a set onto a universe of `order` elements. Returns `None` if a
    /// member does not fit.
    pub fn with_universe(self, order: usize) -> Option<ElemSet> {
        if self.iter().any(|i| i >= order) {
            return None;
        }
        let mut mask = self.mask;
        mask.resize(order, false);
        Some(ElemSet { mask })
    }
}
