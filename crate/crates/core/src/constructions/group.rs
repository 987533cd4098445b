use std::fmt;
use std::path::Path;

use crate::error::{Error, GroupAxiom, Result};

/// A finite group given by its Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    op: Vec<usize>,
    identity: usize,
    label: String,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable").field("label", &self.label).field("order", &self.order).finish()
    }
}

const S3: [[usize; 6]; 6] = [
    [0, 1, 2, 3, 4, 5],
    [1, 0, 4, 5, 2, 3],
    [2, 3, 0, 1, 5, 4],
    [3, 2, 5, 4, 0, 1],
    [4, 5, 1, 0, 3, 2],
    [5, 4, 3, 2, 1, 0],
];

// r^i s^j at index i + 4j
const D4: [[usize; 8]; 8] = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 2, 3, 0, 5, 6, 7, 4],
    [2, 3, 0, 1, 6, 7, 4, 5],
    [3, 0, 1, 2, 7, 4, 5, 6],
    [4, 7, 6, 5, 0, 3, 2, 1],
    [5, 4, 7, 6, 1, 0, 3, 2],
    [6, 5, 4, 7, 2, 1, 0, 3],
    [7, 6, 5, 4, 3, 2, 1, 0],
];

// 1, -1, i, -i, j, -j, k, -k
const Q8: [[usize; 8]; 8] = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 0, 3, 2, 5, 4, 7, 6],
    [2, 3, 1, 0, 6, 7, 5, 4],
    [3, 2, 0, 1, 7, 6, 4, 5],
    [4, 5, 7, 6, 1, 0, 2, 3],
    [5, 4, 6, 7, 0, 1, 3, 2],
    [6, 7, 4, 5, 3, 2, 1, 0],
    [7, 6, 5, 4, 2, 3, 0, 1],
];

/// Names accepted by [`builtin_group`] besides the cyclic family `Cn`.
pub const BUILTIN_GROUPS: [&str; 9] = ["C1", "C2", "C3", "C4", "C2xC2", "C6", "S3", "D4", "Q8"];

/// A builtin group by name: `Cn` for any `n >= 1`, `C2xC2`, `S3`, `D4`, `Q8`.
pub fn builtin_group(name: &str) -> Result<GroupTable> {
    let table: Vec<Vec<usize>> = match name {
        "C2xC2" => (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect(),
        "S3" => S3.iter().map(|r| r.to_vec()).collect(),
        "D4" => D4.iter().map(|r| r.to_vec()).collect(),
        "Q8" => Q8.iter().map(|r| r.to_vec()).collect(),
        _ => {
            let n: usize = name
                .strip_prefix('C')
                .and_then(|s| s.parse().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
            (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
        }
    };
    let mut g = group_from_cayley(&table, 0)?;
    g.label = name.to_string();
    Ok(g)
}

/// Validate a Cayley table and wrap it as a group.
pub fn group_from_cayley(table: &[Vec<usize>], identity: usize) -> Result<GroupTable> {
    let m = table.len();
    if m == 0 {
        return Err(Error::MalformedTable("empty Cayley table".into()));
    }
    let mut op = Vec::with_capacity(m * m);
    for (r, row) in table.iter().enumerate() {
        if row.len() != m {
            return Err(Error::MalformedTable(format!("Cayley row {r} has {} entries, expected {m}", row.len())));
        }
        for &x in row {
            if x >= m {
                return Err(Error::IndexOutOfRange { index: x, order: m });
            }
            op.push(x);
        }
    }
    if identity >= m {
        return Err(Error::IndexOutOfRange { index: identity, order: m });
    }
    let g = GroupTable { order: m, op, identity, label: format!("G{m}") };
    g.validate()?;
    Ok(g)
}

/// Parse the plain-text Cayley format: first line `m identity`, then `m`
/// rows of `m` whitespace-separated indices.
pub fn parse_cayley(text: &str) -> Result<GroupTable> {
    let mut nums = text.split_whitespace().map(|t| {
        t.parse::<usize>().map_err(|_| Error::MalformedTable(format!("not an index: {t:?}")))
    });
    let mut next = |what: &str| -> Result<usize> {
        nums.next().unwrap_or_else(|| Err(Error::MalformedTable(format!("missing {what}"))))
    };
    let m = next("group order")?;
    let identity = next("identity index")?;
    if m == 0 {
        return Err(Error::MalformedTable("group order must be positive".into()));
    }
    let mut table = vec![vec![0; m]; m];
    for row in table.iter_mut() {
        for x in row.iter_mut() {
            *x = next("table entry")?;
        }
    }
    if nums.next().is_some() {
        return Err(Error::MalformedTable("trailing data after Cayley table".into()));
    }
    group_from_cayley(&table, identity)
}

pub fn load_cayley(path: &Path) -> Result<GroupTable> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    let mut g = parse_cayley(&text)?;
    g.label = format!("@{}", path.display());
    Ok(g)
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.op(a, b) == self.identity).expect("validated group")
    }

    /// Smallest `k >= 1` with `a^k = 1`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    pub fn is_2_group(&self) -> bool {
        (0..self.order).all(|a| self.element_order(a).is_power_of_two())
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }

    fn validate(&self) -> Result<()> {
        let m = self.order;
        let e = self.identity;
        let viol = |kind, witness| Err(Error::GroupAxiomViolation { kind, witness });
        for a in 0..m {
            if self.op(e, a) != a || self.op(a, e) != a {
                return viol(GroupAxiom::Identity, [e, a, a]);
            }
            if !(0..m).any(|b| self.op(a, b) == e && self.op(b, a) == e) {
                return viol(GroupAxiom::Inverse, [a, e, e]);
            }
        }
        for a in 0..m {
            for b in 0..m {
                let ab = self.op(a, b);
                for c in 0..m {
                    if self.op(ab, c) != self.op(a, self.op(b, c)) {
                        return viol(GroupAxiom::Associativity, [a, b, c]);
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate_and_classify() {
        for name in BUILTIN_GROUPS {
            let g = builtin_group(name).unwrap();
            assert_eq!(g.label(), name);
        }
        let two_groups: Vec<_> = BUILTIN_GROUPS
            .iter()
            .filter(|n| builtin_group(n).unwrap().is_2_group())
            .copied()
            .collect();
        assert_eq!(two_groups, ["C1", "C2", "C4", "C2xC2", "D4", "Q8"]);
        assert_eq!(builtin_group("S3").unwrap().order(), 6);
        assert!(!builtin_group("S3").unwrap().is_abelian());
        assert!(!builtin_group("Q8").unwrap().is_abelian());
        assert!(builtin_group("C6").unwrap().is_abelian());
        assert_eq!(builtin_group("C5").unwrap().element_order(1), 5);
    }

    #[test]
    fn q8_has_single_involution() {
        let q8 = builtin_group("Q8").unwrap();
        let involutions = (0..8).filter(|&a| q8.element_order(a) == 2).count();
        assert_eq!(involutions, 1);
        let d4 = builtin_group("D4").unwrap();
        assert_eq!((0..8).filter(|&a| d4.element_order(a) == 2).count(), 5);
    }

    #[test]
    fn unknown_and_broken_groups() {
        assert!(matches!(builtin_group("A5"), Err(Error::UnknownGroup(_))));
        assert!(matches!(builtin_group("C0"), Err(Error::UnknownGroup(_))));
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(group_from_cayley(&bad, 0), Err(Error::GroupAxiomViolation { .. })));
    }

    #[test]
    fn cayley_text_format() {
        let g = parse_cayley("3 0\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
        assert_eq!(g.order(), 3);
        assert!(!g.is_2_group());
        assert!(parse_cayley("2 0\n0 1\n1").is_err());
        assert!(parse_cayley("2 0\n0 1\n1 0\n7").is_err());
    }
}
