use std::fmt;
use std::path::PathBuf;

use super::{
    builtin_group, corner_ring, direct_product, generalized_matrix_ring, group_ring, ideal_generated_by, load_cayley,
    matrix_ring, quotient_ring, ring_zn, upper_triangular_ring, GroupTable,
};
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Builtin(String),
    File(PathBuf),
}

impl GroupSpec {
    pub fn load(&self) -> Result<GroupTable> {
        match self {
            GroupSpec::Builtin(name) => builtin_group(name),
            GroupSpec::File(path) => load_cayley(path),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Builtin(name) => f.write_str(name),
            GroupSpec::File(path) => write!(f, "@{}", path.display()),
        }
    }
}

/// A ring-construction expression. Displays as canonical DSL text, which is
/// also the label of the ring it evaluates to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionAst {
    Zn(usize),
    Product(Vec<ConstructionAst>),
    Matrix { size: usize, base: Box<ConstructionAst> },
    Triangular { size: usize, base: Box<ConstructionAst> },
    GenMatrix { base: Box<ConstructionAst>, multiplier: usize },
    Quotient { base: Box<ConstructionAst>, generators: Vec<usize> },
    Corner { base: Box<ConstructionAst>, idempotent: usize },
    GroupRing { base: Box<ConstructionAst>, group: GroupSpec },
}

impl fmt::Display for ConstructionAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionAst::Zn(n) => write!(f, "Z{n}"),
            ConstructionAst::Product(factors) => {
                f.write_str("prod(")?;
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{factor}")?;
                }
                f.write_str(")")
            }
            ConstructionAst::Matrix { size, base } => write!(f, "M{size}({base})"),
            ConstructionAst::Triangular { size, base } => write!(f, "T{size}({base})"),
            ConstructionAst::GenMatrix { base, multiplier } => write!(f, "K({base},{multiplier})"),
            ConstructionAst::Quotient { base, generators } => {
                let gens = generators.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                write!(f, "quot({base},{{{gens}}})")
            }
            ConstructionAst::Corner { base, idempotent } => write!(f, "corner({base},{idempotent})"),
            ConstructionAst::GroupRing { base, group } => write!(f, "GR({base},{group})"),
        }
    }
}

fn in_range(ring: &FiniteRing, index: usize) -> Result<usize> {
    if index >= ring.order() {
        return Err(Error::ElementOutOfRange { index, order: ring.order() });
    }
    Ok(index)
}

/// Build the ring an expression describes. Deterministic: equal expressions
/// give identical tables and labels.
pub fn eval_ast(ast: &ConstructionAst) -> Result<FiniteRing> {
    match ast {
        ConstructionAst::Zn(n) => ring_zn(*n),
        ConstructionAst::Product(factors) => {
            let rings = factors.iter().map(eval_ast).collect::<Result<Vec<_>>>()?;
            direct_product(&rings)
        }
        ConstructionAst::Matrix { size, base } => matrix_ring(&eval_ast(base)?, *size),
        ConstructionAst::Triangular { size, base } => upper_triangular_ring(&eval_ast(base)?, *size),
        ConstructionAst::GenMatrix { base, multiplier } => {
            let r = eval_ast(base)?;
            generalized_matrix_ring(&r, in_range(&r, *multiplier)?)
        }
        ConstructionAst::Quotient { base, generators } => {
            let r = eval_ast(base)?;
            for &g in generators {
                in_range(&r, g)?;
            }
            quotient_ring(&ideal_generated_by(&r, generators)?)
        }
        ConstructionAst::Corner { base, idempotent } => {
            let r = eval_ast(base)?;
            corner_ring(&r, in_range(&r, *idempotent)?)
        }
        ConstructionAst::GroupRing { base, group } => {
            let g = group.load()?.with_label(group.to_string());
            group_ring(&eval_ast(base)?, &g)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> Box<ConstructionAst> {
        Box::new(ConstructionAst::Zn(n))
    }

    #[test]
    fn evaluation_examples() {
        let m2 = eval_ast(&ConstructionAst::Matrix { size: 2, base: zn(2) }).unwrap();
        assert_eq!((m2.order(), m2.label()), (16, "M2(Z2)"));
        let k = eval_ast(&ConstructionAst::GenMatrix { base: zn(4), multiplier: 2 }).unwrap();
        assert_eq!((k.order(), k.label()), (256, "K(Z4,2)"));
        let q = eval_ast(&ConstructionAst::Quotient { base: zn(4), generators: vec![2] }).unwrap();
        assert_eq!((q.order(), q.label()), (2, "quot(Z4,{2})"));
    }

    #[test]
    fn labels_match_display() {
        let asts = [
            ConstructionAst::Product(vec![ConstructionAst::Zn(2), ConstructionAst::Zn(4)]),
            ConstructionAst::Triangular { size: 2, base: zn(4) },
            ConstructionAst::Corner { base: zn(6), idempotent: 3 },
            ConstructionAst::GroupRing { base: zn(2), group: GroupSpec::Builtin("C2xC2".into()) },
        ];
        for ast in asts {
            let ring = eval_ast(&ast).unwrap();
            assert_eq!(ring.label(), ast.to_string());
            let again = eval_ast(&ast).unwrap();
            assert_eq!(ring.tables(), again.tables());
        }
    }

    #[test]
    fn bad_indices_are_reported() {
        let err = eval_ast(&ConstructionAst::GenMatrix { base: zn(4), multiplier: 9 }).unwrap_err();
        assert!(matches!(err, Error::ElementOutOfRange { index: 9, order: 4 }));
        let err = eval_ast(&ConstructionAst::Quotient { base: zn(4), generators: vec![4] }).unwrap_err();
        assert!(matches!(err, Error::ElementOutOfRange { index: 4, .. }));
        let err = eval_ast(&ConstructionAst::Corner { base: zn(4), idempotent: 3 }).unwrap_err();
        assert!(matches!(err, Error::NotIdempotent { e: 3 }));
    }
}
