//! Recursive-descent parser for ring-construction expressions.
//!
//! ```text
//! expr  := "Z" INT | "M" INT "(" expr ")" | "T" INT "(" expr ")"
//!        | "K" "(" expr "," INT ")"
//!        | "prod" "(" expr { "," expr } ")"
//!        | "quot" "(" expr "," "{" [ INT { "," INT } ] "}" ")"
//!        | "corner" "(" expr "," INT ")"
//!        | "GR" "(" expr "," group ")"
//! group := "C" INT | "C2xC2" | "S3" | "D4" | "Q8" | "@" FILEPATH
//! ```
//!
//! Whitespace is allowed between tokens. A file path runs to the closing
//! parenthesis of the `GR(...)` and is trimmed.

use std::path::PathBuf;

use crate::constructions::{eval_ast, ConstructionAst, GroupSpec};
use crate::error::{ParseError, Result};
use crate::ring::FiniteRing;

const EXPR_STARTS: [&str; 8] = ["Z", "M", "T", "K", "prod", "quot", "corner", "GR"];

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

type PResult<T> = std::result::Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let found = self.rest().chars().next().map(|c| c.to_string());
        ParseError { offset: self.pos, expected: expected.iter().map(|s| s.to_string()).collect(), found }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> PResult<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&[token]))
        }
    }

    fn int(&mut self) -> PResult<usize> {
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error(&["integer"]));
        }
        let text = &self.rest()[..digits];
        let value = text.parse().map_err(|_| self.error(&["integer that fits in usize"]))?;
        self.pos += digits;
        Ok(value)
    }

    /// Keyword immediately followed by an integer, as in `Z4` or `M2`.
    fn prefixed_int(&mut self, prefix: &str) -> PResult<Option<usize>> {
        self.skip_ws();
        let after = &self.rest()[prefix.len().min(self.rest().len())..];
        if self.rest().starts_with(prefix) && after.starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += prefix.len();
            return self.int().map(Some);
        }
        Ok(None)
    }

    fn expr(&mut self) -> PResult<ConstructionAst> {
        self.skip_ws();
        if let Some(n) = self.prefixed_int("Z")? {
            return Ok(ConstructionAst::Zn(n));
        }
        if let Some(size) = self.prefixed_int("M")? {
            let base = self.parenthesized()?;
            return Ok(ConstructionAst::Matrix { size, base: Box::new(base) });
        }
        if let Some(size) = self.prefixed_int("T")? {
            let base = self.parenthesized()?;
            return Ok(ConstructionAst::Triangular { size, base: Box::new(base) });
        }
        if self.eat("prod") {
            self.expect("(")?;
            let mut factors = vec![self.expr()?];
            while self.eat(",") {
                factors.push(self.expr()?);
            }
            self.expect(")")?;
            return Ok(ConstructionAst::Product(factors));
        }
        if self.eat("quot") {
            self.expect("(")?;
            let base = Box::new(self.expr()?);
            self.expect(",")?;
            self.expect("{")?;
            let mut generators = Vec::new();
            if !self.eat("}") {
                generators.push(self.int()?);
                while self.eat(",") {
                    generators.push(self.int()?);
                }
                if !self.eat("}") {
                    return Err(self.error(&[",", "}"]));
                }
            }
            self.expect(")")?;
            return Ok(ConstructionAst::Quotient { base, generators });
        }
        if self.eat("corner") {
            let (base, idempotent) = self.expr_and_int()?;
            return Ok(ConstructionAst::Corner { base: Box::new(base), idempotent });
        }
        if self.eat("GR") {
            self.expect("(")?;
            let base = Box::new(self.expr()?);
            self.expect(",")?;
            let group = self.group()?;
            self.expect(")")?;
            return Ok(ConstructionAst::GroupRing { base, group });
        }
        // `K` last so it cannot shadow a longer keyword
        if self.eat("K") {
            let (base, multiplier) = self.expr_and_int()?;
            return Ok(ConstructionAst::GenMatrix { base: Box::new(base), multiplier });
        }
        Err(self.error(&EXPR_STARTS))
    }

    fn parenthesized(&mut self) -> PResult<ConstructionAst> {
        self.expect("(")?;
        let inner = self.expr()?;
        self.expect(")")?;
        Ok(inner)
    }

    fn expr_and_int(&mut self) -> PResult<(ConstructionAst, usize)> {
        self.expect("(")?;
        let base = self.expr()?;
        self.expect(",")?;
        let n = self.int()?;
        self.expect(")")?;
        Ok((base, n))
    }

    fn group(&mut self) -> PResult<GroupSpec> {
        self.skip_ws();
        if self.eat("@") {
            let len = self.rest().find(')').unwrap_or(self.rest().len());
            let path = self.rest()[..len].trim();
            if path.is_empty() {
                return Err(self.error(&["file path"]));
            }
            self.pos += len;
            return Ok(GroupSpec::File(PathBuf::from(path)));
        }
        for name in ["C2xC2", "S3", "D4", "Q8"] {
            if self.eat(name) {
                return Ok(GroupSpec::Builtin(name.to_string()));
            }
        }
        if let Some(n) = self.prefixed_int("C")? {
            return Ok(GroupSpec::Builtin(format!("C{n}")));
        }
        Err(self.error(&["C", "C2xC2", "S3", "D4", "Q8", "@"]))
    }
}

/// Parse a single expression; trailing input is an error.
pub fn parse_ring_expr(text: &str) -> Result<ConstructionAst, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let ast = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error(&["end of input"]));
    }
    Ok(ast)
}

/// Parse and evaluate.
pub fn build_ring(text: &str) -> Result<FiniteRing> {
    eval_ast(&parse_ring_expr(text)?)
}

/// One expression of a catalog manifest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    /// 1-based line number.
    pub line: usize,
    pub ast: ConstructionAst,
}

/// Parse a catalog manifest: one expression per line, `#` starts a comment,
/// blank lines are ignored. Error offsets are relative to the whole text.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, ParseError> {
    let mut entries = Vec::new();
    let mut line_start = 0;
    for (i, raw) in text.split_inclusive('\n').enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim_end();
        if !body.trim().is_empty() {
            let ast = parse_ring_expr(body).map_err(|e| ParseError { offset: e.offset + line_start, ..e })?;
            entries.push(CatalogEntry { line: i + 1, ast });
        }
        line_start += raw.len();
    }
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_examples() {
        assert_eq!(
            parse_ring_expr("M2(Z2)").unwrap(),
            ConstructionAst::Matrix { size: 2, base: Box::new(ConstructionAst::Zn(2)) }
        );
        assert_eq!(
            parse_ring_expr("K(Z4,2)").unwrap(),
            ConstructionAst::GenMatrix { base: Box::new(ConstructionAst::Zn(4)), multiplier: 2 }
        );
        let err = parse_ring_expr("GR(Z4,C2xC2").unwrap_err();
        assert_eq!(err.offset, 11);
        assert_eq!(err.expected, vec![")".to_string()]);
        assert_eq!(err.found, None);
    }

    #[test]
    fn canonical_display_round_trips() {
        for text in [
            "Z1",
            "prod(Z2,Z4,Z3)",
            "T3(Z2)",
            "quot(Z8,{4})",
            "quot(Z8,{})",
            "corner(M2(Z2),8)",
            "GR(Z2,C2xC2)",
            "GR(Z4,C12)",
            "GR(Z2,@groups/c3.txt)",
            "K(K(Z2,1),0)",
        ] {
            assert_eq!(parse_ring_expr(text).unwrap().to_string(), text);
        }
        assert_eq!(parse_ring_expr("  prod( Z2 , M2 (Z2) ) ").unwrap().to_string(), "prod(Z2,M2(Z2))");
    }

    #[test]
    fn diagnostics() {
        let err = parse_ring_expr("X4").unwrap_err();
        assert_eq!(err.offset, 0);
        assert!(err.expected.contains(&"prod".to_string()));
        assert_eq!(parse_ring_expr("Z4 Z4").unwrap_err().offset, 3);
        assert_eq!(parse_ring_expr("quot(Z4,{2 3})").unwrap_err().expected, vec![",", "}"]);
        assert_eq!(parse_ring_expr("M(Z2)").unwrap_err().offset, 0);
        assert_eq!(parse_ring_expr("GR(Z2,A5)").unwrap_err().offset, 6);
    }

    #[test]
    fn catalogs() {
        let entries = parse_catalog("# rings\nZ2\n\nM2(Z2)  # simple\n").unwrap();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[1].line, 4);
        let err = parse_catalog("Z2\nK(Z4)\n").unwrap_err();
        assert_eq!(err.offset, 3 + 4);
    }
}
