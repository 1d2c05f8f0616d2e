//! Ring expressions such as `S2(M2(Z2))`, `ex22(3) x Z4` or `corner(M2(Z2), 9)`.
//!
//! ```text
//! expr := term { "x" term }
//! term := "Z" INT | ("M" | "T" | "S") INT "(" expr ")" | "ex22" "(" INT ")"
//!       | "corner" "(" expr "," INT ")" | "quotient" "(" expr { "," INT } ")"
//!       | "(" expr ")"
//! ```
//!
//! Names are case-insensitive, whitespace is ignored and `x` (product) binds
//! loosest, associating to the left.

use std::sync::Arc;

use crate::constructors::RingExprPlan;
use crate::kernel::FiniteRing;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

pub fn parse_ring_expr(text: &str) -> Result<RingExprPlan, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty ring expression"));
    }
    let plan = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(plan)
}

/// Parses and builds in one step, refusing rings larger than `cap`.
pub fn build_ring(text: &str, cap: usize) -> crate::Result<Arc<FiniteRing>> {
    parse_ring_expr(text)?.build(cap)
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("corpus line {line} (`{text}`): {source}")]
pub struct CorpusError {
    /// 1-based line number.
    pub line: usize,
    pub text: String,
    pub source: ParseError,
}

/// One ring expression per line; blank lines and `#` comments are skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<RingExprPlan>, CorpusError> {
    let mut plans = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let plan = parse_ring_expr(line)
            .map_err(|source| CorpusError { line: i + 1, text: line.to_string(), source })?;
        plans.push(plan);
    }
    Ok(plans)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { position: self.pos, message: message.into() }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).map(|c| c.to_ascii_lowercase())
    }

    fn keyword(&mut self, word: &str) -> bool {
        let end = self.pos + word.len();
        if end <= self.src.len() && self.src[self.pos..end].eq_ignore_ascii_case(word.as_bytes()) {
            self.pos = end;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(d - b'0')))
                .ok_or_else(|| ParseError { position: start, message: "integer too large".into() })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        Ok(value)
    }

    fn usize(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        let v = self.int()?;
        usize::try_from(v).map_err(|_| ParseError { position: start, message: "integer too large".into() })
    }

    fn expr(&mut self) -> Result<RingExprPlan, ParseError> {
        let mut left = self.term()?;
        loop {
            self.skip_ws();
            if self.peek() != Some(b'x') {
                return Ok(left);
            }
            self.pos += 1;
            let right = self.term()?;
            left = RingExprPlan::Product(Box::new(left), Box::new(right));
        }
    }

    fn term(&mut self) -> Result<RingExprPlan, ParseError> {
        self.skip_ws();
        if self.keyword("corner") {
            self.expect(b'(')?;
            let base = self.expr()?;
            self.skip_ws();
            if self.peek() == Some(b')') {
                return Err(self.error("corner expects a ring and an idempotent"));
            }
            self.expect(b',')?;
            let e = self.usize()?;
            self.expect(b')')?;
            return Ok(RingExprPlan::Corner(Box::new(base), e));
        }
        if self.keyword("quotient") {
            self.expect(b'(')?;
            let base = self.expr()?;
            let mut gens = Vec::new();
            loop {
                self.skip_ws();
                if self.peek() != Some(b',') {
                    break;
                }
                self.pos += 1;
                gens.push(self.usize()?);
            }
            self.expect(b')')?;
            return Ok(RingExprPlan::Quotient(Box::new(base), gens));
        }
        if self.keyword("ex22") {
            self.expect(b'(')?;
            let p = self.int()?;
            self.expect(b')')?;
            return Ok(RingExprPlan::Ex22(p));
        }
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(RingExprPlan::Zn(self.usize()?))
            }
            Some(c @ (b'm' | b't' | b's')) => {
                self.pos += 1;
                let k = self.usize()?;
                self.expect(b'(')?;
                let base = Box::new(self.expr()?);
                self.expect(b')')?;
                Ok(match c {
                    b'm' => RingExprPlan::Matrix(k, base),
                    b't' => RingExprPlan::UpperTriangular(k, base),
                    _ => RingExprPlan::SkewTriangular(k, base),
                })
            }
            Some(_) => Err(self.error("expected a ring constructor")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use RingExprPlan::*;

    #[test]
    fn corpus_lines_and_comments() {
        let plans = parse_corpus("# rings\nZ4\n\n  S2(Z2)  # skew\n").unwrap();
        assert_eq!(plans.len(), 2);
        let err = parse_corpus("Z4\nM2(Z2\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.to_string().contains("line 2"));
    }

    #[test]
    fn parses_constructors() {
        assert_eq!(parse_ring_expr("Z8").unwrap(), Zn(8));
        assert_eq!(
            parse_ring_expr("S2(M2(Z2))").unwrap(),
            SkewTriangular(2, Box::new(Matrix(2, Box::new(Zn(2)))))
        );
        assert_eq!(
            parse_ring_expr(" EX22( 3 )xz4 ").unwrap(),
            Product(Box::new(Ex22(3)), Box::new(Zn(4)))
        );
        assert_eq!(parse_ring_expr("corner(M2(Z2), 9)").unwrap(), Corner(Box::new(Matrix(2, Box::new(Zn(2)))), 9));
        assert_eq!(parse_ring_expr("quotient(Z8, 4)").unwrap(), Quotient(Box::new(Zn(8)), vec![4]));
    }

    #[test]
    fn product_is_left_associative() {
        let plan = parse_ring_expr("Z2 x Z3 x Z4").unwrap();
        assert_eq!(plan, Product(Box::new(Product(Box::new(Zn(2)), Box::new(Zn(3)))), Box::new(Zn(4))));
        let nested = parse_ring_expr("Z2 x (Z3 x Z4)").unwrap();
        assert_eq!(parse_ring_expr(&nested.to_string()).unwrap(), nested);
    }

    #[test]
    fn reports_error_positions() {
        assert_eq!(parse_ring_expr("M2(Z2").unwrap_err().position, 5);
        assert_eq!(parse_ring_expr("Q5").unwrap_err().position, 0);
        assert_eq!(parse_ring_expr("Z2 x").unwrap_err().position, 4);
        assert!(parse_ring_expr("corner(Z4)").unwrap_err().message.contains("idempotent"));
        assert!(parse_ring_expr("").is_err());
        assert!(parse_ring_expr("Z99999999999999999999999").is_err());
    }
}
