use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use super::lexer::{tokenize, Token, TokenKind};
use super::{Constant, Expr, ExprError, OpSym, Span};

/// Parses one expression covering the whole of `text`.
///
/// ```text
/// expr   := [opsym] term { opsym term }
/// term   := factor { "*" factor }
/// factor := atom [ "^" int ]
/// atom   := number | "I" | "J" | "i" | "rot" "(" int "," int ")" | "(" expr ")"
/// ```
pub fn parse(text: &str) -> Result<Expr, ExprError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let expr = parser.expr()?;
    match parser.peek() {
        None => Ok(expr),
        Some(_) => Err(parser.unexpected(&["operator", "end of input"])),
    }
}

struct Parser<'a> {
    tokens: Vec<Token<'a>>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token<'a>> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<TokenKind> {
        self.peek().map(|t| t.kind)
    }

    fn next(&mut self) -> Option<Token<'a>> {
        let token = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        token
    }

    fn unexpected(&self, expected: &[&'static str]) -> ExprError {
        let span = self
            .peek()
            .map(|t| t.span)
            .unwrap_or(Span::new(self.end, self.end));
        ExprError::Parse {
            span,
            expected: expected.to_vec(),
        }
    }

    fn expect(&mut self, kind: TokenKind, name: &'static str) -> Result<Token<'a>, ExprError> {
        if self.peek_kind() == Some(kind) {
            Ok(self.next().expect("peeked"))
        } else {
            Err(self.unexpected(&[name]))
        }
    }

    fn opsym(&mut self) -> Option<OpSym> {
        match self.peek_kind() {
            Some(TokenKind::OpSym(op)) => {
                self.pos += 1;
                Some(op)
            }
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let leading = self.opsym();
        let first = self.term()?;
        if leading.is_none() && !matches!(self.peek_kind(), Some(TokenKind::OpSym(_))) {
            return Ok(first);
        }
        let mut chain = vec![(leading.unwrap_or(OpSym::Plus), first)];
        while let Some(op) = self.opsym() {
            chain.push((op, self.term()?));
        }
        Ok(Expr::Chain(chain))
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.factor()?;
        while self.peek_kind() == Some(TokenKind::Star) {
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.peek_kind() != Some(TokenKind::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let (exponent, span) = self.int()?;
        let exponent = i32::try_from(exponent).map_err(|_| ExprError::Range { span })?;
        Ok(Expr::Pow(Box::new(base), exponent))
    }

    /// An integer literal with an optional `+` or `-` sign.
    fn int(&mut self) -> Result<(i64, Span), ExprError> {
        let sign = match self.peek_kind() {
            Some(TokenKind::OpSym(OpSym::Plus)) => Some(false),
            Some(TokenKind::OpSym(OpSym::Minus)) => Some(true),
            _ => None,
        };
        let start = self.peek().map(|t| t.span.start);
        if sign.is_some() {
            self.pos += 1;
        }
        let token = match self.peek() {
            Some(t) if t.kind == TokenKind::Number && !t.lexeme.contains('.') => {
                self.next().expect("peeked")
            }
            _ => return Err(self.unexpected(&["integer"])),
        };
        let span = Span::new(start.unwrap_or(token.span.start), token.span.end);
        let magnitude: i128 = token
            .lexeme
            .parse()
            .map_err(|_| ExprError::Range { span })?;
        let value = if sign == Some(true) {
            -magnitude
        } else {
            magnitude
        };
        let value = i64::try_from(value).map_err(|_| ExprError::Range { span })?;
        Ok((value, span))
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let expected = ["number", "I", "J", "i", "rot", "("];
        let Some(token) = self.peek().cloned() else {
            return Err(self.unexpected(&expected));
        };
        match token.kind {
            TokenKind::Number => {
                self.pos += 1;
                let value: f64 = token
                    .lexeme
                    .parse()
                    .map_err(|_| ExprError::Range { span: token.span })?;
                if !value.is_finite() {
                    return Err(ExprError::Range { span: token.span });
                }
                Ok(Expr::Number(value))
            }
            TokenKind::Ident => {
                self.pos += 1;
                let c = match token.lexeme {
                    "I" => Constant::I,
                    "J" => Constant::J,
                    _ => Constant::SmallI,
                };
                Ok(Expr::Const(c))
            }
            TokenKind::RotKw => {
                self.pos += 1;
                self.expect(TokenKind::LParen, "(")?;
                let (num, _) = self.int()?;
                self.expect(TokenKind::Comma, ",")?;
                let (den, span) = self.int()?;
                self.expect(TokenKind::RParen, ")")?;
                let den = u64::try_from(den)
                    .ok()
                    .filter(|&d| d > 0)
                    .ok_or(ExprError::Range { span })?;
                Ok(Expr::Rot(num, den))
            }
            TokenKind::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(TokenKind::RParen, ")")?;
                Ok(inner)
            }
            _ => Err(self.unexpected(&expected)),
        }
    }
}
