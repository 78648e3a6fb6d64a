use alloc::vec::Vec;

use super::{ExprError, OpSym, Span};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Number,
    OpSym(OpSym),
    Star,
    Caret,
    LParen,
    RParen,
    Ident,
    RotKw,
    Comma,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token<'a> {
    pub kind: TokenKind,
    pub lexeme: &'a str,
    pub span: Span,
}

/// Splits `text` into tokens, skipping whitespace.
///
/// Words other than `I`, `J`, `i` and `rot` are rejected whole, so `Ix`
/// is one error rather than a constant followed by garbage.
pub fn tokenize(text: &str) -> Result<Vec<Token<'_>>, ExprError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(start, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
            continue;
        }
        let single = match ch {
            '*' => Some(TokenKind::Star),
            '^' => Some(TokenKind::Caret),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            ',' => Some(TokenKind::Comma),
            _ => OpSym::from_char(ch).map(TokenKind::OpSym),
        };
        let (kind, end) = if let Some(kind) = single {
            chars.next();
            (kind, start + ch.len_utf8())
        } else if ch.is_ascii_digit() {
            let mut end = take_digits(&mut chars);
            let mut rest = text[end..].chars();
            if rest.next() == Some('.') {
                if !rest.next().is_some_and(|c| c.is_ascii_digit()) {
                    return Err(ExprError::Lex {
                        span: Span::new(end, end + 1),
                    });
                }
                chars.next();
                end = take_digits(&mut chars);
            }
            (TokenKind::Number, end)
        } else if ch.is_alphabetic() {
            let mut end = start;
            while let Some(&(i, c)) = chars.peek() {
                if !c.is_alphanumeric() {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            let kind = match &text[start..end] {
                "I" | "J" | "i" => TokenKind::Ident,
                "rot" => TokenKind::RotKw,
                _ => {
                    return Err(ExprError::Lex {
                        span: Span::new(start, end),
                    })
                }
            };
            (kind, end)
        } else {
            return Err(ExprError::Lex {
                span: Span::new(start, start + ch.len_utf8()),
            });
        };
        tokens.push(Token {
            kind,
            lexeme: &text[start..end],
            span: Span::new(start, end),
        });
    }
    Ok(tokens)
}

fn take_digits(chars: &mut core::iter::Peekable<core::str::CharIndices<'_>>) -> usize {
    let mut end = 0;
    while let Some(&(i, c)) = chars.peek() {
        if !c.is_ascii_digit() {
            break;
        }
        end = i + 1;
        chars.next();
    }
    end
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn kinds(text: &str) -> Vec<TokenKind> {
        tokenize(text).unwrap().iter().map(|t| t.kind).collect()
    }

    #[test]
    fn transliteration() {
        assert_eq!(
            kinds("2 / 3"),
            vec![
                TokenKind::Number,
                TokenKind::OpSym(OpSym::Slash),
                TokenKind::Number
            ]
        );
        let tokens = tokenize("rot(1,5)*2").unwrap();
        let got: Vec<(TokenKind, &str)> = tokens.iter().map(|t| (t.kind, t.lexeme)).collect();
        assert_eq!(
            got,
            vec![
                (TokenKind::RotKw, "rot"),
                (TokenKind::LParen, "("),
                (TokenKind::Number, "1"),
                (TokenKind::Comma, ","),
                (TokenKind::Number, "5"),
                (TokenKind::RParen, ")"),
                (TokenKind::Star, "*"),
                (TokenKind::Number, "2"),
            ]
        );
    }

    #[test]
    fn every_opsym() {
        let ops: Vec<TokenKind> = "+-/\\_~="
            .chars()
            .map(|c| TokenKind::OpSym(OpSym::from_char(c).unwrap()))
            .collect();
        assert_eq!(kinds("+ - / \\ _ ~ ="), ops);
    }

    #[test]
    fn decimals_and_spans() {
        let tokens = tokenize("  12.50*I^3").unwrap();
        assert_eq!(tokens[0].lexeme, "12.50");
        assert_eq!(tokens[0].span, Span::new(2, 7));
        assert_eq!(tokens[2].kind, TokenKind::Ident);
        assert_eq!(tokens.last().unwrap().span, Span::new(10, 11));
    }

    #[test]
    fn rejections() {
        assert_eq!(
            tokenize("2 ? 3"),
            Err(ExprError::Lex {
                span: Span::new(2, 3)
            })
        );
        assert_eq!(
            tokenize("Ix"),
            Err(ExprError::Lex {
                span: Span::new(0, 2)
            })
        );
        assert_eq!(
            tokenize("3."),
            Err(ExprError::Lex {
                span: Span::new(1, 2)
            })
        );
        assert_eq!(
            tokenize("1 ⁄ 2"),
            Err(ExprError::Lex {
                span: Span::new(2, 5)
            })
        );
    }
}
