//! A small ASCII language for pseudo-operator arithmetic.
//!
//! `2 / 3` reads "advance 2, then advance 3 in the slash direction": the
//! operator symbols are rotations, not arithmetic. The mapping is
//!
//! | symbol | rotation     | meaning                 |
//! |--------|--------------|-------------------------|
//! | `+`    | `rot(0,1)`   | identity                |
//! | `-`    | `rot(1,2)`   | half turn               |
//! | `/`    | `rot(1,3)`   | slash, `exp(2πi/3)`     |
//! | `\`    | `rot(2,3)`   | anti-slash, `exp(4πi/3)`|
//! | `_`    | `rot(1,4)`   | `⊥`, `i`                |
//! | `~`    | `rot(3,4)`   | `⊤`, `-i`               |
//! | `=`    | `rot(1,2)`   | `⊣`, `-1`               |
//!
//! The constants `I`, `J` and `i` are `exp(iπ/3)`, `exp(iπ/4)` and
//! `exp(iπ/2)`; `rot(k,n)` is `exp(2πik/n)`. There is no subtraction or
//! division.

mod lexer;
mod parser;

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::unity::Rotor;
use crate::Complex;

pub use lexer::{tokenize, Token, TokenKind};
pub use parser::parse;

/// Half-open byte range `start..end` into the source text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub const fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("unrecognized input at bytes {span}")]
    Lex { span: Span },
    #[error("unexpected input at bytes {span}, expected one of: {}", .expected.join(", "))]
    Parse {
        span: Span,
        expected: Vec<&'static str>,
    },
    #[error("literal at bytes {span} is out of range")]
    Range { span: Span },
    #[error("value is not finite")]
    NonFinite,
}

impl ExprError {
    pub fn span(&self) -> Option<Span> {
        match self {
            ExprError::Lex { span } | ExprError::Parse { span, .. } | ExprError::Range { span } => {
                Some(*span)
            }
            ExprError::NonFinite => None,
        }
    }
}

/// A chain operator symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OpSym {
    Plus,
    Minus,
    Slash,
    Backslash,
    Perp,
    Top,
    Dashv,
}

impl OpSym {
    pub const ALL: [OpSym; 7] = [
        OpSym::Plus,
        OpSym::Minus,
        OpSym::Slash,
        OpSym::Backslash,
        OpSym::Perp,
        OpSym::Top,
        OpSym::Dashv,
    ];

    pub fn from_char(c: char) -> Option<OpSym> {
        OpSym::ALL.into_iter().find(|op| op.symbol() == c)
    }

    pub fn symbol(self) -> char {
        match self {
            OpSym::Plus => '+',
            OpSym::Minus => '-',
            OpSym::Slash => '/',
            OpSym::Backslash => '\\',
            OpSym::Perp => '_',
            OpSym::Top => '~',
            OpSym::Dashv => '=',
        }
    }

    pub fn rotor(self) -> Rotor {
        match self {
            OpSym::Plus => Rotor::IDENTITY,
            OpSym::Minus | OpSym::Dashv => Rotor::DASHV,
            OpSym::Slash => Rotor::SLASH,
            OpSym::Backslash => Rotor::ASLASH,
            OpSym::Perp => Rotor::PERP,
            OpSym::Top => Rotor::TOP,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constant {
    /// `I = exp(iπ/3)`
    I,
    /// `J = exp(iπ/4)`
    J,
    /// `i = exp(iπ/2)`
    SmallI,
}

impl Constant {
    pub fn rotor(self) -> Rotor {
        match self {
            Constant::I => Rotor::PSEUDO_I,
            Constant::J => Rotor::PSEUDO_J,
            Constant::SmallI => Rotor::PERP,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Constant::I => "I",
            Constant::J => "J",
            Constant::SmallI => "i",
        }
    }
}

/// Expression tree. `Number` holds a finite, non-negative literal; a sign
/// is written with a chain operator instead.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Number(f64),
    Const(Constant),
    /// `rot(num, den)` as written, not reduced.
    Rot(i64, u64),
    /// Never empty. Each term is turned by its operator, then summed.
    Chain(Vec<(OpSym, Expr)>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
}

impl Expr {
    pub fn evaluate(&self) -> Result<Complex, ExprError> {
        let value = self.eval_raw();
        if value.re.is_finite() && value.im.is_finite() {
            Ok(value)
        } else {
            Err(ExprError::NonFinite)
        }
    }

    fn eval_raw(&self) -> Complex {
        match self {
            Expr::Number(x) => Complex::new(*x, 0.0),
            Expr::Const(c) => c.rotor().value(),
            Expr::Rot(num, den) => Rotor::new(*num, *den)
                .map(Rotor::value)
                .unwrap_or(Complex::new(f64::NAN, f64::NAN)),
            Expr::Chain(terms) => terms
                .iter()
                .map(|(op, term)| op.rotor().value() * term.eval_raw())
                .sum(),
            Expr::Mul(a, b) => a.eval_raw() * b.eval_raw(),
            Expr::Pow(base, k) => base.eval_raw().powi(*k),
        }
    }

    /// Nesting depth; atoms have depth 1.
    pub fn depth(&self) -> usize {
        match self {
            Expr::Number(_) | Expr::Const(_) | Expr::Rot(..) => 1,
            Expr::Chain(terms) => 1 + terms.iter().map(|(_, t)| t.depth()).max().unwrap_or(0),
            Expr::Mul(a, b) => 1 + a.depth().max(b.depth()),
            Expr::Pow(base, _) => 1 + base.depth(),
        }
    }

    fn is_atom(&self) -> bool {
        matches!(self, Expr::Number(_) | Expr::Const(_) | Expr::Rot(..))
    }
}

/// Parses and evaluates in one step.
pub fn evaluate_str(text: &str) -> Result<Complex, ExprError> {
    parse(text)?.evaluate()
}

/// Canonical text of `e`; [`parse`] reads it back to the same tree.
pub fn format(e: &Expr) -> String {
    alloc::format!("{e}")
}

fn write_parened(f: &mut fmt::Formatter<'_>, e: &Expr, paren: bool) -> fmt::Result {
    if paren {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(x) if *x == 0.0 => write!(f, "0"),
            Expr::Number(x) => write!(f, "{x}"),
            Expr::Const(c) => write!(f, "{}", c.name()),
            Expr::Rot(num, den) => write!(f, "rot({num},{den})"),
            Expr::Chain(terms) => {
                for (idx, (op, term)) in terms.iter().enumerate() {
                    let nested = matches!(term, Expr::Chain(_));
                    if idx == 0 {
                        if terms.len() == 1 || *op != OpSym::Plus {
                            write!(f, "{}", op.symbol())?;
                        }
                    } else {
                        write!(f, " {} ", op.symbol())?;
                    }
                    write_parened(f, term, nested)?;
                }
                Ok(())
            }
            Expr::Mul(a, b) => {
                write_parened(f, a, matches!(**a, Expr::Chain(_)))?;
                write!(f, "*")?;
                write_parened(f, b, matches!(**b, Expr::Chain(_) | Expr::Mul(..)))
            }
            Expr::Pow(base, k) => {
                write_parened(f, base, !base.is_atom())?;
                write!(f, "^{k}")
            }
        }
    }
}
