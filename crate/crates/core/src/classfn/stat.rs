//! A small expression language for factorization statistics.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := INT | 'x'INT | '(' expr ')'
//!         | ('binom' | 'multichoose') '(' expr ',' INT ')'
//!         | '-' factor
//! ```
//!
//! The variable `x_k` evaluates on a partition to `m_k`, the number of
//! parts of size `k`, so an expression denotes one class function per
//! degree `d` simultaneously (a character polynomial). `binom` and
//! `multichoose` take a rational first argument and expand as falling and
//! rising factorials over `m!`.

use std::fmt;

use crate::algebra::Rat;
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Abstract syntax of a statistic expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StatExpr {
    Int(i64),
    /// `x_k` with `k >= 1`.
    Var(u32),
    Neg(Box<StatExpr>),
    Add(Box<StatExpr>, Box<StatExpr>),
    Sub(Box<StatExpr>, Box<StatExpr>),
    Mul(Box<StatExpr>, Box<StatExpr>),
    Binom(Box<StatExpr>, u32),
    Multichoose(Box<StatExpr>, u32),
}

impl StatExpr {
    /// Exact evaluation at a partition, substituting `x_k -> m_k`.
    pub fn eval(&self, lambda: &Partition) -> Rat {
        match self {
            StatExpr::Int(n) => Rat::from_int(*n),
            StatExpr::Var(k) => Rat::from_int(lambda.multiplicity(*k) as i64),
            StatExpr::Neg(e) => -e.eval(lambda),
            StatExpr::Add(a, b) => a.eval(lambda) + b.eval(lambda),
            StatExpr::Sub(a, b) => a.eval(lambda) - b.eval(lambda),
            StatExpr::Mul(a, b) => a.eval(lambda) * b.eval(lambda),
            StatExpr::Binom(e, m) => falling_over_factorial(&e.eval(lambda), *m),
            StatExpr::Multichoose(e, m) => rising_over_factorial(&e.eval(lambda), *m),
        }
    }
}

fn falling_over_factorial(x: &Rat, m: u32) -> Rat {
    let mut acc = Rat::one();
    let mut factorial = Rat::one();
    for i in 0..m {
        acc = acc * (x - &Rat::from_int(i as i64));
        factorial = factorial * Rat::from_int((i + 1) as i64);
    }
    acc / factorial
}

fn rising_over_factorial(x: &Rat, m: u32) -> Rat {
    let mut acc = Rat::one();
    let mut factorial = Rat::one();
    for i in 0..m {
        acc = acc * (x + &Rat::from_int(i as i64));
        factorial = factorial * Rat::from_int((i + 1) as i64);
    }
    acc / factorial
}

impl fmt::Display for StatExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatExpr::Int(n) => write!(f, "{n}"),
            StatExpr::Var(k) => write!(f, "x{k}"),
            StatExpr::Neg(e) => write!(f, "-({e})"),
            StatExpr::Add(a, b) => write!(f, "({a} + {b})"),
            StatExpr::Sub(a, b) => write!(f, "({a} - {b})"),
            StatExpr::Mul(a, b) => write!(f, "({a} * {b})"),
            StatExpr::Binom(e, m) => write!(f, "binom({e},{m})"),
            StatExpr::Multichoose(e, m) => write!(f, "multichoose({e},{m})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    Comma,
}

struct Lexer<'a> {
    src: &'a str,
    /// (byte position, token)
    tokens: Vec<(usize, Token)>,
}

fn lex(src: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                tokens.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                tokens.push((i, Token::Star));
                i += 1;
            }
            '(' => {
                tokens.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((i, Token::RParen));
                i += 1;
            }
            ',' => {
                tokens.push((i, Token::Comma));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &src[start..i];
                let value: i64 = text.parse().map_err(|_| Error::StatParse {
                    pos: start,
                    message: format!("integer literal out of range: {text}"),
                })?;
                tokens.push((start, Token::Int(value)));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                tokens.push((start, Token::Ident(src[start..i].to_string())));
            }
            other => {
                return Err(Error::StatParse {
                    pos: i,
                    message: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.lexer.tokens.get(self.pos)
    }

    fn advance(&mut self) -> Option<(usize, Token)> {
        let t = self.lexer.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn end_pos(&self) -> usize {
        self.lexer.src.len()
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<()> {
        match self.advance() {
            Some((_, tok)) if tok == want => Ok(()),
            Some((p, tok)) => Err(Error::StatParse {
                pos: p,
                message: format!("expected {what}, found {tok:?}"),
            }),
            None => Err(Error::StatParse {
                pos: self.end_pos(),
                message: format!("expected {what}, found end of input"),
            }),
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<i64> {
        match self.advance() {
            Some((_, Token::Int(n))) => Ok(n),
            Some((p, tok)) => Err(Error::StatParse {
                pos: p,
                message: format!("expected {what}, found {tok:?}"),
            }),
            None => Err(Error::StatParse {
                pos: self.end_pos(),
                message: format!("expected {what}, found end of input"),
            }),
        }
    }

    fn expr(&mut self) -> Result<StatExpr> {
        let mut acc = self.term()?;
        while let Some((_, tok)) = self.peek() {
            match tok {
                Token::Plus => {
                    self.advance();
                    acc = StatExpr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Token::Minus => {
                    self.advance();
                    acc = StatExpr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<StatExpr> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some((_, Token::Star))) {
            self.advance();
            acc = StatExpr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<StatExpr> {
        match self.advance() {
            Some((_, Token::Int(n))) => Ok(StatExpr::Int(n)),
            Some((_, Token::Minus)) => Ok(StatExpr::Neg(Box::new(self.factor()?))),
            Some((_, Token::LParen)) => {
                let inner = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(inner)
            }
            Some((p, Token::Ident(name))) => self.ident_factor(p, &name),
            Some((p, tok)) => Err(Error::StatParse {
                pos: p,
                message: format!("expected a factor, found {tok:?}"),
            }),
            None => Err(Error::StatParse {
                pos: self.end_pos(),
                message: "expected a factor, found end of input".into(),
            }),
        }
    }

    fn ident_factor(&mut self, pos: usize, name: &str) -> Result<StatExpr> {
        if let Some(k) = parse_var_name(name) {
            return Ok(StatExpr::Var(k));
        }
        match name {
            "binom" | "multichoose" => {
                self.expect(Token::LParen, "'('")?;
                let inner = self.expr()?;
                self.expect(Token::Comma, "','")?;
                let m = self.expect_int("an integer literal")?;
                if m < 0 {
                    return Err(Error::StatParse {
                        pos,
                        message: format!("{name} needs a nonnegative integer, got {m}"),
                    });
                }
                self.expect(Token::RParen, "')'")?;
                let boxed = Box::new(inner);
                Ok(if name == "binom" {
                    StatExpr::Binom(boxed, m as u32)
                } else {
                    StatExpr::Multichoose(boxed, m as u32)
                })
            }
            _ => Err(Error::StatParse {
                pos,
                message: format!("unknown identifier '{name}'"),
            }),
        }
    }
}

/// Interprets `x<digits>` with `k >= 1`.
fn parse_var_name(name: &str) -> Option<u32> {
    let rest = name.strip_prefix('x')?;
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let k: u32 = rest.parse().ok()?;
    (k >= 1).then_some(k)
}

/// Parses statistic source text into an AST. Errors carry the byte offset
/// of the offending token.
pub fn parse_stat(src: &str) -> Result<StatExpr> {
    let tokens = lex(src)?;
    if tokens.is_empty() {
        return Err(Error::StatParse {
            pos: 0,
            message: "empty statistic expression".into(),
        });
    }
    let mut parser = Parser {
        lexer: Lexer { src, tokens },
        pos: 0,
    };
    let expr = parser.expr()?;
    if let Some((p, tok)) = parser.peek() {
        return Err(Error::StatParse {
            pos: *p,
            message: format!("unexpected trailing input {tok:?}"),
        });
    }
    Ok(expr)
}
