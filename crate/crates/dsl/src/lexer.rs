use num_bigint::BigInt;

use crate::diag::{Diagnostic, Phase, Span};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Int(BigInt),
    Ident(String),
    /// `x<k>`
    Var(usize),
    Z,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Wedge,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Assign,
    EqEq,
    Arrow,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Var(k) => format!("variable `x{k}`"),
            Tok::Z => "variable `z`".into(),
            Tok::Eof => "end of input".into(),
            other => format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::Wedge => "/\\",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
            Tok::Semi => ";",
            Tok::Assign => "=",
            Tok::EqEq => "==",
            Tok::Arrow => "->",
            _ => "",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

/// Splits source text into tokens. `#` starts a comment running to the end
/// of the line. The final `Eof` token carries the position of the last real
/// token so that every diagnostic points inside the text.
pub fn lex(src: &str) -> Result<Vec<Token>, Diagnostic> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let span = Span::new(line, col);
        let advance = |n: usize, col: &mut usize, i: &mut usize| {
            *i += n;
            *col += n;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => advance(1, &mut col, &mut i),
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    advance(1, &mut col, &mut i);
                }
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    advance(1, &mut col, &mut i);
                }
                let text: String = chars[start..i].iter().collect();
                let n: BigInt = text.parse().expect("digits");
                out.push(Token { tok: Tok::Int(n), span });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    advance(1, &mut col, &mut i);
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Token {
                    tok: classify_word(&text, span)?,
                    span,
                });
            }
            _ => {
                let next = chars.get(i + 1).copied();
                let (tok, len) = match (c, next) {
                    ('/', Some('\\')) => (Tok::Wedge, 2),
                    ('-', Some('>')) => (Tok::Arrow, 2),
                    ('=', Some('=')) => (Tok::EqEq, 2),
                    ('+', _) => (Tok::Plus, 1),
                    ('-', _) => (Tok::Minus, 1),
                    ('*', _) => (Tok::Star, 1),
                    ('/', _) => (Tok::Slash, 1),
                    ('^', _) => (Tok::Caret, 1),
                    ('(', _) => (Tok::LParen, 1),
                    (')', _) => (Tok::RParen, 1),
                    ('[', _) => (Tok::LBracket, 1),
                    (']', _) => (Tok::RBracket, 1),
                    (',', _) => (Tok::Comma, 1),
                    (';', _) => (Tok::Semi, 1),
                    ('=', _) => (Tok::Assign, 1),
                    ('.', _) => {
                        return Err(Diagnostic::new(
                            Phase::Lex,
                            span,
                            "decimal points are not allowed; write rationals as p/q",
                        ))
                    }
                    _ => {
                        return Err(Diagnostic::new(
                            Phase::Lex,
                            span,
                            format!("unexpected character `{c}`"),
                        ))
                    }
                };
                out.push(Token { tok, span });
                advance(len, &mut col, &mut i);
            }
        }
    }
    let eof_span = out.last().map_or(Span::new(1, 1), |t| t.span);
    out.push(Token {
        tok: Tok::Eof,
        span: eof_span,
    });
    Ok(out)
}

fn classify_word(text: &str, span: Span) -> Result<Tok, Diagnostic> {
    if text == "z" {
        return Ok(Tok::Z);
    }
    if let Some(digits) = text.strip_prefix('x') {
        if !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit()) {
            return digits.parse().map(Tok::Var).map_err(|_| {
                Diagnostic::new(Phase::Lex, span, format!("variable index in `{text}` is too large"))
            });
        }
    }
    Ok(Tok::Ident(text.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(src: &str) -> Vec<Tok> {
        lex(src).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn operators_and_words() {
        assert_eq!(
            toks("w = d(x0) /\\ d(x12); # c\n-> == z"),
            vec![
                Tok::Ident("w".into()),
                Tok::Assign,
                Tok::Ident("d".into()),
                Tok::LParen,
                Tok::Var(0),
                Tok::RParen,
                Tok::Wedge,
                Tok::Ident("d".into()),
                Tok::LParen,
                Tok::Var(12),
                Tok::RParen,
                Tok::Semi,
                Tok::Arrow,
                Tok::EqEq,
                Tok::Z,
                Tok::Eof,
            ]
        );
    }

    #[test]
    fn positions() {
        let t = lex("a\n  bb = 3;").unwrap();
        assert_eq!(t[1].span, Span::new(2, 3));
        assert_eq!(t[3].span, Span::new(2, 8));
        assert_eq!(t.last().unwrap().span, Span::new(2, 9));
    }

    #[test]
    fn rejects_floats_and_junk() {
        let e = lex("w = 1.5;").unwrap_err();
        assert_eq!(e.span, Span::new(1, 6));
        assert!(lex("w = $;").is_err());
    }

    #[test]
    fn identifiers_that_look_like_variables() {
        assert_eq!(toks("xa x_1 x3b")[..3], [
            Tok::Ident("xa".into()),
            Tok::Ident("x_1".into()),
            Tok::Ident("x3b".into()),
        ]);
    }
}
