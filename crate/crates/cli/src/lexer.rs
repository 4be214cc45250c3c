//! Tokenizer. A statement that starts with an engine command name is captured as
//! raw words up to the next `;`.

use num_bigint::BigInt;

use crate::ast::Span;
use crate::diag::{DiagKind, Diagnostic};

pub const COMMANDS: &[&str] = &[
    "hilbert",
    "ext",
    "betti",
    "fit",
    "complexity",
    "invariants",
    "verify",
    "superficial",
    "reduce",
    "gen-pair",
    "report",
];

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    Command(Vec<String>),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Colon,
    Eq,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Arrow,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Command(w) => format!("command `{}`", w[0]),
            Tok::Eof => "end of input".into(),
            t => format!("`{}`", t.symbol()),
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
            Tok::Semi => ";",
            Tok::Colon => ":",
            Tok::Eq => "=",
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::Arrow => "<-",
            _ => "",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

pub fn lex(src: &str) -> Result<Vec<Token>, Diagnostic> {
    let bytes = src.as_bytes();
    let mut out: Vec<Token> = Vec::new();
    let mut i = 0;
    let mut stmt_start = true;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c == b'#' {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        let start = i;
        if stmt_start && c.is_ascii_alphabetic() {
            let mut j = i;
            while j < bytes.len()
                && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_' || bytes[j] == b'-')
            {
                j += 1;
            }
            if COMMANDS.contains(&&src[i..j]) {
                let end = src[i..].find(';').map(|k| i + k).ok_or_else(|| {
                    Diagnostic::new(
                        DiagKind::Syntax,
                        Span::new(i, j),
                        format!("command `{}` is not terminated", &src[i..j]),
                    )
                    .hint("end the command with `;`")
                })?;
                let words = src[i..end].split_whitespace().map(str::to_string).collect();
                out.push(Token {
                    tok: Tok::Command(words),
                    span: Span::new(i, end),
                });
                out.push(Token {
                    tok: Tok::Semi,
                    span: Span::new(end, end + 1),
                });
                i = end + 1;
                continue;
            }
        }
        let tok = if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            Tok::Ident(src[start..i].to_string())
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            Tok::Int(src[start..i].parse().expect("ascii digits"))
        } else {
            i += 1;
            match c {
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b'[' => Tok::LBracket,
                b']' => Tok::RBracket,
                b',' => Tok::Comma,
                b';' => Tok::Semi,
                b':' => Tok::Colon,
                b'=' => Tok::Eq,
                b'+' => Tok::Plus,
                b'-' => Tok::Minus,
                b'*' => Tok::Star,
                b'/' => Tok::Slash,
                b'^' => Tok::Caret,
                b'<' if bytes.get(i) == Some(&b'-') => {
                    i += 1;
                    Tok::Arrow
                }
                _ => {
                    let ch = src[start..].chars().next().unwrap();
                    let hint = match ch {
                        '<' => "maps are written `target <- source`",
                        '.' => "coefficients are integers or fractions `p/q`",
                        _ => "remove the character or start a comment with `#`",
                    };
                    return Err(Diagnostic::new(
                        DiagKind::Lexical,
                        Span::new(start, start + ch.len_utf8()),
                        format!("unexpected character `{ch}`"),
                    )
                    .hint(hint));
                }
            }
        };
        stmt_start = tok == Tok::Semi;
        out.push(Token {
            tok,
            span: Span::new(start, i),
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        span: Span::new(src.len(), src.len()),
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commands_are_captured_whole() {
        let toks = lex("ring Q = rationals[x];\next M N --max-step 10;").unwrap();
        let cmd = toks.iter().find_map(|t| match &t.tok {
            Tok::Command(w) => Some(w.clone()),
            _ => None,
        });
        assert_eq!(cmd.unwrap(), vec!["ext", "M", "N", "--max-step", "10"]);
    }

    #[test]
    fn arrow_and_errors() {
        let toks = lex("R(0) <- R(-1)").unwrap();
        assert!(toks.iter().any(|t| t.tok == Tok::Arrow));
        let e = lex("x = 1.5;").unwrap_err();
        assert_eq!(e.kind, DiagKind::Lexical);
        assert_eq!(e.span.start, 5);
    }
}
