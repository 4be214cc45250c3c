//! Script diagnostics with line/column positions and a one-line fix hint.

use std::fmt;

use thiserror::Error;

use crate::ast::Span;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagKind {
    Lexical,
    Syntax,
    Binding,
    Homogeneity,
}

impl fmt::Display for DiagKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagKind::Lexical => "lexical error",
            DiagKind::Syntax => "syntax error",
            DiagKind::Binding => "binding error",
            DiagKind::Homogeneity => "homogeneity error",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
#[error("{kind}: {message}")]
pub struct Diagnostic {
    pub kind: DiagKind,
    pub message: String,
    pub span: Span,
    pub hint: Option<String>,
}

impl Diagnostic {
    pub fn new(kind: DiagKind, span: Span, message: impl Into<String>) -> Self {
        Diagnostic {
            kind,
            message: message.into(),
            span,
            hint: None,
        }
    }

    pub fn hint(mut self, hint: impl Into<String>) -> Self {
        self.hint = Some(hint.into());
        self
    }

    /// 1-based line and column of the span start.
    pub fn line_col(&self, src: &str) -> (usize, usize) {
        line_col(src, self.span.start)
    }

    /// `file:line:col: kind: message`, the offending line with a caret, then the hint.
    pub fn render(&self, file: &str, src: &str) -> String {
        let (line, col) = self.line_col(src);
        let text = src.lines().nth(line - 1).unwrap_or("");
        let width = (self.span.end.saturating_sub(self.span.start))
            .clamp(1, text.len().saturating_sub(col - 1).max(1));
        let mut out = format!(
            "{file}:{line}:{col}: {self}\n  | {text}\n  | {}{}",
            " ".repeat(col - 1),
            "^".repeat(width)
        );
        if let Some(h) = &self.hint {
            out.push_str(&format!("\n  = hint: {h}"));
        }
        out
    }
}

pub fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col = before
        .rfind('\n')
        .map_or(before.chars().count(), |i| before[i + 1..].chars().count())
        + 1;
    (line, col)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_are_one_based() {
        let src = "ring Q = rationals[x];\nquotient R = Q/(y);";
        assert_eq!(line_col(src, 0), (1, 1));
        let y = src.rfind('y').unwrap();
        assert_eq!(line_col(src, y), (2, 17));
        let d = Diagnostic::new(
            DiagKind::Binding,
            Span::new(y, y + 1),
            "unknown variable `y`",
        )
        .hint("declared: x");
        let r = d.render("s.ciext", src);
        assert!(r.starts_with("s.ciext:2:17: binding error: unknown variable `y`"));
        assert!(r.ends_with("hint: declared: x"));
    }
}
