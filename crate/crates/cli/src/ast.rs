//! Syntax tree of session scripts. Every node carries the byte span it was parsed from.

use num_bigint::BigInt;

/// Byte range into the script source. Spans compare equal so trees compare structurally.
#[derive(Clone, Copy, Debug, Default, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl PartialEq for Span {
    fn eq(&self, _: &Span) -> bool {
        true
    }
}

impl Span {
    pub fn new(start: usize, end: usize) -> Span {
        Span { start, end }
    }

    pub fn to(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Ident {
    pub name: String,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Script {
    pub stmts: Vec<Stmt>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Stmt {
    Ring(RingDecl),
    Quotient(QuotientDecl),
    Module(ModuleDecl),
    Command(CommandStmt),
}

impl Stmt {
    pub fn span(&self) -> Span {
        match self {
            Stmt::Ring(d) => d.span,
            Stmt::Quotient(d) => d.span,
            Stmt::Module(d) => d.span,
            Stmt::Command(c) => c.span,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FieldSpec {
    Rationals,
    Gf { p: u64, span: Span },
}

#[derive(Clone, Debug, PartialEq)]
pub struct VarDecl {
    pub name: Ident,
    pub weight: Option<u32>,
}

/// `ring Q = rationals[x^1, y^2];`
#[derive(Clone, Debug, PartialEq)]
pub struct RingDecl {
    pub name: Ident,
    pub field: FieldSpec,
    pub vars: Vec<VarDecl>,
    pub span: Span,
}

/// `quotient R = Q/(f1, f2);`
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientDecl {
    pub name: Ident,
    pub base: Ident,
    pub gens: Vec<Expr>,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModuleDecl {
    pub name: Ident,
    pub expr: ModuleExpr,
    pub span: Span,
}

/// `R(a)^k`: `k` copies of `R` with generators in degree `−a`.
#[derive(Clone, Debug, PartialEq)]
pub struct Summand {
    pub ring: Ident,
    pub twist: i64,
    pub mult: Option<u32>,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Entry {
    pub expr: Expr,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ModuleExpr {
    /// `coker(F0 <- F1 : [[...], ...])`, matrix row-major with one row per target generator.
    Coker {
        target: Vec<Summand>,
        source: Vec<Summand>,
        rows: Vec<Vec<Entry>>,
        span: Span,
    },
    /// `free(F)`
    Free { summands: Vec<Summand>, span: Span },
    /// `R/(g1, g2)`
    Cyclic {
        ring: Ident,
        gens: Vec<Expr>,
        span: Span,
    },
    /// `residue(R)`
    Residue { ring: Ident, span: Span },
    /// `syzygy(M, i)`
    Syzygy {
        module: Ident,
        step: u32,
        span: Span,
    },
    /// `twist(M, a)`
    Twist {
        module: Ident,
        shift: i64,
        span: Span,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
        }
    }

    pub fn precedence(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigInt, Span),
    Var(Ident),
    Neg(Box<Expr>, Span),
    Bin(BinOp, Box<Expr>, Box<Expr>, Span),
    Pow(Box<Expr>, u32, Span),
}

impl Expr {
    pub fn span(&self) -> Span {
        match self {
            Expr::Num(_, s) | Expr::Neg(_, s) | Expr::Bin(_, _, _, s) | Expr::Pow(_, _, s) => *s,
            Expr::Var(id) => id.span,
        }
    }
}

/// An engine command inside a script, kept as whitespace-separated words.
#[derive(Clone, Debug, PartialEq)]
pub struct CommandStmt {
    pub words: Vec<String>,
    pub span: Span,
}
