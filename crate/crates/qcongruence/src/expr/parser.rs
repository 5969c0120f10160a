//! Recursive-descent parser with parse-time sort checking.
//!
//! The language is two-sorted: integer-valued expressions (literals, `n`,
//! `+ - * ^`, `trinom`) and q-valued ones. Exponents and function integer
//! arguments must be integer-valued; using a q-valued expression there is a
//! type error reported with its byte offset. Integer expressions embed
//! silently into q-valued contexts. `/` and negative powers leave the
//! polynomial world, which is why they force the q sort.

use super::lexer::{lex, Tok, Token};
use super::{ExprAst, IntExpr, ParseError, QExpr};

pub fn parse(text: &str) -> Result<ExprAst, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let node = p.sum()?;
    if let Some(t) = p.peek() {
        return Err(ParseError {
            offset: t.offset,
            message: format!("expected end of input, found {}", t.kind.describe()),
        });
    }
    Ok(node.ast)
}

struct Node {
    ast: ExprAst,
    offset: usize,
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn next_if(&mut self, kind: &Tok) -> bool {
        if self.peek().map(|t| &t.kind) == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: &Tok, what: &str) -> Result<(), ParseError> {
        if self.next_if(kind) {
            Ok(())
        } else {
            Err(self.unexpected(what))
        }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        match self.peek() {
            Some(t) => ParseError {
                offset: t.offset,
                message: format!("expected {expected}, found {}", t.kind.describe()),
            },
            None => ParseError {
                offset: self.end,
                message: format!("expected {expected}, found end of input"),
            },
        }
    }

    fn sum(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.product()?;
        loop {
            let plus = if self.next_if(&Tok::Plus) {
                true
            } else if self.next_if(&Tok::Minus) {
                false
            } else {
                return Ok(lhs);
            };
            let rhs = self.product()?;
            lhs = combine_additive(lhs, rhs, plus);
        }
    }

    fn product(&mut self) -> Result<Node, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.next_if(&Tok::Star) {
                let rhs = self.unary()?;
                lhs = combine_mul(lhs, rhs);
            } else if self.next_if(&Tok::Slash) {
                let rhs = self.unary()?;
                let offset = lhs.offset;
                lhs = Node {
                    ast: ExprAst::Q(QExpr::Div(
                        Box::new(lhs.ast.into_q()),
                        Box::new(rhs.ast.into_q()),
                    )),
                    offset,
                };
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Node, ParseError> {
        if let Some(t) = self.peek() {
            if t.kind == Tok::Minus {
                let offset = t.offset;
                self.pos += 1;
                let inner = self.unary()?;
                let ast = match inner.ast {
                    ExprAst::Int(e) => ExprAst::Int(IntExpr::Neg(Box::new(e))),
                    ExprAst::Q(e) => ExprAst::Q(QExpr::Neg(Box::new(e))),
                };
                return Ok(Node { ast, offset });
            }
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node, ParseError> {
        let base = self.atom()?;
        if !self.next_if(&Tok::Caret) {
            return Ok(base);
        }
        // `^` binds tighter than unary minus and associates to the right;
        // parsing the exponent at unary level gives both
        let exp = self.unary()?;
        let exp_int = self.require_int(exp)?;
        let offset = base.offset;
        let ast = match base.ast {
            ExprAst::Int(b) => ExprAst::Int(IntExpr::Pow(Box::new(b), Box::new(exp_int))),
            ExprAst::Q(b) => ExprAst::Q(QExpr::Pow(Box::new(b), exp_int)),
        };
        Ok(Node { ast, offset })
    }

    fn atom(&mut self) -> Result<Node, ParseError> {
        let Some(t) = self.peek().cloned() else {
            return Err(self.unexpected("an expression"));
        };
        match t.kind {
            Tok::Int(v) => {
                self.pos += 1;
                Ok(Node {
                    ast: ExprAst::Int(IntExpr::Literal(v)),
                    offset: t.offset,
                })
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.sum()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(Node {
                    ast: inner.ast,
                    offset: t.offset,
                })
            }
            Tok::Ident(name) => {
                self.pos += 1;
                self.ident(&name, t.offset)
            }
            other => Err(ParseError {
                offset: t.offset,
                message: format!("expected an expression, found {}", other.describe()),
            }),
        }
    }

    fn ident(&mut self, name: &str, offset: usize) -> Result<Node, ParseError> {
        let ast = match name {
            "q" => return Ok(Node { ast: ExprAst::Q(QExpr::Q), offset }),
            "n" => return Ok(Node { ast: ExprAst::Int(IntExpr::N), offset }),
            "qint" => {
                let [a] = self.args::<1>(name)?;
                ExprAst::Q(QExpr::QInt(self.require_int(a)?))
            }
            "qbinom" => {
                let [a, b] = self.args::<2>(name)?;
                ExprAst::Q(QExpr::QBinom(self.require_int(a)?, self.require_int(b)?))
            }
            "qtrinom" => {
                let [a, b] = self.args::<2>(name)?;
                ExprAst::Q(QExpr::QTrinom(self.require_int(a)?, self.require_int(b)?))
            }
            "cyclo" => {
                let [a] = self.args::<1>(name)?;
                ExprAst::Q(QExpr::Cyclo(self.require_int(a)?))
            }
            "trinom" => {
                let [a, b] = self.args::<2>(name)?;
                ExprAst::Int(IntExpr::Trinom(
                    Box::new(self.require_int(a)?),
                    Box::new(self.require_int(b)?),
                ))
            }
            "subst" => {
                let [a, b] = self.args::<2>(name)?;
                ExprAst::Q(QExpr::Subst(
                    Box::new(a.ast.into_q()),
                    self.require_int(b)?,
                ))
            }
            "rn" => {
                let [a] = self.args::<1>(name)?;
                ExprAst::Q(QExpr::Rn(self.require_int(a)?))
            }
            _ => {
                return Err(ParseError {
                    offset,
                    message: format!("unknown function or symbol `{name}`"),
                })
            }
        };
        Ok(Node { ast, offset })
    }

    fn args<const N: usize>(&mut self, name: &str) -> Result<[Node; N], ParseError> {
        self.expect(&Tok::LParen, &format!("`(` after `{name}`"))?;
        let mut out = Vec::with_capacity(N);
        for i in 0..N {
            if i > 0 {
                self.expect(&Tok::Comma, "`,`")?;
            }
            out.push(self.sum()?);
        }
        self.expect(&Tok::RParen, "`)`")?;
        Ok(out.try_into().map_err(|_| ()).expect("sized above"))
    }

    fn require_int(&self, node: Node) -> Result<IntExpr, ParseError> {
        match node.ast {
            ExprAst::Int(e) => Ok(e),
            ExprAst::Q(_) => Err(ParseError {
                offset: node.offset,
                message: "expected an integer-valued expression, found a q-valued one"
                    .to_string(),
            }),
        }
    }
}

fn combine_additive(lhs: Node, rhs: Node, plus: bool) -> Node {
    let offset = lhs.offset;
    let ast = match (lhs.ast, rhs.ast) {
        (ExprAst::Int(a), ExprAst::Int(b)) => {
            let (a, b) = (Box::new(a), Box::new(b));
            ExprAst::Int(if plus { IntExpr::Add(a, b) } else { IntExpr::Sub(a, b) })
        }
        (a, b) => {
            let (a, b) = (Box::new(a.into_q()), Box::new(b.into_q()));
            ExprAst::Q(if plus { QExpr::Add(a, b) } else { QExpr::Sub(a, b) })
        }
    };
    Node { ast, offset }
}

fn combine_mul(lhs: Node, rhs: Node) -> Node {
    let offset = lhs.offset;
    let ast = match (lhs.ast, rhs.ast) {
        (ExprAst::Int(a), ExprAst::Int(b)) => {
            ExprAst::Int(IntExpr::Mul(Box::new(a), Box::new(b)))
        }
        (a, b) => ExprAst::Q(QExpr::Mul(Box::new(a.into_q()), Box::new(b.into_q()))),
    };
    Node { ast, offset }
}
