//! Text syntax for scalars, algebra elements, and presentation files.
//!
//! Scalar grammar: integer literals, `q`, `^` with integer exponents,
//! `+ - * /`, parentheses.  Element grammar extends it with generator names
//! from a declared alphabet, `^*` as a postfix star, and juxtaposition-free
//! products written with `*`.  Both parsers report the byte offset of the
//! first offending token.
//!
//! Presentation files are line-oriented:
//!
//! ```text
//! matrix 2
//! generators a b c d
//! order weights=2,1,1,2 precedence=a,d,b,c
//! relation E s=0 t=2
//! 0 1 -q 0
//! relation E' s=2 t=0
//! 0 -q^-1 1 0
//! star 0 -q 1 0 involution=identity
//! ```
//!
//! Relation entries are whitespace/newline separated scalars in row-major
//! order (N^t rows by N^s columns).  `generators`, `order`, and `star` are
//! optional; the order defaults to graded lexicographic in generator order.

use crate::hopf::{HopfError, Presentation, QPoly, Relation};
use crate::linalg::Mat;
use crate::ncalg::MonomialOrder;
use crate::scalar::{Involution, QScalar, ZPoly};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("offset {offset}: {msg}")]
    Token { offset: usize, msg: String },
    #[error("relation '{name}': expected {expected} entries, found {got}")]
    EntryCount { name: String, expected: usize, got: usize },
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

fn err_at(offset: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Token { offset, msg: msg.into() }
}

// ---------------------------------------------------------------- tokens --

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    /// `^*` postfix star-involution marker.
    StarInv,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => { out.push((i, Token::Plus)); i += 1; }
            '-' => { out.push((i, Token::Minus)); i += 1; }
            '*' => { out.push((i, Token::Star)); i += 1; }
            '/' => { out.push((i, Token::Slash)); i += 1; }
            '(' => { out.push((i, Token::LParen)); i += 1; }
            ')' => { out.push((i, Token::RParen)); i += 1; }
            '^' => {
                if bytes.get(i + 1) == Some(&b'*') {
                    out.push((i, Token::StarInv));
                    i += 2;
                } else {
                    out.push((i, Token::Caret));
                    i += 1;
                }
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Token::Int(n)));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
            }
            _ => return Err(err_at(i, format!("unexpected character '{c}'"))),
        }
    }
    Ok(out)
}

// ------------------------------------------------------------------- AST --

#[derive(Debug, Clone)]
enum Expr {
    Int(BigInt),
    Q,
    Gen(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    StarOf(Box<Expr>),
}

struct Parser<'a> {
    toks: &'a [(usize, Token)],
    pos: usize,
    end: usize,
    alphabet: Option<&'a [&'a str]>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<&'a Token> {
        let t = self.toks.get(self.pos).map(|(_, t)| t);
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.bump();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Some(Token::Slash) => {
                    self.bump();
                    acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
                }
                // implicit multiplication, as in `2q` or `(1+q)(1-q)`
                Some(Token::Int(_)) | Some(Token::Ident(_)) | Some(Token::LParen) => {
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let mut base = self.atom()?;
        loop {
            match self.peek() {
                Some(Token::Caret) => {
                    self.bump();
                    let mut sign = 1i64;
                    if matches!(self.peek(), Some(Token::Minus)) {
                        self.bump();
                        sign = -1;
                    }
                    let off = self.offset();
                    match self.bump() {
                        Some(Token::Int(n)) => {
                            let k: i64 = n
                                .try_into()
                                .map_err(|_| err_at(off, "exponent too large"))?;
                            base = Expr::Pow(Box::new(base), sign * k);
                        }
                        _ => return Err(err_at(off, "expected integer exponent")),
                    }
                }
                Some(Token::StarInv) => {
                    self.bump();
                    base = Expr::StarOf(Box::new(base));
                }
                _ => return Ok(base),
            }
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let off = self.offset();
        match self.bump() {
            Some(Token::Int(n)) => Ok(Expr::Int(n.clone())),
            Some(Token::Ident(name)) if name == "q" => Ok(Expr::Q),
            Some(Token::Ident(name)) => {
                if let Some(alpha) = self.alphabet {
                    if let Some(g) = alpha.iter().position(|n| n == name) {
                        return Ok(Expr::Gen(g));
                    }
                }
                Err(err_at(off, format!("unknown symbol '{name}'")))
            }
            Some(Token::LParen) => {
                let e = self.expr()?;
                let off2 = self.offset();
                match self.bump() {
                    Some(Token::RParen) => Ok(e),
                    _ => Err(err_at(off2, "expected ')'")),
                }
            }
            _ => Err(err_at(off, "expected a value")),
        }
    }
}

fn parse_to_ast(text: &str, alphabet: Option<&[&str]>) -> Result<Expr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: text.len(),
        alphabet,
    };
    let e = p.expr()?;
    if p.pos != toks.len() {
        return Err(err_at(p.offset(), "trailing input"));
    }
    Ok(e)
}

/// Parse a scalar expression in Q(q).
pub fn parse_scalar(text: &str) -> Result<QScalar, ParseError> {
    let ast = parse_to_ast(text, None)?;
    eval_scalar(&ast, text.len())
}

fn eval_scalar(e: &Expr, end: usize) -> Result<QScalar, ParseError> {
    match e {
        Expr::Int(n) => Ok(QScalar::from_poly(ZPoly::constant(n.clone()))),
        Expr::Q => Ok(QScalar::q()),
        Expr::Gen(_) | Expr::StarOf(_) => {
            Err(err_at(end, "generators are not allowed in a scalar"))
        }
        Expr::Neg(a) => Ok(eval_scalar(a, end)?.neg()),
        Expr::Add(a, b) => Ok(eval_scalar(a, end)?.add(&eval_scalar(b, end)?)),
        Expr::Sub(a, b) => Ok(eval_scalar(a, end)?.sub(&eval_scalar(b, end)?)),
        Expr::Mul(a, b) => Ok(eval_scalar(a, end)?.mul(&eval_scalar(b, end)?)),
        Expr::Div(a, b) => eval_scalar(a, end)?
            .div(&eval_scalar(b, end)?)
            .map_err(|e| err_at(end, e.to_string())),
        Expr::Pow(a, k) => {
            let base = eval_scalar(a, end)?;
            base.pow(*k as i32).map_err(|e| err_at(end, e.to_string()))
        }
    }
}

/// Parse an algebra element over a presentation's alphabet.  `^*` is the
/// star involution (presentation must carry one); `^k` with k < 0 is
/// rejected for generators.
pub fn parse_element(text: &str, pres: &Presentation) -> Result<QPoly, ParseError> {
    let names = pres.names();
    let ast = parse_to_ast(text, Some(&names))?;
    let p = eval_element(&ast, pres, text.len())?;
    Ok(pres.reduce(&p))
}

fn eval_element(e: &Expr, pres: &Presentation, end: usize) -> Result<QPoly, ParseError> {
    match e {
        Expr::Int(n) => Ok(QPoly::scalar(QScalar::from_poly(ZPoly::constant(n.clone())))),
        Expr::Q => Ok(QPoly::scalar(QScalar::q())),
        Expr::Gen(g) => Ok(QPoly::gen(*g as u8)),
        Expr::Neg(a) => Ok(eval_element(a, pres, end)?.neg()),
        Expr::Add(a, b) => Ok(eval_element(a, pres, end)?.add(&eval_element(b, pres, end)?)),
        Expr::Sub(a, b) => Ok(eval_element(a, pres, end)?.sub(&eval_element(b, pres, end)?)),
        Expr::Mul(a, b) => Ok(eval_element(a, pres, end)?.mul(&eval_element(b, pres, end)?)),
        Expr::Div(a, b) => {
            // division only by scalars
            let d = eval_element(b, pres, end)?;
            let scalar = d
                .terms()
                .next()
                .filter(|(w, _)| w.is_empty() && d.num_terms() == 1)
                .map(|(_, c)| c.clone())
                .ok_or_else(|| err_at(end, "division by a non-scalar"))?;
            let inv = scalar
                .inv()
                .map_err(|e| err_at(end, e.to_string()))?;
            Ok(eval_element(a, pres, end)?.scale(&inv))
        }
        Expr::Pow(a, k) => {
            let base = eval_element(a, pres, end)?;
            if *k < 0 {
                // negative powers only for scalars
                let scalar = base
                    .terms()
                    .next()
                    .filter(|(w, _)| w.is_empty() && base.num_terms() == 1)
                    .map(|(_, c)| c.clone())
                    .ok_or_else(|| err_at(end, "negative power of a non-scalar"))?;
                let v = scalar
                    .pow(*k as i32)
                    .map_err(|e| err_at(end, e.to_string()))?;
                return Ok(QPoly::scalar(v));
            }
            let mut acc = QPoly::one();
            for _ in 0..*k {
                acc = acc.mul(&base);
            }
            Ok(acc)
        }
        Expr::StarOf(a) => {
            let inner = eval_element(a, pres, end)?;
            pres.star(&inner).map_err(|e| err_at(end, e.to_string()))
        }
    }
}

// ---------------------------------------------------- presentation files --

fn line_err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Line { line, msg: msg.into() }
}

/// Parse a presentation file (see the module docs for the format).
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut n: Option<usize> = None;
    let mut gen_names: Option<Vec<String>> = None;
    let mut order_spec: Option<(Vec<u64>, Vec<String>)> = None;
    let mut relations: Vec<Relation> = Vec::new();
    let mut star: Option<(Vec<QScalar>, Involution)> = None;
    let mut name = "presentation".to_string();

    // Collect raw scalar entries following a relation header.
    let mut pending: Option<(String, usize, usize, Vec<QScalar>)> = None;

    let flush =
        |pending: &mut Option<(String, usize, usize, Vec<QScalar>)>,
         relations: &mut Vec<Relation>,
         n: usize|
         -> Result<(), ParseError> {
            if let Some((rname, s, t, entries)) = pending.take() {
                let rows = n.pow(t as u32);
                let cols = n.pow(s as u32);
                if entries.len() != rows * cols {
                    return Err(ParseError::EntryCount {
                        name: rname,
                        expected: rows * cols,
                        got: entries.len(),
                    });
                }
                let e = Mat::from_fn(rows, cols, |i, j| entries[i * cols + j].clone());
                relations.push(Relation { name: rname, s, t, e });
            }
            Ok(())
        };

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let head = parts.next().unwrap();
        match head {
            "name" => {
                name = parts.collect::<Vec<_>>().join(" ");
            }
            "matrix" => {
                let v: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| line_err(lineno, "matrix needs a positive size"))?;
                n = Some(v);
            }
            "generators" => {
                gen_names = Some(parts.map(|s| s.to_string()).collect());
            }
            "order" => {
                let mut weights = None;
                let mut prec = None;
                for p in parts {
                    if let Some(w) = p.strip_prefix("weights=") {
                        weights = Some(
                            w.split(',')
                                .map(|x| x.parse::<u64>())
                                .collect::<Result<Vec<_>, _>>()
                                .map_err(|_| line_err(lineno, "bad weights"))?,
                        );
                    } else if let Some(pp) = p.strip_prefix("precedence=") {
                        prec = Some(pp.split(',').map(|x| x.to_string()).collect::<Vec<_>>());
                    } else {
                        return Err(line_err(lineno, format!("unknown order field '{p}'")));
                    }
                }
                match (weights, prec) {
                    (Some(w), Some(p)) => order_spec = Some((w, p)),
                    _ => return Err(line_err(lineno, "order needs weights= and precedence=")),
                }
            }
            "relation" => {
                let nsize =
                    n.ok_or_else(|| line_err(lineno, "'matrix N' must come before relations"))?;
                flush(&mut pending, &mut relations, nsize)?;
                let rname = parts
                    .next()
                    .ok_or_else(|| line_err(lineno, "relation needs a name"))?
                    .to_string();
                let mut s = None;
                let mut t = None;
                for p in parts {
                    if let Some(v) = p.strip_prefix("s=") {
                        s = v.parse::<usize>().ok();
                    } else if let Some(v) = p.strip_prefix("t=") {
                        t = v.parse::<usize>().ok();
                    }
                }
                let (s, t) = match (s, t) {
                    (Some(s), Some(t)) => (s, t),
                    _ => return Err(line_err(lineno, "relation needs s=<int> t=<int>")),
                };
                pending = Some((rname, s, t, Vec::new()));
            }
            "star" => {
                let nsize = n.ok_or_else(|| line_err(lineno, "'matrix N' must come first"))?;
                flush(&mut pending, &mut relations, nsize)?;
                let rest: Vec<&str> = parts.collect();
                let mut entries = Vec::new();
                let mut involution = None;
                for p in &rest {
                    if let Some(v) = p.strip_prefix("involution=") {
                        involution = match v {
                            "identity" => Some(Involution::Identity),
                            "q-inverse" => Some(Involution::QInverse),
                            _ => return Err(line_err(lineno, "bad involution")),
                        };
                    } else {
                        entries.push(
                            parse_scalar(p).map_err(|e| line_err(lineno, e.to_string()))?,
                        );
                    }
                }
                if entries.len() != nsize * nsize {
                    return Err(line_err(
                        lineno,
                        format!("star needs {} entries", nsize * nsize),
                    ));
                }
                let inv = involution
                    .ok_or_else(|| line_err(lineno, "star needs involution=..."))?;
                star = Some((entries, inv));
            }
            _ => {
                // scalar entries for the pending relation
                match &mut pending {
                    Some((_, _, _, entries)) => {
                        for tok in line.split_whitespace() {
                            entries.push(
                                parse_scalar(tok)
                                    .map_err(|e| line_err(lineno, e.to_string()))?,
                            );
                        }
                    }
                    None => {
                        return Err(line_err(lineno, format!("unknown directive '{head}'")))
                    }
                }
            }
        }
    }
    let n = n.ok_or_else(|| line_err(0, "missing 'matrix N'"))?;
    flush(&mut pending, &mut relations, n)?;

    let gen_names = gen_names.unwrap_or_else(|| {
        if n == 2 {
            ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect()
        } else {
            (0..n)
                .flat_map(|i| (0..n).map(move |j| format!("w{}{}", i + 1, j + 1)))
                .collect()
        }
    });
    if gen_names.len() != n * n {
        return Err(line_err(0, format!("need {} generator names", n * n)));
    }
    let order = match order_spec {
        None => MonomialOrder::graded_lex(n * n),
        Some((weights, prec_names)) => {
            if weights.len() != n * n || prec_names.len() != n * n {
                return Err(line_err(0, "order lists must cover every generator"));
            }
            let mut precedence = Vec::with_capacity(n * n);
            for p in &prec_names {
                let g = gen_names
                    .iter()
                    .position(|g| g == p)
                    .ok_or_else(|| line_err(0, format!("unknown generator '{p}' in order")))?;
                precedence.push(g as u8);
            }
            MonomialOrder::weighted(weights, precedence)
        }
    };
    let star_data = star.map(|(entries, inv)| {
        (Mat::from_fn(n, n, |i, j| entries[i * n + j].clone()), inv)
    });
    Ok(Presentation::new(name, n, gen_names, relations, order, star_data)?)
}

/// Serialize a presentation to the file format; `parse_presentation` of the
/// output reconstructs an equal presentation.
pub fn serialize_presentation(p: &Presentation) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "name {}", p.name).unwrap();
    writeln!(out, "matrix {}", p.n).unwrap();
    writeln!(out, "generators {}", p.gen_names.join(" ")).unwrap();
    let order = p.order();
    let weights: Vec<String> = order.weights().iter().map(|w| w.to_string()).collect();
    let prec: Vec<String> = order
        .precedence()
        .iter()
        .map(|&g| p.gen_names[g as usize].clone())
        .collect();
    writeln!(
        out,
        "order weights={} precedence={}",
        weights.join(","),
        prec.join(",")
    )
    .unwrap();
    for rel in &p.relations {
        writeln!(out, "relation {} s={} t={}", rel.name, rel.s, rel.t).unwrap();
        for i in 0..rel.e.rows {
            let row: Vec<String> = (0..rel.e.cols)
                .map(|j| scalar_token(rel.e.at(i, j)))
                .collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
    }
    if let Some(star) = &p.star {
        let entries: Vec<String> = (0..p.n)
            .flat_map(|i| (0..p.n).map(move |j| (i, j)))
            .map(|(i, j)| scalar_token(star.q_matrix.at(i, j)))
            .collect();
        let inv = match star.involution {
            Involution::Identity => "identity",
            Involution::QInverse => "q-inverse",
        };
        writeln!(out, "star {} involution={}", entries.join(" "), inv).unwrap();
    }
    out
}

/// A scalar printed without internal spaces, for whitespace-separated files.
fn scalar_token(x: &QScalar) -> String {
    format!("{x}").replace(' ', "")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{builtin, Builtin};

    #[test]
    fn scalar_round_trips() {
        for text in ["(1-q^2)/(1+q^2)", "q^-3", "1/(1+q^2)", "-q", "2*q+1"] {
            let x = parse_scalar(text).unwrap();
            let printed = format!("{x}");
            let y = parse_scalar(&printed).unwrap();
            assert_eq!(x, y, "{text} -> {printed}");
        }
    }

    #[test]
    fn scalar_errors() {
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("q^").is_err());
        assert!(parse_scalar("(q").is_err());
        assert!(parse_scalar("q$").is_err());
    }

    #[test]
    fn element_parsing() {
        let p = builtin(Builtin::Slq2).unwrap();
        let x = parse_element("d*a", &p).unwrap();
        let expect = QPoly::one().add(&QPoly::monomial(vec![1, 2], QScalar::q_pow(-1)));
        assert_eq!(x, expect);
        let y = parse_element("a^2*b - q*c", &p).unwrap();
        assert_eq!(y.num_terms(), 2);
    }

    #[test]
    fn element_star_postfix() {
        let p = builtin(Builtin::Suq2).unwrap();
        let x = parse_element("a*a^*", &p).unwrap();
        // a a* = a d = 1 + q b c
        let expect = QPoly::one().add(&QPoly::monomial(vec![1, 2], QScalar::q()));
        assert_eq!(x, expect);
        // star is rejected without a star structure
        let p2 = builtin(Builtin::Slq2).unwrap();
        assert!(parse_element("a^*", &p2).is_err());
    }

    #[test]
    fn element_print_round_trip() {
        let p = builtin(Builtin::Slq2).unwrap();
        for text in ["d*a", "a*b*c", "1 + q*b*c", "a - d"] {
            let x = parse_element(text, &p).unwrap();
            let printed = p.fmt_element(&x);
            let y = parse_element(&printed, &p).unwrap();
            assert_eq!(x, y, "{text} -> {printed}");
        }
    }

    #[test]
    fn presentation_round_trip() {
        for b in [Builtin::Slq2, Builtin::Suq2, Builtin::SlT12] {
            let p = builtin(b).unwrap();
            let text = serialize_presentation(&p);
            let q = parse_presentation(&text).unwrap();
            assert_eq!(p.n, q.n);
            assert_eq!(p.gen_names, q.gen_names);
            assert_eq!(p.relations, q.relations);
            assert_eq!(p.order(), q.order());
            assert_eq!(p.rewrite().rules(), q.rewrite().rules());
            assert_eq!(
                p.star.as_ref().map(|s| (&s.q_matrix, s.involution)),
                q.star.as_ref().map(|s| (&s.q_matrix, s.involution))
            );
        }
    }

    #[test]
    fn presentation_dimension_error() {
        let text = "matrix 2\nrelation E s=0 t=2\n0 1 -q\n";
        match parse_presentation(text) {
            Err(ParseError::EntryCount { expected, got, .. }) => {
                assert_eq!(expected, 4);
                assert_eq!(got, 3);
            }
            other => panic!("expected entry-count error, got {other:?}"),
        }
    }
}
