//! The expression mini-language: exact values, element references,
//! distances `d(-,-)`, convergences `a(-,-)`, `+`, truncated subtraction
//! written `-`, suprema and infima over carrier variables, tensors, and
//! Yoneda application.
//!
//! The language is two-sorted (elements versus values); evaluation is
//! total on valid bindings and reports unbound names and sort errors.

use std::collections::HashMap;

use qspace::approach::Approach;
use qspace::colimit::tensor;
use qspace::error::{Error, Result};
use qspace::metric::{MetricSpace, Weight};
use qspace::quantale::Value;

#[derive(Debug, Clone, PartialEq)]
pub enum ValueExpr {
    Literal(Value),
    Add(Box<ValueExpr>, Box<ValueExpr>),
    Minus(Box<ValueExpr>, Box<ValueExpr>),
    Dist(ElemExpr, ElemExpr),
    Conv(ElemExpr, ElemExpr),
    Sup(String, Box<ValueExpr>),
    Inf(String, Box<ValueExpr>),
    /// Application of a bound weight or a Yoneda weight to an element.
    Apply(WeightExpr, ElemExpr),
}

#[derive(Debug, Clone, PartialEq)]
pub enum ElemExpr {
    Var(String),
    Tensor(Box<ElemExpr>, Box<ValueExpr>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum WeightExpr {
    Named(String),
    Yoneda(Box<ElemExpr>),
}

// ---------------------------------------------------------------- lexer

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Lit(Value),
    Plus,
    Minus,
    LParen,
    RParen,
    Comma,
    Dot,
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            ',' => {
                toks.push(Tok::Comma);
                i += 1;
            }
            '.' => {
                toks.push(Tok::Dot);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                toks.push(Tok::Lit(text.parse()?));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                if word == "inf" && !is_binder_position(&chars[i..]) {
                    toks.push(Tok::Lit(Value::Infinity));
                } else {
                    toks.push(Tok::Ident(word));
                }
            }
            other => return Err(Error::Malformed(format!("unexpected character {other:?}"))),
        }
    }
    Ok(toks)
}

/// `inf` is both the infinity literal and the infimum binder; it binds
/// when followed by an identifier and then a dot.
fn is_binder_position(rest: &[char]) -> bool {
    let mut it = rest.iter().skip_while(|c| c.is_whitespace());
    match it.next() {
        Some(c) if c.is_alphabetic() || *c == '_' => {}
        _ => return false,
    }
    let mut it = it
        .skip_while(|c| c.is_alphanumeric() || **c == '_')
        .skip_while(|c| c.is_whitespace());
    matches!(it.next(), Some('.'))
}

// --------------------------------------------------------------- parser

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: &Tok) -> Result<()> {
        match self.next() {
            Some(t) if t == *tok => Ok(()),
            other => Err(Error::Malformed(format!("expected {tok:?}, found {other:?}"))),
        }
    }

    fn value(&mut self) -> Result<ValueExpr> {
        // binders swallow the rest of the expression
        if let Some(Tok::Ident(w)) = self.peek() {
            if w == "sup" || w == "inf" {
                let binder = w.clone();
                self.pos += 1;
                let var = match self.next() {
                    Some(Tok::Ident(v)) => v,
                    other => {
                        return Err(Error::Malformed(format!(
                            "expected a variable after {binder}, found {other:?}"
                        )))
                    }
                };
                self.expect(&Tok::Dot)?;
                let body = Box::new(self.value()?);
                return Ok(if binder == "sup" {
                    ValueExpr::Sup(var, body)
                } else {
                    ValueExpr::Inf(var, body)
                });
            }
        }
        let mut acc = self.atom()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = ValueExpr::Add(Box::new(acc), Box::new(self.atom()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = ValueExpr::Minus(Box::new(acc), Box::new(self.atom()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn atom(&mut self) -> Result<ValueExpr> {
        match self.next() {
            Some(Tok::Lit(v)) => Ok(ValueExpr::Literal(v)),
            Some(Tok::LParen) => {
                let inner = self.value()?;
                self.expect(&Tok::RParen)?;
                Ok(inner)
            }
            Some(Tok::Ident(w)) if w == "sup" || w == "inf" => {
                self.pos -= 1;
                self.value()
            }
            Some(Tok::Ident(w)) if w == "d" || w == "a" => {
                self.expect(&Tok::LParen)?;
                let e1 = self.elem()?;
                self.expect(&Tok::Comma)?;
                let e2 = self.elem()?;
                self.expect(&Tok::RParen)?;
                Ok(if w == "d" { ValueExpr::Dist(e1, e2) } else { ValueExpr::Conv(e1, e2) })
            }
            Some(Tok::Ident(w)) if w == "yoneda" => {
                self.expect(&Tok::LParen)?;
                let at = self.elem()?;
                self.expect(&Tok::RParen)?;
                self.expect(&Tok::LParen)?;
                let arg = self.elem()?;
                self.expect(&Tok::RParen)?;
                Ok(ValueExpr::Apply(WeightExpr::Yoneda(Box::new(at)), arg))
            }
            Some(Tok::Ident(name)) => {
                // weight application
                self.expect(&Tok::LParen)?;
                let arg = self.elem()?;
                self.expect(&Tok::RParen)?;
                Ok(ValueExpr::Apply(WeightExpr::Named(name), arg))
            }
            other => Err(Error::Malformed(format!("expected a value, found {other:?}"))),
        }
    }

    fn elem(&mut self) -> Result<ElemExpr> {
        match self.next() {
            Some(Tok::Ident(w)) if w == "tensor" => {
                self.expect(&Tok::LParen)?;
                let e = self.elem()?;
                self.expect(&Tok::Comma)?;
                let v = self.value()?;
                self.expect(&Tok::RParen)?;
                Ok(ElemExpr::Tensor(Box::new(e), Box::new(v)))
            }
            Some(Tok::Ident(name)) => Ok(ElemExpr::Var(name)),
            other => Err(Error::Malformed(format!("expected an element, found {other:?}"))),
        }
    }
}

pub fn parse(src: &str) -> Result<ValueExpr> {
    let mut p = Parser { toks: lex(src)?, pos: 0 };
    let e = p.value()?;
    if p.pos != p.toks.len() {
        return Err(Error::Malformed(format!(
            "trailing input after the expression: {:?}",
            &p.toks[p.pos..]
        )));
    }
    Ok(e)
}

// ------------------------------------------------------------ evaluator

/// Everything an expression may refer to: a space (metric or approach),
/// named element bindings and named weights.
pub struct Env {
    pub metric: Option<MetricSpace>,
    pub approach: Option<Approach>,
    pub elements: HashMap<String, usize>,
    pub weights: HashMap<String, Weight>,
}

impl Env {
    fn space(&self) -> Result<&MetricSpace> {
        self.metric
            .as_ref()
            .ok_or_else(|| Error::Malformed("the expression needs a metric carrier".into()))
    }

    fn carrier_len(&self) -> Result<usize> {
        if let Some(m) = &self.metric {
            Ok(m.len())
        } else if let Some(a) = &self.approach {
            Ok(a.len())
        } else {
            Err(Error::Malformed("no carrier bound".into()))
        }
    }

    fn eval_elem(&self, e: &ElemExpr, scope: &HashMap<String, usize>) -> Result<usize> {
        match e {
            ElemExpr::Var(name) => scope
                .get(name)
                .or_else(|| self.elements.get(name))
                .copied()
                .ok_or_else(|| Error::UnknownElement(name.clone())),
            ElemExpr::Tensor(inner, u) => {
                let x = self.eval_elem(inner, scope)?;
                let uv = self.eval_value(u, scope)?;
                let m = self.space()?;
                tensor(m, x, &uv)?.ok_or_else(|| {
                    Error::FormulaInapplicable(format!(
                        "no tensor of {} by {uv}",
                        m.name(x)
                    ))
                })
            }
        }
    }

    pub fn eval_value(&self, e: &ValueExpr, scope: &HashMap<String, usize>) -> Result<Value> {
        let quantale = if let Some(m) = &self.metric {
            m.quantale().clone()
        } else if let Some(a) = &self.approach {
            a.quantale().clone()
        } else {
            qspace::quantale::Quantale::rational()
        };
        match e {
            ValueExpr::Literal(v) => Ok(v.clone()),
            ValueExpr::Add(l, r) => {
                quantale.add(&self.eval_value(l, scope)?, &self.eval_value(r, scope)?)
            }
            ValueExpr::Minus(l, r) => {
                quantale.minus(&self.eval_value(l, scope)?, &self.eval_value(r, scope)?)
            }
            ValueExpr::Dist(e1, e2) => {
                let x = self.eval_elem(e1, scope)?;
                let y = self.eval_elem(e2, scope)?;
                Ok(self.space()?.d(x, y).clone())
            }
            ValueExpr::Conv(e1, e2) => {
                let a = self
                    .approach
                    .as_ref()
                    .ok_or_else(|| Error::Malformed("a(-,-) needs an approach space".into()))?;
                let z = self.eval_elem(e1, scope)?;
                let x = self.eval_elem(e2, scope)?;
                Ok(a.conv_value(z, x))
            }
            ValueExpr::Sup(var, body) | ValueExpr::Inf(var, body) => {
                let n = self.carrier_len()?;
                let mut results = Vec::with_capacity(n);
                for i in 0..n {
                    let mut inner = scope.clone();
                    inner.insert(var.clone(), i);
                    results.push(self.eval_value(body, &inner)?);
                }
                match e {
                    ValueExpr::Sup(..) => quantale.join(results.iter()),
                    _ => quantale.meet(results.iter()),
                }
            }
            ValueExpr::Apply(w, arg) => {
                let x = self.eval_elem(arg, scope)?;
                match w {
                    WeightExpr::Named(name) => self
                        .weights
                        .get(name)
                        .map(|w| w.at(x).clone())
                        .ok_or_else(|| Error::UnknownElement(format!("weight {name}"))),
                    WeightExpr::Yoneda(at) => {
                        let p = self.eval_elem(at, scope)?;
                        Ok(self.space()?.d(x, p).clone())
                    }
                }
            }
        }
    }
}

pub fn eval(src: &str, env: &Env) -> Result<Value> {
    let expr = parse(src)?;
    env.eval_value(&expr, &HashMap::new())
}
