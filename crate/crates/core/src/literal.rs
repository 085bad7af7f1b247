//! Text syntax for elements.
//!
//! ```text
//! elem   := term (('+' | '-') term)*
//! term   := ['-'] [rational '*'] factor ('|' factor)*
//! factor := key | '{' factor (op factor)* '}'
//! key    := word | tree ':' word
//! op     := '<' (left) | '>' (right) | '·' (dot) | '*' (the model's first product)
//!         | '@' name (any product of the model)
//! ```
//!
//! A `tree:word` key is magmatic when the tree has as many leaves as the word
//! has letters and duplicial when it has one more. Products inside braces
//! associate to the left, so `{x<y<z}` is `(x ≺ y) ≺ z`.

use num_traits::One;

use crate::error::{Error, Result};
use crate::key::{Key, Word};
use crate::lincomb::Elem;
use crate::models::{product, Bialgebra};
use crate::rational::{parse_q, Q};
use crate::tree::Tree;

/// Parses one basis key (`xy`, `(.,(.,.)):xy`, ...).
pub fn parse_key(s: &str) -> Result<Key> {
    let s = s.trim();
    match s.rsplit_once(':') {
        None => Ok(Key::Word(s.parse()?)),
        Some((t, w)) => {
            let t: Tree = t.parse()?;
            let w: Word = w.parse()?;
            if t.leaf_count() == w.len() {
                Ok(Key::Mag(t, w))
            } else if t.leaf_count() == w.len() + 1 {
                Ok(Key::Dup(t, w))
            } else {
                Err(Error::Parse(format!("tree {t} does not fit the word {w}")))
            }
        }
    }
}

/// Parses an element; products inside braces are evaluated in `model`.
pub fn parse_elem(model: Option<&dyn Bialgebra>, s: &str) -> Result<Elem> {
    let mut p = Parser { s: s.as_bytes(), i: 0, model };
    let e = p.elem()?;
    p.ws();
    if p.i != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    model: Option<&'a dyn Bialgebra>,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.i, String::from_utf8_lossy(self.s)))
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn elem(&mut self) -> Result<Elem> {
        let mut out = Elem::zero();
        let mut sign = if self.eat(b'-') { -Q::one() } else { Q::one() };
        loop {
            let t = self.term()?;
            out.add_scaled(&t, &sign);
            sign = if self.eat(b'+') {
                Q::one()
            } else if self.eat(b'-') {
                -Q::one()
            } else {
                break;
            };
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<Elem> {
        let mut coeff = Q::one();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let start = self.i;
            while self.i < self.s.len() && (self.s[self.i].is_ascii_digit() || self.s[self.i] == b'/') {
                self.i += 1;
            }
            coeff = parse_q(std::str::from_utf8(&self.s[start..self.i]).expect("ascii"))?;
            if !self.eat(b'*') {
                return Err(self.err("expected '*' after a coefficient"));
            }
        }
        let mut e = self.factor()?;
        while self.eat(b'|') {
            e = e.tensor(&self.factor()?);
        }
        Ok(e.scale(&coeff))
    }

    fn factor(&mut self) -> Result<Elem> {
        if self.eat(b'{') {
            let mut acc = self.factor()?;
            loop {
                let sym: String = match self.peek() {
                    Some(b'<') => "left".into(),
                    Some(b'>') => "right".into(),
                    Some(b'*') => {
                        let m = self.model.ok_or_else(|| self.err("products need a model"))?;
                        m.products().first().ok_or_else(|| self.err("model has no product"))?.to_string()
                    }
                    Some(0xC2) if self.s.get(self.i + 1) == Some(&0xB7) => {
                        self.i += 1;
                        "dot".into()
                    }
                    Some(b'@') => {
                        let start = self.i + 1;
                        let mut end = start;
                        while end < self.s.len() && (self.s[end].is_ascii_alphanumeric() || self.s[end] == b'_') {
                            end += 1;
                        }
                        if end == start {
                            return Err(self.err("expected a product name after '@'"));
                        }
                        self.i = end - 1;
                        String::from_utf8_lossy(&self.s[start..end]).into_owned()
                    }
                    Some(b'}') => {
                        self.i += 1;
                        return Ok(acc);
                    }
                    _ => return Err(self.err("expected an operator or '}'")),
                };
                self.i += 1;
                let rhs = self.factor()?;
                let m = self.model.ok_or_else(|| self.err("products need a model"))?;
                acc = product(m, &sym, &acc, &rhs)?;
            }
        }
        self.ws();
        let start = self.i;
        let mut depth = 0usize;
        while self.i < self.s.len() {
            let c = self.s[self.i];
            match c {
                b'(' => depth += 1,
                b')' => depth = depth.checked_sub(1).ok_or_else(|| self.err("unbalanced ')'"))?,
                b',' | b'.' | b':' => {}
                c if c.is_ascii_lowercase() => {}
                _ if depth > 0 => return Err(self.err("unexpected character in tree")),
                _ => break,
            }
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected a key"));
        }
        let k = parse_key(std::str::from_utf8(&self.s[start..self.i]).expect("ascii"))?;
        Ok(Elem::key(self.lift(k)))
    }

    /// A single letter names the model's generator with that letter.
    fn lift(&self, k: Key) -> Key {
        let (Some(m), Key::Word(w)) = (self.model, &k) else { return k };
        if w.len() != 1 {
            return k;
        }
        m.basis_keys(1).into_iter().find(|g| g.letters() == w.0).unwrap_or(k)
    }
}
