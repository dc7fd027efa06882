//! Text input for polynomials, monomial ideals, and fractional ideals.
//!
//! The grammar is whitespace-insensitive and requires explicit `*` for
//! products:
//!
//! ```text
//! expr     := ['+' | '-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ['^' ['-'] digits]
//! atom     := rational | variable | '(' expr ')'
//! rational := digits ['/' digits]
//! ideal    := '(' expr (',' expr)* ')'
//! frac     := 'w' ['^' ['-'] digits] ['*' ideal]  |  ideal
//! ```
//!
//! Variable names are matched longest-first against the caller's list, so
//! `x1` never parses as `x` followed by junk.  The name `w` is reserved for
//! the distinguished element in fractional-ideal notation.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;
use crate::poly::Polynomial;
use crate::scalar::{rat_int, Rational};

/// Largest exponent accepted anywhere in the grammar.
const MAX_EXPONENT: i64 = 10_000;
/// Largest exponent accepted on a base with more than one term.
const MAX_SUM_EXPONENT: i64 = 512;

/// Parses a polynomial in the given variables.
pub fn parse_polynomial(text: &str, names: &[&str]) -> Result<Polynomial> {
    let mut cur = Cursor::new(text, names);
    let p = cur.expr()?;
    cur.expect_end()?;
    Ok(p)
}

/// Parses a monomial ideal such as `(x^2, y^3)`, `(0)`, or `(1)`.
pub fn parse_ideal(text: &str, names: &[&str]) -> Result<MonomialIdeal> {
    let mut cur = Cursor::new(text, names);
    let i = cur.ideal()?;
    cur.expect_end()?;
    Ok(i)
}

/// Parses fractional-ideal notation `w^k * (gens)` into the raw pair
/// `(k, ideal)`; a bare ideal means `k = 0` and a bare power of `w` means
/// the unit ideal.
pub fn parse_fractional_raw(text: &str, names: &[&str]) -> Result<(i64, MonomialIdeal)> {
    let mut cur = Cursor::new(text, names);
    cur.skip_ws();
    let mut shift = 0i64;
    if cur.eat('w') {
        shift = if cur.eat_after_ws('^') { cur.signed_int()? } else { 1 };
        cur.skip_ws();
        if cur.at_end() {
            return Ok((shift, MonomialIdeal::unit(names.len())));
        }
        cur.expect('*')?;
    }
    let ideal = cur.ideal()?;
    cur.expect_end()?;
    Ok((shift, ideal))
}

/// Splits and validates a comma-separated variable list such as `x,y`.
///
/// Names must start with a letter, continue with letters, digits, or `_`,
/// be pairwise distinct, and avoid the reserved name `w`.
pub fn parse_var_names(spec: &str) -> Result<Vec<String>> {
    let mut out: Vec<String> = Vec::new();
    for raw in spec.split(',') {
        let name = raw.trim();
        if name.is_empty() {
            return Err(Error::invalid("empty variable name"));
        }
        let mut chars = name.chars();
        let first = chars.next().expect("nonempty name");
        if !first.is_ascii_alphabetic()
            || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            return Err(Error::invalid(format!("invalid variable name `{name}`")));
        }
        if name == "w" {
            return Err(Error::invalid("`w` is reserved for fractional-ideal notation"));
        }
        if out.iter().any(|n| n == name) {
            return Err(Error::invalid(format!("duplicate variable name `{name}`")));
        }
        out.push(name.to_string());
    }
    Ok(out)
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [&'a str],
}

impl<'a> Cursor<'a> {
    fn new(text: &str, names: &'a [&'a str]) -> Self {
        Cursor { chars: text.chars().collect(), pos: 0, names }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_after_ws(&mut self, c: char) -> bool {
        self.skip_ws();
        self.eat(c)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected `{c}`")))
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(Error::parse(self.pos, "unexpected trailing input"))
        }
    }

    fn uint(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let mut value: i64 = 0;
        while let Some(c) = self.peek() {
            let Some(d) = c.to_digit(10) else { break };
            self.pos += 1;
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(i64::from(d)))
                .ok_or_else(|| Error::parse(start, "integer literal is too large"))?;
        }
        if self.pos == start {
            return Err(Error::parse(self.pos, "expected digits"));
        }
        Ok(value)
    }

    fn signed_int(&mut self) -> Result<i64> {
        self.skip_ws();
        let negative = self.eat('-');
        let v = self.uint()?;
        Ok(if negative { -v } else { v })
    }

    fn try_var(&mut self) -> Option<usize> {
        let rest: String = self.chars[self.pos..].iter().collect();
        let mut best: Option<usize> = None;
        for (i, name) in self.names.iter().enumerate() {
            if rest.starts_with(name) {
                let better = best.is_none_or(|j| self.names[j].len() < name.len());
                if better {
                    best = Some(i);
                }
            }
        }
        if let Some(i) = best {
            self.pos += self.names[i].chars().count();
        }
        best
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            self.skip_ws();
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat_after_ws('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if !self.eat_after_ws('^') {
            return Ok(base);
        }
        let at = self.pos;
        let e = self.signed_int()?;
        if e.abs() > MAX_EXPONENT {
            return Err(Error::parse(at, format!("exponent exceeds {MAX_EXPONENT}")));
        }
        if let Some((b, c)) = base.as_monomial() {
            if e < 0 && c.is_zero() {
                return Err(Error::parse(at, "negative power of zero"));
            }
            return Ok(Polynomial::monomial(
                base.vars,
                b.scale(e),
                rational_pow(c, e),
            ));
        }
        if e < 0 {
            return Err(Error::parse(at, "negative exponent on a sum"));
        }
        if e > MAX_SUM_EXPONENT {
            return Err(Error::parse(
                at,
                format!("exponent on a sum exceeds {MAX_SUM_EXPONENT}"),
            ));
        }
        Ok(base.pow(e as u32))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                let p = self.expr()?;
                self.expect(')')?;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                let d = if self.eat_after_ws('/') {
                    let at = self.pos;
                    let d = self.uint()?;
                    if d == 0 {
                        return Err(Error::parse(at, "zero denominator"));
                    }
                    d
                } else {
                    1
                };
                Ok(Polynomial::constant(
                    self.names.len(),
                    Rational::new(n.into(), d.into()),
                ))
            }
            _ => {
                if let Some(i) = self.try_var() {
                    Ok(Polynomial::monomial(
                        self.names.len(),
                        ExponentVector::unit(self.names.len(), i),
                        rat_int(1),
                    ))
                } else {
                    Err(Error::parse(
                        self.pos,
                        "expected a number, a variable, or `(`",
                    ))
                }
            }
        }
    }

    fn ideal(&mut self) -> Result<MonomialIdeal> {
        self.expect('(')?;
        let mut gens = Vec::new();
        loop {
            let at = self.pos;
            let p = self.expr()?;
            if let Some((b, _)) = p.as_monomial() {
                gens.push(b);
            } else if !p.is_zero() {
                return Err(Error::parse(at, "ideal generators must be monomials"));
            }
            self.skip_ws();
            if self.eat(',') {
                continue;
            }
            self.expect(')')?;
            return MonomialIdeal::new(self.names.len(), gens);
        }
    }
}

fn rational_pow(c: &Rational, e: i64) -> Rational {
    let mut base = if e < 0 { c.recip() } else { c.clone() };
    let mut k = e.unsigned_abs();
    let mut acc = rat_int(1);
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        let sq = &base * &base;
        base = sq;
        k >>= 1;
    }
    acc
}
