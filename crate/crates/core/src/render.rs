//! Text form of rational functions.
//!
//! Numerators are printed expanded in caret notation (`N^2+3N-2`);
//! denominators are printed as a product of integer-shift linear factors
//! (`(N-2)(N-1)N(N+2)(N+4)`) whenever they split that way, which is always
//! the case for values produced by the integrator. The parser accepts the
//! output of both renderers.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ratfunc::RationalFunction;
use crate::scalar::ExactField;

/// Integer numerator, integer scalar, primitive denominator.
struct Parts<T> {
    numer: Polynomial<T>,
    scalar: T,
    denom: Polynomial<T>,
}

fn split<T: ExactField>(f: &RationalFunction<T>) -> Parts<T> {
    let c = T::content(f.numer().coeffs());
    let (p, q) = c.numer_denom();
    let numer = f.numer().scale(&(p / c));
    Parts {
        numer,
        scalar: q,
        denom: f.denom().clone(),
    }
}

/// Expanded integer polynomial, highest degree first.
pub fn render_poly<T: ExactField>(p: &Polynomial<T>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (deg, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs_value();
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if deg == 0 || !mag.is_one() {
            write!(out, "{mag}").unwrap();
        }
        match deg {
            0 => {}
            1 => out.push('N'),
            _ => write!(out, "N^{deg}").unwrap(),
        }
    }
    out
}

fn term_count<T: ExactField>(p: &Polynomial<T>) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

fn linear_factor(shift: i64) -> String {
    match shift {
        0 => "N".to_string(),
        s if s > 0 => format!("(N+{s})"),
        s => format!("(N-{})", -s),
    }
}

fn assemble<T: ExactField>(numer: &Polynomial<T>, denom_items: Vec<String>) -> String {
    let num = render_poly(numer);
    if denom_items.is_empty() {
        return num;
    }
    let num = if term_count(numer) > 1 {
        format!("({num})")
    } else {
        num
    };
    if denom_items.len() == 1 {
        format!("{num}/{}", denom_items[0])
    } else {
        format!("{num}/({})", denom_items.concat())
    }
}

/// Denominator as a product of linear factors; expanded fallback otherwise.
pub fn render_factored<T: ExactField>(f: &RationalFunction<T>) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let Parts {
        numer,
        mut scalar,
        denom,
    } = split(f);
    let roots = denom.integer_roots();
    let linear = roots
        .iter()
        .fold(Polynomial::one(), |acc, &r| &acc * &Polynomial::linear(-r));
    let (rest, rem) = denom.div_rem(&linear);
    debug_assert!(rem.is_zero());
    if rest.degree() != Some(0) {
        return render_expanded(f);
    }
    scalar = scalar * rest.coeffs()[0].clone();

    let mut items = Vec::new();
    if !scalar.is_one() {
        items.push(scalar.to_string());
    }
    // roots are sorted ascending; shifts are -root, so walk in reverse
    let mut i = roots.len();
    while i > 0 {
        let r = roots[i - 1];
        let mut mult = 0;
        while i > 0 && roots[i - 1] == r {
            mult += 1;
            i -= 1;
        }
        let base = linear_factor(-r);
        items.push(if mult == 1 {
            base
        } else {
            format!("{base}^{mult}")
        });
    }
    assemble(&numer, items)
}

/// Numerator and denominator both expanded.
pub fn render_expanded<T: ExactField>(f: &RationalFunction<T>) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let Parts {
        numer,
        scalar,
        denom,
    } = split(f);
    let denom = denom.scale(&scalar);
    if denom.is_one() {
        return render_poly(&numer);
    }
    let d = render_poly(&denom);
    let bare = term_count(&denom) == 1
        && (denom.degree() == Some(0) || denom.leading().is_some_and(|c| c.is_one()));
    let d = if !bare { format!("({d})") } else { d };
    assemble(&numer, vec![d])
}

/// Parse text produced by [`render_factored`] or [`render_expanded`].
///
/// Accepts integers, `N`, `+ - /`, `^` with a non-negative integer exponent,
/// parentheses and implicit multiplication by juxtaposition. Whitespace is
/// ignored.
pub fn parse_rational<T: ExactField>(text: &str) -> Result<RationalFunction<T>> {
    let toks: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut p = ExprParser {
        toks,
        pos: 0,
        _marker: std::marker::PhantomData,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

struct ExprParser<T> {
    toks: Vec<(usize, char)>,
    pos: usize,
    _marker: std::marker::PhantomData<T>,
}

impl<T: ExactField> ExprParser<T> {
    fn peek(&self) -> Option<char> {
        self.toks.get(self.pos).map(|t| t.1)
    }

    fn error(&self, msg: &str) -> Error {
        let pos = self
            .toks
            .get(self.pos)
            .map_or_else(|| self.toks.last().map_or(0, |t| t.0 + 1), |t| t.0);
        Error::Parse {
            pos,
            msg: msg.to_string(),
        }
    }

    fn expr(&mut self) -> Result<RationalFunction<T>> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction<T>> {
        let negate = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    acc = acc.checked_div(&d)?;
                }
                Some(c) if c == 'N' || c == '(' || c.is_ascii_digit() => {
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                _ => break,
            }
        }
        Ok(if negate { -acc } else { acc })
    }

    fn power(&mut self) -> Result<RationalFunction<T>> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.integer()?;
        let e = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
        let num = base.numer().pow(e);
        let den = base.denom().pow(e);
        RationalFunction::new(num, den)
    }

    fn atom(&mut self) -> Result<RationalFunction<T>> {
        match self.peek() {
            Some('N') => {
                self.pos += 1;
                Ok(RationalFunction::from_poly(Polynomial::var()))
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let mut v = T::zero();
                let ten = T::from_int(10);
                while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
                    v = v * ten.clone() + T::from_int(d as i64);
                    self.pos += 1;
                }
                debug_assert!(self.pos > start);
                Ok(RationalFunction::constant(v))
            }
            _ => Err(self.error("expected a number, 'N' or '('")),
        }
    }

    fn integer(&mut self) -> Result<u64> {
        let mut v: u64 = 0;
        let start = self.pos;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            v = v
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or_else(|| self.error("integer overflow"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        Ok(v)
    }
}
