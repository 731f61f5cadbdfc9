//! Text form of polynomials over the coefficient ring.
//!
//! The grammar is whitespace-insensitive.  A polynomial is a signed sum of
//! terms; a term is an optional coefficient, an optional `*`, and an optional
//! power of `Y` (`Y` or `Y^3`), with at least one of coefficient and power
//! present.  A coefficient is a (possibly negative) integer, reduced modulo
//! `p^a0`; when the coefficient ring has degree `f > 1` it may instead be a
//! bracketed vector `[c0, c1, ...]` listing coordinates in the `b`-basis,
//! ascending, with missing entries zero.  A whole polynomial may also be
//! given explicitly as `[[c], [c], ...]`, coefficient vectors by ascending
//! degree -- the encoding the JSON reports use.
//!
//! The printer lists terms by descending degree.  Over a degree-1
//! coefficient ring it prints balanced representatives (so `6` modulo 8
//! prints as `- 2` and `Y^2 - 2` round-trips); for `f > 1` coefficients
//! print as bracketed vectors.  `parse` inverts `print` exactly.

use chainring::{GaloisRing, GrElem, GrPoly};

pub fn parse(rw: &GaloisRing, text: &str) -> Result<GrPoly, String> {
    let mut s = Scanner { rw, chars: text.chars().collect(), pos: 0 };
    s.skip_ws();
    let poly = if s.starts_double_bracket() { s.whole_vector()? } else { s.sum()? };
    s.skip_ws();
    if let Some(c) = s.peek() {
        return Err(s.err(&format!("unexpected '{c}' after the polynomial")));
    }
    Ok(poly)
}

pub fn print(rw: &GaloisRing, poly: &GrPoly) -> String {
    if poly.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in poly.coeffs().iter().enumerate().rev() {
        if rw.is_zero(c) {
            continue;
        }
        let (neg, body) = term_repr(rw, c, k);
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

fn ypow(k: usize) -> String {
    if k == 1 {
        "Y".into()
    } else {
        format!("Y^{k}")
    }
}

fn term_repr(rw: &GaloisRing, c: &GrElem, k: usize) -> (bool, String) {
    if rw.f() == 1 {
        let q = rw.zq().modulus();
        let v = c.coords()[0];
        let signed = if v > q / 2 { v as i64 - q as i64 } else { v as i64 };
        let mag = signed.unsigned_abs();
        let body = match (k, mag) {
            (0, _) => mag.to_string(),
            (_, 1) => ypow(k),
            _ => format!("{mag}*{}", ypow(k)),
        };
        (signed < 0, body)
    } else if k > 0 && *c == rw.one() {
        (false, ypow(k))
    } else {
        let coords: Vec<String> = c.coords().iter().map(u64::to_string).collect();
        let vec = format!("[{}]", coords.join(", "));
        let body = if k == 0 { vec } else { format!("{vec}*{}", ypow(k)) };
        (false, body)
    }
}

struct Scanner<'a> {
    rw: &'a GaloisRing,
    chars: Vec<char>,
    pos: usize,
}

impl Scanner<'_> {
    fn err(&self, msg: &str) -> String {
        format!("polynomial syntax error at character {}: {msg}", self.pos + 1)
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

    fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: char) -> Result<(), String> {
        if self.eat(want) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{want}'")))
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn starts_double_bracket(&self) -> bool {
        if self.peek() != Some('[') {
            return false;
        }
        self.chars[self.pos + 1..]
            .iter()
            .find(|c| !c.is_whitespace())
            .is_some_and(|&c| c == '[')
    }

    /// Unsigned integer literal, kept wide so any sensible modulus survives.
    fn magnitude(&mut self) -> Result<u128, String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        if digits.is_empty() {
            return Err(self.err("expected an integer"));
        }
        if digits.len() > 30 {
            return Err(self.err("integer literal too long"));
        }
        Ok(digits.parse().expect("digits parse"))
    }

    /// Integer with optional sign, reduced into the coefficient ring as a
    /// multiple of 1.
    fn int_elem(&mut self, neg: bool) -> Result<GrElem, String> {
        let v = self.magnitude()?;
        let q = self.rw.zq().modulus();
        let r = (v % q as u128) as u64;
        let r = if neg { (q - r) % q } else { r };
        let mut coords = vec![0u64; self.rw.f()];
        coords[0] = r;
        Ok(self.rw.from_coords(&coords).expect("coords are in range"))
    }

    /// `[c0, c1, ...]`: one coefficient-ring element by coordinates.
    fn vector_elem(&mut self) -> Result<GrElem, String> {
        self.expect('[')?;
        let q = self.rw.zq().modulus();
        let mut coords = Vec::new();
        loop {
            self.skip_ws();
            let neg = self.eat('-');
            self.skip_ws();
            let v = self.magnitude()?;
            let r = (v % q as u128) as u64;
            coords.push(if neg { (q - r) % q } else { r });
            self.skip_ws();
            if self.eat(',') {
                continue;
            }
            self.expect(']')?;
            break;
        }
        if coords.len() > self.rw.f() {
            return Err(self.err(&format!(
                "coefficient vector has {} entries but the coefficient ring has degree {}",
                coords.len(),
                self.rw.f()
            )));
        }
        coords.resize(self.rw.f(), 0);
        Ok(self.rw.from_coords(&coords).expect("coords are in range"))
    }

    fn exponent(&mut self) -> Result<usize, String> {
        let v = self.magnitude()?;
        if v > 4096 {
            return Err(self.err("exponent too large"));
        }
        Ok(v as usize)
    }

    /// One term after its sign: coefficient and/or power of `Y`.
    fn term(&mut self) -> Result<(GrElem, usize), String> {
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => Some(self.int_elem(false)?),
            Some('[') => Some(self.vector_elem()?),
            _ => None,
        };
        self.skip_ws();
        let star = coeff.is_some() && self.eat('*');
        if star {
            self.skip_ws();
        }
        let deg = if self.peek() == Some('Y') {
            self.pos += 1;
            self.skip_ws();
            if self.eat('^') {
                self.skip_ws();
                self.exponent()?
            } else {
                1
            }
        } else if star {
            return Err(self.err("expected Y after '*'"));
        } else {
            0
        };
        match coeff {
            Some(c) => Ok((c, deg)),
            None if deg > 0 => Ok((self.rw.one(), deg)),
            None => Err(self.err("expected a coefficient or a power of Y")),
        }
    }

    fn sum(&mut self) -> Result<GrPoly, String> {
        let mut acc: Vec<GrElem> = Vec::new();
        let mut first = true;
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                if first {
                    return Err(self.err("empty polynomial"));
                }
                break;
            }
            let neg = if first {
                if self.eat('-') {
                    true
                } else {
                    self.eat('+');
                    false
                }
            } else {
                match self.bump() {
                    Some('+') => false,
                    Some('-') => true,
                    Some(c) => return Err(self.err(&format!("expected '+' or '-', found '{c}'"))),
                    None => unreachable!("peeked above"),
                }
            };
            self.skip_ws();
            let (c, deg) = self.term()?;
            let c = if neg { self.rw.neg(&c) } else { c };
            if deg >= acc.len() {
                acc.resize(deg + 1, self.rw.zero());
            }
            acc[deg] = self.rw.add(&acc[deg], &c);
            first = false;
        }
        Ok(GrPoly::from_coeffs(self.rw, acc))
    }

    /// `[[c], [c], ...]`: coefficient vectors by ascending degree.
    fn whole_vector(&mut self) -> Result<GrPoly, String> {
        self.expect('[')?;
        let mut coeffs = Vec::new();
        loop {
            self.skip_ws();
            coeffs.push(self.vector_elem()?);
            self.skip_ws();
            if self.eat(',') {
                continue;
            }
            self.expect(']')?;
            break;
        }
        Ok(GrPoly::from_coeffs(self.rw, coeffs))
    }
}
