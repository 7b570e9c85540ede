//! Parser for monomial-ideal expressions.
//!
//! Grammar: comma-separated monomials; monomial := factor ('*' factor)*;
//! factor := var ('^' natural)?. Variables are x, y, z for dimension <= 3
//! and x1..xd in general (the indexed form is always accepted). A leading
//! '[' switches to the exponent-list form, e.g. `[[3,0],[1,1],[0,3]]`.

use crate::fail::Failure;
use lech_core::{AmbientRing, ExponentVector, MonomialIdeal};

const MAX_EXPONENT: i64 = 1_000_000;

pub fn parse_ideal(text: &str, ring: &AmbientRing) -> Result<MonomialIdeal, Failure> {
    if text.trim_start().starts_with('[') {
        return parse_exponent_lists(text, ring);
    }
    let gens = Parser::new(text, ring.dim()).parse()?;
    Ok(MonomialIdeal::new(ring.clone(), gens)?)
}

fn parse_exponent_lists(text: &str, ring: &AmbientRing) -> Result<MonomialIdeal, Failure> {
    let lists: Vec<Vec<i64>> = serde_json::from_str(text)
        .map_err(|e| Failure::at("syntax", format!("bad exponent list: {e}"), 0))?;
    let mut gens = Vec::new();
    for l in lists {
        if l.len() != ring.dim() {
            return Err(Failure::input(
                "invalid_generator",
                format!("exponent vector {l:?} has the wrong dimension"),
            ));
        }
        if l.iter().any(|&c| c > MAX_EXPONENT) {
            return Err(Failure::input(
                "exponent_overflow",
                format!("exponent in {l:?} exceeds {MAX_EXPONENT}"),
            ));
        }
        gens.push(ExponentVector::new(l).map_err(Failure::from)?);
    }
    Ok(MonomialIdeal::new(ring.clone(), gens)?)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    dim: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, dim: usize) -> Self {
        Self { bytes: text.as_bytes(), pos: 0, dim }
    }

    fn parse(mut self) -> Result<Vec<ExponentVector>, Failure> {
        let mut gens = Vec::new();
        loop {
            gens.push(self.monomial()?);
            self.skip_ws();
            match self.peek() {
                None => return Ok(gens),
                Some(b',') => {
                    self.pos += 1;
                }
                Some(c) => {
                    return Err(Failure::at(
                        "syntax",
                        format!("expected ',' or end of input, found '{}'", c as char),
                        self.pos,
                    ))
                }
            }
        }
    }

    fn monomial(&mut self) -> Result<ExponentVector, Failure> {
        let mut exps = vec![0i64; self.dim];
        loop {
            self.factor(&mut exps)?;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(ExponentVector::new(exps).expect("accumulated exponents are nonnegative"))
    }

    fn factor(&mut self, exps: &mut [i64]) -> Result<(), Failure> {
        self.skip_ws();
        let start = self.pos;
        let var = match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                c
            }
            Some(c) => {
                return Err(Failure::at(
                    "syntax",
                    format!("expected a variable, found '{}'", c as char),
                    start,
                ))
            }
            None => return Err(Failure::at("syntax", "unexpected end of input", start)),
        };
        let index = if var == b'x' && self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.natural()?;
            if n < 1 || n as usize > self.dim {
                return Err(Failure::at(
                    "unknown_variable",
                    format!("x{n} is out of range for dimension {}", self.dim),
                    start,
                ));
            }
            n as usize - 1
        } else {
            let i = match var {
                b'x' => 0,
                b'y' => 1,
                b'z' => 2,
                other => {
                    return Err(Failure::at(
                        "unknown_variable",
                        format!("unknown variable '{}'", other as char),
                        start,
                    ))
                }
            };
            if self.dim > 3 || i >= self.dim {
                return Err(Failure::at(
                    "unknown_variable",
                    format!(
                        "variable '{}' is not available in dimension {}",
                        var as char, self.dim
                    ),
                    start,
                ));
            }
            i
        };

        self.skip_ws();
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            self.natural()?
        } else {
            1
        };
        exps[index] += exp;
        if exps[index] > MAX_EXPONENT {
            return Err(Failure::at(
                "exponent_overflow",
                format!("exponent exceeds {MAX_EXPONENT}"),
                start,
            ));
        }
        Ok(())
    }

    fn natural(&mut self) -> Result<i64, Failure> {
        let start = self.pos;
        let mut value: i64 = 0;
        let mut any = false;
        while let Some(c) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            any = true;
            value = value * 10 + (c - b'0') as i64;
            if value > MAX_EXPONENT {
                return Err(Failure::at(
                    "exponent_overflow",
                    format!("number exceeds {MAX_EXPONENT}"),
                    start,
                ));
            }
            self.pos += 1;
        }
        if !any {
            return Err(Failure::at("syntax", "expected a number", start));
        }
        Ok(value)
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }
}

/// Ambient ring specification: `poly:<d>` or `semigroup:[[...],...]`.
pub fn parse_ring(spec: &str) -> Result<AmbientRing, Failure> {
    if let Some(d) = spec.strip_prefix("poly:") {
        let dim: usize = d
            .trim()
            .parse()
            .map_err(|_| Failure::input("invalid_ring", format!("bad dimension '{d}'")))?;
        return Ok(AmbientRing::polynomial(dim)?);
    }
    if let Some(body) = spec.strip_prefix("semigroup:") {
        let lists: Vec<Vec<i64>> = serde_json::from_str(body).map_err(|e| {
            Failure::input("invalid_ring", format!("bad semigroup generator list: {e}"))
        })?;
        let gens: Result<Vec<ExponentVector>, _> =
            lists.into_iter().map(ExponentVector::new).collect();
        return Ok(AmbientRing::semigroup(gens.map_err(Failure::from)?)?);
    }
    Err(Failure::input(
        "invalid_ring",
        format!("ring spec '{spec}' must start with 'poly:' or 'semigroup:'"),
    ))
}
