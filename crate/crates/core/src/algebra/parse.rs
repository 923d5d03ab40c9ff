//! Text formats: polynomials, ideal files and point files.
//!
//! Polynomial grammar (whitespace insignificant):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' integer]
//! atom   := integer ['/' integer] | var | '(' expr ')'
//! var    := 'x' digits | 'x' | 'y' | 'z' | 'w'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::field::{Field, FieldSpec};
use crate::algebra::monomial::{Monomial, MAX_VARS};
use crate::algebra::poly::Polynomial;
use crate::error::{Error, Result};

struct Parser<'a, F: Field> {
    field: &'a F,
    nvars: usize,
    src: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            line: self.line,
            column: self.pos + 1,
            message: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn small_integer(&mut self) -> Result<u32> {
        let start = self.pos;
        let v = self.integer()?;
        match u32::try_from(&v) {
            Ok(e) if e <= 255 => Ok(e),
            _ => {
                self.pos = start;
                self.err("exponent out of range")
            }
        }
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = Polynomial::zero(self.field, self.nvars);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if sign > 0 { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == b'(' || matches!(c, b'x' | b'y' | b'z' | b'w'))
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some(b'*') {
                self.pos += 1;
                let f = self.factor()?;
                acc = acc.mul(&f);
            } else if self.starts_factor() {
                let f = self.factor()?;
                acc = acc.mul(&f);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.small_integer()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut den = BigInt::one();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    den = self.integer()?;
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                }
                let c = match self.field.from_ratio(&num, &den) {
                    Ok(c) => c,
                    Err(_) => return self.err("denominator not invertible in the field"),
                };
                Ok(Polynomial::constant(self.field, self.nvars, c))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c @ (b'x' | b'y' | b'z' | b'w')) => {
                let start = self.pos;
                self.pos += 1;
                let idx = if c == b'x'
                    && self.pos < self.src.len()
                    && self.src[self.pos].is_ascii_digit()
                {
                    let mut d = 0usize;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        d = d.saturating_mul(10).saturating_add((self.src[self.pos] - b'0') as usize);
                        self.pos += 1;
                    }
                    d
                } else {
                    match c {
                        b'x' => 0,
                        b'y' => 1,
                        b'z' => 2,
                        _ => 3,
                    }
                };
                if idx >= self.nvars {
                    self.pos = start;
                    return self.err(format!(
                        "variable out of range for a ring with {} variables",
                        self.nvars
                    ));
                }
                Ok(Polynomial::monomial(self.field, Monomial::var(self.nvars, idx)))
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse_line<F: Field>(field: &F, text: &str, nvars: usize, line: usize) -> Result<Polynomial<F>> {
    if nvars > MAX_VARS {
        return Err(Error::TooManyVariables(nvars));
    }
    let mut p = Parser {
        field,
        nvars,
        src: text.as_bytes(),
        pos: 0,
        line,
    };
    if p.peek().is_none() {
        return p.err("empty polynomial");
    }
    let f = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(f)
}

/// Parses one polynomial in a ring with `nvars` variables.
pub fn parse_polynomial<F: Field>(field: &F, text: &str, nvars: usize) -> Result<Polynomial<F>> {
    parse_line(field, text, nvars, 1)
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Raw contents of an ideal file before coefficients are interpreted.
#[derive(Clone, Debug)]
pub struct IdealFile {
    pub nvars: usize,
    pub field: FieldSpec,
    /// `(line number, text)` of each generator.
    pub generators: Vec<(usize, String)>,
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, FieldSpec)> = None;
        let mut generators = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let lineno = k + 1;
            let line = strip_comment(raw).trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("ring:") {
                if header.is_some() {
                    return Err(parse_err(lineno, 1, "duplicate ring header"));
                }
                header = Some(parse_header(rest, lineno)?);
                continue;
            }
            if header.is_none() {
                return Err(parse_err(lineno, 1, "missing 'ring:' header before generators"));
            }
            generators.push((lineno, line.to_string()));
        }
        let (nvars, field) = header.ok_or_else(|| parse_err(1, 1, "missing 'ring:' header"))?;
        if generators.is_empty() {
            return Err(parse_err(1, 1, "ideal file has no generators"));
        }
        Ok(IdealFile {
            nvars,
            field,
            generators,
        })
    }

    pub fn polynomials<F: Field>(&self, field: &F) -> Result<Vec<Polynomial<F>>> {
        self.generators
            .iter()
            .map(|(line, text)| parse_line(field, text, self.nvars, *line))
            .collect()
    }
}

fn parse_err(line: usize, column: usize, message: &str) -> Error {
    Error::Parse {
        line,
        column,
        message: message.to_string(),
    }
}

fn parse_header(rest: &str, line: usize) -> Result<(usize, FieldSpec)> {
    let mut nvars = None;
    let mut field = FieldSpec::default();
    for item in rest.split_whitespace() {
        if let Some(v) = item.strip_prefix("n=") {
            let n: usize = v
                .parse()
                .map_err(|_| parse_err(line, 1, "bad variable count"))?;
            if n > MAX_VARS {
                return Err(Error::TooManyVariables(n));
            }
            if n == 0 {
                return Err(parse_err(line, 1, "ring needs at least one variable"));
            }
            nvars = Some(n);
        } else if let Some(v) = item.strip_prefix("field=") {
            field = v.parse().map_err(|_| parse_err(line, 1, "bad field"))?;
        } else {
            return Err(parse_err(line, 1, &format!("unknown header item '{item}'")));
        }
    }
    let n = nvars.ok_or_else(|| parse_err(line, 1, "header lacks n=<nvars>"))?;
    Ok((n, field))
}

/// Points file: one point per line, whitespace-separated integer or `p/q` coordinates.
pub fn parse_points(text: &str) -> Result<Vec<Vec<BigRational>>> {
    let mut out: Vec<Vec<BigRational>> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let lineno = k + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        let mut coords = Vec::new();
        let mut col = 0;
        for tok in line.split_whitespace() {
            col = line[col..].find(tok).map(|i| i + col).unwrap_or(col);
            coords.push(parse_rational(tok).ok_or_else(|| {
                parse_err(lineno, col + 1, &format!("bad coordinate '{tok}'"))
            })?);
            col += tok.len();
        }
        if let Some(first) = out.first() {
            if first.len() != coords.len() {
                return Err(parse_err(lineno, 1, "inconsistent number of coordinates"));
            }
        }
        if coords.len() > MAX_VARS {
            return Err(Error::TooManyVariables(coords.len()));
        }
        if coords.iter().all(|c| c.is_zero()) {
            return Err(parse_err(lineno, 1, "the zero vector is not a projective point"));
        }
        out.push(coords);
    }
    if out.is_empty() {
        return Err(parse_err(1, 1, "points file is empty"));
    }
    Ok(out)
}

fn parse_rational(tok: &str) -> Option<BigRational> {
    let (num, den) = match tok.split_once('/') {
        Some((a, b)) => (a.parse::<BigInt>().ok()?, b.parse::<BigInt>().ok()?),
        None => (tok.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    #[test]
    fn parses_grammar() {
        let f = parse_polynomial(&Rationals, "y^3*z - y z^3 + 1/2 x0^2", 3).unwrap();
        assert_eq!(f.to_string(), "y^3*z - y*z^3 + 1/2*x^2");
        let g = parse_polynomial(&Rationals, "-3x1^2 + 2*x0*x1", 2).unwrap();
        assert_eq!(g.to_string(), "2*x*y - 3*y^2");
        let h = parse_polynomial(&PrimeField::default(), "x7 - x0", 8).unwrap();
        assert_eq!(h.to_string(), "-x0 + x7");
    }

    #[test]
    fn reports_locations() {
        match parse_polynomial(&Rationals, "x + w", 3) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial(&Rationals, "", 3).is_err());
        assert!(parse_polynomial(&Rationals, "x +", 3).is_err());
        assert!(parse_polynomial(&Rationals, "x 3/0", 3).is_err());
    }

    #[test]
    fn ideal_file() {
        let text = "# thirteen points\nring: n=3 field=rationals\ny^3*z - y*z^3\nx^3*z - x*z^3 # c\nx^3*y - x*y^3\n";
        let f = IdealFile::parse(text).unwrap();
        assert_eq!(f.nvars, 3);
        assert_eq!(f.field, FieldSpec::Rationals);
        assert_eq!(f.polynomials(&Rationals).unwrap().len(), 3);
        assert!(IdealFile::parse("x^2\n").is_err());
        assert!(IdealFile::parse("ring: n=3\n").is_err());
        match IdealFile::parse("ring: n=3\nx^2\nx + q\n").unwrap().polynomials(&Rationals) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn points_file() {
        let p = parse_points("1 0 0\n# c\n1 -1 1/2\n").unwrap();
        assert_eq!(p.len(), 2);
        assert!(parse_points("").is_err());
        assert!(parse_points("1 0\n1 0 0\n").is_err());
        assert!(parse_points("0 0 0\n").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial<Rationals>> {
        proptest::collection::vec(
            ((0u32..4, 0u32..4, 0u32..4, 0u32..3), -50i64..50, 1i64..7),
            0..6,
        )
        .prop_map(|ts| {
            let terms = ts
                .into_iter()
                .map(|((a, b, c, d), n, den)| {
                    (
                        Monomial::from_exps(&[a, b, c, d]),
                        BigRational::new(n.into(), den.into()),
                    )
                })
                .collect();
            Polynomial::from_terms(&Rationals, 4, terms)
        })
    }

    proptest! {
        #[test]
        fn printer_round_trips(f in arb_poly()) {
            let s = f.to_string();
            prop_assert_eq!(parse_polynomial(&Rationals, &s, 4).unwrap(), f);
        }

        #[test]
        fn printer_round_trips_mod_p(f in arb_poly()) {
            let fp = PrimeField::default();
            let g = parse_polynomial(&fp, &f.to_string(), 4).unwrap();
            prop_assert_eq!(parse_polynomial(&fp, &g.to_string(), 4).unwrap(), g);
        }
    }
}
