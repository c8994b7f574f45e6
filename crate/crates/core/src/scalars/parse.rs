//! Reader for the text produced by the `Display` impls of [`RatFun`] and [`SqrtExt`].

use super::{Cyclotomic, RatFun, ScalarError, SqrtExt, Symbol};

pub fn parse_ratfun(text: &str) -> Result<RatFun, ScalarError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

/// Parses `even + (odd)*r  [r^2 = radicand]`.
pub fn parse_sqrtext(text: &str) -> Result<SqrtExt, ScalarError> {
    let open = text.rfind('[').ok_or(ScalarError::Parse { pos: text.len(), msg: "missing radicand".into() })?;
    let decl = text[open..].trim();
    let rad_text = decl
        .strip_prefix("[r^2 =")
        .and_then(|s| s.strip_suffix(']'))
        .ok_or(ScalarError::Parse { pos: open, msg: "malformed radicand declaration".into() })?;
    let radicand = parse_ratfun(rad_text)?;
    let body = text[..open].trim();
    let mut p = Parser { src: body.as_bytes(), pos: 0 };
    let value = p.expr_with_root()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(SqrtExt::new(value.0, value.1, radicand))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::Parse { pos: self.pos, msg: msg.to_string() }
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFun, ScalarError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    /// A sum whose last summand may be `(…)*r`; returns (even, odd).
    fn expr_with_root(&mut self) -> Result<(RatFun, RatFun), ScalarError> {
        let mut even = RatFun::zero();
        let mut odd = RatFun::zero();
        let mut sign = if self.eat(b'-') { -1 } else { 1 };
        loop {
            let t = self.term()?;
            let t = if sign < 0 { -t } else { t };
            if self.peek() == Some(b'*') && self.root_follows() {
                self.pos += 1;
                self.eat(b'r');
                odd = &odd + &t;
            } else {
                even = &even + &t;
            }
            if self.eat(b'+') {
                sign = 1;
            } else if self.eat(b'-') {
                sign = -1;
            } else {
                return Ok((even, odd));
            }
        }
    }

    fn root_follows(&self) -> bool {
        let rest = &self.src[self.pos + 1..];
        let rest: Vec<u8> = rest.iter().copied().skip_while(|c| c.is_ascii_whitespace()).collect();
        rest.first() == Some(&b'r') && !rest.get(1).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
    }

    fn term(&mut self) -> Result<RatFun, ScalarError> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some(b'*') && !self.root_follows() {
                self.pos += 1;
                acc = &acc * &self.factor()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let rhs = self.factor()?;
                acc = acc.checked_div(&rhs).map_err(|_| ScalarError::Parse { pos: at, msg: "division by zero".into() })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<RatFun, ScalarError> {
        if self.eat(b'-') {
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let at = self.pos;
            let e = self.integer()?;
            let e: i32 = e.try_into().map_err(|_| ScalarError::Parse { pos: at, msg: "exponent too large".into() })?;
            let e = if neg { -e } else { e };
            return base.powi(e).map_err(|_| ScalarError::Parse { pos: at, msg: "negative power of zero".into() });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ScalarError::Parse { pos: start, msg: "integer out of range".into() })
    }

    fn atom(&mut self) -> Result<RatFun, ScalarError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(RatFun::int(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(d) = name.strip_prefix("zeta_") {
                    let d: u32 = d
                        .parse()
                        .ok()
                        .filter(|&d| d >= 1)
                        .ok_or(ScalarError::Parse { pos: start, msg: format!("bad root of unity `{name}`") })?;
                    return Ok(Cyclotomic::root_of_unity(d, 1).into());
                }
                name.parse::<Symbol>()
                    .map(RatFun::symbol)
                    .map_err(|_| ScalarError::Parse { pos: start, msg: format!("unknown symbol `{name}`") })
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_rendered_values() {
        let u = RatFun::symbol(Symbol::U);
        let z = RatFun::symbol(Symbol::Z);
        let w: RatFun = Cyclotomic::root_of_unity(3, 1).into();
        let vals = [
            &(&u * &u) - &(&u * &z) + RatFun::int(3),
            RatFun::frac(-1, 2) / u.clone(),
            (&z + &RatFun::one()) / (&u - &RatFun::one()),
            &w * &u + RatFun::frac(1, 7),
            -(RatFun::one() + w.clone()),
        ];
        for v in vals {
            let back = parse_ratfun(&v.to_string()).unwrap();
            assert_eq!(back, v, "{v}");
        }
    }

    #[test]
    fn round_trips_sqrtext() {
        let lam = (RatFun::symbol(Symbol::Q) + RatFun::one()) / RatFun::symbol(Symbol::Zeta);
        for (e, o) in [(RatFun::int(2), RatFun::zero()), (RatFun::zero(), RatFun::frac(-3, 4)), (RatFun::symbol(Symbol::Q), RatFun::int(-1))] {
            let v = SqrtExt::new(e, o, lam.clone());
            assert_eq!(parse_sqrtext(&v.to_string()).unwrap(), v, "{v}");
        }
    }

    #[test]
    fn reports_positions() {
        match parse_ratfun("u + * z") {
            Err(ScalarError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_ratfun("w").is_err());
        assert!(parse_ratfun("1/0").is_err());
        assert_eq!(parse_ratfun("-3/7").unwrap(), RatFun::frac(-3, 7));
    }
}
