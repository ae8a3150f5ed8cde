use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{parse_rational, serde_rational, Rational};
use crate::error::{Error, Result};

/// Affine function `constant + slope * c` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearInC {
    #[serde(with = "serde_rational")]
    pub constant: Rational,
    #[serde(with = "serde_rational")]
    pub slope: Rational,
}

impl LinearInC {
    pub fn new(constant: Rational, slope: Rational) -> Self {
        LinearInC { constant, slope }
    }

    pub fn constant(x: Rational) -> Self {
        LinearInC::new(x, Rational::zero())
    }

    pub fn zero() -> Self {
        LinearInC::constant(Rational::zero())
    }

    /// The function `c` itself.
    pub fn c() -> Self {
        LinearInC::new(Rational::zero(), Rational::one())
    }

    pub fn eval(&self, c: &Rational) -> Rational {
        &self.constant + &self.slope * c
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.slope.is_zero()
    }

    /// Unique zero, if the slope is nonzero.
    pub fn root(&self) -> Option<Rational> {
        (!self.slope.is_zero()).then(|| -&self.constant / &self.slope)
    }

    /// Parses sums of terms like `1/2`, `c`, `-3c`, `2/3*c`, `c/6`, plus the printed form
    /// `(a + bc)/n`.
    pub fn parse(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|ch| !ch.is_whitespace()).collect();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some((inner, den)) = rest.split_once(")/") {
                let den = parse_rational(den)?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {text:?}")));
                }
                return Ok(&LinearInC::parse(inner)? * &den.recip());
            }
        }
        if s.is_empty() {
            return Err(Error::Parse("empty expression".into()));
        }
        let bytes = s.as_bytes();
        let mut terms = Vec::new();
        let mut start = 0;
        for i in 1..=bytes.len() {
            if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/') {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        let mut out = LinearInC::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes()[0] {
                b'+' => (false, &term[1..]),
                b'-' => (true, &term[1..]),
                _ => (false, term),
            };
            let (value, is_c) = match body.split_once('c') {
                Some((coef, tail)) => {
                    let coef = coef.strip_suffix('*').unwrap_or(coef);
                    let mut k = if coef.is_empty() {
                        Rational::one()
                    } else {
                        parse_rational(coef)?
                    };
                    if !tail.is_empty() {
                        let den = tail
                            .strip_prefix('/')
                            .ok_or_else(|| Error::Parse(format!("bad term {term:?}")))
                            .and_then(parse_rational)?;
                        if den.is_zero() {
                            return Err(Error::Parse(format!("zero denominator in {term:?}")));
                        }
                        k /= den;
                    }
                    (k, true)
                }
                None => (parse_rational(body)?, false),
            };
            let value = if neg { -value } else { value };
            if is_c {
                out.slope += value;
            } else {
                out.constant += value;
            }
        }
        Ok(out)
    }

    /// Line through the first two samples; every further sample must lie on it.
    pub fn fit(samples: &[(Rational, Rational)]) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::Degenerate("need two samples to fit a line".into()));
        }
        let (x0, y0) = &samples[0];
        let (x1, y1) = &samples[1];
        if x0 == x1 {
            return Err(Error::Degenerate("repeated sample point".into()));
        }
        let slope = (y1 - y0) / (x1 - x0);
        let line = LinearInC::new(y0 - &slope * x0, slope);
        for (x, y) in &samples[2..] {
            let got = line.eval(x);
            if &got != y {
                return Err(Error::Nonlinearity(format!(
                    "value {y} at c = {x} is off the line {line} (which gives {got})"
                )));
            }
        }
        Ok(line)
    }
}

impl Add for &LinearInC {
    type Output = LinearInC;
    fn add(self, o: &LinearInC) -> LinearInC {
        LinearInC::new(&self.constant + &o.constant, &self.slope + &o.slope)
    }
}

impl Sub for &LinearInC {
    type Output = LinearInC;
    fn sub(self, o: &LinearInC) -> LinearInC {
        LinearInC::new(&self.constant - &o.constant, &self.slope - &o.slope)
    }
}

impl Neg for &LinearInC {
    type Output = LinearInC;
    fn neg(self) -> LinearInC {
        LinearInC::new(-&self.constant, -&self.slope)
    }
}

impl Mul<&Rational> for &LinearInC {
    type Output = LinearInC;
    fn mul(self, k: &Rational) -> LinearInC {
        LinearInC::new(&self.constant * k, &self.slope * k)
    }
}

/// Prints e.g. `(1 - 4c)/3`, `2 - 3c`, `5/2`, `-c/6`.
impl fmt::Display for LinearInC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slope.is_zero() {
            return write!(f, "{}", self.constant);
        }
        let den = num_integer::lcm(self.constant.denom().clone(), self.slope.denom().clone());
        let a = (&self.constant * Rational::from_integer(den.clone())).to_integer();
        let b = (&self.slope * Rational::from_integer(den.clone())).to_integer();
        let coef = |b: &num_bigint::BigInt| {
            if b.abs().is_one() {
                String::new()
            } else {
                b.abs().to_string()
            }
        };
        let body = if a.is_zero() {
            let sign = if b.is_negative() { "-" } else { "" };
            format!("{sign}{}c", coef(&b))
        } else {
            let op = if b.is_negative() { "-" } else { "+" };
            format!("{a} {op} {}c", coef(&b))
        };
        if den.is_one() {
            f.write_str(&body)
        } else if a.is_zero() {
            write!(f, "{body}/{den}")
        } else {
            write!(f, "({body})/{den}")
        }
    }
}
