use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

/// Polynomial in two formal variables `H` and `V` with nonnegative integer
/// coefficients. Zero coefficients are never stored, so derived equality is
/// coefficient-wise equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigUint>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    /// Build from `(h_exponent, v_exponent, coefficient)` triples; repeated
    /// monomials accumulate.
    pub fn from_terms<C: Into<BigUint>>(terms: impl IntoIterator<Item = (u32, u32, C)>) -> Self {
        let mut poly = BiPoly::zero();
        for (h, v, c) in terms {
            poly.add_term(h, v, c.into());
        }
        poly
    }

    pub fn add_term(&mut self, h: u32, v: u32, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((h, v)).or_default();
        *slot += coeff;
    }

    pub fn coeff(&self, h: u32, v: u32) -> BigUint {
        self.terms.get(&(h, v)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(h, v, coefficient)` in ascending `(h, v)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigUint)> {
        self.terms.iter().map(|(&(h, v), c)| (h, v, c))
    }

    /// Coefficients of the univariate polynomial obtained by setting
    /// `H = V = x`, keyed by degree.
    pub fn diagonal(&self) -> BTreeMap<u32, BigUint> {
        let mut out: BTreeMap<u32, BigUint> = BTreeMap::new();
        for (&(h, v), c) in &self.terms {
            *out.entry(h + v).or_default() += c;
        }
        out
    }

    /// Evaluate at integer points.
    pub fn eval(&self, h: &BigUint, v: &BigUint) -> BigUint {
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * h.pow(a) * v.pow(b))
            .sum()
    }
}

fn power(f: &mut fmt::Formatter<'_>, var: char, exp: u32) -> fmt::Result {
    match exp {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        e => write!(f, "{var}^{e}"),
    }
}

impl fmt::Display for BiPoly {
    /// Compact form such as `H^2 + 2H^2V + V^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&(h, v), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let unit = *c == BigUint::from(1u32);
            if !unit || (h == 0 && v == 0) {
                write!(f, "{c}")?;
            }
            power(f, 'H', h)?;
            power(f, 'V', v)?;
        }
        Ok(())
    }
}
