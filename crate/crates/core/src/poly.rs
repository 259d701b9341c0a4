//! Integer Laurent polynomials, just enough for Alexander polynomials of torus
//! knots and their cables.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent {
    // exponent -> nonzero coefficient
    terms: BTreeMap<i64, i64>,
}

impl Laurent {
    pub fn monomial(coeff: i64, exp: i64) -> Self {
        let mut p = Self::default();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::default();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: i64) {
        let c = self.terms.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing exponent order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().rev().map(|(&e, &c)| (e, c))
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::default();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(e, -c);
        }
        out
    }

    /// `p(t^k)`.
    pub fn substitute_power(&self, k: i64) -> Laurent {
        Laurent::from_terms(self.terms.iter().map(|(&e, &c)| (e * k, c)))
    }

    pub fn shift(&self, by: i64) -> Laurent {
        Laurent::from_terms(self.terms.iter().map(|(&e, &c)| (e + by, c)))
    }

    /// Exact division by a divisor with leading coefficient ±1. Returns `None`
    /// when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Laurent) -> Option<Laurent> {
        let (d_top, d_lead) = divisor.terms_desc().next()?;
        if d_lead.abs() != 1 {
            return None;
        }
        let d_min = divisor.min_exp()?;
        let mut rem = self.clone();
        let mut quotient = Laurent::default();
        while let Some(top) = rem.max_exp() {
            if top - d_top < rem.min_exp()? - d_min {
                return None;
            }
            let c = rem.terms[&top] * d_lead;
            let q = Laurent::monomial(c, top - d_top);
            rem = rem.sub(&q.mul(divisor));
            quotient.add_term(top - d_top, c);
        }
        Some(quotient)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms_desc().enumerate() {
            match (k, c < 0) {
                (0, false) => write!(f, "{c}t^{e}")?,
                (0, true) => write!(f, "-{}t^{e}", -c)?,
                (_, false) => write!(f, " + {c}t^{e}")?,
                (_, true) => write!(f, " - {}t^{e}", -c)?,
            }
        }
        Ok(())
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `t^n - 1`.
fn t_power_minus_one(n: i64) -> Laurent {
    Laurent::from_terms([(n, 1), (0, -1)])
}

/// Symmetrized Alexander polynomial of the torus knot `T(p, q)`:
/// `t^{-(p-1)(q-1)/2} (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`.
pub fn torus_alexander(p: i64, q: i64) -> Laurent {
    let num = t_power_minus_one(p * q).mul(&t_power_minus_one(1));
    let den = t_power_minus_one(p).mul(&t_power_minus_one(q));
    let quotient = num.div_exact(&den).expect("torus knot Alexander quotient is exact");
    quotient.shift(-(p - 1) * (q - 1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division() {
        // (t^2 - 1) / (t - 1) = t + 1
        let q = t_power_minus_one(2).div_exact(&t_power_minus_one(1)).unwrap();
        assert_eq!(q, Laurent::from_terms([(1, 1), (0, 1)]));
        assert!(Laurent::from_terms([(2, 1), (0, 1)]).div_exact(&t_power_minus_one(1)).is_none());
    }

    #[test]
    fn trefoil_polynomial() {
        assert_eq!(torus_alexander(2, 3), Laurent::from_terms([(1, 1), (0, -1), (-1, 1)]));
    }

    #[test]
    fn display() {
        assert_eq!(Laurent::from_terms([(1, 1), (0, -1), (-1, 1)]).to_string(), "1t^1 - 1t^0 + 1t^-1");
    }
}
