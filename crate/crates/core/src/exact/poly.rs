use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ExactError, Rational};

/// Polynomial with integer coefficients, lowest degree first. The
/// coefficient vector never carries trailing zeros; the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    /// `1 + x + ... + x^(n-1)`, the q-integer `[n]_q`.
    pub fn q_integer(n: usize) -> Self {
        IntPolynomial::new(vec![1; n])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: i64) -> i128 {
        self.coeffs
            .iter()
            .rev()
            .fold(0i128, |acc, &c| acc * x as i128 + c as i128)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).expect("polynomial coefficient overflow");
                out[i + j] = out[i + j]
                    .checked_add(term)
                    .expect("polynomial coefficient overflow");
            }
        }
        IntPolynomial::new(out)
    }

    /// Long division. Fails if the divisor is zero or if some step would
    /// need a non-integral quotient coefficient.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ExactError> {
        let dd = divisor.degree().ok_or(ExactError::DivisionByZero)?;
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((IntPolynomial::zero(), self.clone()));
        }
        let mut quot = vec![0i64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd];
            if top == 0 {
                continue;
            }
            if top % lead != 0 {
                return Err(ExactError::NonIntegralQuotient);
            }
            let c = top / lead;
            quot[k] = c;
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= c * b;
            }
        }
        Ok((IntPolynomial::new(quot), IntPolynomial::new(rem)))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, ExactError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ExactError::NonZeroRemainder)
        }
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Renders the polynomial in the variable `var`, lowest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 || mag != 1 {
                out.push_str(&mag.to_string());
            }
            out.push_str(&mono);
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self.display_in("x"))
    }
}

/// The `d`-th cyclotomic polynomial, obtained by dividing `x^d - 1` by
/// `Phi_e` for every proper divisor `e` of `d`.
///
/// Panics if `d == 0`.
pub fn cyclotomic_polynomial(d: u32) -> IntPolynomial {
    assert!(d >= 1, "cyclotomic order must be positive");
    let mut memo = HashMap::new();
    cyclotomic_memo(d, &mut memo)
}

fn cyclotomic_memo(d: u32, memo: &mut HashMap<u32, IntPolynomial>) -> IntPolynomial {
    if let Some(p) = memo.get(&d) {
        return p.clone();
    }
    let mut coeffs = vec![0i64; d as usize + 1];
    coeffs[0] = -1;
    coeffs[d as usize] = 1;
    let mut p = IntPolynomial::new(coeffs);
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        let phi_e = cyclotomic_memo(e, memo);
        p = p
            .exact_div(&phi_e)
            .expect("cyclotomic factor divides x^d - 1");
    }
    memo.insert(d, p.clone());
    p
}

pub fn euler_totient(d: u32) -> u32 {
    (1..=d).filter(|&k| num_integer::gcd(k, d) == 1).count() as u32
}

// Dense polynomials over the rationals, lowest degree first. Internal helper
// for cyclotomic reduction and inversion.
pub(crate) type QPoly = Vec<Rational>;

pub(crate) fn q_trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn q_from_int(p: &IntPolynomial) -> QPoly {
    p.coeffs().iter().map(|&c| Rational::integer(c)).collect()
}

pub(crate) fn q_mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    q_trim(&mut out);
    out
}

pub(crate) fn q_sub(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.len().max(b.len());
    let zero = Rational::zero();
    let mut out: QPoly = (0..n)
        .map(|k| a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero))
        .collect();
    q_trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero and trimmed.
pub(crate) fn q_div_rem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let db = b.len() - 1;
    let lead_inv = b[db].checked_inv().expect("nonzero divisor");
    let mut rem = a.clone();
    q_trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] = &rem[k + i] - &(&c * bi);
        }
        quot[k] = c;
    }
    q_trim(&mut quot);
    q_trim(&mut rem);
    (quot, rem)
}

/// Extended Euclid: returns `(g, s)` with `s*a ≡ g (mod b)` and `g` the
/// monic gcd of `a` and `b`.
pub(crate) fn q_ext_gcd(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    q_trim(&mut r0);
    q_trim(&mut r1);
    let (mut s0, mut s1): (QPoly, QPoly) = (vec![Rational::one()], Vec::new());
    while !r1.is_empty() {
        let (q, r) = q_div_rem(&r0, &r1);
        let s2 = q_sub(&s0, &q_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if let Some(lead) = r0.last().cloned() {
        let inv = lead.checked_inv().expect("nonzero leading coefficient");
        for c in r0.iter_mut().chain(s0.iter_mut()) {
            *c = &*c * &inv;
        }
    }
    (r0, s0)
}
