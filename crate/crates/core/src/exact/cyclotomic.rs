use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use super::poly::{cyclotomic_polynomial, q_div_rem, q_ext_gcd, q_from_int, q_trim, QPoly};
use super::{ExactError, Field, IntPolynomial, Rational};

/// Shared reduction data for `Q(zeta_d) = Q[x] / Phi_d`.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    modulus: IntPolynomial,
    q_modulus: QPoly,
    degree: usize,
    // x^k mod Phi_d for k in 0..2*degree
    powers: Vec<QPoly>,
}

impl CyclotomicField {
    /// Returns the cached field of order `d`. Fails for `d == 0`.
    pub fn get(order: u32) -> Result<Arc<CyclotomicField>, ExactError> {
        if order == 0 {
            return Err(ExactError::InvalidOrder(order));
        }
        static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
        let mut cache = FIELDS
            .get_or_init(Default::default)
            .lock()
            .unwrap_or_else(|e| e.into_inner());
        Ok(cache
            .entry(order)
            .or_insert_with(|| Arc::new(CyclotomicField::build(order)))
            .clone())
    }

    fn build(order: u32) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let q_modulus = q_from_int(&modulus);
        let degree = modulus.degree().expect("cyclotomic polynomial is nonzero");
        let mut powers = Vec::with_capacity(2 * degree);
        for k in 0..2 * degree {
            let mut mono = vec![Rational::zero(); k + 1];
            mono[k] = Rational::one();
            let (_, mut r) = q_div_rem(&mono, &q_modulus);
            r.resize(degree, Rational::zero());
            powers.push(r);
        }
        CyclotomicField {
            order,
            modulus,
            q_modulus,
            degree,
            powers,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &IntPolynomial {
        &self.modulus
    }

    /// Dimension over the rationals, `totient(d)`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    fn reduce_short(&self, prod: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.degree];
        for (k, c) in prod.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < self.degree {
                out[k] = &out[k] + c;
            } else {
                for (slot, p) in out.iter_mut().zip(&self.powers[k]) {
                    if !p.is_zero() {
                        *slot = &*slot + &(c * p);
                    }
                }
            }
        }
        out
    }

    fn reduce_any(&self, coeffs: &[Rational]) -> Vec<Rational> {
        if coeffs.len() <= 2 * self.degree {
            return self.reduce_short(coeffs);
        }
        let (_, mut r) = q_div_rem(&coeffs.to_vec(), &self.q_modulus);
        r.resize(self.degree, Rational::zero());
        r
    }
}

/// Element of the cyclotomic field `Q(zeta_d)`, stored as a residue modulo
/// `Phi_d` in the power basis `1, z, ..., z^(totient(d)-1)`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Builds `sum coeffs[k] * z^k`, reducing modulo `Phi_d`.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Result<Self, ExactError> {
        let field = CyclotomicField::get(order)?;
        let coeffs = field.reduce_any(&coeffs);
        Ok(Cyclotomic { field, coeffs })
    }

    pub fn from_rational(order: u32, value: Rational) -> Result<Self, ExactError> {
        Cyclotomic::from_coeffs(order, vec![value])
    }

    pub fn zero(order: u32) -> Result<Self, ExactError> {
        Cyclotomic::from_coeffs(order, Vec::new())
    }

    pub fn one(order: u32) -> Result<Self, ExactError> {
        Cyclotomic::from_rational(order, Rational::one())
    }

    /// `zeta_d^k` for any integer `k` (taken modulo `d`).
    pub fn zeta_pow(order: u32, k: i64) -> Result<Self, ExactError> {
        if order == 0 {
            return Err(ExactError::InvalidOrder(order));
        }
        let e = k.rem_euclid(order as i64) as usize;
        let mut coeffs = vec![Rational::zero(); e + 1];
        coeffs[e] = Rational::one();
        Cyclotomic::from_coeffs(order, coeffs)
    }

    pub fn zeta(order: u32) -> Result<Self, ExactError> {
        Cyclotomic::zeta_pow(order, 1)
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// Power-basis coefficients, always `totient(d)` of them.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The element as a rational, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_order(&self, rhs: &Self) -> Result<(), ExactError> {
        if self.order() == rhs.order() {
            Ok(())
        } else {
            Err(ExactError::OrderMismatch {
                left: self.order(),
                right: rhs.order(),
            })
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cyclotomic {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Cyclotomic {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.check_order(rhs)?;
        let n = self.field.degree;
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] = &prod[i + j] + &(a * b);
                }
            }
        }
        Ok(Cyclotomic {
            field: self.field.clone(),
            coeffs: self.field.reduce_short(&prod),
        })
    }

    /// Inverse via the extended Euclidean algorithm against `Phi_d`.
    pub fn checked_inv(&self) -> Result<Self, ExactError> {
        let mut a: QPoly = self.coeffs.clone();
        q_trim(&mut a);
        if a.is_empty() {
            return Err(ExactError::DivisionByZero);
        }
        let (g, s) = q_ext_gcd(&a, &self.field.q_modulus);
        // Phi_d is irreducible, so any nonzero residue is coprime to it.
        debug_assert_eq!(g, vec![Rational::one()]);
        Ok(Cyclotomic {
            field: self.field.clone(),
            coeffs: self.field.reduce_any(&s),
        })
    }

    /// Image under `z -> z^(-1)`, complex conjugation for the standard
    /// embedding.
    pub fn conj(&self) -> Self {
        let d = self.order() as usize;
        let mut coeffs = vec![Rational::zero(); d.max(1)];
        for (k, c) in self.coeffs.iter().enumerate() {
            let e = (d - k % d) % d;
            coeffs[e] = &coeffs[e] + c;
        }
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.field.reduce_any(&coeffs),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order().hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Display for Cyclotomic {
    /// Renders as a polynomial in `z`, e.g. `1 - z` or `-1/2 + 3/2*z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = if c.is_negative() { -c } else { c.clone() };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag == Rational::one();
            match k {
                0 => write!(f, "{mag}")?,
                _ if unit => {}
                _ => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod Phi_{})", self, self.order())
    }
}

impl Field for Cyclotomic {
    fn zero_like(&self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: vec![Rational::zero(); self.field.degree],
        }
    }

    fn one_like(&self) -> Self {
        let mut coeffs = vec![Rational::zero(); self.field.degree];
        coeffs[0] = Rational::one();
        Cyclotomic {
            field: self.field.clone(),
            coeffs,
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    fn plus(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("cyclotomic order mismatch")
    }

    fn minus(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).expect("cyclotomic order mismatch")
    }

    fn times(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("cyclotomic order mismatch")
    }

    fn negated(&self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn inverse(&self) -> Self {
        self.checked_inv().expect("inverse of zero")
    }

    fn conjugate(&self) -> Self {
        self.conj()
    }
}
