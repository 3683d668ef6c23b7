//! Arithmetic in GF(2^n).
//!
//! Elements are coefficient bitmasks (bit `i` is the coefficient of `x^i`),
//! reduced modulo a fixed irreducible polynomial. The field also carries one
//! distinguished endomorphism `θ: x ↦ x^(2^k)`, stored as its exponent `k`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("degree {0} outside the supported range 1..={MAX_DEGREE}")]
    Degree(u32),
    #[error("modulus {modulus:#b} does not have degree {degree}")]
    ModulusDegree { modulus: u32, degree: u32 },
    #[error("modulus {0:#b} is reducible over GF(2)")]
    Reducible(u32),
    #[error("theta exponent {exponent} must be below the degree {degree}")]
    ThetaExponent { exponent: u32, degree: u32 },
    #[error("theta exponent {exponent} is not a Tits exponent for degree {degree} (need 2k ≡ 1 mod n)")]
    NotTits { exponent: u32, degree: u32 },
    #[error("value {value} is not an element of GF(2^{degree})")]
    NotAnElement { value: u32, degree: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

/// A field element, as its coefficient bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub(crate) const fn from_raw(bits: u32) -> Self {
        FieldElement(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Polynomial remainder of `value` modulo `modulus` over GF(2).
fn poly_rem(mut value: u64, modulus: u64) -> u64 {
    let mdeg = 63 - modulus.leading_zeros();
    while value != 0 {
        let vdeg = 63 - value.leading_zeros();
        if vdeg < mdeg {
            break;
        }
        value ^= modulus << (vdeg - mdeg);
    }
    value
}

/// Trial division by every polynomial of degree `1..=deg/2`.
pub fn is_irreducible(poly: u32) -> bool {
    if poly < 2 {
        return false;
    }
    let degree = 31 - poly.leading_zeros();
    if degree == 1 {
        return true;
    }
    let max_divisor = 1u64 << (degree / 2 + 1);
    (2..max_divisor).all(|d| poly_rem(u64::from(poly), d) != 0)
}

/// The irreducible polynomial of degree `n` with the smallest integer encoding.
pub fn find_irreducible(n: u32) -> u32 {
    assert!((1..=31).contains(&n), "degree {n} out of range");
    ((1u32 << n)..=u32::MAX)
        .find(|&p| is_irreducible(p))
        .expect("an irreducible polynomial exists in every degree")
}

/// Field description: degree, modulus and the exponent of θ.
///
/// Serializes as `{degree, modulus, theta_exponent, tits}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFieldSpec")]
pub struct FieldSpec {
    degree: u32,
    modulus: u32,
    theta_exponent: u32,
    tits: bool,
}

#[derive(Deserialize)]
struct RawFieldSpec {
    degree: u32,
    modulus: u32,
    theta_exponent: u32,
    tits: bool,
}

impl TryFrom<RawFieldSpec> for FieldSpec {
    type Error = FieldError;

    fn try_from(raw: RawFieldSpec) -> Result<Self, Self::Error> {
        FieldSpec::with_modulus(raw.degree, raw.modulus, raw.theta_exponent, raw.tits)
    }
}

impl FieldSpec {
    /// GF(2^n) with the default modulus and θ the identity.
    pub fn new(degree: u32) -> Result<Self, FieldError> {
        Self::check_degree(degree)?;
        Self::with_modulus(degree, find_irreducible(degree), 0, false)
    }

    /// GF(2^n) (n odd) with θ the Tits automorphism `x ↦ x^(2^((n+1)/2))`.
    pub fn tits(degree: u32) -> Result<Self, FieldError> {
        Self::check_degree(degree)?;
        let exponent = degree.div_ceil(2) % degree;
        Self::with_modulus(degree, find_irreducible(degree), exponent, true)
    }

    /// Fully explicit constructor; validates every invariant.
    pub fn with_modulus(
        degree: u32,
        modulus: u32,
        theta_exponent: u32,
        tits: bool,
    ) -> Result<Self, FieldError> {
        Self::check_degree(degree)?;
        if modulus >> degree != 1 {
            return Err(FieldError::ModulusDegree { modulus, degree });
        }
        if !is_irreducible(modulus) {
            return Err(FieldError::Reducible(modulus));
        }
        if theta_exponent >= degree {
            return Err(FieldError::ThetaExponent { exponent: theta_exponent, degree });
        }
        if tits && (2 * theta_exponent) % degree != 1 % degree {
            return Err(FieldError::NotTits { exponent: theta_exponent, degree });
        }
        Ok(FieldSpec { degree, modulus, theta_exponent, tits })
    }

    fn check_degree(degree: u32) -> Result<(), FieldError> {
        if (1..=MAX_DEGREE).contains(&degree) {
            Ok(())
        } else {
            Err(FieldError::Degree(degree))
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn theta_exponent(&self) -> u32 {
        self.theta_exponent
    }

    /// Exponent `k'` of θ⁻¹, with `k + k' ≡ 0 (mod n)`.
    pub fn theta_inverse_exponent(&self) -> u32 {
        (self.degree - self.theta_exponent) % self.degree
    }

    pub fn is_tits(&self) -> bool {
        self.tits
    }

    /// Number of elements, `2^n`.
    pub fn order(&self) -> u32 {
        1 << self.degree
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// Validated element constructor.
    pub fn element(&self, value: u32) -> Result<FieldElement, FieldError> {
        if self.contains(value) {
            Ok(FieldElement(value))
        } else {
            Err(FieldError::NotAnElement { value, degree: self.degree })
        }
    }

    pub fn contains(&self, value: u32) -> bool {
        value < self.order()
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.order()).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.order()).map(FieldElement)
    }

    fn check(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        self.element(a.0)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a.0) && self.contains(b.0));
        FieldElement(a.0 ^ b.0)
    }

    /// Addition that rejects operands from a different (larger) field.
    pub fn try_add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.add(self.check(a)?, self.check(b)?))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a.0) && self.contains(b.0));
        let (mut x, mut y) = (u64::from(a.0), u64::from(b.0));
        let mut product = 0u64;
        while y != 0 {
            if y & 1 == 1 {
                product ^= x;
            }
            x <<= 1;
            y >>= 1;
        }
        FieldElement(poly_rem(product, u64::from(self.modulus)) as u32)
    }

    pub fn try_mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(self.check(a)?, self.check(b)?))
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: FieldElement, mut exponent: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while exponent != 0 {
            if exponent & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            exponent >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, `a^(2^n - 2)`.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        let a = self.check(a)?;
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(a, u64::from(self.order()) - 2))
    }

    /// `a / b`; fails when `b = 0`.
    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^(2^k)` by `k` squarings.
    pub fn frobenius_power(&self, a: FieldElement, k: u32) -> FieldElement {
        (0..k).fold(a, |x, _| self.square(x))
    }

    pub fn theta(&self, a: FieldElement) -> FieldElement {
        self.frobenius_power(a, self.theta_exponent)
    }

    pub fn theta_inv(&self, a: FieldElement) -> FieldElement {
        self.frobenius_power(a, self.theta_inverse_exponent())
    }

    /// `a^(1+θ) = a · θ(a)`.
    pub fn one_plus_theta(&self, a: FieldElement) -> FieldElement {
        self.mul(a, self.theta(a))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF(2^{}) modulus={:#b} theta=x^(2^{}){}",
            self.degree,
            self.modulus,
            self.theta_exponent,
            if self.tits { " [tits]" } else { "" }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8() -> FieldSpec {
        FieldSpec::tits(3).unwrap()
    }

    fn e(spec: &FieldSpec, v: u32) -> FieldElement {
        spec.element(v).unwrap()
    }

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(find_irreducible(2), 0b111);
        assert_eq!(find_irreducible(3), 0b1011);
        assert_eq!(find_irreducible(5), 0b100101);
        assert!(!is_irreducible(0b100011));
    }

    #[test]
    fn gf8_examples() {
        let f = gf8();
        assert_eq!(f.modulus(), 0b1011);
        assert_eq!(f.add(e(&f, 3), e(&f, 5)), e(&f, 6));
        assert_eq!(f.add(e(&f, 7), e(&f, 2)), e(&f, 5));
        assert_eq!(f.mul(e(&f, 2), e(&f, 2)), e(&f, 4));
        assert_eq!(f.mul(e(&f, 2), e(&f, 5)), e(&f, 1));
        assert_eq!(f.inv(e(&f, 1)).unwrap(), e(&f, 1));
        assert_eq!(f.inv(e(&f, 2)).unwrap(), e(&f, 5));
        assert_eq!(f.inv(e(&f, 6)).unwrap(), e(&f, 3));
    }

    #[test]
    fn theta_on_gf8() {
        let f = gf8();
        assert_eq!(f.theta_exponent(), 2);
        assert_eq!(f.theta(e(&f, 0)), e(&f, 0));
        assert_eq!(f.theta(e(&f, 1)), e(&f, 1));
        assert_eq!(f.theta(e(&f, 2)), e(&f, 6));
        assert_eq!(f.theta(f.theta(e(&f, 2))), e(&f, 4));
    }

    #[test]
    fn rejects_bad_specs() {
        assert_eq!(FieldSpec::new(0), Err(FieldError::Degree(0)));
        assert_eq!(FieldSpec::new(17), Err(FieldError::Degree(17)));
        assert_eq!(FieldSpec::with_modulus(5, 0b100011, 0, false), Err(FieldError::Reducible(0b100011)));
        assert!(matches!(FieldSpec::with_modulus(3, 0b111, 0, false), Err(FieldError::ModulusDegree { .. })));
        assert!(matches!(FieldSpec::tits(4), Err(FieldError::NotTits { .. })));
        assert!(matches!(FieldSpec::with_modulus(3, 0b1011, 3, false), Err(FieldError::ThetaExponent { .. })));
    }

    #[test]
    fn zero_and_foreign_elements() {
        let f = gf8();
        assert_eq!(f.inv(FieldElement::ZERO), Err(FieldError::ZeroInverse));
        assert!(f.element(8).is_err());
        let big = FieldSpec::new(5).unwrap().element(20).unwrap();
        assert!(f.try_add(big, FieldElement::ONE).is_err());
        assert!(f.try_mul(FieldElement::ONE, big).is_err());
    }

    #[test]
    fn serde_shape() {
        let f = gf8();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"degree":3,"modulus":11,"theta_exponent":2,"tits":true}"#);
        let back: FieldSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<FieldSpec>(r#"{"degree":5,"modulus":35,"theta_exponent":0,"tits":false}"#).is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for n in 1..=4 {
            let f = FieldSpec::new(n).unwrap();
            for a in f.elements() {
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn theta_is_automorphism_up_to_degree_5() {
        for n in 1..=5 {
            for k in 0..n {
                let f = FieldSpec::with_modulus(n, find_irreducible(n), k, false).unwrap();
                for a in f.elements() {
                    assert_eq!(f.theta_inv(f.theta(a)), a);
                    for b in f.elements() {
                        assert_eq!(f.theta(f.mul(a, b)), f.mul(f.theta(a), f.theta(b)));
                        assert_eq!(f.theta(f.add(a, b)), f.add(f.theta(a), f.theta(b)));
                    }
                }
            }
        }
    }

    #[test]
    fn tits_properties() {
        for n in [3, 5] {
            let f = FieldSpec::tits(n).unwrap();
            let fixed: Vec<_> = f.elements().filter(|&x| f.theta(x) == x).collect();
            assert_eq!(fixed, vec![FieldElement::ZERO, FieldElement::ONE]);
            let mut images: Vec<_> = f.elements().map(|x| f.one_plus_theta(x)).collect();
            for x in f.elements() {
                assert_eq!(f.theta(f.theta(x)), f.square(x));
            }
            images.sort();
            images.dedup();
            assert_eq!(images.len() as u32, f.order());
        }
    }
}
