//! Exact coefficient domains: the rationals and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Descriptor of a coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    /// Integers modulo a prime `p < 2^31`.
    Prime(u32),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        match *self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => FieldElement::Modular {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        match *self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                let value = u32::try_from(&r).expect("residue below modulus");
                FieldElement::Modular { value, modulus: p }
            }
        }
    }

    /// `num / den`, or `None` when `den` vanishes in this field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Option<FieldElement> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return None;
        }
        Some(&self.from_bigint(num) * &d.inv()?)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "f{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// A coefficient. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in `[0, p)`.
///
/// Mixing elements of different fields in arithmetic is a logic error and
/// panics; polynomial code checks ring compatibility before it gets here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldElement::Rational(r) => FieldElement::Rational(r.recip()),
            FieldElement::Modular { value, modulus } => FieldElement::Modular {
                value: pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_negative(),
            FieldElement::Modular { .. } => false,
        }
    }

    /// Integer value when the element is an integer (always true mod p).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            FieldElement::Rational(r) if r.is_integer() => i64::try_from(r.numer()).ok(),
            FieldElement::Rational(_) => None,
            FieldElement::Modular { value, .. } => Some(*value as i64),
        }
    }

    fn same_field(&self, other: &FieldElement) {
        assert_eq!(self.field(), other.field(), "field mismatch in coefficient arithmetic");
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(-r),
            FieldElement::Modular { value, modulus } => FieldElement::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $rat:expr, $modular:expr) => {
        impl std::ops::$trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.same_field(rhs);
                match (self, rhs) {
                    (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                        FieldElement::Rational($rat(a, b))
                    }
                    (
                        FieldElement::Modular { value: a, modulus },
                        FieldElement::Modular { value: b, .. },
                    ) => FieldElement::Modular {
                        value: $modular(*a as u64, *b as u64, *modulus as u64) as u32,
                        modulus: *modulus,
                    },
                    _ => unreachable!(),
                }
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, |a: u64, b: u64, m: u64| (a + b) % m);
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, |a: u64, b: u64, m: u64| (a + m - b) % m);
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, |a: u64, b: u64, m: u64| a * b % m);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn prime_modulus_is_checked() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(2147483647).is_ok());
        assert_eq!(Field::prime(15), Err(Error::InvalidModulus(15)));
        assert_eq!(Field::prime(1), Err(Error::InvalidModulus(1)));
        assert!(Field::prime(1 << 31).is_err());
    }

    #[test]
    fn rationals_stay_canonical() {
        let q = Field::Rational;
        let x = q.from_fraction(&BigInt::from(6), &BigInt::from(-4)).unwrap();
        match &x {
            FieldElement::Rational(r) => {
                assert_eq!(*r.numer(), BigInt::from(-3));
                assert_eq!(*r.denom(), BigInt::from(2));
            }
            _ => unreachable!(),
        }
        assert_eq!(x.to_string(), "-3/2");
        assert!(q.from_fraction(&BigInt::from(1), &BigInt::from(0)).is_none());
    }

    #[test]
    fn residues_reduce() {
        let f7 = Field::Prime(7);
        assert_eq!(f7.from_i64(-1).to_string(), "6");
        assert_eq!(f7.from_i64(15).to_string(), "1");
        // 1/2 = 4 mod 7
        let h = f7.from_fraction(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(h.to_string(), "4");
        // 2 vanishes in characteristic 2
        assert!(Field::Prime(2).from_fraction(&BigInt::from(1), &BigInt::from(2)).is_none());
    }

    proptest! {
        #[test]
        fn field_axioms_mod_p(a in 0i64..1000, b in 1i64..1000, p in prop::sample::select(vec![2u32, 3, 5, 7, 101, 2147483647])) {
            let f = Field::Prime(p);
            let x = f.from_i64(a);
            let y = f.from_i64(b);
            prop_assert!((&x + &(-&x)).is_zero());
            if !y.is_zero() {
                prop_assert!((&y * &y.inv().unwrap()).is_one());
            }
            prop_assert_eq!(&(&x - &y) + &y, x);
        }

        #[test]
        fn field_axioms_rational(a in -50i64..50, b in 1i64..50, c in -50i64..50) {
            let q = Field::Rational;
            let x = q.from_fraction(&BigInt::from(a), &BigInt::from(b)).unwrap();
            let y = q.from_i64(c);
            prop_assert!((&x + &(-&x)).is_zero());
            if !x.is_zero() {
                prop_assert!((&x * &x.inv().unwrap()).is_one());
            }
            prop_assert_eq!(&x * &y, &y * &x);
        }
    }
}
