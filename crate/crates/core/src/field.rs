//! Prime fields `F_p` with residues stored in a caller-chosen unsigned word.
//!
//! All arithmetic is carried out in `u64`/`u128` and narrowed back into the
//! word type, so any `W` wide enough to hold `p - 1` works.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{PrimInt, Unsigned};

use crate::error::{Error, Result};

/// Largest modulus accepted by [`PrimeField::new`]. Every check in this crate
/// is exhaustive over `p^n` points, so larger primes are never useful.
pub const MAX_MODULUS: u64 = 1 << 20;

/// Unsigned word type used to store residues.
pub trait Residue:
    PrimInt + Unsigned + Hash + fmt::Debug + fmt::Display + Default + Send + Sync + 'static
{
    #[inline]
    fn as_u64(self) -> u64 {
        self.to_u64().expect("residue fits in u64")
    }

    #[inline]
    fn from_u64(v: u64) -> Self {
        <Self as num_traits::NumCast>::from(v).expect("residue fits in word")
    }
}

impl<T> Residue for T where
    T: PrimInt + Unsigned + Hash + fmt::Debug + fmt::Display + Default + Send + Sync + 'static
{
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The field of residues modulo a prime `p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField<W> {
    p: W,
}

impl<W: Residue> PrimeField<W> {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_MODULUS {
            return Err(Error::ModulusTooLarge {
                p,
                max: MAX_MODULUS,
            });
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let w = <W as num_traits::NumCast>::from(p).ok_or(Error::ModulusOverflow { p })?;
        Ok(PrimeField { p: w })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p.as_u64()
    }

    #[inline]
    pub fn zero(&self) -> W {
        W::zero()
    }

    #[inline]
    pub fn one(&self) -> W {
        W::one()
    }

    /// The residue `p - 1`, i.e. `-1`.
    #[inline]
    pub fn minus_one(&self) -> W {
        self.p - W::one()
    }

    #[inline]
    pub fn from_u64(&self, v: u64) -> W {
        W::from_u64(v % self.modulus())
    }

    pub fn from_i64(&self, v: i64) -> W {
        let p = self.modulus() as i64;
        W::from_u64(v.rem_euclid(p) as u64)
    }

    #[inline]
    pub fn add(&self, a: W, b: W) -> W {
        let s = a.as_u64() + b.as_u64();
        let p = self.modulus();
        W::from_u64(if s >= p { s - p } else { s })
    }

    #[inline]
    pub fn sub(&self, a: W, b: W) -> W {
        let (a, b, p) = (a.as_u64(), b.as_u64(), self.modulus());
        W::from_u64(if a >= b { a - b } else { a + p - b })
    }

    #[inline]
    pub fn neg(&self, a: W) -> W {
        if a.is_zero() {
            a
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: W, b: W) -> W {
        let prod = a.as_u64() as u128 * b.as_u64() as u128;
        W::from_u64((prod % self.modulus() as u128) as u64)
    }

    pub fn pow(&self, base: W, mut exp: u64) -> W {
        let mut acc = W::one();
        let mut b = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        acc
    }

    /// Inverse via Fermat: `a^(p-2)`.
    pub fn inv(&self, a: W) -> Result<W> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.modulus() - 2))
    }

    pub fn element(&self, v: i64) -> FieldElement<W> {
        FieldElement {
            value: self.from_i64(v),
            field: *self,
        }
    }

    /// Wraps an already-reduced residue.
    pub fn wrap(&self, value: W) -> FieldElement<W> {
        debug_assert!(value < self.p);
        FieldElement {
            value,
            field: *self,
        }
    }

    /// All residues `0, 1, ..., p-1` in ascending order.
    pub fn residues(&self) -> impl Iterator<Item = W> {
        (0..self.modulus()).map(W::from_u64)
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch {
                left: self.modulus(),
                right: other.modulus(),
            });
        }
        Ok(())
    }
}

impl<W: Residue> fmt::Debug for PrimeField<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// A residue tagged with the field it lives in.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement<W> {
    value: W,
    field: PrimeField<W>,
}

impl<W: Residue> FieldElement<W> {
    #[inline]
    pub fn value(&self) -> W {
        self.value
    }

    #[inline]
    pub fn field(&self) -> PrimeField<W> {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn try_add(self, rhs: Self) -> Result<Self> {
        self.field.check_same(&rhs.field)?;
        Ok(self.field.wrap(self.field.add(self.value, rhs.value)))
    }

    pub fn try_sub(self, rhs: Self) -> Result<Self> {
        self.field.check_same(&rhs.field)?;
        Ok(self.field.wrap(self.field.sub(self.value, rhs.value)))
    }

    pub fn try_mul(self, rhs: Self) -> Result<Self> {
        self.field.check_same(&rhs.field)?;
        Ok(self.field.wrap(self.field.mul(self.value, rhs.value)))
    }

    pub fn inv(self) -> Result<Self> {
        Ok(self.field.wrap(self.field.inv(self.value)?))
    }

    pub fn pow(self, exp: u64) -> Self {
        self.field.wrap(self.field.pow(self.value, exp))
    }
}

impl<W: Residue> fmt::Debug for FieldElement<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.field.p)
    }
}

impl<W: Residue> fmt::Display for FieldElement<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

// Operator forms panic on mixed moduli; use the `try_*` methods when the
// moduli are not known to agree.
impl<W: Residue> Add for FieldElement<W> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.try_add(rhs)
            .expect("field elements from different fields")
    }
}

impl<W: Residue> Sub for FieldElement<W> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.try_sub(rhs)
            .expect("field elements from different fields")
    }
}

impl<W: Residue> Mul for FieldElement<W> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(rhs)
            .expect("field elements from different fields")
    }
}

impl<W: Residue> Neg for FieldElement<W> {
    type Output = Self;
    fn neg(self) -> Self {
        self.field.wrap(self.field.neg(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> PrimeField<u32> {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn small_arithmetic() {
        let f = f7();
        assert_eq!((f.element(3) + f.element(5)).value(), 1);
        assert_eq!((f.element(3) * f.element(5)).value(), 1);
        assert_eq!(f.element(3).inv().unwrap().value(), 5);
        assert_eq!(f.element(3).pow(6).value(), 1);
        assert_eq!((f.element(2) - f.element(5)).value(), 4);
        assert_eq!((-f.element(2)).value(), 5);
        assert_eq!(f.element(-1).value(), 6);
    }

    #[test]
    fn inverse_of_zero() {
        let f2 = PrimeField::<u32>::new(2).unwrap();
        assert_eq!(f2.element(0).inv(), Err(Error::ZeroInverse));
    }

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(PrimeField::<u32>::new(9), Err(Error::NotPrime(9)));
        assert_eq!(PrimeField::<u32>::new(1), Err(Error::NotPrime(1)));
        assert!(matches!(
            PrimeField::<u32>::new(1 << 21),
            Err(Error::ModulusTooLarge { .. })
        ));
        assert_eq!(
            PrimeField::<u8>::new(257),
            Err(Error::ModulusOverflow { p: 257 })
        );
        assert!(PrimeField::<u8>::new(251).is_ok());
    }

    #[test]
    fn mismatched_moduli() {
        let a = f7().element(1);
        let b = PrimeField::<u32>::new(5).unwrap().element(1);
        assert_eq!(
            a.try_add(b),
            Err(Error::ModulusMismatch { left: 7, right: 5 })
        );
    }

    #[test]
    fn fermat_for_every_residue() {
        for p in [2u64, 3, 5, 7, 11, 13, 1_048_573] {
            let f = PrimeField::<u64>::new(p).unwrap();
            for a in (0..p).step_by(((p / 50) as usize).max(1)) {
                let a = f.wrap(a);
                assert_eq!(a.pow(p), a);
                if !a.is_zero() {
                    assert_eq!(a.pow(p - 1).value(), 1);
                    assert_eq!((a.inv().unwrap() * a).value(), 1);
                }
            }
        }
    }

    #[test]
    fn trial_division() {
        let primes: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
    }
}
