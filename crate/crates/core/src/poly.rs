//! Sparse multivariate polynomials over `F_p`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField, Residue};
use crate::monomial::ExponentVector;

/// Total degree. The zero polynomial has degree [`Degree::NegInfinity`],
/// which compares below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u64),
}

impl Degree {
    pub fn finite(self) -> Option<u64> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial in `F_p[x1, ..., xn]`, stored as a map from exponent
/// vectors to nonzero residues.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<W> {
    field: PrimeField<W>,
    arity: usize,
    terms: BTreeMap<ExponentVector, W>,
}

impl<W: Residue> Polynomial<W> {
    pub fn zero(field: PrimeField<W>, arity: usize) -> Self {
        Polynomial {
            field,
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: PrimeField<W>, arity: usize, c: i64) -> Self {
        let mut p = Self::zero(field, arity);
        p.add_term(ExponentVector::zero(arity), field.from_i64(c));
        p
    }

    /// The variable `x_{var+1}` (0-based `var`).
    pub fn var(field: PrimeField<W>, arity: usize, var: usize) -> Self {
        assert!(
            var < arity,
            "variable index {var} out of range for arity {arity}"
        );
        let mut p = Self::zero(field, arity);
        p.add_term(ExponentVector::unit(arity, var), W::one());
        p
    }

    pub fn monomial(field: PrimeField<W>, exponents: ExponentVector, coeff: i64) -> Self {
        let mut p = Self::zero(field, exponents.len());
        p.add_term(exponents, field.from_i64(coeff));
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials. Fails if an exponent vector has the wrong length.
    pub fn from_terms<I>(field: PrimeField<W>, arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, i64)>,
    {
        let mut p = Self::zero(field, arity);
        for (e, c) in terms {
            if e.len() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: e.len(),
                });
            }
            p.add_term(e, field.from_i64(c));
        }
        Ok(p)
    }

    /// Adds `coeff * x^e` in place, dropping the entry if it cancels.
    pub(crate) fn add_term(&mut self, e: ExponentVector, coeff: W) {
        debug_assert_eq!(e.len(), self.arity);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let s = self.field.add(*o.get(), coeff);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> PrimeField<W> {
        self.field
    }

    pub fn modulus(&self) -> u64 {
        self.field.modulus()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, W)> + '_ {
        self.terms.iter().rev().map(|(e, &c)| (e, c))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.degree() == 0)
    }

    fn check_len(&self, e: &ExponentVector) -> Result<()> {
        if e.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: e.len(),
            });
        }
        Ok(())
    }

    /// Coefficient of `x^e`; zero for absent monomials.
    pub fn coefficient(&self, e: &ExponentVector) -> Result<FieldElement<W>> {
        self.check_len(e)?;
        Ok(self.field.wrap(self.coeff_raw(e)))
    }

    pub(crate) fn coeff_raw(&self, e: &ExponentVector) -> W {
        self.terms.get(e).copied().unwrap_or_else(W::zero)
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::NegInfinity, |e| Degree::Finite(e.degree()))
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&ExponentVector, W)> {
        self.terms.iter().next_back().map(|(e, &c)| (e, c))
    }

    /// The terms of exactly the given total degree.
    pub fn homogeneous_part(&self, degree: u64) -> Self {
        Polynomial {
            field: self.field,
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == degree)
                .map(|(e, &c)| (e.clone(), c))
                .collect(),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        self.field.check_same(&other.field)?;
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), self.field.neg(c));
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let f = self.field;
        let mut out = Self::zero(f, self.arity);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                out.add_term(ea.add(eb), f.mul(ca, cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: FieldElement<W>) -> Result<Self> {
        self.field.check_same(&c.field())?;
        Ok(self.scale_raw(c.value()))
    }

    pub(crate) fn scale_raw(&self, c: W) -> Self {
        if c.is_zero() {
            return Self::zero(self.field, self.arity);
        }
        let f = self.field;
        Polynomial {
            field: f,
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, &v)| (e.clone(), f.mul(v, c)))
                .collect(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = Self::constant(self.field, self.arity, 1);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^exp` with [`Polynomial::reduce_field_map`] applied after every
    /// multiplication. Same evaluation map as `pow(exp)`, far fewer terms.
    pub fn pow_reduced(&self, mut exp: u64) -> Self {
        let mut acc = Self::constant(self.field, self.arity, 1);
        let mut base = self.reduce_field_map();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = (&acc * &base).reduce_field_map();
            }
            exp >>= 1;
            if exp > 0 {
                base = (&base * &base).reduce_field_map();
            }
        }
        acc
    }

    /// Evaluates at a point of `F_p^n`.
    pub fn eval(&self, point: &[FieldElement<W>]) -> Result<FieldElement<W>> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: point.len(),
            });
        }
        for x in point {
            self.field.check_same(&x.field())?;
        }
        let raw: Vec<W> = point.iter().map(|x| x.value()).collect();
        Ok(self.field.wrap(self.eval_raw(&raw)))
    }

    /// Evaluates at already-reduced residues. The caller guarantees the length.
    pub fn eval_raw(&self, point: &[W]) -> W {
        debug_assert_eq!(point.len(), self.arity);
        let f = self.field;
        let mut acc = W::zero();
        for (e, &c) in &self.terms {
            let mut t = c;
            for (&x, &k) in point.iter().zip(e.as_slice()) {
                if k > 0 {
                    t = f.mul(t, f.pow(x, k as u64));
                    if t.is_zero() {
                        break;
                    }
                }
            }
            acc = f.add(acc, t);
        }
        acc
    }

    fn map_exponents(&self, g: impl Fn(u32) -> u32) -> Self {
        let mut out = Self::zero(self.field, self.arity);
        for (e, &c) in &self.terms {
            out.add_term(e.map(&g), c);
        }
        out
    }

    /// Replaces every exponent `e > 0` by `((e - 1) mod (p - 1)) + 1`.
    /// The result agrees with `self` on all of `F_p^n` and has every
    /// exponent at most `p - 1`.
    pub fn reduce_field_map(&self) -> Self {
        let q = (self.modulus() - 1) as u32;
        self.map_exponents(|e| if e == 0 { 0 } else { (e - 1) % q + 1 })
    }

    /// Replaces every exponent `e > 0` by 1. The result is multilinear and
    /// agrees with `self` on `{0,1}^n`.
    pub fn reduce_boolean(&self) -> Self {
        self.map_exponents(|e| e.min(1))
    }
}

impl<W: Residue> fmt::Debug for Polynomial<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} over F_{} (n={})",
            self,
            self.field.modulus(),
            self.arity
        )
    }
}

impl<W: Residue> Add for &Polynomial<W> {
    type Output = Polynomial<W>;
    fn add(self, rhs: Self) -> Polynomial<W> {
        self.try_add(rhs).expect("incompatible polynomials")
    }
}

impl<W: Residue> Sub for &Polynomial<W> {
    type Output = Polynomial<W>;
    fn sub(self, rhs: Self) -> Polynomial<W> {
        self.try_sub(rhs).expect("incompatible polynomials")
    }
}

impl<W: Residue> Mul for &Polynomial<W> {
    type Output = Polynomial<W>;
    fn mul(self, rhs: Self) -> Polynomial<W> {
        self.try_mul(rhs).expect("incompatible polynomials")
    }
}

impl<W: Residue> Neg for &Polynomial<W> {
    type Output = Polynomial<W>;
    fn neg(self) -> Polynomial<W> {
        self.scale_raw(self.field.minus_one())
    }
}
