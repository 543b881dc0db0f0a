use std::cmp::Ordering;
use std::fmt;

/// Exponents `(a_1, ..., a_n)` of a monomial `x1^a_1 * ... * xn^a_n`.
///
/// `Ord` is graded lexicographic: total degree first, then the exponent of
/// `x1`, then `x2`, and so on. The componentwise partial order used for
/// support analysis is [`ExponentVector::dominates`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zero(arity: usize) -> Self {
        ExponentVector(vec![0; arity])
    }

    /// The monomial `x_{var+1}` (0-based `var`).
    pub fn unit(arity: usize, var: usize) -> Self {
        let mut e = vec![0; arity];
        e[var] = 1;
        ExponentVector(e)
    }

    /// `(e, e, ..., e)`.
    pub fn uniform(arity: usize, e: u32) -> Self {
        ExponentVector(vec![e; arity])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// True when every variable occurs, i.e. all exponents are at least 1.
    pub fn has_full_support(&self) -> bool {
        self.0.iter().all(|&e| e >= 1)
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn map(&self, f: impl Fn(u32) -> u32) -> Self {
        ExponentVector(self.0.iter().map(|&e| f(e)).collect())
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}
