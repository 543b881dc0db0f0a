//! Exclusion polynomials: each vanishes everywhere on its domain except at
//! one target point, where it takes a prescribed value.

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField, Residue};
use crate::poly::Polynomial;

/// A point of `{0,1}^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BooleanPoint {
    bits: Vec<bool>,
}

impl BooleanPoint {
    pub fn new(bits: Vec<bool>) -> Self {
        BooleanPoint { bits }
    }

    /// Parses `1,0,1` (or `101`).
    pub fn parse(text: &str) -> Result<Self> {
        let bits = text
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Format(format!("expected 0 or 1, found '{other}'"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BooleanPoint { bits })
    }

    pub fn from_mask(n: usize, mask: u64) -> Self {
        BooleanPoint {
            bits: (0..n).map(|j| (mask >> j) & 1 == 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// `Q_i = 1 - b_i`.
    pub fn complement(&self) -> BooleanPoint {
        BooleanPoint {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn residues<W: Residue>(&self) -> Vec<W> {
        self.bits
            .iter()
            .map(|&b| if b { W::one() } else { W::zero() })
            .collect()
    }
}

/// `prod_j prod_{q != c_j} (x_j - q)`: zero off `c`, `(-1)^n` at `c`.
pub fn point_annihilator<W: Residue>(field: PrimeField<W>, c: &[W]) -> Polynomial<W> {
    let n = c.len();
    let mut acc = Polynomial::constant(field, n, 1);
    for (j, &cj) in c.iter().enumerate() {
        let xj = Polynomial::var(field, n, j);
        for q in field.residues().filter(|&q| q != cj) {
            let factor = &xj - &Polynomial::constant(field, n, q.as_u64() as i64);
            acc = &acc * &factor;
        }
    }
    acc
}

/// `g = -f(c) * (-1)^n * prod_j prod_{q != c_j} (x_j - q)`, so that `f + g`
/// vanishes at `c` and equals `f` everywhere else. Zero if `f(c) = 0`.
pub fn exclude_point<W: Residue>(
    f: &Polynomial<W>,
    c: &[FieldElement<W>],
) -> Result<Polynomial<W>> {
    let value = f.eval(c)?;
    let field = f.field();
    if value.is_zero() {
        return Ok(Polynomial::zero(field, f.arity()));
    }
    let raw: Vec<W> = c.iter().map(FieldElement::value).collect();
    let sign = if f.arity().is_multiple_of(2) {
        field.minus_one()
    } else {
        W::one()
    };
    Ok(point_annihilator(field, &raw).scale_raw(field.mul(sign, value.value())))
}

/// `h = (-1)^(k+1) prod_i (Q_i - x_i)` where `Q` is the complement of `b`
/// and `k` its number of ones: `h(b) = -1`, zero on the rest of `{0,1}^n`.
pub fn exclude_boolean_point<W: Residue>(b: &BooleanPoint, field: PrimeField<W>) -> Polynomial<W> {
    let n = b.len();
    let mut acc = Polynomial::constant(
        field,
        n,
        if (b.ones() + 1).is_multiple_of(2) {
            1
        } else {
            -1
        },
    );
    for (i, &q) in b.complement().bits().iter().enumerate() {
        let factor = &Polynomial::constant(field, n, q as i64) - &Polynomial::var(field, n, i);
        acc = &acc * &factor;
    }
    acc
}

/// `g = prod_v (x_v - Q_v)`: `g(b) = (-1)^(n-k)`, zero on the rest of
/// `{0,1}^n`.
pub fn exclude_indicator_subset<W: Residue>(
    b: &BooleanPoint,
    field: PrimeField<W>,
) -> Polynomial<W> {
    let n = b.len();
    let mut acc = Polynomial::constant(field, n, 1);
    for (v, &q) in b.complement().bits().iter().enumerate() {
        let factor = &Polynomial::var(field, n, v) - &Polynomial::constant(field, n, q as i64);
        acc = &acc * &factor;
    }
    acc
}

/// `g(x,y) = x(x^(p-1) - y^(p-1)) + y(y^(p-1) - x^(p-1))`: equals `x` on
/// `(x,0)`, `y` on `(0,y)` and zero elsewhere.
pub fn axis_zero_exclusion<W: Residue>(field: PrimeField<W>) -> Polynomial<W> {
    let q = field.modulus() - 1;
    let x = Polynomial::var(field, 2, 0);
    let y = Polynomial::var(field, 2, 1);
    let (xq, yq) = (x.pow(q), y.pow(q));
    &(&x * &(&xq - &yq)) + &(&y * &(&yq - &xq))
}

/// `h(x,y) = (1 - (x+y)^(p-1)) x^2`: equals `a^2` on `(a,-a)`, zero elsewhere.
pub fn inverse_pair_exclusion<W: Residue>(field: PrimeField<W>) -> Polynomial<W> {
    let q = field.modulus() - 1;
    let x = Polynomial::var(field, 2, 0);
    let y = Polynomial::var(field, 2, 1);
    let one = Polynomial::constant(field, 2, 1);
    &(&one - &(&x + &y).pow(q)) * &x.pow(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{for_each_boolean_point, for_each_point};
    use crate::monomial::ExponentVector;
    use crate::random::random_polynomial;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn field(p: u64) -> PrimeField<u32> {
        PrimeField::new(p).unwrap()
    }

    fn parse(s: &str, p: u64, n: usize) -> Polynomial<u32> {
        Polynomial::parse_mod(s, p, n).unwrap()
    }

    #[test]
    fn univariate_point_exclusion() {
        let f3 = field(3);
        let f = parse("2", 3, 1);
        let g = exclude_point(&f, &[f3.element(1)]).unwrap();
        assert_eq!(g, parse("2*x1^2 + 2*x1", 3, 1));
        let vals: Vec<u32> = (0..3).map(|x| g.eval_raw(&[x])).collect();
        assert_eq!(vals, vec![0, 1, 0]);
    }

    #[test]
    fn excluding_a_root_is_zero() {
        let f5 = field(5);
        let f = parse("x1*x2 - x1 - x2", 5, 2);
        assert!(exclude_point(&f, &[f5.element(0), f5.element(0)])
            .unwrap()
            .is_zero());
        assert!(exclude_point(&f, &[f5.element(0)]).is_err());
    }

    #[test]
    fn boolean_point_examples() {
        let h = exclude_boolean_point(&BooleanPoint::parse("1,0").unwrap(), field(3));
        assert_eq!(h, parse("x1*x2 - x1", 3, 2));
        let vals: Vec<u32> = [[0, 0], [1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|x| h.eval_raw(x))
            .collect();
        assert_eq!(vals, vec![0, 2, 0, 0]);

        let h = exclude_boolean_point(&BooleanPoint::parse("0").unwrap(), field(2));
        assert_eq!(h, parse("1 + x1", 2, 1));
        assert_eq!((h.eval_raw(&[0]), h.eval_raw(&[1])), (1, 0));
    }

    #[test]
    fn indicator_subset_examples() {
        let b = BooleanPoint::parse("10").unwrap();
        let g = exclude_indicator_subset(&b, field(3));
        assert_eq!(g, parse("x1*(x2 - 1)", 3, 2));
        let vals: Vec<u32> = [[0, 0], [1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|x| g.eval_raw(x))
            .collect();
        assert_eq!(vals, vec![0, 2, 0, 0]);
        let g = exclude_indicator_subset(&BooleanPoint::parse("11").unwrap(), field(3));
        assert_eq!(g, parse("x1*x2", 3, 2));
    }

    #[test]
    fn boolean_exclusions_exhaustive() {
        for p in [2u64, 3, 5] {
            let fp = field(p);
            for n in 1..=10usize {
                let masks: Vec<u64> = if n <= 4 {
                    (0..1 << n).collect()
                } else {
                    vec![0, 1, (1 << n) - 1, 0b1011 % (1 << n)]
                };
                for mask in masks {
                    let b = BooleanPoint::from_mask(n, mask);
                    let h = exclude_boolean_point(&b, fp);
                    let g = exclude_indicator_subset(&b, fp);
                    assert_eq!(h.total_degree(), crate::poly::Degree::Finite(n as u64));
                    assert!(h.terms().all(|(e, _)| e.as_slice().iter().all(|&k| k <= 1)));
                    let at_b = fp.from_i64(if (n - b.ones()).is_multiple_of(2) {
                        1
                    } else {
                        -1
                    });
                    let target = b.residues::<u32>();
                    for_each_boolean_point::<u32>(n, |x, _| {
                        if x == target.as_slice() {
                            assert_eq!(h.eval_raw(x), fp.minus_one());
                            assert_eq!(g.eval_raw(x), at_b);
                        } else {
                            assert_eq!(h.eval_raw(x), 0);
                            assert_eq!(g.eval_raw(x), 0);
                        }
                    });
                }
            }
        }
    }

    #[test]
    fn axis_and_inverse_examples() {
        let g = axis_zero_exclusion(field(3));
        assert_eq!(g.eval_raw(&[2, 0]), 2);
        assert_eq!(g.eval_raw(&[1, 2]), 0);
        assert_eq!(g.eval_raw(&[0, 0]), 0);
        let h = inverse_pair_exclusion(field(3));
        assert_eq!(h.eval_raw(&[1, 2]), 1);
        assert_eq!(h.eval_raw(&[1, 1]), 0);
        assert_eq!(h.eval_raw(&[0, 0]), 0);
    }

    #[test]
    fn axis_and_inverse_contracts() {
        for p in [2u64, 3, 5, 7] {
            let fp = field(p);
            let g = axis_zero_exclusion(fp);
            let h = inverse_pair_exclusion(fp);
            for_each_point(fp, 2, |xy| {
                let (x, y) = (xy[0], xy[1]);
                let want = match (x, y) {
                    (0, _) => y,
                    (_, 0) => x,
                    _ => 0,
                };
                assert_eq!(g.eval_raw(xy), want);
                let want = if fp.add(x, y) == 0 { fp.mul(x, x) } else { 0 };
                assert_eq!(h.eval_raw(xy), want);
            });
        }
    }

    #[test]
    fn point_exclusion_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for i in 0..200 {
            let p = [2u64, 3, 5, 7][i % 4];
            let fp = field(p);
            let n = 1 + i % 3;
            let f = random_polynomial(&mut rng, fp, n, 6, 3);
            let c: Vec<_> = (0..n)
                .map(|_| fp.wrap(rng.gen_range(0..p as u32)))
                .collect();
            let craw: Vec<u32> = c.iter().map(|x| x.value()).collect();
            let g = exclude_point(&f, &c).unwrap();
            let fc = f.eval_raw(&craw);
            for_each_point(fp, n, |x| {
                if x == craw.as_slice() {
                    assert_eq!(g.eval_raw(x), fp.neg(fc));
                } else {
                    assert_eq!(g.eval_raw(x), 0);
                }
            });
            assert_eq!((&f + &g).eval_raw(&craw), 0);
            // The top monomial prod x_i^(p-1) picks up -f(c) * (-1)^n.
            let top = ExponentVector::uniform(n, (p - 1) as u32);
            let sign: i64 = if n % 2 == 0 { -1 } else { 1 };
            assert_eq!(
                g.coefficient(&top).unwrap().value(),
                fp.mul(fp.from_i64(sign), fc)
            );
        }
    }
}
