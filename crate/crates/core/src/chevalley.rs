//! Common roots of polynomial systems over `F_p` and the residue of their
//! count modulo `p`.
//!
//! The count is predicted from the coefficient `d` of `prod x_i^(p-1)` in the
//! reduced indicator `prod_i (1 - P_i^(p-1))`: the number of common roots is
//! congruent to `(-1)^n d` modulo `p`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cnss::{find_witness, Grid, Witness};
use crate::enumerate::{check_budget, for_each_point};
use crate::error::{Error, Result};
use crate::exclusion::exclude_point;
use crate::field::{FieldElement, PrimeField, Residue};
use crate::monomial::ExponentVector;
use crate::poly::Polynomial;

/// `P_1, ..., P_m` over a common field and arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem<W: Residue> {
    field: PrimeField<W>,
    arity: usize,
    polys: Vec<Polynomial<W>>,
}

impl<W: Residue> PolySystem<W> {
    pub fn new(polys: Vec<Polynomial<W>>) -> Result<Self> {
        let first = polys
            .first()
            .ok_or_else(|| Error::Precondition("a system needs at least one polynomial".into()))?;
        let (field, arity) = (first.field(), first.arity());
        for f in &polys {
            field.check_same(&f.field())?;
            if f.arity() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: f.arity(),
                });
            }
        }
        Ok(PolySystem {
            field,
            arity,
            polys,
        })
    }

    /// Header line `p=<prime> n=<arity>`, then one polynomial per line.
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Format("empty system file".into()))?;
        let (p, n) = parse_header(header)?;
        let field = PrimeField::new(p)?;
        let polys = lines
            .map(|l| Polynomial::parse(l, field, n))
            .collect::<Result<Vec<_>>>()?;
        if polys.is_empty() {
            return Err(Error::Format("system file lists no polynomials".into()));
        }
        Self::new(polys)
    }

    pub fn field(&self) -> PrimeField<W> {
        self.field
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn polys(&self) -> &[Polynomial<W>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Sum of total degrees of the nonzero members.
    pub fn degree_sum(&self) -> u64 {
        self.polys
            .iter()
            .filter_map(|f| f.total_degree().finite())
            .sum()
    }

    pub fn nonzero_members(&self) -> Vec<&Polynomial<W>> {
        self.polys.iter().filter(|f| !f.is_zero()).collect()
    }

    pub fn is_common_root(&self, x: &[W]) -> bool {
        self.polys.iter().all(|f| f.eval_raw(x).is_zero())
    }
}

impl<W: Residue> fmt::Display for PolySystem<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p={} n={}", self.field.modulus(), self.arity)?;
        for poly in &self.polys {
            writeln!(f, "{poly}")?;
        }
        Ok(())
    }
}

pub(crate) fn parse_header(header: &str) -> Result<(u64, usize)> {
    let mut p = None;
    let mut n = None;
    for tok in header.split_whitespace() {
        let (key, val) = tok
            .split_once('=')
            .ok_or_else(|| Error::Format(format!("bad header token '{tok}'")))?;
        let bad = || Error::Format(format!("bad header value '{tok}'"));
        match key {
            "p" => p = Some(val.parse::<u64>().map_err(|_| bad())?),
            "n" => n = Some(val.parse::<usize>().map_err(|_| bad())?),
            _ => return Err(Error::Format(format!("unknown header key '{key}'"))),
        }
    }
    match (p, n) {
        (Some(p), Some(n)) => Ok((p, n)),
        _ => Err(Error::Format(
            "header must read `p=<prime> n=<arity>`".into(),
        )),
    }
}

/// Which counting rule produced a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rule {
    /// Degree sum below `n`: the count is divisible by `p`.
    T3,
    /// Degree sum at most `n`: `+-1` or `0` from parities and the `x1...xn` coefficient.
    T4,
    /// Any degree: `(-1)^n d` from the reduced indicator.
    T5,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResiduePrediction {
    pub predicted: u64,
    /// `d` for [`Rule::T5`], `q` (the `x1...xn` coefficient of the product)
    /// for [`Rule::T4`], `0` for [`Rule::T3`].
    pub certificate: u64,
    pub rule: Rule,
}

/// `prod_i (1 - P_i^(p-1))`, fully expanded: 1 on common roots, 0 elsewhere.
pub fn common_root_indicator<W: Residue>(sys: &PolySystem<W>) -> Polynomial<W> {
    let q = sys.field.modulus() - 1;
    let one = Polynomial::constant(sys.field, sys.arity, 1);
    sys.polys
        .iter()
        .fold(one.clone(), |acc, f| &acc * &(&one - &f.pow(q)))
}

/// Same function as [`common_root_indicator`], with every intermediate
/// product reduced so all exponents stay at most `p - 1`.
pub fn reduced_indicator<W: Residue>(sys: &PolySystem<W>) -> Polynomial<W> {
    let q = sys.field.modulus() - 1;
    let one = Polynomial::constant(sys.field, sys.arity, 1);
    sys.polys.iter().fold(one.clone(), |acc, f| {
        (&acc * &(&one - &f.pow_reduced(q))).reduce_field_map()
    })
}

/// Exact number of common roots in `F_p^n`.
pub fn count_common_roots<W: Residue>(sys: &PolySystem<W>, budget: u64) -> Result<u64> {
    check_budget(sys.field.modulus(), sys.arity, budget)?;
    let mut count = 0;
    for_each_point(sys.field, sys.arity, |x| {
        if sys.is_common_root(x) {
            count += 1;
        }
    });
    Ok(count)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WarningReport<W: Residue> {
    pub count: u64,
    pub divisible: bool,
    /// A common root different from the supplied one, if one was supplied.
    pub second_root: Option<Vec<FieldElement<W>>>,
}

/// For systems with degree sum below `n`: the number of common roots is a
/// multiple of `p`, so a known root is never the only one.
pub fn warning_check<W: Residue>(
    sys: &PolySystem<W>,
    known_root: Option<&[FieldElement<W>]>,
    budget: u64,
) -> Result<WarningReport<W>> {
    if sys.degree_sum() >= sys.arity as u64 {
        return Err(Error::Precondition(format!(
            "degree sum {} must be below the number of variables {}",
            sys.degree_sum(),
            sys.arity
        )));
    }
    let known: Option<Vec<W>> = match known_root {
        Some(c) => {
            if c.len() != sys.arity {
                return Err(Error::ArityMismatch {
                    expected: sys.arity,
                    found: c.len(),
                });
            }
            for x in c {
                sys.field.check_same(&x.field())?;
            }
            let raw: Vec<W> = c.iter().map(FieldElement::value).collect();
            if !sys.is_common_root(&raw) {
                return Err(Error::NotARoot);
            }
            Some(raw)
        }
        None => None,
    };
    check_budget(sys.field.modulus(), sys.arity, budget)?;
    let mut count = 0;
    let mut second: Option<Vec<W>> = None;
    for_each_point(sys.field, sys.arity, |x| {
        if sys.is_common_root(x) {
            count += 1;
            if second.is_none() && known.as_deref().is_some_and(|k| k != x) {
                second = Some(x.to_vec());
            }
        }
    });
    Ok(WarningReport {
        count,
        divisible: count % sys.field.modulus() == 0,
        second_root: second.map(|r| r.into_iter().map(|v| sys.field.wrap(v)).collect()),
    })
}

/// Classification for degree sum at most `n` with nonzero members:
/// `(-1)^(n+m)` when every member is nonconstant and the product has a
/// nonzero `x1...xn` coefficient `q`, otherwise `0`.
///
/// Only the `+-1` branch with a product whose top-degree part is exactly
/// `q x1...xn`, and every case with `p = 2`, agrees with the exact count in
/// general; see [`theorem4_exact_top_part`].
pub fn theorem4_classify<W: Residue>(sys: &PolySystem<W>) -> Result<ResiduePrediction> {
    let n = sys.arity;
    if sys.degree_sum() > n as u64 {
        return Err(Error::Precondition(format!(
            "degree sum {} exceeds n = {n}",
            sys.degree_sum()
        )));
    }
    let members = sys.nonzero_members();
    if members.is_empty() {
        return Err(Error::Precondition(
            "every member is the zero polynomial".into(),
        ));
    }
    let m = members.len();
    let field = sys.field;
    let product = members
        .iter()
        .fold(Polynomial::constant(field, n, 1), |acc, f| &acc * f);
    let q = product.coeff_raw(&ExponentVector::uniform(n, 1));
    let applies = members.iter().all(|f| !f.is_constant()) && !q.is_zero();
    let predicted = if !applies {
        0
    } else if (n + m).is_multiple_of(2) {
        1 % field.modulus()
    } else {
        field.modulus() - 1
    };
    Ok(ResiduePrediction {
        predicted,
        certificate: q.as_u64(),
        rule: Rule::T4,
    })
}

/// True when the degree-`n` part of `prod P_i` is exactly `q x1...xn`.
pub fn theorem4_exact_top_part<W: Residue>(sys: &PolySystem<W>) -> bool {
    let n = sys.arity;
    let product = sys
        .nonzero_members()
        .iter()
        .fold(Polynomial::constant(sys.field, n, 1), |acc, f| &acc * f);
    let top = product.homogeneous_part(n as u64);
    top.num_terms() == 1
        && top
            .leading_term()
            .is_some_and(|(e, _)| *e == ExponentVector::uniform(n, 1))
}

/// `(-1)^n d mod p`, `d` the `prod x_i^(p-1)` coefficient of the reduced
/// indicator.
pub fn theorem5_predict<W: Residue>(sys: &PolySystem<W>) -> ResiduePrediction {
    let field = sys.field;
    let g = reduced_indicator(sys);
    let d = g.coeff_raw(&ExponentVector::uniform(
        sys.arity,
        (field.modulus() - 1) as u32,
    ));
    let predicted = if sys.arity.is_multiple_of(2) {
        d
    } else {
        field.neg(d)
    };
    ResiduePrediction {
        predicted: predicted.as_u64(),
        certificate: d.as_u64(),
        rule: Rule::T5,
    }
}

/// Record of the repeated-exclusion argument run to completion.
#[derive(Debug, Clone)]
pub struct ExclusionTrace<W: Residue> {
    pub roots: Vec<Vec<W>>,
    /// Coefficient of `prod x_i^(p-1)` before any exclusion, then after each.
    pub top_coefficients: Vec<W>,
    /// Witness search over all of `F_p^n` on the final polynomial.
    pub final_witness: Option<Witness<W>>,
}

/// Starting from the reduced indicator, adds an exclusion polynomial at every
/// common root in turn.
pub fn exclude_all_roots<W: Residue>(
    sys: &PolySystem<W>,
    budget: u64,
) -> Result<ExclusionTrace<W>> {
    check_budget(sys.field.modulus(), sys.arity, budget)?;
    let field = sys.field;
    let top = ExponentVector::uniform(sys.arity, (field.modulus() - 1) as u32);
    let mut f = reduced_indicator(sys);
    let mut roots = Vec::new();
    for_each_point(field, sys.arity, |x| {
        if sys.is_common_root(x) {
            roots.push(x.to_vec());
        }
    });
    let mut top_coefficients = vec![f.coeff_raw(&top)];
    for r in &roots {
        let c: Vec<_> = r.iter().map(|&v| field.wrap(v)).collect();
        f = &f + &exclude_point(&f, &c)?;
        top_coefficients.push(f.coeff_raw(&top));
    }
    let final_witness = find_witness(&f, &Grid::full(field, sys.arity))?;
    Ok(ExclusionTrace {
        roots,
        top_coefficients,
        final_witness,
    })
}
