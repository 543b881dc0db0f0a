//! Support analysis, Nullstellensatz hypothesis checks and witness search.

use std::collections::BTreeSet;

use crate::enumerate::for_each_grid_point;
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField, Residue};
use crate::monomial::ExponentVector;
use crate::poly::{Degree, Polynomial};

/// Per-variable value sets `S_1 x ... x S_n`, each sorted ascending and
/// deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid<W: Residue> {
    field: PrimeField<W>,
    sets: Vec<Vec<W>>,
}

impl<W: Residue> Grid<W> {
    pub fn new(field: PrimeField<W>, sets: Vec<Vec<i64>>) -> Result<Self> {
        let sets = sets
            .into_iter()
            .enumerate()
            .map(|(i, s)| {
                if s.is_empty() {
                    return Err(Error::EmptyGridSet(i + 1));
                }
                let set: BTreeSet<W> = s.into_iter().map(|v| field.from_i64(v)).collect();
                Ok(set.into_iter().collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Grid { field, sets })
    }

    /// `F_p^n`.
    pub fn full(field: PrimeField<W>, arity: usize) -> Self {
        Grid {
            field,
            sets: vec![field.residues().collect(); arity],
        }
    }

    /// Parses `0,1;0,1,4` or the same with one set per line.
    pub fn parse(text: &str, field: PrimeField<W>) -> Result<Self> {
        let sets = text
            .split([';', '\n'])
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|line| {
                line.split(',')
                    .map(|v| {
                        v.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::Format(format!("bad grid value '{}'", v.trim())))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, sets)
    }

    pub fn arity(&self) -> usize {
        self.sets.len()
    }

    pub fn field(&self) -> PrimeField<W> {
        self.field
    }

    pub fn sets(&self) -> &[Vec<W>] {
        &self.sets
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.sets.iter().map(Vec::len).collect()
    }

    /// `|S_i| >= a_i + 1` for every `i`.
    pub fn admits(&self, a: &ExponentVector) -> bool {
        a.len() == self.arity()
            && self
                .sets
                .iter()
                .zip(a.as_slice())
                .all(|(s, &ai)| s.len() as u64 > ai as u64)
    }
}

/// A point of the grid at which the polynomial does not vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness<W: Residue> {
    pub point: Vec<FieldElement<W>>,
    pub value: FieldElement<W>,
}

pub fn supp<W: Residue>(f: &Polynomial<W>) -> BTreeSet<ExponentVector> {
    f.terms().map(|(e, _)| e.clone()).collect()
}

/// Maximal elements of `supp(f)` under the componentwise order.
pub fn supp_maximal<W: Residue>(f: &Polynomial<W>) -> BTreeSet<ExponentVector> {
    // Terms come in descending graded-lex order, which extends dominance, so
    // anything dominating a term has already been seen.
    let mut maximal: Vec<ExponentVector> = Vec::new();
    for (e, _) in f.terms() {
        if !maximal.iter().any(|m| m.dominates(e)) {
            maximal.push(e.clone());
        }
    }
    maximal.into_iter().collect()
}

/// `deg f = sum t_i` and the coefficient of `prod x_i^{t_i}` is nonzero.
pub fn classic_hypothesis<W: Residue>(f: &Polynomial<W>, t: &ExponentVector) -> Result<bool> {
    let c = f.coefficient(t)?;
    Ok(!c.is_zero() && f.total_degree() == Degree::Finite(t.degree()))
}

/// A maximal support element that fits inside the grid, if any. When one
/// exists, [`find_witness`] is guaranteed to succeed.
pub fn generalized_hypothesis<W: Residue>(
    f: &Polynomial<W>,
    grid: &Grid<W>,
) -> Option<ExponentVector> {
    supp_maximal(f).into_iter().rev().find(|a| grid.admits(a))
}

/// Scans the grid in lexicographic order (`x1` outermost, each set ascending)
/// and returns the first point with a nonzero value.
pub fn find_witness<W: Residue>(f: &Polynomial<W>, grid: &Grid<W>) -> Result<Option<Witness<W>>> {
    f.field().check_same(&grid.field)?;
    if grid.arity() != f.arity() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: grid.arity(),
        });
    }
    let field = f.field();
    let mut found = None;
    for_each_grid_point(&grid.sets, |x| {
        let v = f.eval_raw(x);
        if v.is_zero() {
            return true;
        }
        found = Some(Witness {
            point: x.iter().map(|&xi| field.wrap(xi)).collect(),
            value: field.wrap(v),
        });
        false
    });
    Ok(found)
}
