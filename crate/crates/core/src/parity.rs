//! Even/odd balance of Boolean supports and the single-nonzero-value law.

use serde::{Deserialize, Serialize};

use crate::chevalley::PolySystem;
use crate::enumerate::{check_budget, for_each_boolean_point, for_each_point};
use crate::error::{Error, Result};
use crate::field::{FieldElement, Residue};
use crate::monomial::ExponentVector;
use crate::poly::Polynomial;

/// Largest arity enumerated over `{0,1}^n`.
pub const MAX_BOOLEAN_ARITY: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetKind {
    NonzeroSet,
    ZeroSet,
}

/// Points of `{0,1}^n` in the selected set, split by parity of the number of
/// ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityReport {
    pub even_count: u64,
    pub odd_count: u64,
    pub modulus: u64,
    pub set_kind: SetKind,
}

impl ParityReport {
    pub fn balanced_mod_p(&self) -> bool {
        self.even_count % self.modulus == self.odd_count % self.modulus
    }

    /// `even_count - odd_count` reduced into `[0, p)`.
    pub fn difference_mod_p(&self) -> u64 {
        let p = self.modulus;
        (self.even_count % p + p - self.odd_count % p) % p
    }
}

fn check_boolean_arity(n: usize) -> Result<()> {
    if n > MAX_BOOLEAN_ARITY {
        return Err(Error::BudgetExceeded {
            needed: 1u64 << n.min(63),
            budget: 1 << MAX_BOOLEAN_ARITY,
        });
    }
    Ok(())
}

/// Counts `{0,1}^n` points satisfying `keep` by parity of their weight.
pub(crate) fn count_boolean<W: Residue>(
    n: usize,
    modulus: u64,
    set_kind: SetKind,
    mut keep: impl FnMut(&[W]) -> bool,
) -> Result<ParityReport> {
    check_boolean_arity(n)?;
    let (mut even_count, mut odd_count) = (0, 0);
    for_each_boolean_point::<W>(n, |x, ones| {
        if keep(x) {
            if ones % 2 == 0 {
                even_count += 1;
            } else {
                odd_count += 1;
            }
        }
    });
    Ok(ParityReport {
        even_count,
        odd_count,
        modulus,
        set_kind,
    })
}

pub fn boolean_support_counts<W: Residue>(
    f: &Polynomial<W>,
    kind: SetKind,
) -> Result<ParityReport> {
    count_boolean(f.arity(), f.modulus(), kind, |x: &[W]| {
        f.eval_raw(x).is_zero() == (kind == SetKind::ZeroSet)
    })
}

fn has_full_support_term<W: Residue>(f: &Polynomial<W>) -> bool {
    f.terms().any(|(e, _)| e.has_full_support())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem6Report {
    /// No monomial of the expanded `f^(p-1)` contains every variable.
    pub hypothesis: bool,
    /// The same test on the multilinear reduction of `f^(p-1)`.
    pub hypothesis_after_reduction: bool,
    pub nonzero_set: ParityReport,
    pub zero_set: ParityReport,
    /// Both sets balanced mod `p`; `None` when the hypothesis fails.
    pub holds: Option<bool>,
}

/// If no term of `f^(p-1)` contains all variables, the nonzero set and the
/// zero set of `f` on `{0,1}^n` each have as many even-weight as odd-weight
/// points modulo `p`.
pub fn theorem6_check<W: Residue>(f: &Polynomial<W>) -> Result<Theorem6Report> {
    check_boolean_arity(f.arity())?;
    let power = f.pow(f.modulus() - 1);
    let hypothesis = !has_full_support_term(&power);
    let hypothesis_after_reduction = !has_full_support_term(&power.reduce_boolean());
    let nonzero_set = boolean_support_counts(f, SetKind::NonzeroSet)?;
    let zero_set = boolean_support_counts(f, SetKind::ZeroSet)?;
    let holds = hypothesis.then(|| nonzero_set.balanced_mod_p() && zero_set.balanced_mod_p());
    Ok(Theorem6Report {
        hypothesis,
        hypothesis_after_reduction,
        nonzero_set,
        zero_set,
        holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem7Report {
    /// Coefficient of `x1...xn` in the multilinear reduction of `f^(p-1)`.
    pub d: u64,
    /// `(-1)^n d mod p`.
    pub predicted: u64,
    /// Coefficient of `x1...xn` after the mod-`(p-1)` exponent reduction, for
    /// comparison with `d`.
    pub field_map_coefficient: u64,
    pub report: ParityReport,
    /// `even - odd` of the nonzero set equals `predicted` mod `p`.
    pub holds: bool,
}

/// `|S_e| - |S_o| = (-1)^n d (mod p)` for the nonzero set of `f` on `{0,1}^n`.
pub fn theorem7_predict<W: Residue>(f: &Polynomial<W>) -> Result<Theorem7Report> {
    check_boolean_arity(f.arity())?;
    let field = f.field();
    let n = f.arity();
    let power = f.pow_reduced(f.modulus() - 1);
    let full = ExponentVector::uniform(n, 1);
    let d = power.reduce_boolean().coeff_raw(&full);
    let field_map_coefficient = power.reduce_field_map().coeff_raw(&full).as_u64();
    let predicted = if n.is_multiple_of(2) { d } else { field.neg(d) }.as_u64();
    let report = boolean_support_counts(f, SetKind::NonzeroSet)?;
    let holds = report.difference_mod_p() == predicted;
    Ok(Theorem7Report {
        d: d.as_u64(),
        predicted,
        field_map_coefficient,
        report,
        holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryReport {
    /// Whether the degree or support hypothesis holds.
    pub applicable: bool,
    /// Shared roots of the system on `{0,1}^n`, split by parity.
    pub report: ParityReport,
    /// Balanced mod `p`; `None` when not applicable.
    pub holds: Option<bool>,
}

fn shared_root_counts<W: Residue>(sys: &PolySystem<W>) -> Result<ParityReport> {
    count_boolean(
        sys.arity(),
        sys.field().modulus(),
        SetKind::ZeroSet,
        |x: &[W]| sys.is_common_root(x),
    )
}

/// If `g = prod (1 - f_i^(p-1))` has no monomial containing every variable,
/// the Boolean shared roots are balanced between even and odd weight mod `p`.
pub fn corollary_shared_roots_parity<W: Residue>(sys: &PolySystem<W>) -> Result<CorollaryReport> {
    check_boolean_arity(sys.arity())?;
    let g = crate::chevalley::common_root_indicator(sys);
    let applicable = !has_full_support_term(&g);
    let report = shared_root_counts(sys)?;
    let holds = applicable.then(|| report.balanced_mod_p());
    Ok(CorollaryReport {
        applicable,
        report,
        holds,
    })
}

/// Subsets of an `|A|`-set whose indicator vectors are shared roots: balanced
/// mod `p` whenever `(p-1) sum deg f_i < |A|`.
pub fn corollary_subset_parity<W: Residue>(
    sys: &PolySystem<W>,
    set_size: usize,
) -> Result<CorollaryReport> {
    if sys.arity() != set_size {
        return Err(Error::ArityMismatch {
            expected: set_size,
            found: sys.arity(),
        });
    }
    check_boolean_arity(set_size)?;
    let applicable = (sys.field().modulus() - 1) * sys.degree_sum() < set_size as u64;
    if !applicable {
        return Ok(CorollaryReport {
            applicable,
            report: shared_root_counts(sys)?,
            holds: None,
        });
    }
    // The degree bound keeps every monomial of the indicator short of full
    // support, so the shared-roots corollary applies.
    let r = corollary_shared_roots_parity(sys)?;
    debug_assert!(r.applicable);
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem8Report<W: Residue> {
    /// Size of `{x in F_p^n : f(x) != 0}`.
    pub nonzero_count: u64,
    /// The reduced form of `f` has the monomial `prod x_i^(p-1)`.
    pub has_top_term: bool,
    /// Its coefficient (possibly zero).
    pub top_coefficient: u64,
    /// The unique nonzero point and value, when there is exactly one.
    pub unique: Option<(Vec<FieldElement<W>>, FieldElement<W>)>,
    /// Without the top term there are at least two nonzero values;
    /// `None` when the top term is present.
    pub multiple_values: Option<bool>,
    /// With a single nonzero value `d`, the top coefficient is `d (-1)^n`;
    /// `None` unless there is exactly one nonzero value.
    pub coefficient_law: Option<bool>,
}

impl<W: Residue> Theorem8Report<W> {
    pub fn holds(&self) -> bool {
        self.multiple_values.unwrap_or(true) && self.coefficient_law.unwrap_or(true)
    }
}

/// A nonzero function on `F_p^n` whose reduced form lacks `prod x_i^(p-1)`
/// takes at least two nonzero values; one with a single nonzero value `d`
/// has top coefficient `d (-1)^n`.
pub fn theorem8_analyze<W: Residue>(f: &Polynomial<W>, budget: u64) -> Result<Theorem8Report<W>> {
    let reduced = f.reduce_field_map();
    if reduced.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = f.field();
    let n = f.arity();
    check_budget(field.modulus(), n, budget)?;
    let top = reduced.coeff_raw(&ExponentVector::uniform(n, (field.modulus() - 1) as u32));
    let mut nonzero_count = 0;
    let mut first: Option<(Vec<W>, W)> = None;
    for_each_point(field, n, |x| {
        let v = f.eval_raw(x);
        if !v.is_zero() {
            nonzero_count += 1;
            if first.is_none() {
                first = Some((x.to_vec(), v));
            }
        }
    });
    let has_top_term = !top.is_zero();
    let unique = if nonzero_count == 1 { first } else { None };
    let coefficient_law = unique.as_ref().map(|(_, d)| {
        let expected = if n.is_multiple_of(2) {
            *d
        } else {
            field.neg(*d)
        };
        top == expected
    });
    Ok(Theorem8Report {
        nonzero_count,
        has_top_term,
        top_coefficient: top.as_u64(),
        unique: unique.map(|(x, d)| {
            (
                x.into_iter().map(|v| field.wrap(v)).collect(),
                field.wrap(d),
            )
        }),
        multiple_values: (!has_top_term).then_some(nonzero_count >= 2),
        coefficient_law,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_BUDGET;
    use crate::exclusion::{exclude_boolean_point, BooleanPoint};
    use crate::field::PrimeField;
    use crate::random::random_polynomial;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn parse(s: &str, p: u64, n: usize) -> Polynomial<u32> {
        Polynomial::parse_mod(s, p, n).unwrap()
    }

    fn sys(p: u64, n: usize, polys: &[&str]) -> PolySystem<u32> {
        PolySystem::new(polys.iter().map(|s| parse(s, p, n)).collect()).unwrap()
    }

    #[test]
    fn support_count_examples() {
        let r = boolean_support_counts(&parse("x1", 3, 2), SetKind::NonzeroSet).unwrap();
        assert_eq!((r.even_count, r.odd_count), (1, 1));
        let r = boolean_support_counts(&parse("1", 3, 5), SetKind::NonzeroSet).unwrap();
        assert_eq!((r.even_count, r.odd_count), (16, 16));
        let r = boolean_support_counts(&parse("1", 3, 5), SetKind::ZeroSet).unwrap();
        assert_eq!((r.even_count, r.odd_count), (0, 0));
        assert!(boolean_support_counts(&parse("1", 3, 25), SetKind::ZeroSet).is_err());
    }

    #[test]
    fn theorem6_examples() {
        let r = theorem6_check(&parse("x1", 3, 2)).unwrap();
        assert!(r.hypothesis);
        assert_eq!(r.holds, Some(true));
        assert_eq!((r.nonzero_set.even_count, r.nonzero_set.odd_count), (1, 1));

        let r = theorem6_check(&parse("x1 + x2", 3, 2)).unwrap();
        assert!(!r.hypothesis);
        assert_eq!(r.holds, None);

        let r = theorem6_check(&parse("1", 5, 4)).unwrap();
        assert!(r.hypothesis);
        assert_eq!(r.holds, Some(true));
    }

    #[test]
    fn theorem7_examples() {
        let r = theorem7_predict(&parse("x1*x2", 3, 2)).unwrap();
        assert_eq!((r.d, r.predicted, r.holds), (1, 1, true));
        let r = theorem7_predict(&parse("x1", 3, 2)).unwrap();
        assert_eq!((r.d, r.predicted, r.holds), (0, 0, true));
        let r = theorem7_predict(&parse("0", 3, 2)).unwrap();
        assert_eq!((r.d, r.predicted, r.holds), (0, 0, true));
        assert_eq!((r.report.even_count, r.report.odd_count), (0, 0));
    }

    #[test]
    fn theorem7_reductions_can_disagree() {
        // f = x1^2 x2 over F_3: f^2 = x1^4 x2^2. On {0,1}^2 it is x1 x2; the
        // mod-2 exponent reduction gives x1^2 x2^2, which has no x1 x2 term.
        let r = theorem7_predict(&parse("x1^2*x2", 3, 2)).unwrap();
        assert_eq!((r.d, r.field_map_coefficient), (1, 0));
        assert!(r.holds);
        assert_eq!((r.report.even_count, r.report.odd_count), (1, 0));
    }

    #[test]
    fn corollary_examples() {
        let r = corollary_shared_roots_parity(&sys(2, 2, &["x1"])).unwrap();
        assert!(r.applicable);
        assert_eq!((r.report.even_count, r.report.odd_count), (1, 1));
        assert_eq!(r.holds, Some(true));

        let r = corollary_shared_roots_parity(&sys(3, 2, &["x1", "x2"])).unwrap();
        assert!(!r.applicable);
        assert_eq!(r.holds, None);

        let r = corollary_shared_roots_parity(&sys(3, 3, &["0"])).unwrap();
        assert_eq!(
            (r.report.even_count, r.report.odd_count, r.holds),
            (4, 4, Some(true))
        );
    }

    #[test]
    fn subset_corollary_examples() {
        let r = corollary_subset_parity(&sys(2, 3, &["x1 + x2 + x3"]), 3).unwrap();
        assert!(r.applicable);
        assert_eq!((r.report.even_count, r.report.odd_count), (4, 0));
        assert_eq!(r.holds, Some(true));

        let r = corollary_subset_parity(&sys(3, 2, &["x1 + x2"]), 2).unwrap();
        assert!(!r.applicable);
        assert_eq!(r.holds, None);

        let r = corollary_subset_parity(&sys(5, 4, &["0"]), 4).unwrap();
        assert_eq!(
            (r.report.even_count, r.report.odd_count, r.holds),
            (8, 8, Some(true))
        );

        assert!(matches!(
            corollary_subset_parity(&sys(5, 4, &["0"]), 3),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn theorem8_examples() {
        let r = theorem8_analyze(&parse("x1", 3, 1), DEFAULT_BUDGET).unwrap();
        assert_eq!(
            (r.nonzero_count, r.has_top_term, r.multiple_values),
            (2, false, Some(true))
        );

        let f3 = PrimeField::<u32>::new(3).unwrap();
        let r = theorem8_analyze(&parse("1 - x1^2", 3, 1), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.nonzero_count, 1);
        assert_eq!(r.unique, Some((vec![f3.element(0)], f3.element(1))));
        assert_eq!((r.top_coefficient, r.coefficient_law), (2, Some(true)));

        let r = theorem8_analyze(&parse("x1^2", 3, 1), DEFAULT_BUDGET).unwrap();
        assert_eq!(
            (r.has_top_term, r.multiple_values, r.nonzero_count),
            (true, None, 2)
        );
        assert!(r.holds());

        assert_eq!(
            theorem8_analyze(&parse("0", 3, 1), DEFAULT_BUDGET).unwrap_err(),
            Error::ZeroPolynomial
        );
        assert_eq!(
            theorem8_analyze(&parse("x1^3 - x1", 3, 1), DEFAULT_BUDGET).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn theorem8_all_univariate_reduced_mod_three() {
        let f3 = PrimeField::<u32>::new(3).unwrap();
        let mut cases = 0;
        for code in 1..27i64 {
            let (a, b, c) = (code % 3, (code / 3) % 3, code / 9);
            let f = Polynomial::from_terms(
                f3,
                1,
                [
                    (ExponentVector::new(vec![0]), a),
                    (ExponentVector::new(vec![1]), b),
                    (ExponentVector::new(vec![2]), c),
                ],
            )
            .unwrap();
            let r = theorem8_analyze(&f, DEFAULT_BUDGET).unwrap();
            assert!(r.holds(), "{f:?}");
            cases += 1;
        }
        assert_eq!(cases, 26);
    }

    #[test]
    fn theorem7_exact_on_random_corpus() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..300 {
            let p = [2u64, 3, 5][rng.gen_range(0..3)];
            let n = rng.gen_range(1..=8);
            let f = random_polynomial(&mut rng, PrimeField::<u32>::new(p).unwrap(), n, 4, 2);
            let r = theorem7_predict(&f).unwrap();
            assert!(r.holds, "{f:?}");
            let t6 = theorem6_check(&f).unwrap();
            assert_ne!(t6.holds, Some(false), "{f:?}");
        }
    }

    #[test]
    fn boolean_exclusion_driver_clears_the_cube() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..40 {
            let p = [2u64, 3, 5][rng.gen_range(0..3)];
            let field = PrimeField::<u32>::new(p).unwrap();
            let n = rng.gen_range(1..=5);
            let f = random_polynomial(&mut rng, field, n, 4, 2);
            let mut g = f.pow_reduced(p - 1).reduce_boolean();
            let mut points = Vec::new();
            for_each_boolean_point::<u32>(n, |x, _| {
                if g.eval_raw(x) != 0 {
                    points.push(x.to_vec());
                }
            });
            for x in points {
                assert_eq!(g.eval_raw(&x), 1);
                let b = BooleanPoint::new(x.iter().map(|&v| v == 1).collect());
                g = &g + &exclude_boolean_point(&b, field);
            }
            for_each_boolean_point::<u32>(n, |x, _| assert_eq!(g.eval_raw(x), 0));
            assert!(g.is_zero());
        }
    }
}
