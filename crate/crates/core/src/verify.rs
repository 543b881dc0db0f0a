//! The full randomized property suite behind the `verify` command.
//!
//! Every check compares a construction or prediction against exhaustive
//! enumeration on seeded random inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::chevalley::{
    count_common_roots, theorem4_classify, theorem4_exact_top_part, theorem5_predict, warning_check,
};
use crate::cnss::{find_witness, generalized_hypothesis, supp_maximal, Grid};
use crate::enumerate::{for_each_boolean_point, for_each_point};
use crate::error::Result;
use crate::exclusion::{
    axis_zero_exclusion, exclude_boolean_point, exclude_indicator_subset, exclude_point,
    inverse_pair_exclusion, BooleanPoint,
};
use crate::field::PrimeField;
use crate::graph::{clique_stats, cliques_intersecting, prop62_search, theorem9_check, Graph};
use crate::monomial::ExponentVector;
use crate::parity::{theorem6_check, theorem7_predict, theorem8_analyze};
use crate::poly::Polynomial;
use crate::random::{random_graph, random_low_degree_system, random_polynomial, random_system};
use crate::report::{Report, Status};

type F = PrimeField<u32>;

fn field(p: u64) -> F {
    PrimeField::new(p).expect("small prime")
}

/// Outcome of one family of checks.
#[derive(Debug, Clone, Default)]
pub struct Tally {
    pub cases: u64,
    pub failures: u64,
    pub not_applicable: u64,
}

impl Tally {
    fn record(&mut self, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
        }
    }

    fn record_option(&mut self, check: Option<bool>) {
        match check {
            Some(ok) => self.record(ok),
            None => self.not_applicable += 1,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn check_round_trip(seed: u64) -> Tally {
    let mut rng = rng_for(seed, 1);
    let mut t = Tally::default();
    for i in 0..500 {
        let p = [2u64, 3, 5, 7][i % 4];
        let n = rng.gen_range(1..=3);
        let f = random_polynomial(&mut rng, field(p), n, 8, 2 * p as u32);
        t.record(Polynomial::parse(&f.to_string(), f.field(), n).as_ref() == Ok(&f));
    }
    t
}

/// Returns tallies for the field-map and Boolean reductions.
pub fn check_reductions(seed: u64) -> (Tally, Tally) {
    let mut rng = rng_for(seed, 2);
    let (mut fm, mut bo) = (Tally::default(), Tally::default());
    for i in 0..500 {
        let p = [2u64, 3, 5, 7][i % 4];
        let n = rng.gen_range(1..=3);
        let f = random_polynomial(&mut rng, field(p), n, 8, 2 * p as u32);
        let g = f.reduce_field_map();
        let mut ok = g
            .terms()
            .all(|(e, _)| e.as_slice().iter().all(|&k| (k as u64) < p));
        for_each_point(f.field(), n, |x| ok &= f.eval_raw(x) == g.eval_raw(x));
        fm.record(ok);
        let b = f.reduce_boolean();
        let mut ok = b.terms().all(|(e, _)| e.as_slice().iter().all(|&k| k <= 1));
        for_each_boolean_point::<u32>(n, |x, _| ok &= f.eval_raw(x) == b.eval_raw(x));
        bo.record(ok);
    }
    (fm, bo)
}

pub fn check_ring_laws(seed: u64) -> Tally {
    let mut rng = rng_for(seed, 3);
    let mut t = Tally::default();
    for i in 0..300 {
        let p = [2u64, 3, 5, 7][i % 4];
        let fp = field(p);
        let n = rng.gen_range(1..=3);
        let f = random_polynomial(&mut rng, fp, n, 6, 4);
        let g = random_polynomial(&mut rng, fp, n, 6, 4);
        let x: Vec<u32> = (0..n).map(|_| rng.gen_range(0..p as u32)).collect();
        let (fx, gx) = (f.eval_raw(&x), g.eval_raw(&x));
        t.record(
            (&f + &g).eval_raw(&x) == fp.add(fx, gx) && (&f * &g).eval_raw(&x) == fp.mul(fx, gx),
        );
    }
    t
}

pub fn check_witness_guarantee(seed: u64) -> Result<Tally> {
    let mut rng = rng_for(seed, 4);
    let mut t = Tally::default();
    while t.cases < 500 {
        let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
        let fp = field(p);
        let n = rng.gen_range(1..=3);
        let f = random_polynomial(&mut rng, fp, n, 6, (p - 1) as u32).reduce_field_map();
        let Some(a) = supp_maximal(&f).into_iter().next() else {
            continue;
        };
        let sets = a
            .as_slice()
            .iter()
            .map(|&ai| {
                let mut all: Vec<i64> = (0..p as i64).collect();
                for i in (1..all.len()).rev() {
                    all.swap(i, rng.gen_range(0..=i));
                }
                all.truncate(rng.gen_range(ai as u64 + 1..=p) as usize);
                all
            })
            .collect();
        let grid = Grid::new(fp, sets)?;
        t.record(generalized_hypothesis(&f, &grid).is_some() && find_witness(&f, &grid)?.is_some());
    }
    Ok(t)
}

pub fn check_point_exclusion(seed: u64) -> Result<Tally> {
    let mut rng = rng_for(seed, 5);
    let mut t = Tally::default();
    for _ in 0..200 {
        let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
        let fp = field(p);
        let n = rng.gen_range(1..=3);
        let f = random_polynomial(&mut rng, fp, n, 6, 3);
        let c: Vec<_> = (0..n)
            .map(|_| fp.wrap(rng.gen_range(0..p as u32)))
            .collect();
        let craw: Vec<u32> = c.iter().map(|v| v.value()).collect();
        let g = exclude_point(&f, &c)?;
        let fc = f.eval_raw(&craw);
        let mut ok = true;
        for_each_point(fp, n, |x| {
            let want = if x == craw.as_slice() { fp.neg(fc) } else { 0 };
            ok &= g.eval_raw(x) == want;
        });
        t.record(ok && (&f + &g).eval_raw(&craw) == 0);
    }
    Ok(t)
}

pub fn check_boolean_exclusions() -> Tally {
    let mut t = Tally::default();
    for p in [2u64, 3, 5] {
        let fp = field(p);
        for n in 1..=10usize {
            for mask in [0u64, 1, (1 << n) - 1, 0x2AA & ((1 << n) - 1)] {
                let b = BooleanPoint::from_mask(n, mask);
                let h = exclude_boolean_point(&b, fp);
                let g = exclude_indicator_subset(&b, fp);
                let target = b.residues::<u32>();
                let at_b = fp.from_i64(if (n - b.ones()).is_multiple_of(2) {
                    1
                } else {
                    -1
                });
                let mut ok = true;
                for_each_boolean_point::<u32>(n, |x, _| {
                    let hit = x == target.as_slice();
                    ok &= h.eval_raw(x) == if hit { fp.minus_one() } else { 0 };
                    ok &= g.eval_raw(x) == if hit { at_b } else { 0 };
                });
                t.record(ok);
            }
        }
    }
    t
}

pub fn check_axis_inverse() -> Tally {
    let mut t = Tally::default();
    for p in [3u64, 5, 7] {
        let fp = field(p);
        let g = axis_zero_exclusion(fp);
        let h = inverse_pair_exclusion(fp);
        for_each_point(fp, 2, |xy| {
            let (x, y) = (xy[0], xy[1]);
            let want_g = if x == 0 {
                y
            } else if y == 0 {
                x
            } else {
                0
            };
            let want_h = if fp.add(x, y) == 0 { fp.mul(x, x) } else { 0 };
            t.record(g.eval_raw(xy) == want_g && h.eval_raw(xy) == want_h);
        });
    }
    t
}

/// `F = (xy - x - y) + axis + inverse`; checks the `x^(p-k+1) y^k` coefficient
/// and the witness found on the full grid.
pub fn check_composite() -> Result<Tally> {
    let mut t = Tally::default();
    for (p, k) in [(3u64, 2u32), (5, 2), (5, 3), (5, 4)] {
        let fp = field(p);
        let f = Polynomial::parse("x1*x2 - x1 - x2", fp, 2)?;
        let big = &(&f + &axis_zero_exclusion(fp)) + &inverse_pair_exclusion(fp);
        let coeff = big
            .coefficient(&ExponentVector::new(vec![p as u32 - k + 1, k]))?
            .value();
        let want = fp.neg(fp.from_u64(binomial(p - 1, k as u64)));
        t.record(coeff == want && coeff != 0);
        let ok = match find_witness(&big, &Grid::full(fp, 2))? {
            Some(w) => {
                let (a, b) = (w.point[0].value(), w.point[1].value());
                fp.add(a, b) != fp.mul(a, b) && a != 0 && b != 0 && fp.add(a, b) != 0
            }
            None => false,
        };
        t.record(ok);
    }
    Ok(t)
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn check_warning(seed: u64, budget: u64) -> Result<Tally> {
    let mut rng = rng_for(seed, 6);
    let mut t = Tally::default();
    for _ in 0..200 {
        let p = [2u64, 3, 5][rng.gen_range(0..3)];
        let n = rng.gen_range(2..=4);
        let sys = random_low_degree_system(&mut rng, field(p), n);
        t.record(warning_check(&sys, None, budget)?.divisible);
    }
    Ok(t)
}

/// Exactness of the `(-1)^n d` root-count prediction on the random corpus, and
/// the +-1/0 classification on members with degree sum <= n:
/// `(t5, t4 all, t4 provable part)`.
pub fn check_root_count_predictions(seed: u64, budget: u64) -> Result<(Tally, Tally, Tally)> {
    let mut rng = rng_for(seed, 7);
    let (mut t5, mut t4, mut t4_sound) = (Tally::default(), Tally::default(), Tally::default());
    for _ in 0..300 {
        let p = [2u64, 3, 5][rng.gen_range(0..3)];
        let n = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=3);
        let sys = random_system(&mut rng, field(p), n, m, 3);
        let count = count_common_roots(&sys, budget)?;
        t5.record(count % p == theorem5_predict(&sys).predicted);
        if sys.degree_sum() <= n as u64 {
            let predicted = theorem4_classify(&sys)?.predicted;
            t4.record(count % p == predicted);
            if p == 2 || (predicted != 0 && theorem4_exact_top_part(&sys)) {
                t4_sound.record(count % p == predicted);
            }
        }
    }
    Ok((t5, t4, t4_sound))
}

/// The Boolean-cube parity identity and the balance check on one corpus.
pub fn check_boolean_parity(seed: u64) -> Result<(Tally, Tally)> {
    let mut rng = rng_for(seed, 8);
    let (mut t7, mut t6) = (Tally::default(), Tally::default());
    for _ in 0..300 {
        let p = [2u64, 3, 5][rng.gen_range(0..3)];
        let n = rng.gen_range(1..=8);
        let f = random_polynomial(&mut rng, field(p), n, 4, 2);
        t7.record(theorem7_predict(&f)?.holds);
        t6.record_option(theorem6_check(&f)?.holds);
    }
    Ok((t7, t6))
}

/// Every nonzero reduced univariate polynomial over `F_3` and every nonzero
/// multilinear polynomial in two variables over `F_2`.
pub fn check_theorem8(budget: u64) -> Result<Tally> {
    let mut t = Tally::default();
    let f3 = field(3);
    for code in 1..27i64 {
        let terms = (0..3).map(|e| (ExponentVector::new(vec![e]), (code / 3i64.pow(e)) % 3));
        let f = Polynomial::from_terms(f3, 1, terms)?;
        t.record(theorem8_analyze(&f, budget)?.holds());
    }
    let f2 = field(2);
    for code in 1..16i64 {
        let terms = (0..4).map(|j| {
            (
                ExponentVector::new(vec![(j & 1) as u32, (j >> 1) as u32]),
                (code >> j) & 1,
            )
        });
        let f = Polynomial::from_terms(f2, 2, terms)?;
        t.record(theorem8_analyze(&f, budget)?.holds());
    }
    Ok(t)
}

/// K4 over `F_2` (8 qualifying subsets, 4 even and 4 odd) plus a random sweep.
pub fn check_theorem9(seed: u64) -> Result<(bool, Tally)> {
    let f2 = field(2);
    let k4 = theorem9_check(&Graph::complete(4), f2.element(0), None)?;
    let k4_ok = k4.report.even_count == 4 && k4.report.odd_count == 4 && k4.holds == Some(true);
    let mut rng = rng_for(seed, 9);
    let mut t = Tally::default();
    for _ in 0..150 {
        let p = [2u64, 3][rng.gen_range(0..2)];
        let g = {
            let nv = rng.gen_range(3..=6);
            random_graph(&mut rng, nv, 0.75)
        };
        if g.edge_count() == 0 || g.edge_count() > 14 {
            continue;
        }
        let k = field(p).element(rng.gen_range(0..p as i64));
        t.record_option(theorem9_check(&g, k, None)?.holds);
    }
    Ok((k4_ok, t))
}

/// Inclusion-exclusion identity on random graphs and the two worked
/// subset searches.
pub fn check_cliques(seed: u64, budget: u64) -> Result<(Tally, bool)> {
    let mut rng = rng_for(seed, 10);
    let mut t = Tally::default();
    for _ in 0..30 {
        let g = {
            let nv = rng.gen_range(3..=8);
            random_graph(&mut rng, nv, 0.6)
        };
        for d in [3, 4] {
            let stats = clique_stats(&g, d)?;
            for mask in 0u64..1 << g.vertex_count() {
                if mask.count_ones() > 4 {
                    continue;
                }
                let u: Vec<usize> = (0..g.vertex_count())
                    .filter(|&v| mask >> v & 1 == 1)
                    .collect();
                t.record(stats.inclusion_exclusion(&u) == cliques_intersecting(&g, d, &u)? as i64);
            }
        }
    }
    let f2 = field(2);
    let tri_iso = Graph::new(4, vec![(0, 1), (0, 2), (1, 2)])?;
    let a = prop62_search(&tri_iso, 3, f2, budget)?;
    let b = prop62_search(&Graph::complete(4), 3, f2, budget)?;
    let searches = a.is_some_and(|u| u.vertices == [3] && u.intersecting == 0)
        && b.is_some_and(|u| u.vertices.len() == 2 && u.intersecting == 4);
    Ok((t, searches))
}

/// Runs everything and collects the outcome into one report.
pub fn run_suite(seed: u64, budget: u64) -> Result<Report> {
    let mut results = Map::new();
    let mut claims: Vec<(String, Status)> = Vec::new();
    let mut add = |key: &str, claim: &str, t: &Tally| {
        results.insert(
            key.into(),
            json!({"cases": t.cases, "failures": t.failures, "not_applicable": t.not_applicable}),
        );
        claims.push((claim.into(), Status::from_bool(t.passed())));
    };

    add(
        "round_trip",
        "parse(format(f)) = f",
        &check_round_trip(seed),
    );
    let (fm, bo) = check_reductions(seed);
    add(
        "reduce_field_map",
        "field-map reduction preserves evaluation on F_p^n",
        &fm,
    );
    add(
        "reduce_boolean",
        "multilinear reduction preserves evaluation on {0,1}^n",
        &bo,
    );
    add(
        "ring_laws",
        "evaluation is a ring homomorphism",
        &check_ring_laws(seed),
    );
    add(
        "witness_guarantee",
        "a maximal support element fitting the grid forces a witness",
        &check_witness_guarantee(seed)?,
    );
    add(
        "exclude_point",
        "point exclusion vanishes off c and cancels f at c",
        &check_point_exclusion(seed)?,
    );
    add(
        "boolean_exclusions",
        "Boolean and subset exclusions are supported on one point",
        &check_boolean_exclusions(),
    );
    add(
        "axis_inverse",
        "axis-zero and inverse-pair exclusions match their value tables",
        &check_axis_inverse(),
    );
    add(
        "composite",
        "x^(p-k+1) y^k has coefficient -C(p-1,k); witness avoids excluded pairs",
        &check_composite()?,
    );
    add(
        "chevalley_warning",
        "degree sum < n implies p divides the root count",
        &check_warning(seed, budget)?,
    );
    let (t5, t4, t4_sound) = check_root_count_predictions(seed, budget)?;
    add(
        "theorem5",
        "root count = (-1)^n d (mod p) for every system",
        &t5,
    );
    add(
        "theorem4",
        "the +-1/0 classification matches the root count whenever degree sum <= n",
        &t4,
    );
    add(
        "theorem4_single_top_monomial",
        "the classification matches when p = 2 or the product's top part is q x1...xn",
        &t4_sound,
    );
    let (t7, t6) = check_boolean_parity(seed)?;
    add("theorem7", "|S_e| - |S_o| = (-1)^n d (mod p)", &t7);
    add(
        "theorem6",
        "no full-support term in f^(p-1) implies even/odd balance",
        &t6,
    );
    add(
        "theorem8",
        "single-nonzero-value classification on all small reduced polynomials",
        &check_theorem8(budget)?,
    );
    let (k4, t9) = check_theorem9(seed)?;
    let mut k4_tally = Tally::default();
    k4_tally.record(k4);
    add(
        "theorem9_k4",
        "K4 over F_2: 4 even and 4 odd even-degree edge subsets",
        &k4_tally,
    );
    add(
        "theorem9_sweep",
        "|V|(p-1) < |E| implies even/odd balance of degree-k subsets",
        &t9,
    );
    let (ie, searches) = check_cliques(seed, budget)?;
    add(
        "inclusion_exclusion",
        "inclusion-exclusion over K(I) counts cliques meeting U",
        &ie,
    );
    let mut s = Tally::default();
    s.record(searches);
    add(
        "prop62_search",
        "subset search finds U with clique count = 0 (mod p)",
        &s,
    );

    let mut report = Report::new(
        "verify",
        json!({"seed": seed, "budget": budget}),
        Value::Object(results),
    );
    for (claim, status) in claims {
        report.assert(claim, status);
    }
    Ok(report)
}
