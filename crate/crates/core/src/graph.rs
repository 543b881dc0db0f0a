//! Polynomials built from graphs: edge subsets with prescribed degrees mod
//! `p`, vertex neighbourhood counts, and clique intersections via
//! inclusion-exclusion.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::enumerate::check_budget;
use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField, Residue};
use crate::monomial::ExponentVector;
use crate::parity::{count_boolean, ParityReport, SetKind, MAX_BOOLEAN_ARITY};
use crate::poly::Polynomial;

/// Largest vertex count for clique enumeration.
pub const MAX_CLIQUE_VERTICES: usize = 16;

/// Simple undirected graph on vertices `0..vertex_count`. Edges are stored as
/// `(u, v)` with `u < v`, sorted; edge `i` is polynomial variable `x_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<u64>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count > 64 {
            return Err(Error::Precondition(format!(
                "at most 64 vertices supported, got {vertex_count}"
            )));
        }
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::Format(format!(
                    "edge ({}, {}) names a vertex outside 1..={vertex_count}",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::Format(format!("self-loop at vertex {}", u + 1)));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Format(format!(
                "duplicate edge ({}, {})",
                w[0].0 + 1,
                w[0].1 + 1
            )));
        }
        let mut adjacency = vec![0u64; vertex_count];
        for &(u, v) in &norm {
            adjacency[u] |= 1 << v;
            adjacency[v] |= 1 << u;
        }
        Ok(Graph {
            vertex_count,
            edges: norm,
            adjacency,
        })
    }

    /// First line `n=<vertex_count>`, then one edge per line as `u v`
    /// (1-based).
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Format("empty graph file".into()))?;
        let count = header
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse::<usize>().ok())
            .ok_or_else(|| {
                Error::Format(format!("expected `n=<vertex_count>`, found '{header}'"))
            })?;
        let mut edges = Vec::new();
        for line in lines {
            let ends: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Format(format!("bad edge line '{line}'")))
                })
                .collect::<Result<_>>()?;
            match ends.as_slice() {
                [u, v] if *u >= 1 && *v >= 1 => edges.push((u - 1, v - 1)),
                _ => return Err(Error::Format(format!("bad edge line '{line}'"))),
            }
        }
        Self::new(count, edges)
    }

    pub fn complete(vertex_count: usize) -> Self {
        let edges = (0..vertex_count)
            .flat_map(|u| (u + 1..vertex_count).map(move |v| (u, v)))
            .collect();
        Self::new(vertex_count, edges).expect("complete graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u] >> v & 1 == 1
    }

    /// `a_{v,e}`: 1 if `v` is an endpoint of edge `e`.
    pub fn incidence(&self, v: usize, e: usize) -> u8 {
        let (a, b) = self.edges[e];
        u8::from(a == v || b == v)
    }

    /// Bitmask of vertices forming a clique?
    pub fn is_clique(&self, mask: u64) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if rest & !self.adjacency[v] != 0 {
                return false;
            }
        }
        true
    }

    fn check_vertices(&self, vs: &[usize]) -> Result<u64> {
        let mut mask = 0u64;
        for &v in vs {
            if v >= self.vertex_count {
                return Err(Error::Format(format!(
                    "vertex {} outside 1..={}",
                    v + 1,
                    self.vertex_count
                )));
            }
            mask |= 1 << v;
        }
        Ok(mask)
    }
}

fn mask_to_vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// `1 - (sum - k)^(p-1)` for a linear form `sum`.
fn indicator_of<W: Residue>(sum: &Polynomial<W>, k: FieldElement<W>) -> Polynomial<W> {
    let field = sum.field();
    let one = Polynomial::constant(field, sum.arity(), 1);
    let shifted = &(sum - &one.scale_raw(k.value()));
    &one - &shifted.pow(field.modulus() - 1)
}

/// `prod_v [1 - (sum_e a_{v,e} x_e - k)^(p-1)]` over all vertices, or over
/// `vertices` when given. On the indicator of an edge subset `K` it is 1
/// exactly when every such vertex has `deg_K(v) = k (mod p)`.
pub fn degree_subset_poly<W: Residue>(
    graph: &Graph,
    k: FieldElement<W>,
    vertices: Option<&[usize]>,
) -> Result<Polynomial<W>> {
    if graph.edge_count() == 0 {
        return Err(Error::Precondition("the graph has no edges".into()));
    }
    let field = k.field();
    let m = graph.edge_count();
    let all: Vec<usize> = (0..graph.vertex_count).collect();
    let vs = vertices.unwrap_or(&all);
    graph.check_vertices(vs)?;
    let mut acc = Polynomial::constant(field, m, 1);
    for &v in vs {
        let mut sum = Polynomial::zero(field, m);
        for e in (0..m).filter(|&e| graph.incidence(v, e) == 1) {
            sum = &sum + &Polynomial::var(field, m, e);
        }
        acc = &acc * &indicator_of(&sum, k);
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem9Report {
    /// `|V|(p-1) < |E|`.
    pub bound_holds: bool,
    /// Qualifying edge subsets split by parity of their size.
    pub report: ParityReport,
    /// Balanced mod `p`; `None` when the bound fails.
    pub holds: Option<bool>,
}

/// Counts edge subsets `K` with `deg_K(v) = k (mod p)` at every vertex (or
/// every vertex of `vertices`). When `|V|(p-1) < |E|`, the even-size and
/// odd-size counts agree mod `p`.
pub fn theorem9_check<W: Residue>(
    graph: &Graph,
    k: FieldElement<W>,
    vertices: Option<&[usize]>,
) -> Result<Theorem9Report> {
    let m = graph.edge_count();
    if m == 0 {
        return Err(Error::Precondition("the graph has no edges".into()));
    }
    if m > MAX_BOOLEAN_ARITY {
        return Err(Error::BudgetExceeded {
            needed: 1u64 << m.min(63),
            budget: 1 << MAX_BOOLEAN_ARITY,
        });
    }
    let p = k.field().modulus();
    let target = k.value().as_u64();
    let all: Vec<usize> = (0..graph.vertex_count).collect();
    let vs = vertices.unwrap_or(&all);
    graph.check_vertices(vs)?;
    let mut degree = vec![0u64; graph.vertex_count];
    let report = count_boolean::<W>(m, p, SetKind::NonzeroSet, |x| {
        degree.iter_mut().for_each(|d| *d = 0);
        for (e, &(u, v)) in graph.edges.iter().enumerate() {
            if x[e].is_one() {
                degree[u] += 1;
                degree[v] += 1;
            }
        }
        vs.iter().all(|&v| degree[v] % p == target)
    })?;
    let bound_holds = (graph.vertex_count as u64) * (p - 1) < m as u64;
    let holds = bound_holds.then(|| report.balanced_mod_p());
    Ok(Theorem9Report {
        bound_holds,
        report,
        holds,
    })
}

/// `prod_{u in U} [1 - (x_u sum_v e(u,v) x_v - k)^(p-1)]` in one variable per
/// vertex.
pub fn vertex_neighborhood_poly<W: Residue>(
    graph: &Graph,
    subset: &[usize],
    k: FieldElement<W>,
) -> Result<Polynomial<W>> {
    if subset.is_empty() {
        return Err(Error::Precondition("U must be nonempty".into()));
    }
    graph.check_vertices(subset)?;
    let field = k.field();
    let n = graph.vertex_count;
    let mut acc = Polynomial::constant(field, n, 1);
    for &u in subset {
        let mut sum = Polynomial::zero(field, n);
        for v in (0..n).filter(|&v| graph.adjacent(u, v)) {
            sum = &sum + &Polynomial::var(field, n, v);
        }
        let expr = &Polynomial::var(field, n, u) * &sum;
        acc = &acc * &indicator_of(&expr, k);
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborhoodReport {
    /// `|V| > 2(p-1)|U|`.
    pub bound_holds: bool,
    /// Vertex subsets `S` with `[u in S] * |S n N(u)| = k (mod p)` for all
    /// `u in U`, split by parity of `|S|`.
    pub report: ParityReport,
}

/// Exploratory enumeration for the vertex neighbourhood polynomial. Nothing
/// is asserted.
pub fn neighborhood_survey<W: Residue>(
    graph: &Graph,
    subset: &[usize],
    k: FieldElement<W>,
) -> Result<NeighborhoodReport> {
    if subset.is_empty() {
        return Err(Error::Precondition("U must be nonempty".into()));
    }
    graph.check_vertices(subset)?;
    let p = k.field().modulus();
    let target = k.value().as_u64();
    let n = graph.vertex_count;
    let report = count_boolean::<W>(n, p, SetKind::NonzeroSet, |x| {
        subset.iter().all(|&u| {
            let inside = if x[u].is_one() {
                (0..n)
                    .filter(|&v| x[v].is_one() && graph.adjacent(u, v))
                    .count()
            } else {
                0
            };
            inside as u64 % p == target
        })
    })?;
    Ok(NeighborhoodReport {
        bound_holds: n as u64 > 2 * (p - 1) * subset.len() as u64,
        report,
    })
}

fn check_clique_args(graph: &Graph, d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::Precondition(format!(
            "clique size must be at least 2, got {d}"
        )));
    }
    if graph.vertex_count > MAX_CLIQUE_VERTICES {
        return Err(Error::BudgetExceeded {
            needed: 1u64
                .checked_shl(graph.vertex_count as u32)
                .unwrap_or(u64::MAX),
            budget: 1 << MAX_CLIQUE_VERTICES,
        });
    }
    Ok(())
}

/// Vertex masks of all `d`-cliques.
pub fn cliques(graph: &Graph, d: usize) -> Result<Vec<u64>> {
    check_clique_args(graph, d)?;
    Ok((0u64..1 << graph.vertex_count)
        .filter(|m| m.count_ones() as usize == d && graph.is_clique(*m))
        .collect())
}

/// `K(I)`: number of `d`-cliques containing every vertex of `subset`.
pub fn clique_count_containing(graph: &Graph, d: usize, subset: &[usize]) -> Result<u64> {
    check_clique_args(graph, d)?;
    let need = graph.check_vertices(subset)?;
    Ok((0u64..1 << graph.vertex_count)
        .filter(|m| m.count_ones() as usize == d && m & need == need && graph.is_clique(*m))
        .count() as u64)
}

/// Number of `d`-cliques meeting `subset`, by direct enumeration.
pub fn cliques_intersecting(graph: &Graph, d: usize, subset: &[usize]) -> Result<u64> {
    let mask = graph.check_vertices(subset)?;
    Ok(cliques(graph, d)?
        .into_iter()
        .filter(|c| c & mask != 0)
        .count() as u64)
}

/// `K(I)` for every nonempty `I` with `K(I) > 0`, keyed by sorted vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueStats {
    pub d: usize,
    pub counts: BTreeMap<Vec<usize>, u64>,
}

impl CliqueStats {
    pub fn get(&self, subset: &[usize]) -> u64 {
        let mut key = subset.to_vec();
        key.sort_unstable();
        self.counts.get(&key).copied().unwrap_or(0)
    }

    /// `sum_{I nonempty, I in U} (-1)^(|I|+1) K(I)`.
    pub fn inclusion_exclusion(&self, subset: &[usize]) -> i64 {
        self.counts
            .iter()
            .filter(|(i, _)| i.iter().all(|v| subset.contains(v)))
            .map(|(i, &k)| {
                if i.len() % 2 == 1 {
                    k as i64
                } else {
                    -(k as i64)
                }
            })
            .sum()
    }
}

pub fn clique_stats(graph: &Graph, d: usize) -> Result<CliqueStats> {
    let mut counts: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for c in cliques(graph, d)? {
        // every nonempty submask of the clique
        let mut sub = c;
        while sub != 0 {
            *counts.entry(mask_to_vertices(sub)).or_default() += 1;
            sub = (sub - 1) & c;
        }
    }
    Ok(CliqueStats { d, counts })
}

/// `1 - (sum_{I != {}} (-1)^(|I|+1) K(I) prod_{i in I} x_i - k)^(p-1)`: on the
/// indicator of `U` it is 1 exactly when the number of `d`-cliques meeting
/// `U` is `k (mod p)`.
pub fn clique_intersection_poly<W: Residue>(
    graph: &Graph,
    d: usize,
    k: FieldElement<W>,
) -> Result<Polynomial<W>> {
    let stats = clique_stats(graph, d)?;
    let field = k.field();
    let n = graph.vertex_count;
    let mut sum = Polynomial::zero(field, n);
    for (i, &count) in &stats.counts {
        let mut e = vec![0u32; n];
        for &v in i {
            e[v] = 1;
        }
        let c = if i.len() % 2 == 1 {
            count as i64
        } else {
            -(count as i64)
        };
        sum = &sum + &Polynomial::monomial(field, ExponentVector::new(e), c);
    }
    Ok(indicator_of(&sum, k))
}

/// Vertex subsets `U` (including the empty one) whose number of meeting
/// `d`-cliques is `k (mod p)`, split by parity of `|U|`.
pub fn clique_subset_parity<W: Residue>(
    graph: &Graph,
    d: usize,
    k: FieldElement<W>,
) -> Result<ParityReport> {
    let cs = cliques(graph, d)?;
    let p = k.field().modulus();
    let target = k.value().as_u64();
    count_boolean::<W>(graph.vertex_count, p, SetKind::NonzeroSet, |x| {
        let mask = x
            .iter()
            .enumerate()
            .filter(|(_, b)| b.is_one())
            .fold(0u64, |m, (v, _)| m | 1 << v);
        cs.iter().filter(|&&c| c & mask != 0).count() as u64 % p == target
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueSubset {
    /// 0-based vertex indices, ascending.
    pub vertices: Vec<usize>,
    /// Number of `d`-cliques meeting the subset.
    pub intersecting: u64,
}

fn for_each_combination(n: usize, size: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if !visit(&idx) {
            return false;
        }
        let Some(i) = (0..size).rev().find(|&i| idx[i] < n - size + i) else {
            return true;
        };
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// When `|V| > d(p-1)`, finds a nonempty `U` meeting a multiple of `p`
/// `d`-cliques. Subsets are tried by size, then lexicographically. `None`
/// would contradict the guarantee.
pub fn prop62_search<W: Residue>(
    graph: &Graph,
    d: usize,
    field: PrimeField<W>,
    budget: u64,
) -> Result<Option<CliqueSubset>> {
    let n = graph.vertex_count;
    let p = field.modulus();
    if n as u64 <= d as u64 * (p - 1) {
        return Err(Error::Precondition(format!(
            "need |V| > d(p-1), got {n} <= {}",
            d as u64 * (p - 1)
        )));
    }
    check_budget(2, n, budget)?;
    let cs = cliques(graph, d)?;
    let mut found = None;
    for size in 1..=n {
        let done = !for_each_combination(n, size, |vs| {
            let mask = vs.iter().fold(0u64, |m, &v| m | 1 << v);
            let count = cs.iter().filter(|&&c| c & mask != 0).count() as u64;
            if count.is_multiple_of(p) {
                found = Some(CliqueSubset {
                    vertices: vs.to_vec(),
                    intersecting: count,
                });
                return false;
            }
            true
        });
        if done {
            break;
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{for_each_boolean_point, DEFAULT_BUDGET};
    use crate::random::random_graph;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn field(p: u64) -> PrimeField<u32> {
        PrimeField::new(p).unwrap()
    }

    fn triangle() -> Graph {
        Graph::complete(3)
    }

    fn points_where_one(f: &Polynomial<u32>) -> Vec<u64> {
        let mut out = Vec::new();
        for_each_boolean_point::<u32>(f.arity(), |x, _| {
            let v = f.eval_raw(x);
            assert!(v <= 1);
            if v == 1 {
                out.push(
                    x.iter()
                        .enumerate()
                        .fold(0u64, |m, (i, &b)| m | (b as u64) << i),
                );
            }
        });
        out
    }

    #[test]
    fn graph_file_format() {
        let g = Graph::parse("n=4\n1 2\n3 2\n# c\n\n1 3\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.vertex_count(), 4);
        assert!(matches!(Graph::parse("n=2\n1 1"), Err(Error::Format(_))));
        assert!(matches!(
            Graph::parse("n=2\n1 2\n2 1"),
            Err(Error::Format(_))
        ));
        assert!(matches!(Graph::parse("n=2\n1 3"), Err(Error::Format(_))));
        assert!(matches!(Graph::parse("4\n1 2"), Err(Error::Format(_))));
        assert!(matches!(Graph::parse("n=2\n0 1"), Err(Error::Format(_))));
        let g = Graph::complete(5);
        for e in 0..g.edge_count() {
            assert_eq!((0..5).map(|v| g.incidence(v, e) as u32).sum::<u32>(), 2);
        }
    }

    #[test]
    fn degree_poly_examples() {
        let f2 = field(2);
        let single = Graph::new(2, vec![(0, 1)]).unwrap();
        let f = degree_subset_poly(&single, f2.element(0), None).unwrap();
        assert_eq!((f.eval_raw(&[0]), f.eval_raw(&[1])), (1, 0));
        let f = degree_subset_poly(&triangle(), f2.element(0), None).unwrap();
        assert_eq!(points_where_one(&f), vec![0, 0b111]);
        let edgeless = Graph::new(3, vec![]).unwrap();
        assert!(matches!(
            degree_subset_poly(&edgeless, f2.element(0), None),
            Err(Error::Precondition(_))
        ));
        let f = degree_subset_poly(&Graph::complete(4), field(3).element(0), None).unwrap();
        assert_eq!(f.eval_raw(&[0; 6]), 1);
    }

    #[test]
    fn theorem9_examples() {
        let f2 = field(2);
        let r = theorem9_check(&Graph::complete(4), f2.element(0), None).unwrap();
        assert!(r.bound_holds);
        assert_eq!((r.report.even_count, r.report.odd_count), (4, 4));
        assert_eq!(r.holds, Some(true));

        let r = theorem9_check(&triangle(), f2.element(0), None).unwrap();
        assert!(!r.bound_holds);
        assert_eq!(
            (r.report.even_count, r.report.odd_count, r.holds),
            (1, 1, None)
        );

        assert!(matches!(
            theorem9_check(&Graph::new(2, vec![]).unwrap(), f2.element(0), None),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn theorem9_polynomial_and_enumeration_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        for _ in 0..30 {
            let p = [2u64, 3][rng.gen_range(0..2)];
            let fp = field(p);
            let g = {
                let nv = rng.gen_range(2..=4);
                random_graph(&mut rng, nv, 0.7)
            };
            if g.edge_count() == 0 {
                continue;
            }
            let k = fp.element(rng.gen_range(0..p as i64));
            let f = degree_subset_poly(&g, k, None).unwrap();
            let ones = points_where_one(&f);
            let even = ones.iter().filter(|m| m.count_ones() % 2 == 0).count() as u64;
            let r = theorem9_check(&g, k, None).unwrap();
            assert_eq!(
                (r.report.even_count, r.report.odd_count),
                (even, ones.len() as u64 - even)
            );
            // restricting to a vertex subset
            let f = degree_subset_poly(&g, k, Some(&[0])).unwrap();
            let r = theorem9_check(&g, k, Some(&[0])).unwrap();
            assert_eq!(
                points_where_one(&f).len() as u64,
                r.report.even_count + r.report.odd_count
            );
        }
    }

    #[test]
    fn theorem9_sweep() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        let mut asserted = 0;
        for _ in 0..200 {
            let p = [2u64, 3][rng.gen_range(0..2)];
            let g = {
                let nv = rng.gen_range(3..=6);
                random_graph(&mut rng, nv, 0.8)
            };
            if g.edge_count() == 0 || g.edge_count() > 14 {
                continue;
            }
            let k = field(p).element(rng.gen_range(0..p as i64));
            let r = theorem9_check(&g, k, None).unwrap();
            assert_ne!(r.holds, Some(false), "{g:?}");
            asserted += r.holds.is_some() as u32;
        }
        assert!(asserted > 20);
    }

    #[test]
    fn neighborhood_examples() {
        let f2 = field(2);
        let path = Graph::new(2, vec![(0, 1)]).unwrap();
        let f = vertex_neighborhood_poly(&path, &[0], f2.element(1)).unwrap();
        assert_eq!(points_where_one(&f), vec![0b11]);
        let f = vertex_neighborhood_poly(&path, &[0], f2.element(0)).unwrap();
        assert_eq!(f.eval_raw(&[0, 0]), 1);
        let edgeless = Graph::new(3, vec![]).unwrap();
        let f = vertex_neighborhood_poly(&edgeless, &[0, 1, 2], f2.element(0)).unwrap();
        assert_eq!(points_where_one(&f).len(), 8);
        assert!(matches!(
            vertex_neighborhood_poly(&path, &[], f2.element(0)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn neighborhood_poly_matches_survey() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..30 {
            let p = [2u64, 3][rng.gen_range(0..2)];
            let g = {
                let nv = rng.gen_range(2..=5);
                random_graph(&mut rng, nv, 0.5)
            };
            let u = vec![rng.gen_range(0..g.vertex_count())];
            let k = field(p).element(rng.gen_range(0..p as i64));
            let f = vertex_neighborhood_poly(&g, &u, k).unwrap();
            let r = neighborhood_survey(&g, &u, k).unwrap();
            assert_eq!(
                points_where_one(&f).len() as u64,
                r.report.even_count + r.report.odd_count
            );
        }
    }

    #[test]
    fn clique_counts() {
        let t = triangle();
        assert_eq!(clique_count_containing(&t, 3, &[0]), Ok(1));
        assert_eq!(clique_count_containing(&t, 3, &[0, 1, 2]), Ok(1));
        let path = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(clique_count_containing(&path, 2, &[0, 2]), Ok(0));
        assert_eq!(clique_count_containing(&Graph::complete(4), 3, &[]), Ok(4));
        assert!(matches!(
            clique_count_containing(&t, 1, &[]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            clique_count_containing(&Graph::complete(17), 3, &[]),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn clique_poly_examples() {
        let f2 = field(2);
        let f = clique_intersection_poly(&triangle(), 3, f2.element(0)).unwrap();
        assert_eq!(points_where_one(&f), vec![0]);
        for k in 0..2 {
            let f = clique_intersection_poly(&Graph::new(4, vec![]).unwrap(), 3, f2.element(k))
                .unwrap();
            assert!(f.is_constant());
            assert_eq!(f.eval_raw(&[0; 4]), if k == 0 { 1 } else { 0 });
        }
        let f = clique_intersection_poly(&Graph::complete(4), 3, f2.element(1)).unwrap();
        assert_eq!(f.eval_raw(&[1, 0, 0, 0]), 1);
    }

    #[test]
    fn inclusion_exclusion_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(54);
        for _ in 0..40 {
            let g = {
                let nv = rng.gen_range(3..=8);
                random_graph(&mut rng, nv, 0.6)
            };
            for d in [3, 4] {
                let stats = clique_stats(&g, d).unwrap();
                for (i, &k) in &stats.counts {
                    assert_eq!(clique_count_containing(&g, d, i).unwrap(), k);
                }
                for mask in 0u64..1 << g.vertex_count() {
                    if mask.count_ones() > 4 {
                        continue;
                    }
                    let u = mask_to_vertices(mask);
                    assert_eq!(
                        stats.inclusion_exclusion(&u),
                        cliques_intersecting(&g, d, &u).unwrap() as i64
                    );
                }
            }
        }
    }

    #[test]
    fn clique_poly_is_an_indicator() {
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        for _ in 0..20 {
            let p = [2u64, 3][rng.gen_range(0..2)];
            let g = {
                let nv = rng.gen_range(3..=6);
                random_graph(&mut rng, nv, 0.6)
            };
            let k = field(p).element(rng.gen_range(0..p as i64));
            let f = clique_intersection_poly(&g, 3, k).unwrap();
            let ones = points_where_one(&f);
            let r = clique_subset_parity(&g, 3, k).unwrap();
            assert_eq!(ones.len() as u64, r.even_count + r.odd_count);
            for m in ones {
                let count = cliques_intersecting(&g, 3, &mask_to_vertices(m)).unwrap();
                assert_eq!(count % p, k.value() as u64);
            }
        }
    }

    #[test]
    fn clique_subset_parity_balance() {
        let mut rng = ChaCha8Rng::seed_from_u64(56);
        for _ in 0..60 {
            let p = [2u64, 3][rng.gen_range(0..2)];
            let d = 3;
            let g = {
                let nv = rng.gen_range(3..=9);
                random_graph(&mut rng, nv, 0.6)
            };
            if g.vertex_count() as u64 <= d * (p - 1) {
                continue;
            }
            let r = clique_subset_parity(&g, d as usize, field(p).element(0)).unwrap();
            assert!(r.balanced_mod_p(), "{g:?}");
        }
    }

    #[test]
    fn prop62_examples() {
        let f2 = field(2);
        let g = Graph::new(4, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let u = prop62_search(&g, 3, f2, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(
            u,
            CliqueSubset {
                vertices: vec![3],
                intersecting: 0
            }
        );
        let u = prop62_search(&Graph::new(4, vec![]).unwrap(), 3, f2, DEFAULT_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(
            u,
            CliqueSubset {
                vertices: vec![0],
                intersecting: 0
            }
        );
        let u = prop62_search(&Graph::complete(4), 3, f2, DEFAULT_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(
            u,
            CliqueSubset {
                vertices: vec![0, 1],
                intersecting: 4
            }
        );
        assert!(matches!(
            prop62_search(&triangle(), 3, f2, DEFAULT_BUDGET),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn combinations_in_lexicographic_order() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| {
            seen.push(c.to_vec());
            true
        });
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
