use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cnss::chevalley::{self, PolySystem};
use cnss::cnss::{find_witness, generalized_hypothesis, supp, supp_maximal};
use cnss::enumerate::{check_budget, for_each_boolean_point, for_each_point, DEFAULT_BUDGET};
use cnss::exclusion::{self, BooleanPoint};
use cnss::graph::{self, Graph};
use cnss::parity::{self, ParityReport};
use cnss::report::{Report, Status};
use cnss::{verify, Element, Error, Fp, Grid, Poly, Result, System};

const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Parser)]
#[command(
    name = "cnss",
    version,
    about = "Polynomials over F_p and brute-force checks of Nullstellensatz counting theorems"
)]
struct Cli {
    /// Prime modulus.
    #[arg(short = 'p', global = true)]
    p: Option<u64>,
    /// Number of variables.
    #[arg(short = 'n', global = true)]
    n: Option<usize>,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized corpora.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Maximum number of points any enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a polynomial at a point.
    Eval {
        expr: String,
        /// Comma-separated residues.
        #[arg(long)]
        at: String,
    },
    /// Evaluation-preserving exponent reduction.
    Reduce {
        expr: String,
        #[arg(long, value_enum, default_value_t = ReduceMode::Field)]
        mode: ReduceMode,
    },
    /// Support of a polynomial, or its maximal elements.
    Supp {
        expr: String,
        #[arg(long)]
        maximal: bool,
    },
    /// First nonzero value on a grid (default: all of F_p^n).
    Witness {
        expr: String,
        /// Sets separated by `;`, residues by `,`, e.g. `0,1;0,1`.
        #[arg(long, conflicts_with = "grid_file")]
        grid: Option<String>,
        /// Grid file with one comma-separated set per line.
        #[arg(long)]
        grid_file: Option<PathBuf>,
    },
    /// Build an exclusion polynomial and check its value table.
    Exclude {
        #[arg(long, value_enum)]
        kind: ExcludeKind,
        /// Polynomial to exclude from (kind `point`).
        expr: Option<String>,
        /// Point to exclude (kind `point`).
        #[arg(long)]
        at: Option<String>,
        /// Boolean point, e.g. `1,0,1` (kinds `boolean` and `subset`).
        #[arg(long)]
        bits: Option<String>,
    },
    /// Common-root counts of polynomial systems.
    Chevalley {
        #[command(subcommand)]
        action: ChevalleyCmd,
    },
    /// Parity of Boolean supports.
    Parity {
        #[command(subcommand)]
        action: ParityCmd,
    },
    /// Graph constructions.
    Graph {
        #[command(subcommand)]
        action: GraphCmd,
    },
    /// Run the full randomized property suite.
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceMode {
    Field,
    Boolean,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExcludeKind {
    Point,
    Boolean,
    Subset,
    Axis,
    Inverse,
}

#[derive(Subcommand)]
enum ChevalleyCmd {
    /// Exact number of common roots.
    Count {
        #[arg(long)]
        system: PathBuf,
    },
    /// Divisibility by p when the degree sum is below n.
    Warning {
        #[arg(long)]
        system: PathBuf,
        /// Known common root; a second one is reported.
        #[arg(long)]
        root: Option<String>,
    },
    /// +-1/0 classification for degree sum at most n.
    Classify {
        #[arg(long)]
        system: PathBuf,
    },
    /// (-1)^n d prediction from the reduced indicator.
    Predict {
        #[arg(long)]
        system: PathBuf,
    },
}

#[derive(Subcommand)]
enum ParityCmd {
    /// Even/odd balance when f^(p-1) has no full-support term.
    T6 { expr: String },
    /// |S_e| - |S_o| = (-1)^n d (mod p).
    T7 { expr: String },
    /// Single-nonzero-value classification.
    T8 { expr: String },
    /// Balance of Boolean shared roots of a system.
    Corollary {
        #[arg(long)]
        system: PathBuf,
        /// Use the degree-bound form for subsets of an |A|-set.
        #[arg(long)]
        set_size: Option<usize>,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Edge-subset polynomial with every degree = k (mod p).
    DegreePoly {
        #[command(flatten)]
        g: GraphArgs,
    },
    /// Even/odd balance of degree-k edge subsets.
    T9 {
        #[command(flatten)]
        g: GraphArgs,
    },
    /// Vertex neighbourhood polynomial for a subset U.
    Neighborhood {
        #[command(flatten)]
        g: GraphArgs,
    },
    /// Clique counts K(I).
    Cliques {
        #[command(flatten)]
        g: GraphArgs,
    },
    /// Clique-intersection polynomial.
    CliquePoly {
        #[command(flatten)]
        g: GraphArgs,
    },
    /// Nonempty U meeting a multiple of p d-cliques.
    Prop62 {
        #[command(flatten)]
        g: GraphArgs,
    },
}

#[derive(clap::Args)]
struct GraphArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(short = 'k', default_value_t = 0)]
    k: i64,
    /// Clique size.
    #[arg(short = 'd', default_value_t = 3)]
    d: usize,
    /// Vertex subset, 1-based, e.g. `1,3`.
    #[arg(long)]
    subset: Option<String>,
    /// Restrict degree conditions to these vertices (1-based).
    #[arg(long)]
    vertices: Option<String>,
}

struct Ctx {
    p: Option<u64>,
    n: Option<usize>,
    seed: u64,
    budget: u64,
}

impl Ctx {
    fn field(&self) -> Result<Fp> {
        Fp::new(
            self.p
                .ok_or_else(|| Error::Format("missing -p <prime>".into()))?,
        )
    }

    fn arity(&self) -> Result<usize> {
        self.n
            .ok_or_else(|| Error::Format("missing -n <arity>".into()))
    }

    fn poly(&self, expr: &str) -> Result<Poly> {
        Poly::parse(expr, self.field()?, self.arity()?)
    }

    fn inputs(&self, extra: Value) -> Value {
        let mut v = json!({"p": self.p, "n": self.n});
        if let (Value::Object(base), Value::Object(more)) = (&mut v, extra) {
            base.extend(more);
        }
        v
    }
}

fn parse_values(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Format(format!("bad value '{}'", t.trim())))
        })
        .collect()
}

fn parse_point(text: &str, field: Fp) -> Result<Vec<Element>> {
    Ok(parse_values(text)?
        .into_iter()
        .map(|v| field.element(v))
        .collect())
}

fn parse_vertices(text: &str, graph: &Graph) -> Result<Vec<usize>> {
    parse_values(text)?
        .into_iter()
        .map(|v| {
            if v < 1 || v as usize > graph.vertex_count() {
                Err(Error::Format(format!(
                    "vertex {v} outside 1..={}",
                    graph.vertex_count()
                )))
            } else {
                Ok(v as usize - 1)
            }
        })
        .collect()
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn load_system(path: &Path) -> Result<System> {
    PolySystem::parse(&read(path)?)
}

fn residues(point: &[Element]) -> Vec<u32> {
    point.iter().map(|x| x.value()).collect()
}

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn parity_json(r: &ParityReport) -> Value {
    json!({"even_count": r.even_count, "odd_count": r.odd_count, "set_kind": r.set_kind})
}

fn run(cli: Cli) -> Result<Report> {
    let ctx = Ctx {
        p: cli.p,
        n: cli.n,
        seed: cli.seed,
        budget: cli.budget,
    };
    match cli.command {
        Command::Eval { expr, at } => {
            let f = ctx.poly(&expr)?;
            let x = parse_point(&at, f.field())?;
            let v = f.eval(&x)?;
            Ok(Report::new(
                "eval",
                ctx.inputs(json!({"expr": expr, "at": residues(&x)})),
                json!(v.value()),
            ))
        }
        Command::Reduce { expr, mode } => {
            let f = ctx.poly(&expr)?;
            let (g, name) = match mode {
                ReduceMode::Field => (f.reduce_field_map(), "field"),
                ReduceMode::Boolean => (f.reduce_boolean(), "boolean"),
            };
            Ok(Report::new(
                "reduce",
                ctx.inputs(json!({"expr": expr, "mode": name})),
                json!(g.to_string()),
            ))
        }
        Command::Supp { expr, maximal } => {
            let f = ctx.poly(&expr)?;
            let set = if maximal { supp_maximal(&f) } else { supp(&f) };
            let list: Vec<Vec<u32>> = set.iter().rev().map(|e| e.as_slice().to_vec()).collect();
            Ok(Report::new(
                "supp",
                ctx.inputs(json!({"expr": expr, "maximal": maximal})),
                json!(list),
            ))
        }
        Command::Witness {
            expr,
            grid,
            grid_file,
        } => {
            let f = ctx.poly(&expr)?;
            let grid = match (grid, grid_file) {
                (Some(text), _) => Grid::parse(&text, f.field())?,
                (None, Some(path)) => Grid::parse(&read(&path)?, f.field())?,
                (None, None) => Grid::full(f.field(), f.arity()),
            };
            let sizes: u64 = grid.sizes().iter().map(|&s| s as u64).product();
            if sizes > ctx.budget {
                return Err(Error::BudgetExceeded {
                    needed: sizes,
                    budget: ctx.budget,
                });
            }
            let hyp = generalized_hypothesis(&f, &grid);
            let w = find_witness(&f, &grid)?;
            let result = match &w {
                Some(w) => json!({"point": residues(&w.point), "value": w.value.value()}),
                None => json!({"point": null, "value": null}),
            };
            let inputs = ctx.inputs(json!({"expr": expr, "grid": grid.sets()}));
            let mut r = Report::new("witness", inputs, result);
            r.assert(
                "a maximal support element fitting the grid forces a witness",
                Status::from_option(hyp.as_ref().map(|_| w.is_some())),
            );
            if let Some(a) = hyp {
                r = r.with_certificate(json!({"maximal_exponents": a.as_slice()}));
            }
            Ok(r)
        }
        Command::Exclude {
            kind,
            expr,
            at,
            bits,
        } => run_exclude(&ctx, kind, expr, at, bits),
        Command::Chevalley { action } => run_chevalley(&ctx, action),
        Command::Parity { action } => run_parity(&ctx, action),
        Command::Graph { action } => run_graph(&ctx, action),
        Command::Verify => verify::run_suite(ctx.seed, ctx.budget),
    }
}

fn run_exclude(
    ctx: &Ctx,
    kind: ExcludeKind,
    expr: Option<String>,
    at: Option<String>,
    bits: Option<String>,
) -> Result<Report> {
    let field = ctx.field()?;
    let need = |what: &str| Error::Format(format!("missing {what}"));
    match kind {
        ExcludeKind::Point => {
            let expr = expr.ok_or_else(|| need("polynomial expression"))?;
            let f = ctx.poly(&expr)?;
            let c = parse_point(&at.ok_or_else(|| need("--at <point>"))?, field)?;
            let g = exclusion::exclude_point(&f, &c)?;
            check_budget(field.modulus(), f.arity(), ctx.budget)?;
            let (craw, fc) = (residues(&c), f.eval(&c)?.value());
            let mut ok = true;
            for_each_point(field, f.arity(), |x| {
                let want = if x == craw.as_slice() {
                    field.neg(fc)
                } else {
                    0
                };
                ok &= g.eval_raw(x) == want;
            });
            let mut r = Report::new(
                "exclude point",
                ctx.inputs(json!({"expr": expr, "at": craw})),
                json!({"polynomial": g.to_string(), "f_at_c": fc}),
            );
            r.assert("g vanishes off c and g(c) = -f(c)", Status::from_bool(ok));
            Ok(r)
        }
        ExcludeKind::Boolean | ExcludeKind::Subset => {
            let b = BooleanPoint::parse(&bits.ok_or_else(|| need("--bits <0/1 list>"))?)?;
            if let Some(n) = ctx.n {
                if n != b.len() {
                    return Err(Error::ArityMismatch {
                        expected: n,
                        found: b.len(),
                    });
                }
            }
            check_budget(2, b.len(), ctx.budget)?;
            let (g, at_b, name, claim) = if matches!(kind, ExcludeKind::Boolean) {
                (
                    exclusion::exclude_boolean_point(&b, field),
                    field.minus_one(),
                    "exclude boolean",
                    "h(b) = -1 and h = 0 elsewhere on {0,1}^n",
                )
            } else {
                let sign = if (b.len() - b.ones()) % 2 == 0 { 1 } else { -1 };
                (
                    exclusion::exclude_indicator_subset(&b, field),
                    field.from_i64(sign),
                    "exclude subset",
                    "g(b) = (-1)^(n-k) and g = 0 elsewhere on {0,1}^n",
                )
            };
            let target = b.residues::<u32>();
            let mut ok = true;
            for_each_boolean_point::<u32>(b.len(), |x, _| {
                ok &= g.eval_raw(x) == if x == target.as_slice() { at_b } else { 0 };
            });
            let mut r = Report::new(
                name,
                ctx.inputs(json!({"bits": target})),
                json!({"polynomial": g.to_string()}),
            );
            r.assert(claim, Status::from_bool(ok));
            Ok(r)
        }
        ExcludeKind::Axis | ExcludeKind::Inverse => {
            let axis = matches!(kind, ExcludeKind::Axis);
            let g = if axis {
                exclusion::axis_zero_exclusion(field)
            } else {
                exclusion::inverse_pair_exclusion(field)
            };
            let mut ok = true;
            for_each_point(field, 2, |xy| {
                let (x, y) = (xy[0], xy[1]);
                let want = if axis {
                    if x == 0 {
                        y
                    } else if y == 0 {
                        x
                    } else {
                        0
                    }
                } else if field.add(x, y) == 0 {
                    field.mul(x, x)
                } else {
                    0
                };
                ok &= g.eval_raw(xy) == want;
            });
            let (name, claim) = if axis {
                ("exclude axis", "g(x,0) = x, g(0,y) = y, zero elsewhere")
            } else {
                ("exclude inverse", "h(a,-a) = a^2, zero elsewhere")
            };
            let mut r = Report::new(
                name,
                ctx.inputs(json!({})),
                json!({"polynomial": g.to_string()}),
            );
            r.assert(claim, Status::from_bool(ok));
            Ok(r)
        }
    }
}

fn run_chevalley(ctx: &Ctx, action: ChevalleyCmd) -> Result<Report> {
    let (path, name) = match &action {
        ChevalleyCmd::Count { system } => (system, "chevalley count"),
        ChevalleyCmd::Warning { system, .. } => (system, "chevalley warning"),
        ChevalleyCmd::Classify { system } => (system, "chevalley classify"),
        ChevalleyCmd::Predict { system } => (system, "chevalley predict"),
    };
    let sys = load_system(path)?;
    let p = sys.field().modulus();
    let polys: Vec<String> = sys.polys().iter().map(ToString::to_string).collect();
    let inputs = json!({"p": p, "n": sys.arity(), "system": polys, "degree_sum": sys.degree_sum()});
    match action {
        ChevalleyCmd::Count { .. } => {
            let count = chevalley::count_common_roots(&sys, ctx.budget)?;
            Ok(Report::new(
                name,
                inputs,
                json!({"count": count, "residue": count % p}),
            ))
        }
        ChevalleyCmd::Warning { root, .. } => {
            let root = root.map(|r| parse_point(&r, sys.field())).transpose()?;
            let w = chevalley::warning_check(&sys, root.as_deref(), ctx.budget)?;
            let mut r = Report::new(
                name,
                inputs,
                json!({"count": w.count, "residue": w.count % p}),
            );
            r.assert(
                "the number of common roots is a multiple of p",
                Status::from_bool(w.divisible),
            );
            if root.is_some() {
                r.assert(
                    "a second common root exists",
                    Status::from_bool(w.second_root.is_some()),
                );
            }
            if let Some(s) = w.second_root {
                r = r.with_certificate(json!({"second_root": residues(&s)}));
            }
            Ok(r)
        }
        ChevalleyCmd::Classify { .. } => {
            let pred = chevalley::theorem4_classify(&sys)?;
            let count = chevalley::count_common_roots(&sys, ctx.budget)?;
            let mut r = Report::new(
                name,
                inputs,
                json!({"predicted": pred.predicted, "q": pred.certificate, "oracle": count, "oracle_residue": count % p,
                       "single_top_monomial": chevalley::theorem4_exact_top_part(&sys)}),
            );
            r.assert(
                "classification matches the root count mod p",
                Status::from_bool(pred.predicted == count % p),
            );
            Ok(r.with_certificate(json!({"q": pred.certificate})))
        }
        ChevalleyCmd::Predict { .. } => {
            let pred = chevalley::theorem5_predict(&sys);
            let count = chevalley::count_common_roots(&sys, ctx.budget)?;
            let mut r = Report::new(
                name,
                inputs,
                json!({"d": pred.certificate, "predicted": pred.predicted, "oracle": count, "oracle_residue": count % p}),
            );
            r.assert(
                "root count = (-1)^n d (mod p)",
                Status::from_bool(pred.predicted == count % p),
            );
            Ok(r.with_certificate(json!({"d": pred.certificate})))
        }
    }
}

fn run_parity(ctx: &Ctx, action: ParityCmd) -> Result<Report> {
    match action {
        ParityCmd::T6 { expr } => {
            let f = ctx.poly(&expr)?;
            let t = parity::theorem6_check(&f)?;
            let mut r = Report::new(
                "parity t6",
                ctx.inputs(json!({"expr": expr})),
                json!({"hypothesis": t.hypothesis, "hypothesis_after_reduction": t.hypothesis_after_reduction,
                       "nonzero_set": parity_json(&t.nonzero_set), "zero_set": parity_json(&t.zero_set)}),
            );
            let gate = |ok: bool| Status::from_option(t.hypothesis.then_some(ok));
            r.assert(
                "nonzero set: even = odd (mod p)",
                gate(t.nonzero_set.balanced_mod_p()),
            );
            r.assert(
                "zero set: even = odd (mod p)",
                gate(t.zero_set.balanced_mod_p()),
            );
            Ok(r)
        }
        ParityCmd::T7 { expr } => {
            let f = ctx.poly(&expr)?;
            let t = parity::theorem7_predict(&f)?;
            let mut r = Report::new(
                "parity t7",
                ctx.inputs(json!({"expr": expr})),
                json!({"d": t.d, "predicted": t.predicted, "field_map_coefficient": t.field_map_coefficient,
                       "nonzero_set": parity_json(&t.report), "difference": t.report.difference_mod_p()}),
            );
            r.assert(
                "|S_e| - |S_o| = (-1)^n d (mod p)",
                Status::from_bool(t.holds),
            );
            Ok(r.with_certificate(json!({"d": t.d})))
        }
        ParityCmd::T8 { expr } => {
            let f = ctx.poly(&expr)?;
            let t = parity::theorem8_analyze(&f, ctx.budget)?;
            let unique = t
                .unique
                .as_ref()
                .map(|(x, d)| json!({"point": residues(x), "value": d.value()}));
            let mut r = Report::new(
                "parity t8",
                ctx.inputs(json!({"expr": expr})),
                json!({"nonzero_count": t.nonzero_count, "has_top_term": t.has_top_term,
                       "top_coefficient": t.top_coefficient, "unique": unique}),
            );
            r.assert(
                "no prod x_i^(p-1) term implies at least two nonzero values",
                Status::from_option(t.multiple_values),
            );
            r.assert(
                "a single nonzero value d forces top coefficient d(-1)^n",
                Status::from_option(t.coefficient_law),
            );
            Ok(r)
        }
        ParityCmd::Corollary { system, set_size } => {
            let sys = load_system(&system)?;
            let c = match set_size {
                Some(size) => parity::corollary_subset_parity(&sys, size)?,
                None => parity::corollary_shared_roots_parity(&sys)?,
            };
            let polys: Vec<String> = sys.polys().iter().map(ToString::to_string).collect();
            let mut r = Report::new(
                "parity corollary",
                json!({"p": sys.field().modulus(), "n": sys.arity(), "system": polys, "set_size": set_size}),
                json!({"applicable": c.applicable, "shared_roots": parity_json(&c.report)}),
            );
            r.assert(
                "Boolean shared roots: even = odd (mod p)",
                Status::from_option(c.holds),
            );
            Ok(r)
        }
    }
}

fn run_graph(ctx: &Ctx, action: GraphCmd) -> Result<Report> {
    let (args, name) = match &action {
        GraphCmd::DegreePoly { g } => (g, "graph degree-poly"),
        GraphCmd::T9 { g } => (g, "graph t9"),
        GraphCmd::Neighborhood { g } => (g, "graph neighborhood"),
        GraphCmd::Cliques { g } => (g, "graph cliques"),
        GraphCmd::CliquePoly { g } => (g, "graph clique-poly"),
        GraphCmd::Prop62 { g } => (g, "graph prop62"),
    };
    let graph = Graph::parse(&read(&args.graph)?)?;
    let field = ctx.field()?;
    let k = field.element(args.k);
    let subset = args
        .subset
        .as_deref()
        .map(|s| parse_vertices(s, &graph))
        .transpose()?;
    let vertices = args
        .vertices
        .as_deref()
        .map(|s| parse_vertices(s, &graph))
        .transpose()?;
    let edges: Vec<(usize, usize)> = graph.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect();
    let inputs = json!({"p": field.modulus(), "k": k.value(), "d": args.d, "vertex_count": graph.vertex_count(),
                        "edges": edges, "subset": subset.as_deref().map(one_based),
                        "vertices": vertices.as_deref().map(one_based)});
    match action {
        GraphCmd::DegreePoly { .. } => {
            let f = graph::degree_subset_poly(&graph, k, vertices.as_deref())?;
            Ok(Report::new(
                name,
                inputs,
                json!({"arity": f.arity(), "polynomial": f.to_string()}),
            ))
        }
        GraphCmd::T9 { .. } => {
            let t = graph::theorem9_check(&graph, k, vertices.as_deref())?;
            let mut r = Report::new(
                name,
                inputs,
                json!({"bound_holds": t.bound_holds, "subsets": parity_json(&t.report)}),
            );
            r.assert(
                "|V|(p-1) < |E| implies even = odd (mod p)",
                Status::from_option(t.holds),
            );
            Ok(r)
        }
        GraphCmd::Neighborhood { .. } => {
            let u = subset.ok_or_else(|| Error::Format("missing --subset".into()))?;
            let f = graph::vertex_neighborhood_poly(&graph, &u, k)?;
            let s = graph::neighborhood_survey(&graph, &u, k)?;
            Ok(Report::new(
                name,
                inputs,
                json!({"polynomial": f.to_string(), "bound_holds": s.bound_holds, "subsets": parity_json(&s.report)}),
            ))
        }
        GraphCmd::Cliques { .. } => {
            let stats = graph::clique_stats(&graph, args.d)?;
            let counts: Vec<Value> = stats
                .counts
                .iter()
                .map(|(i, c)| json!({"subset": one_based(i), "count": c}))
                .collect();
            let mut result = json!({"counts": counts});
            if let Some(u) = &subset {
                result["containing"] = json!(graph::clique_count_containing(&graph, args.d, u)?);
                result["intersecting"] = json!(graph::cliques_intersecting(&graph, args.d, u)?);
                result["inclusion_exclusion"] = json!(stats.inclusion_exclusion(u));
            }
            let mut r = Report::new(name, inputs, result.clone());
            if subset.is_some() {
                r.assert(
                    "inclusion-exclusion over K(I) counts cliques meeting U",
                    Status::from_bool(result["intersecting"] == result["inclusion_exclusion"]),
                );
            }
            Ok(r)
        }
        GraphCmd::CliquePoly { .. } => {
            let f = graph::clique_intersection_poly(&graph, args.d, k)?;
            Ok(Report::new(
                name,
                inputs,
                json!({"arity": f.arity(), "polynomial": f.to_string()}),
            ))
        }
        GraphCmd::Prop62 { .. } => {
            let found = graph::prop62_search(&graph, args.d, field, ctx.budget)?;
            let result = match &found {
                Some(u) => {
                    json!({"subset": one_based(&u.vertices), "intersecting": u.intersecting})
                }
                None => json!({"subset": null}),
            };
            let mut r = Report::new(name, inputs, result.clone());
            r.assert(
                "a nonempty U meets a multiple of p d-cliques",
                Status::from_bool(found.is_some()),
            );
            if found.is_some() {
                r = r.with_certificate(result);
            }
            Ok(r)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(report) => {
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
