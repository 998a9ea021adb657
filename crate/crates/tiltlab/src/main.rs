//! Command-line interface over the tiltlab library.
//!
//! Exit codes: 0 success, 1 validation failure, 2 computational error
//! (caps exceeded, inputs outside the supported class), 3 I/O or syntax
//! error. Vectors on the command line are comma-separated integers in the
//! vertex order of the algebra file. Identical inputs and seed produce
//! byte-identical output.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use tiltlab::algebra::{self, BoundQuiverAlgebra};
use tiltlab::error::{Error, Result};
use tiltlab::forms;
use tiltlab::linalg::{IntMatrix, IntVec};
use tiltlab::mutation;
use tiltlab::reflect;
use tiltlab::rep;
use tiltlab::roots;

#[derive(Parser)]
#[command(name = "tiltlab", version, about = "exact computations with bound quiver algebras")]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized isomorphism witnessing
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Override iteration / search caps
    #[arg(long, global = true)]
    cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RootMethod {
    Phi,
    Reflections,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ResKind {
    Projective,
    Injective,
}

#[derive(Subcommand)]
enum Command {
    /// Structural validation report for an algebra file
    Validate { algebra: String },
    /// Print the Cartan matrix
    Cartan { algebra: String },
    /// Print the Coxeter transformation and its order
    Coxeter { algebra: String },
    /// Euler pairing ⟨x, y⟩, or q(x) when y is omitted
    Euler {
        algebra: String,
        #[arg(long, short = 'x')]
        x: String,
        #[arg(long, short = 'y')]
        y: Option<String>,
    },
    /// Tits form of a vector (requires global dimension <= 2)
    Tits {
        algebra: String,
        #[arg(long, short = 'x')]
        x: String,
    },
    /// Enumerate the cluster-roots
    ClusterRoots {
        algebra: String,
        #[arg(long, value_enum, default_value_t = RootMethod::Phi)]
        method: RootMethod,
    },
    /// All positive roots inside the box 0 <= x_i <= bound
    PositiveRoots {
        algebra: String,
        #[arg(long)]
        bound: i64,
    },
    /// Root / Φ-positivity / sign-coherence classification of a vector
    Classify {
        algebra: String,
        #[arg(long, short = 'x')]
        x: String,
    },
    /// Compare cluster-roots with Φ-positive roots inside a box
    CheckConjecture {
        algebra: String,
        #[arg(long)]
        bound: i64,
    },
    /// APR tilt σ_k at a sink (or σ_k^- at a source with --inverse)
    Mutate {
        algebra: String,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Iterate σ_1, ..., σ_l and check the rotation Λ^{l+1} ≅ Λ
    TiltSequence { algebra: String },
    /// Apply the reflection functor at a vertex to a representation file
    Reflect {
        algebra: String,
        rep: String,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Apply the Coxeter functor C^+ (or C^- with --inverse)
    CoxeterFunctor {
        algebra: String,
        rep: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Apply τ_n (or τ_n^- with --inverse)
    Tau {
        algebra: String,
        rep: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Minimal projective or injective resolution of P_k, I_k or S_k
    Resolve {
        algebra: String,
        #[arg(long)]
        module: String,
        #[arg(long, value_enum)]
        kind: ResKind,
    },
    /// Global dimension
    Gldim { algebra: String },
    /// Build M = ⊕ τ_n^{-i}(Λ) and check the Ext-vanishing conditions
    VerifyNrf { algebra: String },
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}

fn load_algebra(path: &str) -> Result<BoundQuiverAlgebra> {
    let text = std::fs::read_to_string(path)?;
    algebra::parse_algebra(&text)
}

fn parse_vector(alg: &BoundQuiverAlgebra, s: &str) -> Result<IntVec> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != alg.vertex_count() {
        return Err(Error::validation(format!(
            "vector has {} entries, the algebra has {} vertices",
            parts.len(),
            alg.vertex_count()
        )));
    }
    parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::syntax(format!("bad integer {p:?}")))
        })
        .collect()
}

fn fmt_matrix(m: &IntMatrix) -> String {
    let width = (0..m.rows)
        .flat_map(|i| (0..m.cols).map(move |j| (i, j)))
        .map(|(i, j)| m[(i, j)].to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for i in 0..m.rows {
        out.push_str("  ");
        for j in 0..m.cols {
            let _ = write!(out, "{:>width$} ", m[(i, j)].to_string());
        }
        out.push('\n');
    }
    out
}

fn matrix_json(m: &IntMatrix) -> serde_json::Value {
    let rows: Vec<Vec<String>> = (0..m.rows)
        .map(|i| (0..m.cols).map(|j| m[(i, j)].to_string()).collect())
        .collect();
    json!(rows)
}

fn vec_json(v: &[BigInt]) -> serde_json::Value {
    json!(v.iter().map(|x| x.to_string()).collect::<Vec<_>>())
}

fn fmt_vec(v: &[BigInt]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(", "))
}

fn roots_json(roots: &[IntVec]) -> serde_json::Value {
    json!(roots.iter().map(|r| vec_json(r)).collect::<Vec<_>>())
}

fn print_roots(roots: &[IntVec]) {
    for r in roots {
        println!("{}", fmt_vec(r));
    }
}

fn vertex_of(alg: &BoundQuiverAlgebra, label: &str) -> Result<usize> {
    alg.quiver.vertex_index(label)
}

fn run(cli: &Cli) -> Result<i32> {
    let order_cap = cli.cap.unwrap_or(forms::DEFAULT_ORDER_CAP);
    let node_cap = cli.cap.unwrap_or(roots::DEFAULT_NODE_CAP);
    match &cli.command {
        Command::Validate { algebra: path } => {
            let alg = load_algebra(path)?;
            let report = algebra::validate(&alg);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                println!("acyclic:             {}", report.acyclic);
                println!("connected:           {}", report.connected);
                println!("relations in J^2:    {}", report.relations_in_j2);
                println!("relations minimal:   {}", report.relations_minimal);
                println!("labeling admissible: {}", report.labeling_admissible);
                println!("admissible order:    {}", report.admissible_order.join(" "));
            }
            Ok(if report.all_ok() { 0 } else { 1 })
        }
        Command::Cartan { algebra: path } => {
            let alg = load_algebra(path)?;
            if cli.json {
                println!("{}", json!({ "cartan": matrix_json(alg.cartan()) }));
            } else {
                println!("Cartan matrix (column j = dim P_j):");
                print!("{}", fmt_matrix(alg.cartan()));
            }
            Ok(0)
        }
        Command::Coxeter { algebra: path } => {
            let alg = load_algebra(path)?;
            let cox = forms::coxeter_with_cap(&alg, order_cap)?;
            if cli.json {
                println!(
                    "{}",
                    json!({ "phi": matrix_json(&cox.phi), "order": cox.order })
                );
            } else {
                println!("Coxeter transformation Φ = (-1)^n C^t C^{{-1}}:");
                print!("{}", fmt_matrix(&cox.phi));
                println!("order: {}", cox.order);
            }
            Ok(0)
        }
        Command::Euler { algebra: path, x, y } => {
            let alg = load_algebra(path)?;
            let xv = parse_vector(&alg, x)?;
            let form = forms::EulerForm::new(&alg);
            let (value, what) = match y {
                Some(y) => (form.pairing(&xv, &parse_vector(&alg, y)?), "pairing"),
                None => (form.q(&xv), "q"),
            };
            if cli.json {
                println!("{}", json!({ what: value.to_string() }));
            } else {
                println!("{value}");
            }
            Ok(0)
        }
        Command::Tits { algebra: path, x } => {
            let alg = load_algebra(path)?;
            let xv = parse_vector(&alg, x)?;
            let value = forms::tits_form(&alg, &xv)?;
            if cli.json {
                println!("{}", json!({ "tits": value.to_string() }));
            } else {
                println!("{value}");
            }
            Ok(0)
        }
        Command::ClusterRoots { algebra: path, method } => {
            let alg = load_algebra(path)?;
            let (phi_roots, refl_roots) = match method {
                RootMethod::Phi => {
                    let cox = forms::coxeter_with_cap(&alg, order_cap)?;
                    (Some(roots::cluster_roots_phi(&alg, &cox)?), None)
                }
                RootMethod::Reflections => {
                    (None, Some(roots::cluster_roots_reflections(&alg)?))
                }
                RootMethod::Both => {
                    let cox = forms::coxeter_with_cap(&alg, order_cap)?;
                    (
                        Some(roots::cluster_roots_phi(&alg, &cox)?),
                        Some(roots::cluster_roots_reflections(&alg)?),
                    )
                }
            };
            let all = phi_roots
                .as_ref()
                .map(|t| t.all_roots.clone())
                .or_else(|| refl_roots.clone())
                .expect("one method ran");
            let agree = match (&phi_roots, &refl_roots) {
                (Some(t), Some(r)) => Some(t.all_roots == *r),
                _ => None,
            };
            if cli.json {
                let mut obj = serde_json::Map::new();
                obj.insert("roots".into(), roots_json(&all));
                obj.insert("count".into(), json!(all.len()));
                if let Some(t) = &phi_roots {
                    obj.insert(
                        "sigma".into(),
                        json!(t
                            .sigma
                            .iter()
                            .map(|&j| alg.quiver.vertices[j].clone())
                            .collect::<Vec<_>>()),
                    );
                    obj.insert("exponents".into(), json!(t.exponents));
                }
                if let Some(a) = agree {
                    obj.insert("methods_agree".into(), json!(a));
                }
                println!("{}", serde_json::Value::Object(obj));
            } else {
                println!("cluster-roots ({}):", all.len());
                print_roots(&all);
                if let Some(t) = &phi_roots {
                    let sigma: Vec<String> = t
                        .sigma
                        .iter()
                        .enumerate()
                        .map(|(i, &j)| {
                            format!(
                                "{}->{}",
                                alg.quiver.vertices[i], alg.quiver.vertices[j]
                            )
                        })
                        .collect();
                    println!("sigma: {}", sigma.join(" "));
                    let ms: Vec<String> =
                        t.exponents.iter().map(|m| m.to_string()).collect();
                    println!("exponents m_i: {}", ms.join(" "));
                }
                if let Some(a) = agree {
                    println!("methods agree: {a}");
                }
            }
            if agree == Some(false) {
                return Err(Error::computation(
                    "the two cluster-root enumerations disagree",
                ));
            }
            Ok(0)
        }
        Command::PositiveRoots { algebra: path, bound } => {
            let alg = load_algebra(path)?;
            let rs = roots::positive_roots(&alg, *bound, node_cap)?;
            if cli.json {
                println!(
                    "{}",
                    json!({ "bound": bound, "count": rs.len(), "roots": roots_json(&rs),
                            "note": "complete within the box only" })
                );
            } else {
                println!("positive roots with 0 <= x_i <= {bound} ({}):", rs.len());
                print_roots(&rs);
                println!("(complete within the box only)");
            }
            Ok(0)
        }
        Command::Classify { algebra: path, x } => {
            let alg = load_algebra(path)?;
            let xv = parse_vector(&alg, x)?;
            let cox = forms::coxeter_with_cap(&alg, order_cap)?;
            let c = roots::classify(&alg, &cox, &xv);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&c).expect("serializable"));
            } else {
                println!("root:            {}", c.is_root);
                println!("Φ-positive:      {}", c.phi_positive);
                println!("Φ-nonpositive:   {}", c.phi_nonpositive);
                println!("Φ-sign-coherent: {}", c.sign_coherent);
                if let Some(m) = c.witness {
                    println!("mixed signs at exponent m = {m}");
                }
            }
            Ok(0)
        }
        Command::CheckConjecture { algebra: path, bound } => {
            let alg = load_algebra(path)?;
            let report = roots::check_conjecture(&alg, *bound, node_cap)?;
            if cli.json {
                let mut v = serde_json::to_value(&report).expect("serializable");
                let obj = v.as_object_mut().expect("object");
                obj.insert("cluster_roots".into(), roots_json(&report.cluster_roots));
                obj.insert(
                    "phi_positive_roots".into(),
                    roots_json(&report.phi_positive_roots),
                );
                obj.insert("only_cluster".into(), roots_json(&report.only_cluster));
                obj.insert(
                    "only_phi_positive".into(),
                    roots_json(&report.only_phi_positive),
                );
                println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            } else {
                println!("n = {} (conjecture posed for n = 2)", report.n);
                println!(
                    "cluster-roots: {}   Φ-positive roots in box [0,{}]^l: {}",
                    report.cluster_root_count, report.bound, report.phi_positive_count
                );
                println!(
                    "cluster ⊆ Φ-positive: {}   Φ-positive ⊆ cluster: {}",
                    report.cluster_subset_phi_positive, report.phi_positive_subset_cluster
                );
                if !report.only_cluster.is_empty() {
                    println!("cluster-roots missing from the Φ-positive box list:");
                    print_roots(&report.only_cluster);
                }
                if !report.only_phi_positive.is_empty() {
                    println!("Φ-positive roots that are not cluster-roots:");
                    print_roots(&report.only_phi_positive);
                }
                println!("all roots Φ-sign-coherent: {}", report.all_roots_sign_coherent);
                let verdict = if report.holds_within_box {
                    "holds within box"
                } else {
                    "FAILS within box"
                };
                println!("verdict: {verdict} (box-relative statement)");
            }
            Ok(0)
        }
        Command::Mutate { algebra: path, vertex, inverse } => {
            let alg = load_algebra(path)?;
            let k = vertex_of(&alg, vertex)?;
            let res = if *inverse {
                mutation::apr_cotilt(&alg, k)?
            } else {
                mutation::apr_tilt(&alg, k)?
            };
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "removed_arrows": res.removed_arrows,
                        "new_arrows": res.new_arrows.iter().map(|(n, t)| {
                            json!({"name": n, "vertex": alg.quiver.vertices[*t]})
                        }).collect::<Vec<_>>(),
                        "new_relations": res.new_relations.iter()
                            .map(|r| res.algebra_out.element_to_string(r))
                            .collect::<Vec<_>>(),
                        "algebra": serde_json::from_str::<serde_json::Value>(
                            &algebra::algebra_to_json(&res.algebra_out)).expect("valid json"),
                    })
                );
            } else {
                let dir = if *inverse { "σ_k^-" } else { "σ_k" };
                println!("{dir} at vertex {vertex}:");
                println!("removed arrows: {}", res.removed_arrows.join(" "));
                let created: Vec<String> = res
                    .new_arrows
                    .iter()
                    .map(|(n, t)| {
                        if *inverse {
                            format!("{n}: {} -> {vertex}", alg.quiver.vertices[*t])
                        } else {
                            format!("{n}: {vertex} -> {}", alg.quiver.vertices[*t])
                        }
                    })
                    .collect();
                println!("new arrows:     {}", created.join("  "));
                for r in &res.new_relations {
                    println!("new relation:   {}", res.algebra_out.element_to_string(r));
                }
                println!("{}", algebra::algebra_to_json(&res.algebra_out));
            }
            Ok(0)
        }
        Command::TiltSequence { algebra: path } => {
            let alg = load_algebra(path)?;
            let seq = mutation::tilt_sequence(&alg)?;
            let refl = forms::sequence_from_tilts(&seq.reflections);
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "stages": seq.stages.iter().map(|s| serde_json::from_str::<serde_json::Value>(
                            &algebra::algebra_to_json(s)).expect("valid json")).collect::<Vec<_>>(),
                        "reflections": seq.reflections.iter()
                            .map(|t| matrix_json(&t.matrix)).collect::<Vec<_>>(),
                        "c": matrix_json(&refl.c),
                        "c_inverse": matrix_json(&refl.c_inverse),
                        "rotation_check": seq.rotation_check,
                    })
                );
            } else {
                for (i, stage) in seq.stages.iter().enumerate() {
                    let arrows: Vec<String> = stage
                        .quiver
                        .arrows
                        .iter()
                        .map(|a| {
                            format!(
                                "{}->{}",
                                stage.quiver.vertices[a.source],
                                stage.quiver.vertices[a.target]
                            )
                        })
                        .collect();
                    println!("Λ^{}: arrows {}", i + 1, arrows.join(" "));
                    for r in &stage.relations {
                        println!("      relation {}", stage.element_to_string(r));
                    }
                }
                for t in &seq.reflections {
                    println!("t_{}:", alg.quiver.vertices[t.vertex]);
                    print!("{}", fmt_matrix(&t.matrix));
                }
                println!("c = t_l ... t_1:");
                print!("{}", fmt_matrix(&refl.c));
                println!("rotation check (Λ^{{l+1}} ≅ Λ): {}", seq.rotation_check);
            }
            Ok(if seq.rotation_check { 0 } else { 1 })
        }
        Command::Reflect { algebra: path, rep: rep_path, vertex, inverse } => {
            let alg = load_algebra(path)?;
            let x = rep::parse_representation(&alg, &std::fs::read_to_string(rep_path)?)?;
            let k = vertex_of(&alg, vertex)?;
            let res = if *inverse {
                reflect::reflect_minus(&alg, k, &x)?
            } else {
                reflect::reflect_plus(&alg, k, &x)?
            };
            emit_functor_result(cli, &res)
        }
        Command::CoxeterFunctor { algebra: path, rep: rep_path, inverse } => {
            let alg = load_algebra(path)?;
            let x = rep::parse_representation(&alg, &std::fs::read_to_string(rep_path)?)?;
            let out = if *inverse {
                reflect::coxeter_minus(&alg, &x)?
            } else {
                reflect::coxeter_plus(&alg, &x)?
            };
            emit_representation(cli, &alg, &out)
        }
        Command::Tau { algebra: path, rep: rep_path, inverse } => {
            let alg = load_algebra(path)?;
            let x = rep::parse_representation(&alg, &std::fs::read_to_string(rep_path)?)?;
            let out = if *inverse { rep::tau_n_minus(&alg, &x) } else { rep::tau_n(&alg, &x) };
            emit_representation(cli, &alg, &out)
        }
        Command::Resolve { algebra: path, module, kind } => {
            let alg = load_algebra(path)?;
            let x = parse_module_spec(&alg, module)?;
            let maxlen = rep::default_maxlen(&alg);
            let res = match kind {
                ResKind::Projective => rep::minimal_projective_resolution(&alg, &x, maxlen)?,
                ResKind::Injective => rep::minimal_injective_resolution(&alg, &x, maxlen)?,
            };
            emit_resolution(cli, &alg, &res)
        }
        Command::Gldim { algebra: path } => {
            let alg = load_algebra(path)?;
            let gd = rep::global_dimension(&alg);
            if cli.json {
                println!("{}", json!({ "global_dimension": gd }));
            } else {
                println!("{gd}");
            }
            Ok(0)
        }
        Command::VerifyNrf { algebra: path } => {
            let alg = load_algebra(path)?;
            let cox = forms::coxeter_with_cap(&alg, order_cap)?;
            let cap = cli
                .cap
                .map(|c| c as usize)
                .unwrap_or_else(|| rep::default_nct_cap(&alg, cox.order));
            let report = rep::verify_n_cluster_tilting(&alg, cap)?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "summands": report.summand_dims.iter().map(|d| vec_json(d)).collect::<Vec<_>>(),
                        "orbit_lengths": report.orbit_lengths,
                        "multiplicity_free": report.multiplicity_free,
                        "ext_dims": report.ext_dims,
                        "is_candidate_valid": report.is_candidate_valid,
                    })
                );
            } else {
                println!("summands of M = ⊕ τ_n^{{-i}}(Λ): {}", report.summand_dims.len());
                for d in &report.summand_dims {
                    println!("{}", fmt_vec(d));
                }
                println!("multiplicity-free: {}", report.multiplicity_free);
                for (j, d) in report.ext_dims.iter().enumerate() {
                    println!("dim Ext^{}(M, M) = {}", j + 1, d);
                }
                println!("candidate valid: {}", report.is_candidate_valid);
            }
            Ok(if report.is_candidate_valid { 0 } else { 1 })
        }
    }
}

fn parse_module_spec(alg: &BoundQuiverAlgebra, spec: &str) -> Result<rep::Representation> {
    let (kind, label) = spec
        .split_once('_')
        .ok_or_else(|| Error::syntax(format!("module must look like P_k, I_k or S_k: {spec:?}")))?;
    let v = alg.quiver.vertex_index(label)?;
    match kind {
        "P" => Ok(rep::projective_rep(alg, v)),
        "I" => Ok(rep::injective_rep(alg, v)),
        "S" => Ok(rep::simple_rep(alg, v)),
        _ => Err(Error::syntax(format!("unknown module kind {kind:?}"))),
    }
}

fn emit_functor_result(cli: &Cli, res: &reflect::FunctorResult) -> Result<i32> {
    if cli.json {
        println!(
            "{}",
            json!({
                "dims": vec_json(&res.rep_out.dim_vector()),
                "dim_check": res.dim_check,
                "representation": serde_json::from_str::<serde_json::Value>(
                    &rep::representation_to_json(&res.algebra_out, &res.rep_out))
                    .expect("valid json"),
                "algebra": serde_json::from_str::<serde_json::Value>(
                    &algebra::algebra_to_json(&res.algebra_out)).expect("valid json"),
            })
        );
    } else {
        println!("dims: {}", fmt_vec(&res.rep_out.dim_vector()));
        println!("dim check (t_k transport): {}", res.dim_check);
        println!("{}", rep::representation_to_json(&res.algebra_out, &res.rep_out));
    }
    Ok(0)
}

fn emit_representation(
    cli: &Cli,
    alg: &BoundQuiverAlgebra,
    x: &rep::Representation,
) -> Result<i32> {
    if cli.json {
        println!(
            "{}",
            json!({
                "dims": vec_json(&x.dim_vector()),
                "representation": serde_json::from_str::<serde_json::Value>(
                    &rep::representation_to_json(alg, x)).expect("valid json"),
            })
        );
    } else {
        println!("dims: {}", fmt_vec(&x.dim_vector()));
        println!("{}", rep::representation_to_json(alg, x));
    }
    Ok(0)
}

fn emit_resolution(
    cli: &Cli,
    alg: &BoundQuiverAlgebra,
    res: &rep::Resolution,
) -> Result<i32> {
    let letter = match res.side {
        rep::Side::Projective => "P",
        rep::Side::Injective => "I",
    };
    let term_str = |t: &Vec<usize>| -> String {
        if t.is_empty() {
            return "0".into();
        }
        t.iter()
            .map(|&v| format!("{letter}_{}", alg.quiver.vertices[v]))
            .collect::<Vec<_>>()
            .join(" + ")
    };
    if cli.json {
        println!(
            "{}",
            json!({
                "kind": letter,
                "length": res.length(),
                "terms": res.terms.iter().map(|t| t.iter()
                    .map(|&v| alg.quiver.vertices[v].clone()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
                "differentials": res.diffs.iter().map(|d| {
                    (0..d.row_summands.len()).map(|t| {
                        (0..d.col_summands.len()).map(|s| {
                            alg.element_to_string(d.entry(t, s))
                        }).collect::<Vec<_>>()
                    }).collect::<Vec<_>>()
                }).collect::<Vec<_>>(),
            })
        );
    } else {
        let chain: Vec<String> = res.terms.iter().map(&term_str).collect();
        match res.side {
            rep::Side::Projective => println!("0 -> ... -> {}", chain.join(" -> ")),
            rep::Side::Injective => println!("0 -> X -> {}", chain.join(" -> ")),
        }
        for (m, d) in res.diffs.iter().enumerate() {
            println!("differential {}:", m + 1);
            for t in 0..d.row_summands.len() {
                for s in 0..d.col_summands.len() {
                    let e = d.entry(t, s);
                    if !e.is_zero() {
                        println!("  ({t}, {s}): {}", alg.element_to_string(e));
                    }
                }
            }
        }
    }
    Ok(0)
}
