//! Command-line interface: string validation, family builders, enumeration,
//! Hom/Ext computations, syzygy walks, component location, classification,
//! censuses, and the verification suites.

use biserial::{
    census_component, census_tubes, ext1_dim, hom_basis, hom_oracle, locate_component,
    modify_hook, omega, omega_orbit, stable_hom_dim, udr, Algebra, ChainSide, ComponentFamily,
    ComponentLocus, Field, HookDirection, HookKind, PrimeField, Rationals, Ring, Side, StringRep,
};
use biserial::rep::string_module;
use biserial::strings::{self, FamilySpec};
use biserial::verify::VerifyScale;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "biserial",
    about = "String combinatorics and universal deformation rings over the algebras Lambda_{m,N}"
)]
struct Cli {
    /// Number of vertices (m >= 3).
    #[arg(long = "m")]
    m: i64,
    /// Relation exponent (N >= 1).
    #[arg(long = "N")]
    n: i64,
    /// Coefficient field for the linear algebra.
    #[arg(long, value_enum, default_value_t = FieldChoice::Rational)]
    field: FieldChoice,
    /// Prime for the gfp field.
    #[arg(long, default_value_t = 32003)]
    prime: u64,
    /// Seed for randomized isomorphism searches.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Length bound for enumeration and verification scale.
    #[arg(long = "max-len", default_value_t = 6)]
    max_len: usize,
    /// Radius for orbit walks and component neighbourhoods.
    #[arg(long, default_value_t = 2)]
    radius: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FieldChoice {
    Rational,
    Gfp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a word and echo its canonical form.
    Validate { word: String },
    /// Build the named string families at a base vertex.
    Families {
        /// Base vertex.
        #[arg(long, default_value_t = 0)]
        i: i64,
        /// Level / chain depth where applicable.
        #[arg(long, default_value_t = 1)]
        level: usize,
    },
    /// List all strings up to the length bound, in canonical form.
    Enumerate,
    /// Hom dimension and canonical basis data between two string modules.
    Hom { source: String, target: String },
    /// Stable Hom dimension between two string modules.
    StableHom { source: String, target: String },
    /// dim Ext^1 between two string modules.
    Ext { source: String, target: String },
    /// The syzygy of a string module, with witness data.
    Omega { word: String },
    /// Walk the syzygy orbit out to the radius.
    Orbit { word: String },
    /// Locate the component; with --format dot, emit the mesh neighbourhood.
    Component { word: String },
    /// Assign the universal deformation ring of each given string module.
    Classify { words: Vec<String> },
    /// Orbit censuses: tubes, or the component of a string.
    Census {
        /// "tubes" or a word in the text syntax.
        scope: String,
    },
    /// Run the acceptance checks (scale set by --max-len).
    Verify,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let alg = match Algebra::new(cli.m, cli.n) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let outcome = match cli.field {
        FieldChoice::Rational => run(&cli, &alg, &Rationals),
        FieldChoice::Gfp => match PrimeField::try_new(cli.prime) {
            Some(field) => run(&cli, &alg, &field),
            None => {
                eprintln!("error: --prime {} is not a prime below 2^31", cli.prime);
                return ExitCode::from(1);
            }
        },
    };
    match outcome {
        Ok(code) => code,
        Err(msg) => {
            if cli.format == Format::Json {
                println!("{}", json!({ "error": msg }));
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(1)
        }
    }
}

fn algebra_json(alg: &Algebra, cli: &Cli) -> Value {
    json!({
        "m": alg.m(),
        "N": alg.relation_exponent(),
        "kappa": alg.kappa(),
        "field": match cli.field {
            FieldChoice::Rational => "rational".to_string(),
            FieldChoice::Gfp => format!("gfp({})", cli.prime),
        },
    })
}

fn family_name(f: &ComponentFamily) -> &'static str {
    match f {
        ComponentFamily::ASimple => "A_SIMPLE",
        ComponentFamily::BArrow => "B_ARROW",
        ComponentFamily::Theta => "THETA",
        ComponentFamily::ZigzagGeneral => "ZIGZAG_GENERAL",
        ComponentFamily::Tube => "TUBE",
        ComponentFamily::OutOfScope => "OUT_OF_SCOPE",
    }
}

fn locus_json(locus: &ComponentLocus) -> Value {
    json!({
        "family": family_name(&locus.family),
        "vertex": locus.vertex,
        "orbit_index": locus.orbit_index,
        "side": locus.side.map(|s| match s {
            ChainSide::DBar => "D",
            ChainSide::CBar => "C",
        }),
        "omega_shifted": locus.omega_shifted,
        "anchor": locus.anchor.to_string(),
    })
}

fn parse(alg: &Algebra, text: &str) -> Result<StringRep, String> {
    strings::parse_string(alg, text).map_err(|e| e.to_string())
}

fn run<F: Field>(cli: &Cli, alg: &Algebra, field: &F) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Validate { word } => {
            let c = parse(alg, word)?;
            if cli.format == Format::Json {
                println!(
                    "{}",
                    json!({
                        "algebra": algebra_json(alg, cli),
                        "input": word,
                        "canonical": c.canonical().to_string(),
                        "length": c.len(),
                        "source": c.source(),
                        "target": c.target(),
                    })
                );
            } else {
                println!(
                    "valid, canonical form: {} (length {}, {} -> {})",
                    c.canonical(),
                    c.len(),
                    c.source(),
                    c.target()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Families { i, level } => {
            let entries = family_table(alg, *i, *level);
            if cli.format == Format::Json {
                let items: Vec<Value> = entries
                    .iter()
                    .map(|(name, r)| match r {
                        Ok(s) => json!({ "family": name, "string": s.to_string(), "length": s.len() }),
                        Err(e) => json!({ "family": name, "error": e }),
                    })
                    .collect();
                println!(
                    "{}",
                    json!({ "algebra": algebra_json(alg, cli), "i": i, "level": level, "families": items })
                );
            } else {
                for (name, r) in &entries {
                    match r {
                        Ok(s) => println!("{name:<22} {s}"),
                        Err(e) => println!("{name:<22} ({e})"),
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate => {
            let all = strings::enumerate_strings(alg, cli.max_len);
            if cli.format == Format::Json {
                let items: Vec<Value> = all
                    .iter()
                    .map(|s| json!({ "string": s.to_string(), "length": s.len() }))
                    .collect();
                println!(
                    "{}",
                    json!({ "algebra": algebra_json(alg, cli), "count": all.len(), "strings": items })
                );
            } else {
                for s in &all {
                    println!("{s}");
                }
                println!("total: {}", all.len());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hom { source, target } => {
            let s = parse(alg, source)?;
            let t = parse(alg, target)?;
            let (occs, homs) = hom_basis(field, &s, &t);
            let ms = string_module(field, alg, &s);
            let mt = string_module(field, alg, &t);
            let (oracle_dim, _) = hom_oracle(field, &ms, &mt);
            if cli.format == Format::Json {
                let items: Vec<Value> = occs
                    .iter()
                    .zip(&homs)
                    .map(|(o, h)| {
                        json!({
                            "substring_length": o.substring_len(),
                            "rank": h.rank(field),
                            "s_interval": [o.s_lo, o.s_hi],
                            "t_interval": [o.t_lo, o.t_hi],
                            "s_reversed": o.s_rev,
                            "t_reversed": o.t_rev,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({
                        "algebra": algebra_json(alg, cli),
                        "source": s.to_string(),
                        "target": t.to_string(),
                        "dim": occs.len(),
                        "oracle_dim": oracle_dim,
                        "canonical_basis": items,
                    })
                );
            } else {
                println!("dim Hom = {} (oracle: {oracle_dim})", occs.len());
                for (o, h) in occs.iter().zip(&homs) {
                    println!(
                        "  substring length {}, rank {}, S[{}..{}]{} -> T[{}..{}]{}",
                        o.substring_len(),
                        h.rank(field),
                        o.s_lo,
                        o.s_hi,
                        if o.s_rev { " (reversed)" } else { "" },
                        o.t_lo,
                        o.t_hi,
                        if o.t_rev { " (reversed)" } else { "" },
                    );
                }
            }
            if occs.len() != oracle_dim {
                return Err(format!(
                    "canonical basis count {} disagrees with oracle dimension {oracle_dim}",
                    occs.len()
                ));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::StableHom { source, target } => {
            let s = parse(alg, source)?;
            let t = parse(alg, target)?;
            let dim = stable_hom_dim(
                field,
                &string_module(field, alg, &s),
                &string_module(field, alg, &t),
            );
            if cli.format == Format::Json {
                println!(
                    "{}",
                    json!({
                        "algebra": algebra_json(alg, cli),
                        "source": s.to_string(),
                        "target": t.to_string(),
                        "stable_hom_dim": dim,
                    })
                );
            } else {
                println!("dim stable Hom = {dim}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ext { source, target } => {
            let s = parse(alg, source)?;
            let t = parse(alg, target)?;
            let dim = ext1_dim(field, alg, &s, &t);
            if cli.format == Format::Json {
                println!(
                    "{}",
                    json!({
                        "algebra": algebra_json(alg, cli),
                        "source": s.to_string(),
                        "target": t.to_string(),
                        "ext1_dim": dim,
                    })
                );
            } else {
                println!("dim Ext^1 = {dim}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Omega { word } => {
            let c = parse(alg, word)?;
            let res = omega(field, alg, &c, cli.seed).map_err(|e| e.to_string())?;
            if cli.format == Format::Json {
                println!(
                    "{}",
                    json!({
                        "algebra": algebra_json(alg, cli),
                        "input": c.to_string(),
                        "omega": res.string.canonical().to_string(),
                        "kernel_dim": res.witness_kernel.total_dim(),
                        "kernel_dims": res.witness_kernel.dims,
                        "witness_verified": true,
                    })
                );
            } else {
                println!(
                    "Omega = {} (kernel dim {}, witness isomorphism verified)",
                    res.string.canonical(),
                    res.witness_kernel.total_dim()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbit { word } => {
            let c = parse(alg, word)?;
            let orbit = omega_orbit(alg, &c, cli.radius).map_err(|e| e.to_string())?;
            if cli.format == Format::Json {
                let items: Vec<Value> = orbit
                    .iter()
                    .enumerate()
                    .map(|(k, s)| {
                        json!({
                            "shift": k as i64 - cli.radius as i64,
                            "string": s.canonical().to_string(),
                            "dim": s.len() + 1,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    json!({ "algebra": algebra_json(alg, cli), "input": c.to_string(), "orbit": items })
                );
            } else {
                for (k, s) in orbit.iter().enumerate() {
                    println!("Omega^{:+} {}", k as i64 - cli.radius as i64, s.canonical());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Component { word } => {
            let c = parse(alg, word)?;
            if cli.format == Format::Dot {
                println!("{}", mesh_dot(alg, &c, cli.radius));
                return Ok(ExitCode::SUCCESS);
            }
            let locus = locate_component(alg, &c).map_err(|e| e.to_string())?;
            if cli.format == Format::Json {
                println!(
                    "{}",
                    json!({
                        "algebra": algebra_json(alg, cli),
                        "input": c.to_string(),
                        "canonical": c.canonical().to_string(),
                        "locus": locus_json(&locus),
                    })
                );
            } else {
                println!(
                    "family {}, anchor {}, orbit index {}{}",
                    family_name(&locus.family),
                    locus.anchor,
                    locus.orbit_index,
                    if locus.omega_shifted { " (via syzygy shift)" } else { "" }
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { words } => {
            if words.is_empty() {
                return Err("classify needs at least one word".into());
            }
            let mut reports = Vec::new();
            for w in words {
                let c = parse(alg, w)?;
                let label = udr(field, alg, &c).map_err(|e| e.to_string())?;
                reports.push((w.clone(), c, label));
            }
            if cli.format == Format::Json {
                let items: Vec<Value> = reports
                    .iter()
                    .map(|(input, c, label)| {
                        json!({
                            "algebra": algebra_json(alg, cli),
                            "input": input,
                            "canonical": c.canonical().to_string(),
                            "locus": label.locus.as_ref().map(locus_json),
                            "ring": label.ring.label(),
                            "ext1": label.ext1_self,
                            "justification": label.justification,
                        })
                    })
                    .collect();
                if items.len() == 1 {
                    println!("{}", items[0]);
                } else {
                    println!("{}", json!(items));
                }
            } else {
                for (_, c, label) in &reports {
                    println!(
                        "{}  ring {}  ({}; stable End dim {}{})",
                        c.canonical(),
                        label.ring.label(),
                        label.justification,
                        label.stable_end,
                        label
                            .ext1_self
                            .map(|e| format!(", Ext^1 = {e}"))
                            .unwrap_or_default()
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { scope } => {
            if scope == "tubes" {
                let tubes = census_tubes(field, alg).map_err(|e| e.to_string())?;
                if cli.format == Format::Json {
                    let items: Vec<Value> = tubes
                        .iter()
                        .map(|t| {
                            json!({
                                "boundary": t.boundary.to_string(),
                                "tau_period": t.tau_period,
                                "qualifying_rows": t.qualifying_rows,
                                "rows": t.rows.iter().map(|r| json!({
                                    "row": r.row,
                                    "string": r.string.canonical().to_string(),
                                    "stable_end": r.stable_end,
                                    "ring": r.ring.as_ref().map(Ring::label),
                                })).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        json!({ "algebra": algebra_json(alg, cli), "tubes": items })
                    );
                } else {
                    for t in &tubes {
                        println!(
                            "tube at {} (period {}): {} qualifying rows",
                            t.boundary, t.tau_period, t.qualifying_rows
                        );
                        for r in &t.rows {
                            println!(
                                "  row {}: {}  stable End {}  ring {}",
                                r.row,
                                r.string.canonical(),
                                r.stable_end,
                                r.ring.as_ref().map(Ring::label).unwrap_or_else(|| "-".into())
                            );
                        }
                    }
                }
                return Ok(ExitCode::SUCCESS);
            }
            let c = parse(alg, scope)?;
            let census = census_component(field, alg, &c).map_err(|e| e.to_string())?;
            if cli.format == Format::Json {
                println!(
                    "{}",
                    json!({
                        "algebra": algebra_json(alg, cli),
                        "locus": locus_json(&census.locus),
                        "omega_orbits": census.omega_orbits,
                        "omega_squared_orbits": census.omega_squared_orbits,
                        "rows": census.rows.iter().map(|r| json!({
                            "row": r.row,
                            "string": r.string.canonical().to_string(),
                            "stable_end": r.stable_end,
                            "ring": r.ring.as_ref().map(Ring::label),
                        })).collect::<Vec<_>>(),
                    })
                );
            } else {
                println!(
                    "component {} (anchor {}): {} syzygy orbits, {} squared orbits among qualifying modules",
                    family_name(&census.locus.family),
                    census.locus.anchor,
                    census.omega_orbits,
                    census.omega_squared_orbits
                );
                for r in &census.rows {
                    println!(
                        "  depth {}: {}  stable End {}  ring {}",
                        r.row,
                        r.string.canonical(),
                        r.stable_end,
                        r.ring.as_ref().map(Ring::label).unwrap_or_else(|| "-".into())
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify => {
            let scale = VerifyScale {
                hom_scan_len: cli.max_len.min(6),
                end_scan_len: cli.max_len.max(4),
                coherence_len: cli.max_len.max(4),
                rational_spot_len: cli.max_len.min(5).max(3),
            };
            let reports = biserial::verify::run_all(&scale);
            let all_pass = reports.iter().all(|r| r.passed);
            if cli.format == Format::Json {
                let items: Vec<Value> = reports
                    .iter()
                    .map(|r| json!({ "name": r.name, "passed": r.passed, "detail": r.detail }))
                    .collect();
                println!("{}", json!({ "passed": all_pass, "criteria": items }));
            } else {
                for r in &reports {
                    println!("{}", r.line());
                }
            }
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn family_table(alg: &Algebra, i: i64, level: usize) -> Vec<(String, Result<StringRep, String>)> {
    let build = |spec: FamilySpec| strings::build_family(alg, &spec).map_err(|e| e.to_string());
    let mut out = vec![
        ("Z_PRIME".to_string(), build(FamilySpec::ZPrime { i })),
        ("Z_DOUBLE_PRIME".to_string(), build(FamilySpec::ZDoublePrime { i })),
        (
            format!("Z_LEVEL({level})"),
            build(FamilySpec::ZLevel {
                i,
                base_double_prime: false,
                level,
                variants: None,
            }),
        ),
        (
            format!("W_LEVEL({level})"),
            build(FamilySpec::WLevel {
                i,
                base_double_prime: false,
                level,
            }),
        ),
        (
            format!("THETA({level})"),
            build(FamilySpec::Theta {
                i,
                level: level.max(1),
                variants: vec![false; level.max(1)],
            }),
        ),
        (
            format!("HOOK_CHAIN_C({level})"),
            build(FamilySpec::HookChainC { i, n: level }),
        ),
        (
            format!("COHOOK_CHAIN_D({level})"),
            build(FamilySpec::CohookChainD { i, n: level }),
        ),
        (
            "MAXIMAL_DIRECTED(a)".to_string(),
            build(FamilySpec::MaximalDirected { i, bar: false }),
        ),
        (
            "MAXIMAL_DIRECTED(bar)".to_string(),
            build(FamilySpec::MaximalDirected { i, bar: true }),
        ),
    ];
    if level < alg.relation_exponent() {
        out.push((
            format!("S_CHAIN({level})"),
            build(FamilySpec::SChain { i, level }),
        ));
    }
    if alg.m() % 2 == 0 {
        out.push((
            format!("T_CHAIN({level})"),
            build(FamilySpec::TChain { i, depth: level }),
        ));
    }
    out
}

/// DOT rendering of the mesh neighbourhood of a string module: nodes are
/// modules, solid edges the canonical irreducible maps (hook injections and
/// co-hook projections), dashed edges the translate.
fn mesh_dot(alg: &Algebra, c: &StringRep, radius: usize) -> String {
    use std::collections::HashMap;
    let mut nodes: HashMap<String, StringRep> = HashMap::new();
    let mut frontier = vec![c.canonical()];
    nodes.insert(c.canonical().to_string(), c.canonical());
    let mut edges: Vec<(String, String, &'static str)> = Vec::new();
    for _ in 0..radius {
        let mut next = Vec::new();
        for s in frontier {
            for (side, kind) in [
                (Side::Right, HookKind::Hook),
                (Side::Left, HookKind::Hook),
                (Side::Right, HookKind::Cohook),
                (Side::Left, HookKind::Cohook),
            ] {
                if let Ok(bigger) = modify_hook(&s, side, kind, HookDirection::Add) {
                    let key = bigger.canonical().to_string();
                    let edge = match kind {
                        HookKind::Hook => (s.canonical().to_string(), key.clone(), "hook"),
                        HookKind::Cohook => (key.clone(), s.canonical().to_string(), "cohook"),
                    };
                    if !edges.contains(&edge) {
                        edges.push(edge);
                    }
                    if !nodes.contains_key(&key) {
                        nodes.insert(key, bigger.canonical());
                        next.push(bigger.canonical());
                    }
                }
            }
        }
        frontier = next;
    }
    let mut names: Vec<&String> = nodes.keys().collect();
    names.sort();
    let tau_pairs: Vec<(String, String)> = names
        .iter()
        .filter_map(|name| {
            let s = &nodes[*name];
            let t = biserial::tau(alg, s).canonical();
            nodes
                .contains_key(&t.to_string())
                .then(|| (s.to_string(), t.to_string()))
        })
        .collect();
    let mut out = String::from("digraph mesh {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n");
    for (k, name) in names.iter().enumerate() {
        out.push_str(&format!("  n{k} [label=\"{name}\"];\n"));
    }
    let index_of = |label: &String| names.iter().position(|n| n == &label).unwrap();
    for (from, to, kind) in &edges {
        out.push_str(&format!(
            "  n{} -> n{} [label=\"{kind}\"];\n",
            index_of(from),
            index_of(to)
        ));
    }
    for (from, to) in &tau_pairs {
        if from != to {
            out.push_str(&format!(
                "  n{} -> n{} [style=dashed, color=gray, label=\"tau\"];\n",
                index_of(from),
                index_of(to)
            ));
        }
    }
    out.push_str("}\n");
    out
}
