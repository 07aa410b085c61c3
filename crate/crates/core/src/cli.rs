//! Command-line front end: root system reports, Kostka-Foulkes polynomials
//! with cross-check verdicts, Hall-Littlewood expansions, Kazhdan-Lusztig
//! polynomials, tableau enumeration, and Hecke-algebra identity checks.
//!
//! Exit codes: 0 on success with all checks passing, 1 on usage errors,
//! 2 when a requested check fails.

use crate::affine_weyl::{maximal_coset_element, omega_elements};
use crate::error::Error;
use crate::hecke::{coset_expansion_check, satake_check};
use crate::kostka::{self, Method};
use crate::poly::ZPoly;
use crate::root_data::{CartanType, RootSystem, Weight};
use crate::symfunc::{self, Basis};
use crate::tableaux::{charge, enumerate_tableaux, Partition};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "kostka",
    about = "Exact Kostka-Foulkes and Hall-Littlewood computations over root systems",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct SystemArgs {
    /// Cartan type: A, B, C, D or G2
    #[arg(long = "type", value_name = "TYPE")]
    cartan_type: Option<String>,

    /// Rank of the root system
    #[arg(long)]
    rank: Option<usize>,

    /// GL(n) mode: number of variables (type A weights on the Z^n lattice)
    #[arg(long)]
    gl: Option<usize>,

    /// Whole-group enumeration guard
    #[arg(long, default_value_t = 6, env = "KOSTKA_RANK_GUARD")]
    rank_guard: usize,
}

#[derive(Args, Debug)]
struct BoundArgs {
    /// t-series working precision for inner-product computations
    #[arg(long, default_value_t = 16, env = "KOSTKA_HEIGHT_BOUND")]
    height_bound: usize,

    /// Affine length cutoff for Bruhat interval and Kazhdan-Lusztig work
    #[arg(long, default_value_t = 14, env = "KOSTKA_CUTOFF")]
    cutoff: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the positive roots, Cartan data and basic invariants
    Roots {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Kostka-Foulkes polynomial K_{lambda mu}(t) by one or more methods
    Kostka {
        #[command(flatten)]
        sys: SystemArgs,
        #[command(flatten)]
        bounds: BoundArgs,
        /// Highest weight / partition, comma separated
        #[arg(long, value_name = "COORDS")]
        lambda: String,
        /// Lower weight / partition, comma separated
        #[arg(long, value_name = "COORDS")]
        mu: String,
        /// Comma-separated method list: charge,bc,pf,ip,kl,ro
        #[arg(long, value_name = "LIST")]
        methods: Option<String>,
        /// Run all applicable methods and report an agreement verdict
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand the Hall-Littlewood polynomial P_lambda(x;t) in a basis
    HlExpand {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, value_name = "COORDS")]
        lambda: String,
        /// Basis: monomial, schur or hall-littlewood
        #[arg(long, default_value = "schur")]
        basis: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Kazhdan-Lusztig polynomials on the interval below n_lambda
    Kl {
        #[command(flatten)]
        sys: SystemArgs,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long, value_name = "COORDS")]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate column-strict tableaux of a shape and weight with charges
    Tableaux {
        /// Shape partition, comma separated
        #[arg(long, value_name = "PARTS")]
        shape: String,
        /// Weight partition, comma separated
        #[arg(long, value_name = "PARTS")]
        weight: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify Hecke-algebra identities (Satake, coset expansion, center)
    HeckeVerify {
        #[command(flatten)]
        sys: SystemArgs,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long, value_name = "COORDS")]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_coords(s: &str) -> Result<Vec<i64>, Error> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Error::Invalid(format!("bad coordinate '{}'", p)))
        })
        .collect()
}

fn build_system(sys: &SystemArgs) -> Result<RootSystem, Error> {
    match (&sys.cartan_type, sys.gl) {
        (Some(t), Some(n)) => {
            // "--type A --gl n" is accepted: GL(n) is the type A lattice
            if t.to_uppercase() == "A" {
                RootSystem::with_guard(CartanType::Gl, n, sys.rank_guard)
            } else {
                Err(Error::Invalid(format!("--gl only combines with --type A, not {}", t)))
            }
        }
        (None, Some(n)) => RootSystem::with_guard(CartanType::Gl, n, sys.rank_guard),
        (Some(t), None) => {
            let upper = t.to_uppercase();
            if upper == "G2" {
                return RootSystem::with_guard(CartanType::G2, 2, sys.rank_guard);
            }
            let ct = match upper.as_str() {
                "A" => CartanType::A,
                "B" => CartanType::B,
                "C" => CartanType::C,
                "D" => CartanType::D,
                other => return Err(Error::Unsupported(format!("unknown type '{}'", other))),
            };
            let rank = sys
                .rank
                .ok_or_else(|| Error::Invalid("--rank is required with --type".into()))?;
            RootSystem::with_guard(ct, rank, sys.rank_guard)
        }
        (None, None) => Err(Error::Invalid("one of --type or --gl is required".into())),
    }
}

fn weight_for(rs: &RootSystem, coords: &str) -> Result<Weight, Error> {
    let mut v = parse_coords(coords)?;
    if v.len() > rs.dim {
        return Err(Error::Invalid(format!(
            "weight {} has {} coordinates but {} expects at most {}",
            coords,
            v.len(),
            rs.name(),
            rs.dim
        )));
    }
    v.resize(rs.dim, 0);
    Ok(Weight(v))
}

fn bigint_json(b: &BigInt) -> Value {
    match i64::try_from(b) {
        Ok(v) => json!(v),
        Err(_) => json!(b.to_string()),
    }
}

/// `{"var": "t", "terms": [[exp, coeff], ...]}` with ascending exponents.
pub fn poly_json(p: &ZPoly, var: &str) -> Value {
    let terms: Vec<Value> = p.iter().map(|(e, c)| json!([e, bigint_json(c)])).collect();
    json!({ "var": var, "terms": terms })
}

fn weight_json(w: &Weight) -> Value {
    json!(w.0)
}

/// Entry point; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with success codes
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(all_checks_passed) => {
            if all_checks_passed {
                0
            } else {
                2
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<bool, Error> {
    match cli.command {
        Command::Roots { sys, format } => cmd_roots(&sys, format),
        Command::Kostka { sys, bounds, lambda, mu, methods, check, format } => {
            cmd_kostka(&sys, &bounds, &lambda, &mu, methods.as_deref(), check, format)
        }
        Command::HlExpand { sys, lambda, basis, format } => {
            cmd_hl_expand(&sys, &lambda, &basis, format)
        }
        Command::Kl { sys, bounds, lambda, format } => cmd_kl(&sys, &bounds, &lambda, format),
        Command::Tableaux { shape, weight, format } => cmd_tableaux(&shape, &weight, format),
        Command::HeckeVerify { sys, bounds, lambda, format } => {
            cmd_hecke_verify(&sys, &bounds, &lambda, format)
        }
    }
}

fn cmd_roots(sys: &SystemArgs, format: Format) -> Result<bool, Error> {
    let rs = build_system(sys)?;
    let roots: Vec<Value> = rs
        .positive_roots
        .iter()
        .map(|r| {
            json!({
                "simple_coords": r.simple_coords,
                "weight_coords": r.vec.0,
                "coroot_coords": r.coroot,
                "rho_pairing": r.coroot_height(),
            })
        })
        .collect();
    let omega_count = match rs.cartan_type {
        CartanType::Gl => 0,
        _ => omega_elements(&rs)?.len(),
    };
    let report = json!({
        "system": rs.name(),
        "rank": rs.rank,
        "num_positive_roots": rs.num_positive_roots(),
        "weyl_order": rs.weyl_order(),
        "cartan_matrix": rs.cartan,
        "rho": weight_json(&rs.rho),
        "highest_root": rs.positive_roots[rs.highest_root].vec.0,
        "alcove_root": rs.positive_roots[rs.alcove_root].vec.0,
        "omega_order": omega_count,
        "positive_roots": roots,
    });
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        Format::Text => {
            println!("root system {}", rs.name());
            println!("  positive roots: {}", rs.num_positive_roots());
            println!("  |W| = {}", rs.weyl_order());
            for r in &rs.positive_roots {
                println!(
                    "  root {:?}  coroot {:?}  <rho,a^vee> = {}",
                    r.simple_coords,
                    r.coroot,
                    r.coroot_height()
                );
            }
        }
    }
    Ok(true)
}

fn default_methods(rs: &RootSystem) -> Vec<Method> {
    match rs.cartan_type {
        CartanType::Gl => vec![
            Method::Charge,
            Method::BaseChange,
            Method::PartitionFunction,
            Method::RaisingOperator,
            Method::InnerProduct,
        ],
        _ => vec![Method::BaseChange, Method::PartitionFunction, Method::InnerProduct],
    }
}

fn cmd_kostka(
    sys: &SystemArgs,
    bounds: &BoundArgs,
    lambda: &str,
    mu: &str,
    methods: Option<&str>,
    check: bool,
    format: Format,
) -> Result<bool, Error> {
    let rs = build_system(sys)?;
    let lam = weight_for(&rs, lambda)?;
    let muw = weight_for(&rs, mu)?;
    if !rs.is_dominant(&lam) {
        return Err(Error::NotDominant(format!("lambda = {}", lam)));
    }
    if !rs.is_dominant(&muw) {
        return Err(Error::NotDominant(format!("mu = {}", muw)));
    }
    let method_list: Vec<Method> = match methods {
        None => default_methods(&rs),
        Some(s) => s
            .split(',')
            .map(|m| Method::parse(m.trim()))
            .collect::<Result<Vec<_>, _>>()?,
    };
    let mut results = Vec::new();
    for &m in &method_list {
        let poly = match (m, rs.cartan_type) {
            (Method::Charge, CartanType::Gl) => {
                let lp = Partition::new(lam.0.clone())?;
                let mp = Partition::new(muw.0.clone())?;
                kostka::kostka_via_charge(&lp, &mp)?
            }
            (Method::Charge, _) => {
                return Err(Error::Unsupported(
                    "the charge method needs GL mode (--gl N)".into(),
                ))
            }
            (Method::RaisingOperator, CartanType::Gl) => {
                let lp = Partition::new(lam.0.clone())?;
                let mp = Partition::new(muw.0.clone())?;
                kostka::raising_operator_expand(rs.rank, &mp)?
                    .get(&lp)
                    .cloned()
                    .unwrap_or_else(ZPoly::zero)
            }
            (Method::RaisingOperator, _) => {
                return Err(Error::Unsupported(
                    "the raising-operator method needs GL mode (--gl N)".into(),
                ))
            }
            (Method::BaseChange, _) => kostka::kostka_via_base_change(&rs, &lam, &muw)?,
            (Method::PartitionFunction, _) => {
                kostka::kostka_via_partition_function(&rs, &lam, &muw)?
            }
            (Method::InnerProduct, _) => {
                kostka::kostka_via_inner_product(&rs, &lam, &muw, bounds.height_bound)?
            }
            (Method::KazhdanLusztig, CartanType::Gl) => {
                return Err(Error::Unsupported(
                    "the KL method needs a semisimple type (--type ...)".into(),
                ))
            }
            (Method::KazhdanLusztig, _) => {
                kostka::kostka_via_kl(&rs, &lam, &muw, bounds.cutoff)?
            }
        };
        results.push((m, poly));
    }
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let verdict_matters = check || methods.is_none();
    let payload = json!({
        "system": rs.name(),
        "lambda": weight_json(&lam),
        "mu": weight_json(&muw),
        "methods": results
            .iter()
            .map(|(m, p)| json!({ "method": m.tag(), "polynomial": poly_json(p, "t") }))
            .collect::<Vec<_>>(),
        "agree": agree,
    });
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&payload).unwrap()),
        Format::Text => {
            println!("K[lambda={}, mu={}] over {}", lam, muw, rs.name());
            for (m, p) in &results {
                println!("  {:>6}: {}", m.tag(), p.display("t"));
            }
            if verdict_matters {
                println!("verdict: {}", if agree { "AGREE" } else { "DISAGREE" });
            }
        }
    }
    Ok(!verdict_matters || agree)
}

fn cmd_hl_expand(sys: &SystemArgs, lambda: &str, basis: &str, format: Format) -> Result<bool, Error> {
    let rs = build_system(sys)?;
    let lam = weight_for(&rs, lambda)?;
    let basis = match basis {
        "monomial" => Basis::Monomial,
        "schur" => Basis::Schur,
        "hall-littlewood" => Basis::HallLittlewood,
        other => return Err(Error::Invalid(format!("unknown basis '{}'", other))),
    };
    let p = symfunc::hall_littlewood(&rs, &lam)?;
    let exp = symfunc::expand_in(&rs, basis, &p)?;
    let payload = json!({
        "system": rs.name(),
        "lambda": weight_json(&lam),
        "basis": exp.basis.tag(),
        "terms": exp
            .terms
            .iter()
            .map(|(w, c)| json!([weight_json(w), poly_json(c, "t")]))
            .collect::<Vec<_>>(),
    });
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&payload).unwrap()),
        Format::Text => {
            println!("P_{}(x;t) in the {} basis:", lam, exp.basis.tag());
            for (w, c) in &exp.terms {
                println!("  {}  *  [{}]", c.display("t"), w);
            }
        }
    }
    Ok(true)
}

fn cmd_kl(sys: &SystemArgs, bounds: &BoundArgs, lambda: &str, format: Format) -> Result<bool, Error> {
    let rs = build_system(sys)?;
    if rs.cartan_type == CartanType::Gl {
        return Err(Error::Unsupported("KL polynomials need a semisimple type".into()));
    }
    let lam = weight_for(&rs, lambda)?;
    if !rs.is_dominant(&lam) {
        return Err(Error::NotDominant(format!("lambda = {}", lam)));
    }
    let n_el = maximal_coset_element(&rs, &lam)?;
    let data = crate::hecke::kl_below(&rs, &n_el, bounds.cutoff)?;
    let n = data.poset.len();
    let mut entries = Vec::new();
    for w in 0..n {
        for u in 0..n {
            if !data.p[u][w].is_zero() && u != w {
                entries.push(json!({
                    "lower": { "w": data.poset[u].finite.word(), "t": data.poset[u].translation.0 },
                    "upper": { "w": data.poset[w].finite.word(), "t": data.poset[w].translation.0 },
                    "p": poly_json(&data.p[u][w], "q"),
                }));
            }
        }
    }
    let payload = json!({
        "system": rs.name(),
        "lambda": weight_json(&lam),
        "n_lambda": { "w": n_el.finite.word(), "t": n_el.translation.0 },
        "interval_size": n,
        "entries": entries,
    });
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&payload).unwrap()),
        Format::Text => {
            println!(
                "KL data below n_lambda = {} ({} elements)",
                n_el,
                data.poset.len()
            );
            for w in 0..n {
                for u in 0..n {
                    if u != w && !data.p[u][w].is_zero() {
                        println!(
                            "  p[{} -> {}] = {}",
                            data.poset[u],
                            data.poset[w],
                            data.p[u][w].display("q")
                        );
                    }
                }
            }
        }
    }
    Ok(true)
}

fn cmd_tableaux(shape: &str, weight: &str, format: Format) -> Result<bool, Error> {
    let shape = Partition::new(parse_coords(shape)?)?;
    let wt = parse_coords(weight)?;
    let ts = enumerate_tableaux(&shape, &wt);
    let mut rows = Vec::new();
    for t in &ts {
        let ch = charge(t).ok();
        rows.push(json!({
            "rows": t.rows(),
            "charge": ch,
        }));
    }
    let payload = json!({
        "shape": shape.0,
        "weight": wt,
        "count": ts.len(),
        "tableaux": rows,
    });
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&payload).unwrap()),
        Format::Text => {
            println!("{} tableaux of shape {} and weight {:?}", ts.len(), shape, wt);
            for t in &ts {
                match charge(t) {
                    Ok(c) => println!("charge {}:\n{}", c, t),
                    Err(_) => println!("charge n/a:\n{}", t),
                }
            }
        }
    }
    Ok(true)
}

fn cmd_hecke_verify(
    sys: &SystemArgs,
    bounds: &BoundArgs,
    lambda: &str,
    format: Format,
) -> Result<bool, Error> {
    let rs = build_system(sys)?;
    if rs.cartan_type == CartanType::Gl {
        return Err(Error::Unsupported("Hecke checks need a semisimple type".into()));
    }
    let lam = weight_for(&rs, lambda)?;
    if !rs.is_dominant(&lam) {
        return Err(Error::NotDominant(format!("lambda = {}", lam)));
    }
    let n_len = maximal_coset_element(&rs, &lam)?.length(&rs);
    if n_len as usize > bounds.cutoff {
        return Err(Error::CutoffExceeded { len: n_len as usize, cutoff: bounds.cutoff });
    }
    let satake = satake_check(&rs, &lam)?;
    let coset = coset_expansion_check(&rs, &lam)?;
    let center = crate::hecke::center_check(&rs, &symfunc::monomial(&rs, &lam), None);
    let all = satake && coset && center;
    let payload = json!({
        "system": rs.name(),
        "lambda": weight_json(&lam),
        "satake": satake,
        "coset_expansion": coset,
        "center": center,
        "pass": all,
    });
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&payload).unwrap()),
        Format::Text => {
            println!("hecke checks for lambda = {} over {}", lam, rs.name());
            println!("  satake:           {}", if satake { "pass" } else { "FAIL" });
            println!("  coset expansion:  {}", if coset { "pass" } else { "FAIL" });
            println!("  center:           {}", if center { "pass" } else { "FAIL" });
        }
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> i32 {
        run(std::iter::once("kostka").chain(args.iter().copied()))
    }

    #[test]
    fn kostka_gl3_check_agrees() {
        let code = run_args(&[
            "kostka", "--gl", "3", "--lambda", "2,1", "--mu", "1,1,1", "--methods",
            "charge,pf,bc", "--check",
        ]);
        assert_eq!(code, 0);
        // the "--type A --gl 3" spelling is the same thing
        let code2 = run_args(&[
            "kostka", "--type", "A", "--gl", "3", "--lambda", "2,1", "--mu", "1,1,1",
            "--methods", "charge,pf,bc", "--check",
        ]);
        assert_eq!(code2, 0);
        // but --gl does not combine with other types
        let code3 = run_args(&[
            "kostka", "--type", "C", "--gl", "3", "--lambda", "2,1", "--mu", "1,1,1",
        ]);
        assert_eq!(code3, 1);
    }

    #[test]
    fn roots_c2_runs() {
        assert_eq!(run_args(&["roots", "--type", "C", "--rank", "2"]), 0);
        assert_eq!(run_args(&["roots", "--type", "C", "--rank", "2", "--format", "json"]), 0);
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_args(&["kostka", "--lambda", "2,1", "--mu", "1,1,1"]), 1);
        assert_eq!(run_args(&["roots", "--type", "E", "--rank", "8"]), 1);
        assert_eq!(
            run_args(&["kostka", "--gl", "2", "--lambda", "1,x", "--mu", "2"]),
            1
        );
        // non-dominant weight
        assert_eq!(
            run_args(&["kostka", "--gl", "2", "--lambda", "1,2", "--mu", "2,1"]),
            1
        );
    }

    #[test]
    fn trivial_kostka_by_every_method() {
        let code = run_args(&["kostka", "--gl", "2", "--lambda", "2", "--mu", "2", "--check"]);
        assert_eq!(code, 0);
    }

    #[test]
    fn hl_expand_and_tableaux_and_kl_run() {
        assert_eq!(
            run_args(&["hl-expand", "--type", "C", "--rank", "2", "--lambda", "0,2"]),
            0
        );
        assert_eq!(run_args(&["tableaux", "--shape", "2,1", "--weight", "1,1,1"]), 0);
        assert_eq!(
            run_args(&["kl", "--type", "A", "--rank", "1", "--lambda", "2", "--format", "json"]),
            0
        );
        assert_eq!(
            run_args(&["hecke-verify", "--type", "A", "--rank", "1", "--lambda", "2"]),
            0
        );
    }
}
