//! Verification sweep: every closed form and structural invariant checked
//! against its oracle for each `(n, family)` up to a bound.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closed_form::{self as cf, IndexReport};
use crate::error::Result;
use crate::graphs::{
    block_automorphism, build_chain, reflection_automorphism, vertex_class, ChainFamily,
    ChainGraph, VertexClass,
};
use crate::numerics::{frac, rat, rational_to_f64};
use crate::oracles;
use crate::spectral;

/// Relative tolerance for float-vs-exact comparisons.
pub const FLOAT_REL_TOL: f64 = 1e-8;

/// Absolute tolerance for the spectrum-union check.
pub const UNION_TOL: f64 = 1e-8;

/// Jacobi convergence tolerance used by the sweep.
pub const EIGEN_TOL: f64 = 1e-14;

/// One line of the verification log.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub n: usize,
    pub family: ChainFamily,
    pub closed_form: String,
    pub oracle: String,
    pub abs_err: f64,
    pub rel_err: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub families: Vec<ChainFamily>,
    /// Maximum worker threads; `None` lets rayon decide.
    pub threads: Option<usize>,
    /// Adds one to the Gutman closed form to exercise the failure path.
    pub inject_gutman_fault: bool,
}

impl VerifyOptions {
    pub fn new(n_max: usize) -> Self {
        VerifyOptions {
            n_max,
            families: ChainFamily::ALL.to_vec(),
            threads: threads_from_env(),
            inject_gutman_fault: false,
        }
    }
}

/// Thread cap from `PENTA_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var("PENTA_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
}

struct Recorder {
    n: usize,
    family: ChainFamily,
    records: Vec<CheckRecord>,
}

impl Recorder {
    fn push(&mut self, check: &str, closed_form: String, oracle: String, abs: f64, rel: f64, pass: bool) {
        self.records.push(CheckRecord {
            check: check.to_string(),
            n: self.n,
            family: self.family,
            closed_form,
            oracle,
            abs_err: abs,
            rel_err: rel,
            pass,
        });
    }

    fn exact(&mut self, check: &str, closed_form: &BigRational, oracle: &BigRational) {
        let diff = (closed_form - oracle).abs();
        let abs = rational_to_f64(&diff);
        let rel = if oracle.is_zero() {
            abs
        } else {
            rational_to_f64(&(diff / oracle.abs()))
        };
        self.push(
            check,
            closed_form.to_string(),
            oracle.to_string(),
            abs,
            rel,
            closed_form == oracle,
        );
    }

    fn integer(&mut self, check: &str, closed_form: &BigInt, oracle: &BigInt) {
        self.exact(
            check,
            &BigRational::from_integer(closed_form.clone()),
            &BigRational::from_integer(oracle.clone()),
        );
    }

    fn float(&mut self, check: &str, closed_form: f64, oracle: f64, rel_tol: f64) {
        let abs = (closed_form - oracle).abs();
        let rel = if oracle == 0.0 { abs } else { abs / oracle.abs() };
        self.push(
            check,
            format!("{closed_form:.12e}"),
            format!("{oracle:.12e}"),
            abs,
            rel,
            rel <= rel_tol,
        );
    }

    fn holds(&mut self, check: &str, ok: bool) {
        let err = if ok { 0.0 } else { 1.0 };
        self.push(check, "true".into(), ok.to_string(), err, err, ok);
    }

    fn failed(&mut self, check: &str, message: String) {
        self.push(check, "ok".into(), message, 1.0, 1.0, false);
    }

    fn below(&mut self, check: &str, value: f64, limit: f64) {
        self.push(check, format!("< {limit:e}"), format!("{value:e}"), value, value, value < limit);
    }
}

fn structure_checks(rec: &mut Recorder, g: &ChainGraph) {
    let n = g.n();
    rec.integer("vertex_count", &BigInt::from(5 * n), &BigInt::from(g.vertex_count()));
    rec.integer("edge_count", &BigInt::from(7 * n), &BigInt::from(g.edge_count()));
    rec.holds("connected", g.is_connected());
    rec.holds("odd_cycle", !g.is_bipartite());
    let deg = g.degrees();
    rec.holds(
        "degree_multiset",
        deg.iter().filter(|&&d| d == 3).count() == 4 * n
            && deg.iter().filter(|&&d| d == 2).count() == n,
    );
    let count = |c: VertexClass| g.vertices().filter(|&v| vertex_class(g, v) == c).count();
    rec.holds(
        "class_sizes",
        count(VertexClass::AType) == 2 * n
            && count(VertexClass::BType) == 2 * n
            && count(VertexClass::CType) == n,
    );
    rec.holds("reflection_automorphism", reflection_automorphism(g).is_automorphism_of(g));
    if g.family() == ChainFamily::Mobius {
        let all = (1..n).all(|k| {
            block_automorphism(g, k)
                .map(|pi| pi.is_automorphism_of(g))
                .unwrap_or(false)
        });
        rec.holds("block_automorphisms", all);
    }
}

fn run_instance(rec: &mut Recorder, opts: &VerifyOptions) -> Result<()> {
    let (n, family) = (rec.n, rec.family);
    let g = build_chain(n, family)?;
    structure_checks(rec, &g);

    let report = IndexReport::closed_form(n, family)?;
    let dist = oracles::all_pairs_distances(&g)?;
    let mut gutman = report.gutman.clone();
    if opts.inject_gutman_fault {
        gutman += 1;
    }
    rec.integer("gutman", &gutman, &oracles::gutman_from(&g, &dist));
    rec.integer("schultz", &report.schultz, &oracles::schultz_from(&g, &dist));
    let bridge = {
        let m = BigInt::from(n);
        let lin = match family {
            ChainFamily::Cylinder => 3,
            ChainFamily::Mobius => -3,
        };
        14 * m.pow(3) + 16 * m.pow(2) + lin * &m
    };
    rec.integer("gutman_minus_schultz", &(&report.gutman - &report.schultz), &bridge);
    rec.integer("spanning_trees", &report.tau, &oracles::spanning_trees_oracle(&g)?);

    let tau_norm = oracles::spanning_trees_normalized_check(&g, EIGEN_TOL)?;
    rec.float(
        "spanning_trees_normalized",
        rational_to_f64(&BigRational::from_integer(report.tau.clone())),
        tau_norm,
        1e-6,
    );

    if oracles::default_mode(&g) == oracles::ResistanceMode::Exact {
        let res = oracles::exact_resistances(&g)?;
        rec.exact("kf_star", &report.kf_star, &oracles::degree_kirchhoff_from(&g, &res));
        rec.exact("foster", &rat(5 * n as i64 - 1), &oracles::foster_sum(&g, &res));
        let kf = oracles::kirchhoff_from(&res);
        let wn = BigRational::from_integer(oracles::wiener_from(&dist));
        rec.holds("kirchhoff_below_wiener", kf < wn);
        rec.holds(
            "resistance_below_distance_on_edges",
            g.edges().iter().all(|&(u, v)| res[(u, v)] < rat(1)),
        );
    }
    let kf_spec = oracles::kf_star_spectral(&g, EIGEN_TOL)?;
    rec.float("kf_star_spectral", rational_to_f64(&report.kf_star), kf_spec, FLOAT_REL_TOL);
    rec.exact(
        "kemeny",
        &report.kemeny,
        &(&report.kf_star / rat(14 * n as i64)),
    );
    rec.float(
        "kemeny_spectral",
        rational_to_f64(&report.kemeny),
        oracles::kemeny_spectral(&g, EIGEN_TOL)?,
        FLOAT_REL_TOL,
    );

    let spectra = spectral::decomposed_spectra(&g, EIGEN_TOL)?;
    rec.below("spectrum_union", spectra.union_check_max_err, UNION_TOL);

    let pair = cf::surd_pair(n);
    rec.integer("pell", &pair.norm(), &BigInt::from(1));
    rec.integer(
        "det_scaled_ls",
        &cf::det_n(n, family)?,
        &crate::numerics::det_bareiss(&spectral::scaled_ls(&g)),
    );
    let (delta, det_ls) = spectral::delta_coefficients(&g);
    rec.exact("vieta_s", &cf::vieta_s(n, family)?, &(-delta / det_ls));
    rec.exact(
        "cofactor_sum_surd",
        &cf::cofactor_sum_n(n)?,
        &cf::cofactor_sum_surd(n)?
            .to_rational()
            .unwrap_or_else(|| rat(-1)),
    );

    match spectral::gamma_coefficients(&g) {
        Ok((g1, g2)) => {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let ni = n as i64;
            let expected = frac(sign * 14 * ni * ni, 1) / rat(9).pow(ni as i32);
            rec.exact("gamma_3n_minus_1", &expected, &g1);
            rec.exact("vieta_a", &cf::vieta_a(n)?, &(-g2 / g1));
        }
        Err(e) => rec.failed("gamma_rational", e.to_string()),
    }
    Ok(())
}

/// Run the sweep; records come back ordered by `n`, then family.
pub fn run(opts: &VerifyOptions) -> Vec<CheckRecord> {
    let jobs: Vec<(usize, ChainFamily)> = (2..=opts.n_max)
        .flat_map(|n| opts.families.iter().map(move |&f| (n, f)))
        .collect();
    let work = || {
        jobs.par_iter()
            .map(|&(n, family)| {
                let mut rec = Recorder {
                    n,
                    family,
                    records: Vec::new(),
                };
                if let Err(e) = run_instance(&mut rec, opts) {
                    rec.failed("instance", e.to_string());
                }
                rec.records
            })
            .collect::<Vec<_>>()
    };
    let batches = match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map(|pool| pool.install(work))
            .unwrap_or_else(|_| work()),
        None => work(),
    };
    batches.into_iter().flatten().collect()
}

/// JSON-lines rendering of a log.
pub fn to_json_lines(records: &[CheckRecord]) -> String {
    records
        .iter()
        .map(|r| serde_json::to_string(r).expect("check records serialize") + "\n")
        .collect()
}
