use serde::Serialize;
use serde_json::{json, Value};

use confhom::bv::{
    coker_delta_dims, default_dmax, delta, delta_element, delta_ranks, equivariant_s1,
    graded_basis, is_tensor_regime, serre_e3,
};
use confhom::catalog::{fixed_point_total_dim, plane_config_generators};
use confhom::enumeration::{d, poincare, series_coefficient, GradedDims};
use confhom::identities::{verify_bijection_f, verify_classification, verify_dimension_identity};
use confhom::sign::{trivial_rep_homology_p2, verify_q_stability};
use confhom::Prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Check {
    Delta2,
    DimensionIdentity,
    Bijection,
    Classify,
    Stability,
    CrossRoute,
    All,
}

impl Check {
    pub const INDIVIDUAL: [Check; 6] = [
        Check::Delta2,
        Check::DimensionIdentity,
        Check::Bijection,
        Check::Classify,
        Check::Stability,
        Check::CrossRoute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Delta2 => "delta2",
            Check::DimensionIdentity => "dimension-identity",
            Check::Bijection => "bijection",
            Check::Classify => "classify",
            Check::Stability => "stability",
            Check::CrossRoute => "cross-route",
            Check::All => "all",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

#[derive(Debug, Clone, Copy)]
pub struct Bounds {
    pub p: Prime,
    pub max_n: u64,
    pub max_q: u64,
}

pub fn run(check: Check, b: Bounds) -> Vec<CheckResult> {
    if check != Check::All {
        return vec![run_one(check, b)];
    }
    // Independent checks in parallel; results kept in the fixed order.
    std::thread::scope(|s| {
        let handles: Vec<_> = Check::INDIVIDUAL
            .iter()
            .map(|&c| s.spawn(move || run_one(c, b)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    })
}

fn run_one(check: Check, b: Bounds) -> CheckResult {
    let (passed, detail) = match check {
        Check::Delta2 => delta2(b),
        Check::DimensionIdentity => {
            let r = verify_dimension_identity(b.p, b.max_q);
            (r.ok(), json!(r))
        }
        Check::Bijection => bijection(b),
        Check::Classify => {
            let r = verify_classification(b.p, b.max_n);
            (r.ok(), json!(r))
        }
        Check::Stability => stability(b),
        Check::CrossRoute => cross_route(b),
        Check::All => unreachable!("expanded by run"),
    };
    CheckResult {
        name: check.name().to_string(),
        passed,
        detail,
    }
}

fn delta2(b: Bounds) -> (bool, Value) {
    let mut monomials = 0u64;
    let mut failures = Vec::new();
    for n in 0..=b.max_n {
        for (deg, ms) in graded_basis(n, b.p) {
            for m in ms {
                monomials += 1;
                let img = delta(&m, b.p);
                if img
                    .terms()
                    .any(|(t, _)| t.weight() != n || t.degree() != deg + 1)
                {
                    failures.push(format!("Δ({m}) is not homogeneous of degree +1"));
                }
                if !delta_element(&img).is_zero() {
                    failures.push(format!("Δ²({m}) ≠ 0"));
                }
            }
        }
    }
    (
        failures.is_empty(),
        json!({ "max_n": b.max_n, "monomials": monomials, "failures": failures }),
    )
}

fn bijection(b: Bounds) -> (bool, Value) {
    let mut reports = Vec::new();
    let mut ok = true;
    for q in 0..=b.max_q {
        match verify_bijection_f(b.p, q) {
            Ok(r) => {
                ok &= r.ok();
                reports.push(json!(r));
            }
            Err(e) => {
                ok = false;
                reports.push(json!({ "q": q, "error": e.to_string() }));
            }
        }
    }
    (ok, json!({ "reports": reports }))
}

fn stability(b: Bounds) -> (bool, Value) {
    let qs: Vec<u64> = (0..=b.max_q).collect();
    let mut unstable = Vec::new();
    for n in 0..=b.max_n {
        match verify_q_stability(n, b.p, &qs, default_dmax(n)) {
            Ok(r) if r.stable => {}
            Ok(_) => unstable.push(json!({ "n": n })),
            Err(e) => unstable.push(json!({ "n": n, "error": e.to_string() })),
        }
    }
    (
        unstable.is_empty(),
        json!({ "max_n": b.max_n, "qs": qs, "unstable": unstable }),
    )
}

fn cross_route(b: Bounds) -> (bool, Value) {
    let p = b.p;
    let mut failures: Vec<String> = Vec::new();
    let gens = plane_config_generators(p, b.max_n.max(1));
    for n in 0..=b.max_n {
        let dmax = default_dmax(n);
        let s1 = equivariant_s1(n, p, dmax);
        if serre_e3(n, p, dmax).total() != s1.dims {
            failures.push(format!("n={n}: E³ differs from the S¹-equivariant answer"));
        }

        let delta_zero = delta_ranks(n, p).values().all(|&r| r == 0);
        if delta_zero != is_tensor_regime(n, p) {
            failures.push(format!("n={n}: Δ vanishing disagrees with n mod p"));
        }
        if !is_tensor_regime(n, p) {
            let u_free = GradedDims::from_pairs(
                graded_basis(n, p)
                    .values()
                    .flatten()
                    .filter(|m| !m.contains_u())
                    .map(|m| (m.degree(), 1)),
            );
            if coker_delta_dims(n, p) != u_free {
                failures.push(format!(
                    "n={n}: coker(Δ) rank count differs from u-free count"
                ));
            }
        }

        if is_tensor_regime(n, p) {
            match fixed_point_total_dim(n, p) {
                Ok(f) if f == d(n, p) => {}
                Ok(f) => failures.push(format!("n={n}: fixed points {f} ≠ d(n) {}", d(n, p))),
                Err(e) => failures.push(format!("n={n}: {e}")),
            }
        }

        let deg_bound = 2 * n + 2;
        if poincare(n, p).truncate(deg_bound) != series_coefficient(&gens, n, deg_bound) {
            failures.push(format!("n={n}: enumeration differs from series"));
        }

        if p.is_two() {
            for q in 1..=b.max_q.max(1) {
                match trivial_rep_homology_p2(n, q, dmax) {
                    Ok(t) if t == s1.dims => {}
                    Ok(_) => failures.push(format!(
                        "n={n} q={q}: sign-route and S¹-route differ at p = 2"
                    )),
                    Err(e) => failures.push(format!("n={n} q={q}: {e}")),
                }
            }
        }
    }
    (
        failures.is_empty(),
        json!({ "max_n": b.max_n, "failures": failures }),
    )
}
