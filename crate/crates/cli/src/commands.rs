use std::str::FromStr;

use dynheights_core::algebra::{
    disc_iterate, disc_oracle, galois_order_bounds, group_closure, is_rational_square,
    preimage_polynomial, stability_certificate, sweep_pair_generated,
    verify_abelian_transitive_lemmas, Permutation, StabilityVerdict,
};
use dynheights_core::dynamics::{
    chebyshev, classify_critical_orbit, normalize_quadratic, CriticalOrbit,
};
use dynheights_core::heights::{
    canonical_height, height_from_minpoly, preimage_height_demo, weil_height_rational,
    BogomolovConstant, HeightValue,
};
use dynheights_core::quadrature::{
    compare_to_bogomolov, plan_parameters, quadrature_estimate, CertifiedValue, QuadraturePlan,
    Verdict,
};
use dynheights_core::rational::{self, parse_rational, render};
use dynheights_core::{BigInt, BigRational, Error, IntPolynomial, Result};
use num_complex::Complex64;
use num_traits::One;

use crate::cli::{AzPairArgs, Command, QuadraticArgs};
use crate::json::Json;

/// Reference value of the basilica pairing at N=13, M=2^24, and its budget cap.
pub const REPRO_ESTIMATE: f64 = 0.16772223;
pub const REPRO_ESTIMATE_TOL: f64 = 1e-6;
pub const REPRO_BUDGET_CAP: f64 = 0.000196;

pub struct Outcome {
    pub command: &'static str,
    pub inputs: Json,
    pub result: Json,
    pub comparisons: Vec<Json>,
    /// Exit code 2 when a required verdict is not met.
    pub verdict_unmet: bool,
}

impl Outcome {
    fn new(command: &'static str, inputs: Json, result: Json) -> Self {
        Self {
            command,
            inputs,
            result,
            comparisons: Vec::new(),
            verdict_unmet: false,
        }
    }
}

fn rat(s: &str) -> Result<BigRational> {
    parse_rational(s)
}

fn int(s: &str) -> Result<BigInt> {
    let q = rat(s)?;
    if !rational::is_integer(&q) {
        return Err(Error::InvalidArgument(format!(
            "expected an integer, got {s:?}"
        )));
    }
    Ok(q.numer().clone())
}

fn rat_json(q: &BigRational) -> Json {
    Json::Str(render(q))
}

fn height_json(h: &HeightValue) -> Json {
    Json::obj([
        ("value", Json::Float(h.value)),
        ("budget", Json::Float(h.budget)),
    ])
}

fn poly_json(p: &IntPolynomial) -> Json {
    Json::obj([
        ("polynomial", Json::Str(p.to_string())),
        (
            "coefficients_descending",
            Json::Arr(
                p.coeffs()
                    .iter()
                    .rev()
                    .map(|c| Json::BigInt(c.to_string()))
                    .collect(),
            ),
        ),
    ])
}

fn certified_json(plan: &QuadraturePlan, v: &CertifiedValue) -> Json {
    let k = plan.constants();
    Json::obj([
        ("estimate", Json::Float(v.estimate)),
        ("analytic_budget", Json::Float(v.analytic_budget)),
        ("rounding_budget", Json::Float(v.rounding_budget)),
        ("total_budget", Json::Float(v.total_budget())),
        (
            "interval",
            Json::Arr(vec![Json::Float(v.lower()), Json::Float(v.upper())]),
        ),
        ("N", Json::from(plan.depth())),
        ("M", Json::from(plan.nodes())),
        ("T", Json::Float(k.t)),
        ("B", Json::Float(k.b)),
        ("B_exact", Json::Bool(k.b_is_exact)),
    ])
}

fn comparison(v: &CertifiedValue, threshold: BogomolovConstant) -> (Json, Verdict) {
    let verdict = compare_to_bogomolov(v, threshold);
    let j = Json::obj([
        ("threshold", Json::Str(threshold.name())),
        ("value", Json::Float(threshold.value())),
        ("verdict", Json::str(verdict.as_str())),
    ]);
    (j, verdict)
}

/// `below:NAME` or `above:NAME`.
fn parse_requirement(s: &str) -> Result<(Verdict, BogomolovConstant)> {
    let (side, name) = s.split_once(':').ok_or_else(|| {
        Error::InvalidArgument(format!("expected below:NAME or above:NAME, got {s:?}"))
    })?;
    let verdict = match side.trim().to_ascii_lowercase().as_str() {
        "below" => Verdict::CertifiedBelow,
        "above" => Verdict::CertifiedAbove,
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown verdict side {other:?}"
            )))
        }
    };
    Ok((verdict, BogomolovConstant::from_str(name)?))
}

fn az_pair(args: &AzPairArgs) -> Result<Outcome> {
    let c = rat(&args.c)?;
    let requirement = args
        .require_verdict
        .as_deref()
        .map(parse_requirement)
        .transpose()?;
    if !rational::is_integer(&c) {
        return Err(Error::UnsupportedMap(format!(
            "c = {} is not an integer; the pairing would need finite-place terms",
            render(&c)
        )));
    }
    let cf = rational::to_f64(&c)
        .ok_or_else(|| Error::UnsupportedMap("c is outside the floating range".into()))?;
    let cz = Complex64::new(cf, 0.0);
    let plan = match (args.tol, args.depth, args.nodes) {
        (Some(tol), _, _) => plan_parameters(cz, tol)?,
        (None, Some(n), Some(m)) => QuadraturePlan::new(cz, n, m)?,
        _ => {
            return Err(Error::InvalidArgument(
                "give --tol or both --N and --M".into(),
            ))
        }
    };
    let v = quadrature_estimate(&plan)?;

    let mut inputs = vec![("c", rat_json(&c))];
    match args.tol {
        Some(tol) => inputs.push(("tol", Json::Float(tol))),
        None => {
            inputs.push(("N", Json::from(plan.depth())));
            inputs.push(("M", Json::from(plan.nodes())));
        }
    }
    if let Some(r) = &args.require_verdict {
        inputs.push(("require_verdict", Json::str(r.as_str())));
    }

    let mut out = Outcome::new("az-pair", Json::obj(inputs), certified_json(&plan, &v));
    let mut thresholds = vec![BogomolovConstant::AdQAb, BogomolovConstant::Ad2Power];
    if let Some((_, t)) = requirement {
        if !thresholds.contains(&t) {
            thresholds.push(t);
        }
    }
    for t in thresholds {
        let (j, verdict) = comparison(&v, t);
        out.comparisons.push(j);
        if let Some((want, wanted_t)) = requirement {
            if wanted_t == t && verdict != want {
                out.verdict_unmet = true;
            }
        }
    }
    Ok(out)
}

fn repro_paper() -> Result<Outcome> {
    let plan = QuadraturePlan::new(Complex64::new(-1.0, 0.0), 13, 1 << 24)?;
    let v = quadrature_estimate(&plan)?;
    let estimate_ok = (v.estimate - REPRO_ESTIMATE).abs() <= REPRO_ESTIMATE_TOL;
    let budget_ok = v.analytic_budget <= REPRO_BUDGET_CAP;
    let inputs = Json::obj([
        ("c", Json::str("-1/1")),
        ("N", Json::from(13u32)),
        ("M", Json::from(1u64 << 24)),
    ]);
    let mut out = Outcome::new("repro-paper", inputs, certified_json(&plan, &v));
    out.comparisons.push(Json::obj([
        ("threshold", Json::str("reference estimate")),
        ("value", Json::Float(REPRO_ESTIMATE)),
        ("tolerance", Json::Float(REPRO_ESTIMATE_TOL)),
        (
            "verdict",
            Json::str(if estimate_ok { "Pass" } else { "Fail" }),
        ),
    ]));
    out.comparisons.push(Json::obj([
        ("threshold", Json::str("budget cap")),
        ("value", Json::Float(REPRO_BUDGET_CAP)),
        (
            "verdict",
            Json::str(if budget_ok { "Pass" } else { "Fail" }),
        ),
    ]));
    for t in [BogomolovConstant::AdQAb, BogomolovConstant::Ad2Power] {
        out.comparisons.push(comparison(&v, t).0);
    }
    out.verdict_unmet = !(estimate_ok && budget_ok);
    Ok(out)
}

fn quadratic(q: &QuadraticArgs) -> Result<(BigRational, BigRational, BigRational)> {
    Ok((rat(&q.a)?, rat(&q.b)?, rat(&q.c)?))
}

fn quadratic_inputs(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
) -> Vec<(&'static str, Json)> {
    vec![("A", rat_json(a)), ("B", rat_json(b)), ("C", rat_json(c))]
}

pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::AzPair(args) => az_pair(args),
        Command::ReproPaper => repro_paper(),
        Command::Height { alpha } => {
            let a = rat(alpha)?;
            let h = weil_height_rational(&a);
            Ok(Outcome::new(
                "height",
                Json::obj([("alpha", rat_json(&a))]),
                height_json(&h),
            ))
        }
        Command::Canheight { c, alpha, tol } => {
            let (c, a) = (rat(c)?, rat(alpha)?);
            let h = canonical_height(&c, &a, *tol)?;
            let inputs = Json::obj([
                ("c", rat_json(&c)),
                ("alpha", rat_json(&a)),
                ("tol", Json::Float(*tol)),
            ]);
            Ok(Outcome::new("canheight", inputs, height_json(&h)))
        }
        Command::MinpolyHeight { coeffs } => {
            let cs = coeffs
                .iter()
                .map(|s| int(s.trim()))
                .collect::<Result<Vec<_>>>()?;
            let f = IntPolynomial::from_descending(cs);
            let h = height_from_minpoly(&f)?;
            let inputs = Json::obj([("polynomial", Json::Str(f.to_string()))]);
            Ok(Outcome::new("minpoly-height", inputs, height_json(&h)))
        }
        Command::Pcf { c } => {
            let c = rat(c)?;
            let result = match classify_critical_orbit(&c)? {
                CriticalOrbit::Pcf { preperiod, period } => Json::obj([
                    ("classification", Json::str("PCF")),
                    ("preperiod", Json::from(preperiod)),
                    ("period", Json::from(period)),
                ]),
                CriticalOrbit::Escaping { step } => Json::obj([
                    ("classification", Json::str("Escaping")),
                    ("step", Json::from(step)),
                ]),
            };
            Ok(Outcome::new(
                "pcf",
                Json::obj([("c", rat_json(&c))]),
                result,
            ))
        }
        Command::Stability { c, alpha } => {
            let (c, a) = (int(c)?, int(alpha)?);
            let result = match stability_certificate(&c, &a) {
                StabilityVerdict::CertifiedStable(cert) => Json::obj([
                    ("verdict", Json::str("CertifiedStable")),
                    ("family", Json::str(cert.family.label())),
                    ("prime", Json::BigInt(cert.prime.to_string())),
                    ("witness", Json::Str(cert.witness.to_string())),
                    ("reason", Json::Str(format!("{}-Eisenstein", cert.prime))),
                ]),
                StabilityVerdict::Unknown => Json::obj([("verdict", Json::str("Unknown"))]),
            };
            let inputs = Json::obj([
                ("c", Json::BigInt(c.to_string())),
                ("alpha", Json::BigInt(a.to_string())),
            ]);
            Ok(Outcome::new("stability", inputs, result))
        }
        Command::Disc(args) => {
            let (a, b, c) = quadratic(&args.quadratic)?;
            let d = disc_iterate(&a, &b, &c, args.n)?;
            let mut result = vec![
                ("discriminant", rat_json(&d)),
                ("is_square", Json::Bool(is_rational_square(&d))),
            ];
            if [&a, &b, &c].iter().all(|q| rational::is_integer(q)) && args.n <= 3 {
                let f = IntPolynomial::new(vec![
                    c.numer().clone(),
                    b.numer().clone(),
                    a.numer().clone(),
                ]);
                let mut p = f.clone();
                for _ in 1..args.n {
                    p = f.compose(&p);
                }
                result.push(("oracle_agrees", Json::Bool(disc_oracle(&p)? == d)));
            }
            let mut inputs = quadratic_inputs(&a, &b, &c);
            inputs.push(("n", Json::from(args.n)));
            Ok(Outcome::new("disc", Json::obj(inputs), Json::obj(result)))
        }
        Command::Cheb { d } => Ok(Outcome::new(
            "cheb",
            Json::obj([("d", Json::from(*d))]),
            poly_json(&chebyshev(*d)),
        )),
        Command::Permcheck { n, generators } => {
            let gens = generators
                .iter()
                .map(|g| Permutation::parse_cycles(*n, g))
                .collect::<Result<Vec<_>>>()?;
            let r = verify_abelian_transitive_lemmas(&group_closure(*n, &gens)?);
            let inputs = Json::obj([
                ("n", Json::from(*n)),
                (
                    "generators",
                    Json::Arr(gens.iter().map(|g| Json::Str(g.to_string())).collect()),
                ),
            ]);
            let result = Json::obj([
                ("order", Json::from(r.order)),
                ("abelian", Json::Bool(r.abelian)),
                ("transitive", Json::Bool(r.transitive)),
                ("order_equals_degree", Json::Bool(r.order_equals_degree)),
                ("cycle_structure_ok", Json::Bool(r.cycle_structure_ok)),
                ("in_alternating", Json::Bool(r.in_alternating)),
                ("cyclic", Json::Bool(r.cyclic)),
                (
                    "violations",
                    Json::Arr(r.violations.into_iter().map(Json::Str).collect()),
                ),
            ]);
            Ok(Outcome::new("permcheck", inputs, result))
        }
        Command::Permsweep { n } => {
            let r = sweep_pair_generated(*n, *n > 5)?;
            let result = Json::obj([
                ("pairs", Json::from(r.pairs)),
                ("distinct_groups", Json::from(r.distinct_groups)),
                ("abelian_transitive", Json::from(r.abelian_transitive)),
                (
                    "violations",
                    Json::Arr(r.violations.into_iter().map(Json::Str).collect()),
                ),
            ]);
            Ok(Outcome::new(
                "permsweep",
                Json::obj([("n", Json::from(*n))]),
                result,
            ))
        }
        Command::Bounds { d, n } => {
            let (lo, hi) = galois_order_bounds(*d, *n)?;
            let inputs = Json::obj([("d", Json::from(*d)), ("n", Json::from(*n))]);
            let result = Json::obj([
                ("lower", Json::BigInt(lo.to_string())),
                ("upper", Json::BigInt(hi.to_string())),
            ]);
            Ok(Outcome::new("bounds", inputs, result))
        }
        Command::Preimage { c, alpha, n } => {
            let (c, a) = (rat(c)?, rat(alpha)?);
            let p = preimage_polynomial(&c, &a, *n)?;
            let mut result = poly_json(&p.numerator);
            if let Json::Obj(fields) = &mut result {
                fields.push((
                    "denominator".into(),
                    Json::BigInt(p.denominator.to_string()),
                ));
            }
            let inputs = Json::obj([
                ("c", rat_json(&c)),
                ("alpha", rat_json(&a)),
                ("n", Json::from(*n)),
            ]);
            Ok(Outcome::new("preimage", inputs, result))
        }
        Command::Demo { c, alpha, n } => {
            let (c, a) = (rat(c)?, rat(alpha)?);
            let levels = preimage_height_demo(&c, &a, *n)?;
            let result = Json::Arr(
                levels
                    .iter()
                    .map(|l| {
                        Json::obj([
                            ("level", Json::from(l.level)),
                            ("mean_height", Json::Float(l.mean_height)),
                            ("max_residual", Json::Float(l.max_residual)),
                        ])
                    })
                    .collect(),
            );
            let inputs = Json::obj([
                ("c", rat_json(&c)),
                ("alpha", rat_json(&a)),
                ("n", Json::from(*n)),
            ]);
            Ok(Outcome::new(
                "demo",
                inputs,
                Json::obj([("levels", result)]),
            ))
        }
        Command::Normalize(q) => {
            let (a, b, c) = quadratic(q)?;
            let norm = normalize_quadratic(&a, &b, &c)?;
            let result = Json::obj([
                ("c", rat_json(&norm.c)),
                ("gamma_scale", rat_json(&norm.conjugacy.a)),
                ("gamma_shift", rat_json(&norm.conjugacy.b)),
                ("monic", Json::Bool(norm.conjugacy.a.is_one())),
            ]);
            Ok(Outcome::new(
                "normalize",
                Json::obj(quadratic_inputs(&a, &b, &c)),
                result,
            ))
        }
    }
}
