//! Request handlers. Output objects are `serde_json::Value` maps, whose keys
//! render in sorted order, so identical requests give identical bytes.

use num::Zero;
use serde_json::{json, Value};

use super::schema::*;
use super::{resolve_op, CliError, Command, Options};
use crate::characters::{character, littlewood_rhs, schur_expansion_z, TorusPoint};
use crate::kernel::{det, exp_nilpotent, format_rational, invert_unitriangular, Matrix, Rational};
use crate::moments::{
    b2_coefficient, b_coefficient, eigenvalue_sum, eigenvalue_sum_at_zero, monic_orthogonal,
};
use crate::partitions::{doubles, enumerate, Partition};
use crate::polybasis::PolyBasis;
use crate::schurgen::{
    all_routes, bialternant, dual_jacobi_trudi, expansion_coeffs, giambelli, jacobi_trudi, pluecker_check,
    seeded_points, EMatrix, EvalPoint, HMatrix, SchurExpansion,
};
use crate::symfun::{complete_h, littlewood_richardson, monomial_sums, schur_t};
use crate::tauseries::{kp_coefficient_check, tau_pair, tau_phi};
use crate::walks::{
    discrete_time_weights, generator, semigroup_check, states, transition_weight,
};

pub struct Response {
    pub value: Value,
    /// False when a checked identity failed.
    pub passed: bool,
}

type Res = Result<Response, CliError>;

fn ok(value: Value) -> Res {
    Ok(Response { value, passed: true })
}

fn checked(value: Value, passed: bool) -> Res {
    Ok(Response { value, passed })
}

fn q(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn qs(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(q).collect())
}

fn rows(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| qs(m.row(i))).collect())
}

fn terms(e: &SchurExpansion) -> Value {
    Value::Array(
        e.terms()
            .iter()
            .map(|(mu, c)| json!({"mu": mu, "coeff": q(c)}))
            .collect(),
    )
}

fn point(x: &[Q]) -> Result<EvalPoint, CliError> {
    Ok(EvalPoint::new(rationals(x))?)
}

pub fn dispatch(cmd: Command, v: Value, opts: &Options) -> Res {
    let (op, body) = split_op(v)?;
    let op = resolve_op(cmd, op.as_deref())?;
    match cmd {
        Command::Schur => schur(op, body, opts),
        Command::Expand => expand(op, body, opts),
        Command::Verify => verify(op, body, opts),
        Command::Character => characters(op, body),
        Command::Littlewood => littlewood(body, opts),
        Command::Tau => tau(op, body, opts),
        Command::Moments => moments(op, body, opts),
        Command::Walk => walk(op, body),
        Command::Partitions => partitions(op, body, opts),
    }
}

fn schur(op: &str, body: Value, opts: &Options) -> Res {
    let r: SchurReq = decode(body)?;
    let phi = r.basis.build("/basis", opts.truncation)?;
    let x = point(&r.x)?;
    let n = x.n();
    let head = |key: &str, v: Value| json!({"partition": r.lambda, "n": n, key: v});
    match op {
        "routes" => {
            let routes = all_routes(&phi, &r.lambda, &x)?;
            ok(json!({
                "partition": r.lambda,
                "n": n,
                "routes": {
                    "bialternant": q(&routes.bialternant),
                    "jacobi_trudi": q(&routes.jacobi_trudi),
                    "dual": q(&routes.dual),
                    "giambelli": q(&routes.giambelli),
                },
                "agree": routes.agree(),
            }))
        }
        "bialternant" => ok(head("value", q(&bialternant(&phi, &r.lambda, &x)?))),
        "jacobi_trudi" => ok(head("value", q(&jacobi_trudi(&phi, &r.lambda, &x)?))),
        "dual_jacobi_trudi" => ok(head("value", q(&dual_jacobi_trudi(&phi, &r.lambda, &x)?))),
        "giambelli" => ok(head("value", q(&giambelli(&phi, &r.lambda, &x)?))),
        "build_H" => {
            let depth = need(&r.depth, "/depth")?;
            let h = HMatrix::build(&phi, &x, depth)?;
            ok(json!({
                "n": n,
                "depth": depth,
                "min_col": h.min_col(),
                "rows": rows(&h.block(h.min_col(), n as i64)?),
            }))
        }
        "build_E" => {
            let depth = need(&r.depth, "/depth")?;
            let e = EMatrix::build(&phi, &x, depth)?;
            ok(json!({"n": n, "depth": depth, "rows": rows(e.matrix())}))
        }
        _ => unreachable!("resolved against the operation table"),
    }
}

fn expand(op: &str, body: Value, opts: &Options) -> Res {
    match op {
        "expansion_coeffs" => {
            let r: ExpandReq = decode(body)?;
            let phi = r.basis.build("/basis", opts.truncation)?;
            let e = expansion_coeffs(&phi, &r.lambda, r.n)?;
            ok(json!({"lambda": r.lambda, "n": r.n, "terms": terms(&e)}))
        }
        "monomial_sums" => {
            let r: SumsReq = decode(body)?;
            let t = monomial_sums(&rationals(&r.x), r.k);
            ok(json!({"t": qs(t.values())}))
        }
        "complete_h" => {
            let r: CompleteReq = decode(body)?;
            ok(json!({"value": q(&complete_h(&r.t, r.k))}))
        }
        "schur_t" => {
            let r: SchurTReq = decode(body)?;
            ok(json!({"value": q(&schur_t(&r.lambda, &r.t))}))
        }
        "monomial_basis" => {
            let r: SizeReq = decode(body)?;
            let n = r
                .n
                .or(opts.truncation)
                .ok_or_else(|| CliError::schema("/N", "missing truncation N (or --truncation)"))?;
            ok(json!({"coeffs": rows(PolyBasis::monomial(n).coeffs())}))
        }
        "from_recursion" => {
            let r: JplusReq = decode(body)?;
            let b = PolyBasis::from_recursion(&matrix(&r.jplus)?)?;
            ok(json!({"coeffs": rows(b.coeffs())}))
        }
        "recursion_of" => {
            let r: BasisOnlyReq = decode(body)?;
            let rec = r.basis.build("/basis", opts.truncation)?.recursion();
            ok(json!({
                "j": rows(&rec.j),
                "jtilde": rows(&rec.jtilde),
                "jplus": rows(&rec.jplus),
                "exact_rows": rec.exact_rows(),
            }))
        }
        "evaluate" => {
            let r: EvaluateReq = decode(body)?;
            let phi = r.basis.build("/basis", opts.truncation)?;
            ok(json!({"value": q(&phi.evaluate(r.i, &r.x.0)?)}))
        }
        "window" => {
            let r: WindowReq = decode(body)?;
            let phi = r.basis.build("/basis", opts.truncation)?;
            ok(json!({"window": rows(&phi.window(&rationals(&r.x), r.k)?)}))
        }
        "det" => {
            let r: MatrixReq = decode(body)?;
            ok(json!({"value": q(&det(&matrix(&r.matrix)?)?)}))
        }
        "invert_unitriangular" => {
            let r: MatrixReq = decode(body)?;
            ok(json!({"inverse": rows(&invert_unitriangular(&matrix(&r.matrix)?)?)}))
        }
        "exp_nilpotent" => {
            let r: MatrixReq = decode(body)?;
            let t = r.t.map(|t| t.0).unwrap_or_else(|| Rational::from_integer(1.into()));
            ok(json!({"exp": rows(&exp_nilpotent(&matrix(&r.matrix)?, &t)?)}))
        }
        _ => unreachable!("resolved against the operation table"),
    }
}

fn verify(op: &str, body: Value, opts: &Options) -> Res {
    match op {
        "sweep" => {
            let r: SweepReq = decode(body)?;
            let phi = r.basis.build("/basis", opts.truncation)?;
            let n = r.n.unwrap_or_else(|| r.lambda.len().max(1));
            let count = r.points.unwrap_or(5);
            let mut all = true;
            let mut values = Vec::new();
            let mut out = Vec::new();
            for x in seeded_points(n, count, opts.seed) {
                let routes = all_routes(&phi, &r.lambda, &x)?;
                all &= routes.agree();
                values.push(routes.bialternant.clone());
                out.push(json!({"x": qs(x.values()), "value": q(&routes.bialternant), "agree": routes.agree()}));
            }
            let common = match values.split_first() {
                Some((v, rest)) if rest.iter().all(|w| w == v) => q(v),
                _ => Value::Null,
            };
            checked(
                json!({
                    "partition": r.lambda,
                    "n": n,
                    "seed": opts.seed,
                    "points": out,
                    "value": common,
                    "agree": all,
                }),
                all,
            )
        }
        "pluecker_check" => {
            let r: PlueckerReq = decode(body)?;
            let family = r.family.into_iter().map(|e| (e.mu, e.coeff.0)).collect();
            let passed = pluecker_check(&family, &r.lambda)?;
            checked(json!({"lambda": r.lambda, "passed": passed}), passed)
        }
        "kp_coefficient_check" => {
            let r: ExpandReq = decode(body)?;
            let phi = r.basis.build("/basis", opts.truncation)?;
            let passed = kp_coefficient_check(&phi, r.n, &r.lambda)?;
            checked(json!({"lambda": r.lambda, "n": r.n, "passed": passed}), passed)
        }
        _ => unreachable!("resolved against the operation table"),
    }
}

fn characters(op: &str, body: Value) -> Res {
    match op {
        "character" => {
            let r: CharacterReq = decode(body)?;
            if r.cutoff.is_some() {
                return Err(CliError::schema("/cutoff", "character takes no cutoff"));
            }
            let p = TorusPoint::new(rationals(&r.x))?;
            let v = character(r.group, &r.lambda, &p)?;
            ok(json!({"group": r.group, "partition": r.lambda, "value": q(&v)}))
        }
        "schur_expansion_z" => {
            let r: GroupExpandReq = decode(body)?;
            let e = schur_expansion_z(r.group, &r.lambda, r.n)?;
            ok(json!({"group": r.group, "partition": r.lambda, "n": r.n, "terms": terms(&e)}))
        }
        _ => unreachable!("resolved against the operation table"),
    }
}

fn littlewood(body: Value, opts: &Options) -> Res {
    let r: CharacterReq = decode(body)?;
    let cutoff = r.cutoff.or(opts.cutoff).unwrap_or_else(|| r.lambda.weight());
    let p = TorusPoint::new(rationals(&r.x))?;
    let v = littlewood_rhs(r.group, &r.lambda, &p, cutoff)?;
    ok(json!({"group": r.group, "partition": r.lambda, "cutoff": cutoff, "value": q(&v)}))
}

fn tau(op: &str, body: Value, opts: &Options) -> Res {
    let r: TauReq = decode(body)?;
    let cutoff = r
        .cutoff
        .or(opts.cutoff)
        .ok_or_else(|| CliError::schema("/cutoff", "missing cutoff (or --cutoff)"))?;
    // without an explicit N, size the basis to the series
    let size = opts.truncation.or(Some(cutoff + r.n));
    let phi = r.basis.build("/basis", size)?;
    let v = match op {
        "tau_phi" => {
            if r.theta.is_some() {
                return Err(CliError::schema("/theta", "tau_phi takes a single basis"));
            }
            tau_phi(&phi, r.n, &r.t, &r.s, cutoff)?
        }
        "tau_pair" => {
            let theta = need(&r.theta, "/theta")?.build("/theta", size)?;
            tau_pair(&phi, &theta, r.n, &r.t, &r.s, cutoff)?
        }
        _ => unreachable!("resolved against the operation table"),
    };
    ok(serde_json::to_value(v).expect("serializable"))
}

fn moments(op: &str, body: Value, opts: &Options) -> Res {
    let r: MomentsReq = decode(body)?;
    let measure = || need(&r.measure, "/measure");
    let bimeasure = || need(&r.bimeasure, "/bimeasure");
    let n = || need(&r.n, "/n");
    let lambda = || need(&r.lambda, "/lambda");
    match op {
        "B_coefficient" => {
            let (lam, n) = (lambda()?, n()?);
            ok(json!({"lambda": lam, "n": n, "value": q(&b_coefficient(&measure()?, &lam, n)?)}))
        }
        "hankel" => ok(json!({"hankel": rows(&measure()?.hankel(need(&r.size, "/size")?))})),
        "eigenvalue_sum" => {
            let mu = measure()?;
            let n = n()?;
            let cutoff = r
                .cutoff
                .or(opts.cutoff)
                .ok_or_else(|| CliError::schema("/cutoff", "missing cutoff (or --cutoff)"))?;
            ok(json!({
                "n": n,
                "cutoff": cutoff,
                "value": q(&eigenvalue_sum(&mu, n, &r.t, cutoff)?),
                "at_zero": q(&eigenvalue_sum_at_zero(&mu, n)),
            }))
        }
        "bimoment" => ok(json!({"bimoment": rows(&bimeasure()?.bimoment(need(&r.size, "/size")?))})),
        "B2_coefficient" => {
            let (lam, nu, n) = (lambda()?, need(&r.nu, "/nu")?, n()?);
            let v = b2_coefficient(&bimeasure()?, &lam, &nu, n)?;
            ok(json!({"lambda": lam, "nu": nu, "n": n, "value": q(&v)}))
        }
        "monic_orthogonal" => {
            let p = monic_orthogonal(&measure()?, need(&r.k, "/k")?)?;
            ok(json!({"coeffs": rows(p.coeffs())}))
        }
        _ => unreachable!("resolved against the operation table"),
    }
}

fn walk(op: &str, body: Value) -> Res {
    let r: WalkReq = decode(body)?;
    let n = || need(&r.n, "/n");
    let mu = || need(&r.mu, "/mu");
    let t = || need(&r.t, "/t").map(|t| t.0);
    match op {
        "transition_weight" => {
            let (n, mu, t) = (n()?, mu()?, t()?);
            let finals = match &r.lambda {
                Some(l) => vec![l.clone()],
                None => states(&r.rates, n),
            };
            let mut table = Vec::new();
            for lam in finals {
                let w = transition_weight(&r.rates, &lam, &mu, n, &t)?;
                if !w.is_zero() || r.lambda.is_some() {
                    table.push(json!({"lambda": lam, "weight": q(&w)}));
                }
            }
            ok(json!({"n": n, "mu": mu, "t": q(&t), "unnormalized": true, "weights": table}))
        }
        "generator" => ok(json!({"generator": rows(&generator(&r.rates))})),
        "semigroup_check" => {
            let (n, mu, t) = (n()?, mu()?, t()?);
            let lam = need(&r.lambda, "/lambda")?;
            let passed = semigroup_check(&r.rates, &lam, &mu, n, &t)?;
            checked(json!({"lambda": lam, "mu": mu, "n": n, "passed": passed}), passed)
        }
        "discrete_time_weights" => {
            let (n, mu) = (n()?, mu()?);
            let steps = need(&r.steps, "/steps")?;
            let w = discrete_time_weights(&r.rates, &mu, n, steps)?;
            let mut v = serde_json::to_value(&w).expect("serializable");
            v["steps"] = json!(steps);
            ok(v)
        }
        _ => unreachable!("resolved against the operation table"),
    }
}

fn partitions(op: &str, body: Value, opts: &Options) -> Res {
    let r: PartitionsReq = decode(body)?;
    let lambda = || need(&r.lambda, "/lambda");
    match op {
        "enumerate" => {
            let w = r
                .max_weight
                .or(opts.cutoff)
                .ok_or_else(|| CliError::schema("/max_weight", "missing required field"))?;
            let l = r.max_length.unwrap_or(w);
            ok(json!({"partitions": enumerate(w, l)}))
        }
        "conjugate" => ok(json!({"conjugate": lambda()?.conjugate()})),
        "particle_coords" => {
            let lam = lambda()?;
            let n = need(&r.n, "/n")?;
            let len = r.len.unwrap_or(n);
            ok(json!({"coords": lam.particle_coords(n, len)?}))
        }
        "frobenius" => {
            let lam = lambda()?;
            let f = lam.frobenius();
            let back = Partition::from_frobenius(&f)?;
            ok(json!({"arms": f.arms, "legs": f.legs, "rank": f.rank(), "roundtrip": back == lam}))
        }
        "doubles" => {
            let (d, dp) = doubles(&need(&r.alpha, "/alpha")?)?;
            ok(json!({"d": d, "d_prime": dp}))
        }
        "littlewood_richardson" => {
            let (mu, nu, lam) = (need(&r.mu, "/mu")?, need(&r.nu, "/nu")?, lambda()?);
            ok(json!({"mu": mu, "nu": nu, "lambda": lam, "value": littlewood_richardson(&mu, &nu, &lam)?}))
        }
        _ => unreachable!("resolved against the operation table"),
    }
}
