//! Acceptance run: nine exact checks, one PASS/FAIL line each. Exits nonzero
//! when any check fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use genschur::characters::{character, littlewood_rhs, Group, TorusPoint};
use genschur::kernel::rational::{factorial, sign};
use genschur::kernel::{frac, int, Matrix, Rational};
use genschur::moments::{
    b2_from_matrix, b_coefficient, eigenvalue_sum, eigenvalue_sum_at_zero, factorized_b2, DiscreteMeasure,
};
use genschur::partitions::{enumerate, Partition};
use genschur::polybasis::PolyBasis;
use genschur::schurgen::{all_routes, bialternant, classical_schur, expansion_coeffs, seeded_points, EMatrix, HMatrix};
use genschur::symfun::{complete, elementary, FlowVector};
use genschur::tauseries::kp_coefficient_check;
use genschur::walks::{chapman_kolmogorov_check, semigroup_check, states, transition_weight, RateSpec};

const SEED: u64 = 20;
const POINTS: usize = 5;
const N: usize = 12;

type Outcome = Result<String, String>;

fn bases() -> Vec<(&'static str, PolyBasis)> {
    vec![
        ("monomial", PolyBasis::monomial(N)),
        ("sp", PolyBasis::sp(N)),
        ("so_even", PolyBasis::so_even(N)),
        ("so_odd", PolyBasis::so_odd(N)),
    ]
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn four_routes() -> Outcome {
    let mut count = 0;
    for (name, phi) in bases() {
        for n in 1..=3 {
            for x in seeded_points(n, POINTS, SEED) {
                for lam in enumerate(6, n) {
                    let r = all_routes(&phi, &lam, &x).map_err(|e| e.to_string())?;
                    ensure(r.agree(), || format!("{name} n={n} {lam} at {:?}: {r:?}", x.to_strings()))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} cases"))
}

fn grassmannian() -> Outcome {
    let mut count = 0;
    for (name, phi) in bases() {
        for n in 1..=3 {
            for x in seeded_points(n, POINTS, SEED) {
                for depth in n..=8 {
                    let h = HMatrix::build(&phi, &x, depth).map_err(|e| e.to_string())?;
                    let rep = h.grassmannian_check(&phi, &x).map_err(|e| e.to_string())?;
                    ensure(rep.passed, || format!("{name} n={n} depth={depth}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} windows"))
}

fn duality() -> Outcome {
    let mut count = 0;
    for (name, phi) in bases() {
        for n in 1..=3 {
            for x in seeded_points(n, POINTS, SEED) {
                for depth in 1..=8 {
                    let h = HMatrix::build(&phi, &x, depth).map_err(|e| e.to_string())?;
                    let e = EMatrix::build(&phi, &x, depth).map_err(|e| e.to_string())?;
                    let (eh, he) = e.duality_check(&h).map_err(|e| e.to_string())?;
                    ensure(eh.passed && he.passed, || format!("{name} n={n} depth={depth}"))?;
                    count += 1;
                }
            }
        }
    }
    // monomial basis: the stored entries are the classical e and h, and the
    // classical orthogonality holds
    let mono = PolyBasis::monomial(N);
    for n in 1..=3 {
        for x in seeded_points(n, POINTS, SEED) {
            let h = HMatrix::build(&mono, &x, 8).map_err(|e| e.to_string())?;
            let e = EMatrix::build(&mono, &x, 8).map_err(|e| e.to_string())?;
            for m in 1..=n as i64 {
                for s in 0..=(7 - n as i64) {
                    ensure(e.e(m, s).unwrap() == elementary(x.values(), m + s), || format!("e^{m}_({s})"))?;
                }
            }
            for j in 0..n as i64 {
                for m in -(j)..=(8 - n as i64 - j) {
                    ensure(h.h(j, m).unwrap() == complete(x.values(), m + j), || format!("h^({j})_{m}"))?;
                }
            }
            for i in 0..8i64 {
                for j in 0..8i64 {
                    let s: Rational = (j..=i)
                        .map(|k| sign(i - k) * elementary(x.values(), i - k) * complete(x.values(), k - j))
                        .sum();
                    ensure(s == if i == j { int(1) } else { int(0) }, || format!("e/h orthogonality {i},{j}"))?;
                }
            }
        }
    }
    Ok(format!("{count} windows plus classical e/h"))
}

fn cauchy_binet_expansion() -> Outcome {
    let mut count = 0;
    for (name, phi) in bases() {
        for n in 1..=3 {
            for x in seeded_points(n, POINTS, SEED) {
                for lam in enumerate(6, n) {
                    let exp = expansion_coeffs(&phi, &lam, n).map_err(|e| e.to_string())?;
                    let lhs = exp.evaluate_with(|mu| classical_schur(mu, &x)).map_err(|e| e.to_string())?;
                    let rhs = bialternant(&phi, &lam, &x).map_err(|e| e.to_string())?;
                    ensure(lhs == rhs, || format!("{name} n={n} {lam}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} cases"))
}

fn characters() -> Outcome {
    let points = [
        [int(2), frac(1, 3)],
        [int(3), frac(-1, 2)],
        [frac(5, 2), int(4)],
    ];
    let mut count = 0;
    for g in Group::ALL {
        for p in &points {
            let p = TorusPoint::new(p.to_vec()).map_err(|e| e.to_string())?;
            for lam in enumerate(4, 2) {
                let c = character(g, &lam, &p).map_err(|e| e.to_string())?;
                let l = littlewood_rhs(g, &lam, &p, lam.weight()).map_err(|e| e.to_string())?;
                ensure(c == l, || format!("{g:?} {lam}: {c} vs {l}"))?;
                count += 1;
            }
        }
    }
    let id = TorusPoint::new(vec![int(1), int(1)]).unwrap();
    let dim = character(Group::Sp, &Partition::of(&[1]), &id).map_err(|e| e.to_string())?;
    ensure(dim == int(4), || format!("Sp(4) defining character at identity = {dim}"))?;
    Ok(format!("{count} cases, Sp(4) (1) at identity = 4"))
}

fn pluecker() -> Outcome {
    let mut count = 0;
    for (name, phi) in bases() {
        for n in 1..=3 {
            for lam in enumerate(6, n).into_iter().filter(|l| l.frobenius_rank() <= 2) {
                let ok = kp_coefficient_check(&phi, n, &lam).map_err(|e| e.to_string())?;
                ensure(ok, || format!("{name} n={n} {lam}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} families"))
}

fn measures() -> Vec<DiscreteMeasure> {
    let m = |nodes: Vec<Rational>, weights: Vec<Rational>| DiscreteMeasure::new(nodes, weights).unwrap();
    vec![
        m(vec![int(0), int(1)], vec![int(1), int(1)]),
        m(vec![int(-1), int(1)], vec![int(1), int(1)]),
        m(vec![int(-1), frac(1, 2), int(2)], vec![frac(1, 3), int(1), frac(1, 2)]),
        m(vec![int(0), int(1), int(2), int(3)], vec![int(1), int(2), int(3), int(4)]),
    ]
}

fn matrix_model() -> Outcome {
    let zero = FlowVector::zero();
    for (k, mu) in measures().iter().enumerate() {
        for n in 1..=3 {
            let z = eigenvalue_sum(mu, n, &zero, 4).map_err(|e| e.to_string())?;
            let z0 = eigenvalue_sum_at_zero(mu, n);
            let b = b_coefficient(mu, &Partition::zero(), n).map_err(|e| e.to_string())?;
            ensure(z == b && z0 == b, || format!("measure {k} n={n}: {z} / {z0} vs {b}"))?;
        }
    }
    let worked = eigenvalue_sum_at_zero(&measures()[0], 2);
    ensure(worked == int(1), || format!("two-node worked value {worked}"))?;

    // bimoments of M = θᵗ φ against the Cauchy-Binet double sum
    let theta = Matrix::from_fn(6, 6, |i, j| frac((i * 2 + j * j + 2) as i64 % 5 - 2, (i + 2) as i64));
    let phi = Matrix::from_fn(6, 6, |i, j| {
        if j > i {
            int(0)
        } else {
            frac((i * 3 + j * 5 + 1) as i64 % 7 - 3, (j + 1) as i64)
        }
    });
    let m = theta.transpose().mul(&phi).unwrap();
    let mut count = 0;
    for n in 1..=3 {
        for lam in enumerate(3, n) {
            for nu in enumerate(3, n) {
                let lhs = b2_from_matrix(&m, &lam, &nu, n).map_err(|e| e.to_string())?;
                let rhs = factorized_b2(&theta, &phi, &lam, &nu, n).map_err(|e| e.to_string())?;
                ensure(lhs == rhs, || format!("B2 n={n} {lam} {nu}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("4 measures x n<=3, worked value 1, {count} bimoment minors"))
}

fn walks() -> Outcome {
    let r = RateSpec::new(vec![int(1), int(2), frac(1, 2), int(3), int(1)]).unwrap();
    let (s, t) = (frac(1, 3), frac(5, 4));
    let mut count = 0;
    for n in 1..=2 {
        let small: Vec<Partition> = states(&r, n).into_iter().filter(|p| p.weight() <= 3).collect();
        for lam in &small {
            for mu in &small {
                let ok = semigroup_check(&r, lam, mu, n, &t).map_err(|e| e.to_string())?;
                ensure(ok, || format!("semigroup n={n} {mu} -> {lam}"))?;
                let ck = chapman_kolmogorov_check(&r, lam, mu, n, &s, &t).map_err(|e| e.to_string())?;
                ensure(ck, || format!("Chapman-Kolmogorov n={n} {mu} -> {lam}"))?;
                count += 1;
            }
        }
    }
    let ones = RateSpec::uniform(int(1), 8).unwrap();
    for d in 0..=7usize {
        let w = transition_weight(&ones, &Partition::of(&[d]), &Partition::zero(), 1, &t).unwrap();
        let want = (0..d).fold(int(1), |acc, _| acc * &t) / Rational::from_integer(factorial(d));
        ensure(w == want, || format!("single particle d={d}"))?;
    }
    Ok(format!("{count} state pairs, single-particle t^d/d! for d<=7"))
}

fn cli_golden() -> Outcome {
    let cases = common::corpus().len();
    ensure(cases >= 20, || format!("only {cases} requests"))?;
    let (commands, failures) = common::check_corpus(false);
    ensure(commands.len() == 9, || format!("subcommands covered: {commands:?}"))?;
    ensure(failures.is_empty(), || failures.join("\n"))?;
    Ok(format!("{cases} requests over {} subcommands", commands.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("four-route equality", four_routes),
        ("Grassmannian equality", grassmannian),
        ("E/H duality", duality),
        ("Cauchy-Binet expansion", cauchy_binet_expansion),
        ("character cross-validation", characters),
        ("Plücker property of coefficients", pluecker),
        ("matrix-model identity", matrix_model),
        ("walks", walks),
        ("CLI determinism", cli_golden),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
