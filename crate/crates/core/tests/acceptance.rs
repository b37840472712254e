use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use dunkl::sampling::Sampler;
use dunkl::{
    parse_polynomial, rho, DunklContext, Monomial, MultiplicityFunction, Polynomial,
    RationalVector, RootSystem, Scalar, Suite, VerifyConfig,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn system(name: &str) -> RootSystem {
    RootSystem::from_name(name).unwrap()
}

fn random_context(name: &str, sampler: &mut Sampler) -> DunklContext {
    let sys = system(name);
    let kappa = sampler.kappa(&sys);
    DunklContext::new(sys, kappa).unwrap()
}

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn commutativity() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    for (k, name) in ["A1dim1", "A1", "A2", "A3", "B2", "B3", "D4"]
        .into_iter()
        .enumerate()
    {
        let mut rng = Sampler::new(1001, k as u64);
        let ctx = random_context(name, &mut rng);
        let n = ctx.dim();
        for _ in 0..25 {
            let p = rng.polynomial(n, 6, 4);
            for _ in 0..5 {
                let t = rng.direction(n);
                let u = rng.direction(n);
                let c = ctx.commutator(&p, &t, &u).map_err(|e| e.to_string())?;
                ensure(c.is_zero(), || {
                    format!("{name}: p={p}, t={t}, u={u} gives {c}")
                })?;
                checks += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {:.1}s", elapsed.as_secs_f64())
    })?;
    Ok(format!(
        "{checks} commutators vanish in {:.1}s",
        elapsed.as_secs_f64()
    ))
}

fn equivariance() -> Outcome {
    let mut checks = 0;
    for (k, name) in ["B2", "A2"].into_iter().enumerate() {
        let mut rng = Sampler::new(1002, k as u64);
        let ctx = random_context(name, &mut rng);
        let n = ctx.dim();
        let words = ctx.system().generator_words(3);
        for _ in 0..10 {
            let p = rng.polynomial(n, 4, 4);
            let u = rng.direction(n);
            for (word, g) in &words {
                let d = ctx
                    .equivariance_defect(&p, &u, g)
                    .map_err(|e| e.to_string())?;
                ensure(d.is_zero(), || {
                    format!("{name}: word {word:?}, p={p}, u={u} gives {d}")
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} conjugations agree"))
}

fn double_sum() -> Outcome {
    let mut checks = 0;
    for (k, name) in ["A2", "B2", "B3"].into_iter().enumerate() {
        let mut rng = Sampler::new(1003, k as u64);
        let ctx = random_context(name, &mut rng);
        let n = ctx.dim();
        for _ in 0..10 {
            let p = rng.polynomial(n, 5, 4);
            let t = rng.direction(n);
            let u = rng.direction(n);
            let d = ctx
                .double_sum_defect(&p, &t, &u)
                .map_err(|e| e.to_string())?;
            ensure(d.is_zero(), || {
                format!("{name}: p={p}, t={t}, u={u} gives {d}")
            })?;
            checks += 1;
        }
    }
    Ok(format!("{checks} double sums vanish"))
}

fn pointwise(suite: Suite, name: &str, seed: u64, note_marker: &str) -> Outcome {
    let sys = system(name);
    let mut config = VerifyConfig::new(suite, seed);
    config.trials = 10;
    config.points = 20;
    let report = dunkl::run_suite(&sys, &config, "acceptance").map_err(|e| e.to_string())?;
    ensure(report.passed(), || report.to_string())?;
    ensure(report.checks_run == 200, || {
        format!("{name}: ran {} checks", report.checks_run)
    })?;
    ensure(report.notes.iter().any(|n| n.contains(note_marker)), || {
        format!("{name}: note missing")
    })?;
    Ok(format!(
        "{name}: {}/{}",
        report.checks_passed, report.checks_run
    ))
}

fn gradient_commutator() -> Outcome {
    let detail = pointwise(Suite::GradientCommutator, "B2", 1004, "divided by <z,v>")?;
    Ok(format!(
        "{detail} points, denominator choice recorded in the report"
    ))
}

fn laplacian_expansion() -> Outcome {
    let mut details = Vec::new();
    for name in ["A1dim1", "A2", "B2"] {
        details.push(pointwise(Suite::LaplacianFormula, name, 1005, "weight 1")?);
    }
    Ok(details.join(", "))
}

fn one_dimensional() -> Outcome {
    let sys = system("A1dim1");
    let kappas = [
        Scalar::frac(1, 2),
        Scalar::frac(-3, 4),
        Scalar::from_int(0),
        Scalar::from_int(5),
        Scalar::frac(7, 3),
    ];
    let z = Polynomial::var(1, 0);
    for kappa in &kappas {
        let ctx = DunklContext::new(
            sys.clone(),
            MultiplicityFunction::constant(&sys, kappa.clone()),
        )
        .unwrap();
        for m in 1..=10u32 {
            let odd = if m % 2 == 1 {
                Scalar::from_int(2)
            } else {
                Scalar::from_int(0)
            };
            let coeff = &Scalar::from_int(m as i64) + &(kappa * &odd);
            let expected = z.pow(m - 1).scale(&coeff);
            let got = ctx.dunkl_j(&z.pow(m), 0).map_err(|e| e.to_string())?;
            ensure(got == expected, || {
                format!("kappa={kappa}, m={m}: got {got}, expected {expected}")
            })?;
        }
    }
    Ok("50 closed forms match".to_string())
}

fn homogeneity_and_reduction() -> Outcome {
    let sys = system("B2");
    let generic = DunklContext::new(
        sys.clone(),
        MultiplicityFunction::from_values(
            &sys,
            vec![Scalar::gaussian(2, 3, -1, 2), Scalar::frac(-5, 4)],
        ),
    )
    .unwrap();
    let zero = DunklContext::new(
        sys.clone(),
        MultiplicityFunction::constant(&sys, Scalar::from_int(0)),
    )
    .unwrap();
    let mut monomials = 0;
    for degree in 0..=5u32 {
        for a in 0..=degree {
            let m = Polynomial::term(Monomial::new(vec![a, degree - a]), Scalar::from_int(1));
            monomials += 1;
            for j in 0..2 {
                let d = generic.dunkl_j(&m, j).map_err(|e| e.to_string())?;
                let homogeneous = if degree == 0 {
                    d.is_zero()
                } else {
                    d.is_zero() || (d.is_homogeneous() && d.degree() == Some(degree - 1))
                };
                ensure(homogeneous, || format!("dunkl_{j} of {m} is {d}"))?;
                let reduced = zero.dunkl_j(&m, j).map_err(|e| e.to_string())?;
                let partial = m.partial_derivative(j).map_err(|e| e.to_string())?;
                ensure(reduced == partial, || {
                    format!("kappa=0 dunkl_{j} of {m} is {reduced}, expected {partial}")
                })?;
            }
        }
    }
    Ok(format!("{monomials} monomials, both coordinates"))
}

/// Recomputes `∂_j p + Σ κ_v (c_v v)_j ρ_{c_v v} p` with every positive root
/// rescaled by its own factor.
fn dunkl_with_scaled_roots(
    scaled: &[(RationalVector, Scalar)],
    p: &Polynomial,
    j: usize,
) -> Result<Polynomial, String> {
    let mut out = p.partial_derivative(j).map_err(|e| e.to_string())?;
    for (root, kappa) in scaled {
        let term = rho(p, root)
            .map_err(|e| e.to_string())?
            .scale(&(kappa * &root[j]));
        out = &out + &term;
    }
    Ok(out)
}

fn root_scaling() -> Outcome {
    let mut checks = 0;
    for (k, name) in ["B2", "B3"].into_iter().enumerate() {
        let mut rng = Sampler::new(1008, k as u64);
        let ctx = random_context(name, &mut rng);
        let n = ctx.dim();
        let scaled: Vec<(RationalVector, Scalar)> = ctx
            .system()
            .positive_roots()
            .iter()
            .map(|v| {
                let c = rng.nonzero_rational();
                let kappa = ctx.kappa().value_for(v).unwrap().clone();
                (v.scale(&c), kappa)
            })
            .collect();
        for _ in 0..10 {
            let p = rng.polynomial(n, 5, 4);
            for j in 0..n {
                let reference = ctx.dunkl_j(&p, j).map_err(|e| e.to_string())?;
                let rescaled = dunkl_with_scaled_roots(&scaled, &p, j)?;
                ensure(reference == rescaled, || {
                    format!("{name}: dunkl_{j} of {p} changed to {rescaled}")
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} outputs unchanged"))
}

fn group_facts() -> Outcome {
    for (name, order) in [("A2", 6), ("B2", 8), ("B3", 48), ("A3", 24)] {
        let got = system(name)
            .generate_group(1000)
            .map_err(|e| e.to_string())?
            .len();
        ensure(got == order, || {
            format!("|G({name})| = {got}, expected {order}")
        })?;
    }
    for (name, count) in [
        ("B2", 2),
        ("B3", 2),
        ("B4", 2),
        ("A1", 1),
        ("A2", 1),
        ("A3", 1),
        ("A4", 1),
    ] {
        let got = system(name).orbits().len();
        ensure(got == count, || {
            format!("{name} has {got} orbits, expected {count}")
        })?;
    }
    Ok("orders 6, 8, 48, 24; orbit counts 2 and 1".to_string())
}

fn parser() -> Outcome {
    let mut rng = Sampler::new(1010, 0);
    for k in 0..1000 {
        let dim = 1 + rng.index(4);
        let degree = rng.index(7) as u32;
        let p = if k % 10 == 0 {
            Polynomial::zero(dim)
        } else {
            rng.polynomial(dim, degree, 6)
        };
        let text = p.to_string();
        let back = parse_polynomial(&text, dim).map_err(|e| format!("{text:?}: {e}"))?;
        ensure(back == p, || format!("{text:?} parsed back as {back}"))?;
    }
    for bad in ["z1 z2", "z1 + z3", "z1 + 1/0"] {
        let out = Command::new(env!("CARGO_BIN_EXE_dunkl"))
            .args([
                "apply",
                "--system",
                "B2",
                "--kappa",
                "short=1,long=1",
                "--op",
                "D1",
                "--poly",
                bad,
            ])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(2), || {
            format!("{bad:?} exited with {:?}", out.status.code())
        })?;
        ensure(out.stdout.is_empty(), || format!("{bad:?} wrote to stdout"))?;
    }
    Ok("1000 round trips; syntax, range and zero-denominator errors exit 2".to_string())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("commutativity", commutativity),
        ("equivariance", equivariance),
        ("double sum", double_sum),
        ("gradient commutator", gradient_commutator),
        ("laplacian expansion", laplacian_expansion),
        ("one-dimensional closed form", one_dimensional),
        (
            "homogeneity and zero-kappa reduction",
            homogeneity_and_reduction,
        ),
        ("root-scaling invariance", root_scaling),
        ("group orders and orbit counts", group_facts),
        ("parser round trip", parser),
    ];
    let mut failed = Vec::new();
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(detail) => {
                println!("FAIL {:>2} {name}: {detail}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: 10/10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
