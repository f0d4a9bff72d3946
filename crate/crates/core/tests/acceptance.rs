//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fermion_density::grassmann::{
    determinant, gaussian_integral_expand, GeneratorRegistry, GrassmannElement, Monomial,
    SquareMatrix,
};
use fermion_density::oscillator::{
    bosonic_partial_sum, density_matrix, partition_trace, supertrace, thermal_observables,
};
use fermion_density::path_integral::{
    action_matrix, close_boundary, closed_form_kernel, convergence_sweep, BoundaryCondition,
    DiscretizedChain, SliceScheme,
};

use BoundaryCondition::{Antiperiodic, Periodic};

const BETAS: [f64; 5] = [0.1, 0.5, 1.0, 2.0, 5.0];
const OMEGAS: [f64; 3] = [0.5, 1.0, 2.0];

type Outcome = Result<String, String>;

fn grid() -> impl Iterator<Item = (f64, f64)> {
    BETAS
        .into_iter()
        .flat_map(|b| OMEGAS.into_iter().map(move |w| (b, w)))
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_1() -> Outcome {
    let mut worst: f64 = 0.0;
    for (beta, omega) in grid() {
        let expected = 1.0 + (-beta * omega).exp();
        let z = partition_trace(&density_matrix(beta, omega).unwrap());
        worst = worst.max((z - expected).abs() / expected);
    }
    check(
        worst <= 1e-14,
        format!("max rel err {worst:.3e} (tol 1e-14)"),
    )
}

fn criterion_2() -> Outcome {
    let mut worst_rel: f64 = 0.0;
    let mut worst_sum: f64 = 0.0;
    for (beta, omega) in grid() {
        let expected = 1.0 - (-beta * omega).exp();
        let rho = density_matrix(beta, omega).unwrap();
        let st = supertrace(&rho);
        worst_rel = worst_rel.max((st - expected).abs() / expected);
        worst_sum = worst_sum.max((st + partition_trace(&rho) - 2.0).abs());
    }
    check(
        worst_rel <= 1e-14 && worst_sum <= 1e-14,
        format!("max rel err {worst_rel:.3e}, |Str+Tr-2| {worst_sum:.3e} (tol 1e-14)"),
    )
}

fn criterion_3() -> Outcome {
    let mut worst: f64 = 0.0;
    for (beta, omega) in grid() {
        let z = close_boundary(&closed_form_kernel(beta, omega).unwrap(), Antiperiodic).unwrap();
        worst = worst.max((z - partition_trace(&density_matrix(beta, omega).unwrap())).abs());
    }
    check(
        worst <= 1e-12,
        format!("max |Z- - Tr rho| {worst:.3e} (tol 1e-12)"),
    )
}

fn criterion_4() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut worst_dual: f64 = 0.0;
    for (beta, omega) in grid() {
        let z = close_boundary(&closed_form_kernel(beta, omega).unwrap(), Periodic).unwrap();
        worst = worst.max((z - supertrace(&density_matrix(beta, omega).unwrap())).abs());
        let m = (40.0 / (beta * omega)).ceil() as usize;
        worst_dual = worst_dual.max((z * bosonic_partial_sum(beta, omega, m + 1) - 1.0).abs());
    }
    check(
        worst <= 1e-12 && worst_dual <= 1e-12,
        format!("max |Z+ - Str rho| {worst:.3e}, max |Z+ * sum - 1| {worst_dual:.3e} (tol 1e-12)"),
    )
}

fn criterion_5() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for beta in [0.0, 0.6, 1.0] {
        // two steps = three slices η_{m-1}, η_m, η_{m+1}; integrate the middle pair
        let chain = DiscretizedChain::new(2, beta, 1.0, SliceScheme::Exact).unwrap();
        let k = chain.contract_interior().unwrap();
        let lambda = chain.step_coefficient();
        let hop = Monomial::single(chain.c_star(2)).union(&Monomial::single(chain.c(0)));
        let stray = k.max_abs_outside(&[Monomial::ONE, hop]);
        let c_hop = k.coefficient_of(&[chain.c_star(2), chain.c(0)]).unwrap();
        ok &= stray < 1e-15 && k.constant_term() == 1.0 && (c_hop - lambda * lambda).abs() < 1e-15;
        details.push(format!(
            "βω={beta}: 1 + {c_hop:.6}·c2* c0, stray {stray:.1e}"
        ));
    }
    check(ok, details.join("; "))
}

fn criterion_6() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for bc in BoundaryCondition::BOTH {
        let pts = convergence_sweep(1.0, 1.0, &[32, 64, 128], SliceScheme::FirstOrder, bc).unwrap();
        let ratios: Vec<f64> = pts
            .windows(2)
            .map(|w| w[0].abs_error / w[1].abs_error)
            .collect();
        ok &= pts.windows(2).all(|w| w[1].abs_error < w[0].abs_error);
        ok &= ratios.iter().all(|r| (1.8..=2.2).contains(r));
        lines.push(format!("{bc} ratios {:.4}, {:.4}", ratios[0], ratios[1]));

        let exact = convergence_sweep(
            1.0,
            1.0,
            &(1..=64).collect::<Vec<_>>(),
            SliceScheme::Exact,
            bc,
        )
        .unwrap();
        let worst = exact.iter().map(|p| p.abs_error).fold(0.0, f64::max);
        ok &= worst <= 1e-12;
        lines.push(format!("{bc} exact max err {worst:.3e}"));
    }
    check(ok, lines.join("; "))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst: f64 = 0.0;
    let mut worst_oracle: f64 = 0.0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=4);
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-2.0..=2.0)).collect())
            .collect();
        let m = SquareMatrix::from_rows(&rows).unwrap();
        let g = gaussian_integral_expand(&m).unwrap();
        worst = worst.max((g - determinant(&m)).abs());
        worst_oracle = worst_oracle.max((g - common::leibniz_det(&rows)).abs());
    }
    for n in 1..=4 {
        for scheme in [SliceScheme::Exact, SliceScheme::FirstOrder] {
            for beta in [0.0, 0.5, 1.0, 2.0] {
                let chain = DiscretizedChain::new(n, beta, 1.0, scheme).unwrap();
                for bc in BoundaryCondition::BOTH {
                    let m = action_matrix(&chain, bc);
                    worst =
                        worst.max((gaussian_integral_expand(&m).unwrap() - determinant(&m)).abs());
                }
            }
        }
    }
    check(
        worst <= 1e-10 && worst_oracle <= 1e-10,
        format!("max |expand - det| {worst:.3e}, vs Leibniz {worst_oracle:.3e} (tol 1e-10)"),
    )
}

fn criterion_8() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut signs = Vec::new();
    for beta_omega in [0.5, 1.0, 2.0] {
        for n in 1..=64 {
            let k = DiscretizedChain::new(n, beta_omega, 1.0, SliceScheme::Exact)
                .unwrap()
                .contract_chain()
                .unwrap();
            worst = worst.max((k.coeff_prop().abs() - (-beta_omega).exp()).abs());
            signs.push((k.coeff_prop().signum(), k.coeff_diag().signum()));
        }
    }
    let stable = signs.iter().all(|s| *s == signs[0]);
    let fmt_sign = |s: f64| if s > 0.0 { "+" } else { "-" };
    check(
        worst <= 1e-13 && stable,
        format!(
            "max ||coeff_prop| - e^-bw| {worst:.3e} (tol 1e-13); signs prop {} diag {} stable={stable}",
            fmt_sign(signs[0].0),
            fmt_sign(signs[0].1)
        ),
    )
}

fn random_element(reg: &Arc<GeneratorRegistry>, rng: &mut ChaCha8Rng) -> GrassmannElement {
    let g = reg.len();
    let mut out = GrassmannElement::zero(reg);
    for mask in 0u32..(1 << g) {
        if rng.gen::<f64>() < 0.35 {
            let ix: Vec<usize> = (0..g).filter(|i| mask >> i & 1 == 1).collect();
            out = out
                .add(&GrassmannElement::monomial(reg, &ix, rng.gen_range(-1.0..=1.0)).unwrap())
                .unwrap();
        }
    }
    out
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut failures = 0usize;
    let mut assoc: f64 = 0.0;
    let mut elements = 0usize;
    for trial in 0..1000 {
        let g = 1 + trial % 6;
        let labels: Vec<String> = (0..g).map(|i| format!("g{i}")).collect();
        let reg = GeneratorRegistry::unpaired(&labels).unwrap();
        let (a, b, c) = (
            random_element(&reg, &mut rng),
            random_element(&reg, &mut rng),
            random_element(&reg, &mut rng),
        );
        elements += 3;
        let diff = a
            .mul(&b)
            .unwrap()
            .mul(&c)
            .unwrap()
            .sub(&a.mul(&b.mul(&c).unwrap()).unwrap())
            .unwrap();
        assoc = assoc.max(diff.terms().map(|(_, x)| x.abs()).fold(0.0, f64::max));
        for i in 0..g {
            let gi = GrassmannElement::generator(&reg, i).unwrap();
            let gj = GrassmannElement::generator(&reg, (i + trial) % g).unwrap();
            failures += usize::from(
                !gi.mul(&gj)
                    .unwrap()
                    .add(&gj.mul(&gi).unwrap())
                    .unwrap()
                    .is_zero(),
            );
            failures += usize::from(!gi.mul(&gi).unwrap().is_zero());
            failures += usize::from(
                !a.left_derivative(i)
                    .unwrap()
                    .left_derivative(i)
                    .unwrap()
                    .is_zero(),
            );
            failures +=
                usize::from(a.berezin_integrate(i).unwrap() != a.left_derivative(i).unwrap());
        }
        let body = a
            .sub(&GrassmannElement::scalar(&reg, a.constant_term()))
            .unwrap();
        let top = (0..=g).fold(GrassmannElement::one(&reg), |p, _| p.mul(&body).unwrap());
        failures += usize::from(!top.is_zero());
    }
    check(
        failures == 0 && assoc <= 1e-12,
        format!("{elements} elements, exact-identity failures {failures}, assoc max {assoc:.3e} (tol 1e-12)"),
    )
}

fn criterion_10() -> Outcome {
    let h = 1e-5;
    let mut worst: f64 = 0.0;
    for (beta, omega) in grid() {
        let ln_z = |b: f64| partition_trace(&density_matrix(b, omega).unwrap()).ln();
        let numeric = -(ln_z(beta + h) - ln_z(beta - h)) / (2.0 * h);
        worst = worst.max((thermal_observables(beta, omega).unwrap().mean_energy - numeric).abs());
    }
    let s = thermal_observables(1e-4, 1.0).unwrap().entropy;
    let gap = (s - 2f64.ln()).abs();
    check(
        worst <= 1e-8 && gap <= 1e-6,
        format!("max |<E> - FD| {worst:.3e} (tol 1e-8), |S - ln2| at β=1e-4 {gap:.3e} (tol 1e-6)"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 trace equals 1 + e^-bw", criterion_1),
        ("2 supertrace equals 1 - e^-bw", criterion_2),
        ("3 antiperiodic Berezin closure", criterion_3),
        ("4 periodic closure and bosonic duality", criterion_4),
        ("5 three-slice contraction", criterion_5),
        ("6 slicing convergence", criterion_6),
        ("7 gaussian integral equals det", criterion_7),
        ("8 propagator coefficient", criterion_8),
        ("9 algebra properties", criterion_9),
        ("10 thermodynamic consistency", criterion_10),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
