//! Invariant checks across the algebra, the operator oracle and the
//! path-integral routes. Every check is deterministic (fixed RNG seed).

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::grassmann::{
    determinant, gaussian_integral_expand, trace_functional, GeneratorRegistry, GrassmannElement,
    Monomial, SquareMatrix,
};
use crate::oscillator::{
    bosonic_partial_sum, density_matrix, hamiltonian, ladder_matrices, partition_trace, supertrace,
    thermal_observables, Matrix2,
};
use crate::path_integral::{
    action_matrix, close_boundary, closed_form_kernel, convergence_sweep, partition_via_chain,
    partition_via_determinant, BoundaryCondition, DiscretizedChain, SliceScheme,
};

const SEED: u64 = 0x5eed_f00d;
const BETAS: [f64; 4] = [0.1, 0.5, 1.0, 2.0];
const OMEGAS: [f64; 3] = [0.5, 1.0, 2.0];

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// Worst observed deviation (or a count, for exact checks).
    pub worst: f64,
    pub threshold: f64,
}

impl CheckOutcome {
    fn within(name: &'static str, worst: f64, threshold: f64) -> Self {
        Self {
            name,
            passed: worst <= threshold,
            worst,
            threshold,
        }
    }
}

/// Random element over `reg` with coefficients in `[-1, 1]`.
pub fn random_element(
    reg: &Arc<GeneratorRegistry>,
    rng: &mut impl Rng,
    density: f64,
) -> GrassmannElement {
    let g = reg.len();
    let mut out = GrassmannElement::zero(reg);
    for mask in 0u64..(1 << g) {
        if rng.gen::<f64>() >= density {
            continue;
        }
        let indices: Vec<usize> = (0..g).filter(|i| mask >> i & 1 == 1).collect();
        let term = GrassmannElement::monomial(reg, &indices, rng.gen_range(-1.0..=1.0))
            .expect("indices in range");
        out = out.add(&term).expect("shared registry");
    }
    out
}

fn six_generators() -> Arc<GeneratorRegistry> {
    GeneratorRegistry::unpaired(&["g0", "g1", "g2", "g3", "g4", "g5"]).expect("valid labels")
}

fn max_coeff_diff(a: &GrassmannElement, b: &GrassmannElement) -> f64 {
    let diff = a.sub(b).expect("shared registry");
    diff.terms().map(|(_, c)| c.abs()).fold(0.0, f64::max)
}

fn algebra_checks(rng: &mut ChaCha8Rng, samples: usize) -> Result<Vec<CheckOutcome>> {
    let reg = six_generators();
    let g = reg.len();
    let gens: Vec<_> = (0..g)
        .map(|i| GrassmannElement::generator(&reg, i))
        .collect::<Result<_>>()?;

    let mut anticomm_failures = 0.0;
    let mut square_failures = 0.0;
    for a in &gens {
        for b in &gens {
            if !a.mul(b)?.add(&b.mul(a)?)?.is_zero() {
                anticomm_failures += 1.0;
            }
        }
        if !a.mul(a)?.is_zero() {
            square_failures += 1.0;
        }
    }

    let mut nil_failures = 0.0;
    let mut assoc_worst: f64 = 0.0;
    let mut dd_failures = 0.0;
    let mut int_failures = 0.0;
    for _ in 0..samples {
        let a = random_element(&reg, rng, 0.3);
        let b = random_element(&reg, rng, 0.3);
        let c = random_element(&reg, rng, 0.3);
        assoc_worst = assoc_worst.max(max_coeff_diff(&a.mul(&b)?.mul(&c)?, &a.mul(&b.mul(&c)?)?));

        let body = a.sub(&GrassmannElement::scalar(&reg, a.constant_term()))?;
        let mut power = GrassmannElement::one(&reg);
        for _ in 0..=g {
            power = power.mul(&body)?;
        }
        if !power.is_zero() {
            nil_failures += 1.0;
        }

        for i in 0..g {
            if !a.left_derivative(i)?.left_derivative(i)?.is_zero() {
                dd_failures += 1.0;
            }
            if a.berezin_integrate(i)? != a.left_derivative(i)? {
                int_failures += 1.0;
            }
        }
    }

    let mut gauss_worst: f64 = 0.0;
    for _ in 0..samples.min(200) {
        let n = rng.gen_range(1..=4);
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-2.0..=2.0)).collect())
            .collect();
        let m = SquareMatrix::from_rows(&rows)?;
        let det = determinant(&m);
        gauss_worst =
            gauss_worst.max((gaussian_integral_expand(&m)? - det).abs() / det.abs().max(1.0));
    }

    let pair = GeneratorRegistry::new(&["c", "c*", "c'"], &[("c", "c*")])?;
    let identity_kernel =
        GrassmannElement::one(&pair).add(&GrassmannElement::monomial(&pair, &[1, 2], 1.0)?)?;
    let trace0 = trace_functional(&identity_kernel, 1, 0, 2)?;

    Ok(vec![
        CheckOutcome::within("grassmann: anticommutation", anticomm_failures, 0.0),
        CheckOutcome::within("grassmann: generator squares vanish", square_failures, 0.0),
        CheckOutcome::within("grassmann: nilpotent power G+1 vanishes", nil_failures, 0.0),
        CheckOutcome::within("grassmann: associativity", assoc_worst, 1e-12),
        CheckOutcome::within("grassmann: second derivative vanishes", dd_failures, 0.0),
        CheckOutcome::within(
            "grassmann: integration equals differentiation",
            int_failures,
            0.0,
        ),
        CheckOutcome::within(
            "grassmann: gaussian integral equals det",
            gauss_worst,
            1e-10,
        ),
        CheckOutcome::within(
            "grassmann: trace of identity kernel is 2",
            (trace0 - 2.0).abs(),
            0.0,
        ),
    ])
}

fn oscillator_checks() -> Result<Vec<CheckOutcome>> {
    let (c_dag, c) = ladder_matrices();
    let car = c.anticommutator(&c_dag).max_abs_diff(&Matrix2::IDENTITY)
        + c.anticommutator(&c).max_abs_diff(&Matrix2::ZERO)
        + c_dag.anticommutator(&c_dag).max_abs_diff(&Matrix2::ZERO);

    let mut commute: f64 = 0.0;
    let mut eig: f64 = 0.0;
    let mut trace_rel: f64 = 0.0;
    let mut sum_two: f64 = 0.0;
    let mut semigroup: f64 = 0.0;
    let mut fd: f64 = 0.0;
    for &beta in &BETAS {
        for &omega in &OMEGAS {
            let rho = density_matrix(beta, omega)?;
            let q = (-beta * omega).exp();
            commute = commute.max(
                rho.commutator(&hamiltonian(omega)?)
                    .max_abs_diff(&Matrix2::ZERO),
            );
            let (lo, hi) = rho.eigenvalues().unwrap_or((f64::NAN, f64::NAN));
            eig = eig.max((lo - q).abs().max((hi - 1.0).abs()));
            trace_rel = trace_rel.max((partition_trace(&rho) - (1.0 + q)).abs() / (1.0 + q));
            sum_two = sum_two.max((partition_trace(&rho) + supertrace(&rho) - 2.0).abs());
            let split = density_matrix(0.3 * beta, omega)? * density_matrix(0.7 * beta, omega)?;
            semigroup = semigroup.max(split.max_abs_diff(&rho));

            let h = 1e-5;
            let ln_z =
                |b: f64| -> Result<f64> { Ok(partition_trace(&density_matrix(b, omega)?).ln()) };
            let numeric = -(ln_z(beta + h)? - ln_z(beta - h)?) / (2.0 * h);
            fd = fd.max((thermal_observables(beta, omega)?.mean_energy - numeric).abs());
        }
    }
    Ok(vec![
        CheckOutcome::within("oscillator: canonical anticommutators", car, 0.0),
        CheckOutcome::within("oscillator: density matrix commutes with H", commute, 0.0),
        CheckOutcome::within("oscillator: density matrix spectrum", eig, 0.0),
        CheckOutcome::within("oscillator: trace equals 1 + e^-bw", trace_rel, 1e-15),
        CheckOutcome::within("oscillator: trace + supertrace = 2", sum_two, 1e-15),
        CheckOutcome::within("oscillator: semigroup property", semigroup, 1e-14),
        CheckOutcome::within("oscillator: mean energy vs finite difference", fd, 1e-8),
    ])
}

fn path_integral_checks(tolerance: f64) -> Result<Vec<CheckOutcome>> {
    let mut route: f64 = 0.0;
    let mut oracle_minus: f64 = 0.0;
    let mut oracle_plus: f64 = 0.0;
    let mut duality: f64 = 0.0;
    for &beta in &BETAS {
        for &omega in &OMEGAS {
            for n in [1, 2, 4, 8] {
                for scheme in [SliceScheme::Exact, SliceScheme::FirstOrder] {
                    let chain = DiscretizedChain::new(n, beta, omega, scheme)?;
                    for bc in BoundaryCondition::BOTH {
                        let diff = partition_via_determinant(&chain, bc)?
                            - partition_via_chain(&chain, bc)?;
                        route = route.max(diff.abs());
                    }
                }
            }
            let kernel = closed_form_kernel(beta, omega)?;
            let rho = density_matrix(beta, omega)?;
            let zm = close_boundary(&kernel, BoundaryCondition::Antiperiodic)?;
            let zp = close_boundary(&kernel, BoundaryCondition::Periodic)?;
            oracle_minus =
                oracle_minus.max((zm - partition_trace(&rho)).abs() / partition_trace(&rho));
            oracle_plus = oracle_plus.max((zp - supertrace(&rho)).abs() / supertrace(&rho));
            let terms = (40.0 / (beta * omega)).ceil() as usize + 1;
            duality = duality.max((zp * bosonic_partial_sum(beta, omega, terms) - 1.0).abs());
        }
    }

    let mut exact_coeff: f64 = 0.0;
    let mut first_order_coeff: f64 = 0.0;
    for n in 1..=64 {
        let exact = DiscretizedChain::new(n, 1.0, 1.0, SliceScheme::Exact)?.contract_chain()?;
        exact_coeff = exact_coeff.max((exact.coeff_prop().abs() - (-1f64).exp()).abs());
        let fo_chain = DiscretizedChain::new(n, 1.0, 1.0, SliceScheme::FirstOrder)?;
        let lambda = fo_chain.step_coefficient();
        let expected = (0..n).fold(1.0, |p, _| p * lambda);
        first_order_coeff =
            first_order_coeff.max((fo_chain.contract_chain()?.coeff_prop().abs() - expected).abs());
    }

    let three = DiscretizedChain::new(2, 1.0, 1.0, SliceScheme::Exact)?;
    let contracted = three.contract_interior()?;
    let lambda = three.step_coefficient();
    let hop = Monomial::single(three.c_star(2)).union(&Monomial::single(three.c(0)));
    let stray = contracted.max_abs_outside(&[Monomial::ONE, hop]);
    let shape = (contracted.constant_term() - 1.0).abs()
        + (contracted.coefficient_of(&[three.c_star(2), three.c(0)])? - lambda * lambda).abs()
        + stray;

    let mut action_gauss: f64 = 0.0;
    for n in 1..=4 {
        for scheme in [SliceScheme::Exact, SliceScheme::FirstOrder] {
            let chain = DiscretizedChain::new(n, 1.0, 1.0, scheme)?;
            for bc in BoundaryCondition::BOTH {
                let m = action_matrix(&chain, bc);
                action_gauss =
                    action_gauss.max((gaussian_integral_expand(&m)? - determinant(&m)).abs());
            }
        }
    }

    let mut exact_sweep: f64 = 0.0;
    let mut ratio_miss: f64 = 0.0;
    for bc in BoundaryCondition::BOTH {
        let pts = convergence_sweep(
            1.0,
            1.0,
            &(1..=64).collect::<Vec<_>>(),
            SliceScheme::Exact,
            bc,
        )?;
        exact_sweep = exact_sweep.max(pts.iter().map(|p| p.abs_error).fold(0.0, f64::max));
        let pts = convergence_sweep(1.0, 1.0, &[32, 64, 128], SliceScheme::FirstOrder, bc)?;
        for w in pts.windows(2) {
            let ratio = w[0].abs_error / w[1].abs_error;
            ratio_miss = ratio_miss.max((1.8 - ratio).max(ratio - 2.2).max(0.0));
        }
    }

    Ok(vec![
        CheckOutcome::within(
            "path integral: chain route equals determinant route",
            route,
            tolerance,
        ),
        CheckOutcome::within(
            "path integral: antiperiodic closure equals trace",
            oracle_minus,
            1e-12,
        ),
        CheckOutcome::within(
            "path integral: periodic closure equals supertrace",
            oracle_plus,
            1e-12,
        ),
        CheckOutcome::within(
            "path integral: periodic closure inverts bosonic sum",
            duality,
            1e-12,
        ),
        CheckOutcome::within(
            "path integral: exact-scheme propagator coefficient",
            exact_coeff,
            1e-13,
        ),
        CheckOutcome::within(
            "path integral: first-order propagator coefficient",
            first_order_coeff,
            1e-13,
        ),
        CheckOutcome::within("path integral: three-slice contraction shape", shape, 1e-15),
        CheckOutcome::within(
            "path integral: gaussian equals det on action matrices",
            action_gauss,
            1e-10,
        ),
        CheckOutcome::within(
            "path integral: exact-scheme sweep error",
            exact_sweep,
            1e-12,
        ),
        CheckOutcome::within(
            "path integral: first-order error ratio outside [1.8, 2.2]",
            ratio_miss,
            0.0,
        ),
    ])
}

/// Runs every check; `tolerance` bounds the chain/determinant route gap.
pub fn run_all(tolerance: f64) -> Result<Vec<CheckOutcome>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = algebra_checks(&mut rng, 1000)?;
    out.extend(oscillator_checks()?);
    out.extend(path_integral_checks(tolerance)?);
    Ok(out)
}
