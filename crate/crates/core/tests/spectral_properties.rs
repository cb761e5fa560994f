use std::f64::consts::PI;

use besov_ks::{Field, GridSpec};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_field(grid: GridSpec, rng: &mut ChaCha8Rng) -> Field {
    Field::from_values(grid, (0..grid.len()).map(|_| rng.gen_range(-1.0..1.0)).collect()).unwrap()
}

fn rel(a: &Field, b: &Field) -> f64 {
    (a - b).parseval_l2() / b.parseval_l2().max(f64::MIN_POSITIVE)
}

#[test]
fn parseval_over_one_hundred_random_fields() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let grids = [
        GridSpec::new(1, 512, 3.0).unwrap(),
        GridSpec::new(2, 32, PI).unwrap(),
        GridSpec::new(3, 8, 0.5).unwrap(),
    ];
    for i in 0..100 {
        let grid = grids[i % 3];
        let f = random_field(grid, &mut rng);
        let quad = f.lp_norm(2.0).unwrap();
        let coeffs: f64 = f.fourier().iter().map(|c| c.norm_sqr()).sum();
        let parseval = (grid.volume() * coeffs).sqrt();
        assert!((quad - parseval).abs() <= 1e-10 * quad, "{quad} vs {parseval}");
    }
}

#[test]
fn multipliers_commute() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for grid in [GridSpec::new(1, 256, PI).unwrap(), GridSpec::new(2, 32, 2.0).unwrap()] {
        let f = random_field(grid, &mut rng);
        let heat = |g: &Field| g.heat_propagate(0.01).unwrap();
        let helm = |g: &Field| g.helmholtz_inverse();
        let lap = |g: &Field| g.laplacian();
        let ops: [&dyn Fn(&Field) -> Field; 3] = [&heat, &helm, &lap];
        for (i, a) in ops.iter().enumerate() {
            for b in &ops[i + 1..] {
                let ab = a(&b(&f));
                let ba = b(&a(&f));
                assert!(rel(&ab, &ba) <= 1e-12);
            }
        }
    }
}

#[test]
fn operators_preserve_hermitian_symmetry() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let grid = GridSpec::new(2, 32, PI).unwrap();
    let f = random_field(grid, &mut rng);
    let mut outputs = f.gradient();
    outputs.push(Field::divergence(&f.gradient()).unwrap());
    outputs.push(f.helmholtz_inverse());
    outputs.push(f.heat_propagate(0.1).unwrap());
    outputs.push(f.dealias(0.5).unwrap());
    for g in outputs {
        let spec = g.fourier();
        for flat in 0..grid.len() {
            if grid.is_nyquist(flat) {
                continue;
            }
            let k = grid.multi_index(flat);
            let modes: Vec<i64> = (0..2).map(|a| -grid.axis_mode(k[a])).collect();
            let mirror = grid.flat_index_of_modes(&modes);
            assert!((spec[flat] - spec[mirror].conj()).norm() <= 1e-12 * (1.0 + spec[flat].norm()));
        }
        assert!(g.synthesis_residue() <= 1e-12 * (1.0 + g.sup_norm()));
    }
}

#[test]
fn gradient_then_divergence_is_the_laplacian() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let grid = GridSpec::new(3, 16, 1.0).unwrap();
    let f = random_field(grid, &mut rng);
    let div_grad = Field::divergence(&f.gradient()).unwrap();
    assert!(rel(&div_grad, &f.laplacian()) <= 1e-12);
}

#[test]
fn random_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let grid = GridSpec::new(1, 4096, 16.0 * PI).unwrap();
    let f = random_field(grid, &mut rng);
    let back = Field::from_spectrum(grid, f.to_fourier().into_spectrum()).unwrap();
    let dev = back
        .physical()
        .iter()
        .zip(f.physical().iter())
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    assert!(dev <= 1e-12 * f.sup_norm());
}

#[test]
fn heat_semigroup_on_random_field() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let grid = GridSpec::new(2, 64, PI).unwrap();
    let f = random_field(grid, &mut rng);
    let two_steps = f.heat_propagate(0.02).unwrap().heat_propagate(0.03).unwrap();
    let one_step = f.heat_propagate(0.05).unwrap();
    assert!((&two_steps - &one_step).sup_norm() <= 1e-12);
    let same = f.heat_propagate(0.0).unwrap();
    // the identity up to the Nyquist row, which every multiplier drops
    assert!(rel(&same, &f.apply_symbol(|_| 1.0)) <= 1e-15);
}

#[test]
fn grid_examples() {
    let g = GridSpec::new(1, 8, PI).unwrap();
    assert_eq!(g.k_max(), 4.0);
    assert_eq!(g.spacing(), PI / 4.0);
    let g = GridSpec::new(1, 4096, 16.0 * PI).unwrap();
    assert!((g.k_max() - 128.0).abs() < 1e-12);
    let g = GridSpec::new(2, 16, PI).unwrap();
    let modes: Vec<i64> = (0..16).map(|i| g.axis_mode(i)).collect();
    assert_eq!(*modes.iter().min().unwrap(), -8);
    assert_eq!(*modes.iter().max().unwrap(), 7);
    assert!(g.is_nyquist(g.flat_index_of_modes(&[-8, 3])));
    assert!(!g.is_nyquist(g.flat_index_of_modes(&[7, -7])));
    assert!(GridSpec::new(1, 12, 1.0).is_err());
    assert!(GridSpec::new(4, 8, 1.0).is_err());
    assert!(GridSpec::new(1, 8, 0.0).is_err());
}

#[test]
fn sup_of_sine_within_grid_resolution() {
    let grid = GridSpec::new(1, 4096, PI).unwrap();
    let f = Field::from_fn(grid, |x| (4.0 * x[0]).sin());
    assert!((f.lp_norm(f64::INFINITY).unwrap() - 1.0).abs() <= 1e-3);
    assert!(f.lp_norm(0.5).is_err());
}

fn arb_spectrum(len: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), len)
}

proptest! {
    #[test]
    fn heat_is_an_l2_contraction(coeffs in arb_spectrum(64), theta in 0.0f64..2.0) {
        let grid = GridSpec::new(1, 64, PI).unwrap();
        let spectrum: Vec<Complex64> = coeffs.iter().map(|&(a, b)| Complex64::new(a, b)).collect();
        let f = Field::from_spectrum(grid, spectrum).unwrap().to_physical();
        let f = Field::from_values(grid, f.physical().into_owned()).unwrap();
        let before = f.lp_norm(2.0).unwrap();
        let after = f.heat_propagate(theta).unwrap().lp_norm(2.0).unwrap();
        prop_assert!(after <= before * (1.0 + 1e-14));
    }

    #[test]
    fn dealias_is_idempotent(values in prop::collection::vec(-1.0f64..1.0, 128), fraction in 0.05f64..1.0) {
        let grid = GridSpec::new(1, 128, 2.0).unwrap();
        let f = Field::from_values(grid, values).unwrap();
        let once = f.dealias(fraction).unwrap();
        let twice = once.dealias(fraction).unwrap();
        prop_assert_eq!(once.fourier().into_owned(), twice.fourier().into_owned());
    }
}
