//! Parallel vs sequential throughput for the radial sweeps.
//!
//! `profile` dispatches grid evaluation through rayon under the default
//! `parallel` feature; `profile_seq` is the always-sequential baseline, so a
//! default-features run compares the two paths directly.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use twistkick::grid::{linspace, map_grid, map_grid_seq};
use twistkick::{
    normalize_amplitude, profile, profile_seq, pz_density, Amplitude, BeamSpec, Helicity, Quantity,
    TensorChoice,
};

fn reference_beam() -> (BeamSpec, Amplitude) {
    let spec = BeamSpec::new(729e-9, 0.1, 2, Helicity::Plus, Some(7.29e-6), 4e-3).unwrap();
    let amp = normalize_amplitude(&spec).unwrap();
    (spec, amp)
}

fn bench_jz_profile(c: &mut Criterion) {
    let (spec, amp) = reference_beam();
    let mut group = c.benchmark_group("jz_profile");
    for n_points in [1024usize, 8192] {
        group.bench_with_input(
            BenchmarkId::new("parallel", n_points),
            &n_points,
            |b, &n| {
                b.iter(|| {
                    profile(
                        black_box(&spec),
                        &amp,
                        Quantity::Jz,
                        TensorChoice::Belinfante,
                        0.0,
                        3e-5,
                        n,
                    )
                    .unwrap()
                })
            },
        );
        group.bench_with_input(
            BenchmarkId::new("sequential", n_points),
            &n_points,
            |b, &n| {
                b.iter(|| {
                    profile_seq(
                        black_box(&spec),
                        &amp,
                        Quantity::Jz,
                        TensorChoice::Belinfante,
                        0.0,
                        3e-5,
                        n,
                    )
                    .unwrap()
                })
            },
        );
    }
    group.finish();
}

fn bench_tractor_scan(c: &mut Criterion) {
    let spec = BeamSpec::new(729e-9, 0.5, 2, Helicity::Plus, Some(7.29e-6), 4e-3).unwrap();
    let amp = Amplitude { a0: 1e-10 };
    let grid = linspace(0.0, 3e-6, 20_001);
    let mut group = c.benchmark_group("pz_scan_20k");
    group.bench_function("parallel", |b| {
        b.iter(|| {
            map_grid(black_box(&grid), |rho| {
                pz_density(&spec, &amp, rho, TensorChoice::Belinfante)
            })
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            map_grid_seq(black_box(&grid), |rho| {
                pz_density(&spec, &amp, rho, TensorChoice::Belinfante)
            })
        })
    });
    group.finish();
}

criterion_group!(benches, bench_jz_profile, bench_tractor_scan);
criterion_main!(benches);
