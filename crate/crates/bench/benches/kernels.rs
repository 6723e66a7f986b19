//! Benchmarks for the hot kernels: GF(2) algebra, canonical keys, the
//! criteria battery, and class enumeration.

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use gauss_core::codec::{Enumerator, GaussCode};
use gauss_core::criteria::{check_all, check_stz_linear, realizability_system};
use gauss_core::gf2::{self, Gf2Matrix};
use gauss_core::interlace::InterlacementGraph;
use gauss_core::tablegen::{count_row, TableOptions};

const NINE: &str = "0 7 8 4 3 5 6 8 7 2 1 6 5 0 4 3 2 1";
const TWELVE: &str = "1 2 3 4 5 6 1 7 8 9 10 11 6 12 2 3 4 5 12 7 8 9 10 11";

fn bench_gf2(c: &mut Criterion) {
    // dense pseudo-random 64x64 matrix, fixed pattern
    let mut m = Gf2Matrix::zero(64);
    let mut state = 0x9E3779B97F4A7C15u64;
    for i in 0..64 {
        for j in 0..64 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            m.set(i, j, state >> 63 == 1);
        }
    }
    c.bench_function("gf2_square_64", |b| b.iter(|| black_box(&m).square()));

    let g = InterlacementGraph::from_code(&GaussCode::parse(NINE).unwrap());
    let rs = realizability_system(&g);
    c.bench_function("gf2_solve_nine_chord_system", |b| {
        b.iter(|| gf2::solve(black_box(&rs.system)))
    });
}

fn bench_criteria(c: &mut Criterion) {
    let nine = GaussCode::parse(NINE).unwrap();
    let g = InterlacementGraph::from_code(&nine);
    c.bench_function("stz_linear_nine_chords", |b| {
        b.iter(|| check_stz_linear(black_box(&g)))
    });
    c.bench_function("check_all_nine_chords", |b| {
        b.iter(|| check_all(black_box(&nine)).unwrap())
    });
}

fn bench_codec(c: &mut Criterion) {
    let twelve = GaussCode::parse(TWELVE).unwrap().to_diagram();
    c.bench_function("canonical_key_twelve_chords", |b| {
        b.iter(|| black_box(&twelve).canonical_key())
    });

    c.bench_function("enumerate_classes_n6", |b| {
        b.iter(|| Enumerator::new(6).visit_classes(|_| true, |_| {}))
    });
}

fn bench_table(c: &mut Criterion) {
    c.bench_function("table_row_n8", |b| {
        b.iter(|| count_row(8, TableOptions::default()))
    });
}

criterion_group!(benches, bench_gf2, bench_criteria, bench_codec, bench_table);
criterion_main!(benches);
