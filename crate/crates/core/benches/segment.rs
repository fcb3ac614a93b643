use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use longseg::batch;
use longseg::bench::{generate_read, generate_scores, Workload, WorkloadKind};
use longseg::bio::{trim_longest, SequenceRecord};
use longseg::longest_segment_above;
use longseg::oracle::BruteForce;
use num_rational::Ratio;

fn search_vs_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    for n in [100usize, 1_000] {
        let seq = generate_scores(&Workload::new(WorkloadKind::Uniform, n, 1));
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("linear", n), &seq, |b, seq| {
            b.iter(|| longest_segment_above(black_box(seq), 0i64).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("oracle", n), &seq, |b, seq| {
            b.iter(|| BruteForce::new(n).longest_above(black_box(seq.as_slice()), 0i64).unwrap())
        });
    }
    for n in [100_000usize, 1_000_000] {
        for kind in WorkloadKind::SCORES {
            let seq = generate_scores(&Workload::new(kind, n, 1));
            group.throughput(Throughput::Elements(n as u64));
            group.bench_with_input(BenchmarkId::new(kind.name(), n), &seq, |b, seq| {
                b.iter(|| longest_segment_above(black_box(seq), 0i64).unwrap())
            });
        }
    }
    group.finish();
}

fn reads(count: usize, len: usize) -> Vec<SequenceRecord> {
    (0..count as u64)
        .map(|seed| generate_read(&Workload::new(WorkloadKind::TwoHumpError, len, seed)))
        .collect()
}

fn trim_batch(c: &mut Criterion) {
    let max_error = Ratio::new(1u64, 20);
    let records = reads(2_000, 300);
    let mut group = c.benchmark_group("trim_batch");
    group.throughput(Throughput::Elements(records.len() as u64));
    group.bench_function("sequential", |b| {
        b.iter(|| batch::map_sequential(black_box(&records), |r| trim_longest(r, max_error).unwrap()))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| batch::map_parallel(black_box(&records), |r| trim_longest(r, max_error).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, search_vs_oracle, trim_batch);
criterion_main!(benches);
