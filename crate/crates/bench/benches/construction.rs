use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use treelab_bench::SIZES;
use treelab_core::ledger::ledger_run;
use treelab_core::minimal::{build_recursive, grow_from_empty};
use treelab_core::{inputs, AvlTree, HeapBuffer, InputKind};

fn bench_build_heap(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_heap");
    for n in SIZES {
        for kind in [InputKind::Ascending, InputKind::Random { seed: 1 }] {
            let keys = kind.generate(n);
            group.bench_function(format!("{}/{n}", kind.label()), |b| {
                b.iter_batched(
                    || HeapBuffer::from_keys(keys.clone()),
                    |mut buf| black_box(buf.build_heap()),
                    BatchSize::SmallInput,
                )
            });
        }
    }
    group.finish();
}

fn bench_ledger(c: &mut Criterion) {
    let mut group = c.benchmark_group("ledger_run");
    for n in SIZES {
        let keys = InputKind::Random { seed: 2 }.generate(n);
        group.bench_function(format!("random/{n}"), |b| {
            b.iter_batched(
                || HeapBuffer::from_keys(keys.clone()),
                |mut buf| black_box(ledger_run(&mut buf)),
                BatchSize::SmallInput,
            )
        });
    }
    group.finish();
}

fn bench_avl_insert(c: &mut Criterion) {
    let mut group = c.benchmark_group("avl_insert");
    for n in SIZES {
        let keys = inputs::random_u64_keys(n, 3);
        group.bench_function(format!("random/{n}"), |b| {
            b.iter(|| {
                let mut tree = AvlTree::new();
                for &key in &keys {
                    let _ = tree.insert(key);
                }
                black_box(tree.height())
            })
        });
    }
    group.finish();
}

fn bench_minimal_trees(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimal_tree");
    group.bench_function("recursive/h15", |b| {
        b.iter(|| black_box(build_recursive(15).unwrap()))
    });
    group.bench_function("grow/h15", |b| {
        b.iter(|| black_box(grow_from_empty(15).unwrap()))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_build_heap,
    bench_ledger,
    bench_avl_insert,
    bench_minimal_trees
);
criterion_main!(benches);
