use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use qalink::families::{rational_diagram, ContinuedFraction};
use qalink::invariants::determinant_oracle_capped;
use qalink::qa::{qa_search, DEFAULT_BUDGET};
use qalink::{determinant, kauffman_bracket, LinkDiagram};

fn twist_chain(n: usize) -> LinkDiagram {
    let terms = vec![2; n / 2];
    rational_diagram(&ContinuedFraction::new(terms).unwrap())
}

fn determinants(c: &mut Criterion) {
    let mut g = c.benchmark_group("determinant");
    for n in [6, 10, 14] {
        let d = twist_chain(n);
        g.bench_with_input(BenchmarkId::new("goeritz", n), &d, |b, d| b.iter(|| determinant(black_box(d))));
        g.bench_with_input(BenchmarkId::new("bracket", n), &d, |b, d| {
            b.iter(|| determinant_oracle_capped(black_box(d), 16).unwrap())
        });
    }
    g.finish();
}

fn bracket(c: &mut Criterion) {
    let d = twist_chain(12);
    c.bench_function("kauffman_bracket/12", |b| b.iter(|| kauffman_bracket(black_box(&d)).unwrap()));
}

fn search(c: &mut Criterion) {
    let mut g = c.benchmark_group("qa_search");
    for n in [4, 8] {
        let d = twist_chain(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &d, |b, d| b.iter(|| qa_search(black_box(d), DEFAULT_BUDGET)));
    }
    g.finish();
}

criterion_group!(benches, determinants, bracket, search);
criterion_main!(benches);
