// quick timing probe for the arity-3 audit
fn main() {
    let opcat = fincat::operators::OperatorCategory::new(
        fincat::monoidal::matcat::MatrixCategory::new(
            fincat::monoidal::ring::PrimeField::new(2).unwrap(),
        ),
    );
    let start = std::time::Instant::now();
    let triples = fincat::operators::operator_triple_audit(
        &opcat,
        &[fincat::monoidal::matcat::Dim(1), fincat::monoidal::matcat::Dim(2)],
        3,
    )
    .unwrap();
    println!("triples={} took {:?}", triples, start.elapsed());
}
