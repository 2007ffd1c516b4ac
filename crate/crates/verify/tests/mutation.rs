use verify::*;

#[test]
fn twenty_seeded_mutations_are_caught() {
    let ctx = Context::new(3, 1).unwrap();
    assert!(mutation_battery(&ctx, ctx.m()).iter().all(|r| r.passed()));
    let outcomes = run_mutations(&ctx, 20, 7);
    assert_eq!(outcomes.len(), 20);
    for o in &outcomes {
        assert!(!o.caught_by.is_empty(), "{:?} not caught", o.mutation);
    }
}

#[test]
fn mutations_are_deterministic() {
    let ctx = Context::new(3, 1).unwrap();
    assert_eq!(seeded_mutations(ctx.m(), 20, 7), seeded_mutations(ctx.m(), 20, 7));
    assert_ne!(seeded_mutations(ctx.m(), 20, 7), seeded_mutations(ctx.m(), 20, 8));
}
