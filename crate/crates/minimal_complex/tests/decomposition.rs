use minimal_complex::{build_decomposition, Role, SplittingChoice};

#[test]
fn ranks_at_three() {
    let d = build_decomposition(3, 1, SplittingChoice::Canonical).unwrap();
    let m: Vec<usize> = (-1..=7).map(|r| d.rank(Role::M, r)).collect();
    let l: Vec<usize> = (-1..=7).map(|r| d.rank(Role::L, r)).collect();
    let n: Vec<usize> = (-1..=7).map(|r| d.rank(Role::N, r)).collect();
    println!("M {m:?}\nL {l:?}\nN {n:?}");
    assert_eq!(m, vec![0, 1, 15, 35, 42, 35, 15, 1, 0]);
    for r in -1..7 {
        assert_eq!(d.rank(Role::L, r), d.rank(Role::N, r + 1), "L_{r} vs N_{}", r + 1);
    }
}

#[test]
fn ranks_at_two() {
    let d = build_decomposition(2, 1, SplittingChoice::RankTwo).unwrap();
    let m: Vec<usize> = (-1..=5).map(|r| d.rank(Role::M, r)).collect();
    let l: Vec<usize> = (-1..=5).map(|r| d.rank(Role::L, r)).collect();
    let n: Vec<usize> = (-1..=5).map(|r| d.rank(Role::N, r)).collect();
    println!("M {m:?}\nL {l:?}\nN {n:?}");
    assert_eq!(m, vec![0, 1, 4, 6, 4, 1, 0]);
}

#[test]
fn projectors_split_identity() {
    for n in 2..=4 {
        let d = build_decomposition(n, 1, if n == 2 { SplittingChoice::RankTwo } else { SplittingChoice::Canonical }).unwrap();
        for dd in d.degrees() {
            let dim = dd.f.rank();
            let (pl, pm, pn) = (dd.l.projector(), dd.m.projector(), dd.n.projector());
            assert_eq!(pl.add(&pm).add(&pn), exact_arith::PolyMatrix::identity(dim, &()), "n={n} r={}", dd.r);
            for p in [&pl, &pm, &pn] {
                assert_eq!(p.mul(p), *p, "idempotent n={n} r={}", dd.r);
            }
            assert_eq!(dd.l.rank() + dd.m.rank() + dd.n.rank(), dim);
        }
    }
}

#[test]
fn rank_two_uses_displayed_lists() {
    use minimal_complex::{stratum_role, Role, SplitKind, StratumRole};
    assert_eq!(stratum_role(2, 2, 2, 1), StratumRole::Split { kind: SplitKind::Ell, prime: Role::M, double: Role::N });
    assert_eq!(stratum_role(2, 2, 3, 1), StratumRole::Split { kind: SplitKind::Sigma, prime: Role::M, double: Role::L });
    assert_eq!(stratum_role(2, 1, 2, 1), StratumRole::Whole(Role::L));
    assert_eq!(stratum_role(2, 3, 3, 1), StratumRole::Whole(Role::N));
    assert_eq!(stratum_role(2, 4, 3, 2), StratumRole::Whole(Role::M));
    assert_eq!(stratum_role(2, 0, 3, 0), StratumRole::Whole(Role::M));
}
