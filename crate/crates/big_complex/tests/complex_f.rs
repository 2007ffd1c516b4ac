use big_complex::{build_f, build_f_variant, f_module, FVariant};
use generic_data::GenericData;

fn binom(n: usize, k: i64) -> usize {
    if k < 0 || k as usize > n {
        return 0;
    }
    let k = k as usize;
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn d_squared_vanishes_n2_n3() {
    for n in 2..=3 {
        let f = build_f(&GenericData::build_generic(n, (n as i64 - 1) / 2).unwrap());
        for (r, nnz) in f.d_squared_residuals() {
            assert_eq!(nnz, 0, "n={n}: d_{}∘d_{r} has {nnz} nonzero entries", r - 1);
        }
    }
}

#[test]
fn ranks_match_vandermonde() {
    for n in 2..=5 {
        let mut total = 0;
        for r in -1..=2 * n as i64 + 1 {
            let m = f_module(n, 1, r);
            let count = |fam: u8| m.labels().iter().filter(|l| matches!(l, big_complex::Label::F(b) if b.family == fam)).count();
            assert_eq!(count(1), binom(2 * n, r + 1));
            assert_eq!(count(2), binom(2 * n, r));
            assert_eq!(count(3), binom(2 * n, r));
            assert_eq!(count(4), binom(2 * n, r - 1));
            total += m.rank();
        }
        assert_eq!(total, 4usize.pow(n as u32 + 1));
    }
    assert_eq!(f_module(3, 1, -1).rank(), 1);
}

#[test]
fn differentials_are_homogeneous() {
    for n in 2..=3 {
        for d_u in 0..n as i64 {
            let d = GenericData::build_generic(n, d_u).unwrap();
            let f = build_f(&d);
            let bad = f.degree_violations(&d.grading);
            assert!(bad.is_empty(), "n={n} d_u={d_u}: {:?}", &bad[..bad.len().min(3)]);
        }
    }
}

#[test]
fn variants_are_complexes() {
    let d = GenericData::build_generic(3, 1).unwrap();
    for v in [FVariant::Tilde, FVariant::MinusV] {
        let f = build_f_variant(&d, v);
        assert!(f.d_squared_residuals().iter().all(|(_, k)| *k == 0), "{v:?}");
    }
}

#[test]
fn d_squared_and_grading_n4() {
    let d = GenericData::build_generic(4, 1).unwrap();
    let f = build_f(&d);
    assert_eq!(f.total_rank(), 1024);
    for (r, nnz) in f.d_squared_residuals() {
        assert_eq!(nnz, 0, "n=4: d_{}∘d_{r} has {nnz} nonzero entries", r - 1);
    }
    assert!(f.degree_violations(&d.grading).is_empty());
}

#[test]
fn nonzero_blocks_present() {
    // every one of the sixteen blocks contributes somewhere at n = 3
    let d = GenericData::build_generic(3, 1).unwrap();
    let f = build_f(&d);
    let mut seen = std::collections::BTreeSet::new();
    for r in f.degrees() {
        let (src, tgt) = (f.module(r), f.module(r - 1));
        for (i, j, _) in f.diff(r).entries() {
            if let (big_complex::Label::F(a), big_complex::Label::F(b)) = (tgt.label(i), src.label(j)) {
                seen.insert((a.family, b.family));
            }
        }
    }
    let expected: std::collections::BTreeSet<(u8, u8)> =
        [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (4, 2), (1, 3), (3, 3), (4, 3), (2, 4), (3, 4), (4, 4)].into_iter().collect();
    assert_eq!(seen, expected);
}

#[test]
fn json_export_lists_triples() {
    let f = build_f(&GenericData::build_generic(2, 0).unwrap());
    let j = f.to_json();
    assert_eq!(j["lo"], -1);
    assert_eq!(j["hi"], 5);
    assert_eq!(j["modules"].as_array().unwrap().len(), 7);
    let d0 = &j["differentials"][0];
    assert_eq!(d0["degree"], 0);
    let entries = d0["entries"].as_array().unwrap();
    assert_eq!(entries.len(), f.diff(0).nnz());
    assert!(entries.iter().all(|e| e.as_array().unwrap().len() == 3));
}
