use harmopart::qseries::{inv_product_one_minus, product_one_plus};
use harmopart::{enumerate_distinct, enumerate_ordinary, parse_partition, AnyPartition, Kind};
use num_bigint::BigInt;

/// Coin-change count of partitions of every n <= max, parts unrestricted.
fn partition_counts(max: usize) -> Vec<u64> {
    let mut p = vec![0u64; max + 1];
    p[0] = 1;
    for part in 1..=max {
        for n in part..=max {
            p[n] += p[n - part];
        }
    }
    p
}

/// 0/1 knapsack count of partitions into distinct parts.
fn distinct_counts(max: usize) -> Vec<u64> {
    let mut q = vec![0u64; max + 1];
    q[0] = 1;
    for part in 1..=max {
        for n in (part..=max).rev() {
            q[n] += q[n - part];
        }
    }
    q
}

#[test]
fn totals_match_counting_oracles() {
    let p = partition_counts(40);
    let q = distinct_counts(40);
    let ordinary_gf = inv_product_one_minus(40);
    let distinct_gf = product_one_plus(40);
    for n in 1..=40 {
        let d = enumerate_distinct(n).unwrap();
        let o = enumerate_ordinary(n).unwrap();
        assert_eq!(d.total() as u64, q[n], "distinct n={n}");
        assert_eq!(o.total() as u64, p[n], "ordinary n={n}");
        assert_eq!(BigInt::from(d.total()), *distinct_gf.coeff(n), "distinct gf n={n}");
        assert_eq!(BigInt::from(o.total()), *ordinary_gf.coeff(n), "ordinary gf n={n}");
    }
}

#[test]
fn fifty_has_204226_partitions() {
    assert_eq!(partition_counts(50)[50], 204226);
    assert_eq!(enumerate_ordinary(50).unwrap().total(), 204226);
}

#[test]
fn elements_satisfy_type_invariants() {
    for n in 1..=30 {
        let d = enumerate_distinct(n).unwrap();
        for (ell, p) in d.iter() {
            assert_eq!(p.len(), ell);
            assert_eq!(p.weight(), n);
            assert!(p.parts().windows(2).all(|w| w[0] > w[1]));
            assert!(p.parts().iter().all(|&x| x > 0));
        }
        let o = enumerate_ordinary(n).unwrap();
        for (ell, p) in o.iter() {
            assert_eq!(p.len(), ell);
            assert_eq!(p.weight(), n);
            assert!(p.blocks().windows(2).all(|w| w[0].part > w[1].part));
            assert!(p.blocks().iter().all(|b| b.part > 0 && b.mult > 0));
        }
    }
}

#[test]
fn slices_sorted_descending_and_unique() {
    for n in 1..=25 {
        let d = enumerate_distinct(n).unwrap();
        for ell in d.lengths() {
            let s = d.slice(ell);
            assert!(s.windows(2).all(|w| w[0].parts() > w[1].parts()), "n={n} ell={ell}");
        }
        let o = enumerate_ordinary(n).unwrap();
        for ell in o.lengths() {
            let s = o.slice(ell);
            assert!(s.windows(2).all(|w| w[0].parts() > w[1].parts()), "n={n} ell={ell}");
        }
    }
}

#[test]
fn parse_format_round_trip() {
    for n in 1..=30 {
        for (_, p) in enumerate_distinct(n).unwrap().iter() {
            let text = p.to_string();
            assert_eq!(
                parse_partition(&text, Kind::Distinct).unwrap(),
                AnyPartition::Distinct(p.clone())
            );
        }
        for (_, p) in enumerate_ordinary(n).unwrap().iter() {
            let text = p.to_string();
            let back = parse_partition(&text, Kind::Ordinary).unwrap();
            assert_eq!(back, AnyPartition::Ordinary(p.clone()));
            assert_eq!(back.to_string(), text);
        }
    }
}
