mod common;

use common::*;
use hooktab::enumeration::{enum_hvt, enum_ssyt, EnumBounds};
use hooktab::genfun::{hvt_count_from_determinant, hvt_genfun, schur_poly};
use hooktab::mixed::MixedEntry;
use hooktab::shape::SkewShape;
use hooktab::TruncatedPolynomial;

#[test]
fn ssyt_counts_agree_three_ways() {
    for mu in partitions_up_to(5) {
        for n in 1..=4u32 {
            let expected = hook_content(&mu, n as u64);
            assert_eq!(ssyt_brute_count(&mu, n) as u128, expected, "{mu:?} n={n}");
            assert_eq!(enum_ssyt(&part(&mu), n).len() as u128, expected, "{mu:?} n={n}");
        }
    }
}

#[test]
fn schur_coefficient_sum_is_the_ssyt_count() {
    for mu in partitions_up_to(4) {
        for n in 1..=3u32 {
            let s = schur_poly(&part(&mu), n, mu.iter().sum::<usize>() as u32);
            assert_eq!(s.sum_of_coefficients(), hook_content(&mu, n as u64).into(), "{mu:?}");
        }
    }
}

#[test]
fn hvt_genfun_without_parameters_is_schur() {
    for mu in partitions_up_to(4) {
        let lambda = part(&mu);
        let cap = lambda.size() as u32 + 2;
        for n in 1..=3u32 {
            let schur = schur_poly(&lambda, n, cap);
            assert_eq!(hvt_genfun(&lambda, EnumBounds::new(n, 0), cap), schur);
            // The parameter-free part of the full generating function.
            let full = hvt_genfun(&lambda, EnumBounds::new(n, 2), cap);
            let free = TruncatedPolynomial::from_terms(
                full.terms()
                    .filter(|(m, _)| m.parameter_part().is_one())
                    .map(|(m, c)| (m.clone(), c.clone())),
                cap,
            );
            assert_eq!(free, schur, "{mu:?} n={n}");
        }
    }
}

#[test]
fn hvt_counts_small_table() {
    // One cell, entries <= 2, excess <= 1: the hooks 1, 2, 1+1, 2+2, 1+2, 1^2.
    assert_eq!(enum_hvt(&part(&[1]), EnumBounds::new(2, 1)).len(), 6);
    // Empty shape: exactly the empty tableau.
    assert_eq!(enum_hvt(&part(&[]), EnumBounds::new(3, 2)).len(), 1);
}

#[test]
fn exhaustive_hvt_counts_match_determinant_extraction() {
    for mu in partitions_up_to(3) {
        let lambda = part(&mu);
        for n in 1..=3u32 {
            if lambda.len() > n as usize {
                continue;
            }
            for e in 0..=2usize {
                let by_enum = enum_hvt(&lambda, EnumBounds::new(n, e)).len();
                let by_det = hvt_count_from_determinant(&lambda, n, e).unwrap();
                assert_eq!(by_det, by_enum.into(), "{mu:?} n={n} E={e}");
            }
        }
    }
}

#[test]
fn classify_matches_pairwise_scan_small() {
    let symbols = [
        MixedEntry::Alpha(1),
        MixedEntry::Alpha(2),
        MixedEntry::Beta(-1),
        MixedEntry::Beta(1),
        MixedEntry::Beta(2),
    ];
    for shape in SkewShape::all_with_outer_at_most(3) {
        for_each_filling(&shape, &symbols, |t| {
            assert_eq!(t.classify(), classify_oracle(&t), "{t}");
        });
    }
}
