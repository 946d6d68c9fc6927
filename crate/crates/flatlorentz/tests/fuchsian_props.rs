mod common;

use common::{lorentz, rel};
use flatlorentz::boosts::{boost_data, AffineIsometry};
use flatlorentz::fuchsian::*;
use flatlorentz::sphere::SpherePoint;
use nalgebra::Matrix3;
use proptest::prelude::*;

fn is_reduced(w: &[i32]) -> bool {
    w.windows(2).all(|p| p[0] != -p[1])
}

/// Reduced words by brute force over all letter strings.
fn brute_count(rank: usize, len: usize) -> usize {
    let letters: Vec<i32> = (1..=rank as i32).flat_map(|i| [i, -i]).collect();
    let mut level: Vec<Vec<i32>> = vec![vec![]];
    let mut total = 1;
    for _ in 0..len {
        level = level
            .iter()
            .flat_map(|w| letters.iter().map(move |&l| [w.as_slice(), &[l]].concat()))
            .filter(|w| is_reduced(w))
            .collect();
        total += level.len();
    }
    total
}

fn ell(m: &Matrix3<f64>) -> f64 {
    boost_data(&AffineIsometry::linear_only(*m).unwrap()).unwrap().ell
}

fn word() -> impl Strategy<Value = FreeWord> {
    prop::collection::vec(prop::sample::select(vec![1, -1, 2, -2]), 1..6)
        .prop_map(FreeWord::new)
        .prop_filter("nontrivial", |w| !w.is_identity())
}

#[test]
fn word_counts_match_closed_form() {
    for rank in 1..=4 {
        for len in 0..=8 {
            let words = enumerate_words(rank, len);
            let r = rank as f64;
            let geometric = if rank == 1 {
                1.0 + 2.0 * len as f64
            } else {
                1.0 + 2.0 * r * ((2.0 * r - 1.0).powi(len as i32) - 1.0) / (2.0 * r - 2.0)
            };
            assert_eq!(words.len() as f64, geometric, "rank {rank}, len {len}");
            assert_eq!(word_count(rank, len), words.len());
            if (2 * rank).pow(len as u32) <= 1 << 16 {
                assert_eq!(brute_count(rank, len), words.len());
            }
            assert!(words.iter().all(|w| is_reduced(w.letters())));
            assert!(words.windows(2).all(|p| p[0] < p[1]));
        }
    }
}

proptest! {
    #![proptest_config(common::cfg(128))]

    #[test]
    fn translation_length_is_a_class_function(w in word(), h in lorentz(1.0), n in 1i32..6) {
        let g = FuchsianGroup::bundled();
        let a = g.evaluate(&w);
        let cyc = ell(&a);
        let conj = h * a * flatlorentz::lorentz::lorentz_inverse(&h);
        prop_assert!(rel(ell(&conj), cyc) < 1e-6);
        prop_assert!(rel(ell(&g.evaluate(&w.pow(n))), n as f64 * cyc) < 1e-6);
    }
}

#[test]
fn generators_map_limit_set_into_deeper_limit_set() {
    let g = FuchsianGroup::bundled();
    for depth in 1..=3 {
        let (ls, deeper) = (limit_set(&g, depth), limit_set(&g, depth + 2));
        for h in g.generators().iter().flat_map(|h| [*h, flatlorentz::lorentz::lorentz_inverse(h)]) {
            for p in &ls.points {
                let q = SpherePoint::direction(&(h * p.spatial())).unwrap();
                assert!(deeper.distance_to(&q) < 1e-6, "depth {depth}");
            }
        }
    }
}

#[test]
fn fixed_point_pairs_approach_random_pairs() {
    let g = FuchsianGroup::bundled();
    let coarse = density_hit_rate(&g, 3, 2, 40, 0.05, 0);
    let fine = density_hit_rate(&g, 3, 5, 40, 0.05, 0);
    assert!(fine >= coarse);
    assert!(fine > 0.5, "hit rate {fine}");
}

#[test]
fn images_of_the_circle_concentrate() {
    let g = FuchsianGroup::bundled();
    let a: FreeWord = "a".parse().unwrap();
    let b: FreeWord = "b".parse().unwrap();
    let words: Vec<FreeWord> = (1..=12).map(|n| a.mul(&b.pow(n))).collect();
    let est = convergence_attractor(&g, &words).unwrap();
    assert!(est.valid);
    let frac = |n: usize| concentration(&g.evaluate(&words[n - 1]), &est.attractor, &est.repeller, 1e-2, 0.1, 720);
    let (early, late) = (frac(3), frac(12));
    assert!(late >= early);
    assert!(late > 0.95, "{early} {late}");
}
