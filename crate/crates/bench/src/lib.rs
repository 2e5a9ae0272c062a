//! Workload helpers for the benchmarks.

use std::collections::BTreeMap;

use hda_core::random::{random_hda, RandomHdaConfig};
use hda_core::{infer_labeling, CubeSpec, Hda};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A row of `n` filled squares sharing vertical edges, labeled `a`
/// horizontally and `b` vertically. With `open_last`, the last square is
/// left hollow.
pub fn ladder(n: usize, open_last: bool) -> Hda {
    let mut specs = Vec::new();
    let mut labels = BTreeMap::new();
    for i in 0..=n {
        specs.push(CubeSpec::vertex(format!("l{i}")));
        specs.push(CubeSpec::vertex(format!("u{i}")));
    }
    for i in 0..=n {
        let id = format!("v{i}");
        specs.push(CubeSpec::new(id.clone(), &[&format!("l{i}")], &[&format!("u{i}")]));
        labels.insert(id, "b".to_string());
    }
    for i in 0..n {
        for row in ["l", "u"] {
            let id = format!("{row}{i}_{}", i + 1);
            specs.push(CubeSpec::new(id.clone(), &[&format!("{row}{i}")], &[&format!("{row}{}", i + 1)]));
            labels.insert(id, "a".to_string());
        }
        if !(open_last && i + 1 == n) {
            specs.push(CubeSpec::new(
                format!("s{i}"),
                &[&format!("v{i}"), &format!("l{i}_{}", i + 1)],
                &[&format!("v{}", i + 1), &format!("u{i}_{}", i + 1)],
            ));
        }
    }
    let hda = Hda::from_specs(specs, "l0").expect("ladder is well formed");
    let l = infer_labeling(&hda, &labels).expect("ladder labels are consistent");
    hda.with_labeling(l).expect("inferred labeling is valid")
}

/// A reproducible pair of random acyclic HDA with about `vertices`
/// vertices each.
pub fn random_pair(seed: u64, vertices: usize) -> (Hda, Hda) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = RandomHdaConfig { vertices, edges: vertices * 2, glue_cube: true, ..Default::default() };
    (random_hda(&mut rng, &cfg), random_hda(&mut rng, &cfg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hda_core::hd_bisim;

    #[test]
    fn ladders() {
        let full = ladder(4, false);
        assert_eq!(full.set().counts(), vec![10, 13, 4]);
        assert!(hd_bisim(&full, &full, true).unwrap().bisimilar);
        assert!(!hd_bisim(&full, &ladder(4, true), true).unwrap().bisimilar);
    }
}
