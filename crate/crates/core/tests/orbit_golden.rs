//! Orbit tables checked against a union-find oracle that evaluates the
//! action through `r_of` instead of the generator moves.

use std::collections::HashMap;

use freepal::endo::r_of;
use freepal::freegroup::{FreeWord, Letter};
use freepal::quotient::{orbit_table, FiniteHom, Permutation};

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

/// Orbit partition of `S_n x S_n` as sorted blocks of point indices.
fn oracle_partition(n: usize) -> Vec<Vec<usize>> {
    let perms = Permutation::all(n);
    let pairs: Vec<(Permutation, Permutation)> = perms
        .iter()
        .flat_map(|g| perms.iter().map(move |h| (g.clone(), h.clone())))
        .collect();
    let index: HashMap<&(Permutation, Permutation), usize> =
        pairs.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut parent: Vec<usize> = (0..pairs.len()).collect();
    for (i, (g, h)) in pairs.iter().enumerate() {
        let phi = FiniteHom::new(g.clone(), h.clone()).unwrap();
        for l in [Letter::A, Letter::B] {
            let r = r_of(&FreeWord::letter(l));
            let image = (phi.eval(&r.image_a), phi.eval(&r.image_b));
            let j = index[&image];
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            parent[ri] = rj;
        }
    }
    let mut blocks: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..pairs.len() {
        let r = find(&mut parent, i);
        blocks.entry(r).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = blocks.into_values().collect();
    out.sort();
    out
}

fn table_partition(n: usize) -> Vec<Vec<usize>> {
    let t = orbit_table(n).unwrap();
    let mut blocks = vec![Vec::new(); t.orbits.len()];
    for (i, &id) in t.orbit_id.iter().enumerate() {
        blocks[id].push(i);
    }
    blocks.sort();
    blocks
}

#[test]
fn partitions_match_oracle() {
    for n in 1..=3 {
        assert_eq!(table_partition(n), oracle_partition(n), "S_{n}");
    }
}

#[test]
fn s2_orbits() {
    let t = orbit_table(2).unwrap();
    assert!(t.verify());
    let mut sizes = t.orbit_sizes();
    sizes.sort();
    // (1,1) is fixed; the other three pairs of S2 form one orbit
    assert_eq!(sizes, vec![1, 3]);
}

#[test]
fn orbit_stabilizer_counts() {
    for n in 1..=4 {
        let t = orbit_table(n).unwrap();
        assert!(t.verify());
        let group_order: usize = (1..=n).product();
        assert_eq!(t.orbit_sizes().iter().sum::<usize>(), group_order * group_order);
    }
}

#[test]
fn s3_table_matches_golden_file() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/s3_orbits.tsv");
    let text = orbit_table(3).unwrap().to_text();
    if std::env::var_os("FREEPAL_BLESS").is_some() {
        std::fs::write(path, &text).unwrap();
    }
    let golden = std::fs::read_to_string(path).unwrap();
    assert_eq!(text, golden);
}
