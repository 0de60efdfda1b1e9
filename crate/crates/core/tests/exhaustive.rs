use std::collections::BTreeSet;

use freepal::braid::{beta, braids_equal, in_n};
use freepal::freegroup::{are_conjugate, FreeWord};
use freepal::pal::{in_image, in_kernel, pal, pal_equal, preimage};

#[test]
fn conjugacy_is_an_equivalence_up_to_length_six() {
    let words = FreeWord::all_up_to(6);
    // class label = lexicographically least rotation of the cyclic core
    let label = |w: &FreeWord| {
        let (core, _) = w.cyclic_reduce();
        let n = core.len();
        (0..n.max(1))
            .map(|k| {
                let mut l = core.letters().to_vec();
                l.rotate_left(k.min(n));
                l
            })
            .min()
            .unwrap()
    };
    let labels: Vec<_> = words.iter().map(label).collect();
    for (i, u) in words.iter().enumerate() {
        assert!(are_conjugate(u, u));
        for (j, v) in words.iter().enumerate().skip(i) {
            let c = are_conjugate(u, v);
            assert_eq!(c, are_conjugate(v, u));
            assert_eq!(c, labels[i] == labels[j], "{u} ~ {v}");
        }
    }
}

#[test]
fn image_matches_enumerated_pal_values() {
    // every Pal value of length <= 7 is reached from a word of length <= 9
    let reached: BTreeSet<FreeWord> = FreeWord::all_up_to(9)
        .iter()
        .map(pal)
        .filter(|g| g.len() <= 7)
        .collect();
    let criterion: BTreeSet<FreeWord> = FreeWord::all_up_to(7)
        .into_iter()
        .filter(in_image)
        .collect();
    assert_eq!(reached, criterion);
}

#[test]
fn image_soundness_up_to_length_six() {
    for w in FreeWord::all_up_to(6) {
        let g = pal(&w);
        assert!(in_image(&g), "Pal({w}) = {g}");
        let back = preimage(&g).unwrap();
        assert!(pal_equal(&back, &w));
    }
}

#[test]
fn kernel_structure_products() {
    let gen: FreeWord = "abA".parse().unwrap();
    let rel: FreeWord = "aBabAb".parse().unwrap();
    let conjugators = FreeWord::all_up_to(2);
    let mut factors = vec![gen.clone(), gen.invert()];
    for c in &conjugators {
        factors.push(c.concat(&rel).concat(&c.invert()));
        factors.push(c.concat(&rel.invert()).concat(&c.invert()));
    }
    for x in &factors {
        for y in &factors {
            for z in factors.iter().step_by(3) {
                let k = x.concat(y).concat(z);
                assert!(in_kernel(&k), "{k}");
                assert!(in_n(&beta(&k)));
            }
        }
    }
}

#[test]
fn pal_equal_matches_direct_comparison() {
    let words = FreeWord::all_up_to(3);
    for u in &words {
        for v in &words {
            assert_eq!(pal_equal(u, v), pal(u) == pal(v), "({u}, {v})");
            if pal_equal(u, v) {
                // equal Pal values come from braids differing by N
                let d = u.invert().concat(v);
                assert!(in_n(&beta(&d)));
            }
        }
    }
}

#[test]
fn relator_conjugates_give_equal_braids() {
    let rel: FreeWord = "aBabAb".parse().unwrap();
    for c in FreeWord::all_up_to(3) {
        let v: FreeWord = "abbA".parse().unwrap();
        let u = v.concat(&c).concat(&rel).concat(&c.invert());
        assert!(braids_equal(&beta(&u), &beta(&v)));
    }
}
