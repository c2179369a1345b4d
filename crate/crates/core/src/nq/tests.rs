use super::*;
use crate::freegroup::simple_nested;

fn nested(idx: &[usize]) -> FreeWord {
    let parts: Vec<FreeWord> = idx.iter().map(|&i| FreeWord::generator(i)).collect();
    simple_nested(&parts).unwrap()
}

fn inv(torsion: &[u64], free: usize) -> AbelianInvariants {
    AbelianInvariants {
        free_rank: free,
        torsion: torsion.to_vec(),
    }
}

/// Witt's necklace count of the free Lie ring.
fn witt(m: usize, d: usize) -> usize {
    fn mobius(n: usize) -> i64 {
        let (mut n, mut k, mut sign) = (n, 2, 1);
        while k * k <= n {
            if n % k == 0 {
                n /= k;
                if n % k == 0 {
                    return 0;
                }
                sign = -sign;
            }
            k += 1;
        }
        if n > 1 {
            sign = -sign;
        }
        sign
    }
    let s: i64 = (1..=d)
        .filter(|e| d.is_multiple_of(*e))
        .map(|e| mobius(d / e) * (m as i64).pow(e as u32))
        .sum();
    (s / d as i64) as usize
}

#[test]
fn infinite_dihedral_quotients() {
    // RC_K for two points is D∞; its class-k quotient is dihedral of order 2^{k+1}.
    let k = SimplicialComplex::discrete(2).unwrap();
    let pc = racg_quotient(&k, 4).unwrap();
    assert_eq!(
        pc.invariants(),
        &[inv(&[2, 2], 0), inv(&[2], 0), inv(&[2], 0), inv(&[2], 0)]
    );
    for c in 1..=4 {
        let q = racg_quotient(&k, c).unwrap();
        let order: i64 = q.relative_orders().iter().map(|o| o.unwrap()).product();
        assert_eq!(order, 1 << (c + 1));
    }
    // g1 g2 has order 2^k in the quotient.
    let x = FreeWord::new(&[1, 2]).unwrap();
    assert!(!image_of(&pc, &x.pow(8)).unwrap().is_empty());
    assert!(image_of(&pc, &x.pow(16)).unwrap().is_empty());
}

#[test]
fn full_simplex_is_abelian() {
    let k = SimplicialComplex::simplex(3).unwrap();
    let pc = racg_quotient(&k, 4).unwrap();
    assert_eq!(
        invariant_lists(&pc),
        vec![vec![2, 2, 2], vec![], vec![], vec![]]
    );
}

#[test]
fn free_group_ranks_are_witt_numbers() {
    let pc = free_quotient(2, 3).unwrap();
    assert_eq!(invariant_lists(&pc), vec![vec![0, 0], vec![0], vec![0, 0]]);
    for (m, c) in [(2, 5), (3, 4), (4, 3)] {
        let pc = free_quotient(m, c).unwrap();
        let expect: Vec<usize> = (1..=c).map(|d| witt(m, d)).collect();
        assert_eq!(pc.dims(), expect, "F_{m} class {c}");
        assert!(pc.invariants().iter().all(|i| i.torsion.is_empty()));
        assert!(pc.consistency_failures(false).unwrap().is_empty());
    }
}

#[test]
fn three_point_dims() {
    let k = SimplicialComplex::discrete(3).unwrap();
    assert_eq!(lcs_dims(&k, 4).unwrap(), vec![3, 3, 5, 8]);
    let two_edges = SimplicialComplex::new(3, &[vec![1, 3], vec![2, 3]]).unwrap();
    assert_eq!(lcs_dims(&two_edges, 4).unwrap(), vec![3, 1, 1, 1]);
}

#[test]
fn weighted_battery_agrees_with_full_battery() {
    for m in 2..=3 {
        let k = SimplicialComplex::discrete(m).unwrap();
        let pc = racg_quotient(&k, 4).unwrap();
        assert!(pc.consistency_failures(true).unwrap().is_empty());
        assert!(pc.consistency_failures(false).unwrap().is_empty());
    }
}

#[test]
fn express_examples() {
    let k = SimplicialComplex::discrete(3).unwrap();
    let pc = racg_quotient(&k, 4).unwrap();
    let e = express_in(&pc, &nested(&[1, 2]), 2).unwrap();
    assert_eq!(e.coords.iter().filter(|&&x| x != 0).count(), 1);
    let w = nested(&[1, 2, 1]).mul(&nested(&[1, 2, 2]).inverse());
    assert!(express_in(&pc, &w, 3).unwrap().to_gf2().is_zero());
    for (i, j) in [(1, 2), (2, 3), (3, 1)] {
        let w = nested(&[i, j, i, i]).mul(&nested(&[i, j, i, j]).inverse());
        assert!(express_in(&pc, &w, 4).unwrap().to_gf2().is_zero());
    }
    assert_eq!(
        express(&pc, &FreeWord::generator(1), 2).unwrap(),
        Expressed::NotInGamma { lowest_weight: 1 }
    );
}

#[test]
fn eight_element_basis() {
    let k = SimplicialComplex::discrete(3).unwrap();
    let pc = racg_quotient(&k, 4).unwrap();
    let list: Vec<FreeWord> = [
        [1, 2, 1, 1],
        [1, 3, 1, 1],
        [2, 3, 2, 1],
        [1, 3, 2, 1],
        [1, 3, 1, 2],
        [2, 3, 2, 2],
        [2, 3, 1, 2],
        [1, 3, 2, 3],
    ]
    .iter()
    .map(|l| nested(l))
    .collect();
    assert!(verify_basis_claim_pc(&pc, 4, &list).unwrap());
    for drop in 0..list.len() {
        let mut short = list.clone();
        short.remove(drop);
        assert!(!verify_basis_claim_pc(&pc, 4, &short).unwrap());
    }
}

#[test]
fn congruences() {
    let (a, b, c) = (
        FreeWord::generator(1),
        FreeWord::generator(2),
        FreeWord::generator(3),
    );
    let lhs = simple_nested(&[a.clone(), b.clone(), c.clone()])
        .unwrap()
        .inverse();
    let rhs = simple_nested(&[b.clone(), a.clone(), c.clone()]).unwrap();
    assert!(verify_congruence(&lhs, &rhs, 4).unwrap());
    // The error term is ((a,b,c),(a,b)) of weight 5.
    assert!(verify_congruence(&lhs, &rhs, 5).unwrap());
    assert!(!verify_congruence(&lhs, &rhs, 6).unwrap());
    assert!(verify_congruence(&lhs, &lhs, 5).unwrap());
    let a2 = nested(&[1, 2]);
    let (b, c) = (FreeWord::generator(3), FreeWord::generator(4));
    let lhs = simple_nested(&[a2.clone(), b.clone(), c.clone()])
        .unwrap()
        .inverse();
    let rhs = simple_nested(&[b, a2, c]).unwrap();
    assert!(verify_congruence(&lhs, &rhs, 5).unwrap());
}

#[test]
fn structure_checks_small() {
    for k in [
        SimplicialComplex::discrete(3).unwrap(),
        SimplicialComplex::new(3, &[vec![1, 2]]).unwrap(),
    ] {
        let pc = racg_quotient(&k, 4).unwrap();
        let r = check_racg_structure(&pc, 50, 7).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}

#[test]
fn caps_are_enforced() {
    let k = SimplicialComplex::discrete(2).unwrap();
    assert!(matches!(racg_quotient(&k, 6), Err(Error::CapExceeded(_))));
    let low = Caps {
        max_class: 2,
        ..Caps::default()
    };
    assert!(nilpotent_quotient_with_caps(&GroupPresentation::racg(&k), 3, &low).is_err());
    assert!(free_quotient(6, 1).is_err());
}

#[test]
fn relator_identifying_generators() {
    // ⟨g1, g2 | g1 g2^-1⟩ ≅ Z.
    let p = GroupPresentation {
        generators: 2,
        relators: vec![FreeWord::new(&[1, -2]).unwrap()],
    };
    let pc = nilpotent_quotient(&p, 3).unwrap();
    assert_eq!(invariant_lists(&pc), vec![vec![0], vec![], vec![]]);
    // ⟨a, b | a^4, b^2, (b a)^2⟩ is dihedral of order 8: class 2 nilpotent.
    let p = GroupPresentation {
        generators: 2,
        relators: vec![
            FreeWord::generator(1).pow(4),
            FreeWord::generator(2).pow(2),
            FreeWord::new(&[2, 1]).unwrap().pow(2),
        ],
    };
    let pc = nilpotent_quotient(&p, 4).unwrap();
    assert_eq!(
        invariant_lists(&pc),
        vec![vec![2, 2], vec![2], vec![], vec![]]
    );
    assert!(pc.consistency_failures(false).unwrap().is_empty());
}
