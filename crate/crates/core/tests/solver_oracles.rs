use ei_core::domination::{self, Param};
use ei_core::hochster;
use ei_core::homology::{betti_numbers, is_cone, IndependenceComplex, Prime};
use ei_core::{Graph, VertexSet};
use ei_testkit as oracle;

fn corpus() -> Vec<Graph> {
    oracle::small_corpus(300, 8)
}

fn value<T>(p: Param<T>, f: impl Fn(&T) -> usize) -> Option<usize> {
    p.feasible().map(f)
}

#[test]
fn domination_solvers_match_brute_force() {
    for g in corpus() {
        assert_eq!(domination::gamma(&g).value, oracle::gamma(&g), "γ {g:?}");
        assert_eq!(domination::idom(&g).value, oracle::idom(&g), "i {g:?}");
        assert_eq!(value(domination::gamma0(&g), |s| s.value), oracle::gamma0(&g), "γ₀ {g:?}");
        assert_eq!(value(domination::tau(&g), |s| s.value), oracle::tau(&g), "τ {g:?}");
        assert_eq!(value(domination::epsilon(&g), |s| s.value), oracle::epsilon(&g), "ε {g:?}");
    }
}

#[test]
fn domination_witnesses_check_out_by_definition() {
    for g in corpus() {
        let all = g.vertices();
        let dom = |a: VertexSet| (a | g.neighborhood_of(a)) == all;
        let gm = domination::gamma(&g);
        assert!(dom(gm.witness) && gm.witness.len() == gm.value);
        let i = domination::idom(&g);
        assert!(dom(i.witness) && g.is_independent(i.witness) && i.witness.len() == i.value);
        if let Some(s) = domination::gamma0(&g).feasible() {
            assert!(all.is_subset(g.neighborhood_of(s.witness)));
        }
        if let Some(t) = domination::tau(&g).feasible() {
            assert!(g.is_independent(t.independent));
            assert!(t.independent.is_subset(g.neighborhood_of(t.cover)));
            assert_eq!(t.cover.len(), t.value);
        }
        if let Some(e) = domination::epsilon(&g).feasible() {
            let reach = e
                .witness
                .iter()
                .fold(VertexSet::EMPTY, |acc, &(a, b)| acc | g.neighbors(a) | g.neighbors(b));
            assert_eq!(reach, all);
            assert!(e.witness.iter().all(|&(a, b)| g.has_edge(a, b)));
            assert_eq!(e.witness.len(), e.value);
        }
    }
}

#[test]
fn chromatic_number_and_dimension_match_brute_force() {
    for g in corpus() {
        assert_eq!(domination::chromatic_number(&g), oracle::chromatic_number(&g), "{g:?}");
        let gc = g.complement();
        assert_eq!(domination::chromatic_number(&gc), oracle::chromatic_number(&gc), "{gc:?}");
        assert_eq!(domination::ind_dimension(&g), oracle::independence_number(&g) as isize - 1);
    }
}

#[test]
fn betti_numbers_match_dense_oracle() {
    for g in corpus() {
        let c = IndependenceComplex::build(&g).unwrap();
        for p in [2, 3] {
            let fast = betti_numbers(&c, Prime::new(p).unwrap());
            assert_eq!(fast.betti, oracle::betti(&g, g.vertices(), p as u32), "p={p} {g:?}");
        }
    }
}

#[test]
fn euler_characteristic_identity() {
    for g in corpus() {
        let c = IndependenceComplex::build(&g).unwrap();
        let f_sum: i64 = c
            .f_vector()
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 1 { f as i64 } else { -(f as i64) })
            .sum();
        for p in [Prime::TWO, Prime::THREE] {
            assert_eq!(betti_numbers(&c, p).euler_characteristic(), f_sum, "{g:?}");
        }
    }
}

#[test]
fn boundary_squares_to_zero() {
    for g in corpus() {
        let c = IndependenceComplex::build(&g).unwrap();
        for p in [3u32, 5] {
            let prime = Prime::new(p as u64).unwrap();
            for k in 1..=c.dim() {
                let upper = c.boundary_rows(k, prime);
                let lower = c.boundary_rows(k - 1, prime);
                for row in &upper {
                    let mut acc = vec![0u64; c.faces(k - 2).len()];
                    for &(mid, a) in row {
                        for &(low, b) in &lower[mid as usize] {
                            acc[low as usize] = (acc[low as usize] + a as u64 * b as u64) % p as u64;
                        }
                    }
                    assert!(acc.iter().all(|&x| x == 0), "∂∂ ≠ 0 at k={k}, p={p}: {g:?}");
                }
            }
        }
    }
}

#[test]
fn homology_is_invariant_under_relabeling() {
    for (i, g) in corpus().into_iter().enumerate() {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).rev().collect();
        perm.rotate_left(i % n.max(1));
        let h = g.permuted(&perm);
        for p in [Prime::TWO, Prime::THREE] {
            let a = betti_numbers(&IndependenceComplex::build(&g).unwrap(), p);
            let b = betti_numbers(&IndependenceComplex::build(&h).unwrap(), p);
            assert_eq!(a, b, "{g:?}");
        }
    }
}

#[test]
fn cones_are_acyclic() {
    for g in corpus().into_iter().filter(is_cone) {
        for p in [Prime::TWO, Prime::THREE] {
            assert!(betti_numbers(&IndependenceComplex::build(&g).unwrap(), p).is_acyclic());
        }
    }
}

#[test]
fn pd_reg_and_big_height_match_naive_hochster() {
    for g in oracle::small_corpus(120, 7) {
        for p in [2u32, 3] {
            let r = hochster::pd_reg(&g, Prime::new(p as u64).unwrap()).unwrap();
            assert_eq!((r.pd, r.reg), oracle::pd_reg(&g, p), "p={p} {g:?}");
        }
        assert_eq!(hochster::big_height(&g), oracle::big_height(&g), "{g:?}");
    }
}
