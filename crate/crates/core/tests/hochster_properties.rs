use ei_core::domination::chromatic_number;
use ei_core::families::{random_gnp, Probability};
use ei_core::hochster::{pd_reg, HochsterTable};
use ei_core::homology::Prime;
use ei_core::Graph;

fn corpus(count: usize, max_n: usize) -> Vec<Graph> {
    (0..count)
        .map(|i| random_gnp(2 + i % (max_n - 1), Probability::new(2, 5).unwrap(), 500 + i as u64))
        .collect()
}

#[test]
fn pd_and_reg_add_over_disjoint_unions() {
    let gs = corpus(24, 5);
    for pair in gs.chunks(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let u = a.disjoint_union(b).unwrap();
        let (ra, rb, ru) = (
            pd_reg(a, Prime::TWO).unwrap(),
            pd_reg(b, Prime::TWO).unwrap(),
            pd_reg(&u, Prime::TWO).unwrap(),
        );
        assert_eq!(ru.pd, ra.pd + rb.pd, "{a:?} + {b:?}");
        assert_eq!(ru.reg, ra.reg + rb.reg, "{a:?} + {b:?}");
    }
}

#[test]
fn adding_isolated_vertices_changes_nothing() {
    for g in corpus(30, 8) {
        let padded = g.disjoint_union(&Graph::empty(2).unwrap()).unwrap();
        let (a, b) = (pd_reg(&g, Prime::TWO).unwrap(), pd_reg(&padded, Prime::TWO).unwrap());
        assert_eq!((a.pd, a.reg, a.bh), (b.pd, b.reg, b.bh));
    }
}

#[test]
fn pd_bounds_big_height_and_reg_bounds_chromatic_number() {
    for g in corpus(80, 10) {
        let r = pd_reg(&g, Prime::TWO).unwrap();
        assert!(r.pd >= r.bh, "{g:?}");
        assert!(r.reg <= chromatic_number(&g.complement()), "{g:?}");
    }
}

#[test]
fn pd_induction_holds_at_every_vertex() {
    for g in corpus(60, 10) {
        let t = HochsterTable::build(&g, Prime::TWO).unwrap();
        for x in 0..g.n() {
            let star = t.pd_within(g.vertices() - g.closed_neighbors(x)) + g.degree(x);
            let del = t.pd_within(g.vertices().without(x)) + 1;
            assert!(t.pd() <= star.max(del), "x={x} {g:?}");
        }
    }
}

#[test]
fn relabeling_preserves_pd_and_reg() {
    for g in corpus(30, 9) {
        let perm: Vec<usize> = (0..g.n()).rev().collect();
        let (a, b) = (pd_reg(&g, Prime::THREE).unwrap(), pd_reg(&g.permuted(&perm), Prime::THREE).unwrap());
        assert_eq!((a.pd, a.reg, a.bh), (b.pd, b.reg, b.bh));
    }
}
