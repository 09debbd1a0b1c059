//! Naive reference implementations used to certify the optimized solvers.
//!
//! Everything here is exponential and written for obviousness, not speed;
//! it is meant for graphs with at most about 8 vertices.

use ei_core::families::{random_gnp, Probability};
use ei_core::{Graph, VertexSet};

/// Deterministic mixed-density corpus: `count` graphs on `1..=max_n`
/// vertices, cycling through edge densities 1/4, 1/2 and 3/4.
pub fn small_corpus(count: usize, max_n: usize) -> Vec<Graph> {
    let densities = [(1, 4), (1, 2), (3, 4)];
    (0..count)
        .map(|i| {
            let n = 1 + i % max_n;
            let (num, den) = densities[(i / max_n) % densities.len()];
            random_gnp(n, Probability::new(num, den).unwrap(), 7000 + i as u64)
        })
        .collect()
}

/// Every subset of `{0..n-1}`, smallest first.
fn subsets_by_size(n: usize) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = VertexSet::full(n).subsets().collect();
    all.sort_by_key(|s| (s.len(), s.bits()));
    all
}

fn dominates(g: &Graph, a: VertexSet) -> bool {
    (0..g.n()).all(|v| a.contains(v) || g.neighbors(v).intersects(a))
}

pub fn gamma(g: &Graph) -> usize {
    subsets_by_size(g.n()).into_iter().find(|&a| dominates(g, a)).unwrap().len()
}

pub fn idom(g: &Graph) -> usize {
    subsets_by_size(g.n())
        .into_iter()
        .find(|&a| g.is_independent(a) && dominates(g, a))
        .unwrap()
        .len()
}

/// `None` when some vertex of `x` has no neighbor.
pub fn gamma0_of(g: &Graph, x: VertexSet) -> Option<usize> {
    subsets_by_size(g.n())
        .into_iter()
        .find(|&a| x.iter().all(|v| g.neighbors(v).intersects(a)))
        .map(VertexSet::len)
}

pub fn gamma0(g: &Graph) -> Option<usize> {
    gamma0_of(g, g.vertices())
}

/// Maximum over all independent sets, not only maximal ones.
pub fn tau(g: &Graph) -> Option<usize> {
    if !g.isolated_vertices().is_empty() {
        return None;
    }
    subsets_by_size(g.n())
        .into_iter()
        .filter(|&a| g.is_independent(a))
        .map(|a| gamma0_of(g, a).unwrap())
        .max()
}

fn combinations(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if cur.len() == k {
        return visit(cur);
    }
    for i in start..n {
        cur.push(i);
        if combinations(n, k, i + 1, cur, visit) {
            return true;
        }
        cur.pop();
    }
    false
}

/// Smallest edge set `F` such that every vertex is adjacent to an endpoint
/// of some edge in `F`.
pub fn epsilon(g: &Graph) -> Option<usize> {
    if !g.isolated_vertices().is_empty() {
        return None;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0..=edges.len()).find(|&k| {
        combinations(edges.len(), k, 0, &mut Vec::new(), &mut |idx| {
            (0..g.n()).all(|v| {
                idx.iter().any(|&i| {
                    let (a, b) = edges[i];
                    g.has_edge(v, a) || g.has_edge(v, b)
                })
            })
        })
    })
}

/// Tries every assignment of `k` colors, for increasing `k`.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    (0..=n)
        .find(|&k| {
            if n == 0 {
                return true;
            }
            if k == 0 {
                return false;
            }
            let total = k.pow(n as u32);
            (0..total).any(|code| {
                let mut colors = vec![0; n];
                let mut c = code;
                for slot in colors.iter_mut() {
                    *slot = c % k;
                    c /= k;
                }
                g.edges().all(|(u, v)| colors[u] != colors[v])
            })
        })
        .unwrap()
}

pub fn independence_number(g: &Graph) -> usize {
    subsets_by_size(g.n())
        .into_iter()
        .filter(|&a| g.is_independent(a))
        .map(VertexSet::len)
        .max()
        .unwrap_or(0)
}

fn modp(x: i64, p: i64) -> i64 {
    x.rem_euclid(p)
}

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut acc = 1;
    b = modp(b, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Plain Gaussian elimination on a dense matrix over GF(p).
pub fn dense_rank(mut m: Vec<Vec<i64>>, p: i64) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..m.len()).find(|&r| modp(m[r][c], p) != 0) else {
            continue;
        };
        m.swap(rank, r);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for x in m[rank].iter_mut() {
            *x = modp(*x * inv, p);
        }
        for r in 0..m.len() {
            if r != rank && modp(m[r][c], p) != 0 {
                let f = m[r][c];
                let pivot = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(pivot) {
                    *x = modp(*x - f * y, p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Independent sets of `G[w]` grouped by size, each as a sorted vertex list,
/// in lexicographic order of those lists.
pub fn faces(g: &Graph, w: VertexSet) -> Vec<Vec<Vec<usize>>> {
    let verts = w.to_vec();
    let mut by_size: Vec<Vec<Vec<usize>>> = vec![Vec::new(); verts.len() + 1];
    for mask in 0u64..(1 << verts.len()) {
        let face: Vec<usize> = (0..verts.len()).filter(|&i| mask >> i & 1 == 1).map(|i| verts[i]).collect();
        if g.is_independent(face.iter().copied().collect()) {
            by_size[face.len()].push(face);
        }
    }
    while by_size.len() > 1 && by_size.last().unwrap().is_empty() {
        by_size.pop();
    }
    for level in &mut by_size {
        level.sort();
    }
    by_size
}

/// Dense boundary matrix from size-`s` faces to size-`s-1` faces, with the
/// usual alternating signs.
pub fn boundary_matrix(lower: &[Vec<usize>], upper: &[Vec<usize>], p: i64) -> Vec<Vec<i64>> {
    upper
        .iter()
        .map(|face| {
            let mut row = vec![0; lower.len()];
            for j in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(j);
                let col = lower.iter().position(|f| *f == sub).unwrap();
                row[col] = modp(if j % 2 == 0 { 1 } else { -1 }, p);
            }
            row
        })
        .collect()
}

/// Reduced Betti numbers of `ind(G[w])` over GF(p); index `k + 1` holds `β̃_k`.
pub fn betti(g: &Graph, w: VertexSet, p: u32) -> Vec<u64> {
    let p = p as i64;
    let levels = faces(g, w);
    let ranks: Vec<usize> = (0..=levels.len())
        .map(|s| {
            if s == 0 || s >= levels.len() {
                0
            } else {
                dense_rank(boundary_matrix(&levels[s - 1], &levels[s], p), p)
            }
        })
        .collect();
    (0..levels.len())
        .map(|s| (levels[s].len() - ranks[s] - ranks[s + 1]) as u64)
        .collect()
}

/// Hochster's formula evaluated over every subset, no shortcuts.
pub fn pd_reg(g: &Graph, p: u32) -> (usize, usize) {
    let (mut pd, mut reg) = (0isize, 0isize);
    for w in g.vertices().subsets() {
        for (i, &b) in betti(g, w, p).iter().enumerate() {
            let k = i as isize - 1;
            if b != 0 {
                pd = pd.max(w.len() as isize - k - 1);
                reg = reg.max(k + 1);
            }
        }
    }
    (pd as usize, reg as usize)
}

/// Largest minimal vertex cover, by checking every subset.
pub fn big_height(g: &Graph) -> usize {
    let is_cover = |x: VertexSet| g.edges().all(|(u, v)| x.contains(u) || x.contains(v));
    g.vertices()
        .subsets()
        .filter(|&x| is_cover(x) && x.iter().all(|v| !is_cover(x.without(v))))
        .map(VertexSet::len)
        .max()
        .unwrap_or(0)
}
