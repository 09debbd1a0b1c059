//! Exact minimum set cover over a universe of at most 64 elements.

use crate::vertex_set::VertexSet;

/// Indices of a minimum family of `sets` covering `universe`, or `None` if
/// the union falls short. Ties resolve to the first optimum met in the
/// deterministic search order.
pub fn min_set_cover(universe: VertexSet, sets: &[VertexSet]) -> Option<Vec<usize>> {
    let clipped: Vec<VertexSet> = sets.iter().map(|&s| s & universe).collect();
    let union = clipped.iter().fold(VertexSet::EMPTY, |acc, &s| acc | s);
    if !universe.is_subset(union) {
        return None;
    }
    // Drop sets contained in another one (keep the earliest of equal sets).
    let useful: Vec<usize> = (0..clipped.len())
        .filter(|&i| {
            !clipped[i].is_empty()
                && !(0..clipped.len()).any(|j| {
                    j != i
                        && clipped[i].is_subset(clipped[j])
                        && (clipped[i] != clipped[j] || j < i)
                })
        })
        .collect();

    let mut search = Search {
        sets: &clipped,
        useful: &useful,
        best: greedy(universe, &clipped, &useful),
        chosen: Vec::new(),
    };
    search.branch(universe);
    Some(search.best)
}

fn greedy(universe: VertexSet, sets: &[VertexSet], useful: &[usize]) -> Vec<usize> {
    let mut left = universe;
    let mut picked = Vec::new();
    while !left.is_empty() {
        let &i = useful
            .iter()
            .max_by_key(|&&i| ((sets[i] & left).len(), std::cmp::Reverse(i)))
            .expect("cover exists");
        picked.push(i);
        left -= sets[i];
    }
    picked
}

struct Search<'a> {
    sets: &'a [VertexSet],
    useful: &'a [usize],
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn branch(&mut self, left: VertexSet) {
        if left.is_empty() {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        let max_cover = self
            .useful
            .iter()
            .map(|&i| (self.sets[i] & left).len())
            .max()
            .unwrap_or(0);
        if max_cover == 0 {
            return;
        }
        if self.chosen.len() + left.len().div_ceil(max_cover) >= self.best.len() {
            return;
        }
        // Branch on the element with the fewest covering sets.
        let (_, element) = left
            .iter()
            .map(|e| (self.useful.iter().filter(|&&i| self.sets[i].contains(e)).count(), e))
            .min()
            .expect("left is nonempty");
        let mut options: Vec<usize> = self
            .useful
            .iter()
            .copied()
            .filter(|&i| self.sets[i].contains(element))
            .collect();
        options.sort_by_key(|&i| (std::cmp::Reverse((self.sets[i] & left).len()), i));
        for i in options {
            self.chosen.push(i);
            self.branch(left - self.sets[i]);
            self.chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn finds_minimum_where_greedy_fails() {
        // Greedy takes the big middle set first and needs 3.
        let universe = set(&[0, 1, 2, 3, 4, 5]);
        let sets = [set(&[0, 1, 2]), set(&[3, 4, 5]), set(&[1, 2, 3, 4])];
        assert_eq!(greedy(universe, &sets, &[0, 1, 2]).len(), 3);
        assert_eq!(min_set_cover(universe, &sets).unwrap(), vec![0, 1]);
    }

    #[test]
    fn infeasible_and_trivial() {
        assert_eq!(min_set_cover(set(&[0, 7]), &[set(&[0])]), None);
        assert_eq!(min_set_cover(VertexSet::EMPTY, &[]), Some(vec![]));
    }
}
