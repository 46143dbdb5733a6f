use super::structure::IncidenceStructure;
use super::IncidenceError;

/// The 15 two-subsets of `{0, .., 5}` in lexicographic order.
fn pairs_of_six() -> Vec<(usize, usize)> {
    (0..6).flat_map(|a| (a + 1..6).map(move |b| (a, b))).collect()
}

/// All partitions of `items` into unordered pairs, in lexicographic order of
/// their pair sequences.
fn perfect_matchings(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for (i, &partner) in rest.iter().enumerate() {
        let remaining: Vec<usize> = rest
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &v)| v)
            .collect();
        for mut tail in perfect_matchings(&remaining) {
            tail.insert(0, (first, partner));
            out.push(tail);
        }
    }
    out
}

/// GQ(2,2): points are the 2-subsets of a 6-set, lines are the 15 partitions
/// of the 6-set into three 2-subsets, incidence is membership.
pub fn gen_doily() -> IncidenceStructure {
    let points = pairs_of_six();
    let blocks: Vec<Vec<usize>> = perfect_matchings(&[0, 1, 2, 3, 4, 5])
        .into_iter()
        .map(|m| {
            let mut idx: Vec<usize> = m
                .iter()
                .map(|pair| points.iter().position(|p| p == pair).expect("pair is a point"))
                .collect();
            idx.sort_unstable();
            idx
        })
        .collect();
    IncidenceStructure::from_blocks(points.len(), &blocks).expect("doily construction is well-formed")
}

/// The `n × n` grid: point `(i, j)` has index `i n + j`; blocks are the `n`
/// rows followed by the `n` columns. Realizes GQ(n-1, 1).
pub fn gen_grid(n: usize) -> Result<IncidenceStructure, IncidenceError> {
    if n < 2 {
        return Err(IncidenceError::GridTooSmall(n));
    }
    let rows = (0..n).map(|i| (0..n).map(|j| i * n + j).collect());
    let cols = (0..n).map(|j| (0..n).map(|i| i * n + j).collect());
    let blocks: Vec<Vec<usize>> = rows.chain(cols).collect();
    IncidenceStructure::from_blocks(n * n, &blocks)
}
