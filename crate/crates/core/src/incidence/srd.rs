use std::fmt;

use serde::Serialize;

use super::structure::IncidenceStructure;

/// Parameters of a strongly regular design.
///
/// Field order matches the conventional tuple
/// `(s1, s2, a1, b1, a2, b2, N1, P1, N2, P2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SrdParams {
    /// Block size.
    pub s1: usize,
    /// Number of blocks through a point.
    pub s2: usize,
    /// Larger / smaller block-intersection size.
    pub a1: usize,
    pub b1: usize,
    /// Larger / smaller point-intersection size (common blocks).
    pub a2: usize,
    pub b2: usize,
    /// Points of `Y` adjacent to `x` in the point graph, for `x ∈ Y` / `x ∉ Y`.
    #[serde(rename = "N1")]
    pub n1_local: usize,
    #[serde(rename = "P1")]
    pub p1_local: usize,
    /// Blocks through `x` adjacent to `Y` in the block graph, for `x ∈ Y` / `x ∉ Y`.
    #[serde(rename = "N2")]
    pub n2_local: usize,
    #[serde(rename = "P2")]
    pub p2_local: usize,
}

impl SrdParams {
    pub fn as_array(&self) -> [usize; 10] {
        [
            self.s1,
            self.s2,
            self.a1,
            self.b1,
            self.a2,
            self.b2,
            self.n1_local,
            self.p1_local,
            self.n2_local,
            self.p2_local,
        ]
    }

    /// Parameters of the dual design `(B, P, Fᵀ)`.
    pub fn dual(&self) -> Self {
        SrdParams {
            s1: self.s2,
            s2: self.s1,
            a1: self.a2,
            b1: self.b2,
            a2: self.a1,
            b2: self.b1,
            n1_local: self.n2_local,
            p1_local: self.p2_local,
            n2_local: self.n1_local,
            p2_local: self.p1_local,
        }
    }
}

/// The objects exhibiting a failed axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Point { point: usize },
    Block { block: usize },
    PointPair { x: usize, y: usize },
    BlockPair { y: usize, z: usize },
    PointBlock { point: usize, block: usize },
    /// The structure has no pair of the required kind at all.
    Whole,
}

/// First violated axiom of the strongly-regular-design definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SrdViolation {
    /// Axiom number, 1 to 6.
    pub condition: u8,
    pub witness: Witness,
    pub detail: String,
}

impl fmt::Display for SrdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition ({}) fails at {:?}: {}", self.condition, self.witness, self.detail)
    }
}

impl std::error::Error for SrdViolation {}

fn violation(condition: u8, witness: Witness, detail: impl Into<String>) -> SrdViolation {
    SrdViolation {
        condition,
        witness,
        detail: detail.into(),
    }
}

/// Check all six axioms directly on the flags, in order, and extract the
/// parameters. The reported witness is the lexicographically first
/// offending object or pair.
pub fn check_srd(d: &IncidenceStructure) -> Result<SrdParams, SrdViolation> {
    let params = check_conditions_1_to_5(d)?;
    match check_conditions_1_to_5(&d.dual()) {
        Ok(dual) if dual == params.dual() => Ok(params),
        Ok(dual) => Err(violation(
            6,
            Witness::Whole,
            format!("dual parameters {:?} differ from {:?}", dual.as_array(), params.dual().as_array()),
        )),
        Err(v) => Err(violation(
            6,
            undualize(v.witness),
            format!("dual structure fails condition ({}): {}", v.condition, v.detail),
        )),
    }
}

fn undualize(w: Witness) -> Witness {
    match w {
        Witness::Point { point } => Witness::Block { block: point },
        Witness::Block { block } => Witness::Point { point: block },
        Witness::PointPair { x, y } => Witness::BlockPair { y: x, z: y },
        Witness::BlockPair { y, z } => Witness::PointPair { x: y, y: z },
        Witness::PointBlock { point, block } => Witness::PointBlock { point: block, block: point },
        Witness::Whole => Witness::Whole,
    }
}

fn check_conditions_1_to_5(d: &IncidenceStructure) -> Result<SrdParams, SrdViolation> {
    let (n1, n2) = (d.n1(), d.n2());

    // (1) regularity
    let point_degrees: Vec<usize> = (0..n1).map(|x| d.blocks_of(x).len()).collect();
    let s2 = point_degrees[0];
    if let Some(x) = point_degrees.iter().position(|&k| k != s2) {
        return Err(violation(
            1,
            Witness::Point { point: x },
            format!("point lies on {} blocks, point 0 on {}", point_degrees[x], s2),
        ));
    }
    let block_sizes: Vec<usize> = (0..n2).map(|b| d.points_of(b).len()).collect();
    let s1 = block_sizes[0];
    if let Some(b) = block_sizes.iter().position(|&k| k != s1) {
        return Err(violation(
            1,
            Witness::Block { block: b },
            format!("block has {} points, block 0 has {}", block_sizes[b], s1),
        ));
    }
    if s2 == 0 {
        return Err(violation(1, Witness::Point { point: 0 }, "points lie on no block"));
    }
    if s1 == 0 {
        return Err(violation(1, Witness::Block { block: 0 }, "blocks are empty"));
    }

    // (2) two block-intersection numbers
    let block_meet: Vec<Vec<usize>> = (0..n2)
        .map(|y| (0..n2).map(|z| d.common_points(y, z)).collect())
        .collect();
    let (a1, b1) = two_values(n2, |y, z| block_meet[y][z])
        .map_err(|(w, msg)| violation(2, w.map_or(Witness::Whole, |(y, z)| Witness::BlockPair { y, z }), msg))?;

    // (3) two point-intersection numbers
    let point_meet: Vec<Vec<usize>> = (0..n1)
        .map(|x| (0..n1).map(|y| d.common_blocks(x, y)).collect())
        .collect();
    let (a2, b2) = two_values(n1, |x, y| point_meet[x][y])
        .map_err(|(w, msg)| violation(3, w.map_or(Witness::Whole, |(x, y)| Witness::PointPair { x, y }), msg))?;

    // (4) local regularity, point side
    let (n1_local, p1_local) = local_counts(d, |x, block| {
        (0..n1)
            .filter(|&z| z != x && d.is_flag(z, block) && point_meet[x][z] == a2)
            .count()
    })
    .map_err(|(w, msg)| violation(4, w, msg))?;

    // (5) local regularity, block side
    let (n2_local, p2_local) = local_counts(d, |x, block| {
        (0..n2)
            .filter(|&z| z != block && d.is_flag(x, z) && block_meet[block][z] == a1)
            .count()
    })
    .map_err(|(w, msg)| violation(5, w, msg))?;

    Ok(SrdParams {
        s1,
        s2,
        a1,
        b1,
        a2,
        b2,
        n1_local,
        p1_local,
        n2_local,
        p2_local,
    })
}

type PairFailure = (Option<(usize, usize)>, String);

/// Values of `meet` over unordered distinct pairs must be exactly two numbers;
/// returns `(larger, smaller)`.
fn two_values(n: usize, meet: impl Fn(usize, usize) -> usize) -> Result<(usize, usize), PairFailure> {
    let mut seen: Vec<usize> = Vec::new();
    let mut first_pair = None;
    for i in 0..n {
        for j in i + 1..n {
            first_pair.get_or_insert((i, j));
            let m = meet(i, j);
            if !seen.contains(&m) {
                if seen.len() == 2 {
                    return Err((
                        Some((i, j)),
                        format!("third intersection value {} besides {:?}", m, seen),
                    ));
                }
                seen.push(m);
            }
        }
    }
    match seen.as_slice() {
        [u, v] => Ok(((*u).max(*v), (*u).min(*v))),
        [u] => Err((first_pair, format!("only one intersection value ({}) occurs", u))),
        _ => Err((None, "fewer than two objects, no intersection values".to_string())),
    }
}

/// The count must depend only on whether `x ∈ Y`; returns `(value on flags, value off flags)`.
fn local_counts(
    d: &IncidenceStructure,
    count: impl Fn(usize, usize) -> usize,
) -> Result<(usize, usize), (Witness, String)> {
    let mut on: Option<usize> = None;
    let mut off: Option<usize> = None;
    for x in 0..d.n1() {
        for b in 0..d.n2() {
            let c = count(x, b);
            let slot = if d.is_flag(x, b) { &mut on } else { &mut off };
            match *slot {
                None => *slot = Some(c),
                Some(expected) if expected != c => {
                    let rel = if d.is_flag(x, b) { "x ∈ Y" } else { "x ∉ Y" };
                    return Err((
                        Witness::PointBlock { point: x, block: b },
                        format!("count {} differs from {} seen earlier with {}", c, expected, rel),
                    ));
                }
                Some(_) => {}
            }
        }
    }
    Ok((on.unwrap_or(0), off.unwrap_or(0)))
}
