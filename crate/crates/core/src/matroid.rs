//! Simple matroids given by their circuits, with the five construction
//! kinds (explicit circuits, uniform, graphic, rational realization,
//! point–line incidences) and the basic queries: independence, rank,
//! closure, connectivity, localization, direct sum, line-closedness.
//!
//! Ground-set elements are 0-based internally and 1-based in all I/O.
//! Subsets are bitmasks, so the ground set is capped at 31 elements.

use crate::error::{Error, Result};
use crate::intmat::IntMat;
use num_bigint::BigInt;
use num_rational::BigRational;

pub const MAX_GROUND: usize = 31;

/// How the matroid was constructed; carried for reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Circuits,
    Uniform { r: usize },
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
    Realization,
    Lines { lines: Vec<Vec<usize>> },
}

#[derive(Clone, Debug)]
pub struct Matroid {
    n: usize,
    /// sorted bitmasks of the minimal dependent sets; an antichain
    circuits: Vec<u32>,
    provenance: Provenance,
}

pub fn mask_of(elems: &[usize]) -> u32 {
    elems.iter().fold(0u32, |m, &e| m | (1 << e))
}

pub fn elems_of(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

impl Matroid {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn circuits(&self) -> &[u32] {
        &self.circuits
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn full_mask(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    /// From explicit circuits (1-based element lists). Validates simplicity,
    /// the antichain property and the circuit elimination axiom.
    pub fn from_circuits(n: usize, circuits_1based: &[Vec<usize>]) -> Result<Matroid> {
        if n > MAX_GROUND {
            return Err(Error::Budget(format!("ground set of size {n} exceeds {MAX_GROUND}")));
        }
        let mut circuits = Vec::new();
        for c in circuits_1based {
            let mut seen = 0u32;
            for &e in c {
                if e < 1 || e > n {
                    return Err(Error::Invalid(format!("element {e} out of range 1..={n}")));
                }
                let b = 1u32 << (e - 1);
                if seen & b != 0 {
                    return Err(Error::Invalid(format!("repeated element {e} in circuit")));
                }
                seen |= b;
            }
            if c.len() < 3 {
                return Err(Error::NotSimple(format!(
                    "circuit {:?} has size {} < 3",
                    c,
                    c.len()
                )));
            }
            circuits.push(seen);
        }
        circuits.sort_unstable();
        circuits.dedup();
        let m = Matroid {
            n,
            circuits,
            provenance: Provenance::Circuits,
        };
        m.check_antichain()?;
        m.check_elimination()?;
        Ok(m)
    }

    fn check_antichain(&self) -> Result<()> {
        for (i, &a) in self.circuits.iter().enumerate() {
            for &b in &self.circuits[i + 1..] {
                if a & b == a || a & b == b {
                    return Err(Error::Invalid(format!(
                        "circuits {:?} and {:?} are nested",
                        one_based(a),
                        one_based(b)
                    )));
                }
            }
        }
        Ok(())
    }

    fn check_elimination(&self) -> Result<()> {
        for (i, &c1) in self.circuits.iter().enumerate() {
            for &c2 in &self.circuits[i + 1..] {
                let common = c1 & c2;
                if common == 0 {
                    continue;
                }
                for e in elems_of(common) {
                    let target = (c1 | c2) & !(1u32 << e);
                    if !self.circuits.iter().any(|&c| c & target == c) {
                        return Err(Error::CircuitAxiom {
                            c1: one_based(c1),
                            c2: one_based(c2),
                            elem: e + 1,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Uniform matroid U_{r,n}: circuits are all (r+1)-subsets.
    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        if n > MAX_GROUND {
            return Err(Error::Budget(format!("ground set of size {n} exceeds {MAX_GROUND}")));
        }
        if r > n {
            return Err(Error::Invalid(format!("uniform rank {r} exceeds {n}")));
        }
        if r < 2 && r != n {
            return Err(Error::NotSimple(format!("U_{{{r},{n}}} is not simple")));
        }
        let mut circuits = Vec::new();
        if r < n {
            subsets_of_size(n, r + 1, &mut |mask| circuits.push(mask));
        }
        Ok(Matroid {
            n,
            circuits,
            provenance: Provenance::Uniform { r },
        })
    }

    /// Graphic matroid of a simple graph; ground set is the edge list in the
    /// given order, circuits are the edge sets of simple cycles.
    pub fn graphic(vertices: usize, edges: &[(usize, usize)]) -> Result<Matroid> {
        if edges.len() > MAX_GROUND {
            return Err(Error::Budget(format!(
                "edge set of size {} exceeds {MAX_GROUND}",
                edges.len()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for &(a, b) in edges {
            if a == b {
                return Err(Error::NotSimple(format!("loop at vertex {a}")));
            }
            if a < 1 || a > vertices || b < 1 || b > vertices {
                return Err(Error::Invalid(format!("edge ({a},{b}) out of range")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::NotSimple(format!("repeated edge ({a},{b})")));
            }
        }
        let circuits = simple_cycles(vertices, edges);
        Ok(Matroid {
            n: edges.len(),
            circuits,
            provenance: Provenance::Graphic {
                vertices,
                edges: edges.to_vec(),
            },
        })
    }

    /// Matroid of a rational matrix whose columns are the points; circuits
    /// are the minimal linearly dependent column sets.
    pub fn realization(matrix: &[Vec<BigRational>]) -> Result<Matroid> {
        let rows = matrix.len();
        let n = matrix.first().map_or(0, |r| r.len());
        if n > MAX_GROUND {
            return Err(Error::Budget(format!("{n} columns exceed {MAX_GROUND}")));
        }
        let cols: Vec<Vec<BigInt>> = (0..n)
            .map(|j| {
                let mut lcm = BigInt::from(1);
                for row in matrix.iter() {
                    lcm = num_integer::lcm(lcm, row[j].denom().clone());
                }
                matrix.iter().map(|row| row[j].numer() * (&lcm / row[j].denom())).collect()
            })
            .collect();
        let col_rank = |mask: u32| -> usize {
            let sel: Vec<Vec<BigInt>> = (0..rows)
                .map(|i| elems_of(mask).iter().map(|&j| cols[j][i].clone()).collect())
                .collect();
            IntMat::from_rows(sel, mask.count_ones() as usize).rank()
        };
        let full_rank = col_rank(if n == 0 { 0 } else { (1u32 << n) - 1 });
        let mut circuits: Vec<u32> = Vec::new();
        for size in 1..=(full_rank + 1).min(n) {
            subsets_of_size(n, size, &mut |mask| {
                if circuits.iter().any(|&c| c & mask == c) {
                    return;
                }
                if col_rank(mask) < size {
                    circuits.push(mask);
                }
            });
        }
        if circuits.iter().any(|c| c.count_ones() < 3) {
            return Err(Error::NotSimple(
                "realization has a zero column or proportional columns".into(),
            ));
        }
        Ok(Matroid {
            n,
            circuits,
            provenance: Provenance::Realization,
        })
    }

    /// Rank-3 matroid of a point–line incidence: circuits are the collinear
    /// triples plus every 4-subset containing no collinear triple. Lines are
    /// 1-based, must have ≥ 3 points and meet pairwise in ≤ 1 point.
    pub fn from_lines(n: usize, lines_1based: &[Vec<usize>]) -> Result<Matroid> {
        if n > MAX_GROUND {
            return Err(Error::Budget(format!("ground set of size {n} exceeds {MAX_GROUND}")));
        }
        let mut lines = Vec::new();
        for l in lines_1based {
            if l.len() < 3 {
                return Err(Error::Invalid(format!("line {l:?} has fewer than 3 points")));
            }
            let mask = {
                let mut m = 0u32;
                for &e in l {
                    if e < 1 || e > n {
                        return Err(Error::Invalid(format!("point {e} out of range 1..={n}")));
                    }
                    m |= 1 << (e - 1);
                }
                m
            };
            if mask.count_ones() as usize != l.len() {
                return Err(Error::Invalid(format!("line {l:?} repeats a point")));
            }
            lines.push(mask);
        }
        for (i, &a) in lines.iter().enumerate() {
            for &b in &lines[i + 1..] {
                if (a & b).count_ones() > 1 {
                    return Err(Error::LinesOverlap(one_based(a), one_based(b)));
                }
            }
        }
        let mut circuits = Vec::new();
        subsets_of_size(n, 3, &mut |mask| {
            if lines.iter().any(|&l| mask & l == mask) {
                circuits.push(mask);
            }
        });
        let triples: Vec<u32> = circuits.clone();
        subsets_of_size(n, 4, &mut |mask| {
            if !triples.iter().any(|&t| mask & t == t) {
                circuits.push(mask);
            }
        });
        circuits.sort_unstable();
        Ok(Matroid {
            n,
            circuits,
            provenance: Provenance::Lines {
                lines: lines_1based.to_vec(),
            },
        })
    }

    pub fn is_independent(&self, set: u32) -> bool {
        !self.circuits.iter().any(|&c| c & set == c)
    }

    /// Rank by greedy growth with the no-circuit independence test.
    pub fn rank_of_set(&self, set: u32) -> usize {
        let mut t = 0u32;
        let mut rank = 0;
        for e in 0..self.n {
            let b = 1u32 << e;
            if set & b != 0 && self.is_independent(t | b) {
                t |= b;
                rank += 1;
            }
        }
        rank
    }

    pub fn rank(&self) -> usize {
        self.rank_of_set(self.full_mask())
    }

    /// closure(S) = {e : rank(S ∪ {e}) = rank(S)}.
    pub fn closure(&self, set: u32) -> u32 {
        let r = self.rank_of_set(set);
        let mut cl = set;
        for e in 0..self.n {
            let b = 1u32 << e;
            if set & b == 0 && self.rank_of_set(set | b) == r {
                cl |= b;
            }
        }
        cl
    }

    pub fn is_flat(&self, set: u32) -> bool {
        self.closure(set) == set
    }

    /// Connected iff every pair of elements lies in a common circuit;
    /// computed as the transitive closure of circuit-sharing.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut comp: Vec<usize> = (0..self.n).collect();
        fn find(comp: &mut Vec<usize>, x: usize) -> usize {
            if comp[x] != x {
                let r = find(comp, comp[x]);
                comp[x] = r;
            }
            comp[x]
        }
        for &c in &self.circuits {
            let es = elems_of(c);
            for w in es.windows(2) {
                let (a, b) = (find(&mut comp, w[0]), find(&mut comp, w[1]));
                if a != b {
                    comp[a] = b;
                }
            }
        }
        let root = find(&mut comp, 0);
        (1..self.n).all(|e| find(&mut comp, e) == root)
    }

    /// Restriction of the matroid to a flat X, elements relabeled in
    /// ascending order.
    pub fn localization(&self, flat: u32) -> Result<Matroid> {
        if !self.is_flat(flat) {
            return Err(Error::NotAFlat(format!("{:?}", one_based(flat))));
        }
        Ok(self.restriction(flat))
    }

    /// Restriction to an arbitrary subset (elements relabeled ascending).
    pub fn restriction(&self, set: u32) -> Matroid {
        let elems = elems_of(set);
        let pos: std::collections::HashMap<usize, usize> =
            elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let circuits = self
            .circuits
            .iter()
            .filter(|&&c| c & set == c)
            .map(|&c| elems_of(c).iter().fold(0u32, |m, e| m | (1 << pos[e])))
            .collect();
        Matroid {
            n: elems.len(),
            circuits,
            provenance: Provenance::Circuits,
        }
    }

    /// Direct sum; the second ground set is relabeled with offset n₁.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        if n > MAX_GROUND {
            return Err(Error::Budget(format!("direct sum of size {n} exceeds {MAX_GROUND}")));
        }
        let mut circuits = self.circuits.clone();
        circuits.extend(other.circuits.iter().map(|&c| c << self.n));
        Ok(Matroid {
            n,
            circuits,
            provenance: Provenance::Circuits,
        })
    }

    /// S is line-closed iff every rank-2 flat of the restriction to S is
    /// closed in the ambient matroid, i.e. cl({u,v}) ⊆ S for all u,v ∈ S.
    pub fn is_line_closed(&self, set: u32) -> bool {
        let elems = elems_of(set);
        for (i, &u) in elems.iter().enumerate() {
            for &v in &elems[i + 1..] {
                if self.closure(mask_of(&[u, v])) & !set != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Pair-span table: entry (u,v) is the rank-2 flat spanned by u ≠ v.
    pub fn pair_span_table(&self) -> Vec<Vec<u32>> {
        let mut t = vec![vec![0u32; self.n]; self.n];
        for u in 0..self.n {
            for v in u + 1..self.n {
                let cl = self.closure(mask_of(&[u, v]));
                t[u][v] = cl;
                t[v][u] = cl;
            }
        }
        t
    }
}

fn one_based(mask: u32) -> Vec<usize> {
    elems_of(mask).iter().map(|e| e + 1).collect()
}

/// Visit all size-k subsets of {0..n-1} as bitmasks, in increasing order.
pub fn subsets_of_size(n: usize, k: usize, f: &mut impl FnMut(u32)) {
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit = 1u32 << n;
    let mut mask = (1u32 << k) - 1;
    while mask < limit {
        f(mask);
        // Gosper's hack: next subset of the same popcount
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((mask ^ r) >> 2) / c) | r;
    }
}

/// Edge sets of the simple cycles of a graph, as bitmasks over edge indices.
fn simple_cycles(vertices: usize, edges: &[(usize, usize)]) -> Vec<u32> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertices + 1];
    for (i, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    let mut cycles = Vec::new();
    // start each cycle at its smallest vertex; orient by requiring the
    // second vertex to be smaller than the last
    for s in 1..=vertices {
        let mut path: Vec<usize> = vec![s];
        let mut edge_mask = 0u32;
        let mut visited = vec![false; vertices + 1];
        visited[s] = true;
        dfs_cycles(s, s, &adj, &mut path, &mut visited, &mut edge_mask, &mut cycles);
        visited[s] = false;
    }
    cycles.sort_unstable();
    cycles.dedup();
    cycles
}

#[allow(clippy::too_many_arguments)]
fn dfs_cycles(
    start: usize,
    v: usize,
    adj: &[Vec<(usize, usize)>],
    path: &mut Vec<usize>,
    visited: &mut Vec<bool>,
    edge_mask: &mut u32,
    out: &mut Vec<u32>,
) {
    for &(w, ei) in &adj[v] {
        if w == start && path.len() >= 3 {
            if path[1] < *path.last().unwrap() {
                out.push(*edge_mask | (1 << ei));
            }
            continue;
        }
        if w <= start || visited[w] {
            continue;
        }
        visited[w] = true;
        path.push(w);
        *edge_mask |= 1 << ei;
        dfs_cycles(start, w, adj, path, visited, edge_mask, out);
        *edge_mask &= !(1 << ei);
        path.pop();
        visited[w] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn uniform_2_3_circuits() {
        let m = Matroid::uniform(2, 3).unwrap();
        assert_eq!(m.circuits(), &[0b111]);
    }

    #[test]
    fn triangle_graph_is_u23() {
        let m = Matroid::graphic(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(m.circuits(), Matroid::uniform(2, 3).unwrap().circuits());
    }

    #[test]
    fn k4_has_seven_circuits() {
        let m = Matroid::graphic(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        // 4 triangles and 3 four-cycles
        assert_eq!(m.circuits().len(), 7);
        assert_eq!(m.rank(), 3);
        assert!(m.is_connected());
    }

    #[test]
    fn closure_of_pair_in_u23() {
        let m = Matroid::uniform(2, 3).unwrap();
        assert_eq!(m.closure(0b011), 0b111);
    }

    #[test]
    fn spanning_tree_of_k4_independent() {
        let m = Matroid::graphic(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        // edges (1,2),(1,3),(1,4) form a star = spanning tree
        assert!(m.is_independent(0b000111));
        assert_eq!(m.rank_of_set(0b000111), 3);
    }

    #[test]
    fn direct_sum_example() {
        let u = Matroid::uniform(2, 3).unwrap();
        let m = u.direct_sum(&u).unwrap();
        assert_eq!(m.circuits(), &[0b000111, 0b111000]);
        assert!(!m.is_connected());
        // rank and closure of a cross pair {1,5}
        assert_eq!(m.rank_of_set(mask_of(&[0, 4])), 2);
        assert_eq!(m.closure(mask_of(&[0, 4])), mask_of(&[0, 4]));
    }

    #[test]
    fn direct_sum_with_empty_is_identity() {
        let u = Matroid::uniform(2, 3).unwrap();
        let e = Matroid::uniform(0, 0).unwrap();
        let m = u.direct_sum(&e).unwrap();
        assert_eq!(m.circuits(), u.circuits());
        assert_eq!(m.n(), 3);
    }

    #[test]
    fn localization_at_line_is_uniform() {
        let m = Matroid::graphic(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        // triangle on edges 0,1,3 = {(1,2),(1,3),(2,3)}
        let tri = mask_of(&[0, 1, 3]);
        assert!(m.is_flat(tri));
        let loc = m.localization(tri).unwrap();
        assert_eq!(loc.circuits(), Matroid::uniform(2, 3).unwrap().circuits());
    }

    #[test]
    fn localization_rejects_non_flat() {
        let m = Matroid::uniform(2, 3).unwrap();
        assert!(m.localization(0b011).is_err());
    }

    #[test]
    fn circuit_axiom_violation_reported() {
        // {1,2,3} and {1,4,5} share 1 but no circuit inside {2,3,4,5}
        let r = Matroid::from_circuits(5, &[vec![1, 2, 3], vec![1, 4, 5]]);
        assert!(matches!(r, Err(Error::CircuitAxiom { .. })));
    }

    #[test]
    fn non_simple_rejected() {
        assert!(Matroid::from_circuits(3, &[vec![1, 2]]).is_err());
    }

    #[test]
    fn line_closed_checks() {
        let m = Matroid::uniform(2, 3).unwrap();
        assert!(m.is_line_closed(m.full_mask()));
        assert!(!m.is_line_closed(0b011));
    }

    #[test]
    fn realization_of_generic_matrix_is_uniform() {
        // columns (1,0),(0,1),(1,1),(1,2) are generic in Q^2
        let mat: Vec<Vec<BigRational>> = vec![
            vec![rat(1), rat(0), rat(1), rat(1)],
            vec![rat(0), rat(1), rat(1), rat(2)],
        ];
        let m = Matroid::realization(&mat).unwrap();
        assert_eq!(m.circuits(), Matroid::uniform(2, 4).unwrap().circuits());
    }

    #[test]
    fn realization_with_dependency() {
        // column 3 = column 1 + column 2, plus a generic column 4
        let mat: Vec<Vec<BigRational>> = vec![
            vec![rat(1), rat(0), rat(1), rat(3)],
            vec![rat(0), rat(1), rat(1), rat(5)],
            vec![rat(0), rat(0), rat(0), rat(7)],
        ];
        let m = Matroid::realization(&mat).unwrap();
        assert_eq!(m.circuits(), &[0b0111]);
    }

    #[test]
    fn lines_constructor_rejects_overlap() {
        let r = Matroid::from_lines(5, &[vec![1, 2, 3], vec![1, 2, 4]]);
        assert!(matches!(r, Err(Error::LinesOverlap(..))));
    }

    #[test]
    fn lines_all_on_one_line_gives_u2n() {
        let m = Matroid::from_lines(4, &[vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(m.circuits(), Matroid::uniform(2, 4).unwrap().circuits());
    }

    #[test]
    fn subsets_enumeration_counts() {
        let mut count = 0;
        subsets_of_size(6, 3, &mut |_| count += 1);
        assert_eq!(count, 20);
        let mut count0 = 0;
        subsets_of_size(5, 0, &mut |_| count0 += 1);
        assert_eq!(count0, 1);
    }
}
