//! Exact tangent-space dimensions `T(I) = dim Hom(I, R/I)` for 3-variable
//! monomial ideals, computed degree by degree.
//!
//! For a fixed shift `α`, a homomorphism sends each minimal generator `u`
//! to a multiple of the monomial with exponent `u + α`. The generator is
//! *free* when `u + α` lands in the complement of the ideal; otherwise its
//! image is forced to zero. The pairwise syzygy between generators `u`, `v`
//! binds their scalars exactly when `lcm(u,v) + α` lands in the complement
//! (pairwise relations generate all syzygies of a monomial ideal, so no
//! other constraints arise). The graded piece therefore has dimension equal
//! to the number of connected components of the binding graph whose
//! vertices are all free: a bound involving a non-free vertex kills the
//! whole component.
//!
//! A nonzero piece needs a free vertex, so only shifts of the form
//! `c - u` with `c` a complement point and `u` a generator can contribute;
//! this finite candidate set sits inside the per-coordinate box
//! `[-g_c, e_c]` (`g_c` = max generator exponent, `e_c` = max complement
//! coordinate), which the tests re-scan with margin.

use std::collections::BTreeSet;

use crate::cache::TangentCache;
use crate::error::{Error, Result};
use crate::hom2d::{self, Dsu};
use crate::lattice::{render_monomial3, Exp3, Shift3, Staircase3};
use crate::num::{binom, checked_add, checked_mul, checked_sub};

/// The binding graph of one graded piece.
#[derive(Debug, Clone)]
pub struct SyzygyGraph {
    pub shift: Shift3,
    pub generators: Vec<Exp3>,
    /// `free[t]` iff `generators[t] + shift` lies in the complement.
    pub free: Vec<bool>,
    /// Pairs whose shifted lcm lies in the complement.
    pub edges: Vec<(usize, usize)>,
}

impl SyzygyGraph {
    pub fn build(ideal: &Staircase3, shift: Shift3) -> SyzygyGraph {
        let generators = ideal.minimal_generators().gens().to_vec();
        SyzygyGraph::build_with_gens(ideal, &generators, shift)
    }

    fn build_with_gens(ideal: &Staircase3, generators: &[Exp3], shift: Shift3) -> SyzygyGraph {
        let in_complement = |x: i64, y: i64, z: i64| {
            x >= 0 && y >= 0 && z >= 0 && !ideal.ideal_contains_signed(x, y, z)
        };
        let shifted = |u: &Exp3| {
            (
                u.x as i64 + shift.x,
                u.y as i64 + shift.y,
                u.z as i64 + shift.z,
            )
        };
        let free: Vec<bool> = generators
            .iter()
            .map(|u| {
                let (x, y, z) = shifted(u);
                in_complement(x, y, z)
            })
            .collect();
        let mut edges = Vec::new();
        for s in 0..generators.len() {
            for t in s + 1..generators.len() {
                let l = generators[s].lcm(&generators[t]);
                let (x, y, z) = shifted(&l);
                if in_complement(x, y, z) {
                    // An endpoint whose shifted exponent lies inside the
                    // ideal would force the shifted lcm inside as well, so
                    // active edges never touch such vertices.
                    for e in [s, t] {
                        let (x, y, z) = shifted(&generators[e]);
                        assert!(
                            !ideal.ideal_contains_signed(x, y, z),
                            "active edge touching an ideal-interior vertex"
                        );
                    }
                    edges.push((s, t));
                }
            }
        }
        SyzygyGraph {
            shift,
            generators: generators.to_vec(),
            free,
            edges,
        }
    }

    /// Number of connected components all of whose vertices are free.
    pub fn contribution(&self) -> i64 {
        let mut dsu = Dsu::new(self.generators.len());
        for &(s, t) in &self.edges {
            dsu.union(s, t);
        }
        dsu.count_all_free_components(&self.free)
    }
}

/// Dimension of the degree-`shift` piece of `Hom(I, R/I)`.
pub fn graded_tangent_piece(ideal: &Staircase3, shift: Shift3) -> i64 {
    SyzygyGraph::build(ideal, shift).contribution()
}

/// Shifts that can carry a nonzero graded piece: differences of a
/// complement point and a minimal generator.
pub fn candidate_shifts(ideal: &Staircase3) -> BTreeSet<Shift3> {
    let gens = ideal.minimal_generators();
    let mut shifts = BTreeSet::new();
    for c in ideal.complement_points() {
        for u in gens.gens() {
            shifts.insert(Shift3::new(
                c.x as i64 - u.x as i64,
                c.y as i64 - u.y as i64,
                c.z as i64 - u.z as i64,
            ));
        }
    }
    shifts
}

/// `T(I)`: the tangent-space dimension of the Hilbert scheme of points at
/// the ideal, as the sum of all graded piece dimensions.
pub fn tangent_dimension(ideal: &Staircase3) -> i64 {
    let generators = ideal.minimal_generators().gens().to_vec();
    candidate_shifts(ideal)
        .into_iter()
        .map(|shift| SyzygyGraph::build_with_gens(ideal, &generators, shift).contribution())
        .sum()
}

/// Memoized [`tangent_dimension`], keyed by canonical ideal string.
pub fn tangent_dimension_cached(ideal: &Staircase3, cache: &TangentCache) -> i64 {
    let key = ideal.render();
    if let Some(t) = cache.get(&key) {
        return t;
    }
    let t = tangent_dimension(ideal);
    cache.insert(&key, t);
    t
}

/// Validation variant: a raw scan of the certified per-coordinate shift
/// box, widened by `margin` on every side.
pub fn tangent_dimension_scan(ideal: &Staircase3, margin: i64) -> i64 {
    let gens = ideal.minimal_generators().gens().to_vec();
    let complement = ideal.complement_points();
    let max_gen = |f: fn(&Exp3) -> usize| gens.iter().map(&f).max().unwrap_or(0) as i64;
    let max_pt = |f: fn(&Exp3) -> usize| complement.iter().map(&f).max().unwrap_or(0) as i64;
    let lo = [
        -max_gen(|g| g.x) - margin,
        -max_gen(|g| g.y) - margin,
        -max_gen(|g| g.z) - margin,
    ];
    let hi = [
        max_pt(|p| p.x) + margin,
        max_pt(|p| p.y) + margin,
        max_pt(|p| p.z) + margin,
    ];
    let mut total = 0;
    for x in lo[0]..=hi[0] {
        for y in lo[1]..=hi[1] {
            for z in lo[2]..=hi[2] {
                total +=
                    SyzygyGraph::build_with_gens(ideal, &gens, Shift3::new(x, y, z)).contribution();
            }
        }
    }
    total
}

/// Dimension of one graded piece by rank computation instead of component
/// counting: set up the binding equations over the free generators and
/// eliminate. Kept deliberately independent of the union-find route.
pub fn graded_piece_by_elimination(ideal: &Staircase3, shift: Shift3) -> i64 {
    let graph = SyzygyGraph::build(ideal, shift);
    let col_of: Vec<Option<usize>> = {
        let mut next = 0;
        graph
            .free
            .iter()
            .map(|&f| {
                if f {
                    next += 1;
                    Some(next - 1)
                } else {
                    None
                }
            })
            .collect()
    };
    let nfree = col_of.iter().flatten().count();
    if nfree == 0 {
        return 0;
    }
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for &(s, t) in &graph.edges {
        let mut row = vec![0i64; nfree];
        match (col_of[s], col_of[t]) {
            (Some(cs), Some(ct)) => {
                row[cs] = 1;
                row[ct] = -1;
            }
            (Some(cs), None) => row[cs] = 1,
            (None, Some(ct)) => row[ct] = 1,
            (None, None) => continue,
        }
        rows.push(row);
    }
    nfree as i64 - rank(&mut rows)
}

fn rank(rows: &mut [Vec<i64>]) -> i64 {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in rank + 1..rows.len() {
            if rows[r][col] != 0 {
                let (a, b) = (rows[rank][col], rows[r][col]);
                let (pivot_row, rest) = rows.split_at_mut(rank + 1);
                let pivot_row = &pivot_row[rank];
                let target = &mut rest[r - rank - 1];
                for (t, p) in target[col..].iter_mut().zip(&pivot_row[col..]) {
                    *t = *t * a - *p * b;
                }
            }
        }
        rank += 1;
    }
    rank as i64
}

/// `T(I)` recomputed entirely through the elimination route.
pub fn tangent_dimension_by_elimination(ideal: &Staircase3) -> i64 {
    candidate_shifts(ideal)
        .into_iter()
        .map(|shift| graded_piece_by_elimination(ideal, shift))
        .sum()
}

/// The matrix of 2-variable `hom(I_i, S/I_j)` values across the slice
/// decomposition: rows `i` in `0..=m1`, columns `j` in `0..m1`.
#[derive(Debug, Clone)]
pub struct CrossHomMatrix {
    pub entries: Vec<Vec<i64>>,
    pub slice_colengths: Vec<i64>,
}

impl CrossHomMatrix {
    pub fn total(&self) -> i64 {
        self.entries.iter().flatten().sum()
    }
}

pub fn cross_homs(ideal: &Staircase3) -> CrossHomMatrix {
    let slices = ideal.decompose();
    let m1 = ideal.m1();
    let entries = (0..=m1)
        .map(|i| {
            (0..m1)
                .map(|j| hom2d::hom2_by_formula(&slices[i], &slices[j]))
                .collect()
        })
        .collect();
    let slice_colengths = slices.iter().map(|s| s.colength() as i64).collect();
    CrossHomMatrix {
        entries,
        slice_colengths,
    }
}

/// Count of shifts with negative `x`-part that can never map a minimal
/// generator back into the ideal: `binom(m1+2, 4)`, also evaluated as the
/// double sum over slice pairs. Both forms are computed and must agree.
pub fn zero_vector_budget(m1: usize) -> i64 {
    let m1 = m1 as i64;
    let closed = binom(m1 + 2, 4);
    let mut double_sum = 0i64;
    for j in 0..m1 {
        for i in j + 1..=m1 {
            double_sum += binom(i - j, 2);
        }
    }
    assert_eq!(closed, double_sum, "budget identity must hold");
    closed
}

/// For every minimal generator `g` and every shift with negative `x`-part,
/// nonnegative `y`- and `z`-parts, and negative coordinate sum, `g + shift`
/// must avoid the ideal. Holds for every Borel-fixed ideal; can fail
/// otherwise, so non-Borel input is rejected.
pub fn shift_exclusion_check(ideal: &Staircase3) -> Result<bool> {
    if !ideal.is_borel() {
        return Err(Error::NotBorel);
    }
    Ok(shift_exclusion_holds(ideal))
}

/// The raw scan behind [`shift_exclusion_check`], usable on any staircase.
pub fn shift_exclusion_holds(ideal: &Staircase3) -> bool {
    for g in ideal.minimal_generators().gens() {
        for ax in -(g.x as i64)..0 {
            for ay in 0..=(-1 - ax) {
                for az in 0..=(-1 - ax - ay) {
                    let e = Exp3::new(
                        (g.x as i64 + ax) as usize,
                        g.y + ay as usize,
                        g.z + az as usize,
                    );
                    if ideal.contains(e) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The bound chain for one ideal: `T`, then the three successively weaker
/// upper bounds. `b3` coincides with `psi(m1)` at the ideal's colength.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundChain {
    pub tangent: i64,
    pub b1: i64,
    pub b2: i64,
    pub b3: i64,
}

impl BoundChain {
    pub fn holds(&self) -> bool {
        self.tangent <= self.b1 && self.b1 <= self.b2 && self.b2 <= self.b3
    }
}

/// Computes the chain values for any finite staircase; the inequalities are
/// only guaranteed for Borel-fixed input.
pub fn bound_chain_values(ideal: &Staircase3, cache: Option<&TangentCache>) -> BoundChain {
    let tangent = match cache {
        Some(c) => tangent_dimension_cached(ideal, c),
        None => tangent_dimension(ideal),
    };
    let m1 = ideal.m1() as i64;
    let l = ideal.colength() as i64;
    let budget = zero_vector_budget(ideal.m1());
    let cross = cross_homs(ideal);
    let b1 = checked_sub(cross.total(), budget, "bound chain b1");

    let slices = ideal.decompose();
    let mut pair_sum = 0i64;
    for i in 0..slices.len() {
        for j in 0..slices.len() - 1 {
            let term = cross.slice_colengths[i] + cross.slice_colengths[j]
                - hom2d::t_statistic(&slices[i], &slices[j]);
            pair_sum = checked_add(pair_sum, term, "bound chain b2");
        }
    }
    let b2 = checked_sub(pair_sum, budget, "bound chain b2");

    let b3 = checked_sub(
        checked_mul(2 * m1 + 1, l, "bound chain b3"),
        2 * budget,
        "bound chain b3",
    );
    BoundChain {
        tangent,
        b1,
        b2,
        b3,
    }
}

/// The chain with its contract: requires Borel-fixed input and errors with
/// a structured payload if any inequality fails.
pub fn upper_bound_chain(ideal: &Staircase3, cache: Option<&TangentCache>) -> Result<BoundChain> {
    if !ideal.is_borel() {
        return Err(Error::NotBorel);
    }
    let chain = bound_chain_values(ideal, cache);
    if !chain.holds() {
        return Err(Error::Inconsistency {
            context: "upper_bound_chain",
            detail: format!(
                "ideal={} T={} b1={} b2={} b3={}",
                ideal.render(),
                chain.tangent,
                chain.b1,
                chain.b2,
                chain.b3
            ),
        });
    }
    Ok(chain)
}

/// Line-oriented certificate: one line per candidate shift with the free
/// set, the active edges, and the contribution.
pub fn tangent_trace(ideal: &Staircase3) -> Vec<String> {
    let mut lines = Vec::new();
    let mut total = 0i64;
    for shift in candidate_shifts(ideal) {
        let graph = SyzygyGraph::build(ideal, shift);
        let contribution = graph.contribution();
        total += contribution;
        let free: Vec<String> = graph
            .generators
            .iter()
            .zip(&graph.free)
            .filter(|(_, &f)| f)
            .map(|(g, _)| render_monomial3(g))
            .collect();
        let edges: Vec<String> = graph
            .edges
            .iter()
            .map(|&(s, t)| {
                format!(
                    "{}|{}",
                    render_monomial3(&graph.generators[s]),
                    render_monomial3(&graph.generators[t])
                )
            })
            .collect();
        lines.push(format!(
            "alpha={} free={{{}}} edges={{{}}} contrib={}",
            shift,
            free.join(","),
            edges.join(","),
            contribution
        ));
    }
    lines.push(format!("total={total}"));
    lines
}
