//! Graded pieces of `Hom(J, S/J')` for 2-variable monomial ideals, computed
//! combinatorially as connected components of the plane region
//! `(J̃ + α) \ J̃'`, where `J̃` denotes the exponent set of an ideal and `α`
//! ranges over integer shifts.
//!
//! `hom(J, S/J')` equals the number of bounded components summed over all
//! shifts. The module also classifies the unbounded components confined to
//! the upper half plane; for `α_z < 0` these are the *ghost vectors*, and
//! `hom(J, S/J') = l + l' - #ghosts` where `l`, `l'` are the colengths.
//!
//! # Finite windows
//!
//! The region `(J̃ + α) \ J̃'` is infinite, but a finite window suffices for
//! exact component analysis. Write `w`, `h` for the width and height of a
//! staircase (the pure generator exponents of `y` and `z`).
//!
//! * Every cell `(u, v)` satisfies `u ≥ α_y` and `v ≥ α_z`, because
//!   `J̃ ⊆ N²`.
//! * For `v ≥ v* = max(h', α_z + h(J))` all rows of the region are the same
//!   set `[α_y, -1]`: above `α_z + h(J)` the shifted staircase imposes no
//!   constraint and above `h'` the subtracted staircase removes the whole
//!   quadrant. Identical consecutive rows create no adjacencies that are
//!   not already present in row `v*`, so connectivity projects onto `v*`.
//! * Symmetrically, for `u ≥ u* = max(w', α_y + w(J))` all columns equal
//!   `[α_z, -1]`.
//!
//! Hence flood fill on `[α_y, u*] × [α_z, v*]` reproduces the true
//! component structure, and a component is infinite exactly when it touches
//! a cell with a negative coordinate: a cell with `u < 0` sits on an
//! infinite upward ray (nothing is subtracted left of the axis), and a cell
//! with `v < 0` sits on an infinite rightward ray. Bounded components are
//! therefore exactly those inside `N²`, and they are subsets of the finite
//! complement of `J'`.
//!
//! The scan over shifts is likewise finite: a bounded component needs some
//! complement point of `J'` inside `J̃ + α`, and an upper-half-confined
//! unbounded component needs the left blob of `J̃ + α` to clear the `z`-axis.
//! Both force `α` into the box returned by [`shift_box`]; the tests
//! re-validate this against wider scans.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use crate::lattice::{Exp2, Shift2, Staircase2};

/// Exact classification of one connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ComponentClass {
    /// Finite; equivalently, contained in the first quadrant.
    Bounded,
    /// Infinite but every cell has `z ≥ 0`.
    UnboundedUpperHalf,
    /// Infinite with cells below the `z`-axis.
    UnboundedOther,
}

/// One connected component of `(J̃ + α) \ J̃'`. For unbounded components
/// `cells` holds the finite-window representation described in the module
/// docs; for bounded ones it is the full component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneComponent {
    pub cells: Vec<(i64, i64)>,
    pub class: ComponentClass,
}

impl PlaneComponent {
    pub fn is_bounded(&self) -> bool {
        self.class == ComponentClass::Bounded
    }
}

/// The full component decomposition of `(J̃ + α) \ J̃'` for one shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedHomPiece {
    pub shift: Shift2,
    pub components: Vec<PlaneComponent>,
}

impl GradedHomPiece {
    pub fn bounded_count(&self) -> usize {
        self.components.iter().filter(|c| c.is_bounded()).count()
    }
}

struct Window {
    u0: i64,
    v0: i64,
    nu: usize,
    nv: usize,
    filled: Vec<bool>,
}

impl Window {
    fn build(j: &Staircase2, jp: &Staircase2, shift: Shift2) -> Window {
        let u0 = shift.y;
        let v0 = shift.z;
        let u1 = (jp.width() as i64).max(shift.y + j.width() as i64);
        let v1 = (jp.height() as i64).max(shift.z + j.height() as i64);
        let nu = (u1 - u0 + 1) as usize;
        let nv = (v1 - v0 + 1) as usize;
        let mut filled = vec![false; nu * nv];
        for iv in 0..nv {
            let v = v0 + iv as i64;
            let row = &mut filled[iv * nu..(iv + 1) * nu];
            for (iu, slot) in row.iter_mut().enumerate() {
                let u = u0 + iu as i64;
                *slot = j.ideal_contains_signed(u - shift.y, v - shift.z)
                    && !jp.ideal_contains_signed(u, v);
            }
        }
        Window {
            u0,
            v0,
            nu,
            nv,
            filled,
        }
    }

    fn coords(&self, idx: usize) -> (i64, i64) {
        (
            self.u0 + (idx % self.nu) as i64,
            self.v0 + (idx / self.nu) as i64,
        )
    }
}

fn flood(win: &Window, collect_cells: bool) -> Vec<PlaneComponent> {
    let mut seen = vec![false; win.filled.len()];
    let mut components = Vec::new();
    let mut stack = Vec::new();
    for start in 0..win.filled.len() {
        if !win.filled[start] || seen[start] {
            continue;
        }
        seen[start] = true;
        stack.push(start);
        let mut cells = Vec::new();
        let (mut neg_y, mut neg_z) = (false, false);
        while let Some(idx) = stack.pop() {
            let (u, v) = win.coords(idx);
            neg_y |= u < 0;
            neg_z |= v < 0;
            if collect_cells {
                cells.push((u, v));
            }
            let iu = idx % win.nu;
            let iv = idx / win.nu;
            let mut visit = |n: usize| {
                if win.filled[n] && !seen[n] {
                    seen[n] = true;
                    stack.push(n);
                }
            };
            if iu > 0 {
                visit(idx - 1);
            }
            if iu + 1 < win.nu {
                visit(idx + 1);
            }
            if iv > 0 {
                visit(idx - win.nu);
            }
            if iv + 1 < win.nv {
                visit(idx + win.nu);
            }
        }
        cells.sort_unstable();
        let class = if neg_z {
            ComponentClass::UnboundedOther
        } else if neg_y {
            ComponentClass::UnboundedUpperHalf
        } else {
            ComponentClass::Bounded
        };
        components.push(PlaneComponent { cells, class });
    }
    components
}

/// Complete component decomposition of `(J̃ + α) \ J̃'` at one shift, with
/// exact boundedness classification.
pub fn components_at(j: &Staircase2, jp: &Staircase2, shift: Shift2) -> GradedHomPiece {
    let win = Window::build(j, jp, shift);
    GradedHomPiece {
        shift,
        components: flood(&win, true),
    }
}

fn bounded_count_at(j: &Staircase2, jp: &Staircase2, shift: Shift2) -> usize {
    let win = Window::build(j, jp, shift);
    flood(&win, false).iter().filter(|c| c.is_bounded()).count()
}

/// The certified scan box: every shift whose piece contains a bounded
/// component, or an unbounded component confined to the upper half plane
/// with `α_z < 0`, lies inside the box at margin 0.
pub fn shift_box(
    j: &Staircase2,
    jp: &Staircase2,
    margin: i64,
) -> (RangeInclusive<i64>, RangeInclusive<i64>) {
    let (w, h) = (j.width() as i64, j.height() as i64);
    let (wp, hp) = (jp.width() as i64, jp.height() as i64);
    (
        -(w + hp + 1) - margin..=wp + margin,
        -(h + wp + 1) - margin..=hp + margin,
    )
}

/// A bounded component contains a complement point of `J'` that lies in
/// `J̃ + α`; cheap necessary test before flood filling.
fn may_have_bounded(j: &Staircase2, jp_complement: &[Exp2], shift: Shift2) -> bool {
    jp_complement
        .iter()
        .any(|c| j.ideal_contains_signed(c.y as i64 - shift.y, c.z as i64 - shift.z))
}

/// An upper-half-confined unbounded component contains the left blob of
/// `J̃ + α`, whose lowest cell sits at `column(-1 - α_y) + α_z`.
fn may_have_upper_unbounded(j: &Staircase2, shift: Shift2) -> bool {
    if shift.y >= 0 {
        return false;
    }
    let a = (-1 - shift.y) as usize;
    j.column(a) as i64 + shift.z >= 0
}

/// `hom(J, S/J')`: bounded connected components summed over all shifts.
pub fn hom2_by_components(j: &Staircase2, jp: &Staircase2) -> i64 {
    let jp_complement = jp.complement_points();
    let (ys, zs) = shift_box(j, jp, 0);
    let mut total = 0i64;
    for y in ys {
        for z in zs.clone() {
            let shift = Shift2::new(y, z);
            if may_have_bounded(j, &jp_complement, shift) {
                total += bounded_count_at(j, jp, shift) as i64;
            }
        }
    }
    total
}

/// Validation variant: raw scan of the widened box with no prefilter.
pub fn hom2_by_components_widened(j: &Staircase2, jp: &Staircase2, margin: i64) -> i64 {
    let (ys, zs) = shift_box(j, jp, margin);
    let mut total = 0i64;
    for y in ys {
        for z in zs.clone() {
            total += bounded_count_at(j, jp, Shift2::new(y, z)) as i64;
        }
    }
    total
}

/// All pieces in the widened scan box, including empty ones skipped by the
/// prefilters. For validation and diagnostics.
pub fn scan_pieces(j: &Staircase2, jp: &Staircase2, margin: i64) -> Vec<GradedHomPiece> {
    let (ys, zs) = shift_box(j, jp, margin);
    let mut out = Vec::new();
    for y in ys {
        for z in zs.clone() {
            out.push(components_at(j, jp, Shift2::new(y, z)));
        }
    }
    out
}

fn collect_components<F>(
    j: &Staircase2,
    jp: &Staircase2,
    mut keep: F,
) -> Vec<(Shift2, PlaneComponent)>
where
    F: FnMut(Shift2, &PlaneComponent) -> bool,
{
    let jp_complement = jp.complement_points();
    let (ys, zs) = shift_box(j, jp, 0);
    let mut out = Vec::new();
    for y in ys {
        for z in zs.clone() {
            let shift = Shift2::new(y, z);
            if !may_have_bounded(j, &jp_complement, shift) && !may_have_upper_unbounded(j, shift) {
                continue;
            }
            for comp in components_at(j, jp, shift).components {
                if keep(shift, &comp) {
                    out.push((shift, comp));
                }
            }
        }
    }
    out
}

/// Bounded components at shifts with `α_z ≥ 0`; in bijection with the
/// complement of `J'`.
pub fn set_ap(j: &Staircase2, jp: &Staircase2) -> Vec<(Shift2, PlaneComponent)> {
    collect_components(j, jp, |s, c| s.z >= 0 && c.is_bounded())
}

/// Bounded components at shifts with `α_z < 0`.
pub fn set_an(j: &Staircase2, jp: &Staircase2) -> Vec<(Shift2, PlaneComponent)> {
    collect_components(j, jp, |s, c| s.z < 0 && c.is_bounded())
}

/// Components at shifts with `α_z < 0` confined to the upper half plane,
/// bounded or not; in bijection with the complement of `J`.
pub fn set_bn(j: &Staircase2, jp: &Staircase2) -> Vec<(Shift2, PlaneComponent)> {
    collect_components(j, jp, |s, c| {
        s.z < 0 && c.class != ComponentClass::UnboundedOther
    })
}

/// The ghost vectors: shifts indexing the unbounded-but-upper-half-confined
/// components with `α_z < 0`. At most one such component exists per shift,
/// so the shift set is in bijection with those components.
///
/// Scans only the candidate rectangle `[-w(J), -1] × [-h(J), -1]`: a ghost
/// needs the left blob of `J̃ + α`, which exists only for `α_y < 0` and
/// vanishes into the lower half plane once `α_y < -w(J)` or
/// `α_z < -h(J)`.
pub fn ghost_vectors(j: &Staircase2, jp: &Staircase2) -> BTreeSet<Shift2> {
    let mut out = BTreeSet::new();
    for y in -(j.width() as i64)..0 {
        for z in -(j.height() as i64)..0 {
            let shift = Shift2::new(y, z);
            if !may_have_upper_unbounded(j, shift) {
                continue;
            }
            let win = Window::build(j, jp, shift);
            if flood(&win, false)
                .iter()
                .any(|c| c.class == ComponentClass::UnboundedUpperHalf)
            {
                out.insert(shift);
            }
        }
    }
    out
}

/// `hom(J, S/J') = l + l' - #ghosts`.
pub fn hom2_by_formula(j: &Staircase2, jp: &Staircase2) -> i64 {
    j.colength() as i64 + jp.colength() as i64 - ghost_vectors(j, jp).len() as i64
}

/// Everything the component scan can say about one pair, from a single
/// pass over the shift box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSummary {
    pub hom_by_components: i64,
    pub ap: usize,
    pub an: usize,
    pub bn: usize,
    pub ghosts: BTreeSet<Shift2>,
}

impl HomSummary {
    pub fn hom_by_formula(&self, j: &Staircase2, jp: &Staircase2) -> i64 {
        j.colength() as i64 + jp.colength() as i64 - self.ghosts.len() as i64
    }
}

pub fn hom_summary(j: &Staircase2, jp: &Staircase2) -> HomSummary {
    let jp_complement = jp.complement_points();
    let (ys, zs) = shift_box(j, jp, 0);
    let mut summary = HomSummary {
        hom_by_components: 0,
        ap: 0,
        an: 0,
        bn: 0,
        ghosts: BTreeSet::new(),
    };
    for y in ys {
        for z in zs.clone() {
            let shift = Shift2::new(y, z);
            let bounded_possible = may_have_bounded(j, &jp_complement, shift);
            let ghost_possible = shift.z < 0 && may_have_upper_unbounded(j, shift);
            if !bounded_possible && !ghost_possible {
                continue;
            }
            let win = Window::build(j, jp, shift);
            for comp in flood(&win, false) {
                match comp.class {
                    ComponentClass::Bounded => {
                        summary.hom_by_components += 1;
                        if shift.z >= 0 {
                            summary.ap += 1;
                        } else {
                            summary.an += 1;
                            summary.bn += 1;
                        }
                    }
                    ComponentClass::UnboundedUpperHalf if shift.z < 0 => {
                        summary.bn += 1;
                        summary.ghosts.insert(shift);
                    }
                    _ => {}
                }
            }
        }
    }
    summary
}

/// `t(J, J')`: complement points of `J` at or above the height of `J'`.
/// Zero when `J'` is taller than `J`.
pub fn t_statistic(j: &Staircase2, jp: &Staircase2) -> i64 {
    let h = jp.height();
    j.rows().iter().skip(h).map(|&r| r as i64).sum()
}

/// The component-to-lattice-point map on the bounded `α_z ≥ 0` components:
/// pick the cell `c` of the component whose preimage `c - α` in `J̃` has
/// maximal `z`, breaking ties by minimal `y`; send the component to
/// `(c_y, α_z)`. Lands bijectively on the complement of `J'`.
pub fn bijection_f(j: &Staircase2, jp: &Staircase2) -> Vec<(Shift2, PlaneComponent, Exp2)> {
    set_ap(j, jp)
        .into_iter()
        .map(|(shift, comp)| {
            let &(cy, _) = comp
                .cells
                .iter()
                .max_by_key(|&&(cy, cz)| (cz, -cy))
                .expect("components are nonempty");
            debug_assert!(cy >= 0 && shift.z >= 0);
            let image = Exp2::new(cy as usize, shift.z as usize);
            (shift, comp, image)
        })
        .collect()
}

/// The analogous map on the upper-half-confined `α_z < 0` components: pick
/// the cell whose preimage has maximal `y`, ties broken by minimal `z`, and
/// send the component to `(c_y - α_y, -α_z - 1)`. Lands bijectively on the
/// complement of `J`.
pub fn bijection_g(j: &Staircase2, jp: &Staircase2) -> Vec<(Shift2, PlaneComponent, Exp2)> {
    set_bn(j, jp)
        .into_iter()
        .map(|(shift, comp)| {
            let &(cy, _) = comp
                .cells
                .iter()
                .max_by_key(|&&(cy, cz)| (cy, -cz))
                .expect("components are nonempty");
            let gy = cy - shift.y;
            debug_assert!(gy >= 0 && shift.z < 0);
            let image = Exp2::new(gy as usize, (-shift.z - 1) as usize);
            (shift, comp, image)
        })
        .collect()
}

/// `hom(J, S/J')` a third way: one connected-component count per graded
/// piece of the pairwise-syzygy graph on the minimal generators of `J`.
/// A generator vertex is free when its shifted exponent lands in the
/// complement of `J'`; an edge binds two generators when their shifted lcm
/// does. Each all-free component contributes one dimension.
pub fn hom2_by_syzygy(j: &Staircase2, jp: &Staircase2) -> i64 {
    let gens = j.minimal_generators();
    let gens = gens.gens();
    let jp_complement = jp.complement_points();
    let mut shifts = BTreeSet::new();
    for c in &jp_complement {
        for u in gens {
            shifts.insert(Shift2::new(
                c.y as i64 - u.y as i64,
                c.z as i64 - u.z as i64,
            ));
        }
    }

    let in_target = |y: i64, z: i64| y >= 0 && z >= 0 && !jp.ideal_contains_signed(y, z);

    let mut total = 0i64;
    for shift in shifts {
        let free: Vec<bool> = gens
            .iter()
            .map(|u| in_target(u.y as i64 + shift.y, u.z as i64 + shift.z))
            .collect();
        let mut dsu = Dsu::new(gens.len());
        for s in 0..gens.len() {
            for t in s + 1..gens.len() {
                let ly = gens[s].y.max(gens[t].y) as i64 + shift.y;
                let lz = gens[s].z.max(gens[t].z) as i64 + shift.z;
                if in_target(ly, lz) {
                    dsu.union(s, t);
                }
            }
        }
        total += dsu.count_all_free_components(&free);
    }
    total
}

/// Diagnostic dump: one line per (shift, component) with classification.
pub fn component_dump(j: &Staircase2, jp: &Staircase2) -> Vec<String> {
    let mut lines = Vec::new();
    for piece in scan_pieces(j, jp, 0) {
        for comp in &piece.components {
            let tag = match comp.class {
                ComponentClass::Bounded => "bounded",
                ComponentClass::UnboundedUpperHalf if piece.shift.z < 0 => "ghost",
                ComponentClass::UnboundedUpperHalf => "upper-unbounded",
                ComponentClass::UnboundedOther => "unbounded",
            };
            let cells: Vec<String> = comp
                .cells
                .iter()
                .map(|(u, v)| format!("({u},{v})"))
                .collect();
            lines.push(format!(
                "alpha={} class={tag} cells={}",
                piece.shift,
                cells.join("")
            ));
        }
    }
    lines
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Dsu {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    /// Number of equivalence classes whose members are all free.
    pub(crate) fn count_all_free_components(&mut self, free: &[bool]) -> i64 {
        let n = self.parent.len();
        let mut all_free = vec![true; n];
        for (v, &is_free) in free.iter().enumerate() {
            let r = self.find(v);
            all_free[r] &= is_free;
        }
        (0..n)
            .filter(|&r| self.parent[r] == r && all_free[r])
            .count() as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::parse_ideal;

    fn stair(text: &str) -> Staircase2 {
        parse_ideal(text).unwrap().to_staircase2().unwrap()
    }

    fn shifts(set: &BTreeSet<Shift2>) -> Vec<(i64, i64)> {
        set.iter().map(|s| (s.y, s.z)).collect()
    }

    #[test]
    fn empty_difference_has_no_components() {
        let j = stair("y,z");
        let piece = components_at(&j, &j, Shift2::new(0, 0));
        assert!(piece.components.is_empty());
    }

    #[test]
    fn single_box_hom_is_two() {
        let j = stair("y,z");
        assert_eq!(hom2_by_components(&j, &j), 2);
        assert_eq!(hom2_by_formula(&j, &j), 2);
        assert_eq!(hom2_by_syzygy(&j, &j), 2);
        assert!(ghost_vectors(&j, &j).is_empty());
        // One bounded component at shift (-1, 0): the cell (0,0).
        let piece = components_at(&j, &j, Shift2::new(-1, 0));
        let bounded: Vec<_> = piece.components.iter().filter(|c| c.is_bounded()).collect();
        assert_eq!(bounded.len(), 1);
        assert_eq!(bounded[0].cells, vec![(0, 0)]);
    }

    #[test]
    fn short_pair_ghosts() {
        let j = stair("y^2,z^3,yz^2");
        let jp = stair("y,z");
        let ghosts = ghost_vectors(&j, &jp);
        assert_eq!(shifts(&ghosts), vec![(-2, -1), (-1, -2), (-1, -1)]);
        assert_eq!(hom2_by_components(&j, &jp), 3);
        assert_eq!(hom2_by_formula(&j, &jp), 3);
        assert_eq!(hom2_by_syzygy(&j, &jp), 3);
        assert_eq!(t_statistic(&j, &jp), 3);
        // The ghost at (-1,-1) shows up as an upper-half-confined component.
        let piece = components_at(&j, &jp, Shift2::new(-1, -1));
        assert!(piece
            .components
            .iter()
            .any(|c| c.class == ComponentClass::UnboundedUpperHalf));
    }

    #[test]
    fn tall_pair_ghosts_exceed_t() {
        let j = stair("y^4,z^6,y^3z,y^2z^3,yz^5");
        let jp = stair("y^2,z^4,yz^2");
        let ghosts = ghost_vectors(&j, &jp);
        assert_eq!(
            shifts(&ghosts),
            vec![(-2, -1), (-1, -3), (-1, -2), (-1, -1)]
        );
        assert_eq!(t_statistic(&j, &jp), 3);
        assert_eq!(hom2_by_formula(&j, &jp), 15 + 6 - 4);
        assert_eq!(hom2_by_components(&j, &jp), 17);
    }

    #[test]
    fn taller_second_ideal_means_zero_t() {
        let j = stair("y,z");
        let jp = stair("y^2,z^3,yz^2");
        assert_eq!(t_statistic(&j, &jp), 0);
    }

    #[test]
    fn cardinalities_match_colengths() {
        let j = stair("y^2,z^3,yz^2");
        let jp = stair("y,z");
        assert_eq!(set_ap(&j, &jp).len(), jp.colength());
        assert_eq!(set_bn(&j, &jp).len(), j.colength());
        assert_eq!(set_ap(&jp, &j).len(), j.colength());
        assert_eq!(set_bn(&jp, &j).len(), jp.colength());
    }

    #[test]
    fn bijection_images_cover_complements() {
        let j = stair("y^2,z^3,yz^2");
        let jp = stair("y^2,z^4,yz^2");
        let f_image: BTreeSet<Exp2> = bijection_f(&j, &jp).into_iter().map(|x| x.2).collect();
        let expected: BTreeSet<Exp2> = jp.complement_points().into_iter().collect();
        assert_eq!(f_image, expected);
        let g_image: BTreeSet<Exp2> = bijection_g(&j, &jp).into_iter().map(|x| x.2).collect();
        let expected: BTreeSet<Exp2> = j.complement_points().into_iter().collect();
        assert_eq!(g_image, expected);
    }

    #[test]
    fn unit_ideal_edge_cases() {
        let unit = Staircase2::unit_ideal();
        let j = stair("y^2,z^3,yz^2");
        // Hom(J, 0) = 0 and the ghost count equals the colength of J.
        assert_eq!(hom2_by_components(&j, &unit), 0);
        assert_eq!(ghost_vectors(&j, &unit).len(), j.colength());
        assert_eq!(hom2_by_syzygy(&j, &unit), 0);
        // Hom(S, S/J') has the dimension of the quotient.
        assert_eq!(hom2_by_components(&unit, &j), j.colength() as i64);
        assert_eq!(hom2_by_formula(&unit, &j), j.colength() as i64);
        assert_eq!(hom2_by_syzygy(&unit, &j), j.colength() as i64);
        assert_eq!(hom2_by_components(&unit, &unit), 0);
    }

    #[test]
    fn widened_scan_agrees_on_small_pair() {
        let j = stair("y^2,z^3,yz^2");
        let jp = stair("y^2,z^2");
        assert_eq!(
            hom2_by_components(&j, &jp),
            hom2_by_components_widened(&j, &jp, 3)
        );
    }

    #[test]
    fn dump_lines_tag_ghosts() {
        let j = stair("y^2,z^3,yz^2");
        let jp = stair("y,z");
        let lines = component_dump(&j, &jp);
        let ghosts = lines.iter().filter(|l| l.contains("class=ghost")).count();
        assert_eq!(ghosts, 3);
    }
}
