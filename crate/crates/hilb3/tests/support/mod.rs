//! Shared oracles for the integration suites. Everything here is written
//! against first principles (raw lattice sets, literal definitions) and
//! stays independent of the library's own data structures wherever the
//! point is to cross-check them.
#![allow(dead_code)] // each test binary uses a different subset

use std::collections::HashSet;

use hilb3::lattice::{Exp3, Staircase2, Staircase3};
use rand::rngs::StdRng;
use rand::Rng;

/// All weakly decreasing positive row sequences with the given sum, i.e.
/// every 2-variable staircase of that colength (Borel or not).
pub fn all_partitions(total: usize) -> Vec<Vec<usize>> {
    fn rec(total: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if total == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max_part.min(total)).rev() {
            prefix.push(part);
            rec(total - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, total.max(1), &mut Vec::new(), &mut out);
    if total == 0 {
        out.push(Vec::new());
    }
    out
}

/// Every 2-variable staircase with colength in `0..=max`.
pub fn all_staircases2_up_to(max: usize) -> Vec<Staircase2> {
    let mut out = Vec::new();
    for l in 0..=max {
        for rows in all_partitions(l) {
            out.push(Staircase2::from_rows(rows));
        }
    }
    out
}

/// All downward-closed subsets of N^3 of the given size, as point sets.
/// Generated as stacks of nested partitions (column heights over the
/// `(x, y)`-grid, weakly decreasing both ways).
pub fn all_order_ideals3(size: usize) -> Vec<Vec<Exp3>> {
    // Layers along x: each layer is a partition, each dominated entrywise
    // by the previous layer.
    fn partitions_under(cap: &[usize], total: usize) -> Vec<Vec<usize>> {
        fn rec(
            cap: &[usize],
            total: usize,
            index: usize,
            max_part: usize,
            prefix: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if total == 0 {
                out.push(prefix.clone());
                return;
            }
            if index >= cap.len() {
                return;
            }
            let hi = cap[index].min(max_part).min(total);
            for part in (1..=hi).rev() {
                prefix.push(part);
                rec(cap, total - part, index + 1, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(cap, total, 0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }

    fn rec(
        prev: &[usize],
        remaining: usize,
        layers: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Exp3>>,
    ) {
        if remaining == 0 {
            let mut points = Vec::new();
            for (x, layer) in layers.iter().enumerate() {
                for (y, &height) in layer.iter().enumerate() {
                    for z in 0..height {
                        points.push(Exp3::new(x, y, z));
                    }
                }
            }
            out.push(points);
            return;
        }
        for size in (1..=remaining.min(prev.iter().sum())).rev() {
            for layer in partitions_under(prev, size) {
                layers.push(layer.clone());
                rec(&layer, remaining - size, layers, out);
                layers.pop();
            }
        }
    }

    let mut out = Vec::new();
    if size == 0 {
        return out;
    }
    let top = vec![size; size];
    rec(&top, size, &mut Vec::new(), &mut out);
    out
}

/// Literal strong-stability test on a raw point set: the complement must be
/// closed under trading `x` for `y` or `z` and `y` for `z`.
pub fn point_set_is_borel_closed(points: &[Exp3]) -> bool {
    let set: HashSet<Exp3> = points.iter().copied().collect();
    set.iter().all(|p| {
        (p.x == 0
            || (set.contains(&Exp3::new(p.x - 1, p.y + 1, p.z))
                && set.contains(&Exp3::new(p.x - 1, p.y, p.z + 1))))
            && (p.y == 0 || set.contains(&Exp3::new(p.x, p.y - 1, p.z + 1)))
    })
}

/// Uniform-ish random partition of `total` (any staircase, not only Borel).
pub fn random_partition(rng: &mut StdRng, total: usize) -> Vec<usize> {
    let mut rows = Vec::new();
    let mut remaining = total;
    let mut cap = total;
    while remaining > 0 {
        let row = rng.random_range(1..=cap.min(remaining));
        rows.push(row);
        cap = row;
        remaining -= row;
    }
    rows
}

pub fn random_staircase2(rng: &mut StdRng, max_colength: usize) -> Staircase2 {
    let l = rng.random_range(0..=max_colength);
    Staircase2::from_rows(random_partition(rng, l))
}

/// Random 3-variable staircase: a chain of nested random slices. Usually
/// not Borel-fixed, which is what the route-agreement tests want.
pub fn random_staircase3(rng: &mut StdRng, max_colength: usize) -> Staircase3 {
    let l = rng.random_range(1..=max_colength.max(1));
    let mut slices: Vec<Staircase2> = Vec::new();
    let mut remaining = l;
    while remaining > 0 {
        let size = rng.random_range(1..=remaining);
        let rows = match slices.last() {
            None => random_partition(rng, size),
            Some(prev) => {
                // Sample under the containment caps; retry a few times
                // before giving up on this size.
                let mut sampled = None;
                for _ in 0..8 {
                    let mut rows = Vec::new();
                    let mut left = size;
                    let mut b = 0;
                    let mut cap = prev.row(0);
                    while left > 0 && cap > 0 {
                        let row = rng.random_range(1..=cap.min(left));
                        rows.push(row);
                        left -= row;
                        b += 1;
                        cap = row.min(prev.row(b));
                    }
                    if left == 0 {
                        sampled = Some(rows);
                        break;
                    }
                }
                match sampled {
                    Some(rows) => rows,
                    None => break,
                }
            }
        };
        let size: usize = rows.iter().sum();
        slices.push(Staircase2::from_rows(rows));
        remaining -= size;
    }
    if slices.is_empty() {
        slices.push(Staircase2::from_rows(vec![1]));
    }
    Staircase3::from_slices(slices)
}

/// The six coordinate permutations as complement-point maps.
pub fn permutations() -> [fn(&Exp3) -> Exp3; 6] {
    [
        |p| Exp3::new(p.x, p.y, p.z),
        |p| Exp3::new(p.x, p.z, p.y),
        |p| Exp3::new(p.y, p.x, p.z),
        |p| Exp3::new(p.y, p.z, p.x),
        |p| Exp3::new(p.z, p.x, p.y),
        |p| Exp3::new(p.z, p.y, p.x),
    ]
}
