//! Exhaustive generation of Borel-fixed monomial ideals of a given
//! colength.
//!
//! In two variables these are the staircases whose row lengths drop by at
//! most one per step (including the final drop to zero). In three
//! variables they are chains of such diagrams `D_0 ⊇ D_1 ⊇ …` where each
//! complement point of `D_{i+1}`, pushed one step in the `y` or `z`
//! direction, stays inside `D_i`; in row terms, every row of a slice must
//! be strictly shorter than the same row of the previous slice and no
//! longer than the row above it there. The search recurses on the top
//! slice and prunes on remaining colength: slice sizes strictly decrease,
//! so a slice of size `s` leaves at most `s(s-1)/2` boxes for the rest of
//! the chain.

use crate::lattice::{Staircase2, Staircase3};

/// Row sequences of all 2-variable Borel staircases with the given
/// colength, where row `b` is capped by `caps[b]` (rows past the end of
/// `caps` are unavailable). Deterministic order: first row descending,
/// then recursively.
fn borel2_rows_capped(caps: &[usize], total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if total == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut prefix = Vec::new();
    let first_cap = caps.first().copied().unwrap_or(0).min(total);
    for first in (1..=first_cap).rev() {
        // A sequence starting at `first` must descend to 1, so it needs at
        // least first*(first+1)/2 boxes.
        if first * (first + 1) / 2 > total {
            continue;
        }
        prefix.push(first);
        extend(caps, total - first, &mut prefix, &mut out);
        prefix.pop();
    }
    out
}

fn extend(caps: &[usize], remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let last = *prefix.last().unwrap();
    if remaining == 0 {
        if last == 1 {
            out.push(prefix.clone());
        }
        return;
    }
    let cap = caps.get(prefix.len()).copied().unwrap_or(0);
    for next in [last, last - 1] {
        if next == 0 || next > cap || next > remaining || next * (next + 1) / 2 > remaining {
            continue;
        }
        prefix.push(next);
        extend(caps, remaining - next, prefix, out);
        prefix.pop();
    }
}

/// All 2-variable Borel-fixed staircases of colength `l`, in ascending
/// canonical-string order.
pub fn enum_borel2(l: usize) -> Vec<Staircase2> {
    let caps = vec![l.max(1); l.max(1)];
    let mut out: Vec<Staircase2> = borel2_rows_capped(&caps, l)
        .into_iter()
        .map(Staircase2::from_rows)
        .collect();
    out.sort_by_key(|s| s.render());
    out
}

/// Row caps for the slice that may follow `prev` in a Borel chain.
fn closure_caps(prev: &Staircase2) -> Vec<usize> {
    (0..prev.height())
        .map(|b| (prev.row(b).saturating_sub(1)).min(prev.row(b + 1)))
        .take_while(|&c| c > 0)
        .collect()
}

fn top_slice_candidates(l: usize) -> Vec<Vec<usize>> {
    let caps = vec![l; l];
    let mut out = Vec::new();
    for size in (1..=l).rev() {
        if l - size > size * (size - 1) / 2 {
            continue;
        }
        out.extend(borel2_rows_capped(&caps, size));
    }
    out
}

fn successor_candidates(prev: &Staircase2, remaining: usize) -> Vec<Vec<usize>> {
    let caps = closure_caps(prev);
    let max_size = remaining.min(prev.colength().saturating_sub(1));
    let mut out = Vec::new();
    for size in (1..=max_size).rev() {
        if remaining - size > size * (size - 1) / 2 {
            continue;
        }
        out.extend(borel2_rows_capped(&caps, size));
    }
    out
}

/// Streaming depth-first enumeration of 3-variable Borel-fixed staircases
/// of a fixed colength. Yields each exactly once, in a deterministic
/// structural order (top slices with larger colength first). Use
/// [`enum_borel3`] for canonical-string order.
pub struct BorelStream {
    frames: Vec<Frame>,
    chain: Vec<Staircase2>,
    remaining: usize,
    shard: Option<(u64, u64)>,
    top_counter: u64,
}

struct Frame {
    candidates: Vec<Vec<usize>>,
    next: usize,
}

impl BorelStream {
    fn new(l: usize, shard: Option<(u64, u64)>) -> BorelStream {
        let mut frames = Vec::new();
        if l > 0 {
            frames.push(Frame {
                candidates: top_slice_candidates(l),
                next: 0,
            });
        }
        BorelStream {
            frames,
            chain: Vec::new(),
            remaining: l,
            shard,
            top_counter: 0,
        }
    }
}

impl Iterator for BorelStream {
    type Item = Staircase3;

    fn next(&mut self) -> Option<Staircase3> {
        loop {
            if self.frames.is_empty() {
                return None;
            }
            let depth = self.frames.len() - 1;
            let frame = self.frames.last_mut().unwrap();
            if frame.next >= frame.candidates.len() {
                self.frames.pop();
                if let Some(slice) = self.chain.pop() {
                    self.remaining += slice.colength();
                }
                continue;
            }
            let rows = frame.candidates[frame.next].clone();
            frame.next += 1;
            if depth == 0 {
                let mine = match self.shard {
                    Some((index, count)) => self.top_counter % count == index,
                    None => true,
                };
                self.top_counter += 1;
                if !mine {
                    continue;
                }
            }
            let slice = Staircase2::from_rows(rows);
            let size = slice.colength();
            self.chain.push(slice);
            self.remaining -= size;
            if self.remaining == 0 {
                let result = Staircase3::from_slices(self.chain.clone());
                let popped = self.chain.pop().unwrap();
                self.remaining += popped.colength();
                return Some(result);
            }
            let candidates = successor_candidates(self.chain.last().unwrap(), self.remaining);
            self.frames.push(Frame {
                candidates,
                next: 0,
            });
        }
    }
}

/// Lazy stream over all Borel-fixed staircases of colength `l`.
pub fn stream_borel3(l: usize) -> BorelStream {
    BorelStream::new(l, None)
}

/// Shard `index` of `count`: the search tree is partitioned by top slice.
/// The union over all shards equals the full stream.
pub fn stream_borel3_sharded(l: usize, index: u64, count: u64) -> BorelStream {
    assert!(count > 0 && index < count, "invalid shard spec");
    BorelStream::new(l, Some((index, count)))
}

/// All Borel-fixed staircases of colength `l` in ascending canonical-string
/// order.
pub fn enum_borel3(l: usize) -> Vec<Staircase3> {
    let mut out: Vec<(String, Staircase3)> = stream_borel3(l).map(|s| (s.render(), s)).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, s)| s).collect()
}

/// Cardinality of [`enum_borel3`] without materializing the staircases.
pub fn count_borel3(l: usize) -> u64 {
    if l == 0 {
        return 0;
    }
    let mut count = 0;
    for rows in top_slice_candidates(l) {
        let slice = Staircase2::from_rows(rows);
        let remaining = l - slice.colength();
        count += count_chains(&slice, remaining);
    }
    count
}

fn count_chains(prev: &Staircase2, remaining: usize) -> u64 {
    if remaining == 0 {
        return 1;
    }
    let mut count = 0;
    for rows in successor_candidates(prev, remaining) {
        let slice = Staircase2::from_rows(rows);
        let rest = remaining - slice.colength();
        count += count_chains(&slice, rest);
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_variable_enumeration() {
        let rows = |l: usize| -> Vec<Vec<usize>> {
            enum_borel2(l).iter().map(|s| s.rows().to_vec()).collect()
        };
        assert_eq!(rows(0), vec![Vec::<usize>::new()]);
        assert_eq!(rows(1), vec![vec![1]]);
        assert_eq!(rows(3), vec![vec![1, 1, 1], vec![2, 1]]);
        let mut five = rows(5);
        five.sort();
        assert_eq!(
            five,
            vec![vec![1, 1, 1, 1, 1], vec![2, 1, 1, 1], vec![2, 2, 1]]
        );
    }

    #[test]
    fn two_variable_counts_are_distinct_partition_counts() {
        let expected = [1, 1, 2, 2, 3, 4, 5, 6, 8, 10];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(enum_borel2(i + 1).len(), e, "l={}", i + 1);
        }
    }

    #[test]
    fn all_two_variable_results_pass_both_tests() {
        for l in 0..=12 {
            for s in enum_borel2(l) {
                assert!(s.is_borel());
                assert!(s.is_borel_by_steps());
            }
        }
    }

    #[test]
    fn small_three_variable_enumerations() {
        let renders =
            |l: usize| -> Vec<String> { enum_borel3(l).iter().map(|s| s.render()).collect() };
        assert_eq!(renders(1), vec!["x,y,z"]);
        assert_eq!(renders(2), vec!["x,y,z^2"]);
        assert_eq!(renders(3), vec!["x,y,z^3", "x,y^2,yz,z^2"]);
        assert_eq!(renders(4).len(), 3);
        assert!(renders(4).contains(&"x^2,xy,xz,y^2,yz,z^2".to_string()));
        assert!(renders(4).contains(&"x,y,z^4".to_string()));
    }

    #[test]
    fn counts_match_enumeration() {
        for l in 1..=15 {
            assert_eq!(count_borel3(l), enum_borel3(l).len() as u64, "l={l}");
        }
        assert_eq!(count_borel3(0), 0);
    }

    #[test]
    fn everything_yielded_is_borel() {
        for l in 1..=15 {
            for s in stream_borel3(l) {
                assert_eq!(s.colength(), l);
                assert!(s.is_borel(), "{}", s.render());
                assert!(s.is_borel_by_closure(), "{}", s.render());
            }
        }
    }

    #[test]
    fn shards_partition_the_stream() {
        for l in [6, 9, 12] {
            let full: Vec<String> = stream_borel3(l).map(|s| s.render()).collect();
            for count in [2u64, 3] {
                let mut union: Vec<String> = (0..count)
                    .flat_map(|i| {
                        stream_borel3_sharded(l, i, count)
                            .map(|s| s.render())
                            .collect::<Vec<_>>()
                    })
                    .collect();
                let mut expected = full.clone();
                union.sort();
                expected.sort();
                assert_eq!(union, expected, "l={l} count={count}");
            }
        }
    }

    #[test]
    fn no_duplicates_in_stream() {
        for l in 1..=12 {
            let mut renders: Vec<String> = stream_borel3(l).map(|s| s.render()).collect();
            let before = renders.len();
            renders.sort();
            renders.dedup();
            assert_eq!(before, renders.len(), "l={l}");
        }
    }
}
