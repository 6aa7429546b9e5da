use super::{Exp2, Exp3, GeneratorSet3, Staircase2};

/// The complement diagram of a finite-colength monomial ideal in
/// `R = C[x,y,z]`, stored slice by slice: `slices[i]` is the 2-variable
/// staircase of the ideal `I_i` in the decomposition `I = ⊕ x^i I_i`.
///
/// Only the slices with nonempty complement are stored, so the number of
/// slices equals the smallest pure exponent `m1` (the exponent of the pure
/// power of `x`). Nesting of the complements, `D_{i+1} ⊆ D_i`, is exactly
/// the ideal condition `I_i ⊆ I_{i+1}` and is enforced on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Staircase3 {
    slices: Vec<Staircase2>,
}

impl Staircase3 {
    /// Builds a staircase from complement slices. Panics if a slice is
    /// empty or the complements are not nested.
    pub fn from_slices(slices: Vec<Staircase2>) -> Staircase3 {
        for s in &slices {
            assert!(!s.is_unit_ideal(), "slices must have nonempty complement");
        }
        for w in slices.windows(2) {
            let (outer, inner) = (&w[0], &w[1]);
            assert!(
                inner.height() <= outer.height()
                    && inner
                        .rows()
                        .iter()
                        .enumerate()
                        .all(|(b, &len)| len <= outer.row(b)),
                "slice complements must be nested"
            );
        }
        Staircase3 { slices }
    }

    pub fn unit_ideal() -> Staircase3 {
        Staircase3 { slices: Vec::new() }
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.slices.is_empty()
    }

    /// The stored complement slices `D_0, …, D_{m1-1}`.
    pub fn slices(&self) -> &[Staircase2] {
        &self.slices
    }

    /// Slice at an arbitrary index; the unit ideal at `m1` and beyond.
    pub fn slice(&self, i: usize) -> Staircase2 {
        self.slices
            .get(i)
            .cloned()
            .unwrap_or_else(Staircase2::unit_ideal)
    }

    /// The decomposition `I_0, …, I_{m1}` including the final unit slice.
    pub fn decompose(&self) -> Vec<Staircase2> {
        let mut out = self.slices.clone();
        out.push(Staircase2::unit_ideal());
        out
    }

    /// Smallest pure exponent: `x^{m1}` is a minimal generator.
    pub fn m1(&self) -> usize {
        self.slices.len()
    }

    pub fn colength(&self) -> usize {
        self.slices.iter().map(Staircase2::colength).sum()
    }

    /// True iff the monomial with exponents `e` lies in the ideal.
    pub fn contains(&self, e: Exp3) -> bool {
        match self.slices.get(e.x) {
            Some(slice) => slice.contains(Exp2::new(e.y, e.z)),
            None => true,
        }
    }

    /// Ideal membership for a signed lattice point.
    pub fn ideal_contains_signed(&self, x: i64, y: i64, z: i64) -> bool {
        if x < 0 || y < 0 || z < 0 {
            return false;
        }
        self.contains(Exp3::new(x as usize, y as usize, z as usize))
    }

    /// All complement points, sorted.
    pub fn complement_points(&self) -> Vec<Exp3> {
        let mut pts = Vec::with_capacity(self.colength());
        for (i, slice) in self.slices.iter().enumerate() {
            for p in slice.complement_points() {
                pts.push(Exp3::new(i, p.y, p.z));
            }
        }
        pts.sort();
        pts
    }

    /// Rebuilds a staircase from a set of complement points, checking that
    /// the set is downward closed. Useful for permuting coordinates.
    pub fn from_complement_points(points: &[Exp3]) -> Option<Staircase3> {
        use std::collections::HashSet;
        let set: HashSet<Exp3> = points.iter().copied().collect();
        if set.len() != points.len() {
            return None;
        }
        for p in &set {
            for q in [
                (p.x.wrapping_sub(1), p.y, p.z),
                (p.x, p.y.wrapping_sub(1), p.z),
                (p.x, p.y, p.z.wrapping_sub(1)),
            ] {
                if q.0 != usize::MAX
                    && q.1 != usize::MAX
                    && q.2 != usize::MAX
                    && !set.contains(&Exp3::new(q.0, q.1, q.2))
                {
                    return None;
                }
            }
        }
        let m1 = set.iter().map(|p| p.x + 1).max().unwrap_or(0);
        let mut slices = Vec::with_capacity(m1);
        for i in 0..m1 {
            let mut rows = Vec::new();
            for b in 0.. {
                let len = set
                    .iter()
                    .filter(|p| p.x == i && p.z == b)
                    .map(|p| p.y + 1)
                    .max()
                    .unwrap_or(0);
                if len == 0 {
                    break;
                }
                // Downward closure makes each row an initial segment.
                rows.push(len);
            }
            slices.push(Staircase2::from_rows(rows));
        }
        Some(Staircase3::from_slices(slices))
    }

    /// Complement of the ideal generated by `gens`; the inverse of
    /// [`Staircase3::minimal_generators`].
    pub fn from_generators(gens: &GeneratorSet3) -> Staircase3 {
        if gens.is_unit() {
            return Staircase3::unit_ideal();
        }
        let m1 = gens
            .pure_exponent('x')
            .expect("finite colength requires a pure power of x");
        let mut slices = Vec::with_capacity(m1);
        for i in 0..m1 {
            let applicable: Vec<Exp2> = gens
                .gens()
                .iter()
                .filter(|g| g.x <= i)
                .map(|g| Exp2::new(g.y, g.z))
                .collect();
            let mut rows = Vec::new();
            for b in 0.. {
                let len = applicable
                    .iter()
                    .filter(|g| g.z <= b)
                    .map(|g| g.y)
                    .min()
                    .expect("finite colength requires a pure power of z");
                if len == 0 {
                    break;
                }
                rows.push(len);
            }
            slices.push(Staircase2::from_rows(rows));
        }
        Staircase3::from_slices(slices)
    }

    /// Minimal generators: corners where a monomial enters the ideal but
    /// none of its three divisors by a variable does.
    pub fn minimal_generators(&self) -> GeneratorSet3 {
        if self.is_unit_ideal() {
            return GeneratorSet3::from_minimal(vec![Exp3::new(0, 0, 0)]);
        }
        let m1 = self.m1();
        let mut gens = Vec::new();
        let width = self.slices[0].width();
        let height = self.slices[0].height();
        for x in 0..=m1 {
            for y in 0..=width {
                for z in 0..=height {
                    let e = Exp3::new(x, y, z);
                    if !self.contains(e) {
                        continue;
                    }
                    let crossed_x = x == 0 || !self.contains(Exp3::new(x - 1, y, z));
                    let crossed_y = y == 0 || !self.contains(Exp3::new(x, y - 1, z));
                    let crossed_z = z == 0 || !self.contains(Exp3::new(x, y, z - 1));
                    if crossed_x && crossed_y && crossed_z {
                        gens.push(e);
                    }
                }
            }
        }
        GeneratorSet3::from_minimal(gens)
    }

    pub fn render(&self) -> String {
        self.minimal_generators().render()
    }

    /// Exponents `(m1, m2, m3)` of the pure powers of `x`, `y`, `z` among
    /// the minimal generators.
    pub fn pure_exponents(&self) -> (usize, usize, usize) {
        if self.is_unit_ideal() {
            return (0, 0, 0);
        }
        (self.m1(), self.slices[0].width(), self.slices[0].height())
    }

    /// Borel-fixedness by the generator test: for every minimal generator
    /// `g`, if `z | g` then `x*g/z` and `y*g/z` lie in the ideal, and if
    /// `y | g` then `x*g/y` does.
    pub fn is_borel(&self) -> bool {
        self.minimal_generators().gens().iter().all(|g| {
            let z_ok = g.z == 0
                || (self.contains(Exp3::new(g.x + 1, g.y, g.z - 1))
                    && self.contains(Exp3::new(g.x, g.y + 1, g.z - 1)));
            let y_ok = g.y == 0 || self.contains(Exp3::new(g.x + 1, g.y - 1, g.z));
            z_ok && y_ok
        })
    }

    /// Borel-fixedness by complement closure: every slice passes the
    /// 2-variable test, and each complement point with `x`-exponent `i ≥ 1`
    /// stays in the complement when `x` is traded for `y` or `z`.
    pub fn is_borel_by_closure(&self) -> bool {
        if !self.slices.iter().all(Staircase2::is_borel_by_steps) {
            return false;
        }
        for i in 1..self.slices.len() {
            let outer = &self.slices[i - 1];
            for p in self.slices[i].complement_points() {
                if outer.contains(Exp2::new(p.y + 1, p.z))
                    || outer.contains(Exp2::new(p.y, p.z + 1))
                {
                    return false;
                }
            }
        }
        true
    }

    /// The staircase of `m^k`, the k-th power of the maximal ideal.
    /// Colength `binom(k+2,3)`.
    pub fn power_ideal(k: usize) -> crate::error::Result<Staircase3> {
        if k == 0 {
            return Err(crate::error::Error::Domain {
                op: "power_ideal",
                msg: "k must be at least 1 (k = 0 is the unit ideal)".into(),
            });
        }
        let slices = (0..k)
            .map(|i| Staircase2::from_rows((1..=k - i).rev().collect()))
            .collect();
        Ok(Staircase3 { slices })
    }
}

impl std::fmt::Display for Staircase3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}
