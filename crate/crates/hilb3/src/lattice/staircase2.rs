use super::{Exp2, GeneratorSet2};

/// The complement diagram of a finite-colength monomial ideal in
/// `S = C[y,z]`, stored as the weakly decreasing sequence of row lengths:
/// `rows[b]` counts the monomials outside the ideal with `z`-exponent `b`.
///
/// The empty sequence represents the unit ideal. Trailing zero rows are
/// never stored, so every entry is positive and the representation is
/// unique per ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Staircase2 {
    rows: Vec<usize>,
}

impl Staircase2 {
    /// Builds a staircase from row lengths. Panics if the sequence is not
    /// weakly decreasing or contains a zero entry.
    pub fn from_rows(rows: Vec<usize>) -> Staircase2 {
        for w in rows.windows(2) {
            assert!(w[0] >= w[1], "row lengths must be weakly decreasing");
        }
        assert!(
            rows.iter().all(|&r| r > 0),
            "row lengths must be positive (trim trailing zeros)"
        );
        Staircase2 { rows }
    }

    pub fn unit_ideal() -> Staircase2 {
        Staircase2 { rows: Vec::new() }
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Row length at height `b`; zero above the staircase.
    pub fn row(&self, b: usize) -> usize {
        self.rows.get(b).copied().unwrap_or(0)
    }

    /// Height `h`: the exponent for which `z^h` is a minimal generator.
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    /// Width: the exponent for which `y^w` is a minimal generator.
    pub fn width(&self) -> usize {
        self.rows.first().copied().unwrap_or(0)
    }

    pub fn colength(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Number of complement points in column `a`, i.e. the least
    /// `z`-exponent with `y^a z^b` inside the ideal.
    pub fn column(&self, a: usize) -> usize {
        self.rows.iter().take_while(|&&r| r > a).count()
    }

    /// Ideal membership for a signed lattice point: true iff the point lies
    /// in the first quadrant on or above the staircase.
    pub fn ideal_contains_signed(&self, y: i64, z: i64) -> bool {
        if y < 0 || z < 0 {
            return false;
        }
        let b = z as usize;
        y as usize >= self.row(b)
    }

    /// True iff the monomial with exponents `e` lies in the ideal.
    pub fn contains(&self, e: Exp2) -> bool {
        e.y >= self.row(e.z)
    }

    /// All complement points, sorted.
    pub fn complement_points(&self) -> Vec<Exp2> {
        let mut pts = Vec::with_capacity(self.colength());
        for (b, &len) in self.rows.iter().enumerate() {
            for a in 0..len {
                pts.push(Exp2::new(a, b));
            }
        }
        pts.sort();
        pts
    }

    /// Complement of the ideal generated by `gens`; the inverse of
    /// [`Staircase2::minimal_generators`].
    pub fn from_generators(gens: &GeneratorSet2) -> Staircase2 {
        if gens.is_unit() {
            return Staircase2::unit_ideal();
        }
        let mut rows = Vec::new();
        for b in 0.. {
            let len = gens
                .gens()
                .iter()
                .filter(|g| g.z <= b)
                .map(|g| g.y)
                .min()
                .unwrap_or(usize::MAX);
            if len == 0 {
                break;
            }
            assert!(
                len != usize::MAX,
                "no pure power of y: infinite colength row"
            );
            rows.push(len);
        }
        Staircase2 { rows }
    }

    /// The inner corners of the staircase.
    pub fn minimal_generators(&self) -> GeneratorSet2 {
        if self.is_unit_ideal() {
            return GeneratorSet2::from_minimal(vec![Exp2::new(0, 0)]);
        }
        let mut gens = Vec::new();
        let h = self.height();
        for b in 0..=h {
            let len = self.row(b);
            if b == 0 || self.rows[b - 1] > len {
                gens.push(Exp2::new(len, b));
            }
        }
        GeneratorSet2::from_minimal(gens)
    }

    pub fn render(&self) -> String {
        self.minimal_generators().render()
    }

    /// Borel-fixedness by the generator test: for every minimal generator
    /// `g` divisible by `z`, the quotient `y*g/z` must lie in the ideal.
    pub fn is_borel(&self) -> bool {
        self.minimal_generators()
            .gens()
            .iter()
            .filter(|g| g.z > 0)
            .all(|g| self.contains(Exp2::new(g.y + 1, g.z - 1)))
    }

    /// Borel-fixedness by the step test: consecutive row lengths differ by
    /// at most one, including the final drop to zero.
    pub fn is_borel_by_steps(&self) -> bool {
        let h = self.height();
        (0..h).all(|b| self.row(b) - self.row(b + 1) <= 1)
    }
}

impl std::fmt::Display for Staircase2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}
