//! Canonical representations of finite-colength monomial ideals in two and
//! three variables.
//!
//! A monomial ideal is stored through its *staircase*: the finite,
//! downward-closed set of exponent vectors of monomials **outside** the
//! ideal. In two variables (`y`, `z`) this is a Young diagram kept as a
//! weakly decreasing sequence of row lengths; in three variables it is a
//! chain of nested two-variable diagrams, one per power of `x`.

mod genset;
mod parse;
mod staircase2;
mod staircase3;

pub use genset::{GeneratorSet2, GeneratorSet3};
pub use parse::{parse_ideal, ParsedIdeal};
pub use staircase2::Staircase2;
pub use staircase3::Staircase3;

/// Exponent vector of a monomial in `y`, `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exp2 {
    pub y: usize,
    pub z: usize,
}

impl Exp2 {
    pub const fn new(y: usize, z: usize) -> Self {
        Exp2 { y, z }
    }

    pub fn degree(&self) -> usize {
        self.y + self.z
    }

    pub fn divides(&self, other: &Exp2) -> bool {
        self.y <= other.y && self.z <= other.z
    }
}

/// Exponent vector of a monomial in `x`, `y`, `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exp3 {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl Exp3 {
    pub const fn new(x: usize, y: usize, z: usize) -> Self {
        Exp3 { x, y, z }
    }

    pub fn degree(&self) -> usize {
        self.x + self.y + self.z
    }

    pub fn divides(&self, other: &Exp3) -> bool {
        self.x <= other.x && self.y <= other.y && self.z <= other.z
    }

    pub fn lcm(&self, other: &Exp3) -> Exp3 {
        Exp3 {
            x: self.x.max(other.x),
            y: self.y.max(other.y),
            z: self.z.max(other.z),
        }
    }
}

/// Signed shift in the `yz`-lattice; grades 2-variable Hom spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shift2 {
    pub y: i64,
    pub z: i64,
}

impl Shift2 {
    pub const fn new(y: i64, z: i64) -> Self {
        Shift2 { y, z }
    }
}

impl std::fmt::Display for Shift2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.y, self.z)
    }
}

/// Signed shift in the `xyz`-lattice; grades 3-variable Hom spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shift3 {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl Shift3 {
    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        Shift3 { x, y, z }
    }
}

impl std::fmt::Display for Shift3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

fn render_factor(out: &mut String, var: char, exp: usize) {
    if exp == 0 {
        return;
    }
    out.push(var);
    if exp > 1 {
        out.push('^');
        out.push_str(&exp.to_string());
    }
}

/// Renders a monomial, exponent 1 suppressed, factors ordered `x`, `y`, `z`.
pub fn render_monomial3(e: &Exp3) -> String {
    if e.x == 0 && e.y == 0 && e.z == 0 {
        return "1".to_string();
    }
    let mut s = String::new();
    render_factor(&mut s, 'x', e.x);
    render_factor(&mut s, 'y', e.y);
    render_factor(&mut s, 'z', e.z);
    s
}

pub fn render_monomial2(e: &Exp2) -> String {
    render_monomial3(&Exp3::new(0, e.y, e.z))
}

/// Canonical generator order: total degree first, then exponent vectors
/// lexicographically with `x > y > z`, heaviest variable first.
pub(crate) fn canonical_sort3(gens: &mut [Exp3]) {
    gens.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| (b.x, b.y, b.z).cmp(&(a.x, a.y, a.z)))
    });
}

pub(crate) fn canonical_sort2(gens: &mut [Exp2]) {
    gens.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| (b.y, b.z).cmp(&(a.y, a.z)))
    });
}
