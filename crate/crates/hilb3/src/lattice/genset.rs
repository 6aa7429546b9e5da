use super::{canonical_sort2, canonical_sort3, render_monomial2, render_monomial3, Exp2, Exp3};

/// Minimal generating set of a 2-variable monomial ideal, canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet2 {
    gens: Vec<Exp2>,
}

impl GeneratorSet2 {
    /// Builds a minimal set: drops every generator strictly divisible by
    /// another (and duplicate copies), then sorts canonically.
    pub fn minimalize(mut gens: Vec<Exp2>) -> (GeneratorSet2, Vec<Exp2>) {
        gens.sort();
        gens.dedup();
        let mut kept = Vec::new();
        let mut dropped = Vec::new();
        for g in &gens {
            if gens.iter().any(|h| h != g && h.divides(g)) {
                dropped.push(*g);
            } else {
                kept.push(*g);
            }
        }
        canonical_sort2(&mut kept);
        canonical_sort2(&mut dropped);
        (GeneratorSet2 { gens: kept }, dropped)
    }

    pub(crate) fn from_minimal(mut gens: Vec<Exp2>) -> GeneratorSet2 {
        canonical_sort2(&mut gens);
        GeneratorSet2 { gens }
    }

    pub fn gens(&self) -> &[Exp2] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0] == Exp2::new(0, 0)
    }

    pub fn render(&self) -> String {
        self.gens
            .iter()
            .map(render_monomial2)
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Minimal generating set of a 3-variable monomial ideal, canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet3 {
    gens: Vec<Exp3>,
}

impl GeneratorSet3 {
    pub fn minimalize(mut gens: Vec<Exp3>) -> (GeneratorSet3, Vec<Exp3>) {
        gens.sort();
        gens.dedup();
        let mut kept = Vec::new();
        let mut dropped = Vec::new();
        for g in &gens {
            if gens.iter().any(|h| h != g && h.divides(g)) {
                dropped.push(*g);
            } else {
                kept.push(*g);
            }
        }
        canonical_sort3(&mut kept);
        canonical_sort3(&mut dropped);
        (GeneratorSet3 { gens: kept }, dropped)
    }

    pub(crate) fn from_minimal(mut gens: Vec<Exp3>) -> GeneratorSet3 {
        canonical_sort3(&mut gens);
        GeneratorSet3 { gens }
    }

    pub fn gens(&self) -> &[Exp3] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0] == Exp3::new(0, 0, 0)
    }

    /// Exponent of the pure power of each variable, if present.
    pub fn pure_exponent(&self, var: char) -> Option<usize> {
        self.gens.iter().find_map(|g| match var {
            'x' if g.y == 0 && g.z == 0 => Some(g.x),
            'y' if g.x == 0 && g.z == 0 => Some(g.y),
            'z' if g.x == 0 && g.y == 0 => Some(g.z),
            _ => None,
        })
    }

    pub fn render(&self) -> String {
        self.gens
            .iter()
            .map(render_monomial3)
            .collect::<Vec<_>>()
            .join(",")
    }
}
