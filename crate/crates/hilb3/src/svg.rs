//! Deterministic SVG rendering of staircase diagrams: complement cells,
//! minimal generators, slice decompositions, and ghost-vector arrows.
//! Output is a pure function of the input with a stable element order.

use crate::hom2d;
use crate::lattice::{Staircase2, Staircase3};

const CELL: i64 = 24;
const PAD: i64 = 36;

/// Fill colors cycled per slice in decomposition views.
const PALETTE: [&str; 6] = [
    "#7eb2dd", "#f4a582", "#a6dba0", "#d6c464", "#c2a5cf", "#e7969c",
];

struct Canvas {
    body: String,
    min_x: i64,
    min_y: i64,
    max_x: i64,
    max_y: i64,
}

impl Canvas {
    fn new() -> Canvas {
        Canvas {
            body: String::new(),
            min_x: 0,
            min_y: 0,
            max_x: CELL,
            max_y: CELL,
        }
    }

    fn cover(&mut self, x: i64, y: i64) {
        self.min_x = self.min_x.min(x);
        self.min_y = self.min_y.min(y);
        self.max_x = self.max_x.max(x);
        self.max_y = self.max_y.max(y);
    }

    /// Unit cell for lattice point `(u, v)`; `v` grows upward.
    fn cell(&mut self, u: i64, v: i64, fill: &str) {
        let x = u * CELL;
        let y = -(v + 1) * CELL;
        self.cover(x, y);
        self.cover(x + CELL, y + CELL);
        self.body.push_str(&format!(
            "<rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{fill}\" stroke=\"#333333\" stroke-width=\"1\"/>\n"
        ));
    }

    fn dot(&mut self, u: i64, v: i64, fill: &str) {
        let x = u * CELL + CELL / 2;
        let y = -(v + 1) * CELL + CELL / 2;
        self.cover(x - CELL / 2, y - CELL / 2);
        self.cover(x + CELL / 2, y + CELL / 2);
        self.body.push_str(&format!(
            "<circle cx=\"{x}\" cy=\"{y}\" r=\"{}\" fill=\"{fill}\"/>\n",
            CELL / 5
        ));
    }

    fn arrow(&mut self, from: (i64, i64), to: (i64, i64)) {
        let (x1, y1) = (from.0 * CELL + CELL / 2, -(from.1 + 1) * CELL + CELL / 2);
        let (x2, y2) = (to.0 * CELL + CELL / 2, -(to.1 + 1) * CELL + CELL / 2);
        self.cover(x1.min(x2) - CELL, y1.min(y2) - CELL);
        self.cover(x1.max(x2) + CELL, y1.max(y2) + CELL);
        self.body.push_str(&format!(
            "<line class=\"ghost-arrow\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#b2182b\" stroke-width=\"2\" marker-end=\"url(#arrowhead)\"/>\n"
        ));
    }

    fn axes(&mut self) {
        let (x0, y0) = (self.min_x - CELL / 2, self.max_y + CELL / 2);
        let (x1, y1) = (self.max_x + CELL / 2, self.min_y - CELL / 2);
        self.body.push_str(&format!(
            "<line x1=\"{x0}\" y1=\"0\" x2=\"{x1}\" y2=\"0\" stroke=\"#888888\" stroke-width=\"1\"/>\n"
        ));
        self.body.push_str(&format!(
            "<line x1=\"0\" y1=\"{y0}\" x2=\"0\" y2=\"{y1}\" stroke=\"#888888\" stroke-width=\"1\"/>\n"
        ));
    }

    fn finish(self) -> String {
        let width = self.max_x - self.min_x + 2 * PAD;
        let height = self.max_y - self.min_y + 2 * PAD;
        let vb_x = self.min_x - PAD;
        let vb_y = self.min_y - PAD;
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{vb_x} {vb_y} {width} {height}\">\n<defs>\n<marker id=\"arrowhead\" markerWidth=\"8\" markerHeight=\"6\" refX=\"7\" refY=\"3\" orient=\"auto\"><polygon points=\"0 0, 8 3, 0 6\" fill=\"#b2182b\"/></marker>\n</defs>\n{}</svg>\n",
            self.body
        )
    }
}

/// A single 2-variable staircase: complement cells filled, minimal
/// generators dotted.
pub fn staircase2_svg(s: &Staircase2) -> String {
    let mut canvas = Canvas::new();
    for p in s.complement_points() {
        canvas.cell(p.y as i64, p.z as i64, PALETTE[0]);
    }
    if !s.is_unit_ideal() {
        for g in s.minimal_generators().gens() {
            canvas.dot(g.y as i64, g.z as i64, "#333333");
        }
    }
    canvas.axes();
    canvas.finish()
}

/// A pair of 2-variable staircases with ghost-vector arrows. The first
/// staircase is drawn as filled cells, the second as dots on its minimal
/// generators; each ghost shift is drawn from the generator cell chosen by
/// the upper-half component's preimage rule.
pub fn pair2_svg(j: &Staircase2, jp: &Staircase2) -> String {
    let mut canvas = Canvas::new();
    for p in j.complement_points() {
        canvas.cell(p.y as i64, p.z as i64, PALETTE[0]);
    }
    if !jp.is_unit_ideal() {
        for g in jp.minimal_generators().gens() {
            canvas.dot(g.y as i64, g.z as i64, "#b2182b");
        }
    }
    for (shift, comp, _) in hom2d::bijection_g(j, jp) {
        if comp.class != hom2d::ComponentClass::UnboundedUpperHalf {
            continue;
        }
        let &(cy, cz) = comp
            .cells
            .iter()
            .max_by_key(|&&(cy, cz)| (cy, -cz))
            .expect("components are nonempty");
        let from = (cy - shift.y, cz - shift.z);
        let to = (cy, cz);
        canvas.arrow(from, to);
    }
    canvas.axes();
    canvas.finish()
}

/// Decomposition view of a 3-variable staircase: the slices side by side,
/// one color per slice.
pub fn staircase3_svg(s: &Staircase3) -> String {
    let mut canvas = Canvas::new();
    let mut offset = 0i64;
    for (i, slice) in s.slices().iter().enumerate() {
        for p in slice.complement_points() {
            canvas.cell(offset + p.y as i64, p.z as i64, PALETTE[i % PALETTE.len()]);
        }
        offset += slice.width() as i64 + 2;
    }
    canvas.axes();
    canvas.finish()
}
