use super::{Exp2, Exp3, GeneratorSet2, GeneratorSet3, Staircase2, Staircase3};
use crate::error::{Error, Result};

/// Result of parsing a generator list. Non-minimal input generators are
/// dropped rather than rejected; they are reported in `dropped` so callers
/// can warn.
#[derive(Debug, Clone)]
pub struct ParsedIdeal {
    gens: GeneratorSet3,
    uses_x: bool,
    pub dropped: Vec<Exp3>,
}

impl ParsedIdeal {
    pub fn generators(&self) -> &GeneratorSet3 {
        &self.gens
    }

    pub fn had_redundant_input(&self) -> bool {
        !self.dropped.is_empty()
    }

    /// Interprets the ideal in `S = C[y,z]`. Fails if any generator uses `x`
    /// or if a pure power of `y` or `z` is missing (infinite colength).
    pub fn to_staircase2(&self) -> Result<Staircase2> {
        if self.uses_x {
            return Err(Error::NotTwoVariables);
        }
        if self.gens.is_unit() {
            return Ok(Staircase2::unit_ideal());
        }
        let gens2: Vec<Exp2> = self
            .gens
            .gens()
            .iter()
            .map(|g| Exp2::new(g.y, g.z))
            .collect();
        if !gens2.iter().any(|g| g.z == 0) {
            return Err(Error::NotFiniteColength { var: 'y' });
        }
        if !gens2.iter().any(|g| g.y == 0) {
            return Err(Error::NotFiniteColength { var: 'z' });
        }
        Ok(Staircase2::from_generators(&GeneratorSet2::from_minimal(
            gens2,
        )))
    }

    /// Interprets the ideal in `R = C[x,y,z]`. Fails if a pure power of any
    /// variable is missing (infinite colength).
    pub fn to_staircase3(&self) -> Result<Staircase3> {
        if self.gens.is_unit() {
            return Ok(Staircase3::unit_ideal());
        }
        for var in ['x', 'y', 'z'] {
            if self.gens.pure_exponent(var).is_none() {
                return Err(Error::NotFiniteColength { var });
            }
        }
        Ok(Staircase3::from_generators(&self.gens))
    }
}

/// Parses a comma-separated list of monomials such as
/// `"x^2,y^2,z^3,xz,yz^2,xy"`. Whitespace is ignored; `"1"` denotes the
/// unit ideal. The returned set is minimalized.
pub fn parse_ideal(text: &str) -> Result<ParsedIdeal> {
    let mut raw: Vec<Exp3> = Vec::new();
    let bytes = text.as_bytes();
    let mut term_start = 0;

    // Split on commas manually so error positions refer to the input.
    while term_start <= bytes.len() {
        let term_end = bytes[term_start..]
            .iter()
            .position(|&b| b == b',')
            .map(|off| term_start + off)
            .unwrap_or(bytes.len());
        raw.push(parse_term(text, term_start, term_end)?);
        if term_end == bytes.len() {
            break;
        }
        term_start = term_end + 1;
    }

    let uses_x = raw.iter().any(|g| g.x > 0);
    let (gens, dropped) = GeneratorSet3::minimalize(raw);
    Ok(ParsedIdeal {
        gens,
        uses_x,
        dropped,
    })
}

fn parse_term(text: &str, start: usize, end: usize) -> Result<Exp3> {
    let bytes = text.as_bytes();
    let mut e = Exp3::new(0, 0, 0);
    let mut i = start;
    let mut saw_factor = false;
    let mut saw_one = false;

    while i < end {
        let c = bytes[i];
        match c {
            b' ' | b'\t' => {
                i += 1;
            }
            b'x' | b'y' | b'z' => {
                saw_factor = true;
                let mut exp = 1usize;
                let mut j = i + 1;
                while j < end && (bytes[j] == b' ' || bytes[j] == b'\t') {
                    j += 1;
                }
                if j < end && bytes[j] == b'^' {
                    j += 1;
                    while j < end && (bytes[j] == b' ' || bytes[j] == b'\t') {
                        j += 1;
                    }
                    let digits_start = j;
                    while j < end && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    if digits_start == j {
                        return Err(Error::Syntax {
                            pos: digits_start,
                            msg: "expected an exponent after '^'".into(),
                        });
                    }
                    exp = text[digits_start..j].parse().map_err(|_| Error::Syntax {
                        pos: digits_start,
                        msg: "exponent out of range".into(),
                    })?;
                    if exp == 0 {
                        return Err(Error::Syntax {
                            pos: digits_start,
                            msg: "exponent must be positive".into(),
                        });
                    }
                }
                match c {
                    b'x' => e.x += exp,
                    b'y' => e.y += exp,
                    _ => e.z += exp,
                }
                i = j;
            }
            b'1' => {
                saw_one = true;
                saw_factor = true;
                i += 1;
            }
            _ => {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!(
                        "unexpected character '{}'",
                        text[i..].chars().next().unwrap()
                    ),
                });
            }
        }
    }

    if !saw_factor {
        return Err(Error::Syntax {
            pos: start,
            msg: "empty generator".into(),
        });
    }
    if saw_one && e != Exp3::new(0, 0, 0) {
        return Err(Error::Syntax {
            pos: start,
            msg: "'1' cannot carry variable factors".into(),
        });
    }
    Ok(e)
}
