//! Permutations of `{1..n}` and cycle notation.
//!
//! Points are numbered from 1 in every public surface; internally the image
//! array is zero-based. Products are read left to right: `a.compose(&b)` first
//! applies `a`, then `b`, so points are acted on from the right.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from one-based images: entry `k` is the image of point `k + 1`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(degree);
        for (offset, &img) in images.iter().enumerate() {
            if img == 0 || img > degree {
                return Err(Error::PointOutOfRange {
                    point: img,
                    degree,
                    offset,
                });
            }
            if seen[img - 1] {
                return Err(Error::RepeatedPoint { point: img, offset });
            }
            seen[img - 1] = true;
            out.push((img - 1) as u32);
        }
        Ok(Permutation {
            images: out.into_boxed_slice(),
        })
    }

    /// Zero-based images; the caller guarantees a bijection.
    pub(crate) fn from_zero_based(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i)
        });
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the one-based point `point`.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// One-based image array.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// Moves the permutation onto `degree` points, fixing the new points and
    /// shifting the old ones up by `offset`.
    pub fn embed(&self, offset: usize, degree: usize) -> Permutation {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &img) in self.images.iter().enumerate() {
            images[offset + i] = (offset as u32) + img;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Non-trivial cycles, each starting at its smallest point, one-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self)
    }
}

/// Parses whitespace- or comma-separated disjoint cycles such as `"(1 2 3)(4 5)"`.
///
/// Empty text (or `()`) is the identity. Errors carry the character offset at
/// which the problem was found.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    if degree == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let syntax = |offset: usize, message: &str| Error::CycleSyntax {
        offset,
        message: message.to_string(),
    };

    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c != '(' {
            return Err(syntax(i, "expected '('"));
        }
        i += 1;
        let mut cycle: Vec<usize> = Vec::new();
        loop {
            while i < chars.len() && (chars[i].is_whitespace() || chars[i] == ',') {
                i += 1;
            }
            if i >= chars.len() {
                return Err(syntax(i, "unclosed cycle"));
            }
            if chars[i] == ')' {
                i += 1;
                break;
            }
            if !chars[i].is_ascii_digit() {
                return Err(syntax(i, "expected a point number"));
            }
            let start = i;
            let mut value: usize = 0;
            while i < chars.len() && chars[i].is_ascii_digit() {
                value = value
                    .saturating_mul(10)
                    .saturating_add(chars[i].to_digit(10).unwrap() as usize);
                i += 1;
            }
            if value == 0 || value > degree {
                return Err(Error::PointOutOfRange {
                    point: value,
                    degree,
                    offset: start,
                });
            }
            if used[value - 1] {
                return Err(Error::RepeatedPoint {
                    point: value,
                    offset: start,
                });
            }
            used[value - 1] = true;
            cycle.push(value - 1);
        }
        for (k, &p) in cycle.iter().enumerate() {
            images[p] = cycle[(k + 1) % cycle.len()] as u32;
        }
    }
    Ok(Permutation {
        images: images.into_boxed_slice(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        assert_eq!(parse_cycles("(1 2)", 3).unwrap().images(), vec![2, 1, 3]);
        assert_eq!(parse_cycles("", 4).unwrap().images(), vec![1, 2, 3, 4]);
        assert_eq!(
            parse_cycles("(1 2 3 4 5)", 5).unwrap().images(),
            vec![2, 3, 4, 5, 1]
        );
        assert_eq!(
            parse_cycles("(1,3)(2 4)", 4).unwrap().images(),
            vec![3, 4, 1, 2]
        );
        assert!(parse_cycles("()", 3).unwrap().is_identity());
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match parse_cycles("(1 7)", 5) {
            Err(Error::PointOutOfRange { point: 7, offset: 3, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_cycles("(1 2)(2 3)", 5) {
            Err(Error::RepeatedPoint { point: 2, offset: 6 }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_cycles("(1 2", 3),
            Err(Error::CycleSyntax { offset: 4, .. })
        ));
        assert!(matches!(
            parse_cycles("1 2)", 3),
            Err(Error::CycleSyntax { offset: 0, .. })
        ));
        assert!(matches!(
            parse_cycles("(1 x)", 3),
            Err(Error::CycleSyntax { offset: 3, .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        let p = parse_cycles("(1 3 5)(2 4)", 6).unwrap();
        assert_eq!(p.to_string(), "(1 3 5)(2 4)");
        assert_eq!(parse_cycles(&p.to_string(), 6).unwrap(), p);
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn compose_reads_left_to_right() {
        let a = parse_cycles("(1 2)", 3).unwrap();
        let b = parse_cycles("(2 3)", 3).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.compose(&b).apply(1), 3);
        assert!(a.compose(&a.inverse()).is_identity());
    }
}
