//! Permutations in cycle notation.
//!
//! Points are 1-based in text and 0-based internally. Permutations act on the
//! right: `x^(ab) = (x^a)^b`, so the product `ab` applies `a` first.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm { images: (0..degree as u16).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Perm { images: images.into_iter().map(|i| i as u16).collect() })
    }

    /// Builds a permutation of `degree` points from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for c in cycles {
            for &x in c {
                if x >= degree {
                    return Err(Error::Parse(format!("point {} exceeds degree {degree}", x + 1)));
                }
                if used[x] {
                    return Err(Error::Parse(format!("point {} repeated in cycles", x + 1)));
                }
                used[x] = true;
            }
            for i in 0..c.len() {
                images[c[i]] = c[(i + 1) % c.len()];
            }
        }
        Perm::from_images(images)
    }

    /// Parses `"(1 2 3)(4 5)"`; commas inside cycles are accepted as separators
    /// and `"()"` or `"e"` denotes the identity.
    pub fn parse(degree: usize, text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || t == "e" || t == "()" {
            return Ok(Perm::identity(degree));
        }
        let mut cycles = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let body = &open[..close];
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()) {
                let x: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point {tok:?} in {text:?}")))?;
                if x == 0 {
                    return Err(Error::Parse(format!("points are 1-based in {text:?}")));
                }
                cycle.push(x - 1);
            }
            cycles.push(cycle);
            rest = open[close + 1..].trim_start();
        }
        Perm::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// `self * other`: apply `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Disjoint cycles of length at least two, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }
}

impl std::fmt::Display for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = Perm::parse(4, "(1 2 3)(4)").unwrap();
        assert_eq!(p.to_string(), "(1 2 3)");
        assert_eq!(Perm::parse(3, "(1,2,3)").unwrap(), p_on3("(1 2 3)"));
        assert_eq!(Perm::parse(3, "()").unwrap().to_string(), "()");
        assert!(Perm::parse(3, "(1 4)").is_err());
        assert!(Perm::parse(3, "(1 2)(2 3)").is_err());
        assert!(Perm::parse(3, "(0 1)").is_err());
        assert!(Perm::parse(3, "1 2").is_err());
    }

    fn p_on3(s: &str) -> Perm {
        Perm::parse(3, s).unwrap()
    }

    #[test]
    fn right_action_composition() {
        // 1 -> 2 under (1 2), then 2 -> 2 under (1 3): 1 -> 2; 2 -> 1 -> 3; 3 -> 3 -> 1.
        let prod = p_on3("(1 2)").then(&p_on3("(1 3)"));
        assert_eq!(prod.to_string(), "(1 2 3)");
        assert!(p_on3("(1 2 3)").then(&p_on3("(1 2 3)").inverse()).is_identity());
    }
}
