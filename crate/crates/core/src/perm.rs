//! Permutations of the four vertex labels of a tetrahedron.

use std::fmt;

/// A permutation of `{0, 1, 2, 3}`, stored as the list of images.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm4([u8; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    /// Builds a permutation from its images, or `None` if they are not a
    /// bijection of `{0, 1, 2, 3}`.
    pub fn from_images(images: [u8; 4]) -> Option<Perm4> {
        let mut seen = [false; 4];
        for &i in &images {
            if i > 3 || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(Perm4(images))
    }

    /// Parses the 4-character form used in triangulation files, e.g. `0132`.
    pub fn parse(s: &str) -> Option<Perm4> {
        let bytes = s.as_bytes();
        if bytes.len() != 4 {
            return None;
        }
        let mut images = [0u8; 4];
        for (slot, &b) in images.iter_mut().zip(bytes) {
            if !b.is_ascii_digit() {
                return None;
            }
            *slot = b - b'0';
        }
        Perm4::from_images(images)
    }

    #[inline]
    pub fn apply(self, v: usize) -> usize {
        self.0[v] as usize
    }

    pub fn images(self) -> [u8; 4] {
        self.0
    }

    pub fn inverse(self) -> Perm4 {
        let mut inv = [0u8; 4];
        for (v, &img) in self.0.iter().enumerate() {
            inv[img as usize] = v as u8;
        }
        Perm4(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Perm4) -> Perm4 {
        let mut out = [0u8; 4];
        for (v, slot) in out.iter_mut().enumerate() {
            *slot = self.0[other.0[v] as usize];
        }
        Perm4(out)
    }

    /// +1 for even permutations, -1 for odd ones.
    pub fn sign(self) -> i32 {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(self) -> bool {
        self.sign() == 1
    }

    /// All 24 permutations in lexicographic order of their images.
    pub fn all() -> Vec<Perm4> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4u8 {
            for b in 0..4u8 {
                for c in 0..4u8 {
                    for d in 0..4u8 {
                        if let Some(p) = Perm4::from_images([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &i in &self.0 {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = Perm4::parse("0132").unwrap();
        assert_eq!(p.to_string(), "0132");
        assert_eq!(p.sign(), -1);
        assert!(Perm4::parse("0112").is_none());
        assert!(Perm4::parse("01234").is_none());
        assert!(Perm4::parse("01a3").is_none());
    }

    #[test]
    fn group_laws() {
        let all = Perm4::all();
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().filter(|p| p.is_even()).count(), 12);
        for &p in &all {
            assert_eq!(p.compose(p.inverse()), Perm4::IDENTITY);
            for &q in &all {
                assert_eq!(p.compose(q).sign(), p.sign() * q.sign());
            }
        }
    }
}
