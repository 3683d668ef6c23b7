//! Dense permutations of `{0, …, n-1}` acting on the right.
//!
//! `x.apply(p)` is written `xp`; products compose left to right, so
//! `p.then(q)` maps `x ↦ (xp)q`. Conjugation follows `g^h = h⁻¹gh`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("image table of length {len} is not a bijection (point {point})")]
    NotBijective { len: usize, point: usize },
    #[error("degree mismatch: {0} vs {1}")]
    Degree(usize, usize),
    #[error("malformed permutation file: {0}")]
    Format(String),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let len = images.len();
        let mut seen = vec![false; len];
        for &p in &images {
            let p = p as usize;
            if p >= len || seen[p] {
                return Err(PermError::NotBijective { len, point: p });
            }
            seen[p] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from a point map; panics if the map is not a bijection.
    pub fn from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Self {
        let images = (0..degree).map(|x| f(x) as u32).collect();
        Self::from_images(images).expect("point map is a bijection")
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Permutation { images: inv }
    }

    /// `h⁻¹ · self · h`.
    pub fn conjugate_by(&self, h: &Permutation) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        // (x h⁻¹) self h: substitute y = x h⁻¹, i.e. x = yh.
        for (y, &sy) in self.images.iter().enumerate() {
            images[h.images[y] as usize] = h.images[sy as usize];
        }
        Permutation { images }
    }

    pub fn pow(&self, k: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k != 0 {
            if k & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    /// Whether `self · other` is the identity.
    pub fn is_inverse_of(&self, other: &Permutation) -> bool {
        self.degree() == other.degree()
            && self.images.iter().enumerate().all(|(x, &y)| other.images[y as usize] as usize == x)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(x, &y)| *x as u32 == y)
            .map(|(x, _)| x)
            .collect()
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(x, &y)| *x as u32 != y).map(|(x, _)| x)
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut order = 1u64;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Header of an exported generator file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExportHeader {
    pub points: usize,
    pub encoding: PointEncoding,
    pub degree: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointEncoding {
    Scalar,
    Pair,
}

impl fmt::Display for PointEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointEncoding::Scalar => "scalar",
            PointEncoding::Pair => "pair",
        })
    }
}

/// One header line, then one space-separated image list per permutation.
pub fn export_permutations(header: &ExportHeader, perms: &[Permutation]) -> String {
    let mut out = format!("#points={} encoding={} degree={}\n", header.points, header.encoding, header.degree);
    for p in perms {
        let line: Vec<String> = p.images().iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn import_permutations(text: &str) -> Result<(ExportHeader, Vec<Permutation>), PermError> {
    let bad = |m: &str| PermError::Format(m.to_string());
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let head = lines.next().ok_or_else(|| bad("empty input"))?;
    let head = head.strip_prefix('#').ok_or_else(|| bad("missing header"))?;
    let (mut points, mut encoding, mut degree) = (None, None, None);
    for field in head.split_whitespace() {
        let (key, value) = field.split_once('=').ok_or_else(|| bad(field))?;
        match key {
            "points" => points = Some(value.parse::<usize>().map_err(|_| bad(field))?),
            "encoding" => {
                encoding = Some(match value {
                    "scalar" => PointEncoding::Scalar,
                    "pair" => PointEncoding::Pair,
                    _ => return Err(bad(field)),
                })
            }
            "degree" => degree = Some(value.parse::<u32>().map_err(|_| bad(field))?),
            _ => return Err(bad(field)),
        }
    }
    let header = ExportHeader {
        points: points.ok_or_else(|| bad("points missing"))?,
        encoding: encoding.ok_or_else(|| bad("encoding missing"))?,
        degree: degree.ok_or_else(|| bad("degree missing"))?,
    };
    let mut perms = Vec::new();
    for line in lines {
        let images = line
            .split_whitespace()
            .map(|t| t.parse::<u32>().map_err(|_| bad(t)))
            .collect::<Result<Vec<_>, _>>()?;
        if images.len() != header.points {
            return Err(PermError::Degree(images.len(), header.points));
        }
        perms.push(Permutation::from_images(images)?);
    }
    Ok((header, perms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize, c: &[usize]) -> Permutation {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for w in 0..c.len() {
            images[c[w]] = c[(w + 1) % c.len()] as u32;
        }
        Permutation::from_images(images).unwrap()
    }

    #[test]
    fn right_action_composition() {
        let a = cycle(3, &[0, 1]);
        let b = cycle(3, &[1, 2]);
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.then(&b).apply(0), 2);
        assert_eq!(b.then(&a).apply(0), 1);
    }

    #[test]
    fn conjugation_matches_definition() {
        let g = cycle(5, &[0, 1, 2]);
        let h = cycle(5, &[2, 3, 4, 0]);
        let direct = h.inverse().then(&g).then(&h);
        assert_eq!(g.conjugate_by(&h), direct);
    }

    #[test]
    fn order_and_powers() {
        let p = cycle(6, &[0, 1, 2]).then(&cycle(6, &[3, 4]));
        assert_eq!(p.order(), 6);
        assert!(p.pow(6).is_identity());
        assert!(!p.pow(3).is_identity());
        assert!(p.is_inverse_of(&p.inverse()));
        assert_eq!(p.fixed_points(), vec![5]);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn export_import() {
        let header = ExportHeader { points: 4, encoding: PointEncoding::Scalar, degree: 2 };
        let perms = vec![cycle(4, &[0, 3]), cycle(4, &[1, 2, 3])];
        let text = export_permutations(&header, &perms);
        assert!(text.starts_with("#points=4 encoding=scalar degree=2\n3 1 2 0\n"));
        let (h, back) = import_permutations(&text).unwrap();
        assert_eq!(h, header);
        assert_eq!(back, perms);
        assert!(import_permutations("#points=3 encoding=pair degree=1\n0 1\n").is_err());
        assert!(import_permutations("points=3\n").is_err());
    }
}
