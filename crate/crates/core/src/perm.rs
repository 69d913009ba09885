use crate::error::{Error, Result};

/// A permutation of {0, .., n-1} in one-line notation: `map[x]` is the image of x.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Perm {
    map: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            map: (0..n as u32).collect(),
        }
    }

    pub fn from_map(map: Vec<u32>) -> Result<Perm> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &x in &map {
            if (x as usize) >= n || seen[x as usize] {
                return Err(Error::Invalid(format!("not a permutation: {map:?}")));
            }
            seen[x as usize] = true;
        }
        Ok(Perm { map })
    }

    /// Build from disjoint cycles over 1-based points, e.g. [[1,2,3,4]] on n points.
    pub fn from_cycles(n: usize, cycles: &[Vec<u32>]) -> Result<Perm> {
        let mut map: Vec<u32> = (0..n as u32).collect();
        for cyc in cycles {
            for (k, &p) in cyc.iter().enumerate() {
                let q = cyc[(k + 1) % cyc.len()];
                if p == 0 || q == 0 || p as usize > n || q as usize > n {
                    return Err(Error::Invalid(format!("cycle point out of range 1..={n}")));
                }
                map[(p - 1) as usize] = q - 1;
            }
        }
        Perm::from_map(map)
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.map[x as usize]
    }

    /// Function composition: (self.after(other))(x) = self(other(x)).
    pub fn after(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm {
            map: other.map.iter().map(|&x| self.map[x as usize]).collect(),
        }
    }

    /// Right-action composition: apply self first, then other.
    pub fn then(&self, other: &Perm) -> Perm {
        other.after(self)
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0u32; self.degree()];
        for (x, &y) in self.map.iter().enumerate() {
            map[y as usize] = x as u32;
        }
        Perm { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    /// Cycles of length >= 1 covering all points, each written with its
    /// minimal point first, sorted by minimal point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start as usize] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x as usize] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    pub fn one_line(&self) -> &[u32] {
        &self.map
    }

    /// All n! permutations of {0..n-1} in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur = (0..n as u32).collect::<Vec<_>>();
        loop {
            out.push(Perm { map: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation_roundtrip() {
        let p = Perm::from_cycles(4, &[vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(p.one_line(), &[1, 2, 3, 0]);
        assert_eq!(p.cycles(), vec![vec![0, 1, 2, 3]]);
        let q = p.after(&p);
        assert_eq!(q.cycles(), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn composition_and_inverse() {
        let p = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        let q = Perm::from_cycles(3, &[vec![2, 3]]).unwrap();
        // (q after p)(0): p(0)=1, q(1)=2
        assert_eq!(q.after(&p).apply(0), 2);
        assert_eq!(p.then(&q).apply(0), 2);
        assert!(p.after(&p.inverse()).is_identity());
    }

    #[test]
    fn enumerate_s3() {
        let all = Perm::all(3);
        assert_eq!(all.len(), 6);
        assert!(all[0].is_identity());
    }
}
