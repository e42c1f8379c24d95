use crate::kernel::Concrete;

use super::AlgebraError;

pub const MAX_DEGREE: usize = 64;

/// A permutation of `0..n`, `n <= 64`. Products compose left to right:
/// `(p * q)(x) = q(p(x))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    image: Vec<u8>,
}

impl Perm {
    pub fn new(image: Vec<usize>) -> Result<Self, AlgebraError> {
        let n = image.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(AlgebraError::BadPermutation);
        }
        let mut seen = [false; MAX_DEGREE];
        for &x in &image {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(AlgebraError::BadPermutation);
            }
        }
        Ok(Perm {
            image: image.into_iter().map(|x| x as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Perm::new((0..n).collect()).expect("identity is a permutation")
    }

    /// Permutation of `0..n` given by disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, AlgebraError> {
        let mut image: Vec<usize> = (0..n).collect();
        for cyc in cycles {
            for (i, &a) in cyc.iter().enumerate() {
                let b = cyc[(i + 1) % cyc.len()];
                if a >= n || b >= n {
                    return Err(AlgebraError::BadPermutation);
                }
                image[a] = b;
            }
        }
        Perm::new(image)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x] as usize
    }

    pub fn is_even(&self) -> bool {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for s in 0..n {
            let mut x = s;
            let mut len = 0;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        transpositions % 2 == 0
    }
}

impl Concrete for Perm {
    fn compose(&self, other: &Self) -> Self {
        Perm {
            image: self
                .image
                .iter()
                .map(|&x| other.image[x as usize])
                .collect(),
        }
    }

    fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm { image: inv }
    }

    fn identity_like(&self) -> Self {
        Perm::identity(self.degree())
    }

    fn key(&self) -> Vec<u8> {
        self.image.clone()
    }

    fn same_carrier(&self, other: &Self) -> bool {
        self.degree() == other.degree()
    }
}

/// Generators of `S_n` (`n >= 1`): a transposition and an `n`-cycle.
pub fn symmetric_generators(n: usize) -> Result<Vec<Perm>, AlgebraError> {
    if n <= 1 {
        return Ok(vec![Perm::identity(1)]);
    }
    let cycle: Vec<usize> = (0..n).collect();
    Ok(vec![
        Perm::from_cycles(n, &[&[0, 1]])?,
        Perm::from_cycles(n, &[&cycle])?,
    ])
}

/// Generators of `A_n` (`n >= 1`): the 3-cycles `(0 1 k)`.
pub fn alternating_generators(n: usize) -> Result<Vec<Perm>, AlgebraError> {
    if n <= 2 {
        return Ok(vec![Perm::identity(n.max(1))]);
    }
    (2..n)
        .map(|k| Perm::from_cycles(n, &[&[0, 1, k]]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::build_from_concrete;

    #[test]
    fn validation() {
        assert!(Perm::new(vec![0, 0]).is_err());
        assert!(Perm::new(vec![]).is_err());
        assert!(Perm::new((0..65).collect()).is_err());
        assert!(Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap().is_even());
        assert!(!Perm::from_cycles(3, &[&[0, 1]]).unwrap().is_even());
    }

    #[test]
    fn composition_left_to_right() {
        let a = Perm::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        let ab = a.compose(&b);
        assert_eq!(ab.apply(0), 2);
        assert_eq!(ab.compose(&ab.inverse()), Perm::identity(3));
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        let fact = |n: usize| (1..=n).product::<usize>();
        for n in 1..=6 {
            let s = build_from_concrete(&symmetric_generators(n).unwrap(), 10_000, "S").unwrap();
            assert_eq!(s.table.order(), fact(n));
            let a = build_from_concrete(&alternating_generators(n).unwrap(), 10_000, "A").unwrap();
            assert_eq!(a.table.order(), fact(n).div_ceil(2).max(1));
        }
        let s1 = build_from_concrete(&[Perm::identity(1)], 10, "S1").unwrap();
        assert_eq!(s1.table.order(), 1);
    }
}
