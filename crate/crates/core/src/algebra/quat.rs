//! Quaternions with coordinates in `½ Z[φ]`, `φ² = φ + 1`.
//!
//! Enough to hold the binary tetrahedral group (Hurwitz units) and the
//! binary icosahedral group (icosians) as exact concrete elements.

use crate::kernel::Concrete;

/// `x + y φ`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Golden {
    x: i64,
    y: i64,
}

impl Golden {
    const ZERO: Golden = Golden { x: 0, y: 0 };

    fn add(self, o: Golden) -> Golden {
        Golden {
            x: self.x + o.x,
            y: self.y + o.y,
        }
    }

    fn sub(self, o: Golden) -> Golden {
        Golden {
            x: self.x - o.x,
            y: self.y - o.y,
        }
    }

    fn mul(self, o: Golden) -> Golden {
        Golden {
            x: self.x * o.x + self.y * o.y,
            y: self.x * o.y + self.y * o.x + self.y * o.y,
        }
    }

    fn halve(self) -> Option<Golden> {
        (self.x % 2 == 0 && self.y % 2 == 0).then_some(Golden {
            x: self.x / 2,
            y: self.y / 2,
        })
    }
}

/// A quaternion `(a + b i + c j + d k) / 2` with `a, b, c, d ∈ Z[φ]`.
///
/// Products that leave the half-integral lattice are marked invalid and
/// rejected by [`Concrete::well_formed`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Quat {
    c: [Golden; 4],
    valid: bool,
}

impl Quat {
    /// Doubled coordinates given as `(x, y)` pairs meaning `x + y φ`.
    pub fn from_doubled(coords: [(i64, i64); 4]) -> Self {
        Quat {
            c: coords.map(|(x, y)| Golden { x, y }),
            valid: true,
        }
    }

    pub fn one() -> Self {
        Quat::from_doubled([(2, 0), (0, 0), (0, 0), (0, 0)])
    }

    /// Reduced norm times 4, as an element of `Z[φ]`; units have norm `(4, 0)`.
    pub fn norm4(&self) -> (i64, i64) {
        let s = self
            .c
            .iter()
            .fold(Golden::ZERO, |acc, &v| acc.add(v.mul(v)));
        (s.x, s.y)
    }
}

impl Concrete for Quat {
    fn compose(&self, o: &Self) -> Self {
        let [a1, b1, c1, d1] = self.c;
        let [a2, b2, c2, d2] = o.c;
        let raw = [
            a1.mul(a2).sub(b1.mul(b2)).sub(c1.mul(c2)).sub(d1.mul(d2)),
            a1.mul(b2).add(b1.mul(a2)).add(c1.mul(d2)).sub(d1.mul(c2)),
            a1.mul(c2).sub(b1.mul(d2)).add(c1.mul(a2)).add(d1.mul(b2)),
            a1.mul(d2).add(b1.mul(c2)).sub(c1.mul(b2)).add(d1.mul(a2)),
        ];
        // (p/2)(q/2) = (pq/2)/2
        let halved: Option<Vec<Golden>> = raw.iter().map(|v| v.halve()).collect();
        match halved {
            Some(h) if self.valid && o.valid => Quat {
                c: [h[0], h[1], h[2], h[3]],
                valid: true,
            },
            _ => Quat {
                c: raw,
                valid: false,
            },
        }
    }

    fn inverse(&self) -> Self {
        // units only: the inverse is the conjugate
        let [a, b, c, d] = self.c;
        let z = Golden::ZERO;
        Quat {
            c: [a, z.sub(b), z.sub(c), z.sub(d)],
            valid: self.valid,
        }
    }

    fn identity_like(&self) -> Self {
        Quat::one()
    }

    fn key(&self) -> Vec<u8> {
        self.c
            .iter()
            .flat_map(|g| [g.x, g.y])
            .flat_map(|v| v.to_le_bytes())
            .collect()
    }

    fn same_carrier(&self, _other: &Self) -> bool {
        true
    }

    fn well_formed(&self) -> bool {
        self.valid && self.norm4() == (4, 0)
    }
}

/// Generators of the binary tetrahedral group: `i` and `(1 + i + j + k)/2`.
pub fn binary_tetrahedral_generators() -> Vec<Quat> {
    vec![
        Quat::from_doubled([(0, 0), (2, 0), (0, 0), (0, 0)]),
        Quat::from_doubled([(1, 0), (1, 0), (1, 0), (1, 0)]),
    ]
}

/// Generators of the binary icosahedral group: `(1 + i + j + k)/2` and
/// `(φ + φ⁻¹ i + j)/2`.
pub fn binary_icosahedral_generators() -> Vec<Quat> {
    vec![
        Quat::from_doubled([(1, 0), (1, 0), (1, 0), (1, 0)]),
        Quat::from_doubled([(0, 1), (-1, 1), (1, 0), (0, 0)]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::build_from_concrete;

    #[test]
    fn binary_polyhedral_orders() {
        let t = build_from_concrete(&binary_tetrahedral_generators(), 1000, "T*").unwrap();
        assert_eq!(t.table.order(), 24);
        assert_eq!(t.table.involution_count(), 1);
        let i = build_from_concrete(&binary_icosahedral_generators(), 1000, "I*").unwrap();
        assert_eq!(i.table.order(), 120);
        assert_eq!(i.table.involution_count(), 1);
        assert!(i.elements.iter().all(|q| q.well_formed()));
    }

    #[test]
    fn off_lattice_products_are_flagged() {
        let half_i = Quat::from_doubled([(0, 0), (1, 0), (0, 0), (0, 0)]);
        assert!(!half_i.compose(&half_i).well_formed());
    }
}
