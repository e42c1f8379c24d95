use super::AlgebraError;

/// A field element, encoded as `a + b*p` for `a + b*x` in `F_p[x]/(modulus)`.
pub type Fq = u8;

/// One of the small fields `F_p` or `F_{p^2}`, `p ∈ {2, 3, 5}`.
///
/// Degree-2 fields store the modulus `x^2 + c1 x + c0` as `[c0, c1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldDesc {
    p: u8,
    d: u8,
    modulus: [u8; 2],
}

impl FieldDesc {
    /// Validates `p`, `d` and (for `d = 2`) irreducibility of the monic
    /// quadratic with low coefficients `modulus = [c0, c1]`.
    pub fn new(p: u8, d: u8, modulus: &[u8]) -> Result<Self, AlgebraError> {
        if ![2, 3, 5].contains(&p) || ![1, 2].contains(&d) {
            return Err(AlgebraError::UnsupportedField { p, d });
        }
        if d == 1 {
            return Ok(FieldDesc {
                p,
                d,
                modulus: [0, 0],
            });
        }
        let [c0, c1] = match modulus {
            [c0, c1] if *c0 < p && *c1 < p => [*c0, *c1],
            _ => return Err(AlgebraError::UnsupportedField { p, d }),
        };
        // a monic quadratic is irreducible iff it has no root in F_p
        let has_root =
            (0..p as u32).any(|r| (r * r + c1 as u32 * r + c0 as u32).is_multiple_of(p as u32));
        if has_root {
            return Err(AlgebraError::ReduciblePolynomial);
        }
        Ok(FieldDesc {
            p,
            d,
            modulus: [c0, c1],
        })
    }

    pub fn prime(p: u8) -> Self {
        FieldDesc::new(p, 1, &[]).expect("supported prime")
    }

    /// `F_9 = F_3[x]/(x^2 + 1)`.
    pub fn f9() -> Self {
        FieldDesc::new(3, 2, &[1, 0]).expect("x^2 + 1 is irreducible over F_3")
    }

    /// `F_q` for `q ∈ {2, 3, 4, 5, 9, 25}` with fixed moduli.
    pub fn of_size(q: usize) -> Result<Self, AlgebraError> {
        match q {
            2 | 3 | 5 => Ok(FieldDesc::prime(q as u8)),
            4 => FieldDesc::new(2, 2, &[1, 1]),
            9 => Ok(FieldDesc::f9()),
            25 => FieldDesc::new(5, 2, &[2, 0]),
            _ => Err(AlgebraError::UnsupportedField { p: q as u8, d: 1 }),
        }
    }

    #[inline]
    pub fn characteristic(&self) -> u8 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u8 {
        self.d
    }

    #[inline]
    pub fn size(&self) -> usize {
        (self.p as usize).pow(self.d as u32)
    }

    #[inline]
    fn split(&self, a: Fq) -> (u32, u32) {
        (a as u32 % self.p as u32, a as u32 / self.p as u32)
    }

    #[inline]
    fn join(&self, lo: u32, hi: u32) -> Fq {
        let p = self.p as u32;
        ((lo % p) + (hi % p) * p) as Fq
    }

    /// `a + b x`
    pub fn element(&self, a: u8, b: u8) -> Fq {
        self.join(a as u32, b as u32)
    }

    pub fn from_int(&self, v: i64) -> Fq {
        self.join(v.rem_euclid(self.p as i64) as u32, 0)
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        let (a0, a1) = self.split(a);
        let (b0, b1) = self.split(b);
        self.join(a0 + b0, a1 + b1)
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        let p = self.p as u32;
        let (a0, a1) = self.split(a);
        self.join(p - a0, p - a1)
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        let p = self.p as u32;
        let (a0, a1) = self.split(a);
        let (b0, b1) = self.split(b);
        let [c0, c1] = [self.modulus[0] as u32, self.modulus[1] as u32];
        // x^2 = -c1 x - c0
        let hh = a1 * b1 % p;
        let lo = a0 * b0 + (p - c0) * hh;
        let hi = a0 * b1 + a1 * b0 + (p - c1) * hh;
        self.join(lo, hi)
    }

    pub fn pow(&self, a: Fq, mut e: u32) -> Fq {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Fq) -> Option<Fq> {
        if a == 0 {
            return None;
        }
        Some(self.pow(a, self.size() as u32 - 2))
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        0..self.size() as Fq
    }

    /// Smallest-coded generator of the multiplicative group.
    pub fn primitive_element(&self) -> Fq {
        let m = self.size() as u32 - 1;
        (1..self.size() as Fq)
            .find(|&a| (1..m).all(|k| self.pow(a, k) != 1))
            .expect("finite fields have cyclic unit groups")
    }

    /// The adjoined root `x` of the modulus (only for degree 2).
    pub fn generator_x(&self) -> Fq {
        assert_eq!(self.d, 2);
        self.element(0, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_examples() {
        let f9 = FieldDesc::new(3, 2, &[1, 0]).unwrap();
        assert_eq!(f9.size(), 9);
        assert_eq!(FieldDesc::new(5, 1, &[]).unwrap().size(), 5);
        assert_eq!(
            FieldDesc::new(3, 2, &[2, 0]),
            Err(AlgebraError::ReduciblePolynomial)
        );
        assert!(matches!(
            FieldDesc::new(7, 1, &[]),
            Err(AlgebraError::UnsupportedField { .. })
        ));
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2, 3, 4, 5, 9, 25] {
            let f = FieldDesc::of_size(q).unwrap();
            let els: Vec<Fq> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    }
                }
            }
            assert_eq!(f.inv(0), None);
        }
    }

    #[test]
    fn f9_structure() {
        let f = FieldDesc::f9();
        let x = f.generator_x();
        assert_eq!(f.mul(x, x), f.from_int(-1));
        let w = f.primitive_element();
        assert_eq!(f.pow(w, 8), 1);
        assert_ne!(f.pow(w, 4), 1);
    }
}
