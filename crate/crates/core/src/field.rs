//! Arithmetic in the prime field `F_p`.
//!
//! Elements are `u64` values reduced into `[0, p)`. The modulus travels with
//! the polynomials, so this module only provides the context-free helpers.

/// Default modulus. Large enough that random genericity checks (superficial
/// element sampling, random reductions) almost never collide.
pub const DEFAULT_MODULUS: u64 = 100_003;

/// Modular arithmetic for a fixed odd prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// `p` must be an odd prime; this is trusted, not checked beyond basics.
    pub fn new(p: u64) -> Self {
        assert!(p >= 3 && p % 2 == 1, "modulus must be an odd prime");
        assert!(p < (1 << 31), "modulus must fit comfortably in u64 products");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, v: i64) -> u64 {
        let r = v.rem_euclid(self.p as i64);
        r as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % self.p as u128) as u64
    }

    /// Multiplicative inverse of a nonzero element, by Fermat.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Balanced representative in `(-p/2, p/2]`, for printing.
    pub fn balanced(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_exist_for_nonzero() {
        let f = PrimeField::new(101);
        for a in 1..101 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn balanced_representatives() {
        let f = PrimeField::new(101);
        assert_eq!(f.balanced(98), -3);
        assert_eq!(f.balanced(3), 3);
        assert_eq!(f.balanced(50), 50);
        assert_eq!(f.balanced(51), -50);
    }
}
