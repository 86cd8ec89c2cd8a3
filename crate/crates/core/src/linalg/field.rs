use std::fmt;

use super::LinalgError;

/// Largest admissible prime modulus (exclusive). Residues of a smaller
/// modulus multiply without overflow in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

/// The exact field a matrix or algebra is defined over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldDescriptor {
    Rationals,
    PrimeField(u32),
}

impl FieldDescriptor {
    /// Builds `GF(p)`, rejecting composite moduli and moduli `>= 2^31`.
    pub fn prime_field(p: u64) -> Result<Self, LinalgError> {
        if p >= MAX_MODULUS || !is_prime(p) {
            return Err(LinalgError::InvalidModulus(p));
        }
        Ok(FieldDescriptor::PrimeField(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::PrimeField(p) => *p,
        }
    }

    pub fn is_rationals(&self) -> bool {
        matches!(self, FieldDescriptor::Rationals)
    }
}

impl Default for FieldDescriptor {
    fn default() -> Self {
        FieldDescriptor::Rationals
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// Primality by trial division. Only used for moduli below 2^31, so at most
/// ~23k odd divisors are tried.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p` (Fermat).
pub(crate) fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    mod_pow(a, p - 2, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trial_division_matches_small_sieve() {
        let mut sieve = vec![true; 1000];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..1000 {
            if sieve[i] {
                for j in (i * i..1000).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (n, &expected) in sieve.iter().enumerate() {
            assert_eq!(is_prime(n as u64), expected, "n = {n}");
        }
    }

    #[test]
    fn prime_field_rejects_composites_and_large_moduli() {
        assert!(FieldDescriptor::prime_field(101).is_ok());
        assert!(FieldDescriptor::prime_field(2).is_ok());
        assert!(FieldDescriptor::prime_field(1).is_err());
        assert!(FieldDescriptor::prime_field(91).is_err());
        assert!(FieldDescriptor::prime_field(2_147_483_659).is_err());
        // 2^31 - 1 is prime and just below the limit
        assert!(FieldDescriptor::prime_field(2_147_483_647).is_ok());
    }

    #[test]
    fn inverses() {
        let p = 10007;
        for a in 1..200 {
            assert_eq!(a * mod_inv(a, p) % p, 1);
        }
    }
}
