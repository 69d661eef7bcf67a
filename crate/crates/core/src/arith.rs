//! Integer factorization and the order classes used by the classification.

use std::fmt;

/// Prime factorization of a positive integer, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn distinct_primes(&self) -> usize {
        self.factors.len()
    }

    /// The integer this factorization represents.
    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// Sum of exponents (number of prime factors with multiplicity).
    pub fn total_exponent(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Trial-division factorization. `factorize(1)` is the empty product.
///
/// Panics if `n == 0`.
pub fn factorize(n: u64) -> Factorization {
    assert!(n > 0, "cannot factorize 0");
    let mut rest = n;
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += 1;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Factorization { factors }
}

/// Shape of a group order with respect to the `p^a q^b` classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderClass {
    Trivial,
    PrimePower,
    /// `p*q` with `p != q` both prime.
    TwoPrimesPq,
    /// `p^a q^b` with `a, b >= 1` and `a + b >= 3`.
    TwoPrimesOther,
    ThreeOrMorePrimes,
}

impl OrderClass {
    pub fn as_str(self) -> &'static str {
        match self {
            OrderClass::Trivial => "Trivial",
            OrderClass::PrimePower => "PrimePower",
            OrderClass::TwoPrimesPq => "TwoPrimes_pq",
            OrderClass::TwoPrimesOther => "TwoPrimes_other",
            OrderClass::ThreeOrMorePrimes => "ThreeOrMorePrimes",
        }
    }
}

impl fmt::Display for OrderClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn classify_order(f: &Factorization) -> OrderClass {
    match f.distinct_primes() {
        0 => OrderClass::Trivial,
        1 => OrderClass::PrimePower,
        2 if f.total_exponent() == 2 => OrderClass::TwoPrimesPq,
        2 => OrderClass::TwoPrimesOther,
        _ => OrderClass::ThreeOrMorePrimes,
    }
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
