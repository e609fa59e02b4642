//! Small integer helpers shared across the crate.

/// Greatest common divisor.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple. Panics on overflow (never reachable for the
/// group orders this crate handles).
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// 2-adic valuation: the exponent of the largest power of two dividing `n`.
pub fn v2(n: u64) -> u32 {
    assert!(n != 0, "v2 of zero is undefined");
    n.trailing_zeros()
}

/// Prime factorization by trial division, returned as sorted
/// `(prime, multiplicity)` pairs.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Primality by trial division; adequate for the sizes this crate sees
/// (Dixon primes stay well below 2^20).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut p = 3u64;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 2;
    }
    true
}

/// Integer ceiling of the square root.
pub fn ceil_sqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as u64;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r
}

/// All divisors of `n`, sorted ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factor(n) {
        let prev = out.clone();
        let mut pe = 1u64;
        for _ in 0..e {
            pe *= p;
            out.extend(prev.iter().map(|d| d * pe));
        }
    }
    out.sort_unstable();
    out
}
