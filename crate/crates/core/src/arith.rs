//! Integer helpers: factorization, valuations, divisor chains.

use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The `p`-adic valuation of `n`: the largest `e` with `p^e | n`.
///
/// `n` must be positive and `p` at least 2.
pub fn valuation(p: u64, mut n: u64) -> u32 {
    assert!(p >= 2 && n >= 1, "valuation needs p >= 2 and n >= 1");
    let mut e = 0;
    while n % p == 0 {
        n /= p;
        e += 1;
    }
    e
}

/// Returns `Some(p)` if `n` is a power `p^e` (e >= 1) of a prime `p`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// All divisibility chains `n_1 | n_2 | ... | n_r` with every `n_i >= 2` and
/// product `card`. These are exactly the invariant-factor lists of the abelian
/// groups of order `card`.
pub fn invariant_factor_chains(card: u64) -> Vec<Vec<u64>> {
    fn extend(rest: u64, last: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 1 {
            out.push(prefix.clone());
            return;
        }
        for d in divisors(rest) {
            if d >= 2 && d % last == 0 && (rest == d || (rest / d) % d == 0) {
                prefix.push(d);
                extend(rest / d, d, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(card, 1, &mut Vec::new(), &mut out);
    out
}
