//! Elementary number theory on machine integers.
//!
//! Group orders of the extension fields reach `5^30 - 1 > 2^64`, so the
//! factorisation and primality routines work on `u128`.

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// `a * b mod m` without overflow for any `u128` operands.
pub fn mul_mod_u128(a: u128, b: u128, m: u128) -> u128 {
    if let (Some(prod), true) = (a.checked_mul(b), m > 0) {
        return prod % m;
    }
    let (mut a, mut b) = (a % m, b % m);
    let mut acc = 0u128;
    while b > 0 {
        if b & 1 == 1 {
            acc = add_mod_u128(acc, a, m);
        }
        a = add_mod_u128(a, a, m);
        b >>= 1;
    }
    acc
}

#[inline]
fn add_mod_u128(a: u128, b: u128, m: u128) -> u128 {
    // a, b < m
    if a >= m - b {
        a - (m - b)
    } else {
        a + b
    }
}

pub fn pow_mod_u128(mut base: u128, mut exp: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u128(acc, base, m);
        }
        base = mul_mod_u128(base, base, m);
        exp >>= 1;
    }
    acc
}

const MR_BASES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Deterministic Miller-Rabin; exact for every `n < 3.3e24`, which covers
/// all group orders this crate handles.
pub fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod_u128(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u128(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_prime(n: u64) -> bool {
    is_prime_u128(n as u128)
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// Brent's variant of Pollard rho. `n` must be composite and odd.
fn pollard_brent(n: u128) -> u128 {
    let mut c = 1u128;
    loop {
        let f = |x: u128| add_mod_u128(mul_mod_u128(x, x, n), c % n, n);
        let (mut y, mut r, mut q, m) = (2u128, 1u64, 1u128, 128u64);
        let mut g = 1u128;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod_u128(q, x.abs_diff(y), n);
                }
                g = gcd_u128(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd_u128(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

/// Prime factorisation as sorted `(prime, exponent)` pairs.
pub fn factorize(mut n: u128) -> Vec<(u128, u32)> {
    let mut primes: Vec<u128> = Vec::new();
    let mut p = 2u128;
    while p < 1000 && p * p <= n {
        while n % p == 0 {
            primes.push(p);
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u128(m) {
            primes.push(m);
            continue;
        }
        let d = pollard_brent(m);
        stack.push(d);
        stack.push(m / d);
    }
    primes.sort_unstable();
    let mut out: Vec<(u128, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Carmichael function of `n`.
fn carmichael(n: u64) -> u64 {
    factorize(n as u128).into_iter().fold(1, |acc, (p, e)| {
        let p = p as u64;
        let lam = if p == 2 && e >= 3 {
            1 << (e - 2)
        } else {
            (p - 1) * p.pow(e - 1)
        };
        lcm(acc, lam)
    })
}

/// Multiplicative order of `q` modulo `n`.
pub fn ord_mod(q: u64, n: u64) -> Result<u64> {
    if n == 1 {
        return Ok(1);
    }
    let g = gcd(q % n, n);
    if g != 1 {
        return Err(Error::NotCoprime { q, n, gcd: g });
    }
    let mut ord = carmichael(n);
    for (r, _) in factorize(ord as u128) {
        let r = r as u64;
        while ord % r == 0 && pow_mod(q, ord / r, n) == 1 {
            ord /= r;
        }
    }
    Ok(ord)
}

pub fn is_primitive_root(g: u64, p: u64) -> bool {
    g % p != 0 && ord_mod(g, p).map(|o| o == p - 1).unwrap_or(false)
}

/// Legendre symbol `(a | p)` for an odd prime `p`, by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> i8 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Solve `x = a mod m1`, `x = b mod m2` for coprime moduli; result in `[0, m1*m2)`.
pub fn crt(a: u64, m1: u64, b: u64, m2: u64) -> u64 {
    let m = m1 * m2;
    let a = a % m1;
    let inv = mod_inverse(m1 % m2, m2).expect("moduli are coprime");
    let diff = (b + m2 - a % m2) % m2;
    let k = mul_mod(diff, inv, m2);
    (a + m1 * k) % m
}

pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// Smallest integer `r` with `r * r >= n`.
pub fn ceil_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r
}

/// Largest integer `r` with `r * r <= n`.
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_order(q: u64, n: u64) -> u64 {
        let mut x = q % n;
        let mut k = 1;
        while x != 1 {
            x = x * q % n;
            k += 1;
        }
        k
    }

    #[test]
    fn orders() {
        assert_eq!(ord_mod(2, 7).unwrap(), 3);
        assert_eq!(ord_mod(2, 217).unwrap(), 15);
        assert_eq!(ord_mod(5, 1).unwrap(), 1);
        assert!(matches!(ord_mod(7, 217), Err(Error::NotCoprime { gcd: 7, .. })));
        for n in 2..400u64 {
            for q in 1..n {
                if gcd(q, n) == 1 {
                    assert_eq!(ord_mod(q, n).unwrap(), naive_order(q, n), "q={q} n={n}");
                }
            }
        }
    }

    #[test]
    fn primality_matches_sieve() {
        let limit = 5000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                for j in (i * i..limit).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (i, &p) in sieve.iter().enumerate() {
            assert_eq!(is_prime(i as u64), p, "{i}");
        }
        assert!(is_prime_u128(2_305_843_009_213_693_951)); // 2^61 - 1
        assert!(!is_prime_u128(3_215_031_751));
    }

    #[test]
    fn factors_large_group_orders() {
        for n in [5u128.pow(30) - 1, 3u128.pow(30) - 1, (1 << 30) - 1, (1u128 << 64) + 1] {
            let f = factorize(n);
            let prod: u128 = f.iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, n);
            assert!(f.iter().all(|&(p, _)| is_prime_u128(p)));
        }
    }

    #[test]
    fn legendre_two_matches_mod_eight_rule() {
        for p in (3..1000).filter(|&p| is_prime(p)) {
            let expected = if p % 8 == 1 || p % 8 == 7 { 1 } else { -1 };
            assert_eq!(legendre(2, p), expected);
        }
    }

    #[test]
    fn crt_small() {
        assert_eq!(crt(19, 7, 1, 13), 40);
        assert_eq!(crt(3, 7, 1, 31), 94);
    }

    proptest! {
        #[test]
        fn ord_is_lcm_over_coprime_factors(q in 2u64..50, i in 0usize..6, j in 0usize..6) {
            let primes = [7u64, 13, 19, 31, 37, 43];
            prop_assume!(i != j && q % primes[i] != 0 && q % primes[j] != 0);
            let (a, b) = (primes[i], primes[j]);
            prop_assert_eq!(
                ord_mod(q, a * b).unwrap(),
                lcm(ord_mod(q, a).unwrap(), ord_mod(q, b).unwrap())
            );
        }

        #[test]
        fn mul_mod_u128_agrees_with_u64(a in any::<u64>(), b in any::<u64>(), m in 1u64..) {
            prop_assert_eq!(mul_mod_u128(a as u128, b as u128, m as u128) as u64, mul_mod(a, b, m));
        }

        #[test]
        fn sqrt_helpers(n in 0u64..10_000_000) {
            let c = ceil_sqrt(n);
            prop_assert!(c * c >= n && (c == 0 || (c - 1) * (c - 1) < n));
            let f = isqrt(n);
            prop_assert!(f * f <= n && (f + 1) * (f + 1) > n);
        }
    }
}
