//! Integer factorization, valuations, and factorial helpers.
//!
//! Inputs in this crate stay small (denominators, resultants, norms — at
//! most a few hundred bits), so the strategy is trial division by a fixed
//! prime table followed by Miller–Rabin + Pollard rho on whatever cofactor
//! survives. All routines are deterministic: fixed witness sets, fixed rho
//! parameters.

use num::bigint::{BigInt, BigUint};
use num::{Integer, One, ToPrimitive, Zero};
use std::sync::LazyLock;

use crate::height::ln_big;

/// Primes below 100 000, shared trial-division table.
pub static SMALL_PRIMES: LazyLock<Vec<u64>> = LazyLock::new(|| sieve(100_000));

fn sieve(limit: usize) -> Vec<u64> {
    let mut composite = vec![false; limit];
    let mut primes = Vec::new();
    for n in 2..limit {
        if !composite[n] {
            primes.push(n as u64);
            let mut k = n * n;
            while k < limit {
                composite[k] = true;
                k += n;
            }
        }
    }
    primes
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for u64 (witness set covers all 64-bit inputs).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard rho with Floyd cycle detection; `n` must be odd and composite.
/// Returns a nontrivial factor.
fn brent_rho_u64(n: u64) -> u64 {
    debug_assert!(n > 3 && n % 2 == 1 && !is_prime_u64(n));
    // Fixed parameter schedule keeps the routine deterministic.
    for c in 1..64u64 {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!("rho exhausted its parameter schedule on {n}");
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Full factorization of `n ≥ 1` as sorted (prime, exponent) pairs.
pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factor_u64: argument must be positive");
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut rem = n;
    for &p in SMALL_PRIMES.iter() {
        if p * p > rem {
            break;
        }
        if rem % p == 0 {
            let mut e = 0;
            while rem % p == 0 {
                rem /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    if rem > 1 {
        let mut stack = vec![rem];
        let mut bigs: Vec<u64> = Vec::new();
        while let Some(m) = stack.pop() {
            if is_prime_u64(m) {
                bigs.push(m);
            } else {
                let d = brent_rho_u64(m);
                stack.push(d);
                stack.push(m / d);
            }
        }
        bigs.sort_unstable();
        let mut i = 0;
        while i < bigs.len() {
            let p = bigs[i];
            let mut e = 0;
            while i < bigs.len() && bigs[i] == p {
                e += 1;
                i += 1;
            }
            out.push((p, e));
        }
    }
    out.sort_unstable();
    out
}

fn is_prime_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    let two = BigUint::from(2u32);
    if n.is_even() {
        return false;
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    // Fixed witnesses: deterministic behaviour, error probability < 4^-20
    // at the sizes this crate meets (inputs stay within a few hundred bits).
    'witness: for a in [
        2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    ] {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard rho over big integers with a fixed parameter schedule.
fn rho_big(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    for c in 1u32..64 {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = one.clone();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break; // cycle degenerated; try the next increment
            }
            d = diff.gcd(n);
        }
        if !d.is_one() && &d != n {
            return d;
        }
    }
    unreachable!("rho exhausted its parameter schedule on {n}");
}

/// Full factorization of a nonzero integer's absolute value, as sorted
/// (prime, exponent) pairs. `|n| = 1` yields the empty list.
pub fn factor_big(n: &BigInt) -> Vec<(BigUint, u32)> {
    assert!(!n.is_zero(), "factor_big: argument must be nonzero");
    let mut rem = n.magnitude().clone();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for &p in SMALL_PRIMES.iter() {
        if BigUint::from(p * p) > rem {
            break;
        }
        let bp = BigUint::from(p);
        if (&rem % &bp).is_zero() {
            let mut e = 0;
            while (&rem % &bp).is_zero() {
                rem /= &bp;
                e += 1;
            }
            out.push((bp, e));
        }
    }
    if !rem.is_one() {
        let mut stack = vec![rem];
        let mut bigs: Vec<BigUint> = Vec::new();
        while let Some(m) = stack.pop() {
            if let Some(small) = m.to_u64() {
                for (p, e) in factor_u64(small) {
                    for _ in 0..e {
                        bigs.push(BigUint::from(p));
                    }
                }
            } else if is_prime_big(&m) {
                bigs.push(m);
            } else {
                let d = rho_big(&m);
                stack.push(&m / &d);
                stack.push(d);
            }
        }
        bigs.sort();
        let mut i = 0;
        while i < bigs.len() {
            let p = bigs[i].clone();
            let mut e = 0;
            while i < bigs.len() && bigs[i] == p {
                e += 1;
                i += 1;
            }
            out.push((p, e));
        }
    }
    out.sort();
    out
}

/// p-adic valuation of a nonzero integer.
pub fn vp_int(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero(), "vp_int: argument must be nonzero");
    assert!(p >= 2, "vp_int: modulus must be at least 2");
    let p = BigInt::from(p);
    let mut m = n.clone();
    let mut e = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return e;
        }
        m = q;
        e += 1;
    }
}

/// Exponent of the prime p in d! (Legendre's formula).
pub fn vp_factorial(d: u64, p: u64) -> u64 {
    assert!(p >= 2);
    let mut sum = 0;
    let mut q = d / p;
    while q > 0 {
        sum += q;
        q /= p;
    }
    sum
}

/// d! as an exact big integer. Intended for interval lengths d ≤ 2000; the
/// product is exact for any d but log-scale callers should switch to
/// [`ln_factorial`] beyond that.
pub fn factorial(d: u64) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=d {
        acc *= BigUint::from(k);
    }
    acc
}

/// Natural log of d!, exact via the big-integer factorial for d ≤ 2000 and
/// an upper-rounded Stirling series beyond (the result is then an upper
/// bound, which is the safe direction for every bound in this crate).
pub fn ln_factorial(d: u64) -> f64 {
    if d <= 1 {
        return 0.0;
    }
    if d <= 2000 {
        return ln_big(&BigInt::from(factorial(d)));
    }
    let n = d as f64;
    // ln n! <= (n + 1/2) ln n - n + ln sqrt(2 pi) + 1/(12 n); the margin of
    // that inequality (1/(360 n^3)) is smaller than f64 rounding on a value
    // this large, so pad by a relative epsilon to stay an upper bound
    let s = (n + 0.5) * n.ln() - n + 0.5 * (2.0 * std::f64::consts::PI).ln() + 1.0 / (12.0 * n);
    s * (1.0 + 1e-13)
}
