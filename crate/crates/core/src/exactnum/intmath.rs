//! Small integer helpers shared by the number and group code.

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
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

pub fn gcd32(a: u32, b: u32) -> u32 {
    gcd(a.into(), b.into()) as u32
}

pub fn lcm32(a: u32, b: u32) -> u32 {
    u32::try_from(lcm(a.into(), b.into())).expect("lcm overflows u32")
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Distinct prime factors of `n` in ascending order.
pub fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2u32;
    while (p as u64) * (p as u64) <= n as u64 {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn euler_phi(n: u32) -> u32 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

/// Möbius function.
pub fn mobius(n: u32) -> i32 {
    let mut m = n;
    let mut sign = 1;
    let mut p = 2u32;
    while (p as u64) * (p as u64) <= m as u64 {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// Inverse of `a` modulo `m` (m ≥ 1, gcd(a, m) = 1); `0` when `m == 1`.
pub fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    assert_eq!(old_r, 1, "{a} is not invertible modulo {m}");
    old_s.rem_euclid(m as i128) as u64
}
