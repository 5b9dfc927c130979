//! Small integer helpers: primality, factorization, prime parts.

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

/// Prime factorization as ascending `(prime, exponent)` pairs.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
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

pub fn prime_divisors(n: usize) -> Vec<usize> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Largest divisor of `n` that is a power of `p`.
pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut part = 1;
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

pub fn is_p_power(n: usize, p: usize) -> bool {
    p_part(n, p) == n
}

/// The first prime whose square divides `n`, if any.
pub fn square_divisor(n: usize) -> Option<usize> {
    factorize(n).into_iter().find(|&(_, e)| e >= 2).map(|(p, _)| p)
}

pub fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse
    mod_pow(a % p, p - 2, p)
}

pub fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_and_parts() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(p_part(360, 2), 8);
        assert_eq!(p_part(360, 7), 1);
        assert_eq!(square_divisor(30), None);
        assert_eq!(square_divisor(12), Some(2));
        assert!(is_prime(13) && !is_prime(1) && !is_prime(15));
        assert_eq!(mod_inverse(2, 3), 2);
        assert_eq!(mod_inverse(3, 7), 5);
    }
}
