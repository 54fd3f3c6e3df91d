//! Integer helpers: prime parts, π-numbers and factorisation of group orders.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
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

/// Distinct prime divisors of `n` in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    assert!(n >= 1 && p >= 2);
    let mut part = 1;
    while n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

/// Largest divisor of `n` coprime to `p`.
pub fn p_prime_part(n: u64, p: u64) -> u64 {
    n / p_part(n, p)
}

/// True iff every prime divisor of `n` lies in `pi`. `1` is a π-number for every π.
pub fn is_pi_number(n: u64, pi: &[u64]) -> bool {
    assert!(n >= 1);
    let mut rest = n;
    for &p in pi {
        if p >= 2 {
            while rest % p == 0 {
                rest /= p;
            }
        }
    }
    rest == 1
}

/// True iff `n` is a power of `p` (including `p^0 = 1`).
pub fn is_p_power(n: u64, p: u64) -> bool {
    is_pi_number(n, &[p])
}

/// True iff `n` is a power of a single prime, other than 1.
pub fn is_prime_power(n: u64) -> bool {
    prime_divisors(n).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_parts() {
        assert_eq!(p_part(60, 2), 4);
        assert_eq!(p_part(60, 5), 5);
        assert_eq!(p_part(60, 7), 1);
        assert_eq!(p_prime_part(60, 2), 15);
        assert_eq!(p_part(1875, 5), 625);
    }

    #[test]
    fn pi_numbers() {
        assert!(is_pi_number(1, &[]));
        assert!(!is_pi_number(6, &[5]));
        assert!(is_pi_number(25, &[5]));
        assert!(is_pi_number(12, &[2, 3]));
        assert!(!is_pi_number(2, &[]));
    }

    #[test]
    fn primes() {
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(prime_divisors(60), vec![2, 3, 5]);
        assert_eq!(prime_divisors(1875), vec![3, 5]);
        assert!(is_prime(2) && is_prime(97) && !is_prime(1) && !is_prime(91));
        assert!(is_prime_power(8) && !is_prime_power(1) && !is_prime_power(12));
        assert_eq!(lcm(4, 6), 12);
    }
}
