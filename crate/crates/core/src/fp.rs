//! Scalar and polynomial arithmetic over a prime field ℤ/p, on raw `u32`
//! residues. Polynomials are little-endian coefficient vectors.

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[inline]
pub(crate) fn add(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % p as u64) as u32
}

#[inline]
pub(crate) fn sub(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + p as u64 - b as u64) % p as u64) as u32
}

#[inline]
pub(crate) fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
pub(crate) fn neg(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub(crate) fn inv(a: u32, p: u32) -> Option<u32> {
    if a.is_multiple_of(p) {
        return None;
    }
    let (mut r0, mut r1) = (p as i64, (a % p) as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    Some(s0.rem_euclid(p as i64) as u32)
}

pub(crate) fn reduce_i64(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

pub(crate) fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u64; a.len() + b.len() - 1];
    let pp = p as u64;
    // keep the accumulator bounded for large primes
    let limit = u64::MAX - pp * pp;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let x = x as u64;
        for (j, &y) in b.iter().enumerate() {
            let slot = &mut acc[i + j];
            *slot += x * y as u64;
            if *slot > limit {
                *slot %= pp;
            }
        }
    }
    let mut out: Vec<u32> = acc.into_iter().map(|v| (v % pp) as u32).collect();
    trim(&mut out);
    out
}

pub(crate) fn poly_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let len = a.len().max(b.len());
    let mut out: Vec<u32> = (0..len)
        .map(|i| {
            sub(
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
                p,
            )
        })
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder of `a` by nonzero `b`.
pub(crate) fn poly_divrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let lead_inv = inv(b[db], p).expect("nonzero leading coefficient");
    let mut q = vec![0u32; r.len() - db];
    while r.len() > db {
        let top = r.len() - 1;
        let c = mul(r[top], lead_inv, p);
        if c != 0 {
            let shift = top - db;
            q[shift] = c;
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    r[shift + j] = sub(r[shift + j], mul(c, bj, p), p);
                }
            }
        }
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub(crate) fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    poly_divrem(a, b, p).1
}

pub(crate) fn make_monic(v: &mut [u32], p: u32) {
    if let Some(&lead) = v.last() {
        let li = inv(lead, p).expect("nonzero");
        for c in v.iter_mut() {
            *c = mul(*c, li, p);
        }
    }
}

/// Monic gcd.
pub(crate) fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    make_monic(&mut x, p);
    x
}

pub(crate) fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    poly_rem(&poly_mul(a, b, p), m, p)
}

/// `a^e mod m` for a small exponent.
pub(crate) fn poly_powmod(a: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut base = poly_rem(a, m, p);
    let mut acc = vec![1u32];
    acc = poly_rem(&acc, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &base, m, p);
        }
        e >>= 1;
        if e > 0 {
            base = poly_mulmod(&base, &base, m, p);
        }
    }
    acc
}

/// Inverse of `a` modulo `m`, if it exists.
pub(crate) fn poly_inv_mod(a: &[u32], m: &[u32], p: u32) -> Option<Vec<u32>> {
    let mut r0 = m.to_vec();
    let mut r1 = poly_rem(a, m, p);
    trim(&mut r0);
    let mut s0: Vec<u32> = Vec::new();
    let mut s1: Vec<u32> = vec![1];
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1, p);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = inv(r0[0], p)?;
    let mut out: Vec<u32> = s0.iter().map(|&x| mul(x, c, p)).collect();
    out = poly_rem(&out, m, p);
    Some(out)
}

/// Ben-Or irreducibility test for a monic polynomial of degree ≥ 1.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let n = f.len() - 1;
    if n == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    let x = vec![0u32, 1];
    let mut xp = x.clone();
    for _ in 0..n / 2 {
        xp = poly_powmod(&xp, p as u64, f, p);
        let diff = poly_sub(&xp, &x, p);
        let g = poly_gcd(f, &diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn inverses_mod_7() {
        for a in 1..7 {
            assert_eq!(mul(a, inv(a, 7).unwrap(), 7), 1);
        }
        assert_eq!(inv(0, 7), None);
    }

    #[test]
    fn irreducibility_over_f2() {
        // x^3+x+1 and x^3+x^2+1 irreducible; x^3+1 is not.
        assert!(is_irreducible(&[1, 1, 0, 1], 2));
        assert!(is_irreducible(&[1, 0, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
    }

    #[test]
    fn inverse_mod_polynomial() {
        let m = [1, 1, 0, 1];
        let a = [0, 1];
        let ai = poly_inv_mod(&a, &m, 2).unwrap();
        assert_eq!(poly_mulmod(&a, &ai, &m, 2), vec![1]);
    }
}
