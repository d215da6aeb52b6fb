//! Zassenhaus factorization of squarefree integer polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{self, Fp};

type Zp = Vec<BigInt>;

const PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293,
];

fn trim(mut a: Zp) -> Zp {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn to_fp(a: &[BigInt], p: u64) -> Fp {
    let pb = BigInt::from(p);
    modp::trim(a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn from_fp(a: &[u64]) -> Zp {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> Zp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> Zp {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

fn zadd_scaled(a: &[BigInt], b: &[BigInt], s: &BigInt) -> Zp {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z) * s).collect())
}

/// Reduction into the symmetric range `(-m/2, m/2]`.
fn symmetric(a: &[BigInt], m: &BigInt) -> Zp {
    let half = m / 2;
    trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive(a: &[BigInt]) -> Zp {
    let c = content(a);
    let s = if a.last().is_some_and(|l| l.is_negative()) { -BigInt::one() } else { BigInt::one() };
    a.iter().map(|x| x / &c * &s).collect()
}

/// Exact division over the integers, or `None` if `b` does not divide `a`.
fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<Zp> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return if r.is_empty() { Some(Vec::new()) } else { None };
    }
    let lead = b.last().unwrap().clone();
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let (c, rem) = r.last().unwrap().div_rem(&lead);
        if !rem.is_zero() {
            return None;
        }
        let shift = r.len() - b.len();
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &c * y;
        }
        q[shift] = c;
        r = trim(r);
    }
    if r.is_empty() {
        Some(trim(q))
    } else {
        None
    }
}

fn choose_prime(f: &[BigInt]) -> (u64, Vec<Fp>) {
    let lead = f.last().unwrap();
    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for &p in PRIMES {
        if (lead % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = to_fp(f, p);
        let g = modp::gcd(&fp, &modp::derivative(&fp, p), p);
        if g.len() > 1 {
            continue;
        }
        let factors = modp::factor_squarefree(&fp, p, &mut rng);
        if best.as_ref().is_none_or(|b| factors.len() < b.1.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried == 4 {
            break;
        }
    }
    best.expect("no suitable prime for factorization")
}

/// Lifts `f = g*h (mod p)` with `g` monic to a factorization modulo `p^k`.
fn hensel_two(f: &[BigInt], g: &Fp, h: &Fp, p: u64, k: u32) -> (Zp, Zp) {
    let (s, t) = modp::bezout(g, h, p);
    let pb = BigInt::from(p);
    let mut big_g = from_fp(g);
    let mut big_h = from_fp(h);
    let mut pj = pb.clone();
    for _ in 1..k {
        let diff = zsub(f, &zmul(&big_g, &big_h));
        let e: Zp = diff.iter().map(|c| c / &pj).collect();
        let e = to_fp(&e, p);
        let (q, sigma) = modp::divrem(&modp::mul(&e, &t, p), g, p);
        let tau = modp::add(&modp::mul(&e, &s, p), &modp::mul(&q, h, p), p);
        big_g = zadd_scaled(&big_g, &from_fp(&sigma), &pj);
        big_h = zadd_scaled(&big_h, &from_fp(&tau), &pj);
        pj *= &pb;
    }
    (symmetric(&big_g, &pj), symmetric(&big_h, &pj))
}

/// Lifts `f = lc * prod(gs) (mod p)` to monic factors modulo `p^k`.
fn hensel_all(f: &[BigInt], gs: &[Fp], p: u64, k: u32) -> Vec<Zp> {
    let m = BigInt::from(p).pow(k);
    if gs.len() == 1 {
        let lc = f.last().unwrap();
        let inv = lc.modinv(&m).expect("leading coefficient not invertible");
        return vec![symmetric(&f.iter().map(|c| c * &inv).collect::<Vec<_>>(), &m)];
    }
    let lc_p = to_fp(&[f.last().unwrap().clone()], p);
    let rest = gs[1..].iter().fold(lc_p, |acc, g| modp::mul(&acc, g, p));
    let (g, h) = hensel_two(f, &gs[0], &rest, p, k);
    let mut out = vec![g];
    out.extend(hensel_all(&h, &gs[1..], p, k));
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Irreducible factors of a squarefree primitive integer polynomial.
pub fn factor_primitive(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let f = primitive(&trim(f.to_vec()));
    let n = f.len().saturating_sub(1);
    if n <= 1 {
        return if n == 1 { vec![f] } else { Vec::new() };
    }
    let (p, gs) = choose_prime(&f);
    if gs.len() == 1 {
        return vec![f];
    }
    let norm = f.iter().map(|c| c * c).fold(BigInt::zero(), |a, b| a + b).sqrt() + 1;
    let lc = f.last().unwrap().abs();
    let bound = BigInt::from(2) * &lc * (BigInt::one() << n) * norm;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut m = pb.clone();
    while m <= bound {
        m *= &pb;
        k += 1;
    }
    let mut lifted = hensel_all(&f, &gs, p, k);
    let mut rest = f;
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for s in subsets(lifted.len(), size) {
            let lead = rest.last().unwrap().clone();
            let cand = s.iter().fold(vec![lead], |acc, &i| zmul(&acc, &lifted[i]));
            let cand = primitive(&symmetric(&cand, &m));
            if let Some(q) = zdiv_exact(&rest, &cand) {
                hit = Some((s, cand, q));
                break;
            }
        }
        match hit {
            Some((s, cand, q)) => {
                found.push(cand);
                rest = primitive(&q);
                lifted = lifted.into_iter().enumerate().filter(|(i, _)| !s.contains(i)).map(|(_, g)| g).collect();
            }
            None => size += 1,
        }
    }
    if rest.len() > 1 {
        found.push(rest);
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> Zp {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn splits_product_of_quadratics() {
        // (x^2 - 2)(x^2 - 3)
        let f = zmul(&z(&[-2, 0, 1]), &z(&[-3, 0, 1]));
        let mut fs = factor_primitive(&f);
        fs.sort();
        assert_eq!(fs.len(), 2);
        assert_eq!(zmul(&fs[0], &fs[1]), f);
    }

    #[test]
    fn exact_division() {
        assert_eq!(zdiv_exact(&z(&[-1, 0, 1]), &z(&[1, 1])), Some(z(&[-1, 1])));
        assert_eq!(zdiv_exact(&z(&[1, 0, 1]), &z(&[1, 1])), None);
    }
}
