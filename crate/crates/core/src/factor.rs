//! Polynomial factorization over the supported ground fields.
//!
//! * `GF(p)`: distinct-degree then equal-degree splitting (Cantor-Zassenhaus).
//! * rationals: squarefree primitive integer polynomial, factored modulo a
//!   good prime, Hensel-lifted, then recombined by exhaustive subset search.
//! * simple extensions: norms down to the rationals (Trager).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, PrimeField, Rationals, SimpleExtension};
use crate::poly;

// ---------------------------------------------------------------------------
// GF(p)

pub fn factor_squarefree_mod_p(k: &PrimeField, f: &[u64]) -> Vec<Vec<u64>> {
    let f = poly::make_monic(k, f);
    if f.len() <= 2 {
        return vec![f];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6661_6374 ^ k.p());
    let mut out = Vec::new();
    for (g, d) in distinct_degree(k, &f) {
        equal_degree(k, &g, d, &mut rng, &mut out);
    }
    out
}

fn distinct_degree(k: &PrimeField, f: &[u64]) -> Vec<(Vec<u64>, usize)> {
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let x = poly::x(k);
    let mut h = poly::rem(k, &x, &f);
    let p = BigUint::from(k.p());
    let mut d = 1;
    while 2 * d <= f.len() - 1 {
        h = poly::pow_mod(k, &h, &p, &f);
        let g = poly::gcd(k, &poly::sub(k, &h, &x), &f);
        if g.len() > 1 {
            f = poly::divrem(k, &f, &g).0;
            h = poly::rem(k, &h, &f);
            out.push((g, d));
        }
        d += 1;
    }
    if f.len() > 1 {
        let deg = f.len() - 1;
        out.push((f, deg));
    }
    out
}

fn equal_degree(k: &PrimeField, f: &[u64], d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Vec<u64>>) {
    let n = f.len() - 1;
    if n == d {
        out.push(f.to_vec());
        return;
    }
    let p = k.p();
    let exponent = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: Vec<u64> = poly::trimmed(k, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() <= 1 {
            continue;
        }
        let b = if p == 2 {
            // trace map to GF(2)
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = poly::rem(k, &poly::mul(k, &t, &t), f);
                acc = poly::add(k, &acc, &t);
            }
            acc
        } else {
            poly::sub(k, &poly::pow_mod(k, &a, &exponent, f), &[1])
        };
        let g = poly::gcd(k, &b, f);
        if g.len() > 1 && g.len() < f.len() {
            let h = poly::divrem(k, f, &g).0;
            equal_degree(k, &g, d, rng, out);
            equal_degree(k, &h, d, rng, out);
            return;
        }
    }
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers (low degree first)

type ZPoly = Vec<BigInt>;

fn ztrim(a: &mut ZPoly) {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(&mut out);
    out
}

fn zmod(a: &[BigInt], m: &BigInt) -> ZPoly {
    let mut out: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    ztrim(&mut out);
    out
}

fn zsym(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    let mut out: ZPoly = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    ztrim(&mut out);
    out
}

fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive_part(a: &[BigInt]) -> ZPoly {
    let c = content(a);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if a.last().is_some_and(Signed::is_negative) { -BigInt::one() } else { BigInt::one() };
    a.iter().map(|x| x / &c * &sign).collect()
}

/// Exact division in `Z[x]`, `None` if `b` does not divide `a`.
fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let mut r = a.to_vec();
    ztrim(&mut r);
    if r.len() < b.len() {
        return r.is_empty().then(Vec::new);
    }
    let lb = b.last().unwrap();
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let (c, rem) = r.last().unwrap().div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &c * bi;
        }
        q[shift] = c;
        r.pop();
        ztrim(&mut r);
    }
    r.is_empty().then(|| {
        ztrim(&mut q);
        q
    })
}

fn to_fp(k: &PrimeField, a: &[BigInt]) -> Vec<u64> {
    poly::trimmed(k, a.iter().map(|c| k.from_bigint(c)).collect())
}

fn from_fp(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| crate::field::is_prime(n))
}

// ---------------------------------------------------------------------------
// Rationals

/// Factor a monic squarefree rational polynomial into monic irreducibles.
pub fn factor_squarefree_rational(f: &[BigRational]) -> Vec<Vec<BigRational>> {
    if f.len() <= 2 {
        return vec![poly::make_monic(&Rationals, f)];
    }
    let denom_lcm = f.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let z: ZPoly = f.iter().map(|c| c.numer() * (&denom_lcm / c.denom())).collect();
    let z = primitive_part(&z);
    factor_squarefree_integer(&z)
        .into_iter()
        .map(|g| {
            let q: Vec<BigRational> = g.into_iter().map(BigRational::from_integer).collect();
            poly::make_monic(&Rationals, &q)
        })
        .collect()
}

/// Irreducible primitive factors of a squarefree primitive integer polynomial.
pub fn factor_squarefree_integer(g: &[BigInt]) -> Vec<ZPoly> {
    let mut g = g.to_vec();
    ztrim(&mut g);
    let mut out = Vec::new();
    if g.len() >= 2 && g[0].is_zero() {
        out.push(vec![BigInt::zero(), BigInt::one()]);
        g.remove(0);
    }
    if g.len() <= 2 {
        if g.len() == 2 {
            out.push(primitive_part(&g));
        }
        return out;
    }
    let n = g.len() - 1;
    let lc = g.last().unwrap().clone();

    // choose the good prime with the fewest modular factors among the first few
    let mut best: Option<(PrimeField, Vec<Vec<u64>>)> = None;
    let mut good = 0;
    for p in small_primes() {
        let k = PrimeField::new(p).unwrap();
        if k.from_bigint(&lc) == 0 {
            continue;
        }
        let gp = to_fp(&k, &g);
        let dg = poly::derivative(&k, &gp);
        if poly::gcd(&k, &gp, &dg).len() != 1 {
            continue;
        }
        let facs = factor_squarefree_mod_p(&k, &gp);
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((k, facs));
        }
        good += 1;
        if good >= 6 || best.as_ref().unwrap().1.len() == 1 {
            break;
        }
    }
    let (k, facs) = best.expect("a good prime always exists for squarefree input");
    if facs.len() == 1 {
        out.push(primitive_part(&g));
        return out;
    }

    // coefficient bound for lc * (any factor)
    let norm_sq: BigInt = g.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + 1;
    let bound = (BigInt::one() << n) * norm * lc.abs();
    let p = BigInt::from(k.p());
    let mut pk = p.clone();
    let mut e = 1;
    while pk <= &bound * 2 {
        pk *= &p;
        e += 1;
    }
    let lifted = hensel_lift(&k, &g, &facs, e);
    out.extend(recombine(g, lifted, &pk));
    out
}

/// Lift `g = lc * prod facs (mod p)` to a factorization modulo `p^e` with
/// monic factors.
fn hensel_lift(k: &PrimeField, g: &[BigInt], facs: &[Vec<u64>], e: usize) -> Vec<ZPoly> {
    let p = BigInt::from(k.p());
    let pe = p.pow(e as u32);
    let mut rest = g.to_vec();
    let mut out = Vec::new();
    for i in 0..facs.len() - 1 {
        let lc_rest = k.from_bigint(rest.last().unwrap());
        let mut h0 = vec![lc_rest];
        for f in &facs[i + 1..] {
            h0 = poly::mul(k, &h0, f);
        }
        let (gi, hi) = lift_pair(k, &rest, &facs[i], &h0, e);
        out.push(gi);
        rest = hi;
    }
    // rest = lc * last (mod p^e); make it monic
    let lc = rest.last().unwrap().clone();
    let inv = lc.extended_gcd(&pe).x.mod_floor(&pe);
    out.push(zmod(&rest.iter().map(|c| c * &inv).collect::<Vec<_>>(), &pe));
    out
}

/// Linear Hensel lifting of `f = g h (mod p)`, `g` monic, to modulus `p^e`.
fn lift_pair(k: &PrimeField, f: &[BigInt], g0: &[u64], h0: &[u64], e: usize) -> (ZPoly, ZPoly) {
    let p = BigInt::from(k.p());
    let (one, s, t) = poly::ext_gcd(k, g0, h0);
    debug_assert!(poly::is_one(k, &one));
    let mut g = from_fp(g0);
    let mut h = from_fp(h0);
    let mut pm = p.clone();
    for _ in 1..e {
        let gh = zmul(&g, &h);
        let diff: ZPoly = (0..f.len().max(gh.len()))
            .map(|i| f.get(i).cloned().unwrap_or_default() - gh.get(i).cloned().unwrap_or_default())
            .collect();
        let err: ZPoly = diff.iter().map(|c| c / &pm).collect();
        let err_p = to_fp(k, &err);
        if !err_p.is_empty() {
            let gp = to_fp(k, &g);
            let hp = to_fp(k, &h);
            let (q, r) = poly::divrem(k, &poly::mul(k, &t, &err_p), &gp);
            let dh = poly::add(k, &poly::mul(k, &s, &err_p), &poly::mul(k, &q, &hp));
            let pm1 = &pm * &p;
            g = add_scaled(&g, &from_fp(&r), &pm, &pm1);
            h = add_scaled(&h, &from_fp(&dh), &pm, &pm1);
        }
        pm *= &p;
    }
    (zmod(&g, &pm), zmod(&h, &pm))
}

fn add_scaled(a: &[BigInt], d: &[BigInt], scale: &BigInt, modulus: &BigInt) -> ZPoly {
    let n = a.len().max(d.len());
    let v: ZPoly = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + d.get(i).cloned().unwrap_or_default() * scale)
        .collect();
    zmod(&v, modulus)
}

fn recombine(mut g: ZPoly, mut lifted: Vec<ZPoly>, pk: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = None;
        for subset in Combinations::new(lifted.len(), size) {
            let lc = g.last().unwrap().clone();
            let mut cand = vec![lc];
            for &i in &subset {
                cand = zmod(&zmul(&cand, &lifted[i]), pk);
            }
            let cand = primitive_part(&zsym(&cand, pk));
            if let Some(q) = zdiv_exact(&g, &cand) {
                found = Some((subset, cand, q));
                break;
            }
        }
        match found {
            Some((subset, cand, q)) => {
                out.push(cand);
                g = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    out.push(primitive_part(&g));
    out
}

/// Lexicographic `size`-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, size: usize) -> Self {
        Combinations { n, idx: (0..size).collect(), done: size > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

// ---------------------------------------------------------------------------
// Simple extensions

/// Factor a monic squarefree polynomial over `Q(alpha)` by norms.
pub fn factor_squarefree_extension(k: &SimpleExtension, f: &[Vec<BigRational>]) -> Vec<Vec<Vec<BigRational>>> {
    let f = poly::make_monic(k, f);
    if f.len() <= 2 {
        return vec![f];
    }
    let alpha = k.generator();
    let q = Rationals;
    for step in 0i64..64 {
        // s runs through 0, 1, -1, 2, -2, ...
        let s = if step % 2 == 1 { (step + 1) / 2 } else { -(step / 2) };
        let s_alpha = k.mul(&k.from_i64(s), &alpha);
        let g = poly::shift(k, &f, &k.neg(&s_alpha));
        let norm = norm_polynomial(k, &g);
        let dn = poly::derivative(&q, &norm);
        if poly::gcd(&q, &norm, &dn).len() != 1 {
            continue;
        }
        let mut out = Vec::new();
        for factor in factor_squarefree_rational(&norm) {
            let lifted: Vec<Vec<BigRational>> = factor.iter().map(|c| k.from_rational(c.clone())).collect();
            let h = poly::gcd(k, &g, &lifted);
            if h.len() > 1 {
                out.push(poly::shift(k, &h, &s_alpha));
            }
        }
        return out;
    }
    // not reached for squarefree input over a number field
    vec![f]
}

/// `N(g)(x) = prod_sigma sigma(g)(x)`, by evaluation and interpolation.
fn norm_polynomial(k: &SimpleExtension, g: &[Vec<BigRational>]) -> Vec<BigRational> {
    let q = Rationals;
    let total = (g.len() - 1) * k.degree();
    let xs: Vec<BigRational> = (0..=total as i64).map(|i| q.from_i64(i)).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|x| k.norm(&poly::eval(k, g, &k.from_rational(x.clone()))))
        .collect();
    interpolate(&xs, &ys)
}

/// Newton interpolation over the rationals.
pub fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    let q = Rationals;
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut out: Vec<BigRational> = Vec::new();
    for i in (0..n).rev() {
        // out = out * (x - xs[i]) + coef[i]
        let lin = vec![-xs[i].clone(), q.one()];
        out = poly::add(&q, &poly::mul(&q, &out, &lin), &poly::constant(&q, coef[i].clone()));
    }
    out
}

/// Rational roots of a rational polynomial (used by tests and the
/// semisimple splitting fast path).
pub fn rational_roots(f: &[BigRational]) -> Vec<BigRational> {
    factor_squarefree_rational(&squarefree_part(f))
        .into_iter()
        .filter(|g| g.len() == 2)
        .map(|g| -g[0].clone())
        .collect()
}

fn squarefree_part(f: &[BigRational]) -> Vec<BigRational> {
    let q = Rationals;
    let d = poly::derivative(&q, f);
    let g = poly::gcd(&q, f, &d);
    poly::make_monic(&q, &poly::divrem(&q, f, &g).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn qpoly(c: &[i64]) -> Vec<BigRational> {
        c.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn combinations_enumerate_all_subsets() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
    }

    #[test]
    fn mod_p_factors_multiply_back() {
        let k = PrimeField::new(7).unwrap();
        // (x+1)(x+2)(x^2+1) over GF(7); x^2+1 is irreducible since -1 is not a square mod 7
        let f = poly::mul(&k, &poly::mul(&k, &[1, 1], &[2, 1]), &[1, 0, 1]);
        let facs = factor_squarefree_mod_p(&k, &f);
        assert_eq!(facs.len(), 3);
        let back = facs.iter().fold(vec![1u64], |acc, g| poly::mul(&k, &acc, g));
        assert_eq!(back, f);
    }

    #[test]
    fn gf2_splitting_uses_trace() {
        let k = PrimeField::new(2).unwrap();
        // x^4 + x = x (x+1)(x^2+x+1)
        let f = vec![0, 1, 0, 0, 1];
        let facs = factor_squarefree_mod_p(&k, &f);
        let mut degs: Vec<usize> = facs.iter().map(|g| g.len() - 1).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 2]);
    }

    #[test]
    fn swinnerton_dyer_style_input_needs_recombination() {
        // x^4 - 10x^2 + 1 is irreducible over Q but splits modulo every prime
        let f = qpoly(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_squarefree_rational(&f).len(), 1);
    }

    #[test]
    fn integer_lc_factors() {
        // (2x+1)(3x-1)(x^2+x+1) / 6 made monic
        let z = zmul(&zmul(&[BigInt::from(1), BigInt::from(2)], &[BigInt::from(-1), BigInt::from(3)]),
            &[BigInt::from(1), BigInt::from(1), BigInt::from(1)]);
        let facs = factor_squarefree_integer(&z);
        assert_eq!(facs.len(), 3);
    }

    #[test]
    fn interpolation_reproduces_polynomial() {
        let f = qpoly(&[3, 0, -2, 1]);
        let xs: Vec<_> = (0..4).map(|i| rat(i, 1)).collect();
        let ys: Vec<_> = xs.iter().map(|x| poly::eval(&Rationals, &f, x)).collect();
        assert_eq!(interpolate(&xs, &ys), f);
    }

    #[test]
    fn cyclotomic_extension_splits_x3_minus_1() {
        let k = SimpleExtension::cyclotomic(3).unwrap();
        // x^2 + x + 1 splits into linear factors over Q(zeta_3)
        let f = vec![k.one(), k.one(), k.one()];
        let facs = factor_squarefree_extension(&k, &f);
        assert_eq!(facs.len(), 2);
        assert!(facs.iter().all(|g| g.len() == 2));
        // x^2 - 2 stays irreducible
        let g = vec![k.from_i64(-2), k.zero(), k.one()];
        assert_eq!(factor_squarefree_extension(&k, &g).len(), 1);
    }
}
