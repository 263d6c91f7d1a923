//! Dense univariate polynomials over a [`Field`], stored low degree first
//! with no trailing zeros. The zero polynomial is the empty vector.

use num_bigint::BigUint;

use crate::field::Field;

pub fn trim<F: Field>(k: &F, p: &mut Vec<F::Elem>) {
    while p.last().is_some_and(|c| k.is_zero(c)) {
        p.pop();
    }
}

pub fn trimmed<F: Field>(k: &F, mut p: Vec<F::Elem>) -> Vec<F::Elem> {
    trim(k, &mut p);
    p
}

pub fn degree<F: Field>(p: &[F::Elem]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn constant<F: Field>(k: &F, c: F::Elem) -> Vec<F::Elem> {
    trimmed(k, vec![c])
}

/// The polynomial `x`.
pub fn x<F: Field>(k: &F) -> Vec<F::Elem> {
    vec![k.zero(), k.one()]
}

pub fn add<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let z = k.zero();
    let out = (0..n)
        .map(|i| k.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trimmed(k, out)
}

pub fn sub<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let z = k.zero();
    let out = (0..n)
        .map(|i| k.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trimmed(k, out)
}

pub fn scale<F: Field>(k: &F, a: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
    trimmed(k, a.iter().map(|x| k.mul(x, c)).collect())
}

pub fn mul<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if k.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            k.add_mul_assign(&mut out[i + j], x, y);
        }
    }
    trimmed(k, out)
}

/// Quotient and remainder. Panics on division by zero.
pub fn divrem<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trimmed(k, a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = k.inv(b.last().unwrap()).expect("nonzero leading coefficient");
    let mut q = vec![k.zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = k.mul(r.last().unwrap(), &lead_inv);
        for (i, bi) in b.iter().enumerate() {
            k.sub_mul_assign(&mut r[shift + i], &c, bi);
        }
        q[shift] = c;
        r.pop();
        trim(k, &mut r);
    }
    (trimmed(k, q), r)
}

pub fn rem<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    divrem(k, a, b).1
}

pub fn make_monic<F: Field>(k: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(l) => {
            let li = k.inv(l).expect("nonzero");
            scale(k, a, &li)
        }
    }
}

/// Monic gcd (zero if both inputs are zero).
pub fn gcd<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut a = trimmed(k, a.to_vec());
    let mut b = trimmed(k, b.to_vec());
    while !b.is_empty() {
        let r = rem(k, &a, &b);
        a = b;
        b = r;
    }
    make_monic(k, &a)
}

/// Returns `(g, s, t)` with `s*a + t*b = g`, `g` the monic gcd.
pub fn ext_gcd<F: Field>(
    k: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Vec<F::Elem>, Vec<F::Elem>, Vec<F::Elem>) {
    let (mut r0, mut r1) = (trimmed(k, a.to_vec()), trimmed(k, b.to_vec()));
    let (mut s0, mut s1) = (vec![k.one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![k.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(k, &r0, &r1);
        let s2 = sub(k, &s0, &mul(k, &q, &s1));
        let t2 = sub(k, &t0, &mul(k, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match r0.last() {
        None => (Vec::new(), s0, t0),
        Some(l) => {
            let li = k.inv(l).unwrap();
            (scale(k, &r0, &li), scale(k, &s0, &li), scale(k, &t0, &li))
        }
    }
}

pub fn derivative<F: Field>(k: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| k.mul(c, &k.from_i64(i as i64)))
        .collect();
    trimmed(k, out)
}

pub fn eval<F: Field>(k: &F, a: &[F::Elem], x: &F::Elem) -> F::Elem {
    let mut acc = k.zero();
    for c in a.iter().rev() {
        acc = k.add(&k.mul(&acc, x), c);
    }
    acc
}

/// `a(x + c)`
pub fn shift<F: Field>(k: &F, a: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
    let lin = trimmed(k, vec![c.clone(), k.one()]);
    let mut acc: Vec<F::Elem> = Vec::new();
    for coef in a.iter().rev() {
        acc = add(k, &mul(k, &acc, &lin), &constant(k, coef.clone()));
    }
    acc
}

/// `base^e mod m`
pub fn pow_mod<F: Field>(k: &F, base: &[F::Elem], e: &BigUint, m: &[F::Elem]) -> Vec<F::Elem> {
    let mut result = rem(k, &[k.one()], m);
    let b = rem(k, base, m);
    let bits = e.bits();
    for i in (0..bits).rev() {
        result = rem(k, &mul(k, &result, &result), m);
        if e.bit(i) {
            result = rem(k, &mul(k, &result, &b), m);
        }
    }
    result
}

pub fn is_one<F: Field>(k: &F, a: &[F::Elem]) -> bool {
    a.len() == 1 && k.is_one(&a[0])
}

/// Squarefree decomposition of a nonzero polynomial: pairs `(g, m)` of monic
/// squarefree pairwise coprime factors with `f = lc * prod g^m`.
///
/// In characteristic `p` the field is assumed perfect with trivial Frobenius
/// on coefficients (true for prime fields).
pub fn squarefree_decomposition<F: Field>(k: &F, f: &[F::Elem]) -> Vec<(Vec<F::Elem>, usize)> {
    let f = make_monic(k, f);
    if f.len() <= 1 {
        return Vec::new();
    }
    let p = k.characteristic() as usize;
    let df = derivative(k, &f);
    if df.is_empty() {
        // f = g(x^p) = g(x)^p
        let g: Vec<F::Elem> = f.iter().step_by(p).cloned().collect();
        return squarefree_decomposition(k, &g)
            .into_iter()
            .map(|(h, m)| (h, m * p))
            .collect();
    }
    let mut out = Vec::new();
    let mut c = gcd(k, &f, &df);
    let mut w = divrem(k, &f, &c).0;
    let mut i = 1;
    while w.len() > 1 {
        let y = gcd(k, &w, &c);
        let z = divrem(k, &w, &y).0;
        if z.len() > 1 {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = divrem(k, &c, &w).0;
    }
    if c.len() > 1 {
        // Remaining part is a p-th power (only in positive characteristic).
        debug_assert!(p > 0);
        let g: Vec<F::Elem> = c.iter().step_by(p).cloned().collect();
        for (h, m) in squarefree_decomposition(k, &g) {
            out.push((h, m * p));
        }
    }
    out
}

/// Full factorization into monic irreducibles with multiplicities, sorted
/// by degree (stable for equal degrees).
pub fn factor<F: Field>(k: &F, f: &[F::Elem]) -> Vec<(Vec<F::Elem>, usize)> {
    let mut out = Vec::new();
    for (g, m) in squarefree_decomposition(k, f) {
        for h in k.factor_squarefree(&g) {
            out.push((h, m));
        }
    }
    out.sort_by_key(|(h, _)| h.len());
    out
}

/// Multiply a list of factors with multiplicities back together.
pub fn expand<F: Field>(k: &F, factors: &[(Vec<F::Elem>, usize)]) -> Vec<F::Elem> {
    let mut acc = vec![k.one()];
    for (g, m) in factors {
        for _ in 0..*m {
            acc = mul(k, &acc, g);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn division_and_gcd() {
        let k = PrimeField::new(5).unwrap();
        // (x + 1)(x + 2) = x^2 + 3x + 2
        let f = mul(&k, &[1, 1], &[2, 1]);
        assert_eq!(f, vec![2, 3, 1]);
        let (q, r) = divrem(&k, &f, &[1, 1]);
        assert_eq!((q, r), (vec![2, 1], vec![]));
        assert_eq!(gcd(&k, &f, &[2, 1]), vec![2, 1]);
        assert_eq!(eval(&k, &f, &3), 0);
    }

    #[test]
    fn squarefree_parts_in_characteristic_p() {
        let k = PrimeField::new(3).unwrap();
        // x^3 + 1 = (x + 1)^3 over F_3
        let sf = squarefree_decomposition(&k, &[1, 0, 0, 1]);
        assert_eq!(sf, vec![(vec![1, 1], 3)]);
        assert_eq!(expand(&k, &factor(&k, &[1, 0, 0, 1])), vec![1, 0, 0, 1]);
    }
}
