//! Exact ground fields.
//!
//! Every computation in the crate is generic over a [`Field`] context. A
//! context is a small value describing the field (the prime `p`, or the
//! defining polynomial of an extension) and performs arithmetic on its
//! element type. Three contexts are provided: [`Rationals`], [`PrimeField`]
//! and [`SimpleExtension`] (a simple algebraic extension of the rationals,
//! used for cyclotomic fields).

use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::factor;
use crate::poly;

/// Serializable description of a field, independent of the element type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    Prime(u64),
    /// Simple extension of the rationals by a root of the given monic
    /// polynomial (coefficients low degree first).
    Extension(Vec<BigRational>),
}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Prime(p) => *p,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            FieldDescriptor::Rationals => serde_json::json!({ "kind": "rationals" }),
            FieldDescriptor::Prime(p) => serde_json::json!({ "kind": "prime", "p": p }),
            FieldDescriptor::Extension(m) => serde_json::json!({
                "kind": "extension",
                "modulus": m.iter().map(rational_to_string).collect::<Vec<_>>(),
            }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let kind = v
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("field descriptor needs a \"kind\"".into()))?;
        match kind {
            "rationals" => Ok(FieldDescriptor::Rationals),
            "prime" => {
                let p = v
                    .get("p")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| Error::Parse("prime field needs integer \"p\"".into()))?;
                Ok(FieldDescriptor::Prime(p))
            }
            "extension" => {
                let m = v
                    .get("modulus")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Parse("extension needs a \"modulus\" array".into()))?;
                let coeffs = m.iter().map(parse_rational_value).collect::<Result<Vec<_>>>()?;
                Ok(FieldDescriptor::Extension(coeffs))
            }
            other => Err(Error::Parse(format!("unknown field kind {other:?}"))),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::Prime(p) => write!(f, "GF({p})"),
            FieldDescriptor::Extension(m) => {
                write!(f, "Q[x]/(")?;
                let mut first = true;
                for (i, c) in m.iter().enumerate().rev() {
                    if c.is_zero() {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    match i {
                        0 => write!(f, "{c}")?,
                        1 => write!(f, "{c}*x")?,
                        _ => write!(f, "{c}*x^{i}")?,
                    }
                }
                write!(f, ")")
            }
        }
    }
}

/// Arithmetic context for an exact field.
///
/// Elements are plain values; all operations go through the context so
/// that runtime parameters (the prime, the modulus) never have to be stored
/// per element.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn descriptor(&self) -> FieldDescriptor;
    fn from_descriptor(d: &FieldDescriptor) -> Result<Self>;

    fn characteristic(&self) -> u64;
    /// Number of elements, for finite fields.
    fn order(&self) -> Option<u64> {
        None
    }

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
    fn add_assign(&self, acc: &mut Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, b);
    }
    /// `acc += a * b`
    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let t = self.mul(a, b);
        self.add_assign(acc, &t);
    }
    /// `acc -= a * b`
    fn sub_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let t = self.mul(a, b);
        *acc = self.sub(acc, &t);
    }
    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Monic irreducible factors of a monic squarefree polynomial of positive
    /// degree (coefficients low degree first).
    fn factor_squarefree(&self, f: &[Self::Elem]) -> Vec<Vec<Self::Elem>>;

    fn elem_to_json(&self, a: &Self::Elem) -> Value;
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;

    /// A random element drawn from a small box of "integers" `[-range, range]`
    /// (mapped into the field).
    fn random_small<R: Rng + ?Sized>(&self, rng: &mut R, range: i64) -> Self::Elem {
        self.from_i64(rng.gen_range(-range..=range))
    }

    /// Whether `m` is invertible in the field (used for group-order checks).
    fn is_unit_integer(&self, m: u64) -> bool {
        match self.characteristic() {
            0 => m != 0,
            p => m % p != 0,
        }
    }
}

// ---------------------------------------------------------------------------
// Rationals

/// The field of rational numbers, backed by `num-rational`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn from_descriptor(d: &FieldDescriptor) -> Result<Self> {
        match d {
            FieldDescriptor::Rationals => Ok(Rationals),
            other => Err(Error::FieldMismatch(format!("expected Q, got {other}"))),
        }
    }

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn add_assign(&self, acc: &mut BigRational, b: &BigRational) {
        *acc += b;
    }
    fn add_mul_assign(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if a.is_integer() && b.is_integer() && acc.is_integer() {
            let v = acc.numer() + a.numer() * b.numer();
            *acc = BigRational::from_integer(v);
        } else {
            *acc += a * b;
        }
    }
    fn sub_mul_assign(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if a.is_integer() && b.is_integer() && acc.is_integer() {
            let v = acc.numer() - a.numer() * b.numer();
            *acc = BigRational::from_integer(v);
        } else {
            *acc -= a * b;
        }
    }

    fn factor_squarefree(&self, f: &[BigRational]) -> Vec<Vec<BigRational>> {
        factor::factor_squarefree_rational(f)
    }

    fn elem_to_json(&self, a: &BigRational) -> Value {
        Value::String(rational_to_string(a))
    }
    fn elem_from_json(&self, v: &Value) -> Result<BigRational> {
        parse_rational_value(v)
    }
    fn format_elem(&self, a: &BigRational) -> String {
        rational_to_string(a)
    }
}

/// `"p/q"` with the denominator omitted when it is one.
pub fn rational_to_string(a: &BigRational) -> String {
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_rational_value(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(BigInt::from(i)))
            .ok_or_else(|| Error::Parse(format!("not an integer: {n}"))),
        other => Err(Error::Parse(format!("expected a rational, got {other}"))),
    }
}

// ---------------------------------------------------------------------------
// Prime fields

/// The prime field `GF(p)` with residues stored in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if p >= 1 << 62 {
            return Err(Error::InvalidInput(format!("prime {p} too large")));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.p as i128) as u64
    }

    pub fn from_bigint(&self, v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits")
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime(self.p)
    }

    fn from_descriptor(d: &FieldDescriptor) -> Result<Self> {
        match d {
            FieldDescriptor::Prime(p) => PrimeField::new(*p),
            other => Err(Error::FieldMismatch(format!("expected a prime field, got {other}"))),
        }
    }

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn order(&self) -> Option<u64> {
        Some(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i128(n as i128)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        let (g, x, _) = ext_gcd_i128(*a as i128, self.p as i128);
        debug_assert_eq!(g, 1);
        Some(self.reduce_i128(x))
    }

    fn factor_squarefree(&self, f: &[u64]) -> Vec<Vec<u64>> {
        factor::factor_squarefree_mod_p(self, f)
    }

    fn elem_to_json(&self, a: &u64) -> Value {
        Value::from(*a)
    }
    fn elem_from_json(&self, v: &Value) -> Result<u64> {
        if let Some(u) = v.as_u64() {
            return Ok(u % self.p);
        }
        if let Some(i) = v.as_i64() {
            return Ok(self.from_i64(i));
        }
        if let Some(s) = v.as_str() {
            let r = parse_rational(s)?;
            let n = self.from_bigint(r.numer());
            let d = self.from_bigint(r.denom());
            return self
                .div(&n, &d)
                .ok_or_else(|| Error::Parse(format!("{s} has denominator divisible by {}", self.p)));
        }
        Err(Error::Parse(format!("expected an element of GF({}), got {v}", self.p)))
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
    fn random_small<R: Rng + ?Sized>(&self, rng: &mut R, range: i64) -> u64 {
        if (2 * range as u64 + 1) >= self.p {
            rng.gen_range(0..self.p)
        } else {
            self.from_i64(rng.gen_range(-range..=range))
        }
    }
}

fn ext_gcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s, old_t)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// ---------------------------------------------------------------------------
// Simple extensions

#[derive(Debug, PartialEq, Eq, Hash)]
struct ExtensionData {
    /// Monic modulus, length `degree + 1`.
    modulus: Vec<BigRational>,
}

/// `Q[x]/(f)` for a monic irreducible `f`; elements are coefficient vectors
/// of length `deg f`.
#[derive(Clone, Debug, Eq, Hash)]
pub struct SimpleExtension {
    data: Arc<ExtensionData>,
}

impl PartialEq for SimpleExtension {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data == other.data
    }
}

impl SimpleExtension {
    /// Builds the extension, rejecting reducible or non-monic moduli.
    pub fn new(modulus: Vec<BigRational>) -> Result<Self> {
        let mut m = modulus;
        poly::trim(&Rationals, &mut m);
        if m.len() < 2 {
            return Err(Error::InvalidInput("extension modulus must have positive degree".into()));
        }
        if !m.last().unwrap().is_one() {
            return Err(Error::InvalidInput("extension modulus must be monic".into()));
        }
        let factors = poly::factor(&Rationals, &m);
        if factors.len() != 1 || factors[0].1 != 1 {
            return Err(Error::InvalidInput("extension modulus is reducible over Q".into()));
        }
        Ok(SimpleExtension { data: Arc::new(ExtensionData { modulus: m }) })
    }

    /// `Q(zeta_ell)` via the `ell`-th cyclotomic polynomial.
    pub fn cyclotomic(ell: u64) -> Result<Self> {
        if ell == 0 {
            return Err(Error::InvalidInput("cyclotomic order must be positive".into()));
        }
        SimpleExtension::new(cyclotomic_polynomial(ell))
    }

    pub fn degree(&self) -> usize {
        self.data.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigRational] {
        &self.data.modulus
    }

    /// The class of `x`, a root of the modulus.
    pub fn generator(&self) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.degree()];
        if self.degree() == 1 {
            v[0] = -self.data.modulus[0].clone();
        } else {
            v[1] = BigRational::one();
        }
        v
    }

    pub fn from_rational(&self, r: BigRational) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.degree()];
        v[0] = r;
        v
    }

    /// Reduce an arbitrary coefficient vector modulo the defining polynomial.
    pub fn reduce(&self, mut c: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        let m = &self.data.modulus;
        while c.len() > d {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = c.len() - d;
            for i in 0..d {
                c[shift + i] -= &top * &m[i];
            }
        }
        c.resize(d, BigRational::zero());
        c
    }

    /// Matrix of multiplication by `a` in the power basis (column `j` is `a * x^j`).
    pub fn multiplication_matrix(&self, a: &[BigRational]) -> Vec<Vec<BigRational>> {
        let d = self.degree();
        let mut cols = Vec::with_capacity(d);
        let mut xj = self.from_rational(BigRational::one());
        let x = self.generator();
        for _ in 0..d {
            cols.push(self.mul(&a.to_vec(), &xj));
            xj = self.mul(&xj, &x);
        }
        (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect()
    }

    /// Field norm down to the rationals.
    pub fn norm(&self, a: &[BigRational]) -> BigRational {
        let m = self.multiplication_matrix(a);
        crate::linalg::Matrix::from_rows(Rationals, m).determinant()
    }
}

impl Field for SimpleExtension {
    type Elem = Vec<BigRational>;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Extension(self.data.modulus.clone())
    }

    fn from_descriptor(d: &FieldDescriptor) -> Result<Self> {
        match d {
            FieldDescriptor::Extension(m) => SimpleExtension::new(m.clone()),
            other => Err(Error::FieldMismatch(format!("expected an extension field, got {other}"))),
        }
    }

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> Self::Elem {
        vec![BigRational::zero(); self.degree()]
    }
    fn one(&self) -> Self::Elem {
        self.from_rational(BigRational::one())
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_rational(BigRational::from_integer(BigInt::from(n)))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(Zero::is_zero)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let d = self.degree();
        let mut c = vec![BigRational::zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] += x * y;
                }
            }
        }
        self.reduce(c)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| -x).collect()
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(a) {
            return None;
        }
        let mut p = a.clone();
        poly::trim(&Rationals, &mut p);
        let (g, s, _) = poly::ext_gcd(&Rationals, &p, &self.data.modulus);
        // g is monic; irreducibility of the modulus forces g = 1.
        debug_assert_eq!(g.len(), 1);
        Some(self.reduce(s))
    }

    fn factor_squarefree(&self, f: &[Self::Elem]) -> Vec<Vec<Self::Elem>> {
        factor::factor_squarefree_extension(self, f)
    }

    fn elem_to_json(&self, a: &Self::Elem) -> Value {
        Value::Array(a.iter().map(|c| Value::String(rational_to_string(c))).collect())
    }
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem> {
        match v {
            Value::Array(items) => {
                let c = items.iter().map(parse_rational_value).collect::<Result<Vec<_>>>()?;
                Ok(self.reduce(c))
            }
            other => Ok(self.from_rational(parse_rational_value(other)?)),
        }
    }
    fn format_elem(&self, a: &Self::Elem) -> String {
        let terms: Vec<String> = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => rational_to_string(c),
                1 => format!("{}*z", rational_to_string(c)),
                _ => format!("{}*z^{i}", rational_to_string(c)),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
    fn random_small<R: Rng + ?Sized>(&self, rng: &mut R, range: i64) -> Self::Elem {
        (0..self.degree())
            .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-range..=range))))
            .collect()
    }
}

/// The `n`-th cyclotomic polynomial over the rationals.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigRational> {
    let q = Rationals;
    let mut f = vec![q.zero(); n as usize + 1];
    f[0] = q.from_i64(-1);
    f[n as usize] = q.one();
    for d in 1..n {
        if n % d == 0 {
            let (quot, rem) = poly::divrem(&q, &f, &cyclotomic_polynomial(d));
            debug_assert!(rem.is_empty());
            f = quot;
        }
    }
    f
}

/// Rational number helper used throughout tests and constructors.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
