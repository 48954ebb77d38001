//! Arithmetic in GF(p^m).
//!
//! Elements are stored by their base-p code: the element
//! `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` (mod the field modulus) has code
//! `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. Code 0 is zero and code 1 is one.
//! Multiplication goes through exp/log tables built from the smallest-code
//! multiplicative generator.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;

/// Above this order odd-characteristic square roots use Tonelli-Shanks
/// instead of a lookup table.
const SQRT_TABLE_LIMIT: u32 = 1 << 10;

/// Odd extension fields up to this order get a full addition table.
const ADD_TABLE_LIMIT: u32 = 256;

/// A field element, identified by its integer code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn code(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct FieldData {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, low-to-high, length m + 1.
    modulus: Vec<u32>,
    generator: u32,
    /// exp[i] = g^i for i in 0..2(q-1).
    exp: Vec<u32>,
    log: Vec<u32>,
    /// Smallest root per code, u32::MAX for non-squares. Odd q <= 2^10 only.
    sqrt_table: Option<Vec<u32>>,
    /// add_table[a * q + b] = a + b. Odd extension fields of order <= 256 only.
    add_table: Option<Vec<u32>>,
}

/// Shared, immutable context for GF(p^m). Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) modulus {:?}", self.0.p, self.0.m, self.0.modulus)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.m)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n`.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
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

// Dense polynomials over GF(p) with u32 coefficients, used only while the
// field itself is being built.
mod prime_poly {
    use alloc::vec::Vec;

    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    /// Remainder of `a` modulo monic `b`.
    pub fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r: Vec<u32> = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        while r.len() > db {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - db;
            for (i, &bc) in b.iter().enumerate() {
                let t = (lead as u64 * bc as u64 % p as u64) as u32;
                r[i + shift] = (r[i + shift] + p - t) % p;
            }
            trim(&mut r);
        }
        r
    }

    /// All monic polynomials of the given degree, as coefficient vectors.
    pub fn monic_of_degree(d: usize, p: u32) -> impl Iterator<Item = Vec<u32>> {
        let count = (p as u64).pow(d as u32);
        (0..count).map(move |mut idx| {
            let mut c = Vec::with_capacity(d + 1);
            for _ in 0..d {
                c.push((idx % p as u64) as u32);
                idx /= p as u64;
            }
            c.push(1);
            c
        })
    }

    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let m = f.len() - 1;
        if m <= 1 {
            return true;
        }
        for d in 1..=m / 2 {
            for g in monic_of_degree(d, p) {
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Monic irreducible polynomials of degree m over GF(p), in the order of
/// their coefficient tuples (c_0, ..., c_{m-1}) compared from c_0.
fn canonical_modulus(p: u32, m: u32) -> Vec<u32> {
    let m = m as usize;
    let count = (p as u64).pow(m as u32);
    for idx in 0..count {
        // Most significant digit of idx is c_0, so idx order is tuple order.
        let mut c = vec![0u32; m + 1];
        let mut rest = idx;
        for i in (0..m).rev() {
            c[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        c[m] = 1;
        if m > 1 && c[0] == 0 {
            continue;
        }
        if prime_poly::is_irreducible(&c, p) {
            return c;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

fn digits(mut code: u32, p: u32, m: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(m as usize);
    for _ in 0..m {
        out.push(code % p);
        code /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

/// Multiplication by polynomial arithmetic, independent of the tables.
fn slow_mul(a: u32, b: u32, p: u32, m: u32, modulus: &[u32]) -> u32 {
    let da = digits(a, p, m);
    let db = digits(b, p, m);
    let mut prod = vec![0u32; 2 * m as usize];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    let mut r = prime_poly::rem(&prod, modulus, p);
    r.resize(m as usize, 0);
    undigits(&r, p)
}

fn slow_pow(mut base: u32, mut e: u64, p: u32, m: u32, modulus: &[u32]) -> u32 {
    let mut acc = 1u32;
    while e > 0 {
        if e & 1 == 1 {
            acc = slow_mul(acc, base, p, m, modulus);
        }
        base = slow_mul(base, base, p, m, modulus);
        e >>= 1;
    }
    acc
}

impl Field {
    /// Builds GF(p^m) with its canonical modulus.
    pub fn new(p: u32, m: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let q64 = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if q64 > MAX_ORDER {
            return Err(Error::FieldTooLarge { p, m });
        }
        let q = q64 as u32;
        let modulus = canonical_modulus(p, m);

        // Smallest generator, by the prime-divisor order test.
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let generator = if q == 2 {
            1
        } else {
            (2..q)
                .find(|&g| {
                    factors
                        .iter()
                        .all(|&l| slow_pow(g, order / l, p, m, &modulus) != 1)
                })
                .expect("GF(q)* is cyclic")
        };

        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..n {
            exp[i] = x;
            log[x as usize] = i as u32;
            x = slow_mul(x, generator, p, m, &modulus);
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }

        let mut data = FieldData {
            p,
            m,
            q,
            modulus,
            generator,
            exp,
            log,
            sqrt_table: None,
            add_table: None,
        };
        if p != 2 && q <= SQRT_TABLE_LIMIT {
            let mut table = vec![u32::MAX; q as usize];
            let field = Field(Arc::new(data));
            for r in 0..q {
                let sq = field.mul(Elem(r), Elem(r)).0 as usize;
                if table[sq] == u32::MAX {
                    table[sq] = r;
                }
            }
            data = Arc::try_unwrap(field.0).ok().expect("sole owner");
            data.sqrt_table = Some(table);
        }
        if p != 2 && m > 1 && q <= ADD_TABLE_LIMIT {
            let mut table = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    let (da, db) = (digits(a, p, m), digits(b, p, m));
                    let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    table[(a * q + b) as usize] = undigits(&sum, p);
                }
            }
            data.add_table = Some(table);
        }
        Ok(Field(Arc::new(data)))
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.m
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn is_even(&self) -> bool {
        self.0.p == 2
    }

    /// Modulus coefficients, low-to-high, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.0.q).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.0.q).map(Elem)
    }

    pub fn elem(&self, code: u32) -> Result<Elem> {
        if code < self.0.q {
            Ok(Elem(code))
        } else {
            Err(Error::BadElement { code, q: self.0.q })
        }
    }

    /// Image of an integer under Z -> GF(p) -> GF(p^m).
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// Polynomial-basis coordinates (c_0, ..., c_{m-1}).
    pub fn coordinates(&self, a: Elem) -> Vec<u32> {
        digits(a.0, self.0.p, self.0.m)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let d = &*self.0;
        if d.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if d.m == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= d.p { s - d.p } else { s });
        }
        if let Some(t) = &d.add_table {
            return Elem(t[(a.0 * d.q + b.0) as usize]);
        }
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut place) = (0u32, 1u32);
        while x > 0 || y > 0 {
            let s = x % d.p + y % d.p;
            out += if s >= d.p { s - d.p } else { s } * place;
            place *= d.p;
            x /= d.p;
            y /= d.p;
        }
        Elem(out)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let d = &*self.0;
        if d.p == 2 || a.0 == 0 {
            return a;
        }
        if d.m == 1 {
            return Elem(d.p - a.0);
        }
        let mut x = a.0;
        let (mut out, mut place) = (0u32, 1u32);
        while x > 0 {
            let c = x % d.p;
            out += if c == 0 { 0 } else { d.p - c } * place;
            place *= d.p;
            x /= d.p;
        }
        Elem(out)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let d = &*self.0;
        Elem(d.exp[(d.log[a.0 as usize] + d.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let d = &*self.0;
        let n = d.q - 1;
        Ok(Elem(d.exp[((n - d.log[a.0 as usize]) % n) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        let d = &*self.0;
        let n = (d.q - 1) as u64;
        let l = d.log[a.0 as usize] as u64 * (e % n) % n;
        Elem(d.exp[l as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: Elem) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let n = (self.0.q - 1) as u64;
        let mut ord = n;
        for l in prime_factors(n) {
            while ord.is_multiple_of(l) && self.pow(a, ord / l) == Elem::ONE {
                ord /= l;
            }
        }
        Ok(ord)
    }

    /// The multiplicative generator with the smallest code.
    pub fn generator(&self) -> Elem {
        Elem(self.0.generator)
    }

    pub fn is_square(&self, a: Elem) -> bool {
        self.sqrt(a).is_some()
    }

    /// Square root with the smaller code, or `None` for a non-square.
    pub fn sqrt(&self, a: Elem) -> Option<Elem> {
        let d = &*self.0;
        if a.0 == 0 {
            return Some(Elem::ZERO);
        }
        if d.p == 2 {
            return Some(self.pow(a, (d.q / 2) as u64));
        }
        if let Some(table) = &d.sqrt_table {
            let r = table[a.0 as usize];
            return (r != u32::MAX).then_some(Elem(r));
        }
        let r = self.tonelli_shanks(a)?;
        let s = self.neg(r);
        Some(if s.0 < r.0 { s } else { r })
    }

    fn tonelli_shanks(&self, a: Elem) -> Option<Elem> {
        let n = (self.0.q - 1) as u64;
        if self.pow(a, n / 2) != Elem::ONE {
            return None;
        }
        let mut s = 0u32;
        let mut t = n;
        while t.is_multiple_of(2) {
            t /= 2;
            s += 1;
        }
        // The generator is a non-residue.
        let mut c = self.pow(self.generator(), t);
        let mut x = self.pow(a, t.div_ceil(2));
        let mut b = self.pow(a, t);
        let mut m = s;
        while b != Elem::ONE {
            let mut i = 0u32;
            let mut bb = b;
            while bb != Elem::ONE {
                bb = self.mul(bb, bb);
                i += 1;
            }
            let mut f = c;
            for _ in 0..(m - i - 1) {
                f = self.mul(f, f);
            }
            x = self.mul(x, f);
            c = self.mul(f, f);
            b = self.mul(b, c);
            m = i;
        }
        Some(x)
    }

    /// Relative trace `Tr_r^m(a) = a + a^{p^r} + ... + a^{p^{m-r}}`, returned
    /// inside GF(p^m).
    pub fn trace(&self, a: Elem, r: u32) -> Result<Elem> {
        let m = self.0.m;
        if r == 0 || !m.is_multiple_of(r) {
            return Err(Error::NotADivisor { r, m });
        }
        let step = (self.0.p as u64).pow(r);
        let mut acc = Elem::ZERO;
        let mut x = a;
        for _ in 0..m / r {
            acc = self.add(acc, x);
            x = self.pow(x, step);
        }
        Ok(acc)
    }

    /// Whether `a` lies in the subfield GF(p^d).
    pub fn in_subfield(&self, a: Elem, d: u32) -> bool {
        self.pow(a, (self.0.p as u64).pow(d)) == a
    }

    pub fn sum<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(Elem::ZERO, |acc, x| self.add(acc, x))
    }

    pub fn product<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(Elem::ONE, |acc, x| self.mul(acc, x))
    }

    /// Reference multiplication by polynomial arithmetic mod the modulus.
    pub fn mul_by_polynomials(&self, a: Elem, b: Elem) -> Elem {
        Elem(slow_mul(a.0, b.0, self.0.p, self.0.m, &self.0.modulus))
    }
}
