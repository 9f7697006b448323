//! Arithmetic in the small finite fields the constructions need: GF(4), GF(9),
//! GF(25) and prime fields GF(p).
//!
//! Elements are plain integer indices `0..q`. For the extension fields an index
//! encodes a base-p digit vector: in GF(9) the value `3a+b` is the pair `(a,b)`,
//! in GF(25) the value `5a+b`. Addition is componentwise mod p; multiplication
//! goes through power/log tables of a fixed primitive element, so the element
//! numbering matches the published code tables exactly.

use thiserror::Error;

/// Sentinel stored in the log table at index 0 (log of zero is undefined).
const NO_LOG: u8 = u8::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("unsupported field order {0} (supported: 4, 9, 25 and primes)")]
    UnsupportedOrder(u16),
    #[error("3 does not divide q-1 = {0}, no cube root of unity")]
    NoCubeRoot(u16),
}

/// A small finite field GF(q) with element indices `0..q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    q: u8,
    p: u8,
    degree: u8,
    /// pw[i] is the i-th power of the chosen primitive element; pw[0] = 1.
    pw: Vec<u8>,
    /// lg[pw[i]] = i; lg[0] is the NO_LOG sentinel.
    lg: Vec<u8>,
}

/// GF(9) powers of the primitive element 4, in the element numbering the
/// published code tables use.
const GF9_PW: [u8; 8] = [1, 4, 6, 7, 2, 8, 3, 5];

/// Multiplication by the GF(25) primitive element alpha = (1,0) = 5.
/// With alpha a root of x^2 + 4x + 2, alpha * (a,b) = ((a+b) mod 5, 3a mod 5).
fn gf25_mul_alpha(x: u8) -> u8 {
    let a = x / 5;
    let b = x % 5;
    5 * ((a + b) % 5) + (3 * a) % 5
}

impl Field {
    /// Builds GF(q) for q in {4, 9, 25} or q prime.
    pub fn new(q: u16) -> Result<Field, FieldError> {
        match q {
            4 => Ok(Field::from_pw(4, 2, 2, vec![1, 2, 3])),
            9 => Ok(Field::from_pw(9, 3, 2, GF9_PW.to_vec())),
            25 => {
                let mut pw = Vec::with_capacity(24);
                let mut x = 1u8;
                for _ in 0..24 {
                    pw.push(x);
                    x = gf25_mul_alpha(x);
                }
                Ok(Field::from_pw(25, 5, 2, pw))
            }
            p if is_prime(p) => {
                let p = p as u8;
                let g = smallest_primitive_root(p);
                let mut pw = Vec::with_capacity(p as usize - 1);
                let mut x = 1u8;
                for _ in 0..p - 1 {
                    pw.push(x);
                    x = ((x as u16 * g as u16) % p as u16) as u8;
                }
                Ok(Field::from_pw(p, p, 1, pw))
            }
            _ => Err(FieldError::UnsupportedOrder(q)),
        }
    }

    fn from_pw(q: u8, p: u8, degree: u8, pw: Vec<u8>) -> Field {
        debug_assert_eq!(pw.len(), q as usize - 1);
        let mut lg = vec![NO_LOG; q as usize];
        for (i, &x) in pw.iter().enumerate() {
            debug_assert_eq!(lg[x as usize], NO_LOG, "pw table is not a permutation");
            lg[x as usize] = i as u8;
        }
        Field { q, p, degree, pw, lg }
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn characteristic(&self) -> u8 {
        self.p
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    /// Powers of the primitive element; `pw()[0] == 1`.
    pub fn pw(&self) -> &[u8] {
        &self.pw
    }

    /// Log table; `lg()[x]` is defined for x != 0.
    pub fn lg(&self) -> &[u8] {
        &self.lg
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q
    }

    fn check(&self, x: u8) {
        assert!(x < self.q, "element {x} out of range for GF({})", self.q);
    }

    /// Componentwise mod-p addition of base-p digit vectors.
    pub fn add(&self, u: u8, v: u8) -> u8 {
        self.check(u);
        self.check(v);
        let p = self.p;
        if self.degree == 1 {
            (u + v) % p
        } else {
            p * ((u / p + v / p) % p) + (u % p + v % p) % p
        }
    }

    pub fn neg(&self, v: u8) -> u8 {
        self.check(v);
        let p = self.p;
        if self.degree == 1 {
            (p - v) % p
        } else {
            p * ((p - v / p) % p) + (p - v % p) % p
        }
    }

    pub fn sub(&self, u: u8, v: u8) -> u8 {
        self.add(u, self.neg(v))
    }

    /// 0 if either operand is 0, else `pw[(lg u + lg v) mod (q-1)]`.
    /// Prime fields use plain modular arithmetic.
    pub fn mul(&self, u: u8, v: u8) -> u8 {
        self.check(u);
        self.check(v);
        if u == 0 || v == 0 {
            return 0;
        }
        if self.degree == 1 {
            ((u as u16 * v as u16) % self.p as u16) as u8
        } else {
            let n = self.q as u16 - 1;
            self.pw[((self.lg[u as usize] as u16 + self.lg[v as usize] as u16) % n) as usize]
        }
    }

    /// Multiplicative inverse of a nonzero element.
    ///
    /// # Panics
    /// Panics on v = 0.
    pub fn inv(&self, v: u8) -> u8 {
        self.check(v);
        assert!(v != 0, "inverse of zero");
        let n = self.q as usize - 1;
        self.pw[(n - self.lg[v as usize] as usize) % n]
    }

    pub fn div(&self, u: u8, v: u8) -> u8 {
        self.mul(u, self.inv(v))
    }

    pub fn pow(&self, v: u8, n: u32) -> u8 {
        let mut acc = 1;
        for _ in 0..n {
            acc = self.mul(acc, v);
        }
        acc
    }

    /// The two nonunit cube roots of 1 as (alpha, alpha^2), taking the
    /// smaller index as alpha. Errors unless 3 | q-1.
    pub fn cube_roots_of_unity(&self) -> Result<(u8, u8), FieldError> {
        let n = self.q as u16 - 1;
        if !n.is_multiple_of(3) {
            return Err(FieldError::NoCubeRoot(self.q as u16));
        }
        let x = self.pw[(n / 3) as usize];
        let y = self.mul(x, x);
        let alpha = x.min(y);
        Ok((alpha, self.mul(alpha, alpha)))
    }
}

fn is_prime(n: u16) -> bool {
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

fn smallest_primitive_root(p: u8) -> u8 {
    if p == 2 {
        return 1;
    }
    'outer: for g in 2..p {
        let mut x = 1u16;
        for k in 1..p as u16 - 1 {
            x = (x * g as u16) % p as u16;
            if x == 1 && k < p as u16 - 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("no primitive root found for prime {p}")
}
