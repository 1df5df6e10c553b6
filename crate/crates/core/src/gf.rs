//! Arithmetic in GF(p) and GF(p^e), and the fixed total order on field
//! elements and vectors.
//!
//! An element is stored as its integer representative in `[0, q)`: the
//! base-`p` digits are the coefficients of the polynomial representative,
//! least significant first. Multiplication runs through log/antilog tables
//! built once per field from polynomial arithmetic modulo the modulus.
//!
//! The element order satisfies `0 < 1 < x` for every other `x`. By default
//! the remaining elements follow their integer representative; any other
//! admissible ranking can be installed with [`Field::with_order`].

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// An element of a finite field, identified by its integer representative.
///
/// The derived `Ord` is the storage order on representatives. The field's
/// element order lives on [`Field::elem_cmp`].
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn rep(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A vector in `F_q^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct FieldVector(Vec<FieldElement>);

impl FieldVector {
    pub fn new(coords: Vec<FieldElement>) -> Self {
        FieldVector(coords)
    }

    pub fn zero(n: usize) -> Self {
        FieldVector(vec![FieldElement::ZERO; n])
    }

    /// The `i`-th standard basis vector (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = FieldElement::ONE;
        v
    }

    pub fn from_reps(reps: &[u32]) -> Self {
        FieldVector(reps.iter().map(|&r| FieldElement(r)).collect())
    }

    pub fn reps(&self) -> Vec<u32> {
        self.0.iter().map(|e| e.0).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|e| e.is_zero())
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.0
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [FieldElement] {
        &mut self.0
    }

    /// Index of the first nonzero coordinate.
    pub fn leading_index(&self) -> Option<usize> {
        self.0.iter().position(|e| !e.is_zero())
    }
}

impl fmt::Display for FieldVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", e.0)?;
        }
        Ok(())
    }
}

struct FieldInner {
    p: u32,
    e: u32,
    q: u32,
    /// Monic modulus coefficients, constant term first, length `e + 1`.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `rank[rep]` is the position of `rep` in the element order.
    rank: Vec<u32>,
}

/// A validated finite field `GF(p^e)` together with its element order.
///
/// Cheap to clone; all clones share the same tables.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.e == other.0.e
                && self.0.modulus == other.0.modulus
                && self.0.rank == other.0.rank)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({self})")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.e == 1 {
            write!(f, "gf({})", self.0.p)
        } else {
            write!(
                f,
                "gf({}^{}):{}",
                self.0.p,
                self.0.e,
                format_poly(&self.0.modulus, 'x')
            )
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn poly_degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    // p is prime and small; Fermat.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    result as u32
}

/// Remainder of `a` divided by `b` over GF(p). `b` must be nonzero.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let db = poly_degree(b).expect("nonzero divisor");
    let lead_inv = inv_mod_p(b[db], p);
    while let Some(dr) = poly_degree(&r) {
        if dr < db {
            break;
        }
        let factor = (r[dr] as u64 * lead_inv as u64 % p as u64) as u32;
        let shift = dr - db;
        for (i, &c) in b.iter().enumerate().take(db + 1) {
            let sub = (factor as u64 * c as u64 % p as u64) as u32;
            r[i + shift] = (r[i + shift] + p - sub) % p;
        }
    }
    r.truncate(db.max(1));
    r
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = poly_degree(modulus).unwrap_or(0);
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor = vec![0u32; d + 1];
            let mut x = idx;
            for c in divisor.iter_mut().take(d) {
                *c = (x % p as u64) as u32;
                x /= p as u64;
            }
            divisor[d] = 1;
            if poly_rem(modulus, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, &[0, 1])
    }

    /// `GF(p^e)` with the given monic modulus, coefficients constant term
    /// first. For `e = 1` the modulus is ignored.
    pub fn new(p: u32, e: u32, modulus: &[u32]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if e == 0 {
            return Err(Error::BadModulus(
                "extension degree must be positive".into(),
            ));
        }
        let q = (p as u64).checked_pow(e).filter(|&q| q <= MAX_ORDER as u64);
        let q = match q {
            Some(q) => q as u32,
            None => return Err(Error::UnsupportedSize { p, e }),
        };
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            let m: Vec<u32> = modulus.to_vec();
            if m.iter().any(|&c| c >= p) {
                return Err(Error::BadModulus(format!(
                    "coefficients must lie in [0, {p})"
                )));
            }
            match poly_degree(&m) {
                Some(d) if d == e as usize => {}
                d => {
                    return Err(Error::BadModulus(format!(
                        "expected degree {e}, got {}",
                        d.map_or("-inf".to_string(), |d| d.to_string())
                    )))
                }
            }
            let mut m = m;
            m.truncate(e as usize + 1);
            if m[e as usize] != 1 {
                return Err(Error::BadModulus("modulus must be monic".into()));
            }
            if !is_irreducible(&m, p) {
                return Err(Error::ReducibleModulus {
                    modulus: format_poly(&m, 'x'),
                    p,
                });
            }
            m
        };
        let mut inner = FieldInner {
            p,
            e,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            rank: (0..q).collect(),
        };
        build_log_tables(&mut inner);
        Ok(Field(Arc::new(inner)))
    }

    /// Same field, with the element order given by `ascending`, a list of
    /// all representatives from smallest to largest. It must start with
    /// `0, 1`.
    pub fn with_order(&self, ascending: &[u32]) -> Result<Field> {
        let q = self.0.q;
        if ascending.len() != q as usize {
            return Err(Error::DimensionMismatch {
                expected: q as usize,
                got: ascending.len(),
            });
        }
        if q >= 2 && (ascending[0] != 0 || ascending[1] != 1) {
            return Err(Error::BadModulus(
                "element order must start with 0, 1".into(),
            ));
        }
        let mut rank = vec![u32::MAX; q as usize];
        for (pos, &rep) in ascending.iter().enumerate() {
            if rep >= q {
                return Err(Error::FieldMismatch { rep, q });
            }
            if rank[rep as usize] != u32::MAX {
                return Err(Error::BadModulus(format!(
                    "element {rep} repeated in order"
                )));
            }
            rank[rep as usize] = pos as u32;
        }
        let inner = FieldInner {
            p: self.0.p,
            e: self.0.e,
            q,
            modulus: self.0.modulus.clone(),
            exp: self.0.exp.clone(),
            log: self.0.log.clone(),
            rank,
        };
        Ok(Field(Arc::new(inner)))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.e
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn has_default_order(&self) -> bool {
        self.0.rank.iter().enumerate().all(|(i, &r)| i as u32 == r)
    }

    /// Validates a representative.
    pub fn elem(&self, rep: u32) -> Result<FieldElement> {
        if rep < self.0.q {
            Ok(FieldElement(rep))
        } else {
            Err(Error::FieldMismatch { rep, q: self.0.q })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.0.q).map(FieldElement)
    }

    fn check(&self, a: FieldElement) -> Result<()> {
        self.elem(a.0).map(|_| ())
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_raw(a, b))
    }

    pub fn neg(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        Ok(self.neg_raw(a))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub_raw(a, b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_raw(a, b))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv_raw(a))
    }

    /// Element order: `0 < 1 < everything else`.
    pub fn elem_cmp(&self, a: FieldElement, b: FieldElement) -> Result<Ordering> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.elem_cmp_raw(a, b))
    }

    /// Lexicographic extension of the element order; the first differing
    /// coordinate decides.
    pub fn vec_cmp(&self, u: &FieldVector, v: &FieldVector) -> Result<Ordering> {
        if u.len() != v.len() {
            return Err(Error::DimensionMismatch {
                expected: u.len(),
                got: v.len(),
            });
        }
        for &c in u.coords().iter().chain(v.coords()) {
            self.check(c)?;
        }
        Ok(self.vec_cmp_raw(u, v))
    }

    pub(crate) fn add_raw(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.0.p;
        if p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if self.0.e == 1 {
            return FieldElement((a.0 + b.0) % p);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        FieldElement(out)
    }

    pub(crate) fn neg_raw(&self, a: FieldElement) -> FieldElement {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        FieldElement(out)
    }

    pub(crate) fn sub_raw(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add_raw(a, self.neg_raw(b))
    }

    pub(crate) fn mul_raw(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let n = self.0.q - 1;
        let s = (self.0.log[a.0 as usize] + self.0.log[b.0 as usize]) % n;
        FieldElement(self.0.exp[s as usize])
    }

    pub(crate) fn inv_raw(&self, a: FieldElement) -> FieldElement {
        let n = self.0.q - 1;
        let l = self.0.log[a.0 as usize];
        FieldElement(self.0.exp[((n - l) % n) as usize])
    }

    pub(crate) fn elem_cmp_raw(&self, a: FieldElement, b: FieldElement) -> Ordering {
        self.0.rank[a.0 as usize].cmp(&self.0.rank[b.0 as usize])
    }

    pub(crate) fn vec_cmp_raw(&self, u: &FieldVector, v: &FieldVector) -> Ordering {
        for (&a, &b) in u.coords().iter().zip(v.coords()) {
            if a != b {
                return self.elem_cmp_raw(a, b);
            }
        }
        Ordering::Equal
    }

    /// Multiplication by schoolbook polynomial product and reduction. Slow;
    /// used to build the tables and as an independent check on them.
    pub fn mul_by_polynomial(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        poly_mul_mod(&self.0, a.0, b.0)
    }

    /// Coefficients of the polynomial representative, constant term first.
    pub fn to_coeffs(&self, a: FieldElement) -> Vec<u32> {
        to_digits(a.0, self.0.p, self.0.e)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        let p = self.0.p;
        let e = self.0.e as usize;
        // reduce modulo the modulus so callers may pass higher-degree
        // representatives
        let mut c: Vec<u32> = coeffs.iter().map(|&x| x % p).collect();
        if c.len() > e {
            c = poly_rem(&c, &self.0.modulus, p);
        }
        c.resize(e, 0);
        Ok(FieldElement(from_digits(&c, p)))
    }

    /// Parses either an integer representative or a polynomial in `var`.
    pub fn parse_elem(&self, s: &str, var: char) -> Result<FieldElement> {
        let s = s.trim();
        if !s.is_empty() && s.chars().all(|c| c.is_ascii_digit()) {
            let rep: u32 = s
                .parse()
                .map_err(|_| Error::parse(0, format!("bad element {s:?}")))?;
            return self.elem(rep);
        }
        let coeffs = parse_poly(s, var, self.0.p)?;
        self.from_coeffs(&coeffs)
    }

    pub fn format_elem(&self, a: FieldElement, var: char) -> String {
        format_poly(&self.to_coeffs(a), var)
    }

    /// Parses `gf(p)`, `gf(p^e):<modulus>` (modulus in `x`).
    pub fn parse(spec: &str) -> Result<Field> {
        let spec = spec.trim();
        let bad = |m: &str| Error::parse(0, format!("field spec {spec:?}: {m}"));
        let rest = spec
            .strip_prefix("gf(")
            .or_else(|| spec.strip_prefix("GF("))
            .ok_or_else(|| bad("expected gf(...)"))?;
        let close = rest.find(')').ok_or_else(|| bad("missing ')'"))?;
        let inside = &rest[..close];
        let after = rest[close + 1..].trim();
        let (p, e) = match inside.split_once('^') {
            Some((p, e)) => (
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| bad("bad characteristic"))?,
                e.trim().parse::<u32>().map_err(|_| bad("bad exponent"))?,
            ),
            None => (
                inside.trim().parse::<u32>().map_err(|_| bad("bad order"))?,
                1,
            ),
        };
        if e == 1 {
            if !after.is_empty() {
                return Err(bad("prime fields take no modulus"));
            }
            return Field::prime(p);
        }
        let modulus = after
            .strip_prefix(':')
            .ok_or_else(|| bad("extension fields need ':<modulus>'"))?;
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        let var = modulus
            .chars()
            .find(|c| c.is_ascii_alphabetic())
            .unwrap_or('x');
        let coeffs = parse_poly(modulus, var, p)?;
        Field::new(p, e, &coeffs)
    }
}

fn to_digits(mut x: u32, p: u32, e: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(e as usize);
    for _ in 0..e {
        out.push(x % p);
        x /= p;
    }
    out
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn poly_mul_mod(f: &FieldInner, a: u32, b: u32) -> FieldElement {
    let p = f.p;
    let da = to_digits(a, p, f.e);
    let db = to_digits(b, p, f.e);
    let mut prod = vec![0u32; 2 * f.e as usize];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut r = poly_rem(&prod, &f.modulus, p);
    r.resize(f.e as usize, 0);
    FieldElement(from_digits(&r, p))
}

fn build_log_tables(f: &mut FieldInner) {
    let q = f.q;
    let n = q - 1;
    let mut exp = vec![0u32; n as usize];
    let mut log = vec![0u32; q as usize];
    if q == 2 {
        exp[0] = 1;
        f.exp = exp;
        f.log = log;
        return;
    }
    for g in 2..q {
        let mut x = 1u32;
        let mut ok = true;
        for (i, slot) in exp.iter_mut().enumerate() {
            if i > 0 && x == 1 {
                ok = false;
                break;
            }
            *slot = x;
            x = poly_mul_mod(f, x, g).0;
        }
        if ok && x == 1 {
            for (i, &v) in exp.iter().enumerate() {
                log[v as usize] = i as u32;
            }
            f.exp = exp;
            f.log = log;
            return;
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic");
}

/// Formats coefficients (constant term first) as e.g. `x^4+x+1`.
pub fn format_poly(coeffs: &[u32], var: char) -> String {
    let mut terms = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let t = match (k, c) {
            (0, c) => c.to_string(),
            (1, 1) => var.to_string(),
            (1, c) => format!("{c}*{var}"),
            (k, 1) => format!("{var}^{k}"),
            (k, c) => format!("{c}*{var}^{k}"),
        };
        terms.push(t);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Parses a sum of terms `c`, `var`, `var^k`, `c*var^k` (also `c var^k`)
/// into coefficients mod `p`, constant term first.
pub fn parse_poly(s: &str, var: char, p: u32) -> Result<Vec<u32>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::parse(0, "empty polynomial"));
    }
    let bad = |m: String| Error::parse(0, format!("polynomial {s:?}: {m}"));
    let mut coeffs: Vec<u32> = Vec::new();
    for term in compact.split('+') {
        if term.is_empty() {
            return Err(bad("empty term".into()));
        }
        let (coef, power) = match term.find(var) {
            None => (
                term.parse::<u64>()
                    .map_err(|_| bad(format!("bad term {term:?}")))?,
                0usize,
            ),
            Some(pos) => {
                let c = term[..pos].trim_end_matches('*');
                let c = if c.is_empty() {
                    1
                } else {
                    c.parse::<u64>()
                        .map_err(|_| bad(format!("bad coefficient in {term:?}")))?
                };
                let tail = &term[pos + var.len_utf8()..];
                let k = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| bad(format!("bad exponent in {term:?}")))?
                };
                (c, k)
            }
        };
        if power > 64 {
            return Err(bad("exponent too large".into()));
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] = ((coeffs[power] as u64 + coef) % p as u64) as u32;
    }
    Ok(coeffs)
}
