//! Exact scalar arithmetic over the rationals, prime fields and simple
//! extensions `k[t]/(m(t))`, together with the embeddings along extensions.
//!
//! A [`Field`] is a cheap handle (reference-counted) describing one of the
//! three supported field kinds. Elements are stored as raw [`Value`]s and all
//! arithmetic is dispatched through the field handle; [`Scalar`] bundles the
//! two for the public API. All representations are canonical, so equality is
//! plain structural comparison.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Raw element data. Interpretation depends on the owning [`Field`]:
/// rationals are kept reduced with positive denominator, prime-field residues
/// lie in `[0, p)`, and extension elements are coefficient vectors of length
/// `d` on the power basis `1, t, ..., t^{d-1}`, entries reduced in the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Rat(BigRational),
    Mod(u64),
    Ext(Vec<Value>),
}

#[derive(Debug, PartialEq, Eq)]
enum FieldRepr {
    Rationals,
    Prime(u64),
    Extension {
        base: Field,
        /// Monic minimal polynomial, ascending coefficients, length `d + 1`.
        min_poly: Vec<Value>,
    },
}

/// A field specification: `Q`, `F_p`, or a simple extension of one of those.
#[derive(Clone)]
pub struct Field(Arc<FieldRepr>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({self})")
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn rationals() -> Field {
        Field(Arc::new(FieldRepr::Rationals))
    }

    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::BadParams(format!("{p} is not prime")));
        }
        Ok(Field(Arc::new(FieldRepr::Prime(p))))
    }

    /// Builds `base[t]/(m(t))` from ascending coefficients of a monic `m`.
    ///
    /// The base must itself be `Q` or `F_p` (no towers), `m` must be monic of
    /// degree at least 2, and irreducibility is verified: root search over
    /// `F_p`, rational-root plus degree check over `Q` (degrees above 3 over
    /// `Q` are rejected as unsupported).
    pub fn extension(base: &Field, min_poly: &[Scalar]) -> Result<Field> {
        if base.degree() != 1 {
            return Err(Error::Unsupported(
                "nested extensions are not supported; extend Q or F_p directly".into(),
            ));
        }
        if min_poly.len() < 3 {
            return Err(Error::BadParams(
                "minimal polynomial must have degree at least 2".into(),
            ));
        }
        let mut coeffs = Vec::with_capacity(min_poly.len());
        for s in min_poly {
            if s.field() != base {
                return Err(Error::FieldMismatch(
                    s.field().to_string(),
                    base.to_string(),
                ));
            }
            coeffs.push(s.value.clone());
        }
        if coeffs.last().map(|c| !base.is_one(c)).unwrap_or(true) {
            return Err(Error::BadParams("minimal polynomial must be monic".into()));
        }
        base.check_irreducible(&coeffs)?;
        Ok(Field(Arc::new(FieldRepr::Extension {
            base: base.clone(),
            min_poly: coeffs,
        })))
    }

    pub fn is_rationals(&self) -> bool {
        matches!(&*self.0, FieldRepr::Rationals)
    }

    /// The prime modulus for `F_p` (not for extensions of it).
    pub fn prime_modulus(&self) -> Option<u64> {
        match &*self.0 {
            FieldRepr::Prime(p) => Some(*p),
            _ => None,
        }
    }

    /// Base field and monic minimal polynomial of a simple extension.
    pub fn extension_parts(&self) -> Option<(&Field, &[Value])> {
        match &*self.0 {
            FieldRepr::Extension { base, min_poly } => Some((base, min_poly)),
            _ => None,
        }
    }

    /// Characteristic: 0 for `Q` and its extensions, `p` otherwise.
    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            FieldRepr::Rationals => 0,
            FieldRepr::Prime(p) => *p,
            FieldRepr::Extension { base, .. } => base.characteristic(),
        }
    }

    /// Extension degree over the base (1 for `Q` and `F_p` themselves).
    pub fn degree(&self) -> usize {
        match &*self.0 {
            FieldRepr::Extension { min_poly, .. } => min_poly.len() - 1,
            _ => 1,
        }
    }

    /// The base field (self for `Q` and `F_p`).
    pub fn base_field(&self) -> Field {
        match &*self.0 {
            FieldRepr::Extension { base, .. } => base.clone(),
            _ => self.clone(),
        }
    }

    // ---- element construction ----

    pub fn zero(&self) -> Value {
        match &*self.0 {
            FieldRepr::Rationals => Value::Rat(BigRational::zero()),
            FieldRepr::Prime(_) => Value::Mod(0),
            FieldRepr::Extension { base, min_poly } => {
                Value::Ext(vec![base.zero(); min_poly.len() - 1])
            }
        }
    }

    pub fn one(&self) -> Value {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Value {
        match &*self.0 {
            FieldRepr::Rationals => Value::Rat(BigRational::from(BigInt::from(n))),
            FieldRepr::Prime(p) => Value::Mod(n.rem_euclid(*p as i64) as u64),
            FieldRepr::Extension { base, min_poly } => {
                let mut v = vec![base.zero(); min_poly.len() - 1];
                v[0] = base.from_i64(n);
                Value::Ext(v)
            }
        }
    }

    pub fn from_ratio(&self, n: i64, d: i64) -> Result<Value> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        let num = self.from_i64(n);
        let den = self.from_i64(d);
        self.div(&num, &den)
    }

    pub fn is_zero(&self, v: &Value) -> bool {
        match v {
            Value::Rat(r) => r.is_zero(),
            Value::Mod(m) => *m == 0,
            Value::Ext(c) => {
                let base = self.base_field();
                c.iter().all(|x| base.is_zero(x))
            }
        }
    }

    pub fn is_one(&self, v: &Value) -> bool {
        *v == self.one()
    }

    // ---- arithmetic ----

    pub fn add(&self, a: &Value, b: &Value) -> Value {
        match (&*self.0, a, b) {
            (FieldRepr::Rationals, Value::Rat(x), Value::Rat(y)) => Value::Rat(x + y),
            (FieldRepr::Prime(p), Value::Mod(x), Value::Mod(y)) => Value::Mod((x + y) % p),
            (FieldRepr::Extension { base, .. }, Value::Ext(x), Value::Ext(y)) => Value::Ext(
                x.iter()
                    .zip(y.iter())
                    .map(|(u, v)| base.add(u, v))
                    .collect(),
            ),
            _ => unreachable!("value does not belong to field {self}"),
        }
    }

    pub fn sub(&self, a: &Value, b: &Value) -> Value {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Value) -> Value {
        match (&*self.0, a) {
            (FieldRepr::Rationals, Value::Rat(x)) => Value::Rat(-x),
            (FieldRepr::Prime(p), Value::Mod(x)) => Value::Mod(if *x == 0 { 0 } else { p - x }),
            (FieldRepr::Extension { base, .. }, Value::Ext(x)) => {
                Value::Ext(x.iter().map(|u| base.neg(u)).collect())
            }
            _ => unreachable!("value does not belong to field {self}"),
        }
    }

    pub fn mul(&self, a: &Value, b: &Value) -> Value {
        match (&*self.0, a, b) {
            (FieldRepr::Rationals, Value::Rat(x), Value::Rat(y)) => Value::Rat(x * y),
            (FieldRepr::Prime(p), Value::Mod(x), Value::Mod(y)) => {
                Value::Mod((*x as u128 * *y as u128 % *p as u128) as u64)
            }
            (FieldRepr::Extension { base, min_poly }, Value::Ext(x), Value::Ext(y)) => {
                let prod = poly_mul(base, x, y);
                Value::Ext(ext_reduce(base, min_poly, prod))
            }
            _ => unreachable!("value does not belong to field {self}"),
        }
    }

    pub fn inv(&self, a: &Value) -> Result<Value> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match (&*self.0, a) {
            (FieldRepr::Rationals, Value::Rat(x)) => Value::Rat(x.recip()),
            (FieldRepr::Prime(p), Value::Mod(x)) => Value::Mod(mod_inv(*x, *p)),
            (FieldRepr::Extension { base, min_poly }, Value::Ext(x)) => {
                // extended Euclid: u * x + v * m = gcd = nonzero constant
                let (g, u, _) = poly_ext_gcd(base, x, min_poly);
                debug_assert_eq!(poly_degree(base, &g), Some(0));
                let ginv = base.inv(&g[0])?;
                let scaled: Vec<Value> = u.iter().map(|c| base.mul(c, &ginv)).collect();
                Value::Ext(ext_reduce(base, min_poly, scaled))
            }
            _ => unreachable!("value does not belong to field {self}"),
        })
    }

    pub fn div(&self, a: &Value, b: &Value) -> Result<Value> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Embeds a base-field value as a constant of this extension.
    pub fn embed(&self, base_value: &Value) -> Value {
        match &*self.0 {
            FieldRepr::Extension { base, min_poly } => {
                let mut v = vec![base.zero(); min_poly.len() - 1];
                v[0] = base_value.clone();
                Value::Ext(v)
            }
            _ => base_value.clone(),
        }
    }

    /// Generator `t` of a simple extension.
    pub fn generator(&self) -> Result<Value> {
        match &*self.0 {
            FieldRepr::Extension { base, min_poly } => {
                let mut v = vec![base.zero(); min_poly.len() - 1];
                v[1] = base.one();
                Ok(Value::Ext(v))
            }
            _ => Err(Error::Unsupported("base fields have no generator".into())),
        }
    }

    pub fn scalar(&self, v: Value) -> Scalar {
        debug_assert!(self.owns(&v), "value does not belong to field {self}");
        Scalar {
            field: self.clone(),
            value: v,
        }
    }

    pub fn scalar_from_i64(&self, n: i64) -> Scalar {
        self.scalar(self.from_i64(n))
    }

    fn owns(&self, v: &Value) -> bool {
        match (&*self.0, v) {
            (FieldRepr::Rationals, Value::Rat(_)) => true,
            (FieldRepr::Prime(p), Value::Mod(m)) => m < p,
            (FieldRepr::Extension { base, min_poly }, Value::Ext(c)) => {
                c.len() == min_poly.len() - 1 && c.iter().all(|x| base.owns(x))
            }
            _ => false,
        }
    }

    // ---- irreducibility ----

    fn check_irreducible(&self, poly: &[Value]) -> Result<()> {
        let deg = poly.len() - 1;
        match &*self.0 {
            FieldRepr::Prime(p) => {
                // Root search; complete for the degrees (2 and 3) the corpus uses.
                for r in 0..*p {
                    let x = Value::Mod(r);
                    let mut acc = self.zero();
                    for c in poly.iter().rev() {
                        acc = self.add(&self.mul(&acc, &x), c);
                    }
                    if self.is_zero(&acc) {
                        return Err(Error::BadParams(format!(
                            "minimal polynomial has root {r} over F{p}"
                        )));
                    }
                }
                Ok(())
            }
            FieldRepr::Rationals => {
                if deg > 3 {
                    return Err(Error::Unsupported(
                        "extensions of Q of degree above 3 are not supported".into(),
                    ));
                }
                if rational_root_exists(poly)? {
                    return Err(Error::BadParams(
                        "minimal polynomial has a rational root".into(),
                    ));
                }
                // Degree 2 or 3 without rational roots is irreducible over Q.
                Ok(())
            }
            FieldRepr::Extension { .. } => unreachable!("towers rejected earlier"),
        }
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut result: u128 = 1;
    let mut base = a as u128;
    let mut e = p - 2;
    let m = p as u128;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    result as u64
}

fn rational_root_exists(poly: &[Value]) -> Result<bool> {
    let rat = |v: &Value| match v {
        Value::Rat(r) => r.clone(),
        _ => unreachable!(),
    };
    // Clear denominators to an integer polynomial.
    let mut lcm = BigInt::one();
    for c in poly {
        let d = rat(c).denom().clone();
        let g = num_integer::Integer::gcd(&lcm, &d);
        lcm = lcm / g * d;
    }
    let ints: Vec<BigInt> = poly
        .iter()
        .map(|c| {
            let r = rat(c) * BigRational::from(lcm.clone());
            debug_assert!(r.is_integer());
            r.to_integer()
        })
        .collect();
    if ints[0].is_zero() {
        return Ok(true); // t divides the polynomial
    }
    let small = |n: &BigInt| -> Result<u128> {
        u128::try_from(n.abs()).map_err(|_| {
            Error::Unsupported("minimal polynomial coefficients too large to factor".into())
        })
    };
    let a0 = small(&ints[0])?;
    let ad = small(ints.last().unwrap())?;
    let eval = |x: &BigRational| -> BigRational {
        let mut acc = BigRational::zero();
        for c in ints.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    };
    for p in divisors(a0) {
        for q in divisors(ad) {
            for sign in [1i64, -1] {
                let cand = BigRational::new(BigInt::from(sign) * BigInt::from(p), BigInt::from(q));
                if eval(&cand).is_zero() {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

fn divisors(n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 1u128;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            out.push(n / d);
        }
        d += 1;
    }
    out.sort_unstable();
    out.dedup();
    out
}

// ---- dense polynomial helpers over a base field ----

fn poly_degree(base: &Field, p: &[Value]) -> Option<usize> {
    p.iter().rposition(|c| !base.is_zero(c))
}

fn poly_trim(base: &Field, mut p: Vec<Value>) -> Vec<Value> {
    while p.len() > 1 && base.is_zero(p.last().unwrap()) {
        p.pop();
    }
    p
}

fn poly_mul(base: &Field, a: &[Value], b: &[Value]) -> Vec<Value> {
    if a.is_empty() || b.is_empty() {
        return vec![base.zero()];
    }
    let mut out = vec![base.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if base.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if base.is_zero(y) {
                continue;
            }
            out[i + j] = base.add(&out[i + j], &base.mul(x, y));
        }
    }
    out
}

/// Remainder of `a` modulo `m`, padded to length `deg m`.
fn ext_reduce(base: &Field, min_poly: &[Value], a: Vec<Value>) -> Vec<Value> {
    let d = min_poly.len() - 1;
    let (_, mut r) = poly_divrem(base, a, min_poly);
    r.resize(d, base.zero());
    r
}

fn poly_divrem(base: &Field, a: Vec<Value>, b: &[Value]) -> (Vec<Value>, Vec<Value>) {
    let mut r = poly_trim(base, a);
    let db = poly_degree(base, b).expect("division by zero polynomial");
    let lead_inv = base.inv(&b[db]).expect("nonzero leading coefficient");
    let mut q = vec![base.zero(); r.len().saturating_sub(db) + 1];
    while let Some(dr) = poly_degree(base, &r) {
        if dr < db {
            break;
        }
        let c = base.mul(&r[dr], &lead_inv);
        let shift = dr - db;
        q[shift] = base.add(&q[shift], &c);
        for i in 0..=db {
            let t = base.mul(&c, &b[i]);
            r[shift + i] = base.sub(&r[shift + i], &t);
        }
    }
    (poly_trim(base, q), poly_trim(base, r))
}

/// Returns `(g, u, v)` with `u*a + v*b = g`.
fn poly_ext_gcd(base: &Field, a: &[Value], b: &[Value]) -> (Vec<Value>, Vec<Value>, Vec<Value>) {
    let mut r0 = poly_trim(base, a.to_vec());
    let mut r1 = poly_trim(base, b.to_vec());
    let mut u0 = vec![base.one()];
    let mut u1 = vec![base.zero()];
    let mut v0 = vec![base.zero()];
    let mut v1 = vec![base.one()];
    while poly_degree(base, &r1).is_some() {
        let (q, r) = poly_divrem(base, r0.clone(), &r1);
        let qu = poly_mul(base, &q, &u1);
        let qv = poly_mul(base, &q, &v1);
        let next_u = poly_sub(base, &u0, &qu);
        let next_v = poly_sub(base, &v0, &qv);
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = next_u;
        v0 = v1;
        v1 = next_v;
    }
    (r0, u0, v0)
}

fn poly_sub(base: &Field, a: &[Value], b: &[Value]) -> Vec<Value> {
    let n = a.len().max(b.len());
    let mut out = vec![base.zero(); n];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_else(|| base.zero());
        let y = b.get(i).cloned().unwrap_or_else(|| base.zero());
        *slot = base.sub(&x, &y);
    }
    poly_trim(base, out)
}

// ---- Scalar: field + value, the public element type ----

/// An exact field element tied to its [`Field`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar {
    field: Field,
    value: Value,
}

impl Scalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn into_value(self) -> Value {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.value)
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.field.scalar(self.field.add(&self.value, &other.value)))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.field.scalar(self.field.sub(&self.value, &other.value)))
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self.field.scalar(self.field.mul(&self.value, &other.value)))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self
            .field
            .scalar(self.field.div(&self.value, &other.value)?))
    }

    /// Embedding along a simple extension of this scalar's field.
    pub fn embed(&self, ext: &Field) -> Result<Scalar> {
        match ext.extension_parts() {
            Some((base, _)) if *base == self.field => Ok(ext.scalar(ext.embed(&self.value))),
            _ => Err(Error::FieldMismatch(
                self.field.to_string(),
                ext.to_string(),
            )),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar arithmetic")
            }
        }
    };
}
scalar_binop!(Add, add, try_add);
scalar_binop!(Sub, sub, try_sub);
scalar_binop!(Mul, mul, try_mul);
scalar_binop!(Div, div, try_div);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.field.scalar(self.field.neg(&self.value))
    }
}

// ---- display & parsing ----

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            FieldRepr::Rationals => write!(f, "Q"),
            FieldRepr::Prime(p) => write!(f, "F{p}"),
            FieldRepr::Extension { base, min_poly } => {
                write!(f, "{base}[t]/{}", poly_string(base, min_poly))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.value_string(&self.value))
    }
}

impl Field {
    /// Canonical string for a value of this field. Rationals as `a/b` or `a`,
    /// residues as decimal, extension elements as polynomials in `t`.
    pub fn value_string(&self, v: &Value) -> String {
        match v {
            Value::Rat(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Value::Mod(m) => m.to_string(),
            Value::Ext(coeffs) => poly_string(&self.base_field(), coeffs),
        }
    }

    /// Parses a scalar from its string form; for extension fields this is a
    /// polynomial in `t` which is reduced modulo the minimal polynomial.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let v = match &*self.0 {
            FieldRepr::Rationals | FieldRepr::Prime(_) => self.parse_base_coeff(s)?,
            FieldRepr::Extension { base, min_poly } => {
                let coeffs = parse_poly(base, s)?;
                Value::Ext(ext_reduce(base, min_poly, coeffs))
            }
        };
        Ok(self.scalar(v))
    }

    fn parse_base_coeff(&self, s: &str) -> Result<Value> {
        let bad = |m: &str| Error::Parse {
            path: s.to_string(),
            message: m.to_string(),
        };
        match &*self.0 {
            FieldRepr::Rationals => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let n: BigInt = num.trim().parse().map_err(|_| bad("invalid integer"))?;
                let d: BigInt = den.trim().parse().map_err(|_| bad("invalid denominator"))?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Value::Rat(BigRational::new(n, d)))
            }
            FieldRepr::Prime(p) => {
                if let Some((n, d)) = s.split_once('/') {
                    let nv = self.parse_base_coeff(n)?;
                    let dv = self.parse_base_coeff(d)?;
                    return self.div(&nv, &dv);
                }
                let n: i128 = s.trim().parse().map_err(|_| bad("invalid residue"))?;
                Ok(Value::Mod(n.rem_euclid(*p as i128) as u64))
            }
            FieldRepr::Extension { .. } => unreachable!(),
        }
    }

    /// Parses a field specification string: `Q`, `F<p>`, `F<p>[t]/<poly>`,
    /// `Q[t]/<poly>`.
    pub fn parse(spec: &str) -> Result<Field> {
        let spec = spec.trim();
        let bad = |m: String| Error::Parse {
            path: spec.to_string(),
            message: m,
        };
        if let Some((head, poly)) = spec.split_once("[t]/") {
            let base = Field::parse(head)?;
            let coeffs = parse_poly(&base, poly)?;
            let scalars: Vec<Scalar> = coeffs.into_iter().map(|v| base.scalar(v)).collect();
            return Field::extension(&base, &scalars);
        }
        if spec == "Q" {
            return Ok(Field::rationals());
        }
        if let Some(p) = spec.strip_prefix('F') {
            let p: u64 = p
                .parse()
                .map_err(|_| bad(format!("invalid prime in `{spec}`")))?;
            return Field::prime(p);
        }
        Err(bad(format!("unrecognized field spec `{spec}`")))
    }
}

/// Canonical polynomial string, descending powers, e.g. `t^2+t+1` or `t^2-2`.
fn poly_string(base: &Field, coeffs: &[Value]) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if base.is_zero(c) {
            continue;
        }
        let cs = base.value_string(c);
        let term = match k {
            0 => cs,
            _ => {
                let var = if k == 1 {
                    "t".to_string()
                } else {
                    format!("t^{k}")
                };
                if cs == "1" {
                    var
                } else if cs == "-1" {
                    format!("-{var}")
                } else {
                    format!("{cs}*{var}")
                }
            }
        };
        terms.push(term);
    }
    if terms.is_empty() {
        return "0".into();
    }
    terms.join("+").replace("+-", "-")
}

/// Parses `c_k*t^k` terms joined by `+` (or `-`), ascending result.
fn parse_poly(base: &Field, s: &str) -> Result<Vec<Value>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |m: String| Error::Parse {
        path: s.clone(),
        message: m,
    };
    if s.is_empty() {
        return Err(bad("empty polynomial".into()));
    }
    // Split into signed terms. A leading '-' binds to the first term.
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in s.chars().enumerate() {
        match ch {
            '+' | '-' if i > 0 && !cur.is_empty() => {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            }
            '-' if i == 0 => neg = true,
            _ => cur.push(ch),
        }
    }
    if cur.is_empty() {
        return Err(bad("dangling sign".into()));
    }
    terms.push((neg, cur));

    let mut coeffs: Vec<Value> = vec![base.zero()];
    for (negate, term) in terms {
        let (coeff_str, power) = match term.find('t') {
            None => (term.as_str(), 0usize),
            Some(pos) => {
                let head = &term[..pos];
                let tail = &term[pos + 1..];
                let k = if tail.is_empty() {
                    1
                } else if let Some(exp) = tail.strip_prefix('^') {
                    exp.parse::<usize>()
                        .map_err(|_| bad(format!("bad exponent in `{term}`")))?
                } else {
                    return Err(bad(format!("malformed term `{term}`")));
                };
                let head = head.strip_suffix('*').unwrap_or(head);
                (if head.is_empty() { "1" } else { head }, k)
            }
        };
        let mut c = base.parse_base_coeff(coeff_str)?;
        if negate {
            c = base.neg(&c);
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, base.zero());
        }
        coeffs[power] = base.add(&coeffs[power], &c);
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f4() -> Field {
        Field::parse("F2[t]/t^2+t+1").unwrap()
    }

    fn f25() -> Field {
        Field::parse("F5[t]/t^2+2").unwrap()
    }

    fn qi() -> Field {
        Field::parse("Q[t]/t^2+1").unwrap()
    }

    #[test]
    fn rational_addition_reduces() {
        let q = Field::rationals();
        let a = q.parse_scalar("1/2").unwrap();
        let b = q.parse_scalar("1/3").unwrap();
        assert_eq!((&a + &b).to_string(), "5/6");
    }

    #[test]
    fn prime_field_wraps() {
        let f5 = Field::prime(5).unwrap();
        let a = f5.scalar_from_i64(2);
        let b = f5.scalar_from_i64(4);
        assert_eq!((&a + &b).to_string(), "1");
    }

    #[test]
    fn f4_generator_square() {
        let f = f4();
        let t = f.scalar(f.generator().unwrap());
        assert_eq!((&t * &t).to_string(), "t+1");
    }

    #[test]
    fn division_by_zero_reported() {
        let q = Field::rationals();
        let a = q.scalar_from_i64(1);
        let z = q.scalar_from_i64(0);
        assert_eq!(a.try_div(&z), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_mismatch_reported() {
        let a = Field::rationals().scalar_from_i64(1);
        let b = Field::prime(5).unwrap().scalar_from_i64(1);
        assert!(matches!(a.try_add(&b), Err(Error::FieldMismatch(_, _))));
    }

    #[test]
    fn embeddings_preserve_constants() {
        let f2 = Field::prime(2).unwrap();
        let one = f2.scalar_from_i64(1);
        assert_eq!(one.embed(&f4()).unwrap().to_string(), "1");

        let q = Field::rationals();
        let r = q.parse_scalar("2/3").unwrap();
        assert_eq!(r.embed(&qi()).unwrap().to_string(), "2/3");

        let f5 = Field::prime(5).unwrap();
        let three = f5.scalar_from_i64(3);
        assert_eq!(three.embed(&f25()).unwrap().to_string(), "3");
    }

    #[test]
    fn reducible_polynomials_rejected() {
        assert!(Field::parse("Q[t]/t^2-1").is_err());
        assert!(Field::parse("F5[t]/t^2+1").is_err()); // 2^2 + 1 = 0 mod 5
        assert!(Field::parse("F2[t]/t^2+1").is_err()); // (t+1)^2
        assert!(Field::parse("Q[t]/t^2-2").is_ok());
        assert!(Field::parse("Q[t]/t^3-2").is_ok());
    }

    #[test]
    fn towers_and_high_degrees_rejected() {
        let f4 = f4();
        let one = f4.scalar_from_i64(1);
        let zero = f4.scalar_from_i64(0);
        let err = Field::extension(&f4, &[one.clone(), zero, one]).unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)));
        assert!(matches!(
            Field::parse("Q[t]/t^4+t+1"),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn field_spec_round_trip() {
        for spec in [
            "Q",
            "F5",
            "F2[t]/t^2+t+1",
            "F5[t]/t^2+2",
            "Q[t]/t^2+1",
            "Q[t]/t^2-2",
        ] {
            let f = Field::parse(spec).unwrap();
            assert_eq!(f.to_string(), spec);
            assert_eq!(Field::parse(&f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn scalar_strings_round_trip() {
        let cases = [
            (Field::rationals(), vec!["0", "7", "-3", "5/6", "-2/7"]),
            (Field::prime(5).unwrap(), vec!["0", "1", "4"]),
            (f4(), vec!["0", "1", "t", "t+1"]),
            (qi(), vec!["0", "t", "1/2*t+3", "-t+1/3"]),
        ];
        for (field, strs) in cases {
            for s in strs {
                let sc = field.parse_scalar(s).unwrap();
                assert_eq!(field.parse_scalar(&sc.to_string()).unwrap(), sc);
            }
        }
    }

    fn random_scalar(field: &Field, rng: &mut ChaCha8Rng) -> Scalar {
        match (field.prime_modulus(), field.extension_parts()) {
            (Some(p), _) => field.scalar_from_i64(rng.random_range(0..p) as i64),
            (None, None) => {
                let n = rng.random_range(-9i64..=9);
                let d = rng.random_range(1i64..=9);
                field.scalar(field.from_ratio(n, d).unwrap())
            }
            (None, Some((base, _))) => {
                let d = field.degree();
                let coeffs: Vec<Value> = (0..d)
                    .map(|_| random_scalar(base, rng).into_value())
                    .collect();
                field.scalar(Value::Ext(coeffs))
            }
        }
    }

    #[test]
    fn field_axioms_hold_on_random_triples() {
        for field in [
            Field::rationals(),
            Field::prime(5).unwrap(),
            f4(),
            f25(),
            qi(),
        ] {
            let mut rng = ChaCha8Rng::seed_from_u64(42);
            let one = field.scalar_from_i64(1);
            for _ in 0..1000 {
                let a = random_scalar(&field, &mut rng);
                let b = random_scalar(&field, &mut rng);
                let c = random_scalar(&field, &mut rng);
                assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                assert_eq!(&a + &b, &b + &a);
                assert_eq!(&a * &b, &b * &a);
                assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                assert_eq!(&a - &a, field.scalar_from_i64(0));
                if !a.is_zero() {
                    assert_eq!(&a / &a, one.clone());
                    let inv = &one / &a;
                    assert_eq!(&a * &inv, one.clone());
                }
            }
        }
    }

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        let pairs = [
            (Field::prime(2).unwrap(), f4()),
            (Field::prime(5).unwrap(), f25()),
            (Field::rationals(), qi()),
        ];
        for (base, ext) in pairs {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            assert_eq!(
                base.scalar_from_i64(1).embed(&ext).unwrap(),
                ext.scalar_from_i64(1)
            );
            for _ in 0..1000 {
                let a = random_scalar(&base, &mut rng);
                let b = random_scalar(&base, &mut rng);
                let ea = a.embed(&ext).unwrap();
                let eb = b.embed(&ext).unwrap();
                assert_eq!((&a + &b).embed(&ext).unwrap(), &ea + &eb);
                assert_eq!((&a * &b).embed(&ext).unwrap(), &ea * &eb);
                // injectivity: kernel is zero
                if !a.is_zero() {
                    assert!(!ea.is_zero());
                }
            }
        }
    }
}
