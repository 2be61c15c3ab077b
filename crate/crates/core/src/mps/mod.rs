//! Multivariate truncated power series.
//!
//! An [`MSeries`] is a sparse map from exponent tuples to coefficients with a
//! total-degree cap `D`: every stored monomial has total degree `< D` and the
//! value is known modulo total degree `D`. Exponent tuples are ordered first
//! by total degree and then lexicographically; that well-order drives both
//! the inverse function theorem construction and the symmetric-polynomial
//! decomposition.
//!
//! Submodules:
//!
//! - [`symmetric`]: elementary/complete/power-sum bases, the fundamental
//!   theorem decomposition and the Girard-Newton/Waring identity checks
//! - [`matrix`]: matrices of series, determinants, adjugates, permanents,
//!   Jacobi matrices and the determinant-of-exponential identity
//! - [`inversion`]: multivariate reversion, Lagrange-Good coefficients and
//!   MacMahon's master theorem

pub mod inversion;
pub mod matrix;
pub mod symmetric;

pub use inversion::{lagrange_good_coeff, m_reverse, macmahon, MacmahonReport};
pub use matrix::{jacobi_matrix, jacobian_det, m_exp, matrix_exp_det_check, SeriesMatrix};
pub use symmetric::{newton_waring, sym_basis, sym_decompose, SymBasis, SymRelation};

use crate::coeffring::Ring;
use crate::error::{Error, Result};
use crate::fps::Series;
use serde_json::{json, Value};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// An exponent tuple, ordered by total degree, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Exponents(pub Vec<u32>);

impl Exponents {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn zero(nvars: usize) -> Self {
        Exponents(vec![0; nvars])
    }

    pub fn unit(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        Exponents(e)
    }

    fn add(&self, other: &Self) -> Self {
        Exponents(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// A multivariate series truncated at a total-degree cap.
#[derive(Clone, PartialEq)]
pub struct MSeries<R: Ring> {
    ring: R,
    nvars: usize,
    cap: usize,
    terms: BTreeMap<Exponents, R::Elem>,
}

impl<R: Ring> std::fmt::Debug for MSeries<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MSeries[{} vars, cap {}]({})", self.nvars, self.cap, self.render())
    }
}

impl<R: Ring> MSeries<R> {
    pub fn zero(ring: R, nvars: usize, cap: usize) -> Self {
        assert!(nvars >= 1, "need at least one variable");
        assert!(cap >= 1, "cap must be at least 1");
        MSeries {
            ring,
            nvars,
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: R, nvars: usize, cap: usize, c: &R::Elem) -> Self {
        let mut s = Self::zero(ring, nvars, cap);
        s.insert_add(Exponents::zero(nvars), c.clone());
        s
    }

    pub fn one(ring: R, nvars: usize, cap: usize) -> Self {
        let c = ring.one();
        Self::constant(ring, nvars, cap, &c)
    }

    /// The variable `X_var`.
    pub fn variable(ring: R, nvars: usize, cap: usize, var: usize) -> Self {
        assert!(var < nvars);
        let mut s = Self::zero(ring.clone(), nvars, cap);
        s.insert_add(Exponents::unit(nvars, var), ring.one());
        s
    }

    pub fn monomial(ring: R, nvars: usize, cap: usize, exps: &[u32], c: &R::Elem) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut s = Self::zero(ring, nvars, cap);
        s.insert_add(Exponents(exps.to_vec()), c.clone());
        s
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &R::Elem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> R::Elem {
        self.terms
            .get(&Exponents(exps.to_vec()))
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn constant_term(&self) -> R::Elem {
        self.coeff(&vec![0; self.nvars])
    }

    /// Largest stored total degree, or `None` for the zero series.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Exponents::total_degree)
    }

    /// Smallest stored exponent tuple in the graded-lex order.
    pub fn leading_term(&self) -> Option<(&Exponents, &R::Elem)> {
        self.terms.iter().next()
    }

    /// Largest stored exponent tuple in the graded-lex order.
    pub fn max_term(&self) -> Option<(&Exponents, &R::Elem)> {
        self.terms.iter().next_back()
    }

    fn insert_add(&mut self, e: Exponents, c: R::Elem) {
        if self.ring.is_zero(&c) || e.total_degree() as usize >= self.cap {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = self.ring.add(slot.get(), &c);
                if self.ring.is_zero(&sum) {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    fn check_compat(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.tag(), other.ring.tag()));
        }
        if self.nvars != other.nvars {
            return Err(Error::Domain(format!(
                "variable count mismatch: {} vs {}",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    /// Restricts to a smaller cap (or keeps the current one).
    pub fn truncate_cap(&self, cap: usize) -> Self {
        let mut out = MSeries::zero(self.ring.clone(), self.nvars, cap.max(1).min(self.cap));
        for (e, c) in &self.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    /// Raises the cap, treating the series as an exact polynomial.
    pub fn extend_exact(&self, cap: usize) -> Self {
        let mut out = self.clone();
        out.cap = out.cap.max(cap);
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compat(other)?;
        let cap = self.cap.min(other.cap);
        let mut out = self.truncate_cap(cap);
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = MSeries::zero(self.ring.clone(), self.nvars, self.cap);
        for (e, c) in &self.terms {
            out.insert_add(e.clone(), self.ring.neg(c));
        }
        out
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = MSeries::zero(self.ring.clone(), self.nvars, self.cap);
        for (e, v) in &self.terms {
            out.insert_add(e.clone(), self.ring.mul(v, c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compat(other)?;
        let cap = self.cap.min(other.cap);
        let ring = &self.ring;
        // accumulate in a hash map; sparse products hit the same monomial
        // many times and tree inserts would pay the key comparison each time
        let mut acc: std::collections::HashMap<Exponents, R::Elem> =
            std::collections::HashMap::with_capacity(self.terms.len() + other.terms.len());
        let rhs: Vec<(usize, &Exponents, &R::Elem)> = other
            .terms
            .iter()
            .map(|(e, c)| (e.total_degree() as usize, e, c))
            .collect();
        for (ea, ca) in &self.terms {
            let da = ea.total_degree() as usize;
            if da >= cap {
                continue;
            }
            for &(db, eb, cb) in &rhs {
                if da + db >= cap {
                    continue;
                }
                let prod = ring.mul(ca, cb);
                match acc.entry(ea.add(eb)) {
                    std::collections::hash_map::Entry::Occupied(mut slot) => {
                        let sum = ring.add(slot.get(), &prod);
                        *slot.get_mut() = sum;
                    }
                    std::collections::hash_map::Entry::Vacant(slot) => {
                        slot.insert(prod);
                    }
                }
            }
        }
        let mut terms = BTreeMap::new();
        for (e, c) in acc {
            if !ring.is_zero(&c) {
                terms.insert(e, c);
            }
        }
        Ok(MSeries {
            ring: ring.clone(),
            nvars: self.nvars,
            cap,
            terms,
        })
    }

    pub fn pow_usize(&self, k: usize) -> Result<Self> {
        let mut out = MSeries::one(self.ring.clone(), self.nvars, self.cap);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Multiplicative inverse through the geometric expansion in `1 - a/a0`.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = self.constant_term();
        let a0_inv = self.ring.try_inverse(&a0)?;
        let scaled = self.scale(&a0_inv);
        let one = MSeries::one(self.ring.clone(), self.nvars, self.cap);
        let u = one.sub(&scaled)?; // positive valuation
        let mut out = one.clone();
        let mut power = one;
        for _ in 1..self.cap {
            power = power.mul(&u)?;
            if power.is_zero() {
                break;
            }
            out = out.add(&power)?;
        }
        Ok(out.scale(&a0_inv))
    }

    /// Partial derivative with respect to variable `var`; the cap drops by 1.
    pub fn partial(&self, var: usize) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::Domain(format!(
                "variable index {var} out of range for {} variables",
                self.nvars
            )));
        }
        if self.cap <= 1 {
            return Err(Error::PrecisionExhausted(
                "cap exhausted by differentiation".into(),
            ));
        }
        let mut out = MSeries::zero(self.ring.clone(), self.nvars, self.cap - 1);
        for (e, c) in &self.terms {
            let k = e.0[var];
            if k == 0 {
                continue;
            }
            let mut le = e.clone();
            le.0[var] -= 1;
            let factor = self.ring.from_i64(k as i64);
            out.insert_add(le, self.ring.mul(&factor, c));
        }
        Ok(out)
    }

    /// Iterated partials: `orders[i]` derivatives in variable `i`.
    pub fn partial_multi(&self, orders: &[u32]) -> Result<Self> {
        let mut out = self.clone();
        for (var, &k) in orders.iter().enumerate() {
            for _ in 0..k {
                out = out.partial(var)?;
            }
        }
        Ok(out)
    }

    /// Simultaneous substitution of one series per variable.
    ///
    /// Every substitute needs a zero constant term, unless this series is a
    /// visible polynomial: its degree must lie strictly below the cap so
    /// there is certified room beyond the support.
    pub fn compose(&self, subs: &[Self]) -> Result<Self> {
        if subs.len() != self.nvars {
            return Err(Error::Domain(format!(
                "expected {} substitutes, got {}",
                self.nvars,
                subs.len()
            )));
        }
        let mut cap = self.cap;
        for s in subs {
            subs[0].check_compat(s)?;
            cap = cap.min(s.cap);
        }
        let target_vars = subs[0].nvars;
        if self.ring != subs[0].ring {
            return Err(Error::RingMismatch(self.ring.tag(), subs[0].ring.tag()));
        }
        let any_constant = subs
            .iter()
            .any(|s| !self.ring.is_zero(&s.constant_term()));
        if any_constant {
            let poly_room = self
                .degree()
                .map_or(true, |d| (d as usize) + 1 < self.cap);
            if !poly_room {
                return Err(Error::CompositionDomain(
                    "a substitute has a nonzero constant term and the outer series is not a \
                     visible polynomial"
                        .into(),
                ));
            }
        }
        let mut powers: Vec<Vec<MSeries<R>>> = vec![Vec::new(); self.nvars];
        let one = MSeries::one(self.ring.clone(), target_vars, cap);
        let mut out = MSeries::zero(self.ring.clone(), target_vars, cap);
        for (e, c) in &self.terms {
            let mut term = one.scale(c);
            for (var, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let cache = &mut powers[var];
                while cache.len() < k as usize {
                    let next = match cache.last() {
                        None => subs[var].truncate_cap(cap),
                        Some(prev) => prev.mul(&subs[var])?,
                    };
                    cache.push(next);
                }
                term = term.mul(&cache[k as usize - 1])?;
                if term.is_zero() {
                    break;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Polynomial evaluation at a point, treating stored terms as everything.
    pub fn eval_at(&self, point: &[R::Elem]) -> Result<R::Elem> {
        if point.len() != self.nvars {
            return Err(Error::Domain(format!(
                "expected {} coordinates, got {}",
                self.nvars,
                point.len()
            )));
        }
        let mut acc = self.ring.zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (var, &k) in e.0.iter().enumerate() {
                for _ in 0..k {
                    term = self.ring.mul(&term, &point[var]);
                }
            }
            acc = self.ring.add(&acc, &term);
        }
        Ok(acc)
    }

    /// Applies a permutation to the variables: `X_i -> X_(perm[i])`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        let mut out = MSeries::zero(self.ring.clone(), self.nvars, self.cap);
        for (e, c) in &self.terms {
            let mut ne = vec![0u32; self.nvars];
            for (i, &k) in e.0.iter().enumerate() {
                ne[perm[i]] = k;
            }
            out.insert_add(Exponents(ne), c.clone());
        }
        out
    }

    /// Collapses to a univariate series under `X_i -> X^(weights[i])`.
    pub fn collapse_univariate(&self, weights: &[usize], order: usize) -> Result<Series<R>> {
        if weights.len() != self.nvars {
            return Err(Error::Domain("one weight per variable required".into()));
        }
        let mut coeffs = vec![self.ring.zero(); order.max(1)];
        for (e, c) in &self.terms {
            let exp: usize = e
                .0
                .iter()
                .zip(weights)
                .map(|(&k, &w)| k as usize * w)
                .sum();
            if exp < order {
                coeffs[exp] = self.ring.add(&coeffs[exp], c);
            }
        }
        Series::from_coeffs(self.ring.clone(), coeffs)
    }

    /// First differing monomial between two series, in graded-lex order,
    /// looking only below the common cap.
    pub fn first_difference(&self, other: &Self) -> Option<(Exponents, R::Elem, R::Elem)> {
        let cap = self.cap.min(other.cap);
        let mut keys: Vec<&Exponents> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .filter(|e| (e.total_degree() as usize) < cap)
            .collect();
        keys.sort();
        keys.dedup();
        for e in keys {
            let a = self
                .terms
                .get(e)
                .cloned()
                .unwrap_or_else(|| self.ring.zero());
            let b = other
                .terms
                .get(e)
                .cloned()
                .unwrap_or_else(|| self.ring.zero());
            if a != b {
                return Some((e.clone(), a, b));
            }
        }
        None
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return format!("0 (cap {})", self.cap);
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mono: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("X{}", i + 1)
                    } else {
                        format!("X{}^{}", i + 1, k)
                    }
                })
                .collect();
            let coeff = self.ring.render(c);
            if mono.is_empty() {
                parts.push(coeff);
            } else if coeff == "1" {
                parts.push(mono.join("*"));
            } else {
                parts.push(format!("({})*{}", coeff, mono.join("*")));
            }
        }
        format!("{} (cap {})", parts.join(" + "), self.cap)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": self.ring.tag(),
            "nvars": self.nvars,
            "cap": self.cap,
            "terms": self
                .terms
                .iter()
                .map(|(e, c)| json!({"e": e.0, "c": self.ring.render(c)}))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(ring: R, value: &Value) -> Result<Self> {
        let nvars = value
            .get("nvars")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Domain("MSeries JSON needs \"nvars\"".into()))?
            as usize;
        let cap = value
            .get("cap")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Domain("MSeries JSON needs \"cap\"".into()))?
            as usize;
        if let Some(tag) = value.get("ring").and_then(Value::as_str) {
            if tag != ring.tag() {
                return Err(Error::RingMismatch(ring.tag(), tag.to_string()));
            }
        }
        let mut out = MSeries::zero(ring.clone(), nvars.max(1), cap.max(1));
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Domain("MSeries JSON needs \"terms\"".into()))?;
        for t in terms {
            let exps = t
                .get("e")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Domain("term needs exponents \"e\"".into()))?
                .iter()
                .map(|v| v.as_u64().map(|x| x as u32))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::Domain("exponents must be integers".into()))?;
            if exps.len() != nvars {
                return Err(Error::Domain("exponent tuple arity mismatch".into()));
            }
            let c = t
                .get("c")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Domain("term needs a coefficient \"c\"".into()))?;
            out.insert_add(Exponents(exps), ring.parse_elem(c)?);
        }
        Ok(out)
    }
}
