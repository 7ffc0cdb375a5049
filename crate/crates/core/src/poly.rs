//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector, so equality is
//! structural and iteration order is canonical. Coefficients are
//! arbitrary-precision rationals in lowest terms; no zero coefficient is ever
//! stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::order::MonomialOrder;
use crate::varset::VarSet;

/// Exact rational coefficient: arbitrary-precision, always in lowest terms
/// with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Exponent vector; one entry per variable of the ambient [`VarSet`].
///
/// The derived `Ord` is a fixed structural (lexicographic) order used only
/// for canonical storage; monomial comparison for division lives in
/// [`MonomialOrder`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u16>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Quotient if `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        let mut e = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            e.push(a - b);
        }
        Some(Monomial(e))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Indices of variables occurring with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A sparse polynomial over a fixed variable set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Polynomial {
    vars: VarSet,
    terms: BTreeMap<Monomial, Rational>,
}

fn assert_same_ring(a: &Polynomial, b: &Polynomial) {
    assert!(
        a.vars.same(&b.vars),
        "variable set mismatch: [{}] vs [{}]",
        a.vars,
        b.vars
    );
}

impl Polynomial {
    pub fn zero(vars: &VarSet) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(vars.len()), c);
        }
        Polynomial {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn variable(vars: &VarSet, i: usize) -> Self {
        assert!(i < vars.len(), "variable index {i} out of range");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::variable(vars.len(), i), Rational::one());
        Polynomial {
            vars: vars.clone(),
            terms,
        }
    }

    /// x_i^k with coefficient `c`.
    pub fn term(vars: &VarSet, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.len(), vars.len(), "exponent vector length mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn from_terms<I>(vars: &VarSet, it: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(vars);
        for (m, c) in it {
            assert_eq!(m.len(), vars.len(), "exponent vector length mismatch");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.vars.len()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn var_degree(&self, i: usize) -> u16 {
        self.terms.keys().map(|m| m.exponent(i)).max().unwrap_or(0)
    }

    pub fn is_free_of(&self, i: usize) -> bool {
        self.terms.keys().all(|m| m.exponent(i) == 0)
    }

    /// Leading (monomial, coefficient) under `ord`; `None` for the zero
    /// polynomial.
    pub fn leading(&self, ord: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.cmp(a, b))
            .map(|(m, c)| (m, c))
    }

    pub fn mul_scalar(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.vars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        assert!(i < self.vars.len(), "variable index {i} out of range");
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            out.add_term(Monomial::from_exponents(exps), c * rat(e as i64));
        }
        out
    }

    /// Simultaneous substitution. All binding targets must share one variable
    /// set `W`; variables without a binding are mapped to the variable of the
    /// same name in `W`. With no bindings the polynomial is returned
    /// unchanged.
    ///
    /// Panics if a bound index is out of range, if the targets disagree on
    /// their variable set, or if an unbound variable in use has no
    /// counterpart in `W`.
    pub fn substitute(&self, bindings: &[(usize, Polynomial)]) -> Polynomial {
        if bindings.is_empty() {
            return self.clone();
        }
        let target = bindings[0].1.vars().clone();
        for (i, p) in bindings {
            assert!(*i < self.vars.len(), "variable index {i} out of range");
            assert!(
                p.vars().same(&target),
                "substitution targets over different variable sets"
            );
        }
        let bound: BTreeMap<usize, &Polynomial> =
            bindings.iter().map(|(i, p)| (*i, p)).collect();
        // Map each unbound variable by name into the target set.
        let mut passthrough: Vec<Option<usize>> = vec![None; self.vars.len()];
        for i in 0..self.vars.len() {
            if bound.contains_key(&i) {
                continue;
            }
            passthrough[i] = target.index_of(self.vars.name(i));
        }
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut factor = Polynomial::constant(&target, c.clone());
            for i in m.support() {
                let e = m.exponent(i) as u32;
                if let Some(p) = bound.get(&i) {
                    factor = &factor * &p.pow(e);
                } else {
                    let j = passthrough[i].unwrap_or_else(|| {
                        panic!(
                            "variable `{}` has no binding and no counterpart in [{}]",
                            self.vars.name(i),
                            target
                        )
                    });
                    let mut exps = vec![0u16; target.len()];
                    exps[j] = m.exponent(i);
                    factor = factor.mul_term(&Monomial::from_exponents(exps), &Rational::one());
                }
            }
            out = &out + &factor;
        }
        out
    }

    /// Re-expresses the polynomial over `target`, matching variables by
    /// name. Every variable in actual use must exist in `target`; this is the
    /// embedding/restriction map between rings that share names.
    pub fn map_vars(&self, target: &VarSet) -> Polynomial {
        let mapping: Vec<Option<usize>> = (0..self.vars.len())
            .map(|i| target.index_of(self.vars.name(i)))
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; target.len()];
            for i in m.support() {
                let j = mapping[i].unwrap_or_else(|| {
                    panic!(
                        "variable `{}` not present in target set [{}]",
                        self.vars.name(i),
                        target
                    )
                });
                exps[j] = m.exponent(i);
            }
            out.add_term(Monomial::from_exponents(exps), c.clone());
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        assert_same_ring(self, d);
        assert!(!d.is_zero(), "division by the zero polynomial");
        let ord = MonomialOrder::GrevLex;
        let (dm, dc) = d.leading(ord).expect("nonzero divisor");
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quo = Polynomial::zero(&self.vars);
        while let Some((lm, lc)) = rem.leading(ord) {
            let q = lm.try_div(&dm)?;
            let c = lc / &dc;
            quo.add_term(q.clone(), c.clone());
            rem = &rem - &d.mul_term(&q, &c);
        }
        Some(quo)
    }

    /// Terms sorted descending under `ord` (the fixed human rendering order
    /// is grevlex-descending).
    pub fn sorted_terms(&self, ord: MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| ord.cmp(b, a));
        ts
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_same_ring(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_same_ring(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_same_ring(self, rhs);
        let mut out = Polynomial::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.sorted_terms(MonomialOrder::GrevLex).iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let coeff_shown = m.is_one() || !abs.is_one();
            if coeff_shown {
                write!(f, "{abs}")?;
            }
            let mut first_var = !coeff_shown;
            for j in m.support() {
                if !first_var || coeff_shown {
                    write!(f, "*")?;
                }
                first_var = false;
                let e = m.exponent(j);
                if e == 1 {
                    write!(f, "{}", self.vars.name(j))?;
                } else {
                    write!(f, "{}^{}", self.vars.name(j), e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    e: Vec<u16>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: Vec<String>,
    terms: Vec<TermRepr>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            vars: self.vars.names().to_vec(),
            terms: self
                .sorted_terms(MonomialOrder::GrevLex)
                .into_iter()
                .map(|(m, c)| TermRepr {
                    e: m.exponents().to_vec(),
                    c: c.to_string(),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let vars = VarSet::new(&repr.vars).map_err(D::Error::custom)?;
        let mut p = Polynomial::zero(&vars);
        for t in repr.terms {
            if t.e.len() != vars.len() {
                return Err(D::Error::custom(format!(
                    "exponent vector of length {} over {} variables",
                    t.e.len(),
                    vars.len()
                )));
            }
            let c = Rational::from_str(&t.c)
                .map_err(|e| D::Error::custom(format!("bad coefficient `{}`: {e}", t.c)))?;
            p.add_term(Monomial::from_exponents(t.e), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xyz() -> VarSet {
        VarSet::new(&["x", "y", "z"]).unwrap()
    }

    /// y - x over [x, y, z].
    fn y_minus_x(v: &VarSet) -> Polynomial {
        &Polynomial::variable(v, 1) - &Polynomial::variable(v, 0)
    }

    #[test]
    fn add_disjoint_supports() {
        let v = xyz();
        let (x, y) = (Polynomial::variable(&v, 0), Polynomial::variable(&v, 1));
        let p = &(&y * &y) - &(&x * &y).mul_scalar(&rat(2)); // y^2 - 2xy
        let q = &x * &x;
        let s = &p + &q;
        assert_eq!(s.num_terms(), 3);
        assert_eq!(s.to_string(), "y^2 - 2*x*y + x^2");
    }

    #[test]
    fn add_identity_and_inverse() {
        let v = xyz();
        let p = y_minus_x(&v).pow(2);
        assert_eq!(&p + &Polynomial::zero(&v), p);
        assert!((&p + &-&p).is_zero());
    }

    #[test]
    fn binomial_square() {
        let v = xyz();
        let b = y_minus_x(&v);
        let sq = &b * &b;
        assert_eq!(sq.to_string(), "y^2 - 2*x*y + x^2");
        assert_eq!(&Polynomial::one(&v) * &sq, sq);
    }

    #[test]
    fn squared_product_matches_naive_expansion() {
        // ((y-x)(z-x))^2 == (y-x)^2 * (z-x)^2, both via an independent
        // double-loop multiplier.
        let v = xyz();
        let a = y_minus_x(&v);
        let b = &Polynomial::variable(&v, 2) - &Polynomial::variable(&v, 0);

        fn naive_mul(p: &Polynomial, q: &Polynomial) -> Polynomial {
            let mut acc: Vec<(Monomial, Rational)> = Vec::new();
            for (ma, ca) in p.terms() {
                for (mb, cb) in q.terms() {
                    acc.push((ma.mul(mb), ca * cb));
                }
            }
            Polynomial::from_terms(p.vars(), acc)
        }

        let lhs = naive_mul(&naive_mul(&a, &b), &naive_mul(&a, &b));
        let rhs = naive_mul(&naive_mul(&a, &a), &naive_mul(&b, &b));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, (&a * &b).pow(2));
    }

    #[test]
    fn derivative_rules() {
        let v = VarSet::new(&["y", "a"]).unwrap();
        let y = Polynomial::variable(&v, 0);
        let a = Polynomial::variable(&v, 1);
        let f = (&y - &a).pow(2);
        // d/da (y-a)^2 = -2(y-a)
        assert_eq!(f.partial_derivative(1), (&y - &a).mul_scalar(&rat(-2)));
        // absent variable
        let w = VarSet::new(&["y", "a", "b"]).unwrap();
        assert!(f.map_vars(&w).partial_derivative(2).is_zero());
        // power rule: d/da a^2 y = 2ay
        let g = &(&a * &a) * &y;
        assert_eq!(g.partial_derivative(1), (&a * &y).mul_scalar(&rat(2)));
    }

    #[test]
    fn substitution_examples() {
        let v = VarSet::new(&["x", "y", "a"]).unwrap();
        let y = Polynomial::variable(&v, 1);
        let a = Polynomial::variable(&v, 2);
        let f = (&y - &a).pow(2);
        // a -> x gives (y-x)^2
        let g = f.substitute(&[(2, Polynomial::variable(&v, 0))]);
        let expect = (&y - &Polynomial::variable(&v, 0)).pow(2);
        assert_eq!(g, expect);
        // empty bindings
        assert_eq!(f.substitute(&[]), f);
        // x^2*F + y^2 with F -> -y^2
        let w = VarSet::new(&["x", "y", "F"]).unwrap();
        let (x, y, fv) = (
            Polynomial::variable(&w, 0),
            Polynomial::variable(&w, 1),
            Polynomial::variable(&w, 2),
        );
        let p = &(&(&x * &x) * &fv) + &(&y * &y);
        let target = VarSet::new(&["x", "y"]).unwrap();
        let neg_y2 = -&(&Polynomial::variable(&target, 1) * &Polynomial::variable(&target, 1));
        let q = p.substitute(&[(2, neg_y2)]);
        let (x, y) = (
            Polynomial::variable(&target, 0),
            Polynomial::variable(&target, 1),
        );
        assert_eq!(q, &(&(&x * &x) * &-&(&y * &y)) + &(&y * &y));
    }

    #[test]
    #[should_panic(expected = "variable set mismatch")]
    fn cross_ring_addition_panics() {
        let v = xyz();
        let w = VarSet::new(&["x", "y"]).unwrap();
        let _ = &Polynomial::variable(&v, 0) + &Polynomial::variable(&w, 0);
    }

    #[test]
    fn exact_division() {
        let v = xyz();
        let a = y_minus_x(&v);
        let b = &Polynomial::variable(&v, 2) - &Polynomial::variable(&v, 0);
        let p = &a.pow(2) * &b;
        assert_eq!(p.div_exact(&a), Some(&a * &b));
        assert_eq!(p.div_exact(&b), Some(a.pow(2)));
        assert_eq!(a.div_exact(&b), None);
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let v = xyz();
        let p = &y_minus_x(&v).pow(3) + &Polynomial::constant(&v, Rational::new(7.into(), 3.into()));
        let s = serde_json::to_string(&p).unwrap();
        let q: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
        assert_eq!(s, serde_json::to_string(&q).unwrap());
    }

    #[test]
    fn json_schema_shape() {
        let v = xyz();
        let p = &(&Polynomial::variable(&v, 1) * &Polynomial::variable(&v, 1))
            - &(&Polynomial::variable(&v, 0) * &Polynomial::variable(&v, 1)).mul_scalar(&rat(2));
        let val: serde_json::Value = serde_json::to_value(&p).unwrap();
        assert_eq!(val["vars"], serde_json::json!(["x", "y", "z"]));
        assert_eq!(val["terms"][0]["e"], serde_json::json!([0, 2, 0]));
        assert_eq!(val["terms"][0]["c"], serde_json::json!("1"));
        assert_eq!(val["terms"][1]["c"], serde_json::json!("-2"));
    }

    fn arb_poly(vars: &'static [&'static str], max_terms: usize) -> impl Strategy<Value = Polynomial> {
        let n = vars.len();
        proptest::collection::vec(
            (
                proptest::collection::vec(0u16..4, n),
                -6i64..7,
            ),
            0..=max_terms,
        )
        .prop_map(move |raw| {
            let v = VarSet::new(vars).unwrap();
            Polynomial::from_terms(
                &v,
                raw.into_iter()
                    .map(|(e, c)| (Monomial::from_exponents(e), rat(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(&["x","y","z"], 5),
                       q in arb_poly(&["x","y","z"], 5),
                       r in arb_poly(&["x","y","z"], 5)) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        }

        #[test]
        fn no_zero_coefficients_stored(p in arb_poly(&["x","y","z"], 6),
                                       q in arb_poly(&["x","y","z"], 6)) {
            for poly in [&p + &q, &p - &q, &p * &q] {
                prop_assert!(poly.terms().values().all(|c| !c.is_zero()));
            }
        }

        #[test]
        fn substitute_variable_by_itself(p in arb_poly(&["x","y","z"], 6)) {
            let v = p.vars().clone();
            let id = p.substitute(&[(0, Polynomial::variable(&v, 0))]);
            prop_assert_eq!(id, p);
        }

        #[test]
        fn leibniz_rule(p in arb_poly(&["x","y"], 5), q in arb_poly(&["x","y"], 5)) {
            for i in 0..2 {
                let lhs = (&p * &q).partial_derivative(i);
                let rhs = &(&p.partial_derivative(i) * &q) + &(&p * &q.partial_derivative(i));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
