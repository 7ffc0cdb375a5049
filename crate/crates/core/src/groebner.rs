//! Deterministic Buchberger engine and the ideal-theoretic toolbox built on
//! it: normal forms, ideal equality, colon ideals, saturation, elimination,
//! Krull dimension of the quotient, and membership in a localization.
//!
//! Reduced Gröbner bases are the canonical form everywhere: monic,
//! auto-reduced, sorted ascending by leading monomial. Identical inputs yield
//! bit-identical bases regardless of when or from how many threads the
//! computation is triggered; the per-ideal cache is filled single-flight.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Polynomial, Rational};
use crate::varset::VarSet;

/// A polynomial ideal given by generators, with a lazily computed reduced
/// Gröbner basis under a fixed monomial order.
#[derive(Clone)]
pub struct Ideal {
    vars: VarSet,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    basis: OnceLock<Vec<Polynomial>>,
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal({}; {:?})", self.order, self.generators)
    }
}

impl Ideal {
    /// Builds an ideal from generators; zero generators are pruned.
    ///
    /// Panics if a generator lives over a different variable set.
    pub fn new(vars: &VarSet, order: MonomialOrder, generators: Vec<Polynomial>) -> Ideal {
        for g in &generators {
            assert!(
                g.vars().same(vars),
                "generator over [{}] in ring [{}]",
                g.vars(),
                vars
            );
        }
        Ideal {
            vars: vars.clone(),
            order,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: OnceLock::new(),
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The reduced Gröbner basis: monic, auto-reduced, sorted ascending by
    /// leading monomial. Computed once per ideal (single-flight) and cached.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.basis
            .get_or_init(|| buchberger(&self.vars, self.order, &self.generators))
    }

    /// Remainder of `p` on full division by the reduced basis. Zero exactly
    /// when `p` lies in the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        assert!(p.vars().same(&self.vars), "element over a different ring");
        let basis: Vec<OrdPoly> = self
            .groebner_basis()
            .iter()
            .map(|g| OrdPoly::from_poly(g, self.order))
            .collect();
        reduce_full(OrdPoly::from_poly(p, self.order), &basis, self.order).to_poly(&self.vars)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Whether the ideal is the whole ring.
    pub fn contains_one(&self) -> bool {
        self.groebner_basis()
            .iter()
            .any(|g| g.is_constant() && !g.is_zero())
    }

    /// Ideal equality as identity of reduced Gröbner bases.
    ///
    /// Panics unless both sides share the ring and the order.
    pub fn ideal_equal(&self, other: &Ideal) -> bool {
        assert!(self.vars.same(&other.vars), "ideals over different rings");
        assert_eq!(self.order, other.order, "ideals under different orders");
        self.groebner_basis() == other.groebner_basis()
    }

    /// Intersection with another ideal over the same ring, by the standard
    /// auxiliary-variable construction: eliminate `t` from `t·I + (1−t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        assert!(self.vars.same(&other.vars), "ideals over different rings");
        let t_name = self.vars.fresh_name("t");
        let ext = self.vars.extended(&[t_name]).expect("fresh name");
        let t = Polynomial::variable(&ext, ext.len() - 1);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(&t * &g.map_vars(&ext));
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &g.map_vars(&ext));
        }
        let keep: Vec<usize> = (0..self.vars.len()).collect();
        let elim = Ideal::new(&ext, self.order, gens).eliminate(&keep);
        Ideal::new(
            &self.vars,
            self.order,
            elim.generators
                .iter()
                .map(|g| g.map_vars(&self.vars))
                .collect(),
        )
    }

    /// The ideal quotient `(I : h)`, computed as `(I ∩ (h)) / h`.
    pub fn colon(&self, h: &Polynomial) -> Result<Ideal> {
        if h.is_zero() {
            return Err(Error::InvalidArgument("colon by the zero polynomial".into()));
        }
        assert!(h.vars().same(&self.vars), "element over a different ring");
        let principal = Ideal::new(&self.vars, self.order, vec![h.clone()]);
        let inter = self.intersect(&principal);
        let quotients = inter
            .generators
            .iter()
            .map(|g| {
                g.div_exact(h)
                    .expect("element of I ∩ (h) must be divisible by h")
            })
            .collect();
        Ok(Ideal::new(&self.vars, self.order, quotients))
    }

    /// The saturation `(I : h^∞)`: adjoin `w`, add `w·h − 1`, eliminate `w`.
    pub fn saturate(&self, h: &Polynomial) -> Result<Ideal> {
        if h.is_zero() {
            return Err(Error::InvalidArgument(
                "saturation by the zero polynomial".into(),
            ));
        }
        assert!(h.vars().same(&self.vars), "element over a different ring");
        let w_name = self.vars.fresh_name("w");
        let ext = self.vars.extended(&[w_name]).expect("fresh name");
        let w = Polynomial::variable(&ext, ext.len() - 1);
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| g.map_vars(&ext)).collect();
        gens.push(&(&w * &h.map_vars(&ext)) - &Polynomial::one(&ext));
        let keep: Vec<usize> = (0..self.vars.len()).collect();
        let elim = Ideal::new(&ext, self.order, gens).eliminate(&keep);
        Ok(Ideal::new(
            &self.vars,
            self.order,
            elim.generators
                .iter()
                .map(|g| g.map_vars(&self.vars))
                .collect(),
        ))
    }

    /// The elimination ideal `I ∩ ℚ[keep]`, returned over the original ring
    /// (generators use only the kept variables). `keep` must list distinct
    /// valid indices.
    pub fn eliminate(&self, keep: &[usize]) -> Ideal {
        let keep_set: BTreeSet<usize> = keep.iter().copied().collect();
        assert_eq!(keep_set.len(), keep.len(), "duplicate indices in keep");
        assert!(
            keep_set.iter().all(|&i| i < self.vars.len()),
            "keep index out of range"
        );
        let elim: Vec<usize> = (0..self.vars.len())
            .filter(|i| !keep_set.contains(i))
            .collect();
        if elim.is_empty() {
            return self.clone();
        }
        // Permute eliminated variables to the front and run a block order.
        let mut names: Vec<&str> = elim.iter().map(|&i| self.vars.name(i)).collect();
        names.extend(keep_set.iter().map(|&i| self.vars.name(i)));
        let permuted = VarSet::new(&names).expect("permutation of valid names");
        let mapped: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|g| g.map_vars(&permuted))
            .collect();
        let block = MonomialOrder::Block(elim.len());
        let gb = buchberger(&permuted, block, &mapped);
        let kept: Vec<Polynomial> = gb
            .into_iter()
            .filter(|g| {
                g.terms()
                    .keys()
                    .all(|m| (0..elim.len()).all(|i| m.exponent(i) == 0))
            })
            .map(|g| g.map_vars(&self.vars))
            .collect();
        Ideal::new(&self.vars, self.order, kept)
    }

    /// Krull dimension of the quotient ring, as the maximum size of a
    /// variable subset independent modulo the leading-term ideal. The unit
    /// ideal yields the sentinel −1.
    pub fn krull_dimension(&self) -> i32 {
        let n = self.vars.len();
        assert!(n <= 24, "dimension search only supported up to 24 variables");
        if self.contains_one() {
            return -1;
        }
        let supports: Vec<u32> = self
            .groebner_basis()
            .iter()
            .map(|g| {
                let (m, _) = g.leading(self.order).expect("nonzero basis element");
                m.support().fold(0u32, |acc, i| acc | (1 << i))
            })
            .collect();
        let mut best = 0i32;
        for mask in 0u32..(1 << n) {
            // Independent: no leading monomial supported entirely inside mask.
            if supports.iter().all(|s| s & !mask != 0) {
                best = best.max(mask.count_ones() as i32);
            }
        }
        best
    }

    /// Audits the Buchberger criterion on the computed basis: every
    /// S-polynomial of basis pairs reduces to zero.
    pub fn audit_groebner(&self) -> bool {
        let basis: Vec<OrdPoly> = self
            .groebner_basis()
            .iter()
            .map(|g| OrdPoly::from_poly(g, self.order))
            .collect();
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                let s = s_polynomial(&basis[i], &basis[j], self.order);
                if !reduce_full(s, &basis, self.order).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Whether `p` belongs to the extension of `ideal` in the ring localized at
/// the coordinate ideal `max_ideal` (generated by variables). Decided by the
/// colon criterion: `p ∈ I·R_m` iff `(I : p) ⊄ m`, i.e. the reduced basis of
/// the colon ideal has an element with a monomial free of the localized
/// variables (a unit of the localization).
///
/// `p = 0` is trivially a member.
pub fn local_membership(p: &Polynomial, ideal: &Ideal, max_ideal: &Ideal) -> Result<bool> {
    local_membership_witness(p, ideal, max_ideal).map(|(member, _)| member)
}

/// As [`local_membership`], additionally returning the colon ideal `(I : p)`
/// whose reduced basis witnesses the verdict.
pub fn local_membership_witness(
    p: &Polynomial,
    ideal: &Ideal,
    max_ideal: &Ideal,
) -> Result<(bool, Ideal)> {
    assert!(p.vars().same(ideal.vars()), "element over a different ring");
    assert!(
        max_ideal.vars().same(ideal.vars()),
        "localization ideal over a different ring"
    );
    let mut local_vars: BTreeSet<usize> = BTreeSet::new();
    for g in max_ideal.generators() {
        let mut terms = g.terms().iter();
        let single = match (terms.next(), terms.next()) {
            (Some((m, _)), None) => m,
            _ => {
                return Err(Error::InvalidArgument(
                    "localization ideal must be generated by variables".into(),
                ))
            }
        };
        let mut support = single.support();
        match (support.next(), support.next()) {
            (Some(i), None) if single.exponent(i) == 1 => {
                local_vars.insert(i);
            }
            _ => {
                return Err(Error::InvalidArgument(
                    "localization ideal must be generated by variables".into(),
                ))
            }
        }
    }
    if p.is_zero() {
        let unit = Ideal::new(ideal.vars(), ideal.order(), vec![Polynomial::one(ideal.vars())]);
        return Ok((true, unit));
    }
    let colon = ideal.colon(p)?;
    let member = colon.groebner_basis().iter().any(|g| {
        g.terms()
            .keys()
            .any(|m| m.support().all(|i| !local_vars.contains(&i)))
    });
    Ok((member, colon))
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    order: MonomialOrder,
    generators: Vec<Polynomial>,
}

impl Serialize for Ideal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IdealRepr {
            order: self.order,
            generators: self.generators.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Ideal {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let repr = IdealRepr::deserialize(deserializer)?;
        let first = repr
            .generators
            .first()
            .ok_or_else(|| D::Error::custom("ideal JSON needs at least one generator"))?;
        let vars = first.vars().clone();
        for g in &repr.generators {
            if !g.vars().same(&vars) {
                return Err(D::Error::custom("ideal generators over different variable sets"));
            }
        }
        Ok(Ideal::new(&vars, repr.order, repr.generators))
    }
}

// ---------------------------------------------------------------------------
// Engine internals: order-sorted term lists.

/// Terms sorted strictly descending under the active order.
#[derive(Clone, PartialEq, Eq)]
struct OrdPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl OrdPoly {
    fn from_poly(p: &Polynomial, ord: MonomialOrder) -> OrdPoly {
        let mut terms: Vec<(Monomial, Rational)> =
            p.terms().iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|(a, _), (b, _)| ord.cmp(b, a));
        OrdPoly { terms }
    }

    fn to_poly(&self, vars: &VarSet) -> Polynomial {
        Polynomial::from_terms(vars, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.terms.first() {
            if lc.is_one() {
                return;
            }
            let lc = lc.clone();
            for (_, c) in &mut self.terms {
                *c = &*c / &lc;
            }
        }
    }

    /// `self − c · x^shift · g`, merging the two sorted term lists.
    fn sub_scaled(&self, c: &Rational, shift: &Monomial, g: &OrdPoly, ord: MonomialOrder) -> OrdPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ma, ca)), Some((mb, cb))) => {
                    let mbs = mb.mul(shift);
                    match ord.cmp(ma, &mbs) {
                        Ordering::Greater => {
                            out.push((ma.clone(), ca.clone()));
                            a.next();
                        }
                        Ordering::Less => {
                            out.push((mbs, -(cb * c)));
                            b.next();
                        }
                        Ordering::Equal => {
                            let v = ca - &(cb * c);
                            if !v.is_zero() {
                                out.push((mbs, v));
                            }
                            a.next();
                            b.next();
                        }
                    }
                }
                (Some((ma, ca)), None) => {
                    out.push((ma.clone(), ca.clone()));
                    a.next();
                }
                (None, Some((mb, cb))) => {
                    out.push((mb.mul(shift), -(cb * c)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        OrdPoly { terms: out }
    }
}

/// Full normal form: every term of the result is divisible by no leading
/// monomial of `basis`. Reducers are tried in slice order, so the result is
/// deterministic; for a reduced basis it is independent of that order.
fn reduce_full(p: OrdPoly, basis: &[OrdPoly], ord: MonomialOrder) -> OrdPoly {
    let mut work = p;
    let mut remainder: Vec<(Monomial, Rational)> = Vec::new();
    'outer: while let Some((lm, lc)) = work.leading().cloned() {
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (gm, gc) = g.leading().expect("nonzero reducer");
            if let Some(shift) = lm.try_div(gm) {
                let c = &lc / gc;
                work = work.sub_scaled(&c, &shift, g, ord);
                continue 'outer;
            }
        }
        remainder.push((lm, lc));
        work.terms.remove(0);
    }
    OrdPoly { terms: remainder }
}

fn s_polynomial(f: &OrdPoly, g: &OrdPoly, ord: MonomialOrder) -> OrdPoly {
    let (fm, fc) = f.leading().expect("nonzero input");
    let (gm, gc) = g.leading().expect("nonzero input");
    let lcm = fm.lcm(gm);
    let sf = lcm.try_div(fm).expect("lcm divisible");
    let sg = lcm.try_div(gm).expect("lcm divisible");
    // (1/fc)·x^sf·f − (1/gc)·x^sg·g
    let scaled_f = OrdPoly {
        terms: f
            .terms
            .iter()
            .map(|(m, c)| (m.mul(&sf), c / fc))
            .collect(),
    };
    scaled_f.sub_scaled(&(Rational::one() / gc), &sg, g, ord)
}

type PairKey = (u32, Vec<u16>, usize, usize);

fn pair_key(i: usize, j: usize, basis: &[OrdPoly]) -> PairKey {
    let (mi, _) = basis[i].leading().expect("nonzero");
    let (mj, _) = basis[j].leading().expect("nonzero");
    let lcm = mi.lcm(mj);
    (lcm.degree(), lcm.exponents().to_vec(), i, j)
}

/// Buchberger's algorithm with the normal selection strategy (minimal lcm
/// degree first) and the product and chain criteria, followed by
/// minimalization and full auto-reduction. Returns the reduced basis sorted
/// ascending by leading monomial.
fn buchberger(vars: &VarSet, ord: MonomialOrder, generators: &[Polynomial]) -> Vec<Polynomial> {
    // Deduplicate identical generators; the canonical result is unaffected.
    let mut seen: BTreeSet<Polynomial> = BTreeSet::new();
    let mut basis: Vec<OrdPoly> = Vec::new();
    for g in generators {
        if g.is_zero() || !seen.insert(g.clone()) {
            continue;
        }
        let mut op = OrdPoly::from_poly(g, ord);
        op.make_monic();
        basis.push(op);
    }

    let mut pending: BTreeSet<PairKey> = BTreeSet::new();
    let mut pending_idx: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pending.insert(pair_key(i, j, &basis));
            pending_idx.insert((i, j));
        }
    }

    while let Some(key) = pending.iter().next().cloned() {
        pending.remove(&key);
        let (_, lcm_exps, i, j) = key;
        pending_idx.remove(&(i, j));
        let lcm = Monomial::from_exponents(lcm_exps);
        let (mi, _) = basis[i].leading().expect("nonzero");
        let (mj, _) = basis[j].leading().expect("nonzero");
        // Product criterion: coprime leading monomials.
        if mi.mul(mj) == lcm {
            continue;
        }
        // Chain criterion: some other basis element divides the lcm and both
        // connecting pairs have already been handled.
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let (mk, _) = basis[k].leading().expect("nonzero");
            mk.divides(&lcm)
                && !pending_idx.contains(&(i.min(k), i.max(k)))
                && !pending_idx.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], ord);
        let mut r = reduce_full(s, &basis, ord);
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        basis.push(r);
        let t = basis.len() - 1;
        for k in 0..t {
            pending.insert(pair_key(k, t, &basis));
            pending_idx.insert((k, t));
        }
    }

    reduce_basis(vars, ord, basis)
}

/// Minimalizes (drops elements whose leading monomial is divisible by
/// another's) and fully reduces each survivor against the rest.
fn reduce_basis(vars: &VarSet, ord: MonomialOrder, basis: Vec<OrdPoly>) -> Vec<Polynomial> {
    let mut nonzero: Vec<OrdPoly> = basis.into_iter().filter(|g| !g.is_zero()).collect();
    nonzero.sort_by(|a, b| {
        let (ma, _) = a.leading().expect("nonzero");
        let (mb, _) = b.leading().expect("nonzero");
        ord.cmp(ma, mb).then_with(|| a.terms.len().cmp(&b.terms.len()))
    });
    let mut minimal: Vec<OrdPoly> = Vec::new();
    for g in nonzero {
        let (gm, _) = g.leading().expect("nonzero");
        if minimal
            .iter()
            .any(|h| h.leading().expect("nonzero").0.divides(gm))
        {
            continue;
        }
        minimal.push(g);
    }
    // Auto-reduce until stable (usually a single pass).
    loop {
        let mut changed = false;
        for idx in 0..minimal.len() {
            let others: Vec<OrdPoly> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, g)| g.clone())
                .collect();
            let mut reduced = reduce_full(minimal[idx].clone(), &others, ord);
            reduced.make_monic();
            if reduced != minimal[idx] {
                minimal[idx] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    minimal.retain(|g| !g.is_zero());
    minimal.sort_by(|a, b| {
        let (ma, _) = a.leading().expect("nonzero");
        let (mb, _) = b.leading().expect("nonzero");
        ord.cmp(ma, mb)
    });
    minimal.into_iter().map(|g| g.to_poly(vars)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn ring(names: &[&str]) -> VarSet {
        VarSet::new(names).unwrap()
    }

    fn var(v: &VarSet, name: &str) -> Polynomial {
        Polynomial::variable(v, v.index_of(name).unwrap())
    }

    fn ideal(v: &VarSet, gens: Vec<Polynomial>) -> Ideal {
        Ideal::new(v, MonomialOrder::GrevLex, gens)
    }

    #[test]
    fn principal_monomial_ideal() {
        let v = ring(&["x", "y"]);
        let i = ideal(&v, vec![var(&v, "x")]);
        assert_eq!(i.groebner_basis(), &[var(&v, "x")]);
    }

    #[test]
    fn hand_reduction_example() {
        // {y^2 + x, x} reduces to {x, y^2}: subtract x from the first
        // generator, then sort. Grevlex with x > y as given.
        let v = ring(&["x", "y"]);
        let (x, y) = (var(&v, "x"), var(&v, "y"));
        let i = ideal(&v, vec![&(&y * &y) + &x, x.clone()]);
        let expect = [x.clone(), &y * &y];
        assert_eq!(i.groebner_basis(), &expect);
        assert!(i.audit_groebner());
    }

    #[test]
    fn lex_elimination_contains_resultant_relation() {
        // (x^2 - y, x^3 - z) under lex x > y > z eliminates x; the resultant
        // of the two generators with respect to x is y^3 - z^2 (computed by
        // hand as the Sylvester determinant), and it must show up.
        let v = ring(&["x", "y", "z"]);
        let (x, y, z) = (var(&v, "x"), var(&v, "y"), var(&v, "z"));
        let i = Ideal::new(
            &v,
            MonomialOrder::Lex,
            vec![&x.pow(2) - &y, &x.pow(3) - &z],
        );
        let gb = i.groebner_basis();
        let in_yz_only: Vec<&Polynomial> = gb.iter().filter(|g| g.is_free_of(0)).collect();
        assert!(!in_yz_only.is_empty());
        let res = &y.pow(3) - &z.pow(2);
        assert!(in_yz_only.iter().any(|g| **g == res));
        assert!(i.audit_groebner());
    }

    #[test]
    fn normal_form_examples() {
        let v = ring(&["x", "y"]);
        let (x, y) = (var(&v, "x"), var(&v, "y"));
        // y^2 = (y^2 + x) - x
        let i = ideal(&v, vec![x.clone(), &(&y * &y) + &x]);
        assert!(i.normal_form(&(&y * &y)).is_zero());
        // proper ideal excludes units
        let j = ideal(&v, vec![x.clone(), y.clone()]);
        assert_eq!(j.normal_form(&Polynomial::one(&v)), Polynomial::one(&v));
        // membership of generators
        let g = &(&x * &y).pow(2) + &y;
        let k = ideal(&v, vec![g.clone()]);
        assert!(k.normal_form(&g).is_zero());
    }

    #[test]
    fn normal_form_idempotent() {
        let v = ring(&["x", "y"]);
        let (x, y) = (var(&v, "x"), var(&v, "y"));
        let i = ideal(&v, vec![&x.pow(2) - &y, &(&x * &y) - &x]);
        let p = &(&x.pow(3) + &y.pow(2)) + &Polynomial::one(&v);
        let once = i.normal_form(&p);
        assert_eq!(i.normal_form(&once), once);
    }

    #[test]
    fn ideal_equality_ignores_generator_order() {
        let v = ring(&["x", "y"]);
        let (x, y) = (var(&v, "x"), var(&v, "y"));
        let a = ideal(&v, vec![x.clone(), y.clone()]);
        let b = ideal(&v, vec![y, x.clone()]);
        assert!(a.ideal_equal(&b));
        let c = ideal(&v, vec![x.pow(2)]);
        let d = ideal(&v, vec![x]);
        assert!(!c.ideal_equal(&d));
    }

    #[test]
    fn colon_examples() {
        let v = ring(&["x", "y"]);
        let (x, y) = (var(&v, "x"), var(&v, "y"));
        // ((xy) : x) = (y)
        let i = ideal(&v, vec![&x * &y]);
        let q = i.colon(&x).unwrap();
        assert!(q.ideal_equal(&ideal(&v, vec![y.clone()])));
        // ((I) : 1) = I
        let j = ideal(&v, vec![&x.pow(2) + &y, y.clone()]);
        assert!(j.colon(&Polynomial::one(&v)).unwrap().ideal_equal(&j));
        // colon by zero is rejected
        assert!(j.colon(&Polynomial::zero(&v)).is_err());
        // every colon generator multiplies back into the ideal
        for g in q.generators() {
            assert!(i.contains(&(g * &x)));
        }
    }

    #[test]
    fn saturation_examples() {
        let v = ring(&["x", "y"]);
        let (x, y) = (var(&v, "x"), var(&v, "y"));
        // ((xy) : x^inf) = (y)
        let i = ideal(&v, vec![&x * &y]);
        let s = i.saturate(&x).unwrap();
        assert!(s.ideal_equal(&ideal(&v, vec![y.clone()])));
        // ((x^2) : x^inf) = (1)
        let u = ideal(&v, vec![x.pow(2)]).saturate(&x).unwrap();
        assert!(u.contains_one());
        // stability
        let again = s.saturate(&x).unwrap();
        assert!(again.ideal_equal(&s));
    }

    #[test]
    fn saturation_of_deformed_squares_has_no_relation_in_base_variables() {
        // f = xF + y^2, g = xG + z^2 in Q[x,y,z,F,G]: saturating by x yields
        // an ideal none of whose generators lies in Q[x,y,z] alone, checked
        // by the substitution F -> -y^2*w, G -> -z^2*w modulo (wx - 1).
        let v = ring(&["x", "y", "z", "F", "G"]);
        let (x, y, z, fv, gv) = (
            var(&v, "x"),
            var(&v, "y"),
            var(&v, "z"),
            var(&v, "F"),
            var(&v, "G"),
        );
        let f = &(&x * &fv) + &y.pow(2);
        let g = &(&x * &gv) + &z.pow(2);
        let i = ideal(&v, vec![f, g]);
        let s = i.saturate(&x).unwrap();
        assert!(!s.generators().is_empty());
        let w_ring = ring(&["x", "y", "z", "w"]);
        let w = var(&w_ring, "w");
        let y2 = var(&w_ring, "y").pow(2);
        let z2 = var(&w_ring, "z").pow(2);
        let rel = ideal(&w_ring, vec![&(&w * &var(&w_ring, "x")) - &Polynomial::one(&w_ring)]);
        for gen in s.generators() {
            // no generator in Q[x,y,z] alone
            assert!(!(gen.is_free_of(3) && gen.is_free_of(4)));
            let img = gen.substitute(&[
                (3, -&(&y2 * &w)),
                (4, -&(&z2 * &w)),
            ]);
            assert!(rel.normal_form(&img).is_zero());
        }
    }

    #[test]
    fn elimination_examples() {
        // eliminate((w x - 1, y), keep {x, y}) = (y)
        let v = ring(&["w", "x", "y"]);
        let (w, x, y) = (var(&v, "w"), var(&v, "x"), var(&v, "y"));
        let i = ideal(&v, vec![&(&w * &x) - &Polynomial::one(&v), y.clone()]);
        let e = i.eliminate(&[1, 2]);
        assert!(e.ideal_equal(&ideal(&v, vec![y.clone()])));
        // identity case
        let all: Vec<usize> = (0..3).collect();
        let id = i.eliminate(&all);
        assert_eq!(id.generators(), i.generators());
        // parametrized parabola: eliminate t from (x - t, y - t^2)
        let v2 = ring(&["x", "y", "t"]);
        let (x2, y2, t) = (var(&v2, "x"), var(&v2, "y"), var(&v2, "t"));
        let i2 = ideal(&v2, vec![&x2 - &t, &y2 - &t.pow(2)]);
        let e2 = i2.eliminate(&[0, 1]);
        // oracle: substituting t = x into the generators gives y - x^2
        let expect = ideal(&v2, vec![&y2 - &x2.pow(2)]);
        assert!(e2.ideal_equal(&expect));
    }

    #[test]
    fn krull_dimension_examples() {
        let five = ring(&["x", "y", "z", "F", "G"]);
        assert_eq!(ideal(&five, vec![]).krull_dimension(), 5);
        let v = ring(&["x", "y", "z"]);
        let i = ideal(&v, vec![var(&v, "x"), var(&v, "y")]);
        assert_eq!(i.krull_dimension(), 1);
        let unit = ideal(&v, vec![Polynomial::one(&v)]);
        assert_eq!(unit.krull_dimension(), -1);
        // deformed square pair in five variables has height two
        let (x, y, z, fv, gv) = (
            var(&five, "x"),
            var(&five, "y"),
            var(&five, "z"),
            var(&five, "F"),
            var(&five, "G"),
        );
        let f = &(&x * &fv) + &y.pow(2);
        let g = &(&x * &gv) + &z.pow(2);
        assert_eq!(ideal(&five, vec![f, g]).krull_dimension(), 3);
    }

    #[test]
    fn local_membership_examples() {
        let v = ring(&["x", "y"]);
        let (x, y) = (var(&v, "x"), var(&v, "y"));
        // x(1+y) generates an ideal containing x locally at (x, y)
        let i = ideal(&v, vec![&x * &(&Polynomial::one(&v) + &y)]);
        let m = ideal(&v, vec![x.clone(), y.clone()]);
        assert!(local_membership(&x, &i, &m).unwrap());
        // zero element is trivially a member
        assert!(local_membership(&Polynomial::zero(&v), &i, &m).unwrap());
        // the localization ideal must be coordinate
        let bad = ideal(&v, vec![&x + &y.pow(2)]);
        assert!(local_membership(&x, &i, &bad).is_err());
    }

    #[test]
    fn deterministic_across_threads_and_single_flight() {
        let v = ring(&["x", "y", "z"]);
        let (x, y, z) = (var(&v, "x"), var(&v, "y"), var(&v, "z"));
        let gens = vec![
            &(&x * &y) - &z.pow(2),
            &y.pow(2) - &(&x * &z),
            &x.pow(2) - &(&y * &z),
        ];
        let reference = ideal(&v, gens.clone()).groebner_basis().to_vec();
        let shared = std::sync::Arc::new(ideal(&v, gens));
        let handles: Vec<_> = (0..8)
            .map(|_| {
                let s = std::sync::Arc::clone(&shared);
                std::thread::spawn(move || s.groebner_basis().to_vec())
            })
            .collect();
        for h in handles {
            assert_eq!(h.join().unwrap(), reference);
        }
    }

    #[test]
    fn ideal_json_round_trip() {
        let v = ring(&["x", "y"]);
        let (x, y) = (var(&v, "x"), var(&v, "y"));
        let i = Ideal::new(&v, MonomialOrder::Lex, vec![&x.pow(2) - &y, y.mul_scalar(&rat(3))]);
        let s = serde_json::to_string(&i).unwrap();
        let j: Ideal = serde_json::from_str(&s).unwrap();
        assert_eq!(j.order(), MonomialOrder::Lex);
        assert!(i.ideal_equal(&j));
    }
}
