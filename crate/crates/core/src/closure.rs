//! Integral dependence via the reduction criterion.
//!
//! An element `r` is integral over an ideal `I` exactly when
//! `I·J^{n−1} = J^n` for `J = (I, r)` and some positive `n`; the least such
//! `n` is returned with the Gröbner bases of both sides as a re-checkable
//! witness. Absence of a witness up to the search bound is inconclusive in
//! general and is reported as such.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::Polynomial;

/// A certified reduction `I·J^{n−1} = J^n` with `J = (I, r)`.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionWitness {
    /// The least exponent at which the criterion holds.
    pub n: u32,
    /// Generators of the extended ideal `J`.
    pub j_generators: Vec<Polynomial>,
    /// Reduced basis of `I·J^{n−1}`.
    pub product_basis: Vec<Polynomial>,
    /// Reduced basis of `J^n`.
    pub power_basis: Vec<Polynomial>,
}

/// The ideal generated by all pairwise products of generators.
pub fn ideal_product(a: &Ideal, b: &Ideal) -> Ideal {
    assert!(a.vars().same(b.vars()), "ideals over different rings");
    assert_eq!(a.order(), b.order(), "ideals under different orders");
    let mut gens = Vec::new();
    for p in a.generators() {
        for q in b.generators() {
            gens.push(p * q);
        }
    }
    canonical(a, gens)
}

/// `I^n`, with `I^0` the unit ideal.
pub fn ideal_power(i: &Ideal, n: u32) -> Ideal {
    let mut acc = Ideal::new(
        i.vars(),
        i.order(),
        vec![Polynomial::one(i.vars())],
    );
    for _ in 0..n {
        acc = ideal_product(&acc, i);
    }
    acc
}

fn canonical(like: &Ideal, mut gens: Vec<Polynomial>) -> Ideal {
    gens.sort();
    gens.dedup();
    Ideal::new(like.vars(), like.order(), gens)
}

fn extended(ideal: &Ideal, extra: &Polynomial) -> Ideal {
    let mut gens = ideal.generators().to_vec();
    gens.push(extra.clone());
    canonical(ideal, gens)
}

/// Searches `1..=n_max` for the least `n` with `I·J^{n−1} = J^n`,
/// `J = (I, r)`. Every generator of `J^n` other than `r^n` is by construction
/// a generator of `I·J^{n−1}`, so the equality at level `n` is equivalent to
/// the single membership `r^n ∈ I·J^{n−1}`; the returned witness still
/// carries both reduced bases.
pub fn is_integral_over(r: &Polynomial, ideal: &Ideal, n_max: u32) -> Option<ReductionWitness> {
    assert!(r.vars().same(ideal.vars()), "element over a different ring");
    let j = extended(ideal, r);
    for n in 1..=n_max {
        let lhs = ideal_product(ideal, &ideal_power(&j, n - 1));
        if !lhs.contains(&r.pow(n)) {
            continue;
        }
        let rhs = ideal_power(&j, n);
        let witness = ReductionWitness {
            n,
            j_generators: j.generators().to_vec(),
            product_basis: lhs.groebner_basis().to_vec(),
            power_basis: rhs.groebner_basis().to_vec(),
        };
        debug_assert!(lhs.ideal_equal(&rhs));
        return Some(witness);
    }
    None
}

/// Searches `1..=n_max` for the least `n` certifying that `inner` is a
/// reduction of `outer` (`inner·outer^{n−1} = outer^n`). Errors when some
/// generator of `inner` lies outside `outer`.
pub fn is_reduction(inner: &Ideal, outer: &Ideal, n_max: u32) -> Result<Option<ReductionWitness>> {
    assert!(inner.vars().same(outer.vars()), "ideals over different rings");
    assert_eq!(inner.order(), outer.order(), "ideals under different orders");
    for g in inner.generators() {
        if !outer.contains(g) {
            return Err(Error::InvalidArgument(format!(
                "generator {g} of the candidate reduction lies outside the larger ideal"
            )));
        }
    }
    for n in 1..=n_max {
        let lhs = ideal_product(inner, &ideal_power(outer, n - 1));
        let rhs = ideal_power(outer, n);
        // lhs ⊆ rhs holds since inner ⊆ outer; equality needs rhs ⊆ lhs.
        if rhs.generators().iter().all(|g| lhs.contains(g)) {
            let witness = ReductionWitness {
                n,
                j_generators: outer.generators().to_vec(),
                product_basis: lhs.groebner_basis().to_vec(),
                power_basis: rhs.groebner_basis().to_vec(),
            };
            debug_assert!(lhs.ideal_equal(&rhs));
            return Ok(Some(witness));
        }
    }
    Ok(None)
}
