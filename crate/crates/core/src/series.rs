//! Truncated x-adic arithmetic and seeded generic series.
//!
//! A [`TruncatedElement`] is an element of `ℚ[y,z,…][x]/(x^N)`: a list of N
//! coefficient polynomials in the non-adic variables. By convention the adic
//! variable is index 0 of the ambient variable set. A [`GenericSeries`] is a
//! reproducible stand-in for a transcendental element of `x·k[[x]]`: seeded
//! pseudo-random nonzero small-integer coefficients, no constant term.

use std::fmt;

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::{rat, Monomial, Polynomial, Rational};
use crate::varset::VarSet;

/// Seeded truncated stand-in for a transcendental series in `x·k[[x]]`.
///
/// Stored sparsely as `{j ↦ a_j}` with `1 ≤ j < N` and `a_j ≠ 0`; the
/// generated form fills every slot with an integer in `[1, 9]` and is
/// reproducible from `(seed, label, N)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenericSeries {
    label: String,
    seed: u64,
    truncation: usize,
    coeffs: BTreeMap<usize, Rational>,
}

impl GenericSeries {
    /// Deterministic generic series: coefficients `a_1..a_{N−1}` drawn
    /// uniformly from the integers `[1, 9]`, stream keyed by seed and label.
    pub fn generate(seed: u64, label: &str, truncation: usize) -> Result<GenericSeries> {
        if truncation < 2 {
            return Err(Error::InvalidArgument(format!(
                "series truncation must be at least 2, got {truncation}"
            )));
        }
        let mut hasher = Sha256::new();
        hasher.update(seed.to_le_bytes());
        hasher.update([0u8]);
        hasher.update(label.as_bytes());
        let key: [u8; 32] = hasher.finalize().into();
        let mut rng = ChaCha8Rng::from_seed(key);
        let coeffs = (1..truncation)
            .map(|j| (j, rat(rng.gen_range(1..=9))))
            .collect();
        Ok(GenericSeries {
            label: label.to_string(),
            seed,
            truncation,
            coeffs,
        })
    }

    /// Explicit-coefficient constructor for fixtures: pairs `(j, a_j)` with
    /// `1 ≤ j < N` and `a_j ≠ 0`.
    pub fn with_coefficients(
        label: &str,
        truncation: usize,
        coeffs: &[(usize, Rational)],
    ) -> Result<GenericSeries> {
        if truncation < 2 {
            return Err(Error::InvalidArgument(format!(
                "series truncation must be at least 2, got {truncation}"
            )));
        }
        let mut map = BTreeMap::new();
        for (j, a) in coeffs {
            if *j == 0 || *j >= truncation {
                return Err(Error::InvalidArgument(format!(
                    "series coefficient index {j} outside 1..{truncation}"
                )));
            }
            if a.is_zero() {
                return Err(Error::InvalidArgument(
                    "series coefficients must be nonzero".into(),
                ));
            }
            if map.insert(*j, a.clone()).is_some() {
                return Err(Error::InvalidArgument(format!(
                    "duplicate series coefficient index {j}"
                )));
            }
        }
        Ok(GenericSeries {
            label: label.to_string(),
            seed: 0,
            truncation,
            coeffs: map,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// `a_j`, zero when absent.
    pub fn coefficient(&self, j: usize) -> Rational {
        self.coeffs.get(&j).cloned().unwrap_or_else(Rational::zero)
    }

    /// The truncation `Σ_{j<N} a_j x^j` as an exact polynomial; `x` is the
    /// variable at index `x_index` of `vars`.
    pub fn as_polynomial(&self, vars: &VarSet, x_index: usize) -> Polynomial {
        let mut p = Polynomial::zero(vars);
        for (j, a) in &self.coeffs {
            let mut exps = vec![0u16; vars.len()];
            exps[x_index] = *j as u16;
            p = &p + &Polynomial::term(vars, Monomial::from_exponents(exps), a.clone());
        }
        p
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    label: String,
    seed: u64,
    #[serde(rename = "N")]
    n: usize,
    coeffs: Vec<String>,
}

impl Serialize for GenericSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            label: self.label.clone(),
            seed: self.seed,
            n: self.truncation,
            coeffs: (1..self.truncation)
                .map(|j| self.coefficient(j).to_string())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GenericSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.n < 2 {
            return Err(D::Error::custom("series truncation must be at least 2"));
        }
        if repr.coeffs.len() != repr.n - 1 {
            return Err(D::Error::custom(format!(
                "series at truncation {} needs {} coefficients, got {}",
                repr.n,
                repr.n - 1,
                repr.coeffs.len()
            )));
        }
        let mut coeffs = BTreeMap::new();
        for (k, s) in repr.coeffs.iter().enumerate() {
            let a = Rational::from_str(s)
                .map_err(|e| D::Error::custom(format!("bad coefficient `{s}`: {e}")))?;
            if !a.is_zero() {
                coeffs.insert(k + 1, a);
            }
        }
        Ok(GenericSeries {
            label: repr.label,
            seed: repr.seed,
            truncation: repr.n,
            coeffs,
        })
    }
}

/// An element of `ℚ[y,z,…][x]/(x^N)`: coefficient polynomials `c_0..c_{N−1}`
/// in the non-adic variables, with the adic variable at index 0 of the
/// shared variable set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedElement {
    vars: VarSet,
    coeffs: Vec<Polynomial>,
}

fn assert_compatible(a: &TruncatedElement, b: &TruncatedElement) {
    assert!(
        a.vars.same(&b.vars),
        "truncated elements over different variable sets"
    );
    assert_eq!(
        a.coeffs.len(),
        b.coeffs.len(),
        "truncation mismatch: {} vs {}",
        a.coeffs.len(),
        b.coeffs.len()
    );
}

impl TruncatedElement {
    pub fn zero(vars: &VarSet, truncation: usize) -> TruncatedElement {
        assert!(truncation >= 1, "truncation must be positive");
        TruncatedElement {
            vars: vars.clone(),
            coeffs: vec![Polynomial::zero(vars); truncation],
        }
    }

    pub fn one(vars: &VarSet, truncation: usize) -> TruncatedElement {
        let mut e = Self::zero(vars, truncation);
        e.coeffs[0] = Polynomial::one(vars);
        e
    }

    /// Reduces a polynomial modulo `x^N`: the term `x^j·m` lands in slot `j`.
    pub fn from_polynomial(p: &Polynomial, truncation: usize) -> TruncatedElement {
        let mut e = Self::zero(p.vars(), truncation);
        for (m, c) in p.terms() {
            let j = m.exponent(0) as usize;
            if j >= truncation {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[0] = 0;
            let t = Polynomial::term(p.vars(), Monomial::from_exponents(exps), c.clone());
            e.coeffs[j] = &e.coeffs[j] + &t;
        }
        e
    }

    /// `var − s` as a truncated element (`c_0 = var`, `c_j = −a_j`).
    pub fn shifted_linear(vars: &VarSet, var: usize, s: &GenericSeries) -> TruncatedElement {
        assert!(var != 0, "the shifted variable cannot be the adic variable");
        let n = s.truncation();
        let mut e = Self::zero(vars, n);
        e.coeffs[0] = Polynomial::variable(vars, var);
        for j in 1..n {
            let a = s.coefficient(j);
            e.coeffs[j] = Polynomial::constant(vars, -a);
        }
        e
    }

    /// `(var − s)^h` truncated at the series precision; `c_0 = var^h`.
    pub fn shifted_power(
        vars: &VarSet,
        var: usize,
        s: &GenericSeries,
        h: u32,
    ) -> TruncatedElement {
        assert!(h >= 2, "power must be at least 2");
        Self::shifted_linear(vars, var, s).pow(h)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, j: usize) -> &Polynomial {
        &self.coeffs[j]
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &TruncatedElement) -> TruncatedElement {
        assert_compatible(self, other);
        TruncatedElement {
            vars: self.vars.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &TruncatedElement) -> TruncatedElement {
        assert_compatible(self, other);
        TruncatedElement {
            vars: self.vars.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> TruncatedElement {
        TruncatedElement {
            vars: self.vars.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Exact product in `ℚ[y,z,…][x]/(x^N)`; truncations must match.
    pub fn mul(&self, other: &TruncatedElement) -> TruncatedElement {
        assert_compatible(self, other);
        let n = self.coeffs.len();
        let mut out = Self::zero(&self.vars, n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> TruncatedElement {
        let mut acc = Self::one(&self.vars, self.coeffs.len());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplication by `x^k`: slots shift up, the top `k` slots drop.
    pub fn mul_x_power(&self, k: usize) -> TruncatedElement {
        let n = self.coeffs.len();
        let mut out = Self::zero(&self.vars, n);
        for j in 0..n.saturating_sub(k) {
            out.coeffs[j + k] = self.coeffs[j].clone();
        }
        out
    }

    /// Reassembles `Σ c_j x^j` as an exact polynomial.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::zero(&self.vars);
        let x = Monomial::variable(self.vars.len(), 0);
        let mut xj = Monomial::one(self.vars.len());
        for c in &self.coeffs {
            p = &p + &c.mul_term(&xj, &num_traits::One::one());
            xj = xj.mul(&x);
        }
        p
    }

    /// Endpiece decomposition at level `r`: writes the element as
    /// `x^r·e_r + u_r·x + c_0` with `e_r` carrying the tail coefficients
    /// `b_{r+j}` and `u_r = Σ_{j=1}^{r−1} b_j x^{j−1}`.
    pub fn endpiece(&self, r: usize) -> Result<EndpieceDecomposition> {
        let n = self.coeffs.len();
        if r < 1 || r >= n {
            return Err(Error::InvalidArgument(format!(
                "endpiece level {r} outside 1..{n}"
            )));
        }
        let mut tail = Self::zero(&self.vars, n);
        for j in 0..(n - r) {
            tail.coeffs[j] = self.coeffs[r + j].clone();
        }
        let x = Monomial::variable(self.vars.len(), 0);
        let mut shift_part = Polynomial::zero(&self.vars);
        let mut xj = Monomial::one(self.vars.len());
        for j in 1..r {
            // b_j x^{j-1}
            shift_part = &shift_part + &self.coeffs[j].mul_term(&xj, &num_traits::One::one());
            xj = xj.mul(&x);
        }
        Ok(EndpieceDecomposition {
            r,
            endpiece: tail,
            shift_part,
            leading: self.coeffs[0].clone(),
            tail_coeffs: self.coeffs[1..].to_vec(),
        })
    }
}

impl fmt::Display for TruncatedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod x^{})", self.to_polynomial(), self.truncation())
    }
}

impl Serialize for TruncatedElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<Polynomial>::deserialize(deserializer)?;
        let first = coeffs
            .first()
            .ok_or_else(|| D::Error::custom("truncated element needs at least one slot"))?;
        let vars = first.vars().clone();
        for c in &coeffs {
            if !c.vars().same(&vars) {
                return Err(D::Error::custom("slots over different variable sets"));
            }
            if !c.is_free_of(0) {
                return Err(D::Error::custom(
                    "slot coefficients must be free of the adic variable",
                ));
            }
        }
        Ok(TruncatedElement { vars, coeffs })
    }
}

/// The level-`r` endpiece decomposition `e = x^r·e_r + u_r·x + leading`.
#[derive(Clone, Debug, Serialize)]
pub struct EndpieceDecomposition {
    pub r: usize,
    /// The endpiece `e_r` (tail coefficients shifted down by `r`).
    pub endpiece: TruncatedElement,
    /// `u_r = Σ_{j=1}^{r−1} b_j x^{j−1}`.
    pub shift_part: Polynomial,
    /// The x-free part `c_0`.
    pub leading: Polynomial,
    /// The tail coefficients `b_1..b_{N−1}`.
    pub tail_coeffs: Vec<Polynomial>,
}

impl EndpieceDecomposition {
    /// Rebuilds `x^r·e_r + u_r·x + leading` at the original truncation.
    pub fn recompose(&self) -> TruncatedElement {
        let n = self.endpiece.truncation();
        let x = Polynomial::variable(self.endpiece.vars(), 0);
        let low = &(&self.shift_part * &x) + &self.leading;
        self.endpiece
            .mul_x_power(self.r)
            .add(&TruncatedElement::from_polynomial(&low, n))
    }

    /// Exactness of the decomposition against the original element.
    pub fn verifies_against(&self, original: &TruncatedElement) -> bool {
        self.recompose() == *original
    }
}

/// The defining recurrence between consecutive endpieces:
/// `x·e_{r+1} = e_r − b_r` at matching precision.
pub fn endpiece_recurrence_holds(e: &TruncatedElement, r: usize) -> Result<bool> {
    let n = e.truncation();
    if r + 1 >= n {
        return Err(Error::InvalidArgument(format!(
            "recurrence needs r + 1 < {n}, got r = {r}"
        )));
    }
    let dr = e.endpiece(r)?;
    let dr1 = e.endpiece(r + 1)?;
    let lhs = dr1.endpiece.mul_x_power(1);
    let br = TruncatedElement::from_polynomial(e.coefficient(r), n);
    let rhs = dr.endpiece.sub(&br);
    Ok(lhs == rhs)
}
