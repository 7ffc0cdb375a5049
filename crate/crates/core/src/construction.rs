//! Builds the d-dimensional example family at a chosen x-adic precision and
//! runs the verification suite over it.
//!
//! For dimension `d ≥ 3` set `h = d − 1`. Over `ℚ[x, y_1..y_h]` (named
//! `x, y, z` when `d = 3`) the instance carries seeded generic series
//! `α_i ∈ x·ℚ[[x]]` truncated at precision `N`, the elements
//! `f_i = (y_i − α_i)^h`, the product `ξ = Π (y_i − α_i)`, and the ideal
//! `P = (f_1, …, f_h)`. Truncated views (mod `x^N`) feed the endpiece
//! machinery; the exact polynomial expansions feed the Gröbner-side checks,
//! so that `ξ^h = Π f_i` holds identically and the reduction criterion
//! certifies integral dependence with exponent exactly `h`, while localized
//! membership refutes `ξ ∈ (P, x^n)` at every level `n ≤ N`.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::json;

use crate::certificate::{digest_value, CheckRecord, Verdict, VerificationCertificate};
use crate::closure::is_integral_over;
use crate::error::{Error, Result};
use crate::groebner::{local_membership_witness, Ideal};
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Polynomial, Rational};
use crate::series::{endpiece_recurrence_holds, GenericSeries, TruncatedElement};
use crate::varset::VarSet;

/// Check families known to the suite, in output order.
pub const CHECK_FAMILIES: [&str; 5] = [
    "endpieces",
    "integral-dependence",
    "jacobian",
    "not-integrally-closed",
    "prime-witness",
];

/// A fully built instance of the example family.
#[derive(Clone, Debug)]
pub struct ExampleInstance {
    /// Ambient dimension `d ≥ 3`.
    pub dimension: usize,
    /// `h = d − 1`, the power and the number of series.
    pub height: usize,
    /// x-adic precision `N ≥ 2`.
    pub precision: usize,
    pub seed: u64,
    pub order: MonomialOrder,
    /// `[x, y, z]` for `d = 3`, otherwise `[x, y1, …, yh]`.
    pub vars: VarSet,
    pub series: Vec<GenericSeries>,
    /// Truncated views of the `f_i` (mod `x^N`).
    pub f_trunc: Vec<TruncatedElement>,
    /// Truncated view of `ξ`.
    pub xi_trunc: TruncatedElement,
    /// Exact polynomial expansions `(y_i − α_i)^h`.
    pub f_polys: Vec<Polynomial>,
    /// Exact polynomial expansion `Π (y_i − α_i)`.
    pub xi_poly: Polynomial,
    /// `P = (f_1, …, f_h)`.
    pub prime: Ideal,
}

impl ExampleInstance {
    /// Builds the instance for `(d, N, seed)` under the given order.
    pub fn build(
        dimension: usize,
        precision: usize,
        seed: u64,
        order: MonomialOrder,
    ) -> Result<ExampleInstance> {
        if dimension < 3 {
            return Err(Error::InvalidArgument(format!(
                "dimension must be at least 3, got {dimension}"
            )));
        }
        if precision < 2 {
            return Err(Error::InvalidArgument(format!(
                "precision must be at least 2, got {precision}"
            )));
        }
        let (var_names, labels) = naming(dimension);
        let vars = VarSet::new(&var_names)?;
        let series: Vec<GenericSeries> = labels
            .iter()
            .map(|label| GenericSeries::generate(seed, label, precision))
            .collect::<Result<_>>()?;
        Self::assemble(dimension, precision, seed, order, vars, series, None, None)
    }

    /// Assembles an instance, either freshly (elements derived from the
    /// series) or from stored elements (which are trusted as given so that
    /// verification re-checks them rather than silently rebuilding).
    #[allow(clippy::too_many_arguments)]
    fn assemble(
        dimension: usize,
        precision: usize,
        seed: u64,
        order: MonomialOrder,
        vars: VarSet,
        series: Vec<GenericSeries>,
        stored_f: Option<Vec<Polynomial>>,
        stored_xi: Option<Polynomial>,
    ) -> Result<ExampleInstance> {
        let height = dimension - 1;
        if series.len() != height {
            return Err(Error::InvalidArgument(format!(
                "expected {height} series, got {}",
                series.len()
            )));
        }
        let f_polys: Vec<Polynomial> = match stored_f {
            Some(f) => f,
            None => (0..height)
                .map(|i| {
                    let alpha = series[i].as_polynomial(&vars, 0);
                    let lin = &Polynomial::variable(&vars, i + 1) - &alpha;
                    lin.pow(height as u32)
                })
                .collect(),
        };
        let xi_poly = match stored_xi {
            Some(xi) => xi,
            None => (0..height).fold(Polynomial::one(&vars), |acc, i| {
                let alpha = series[i].as_polynomial(&vars, 0);
                &acc * &(&Polynomial::variable(&vars, i + 1) - &alpha)
            }),
        };
        if f_polys.len() != height {
            return Err(Error::InvalidArgument(format!(
                "expected {height} elements, got {}",
                f_polys.len()
            )));
        }
        let f_trunc: Vec<TruncatedElement> = f_polys
            .iter()
            .map(|p| TruncatedElement::from_polynomial(p, precision))
            .collect();
        let xi_trunc = TruncatedElement::from_polynomial(&xi_poly, precision);
        let prime = Ideal::new(&vars, order, f_polys.clone());
        Ok(ExampleInstance {
            dimension,
            height,
            precision,
            seed,
            order,
            vars,
            series,
            f_trunc,
            xi_trunc,
            f_polys,
            xi_poly,
            prime,
        })
    }

    /// Display name of the `i`-th element: `f, g` when `d = 3`, else `f1…`.
    pub fn element_label(&self, i: usize) -> String {
        if self.dimension == 3 {
            ["f", "g"][i].to_string()
        } else {
            format!("f{}", i + 1)
        }
    }

    fn instance_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("instance serializes")
    }

    fn check_digest(&self, check: &str, params: serde_json::Value) -> String {
        digest_value(&json!({
            "check": check,
            "instance": digest_value(&self.instance_json()),
            "params": params,
        }))
    }

    /// Exact power identity `ξ^h = Π f_i` in the truncated ring plus the
    /// reduction witness for `ξ` over `P` with exponent exactly `h`.
    pub fn verify_integral_dependence(&self, n_max: u32) -> CheckRecord {
        let started = Instant::now();
        let xi_power = self.xi_trunc.pow(self.height as u32);
        let product = self
            .f_trunc
            .iter()
            .fold(TruncatedElement::one(&self.vars, self.precision), |acc, f| {
                acc.mul(f)
            });
        let power_identity = xi_power == product;
        let mut artifacts = serde_json::Map::new();
        artifacts.insert("power_identity".into(), json!(power_identity));
        artifacts.insert("expected_exponent".into(), json!(self.height));
        let mut ok = power_identity;
        if power_identity {
            match is_integral_over(&self.xi_poly, &self.prime, n_max) {
                Some(witness) => {
                    ok &= witness.n == self.height as u32;
                    artifacts.insert("witness".into(), json!(witness));
                }
                None => {
                    ok = false;
                    artifacts.insert("witness".into(), serde_json::Value::Null);
                    artifacts.insert("searched_up_to".into(), json!(n_max));
                }
            }
        } else {
            let difference = xi_power.sub(&product).to_polynomial();
            artifacts.insert("difference".into(), json!(difference));
            artifacts.insert("witness".into(), serde_json::Value::Null);
        }
        CheckRecord {
            name: "integral-dependence".into(),
            verdict: Verdict::from_bool(ok),
            digest: self.check_digest("integral-dependence", json!({ "n_max": n_max })),
            artifacts: serde_json::Value::Object(artifacts),
            wall_ms: started.elapsed().as_millis(),
        }
    }

    /// Localized non-membership of `ξ` in `(P, x^n)` for every level
    /// `n ∈ 2..=N`: the colon criterion must refuse membership at the
    /// coordinate maximal ideal. Together with the dependence witness this
    /// certifies that the extension of `P` fails to be integrally closed at
    /// the checked precision.
    pub fn verify_not_integrally_closed(&self) -> CheckRecord {
        let started = Instant::now();
        let m = Ideal::new(
            &self.vars,
            self.order,
            (0..self.vars.len())
                .map(|i| Polynomial::variable(&self.vars, i))
                .collect(),
        );
        let mut levels = Vec::new();
        let mut ok = true;
        for n in 2..=self.precision {
            let xn = Polynomial::term(
                &self.vars,
                Monomial::from_exponents(power_of_x(self.vars.len(), n)),
                Rational::from_integer(1.into()),
            );
            // Generators and the test element may be reduced mod x^n: the
            // discarded parts lie in (x^n) and membership is unchanged.
            let mut gens: Vec<Polynomial> = self
                .f_polys
                .iter()
                .map(|f| TruncatedElement::from_polynomial(f, n).to_polynomial())
                .collect();
            gens.push(xn);
            let level_ideal = Ideal::new(&self.vars, self.order, gens);
            let xi_n = TruncatedElement::from_polynomial(&self.xi_poly, n).to_polynomial();
            match local_membership_witness(&xi_n, &level_ideal, &m) {
                Ok((member, colon)) => {
                    ok &= !member;
                    levels.push(json!({
                        "n": n,
                        "member": member,
                        "colon_basis": colon.groebner_basis(),
                    }));
                }
                Err(e) => {
                    ok = false;
                    levels.push(json!({ "n": n, "error": e.to_string() }));
                }
            }
        }
        CheckRecord {
            name: "not-integrally-closed".into(),
            verdict: Verdict::from_bool(ok),
            digest: self.check_digest(
                "not-integrally-closed",
                json!({ "levels": [2, self.precision] }),
            ),
            artifacts: json!({ "levels": levels }),
            wall_ms: started.elapsed().as_millis(),
        }
    }

    /// The level-`r` presentation of `P` over `ℚ[x, y, z, F, G]` with
    /// `f = x^r·F + u_r·x + y²` and `g = x^r·G + v_r·x + z²`. Only defined
    /// for `d = 3`.
    pub fn prime_presentation(&self, r: usize) -> Result<PrimePresentation> {
        if self.dimension != 3 {
            return Err(Error::InvalidArgument(
                "the presentation ring is only defined in dimension 3".into(),
            ));
        }
        if r < 1 || r >= self.precision {
            return Err(Error::InvalidArgument(format!(
                "presentation level {r} outside 1..{}",
                self.precision
            )));
        }
        let ring = VarSet::new(&["x", "y", "z", "F", "G"])?;
        let dec_f = self.f_trunc[0].endpiece(r)?;
        let dec_g = self.f_trunc[1].endpiece(r)?;
        let x = Polynomial::variable(&ring, 0);
        let xr = x.pow(r as u32);
        let shift_f = dec_f.shift_part.map_vars(&ring);
        let shift_g = dec_g.shift_part.map_vars(&ring);
        let f_expr = &(&(&xr * &Polynomial::variable(&ring, 3)) + &(&shift_f * &x))
            + &dec_f.leading.map_vars(&ring);
        let g_expr = &(&(&xr * &Polynomial::variable(&ring, 4)) + &(&shift_g * &x))
            + &dec_g.leading.map_vars(&ring);
        Ok(PrimePresentation {
            r,
            ring,
            f_expr,
            g_expr,
            shift_f,
            shift_g,
            order: self.order,
        })
    }

    /// Runs the four primality-witness subchecks for level `r`; `n/a` when
    /// the dimension is not 3.
    pub fn verify_prime_witness(&self, r: usize) -> CheckRecord {
        let started = Instant::now();
        let name = format!("prime-witness-r{r}");
        if self.dimension != 3 {
            return CheckRecord {
                name: "prime-witness".into(),
                verdict: Verdict::NotApplicable,
                digest: self.check_digest("prime-witness", json!({ "r": r })),
                artifacts: json!({ "reason": "presentation requires dimension 3" }),
                wall_ms: started.elapsed().as_millis(),
            };
        }
        let record = match self
            .prime_presentation(r)
            .and_then(|pres| prime_witness_checks(&pres))
        {
            Ok(outcome) => CheckRecord {
                name,
                verdict: Verdict::from_bool(outcome.passed()),
                digest: self.check_digest("prime-witness", json!({ "r": r })),
                artifacts: outcome.into_artifacts(),
                wall_ms: started.elapsed().as_millis(),
            },
            Err(e) => CheckRecord {
                name,
                verdict: Verdict::Fail,
                digest: self.check_digest("prime-witness", json!({ "r": r })),
                artifacts: json!({ "error": e.to_string() }),
                wall_ms: started.elapsed().as_millis(),
            },
        };
        record
    }

    /// The Jacobian ideal of the coefficient extension
    /// `ℚ[x,y,z,f,g] → ℚ[x,y,z,α,β]`: the determinant of the 2×2 matrix of
    /// partials of `f, g` by `α, β` must generate `((y−α)(z−β))`. Symbolic in
    /// `α, β`; only defined for `d = 3`.
    pub fn jacobian_ideal(&self) -> (Option<Ideal>, CheckRecord) {
        let started = Instant::now();
        if self.dimension != 3 {
            return (
                None,
                CheckRecord {
                    name: "jacobian".into(),
                    verdict: Verdict::NotApplicable,
                    digest: self.check_digest("jacobian", json!({})),
                    artifacts: json!({ "reason": "jacobian check requires dimension 3" }),
                    wall_ms: started.elapsed().as_millis(),
                },
            );
        }
        let ring = VarSet::new(&["x", "y", "z", "alpha", "beta"]).expect("fixed names");
        let (det, target) = jacobian_determinant(&ring, self.height as u32);
        let multiple = det.div_exact(&target);
        let multiple_ok = multiple
            .as_ref()
            .map(|c| c.is_constant() && !c.is_zero())
            .unwrap_or(false);
        let det_ideal = Ideal::new(&ring, self.order, vec![det.clone()]);
        let target_ideal = Ideal::new(&ring, self.order, vec![target.clone()]);
        let equal = det_ideal.ideal_equal(&target_ideal);
        let record = CheckRecord {
            name: "jacobian".into(),
            verdict: Verdict::from_bool(multiple_ok && equal),
            digest: self.check_digest("jacobian", json!({})),
            artifacts: json!({
                "determinant": det,
                "target": target,
                "multiple": multiple,
                "ideal_equal": equal,
            }),
            wall_ms: started.elapsed().as_millis(),
        };
        (Some(det_ideal), record)
    }

    /// Endpiece decomposition checks at level `r` for every element:
    /// exact recomposition, tail-coefficient degree bound, and (where the
    /// next level exists) the recurrence `x·f_{r+1} = f_r − b_r`.
    pub fn verify_endpieces(&self, r: usize) -> CheckRecord {
        let started = Instant::now();
        let mut per_element = Vec::new();
        let mut ok = true;
        for (i, f) in self.f_trunc.iter().enumerate() {
            let label = self.element_label(i);
            match f.endpiece(r) {
                Ok(dec) => {
                    let identity = dec.verifies_against(f);
                    let y_index = i + 1;
                    let degree_bound = dec.tail_coeffs.iter().all(|b| {
                        b.var_degree(y_index) as usize <= self.height - 1
                            && (0..self.vars.len())
                                .all(|v| v == y_index || b.is_free_of(v))
                    });
                    let recurrence = if r + 1 < self.precision {
                        Some(endpiece_recurrence_holds(f, r).unwrap_or(false))
                    } else {
                        None
                    };
                    ok &= identity && degree_bound && recurrence.unwrap_or(true);
                    per_element.push(json!({
                        "element": label,
                        "identity": identity,
                        "degree_bound": degree_bound,
                        "recurrence": recurrence,
                        "shift_part": dec.shift_part,
                        "endpiece": dec.endpiece,
                    }));
                }
                Err(e) => {
                    ok = false;
                    per_element.push(json!({ "element": label, "error": e.to_string() }));
                }
            }
        }
        CheckRecord {
            name: format!("endpieces-r{r}"),
            verdict: Verdict::from_bool(ok),
            digest: self.check_digest("endpieces", json!({ "r": r })),
            artifacts: json!({ "elements": per_element }),
            wall_ms: started.elapsed().as_millis(),
        }
    }

    /// Runs every enabled check and aggregates a certificate. Prime-witness
    /// and Jacobian checks run only in dimension 3 and are recorded as
    /// not-applicable otherwise.
    pub fn run_suite(&self, options: &SuiteOptions) -> VerificationCertificate {
        let enabled = |family: &str| {
            options
                .enabled
                .as_ref()
                .map_or(true, |set| set.contains(family))
        };
        let r_top = options
            .r_max
            .unwrap_or_else(|| 6.min(self.precision - 1))
            .min(self.precision - 1)
            .max(1);
        let mut checks = Vec::new();
        if enabled("integral-dependence") {
            checks.push(self.verify_integral_dependence(options.n_max));
        }
        if enabled("not-integrally-closed") {
            checks.push(self.verify_not_integrally_closed());
        }
        if enabled("prime-witness") {
            if self.dimension == 3 {
                for r in 1..=r_top {
                    checks.push(self.verify_prime_witness(r));
                }
            } else {
                checks.push(self.verify_prime_witness(1));
            }
        }
        if enabled("jacobian") {
            checks.push(self.jacobian_ideal().1);
        }
        if enabled("endpieces") {
            for r in 1..=r_top {
                checks.push(self.verify_endpieces(r));
            }
        }
        VerificationCertificate::new(self.instance_json(), checks)
    }
}

fn naming(dimension: usize) -> (Vec<String>, Vec<String>) {
    let height = dimension - 1;
    if dimension == 3 {
        (
            vec!["x".into(), "y".into(), "z".into()],
            vec!["alpha".into(), "beta".into()],
        )
    } else {
        let mut vars = vec!["x".to_string()];
        vars.extend((1..=height).map(|i| format!("y{i}")));
        let labels = (1..=height).map(|i| format!("alpha{i}")).collect();
        (vars, labels)
    }
}

fn power_of_x(nvars: usize, n: usize) -> Vec<u16> {
    let mut exps = vec![0u16; nvars];
    exps[0] = n as u16;
    exps
}

/// The symbolic Jacobian determinant for `f = (y−α)^h`, `g = (z−β)^h` over
/// `[x, y, z, alpha, beta]`, together with the product
/// `(y−α)^{h−1}(z−β)^{h−1}` it must be proportional to.
fn jacobian_determinant(ring: &VarSet, h: u32) -> (Polynomial, Polynomial) {
    let y = Polynomial::variable(ring, 1);
    let z = Polynomial::variable(ring, 2);
    let alpha = Polynomial::variable(ring, 3);
    let beta = Polynomial::variable(ring, 4);
    let f = (&y - &alpha).pow(h);
    let g = (&z - &beta).pow(h);
    let df_da = f.partial_derivative(3);
    let df_db = f.partial_derivative(4);
    let dg_da = g.partial_derivative(3);
    let dg_db = g.partial_derivative(4);
    let det = &(&df_da * &dg_db) - &(&dg_da * &df_db);
    let target = &(&y - &alpha).pow(h - 1) * &(&z - &beta).pow(h - 1);
    (det, target)
}

/// The level-`r` polynomial presentation of the pair `(f, g)` over
/// `ℚ[x, y, z, F, G]`, where `F, G` stand for the endpieces.
#[derive(Clone, Debug)]
pub struct PrimePresentation {
    pub r: usize,
    pub ring: VarSet,
    pub f_expr: Polynomial,
    pub g_expr: Polynomial,
    /// `u_r`, mapped into the presentation ring.
    pub shift_f: Polynomial,
    /// `v_r`, mapped into the presentation ring.
    pub shift_g: Polynomial,
    pub order: MonomialOrder,
}

/// Outcome of the four primality-witness subchecks on a presentation.
#[derive(Clone, Debug)]
pub struct PrimeWitnessOutcome {
    /// (a) `(x, f, g) = (x, y², z²)`.
    pub leading_form_equal: bool,
    /// (b) `((f, g) : x) = (f, g)`.
    pub nonzerodivisor: bool,
    /// (c) Krull dimension of the quotient by `(f, g)` in five variables.
    pub dimension: i32,
    /// (d) every saturation generator maps to zero in `ℚ[x,y,z][1/x]` under
    /// the endpiece substitution.
    pub kernel_contained: bool,
    /// `(f, g) : x^∞ = (f, g)`, which (b) must imply.
    pub saturation_stable: bool,
    artifacts: serde_json::Value,
}

impl PrimeWitnessOutcome {
    pub fn passed(&self) -> bool {
        self.leading_form_equal
            && self.nonzerodivisor
            && self.dimension == 3
            && self.kernel_contained
            && (!self.nonzerodivisor || self.saturation_stable)
    }

    pub fn into_artifacts(self) -> serde_json::Value {
        self.artifacts
    }
}

/// Runs the primality-witness subchecks on an explicit presentation. The
/// checks mirror the proof obligations: the leading-form identity, `x` a
/// nonzerodivisor modulo `(f, g)`, height two (dimension 3 in five
/// variables), and containment of the saturation in the kernel of the map
/// onto `ℚ[x,y,z][1/x]` determined by the endpiece substitution.
pub fn prime_witness_checks(pres: &PrimePresentation) -> Result<PrimeWitnessOutcome> {
    let ring = &pres.ring;
    let x = Polynomial::variable(ring, 0);
    let y2 = Polynomial::variable(ring, 1).pow(2);
    let z2 = Polynomial::variable(ring, 2).pow(2);

    // (a) leading-form identity
    let lhs = Ideal::new(
        ring,
        pres.order,
        vec![x.clone(), pres.f_expr.clone(), pres.g_expr.clone()],
    );
    let rhs = Ideal::new(ring, pres.order, vec![x.clone(), y2.clone(), z2.clone()]);
    let leading_form_equal = lhs.ideal_equal(&rhs);

    // (b) colon stability
    let pair = Ideal::new(
        ring,
        pres.order,
        vec![pres.f_expr.clone(), pres.g_expr.clone()],
    );
    let colon = pair.colon(&x)?;
    let nonzerodivisor = colon.ideal_equal(&pair);

    // (c) height two in five variables
    let dimension = pair.krull_dimension();

    // (d) saturation lies in the kernel of F -> -(u x + y^2) w^r,
    //     G -> -(v x + z^2) w^r modulo (w x - 1)
    let saturation = pair.saturate(&x)?;
    let saturation_stable = saturation.ideal_equal(&pair);
    let target = VarSet::new(&["x", "y", "z", "w"])?;
    let w = Polynomial::variable(&target, 3);
    let wr = w.pow(pres.r as u32);
    let x_t = Polynomial::variable(&target, 0);
    let f_image = -&(&(&(&pres.shift_f.map_vars(&target) * &x_t)
        + &Polynomial::variable(&target, 1).pow(2))
        * &wr);
    let g_image = -&(&(&(&pres.shift_g.map_vars(&target) * &x_t)
        + &Polynomial::variable(&target, 2).pow(2))
        * &wr);
    let inversion = Ideal::new(
        &target,
        pres.order,
        vec![&(&w * &x_t) - &Polynomial::one(&target)],
    );
    let mut residuals = Vec::new();
    let mut kernel_contained = true;
    for gen in saturation.generators() {
        let image = gen.substitute(&[(3, f_image.clone()), (4, g_image.clone())]);
        let residual = inversion.normal_form(&image);
        kernel_contained &= residual.is_zero();
        residuals.push(residual);
    }

    let artifacts = json!({
        "leading_form": {
            "equal": leading_form_equal,
            "lhs_basis": lhs.groebner_basis(),
            "rhs_basis": rhs.groebner_basis(),
        },
        "nonzerodivisor": {
            "equal": nonzerodivisor,
            "colon_basis": colon.groebner_basis(),
        },
        "dimension": dimension,
        "kernel": {
            "contained": kernel_contained,
            "saturation_basis": saturation.groebner_basis(),
            "residuals": residuals,
        },
        "saturation_stable": saturation_stable,
    });
    Ok(PrimeWitnessOutcome {
        leading_form_equal,
        nonzerodivisor,
        dimension,
        kernel_contained,
        saturation_stable,
        artifacts,
    })
}

/// Options for [`ExampleInstance::run_suite`].
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Search bound for reduction witnesses.
    pub n_max: u32,
    /// Top presentation/endpiece level; defaults to `min(6, N−1)`.
    pub r_max: Option<usize>,
    /// Check families to run (`None` = all of [`CHECK_FAMILIES`]).
    pub enabled: Option<BTreeSet<String>>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            n_max: 10,
            r_max: None,
            enabled: None,
        }
    }
}

// ---------------------------------------------------------------------------
// Rank-4 splitting over the subring of even powers.

/// The five-variable ring `[x, y, z, s, t]` used by the freeness splitting.
pub fn split_ring() -> VarSet {
    VarSet::new(&["x", "y", "z", "s", "t"]).expect("fixed names")
}

/// Splits `p` as `c₀ + c₁·s + c₂·t + c₃·st` where every component lies in
/// the subring generated by the other variables and `s², t²` (all `s`- and
/// `t`-exponents of the components are even). Indices `s`, `t` select the
/// split variables. The decomposition is unique and recombines exactly.
pub fn freeness_decompose(p: &Polynomial, s: usize, t: usize) -> [Polynomial; 4] {
    assert!(s != t, "split variables must differ");
    let vars = p.vars().clone();
    let mut parts = [
        Polynomial::zero(&vars),
        Polynomial::zero(&vars),
        Polynomial::zero(&vars),
        Polynomial::zero(&vars),
    ];
    for (m, c) in p.terms() {
        let es = m.exponent(s);
        let et = m.exponent(t);
        let (ps, pt) = (es & 1, et & 1);
        let mut exps = m.exponents().to_vec();
        exps[s] = es - ps;
        exps[t] = et - pt;
        let idx = (ps + 2 * pt) as usize;
        parts[idx] = &parts[idx]
            + &Polynomial::term(&vars, Monomial::from_exponents(exps), c.clone());
    }
    let back = freeness_reassemble(&parts, &vars, s, t);
    assert!(back == *p, "freeness decomposition failed to recombine");
    parts
}

/// Recombines `c₀ + c₁·s + c₂·t + c₃·st`.
pub fn freeness_reassemble(
    parts: &[Polynomial; 4],
    vars: &VarSet,
    s: usize,
    t: usize,
) -> Polynomial {
    let sv = Polynomial::variable(vars, s);
    let tv = Polynomial::variable(vars, t);
    let st = &sv * &tv;
    &(&(&parts[0] + &(&parts[1] * &sv)) + &(&parts[2] * &tv)) + &(&parts[3] * &st)
}

/// Rewrites a polynomial over `[x, y, z, alpha, beta]` into the split
/// coordinates `s = y − alpha`, `t = z − beta` (so `alpha ↦ y − s`,
/// `beta ↦ z − t`) over [`split_ring`].
pub fn to_split_coordinates(p: &Polynomial) -> Polynomial {
    let target = split_ring();
    let y = Polynomial::variable(&target, 1);
    let z = Polynomial::variable(&target, 2);
    let s = Polynomial::variable(&target, 3);
    let t = Polynomial::variable(&target, 4);
    let alpha_index = p
        .vars()
        .index_of("alpha")
        .expect("source ring must contain alpha");
    let beta_index = p
        .vars()
        .index_of("beta")
        .expect("source ring must contain beta");
    p.substitute(&[(alpha_index, &y - &s), (beta_index, &z - &t)])
}

impl Serialize for ExampleInstance {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        InstanceRepr {
            d: self.dimension,
            h: self.height,
            n: self.precision,
            seed: self.seed,
            order: self.order,
            vars: self.vars.names().to_vec(),
            series: self.series.clone(),
            f: self.f_polys.clone(),
            xi: self.xi_poly.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExampleInstance {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = InstanceRepr::deserialize(deserializer)?;
        if repr.h + 1 != repr.d {
            return Err(D::Error::custom("instance has h != d - 1"));
        }
        let vars = VarSet::new(&repr.vars).map_err(D::Error::custom)?;
        if vars.len() != repr.h + 1 {
            return Err(D::Error::custom("instance variable count must be d"));
        }
        for p in repr.f.iter().chain(std::iter::once(&repr.xi)) {
            if !p.vars().same(&vars) {
                return Err(D::Error::custom(
                    "instance elements over a different variable set",
                ));
            }
        }
        ExampleInstance::assemble(
            repr.d,
            repr.n,
            repr.seed,
            repr.order,
            vars,
            repr.series,
            Some(repr.f),
            Some(repr.xi),
        )
        .map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct InstanceRepr {
    d: usize,
    h: usize,
    #[serde(rename = "N")]
    n: usize,
    seed: u64,
    order: MonomialOrder,
    vars: Vec<String>,
    series: Vec<GenericSeries>,
    f: Vec<Polynomial>,
    xi: Polynomial,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn build(d: usize, n: usize, seed: u64) -> ExampleInstance {
        ExampleInstance::build(d, n, seed, MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn build_validation() {
        assert!(ExampleInstance::build(2, 8, 1, MonomialOrder::GrevLex).is_err());
        assert!(ExampleInstance::build(3, 1, 1, MonomialOrder::GrevLex).is_err());
    }

    #[test]
    fn dimension_three_shape() {
        let inst = build(3, 4, 1);
        assert_eq!(inst.height, 2);
        assert_eq!(inst.vars.names(), &["x", "y", "z"]);
        assert_eq!(inst.series[0].label(), "alpha");
        assert_eq!(inst.series[1].label(), "beta");
        // f = (y - alpha)^2 expands exactly
        let alpha = inst.series[0].as_polynomial(&inst.vars, 0);
        let lin = &Polynomial::variable(&inst.vars, 1) - &alpha;
        assert_eq!(inst.f_polys[0], lin.pow(2));
        // xi^2 = f*g identically in the polynomial ring
        assert_eq!(
            inst.xi_poly.pow(2),
            &inst.f_polys[0] * &inst.f_polys[1]
        );
    }

    #[test]
    fn dimension_four_shape() {
        let inst = build(4, 3, 1);
        assert_eq!(inst.height, 3);
        assert_eq!(inst.vars.names(), &["x", "y1", "y2", "y3"]);
        assert_eq!(inst.series.len(), 3);
        let product = inst
            .f_polys
            .iter()
            .fold(Polynomial::one(&inst.vars), |a, f| &a * f);
        assert_eq!(inst.xi_poly.pow(3), product);
    }

    #[test]
    fn minimal_truncation_has_two_slots() {
        let inst = build(3, 2, 7);
        assert_eq!(inst.f_trunc[0].truncation(), 2);
        let y = Polynomial::variable(&inst.vars, 1);
        assert_eq!(*inst.f_trunc[0].coefficient(0), &y * &y);
        assert!(!inst.f_trunc[0].coefficient(1).is_zero());
    }

    #[test]
    fn integral_dependence_small() {
        let inst = build(3, 3, 1);
        let rec = inst.verify_integral_dependence(5);
        assert_eq!(rec.verdict, Verdict::Pass);
        assert_eq!(rec.artifacts["witness"]["n"], json!(2));
    }

    #[test]
    fn tampered_xi_fails_with_difference() {
        let mut inst = build(3, 3, 1);
        let bump = Polynomial::term(
            &inst.vars,
            Monomial::from_exponents(vec![(inst.precision - 1) as u16, 0, 0]),
            rat(1),
        );
        inst.xi_poly = &inst.xi_poly + &bump;
        inst.xi_trunc = TruncatedElement::from_polynomial(&inst.xi_poly, inst.precision);
        let rec = inst.verify_integral_dependence(3);
        assert_eq!(rec.verdict, Verdict::Fail);
        assert_eq!(rec.artifacts["power_identity"], json!(false));
        let diff: Polynomial =
            serde_json::from_value(rec.artifacts["difference"].clone()).unwrap();
        assert!(!diff.is_zero());
    }

    #[test]
    fn non_membership_ladder_small() {
        let inst = build(3, 3, 1);
        let rec = inst.verify_not_integrally_closed();
        assert_eq!(rec.verdict, Verdict::Pass);
        let levels = rec.artifacts["levels"].as_array().unwrap();
        assert_eq!(levels.len(), 2); // n = 2, 3
        for level in levels {
            assert_eq!(level["member"], json!(false));
        }
    }

    #[test]
    fn generator_is_member_at_every_level() {
        let mut inst = build(3, 3, 1);
        inst.xi_poly = inst.f_polys[0].clone();
        inst.xi_trunc = TruncatedElement::from_polynomial(&inst.xi_poly, inst.precision);
        let rec = inst.verify_not_integrally_closed();
        assert_eq!(rec.verdict, Verdict::Fail);
        for level in rec.artifacts["levels"].as_array().unwrap() {
            assert_eq!(level["member"], json!(true));
        }
    }

    #[test]
    fn prime_witness_small() {
        let inst = build(3, 4, 1);
        for r in 1..=2 {
            let rec = inst.verify_prime_witness(r);
            assert_eq!(rec.verdict, Verdict::Pass, "level {r}: {:?}", rec.artifacts);
        }
    }

    #[test]
    fn duplicated_generator_drops_dimension() {
        let inst = build(3, 4, 1);
        let mut pres = inst.prime_presentation(1).unwrap();
        pres.g_expr = pres.f_expr.clone();
        pres.shift_g = pres.shift_f.clone();
        let outcome = prime_witness_checks(&pres).unwrap();
        assert!(!outcome.passed());
        assert_eq!(outcome.dimension, 4);
    }

    #[test]
    fn jacobian_determinant_value() {
        let inst = build(3, 2, 1);
        let (ideal, rec) = inst.jacobian_ideal();
        assert_eq!(rec.verdict, Verdict::Pass);
        let ideal = ideal.unwrap();
        // determinant = 4 (y - alpha)(z - beta)
        let ring = VarSet::new(&["x", "y", "z", "alpha", "beta"]).unwrap();
        let y = Polynomial::variable(&ring, 1);
        let z = Polynomial::variable(&ring, 2);
        let a = Polynomial::variable(&ring, 3);
        let b = Polynomial::variable(&ring, 4);
        let expect = (&(&y - &a) * &(&z - &b)).mul_scalar(&rat(4));
        assert_eq!(ideal.generators()[0], expect);
        assert_eq!(rec.artifacts["multiple"]["terms"][0]["c"], json!("4"));
    }

    #[test]
    fn cubic_jacobian_is_multiple_of_squares() {
        // h = 3 analog: determinant proportional to (y-a)^2 (z-b)^2
        let ring = VarSet::new(&["x", "y", "z", "alpha", "beta"]).unwrap();
        let (det, target) = jacobian_determinant(&ring, 3);
        let q = det.div_exact(&target).unwrap();
        assert!(q.is_constant());
        assert_eq!(q.constant_term(), rat(9));
    }

    #[test]
    fn freeness_examples() {
        let ring = split_ring();
        let s = Polynomial::variable(&ring, 3);
        let t = Polynomial::variable(&ring, 4);
        let y = Polynomial::variable(&ring, 1);
        // p = s^2 is already in the subring
        let parts = freeness_decompose(&s.pow(2), 3, 4);
        assert_eq!(parts[0], s.pow(2));
        assert!(parts[1].is_zero() && parts[2].is_zero() && parts[3].is_zero());
        // p = s t is the pure mixed component
        let parts = freeness_decompose(&(&s * &t), 3, 4);
        assert_eq!(parts[3], Polynomial::one(&ring));
        assert!(parts[0].is_zero() && parts[1].is_zero() && parts[2].is_zero());
        // p = y s splits off c1 = y
        let parts = freeness_decompose(&(&y * &s), 3, 4);
        assert_eq!(parts[1], y);
        // coordinate change: alpha s = (y - s) s has c1 = y and c0 = -s^2
        let src = VarSet::new(&["x", "y", "z", "alpha", "beta"]).unwrap();
        let alpha = Polynomial::variable(&src, 3);
        let p = to_split_coordinates(&alpha); // y - s
        let parts = freeness_decompose(&p, 3, 4);
        assert_eq!(parts[0], y);
        assert_eq!(parts[1], Polynomial::constant(&ring, rat(-1)));
    }

    #[test]
    fn suite_small_and_filtering() {
        let inst = build(3, 3, 1);
        let cert = inst.run_suite(&SuiteOptions::default());
        assert!(cert.passed(), "failing: {:?}", cert.failing_checks());
        let names: Vec<&str> = cert.checks.iter().map(|c| c.name.as_str()).collect();
        assert!(names.contains(&"integral-dependence"));
        assert!(names.contains(&"prime-witness-r1"));
        assert!(names.contains(&"endpieces-r2"));
        assert!(names.contains(&"jacobian"));
        // filtering drops everything else
        let mut only = BTreeSet::new();
        only.insert("jacobian".to_string());
        let cert = inst.run_suite(&SuiteOptions {
            enabled: Some(only),
            ..Default::default()
        });
        assert_eq!(cert.checks.len(), 1);
        assert_eq!(cert.checks[0].name, "jacobian");
    }

    #[test]
    fn suite_dimension_four_marks_inapplicable() {
        let inst = build(4, 2, 1);
        let cert = inst.run_suite(&SuiteOptions {
            n_max: 4,
            ..Default::default()
        });
        assert!(cert.passed(), "failing: {:?}", cert.failing_checks());
        let pw = cert
            .checks
            .iter()
            .find(|c| c.name == "prime-witness")
            .unwrap();
        assert_eq!(pw.verdict, Verdict::NotApplicable);
        let jac = cert.checks.iter().find(|c| c.name == "jacobian").unwrap();
        assert_eq!(jac.verdict, Verdict::NotApplicable);
        let dep = cert
            .checks
            .iter()
            .find(|c| c.name == "integral-dependence")
            .unwrap();
        assert_eq!(dep.verdict, Verdict::Pass);
        assert_eq!(dep.artifacts["witness"]["n"], json!(3));
    }

    #[test]
    fn certificates_are_deterministic() {
        let a = build(3, 3, 5).run_suite(&SuiteOptions::default());
        let b = build(3, 3, 5).run_suite(&SuiteOptions::default());
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn instance_json_round_trip() {
        let inst = build(3, 4, 2);
        let text = serde_json::to_string(&inst).unwrap();
        let back: ExampleInstance = serde_json::from_str(&text).unwrap();
        assert_eq!(back.f_polys, inst.f_polys);
        assert_eq!(back.xi_poly, inst.xi_poly);
        assert_eq!(back.f_trunc, inst.f_trunc);
        assert_eq!(text, serde_json::to_string(&back).unwrap());
    }
}
