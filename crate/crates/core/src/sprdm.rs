//! One-body reduced density kernel rho(x, x') of the trapped pair, for a
//! single eigenstate or a canonical thermal mixture.
//!
//! Everything rests on one factorization. The two-body eigenfunctions are
//! products phi_n(X) psi_nu(x_rel) and the total energy is additive, so the
//! Boltzmann weight of (n, nu) is a product of marginal weights. The kernel
//!
//!   rho(x, x') = sum_{n,nu} P_{n nu} int Psi(x, t) Psi(x', t) dt
//!
//! then collapses to int Kc * Kr dt, where Kc is the thermally weighted
//! center-of-mass kernel (a sum over n only) and Kr the relative one (a sum
//! over nu only), both evaluated at arguments derived from (x, x', t). That
//! turns a sum over hundreds of states into two short dot products per
//! quadrature node.
//!
//! The x_2 integrand has derivative kinks where the relative coordinate
//! crosses the contact cusp, i.e. at t = x and t = x'; every quadrature
//! below splits panels there.

use crate::quad::{self, GaussLegendre, QuadError};
use crate::specfun::{self, SpecFunError};
use crate::twoboson::{self, Coupling, EigenPair, RelativeState, TwoBosonError};
use nalgebra::DMatrix;
use std::cell::RefCell;
use std::f64::consts::SQRT_2;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SprdmError {
    #[error("temperature must be nonnegative and finite, got {0}")]
    BadTemperature(f64),
    #[error("tail tolerance must lie in (0, 1), got {0}")]
    BadTailTol(f64),
    #[error("thermal truncation needs {axis} {needed}, beyond the supported cap {cap}")]
    SpectrumTooShort {
        axis: &'static str,
        needed: usize,
        cap: usize,
    },
    #[error("center-of-mass index {n} exceeds the supported cap {cap}")]
    ComCapExceeded { n: usize, cap: usize },
    #[error("grid must be strictly increasing, violated at index {index}")]
    GridNotIncreasing { index: usize },
    #[error(transparent)]
    TwoBoson(#[from] TwoBosonError),
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

/// Highest relative level the confluent-function evaluator supports.
const NU_CAP: usize = 29;
/// Highest center-of-mass oscillator index (Hermite recurrence range).
const N_COM_CAP: usize = 200;

pub const DEFAULT_TAIL_TOL: f64 = 1e-8;
pub const DEFAULT_ABS_TOL: f64 = 1e-10;

/// One product eigenstate of the pair: oscillator index of the center of
/// mass, the relative level, and the total energy n + 1/2 + E_rel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductState {
    pub n_com: usize,
    pub rel: EigenPair,
    pub energy: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalTerm {
    pub state: ProductState,
    pub weight: f64,
}

/// Truncation provenance: what was kept and a certified bound on what was
/// not.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutoffReport {
    pub included: usize,
    pub n_max: usize,
    pub nu_max: usize,
    /// Upper bound on the total Boltzmann weight of all omitted states,
    /// relative to the included partition sum. Geometric: the center-of-mass
    /// ladder has exact unit spacing and every relative level nu lies above
    /// 1/2 + 2 nu.
    pub omitted_weight_bound: f64,
}

/// Canonical mixture over pair eigenstates at temperature T, truncated where
/// exp(-(E - E_ground)/T) falls below a tail tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct ThermalEnsemble {
    pub coupling: Coupling,
    pub temperature: f64,
    /// All included states with normalized weights, ascending in energy.
    pub terms: Vec<ThermalTerm>,
    /// Marginal weight of each center-of-mass index; sums to 1.
    pub com_weights: Vec<f64>,
    /// Marginal weight of each relative level; sums to 1.
    pub rel_weights: Vec<f64>,
    /// Relative levels 0..=nu_max backing `rel_weights`.
    pub rel_levels: Vec<EigenPair>,
    pub e_ground: f64,
    /// Included partition sum with energies measured from the ground state.
    pub z_shifted: f64,
    pub cutoff: CutoffReport,
}

impl ThermalEnsemble {
    pub fn build(
        coupling: Coupling,
        temperature: f64,
        tail_tol: f64,
    ) -> Result<ThermalEnsemble, SprdmError> {
        if !(temperature >= 0.0) || !temperature.is_finite() {
            return Err(SprdmError::BadTemperature(temperature));
        }
        if !(tail_tol > 0.0 && tail_tol < 1.0) {
            return Err(SprdmError::BadTailTol(tail_tol));
        }
        let coupling = coupling.validated()?;
        let e0_rel = twoboson::relative_energy(coupling, 0)?;
        if temperature == 0.0 {
            let rel = EigenPair {
                nu: 0,
                energy: e0_rel,
            };
            return Ok(ThermalEnsemble {
                coupling,
                temperature,
                terms: vec![ThermalTerm {
                    state: ProductState {
                        n_com: 0,
                        rel,
                        energy: 0.5 + e0_rel,
                    },
                    weight: 1.0,
                }],
                com_weights: vec![1.0],
                rel_weights: vec![1.0],
                rel_levels: vec![rel],
                e_ground: 0.5 + e0_rel,
                z_shifted: 1.0,
                cutoff: CutoffReport {
                    included: 1,
                    n_max: 0,
                    nu_max: 0,
                    omitted_weight_bound: 0.0,
                },
            });
        }

        // energy window above the ground state that survives the tolerance
        let window = -temperature * tail_tol.ln();
        let n_max = window.floor() as usize;
        if n_max > N_COM_CAP {
            return Err(SprdmError::SpectrumTooShort {
                axis: "center-of-mass index",
                needed: n_max,
                cap: N_COM_CAP,
            });
        }
        let mut rel_levels = vec![EigenPair {
            nu: 0,
            energy: e0_rel,
        }];
        loop {
            let nu = rel_levels.len();
            // every level obeys E_nu > 1/2 + 2 nu, so if even that floor is
            // outside the window the level (and all later ones) is excluded
            if 0.5 + 2.0 * nu as f64 - e0_rel > window {
                break;
            }
            if nu > NU_CAP {
                return Err(SprdmError::SpectrumTooShort {
                    axis: "relative level",
                    needed: nu,
                    cap: NU_CAP,
                });
            }
            let energy = twoboson::relative_energy(coupling, nu)?;
            if energy - e0_rel > window {
                break;
            }
            rel_levels.push(EigenPair { nu, energy });
        }
        let nu_max = rel_levels.len() - 1;

        let com_raw: Vec<f64> = (0..=n_max)
            .map(|n| (-(n as f64) / temperature).exp())
            .collect();
        let s_com: f64 = com_raw.iter().sum();
        let rel_raw: Vec<f64> = rel_levels
            .iter()
            .map(|p| (-(p.energy - e0_rel) / temperature).exp())
            .collect();
        let s_rel: f64 = rel_raw.iter().sum();
        let com_weights: Vec<f64> = com_raw.iter().map(|w| w / s_com).collect();
        let rel_weights: Vec<f64> = rel_raw.iter().map(|w| w / s_rel).collect();
        let z_shifted = s_com * s_rel;

        let com_tail =
            (-((n_max + 1) as f64) / temperature).exp() / (1.0 - (-1.0 / temperature).exp());
        let rel_tail = (-(0.5 + 2.0 * (nu_max + 1) as f64 - e0_rel) / temperature).exp()
            / (1.0 - (-2.0 / temperature).exp());
        let omitted_weight_bound =
            (com_tail * (s_rel + rel_tail) + s_com * rel_tail) / z_shifted;

        let mut terms = Vec::with_capacity((n_max + 1) * (nu_max + 1));
        for (n, &cw) in com_weights.iter().enumerate() {
            for (k, &rw) in rel_weights.iter().enumerate() {
                terms.push(ThermalTerm {
                    state: ProductState {
                        n_com: n,
                        rel: rel_levels[k],
                        energy: n as f64 + 0.5 + rel_levels[k].energy,
                    },
                    weight: cw * rw,
                });
            }
        }
        terms.sort_by(|a, b| {
            a.state
                .energy
                .partial_cmp(&b.state.energy)
                .unwrap()
                .then(a.state.n_com.cmp(&b.state.n_com))
        });

        Ok(ThermalEnsemble {
            coupling,
            temperature,
            cutoff: CutoffReport {
                included: terms.len(),
                n_max,
                nu_max,
                omitted_weight_bound,
            },
            terms,
            com_weights,
            rel_weights,
            rel_levels,
            e_ground: 0.5 + e0_rel,
            z_shifted,
        })
    }

    /// Truncated partition function with the ground-state energy restored;
    /// underflows to zero for very cold ensembles (the weights never do,
    /// they are computed relative to the ground state).
    pub fn partition_function(&self) -> f64 {
        self.z_shifted * (-self.e_ground / self.temperature).exp()
    }
}

/// Normalized Boltzmann weights over an explicit finite level list. T = 0
/// concentrates on the minimal energy, shared equally among exact ties.
pub fn boltzmann_weights(temperature: f64, energies: &[f64]) -> Vec<f64> {
    if energies.is_empty() {
        return Vec::new();
    }
    let e0 = energies.iter().cloned().fold(f64::INFINITY, f64::min);
    if temperature == 0.0 {
        let ties = energies.iter().filter(|&&e| e == e0).count();
        return energies
            .iter()
            .map(|&e| if e == e0 { 1.0 / ties as f64 } else { 0.0 })
            .collect();
    }
    let raw: Vec<f64> = energies
        .iter()
        .map(|&e| (-(e - e0) / temperature).exp())
        .collect();
    let z: f64 = raw.iter().sum();
    raw.iter().map(|w| w / z).collect()
}

/// Kernel evaluator over one eigenstate or a thermal mixture.
///
/// Immutable after construction; evaluation allocates only local scratch, so
/// shared references may be used from multiple threads.
#[derive(Debug, Clone)]
pub struct SprdmEvaluator {
    coupling: Coupling,
    com_w: Vec<f64>,
    com_sqrt: Vec<f64>,
    rel_w: Vec<f64>,
    rel_sqrt: Vec<f64>,
    /// May hold more states than `rel_w` entries when shared across a
    /// temperature family; only the first rel_w.len() participate.
    rel_states: Arc<Vec<RelativeState>>,
    ensemble: Option<ThermalEnsemble>,
    abs_tol: f64,
    rel_radius: f64,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl SprdmEvaluator {
    fn from_parts(
        coupling: Coupling,
        com_w: Vec<f64>,
        rel_w: Vec<f64>,
        rel_states: Arc<Vec<RelativeState>>,
        ensemble: Option<ThermalEnsemble>,
    ) -> SprdmEvaluator {
        let rel_radius = rel_states[..rel_w.len()]
            .iter()
            .map(|s| s.x_max)
            .fold(0.0, f64::max);
        SprdmEvaluator {
            coupling,
            com_sqrt: com_w.iter().map(|w| w.sqrt()).collect(),
            com_w,
            rel_sqrt: rel_w.iter().map(|w| w.sqrt()).collect(),
            rel_w,
            rel_states,
            ensemble,
            abs_tol: DEFAULT_ABS_TOL,
            rel_radius,
        }
    }

    /// Kernel of the single eigenstate (n_com, pair).
    pub fn pure(
        coupling: Coupling,
        n_com: usize,
        pair: EigenPair,
    ) -> Result<SprdmEvaluator, SprdmError> {
        if n_com > N_COM_CAP {
            return Err(SprdmError::ComCapExceeded {
                n: n_com,
                cap: N_COM_CAP,
            });
        }
        let state = RelativeState::from_energy(pair.nu, pair.energy)?;
        let mut com_w = vec![0.0; n_com + 1];
        com_w[n_com] = 1.0;
        Ok(SprdmEvaluator::from_parts(
            coupling,
            com_w,
            vec![1.0],
            Arc::new(vec![state]),
            None,
        ))
    }

    /// Ground-state kernel, the T = 0 limit.
    pub fn ground(coupling: Coupling) -> Result<SprdmEvaluator, SprdmError> {
        let energy = twoboson::relative_energy(coupling, 0)?;
        SprdmEvaluator::pure(coupling, 0, EigenPair { nu: 0, energy })
    }

    /// Thermal kernel at one temperature.
    pub fn thermal(
        coupling: Coupling,
        temperature: f64,
        tail_tol: f64,
    ) -> Result<SprdmEvaluator, SprdmError> {
        Ok(SprdmEvaluator::thermal_family(coupling, &[temperature], tail_tol)?
            .pop()
            .expect("one temperature in, one evaluator out"))
    }

    /// Thermal kernels for several temperatures at one coupling, sharing the
    /// relative eigenstate interpolants (the expensive part) across the set.
    pub fn thermal_family(
        coupling: Coupling,
        temperatures: &[f64],
        tail_tol: f64,
    ) -> Result<Vec<SprdmEvaluator>, SprdmError> {
        let ensembles: Vec<ThermalEnsemble> = temperatures
            .iter()
            .map(|&t| ThermalEnsemble::build(coupling, t, tail_tol))
            .collect::<Result<_, _>>()?;
        let widest = ensembles
            .iter()
            .max_by_key(|e| e.rel_levels.len())
            .expect("nonempty temperature list");
        let states: Vec<RelativeState> = widest
            .rel_levels
            .iter()
            .map(|p| RelativeState::from_energy(p.nu, p.energy))
            .collect::<Result<_, _>>()?;
        let states = Arc::new(states);
        Ok(ensembles
            .into_iter()
            .map(|ens| {
                SprdmEvaluator::from_parts(
                    coupling,
                    ens.com_weights.clone(),
                    ens.rel_weights.clone(),
                    states.clone(),
                    Some(ens),
                )
            })
            .collect())
    }

    /// Build from an externally constructed ensemble.
    pub fn from_ensemble(ens: ThermalEnsemble) -> Result<SprdmEvaluator, SprdmError> {
        let states: Vec<RelativeState> = ens
            .rel_levels
            .iter()
            .map(|p| RelativeState::from_energy(p.nu, p.energy))
            .collect::<Result<_, _>>()?;
        Ok(SprdmEvaluator::from_parts(
            ens.coupling,
            ens.com_weights.clone(),
            ens.rel_weights.clone(),
            Arc::new(states),
            Some(ens),
        ))
    }

    /// Replace the default absolute quadrature tolerance (1e-10).
    pub fn with_abs_tol(mut self, abs_tol: f64) -> SprdmEvaluator {
        self.abs_tol = abs_tol;
        self
    }

    pub fn coupling(&self) -> Coupling {
        self.coupling
    }

    pub fn ensemble(&self) -> Option<&ThermalEnsemble> {
        self.ensemble.as_ref()
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    /// Truncation radius of the relative factor; the two-body integrand is
    /// identically zero once |x - x_2| exceeds sqrt(2) times this.
    pub fn rel_radius(&self) -> f64 {
        self.rel_radius
    }

    pub(crate) fn com_dim(&self) -> usize {
        self.com_w.len()
    }

    pub(crate) fn rel_dim(&self) -> usize {
        self.rel_w.len()
    }

    /// Largest spatial angular frequency present in either factor, in the
    /// x_2 variable; panel widths for fixed-rule quadrature scale off this.
    pub(crate) fn max_freq(&self) -> f64 {
        let kc = (2.0 * (self.com_w.len() as f64 - 1.0) + 1.0).sqrt();
        let e_rel = self.rel_states[..self.rel_w.len()]
            .iter()
            .map(|s| s.energy)
            .fold(0.5, f64::max);
        (kc + (2.0 * e_rel).sqrt()) / SQRT_2
    }

    /// Fill sqrt-weighted factor rows at particle position x and integration
    /// variable t: com_out[n] = sqrt(p_n) phi_n((x+t)/sqrt2), rel_out[k] =
    /// sqrt(q_k) psi_k((x-t)/sqrt2). Returns false (rows zeroed) when the
    /// point is outside the relative support.
    pub(crate) fn fill_sqrt_rows(
        &self,
        x: f64,
        t: f64,
        com_out: &mut [f64],
        rel_out: &mut [f64],
    ) -> bool {
        let r = (x - t) / SQRT_2;
        if r.abs() > self.rel_radius {
            com_out.fill(0.0);
            rel_out.fill(0.0);
            return false;
        }
        for (k, out) in rel_out.iter_mut().enumerate() {
            *out = self.rel_sqrt[k] * self.rel_states[k].eval(r);
        }
        specfun::hermite_function_row((x + t) / SQRT_2, com_out);
        for (n, out) in com_out.iter_mut().enumerate() {
            *out *= self.com_sqrt[n];
        }
        true
    }

    /// Kernel value by adaptive quadrature over the traced coordinate, with
    /// panel splits at the two contact-cusp loci.
    pub fn eval(&self, x: f64, xp: f64) -> Result<f64, SprdmError> {
        self.eval_with_tol(x, xp, self.abs_tol)
    }

    pub fn eval_with_tol(&self, x: f64, xp: f64, abs_tol: f64) -> Result<f64, SprdmError> {
        let sup = SQRT_2 * self.rel_radius;
        let lo = x.max(xp) - sup;
        let hi = x.min(xp) + sup;
        if lo >= hi {
            return Ok(0.0);
        }
        let nc = self.com_dim();
        let nr = self.rel_dim();
        let scratch = RefCell::new((vec![0.0; nc], vec![0.0; nc], vec![0.0; nr], vec![0.0; nr]));
        let f = |t: f64| {
            let (c1, c2, r1, r2) = &mut *scratch.borrow_mut();
            if !self.fill_sqrt_rows(x, t, c1, r1) {
                return 0.0;
            }
            if !self.fill_sqrt_rows(xp, t, c2, r2) {
                return 0.0;
            }
            let kr = dot(r1, r2);
            if kr == 0.0 {
                return 0.0;
            }
            dot(c1, c2) * kr
        };
        let res = quad::integrate_split(f, lo, hi, abs_tol, &[x, xp])?;
        Ok(res.value)
    }

    /// Diagonal support radius: beyond this both factors have left their
    /// truncation windows and the density is numerically zero.
    pub fn trace_radius(&self) -> f64 {
        let com_r = (2.0 * self.com_w.len() as f64 - 1.0).sqrt() + 6.0;
        (com_r + self.rel_radius) / SQRT_2
    }

    /// Integral of the diagonal; 1 for any properly normalized source.
    pub fn trace(&self) -> Result<f64, SprdmError> {
        let r = self.trace_radius();
        let failure: RefCell<Option<SprdmError>> = RefCell::new(None);
        let res = quad::integrate(
            |x| match self.eval(x, x) {
                Ok(v) => v,
                Err(e) => {
                    failure.borrow_mut().get_or_insert(e);
                    f64::NAN
                }
            },
            -r,
            r,
            1e-9,
        );
        if let Some(e) = failure.into_inner() {
            return Err(e);
        }
        Ok(res?.value)
    }

    /// Kernel values on all pairs of a strictly increasing grid, symmetric by
    /// construction (each unordered pair computed once).
    ///
    /// Fixed-panel route: one shared Gauss-Legendre subdivision of the traced
    /// coordinate whose panel boundaries include every grid point, so each
    /// entry's cusps land on panel edges and every panel integrand is
    /// analytic. Rows are filled once per (grid point, node) and reused
    /// across all pairs.
    pub fn grid(&self, pts: &[f64]) -> Result<DMatrix<f64>, SprdmError> {
        for i in 1..pts.len() {
            if !(pts[i] > pts[i - 1]) {
                return Err(SprdmError::GridNotIncreasing { index: i });
            }
        }
        let m = pts.len();
        if m == 0 {
            return Ok(DMatrix::zeros(0, 0));
        }
        let sup = SQRT_2 * self.rel_radius;
        let lo = pts[0] - sup;
        let hi = pts[m - 1] + sup;
        let width = (4.0 / self.max_freq()).min(0.75);
        let mut cuts = Vec::with_capacity(m + 2);
        cuts.push(lo);
        cuts.extend_from_slice(pts);
        cuts.push(hi);
        let rule = GaussLegendre::new(12);
        let mut nodes: Vec<(f64, f64)> = Vec::new();
        for w in cuts.windows(2) {
            let len = w[1] - w[0];
            let panels = ((len / width).ceil() as usize).max(1);
            for j in 0..panels {
                let a = w[0] + len * j as f64 / panels as f64;
                let b = w[0] + len * (j + 1) as f64 / panels as f64;
                nodes.extend(rule.mapped(a, b));
            }
        }

        let nc = self.com_dim();
        let nr = self.rel_dim();
        let mut g = DMatrix::zeros(m, m);
        let mut crows = vec![0.0; nc * m];
        let mut rrows = vec![0.0; nr * m];
        let mut live = vec![false; m];
        for &(t, wt) in &nodes {
            for (i, &x) in pts.iter().enumerate() {
                live[i] = self.fill_sqrt_rows(
                    x,
                    t,
                    &mut crows[i * nc..(i + 1) * nc],
                    &mut rrows[i * nr..(i + 1) * nr],
                );
            }
            for i in 0..m {
                if !live[i] {
                    continue;
                }
                for j in i..m {
                    if !live[j] {
                        continue;
                    }
                    let kr = dot(&rrows[i * nr..(i + 1) * nr], &rrows[j * nr..(j + 1) * nr]);
                    if kr == 0.0 {
                        continue;
                    }
                    let kc = dot(&crows[i * nc..(i + 1) * nc], &crows[j * nc..(j + 1) * nc]);
                    g[(i, j)] += wt * kc * kr;
                }
            }
        }
        for i in 0..m {
            for j in 0..i {
                g[(i, j)] = g[(j, i)];
            }
        }
        Ok(g)
    }
}
