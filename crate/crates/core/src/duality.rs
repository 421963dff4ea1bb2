//! Local cohomology, Γ- and Čech-homotopy series, and the Gorenstein ↔
//! Anderson shift bookkeeping for a graded complete intersection.
//!
//! Everything is at the level of graded ranks: a series records the rank of
//! each homotopy group, and determinant twists are carried as flags only.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::graded_ring::{
    dual_series, gorenstein_shift_formula, hilbert_series, krull_dimension, GradedModuleSeries,
    RingPresentation,
};

/// Width of the window used to confirm vanishing above the shift.
pub const VANISHING_WINDOW: i64 = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("ZeroDimensional: {0} has Krull dimension 0")]
    ZeroDimensional(String),
    #[error("RegularityNotAsserted: {0} does not assert a regular sequence of relations")]
    RegularityNotAsserted(String),
}

/// How `π_*(Č_n r)` decomposes as `r_* ⊕ Σ^{a+1} r_*^∨`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Splitting {
    /// `a ≤ −2`, so `Γ_n r → r` is zero in homotopy.
    VanishingRange,
    /// `r_*` is even and `a` is even, so the dual summand is odd.
    ParityDisjoint,
    /// No splitting argument applies; the pair is an associated graded only.
    NotSplit,
}

impl Splitting {
    pub fn name(self) -> &'static str {
        match self {
            Splitting::VanishingRange => "VanishingRange",
            Splitting::ParityDisjoint => "ParityDisjoint",
            Splitting::NotSplit => "NotSplit",
        }
    }
}

impl fmt::Display for Splitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCohomology {
    pub cohomological_degree: usize,
    /// `Σ^{a+ρ} r_*^∨`.
    pub module: GradedModuleSeries,
    /// Set for polynomial rings, where the top local cohomology carries a
    /// determinant twist.
    pub det_twisted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CechHomotopy {
    pub ring_part: GradedModuleSeries,
    pub dual_part: GradedModuleSeries,
    pub splitting: Splitting,
}

fn ring_module(p: &RingPresentation) -> GradedModuleSeries {
    GradedModuleSeries::new(hilbert_series(p), "r_*")
}

fn sigma_label(k: i64, body: &str) -> String {
    format!("Σ^{{{k}}} {body}")
}

fn check_positive_dimensional(p: &RingPresentation) -> Result<usize, DualityError> {
    if !p.regular_sequence_asserted() {
        return Err(DualityError::RegularityNotAsserted(p.name().to_string()));
    }
    match krull_dimension(p) {
        0 => Err(DualityError::ZeroDimensional(p.name().to_string())),
        rho => Ok(rho),
    }
}

/// `H^ρ_n(r_*) = Σ^{a+ρ} r_*^∨`, concentrated in cohomological degree `ρ`.
pub fn local_cohomology_series(p: &RingPresentation) -> Result<LocalCohomology, DualityError> {
    let rho = check_positive_dimensional(p)?;
    let a = gorenstein_shift_formula(p);
    let k = a + rho as i64;
    let module = dual_series(&ring_module(p)).suspend(k, sigma_label(k, "r_*^∨"));
    Ok(LocalCohomology {
        cohomological_degree: rho,
        module,
        det_twisted: p.is_polynomial(),
    })
}

/// `π_*(Γ_n r) = Σ^a r_*^∨`.
pub fn gamma_homotopy(p: &RingPresentation) -> Result<GradedModuleSeries, DualityError> {
    check_positive_dimensional(p)?;
    let a = gorenstein_shift_formula(p);
    Ok(dual_series(&ring_module(p)).suspend(a, "π_*(Γ_n r)"))
}

/// The two summands of `π_*(Č_n r)` and the reason (if any) they split.
pub fn cech_homotopy(p: &RingPresentation) -> CechHomotopy {
    let a = gorenstein_shift_formula(p);
    let ring_part = ring_module(p);
    let dual_part = dual_series(&ring_part).suspend(a + 1, sigma_label(a + 1, "r_*^∨"));
    let splitting = if a <= -2 {
        Splitting::VanishingRange
    } else if ring_part.series.is_even() && a % 2 == 0 {
        Splitting::ParityDisjoint
    } else {
        Splitting::NotSplit
    };
    CechHomotopy {
        ring_part,
        dual_part,
        splitting,
    }
}

/// Homotopy of the Anderson dual of a `K`-free module: `Hom_K(π_{−*} M, K)`.
pub fn anderson_dual_homotopy(m: &GradedModuleSeries) -> GradedModuleSeries {
    dual_series(m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub presentation: RingPresentation,
    pub dim: usize,
    pub shift_a: i64,
    pub gamma_series: GradedModuleSeries,
    pub cech_ring_part: GradedModuleSeries,
    pub cech_dual_part: GradedModuleSeries,
    /// Exponent in `K^R ≃ Σ^{−a−1} R`.
    pub anderson_shift: i64,
    pub splitting: Splitting,
    pub vanishing_hypotheses_hold: bool,
}

impl DualityReport {
    /// The shift in the "Anderson self-dual of shift a+1" convention.
    pub fn anderson_display_shift(&self) -> i64 {
        self.shift_a + 1
    }

    pub fn anderson_display(&self) -> String {
        format!(
            "Anderson self-dual of shift {}",
            self.anderson_display_shift()
        )
    }

    pub fn anderson_equivalence(&self) -> String {
        format!("K^R ≃ Σ^{{{}}} R", self.anderson_shift)
    }
}

/// Whether `m` has zero rank in every degree of `from..=to`.
pub fn vanishes_on(m: &GradedModuleSeries, from: i64, to: i64) -> bool {
    m.coefficients(from, to).iter().all(Zero::is_zero)
}

pub fn duality_report(p: &RingPresentation) -> Result<DualityReport, DualityError> {
    let dim = check_positive_dimensional(p)?;
    let shift_a = gorenstein_shift_formula(p);
    let gamma_series = gamma_homotopy(p)?;
    let cech = cech_homotopy(p);
    let gamma_vanishes = vanishes_on(&gamma_series, shift_a + 1, shift_a + VANISHING_WINDOW);
    assert!(
        gamma_vanishes,
        "Γ-series of {} is nonzero above its shift",
        p.name()
    );
    Ok(DualityReport {
        presentation: p.clone(),
        dim,
        shift_a,
        gamma_series,
        cech_ring_part: cech.ring_part,
        cech_dual_part: cech.dual_part,
        anderson_shift: -shift_a - 1,
        splitting: cech.splitting,
        vanishing_hypotheses_hold: shift_a <= -2 && gamma_vanishes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{rational, HilbertSeries};

    fn ku() -> RingPresentation {
        RingPresentation::polynomial("ku", &[2]).unwrap()
    }

    fn tmf2() -> RingPresentation {
        RingPresentation::polynomial("tmf(2)", &[4, 4]).unwrap()
    }

    fn taf_d6() -> RingPresentation {
        RingPresentation::from_degrees("taf_d6", &[8, 12, 24], &[48]).unwrap()
    }

    #[test]
    fn local_cohomology_examples() {
        let lc = local_cohomology_series(&taf_d6()).unwrap();
        assert_eq!(lc.cohomological_degree, 2);
        assert_eq!(lc.module.shift, 4);
        assert!(lc.module.dualized);
        assert!(!lc.det_twisted);

        let lc = local_cohomology_series(&ku()).unwrap();
        assert_eq!(lc.cohomological_degree, 1);
        assert!(lc.det_twisted);
        assert_eq!(lc.module.support(-10, 10), vec![-10, -8, -6, -4, -2]);

        let lc = local_cohomology_series(&tmf2()).unwrap();
        assert_eq!(
            (lc.cohomological_degree, lc.module.shift, lc.det_twisted),
            (2, -8, true)
        );
    }

    #[test]
    fn zero_dimensional_is_rejected() {
        let p = RingPresentation::from_degrees("point", &[2], &[4]).unwrap();
        assert_eq!(
            local_cohomology_series(&p),
            Err(DualityError::ZeroDimensional("point".into()))
        );
        assert!(duality_report(&p).is_err());
    }

    #[test]
    fn unasserted_regularity_is_rejected() {
        let p =
            RingPresentation::new("loose", "K", ku().generators().to_vec(), vec![], false).unwrap();
        assert!(matches!(
            gamma_homotopy(&p),
            Err(DualityError::RegularityNotAsserted(_))
        ));
    }

    #[test]
    fn gamma_examples() {
        let g = gamma_homotopy(&taf_d6()).unwrap();
        assert_eq!((g.shift, g.dualized), (2, true));
        let g = gamma_homotopy(&ku()).unwrap();
        assert_eq!(g.support(-11, 5), vec![-11, -9, -7, -5, -3]);
        for d in [1u32, 3, 6] {
            let p = RingPresentation::polynomial("line", &[d]).unwrap();
            let g = gamma_homotopy(&p).unwrap();
            let d = i64::from(d);
            let expected: Vec<i64> = (1..=4).rev().map(|j| -j * d - 1).collect();
            assert_eq!(g.support(-4 * d - 1, 10), expected);
        }
    }

    #[test]
    fn gamma_is_desuspended_local_cohomology() {
        for p in [ku(), tmf2(), taf_d6()] {
            let lc = local_cohomology_series(&p).unwrap();
            let rho = lc.cohomological_degree as i64;
            let g = gamma_homotopy(&p).unwrap();
            assert_eq!(
                lc.module.coefficients(-120, 40)[..],
                g.coefficients(-120 - rho, 40 - rho)[..]
            );
        }
    }

    #[test]
    fn cech_examples() {
        let c = cech_homotopy(&taf_d6());
        assert_eq!(c.splitting, Splitting::ParityDisjoint);
        assert_eq!(c.dual_part.shift, 3);
        assert_eq!(c.dual_part.label, "Σ^{3} r_*^∨");

        let c = cech_homotopy(&tmf2());
        assert_eq!(
            (c.splitting, c.dual_part.shift),
            (Splitting::VanishingRange, -9)
        );

        let odd = RingPresentation::from_degrees("odd", &[3, 3], &[10]).unwrap();
        let c = cech_homotopy(&odd);
        assert_eq!(c.splitting, Splitting::NotSplit);
        assert_eq!(c.ring_part.series, hilbert_series(&odd));
    }

    #[test]
    fn parity_disjoint_supports_do_not_meet() {
        let c = cech_homotopy(&taf_d6());
        let ring = c.ring_part.support(-100, 100);
        let dual = c.dual_part.support(-100, 100);
        assert!(ring.iter().all(|k| k % 2 == 0));
        assert!(dual.iter().all(|k| k % 2 != 0));
    }

    #[test]
    fn anderson_dual_examples() {
        let point = GradedModuleSeries::new(HilbertSeries::one(), "K");
        assert_eq!(
            anderson_dual_homotopy(&point).coefficients(-2, 2),
            point.coefficients(-2, 2)
        );

        let r = GradedModuleSeries::new(hilbert_series(&taf_d6()), "r_*");
        let d = anderson_dual_homotopy(&r);
        assert_eq!(d.label, "r_*^∨");
        assert_eq!(d.coefficients(-60, 0), {
            let mut c = r.coefficients(0, 60);
            c.reverse();
            c
        });

        let s5 = GradedModuleSeries::new(HilbertSeries::free(&[2]), "M").suspend(5, "Σ^5 M");
        let d = anderson_dual_homotopy(&s5);
        assert_eq!(d.shift, -5);
        assert_eq!(d.coefficients(-5, -5), vec![rational(1)]);
        assert_eq!(anderson_dual_homotopy(&d), s5);
    }

    #[test]
    fn report_examples() {
        let r = duality_report(&ku()).unwrap();
        assert_eq!(
            (r.shift_a, r.anderson_shift, r.anderson_display_shift()),
            (-3, 2, -2)
        );
        assert!(r.vanishing_hypotheses_hold);
        assert_eq!(r.anderson_display(), "Anderson self-dual of shift -2");
        assert_eq!(r.anderson_equivalence(), "K^R ≃ Σ^{2} R");

        let r = duality_report(&tmf2()).unwrap();
        assert_eq!((r.shift_a, r.anderson_display_shift()), (-10, -9));

        let r = duality_report(&taf_d6()).unwrap();
        assert_eq!((r.shift_a, r.anderson_display_shift()), (2, 3));
        assert!(!r.vanishing_hypotheses_hold);
        assert_eq!(r.splitting, Splitting::ParityDisjoint);
    }
}
