//! Predicted Gorenstein and Anderson shifts for rings of invariants.
//!
//! Only the polynomial regime is covered: a polynomial base ring whose
//! invariants are again polynomial. The outputs are rational predictions.

use thiserror::Error;

use crate::graded_ring::{
    gorenstein_shift_formula, gorenstein_shift_stanley, GradedSymbol, RingPresentation,
};
use crate::invariants::{
    extract_polynomial_degrees, molien_series, solomon_supplement, verify_solomon, GradedGroupRep,
    InvariantsError, Twist,
};
use crate::series::HilbertSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescentError {
    #[error(
        "NotPolynomialBase: {0} has relations; descent prediction is out of the polynomial regime"
    )]
    NotPolynomialBase(String),
    #[error("BlockMismatch: group grading {group:?} does not match generator degrees {ring:?}")]
    BlockMismatch { group: Vec<u32>, ring: Vec<u32> },
    #[error("NotPolynomialInvariants: {0}")]
    NotPolynomialInvariants(String),
    #[error(transparent)]
    Invariants(#[from] InvariantsError),
}

#[derive(Debug, Clone)]
pub struct DescentReport {
    pub base: RingPresentation,
    pub group: GradedGroupRep,
    pub base_shift_a: i64,
    pub invariant_degrees: Vec<u32>,
    pub solomon_b: i64,
    pub descended_gorenstein_shift: i64,
    pub descended_anderson_shift: i64,
    pub solomon_verified: bool,
    pub invariant_presentation: RingPresentation,
    /// Untwisted Molien series of the action.
    pub molien: HilbertSeries,
}

pub fn descent_report(
    p: &RingPresentation,
    g: &GradedGroupRep,
) -> Result<DescentReport, DescentError> {
    if !p.is_polynomial() {
        return Err(DescentError::NotPolynomialBase(p.name().to_string()));
    }
    let ring = p.generator_degrees();
    if g.generator_degrees() != ring {
        return Err(DescentError::BlockMismatch {
            group: g.generator_degrees(),
            ring,
        });
    }
    let molien = molien_series(g, &Twist::Trivial)?.series;
    let invariant_degrees = extract_polynomial_degrees(&molien, g.dimension())
        .map_err(|e| DescentError::NotPolynomialInvariants(e.to_string()))?;
    let solomon = verify_solomon(g)?;
    let base_shift_a = gorenstein_shift_formula(p);
    let solomon_b = solomon_supplement(&ring, &invariant_degrees)?;
    let generators = invariant_degrees
        .iter()
        .enumerate()
        .map(|(i, &degree)| GradedSymbol {
            symbol: format!("f{}", i + 1),
            degree,
        })
        .collect();
    let invariant_presentation = RingPresentation::new(
        format!("{}^{}", p.name(), g.name()),
        p.coefficient_label(),
        generators,
        Vec::new(),
        true,
    )
    .expect("extracted degrees are positive and symbols distinct");
    Ok(DescentReport {
        base: p.clone(),
        group: g.clone(),
        base_shift_a,
        invariant_degrees,
        solomon_b,
        descended_gorenstein_shift: base_shift_a + solomon_b,
        descended_anderson_shift: base_shift_a + solomon_b + 1,
        solomon_verified: solomon.holds,
        invariant_presentation,
        molien,
    })
}

/// Whether the closed formula on the invariant ring and the functional
/// equation of the Molien series both give `a + b`.
pub fn cross_check_invariant_shift(report: &DescentReport) -> bool {
    let target = report.descended_gorenstein_shift;
    let by_formula = gorenstein_shift_formula(&report.invariant_presentation);
    let by_series = gorenstein_shift_stanley(&report.molien, report.invariant_degrees.len());
    by_formula == target && by_series == Ok(target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{generate_group, GradedBlock, GroupElement, RationalMatrix};
    use crate::series::rational;

    fn negation(degree: u32) -> GradedGroupRep {
        let block = GradedBlock {
            degree,
            dimension: 1,
        };
        let m = RationalMatrix::scalar(rational(-1));
        generate_group(
            "C2",
            vec![block],
            vec![("c".into(), GroupElement::new(vec![m]))],
            10,
        )
        .unwrap()
    }

    #[test]
    fn ku_descends_to_ko() {
        let ku = RingPresentation::polynomial("ku", &[2]).unwrap();
        let r = descent_report(&ku, &negation(2)).unwrap();
        assert_eq!(r.base_shift_a, -3);
        assert_eq!(r.solomon_b, -2);
        assert_eq!(r.descended_gorenstein_shift, -5);
        assert_eq!(r.descended_anderson_shift, -4);
        assert_eq!(r.invariant_degrees, vec![4]);
        assert!(r.solomon_verified);
        assert!(cross_check_invariant_shift(&r));
    }

    #[test]
    fn trivial_group_changes_nothing() {
        let p = RingPresentation::polynomial("p", &[2, 6]).unwrap();
        let blocks = vec![
            GradedBlock {
                degree: 2,
                dimension: 1,
            },
            GradedBlock {
                degree: 6,
                dimension: 1,
            },
        ];
        let g = generate_group("1", blocks, vec![], 10).unwrap();
        let r = descent_report(&p, &g).unwrap();
        assert_eq!(r.solomon_b, 0);
        assert_eq!(r.descended_gorenstein_shift, gorenstein_shift_formula(&p));
        assert_eq!(r.invariant_degrees, vec![2, 6]);
        assert!(cross_check_invariant_shift(&r));
    }

    #[test]
    fn hypersurface_and_mismatch_are_rejected() {
        let taf = RingPresentation::from_degrees("taf", &[8, 12, 24], &[48]).unwrap();
        assert!(matches!(
            descent_report(&taf, &negation(8)),
            Err(DescentError::NotPolynomialBase(_))
        ));
        let ku = RingPresentation::polynomial("ku", &[2]).unwrap();
        assert!(matches!(
            descent_report(&ku, &negation(4)),
            Err(DescentError::BlockMismatch { .. })
        ));
    }

    #[test]
    fn non_polynomial_invariants_are_rejected() {
        // −1 on a 2-dim block is not generated by reflections: invariants x^2, xy, y^2.
        let block = GradedBlock {
            degree: 2,
            dimension: 2,
        };
        let m = RationalMatrix::from_int_rows(&[&[-1, 0], &[0, -1]]).unwrap();
        let g = generate_group(
            "C2",
            vec![block],
            vec![("c".into(), GroupElement::new(vec![m]))],
            10,
        )
        .unwrap();
        let p = RingPresentation::polynomial("p", &[2, 2]).unwrap();
        assert!(matches!(
            descent_report(&p, &g),
            Err(DescentError::NotPolynomialInvariants(_))
        ));
    }
}
