//! Rational character tables, symmetric-power characters and decomposition.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::group::GradedGroupRep;
use super::InvariantsError;
use crate::series::rational;

/// Values of a class function, one per class in the group's class order.
pub type ClassFunction = Vec<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Irreducible {
    pub name: String,
    pub values: ClassFunction,
}

/// Rational-valued irreducible characters of a group, aligned with
/// [`GradedGroupRep::classes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCharacterTable {
    pub class_representatives: Vec<usize>,
    pub class_sizes: Vec<usize>,
    pub irreducibles: Vec<Irreducible>,
}

impl RationalCharacterTable {
    /// Builds a table from rows given on arbitrary class representatives,
    /// reordering columns to the group's class order and checking
    /// orthonormality.
    pub fn new(
        group: &GradedGroupRep,
        representatives: &[usize],
        sizes: &[usize],
        irreducibles: Vec<Irreducible>,
    ) -> Result<Self, InvariantsError> {
        let invalid = |msg: String| Err(InvariantsError::InvalidCharacterTable(msg));
        let classes = group.classes();
        if representatives.len() != classes.len() || sizes.len() != classes.len() {
            return invalid(format!(
                "{} classes supplied, group has {}",
                representatives.len(),
                classes.len()
            ));
        }
        if irreducibles.iter().any(|r| r.values.len() != classes.len()) {
            return invalid("a character row has the wrong length".into());
        }
        // column j of the input lands in class permutation[j]
        let mut permutation = Vec::with_capacity(classes.len());
        for (&rep, &size) in representatives.iter().zip(sizes) {
            if rep >= group.order() {
                return invalid(format!("element index {rep} out of range"));
            }
            let c = group.class_of(rep);
            if permutation.contains(&c) {
                return invalid("two representatives lie in the same class".into());
            }
            if classes[c].len() != size {
                return invalid(format!(
                    "class of element {rep} has size {}, table says {size}",
                    classes[c].len()
                ));
            }
            permutation.push(c);
        }
        let reorder = |v: &[BigRational]| {
            let mut out = vec![BigRational::zero(); v.len()];
            for (j, x) in v.iter().enumerate() {
                out[permutation[j]] = x.clone();
            }
            out
        };
        let table = Self {
            class_representatives: classes.iter().map(|c| c[0]).collect(),
            class_sizes: classes.iter().map(Vec::len).collect(),
            irreducibles: irreducibles
                .into_iter()
                .map(|r| Irreducible {
                    values: reorder(&r.values),
                    name: r.name,
                })
                .collect(),
        };
        table.check_orthonormal()?;
        Ok(table)
    }

    pub fn group_order(&self) -> usize {
        self.class_sizes.iter().sum()
    }

    /// `(1/|G|) Σ_classes size · χ · ψ`.
    pub fn inner_product(&self, chi: &[BigRational], psi: &[BigRational]) -> BigRational {
        let total: BigRational = self
            .class_sizes
            .iter()
            .zip(chi.iter().zip(psi))
            .map(|(&s, (a, b))| rational(s as i64) * a * b)
            .sum();
        total / rational(self.group_order() as i64)
    }

    fn check_orthonormal(&self) -> Result<(), InvariantsError> {
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate() {
                let expected = if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                if self.inner_product(&a.values, &b.values) != expected {
                    return Err(InvariantsError::InvalidCharacterTable(format!(
                        "characters {} and {} violate orthogonality",
                        a.name, b.name
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn names(&self) -> Vec<&str> {
        self.irreducibles.iter().map(|r| r.name.as_str()).collect()
    }

    pub fn character(&self, name: &str) -> Option<&ClassFunction> {
        self.irreducibles
            .iter()
            .find(|r| r.name == name)
            .map(|r| &r.values)
    }
}

/// Names accepted by [`builtin_table`].
pub const BUILTIN_TABLES: &[&str] = &["C2", "C2xC2", "S3"];

fn ints(v: &[i64]) -> ClassFunction {
    v.iter().map(|&x| rational(x)).collect()
}

fn irr(name: &str, v: &[i64]) -> Irreducible {
    Irreducible {
        name: name.to_string(),
        values: ints(v),
    }
}

/// The shipped character table `name`, matched against the classes of `group`.
///
/// * `C2`: rows `trivial`, `sign`.
/// * `C2xC2`: rows `trivial`, `sign_a`, `sign_b`, `sign_ab`, where `a`, `b` are
///   the group's first two generators and `sign_a` is `−1` on `a`.
/// * `S3`: rows `eps`, `det`, `V` (trivial, sign, reflection).
pub fn builtin_table(
    name: &str,
    group: &GradedGroupRep,
) -> Result<RationalCharacterTable, InvariantsError> {
    let mismatch = || {
        InvariantsError::InvalidCharacterTable(format!(
            "group {} does not have the shape of {name}",
            group.name()
        ))
    };
    let class_sizes = |reps: &[usize]| -> Vec<usize> {
        reps.iter()
            .map(|&r| group.classes()[group.class_of(r)].len())
            .collect()
    };
    match name {
        "C2" => {
            if group.order() != 2 {
                return Err(mismatch());
            }
            let reps = [0, 1];
            RationalCharacterTable::new(
                group,
                &reps,
                &class_sizes(&reps),
                vec![irr("trivial", &[1, 1]), irr("sign", &[1, -1])],
            )
        }
        "C2xC2" => {
            let gens = group.generator_indices();
            if group.order() != 4 || gens.len() < 2 {
                return Err(mismatch());
            }
            let (a, b) = (gens[0], gens[1]);
            let ab = group.product(a, b);
            let reps = [0, a, b, ab];
            let mut sorted = reps;
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1])
                || (1..4).any(|i| group.element_order(reps[i]) != 2)
            {
                return Err(mismatch());
            }
            RationalCharacterTable::new(
                group,
                &reps,
                &[1, 1, 1, 1],
                vec![
                    irr("trivial", &[1, 1, 1, 1]),
                    irr("sign_a", &[1, -1, 1, -1]),
                    irr("sign_b", &[1, 1, -1, -1]),
                    irr("sign_ab", &[1, -1, -1, 1]),
                ],
            )
        }
        "S3" => {
            if group.order() != 6 {
                return Err(mismatch());
            }
            let find = |ord: usize| (0..group.order()).find(|&i| group.element_order(i) == ord);
            let (Some(transposition), Some(three_cycle)) = (find(2), find(3)) else {
                return Err(mismatch());
            };
            let reps = [0, transposition, three_cycle];
            RationalCharacterTable::new(
                group,
                &reps,
                &[1, 3, 2],
                vec![
                    irr("eps", &[1, 1, 1]),
                    irr("det", &[1, -1, 1]),
                    irr("V", &[2, 0, -1]),
                ],
            )
            .map_err(|_| mismatch())
        }
        other => Err(InvariantsError::InvalidCharacterTable(format!(
            "no built-in table named {other}; available: {}",
            BUILTIN_TABLES.join(", ")
        ))),
    }
}

/// Coefficient of `s^n` in `1/P(s)` for a polynomial with `P(0) = 1`.
pub(crate) fn inverse_series_coefficients(p: &[BigRational], n: usize) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut c = if k == 0 {
            BigRational::one()
        } else {
            BigRational::zero()
        };
        for (j, pj) in p.iter().enumerate().skip(1).take(k) {
            c -= pj * &out[k - j];
        }
        out.push(c);
    }
    out
}

/// Character of `Sym^n V` on each class, read off `Σ_n χ_{Sym^n}(g) s^n = 1/det(1 − g s)`
/// for the ungraded `V = ⊕ V_d`.
pub fn sym_power_character(g: &GradedGroupRep, n: usize) -> ClassFunction {
    g.classes()
        .iter()
        .map(|class| {
            let m = g.element(class[0]).full_matrix();
            inverse_series_coefficients(&m.det_one_minus(), n)
                .pop()
                .expect("nonempty expansion")
        })
        .collect()
}

/// Multiplicity of each irreducible in the class function `values`.
pub fn decompose(
    values: &[BigRational],
    table: &RationalCharacterTable,
) -> Result<Vec<u64>, InvariantsError> {
    if values.len() != table.class_sizes.len() {
        return Err(InvariantsError::InvalidCharacterTable(
            "class function length does not match the table".into(),
        ));
    }
    let mut multiplicities = Vec::with_capacity(table.irreducibles.len());
    let mut rebuilt = vec![BigRational::zero(); values.len()];
    for chi in &table.irreducibles {
        let m = table.inner_product(&chi.values, values);
        if !m.is_integer() || m.is_negative() {
            return Err(InvariantsError::NonIntegralMultiplicity(format!(
                "{} appears with multiplicity {m}",
                chi.name
            )));
        }
        for (r, x) in rebuilt.iter_mut().zip(&chi.values) {
            *r += &m * x;
        }
        let m: u64 = m.to_integer().try_into().expect("multiplicity fits in u64");
        multiplicities.push(m);
    }
    if rebuilt != values {
        return Err(InvariantsError::UnsupportedDecomposition(
            "the table's rational characters do not span this class function".into(),
        ));
    }
    Ok(multiplicities)
}
