//! Finite-type left modules 𝕆ⁿ ⊕ 𝕆̄ᵏ.
//!
//! An element carries n octonion coordinates acted on by left multiplication
//! and k coordinates acted on through the conjugate (a ⋆ x = ā·x). The two
//! invariant subspaces — associative and conjugate-associative elements —
//! classify modules by the dimension pair (n, k), and an element's length
//! (the ranks of its coordinate sets as real 8-vectors) determines the
//! submodule it generates.

mod abstract_module;
mod element;
mod standard;

pub use abstract_module::{
    act_linear, assoc_conditions, canonicalize, validate_abstract, AbstractModule, CanonicalForm,
    ValidationReport,
};
pub use element::{Length, ModuleElement, ModuleType, MAX_TYPE_DIM};
pub use standard::{standard_action, StandardModule};

use crate::error::{Error, Result};
use crate::linalg::{intersect, reduce, Matrix, Subspace};
use crate::octonion::Octonion;
use crate::scalar::Scalar;

/// Classification of a single element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementClass {
    Assoc,
    ConjAssoc,
    Neither,
    Zero,
}

impl std::fmt::Display for ElementClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ElementClass::Assoc => "Assoc",
            ElementClass::ConjAssoc => "ConjAssoc",
            ElementClass::Neither => "Neither",
            ElementClass::Zero => "Zero",
        };
        f.write_str(s)
    }
}

/// Cyclicity verdict for an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cyclicity {
    CyclicPlus,
    CyclicMinus,
    NotCyclic,
    Zero,
}

impl std::fmt::Display for Cyclicity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Cyclicity::CyclicPlus => "CyclicPlus",
            Cyclicity::CyclicMinus => "CyclicMinus",
            Cyclicity::NotCyclic => "NotCyclic",
            Cyclicity::Zero => "Zero",
        };
        f.write_str(s)
    }
}

/// The module action: p-coordinates are multiplied by `a`, q-coordinates by
/// its conjugate.
pub fn scalar_mul<T: Scalar>(a: &Octonion<T>, m: &ModuleElement<T>) -> ModuleElement<T> {
    let a_bar = a.conj();
    ModuleElement::from_parts(
        m.mtype(),
        m.p().iter().map(|x| a * x).collect(),
        m.q().iter().map(|x| &a_bar * x).collect(),
    )
    .expect("shape preserved by the action")
}

/// [p, q, m] = (pq)m − p(qm).
pub fn module_associator<T: Scalar>(
    p: &Octonion<T>,
    q: &Octonion<T>,
    m: &ModuleElement<T>,
) -> ModuleElement<T> {
    let pq = p * q;
    &scalar_mul(&pq, m) - &scalar_mul(p, &scalar_mul(q, m))
}

/// (pq)m − q(pm), the conjugate-associativity defect.
pub fn conj_module_associator<T: Scalar>(
    p: &Octonion<T>,
    q: &Octonion<T>,
    m: &ModuleElement<T>,
) -> ModuleElement<T> {
    let pq = p * q;
    &scalar_mul(&pq, m) - &scalar_mul(q, &scalar_mul(p, m))
}

/// Classifies an element by its associator defects. Both expressions are
/// bilinear in (p, q), so checking imaginary basis pairs suffices; only the
/// zero element is simultaneously associative and conjugate associative.
pub fn classify_element<T: Scalar>(m: &ModuleElement<T>) -> ElementClass {
    if m.is_zero() {
        return ElementClass::Zero;
    }
    let units: Vec<Octonion<T>> = (1..=7).map(Octonion::unit).collect();
    let assoc = units.iter().enumerate().all(|(i, p)| {
        units[i + 1..]
            .iter()
            .all(|q| module_associator(p, q, m).is_zero())
    });
    let conj = units.iter().enumerate().all(|(i, p)| {
        units
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .all(|(_, q)| conj_module_associator(p, q, m).is_zero())
    });
    match (assoc, conj) {
        (true, true) => unreachable!("only the zero element is in both parts"),
        (true, false) => ElementClass::Assoc,
        (false, true) => ElementClass::ConjAssoc,
        (false, false) => ElementClass::Neither,
    }
}

/// Length of an element: the ranks of its p- and q-coordinate sets as real
/// 8-vectors.
pub fn length<T: Scalar>(m: &ModuleElement<T>) -> Length {
    let rank_of = |part: &[Octonion<T>]| -> usize {
        if part.is_empty() {
            return 0;
        }
        let rows: Vec<Vec<T>> = part.iter().map(|x| x.coords().to_vec()).collect();
        let (_, rank) = reduce(&Matrix::from_rows(rows).expect("octonion rows are uniform"));
        rank
    };
    Length {
        l_plus: rank_of(m.p()),
        l_minus: rank_of(m.q()),
    }
}

/// The submodule generated by `m`: the closure of its coordinate vector
/// under the seven standard action matrices.
pub fn generated_submodule<T: Scalar>(m: &ModuleElement<T>) -> Subspace<T> {
    StandardModule::new(m.mtype()).generated_submodule(m)
}

/// Type of an action-closed subspace of the standard module, read off the
/// intersections with the associative and conjugate-associative parts.
pub fn submodule_type<T: Scalar>(s: &Subspace<T>, ambient: ModuleType) -> Result<ModuleType> {
    StandardModule::new(ambient).submodule_type(s)
}

/// Cyclicity of an element, decided by its length and cross-checked against
/// the brute-force closure dimension.
pub fn is_cyclic<T: Scalar>(m: &ModuleElement<T>) -> Cyclicity {
    let len = length(m);
    let verdict = match (len.l_plus, len.l_minus) {
        (0, 0) => Cyclicity::Zero,
        (1, 0) => Cyclicity::CyclicPlus,
        (0, 1) => Cyclicity::CyclicMinus,
        _ => Cyclicity::NotCyclic,
    };
    if matches!(verdict, Cyclicity::CyclicPlus | Cyclicity::CyclicMinus) {
        let dim = generated_submodule(m).dim();
        assert_eq!(dim, 8, "cyclic element must generate an 8-dimensional submodule");
    }
    verdict
}

/// The element (1, e₁, …, e_{n−1}; 1, e₁, …, e_{k−1}), which has length
/// (n, k) and therefore generates the whole module. Fails for n or k above
/// 8, where no single generator exists.
pub fn canonical_generator<T: Scalar>(t: ModuleType) -> Result<ModuleElement<T>> {
    if t.n() > 8 || t.k() > 8 {
        return Err(Error::NotCyclic { n: t.n(), k: t.k() });
    }
    let p = (0..t.n()).map(Octonion::basis).collect();
    let q = (0..t.k()).map(Octonion::basis).collect();
    ModuleElement::from_parts(t, p, q)
}

/// Intersections with the ambient invariant subspaces, shared by
/// [`StandardModule::submodule_type`].
pub(crate) fn type_of_closed_subspace<T: Scalar>(
    s: &Subspace<T>,
    assoc: &Subspace<T>,
    conjassoc: &Subspace<T>,
) -> Result<ModuleType> {
    let n = intersect(s, assoc)?.dim();
    let k = intersect(s, conjassoc)?.dim();
    ModuleType::new(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::parse_literal;
    use crate::scalar::rat;
    use crate::Rat;

    type Oct = Octonion<Rat>;
    type Elem = ModuleElement<Rat>;

    fn t(n: usize, k: usize) -> ModuleType {
        ModuleType::new(n, k).unwrap()
    }

    fn e(i: usize) -> Oct {
        Oct::basis(i)
    }

    fn elem(ty: ModuleType, p: Vec<Oct>, q: Vec<Oct>) -> Elem {
        Elem::from_parts(ty, p, q).unwrap()
    }

    #[test]
    fn scalar_action_examples() {
        let m = elem(t(1, 1), vec![Oct::one()], vec![Oct::one()]);
        assert_eq!(scalar_mul(&Oct::one(), &m), m);
        let acted = scalar_mul(&e(1), &m);
        assert_eq!(acted.p()[0], e(1));
        assert_eq!(acted.q()[0], -&e(1));
        // Acting twice by e1 is the action of e1^2 = -1.
        let twice = scalar_mul(&e(1), &acted);
        assert_eq!(twice, scalar_mul(&-&Oct::one(), &m));
    }

    #[test]
    fn associator_alternates_and_vanishes_on_assoc() {
        let m = elem(
            t(2, 1),
            vec![
                parse_literal("1 - 2e3").unwrap(),
                parse_literal("e5 + 1/2").unwrap(),
            ],
            vec![parse_literal("3e7 - e1").unwrap()],
        );
        for (i, j) in [(1, 2), (3, 5), (2, 7)] {
            let lhs = module_associator(&e(i), &e(j), &m);
            let rhs = module_associator(&e(j), &e(i), &m);
            assert_eq!(lhs, -&rhs);
        }
        assert!(module_associator(&e(1), &e(1), &m).is_zero());

        let one_in_o = elem(t(1, 0), vec![Oct::one()], vec![]);
        assert!(module_associator(&e(1), &e(2), &one_in_o).is_zero());

        let one_in_obar = elem(t(0, 1), vec![], vec![Oct::one()]);
        let defect = module_associator(&e(1), &e(2), &one_in_obar);
        assert_eq!(defect.q()[0], e(4).scale(&rat(-2, 1)));
    }

    #[test]
    fn conj_associator_examples() {
        let m = elem(t(1, 1), vec![e(3)], vec![e(5)]);
        assert!(conj_module_associator(&e(1), &e(1), &m).is_zero());

        let one_in_obar = elem(t(0, 1), vec![], vec![Oct::one()]);
        for i in 1..=7 {
            for j in 1..=7 {
                assert!(conj_module_associator(&e(i), &e(j), &one_in_obar).is_zero());
            }
        }

        let one_in_o = elem(t(1, 0), vec![Oct::one()], vec![]);
        assert!(!conj_module_associator(&e(1), &e(2), &one_in_o).is_zero());
    }

    #[test]
    fn classification_examples() {
        let reals = elem(t(3, 0), vec![Oct::one(), Oct::one().scale(&rat(2, 1)), Oct::one().scale(&rat(-3, 1))], vec![]);
        assert_eq!(classify_element(&reals), ElementClass::Assoc);

        let obar_one = elem(t(0, 1), vec![], vec![Oct::one()]);
        assert_eq!(classify_element(&obar_one), ElementClass::ConjAssoc);

        let neither = elem(t(1, 1), vec![e(1)], vec![Oct::zero()]);
        assert_eq!(classify_element(&neither), ElementClass::Neither);

        assert_eq!(classify_element(&Elem::zero(t(2, 2))), ElementClass::Zero);
    }

    #[test]
    fn length_examples() {
        assert_eq!(length(&Elem::zero(t(2, 1))), Length { l_plus: 0, l_minus: 0 });
        let m = elem(t(3, 0), vec![Oct::one(), e(1), e(1)], vec![]);
        assert_eq!(length(&m), Length { l_plus: 2, l_minus: 0 });
        let g = canonical_generator::<Rat>(t(2, 1)).unwrap();
        assert_eq!(length(&g), Length { l_plus: 2, l_minus: 1 });
    }

    #[test]
    fn generated_submodule_examples() {
        let m = elem(t(1, 0), vec![Oct::one()], vec![]);
        assert_eq!(generated_submodule(&m).dim(), 8);

        let m2 = elem(t(2, 0), vec![Oct::one(), e(1)], vec![]);
        assert_eq!(generated_submodule(&m2).dim(), 16);
    }

    #[test]
    fn submodule_type_examples() {
        let ambient = t(2, 1);
        let full = Subspace::<Rat>::full(24);
        assert_eq!(submodule_type(&full, ambient).unwrap(), ambient);

        let zero = Subspace::<Rat>::empty(24);
        assert_eq!(submodule_type(&zero, ambient).unwrap(), t(0, 0));

        let g = elem(ambient, vec![e(2), Oct::zero()], vec![Oct::one()]);
        let s = generated_submodule(&g);
        assert_eq!(submodule_type(&s, ambient).unwrap(), t(1, 1));
        assert_eq!(length(&g), Length { l_plus: 1, l_minus: 1 });
    }

    #[test]
    fn submodule_type_rejects_unclosed_subspace() {
        // A line inside O^1 that is not an O-submodule.
        let mut v = vec![rat(0, 1); 8];
        v[0] = rat(1, 1);
        let s = crate::linalg::span(&[v]).unwrap();
        assert!(submodule_type(&s, t(1, 0)).is_err());
    }

    #[test]
    fn cyclicity_examples() {
        let p = parse_literal::<Rat>("1/2 - e3 + 4e6").unwrap();
        let cp = elem(t(1, 0), vec![p], vec![]);
        assert_eq!(is_cyclic(&cp), Cyclicity::CyclicPlus);

        let q = parse_literal::<Rat>("e1 + e2").unwrap();
        let cm = elem(t(0, 1), vec![], vec![q]);
        assert_eq!(is_cyclic(&cm), Cyclicity::CyclicMinus);

        let nc = elem(t(2, 0), vec![Oct::one(), e(1)], vec![]);
        assert_eq!(is_cyclic(&nc), Cyclicity::NotCyclic);

        assert_eq!(is_cyclic(&Elem::zero(t(1, 1))), Cyclicity::Zero);
    }

    #[test]
    fn canonical_generator_examples() {
        let g = canonical_generator::<Rat>(t(1, 0)).unwrap();
        assert_eq!(g.p(), &[Oct::one()]);
        assert!(g.q().is_empty());

        let g21 = canonical_generator::<Rat>(t(2, 1)).unwrap();
        assert_eq!(g21.p(), &[Oct::one(), e(1)]);
        assert_eq!(g21.q(), &[Oct::one()]);

        assert!(canonical_generator::<Rat>(t(9, 0)).is_err());
    }

    #[test]
    fn generator_generates_everything() {
        for (n, k) in [(1, 0), (0, 1), (2, 1), (1, 2)] {
            let ty = t(n, k);
            let g = canonical_generator::<Rat>(ty).unwrap();
            let s = generated_submodule(&g);
            assert_eq!(s.dim(), 8 * (n + k));
        }
    }
}
