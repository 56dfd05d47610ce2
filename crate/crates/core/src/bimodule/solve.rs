//! Feasibility solver for right actions.
//!
//! Stage 1 is linear: identity A fixes each R_i up to the commutant of the
//! left action, and one elimination over the d² unknowns serves all seven
//! generators. Stage 2 substitutes the affine parametrization into the
//! right axioms and identity B, which are quadratic in the commutant
//! coordinates, and resolves them by iterated linear elimination, exact
//! univariate root solving, and full verification of every candidate. The
//! candidate right action is never assumed; outcomes that cannot be
//! certified are reported as `Family` (verified witness, uniqueness open)
//! or `Indeterminate` (residual system attached for audit).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{solve_affine_multi_rows, Matrix, RrefBasis};
use crate::octonion::MUL_TABLE;
use crate::omodule::{validate_abstract, AbstractModule};
use crate::scalar::{RootScalar, Scalar};

use super::{check_bimodule, RightAction};

/// Which stage of the solver established an infeasibility.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Stage {
    Linear,
    Quadratic,
}

/// Result of [`solve_right_action`].
#[derive(Clone, Debug)]
pub enum SolveOutcome<T> {
    /// Exactly one right action exists; it is returned and verified.
    Unique(RightAction<T>),
    /// No right action exists; the detail names the violated constraint.
    Infeasible { stage: Stage, detail: String },
    /// Solutions exist (the witness is verified when present) but
    /// uniqueness was not certified; `affine_dim` is the dimension of the
    /// parameter space left unresolved, 0 for isolated multiple solutions.
    Family {
        affine_dim: usize,
        witness: Option<RightAction<T>>,
    },
    /// Neither feasibility nor infeasibility could be certified over the
    /// rationals; the residual system is attached for external audit.
    Indeterminate {
        reason: String,
        residual: QuadraticResidual,
    },
}

impl<T> SolveOutcome<T> {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, SolveOutcome::Infeasible { .. })
    }

    pub fn is_definitive_for_existence(&self) -> bool {
        !matches!(self, SolveOutcome::Indeterminate { .. })
    }
}

/// The affine stage of the solver: per-generator particular solutions of
/// identity A and the common homogeneous part, the commutant of the left
/// action.
#[derive(Clone, Debug)]
pub struct Stage1<T> {
    d: usize,
    pub particulars: Vec<Option<Matrix<T>>>,
    pub commutant: Vec<Matrix<T>>,
}

impl<T: Scalar> Stage1<T> {
    /// First generator index (1-based) whose linear system is inconsistent.
    pub fn first_infeasible(&self) -> Option<usize> {
        self.particulars
            .iter()
            .position(Option::is_none)
            .map(|i| i + 1)
    }

    /// Membership of a candidate in the stage-1 solution set: for every i
    /// the difference from the particular solution lies in the commutant.
    pub fn contains(&self, ra: &RightAction<T>) -> bool {
        if ra.dim() != self.d {
            return false;
        }
        let mut span = RrefBasis::new(self.d * self.d);
        for k in &self.commutant {
            span.insert(k.to_vec());
        }
        self.particulars.iter().zip(ra.generators()).all(|(p, r)| {
            p.as_ref().is_some_and(|p| {
                let diff = (r - p).to_vec();
                span.contains(&diff)
            })
        })
    }
}

/// Act(e_ie_j) − L_iL_j, the left side of identity A at a unit pair.
fn identity_a_rhs<T: Scalar>(ls: &[Matrix<T>], i: usize, j: usize) -> Matrix<T> {
    let d = ls[0].rows();
    let (sign, k) = MUL_TABLE[i][j];
    let act = {
        let base = if k == 0 {
            Matrix::identity(d)
        } else {
            ls[k - 1].clone()
        };
        if sign > 0 {
            base
        } else {
            -&base
        }
    };
    &act - &(&ls[i - 1] * &ls[j - 1])
}

/// Solves R_iL_j − L_jR_i = Act(e_ie_j) − L_iL_j for all i, j. One
/// elimination handles all seven right-hand sides because the coefficient
/// operator X ↦ XL_j − L_jX does not depend on i.
pub fn solve_stage1<T: Scalar>(am: &AbstractModule<T>) -> Result<Stage1<T>> {
    let d = am.dim();
    if d == 0 {
        return Ok(Stage1 {
            d,
            particulars: (0..7).map(|_| Some(Matrix::zeros(0, 0))).collect(),
            commutant: Vec::new(),
        });
    }
    let ls = am.generators();
    let n = d * d;
    let rhs: Vec<Matrix<T>> = (1..=7)
        .map(|i| {
            let blocks: Vec<Matrix<T>> = (1..=7).map(|j| identity_a_rhs(ls, i, j)).collect();
            blocks
                .into_iter()
                .reduce(|acc, b| {
                    let mut rows = acc.row_vecs();
                    rows.extend(b.row_vecs());
                    Matrix::from_rows(rows).expect("uniform rows")
                })
                .expect("seven blocks")
        })
        .collect();

    // Rows of the augmented system, streamed: one equation per (j, r, c).
    let rhs_ref: &[Matrix<T>] = &rhs;
    let rows = (0..7usize).flat_map(|jm| {
        let l = &ls[jm];
        (0..d).flat_map(move |r| {
            (0..d).map(move |c| {
                let mut row = vec![T::zero(); n + 7];
                for a in 0..d {
                    // + X[r,a] * L[a,c]
                    if !l[(a, c)].is_zero() {
                        let idx = r * d + a;
                        row[idx] = row[idx].clone() + l[(a, c)].clone();
                    }
                    // - L[r,a] * X[a,c]
                    if !l[(r, a)].is_zero() {
                        let idx = a * d + c;
                        row[idx] = row[idx].clone() - l[(r, a)].clone();
                    }
                }
                for (i, rhs_i) in rhs_ref.iter().enumerate() {
                    row[n + i] = rhs_i[(jm * d + r, c)].clone();
                }
                row
            })
        })
    });
    let solution = solve_affine_multi_rows(n, 7, rows);

    let particulars = solution
        .particulars
        .into_iter()
        .map(|p| p.map(|flat| Matrix::from_flat(d, d, flat)))
        .collect();
    let commutant = solution
        .nullspace
        .basis_rows()
        .into_iter()
        .map(|flat| Matrix::from_flat(d, d, flat))
        .collect();
    Ok(Stage1 {
        d,
        particulars,
        commutant,
    })
}

/// One scalar equation over the commutant coordinates λ: constant +
/// Σ linear·λ + Σ quadratic·λλ = 0. Quadratic keys are ordered pairs
/// (u ≤ v) and the coefficient multiplies the monomial λ_u·λ_v once.
#[derive(Clone, Debug)]
struct QuadEq<T> {
    constant: T,
    linear: Vec<(usize, T)>,
    quadratic: Vec<(usize, usize, T)>,
}

impl<T: Scalar> QuadEq<T> {
    fn is_trivial(&self) -> bool {
        self.constant.is_zero() && self.linear.is_empty() && self.quadratic.is_empty()
    }

    fn is_linear(&self) -> bool {
        self.quadratic.is_empty()
    }

    fn variables(&self) -> Vec<usize> {
        let mut vars: Vec<usize> = self.linear.iter().map(|(v, _)| *v).collect();
        for (u, v, _) in &self.quadratic {
            vars.push(*u);
            vars.push(*v);
        }
        vars.sort_unstable();
        vars.dedup();
        vars
    }
}

/// Matrix-valued quadratic polynomial in λ, scattered entrywise into scalar
/// equations.
struct MatPoly<T> {
    constant: Matrix<T>,
    linear: BTreeMap<usize, Matrix<T>>,
    quadratic: BTreeMap<(usize, usize), Matrix<T>>,
}

impl<T: Scalar> MatPoly<T> {
    fn new(d: usize) -> Self {
        MatPoly {
            constant: Matrix::zeros(d, d),
            linear: BTreeMap::new(),
            quadratic: BTreeMap::new(),
        }
    }

    fn add_const(&mut self, m: &Matrix<T>) {
        self.constant = &self.constant + m;
    }

    fn add_linear(&mut self, var: usize, m: Matrix<T>) {
        match self.linear.get_mut(&var) {
            Some(cur) => *cur = &*cur + &m,
            None => {
                self.linear.insert(var, m);
            }
        }
    }

    fn add_quadratic(&mut self, u: usize, v: usize, m: Matrix<T>) {
        let key = (u.min(v), u.max(v));
        match self.quadratic.get_mut(&key) {
            Some(cur) => *cur = &*cur + &m,
            None => {
                self.quadratic.insert(key, m);
            }
        }
    }

    fn scatter(&self, out: &mut Vec<QuadEq<T>>) {
        let d = self.constant.rows();
        for r in 0..d {
            for c in 0..d {
                let constant = self.constant[(r, c)].clone();
                let linear: Vec<(usize, T)> = self
                    .linear
                    .iter()
                    .filter(|(_, m)| !m[(r, c)].is_zero())
                    .map(|(v, m)| (*v, m[(r, c)].clone()))
                    .collect();
                let quadratic: Vec<(usize, usize, T)> = self
                    .quadratic
                    .iter()
                    .filter(|(_, m)| !m[(r, c)].is_zero())
                    .map(|((u, v), m)| (*u, *v, m[(r, c)].clone()))
                    .collect();
                let eq = QuadEq {
                    constant,
                    linear,
                    quadratic,
                };
                if !eq.is_trivial() {
                    out.push(eq);
                }
            }
        }
    }
}

/// Serializable residual system for `Indeterminate` outcomes: the
/// unresolved equations over the remaining parameters, plus the affine map
/// back to the original commutant coordinates (one block of `commutant_dim`
/// coordinates per generator). Coefficients are exact rational strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuadraticResidual {
    pub num_vars: usize,
    pub commutant_dim: usize,
    pub equations: Vec<ResidualEquation>,
    /// λ = var_offset + Σ τ_a · var_basis[a].
    pub var_offset: Vec<String>,
    pub var_basis: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResidualEquation {
    pub constant: String,
    pub linear: Vec<(usize, String)>,
    pub quadratic: Vec<(usize, usize, String)>,
}

fn residual_of<T: Scalar>(
    eqs: &[QuadEq<T>],
    map: &AffineMap<T>,
    commutant_dim: usize,
) -> QuadraticResidual {
    QuadraticResidual {
        num_vars: map.basis.len(),
        commutant_dim,
        equations: eqs
            .iter()
            .map(|eq| ResidualEquation {
                constant: eq.constant.to_string(),
                linear: eq
                    .linear
                    .iter()
                    .map(|(v, c)| (*v, c.to_string()))
                    .collect(),
                quadratic: eq
                    .quadratic
                    .iter()
                    .map(|(u, v, c)| (*u, *v, c.to_string()))
                    .collect(),
            })
            .collect(),
        var_offset: map.offset.iter().map(ToString::to_string).collect(),
        var_basis: map
            .basis
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect(),
    }
}

/// Affine change of variables λ = offset + Σ τ_a·basis[a], composed as the
/// elimination proceeds.
#[derive(Clone, Debug)]
struct AffineMap<T> {
    offset: Vec<T>,
    basis: Vec<Vec<T>>,
}

impl<T: Scalar> AffineMap<T> {
    fn identity(nvars: usize) -> Self {
        AffineMap {
            offset: vec![T::zero(); nvars],
            basis: (0..nvars)
                .map(|a| {
                    let mut row = vec![T::zero(); nvars];
                    row[a] = T::one();
                    row
                })
                .collect(),
        }
    }

    fn free_dim(&self) -> usize {
        self.basis.len()
    }

    /// λ for a given parameter point τ.
    fn lambda_at(&self, tau: &[T]) -> Vec<T> {
        let mut out = self.offset.clone();
        for (t, row) in tau.iter().zip(&self.basis) {
            if t.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o = o.clone() + t.clone() * x.clone();
                }
            }
        }
        out
    }

    /// Composes with τ = mu + Σ σ_b·sub_basis[b] (coordinates over the
    /// current τ space).
    fn compose(&self, mu: &[T], sub_basis: &[Vec<T>]) -> Self {
        let offset = self.lambda_at(mu);
        let basis = sub_basis
            .iter()
            .map(|dir| {
                let mut row = vec![T::zero(); self.offset.len()];
                for (c, b) in dir.iter().zip(&self.basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (r, x) in row.iter_mut().zip(b) {
                        if !x.is_zero() {
                            *r = r.clone() + c.clone() * x.clone();
                        }
                    }
                }
                row
            })
            .collect();
        AffineMap { offset, basis }
    }
}

/// Substitutes τ = mu + Σ σ_b·basis[b] into an equation over τ.
fn substitute<T: Scalar>(eq: &QuadEq<T>, mu: &[T], basis: &[Vec<T>]) -> QuadEq<T> {
    let g = basis.len();
    let mut constant = eq.constant.clone();
    let mut linear: BTreeMap<usize, T> = BTreeMap::new();
    let mut quadratic: BTreeMap<(usize, usize), T> = BTreeMap::new();

    let add_lin = |map: &mut BTreeMap<usize, T>, b: usize, c: T| {
        if c.is_zero() {
            return;
        }
        let cur = map.remove(&b).unwrap_or_else(T::zero);
        let next = cur + c;
        if !next.is_zero() {
            map.insert(b, next);
        }
    };

    for (v, c) in &eq.linear {
        constant = constant + c.clone() * mu[*v].clone();
        for b in 0..g {
            add_lin(&mut linear, b, c.clone() * basis[b][*v].clone());
        }
    }
    for (u, v, c) in &eq.quadratic {
        // (mu_u + sum_b B[b][u] s_b)(mu_v + sum_b B[b][v] s_b), coefficient c.
        constant = constant + c.clone() * mu[*u].clone() * mu[*v].clone();
        for b in 0..g {
            add_lin(
                &mut linear,
                b,
                c.clone() * (mu[*u].clone() * basis[b][*v].clone() + mu[*v].clone() * basis[b][*u].clone()),
            );
        }
        for b1 in 0..g {
            let bu = basis[b1][*u].clone();
            if bu.is_zero() {
                continue;
            }
            for b2 in 0..g {
                let bv = basis[b2][*v].clone();
                if bv.is_zero() {
                    continue;
                }
                let key = (b1.min(b2), b1.max(b2));
                let contrib = c.clone() * bu.clone() * bv;
                let cur = quadratic.remove(&key).unwrap_or_else(T::zero);
                let next = cur + contrib;
                if !next.is_zero() {
                    quadratic.insert(key, next);
                }
            }
        }
    }

    QuadEq {
        constant,
        linear: linear.into_iter().collect(),
        quadratic: quadratic
            .into_iter()
            .map(|((u, v), c)| (u, v, c))
            .collect(),
    }
}

/// Exact real-root set of a family of univariate polynomials of degree ≤ 2
/// (as (c0, c1, c2) with c0 + c1 x + c2 x² = 0).
enum UnivariateRoots<T> {
    /// All real roots, each rational; empty means provably no real root.
    Exact(Vec<T>),
    /// Real roots exist but at least one is irrational.
    Irrational,
}

fn poly_gcd<T: Scalar>(a: Vec<T>, b: Vec<T>) -> Vec<T> {
    fn trim<T: Scalar>(mut p: Vec<T>) -> Vec<T> {
        while p.last().is_some_and(|x| x.is_zero()) {
            p.pop();
        }
        p
    }
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        // a mod b by long division.
        while a.len() >= b.len() && !a.is_empty() {
            let shift = a.len() - b.len();
            let factor = a.last().unwrap().clone() / b.last().unwrap().clone();
            for i in 0..b.len() {
                let delta = factor.clone() * b[i].clone();
                a[shift + i] = a[shift + i].clone() - delta;
            }
            a = trim(a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    // Normalize to a monic polynomial for stable comparisons.
    if let Some(lead) = a.last().cloned() {
        for c in a.iter_mut() {
            *c = c.clone() / lead.clone();
        }
    }
    a
}

fn univariate_roots<T: RootScalar>(polys: &[Vec<T>]) -> UnivariateRoots<T> {
    let mut gcd = polys[0].clone();
    for p in &polys[1..] {
        gcd = poly_gcd(gcd, p.clone());
    }
    match gcd.len() {
        0 => unreachable!("nonzero polynomials have a nonzero gcd"),
        1 => UnivariateRoots::Exact(Vec::new()),
        2 => {
            // x + c0 = 0 after normalization.
            UnivariateRoots::Exact(vec![-gcd[0].clone()])
        }
        3 => {
            let (c0, c1) = (gcd[0].clone(), gcd[1].clone());
            let four = T::from_u8(4).expect("small integer");
            let two = T::from_u8(2).expect("small integer");
            let disc = c1.clone() * c1.clone() - four * c0;
            if disc.is_negative() {
                return UnivariateRoots::Exact(Vec::new());
            }
            match disc.sqrt_exact() {
                Some(s) => {
                    let r1 = (-c1.clone() + s.clone()) / two.clone();
                    let r2 = (-c1 - s.clone()) / two;
                    let mut roots = vec![r1];
                    if !s.is_zero() {
                        roots.push(r2);
                    }
                    UnivariateRoots::Exact(roots)
                }
                None => UnivariateRoots::Irrational,
            }
        }
        _ => unreachable!("degree is at most 2"),
    }
}

/// Builds the full quadratic constraint set over the commutant coordinates:
/// right axioms R_iR_j + R_jR_i + 2δ_ijI = 0 for i ≤ j and identity B in
/// the form C_ij − R_jR_i + R_{e_ie_j} = 0 for all (i, j), with
/// R_i = P_i + Σ_t λ_{i,t}K_t.
fn build_quadratic_system<T: Scalar>(
    ls: &[Matrix<T>],
    particulars: &[Matrix<T>],
    commutant: &[Matrix<T>],
) -> Vec<QuadEq<T>> {
    let d = particulars[0].rows();
    let c = commutant.len();
    let var = |i: usize, t: usize| (i - 1) * c + t;
    let mut eqs = Vec::new();

    let kp: Vec<Vec<Matrix<T>>> = commutant
        .iter()
        .map(|k| particulars.iter().map(|p| k * p).collect())
        .collect();
    let pk: Vec<Vec<Matrix<T>>> = particulars
        .iter()
        .map(|p| commutant.iter().map(|k| p * k).collect())
        .collect();
    let kk: Vec<Vec<Matrix<T>>> = commutant
        .iter()
        .map(|k1| commutant.iter().map(|k2| k1 * k2).collect())
        .collect();

    // Right axioms.
    let two = T::one() + T::one();
    for i in 1..=7usize {
        for j in i..=7usize {
            let mut poly = MatPoly::new(d);
            let pi = &particulars[i - 1];
            let pj = &particulars[j - 1];
            poly.add_const(&(&(pi * pj) + &(pj * pi)));
            if i == j {
                poly.add_const(&Matrix::identity(d).scale(&two));
            }
            for t in 0..c {
                poly.add_linear(var(i, t), &kp[t][j - 1] + &pk[j - 1][t]);
                poly.add_linear(var(j, t), &pk[i - 1][t] + &kp[t][i - 1]);
            }
            for t in 0..c {
                for u in 0..c {
                    poly.add_quadratic(var(i, t), var(j, u), &kk[t][u] + &kk[u][t]);
                }
            }
            poly.scatter(&mut eqs);
        }
    }

    // Identity B, reduced on the stage-1 family: C_ij − R_jR_i + R_{e_ie_j}.
    for i in 1..=7usize {
        for j in 1..=7usize {
            let mut poly = MatPoly::new(d);
            poly.add_const(&identity_a_rhs(ls, i, j));
            let pi = &particulars[i - 1];
            let pj = &particulars[j - 1];
            poly.add_const(&-&(pj * pi));
            let (sign, k) = MUL_TABLE[i][j];
            let signed = |m: Matrix<T>| if sign > 0 { m } else { -&m };
            if k == 0 {
                poly.add_const(&signed(Matrix::identity(d)));
            } else {
                poly.add_const(&signed(particulars[k - 1].clone()));
                for t in 0..c {
                    poly.add_linear(var(k, t), signed(commutant[t].clone()));
                }
            }
            for t in 0..c {
                poly.add_linear(var(j, t), -&kp[t][i - 1]);
                poly.add_linear(var(i, t), -&pk[j - 1][t]);
            }
            for t in 0..c {
                for u in 0..c {
                    poly.add_quadratic(var(j, t), var(i, u), -&kk[t][u]);
                }
            }
            poly.scatter(&mut eqs);
        }
    }

    eqs
}

fn right_action_at<T: Scalar>(
    particulars: &[Matrix<T>],
    commutant: &[Matrix<T>],
    lambda: &[T],
) -> RightAction<T> {
    let c = commutant.len();
    let rs: Vec<Matrix<T>> = (0..7)
        .map(|im| {
            let mut m = particulars[im].clone();
            for (t, k) in commutant.iter().enumerate() {
                let coef = &lambda[im * c + t];
                if !coef.is_zero() {
                    m = &m + &k.scale(coef);
                }
            }
            m
        })
        .collect();
    RightAction::new(rs).expect("seven uniform square matrices")
}

const ENUMERATION_CAP: usize = 4096;

/// Decides whether the left module admits a compatible right action.
pub fn solve_right_action<T: RootScalar>(am: &AbstractModule<T>) -> Result<SolveOutcome<T>> {
    if !validate_abstract(am).passed() {
        return Err(Error::InvalidInput(
            "solve_right_action requires a valid module (Clifford relations, dim = 0 mod 8)"
                .into(),
        ));
    }
    let stage1 = solve_stage1(am)?;
    if let Some(i) = stage1.first_infeasible() {
        return Ok(SolveOutcome::Infeasible {
            stage: Stage::Linear,
            detail: format!(
                "identity A admits no right action of e{i} compatible with the left action"
            ),
        });
    }
    let particulars: Vec<Matrix<T>> = stage1
        .particulars
        .iter()
        .map(|p| p.clone().expect("checked feasible"))
        .collect();
    let commutant = &stage1.commutant;
    let c = commutant.len();

    let verify = |lambda: &[T]| -> Option<RightAction<T>> {
        let ra = right_action_at(&particulars, commutant, lambda);
        let report = check_bimodule(am, &ra).expect("dimensions agree by construction");
        report.passed().then_some(ra)
    };

    if c == 0 {
        let lambda = Vec::new();
        return Ok(match verify(&lambda) {
            Some(ra) => SolveOutcome::Unique(ra),
            None => SolveOutcome::Infeasible {
                stage: Stage::Quadratic,
                detail: "the unique stage-1 candidate violates the quadratic identities".into(),
            },
        });
    }

    let nvars = 7 * c;
    let mut eqs = build_quadratic_system(am.generators(), &particulars, commutant);
    let mut map = AffineMap::<T>::identity(nvars);

    // Iterated linear elimination: peel off the equations that are linear in
    // the current parameters, solve them, substitute, repeat.
    loop {
        let (linear, rest): (Vec<QuadEq<T>>, Vec<QuadEq<T>>) =
            eqs.into_iter().partition(QuadEq::is_linear);
        eqs = rest;
        if linear.is_empty() || map.free_dim() == 0 {
            if !linear.is_empty() {
                // No parameters left: the linear equations are constants.
                if let Some(bad) = linear.iter().find(|eq| !eq.constant.is_zero()) {
                    return Ok(SolveOutcome::Infeasible {
                        stage: Stage::Quadratic,
                        detail: format!(
                            "constraint forces 0 = {} with all parameters eliminated",
                            bad.constant
                        ),
                    });
                }
            }
            break;
        }
        let f = map.free_dim();
        let rows = linear.iter().map(|eq| {
            let mut row = vec![T::zero(); f + 1];
            for (v, coef) in &eq.linear {
                row[*v] = coef.clone();
            }
            row[f] = -eq.constant.clone();
            row
        });
        let solution = solve_affine_multi_rows(f, 1, rows);
        let mu = match solution.particulars.into_iter().next().flatten() {
            Some(mu) => mu,
            None => {
                return Ok(SolveOutcome::Infeasible {
                    stage: Stage::Quadratic,
                    detail: "linear consequences of the quadratic identities are inconsistent"
                        .into(),
                })
            }
        };
        let sub_basis = solution.nullspace.basis_rows();
        let stalled = sub_basis.len() == f && mu.iter().all(|x| x.is_zero());
        map = map.compose(&mu, &sub_basis);
        eqs = eqs
            .iter()
            .map(|eq| substitute(eq, &mu, &sub_basis))
            .filter(|eq| !eq.is_trivial())
            .collect();
        if stalled {
            break;
        }
    }

    let f = map.free_dim();
    if f == 0 {
        let lambda = map.offset.clone();
        return Ok(match verify(&lambda) {
            Some(ra) => SolveOutcome::Unique(ra),
            None => SolveOutcome::Infeasible {
                stage: Stage::Quadratic,
                detail: "the single surviving candidate violates the full identity set".into(),
            },
        });
    }

    if eqs.is_empty() {
        // Every constraint is consumed: the whole affine family solves.
        let witness = verify(&map.offset);
        debug_assert!(witness.is_some(), "family member must verify");
        return Ok(SolveOutcome::Family {
            affine_dim: f,
            witness,
        });
    }

    // Univariate residual: solve each variable's polynomial system exactly.
    let univariate = eqs.iter().all(|eq| eq.variables().len() <= 1);
    if univariate {
        let mut per_var: Vec<Vec<Vec<T>>> = vec![Vec::new(); f];
        for eq in &eqs {
            let vars = eq.variables();
            let v = vars[0];
            let mut poly = vec![eq.constant.clone(), T::zero(), T::zero()];
            for (u, cf) in &eq.linear {
                debug_assert_eq!(u, &v);
                poly[1] = cf.clone();
            }
            for (a, b, cf) in &eq.quadratic {
                debug_assert_eq!((a, b), (&v, &v));
                poly[2] = cf.clone();
            }
            per_var[v].push(poly);
        }
        let mut candidate_sets: Vec<Vec<T>> = Vec::with_capacity(f);
        let mut free_vars = 0usize;
        for (v, polys) in per_var.iter().enumerate() {
            if polys.is_empty() {
                free_vars += 1;
                candidate_sets.push(vec![T::zero()]);
                continue;
            }
            match univariate_roots(polys) {
                UnivariateRoots::Exact(roots) => {
                    if roots.is_empty() {
                        return Ok(SolveOutcome::Infeasible {
                            stage: Stage::Quadratic,
                            detail: format!(
                                "parameter {v} has no real value satisfying its constraints"
                            ),
                        });
                    }
                    candidate_sets.push(roots);
                }
                UnivariateRoots::Irrational => {
                    return Ok(SolveOutcome::Indeterminate {
                        reason: format!(
                            "parameter {v} requires an irrational value; no rational solution \
                             exists and real feasibility is left open"
                        ),
                        residual: residual_of(&eqs, &map, c),
                    });
                }
            }
        }
        let combos: usize = candidate_sets.iter().map(Vec::len).product();
        if combos > ENUMERATION_CAP {
            return Ok(SolveOutcome::Indeterminate {
                reason: format!("{combos} candidate combinations exceed the enumeration cap"),
                residual: residual_of(&eqs, &map, c),
            });
        }
        let mut verified: Vec<RightAction<T>> = Vec::new();
        let mut tau = vec![T::zero(); f];
        let mut indices = vec![0usize; f];
        loop {
            for (v, &idx) in indices.iter().enumerate() {
                tau[v] = candidate_sets[v][idx].clone();
            }
            if let Some(ra) = verify(&map.lambda_at(&tau)) {
                verified.push(ra);
            }
            // Advance the mixed-radix counter.
            let mut pos = 0;
            loop {
                if pos == f {
                    break;
                }
                indices[pos] += 1;
                if indices[pos] < candidate_sets[pos].len() {
                    break;
                }
                indices[pos] = 0;
                pos += 1;
            }
            if pos == f {
                break;
            }
        }
        return Ok(if verified.is_empty() {
            SolveOutcome::Infeasible {
                stage: Stage::Quadratic,
                detail: "every candidate from the exact root enumeration violates the full \
                         identity set"
                    .into(),
            }
        } else if verified.len() == 1 && free_vars == 0 {
            SolveOutcome::Unique(verified.into_iter().next().expect("one element"))
        } else {
            SolveOutcome::Family {
                affine_dim: free_vars,
                witness: verified.into_iter().next(),
            }
        });
    }

    // Multivariate residual: try the base point as a witness, otherwise
    // hand the system over for audit.
    match verify(&map.offset) {
        Some(ra) => Ok(SolveOutcome::Family {
            affine_dim: f,
            witness: Some(ra),
        }),
        None => Ok(SolveOutcome::Indeterminate {
            reason: "multivariate quadratic residual could not be resolved".into(),
            residual: residual_of(&eqs, &map, c),
        }),
    }
}
