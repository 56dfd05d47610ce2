//! Modular full-rank certificates for closure computations.
//!
//! Reducing an orbit modulo a large prime gives a one-sided certificate: a
//! d×d minor that is nonzero mod p is nonzero over the rationals, so a
//! full-rank modular closure proves that the exact closure is the whole
//! space. The converse direction is never used — a modular rank deficit
//! just means the caller falls back to the exact computation.

use num::bigint::BigInt;
use num::traits::{Signed, ToPrimitive};

use crate::linalg::Matrix;
use crate::Rat;

/// 2^61 − 1, a Mersenne prime comfortably above every entry this crate
/// feeds through the probe.
const P: u64 = 0x1FFF_FFFF_FFFF_FFFF;

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn pow(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    acc
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

fn bigint_mod(x: &BigInt) -> u64 {
    let p = BigInt::from(P);
    let mut r = x % &p;
    if r.is_negative() {
        r += &p;
    }
    r.to_u64().expect("residue fits in u64")
}

/// Image of a rational mod P; `None` when the denominator vanishes mod P.
fn rat_mod(x: &Rat) -> Option<u64> {
    let den = bigint_mod(x.denom());
    if den == 0 {
        return None;
    }
    Some(mul(bigint_mod(x.numer()), inv(den)))
}

/// Row-echelon rank tracker over the prime field.
struct ModBasis {
    ambient: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl ModBasis {
    fn new(ambient: usize) -> Self {
        ModBasis {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn insert(&mut self, mut v: Vec<u64>) -> bool {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p] == 0 {
                continue;
            }
            let coef = std::mem::take(&mut v[p]);
            for (j, &x) in row.iter().enumerate().skip(p + 1) {
                if x != 0 {
                    v[j] = sub(v[j], mul(coef, x));
                }
            }
        }
        let pivot = match v.iter().position(|&x| x != 0) {
            Some(p) => p,
            None => return false,
        };
        let scale = inv(std::mem::take(&mut v[pivot]));
        v[pivot] = 1;
        for x in v[pivot + 1..].iter_mut() {
            if *x != 0 {
                *x = mul(*x, scale);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn is_full(&self) -> bool {
        self.rank() == self.ambient
    }
}

fn matrix_mod(m: &Matrix<Rat>) -> Option<Vec<Vec<u64>>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(rat_mod).collect())
        .collect()
}

fn matvec_mod(m: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
    m.iter()
        .map(|row| {
            let mut acc = 0u64;
            for (&a, &x) in row.iter().zip(v) {
                if a != 0 && x != 0 {
                    acc = (acc + mul(a, x)) % P;
                }
            }
            acc
        })
        .collect()
}

/// Certifies that the operator closure of `seed` spans the whole ambient
/// space. `true` is a proof (a nonzero modular minor lifts to the
/// rationals); `false` carries no information and the caller must compute
/// exactly.
pub fn certify_full_operator_closure(seed: &[Vec<Rat>], ops: &[Matrix<Rat>]) -> bool {
    let ambient = match seed.first().map(Vec::len).or_else(|| ops.first().map(Matrix::rows)) {
        Some(a) => a,
        None => return false,
    };
    if ambient == 0 {
        // The zero-dimensional space is trivially spanned.
        return true;
    }
    let ops_mod: Option<Vec<Vec<Vec<u64>>>> = ops.iter().map(matrix_mod).collect();
    let ops_mod = match ops_mod {
        Some(o) => o,
        None => return false,
    };
    let mut basis = ModBasis::new(ambient);
    let mut queue: std::collections::VecDeque<Vec<u64>> = std::collections::VecDeque::new();
    for v in seed {
        let vm: Option<Vec<u64>> = v.iter().map(rat_mod).collect();
        match vm {
            Some(vm) => {
                if basis.insert(vm.clone()) {
                    queue.push_back(vm);
                }
            }
            None => return false,
        }
    }
    while let Some(v) = queue.pop_front() {
        for op in &ops_mod {
            if basis.is_full() {
                return true;
            }
            let image = matvec_mod(op, &v);
            if basis.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    basis.is_full()
}

/// Certified lower bound for the rank of an exact matrix: the modular rank
/// never exceeds the rational rank.
pub fn rank_lower_bound(m: &Matrix<Rat>) -> Option<usize> {
    let rows = matrix_mod(m)?;
    let mut basis = ModBasis::new(m.cols());
    for row in rows {
        basis.insert(row);
        if basis.is_full() {
            break;
        }
    }
    Some(basis.rank())
}
