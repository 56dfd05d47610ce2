//! Exact octonion arithmetic over the ordered basis (1, e₁, …, e₇).
//!
//! The basis products come from the seven oriented triples
//! (1,2,4), (2,3,5), (3,4,6), (4,5,7), (5,6,1), (6,7,2), (7,1,3):
//! within a triple (a,b,c), eₐe_b = e_c cyclically; swapping two factors
//! flips the sign, and e_i² = −1. Equivalently, e_ie_j carries index k with
//! k−i ≡ 3(j−i) (mod 7) exactly when (j−i) mod 7 is a quadratic residue
//! {1,2,4}; the remaining pairs are filled in by antisymmetry. The table is
//! validated exhaustively by the alternativity tests.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

const TRIPLES: [(usize, usize, usize); 7] = [
    (1, 2, 4),
    (2, 3, 5),
    (3, 4, 6),
    (4, 5, 7),
    (5, 6, 1),
    (6, 7, 2),
    (7, 1, 3),
];

const fn basis_product(i: usize, j: usize) -> (i8, usize) {
    if i == 0 {
        return (1, j);
    }
    if j == 0 {
        return (1, i);
    }
    if i == j {
        return (-1, 0);
    }
    let mut t = 0;
    while t < 7 {
        let (a, b, c) = TRIPLES[t];
        if i == a && j == b {
            return (1, c);
        }
        if i == b && j == c {
            return (1, a);
        }
        if i == c && j == a {
            return (1, b);
        }
        if i == b && j == a {
            return (-1, c);
        }
        if i == c && j == b {
            return (-1, a);
        }
        if i == a && j == c {
            return (-1, b);
        }
        t += 1;
    }
    panic!("octonion basis pair not covered by the triple table");
}

const fn build_table() -> [[(i8, usize); 8]; 8] {
    let mut table = [[(0i8, 0usize); 8]; 8];
    let mut i = 0;
    while i < 8 {
        let mut j = 0;
        while j < 8 {
            table[i][j] = basis_product(i, j);
            j += 1;
        }
        i += 1;
    }
    table
}

/// `MUL_TABLE[i][j] = (sign, k)` with eᵢe_j = sign·e_k (index 0 is the unit).
pub const MUL_TABLE: [[(i8, usize); 8]; 8] = build_table();

/// Octonion with exact coordinates over the ordered basis (1, e₁, …, e₇).
#[derive(Clone, PartialEq, Eq)]
pub struct Octonion<T> {
    c: [T; 8],
}

impl<T: Scalar> Octonion<T> {
    pub fn from_coords(c: [T; 8]) -> Self {
        Octonion { c }
    }

    pub fn from_slice(c: &[T]) -> Result<Self> {
        if c.len() != 8 {
            return Err(Error::Dimension {
                context: "Octonion::from_slice",
                expected: 8,
                got: c.len(),
            });
        }
        Ok(Octonion {
            c: std::array::from_fn(|i| c[i].clone()),
        })
    }

    pub fn zero() -> Self {
        Octonion {
            c: std::array::from_fn(|_| T::zero()),
        }
    }

    pub fn one() -> Self {
        let mut x = Self::zero();
        x.c[0] = T::one();
        x
    }

    /// The imaginary unit e_i, 1 ≤ i ≤ 7.
    pub fn unit(i: usize) -> Self {
        assert!((1..=7).contains(&i), "imaginary units are e1..e7");
        let mut x = Self::zero();
        x.c[i] = T::one();
        x
    }

    /// Basis element by index: 0 is the unit 1, then e₁…e₇.
    pub fn basis(i: usize) -> Self {
        if i == 0 {
            Self::one()
        } else {
            Self::unit(i)
        }
    }

    pub fn coords(&self) -> &[T; 8] {
        &self.c
    }

    pub fn into_coords(self) -> [T; 8] {
        self.c
    }

    pub fn coord(&self, i: usize) -> &T {
        &self.c[i]
    }

    pub fn coord_mut(&mut self, i: usize) -> &mut T {
        &mut self.c[i]
    }

    pub fn real_part(&self) -> &T {
        &self.c[0]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_pure_imaginary(&self) -> bool {
        self.c[0].is_zero()
    }

    pub fn scale(&self, s: &T) -> Self {
        Octonion {
            c: std::array::from_fn(|i| self.c[i].clone() * s.clone()),
        }
    }

    /// Octonionic conjugation: fixes 1, negates every e_i.
    pub fn conj(&self) -> Self {
        Octonion {
            c: std::array::from_fn(|i| {
                if i == 0 {
                    self.c[0].clone()
                } else {
                    -self.c[i].clone()
                }
            }),
        }
    }

    /// The positive-definite norm form: real part of x·x̄.
    ///
    /// The product is computed in full and its imaginary part checked to be
    /// zero; a violation would mean the multiplication table is corrupt and
    /// is treated as an internal error.
    pub fn norm_sq(&self) -> T {
        let prod = self * &self.conj();
        for i in 1..8 {
            assert!(
                prod.c[i].is_zero(),
                "octonion table corrupt: x*conj(x) has an imaginary component"
            );
        }
        prod.c[0].clone()
    }

    /// The associator [a,b,c] = (ab)c − a(bc).
    pub fn associator(a: &Self, b: &Self, c: &Self) -> Self {
        &(&(a * b) * c) - &(a * &(b * c))
    }

    /// 8×8 matrix of left multiplication by `self`: column j holds the
    /// coordinates of self·(basis element j).
    pub fn left_mult_matrix(&self) -> Matrix<T> {
        let mut m: Matrix<T> = Matrix::zeros(8, 8);
        for j in 0..8 {
            for i in 0..8 {
                if self.c[i].is_zero() {
                    continue;
                }
                let (sign, k) = MUL_TABLE[i][j];
                let cur = m[(k, j)].clone();
                m[(k, j)] = if sign > 0 {
                    cur + self.c[i].clone()
                } else {
                    cur - self.c[i].clone()
                };
            }
        }
        m
    }

    /// 8×8 matrix of right multiplication by `self`: column j holds the
    /// coordinates of (basis element j)·self.
    pub fn right_mult_matrix(&self) -> Matrix<T> {
        let mut m: Matrix<T> = Matrix::zeros(8, 8);
        for j in 0..8 {
            for i in 0..8 {
                if self.c[i].is_zero() {
                    continue;
                }
                let (sign, k) = MUL_TABLE[j][i];
                let cur = m[(k, j)].clone();
                m[(k, j)] = if sign > 0 {
                    cur + self.c[i].clone()
                } else {
                    cur - self.c[i].clone()
                };
            }
        }
        m
    }
}

impl<T: Scalar> std::ops::Add for &Octonion<T> {
    type Output = Octonion<T>;
    fn add(self, rhs: &Octonion<T>) -> Octonion<T> {
        Octonion {
            c: std::array::from_fn(|i| self.c[i].clone() + rhs.c[i].clone()),
        }
    }
}

impl<T: Scalar> std::ops::Sub for &Octonion<T> {
    type Output = Octonion<T>;
    fn sub(self, rhs: &Octonion<T>) -> Octonion<T> {
        Octonion {
            c: std::array::from_fn(|i| self.c[i].clone() - rhs.c[i].clone()),
        }
    }
}

impl<T: Scalar> std::ops::Neg for &Octonion<T> {
    type Output = Octonion<T>;
    fn neg(self) -> Octonion<T> {
        Octonion {
            c: std::array::from_fn(|i| -self.c[i].clone()),
        }
    }
}

impl<T: Scalar> std::ops::Mul for &Octonion<T> {
    type Output = Octonion<T>;

    /// Bilinear extension of the basis table.
    fn mul(self, rhs: &Octonion<T>) -> Octonion<T> {
        let mut out: Octonion<T> = Octonion::zero();
        for i in 0..8 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                let (sign, k) = MUL_TABLE[i][j];
                let prod = self.c[i].clone() * rhs.c[j].clone();
                out.c[k] = if sign > 0 {
                    out.c[k].clone() + prod
                } else {
                    out.c[k].clone() - prod
                };
            }
        }
        out
    }
}

impl<T: Scalar> fmt::Display for Octonion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_literal(self))
    }
}

impl<T: Scalar> fmt::Debug for Octonion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Octonion({})", format_literal(self))
    }
}

/// Renders an octonion in the literal grammar: terms in basis order, zero
/// terms omitted, `0` for the zero octonion. Example: `1/2 + 3e2 - e7`.
pub fn format_literal<T: Scalar>(x: &Octonion<T>) -> String {
    let mut out = String::new();
    for i in 0..8 {
        let coef = x.coord(i);
        if coef.is_zero() {
            continue;
        }
        let negative = coef.is_negative();
        let magnitude = coef.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if i == 0 {
            out.push_str(&magnitude.to_string());
        } else if magnitude.is_one() {
            out.push_str(&format!("e{i}"));
        } else {
            out.push_str(&format!("{magnitude}e{i}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses the octonion literal grammar: a sum of signed terms, each a
/// rational coefficient (`3`, `-1/2`) and/or a basis symbol `e1`..`e7`.
/// Whitespace between tokens is ignored. Errors carry the byte position.
pub fn parse_literal<T: Scalar>(s: &str) -> Result<Octonion<T>> {
    Parser { s, pos: 0 }.parse()
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.s.len() - trimmed.len();
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.rest().starts_with(ch) {
            self.pos += ch.len_utf8();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let n = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if n == 0 {
            return None;
        }
        let out = &self.s[self.pos..self.pos + n];
        self.pos += n;
        Some(out)
    }

    fn integer<T: Scalar>(&mut self) -> Result<T> {
        let digits = self.digits().ok_or_else(|| self.err("expected digits"))?;
        let ten = T::from_u8(10).expect("10 fits in any scalar");
        Ok(digits.bytes().fold(T::zero(), |acc, b| {
            acc * ten.clone() + T::from_u8(b - b'0').expect("digit fits in any scalar")
        }))
    }

    fn basis_index(&mut self) -> Result<usize> {
        let at = self.pos;
        let digits = self
            .digits()
            .ok_or_else(|| self.err("expected basis index after `e`"))?;
        match digits.parse::<usize>() {
            Ok(i) if (1..=7).contains(&i) => Ok(i),
            _ => Err(Error::Parse {
                pos: at,
                msg: format!("basis index must be 1..7, got `{digits}`"),
            }),
        }
    }

    /// One term: `coefficient`, `coefficient e_k`, or `e_k`.
    fn term<T: Scalar>(&mut self, negative: bool, out: &mut Octonion<T>) -> Result<()> {
        let coef: T;
        let index: usize;
        if self.eat('e') {
            coef = T::one();
            index = self.basis_index()?;
        } else {
            let numer: T = self.integer()?;
            let coef_val = if self.eat('/') {
                let at = self.pos;
                let denom: T = self.integer()?;
                if denom.is_zero() {
                    return Err(Error::Parse {
                        pos: at,
                        msg: "zero denominator".into(),
                    });
                }
                numer / denom
            } else {
                numer
            };
            self.skip_ws();
            if self.eat('e') {
                index = self.basis_index()?;
            } else {
                index = 0;
            }
            coef = coef_val;
        }
        let signed = if negative { -coef } else { coef };
        out.c[index] = out.c[index].clone() + signed;
        Ok(())
    }

    fn parse<T: Scalar>(&mut self) -> Result<Octonion<T>> {
        let mut out = Octonion::zero();
        self.skip_ws();
        if self.rest().is_empty() {
            return Err(self.err("empty octonion literal"));
        }
        let mut negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        self.skip_ws();
        self.term(negative, &mut out)?;
        loop {
            self.skip_ws();
            if self.rest().is_empty() {
                return Ok(out);
            }
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                return Err(self.err("expected `+`, `-`, or end of input"));
            }
            self.skip_ws();
            self.term(negative, &mut out)?;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::Rat;

    type Oct = Octonion<Rat>;

    fn e(i: usize) -> Oct {
        Oct::basis(i)
    }

    #[test]
    fn table_examples() {
        assert_eq!(&e(1) * &e(2), e(4));
        assert_eq!(&e(2) * &e(1), -&e(4));
        assert_eq!(&e(1) * &e(1), -&e(0));
        assert_eq!(&e(4) * &e(3), -&e(6));
    }

    #[test]
    fn congruence_rule_orientation() {
        // e_i e_j = +e_k with k-i = 3(j-i) mod 7 exactly when (j-i) mod 7 is
        // a quadratic residue mod 7.
        for i in 1..=7usize {
            for j in 1..=7usize {
                if i == j {
                    continue;
                }
                let diff = (j + 7 - i) % 7;
                let (sign, k) = MUL_TABLE[i][j];
                if matches!(diff, 1 | 2 | 4) {
                    assert_eq!(sign, 1, "e{i}e{j}");
                    assert_eq!((k + 7 - i) % 7, (3 * diff) % 7, "e{i}e{j} -> e{k}");
                } else {
                    assert_eq!(sign, -1, "e{i}e{j}");
                }
            }
        }
    }

    #[test]
    fn one_is_identity() {
        let x = parse_literal::<Rat>("3 - 2e1 + 1/5e7").unwrap();
        assert_eq!(&Oct::one() * &x, x);
        assert_eq!(&x * &Oct::one(), x);
    }

    #[test]
    fn conjugation() {
        assert_eq!(Oct::one().conj(), Oct::one());
        let x = parse_literal::<Rat>("2 + 3e5").unwrap();
        assert_eq!(x.conj(), parse_literal::<Rat>("2 - 3e5").unwrap());
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn norms() {
        assert_eq!(Oct::zero().norm_sq(), rat(0, 1));
        let x = parse_literal::<Rat>("1 + e1 + e2 + e3").unwrap();
        assert_eq!(x.norm_sq(), rat(4, 1));
        assert_eq!((&e(1) * &e(2)).norm_sq(), rat(1, 1));
    }

    #[test]
    fn associator_examples() {
        assert!(Oct::associator(&e(1), &e(2), &e(4)).is_zero());
        let expected = e(6).scale(&rat(-2, 1));
        assert_eq!(Oct::associator(&e(1), &e(2), &e(3)), expected);
    }

    #[test]
    fn exhaustive_alternator_symmetry() {
        for i in 0..8 {
            for j in 0..8 {
                for k in 0..8 {
                    let (a, b, c) = (e(i), e(j), e(k));
                    let abc = Oct::associator(&a, &b, &c);
                    assert_eq!(abc, Oct::associator(&b, &c, &a));
                    assert_eq!(abc, Oct::associator(&c, &a, &b));
                    assert_eq!(abc, -&Oct::associator(&b, &a, &c));
                }
            }
        }
    }

    #[test]
    fn left_mult_matrix_examples() {
        assert_eq!(Oct::one().left_mult_matrix(), crate::RatMatrix::identity(8));
        let l1 = e(1).left_mult_matrix();
        let e2_coords: Vec<Rat> = e(2).coords().to_vec();
        assert_eq!(l1.matvec(&e2_coords), e(4).coords().to_vec());
        let p = parse_literal::<Rat>("1/2 - e3 + 4e6").unwrap();
        let one_coords: Vec<Rat> = Oct::one().coords().to_vec();
        assert_eq!(
            p.left_mult_matrix().matvec(&one_coords),
            p.coords().to_vec()
        );
    }

    #[test]
    fn right_mult_matrix_examples() {
        assert_eq!(
            Oct::one().right_mult_matrix(),
            crate::RatMatrix::identity(8)
        );
        let r1 = e(1).right_mult_matrix();
        let e2_coords: Vec<Rat> = e(2).coords().to_vec();
        // e2*e1 = -e4
        assert_eq!(r1.matvec(&e2_coords), (-&e(4)).coords().to_vec());
        for i in 1..=7 {
            let ri = e(i).right_mult_matrix();
            assert_eq!(&ri * &ri, -&crate::RatMatrix::identity(8));
        }
    }

    #[test]
    fn parse_examples() {
        let x = parse_literal::<Rat>("1/2 + 3e2 - e7").unwrap();
        let mut expected = Oct::zero();
        *expected.coord_mut(0) = rat(1, 2);
        *expected.coord_mut(2) = rat(3, 1);
        *expected.coord_mut(7) = rat(-1, 1);
        assert_eq!(x, expected);
        assert_eq!(parse_literal::<Rat>("0").unwrap(), Oct::zero());
        assert_eq!(parse_literal::<Rat>("e1").unwrap(), e(1));
    }

    #[test]
    fn parse_errors_carry_position() {
        for (text, expect_pos) in [("", 0), ("1 +", 3), ("e9", 1), ("2/0", 2), ("1 & 2", 2)] {
            match parse_literal::<Rat>(text) {
                Err(Error::Parse { pos, .. }) => assert_eq!(pos, expect_pos, "input {text:?}"),
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn format_round_trip() {
        for text in ["0", "e1", "1/2 + 3e2 - e7", "-e7 + e1", "5 - 1/3e4"] {
            let x = parse_literal::<Rat>(text).unwrap();
            let rendered = format_literal(&x);
            assert_eq!(parse_literal::<Rat>(&rendered).unwrap(), x);
        }
        assert_eq!(
            format_literal(&parse_literal::<Rat>(" 1/2+3e2  -e7").unwrap()),
            "1/2 + 3e2 - e7"
        );
    }
}
