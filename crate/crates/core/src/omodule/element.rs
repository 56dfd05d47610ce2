use std::fmt;

use crate::error::{Error, Result};
use crate::octonion::Octonion;
use crate::scalar::Scalar;

/// Default cap on each type component; the constructors reject anything
/// larger so runaway inputs cannot allocate 8·(n+k)-dimensional spaces.
pub const MAX_TYPE_DIM: usize = 16;

/// The isomorphism type (n, k) of a module 𝕆ⁿ ⊕ 𝕆̄ᵏ.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModuleType {
    n: usize,
    k: usize,
}

impl ModuleType {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        Self::new_with_cap(n, k, MAX_TYPE_DIM)
    }

    pub fn new_with_cap(n: usize, k: usize, cap: usize) -> Result<Self> {
        if n > cap || k > cap {
            return Err(Error::TypeTooLarge { n, k, cap });
        }
        Ok(ModuleType { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Real dimension 8(n+k) of the module.
    pub fn dim(&self) -> usize {
        8 * (self.n + self.k)
    }
}

impl fmt::Display for ModuleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n, self.k)
    }
}

impl fmt::Debug for ModuleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleType({},{})", self.n, self.k)
    }
}

/// Length of an element: minimal counts of cyclic-plus and cyclic-minus
/// summands, computed as coordinate ranks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Length {
    pub l_plus: usize,
    pub l_minus: usize,
}

impl Length {
    pub fn as_type(&self) -> Result<ModuleType> {
        ModuleType::new(self.l_plus, self.l_minus)
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.l_plus, self.l_minus)
    }
}

/// Element of 𝕆ⁿ ⊕ 𝕆̄ᵏ: n octonion coordinates in the plus part, k in the
/// minus part. The minus-part coordinate stores the underlying octonion x,
/// acted on by a ⋆ x = ā·x.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleElement<T> {
    mtype: ModuleType,
    p: Vec<Octonion<T>>,
    q: Vec<Octonion<T>>,
}

impl<T: Scalar> ModuleElement<T> {
    pub fn from_parts(mtype: ModuleType, p: Vec<Octonion<T>>, q: Vec<Octonion<T>>) -> Result<Self> {
        if p.len() != mtype.n() {
            return Err(Error::Dimension {
                context: "ModuleElement p-coordinates",
                expected: mtype.n(),
                got: p.len(),
            });
        }
        if q.len() != mtype.k() {
            return Err(Error::Dimension {
                context: "ModuleElement q-coordinates",
                expected: mtype.k(),
                got: q.len(),
            });
        }
        Ok(ModuleElement { mtype, p, q })
    }

    pub fn zero(mtype: ModuleType) -> Self {
        ModuleElement {
            mtype,
            p: (0..mtype.n()).map(|_| Octonion::zero()).collect(),
            q: (0..mtype.k()).map(|_| Octonion::zero()).collect(),
        }
    }

    pub fn mtype(&self) -> ModuleType {
        self.mtype
    }

    pub fn p(&self) -> &[Octonion<T>] {
        &self.p
    }

    pub fn q(&self) -> &[Octonion<T>] {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.iter().all(Octonion::is_zero) && self.q.iter().all(Octonion::is_zero)
    }

    /// Flat coordinate vector: p-blocks then q-blocks, eight entries each.
    pub fn coords(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.mtype.dim());
        for x in self.p.iter().chain(&self.q) {
            out.extend_from_slice(x.coords());
        }
        out
    }

    pub fn from_coords(mtype: ModuleType, coords: &[T]) -> Result<Self> {
        if coords.len() != mtype.dim() {
            return Err(Error::Dimension {
                context: "ModuleElement::from_coords",
                expected: mtype.dim(),
                got: coords.len(),
            });
        }
        let block = |b: usize| Octonion::from_slice(&coords[8 * b..8 * (b + 1)]);
        let p = (0..mtype.n()).map(block).collect::<Result<_>>()?;
        let q = (mtype.n()..mtype.n() + mtype.k())
            .map(block)
            .collect::<Result<_>>()?;
        Ok(ModuleElement { mtype, p, q })
    }

    pub fn scale(&self, s: &T) -> Self {
        ModuleElement {
            mtype: self.mtype,
            p: self.p.iter().map(|x| x.scale(s)).collect(),
            q: self.q.iter().map(|x| x.scale(s)).collect(),
        }
    }
}

impl<T: Scalar> std::ops::Add for &ModuleElement<T> {
    type Output = ModuleElement<T>;
    fn add(self, rhs: &ModuleElement<T>) -> ModuleElement<T> {
        assert_eq!(self.mtype, rhs.mtype, "module type mismatch");
        ModuleElement {
            mtype: self.mtype,
            p: self.p.iter().zip(&rhs.p).map(|(a, b)| a + b).collect(),
            q: self.q.iter().zip(&rhs.q).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<T: Scalar> std::ops::Sub for &ModuleElement<T> {
    type Output = ModuleElement<T>;
    fn sub(self, rhs: &ModuleElement<T>) -> ModuleElement<T> {
        assert_eq!(self.mtype, rhs.mtype, "module type mismatch");
        ModuleElement {
            mtype: self.mtype,
            p: self.p.iter().zip(&rhs.p).map(|(a, b)| a - b).collect(),
            q: self.q.iter().zip(&rhs.q).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<T: Scalar> std::ops::Neg for &ModuleElement<T> {
    type Output = ModuleElement<T>;
    fn neg(self) -> ModuleElement<T> {
        ModuleElement {
            mtype: self.mtype,
            p: self.p.iter().map(|x| -x).collect(),
            q: self.q.iter().map(|x| -x).collect(),
        }
    }
}

impl<T: Scalar> fmt::Debug for ModuleElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleElement{} [", self.mtype)?;
        for (i, x) in self.p.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, " ; ")?;
        for (i, x) in self.q.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}
