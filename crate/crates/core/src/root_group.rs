//! Root groups: the additive group of GF(q) and the Suzuki 2-group A(n,θ).
//!
//! Both groups are written additively. A(n,θ) is **not** commutative:
//! `(a,b) + (c,d) = (a+c, b+d+a·θ(c))`, so `x + y` and `y + x` generally
//! differ and `x - y` always means `x + (-y)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{FieldElement, FieldError, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootGroupError {
    #[error("element {0} does not belong to this root group")]
    Foreign(RootGroupElement),
    #[error("the Suzuki 2-group needs a Tits field of odd degree at least 3, got {0}")]
    NotSuzukiField(FieldSpec),
    #[error("h_lambda requires a nonzero lambda")]
    ZeroLambda,
    #[error("h_lambda is only defined on the Suzuki 2-group")]
    NotSuzuki,
    #[error("cannot parse root group element from {0:?}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootGroupKind {
    Abelian,
    SuzukiTwoGroup,
}

/// An element of U: a field element or a coordinate pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootGroupElement {
    Scalar(FieldElement),
    Pair(FieldElement, FieldElement),
}

impl fmt::Display for RootGroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootGroupElement::Scalar(a) => write!(f, "{a}"),
            RootGroupElement::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

impl FromStr for RootGroupElement {
    type Err = RootGroupError;

    /// Accepts `"a"` or `"(a,b)"` with decimal integer coordinates.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || RootGroupError::Parse(s.to_string());
        let t = s.trim();
        let coord = |x: &str| -> Result<FieldElement, RootGroupError> {
            let v: u32 = x.trim().parse().map_err(|_| err())?;
            // Range against a concrete field is checked by the owning group.
            if v >> crate::field::MAX_DEGREE != 0 {
                return Err(err());
            }
            Ok(FieldElement::from_raw(v))
        };
        if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let (a, b) = inner.split_once(',').ok_or_else(err)?;
            Ok(RootGroupElement::Pair(coord(a)?, coord(b)?))
        } else {
            Ok(RootGroupElement::Scalar(coord(t)?))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootGroup {
    kind: RootGroupKind,
    spec: FieldSpec,
}

impl RootGroup {
    /// `(GF(q), +)`.
    pub fn abelian(spec: FieldSpec) -> Self {
        RootGroup { kind: RootGroupKind::Abelian, spec }
    }

    /// `A(n,θ)` over a Tits field of odd degree `n ≥ 3`.
    pub fn suzuki(spec: FieldSpec) -> Result<Self, RootGroupError> {
        if !spec.is_tits() || spec.degree() < 3 || spec.degree().is_multiple_of(2) {
            return Err(RootGroupError::NotSuzukiField(spec));
        }
        Ok(RootGroup { kind: RootGroupKind::SuzukiTwoGroup, spec })
    }

    pub fn kind(&self) -> RootGroupKind {
        self.kind
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// `q` for the abelian group, `q²` for A(n,θ).
    pub fn size(&self) -> usize {
        let q = self.spec.order() as usize;
        match self.kind {
            RootGroupKind::Abelian => q,
            RootGroupKind::SuzukiTwoGroup => q * q,
        }
    }

    pub fn zero(&self) -> RootGroupElement {
        match self.kind {
            RootGroupKind::Abelian => RootGroupElement::Scalar(FieldElement::ZERO),
            RootGroupKind::SuzukiTwoGroup => RootGroupElement::Pair(FieldElement::ZERO, FieldElement::ZERO),
        }
    }

    pub fn contains(&self, x: &RootGroupElement) -> bool {
        match (self.kind, x) {
            (RootGroupKind::Abelian, RootGroupElement::Scalar(a)) => self.spec.contains(a.bits()),
            (RootGroupKind::SuzukiTwoGroup, RootGroupElement::Pair(a, b)) => {
                self.spec.contains(a.bits()) && self.spec.contains(b.bits())
            }
            _ => false,
        }
    }

    fn check(&self, x: &RootGroupElement) -> Result<(), RootGroupError> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(RootGroupError::Foreign(*x))
        }
    }

    /// Dense index: `a` for scalars, `a·2^n + b` for pairs.
    pub fn index_of(&self, x: &RootGroupElement) -> Result<usize, RootGroupError> {
        self.check(x)?;
        Ok(match *x {
            RootGroupElement::Scalar(a) => a.bits() as usize,
            RootGroupElement::Pair(a, b) => ((a.bits() as usize) << self.spec.degree()) | b.bits() as usize,
        })
    }

    /// Inverse of [`RootGroup::index_of`]. Panics if `index >= size`.
    pub fn element(&self, index: usize) -> RootGroupElement {
        assert!(index < self.size(), "index {index} out of range");
        match self.kind {
            RootGroupKind::Abelian => RootGroupElement::Scalar(self.fe(index as u32)),
            RootGroupKind::SuzukiTwoGroup => {
                let n = self.spec.degree();
                let mask = (1usize << n) - 1;
                RootGroupElement::Pair(self.fe((index >> n) as u32), self.fe((index & mask) as u32))
            }
        }
    }

    fn fe(&self, v: u32) -> FieldElement {
        self.spec.element(v).expect("index decodes inside the field")
    }

    pub fn elements(&self) -> impl Iterator<Item = RootGroupElement> + '_ {
        (0..self.size()).map(|i| self.element(i))
    }

    pub fn pair(&self, a: u32, b: u32) -> Result<RootGroupElement, RootGroupError> {
        let x = RootGroupElement::Pair(self.spec.element(a)?, self.spec.element(b)?);
        self.check(&x)?;
        Ok(x)
    }

    pub fn scalar(&self, a: u32) -> Result<RootGroupElement, RootGroupError> {
        let x = RootGroupElement::Scalar(self.spec.element(a)?);
        self.check(&x)?;
        Ok(x)
    }

    /// Group operation; noncommutative for A(n,θ).
    pub fn add(&self, x: &RootGroupElement, y: &RootGroupElement) -> Result<RootGroupElement, RootGroupError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.add_unchecked(x, y))
    }

    pub(crate) fn add_unchecked(&self, x: &RootGroupElement, y: &RootGroupElement) -> RootGroupElement {
        let f = &self.spec;
        match (*x, *y) {
            (RootGroupElement::Scalar(a), RootGroupElement::Scalar(b)) => RootGroupElement::Scalar(f.add(a, b)),
            (RootGroupElement::Pair(a, b), RootGroupElement::Pair(c, d)) => {
                let twist = f.mul(a, f.theta(c));
                RootGroupElement::Pair(f.add(a, c), f.add(f.add(b, d), twist))
            }
            _ => unreachable!("mixed element kinds"),
        }
    }

    /// `-(a,b) = (a, b + a^(1+θ))`; identity on the abelian group.
    pub fn neg(&self, x: &RootGroupElement) -> Result<RootGroupElement, RootGroupError> {
        self.check(x)?;
        Ok(self.neg_unchecked(x))
    }

    pub(crate) fn neg_unchecked(&self, x: &RootGroupElement) -> RootGroupElement {
        match *x {
            RootGroupElement::Scalar(a) => RootGroupElement::Scalar(a),
            RootGroupElement::Pair(a, b) => {
                RootGroupElement::Pair(a, self.spec.add(b, self.spec.one_plus_theta(a)))
            }
        }
    }

    /// `x·2 = x + x`; equals `(0, a^(1+θ))` on A(n,θ).
    pub fn double(&self, x: &RootGroupElement) -> Result<RootGroupElement, RootGroupError> {
        self.add(x, x)
    }

    /// Elements commuting with everything, by brute force.
    pub fn center(&self) -> Vec<RootGroupElement> {
        let all: Vec<_> = self.elements().collect();
        all.iter()
            .filter(|x| all.iter().all(|y| self.add_unchecked(x, y) == self.add_unchecked(y, x)))
            .copied()
            .collect()
    }

    /// The center as described in closed form: everything for the abelian
    /// group, the pairs with first coordinate zero for A(n,θ).
    pub fn center_closed_form(&self) -> Vec<RootGroupElement> {
        self.elements()
            .filter(|x| match x {
                RootGroupElement::Scalar(_) => true,
                RootGroupElement::Pair(a, _) => a.is_zero(),
            })
            .collect()
    }

    /// Nonzero elements with `x·2 = 0`.
    pub fn involutions(&self) -> Vec<RootGroupElement> {
        let zero = self.zero();
        self.elements()
            .filter(|x| *x != zero && self.add_unchecked(x, x) == zero)
            .collect()
    }

    /// Order of `x` in U.
    pub fn element_order(&self, x: &RootGroupElement) -> usize {
        let zero = self.zero();
        let mut acc = *x;
        let mut k = 1;
        while acc != zero {
            acc = self.add_unchecked(&acc, x);
            k += 1;
        }
        k
    }

    /// `h_λ: (a,b) ↦ (λa, λ^(1+θ) b)` on A(n,θ).
    pub fn h_lambda(&self, lambda: FieldElement, x: &RootGroupElement) -> Result<RootGroupElement, RootGroupError> {
        if self.kind != RootGroupKind::SuzukiTwoGroup {
            return Err(RootGroupError::NotSuzuki);
        }
        self.check(x)?;
        let lambda = self.spec.element(lambda.bits())?;
        if lambda.is_zero() {
            return Err(RootGroupError::ZeroLambda);
        }
        let RootGroupElement::Pair(a, b) = *x else { unreachable!() };
        let f = &self.spec;
        Ok(RootGroupElement::Pair(f.mul(lambda, a), f.mul(f.one_plus_theta(lambda), b)))
    }
}
