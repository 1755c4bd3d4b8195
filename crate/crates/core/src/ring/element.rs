use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// An element of the integral group ring `ZG`, stored sparsely as
/// element index → nonzero coefficient.
#[derive(Clone)]
pub struct GroupRingElement {
    group: Arc<FiniteGroup>,
    coeffs: BTreeMap<usize, BigInt>,
}

pub(crate) fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for GroupRingElement {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}

impl Eq for GroupRingElement {}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl GroupRingElement {
    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        GroupRingElement {
            group: group.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(group: &Arc<FiniteGroup>) -> Self {
        Self::from_int(group, BigInt::one())
    }

    pub fn from_int(group: &Arc<FiniteGroup>, n: impl Into<BigInt>) -> Self {
        Self::from_terms(group, [(group.identity(), n.into())])
    }

    /// The basis element `g`.
    pub fn element(group: &Arc<FiniteGroup>, g: usize) -> Self {
        Self::from_terms(group, [(g, BigInt::one())])
    }

    /// Sums the given `(element, coefficient)` terms; panics on an index outside the group.
    pub fn from_terms(
        group: &Arc<FiniteGroup>,
        terms: impl IntoIterator<Item = (usize, BigInt)>,
    ) -> Self {
        let mut coeffs: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (g, c) in terms {
            assert!(g < group.order(), "element index {g} out of range");
            *coeffs.entry(g).or_insert_with(BigInt::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        GroupRingElement {
            group: group.clone(),
            coeffs,
        }
    }

    /// The norm element, the sum of all group elements.
    pub fn norm(group: &Arc<FiniteGroup>) -> Self {
        Self::from_terms(group, (0..group.order()).map(|g| (g, BigInt::one())))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1
            && self
                .coeffs
                .get(&self.group.identity())
                .is_some_and(|c| c.is_one())
    }

    pub fn coefficient(&self, g: usize) -> BigInt {
        self.coeffs.get(&g).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(g, c)| (*g, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul(other))
    }

    /// Sum; both operands must live over the same group.
    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(same_group(&self.group, &other.group));
        let mut coeffs = self.coeffs.clone();
        for (g, c) in &other.coeffs {
            let e = coeffs.entry(*g).or_insert_with(BigInt::zero);
            *e += c;
            if e.is_zero() {
                coeffs.remove(g);
            }
        }
        GroupRingElement {
            group: self.group.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GroupRingElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|(g, c)| (*g, -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(&self.group);
        }
        GroupRingElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|(g, c)| (*g, c * k)).collect(),
        }
    }

    /// Convolution product: the coefficient of `h` is the sum of `a(g1)·b(g2)` over `g1 g2 = h`.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(same_group(&self.group, &other.group));
        let g = &self.group;
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (x, a) in &self.coeffs {
            for (y, b) in &other.coeffs {
                *acc.entry(g.mul(*x, *y)).or_insert_with(BigInt::zero) += a * b;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        GroupRingElement {
            group: g.clone(),
            coeffs: acc,
        }
    }

    /// Left multiplication by the group element `g`.
    pub fn left_translate(&self, g: usize) -> Self {
        GroupRingElement {
            group: self.group.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(x, c)| (self.group.mul(g, *x), c.clone()))
                .collect(),
        }
    }

    /// Sum of coefficients, the ring map `ZG → Z`.
    pub fn augmentation(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Parses a literal such as `3*g5 - 1*g0`, `-g2 + 4`, or `0`.
    ///
    /// A bare integer is a multiple of the identity.
    pub fn parse(group: &Arc<FiniteGroup>, s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::input("empty group ring literal"));
        }
        let mut terms = Vec::new();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if first => (1, rest),
                _ => return Err(Error::input(format!("expected + or - in {s:?}"))),
            };
            first = false;
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let bad = || Error::input(format!("bad term {term:?} in {s:?}"));
            let (coeff, elem) = if let Some((c, e)) = term.split_once('*') {
                (c.parse::<BigInt>().map_err(|_| bad())?, Some(e))
            } else if term.starts_with('g') {
                (BigInt::one(), Some(term))
            } else {
                (term.parse::<BigInt>().map_err(|_| bad())?, None)
            };
            let g = match elem {
                Some(e) => {
                    let idx: usize = e
                        .strip_prefix('g')
                        .ok_or_else(bad)?
                        .parse()
                        .map_err(|_| bad())?;
                    if idx >= group.order() {
                        return Err(Error::input(format!(
                            "element g{idx} out of range for order {}",
                            group.order()
                        )));
                    }
                    idx
                }
                None => group.identity(),
            };
            terms.push((g, coeff * sign));
        }
        Ok(Self::from_terms(group, terms))
    }
}

impl fmt::Display for GroupRingElement {
    /// Canonical literal, terms in increasing element index, e.g. `-1*g0 + 3*g5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (g, c)) in self.coeffs.iter().enumerate() {
            if k == 0 {
                write!(f, "{c}*g{g}")?;
            } else if c.is_negative() {
                write!(f, " - {}*g{g}", c.abs())?;
            } else {
                write!(f, " + {c}*g{g}")?;
            }
        }
        Ok(())
    }
}
