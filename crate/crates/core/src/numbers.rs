//! Raney and p-Catalan numbers.
//!
//! With `R(p, r, n) = r / (np + r) * C(np + r, n)` the module offers four
//! routes to the same value:
//!
//! * [`raney_closed`], the defining closed form;
//! * [`raney_closed_alt`], the form `r / k * C(pk + r - 1, k - 1)`;
//! * [`raney_composition_sum`], the sum over strong compositions of `k` of
//!   `C(r, l1) C(p l1, l2) ... C(p l(j-1), lj)`;
//! * [`raney_convolution`], the r-fold convolution of p-Catalan numbers.
//!
//! All functions are generic over the integer type through [`Count`]. Use
//! [`ExactNat`](crate::ExactNat) unless the parameters are known to be small.

use std::fmt;

use num_integer::Integer;
use num_traits::FromPrimitive;

/// Integer type a count can be computed in.
///
/// Implemented for every unsigned primitive and for `BigUint`. Machine
/// integers overflow (and panic in debug builds) once the values outgrow them.
pub trait Count: Integer + Clone + FromPrimitive + fmt::Debug + fmt::Display {}

impl<T> Count for T where T: Integer + Clone + FromPrimitive + fmt::Debug + fmt::Display {}

fn lift<T: Count>(n: u64) -> T {
    T::from_u64(n).expect("value does not fit in the count type")
}

/// Divides `numerator` by `denominator`, panicking if the division leaves a
/// remainder. Every quotient taken in this module is an integer, so a
/// remainder means an arithmetic bug.
fn exact_div<T: Count>(numerator: T, denominator: T) -> T {
    let (quotient, remainder) = numerator.div_rem(&denominator);
    assert!(
        remainder.is_zero(),
        "inexact division {numerator} / {denominator}"
    );
    quotient
}

/// Binomial coefficient `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial<T: Count>(n: u64, k: i64) -> T {
    if k < 0 || k as u64 > n {
        return T::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = T::one();
    for i in 0..k {
        // acc = C(n, i) here, so acc * (n - i) is divisible by i + 1.
        acc = exact_div(acc * lift(n - i), lift(i + 1));
    }
    acc
}

fn check_params(p: u32, r: u32) {
    assert!(p >= 1, "p must be positive");
    assert!(r >= 1, "r must be positive");
}

/// `R(p, r, n) = r * C(np + r, n) / (np + r)`; equals 1 at `n = 0`.
///
/// Panics if `p` or `r` is zero.
pub fn raney_closed<T: Count>(p: u32, r: u32, n: u32) -> T {
    check_params(p, r);
    if n == 0 {
        return T::one();
    }
    let top = u64::from(n) * u64::from(p) + u64::from(r);
    exact_div(lift::<T>(r.into()) * binomial(top, n.into()), lift(top))
}

/// `R(p, r, k) = r * C(pk + r - 1, k - 1) / k`, defined for `k >= 1` only.
///
/// Panics if `p`, `r` or `k` is zero.
pub fn raney_closed_alt<T: Count>(p: u32, r: u32, k: u32) -> T {
    check_params(p, r);
    assert!(k >= 1, "the alternative closed form needs k >= 1");
    let top = u64::from(p) * u64::from(k) + u64::from(r) - 1;
    exact_div(
        lift::<T>(r.into()) * binomial(top, i64::from(k) - 1),
        lift(k.into()),
    )
}

/// The k-th p-Catalan number `C(pk, k - 1) / k`, with the value 1 at `k = 0`.
///
/// Counts full p-ary plane trees with `k` internal vertices and equals
/// `raney_closed(p, 1, k)`.
pub fn p_catalan<T: Count>(p: u32, k: u32) -> T {
    assert!(p >= 1, "p must be positive");
    if k == 0 {
        return T::one();
    }
    let top = u64::from(p) * u64::from(k);
    exact_div(binomial(top, i64::from(k) - 1), lift(k.into()))
}

/// Sum over strong compositions `(l1, ..., lj)` of `k` of
/// `C(r, l1) * C(p l1, l2) * ... * C(p l(j-1), lj)`.
///
/// Each summand counts the coral diagrams built in the tiers `l1, ..., lj`;
/// `k = 0` contributes the empty product.
pub fn raney_composition_sum<T: Count>(p: u32, r: u32, k: u32) -> T {
    check_params(p, r);
    compositions(k)
        .map(|lambda| tier_product::<T>(p, r, lambda.parts()))
        .fold(T::zero(), |acc, term| acc + term)
}

/// One summand of [`raney_composition_sum`]: the number of ways to place the
/// tiers `parts` on a (p,r) base.
pub fn tier_product<T: Count>(p: u32, r: u32, parts: &[u32]) -> T {
    let mut sites = u64::from(r);
    let mut acc = T::one();
    for &part in parts {
        acc = acc * binomial::<T>(sites, part.into());
        sites = u64::from(p) * u64::from(part);
    }
    acc
}

/// `R(p, r, k)` as the sum over length-`r` weak compositions `(i1, ..., ir)`
/// of `k` of the products of p-Catalan numbers `c(i1) * ... * c(ir)`.
pub fn raney_convolution<T: Count>(p: u32, r: u32, k: u32) -> T {
    check_params(p, r);
    let catalans: Vec<T> = (0..=k).map(|i| p_catalan(p, i)).collect();
    weak_compositions(k, r)
        .map(|w| {
            w.parts()
                .iter()
                .fold(T::one(), |acc, &i| acc * catalans[i as usize].clone())
        })
        .fold(T::zero(), |acc, term| acc + term)
}

/// An ordered partition of `total` into positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Returns `None` if a part is zero.
    pub fn new(parts: Vec<u32>) -> Option<Self> {
        parts.iter().all(|&p| p >= 1).then_some(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

/// An ordered sequence of `len` nonnegative parts summing to `total`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakComposition {
    parts: Vec<u32>,
}

impl WeakComposition {
    /// Returns `None` for an empty part list.
    pub fn new(parts: Vec<u32>) -> Option<Self> {
        (!parts.is_empty()).then_some(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    write!(f, "(")?;
    for (i, part) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{part}")?;
    }
    write!(f, ")")
}

/// Strong compositions of `total` in lexicographic order of their parts.
///
/// `compositions(0)` yields only the empty composition.
pub fn compositions(total: u32) -> Compositions {
    Compositions {
        next: Some(vec![1; total as usize]),
    }
}

#[derive(Debug, Clone)]
pub struct Compositions {
    next: Option<Vec<u32>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        // Successor: merge the last two parts (a, b) into a + 1 and append
        // b - 1 ones. A single part is the last composition.
        if current.len() >= 2 {
            let mut succ = current.clone();
            let b = succ.pop().unwrap();
            *succ.last_mut().unwrap() += 1;
            succ.extend(std::iter::repeat_n(1, b as usize - 1));
            self.next = Some(succ);
        }
        Some(Composition { parts: current })
    }
}

/// Length-`len` weak compositions of `total` in lexicographic order.
///
/// Panics if `len` is zero.
pub fn weak_compositions(total: u32, len: u32) -> WeakCompositions {
    assert!(len >= 1, "weak compositions need at least one part");
    let mut first = vec![0; len as usize];
    *first.last_mut().unwrap() = total;
    WeakCompositions { next: Some(first) }
}

#[derive(Debug, Clone)]
pub struct WeakCompositions {
    next: Option<Vec<u32>>,
}

impl Iterator for WeakCompositions {
    type Item = WeakComposition;

    fn next(&mut self) -> Option<WeakComposition> {
        let current = self.next.take()?;
        // Successor: bump the rightmost non-final position whose suffix still
        // holds mass, then put all remaining mass into the final part.
        let last = current.len() - 1;
        let mut suffix = current[last];
        for i in (0..last).rev() {
            if suffix > 0 {
                let mut succ = current.clone();
                succ[i] += 1;
                succ[i + 1..].iter_mut().for_each(|x| *x = 0);
                succ[last] = suffix - 1;
                self.next = Some(succ);
                break;
            }
            suffix += current[i];
        }
        Some(WeakComposition { parts: current })
    }
}
