//! Exact real-root isolation for integer polynomials via Sturm sequences.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Largest real root of `p`, to about 1e-13 relative accuracy.
pub fn largest_real_root(p: &IntPolynomial) -> Result<f64> {
    let iso = Isolated::largest(p)?;
    let (lo, hi) = iso.refine_to(&BigRational::new(BigInt::one(), BigInt::from(1u64 << 50)));
    Ok(((to_f64(&lo) + to_f64(&hi)) / 2.0).max(to_f64(&lo)).min(to_f64(&hi)))
}

/// Exact comparison of the largest real roots of `p` and `q`.
pub fn compare_largest_roots(p: &IntPolynomial, q: &IntPolynomial) -> Result<Ordering> {
    let mut a = Isolated::largest(p)?;
    let mut b = Isolated::largest(q)?;
    let common = gcd(&a.sturm[0], &b.sturm[0]);
    let shared = common.degree().unwrap_or(0) > 0 && {
        let g = Sturm::new(common);
        g.count(&a.lo, &a.hi) == 1
    };
    if shared {
        // p's largest root r is also a root of q; shrink p's interval until it
        // isolates r among q's roots too, then ask whether q has anything above.
        while b.chain().count(&a.lo, &a.hi) > 1 {
            a.bisect();
        }
        return Ok(if b.chain().count(&a.hi, &b.bound) == 0 {
            Ordering::Equal
        } else {
            Ordering::Less
        });
    }
    loop {
        if a.hi < b.lo {
            return Ok(Ordering::Less);
        }
        if b.hi < a.lo {
            return Ok(Ordering::Greater);
        }
        a.bisect();
        b.bisect();
    }
}

/// A Sturm chain with positive-scaled integer members.
struct Sturm {
    seq: Vec<IntPolynomial>,
}

impl Sturm {
    fn new(p: IntPolynomial) -> Self {
        let sf = squarefree(&p);
        let mut seq = vec![primitive(&sf), primitive(&sf.derivative())];
        while seq.last().is_some_and(|s| s.degree().unwrap_or(0) > 0) {
            let k = seq.len();
            let r = rem(&seq[k - 2], &seq[k - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(primitive(&-&r));
        }
        Sturm { seq }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut last = 0;
        let mut changes = 0;
        for s in &self.seq {
            let v = sign_at(s, x);
            if v != 0 {
                if last != 0 && v != last {
                    changes += 1;
                }
                last = v;
            }
        }
        changes
    }

    /// Number of distinct roots in `(lo, hi]`.
    fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations(lo) - self.variations(hi)
    }
}

impl std::ops::Index<usize> for Sturm {
    type Output = IntPolynomial;
    fn index(&self, i: usize) -> &IntPolynomial {
        &self.seq[i]
    }
}

/// Interval `(lo, hi]` containing the largest root and no other root.
struct Isolated {
    sturm: Sturm,
    lo: BigRational,
    hi: BigRational,
    bound: BigRational,
}

impl Isolated {
    fn largest(p: &IntPolynomial) -> Result<Self> {
        if p.degree().unwrap_or(0) == 0 {
            return Err(Error::NoRealRoot);
        }
        let sturm = Sturm::new(p.clone());
        let bound = BigRational::from_integer(cauchy_bound(&sturm[0]));
        let neg = -bound.clone();
        if sturm.count(&neg, &bound) == 0 {
            return Err(Error::NoRealRoot);
        }
        let mut iso = Isolated {
            sturm,
            lo: neg,
            hi: bound.clone(),
            bound,
        };
        // Keep (lo, hi] holding the largest root with nothing above hi.
        while iso.sturm.count(&iso.lo, &iso.hi) > 1 {
            let mid = (&iso.lo + &iso.hi) / BigRational::from_integer(2.into());
            if iso.sturm.count(&mid, &iso.bound) >= 1 {
                iso.lo = mid;
            } else {
                iso.hi = mid;
            }
        }
        Ok(iso)
    }

    fn chain(&self) -> &Sturm {
        &self.sturm
    }

    /// Halve the interval, keeping the root. The root is simple, so the
    /// squarefree polynomial changes sign across it.
    fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        let f = &self.sturm[0];
        let s_mid = sign_at(f, &mid);
        if s_mid == 0 {
            self.lo = &mid - (&self.hi - &mid) / BigRational::from_integer(1024.into());
            self.hi = mid;
            // Keep isolation after the asymmetric shrink.
            while self.sturm.count(&self.lo, &self.hi) != 1 {
                self.lo = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
            }
            return;
        }
        if s_mid == sign_at(f, &self.hi) {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    fn refine_to(mut self, rel: &BigRational) -> (BigRational, BigRational) {
        loop {
            let scale = self.hi.abs().max(BigRational::one());
            if &self.hi - &self.lo <= rel * scale {
                return (self.lo, self.hi);
            }
            self.bisect();
        }
    }
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Sign of `p(a/b)` with `b > 0`, computed as the sign of `Σ c_i a^i b^{d−i}`.
fn sign_at(p: &IntPolynomial, x: &BigRational) -> i32 {
    let Some(d) = p.degree() else { return 0 };
    let (a, b) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut apow = BigInt::one();
    let bpows: Vec<BigInt> = std::iter::successors(Some(BigInt::one()), |bp| Some(bp * b))
        .take(d + 1)
        .collect();
    for (i, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc += c * &apow * &bpows[d - i];
        }
        apow *= a;
    }
    match acc.sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
    }
}

fn cauchy_bound(p: &IntPolynomial) -> BigInt {
    let lc = p.leading().expect("nonzero").abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    BigInt::one() + max.div_ceil(&lc)
}

/// Divide by the content, keeping the sign of every coefficient.
fn primitive(p: &IntPolynomial) -> IntPolynomial {
    let g = p
        .coeffs()
        .iter()
        .fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() || g.is_one() {
        return p.clone();
    }
    IntPolynomial::new(p.coeffs().iter().map(|c| c / &g).collect())
}

/// Remainder of `a` by `b` up to a positive scalar factor.
fn rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("nonzero divisor");
    let lb = b.leading().unwrap().clone();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.leading().unwrap().clone();
        // r ← |lb|·r − sign(lb)·lr·x^{dr−db}·b keeps the scale positive.
        let scale = IntPolynomial::new(vec![lb.abs()]);
        let mut shift = vec![BigInt::zero(); dr - db];
        shift.push(if lb.is_negative() { -lr } else { lr });
        r = &(&scale * &r) - &(&IntPolynomial::new(shift) * b);
        r = primitive(&r);
    }
    r
}

fn gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let (mut a, mut b) = (primitive(a), primitive(b));
    while !b.is_zero() {
        let r = rem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    a
}

fn squarefree(p: &IntPolynomial) -> IntPolynomial {
    let g = gcd(p, &p.derivative());
    if g.degree().unwrap_or(0) == 0 {
        return p.clone();
    }
    exact_div(p, &g)
}

/// Exact quotient `a / b` for `b | a` over ℚ, returned as a primitive integer polynomial.
fn exact_div(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().unwrap();
    let lb = BigRational::from_integer(b.leading().unwrap().clone());
    let mut r: Vec<BigRational> = a.coeffs().iter().cloned().map(BigRational::from_integer).collect();
    let da = r.len() - 1;
    let mut q = vec![BigRational::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let c = &r[k + db] / &lb;
        for (j, bj) in b.coeffs().iter().enumerate() {
            r[k + j] -= &c * BigRational::from_integer(bj.clone());
        }
        q[k] = c;
    }
    let lcm = q.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    primitive(&IntPolynomial::new(
        q.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect(),
    ))
}
