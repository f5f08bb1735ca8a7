//! Closed-form Kirchhoff values of the named graph families, as exact
//! rational functions of their integer parameters.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{frac, Rational};

/// The class `Cat(n; t)`: cacti with `n` vertices and `t` cycles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CactusClassSpec {
    n: usize,
    t: usize,
}

impl CactusClassSpec {
    pub fn new(n: usize, t: usize) -> Result<Self> {
        if n == 0 || 2 * t > n - 1 {
            return Err(Error::InvalidParameter(format!(
                "need n >= 1 and 0 <= t <= (n-1)/2, got n = {n}, t = {t}"
            )));
        }
        Ok(CactusClassSpec { n, t })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Order of the internal path of the extremal chain, `n - 2t`.
    pub fn s(&self) -> usize {
        self.n - 2 * self.t
    }

    /// Number of triangles on the first side of the extremal chain, `⌊t/2⌋`.
    pub fn k(&self) -> usize {
        self.t / 2
    }

    /// All valid specs with `n` in the given range.
    pub fn all_with_order(ns: std::ops::RangeInclusive<usize>) -> Vec<CactusClassSpec> {
        ns.flat_map(|n| (0..=(n.saturating_sub(1)) / 2).map(move |t| CactusClassSpec { n, t }))
            .filter(|s| s.n >= 1)
            .collect()
    }
}

impl std::fmt::Display for CactusClassSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cat({};{})", self.n, self.t)
    }
}

fn i(x: usize) -> i128 {
    x as i128
}

/// `Kf(P_m) = (m³ - m) / 6`.
pub fn kf_path(m: usize) -> Rational {
    let m = i(m);
    frac(m * m * m - m, 6)
}

/// `Kf_{r_1}(P_m) = m (m - 1) / 2`, transmission at an end of a path.
pub fn kf_path_end_transmission(m: usize) -> Rational {
    let m = i(m);
    frac(m * (m - 1), 2)
}

fn check_cycle(l: usize) -> Result<()> {
    if l < 3 {
        return Err(Error::InvalidParameter(format!("cycle length must be at least 3, got {l}")));
    }
    Ok(())
}

/// `Kf(C_l) = (l³ - l) / 12`.
pub fn kf_cycle(l: usize) -> Result<Rational> {
    check_cycle(l)?;
    let l = i(l);
    Ok(frac(l * l * l - l, 12))
}

/// `Kf_v(C_l) = (l² - 1) / 6`.
pub fn kf_cycle_transmission(l: usize) -> Result<Rational> {
    check_cycle(l)?;
    let l = i(l);
    Ok(frac(l * l - 1, 6))
}

/// `Kf(Q_k) = 2/9 (2k³ + 6k² + k)` for the chain of `k` triangles.
pub fn kf_triangle_chain(k: usize) -> Rational {
    let k = i(k);
    frac(2 * (2 * k * k * k + 6 * k * k + k), 9)
}

/// `Kf_u(Q_k) = 2/3 (k² + k)` at a degree-2 vertex of a terminal triangle.
pub fn kf_triangle_chain_transmission(k: usize) -> Rational {
    let k = i(k);
    frac(2 * (k * k + k), 3)
}

/// Closed forms for the triangle-with-tail gadget on `k` vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct GadgetValues {
    /// `Kf(G_10) = (k³ - 11k + 18) / 6`.
    pub kf: Rational,
    /// Transmission at the free end of the tail, `(3k² - 3k - 10) / 6`.
    pub tail_end_transmission: Rational,
    /// Transmission at a degree-2 triangle vertex, `(3k² - 11k + 14) / 6`.
    pub triangle_transmission: Rational,
}

fn check_gadget(k: usize) -> Result<()> {
    if k <= 3 {
        return Err(Error::InvalidParameter(format!("gadget order must exceed 3, got {k}")));
    }
    Ok(())
}

pub fn kf_gadget_g10(k: usize) -> Result<GadgetValues> {
    check_gadget(k)?;
    let k = i(k);
    Ok(GadgetValues {
        kf: frac(k * k * k - 11 * k + 18, 6),
        tail_end_transmission: frac(3 * k * k - 3 * k - 10, 6),
        triangle_transmission: frac(3 * k * k - 11 * k + 14, 6),
    })
}

/// `(Kf(F), Kf_{r_s}(F))` for `F = (Q_k, u) ⊕ (P_s, r_1)`.
pub fn kf_f_and_transmission(k: usize, s: usize) -> Result<(Rational, Rational)> {
    if s == 0 {
        return Err(Error::InvalidParameter("path order s must be at least 1".into()));
    }
    let (k, s) = (i(k), i(s));
    let kf = frac(2 * (2 * k * k * k + 3 * k * k - 2 * k), 9)
        + frac(s * s * s - s, 6)
        + frac(k * s * (2 * k + 3 * s - 1), 3);
    let tr = frac(s * s - s, 2) + frac(2 * (k * k + k), 3) + frac(2 * k * (s - 1), 1);
    Ok((kf, tr))
}

/// Piecewise closed form for `Kf(C_{n,t})`.
pub fn kf_extremal_chain(spec: CactusClassSpec) -> Rational {
    let (n, t) = (i(spec.n), i(spec.t));
    let common = 3 * n * n * n - 12 * n * t * t - 6 * n * t + 8 * t * t * t + 12 * t * t;
    if spec.t.is_multiple_of(2) {
        frac(common - 3 * n - 2 * t, 18)
    } else {
        frac(common - 15 * n + 22 * t + 12, 18)
    }
}

/// Gain of replacing a pendant `C_k` by the gadget (`|G_1| = m1`):
/// `(k-3)(k²+3k-12)/12 + (m1-1)(2k+3)(k-3)/6`.
pub fn op3_gain(k: usize, m1: usize) -> Result<Rational> {
    check_gadget(k)?;
    check_order(m1)?;
    let (k, m1) = (i(k), i(m1));
    Ok(frac((k - 3) * (k * k + 3 * k - 12), 12) + frac((m1 - 1) * (2 * k + 3) * (k - 3), 6))
}

/// `(2k - 5)(k - 3) / 6`, the transmission gap bounding the cycle-to-gadget
/// gain when a second graph hangs opposite the first.
pub fn op4_gain_lower_bound(k: usize) -> Result<Rational> {
    check_gadget(k)?;
    let k = i(k);
    Ok(frac((2 * k - 5) * (k - 3), 6))
}

/// `(4k/3 - 4)(m2 - m1)`, gain of swapping the two attachments of the gadget.
pub fn op5_gain(k: usize, m1: usize, m2: usize) -> Result<Rational> {
    check_gadget(k)?;
    check_order(m1)?;
    check_order(m2)?;
    let k = i(k);
    Ok(frac((4 * k - 12) * (i(m2) - i(m1)), 3))
}

fn check_order(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParameter("graph order must be positive".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn spec_validation() {
        assert!(CactusClassSpec::new(0, 0).is_err());
        assert!(CactusClassSpec::new(4, 2).is_err());
        let s = CactusClassSpec::new(9, 3).unwrap();
        assert_eq!((s.s(), s.k()), (3, 1));
        assert_eq!(CactusClassSpec::new(1, 0).unwrap().s(), 1);
        let all = CactusClassSpec::all_with_order(1..=5);
        assert_eq!(all.len(), 1 + 1 + 2 + 2 + 3);
    }

    #[test]
    fn path_and_cycle() {
        assert_eq!(kf_path(1), int(0));
        assert_eq!(kf_path(2), int(1));
        assert_eq!(kf_path(4), int(10));
        assert_eq!(kf_cycle(3).unwrap(), int(2));
        assert_eq!(kf_cycle(4).unwrap(), int(5));
        assert!(kf_cycle(2).is_err());
        assert_eq!(kf_cycle_transmission(3).unwrap(), frac(4, 3));
        assert_eq!(kf_cycle_transmission(4).unwrap(), frac(5, 2));
        assert!(kf_cycle_transmission(1).is_err());
    }

    #[test]
    fn triangle_chain() {
        assert_eq!(kf_triangle_chain(1), int(2));
        assert_eq!(kf_triangle_chain_transmission(1), frac(4, 3));
        assert_eq!(kf_triangle_chain(0), int(0));
        assert_eq!(kf_triangle_chain_transmission(0), int(0));
        assert_eq!(kf_triangle_chain(2), frac(28, 3));
        assert_eq!(kf_triangle_chain(3), frac(74, 3));
    }

    #[test]
    fn gadget() {
        let v = kf_gadget_g10(4).unwrap();
        assert_eq!(v.kf, frac(19, 3));
        assert_eq!(v.tail_end_transmission, frac(13, 3));
        assert_eq!(v.triangle_transmission, int(3));
        assert_eq!(kf_gadget_g10(5).unwrap().kf, frac(44, 3));
        assert!(kf_gadget_g10(3).is_err());
    }

    #[test]
    fn f_degenerates() {
        for s in 1..6 {
            let (kf, tr) = kf_f_and_transmission(0, s).unwrap();
            assert_eq!(kf, kf_path(s));
            assert_eq!(tr, frac((s * (s - 1)) as i128, 2));
        }
        assert_eq!(kf_f_and_transmission(1, 1).unwrap().0, int(2));
        assert!(kf_f_and_transmission(1, 0).is_err());
    }

    #[test]
    fn extremal_chain_spot_values() {
        let spec = |n, t| CactusClassSpec::new(n, t).unwrap();
        assert_eq!(kf_extremal_chain(spec(5, 2)), frac(28, 3));
        assert_eq!(kf_extremal_chain(spec(7, 3)), frac(74, 3));
        for n in 1..15 {
            assert_eq!(kf_extremal_chain(spec(n, 0)), kf_path(n));
        }
    }

    #[test]
    fn gains() {
        assert_eq!(op3_gain(4, 1).unwrap(), frac(4, 3));
        assert_eq!(op3_gain(4, 2).unwrap(), frac(19, 6));
        assert_eq!(op4_gain_lower_bound(4).unwrap(), frac(1, 2));
        assert_eq!(op5_gain(4, 1, 3).unwrap(), frac(8, 3));
        for k in 4..9 {
            for m in 1..6 {
                assert_eq!(op5_gain(k, m, m).unwrap(), int(0));
                assert_eq!(op5_gain(k, m, m + 1).unwrap(), -op5_gain(k, m + 1, m).unwrap());
            }
        }
        assert!(op3_gain(3, 1).is_err());
        assert!(op5_gain(5, 0, 1).is_err());
    }
}
