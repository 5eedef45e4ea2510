//! Integral binary quadratic forms, the GL(2,Z) action and reduction.
//!
//! A form `[a,b,c]` stands for `a x^2 + b x y + c y^2` with associated
//! matrix `M_f = [[a, b/2], [b/2, c]]`.  GL(2,Z) acts by
//! `M_{A.f} = A M_f tA`.  The reduced representative of a positive
//! semidefinite orbit satisfies `0 <= b <= a <= c`, singular orbits
//! normalize to `[0,0,c]`.
//!
//! Entries are `i64` with `i128` intermediates; every conversion back is
//! checked, so arithmetic is exact on the whole supported range.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::rat::isqrt;

/// Integral binary quadratic form `[a,b,c]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BinQF {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl BinQF {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        BinQF { a, b, c }
    }

    pub fn zero() -> Self {
        BinQF::new(0, 0, 0)
    }

    /// Discriminant `b^2 - 4ac`.
    pub fn disc(&self) -> i128 {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        b * b - 4 * a * c
    }

    /// Positive semidefinite: `a >= 0`, `c >= 0` and `b^2 <= 4ac`.
    pub fn is_psd(&self) -> bool {
        self.a >= 0 && self.c >= 0 && self.disc() <= 0
    }

    /// `gcd(a, b, c)`, with content 0 for the zero form.
    pub fn content(&self) -> i64 {
        gcd(gcd(self.a.abs(), self.b.abs()), self.c.abs())
    }

    /// GL-reduced normal form: `0 <= b <= a <= c`, or singular `[0,0,c]`.
    pub fn is_reduced(&self) -> bool {
        if self.a == 0 {
            self.b == 0 && self.c >= 0
        } else {
            0 <= self.b && self.b <= self.a && self.a <= self.c
        }
    }

    pub fn is_singular(&self) -> bool {
        self.disc() == 0
    }

    /// Componentwise sum.
    pub fn add(&self, o: &BinQF) -> BinQF {
        BinQF::new(self.a + o.a, self.b + o.b, self.c + o.c)
    }

    pub fn sub(&self, o: &BinQF) -> BinQF {
        BinQF::new(self.a - o.a, self.b - o.b, self.c - o.c)
    }

    pub fn scale(&self, d: i64) -> BinQF {
        BinQF::new(self.a * d, self.b * d, self.c * d)
    }

    /// True when `d` divides all three entries.
    pub fn divisible_by(&self, d: i64) -> bool {
        self.a % d == 0 && self.b % d == 0 && self.c % d == 0
    }

    pub fn div_exact(&self, d: i64) -> BinQF {
        debug_assert!(self.divisible_by(d));
        BinQF::new(self.a / d, self.b / d, self.c / d)
    }
}

/// Deterministic ordering: by `-disc = 4ac - b^2`, then `a`, then `b`,
/// then `c`.  Serialized files and pivot searches use this order.
impl Ord for BinQF {
    fn cmp(&self, other: &Self) -> Ordering {
        (-self.disc(), self.a, self.b, self.c).cmp(&(-other.disc(), other.a, other.b, other.c))
    }
}

impl PartialOrd for BinQF {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

fn to_i64(x: i128) -> i64 {
    i64::try_from(x).expect("binary quadratic form entry overflowed i64")
}

/// Element of GL(2,Z).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct UnimodMat {
    pub m: [[i64; 2]; 2],
}

impl UnimodMat {
    pub fn new(m: [[i64; 2]; 2]) -> Result<Self> {
        let u = UnimodMat { m };
        let d = u.det();
        if d != 1 && d != -1 {
            return Err(Error::BadLattice(format!("matrix {m:?} is not unimodular")));
        }
        Ok(u)
    }

    pub fn identity() -> Self {
        UnimodMat { m: [[1, 0], [0, 1]] }
    }

    /// `S = [[0,-1],[1,0]]`.
    pub fn s() -> Self {
        UnimodMat { m: [[0, -1], [1, 0]] }
    }

    /// `T = [[1,1],[0,1]]`.
    pub fn t() -> Self {
        UnimodMat { m: [[1, 1], [0, 1]] }
    }

    /// `E = diag(1,-1)`.
    pub fn e() -> Self {
        UnimodMat { m: [[1, 0], [0, -1]] }
    }

    pub fn det(&self) -> i64 {
        let m = &self.m;
        let d = (m[0][0] as i128) * (m[1][1] as i128) - (m[0][1] as i128) * (m[1][0] as i128);
        to_i64(d)
    }

    pub fn mul(&self, o: &UnimodMat) -> UnimodMat {
        let a = &self.m;
        let b = &o.m;
        let mut r = [[0i64; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                let v = (a[i][0] as i128) * (b[0][j] as i128) + (a[i][1] as i128) * (b[1][j] as i128);
                r[i][j] = to_i64(v);
            }
        }
        UnimodMat { m: r }
    }

    pub fn inverse(&self) -> UnimodMat {
        let d = self.det();
        debug_assert!(d == 1 || d == -1);
        let [[a, b], [c, dd]] = self.m;
        // adj / det with det = +-1
        UnimodMat { m: [[dd * d, -b * d], [-c * d, a * d]] }
    }

    pub fn transpose(&self) -> UnimodMat {
        let [[a, b], [c, d]] = self.m;
        UnimodMat { m: [[a, c], [b, d]] }
    }

    /// Action on forms: `M_{A.f} = A M_f tA`.
    pub fn act(&self, f: &BinQF) -> BinQF {
        // doubled matrix N = [[2a, b], [b, 2c]] keeps everything integral
        let [[p, q], [r, s]] = self.m;
        let (p, q, r, s) = (p as i128, q as i128, r as i128, s as i128);
        let (n00, n01, n11) = (2 * f.a as i128, f.b as i128, 2 * f.c as i128);
        // A N tA
        let t00 = p * (p * n00 + q * n01) + q * (p * n01 + q * n11);
        let t01 = r * (p * n00 + q * n01) + s * (p * n01 + q * n11);
        let t11 = r * (r * n00 + s * n01) + s * (r * n01 + s * n11);
        debug_assert!(t00 % 2 == 0 && t11 % 2 == 0);
        BinQF::new(to_i64(t00 / 2), to_i64(t01), to_i64(t11 / 2))
    }
}

/// Reduce a psd form: returns `(g, A)` with `g` reduced and `A.g = f`.
pub fn reduce(f: &BinQF) -> Result<(BinQF, UnimodMat)> {
    if !f.is_psd() {
        return Err(Error::NotPositiveSemidefinite(f.a, f.b, f.c));
    }
    let mut g = *f;
    // u accumulates the transform with u.f = g
    let mut u = UnimodMat::identity();
    let mut steps = 0;
    loop {
        steps += 1;
        assert!(steps < 10_000, "reduction did not terminate on {f:?}");
        if g.a == 0 {
            // psd forces b = 0
            debug_assert_eq!(g.b, 0);
            break;
        }
        if g.c == 0 {
            // [a, 0, 0] -> [0, 0, a]
            debug_assert_eq!(g.b, 0);
            let sw = UnimodMat { m: [[0, 1], [1, 0]] };
            g = sw.act(&g);
            u = sw.mul(&u);
            break;
        }
        if g.a > g.c {
            let sw = UnimodMat { m: [[0, 1], [1, 0]] };
            g = sw.act(&g);
            u = sw.mul(&u);
            continue;
        }
        if g.b < 0 || g.b > g.a {
            // translate b into [0, 2a), then fold (a, 2a) to (0, a) by b -> -b
            let two_a = 2 * g.a;
            let mut b1 = g.b.rem_euclid(two_a);
            let t = (b1 - g.b) / two_a;
            let tr = UnimodMat { m: [[1, 0], [t, 1]] };
            g = tr.act(&g);
            u = tr.mul(&u);
            if b1 > g.a {
                let e = UnimodMat::e();
                g = e.act(&g);
                u = e.mul(&u);
                b1 = -b1;
                let tr1 = UnimodMat { m: [[1, 0], [1, 1]] };
                g = tr1.act(&g);
                u = tr1.mul(&u);
                debug_assert_eq!(g.b, b1 + 2 * g.a);
            }
            continue;
        }
        // 0 <= b <= a <= c
        break;
    }
    debug_assert!(g.is_reduced(), "{g:?} not reduced (from {f:?})");
    let a = u.inverse();
    debug_assert_eq!(a.act(&g), *f);
    Ok((g, a))
}

/// Largest `c` stored for singular forms at discriminant precision `x`.
pub fn singular_cmax(x: i64) -> i64 {
    (x + 1) / 4
}

/// All reduced forms with `0 > disc >= -x`, plus `[0,0,c]` for
/// `0 <= c <= (x+1)/4`, in the deterministic order.
pub fn reduced_forms_below(x: i64) -> Vec<BinQF> {
    assert!(x >= 1, "discriminant precision must be >= 1");
    let mut out = Vec::new();
    for c in 0..=singular_cmax(x) {
        out.push(BinQF::new(0, 0, c));
    }
    let amax = isqrt(x as i128 / 3) as i64;
    for a in 1..=amax {
        let cmax = (a * a + x) / (4 * a);
        for c in a..=cmax {
            for b in 0..=a {
                let d = (b * b - 4 * a * c) as i128;
                if d < 0 && d >= -(x as i128) {
                    out.push(BinQF::new(a, b, c));
                }
            }
        }
    }
    out.sort();
    out
}

/// Visit every ordered pair `(f1, f2)` of psd forms with `f1 + f2 = f`.
pub fn for_each_summand_pair(f: &BinQF, mut emit: impl FnMut(BinQF, BinQF)) {
    debug_assert!(f.is_psd());
    for a1 in 0..=f.a {
        let a2 = f.a - a1;
        for c1 in 0..=f.c {
            let c2 = f.c - c1;
            let s1 = isqrt(4 * (a1 as i128) * (c1 as i128)) as i64;
            let s2 = isqrt(4 * (a2 as i128) * (c2 as i128)) as i64;
            let lo = (-s1).max(f.b - s2);
            let hi = s1.min(f.b + s2);
            for b1 in lo..=hi {
                emit(BinQF::new(a1, b1, c1), BinQF::new(a2, f.b - b1, c2));
            }
        }
    }
}

/// `for_each_summand_pair` collected into a vector.
pub fn summand_pairs(f: &BinQF) -> Vec<(BinQF, BinQF)> {
    let mut v = Vec::new();
    for_each_summand_pair(f, |f1, f2| v.push((f1, f2)));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn disc_examples() {
        assert_eq!(BinQF::new(1, 1, 1).disc(), -3);
        assert_eq!(BinQF::new(0, 0, 0).disc(), 0);
        assert_eq!(BinQF::new(1, 0, 1).disc(), -4);
    }

    #[test]
    fn psd_examples() {
        assert!(BinQF::new(1, 1, 1).is_psd());
        assert!(!BinQF::new(1, 3, 1).is_psd());
        assert!(!BinQF::new(-1, 0, 0).is_psd());
    }

    #[test]
    fn content_examples() {
        assert_eq!(BinQF::new(2, 4, 6).content(), 2);
        assert_eq!(BinQF::new(1, 1, 1).content(), 1);
        assert_eq!(BinQF::new(0, 0, 0).content(), 0);
    }

    #[test]
    fn act_examples() {
        let t = UnimodMat::t();
        assert_eq!(t.act(&BinQF::new(1, 0, 1)), BinQF::new(2, 2, 1));
        let id = UnimodMat::identity();
        assert_eq!(id.act(&BinQF::new(3, 1, 5)), BinQF::new(3, 1, 5));
        let e = UnimodMat::e();
        assert_eq!(e.act(&BinQF::new(3, 1, 5)), BinQF::new(3, -1, 5));
    }

    #[test]
    fn reduce_examples() {
        let (g, a) = reduce(&BinQF::new(2, 2, 1)).unwrap();
        assert_eq!(g, BinQF::new(1, 0, 1));
        assert_eq!(a.act(&g), BinQF::new(2, 2, 1));

        let (g, a) = reduce(&BinQF::new(1, 1, 1)).unwrap();
        assert_eq!(g, BinQF::new(1, 1, 1));
        assert_eq!(a, UnimodMat::identity());

        let (g, a) = reduce(&BinQF::new(1, -1, 1)).unwrap();
        assert_eq!(g, BinQF::new(1, 1, 1));
        assert_eq!(a.act(&g), BinQF::new(1, -1, 1));

        // singular normalizations
        let (g, _) = reduce(&BinQF::new(1, 2, 1)).unwrap();
        assert_eq!(g, BinQF::new(0, 0, 1));
        let (g, _) = reduce(&BinQF::new(4, 4, 1)).unwrap();
        assert_eq!(g, BinQF::new(0, 0, 1));
        let (g, a) = reduce(&BinQF::new(0, 0, 0)).unwrap();
        assert_eq!(g, BinQF::new(0, 0, 0));
        assert_eq!(a, UnimodMat::identity());

        assert!(reduce(&BinQF::new(1, 3, 1)).is_err());
    }

    #[test]
    fn reduced_forms_below_examples() {
        let x4 = reduced_forms_below(4);
        assert_eq!(
            x4,
            vec![BinQF::new(0, 0, 0), BinQF::new(0, 0, 1), BinQF::new(1, 1, 1), BinQF::new(1, 0, 1)]
        );
        let x12 = reduced_forms_below(12);
        assert_eq!(x12.len(), 11);
        assert!(x12.contains(&BinQF::new(2, 2, 2)));
        assert!(x12.contains(&BinQF::new(1, 1, 3)));
        assert_eq!(reduced_forms_below(1), vec![BinQF::new(0, 0, 0)]);
    }

    /// Brute-force scan: reduce every psd form in a big box and compare the
    /// canonical sets with the direct enumeration.
    #[test]
    fn reduced_forms_below_brute_force() {
        for x in [7, 20, 40] {
            let mut seen = std::collections::BTreeSet::new();
            for a in 0..=x {
                for c in 0..=x {
                    for b in -(2 * x)..=(2 * x) {
                        let f = BinQF::new(a, b, c);
                        if !f.is_psd() {
                            continue;
                        }
                        let d = f.disc();
                        let (g, _) = reduce(&f).unwrap();
                        let in_prec = if d < 0 {
                            d >= -(x as i128)
                        } else {
                            g.c <= singular_cmax(x)
                        };
                        if in_prec {
                            seen.insert(g);
                        }
                    }
                }
            }
            let direct: std::collections::BTreeSet<_> =
                reduced_forms_below(x).into_iter().collect();
            assert_eq!(seen, direct, "x = {x}");
        }
    }

    #[test]
    fn summand_pairs_examples() {
        let p = summand_pairs(&BinQF::new(0, 0, 1));
        assert_eq!(p.len(), 2);
        assert!(p.contains(&(BinQF::zero(), BinQF::new(0, 0, 1))));
        assert!(p.contains(&(BinQF::new(0, 0, 1), BinQF::zero())));
        assert_eq!(summand_pairs(&BinQF::zero()), vec![(BinQF::zero(), BinQF::zero())]);
    }

    /// Naive triple-loop oracle for the summand enumeration.
    fn summand_count_oracle(f: &BinQF) -> usize {
        let mut n = 0;
        for a1 in 0..=f.a {
            for c1 in 0..=f.c {
                for b1 in -(2 * (f.a + f.c))..=(2 * (f.a + f.c)) {
                    let f1 = BinQF::new(a1, b1, c1);
                    let f2 = f.sub(&f1);
                    if f1.is_psd() && f2.is_psd() {
                        n += 1;
                    }
                }
            }
        }
        n
    }

    #[test]
    fn summand_pairs_match_oracle() {
        for f in reduced_forms_below(20) {
            let pairs = summand_pairs(&f);
            for (f1, f2) in &pairs {
                assert!(f1.is_psd() && f2.is_psd());
                assert_eq!(f1.add(f2), f);
            }
            let mut dedup = pairs.clone();
            dedup.sort_by(|x, y| (x.0, x.1.a, x.1.b, x.1.c).cmp(&(y.0, y.1.a, y.1.b, y.1.c)));
            dedup.dedup();
            assert_eq!(dedup.len(), pairs.len(), "duplicate pair for {f:?}");
            assert_eq!(pairs.len(), summand_count_oracle(&f), "count mismatch at {f:?}");
        }
    }

    fn word_strategy() -> impl Strategy<Value = UnimodMat> {
        proptest::collection::vec(0u8..4, 0..8).prop_map(|w| {
            let mut m = UnimodMat::identity();
            for g in w {
                let gm = match g {
                    0 => UnimodMat::s(),
                    1 => UnimodMat::t(),
                    2 => UnimodMat::e(),
                    _ => UnimodMat::t().inverse(),
                };
                m = m.mul(&gm);
            }
            m
        })
    }

    fn psd_strategy() -> impl Strategy<Value = BinQF> {
        (0i64..10, 0i64..10).prop_flat_map(|(a, c)| {
            let s = isqrt(4 * a as i128 * c as i128) as i64;
            (-s..=s).prop_map(move |b| BinQF::new(a, b, c))
        })
    }

    proptest! {
        #[test]
        fn action_preserves_disc_and_content(f in psd_strategy(), a in word_strategy()) {
            let g = a.act(&f);
            prop_assert_eq!(g.disc(), f.disc());
            prop_assert_eq!(g.content(), f.content());
            prop_assert!(g.is_psd());
        }

        #[test]
        fn reduce_is_orbit_canonical(f in psd_strategy(), a in word_strategy()) {
            let (g1, t1) = reduce(&f).unwrap();
            let (g2, t2) = reduce(&a.act(&f)).unwrap();
            prop_assert_eq!(g1, g2);
            prop_assert_eq!(t1.act(&g1), f);
            prop_assert_eq!(t2.act(&g2), a.act(&f));
            // idempotence
            let (g3, t3) = reduce(&g1).unwrap();
            prop_assert_eq!(g3, g1);
            prop_assert_eq!(t3, UnimodMat::identity());
        }
    }
}
