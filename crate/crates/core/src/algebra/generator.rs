//! Polynomial and exterior generators of the mod-p homology algebras.
//!
//! Every generator carries its weight (number of configuration points) and
//! its homological degree. The sign behaviour of a generator is decided by
//! the parity of that unshifted degree only.

use std::cmp::Ordering;
use std::fmt;

use crate::algebra::field::Prime;
use crate::brackets::Bracket;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GenKind {
    /// A basic bracket used directly as a generator (e.g. the one-white-particle
    /// brackets of the punctured plane).
    Bracket(Bracket),
    /// The point class in `H_0(C_1)`.
    Iota,
    /// `[ι, ι]`.
    U,
    /// `Q^i [ι, ι]`, `i ≥ 1`.
    Alpha(u32),
    /// `β Q^i [ι, ι]`, `i ≥ 1`.
    Beta(u32),
    /// `Q^i ι` at `p = 2`, `i ≥ 1`.
    QIota(u32),
    /// `Q^i ι` for a sphere label; `i = 0` is the fundamental class.
    SphereQ(u32),
    /// `β Q^i ι` for a sphere label, `i ≥ 1`.
    SphereBQ(u32),
    /// `Q^i x` or `β Q^i x` for an arbitrary basic bracket `x`.
    Dyer {
        base: Bracket,
        power: u32,
        bockstein: bool,
    },
}

impl GenKind {
    fn family(&self) -> u8 {
        match self {
            GenKind::Bracket(_) => 0,
            GenKind::Iota
            | GenKind::U
            | GenKind::Alpha(_)
            | GenKind::Beta(_)
            | GenKind::QIota(_) => 1,
            GenKind::SphereQ(_) | GenKind::SphereBQ(_) => 2,
            GenKind::Dyer { .. } => 3,
        }
    }

    // Position inside the family:
    //   ι < u < β1 < α1 < β2 < α2 < ...
    //   ι < Qι < Q²ι < ...
    //   Qs0 < bQs1 < Qs1 < bQs2 < ...
    fn key(&self) -> u64 {
        match *self {
            GenKind::Iota => 0,
            GenKind::U => 1,
            GenKind::Beta(i) => 2 * i as u64,
            GenKind::Alpha(i) => 2 * i as u64 + 1,
            GenKind::QIota(i) => i as u64,
            GenKind::SphereQ(i) => 2 * i as u64,
            GenKind::SphereBQ(i) => 2 * i as u64 - 1,
            GenKind::Dyer {
                power, bockstein, ..
            } => 2 * power as u64 + u64::from(!bockstein),
            GenKind::Bracket(_) => 0,
        }
    }

    fn tag(&self) -> u8 {
        match self {
            GenKind::Bracket(_) => 0,
            GenKind::Iota => 1,
            GenKind::U => 2,
            GenKind::Alpha(_) => 3,
            GenKind::Beta(_) => 4,
            GenKind::QIota(_) => 5,
            GenKind::SphereQ(_) => 6,
            GenKind::SphereBQ(_) => 7,
            GenKind::Dyer { .. } => 8,
        }
    }
}

impl Ord for GenKind {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.family(), self.key(), self.tag())
            .cmp(&(other.family(), other.key(), other.tag()))
            .then_with(|| match (self, other) {
                (GenKind::Bracket(a), GenKind::Bracket(b)) => a.order_cmp(b),
                (GenKind::Dyer { base: a, .. }, GenKind::Dyer { base: b, .. }) => a.order_cmp(b),
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for GenKind {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An algebra generator with its bigrading.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    kind: GenKind,
    weight: u64,
    degree: u64,
    exterior: bool,
}

impl Generator {
    /// Odd-degree generators are exterior at odd primes; at p = 2 the
    /// algebra is polynomial.
    pub fn new(kind: GenKind, weight: u64, degree: u64, p: Prime) -> Self {
        assert!(weight >= 1, "generators carry at least one point");
        Generator {
            kind,
            weight,
            degree,
            exterior: degree % 2 == 1 && !p.is_two(),
        }
    }

    fn odd_prime(kind: GenKind, weight: u64, degree: u64) -> Self {
        Generator {
            kind,
            weight,
            degree,
            exterior: degree % 2 == 1,
        }
    }

    pub fn iota() -> Self {
        Self::odd_prime(GenKind::Iota, 1, 0)
    }

    /// Only exists at odd primes.
    pub fn u() -> Self {
        Self::odd_prime(GenKind::U, 2, 1)
    }

    /// `α_i = Q^i[ι,ι]` with bigrading `(2p^i, 2p^i − 1)`.
    pub fn alpha(i: u32, p: Prime) -> Self {
        assert!(i >= 1);
        let w = 2 * (p.get() as u64).pow(i);
        Self::new(GenKind::Alpha(i), w, w - 1, p)
    }

    /// `β_i = βQ^i[ι,ι]` with bigrading `(2p^i, 2p^i − 2)`.
    pub fn beta(i: u32, p: Prime) -> Self {
        assert!(i >= 1);
        let w = 2 * (p.get() as u64).pow(i);
        Self::new(GenKind::Beta(i), w, w - 2, p)
    }

    /// `Q^i ι` at p = 2 with bigrading `(2^i, 2^i − 1)`.
    pub fn q_iota(i: u32) -> Self {
        assert!(i >= 1);
        let w = 1u64 << i;
        Generator {
            kind: GenKind::QIota(i),
            weight: w,
            degree: w - 1,
            exterior: false,
        }
    }

    /// `Q^i ι_m` for the fundamental class of `S^m`: `(p^i, p^i (m + 1) − 1)`.
    pub fn sphere_q(i: u32, p: Prime, m: u64) -> Self {
        let w = (p.get() as u64).pow(i);
        Self::new(GenKind::SphereQ(i), w, w * (m + 1) - 1, p)
    }

    /// `β Q^i ι_m`: `(p^i, p^i (m + 1) − 2)`, `i ≥ 1`.
    pub fn sphere_bq(i: u32, p: Prime, m: u64) -> Self {
        assert!(i >= 1);
        let w = (p.get() as u64).pow(i);
        Self::new(GenKind::SphereBQ(i), w, w * (m + 1) - 2, p)
    }

    pub fn bracket(expr: Bracket, p: Prime) -> Self {
        let (w, d) = (expr.weight(), expr.degree());
        Self::new(GenKind::Bracket(expr), w, d, p)
    }

    pub fn kind(&self) -> &GenKind {
        &self.kind
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Parity of the unshifted degree; decides Koszul signs.
    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }

    /// Squares to zero.
    pub fn is_exterior(&self) -> bool {
        self.exterior
    }

    pub fn is_iota(&self) -> bool {
        self.kind == GenKind::Iota
    }

    pub fn is_u(&self) -> bool {
        self.kind == GenKind::U
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GenKind::Bracket(b) => write!(f, "{b}"),
            GenKind::Iota => f.write_str("i"),
            GenKind::U => f.write_str("u"),
            GenKind::Alpha(j) => write!(f, "a{j}"),
            GenKind::Beta(j) => write!(f, "b{j}"),
            GenKind::QIota(j) => write!(f, "Qi{j}"),
            GenKind::SphereQ(j) => write!(f, "Qs{j}"),
            GenKind::SphereBQ(j) => write!(f, "bQs{j}"),
            GenKind::Dyer {
                base,
                power,
                bockstein,
            } => {
                if *bockstein {
                    f.write_str("b")?;
                }
                write!(f, "Q{power}({base})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn table_bigradings() {
        let p3 = p(3);
        assert_eq!(
            (Generator::iota().weight(), Generator::iota().degree()),
            (1, 0)
        );
        assert_eq!((Generator::u().weight(), Generator::u().degree()), (2, 1));
        let a1 = Generator::alpha(1, p3);
        let b2 = Generator::beta(2, p3);
        assert_eq!((a1.weight(), a1.degree()), (6, 5));
        assert_eq!((b2.weight(), b2.degree()), (18, 16));
        let q3 = Generator::q_iota(3);
        assert_eq!((q3.weight(), q3.degree()), (8, 7));
    }

    #[test]
    fn global_order() {
        let p3 = p(3);
        let mut gens = [
            Generator::alpha(2, p3),
            Generator::beta(1, p3),
            Generator::u(),
            Generator::alpha(1, p3),
            Generator::iota(),
            Generator::beta(2, p3),
        ];
        gens.sort();
        let names: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["i", "u", "b1", "a1", "b2", "a2"]);

        let mut sph = [
            Generator::sphere_q(1, p3, 1),
            Generator::sphere_bq(2, p3, 1),
            Generator::sphere_q(0, p3, 1),
            Generator::sphere_bq(1, p3, 1),
        ];
        sph.sort();
        let names: Vec<String> = sph.iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["Qs0", "bQs1", "Qs1", "bQs2"]);
    }

    #[test]
    fn sphere_closed_form_matches_iteration() {
        for pr in [2, 3, 5] {
            let pr = p(pr);
            for m in 1..6u64 {
                if m % 2 == 0 && !pr.is_two() {
                    continue;
                }
                let mut deg = m;
                for i in 1..4 {
                    deg = if pr.is_two() {
                        2 * deg + 1
                    } else {
                        pr.get() as u64 * deg + pr.get() as u64 - 1
                    };
                    assert_eq!(Generator::sphere_q(i, pr, m).degree(), deg);
                }
            }
        }
    }
}
