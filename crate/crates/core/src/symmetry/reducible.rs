//! The seven infinite families of finite subgroups of O(3) fixing the z-axis.
//!
//! Elements are stored symbolically as `(−I)^inversion · R(k) · F^flip`, where
//! `R(k)` is the rotation by `2πk/modulus` about the z-axis and `F` the
//! half-turn about the x-axis. With `F R(k) F = R(−k)` this gives an exact
//! composition law even though the matrix entries are irrational.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::group::{GroupElement, Isometry, PointGroup};
use super::SymmetryError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DihedralElement {
    pub modulus: u32,
    pub k: u32,
    pub flip: bool,
    pub inversion: bool,
}

impl DihedralElement {
    pub fn rotation(modulus: u32, k: u32) -> Self {
        DihedralElement {
            modulus,
            k: k % modulus,
            flip: false,
            inversion: false,
        }
    }

    pub fn with_flip(self) -> Self {
        DihedralElement { flip: !self.flip, ..self }
    }

    pub fn negated(self) -> Self {
        DihedralElement {
            inversion: !self.inversion,
            ..self
        }
    }
}

impl GroupElement for DihedralElement {
    fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let m = self.modulus;
        let k2 = if self.flip { (m - other.k) % m } else { other.k };
        DihedralElement {
            modulus: m,
            k: (self.k + k2) % m,
            flip: self.flip ^ other.flip,
            inversion: self.inversion ^ other.inversion,
        }
    }

    fn inverse(&self) -> Self {
        let m = self.modulus;
        DihedralElement {
            k: if self.flip { self.k } else { (m - self.k) % m },
            ..*self
        }
    }

    fn is_identity(&self) -> bool {
        self.k == 0 && !self.flip && !self.inversion
    }
}

impl Isometry for DihedralElement {
    fn det_sign(&self) -> i32 {
        if self.inversion {
            -1
        } else {
            1
        }
    }

    fn to_f64_matrix(&self) -> [[f64; 3]; 3] {
        let a = 2.0 * PI * self.k as f64 / self.modulus as f64;
        let (s, c) = a.sin_cos();
        let f = if self.flip { -1.0 } else { 1.0 };
        let i = if self.inversion { -1.0 } else { 1.0 };
        // R(a) · diag(1, f, f), then scaled by i.
        [
            [i * c, -i * s * f, 0.0],
            [i * s, i * c * f, 0.0],
            [0.0, 0.0, i * f],
        ]
    }

    fn is_central_inversion(&self) -> bool {
        self.inversion && !self.flip && self.k == 0
    }

    fn is_plane_reflection(&self) -> bool {
        // -R(k)F is always a reflection; -R(k) only for the half-turn k = m/2.
        self.inversion && (self.flip || 2 * self.k == self.modulus)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReducibleFamily {
    Cn,
    CnStar,
    C2nBracketCn,
    Hn,
    HnStar,
    HnBracketCn,
    H2nBracketHn,
}

impl ReducibleFamily {
    pub const ALL: [ReducibleFamily; 7] = [
        ReducibleFamily::Cn,
        ReducibleFamily::CnStar,
        ReducibleFamily::C2nBracketCn,
        ReducibleFamily::Hn,
        ReducibleFamily::HnStar,
        ReducibleFamily::HnBracketCn,
        ReducibleFamily::H2nBracketHn,
    ];

    pub fn min_n(self) -> u32 {
        match self {
            ReducibleFamily::Cn | ReducibleFamily::CnStar | ReducibleFamily::C2nBracketCn => 1,
            _ => 2,
        }
    }

    /// Group order as a multiple of `n`.
    pub fn order_factor(self) -> usize {
        match self {
            ReducibleFamily::Cn => 1,
            ReducibleFamily::HnStar | ReducibleFamily::H2nBracketHn => 4,
            _ => 2,
        }
    }

    pub fn label(self, n: u32) -> String {
        match self {
            ReducibleFamily::Cn => format!("C{n}"),
            ReducibleFamily::CnStar => format!("C{n}*"),
            ReducibleFamily::C2nBracketCn => format!("C{}]C{n}", 2 * n),
            ReducibleFamily::Hn => format!("H{n}"),
            ReducibleFamily::HnStar => format!("H{n}*"),
            ReducibleFamily::HnBracketCn => format!("H{n}]C{n}"),
            ReducibleFamily::H2nBracketHn => format!("H{}]H{n}", 2 * n),
        }
    }
}

impl fmt::Display for ReducibleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ReducibleFamily::Cn => "Cn",
            ReducibleFamily::CnStar => "Cn*",
            ReducibleFamily::C2nBracketCn => "C2n]Cn",
            ReducibleFamily::Hn => "Hn",
            ReducibleFamily::HnStar => "Hn*",
            ReducibleFamily::HnBracketCn => "Hn]Cn",
            ReducibleFamily::H2nBracketHn => "H2n]Hn",
        };
        f.write_str(s)
    }
}

impl FromStr for ReducibleFamily {
    type Err = SymmetryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ReducibleFamily::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| SymmetryError::InvalidParameter(format!("unknown family {s}")))
    }
}

/// Builds the group on the symbolic modulus `2n`, so that `C_n` is the set of
/// even rotations and the odd ones realize `C_2n ∖ C_n`.
pub fn reducible_group(family: ReducibleFamily, n: u32) -> Result<PointGroup<DihedralElement>, SymmetryError> {
    if n < family.min_n() {
        return Err(SymmetryError::InvalidParameter(format!(
            "{family} requires n >= {}",
            family.min_n()
        )));
    }
    let m = 2 * n;
    let even: Vec<DihedralElement> = (0..n).map(|j| DihedralElement::rotation(m, 2 * j)).collect();
    let odd: Vec<DihedralElement> = (0..n).map(|j| DihedralElement::rotation(m, 2 * j + 1)).collect();
    let flipped = |v: &[DihedralElement]| v.iter().map(|e| e.with_flip()).collect::<Vec<_>>();
    let negated = |v: &[DihedralElement]| v.iter().map(|e| e.negated()).collect::<Vec<_>>();

    let cn = even.clone();
    let hn: Vec<_> = [cn.clone(), flipped(&cn)].concat();
    let elements = match family {
        ReducibleFamily::Cn => cn,
        ReducibleFamily::CnStar => [cn.clone(), negated(&cn)].concat(),
        ReducibleFamily::C2nBracketCn => [cn, negated(&odd)].concat(),
        ReducibleFamily::Hn => hn,
        ReducibleFamily::HnStar => [hn.clone(), negated(&hn)].concat(),
        ReducibleFamily::HnBracketCn => [cn.clone(), negated(&flipped(&cn))].concat(),
        ReducibleFamily::H2nBracketHn => {
            let outside = [odd.clone(), flipped(&odd)].concat();
            [hn, negated(&outside)].concat()
        }
    };
    PointGroup::from_elements(family.label(n), elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matmul(a: &[[f64; 3]; 3], b: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
        let mut c = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        c
    }

    #[test]
    fn symbolic_law_matches_matrices() {
        let m = 10;
        let elems: Vec<DihedralElement> = (0..m)
            .flat_map(|k| {
                let r = DihedralElement::rotation(m, k);
                [r, r.with_flip(), r.negated(), r.with_flip().negated()]
            })
            .collect();
        for a in &elems {
            for b in &elems {
                let sym = a.compose(b).to_f64_matrix();
                let num = matmul(&a.to_f64_matrix(), &b.to_f64_matrix());
                for i in 0..3 {
                    for j in 0..3 {
                        assert!((sym[i][j] - num[i][j]).abs() < 1e-12);
                    }
                }
            }
            assert!(a.compose(&a.inverse()).is_identity());
        }
    }

    #[test]
    fn family_examples() {
        assert_eq!(reducible_group(ReducibleFamily::HnStar, 5).unwrap().order(), 20);
        let trivial = reducible_group(ReducibleFamily::Cn, 1).unwrap();
        assert_eq!(trivial.order(), 1);
        assert!(trivial.elements[0].is_identity());
        let k = reducible_group(ReducibleFamily::C2nBracketCn, 6).unwrap();
        assert_eq!(k.order(), 12);
        assert!(!k.contains_central_inversion());
        assert!(reducible_group(ReducibleFamily::Hn, 1).is_err());
        assert_eq!("C2n]Cn".parse::<ReducibleFamily>().unwrap(), ReducibleFamily::C2nBracketCn);
    }

    /// Reflections judged from the matrix realization: det −1, involutive, trace 1.
    fn oracle_mirrors(g: &PointGroup<DihedralElement>) -> usize {
        g.elements
            .iter()
            .filter(|e| {
                let m = e.to_f64_matrix();
                let sq = matmul(&m, &m);
                let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                    - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
                let id = (0..3).all(|i| (0..3).all(|j| (sq[i][j] - if i == j { 1.0 } else { 0.0 }).abs() < 1e-9));
                let trace = m[0][0] + m[1][1] + m[2][2];
                det < 0.0 && id && (trace - 1.0).abs() < 1e-9
            })
            .count()
    }

    #[test]
    fn mirror_counts() {
        for n in 2..=12u32 {
            for fam in ReducibleFamily::ALL {
                let g = reducible_group(fam, n).unwrap();
                assert_eq!(g.mirror_count(), oracle_mirrors(&g), "{}", g.name);
            }
            let hs = reducible_group(ReducibleFamily::HnStar, n).unwrap();
            assert_eq!(hs.mirror_count(), n as usize + usize::from(n % 2 == 0));
            let k = reducible_group(ReducibleFamily::C2nBracketCn, n).unwrap();
            assert_eq!(k.mirror_count(), usize::from(n % 2 == 1));
            let h2 = reducible_group(ReducibleFamily::H2nBracketHn, n).unwrap();
            assert_eq!(h2.mirror_count(), n as usize + usize::from(n % 2 == 1));
        }
        assert_eq!(reducible_group(ReducibleFamily::HnStar, 5).unwrap().mirror_count(), 5);
    }
}
