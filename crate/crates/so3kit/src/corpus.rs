//! A fixed, versioned corpus of finite rotation groups spanning every finite
//! subgroup family of SO(3): cyclic C1–C6, the Klein four-group, dihedral
//! groups of orders 6, 8 and 12, the tetrahedral and octahedral groups over
//! plain ℚ, a √3 realization of the order-12 dihedral group, and the
//! icosahedral group over ℚ(√5).
//!
//! Rotations of order 5 cannot have rational matrix entries (a rational
//! rotation has trace in {−1, 0, 1, 2, 3}), so C5 and the icosahedral group
//! necessarily live in ℚ(√5).

use crate::group::{FiniteRotGroup, IsoType};
use crate::rotation::Rot3;
use crate::scalar::QuadScalar;

/// A named corpus member together with its expected classification.
pub struct CorpusEntry {
    pub name: &'static str,
    pub ambient: u64,
    pub expected: IsoType,
    pub group: FiniteRotGroup,
}

fn q(n: i64, den: i64, d: u64) -> QuadScalar {
    QuadScalar::from_ratio(n, den, d)
}

/// Half turn about the x-axis: diag(1, −1, −1), the image of i.
pub fn rot_x_half_turn(d: u64) -> Rot3 {
    Rot3::from_ratios(
        [[(1, 1), (0, 1), (0, 1)], [(0, 1), (-1, 1), (0, 1)], [(0, 1), (0, 1), (-1, 1)]],
        d,
    )
    .expect("valid rotation")
}

/// Half turn about the y-axis: diag(−1, 1, −1), the image of j.
pub fn rot_y_half_turn(d: u64) -> Rot3 {
    Rot3::from_ratios(
        [[(-1, 1), (0, 1), (0, 1)], [(0, 1), (1, 1), (0, 1)], [(0, 1), (0, 1), (-1, 1)]],
        d,
    )
    .expect("valid rotation")
}

/// Quarter turn about the x-axis, the image of 1 + i.
pub fn rot_x_quarter_turn(d: u64) -> Rot3 {
    Rot3::from_ratios(
        [[(1, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (-1, 1)], [(0, 1), (1, 1), (0, 1)]],
        d,
    )
    .expect("valid rotation")
}

/// Quarter turn about the z-axis.
pub fn rot_z_quarter_turn(d: u64) -> Rot3 {
    Rot3::from_ratios(
        [[(0, 1), (-1, 1), (0, 1)], [(1, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (1, 1)]],
        d,
    )
    .expect("valid rotation")
}

/// Third turn about the corner diagonal (1,1,1): the coordinate cycle
/// x → y → z → x.
pub fn rot_corner_third_turn(d: u64) -> Rot3 {
    Rot3::from_ratios(
        [[(0, 1), (0, 1), (1, 1)], [(1, 1), (0, 1), (0, 1)], [(0, 1), (1, 1), (0, 1)]],
        d,
    )
    .expect("valid rotation")
}

/// Sixth turn about the corner diagonal (1,1,1) — an order-6 rotation with
/// rational entries.
pub fn rot_corner_sixth_turn(d: u64) -> Rot3 {
    Rot3::from_ratios(
        [[(2, 3), (-1, 3), (2, 3)], [(2, 3), (2, 3), (-1, 3)], [(-1, 3), (2, 3), (2, 3)]],
        d,
    )
    .expect("valid rotation")
}

/// Half turn about (1, −1, 0), an axis perpendicular to the corner diagonal.
pub fn rot_antidiag_half_turn(d: u64) -> Rot3 {
    Rot3::from_ratios(
        [[(0, 1), (-1, 1), (0, 1)], [(-1, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (-1, 1)]],
        d,
    )
    .expect("valid rotation")
}

/// Sixth turn about the x-axis with entries 1/2 and √3/2 (needs ambient 3).
pub fn rot_x_sixth_turn_surd() -> Rot3 {
    Rot3::new([
        [QuadScalar::one(3), QuadScalar::zero(3), QuadScalar::zero(3)],
        [
            QuadScalar::zero(3),
            q(1, 2, 3),
            QuadScalar::from_parts(0, 1, -1, 2, 3),
        ],
        [
            QuadScalar::zero(3),
            QuadScalar::from_parts(0, 1, 1, 2, 3),
            q(1, 2, 3),
        ],
    ])
    .expect("valid rotation")
}

/// Fifth turn about an icosahedron vertex axis (0, 1, φ), with entries in
/// ℚ(√5).
pub fn rot_icosahedral_fifth_turn() -> Rot3 {
    let p = |rn, rd, sn, sd| QuadScalar::from_parts(rn, rd, sn, sd, 5);
    Rot3::new([
        [p(-1, 4, 1, 4), p(-1, 4, -1, 4), q(1, 2, 5)],
        [p(1, 4, 1, 4), q(1, 2, 5), p(-1, 4, 1, 4)],
        [q(-1, 2, 5), p(-1, 4, 1, 4), p(1, 4, 1, 4)],
    ])
    .expect("valid rotation")
}

fn close(name: &str, gens: &[Rot3]) -> FiniteRotGroup {
    FiniteRotGroup::generate_closure(gens, 100)
        .unwrap_or_else(|e| panic!("corpus group {name} failed to close: {e}"))
}

/// The full corpus. With `rational_only` set, members that need an
/// irrational ambient (C5, A5, the √3 dihedral realization) are left out.
pub fn corpus(rational_only: bool) -> Vec<CorpusEntry> {
    let mut entries = vec![
        CorpusEntry {
            name: "C1",
            ambient: 0,
            expected: IsoType::Trivial,
            group: close("C1", &[Rot3::identity(0)]),
        },
        CorpusEntry {
            name: "C2",
            ambient: 0,
            expected: IsoType::Cyclic(2),
            group: close("C2", &[rot_x_half_turn(0)]),
        },
        CorpusEntry {
            name: "C3",
            ambient: 0,
            expected: IsoType::Cyclic(3),
            group: close("C3", &[rot_corner_third_turn(0)]),
        },
        CorpusEntry {
            name: "C4",
            ambient: 0,
            expected: IsoType::Cyclic(4),
            group: close("C4", &[rot_z_quarter_turn(0)]),
        },
        CorpusEntry {
            name: "C6",
            ambient: 0,
            expected: IsoType::Cyclic(6),
            group: close("C6", &[rot_corner_sixth_turn(0)]),
        },
        CorpusEntry {
            name: "V4",
            ambient: 0,
            expected: IsoType::Dihedral(2),
            group: close("V4", &[rot_x_half_turn(0), rot_y_half_turn(0)]),
        },
        CorpusEntry {
            name: "D6",
            ambient: 0,
            expected: IsoType::Dihedral(3),
            group: close("D6", &[rot_corner_third_turn(0), rot_antidiag_half_turn(0)]),
        },
        CorpusEntry {
            name: "D8",
            ambient: 0,
            expected: IsoType::Dihedral(4),
            group: close("D8", &[rot_x_quarter_turn(0), rot_y_half_turn(0)]),
        },
        CorpusEntry {
            name: "D12",
            ambient: 0,
            expected: IsoType::Dihedral(6),
            group: close("D12", &[rot_corner_sixth_turn(0), rot_antidiag_half_turn(0)]),
        },
        CorpusEntry {
            name: "A4",
            ambient: 0,
            expected: IsoType::TetrahedralA4,
            group: close("A4", &[rot_corner_third_turn(0), rot_x_half_turn(0)]),
        },
        CorpusEntry {
            name: "S4",
            ambient: 0,
            expected: IsoType::OctahedralS4,
            group: close("S4", &[rot_corner_third_turn(0), rot_z_quarter_turn(0)]),
        },
    ];
    if !rational_only {
        entries.push(CorpusEntry {
            name: "C5",
            ambient: 5,
            expected: IsoType::Cyclic(5),
            group: close("C5", &[rot_icosahedral_fifth_turn()]),
        });
        entries.push(CorpusEntry {
            name: "D12_sqrt3",
            ambient: 3,
            expected: IsoType::Dihedral(6),
            group: close("D12_sqrt3", &[rot_x_sixth_turn_surd(), rot_y_half_turn(3)]),
        });
        entries.push(CorpusEntry {
            name: "A5",
            ambient: 5,
            expected: IsoType::IcosahedralA5,
            group: close(
                "A5",
                &[rot_corner_third_turn(5), rot_icosahedral_fifth_turn()],
            ),
        });
    }
    entries
}

/// Names of the members excluded in rational-only mode, with the reason.
pub fn nonrational_members() -> &'static [(&'static str, &'static str)] {
    &[
        ("C5", "needs √5"),
        ("D12_sqrt3", "needs √3"),
        ("A5", "needs √5"),
    ]
}
