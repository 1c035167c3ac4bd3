use std::fmt;

use exact_series::{integer, rational, BigRational};

use crate::error::SurfaceError;

/// Surface families the calculators distinguish.
///
/// The first four are the K-trivial geometries; `BlowupK3` is a K3 blown up in
/// one point; `GeneralRank1` stands for an arbitrary surface carrying a line
/// bundle, with (chi(O), K^2) supplied explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeometryKind {
    K3,
    Abelian,
    Bielliptic,
    Enriques,
    BlowupK3,
    GeneralRank1,
}

impl GeometryKind {
    /// The (chi(O), K^2) pair the kind forces, if it forces one.
    pub fn fixed_invariants(self) -> Option<(i64, i64)> {
        match self {
            GeometryKind::K3 => Some((2, 0)),
            GeometryKind::Abelian | GeometryKind::Bielliptic => Some((0, 0)),
            GeometryKind::Enriques => Some((1, 0)),
            GeometryKind::BlowupK3 => Some((2, -1)),
            GeometryKind::GeneralRank1 => None,
        }
    }

    /// True for the geometries with numerically trivial canonical class.
    pub fn is_k_trivial(self) -> bool {
        matches!(
            self,
            GeometryKind::K3
                | GeometryKind::Abelian
                | GeometryKind::Bielliptic
                | GeometryKind::Enriques
        )
    }
}

impl fmt::Display for GeometryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeometryKind::K3 => "k3",
            GeometryKind::Abelian => "abelian",
            GeometryKind::Bielliptic => "bielliptic",
            GeometryKind::Enriques => "enriques",
            GeometryKind::BlowupK3 => "blowup-k3",
            GeometryKind::GeneralRank1 => "general-rank1",
        })
    }
}

/// Discrete invariants of a vector bundle on a surface, together with the
/// ambient surface's chi(O) and K^2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceBundle {
    pub rank: u32,
    pub c1_sq: i64,
    pub c1_dot_k: i64,
    pub c2: i64,
    pub chi_o: i64,
    pub k_sq: i64,
}

impl SurfaceBundle {
    /// Bundle on a surface of the given kind; (chi(O), K^2) are filled in from
    /// the kind, and K-trivial kinds additionally force c1.K = 0.
    pub fn for_kind(
        kind: GeometryKind,
        rank: u32,
        c1_sq: i64,
        c1_dot_k: i64,
        c2: i64,
    ) -> Result<Self, SurfaceError> {
        let (chi_o, k_sq) = kind
            .fixed_invariants()
            .ok_or(SurfaceError::UnderdeterminedKind { kind })?;
        if kind.is_k_trivial() && c1_dot_k != 0 {
            return Err(SurfaceError::NonzeroCanonicalPairing { c1_dot_k });
        }
        Self::general(rank, c1_sq, c1_dot_k, c2, chi_o, k_sq)
    }

    /// Bundle with all surface data supplied explicitly.
    pub fn general(
        rank: u32,
        c1_sq: i64,
        c1_dot_k: i64,
        c2: i64,
        chi_o: i64,
        k_sq: i64,
    ) -> Result<Self, SurfaceError> {
        if rank == 0 {
            return Err(SurfaceError::ZeroRank);
        }
        Ok(Self {
            rank,
            c1_sq,
            c1_dot_k,
            c2,
            chi_o,
            k_sq,
        })
    }

    /// Whether the stored surface invariants are consistent with the kind.
    pub fn matches_kind(&self, kind: GeometryKind) -> bool {
        match kind.fixed_invariants() {
            Some(pair) => (self.chi_o, self.k_sq) == pair,
            None => true,
        }
    }
}

/// Euler characteristic chi(F) = r chi(O) + (c1^2 - c1.K)/2 - c2.
pub fn chi_riemann_roch(b: &SurfaceBundle) -> Result<i64, SurfaceError> {
    let difference = b.c1_sq - b.c1_dot_k;
    if difference % 2 != 0 {
        return Err(SurfaceError::ChiParity { difference });
    }
    Ok(b.rank as i64 * b.chi_o + difference / 2 - b.c2)
}

/// The same Euler characteristic as an exact rational, defined for all formal
/// inputs (half-integral when the parity constraint is violated).
pub fn chi_rational(b: &SurfaceBundle) -> BigRational {
    integer(b.rank as i64) * integer(b.chi_o) + rational(b.c1_sq - b.c1_dot_k, 2)
        - integer(b.c2)
}

/// The discriminant-type invariant entering every K-trivial closed formula.
///
/// K3: 1 + r c2 + (1-r) c1^2/2 - r^2; abelian and bielliptic: r c2 +
/// (1-r) c1^2/2; Enriques: r c2 - (r-1) c1^2/2 - (r^2-1)/2. Half-integer
/// values are legal (Enriques even rank); integrality is a theorem input, not
/// a computation requirement.
pub fn delta(kind: GeometryKind, b: &SurfaceBundle) -> Result<BigRational, SurfaceError> {
    let r = b.rank as i64;
    match kind {
        GeometryKind::K3 => Ok(integer(1 + r * b.c2 - r * r) + rational((1 - r) * b.c1_sq, 2)),
        GeometryKind::Abelian | GeometryKind::Bielliptic => {
            Ok(integer(r * b.c2) + rational((1 - r) * b.c1_sq, 2))
        }
        GeometryKind::Enriques => {
            Ok(integer(r * b.c2) - rational((r - 1) * b.c1_sq, 2) - rational(r * r - 1, 2))
        }
        other => Err(SurfaceError::UnsupportedKind {
            kind: other,
            operation: "delta",
        }),
    }
}
