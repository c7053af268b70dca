//! Planar lattice of six-level spins with bicolored plaquettes and
//! charge-absorbing left/right boundaries.
//!
//! The layout for linear size `L`:
//!
//! * plaquettes form a grid of `L` rows by `L-1` columns, chessboard
//!   colored with sign `+1` (white, even `r+c`) or `-1` (grey);
//! * one vertical spin sits on each vertical plaquette border, `L` rows by
//!   `L` columns; column `0` spins are shared with the left edge, column
//!   `L-1` spins with the right edge;
//! * one horizontal spin sits between vertically adjacent plaquettes,
//!   `(L-1) x (L-1)` of them.
//!
//! That gives `L^2 + (L-1)^2` spins, top- and bottom-row plaquettes with
//! three incident spins, and each boundary absorbing through exactly `L`
//! spins. Every spin belongs to exactly two regions with opposite signs, so
//! the total charge over all regions is conserved mod 6 by construction.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AnyonKind, Charge};

/// A charge-carrying region: a bulk plaquette or one of the two absorbing
/// boundaries.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Region {
    Plaquette(usize),
    Left,
    Right,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// Where a spin sits in the drawing of the lattice.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpinRole {
    /// On the vertical border between column `c-1` and column `c` of row `r`.
    Vertical { row: usize, col: usize },
    /// Between plaquette `(row-1, col)` and `(row, col)`.
    Horizontal { row: usize, col: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("lattice size must be at least 2, got {0}")]
    TooSmall(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MoveError {
    #[error("source region holds vacuum")]
    SourceEmpty,
    #[error("regions are not adjacent")]
    NotAdjacent,
}

/// Immutable lattice geometry: incidence, signs, and distances.
#[derive(Clone, Debug)]
pub struct Geometry {
    l: usize,
    /// Per spin: the two (region index, contribution sign) entries.
    spin_regions: Vec<[(usize, i8); 2]>,
    /// Per plaquette: incident spin ids (3 on the top/bottom rows, else 4).
    plaq_spins: Vec<Vec<usize>>,
}

impl Geometry {
    pub fn new(l: usize) -> Result<Geometry, GeometryError> {
        if l < 2 {
            return Err(GeometryError::TooSmall(l));
        }
        let plaquettes = l * (l - 1);
        let spins = l * l + (l - 1) * (l - 1);
        let mut geom = Geometry {
            l,
            spin_regions: vec![[(0, 0); 2]; spins],
            plaq_spins: vec![Vec::new(); plaquettes],
        };
        let left = geom.region_index(Region::Left);
        let right = geom.region_index(Region::Right);

        // vertical spins: columns 0 and l-1 touch the boundaries
        for r in 0..l {
            for c in 0..l {
                let s = geom.vertical_spin(r, c);
                let mut entries = Vec::new();
                if c == 0 {
                    let p = geom.plaq_index(r, 0);
                    entries.push((left, -geom.plaq_sign(p)));
                    entries.push((p, geom.plaq_sign(p)));
                } else if c == l - 1 {
                    let p = geom.plaq_index(r, l - 2);
                    entries.push((p, geom.plaq_sign(p)));
                    entries.push((right, -geom.plaq_sign(p)));
                } else {
                    let pl = geom.plaq_index(r, c - 1);
                    let pr = geom.plaq_index(r, c);
                    entries.push((pl, geom.plaq_sign(pl)));
                    entries.push((pr, geom.plaq_sign(pr)));
                }
                geom.spin_regions[s] = [entries[0], entries[1]];
            }
        }
        // horizontal spins between vertically adjacent plaquettes
        for r in 1..l {
            for c in 0..l - 1 {
                let s = geom.horizontal_spin(r, c);
                let pu = geom.plaq_index(r - 1, c);
                let pd = geom.plaq_index(r, c);
                geom.spin_regions[s] = [(pu, geom.plaq_sign(pu)), (pd, geom.plaq_sign(pd))];
            }
        }
        for s in 0..spins {
            for &(region, sign) in &geom.spin_regions[s] {
                if region < plaquettes {
                    debug_assert!(sign == geom.plaq_sign(region));
                    geom.plaq_spins[region].push(s);
                }
            }
        }
        Ok(geom)
    }

    pub fn size(&self) -> usize {
        self.l
    }

    pub fn spin_count(&self) -> usize {
        self.spin_regions.len()
    }

    pub fn plaquette_count(&self) -> usize {
        self.l * (self.l - 1)
    }

    /// Plaquettes plus the two boundary regions.
    pub fn region_count(&self) -> usize {
        self.plaquette_count() + 2
    }

    pub fn plaq_index(&self, row: usize, col: usize) -> usize {
        debug_assert!(row < self.l && col < self.l - 1);
        row * (self.l - 1) + col
    }

    pub fn plaq_coords(&self, p: usize) -> (usize, usize) {
        (p / (self.l - 1), p % (self.l - 1))
    }

    /// +1 on white plaquettes, -1 on grey.
    pub fn plaq_sign(&self, p: usize) -> i8 {
        let (r, c) = self.plaq_coords(p);
        if (r + c) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn region_index(&self, region: Region) -> usize {
        match region {
            Region::Plaquette(p) => p,
            Region::Left => self.plaquette_count(),
            Region::Right => self.plaquette_count() + 1,
        }
    }

    pub fn region_from_index(&self, idx: usize) -> Region {
        if idx < self.plaquette_count() {
            Region::Plaquette(idx)
        } else if idx == self.plaquette_count() {
            Region::Left
        } else {
            Region::Right
        }
    }

    pub fn vertical_spin(&self, row: usize, col: usize) -> usize {
        debug_assert!(row < self.l && col < self.l);
        row * self.l + col
    }

    pub fn horizontal_spin(&self, row: usize, col: usize) -> usize {
        debug_assert!((1..self.l).contains(&row) && col < self.l - 1);
        self.l * self.l + (row - 1) * (self.l - 1) + col
    }

    pub fn spin_role(&self, spin: usize) -> SpinRole {
        if spin < self.l * self.l {
            SpinRole::Vertical {
                row: spin / self.l,
                col: spin % self.l,
            }
        } else {
            let h = spin - self.l * self.l;
            SpinRole::Horizontal {
                row: h / (self.l - 1) + 1,
                col: h % (self.l - 1),
            }
        }
    }

    /// The two (region, sign) memberships of a spin.
    pub fn spin_regions(&self, spin: usize) -> [(Region, i8); 2] {
        let [(a, sa), (b, sb)] = self.spin_regions[spin];
        [
            (self.region_from_index(a), sa),
            (self.region_from_index(b), sb),
        ]
    }

    pub fn plaquette_spins(&self, p: usize) -> &[usize] {
        &self.plaq_spins[p]
    }

    pub fn manhattan(&self, p1: usize, p2: usize) -> usize {
        let (r1, c1) = self.plaq_coords(p1);
        let (r2, c2) = self.plaq_coords(p2);
        r1.abs_diff(r2) + c1.abs_diff(c2)
    }

    /// Number of single-plaquette hops needed to push a charge off the
    /// given side.
    pub fn edge_distance(&self, p: usize, side: Side) -> usize {
        let (_, c) = self.plaq_coords(p);
        match side {
            Side::Left => c + 1,
            Side::Right => (self.l - 1) - c,
        }
    }

    /// Largest Manhattan distance between two plaquettes.
    pub fn diameter(&self) -> usize {
        (self.l - 1) + (self.l - 2)
    }

    /// The spin shared by two adjacent regions, if any.
    pub fn shared_spin(&self, a: Region, b: Region) -> Option<usize> {
        let (p, other) = match (a, b) {
            (Region::Plaquette(p), o) => (p, o),
            (o, Region::Plaquette(p)) => (p, o),
            _ => return None,
        };
        let (r, c) = self.plaq_coords(p);
        match other {
            Region::Left => (c == 0).then(|| self.vertical_spin(r, 0)),
            Region::Right => (c == self.l - 2).then(|| self.vertical_spin(r, self.l - 1)),
            Region::Plaquette(q) => {
                let (r2, c2) = self.plaq_coords(q);
                if r == r2 && c.abs_diff(c2) == 1 {
                    Some(self.vertical_spin(r, c.max(c2)))
                } else if c == c2 && r.abs_diff(r2) == 1 {
                    Some(self.horizontal_spin(r.max(r2), c))
                } else {
                    None
                }
            }
        }
    }
}

/// The full spin assignment plus incrementally maintained region charges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinConfig {
    spins: Vec<u8>,
    charges: Vec<u8>,
    audit: bool,
}

/// One elementary transfer applied by [`SpinConfig::move_anyon`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveStep {
    pub spin: usize,
    pub flip: Charge,
    pub landed: AnyonKind,
}

/// Observable anyon content: kinds on plaquettes (vacuum omitted) plus the
/// two boundary charges. Internal Phi residues are deliberately absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syndrome {
    pub anyons: Vec<(usize, AnyonKind)>,
    pub edge_charges: (Charge, Charge),
}

impl SpinConfig {
    /// The configuration with every spin at 0 and every region empty.
    pub fn vacuum(geom: &Geometry) -> SpinConfig {
        SpinConfig {
            spins: vec![0; geom.spin_count()],
            charges: vec![0; geom.region_count()],
            audit: false,
        }
    }

    /// When set, every flip re-checks global charge conservation.
    pub fn set_audit(&mut self, audit: bool) {
        self.audit = audit;
    }

    pub fn spin(&self, spin: usize) -> Charge {
        Charge::new(self.spins[spin])
    }

    pub fn charge(&self, geom: &Geometry, region: Region) -> Charge {
        Charge::new(self.charges[geom.region_index(region)])
    }

    pub fn kind(&self, p: usize) -> AnyonKind {
        Charge::new(self.charges[p]).kind()
    }

    pub fn edge_charges(&self, geom: &Geometry) -> (Charge, Charge) {
        (
            self.charge(geom, Region::Left),
            self.charge(geom, Region::Right),
        )
    }

    /// Rotate one spin by `g`, updating the two incident region charges.
    pub fn apply_flip(&mut self, geom: &Geometry, spin: usize, g: Charge) {
        self.spins[spin] = (self.spins[spin] + g.value()) % 6;
        for &(region, sign) in &geom.spin_regions[spin] {
            let delta = i32::from(sign) * i32::from(g.value());
            self.charges[region] = (i32::from(self.charges[region]) + delta).rem_euclid(6) as u8;
        }
        if self.audit {
            assert_eq!(
                self.total_charge(),
                Charge::ZERO,
                "global charge conservation violated after flip"
            );
        }
    }

    /// Sum of all region charges; zero at all times on any reachable state.
    pub fn total_charge(&self) -> Charge {
        let sum: u32 = self.charges.iter().map(|&c| u32::from(c)).sum();
        Charge::new((sum % 6) as u8)
    }

    /// True when no plaquette holds an anyon.
    pub fn bulk_empty(&self, geom: &Geometry) -> bool {
        self.charges[..geom.plaquette_count()].iter().all(|&c| c == 0)
    }

    pub fn syndrome(&self, geom: &Geometry) -> Syndrome {
        let anyons = (0..geom.plaquette_count())
            .filter_map(|p| {
                let kind = self.kind(p);
                (kind != AnyonKind::Vacuum).then_some((p, kind))
            })
            .collect();
        Syndrome {
            anyons,
            edge_charges: self.edge_charges(geom),
        }
    }

    /// The single flip that empties `from` into `to` through their shared
    /// spin; `(spin, g)` with `g = -sign(from) * charge(from)`.
    pub fn transfer_flip(
        &self,
        geom: &Geometry,
        from: Region,
        to: Region,
    ) -> Result<(usize, Charge), MoveError> {
        let spin = geom.shared_spin(from, to).ok_or(MoveError::NotAdjacent)?;
        let from_idx = geom.region_index(from);
        let sign = geom.spin_regions[spin]
            .iter()
            .find(|&&(r, _)| r == from_idx)
            .map(|&(_, s)| s)
            .expect("shared spin is incident to `from`");
        let b = i32::from(self.charges[from_idx]);
        Ok((spin, Charge::from_i32(-i32::from(sign) * b)))
    }

    /// Move the whole content of `from` onto the adjacent region `to`,
    /// fusing with whatever `to` holds. Returns the flip applied and the
    /// anyon kind left at the destination.
    pub fn move_anyon(
        &mut self,
        geom: &Geometry,
        from: Region,
        to: Region,
    ) -> Result<MoveStep, MoveError> {
        if self.charge(geom, from) == Charge::ZERO {
            return Err(MoveError::SourceEmpty);
        }
        let (spin, flip) = self.transfer_flip(geom, from, to)?;
        self.apply_flip(geom, spin, flip);
        debug_assert_eq!(self.charge(geom, from), Charge::ZERO);
        Ok(MoveStep {
            spin,
            flip,
            landed: self.charge(geom, to).kind(),
        })
    }

    /// Recompute every region charge from the spin values; test oracle for
    /// the incremental bookkeeping.
    pub fn recomputed_charges(&self, geom: &Geometry) -> Vec<u8> {
        let mut charges = vec![0i32; geom.region_count()];
        for spin in 0..geom.spin_count() {
            for &(region, sign) in &geom.spin_regions[spin] {
                charges[region] += i32::from(sign) * i32::from(self.spins[spin]);
            }
        }
        charges
            .into_iter()
            .map(|c| c.rem_euclid(6) as u8)
            .collect()
    }

    /// Debug dump used by `run --trace`.
    pub fn to_json(&self, geom: &Geometry) -> serde_json::Value {
        let plaquettes: Vec<serde_json::Value> = (0..geom.plaquette_count())
            .map(|p| {
                let (r, c) = geom.plaq_coords(p);
                serde_json::json!([r, c, self.charges[p]])
            })
            .collect();
        serde_json::json!({
            "L": geom.size(),
            "spins": self.spins,
            "charges": {
                "plaquettes": plaquettes,
                "b_l": self.charges[geom.region_index(Region::Left)],
                "b_r": self.charges[geom.region_index(Region::Right)],
            },
        })
    }
}
