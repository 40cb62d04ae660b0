//! Exact cochain-level computations for fermionic symmetry data.
//!
//! The crate answers two families of questions about a finite "bosonic"
//! group G_b carrying a degree-2 class κ:
//!
//! * how the supercohomology data (α, β, γ) of the associated symmetry
//!   shifts under stacking with a Spin(n)₁ theory and condensing the
//!   composite boson — including the exact orbit period of the shift; and
//! * which Spin(n)₁ theories admit symmetry-fractionalization data
//!   (n₁, n₂) solving dn₂ = n₁∪κ + c·Sq¹κ on that background, equivalently
//!   the image of the central-charge map as a subgroup of ℤ/16.
//!
//! Everything is exact: F₂ cochains are bit-packed, ℚ/ℤ cochains are
//! reduced rationals, and every identity is checked as literal equality of
//! cochains, never up to tolerance.
//!
//! Module map:
//! * [`group`] — validated multiplication tables and named presets.
//! * [`f2linalg`] — bit-packed Gaussian elimination (rank / kernel / solve).
//! * [`rational`] — exact ℚ/ℤ scalars and vectors.
//! * [`cochain`] — the normalized bar complex: differential, cup and cup-i
//!   products, Steenrod squares, Bockstein, cohomology queries.
//! * [`supercoh`] — supercohomology cocycles, the stack-and-condense shift,
//!   and orbit periods.
//! * [`premodular`] — table-driven Spin(n)₁ / SO(n)₁ categories, Deligne
//!   products, and boson condensation via local modules.
//! * [`consistency`] — the spin-G_f consistency solver and the ℤ/16
//!   subgroup it carves out.
//! * [`io`] — JSON file formats for groups, cochains, bundles, and reports.
//! * [`verify`] — the named check suites behind `verify` and the
//!   acceptance tests.

pub mod cochain;
pub mod consistency;
pub mod f2linalg;
pub mod group;
pub mod io;
pub mod premodular;
pub mod rational;
pub mod supercoh;
pub mod verify;
