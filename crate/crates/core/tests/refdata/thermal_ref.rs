// Ideal-gas (g=0) canonical two-boson SPRDM anchors, offline brute force.
// (T, x, xp, rho)
pub const FREE_THERMAL_REF: &[(f64, f64, f64, f64)] = &[
    (0.5, 0.0, 0.0, 0.5189895633137713),
    (0.5, 0.7, -0.3, 0.3730428295529284),
    (2.5, 0.0, 0.0, 0.26666049636334144),
    (2.5, 0.7, -0.3, 0.0877637745523955),
];
