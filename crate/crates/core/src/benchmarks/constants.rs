//! Constant tables of the fixed-dimension functions, in the standard
//! values used throughout the evolutionary-programming literature.

/// Shekel's foxholes: 25 holes on a 5x5 grid with spacing 16.
pub const FOXHOLES_A: [[f64; 25]; 2] = {
    const GRID: [f64; 5] = [-32.0, -16.0, 0.0, 16.0, 32.0];
    let mut a = [[0.0; 25]; 2];
    let mut j = 0;
    while j < 25 {
        a[0][j] = GRID[j % 5];
        a[1][j] = GRID[j / 5];
        j += 1;
    }
    a
};

pub const KOWALIK_A: [f64; 11] = [
    0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
];

/// Reciprocals of the tabulated `1 / b_i` = 0.25, 0.5, 1, 2, 4, 6, 8, 10, 12, 14, 16.
pub const KOWALIK_B: [f64; 11] = [
    4.0,
    2.0,
    1.0,
    0.5,
    0.25,
    1.0 / 6.0,
    0.125,
    0.1,
    1.0 / 12.0,
    1.0 / 14.0,
    0.0625,
];

pub const HARTMAN_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];

pub const HARTMAN3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];

pub const HARTMAN3_P: [[f64; 3]; 4] = [
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.038150, 0.5743, 0.8828],
];

pub const HARTMAN6_A: [[f64; 6]; 4] = [
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
];

pub const HARTMAN6_P: [[f64; 6]; 4] = [
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1415, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
];

pub const SHEKEL_A: [[f64; 4]; 10] = [
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
];

pub const SHEKEL_C: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn foxhole_grid_layout() {
        assert_eq!(FOXHOLES_A[0][..5], [-32.0, -16.0, 0.0, 16.0, 32.0]);
        assert_eq!(FOXHOLES_A[1][..5], [-32.0; 5]);
        assert_eq!(FOXHOLES_A[0][24], 32.0);
        assert_eq!(FOXHOLES_A[1][24], 32.0);
        assert_eq!(FOXHOLES_A[1][12], 0.0);
    }

    #[test]
    fn kowalik_b_reciprocals() {
        let inv = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];
        for (b, r) in KOWALIK_B.iter().zip(inv) {
            assert!((b * r - 1.0).abs() < 1e-15);
        }
    }
}
