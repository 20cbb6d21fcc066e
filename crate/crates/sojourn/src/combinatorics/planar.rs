//! Cyclic shifts of planar point lists and the unique-shift lemma.
//!
//! Given points z_1, .., z_n in the plane with nonzero sum s, exactly one
//! cyclic shift of the list keeps every partial sum inside the closed half
//! plane to the left of s, provided the list is skew (no partial sum of any
//! shift is a nonzero real multiple of s). This pins down a canonical
//! starting index for any generic loop of increments.

use super::CombinatoricsError;

/// A point of the plane, `[x, y]`.
pub type PlanarPoint = [f64; 2];

/// The n cyclic shifts of index order for a list of length n, identity
/// first. Shift j is the permutation i -> (i + j) mod n, so applying shift
/// j to (z_1, .., z_n) starts the list at z_{j+1}.
pub fn cyclic_shifts(n: usize) -> Result<Vec<Vec<usize>>, CombinatoricsError> {
    if n == 0 {
        return Err(CombinatoricsError::EmptyInput);
    }
    Ok((0..n)
        .map(|j| (0..n).map(|i| (i + j) % n).collect())
        .collect())
}

/// Whether `point` lies in the closed half plane to the left of
/// `direction`, i.e. whether the cross product direction x point is
/// nonnegative. The zero direction leaves the half plane undefined.
pub fn left_half_space_contains(
    direction: PlanarPoint,
    point: PlanarPoint,
) -> Result<bool, CombinatoricsError> {
    if direction == [0.0, 0.0] {
        return Err(CombinatoricsError::ZeroDirection);
    }
    Ok(cross(direction, point) >= 0.0)
}

fn cross(a: PlanarPoint, b: PlanarPoint) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Finds the unique cyclic shift of `points` whose partial sums all stay in
/// the closed left half plane of the total sum.
///
/// Returns the shift offset j such that starting the list at index j is
/// admissible. The final partial sum is the total itself and lies on the
/// boundary by construction, so only the n-1 proper partial sums are
/// tested. Fails with [`CombinatoricsError::DegenerateShiftCount`] when the
/// list is not skew (ties produce zero or several admissible shifts), and
/// with [`CombinatoricsError::ZeroDirection`] when the points sum to zero.
pub fn baxter_unique_shift(points: &[PlanarPoint]) -> Result<usize, CombinatoricsError> {
    if points.is_empty() {
        return Err(CombinatoricsError::EmptyInput);
    }
    let n = points.len();
    let mut total = [0.0, 0.0];
    for p in points {
        total[0] += p[0];
        total[1] += p[1];
    }
    if total == [0.0, 0.0] {
        return Err(CombinatoricsError::ZeroDirection);
    }

    let mut admissible = None;
    let mut count = 0usize;
    for j in 0..n {
        let mut sum = [0.0, 0.0];
        let mut ok = true;
        for i in 0..n - 1 {
            let p = points[(i + j) % n];
            sum[0] += p[0];
            sum[1] += p[1];
            if cross(total, sum) < 0.0 {
                ok = false;
                break;
            }
        }
        if ok {
            admissible = Some(j);
            count += 1;
        }
    }
    match (admissible, count) {
        (Some(j), 1) => Ok(j),
        _ => Err(CombinatoricsError::DegenerateShiftCount { count }),
    }
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    use super::*;

    #[test]
    fn shifts_enumerate_all_rotations() {
        let shifts = cyclic_shifts(3).unwrap();
        assert_eq!(shifts, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]);
        assert!(cyclic_shifts(0).is_err());
        let shifts = cyclic_shifts(1).unwrap();
        assert_eq!(shifts, vec![vec![0]]);
    }

    #[test]
    fn shift_permutations_compose_cyclically() {
        let n = 7;
        let shifts = cyclic_shifts(n).unwrap();
        let letters: Vec<usize> = (0..n).collect();
        for (j, shift) in shifts.iter().enumerate() {
            let rotated: Vec<usize> = shift.iter().map(|&i| letters[i]).collect();
            for (i, &r) in rotated.iter().enumerate() {
                assert_eq!(r, (i + j) % n);
            }
        }
    }

    #[test]
    fn half_space_test_uses_the_cross_product() {
        assert!(left_half_space_contains([1.0, 0.0], [0.0, 1.0]).unwrap());
        assert!(!left_half_space_contains([1.0, 0.0], [0.0, -1.0]).unwrap());
        // boundary points count as inside
        assert!(left_half_space_contains([1.0, 0.0], [5.0, 0.0]).unwrap());
        assert!(left_half_space_contains([1.0, 0.0], [-5.0, 0.0]).unwrap());
        assert!(matches!(
            left_half_space_contains([0.0, 0.0], [1.0, 1.0]),
            Err(CombinatoricsError::ZeroDirection)
        ));
    }

    #[test]
    fn single_point_lists_use_the_identity_shift() {
        assert_eq!(baxter_unique_shift(&[[3.0, -1.0]]).unwrap(), 0);
    }

    #[test]
    fn two_point_example() {
        assert_eq!(baxter_unique_shift(&[[1.0, 1.0], [1.0, -1.0]]).unwrap(), 0);
        assert_eq!(baxter_unique_shift(&[[1.0, -1.0], [1.0, 1.0]]).unwrap(), 1);
    }

    #[test]
    fn degenerate_lists_are_reported() {
        assert!(matches!(
            baxter_unique_shift(&[[1.0, 1.0], [1.0, 1.0]]),
            Err(CombinatoricsError::DegenerateShiftCount { count: 2 })
        ));
        assert!(matches!(
            baxter_unique_shift(&[[1.0, 0.0], [-1.0, 0.0]]),
            Err(CombinatoricsError::ZeroDirection)
        ));
        assert!(matches!(
            baxter_unique_shift(&[]),
            Err(CombinatoricsError::EmptyInput)
        ));
    }

    #[test]
    fn gaussian_lists_have_exactly_one_admissible_shift() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1ce);
        for n in 1..=8 {
            for _ in 0..500 {
                let points: Vec<PlanarPoint> = (0..n)
                    .map(|_| [rng.sample(StandardNormal), rng.sample(StandardNormal)])
                    .collect();
                baxter_unique_shift(&points).expect("generic list must have a unique shift");
            }
        }
    }

    #[test]
    fn rotating_the_list_moves_the_answer_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = 2 + rng.random_range(0..7usize);
            let points: Vec<PlanarPoint> = (0..n)
                .map(|_| [rng.sample(StandardNormal), rng.sample(StandardNormal)])
                .collect();
            let j = baxter_unique_shift(&points).unwrap();
            let r = rng.random_range(0..n);
            let rotated: Vec<PlanarPoint> = (0..n).map(|i| points[(i + r) % n]).collect();
            let jr = baxter_unique_shift(&rotated).unwrap();
            assert_eq!((jr + r) % n, j, "n = {n}, r = {r}");
        }
    }
}
