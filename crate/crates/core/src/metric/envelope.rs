/// Least concave majorant of `seq` viewed as points `(i, seq[i])`.
///
/// Entries equal to negative infinity are left out of the hull and stay
/// negative infinity in the output. Between hull vertices the output is the
/// linear interpolation of the two neighbouring vertices.
pub fn upper_concave_envelope(seq: &[f64]) -> Vec<f64> {
    let mut hull: Vec<usize> = Vec::new();
    for (i, &y) in seq.iter().enumerate() {
        if y == f64::NEG_INFINITY {
            continue;
        }
        // Pop the last vertex while it lies on or below the chord from its
        // predecessor to the new point.
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b - a) as f64 * (y - seq[a]) - (i - a) as f64 * (seq[b] - seq[a]);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(i);
    }

    let mut out = seq.to_vec();
    for pair in hull.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let slope = (seq[b] - seq[a]) / (b - a) as f64;
        for (i, slot) in out.iter_mut().enumerate().take(b).skip(a + 1) {
            if *slot != f64::NEG_INFINITY {
                *slot = seq[a] + slope * (i - a) as f64;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Least concave majorant at i: max over pairs a <= i <= b of the chord value.
    fn brute_force_envelope(seq: &[f64]) -> Vec<f64> {
        let n = seq.len();
        (0..n)
            .map(|i| {
                let mut best = seq[i];
                for a in 0..=i {
                    for b in i..n {
                        if a == b {
                            continue;
                        }
                        let v = seq[a] + (seq[b] - seq[a]) * (i - a) as f64 / (b - a) as f64;
                        best = best.max(v);
                    }
                }
                best
            })
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(
            upper_concave_envelope(&[0.0, 1.0, 0.0]),
            vec![0.0, 1.0, 0.0]
        );
        assert_eq!(
            upper_concave_envelope(&[0.0, 0.0, 2.0]),
            vec![0.0, 1.0, 2.0]
        );
        let five = [0.0, 3.0, 1.0, 4.0, 0.0];
        assert_eq!(brute_force_envelope(&five), vec![0.0, 3.0, 3.5, 4.0, 0.0]);
        assert_eq!(upper_concave_envelope(&five), vec![0.0, 3.0, 3.5, 4.0, 0.0]);
    }

    #[test]
    fn single_point_and_neg_infinity() {
        assert_eq!(upper_concave_envelope(&[2.5]), vec![2.5]);
        let ninf = f64::NEG_INFINITY;
        let out = upper_concave_envelope(&[0.0, ninf, 2.0, 0.0, ninf]);
        assert_eq!(out, vec![0.0, ninf, 2.0, 0.0, ninf]);
        let out = upper_concave_envelope(&[0.0, -5.0, ninf, 3.0]);
        assert_eq!(out, vec![0.0, 1.0, ninf, 3.0]);
    }

    proptest! {
        #[test]
        fn matches_brute_force(seq in prop::collection::vec(-50.0f64..50.0, 1..30)) {
            let fast = upper_concave_envelope(&seq);
            let slow = brute_force_envelope(&seq);
            for (a, b) in fast.iter().zip(&slow) {
                prop_assert!((a - b).abs() < 1e-9, "{fast:?} vs {slow:?}");
            }
        }

        #[test]
        fn majorant_concave_idempotent(seq in prop::collection::vec(-50.0f64..50.0, 1..40)) {
            let env = upper_concave_envelope(&seq);
            for (e, s) in env.iter().zip(&seq) {
                prop_assert!(e >= s);
            }
            for w in env.windows(3) {
                prop_assert!(w[2] - w[1] <= w[1] - w[0] + 1e-9);
            }
            let again = upper_concave_envelope(&env);
            for (a, b) in again.iter().zip(&env) {
                prop_assert!((a - b).abs() < 1e-9);
            }
        }
    }
}
