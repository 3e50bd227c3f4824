use gldim_core::artinian::{artin_gldim, artin_hom_degrees, global_spectrum_artin, is_initial_segment, SubsetVerdict};
use gldim_core::linalg::{q, rank, Q};
use gldim_core::resolve::GldimVerdict;

/// `dim Hom(k[x]/x^a, k[x]/x^b)` as the solution space of `X J_a = J_b X`
/// for nilpotent Jordan blocks.
fn hom_dim_by_matrices(a: usize, b: usize) -> usize {
    let jordan = |m: usize, r: usize, c: usize| r == c + 1 && c < m;
    let unknowns = b * a;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for r in 0..b {
        for c in 0..a {
            let mut row = vec![q(0); unknowns];
            // (X J_a)[r][c] = Σ_k X[r][k] J_a[k][c]
            for k in 0..a {
                if jordan(a, k, c) {
                    row[r * a + k] += q(1);
                }
            }
            // (J_b X)[r][c] = Σ_k J_b[r][k] X[k][c]
            for k in 0..b {
                if jordan(b, r, k) {
                    row[k * a + c] -= q(1);
                }
            }
            rows.push(row);
        }
    }
    unknowns - rank(&rows, unknowns)
}

fn det(mut m: Vec<Vec<i128>>) -> i128 {
    // Bareiss elimination
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

#[test]
fn hom_degrees_match_jordan_blocks() {
    for n in 1..=5 {
        for a in 1..=n {
            for b in 1..=n {
                assert_eq!(artin_hom_degrees(n, a, b).unwrap().len(), hom_dim_by_matrices(a, b), "n={n} a={a} b={b}");
            }
        }
    }
}

#[test]
fn classification_up_to_five() {
    for n in 1..=5 {
        let spec = global_spectrum_artin(n, None).unwrap();
        assert_eq!(spec.subsets.len(), (1 << n) - 1);
        assert!(spec.capped().is_empty(), "n={n}");
        assert!(spec.classification_matches, "n={n}");
        assert!(spec.witnesses_checked, "n={n}");
        let expected: Vec<usize> = if n == 1 { vec![0] } else { vec![0, 2] };
        assert_eq!(spec.spectrum.iter().copied().collect::<Vec<_>>(), expected);
        for s in &spec.subsets {
            assert!(s.certificates_pass, "{:?}", s.indices);
            assert_eq!(matches!(s.verdict, SubsetVerdict::Finite { .. }), is_initial_segment(&s.indices));
        }
    }
}

/// A finite-dimensional algebra of finite global dimension has a unimodular
/// Cartan matrix, here `min(a_i, a_j)`.
#[test]
fn finite_verdicts_have_unimodular_cartan_matrices() {
    for n in 1..=5usize {
        for mask in 1u32..1 << n {
            let idx: Vec<usize> = (1..=n).filter(|&a| mask & (1 << (a - 1)) != 0).collect();
            let cartan = idx.iter().map(|&a| idx.iter().map(|&b| a.min(b) as i128).collect()).collect();
            let d = det(cartan);
            if let GldimVerdict::Finite { .. } = artin_gldim(n, &idx, None).unwrap() {
                assert_eq!(d.abs(), 1, "{idx:?}");
            }
        }
    }
}

#[test]
fn full_index_set_has_dimension_two() {
    for n in 2..=6 {
        let all: Vec<usize> = (1..=n).collect();
        assert_eq!(artin_gldim(n, &all, None).unwrap().gldim(), Some(2));
        assert_eq!(artin_gldim(n, &[1], None).unwrap().gldim(), Some(0));
    }
}

#[test]
fn infinite_witnesses_name_a_simple_and_repeat() {
    match artin_gldim(4, &[2, 4], None).unwrap() {
        GldimVerdict::Infinite { witness, .. } => {
            assert!(witness.first < witness.repeat);
            assert!(!witness.top.is_empty());
        }
        other => panic!("{other:?}"),
    }
}
