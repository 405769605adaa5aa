use hmp_entropy::bounds::{self, extremize_phi, phi, BoundsConfig, PathState};
use hmp_entropy::forward::{self, compose_f, ObservationString};
use hmp_entropy::{cli, simulate, ModelParams};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = ModelParams> {
    (0.01..0.49f64, 0.01..0.49f64, 0.0..=0.5f64).prop_map(|(a, b, e)| ModelParams::new(a, b, e).unwrap())
}

fn bits(max: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..=1, 0..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn maps_complementary_and_bounded(p in params(), x in 0.0..=1.0f64) {
        prop_assert!((p.g0(x) + p.g1(x) - 1.0).abs() <= f64::EPSILON);
        prop_assert!((0.0..=1.0).contains(&p.f0(x)));
        prop_assert!((0.0..=1.0).contains(&p.f1(x)));
    }

    #[test]
    fn maps_monotone(p in params(), x in 0.0..=1.0f64, y in 0.0..=1.0f64) {
        let (x, y) = if x <= y { (x, y) } else { (y, x) };
        prop_assert!(p.f0(x) <= p.f0(y) + 1e-15);
        prop_assert!(p.f1(x) <= p.f1(y) + 1e-15);
    }

    #[test]
    fn composition_monotone(p in params(), z in bits(20)) {
        let lo = compose_f(&p, &z, 0.0);
        let mid = compose_f(&p, &z, p.p0());
        let hi = compose_f(&p, &z, 1.0);
        prop_assert!(lo <= mid + 1e-14 && mid <= hi + 1e-14, "{lo} {mid} {hi}");
    }

    #[test]
    fn interval_brackets_phi(p in params(), z in bits(15), xs in prop::collection::vec(0.0..=1.0f64, 100)) {
        let state = z.iter().fold(PathState::root(&p), |s, &b| s.child(&p, b));
        prop_assert!(0.0 <= state.lo && state.lo <= state.belief + 1e-14);
        prop_assert!(state.belief <= state.hi + 1e-14 && state.hi <= 1.0);
        let (min, max) = extremize_phi(&p, state.lo, state.hi);
        for x in xs {
            let v = phi(&p, compose_f(&p, &z, x));
            prop_assert!(min - 1e-12 <= v && v <= max + 1e-12, "{min} <= {v} <= {max}");
        }
    }

    #[test]
    fn complement_symmetry(a in 0.01..0.49f64, e in 0.0..=0.5f64, z in bits(12)) {
        let p = ModelParams::new(a, a, e).unwrap();
        let z = ObservationString::from_bits(z).unwrap();
        let pz = forward::sequence_prob(&p, &z).prob;
        let pc = forward::sequence_prob(&p, &z.complement()).prob;
        prop_assert!((pz - pc).abs() <= 1e-14);
    }

    #[test]
    fn shift_stationarity(p in params(), w in bits(10)) {
        let pw = forward::sequence_prob(&p, &w).prob;
        let prefixed: f64 = (0..2u8)
            .map(|b| {
                let mut z = vec![b];
                z.extend(&w);
                forward::sequence_prob(&p, &z).prob
            })
            .sum();
        let suffixed: f64 = (0..2u8)
            .map(|b| {
                let mut z = w.clone();
                z.push(b);
                forward::sequence_prob(&p, &z).prob
            })
            .sum();
        prop_assert!((prefixed - pw).abs() <= 1e-12);
        prop_assert!((suffixed - pw).abs() <= 1e-12);
    }

    #[test]
    fn forward_matches_oracle(p in params(), z in bits(12)) {
        let fwd = forward::sequence_prob(&p, &z);
        let bf = forward::brute_force_prob(&p, &z).unwrap();
        prop_assert!((fwd.prob - bf).abs() <= 1e-12);
        prop_assert!(fwd.beliefs.iter().all(|b| (0.0..=1.0).contains(b)));
    }

    #[test]
    fn block_entropy_range(p in params(), n in 0usize..=10) {
        let h = forward::block_entropy(&p, n).unwrap();
        prop_assert!(h >= -1e-12 && h <= n as f64 + 1e-12);
    }

    #[test]
    fn packed_bits_round_trip(z in bits(200)) {
        prop_assert_eq!(simulate::unpack_bits(&simulate::pack_bits(&z), z.len()), z);
    }

    #[test]
    fn json_floats_round_trip(x in any::<f64>().prop_filter("finite", |x| x.is_finite())) {
        let back: f64 = serde_json::from_str(&cli::to_json(&x)).unwrap();
        prop_assert_eq!(back.to_bits(), x.to_bits());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Sandwich, monotonicity and the envelope hold for any accepted parameters,
    /// including non-contractive ones where `geo` is absent.
    #[test]
    fn bounds_structure(p in params()) {
        let c = p.contraction();
        let rows = bounds::table(&p, 11, &BoundsConfig::sequential()).unwrap();
        for r in &rows {
            prop_assert!(r.lower <= r.approx + 1e-12 && r.approx <= r.upper + 1e-12);
            prop_assert!(0.0 <= r.lower + 1e-12 && r.upper <= 1.0 + 1e-12);
            prop_assert_eq!(r.geo.is_some(), c.contractive);
            if let Some(g) = r.geo {
                prop_assert!(r.width <= g + 1e-12, "n={} width {} geo {}", r.n, r.width, g);
            }
        }
        for w in rows.windows(2) {
            prop_assert!(w[1].lower >= w[0].lower - 1e-12);
            prop_assert!(w[1].upper <= w[0].upper + 1e-12);
        }
    }

    #[test]
    fn level_mass_conserved(p in params()) {
        let mut level = vec![PathState::root(&p)];
        for _ in 0..12 {
            level = bounds::level_expand(&p, &level, 1 << 13).unwrap();
            let mass = hmp_entropy::sum::compensated_sum(level.iter().map(|s| s.prob));
            prop_assert!((mass - 1.0).abs() <= 1e-12);
            prop_assert!(level.iter().all(|s| s.lo <= s.belief + 1e-14 && s.belief <= s.hi + 1e-14));
        }
    }
}

#[test]
fn run_report_brackets_estimate() {
    for (a, b, e) in [(0.1, 0.1, 0.01), (0.3, 0.2, 0.1), (0.45, 0.4, 0.3)] {
        let p = ModelParams::new(a, b, e).unwrap();
        let report = bounds::run_with(&p, 1e-6, 22, &BoundsConfig::default()).unwrap();
        for r in &report.rows {
            assert!(r.lower - 1e-12 <= report.estimate && report.estimate <= r.upper + 1e-12);
        }
        if report.converged {
            assert!(report.guaranteed_error <= 1e-6);
        }
    }
}

#[test]
fn reference_converges_within_envelope_depth() {
    let p = ModelParams::new(0.1, 0.1, 0.01).unwrap();
    let report = bounds::run(&p, 1e-3, 30).unwrap();
    assert!(report.converged);
    // 2.388 * 0.679012^19 < 2e-3, so the stopping depth can be no later than 19.
    let c = p.contraction();
    let envelope_depth = (0..).find(|&n| c.envelope(n).unwrap() <= 2e-3).unwrap();
    assert!(envelope_depth <= 19);
    assert!(report.last().n <= envelope_depth);
}

#[test]
fn noiseless_run_stops_at_depth_one() {
    let p = ModelParams::new(0.1, 0.1, 0.0).unwrap();
    let report = bounds::run(&p, 1e-9, 25).unwrap();
    assert!(report.converged);
    assert_eq!(report.last().n, 1);
    assert!((report.estimate - hmp_entropy::hb(0.1)).abs() <= 1e-12);
    assert!((report.estimate - 0.46900).abs() <= 1e-5);
}

#[test]
fn deep_rows_beyond_node_budget() {
    let p = ModelParams::new(0.3, 0.25, 0.2).unwrap();
    let config = BoundsConfig {
        threads: 2,
        node_budget: 1 << 10,
    };
    let rows = bounds::table(&p, 16, &config).unwrap();
    let stored = bounds::table(&p, 16, &BoundsConfig::sequential()).unwrap();
    assert_eq!(rows.len(), 17);
    for (a, b) in rows.iter().zip(&stored) {
        assert!((a.approx - b.approx).abs() <= 1e-14);
        assert!((a.lower - b.lower).abs() <= 1e-14);
        assert!((a.upper - b.upper).abs() <= 1e-14);
    }
}
