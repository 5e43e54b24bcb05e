use airpockets::oracle::{count_paths, enum_paths, Family, FamilySpec, StepKind};
use airpockets::{evaluate, LatticePath, Params, Step};
use proptest::prelude::*;

/// Every air-pocket path of length `n` with down-steps of size at most `kmax`,
/// generated without any of the oracle's pruning.
fn all_paths(n: usize, kmax: u32) -> Vec<LatticePath> {
    fn go(n: usize, kmax: u32, prefix: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
        if prefix.len() == n {
            out.push(LatticePath::new(prefix.clone()).unwrap());
            return;
        }
        let last_down = prefix.last().is_some_and(|s| s.is_down());
        prefix.push(Step::Up);
        go(n, kmax, prefix, out);
        prefix.pop();
        if !last_down {
            for k in 1..=kmax {
                prefix.push(Step::Down(k));
                go(n, kmax, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, kmax, &mut Vec::new(), &mut out);
    out
}

fn specs() -> Vec<FamilySpec> {
    use StepKind::{Down, Up};
    let mut v = vec![
        FamilySpec::gdap(),
        FamilySpec::new(Family::Dap),
        FamilySpec::new(Family::Prime),
        FamilySpec::gdap().start_step(Up),
        FamilySpec::gdap().start_step(Down).end_step(Up),
        FamilySpec::gdap().end_step(Down),
        FamilySpec::gdap().bounded(-1, 1),
        FamilySpec::gdap().bounded(0, 2),
        FamilySpec::prefix().min_y(0),
        FamilySpec::prefix().min_y(-2),
        FamilySpec::prefix().min_y(-1).max_y(2).end_step(Up),
    ];
    for k in -3..=3 {
        v.push(FamilySpec::prefix().end_ordinate(k));
    }
    v
}

#[test]
fn walker_agrees_with_unpruned_generation() {
    for n in 0..=8 {
        // No member of these families descends more than n + 3 in one step.
        let everything = all_paths(n, n as u32 + 3);
        for spec in specs() {
            let want: Vec<LatticePath> = {
                let mut v: Vec<_> = everything
                    .iter()
                    .filter(|p| spec.contains(p))
                    .cloned()
                    .collect();
                v.sort();
                v
            };
            if spec.end_ordinate.is_some_and(|e| e > n as i64) {
                assert!(want.is_empty());
                assert!(enum_paths(n, &spec).is_err() && count_paths(n, &spec).is_err());
                continue;
            }
            let got = enum_paths(n, &spec).unwrap();
            let mut sorted = got.clone();
            sorted.sort();
            assert_eq!(sorted, want, "n={n} {spec:?}");
            assert_eq!(got, sorted, "listing is in step order for {spec:?}");
            assert_eq!(
                count_paths(n, &spec).unwrap(),
                want.len() as u128,
                "n={n} {spec:?}"
            );
        }
    }
}

#[test]
fn series_count_their_families() {
    let cases = [
        ("A", Params::default(), FamilySpec::new(Family::Dap), 0),
        ("P", Params::default(), FamilySpec::new(Family::Prime), 0),
        ("G", Params::default(), FamilySpec::gdap(), 0),
        (
            "Gm",
            Params::default(),
            FamilySpec::gdap().start_step(StepKind::Down),
            0,
        ),
        (
            "Gp",
            Params::default(),
            FamilySpec::gdap().start_step(StepKind::Up),
            1,
        ),
        (
            "prefix",
            Params::k(2),
            FamilySpec::prefix().end_ordinate(2),
            0,
        ),
        (
            "minorized",
            Params::m(-3),
            FamilySpec::prefix().min_y(-3),
            0,
        ),
        ("sym", Params::t(1), FamilySpec::gdap().bounded(-1, 1), 0),
        ("g0t", Params::t(2), FamilySpec::gdap().bounded(0, 2), -1),
        ("H", Params::default(), FamilySpec::new(Family::SpecialH), 0),
    ];
    for (name, params, spec, empty) in cases {
        let s = evaluate(name, params, 11)
            .unwrap()
            .series
            .to_i128s()
            .unwrap();
        for (n, &c) in s.iter().enumerate() {
            let raw = if spec.end_ordinate.is_some_and(|e| e > n as i64) {
                0
            } else {
                count_paths(n, &spec).unwrap()
            };
            let count = raw as i128 + if n == 0 { empty } else { 0 };
            assert_eq!(count, c, "{name} {params:?} n={n}");
        }
    }
}

#[test]
fn infeasible_specs_are_rejected() {
    assert!(count_paths(3, &FamilySpec::prefix()).is_err());
    assert!(count_paths(3, &FamilySpec::gdap().min_y(1)).is_err());
    assert!(count_paths(3, &FamilySpec::gdap().end_ordinate(2)).is_err());
    assert!(count_paths(2, &FamilySpec::prefix().end_ordinate(5)).is_err());
    assert!(enum_paths(3, &FamilySpec::new(Family::MotzkinAvoiding)).is_err());
}

fn any_spec() -> impl Strategy<Value = FamilySpec> {
    let step = prop::option::of(prop::sample::select(vec![StepKind::Up, StepKind::Down]));
    (
        prop::sample::select(vec![
            Family::Gdap,
            Family::Dap,
            Family::Prime,
            Family::PrefixGdap,
        ]),
        -3i64..=0,
        prop::option::of(0i64..=3),
        prop::option::of(-3i64..=3),
        step.clone(),
        step,
    )
        .prop_map(|(kind, lo, hi, end, end_step, start_step)| FamilySpec {
            kind,
            min_y: Some(lo),
            max_y: hi,
            end_ordinate: end,
            end_step,
            start_step,
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn count_equals_listing(spec in any_spec(), n in 0usize..=12) {
        match (count_paths(n, &spec), enum_paths(n, &spec)) {
            (Ok(c), Ok(list)) => {
                prop_assert_eq!(c, list.len() as u128);
                prop_assert!(list.iter().all(|p| p.len() == n && spec.contains(p)));
                prop_assert!(list.windows(2).all(|w| w[0] < w[1]));
            }
            (Err(a), Err(b)) => prop_assert_eq!(a, b),
            (a, b) => prop_assert!(false, "count {a:?} vs listing {:?}", b.map(|l| l.len())),
        }
    }

    #[test]
    fn mirror_swaps_start_and_end(n in 0usize..=9) {
        let g = FamilySpec::gdap();
        for p in enum_paths(n, &g).unwrap() {
            let m = p.mirror();
            prop_assert!(g.contains(&m));
            prop_assert_eq!(m.mirror(), p);
        }
    }
}
