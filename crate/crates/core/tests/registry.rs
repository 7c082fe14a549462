use hook_core::exactnum::rat_int;
use hook_core::identities::{
    Checker, Entry, Outcome, ParamSpec, Params, Registry, Status, VerificationReport,
};
use hook_core::series::{euler_power, pentagonal_series, Series};
use hook_core::Error;

fn perturbed_entry(at: usize) -> Entry {
    Entry::new(
        "perturbed-pentagonal",
        "pentagonal series with one coefficient changed",
        vec![ParamSpec::size("N", 12, 0)],
        move |a| {
            let order = a.size("N");
            let mut coeffs = pentagonal_series(order).into_coeffs();
            if at <= order {
                coeffs[at] += rat_int(1);
            }
            let mut c = Checker::new();
            c.series(
                "",
                &euler_power(&rat_int(1), order),
                &Series::from_coeffs(coeffs),
            );
            Ok(Outcome::new(format!("x^0..{order}"), c))
        },
    )
}

#[test]
fn perturbation_is_caught_at_the_right_power() {
    let r = Registry::new(vec![perturbed_entry(7)]);
    let report = r.verify("perturbed-pentagonal", &Params::new()).unwrap();
    assert_eq!(report.status, Status::Fail);
    let m = report.first_mismatch.unwrap();
    assert_eq!(m.location, "x^7");
    assert_eq!((m.lhs.as_str(), m.rhs.as_str()), ("1", "2"));

    let clean = Registry::new(vec![perturbed_entry(100)]);
    assert!(clean
        .verify("perturbed-pentagonal", &Params::new())
        .unwrap()
        .passed());
}

#[test]
fn budget_shrinks_size_params() {
    let r = Registry::new(vec![perturbed_entry(7)]);
    let reports = r.verify_all(Some(5));
    assert_eq!(reports.len(), 1);
    assert!(reports[0].passed());
    assert_eq!(reports[0].params["N"], 5);
}

#[test]
fn report_json_shape() {
    let r = Registry::standard();
    let params = Params::from([("N".to_string(), 6)]);
    let report = r.verify("main-identity", &params).unwrap();
    let v = report.to_json_value();
    let obj = v.as_object().unwrap();
    let mut keys: Vec<&str> = obj.keys().map(|k| k.as_str()).collect();
    keys.sort_unstable();
    assert_eq!(
        keys,
        [
            "checked_range",
            "elapsed_ms",
            "first_mismatch",
            "id",
            "params",
            "status"
        ]
    );
    assert_eq!(obj["status"], "pass");
    assert_eq!(obj["params"]["N"], 6);
    assert!(obj["first_mismatch"].is_null());
}

#[test]
fn standard_registry_at_small_budget() {
    let reports: Vec<VerificationReport> = Registry::standard().verify_all(Some(6));
    assert!(reports.len() >= 30);
    for r in &reports {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn zero_budget_passes() {
    for r in Registry::standard().verify_all(Some(0)) {
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn errors() {
    let r = Registry::standard();
    assert!(matches!(
        r.verify("missing", &Params::new()),
        Err(Error::UnknownIdentity(_))
    ));
    let big = Params::from([("k".to_string(), 5)]);
    assert!(matches!(
        r.verify("kostant-poly", &big),
        Err(Error::BadParam(_))
    ));
}
