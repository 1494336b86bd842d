mod props;

fn run(name: &str, suite: fn() -> Result<usize, String>) {
    match suite() {
        Ok(n) => assert!(n >= 200, "{name}: only {n} cases"),
        Err(e) => panic!("{name}: {e}"),
    }
}

#[test]
fn janet_cones_partition_multiples() {
    run("janet", props::janet_cone_partition);
}

#[test]
fn pseudo_reduction_steps_certify() {
    run("ring", props::ring_step_certificates);
}

#[test]
fn difference_normal_forms_certify() {
    run("difference", props::difference_certificates);
}

#[test]
fn differential_normal_forms_certify() {
    run("differential", props::differential_certificates);
}

#[test]
fn limits_are_multiplicative_and_shift_stable() {
    run("limit", props::limit_properties);
}

#[test]
fn quasi_simple_splitting_partitions_solutions() {
    run("algebraic", props::algebraic_partition);
}
