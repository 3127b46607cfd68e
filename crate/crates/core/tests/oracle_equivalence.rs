mod common;

#[test]
fn fast_successors_match_oracle() {
    let report = common::equivalence_sweep(common::SweepOptions::default());
    assert!(report.mismatches.is_empty(), "{} mismatches, first:\n{}", report.mismatches.len(),
        report.mismatches.iter().take(5).cloned().collect::<Vec<_>>().join("\n"));
    assert!(report.states > 400);
}

#[test]
fn oracle_rejections_break_row_equation() {
    let (checked, bad) = common::rejected_rows_violate(11, 300);
    assert!(checked >= 300);
    assert!(bad.is_empty(), "{}", bad[..bad.len().min(3)].join("\n"));
}
