use swan_core::classify::stabilization_counts;
use swan_core::swan::{ff_set, is_free, sf_set, table, FreeStatus, SwanInput, VerdictRecord};

#[test]
fn table_agrees_with_single_verdicts() {
    let rows = table(7).unwrap();
    assert_eq!(rows.len(), 24);
    let ff = ff_set(7).unwrap();
    let sf = sf_set(7).unwrap();
    for row in &rows {
        let r = row.input.r();
        let single = is_free(&SwanInput::new(7, r as i64).unwrap()).unwrap();
        assert_eq!(single.record(), row.record());
        assert_eq!(row.stably_free, sf.contains(&r));
        assert_eq!(row.free == FreeStatus::Free, ff.contains(&r));
    }
}

#[test]
fn verdict_record_json_roundtrip() {
    for row in table(7).unwrap() {
        let rec = row.record();
        let text = serde_json::to_string(&rec).unwrap();
        assert_eq!(serde_json::from_str::<VerdictRecord>(&text).unwrap(), rec);
    }
}

#[test]
fn negative_and_large_residues_reduce() {
    let a = is_free(&SwanInput::new(7, -41).unwrap()).unwrap();
    let b = is_free(&SwanInput::new(7, 15 + 56 * 3).unwrap()).unwrap();
    assert_eq!(a.record(), b.record());
    assert_eq!(a.free, FreeStatus::NotFree);
}

#[test]
fn classification_follows_free_set() {
    let report = stabilization_counts(7, 7).unwrap();
    assert_eq!(report.ff, ff_set(7).unwrap());
    let one = report.one_stabilization.unwrap();
    let sizes: Vec<usize> = one.cosets.iter().map(Vec::len).collect();
    assert_eq!(sizes, vec![6, 6]);
}
