use idcodes::extremal::{audit_characterization, AuditMode};
use idcodes::{CodeKind, Error};

fn exhaustive(kind: CodeKind, n: usize) {
    let r = audit_characterization(kind, n, AuditMode::Exhaustive).unwrap();
    assert!(r.passed, "{kind} n={n}: {r:?}");
    assert_eq!(r.attaining_classes, r.family_classes);
}

#[test]
fn every_kind_up_to_six_vertices() {
    for kind in CodeKind::ALL {
        for n in 2..=6 {
            match audit_characterization(kind, n, AuditMode::Exhaustive) {
                Ok(r) => assert!(r.passed, "{kind} n={n}: {r:?}"),
                Err(Error::KTooSmall { .. }) => {}
                Err(e) => panic!("{kind} n={n}: {e}"),
            }
        }
    }
}

#[test]
fn ld_at_five_vertices() {
    let r = audit_characterization(CodeKind::LD, 5, AuditMode::Exhaustive).unwrap();
    assert!(r.passed);
    assert_eq!(r.k, 2);
    // zero deletions are possible at 2^2 + 2 - 1 vertices
    assert_eq!(r.family_members, 16);
}

#[test]
fn od_at_seven_vertices() {
    exhaustive(CodeKind::OD, 7);
}

/// Four deletions from the 11-vertex G^F(4) reach seven vertices.
#[test]
fn ftd_at_seven_vertices() {
    let r = audit_characterization(CodeKind::FTD, 7, AuditMode::Exhaustive).unwrap();
    assert!(r.passed, "{r:?}");
    assert_eq!(r.k, 4);
    assert!(r.attaining > 0);
}

#[test]
fn sampled_audits() {
    for (kind, n) in [(CodeKind::OD, 8), (CodeKind::LD, 9), (CodeKind::FD, 8), (CodeKind::ITD, 10)] {
        let r = audit_characterization(kind, n, AuditMode::Sampled { seed: 11, trials: 500 }).unwrap();
        assert!(r.passed, "{kind} n={n}: {r:?}");
    }
}

#[test]
fn sampled_audits_are_deterministic() {
    let mode = AuditMode::Sampled { seed: 4, trials: 200 };
    assert_eq!(
        audit_characterization(CodeKind::ID, 8, mode).unwrap(),
        audit_characterization(CodeKind::ID, 8, mode).unwrap()
    );
}
