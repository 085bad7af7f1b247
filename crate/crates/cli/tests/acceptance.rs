//! Acceptance criteria 1 to 10, one line each.
//!
//! Each criterion is computed by the library and then held against fixed
//! expected values, so a pass flag alone is never trusted. Criterion 6 (the
//! bracket and cobracket of the free Lie algebra being compatible, with the
//! cobracket landing in `Lie ⊗ Lie`) is false from degree 4 on: the
//! cobracket of `[[[x,y],x],x]` leaves `Lie ⊗ Lie`. It is
//! computed as specified, reported as FAIL, and pinned as a known failure so
//! that any change in its outcome is noticed.

use std::process::Command;
use std::time::Instant;

use serde_json::{json, Value};

use opbialg::suite::criterion;

const KNOWN_FAILURES: &[u32] = &[6];

fn all<'a>(v: &'a Value, path: &str) -> impl Iterator<Item = &'a Value> {
    v[path].as_array().expect(path).iter()
}

/// Independent checks on the details of criteria 1 to 9.
fn confirm(id: u32, d: &Value) -> Result<(), String> {
    let want = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
    match id {
        1 => want(d["dupDims"] == json!([1, 2, 5, 14, 42, 132]), "duplicial dimensions"),
        2 => {
            let checks: Vec<&Value> = all(d, "checks").collect();
            want(checks.len() >= 10, "number of relation checks")?;
            want(checks.iter().all(|c| c["holds"] == json!(true) && c["checkedPairs"].as_u64() > Some(0)), "a relation")
        }
        3 => {
            let expect = [
                ("dup", json!([1, 1, 2, 5, 14, 42])),
                ("as", json!([2, 0, 0, 0, 0, 0])),
                ("mag", json!([1, 0, 0, 0, 0, 0])),
                ("classical", json!([2, 1, 2, 3, 6])),
            ];
            for (name, ranks) in expect {
                let m = all(d, "models").find(|m| m["model"] == json!(name)).ok_or(format!("model {name}"))?;
                want(m["ranks"] == ranks && m["primDims"] == ranks, &format!("{name} ranks"))?;
                want(m["idempotent"] == json!(true) && m["imagePrimitive"] == json!(true), &format!("{name} projector"))?;
            }
            Ok(())
        }
        4 => {
            want(d["imageRanks"] == json!([2, 1, 2, 3, 6]), "Eulerian image ranks")?;
            for k in ["versalEqualsFirstEulerian", "sumIsIdentity", "orthogonal", "idempotent", "dynkinImageEqualsEulerianImage"] {
                want(d[k] == json!(true), k)?;
            }
            Ok(())
        }
        5 => {
            for t in all(d, "tables") {
                for r in all(t, "rows") {
                    want(r["matchesTable"] == json!(true) && r["reassemblesExactly"] == json!(true), "a table row")?;
                }
            }
            Ok(())
        }
        6 => {
            let lie: Vec<&Value> = all(d, "lieInternal").collect();
            want(lie.iter().all(|r| r["cobracketInLieTensorLie"] == json!(true)), "cobracket stays in Lie ⊗ Lie")?;
            want(d["relation"]["holds"] == json!(true), "bracket/cobracket relation")
        }
        7 => {
            want(all(d, "identities").all(|i| i["holds"] == json!(true)), "series identity")?;
            want(d["negativeControl"]["firstMismatch"] == json!({"expected": "1", "got": "5/6", "order": 3}), "negative control")
        }
        8 => {
            let tot = [json!([1]), json!([2, 2]), json!([5, 8, 3]), json!([14, 28, 18, 4]), json!([42, 96, 81, 32, 5])];
            let degrees: Vec<&Value> = all(d, "degrees").collect();
            want(degrees.len() == tot.len(), "number of degrees")?;
            for (i, (g, t)) in degrees.iter().zip(tot).enumerate() {
                let h: Vec<u64> = if i == 0 { vec![1] } else { vec![0; i + 1] };
                want(g["report"]["totDims"] == t, &format!("Tot dims in degree {}", i + 1))?;
                want(g["report"]["homologyDims"] == json!(h), &format!("homology in degree {}", i + 1))?;
            }
            Ok(())
        }
        9 => {
            let expect = [("as", "iso"), ("mag", "iso"), ("dup-bi", "iso"), ("dup", "epi-with-splitting")];
            for (name, verdict) in expect {
                let m = all(d, "models").find(|m| m["report"]["model"] == json!(name)).ok_or(format!("model {name}"))?;
                want(m["report"]["verdict"] == json!(verdict), &format!("{name} verdict"))?;
            }
            Ok(())
        }
        _ => unreachable!(),
    }
}

fn suite_bytes() -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_opbialg"))
        .args(["suite", "--criteria", "1,2,3,4,5,6,7,8,9"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(1), "the suite reports the known failure through its exit code");
    out.stdout
}

fn main() {
    let mut outcomes = Vec::new();
    for id in 1..=9 {
        let t = Instant::now();
        let r = criterion(id).expect("criterion runs");
        let confirmed = confirm(id, &r.details);
        let pass = r.pass && confirmed.is_ok();
        let why = confirmed.err().map(|w| format!(" ({w})")).unwrap_or_default();
        println!("criterion {id:>2} {:<28} {} {:>8.2?}{why}", r.name, if pass { "PASS" } else { "FAIL" }, t.elapsed());
        outcomes.push((id, pass));
    }
    let t = Instant::now();
    let (a, b) = (suite_bytes(), suite_bytes());
    let same = !a.is_empty() && a == b;
    println!("criterion 10 {:<28} {} {:>8.2?}", "determinism", if same { "PASS" } else { "FAIL" }, t.elapsed());
    outcomes.push((10, same));

    let failed: Vec<u32> = outcomes.iter().filter(|(_, p)| !p).map(|(i, _)| *i).collect();
    println!("failed: {failed:?} (known: {KNOWN_FAILURES:?})");
    if failed != KNOWN_FAILURES {
        eprintln!("the set of failing criteria changed");
        std::process::exit(1);
    }
}
