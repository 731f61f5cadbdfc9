//! Checksummed JSON cache for classification reports.
//!
//! One report per file, keyed by the invariants `(a, e, f, p)` together with
//! the canonical polynomial `h` presenting the coefficient ring -- so cached
//! results stay valid even if the `h`-selection rule ever changes.  A file
//! is two lines: an FNV-1a checksum of the payload in hex, then the payload
//! as compact JSON.  Any mismatch is reported as corruption rather than
//! silently recomputed.

use std::fs;
use std::path::{Path, PathBuf};

use chainring::ClassificationReport;

pub fn default_dir() -> PathBuf {
    std::env::temp_dir().join("chainring-cache")
}

pub fn key(a: u32, e: u32, f: u32, p: u64, h: &[u64]) -> String {
    let h: Vec<String> = h.iter().map(u64::to_string).collect();
    format!("classify-a{a}-e{e}-f{f}-p{p}-h{}.json", h.join("_"))
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

fn corrupt(path: &Path, what: &str) -> String {
    format!("cache file {} is corrupt: {what}", path.display())
}

/// `Ok(None)` when the entry does not exist; corruption is a hard error.
pub fn load(dir: &Path, key: &str) -> Result<Option<ClassificationReport>, String> {
    let path = dir.join(key);
    let text = match fs::read_to_string(&path) {
        Ok(text) => text,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(format!("reading cache file {}: {e}", path.display())),
    };
    let Some((sum, payload)) = text.split_once('\n') else {
        return Err(corrupt(&path, "missing checksum line"));
    };
    let declared = u64::from_str_radix(sum.trim(), 16)
        .map_err(|_| corrupt(&path, "unreadable checksum line"))?;
    let actual = fnv1a64(payload.as_bytes());
    if declared != actual {
        return Err(corrupt(
            &path,
            &format!("checksum mismatch (stored {declared:016x}, computed {actual:016x})"),
        ));
    }
    let report = serde_json::from_str(payload)
        .map_err(|e| corrupt(&path, &format!("payload does not parse: {e}")))?;
    Ok(Some(report))
}

pub fn store(dir: &Path, key: &str, report: &ClassificationReport) -> Result<(), String> {
    fs::create_dir_all(dir).map_err(|e| format!("creating cache dir {}: {e}", dir.display()))?;
    let payload = serde_json::to_string(report).expect("reports serialize");
    let text = format!("{:016x}\n{payload}", fnv1a64(payload.as_bytes()));
    let path = dir.join(key);
    let tmp = dir.join(format!("{key}.tmp"));
    fs::write(&tmp, text).map_err(|e| format!("writing cache file {}: {e}", tmp.display()))?;
    fs::rename(&tmp, &path)
        .map_err(|e| format!("moving cache file into place at {}: {e}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use chainring::{classify, Budget};

    fn report() -> ClassificationReport {
        classify(6, 2, 1, 2, &Budget::default(), 1).unwrap()
    }

    #[test]
    fn round_trips_a_report_by_value() {
        let dir = tempfile::tempdir().unwrap();
        let report = report();
        let key = key(6, 2, 1, 2, &[0, 1]);
        assert_eq!(load(dir.path(), &key).unwrap(), None, "cold cache misses");
        store(dir.path(), &key, &report).unwrap();
        assert_eq!(load(dir.path(), &key).unwrap(), Some(report));
    }

    #[test]
    fn detects_payload_tampering() {
        let dir = tempfile::tempdir().unwrap();
        let key = key(6, 2, 1, 2, &[0, 1]);
        store(dir.path(), &key, &report()).unwrap();
        let path = dir.path().join(&key);
        let tampered =
            fs::read_to_string(&path).unwrap().replace("\"iso_classes\"", "\"iso_clashes\"");
        fs::write(&path, tampered).unwrap();
        let err = load(dir.path(), &key).unwrap_err();
        assert!(err.contains("checksum mismatch"), "{err}");
    }

    #[test]
    fn detects_a_damaged_checksum_line() {
        let dir = tempfile::tempdir().unwrap();
        let key = key(2, 2, 1, 2, &[0, 1]);
        store(dir.path(), &key, &classify(2, 2, 1, 2, &Budget::default(), 1).unwrap()).unwrap();
        let path = dir.path().join(&key);
        let text = fs::read_to_string(&path).unwrap();
        fs::write(&path, format!("zz{}", &text[2..])).unwrap();
        assert!(load(dir.path(), &key).is_err());
        fs::write(&path, text.lines().nth(1).unwrap()).unwrap();
        let err = load(dir.path(), &key).unwrap_err();
        assert!(err.contains("corrupt"), "{err}");
    }
}
