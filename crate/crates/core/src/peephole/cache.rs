//! On-disk cache for cost tables and the process-wide shared tables.
//!
//! File layout, little endian: magic `CLIFFTBL`, `u16` format version, `u8`
//! arity, `u64` entry count, then per entry a `u64` symplectic key, a `u8`
//! cost and a `u8` generator index of the last gate of a minimal circuit.
//! Witness circuits are recovered by following generator indices back to the
//! identity.

use std::fs;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::peephole::cost_table::CostTable;

const MAGIC: &[u8; 8] = b"CLIFFTBL";
const VERSION: u16 = 1;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "CLIFFOPT_TABLE_CACHE";

pub fn cache_file(dir: &Path, arity: usize) -> PathBuf {
    dir.join(format!("cost_table_{arity}.bin"))
}

pub fn save_table(table: &CostTable, path: &Path) -> Result<()> {
    let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
    let mut w = BufWriter::new(fs::File::create(path).map_err(io)?);
    w.write_all(MAGIC).map_err(io)?;
    w.write_all(&VERSION.to_le_bytes()).map_err(io)?;
    w.write_all(&[table.arity() as u8]).map_err(io)?;
    w.write_all(&(table.len() as u64).to_le_bytes()).map_err(io)?;
    let mut raw: Vec<_> = table.raw_entries().collect();
    raw.sort_unstable_by_key(|e| e.0);
    for (key, cost, pred) in raw {
        w.write_all(&key.to_le_bytes()).map_err(io)?;
        w.write_all(&[cost, pred]).map_err(io)?;
    }
    w.flush().map_err(io)
}

pub fn load_table(path: &Path, arity: usize) -> Result<CostTable> {
    let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
    let mut r = BufReader::new(fs::File::open(path).map_err(io)?);
    let mut header = [0u8; 8 + 2 + 1 + 8];
    r.read_exact(&mut header).map_err(io)?;
    if &header[..8] != MAGIC {
        return Err(Error::Cache("bad magic".into()));
    }
    let version = u16::from_le_bytes([header[8], header[9]]);
    if version != VERSION {
        return Err(Error::Cache(format!("version {version}, expected {VERSION}")));
    }
    if header[10] as usize != arity {
        return Err(Error::Cache(format!("arity {}, expected {arity}", header[10])));
    }
    let count = u64::from_le_bytes(header[11..19].try_into().expect("8 bytes")) as usize;
    let mut body = Vec::new();
    r.read_to_end(&mut body).map_err(io)?;
    if body.len() != count * 10 {
        return Err(Error::Cache(format!("expected {} bytes of entries, found {}", count * 10, body.len())));
    }
    let raw = body
        .chunks_exact(10)
        .map(|e| (u64::from_le_bytes(e[..8].try_into().expect("8 bytes")), e[8], e[9]))
        .collect();
    CostTable::from_raw(arity, raw)
}

/// Loads the table from `dir` if a valid cache exists there, otherwise builds
/// it and tries to write the cache.
pub fn load_or_build(arity: usize, dir: Option<&Path>) -> Result<CostTable> {
    let Some(dir) = dir else { return CostTable::build(arity) };
    let path = cache_file(dir, arity);
    if let Ok(t) = load_table(&path, arity) {
        return Ok(t);
    }
    let t = CostTable::build(arity)?;
    // A read-only or missing directory only costs a rebuild next time.
    if fs::create_dir_all(dir).is_ok() {
        let _ = save_table(&t, &path);
    }
    Ok(t)
}

static CACHE_DIR: OnceLock<Option<PathBuf>> = OnceLock::new();
static TABLES: [OnceLock<CostTable>; 2] = [OnceLock::new(), OnceLock::new()];

/// Sets the cache directory used by [`shared_table`]. Takes effect only if
/// called before the first table is requested; returns whether it did.
pub fn set_cache_dir(dir: Option<PathBuf>) -> bool {
    CACHE_DIR.set(dir).is_ok()
}

fn cache_dir() -> Option<&'static Path> {
    CACHE_DIR.get_or_init(|| std::env::var_os(CACHE_ENV).map(PathBuf::from)).as_deref()
}

/// The cost table for two or three qubits, built (or loaded) once per process.
pub fn shared_table(arity: usize) -> Result<&'static CostTable> {
    if !(2..=3).contains(&arity) {
        return Err(Error::InvalidSubset(format!("shared tables exist for 2 and 3 qubits, not {arity}")));
    }
    let slot = &TABLES[arity - 2];
    if let Some(t) = slot.get() {
        return Ok(t);
    }
    let t = load_or_build(arity, cache_dir())?;
    Ok(slot.get_or_init(|| t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn temp_dir(tag: &str) -> PathBuf {
        let d = std::env::temp_dir().join(format!("cliffopt-cache-{tag}-{}", std::process::id()));
        fs::create_dir_all(&d).unwrap();
        d
    }

    #[test]
    fn round_trip() {
        let dir = temp_dir("rt");
        let t = CostTable::build(2).unwrap();
        let path = cache_file(&dir, 2);
        save_table(&t, &path).unwrap();
        let back = load_table(&path, 2).unwrap();
        assert_eq!(back.len(), t.len());
        assert_eq!(back.reps(), t.reps());
        for &r in t.reps() {
            assert_eq!(back.cost(r), t.cost(r));
            assert_eq!(back.witness(r).gates(), t.witness(r).gates());
        }
        assert!(load_table(&path, 3).is_err());
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn rejects_stale_or_damaged_files() {
        let dir = temp_dir("bad");
        let path = cache_file(&dir, 2);
        save_table(&CostTable::build(2).unwrap(), &path).unwrap();
        let good = fs::read(&path).unwrap();

        let mut v = good.clone();
        v[8] = 99;
        fs::write(&path, &v).unwrap();
        assert!(matches!(load_table(&path, 2), Err(Error::Cache(m)) if m.contains("version")));

        fs::write(&path, &good[..good.len() - 3]).unwrap();
        assert!(load_table(&path, 2).is_err());

        let mut v = good.clone();
        v[0] = b'X';
        fs::write(&path, &v).unwrap();
        assert!(load_table(&path, 2).is_err());

        // A damaged file is replaced on the next load.
        let t = load_or_build(2, Some(&dir)).unwrap();
        assert_eq!(t.len(), 720);
        assert!(load_table(&path, 2).is_ok());
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn shared_rejects_bad_arity() {
        assert!(shared_table(1).is_err());
        assert!(shared_table(4).is_err());
    }
}
