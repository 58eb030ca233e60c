//! On-disk cache of complete `W^P` enumerations.
//!
//! File layout: one line of JSON (the header), then the canonical matrices of
//! all elements in enumeration order, `rank * rank` signed bytes each
//! (column by column). The file name encodes family, rank, excluded nodes and
//! the format version, so stale files are simply never opened.

use std::fs;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{enumerate_wp, is_minimal_rep, EnumOptions, WpEnumeration};
use crate::error::{Error, Result};
use crate::rootsys::{LieFamily, ParabolicSubset, RootSystem, MAX_RANK};
use crate::weyl::WeylElement;

pub const CACHE_VERSION: u32 = 1;
const MAGIC: &str = "schubert-ed/wp";

#[derive(Debug, Serialize, Deserialize, PartialEq)]
struct Header {
    format: String,
    version: u32,
    family: LieFamily,
    rank: usize,
    excluded: Vec<usize>,
    strata_counts: Vec<usize>,
    total: usize,
    dimension: usize,
}

pub fn cache_file_name(rs: &RootSystem, p: &ParabolicSubset) -> String {
    let excluded: Vec<String> = p.excluded().iter().map(|n| n.to_string()).collect();
    format!("wp-{}{}-x{}-v{}.bin", rs.family(), rs.rank(), excluded.join("_"), CACHE_VERSION)
}

pub fn cache_path(dir: &Path, rs: &RootSystem, p: &ParabolicSubset) -> PathBuf {
    dir.join(cache_file_name(rs, p))
}

/// Writes a complete enumeration; truncated ones are refused.
pub fn save(dir: &Path, e: &WpEnumeration) -> Result<PathBuf> {
    if e.is_truncated() {
        return Err(Error::Cache("refusing to cache a truncated enumeration".into()));
    }
    let rs = e.root_system();
    let header = Header {
        format: MAGIC.into(),
        version: CACHE_VERSION,
        family: rs.family(),
        rank: rs.rank(),
        excluded: e.parabolic().excluded(),
        strata_counts: e.strata_counts(),
        total: e.total_count(),
        dimension: e.dimension(),
    };
    fs::create_dir_all(dir).map_err(io_err)?;
    let path = cache_path(dir, rs, e.parabolic());
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let mut out = std::io::BufWriter::new(fs::File::create(&tmp).map_err(io_err)?);
    serde_json::to_writer(&mut out, &header).map_err(|err| Error::Cache(err.to_string()))?;
    out.write_all(b"\n").map_err(io_err)?;
    let r = rs.rank();
    let mut buf = Vec::with_capacity(r * r);
    for w in e.elements() {
        buf.clear();
        for col in w.raw_images().iter().take(r) {
            buf.extend(col[..r].iter().map(|&c| c as u8));
        }
        out.write_all(&buf).map_err(io_err)?;
    }
    out.flush().map_err(io_err)?;
    drop(out);
    fs::rename(&tmp, &path).map_err(io_err)?;
    Ok(path)
}

/// Loads and integrity-checks a cached enumeration; `Ok(None)` if absent.
pub fn load(dir: &Path, rs: &RootSystem, p: &ParabolicSubset) -> Result<Option<WpEnumeration>> {
    let path = cache_path(dir, rs, p);
    let file = match fs::File::open(&path) {
        Ok(f) => f,
        Err(err) if err.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(err) => return Err(io_err(err)),
    };
    let mut reader = BufReader::new(file);
    let mut line = String::new();
    reader.read_line(&mut line).map_err(io_err)?;
    let header: Header = serde_json::from_str(line.trim_end()).map_err(|err| Error::Cache(err.to_string()))?;
    if header.format != MAGIC
        || header.version != CACHE_VERSION
        || header.family != rs.family()
        || header.rank != rs.rank()
        || header.excluded != p.excluded()
    {
        return Err(Error::Cache(format!("{}: header does not match the requested context", path.display())));
    }
    if header.strata_counts.iter().sum::<usize>() != header.total {
        return Err(Error::Cache("strata counts do not sum to the total".into()));
    }
    let expected = rs.weyl_group_order() / rs.parabolic_order(&p.retained());
    if header.total as u64 * rs.parabolic_order(&p.retained()) != rs.weyl_group_order() {
        return Err(Error::Cache(format!("|W^P| = {} but |W|/|W_P| = {expected}", header.total)));
    }
    let r = rs.rank();
    let mut bytes = Vec::new();
    reader.read_to_end(&mut bytes).map_err(io_err)?;
    if bytes.len() != header.total * r * r {
        return Err(Error::Cache("payload size mismatch".into()));
    }
    let mut strata = Vec::with_capacity(header.strata_counts.len());
    let mut chunks = bytes.chunks_exact(r * r);
    for (len, &count) in header.strata_counts.iter().enumerate() {
        let mut stratum = Vec::with_capacity(count);
        for _ in 0..count {
            let chunk = chunks.next().expect("size checked");
            let mut images = [[0i8; MAX_RANK]; MAX_RANK];
            for j in 0..r {
                for k in 0..r {
                    images[j][k] = chunk[j * r + k] as i8;
                }
            }
            let w = WeylElement::from_raw(rs.family(), r, len, images);
            if !is_minimal_rep(&w, p) {
                return Err(Error::Cache("stored element is not a minimal representative".into()));
            }
            stratum.push(w);
        }
        if stratum.windows(2).any(|pair| pair[0] >= pair[1]) {
            return Err(Error::Cache("stratum not strictly sorted".into()));
        }
        strata.push(stratum);
    }
    let e = WpEnumeration::from_strata(rs, p, strata, false)?;
    if e.dimension() != header.dimension || e.num_strata() != header.dimension + 1 {
        return Err(Error::Cache("dimension mismatch".into()));
    }
    Ok(Some(e))
}

/// Uses the cache when `dir` is given: a valid file is loaded, otherwise the
/// enumeration is computed and (if complete) written back. A corrupt cache
/// file is ignored and overwritten.
pub fn load_or_enumerate(
    dir: Option<&Path>,
    rs: &RootSystem,
    p: &ParabolicSubset,
    opts: EnumOptions,
) -> Result<WpEnumeration> {
    let Some(dir) = dir else {
        return enumerate_wp(rs, p, opts);
    };
    let unlimited = opts.max_length.is_none() && opts.max_elements.is_none();
    if unlimited {
        if let Ok(Some(e)) = load(dir, rs, p) {
            return Ok(e);
        }
    }
    let e = enumerate_wp(rs, p, opts)?;
    if !e.is_truncated() {
        // a read-only cache directory should not fail the computation
        let _ = save(dir, &e);
    }
    Ok(e)
}

fn io_err(err: std::io::Error) -> Error {
    Error::Cache(err.to_string())
}
