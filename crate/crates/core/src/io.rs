//! Output formats: diagnostics CSV, raw binary field snapshots, PGM previews.
//!
//! Raw snapshot layout (all little-endian):
//!
//! ```text
//! offset  size  content
//!      0     4  b"SWE1"
//!      4     4  nx  (u32)
//!      8     4  ny  (u32)
//!     12     4  zero padding
//!     16     8  lx  (f64)
//!     24     8  ly  (f64)
//!     32  8*nx*ny  values (f64), row-major: index = j * nx + i
//! ```

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use crate::diagnostics::DiagnosticsRecord;
use crate::error::IoError;
use crate::grid::{Grid, ScalarField};
use crate::integrate::RunSink;
use crate::lorenz86::Lorenz86Record;
use crate::state::SweState;

pub const RAW_MAGIC: &[u8; 4] = b"SWE1";
pub const RAW_HEADER_LEN: usize = 32;

/// Seventeen significant digits: round-trips every binary64 value.
pub fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn diagnostics_header(orders: &[u32]) -> String {
    let mut cols = vec!["t".to_string(), "energy".into(), "potential_enstrophy".into()];
    cols.extend(orders.iter().map(|n| format!("z_{n}")));
    cols.extend(["mass".into(), "dH_chain".into(), "dZ_chain".into()]);
    cols.join(",")
}

pub fn diagnostics_row(r: &DiagnosticsRecord) -> String {
    let mut vals = vec![r.t, r.energy, r.potential_enstrophy];
    vals.extend(&r.z_n);
    vals.extend([r.mass, r.dh_chain, r.dz_chain]);
    vals.into_iter().map(format_f64).collect::<Vec<_>>().join(",")
}

fn create(path: &Path) -> Result<BufWriter<File>, IoError> {
    File::create(path).map(BufWriter::new).map_err(|e| IoError::new(path, e))
}

/// Streams diagnostics rows to a CSV file, header first.
pub struct DiagnosticsWriter {
    path: PathBuf,
    out: BufWriter<File>,
}

impl DiagnosticsWriter {
    pub fn create(path: impl Into<PathBuf>, orders: &[u32]) -> Result<Self, IoError> {
        let path = path.into();
        let mut out = create(&path)?;
        writeln!(out, "{}", diagnostics_header(orders)).map_err(|e| IoError::new(&path, e))?;
        Ok(Self { path, out })
    }

    pub fn write(&mut self, r: &DiagnosticsRecord) -> io::Result<()> {
        writeln!(self.out, "{}", diagnostics_row(r))
    }

    pub fn finish(mut self) -> Result<(), IoError> {
        self.out.flush().map_err(|e| IoError::new(&self.path, e))
    }
}

pub fn write_diagnostics(records: &[DiagnosticsRecord], orders: &[u32], path: impl Into<PathBuf>) -> Result<(), IoError> {
    let mut w = DiagnosticsWriter::create(path, orders)?;
    for r in records {
        w.write(r).map_err(|e| IoError::new(&w.path, e))?;
    }
    w.finish()
}

pub fn encode_raw(field: &ScalarField) -> Vec<u8> {
    let g = field.grid();
    let mut buf = Vec::with_capacity(RAW_HEADER_LEN + 8 * g.len());
    buf.extend_from_slice(RAW_MAGIC);
    buf.extend_from_slice(&(g.nx() as u32).to_le_bytes());
    buf.extend_from_slice(&(g.ny() as u32).to_le_bytes());
    buf.extend_from_slice(&[0; 4]);
    buf.extend_from_slice(&g.lx().to_le_bytes());
    buf.extend_from_slice(&g.ly().to_le_bytes());
    for v in field.values() {
        buf.extend_from_slice(&v.to_le_bytes());
    }
    buf
}

fn invalid(msg: impl Into<String>) -> io::Error {
    io::Error::new(io::ErrorKind::InvalidData, msg.into())
}

pub fn decode_raw(bytes: &[u8]) -> io::Result<ScalarField> {
    if bytes.len() < RAW_HEADER_LEN || &bytes[..4] != RAW_MAGIC {
        return Err(invalid("not a raw field snapshot"));
    }
    let u32_at = |o: usize| u32::from_le_bytes(bytes[o..o + 4].try_into().expect("4-byte slice")) as usize;
    let f64_at = |o: usize| f64::from_le_bytes(bytes[o..o + 8].try_into().expect("8-byte slice"));
    let grid = Grid::new(u32_at(4), u32_at(8), f64_at(16), f64_at(24)).map_err(|e| invalid(e.to_string()))?;
    let body = &bytes[RAW_HEADER_LEN..];
    if body.len() != 8 * grid.len() {
        return Err(invalid(format!("expected {} data bytes, found {}", 8 * grid.len(), body.len())));
    }
    let values = body
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().expect("8-byte chunk")))
        .collect();
    ScalarField::from_vec(grid, values).map_err(|e| invalid(e.to_string()))
}

pub fn write_raw(field: &ScalarField, path: impl AsRef<Path>) -> Result<(), IoError> {
    let path = path.as_ref();
    std::fs::write(path, encode_raw(field)).map_err(|e| IoError::new(path, e))
}

pub fn read_raw(path: impl AsRef<Path>) -> Result<ScalarField, IoError> {
    let path = path.as_ref();
    let mut bytes = Vec::new();
    File::open(path)
        .and_then(|mut f| f.read_to_end(&mut bytes))
        .map_err(|e| IoError::new(path, e))?;
    decode_raw(&bytes).map_err(|e| IoError::new(path, e))
}

/// 8-bit binary PGM, min–max normalised; a constant field maps to 128.
/// Row `j = ny - 1` is written first so that `y` increases upward.
pub fn encode_pgm(field: &ScalarField) -> Vec<u8> {
    let g = field.grid();
    let (lo, hi) = field
        .values()
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let mut buf = format!("P5\n{} {}\n255\n", g.nx(), g.ny()).into_bytes();
    for j in (0..g.ny()).rev() {
        for i in 0..g.nx() {
            let pixel = if hi > lo {
                (255.0 * (field.get(i, j) - lo) / (hi - lo)).round() as u8
            } else {
                128
            };
            buf.push(pixel);
        }
    }
    buf
}

pub fn write_pgm(field: &ScalarField, path: impl AsRef<Path>) -> Result<(), IoError> {
    let path = path.as_ref();
    std::fs::write(path, encode_pgm(field)).map_err(|e| IoError::new(path, e))
}

/// File stem for a snapshot of `name` at `step`.
pub fn snapshot_stem(step: usize, name: &str) -> String {
    format!("snap_{step:06}_{name}")
}

/// Writes the diagnostics CSV and per-field snapshots of `zeta`, `mu`, `h`.
pub struct FileSink {
    csv: DiagnosticsWriter,
    dir: PathBuf,
    pgm: bool,
}

impl FileSink {
    pub const DIAGNOSTICS_FILE: &'static str = "diagnostics.csv";

    pub fn create(dir: impl Into<PathBuf>, orders: &[u32], pgm: bool) -> Result<Self, IoError> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir).map_err(|e| IoError::new(&dir, e))?;
        let csv = DiagnosticsWriter::create(dir.join(Self::DIAGNOSTICS_FILE), orders)?;
        Ok(Self { csv, dir, pgm })
    }

    pub fn finish(self) -> Result<(), IoError> {
        self.csv.finish()
    }
}

fn to_io(e: IoError) -> io::Error {
    io::Error::new(e.source.kind(), e.to_string())
}

impl RunSink for FileSink {
    fn record(&mut self, record: &DiagnosticsRecord) -> io::Result<()> {
        self.csv.write(record)
    }

    fn snapshot(&mut self, step: usize, _t: f64, state: &SweState) -> io::Result<()> {
        for (name, field) in [("zeta", &state.zeta), ("mu", &state.mu), ("h", &state.h)] {
            let stem = snapshot_stem(step, name);
            write_raw(field, self.dir.join(format!("{stem}.raw"))).map_err(to_io)?;
            if self.pgm {
                write_pgm(field, self.dir.join(format!("{stem}.pgm"))).map_err(to_io)?;
            }
        }
        Ok(())
    }
}

pub const L86_HEADER: &str = "t,x1,x2,x3,x4,x5,H,Z";

pub fn write_l86_trajectory(records: &[Lorenz86Record], path: impl AsRef<Path>) -> Result<(), IoError> {
    let path = path.as_ref();
    let mut out = create(path)?;
    let mut body = || -> io::Result<()> {
        writeln!(out, "{L86_HEADER}")?;
        for r in records {
            let vals: Vec<String> = std::iter::once(r.t)
                .chain(r.x)
                .chain([r.energy, r.enstrophy])
                .map(format_f64)
                .collect();
            writeln!(out, "{}", vals.join(","))?;
        }
        out.flush()
    };
    body().map_err(|e| IoError::new(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::random_field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn record() -> DiagnosticsRecord {
        DiagnosticsRecord {
            t: 0.1,
            energy: 1.0 / 3.0,
            potential_enstrophy: std::f64::consts::PI,
            z_n: vec![1e-300, -2.5e17],
            mass: 0.1 + 0.2,
            dh_chain: -0.0,
            dz_chain: 5e-324,
        }
    }

    #[test]
    fn header_lists_orders() {
        assert_eq!(
            diagnostics_header(&[1, 3]),
            "t,energy,potential_enstrophy,z_1,z_3,mass,dH_chain,dZ_chain"
        );
        assert_eq!(diagnostics_header(&[]), "t,energy,potential_enstrophy,mass,dH_chain,dZ_chain");
    }

    #[test]
    fn csv_values_roundtrip_exactly() {
        let r = record();
        let parsed: Vec<f64> = diagnostics_row(&r).split(',').map(|s| s.parse().unwrap()).collect();
        let mut expected = vec![r.t, r.energy, r.potential_enstrophy];
        expected.extend(&r.z_n);
        expected.extend([r.mass, r.dh_chain, r.dz_chain]);
        assert_eq!(parsed.len(), expected.len());
        for (a, b) in parsed.iter().zip(&expected) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn csv_file_uses_lf() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("d.csv");
        write_diagnostics(&[record(), record()], &[1, 2], &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(!text.contains('\r'));
        assert_eq!(text.lines().count(), 3);
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn raw_roundtrip_is_bitwise() {
        let mut rng = ChaCha8Rng::seed_from_u64(70);
        let field = random_field(Grid::new(7, 5, 0.3, 2.5).unwrap(), &mut rng);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.raw");
        write_raw(&field, &path).unwrap();
        let back = read_raw(&path).unwrap();
        assert_eq!(back.grid(), field.grid());
        assert!(back.values().iter().zip(field.values()).all(|(a, b)| a.to_bits() == b.to_bits()));
    }

    #[test]
    fn raw_header_layout() {
        let field = ScalarField::constant(Grid::new(4, 6, 1.5, 2.0).unwrap(), 2.0);
        let bytes = encode_raw(&field);
        assert_eq!(bytes.len(), 32 + 8 * 24);
        assert_eq!(&bytes[..4], b"SWE1");
        assert_eq!(bytes[4..8], 4u32.to_le_bytes());
        assert_eq!(bytes[8..12], 6u32.to_le_bytes());
        assert_eq!(bytes[12..16], [0; 4]);
        assert_eq!(bytes[16..24], 1.5f64.to_le_bytes());
        assert_eq!(bytes[24..32], 2.0f64.to_le_bytes());
        assert_eq!(bytes[32..40], 2.0f64.to_le_bytes());
    }

    #[test]
    fn raw_rejects_corruption() {
        let field = ScalarField::zeros(Grid::unit(4).unwrap());
        let mut bytes = encode_raw(&field);
        assert!(decode_raw(&bytes[..bytes.len() - 1]).is_err());
        bytes[0] = b'X';
        assert!(decode_raw(&bytes).is_err());
        assert!(read_raw("/nonexistent/field.raw").is_err());
    }

    #[test]
    fn pgm_constant_field_is_mid_grey() {
        let bytes = encode_pgm(&ScalarField::constant(Grid::new(5, 4, 1.0, 1.0).unwrap(), 3.7));
        let header = b"P5\n5 4\n255\n";
        assert_eq!(&bytes[..header.len()], header);
        assert!(bytes[header.len()..].iter().all(|&p| p == 128));
        assert_eq!(bytes.len(), header.len() + 20);
    }

    #[test]
    fn pgm_spans_full_range() {
        let g = Grid::new(4, 4, 1.0, 1.0).unwrap();
        let field = ScalarField::from_fn(g, |x, y| x + 10.0 * y);
        let pixels = &encode_pgm(&field)[b"P5\n4 4\n255\n".len()..];
        // Top-left pixel is the largest y, smallest x.
        assert_eq!(pixels[12], 0);
        assert_eq!(pixels[3], 255);
        assert_eq!(pixels[0], (255.0 * 7.5 / 8.25f64).round() as u8);
    }
}
