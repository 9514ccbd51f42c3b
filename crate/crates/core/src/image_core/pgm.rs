//! Binary PGM (P5, maxval 255) reading and writing.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use super::Image;
use crate::error::{PgmError, Result};

pub fn load_pgm(path: impl AsRef<Path>) -> Result<Image> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|source| {
        if source.kind() == io::ErrorKind::NotFound {
            PgmError::NotFound(path.to_path_buf())
        } else {
            PgmError::Io {
                path: path.to_path_buf(),
                source,
            }
        }
    })?;
    read_pgm(&bytes)
}

pub fn save_pgm(image: &Image, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let io_err = |source| PgmError::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut file = io::BufWriter::new(fs::File::create(path).map_err(io_err)?);
    write_pgm(image, &mut file).map_err(io_err)?;
    file.flush().map_err(io_err)?;
    Ok(())
}

pub fn write_pgm<W: Write>(image: &Image, out: &mut W) -> io::Result<()> {
    write!(out, "P5\n{} {}\n255\n", image.width(), image.height())?;
    out.write_all(image.samples())
}

/// Decodes a P5 byte stream.
pub fn read_pgm(bytes: &[u8]) -> Result<Image> {
    let mut cur = Cursor { bytes, pos: 0 };
    let magic = bytes
        .get(..2)
        .ok_or_else(|| malformed("missing magic number"))?;
    match magic {
        b"P5" => {}
        [b'P', d] if d.is_ascii_digit() => {
            return Err(
                PgmError::UnsupportedVariant(String::from_utf8_lossy(magic).into_owned()).into(),
            )
        }
        _ => return Err(malformed("missing P5 magic number").into()),
    }
    cur.pos = 2;
    let width = cur.header_number("width")?;
    let height = cur.header_number("height")?;
    let maxval = cur.header_number("maxval")?;
    if width == 0 || height == 0 {
        return Err(malformed(&format!("zero dimension {width}x{height}")).into());
    }
    if maxval != 255 {
        return Err(PgmError::UnsupportedMaxval(maxval).into());
    }
    // exactly one whitespace byte separates the header from the raster
    match bytes.get(cur.pos) {
        Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
        _ => return Err(malformed("missing whitespace after maxval").into()),
    }
    let expected = width as usize * height as usize;
    let data = &bytes[cur.pos..];
    if data.len() < expected {
        return Err(PgmError::Truncated {
            expected,
            found: data.len(),
        }
        .into());
    }
    Image::new(width as usize, height as usize, data[..expected].to_vec())
}

fn malformed(msg: &str) -> PgmError {
    PgmError::MalformedHeader(msg.to_string())
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_space_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn header_number(&mut self, field: &str) -> Result<u32, PgmError> {
        let start = self.pos;
        self.skip_space_and_comments();
        if self.pos == start {
            return Err(malformed(&format!("expected whitespace before {field}")));
        }
        let digits_start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(malformed(&format!("missing {field}")));
        }
        std::str::from_utf8(&self.bytes[digits_start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| malformed(&format!("{field} out of range")))
    }
}
