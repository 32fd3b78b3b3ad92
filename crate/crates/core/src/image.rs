//! Square power-of-two grayscale images: pattern-string construction,
//! PGM (P2/P5) reading and writing, and the pixel transformations used by
//! the experiment runners.
//!
//! Pixels are stored row-major with index 0 at the top-left, so pixel
//! `i = row * side + col`.

use crate::error::{Error, Result};

/// A `side x side` grayscale image with `side` a power of two (at least 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    side: usize,
    pixels: Vec<u8>,
}

impl Image {
    pub fn new(side: usize, pixels: Vec<u8>) -> Result<Self> {
        if side < 2 || !side.is_power_of_two() {
            return Err(Error::InvalidSide(side));
        }
        if pixels.len() != side * side {
            return Err(Error::PixelCount {
                expected: side * side,
                got: pixels.len(),
            });
        }
        Ok(Self { side, pixels })
    }

    pub fn constant(side: usize, value: u8) -> Result<Self> {
        Self::new(side, vec![value; side * side])
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn pixel_count(&self) -> usize {
        self.pixels.len()
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    /// Number of qubits needed to index pixel positions (2n for side 2^n).
    pub fn position_qubits(&self) -> usize {
        2 * self.side.trailing_zeros() as usize
    }

    /// Copy of the image with the pixel at `index` replaced by `value`.
    pub fn with_pixel(&self, index: usize, value: u8) -> Result<Self> {
        if index >= self.pixels.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.pixels.len(),
            });
        }
        let mut pixels = self.pixels.clone();
        pixels[index] = value;
        Ok(Self {
            side: self.side,
            pixels,
        })
    }

    /// Cyclic shift in row-major order: output pixel `j` is input pixel
    /// `(j - shift) mod side^2`.
    pub fn translate_cyclic(&self, shift: usize) -> Result<Self> {
        let len = self.pixels.len();
        if shift >= len {
            return Err(Error::ShiftOutOfRange { shift, len });
        }
        let pixels = (0..len)
            .map(|j| self.pixels[(j + len - shift) % len])
            .collect();
        Ok(Self {
            side: self.side,
            pixels,
        })
    }

    pub fn is_binary(&self) -> bool {
        self.pixels.iter().all(|&v| v == 0 || v == 255)
    }

    pub fn require_binary(&self) -> Result<()> {
        match self.pixels.iter().position(|&v| v != 0 && v != 255) {
            None => Ok(()),
            Some(index) => Err(Error::NotBinary {
                index,
                value: self.pixels[index],
            }),
        }
    }

    /// Copy of a binary image with 0 mapped to `low` and 255 mapped to `high`.
    pub fn remap_binary(&self, low: u8, high: u8) -> Result<Self> {
        self.require_binary()?;
        let pixels = self
            .pixels
            .iter()
            .map(|&v| if v == 0 { low } else { high })
            .collect();
        Ok(Self {
            side: self.side,
            pixels,
        })
    }

    /// Image from a '0'/'1' string, one character per pixel in row-major
    /// order; '1' maps to gray 255.
    pub fn from_bit_pattern(bits: &str) -> Result<Self> {
        let mut pixels = Vec::with_capacity(bits.len());
        for ch in bits.chars() {
            match ch {
                '0' => pixels.push(0),
                '1' => pixels.push(255),
                other => return Err(Error::Pattern(format!("invalid bit {other:?}"))),
            }
        }
        Self::new(side_for_len(pixels.len())?, pixels)
    }

    /// Image from a comma-separated list of gray values in row-major order.
    pub fn from_gray_list(list: &str) -> Result<Self> {
        let mut pixels = Vec::new();
        for token in list.split(',') {
            let token = token.trim();
            let value: u16 = token
                .parse()
                .map_err(|_| Error::Pattern(format!("invalid gray value {token:?}")))?;
            if value > 255 {
                return Err(Error::Pattern(format!("gray value {value} out of range")));
            }
            pixels.push(value as u8);
        }
        Self::new(side_for_len(pixels.len())?, pixels)
    }
}

/// Pattern specification: a bit string or a gray-value list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternSpec {
    Bits(String),
    Grays(String),
}

pub fn parse_pattern(spec: &PatternSpec) -> Result<Image> {
    match spec {
        PatternSpec::Bits(bits) => Image::from_bit_pattern(bits),
        PatternSpec::Grays(list) => Image::from_gray_list(list),
    }
}

fn side_for_len(len: usize) -> Result<usize> {
    let side = (len as f64).sqrt().round() as usize;
    if side * side != len {
        return Err(Error::Pattern(format!(
            "pattern length {len} is not a perfect square"
        )));
    }
    // Image::new re-checks, but report length problems as pattern errors.
    if side < 2 || !side.is_power_of_two() {
        return Err(Error::Pattern(format!(
            "pattern side {side} is not a power of two >= 2"
        )));
    }
    Ok(side)
}

const PGM_MAXVAL: usize = 255;

/// Parse a PGM image (binary P5 or ASCII P2), maxval 255, square with a
/// power-of-two side.
pub fn read_pgm(bytes: &[u8]) -> Result<Image> {
    let mut cur = PgmCursor { bytes, pos: 0 };
    let magic = cur.token()?;
    let binary = match magic {
        b"P5" => true,
        b"P2" => false,
        other => {
            return Err(Error::Pgm(format!(
                "unsupported magic {:?}",
                String::from_utf8_lossy(other)
            )))
        }
    };
    let width = cur.number()?;
    let height = cur.number()?;
    let maxval = cur.number()?;
    if width != height {
        return Err(Error::Pgm(format!("image is not square: {width}x{height}")));
    }
    if maxval != PGM_MAXVAL {
        return Err(Error::Pgm(format!("maxval {maxval} is not {PGM_MAXVAL}")));
    }
    let count = width * height;
    let pixels = if binary {
        // Exactly one whitespace byte separates the header from the payload.
        cur.expect_single_whitespace()?;
        let rest = &cur.bytes[cur.pos..];
        if rest.len() < count {
            return Err(Error::Pgm(format!(
                "truncated payload: expected {count} bytes, got {}",
                rest.len()
            )));
        }
        rest[..count].to_vec()
    } else {
        let mut pixels = Vec::with_capacity(count);
        for _ in 0..count {
            let value = cur.number()?;
            if value > PGM_MAXVAL {
                return Err(Error::Pgm(format!("gray value {value} out of range")));
            }
            pixels.push(value as u8);
        }
        pixels
    };
    Image::new(width, pixels)
}

/// Serialize as binary P5 with maxval 255.
pub fn write_pgm(image: &Image) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n{}\n", image.side(), image.side(), PGM_MAXVAL).into_bytes();
    out.extend_from_slice(image.pixels());
    out
}

struct PgmCursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> PgmCursor<'a> {
    fn skip_whitespace_and_comments(&mut self) {
        while self.pos < self.bytes.len() {
            match self.bytes[self.pos] {
                b' ' | b'\t' | b'\r' | b'\n' => self.pos += 1,
                b'#' => {
                    while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                _ => break,
            }
        }
    }

    fn token(&mut self) -> Result<&'a [u8]> {
        self.skip_whitespace_and_comments();
        let start = self.pos;
        while self.pos < self.bytes.len() && !self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Pgm("unexpected end of header".into()));
        }
        Ok(&self.bytes[start..self.pos])
    }

    fn number(&mut self) -> Result<usize> {
        let token = self.token()?;
        std::str::from_utf8(token)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| {
                Error::Pgm(format!(
                    "expected a number, got {:?}",
                    String::from_utf8_lossy(token)
                ))
            })
    }

    fn expect_single_whitespace(&mut self) -> Result<()> {
        match self.bytes.get(self.pos) {
            Some(b) if b.is_ascii_whitespace() => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(Error::Pgm("missing whitespace before payload".into())),
        }
    }
}
