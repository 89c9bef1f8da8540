//! Binary netpbm codecs: PGM ("P5") and PPM ("P6"), maxval 255 only.
//!
//! Header layout on write is exactly `P5\n<width> <height>\n255\n`
//! followed by raw bytes. `#` comments are tolerated anywhere in the
//! header on read and never emitted.

use std::fs;
use std::path::Path;

use super::{BinaryImage, GrayImage, Image, RgbImage};
use crate::error::{Error, Result};

/// Decodes a P5 or P6 buffer.
pub fn decode_image(bytes: &[u8]) -> Result<Image> {
    let (magic, rest) = split_magic(bytes)?;
    match magic {
        b"P5" => {
            let (w, h, data) = decode_body(rest, 1)?;
            Ok(Image::Gray(GrayImage::new(w, h, data)?))
        }
        b"P6" => {
            let (w, h, data) = decode_body(rest, 3)?;
            Ok(Image::Rgb(RgbImage::new(w, h, data)?))
        }
        other => Err(Error::Format(format!(
            "unsupported magic {:?}; expected P5 or P6",
            String::from_utf8_lossy(other)
        ))),
    }
}

pub fn encode_pgm(img: &GrayImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    out.extend_from_slice(img.data());
    out
}

pub fn encode_ppm(img: &RgbImage) -> Vec<u8> {
    let mut out = format!("P6\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    out.extend_from_slice(img.data());
    out
}

/// Binary masks serialize as PGM with 1 -> 255 and 0 -> 0.
pub fn encode_binary_pgm(img: &BinaryImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    out.extend(img.data().iter().map(|&v| if v == 1 { 255u8 } else { 0 }));
    out
}

/// Loads a P5 file as grayscale or a P6 file as RGB.
pub fn load_image(path: impl AsRef<Path>) -> Result<Image> {
    decode_image(&fs::read(path)?)
}

/// Loads a P5 file; P6 input is a format error.
pub fn load_pgm(path: impl AsRef<Path>) -> Result<GrayImage> {
    match load_image(path)? {
        Image::Gray(g) => Ok(g),
        Image::Rgb(_) => Err(Error::Format("expected P5 grayscale, found P6".into())),
    }
}

/// Loads a P6 file; P5 input is a format error.
pub fn load_ppm(path: impl AsRef<Path>) -> Result<RgbImage> {
    match load_image(path)? {
        Image::Rgb(c) => Ok(c),
        Image::Gray(_) => Err(Error::Format("expected P6 color, found P5".into())),
    }
}

/// Loads a mask written by [`save_binary_pgm`]: pixels must be 0 or 255.
pub fn load_binary_pgm(path: impl AsRef<Path>) -> Result<BinaryImage> {
    let gray = load_pgm(path)?;
    let data = gray
        .data()
        .iter()
        .map(|&v| match v {
            0 => Ok(0u8),
            255 => Ok(1u8),
            other => Err(Error::Format(format!(
                "mask pixel {other} is neither 0 nor 255"
            ))),
        })
        .collect::<Result<Vec<u8>>>()?;
    BinaryImage::new(gray.width(), gray.height(), data)
}

pub fn save_pgm(img: &GrayImage, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, encode_pgm(img))?;
    Ok(())
}

pub fn save_ppm(img: &RgbImage, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, encode_ppm(img))?;
    Ok(())
}

pub fn save_binary_pgm(img: &BinaryImage, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, encode_binary_pgm(img))?;
    Ok(())
}

/// Saves whichever raster variant is held.
pub fn save_image(img: &Image, path: impl AsRef<Path>) -> Result<()> {
    match img {
        Image::Gray(g) => save_pgm(g, path),
        Image::Rgb(c) => save_ppm(c, path),
    }
}

fn split_magic(bytes: &[u8]) -> Result<(&[u8], &[u8])> {
    if bytes.len() < 2 {
        return Err(Error::Format("file too short for a netpbm magic".into()));
    }
    Ok((&bytes[..2], &bytes[2..]))
}

fn decode_body(rest: &[u8], channels: usize) -> Result<(u32, u32, Vec<u8>)> {
    let mut scan = HeaderScanner { bytes: rest, pos: 0 };
    let width: u32 = scan.next_number()?;
    let height: u32 = scan.next_number()?;
    let maxval: u32 = scan.next_number()?;
    if maxval != 255 {
        return Err(Error::Format(format!(
            "unsupported maxval {maxval}; only 255 is accepted"
        )));
    }
    // Exactly one whitespace byte separates the header from the payload.
    scan.expect_single_whitespace()?;

    if width == 0 || height == 0 {
        return Err(Error::Format(format!("degenerate dimensions {width}x{height}")));
    }
    let expected = (width as usize)
        .checked_mul(height as usize)
        .and_then(|n| n.checked_mul(channels))
        .ok_or_else(|| Error::Format("dimension overflow".into()))?;
    let payload = &scan.bytes[scan.pos..];
    if payload.len() < expected {
        return Err(Error::Format(format!(
            "truncated pixel data: expected {expected} bytes, found {}",
            payload.len()
        )));
    }
    Ok((width, height, payload[..expected].to_vec()))
}

struct HeaderScanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl HeaderScanner<'_> {
    fn skip_space_and_comments(&mut self) -> Result<()> {
        loop {
            match self.bytes.get(self.pos) {
                Some(b) if b.is_ascii_whitespace() => self.pos += 1,
                Some(b'#') => {
                    while let Some(&b) = self.bytes.get(self.pos) {
                        self.pos += 1;
                        if b == b'\n' {
                            break;
                        }
                    }
                }
                Some(_) => return Ok(()),
                None => return Err(Error::Format("truncated header".into())),
            }
        }
    }

    fn next_number(&mut self) -> Result<u32> {
        self.skip_space_and_comments()?;
        let start = self.pos;
        while matches!(self.bytes.get(self.pos), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Format("expected a decimal header field".into()));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Format("header field out of range".into()))
    }

    fn expect_single_whitespace(&mut self) -> Result<()> {
        match self.bytes.get(self.pos) {
            Some(b) if b.is_ascii_whitespace() => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(Error::Format("missing separator before pixel data".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_p5() {
        let bytes = b"P5\n2 2\n255\n\x00\xff\x80\x40";
        let Image::Gray(img) = decode_image(bytes).unwrap() else {
            panic!("expected gray");
        };
        assert_eq!((img.width(), img.height()), (2, 2));
        assert_eq!(img.data(), &[0, 255, 128, 64]);
    }

    #[test]
    fn decodes_p6_single_red_pixel() {
        let bytes = b"P6\n1 1\n255\n\xff\x00\x00";
        let Image::Rgb(img) = decode_image(bytes).unwrap() else {
            panic!("expected rgb");
        };
        assert_eq!((img.width(), img.height()), (1, 1));
        assert_eq!(img.data(), &[255, 0, 0]);
    }

    #[test]
    fn rejects_unknown_magic() {
        assert!(matches!(
            decode_image(b"P9\n1 1\n255\n\x00"),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn rejects_bad_maxval_and_truncation() {
        assert!(matches!(
            decode_image(b"P5\n1 1\n65535\n\x00\x00"),
            Err(Error::Format(_))
        ));
        assert!(matches!(
            decode_image(b"P5\n4 4\n255\n\x01\x02"),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn tolerates_header_comments() {
        let bytes = b"P5\n# made by hand\n2 1 # trailing\n255\n\x07\x09";
        let Image::Gray(img) = decode_image(bytes).unwrap() else {
            panic!("expected gray");
        };
        assert_eq!(img.data(), &[7, 9]);
    }

    #[test]
    fn never_emits_comments_and_round_trips() {
        let img = GrayImage::new(2, 2, vec![0, 255, 128, 64]).unwrap();
        let bytes = encode_pgm(&img);
        assert!(!bytes.contains(&b'#'));
        assert_eq!(&bytes[..11], b"P5\n2 2\n255\n");
        let Image::Gray(back) = decode_image(&bytes).unwrap() else {
            panic!("expected gray");
        };
        assert_eq!(back, img);
    }

    #[test]
    fn binary_mask_maps_one_to_255() {
        let mask = BinaryImage::new(1, 2, vec![1, 0]).unwrap();
        let bytes = encode_binary_pgm(&mask);
        assert_eq!(&bytes[bytes.len() - 2..], &[255, 0]);
    }

    #[test]
    fn file_round_trips_are_bit_exact() {
        let dir = tempfile::tempdir().unwrap();

        let gray = GrayImage::from_fn(7, 5, |x, y| (x * 40 + y * 3) as u8);
        let gpath = dir.path().join("g.pgm");
        save_pgm(&gray, &gpath).unwrap();
        assert_eq!(load_pgm(&gpath).unwrap(), gray);

        let rgb = RgbImage::new(2, 1, vec![1, 2, 3, 250, 251, 252]).unwrap();
        let cpath = dir.path().join("c.ppm");
        save_ppm(&rgb, &cpath).unwrap();
        assert_eq!(load_ppm(&cpath).unwrap(), rgb);

        let mask = BinaryImage::new(3, 2, vec![1, 0, 1, 0, 0, 1]).unwrap();
        let bpath = dir.path().join("m.pgm");
        save_binary_pgm(&mask, &bpath).unwrap();
        assert_eq!(load_binary_pgm(&bpath).unwrap(), mask);
    }

    #[test]
    fn missing_file_is_io_error() {
        let err = load_pgm("/nonexistent/nowhere.pgm").unwrap_err();
        assert!(matches!(err, Error::Io(_)));
    }

    #[test]
    fn unwritable_directory_is_io_error() {
        let img = GrayImage::filled(2, 2, 0);
        let err = save_pgm(&img, "/nonexistent/dir/out.pgm").unwrap_err();
        assert!(matches!(err, Error::Io(_)));
    }
}
