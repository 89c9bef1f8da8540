//! Raster types and the pixel-level preprocessing stages that turn a raw
//! marksheet photo into a binary grid-line mask.
//!
//! All operations are pure functions of their inputs; images are immutable
//! values that are cheap to clone and safe to share across threads.

mod ops;
pub mod pnm;

pub use ops::{
    adaptive_threshold, combine_masks, dilate, erode, gaussian_blur_5x5, gaussian_kernel_5,
    morph_open, resize, to_grayscale,
};

use crate::error::{Error, Result};

/// Axis-aligned rectangle in pixel coordinates (origin top-left).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rect {
    pub x: u32,
    pub y: u32,
    pub w: u32,
    pub h: u32,
}

impl Rect {
    pub fn new(x: u32, y: u32, w: u32, h: u32) -> Self {
        Self { x, y, w, h }
    }

    pub fn right(&self) -> u32 {
        self.x + self.w
    }

    pub fn bottom(&self) -> u32 {
        self.y + self.h
    }
}

/// 8-bit single-channel raster, row-major, intensities in `[0, 255]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: u32,
    height: u32,
    data: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: u32, height: u32, data: Vec<u8>) -> Result<Self> {
        check_dims(width, height)?;
        if data.len() != (width as usize) * (height as usize) {
            return Err(Error::DimMismatch(format!(
                "gray data length {} != {}x{}",
                data.len(),
                width,
                height
            )));
        }
        Ok(Self { width, height, data })
    }

    pub fn filled(width: u32, height: u32, value: u8) -> Self {
        Self {
            width,
            height,
            data: vec![value; (width as usize) * (height as usize)],
        }
    }

    pub fn from_fn(width: u32, height: u32, mut f: impl FnMut(u32, u32) -> u8) -> Self {
        let mut data = Vec::with_capacity((width as usize) * (height as usize));
        for y in 0..height {
            for x in 0..width {
                data.push(f(x, y));
            }
        }
        Self { width, height, data }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    #[inline]
    pub fn get(&self, x: u32, y: u32) -> u8 {
        self.data[(y as usize) * (self.width as usize) + x as usize]
    }

    #[inline]
    pub fn set(&mut self, x: u32, y: u32, value: u8) {
        self.data[(y as usize) * (self.width as usize) + x as usize] = value;
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    /// Crops `rect`, which must lie inside the image.
    pub fn crop(&self, rect: Rect) -> Result<GrayImage> {
        if rect.w == 0 || rect.h == 0 {
            return Err(Error::InvalidArgument("empty crop rectangle".into()));
        }
        if rect.right() > self.width || rect.bottom() > self.height {
            return Err(Error::InvalidArgument(format!(
                "crop {}x{}+{}+{} exceeds image {}x{}",
                rect.w, rect.h, rect.x, rect.y, self.width, self.height
            )));
        }
        Ok(GrayImage::from_fn(rect.w, rect.h, |x, y| {
            self.get(rect.x + x, rect.y + y)
        }))
    }
}

/// 8-bit RGB raster, row-major `(r, g, b)` triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RgbImage {
    width: u32,
    height: u32,
    data: Vec<u8>,
}

impl RgbImage {
    pub fn new(width: u32, height: u32, data: Vec<u8>) -> Result<Self> {
        check_dims(width, height)?;
        if data.len() != (width as usize) * (height as usize) * 3 {
            return Err(Error::DimMismatch(format!(
                "rgb data length {} != {}x{}x3",
                data.len(),
                width,
                height
            )));
        }
        Ok(Self { width, height, data })
    }

    pub fn filled(width: u32, height: u32, rgb: [u8; 3]) -> Self {
        let mut data = Vec::with_capacity((width as usize) * (height as usize) * 3);
        for _ in 0..(width as usize) * (height as usize) {
            data.extend_from_slice(&rgb);
        }
        Self { width, height, data }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    #[inline]
    pub fn get(&self, x: u32, y: u32) -> [u8; 3] {
        let i = ((y as usize) * (self.width as usize) + x as usize) * 3;
        [self.data[i], self.data[i + 1], self.data[i + 2]]
    }

    #[inline]
    pub fn set(&mut self, x: u32, y: u32, rgb: [u8; 3]) {
        let i = ((y as usize) * (self.width as usize) + x as usize) * 3;
        self.data[i..i + 3].copy_from_slice(&rgb);
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }
}

/// `{0, 1}` raster; 1 is foreground (ink / grid line).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryImage {
    width: u32,
    height: u32,
    data: Vec<u8>,
}

impl BinaryImage {
    pub fn new(width: u32, height: u32, data: Vec<u8>) -> Result<Self> {
        check_dims(width, height)?;
        if data.len() != (width as usize) * (height as usize) {
            return Err(Error::DimMismatch(format!(
                "binary data length {} != {}x{}",
                data.len(),
                width,
                height
            )));
        }
        if let Some(v) = data.iter().find(|&&v| v > 1) {
            return Err(Error::InvalidArgument(format!(
                "binary image value {v} is neither 0 nor 1"
            )));
        }
        Ok(Self { width, height, data })
    }

    pub fn zeros(width: u32, height: u32) -> Self {
        Self {
            width,
            height,
            data: vec![0; (width as usize) * (height as usize)],
        }
    }

    pub fn from_fn(width: u32, height: u32, mut f: impl FnMut(u32, u32) -> bool) -> Self {
        let mut data = Vec::with_capacity((width as usize) * (height as usize));
        for y in 0..height {
            for x in 0..width {
                data.push(f(x, y) as u8);
            }
        }
        Self { width, height, data }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    #[inline]
    pub fn get(&self, x: u32, y: u32) -> u8 {
        self.data[(y as usize) * (self.width as usize) + x as usize]
    }

    #[inline]
    pub fn set(&mut self, x: u32, y: u32, value: u8) {
        debug_assert!(value <= 1);
        self.data[(y as usize) * (self.width as usize) + x as usize] = value;
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    /// Number of foreground pixels.
    pub fn popcount(&self) -> usize {
        self.data.iter().filter(|&&v| v == 1).count()
    }

    /// Fraction of foreground pixels in `[0, 1]`.
    pub fn ink_fraction(&self) -> f64 {
        self.popcount() as f64 / self.data.len() as f64
    }
}

/// Rectangular all-ones structuring element, anchored at its center
/// `(w/2, h/2)` (integer division).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuringElement {
    width: u32,
    height: u32,
}

impl StructuringElement {
    pub fn new(width: u32, height: u32) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidArgument(
                "structuring element sides must be >= 1".into(),
            ));
        }
        Ok(Self { width, height })
    }

    /// `1 x len` element (1 wide, `len` tall): keeps vertical line runs.
    pub fn vertical(len: u32) -> Result<Self> {
        Self::new(1, len)
    }

    /// `len x 1` element (`len` wide, 1 tall): keeps horizontal line runs.
    pub fn horizontal(len: u32) -> Result<Self> {
        Self::new(len, 1)
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }
}

/// A decoded input file: P5 yields grayscale, P6 yields RGB.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Image {
    Gray(GrayImage),
    Rgb(RgbImage),
}

impl Image {
    /// Converts to grayscale (no-op for gray input).
    pub fn into_gray(self) -> GrayImage {
        match self {
            Image::Gray(g) => g,
            Image::Rgb(rgb) => to_grayscale(&rgb),
        }
    }
}

fn check_dims(width: u32, height: u32) -> Result<()> {
    if width == 0 || height == 0 {
        return Err(Error::InvalidArgument(format!(
            "image dimensions {width}x{height} must be positive"
        )));
    }
    Ok(())
}
