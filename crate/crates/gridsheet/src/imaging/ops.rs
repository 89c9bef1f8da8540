//! Preprocessing operators: grayscale conversion, bilinear resize, 5x5
//! Gaussian blur, adaptive mean thresholding and binary morphology.

use super::{BinaryImage, GrayImage, RgbImage, StructuringElement};
use crate::error::{Error, Result};

/// ITU-R BT.601 luma: `round(0.299 r + 0.587 g + 0.114 b)`.
pub fn to_grayscale(img: &RgbImage) -> GrayImage {
    GrayImage::from_fn(img.width(), img.height(), |x, y| {
        let [r, g, b] = img.get(x, y);
        let luma = 0.299 * r as f64 + 0.587 * g as f64 + 0.114 * b as f64;
        luma.round().clamp(0.0, 255.0) as u8
    })
}

/// Bilinear resize with edge clamping. Resizing to the input dimensions is
/// an exact copy.
pub fn resize(img: &GrayImage, out_w: u32, out_h: u32) -> Result<GrayImage> {
    if out_w == 0 || out_h == 0 {
        return Err(Error::InvalidArgument(
            "resize target dimensions must be positive".into(),
        ));
    }

    let (w, h) = (img.width() as f64, img.height() as f64);
    let scale_x = w / out_w as f64;
    let scale_y = h / out_h as f64;
    let max_x = img.width() as i64 - 1;
    let max_y = img.height() as i64 - 1;

    Ok(GrayImage::from_fn(out_w, out_h, |ox, oy| {
        // Pixel-center mapping: output center (ox+0.5) lands on source
        // coordinate (ox+0.5)*scale; identity when scale == 1.
        let sx = (ox as f64 + 0.5) * scale_x - 0.5;
        let sy = (oy as f64 + 0.5) * scale_y - 0.5;
        let x0 = sx.floor();
        let y0 = sy.floor();
        let fx = sx - x0;
        let fy = sy - y0;

        let xa = (x0 as i64).clamp(0, max_x) as u32;
        let xb = (x0 as i64 + 1).clamp(0, max_x) as u32;
        let ya = (y0 as i64).clamp(0, max_y) as u32;
        let yb = (y0 as i64 + 1).clamp(0, max_y) as u32;

        let top = img.get(xa, ya) as f64 * (1.0 - fx) + img.get(xb, ya) as f64 * fx;
        let bottom = img.get(xa, yb) as f64 * (1.0 - fx) + img.get(xb, yb) as f64 * fx;
        let v = top * (1.0 - fy) + bottom * fy;
        v.round().clamp(0.0, 255.0) as u8
    }))
}

/// Normalized 5-tap Gaussian kernel for sigma = 1.1 (the kernel-size
/// derived default `0.3*((5-1)*0.5 - 1) + 0.8`).
pub fn gaussian_kernel_5() -> [f64; 5] {
    let sigma = 1.1_f64;
    let mut k = [0.0; 5];
    for (i, v) in k.iter_mut().enumerate() {
        let d = i as f64 - 2.0;
        *v = (-d * d / (2.0 * sigma * sigma)).exp();
    }
    let sum: f64 = k.iter().sum();
    for v in &mut k {
        *v /= sum;
    }
    k
}

/// Separable 5x5 Gaussian blur (sigma 1.1), borders reflected, output
/// rounded back to `[0, 255]`.
pub fn gaussian_blur_5x5(img: &GrayImage) -> Result<GrayImage> {
    let (w, h) = (img.width() as usize, img.height() as usize);
    if w < 5 || h < 5 {
        return Err(Error::InvalidArgument(format!(
            "gaussian blur needs at least 5x5 input, got {w}x{h}"
        )));
    }
    let k = gaussian_kernel_5();

    // Horizontal pass in f64, rounding deferred to the final pass.
    let mut tmp = vec![0.0_f64; w * h];
    for y in 0..h {
        for x in 0..w {
            let mut acc = 0.0;
            for (i, kv) in k.iter().enumerate() {
                let sx = reflect(x as i64 + i as i64 - 2, w as i64);
                acc += kv * img.get(sx as u32, y as u32) as f64;
            }
            tmp[y * w + x] = acc;
        }
    }

    let mut out = vec![0u8; w * h];
    for y in 0..h {
        for x in 0..w {
            let mut acc = 0.0;
            for (i, kv) in k.iter().enumerate() {
                let sy = reflect(y as i64 + i as i64 - 2, h as i64);
                acc += kv * tmp[sy as usize * w + x];
            }
            out[y * w + x] = acc.round().clamp(0.0, 255.0) as u8;
        }
    }
    GrayImage::new(img.width(), img.height(), out)
}

/// Mirror an out-of-range index back into `[0, n)` (symmetric reflection:
/// -1 -> 0, -2 -> 1, n -> n-1, ...).
fn reflect(i: i64, n: i64) -> i64 {
    if i < 0 {
        -i - 1
    } else if i >= n {
        2 * n - 1 - i
    } else {
        i
    }
}

/// Inverse-binary adaptive mean threshold: a pixel becomes foreground (1)
/// iff its value is at most the mean of its `block x block` neighborhood
/// (reflected borders) minus `c`. Dark ink and ruling become 1, paper 0.
pub fn adaptive_threshold(img: &GrayImage, block: u32, c: i32) -> Result<BinaryImage> {
    if block < 3 || block % 2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "threshold block must be odd and >= 3, got {block}"
        )));
    }
    let (w, h) = (img.width() as usize, img.height() as usize);
    let r = (block / 2) as usize;
    let (pw, ph) = (w + 2 * r, h + 2 * r);

    // Integral image over the reflect-padded input so every window sum is
    // O(1) and exact in integer arithmetic.
    let mut integral = vec![0u64; (pw + 1) * (ph + 1)];
    for py in 0..ph {
        let sy = reflect(py as i64 - r as i64, h as i64) as u32;
        let mut row_sum = 0u64;
        for px in 0..pw {
            let sx = reflect(px as i64 - r as i64, w as i64) as u32;
            row_sum += img.get(sx, sy) as u64;
            integral[(py + 1) * (pw + 1) + px + 1] = integral[py * (pw + 1) + px + 1] + row_sum;
        }
    }

    let window = (block as i64) * (block as i64);
    let mask = BinaryImage::from_fn(img.width(), img.height(), |x, y| {
        let (px, py) = (x as usize + r, y as usize + r);
        let (x0, y0) = (px - r, py - r);
        let (x1, y1) = (px + r + 1, py + r + 1);
        let sum = (integral[y1 * (pw + 1) + x1] + integral[y0 * (pw + 1) + x0]
            - integral[y0 * (pw + 1) + x1]
            - integral[y1 * (pw + 1) + x0]) as i64;
        // v <= mean - c  <=>  (v + c) * block^2 <= sum, exactly.
        (img.get(x, y) as i64 + c as i64) * window <= sum
    });
    Ok(mask)
}

/// Erosion: output is 1 iff every pixel covered by the element is 1;
/// pixels outside the image count as 0.
pub fn erode(img: &BinaryImage, se: &StructuringElement) -> BinaryImage {
    let v = erode_axis(img, se.height(), false);
    erode_axis(&v, se.width(), true)
}

/// Dilation: output is 1 iff any covered pixel is 1 (outside counts as 0).
pub fn dilate(img: &BinaryImage, se: &StructuringElement) -> BinaryImage {
    let v = dilate_axis(img, se.height(), false);
    dilate_axis(&v, se.width(), true)
}

/// Morphological opening: erosion then dilation with the same element.
/// With a 1x30 element it keeps vertical runs of at least 30 px; with a
/// 30x1 element, horizontal runs.
pub fn morph_open(img: &BinaryImage, se: &StructuringElement) -> BinaryImage {
    dilate(&erode(img, se), se)
}

/// Pointwise logical OR of two masks of equal dimensions.
pub fn combine_masks(v: &BinaryImage, h: &BinaryImage) -> Result<BinaryImage> {
    if v.width() != h.width() || v.height() != h.height() {
        return Err(Error::DimMismatch(format!(
            "mask dims {}x{} vs {}x{}",
            v.width(),
            v.height(),
            h.width(),
            h.height()
        )));
    }
    let data = v
        .data()
        .iter()
        .zip(h.data())
        .map(|(&a, &b)| a | b)
        .collect();
    BinaryImage::new(v.width(), v.height(), data)
}

// A rectangular all-ones element separates into a horizontal and a
// vertical run, so each pass is a 1-D window min/max. The element anchor
// is (k/2) from the left/top of the window.
fn erode_axis(img: &BinaryImage, k: u32, horizontal: bool) -> BinaryImage {
    if k == 1 {
        return img.clone();
    }
    let k = k as i64;
    let anchor = k / 2;
    windowed(img, horizontal, |prefix, n, pos| {
        let lo = pos - anchor;
        let hi = pos + (k - 1 - anchor);
        if lo < 0 || hi >= n {
            return false; // window leaves the image: sees a 0
        }
        prefix[(hi + 1) as usize] - prefix[lo as usize] == (k as u32)
    })
}

fn dilate_axis(img: &BinaryImage, k: u32, horizontal: bool) -> BinaryImage {
    if k == 1 {
        return img.clone();
    }
    let k = k as i64;
    let anchor = k / 2;
    windowed(img, horizontal, |prefix, n, pos| {
        let lo = (pos - anchor).max(0);
        let hi = (pos + (k - 1 - anchor)).min(n - 1);
        prefix[(hi + 1) as usize] - prefix[lo as usize] > 0
    })
}

fn windowed(
    img: &BinaryImage,
    horizontal: bool,
    decide: impl Fn(&[u32], i64, i64) -> bool,
) -> BinaryImage {
    let (w, h) = (img.width(), img.height());
    let mut out = BinaryImage::zeros(w, h);
    if horizontal {
        let mut prefix = vec![0u32; w as usize + 1];
        for y in 0..h {
            for x in 0..w {
                prefix[x as usize + 1] = prefix[x as usize] + img.get(x, y) as u32;
            }
            for x in 0..w {
                out.set(x, y, decide(&prefix, w as i64, x as i64) as u8);
            }
        }
    } else {
        let mut prefix = vec![0u32; h as usize + 1];
        for x in 0..w {
            for y in 0..h {
                prefix[y as usize + 1] = prefix[y as usize] + img.get(x, y) as u32;
            }
            for y in 0..h {
                out.set(x, y, decide(&prefix, h as i64, y as i64) as u8);
            }
        }
    }
    out
}
