//! Table structure recovery: connected components over the line masks,
//! row/column position extraction, the grid model, cell crops and debug
//! overlays.

use std::path::Path;

use crate::error::{Error, Result};
use crate::imaging::{self, BinaryImage, GrayImage, Rect, RgbImage};

/// A maximal 8-connected set of foreground pixels, summarized by its tight
/// bounding box and pixel count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Component {
    pub bbox: Rect,
    pub area: usize,
}

/// 8-connected component labeling. Output is sorted by bounding-box
/// origin `(y, x)`.
pub fn connected_components(img: &BinaryImage) -> Vec<Component> {
    let (w, h) = (img.width() as i64, img.height() as i64);
    let mut visited = vec![false; (w * h) as usize];
    let mut out = Vec::new();
    let mut stack = Vec::new();

    for sy in 0..h {
        for sx in 0..w {
            let idx = (sy * w + sx) as usize;
            if visited[idx] || img.get(sx as u32, sy as u32) == 0 {
                continue;
            }
            visited[idx] = true;
            stack.push((sx, sy));
            let (mut min_x, mut min_y, mut max_x, mut max_y) = (sx, sy, sx, sy);
            let mut area = 0usize;
            while let Some((x, y)) = stack.pop() {
                area += 1;
                min_x = min_x.min(x);
                min_y = min_y.min(y);
                max_x = max_x.max(x);
                max_y = max_y.max(y);
                for dy in -1..=1 {
                    for dx in -1..=1 {
                        let (nx, ny) = (x + dx, y + dy);
                        if nx < 0 || ny < 0 || nx >= w || ny >= h {
                            continue;
                        }
                        let nidx = (ny * w + nx) as usize;
                        if !visited[nidx] && img.get(nx as u32, ny as u32) == 1 {
                            visited[nidx] = true;
                            stack.push((nx, ny));
                        }
                    }
                }
            }
            out.push(Component {
                bbox: Rect::new(
                    min_x as u32,
                    min_y as u32,
                    (max_x - min_x + 1) as u32,
                    (max_y - min_y + 1) as u32,
                ),
                area,
            });
        }
    }
    out.sort_by_key(|c| (c.bbox.y, c.bbox.x));
    out
}

/// Sorted left edges of components in a vertically-opened mask whose
/// bounding boxes are at least `min_extent` tall; shorter blobs are noise.
pub fn column_positions(vert_mask: &BinaryImage, min_extent: u32) -> Vec<u32> {
    let mut xs: Vec<u32> = connected_components(vert_mask)
        .into_iter()
        .filter(|c| c.bbox.h >= min_extent)
        .map(|c| c.bbox.x)
        .collect();
    xs.sort_unstable();
    xs
}

/// Sorted top edges of components in a horizontally-opened mask whose
/// bounding boxes are at least `min_extent` wide.
pub fn row_positions(horiz_mask: &BinaryImage, min_extent: u32) -> Vec<u32> {
    let mut ys: Vec<u32> = connected_components(horiz_mask)
        .into_iter()
        .filter(|c| c.bbox.w >= min_extent)
        .map(|c| c.bbox.y)
        .collect();
    ys.sort_unstable();
    ys
}

/// Deduplicates closely spaced line positions in one greedy left-to-right
/// pass: the first position is kept, and a position is kept iff it lies
/// more than `min_gap` pixels past the last kept one.
pub fn group_positions(xs: &[u32], min_gap: u32) -> Result<Vec<u32>> {
    if xs.windows(2).any(|p| p[0] > p[1]) {
        return Err(Error::InvalidArgument(
            "positions must be sorted ascending".into(),
        ));
    }
    let mut kept: Vec<u32> = Vec::new();
    for &x in xs {
        match kept.last() {
            None => kept.push(x),
            Some(&last) if x - last > min_gap => kept.push(x),
            _ => {}
        }
    }
    Ok(kept)
}

/// Deduplicated, strictly increasing column x-positions and row
/// y-positions; adjacent pairs bound the table's cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridModel {
    col_xs: Vec<u32>,
    row_ys: Vec<u32>,
}

/// Builds a grid from grouped, sorted positions. Fewer than two entries on
/// either axis cannot bound a cell.
pub fn build_grid(col_xs: Vec<u32>, row_ys: Vec<u32>) -> Result<GridModel> {
    if col_xs.len() < 2 || row_ys.len() < 2 {
        return Err(Error::DegenerateGrid(format!(
            "need at least 2 column and 2 row positions, got {} and {}",
            col_xs.len(),
            row_ys.len()
        )));
    }
    if col_xs.windows(2).any(|p| p[0] >= p[1]) || row_ys.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::InvalidArgument(
            "grid positions must be strictly increasing".into(),
        ));
    }
    Ok(GridModel { col_xs, row_ys })
}

impl GridModel {
    pub fn col_xs(&self) -> &[u32] {
        &self.col_xs
    }

    pub fn row_ys(&self) -> &[u32] {
        &self.row_ys
    }

    /// Number of cell rows.
    pub fn rows(&self) -> usize {
        self.row_ys.len() - 1
    }

    /// Number of cell columns.
    pub fn cols(&self) -> usize {
        self.col_xs.len() - 1
    }

    pub fn cell_count(&self) -> usize {
        self.rows() * self.cols()
    }

    /// Rectangle of cell `(row, col)` before any inset:
    /// `[col_xs[c], col_xs[c+1]) x [row_ys[r], row_ys[r+1])`.
    pub fn cell_rect(&self, row: usize, col: usize) -> Rect {
        let x = self.col_xs[col];
        let y = self.row_ys[row];
        Rect::new(x, y, self.col_xs[col + 1] - x, self.row_ys[row + 1] - y)
    }
}

/// A cropped cell raster with its grid coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellRegion {
    pub row: usize,
    pub col: usize,
    pub image: GrayImage,
}

/// Crops every cell in row-major order. `inset` shaves that many pixels
/// from each side (clamped so at least one pixel remains) to keep residual
/// ruling ink out of the recognizer input.
pub fn extract_cells(img: &GrayImage, grid: &GridModel, inset: u32) -> Result<Vec<CellRegion>> {
    let last_x = *grid.col_xs.last().unwrap();
    let last_y = *grid.row_ys.last().unwrap();
    if last_x > img.width() || last_y > img.height() {
        return Err(Error::InvalidArgument(format!(
            "grid extent {last_x}x{last_y} exceeds image {}x{}",
            img.width(),
            img.height()
        )));
    }

    let mut cells = Vec::with_capacity(grid.cell_count());
    for row in 0..grid.rows() {
        for col in 0..grid.cols() {
            let rect = grid.cell_rect(row, col);
            let dx = inset.min((rect.w - 1) / 2);
            let dy = inset.min((rect.h - 1) / 2);
            let inner = Rect::new(rect.x + dx, rect.y + dy, rect.w - 2 * dx, rect.h - 2 * dy);
            cells.push(CellRegion {
                row,
                col,
                image: img.crop(inner)?,
            });
        }
    }
    Ok(cells)
}

/// Writes each cell as `cell_<row>_<col>.pgm` (0-based decimal indices).
pub fn save_cells(cells: &[CellRegion], dir: impl AsRef<Path>) -> Result<()> {
    let dir = dir.as_ref();
    std::fs::create_dir_all(dir)?;
    for cell in cells {
        let path = dir.join(format!("cell_{}_{}.pgm", cell.row, cell.col));
        imaging::pnm::save_pgm(&cell.image, path)?;
    }
    Ok(())
}

/// Replicates the grayscale into RGB and paints 1-px column lines in pure
/// red, then row lines in pure green (rows win at intersections).
pub fn render_overlay(img: &GrayImage, grid: &GridModel) -> RgbImage {
    let mut out = RgbImage::new(
        img.width(),
        img.height(),
        img.data().iter().flat_map(|&v| [v, v, v]).collect(),
    )
    .expect("replicated buffer has matching size");

    for &x in &grid.col_xs {
        if x < img.width() {
            for y in 0..img.height() {
                out.set(x, y, [255, 0, 0]);
            }
        }
    }
    for &y in &grid.row_ys {
        if y < img.height() {
            for x in 0..img.width() {
                out.set(x, y, [0, 255, 0]);
            }
        }
    }
    out
}
