use crate::error::{Error, Result};
use crate::Scalar;

/// `n_points` equally spaced nodes covering `[t_start, t_end]`, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformGrid<T> {
    t_start: T,
    t_end: T,
    n_points: usize,
}

impl<T: Scalar> UniformGrid<T> {
    /// A grid with at least two nodes. Simpson additionally requires an odd count, which
    /// is checked at integration time.
    pub fn new(t_start: T, t_end: T, n_points: usize) -> Result<Self> {
        if !(t_start.is_finite() && t_end.is_finite() && t_end > t_start) {
            return Err(Error::GridInterval {
                start: t_start.to_string(),
                end: t_end.to_string(),
            });
        }
        if n_points < 2 {
            return Err(Error::GridTooSmall { n_points, min: 2 });
        }
        Ok(Self {
            t_start,
            t_end,
            n_points,
        })
    }

    /// A grid usable by composite Simpson: odd node count, at least three nodes.
    pub fn simpson(t_start: T, t_end: T, n_points: usize) -> Result<Self> {
        let grid = Self::new(t_start, t_end, n_points)?;
        grid.require_simpson()?;
        Ok(grid)
    }

    pub fn t_start(&self) -> T {
        self.t_start
    }

    pub fn t_end(&self) -> T {
        self.t_end
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn step(&self) -> T {
        (self.t_end - self.t_start) / T::from_count(self.n_points - 1)
    }

    /// Node `i`. The last node is `t_end` exactly, not `t_start + (n-1) * step`.
    pub fn node(&self, i: usize) -> T {
        assert!(i < self.n_points, "node index {i} out of range");
        if i == self.n_points - 1 {
            self.t_end
        } else {
            self.t_start + T::from_count(i) * self.step()
        }
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = T> + '_ {
        (0..self.n_points).map(move |i| self.node(i))
    }

    /// Same node count and spacing, starting where this grid ends.
    pub fn continuation(&self) -> Self {
        let width = self.t_end - self.t_start;
        Self {
            t_start: self.t_end,
            t_end: self.t_end + width,
            n_points: self.n_points,
        }
    }

    pub fn with_n_points(&self, n_points: usize) -> Result<Self> {
        Self::new(self.t_start, self.t_end, n_points)
    }

    pub(crate) fn require_simpson(&self) -> Result<()> {
        if self.n_points < 3 {
            return Err(Error::GridTooSmall {
                n_points: self.n_points,
                min: 3,
            });
        }
        if self.n_points.is_multiple_of(2) {
            return Err(Error::EvenGrid {
                n_points: self.n_points,
            });
        }
        Ok(())
    }
}

/// Function values on the nodes of a [`UniformGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction<T> {
    grid: UniformGrid<T>,
    values: Vec<T>,
}

impl<T: Scalar> SampledFunction<T> {
    pub fn new(grid: UniformGrid<T>, values: Vec<T>) -> Result<Self> {
        if values.len() != grid.n_points() {
            return Err(Error::LengthMismatch {
                values: values.len(),
                n_points: grid.n_points(),
            });
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteSample { index });
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: UniformGrid<T>, f: impl Fn(T) -> T) -> Result<Self> {
        let values = grid.nodes().map(f).collect();
        Self::new(grid, values)
    }

    pub fn grid(&self) -> &UniformGrid<T> {
        &self.grid
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }
}
