use rayon::prelude::*;

use crate::error::Result;
use crate::function::{critical_values, CriticalGrid, VertexValuedMap};
use crate::scalar::Scalar;
use crate::slab::{cell_inclusion, homology_of, inclusion_chain_map, interlevel_complex, level_complex, CellComplex};
use crate::z2::{image_basis, induced_map, intersection_dim, kernel_basis, HomologyPresentation, Subspace};

/// The relevant numbers of one homology degree on a grid of `g` positions.
///
/// Accessors return 0 outside their domain: `lplus(x, y)` needs `x ≤ y`,
/// `lminus(x, y)` needs `y ≤ x`, `e(x, y, z)` needs `z ≤ x ≤ y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeNumbers {
    g: usize,
    i: Vec<usize>,
    l: Vec<usize>,
    lplus: Vec<usize>,
    lminus: Vec<usize>,
    e: Vec<usize>,
}

impl DegreeNumbers {
    pub(crate) fn zeros(g: usize) -> Self {
        DegreeNumbers {
            g,
            i: vec![0; g * g],
            l: vec![0; g],
            lplus: vec![0; g * g],
            lminus: vec![0; g * g],
            e: vec![0; g * g * g],
        }
    }

    pub fn grid_len(&self) -> usize {
        self.g
    }

    /// `i_r(x, y)`, the dimension of the intersection of the images of both
    /// levels in the interlevel set; symmetric in its arguments.
    pub fn i(&self, x: usize, y: usize) -> usize {
        let (x, y) = if x <= y { (x, y) } else { (y, x) };
        self.i[x * self.g + y]
    }

    pub fn l(&self, x: usize) -> usize {
        self.l[x]
    }

    pub fn lplus(&self, x: usize, y: usize) -> usize {
        if y < x {
            0
        } else {
            self.lplus[x * self.g + y]
        }
    }

    pub fn lminus(&self, x: usize, y: usize) -> usize {
        if y > x {
            0
        } else {
            self.lminus[x * self.g + y]
        }
    }

    pub fn e(&self, x: usize, up: usize, down: usize) -> usize {
        if up < x || down > x {
            0
        } else {
            self.e[(x * self.g + up) * self.g + down]
        }
    }

    pub(crate) fn set_i(&mut self, x: usize, y: usize, v: usize) {
        self.i[x * self.g + y] = v;
    }

    pub(crate) fn set_l(&mut self, x: usize, v: usize) {
        self.l[x] = v;
    }

    pub(crate) fn set_lplus(&mut self, x: usize, y: usize, v: usize) {
        self.lplus[x * self.g + y] = v;
    }

    pub(crate) fn set_lminus(&mut self, x: usize, y: usize, v: usize) {
        self.lminus[x * self.g + y] = v;
    }

    pub(crate) fn set_e(&mut self, x: usize, up: usize, down: usize, v: usize) {
        self.e[(x * self.g + up) * self.g + down] = v;
    }
}

/// `i_r`, `l_r`, `l_r⁺`, `l_r⁻` and `e_r` for every degree on the full grid
/// of critical and regular values.
#[derive(Clone, Debug, PartialEq)]
pub struct RelevantNumbers<T> {
    grid: CriticalGrid<T>,
    degrees: Vec<DegreeNumbers>,
}

impl<T: Scalar> RelevantNumbers<T> {
    pub(crate) fn zeros(grid: CriticalGrid<T>, degree_count: usize) -> Self {
        let g = grid.len_points();
        RelevantNumbers { grid, degrees: vec![DegreeNumbers::zeros(g); degree_count] }
    }

    pub fn grid(&self) -> &CriticalGrid<T> {
        &self.grid
    }

    pub fn degree_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, r: usize) -> &DegreeNumbers {
        &self.degrees[r]
    }

    pub(crate) fn degree_mut(&mut self, r: usize) -> &mut DegreeNumbers {
        &mut self.degrees[r]
    }
}

struct PairResult {
    x: usize,
    y: usize,
    // per degree: kernel from x (in H(X_x)), kernel from y (in H(X_y)), i
    per_degree: Vec<(Subspace, Subspace, usize)>,
}

/// Computes every relevant number directly from the homology of level and
/// interlevel sets, for degrees `0..=max_degree`.
///
/// With `x ≤ y` grid positions: `l(x) = dim H(X_x)`, `lplus(x, y)` and
/// `lminus(y, x)` are the kernel dimensions of `H(X_x) → H(X_{x,y})` and
/// `H(X_y) → H(X_{x,y})`, `i(x, y)` is the dimension of the intersection of
/// their images, and `e(x, y, z)` intersects the kernels of `H(X_x)` into
/// `X_{x,y}` and into `X_{z,x}`.
pub fn compute_relevant_numbers<T: Scalar>(f: &VertexValuedMap<T>, max_degree: usize) -> Result<RelevantNumbers<T>> {
    let grid = critical_values(f)?;
    let g = grid.len_points();
    let degrees = max_degree + 1;

    let levels = (0..g)
        .into_par_iter()
        .map(|p| {
            let c = level_complex(f, grid.point(p))?;
            let h = (0..degrees).map(|r| homology_of(&c, r)).collect::<Result<Vec<_>>>()?;
            Ok((c, h))
        })
        .collect::<Result<Vec<(CellComplex<T>, Vec<HomologyPresentation>)>>>()?;

    let pairs: Vec<(usize, usize)> = (0..g).flat_map(|x| (x + 1..g).map(move |y| (x, y))).collect();
    let results = pairs
        .into_par_iter()
        .map(|(x, y)| {
            let dst = interlevel_complex(f, grid.point(x), grid.point(y))?;
            let map_x = cell_inclusion(&levels[x].0, &dst)?;
            let map_y = cell_inclusion(&levels[y].0, &dst)?;
            let per_degree = (0..degrees)
                .map(|r| {
                    let h = homology_of(&dst, r)?;
                    let mx = induced_map(&levels[x].1[r], &h, &inclusion_chain_map(&levels[x].0, &dst, &map_x, r))?;
                    let my = induced_map(&levels[y].1[r], &h, &inclusion_chain_map(&levels[y].0, &dst, &map_y, r))?;
                    let i = intersection_dim(&image_basis(&mx), &image_basis(&my))?;
                    Ok((kernel_basis(&mx), kernel_basis(&my), i))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(PairResult { x, y, per_degree })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut nums = RelevantNumbers::zeros(grid, degrees);
    for r in 0..degrees {
        // kernels of H(X_x) upward to y and downward to z, in H(X_x) coordinates
        let mut up: Vec<Vec<Option<&Subspace>>> = vec![vec![None; g]; g];
        let mut down: Vec<Vec<Option<&Subspace>>> = vec![vec![None; g]; g];
        let d = nums.degree_mut(r);
        for (x, (_, h)) in levels.iter().enumerate() {
            d.set_l(x, h[r].betti());
            d.set_i(x, x, h[r].betti());
        }
        for res in &results {
            let (kx, ky, i) = &res.per_degree[r];
            d.set_i(res.x, res.y, *i);
            d.set_lplus(res.x, res.y, kx.dim());
            d.set_lminus(res.y, res.x, ky.dim());
            up[res.x][res.y] = Some(kx);
            down[res.y][res.x] = Some(ky);
        }
        for x in 0..g {
            for y in x + 1..g {
                for z in 0..x {
                    let (Some(a), Some(b)) = (up[x][y], down[x][z]) else { continue };
                    d.set_e(x, y, z, intersection_dim(a, b)?);
                }
            }
        }
    }
    Ok(nums)
}
