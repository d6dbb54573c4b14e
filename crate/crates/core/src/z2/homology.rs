use super::reduce::{image_basis, kernel_basis, Reduction, Subspace};
use super::{BitMatrix, BitVec};
use crate::error::{Error, Result};

/// Homology of a chain complex in one degree, `ker ∂_out / img ∂_in`,
/// with a fixed basis of representative cycles.
pub struct HomologyPresentation {
    ambient_dim: usize,
    cycles: Subspace,
    boundaries: Subspace,
    reps: Vec<BitVec>,
    // Reduction of [boundary basis | reps]; every cycle reduces to zero.
    coordinatizer: Reduction,
}

/// `boundary_in: C_{r+1} → C_r`, `boundary_out: C_r → C_{r-1}`.
pub fn homology_presentation(boundary_in: &BitMatrix, boundary_out: &BitMatrix) -> Result<HomologyPresentation> {
    let ambient_dim = boundary_in.nrows();
    if boundary_out.ncols() != ambient_dim {
        return Err(Error::ShapeMismatch(format!(
            "boundary into degree has {} rows but boundary out of degree has {} columns",
            ambient_dim,
            boundary_out.ncols()
        )));
    }
    if !boundary_out.mul(boundary_in).is_zero() {
        return Err(Error::NotAChainComplex);
    }
    let cycles = kernel_basis(boundary_out);
    let boundaries = image_basis(boundary_in);

    // Extend the boundary basis greedily by cycle basis vectors.
    let mut echelon: Vec<Option<BitVec>> = vec![None; ambient_dim];
    let mut insert = |v: &BitVec| -> bool {
        let mut v = v.clone();
        while let Some(low) = v.last_one() {
            match &echelon[low] {
                Some(p) => v.xor_assign(p),
                None => {
                    echelon[low] = Some(v);
                    return true;
                }
            }
        }
        false
    };
    for b in boundaries.basis().columns() {
        insert(b);
    }
    let reps: Vec<BitVec> = cycles.basis().columns().iter().filter(|z| insert(z)).cloned().collect();

    let generators = boundaries.basis().hstack(&BitMatrix::from_columns(ambient_dim, reps.clone()));
    let coordinatizer = Reduction::run(&generators);
    Ok(HomologyPresentation { ambient_dim, cycles, boundaries, reps, coordinatizer })
}

impl HomologyPresentation {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn betti(&self) -> usize {
        self.reps.len()
    }

    pub fn cycles(&self) -> &Subspace {
        &self.cycles
    }

    pub fn boundaries(&self) -> &Subspace {
        &self.boundaries
    }

    pub fn representatives(&self) -> &[BitVec] {
        &self.reps
    }

    /// Homology coordinates of a cycle: `z = Σ coords[k]·reps[k] + boundary`.
    pub fn coordinates(&self, z: &BitVec) -> Result<BitVec> {
        if z.len() != self.ambient_dim {
            return Err(Error::ShapeMismatch(format!(
                "chain of length {} in a chain group of dimension {}",
                z.len(),
                self.ambient_dim
            )));
        }
        let (rest, combo) = self.coordinatizer.reduce_vector(z);
        if !rest.is_zero() {
            return Err(Error::NotACycle);
        }
        let nb = self.boundaries.dim();
        Ok(BitVec::from_indices(self.betti(), combo.ones().filter(|&k| k >= nb).map(|k| k - nb)))
    }
}

/// Matrix of the map on homology induced by `chain_map: C_r(src) → C_r(dst)`.
pub fn induced_map(src: &HomologyPresentation, dst: &HomologyPresentation, chain_map: &BitMatrix) -> Result<BitMatrix> {
    if chain_map.ncols() != src.ambient_dim || chain_map.nrows() != dst.ambient_dim {
        return Err(Error::ShapeMismatch(format!(
            "chain map is {}x{}, expected {}x{}",
            chain_map.nrows(),
            chain_map.ncols(),
            dst.ambient_dim,
            src.ambient_dim
        )));
    }
    for b in src.boundaries.basis().columns() {
        let image = chain_map.mul_vec(b);
        match dst.coordinates(&image) {
            Ok(c) if c.is_zero() => {}
            _ => return Err(Error::ChainMapViolation("boundaries")),
        }
    }
    let cols = src
        .reps
        .iter()
        .map(|z| dst.coordinates(&chain_map.mul_vec(z)).map_err(|_| Error::ChainMapViolation("cycles")))
        .collect::<Result<Vec<_>>>()?;
    Ok(BitMatrix::from_columns(dst.betti(), cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Boundary matrix of a cycle graph on n vertices: edge k joins k and k+1 mod n.
    fn cycle_boundary(n: usize) -> BitMatrix {
        let cols = (0..n).map(|k| BitVec::from_indices(n, [k, (k + 1) % n])).collect();
        BitMatrix::from_columns(n, cols)
    }

    #[test]
    fn isolated_vertex() {
        let h = homology_presentation(&BitMatrix::zeros(1, 0), &BitMatrix::zeros(0, 1)).unwrap();
        assert_eq!(h.betti(), 1);
    }

    #[test]
    fn square_circle_degree_one() {
        let d1 = cycle_boundary(4);
        let h1 = homology_presentation(&BitMatrix::zeros(4, 0), &d1).unwrap();
        assert_eq!(h1.betti(), 1);
        let h0 = homology_presentation(&d1, &BitMatrix::zeros(0, 4)).unwrap();
        assert_eq!(h0.betti(), 1);
    }

    #[test]
    fn filled_triangle_degree_one() {
        let d1 = cycle_boundary(3);
        let d2 = BitMatrix::from_columns(3, vec![BitVec::from_bits(&[1, 1, 1])]);
        let h = homology_presentation(&d2, &d1).unwrap();
        assert_eq!(h.betti(), 0);
    }

    #[test]
    fn rejects_nonzero_composition() {
        let d1 = cycle_boundary(3);
        let d2 = BitMatrix::from_columns(3, vec![BitVec::from_bits(&[1, 1, 0])]);
        assert!(matches!(homology_presentation(&d2, &d1), Err(Error::NotAChainComplex)));
    }

    #[test]
    fn coordinates_reject_non_cycles() {
        let d1 = cycle_boundary(3);
        let h = homology_presentation(&BitMatrix::zeros(3, 0), &d1).unwrap();
        assert!(h.coordinates(&BitVec::from_bits(&[1, 0, 0])).is_err());
        assert_eq!(h.coordinates(&BitVec::from_bits(&[1, 1, 1])).unwrap(), BitVec::from_bits(&[1]));
    }

    #[test]
    fn identity_induces_identity() {
        let d1 = cycle_boundary(4);
        let h0 = homology_presentation(&d1, &BitMatrix::zeros(0, 4)).unwrap();
        let m = induced_map(&h0, &h0, &BitMatrix::identity(4)).unwrap();
        assert_eq!(m, BitMatrix::identity(1));
    }

    #[test]
    fn two_points_into_arc() {
        // Points p, q; arc p - m - q with vertices p, m, q.
        let src = homology_presentation(&BitMatrix::zeros(2, 0), &BitMatrix::zeros(0, 2)).unwrap();
        let arc = BitMatrix::from_columns(3, vec![BitVec::from_indices(3, [0, 1]), BitVec::from_indices(3, [1, 2])]);
        let dst = homology_presentation(&arc, &BitMatrix::zeros(0, 3)).unwrap();
        let chain = BitMatrix::from_columns(3, vec![BitVec::unit(3, 0), BitVec::unit(3, 2)]);
        let m = induced_map(&src, &dst, &chain).unwrap();
        assert_eq!(super::super::rank(&m), 1);
        assert_eq!(kernel_basis(&m).dim(), 1);
    }

    #[test]
    fn chain_map_must_send_cycles_to_cycles() {
        let src = homology_presentation(&BitMatrix::zeros(1, 0), &BitMatrix::zeros(0, 1)).unwrap();
        let d1 = cycle_boundary(3);
        let dst = homology_presentation(&BitMatrix::zeros(3, 0), &d1).unwrap();
        let chain = BitMatrix::from_columns(3, vec![BitVec::unit(3, 0)]);
        assert_eq!(induced_map(&src, &dst, &chain), Err(Error::ChainMapViolation("cycles")));
    }
}
