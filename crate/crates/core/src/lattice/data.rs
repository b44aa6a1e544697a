//! Fixed lattice data.

/// Generator matrix of the Leech lattice in the standard Golay-code
/// construction. Rows are integer coordinates; the lattice is the row span
/// scaled by 1/sqrt(8), so the Gram matrix is `B B^T / 8`. Built from the
/// extended [24,12,8] binary Golay code (quadratic-residue generator
/// polynomial x^11+x^10+x^6+x^5+x^4+x^2+1 over GF(2)[x]/(x^23-1), extended by
/// a parity bit) together with the vectors 4e_1+4e_i and (-3,1,...,1), then
/// reduced to a Z-basis of minimal vectors so that short-vector enumeration
/// prunes well. The resulting Gram matrix is even and unimodular with no
/// vectors of norm 2 and 196560 vectors of norm 4, which the test suite
/// re-verifies by exact enumeration.
pub const LEECH_BASIS: [[i64; 24]; 24] = [
    [0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 2, 0, 0, 2, 0, 0, 2, 0],
    [0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 2, 0, 0, 2, 0, 2, 0, 2, 2],
    [0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, 2, 2, 2, 0, 2, 2, 0],
    [0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 2, 2, 0, 0, 2],
    [0, 0, 0, 2, 0, -2, 0, 0, 0, 0, 0, 0, -2, 0, 2, 0, 0, 0, 0, 2, -2, 0, 2, -2],
    [0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 2, 2, 0, 2],
    [0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 2, 2, 2],
    [0, 0, 0, 2, 0, -2, -2, 0, 2, 0, 0, 0, 2, 2, 0, 0, 2, 0, 0, 2, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 0, 2, 2, 2, 0, 0, 0, 2, 2, 0, 2],
    [0, 0, 0, 0, 0, -2, 2, 0, 0, -2, 2, 0, -2, -2, 0, 0, 0, 0, 0, 0, -2, 0, 0, -2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 2, 2, 0, 2, 2, 2, 2, 0],
    [0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 2, 2, 2, 0, 0, 2, 0, 0, 2, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, -2, 0, 2, -2, -2, 0, 0, 0, -2, 2, 0, -2],
    [0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, -2, -2, 0, -2, 2, 0, 0, 2],
    [0, -2, 0, 0, 0, 0, 0, 0, 2, -2, 0, 0, -2, 0, 0, 0, -2, -2, 2, -2, 0, 0, 0, 0],
    [0, 0, 0, -2, 0, 0, 2, 0, 0, 0, 0, 0, 2, 2, -2, 2, 0, 2, 0, 0, 0, 0, 0, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, -2, 2, 0, 2, 0, 0, 2, 0, 2, 0, -2, 0, 0, -2, 0, -2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 4, 0],
    [0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, -2, -2, 2, 0, 0, 0, 0, 0, 0, -2, -2, 2],
    [1, -1, 3, -1, -1, -1, -1, 1, 1, -1, 1, -1, 1, 1, 1, 1, 1, -1, 1, -1, 1, -1, 1, -1],
    [0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 2, 0, 2, 0, 2, 0, 0, 2, 2, 0],
    [-1, -1, 1, 1, -1, -1, 1, -1, -1, -1, 1, -1, 1, -1, -1, 1, -3, 1, 1, -1, -1, 1, 1, 1],
    [0, 0, -2, 0, 0, 0, 2, 0, -2, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 0, -2, 2, 0, -2],
    [-1, 1, -1, 1, -1, 1, -1, 1, -1, 1, 1, 1, -1, -1, 1, -1, -1, 1, 1, -1, -1, 1, -1, -3],
];
