#ifndef DIODEF_LINALG_HPP
#define DIODEF_LINALG_HPP

#include <optional>
#include <vector>

#include "diodef/numeric.hpp"

namespace diodef {

/* Dense exact matrices, row-major.  ZMat rows usually generate a lattice;
 * QMat is used for field arithmetic (basis changes, traces, kernels).
 */
using ZMat = std::vector<IVec>;
using QMat = std::vector<QVec>;

QMat q_from_z(const ZMat &m);
QMat q_identity(size_t n);
ZMat z_identity(size_t n);

Rat q_det(QMat m);
size_t q_rank(QMat m);
/* solve x * m = b (row-vector convention); nullopt if inconsistent */
std::optional<QVec> q_solve_left(const QMat &m, const QVec &b);
/* solve m * x = b (column convention) */
std::optional<QVec> q_solve_right(const QMat &m, const QVec &b);
std::optional<QMat> q_inverse(const QMat &m);
/* basis of { x : x * m = 0 } as rows */
QMat q_kernel_left(const QMat &m);
QMat q_mul(const QMat &a, const QMat &b);

/* Row-style Hermite normal form.
 *
 * Input rows generate a lattice in Z^n.  Output is the canonical basis:
 * one row per pivot, pivots strictly right-moving, pivot entries positive,
 * entries above a pivot reduced into [0, pivot).  For a full-rank lattice in
 * Z^n this is the square upper-triangular matrix with positive diagonal the
 * rest of the code relies on (norm = product of the diagonal).
 */
struct HnfResult {
    ZMat h;                        // canonical rows (rank many)
    std::vector<size_t> pivots;    // pivot column of each row
};
HnfResult hnf(ZMat rows);

/* HNF together with a unimodular transform: u * input = [h; 0].
 * Rows of u beyond the rank are a basis of the left integer kernel.
 */
struct HnfTransformResult {
    ZMat h;
    std::vector<size_t> pivots;
    ZMat u;      // square, |det| = 1, size = #input rows
    size_t rank;
};
HnfTransformResult hnf_transform(ZMat rows);

/* one integer solution of x * m = b, if any */
std::optional<IVec> z_solve_left(const ZMat &m, const IVec &b);
/* basis of the left integer kernel of m */
ZMat z_kernel_left(const ZMat &m);

/* --- full-rank lattice helpers (h = canonical HNF, square) --- */

/* is v in the lattice spanned by the rows of h? */
bool lattice_contains(const ZMat &h, const IVec &v);
/* canonical representative of v modulo the lattice (coords in [0, h[i][i])) */
IVec lattice_reduce(const ZMat &h, const IVec &v);
/* intersection of two full-rank lattices, canonical HNF */
ZMat lattice_intersect(const ZMat &a, const ZMat &b);
Int lattice_det(const ZMat &h);

}  // namespace diodef

#endif
