#pragma once

#include "mobembed/matrix.hpp"

namespace mobembed::linalg {

// Dense kernels behind the factorization solver. Every parallel kernel writes
// each output row from exactly one iteration and reduces via per-row partials
// accumulated in row order, so results are bit-identical to the serial
// reference for any worker count. Calls below the work threshold skip the
// OpenMP region; the loop bodies are identical, so outputs do not change.

inline constexpr long long kMinParallelWork = 1 << 18;  // flops

// out = u * u^T (n x n)
void gram(const Matrix& u, Matrix& out);

// c = a * b
void matmul(const Matrix& a, const Matrix& b, Matrix& c);

// sum of squared entries
double frob_sq(const Matrix& m);

// sum of squared entry differences
double diff_frob_sq(const Matrix& a, const Matrix& b);

namespace serial {
void gram(const Matrix& u, Matrix& out);
void matmul(const Matrix& a, const Matrix& b, Matrix& c);
double frob_sq(const Matrix& m);
double diff_frob_sq(const Matrix& a, const Matrix& b);
}  // namespace serial

}  // namespace mobembed::linalg
