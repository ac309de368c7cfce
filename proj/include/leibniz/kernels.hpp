#pragma once

// Data-parallel inner loops. Every kernel comes as an OpenMP version and a
// serial reference with the same output; exact arithmetic makes the two
// bit-identical regardless of thread scheduling. Tests compare them and
// bench/ times them.

#include "leibniz/algebra.hpp"
#include "leibniz/cochain.hpp"
#include "leibniz/exact_linalg.hpp"

#include <cstddef>

namespace leibniz::kernels {

/// Matrix of delta^p : CL^p -> CL^{p+1} in Cochain coordinates.
Matrix coboundary_matrix_serial(const LeibnizAlgebra& alg, std::size_t p);
Matrix coboundary_matrix_parallel(const LeibnizAlgebra& alg, std::size_t p);

/// Circle product of cochains of arities p+1 and q+1.
Cochain circle_serial(const Cochain& a, const Cochain& b);
Cochain circle_parallel(const Cochain& a, const Cochain& b);

/// a(x,b(y,z)) - a(b(x,y),z) + a(b(x,z),y) for 2-cochains a, b.
Cochain leibniz_term_serial(const Cochain& a, const Cochain& b);
Cochain leibniz_term_parallel(const Cochain& a, const Cochain& b);

/// Number of worker threads OpenMP would use; 1 when built without OpenMP.
int max_threads();

} // namespace leibniz::kernels
