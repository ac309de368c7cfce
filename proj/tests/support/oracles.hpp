#pragma once

// Independent reference implementations used only by tests. None of them
// share code paths with the library routines they check.

#include "leibniz/cochain.hpp"
#include "leibniz/exact_linalg.hpp"

#include <cstddef>
#include <vector>

namespace leibniz::oracle {

/// Rank by fraction-free Bareiss elimination on integer rows obtained by
/// clearing denominators row by row.
std::size_t bareiss_rank(const Matrix& m);

struct FilteredShuffle {
    std::vector<std::size_t> image;
    int sign;
};

/// All permutations of p+q letters in lexicographic order, kept when
/// increasing on the first p and on the last q positions. Sign from the
/// cycle decomposition.
std::vector<FilteredShuffle> shuffles_by_filter(std::size_t p, std::size_t q);

/// Circle product evaluated straight from the defining double sum, using
/// shuffles_by_filter and multilinear evaluation on basis vectors.
Cochain circle_by_permutations(const Cochain& a, const Cochain& b);

} // namespace leibniz::oracle
