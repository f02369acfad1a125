#pragma once

// Integer lattice utilities for small dimensions: Hermite normal form of a
// generating set, LLL reduction of a Gram matrix, and Fincke-Pohst
// enumeration of short vectors.

#include <functional>
#include <vector>

#include "rsavg/arith.hpp"
#include "rsavg/exactmath.hpp"

namespace rsavg {

using IntMatrix = std::vector<std::vector<Integer>>;
using SmallMatrix = std::vector<std::vector<i64>>;

/// Basis (in Hermite normal form, nonzero rows only) of the Z-span of rows.
IntMatrix hnf_basis(IntMatrix rows);

struct LLLResult {
    IntMatrix gram;  // reduced Gram matrix T G T^t
    IntMatrix transform;  // rows: reduced basis in terms of the input basis
};

/// LLL (delta = 3/4) on a positive definite integer Gram matrix.
LLLResult lll_gram(IntMatrix const & gram);

SmallMatrix to_small(IntMatrix const & m);

/// Calls visit(x, x^t G x) for every nonzero x with x^t G x <= bound.
/// G must be positive definite and should be LLL-reduced for speed.
void enumerate_short_vectors(SmallMatrix const & gram, i64 bound,
                             std::function<void(std::vector<i64> const &, i64)> const & visit);

/// counts[v] = #{x != 0 : x^t G x = v} for 0 <= v <= bound.
std::vector<i64> count_by_value(SmallMatrix const & gram, i64 bound);

}  // namespace rsavg
