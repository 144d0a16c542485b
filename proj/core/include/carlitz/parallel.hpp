#pragma once

#include "carlitz/laurent.hpp"
#include "carlitz/poly.hpp"

#include <functional>

namespace carlitz {

/**
 * Sum term(A) over all monic A of the given degree, optionally on several
 * threads.  The index range [0, q^d) is split into contiguous chunks, each
 * chunk is summed in enumeration order, and the partial sums are folded in
 * chunk order.  Laurent addition is associative and floors combine by max,
 * so the result is bit-identical for every thread count.
 */
Laurent sum_over_monics(const FieldPtr& F, int degree, int threads,
                        const std::function<Laurent(const Poly&)>& term);

} // namespace carlitz
