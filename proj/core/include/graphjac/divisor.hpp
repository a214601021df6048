#pragma once

#include "graphjac/multigraph.hpp"

#include <cstdint>
#include <vector>

namespace graphjac {

/// Chip configuration: one integer per vertex, negative chips allowed.
using Divisor = std::vector<long long>;

long long divisor_degree(const Divisor& d);

/// Lending move: v sends one chip along each incident edge.
Divisor lend(const Multigraph& g, Divisor d, int v);
/// Borrowing move: inverse of lend.
Divisor borrow(const Multigraph& g, Divisor d, int v);

/// True iff d1 - d2 is a Laplacian image (same degree, integer firing script).
bool linearly_equivalent(const Multigraph& g, const Divisor& d1, const Divisor& d2);

/// Dhar stability test: nonnegative off q and no nonempty subset avoiding q
/// can fire without going negative.
bool is_q_reduced(const Multigraph& g, const Divisor& d, int q);

/// The unique q-reduced divisor linearly equivalent to d.
Divisor q_reduce(const Multigraph& g, Divisor d, int q);

/// True iff d is linearly equivalent to an effective divisor.
bool is_winnable(const Multigraph& g, const Divisor& d);

} // namespace graphjac
