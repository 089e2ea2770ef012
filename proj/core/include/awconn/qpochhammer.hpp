#pragma once

#include <initializer_list>

#include "awconn/rat.hpp"

namespace awconn {

// (x|q)_n = prod_{k=0}^{n-1} (1 - x q^k), with (x|q)_0 = 1.
Rat qpoch(const Rat& x, const Rat& q, long n);

// Product of several order-n symbols: (x1,...,xr|q)_n.
Rat qpoch(std::initializer_list<Rat> xs, const Rat& q, long n);

// (x|q)_1 = 1 - x.
inline Rat qp1(const Rat& x) { return Rat(1) - x; }

// Rising factorial (x)_n = prod_{k=0}^{n-1} (x + k).
Rat poch(const Rat& x, long n);

}  // namespace awconn
