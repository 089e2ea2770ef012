#include "awconn/qpochhammer.hpp"

#include <stdexcept>

namespace awconn {

Rat qpoch(const Rat& x, const Rat& q, long n) {
  if (n < 0) throw std::invalid_argument("qpoch: negative order");
  Rat acc(1);
  Rat xq = x;
  for (long k = 0; k < n; ++k) {
    acc *= Rat(1) - xq;
    xq *= q;
  }
  return acc;
}

Rat qpoch(std::initializer_list<Rat> xs, const Rat& q, long n) {
  Rat acc(1);
  for (const Rat& x : xs) acc *= qpoch(x, q, n);
  return acc;
}

Rat poch(const Rat& x, long n) {
  if (n < 0) throw std::invalid_argument("poch: negative order");
  Rat acc(1);
  Rat term = x;
  for (long k = 0; k < n; ++k) {
    acc *= term;
    term += Rat(1);
  }
  return acc;
}

}  // namespace awconn
