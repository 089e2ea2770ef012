#include "awconn/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace awconn {

ZigZagIndex ZigZagIndex::pred() const {
  if (r == 0) throw std::domain_error("ZigZagIndex: 0 has no predecessor");
  return zz_at_position(position() - 1);
}

ZigZagIndex ZigZagIndex::succ() const { return zz_at_position(position() + 1); }

ZigZagIndex zz_at_position(long pos) {
  if (pos < 0) throw std::domain_error("zz_at_position: negative position");
  if (pos % 2 == 0) return ZigZagIndex{static_cast<int>(pos / 2)};
  return ZigZagIndex{static_cast<int>(-(pos + 1) / 2)};
}

LaurentPoly LaurentPoly::monomial(const Rat& coeff, int exp) {
  LaurentPoly f;
  if (!coeff.is_zero()) f.terms_.emplace(exp, coeff);
  return f;
}

Rat LaurentPoly::coeff(int exp) const {
  const auto it = terms_.find(exp);
  return it == terms_.end() ? Rat(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

ZigZagIndex LaurentPoly::zz_degree() const {
  if (is_zero()) throw std::domain_error("degree of zero polynomial");
  ZigZagIndex best = zz(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (zz(e) > best) best = zz(e);
  return best;
}

Rat LaurentPoly::zz_leading_coeff() const { return coeff(zz_degree().r); }

void LaurentPoly::add_term(int exp, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly operator*(const Rat& s, const LaurentPoly& f) { return f.scaled(s); }

LaurentPoly LaurentPoly::scaled(const Rat& s) const {
  LaurentPoly out;
  if (s.is_zero()) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, s * c);
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

std::string LaurentPoly::json() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << ',';
    first = false;
    os << '"' << e << "\":\"" << c.str() << '"';
  }
  os << '}';
  return os.str();
}

}  // namespace awconn
