#include "gkm/bivar_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gkm {

BivarPoly BivarPoly::monomial(int dx, int dy, const Rat& c) {
  if (dx < 0 || dy < 0) throw std::invalid_argument("BivarPoly: negative exponent");
  BivarPoly p;
  p.add_term(dx, dy, c);
  return p;
}

void BivarPoly::add_term(int dx, int dy, const Rat& c) {
  if (c.is_zero()) return;
  auto key = Exponents{dx, dy};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rat BivarPoly::coeff(int dx, int dy) const {
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? Rat(0) : it->second;
}

int BivarPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

bool BivarPoly::is_homogeneous(int k) const {
  for (const auto& [e, c] : terms_)
    if (e.first + e.second != k) return false;
  return true;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  BivarPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, c);
  return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
  BivarPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, -c);
  return r;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

BivarPoly BivarPoly::scaled(const Rat& c) const {
  BivarPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  BivarPoly r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

BivarPoly BivarPoly::substitute_y(const Rat& a) const {
  BivarPoly r;
  for (const auto& [e, c] : terms_)
    r.add_term(e.first + e.second, 0, c * a.pow(static_cast<unsigned>(e.second)));
  return r;
}

std::string BivarPoly::str() const {
  if (terms_.empty()) return "0";
  // Graded order, highest total degree first, then higher deg_x first.
  std::vector<std::pair<Exponents, Rat>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ts) {
    Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? "-" : "+");
    }
    first = false;
    bool has_var = e.first > 0 || e.second > 0;
    if (!mag.is_one() || !has_var) {
      os << mag.str();
      if (has_var) os << "*";
    }
    if (e.first > 0) {
      os << "x";
      if (e.first > 1) os << "^" << e.first;
    }
    if (e.second > 0) {
      if (e.first > 0) os << "*";
      os << "y";
      if (e.second > 1) os << "^" << e.second;
    }
  }
  return os.str();
}

bool divisible_by_linear(const BivarPoly& p, const Rat& a) {
  return p.substitute_y(a).is_zero();
}

}  // namespace gkm
