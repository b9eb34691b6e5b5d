#include "grassmann/element.hpp"

namespace grassmann {

Element::Element(const Scalar& c, Monomial m) {
  if (c != 0) terms_.emplace(std::move(m), c);
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator-(Element a) { return a *= Scalar(-1); }
Element operator*(const Scalar& c, Element a) { return a *= c; }

Element operator*(const Element& a, const Element& b) {
  Element out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto p = mono_mul(ma, mb);
      if (!p) continue;
      Scalar c = ca * cb;
      if (p->sign < 0) c = -c;
      out.add_term(p->product, c);
    }
  }
  return out;
}

ParityParts parity_split(const Element& a) {
  ParityParts parts;
  for (const auto& [m, c] : a.terms()) {
    (m.is_even() ? parts.even : parts.odd).add_term(m, c);
  }
  return parts;
}

Index support_bound(const Element& a) {
  Index bound = 0;
  for (const auto& [m, c] : a.terms()) bound = std::max(bound, m.max_index());
  return bound;
}

std::string to_string(const Element& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    bool negative = c < 0;
    Scalar magnitude = negative ? Scalar(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_unit()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) {
        out += magnitude.get_str();
        out += '*';
      }
      out += to_string(m);
    }
  }
  return out;
}

}  // namespace grassmann
