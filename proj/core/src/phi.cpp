#include "positroid/phi.hpp"

#include <algorithm>

#include "positroid/errors.hpp"

namespace positroid {

int Monomial::exponent(int var) const {
  for (const auto& [v, e] : factors_)
    if (v == var) return e;
  return 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

std::vector<int> Monomial::support() const {
  std::vector<int> vars;
  for (const auto& [v, e] : factors_) vars.push_back(v);
  return vars;
}

Monomial Monomial::times(int var, int power) const {
  Monomial result = *this;
  for (auto& [v, e] : result.factors_) {
    if (v == var) {
      e += power;
      return result;
    }
  }
  result.factors_.emplace_back(var, power);
  std::sort(result.factors_.begin(), result.factors_.end());
  return result;
}

std::optional<Monomial> Monomial::divided_by(int var) const {
  Monomial result = *this;
  for (size_t i = 0; i < result.factors_.size(); ++i) {
    if (result.factors_[i].first == var) {
      if (--result.factors_[i].second == 0)
        result.factors_.erase(result.factors_.begin() + i);
      return result;
    }
  }
  return std::nullopt;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : factors_)
    if (other.exponent(v) < e) return false;
  return true;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool degree_lex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a < b;
}

MonomialSet::MonomialSet(const std::vector<Monomial>& monomials) {
  for (const Monomial& m : monomials) insert(m);
}

void MonomialSet::insert(const Monomial& m, std::optional<LabelSet> source) {
  entries_[m] = source;
}

std::optional<LabelSet> MonomialSet::source_of(const Monomial& m) const {
  auto it = entries_.find(m);
  return it == entries_.end() ? std::nullopt : it->second;
}

std::vector<Monomial> MonomialSet::sorted() const {
  std::vector<Monomial> out;
  for (const auto& [m, src] : entries_) out.push_back(m);
  std::sort(out.begin(), out.end(), degree_lex_less);
  return out;
}

LabelSet t_set(const Positroid& m, LabelSet b, int k) {
  if (!m.contains(b)) throw NotABasis("not a basis: " + b.to_string());
  if (!b.contains(k) || m.b0().contains(k))
    throw NotASink("label " + std::to_string(k) + " is not a sink of " + b.to_string());
  MatchingRep rep = matching_rep(m.b0(), b);
  const MatchingPair* pair = rep.with_sink(k);
  LabelSet result;
  for (int x : b & m.b0()) {
    auto innermost = minimal_containing_path(rep, x);
    if (!innermost || innermost->sink != k) continue;
    if (m.contains(b.without(x).with(pair->source))) result.insert(x);
  }
  return result;
}

Monomial phi_direct(const Positroid& m, LabelSet b) {
  LabelSet passive = passive_elements(m, b);
  MatchingRep rep = matching_rep(m.b0(), b);
  Monomial result;
  for (int k : b - m.b0()) result = result.times(k);
  for (int x : (b & m.b0()) & passive) {
    auto innermost = minimal_containing_path(rep, x);
    if (!innermost)
      throw LemmaViolation("passive element " + std::to_string(x) + " of basis " +
                           b.to_string() + " lies in no path interval");
    result = result.times(innermost->sink);
  }
  return result;
}

Monomial phi_product(const Positroid& m, LabelSet b) {
  if (!m.contains(b)) throw NotABasis("not a basis: " + b.to_string());
  Monomial result;
  for (int k : b - m.b0()) result = result.times(k, t_set(m, b, k).size() + 1);
  return result;
}

MonomialSet phi_image(const Positroid& m) {
  MonomialSet image;
  for (LabelSet b : m.bases()) {
    Monomial mono = phi_direct(m, b);
    if (image.contains(mono)) {
      auto previous = image.source_of(mono);
      throw InjectivityViolation("bases " + (previous ? previous->to_string() : "?") + " and " +
                                 b.to_string() + " both map to " + mono.to_string());
    }
    image.insert(mono, b);
  }
  return image;
}

}  // namespace positroid
