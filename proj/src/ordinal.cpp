#include "rfdepth/ordinal.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "rfdepth/errors.hpp"

namespace rfdepth {

Ordinal::Ordinal() = default;
Ordinal::Ordinal(const Ordinal&) = default;
Ordinal::Ordinal(Ordinal&&) noexcept = default;
Ordinal& Ordinal::operator=(const Ordinal&) = default;
Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;
Ordinal::~Ordinal() = default;

Ordinal::Ordinal(std::vector<CnfTerm> terms) : terms_(std::move(terms)) {}

Ordinal Ordinal::from_terms(std::vector<CnfTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) {
      throw std::invalid_argument("CNF coefficient must be positive");
    }
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw std::invalid_argument("CNF exponents must be strictly decreasing");
    }
  }
  return Ordinal(std::move(terms));
}

Ordinal Ordinal::natural(const Natural& n) {
  if (n < 0) throw std::invalid_argument("negative natural");
  if (n == 0) return Ordinal();
  return Ordinal({CnfTerm{Ordinal(), n}});
}

Ordinal Ordinal::omega() { return omega_power(natural(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, const Natural& coefficient) {
  if (coefficient < 0) throw std::invalid_argument("negative coefficient");
  if (coefficient == 0) return Ordinal();
  return Ordinal({CnfTerm{exponent, coefficient}});
}

std::span<const CnfTerm> Ordinal::terms() const { return terms_; }

bool Ordinal::is_zero() const { return terms_.empty(); }

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent.is_zero());
}

Natural Ordinal::finite_part() const {
  if (!terms_.empty() && terms_.back().exponent.is_zero()) return terms_.back().coefficient;
  return 0;
}

const Ordinal& Ordinal::least_exponent() const {
  if (terms_.empty()) throw std::logic_error("least_exponent of zero");
  return terms_.back().exponent;
}

const Ordinal& Ordinal::leading_exponent() const {
  if (terms_.empty()) throw std::logic_error("leading_exponent of zero");
  return terms_.front().exponent;
}

std::size_t Ordinal::height() const {
  std::size_t h = 0;
  for (const auto& term : terms_) {
    if (!term.exponent.is_zero()) h = std::max(h, term.exponent.height() + 1);
  }
  return h;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t common = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < common; ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (auto c = x.exponent <=> y.exponent; c != 0) return c;
    if (x.coefficient != y.coefficient) {
      return x.coefficient < y.coefficient ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    }
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const auto rhs = b.terms();
  const Ordinal& lead = rhs.front().exponent;

  std::vector<CnfTerm> out;
  out.reserve(a.terms().size() + rhs.size());
  Natural carried = 0;
  for (const auto& term : a.terms()) {
    const auto c = term.exponent <=> lead;
    if (c > 0) {
      out.push_back(term);
    } else {
      // Everything below b's leading term is absorbed.
      if (c == 0) carried = term.coefficient;
      break;
    }
  }
  out.push_back(CnfTerm{lead, rhs.front().coefficient + carried});
  out.insert(out.end(), rhs.begin() + 1, rhs.end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal multiply(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const auto lhs = a.terms();
  Ordinal result;
  for (const auto& term : b.terms()) {
    Ordinal piece;
    if (term.exponent.is_zero()) {
      // a * n: only the leading coefficient scales.
      std::vector<CnfTerm> scaled(lhs.begin(), lhs.end());
      scaled.front().coefficient *= term.coefficient;
      piece = Ordinal::from_terms(std::move(scaled));
    } else {
      piece = Ordinal::omega_power(add(a.leading_exponent(), term.exponent), term.coefficient);
    }
    result = add(result, piece);
  }
  return result;
}

OrdinalShape analyze(const Ordinal& a) {
  if (a.is_zero()) return {OrdinalShape::Kind::zero, std::nullopt};
  const auto terms = a.terms();
  if (!terms.back().exponent.is_zero()) return {OrdinalShape::Kind::limit, std::nullopt};
  std::vector<CnfTerm> pred(terms.begin(), terms.end());
  pred.back().coefficient -= 1;
  if (pred.back().coefficient == 0) pred.pop_back();
  return {OrdinalShape::Kind::successor, Ordinal::from_terms(std::move(pred))};
}

Ordinal div_omega(const Ordinal& a) {
  if (!is_limit(a)) throw NotLimit("div_omega requires a limit ordinal");
  std::vector<CnfTerm> out;
  out.reserve(a.terms().size());
  for (const auto& term : a.terms()) {
    Ordinal e = term.exponent;
    if (e.is_finite()) e = Ordinal::natural(e.finite_part() - 1);
    out.push_back(CnfTerm{std::move(e), term.coefficient});
  }
  return Ordinal::from_terms(std::move(out));
}

CoreSignature depth_to_core_signature(const Ordinal& depth) {
  if (depth.is_zero()) return {Ordinal(), CoreClass::trivial};
  if (depth == Ordinal::natural(1)) return {Ordinal(), CoreClass::finite_nontrivial};
  const auto shape = analyze(depth);
  if (shape.kind == OrdinalShape::Kind::limit) return {div_omega(depth), CoreClass::trivial};
  if (is_limit(*shape.predecessor)) {
    return {div_omega(*shape.predecessor), CoreClass::finite_nontrivial};
  }
  throw InvalidDepthShape("depth must be 0, 1, a limit, or the successor of a limit");
}

Ordinal core_signature_to_depth(const CoreSignature& signature) {
  const Ordinal base = multiply(Ordinal::omega(), signature.core_index);
  if (signature.core_class == CoreClass::trivial) return base;
  return add(base, Ordinal::natural(1));
}

FundamentalSequence::FundamentalSequence(Ordinal target) : target_(std::move(target)) {
  if (!is_limit(target_)) throw NotLimit("fundamental sequences exist only for limit ordinals");
}

namespace {

Ordinal fundamental_element(const Ordinal& a, std::uint64_t n) {
  // a = base + w^e, where base keeps every term but one copy of the last.
  const auto terms = a.terms();
  const Ordinal& e = terms.back().exponent;
  std::vector<CnfTerm> base_terms(terms.begin(), terms.end());
  base_terms.back().coefficient -= 1;
  if (base_terms.back().coefficient == 0) base_terms.pop_back();
  const Ordinal base = Ordinal::from_terms(std::move(base_terms));

  const auto shape = analyze(e);
  if (shape.kind == OrdinalShape::Kind::successor) {
    return add(base, Ordinal::omega_power(*shape.predecessor, Natural(n)));
  }
  return add(base, Ordinal::omega_power(fundamental_element(e, n)));
}

}  // namespace

Ordinal FundamentalSequence::element(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("fundamental sequence index starts at 1");
  return fundamental_element(target_, n);
}

FundamentalSequence fundamental_sequence(const Ordinal& a) { return FundamentalSequence(a); }

Realizability classify_realizable(const Ordinal& a) {
  const Natural finite = a.finite_part();
  if (a.is_finite()) {
    if (finite <= 1) return {true, Realizability::Reason::none};
    return {false, Realizability::Reason::finite_above_one};
  }
  if (finite <= 1) return {true, Realizability::Reason::none};
  return {false, Realizability::Reason::successor_of_successor};
}

bool absorbs(const Ordinal& b, const Ordinal& a) { return add(b, a) == a; }

}  // namespace rfdepth
