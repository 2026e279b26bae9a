#pragma once

// Ordinals below epsilon_0 in hereditary Cantor normal form.
//
// An Ordinal is the finite sum  w^e1*c1 + w^e2*c2 + ...  with strictly
// decreasing exponents e1 > e2 > ... (themselves Ordinals) and positive
// coefficients. Every ordinal below epsilon_0 has exactly one such form, so
// structural equality is ordinal equality.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rfdepth {

using Natural = boost::multiprecision::cpp_int;

struct CnfTerm;

class Ordinal {
 public:
  /// Zero.
  Ordinal();
  Ordinal(const Ordinal&);
  Ordinal(Ordinal&&) noexcept;
  Ordinal& operator=(const Ordinal&);
  Ordinal& operator=(Ordinal&&) noexcept;
  ~Ordinal();

  /// Validates the CNF invariants; throws std::invalid_argument otherwise.
  static Ordinal from_terms(std::vector<CnfTerm> terms);
  static Ordinal natural(const Natural& n);
  static Ordinal omega();
  /// w^exponent * coefficient (coefficient 0 gives zero).
  static Ordinal omega_power(const Ordinal& exponent, const Natural& coefficient = 1);

  std::span<const CnfTerm> terms() const;

  bool is_zero() const;
  bool is_finite() const;
  /// Coefficient of w^0.
  Natural finite_part() const;
  /// Exponent of the last (smallest) term. Precondition: non-zero.
  const Ordinal& least_exponent() const;
  /// Exponent of the first (largest) term. Precondition: non-zero.
  const Ordinal& leading_exponent() const;
  /// Nesting depth of exponents; 0 for naturals, 1 for w^k, 2 for w^w, ...
  std::size_t height() const;

  friend bool operator==(const Ordinal&, const Ordinal&);
  friend std::strong_ordering operator<=>(const Ordinal&, const Ordinal&);

 private:
  explicit Ordinal(std::vector<CnfTerm> terms);
  std::vector<CnfTerm> terms_;
};

struct CnfTerm {
  Ordinal exponent;
  Natural coefficient;

  friend bool operator==(const CnfTerm&, const CnfTerm&) = default;
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal multiply(const Ordinal& a, const Ordinal& b);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return multiply(a, b); }

struct OrdinalShape {
  enum class Kind { zero, successor, limit };
  Kind kind;
  /// Set for successors only.
  std::optional<Ordinal> predecessor;
};

OrdinalShape analyze(const Ordinal& a);

inline bool is_limit(const Ordinal& a) { return analyze(a).kind == OrdinalShape::Kind::limit; }
inline bool is_successor(const Ordinal& a) {
  return analyze(a).kind == OrdinalShape::Kind::successor;
}

/// The unique g with w*g == a. Throws NotLimit unless a is a limit.
Ordinal div_omega(const Ordinal& a);

enum class CoreClass { trivial, finite_nontrivial };

/// Depth w*g  <->  (g, trivial);  depth w*g + 1  <->  (g, finite_nontrivial).
/// Depths 0 and 1 map to (0, trivial) and (0, finite_nontrivial).
struct CoreSignature {
  Ordinal core_index;
  CoreClass core_class;

  friend bool operator==(const CoreSignature&, const CoreSignature&) = default;
};

CoreSignature depth_to_core_signature(const Ordinal& depth);
Ordinal core_signature_to_depth(const CoreSignature& signature);

/// Standard fundamental sequence of a limit ordinal.
class FundamentalSequence {
 public:
  /// Throws NotLimit unless target is a limit.
  explicit FundamentalSequence(Ordinal target);

  const Ordinal& target() const { return target_; }
  /// n >= 1.
  Ordinal element(std::uint64_t n) const;

  friend bool operator==(const FundamentalSequence&, const FundamentalSequence&) = default;

 private:
  Ordinal target_;
};

FundamentalSequence fundamental_sequence(const Ordinal& a);

struct Realizability {
  enum class Reason { none, finite_above_one, successor_of_successor };
  bool realizable;
  Reason reason;
};

/// Ordinals that occur as depths of finitely generated groups:
/// 0, 1, limits, and successors of limits.
Realizability classify_realizable(const Ordinal& a);

/// b + a == a.
bool absorbs(const Ordinal& b, const Ordinal& a);

}  // namespace rfdepth
