#pragma once

// Construction terms for groups.
//
// A GroupTerm names a group by how it is built from certified atoms and a
// handful of combinators (free products, direct sums, wreath products, ...).
// Only the attributes the depth calculus needs are modeled; no group elements
// or presentations exist anywhere in the library.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rfdepth/ordinal.hpp"

namespace rfdepth {

class GroupTerm;

namespace term {

struct Trivial {};
struct FiniteCyclic { std::uint64_t order; };          // order >= 2
struct A5 {};
struct Integers {};
struct FreeGroup { std::uint64_t rank; };              // rank >= 2
struct Symplectic { std::uint64_t genus; };            // genus >= 2
struct Lambda {};
struct LambdaBar { std::uint64_t d; std::uint64_t genus; };  // d odd >= 3, genus >= 3
struct GammaFP { std::uint64_t n; };                   // n >= 1
struct MFP { std::uint64_t n; std::uint64_t d; };      // n >= 1, d odd >= 3
struct NoFiniteQuotients {};

struct FreeProduct { std::vector<GroupTerm> factors; };
struct DirectSum { std::vector<GroupTerm> factors; };
struct Wreath { std::vector<GroupTerm> args; };                   // {base, top}
struct CentralWreathQuotient { std::vector<GroupTerm> args; };    // {base, top}
struct ThreeGenEmbed { std::vector<GroupTerm> args; };            // {inner}
struct FreeProductFamily { FundamentalSequence seq; };
struct DirectSumFamily { FundamentalSequence seq; };
struct SuccessorWitness { FundamentalSequence seq; };

}  // namespace term

using TermNode =
    std::variant<term::Trivial, term::FiniteCyclic, term::A5, term::Integers, term::FreeGroup,
                 term::Symplectic, term::Lambda, term::LambdaBar, term::GammaFP, term::MFP,
                 term::NoFiniteQuotients, term::FreeProduct, term::DirectSum, term::Wreath,
                 term::CentralWreathQuotient, term::ThreeGenEmbed, term::FreeProductFamily,
                 term::DirectSumFamily, term::SuccessorWitness>;

/// Immutable, cheaply copyable handle to a construction term. Construct
/// through the factory functions below; they enforce parameter bounds and
/// normalize free products / direct sums.
class GroupTerm {
 public:
  const TermNode& node() const { return *node_; }
  /// Immediate subterms in argument order (empty for atoms and families).
  std::span<const GroupTerm> children() const;
  /// Short constructor label such as "wr", "C(2)" or "fpfam(w^2)".
  std::string label() const;

  bool is_trivial() const { return std::holds_alternative<term::Trivial>(*node_); }

  friend bool operator==(const GroupTerm& a, const GroupTerm& b);

 private:
  friend GroupTerm make_term(TermNode node);
  explicit GroupTerm(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

GroupTerm trivial();
GroupTerm cyclic(std::uint64_t order);
GroupTerm a5();
GroupTerm integers();
GroupTerm free_group(std::uint64_t rank);
GroupTerm symplectic(std::uint64_t genus);
GroupTerm lambda();
GroupTerm lambda_bar(std::uint64_t d = 3, std::uint64_t genus = 3);
GroupTerm gamma_fp(std::uint64_t n);
GroupTerm m_fp(std::uint64_t n, std::uint64_t d = 3);
GroupTerm no_finite_quotients();

/// Trivial factors are dropped; a single survivor is returned as is, none
/// gives the trivial group. Throws MalformedTerm for fewer than two factors.
GroupTerm free_product(std::vector<GroupTerm> factors);
GroupTerm direct_sum(std::vector<GroupTerm> factors);
GroupTerm wreath(GroupTerm base, GroupTerm top);
GroupTerm central_wreath_quotient(GroupTerm base, GroupTerm top);
GroupTerm three_gen_embed(GroupTerm inner);
GroupTerm free_product_family(const Ordinal& target);
GroupTerm direct_sum_family(const Ordinal& target);
GroupTerm successor_witness(const Ordinal& target);

enum class Cardinality { trivial, finite_nontrivial, infinite };

struct GroupAttr {
  Cardinality cardinality = Cardinality::trivial;
  bool perfect = true;
  bool finitely_generated = true;
  bool finitely_presented = true;
  /// Set when the gamma-th iterated residual core is finite, nontrivial and
  /// central; the depth is then w*gamma + 1.
  std::optional<Ordinal> central_core;

  friend bool operator==(const GroupAttr&, const GroupAttr&) = default;
};

}  // namespace rfdepth
