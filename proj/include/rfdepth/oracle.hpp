#pragma once

// Brute-force cross-checks for the ordinal and depth modules.
//
// Below w^2 every ordinal is w*p + q, and ordinal arithmetic has a closed form
// on such pairs. The pair routines here are written against that closed form
// only; the CNF engine is reached exclusively through its public API.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rfdepth/depth.hpp"
#include "rfdepth/group_term.hpp"
#include "rfdepth/ordinal.hpp"

namespace rfdepth::oracle {

/// (p, q) denotes w*p + q.
using Pair = std::pair<std::uint64_t, std::uint64_t>;

Pair pair_add(Pair a, Pair b);
/// (w*p + q) * k.
Pair pair_times_nat(Pair a, std::uint64_t k);
/// k * (w*p + q).
Pair nat_times_pair(std::uint64_t k, Pair a);
std::strong_ordering pair_compare(Pair a, Pair b);

/// The operations under test; defaults are the real ones.
struct ArithmeticOps {
  std::function<Ordinal(const Ordinal&, const Ordinal&)> add = rfdepth::add;
  std::function<Ordinal(const Ordinal&, const Ordinal&)> multiply = rfdepth::multiply;
  std::function<std::strong_ordering(const Ordinal&, const Ordinal&)> compare = rfdepth::compare;
};

struct CompareSuiteReport {
  std::uint64_t cases = 0;
  std::optional<std::string> first_mismatch;

  bool success() const { return !first_mismatch; }
};

/// Every pair combination with components <= bound (bound <= 64).
CompareSuiteReport exhaustive_compare_suite(std::uint64_t bound, const ArithmeticOps& ops = {});

struct Violation {
  std::string property;
  std::string term;
  std::string detail;
};

struct EnumerationReport {
  std::uint64_t terms = 0;
  std::uint64_t defined = 0;
  std::uint64_t undefined = 0;
  std::uint64_t inapplicable = 0;
  std::uint64_t checks = 0;
  std::vector<Violation> violations;

  bool success() const { return violations.empty(); }
};

using Evaluator = std::function<Evaluation(const GroupTerm&)>;

/// All terms of height <= height (atoms have height 1) built with fp, ds, wr,
/// E and embed3, checked against the calculus' structural properties.
/// Requires height <= 3 and atoms.size() <= 6.
EnumerationReport term_enumeration_suite(std::uint64_t height, std::span<const GroupTerm> atoms,
                                         const Evaluator& eval = rfdepth::evaluate);

/// {Trivial, C(2), A5, Z, Lam, LamBar(3)}.
std::vector<GroupTerm> default_atoms();

}  // namespace rfdepth::oracle
