#include "rfdepth/oracle.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "rfdepth/textio.hpp"

namespace rfdepth::oracle {

Pair pair_add(Pair a, Pair b) {
  if (b.first == 0) return {a.first, a.second + b.second};
  return {a.first + b.first, b.second};
}

Pair pair_times_nat(Pair a, std::uint64_t k) {
  if (k == 0) return {0, 0};
  if (a.first == 0) return {0, a.second * k};
  return {a.first * k, a.second};
}

Pair nat_times_pair(std::uint64_t k, Pair a) {
  if (k == 0) return {0, 0};
  return {a.first, k * a.second};
}

std::strong_ordering pair_compare(Pair a, Pair b) {
  if (a.first != b.first) return a.first <=> b.first;
  return a.second <=> b.second;
}

namespace {

Ordinal to_ordinal(Pair a) {
  std::vector<CnfTerm> terms;
  if (a.first > 0) terms.push_back({Ordinal::natural(1), Natural(a.first)});
  if (a.second > 0) terms.push_back({Ordinal(), Natural(a.second)});
  return Ordinal::from_terms(std::move(terms));
}

// Reads a CNF value below w^2 back into a pair by inspecting its terms.
std::optional<Pair> to_pair(const Ordinal& a) {
  Pair out{0, 0};
  for (const auto& t : a.terms()) {
    if (t.coefficient > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    const auto c = static_cast<std::uint64_t>(t.coefficient);
    const auto e = t.exponent.terms();
    if (e.empty()) {
      out.second = c;
    } else if (e.size() == 1 && e[0].exponent.terms().empty() && e[0].coefficient == 1) {
      out.first = c;
    } else {
      return std::nullopt;
    }
  }
  return out;
}

std::string show(Pair p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

const char* show(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return "less";
  if (o == std::strong_ordering::greater) return "greater";
  return "equal";
}

}  // namespace

CompareSuiteReport exhaustive_compare_suite(std::uint64_t bound, const ArithmeticOps& ops) {
  if (bound > 64) throw std::invalid_argument("exhaustive_compare_suite: bound must be <= 64");
  CompareSuiteReport report;
  std::vector<Pair> pairs;
  std::vector<Ordinal> ordinals;
  for (std::uint64_t p = 0; p <= bound; ++p) {
    for (std::uint64_t q = 0; q <= bound; ++q) {
      pairs.push_back({p, q});
      ordinals.push_back(to_ordinal({p, q}));
    }
  }
  const auto mismatch = [&](std::string what) {
    if (!report.first_mismatch) report.first_mismatch = std::move(what);
  };
  const auto check = [&](const char* op, Pair a, Pair b, const Ordinal& got, Pair expected) {
    const auto read = to_pair(got);
    if (!read || *read != expected) {
      mismatch(std::string(op) + ": " + show(a) + " " + show(b) + " gave " + print_ordinal(got) +
               ", expected " + show(expected));
    }
  };

  for (std::size_t i = 0; i < pairs.size() && report.success(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      const Pair a = pairs[i];
      const Pair b = pairs[j];
      ++report.cases;
      try {
        check("add", a, b, ops.add(ordinals[i], ordinals[j]), pair_add(a, b));
        const auto expected_order = pair_compare(a, b);
        const auto got_order = ops.compare(ordinals[i], ordinals[j]);
        if (got_order != expected_order) {
          mismatch("compare: " + show(a) + " " + show(b) + " gave " + show(got_order) +
                   ", expected " + show(expected_order));
        }
        const Ordinal k = Ordinal::natural(Natural(b.second));
        check("multiply", a, {0, b.second}, ops.multiply(ordinals[i], k),
              pair_times_nat(a, b.second));
        check("multiply", {0, b.second}, a, ops.multiply(k, ordinals[i]),
              nat_times_pair(b.second, a));
      } catch (const std::exception& e) {
        mismatch(std::string("exception on ") + show(a) + " " + show(b) + ": " + e.what());
      }
      if (!report.success()) break;
    }
  }
  return report;
}

namespace {

using Status = Evaluation::Status;

struct Enumerator {
  const Evaluator& eval;
  EnumerationReport& report;

  void violation(const char* property, const GroupTerm& t, std::string detail) {
    report.violations.push_back({property, print_term(t), std::move(detail)});
  }

  static bool same(const Evaluation& a, const Evaluation& b) {
    return a.status == b.status && a.result == b.result;
  }

  void check(const GroupTerm& t) {
    const Evaluation whole = eval(t);
    ++report.terms;
    switch (whole.status) {
      case Status::defined: ++report.defined; break;
      case Status::undefined: ++report.undefined; break;
      case Status::inapplicable: ++report.inapplicable; break;
    }

    if (whole.status == Status::defined) {
      const Ordinal& d = whole.result.value();
      ++report.checks;
      if (!classify_realizable(d).realizable) {
        violation("shape", t, "depth " + print_ordinal(d) + " is not 0, 1, a limit or limit + 1");
      }
      ++report.checks;
      const Cardinality card = whole.attributes.cardinality;
      const Cardinality expected = d.is_zero()                 ? Cardinality::trivial
                                   : d == Ordinal::natural(1)  ? Cardinality::finite_nontrivial
                                   : d.is_finite()             ? card  // shape already flagged
                                                               : Cardinality::infinite;
      const bool consistent = card == expected && !(d.is_finite() && d.finite_part() > 1);
      if (!consistent) {
        violation("cardinality", t,
                  "depth " + print_ordinal(d) + " is inconsistent with the group's cardinality");
      }
      ++report.checks;
      try {
        const CoreSignature sig = depth_to_core_signature(d);
        const bool central = std::holds_alternative<term::CentralWreathQuotient>(t.node()) ||
                             std::holds_alternative<term::MFP>(t.node()) ||
                             std::holds_alternative<term::SuccessorWitness>(t.node());
        if (central && sig.core_class != CoreClass::finite_nontrivial) {
          violation("core-signature", t, "central-core construction with trivial core class");
        }
        const bool family = std::holds_alternative<term::FreeProductFamily>(t.node()) ||
                            std::holds_alternative<term::DirectSumFamily>(t.node());
        if (family && sig.core_class != CoreClass::trivial) {
          violation("core-signature", t, "family construction with finite core class");
        }
      } catch (const std::exception& e) {
        violation("core-signature", t, e.what());
      }
      if (std::holds_alternative<term::Wreath>(t.node())) {
        ++report.checks;
        if (!is_limit(d)) violation("wreath-limit", t, "depth " + print_ordinal(d));
      }
    }

    check_monotone(t, whole);
    check_permutations(t, whole);
    check_flattening(t, whole);
  }

  void check_monotone(const GroupTerm& t, const Evaluation& whole) {
    const bool embeds_children =
        std::holds_alternative<term::FreeProduct>(t.node()) ||
        std::holds_alternative<term::DirectSum>(t.node()) ||
        std::holds_alternative<term::Wreath>(t.node()) ||
        std::holds_alternative<term::CentralWreathQuotient>(t.node()) ||
        std::holds_alternative<term::ThreeGenEmbed>(t.node());
    if (!embeds_children) return;
    for (const auto& part : t.children()) {
      const Evaluation p = eval(part);
      ++report.checks;
      if (p.status == Status::undefined && whole.status == Status::defined) {
        violation("monotonicity", t, "part " + print_term(part) + " has no depth but the whole does");
      }
      if (p.status == Status::defined && whole.status == Status::defined &&
          whole.result.value() < p.result.value()) {
        violation("monotonicity", t,
                  "part " + print_term(part) + " has larger depth " +
                      print_ordinal(p.result.value()));
      }
    }
  }

  static std::vector<GroupTerm> factors_of(const GroupTerm& t) {
    const auto kids = t.children();
    return {kids.begin(), kids.end()};
  }

  static GroupTerm rebuild(const GroupTerm& like, std::vector<GroupTerm> factors) {
    if (std::holds_alternative<term::FreeProduct>(like.node())) return free_product(std::move(factors));
    return direct_sum(std::move(factors));
  }

  static bool is_list(const GroupTerm& t) {
    return std::holds_alternative<term::FreeProduct>(t.node()) ||
           std::holds_alternative<term::DirectSum>(t.node());
  }

  void check_permutations(const GroupTerm& t, const Evaluation& whole) {
    if (!is_list(t)) return;
    auto factors = factors_of(t);
    if (factors.size() > 4) return;
    std::vector<std::size_t> order(factors.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    while (std::next_permutation(order.begin(), order.end())) {
      std::vector<GroupTerm> permuted;
      for (std::size_t i : order) permuted.push_back(factors[i]);
      const GroupTerm other = rebuild(t, std::move(permuted));
      ++report.checks;
      if (!same(whole, eval(other))) {
        violation("permutation", t, "differs from " + print_term(other));
      }
    }
  }

  void check_flattening(const GroupTerm& t, const Evaluation& whole) {
    if (!is_list(t)) return;
    std::vector<GroupTerm> flat;
    bool nested = false;
    for (const auto& f : t.children()) {
      if (f.node().index() == t.node().index()) {
        nested = true;
        for (const auto& g : f.children()) flat.push_back(g);
      } else {
        flat.push_back(f);
      }
    }
    if (!nested) return;
    const GroupTerm other = rebuild(t, std::move(flat));
    ++report.checks;
    if (!same(whole, eval(other))) {
      violation("flattening", t, "differs from " + print_term(other));
    }
  }
};

}  // namespace

EnumerationReport term_enumeration_suite(std::uint64_t height, std::span<const GroupTerm> atoms,
                                         const Evaluator& eval) {
  if (height > 3) throw std::invalid_argument("term_enumeration_suite: height must be <= 3");
  if (atoms.size() > 6) throw std::invalid_argument("term_enumeration_suite: at most 6 atoms");
  EnumerationReport report;
  if (height == 0 || atoms.empty()) return report;

  std::vector<GroupTerm> level(atoms.begin(), atoms.end());
  for (std::uint64_t h = 2; h <= height; ++h) {
    std::vector<GroupTerm> next = level;
    for (const auto& x : level) {
      next.push_back(three_gen_embed(x));
      for (const auto& y : level) {
        next.push_back(free_product({x, y}));
        next.push_back(direct_sum({x, y}));
        next.push_back(wreath(x, y));
        next.push_back(central_wreath_quotient(x, y));
      }
    }
    level = std::move(next);
  }

  Enumerator enumerator{eval, report};
  for (const auto& t : level) enumerator.check(t);
  return report;
}

std::vector<GroupTerm> default_atoms() {
  return {trivial(), cyclic(2), a5(), integers(), lambda(), lambda_bar(3)};
}

}  // namespace rfdepth::oracle
