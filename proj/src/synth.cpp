#include "rfdepth/synth.hpp"

#include <limits>
#include <stdexcept>

#include "rfdepth/errors.hpp"
#include "rfdepth/textio.hpp"

namespace rfdepth {

namespace {

Ordinal nat(std::uint64_t n) { return Ordinal::natural(Natural(n)); }

/// a = rest + w with a limit; returns rest.
Ordinal drop_one_omega(const Ordinal& a) {
  std::vector<CnfTerm> terms(a.terms().begin(), a.terms().end());
  terms.back().coefficient -= 1;
  if (terms.back().coefficient == 0) terms.pop_back();
  return Ordinal::from_terms(std::move(terms));
}

std::string reason_text(Realizability::Reason reason) {
  switch (reason) {
    case Realizability::Reason::finite_above_one:
      return "finite ordinal greater than 1";
    case Realizability::Reason::successor_of_successor:
      return "successor of a successor ordinal";
    case Realizability::Reason::none:
      break;
  }
  return "";
}

GroupTerm synthesize_limit(const Ordinal& a, bool fg_required) {
  if (a == Ordinal::omega()) return integers();
  if (a.least_exponent() == nat(1)) {
    // a = l + w: A5 wr B has depth l + 1 + w = a.
    return wreath(a5(), synthesize(drop_one_omega(a), fg_required));
  }
  GroupTerm family = free_product_family(a);
  return fg_required ? three_gen_embed(family) : family;
}

GroupTerm synthesize_successor(const Ordinal& limit, bool fg_required) {
  const bool below_omega_squared = limit.terms().size() == 1 && limit.least_exponent() == nat(1);
  if (below_omega_squared) {
    const Natural& n = limit.terms().front().coefficient;
    if (n > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("M(n, d) parameter exceeds 64 bits");
    }
    return m_fp(static_cast<std::uint64_t>(n), 3);
  }
  if (limit.least_exponent() == nat(1)) {
    return central_wreath_quotient(lambda_bar(3), synthesize(drop_one_omega(limit), fg_required));
  }
  return successor_witness(limit);
}

}  // namespace

GroupTerm synthesize(const Ordinal& a, bool fg_required) {
  const Realizability r = classify_realizable(a);
  if (!r.realizable) {
    throw NotRealizable(print_ordinal(a) + " is not realizable: " + reason_text(r.reason));
  }
  if (a.is_zero()) return trivial();
  if (a == nat(1)) return cyclic(2);
  const OrdinalShape shape = analyze(a);
  if (shape.kind == OrdinalShape::Kind::limit) return synthesize_limit(a, fg_required);
  return synthesize_successor(*shape.predecessor, fg_required);
}

CertificateNode certify_roundtrip(const Ordinal& a, bool fg_required, const DepthOptions& options) {
  const GroupTerm witness = synthesize(a, fg_required);
  DepthOutcome outcome = [&] {
    try {
      return depth(witness, options);
    } catch (const RuleInapplicable& e) {
      throw CertificationFailure("witness " + print_term(witness) + " is not certifiable: " +
                                 e.what());
    }
  }();
  if (!outcome.result.is_defined() || outcome.result.value() != a) {
    throw CertificationFailure("witness " + print_term(witness) + " has depth " +
                               print_depth(outcome.result) + ", expected " + print_ordinal(a));
  }
  if (fg_required && !attrs(witness).finitely_generated) {
    throw CertificationFailure("witness " + print_term(witness) + " is not finitely generated");
  }
  if (!validate_certificate(witness, outcome.certificate, options)) {
    throw CertificationFailure("certificate for " + print_term(witness) + " does not validate");
  }
  return std::move(outcome.certificate);
}

}  // namespace rfdepth
