#include "rfdepth/depth.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>
#include <utility>

#include "rfdepth/errors.hpp"
#include "rfdepth/synth.hpp"
#include "rfdepth/textio.hpp"

namespace rfdepth {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const Ordinal& omega() {
  static const Ordinal w = Ordinal::omega();
  return w;
}

Ordinal nat(std::uint64_t n) { return Ordinal::natural(Natural(n)); }

Ordinal omega_times(std::uint64_t n) { return Ordinal::omega_power(nat(1), Natural(n)); }

const Ordinal& omega_squared() {
  static const Ordinal w2 = Ordinal::omega_power(nat(2));
  return w2;
}

const FundamentalSequence* family_sequence(const GroupTerm& t) {
  return std::visit(overloaded{
                        [](const term::FreeProductFamily& f) { return &f.seq; },
                        [](const term::DirectSumFamily& f) { return &f.seq; },
                        [](const term::SuccessorWitness& f) { return &f.seq; },
                        [](const auto&) -> const FundamentalSequence* { return nullptr; },
                    },
                    t.node());
}

struct RuleOutcome {
  std::string rule_id;
  std::string justification;
  std::vector<Fact> facts;
  /// Empty when a precondition failed.
  std::optional<DepthResult> result;
  std::optional<Fact> failed;
};

// Context a rule sees: the node itself plus its children's attributes and
// depths, in argument order.
struct RuleInput {
  const GroupTerm& term;
  std::span<const GroupAttr> child_attrs;
  std::span<const DepthResult> child_results;
};

bool holds(Fact fact, const RuleInput& in) {
  const auto& attrs = in.child_attrs;
  const auto& results = in.child_results;
  switch (fact) {
    case Fact::base_nontrivial:
      return attrs[0].cardinality != Cardinality::trivial;
    case Fact::base_perfect:
      return attrs[0].perfect;
    case Fact::base_central_core:
      return attrs[0].central_core.has_value();
    case Fact::top_infinite:
      return attrs[1].cardinality == Cardinality::infinite;
    case Fact::top_depth_defined:
      return results[1].is_defined();
    case Fact::inner_depth_defined:
      return results[0].is_defined();
    case Fact::inner_depth_limit:
      return results[0].is_defined() && is_limit(results[0].value());
    case Fact::inner_depth_at_least_omega_squared:
      return results[0].is_defined() && results[0].value() >= omega_squared();
    case Fact::target_members_limit:
    case Fact::target_not_limit_plus_omega: {
      const auto* seq = family_sequence(in.term);
      return seq != nullptr && seq->target().least_exponent() >= nat(2);
    }
    case Fact::target_at_least_omega_squared: {
      const auto* seq = family_sequence(in.term);
      return seq != nullptr && seq->target() >= omega_squared();
    }
  }
  return false;
}

const char* justification_for(const std::string& rule_id, const GroupTerm& t) {
  if (rule_id == kUndefinedRule) return "a subgroup with no depth forbids a depth for the whole group";
  if (rule_id == "R1") return "the trivial group has depth 0";
  if (rule_id == "R2") return "a nontrivial finite group has depth 1";
  if (rule_id == "R3") return "an infinite residually finite group has depth w";
  if (rule_id == "R4") {
    return "free product of nontrivial groups: sup of factor depths if the sup is a limit, "
           "sup + w if it is a successor";
  }
  if (rule_id == "R5") {
    return "direct sum of nontrivial groups: sup of factor depths if the sup is a limit or is "
           "attained by finitely many factors, sup + w otherwise";
  }
  if (rule_id == "R6") {
    return "wreath product A wr B with A nontrivial perfect and B infinite: depth(B) + depth(A), "
           "plus w when depth(A) is a successor";
  }
  if (rule_id == "R7") {
    return "A wr B with the finite central cores of all base copies identified, A perfect with "
           "central core index g, B infinite: depth(B) + w*g + 1";
  }
  if (rule_id == "R8") {
    return std::visit(
        overloaded{
            [](const term::Lambda&) {
              return "certified atom: central extension of Sp(2g,Z) whose residual core is "
                     "infinite cyclic and residually finite, depth w*2";
            },
            [](const term::LambdaBar&) {
              return "certified atom: perfect central extension of Sp(2g,Z) with finite central "
                     "residual core Z/d, depth w + 1";
            },
            [](const term::GammaFP&) {
              return "certified atom: finitely presented amalgam whose iterated residual cores "
                     "vanish at stage n, depth w*n";
            },
            [](const term::MFP&) {
              return "certified atom: finitely presented central extension by Z/d whose n-th "
                     "residual core is its centre, depth w*n + 1";
            },
            [](const term::NoFiniteQuotients&) {
              return "a group with no nontrivial finite quotients is not a-residually finite for "
                     "any a";
            },
            [](const auto&) { return ""; },
        },
        t.node());
  }
  if (rule_id == "R12") {
    return "controlled embedding into a 3-generator group keeps a limit depth >= w^2, since "
           "w + a = a";
  }
  if (rule_id == "R13") {
    return "free product or direct sum over a fundamental sequence of limit depths: depth is "
           "the supremum";
  }
  if (rule_id == "R14") {
    return "amalgam of successor witnesses along their common central Z/3, made finitely "
           "generated: depth is target + 1";
  }
  return "";
}

const char* rule_name(const std::string& rule_id) {
  if (rule_id == "R6") return "wreath product rule";
  if (rule_id == "R7") return "central wreath quotient rule";
  if (rule_id == "R12") return "3-generator embedding rule";
  if (rule_id == "R13") return "fundamental-sequence family rule";
  if (rule_id == "R14") return "successor witness rule";
  return "depth calculus";
}

std::vector<Fact> required_facts(const GroupTerm& t) {
  return std::visit(
      overloaded{
          [](const term::Wreath&) {
            return std::vector<Fact>{Fact::base_nontrivial, Fact::base_perfect,
                                     Fact::top_infinite, Fact::top_depth_defined};
          },
          [](const term::CentralWreathQuotient&) {
            return std::vector<Fact>{Fact::base_perfect, Fact::base_central_core,
                                     Fact::top_infinite, Fact::top_depth_defined};
          },
          [](const term::ThreeGenEmbed&) {
            return std::vector<Fact>{Fact::inner_depth_defined, Fact::inner_depth_limit,
                                     Fact::inner_depth_at_least_omega_squared};
          },
          [](const term::FreeProductFamily&) {
            return std::vector<Fact>{Fact::target_members_limit};
          },
          [](const term::DirectSumFamily&) {
            return std::vector<Fact>{Fact::target_members_limit};
          },
          [](const term::SuccessorWitness&) {
            return std::vector<Fact>{Fact::target_at_least_omega_squared,
                                     Fact::target_not_limit_plus_omega};
          },
          [](const auto&) { return std::vector<Fact>{}; },
      },
      t.node());
}

Ordinal sup_of(std::span<const DepthResult> results) {
  Ordinal sup;
  for (const auto& r : results) sup = std::max(sup, r.value());
  return sup;
}

DepthResult fire(const RuleInput& in) {
  const auto& results = in.child_results;
  const auto defined = [](Ordinal v) { return DepthResult::defined(std::move(v)); };
  return std::visit(
      overloaded{
          [&](const term::Trivial&) { return defined(Ordinal()); },
          [&](const term::FiniteCyclic&) { return defined(nat(1)); },
          [&](const term::A5&) { return defined(nat(1)); },
          [&](const term::Integers&) { return defined(omega()); },
          [&](const term::FreeGroup&) { return defined(omega()); },
          [&](const term::Symplectic&) { return defined(omega()); },
          [&](const term::Lambda&) { return defined(omega_times(2)); },
          [&](const term::LambdaBar&) { return defined(omega() + nat(1)); },
          [&](const term::GammaFP& g) { return defined(omega_times(g.n)); },
          [&](const term::MFP& m) { return defined(omega_times(m.n) + nat(1)); },
          [&](const term::NoFiniteQuotients&) { return DepthResult::undefined(); },
          [&](const term::FreeProduct&) {
            Ordinal sup = sup_of(results);
            return defined(is_successor(sup) ? sup + omega() : sup);
          },
          [&](const term::DirectSum&) {
            // A finite list attains its supremum finitely often.
            return defined(sup_of(results));
          },
          [&](const term::Wreath&) {
            const Ordinal& base = results[0].value();
            Ordinal out = results[1].value() + base;
            if (is_successor(base)) out = out + omega();
            return defined(std::move(out));
          },
          [&](const term::CentralWreathQuotient&) {
            const Ordinal& gamma = *in.child_attrs[0].central_core;
            return defined(results[1].value() + omega() * gamma + nat(1));
          },
          [&](const term::ThreeGenEmbed&) { return results[0]; },
          [&](const term::FreeProductFamily& f) { return defined(f.seq.target()); },
          [&](const term::DirectSumFamily& f) { return defined(f.seq.target()); },
          [&](const term::SuccessorWitness& f) { return defined(f.seq.target() + nat(1)); },
      },
      in.term.node());
}

RuleOutcome apply_rule(const RuleInput& in) {
  RuleOutcome out;
  const bool undefined_child = std::any_of(in.child_results.begin(), in.child_results.end(),
                                           [](const DepthResult& r) { return !r.is_defined(); });
  out.rule_id = undefined_child ? kUndefinedRule : rule_for(in.term);
  out.justification = justification_for(out.rule_id, in.term);
  if (undefined_child) {
    out.result = DepthResult::undefined();
    return out;
  }
  for (Fact fact : required_facts(in.term)) {
    out.facts.push_back(fact);
    if (!holds(fact, in)) {
      out.failed = fact;
      return out;
    }
  }
  out.result = fire(in);
  return out;
}

bool all_of_attrs(std::span<const GroupAttr> attrs, bool GroupAttr::*field) {
  return std::all_of(attrs.begin(), attrs.end(), [&](const GroupAttr& a) { return a.*field; });
}

Cardinality wreath_cardinality(const GroupAttr& base, const GroupAttr& top) {
  if (base.cardinality == Cardinality::trivial) return top.cardinality;
  if (top.cardinality == Cardinality::trivial) return base.cardinality;
  if (base.cardinality == Cardinality::infinite || top.cardinality == Cardinality::infinite) {
    return Cardinality::infinite;
  }
  return Cardinality::finite_nontrivial;
}

GroupAttr node_attrs(const GroupTerm& t, std::span<const GroupAttr> children,
                     const RuleOutcome& outcome) {
  using C = Cardinality;
  const auto make = [](C card, bool perfect, bool fg, bool fp,
                       std::optional<Ordinal> core = std::nullopt) {
    return GroupAttr{card, perfect, fg, fp, std::move(core)};
  };
  const auto combined = [&] {
    return make(C::infinite, all_of_attrs(children, &GroupAttr::perfect),
                all_of_attrs(children, &GroupAttr::finitely_generated),
                all_of_attrs(children, &GroupAttr::finitely_presented));
  };
  const auto wreath_like = [&](std::optional<Ordinal> core) {
    return make(wreath_cardinality(children[0], children[1]),
                children[0].perfect && children[1].perfect,
                children[0].finitely_generated && children[1].finitely_generated, false,
                std::move(core));
  };
  return std::visit(
      overloaded{
          [&](const term::Trivial&) { return make(C::trivial, true, true, true); },
          [&](const term::FiniteCyclic&) { return make(C::finite_nontrivial, false, true, true); },
          [&](const term::A5&) { return make(C::finite_nontrivial, true, true, true); },
          [&](const term::Integers&) { return make(C::infinite, false, true, true); },
          [&](const term::FreeGroup&) { return make(C::infinite, false, true, true); },
          [&](const term::Symplectic& s) { return make(C::infinite, s.genus >= 3, true, true); },
          [&](const term::Lambda&) { return make(C::infinite, false, true, true); },
          [&](const term::LambdaBar&) { return make(C::infinite, true, true, true, nat(1)); },
          [&](const term::GammaFP&) { return make(C::infinite, false, true, true); },
          [&](const term::MFP& m) { return make(C::infinite, false, true, true, nat(m.n)); },
          [&](const term::NoFiniteQuotients&) { return make(C::infinite, true, true, false); },
          [&](const term::FreeProduct&) { return combined(); },
          [&](const term::DirectSum&) {
            GroupAttr a = combined();
            const bool all_finite =
                std::all_of(children.begin(), children.end(), [](const GroupAttr& c) {
                  return c.cardinality != Cardinality::infinite;
                });
            if (all_finite) a.cardinality = C::finite_nontrivial;
            return a;
          },
          [&](const term::Wreath&) { return wreath_like(std::nullopt); },
          [&](const term::CentralWreathQuotient&) {
            std::optional<Ordinal> core;
            if (outcome.result && outcome.result->is_defined() && outcome.rule_id == "R7") {
              core = div_omega(*analyze(outcome.result->value()).predecessor);
            }
            return wreath_like(std::move(core));
          },
          [&](const term::ThreeGenEmbed&) { return make(C::infinite, false, true, false); },
          [&](const term::FreeProductFamily&) { return make(C::infinite, false, false, false); },
          [&](const term::DirectSumFamily&) { return make(C::infinite, false, false, false); },
          [&](const term::SuccessorWitness& f) {
            return make(C::infinite, false, true, false, div_omega(f.seq.target()));
          },
      },
      t.node());
}

/// Target depth and generation requirement of the n-th sampled member.
struct MemberSpec {
  Ordinal element;
  Ordinal depth;
  bool fg_required;
};

MemberSpec member_spec(const GroupTerm& t, std::uint64_t n) {
  const FundamentalSequence& seq = *family_sequence(t);
  Ordinal element = seq.element(n);
  if (std::holds_alternative<term::SuccessorWitness>(t.node())) {
    Ordinal d = element + nat(1);
    return {std::move(element), std::move(d), true};
  }
  Ordinal d = element;
  return {std::move(element), std::move(d), false};
}

struct NodeEval {
  Evaluation::Status status = Evaluation::Status::defined;
  GroupAttr attrs;
  DepthResult result = DepthResult::undefined();
  CertificateNode certificate;
  std::optional<RuleInapplicable> failure;
};

// Member witnesses recur across family nodes; their certificates are shared.
struct EvalContext {
  std::uint64_t samples = 0;
  std::unordered_map<std::string, std::shared_ptr<const CertificateNode>> members;
};

NodeEval eval_node(const GroupTerm& t, EvalContext& ctx) {
  const auto kids = t.children();
  std::vector<NodeEval> sub;
  sub.reserve(kids.size());
  for (const auto& k : kids) sub.push_back(eval_node(k, ctx));

  std::vector<GroupAttr> child_attrs;
  std::vector<DepthResult> child_results;
  for (const auto& s : sub) {
    child_attrs.push_back(s.attrs);
    child_results.push_back(s.result);
  }

  NodeEval out;
  for (auto& s : sub) out.certificate.children.push_back(std::move(s.certificate));
  out.certificate.constructor = t.label();

  const bool undefined_child =
      std::any_of(sub.begin(), sub.end(),
                  [](const NodeEval& s) { return s.status == Evaluation::Status::undefined; });
  if (!undefined_child) {
    for (auto& s : sub) {
      if (s.status == Evaluation::Status::inapplicable) {
        out.status = Evaluation::Status::inapplicable;
        out.failure = std::move(s.failure);
        out.attrs = node_attrs(t, child_attrs, RuleOutcome{});
        return out;
      }
    }
  }

  RuleOutcome outcome = apply_rule(RuleInput{t, child_attrs, child_results});
  out.attrs = node_attrs(t, child_attrs, outcome);
  out.certificate.rule_id = outcome.rule_id;
  out.certificate.justification = outcome.justification;
  out.certificate.preconditions = outcome.facts;

  if (!outcome.result) {
    out.status = Evaluation::Status::inapplicable;
    out.failure.emplace(print_term(t), outcome.rule_id,
                        describe(*outcome.failed) + ", required by the " +
                            rule_name(outcome.rule_id));
    return out;
  }
  out.result = *outcome.result;
  out.certificate.result = out.result;
  out.status = out.result.is_defined() ? Evaluation::Status::defined
                                       : Evaluation::Status::undefined;

  if (family_sequence(t) != nullptr) {
    for (std::uint64_t n = 1; n <= ctx.samples; ++n) {
      MemberSpec spec = member_spec(t, n);
      GroupTerm witness = synthesize(spec.depth, spec.fg_required);
      auto& cached = ctx.members[print_term(witness)];
      if (!cached) {
        NodeEval member = eval_node(witness, ctx);
        if (member.status != Evaluation::Status::defined || member.result.value() != spec.depth) {
          throw CertificationFailure("family member " + std::to_string(n) + " of " + t.label() +
                                     " does not realize its sequence element");
        }
        cached = std::make_shared<const CertificateNode>(std::move(member.certificate));
      }
      out.certificate.members.push_back(
          FamilyMember{n, std::move(spec.element), std::move(witness), cached});
    }
  }
  return out;
}

struct Checked {
  GroupAttr attrs;
  DepthResult result;
  // The node honestly records a failed precondition. Only acceptable below an
  // Undefined sibling, which decides the answer first.
  bool inapplicable = false;
};

struct CheckContext {
  std::uint64_t samples = 0;
  std::unordered_map<const CertificateNode*, std::optional<Checked>> shared;
};

std::optional<Checked> check_node(const GroupTerm& t, const CertificateNode& c,
                                  CheckContext& ctx) {
  const auto kids = t.children();
  if (c.children.size() != kids.size()) {
    throw ShapeMismatch("certificate node " + c.constructor + " has " +
                        std::to_string(c.children.size()) + " children, term " + t.label() +
                        " has " + std::to_string(kids.size()));
  }
  std::vector<GroupAttr> child_attrs;
  std::vector<DepthResult> child_results;
  bool ok = true;
  bool undefined_child = false;
  bool inapplicable_child = false;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    auto sub = check_node(kids[i], c.children[i], ctx);
    if (!sub) {
      ok = false;
      continue;
    }
    if (sub->inapplicable) {
      inapplicable_child = true;
    } else if (!sub->result.is_defined()) {
      undefined_child = true;
    }
    child_attrs.push_back(std::move(sub->attrs));
    child_results.push_back(std::move(sub->result));
  }
  if (!ok || c.constructor != t.label()) return std::nullopt;

  if (inapplicable_child && !undefined_child) {
    // Failure propagated from below; the node carries no rule of its own.
    if (!c.rule_id.empty() || !c.justification.empty() || !c.preconditions.empty() ||
        c.result.is_defined() || !c.members.empty()) {
      return std::nullopt;
    }
    return Checked{node_attrs(t, child_attrs, RuleOutcome{}), DepthResult::undefined(), true};
  }

  RuleOutcome outcome = apply_rule(RuleInput{t, child_attrs, child_results});
  if (!outcome.result) {
    if (c.rule_id != outcome.rule_id || c.justification != outcome.justification ||
        c.preconditions != outcome.facts || c.result.is_defined() || !c.members.empty()) {
      return std::nullopt;
    }
    return Checked{node_attrs(t, child_attrs, outcome), DepthResult::undefined(), true};
  }
  if (c.rule_id != outcome.rule_id || c.justification != outcome.justification ||
      c.preconditions != outcome.facts || c.result != *outcome.result) {
    return std::nullopt;
  }

  if (family_sequence(t) != nullptr && outcome.result->is_defined()) {
    for (const auto& m : c.members) {
      if (m.index == 0) return std::nullopt;
      MemberSpec spec = member_spec(t, m.index);
      if (m.element != spec.element) return std::nullopt;
      if (!(m.witness == synthesize(spec.depth, spec.fg_required))) return std::nullopt;
      if (!m.certificate) return std::nullopt;
      auto it = ctx.shared.find(m.certificate.get());
      if (it == ctx.shared.end()) {
        it = ctx.shared.emplace(m.certificate.get(), check_node(m.witness, *m.certificate, ctx))
                 .first;
      }
      const auto& sub = it->second;
      if (!sub || !sub->result.is_defined() || sub->result.value() != spec.depth) {
        return std::nullopt;
      }
    }
    for (std::uint64_t n = 1; n <= ctx.samples; ++n) {
      const bool supplied = std::any_of(c.members.begin(), c.members.end(),
                                        [&](const FamilyMember& m) { return m.index == n; });
      if (supplied) continue;
      MemberSpec spec = member_spec(t, n);
      EvalContext fresh_ctx{ctx.samples, {}};
      NodeEval fresh = eval_node(synthesize(spec.depth, spec.fg_required), fresh_ctx);
      if (fresh.status != Evaluation::Status::defined || fresh.result.value() != spec.depth) {
        return std::nullopt;
      }
    }
  }
  return Checked{node_attrs(t, child_attrs, outcome), *outcome.result};
}

}  // namespace

std::string describe(Fact fact) {
  switch (fact) {
    case Fact::base_nontrivial:
      return "base group must be nontrivial";
    case Fact::base_perfect:
      return "base group must be perfect";
    case Fact::base_central_core:
      return "base group must have a finite nontrivial central residual core";
    case Fact::top_infinite:
      return "top group must be infinite";
    case Fact::top_depth_defined:
      return "top group must have a defined depth";
    case Fact::inner_depth_defined:
      return "embedded group must have a defined depth";
    case Fact::inner_depth_limit:
      return "embedded group's depth must be a limit ordinal";
    case Fact::inner_depth_at_least_omega_squared:
      return "embedded group's depth must be at least w^2";
    case Fact::target_members_limit:
      return "every element of the target's fundamental sequence must be a limit ordinal";
    case Fact::target_at_least_omega_squared:
      return "target must be at least w^2";
    case Fact::target_not_limit_plus_omega:
      return "target must not have the form l + w";
  }
  return "";
}

std::string rule_for(const GroupTerm& t) {
  return std::visit(overloaded{
                        [](const term::Trivial&) { return "R1"; },
                        [](const term::FiniteCyclic&) { return "R2"; },
                        [](const term::A5&) { return "R2"; },
                        [](const term::Integers&) { return "R3"; },
                        [](const term::FreeGroup&) { return "R3"; },
                        [](const term::Symplectic&) { return "R3"; },
                        [](const term::FreeProduct&) { return "R4"; },
                        [](const term::DirectSum&) { return "R5"; },
                        [](const term::Wreath&) { return "R6"; },
                        [](const term::CentralWreathQuotient&) { return "R7"; },
                        [](const term::ThreeGenEmbed&) { return "R12"; },
                        [](const term::FreeProductFamily&) { return "R13"; },
                        [](const term::DirectSumFamily&) { return "R13"; },
                        [](const term::SuccessorWitness&) { return "R14"; },
                        [](const auto&) { return "R8"; },
                    },
                    t.node());
}

DepthOutcome depth(const GroupTerm& t, const DepthOptions& options) {
  EvalContext ctx{options.samples, {}};
  NodeEval e = eval_node(t, ctx);
  if (e.status == Evaluation::Status::inapplicable) throw *e.failure;
  return DepthOutcome{std::move(e.result), std::move(e.certificate)};
}

GroupAttr attrs(const GroupTerm& t) {
  EvalContext ctx;
  return eval_node(t, ctx).attrs;
}

Evaluation evaluate(const GroupTerm& t) {
  EvalContext ctx;
  NodeEval e = eval_node(t, ctx);
  Evaluation out{e.status, e.result, e.attrs, {}};
  if (e.failure) out.failure = e.failure->what();
  return out;
}

bool validate_certificate(const GroupTerm& t, const CertificateNode& certificate,
                          const DepthOptions& options) {
  CheckContext ctx{options.samples, {}};
  const auto checked = check_node(t, certificate, ctx);
  return checked && !checked->inapplicable;
}

}  // namespace rfdepth
