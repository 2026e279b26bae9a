#pragma once

// Depth evaluation for construction terms.
//
// Each constructor has exactly one rule. A rule either produces a depth,
// proves that no depth exists (Undefined), or fails a precondition, in which
// case the calculus cannot certify the term and RuleInapplicable is raised.
// Evaluation emits a certificate tree mirroring the term; validation replays
// every rule bottom-up against freshly computed attributes.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rfdepth/group_term.hpp"
#include "rfdepth/ordinal.hpp"

namespace rfdepth {

class DepthResult {
 public:
  static DepthResult defined(Ordinal value) { return DepthResult(std::move(value)); }
  static DepthResult undefined() { return DepthResult(); }

  bool is_defined() const { return value_.has_value(); }
  /// Precondition: is_defined().
  const Ordinal& value() const { return *value_; }

  friend bool operator==(const DepthResult&, const DepthResult&) = default;

 private:
  DepthResult() = default;
  explicit DepthResult(Ordinal value) : value_(std::move(value)) {}
  std::optional<Ordinal> value_;
};

/// Attribute assertions a rule checks before firing.
enum class Fact {
  base_nontrivial,
  base_perfect,
  base_central_core,
  top_infinite,
  top_depth_defined,
  inner_depth_defined,
  inner_depth_limit,
  inner_depth_at_least_omega_squared,
  target_members_limit,            // least CNF exponent >= 2
  target_at_least_omega_squared,
  target_not_limit_plus_omega,
};

std::string describe(Fact fact);

struct FamilyMember;

struct CertificateNode {
  std::string constructor;
  std::string rule_id;
  std::string justification;
  DepthResult result = DepthResult::undefined();
  std::vector<Fact> preconditions;
  std::vector<CertificateNode> children;
  /// Sampled members for family constructors.
  std::vector<FamilyMember> members;
};

/// Certificates of identical witnesses are shared, so a certificate is a DAG.
struct FamilyMember {
  std::uint64_t index = 0;
  Ordinal element;
  GroupTerm witness;
  std::shared_ptr<const CertificateNode> certificate;
};

struct DepthOptions {
  /// Family members certified per family node.
  std::uint64_t samples = 3;
};

struct DepthOutcome {
  DepthResult result;
  CertificateNode certificate;
};

/// Throws RuleInapplicable when some node's rule precondition fails and no
/// Undefined subterm decides the answer first.
DepthOutcome depth(const GroupTerm& t, const DepthOptions& options = {});

GroupAttr attrs(const GroupTerm& t);

/// Non-throwing evaluation used by the property suites.
struct Evaluation {
  enum class Status { defined, undefined, inapplicable };
  Status status;
  DepthResult result = DepthResult::undefined();
  GroupAttr attributes;
  /// Message of the RuleInapplicable error when status == inapplicable.
  std::string failure;

  bool operator==(const Evaluation&) const = default;
};

Evaluation evaluate(const GroupTerm& t);

/// Throws ShapeMismatch when the certificate tree does not have the term's
/// shape (child counts); every other defect yields false.
bool validate_certificate(const GroupTerm& t, const CertificateNode& certificate,
                          const DepthOptions& options = {});

/// Rule id a constructor must carry when no child is Undefined.
std::string rule_for(const GroupTerm& t);

/// Rule id for the absorbing node placed above an Undefined child.
inline constexpr const char* kUndefinedRule = "U";

}  // namespace rfdepth
