#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rfdepth {

/// Byte offsets [start, end) into a parsed input.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ordinal -------------------------------------------------------------------

class NotLimit : public Error {
 public:
  using Error::Error;
};

class InvalidDepthShape : public Error {
 public:
  using Error::Error;
};

// groupterm -----------------------------------------------------------------

class MalformedTerm : public Error {
 public:
  using Error::Error;
};

/// The calculus has no rule that certifies this term. Distinct from an
/// Undefined depth, which is a proof that no depth exists.
class RuleInapplicable : public Error {
 public:
  RuleInapplicable(std::string node, std::string rule_id, std::string precondition)
      : Error(rule_id + " not applicable at " + node + ": " + precondition),
        node_(std::move(node)),
        rule_id_(std::move(rule_id)),
        precondition_(std::move(precondition)) {}

  const std::string& node() const { return node_; }
  const std::string& rule_id() const { return rule_id_; }
  const std::string& precondition() const { return precondition_; }

 private:
  std::string node_;
  std::string rule_id_;
  std::string precondition_;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

// synth ---------------------------------------------------------------------

class NotRealizable : public Error {
 public:
  using Error::Error;
};

class CertificationFailure : public Error {
 public:
  using Error::Error;
};

// textio --------------------------------------------------------------------

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan span)
      : Error(message + " at offset " + std::to_string(span.start)), span_(span) {}

  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

class ArityError : public ParseError {
 public:
  using ParseError::ParseError;
};

class ParameterRangeError : public ParseError {
 public:
  using ParseError::ParseError;
};

class EpsilonZeroExceeded : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace rfdepth
