#include "rfdepth/textio.hpp"

#include <cctype>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "rfdepth/errors.hpp"

namespace rfdepth {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Exponent towers deeper than this are refused rather than recursed into.
constexpr std::size_t kMaxNesting = 256;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }
  std::string_view text() const { return text_; }

  SourceSpan span_from(std::size_t start) const {
    return SourceSpan{std::min(start, text_.size()), std::min(std::max(start, pos_), text_.size())};
  }
  SourceSpan here() const {
    const std::size_t p = std::min(pos_, text_.size());
    return SourceSpan{p, std::min(p + 1, text_.size())};
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, here()); }

  std::string_view take_digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::string_view take_identifier() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// --- ordinals -----------------------------------------------------------------

class OrdinalParser {
 public:
  explicit OrdinalParser(Cursor& cur) : cur_(cur) {}

  Ordinal ordinal() {
    guard();
    cur_.skip_ws();
    const std::size_t start = cur_.pos();
    if (cur_.peek() == '0') {
      const auto digits = cur_.take_digits();
      if (digits.size() > 1) {
        throw ParseError("naturals may not have leading zeros", cur_.span_from(start));
      }
      --depth_;
      return Ordinal();
    }
    Ordinal sum = term();
    while (cur_.accept('+')) sum = sum + term();
    --depth_;
    return sum;
  }

 private:
  void guard() {
    if (++depth_ > kMaxNesting) {
      throw EpsilonZeroExceeded("exponent tower too deep for the notation", cur_.here());
    }
  }

  Natural nat() {
    cur_.skip_ws();
    const std::size_t start = cur_.pos();
    const auto digits = cur_.take_digits();
    if (digits.empty()) cur_.fail("expected a natural number");
    if (digits.front() == '0') {
      throw ParseError("expected a nonzero natural without leading zeros", cur_.span_from(start));
    }
    return Natural(std::string(digits));
  }

  bool accept_omega() {
    cur_.skip_ws();
    const auto rest = cur_.text().substr(cur_.pos());
    if (rest.empty() || rest.front() != 'w') return false;
    if (rest.size() > 1 && std::isalnum(static_cast<unsigned char>(rest[1]))) return false;
    cur_.advance(1);
    return true;
  }

  void reject_epsilon() {
    cur_.skip_ws();
    const std::size_t start = cur_.pos();
    const auto rest = cur_.text().substr(start);
    if (rest.substr(0, 2) == "e0") {
      cur_.advance(2);
      throw EpsilonZeroExceeded("epsilon_0 and beyond are not expressible", cur_.span_from(start));
    }
  }

  Ordinal term() {
    reject_epsilon();
    if (accept_omega()) {
      Ordinal exponent = Ordinal::natural(1);
      if (cur_.accept('^')) exponent = factor();
      Natural coefficient = 1;
      if (cur_.accept('*')) coefficient = nat();
      return Ordinal::omega_power(exponent, coefficient);
    }
    if (!std::isdigit(static_cast<unsigned char>(cur_.peek()))) {
      cur_.fail("expected 'w' or a natural number");
    }
    return Ordinal::natural(nat());
  }

  Ordinal factor() {
    reject_epsilon();
    if (accept_omega()) return Ordinal::omega();
    if (cur_.accept('(')) {
      Ordinal inner = ordinal();
      cur_.expect(')', "')'");
      return inner;
    }
    return Ordinal::natural(nat());
  }

  Cursor& cur_;
  std::size_t depth_ = 0;
};

// --- terms ----------------------------------------------------------------------

class TermParser {
 public:
  explicit TermParser(Cursor& cur) : cur_(cur) {}

  GroupTerm term() {
    if (++depth_ > kMaxNesting) cur_.fail("term nested too deeply");
    cur_.skip_ws();
    const std::size_t start = cur_.pos();
    GroupTerm out = head(start);
    --depth_;
    return out;
  }

 private:
  GroupTerm head(std::size_t start) {
    if (cur_.peek() == '1') {
      const auto digits = cur_.take_digits();
      if (digits != "1") throw ParseError("unknown constructor", cur_.span_from(start));
      return trivial();
    }
    const std::string name(cur_.take_identifier());
    if (name.empty()) cur_.fail("expected a constructor name");

    if (name == "A5") return a5();
    if (name == "Z") return integers();
    if (name == "Lam") return lambda();
    if (name == "NQ") return no_finite_quotients();

    if (name == "C" || name == "F" || name == "Sp" || name == "Gamma" || name == "LamBar" ||
        name == "M") {
      const auto params = parameters(name, start);
      return atom(name, params, cur_.span_from(start));
    }
    if (name == "fp" || name == "ds" || name == "wr" || name == "E" || name == "embed3") {
      auto args = arguments();
      const auto span = cur_.span_from(start);
      const auto arity = [&](bool ok, const char* expected) {
        if (!ok) throw ArityError(name + " takes " + expected + " arguments", span);
      };
      if (name == "fp" || name == "ds") {
        arity(args.size() >= 2, "at least 2");
        return name == "fp" ? free_product(std::move(args)) : direct_sum(std::move(args));
      }
      if (name == "embed3") {
        arity(args.size() == 1, "exactly 1");
        return three_gen_embed(std::move(args[0]));
      }
      arity(args.size() == 2, "exactly 2");
      if (name == "wr") return wreath(std::move(args[0]), std::move(args[1]));
      return central_wreath_quotient(std::move(args[0]), std::move(args[1]));
    }
    if (name == "fpfam" || name == "dsfam" || name == "succwit") {
      cur_.expect('(', "'('");
      Ordinal target = OrdinalParser(cur_).ordinal();
      cur_.expect(')', "')'");
      if (!is_limit(target)) {
        throw ParameterRangeError(name + " needs a limit ordinal target", cur_.span_from(start));
      }
      if (name == "fpfam") return free_product_family(target);
      if (name == "dsfam") return direct_sum_family(target);
      return successor_witness(target);
    }
    throw ParseError("unknown constructor '" + name + "'", cur_.span_from(start));
  }

  std::vector<std::uint64_t> parameters(const std::string& name, std::size_t start) {
    cur_.expect('(', "'('");
    std::vector<std::uint64_t> params;
    do {
      cur_.skip_ws();
      const std::size_t p = cur_.pos();
      const auto digits = cur_.take_digits();
      if (digits.empty()) cur_.fail("expected an integer parameter");
      std::uint64_t value = 0;
      for (char c : digits) {
        const std::uint64_t d = static_cast<std::uint64_t>(c - '0');
        if (value > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
          throw ParameterRangeError("parameter out of range", cur_.span_from(p));
        }
        value = value * 10 + d;
      }
      params.push_back(value);
    } while (cur_.accept(','));
    cur_.expect(')', "')'");

    const auto span = cur_.span_from(start);
    const std::size_t n = params.size();
    const bool ok = (name == "M") ? n == 2 : (name == "LamBar") ? (n == 1 || n == 2) : n == 1;
    if (!ok) throw ArityError(name + ": wrong number of parameters", span);
    return params;
  }

  GroupTerm atom(const std::string& name, const std::vector<std::uint64_t>& p, SourceSpan span) {
    const auto range = [&](bool ok, const char* message) {
      if (!ok) throw ParameterRangeError(name + ": " + message, span);
    };
    const auto odd_at_least_3 = [](std::uint64_t d) { return d >= 3 && d % 2 == 1; };
    if (name == "C") {
      range(p[0] >= 2, "order must be >= 2");
      return cyclic(p[0]);
    }
    if (name == "F") {
      range(p[0] >= 2, "rank must be >= 2");
      return free_group(p[0]);
    }
    if (name == "Sp") {
      range(p[0] >= 2, "genus must be >= 2");
      return symplectic(p[0]);
    }
    if (name == "Gamma") {
      range(p[0] >= 1, "n must be >= 1");
      return gamma_fp(p[0]);
    }
    if (name == "LamBar") {
      range(odd_at_least_3(p[0]), "d must be odd >= 3");
      const std::uint64_t genus = p.size() == 2 ? p[1] : 3;
      range(genus >= 3, "genus must be >= 3");
      return lambda_bar(p[0], genus);
    }
    range(p[0] >= 1, "n must be >= 1");
    range(odd_at_least_3(p[1]), "d must be odd >= 3");
    return m_fp(p[0], p[1]);
  }

  std::vector<GroupTerm> arguments() {
    cur_.expect('(', "'('");
    std::vector<GroupTerm> args;
    do {
      args.push_back(term());
    } while (cur_.accept(','));
    cur_.expect(')', "')'");
    return args;
  }

  Cursor& cur_;
  std::size_t depth_ = 0;
};

void print_ordinal_to(std::ostream& os, const Ordinal& a) {
  if (a.is_zero()) {
    os << '0';
    return;
  }
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) os << " + ";
    first = false;
    const Ordinal& e = t.exponent;
    if (e.is_zero()) {
      os << t.coefficient;
      continue;
    }
    os << 'w';
    if (e == Ordinal::natural(1)) {
      // plain w
    } else if (e.is_finite()) {
      os << '^' << e.finite_part();
    } else if (e == Ordinal::omega()) {
      os << "^w";
    } else {
      os << "^(";
      print_ordinal_to(os, e);
      os << ')';
    }
    if (t.coefficient > 1) os << '*' << t.coefficient;
  }
}

void print_term_to(std::ostream& os, const GroupTerm& t) {
  const auto list = [&](const char* name) {
    os << name << '(';
    bool first = true;
    for (const auto& c : t.children()) {
      if (!first) os << ", ";
      first = false;
      print_term_to(os, c);
    }
    os << ')';
  };
  std::visit(overloaded{
                 [&](const term::Trivial&) { os << '1'; },
                 [&](const term::FiniteCyclic& c) { os << "C(" << c.order << ')'; },
                 [&](const term::A5&) { os << "A5"; },
                 [&](const term::Integers&) { os << 'Z'; },
                 [&](const term::FreeGroup& f) { os << "F(" << f.rank << ')'; },
                 [&](const term::Symplectic& s) { os << "Sp(" << s.genus << ')'; },
                 [&](const term::Lambda&) { os << "Lam"; },
                 [&](const term::LambdaBar& l) {
                   os << "LamBar(" << l.d;
                   if (l.genus != 3) os << ", " << l.genus;
                   os << ')';
                 },
                 [&](const term::GammaFP& g) { os << "Gamma(" << g.n << ')'; },
                 [&](const term::MFP& m) { os << "M(" << m.n << ", " << m.d << ')'; },
                 [&](const term::NoFiniteQuotients&) { os << "NQ"; },
                 [&](const term::FreeProduct&) { list("fp"); },
                 [&](const term::DirectSum&) { list("ds"); },
                 [&](const term::Wreath&) { list("wr"); },
                 [&](const term::CentralWreathQuotient&) { list("E"); },
                 [&](const term::ThreeGenEmbed&) { list("embed3"); },
                 [&](const term::FreeProductFamily& f) {
                   os << "fpfam(";
                   print_ordinal_to(os, f.seq.target());
                   os << ')';
                 },
                 [&](const term::DirectSumFamily& f) {
                   os << "dsfam(";
                   print_ordinal_to(os, f.seq.target());
                   os << ')';
                 },
                 [&](const term::SuccessorWitness& f) {
                   os << "succwit(";
                   print_ordinal_to(os, f.seq.target());
                   os << ')';
                 },
             },
             t.node());
}

using Seen = std::set<const CertificateNode*>;

void pretty_node(std::ostream& os, const CertificateNode& node, int indent, Seen& seen) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  os << pad << node.constructor << " [" << node.rule_id << "] => " << print_depth(node.result)
     << '\n';
  os << pad << "  | " << node.justification << '\n';
  if (!node.preconditions.empty()) {
    os << pad << "  | checked:";
    for (std::size_t i = 0; i < node.preconditions.size(); ++i) {
      os << (i == 0 ? " " : "; ") << describe(node.preconditions[i]);
    }
    os << '\n';
  }
  for (const auto& child : node.children) pretty_node(os, child, indent + 1, seen);
  for (const auto& m : node.members) {
    os << pad << "  member " << m.index << ": element " << print_ordinal(m.element)
       << ", witness " << print_term(m.witness);
    if (!seen.insert(m.certificate.get()).second) {
      os << " (certificate shown above)\n";
      continue;
    }
    os << '\n';
    pretty_node(os, *m.certificate, indent + 2, seen);
  }
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  Cursor cur(text);
  Ordinal out = OrdinalParser(cur).ordinal();
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return out;
}

GroupTerm parse_term(std::string_view text) {
  Cursor cur(text);
  GroupTerm out = TermParser(cur).term();
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return out;
}

std::string print_ordinal(const Ordinal& a) {
  std::ostringstream os;
  print_ordinal_to(os, a);
  return os.str();
}

std::string print_term(const GroupTerm& t) {
  std::ostringstream os;
  print_term_to(os, t);
  return os.str();
}

std::string print_depth(const DepthResult& r) {
  return r.is_defined() ? print_ordinal(r.value()) : "undefined";
}

namespace {

nlohmann::ordered_json node_json(const CertificateNode& node, Seen& seen) {
  nlohmann::ordered_json j;
  j["constructor"] = node.constructor;
  j["rule_id"] = node.rule_id;
  j["paper_ref"] = node.justification;
  j["ordinal"] = print_depth(node.result);
  auto& pre = j["preconditions"] = nlohmann::ordered_json::array();
  for (Fact f : node.preconditions) pre.push_back(describe(f));
  auto& children = j["children"] = nlohmann::ordered_json::array();
  for (const auto& c : node.children) children.push_back(node_json(c, seen));
  if (!node.members.empty()) {
    auto& members = j["members"] = nlohmann::ordered_json::array();
    for (const auto& m : node.members) {
      nlohmann::ordered_json member{{"index", m.index},
                                    {"element", print_ordinal(m.element)},
                                    {"witness", print_term(m.witness)}};
      // Repeated witnesses point back at the first full copy.
      if (seen.insert(m.certificate.get()).second) {
        member["certificate"] = node_json(*m.certificate, seen);
      } else {
        member["certificate_ref"] = print_term(m.witness);
      }
      members.push_back(std::move(member));
    }
  }
  return j;
}

}  // namespace

nlohmann::ordered_json certificate_node_json(const CertificateNode& node) {
  Seen seen;
  return node_json(node, seen);
}

nlohmann::ordered_json certificate_json(const GroupTerm& input, const CertificateNode& root,
                                        bool certified) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = print_term(input);
  j["result"] = print_depth(root.result);
  j["certified"] = certified;
  j["certificate"] = certificate_node_json(root);
  return j;
}

std::string emit_certificate(const GroupTerm& input, const CertificateNode& root, bool certified,
                             CertificateFormat format) {
  if (format == CertificateFormat::json) return certificate_json(input, root, certified).dump(2);
  std::ostringstream os;
  os << "input: " << print_term(input) << '\n';
  os << "result: " << print_depth(root.result) << '\n';
  os << "certified: " << (certified ? "yes" : "no") << '\n';
  Seen seen;
  pretty_node(os, root, 0, seen);
  return os.str();
}

}  // namespace rfdepth
