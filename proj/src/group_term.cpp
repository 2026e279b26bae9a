#include "rfdepth/group_term.hpp"

#include <string>
#include <utility>

#include "rfdepth/errors.hpp"
#include "rfdepth/textio.hpp"

namespace rfdepth {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const char* message) {
  if (!ok) throw MalformedTerm(message);
}

std::vector<GroupTerm> strip_trivial(std::vector<GroupTerm> factors) {
  require(factors.size() >= 2, "free products and direct sums need at least two factors");
  std::erase_if(factors, [](const GroupTerm& t) { return t.is_trivial(); });
  return factors;
}

}  // namespace

GroupTerm make_term(TermNode node) {
  return GroupTerm(std::make_shared<const TermNode>(std::move(node)));
}

std::span<const GroupTerm> GroupTerm::children() const {
  return std::visit(
      overloaded{
          [](const term::FreeProduct& n) { return std::span<const GroupTerm>(n.factors); },
          [](const term::DirectSum& n) { return std::span<const GroupTerm>(n.factors); },
          [](const term::Wreath& n) { return std::span<const GroupTerm>(n.args); },
          [](const term::CentralWreathQuotient& n) { return std::span<const GroupTerm>(n.args); },
          [](const term::ThreeGenEmbed& n) { return std::span<const GroupTerm>(n.args); },
          [](const auto&) { return std::span<const GroupTerm>(); },
      },
      *node_);
}

std::string GroupTerm::label() const {
  return std::visit(
      overloaded{
          [](const term::FreeProduct&) -> std::string { return "fp"; },
          [](const term::DirectSum&) -> std::string { return "ds"; },
          [](const term::Wreath&) -> std::string { return "wr"; },
          [](const term::CentralWreathQuotient&) -> std::string { return "E"; },
          [](const term::ThreeGenEmbed&) -> std::string { return "embed3"; },
          [this](const auto&) -> std::string { return print_term(*this); },
      },
      *node_);
}

bool operator==(const GroupTerm& a, const GroupTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->index() != b.node_->index()) return false;
  return std::visit(
      overloaded{
          [](const term::FiniteCyclic& x, const term::FiniteCyclic& y) { return x.order == y.order; },
          [](const term::FreeGroup& x, const term::FreeGroup& y) { return x.rank == y.rank; },
          [](const term::Symplectic& x, const term::Symplectic& y) { return x.genus == y.genus; },
          [](const term::LambdaBar& x, const term::LambdaBar& y) {
            return x.d == y.d && x.genus == y.genus;
          },
          [](const term::GammaFP& x, const term::GammaFP& y) { return x.n == y.n; },
          [](const term::MFP& x, const term::MFP& y) { return x.n == y.n && x.d == y.d; },
          [](const term::FreeProductFamily& x, const term::FreeProductFamily& y) {
            return x.seq == y.seq;
          },
          [](const term::DirectSumFamily& x, const term::DirectSumFamily& y) {
            return x.seq == y.seq;
          },
          [](const term::SuccessorWitness& x, const term::SuccessorWitness& y) {
            return x.seq == y.seq;
          },
          [&](const auto&, const auto&) {
            const auto xs = a.children();
            const auto ys = b.children();
            return std::equal(xs.begin(), xs.end(), ys.begin(), ys.end());
          },
      },
      *a.node_, *b.node_);
}

GroupTerm trivial() { return make_term(term::Trivial{}); }

GroupTerm cyclic(std::uint64_t order) {
  require(order >= 2, "C(n) needs n >= 2");
  return make_term(term::FiniteCyclic{order});
}

GroupTerm a5() { return make_term(term::A5{}); }

GroupTerm integers() { return make_term(term::Integers{}); }

GroupTerm free_group(std::uint64_t rank) {
  require(rank >= 2, "F(n) needs rank >= 2");
  return make_term(term::FreeGroup{rank});
}

GroupTerm symplectic(std::uint64_t genus) {
  require(genus >= 2, "Sp(g) needs g >= 2");
  return make_term(term::Symplectic{genus});
}

GroupTerm lambda() { return make_term(term::Lambda{}); }

GroupTerm lambda_bar(std::uint64_t d, std::uint64_t genus) {
  require(d >= 3 && d % 2 == 1, "LamBar(d) needs d odd >= 3");
  require(genus >= 3, "LamBar(d, g) needs g >= 3");
  return make_term(term::LambdaBar{d, genus});
}

GroupTerm gamma_fp(std::uint64_t n) {
  require(n >= 1, "Gamma(n) needs n >= 1");
  return make_term(term::GammaFP{n});
}

GroupTerm m_fp(std::uint64_t n, std::uint64_t d) {
  require(n >= 1, "M(n, d) needs n >= 1");
  require(d >= 3 && d % 2 == 1, "M(n, d) needs d odd >= 3");
  return make_term(term::MFP{n, d});
}

GroupTerm no_finite_quotients() { return make_term(term::NoFiniteQuotients{}); }

GroupTerm free_product(std::vector<GroupTerm> factors) {
  factors = strip_trivial(std::move(factors));
  if (factors.empty()) return trivial();
  if (factors.size() == 1) return factors.front();
  return make_term(term::FreeProduct{std::move(factors)});
}

GroupTerm direct_sum(std::vector<GroupTerm> factors) {
  factors = strip_trivial(std::move(factors));
  if (factors.empty()) return trivial();
  if (factors.size() == 1) return factors.front();
  return make_term(term::DirectSum{std::move(factors)});
}

GroupTerm wreath(GroupTerm base, GroupTerm top) {
  return make_term(term::Wreath{{std::move(base), std::move(top)}});
}

GroupTerm central_wreath_quotient(GroupTerm base, GroupTerm top) {
  return make_term(term::CentralWreathQuotient{{std::move(base), std::move(top)}});
}

GroupTerm three_gen_embed(GroupTerm inner) {
  return make_term(term::ThreeGenEmbed{{std::move(inner)}});
}

namespace {

FundamentalSequence family_sequence(const Ordinal& target) {
  try {
    return FundamentalSequence(target);
  } catch (const NotLimit&) {
    throw MalformedTerm("family constructors need a limit target");
  }
}

}  // namespace

GroupTerm free_product_family(const Ordinal& target) {
  return make_term(term::FreeProductFamily{family_sequence(target)});
}

GroupTerm direct_sum_family(const Ordinal& target) {
  return make_term(term::DirectSumFamily{family_sequence(target)});
}

GroupTerm successor_witness(const Ordinal& target) {
  return make_term(term::SuccessorWitness{family_sequence(target)});
}

}  // namespace rfdepth
