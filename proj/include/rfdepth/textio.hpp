#pragma once

// Surface syntax for ordinals, construction terms and certificates.
//
// Ordinals (ASCII, `w` is omega):
//   ordinal := "0" | sum ;
//   sum     := term { "+" term } ;
//   term    := "w" [ "^" factor ] [ "*" nat ] | nat ;
//   factor  := nat | "w" | "(" ordinal ")" ;
//   nat     := nonzero decimal ;
// Sums need not be canonical; they are normalized with ordinal addition.
//
// Terms: 1, C(n), A5, Z, F(n), Sp(g), Lam, LamBar(d[, g]), Gamma(n), M(n, d),
// NQ, fp(t, ...), ds(t, ...), wr(t, t), E(t, t), embed3(t), fpfam(ordinal),
// dsfam(ordinal), succwit(ordinal).

#include <string>
#include <string_view>

#include "json.hpp"

#include "rfdepth/depth.hpp"
#include "rfdepth/group_term.hpp"
#include "rfdepth/ordinal.hpp"

namespace rfdepth {

inline constexpr int kSchemaVersion = 1;

Ordinal parse_ordinal(std::string_view text);
GroupTerm parse_term(std::string_view text);

std::string print_ordinal(const Ordinal& a);
std::string print_term(const GroupTerm& t);
std::string print_depth(const DepthResult& r);

enum class CertificateFormat { pretty, json };

nlohmann::ordered_json certificate_node_json(const CertificateNode& node);
nlohmann::ordered_json certificate_json(const GroupTerm& input, const CertificateNode& root,
                                        bool certified);

std::string emit_certificate(const GroupTerm& input, const CertificateNode& root, bool certified,
                             CertificateFormat format);

}  // namespace rfdepth
