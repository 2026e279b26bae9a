#pragma once

// Witness synthesis: for every realizable ordinal, a construction term whose
// evaluated depth is exactly that ordinal.

#include "rfdepth/depth.hpp"
#include "rfdepth/group_term.hpp"
#include "rfdepth/ordinal.hpp"

namespace rfdepth {

/// Throws NotRealizable when classify_realizable(a) fails.
GroupTerm synthesize(const Ordinal& a, bool fg_required);

/// synthesize, evaluate, validate. Throws CertificationFailure if the round
/// trip disagrees with the target in depth or finite generation.
CertificateNode certify_roundtrip(const Ordinal& a, bool fg_required,
                                  const DepthOptions& options = {});

}  // namespace rfdepth
