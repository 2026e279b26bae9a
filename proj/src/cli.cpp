#include "rfdepth/cli.hpp"

#include <algorithm>
#include <cstdint>

#include "CLI11.hpp"
#include "json.hpp"

#include "rfdepth/depth.hpp"
#include "rfdepth/errors.hpp"
#include "rfdepth/oracle.hpp"
#include "rfdepth/synth.hpp"
#include "rfdepth/textio.hpp"

namespace rfdepth {

namespace {

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

int cmd_classify(const std::string& text, Streams io) {
  const Ordinal a = parse_ordinal(text);
  const Realizability r = classify_realizable(a);
  if (!r.realizable) {
    io.out << "not realizable: "
           << (r.reason == Realizability::Reason::finite_above_one
                   ? "finite ordinal greater than 1"
                   : "successor of the successor " + print_ordinal(*analyze(a).predecessor))
           << '\n';
    return kExitShape;
  }
  const OrdinalShape shape = analyze(a);
  if (a.is_zero()) {
    io.out << "realizable: zero (trivial group)\n";
  } else if (a == Ordinal::natural(1)) {
    io.out << "realizable: one (nontrivial finite group)\n";
  } else if (shape.kind == OrdinalShape::Kind::limit) {
    io.out << "realizable: limit ordinal " << print_ordinal(a) << '\n';
  } else {
    io.out << "realizable: successor of limit ordinal " << print_ordinal(*shape.predecessor)
           << '\n';
  }
  return kExitOk;
}

int cmd_depth(const std::string& text, bool json, std::uint64_t samples, Streams io) {
  const GroupTerm t = parse_term(text);
  const DepthOptions options{samples};
  const DepthOutcome outcome = depth(t, options);
  const bool certified = validate_certificate(t, outcome.certificate, options);
  if (json) {
    io.out << emit_certificate(t, outcome.certificate, certified, CertificateFormat::json) << '\n';
  } else {
    io.out << print_depth(outcome.result) << '\n'
           << emit_certificate(t, outcome.certificate, certified, CertificateFormat::pretty);
  }
  if (!certified) return kExitInternal;
  return outcome.result.is_defined() ? kExitOk : kExitUndefined;
}

int cmd_synth(const std::string& text, bool fg, bool json, std::uint64_t samples, Streams io) {
  const Ordinal a = parse_ordinal(text);
  const GroupTerm witness = synthesize(a, fg);
  const CertificateNode certificate = certify_roundtrip(a, fg, DepthOptions{samples});
  if (json) {
    auto j = certificate_json(witness, certificate, true);
    j["target"] = print_ordinal(a);
    j["finitely_generated"] = attrs(witness).finitely_generated;
    io.out << j.dump(2) << '\n';
  } else {
    io.out << print_term(witness) << '\n'
           << emit_certificate(witness, certificate, true, CertificateFormat::pretty);
  }
  return kExitOk;
}

int cmd_coresig(const std::string& text, Streams io) {
  const CoreSignature sig = depth_to_core_signature(parse_ordinal(text));
  io.out << '(' << print_ordinal(sig.core_index) << ", "
         << (sig.core_class == CoreClass::trivial ? "trivial" : "finite_nontrivial") << ")\n";
  return kExitOk;
}

int cmd_fundseq(const std::string& text, std::uint64_t count, Streams io) {
  const FundamentalSequence seq = fundamental_sequence(parse_ordinal(text));
  for (std::uint64_t n = 1; n <= count; ++n) {
    io.out << n << ": " << print_ordinal(seq.element(n)) << '\n';
  }
  return kExitOk;
}

int cmd_selftest(std::uint64_t bound, std::uint64_t height, Streams io) {
  const auto arithmetic = oracle::exhaustive_compare_suite(bound);
  io.out << "arithmetic oracle (bound " << bound << "): " << arithmetic.cases << " cases, "
         << (arithmetic.success() ? "ok" : "MISMATCH: " + *arithmetic.first_mismatch) << '\n';

  const auto atoms = oracle::default_atoms();
  const auto terms = oracle::term_enumeration_suite(height, atoms);
  io.out << "term enumeration (height " << height << "): " << terms.terms << " terms ("
         << terms.defined << " defined, " << terms.undefined << " undefined, "
         << terms.inapplicable << " inapplicable), " << terms.checks << " checks, "
         << terms.violations.size() << " violations\n";
  for (std::size_t i = 0; i < std::min<std::size_t>(terms.violations.size(), 20); ++i) {
    const auto& v = terms.violations[i];
    io.out << "  " << v.property << ": " << v.term << ": " << v.detail << '\n';
  }

  const bool ok = arithmetic.success() && terms.success();
  nlohmann::ordered_json summary;
  summary["schema_version"] = kSchemaVersion;
  summary["arithmetic"] = {{"bound", bound},
                           {"cases", arithmetic.cases},
                           {"success", arithmetic.success()},
                           {"first_mismatch", arithmetic.first_mismatch.value_or("")}};
  summary["enumeration"] = {{"height", height},
                            {"terms", terms.terms},
                            {"defined", terms.defined},
                            {"undefined", terms.undefined},
                            {"inapplicable", terms.inapplicable},
                            {"checks", terms.checks},
                            {"violations", terms.violations.size()}};
  summary["success"] = ok;
  io.out << summary.dump() << '\n';
  return ok ? kExitOk : kExitInternal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Residual finiteness depth calculus", "rfdepth"};
  app.require_subcommand(1);

  std::string input;
  bool json = false;
  bool fg = false;
  std::uint64_t samples = 3;
  std::uint64_t count = 5;
  std::uint64_t bound = 25;
  std::uint64_t height = 3;

  auto* classify = app.add_subcommand("classify", "Is the ordinal the depth of some f.g. group?");
  classify->add_option("ordinal", input, "Ordinal, e.g. \"w^2 + 1\"")->required();

  auto* depth_cmd = app.add_subcommand("depth", "Evaluate and certify the depth of a term");
  depth_cmd->add_option("term", input, "Term, e.g. \"wr(A5, Z)\"")->required();
  depth_cmd->add_flag("--json", json, "Emit the certificate as JSON");
  depth_cmd->add_option("--samples", samples, "Family members certified per family node");

  auto* synth = app.add_subcommand("synth", "Synthesize a witness group for an ordinal");
  synth->add_option("ordinal", input, "Target depth")->required();
  synth->add_flag("--fg", fg, "Require a finitely generated witness");
  synth->add_flag("--json", json, "Emit the certificate as JSON");
  synth->add_option("--samples", samples, "Family members certified per family node");

  auto* coresig = app.add_subcommand("coresig", "Residual core signature of a depth");
  coresig->add_option("ordinal", input, "Depth")->required();

  auto* fundseq = app.add_subcommand("fundseq", "Standard fundamental sequence of a limit");
  fundseq->add_option("ordinal", input, "Limit ordinal")->required();
  fundseq->add_option("--count", count, "Number of elements to print");

  auto* selftest = app.add_subcommand("selftest", "Run the oracle suites");
  selftest->add_option("--bound", bound, "Pair component bound for the arithmetic oracle")
      ->check(CLI::Range(0, 64));
  selftest->add_option("--height", height, "Term height for the enumeration suite")
      ->check(CLI::Range(0, 3));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  const Streams io{out, err};
  try {
    if (*classify) return cmd_classify(input, io);
    if (*depth_cmd) return cmd_depth(input, json, samples, io);
    if (*synth) return cmd_synth(input, fg, json, samples, io);
    if (*coresig) return cmd_coresig(input, io);
    if (*fundseq) return cmd_fundseq(input, count, io);
    if (*selftest) return cmd_selftest(bound, height, io);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const NotRealizable& e) {
    err << "not realizable: " << e.what() << '\n';
    return kExitShape;
  } catch (const InvalidDepthShape& e) {
    err << "invalid depth shape: " << e.what() << '\n';
    return kExitShape;
  } catch (const NotLimit& e) {
    err << "not a limit ordinal: " << e.what() << '\n';
    return kExitShape;
  } catch (const RuleInapplicable& e) {
    err << "rule inapplicable: " << e.what() << '\n';
    return kExitInapplicable;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace rfdepth
