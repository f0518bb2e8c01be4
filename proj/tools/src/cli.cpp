#include "superschur_cli/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "superschur/classify.hpp"
#include "superschur/cohomology.hpp"
#include "superschur/constructions.hpp"
#include "superschur/errors.hpp"
#include "superschur/invariants.hpp"
#include "superschur/io.hpp"
#include "superschur/verify.hpp"

namespace superschur::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string file;
  std::string builtin;
  bool as_json = false;
  bool cocycles = false;
  std::uint64_t seed = 7;
  std::size_t corpus_size = 100;
};

/// Thrown for command-line misuse that CLI11 cannot detect on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when the input file cannot be read.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const SuperDim& d) { return json::array({d.even(), d.odd()}); }
json to_json(const SignedSuperDim& d) { return json::array({d.even, d.odd}); }

std::string rational(const Scalar& s) {
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

std::string dump(const json& j) { return j.dump() + "\n"; }

LieSuperalgebra load(const Options& o) {
  if (!o.builtin.empty() && !o.file.empty()) throw UsageError("give either a file or --builtin, not both");
  if (!o.builtin.empty()) {
    try {
      return builtin(o.builtin);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  if (o.file.empty()) throw UsageError("missing input: give a file or --builtin NAME");
  std::ifstream in(o.file);
  if (!in) throw InputError("cannot read " + o.file);
  std::stringstream text;
  text << in.rdbuf();
  return parse_algebra(text.str());
}

std::string invariants_text(const LieSuperalgebra& L, const InvariantReport& r) {
  std::ostringstream os;
  os << "algebra " << (L.name().empty() ? "<unnamed>" : L.name()) << "\n"
     << "sdim L      = " << to_string(r.sdim_L) << "\n"
     << "sdim L^2    = " << to_string(r.sdim_L2) << "\n"
     << "sdim Z(L)   = " << to_string(r.sdim_Z) << "\n"
     << "sdim L/Z(L) = " << to_string(r.sdim_LmodZ) << "\n"
     << "sdim M(L)   = " << to_string(r.sdim_M) << "\n"
     << "smr         = " << to_string(r.smr) << "\n"
     << "mr          = " << r.mr << "\n"
     << "sdr         = " << to_string(r.sdr) << "\n"
     << "dr          = " << r.dr << "\n"
     << "nilpotency class = "
     << (r.nilpotency_class ? std::to_string(*r.nilpotency_class) : std::string("none")) << "\n";
  return os.str();
}

CommandResult cmd_invariants(const Options& o) {
  const auto L = load(o);
  const auto r = report(L);
  if (!o.as_json) return {kOk, invariants_text(L, r), ""};
  json j;
  j["name"] = L.name();
  j["sdim_L"] = to_json(r.sdim_L);
  j["sdim_L2"] = to_json(r.sdim_L2);
  j["sdim_Z"] = to_json(r.sdim_Z);
  j["sdim_LmodZ"] = to_json(r.sdim_LmodZ);
  j["sdim_M"] = to_json(r.sdim_M);
  j["smr"] = to_json(r.smr);
  j["mr"] = r.mr;
  j["sdr"] = to_json(r.sdr);
  j["dr"] = r.dr;
  j["nilpotency_class"] = r.nilpotency_class ? json(*r.nilpotency_class) : json(nullptr);
  return {kOk, dump(j), ""};
}

CommandResult cmd_multiplier(const Options& o) {
  const auto L = load(o);
  const auto m = multiplier(L);
  const auto& labels = L.labels();
  if (o.as_json) {
    json j;
    j["sdim_Z2"] = to_json(m.sdim_Z2);
    j["sdim_B2"] = to_json(m.sdim_B2);
    j["sdim_M"] = to_json(m.sdim_M);
    if (o.cocycles) {
      json list = json::array();
      for (const auto& f : m.cocycle_basis) {
        json values = json::array();
        for (const auto& [key, value] : f.values()) {
          values.push_back({{"x", labels[key.first]}, {"y", labels[key.second]}, {"value", rational(value)}});
        }
        list.push_back({{"parity", f.parity() == Parity::Even ? "even" : "odd"}, {"values", values}});
      }
      j["cocycles"] = list;
    }
    return {kOk, dump(j), ""};
  }
  std::ostringstream os;
  os << "sdim Z^2 = " << to_string(m.sdim_Z2) << "\n"
     << "sdim B^2 = " << to_string(m.sdim_B2) << "\n"
     << "sdim M = " << to_string(m.sdim_M) << "\n";
  if (o.cocycles) {
    for (const auto& f : m.cocycle_basis) {
      os << (f.parity() == Parity::Even ? "even" : "odd ") << " cocycle:";
      for (const auto& [key, value] : f.values()) {
        os << " f(" << labels[key.first] << "," << labels[key.second] << ")=" << value.get_str();
      }
      os << "\n";
    }
  }
  return {kOk, os.str(), ""};
}

std::string reason_name(NotCoveredReason r) {
  return r == NotCoveredReason::RankTooLarge ? "rank-too-large" : "contradiction";
}

CommandResult cmd_classify(const Options& o) {
  const auto L = load(o);
  Classification c;
  try {
    c = classify_mr_le2(L);
  } catch (const NotNilpotent& e) {
    return {kInvalid, "", std::string("error: ") + e.what() + "\n"};
  }
  if (const auto* t = std::get_if<TableEntry>(&c)) {
    if (o.as_json) {
      return {kOk, dump({{"covered", true}, {"label", to_string(t->label)}, {"smr", to_json(t->smr)}}), ""};
    }
    return {kOk, to_string(t->label) + " smr=" + to_string(t->smr) + "\n", ""};
  }
  const auto& n = std::get<NotCovered>(c);
  if (o.as_json) {
    return {kOk,
            dump({{"covered", false}, {"reason", reason_name(n.reason)}, {"smr", to_json(n.smr)},
                  {"detail", n.detail}}),
            ""};
  }
  return {kOk, "not covered (" + reason_name(n.reason) + ") smr=" + to_string(n.smr) + ": " + n.detail + "\n",
          ""};
}

CommandResult cmd_cover(const Options& o) {
  const auto L = load(o);
  const auto ext = cover_candidate(L);
  std::ostringstream os;
  os << emit_algebra(ext.algebra);
  os << "# kernel:";
  for (const auto& v : ext.kernel.basis()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) os << " " << ext.algebra.labels()[i];
    }
  }
  os << "\n# stem-condition: " << (ext.stem_condition() ? "true" : "false") << "\n";
  return {kOk, os.str(), ""};
}

CommandResult cmd_validate(const Options& o) {
  load(o);
  return {kOk, "OK\n", ""};
}

CommandResult cmd_verify(const Options& o) {
  const auto ledger = run_verification({o.seed, o.corpus_size});
  std::ostringstream os;
  os << "seed " << o.seed << ", corpus size " << o.corpus_size << "\n";
  std::size_t failed = 0;
  for (const auto& e : ledger) {
    const char* tag = e.informational ? "INFO" : (e.passed ? "PASS" : "FAIL");
    if (!e.informational && !e.passed) ++failed;
    os << tag << " " << e.key << " (" << e.cases << " cases): " << e.description;
    if (!e.detail.empty()) os << "; " << e.detail;
    os << "\n";
  }
  if (failed == 0) {
    os << "all checks passed\n";
    return {kOk, os.str(), ""};
  }
  os << failed << " check(s) failed\n";
  return {kInvalid, os.str(), ""};
}

}  // namespace

std::string usage() {
  return "usage: superschur <command> [options]\n"
         "commands:\n"
         "  validate <file>\n"
         "  invariants <file|--builtin NAME> [--json]\n"
         "  multiplier <file|--builtin NAME> [--json] [--cocycles]\n"
         "  classify <file|--builtin NAME> [--json]\n"
         "  cover <file|--builtin NAME>\n"
         "  verify-paper [--seed N] [--corpus-size K]\n";
}

CommandResult run(const std::vector<std::string>& args) {
  if (args.empty()) return {kUsage, "", usage()};
  const std::string& command = args[0];
  if (command == "help" || command == "--help" || command == "-h") return {kOk, usage(), ""};

  CLI::App app("superschur " + command, "superschur " + command);
  Options o;
  CommandResult (*handler)(const Options&) = nullptr;
  const bool takes_algebra = command == "invariants" || command == "multiplier" ||
                             command == "classify" || command == "cover";
  if (command == "validate") {
    app.add_option("file", o.file, "structure-constant file")->required();
    handler = cmd_validate;
  } else if (takes_algebra) {
    app.add_option("file", o.file, "structure-constant file");
    app.add_option("--builtin", o.builtin, "built-in algebra such as H(1,0), H(2), Ab(2,1), L4");
    if (command != "cover") app.add_flag("--json", o.as_json, "machine-readable output");
    if (command == "multiplier") app.add_flag("--cocycles", o.cocycles, "print representative cocycles");
    handler = command == "invariants" ? cmd_invariants
              : command == "multiplier" ? cmd_multiplier
              : command == "classify"   ? cmd_classify
                                        : cmd_cover;
  } else if (command == "verify-paper") {
    app.add_option("--seed", o.seed, "corpus seed");
    app.add_option("--corpus-size", o.corpus_size, "number of random algebras")->check(CLI::PositiveNumber);
    handler = cmd_verify;
  } else {
    return {kUsage, "", "unknown command '" + command + "'\n" + usage()};
  }

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    return {kOk, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    return {kUsage, "", std::string("error: ") + e.what() + "\n" + usage()};
  }

  try {
    return handler(o);
  } catch (const UsageError& e) {
    return {kUsage, "", std::string("error: ") + e.what() + "\n" + usage()};
  } catch (const InputError& e) {
    return {kParseFailure, "", std::string("error: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {kParseFailure, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {kInvalid, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace superschur::cli
