// Command-line front end: load endomorphisms, elements, certificates and
// isomorphism witnesses from JSON files, run verification, bounded search
// and both bridge directions, and emit a machine-readable result envelope:
//
//   {"status": "ok"|"invalid"|"not_found"|"error",
//    "payload": {...}, "diagnostics": ["..."]}
//
// Exit code 0 for ok, 1 for invalid / not_found, 2 for error. Any input
// path may be "-" to read from stdin; envelopes are unwrapped on input so
// commands compose through pipes.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "shiftlim/json_io.hpp"
#include "shiftlim/limit_iso.hpp"
#include "shiftlim/shift_equiv.hpp"

namespace {

using nlohmann::json;
using namespace shiftlim;

enum class Status { ok, invalid, not_found, error };

const char* status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::invalid: return "invalid";
    case Status::not_found: return "not_found";
    default: return "error";
  }
}

int exit_code(Status s) {
  switch (s) {
    case Status::ok: return 0;
    case Status::invalid:
    case Status::not_found: return 1;
    default: return 2;
  }
}

int emit(Status status, json payload, std::vector<std::string> diagnostics = {}) {
  json envelope{{"status", status_name(status)},
                {"payload", std::move(payload)},
                {"diagnostics", json(diagnostics)}};
  std::cout << envelope.dump(2) << "\n";
  return exit_code(status);
}

json load_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw JsonError("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw JsonError("\"" + path + "\" is not valid JSON");
  return j;
}

// Inputs may be bare objects, result envelopes, or envelopes whose payload
// nests the object under a well-known key; unwrap so pipelines compose.
json unwrap(json j, const char* key) {
  if (j.is_object() && j.contains("status") && j.contains("payload")) j = j["payload"];
  if (j.is_object() && j.contains(key)) j = j[key];
  return j;
}

Endomorphism load_endo(const std::string& path) {
  return endomorphism_from_json(unwrap(load_json(path), "matrix"));
}

struct CommonArgs {
  std::string a_file;
  std::string b_file;
  std::string cert_file;
  std::string iso_file;
  std::string x_file;
  std::string y_file;
  std::size_t max_lag = 4;
  std::size_t bound = 3;
  std::size_t samples = 128;
  std::uint64_t seed = kDefaultSampleSeed;
};

int run_verify(const CommonArgs& args) {
  const Endomorphism a = load_endo(args.a_file);
  const Endomorphism b = load_endo(args.b_file);
  const ShiftEquivCert cert = cert_from_json(unwrap(load_json(args.cert_file), "cert"));
  const VerifyReport report = verify_cert(a, b, cert);
  json payload = report_to_json(report);
  payload["valid"] = report.valid();
  if (report.valid()) return emit(Status::ok, std::move(payload));
  return emit(Status::invalid, std::move(payload), {"one or more defining relations fail"});
}

int run_search(const CommonArgs& args) {
  const Endomorphism a = load_endo(args.a_file);
  const Endomorphism b = load_endo(args.b_file);
  const auto cert = search_shift_equivalence(a, b, args.max_lag, args.bound);
  if (!cert) {
    return emit(Status::not_found, json::object(),
                {"no certificate with lag <= " + std::to_string(args.max_lag) +
                 " and coefficients bounded by " + std::to_string(args.bound)});
  }
  return emit(Status::ok, json{{"cert", cert_to_json(*cert)}});
}

int run_limit_eq(const CommonArgs& args) {
  const Endomorphism a = load_endo(args.a_file);
  const DirectLimitGroup lim(a);
  const LimitElement x = element_from_json(unwrap(load_json(args.x_file), "element"));
  const LimitElement y = element_from_json(unwrap(load_json(args.y_file), "element"));
  const bool equal = lim.equal(x, y);
  return emit(Status::ok, json{{"equal", equal}});
}

int run_se_to_conj(const CommonArgs& args) {
  const Endomorphism a = load_endo(args.a_file);
  const Endomorphism b = load_endo(args.b_file);
  const ShiftEquivCert cert = cert_from_json(unwrap(load_json(args.cert_file), "cert"));
  const LimitIso iso = shift_equiv_to_conjugacy(a, b, cert);
  const IsoReport check = verify_limit_iso(iso, args.samples, args.seed);
  if (!check.ok) {
    return emit(Status::invalid, json::object(), check.diagnostics);
  }
  return emit(Status::ok, json{{"iso", iso_to_json(iso, args.a_file, args.b_file)}});
}

int run_conj_to_se(const CommonArgs& args) {
  const Endomorphism a = load_endo(args.a_file);
  const Endomorphism b = load_endo(args.b_file);
  const LimitIso iso = iso_from_json(unwrap(load_json(args.iso_file), "iso"), a, b);
  const BridgedCert bridged = conjugacy_to_shift_equiv(iso);
  return emit(Status::ok, json{{"cert", cert_to_json(bridged.cert)},
                               {"k", bridged.forward_level},
                               {"l", bridged.backward_level},
                               {"lag", bridged.cert.lag}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact shift-equivalence and direct-limit toolkit"};
  app.require_subcommand(1);
  CommonArgs args;

  auto* verify = app.add_subcommand("verify", "check the four relations of a certificate");
  verify->add_option("--a", args.a_file, "source endomorphism file")->required();
  verify->add_option("--b", args.b_file, "target endomorphism file")->required();
  verify->add_option("--cert", args.cert_file, "certificate file")->required();

  auto* search = app.add_subcommand("search", "bounded search for a certificate");
  search->add_option("--a", args.a_file, "source endomorphism file")->required();
  search->add_option("--b", args.b_file, "target endomorphism file")->required();
  search->add_option("--max-lag", args.max_lag, "largest lag to try");
  search->add_option("--bound", args.bound, "coefficient bound")->check(CLI::PositiveNumber);

  auto* limit_eq = app.add_subcommand("limit-eq", "decide equality in the direct limit");
  limit_eq->add_option("--a", args.a_file, "endomorphism file")->required();
  limit_eq->add_option("--x", args.x_file, "first element file")->required();
  limit_eq->add_option("--y", args.y_file, "second element file")->required();

  auto* se_to_conj =
      app.add_subcommand("se-to-conj", "build a coshift-conjugacy witness from a certificate");
  se_to_conj->add_option("--a", args.a_file, "source endomorphism file")->required();
  se_to_conj->add_option("--b", args.b_file, "target endomorphism file")->required();
  se_to_conj->add_option("--cert", args.cert_file, "certificate file")->required();
  se_to_conj->add_option("--samples", args.samples, "sampled intertwining checks");
  se_to_conj->add_option("--seed", args.seed, "sampling seed");

  auto* conj_to_se =
      app.add_subcommand("conj-to-se", "read a certificate off a conjugacy witness");
  conj_to_se->add_option("--a", args.a_file, "source endomorphism file")->required();
  conj_to_se->add_option("--b", args.b_file, "target endomorphism file")->required();
  conj_to_se->add_option("--iso", args.iso_file, "witness file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(verify)) return run_verify(args);
    if (app.got_subcommand(search)) return run_search(args);
    if (app.got_subcommand(limit_eq)) return run_limit_eq(args);
    if (app.got_subcommand(se_to_conj)) return run_se_to_conj(args);
    return run_conj_to_se(args);
  } catch (const InvalidCertificate& e) {
    return emit(Status::invalid, json::object(), {e.what()});
  } catch (const InvalidIsoWitness& e) {
    std::vector<std::string> diags{e.what()};
    diags.insert(diags.end(), e.diagnostics.begin(), e.diagnostics.end());
    return emit(Status::invalid, json::object(), diags);
  } catch (const std::exception& e) {
    return emit(Status::error, json::object(), {e.what()});
  }
}
