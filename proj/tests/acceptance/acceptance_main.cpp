// Acceptance suite: one pass/fail line per criterion. Criteria 1-8 exercise
// the library directly; criterion 9 drives the command-line tool end to end
// through files and pipes. Exits with the number of failed criteria.

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "shiftlim/json_io.hpp"
#include "shiftlim/limit_iso.hpp"
#include "shiftlim/sampling.hpp"
#include "shiftlim/shift_equiv.hpp"
#include "shiftlim/smith.hpp"

using namespace shiftlim;
using nlohmann::json;

namespace {

struct Context {
  std::string cli;
  std::filesystem::path fixtures;
  std::filesystem::path workdir;
};

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      notes.push_back(what);
    }
  }
};

const IntMatrix kDoubling{{2}};
const IntMatrix kNilpotent{{0, 1}, {0, 0}};
const IntMatrix kProjection{{2, 0}, {0, 0}};
const IntMatrix kFibonacci{{1, 1}, {1, 0}};

std::vector<Endomorphism> fixture_endos() {
  return {Endomorphism(kDoubling), Endomorphism(kNilpotent), Endomorphism(kProjection),
          Endomorphism(kFibonacci)};
}

ShiftEquivCert planted_cert() {
  return ShiftEquivCert{IntMatrix{{1, 0}}, IntMatrix{{2}, {0}}, 1};
}

struct FixtureCert {
  Endomorphism a;
  Endomorphism b;
  ShiftEquivCert cert;
};

std::vector<FixtureCert> fixture_certs() {
  const Endomorphism proj(kProjection);
  const Endomorphism two(kDoubling);
  std::vector<FixtureCert> out;
  out.push_back({two, two, identity_cert(two)});
  out.push_back({proj, two, planted_cert()});
  out.push_back({two, proj, invert_cert(planted_cert())});
  for (const auto& e : fixture_endos()) out.push_back({e, e, reflexive_cert(e)});
  return out;
}

LimitElement sample_element(SampleRng& rng, const DirectLimitGroup& lim) {
  return LimitElement{sample_vector(rng, lim.rank(), 3), rng.index(5)};
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  if (snf.d != IntMatrix::identity(m.rows())) {
    throw std::logic_error("matrix is not unimodular");
  }
  return snf.v * snf.u;
}

boost::multiprecision::cpp_rational dyadic_value(const LimitElement& x) {
  Int denom = 1;
  denom <<= x.level;
  return boost::multiprecision::cpp_rational(x.g.at(0), denom);
}

// ---------------------------------------------------------------------------
// criteria

// 1. Reflexivity on random endomorphisms; composition adds lags and stays
//    valid; inversion stays valid.
Check criterion_equivalence_relation() {
  Check c;
  SampleRng rng(1001);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = 1 + rng.index(3);
    const Endomorphism e(sample_matrix(rng, r, r, 2));
    const auto cert = reflexive_cert(e);
    c.expect(verify_cert(e, e, cert).valid(), "reflexive certificate failed to verify");
    c.expect(verify_cert(e, e, invert_cert(cert)).valid(), "inverted reflexive certificate failed");
  }
  const auto pool = fixture_certs();
  for (const auto& f : pool) {
    c.expect(verify_cert(f.a, f.b, f.cert).valid(), "fixture certificate failed to verify");
    c.expect(verify_cert(f.b, f.a, invert_cert(f.cert)).valid(),
             "inverted fixture certificate failed");
  }
  int composed = 0;
  for (const auto& left : pool) {
    for (const auto& right : pool) {
      if (!(left.b == right.a)) continue;
      const auto combined = compose_certs(left.cert, right.cert);
      ++composed;
      c.expect(combined.lag == left.cert.lag + right.cert.lag, "lag is not additive");
      c.expect(verify_cert(left.a, right.b, combined).valid(), "composed certificate failed");
    }
  }
  c.expect(composed > 0, "no composable fixture pairs found");
  return c;
}

// 2. Group axioms up to limit equality on 500 random triples per fixture map.
Check criterion_group_axioms() {
  Check c;
  SampleRng rng(1002);
  for (const auto& e : fixture_endos()) {
    const DirectLimitGroup lim(e);
    for (int t = 0; t < 500 && c.ok; ++t) {
      const LimitElement x = sample_element(rng, lim);
      const LimitElement y = sample_element(rng, lim);
      const LimitElement z = sample_element(rng, lim);
      c.expect(lim.equal(lim.add(lim.add(x, y), z), lim.add(x, lim.add(y, z))),
               "associativity failed");
      c.expect(lim.equal(lim.add(x, y), lim.add(y, x)), "commutativity failed");
      c.expect(lim.equal(lim.add(x, lim.identity()), x), "identity law failed");
      c.expect(lim.equal(lim.add(x, lim.negate(x)), lim.identity()), "inverse law failed");
    }
  }
  return c;
}

// 3. The induced map and the coshift invert each other.
Check criterion_coshift_inversion() {
  Check c;
  SampleRng rng(1003);
  const auto endos = fixture_endos();
  for (int t = 0; t < 1000 && c.ok; ++t) {
    const DirectLimitGroup lim(endos[t % endos.size()]);
    const LimitElement x = sample_element(rng, lim);
    c.expect(lim.equal(lim.induced(lim.coshift(x)), x), "induced(coshift(x)) != x");
    c.expect(lim.equal(lim.coshift(lim.induced(x)), x), "coshift(induced(x)) != x");
  }
  return c;
}

// 4. For the doubling map, (g, n) -> g/2^n is a faithful additive model.
Check criterion_dyadic_model() {
  Check c;
  SampleRng rng(1004);
  const DirectLimitGroup lim((Endomorphism(kDoubling)));
  for (int t = 0; t < 1000 && c.ok; ++t) {
    const LimitElement x{sample_vector(rng, 1, 9), rng.index(5)};
    const LimitElement y{sample_vector(rng, 1, 9), rng.index(5)};
    c.expect(lim.equal(x, y) == (dyadic_value(x) == dyadic_value(y)),
             "equality disagrees with the dyadic model");
    c.expect(dyadic_value(lim.add(x, y)) == dyadic_value(x) + dyadic_value(y),
             "addition disagrees with the dyadic model");
  }
  return c;
}

// 5. The limit of a nilpotent map is trivial.
Check criterion_trivial_limit() {
  Check c;
  SampleRng rng(1005);
  const DirectLimitGroup lim((Endomorphism(kNilpotent)));
  for (int t = 0; t < 500 && c.ok; ++t) {
    c.expect(lim.equal(sample_element(rng, lim), lim.identity()),
             "nilpotent limit has a non-identity element");
  }
  return c;
}

// 6. Bounded search finds the planted certificate and rejects the
//    incompatible pair.
Check criterion_planted_search() {
  Check c;
  const Endomorphism proj(kProjection);
  const Endomorphism two(kDoubling);
  const auto found = search_shift_equivalence(proj, two, 2, 3);
  c.expect(found.has_value(), "no certificate found for the planted pair");
  if (found) {
    const auto report = verify_cert(proj, two, *found);
    c.expect(report.valid(), "planted search returned an invalid certificate");
  }
  const Endomorphism three(IntMatrix{{3}});
  c.expect(!search_shift_equivalence(two, three, 4, 10).has_value(),
           "found a certificate between incompatible maps");
  return c;
}

// 7. Certificate -> witness -> certificate round trip, and the literal psi
//    map composed with the forward map equals the induced map to the lag.
Check criterion_bridge_round_trip() {
  Check c;
  SampleRng rng(1007);
  auto pool = fixture_certs();
  {
    const Endomorphism proj(kProjection);
    pool.push_back({proj, proj, compose_certs(planted_cert(), invert_cert(planted_cert()))});
  }
  for (const auto& f : pool) {
    if (f.cert.lag < 1) continue;
    const LimitIso iso = shift_equiv_to_conjugacy(f.a, f.b, f.cert);
    c.expect(verify_limit_iso(iso, 200).ok, "witness failed verification");
    const BridgedCert bridged = conjugacy_to_shift_equiv(iso);
    c.expect(verify_cert(f.a, f.b, bridged.cert).valid(), "round-trip certificate failed");
    c.expect(bridged.cert.lag == bridged.forward_level + bridged.backward_level,
             "lag does not equal the sum of the levels used");
    for (int t = 0; t < 100 && c.ok; ++t) {
      const LimitElement x = sample_element(rng, iso.source);
      const LimitElement image = apply_limit_hom(iso, x);
      const LimitElement through{f.cert.psi.apply(image.g), image.level};
      LimitElement expected = x;
      for (std::size_t i = 0; i < f.cert.lag; ++i) expected = iso.source.induced(expected);
      c.expect(iso.source.equal(through, expected), "psi∘phi does not act as the lag-th power");
    }
  }
  return c;
}

// 8. Certificates between conjugate automorphisms yield unimodular
//    conjugating matrices.
Check criterion_automorphism_corollary() {
  Check c;
  SampleRng rng(1008);
  for (int t = 0; t < 20; ++t) {
    const std::size_t r = 1 + rng.index(3);
    const Endomorphism a(sample_unimodular(rng, r, 10));
    const IntMatrix p = sample_unimodular(rng, r, 10);
    const IntMatrix p_inv = unimodular_inverse(p);
    const Endomorphism b(p * a.matrix() * p_inv);

    const ShiftEquivCert conj{p, p_inv, 0};
    const ShiftEquivCert lagged = compose_certs(reflexive_cert(a), conj);
    for (const auto& cert : {conj, lagged}) {
      c.expect(verify_cert(a, b, cert).valid(), "constructed certificate failed to verify");
      const auto theta = conjugacy_from_cert(a, b, cert);
      c.expect(theta.has_value(), "no conjugacy extracted between automorphisms");
      if (theta) {
        c.expect(is_unimodular(*theta), "extracted conjugacy is not unimodular");
        c.expect(*theta * a.matrix() == b.matrix() * *theta,
                 "extracted matrix does not conjugate");
      }
    }
  }
  return c;
}

// --- CLI plumbing for criterion 9 -----------------------------------------

struct CliRun {
  int code = -1;
  json envelope;
};

CliRun run_cli(const Context& ctx, const std::string& args) {
  const std::string command = ctx.cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + command);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  CliRun result;
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.envelope = json::parse(out, nullptr, false);
  return result;
}

std::filesystem::path write_json(const Context& ctx, const std::string& name, const json& j) {
  const auto path = ctx.workdir / name;
  std::ofstream(path) << j.dump(2) << "\n";
  return path;
}

// 9. search -> verify -> se-to-conj -> conj-to-se -> verify through the CLI,
//    with lossless round trips of 60-digit entries.
Check criterion_cli_pipeline(const Context& ctx) {
  Check c;
  const std::string a = (ctx.fixtures / "planted_a.json").string();
  const std::string b = (ctx.fixtures / "planted_b.json").string();

  const CliRun searched = run_cli(ctx, "search --a " + a + " --b " + b + " --max-lag 2 --bound 3");
  c.expect(searched.code == 0 && searched.envelope["status"] == "ok", "search stage failed");
  if (!c.ok) return c;
  const auto cert_file = write_json(ctx, "cert.json", searched.envelope);

  // One hop through an actual pipe to exercise stdin composition.
  {
    const std::string command = ctx.cli + " search --a " + a + " --b " + b +
                                " --max-lag 2 --bound 3 | " + ctx.cli + " verify --a " + a +
                                " --b " + b + " --cert - 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    c.expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, "piped verify stage failed");
    const json env = json::parse(out, nullptr, false);
    c.expect(!env.is_discarded() && env["status"] == "ok" && env["payload"]["valid"] == true,
             "piped verify did not accept the searched certificate");
  }

  const CliRun verified =
      run_cli(ctx, "verify --a " + a + " --b " + b + " --cert " + cert_file.string());
  c.expect(verified.code == 0 && verified.envelope["payload"]["valid"] == true,
           "verify stage failed");

  const CliRun witness =
      run_cli(ctx, "se-to-conj --a " + a + " --b " + b + " --cert " + cert_file.string());
  c.expect(witness.code == 0 && witness.envelope["status"] == "ok", "se-to-conj stage failed");
  if (!c.ok) return c;
  const auto iso_file = write_json(ctx, "iso.json", witness.envelope);

  const CliRun bridged =
      run_cli(ctx, "conj-to-se --a " + a + " --b " + b + " --iso " + iso_file.string());
  c.expect(bridged.code == 0 && bridged.envelope["status"] == "ok", "conj-to-se stage failed");
  if (!c.ok) return c;
  c.expect(bridged.envelope["payload"]["lag"] ==
               bridged.envelope["payload"]["k"].get<std::size_t>() +
                   bridged.envelope["payload"]["l"].get<std::size_t>(),
           "emitted lag is not k + l");
  const auto bridged_file = write_json(ctx, "bridged.json", bridged.envelope);

  const CliRun reverified =
      run_cli(ctx, "verify --a " + a + " --b " + b + " --cert " + bridged_file.string());
  c.expect(reverified.code == 0 && reverified.envelope["payload"]["valid"] == true,
           "final verify stage failed");

  // 60-digit entries must survive every hop bit for bit.
  const std::string big = "123456789012345678901234567890123456789012345678901234567890";
  const std::string id2 = (ctx.fixtures / "identity2.json").string();
  const std::string cert60 = (ctx.fixtures / "cert_bigint.json").string();

  const CliRun v60 = run_cli(ctx, "verify --a " + id2 + " --b " + id2 + " --cert " + cert60);
  c.expect(v60.code == 0 && v60.envelope["payload"]["valid"] == true,
           "60-digit certificate failed to verify");

  const CliRun w60 = run_cli(ctx, "se-to-conj --a " + id2 + " --b " + id2 + " --cert " + cert60);
  c.expect(w60.code == 0 && w60.envelope["status"] == "ok", "60-digit se-to-conj failed");
  if (!c.ok) return c;
  c.expect(w60.envelope["payload"]["iso"]["forward"][1]["g"][0] == big,
           "60-digit entry mutated in the witness");
  const auto iso60_file = write_json(ctx, "iso60.json", w60.envelope);

  const CliRun b60 =
      run_cli(ctx, "conj-to-se --a " + id2 + " --b " + id2 + " --iso " + iso60_file.string());
  c.expect(b60.code == 0 && b60.envelope["status"] == "ok", "60-digit conj-to-se failed");
  if (!c.ok) return c;
  const json cert_out = b60.envelope["payload"]["cert"];
  c.expect(cert_out["phi"]["entries"][1] == big, "60-digit entry mutated in the certificate");
  c.expect(json::parse(cert_out.dump()) == cert_out, "emitted JSON does not re-parse losslessly");
  const ShiftEquivCert parsed = cert_from_json(cert_out);
  c.expect(parsed.phi(0, 1) == Int(big), "parsed 60-digit entry differs");

  const auto cert60b_file = write_json(ctx, "cert60b.json", b60.envelope);
  const CliRun v60b =
      run_cli(ctx, "verify --a " + id2 + " --b " + id2 + " --cert " + cert60b_file.string());
  c.expect(v60b.code == 0 && v60b.envelope["payload"]["valid"] == true,
           "round-tripped 60-digit certificate failed to verify");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  Context ctx;
  for (int i = 1; i + 1 < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli") ctx.cli = argv[++i];
    if (arg == "--fixtures") ctx.fixtures = argv[++i];
  }
  if (ctx.cli.empty() || ctx.fixtures.empty()) {
    std::cerr << "usage: acceptance --cli <path-to-cli> --fixtures <dir>\n";
    return 2;
  }
  ctx.workdir = std::filesystem::temp_directory_path() /
                ("shiftlim-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(ctx.workdir);

  struct Criterion {
    const char* name;
    long budget_ms;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {"equivalence-relation suite (reflexive, compose, invert)", 5000,
       criterion_equivalence_relation},
      {"direct-limit group axioms on the fixture maps", 10000, criterion_group_axioms},
      {"coshift and induced map invert each other", 5000, criterion_coshift_inversion},
      {"dyadic model matches the rationals", 2000, criterion_dyadic_model},
      {"nilpotent map has a trivial limit", 1000, criterion_trivial_limit},
      {"planted search succeeds, impossible search fails", 10000, criterion_planted_search},
      {"certificate/witness round trip with exact lag bookkeeping", 15000, criterion_bridge_round_trip},
      {"automorphism certificates yield unimodular conjugacies", 10000,
       criterion_automorphism_corollary},
      {"CLI pipeline with lossless 60-digit round trips", 5000,
       [&ctx] { return criterion_cli_pipeline(ctx); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = criteria[i].run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.notes.push_back(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (result.ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].name
              << " (" << ms << " ms, expected < " << criteria[i].budget_ms << " ms)\n";
    if (ms > criteria[i].budget_ms) {
      std::cout << "       note: over the expected runtime\n";
    }
    for (const auto& note : result.notes) std::cout << "       " << note << "\n";
    if (!result.ok) ++failures;
  }
  std::filesystem::remove_all(ctx.workdir);
  std::cout << (failures == 0 ? "all criteria passed\n"
                              : std::to_string(failures) + " criteria failed\n");
  return failures;
}
