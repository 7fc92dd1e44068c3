#include <doctest.h>

#include "commands.hpp"
#include "corpus.hpp"

#include <fstream>

using bquant::cli::run;

namespace {

std::string file(const std::string& name) { return (corpus::dir() / name).string(); }
std::string bad(const std::string& name) { return (corpus::invalid_dir() / name).string(); }

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bquant_test_cli_" + name);
}

int count_lines_with(const std::string& text, const std::string& needle) {
  int n = 0;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) ++n, pos += needle.size();
  return n;
}

}  // namespace

TEST_CASE("check") {
  const auto ok = run({"check", file("b_sphere.json")});
  CHECK(ok.exit_code == 0);
  CHECK(count_lines_with(ok.out, " PASS\n") >= 6);

  const auto mu = run({"check", bad("non_primitive_modular_weight.json")});
  CHECK(mu.exit_code == 1);
  CHECK(mu.out.find("mu-integrality FAIL") != std::string::npos);

  const auto malformed = run({"check", bad("malformed.json")});
  CHECK(malformed.exit_code == 2);
  CHECK(malformed.err.find("line 5") != std::string::npos);

  const auto payload = scratch("report.json");
  const auto written = run({"check", file("b_sphere.json"), "--output", payload.string()});
  CHECK(written.exit_code == 0);
  REQUIRE(written.payload);
  CHECK(corpus::read(payload)["passed"] == true);
  std::filesystem::remove(payload);
}

TEST_CASE("quantize") {
  const auto b = run({"quantize", file("b_sphere.json")});
  CHECK(b.exit_code == 0);
  CHECK(b.out ==
        "weight | multiplicity\n(0) | 1\n(1) | 1\n(2) | 1\ndim = 3, support size = 3\nboundary weights: (2)\n");

  const auto c = run({"quantize", file("compact_interval_0_3.json")});
  CHECK(c.exit_code == 0);
  CHECK(count_lines_with(c.out, " | 1\n") == 4);
  CHECK(c.out.find("dim = 4") != std::string::npos);

  const auto z = run({"quantize", bad("zero_modular_weight.json")});
  CHECK(z.exit_code == 1);
  CHECK(z.err.find("modular weight dichotomy theorem") != std::string::npos);

  const auto inv = run({"quantize", bad("unmatched_tail.json")});
  CHECK(inv.exit_code == 1);
  CHECK(inv.err.find("properness") != std::string::npos);

  const auto j = run({"quantize", file("b_sphere.json"), "--format", "json"});
  CHECK(j.exit_code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["multiplicities"].size() == 3);
  CHECK(j.err.find("dim = 3") != std::string::npos);

  const auto v = run({"quantize", file("two_z_sphere.json"), "--verify"});
  CHECK(v.exit_code == 0);
  CHECK(v.err.find("agree") != std::string::npos);

  CHECK(run({"quantize", file("b_sphere.json"), "--format", "xml"}).exit_code == 2);
  CHECK(run({"quantize", file("b_sphere.json"), "--threads", "0"}).exit_code == 2);
  CHECK(run({"quantize", file("missing.json")}).exit_code == 2);

  const auto payload = scratch("q.json");
  const auto w = run({"quantize", file("b_sphere.json"), "--output", payload.string()});
  CHECK(w.exit_code == 0);
  CHECK(corpus::read(payload) == doc);
  std::filesystem::remove(payload);
}

TEST_CASE("reduce") {
  const auto one = run({"reduce", file("b_sphere.json"), "--weight", "1"});
  CHECK(one.exit_code == 0);
  CHECK(one.out == "count = 1 (P0:+1, P1:0)\n");
  const auto minus_four = run({"reduce", file("b_sphere.json"), "--weight=-4"});
  CHECK(minus_four.exit_code == 0);
  CHECK(minus_four.out == "count = 0 (P0:+1, P1:-1)\n");
  CHECK(run({"reduce", file("b_sphere.json"), "--weight", "1,2"}).exit_code == 2);
  CHECK(run({"reduce", file("b_sphere.json"), "--weight", "x"}).exit_code == 2);
  const auto compact = run({"reduce", file("compact_triangle_2.json"), "--weight", "1,1"});
  CHECK(compact.out == "count = 1\n");
  CHECK(run({"reduce", bad("equal_signs.json"), "--weight", "0"}).exit_code == 1);
}

TEST_CASE("verify-qr") {
  const auto a = run({"verify-qr", file("b_sphere.json"), file("compact_point.json")});
  CHECK(a.exit_code == 0);
  CHECK(a.out == "left = 1\nright = 1\nVERIFIED\n");
  const auto b = run({"verify-qr", file("compact_interval_0_3.json"), file("compact_interval_m2_0.json")});
  CHECK(b.exit_code == 0);
  CHECK(b.out == "left = 3\nright = 3\nVERIFIED\n");
  CHECK(run({"verify-qr", file("b_sphere.json"), file("compact_unit_square.json")}).exit_code == 2);
  CHECK(run({"verify-qr", file("compact_point.json"), file("b_sphere.json")}).exit_code == 2);

  // Negative control: a cached Q(M) with one multiplicity changed.
  const auto cache = scratch("cache.json");
  auto q = nlohmann::json::parse(run({"quantize", file("compact_interval_0_3.json"), "--format", "json"}).out);
  q["multiplicities"][1]["mult"] = 2;
  std::ofstream(cache) << q.dump();
  const auto m = run({"verify-qr", file("compact_interval_0_3.json"), file("compact_interval_m2_0.json"), "--cache",
                      cache.string()});
  CHECK(m.exit_code == 1);
  CHECK(m.out.find("MISMATCH at weight (1)") != std::string::npos);
  std::filesystem::remove(cache);
}

TEST_CASE("cancel") {
  const auto a = run({"cancel", file("b_sphere.json"), "--hypersurface", "0"});
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("local quantization = 0\n") != std::string::npos);
  CHECK(a.out.find("positive tail (component 0, sign +1)") != std::string::npos);
  const auto b = run({"cancel", file("b_sphere_x_interval_2.json"), "--hypersurface", "0"});
  CHECK(b.exit_code == 0);
  CHECK(b.out.find("local quantization = 0\n") != std::string::npos);
  CHECK(run({"cancel", file("b_sphere.json"), "--hypersurface", "1"}).exit_code == 2);
  CHECK(run({"cancel", file("b_sphere.json"), "--hypersurface", "-1"}).exit_code == 2);
  CHECK(run({"cancel", file("compact_point.json"), "--hypersurface", "0"}).exit_code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"reduce", file("b_sphere.json")}).exit_code == 2);
  const auto help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("quantize") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const auto& f : corpus::files()) {
    const auto first = run({"quantize", f.string(), "--format", "json"});
    for (const char* threads : {"1", "3"}) {
      const auto again = run({"quantize", f.string(), "--format", "json", "--threads", threads});
      CHECK(again.out == first.out);
    }
    CHECK(run({"check", f.string()}).out == run({"check", f.string()}).out);
  }
}
