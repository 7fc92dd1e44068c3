#include "commands.hpp"

#include "bquant/engine.hpp"
#include "bquant/errors.hpp"
#include "bquant/serialize.hpp"
#include "bquant/validation.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bquant::cli {

namespace {

CommandOutcome failure(int code, const std::string& message) {
  CommandOutcome o;
  o.exit_code = code;
  o.err = "error: " + message + "\n";
  return o;
}

/// Maps library exceptions onto the exit-code contract.
template <typename Body>
CommandOutcome guarded(Body&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    return failure(exit_code::usage, e.what());
  } catch (const ParseError& e) {
    return failure(exit_code::usage, std::string("parse error: ") + e.what());
  } catch (const DimensionError& e) {
    return failure(exit_code::usage, e.what());
  } catch (const IndexOutOfRange& e) {
    return failure(exit_code::usage, e.what());
  } catch (const ZeroModularWeight& e) {
    return failure(exit_code::check_failure, e.what());
  } catch (const NotValidated& e) {
    return failure(exit_code::check_failure, e.what());
  } catch (const NotFinite& e) {
    return failure(exit_code::check_failure, std::string("NotFinite: ") + e.what());
  } catch (const Error& e) {
    return failure(exit_code::check_failure, e.what());
  }
}

std::string signed_text(const Integer& v) { return (v > 0 ? "+" : "") + v.str(); }

Weight parse_weight(const std::string& csv) {
  std::vector<long> coords;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw ParseError("weight '" + csv + "' is not a list of integers");
    coords.push_back(value);
  }
  if (coords.empty() && !csv.empty()) throw ParseError("weight '" + csv + "' is not a list of integers");
  IntVector v(static_cast<Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) v(static_cast<Index>(i)) = coords[i];
  return Weight(v);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  f << text;
  if (!f) throw IoError("cannot write " + path.string());
}

VirtualCharacter read_character(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read " + path.string());
  std::stringstream buf;
  buf << f.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return character_from_json(j);
}

std::string boundary_footer(const std::vector<Weight>& weights) {
  std::string line = "boundary weights:";
  if (weights.empty()) return line + " none\n";
  for (std::size_t i = 0; i < weights.size(); ++i) line += (i ? ", " : " ") + weights[i].to_string();
  return line + "\n";
}

std::string component_text(const SignedTail& t) {
  return "component " + std::to_string(t.component) + ", sign " + (t.sign > 0 ? "+1" : "-1");
}

}  // namespace

CommandOutcome cmd_check(const std::filesystem::path& file) {
  return guarded([&] {
    const auto report = validate_description(load_description(file));
    CommandOutcome o;
    o.out = report.to_text();
    o.exit_code = report.passed() ? exit_code::ok : exit_code::check_failure;
    return o;
  });
}

CommandOutcome cmd_quantize(const std::filesystem::path& file, const std::string& format, bool verify,
                            unsigned threads) {
  return guarded([&] {
    if (format != "table" && format != "json") return failure(exit_code::usage, "unknown format '" + format + "'");
    const auto d = load_description(file);
    const EngineOptions options{std::max(1u, threads)};
    const auto q = quantize(d, options);
    CommandOutcome o;
    if (format == "json") {
      o.out = to_json(q).dump(2) + "\n";
      o.err = summary_line(q) + "\n";
    } else {
      o.out = to_table(q) + summary_line(q) + "\n" + boundary_footer(boundary_weights(d, q));
    }
    if (verify) {
      if (const auto w = pointwise_disagreement(d, q, options)) {
        o.exit_code = exit_code::check_failure;
        o.err += "error: verification failed: pointwise count differs at " + w->to_string() + "\n";
        return o;
      }
      o.err += "verify: pointwise counts agree on the doubled box\n";
    }
    return o;
  });
}

CommandOutcome cmd_reduce(const std::filesystem::path& file, const std::string& weight_csv) {
  return guarded([&] {
    const auto d = load_description(file);
    const Weight alpha = parse_weight(weight_csv);
    if (alpha.rank() != rank_of(d))
      throw DimensionError("weight " + alpha.to_string() + " has rank " + std::to_string(alpha.rank()) +
                           ", description has rank " + std::to_string(rank_of(d)));
    require_valid(d);
    const auto r = reduced_space_quantization(d, alpha);
    CommandOutcome o;
    o.out = "count = " + r.count.str();
    if (std::holds_alternative<BSpaceDescription>(d)) {
      o.out += " (";
      for (std::size_t k = 0; k < r.contributions.size(); ++k) {
        const int c = r.contributions[k];
        o.out += (k ? ", P" : "P") + std::to_string(k) + ":" + (c > 0 ? "+1" : c < 0 ? "-1" : "0");
      }
      o.out += ")";
    }
    o.out += "\n";
    return o;
  });
}

CommandOutcome cmd_verify_qr(const std::filesystem::path& file_m, const std::filesystem::path& file_n,
                             const std::optional<std::filesystem::path>& cache) {
  return guarded([&] {
    const auto m = load_description(file_m);
    const auto n = load_description(file_n);
    const auto* compact = std::get_if<CompactToricSpace>(&n);
    if (!compact) return failure(exit_code::usage, file_n.string() + ": the second space must be compact_toric");
    if (rank_of(m) != compact->rank)
      throw DimensionError("ranks " + std::to_string(rank_of(m)) + " and " + std::to_string(compact->rank) +
                           " differ");
    QrVerification v;
    if (cache) {
      require_valid(m);
      v = verify_qr_product(read_character(*cache), m, *compact);
    } else {
      v = verify_qr_product(m, *compact);
    }
    CommandOutcome o;
    o.out = "left = " + v.left.str() + "\nright = " + v.right.str() + "\n";
    if (v.verified) {
      o.out += "VERIFIED\n";
    } else {
      o.out += v.first_mismatch ? "MISMATCH at weight " + v.first_mismatch->to_string() + "\n" : "MISMATCH\n";
      o.exit_code = exit_code::check_failure;
    }
    return o;
  });
}

CommandOutcome cmd_cancel(const std::filesystem::path& file, long hypersurface) {
  return guarded([&] {
    const auto d = load_description(file);
    const auto* b = std::get_if<BSpaceDescription>(&d);
    if (!b) return failure(exit_code::usage, file.string() + ": cancel needs a b_toric description");
    if (hypersurface < 0) throw IndexOutOfRange("hypersurface index " + std::to_string(hypersurface) + " out of range");
    const auto lm = local_model(*b, static_cast<std::size_t>(hypersurface));
    const auto q = quantize_local_model(lm);
    CommandOutcome o;
    o.out = "hypersurface " + std::to_string(lm.hypersurface) + ", s0 = " + lm.threshold.str() + "\n";
    o.out += "positive tail (" + component_text(lm.positive) + "): " + to_string(lm.positive.tail) + "\n";
    o.out += "negative tail (" + component_text(lm.negative) + "): " + to_string(lm.negative.tail) + "\n";
    if (q.is_zero()) {
      o.out += "local quantization = 0\n";
    } else {
      o.out += "local quantization != 0\n" + to_table(q);
      o.exit_code = exit_code::check_failure;
    }
    return o;
  });
}

CommandOutcome run(const std::vector<std::string>& args) {
  CLI::App app{"Formal geometric quantization of toric and b-toric descriptions", "bquant"};
  app.require_subcommand(1);

  std::string file, file_n, format = "table", weight;
  std::optional<std::string> output, cache;
  bool verify = false;
  unsigned threads = 1;
  long hypersurface = 0;

  auto* check = app.add_subcommand("check", "Run every validation check");
  check->add_option("file", file, "Description file")->required();
  check->add_option("--output", output, "Write the report as JSON");

  auto* quant = app.add_subcommand("quantize", "Compute Q(M)");
  quant->add_option("file", file, "Description file")->required();
  quant->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
  quant->add_flag("--verify", verify, "Re-check against pointwise reduction on a doubled box");
  quant->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  quant->add_option("--output", output, "Write the character as JSON");

  auto* reduce = app.add_subcommand("reduce", "Signed reduced-space count at one weight");
  reduce->add_option("file", file, "Description file")->required();
  reduce->add_option("--weight", weight, "Comma separated integers")->required()->allow_extra_args(false);

  auto* vqr = app.add_subcommand("verify-qr", "Compare (Q(M) x Q(N))^T with Q((M x N)//_0 T)");
  vqr->add_option("m", file, "Description of M")->required();
  vqr->add_option("n", file_n, "Compact toric description of N")->required();
  vqr->add_option("--cache", cache, "Use this character JSON as Q(M)");

  auto* cancel = app.add_subcommand("cancel", "Local quantization near one hypersurface");
  cancel->add_option("file", file, "Description file")->required();
  cancel->add_option("--hypersurface", hypersurface, "Hypersurface index")->required();

  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    CommandOutcome o;
    o.exit_code = code == 0 ? exit_code::ok : exit_code::usage;
    o.out = out.str();
    o.err = err.str();
    return o;
  }

  CommandOutcome o;
  if (*check) {
    o = cmd_check(file);
    if (output && o.exit_code != exit_code::usage) {
      try {
        write_file(*output, validate_description(load_description(file)).to_json().dump(2) + "\n");
        o.payload = *output;
      } catch (const Error& e) {
        return failure(exit_code::usage, e.what());
      }
    }
  } else if (*quant) {
    o = cmd_quantize(file, format, verify, threads);
    if (output && o.exit_code == exit_code::ok) {
      o = guarded([&] {
        auto written = o;
        const std::string payload = format == "json" ? o.out
                                                     : to_json(quantize(load_description(file), {threads})).dump(2) + "\n";
        write_file(*output, payload);
        written.payload = *output;
        return written;
      });
    }
  } else if (*reduce) {
    o = cmd_reduce(file, weight);
  } else if (*vqr) {
    o = cmd_verify_qr(file, file_n, cache ? std::optional<std::filesystem::path>(*cache) : std::nullopt);
  } else if (*cancel) {
    o = cmd_cancel(file, hypersurface);
  }
  return o;
}

}  // namespace bquant::cli
