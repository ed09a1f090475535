#include "liftfact/corpus.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "liftfact/error.hpp"

#ifndef LIFTFACT_DEFAULT_CORPUS_DIR
#define LIFTFACT_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace liftfact {

namespace {

Poly over(std::initializer_list<long> nums, long den) {
  std::vector<Rational> c;
  for (long n : nums) c.emplace_back(n, den);
  return Poly(std::move(c));
}

LaurentPoly causal(std::initializer_list<long> nums, long den) {
  Poly p = over(nums, den);
  return LaurentPoly(p);
}

void check_det(const CorpusEntry& e) {
  DetMonomial got = pr_check(e.polyphase);
  if (!(got == e.expected_det)) {
    throw Error(ErrorCode::kVerificationFailed, "corpus entry '" + e.name + "': expected det " +
                                                    e.expected_det.gain.str() + " z^-" +
                                                    std::to_string(e.expected_det.delay) + ", matrix has " +
                                                    got.gain.str() + " z^-" + std::to_string(got.delay));
  }
}

json laurent_to_json(const LaurentPoly& f) {
  json c = json::array();
  for (const auto& x : f.coefficients()) c.push_back(x.str());
  return json{{"offset", f.offset()}, {"coeffs", c}};
}

LaurentPoly laurent_from_json(const json& j) {
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
  return LaurentPoly(std::move(c), j.value("offset", 0L));
}

}  // namespace

std::vector<std::string> builtin_names() { return {"cdf75", "haar", "lgt53"}; }

CorpusEntry builtin_entry(std::string_view name) {
  CorpusEntry e;
  e.name = std::string(name);
  if (name == "lgt53") {
    e.description = "LeGall-Tabatabai 5/3 analysis bank";
    e.filters = FilterBank{"lgt53", causal({-1, 2, 6, 2, -1}, 8), causal({-1, 2, -1}, 2)};
    e.expected_det = {1, 1};
  } else if (name == "cdf75") {
    e.description = "CDF(7,5) causal PWD analysis matrix";
    e.polyphase = PolyMatrix2(over({3, 5, 5, 3}, 32), over({-3, 10, -3}, 8), over({1, 6, 1}, 8), over({-1, -1}, 2));
    e.expected_det = {-1, 2};
  } else if (name == "haar") {
    e.description = "Haar analysis bank";
    e.filters = FilterBank{"haar", causal({1, 1}, 2), causal({-1, 1}, 1)};
    e.expected_det = {1, 0};
  } else {
    throw Error(ErrorCode::kIo, "no built-in corpus entry named '" + std::string(name) + "'");
  }
  if (e.filters) e.polyphase = polyphase_decompose(*e.filters);
  check_det(e);
  return e;
}

std::string corpus_dir() {
  if (const char* env = std::getenv("LIFTFACT_CORPUS_DIR"); env && *env) return env;
  return LIFTFACT_DEFAULT_CORPUS_DIR;
}

CorpusEntry entry_from_json(const json& j) {
  CorpusEntry e;
  try {
    e.name = j.at("name").get<std::string>();
    e.description = j.value("description", "");
    if (j.contains("filters")) {
      const json& f = j.at("filters");
      e.filters = FilterBank{e.name, laurent_from_json(f.at("h0")), laurent_from_json(f.at("h1"))};
      e.polyphase = polyphase_decompose(*e.filters);
      if (j.contains("polyphase") && matrix_from_json(j.at("polyphase")) != e.polyphase) {
        throw Error(ErrorCode::kVerificationFailed, "corpus entry '" + e.name + "': filters and polyphase disagree");
      }
    } else {
      e.polyphase = matrix_from_json(j.at("polyphase"));
    }
    e.expected_det = det_from_json(j.at("expected_det"));
    if (j.contains("golden")) {
      for (const auto& [key, value] : j.at("golden").items()) e.golden[key] = steps_from_json(value);
    }
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::kParse, std::string("malformed corpus entry: ") + ex.what());
  }
  check_det(e);
  return e;
}

json to_json(const CorpusEntry& e) {
  json j{{"schema", kBankSchema}, {"name", e.name}};
  if (!e.description.empty()) j["description"] = e.description;
  if (e.filters) {
    j["filters"] = json{{"h0", laurent_to_json(e.filters->h0)}, {"h1", laurent_to_json(e.filters->h1)}};
  }
  j["polyphase"] = to_json(e.polyphase);
  j["expected_det"] = to_json(e.expected_det);
  if (!e.golden.empty()) {
    json g = json::object();
    for (const auto& [k, v] : e.golden) g[k] = to_json(v);
    j["golden"] = g;
  }
  return j;
}

namespace {

json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + p.string());
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::kParse, p.string() + ": " + ex.what());
  }
}

}  // namespace

CorpusEntry load_entry(std::string_view name_or_path) {
  namespace fs = std::filesystem;
  fs::path direct(name_or_path);
  if (direct.extension() == ".json" && fs::exists(direct)) return entry_from_json(read_json_file(direct));
  fs::path in_dir = fs::path(corpus_dir()) / (std::string(name_or_path) + ".json");
  if (fs::exists(in_dir)) return entry_from_json(read_json_file(in_dir));
  for (const auto& n : builtin_names())
    if (n == name_or_path) return builtin_entry(n);
  throw Error(ErrorCode::kIo, "unknown bank '" + std::string(name_or_path) + "' (looked in " + corpus_dir() + ")");
}

}  // namespace liftfact
