#include "bcov/fixtures.hpp"

#include <cstdlib>
#include <fstream>

#ifndef BCOV_FIXTURES_DEFAULT
#define BCOV_FIXTURES_DEFAULT "fixtures"
#endif

namespace bcov {

std::string fixtures_dir() {
  if (const char* env = std::getenv("BCOV_FIXTURES_DIR")) return env;
  return BCOV_FIXTURES_DEFAULT;
}

std::vector<std::string> fixture_names() {
  return {"notbranched-i", "notbranched-ii-pl", "x-cross",
          "bezout-n2-regular", "bezout-n3-collapse", "finite-x"};
}

Json load_fixture(const std::string& name) {
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_')
      throw InputError("unknown fixture '" + name + "'");
  std::string path = fixtures_dir() + "/" + name + ".json";
  std::ifstream in(path);
  if (!in) throw InputError("unknown fixture '" + name + "' (no file " + path + ")");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InputError("fixture '" + name + "': " + e.what());
  }
  return j;
}

static Json load_kind(const std::string& name, const std::string& kind) {
  Json j = load_fixture(name);
  if (j.value("kind", "") != kind)
    throw InputError("fixture '" + name + "' is not a " + kind + " fixture");
  return j;
}

PLCovering plcov_fixture(const std::string& name) {
  return plcov_from_json(load_kind(name, "plcov"));
}

SigmaPoint bezout_fixture(const std::string& name) {
  Json j = load_kind(name, "bezout");
  int n = j.at("n").get<int>();
  std::vector<Rat> coords;
  for (const auto& v : j.at("point")) coords.push_back(rat_from_json(v, "point"));
  return SigmaPoint(n, std::move(coords));
}

FinMap fintop_fixture(const std::string& name) {
  return finmap_from_json(load_kind(name, "fintop"));
}

}  // namespace bcov
