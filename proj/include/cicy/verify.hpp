#pragma once

#include <string>
#include <vector>

namespace cicy {

struct VerifyCheck {
  std::string module;  // chow, ruled, bounds, serre, classifier
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

/// Regression values, registry validation and rule self-audit. An empty module runs everything.
std::vector<VerifyCheck> run_verification(const std::string& module = "");

const std::vector<std::string>& verify_modules();

}  // namespace cicy
