#pragma once

#include <string>

#include <json.hpp>

namespace polydec {

inline constexpr const char* kToolVersion = "0.1.0";

// Machine-checkable result document.  Serialization is deterministic (sorted
// keys, rationals as canonical strings) so certificates round-trip
// byte-identically.
struct Certificate {
  std::string kind;  // DECOMPOSITION_TREE, INDECOMPOSABLE_REPORT, FINITENESS,
                     // REPRESENTATION, MONODROMY_REPORT
  std::string version = kToolVersion;
  nlohmann::json input;
  nlohmann::json payload;

  friend bool operator==(const Certificate& a, const Certificate& b) {
    return a.kind == b.kind && a.version == b.version && a.input == b.input &&
           a.payload == b.payload;
  }
};

std::string serialize(const Certificate& c);
Certificate deserialize(const std::string& text);

}  // namespace polydec
