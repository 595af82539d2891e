#include "polydec/certificate.hpp"

#include "polydec/rational.hpp"

namespace polydec {

std::string serialize(const Certificate& c) {
  nlohmann::json j;
  j["kind"] = c.kind;
  j["version"] = c.version;
  j["input"] = c.input;
  j["payload"] = c.payload;
  return j.dump(2);
}

Certificate deserialize(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("kind") || !j.contains("version") ||
      !j.contains("input") || !j.contains("payload"))
    throw input_error("certificate: missing required field");
  Certificate c;
  c.kind = j.at("kind").get<std::string>();
  c.version = j.at("version").get<std::string>();
  c.input = j.at("input");
  c.payload = j.at("payload");
  return c;
}

}  // namespace polydec
