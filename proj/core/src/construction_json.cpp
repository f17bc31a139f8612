#include <stdexcept>
#include <string>

#include <json.hpp>

#include "melon/melonic.hpp"

namespace melon::melonic {
namespace {

using json = nlohmann::ordered_json;

int get_int(const json& obj, const char* field, std::size_t stage) {
  const auto it = obj.find(field);
  if (it == obj.end() || !it->is_number_integer()) {
    throw std::invalid_argument("stage " + std::to_string(stage) + ": \"" + field + "\" must be an integer");
  }
  return it->get<int>();
}

}  // namespace

MelonicConstruction construction_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed construction JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("stages") || !doc["stages"].is_array()) {
    throw std::invalid_argument("construction JSON needs a \"stages\" array");
  }

  MelonicConstruction c;
  std::size_t s = 0;
  for (const auto& entry : doc["stages"]) {
    ++s;
    if (!entry.is_object()) throw std::invalid_argument("stage " + std::to_string(s) + " is not an object");
    const auto bananas = entry.find("bananas");
    if (bananas == entry.end() || !bananas->is_array()) {
      throw std::invalid_argument("stage " + std::to_string(s) + ": \"bananas\" must be an array");
    }
    Stage st;
    for (const auto& a : *bananas) {
      if (!a.is_number_integer()) {
        throw std::invalid_argument("stage " + std::to_string(s) + ": banana sizes must be integers");
      }
      st.banana_sizes.push_back(a.get<int>());
    }
    st.parent_stage = get_int(entry, "parent_stage", s);
    st.parent_banana = get_int(entry, "parent_banana", s);
    c.stages.push_back(std::move(st));
  }
  return c;
}

std::string construction_to_json(const MelonicConstruction& c) {
  json stages = json::array();
  for (const auto& st : c.stages) {
    stages.push_back({{"bananas", st.banana_sizes},
                      {"parent_stage", st.parent_stage},
                      {"parent_banana", st.parent_banana}});
  }
  return json{{"stages", std::move(stages)}}.dump();
}

}  // namespace melon::melonic
