#pragma once

// JSON forms for the file formats and report serialization. Counts serialize
// as decimal strings (they outgrow 64-bit quickly); rationals as "p/q".

#include "doubletrace/braid.hpp"
#include "doubletrace/common.hpp"
#include "doubletrace/group.hpp"
#include "doubletrace/invariants.hpp"
#include "doubletrace/presentation.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace doubletrace {

// {"strands": n, "word": "s1 s2^-1"}
inline BraidWord braid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("word")) throw parse_error("braid JSON needs a \"word\" field");
  const int strands = j.contains("strands") ? j.at("strands").get<int>() : 0;
  return parse_braid(j.at("word").get<std::string>(), strands);
}

inline nlohmann::json braid_to_json(const BraidWord& b) {
  return {{"strands", b.strands}, {"word", serialize_braid(b)}};
}

// {"generators": k, "relators": ["g0 g1^-1", ...]}
inline GroupPresentation presentation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators"))
    throw parse_error("presentation JSON needs a \"generators\" field");
  GroupPresentation p;
  p.generator_count = j.at("generators").get<int>();
  if (j.contains("relators"))
    for (const auto& r : j.at("relators"))
      p.relators.push_back(parse_word(r.get<std::string>(), p.generator_count));
  validate_presentation(p);
  return p;
}

inline nlohmann::json profile_to_json(const OrderProfile& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [order, count] : p.counts) j[std::to_string(order)] = count;
  return j;
}

inline nlohmann::json report_to_json(const InvariantReport& rep) {
  nlohmann::json battery = nlohmann::json::array();
  for (const BatteryEntry& e : rep.battery)
    battery.push_back({{"name", e.name},
                       {"word", e.word},
                       {"strands", e.strands},
                       {"left_tau", e.left_tau.str()},
                       {"right_tau", e.right_tau.str()},
                       {"equal", e.equal}});
  nlohmann::json homs = nlohmann::json::array();
  for (const HomEntry& h : rep.hom_counts)
    homs.push_back({{"preset", h.preset},
                    {"left_count", h.left_count},
                    {"right_count", h.right_count},
                    {"equal", h.equal}});
  return {{"left_label", rep.left_label},
          {"right_label", rep.right_label},
          {"left_profile", profile_to_json(rep.left_profile)},
          {"right_profile", profile_to_json(rep.right_profile)},
          {"profiles_equal", rep.profiles_equal},
          {"battery", battery},
          {"hom_counts", homs},
          {"left_abelianization", rep.left_abelianization},
          {"right_abelianization", rep.right_abelianization},
          {"abelianization_equal", rep.abelianization_equal},
          {"first_distinguishing", rep.first_distinguishing},
          {"verdict", rep.verdict},
          {"budget", rep.budget},
          {"threads", rep.threads}};
}

// Extra battery words for the screening command:
// {"words": ["s1 s1", {"strands": 3, "word": "s1 s2"}, ...]}
inline std::vector<BraidWord> battery_words_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("words"))
    throw parse_error("battery JSON needs a \"words\" array");
  std::vector<BraidWord> out;
  for (const auto& item : j.at("words")) {
    if (item.is_string()) out.push_back(parse_braid(item.get<std::string>()));
    else out.push_back(braid_from_json(item));
  }
  return out;
}

inline std::string rational_to_string(const Rational& r) {
  return r.str();  // "p/q", or just "p" when the denominator is 1
}

}  // namespace doubletrace
