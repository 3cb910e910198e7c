#include "hrrc/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hrrc {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t limit = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i + 1 < limit; ++i)
      if (text[i] == '\n') ++line;
    throw ParseError("line " + std::to_string(line) + ": " + e.what());
  }
}

const json& field(const json& object, const char* key, const std::string& path) {
  if (!object.is_object()) throw ParseError(path + ": expected an object");
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(path + "." + key + ": missing field");
  return *it;
}

std::string as_string(const json& value, const std::string& path) {
  if (!value.is_string()) throw ParseError(path + ": expected a string");
  return value.get<std::string>();
}

int as_int(const json& value, const std::string& path) {
  if (!value.is_number_integer()) throw ParseError(path + ": expected an integer");
  return value.get<int>();
}

std::vector<std::string> as_string_list(const json& value, const std::string& path) {
  if (!value.is_array()) throw ParseError(path + ": expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < value.size(); ++i)
    out.push_back(as_string(value[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

const json& array_field(const json& object, const char* key, const std::string& path) {
  const json& value = field(object, key, path);
  if (!value.is_array()) throw ParseError(path + "." + key + ": expected an array");
  return value;
}

}  // namespace

Instance load_instance(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("$: expected an object");

  InstanceBuilder builder;
  std::set<std::string> resident_ids, hospital_ids;

  const json& residents = array_field(doc, "residents", "$");
  for (std::size_t i = 0; i < residents.size(); ++i) {
    const std::string path = "$.residents[" + std::to_string(i) + "]";
    std::string id = as_string(field(residents[i], "id", path), path + ".id");
    if (!resident_ids.insert(id).second)
      throw ParseError(path + ".id: duplicate resident id '" + id + "'");
    builder.resident(std::move(id), as_string_list(field(residents[i], "prefs", path), path + ".prefs"));
  }

  const json& hospitals = array_field(doc, "hospitals", "$");
  for (std::size_t i = 0; i < hospitals.size(); ++i) {
    const std::string path = "$.hospitals[" + std::to_string(i) + "]";
    std::string id = as_string(field(hospitals[i], "id", path), path + ".id");
    if (!hospital_ids.insert(id).second)
      throw ParseError(path + ".id: duplicate hospital id '" + id + "'");
    int capacity = as_int(field(hospitals[i], "capacity", path), path + ".capacity");
    builder.hospital(std::move(id), capacity,
                     as_string_list(field(hospitals[i], "prefs", path), path + ".prefs"));
  }

  std::vector<std::pair<std::set<std::string>, int>> seen_regions;
  if (auto it = doc.find("regions"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("$.regions: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "$.regions[" + std::to_string(i) + "]";
      const json& region = (*it)[i];
      auto members = as_string_list(field(region, "hospitals", path), path + ".hospitals");
      int cap = as_int(field(region, "cap", path), path + ".cap");
      std::set<std::string> key(members.begin(), members.end());
      bool merged = std::any_of(seen_regions.begin(), seen_regions.end(),
                                [&](const auto& s) { return s.first == key && s.second == cap; });
      if (merged) continue;
      seen_regions.emplace_back(key, cap);
      builder.region(std::move(members), cap);
    }
  }

  Instance instance;
  try {
    instance = builder.build();
  } catch (const PreconditionError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  require_valid(instance);
  return instance;
}

std::string save_instance(const Instance& instance) {
  json doc;
  doc["residents"] = json::array();
  for (const auto& r : instance.residents) {
    json prefs = json::array();
    for (int h : r.prefs) prefs.push_back(instance.hospitals[h].id);
    doc["residents"].push_back({{"id", r.id}, {"prefs", prefs}});
  }
  doc["hospitals"] = json::array();
  for (const auto& h : instance.hospitals) {
    json prefs = json::array();
    for (int r : h.prefs) prefs.push_back(instance.residents[r].id);
    doc["hospitals"].push_back({{"id", h.id}, {"capacity", h.capacity}, {"prefs", prefs}});
  }
  doc["regions"] = json::array();
  for (const auto& e : instance.regions) {
    json members = json::array();
    for (int h : e.hospitals) members.push_back(instance.hospitals[h].id);
    doc["regions"].push_back({{"hospitals", members}, {"cap", e.cap}});
  }
  return doc.dump(2) + "\n";
}

Assignment load_matching(const Instance& instance, std::string_view text) {
  const json doc = parse_json(text);
  const json& pairs = array_field(doc, "pairs", "$");
  std::vector<Pair> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string path = "$.pairs[" + std::to_string(i) + "]";
    auto ids = as_string_list(pairs[i], path);
    if (ids.size() != 2) throw ParseError(path + ": expected [resident, hospital]");
    auto r = instance.find_resident(ids[0]);
    if (!r) throw ParseError(path + "[0]: unknown resident '" + ids[0] + "'");
    auto h = instance.find_hospital(ids[1]);
    if (!h) throw ParseError(path + "[1]: unknown hospital '" + ids[1] + "'");
    out.push_back({*r, *h});
  }
  return Assignment(std::move(out));
}

std::string save_matching(const Instance& instance, const Assignment& matching) {
  json pairs = json::array();
  for (const Pair& p : matching.pairs())
    pairs.push_back({instance.residents[p.resident].id, instance.hospitals[p.hospital].id});
  return json{{"pairs", pairs}}.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace hrrc
