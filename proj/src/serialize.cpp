#include "occ/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "occ/error.hpp"

namespace occ {

using nlohmann::json;

json rat_to_json(const Rat& r) { return json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}}; }

Rat rat_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() || !j["den"].is_string())
    throw Error(ErrorKind::InvalidSpec, "rational must be {\"num\": string, \"den\": string}");
  Int num, den;
  if (num.set_str(j["num"].get<std::string>(), 10) != 0 || den.set_str(j["den"].get<std::string>(), 10) != 0)
    throw Error(ErrorKind::InvalidSpec, "rational with a malformed integer");
  if (den == 0) throw Error(ErrorKind::InvalidSpec, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string decimal(const Rat& r, int k) {
  Int scale = 1;
  for (int i = 0; i < k; ++i) scale *= 10;
  Rat x = abs(r) * scale + Rat(1, 2);
  Int q = x.get_num() / x.get_den();
  std::string digits = q.get_str();
  if ((int)digits.size() <= k) digits = std::string(k + 1 - digits.size(), '0') + digits;
  std::string out = digits.substr(0, digits.size() - k);
  if (k > 0) out += "." + digits.substr(digits.size() - k);
  if (r < 0 && q != 0) out = "-" + out;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string class_str(const CurveClass& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].get_str();
  return s + ")";
}

namespace {

Int int_of(const json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  throw Error(ErrorKind::InvalidSpec, std::string(what) + " must be an integer");
}

int index_of(const json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorKind::InvalidSpec, std::string(what) + " must be an integer index");
  return j.get<int>();
}

}  // namespace

RawSpec parse_fan_spec(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidSpec, "spec must be an object");
  for (const char* key : {"rays", "max_cones", "brane"})
    if (!j.contains(key)) throw Error(ErrorKind::InvalidSpec, std::string("missing field ") + key);
  RawSpec s;
  if (!j["rays"].is_array()) throw Error(ErrorKind::InvalidSpec, "rays must be an array");
  for (const auto& r : j["rays"]) {
    if (!r.is_array() || r.size() != 3) throw Error(ErrorKind::InvalidSpec, "each ray is an integer triple");
    IntVec v;
    for (const auto& x : r) v.push_back(int_of(x, "ray entry"));
    s.rays.push_back(v);
  }
  if (!j["max_cones"].is_array()) throw Error(ErrorKind::InvalidSpec, "max_cones must be an array");
  for (const auto& c : j["max_cones"]) {
    if (!c.is_array() || c.size() != 3) throw Error(ErrorKind::InvalidSpec, "each cone is an index triple");
    std::vector<int> v;
    for (const auto& x : c) {
      int i = index_of(x, "cone entry");
      if (i < 0 || i >= (int)s.rays.size()) throw Error(ErrorKind::InvalidSpec, "cone index out of range");
      v.push_back(i);
    }
    s.cones.push_back(v);
  }
  const json& b = j["brane"];
  if (!b.is_object() || !b.contains("edge_rays") || !b.contains("cone"))
    throw Error(ErrorKind::InvalidSpec, "brane needs edge_rays and cone");
  if (!b["edge_rays"].is_array() || b["edge_rays"].size() != 2)
    throw Error(ErrorKind::InvalidSpec, "brane.edge_rays must hold two indices");
  for (const auto& x : b["edge_rays"]) {
    int i = index_of(x, "brane.edge_rays entry");
    if (i < 0 || i >= (int)s.rays.size()) throw Error(ErrorKind::InvalidSpec, "brane edge index out of range");
    s.brane.edge_rays.push_back(i);
  }
  s.brane.cone = index_of(b["cone"], "brane.cone");
  if (s.brane.cone < 0 || s.brane.cone >= (int)s.cones.size())
    throw Error(ErrorKind::InvalidSpec, "brane cone index out of range");
  for (int r : s.brane.edge_rays) {
    const auto& c = s.cones[s.brane.cone];
    if (std::find(c.begin(), c.end(), r) == c.end())
      throw Error(ErrorKind::InvalidSpec, "brane edge rays are not rays of the brane cone");
  }
  s.brane.framing = j.contains("framing") ? int_of(j["framing"], "framing") : Int(0);
  return s;
}

RawSpec load_fan_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidSpec, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidSpec, std::string("malformed JSON: ") + e.what());
  }
  return parse_fan_spec(j);
}

json fan_spec_to_json(const RawSpec& spec) {
  json rays = json::array(), cones = json::array();
  for (const auto& r : spec.rays) {
    json row = json::array();
    for (const auto& x : r) row.push_back(x.get_si());
    rays.push_back(row);
  }
  for (const auto& c : spec.cones) cones.push_back(c);
  return json{{"rays", rays},
              {"max_cones", cones},
              {"brane", {{"edge_rays", spec.brane.edge_rays}, {"cone", spec.brane.cone}}},
              {"framing", spec.brane.framing.get_si()}};
}

json report_to_json(const InvariantReport& r) {
  json beta = json::array();
  for (const auto& x : r.beta_prime) beta.push_back(x.get_str());
  return json{{"beta_prime", beta},
              {"d", r.d.get_str()},
              {"N_disk", rat_to_json(r.disk)},
              {"N_rel", rat_to_json(r.rel)},
              {"N_cl0", rat_to_json(r.cl0)},
              {"N_cl1", rat_to_json(r.cl1)},
              {"checks",
               {{"open_relative", r.open_relative},
                {"relative_local", r.relative_local},
                {"divisor_relation", r.divisor_relation},
                {"open_closed", r.open_closed}}}};
}

}  // namespace occ
