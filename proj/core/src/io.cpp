#include "sa/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace sa {

namespace {

std::vector<std::vector<int>> rows_from_json(const Json& j) {
  return j.get<std::vector<std::vector<int>>>();
}

Json rows_to_json(const OpTable& t) { return Json(t.to_rows()); }

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error("parse error in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

Json semiring_to_json(const Semiring& r) {
  Json j;
  j["name"] = r.name();
  j["size"] = r.size();
  j["zero"] = r.zero();
  j["one"] = r.one();
  j["add"] = rows_to_json(r.add_table());
  j["mul"] = rows_to_json(r.mul_table());
  return j;
}

Json module_to_json(const Module& v, const std::string& semiring_ref) {
  Json j;
  if (semiring_ref.empty())
    j["semiring"] = semiring_to_json(v.ring());
  else
    j["semiring"] = semiring_ref;
  j["size"] = v.size();
  j["zero"] = v.zero();
  j["add"] = rows_to_json(v.add_table());
  j["act"] = rows_to_json(v.act_table());
  return j;
}

Json monoid_to_json(const FiniteMonoid& m) {
  Json j;
  j["size"] = m.size();
  j["identity"] = m.identity() ? Json(*m.identity()) : Json(nullptr);
  j["zero"] = m.zero_element() ? Json(*m.zero_element()) : Json(nullptr);
  j["op"] = rows_to_json(m.op_table());
  return j;
}

Semiring semiring_from_json(const Json& j) {
  try {
    return Semiring::make(j.value("name", std::string("unnamed")),
                          j.at("size").get<int>(), j.at("zero").get<int>(),
                          j.at("one").get<int>(),
                          OpTable::from_rows(rows_from_json(j.at("add"))),
                          OpTable::from_rows(rows_from_json(j.at("mul"))));
  } catch (const Json::exception& e) {
    throw Error(std::string("bad semiring json: ") + e.what());
  }
}

FiniteMonoid monoid_from_json(const Json& j) {
  try {
    std::optional<int> identity, zero;
    if (j.contains("identity") && !j.at("identity").is_null())
      identity = j.at("identity").get<int>();
    if (j.contains("zero") && !j.at("zero").is_null())
      zero = j.at("zero").get<int>();
    return FiniteMonoid::make(j.at("size").get<int>(), identity, zero,
                              OpTable::from_rows(rows_from_json(j.at("op"))));
  } catch (const Json::exception& e) {
    throw Error(std::string("bad monoid json: ") + e.what());
  }
}

Module module_from_json(const Json& j, const std::string& base_dir) {
  try {
    const Json& rj = j.at("semiring");
    Semiring ring;
    if (rj.is_string()) {
      std::filesystem::path p = rj.get<std::string>();
      if (p.is_relative() && !base_dir.empty())
        p = std::filesystem::path(base_dir) / p;
      ring = semiring_from_json(read_file(p.string()));
    } else {
      ring = semiring_from_json(rj);
    }
    return Module::make(std::make_shared<Semiring>(std::move(ring)),
                        j.at("size").get<int>(), j.at("zero").get<int>(),
                        OpTable::from_rows(rows_from_json(j.at("add"))),
                        OpTable::from_rows(rows_from_json(j.at("act"))));
  } catch (const Json::exception& e) {
    throw Error(std::string("bad module json: ") + e.what());
  }
}

Structure load_structure(const std::string& path) {
  Json j = read_file(path);
  std::string dir = std::filesystem::path(path).parent_path().string();
  if (j.contains("act")) return module_from_json(j, dir);
  if (j.contains("mul")) return semiring_from_json(j);
  if (j.contains("op")) return monoid_from_json(j);
  throw Error(path + ": unrecognized structure (no act/mul/op table)");
}

Semiring load_semiring(const std::string& path) {
  return semiring_from_json(read_file(path));
}

Module load_module(const std::string& path) {
  return module_from_json(read_file(path),
                          std::filesystem::path(path).parent_path().string());
}

FiniteMonoid load_monoid(const std::string& path) {
  return monoid_from_json(read_file(path));
}

Bitset parse_index_set(const std::string& csv, int universe) {
  Bitset out(universe);
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int v;
    try {
      size_t pos = 0;
      v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error("bad element index '" + tok + "'");
    }
    if (v < 0 || v >= universe)
      throw Error("element index " + std::to_string(v) + " out of range [0," +
                  std::to_string(universe) + ")");
    out.set(v);
  }
  return out;
}

Json halo_to_json(const HaloResult& h, bool with_witnesses) {
  Json j;
  j["members"] = h.members.indices();
  if (with_witnesses) {
    Json w = Json::array();
    int pos = 0;
    h.members.for_each([&](int e) {
      w.push_back({{"element", e},
                   {"lambda", h.witnesses[pos].lambda},
                   {"mu", h.witnesses[pos].mu}});
      ++pos;
    });
    j["witnesses"] = std::move(w);
  }
  return j;
}

Json lattice_to_json(const SALattice& l) {
  Json j;
  Json members = Json::array();
  for (const Bitset& w : l.members) members.push_back(w.indices());
  j["members"] = std::move(members);
  Json edges = Json::array();
  for (auto [a, b] : l.hasse) edges.push_back({a, b});
  j["hasse_edges"] = std::move(edges);
  return j;
}

}  // namespace sa
