#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pyramidal/classify.hpp"
#include "pyramidal/designs.hpp"
#include "pyramidal/error.hpp"
#include "pyramidal/number_theory.hpp"
#include "pyramidal/perm_group.hpp"

namespace pyr::io {

using nlohmann::json;

inline json group_to_json(const PermGroup& g) {
  json gens = json::array();
  for (const auto& s : g.generators()) gens.push_back(s.images());
  json j{{"degree", g.degree()}, {"generators", std::move(gens)}};
  if (!g.name().empty()) j["name"] = g.name();
  return j;
}

inline PermGroup group_from_json(const json& j) {
  try {
    const std::size_t degree = j.at("degree").get<std::size_t>();
    if (degree == 0) throw Error(Errc::invalid_argument, "group JSON: degree must be positive");
    std::vector<Permutation> gens;
    for (const auto& row : j.at("generators")) {
      auto images = row.get<std::vector<Point>>();
      if (images.size() != degree) throw Error(Errc::degree_mismatch, "group JSON: generator length differs from degree");
      gens.emplace_back(std::move(images));
    }
    PermGroup g = PermGroup::close(degree, gens);
    if (j.contains("name")) g = std::move(g).named(j.at("name").get<std::string>());
    return g;
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("group JSON: ") + e.what());
  }
}

inline json report_to_json(const PyramidalReport& r) {
  return json{{"order", r.order},           {"m", r.m},
              {"class_sizes", r.class_sizes}, {"pyramidal", r.is_pyramidal},
              {"solvable", r.solvable},       {"k_order", r.k_order},
              {"c_order", r.c_order},         {"sylow2", std::string(to_string(r.sylow2))}};
}

inline json design_to_json(const TripleSystem& t, const std::optional<Resolution>& r = std::nullopt) {
  json blocks = json::array();
  for (const auto& b : t.blocks) blocks.push_back({b[0], b[1], b[2]});
  json j{{"v", t.v}, {"blocks", std::move(blocks)}};
  if (r) j["resolution"] = r->classes;
  return j;
}

inline std::pair<TripleSystem, std::optional<Resolution>> design_from_json(const json& j) {
  try {
    TripleSystem t{j.at("v").get<std::size_t>(), {}};
    for (const auto& b : j.at("blocks")) {
      auto pts = b.get<std::vector<long long>>();
      if (pts.size() != 3) throw Error(Errc::malformed_design, "design JSON: a block must have 3 points");
      Block blk{};
      for (int i = 0; i < 3; ++i) {
        if (pts[i] < 0 || static_cast<std::size_t>(pts[i]) >= t.v)
          throw Error(Errc::malformed_design, "design JSON: point out of range");
        blk[i] = static_cast<Point>(pts[i]);
      }
      t.blocks.push_back(blk);
    }
    std::optional<Resolution> r;
    if (j.contains("resolution") && !j.at("resolution").is_null())
      r = Resolution{j.at("resolution").get<std::vector<std::vector<std::size_t>>>()};
    return {std::move(t), std::move(r)};
  } catch (const json::exception& e) {
    throw Error(Errc::malformed_design, std::string("design JSON: ") + e.what());
  }
}

inline json membership_to_json(std::uint64_t m, std::uint64_t order, const nt::Membership& mem) {
  return json{{"m", m}, {"N", order}, {"member", mem.member}, {"set", std::string(nt::to_string(mem.set))}};
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::invalid_argument, path + ": " + e.what());
  }
}

inline void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace pyr::io
