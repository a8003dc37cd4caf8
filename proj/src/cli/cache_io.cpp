#include <fstream>
#include <ostream>

#include "json.hpp"

#include "mrees/cli.hpp"

namespace mrees::cli {

namespace {

using nlohmann::json;

Exponent parse_decimal(const std::string& s) {
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) throw std::invalid_argument("trailing characters in integer");
  return v;
}

}  // namespace

CacheStore::CacheStore(std::string path, std::ostream& warnings) : path_(std::move(path)), warnings_(&warnings) {
  std::ifstream in(*path_);
  if (!in) return;  // a missing file is an empty cache
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      Record rec{};
      const auto& grade = j.at("grade");
      if (!grade.is_array() || grade.size() != 3) throw std::invalid_argument("grade must have three entries");
      for (std::size_t i = 0; i < 3; ++i) rec.grade[i] = parse_decimal(grade[i].get<std::string>());
      for (const auto& g : j.at("generators")) {
        std::vector<Exponent> e;
        for (const auto& c : g) e.push_back(parse_decimal(c.get<std::string>()));
        if (e.empty() || e.size() > 3) throw std::invalid_argument("bad generator length");
        rec.generators.emplace_back(std::span<const Exponent>(e));
      }
      rec.colength = parse_decimal(j.at("colength").get<std::string>());
      records_[j.at("key").get<std::string>()].push_back(std::move(rec));
      ++loaded_;
    } catch (const std::exception& e) {
      ++skipped_;
      *warnings_ << "warning: skipping cache record " << lineno << " of " << *path_ << ": " << e.what() << '\n';
    }
  }
}

FiltrationCache& CacheStore::get(const std::vector<MonomialIdeal>& ideals, FiltrationKind kind) {
  auto cache = std::make_unique<FiltrationCache>(ideals, kind);
  const std::string key = cache->key();
  auto it = caches_.find(key);
  if (it != caches_.end()) return *it->second;

  auto recs = records_.find(key);
  if (recs != records_.end()) {
    for (const Record& rec : recs->second) {
      bool ok = false;
      try {
        MonomialIdeal ideal = minimalize(cache->ring(), rec.generators);
        ok = cache->adopt(rec.grade, {std::move(ideal), rec.colength});
      } catch (const Error&) {
      }
      if (!ok) {
        ++skipped_;
        if (warnings_ != nullptr) *warnings_ << "warning: skipping inconsistent cache record for " << key << '\n';
      }
    }
  }
  return *caches_.emplace(key, std::move(cache)).first->second;
}

void CacheStore::flush() {
  if (!path_) return;
  std::ofstream out(*path_, std::ios::app);
  if (!out) {
    if (warnings_ != nullptr) *warnings_ << "warning: cannot append to cache file " << *path_ << '\n';
    return;
  }
  for (const auto& [key, cache] : caches_) {
    for (const Grade& g : cache->computed()) {
      const FiltrationEntry& e = cache->table().at(g);
      json gens = json::array();
      for (const auto& v : e.ideal.generators()) {
        json row = json::array();
        for (int i = 0; i < v.size(); ++i) row.push_back(std::to_string(v[i]));
        gens.push_back(std::move(row));
      }
      json rec;
      rec["key"] = key;
      rec["grade"] = {std::to_string(g[0]), std::to_string(g[1]), std::to_string(g[2])};
      rec["generators"] = std::move(gens);
      rec["colength"] = std::to_string(e.colength);
      out << rec.dump() << '\n';
    }
  }
}

}  // namespace mrees::cli
