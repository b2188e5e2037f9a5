#include "straightknot/table.hpp"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "straightknot/error.hpp"

namespace sk {

std::string fnv1a_hex(const std::string& bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Table::Table() : idx_(std::make_shared<Index>()) {}

Table Table::from_records(std::vector<KnotRecord> records, std::string content_hash) {
  Table t;
  t.recs_ = std::move(records);
  for (size_t i = 0; i < t.recs_.size(); ++i)
    if (!t.by_name_.emplace(t.recs_[i].name, i).second) throw Error(ErrorKind::Parse, "duplicate knot name " + t.recs_[i].name);
  t.hash_ = std::move(content_hash);
  return t;
}

const KnotRecord* Table::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &recs_[it->second];
}

void Table::ensure_index() const {
  std::call_once(idx_->once, [&] {
    if (idx_->fps.size() != recs_.size()) {
      idx_->fps.clear();
      for (const auto& r : recs_) idx_->fps.push_back(sk::fingerprint(r.diagram));
    }
    for (size_t i = 0; i < recs_.size(); ++i) idx_->by_fp.emplace(idx_->fps[i], i);
  });
}

const Fingerprint& Table::fingerprint(size_t i) const {
  ensure_index();
  return idx_->fps.at(i);
}

std::optional<Identification> Table::identify(const Fingerprint& f) const {
  ensure_index();
  auto [lo, hi] = idx_->by_fp.equal_range(f);
  if (lo == hi) return std::nullopt;
  Identification id;
  for (auto it = lo; it != hi; ++it) id.candidates.push_back(recs_[it->second].name);
  id.name = id.candidates.front();
  id.collision = id.candidates.size() > 1;
  return id;
}

std::vector<std::string> Table::matching(const Fingerprint& f, int max_crossings) const {
  ensure_index();
  std::vector<std::string> out;
  auto [lo, hi] = idx_->by_fp.equal_range(f);
  for (auto it = lo; it != hi; ++it)
    if (recs_[it->second].crossing_number <= max_crossings) out.push_back(recs_[it->second].name);
  return out;
}

std::vector<std::vector<std::string>> Table::collisions() const {
  ensure_index();
  std::vector<std::vector<std::string>> out;
  for (auto it = idx_->by_fp.begin(); it != idx_->by_fp.end();) {
    auto hi = idx_->by_fp.upper_bound(it->first);
    std::vector<std::string> cls;
    for (auto j = it; j != hi; ++j) cls.push_back(recs_[j->second].name);
    if (cls.size() > 1) out.push_back(std::move(cls));
    it = hi;
  }
  return out;
}

bool Table::load_cache(const std::string& path) const {
  std::ifstream in(path);
  if (!in) return false;
  std::vector<Fingerprint> fps;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.at("table_hash").get<std::string>() != hash_) return false;
    const auto& m = j.at("fingerprints");
    for (const auto& r : recs_) fps.push_back(Fingerprint::parse(m.at(r.name).get<std::string>()));
  } catch (const std::exception&) {
    return false;
  }
  std::call_once(idx_->once, [&] {
    idx_->fps = std::move(fps);
    for (size_t i = 0; i < recs_.size(); ++i) idx_->by_fp.emplace(idx_->fps[i], i);
  });
  return true;
}

void Table::save_cache(const std::string& path) const {
  ensure_index();
  nlohmann::json j;
  j["table_hash"] = hash_;
  nlohmann::json m = nlohmann::json::object();
  for (size_t i = 0; i < recs_.size(); ++i) m[recs_[i].name] = idx_->fps[i].serialize();
  j["fingerprints"] = m;
  const std::string tmp = path + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp);
    out << j.dump(1) << "\n";
    if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::Io, "cannot replace " + path);
  }
}

Table load_table(const std::string& path, bool use_cache) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();

  std::vector<KnotRecord> recs;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    KnotRecord r;
    try {
      auto j = nlohmann::json::parse(line);
      r.name = j.at("name").get<std::string>();
      r.pd = parse_pd(j.at("pd").dump());
    } catch (const std::exception& e) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + e.what());
    }
    try {
      r.diagram = validate_pd(r.pd);
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidPd, r.name + " (line " + std::to_string(lineno) + "): " + e.what());
    }
    r.crossing_number = static_cast<int>(r.pd.size());
    recs.push_back(std::move(r));
  }
  Table t = Table::from_records(std::move(recs), fnv1a_hex(text));
  if (use_cache) {
    const std::string cache = path + ".fingerprints.json";
    if (!t.load_cache(cache)) {
      try {
        t.save_cache(cache);
      } catch (const Error&) {
        // read-only location; fingerprints stay in memory
      }
    }
  }
  return t;
}

std::optional<Identification> identify(const Diagram& d, const Table& t) { return t.identify(fingerprint(d)); }

std::vector<std::vector<std::string>> fingerprint_collisions(const Table& t) { return t.collisions(); }

}  // namespace sk
