#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "straightknot/diagram.hpp"
#include "straightknot/invariants.hpp"

namespace sk {

struct KnotRecord {
  std::string name;
  PdCode pd;
  Diagram diagram;
  int crossing_number = 0;
};

struct Identification {
  std::string name;
  bool collision = false;
  std::vector<std::string> candidates;  // every table name with this fingerprint
};

// Immutable after load. Fingerprints are filled once, on first use.
class Table {
 public:
  Table();

  static Table from_records(std::vector<KnotRecord> records, std::string content_hash = "");

  const std::vector<KnotRecord>& records() const { return recs_; }
  const KnotRecord* find(const std::string& name) const;
  const std::string& content_hash() const { return hash_; }

  const Fingerprint& fingerprint(size_t i) const;
  std::optional<Identification> identify(const Fingerprint& f) const;
  // names with this fingerprint and crossing number at most max_crossings
  std::vector<std::string> matching(const Fingerprint& f, int max_crossings) const;
  // classes of two or more names sharing a fingerprint, sorted
  std::vector<std::vector<std::string>> collisions() const;

  bool load_cache(const std::string& path) const;
  void save_cache(const std::string& path) const;

 private:
  void ensure_index() const;

  std::vector<KnotRecord> recs_;
  std::map<std::string, size_t> by_name_;
  std::string hash_;
  struct Index {
    std::once_flag once;
    std::vector<Fingerprint> fps;
    std::multimap<Fingerprint, size_t> by_fp;
  };
  std::shared_ptr<Index> idx_;
};

std::string fnv1a_hex(const std::string& bytes);

// JSON lines {"name":..,"pd":[[..],..]}. With use_cache, fingerprints are
// read from / written to "<path>.fingerprints.json" when its hash matches.
Table load_table(const std::string& path, bool use_cache = true);
std::optional<Identification> identify(const Diagram& d, const Table& t);
std::vector<std::vector<std::string>> fingerprint_collisions(const Table& t);

}  // namespace sk
