#pragma once

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "json.hpp"
#include "sdsearch/configuration.hpp"
#include "sdsearch/isotropic.hpp"

namespace cli {

using json = nlohmann::json;

enum ExitCode { kDone = 0, kInvariant = 1, kInput = 2, kBudget = 3 };

/// "i/N" with 0 <= i < N.
sdsearch::Shard parse_shard(const std::string& text);

/// Full-size configuration, or the desk-scale one with `scale` blocks.
sdsearch::HConfig config_for(const std::string& group, std::optional<std::size_t> scale);

/// One JSON object per line on stdout.
inline void emit(const json& j) { std::cout << j.dump() << '\n'; }

/// Summary footer lines start with '#' so JSON-lines readers can skip them.
inline void footer(const std::string& text) { std::cout << "# " << text << '\n'; }

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct S3Options {
  std::string dataset;
  std::string shard = "0/1";
  int min_dx = 4;
  int cap = 8;
  bool text = false;
};
int cmd_s3(const S3Options& o);

struct OrbitsOptions {
  std::string codes;
  std::string group;
  std::optional<std::size_t> scale;
  int distance = 16;
  std::string out;
};
int cmd_orbits(const OrbitsOptions& o);

struct ExtendOptions {
  std::string reps;
  std::string group;
  std::string shard = "0/1";
  std::optional<std::size_t> scale;
  int distance = 16;
};
int cmd_extend(const ExtendOptions& o);

struct IngestOptions {
  std::string path;
  bool additive = false;
  std::optional<std::size_t> length;
  std::optional<int> distance;
};
int cmd_ingest(const IngestOptions& o);

int cmd_classify(std::size_t length, bool additive, bool conjugation);

/// Runs one named suite; returns the exit code.
int cmd_verify(const std::string& suite);

}  // namespace cli
