#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cli_common.hpp"
#include "sdsearch/additive.hpp"
#include "sdsearch/decomp.hpp"
#include "sdsearch/equiv.hpp"
#include "sdsearch/errors.hpp"
#include "sdsearch/extend.hpp"
#include "sdsearch/io.hpp"

namespace cli {

using namespace sdsearch;
namespace fs = std::filesystem;

Shard parse_shard(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument("no slash");
    std::size_t used = 0;
    const auto i = std::stoull(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("index");
    const std::string rest = text.substr(slash + 1);
    const auto n = std::stoull(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("count");
    if (n == 0 || i >= n) throw std::invalid_argument("range");
    return Shard{static_cast<std::size_t>(i), static_cast<std::size_t>(n)};
  } catch (const std::logic_error&) {
    throw InputError("shard must be i/N with 0 <= i < N, got '" + text + "'");
  }
}

HConfig config_for(const std::string& group, std::optional<std::size_t> scale) {
  const HKind kind = parse_hkind(group);
  return scale ? make_config(kind, *scale) : make_config(kind);
}

namespace {

// E = sum of the sigma-images of the blown-up code.
BinaryCode candidate_E(const BinaryCode& d, const HConfig& cfg) {
  return build_E(blow_up_code(d, 2), cfg.sigma, cfg.sigma_order());
}

struct EVerdict {
  bool doubly_even = false;
  int distance = 0;
  bool bound = false;
  bool passes = false;
};

EVerdict check_E(const BinaryCode& e, int threshold) {
  EVerdict v;
  v.doubly_even = is_doubly_even(e);
  const DistanceResult d = min_distance(e, threshold - 1);
  v.distance = d.distance;
  v.bound = d.bound_hit;
  v.passes = v.doubly_even && !d.bound_hit && d.distance >= threshold;
  return v;
}

std::string stem_id(const fs::path& p, std::size_t index, std::size_t count) {
  std::string s = p.stem().string();
  if (count > 1) s += "#" + std::to_string(index + 1);
  return s;
}

}  // namespace

int cmd_s3(const S3Options& o) {
  const Shard shard = parse_shard(o.shard);
  std::ifstream in(o.dataset);
  if (!in) throw InputError("cannot open " + o.dataset);
  Stopwatch clock;
  AdditiveReader reader(in, o.dataset);
  S3Report report;
  AdditiveRecord rec;
  while (reader.next(rec)) {
    if (!shard.owns(rec.index)) continue;
    S3Record r;
    if (!rec.code) {
      r.index = rec.index;
      r.status = "malformed";
      r.detail = rec.error;
    } else {
      r = s3_check(rec.index, *rec.code, o.min_dx, o.cap);
    }
    report.add(r);
    if (!o.text) {
      json j{{"index", r.index}, {"m", r.dimension}, {"d_phi", r.d_phi}, {"status", r.status}};
      if (!r.detail.empty()) j["detail"] = r.detail;
      emit(j);
    }
  }
  if (o.text) {
    std::cout << report.to_text();
  } else {
    json hist = json::object();
    for (const auto& [d, c] : report.histogram) hist[std::to_string(d)] = c;
    emit({{"summary", "s3"},
          {"shard", o.shard},
          {"records", report.records.size()},
          {"rejected", report.rejected},
          {"max_d_phi", report.max_d_phi},
          {"contradictions", report.contradictions},
          {"histogram", hist}});
    footer("s3 shard " + o.shard + ": " + std::to_string(report.records.size()) + " records, max d(phi(X)) = " +
           std::to_string(report.max_d_phi) + ", " + std::to_string(report.contradictions) + " contradictions, " +
           std::to_string(clock.seconds()) + " s");
  }
  const bool malformed = std::any_of(report.records.begin(), report.records.end(),
                                     [](const S3Record& r) { return r.status == "malformed"; });
  return malformed ? kInput : kDone;
}

int cmd_orbits(const OrbitsOptions& o) {
  const HConfig cfg = config_for(o.group, o.scale);
  const WreathData wd = wreath_centralizer(cfg);
  Stopwatch clock;
  if (!o.out.empty()) fs::create_directories(o.out);
  std::uint64_t total_reps = 0, total_orbits = 0, total_candidates = 0, failed = 0;
  std::map<std::size_t, std::uint64_t> candidate_dims;
  int status = kDone;
  for (const auto& file : dataset_files(o.codes)) {
    const auto codes = read_code_file(file);
    for (std::size_t i = 0; i < codes.size(); ++i) {
      const std::string source = stem_id(file, i, codes.size());
      Stopwatch local;
      json j{{"source", source}};
      try {
        const OrbitRepSet reps = lemma_repr(codes[i], cfg, source);
        const OrbitRepSet orbits =
            cfg.kind == HKind::A4 ? orbit_fuse(reps, wd.pi1_G, wd.transversal) : reps;
        check_rep_set(codes[i], cfg, orbits);
        std::uint64_t candidates = 0;
        for (const auto& r : orbits.reps) {
          const BinaryCode e = candidate_E(r.code, cfg);
          if (check_E(e, o.distance).passes) {
            ++candidates;
            ++candidate_dims[e.dimension()];
          }
        }
        total_reps += reps.reps.size();
        total_orbits += orbits.reps.size();
        total_candidates += candidates;
        j["lemma_reps"] = reps.reps.size();
        j["orbits"] = orbits.reps.size();
        j["e_candidates"] = candidates;
        if (!o.out.empty()) {
          std::ofstream out(fs::path(o.out) / (source + ".reps"));
          write_rep_set(out, orbits);
        }
      } catch (const BudgetError& e) {
        ++failed;
        status = kBudget;
        j["error"] = "budget";
        j["detail"] = e.what();
      } catch (const InputError& e) {
        ++failed;
        if (status == kDone) status = kInput;
        j["error"] = "input";
        j["detail"] = e.what();
      }
      j["seconds"] = local.seconds();
      emit(j);
    }
  }
  json dims = json::object();
  for (const auto& [d, c] : candidate_dims) dims[std::to_string(d)] = c;
  emit({{"summary", "orbits"},
        {"group", to_string(cfg.kind)},
        {"degree", cfg.degree},
        {"lemma_reps", total_reps},
        {"orbits", total_orbits},
        {"e_candidates", total_candidates},
        {"e_candidate_dimensions", dims},
        {"failed_classes", failed},
        {"distance", o.distance}});
  footer(std::to_string(total_orbits) + " orbits, " + std::to_string(total_candidates) +
         " doubly-even candidates E with d >= " + std::to_string(o.distance) + ", " +
         std::to_string(clock.seconds()) + " s");
  return status;
}

int cmd_extend(const ExtendOptions& o) {
  const HConfig cfg = config_for(o.group, o.scale);
  const Shard shard = parse_shard(o.shard);
  Stopwatch clock;
  std::uint64_t index = 0, processed = 0, passed = 0, killed = 0, found = 0;
  for (const auto& file : dataset_files(o.reps)) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open " + file.string());
    const OrbitRepSet set = read_rep_set(in, file.string());
    for (std::size_t i = 0; i < set.reps.size(); ++i, ++index) {
      // D8 shards split the reps; A4 shards split the isotropic points.
      if (cfg.kind == HKind::D8 && !shard.owns(index)) continue;
      ++processed;
      const OrbitRep& r = set.reps[i];
      if (r.code.length() != cfg.half()) throw InputError(file.string() + ": rep length does not match the group");
      if (!in_defining_set(r.code, cfg)) throw InputError(file.string() + ": rep outside the defining set");
      const BinaryCode e = candidate_E(r.code, cfg);
      const EVerdict ev = check_E(e, o.distance);
      json j{{"source", set.source_class},
             {"subspace_or_coset_id", "rep:" + std::to_string(i)},
             {"dim", e.dimension()},
             {"doubly_even", ev.doubly_even},
             {"min_distance_or_bound", ev.distance},
             {"bound", ev.bound}};
      if (!ev.passes) {
        j["verdict"] = "rejected";
        emit(j);
        continue;
      }
      ++passed;
      if (cfg.kind == HKind::D8) {
        const D8Search s = d8_overcode_search(e, cfg.k(), o.distance);
        j["w_sizes"] = s.w_sizes;
        j["verdict"] = s.killed() ? "killed" : "open";
        killed += s.killed();
        emit(j);
      } else {
        const A4Search s = a4_overcode_search(e, cfg, o.distance, shard);
        json branches = json::array();
        for (const auto& b : s.branches) {
          branches.push_back({{"doubly_even", b.submodule.doubly_even},
                              {"meets_threshold", b.submodule.meets_threshold},
                              {"f4_dim", b.f4_dim},
                              {"points", b.points},
                              {"points_kept", b.points_kept},
                              {"subspaces", b.subspaces}});
        }
        j["dim_v"] = s.dim_v;
        j["dim_fixed"] = s.dim_fixed;
        j["branches"] = branches;
        j["found"] = s.found.size();
        j["verdict"] = s.found.empty() ? "no-extension" : "extension-found";
        found += s.found.size();
        emit(j);
        for (std::size_t f = 0; f < s.found.size(); ++f) {
          emit({{"source", set.source_class},
                {"subspace_or_coset_id", "rep:" + std::to_string(i) + "/overcode:" + std::to_string(f)},
                {"dim", s.found[f].dimension()},
                {"doubly_even", true},
                {"min_distance_or_bound", min_distance(s.found[f]).distance},
                {"bound", false},
                {"verdict", "extension"},
                {"code", code_to_text(s.found[f])}});
        }
      }
    }
  }
  emit({{"summary", "extend"},
        {"group", to_string(cfg.kind)},
        {"shard", o.shard},
        {"reps", processed},
        {"passed_filter", passed},
        {"killed", killed},
        {"overcodes_found", found}});
  footer(std::to_string(processed) + " reps, " + std::to_string(passed) + " passed the E filter, " +
         (cfg.kind == HKind::D8 ? std::to_string(killed) + " killed" : std::to_string(found) + " overcodes") + ", " +
         std::to_string(clock.seconds()) + " s");
  return kDone;
}

int cmd_ingest(const IngestOptions& o) {
  std::uint64_t accepted = 0, rejected = 0;
  std::set<std::string> shapes;
  for (const auto& file : dataset_files(o.path)) {
    auto reject = [&](std::size_t index, const std::string& reason) {
      ++rejected;
      emit({{"file", file.string()}, {"index", index}, {"status", "rejected"}, {"reason", reason}});
    };
    if (o.additive) {
      std::ifstream in(file);
      AdditiveReader reader(in, file.string());
      AdditiveRecord rec;
      while (reader.next(rec)) {
        if (!rec.code) {
          reject(rec.index, rec.error);
          continue;
        }
        const auto& x = *rec.code;
        if (o.length && x.length() != *o.length) {
          reject(rec.index, "length " + std::to_string(x.length()));
        } else if (!is_trace_hermitian_self_dual(x)) {
          reject(rec.index, "not trace-Hermitian self-dual");
        } else {
          ++accepted;
          shapes.insert("(" + std::to_string(x.length()) + ", 2^" + std::to_string(x.dimension()) + ")");
          emit({{"file", file.string()}, {"index", rec.index}, {"status", "ok"}, {"n", x.length()}});
        }
      }
      continue;
    }
    std::vector<BinaryCode> codes;
    try {
      codes = read_code_file(file);
    } catch (const InputError& e) {
      reject(0, e.what());
      continue;
    }
    for (std::size_t i = 0; i < codes.size(); ++i) {
      const BinaryCode& c = codes[i];
      if (o.length && c.length() != *o.length) {
        reject(i, "length " + std::to_string(c.length()));
        continue;
      }
      if (!is_self_dual(c)) {
        reject(i, "not self-dual");
        continue;
      }
      const int d = min_distance(c).distance;
      if (o.distance && d < *o.distance) {
        reject(i, "minimum distance " + std::to_string(d));
        continue;
      }
      ++accepted;
      const std::string shape =
          "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "," + std::to_string(d) + "]";
      shapes.insert(shape);
      emit({{"file", file.string()}, {"index", i}, {"status", "ok"}, {"parameters", shape}});
    }
  }
  std::string summary = std::to_string(accepted) + (o.additive ? " additive codes" : " codes");
  if (accepted > 0 && shapes.size() == 1) {
    summary += o.additive ? ", all trace-Hermitian self-dual " : ", all self-dual ";
    summary += *shapes.begin();
  }
  if (rejected) summary += ", " + std::to_string(rejected) + " rejected";
  emit({{"summary", "ingest"}, {"accepted", accepted}, {"rejected", rejected}, {"shapes", shapes}});
  footer(summary);
  return rejected ? kInput : kDone;
}

int cmd_classify(std::size_t length, bool additive, bool conjugation) {
  Stopwatch clock;
  if (additive) {
    const auto cls = classify_small_additive_selfdual(length, conjugation);
    for (std::size_t i = 0; i < cls.classes.size(); ++i) {
      const auto& c = cls.classes[i];
      std::ostringstream rep;
      write_additive(rep, c.representative);
      emit({{"class", i},
            {"orbit_size", c.orbit_size},
            {"stabilizer_order", c.stabilizer_order},
            {"min_distance", c.min_distance},
            {"representative", rep.str()}});
    }
    emit({{"summary", "classify"},
          {"additive", true},
          {"equivalence", conjugation ? "monomial with conjugation" : "monomial"},
          {"length", length},
          {"classes", cls.classes.size()},
          {"total", cls.total},
          {"mass", cls.mass()}});
    footer(std::to_string(cls.classes.size()) + " classes, " + std::to_string(cls.total) + " codes, " +
           std::to_string(clock.seconds()) + " s");
    return cls.mass() == cls.total ? kDone : kInvariant;
  }
  const auto cls = classify_self_dual(length);
  for (std::size_t i = 0; i < cls.classes.size(); ++i) {
    const auto& c = cls.classes[i];
    emit({{"class", i},
          {"aut_order", c.aut_order},
          {"count", c.count},
          {"min_distance", min_distance(c.rep).distance},
          {"representative", code_to_text(c.rep)}});
  }
  const std::uint64_t formula = self_dual_count_formula(length);
  emit({{"summary", "classify"},
        {"additive", false},
        {"length", length},
        {"classes", cls.classes.size()},
        {"total", cls.total},
        {"mass", cls.mass},
        {"formula", formula}});
  footer(std::to_string(cls.classes.size()) + " classes, " + std::to_string(cls.total) + " codes, " +
         std::to_string(clock.seconds()) + " s");
  return cls.mass == cls.total && cls.total == formula ? kDone : kInvariant;
}

}  // namespace cli
