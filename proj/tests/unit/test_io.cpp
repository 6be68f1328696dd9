#include <sstream>

#include "brute.hpp"
#include "doctest.h"
#include "sdsearch/constructions.hpp"
#include "sdsearch/errors.hpp"
#include "sdsearch/io.hpp"

using namespace sdsearch;

TEST_CASE("code files: round trip, comments, several records") {
  const BinaryCode g = extended_golay24();
  const BinaryCode e8 = extended_hamming8();
  std::stringstream ss;
  ss << "# two codes\n";
  write_code(ss, g);
  ss << "\n# next\n";
  write_code(ss, e8);
  const auto codes = read_codes(ss);
  REQUIRE(codes.size() == 2);
  CHECK(codes[0] == g);
  CHECK(codes[1] == e8);
  CHECK(code_to_text(BinaryCode::from_strings({"11"})) == "2 1\n11\n");
  std::istringstream zero("3 0\n");
  CHECK(read_codes(zero)[0].dimension() == 0);
}

TEST_CASE("code files: malformed input names the line") {
  auto fails_at = [](const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    try {
      read_codes(in, "f");
    } catch (const InputError& e) {
      return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
  };
  CHECK(fails_at("4 1\n1100", "missing trailing newline"));
  CHECK(fails_at("4 2\n1100\n110\n", "f:3:"));
  CHECK(fails_at("4 2\n1100\n11x0\n", "f:3:"));
  CHECK(fails_at("4\n", "f:1:"));
  CHECK(fails_at("# c\n4 2\n1100\n", "expected 2 rows"));
  CHECK(fails_at("300 1\n", "exceeds"));
}

TEST_CASE("permutation lists") {
  std::istringstream in("# gens\n(1,2)(3,4)\n()\n(1,2,3)\n");
  const auto ps = read_permutations(in, 4);
  REQUIRE(ps.size() == 3);
  CHECK(ps[0].to_string() == "(1,2)(3,4)");
  CHECK(ps[1].is_identity());
  std::istringstream bad("(1,5)\n");
  CHECK_THROWS_AS(read_permutations(bad, 4), InputError);
}

TEST_CASE("additive records: streaming with per-record errors") {
  std::istringstream in(
      "1 2\n"
      "1\n"
      "w\n"
      "\n"
      "2 2\n"
      "1x\n"
      "ww\n"
      "\n"
      "2 2\n"
      "11\n"
      "11\n"
      "\n"
      "2 3\n"
      "11\n"
      "\n"
      "2 2\n"
      "11\n"
      "wW\n");
  AdditiveReader reader(in, "d");
  std::vector<AdditiveRecord> recs;
  AdditiveRecord r;
  while (reader.next(r)) recs.push_back(r);
  REQUIRE(recs.size() == 5);
  CHECK(recs[0].code);
  CHECK(recs[0].code->dimension() == 2);
  CHECK(recs[1].error.find("d:6:") != std::string::npos);
  CHECK(recs[2].error.find("dependent") != std::string::npos);
  CHECK(recs[3].error.find("expected 3 rows") != std::string::npos);
  REQUIRE(recs[4].code);
  CHECK(recs[4].line == 16);
  CHECK(recs[4].index == 4);

  std::stringstream out;
  write_additive(out, *recs[4].code);
  AdditiveReader again(out, "o");
  REQUIRE(again.next(r));
  CHECK(*r.code == *recs[4].code);
}

TEST_CASE("F4 code file") {
  std::istringstream in("3 2\n1ww\nwWW\n");
  const LinearF4Code c = read_f4_code(in);
  CHECK(c.length() == 3);
  CHECK(c.dimension() == 1);
}

TEST_CASE("orbit representative files round trip") {
  const HConfig cfg = make_config(HKind::D8, 2);
  const auto all = brute::all_self_dual(cfg.half());
  ClassIndex classes;
  for (const auto& c : all) classes.insert(c);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const OrbitRepSet set = lemma_repr(classes.rep(i), cfg, "y" + std::to_string(i));
    std::stringstream ss;
    write_rep_set(ss, set);
    const OrbitRepSet back = read_rep_set(ss, "reps");
    CHECK(back.source_class == set.source_class);
    REQUIRE(back.reps.size() == set.reps.size());
    for (std::size_t j = 0; j < set.reps.size(); ++j) {
      CHECK(back.reps[j].code == set.reps[j].code);
      CHECK(back.reps[j].tau == set.reps[j].tau);
      CHECK(back.reps[j].rho_tilde == set.reps[j].rho_tilde);
      CHECK(back.reps[j].h == set.reps[j].h);
      CHECK(back.reps[j].sigma == set.reps[j].sigma);
    }
    check_rep_set(classes.rep(i), cfg, back);
  }
  std::istringstream bad("source x\nrep\n2 1\n11\ntau ()\n");
  CHECK_THROWS_AS(read_rep_set(bad), InputError);
}
