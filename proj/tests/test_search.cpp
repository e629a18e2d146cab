#include <sstream>

#include "doctest.h"
#include "theta/errors.hpp"
#include "theta/numtheory.hpp"
#include "theta/search.hpp"

using namespace theta;

namespace {

std::vector<SearchRecord> run(const SearchOptions& opts, const std::set<std::string>& skip = {}) {
  std::stringstream csv;
  run_search(opts, &csv, nullptr, skip);
  std::vector<SearchRecord> out;
  std::string line;
  while (std::getline(csv, line)) out.push_back(parse_csv_record(line));
  return out;
}

}  // namespace

TEST_CASE("cyclic search up to 20") {
  const auto recs = run({.max_order = 20, .families = {Family::cyclic}, .threads = 1});
  REQUIRE(recs.size() == 18);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto n = i + 3;
    CHECK(recs[i].family == "cyclic");
    CHECK(recs[i].params == std::to_string(n));
    CHECK(recs[i].order == n);
    const bool prime = numtheory::is_prime(n);
    CHECK(recs[i].complete == prime);
    CHECK(recs[i].cls == (prime ? OpenProblemClass::complete : OpenProblemClass::kappa_equals_S));
    if (!prime) CHECK(recs[i].kappa == recs[i].s_size);
  }
}

TEST_CASE("dicyclic and elementary abelian search") {
  const auto dic = run({.max_order = 12, .families = {Family::dicyclic}, .threads = 1});
  REQUIRE(dic.size() == 2);
  CHECK(dic[0].params == "2");
  CHECK(dic[1].params == "3");
  CHECK(dic[1].cls == OpenProblemClass::kappa_exceeds_S);

  const auto ea = run({.max_order = 9, .families = {Family::elementary_abelian}, .threads = 1});
  REQUIRE(ea.size() == 3);
  CHECK(ea[0].params == "2;2");
  CHECK(ea[1].params == "2;3");
  CHECK(ea[2].params == "3;2");
  for (const auto& r : ea) CHECK(r.cls == OpenProblemClass::complete);
}

TEST_CASE("enumeration respects bounds") {
  const auto groups = enumerate_search_groups({.max_order = 24});
  std::set<std::string> keys;
  for (const auto& g : groups) {
    CHECK(g.size() >= 3);
    CHECK(g.size() <= 24);
    CHECK(keys.insert(g.key()).second);
  }
  CHECK(keys.count("dihedral:12"));
  CHECK(keys.count("heisenberg:2"));
  CHECK(keys.count("heisenberg:3") == 0);
  CHECK(keys.count("cyclic:2*cyclic:2"));
  CHECK(keys.count("cyclic:3*dihedral:4"));
  CHECK(enumerate_search_groups({.max_order = 30, .families = {Family::heisenberg}}).size() == 2);
}

TEST_CASE("output does not depend on thread count") {
  const SearchOptions base{.max_order = 24, .threads = 1};
  std::stringstream a, b, ja, jb;
  auto strip_ms = [](std::string text) {
    std::stringstream in(text), out;
    std::string line;
    while (std::getline(in, line)) out << line.substr(0, line.rfind(',')) << '\n';
    return out.str();
  };
  const auto sa = run_search(base, &a, &ja);
  auto multi = base;
  multi.threads = 4;
  const auto sb = run_search(multi, &b, &jb);
  CHECK(strip_ms(a.str()) == strip_ms(b.str()));
  CHECK(sa.evaluated == sb.evaluated);
  CHECK(sa.per_class == sb.per_class);
  std::size_t lines = 0;
  std::string line;
  while (std::getline(ja, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.contains("class"));
    ++lines;
  }
  CHECK(lines == sa.evaluated);
}

TEST_CASE("CSV round trip and resumption") {
  SearchRecord r{"dicyclic", "3", 12, false, 8, 8, OpenProblemClass::kappa_exceeds_S, 1.25};
  const auto back = parse_csv_record(to_csv(r));
  CHECK(back.id() == r.id());
  CHECK(back.order == 12);
  CHECK(back.kappa == 8);
  CHECK(back.cls == r.cls);
  CHECK(to_json(r).at("class") == "kappa_exceeds_S");
  CHECK_THROWS_AS(parse_csv_record("cyclic,6"), ValidationError);
  CHECK_THROWS_AS(parse_csv_record("cyclic,6,x,false,4,4,kappa_equals_S,0.1"), ValidationError);

  const SearchOptions opts{.max_order = 12, .families = {Family::cyclic, Family::dihedral}, .threads = 1};
  std::stringstream first;
  const auto s1 = run_search(opts, &first, nullptr);
  std::stringstream reread(first.str());
  const auto done = completed_ids(reread);
  CHECK(done.size() == s1.evaluated);
  CHECK(done.count("cyclic|6"));
  std::stringstream second;
  const auto s2 = run_search(opts, &second, nullptr, done);
  CHECK(s2.evaluated == 0);
  CHECK(s2.skipped == s1.evaluated);

  CHECK(parse_family("elem-abelian") == Family::elementary_abelian);
  CHECK_THROWS_AS(parse_family("custom"), ValidationError);
}
