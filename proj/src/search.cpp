#include "theta/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "theta/errors.hpp"
#include "theta/numtheory.hpp"

namespace theta {

namespace {

std::string params_field(const GroupSpec& g) {
  std::string s = g.key();
  if (g.family() != Family::product) s = s.substr(s.find(':') + 1);
  std::replace(s.begin(), s.end(), ',', ';');
  return s;
}

OpenProblemClass parse_class(const std::string& s) {
  for (auto c : {OpenProblemClass::complete, OpenProblemClass::kappa_equals_S, OpenProblemClass::kappa_exceeds_S,
                 OpenProblemClass::kappa_below_S}) {
    if (to_string(c) == s) return c;
  }
  throw ValidationError("unknown class '" + s + "'");
}

}  // namespace

Family parse_family(const std::string& name) {
  for (auto f : {Family::cyclic, Family::dihedral, Family::dicyclic, Family::elementary_abelian, Family::heisenberg,
                 Family::product}) {
    if (to_string(f) == name) return f;
  }
  if (name == "elem-abelian") return Family::elementary_abelian;
  throw ValidationError("unknown family '" + name + "'");
}

std::string to_csv(const SearchRecord& r) {
  std::ostringstream os;
  os << r.family << ',' << r.params << ',' << r.order << ',' << (r.complete ? "true" : "false") << ',' << r.kappa
     << ',' << r.s_size << ',' << to_string(r.cls) << ',';
  os.setf(std::ios::fixed);
  os.precision(3);
  os << r.ms;
  return os.str();
}

nlohmann::json to_json(const SearchRecord& r) {
  return {{"family", r.family}, {"params", r.params}, {"order", r.order},   {"complete", r.complete},
          {"kappa", r.kappa},   {"s_size", r.s_size}, {"class", to_string(r.cls)}, {"ms", r.ms}};
}

SearchRecord parse_csv_record(const std::string& line) {
  std::vector<std::string> f;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, ',')) f.push_back(cur);
  if (f.size() != 8) throw ValidationError("search csv: expected 8 fields in '" + line + "'");
  try {
    SearchRecord r;
    r.family = f[0];
    r.params = f[1];
    r.order = std::stoull(f[2]);
    r.complete = f[3] == "true";
    r.kappa = std::stoull(f[4]);
    r.s_size = std::stoull(f[5]);
    r.cls = parse_class(f[6]);
    r.ms = std::stod(f[7]);
    return r;
  } catch (const std::logic_error&) {
    throw ValidationError("search csv: malformed line '" + line + "'");
  }
}

std::set<std::string> completed_ids(std::istream& csv) {
  std::set<std::string> ids;
  std::string line;
  while (std::getline(csv, line)) {
    if (line.empty() || line == kSearchCsvHeader) continue;
    ids.insert(parse_csv_record(line).id());
  }
  return ids;
}

std::vector<GroupSpec> enumerate_search_groups(const SearchOptions& opts) {
  const std::uint64_t N = opts.max_order;
  std::vector<GroupSpec> base;  // |G| >= 2, every base family, used as product factors
  std::vector<GroupSpec> out;
  auto want = [&](Family f) { return opts.families.count(f) > 0; };
  auto emit = [&](GroupSpec g) {
    const bool listed = want(g.family()) && g.size() >= 3 && g.size() <= N;
    if (g.size() >= 2 && g.size() <= N / 2) base.push_back(g);
    if (listed) out.push_back(std::move(g));
  };

  for (std::uint64_t n = 2; n <= N; ++n) emit(cyclic(n));
  for (std::uint64_t n = 2; 2 * n <= N; ++n) emit(dihedral(n));
  for (std::uint64_t n = 2; 4 * n <= N; ++n) emit(dicyclic(n));
  for (std::uint64_t p = 2; p * p <= N; ++p) {
    if (!numtheory::is_prime(p)) continue;
    unsigned m = 2;
    for (std::uint64_t size = p * p; size <= N; size *= p, ++m) emit(elementary_abelian(p, m));
  }
  for (std::uint64_t p = 2; p * p * p <= N; ++p) {
    if (numtheory::is_prime(p)) emit(heisenberg(p));
  }
  if (want(Family::product)) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = i; j < base.size(); ++j) {
        if (base[i].size() * base[j].size() <= N) out.push_back(direct_product(base[i], base[j]));
      }
    }
  }
  return out;
}

SearchRecord evaluate_search_group(const GroupSpec& g) {
  const auto start = std::chrono::steady_clock::now();
  const ThetaGraph t(g);
  const auto op = open_problem_classify(t);
  SearchRecord r;
  r.family = std::string(to_string(g.family()));
  r.params = params_field(g);
  r.order = g.size();
  r.complete = op.cls == OpenProblemClass::complete;
  r.kappa = op.kappa;
  r.s_size = op.s_size;
  r.cls = op.cls;
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SearchSummary run_search(const SearchOptions& opts, std::ostream* csv, std::ostream* jsonl,
                         const std::set<std::string>& skip) {
  SearchSummary summary;
  std::vector<GroupSpec> todo;
  for (auto& g : enumerate_search_groups(opts)) {
    const std::string id = std::string(to_string(g.family())) + "|" + params_field(g);
    if (skip.count(id)) {
      ++summary.skipped;
    } else {
      todo.push_back(std::move(g));
    }
  }

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::max(1u, opts.threads == 0 ? hw : opts.threads);
  const std::size_t chunk = std::max<std::size_t>(1, 4 * workers);

  for (std::size_t base = 0; base < todo.size(); base += chunk) {
    const std::size_t end = std::min(todo.size(), base + chunk);
    std::vector<std::optional<SearchRecord>> results(end - base);
    std::vector<std::exception_ptr> errors(end - base);
    std::atomic<std::size_t> next{base};
    auto work = [&] {
      for (std::size_t i = next++; i < end; i = next++) {
        try {
          results[i - base] = evaluate_search_group(todo[i]);
        } catch (...) {
          errors[i - base] = std::current_exception();
        }
      }
    };
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
      work();
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      const auto& r = *results[i];
      if (csv) *csv << to_csv(r) << '\n';
      if (jsonl) *jsonl << to_json(r).dump() << '\n';
      ++summary.evaluated;
      ++summary.per_class[std::string(to_string(r.cls))];
    }
    if (csv) csv->flush();
    if (jsonl) jsonl->flush();
  }
  return summary;
}

}  // namespace theta
