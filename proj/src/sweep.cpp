#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "tancone/analysis.hpp"

namespace tancone {
namespace {

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

CanonicalParameters from_tuple(const std::array<std::int64_t, 8>& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

std::string count_key(const AnalysisRecord& r) {
  if (!r.accepted()) {
    std::string k = r.status();
    if (r.structure) k += "/" + std::string(to_string(r.structure->label));
    return k;
  }
  return std::string(to_string(r.tangent_cone->label)) + "/" + std::to_string(r.tangent_cone->variant);
}

}  // namespace

unsigned thread_count() {
  if (const char* env = std::getenv("TANCONE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<CanonicalParameters> sweep_families(int alpha_max, std::size_t* tuples, std::size_t* degenerate) {
  std::vector<std::array<std::int64_t, 8>> all;
  std::array<std::int64_t, 8> v;
  v.fill(1);
  while (true) {
    all.push_back(v);
    int k = 7;
    while (k >= 0 && v[k] == alpha_max) v[k--] = 1;
    if (k < 0) break;
    ++v[k];
  }

  // Validity is the expensive part; key each valid tuple by its sorted generators.
  std::vector<std::optional<std::array<std::int64_t, 4>>> keys(all.size());
  parallel_for(all.size(), thread_count(), [&](std::size_t i) {
    try {
      auto ps = semigroup_from_parameters(from_tuple(all[i]));
      std::array<std::int64_t, 4> key;
      std::copy(ps.semigroup.generators().begin(), ps.semigroup.generators().end(), key.begin());
      keys[i] = key;
    } catch (const Error&) {
    }
  });

  std::map<std::array<std::int64_t, 4>, std::size_t> first;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!keys[i]) {
      ++bad;
      continue;
    }
    first.try_emplace(*keys[i], i);
  }
  std::vector<CanonicalParameters> out;
  for (const auto& [key, idx] : first) out.push_back(from_tuple(all[idx]));
  if (tuples) *tuples = all.size();
  if (degenerate) *degenerate = bad;
  return out;
}

SweepResult run_sweep(const SweepOptions& opts) {
  if (opts.alpha_max < 1) throw Error(Reason::InputError, "alpha bound must be positive");
  auto t0 = std::chrono::steady_clock::now();
  SweepResult res;
  auto families = sweep_families(opts.alpha_max, &res.tuples, &res.degenerate);
  res.families = families.size();

  std::vector<SweepRow> rows(families.size());
  const unsigned threads = opts.threads ? opts.threads : thread_count();
  parallel_for(families.size(), threads, [&](std::size_t i) {
    auto start = std::chrono::steady_clock::now();
    auto gens = families[i].generators();
    rows[i].params = families[i];
    rows[i].record = analyze(gens);
    rows[i].micros =
        std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
  });

  for (auto& row : rows) {
    ++res.counts[count_key(row.record)];
    const auto& rec = row.record;
    if (opts.case_filter && (!rec.structure || rec.structure->label != *opts.case_filter)) continue;
    if (opts.variant_filter && (!rec.tangent_cone || rec.tangent_cone->variant != *opts.variant_filter)) continue;
    if (opts.status_filter && rec.status() != *opts.status_filter) continue;
    res.rows.push_back(std::move(row));
  }
  std::sort(res.rows.begin(), res.rows.end(),
            [](const SweepRow& a, const SweepRow& b) { return a.record.generators < b.record.generators; });
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::string csv_header() {
  return "n1,n2,n3,n4,a21,a31,a32,a42,a13,a43,a14,a24,status,case,variant,b0,b1,b2,b3,"
         "complex_ok,minimal_ok,rank_ok,witnesses_ok,hf_equal,nondecreasing,homogeneous_type,"
         "hf_bound,stabilization,micros";
}

std::string csv_row(const SweepRow& row) {
  const auto& r = row.record;
  const auto& p = row.params;
  std::ostringstream os;
  for (auto g : r.generators) os << g << ',';
  os << p.a21 << ',' << p.a31 << ',' << p.a32 << ',' << p.a42 << ',' << p.a13 << ',' << p.a43 << ',' << p.a14
     << ',' << p.a24 << ',';
  os << r.status() << ',';
  os << (r.structure ? std::string(to_string(r.structure->label)) : "") << ',';
  os << (r.tangent_cone ? std::to_string(r.tangent_cone->variant) : "") << ',';
  if (r.resolution) {
    for (auto b : betti_sequence(*r.resolution)) os << b << ',';
  } else {
    os << ",,,,";
  }
  auto flag = [](bool b) { return b ? "1" : "0"; };
  if (r.verification) {
    const auto& v = *r.verification;
    os << flag(v.complex_ok) << ',' << flag(v.minimal_ok) << ',' << flag(v.rank_ok) << ','
       << flag(v.witnesses_ok) << ',';
  } else {
    os << ",,,,";
  }
  if (r.hilbert) {
    os << flag(r.hilbert->equal) << ',' << flag(r.hilbert->nondecreasing) << ',';
  } else {
    os << ",,";
  }
  os << (r.resolution ? flag(homogeneous_type(*r.resolution)) : "") << ',';
  if (r.hilbert) {
    os << r.hilbert->bound << ',';
    if (r.hilbert->stabilization_value) os << *r.hilbert->stabilization_value;
  } else {
    os << ',';
  }
  os << ',' << static_cast<long long>(row.micros);
  return os.str();
}

}  // namespace tancone
