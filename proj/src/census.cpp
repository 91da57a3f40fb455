#include "spinecensus/census.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "spinecensus/automaton.hpp"
#include "spinecensus/homology.hpp"
#include "spinecensus/quantum.hpp"
#include "spinecensus/rng.hpp"
#include "spinecensus/tracer.hpp"
#include "spinecensus/volume.hpp"

namespace spinecensus {

namespace {

OpenChainParams swap_image(const OpenChainParams& p) {
  OpenChainParams q = p;
  for (Letter& l : q.word) l = l.swapped();
  return q;
}

OpenChainParams rotate_image(const OpenChainParams& p, const RotationAction& act) {
  OpenChainParams q;
  q.alpha = act.loop_map.apply(p.delta);
  q.delta = act.loop_map.apply(p.alpha);
  q.word.reserve(p.word.size());
  for (auto it = p.word.rbegin(); it != p.word.rend(); ++it) q.word.push_back(act.apply(*it));
  return q;
}

// Canonical filter: p survives iff it is the least of its orbit; also fills
// the orbit size.
bool is_canonical(const OpenChainParams& p, const Convention& conv, int* orbit_size) {
  const OpenChainParams s = swap_image(p);
  const OpenChainParams r = rotate_image(p, conv.rotation);
  const OpenChainParams sr = swap_image(r);
  if (s < p || r < p || sr < p) return false;
  int size = 1;
  if (!(s == p)) ++size;
  if (!(r == p || r == s)) ++size;
  if (!(sr == p || sr == s || sr == r)) ++size;
  *orbit_size = size;
  return true;
}

// Accepted-word shard roots: the live machine states after every prefix of
// the given length, in lexicographic prefix order.
struct ShardRoot {
  std::vector<Letter> prefix;
  int state = 0;
};

void collect_roots(const Automaton& fsa, int depth, int state, std::vector<Letter>& prefix,
                   std::vector<ShardRoot>& out) {
  if (depth == 0) {
    out.push_back(ShardRoot{prefix, state});
    return;
  }
  for (int li = 0; li < kAlphabetSize; ++li) {
    const int next = fsa.transition[static_cast<std::size_t>(state)][static_cast<std::size_t>(li)];
    if (next == fsa.fail) continue;
    prefix.push_back(letter_from_index(li));
    collect_roots(fsa, depth - 1, next, prefix, out);
    prefix.pop_back();
  }
}

// Depth-first walk of the accepted words below one shard root; calls `emit`
// for every self-canonical tuple.
template <typename Emit>
void walk_shard(const Automaton& fsa, const Convention& conv, int n, ColorZ3 alpha, ColorZ3 delta,
                const ShardRoot& root, Emit&& emit) {
  const int len = n - 1;
  OpenChainParams p;
  p.alpha = alpha;
  p.delta = delta;
  p.word = root.prefix;
  p.word.resize(static_cast<std::size_t>(len));

  const auto dfs = [&](auto&& self, int depth, int state) -> void {
    if (depth == len) {
      if (!fsa.accepting[static_cast<std::size_t>(state)]) return;
      int orbit_size = 0;
      if (!is_canonical(p, conv, &orbit_size)) return;
      CensusRecord rec;
      rec.params = p;
      rec.orbit_size = orbit_size;
      rec.chirality = classify_chirality(p, conv);
      emit(std::move(rec));
      return;
    }
    for (int li = 0; li < kAlphabetSize; ++li) {
      const int next =
          fsa.transition[static_cast<std::size_t>(state)][static_cast<std::size_t>(li)];
      if (next == fsa.fail) continue;
      p.word[static_cast<std::size_t>(depth)] = letter_from_index(li);
      self(self, depth + 1, next);
    }
  };
  dfs(dfs, static_cast<int>(root.prefix.size()), root.state);
}

// Runs every (alpha, delta, shard) unit: workers map each unit's records
// through `mapper` (parallel), `drain` consumes the mapped batches on the
// calling thread in unit order, which is lexicographic tuple order.
template <typename T, typename Mapper, typename Drain>
void sharded_run(int n, int jobs, const Convention& conv, Mapper&& mapper, Drain&& drain) {
  if (n < 2) throw std::invalid_argument("census: needs n >= 2");
  jobs = std::max(1, jobs);
  const Automaton fsa = derive_fsa(conv);

  const int shard_depth = std::min(3, n - 1);
  std::vector<ShardRoot> roots;
  std::vector<Letter> prefix;
  collect_roots(fsa, shard_depth, fsa.start, prefix, roots);

  struct Unit {
    ColorZ3 alpha, delta;
    const ShardRoot* root;
  };
  std::vector<Unit> units;
  for (int a = 0; a < 2; ++a)
    for (int d = 0; d < 2; ++d)
      for (const ShardRoot& r : roots) units.push_back(Unit{ColorZ3(a), ColorZ3(d), &r});

  const auto run_unit = [&](const Unit& u) {
    std::vector<T> batch;
    walk_shard(fsa, conv, n, u.alpha, u.delta, *u.root,
               [&](CensusRecord&& rec) { batch.push_back(mapper(std::move(rec))); });
    return batch;
  };

  if (jobs == 1) {
    for (const Unit& u : units) drain(run_unit(u));
    return;
  }

  std::mutex mu;
  std::condition_variable cv;
  std::map<std::size_t, std::vector<T>> ready;
  std::size_t merged = 0;
  std::atomic<std::size_t> cursor{0};
  const std::size_t backlog_cap = static_cast<std::size_t>(jobs) * 4;
  std::exception_ptr failure;

  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      try {
        for (;;) {
          const std::size_t i = cursor.fetch_add(1);
          if (i >= units.size()) return;
          std::vector<T> batch = run_unit(units[i]);
          std::unique_lock<std::mutex> lock(mu);
          cv.wait(lock, [&] { return i < merged + backlog_cap || failure; });
          if (failure) return;
          ready.emplace(i, std::move(batch));
          cv.notify_all();
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        cv.notify_all();
      }
    });

  {
    std::unique_lock<std::mutex> lock(mu);
    while (merged < units.size()) {
      cv.wait(lock, [&] { return ready.count(merged) != 0 || failure; });
      if (failure) break;
      std::vector<T> batch = std::move(ready.at(merged));
      ready.erase(merged);
      lock.unlock();
      drain(std::move(batch));
      lock.lock();
      ++merged;
      cv.notify_all();
    }
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

void verify_record(const CensusRecord& rec, int n, bool with_h1, const Convention& conv) {
  const OGraph g = make_open_chain(rec.params, conv);
  // independent re-check, not trusting the word machine
  if (!is_single_face(g, conv))
    throw std::runtime_error("census: accepted tuple fails the face trace");
  if (with_h1) {
    const AbelianGroup h1 = homology_h1(g, conv);
    if (h1.rank != n || !h1.torsion.empty())
      throw std::runtime_error("census: first homology is not Z^n");
  }
}

}  // namespace

Chirality classify_chirality(const OpenChainParams& params, const Convention& conv) {
  return canonical_form(mirror_open_chain(params), conv) == canonical_form(params, conv)
             ? Chirality::kAmphichiral
             : Chirality::kChiral;
}

void enumerate_census(int n, int jobs, const std::function<void(const CensusRecord&)>& sink,
                      const Convention& conv) {
  sharded_run<CensusRecord>(
      n, jobs, conv,
      [&](CensusRecord&& rec) {
        verify_record(rec, n, false, conv);
        return std::move(rec);
      },
      [&](std::vector<CensusRecord>&& batch) {
        for (const CensusRecord& rec : batch) sink(rec);
      });
}

CensusStats census_stats(int n, int jobs, bool verify_h1, const Convention& conv) {
  CensusStats stats;
  sharded_run<CensusRecord>(
      n, jobs, conv,
      [&](CensusRecord&& rec) {
        verify_record(rec, n, verify_h1, conv);
        return std::move(rec);
      },
      [&](std::vector<CensusRecord>&& batch) {
        for (const CensusRecord& rec : batch) {
          ++stats.records;
          stats.raw_tuples += rec.orbit_size;
          if (rec.chirality == Chirality::kAmphichiral)
            ++stats.amphichiral;
          else
            ++stats.chiral;
          const int slot = rec.orbit_size == 1 ? 0 : rec.orbit_size == 2 ? 1 : 2;
          ++stats.orbit_sizes[static_cast<std::size_t>(slot)];
        }
      });
  return stats;
}

long long cumulative_count(int max_n, int jobs, const Convention& conv) {
  if (max_n < 2) throw std::invalid_argument("cumulative_count: needs max_n >= 2");
  long long total = 0;
  for (int n = 2; n <= max_n; ++n) total += census_stats(n, jobs, false, conv).records;
  return total;
}

std::vector<CensusRecord> census_brute_force(int n, const Convention& conv) {
  if (n < 2) throw std::invalid_argument("census_brute_force: needs n >= 2");
  const int len = n - 1;
  long long total_words = 1;
  for (int i = 0; i < len; ++i) total_words *= 9;

  // every accepted raw tuple, by tracing every word
  std::vector<OpenChainParams> raw;
  for (int a = 0; a < 2; ++a)
    for (int d = 0; d < 2; ++d)
      for (long long w = 0; w < total_words; ++w) {
        OpenChainParams p;
        p.alpha = ColorZ3(a);
        p.delta = ColorZ3(d);
        p.word.resize(static_cast<std::size_t>(len));
        long long rest = w;
        for (int i = len - 1; i >= 0; --i) {
          p.word[static_cast<std::size_t>(i)] = letter_from_index(static_cast<int>(rest % 9));
          rest /= 9;
        }
        if (is_single_face(make_open_chain(p, conv), conv)) raw.push_back(std::move(p));
      }

  // explicit orbit partition
  std::map<OpenChainParams, int> index_of;
  for (std::size_t i = 0; i < raw.size(); ++i) index_of[raw[i]] = static_cast<int>(i);
  std::vector<char> used(raw.size(), 0);
  std::vector<CensusRecord> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    const OpenChainParams& p = raw[i];
    std::vector<OpenChainParams> orbit = {p, swap_image(p), rotate_image(p, conv.rotation),
                                          swap_image(rotate_image(p, conv.rotation))};
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (const OpenChainParams& q : orbit) {
      const auto it = index_of.find(q);
      if (it == index_of.end())
        throw std::runtime_error("census_brute_force: orbit leaves the accepted set");
      used[static_cast<std::size_t>(it->second)] = 1;
    }
    CensusRecord rec;
    rec.params = orbit.front();
    rec.orbit_size = static_cast<int>(orbit.size());
    rec.chirality = classify_chirality(rec.params, conv);
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(),
            [](const CensusRecord& x, const CensusRecord& y) { return x.params < y.params; });
  return out;
}

void write_census_jsonl(int n, int jobs, const std::vector<int>& tv_levels, std::ostream& out,
                        const Convention& conv) {
  const double volume = manifold_volume(n);
  nlohmann::ordered_json tv = nlohmann::ordered_json::object();
  for (const int r : tv_levels) tv[std::to_string(r)] = turaev_viro(n, QuantumContext::make(r));

  sharded_run<std::string>(
      n, jobs, conv,
      [&](CensusRecord&& rec) {
        const OGraph g = make_open_chain(rec.params, conv);
        if (!is_single_face(g, conv))
          throw std::runtime_error("census: accepted tuple fails the face trace");
        const AbelianGroup h1 = homology_h1(g, conv);
        if (h1.rank != n || !h1.torsion.empty())
          throw std::runtime_error("census: first homology is not Z^n");

        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["n"] = n;
        j["alpha"] = rec.params.alpha.value();
        j["delta"] = rec.params.delta.value();
        nlohmann::ordered_json word = nlohmann::ordered_json::array();
        for (const Letter& l : rec.params.word)
          word.push_back(nlohmann::ordered_json::array({l.beta.value(), l.gamma.value()}));
        j["word"] = std::move(word);
        j["orbit_size"] = rec.orbit_size;
        j["chirality"] = rec.chirality == Chirality::kAmphichiral ? "AMPHICHIRAL" : "CHIRAL";
        j["h1_rank"] = h1.rank;
        j["volume"] = volume;
        j["tv"] = tv;
        return j.dump();
      },
      [&](std::vector<std::string>&& batch) {
        for (const std::string& line : batch) out << line << '\n';
      });
}

MonteCarloReport closed_chain_monte_carlo(int n, long long samples, std::uint64_t seed, int jobs,
                                          const Convention& conv) {
  if (n < 2) throw std::invalid_argument("closed_chain_monte_carlo: needs n >= 2");
  if (samples < 1) throw std::invalid_argument("closed_chain_monte_carlo: needs samples >= 1");
  jobs = std::max(1, jobs);

  static constexpr std::array<std::array<int, 2>, 4> kFixedPairs = {
      {{{0, 0}}, {{0, 1}}, {{1, 0}}, {{1, 1}}}};
  static constexpr std::array<std::array<int, 2>, 4> kRandomPairs = {
      {{{0, 2}}, {{1, 2}}, {{2, 0}}, {{2, 1}}}};

  std::array<std::atomic<long long>, 4> hits{};
  std::array<std::atomic<long long>, 4> counts{};
  std::atomic<long long> cursor{0};

  const auto run_worker = [&] {
    ClosedChainParams params;
    params.pairs.resize(static_cast<std::size_t>(n));
    for (;;) {
      const long long i = cursor.fetch_add(1);
      if (i >= samples) return;
      const int slot = static_cast<int>(i % 4);
      params.pairs[0] = {ColorZ3(kFixedPairs[static_cast<std::size_t>(slot)][0]),
                         ColorZ3(kFixedPairs[static_cast<std::size_t>(slot)][1])};
      SplitMix64 rng = sample_stream(seed, static_cast<std::uint64_t>(i));
      for (int j = 1; j < n; ++j) {
        const auto& l = kRandomPairs[rng.next() >> 62];
        params.pairs[static_cast<std::size_t>(j)] = {ColorZ3(l[0]), ColorZ3(l[1])};
      }
      counts[static_cast<std::size_t>(slot)].fetch_add(1);
      if (is_single_face(make_closed_chain(params, conv), conv))
        hits[static_cast<std::size_t>(slot)].fetch_add(1);
    }
  };

  if (jobs == 1) {
    run_worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(run_worker);
    for (auto& th : pool) th.join();
  }

  MonteCarloReport rep;
  rep.n = n;
  rep.samples = samples;
  rep.seed = seed;
  for (int s = 0; s < 4; ++s) {
    auto& pv = rep.per_value[static_cast<std::size_t>(s)];
    pv.alpha1 = kFixedPairs[static_cast<std::size_t>(s)][0];
    pv.beta1 = kFixedPairs[static_cast<std::size_t>(s)][1];
    pv.samples = counts[static_cast<std::size_t>(s)].load();
    pv.single_face = hits[static_cast<std::size_t>(s)].load();
    pv.frequency = pv.samples > 0 ? static_cast<double>(pv.single_face) / pv.samples : 0.0;
    rep.single_face_count += pv.single_face;
  }
  rep.frequency = static_cast<double>(rep.single_face_count) / rep.samples;
  return rep;
}

}  // namespace spinecensus
