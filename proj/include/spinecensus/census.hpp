#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "spinecensus/convention.hpp"
#include "spinecensus/ograph.hpp"

namespace spinecensus {

enum class Chirality { kChiral, kAmphichiral };

// One census entry: a canonical open-chain tuple, the size of its symmetry
// orbit, and whether the manifold admits an orientation-reversing
// self-homeomorphism.
struct CensusRecord {
  OpenChainParams params;
  int orbit_size = 0;
  Chirality chirality = Chirality::kChiral;
};

// Amphichiral iff the reversed-orientation tuple lands back in the orbit.
Chirality classify_chirality(const OpenChainParams& params,
                             const Convention& conv = active_convention());

// Streams the census at n in lexicographic order of canonical params:
// iterates alpha, delta in {0,1} and the accepted words (walking the word
// machine, pruning dead prefixes), keeps exactly the self-canonical tuples.
// `sink` runs on the calling thread; workers shard the word tree by prefix,
// so output is identical for every job count.  Every emitted record is
// re-verified single-face by a full trace.
void enumerate_census(int n, int jobs, const std::function<void(const CensusRecord&)>& sink,
                      const Convention& conv = active_convention());

// Unordered parallel scan: counts and consistency data only.
struct CensusStats {
  long long records = 0;
  long long raw_tuples = 0;     // accepted tuples seen = sum of orbit sizes
  long long chiral = 0;
  long long amphichiral = 0;
  std::array<long long, 3> orbit_sizes{};  // count of orbits of size 1, 2, 4
};

CensusStats census_stats(int n, int jobs, bool verify_h1 = false,
                         const Convention& conv = active_convention());

long long cumulative_count(int max_n, int jobs = 1,
                           const Convention& conv = active_convention());

// Small-n oracle: partitions all accepted raw tuples (found by full tracing
// of every word, no automaton) into orbits explicitly.  Returns records in
// the same order as enumerate_census.
std::vector<CensusRecord> census_brute_force(int n, const Convention& conv = active_convention());

// JSON-lines census with invariants; one object per record with fields
// schema, n, alpha, delta, word, orbit_size, chirality, h1_rank, volume, tv.
void write_census_jsonl(int n, int jobs, const std::vector<int>& tv_levels, std::ostream& out,
                        const Convention& conv = active_convention());

// Seeded closed-chain experiment: sample i fixes the first pair to the
// i mod 4 -th of (0,0),(0,1),(1,0),(1,1) and draws the remaining n-1 pairs
// uniformly from (0,2),(1,2),(2,0),(2,1), then traces.  Per-sample split
// streams make the outcome independent of worker count.
struct MonteCarloReport {
  int n = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
  long long single_face_count = 0;
  double frequency = 0.0;

  struct PerValue {
    int alpha1 = 0;
    int beta1 = 0;
    long long samples = 0;
    long long single_face = 0;
    double frequency = 0.0;
  };
  std::array<PerValue, 4> per_value{};
};

MonteCarloReport closed_chain_monte_carlo(int n, long long samples, std::uint64_t seed,
                                          int jobs = 1,
                                          const Convention& conv = active_convention());

}  // namespace spinecensus
