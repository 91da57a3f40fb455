#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spinecensus/color.hpp"
#include "spinecensus/convention.hpp"

namespace spinecensus {

using BigInt = boost::multiprecision::cpp_int;

// The finite state automaton deciding which colour words give the open chain
// a single face: a word w is accepted iff the open chain with colours
// (alpha, w, delta), alpha and delta in {0,1}, has exactly one face.
//
// The automaton is derived from the tracer, not transcribed: states are the
// reachable cut matchings (pattern states), FAIL collects every state with a
// prematurely closed face.  The derivation checks the expected structure:
// states XYYX (start), XXYY, XYXY, FAIL; accepts {XXYY, XYXY}; transitions
// constant on the letter classes; 6 letters XYYX->XXYY, 4 letters
// XXYY->XYXY, 6 letters XYXY->XYYX and a 2-letter self-loop at XXYY.
struct Automaton {
  std::vector<std::string> state_names;
  std::vector<std::array<std::uint8_t, 9>> transition;  // [state][letter index]
  int start = 0;
  int fail = 0;
  std::vector<char> accepting;

  int num_states() const { return static_cast<int>(state_names.size()); }

  int run(const std::vector<Letter>& word) const {
    int s = start;
    for (const Letter& l : word)
      s = transition[static_cast<std::size_t>(s)][static_cast<std::size_t>(l.index())];
    return s;
  }

  bool accepts(const std::vector<Letter>& word) const {
    return accepting[static_cast<std::size_t>(run(word))] != 0;
  }

  int state_index(const std::string& name) const;

  // Stable text rendering (states x letters plus accept set).
  std::string format() const;
};

// Derives the automaton from the cut-state dynamics of the convention.
// Throws std::runtime_error if the reachable machine does not have the
// structure above (a calibration failure, not a user error).
Automaton derive_fsa(const Convention& conv = active_convention());

// The machine of the active convention, derived once.
const Automaton& active_fsa();

// Number of accepted words of the given length, exactly.
BigInt count_accepted(int length, const Convention& conv = active_convention());

// Word counts per state after reading all words of the given length
// (diagnostic view of the same dynamic programming).
std::vector<BigInt> state_occupancy(int length, const Convention& conv = active_convention());

// 4 * 12^((2n-5)/3): the plain growth bound for the number of one-faced
// oriented chain polyhedra with n vertices.
double lower_bound_simple(int n);

// ceil(4 * 12^((2n-5)/3)) computed exactly: the least t with
// t^3 >= 4^3 * 12^(2n-5).
BigInt lower_bound_simple_ceil(int n);

// Refined count of accepted paths (full cycles interleaved with self-loops);
// n >= 2.  Sum over k of
//   0                                  if n-k-1 = 3h
//   2^k * 6^(2h+1) * 4^h     * C(h+k,h) if n-k-1 = 3h+1
//   2^k * 6^(2h+1) * 4^(h+1) * C(h+k,h) if n-k-1 = 3h+2.
BigInt lower_bound_refined(int n);

struct UpperBounds {
  BigInt open_chain;  // 9^n distinct o-graphs over the open chain
  BigInt per_graph;   // 18^n over any fixed 4-valent graph
  BigInt total;       // 18^n * (4n-1)!! over all 4-valent graphs
};

UpperBounds upper_bounds(int n);

}  // namespace spinecensus
