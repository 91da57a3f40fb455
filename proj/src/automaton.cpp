#include "spinecensus/automaton.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "spinecensus/tracer.hpp"

namespace spinecensus {

int Automaton::state_index(const std::string& name) const {
  for (int i = 0; i < num_states(); ++i)
    if (state_names[static_cast<std::size_t>(i)] == name) return i;
  throw std::invalid_argument("no state named " + name);
}

std::string Automaton::format() const {
  std::ostringstream os;
  os << "alphabet (beta,gamma): ";
  for (int i = 0; i < kAlphabetSize; ++i) {
    const Letter l = letter_from_index(i);
    os << '(' << l.beta.value() << ',' << l.gamma.value() << ')'
       << (i + 1 < kAlphabetSize ? ' ' : '\n');
  }
  os << "start: " << state_names[static_cast<std::size_t>(start)] << '\n';
  os << "accept:";
  for (int s = 0; s < num_states(); ++s)
    if (accepting[static_cast<std::size_t>(s)]) os << ' ' << state_names[static_cast<std::size_t>(s)];
  os << '\n';
  for (int s = 0; s < num_states(); ++s) {
    os << state_names[static_cast<std::size_t>(s)] << ':';
    for (int i = 0; i < kAlphabetSize; ++i)
      os << ' ' << state_names[transition[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)]];
    os << '\n';
  }
  return os.str();
}

namespace {

Automaton derive_fsa_impl(const Convention& conv) {
  const CutState s0 = initial_cut_state(ColorZ3(0), conv);
  const CutState s1 = initial_cut_state(ColorZ3(1), conv);
  if (!(s0 == s1) || s0.closed != 0)
    throw std::runtime_error("fsa derivation: end-loop colours 0 and 1 disagree on the start state");

  // BFS over reachable cut states; everything with a closed face is FAIL.
  std::map<std::uint32_t, int> index_of;
  std::vector<CutState> states = {s0};
  index_of[s0.key()] = 0;
  std::vector<std::array<std::uint8_t, 9>> trans;
  const int kFailMark = -1;
  std::vector<std::array<int, 9>> raw;

  for (std::size_t head = 0; head < states.size(); ++head) {
    const CutState cur = states[head];
    std::array<int, 9> row{};
    for (int li = 0; li < kAlphabetSize; ++li) {
      const CutState next = transfer(cur, letter_from_index(li), conv);
      if (next.closed > 0) {
        row[static_cast<std::size_t>(li)] = kFailMark;
        continue;
      }
      auto [it, inserted] = index_of.try_emplace(next.key(), static_cast<int>(states.size()));
      if (inserted) states.push_back(next);
      row[static_cast<std::size_t>(li)] = it->second;
    }
    raw.push_back(row);
  }

  const int n_live = static_cast<int>(states.size());
  const int fail = n_live;

  Automaton a;
  a.start = 0;
  a.fail = fail;
  a.state_names.assign(static_cast<std::size_t>(n_live) + 1, "");
  a.accepting.assign(static_cast<std::size_t>(n_live) + 1, 0);
  a.transition.assign(static_cast<std::size_t>(n_live) + 1, {});
  for (int s = 0; s < n_live; ++s)
    for (int li = 0; li < kAlphabetSize; ++li)
      a.transition[static_cast<std::size_t>(s)][static_cast<std::size_t>(li)] =
          static_cast<std::uint8_t>(raw[static_cast<std::size_t>(s)][static_cast<std::size_t>(li)] ==
                                            kFailMark
                                        ? fail
                                        : raw[static_cast<std::size_t>(s)][static_cast<std::size_t>(li)]);
  for (int li = 0; li < kAlphabetSize; ++li)
    a.transition[static_cast<std::size_t>(fail)][static_cast<std::size_t>(li)] =
        static_cast<std::uint8_t>(fail);
  a.state_names[static_cast<std::size_t>(fail)] = "FAIL";

  // Accepting: the final loop closes the chain into exactly one face; the
  // loop colours 0 and 1 must agree and colour 2 must never work.
  for (int s = 0; s < n_live; ++s) {
    const bool acc0 = closing_cycles(states[static_cast<std::size_t>(s)], ColorZ3(0), conv) == 1;
    const bool acc1 = closing_cycles(states[static_cast<std::size_t>(s)], ColorZ3(1), conv) == 1;
    const bool acc2 = closing_cycles(states[static_cast<std::size_t>(s)], ColorZ3(2), conv) == 1;
    if (acc0 != acc1 || acc2)
      throw std::runtime_error("fsa derivation: end-loop colour behaviour is inconsistent");
    a.accepting[static_cast<std::size_t>(s)] = acc0 ? 1 : 0;
  }

  // Name the pattern states off the expected transition structure.
  if (n_live != 3) throw std::runtime_error("fsa derivation: expected 3 live pattern states");
  const auto count_into = [&](int from, int to) {
    int c = 0;
    for (int li = 0; li < kAlphabetSize; ++li)
      if (a.transition[static_cast<std::size_t>(from)][static_cast<std::size_t>(li)] == to) ++c;
    return c;
  };
  int xxyy = -1, xyxy = -1;
  for (int s = 1; s < n_live; ++s)
    if (count_into(0, s) == 6) xxyy = s;
  if (xxyy < 0) throw std::runtime_error("fsa derivation: no 6-letter arrow out of the start");
  xyxy = 3 - xxyy;
  a.state_names[0] = "XYYX";
  a.state_names[static_cast<std::size_t>(xxyy)] = "XXYY";
  a.state_names[static_cast<std::size_t>(xyxy)] = "XYXY";

  const bool shape_ok = count_into(0, xxyy) == 6 && count_into(xxyy, xyxy) == 4 &&
                        count_into(xyxy, 0) == 6 && count_into(xxyy, xxyy) >= 1 &&
                        !a.accepting[0] && a.accepting[static_cast<std::size_t>(xxyy)] &&
                        a.accepting[static_cast<std::size_t>(xyxy)];
  if (!shape_ok) throw std::runtime_error("fsa derivation: transition counts do not match");

  // Transitions must be constant on the letter classes.
  for (int s = 0; s <= n_live; ++s) {
    std::array<int, 4> target = {-1, -1, -1, -1};
    for (int li = 0; li < kAlphabetSize; ++li) {
      const int cls = letter_class(letter_from_index(li));
      const int to = a.transition[static_cast<std::size_t>(s)][static_cast<std::size_t>(li)];
      if (target[static_cast<std::size_t>(cls)] < 0) target[static_cast<std::size_t>(cls)] = to;
      if (target[static_cast<std::size_t>(cls)] != to)
        throw std::runtime_error("fsa derivation: transitions not constant on letter classes");
    }
  }
  return a;
}

}  // namespace

Automaton derive_fsa(const Convention& conv) { return derive_fsa_impl(conv); }

const Automaton& active_fsa() {
  static const Automaton cached = derive_fsa_impl(active_convention());
  return cached;
}

std::vector<BigInt> state_occupancy(int length, const Convention& conv) {
  const Automaton a = derive_fsa(conv);
  std::vector<BigInt> occ(static_cast<std::size_t>(a.num_states()), 0);
  occ[static_cast<std::size_t>(a.start)] = 1;
  for (int step = 0; step < length; ++step) {
    std::vector<BigInt> next(static_cast<std::size_t>(a.num_states()), 0);
    for (int s = 0; s < a.num_states(); ++s) {
      if (occ[static_cast<std::size_t>(s)] == 0) continue;
      for (int li = 0; li < kAlphabetSize; ++li)
        next[a.transition[static_cast<std::size_t>(s)][static_cast<std::size_t>(li)]] +=
            occ[static_cast<std::size_t>(s)];
    }
    occ = std::move(next);
  }
  return occ;
}

BigInt count_accepted(int length, const Convention& conv) {
  if (length < 0) throw std::invalid_argument("count_accepted: negative length");
  const Automaton a = derive_fsa(conv);
  const std::vector<BigInt> occ = state_occupancy(length, conv);
  BigInt total = 0;
  for (int s = 0; s < a.num_states(); ++s)
    if (a.accepting[static_cast<std::size_t>(s)]) total += occ[static_cast<std::size_t>(s)];
  return total;
}

double lower_bound_simple(int n) {
  return 4.0 * std::pow(12.0, (2.0 * n - 5.0) / 3.0);
}

namespace {

BigInt big_pow(BigInt base, int exp) {
  BigInt out = 1;
  while (exp > 0) {
    if (exp & 1) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

}  // namespace

BigInt lower_bound_simple_ceil(int n) {
  if (2 * n - 5 < 0) throw std::invalid_argument("lower_bound_simple_ceil: needs 2n >= 5");
  const BigInt target = 64 * big_pow(12, 2 * n - 5);  // (4 * 12^((2n-5)/3))^3
  BigInt lo = 1, hi = 1;
  while (hi * hi * hi < target) hi *= 2;
  while (lo < hi) {
    const BigInt mid = (lo + hi) / 2;
    if (mid * mid * mid >= target)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

BigInt lower_bound_refined(int n) {
  if (n < 2) throw std::invalid_argument("lower_bound_refined: needs n >= 2");
  BigInt total = 0;
  for (int k = 0; k <= n - 2; ++k) {
    const int m = n - k - 1;
    const int h = m / 3;
    switch (m % 3) {
      case 0:
        break;
      case 1:
        total += big_pow(2, k) * big_pow(6, 2 * h + 1) * big_pow(4, h) * binomial(h + k, h);
        break;
      case 2:
        total += big_pow(2, k) * big_pow(6, 2 * h + 1) * big_pow(4, h + 1) * binomial(h + k, h);
        break;
    }
  }
  return total;
}

UpperBounds upper_bounds(int n) {
  if (n < 1) throw std::invalid_argument("upper_bounds: needs n >= 1");
  BigInt double_fact = 1;
  for (int k = 4 * n - 1; k >= 1; k -= 2) double_fact *= k;
  UpperBounds b;
  b.open_chain = big_pow(9, n);
  b.per_graph = big_pow(18, n);
  b.total = b.per_graph * double_fact;
  return b;
}

}  // namespace spinecensus
