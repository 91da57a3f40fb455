#include "spinecensus/calibration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spinecensus/automaton.hpp"
#include "spinecensus/ograph.hpp"
#include "spinecensus/tracer.hpp"

namespace spinecensus {

namespace {

constexpr int kMaxWordLen = 4;    // open chains up to n = 5
constexpr int kTraceWordLen = 3;  // full-trace cross-check up to n = 4
constexpr int kClosedMax = 3;     // closed chains up to n = 3

int pow9(int k) {
  int v = 1;
  while (k-- > 0) v *= 9;
  return v;
}

// Face counts of every open tuple (alpha, word, delta) with word length
// 1..kMaxWordLen, alpha and delta over all of Z/3, via the cut machinery.
// open[d-1][w * 9 + alpha*3 + delta], w reading the word as a base-9 number
// with the first letter most significant.
struct Battery {
  std::array<std::vector<std::uint8_t>, kMaxWordLen> open;
  std::array<std::vector<std::uint8_t>, kClosedMax> closed;
};

void battery_dfs(const Convention& conv, Battery& b, const CutState& state, int alpha, int depth,
                 int w) {
  for (int li = 0; li < kAlphabetSize; ++li) {
    const CutState next = transfer(state, letter_from_index(li), conv);
    const int w2 = w * 9 + li;
    const int d = depth + 1;
    auto& table = b.open[static_cast<std::size_t>(d - 1)];
    for (int delta = 0; delta < 3; ++delta) {
      const int faces = next.closed + closing_cycles(next, ColorZ3(delta), conv);
      table[static_cast<std::size_t>(w2 * 9 + alpha * 3 + delta)] =
          static_cast<std::uint8_t>(faces > 255 ? 255 : faces);
    }
    if (d < kMaxWordLen) battery_dfs(conv, b, next, alpha, d, w2);
  }
}

Battery compute_battery(const Convention& conv) {
  Battery b;
  for (int d = 1; d <= kMaxWordLen; ++d)
    b.open[static_cast<std::size_t>(d - 1)].assign(static_cast<std::size_t>(pow9(d)) * 9, 0);
  for (int alpha = 0; alpha < 3; ++alpha)
    battery_dfs(conv, b, initial_cut_state(ColorZ3(alpha), conv), alpha, 0, 0);

  for (int n = 1; n <= kClosedMax; ++n) {
    auto& table = b.closed[static_cast<std::size_t>(n - 1)];
    table.assign(static_cast<std::size_t>(pow9(n)), 0);
    ClosedChainParams params;
    params.pairs.resize(static_cast<std::size_t>(n));
    for (int w = 0; w < pow9(n); ++w) {
      int rest = w;
      for (int i = n - 1; i >= 0; --i) {
        params.pairs[static_cast<std::size_t>(i)] = {ColorZ3(rest / 3 % 3), ColorZ3(rest % 3)};
        rest /= 9;
      }
      const int faces = trace_faces(make_closed_chain(params, conv), conv).face_count;
      table[static_cast<std::size_t>(w)] = static_cast<std::uint8_t>(faces > 255 ? 255 : faces);
    }
  }
  return b;
}

OpenChainParams tuple_params(int d, int w, int ad) {
  OpenChainParams p;
  p.alpha = ColorZ3(ad / 3);
  p.delta = ColorZ3(ad % 3);
  p.word.resize(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    p.word[static_cast<std::size_t>(i)] = letter_from_index(w % 9);
    w /= 9;
  }
  return p;
}

int tuple_index(const OpenChainParams& p) {
  int w = 0;
  for (const Letter& l : p.word) w = w * 9 + l.index();
  return w * 9 + p.alpha.value() * 3 + p.delta.value();
}

// Criteria beyond the machine shape.  Returns false (fast) on any failure;
// fills the rotation/mirror survivor masks of the convention's behaviour.
struct DeepResult {
  bool ok = false;
  Battery battery;
  std::vector<RotationAction> rotations;
  std::vector<int> mirrors;
  std::uint64_t signature = 0;
};

std::uint64_t fnv1a(std::uint64_t h, const std::uint8_t* data, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= 1099511628211ull;
  }
  return h;
}

DeepResult deep_check(const Convention& conv, const Automaton& fsa) {
  DeepResult r;
  r.battery = compute_battery(conv);
  const Battery& b = r.battery;

  // Machine acceptance == single face, and end colour 2 always fails.
  for (int d = 1; d <= kMaxWordLen; ++d) {
    std::vector<Letter> word(static_cast<std::size_t>(d));
    for (int w = 0; w < pow9(d); ++w) {
      int rest = w;
      for (int i = d - 1; i >= 0; --i) {
        word[static_cast<std::size_t>(i)] = letter_from_index(rest % 9);
        rest /= 9;
      }
      const bool acc = fsa.accepts(word);
      for (int ad = 0; ad < 9; ++ad) {
        const int faces =
            b.open[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(w * 9 + ad)];
        const bool extremes_ok = ad / 3 != 2 && ad % 3 != 2;
        if (!extremes_ok) {
          if (faces < 2) return r;
        } else if ((faces == 1) != acc) {
          return r;
        }
      }
    }
  }

  // Cut machinery must agree with full tracing (and the relation vectors of
  // single-face chains must look right).
  for (int d = 1; d <= kTraceWordLen; ++d) {
    for (int w = 0; w < pow9(d); ++w)
      for (int ad = 0; ad < 9; ++ad) {
        const OpenChainParams p = tuple_params(d, w, ad);
        const OGraph g = make_open_chain(p, conv);
        const TraceResult t = trace_faces(g, conv);
        if (t.face_count !=
            b.open[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(w * 9 + ad)])
          return r;
        if (t.face_count == 1) {
          const BoundaryData bd = boundary_word(t, g);
          if (static_cast<int>(bd.cotree_edges.size()) != d + 2) return r;
          long long g_all = 0;
          bool has_unit = false;
          for (const long long v : bd.relations[0]) {
            const long long a = v < 0 ? -v : v;
            if (a != 1 && a != 3) return r;
            if (a == 1) has_unit = true;
            g_all = std::gcd(g_all, a);
          }
          if (!has_unit || g_all != 1) return r;
        }
      }
  }

  // The beta/gamma swap never changes the face count.
  for (int d = 1; d <= kMaxWordLen; ++d)
    for (int w = 0; w < pow9(d); ++w)
      for (int ad = 0; ad < 9; ++ad) {
        const OpenChainParams p = tuple_params(d, w, ad);
        OpenChainParams q = p;
        for (Letter& l : q.word) l = l.swapped();
        const auto& tab = b.open[static_cast<std::size_t>(d - 1)];
        if (tab[static_cast<std::size_t>(tuple_index(p))] !=
            tab[static_cast<std::size_t>(tuple_index(q))])
          return r;
      }

  // Colour action of chain reversal: keep every candidate that preserves
  // face counts on the whole battery.
  for (const bool swap_pair : {true, false})
    for (const AffineZ3& lm : kAffineInvolutions)
      for (const AffineZ3& gm : kAffineInvolutions) {
        const RotationAction act{swap_pair, lm, gm};
        bool good = true;
        for (int d = 1; d <= kMaxWordLen && good; ++d)
          for (int w = 0; w < pow9(d) && good; ++w)
            for (int ad = 0; ad < 9 && good; ++ad) {
              const OpenChainParams p = tuple_params(d, w, ad);
              OpenChainParams q;
              q.alpha = act.loop_map.apply(p.delta);
              q.delta = act.loop_map.apply(p.alpha);
              for (auto it = p.word.rbegin(); it != p.word.rend(); ++it)
                q.word.push_back(act.apply(*it));
              const auto& tab = b.open[static_cast<std::size_t>(d - 1)];
              good = tab[static_cast<std::size_t>(tuple_index(p))] ==
                     tab[static_cast<std::size_t>(tuple_index(q))];
            }
        if (good) r.rotations.push_back(act);
      }
  if (r.rotations.empty()) return r;

  // Mirror: some port reflection must realize orientation reversal, i.e.
  // preserve face counts of every battery graph, and the colour formulas for
  // the reversed open chain must again preserve face counts.
  for (int refl = 0; refl < 2; ++refl) {
    Convention mc = conv;
    mc.mirror_reflection = refl;
    bool good = true;
    for (int d = 1; d <= kTraceWordLen && good; ++d)
      for (int w = 0; w < pow9(d) && good; ++w)
        for (int ad = 0; ad < 9 && good; ++ad) {
          const OpenChainParams p = tuple_params(d, w, ad);
          const int faces = trace_faces(mirror(make_open_chain(p, conv), mc), conv).face_count;
          good = faces ==
                 b.open[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(w * 9 + ad)];
        }
    ClosedChainParams cp;
    for (int n = 1; n <= kClosedMax && good; ++n) {
      cp.pairs.resize(static_cast<std::size_t>(n));
      for (int w = 0; w < pow9(n) && good; ++w) {
        int rest = w;
        for (int i = n - 1; i >= 0; --i) {
          cp.pairs[static_cast<std::size_t>(i)] = {ColorZ3(rest / 3 % 3), ColorZ3(rest % 3)};
          rest /= 9;
        }
        const int faces = trace_faces(mirror(make_closed_chain(cp, conv), mc), conv).face_count;
        good = faces == b.closed[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(w)];
      }
    }
    if (good) r.mirrors.push_back(refl);
  }
  if (r.mirrors.empty()) return r;

  // Reversed-orientation colour formulas for the open chain.
  for (int d = 1; d <= kMaxWordLen; ++d)
    for (int w = 0; w < pow9(d); ++w)
      for (int ad = 0; ad < 9; ++ad) {
        const OpenChainParams p = tuple_params(d, w, ad);
        const auto& tab = b.open[static_cast<std::size_t>(d - 1)];
        if (tab[static_cast<std::size_t>(tuple_index(p))] !=
            tab[static_cast<std::size_t>(tuple_index(mirror_open_chain(p)))])
          return r;
      }

  // Behaviour signature: machine plus every face count.
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& row : fsa.transition) h = fnv1a(h, row.data(), row.size());
  h = fnv1a(h, reinterpret_cast<const std::uint8_t*>(fsa.accepting.data()), fsa.accepting.size());
  for (const auto& tab : b.open) h = fnv1a(h, tab.data(), tab.size());
  for (const auto& tab : b.closed) h = fnv1a(h, tab.data(), tab.size());
  r.signature = h;
  r.ok = true;
  return r;
}

struct Candidate {
  Convention conv;
  DeepResult deep;
};

}  // namespace

CalibrationReport calibrate(const std::vector<VertexModel>& candidates) {
  // Stage 1: machine shape, over tables x endpoint orders.
  std::vector<Convention> shaped;
  std::mutex mu;
  std::atomic<int> cursor{0};
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  const int workers = std::max(1, std::min(hw, 16));
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const int i = cursor.fetch_add(1);
        if (i >= static_cast<int>(candidates.size())) return;
        const VertexModel& m = candidates[static_cast<std::size_t>(i)];
        if (!m.valid()) continue;
        for (int bits = 0; bits < 16; ++bits) {
          Convention conv;
          conv.model = m;
          conv.dirs = ChainDirs{(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0,
                                (bits & 8) != 0};
          try {
            (void)derive_fsa(conv);
          } catch (const std::runtime_error&) {
            continue;
          }
          std::lock_guard<std::mutex> lock(mu);
          shaped.push_back(conv);
        }
      }
    });
  for (auto& th : pool) th.join();

  CalibrationReport report;
  report.structural_survivors = static_cast<int>(shaped.size());

  // Stage 2: the expensive criteria, again in parallel.
  std::vector<Candidate> survivors;
  std::atomic<int> cursor2{0};
  std::vector<std::thread> pool2;
  for (int t = 0; t < workers; ++t)
    pool2.emplace_back([&] {
      for (;;) {
        const int i = cursor2.fetch_add(1);
        if (i >= static_cast<int>(shaped.size())) return;
        const Convention& conv = shaped[static_cast<std::size_t>(i)];
        DeepResult deep = deep_check(conv, derive_fsa(conv));
        if (!deep.ok) continue;
        std::lock_guard<std::mutex> lock(mu);
        survivors.push_back(Candidate{conv, std::move(deep)});
      }
    });
  for (auto& th : pool2) th.join();

  report.full_survivors = static_cast<int>(survivors.size());
  if (survivors.empty()) throw std::runtime_error("no consistent convention");

  std::vector<std::uint64_t> sigs;
  for (const Candidate& c : survivors) sigs.push_back(c.deep.signature);
  std::sort(sigs.begin(), sigs.end());
  sigs.erase(std::unique(sigs.begin(), sigs.end()), sigs.end());
  report.behavior_classes = static_cast<int>(sigs.size());
  if (sigs.size() > 1) throw std::runtime_error("ambiguous convention");

  const Candidate* best = &survivors.front();
  for (const Candidate& c : survivors) {
    const auto key = [](const Candidate& x) {
      return std::pair(x.conv.model.encode(), x.conv.dirs.bits());
    };
    if (key(c) < key(*best)) best = &c;
  }

  report.chosen = best->conv;
  report.chosen.rotation = best->deep.rotations.front();
  report.chosen.mirror_reflection = best->deep.mirrors.front();
  report.rotation_candidates = static_cast<int>(best->deep.rotations.size());
  report.mirror_candidates = static_cast<int>(best->deep.mirrors.size());
  return report;
}

CalibrationReport calibrate() { return calibrate(VertexModel::all_models()); }

void verify_active_convention() {
  const Convention& conv = active_convention();
  const Automaton fsa = derive_fsa(conv);
  const DeepResult deep = deep_check(conv, fsa);
  if (!deep.ok) throw std::runtime_error("active convention fails calibration criteria");
  const bool rot_ok =
      std::find(deep.rotations.begin(), deep.rotations.end(), conv.rotation) != deep.rotations.end();
  const bool mir_ok =
      std::find(deep.mirrors.begin(), deep.mirrors.end(), conv.mirror_reflection) != deep.mirrors.end();
  if (!rot_ok) throw std::runtime_error("active rotation action fails calibration criteria");
  if (!mir_ok) throw std::runtime_error("active mirror reflection fails calibration criteria");
}

std::string convention_source(const Convention& conv) {
  std::ostringstream os;
  os << "Convention{\n    VertexModel{\n        {{";
  for (int p = 0; p < 4; ++p) {
    os << "{{";
    for (int s = 0; s < 3; ++s)
      os << static_cast<int>(conv.model.germ_port[static_cast<std::size_t>(p)]
                                                 [static_cast<std::size_t>(s)])
         << (s < 2 ? ", " : "");
    os << "}}" << (p < 3 ? ", " : "");
  }
  os << "}},\n        {{";
  for (int p = 0; p < 4; ++p) {
    os << "{{";
    for (int s = 0; s < 3; ++s)
      os << static_cast<int>(conv.model.germ_slot[static_cast<std::size_t>(p)]
                                                 [static_cast<std::size_t>(s)])
         << (s < 2 ? ", " : "");
    os << "}}" << (p < 3 ? ", " : "");
  }
  os << "}},\n    },\n    ChainDirs{" << (conv.dirs.first_loop_fwd ? "true" : "false") << ", "
     << (conv.dirs.last_loop_fwd ? "true" : "false") << ", "
     << (conv.dirs.upper_fwd ? "true" : "false") << ", "
     << (conv.dirs.lower_fwd ? "true" : "false") << "},\n    " << conv.mirror_reflection
     << ",\n    RotationAction{" << (conv.rotation.swap_pair ? "true" : "false") << ", AffineZ3{"
     << static_cast<int>(conv.rotation.letter_map.mul) << ", "
     << static_cast<int>(conv.rotation.letter_map.add) << "}, AffineZ3{"
     << static_cast<int>(conv.rotation.loop_map.mul) << ", "
     << static_cast<int>(conv.rotation.loop_map.add) << "}},\n}";
  return os.str();
}

}  // namespace spinecensus
