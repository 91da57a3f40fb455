// Development helper: pins the rotation colour action and mirror reflection
// against ground truth (oriented isomorphism signatures of the dual
// triangulations), which face counts alone cannot do.
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "spinecensus/automaton.hpp"
#include "spinecensus/calibration.hpp"
#include "spinecensus/triangulation.hpp"

using namespace spinecensus;

namespace {

void accepted_words(const Automaton& fsa, int len, int state, std::vector<Letter>& prefix,
                    std::vector<std::vector<Letter>>& out) {
  if (static_cast<int>(prefix.size()) == len) {
    if (fsa.accepting[static_cast<std::size_t>(state)]) out.push_back(prefix);
    return;
  }
  for (int li = 0; li < kAlphabetSize; ++li) {
    const int next = fsa.transition[static_cast<std::size_t>(state)][static_cast<std::size_t>(li)];
    if (next == fsa.fail) continue;
    prefix.push_back(letter_from_index(li));
    accepted_words(fsa, len, next, prefix, out);
    prefix.pop_back();
  }
}

std::string sig_of(const OpenChainParams& p) {
  return triangulation_signature(export_gluing_table(make_open_chain(p)));
}

OpenChainParams swap_word(const OpenChainParams& p) {
  OpenChainParams q = p;
  for (Letter& l : q.word) l = l.swapped();
  return q;
}

OpenChainParams rotate_by(const OpenChainParams& p, const RotationAction& act) {
  OpenChainParams q;
  q.alpha = act.loop_map.apply(p.delta);
  q.delta = act.loop_map.apply(p.alpha);
  for (auto it = p.word.rbegin(); it != p.word.rend(); ++it) q.word.push_back(act.apply(*it));
  return q;
}

}  // namespace

int main() {
  const Automaton fsa = derive_fsa();

  for (const int n : {2, 3, 4, 5}) {
    std::vector<std::vector<Letter>> words;
    std::vector<Letter> prefix;
    accepted_words(fsa, n - 1, fsa.start, prefix, words);

    std::vector<OpenChainParams> tuples;
    std::map<std::string, int> class_of_sig;
    std::map<int, int> class_of_tuple;  // tuple index -> class
    std::map<int, std::set<int>> members;
    for (const auto& w : words)
      for (int a = 0; a < 2; ++a)
        for (int d = 0; d < 2; ++d) {
          OpenChainParams p{ColorZ3(a), ColorZ3(d), w};
          const std::string s = sig_of(p);
          auto [it, fresh] = class_of_sig.try_emplace(s, static_cast<int>(class_of_sig.size()));
          const int idx = static_cast<int>(tuples.size());
          class_of_tuple[idx] = it->second;
          members[it->second].insert(idx);
          tuples.push_back(std::move(p));
        }
    std::map<OpenChainParams, int> index_of;
    for (int i = 0; i < static_cast<int>(tuples.size()); ++i) index_of[tuples[static_cast<std::size_t>(i)]] = i;

    // swap must stay inside the class
    int swap_bad = 0;
    for (int i = 0; i < static_cast<int>(tuples.size()); ++i) {
      const auto it = index_of.find(swap_word(tuples[static_cast<std::size_t>(i)]));
      if (it == index_of.end() || class_of_tuple[it->second] != class_of_tuple[i]) ++swap_bad;
    }

    std::cout << "n=" << n << ": raw=" << tuples.size() << " classes=" << class_of_sig.size()
              << " swap_violations=" << swap_bad << "\n  surviving rotations:";

    for (const bool swap_pair : {true, false})
      for (const AffineZ3& lm : kAffineInvolutions)
        for (const AffineZ3& gm : kAffineInvolutions) {
          const RotationAction act{swap_pair, lm, gm};
          bool ok = true;
          for (int i = 0; i < static_cast<int>(tuples.size()) && ok; ++i) {
            const OpenChainParams& p = tuples[static_cast<std::size_t>(i)];
            // orbit under {id, swap} x {id, rot}
            std::set<int> orbit;
            for (const OpenChainParams& q :
                 {p, swap_word(p), rotate_by(p, act), swap_word(rotate_by(p, act))}) {
              const auto it = index_of.find(q);
              if (it == index_of.end()) {
                ok = false;
                break;
              }
              orbit.insert(it->second);
            }
            ok = ok && orbit == members[class_of_tuple[i]];
          }
          if (ok)
            std::cout << " (swap=" << swap_pair << ",lm=" << static_cast<int>(lm.mul) << ","
                      << static_cast<int>(lm.add) << ",gm=" << static_cast<int>(gm.mul) << ","
                      << static_cast<int>(gm.add) << ")";
        }
    std::cout << "\n";

    // mirror reflections against the reversed-orientation colour formulas
    for (int refl = 0; refl < 2; ++refl) {
      Convention mc = active_convention();
      mc.mirror_reflection = refl;
      int bad = 0;
      for (const auto& p : tuples) {
        const std::string lhs =
            triangulation_signature(export_gluing_table(mirror(make_open_chain(p), mc)));
        const std::string rhs = sig_of(mirror_open_chain(p));
        if (lhs != rhs) ++bad;
      }
      std::cout << "  mirror refl=" << refl << ": violations=" << bad << "\n";
    }
  }
  return 0;
}
