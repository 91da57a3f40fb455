// Command-line front end: enumeration, counting, invariants, chirality,
// tracing, machine inspection and the closed-chain experiment, with stable
// machine-readable output.  Exit codes: 0 success, 1 usage or domain error,
// 2 violated internal invariant.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinecensus/automaton.hpp"
#include "spinecensus/calibration.hpp"
#include "spinecensus/census.hpp"
#include "spinecensus/invariants.hpp"
#include "spinecensus/quantum.hpp"
#include "spinecensus/tracer.hpp"
#include "spinecensus/triangulation.hpp"
#include "spinecensus/volume.hpp"

namespace {

using nlohmann::ordered_json;
using namespace spinecensus;

struct GlobalOpts {
  int jobs = 1;
  std::string format = "json";
  std::string out;
};

// Data goes to --out (or stdout); diagnostics stay on stderr.
class OutStream {
 public:
  explicit OutStream(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::pair<int, int> parse_n_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = std::stoi(text);
    return {n, n};
  }
  const int lo = std::stoi(text.substr(0, dots));
  const int hi = std::stoi(text.substr(dots + 2));
  if (hi < lo) throw std::invalid_argument("empty n range");
  return {lo, hi};
}

std::vector<int> parse_levels(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

int parse_q0(const std::string& text) {
  if (text == "pi-over-r") return 1;
  return std::stoi(text);  // q0 = exp(i pi s / r)
}

std::uint64_t seed_or_env(std::optional<std::uint64_t> seed) {
  if (seed) return *seed;
  if (const char* env = std::getenv("SPINECENSUS_SEED")) return std::stoull(env);
  return 0;
}

OpenChainParams parse_word_arg(int alpha, int delta, const std::string& word) {
  OpenChainParams p;
  p.alpha = ColorZ3(alpha);
  p.delta = ColorZ3(delta);
  std::stringstream ss(word);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.size() != 2 || item[0] < '0' || item[0] > '2' || item[1] < '0' || item[1] > '2')
      throw std::invalid_argument("word letters must be two digits in 0..2, e.g. 02,21");
    p.word.emplace_back(item[0] - '0', item[1] - '0');
  }
  if (p.word.empty()) throw std::invalid_argument("word must be nonempty");
  return p;
}

ordered_json report_json(const InvariantReport& rep) {
  ordered_json j;
  j["schema"] = 1;
  j["n"] = rep.n;
  j["volume"] = rep.volume;
  j["h1_rank"] = rep.h1_rank;
  j["h1_torsion"] = rep.h1_torsion;
  j["boundary_genus"] = rep.boundary_genus;
  j["heegaard_genus"] = rep.heegaard_genus;
  j["complexity"] = rep.complexity;
  ordered_json tv = ordered_json::object();
  for (const auto& [r, v] : rep.tv) tv[std::to_string(r)] = v;
  j["tv"] = tv;
  return j;
}

// Least census tuple at n, for the per-member invariant cross-checks.
OpenChainParams first_census_params(int n) {
  OpenChainParams result;
  bool found = false;
  const Automaton& fsa = active_fsa();
  OpenChainParams p;
  p.alpha = ColorZ3(0);
  p.delta = ColorZ3(0);
  p.word.resize(static_cast<std::size_t>(n - 1));
  const auto dfs = [&](auto&& self, int depth, int state) -> void {
    if (found) return;
    if (depth == n - 1) {
      if (fsa.accepting[static_cast<std::size_t>(state)] &&
          canonical_form(p) == p) {
        result = p;
        found = true;
      }
      return;
    }
    for (int li = 0; li < kAlphabetSize && !found; ++li) {
      const int next = fsa.transition[static_cast<std::size_t>(state)][static_cast<std::size_t>(li)];
      if (next == fsa.fail) continue;
      p.word[static_cast<std::size_t>(depth)] = letter_from_index(li);
      self(self, depth + 1, next);
    }
  };
  dfs(dfs, 0, fsa.start);
  if (!found) throw std::runtime_error("no census member at this n");
  return result;
}

int cmd_count(const GlobalOpts& g, const std::string& n_range) {
  const auto [lo, hi] = parse_n_range(n_range);
  if (lo < 2) throw std::invalid_argument("count: needs n >= 2");
  OutStream out(g.out);
  if (g.format == "json") {
    ordered_json rows = ordered_json::array();
    for (int n = lo; n <= hi; ++n) {
      ordered_json row;
      row["n"] = n;
      row["exact_accepted"] = count_accepted(n - 1).str();
      row["refined_lower"] = lower_bound_refined(n).str();
      row["simple_lower"] = lower_bound_simple(n);
      row["upper_9n"] = upper_bounds(n).open_chain.str();
      rows.push_back(row);
    }
    out.get() << rows.dump() << '\n';
    return 0;
  }
  out.get() << "n,exact_accepted,refined_lower,simple_lower,upper_9n\n";
  for (int n = lo; n <= hi; ++n) {
    std::ostringstream line;
    line.precision(15);
    line << n << ',' << count_accepted(n - 1) << ',' << lower_bound_refined(n) << ','
         << lower_bound_simple(n) << ',' << upper_bounds(n).open_chain;
    out.get() << line.str() << '\n';
  }
  return 0;
}

int cmd_enumerate(const GlobalOpts& g, int n, const std::string& tv_levels) {
  OutStream out(g.out);
  write_census_jsonl(n, g.jobs, parse_levels(tv_levels), out.get());
  return 0;
}

int cmd_invariants(const GlobalOpts& g, const std::string& n_range, const std::string& tv_levels,
                   const std::string& q0) {
  const auto [lo, hi] = parse_n_range(n_range);
  const int s = parse_q0(q0);
  const std::vector<int> levels = parse_levels(tv_levels);
  for (const int r : levels) (void)QuantumContext::make(r, s);  // validate early
  OutStream out(g.out);
  for (int n = lo; n <= hi; ++n) {
    InvariantReport rep = invariant_report(first_census_params(n), {});
    for (const int r : levels) rep.tv[r] = turaev_viro(n, QuantumContext::make(r, s));
    if (g.format == "csv") {
      if (n == lo) {
        out.get() << "n,volume,h1_rank,boundary_genus,heegaard_genus,complexity";
        for (const int r : levels) out.get() << ",tv" << r;
        out.get() << '\n';
      }
      std::ostringstream line;
      line.precision(15);
      line << n << ',' << rep.volume << ',' << rep.h1_rank << ',' << rep.boundary_genus << ','
           << rep.heegaard_genus << ',' << rep.complexity;
      for (const int r : levels) line << ',' << rep.tv.at(r);
      out.get() << line.str() << '\n';
    } else {
      out.get() << report_json(rep).dump() << '\n';
    }
  }
  return 0;
}

int cmd_chirality(const GlobalOpts& g, const std::string& n_range, int alpha, int delta,
                  const std::string& word) {
  OutStream out(g.out);
  if (!word.empty()) {
    const OpenChainParams p = parse_word_arg(alpha, delta, word);
    if (!is_single_face(make_open_chain(p)))
      throw std::invalid_argument("tuple does not define a one-faced polyhedron");
    const OpenChainParams canon = canonical_form(p);
    ordered_json j;
    j["schema"] = 1;
    j["n"] = p.n();
    j["canonical_alpha"] = canon.alpha.value();
    j["canonical_delta"] = canon.delta.value();
    ordered_json w = ordered_json::array();
    for (const Letter& l : canon.word)
      w.push_back(ordered_json::array({l.beta.value(), l.gamma.value()}));
    j["canonical_word"] = w;
    j["orbit_size"] = static_cast<int>(open_chain_orbit(p).size());
    j["chirality"] =
        classify_chirality(p) == Chirality::kAmphichiral ? "AMPHICHIRAL" : "CHIRAL";
    out.get() << j.dump() << '\n';
    return 0;
  }
  const auto [lo, hi] = parse_n_range(n_range);
  for (int n = lo; n <= hi; ++n) {
    const CensusStats s = census_stats(n, g.jobs);
    if (g.format == "csv") {
      if (n == lo) out.get() << "n,records,chiral,amphichiral\n";
      out.get() << n << ',' << s.records << ',' << s.chiral << ',' << s.amphichiral << '\n';
    } else {
      ordered_json j;
      j["schema"] = 1;
      j["n"] = n;
      j["records"] = s.records;
      j["chiral"] = s.chiral;
      j["amphichiral"] = s.amphichiral;
      out.get() << j.dump() << '\n';
    }
  }
  return 0;
}

int cmd_trace(const GlobalOpts& g, const std::string& input, bool walks, bool gluing) {
  OGraph graph = [&] {
    if (input.empty() || input == "-") return parse_ograph(std::cin);
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot open input file: " + input);
    return parse_ograph(in);
  }();

  OutStream out(g.out);
  const TraceResult t = trace_faces(graph);
  if (gluing) {
    out.get() << serialize_gluing_table(export_gluing_table(graph));
    return 0;
  }
  if (g.format == "json") {
    ordered_json j;
    j["schema"] = 1;
    j["vertices"] = t.vertex_count;
    j["faces"] = t.face_count;
    j["euler_characteristic"] = t.euler_characteristic;
    if (walks) {
      ordered_json ws = ordered_json::array();
      for (const auto& walk : t.faces) {
        ordered_json tokens = ordered_json::array();
        for (const WalkStep& step : walk) {
          std::ostringstream tok;
          tok << step.from.edge << ':' << (step.from.end == 0 ? 'a' : 'b') << ':' << step.from.slot
              << ':' << (step.sign > 0 ? '+' : '-');
          tokens.push_back(tok.str());
        }
        ws.push_back(tokens);
      }
      j["walks"] = ws;
    }
    out.get() << j.dump() << '\n';
    return 0;
  }
  out.get() << "faces " << t.face_count << '\n'
            << "euler " << t.euler_characteristic << '\n';
  if (walks)
    for (const auto& walk : t.faces) {
      out.get() << "walk";
      for (const WalkStep& step : walk)
        out.get() << ' ' << step.from.edge << ':' << (step.from.end == 0 ? 'a' : 'b') << ':'
                  << step.from.slot << ':' << (step.sign > 0 ? '+' : '-');
      out.get() << '\n';
    }
  return 0;
}

int cmd_fsa(const GlobalOpts& g) {
  OutStream out(g.out);
  out.get() << active_fsa().format();
  return 0;
}

int cmd_simulate(const GlobalOpts& g, int n, long long samples, std::optional<std::uint64_t> seed) {
  const std::uint64_t s = seed_or_env(seed);
  const MonteCarloReport rep = closed_chain_monte_carlo(n, samples, s, g.jobs);
  OutStream out(g.out);
  if (g.format == "csv") {
    out.get() << "n,samples,seed,single_face_count,frequency\n"
              << rep.n << ',' << rep.samples << ',' << rep.seed << ',' << rep.single_face_count
              << ',' << rep.frequency << '\n';
    return 0;
  }
  ordered_json j;
  j["schema"] = 1;
  j["n"] = rep.n;
  j["samples"] = rep.samples;
  j["seed"] = rep.seed;
  j["single_face_count"] = rep.single_face_count;
  j["frequency"] = rep.frequency;
  ordered_json pv = ordered_json::array();
  for (const auto& v : rep.per_value) {
    ordered_json e;
    e["alpha1"] = v.alpha1;
    e["beta1"] = v.beta1;
    e["samples"] = v.samples;
    e["single_face"] = v.single_face;
    e["frequency"] = v.frequency;
    pv.push_back(e);
  }
  j["per_value"] = pv;
  out.get() << j.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"census of the one-faced chain spines and their manifold invariants"};
  app.require_subcommand(1);

  GlobalOpts g;
  g.format.clear();  // per-subcommand default: csv for count, json otherwise
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out, "write data to this file instead of stdout");

  std::string n_range = "2";
  std::string tv_levels = "3,5,7";
  std::string q0 = "pi-over-r";
  std::string word;
  std::string trace_input;
  int alpha = 0, delta = 0, enum_n = 2, sim_n = 2;
  long long samples = 10000;
  std::optional<std::uint64_t> seed;
  bool walks = false, gluing = false, closed_chain = false;

  CLI::App* c_enumerate = app.add_subcommand("enumerate", "stream the census at n as JSON lines");
  c_enumerate->add_option("--n", enum_n, "number of chain vertices")->required();
  c_enumerate->add_option("--tv-levels", tv_levels, "comma-separated invariant levels");

  CLI::App* c_count = app.add_subcommand("count", "exact accepted-word counts and growth bounds");
  c_count->add_option("--n", n_range, "n or range n1..n2")->required();

  CLI::App* c_inv = app.add_subcommand("invariants", "manifold invariants at n");
  c_inv->add_option("--n", n_range, "n or range n1..n2")->required();
  c_inv->add_option("--tv-levels", tv_levels, "comma-separated invariant levels");
  c_inv->add_option("--q0", q0, "pi-over-r, or an integer s for exp(i pi s / r)");

  CLI::App* c_chir = app.add_subcommand("chirality", "chirality of a tuple or census summary");
  c_chir->add_option("--n", n_range, "n or range n1..n2 for the census summary");
  c_chir->add_option("--alpha", alpha, "first loop colour");
  c_chir->add_option("--delta", delta, "last loop colour");
  c_chir->add_option("--word", word, "letters as comma-separated digit pairs, e.g. 02,21");

  CLI::App* c_trace = app.add_subcommand("trace", "trace the faces of an o-graph file");
  c_trace->add_option("input", trace_input, "o-graph file ('-' or empty for stdin)");
  c_trace->add_flag("--walks", walks, "print each face walk");
  c_trace->add_flag("--gluing", gluing, "print the dual triangulation gluing table instead");

  app.add_subcommand("fsa", "print the derived word machine");

  CLI::App* c_sim = app.add_subcommand("simulate", "seeded closed-chain experiment");
  c_sim->add_flag("--closed-chain", closed_chain, "sample closed-chain colourings");
  c_sim->add_option("--n", sim_n, "number of chain vertices")->required();
  c_sim->add_option("--samples", samples, "number of samples")->check(CLI::PositiveNumber);
  c_sim
      ->add_option("--seed", seed,
                   "random seed (falls back to SPINECENSUS_SEED, then 0)")
      ->expected(1);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (g.format.empty()) g.format = app.get_subcommand("count")->parsed() ? "csv" : "json";

  try {
    if (c_count->parsed()) return cmd_count(g, n_range);
    if (c_enumerate->parsed()) return cmd_enumerate(g, enum_n, tv_levels);
    if (c_inv->parsed()) return cmd_invariants(g, n_range, tv_levels, q0);
    if (c_chir->parsed()) return cmd_chirality(g, n_range, alpha, delta, word);
    if (c_trace->parsed()) return cmd_trace(g, trace_input, walks, gluing);
    if (app.get_subcommand("fsa")->parsed()) return cmd_fsa(g);
    if (c_sim->parsed()) {
      if (!closed_chain) throw std::invalid_argument("simulate: only --closed-chain is available");
      return cmd_simulate(g, sim_n, samples, seed);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
