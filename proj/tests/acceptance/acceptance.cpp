// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <json.hpp>

#include "slg/cli/cli.hpp"
#include "slg/core/error.hpp"
#include "slg/core/lexicon_io.hpp"
#include "slg/corpus/cooccurrence.hpp"
#include "slg/corpus/distant_label.hpp"
#include "slg/corpus_induction/corpus_induction.hpp"
#include "slg/dict/dict_induction.hpp"
#include "slg/eval/evaluate.hpp"
#include "slg/taxonomy/lexical_graph.hpp"
#include "support/random_instance.hpp"

using namespace slg;
namespace fs = std::filesystem;
using testing::random_instance;

namespace {

const std::string F = SLG_FIXTURE_DIR;
constexpr auto P = Polarity::positive;
constexpr auto N = Polarity::negative;
constexpr auto U = Polarity::neutral;

/// Collects failed checks of one criterion.
struct Check {
  std::vector<std::string> failures;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok) ++failed;
  }
  std::size_t failed = 0;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("slg_accept_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

int slg_run(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int status = cli::run(args, o, e);
  if (out) *out = o.str();
  if (status != 0) std::fprintf(stderr, "  slg %s: %s", args.front().c_str(), e.str().c_str());
  return status;
}

SeedSet seeds_of(std::initializer_list<std::pair<std::string, Polarity>> s) {
  std::vector<SeedEntry> e;
  for (const auto& [t, p] : s) e.push_back({t, p, SeedKind::literal});
  return SeedSet(std::move(e));
}

std::set<std::string> terms_with(const Lexicon& l, Polarity p) {
  std::set<std::string> out;
  for (const auto& [t, e] : l.entries()) {
    if (e.polarity == p) out.insert(t);
  }
  return out;
}

std::set<std::string> terms_with(const RankedCandidates& c, Polarity p) {
  std::set<std::string> out;
  for (const auto& e : c.entries) {
    if (e.polarity == p) out.insert(e.term);
  }
  return out;
}

std::vector<fs::path> seed_fixtures() {
  std::vector<fs::path> out{F + "/seeds.tsv"};
  for (const auto& e : fs::directory_iterator(F + "/seedsets")) out.push_back(e.path());
  std::sort(out.begin() + 1, out.end());
  return out;
}

// 1 ---------------------------------------------------------------------------

void eval_exactness(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto corpus = load_corpus(F + "/eval/corpus.tsv", 1);
  const auto gold = read_gold_file(F + "/eval/gold.tsv");
  const auto lex = read_lexicon_file(F + "/eval/lexicon.tsv");
  const auto r = evaluate_lexicon(lex, corpus.documents, gold);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12; };
  c.expect(corpus.stats.token_count() == 10, "fixture has 10 tokens");
  c.expect(near(r[P].precision, 1.0) && near(r[P].recall, 1.0) && near(r[P].f, 1.0), "positive P=R=F=1");
  c.expect(near(r[N].precision, 0.0) && near(r[N].recall, 0.0) && near(r[N].f, 0.0), "negative F=0");
  c.expect(near(r[U].precision, 1.0), "neutral P=1");
  c.expect(near(r[U].recall, 7.0 / 8.0), "neutral R=7/8");
  c.expect(near(r[U].f, 14.0 / 15.0), "neutral F=14/15");
  c.expect(near(r.macro_f, (1.0 + 14.0 / 15.0) / 3.0), "macro-F");
  c.expect(near(r.micro_f, 0.9), "micro-F 9/10");
  c.expect(secs < 1.0, "runtime < 1 s");
  c.note = "neutral R " + fmt("%.15g", r[U].recall) + ", " + fmt("%.4f s", secs);
}

// 2 ---------------------------------------------------------------------------

double cut_cost(const TermGraph& g, const GraphSeeds& gs, Polarity cls, std::uint32_t mask) {
  auto on_source = [&](std::size_t i) { return ((mask >> i) & 1u) != 0; };
  double cost = 0.0;
  for (const auto& e : g.edges()) {
    if (e.weight > 0.0) {
      if (on_source(e.u) != on_source(e.v)) cost += e.weight;
      continue;
    }
    for (const auto& [x, partner] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      const auto q = gs.label[partner];
      if (!q || !is_polar(*q)) continue;
      if ((flip(*q) == cls) != on_source(x)) cost += -e.weight;
    }
  }
  return cost;
}

void mincut_oracle(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 gen(2016);
  std::size_t problems = 0;
  for (int round = 0; round < 100; ++round) {
    const auto inst = random_instance(gen, 2 + gen() % 7, 0.35, 0.25, 2 + gen() % 3);
    const auto& g = inst.graph;
    const auto gs = resolve_seeds(g, inst.seeds);
    const auto n = g.node_count();
    for (const auto cls : {P, N}) {
      const auto cut = seed_min_cut(g, gs, cls);
      double best = std::numeric_limits<double>::infinity();
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool valid = true;
        for (std::size_t i = 0; i < n; ++i) {
          if (gs.label[i] && (((mask >> i) & 1u) != 0) != (*gs.label[i] == cls)) valid = false;
        }
        if (valid) best = std::min(best, cut_cost(g, gs, cls, mask));
      }
      std::uint32_t found = 0;
      for (std::size_t i = 0; i < n; ++i) found |= cut.source_side[i] ? 1u << i : 0u;
      c.expect(cut.cost == best, "round " + std::to_string(round) + ": cost " + fmt("%g", cut.cost) +
                                     " vs exhaustive " + fmt("%g", best));
      c.expect(cut_cost(g, gs, cls, found) == best, "round " + std::to_string(round) + ": partition cost");
      ++problems;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(secs < 10.0, "runtime < 10 s");
  c.note = std::to_string(problems) + " cuts on 100 graphs, " + fmt("%.3f s", secs);
}

// 3 ---------------------------------------------------------------------------

void label_propagation_oracle(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 gen(77);
  double worst = 0.0;
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 10 + gen() % 91;
    const auto inst = random_instance(gen, n, 3.0 / static_cast<double>(n), 0.2, 2 + gen() % 5);
    const auto& g = inst.graph;
    const auto gs = resolve_seeds(g, inst.seeds);
    auto p = DictParams::defaults(DictAlgorithm::rao_label_propagation);
    p.tolerance = 1e-13;
    p.max_iterations = 1000000;
    bool one_hot = true;
    const auto r = propagate_labels(g, gs, p, [&](std::size_t, std::span<const LabelTriple> y) {
      for (NodeId i = 0; i < n; ++i) {
        if (!gs.label[i]) continue;
        LabelTriple hot{0.0, 0.0, 0.0};
        hot[index_of(*gs.label[i])] = 1.0;
        one_hot = one_hot && y[i] == hot;
      }
    });
    c.expect(r.converged, "round " + std::to_string(round) + " converged");
    c.expect(one_hot, "round " + std::to_string(round) + ": seeds one-hot at every iteration");

    // oracle: 10,000 synchronous steps from the same start state
    std::vector<std::vector<std::pair<std::size_t, double>>> rows(n);
    for (const auto& e : g.edges()) {
      rows[e.u].emplace_back(e.v, e.weight);
      rows[e.v].emplace_back(e.u, e.weight);
    }
    std::vector<LabelTriple> y(n, LabelTriple{1.0 / 3, 1.0 / 3, 1.0 / 3});
    for (std::size_t i = 0; i < n; ++i) {
      if (gs.label[i]) {
        y[i] = {0.0, 0.0, 0.0};
        y[i][index_of(*gs.label[i])] = 1.0;
      }
    }
    auto next = y;
    for (int it = 0; it < 10000; ++it) {
      for (std::size_t i = 0; i < n; ++i) {
        double d = 0.0;
        for (const auto& [j, w] : rows[i]) d += std::abs(w);
        if (gs.label[i] || d == 0.0) {
          next[i] = y[i];
          continue;
        }
        LabelTriple acc{0.0, 0.0, 0.0};
        for (const auto& [j, w] : rows[i]) {
          const double t = std::abs(w) / d;
          acc[0] += t * (w < 0.0 ? y[j][1] : y[j][0]);
          acc[1] += t * (w < 0.0 ? y[j][0] : y[j][1]);
          acc[2] += t * y[j][2];
        }
        next[i] = acc;
      }
      y.swap(next);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < 3; ++k) worst = std::max(worst, std::abs(r.labels[i][k] - y[i][k]));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(worst <= 1e-6, "max deviation " + fmt("%g", worst) + " > 1e-6");
  c.expect(secs < 30.0, "runtime < 30 s");
  c.note = "max deviation " + fmt("%.3g", worst) + ", " + fmt("%.3f s", secs);
}

// 4 ---------------------------------------------------------------------------

void bg_oracle(Check& c) {
  std::mt19937_64 gen(4);
  double worst = 0.0;
  for (int round = 0; round < 20; ++round) {
    const auto inst = random_instance(gen, 20, 0.2, 0.2, 2 + gen() % 4);
    const auto& g = inst.graph;
    const auto gs = resolve_seeds(g, inst.seeds);
    const std::size_t n = g.node_count();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = e.weight;
    std::vector<double> v(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i] = gs.label[i] == P ? 1.0 : gs.label[i] == N ? -1.0 : 0.0;
    for (int k = 1; k <= 5; ++k) {
      std::vector<double> next(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) next[i] += a[i][j] * v[j];
        if (gs.label[i] == U) next[i] = 0.0;
        if (gs.label[i] == P) next[i] = std::abs(next[i]);
        if (gs.label[i] == N) next[i] = -std::abs(next[i]);
      }
      v = next;
      const auto got = blair_goldensohn_scores(g, gs, k);
      for (std::size_t i = 0; i < n; ++i) {
        const double rel = std::abs(got[i] - v[i]) / std::max(1.0, std::abs(v[i]));
        worst = std::max(worst, rel);
      }
    }
  }
  c.expect(worst <= 1e-9, "max relative deviation " + fmt("%g", worst));
  c.note = "20 graphs x K=1..5, max relative deviation " + fmt("%.3g", worst);
}

// 5 ---------------------------------------------------------------------------

void vel_oracle(Check& c) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::size_t compared = 0;
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 2 + gen() % 6;
    TermGraph::Builder b;
    for (std::size_t i = 0; i < n; ++i) b.add_node(testing::node_name(i));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (gen() % 2) continue;
        b.add_edge(testing::node_name(i), testing::node_name(j), gen() % 5 == 0 ? -weight(gen) : weight(gen));
      }
    }
    const auto g = b.build();
    const int T = 1 + static_cast<int>(gen() % 4);
    for (NodeId s = 0; s < n; ++s) {
      std::vector<double> oracle(n, 0.0);
      std::vector<bool> on_path(n, false);
      std::function<void(NodeId, double, int)> dfs = [&](NodeId u, double prod, int len) {
        oracle[u] = std::max(oracle[u], prod);
        if (len == T) return;
        on_path[u] = true;
        for (const auto& nb : g.neighbors(u)) {
          if (nb.weight > 0.0 && !on_path[nb.node]) dfs(nb.node, prod * nb.weight, len + 1);
        }
        on_path[u] = false;
      };
      dfs(s, 1.0, 0);
      const auto alpha = max_path_products(g, s, T);
      c.expect(alpha == oracle, "round " + std::to_string(round) + " source " + std::to_string(s));
      compared += n;
    }
  }
  c.note = "200 graphs, " + std::to_string(compared) + " alpha values equal";
}

// 6 ---------------------------------------------------------------------------

void pmi_oracle(Check& c) {
  using Big = boost::multiprecision::cpp_dec_float_50;
  const std::string path = F + "/corpus/train.tsv";
  const auto seeds = read_seed_file(F + "/seeds.tsv");
  const auto corpus = load_corpus(path, 4);
  const auto labeled = distant_label(corpus.documents, corpus.stats, seeds);
  auto params = CorpusParams::defaults(CorpusAlgorithm::kiritchenko);
  const auto cands = kiritchenko(labeled, params);

  // independent pass over the raw file
  std::ifstream in(path);
  std::vector<std::vector<std::string>> docs;
  std::string line;
  bool open = false;
  while (std::getline(in, line)) {
    if (line.rfind("#doc ", 0) == 0) {
      docs.emplace_back();
      open = true;
    } else if (line.empty()) {
      open = false;
    } else if (open) {
      docs.back().push_back(line.substr(line.find('\t') + 1));
    }
  }
  std::map<std::string, std::uint64_t> tf;
  for (const auto& d : docs) {
    for (const auto& l : d) ++tf[l];
  }
  std::set<std::string> pos_seeds, neg_seeds;
  for (const auto& e : seeds.entries()) {
    if (e.polarity == P) pos_seeds.insert(e.text);
    if (e.polarity == N) neg_seeds.insert(e.text);
  }
  std::map<std::string, std::array<std::uint64_t, 2>> counts;
  std::array<std::uint64_t, 2> class_tokens{0, 0};
  for (const auto& d : docs) {
    const bool has_pos = std::any_of(d.begin(), d.end(), [&](const auto& l) { return pos_seeds.contains(l); });
    const bool has_neg = std::any_of(d.begin(), d.end(), [&](const auto& l) { return neg_seeds.contains(l); });
    if (has_pos == has_neg) continue;
    const int k = has_pos ? 0 : 1;
    class_tokens[k] += d.size();
    for (const auto& l : d) {
      if (tf[l] >= 4) ++counts[l][k];
    }
  }
  const Big eps("0.5");
  const Big total = Big(class_tokens[0] + class_tokens[1]);
  auto pmi = [&](std::uint64_t joint, std::uint64_t term, std::uint64_t cls) {
    return log((Big(joint) + eps) * total / ((Big(term) + eps) * (Big(cls) + eps))) / log(Big(2));
  };
  double worst = 0.0;
  std::set<std::string> expected;
  for (const auto& [term, k] : counts) {
    const Big s = pmi(k[0], k[0] + k[1], class_tokens[0]) - pmi(k[1], k[0] + k[1], class_tokens[1]);
    const double got = kiritchenko_score(labeled, *corpus.stats.id(term));
    worst = std::max(worst, std::abs(got - s.convert_to<double>()));
    if (!seeds.is_literal_seed(term) && abs(s) > Big("0.1")) expected.insert(term);
    const auto it = std::find_if(cands.entries.begin(), cands.entries.end(),
                                 [&](const LexiconEntry& e) { return e.term == term; });
    if (it != cands.entries.end()) {
      c.expect(std::abs(it->score - abs(s).convert_to<double>()) <= 1e-9, "candidate score of " + term);
      c.expect(it->polarity == (s > 0 ? P : N), "candidate polarity of " + term);
    }
  }
  std::set<std::string> got_terms;
  for (const auto& e : cands.entries) got_terms.insert(e.term);
  c.expect(got_terms == expected, "candidate set");
  c.expect(worst <= 1e-9, "max deviation " + fmt("%g", worst));
  c.note = std::to_string(counts.size()) + " terms, " + std::to_string(cands.size()) +
           " candidates, max deviation " + fmt("%.3g", worst);
}

// 7 ---------------------------------------------------------------------------

void tkm_properties(Check& c) {
  std::mt19937_64 gen(31);
  std::size_t iterates = 0;
  for (int round = 0; round < 50; ++round) {
    const auto inst = random_instance(gen, 10 + gen() % 60, 0.1, 0.3, 2 + gen() % 5);
    const auto gs = resolve_seeds(inst.graph, inst.seeds);
    auto p = CorpusParams::defaults(CorpusAlgorithm::takamura);
    p.beta = 0.25 * static_cast<double>(1 + gen() % 16);
    p.max_iterations = 300;
    ising_spins(inst.graph, gs, p, [&](std::size_t, std::span<const double> x) {
      ++iterates;
      for (NodeId i = 0; i < x.size(); ++i) {
        c.expect(std::abs(x[i]) <= 1.0, "round " + std::to_string(round) + ": |x| > 1");
        if (gs.label[i]) {
          const double want = *gs.label[i] == P ? 1.0 : *gs.label[i] == N ? -1.0 : 0.0;
          c.expect(x[i] == want, "round " + std::to_string(round) + ": seed not clamped");
        }
      }
    });
    p.beta = 0.0;
    c.expect(takamura_ising(inst.graph, inst.seeds, p).empty(), "beta=0 yields candidates");
  }
  {
    const auto corpus = load_corpus(F + "/corpus/train.tsv", 4);
    const auto g = build_cooccurrence_graph(corpus.documents, corpus.stats);
    auto p = CorpusParams::defaults(CorpusAlgorithm::takamura);
    p.beta = 0.0;
    c.expect(takamura_ising(g, read_seed_file(F + "/seeds.tsv"), p).empty(), "beta=0 on the fixture corpus");
  }
  double worst = 0.0;
  for (const double beta : {0.5, 1.0, 2.0}) {
    for (const double w : {1.0, 0.5, 0.25}) {
      // a hangs off the seed only; the seed has a second neighbor of weight w
      TermGraph::Builder b;
      b.add_edge("s", "a", 1.0);
      b.add_edge("s", "z", w);
      b.add_edge("z", "y", 1.0);
      const auto g = b.build();
      auto p = CorpusParams::defaults(CorpusAlgorithm::takamura);
      p.beta = beta;
      const auto r = ising_spins(g, resolve_seeds(g, seeds_of({{"s", P}})), p);
      const double coupling = 1.0 / std::sqrt((1.0 + w) * 1.0);
      double x = 0.0;
      for (int k = 0; k < 1000; ++k) x = std::tanh(beta * coupling * 1.0);
      worst = std::max(worst, std::abs(r.spins[*g.find("a")] - x));
    }
  }
  TermGraph::Builder b;
  b.add_edge("s", "a", 1.0);
  const auto g = b.build();
  const auto r = ising_spins(g, resolve_seeds(g, seeds_of({{"s", P}})), CorpusParams{});
  worst = std::max(worst, std::abs(r.spins[*g.find("a")] - 0.7615941559557649));
  c.expect(worst <= 1e-9, "fixed point deviation " + fmt("%g", worst));
  c.note = std::to_string(iterates) + " iterates bounded, fixed point deviation " + fmt("%.3g", worst);
}

// 8 ---------------------------------------------------------------------------

void hitting_time_symmetry(Check& c) {
  TermGraph::Builder b;
  b.add_edge("p", "x", 1.0);
  b.add_edge("x", "n", 1.0);
  const auto g = b.build();
  const auto seeds = seeds_of({{"p", P}, {"n", N}});
  auto params = DictParams::defaults(DictAlgorithm::awadallah_radwan);
  params.walks_per_node = 100000;
  const auto h = hitting_times(g, resolve_seeds(g, seeds), *g.find("x"), params);
  const double diff = std::abs(h.positive - h.negative);
  const auto lex = awadallah_radwan(g, seeds, params);
  c.expect(params.threshold == 0.1, "default threshold 0.1");
  c.expect(diff < 0.15, "|h_pos - h_neg| = " + fmt("%g", diff));
  c.expect(lex.find("x") && lex.find("x")->polarity == U, "x classified neutral");
  c.note = "100000 walks, h_pos " + fmt("%.4f", h.positive) + ", h_neg " + fmt("%.4f", h.negative);
}

// 9 ---------------------------------------------------------------------------

void sign_symmetry(Check& c) {
  const auto taxonomy = load_taxonomy_dir(F + "/toy");
  const auto graph = derive_term_graph(taxonomy);
  const auto corpus = load_corpus(F + "/corpus/train.tsv", 4);
  std::size_t runs = 0;
  const DictAlgorithm dict[] = {DictAlgorithm::hu_liu, DictAlgorithm::blair_goldensohn, DictAlgorithm::rao_mincut,
                                DictAlgorithm::rao_label_propagation, DictAlgorithm::awadallah_radwan};
  for (const auto& file : seed_fixtures()) {
    const auto seeds = read_seed_file(file);
    const auto swapped = seeds.swapped();
    const auto name = file.stem().string();
    for (const auto a : dict) {
      const auto p = DictParams::defaults(a);
      const auto lhs = induce_dictionary(taxonomy, graph, seeds, p);
      const auto rhs = induce_dictionary(taxonomy, graph, swapped, p);
      const auto tag = std::string(to_string(a)) + " with " + name;
      c.expect(terms_with(lhs, P) == terms_with(rhs, N), tag);
      c.expect(terms_with(lhs, N) == terms_with(rhs, P), tag);
      c.expect(terms_with(lhs, U) == terms_with(rhs, U), tag);
      ++runs;
    }
    const auto l = distant_label(corpus.documents, corpus.stats, seeds);
    const auto r = distant_label(corpus.documents, corpus.stats, swapped);
    for (const auto a : {CorpusAlgorithm::kiritchenko, CorpusAlgorithm::severyn}) {
      const auto p = CorpusParams::defaults(a);
      const auto lhs = a == CorpusAlgorithm::kiritchenko ? kiritchenko(l, p) : severyn(corpus.documents, l, p);
      const auto rhs = a == CorpusAlgorithm::kiritchenko ? kiritchenko(r, p) : severyn(corpus.documents, r, p);
      const auto tag = std::string(to_string(a)) + " with " + name;
      c.expect(!lhs.empty(), tag + " has candidates");
      c.expect(terms_with(lhs, P) == terms_with(rhs, N), tag);
      c.expect(terms_with(lhs, N) == terms_with(rhs, P), tag);
      ++runs;
    }
  }
  std::mt19937_64 gen(9);
  for (int round = 0; round < 30; ++round) {
    const auto inst = random_instance(gen, 5 + gen() % 30, 0.15, 0.25, 2 + gen() % 4);
    for (const auto a : dict) {
      const auto p = DictParams::defaults(a);
      const auto lhs = induce_dictionary(taxonomy, inst.graph, inst.seeds, p);
      const auto rhs = induce_dictionary(taxonomy, inst.graph, inst.seeds.swapped(), p);
      c.expect(terms_with(lhs, P) == terms_with(rhs, N) && terms_with(lhs, N) == terms_with(rhs, P),
               std::string(to_string(a)) + " on random graph " + std::to_string(round));
      ++runs;
    }
  }
  c.note = std::to_string(runs) + " swapped runs";
}

// 10 --------------------------------------------------------------------------

double report_macro(const std::string& json) { return nlohmann::json::parse(json).at("macro_f").get<double>(); }

void pipeline_direction(Check& c) {
  TempDir t("direction");
  const std::string dev = F + "/dev/corpus.tsv", gold = F + "/dev/gold.tsv";
  auto macro_of = [&](const std::string& lexicon) {
    std::string out;
    if (slg_run({"eval", "--lexicon", lexicon, "--corpus", dev, "--gold", gold, "--format", "json"}, &out) != 0) {
      return -1.0;
    }
    return report_macro(out);
  };
  std::string note;
  for (const auto& file : seed_fixtures()) {
    const auto name = file.stem().string();
    const auto seeds_only = t / (name + "_seeds.tsv");
    write_lexicon_file(seeds_only, read_seed_file(file).to_lexicon());
    const double floor = macro_of(seeds_only);
    double lowest = 1.0;
    for (const auto a : kDictAlgorithms) {
      const auto out = t / (name + "_" + std::string(to_string(a)) + ".tsv");
      const int st = slg_run({"induce-dict", "--algo", std::string(to_string(a)), "--taxonomy", F + "/toy",
                              "--seeds", file.string(), "-o", out});
      c.expect(st == 0, std::string(to_string(a)) + " with " + name + " ran");
      const double f = macro_of(out);
      lowest = std::min(lowest, f);
      c.expect(f > floor, std::string(to_string(a)) + " with " + name + ": " + fmt("%.3f", f) +
                              " <= seeds-only " + fmt("%.3f", floor));
    }
    if (name == "seeds") note = "seeds-only " + fmt("%.3f", floor) + ", lowest algorithm " + fmt("%.3f", lowest);
  }
  const std::string seeds = F + "/seeds.tsv";
  const auto seeds_only = t / "seeds_seeds.tsv";
  const double floor = macro_of(seeds_only);
  for (const auto a : kCorpusAlgorithms) {
    const auto id = std::string(to_string(a));
    const auto cands = t / (id + "_cands.tsv");
    const auto tuned = t / (id + "_tuned.tsv");
    c.expect(slg_run({"induce-corpus", "--algo", id, "--corpus", F + "/corpus/train.tsv", "--seeds", seeds,
                      "-o", cands}) == 0, id + " candidates");
    c.expect(slg_run({"tune-size", "--candidates", cands, "--seeds", seeds, "--dev-corpus", dev, "--dev-gold",
                      gold, "--step", "5", "-o", tuned}) == 0, id + " tune-size");
    const double f = macro_of(tuned);
    c.expect(f >= floor, id + " tuned " + fmt("%.3f", f) + " < seeds-only " + fmt("%.3f", floor));
    note += ", " + id + " tuned " + fmt("%.3f", f);
  }
  c.note = note;
}

// 11 --------------------------------------------------------------------------

void determinism_and_replay(Check& c) {
  TempDir t("replay");
  const std::string seeds = F + "/seeds.tsv", train = F + "/corpus/train.tsv";
  const std::string dev = F + "/dev/corpus.tsv", gold = F + "/dev/gold.tsv";
  std::vector<std::pair<std::string, std::vector<std::string>>> runs;
  for (const auto a : kDictAlgorithms) {
    const auto id = std::string(to_string(a));
    runs.push_back({t / ("d_" + id + ".tsv"),
                    {"induce-dict", "--algo", id, "--taxonomy", F + "/toy", "--seeds", seeds, "-o", t / ("d_" + id + ".tsv")}});
  }
  for (const auto a : kCorpusAlgorithms) {
    const auto id = std::string(to_string(a));
    runs.push_back({t / ("c_" + id + ".tsv"),
                    {"induce-corpus", "--algo", id, "--corpus", train, "--seeds", seeds, "-o", t / ("c_" + id + ".tsv")}});
  }
  runs.push_back({t / "union.tsv", {"combine", "--op", "union", t / "d_hl.tsv", t / "d_bg.tsv", "-o", t / "union.tsv"}});
  runs.push_back({t / "inter.tsv",
                  {"combine", "--op", "intersection", t / "d_hl.tsv", t / "d_mincut.tsv", "-o", t / "inter.tsv"}});
  runs.push_back({t / "eval.json", {"eval", "--lexicon", t / "d_hl.tsv", "--corpus", dev, "--gold", gold,
                                    "--format", "json", "-o", t / "eval.json"}});
  runs.push_back({t / "eval.txt", {"eval", "--lexicon", t / "d_kh.tsv", "--corpus", dev, "--gold", gold,
                                   "-o", t / "eval.txt"}});
  runs.push_back({t / "sweep.csv", {"sweep", "--seed-dir", F + "/seedsets", "--algos", "seeds,hl,bg,rndwalk,kir",
                                    "--taxonomy", F + "/toy", "--corpus", train, "--dev-corpus", dev,
                                    "--dev-gold", gold, "-o", t / "sweep.csv"}});
  runs.push_back({t / "tuned.tsv", {"tune-size", "--candidates", t / "c_kir.tsv", "--seeds", seeds,
                                    "--dev-corpus", dev, "--dev-gold", gold, "--step", "3", "-o", t / "tuned.tsv"}});
  std::size_t checked = 0;
  for (const auto& [output, args] : runs) {
    const auto tag = args.front() + " " + fs::path(output).filename().string();
    if (slg_run(args) != 0) {
      c.expect(false, tag + " failed");
      continue;
    }
    const auto first = slurp(output);
    const auto first_prov = slurp(output + ".prov");
    c.expect(slg_run(args) == 0 && slurp(output) == first, tag + ": re-run differs");
    fs::remove(output);
    fs::rename(output + ".prov", output + ".prov.saved");
    c.expect(slg_run({"replay", output + ".prov.saved"}) == 0, tag + ": replay failed");
    c.expect(slurp(output) == first, tag + ": replayed output differs");
    c.expect(slurp(output + ".prov") == first_prov, tag + ": replayed sidecar differs");
    ++checked;
  }
  c.note = std::to_string(checked) + " command runs replayed byte-identically";
}

// 12 --------------------------------------------------------------------------

void scale_smoke_test(Check& c) {
  TempDir t("scale");
  const auto path = t / "big.tsv";
  {
    std::mt19937_64 gen(12);
    std::vector<std::string> vocab;
    for (int i = 0; i < 30000; ++i) vocab.push_back("w" + std::to_string(i));
    std::vector<double> weights;
    for (int i = 0; i < 30000; ++i) weights.push_back(1.0 / (i + 10.0));
    std::discrete_distribution<int> zipf(weights.begin(), weights.end());
    std::ofstream out(path);
    std::size_t tokens = 0;
    for (int d = 0; tokens < 1000000; ++d) {
      out << "#doc b" << d << '\n';
      const int len = 10 + static_cast<int>(gen() % 21);
      const int cls = static_cast<int>(gen() % 3);
      for (int k = 0; k < len && tokens < 1000000; ++k, ++tokens) {
        std::string w;
        if (k == 0 && cls < 2) {
          w = cls == 0 ? "gut" : "schlecht";
        } else if (cls < 2 && gen() % 10 == 0) {
          w = (cls == 0 ? "pos" : "neg") + std::to_string(gen() % 50);
        } else {
          w = vocab[zipf(gen)];
        }
        out << w << '\t' << w << '\n';
      }
      out << '\n';
    }
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto corpus = load_corpus(path, 4);
  CooccurrenceOptions opt;
  opt.window = 5;
  const auto graph = build_cooccurrence_graph(corpus.documents, corpus.stats, opt);
  const auto labeled = distant_label(corpus.documents, corpus.stats, seeds_of({{"gut", P}, {"schlecht", N}}));
  const auto cands = kiritchenko(labeled, CorpusParams::defaults(CorpusAlgorithm::kiritchenko));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(corpus.stats.token_count() == 1000000, "token count");
  c.expect(graph.edge_count() > 0, "graph has edges");
  c.expect(!cands.empty(), "KIR produced candidates");
  c.expect(secs < 60.0, "runtime " + fmt("%.1f s", secs));
  std::size_t right = 0;
  for (const auto& e : cands.entries) {
    right += (e.term.rfind("pos", 0) == 0 && e.polarity == P) || (e.term.rfind("neg", 0) == 0 && e.polarity == N);
  }
  c.expect(right >= 90, "planted class words recovered: " + std::to_string(right));
  c.note = std::to_string(corpus.stats.vocabulary().size()) + " terms, " + std::to_string(graph.edge_count()) +
           " edges, " + std::to_string(cands.size()) + " candidates, " + fmt("%.2f s", secs);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Check&)>> criteria{
      {"eval metric exactness on the 10-token fixture", eval_exactness},
      {"min-cut cost equals exhaustive enumeration", mincut_oracle},
      {"label propagation matches the 10,000-step oracle", label_propagation_oracle},
      {"BG scores equal dense matrix powers", bg_oracle},
      {"VEL alpha equals brute-force path enumeration", vel_oracle},
      {"KIR scores equal arbitrary-precision PMI", pmi_oracle},
      {"TKM spin bounds, zero beta, tanh fixed point", tkm_properties},
      {"AR hitting-time symmetry", hitting_time_symmetry},
      {"sign symmetry under seed swap", sign_symmetry},
      {"pipeline direction over seeds-only", pipeline_direction},
      {"determinism and provenance replay", determinism_and_replay},
      {"1M-token KIR scale run", scale_smoke_test},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failed == 0;
    failed += !ok;
    std::printf("%s criterion %zu: %s (%s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                c.note.c_str());
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
