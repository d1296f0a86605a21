#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "slg/cli/cli.hpp"
#include "slg/core/error.hpp"
#include "slg/core/lexicon_io.hpp"
#include "slg/core/lexicon_ops.hpp"
#include "slg/core/term.hpp"
#include "slg/core/text_io.hpp"
#include "slg/corpus/cooccurrence.hpp"
#include "slg/corpus/distant_label.hpp"
#include "slg/corpus_induction/corpus_induction.hpp"
#include "slg/dict/dict_induction.hpp"
#include "slg/eval/evaluate.hpp"
#include "slg/taxonomy/lexical_graph.hpp"

namespace slg::cli {

namespace fs = std::filesystem;

namespace {

std::string absolute_path(const std::string& p) { return fs::absolute(p).lexically_normal().string(); }

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
  return out;
}

std::string dict_ids() {
  std::vector<std::string> ids;
  for (const auto a : kDictAlgorithms) ids.emplace_back(to_string(a));
  return join(ids);
}

std::string corpus_ids() {
  std::vector<std::string> ids;
  for (const auto a : kCorpusAlgorithms) ids.emplace_back(to_string(a));
  return join(ids);
}

std::string lexicon_text(const Lexicon& lex) {
  std::ostringstream out;
  write_lexicon(out, lex);
  return out.str();
}

std::uint64_t positive_integer(const RunConfig& c, std::string_view key, std::uint64_t fallback) {
  const auto v = c.integer(key);
  if (!v) return fallback;
  if (*v < 1) throw ValidationError(std::string(key) + " must be at least 1");
  return static_cast<std::uint64_t>(*v);
}

// ---- parameter groups ----

const std::vector<KeySpec> kDictParamKeys{
    {"max_iterations", "iteration or epoch count"},
    {"threshold", "neutral threshold"},
    {"tolerance", "convergence tolerance"},
    {"rng_seed", "random seed"},
    {"walks_per_node", "random walks per node (rndwalk)"},
    {"max_walk_length", "walk length cap (rndwalk)"},
    {"expansion_rounds", "seed expansion rounds (es)"},
    {"priors", "class priors positive,negative,neutral (kh)"},
};

const std::vector<KeySpec> kPolicyKeys{
    {"weight_comembership", "edge weight of synset co-members"},
    {"weight_similar", "edge weight of similar relations"},
    {"weight_hypernym", "edge weight of hypernym relations"},
    {"weight_hyponym", "edge weight of hyponym relations"},
    {"weight_related", "edge weight of related relations"},
    {"weight_antonym", "edge weight of antonym relations"},
};

const std::vector<KeySpec> kCooccurrenceKeys{
    {"min_freq", "minimum lemma frequency"},
    {"window", "co-occurrence window"},
    {"weighting", "pmi or count"},
    {"pair_source", "window or conjunction"},
};

const std::vector<KeySpec> kCorpusParamKeys{
    {"beta", "inverse temperature (tkm)"},
    {"max_iterations", "iteration or epoch count"},
    {"tolerance", "convergence tolerance"},
    {"path_length", "path length bound (vel)"},
    {"gamma", "negative mass weight (vel)"},
    {"top_k", "candidates per class, 0 keeps all"},
    {"neutral_threshold", "neutral threshold"},
    {"rng_seed", "random seed"},
    {"regularization", "L2 strength (sev)"},
};

std::vector<KeySpec> concat(std::initializer_list<std::vector<KeySpec>> parts) {
  std::vector<KeySpec> out;
  for (const auto& p : parts) {
    for (const auto& k : p) {
      if (std::none_of(out.begin(), out.end(), [&](const KeySpec& o) { return o.key == k.key; })) {
        out.push_back(k);
      }
    }
  }
  return out;
}

DictParams dict_params(const RunConfig& c, DictAlgorithm a, RunConfig& eff) {
  auto p = DictParams::defaults(a);
  if (auto v = c.integer("max_iterations")) p.max_iterations = static_cast<int>(*v);
  if (auto v = c.real("threshold")) p.threshold = *v;
  if (auto v = c.real("tolerance")) p.tolerance = *v;
  if (auto v = c.integer("rng_seed")) p.rng_seed = static_cast<std::uint64_t>(*v);
  if (auto v = c.integer("walks_per_node")) p.walks_per_node = static_cast<int>(*v);
  if (auto v = c.integer("max_walk_length")) p.max_walk_length = static_cast<int>(*v);
  if (auto v = c.integer("expansion_rounds")) p.expansion_rounds = static_cast<int>(*v);
  if (auto v = c.list("priors")) {
    if (v->size() != 3) throw ValidationError("priors needs three comma-separated values");
    std::array<double, 3> pr{};
    for (std::size_t i = 0; i < 3; ++i) {
      const auto d = parse_double((*v)[i]);
      if (!d) throw ValidationError("priors: bad number '" + (*v)[i] + "'");
      pr[i] = *d;
    }
    p.priors = pr;
  }
  p.validate();
  eff.set("max_iterations", std::to_string(p.max_iterations));
  eff.set("threshold", format_real(p.threshold));
  eff.set("tolerance", format_real(p.tolerance));
  eff.set("rng_seed", std::to_string(p.rng_seed));
  eff.set("walks_per_node", std::to_string(p.walks_per_node));
  eff.set("max_walk_length", std::to_string(p.max_walk_length));
  eff.set("expansion_rounds", std::to_string(p.expansion_rounds));
  if (p.priors) {
    eff.set("priors", format_real((*p.priors)[0]) + "," + format_real((*p.priors)[1]) + "," +
                          format_real((*p.priors)[2]));
  }
  return p;
}

EdgePolicy edge_policy(const RunConfig& c, RunConfig& eff) {
  EdgePolicy p;
  const std::pair<const char*, double*> fields[] = {
      {"weight_comembership", &p.comembership}, {"weight_similar", &p.similar},
      {"weight_hypernym", &p.hypernym},         {"weight_hyponym", &p.hyponym},
      {"weight_related", &p.related},           {"weight_antonym", &p.antonym}};
  for (const auto& [key, field] : fields) {
    if (auto v = c.real(key)) *field = *v;
    eff.set(key, format_real(*field));
  }
  p.validate();
  return p;
}

CooccurrenceOptions cooccurrence_options(const RunConfig& c, RunConfig& eff) {
  CooccurrenceOptions o;
  o.window = positive_integer(c, "window", o.window);
  if (auto v = c.text("weighting")) {
    if (*v == "pmi") {
      o.weighting = EdgeWeighting::pmi;
    } else if (*v == "count") {
      o.weighting = EdgeWeighting::count;
    } else {
      throw ValidationError("weighting must be pmi or count");
    }
  }
  if (auto v = c.text("pair_source")) {
    if (*v == "window") {
      o.source = PairSource::window;
    } else if (*v == "conjunction") {
      o.source = PairSource::conjunction;
    } else {
      throw ValidationError("pair_source must be window or conjunction");
    }
  }
  o.validate();
  eff.set("window", std::to_string(o.window));
  eff.set("weighting", o.weighting == EdgeWeighting::pmi ? "pmi" : "count");
  eff.set("pair_source", o.source == PairSource::window ? "window" : "conjunction");
  return o;
}

std::uint64_t min_freq(const RunConfig& c, RunConfig& eff) {
  const auto m = positive_integer(c, "min_freq", 4);
  eff.set("min_freq", std::to_string(m));
  return m;
}

CorpusParams corpus_params(const RunConfig& c, CorpusAlgorithm a, RunConfig& eff) {
  auto p = CorpusParams::defaults(a);
  if (auto v = c.real("beta")) p.beta = *v;
  if (auto v = c.integer("max_iterations")) p.max_iterations = static_cast<int>(*v);
  if (auto v = c.real("tolerance")) p.tolerance = *v;
  if (auto v = c.integer("path_length")) p.path_length = static_cast<int>(*v);
  if (auto v = c.real("gamma")) p.gamma = *v;
  if (auto v = c.integer("top_k")) {
    if (*v < 0) throw ValidationError("top_k must be >= 0");
    p.top_k = static_cast<std::size_t>(*v);
  }
  if (auto v = c.real("neutral_threshold")) p.neutral_threshold = *v;
  if (auto v = c.integer("rng_seed")) p.rng_seed = static_cast<std::uint64_t>(*v);
  if (auto v = c.real("regularization")) p.regularization = *v;
  p.validate();
  eff.set("beta", format_real(p.beta));
  eff.set("max_iterations", std::to_string(p.max_iterations));
  eff.set("tolerance", format_real(p.tolerance));
  eff.set("path_length", std::to_string(p.path_length));
  if (p.gamma) eff.set("gamma", format_real(*p.gamma));
  eff.set("top_k", std::to_string(p.top_k));
  eff.set("neutral_threshold", format_real(p.neutral_threshold));
  eff.set("rng_seed", std::to_string(p.rng_seed));
  eff.set("regularization", format_real(p.regularization));
  return p;
}

DictAlgorithm dict_algorithm(const std::string& s) {
  const auto a = parse_dict_algorithm(s);
  if (!a) throw ValidationError("unknown algorithm '" + s + "' (--algo expects one of " + dict_ids() + ")");
  return *a;
}

CorpusAlgorithm corpus_algorithm(const std::string& s) {
  const auto a = parse_corpus_algorithm(s);
  if (!a) throw ValidationError("unknown algorithm '" + s + "' (--algo expects one of " + corpus_ids() + ")");
  return *a;
}

std::string path_setting(const RunConfig& c, std::string_view key, RunConfig& eff) {
  const auto p = absolute_path(c.required(key));
  eff.set(std::string(key), p);
  return p;
}

bool bool_setting(const RunConfig& c, std::string_view key, RunConfig& eff) {
  const bool b = c.boolean(key).value_or(false);
  eff.set(std::string(key), b ? "true" : "false");
  return b;
}

bool uses_graph(CorpusAlgorithm a) {
  return a == CorpusAlgorithm::takamura || a == CorpusAlgorithm::velikovich;
}

/// Corpus-based candidates for one seed set.
RankedCandidates corpus_candidates(CorpusAlgorithm a, const Corpus& corpus, const TermGraph* graph,
                                   const SeedSet& seeds, const CorpusParams& params,
                                   Diagnostics* diag) {
  switch (a) {
    case CorpusAlgorithm::takamura:
      return takamura_ising(*graph, seeds, params, diag);
    case CorpusAlgorithm::velikovich:
      return velikovich(*graph, seeds, params, diag);
    case CorpusAlgorithm::kiritchenko:
      return kiritchenko(distant_label(corpus.documents, corpus.stats, seeds, diag), params, diag);
    case CorpusAlgorithm::severyn:
      return severyn(corpus.documents, distant_label(corpus.documents, corpus.stats, seeds, diag),
                     params, diag);
  }
  throw ValidationError("unknown corpus algorithm");
}

// ---- commands ----

CommandResult induce_dict(const RunConfig& c) {
  CommandResult r;
  auto& eff = r.effective;
  const auto a = dict_algorithm(c.required("algo"));
  eff.set("algo", std::string(to_string(a)));
  const auto tax_dir = path_setting(c, "taxonomy", eff);
  const auto seed_path = path_setting(c, "seeds", eff);
  const auto output = path_setting(c, "output", eff);
  const auto policy = edge_policy(c, eff);
  const auto params = dict_params(c, a, eff);

  const auto taxonomy = load_taxonomy_dir(tax_dir);
  const auto graph = derive_term_graph(taxonomy, policy);
  const auto seeds = read_seed_file(seed_path);
  auto& d = r.diagnostics;
  d.count("graph_nodes", static_cast<long long>(graph.node_count()));
  d.count("graph_edges", static_cast<long long>(graph.edge_count()));
  const auto lex = induce_dictionary(taxonomy, graph, seeds, params, &d);
  d.count("entries", static_cast<long long>(lex.size()));
  d.count("positive", static_cast<long long>(lex.count(Polarity::positive)));
  d.count("negative", static_cast<long long>(lex.count(Polarity::negative)));
  d.count("neutral", static_cast<long long>(lex.count(Polarity::neutral)));
  r.files.emplace_back(output, lexicon_text(lex));
  return r;
}

CommandResult induce_corpus(const RunConfig& c) {
  CommandResult r;
  auto& eff = r.effective;
  auto& d = r.diagnostics;
  const auto a = corpus_algorithm(c.required("algo"));
  eff.set("algo", std::string(to_string(a)));
  const auto corpus_path = path_setting(c, "corpus", eff);
  const auto seed_path = path_setting(c, "seeds", eff);
  const auto output = path_setting(c, "output", eff);
  const auto freq = min_freq(c, eff);
  const auto params = corpus_params(c, a, eff);

  std::optional<CooccurrenceOptions> cooc;
  std::optional<EdgePolicy> policy;
  std::string tax_dir;
  if (uses_graph(a)) {
    cooc = cooccurrence_options(c, eff);
    if (c.has("taxonomy")) {
      tax_dir = path_setting(c, "taxonomy", eff);
      policy = edge_policy(c, eff);
    }
  } else if (c.has("taxonomy") || c.has("window") || c.has("weighting") || c.has("pair_source")) {
    throw ValidationError("taxonomy and co-occurrence settings apply to tkm and vel only");
  }

  const auto corpus = load_corpus(corpus_path, freq);
  const auto seeds = read_seed_file(seed_path);
  d.count("documents", static_cast<long long>(corpus.stats.document_count()));
  d.count("tokens", static_cast<long long>(corpus.stats.token_count()));
  d.count("vocabulary", static_cast<long long>(corpus.stats.vocabulary().size()));
  std::optional<TermGraph> graph;
  if (cooc) {
    graph = build_cooccurrence_graph(corpus.documents, corpus.stats, *cooc);
    if (policy) graph = merge_graphs(*graph, derive_term_graph(load_taxonomy_dir(tax_dir), *policy));
    d.count("graph_nodes", static_cast<long long>(graph->node_count()));
    d.count("graph_edges", static_cast<long long>(graph->edge_count()));
  }
  const auto cands = corpus_candidates(a, corpus, graph ? &*graph : nullptr, seeds, params, &d);
  d.count("candidates", static_cast<long long>(cands.size()));
  d.count("positive", static_cast<long long>(cands.count(Polarity::positive)));
  d.count("negative", static_cast<long long>(cands.count(Polarity::negative)));
  r.files.emplace_back(output, lexicon_text(cands.to_lexicon()));
  return r;
}

CommandResult combine(const RunConfig& c) {
  CommandResult r;
  auto& eff = r.effective;
  const auto op = c.required("op");
  if (op != "union" && op != "intersection") throw ValidationError("op must be union or intersection");
  eff.set("op", op);
  auto inputs = c.list("inputs").value_or(std::vector<std::string>{});
  if (inputs.size() < 2) throw ValidationError("combine needs at least two input lexicons");
  for (auto& p : inputs) p = absolute_path(p);
  eff.set("inputs", join(inputs));
  const auto output = path_setting(c, "output", eff);

  std::vector<Lexicon> lexicons;
  for (const auto& p : inputs) lexicons.push_back(read_lexicon_file(p));
  const auto out = op == "union" ? lexicon_union(lexicons) : lexicon_intersection(lexicons);
  r.diagnostics.count("entries", static_cast<long long>(out.size()));
  r.files.emplace_back(output, lexicon_text(out));
  return r;
}

CommandResult eval(const RunConfig& c) {
  CommandResult r;
  auto& eff = r.effective;
  const auto lex_path = path_setting(c, "lexicon", eff);
  const auto corpus_path = path_setting(c, "corpus", eff);
  const auto gold_path = path_setting(c, "gold", eff);
  const auto format_name = c.text("format").value_or("text");
  const auto format = parse_report_format(format_name);
  if (!format) throw ValidationError("format must be text, json or csv-row");
  eff.set("format", format_name);
  const bool drop = bool_setting(c, "drop_nonalphabetic", eff);
  const auto label = c.text("label").value_or(fs::path(lex_path).stem().string());
  eff.set("label", label);
  std::optional<std::string> output;
  if (c.has("output")) output = path_setting(c, "output", eff);

  auto lex = read_lexicon_file(lex_path);
  const auto corpus = load_corpus(corpus_path, 1);
  auto gold = read_gold_file(gold_path);
  validate_gold(gold, corpus.documents, gold_path);
  if (drop) {
    gold = drop_nonalphabetic(gold, corpus.documents);
    lex = drop_nonalphabetic(lex);
  }
  const auto report = evaluate_lexicon(lex, corpus.documents, gold);
  const auto text = format_report(report, *format, label);
  if (*format == ReportFormat::text || !output) r.standard_output = text;
  if (output) r.files.emplace_back(*output, text);
  r.diagnostics.count("gold_spans", static_cast<long long>(gold.size()));
  r.diagnostics.count("tokens", static_cast<long long>(report.tokens));
  return r;
}

CommandResult tune_size(const RunConfig& c) {
  CommandResult r;
  auto& eff = r.effective;
  const auto cand_path = path_setting(c, "candidates", eff);
  const auto seed_path = path_setting(c, "seeds", eff);
  const auto dev_corpus = path_setting(c, "dev_corpus", eff);
  const auto dev_gold = path_setting(c, "dev_gold", eff);
  const auto output = path_setting(c, "output", eff);
  const auto step = positive_integer(c, "step", 1);
  eff.set("step", std::to_string(step));
  const bool drop = bool_setting(c, "drop_nonalphabetic", eff);

  auto cands = read_ranked_entries_file(cand_path);
  const auto seeds = read_seed_file(seed_path);
  const auto corpus = load_corpus(dev_corpus, 1);
  auto gold = read_gold_file(dev_gold);
  validate_gold(gold, corpus.documents, dev_gold);
  if (drop) {
    gold = drop_nonalphabetic(gold, corpus.documents);
    std::erase_if(cands, [](const LexiconEntry& e) { return !has_alphabetic(e.term); });
  }
  std::erase_if(cands, [&](const LexiconEntry& e) { return seeds.is_literal_seed(e.term); });
  const auto t = tune_lexicon_size(cands, seeds, corpus.documents, gold, step);
  auto& d = r.diagnostics;
  d.count("candidates", static_cast<long long>(cands.size()));
  d.count("kept", static_cast<long long>(t.kept));
  d.count("seeds_macro_f", format_real(t.seeds_macro_f));
  d.count("macro_f", format_real(t.macro_f));
  d.count("blocks_evaluated", static_cast<long long>(t.curve.size()));
  auto lex = t.lexicon;
  lex.set_provenance("tuned");
  r.files.emplace_back(output, lexicon_text(lex));
  return r;
}

struct SweepAlgorithm {
  std::string id;
  std::optional<DictAlgorithm> dict;
  std::optional<CorpusAlgorithm> corpus;
};

CommandResult sweep(const RunConfig& c) {
  CommandResult r;
  auto& eff = r.effective;
  auto& d = r.diagnostics;
  const auto seed_dir = path_setting(c, "seed_dir", eff);
  const auto dev_corpus_path = path_setting(c, "dev_corpus", eff);
  const auto dev_gold_path = path_setting(c, "dev_gold", eff);
  const auto output = path_setting(c, "output", eff);
  const bool timing = bool_setting(c, "record_timing", eff);
  const bool drop = bool_setting(c, "drop_nonalphabetic", eff);

  std::vector<SweepAlgorithm> algos;
  bool need_taxonomy = false, need_corpus = false, need_graph = false;
  for (const auto& id : c.list("algos").value_or(std::vector<std::string>{})) {
    SweepAlgorithm s{id, parse_dict_algorithm(id), parse_corpus_algorithm(id)};
    if (s.dict) s.id = to_string(*s.dict);
    if (!s.dict && !s.corpus && id != "seeds") {
      throw ValidationError("unknown algorithm '" + id + "' in algos (expected seeds, " + dict_ids() +
                            " or " + corpus_ids() + ")");
    }
    need_taxonomy |= s.dict.has_value();
    need_corpus |= s.corpus.has_value();
    need_graph |= s.corpus && uses_graph(*s.corpus);
    algos.push_back(std::move(s));
  }
  if (algos.empty()) throw ValidationError("algos lists no algorithm");
  std::vector<std::string> ids;
  for (const auto& a : algos) ids.push_back(a.id);
  eff.set("algos", join(ids));

  std::optional<std::uint64_t> seed;
  if (auto v = c.integer("rng_seed")) {
    seed = static_cast<std::uint64_t>(*v);
    eff.set("rng_seed", std::to_string(*seed));
  }
  std::string tax_dir, corpus_path;
  std::optional<EdgePolicy> policy;
  std::optional<CooccurrenceOptions> cooc;
  std::uint64_t freq = 4;
  const bool merge_taxonomy = bool_setting(c, "merge_taxonomy", eff);
  if (need_taxonomy || (need_graph && merge_taxonomy)) {
    tax_dir = path_setting(c, "taxonomy", eff);
    policy = edge_policy(c, eff);
  }
  if (need_corpus) {
    corpus_path = path_setting(c, "corpus", eff);
    freq = min_freq(c, eff);
    if (need_graph) cooc = cooccurrence_options(c, eff);
  }

  std::vector<fs::path> seed_files;
  if (!fs::is_directory(seed_dir)) throw ValidationError("seed_dir '" + seed_dir + "' is not a directory");
  for (const auto& entry : fs::directory_iterator(seed_dir)) {
    if (entry.is_regular_file() && entry.path().filename().string().front() != '.') {
      seed_files.push_back(entry.path());
    }
  }
  std::sort(seed_files.begin(), seed_files.end());
  if (seed_files.empty()) throw ValidationError("seed_dir '" + seed_dir + "' contains no seed file");

  const auto dev = load_corpus(dev_corpus_path, 1);
  auto gold = read_gold_file(dev_gold_path);
  validate_gold(gold, dev.documents, dev_gold_path);
  if (drop) gold = drop_nonalphabetic(gold, dev.documents);

  std::optional<LexicalGraph> taxonomy;
  std::optional<TermGraph> tax_graph;
  if (policy) {
    taxonomy = load_taxonomy_dir(tax_dir);
    tax_graph = derive_term_graph(*taxonomy, *policy);
  }
  std::optional<Corpus> corpus;
  std::optional<TermGraph> corpus_graph;
  if (need_corpus) {
    corpus = load_corpus(corpus_path, freq);
    if (cooc) {
      corpus_graph = build_cooccurrence_graph(corpus->documents, corpus->stats, *cooc);
      if (merge_taxonomy) corpus_graph = merge_graphs(*corpus_graph, *tax_graph);
    }
  }

  std::string csv = "algorithm,seed_set,macro_f,micro_f,lexicon_size,runtime_s\n";
  std::size_t ok = 0, failed = 0;
  char buf[128];
  for (const auto& algo : algos) {
    for (const auto& file : seed_files) {
      const auto name = file.stem().string();
      try {
        const auto t0 = std::chrono::steady_clock::now();
        const auto seeds = read_seed_file(file);
        Lexicon lex;
        if (algo.dict) {
          auto p = DictParams::defaults(*algo.dict);
          if (seed) p.rng_seed = *seed;
          lex = induce_dictionary(*taxonomy, *tax_graph, seeds, p);
        } else if (algo.corpus) {
          auto p = CorpusParams::defaults(*algo.corpus);
          if (seed) p.rng_seed = *seed;
          const auto cands = corpus_candidates(*algo.corpus, *corpus, corpus_graph ? &*corpus_graph : nullptr,
                                               seeds, p, nullptr);
          lex = seeds.to_lexicon();
          for (const auto& e : cands.entries) lex.insert(e);
        } else {
          lex = seeds.to_lexicon();
        }
        if (drop) lex = drop_nonalphabetic(lex);
        const auto report = evaluate_lexicon(lex, dev.documents, gold);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string runtime = "NA";
        if (timing) {
          std::snprintf(buf, sizeof buf, "%.3f", secs);
          runtime = buf;
        }
        std::snprintf(buf, sizeof buf, "%.6f,%.6f,%zu,", report.macro_f, report.micro_f, lex.size());
        csv += algo.id + "," + name + "," + buf + runtime + "\n";
        ++ok;
      } catch (const Error& e) {
        csv += algo.id + "," + name + ",error,error,error,error\n";
        d.warn(algo.id + " with " + name + ": " + e.what());
        ++failed;
      }
    }
  }
  d.count("cells", static_cast<long long>(ok + failed));
  d.count("failed_cells", static_cast<long long>(failed));
  r.files.emplace_back(output, csv);
  if (ok == 0) r.status = 1;
  return r;
}

const KeySpec kOutputKey{"output", "output file", true};

}  // namespace

const std::vector<CommandSpec>& command_specs() {
  static const std::vector<CommandSpec> specs{
      {"induce-dict", "induce a lexicon from a taxonomy",
       concat({{{"algo", "algorithm: hl, bg, kh, es, mincut, lblprop, rndwalk", true},
                {"taxonomy", "directory with synsets.tsv and relations.tsv", true},
                {"seeds", "seed file", true},
                kOutputKey},
               kDictParamKeys,
               kPolicyKeys}),
       "", &induce_dict},
      {"induce-corpus", "rank candidate terms from a corpus",
       concat({{{"algo", "algorithm: tkm, vel, kir, sev", true},
                {"corpus", "vertical corpus file", true},
                {"seeds", "seed file", true},
                kOutputKey,
                {"taxonomy", "taxonomy merged into the co-occurrence graph (tkm, vel)"}},
               kCooccurrenceKeys,
               kCorpusParamKeys,
               kPolicyKeys}),
       "", &induce_corpus},
      {"combine", "union or intersection of lexicons",
       {{"op", "union or intersection", true}, {"inputs", "input lexicons", true}, kOutputKey},
       "inputs", &combine},
      {"eval", "evaluate a lexicon against gold spans",
       {{"lexicon", "lexicon file", true},
        {"corpus", "vertical corpus file", true},
        {"gold", "gold span file", true},
        {"format", "text, json or csv-row"},
        {"output", "report file"},
        {"label", "row label of the text report"},
        {"drop_nonalphabetic", "ignore entries and gold spans without letters", false, true}},
       "", &eval},
      {"sweep", "evaluate algorithms over a directory of seed sets",
       concat({{{"seed_dir", "directory of seed files", true},
                {"algos", "comma-separated algorithm ids, or seeds", true},
                {"taxonomy", "taxonomy directory for dictionary algorithms"},
                {"corpus", "training corpus for corpus algorithms"},
                {"dev_corpus", "development corpus", true},
                {"dev_gold", "development gold spans", true},
                kOutputKey,
                {"rng_seed", "random seed"},
                {"record_timing", "fill the runtime column", false, true},
                {"merge_taxonomy", "merge the taxonomy into the co-occurrence graph", false, true},
                {"drop_nonalphabetic", "ignore entries and gold spans without letters", false, true}},
               kCooccurrenceKeys,
               kPolicyKeys}),
       "", &sweep},
      {"tune-size", "choose how many ranked candidates to keep",
       {{"candidates", "ranked candidate file", true},
        {"seeds", "seed file", true},
        {"dev_corpus", "development corpus", true},
        {"dev_gold", "development gold spans", true},
        {"step", "candidates added per block"},
        kOutputKey,
        {"drop_nonalphabetic", "ignore entries and gold spans without letters", false, true}},
       "", &tune_size},
  };
  return specs;
}

const CommandSpec* find_command(std::string_view name) {
  for (const auto& s : command_specs()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

}  // namespace slg::cli
