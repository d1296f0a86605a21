#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "slg/cli/cli.hpp"
#include "slg/core/lexicon_io.hpp"
#include "slg/corpus/distant_label.hpp"
#include "slg/corpus_induction/corpus_induction.hpp"
#include "slg/eval/evaluate.hpp"
#include "slg/taxonomy/lexical_graph.hpp"

using namespace slg;
namespace fs = std::filesystem;

namespace {

const std::string F = SLG_FIXTURE_DIR;

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run slg_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE_MESSAGE(in, p.string());
  return {std::istreambuf_iterator<char>(in), {}};
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int n = 0;
    path = fs::temp_directory_path() / ("slg_cli_" + std::to_string(::getpid()) + "_" + std::to_string(n++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

/// Runs the command from its sidecar and compares the output bytes.
void check_replay(const std::string& output) {
  const auto first = slurp(output);
  fs::remove(output);
  const auto r = slg_run({"replay", output + ".prov"});
  CHECK_MESSAGE(r.status == 0, r.err);
  CHECK(slurp(output) == first);
}

}  // namespace

TEST_CASE("induce-dict writes a lexicon with the graph seeds") {
  TempDir t;
  const auto out = t / "out.tsv";
  auto r = slg_run({"induce-dict", "--algo", "hl", "--taxonomy", F + "/toy", "--seeds", F + "/seeds.tsv", "-o", out});
  REQUIRE_MESSAGE(r.status == 0, r.err);
  const auto lex = read_lexicon_file(out);
  const auto seeds = read_seed_file(F + "/seeds.tsv");
  const auto tax = load_taxonomy_dir(F + "/toy");
  for (const auto& e : seeds.entries()) {
    if (!is_polar(e.polarity) || !tax.lemma_index().contains(e.text)) continue;
    REQUIRE_MESSAGE(lex.find(e.text), e.text);
    CHECK(lex.find(e.text)->polarity == e.polarity);
  }
  const auto prov = slurp(out + ".prov");
  CHECK(prov.find("command=induce-dict\n") != std::string::npos);
  CHECK(prov.find("algo=hl\n") != std::string::npos);
  CHECK(prov.find("max_iterations=5\n") != std::string::npos);

  const auto first = slurp(out);
  r = slg_run({"induce-dict", "--algo", "hl", "--taxonomy", F + "/toy", "--seeds", F + "/seeds.tsv", "-o", out});
  CHECK(slurp(out) == first);
  check_replay(out);

  r = slg_run({"induce-dict", "--algo", "xx", "--taxonomy", F + "/toy", "--seeds", F + "/seeds.tsv", "-o", out});
  CHECK(r.status == 2);
  CHECK(r.err.find("--algo") != std::string::npos);
}

TEST_CASE("every dictionary algorithm replays identically") {
  TempDir t;
  for (const auto* algo : {"hl", "bg", "kh", "es", "mincut", "lblprop", "rndwalk"}) {
    const auto out = t / (std::string(algo) + ".tsv");
    const auto r = slg_run({"induce-dict", "--algo", algo, "--taxonomy", F + "/toy", "--seeds",
                            F + "/seeds.tsv", "-o", out});
    REQUIRE_MESSAGE(r.status == 0, r.err);
    check_replay(out);
  }
}

TEST_CASE("usage and validation errors exit with 2") {
  TempDir t;
  CHECK(slg_run({}).status == 2);
  CHECK(slg_run({"frobnicate"}).status == 2);
  CHECK(slg_run({"induce-dict", "--bogus", "1"}).status == 2);
  CHECK(slg_run({"induce-dict", "--algo", "hl", "--taxonomy", F + "/toy", "-o", t / "x.tsv"}).status == 2);
  CHECK(slg_run({"induce-dict", "--algo", "hl", "--taxonomy", F + "/toy", "--seeds", F + "/seeds.tsv",
                 "--max-iterations", "zero", "-o", t / "x.tsv"}).status == 2);
  CHECK(slg_run({"induce-dict", "--algo", "hl", "--taxonomy", t / "missing", "--seeds", F + "/seeds.tsv",
                 "-o", t / "x.tsv"}).status == 1);
  CHECK(slg_run({"--help"}).status == 0);
}

TEST_CASE("configuration files") {
  TempDir t;
  const auto cfg = t / "run.cfg";
  spit(cfg, "# settings\nalgo = bg\ntaxonomy=" + F + "/toy\nseeds=" + F + "/seeds.tsv\noutput=" + (t / "c.tsv") +
                "\nmax_iterations=3\n");
  auto r = slg_run({"induce-dict", "--config", cfg, "--max-iterations", "2"});
  REQUIRE_MESSAGE(r.status == 0, r.err);
  const auto prov = slurp(t / "c.tsv.prov");
  CHECK(prov.find("algo=bg\n") != std::string::npos);
  CHECK(prov.find("max_iterations=2\n") != std::string::npos);

  spit(cfg, "algo=bg\ncolour=blue\n");
  r = slg_run({"induce-dict", "--config", cfg});
  CHECK(r.status == 2);
  CHECK(r.err.find("colour") != std::string::npos);
  spit(cfg, "algo\n");
  CHECK(slg_run({"induce-dict", "--config", cfg}).status == 2);
  spit(cfg, "command=eval\n");
  CHECK(slg_run({"induce-dict", "--config", cfg}).status == 2);
}

TEST_CASE("induce-corpus") {
  TempDir t;
  const std::string corpus = F + "/corpus/train.tsv";
  const std::string seeds = F + "/seeds.tsv";
  SUBCASE("kir scores follow the class PMI") {
    const auto out = t / "kir.tsv";
    const auto r = slg_run({"induce-corpus", "--algo", "kir", "--corpus", corpus, "--seeds", seeds, "-o", out});
    REQUIRE_MESSAGE(r.status == 0, r.err);
    const auto c = load_corpus(corpus, 4);
    const auto labeled = distant_label(c.documents, c.stats, read_seed_file(seeds));
    const auto entries = read_ranked_entries_file(out);
    REQUIRE(!entries.empty());
    for (const auto& e : entries) {
      const double s = kiritchenko_score(labeled, *c.stats.id(e.term));
      CHECK(format_score(std::abs(s)) == format_score(e.score));
      CHECK(e.polarity == (s > 0 ? Polarity::positive : Polarity::negative));
    }
    check_replay(out);
  }
  SUBCASE("sev is deterministic") {
    const auto a = t / "a.tsv";
    const auto b = t / "b.tsv";
    for (const auto& out : {a, b}) {
      const auto r = slg_run({"induce-corpus", "--algo", "sev", "--corpus", corpus, "--seeds", seeds,
                              "--rng-seed", "7", "--top-k", "20", "-o", out});
      REQUIRE_MESSAGE(r.status == 0, r.err);
    }
    CHECK(slurp(a) == slurp(b));
    CHECK(!slurp(a).empty());
    check_replay(a);
  }
  SUBCASE("tkm at zero beta emits nothing") {
    const auto out = t / "tkm.tsv";
    const auto r = slg_run({"induce-corpus", "--algo", "tkm", "--beta", "0", "--corpus", corpus, "--seeds",
                            seeds, "-o", out});
    REQUIRE_MESSAGE(r.status == 0, r.err);
    CHECK(slurp(out).empty());
  }
  SUBCASE("graph algorithms with the taxonomy replay identically") {
    for (const auto* algo : {"tkm", "vel"}) {
      const auto out = t / (std::string(algo) + ".tsv");
      const auto r = slg_run({"induce-corpus", "--algo", algo, "--corpus", corpus, "--seeds", seeds,
                              "--taxonomy", F + "/toy", "-o", out});
      REQUIRE_MESSAGE(r.status == 0, r.err);
      CHECK(!slurp(out).empty());
      check_replay(out);
    }
  }
  SUBCASE("imbalance warning") {
    const auto out = t / "imb.tsv";
    const auto r = slg_run({"induce-corpus", "--algo", "kir", "--corpus", F + "/corpus/imbalanced.tsv",
                            "--min-freq", "1", "--seeds", F + "/tune/seeds.tsv", "-o", out});
    REQUIRE_MESSAGE(r.status == 0, r.err);
    CHECK(r.err.find("9:1") != std::string::npos);
    CHECK(slurp(out + ".prov").find("# warning: distant labels are imbalanced") != std::string::npos);
  }
  SUBCASE("degenerate seeds exit with 1") {
    spit(t / "s.tsv", "gut\tpositive\nnirgendwo\tnegative\n");
    const auto r = slg_run({"induce-corpus", "--algo", "kir", "--corpus", corpus, "--seeds", t / "s.tsv",
                            "-o", t / "x.tsv"});
    CHECK(r.status == 1);
    CHECK(r.err.find("negative") != std::string::npos);
  }
  SUBCASE("unknown algorithm") {
    CHECK(slg_run({"induce-corpus", "--algo", "hl", "--corpus", corpus, "--seeds", seeds, "-o", t / "x.tsv"})
              .status == 2);
  }
}

TEST_CASE("combine") {
  TempDir t;
  spit(t / "a.tsv", "gut\tpositive\t0.5\nschön\tpositive\t1\n");
  spit(t / "b.tsv", "mies\tnegative\t0.7\n");
  spit(t / "c.tsv", "gut\tnegative\t0.9\n");
  auto r = slg_run({"combine", "--op", "union", t / "a.tsv", t / "b.tsv", "-o", t / "u.tsv"});
  REQUIRE_MESSAGE(r.status == 0, r.err);
  CHECK(read_lexicon_file(t / "u.tsv").size() == 3);
  check_replay(t / "u.tsv");

  r = slg_run({"combine", "--op", "intersection", t / "a.tsv", t / "a.tsv", "-o", t / "i.tsv"});
  REQUIRE(r.status == 0);
  CHECK(read_lexicon_file(t / "i.tsv").same_entries(read_lexicon_file(t / "a.tsv")));

  r = slg_run({"combine", "--op", "union", t / "a.tsv", t / "c.tsv", "-o", t / "k.tsv"});
  REQUIRE(r.status == 0);
  CHECK(read_lexicon_file(t / "k.tsv").find("gut")->polarity == Polarity::negative);

  CHECK(slg_run({"combine", "--op", "union", t / "a.tsv", t / "nope.tsv", "-o", t / "k.tsv"}).status == 1);
  CHECK(slg_run({"combine", "--op", "xor", t / "a.tsv", t / "b.tsv", "-o", t / "k.tsv"}).status == 2);
  CHECK(slg_run({"combine", "--op", "union", t / "a.tsv", "-o", t / "k.tsv"}).status == 2);
}

TEST_CASE("eval") {
  TempDir t;
  const std::string corpus = F + "/eval/corpus.tsv";
  const std::string gold = F + "/eval/gold.tsv";
  auto r = slg_run({"eval", "--lexicon", F + "/eval/lexicon.tsv", "--corpus", corpus, "--gold", F + "/eval/gold_perfect.tsv"});
  REQUIRE_MESSAGE(r.status == 0, r.err);
  const auto row = r.out.substr(r.out.find('\n') + 1, r.out.find('\n', r.out.find('\n') + 1) - r.out.find('\n'));
  std::istringstream cells(row);
  std::string cell;
  cells >> cell;
  std::size_t values = 0;
  while (cells >> cell) {
    CHECK(cell == "1.000");
    ++values;
  }
  CHECK(values == 11);

  r = slg_run({"eval", "--lexicon", F + "/eval/empty.tsv", "--corpus", corpus, "--gold", gold, "--format",
               "json"});
  REQUIRE_MESSAGE(r.status == 0, r.err);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["positive"]["f"] == 0.0);
  CHECK(j["negative"]["f"] == 0.0);
  CHECK(j["neutral"]["recall"] == 1.0);

  r = slg_run({"eval", "--lexicon", F + "/eval/lexicon.tsv", "--corpus", corpus, "--gold", gold, "--format",
               "json", "-o", t / "r.json"});
  REQUIRE_MESSAGE(r.status == 0, r.err);
  CHECK(r.out.empty());
  const auto rep = report_from_json(nlohmann::json::parse(slurp(t / "r.json")));
  const auto docs = load_corpus(corpus, 1).documents;
  CHECK(rep == evaluate_lexicon(read_lexicon_file(F + "/eval/lexicon.tsv"), docs, read_gold_file(gold)));
  CHECK(rep[Polarity::positive].f == 1.0);
  CHECK(rep[Polarity::negative].f == 0.0);
  CHECK(rep[Polarity::neutral].recall == 7.0 / 8.0);
  check_replay(t / "r.json");

  r = slg_run({"eval", "--lexicon", F + "/eval/lexicon.tsv", "--corpus", corpus, "--gold", gold, "--format",
               "csv-row"});
  CHECK(r.out.rfind("1.000000,1.000000,1.000000,0.000000,", 0) == 0);

  spit(t / "bad.tsv", "h1\t2\t4\tpositive\nh1\t8\t12\tnegative\nzz\t0\t1\tpositive\n");
  r = slg_run({"eval", "--lexicon", F + "/eval/lexicon.tsv", "--corpus", corpus, "--gold", t / "bad.tsv"});
  CHECK(r.status == 2);
  CHECK(r.err.find("bad.tsv:2") != std::string::npos);
  CHECK(r.err.find("bad.tsv:3") != std::string::npos);
  CHECK(slg_run({"eval", "--lexicon", F + "/eval/lexicon.tsv", "--corpus", corpus, "--gold", gold, "--format",
                 "xml"}).status == 2);
}

TEST_CASE("sweep") {
  TempDir t;
  const std::vector<std::string> base{"sweep", "--taxonomy", F + "/toy", "--dev-corpus", F + "/dev/corpus.tsv",
                                      "--dev-gold", F + "/dev/gold.tsv", "--algos", "hl,mincut"};
  fs::create_directories(t.path / "seeds");
  fs::copy_file(F + "/seedsets/a_default.tsv", t.path / "seeds" / "a.tsv");
  fs::copy_file(F + "/seedsets/c_small.tsv", t.path / "seeds" / "c.tsv");
  auto args = base;
  args.insert(args.end(), {"--seed-dir", (t.path / "seeds").string(), "-o", t / "m.csv"});
  auto r = slg_run(args);
  REQUIRE_MESSAGE(r.status == 0, r.err);
  auto csv = slurp(t / "m.csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  CHECK(csv.rfind("algorithm,seed_set,macro_f,micro_f,lexicon_size,runtime_s\nhl,a,", 0) == 0);
  CHECK(csv.find("mincut,c,") != std::string::npos);
  CHECK(csv.find("error") == std::string::npos);
  r = slg_run(args);
  CHECK(slurp(t / "m.csv") == csv);
  check_replay(t / "m.csv");

  args = base;
  args.insert(args.end(), {"--seed-dir", F + "/sweep_broken", "-o", t / "b.csv"});
  r = slg_run(args);
  REQUIRE_MESSAGE(r.status == 0, r.err);
  csv = slurp(t / "b.csv");
  CHECK(csv.find("hl,b_broken,error,error,error,error\n") != std::string::npos);
  CHECK(csv.find("mincut,b_broken,error,error,error,error\n") != std::string::npos);
  CHECK(csv.find("hl,a_default,0.") != std::string::npos);
  CHECK(r.err.find("b_broken") != std::string::npos);

  fs::create_directories(t.path / "only_broken");
  fs::copy_file(F + "/sweep_broken/b_broken.tsv", t.path / "only_broken" / "b.tsv");
  args = base;
  args.insert(args.end(), {"--seed-dir", (t.path / "only_broken").string(), "-o", t / "z.csv"});
  CHECK(slg_run(args).status == 1);

  args = base;
  args.insert(args.end(), {"--seed-dir", (t.path / "seeds").string(), "-o", t / "m.csv", "--record-timing"});
  r = slg_run(args);
  REQUIRE(r.status == 0);
  CHECK(slurp(t / "m.csv").find(",NA") == std::string::npos);
}

TEST_CASE("tune-size") {
  TempDir t;
  const std::vector<std::string> base{"tune-size", "--seeds", F + "/tune/seeds.tsv", "--dev-corpus",
                                      F + "/tune/corpus.tsv", "--dev-gold", F + "/tune/gold.tsv"};
  auto run_with = [&](const std::string& cands, const std::string& step) {
    auto args = base;
    args.insert(args.end(), {"--candidates", F + "/tune/" + cands, "--step", step, "-o", t / "out.tsv"});
    const auto r = slg_run(args);
    REQUIRE_MESSAGE(r.status == 0, r.err);
    return read_lexicon_file(t / "out.tsv");
  };
  auto lex = run_with("harmful.tsv", "1");
  CHECK(lex.same_entries(read_seed_file(F + "/tune/seeds.tsv").to_lexicon()));
  lex = run_with("helpful_then_harmful.tsv", "1");
  CHECK(lex.size() == 3);
  CHECK(lex.contains("toll"));
  CHECK(slurp(t / "out.tsv.prov").find("# count: kept=1\n") != std::string::npos);
  check_replay(t / "out.tsv");
  lex = run_with("helpful_then_harmful.tsv", "10");
  CHECK(slurp(t / "out.tsv.prov").find("# count: kept=") != std::string::npos);
  CHECK(slurp(t / "out.tsv.prov").find("# count: blocks_evaluated=1\n") != std::string::npos);
}
