#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "edsm/ap_engine.hpp"
#include "edsm/edsm_engine.hpp"
#include "edsm/oracles.hpp"
#include "edsm/reductions.hpp"
#include "instance_io.hpp"

namespace edsm::cli {

namespace {

using nlohmann::json;

struct SearchOpts {
  std::string pattern;
  std::string text;
  std::string algo = "auto";
  bool json = false;
};

struct GenerateOpts {
  std::string kind;
  std::size_t n = 4;
  std::size_t s = 2;
  std::size_t l = 2;
  bool plant = false;
  bool worked_example = false;
  double density = 0.15;
  std::uint64_t seed = 1;
  std::string out;
};

struct VerifyOpts {
  std::string pattern;
  std::string text;
  std::string sidecar;
};

struct BenchOpts {
  std::string mode = "edsm";
  std::vector<std::size_t> sizes{16, 32, 64};
  std::size_t segments = 200;
  std::size_t alternatives = 4;
  std::size_t max_len = 8;
  std::size_t repeat_root = 0;
  std::uint64_t seed = 1;
  std::vector<std::string> algos{"ap-fast", "naive-ap", "naive-oracle"};
};

int cmd_search(const SearchOpts& o, std::ostream& out) {
  const Pattern p(load_pattern(o.pattern));
  MatchReport report;
  std::size_t n = 0, size = 0;
  if (o.algo == "naive-oracle") {
    const EDString t = parse_eds(read_file(o.text));
    n = t.length();
    size = t.size();
    report = oracle::brute_edsm(p, t);
  } else if (o.algo == "auto" || o.algo == "ap-fast") {
    std::ifstream in(o.text, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + o.text);
    SegmentReader reader(in);
    EdsmSearcher searcher(p);
    while (auto seg = reader.next()) {
      ++n;
      size += seg->weight();
      const bool hit = searcher.process_segment(*seg);
      if (hit && !o.json) out << n << '\n';
    }
    report.positions = searcher.state().reported;
  } else {
    throw std::invalid_argument("unknown --algo " + o.algo);
  }
  if (o.json) {
    out << json{{"pattern_length", p.length()}, {"segments", n}, {"size", size}, {"matches", report.positions}}.dump()
        << '\n';
  } else if (o.algo == "naive-oracle") {
    for (auto j : report.positions) out << j << '\n';
  }
  return report.positions.empty() ? kNoMatch : kMatch;
}

json td_sidecar(const reduce::TDInstance& inst, const GenerateOpts& o, const std::string& stem) {
  return json{{"kind", "td"},
              {"n", o.n},
              {"s", o.s},
              {"seed", o.seed},
              {"planted", o.plant},
              {"pattern_file", stem + ".pattern"},
              {"eds_file", stem + ".eds"},
              {"A", matrix_to_json(inst.a)},
              {"B", matrix_to_json(inst.b)},
              {"C", matrix_to_json(inst.c)},
              {"triangle", oracle::brute_triangle(inst.a, inst.b, inst.c)}};
}

int cmd_generate(const GenerateOpts& o, std::ostream& out) {
  if (o.out.empty()) throw std::invalid_argument("--out is required");
  Rng rng(o.seed);
  if (o.kind == "td") {
    reduce::TDInstance inst{random_matrix(rng, o.n, o.density), random_matrix(rng, o.n, o.density),
                            random_matrix(rng, o.n, o.density), o.s};
    if (o.plant) {
      const std::size_t i = rng.below(o.n), j = rng.below(o.n), k = rng.below(o.n);
      inst.a.set(i, j);
      inst.b.set(j, k);
      inst.c.set(k, i);
    }
    const auto enc = reduce::td_to_edsm(inst);
    const std::string stem = std::filesystem::path(o.out).filename().string();
    write_file(o.out + ".pattern", escape_letters(enc.pattern.letters()) + "\n");
    write_file(o.out + ".eds", serialize_eds(enc.text) + "\n");
    write_file(o.out + ".json", td_sidecar(inst, o, stem).dump(2) + "\n");
    out << o.out << ".pattern\n" << o.out << ".eds\n" << o.out << ".json\n";
    return kMatch;
  }
  if (o.kind == "bmm") {
    auto [a, b] = o.worked_example ? reduce::worked_bmm_example()
                                   : std::pair{random_matrix(rng, o.n, o.density), random_matrix(rng, o.n, o.density)};
    const std::size_t l = o.worked_example ? 3 : o.l;
    const auto blocks = reduce::bmm_to_ap(a, b, l);
    json jb = json::array();
    for (const auto& blk : blocks) {
      jb.push_back({{"K", blk.K}, {"J", blk.J}, {"U", blk.u.to_string()}, {"strings", blk.strings}});
    }
    const json doc{{"kind", "bmm"},
                   {"n", a.rows()},
                   {"l", l},
                   {"seed", o.seed},
                   {"pattern", blocks.front().pattern},
                   {"A", matrix_to_json(a)},
                   {"B", matrix_to_json(b)},
                   {"blocks", jb},
                   {"expected_C", matrix_to_json(oracle::naive_bool_multiply(a, b))}};
    write_file(o.out, doc.dump(2) + "\n");
    out << o.out << '\n';
    return kMatch;
  }
  throw std::invalid_argument("generate: kind must be td or bmm");
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream s;
  s << '{';
  for (std::size_t k = 0; k < v.size(); ++k) s << (k ? "," : "") << v[k];
  s << '}';
  return s.str();
}

int verify_search(const Pattern& p, const EDString& t, std::ostream& out) {
  const auto fast = search(p, t);
  const auto slow = oracle::brute_edsm(p, t);
  if (fast == slow) {
    out << "agree: " << join(fast.positions) << '\n';
    return kMatch;
  }
  // Smallest prefix of the text on which the two still disagree.
  std::size_t cut = 1;
  for (; cut <= t.length(); ++cut) {
    const EDString prefix(std::vector<Segment>(t.segments().begin(), t.segments().begin() + cut));
    if (!(search(p, prefix) == oracle::brute_edsm(p, prefix))) break;
  }
  const EDString prefix(std::vector<Segment>(t.segments().begin(), t.segments().begin() + std::min(cut, t.length())));
  out << "disagree\npattern: " << escape_letters(p.letters()) << "\ntext: " << serialize_eds(prefix)
      << "\nengine: " << join(search(p, prefix).positions)
      << "\noracle: " << join(oracle::brute_edsm(p, prefix).positions) << '\n';
  return kDisagree;
}

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  if (o.sidecar.empty()) {
    if (o.pattern.empty() || o.text.empty()) throw std::invalid_argument("verify needs -p and -t, or --sidecar");
    return verify_search(Pattern(load_pattern(o.pattern)), parse_eds(read_file(o.text)), out);
  }
  const json doc = json::parse(read_file(o.sidecar));
  const std::string kind = doc.at("kind");
  const auto dir = std::filesystem::path(o.sidecar).parent_path();
  if (kind == "td") {
    const Pattern p(load_pattern("@" + (dir / doc.at("pattern_file").get<std::string>()).string()));
    const EDString t = parse_eds(read_file((dir / doc.at("eds_file").get<std::string>()).string()));
    const bool claimed = doc.at("triangle");
    const bool truth = oracle::brute_triangle(matrix_from_json(doc.at("A")), matrix_from_json(doc.at("B")),
                                              matrix_from_json(doc.at("C")));
    const bool found = !search(p, t).positions.empty();
    if (found == claimed && truth == claimed) {
      out << "agree: triangle=" << (claimed ? "true" : "false") << '\n';
      return kMatch;
    }
    out << "disagree: sidecar triangle=" << claimed << " oracle triangle=" << truth << " occurrence=" << found
        << '\n';
    return kDisagree;
  }
  if (kind == "bmm") {
    const std::size_t n = doc.at("n"), l = doc.at("l");
    const std::string pattern = doc.at("pattern");
    std::vector<reduce::APReductionBlock> blocks;
    const ap::ApSolver solver(pattern);
    for (const auto& jb : doc.at("blocks")) {
      reduce::APReductionBlock blk{jb.at("K"), jb.at("J"), l, pattern, BitVector::from_string(jb.at("U").get<std::string>()),
                                   jb.at("strings").get<std::vector<std::string>>(), std::nullopt};
      const BitVector fast = solver.solve(blk.u, blk.strings);
      const BitVector slow = oracle::brute_ap(pattern, blk.u, blk.strings);
      if (!(fast == slow)) {
        out << "disagree on block (" << blk.K << "," << blk.J << ")\nengine: " << fast.to_string()
            << "\noracle: " << slow.to_string() << '\n';
        return kDisagree;
      }
      blk.v = fast;
      blocks.push_back(std::move(blk));
    }
    const auto c = reduce::reconstruct_bmm(blocks);
    const auto expected = matrix_from_json(doc.at("expected_C"));
    if (c.rows() != n || !(c == expected)) {
      out << "disagree: reconstructed C differs from expected_C\n";
      for (const auto& row : c.to_rows()) out << row << '\n';
      return kDisagree;
    }
    out << "agree: C reconstructed from " << blocks.size() << " blocks\n";
    return kMatch;
  }
  throw std::invalid_argument("verify: unknown sidecar kind " + kind);
}

int cmd_bench(const BenchOpts& o, std::ostream& out) {
  out << "algo,m,n,N,seconds\n";
  for (std::size_t m : o.sizes) {
    Rng rng(o.seed + m);
    RandomTextSpec spec;
    spec.m = m;
    spec.segments = o.segments;
    spec.alternatives = o.alternatives;
    spec.max_len = o.max_len;
    spec.repeat_root = o.repeat_root;
    const auto [pat, text] = random_instance(rng, spec);
    const Pattern p(pat);
    for (const auto& algo : o.algos) {
      const auto t0 = std::chrono::steady_clock::now();
      std::string cell;
      try {
        if (algo == "ap-fast") {
          search(p, text);
        } else if (algo == "naive-ap") {
          EdsmSearcher s(p, [&pat](const BitVector& u, const std::vector<std::string_view>& strs) {
            return oracle::brute_ap(pat, u, std::vector<std::string>(strs.begin(), strs.end()));
          });
          for (const auto& seg : text.segments()) s.process_segment(seg);
        } else if (algo == "naive-oracle") {
          oracle::brute_edsm(p, text);
        } else {
          throw std::invalid_argument("unknown bench algo " + algo);
        }
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        std::ostringstream s;
        s << std::fixed << std::setprecision(6) << dt.count();
        cell = s.str();
      } catch (const oracle::BudgetExceeded&) {
        cell = "skipped";
      }
      out << algo << ',' << m << ',' << text.length() << ',' << text.size() << ',' << cell << '\n';
    }
  }
  return kMatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elastic-degenerate string matching"};
  app.require_subcommand(1);

  SearchOpts so;
  auto* search_cmd = app.add_subcommand("search", "Report segments where an occurrence of the pattern ends");
  search_cmd->add_option("-p,--pattern", so.pattern, "Pattern letters, or @file")->required();
  search_cmd->add_option("-t,--text", so.text, "ED text file")->required();
  search_cmd->add_option("--algo", so.algo, "auto | naive-oracle | ap-fast")
      ->check(CLI::IsMember({"auto", "naive-oracle", "ap-fast"}));
  search_cmd->add_flag("--json", so.json, "JSON report");

  GenerateOpts go;
  auto* gen_cmd = app.add_subcommand("generate", "Write reduction instances");
  gen_cmd->add_option("kind", go.kind, "td | bmm")->required()->check(CLI::IsMember({"td", "bmm"}));
  gen_cmd->add_option("--n", go.n, "Matrix dimension");
  gen_cmd->add_option("--s", go.s, "Block parameter (td)");
  gen_cmd->add_option("--l", go.l, "Block size (bmm)");
  gen_cmd->add_flag("--plant", go.plant, "Plant a triangle (td)");
  gen_cmd->add_flag("--paper-example", go.worked_example, "Use the worked 6x6 instance (bmm)");
  gen_cmd->add_option("--density", go.density, "Probability of a 1 entry");
  gen_cmd->add_option("--seed", go.seed, "Random seed");
  gen_cmd->add_option("--out", go.out, "Output prefix (td) or JSON file (bmm)")->required();

  VerifyOpts vo;
  auto* verify_cmd = app.add_subcommand("verify", "Compare the engine with the oracles");
  verify_cmd->add_option("-p,--pattern", vo.pattern, "Pattern letters, or @file");
  verify_cmd->add_option("-t,--text", vo.text, "ED text file");
  verify_cmd->add_option("--sidecar", vo.sidecar, "JSON sidecar written by generate");

  BenchOpts bo;
  auto* bench_cmd = app.add_subcommand("bench", "CSV timings over a size sweep");
  bench_cmd->add_option("--sizes", bo.sizes, "Pattern lengths")->delimiter(',');
  bench_cmd->add_option("--segments", bo.segments, "Segments per text");
  bench_cmd->add_option("--alternatives", bo.alternatives, "Max alternatives per segment");
  bench_cmd->add_option("--max-len", bo.max_len, "Max alternative length");
  bench_cmd->add_option("--repeat-root", bo.repeat_root, "Cut the instance from a tandem repeat of this root length");
  bench_cmd->add_option("--seed", bo.seed, "Random seed");
  bench_cmd->add_option("--algo", bo.algos, "ap-fast, naive-ap, naive-oracle")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*search_cmd) return cmd_search(so, out);
    if (*gen_cmd) return cmd_generate(go, out);
    if (*verify_cmd) return cmd_verify(vo, out);
    if (*bench_cmd) return cmd_bench(bo, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace edsm::cli
