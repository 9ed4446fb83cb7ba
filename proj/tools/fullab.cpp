#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fullab/constructions.hpp"
#include "fullab/cut.hpp"
#include "fullab/errors.hpp"
#include "fullab/io.hpp"
#include "fullab/sampling.hpp"
#include "fullab/spectral.hpp"
#include "fullab/sw_ops.hpp"

using nlohmann::json;
using namespace fullab;

namespace {

std::string spiral_line(const PentagonVector& pv) {
  std::ostringstream ss;
  ss << 2 * pv.m - 4;
  for (int p : pv.pos) ss << ' ' << p;
  return ss.str();
}

PentagonVector parse_spiral(const std::string& text) {
  std::istringstream ss(text);
  const auto pvs = read_spiral_lines(ss);
  if (pvs.size() != 1) throw Error(ErrorCode::ValidationFailed, "expected one spiral line");
  return pvs.front();
}

// "-" or empty means stdout
class OutFile {
 public:
  explicit OutFile(const std::string& path, bool binary = false) {
    if (!path.empty() && path != "-") {
      file_.open(path, binary ? std::ios::out | std::ios::binary : std::ios::out);
      if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<DualFullerene> load_graphs(const std::string& path, const std::string& format) {
  std::vector<DualFullerene> out;
  if (format == "spiral") {
    for (const PentagonVector& pv : read_spiral_lines_file(path)) out.push_back(windup_graph(pv));
  } else {
    for (const RotationSystem& rs : read_planar_code_file(path, ReadMode::Strict))
      out.push_back(DualFullerene::build(rs));
  }
  if (out.empty()) throw Error(ErrorCode::EmptyInput, "no graphs in " + path);
  return out;
}

void write_graphs(const std::string& path, const std::string& format,
                  const std::vector<DualFullerene>& graphs) {
  if (format == "spiral") {
    std::vector<PentagonVector> pvs;
    for (const auto& g : graphs) pvs.push_back(canonical_pentagon_vector(g));
    OutFile out(path);
    write_spiral_lines(out.get(), pvs);
  } else {
    std::vector<RotationSystem> rss;
    for (const auto& g : graphs) rss.push_back(g.rot());
    OutFile out(path, true);
    write_planar_code(out.get(), rss);
  }
}

Representation parse_rep(const std::string& name) {
  if (name == "dual") return Representation::Dual;
  if (name == "hex") return Representation::Hex;
  if (name == "pent") return Representation::Pent;
  if (name == "primal") return Representation::Primal;
  throw Error(ErrorCode::OutOfRange, "unknown representation " + name);
}

const char* cls_name(ComponentClass c) {
  switch (c) {
    case ComponentClass::Triangle:
      return "triangle";
    case ComponentClass::Truncated:
      return "truncated";
    default:
      return "other";
  }
}

std::string match_text(const ComponentMatch& m) {
  std::ostringstream ss;
  ss << cls_name(m.cls);
  if (m.cls == ComponentClass::Triangle) ss << " t=" << m.t;
  if (m.cls == ComponentClass::Truncated)
    ss << " t=" << m.t << " r=(" << m.removed[0] << ',' << m.removed[1] << ',' << m.removed[2]
       << ')';
  return ss.str();
}

json report_json(const SampleReport& r) {
  json counts = json::object();
  for (const auto& [pv, c] : r.counts) counts[spiral_line(pv)] = c;
  return json{{"attempted", r.attempted},
              {"accepted", r.accepted},
              {"acceptance_rate", r.acceptance_rate},
              {"counts", counts}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fullerene dual graphs: construction, enumeration, rewriting, spectra, sampling"};
  app.require_subcommand(1);

  std::string in_path, out_path, format = "planar_code", csv_path;
  int threads = 1;
  std::uint64_t seed = 0, budget = default_attempt_budget();
  app.add_option("--threads", threads, "worker threads")->capture_default_str();
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--budget", budget, "windup attempt budget")->capture_default_str();

  auto add_io = [&](CLI::App* sub, bool needs_in) {
    if (needs_in) sub->add_option("--in", in_path, "input file")->required();
    sub->add_option("--out", out_path, "output file, - for stdout");
    sub->add_option("--format", format, "planar_code or spiral")
        ->check(CLI::IsMember({"planar_code", "spiral"}));
  };

  // make
  std::string family;
  int belts = 1, gp = 1, gq = 0, pt = 2, steps = 0, n = 20, bm = 12;
  bool full_conv = false;
  auto* mk = app.add_subcommand("make", "construct a named graph");
  mk->add_option("--family", family, "dodecahedron|nanotube|goldberg|gswfree|grow36|seed|bipyramid")
      ->required()
      ->check(CLI::IsMember(
          {"dodecahedron", "nanotube", "goldberg", "gswfree", "grow36", "seed", "bipyramid"}));
  mk->add_option("--belts", belts, "nanotube belt count");
  mk->add_option("--p", gp, "goldberg p");
  mk->add_option("--q", gq, "goldberg q");
  mk->add_option("--t", pt, "gswfree patch rows");
  mk->add_flag("--full", full_conv, "gswfree: full truncation convention");
  mk->add_option("--steps", steps, "grow36 growth steps");
  mk->add_option("--n", n, "seed: vertex count of the fullerene");
  mk->add_option("--m", bm, "bipyramid: dual vertex count");
  add_io(mk, false);
  mk->callback([&] {
    if (family == "bipyramid") {
      if (format == "spiral")
        throw Error(ErrorCode::OutOfRange, "bipyramid is not a fullerene, use planar_code");
      OutFile out(out_path, true);
      write_planar_code(out.get(), {bipyramid(bm)});
      return;
    }
    DualFullerene g = family == "dodecahedron" ? dodecahedron()
                      : family == "nanotube"   ? nanotube_50(belts)
                      : family == "goldberg"   ? goldberg(gp, gq)
                      : family == "gswfree"
                          ? gsw_free_family({pt, full_conv ? TruncationConvention::Full
                                                           : TruncationConvention::Rows})
                      : family == "grow36" ? grow_from_c36(steps)
                                           : seed_for(n, budget);
    write_graphs(out_path, format, {g});
  });

  // enumerate
  bool count_only = false;
  auto* en = app.add_subcommand("enumerate", "all isomers of C_n as spiral lines");
  en->add_option("--n", n, "fullerene vertex count")->required();
  en->add_flag("--count-only", count_only, "print the class count instead of spirals");
  add_io(en, false);
  en->callback([&] {
    const IsomerList list = enumerate_isomers(n, threads, budget);
    OutFile out(out_path);
    if (count_only) {
      out.get() << list.isomers.size() << '\n';
      return;
    }
    write_spiral_lines(out.get(), list.isomers);
    std::cerr << "n=" << n << " classes=" << list.isomers.size() << " attempts=" << list.attempts
              << '\n';
  });

  // character
  double alpha = 0.5, beta = 0.25;
  std::string rep_name = "dual";
  auto* ch = app.add_subcommand("character", "trace of exp(alpha*A + beta*D) per input graph");
  ch->add_option("--alpha", alpha)->capture_default_str();
  ch->add_option("--beta", beta)->capture_default_str();
  ch->add_option("--rep", rep_name, "dual|hex|pent|primal")
      ->check(CLI::IsMember({"dual", "hex", "pent", "primal"}));
  add_io(ch, true);
  ch->callback([&] {
    OutFile out(out_path);
    for (const auto& g : load_graphs(in_path, format))
      out.get() << format_double(character(g, alpha, beta, parse_rep(rep_name))) << '\n';
  });

  // sweep
  auto* sw = app.add_subcommand("sweep", "characters of every isomer of C_n as CSV");
  sw->add_option("--n", n)->required();
  sw->add_option("--alpha", alpha)->capture_default_str();
  sw->add_option("--beta", beta)->capture_default_str();
  sw->add_option("--csv", csv_path, "output CSV path")->required();
  sw->callback([&] {
    const IsomerList list = enumerate_isomers(n, threads, budget);
    std::vector<double> chs;
    for (const auto& pv : list.isomers) chs.push_back(character(windup_graph(pv), alpha, beta));
    double lo = chs.empty() ? 0 : chs.front(), hi = lo;
    for (double c : chs) {
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    OutFile out(csv_path);
    out.get() << "n,j,character,normalized\n";
    for (std::size_t j = 0; j < chs.size(); ++j)
      out.get() << n << ',' << j + 1 << ',' << format_double(chs[j]) << ','
                << format_double(hi > lo ? normalized_character(chs[j], lo, hi) : 0.0) << '\n';
  });

  // hist
  int bins = 1000;
  auto* hi_cmd = app.add_subcommand("hist", "density histogram of a sweep CSV");
  hi_cmd->add_option("--csv", csv_path, "sweep CSV input")->required();
  hi_cmd->add_option("--bins", bins)->capture_default_str();
  hi_cmd->add_option("--out", out_path, "output CSV, - for stdout");
  hi_cmd->callback([&] {
    std::ifstream f(csv_path);
    if (!f) throw std::runtime_error("cannot open " + csv_path + " for reading");
    std::vector<double> values;
    std::string line;
    while (std::getline(f, line)) {
      std::istringstream ss(line);
      std::string n_s, j_s, ch_s;
      if (!std::getline(ss, n_s, ',') || !std::getline(ss, j_s, ',') ||
          !std::getline(ss, ch_s, ','))
        continue;
      try {
        values.push_back(std::stod(ch_s));
      } catch (...) {
        continue;  // header
      }
    }
    if (values.empty()) throw Error(ErrorCode::EmptyInput, "no character column in " + csv_path);
    double lo = values.front(), hi = values.front();
    for (double v : values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const auto density = histogram(values, bins, lo, hi);
    const double width = (hi - lo) / bins;
    OutFile out(out_path);
    out.get() << "bin_lo,bin_hi,density\n";
    for (int i = 0; i < bins; ++i)
      out.get() << format_double(lo + i * width) << ',' << format_double(lo + (i + 1) * width)
                << ',' << format_double(density[(std::size_t)i]) << '\n';
  });

  // gsw
  int max_w = 0, apply_idx = -1;
  bool dedup = false;
  auto* gs = app.add_subcommand("gsw", "list or apply generalized rewrites of the first graph");
  gs->add_option("--max-w", max_w, "path half-length cap, 0 = none");
  gs->add_flag("--dedup", dedup, "drop reversed duplicates");
  gs->add_option("--apply", apply_idx, "apply the path with this 1-based index");
  add_io(gs, true);
  gs->callback([&] {
    const auto graphs = load_graphs(in_path, format);
    const auto paths = find_gsw_paths(graphs.front(), max_w, dedup);
    if (apply_idx > 0) {
      if ((std::size_t)apply_idx > paths.size())
        throw Error(ErrorCode::OutOfRange, "path index out of range");
      write_graphs(out_path, format, {apply_gsw(graphs.front(), paths[(std::size_t)apply_idx - 1])});
      return;
    }
    OutFile out(out_path);
    for (const auto& p : paths) {
      for (std::size_t i = 0; i < p.v.size(); ++i) out.get() << (i ? " " : "") << p.v[i];
      out.get() << '\n';
    }
    std::cerr << "paths=" << paths.size() << '\n';
  });

  // psw
  int v1 = -1, v2 = -1;
  bool list_sites = false;
  auto* ps = app.add_subcommand("psw", "classic flip sites, or apply one edge flip");
  ps->add_flag("--sites", list_sites, "list classic Stone-Wales sites");
  ps->add_option("--v1", v1, "edge endpoint (0-based)");
  ps->add_option("--v2", v2, "edge endpoint (0-based)");
  add_io(ps, true);
  ps->callback([&] {
    const auto graphs = load_graphs(in_path, format);
    if (list_sites) {
      OutFile out(out_path);
      for (auto [a, b] : classic_sw_sites(graphs.front())) out.get() << a << ' ' << b << '\n';
      return;
    }
    if (v1 < 0 || v2 < 0) throw Error(ErrorCode::OutOfRange, "need --v1 and --v2 or --sites");
    const Triangulation flipped = psw_flip(graphs.front().tri(), v1, v2);
    // flips usually leave the fullerene profile, so write raw planar code
    OutFile out(out_path, true);
    write_planar_code(out.get(), {flipped.rot()});
  });

  // cutpartition
  auto* cp = app.add_subcommand("cutpartition", "hexagon-subgraph decomposition per input graph");
  add_io(cp, true);
  cp->callback([&] {
    const auto graphs = load_graphs(in_path, format);
    OutFile out(out_path);
    for (const auto& g : graphs) {
      const CutPartition part = cut_partition(g);
      out.get() << "n=" << g.n() << " components=" << part.components.size()
                << " clean=" << part.clean << '\n';
      for (const auto& c : part.components)
        out.get() << "  size=" << c.piece.size() << " rows: " << match_text(c.cls_rows)
                  << " | full: " << match_text(c.cls_full) << '\n';
    }
  });

  // conjecture2
  int n_from = 0, n_to = 0;
  auto* c2 = app.add_subcommand("conjecture2", "rewrite-vs-partition consistency reports");
  c2->add_option("--n", n, "single class to sweep");
  c2->add_option("--from", n_from, "sweep start (inclusive)");
  c2->add_option("--to", n_to, "sweep end (inclusive)");
  c2->add_option("--in", in_path, "check the graphs in this file instead");
  c2->add_option("--out", out_path);
  c2->add_option("--format", format)->check(CLI::IsMember({"planar_code", "spiral"}));
  c2->callback([&] {
    OutFile out(out_path);
    auto emit = [&](const DualFullerene& g, int j) {
      const Conjecture2Report r = conjecture2_report(g);
      out.get() << "n=" << r.n << " j=" << j << " gsw=" << r.has_gsw << " clean=" << r.clean
                << " rows{tri=" << r.rows.all_triangular << " zero=" << r.rows.zero_only
                << " ok=" << r.rows.consistent << "} full{tri=" << r.full.all_triangular
                << " zero=" << r.full.zero_only << " ok=" << r.full.consistent
                << "} consistent=" << r.consistent << '\n';
    };
    if (!in_path.empty()) {
      int j = 0;
      for (const auto& g : load_graphs(in_path, format)) emit(g, ++j);
      return;
    }
    if (n_from == 0 && n_to == 0) n_from = n_to = n;
    for (int nn = n_from; nn <= n_to; nn += 2) {
      if (nn == 22) continue;
      const IsomerList list = enumerate_isomers(nn, threads, budget);
      for (std::size_t j = 0; j < list.isomers.size(); ++j)
        emit(windup_graph(list.isomers[j]), (int)j + 1);
    }
  });

  // sample
  std::string method = "spiral", report_path, policy = "uniform";
  int count = 1;
  std::int64_t chain_steps = 1000000, burn_in = 0;
  auto* sa = app.add_subcommand("sample", "random fullerenes: rejection sampler or flip chain");
  sa->add_option("method", method, "spiral or psw")->check(CLI::IsMember({"spiral", "psw"}));
  sa->add_option("--n", n)->required();
  sa->add_option("--count", count, "spiral: accepted draws")->capture_default_str();
  sa->add_option("--steps", chain_steps, "psw: chain steps")->capture_default_str();
  sa->add_option("--burnin", burn_in, "psw: steps before visits count");
  sa->add_option("--policy", policy, "psw: uniform or energy")
      ->check(CLI::IsMember({"uniform", "energy"}));
  sa->add_option("--report", report_path, "write the JSON report here instead of stderr");
  sa->add_option("--out", out_path);
  sa->callback([&] {
    json rep;
    if (method == "spiral") {
      const SampleRun run = spiral_ar_run(n, count, seed);
      std::vector<RotationSystem> rss;
      for (const auto& pv : run.samples) rss.push_back(windup_graph(pv).rot());
      OutFile out(out_path, true);
      write_planar_code(out.get(), rss);
      rep = report_json(run.report);
    } else {
      ChainConfig cfg;
      cfg.n = n;
      cfg.seed = seed;
      cfg.steps = chain_steps;
      cfg.burn_in = burn_in;
      cfg.policy = policy == "energy" ? FlipPolicy::Energy : FlipPolicy::UniformFlip;
      const ChainResult res = psw_chain(cfg);
      OutFile out(out_path, true);
      write_planar_code(out.get(), {RotationSystem::from_lists(res.final_state)});
      rep = report_json(res.report);
      rep["profile_steps"] = res.profile_steps;
    }
    if (report_path.empty()) {
      std::cerr << rep.dump(2) << '\n';
    } else {
      OutFile rf(report_path);
      rf.get() << rep.dump(2) << '\n';
    }
  });

  // db
  auto* db = app.add_subcommand("db", "persisted per-n isomer stores");
  std::string db_path, spiral_text;
  auto* dbb = db->add_subcommand("build", "enumerate and persist C_n");
  dbb->add_option("--n", n)->required();
  dbb->add_option("--out", db_path, "store path")->required();
  dbb->callback([&] {
    IsomerDb::build(n, threads, budget).save(db_path);
    std::cerr << "wrote " << db_path << " and " << db_path << ".idx\n";
  });
  auto* dbl = db->add_subcommand("lookup", "find the isomer index of a spiral or graph");
  dbl->add_option("--db", db_path, "store path")->required();
  dbl->add_option("--spiral", spiral_text, "one spiral line \"n p1 .. p12\"");
  dbl->add_option("--in", in_path, "planar code file, first graph is looked up");
  dbl->callback([&] {
    const IsomerDb store = IsomerDb::load(db_path);
    int j;
    if (!spiral_text.empty()) {
      j = store.lookup(parse_spiral(spiral_text));
    } else if (!in_path.empty()) {
      j = store.lookup(load_graphs(in_path, "planar_code").front());
    } else {
      throw Error(ErrorCode::OutOfRange, "need --spiral or --in");
    }
    std::cout << store.n << ' ' << j << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::BudgetExceeded:
        return 3;
      case ErrorCode::BadHeader:
      case ErrorCode::TruncatedRecord:
        return 4;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
