#include "smw/asymptotics.hpp"
#include "smw/cache.hpp"
#include "smw/classes.hpp"
#include "smw/entangle.hpp"
#include "smw/kernel.hpp"
#include "smw/series.hpp"
#include "smw/verify.hpp"
#include "smw/walks.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace smw;
using nlohmann::ordered_json;

namespace {

struct ModelFlags {
  std::string family = "s31";
  std::string lambda, lambda1, lambda2;
  std::string mu = "1";
  std::string boundary = "corrected";
  std::string topology = "open";

  void add(CLI::App* app) {
    app->add_option("--model", family, "s21, s31, s32c1, s32c2")->capture_default_str();
    app->add_option("--lambda", lambda, "single-parameter lambda for s31 (0: free walks, >0: matched)");
    app->add_option("--lambda1", lambda1, "valley weight for s31");
    app->add_option("--lambda2", lambda2, "balancing weight for s31");
    app->add_option("--mu", mu, "color-flip weight for s32c2")->capture_default_str();
    app->add_option("--boundary", boundary, "original or corrected")->capture_default_str();
    app->add_option("--topology", topology, "open, closed-endpoints or ring")->capture_default_str();
  }

  ModelSpec build() const {
    ModelSpec m;
    switch (parse_family(family)) {
      case Family::S21: m = ModelSpec::s21(); break;
      case Family::S32Case1: m = ModelSpec::s32_case1(); break;
      case Family::S32Case2: m = ModelSpec::s32_case2(parse_rational(mu)); break;
      case Family::S31:
        if (!lambda1.empty() || !lambda2.empty()) {
          if (!lambda.empty()) throw UsageError("--lambda cannot be combined with --lambda1/--lambda2");
          m = ModelSpec::s31_phase(lambda1.empty() ? Rational(0) : parse_rational(lambda1),
                                   lambda2.empty() ? Rational(0) : parse_rational(lambda2));
        } else {
          m = ModelSpec::s31(lambda.empty() ? Rational(0) : parse_rational(lambda));
        }
        break;
    }
    m.boundary = parse_boundary(boundary);
    m.topology = parse_topology(topology);
    m.validate();
    return m;
  }
};

struct Common {
  std::string cache_dir = ".smw-cache";
  std::string format = "csv";
  unsigned precision = kDefaultDigits;
  int oracle_cap = 0;
  std::size_t max_dim = 0;
  std::size_t dense_limit = 2000;
  int series_order = kDefaultSeriesCap;
};

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
      } else {
        int lo = std::stoi(item.substr(0, dots)), hi = std::stoi(item.substr(dots + 2));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad integer list '" + s + "'");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

std::pair<int, int> parse_sector(const std::string& s) {
  if (s.size() != 2 || !std::isdigit(s[0]) || !std::isdigit(s[1])) throw UsageError("sector must look like 11 or 12");
  return {s[0] - '0', s[1] - '0'};
}

void emit_table(const std::string& format, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json o;
      for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
      arr.push_back(o);
    }
    std::cout << arr.dump(2) << '\n';
  } else if (format == "md") {
    std::cout << '|';
    for (const auto& h : header) std::cout << ' ' << h << " |";
    std::cout << "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) std::cout << "---|";
    std::cout << '\n';
    for (const auto& r : rows) {
      std::cout << '|';
      for (const auto& c : r) std::cout << ' ' << c << " |";
      std::cout << '\n';
    }
  } else {
    for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << header[i];
    std::cout << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << r[i];
      std::cout << '\n';
    }
  }
}

class CachedTable {
 public:
  CachedTable(const ModelSpec& m, const Common& c)
      : table_(m), cache_(CountCache::resolve_dir(c.cache_dir)) {
    cache_.load(table_);
  }
  ~CachedTable() {
    try {
      cache_.save(table_);
    } catch (const std::exception& e) {
      std::cerr << "warning: cache not written: " << e.what() << '\n';
    }
  }
  CountTable& operator*() { return table_; }
  CountTable* operator->() { return &table_; }

 private:
  CountTable table_;
  CountCache cache_;
};

HamiltonianOptions ham_options(const std::string& rep, const Common& c) {
  HamiltonianOptions o;
  o.rep = parse_representation(rep);
  o.max_dimension = c.max_dim;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric inverse semigroup Motzkin walks: counts, series, spin chains, entropies"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  Common common;
  app.add_option("--cache-dir", common.cache_dir, "count cache directory (SMW_CACHE_DIR overrides)")
      ->capture_default_str();
  app.add_option("--format", common.format, "json, csv or md")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->capture_default_str();
  app.add_option("--precision", common.precision, "decimal digits for real arithmetic")
      ->check(CLI::Range(30u, 2000u))
      ->capture_default_str();
  app.add_option("--oracle-cap", common.oracle_cap, "largest length for brute-force enumeration");
  app.add_option("--max-dim", common.max_dim, "Hamiltonian basis budget");
  app.add_option("--dense-limit", common.dense_limit, "largest block diagonalized densely")->capture_default_str();
  app.add_option("--series-order", common.series_order, "series truncation order")->capture_default_str();

  // count
  auto* count_cmd = app.add_subcommand("count", "exact walk counts");
  count_cmd->set_help_flag("--help");
  ModelFlags count_model;
  count_model.add(count_cmd);
  int cn = 0, ch = 0, ca = 1, cb = 1;
  bool ctilde = false, call = false;
  std::string cmethod = "dp";
  count_cmd->add_option("-n", cn, "walk length")->required();
  count_cmd->add_option("-h,--height", ch, "end height")->capture_default_str();
  count_cmd->add_option("--from", ca, "start index")->capture_default_str();
  count_cmd->add_option("--to", cb, "end index")->capture_default_str();
  count_cmd->add_flag("--tilde", ctilde, "count tilde walks (s32c2)");
  count_cmd->add_option("--method", cmethod, "dp, enum, recursion or series")
      ->check(CLI::IsMember({"dp", "enum", "recursion", "series"}))
      ->capture_default_str();
  count_cmd->add_flag("--all-methods", call, "run every method and report agreement");

  // series
  auto* series_cmd = app.add_subcommand("series", "closed-form generating function coefficients");
  series_cmd->set_help_flag("--help");
  ModelFlags series_model;
  series_model.add(series_cmd);
  int sh = 0, sa = 1, sb = 1;
  bool stilde = false;
  series_cmd->add_option("-h,--height", sh, "end height")->capture_default_str();
  series_cmd->add_option("--from", sa, "start index")->capture_default_str();
  series_cmd->add_option("--to", sb, "end index")->capture_default_str();
  series_cmd->add_flag("--tilde", stilde, "tilde counts (s32c2)");

  // gsd
  auto* gsd_cmd = app.add_subcommand("gsd", "ground-state degeneracy table");
  ModelFlags gsd_model;
  gsd_model.add(gsd_cmd);
  std::string gsd_n = "4..7", gsd_rep = "reduced";
  bool gsd_float = false, gsd_pert = false;
  gsd_cmd->add_option("-n", gsd_n, "lengths, e.g. 4..7 or 4,6")->capture_default_str();
  gsd_cmd->add_option("--rep", gsd_rep, "reduced or link")->capture_default_str();
  gsd_cmd->add_flag("--float", gsd_float, "add the floating-point spectral count");
  gsd_cmd->add_flag("--site0-penalty", gsd_pert, "add the boundary projector onto index 1 at site 0");

  // ham-export
  auto* ham_cmd = app.add_subcommand("ham-export", "write the Hamiltonian in coordinate format");
  ModelFlags ham_model;
  ham_model.add(ham_cmd);
  int hn = 2;
  std::string ham_rep = "reduced", ham_out;
  bool ham_float = false, ham_basis = false;
  ham_cmd->add_option("-n", hn, "chain length")->required();
  ham_cmd->add_option("--rep", ham_rep, "reduced or link")->capture_default_str();
  ham_cmd->add_flag("--float", ham_float, "floating-point entries");
  ham_cmd->add_flag("--basis", ham_basis, "print the basis walks instead");
  ham_cmd->add_option("-o,--output", ham_out, "output file (default stdout)");

  // classes
  auto* cls_cmd = app.add_subcommand("classes", "zero-energy move classes");
  ModelFlags cls_model;
  cls_model.add(cls_cmd);
  int cls_n = 4;
  std::string cls_rep = "reduced";
  bool cls_members = false;
  cls_cmd->add_option("-n", cls_n, "chain length")->required();
  cls_cmd->add_option("--rep", cls_rep, "reduced or link")->capture_default_str();
  cls_cmd->add_flag("--members", cls_members, "list (walk, amplitude) for each ground state");

  // entropy
  auto* ent_cmd = app.add_subcommand("entropy", "half-chain entanglement entropy");
  ModelFlags ent_model;
  ent_model.add(ent_cmd);
  std::string ent_sector = "11", ent_n = "10", ent_method = "counts";
  bool ent_fit = false, ent_spectrum = false;
  ent_cmd->add_option("--sector", ent_sector, "start and end index, e.g. 11")->capture_default_str();
  ent_cmd->add_option("-n", ent_n, "half-chain lengths, e.g. 200,500,1000")->capture_default_str();
  ent_cmd->add_option("--method", ent_method, "counts or state")
      ->check(CLI::IsMember({"counts", "state"}))
      ->capture_default_str();
  ent_cmd->add_flag("--fit", ent_fit, "two-point extrapolation report (JSON)");
  ent_cmd->add_flag("--spectrum", ent_spectrum, "print the Schmidt spectrum of the last length");

  // phase-report
  auto* phase_cmd = app.add_subcommand("phase-report", "GSD and entropy tables across the phase diagrams");
  std::string phase_n = "50,100,200";
  int phase_gsd_n = 6;
  phase_cmd->add_option("-n", phase_n, "half-chain lengths for entropies")->capture_default_str();
  phase_cmd->add_option("--gsd-n", phase_gsd_n, "chain length for GSD columns")->capture_default_str();

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "run the acceptance checks");
  std::string suite = "smoke", only;
  bool quiet = false;
  ver_cmd->add_option("--suite", suite, "smoke or full")
      ->check(CLI::IsMember({"smoke", "full"}))
      ->capture_default_str();
  ver_cmd->add_option("--only", only, "criterion numbers, e.g. 1,5..7");
  ver_cmd->add_flag("--quiet", quiet, "omit timing and progress lines");

  CLI11_PARSE(app, argc, argv);
  PrecisionScope precision(common.precision);

  try {
    if (*count_cmd) {
      auto m = count_model.build();
      std::map<std::string, BigInt> results;
      auto run = [&](const std::string& method) -> BigInt {
        if (method == "enum") return enumerate_count(m, cn, ch, ca, cb, ctilde, common.oracle_cap);
        if (method == "recursion") return RecursionCounter(m, ctilde).count(cn, ch, ca, cb);
        if (method == "series") {
          auto s = closed_form(m, {ch, ca, cb, ctilde}, cn);
          Rational c = s[cn];
          if (denominator(c) != 1) throw std::logic_error("non-integral series coefficient");
          return numerator(c);
        }
        CachedTable t(m, common);
        return t->count(cn, ch, ca, cb, ctilde);
      };
      if (!call) {
        std::cout << run(cmethod) << '\n';
        return 0;
      }
      bool agree = true;
      BigInt first;
      bool have = false;
      for (const char* method : {"dp", "recursion", "series", "enum"}) {
        BigInt v;
        try {
          v = run(method);
        } catch (const ResourceError& e) {
          std::cout << method << ": skipped (" << e.what() << ")\n";
          continue;
        }
        std::cout << method << ": " << v << '\n';
        if (have && v != first) agree = false;
        if (!have) first = v, have = true;
      }
      std::cout << (agree ? "agree" : "DISAGREE") << '\n';
      return agree ? 0 : 1;
    }

    if (*series_cmd) {
      auto m = series_model.build();
      std::cout << series_csv(closed_form(m, {sh, sa, sb, stilde}, common.series_order));
      return 0;
    }

    if (*gsd_cmd) {
      auto m = gsd_model.build();
      auto opts = ham_options(gsd_rep, common);
      opts.site0_penalty = gsd_pert;
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> header{"n", "dim", "gsd_spectral", "gsd_classes", "agree"};
      if (gsd_float) header.insert(header.end(), {"gsd_float", "gap"});
      bool all = true;
      for (int n : parse_list(gsd_n)) {
        Hamiltonian h(m, n, opts);
        auto k = exact_kernel(h);
        auto c = ground_classes(h);
        bool agree = k.dimension == c.surviving.size();
        std::vector<std::string> row{std::to_string(n), std::to_string(h.basis().size()), std::to_string(k.dimension),
                                     std::to_string(c.surviving.size()), agree ? "yes" : "no"};
        if (gsd_float) {
          SpectrumOptions so;
          so.dense_limit = common.dense_limit;
          auto fk = float_kernel(h.numeric(), so);
          agree = agree && !fk.ambiguous && fk.dimension == k.dimension;
          std::ostringstream gap;
          gap << std::setprecision(6) << fk.gap;
          row.push_back(std::to_string(fk.dimension) + (fk.ambiguous ? "?" : ""));
          row.push_back(gap.str());
        }
        all = all && agree;
        rows.push_back(row);
      }
      emit_table(common.format, header, rows);
      return all ? 0 : 1;
    }

    if (*ham_cmd) {
      auto m = ham_model.build();
      Hamiltonian h(m, hn, ham_options(ham_rep, common));
      std::ostringstream os;
      if (ham_basis) {
        for (std::size_t i = 0; i < h.basis().size(); ++i) os << i << ' ' << h.basis().label(h.basis().code(i)) << '\n';
      } else {
        os << (ham_float ? export_coordinates(h.numeric()) : export_coordinates(h.rational()));
      }
      if (ham_out.empty()) {
        std::cout << os.str();
      } else {
        std::ofstream out(ham_out);
        if (!out) throw UsageError("cannot write " + ham_out);
        out << os.str();
      }
      return 0;
    }

    if (*cls_cmd) {
      auto m = cls_model.build();
      Hamiltonian h(m, cls_n, ham_options(cls_rep, common));
      auto r = ground_classes(h);
      if (cls_members) {
        ordered_json out = ordered_json::array();
        for (const auto& g : r.surviving) {
          ordered_json state;
          state["sector"] = g.sector();
          std::string amp = "1/" + std::to_string(g.members.size()) + "^(1/2)";
          auto& mem = state["members"] = ordered_json::array();
          for (std::size_t s : g.members) mem.push_back({h.basis().label(h.basis().code(s)), amp});
          out.push_back(state);
        }
        std::cout << out.dump(2) << '\n';
        return 0;
      }
      std::vector<std::vector<std::string>> rows;
      for (const auto& g : r.surviving)
        rows.push_back({g.sector(), std::to_string(g.members.size()), g.seed});
      emit_table(common.format, {"sector", "size", "seed"}, rows);
      std::cerr << r.surviving.size() << " surviving of " << r.total_classes << " classes, basis "
                << r.basis_size << '\n';
      return 0;
    }

    if (*ent_cmd) {
      auto m = ent_model.build();
      auto [a, c] = parse_sector(ent_sector);
      auto ns = parse_list(ent_n);
      if (ent_method == "state") {
        std::vector<EntropyPoint> pts;
        for (int n : ns) {
          Hamiltonian h(m, 2 * n, ham_options("reduced", common));
          Walk seed;
          for (int j = 0; j < 2 * n; ++j) seed.steps.push_back({m.k(), a, a, m.colored() ? 1 : 0});
          if (a != c) throw UsageError("state method takes a diagonal sector");
          auto g = class_of(h, seed);
          if (!g || !g->survives()) throw UsageError("sector " + ent_sector + " has no ground state");
          pts.push_back({n, a, c, Real(entropy_from_state(h, *g).S), EntropyMethod::DensityMatrix});
        }
        std::cout << entropy_csv(m, pts);
        return 0;
      }
      CachedTable t(m, common);
      if (ent_fit) {
        std::cout << fit_json(entropy_scan_and_fit(*t, a, c, ns)) << '\n';
        return 0;
      }
      std::vector<EntropyPoint> pts;
      for (int n : ns) pts.push_back(entropy_from_counts(*t, n, a, c));
      if (ent_spectrum) {
        auto sp = schmidt_from_counts(*t, ns.back(), a, c);
        std::cout << "h,b,entry,p,multiplicity\n";
        for (const auto& e : sp.entries)
          std::cout << e.h << ',' << e.label.index << ',' << e.label.entry << ',' << format_real(to_real(e.p))
                    << ",2^" << e.log2_mult << '\n';
        return 0;
      }
      std::cout << entropy_csv(m, pts);
      return 0;
    }

    if (*phase_cmd) {
      auto ns = parse_list(phase_n);
      auto entropies = [&](const ModelSpec& m) {
        CachedTable t(m, common);
        std::vector<std::string> out;
        for (int n : ns) out.push_back(format_real(entropy_from_counts(*t, n, 1, 1).S, 8));
        return out;
      };
      auto gsd = [&](const ModelSpec& m) {
        return std::to_string(exact_kernel(Hamiltonian(m, phase_gsd_n, ham_options("reduced", common))).dimension);
      };
      std::vector<std::string> header{"regime", "GSD (n=" + std::to_string(phase_gsd_n) + ")"};
      for (int n : ns) header.push_back("S(" + std::to_string(n) + ")");
      header.push_back("law");
      auto row = [&](const std::string& name, const ModelSpec& m, const ModelSpec& counts, const std::string& law) {
        std::vector<std::string> r{name, gsd(m)};
        for (auto& s : entropies(counts)) r.push_back(s);
        r.push_back(law);
        return r;
      };
      std::cout << "## lambda axis\n\n";
      emit_table("md", header,
                 {row("s31 lambda>0", ModelSpec::s31(1), ModelSpec::s31(1), "area law"),
                  row("s31 lambda=0", ModelSpec::s31(0), ModelSpec::s31(0), "1/2 ln n")});
      std::cout << "\n## mu axis\n\n";
      emit_table("md", header,
                 {row("s32c2 mu=0 (homogeneous class)", ModelSpec::s32_case2(0), ModelSpec::s31(0), "1/2 ln n"),
                  row("s32c2 mu>0", ModelSpec::s32_case2(1), ModelSpec::s32_case2(1), "sqrt n")});
      std::cout << "\n## lambda1, lambda2 plane\n\n";
      std::vector<std::vector<std::string>> rows;
      for (auto [name, m] : std::vector<std::pair<std::string, ModelSpec>>{
               {"I (lambda1>0, lambda2=0)", ModelSpec::s31_phase(1, 0)},
               {"II (lambda1=0, lambda2=0)", ModelSpec::s31_phase(0, 0)},
               {"III (lambda1=0, lambda2>0)", ModelSpec::s31_phase(0, 1)}}) {
        std::vector<std::string> r{name};
        for (int n = 4; n <= 7; ++n) r.push_back(std::to_string(exact_kernel(Hamiltonian(m, n)).dimension));
        rows.push_back(r);
      }
      emit_table("md", {"phase", "GSD n=4", "n=5", "n=6", "n=7"}, rows);
      return 0;
    }

    if (*ver_cmd) {
      verify::Config cfg;
      cfg.suite = verify::parse_suite(suite);
      cfg.cache.emplace(CountCache::resolve_dir(common.cache_dir));
      if (!quiet) cfg.note = [](const std::string& s) { std::cerr << "  .. " << s << '\n'; };
      std::vector<int> ids;
      if (!only.empty()) ids = parse_list(only);
      bool ok = true;
      double total = 0;
      for (int id = 1; id <= verify::criterion_count(); ++id) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), id) == ids.end()) continue;
        auto r = verify::run_criterion(id, cfg);
        std::cout << verify::summary_line(r) << '\n';
        if (!quiet) std::cout << "  time " << std::fixed << std::setprecision(2) << r.seconds << "s\n";
        std::cout.flush();
        total += r.seconds;
        ok = ok && r.passed;
      }
      if (!quiet) std::cout << "total " << std::fixed << std::setprecision(2) << total << "s\n";
      std::cout << (ok ? "all checks passed" : "some checks failed") << '\n';
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
