#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "rlie/catalog.hpp"
#include "rlie/charpoly.hpp"
#include "rlie/errors.hpp"
#include "rlie/invariants.hpp"
#include "suites.hpp"

namespace rlie::cli {

namespace {

struct RunConfig {
  std::string catalog;
  std::string action_path;
  std::string group_path;
  std::string point;
  std::string generators;
  std::string suite = "all";
  std::string out_path;
  std::string format = "tsv";
  bool symbolic = false;
  bool allow_large = false;
  int max_degree = -1;
  int ext = 1;
  int estimate_ext = 4;
  int sample_ext = 4;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::optional<std::size_t> c;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using Target = std::variant<LieAction, ConstantGroupAction>;

Target resolve_target(const RunConfig& cfg) {
  const int given = !cfg.catalog.empty() + !cfg.action_path.empty() + !cfg.group_path.empty();
  if (given != 1) throw ParseError("give exactly one of --cat, --action, --group");
  if (!cfg.action_path.empty()) return parse_action(read_file(cfg.action_path));
  if (!cfg.group_path.empty()) return parse_group_action(read_file(cfg.group_path));
  if (is_group_catalog_name(cfg.catalog)) return catalog_group_action(cfg.catalog);
  return catalog_action(cfg.catalog);
}

const LieAction& lie_target(const Target& t) {
  if (!std::holds_alternative<LieAction>(t)) throw ParseError("this command needs a Lie algebra action");
  return std::get<LieAction>(t);
}

std::pair<int, int> wn_params(const std::string& name) {
  if (name.rfind("W:", 0) != 0) throw ParseError("charpoly needs a catalog name W:n:p");
  const auto g = name.find(':', 2);
  try {
    return {std::stoi(name.substr(2, g - 2)), std::stoi(name.substr(g + 1))};
  } catch (const std::logic_error&) {
    throw ParseError("bad catalog name '" + name + "'");
  }
}

Field field_for(int p, int e) {
  if (e < 1 || e > 4) throw BudgetExceeded("extension degree must be in 1..4");
  const Field F = Field::extension(p, e);
  if (F.order() > kMaxFieldOrder) throw BudgetExceeded("field order exceeds " + std::to_string(kMaxFieldOrder));
  return F;
}

std::vector<Elem> parse_point(const std::string& text, const Field& F, std::size_t dim) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size() || v < 0 || v >= static_cast<long long>(F.order())) throw ParseError("");
      out.push_back(F.element(static_cast<std::uint32_t>(v)));
    } catch (const std::exception&) {
      throw ParseError("bad point coordinate '" + item + "' (expected an integer in [0, " + std::to_string(F.order()) + "))");
    }
  }
  if (out.size() != dim)
    throw ParseError("point has " + std::to_string(out.size()) + " coordinates, expected " + std::to_string(dim));
  return out;
}

std::string join(const std::vector<Elem>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i].v);
  return s;
}

// Aligned columns for --format text; comment lines pass through.
std::string as_text(const std::string& tsv) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(tsv);
  std::string line;
  std::vector<std::size_t> width;
  std::vector<std::variant<std::size_t, std::string>> order;
  while (std::getline(ss, line)) {
    if (line.find('\t') == std::string::npos) {
      order.emplace_back(line);
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '\t')) cells.push_back(cell);
    if (width.size() < cells.size()) width.resize(cells.size(), 0);
    for (std::size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], cells[i].size());
    order.emplace_back(rows.size());
    rows.push_back(std::move(cells));
  }
  std::ostringstream os;
  for (const auto& o : order) {
    if (const auto* s = std::get_if<std::string>(&o)) {
      os << *s << '\n';
      continue;
    }
    const auto& cells = rows[std::get<std::size_t>(o)];
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out += cells[i];
      if (i + 1 < cells.size()) out += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    os << out << '\n';
  }
  return os.str();
}

std::string cmd_charpoly(const RunConfig& cfg) {
  const auto [n, p] = wn_params(cfg.catalog);
  std::ostringstream os;
  if (!cfg.point.empty()) {
    const WnAlgebra w = build_wn(n, p);
    const Field F = field_for(p, cfg.ext);
    const auto d = parse_point(cfg.point, F, w.dim());
    os << "field\tF_" << F.order() << '\n';
    os << "chi\t" << join(char_poly_at(w, F, d)) << '\n';
    const auto psi = char_poly_invariants_at(w, F, d);
    for (std::size_t i = 0; i < psi.size(); ++i) os << "psi_" << i << '\t' << psi[i].v << '\n';
    return os.str();
  }
  const auto psi = char_poly_invariants_symbolic(n, p, cfg.allow_large);
  for (std::size_t i = 0; i < psi.psi.size(); ++i) os << "psi_" << i << " = " << psi.psi[i].to_string(VarNames::xis()) << '\n';
  return os.str();
}

std::vector<Polynomial> parse_generators(const RunConfig& cfg, const LieAction& action) {
  if (cfg.generators == "psi") {
    const auto [n, p] = wn_params(cfg.catalog);
    return char_poly_invariants_symbolic(n, p, cfg.allow_large).psi;
  }
  std::vector<Polynomial> fs;
  std::stringstream ss(cfg.generators);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) fs.push_back(parse_polynomial(item, action.ring(), action.names()));
  return fs;
}

std::string cmd_invariants(const RunConfig& cfg) {
  if (cfg.max_degree < 0 || cfg.max_degree > 64) throw ParseError("--max-degree must be in 0..64");
  const Target target = resolve_target(cfg);
  std::ostringstream os;
  os << "degree\tdim_invariant\tdim_generated\tverdict\n";
  if (const auto* g = std::get_if<ConstantGroupAction>(&target)) {
    if (!cfg.generators.empty()) throw ParseError("--generators applies to Lie algebra actions");
    const auto inv = constant_invariants(*g, cfg.max_degree);
    if (g->is_quotient()) {
      os << "all\t" << inv.pieces.front().dim() << "\t-\t-\n";
    } else {
      for (std::size_t d = 0; d < inv.pieces.size(); ++d) os << d << '\t' << inv.pieces[d].dim() << "\t-\t-\n";
    }
    return os.str();
  }
  const LieAction& action = std::get<LieAction>(target);
  if (cfg.generators.empty()) {
    const auto inv = invariants_up_to_degree(action, cfg.max_degree);
    for (std::size_t d = 0; d < inv.pieces.size(); ++d) os << d << '\t' << inv.pieces[d].dim() << "\t-\t-\n";
    if (inv.filtered) os << "# non-graded action: row d counts invariants of degree <= d\n";
    return os.str();
  }
  const auto rep = check_generation(action, parse_generators(cfg, action), cfg.max_degree);
  for (const auto& r : rep.rows)
    os << r.degree << '\t' << r.dim_invariant << '\t' << r.dim_generated << '\t' << (r.equal ? "generated" : "not-generated")
       << '\n';
  os << "# verdict = " << (rep.generated() ? "generated" : "not generated") << '\n';
  return os.str();
}

std::size_t regular_c(const RunConfig& cfg, const LieAction& action, std::string& source) {
  if (cfg.c) {
    source = "given";
    return *cfg.c;
  }
  const std::size_t samples = cfg.samples ? cfg.samples : 50;
  source = "sampled (" + std::to_string(samples) + " points, seed " + std::to_string(cfg.seed) + ")";
  return estimate_c_g(action, cfg.seed, samples, cfg.estimate_ext).estimate;
}

std::string cmd_stabilizer(const RunConfig& cfg) {
  if (cfg.point.empty()) throw ParseError("stabilizer needs --point");
  const Target target = resolve_target(cfg);
  const LieAction& action = lie_target(target);
  const Field F = field_for(action.ring().p, cfg.ext);
  const RationalPoint x{F, parse_point(cfg.point, F, action.nvars())};
  const auto st = stabilizer(action, x);
  std::string source;
  const std::size_t c = regular_c(cfg, action, source);
  std::ostringstream os;
  os << "point\t" << x.to_string() << '\n';
  os << "field\tF_" << F.order() << '\n';
  os << "codim\t" << st.codim << '\n';
  os << "stabilizer_dim\t" << st.kernel.size() << '\n';
  for (const auto& k : st.kernel) os << "kernel\t" << join(k) << '\n';
  os << "c_g\t" << c << ' ' << source << '\n';
  os << "regular\t" << (st.codim == c ? "yes" : "no") << '\n';
  return os.str();
}

std::string cmd_regular(const RunConfig& cfg) {
  const Target target = resolve_target(cfg);
  const LieAction& action = lie_target(target);
  const std::size_t samples = cfg.samples ? cfg.samples : 200;
  field_for(action.ring().p, cfg.sample_ext);
  const auto rep = estimate_c_g(action, cfg.seed, samples, cfg.sample_ext);
  std::ostringstream os;
  os << "sample_index\tpoint\tcodim\n";
  for (std::size_t i = 0; i < rep.points.size(); ++i) os << i << '\t' << rep.points[i].to_string() << '\t' << rep.codims[i] << '\n';
  os << "# c_g = " << rep.estimate << '\n';
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of restricted Lie algebra actions over small finite fields", "rlie"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::size_t c_value = 0;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--seed", cfg.seed, "Random seed")->default_val(0);
    s->add_option("--out", cfg.out_path, "Write the report to this file");
    s->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"tsv", "text"}));
  };
  auto add_target = [&](CLI::App* s) {
    s->add_option("--cat", cfg.catalog, "Catalog name (W:n:p, torus:m:p, nil:m:p, swap:2:p, heis:3:p, counterexample, signline:p)");
    s->add_option("--action", cfg.action_path, "Action file");
    s->add_option("--group", cfg.group_path, "Constant group action file");
  };

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic-polynomial invariants of W_n");
  add_common(charpoly);
  charpoly->add_option("--cat", cfg.catalog, "W:n:p")->required();
  charpoly->add_flag("--symbolic", cfg.symbolic, "Generic psi_i as polynomials in the coordinates (default)");
  charpoly->add_option("--point", cfg.point, "Coordinates of D as field-element indices, comma separated");
  charpoly->add_option("--ext", cfg.ext, "Extension degree of the point field")->check(CLI::Range(1, 4));
  charpoly->add_flag("--allow-large", cfg.allow_large, "Allow the symbolic path for p^n = 8, 9");

  auto* invariants = app.add_subcommand("invariants", "Per-degree invariant dimensions and generation check");
  add_common(invariants);
  add_target(invariants);
  invariants->add_option("--max-degree", cfg.max_degree, "Largest degree")->required();
  invariants->add_option("--generators", cfg.generators, "'psi' or polynomials separated by ';'");
  invariants->add_flag("--allow-large", cfg.allow_large, "Allow the symbolic path for p^n = 8, 9");

  auto* stab = app.add_subcommand("stabilizer", "Stabilizer and regularity at a point");
  add_common(stab);
  add_target(stab);
  stab->add_option("--point", cfg.point, "Coordinates as field-element indices, comma separated")->required();
  stab->add_option("--ext", cfg.ext, "Extension degree of the point field")->check(CLI::Range(1, 4));
  auto* c_opt = stab->add_option("--c", c_value, "Known c_g; otherwise sampled");
  stab->add_option("--samples", cfg.samples, "Points used to estimate c_g")->check(CLI::Range(1, 100000));
  stab->add_option("--estimate-ext", cfg.estimate_ext, "Extension degree for the c_g estimate")->check(CLI::Range(1, 4));

  auto* regular = app.add_subcommand("regular", "Sampled codimensions and the c_g estimate");
  add_common(regular);
  add_target(regular);
  regular->add_option("--samples", cfg.samples, "Number of points")->check(CLI::Range(1, 100000));
  regular->add_option("--ext", cfg.sample_ext, "Extension degree of the sample field")->check(CLI::Range(1, 4));

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_common(verify);
  std::vector<std::string> allowed = suite_names();
  allowed.push_back("all");
  verify->add_option("--suite", cfg.suite, "Suite name")->check(CLI::IsMember(allowed));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }
  if (*c_opt) cfg.c = c_value;

  std::string report;
  int code = kOk;
  try {
    if (*charpoly) {
      report = cmd_charpoly(cfg);
    } else if (*invariants) {
      report = cmd_invariants(cfg);
    } else if (*stab) {
      report = cmd_stabilizer(cfg);
    } else if (*regular) {
      report = cmd_regular(cfg);
    } else {
      const auto results = run_suite(cfg.suite, cfg.seed);
      report = format_results(results);
      for (const auto& r : results)
        if (!r.pass) code = kVerificationFailure;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetError;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  if (cfg.format == "text") report = as_text(report);
  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << cfg.out_path << "'\n";
      return kUsageError;
    }
    f << report;
  } else {
    out << report;
  }
  return code;
}

}  // namespace rlie::cli
