#include "fatbetti/cli.hpp"

#include "fatbetti/analysis.hpp"
#include "fatbetti/fat_points.hpp"
#include "fatbetti/formulas.hpp"
#include "fatbetti/koszul.hpp"
#include "fatbetti/mapping_cone.hpp"
#include "fatbetti/splitting.hpp"
#include "fatbetti/subspace_ideal.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace fatbetti::cli {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Diagrams and JSON tables

std::string render_diagram(const BettiTable& table) {
  const int cols = std::max(0, table.max_index()) + 1;
  int top_row = 0;
  for (const auto& [key, v] : table.entries()) top_row = std::max(top_row, key.second - key.first);

  std::vector<std::string> labels{"total"};
  std::vector<std::vector<std::string>> cells(1);
  for (int i = 0; i < cols; ++i) cells[0].push_back(std::to_string(table.total(i)));
  for (int d = 0; d <= top_row; ++d) {
    labels.push_back(std::to_string(d));
    auto& row = cells.emplace_back();
    for (int i = 0; i < cols; ++i) {
      const auto v = table(i, i + d);
      row.push_back(v ? std::to_string(v) : ".");
    }
  }
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size() + 1);
  std::vector<std::size_t> width(static_cast<std::size_t>(cols), 1);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    os << std::setw(static_cast<int>(label_width)) << (labels[r] + ":");
    for (std::size_t i = 0; i < cells[r].size(); ++i)
      os << ' ' << std::setw(static_cast<int>(width[i])) << cells[r][i];
    os << '\n';
  }
  return os.str();
}

BettiTable parse_diagram(const std::string& text, int num_vars) {
  BettiTable table(num_vars);
  std::optional<std::vector<std::uint64_t>> totals;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::string label;
    if (!(tokens >> label) || label.rfind("--", 0) == 0) continue;
    if (label.size() < 2 || label.back() != ':') throw std::invalid_argument("bad diagram label: " + label);
    label.pop_back();
    std::vector<std::uint64_t> values;
    std::string tok;
    while (tokens >> tok) {
      if (tok == ".") {
        values.push_back(0);
        continue;
      }
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit) || (tok == "0" && label != "total"))
        throw std::invalid_argument("bad diagram token: " + tok);
      values.push_back(std::stoull(tok));
    }
    if (values.empty()) throw std::invalid_argument("diagram line without entries");
    if (label == "total") {
      totals = values;
      continue;
    }
    if (!std::all_of(label.begin(), label.end(), ::isdigit))
      throw std::invalid_argument("bad diagram row label: " + label);
    const int d = std::stoi(label);
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i]) table.set(static_cast<int>(i), static_cast<int>(i) + d, values[i]);
  }
  if (totals && totals->size() != static_cast<std::size_t>(std::max(0, table.max_index()) + 1))
    throw std::invalid_argument("totals line has the wrong number of columns");
  if (totals)
    for (std::size_t i = 0; i < totals->size(); ++i)
      if ((*totals)[i] != table.total(static_cast<int>(i)))
        throw std::invalid_argument("totals line disagrees with column " + std::to_string(i));
  return table;
}

json table_to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, v] : table.entries()) entries.push_back({key.first, key.second, v});
  return entries;
}

BettiTable table_from_json(const json& entries, int num_vars) {
  BettiTable t(num_vars);
  for (const auto& e : entries) t.set(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::uint64_t>());
  return t;
}

// ---------------------------------------------------------------------------
// Input

std::pair<IdealSource, std::optional<std::uint32_t>> parse_input(const json& doc) {
  if (!doc.is_object()) throw UsageError("input must be a JSON object");
  const int vars = doc.at("vars").get<int>();
  if (vars < 1) throw UsageError("vars must be positive");
  std::optional<std::uint32_t> characteristic;
  if (doc.contains("char")) characteristic = doc.at("char").get<std::uint32_t>();
  const ScalarField field{characteristic.value_or(ScalarField{}.characteristic)};

  const int sources = static_cast<int>(doc.contains("monomials")) +
                      static_cast<int>(doc.contains("fat_points_coordinate")) +
                      static_cast<int>(doc.contains("fat_points_explicit"));
  if (sources != 1)
    throw UsageError("input needs exactly one of monomials, fat_points_coordinate, fat_points_explicit");

  if (doc.contains("monomials")) {
    std::vector<Monomial> gens;
    for (const auto& e : doc.at("monomials")) {
      auto v = e.get<std::vector<int>>();
      if (static_cast<int>(v.size()) != vars) throw UsageError("exponent vector of the wrong length");
      if (std::any_of(v.begin(), v.end(), [](int x) { return x < 0; }))
        throw UsageError("negative exponent");
      gens.emplace_back(std::move(v));
    }
    return {MonomialIdeal(RingDescriptor(vars, field), std::move(gens)), characteristic};
  }
  FatPointConfig cfg;
  cfg.n = vars - 1;
  cfg.field = field;
  if (doc.contains("fat_points_coordinate")) {
    cfg.multiplicities = doc.at("fat_points_coordinate").get<std::vector<int>>();
  } else {
    std::vector<std::pair<int, std::vector<long long>>> pts;
    for (const auto& p : doc.at("fat_points_explicit"))
      pts.emplace_back(p.at("mult").get<int>(), p.at("coords").get<std::vector<long long>>());
    std::stable_sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto& [a, c] : pts) {
      cfg.multiplicities.push_back(a);
      cfg.coordinates.push_back(std::move(c));
    }
    if (cfg.coordinates.empty()) throw UsageError("fat_points_explicit is empty");
  }
  return {cfg, characteristic};
}

std::pair<IdealSource, std::optional<std::uint32_t>> read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  try {
    return parse_input(doc);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Jobs

namespace {

const char* method_name(Method m) {
  switch (m) {
    case Method::formula:
      return "formula";
    case Method::oracle:
      return "oracle";
    case Method::both:
      return "both";
  }
  return "?";
}

const char* command_name(Command c) {
  switch (c) {
    case Command::betti:
      return "betti";
    case Command::cwl:
      return "cwl";
    case Command::mult:
      return "mult";
    case Command::split:
      return "split";
    case Command::mapcone:
      return "mapcone";
  }
  return "?";
}

struct Formula {
  std::string name;
  BettiTable table;
};

bool all_equal_to(const std::vector<int>& v, int a) {
  return std::all_of(v.begin(), v.end(), [a](int x) { return x == a; });
}

std::optional<Formula> formula_for(const IdealSource& source) {
  if (const auto* I = std::get_if<MonomialIdeal>(&source)) {
    if (!is_stable(*I)) return std::nullopt;
    return Formula{"Eliahou-Kervaire", ek_stable_betti(*I)};
  }
  const auto& cfg = std::get<FatPointConfig>(source);
  if (!cfg.coordinate_placement()) return std::nullopt;
  const int n = cfg.n, r = cfg.num_points() - 1;
  const auto& a = cfg.multiplicities;
  if (r == 0) return Formula{"power of a variable ideal", power_betti(n, a[0], cfg.ring())};
  if (n >= 2 && r == 1) return Formula{"two points", two_points_betti(n, a[0], a[1])};
  if (n >= 2 && all_equal_to(a, 2)) return Formula{"double points", double_points_betti(n, r)};
  if (n >= 2 && all_equal_to(a, 3)) return Formula{"triple points", triple_points_betti(n, r)};
  return Formula{"componentwise pipeline", hh_pipeline_betti(cfg)};
}

int pieces_through(const FatPointConfig& cfg, std::optional<int> cap) {
  return std::max(subspace_degree_bound(cfg), cap.value_or(0));
}

BettiTable oracle_for(const IdealSource& source, std::optional<int> cap) {
  if (const auto* I = std::get_if<MonomialIdeal>(&source)) return koszul_betti(*I, cap);
  const auto& cfg = std::get<FatPointConfig>(source);
  if (cfg.coordinate_placement()) return koszul_betti(fat_point_ideal(cfg), cap);
  return with_field(cfg.field, [&](auto field) {
    return koszul_betti(fat_point_subspace_ideal(cfg, field, pieces_through(cfg, cap)), cap);
  });
}

IdealSource with_characteristic(IdealSource source, std::uint32_t p) {
  const ScalarField field{p};
  validate(field);
  if (auto* I = std::get_if<MonomialIdeal>(&source))
    return MonomialIdeal(RingDescriptor(I->ring().num_vars, field), I->gens());
  auto cfg = std::get<FatPointConfig>(source);
  cfg.field = field;
  cfg.validate();
  return cfg;
}

const FatPointConfig& coordinate_config(const IdealSource& source, const char* command) {
  const auto* cfg = std::get_if<FatPointConfig>(&source);
  if (!cfg || !cfg->coordinate_placement())
    throw UsageError(std::string(command) + " needs coordinate fat points (--fat-points)");
  return *cfg;
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string ideal_string(const MonomialIdeal& I) {
  if (const auto vars = I.variable_support()) {
    std::string s = "(";
    for (std::size_t k = 0; k < vars->size(); ++k) s += (k ? ", x" : "x") + std::to_string((*vars)[k]);
    return s + ")";
  }
  return I.to_string();
}

std::string comparison_line(const BettiTable& a, const BettiTable& b, const char* a_name, const char* b_name) {
  const auto diff = first_difference(a, b);
  if (!diff) return "MATCH";
  const auto [i, j] = *diff;
  return "MISMATCH at beta_{" + std::to_string(i) + "," + std::to_string(j) + "}: " + a_name + " " +
         std::to_string(a(i, j)) + ", " + b_name + " " + std::to_string(b(i, j));
}

struct Report {
  std::ostringstream text;
  json doc;
  int status = kOk;
};

void run_betti(const JobSpec& spec, const IdealSource& source, Method method, Report& rep) {
  std::optional<Formula> formula;
  if (method != Method::oracle) {
    formula = formula_for(source);
    if (!formula) throw UsageError("no closed formula for this input; use --method oracle");
  }
  std::optional<BettiTable> oracle;
  if (method != Method::formula) oracle = oracle_for(source, spec.cap);

  const std::string field_name = std::visit(
      [](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, MonomialIdeal>) return s.ring().field.name();
        else return s.field.name();
      },
      source);
  if (formula) {
    rep.text << "-- formula: " << formula->name << "\n" << render_diagram(formula->table);
    rep.doc["tables"].push_back({{"method", "formula"}, {"formula", formula->name}, {"entries", table_to_json(formula->table)}});
  }
  if (formula && oracle) rep.text << "\n";
  if (oracle) {
    rep.text << "-- oracle: Koszul homology over " << field_name << "\n" << render_diagram(*oracle);
    rep.doc["tables"].push_back({{"method", "oracle"}, {"field", field_name}, {"entries", table_to_json(*oracle)}});
  }
  if (formula && oracle) {
    const auto line = comparison_line(formula->table, *oracle, "formula", "oracle");
    rep.text << "\n" << line << "\n";
    rep.doc["verdicts"]["match"] = line == "MATCH";
    if (line != "MATCH") rep.status = kCheckFailed;
  }
}

void run_cwl(const JobSpec& spec, const IdealSource& source, Report& rep) {
  CwlReport r;
  if (const auto* I = std::get_if<MonomialIdeal>(&source)) {
    r = is_componentwise_linear(*I, 0, spec.cap);
  } else {
    const auto& cfg = std::get<FatPointConfig>(source);
    if (cfg.coordinate_placement()) {
      r = is_componentwise_linear(fat_point_ideal(cfg), 0, spec.cap);
    } else {
      r = with_field(cfg.field, [&](auto field) {
        return is_componentwise_linear(fat_point_subspace_ideal(cfg, field, pieces_through(cfg, spec.cap)));
      });
    }
  }
  rep.doc["verdicts"] = {{"componentwise_linear", r.componentwise_linear},
                         {"checked_degrees", r.checked_degrees},
                         {"failing_degrees", r.failing_degrees}};
  const std::string range = r.checked_degrees.empty()
                                ? "none"
                                : std::to_string(r.checked_degrees.front()) + ".." +
                                      std::to_string(r.checked_degrees.back());
  if (r.componentwise_linear) {
    rep.text << "componentwise linear (checked degrees " << range << ")\n";
  } else {
    rep.text << "NOT componentwise linear (fails at d=" << join(r.failing_degrees, ", d=") << ")\n";
    rep.status = kCheckFailed;
  }
}

void run_mult(const IdealSource& source, Report& rep) {
  const MultiplicityReport r = std::holds_alternative<MonomialIdeal>(source)
                                   ? check_multiplicity_conjecture(std::get<MonomialIdeal>(source))
                                   : check_multiplicity_conjecture(std::get<FatPointConfig>(source));
  rep.text << "codimension: " << r.codim << "\n"
           << "multiplicity: " << r.e << "\n"
           << "min shifts: " << join(r.min_shifts) << "\n"
           << "max shifts: " << join(r.max_shifts) << "\n"
           << "bounds: " << r.lower.str() << " <= " << r.e << " <= " << r.upper.str() << "\n";
  json verdicts = {{"codim", r.codim},
                   {"multiplicity", r.e},
                   {"min_shifts", r.min_shifts},
                   {"max_shifts", r.max_shifts},
                   {"lower", r.lower.str()},
                   {"upper", r.upper.str()},
                   {"lower_holds", r.lower_holds},
                   {"upper_holds", r.upper_holds}};
  if (r.closed_form) {
    rep.text << "closed-form upper bound: " << r.closed_form->str() << "\n";
    verdicts["closed_form"] = r.closed_form->str();
    verdicts["upper_within_closed_form"] = *r.upper_within_closed_form;
  }
  verdicts["holds"] = r.holds();
  rep.doc["verdicts"] = verdicts;
  rep.text << (r.holds() ? "bounds hold" : "bounds VIOLATED") << "\n";
  if (!r.holds()) rep.status = kCheckFailed;
}

void run_split(const JobSpec& spec, const IdealSource& source, Method method, Report& rep) {
  const auto& cfg = coordinate_config(source, "split");
  if (cfg.num_points() != 2 || cfg.n < 2) throw UsageError("split needs two fat points in P^n with n >= 2");
  const int n = cfg.n, a0 = cfg.multiplicities[0], a1 = cfg.multiplicities[1];
  const auto cand = fatabbi_split(n, a0, a1);
  const MonomialIdeal M = fat_point_ideal(cfg);
  const MonomialIdeal W = intersect(cand.U, cand.V);
  const auto verdict = verify_splitting(M, cand, 4096, spec.seed);

  rep.text << "U: " << cand.U.size() << " generators, V: " << cand.V.size()
           << " generators, U ∩ V: " << W.size() << " generators\n"
           << "splitting: " << to_string(verdict.kind) << " (" << verdict.reason << ")\n";
  json verdicts = {{"splitting", to_string(verdict.kind)}, {"reason", verdict.reason}};
  if (verdict.refuted()) {
    std::vector<std::string> w;
    for (const auto& m : verdict.witness) w.push_back(m.to_string());
    rep.text << "witness: ";
    for (std::size_t k = 0; k < w.size(); ++k) rep.text << (k ? ", " : "") << w[k];
    rep.text << "\n";
    verdicts["witness"] = w;
    rep.status = kCheckFailed;
  }
  if (method != Method::oracle) {
    const auto recombined = recombine_betti(u_betti(n, a0, a1), v_betti(n, a0, a1), ucapv_betti(n, a0, a1));
    const auto line = comparison_line(recombined, two_points_betti(n, a0, a1), "recombined", "two-point");
    rep.text << "\n-- recombined formula tables (U, V, U ∩ V)\n" << render_diagram(recombined)
             << "formula recombination vs two-point formula: " << line << "\n";
    rep.doc["tables"].push_back({{"method", "formula"}, {"entries", table_to_json(recombined)}});
    verdicts["formula_match"] = line == "MATCH";
    if (line != "MATCH") rep.status = kCheckFailed;
  }
  if (method != Method::formula) {
    const auto recombined = recombine_betti(koszul_betti(cand.U, spec.cap), koszul_betti(cand.V, spec.cap),
                                            koszul_betti(W, spec.cap));
    const auto line = comparison_line(recombined, koszul_betti(M, spec.cap), "recombined", "oracle");
    rep.text << "\n-- recombined oracle tables (U, V, U ∩ V)\n" << render_diagram(recombined)
             << "oracle recombination vs oracle: " << line << "\n";
    rep.doc["tables"].push_back({{"method", "oracle"}, {"entries", table_to_json(recombined)}});
    verdicts["oracle_match"] = line == "MATCH";
    if (line != "MATCH") rep.status = kCheckFailed;
  }
  rep.doc["verdicts"] = verdicts;
}

void run_mapcone(const JobSpec& spec, const IdealSource& source, Method method, Report& rep) {
  const auto& cfg = coordinate_config(source, "mapcone");
  const int n = cfg.n, r = cfg.num_points() - 1;
  const RingDescriptor ring = cfg.ring();
  MonomialIdeal seed(ring);
  std::vector<Monomial> additions;
  BettiTable seed_table;
  std::string family;
  if (n >= 2 && r == 1 && !all_equal_to(cfg.multiplicities, 2)) {
    if (spec.order == "descending") throw UsageError("--order descending applies to double points only");
    const int a0 = cfg.multiplicities[0], a1 = cfg.multiplicities[1];
    std::tie(seed, additions) = u_cone_order(n, a0, a1);
    seed_table = power_betti(n - 1, a0, ring);
    family = "U of the two-point split";
  } else if (n >= 2 && all_equal_to(cfg.multiplicities, 2)) {
    std::tie(seed, additions) = double_points_cone_order(n, r, spec.order == "descending");
    seed_table = r < n ? power_betti(n - r, 2, ring) : BettiTable::quotient_of_proper(ring.num_vars);
    family = "double points";
  } else {
    throw UsageError("mapcone supports two fat points or double points");
  }
  if (spec.order == "greedy") {
    const auto found = search_good_order(seed, additions);
    if (!found.found()) {
      rep.text << "greedy search stuck with " << found.stuck.size() << " additions left:";
      for (const auto& m : found.stuck) rep.text << " " << m.to_string();
      rep.text << "\n";
      rep.doc["verdicts"] = {{"order_found", false}};
      rep.status = kCheckFailed;
      return;
    }
    additions = found.order;
  } else if (spec.order != "standard" && spec.order != "descending") {
    throw UsageError("--order must be standard, descending or greedy");
  }

  const auto trace = iterate_cone(seed, seed_table, additions);
  rep.text << "-- " << family << ", seed " << seed.to_string() << ", " << trace.steps.size() << " steps\n";
  json steps = json::array();
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const auto& s = trace.steps[k];
    const std::string colon = ideal_string(s.colon);
    rep.text << "step " << k + 1 << ": " << s.added.to_string() << "  colon " << colon << "  "
             << (s.minimal() ? "ok" : s.variables ? "FLAGGED (regularity)" : "FLAGGED (not variable-generated)")
             << "\n";
    steps.push_back({{"added", s.added.to_string()}, {"colon", colon}, {"minimal", s.minimal()}});
  }
  rep.text << "certificate: " << (trace.certified ? "true" : "false") << "\n\n" << render_diagram(trace.table);
  rep.doc["tables"].push_back({{"method", "mapping cone"}, {"entries", table_to_json(trace.table)}});
  json verdicts = {{"certified", trace.certified}, {"steps", steps}};
  if (!trace.certified) rep.status = kCheckFailed;
  if (method != Method::formula) {
    const auto oracle = koszul_betti(trace.ideal, spec.cap);
    const auto line = comparison_line(trace.table, oracle, "cone", "oracle");
    rep.text << "\ncone table vs oracle: " << line << "\n";
    verdicts["match"] = line == "MATCH";
    if (line != "MATCH") rep.status = kCheckFailed;
  }
  rep.doc["verdicts"] = verdicts;
}

json parameters_of(const JobSpec& spec, const IdealSource& source, Method method) {
  json p = {{"method", method_name(method)}, {"seed", spec.seed}, {"order", spec.order}};
  if (spec.cap) p["cap"] = *spec.cap;
  if (const auto* I = std::get_if<MonomialIdeal>(&source)) {
    p["char"] = I->ring().field.characteristic;
    p["vars"] = I->ring().num_vars;
    std::vector<std::vector<int>> gens;
    for (const auto& g : I->gens()) gens.push_back(g.exponents());
    p["monomials"] = gens;
  } else {
    const auto& cfg = std::get<FatPointConfig>(source);
    p["char"] = cfg.field.characteristic;
    p["n"] = cfg.n;
    p["multiplicities"] = cfg.multiplicities;
    if (!cfg.coordinate_placement()) p["coordinates"] = cfg.coordinates;
  }
  return p;
}

}  // namespace

RunResult run(const JobSpec& spec) {
  if (!spec.source) throw UsageError("no ideal given; use --fat-points with --n, or --file");
  const bool explicit_points = std::holds_alternative<FatPointConfig>(*spec.source) &&
                               !std::get<FatPointConfig>(*spec.source).coordinate_placement();
  const std::uint32_t p =
      spec.characteristic.value_or(explicit_points || spec.command == Command::mult ? 0u : 32003u);
  const IdealSource source = with_characteristic(*spec.source, p);

  Method method = spec.method.value_or(Method::both);
  if (!spec.method && spec.command == Command::betti && !formula_for(source)) method = Method::oracle;

  Report rep;
  rep.doc = {{"command", command_name(spec.command)},
             {"parameters", parameters_of(spec, source, method)},
             {"tables", json::array()},
             {"verdicts", json::object()}};
  switch (spec.command) {
    case Command::betti:
      run_betti(spec, source, method, rep);
      break;
    case Command::cwl:
      run_cwl(spec, source, rep);
      break;
    case Command::mult:
      run_mult(source, rep);
      break;
    case Command::split:
      run_split(spec, source, method, rep);
      break;
    case Command::mapcone:
      run_mapcone(spec, source, method, rep);
      break;
  }
  return {rep.status, spec.format == Format::json ? rep.doc.dump(2) + "\n" : rep.text.str()};
}

// ---------------------------------------------------------------------------
// Argument parsing

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded Betti numbers of fat points and monomial ideals", "fatbetti"};
  app.require_subcommand(1, 1);

  std::string fat_points, file, method, format = "diagram", order = "standard";
  std::optional<int> n, cap;
  std::optional<std::uint32_t> characteristic;
  std::uint64_t seed = 1;

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"betti", "Betti table by closed formula and/or Koszul oracle"},
      {"cwl", "componentwise linearity test"},
      {"mult", "multiplicity and shift bounds"},
      {"split", "verify the two-point splitting"},
      {"mapcone", "iterated mapping cone trace"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--fat-points", fat_points, "coordinate fat-point multiplicities, e.g. 5,4");
    sub->add_option("--n", n, "projective dimension for --fat-points");
    sub->add_option("--file,--points-file", file, "JSON input file");
    sub->add_option("--method", method, "formula | oracle | both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    sub->add_option("--char", characteristic, "0 for rationals or a prime");
    sub->add_option("--cap", cap, "Koszul degree cap");
    sub->add_option("--format", format, "diagram | json")->check(CLI::IsMember({"diagram", "json"}));
    sub->add_option("--seed", seed, "seed for sampled splitting checks");
    sub->add_option("--order", order, "mapcone order: standard | descending | greedy")
        ->check(CLI::IsMember({"standard", "descending", "greedy"}));
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "fatbetti: " << e.what() << "\n";
    return kUsage;
  }

  try {
    JobSpec spec;
    const std::string name = app.get_subcommands().front()->get_name();
    spec.command = name == "betti"  ? Command::betti
                   : name == "cwl"  ? Command::cwl
                   : name == "mult" ? Command::mult
                   : name == "split" ? Command::split
                                     : Command::mapcone;
    if (!fat_points.empty() && !file.empty()) throw UsageError("give either --fat-points or --file, not both");
    if (!fat_points.empty()) {
      if (!n) throw UsageError("--fat-points needs --n");
      FatPointConfig cfg;
      cfg.n = *n;
      std::stringstream ss(fat_points);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int a = 0;
        try {
          a = std::stoi(tok, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == 0 || used != tok.size()) throw UsageError("bad multiplicity '" + tok + "'");
        cfg.multiplicities.push_back(a);
      }
      spec.source = cfg;
    } else if (!file.empty()) {
      if (n) throw UsageError("--n applies to --fat-points only");
      auto [source, file_char] = read_input_file(file);
      spec.source = std::move(source);
      if (!characteristic) characteristic = file_char;
    }
    if (!method.empty())
      spec.method = method == "formula" ? Method::formula : method == "oracle" ? Method::oracle : Method::both;
    spec.characteristic = characteristic;
    spec.cap = cap;
    spec.format = format == "json" ? Format::json : Format::diagram;
    spec.seed = seed;
    spec.order = order;

    const auto result = run(spec);
    out << result.output;
    return result.status;
  } catch (const UsageError& e) {
    err << "fatbetti: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "fatbetti: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "fatbetti: " << e.what() << "\n";
    return kComputation;
  }
}

}  // namespace fatbetti::cli
