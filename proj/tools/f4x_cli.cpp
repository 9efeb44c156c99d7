#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "f4x/fibers.hpp"
#include "f4x/orbits.hpp"
#include "f4x/polycheck.hpp"
#include "f4x/rslocus.hpp"
#include "f4x/stabilizers.hpp"
#include "f4x/verify.hpp"

using namespace f4x;
using nlohmann::json;

namespace {

struct Globals {
  std::string json_path;
  std::string field = "2";
  std::string rep = "xi1";
  std::string budget = "2^28";
  int threads = 1;
  bool oracle = false;
};

// Field order q = 2^n -> n.
int field_degree(const std::string& text) {
  const int q = std::stoi(text);
  for (int n = 1; n <= 4; ++n)
    if (q == 1 << n) return n;
  throw std::invalid_argument("--field must be one of 2, 4, 8, 16");
}

std::uint64_t parse_budget(const std::string& text) {
  const auto caret = text.find('^');
  if (caret == std::string::npos) return std::stoull(text);
  const auto base = std::stoull(text.substr(0, caret));
  const auto exp = std::stoi(text.substr(caret + 1));
  if (base != 2 || exp < 0 || exp > 63) throw std::invalid_argument("budget must be N or 2^k");
  return std::uint64_t{1} << exp;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string word_string(const std::vector<int>& word) {
  std::string s;
  for (int g : word) s += std::to_string(g + 1);
  return s.empty() ? "e" : s;
}

void emit(const Globals& g, const json& j) {
  std::cout << j.dump(2) << "\n";
  if (!g.json_path.empty()) {
    std::ofstream out(g.json_path);
    if (!out) throw std::runtime_error("cannot write " + g.json_path);
    out << j.dump(2) << "\n";
  }
}

int cmd_roots(const Globals& g) {
  const auto& rs = RootSystem::get();
  const auto& W = WeylGroup::get();
  json roots = json::array();
  for (int i = 0; i < RootSystem::kNumRoots; ++i) {
    const auto& r = rs.root(i);
    roots.push_back({{"index", i}, {"label", root_label(r.coeffs)}, {"long", r.is_long()}, {"height", r.height()}});
  }
  std::uint64_t flags = 0;
  const auto dist = W.length_distribution();
  for (std::size_t l = 0; l < dist.size(); ++l) flags += dist[l] << l;
  emit(g, {{"roots", roots},
           {"weyl", {{"order", W.size()}, {"lengthDistribution", dist}, {"sumTwoToLength", flags}, {"classes", W.conjugacy_class_count()}}}});
  return 0;
}

int cmd_weyl_search(const Globals& g, const std::string& from, const std::string& to) {
  const auto& t = OrbitTable::get();
  const auto hits = weyl_obstruction_search(t.find(from).support, t.find(to).support);
  json words = json::array();
  for (auto k : hits) words.push_back(word_string(WeylGroup::get().elements()[k].word));
  emit(g, {{"from", t.find(from).id}, {"to", t.find(to).id}, {"matches", words}, {"empty", hits.empty()}});
  return 0;
}

int cmd_orbit(const Globals& g, bool borel) {
  const auto& rec = OrbitTable::get().find(g.rep);
  const int n = field_degree(g.field);
  const auto t0 = std::chrono::steady_clock::now();
  json j = {{"rep", rec.id}, {"field", 1 << n}};
  if (borel) {
    j["bOrbit"] = b_orbit(rec.rep(), n);
    j["seconds"] = since(t0);
    emit(g, j);
    return 0;
  }
  const BigInt expected = rec.count.evaluate(BigInt(1) << n);
  j["tableCount"] = expected.str();
  OrbitOptions opt;
  opt.budget = parse_budget(g.budget);
  opt.threads = g.threads;
  if (expected > BigInt(opt.budget)) {
    j["count"] = nullptr;
    j["skipped"] = "budget";
    emit(g, j);
    return 2;
  }
  try {
    const auto count = bfs_orbit(rec.rep(), n, opt);
    j["count"] = count;
    j["matchesTable"] = BigInt(count) == expected;
    j["seconds"] = since(t0);
    emit(g, j);
    return BigInt(count) == expected ? 0 : 1;
  } catch (const BudgetExceeded& e) {
    j["count"] = nullptr;
    j["partial"] = e.partial;
    j["skipped"] = "budget";
    j["seconds"] = since(t0);
    emit(g, j);
    return 2;
  }
}

int cmd_stab(const Globals& g) {
  const auto& rec = OrbitTable::get().find(g.rep);
  const int n = field_degree(g.field);
  const auto t0 = std::chrono::steady_clock::now();
  const Count c = u_stabilizer_count(rec.rep(), n);
  json j = {{"rep", rec.id}, {"field", 1 << n}, {"uStabCount", count_json(c)}, {"log2", exact_log2(c)}};
  bool ok = exact_log2(c) >= 0;
  if (g.oracle) {
    const bool agrees = u_stabilizer_count(rec.rep(), n, true) == c;
    j["oracleAgrees"] = agrees;
    ok = ok && agrees;
  }
  j["seconds"] = since(t0);
  emit(g, j);
  return ok ? 0 : 1;
}

int cmd_fiber(const Globals& g, const std::string& profile, const std::string& csv) {
  const auto& rec = OrbitTable::get().find(g.rep);
  const int n = field_degree(g.field);
  const auto p = fiber_count(rec.rep(), g.threads, n);
  const auto& W = WeylGroup::get();
  json cells = json::array();
  for (std::size_t k = 0; k < W.size(); ++k)
    if (p.cells[k]) cells.push_back({{"w", word_string(W.elements()[k].word)}, {"count", count_json(p.cells[k])}});
  int k_max = p.max_exponent();
  json j = {{"rep", rec.id}, {"field", 1 << n}, {"total", count_json(p.total)}, {"seconds", p.seconds}};
  if (n == 1 && rec.component_group == ComponentGroup::kS3) {
    const auto c = xi17_cell_census(g.threads);
    k_max = c.k_max;
    j["singleCells"] = c.n_single;
    j["doubleCells"] = c.m_double;
  }
  const auto s = semismall_check(n == 1 ? k_max : k_max / n, rec);
  j["semismall"] = {{"kMax", s.k_max}, {"bound", s.bound}, {"equality", s.equality}, {"ok", s.ok}};
  if (!profile.empty()) {
    std::ofstream out(profile);
    out << json{{"rep", rec.id}, {"field", 1 << n}, {"cells", cells}}.dump(2) << "\n";
  }
  if (!csv.empty()) {
    std::ofstream out(csv);
    out << "w,length,count\n";
    for (std::size_t k = 0; k < W.size(); ++k)
      out << word_string(W.elements()[k].word) << "," << W.elements()[k].length << "," << to_string(p.cells[k]) << "\n";
  }
  j["cells"] = cells;
  emit(g, j);
  return s.ok ? 0 : 1;
}

int cmd_qcheck(const Globals& g) {
  const auto s = orbit_count_sum_check();
  json rows = json::array();
  bool ok = s.ok;
  for (const auto& rec : OrbitTable::get().orbits()) {
    const auto f = orbit_stabilizer_consistency(rec.index);
    rows.push_back({{"id", rec.id}, {"torusRank", f.torus_rank ? json(*f.torus_rank) : json(nullptr)}, {"ok", f.ok}});
    ok = ok && f.ok;
  }
  const bool degrees = degree_mismatches().empty();
  emit(g, {{"sumIsQ48", s.ok}, {"perOrbit", rows}, {"degreesOk", degrees}});
  return ok && degrees ? 0 : 1;
}

int cmd_rs(const Globals& g) {
  const int n = field_degree(g.field);
  const auto w = find_rs(n);
  json j = {{"field", 1 << n}, {"found", w.has_value()}};
  if (w) {
    j["v0"] = w->v0;
    j["values"] = w->values;
    j["unipotentStabilizer"] = count_json(rs_unipotent_stabilizer(*w));
    j["weylEquivariant"] = rs_equivariance_check(*w);
  }
  emit(g, j);
  return 0;
}

int cmd_verify(const Globals& g, bool all, const std::vector<std::string>& sections, bool rep_given) {
  VerifyOptions opt;
  if (!all) opt.sections = sections;
  if (rep_given) opt.rep = parse_rep(g.rep);
  opt.budget = parse_budget(g.budget);
  opt.threads = g.threads;
  opt.oracle = g.oracle;
  const auto report = verify(opt);
  emit(g, report.to_json());
  if (auto f = report.first_failure()) std::cerr << "first failing check: " << *f << "\n";
  return report.exit_code();
}

int cmd_dump_tables(const Globals& g, bool text) {
  const auto& t = OrbitTable::get();
  if (text) {
    std::printf("%-5s %-22s %5s %4s %-6s %6s %6s %-40s %s\n", "id", "support", "dimG", "A", "type", "dimB", "#Phi", "count", "q=2");
    for (const auto& r : t.orbits()) {
      std::string sup;
      for (const auto& l : r.support_labels()) sup += (sup.empty() ? "" : ",") + l;
      std::printf("%-5s %-22s %5d %4s %-6s %6d %6d %-40s %s\n", r.id.c_str(), sup.c_str(), r.dim_stab,
                  r.component_group == ComponentGroup::kS3 ? "S3" : "1", r.reductive_type.c_str(), r.dim_b_stab,
                  r.phi_geq_size, r.count_text.c_str(), r.count.evaluate(2).str().c_str());
    }
    std::printf("checksum %s\n", t.checksum().c_str());
    return 0;
  }
  json data = json::parse(t.source());
  data["checksum"] = t.checksum();
  emit(g, data);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orbit, stabilizer and fiber computations for the F4 module in characteristic 2"};
  app.require_subcommand(1);
  Globals g;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--json", g.json_path, "Also write the JSON report to this path");
    s->add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1, 256));
  };
  auto add_rep = [&](CLI::App* s) { return s->add_option("--rep", g.rep, "Representative, e.g. xi17"); };
  auto add_field = [&](CLI::App* s) { s->add_option("--field", g.field, "Field order 2, 4, 8 or 16"); };

  auto* roots = app.add_subcommand("roots", "Root table and Weyl census");
  add_common(roots);

  std::string from = "xi20", to = "xi21";
  auto* ws = app.add_subcommand("weyl-search", "Weyl elements carrying one support above another");
  ws->add_option("--from", from);
  ws->add_option("--to", to);
  add_common(ws);

  bool borel = false;
  auto* orbit = app.add_subcommand("orbit", "G(F_q)-orbit size by breadth-first search");
  add_rep(orbit);
  add_field(orbit);
  orbit->add_option("--budget", g.budget, "Maximum set entries, N or 2^k");
  orbit->add_flag("--borel", borel, "B(F_q)-orbit instead");
  add_common(orbit);

  auto* stab = app.add_subcommand("stab", "U(F_q)-stabilizer count");
  add_rep(stab);
  add_field(stab);
  stab->add_flag("--oracle", g.oracle, "Cross-check with plain enumeration (F_2 only)");
  add_common(stab);

  std::string profile, csv;
  auto* fiber = app.add_subcommand("fiber", "Fiber point count, cell by cell");
  add_rep(fiber);
  add_field(fiber);
  fiber->add_option("--profile", profile, "Write the nonzero cells as JSON");
  fiber->add_option("--csv", csv, "Write all cells as CSV");
  add_common(fiber);

  auto* qcheck = app.add_subcommand("qcheck", "Polynomial identities of the orbit table");
  add_common(qcheck);

  auto* rs = app.add_subcommand("rs", "Regular semisimple witness search");
  add_field(rs);
  add_common(rs);

  bool all = false;
  std::vector<std::string> sections;
  auto* ver = app.add_subcommand("verify", "Run the verification pipeline");
  ver->add_flag("--all", all, "Every section");
  ver->add_option("--section", sections, "Section(s) to run")->check(CLI::IsMember(verify_sections()));
  auto* ver_rep = add_rep(ver);
  ver->add_option("--budget", g.budget, "Maximum BFS set entries, N or 2^k");
  ver->add_flag("--oracle", g.oracle, "Plain enumeration for stabilizer counts");
  add_common(ver);

  bool text = false;
  auto* dump = app.add_subcommand("dump-tables", "Print the orbit tables");
  dump->add_flag("--text", text, "Aligned text instead of JSON");
  add_common(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*roots) return cmd_roots(g);
    if (*ws) return cmd_weyl_search(g, from, to);
    if (*orbit) return cmd_orbit(g, borel);
    if (*stab) return cmd_stab(g);
    if (*fiber) return cmd_fiber(g, profile, csv);
    if (*qcheck) return cmd_qcheck(g);
    if (*rs) return cmd_rs(g);
    if (*ver) return cmd_verify(g, all, sections, ver_rep->count() > 0);
    if (*dump) return cmd_dump_tables(g, text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
