#include "f4x/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "f4x/fibers.hpp"
#include "f4x/orbits.hpp"
#include "f4x/polycheck.hpp"
#include "f4x/rslocus.hpp"
#include "f4x/stabilizers.hpp"

namespace f4x {

using nlohmann::json;

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkippedBudget: return "skipped-budget";
  }
  return "?";
}

json count_json(unsigned __int128 c) {
  if (c >> 64 == 0) return static_cast<std::uint64_t>(c);
  return to_string(c);
}

int parse_rep(const std::string& text) { return OrbitTable::get().find(text).index; }

bool VerifyReport::any_fail() const {
  return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::kFail; });
}

bool VerifyReport::any_skipped() const {
  return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::kSkippedBudget; });
}

int VerifyReport::exit_code() const { return any_fail() ? 1 : any_skipped() ? 2 : 0; }

std::optional<std::string> VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::kFail) return c.id;
  return std::nullopt;
}

json VerifyReport::to_json() const {
  json out;
  out["tool"] = "f4x";
  out["version"] = kVersion;
  out["dataChecksum"] = OrbitTable::get().checksum();
  out["fieldDegrees"] = field_degrees;
  out["status"] = any_fail() ? "fail" : any_skipped() ? "pass-with-skips" : "pass";
  out["exitCode"] = exit_code();
  if (auto f = first_failure()) out["firstFailure"] = *f;
  json arr = json::array();
  for (const auto& c : checks) {
    json j;
    j["checkId"] = c.id;
    j["section"] = c.section;
    j["status"] = to_string(c.status);
    j["numbers"] = c.numbers;
    j["seconds"] = c.seconds;
    if (!c.message.empty()) j["message"] = c.message;
    arr.push_back(std::move(j));
  }
  out["checks"] = std::move(arr);
  return out;
}

const std::vector<std::string>& verify_sections() {
  static const std::vector<std::string> s = {"rootsys", "chevalley", "qpoly", "rs", "orbits", "stabilizers", "fibers", "global"};
  return s;
}

namespace {

struct Context {
  const VerifyOptions& opt;
  VerifyReport& report;
  std::map<int, Count> fibers;  // filled by the fiber section, reused by global

  std::vector<int> reps() const {
    if (opt.rep) return {*opt.rep};
    std::vector<int> all(24);
    for (int i = 0; i < 24; ++i) all[i] = i + 1;
    return all;
  }

  void run(const std::string& section, const std::string& id, const std::function<void(CheckRecord&)>& body) {
    CheckRecord r;
    r.id = id;
    r.section = section;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(r);
    } catch (const BudgetExceeded& e) {
      r.status = CheckStatus::kSkippedBudget;
      r.message = e.what();
    } catch (const std::exception& e) {
      r.status = CheckStatus::kFail;
      r.message = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.checks.push_back(std::move(r));
  }
};

void expect(CheckRecord& r, bool ok, const std::string& what = {}) {
  if (!ok) {
    r.status = CheckStatus::kFail;
    if (!what.empty()) r.message += (r.message.empty() ? "" : "; ") + what;
  }
}

void section_rootsys(Context& cx) {
  cx.run("rootsys", "roots.census", [](CheckRecord& r) {
    const auto& rs = RootSystem::get();
    int lng = 0;
    for (const auto& root : rs.roots()) lng += root.is_long();
    auto a = rs.derived_edges(), b = RootSystem::transcribed_edges();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    r.numbers = {{"roots", rs.roots().size()}, {"long", lng}, {"edges", a.size()}, {"diagramMatches", a == b}};
    expect(r, rs.roots().size() == 48 && lng == 24, "root census");
    expect(r, a == b, "regenerated diagram differs from transcription");
  });
  cx.run("rootsys", "weyl.census", [](CheckRecord& r) {
    const auto& W = WeylGroup::get();
    const auto dist = W.length_distribution();
    std::uint64_t flags = 0;
    for (std::size_t l = 0; l < dist.size(); ++l) flags += dist[l] << l;
    std::uint64_t product = 1;
    for (int d : {2, 6, 8, 12}) product *= (std::uint64_t{1} << d) - 1;
    r.numbers = {{"order", W.size()}, {"sumTwoToLength", flags}, {"degreeProduct", product},
                 {"classes", W.conjugacy_class_count()}};
    expect(r, W.size() == 1152, "order");
    expect(r, flags == product && flags == 197358525, "length generating function");
    expect(r, W.conjugacy_class_count() == 25, "class count");
  });
}

void section_chevalley(Context& cx) {
  cx.run("chevalley", "action.consistency", [](CheckRecord& r) {
    const auto c = adjoint_consistency_check(2);
    r.numbers = {{"comparisons", c.comparisons}, {"mismatches", c.mismatches.size()}, {"linearTerms", c.linear_terms},
                 {"quadraticTerms", c.quadratic_terms}, {"zeroWeightTerms", c.v0_terms}};
    expect(r, c.ok(), "action differs from the adjoint projection");
    expect(r, c.linear_terms > 0 && c.quadratic_terms > 0 && c.v0_terms > 0, "a coefficient regime was not exercised");
  });
  cx.run("chevalley", "isogeny", [](CheckRecord& r) {
    const auto& rs = RootSystem::get();
    bool twice = true;
    for (const auto& root : rs.roots()) {
      const Coeffs pp = phi_sharp(phi_sharp(root.coeffs));
      for (int i = 0; i < 4; ++i) twice = twice && pp[i] == 2 * root.coeffs[i];
    }
    VModule m(2);
    const auto& f = m.field();
    std::vector<Generator> gens;
    for (int a = 0; a < RootSystem::kNumRoots; ++a)
      for (Elem t : {Elem{1}, Elem{2}}) gens.push_back(RootElem{a, t});
    for (int i = 0; i < 4; ++i) gens.push_back(SimpleLift{i});
    gens.push_back(TorusElem{{2, 3, 1, 2}});
    bool equivariant = true, squaring = true;
    for (int c = 0; c < kDimV; ++c)
      for (Elem l : {Elem{1}, Elem{2}}) {
        const VElement e = VElement::basis(c, l);
        squaring = squaring && psi(f, psi(f, e)) == VElement::basis(c, f.frobenius(l));
        for (const auto& g : gens) equivariant = equivariant && psi(f, m.apply(g, e)) == m.apply(isogeny_image(f, g), psi(f, e));
      }
    const auto& t = OrbitTable::get();
    const bool five_six = psi(GF2k(1), t.at(5).rep()) == t.at(6).rep();
    json transports = json::array();
    bool all = true;
    for (const auto& tr : isogeny_transport_check()) {
      transports.push_back({{"from", tr.from}, {"to", tr.to}, {"ok", tr.ok}, {"method", tr.method}});
      all = all && tr.ok;
    }
    r.numbers = {{"phiSharpTwiceIsDoubling", twice}, {"equivariant", equivariant}, {"psiSquaredIsFrobenius", squaring},
                 {"psiXi5IsXi6", five_six}, {"transports", transports}};
    expect(r, twice, "phi# composed with itself is not 2");
    expect(r, equivariant, "psi is not equivariant");
    expect(r, squaring, "psi twice is not coefficient squaring");
    expect(r, five_six && all, "transport");
  });
}

void section_qpoly(Context& cx) {
  cx.run("qpoly", "qpoly.sum", [](CheckRecord& r) {
    const auto s = orbit_count_sum_check();
    const auto deg = degree_mismatches();
    const auto neg = negative_evaluations();
    r.numbers = {{"sumIsQ48", s.ok}, {"sumAt2", s.sum.evaluate(2).str()}, {"degreeMismatches", deg}, {"negativeRows", neg}};
    expect(r, s.ok, "sum minus q^48 = " + s.difference.to_string());
    expect(r, deg.empty(), "degree");
    expect(r, neg.empty(), "negative value");
  });
  cx.run("qpoly", "qpoly.orbit-stabilizer", [](CheckRecord& r) {
    json rows = json::array();
    for (const auto& rec : OrbitTable::get().orbits()) {
      const auto f = orbit_stabilizer_consistency(rec.index);
      json j = {{"id", rec.id}, {"ok", f.ok}, {"torusRanks", f.torus_ranks}};
      j["torusRank"] = f.torus_rank ? json(*f.torus_rank) : json(nullptr);
      if (!f.detail.empty()) j["detail"] = f.detail;
      rows.push_back(std::move(j));
      expect(r, f.ok, rec.id + ": " + f.detail);
    }
    r.numbers = {{"perOrbit", rows}, {"orderF4At2", f4_order().evaluate(2).str()}};
  });
}

void section_rs(Context& cx) {
  cx.run("rs", "rs.witness", [](CheckRecord& r) {
    const auto none = find_rs(1);
    const auto w = find_rs(2);
    r.numbers["f2Witness"] = none.has_value();
    expect(r, !none, "unexpected witness over F_2");
    expect(r, w.has_value(), "no witness over F_4");
    if (w) {
      const Count stab = rs_unipotent_stabilizer(*w);
      const bool eq = rs_equivariance_check(*w);
      r.numbers["f4Witness"] = w->v0;
      r.numbers["unipotentStabilizer"] = count_json(stab);
      r.numbers["weylEquivariant"] = eq;
      expect(r, stab == 1, "unipotent stabilizer of the witness is not trivial");
      expect(r, eq, "translate is not a witness");
    }
  });
}

void section_orbits(Context& cx) {
  const auto& t = OrbitTable::get();
  std::vector<int> done;
  for (int i : cx.reps()) {
    const OrbitRecord& rec = t.at(i);
    cx.run("orbits", "orbit." + rec.id, [&](CheckRecord& r) {
      const BigInt expected = rec.count.evaluate(2);
      r.numbers["table"] = expected.str();
      if (expected > BigInt(cx.opt.budget)) {
        r.status = CheckStatus::kSkippedBudget;
        r.message = "orbit count at q = 2 exceeds the budget";
        return;
      }
      OrbitOptions o;
      o.budget = cx.opt.budget;
      o.threads = cx.opt.threads;
      const auto set = bfs_orbit_set(rec.rep(), o);
      r.numbers["count"] = set->size();
      expect(r, BigInt(set->size()) == expected, "BFS count differs from the table");
      json others = json::array();
      for (const auto& other : t.orbits())
        if (other.index != i && set->contains(pack<1>(other.rep()))) others.push_back(other.id);
      r.numbers["containsOtherReps"] = others;
      expect(r, others.empty(), "orbits are not disjoint");
      done.push_back(i);
    });
  }
  cx.run("orbits", "orbit.b-orbits", [&](CheckRecord& r) {
    json rows = json::array();
    for (int i : cx.reps()) {
      const auto v = t.at(i).rep();
      const std::uint64_t b = b_orbit(v, 1);
      const Count u = u_stabilizer_count(v, 1);
      rows.push_back({{"id", t.at(i).id}, {"bOrbit", b}, {"uStab", count_json(u)}});
      expect(r, Count{b} * u == Count{1} << 24, t.at(i).id + ": B-orbit times stabilizer is not 2^24");
    }
    r.numbers["rows"] = rows;
  });
  cx.run("orbits", "weyl.obstruction", [&](CheckRecord& r) {
    const auto hits = weyl_obstruction_search(t.at(20).support, t.at(21).support);
    r.numbers["matches"] = hits.size();
    expect(r, hits.empty(), "some w carries the support of xi20 above xi21");
  });
}

void section_stabilizers(Context& cx) {
  const auto& t = OrbitTable::get();
  cx.run("stabilizers", "stab.counts", [&](CheckRecord& r) {
    json rows = json::array();
    for (int i : cx.reps()) {
      const OrbitRecord& rec = t.at(i);
      const Count fast = u_stabilizer_count(rec.rep(), 1);
      json j = {{"id", rec.id}, {"count", count_json(fast)}, {"log2", exact_log2(fast)}};
      if (cx.opt.oracle) {
        const Count slow = u_stabilizer_count(rec.rep(), 1, true);
        j["oracleAgrees"] = slow == fast;
        expect(r, slow == fast, rec.id + ": oracle disagrees");
      }
      expect(r, exact_log2(fast) >= 0, rec.id + ": not a power of 2");
      if (i == 1) expect(r, fast == Count{1} << 24, "xi1 stabilizer");
      rows.push_back(std::move(j));
    }
    r.numbers["rows"] = rows;
  });
  cx.run("stabilizers", "stab.dimensions", [&](CheckRecord& r) {
    json rows = json::array(), exceptions = json::array();
    for (int i : cx.reps()) {
      const OrbitRecord& rec = t.at(i);
      const auto d = stabilizer_dimension(rec);
      const int phi = static_cast<int>(phi_geq(rec.support).size());
      rows.push_back({{"id", rec.id}, {"log2", d.log2}, {"torusRank", d.torus_rank}, {"components", d.components},
                      {"computedDim", d.log2 + d.torus_rank - (d.components == 2 ? 1 : 0)}, {"tableDim", d.expected_dim},
                      {"phiGeq", phi}, {"tablePhiGeq", rec.phi_geq_size}});
      if (!d.ok || d.torus_rank != d.torus_rank_lattice || phi != rec.phi_geq_size) exceptions.push_back(rec.id);
    }
    r.numbers["rows"] = rows;
    r.numbers["exceptions"] = exceptions;
    expect(r, exceptions.empty(), "rows disagreeing with the table: " + exceptions.dump());
  });
  if (!cx.opt.rep || *cx.opt.rep == 17) {
    cx.run("stabilizers", "stab.xi17-fixers", [](CheckRecord& r) {
      const auto c = order6_census();
      const auto sus = sus_identity_check();
      json words = json::object();
      for (const auto& [label, fixes] : c.words) words[label] = fixes;
      r.numbers = {{"words", words}, {"uInvolution", c.u_involution}, {"sInvolution", c.s_involution}, {"susIdentity", sus.ok}};
      expect(r, c.ok(), "fixing elements");
      expect(r, sus.ok, "s u s identity");
    });
  }
}

void section_fibers(Context& cx) {
  const auto& t = OrbitTable::get();
  for (int i : cx.reps()) {
    const OrbitRecord& rec = t.at(i);
    cx.run("fibers", "fiber." + rec.id, [&](CheckRecord& r) {
      const auto p = fiber_count(rec.rep(), cx.opt.threads);
      cx.fibers[i] = p.total;
      r.numbers["total"] = count_json(p.total);
      int nonempty = 0;
      bool powers = true;
      for (Count c : p.cells)
        if (c) ++nonempty, powers = powers && exact_log2(c) >= 0;
      r.numbers["nonemptyCells"] = nonempty;
      int k_max = p.max_exponent();
      if (rec.component_group == ComponentGroup::kS3) {
        const auto c = xi17_cell_census(cx.opt.threads);
        k_max = c.k_max;
        r.numbers["singleCells"] = c.n_single;
        r.numbers["doubleCells"] = c.m_double;
        r.numbers["doublesAlpha14"] = c.doubles_satisfy_alpha14;
        r.numbers["doublesAlpha12"] = c.doubles_satisfy_alpha12;
        expect(r, c.pieces_ok, "a cell is not 2^k or 2^k + 2^j");
        expect(r, c.doubles_satisfy_alpha14, "double cell condition");
        expect(r, fixed_locus_formula_check(), "limit point formula");
      } else {
        expect(r, powers, "a cell count is not a power of 2");
      }
      const auto s = semismall_check(k_max, rec);
      r.numbers["semismall"] = {{"kMax", s.k_max}, {"bound", s.bound}, {"equality", s.equality}};
      expect(r, s.ok, "semismall bound");
      const auto cc = cocharacter_check(i);
      r.numbers["cocharacterOk"] = cc.ok;
      expect(r, cc.ok, "cocharacter pairings");
      if (i == 1) expect(r, p.total == 197358525, "xi1 fiber");
      if (i == 24) expect(r, p.total == 1, "xi24 fiber");
    });
  }
}

void section_global(Context& cx) {
  cx.run("global", "global.identity", [&](CheckRecord& r) {
    std::vector<Count> fibers(24);
    for (int i = 1; i <= 24; ++i) {
      auto it = cx.fibers.find(i);
      fibers[i - 1] = it != cx.fibers.end() ? it->second : fiber_count(OrbitTable::get().at(i).rep(), cx.opt.threads).total;
    }
    const Count twisted = fiber_count(xi17_twisted_form(), cx.opt.threads).total;
    const auto g = global_identity_check(fibers, twisted);
    r.numbers = {{"lhs", g.lhs.str()}, {"rhs", g.rhs.str()}, {"difference", BigInt(g.lhs - g.rhs).str()},
                 {"twistedLhs", g.lhs_twisted.str()}, {"twistedHolds", g.ok_twisted},
                 {"twistedFormCheck", xi17_twisted_form_check()}, {"xi17TwistedFiber", count_json(twisted)}};
    expect(r, g.ok, "sum of orbit counts times fibers differs from #(G/B)(F_2) * 2^24");
  });
}

}  // namespace

VerifyReport verify(const VerifyOptions& opt) {
  for (const auto& s : opt.sections)
    if (std::find(verify_sections().begin(), verify_sections().end(), s) == verify_sections().end())
      throw std::invalid_argument("unknown section '" + s + "'");
  if (opt.rep && (*opt.rep < 1 || *opt.rep > 24)) throw std::invalid_argument("rep must be xi1 .. xi24");
  VerifyReport report;
  report.field_degrees = {1, 2};
  Context cx{opt, report, {}};
  const std::map<std::string, std::function<void(Context&)>> table = {
      {"rootsys", section_rootsys}, {"chevalley", section_chevalley}, {"qpoly", section_qpoly},
      {"rs", section_rs},           {"orbits", section_orbits},       {"stabilizers", section_stabilizers},
      {"fibers", section_fibers},   {"global", section_global}};
  for (const auto& s : verify_sections())
    if (opt.sections.empty() || std::find(opt.sections.begin(), opt.sections.end(), s) != opt.sections.end()) table.at(s)(cx);
  return report;
}

}  // namespace f4x
