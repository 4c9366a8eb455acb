#include <jetchern/jet_sheaf.hpp>

#include <sstream>
#include <stdexcept>

namespace jetchern {

std::vector<std::pair<WeightedPartition, SurfaceChern>> gg_factors(unsigned k, unsigned m) {
  if (k == 0 || m == 0) throw std::domain_error("gg_factors: k and m must be positive");
  std::vector<std::pair<WeightedPartition, SurfaceChern>> out;
  for (const auto& I : enumerate_weighted(m, k)) out.push_back({I, factor_bundle(I)});
  return out;
}

JetSheafReport jet_chern_surface(unsigned k, unsigned m) {
  JetSheafReport rep;
  rep.k = k;
  rep.m = m;
  SurfaceChern total = zero_bundle();
  for (auto& [I, ch] : gg_factors(k, m)) {
    JetRow r;
    r.I = I;
    r.ch = ch;
    r.delta_a = ch.a1 * ch.a1 - ch.a2;
    r.delta_b = -ch.b2;
    r.mu = ch.a1 / Rat(ch.rank);
    total = whitney(total, ch);
    rep.rows.push_back(std::move(r));
  }
  rep.total = total;
  rep.delta_a = total.a1 * total.a1 - total.a2;
  rep.delta_b = -total.b2;
  rep.mu_total = total.a1 / Rat(total.rank);
  return rep;
}

CurveChern jet_chern_curve(unsigned k, unsigned m) {
  if (k == 0 || m == 0) throw std::domain_error("jet_chern_curve: k and m must be positive");
  return CurveChern{q_weighted_count(m, k), Rat(total_length(m, k))};
}

int ErratumReport::matches() const {
  int n = 0;
  for (const auto& c : cells) n += c.match ? 1 : 0;
  return n;
}

int ErratumReport::mismatches() const {
  int n = 0;
  for (const auto& c : cells) n += c.match ? 0 : 1;
  return n;
}

std::string partition_label(const WeightedPartition& I) {
  std::ostringstream os;
  os << "(";
  for (size_t j = 0; j < I.i.size(); ++j) os << (j ? "," : "") << I.i[j];
  os << ")";
  return os.str();
}

std::string class_string(const Rat& a, const Rat& b) {
  // render e.g. "34c1^2+11c2"; keeps signs explicit so a diff reads naturally
  std::string s = rat_string(a) + "c1^2";
  s += (b < 0 ? "" : "+") + rat_string(b) + "c2";
  return s;
}

namespace {

void compare(ErratumReport& rep, const std::string& table, const std::string& cell,
             const std::string& paper, const std::string& oracle) {
  rep.cells.push_back({table, cell, paper, oracle, paper == oracle});
}

void compare_row(ErratumReport& rep, const std::string& table, const std::string& label,
                 const GoldenRow& g, const Int& rank, const Rat& c1, const Rat& c2a,
                 const Rat& c2b, const Rat& da, const Rat& db, const Rat& mu) {
  if (g.rank) compare(rep, table, label + " rank", g.rank->str(), rank.str());
  if (g.c1) compare(rep, table, label + " c1", rat_string(*g.c1), rat_string(c1));
  if (g.c2_a) compare(rep, table, label + " c2", class_string(*g.c2_a, *g.c2_b),
                      class_string(c2a, c2b));
  if (g.delta_a) compare(rep, table, label + " Delta", class_string(*g.delta_a, *g.delta_b),
                         class_string(da, db));
  if (g.mu) compare(rep, table, label + " mu", rat_string(*g.mu), rat_string(mu));
}

}  // namespace

ErratumReport verify_tables() {
  ErratumReport rep;
  for (const auto& t : golden_tables()) {
    const JetSheafReport comp = jet_chern_surface(t.k, t.m);
    for (const auto& grow : t.rows) {
      const JetRow* found = nullptr;
      for (const auto& crow : comp.rows)
        if (crow.I == grow.I) {
          found = &crow;
          break;
        }
      if (!found) throw std::logic_error("verify_tables: golden row has no computed partner");
      compare_row(rep, t.name, partition_label(grow.I), grow, found->ch.rank, found->ch.a1,
                  found->ch.a2, found->ch.b2, found->delta_a, found->delta_b, found->mu);
    }
    compare_row(rep, t.name, "totals", t.totals, comp.total.rank, comp.total.a1,
                comp.total.a2, comp.total.b2, comp.delta_a, comp.delta_b, comp.mu_total);
    for (const auto& n : t.notes) rep.notes.push_back(t.name + ": " + n);
  }
  for (const auto& [m, rows] : golden_dim_tables()) {
    const std::string table = "dim m=" + std::to_string(m);
    for (const auto& r : rows) {
      std::string label = "(";
      for (size_t i = 0; i < r.lambda.parts.size(); ++i)
        label += (i ? "," : "") + std::to_string(r.lambda.parts[i]);
      label += ")";
      compare(rep, table, label + " rho", std::to_string(r.rho),
              std::to_string(r.lambda.rho()));
      compare(rep, table, label + " d", r.d.str(), irrep_dimension(r.lambda).str());
    }
  }
  return rep;
}

}  // namespace jetchern
