#include "kummer/report.hpp"

#include <algorithm>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "kummer/version.hpp"

namespace kummer {

namespace {

using ojson = nlohmann::ordered_json;

std::string degree_cell(const std::optional<unsigned>& d) { return d ? std::to_string(*d) : "NE"; }

// l-equivalence partitions of U_r from L(U_r) until every class is a singleton.
std::vector<std::pair<unsigned, std::vector<IndexSet>>> class_figures(const InvariantTable& table, unsigned r) {
  std::vector<std::pair<unsigned, std::vector<IndexSet>>> out;
  const IndexSet& ur = table.u_of(r);
  for (unsigned l = level(table, ur); l <= table.ctx.n(); ++l) {
    auto classes = equiv_classes(table, ur, l);
    const bool singletons = classes.size() == ur.size();
    out.emplace_back(l, std::move(classes));
    if (singletons) break;
  }
  return out;
}

ojson group_json(const AbelianPGroup& g) {
  return ojson{{"factors", g.orders()}, {"string", g.to_string()}};
}

void pad_row(std::ostringstream& os, const std::vector<std::string>& cells, const std::vector<std::size_t>& widths) {
  for (std::size_t k = 0; k < cells.size(); ++k) {
    os << (k == 0 ? "  " : " | ") << std::left << std::setw(static_cast<int>(widths[k])) << cells[k];
  }
  os << "\n";
}

void table_block(std::ostringstream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t k = 0; k < row.size(); ++k) widths[k] = std::max(widths[k], row[k].size());
  for (const auto& row : rows) pad_row(os, row, widths);
}

}  // namespace

std::string factor_list(const AbelianPGroup& g) {
  std::string s = "[";
  for (std::size_t i = 0; i < g.orders().size(); ++i) s += (i ? ", " : "") + std::to_string(g.orders()[i]);
  return s + "]";
}

std::string class_label(const InvariantTable& table, const IndexSet& c, unsigned r) {
  if (c == table.u_of(r)) return "U_" + std::to_string(r);
  return format_index_set(c);
}

std::string render_table(const TowerSpec& spec, const Computation& comp, const ReportSections& sections,
                         const ReportContext& context) {
  const InvariantTable& t = comp.table;
  const LocalProfile& prof = comp.report.profile;
  std::ostringstream os;
  os << "instance: p=" << spec.ctx.p() << " n=" << spec.ctx.n() << " l1=" << spec.l1 << " l2=" << spec.l2 << " pairs";
  for (const auto& v : spec.pairs) os << " (" << v.a << "," << v.b << ")";
  os << "\n";
  if (context.seed) os << "seed: " << *context.seed << "\n";
  for (const auto& w : comp.warnings) os << "warning: " << w << "\n";

  if (sections.invariants) {
    os << "local data: m12=" << prof.m12 << " m21=" << prof.m21 << " (v_p(l1-1)=" << prof.s1_at_l1
       << ", v_p(ord l2 mod l1)=" << prof.s2_at_l1 << ", v_p(l2-1)=" << prof.s1_at_l2
       << ", v_p(ord l1 mod l2)=" << prof.s2_at_l2 << ")\n";
    os << "eps:";
    for (unsigned e : t.eps) os << " " << e;
    os << "\ne_ij:\n";
    for (const auto& row : t.e) {
      os << " ";
      for (unsigned e : row) os << " " << e;
      os << "\n";
    }
    os << "partition:";
    for (unsigned r : t.r_values) os << "  U_" << r << " = " << format_index_set(t.u_of(r));
    os << "\nequivalence classes:\n";
    for (unsigned r : t.r_values) {
      for (const auto& [l, classes] : class_figures(t, r)) {
        os << "  U_" << r << "  l=" << l << ":";
        for (const auto& c : classes) os << " " << format_index_set(c);
        os << "\n";
      }
    }
    os << "patching degrees:\n";
    std::vector<std::vector<std::string>> prow{{"r", "Delta^w_r", "Delta_r"}};
    for (const auto& pd : comp.report.patching)
      prow.push_back({std::to_string(pd.r), std::to_string(pd.delta_omega), std::to_string(pd.delta)});
    table_block(os, prow);
    os << "degrees of freedom:\n";
    std::vector<std::vector<std::string>> frow{{"c"}, {"f^w_c"}, {"f_c"}};
    for (const auto& cd : comp.report.classes) {
      frow[0].push_back(class_label(t, cd.c, cd.supp));
      frow[1].push_back(degree_cell(cd.f_omega));
      frow[2].push_back(degree_cell(cd.f));
    }
    table_block(os, frow);
  }
  if (sections.sha_omega)
    os << "Sha_omega: " << factor_list(comp.groups.sha_omega) << " = " << comp.groups.sha_omega.to_string() << "\n";
  if (sections.sha) os << "Sha:       " << factor_list(comp.groups.sha) << " = " << comp.groups.sha.to_string() << "\n";
  for (const auto& d : comp.groups.diagnostics) os << "diagnostic: " << d << "\n";
  if (context.oracle) {
    const bool agree = context.oracle->sha_omega == comp.groups.sha_omega && context.oracle->sha == comp.groups.sha;
    os << "oracle: Sha_omega " << context.oracle->sha_omega.to_string() << ", Sha " << context.oracle->sha.to_string()
       << (agree ? "  (agrees)" : "  (DISAGREES)") << "\n";
  }
  return os.str();
}

std::string render_json(const TowerSpec& spec, const Computation& comp, const ReportSections& sections,
                        const ReportContext& context, int indent) {
  const InvariantTable& t = comp.table;
  ojson doc;
  doc["engine_version"] = kEngineVersion;
  doc["seed"] = context.seed ? ojson(*context.seed) : ojson(nullptr);
  ojson pairs = ojson::array();
  for (const auto& v : spec.pairs) pairs.push_back({v.a, v.b});
  doc["instance"] = {{"p", spec.ctx.p()}, {"n", spec.ctx.n()}, {"l1", spec.l1}, {"l2", spec.l2}, {"pairs", pairs}};
  doc["warnings"] = comp.warnings;

  if (sections.invariants) {
    const LocalProfile& prof = comp.report.profile;
    doc["local"] = {{"m12", prof.m12}, {"m21", prof.m21}, {"s1_at_l1", prof.s1_at_l1}, {"s2_at_l1", prof.s2_at_l1},
                    {"s1_at_l2", prof.s1_at_l2}, {"s2_at_l2", prof.s2_at_l2}};
    ojson partition = ojson::array();
    ojson figures = ojson::array();
    for (unsigned r : t.r_values) {
      partition.push_back({{"r", r}, {"u", t.u_of(r)}});
      for (const auto& [l, classes] : class_figures(t, r)) figures.push_back({{"r", r}, {"l", l}, {"classes", classes}});
    }
    doc["invariants"] = {{"eps", t.eps}, {"e", t.e}, {"partition", partition}, {"classes", figures}};
    ojson patching = ojson::array();
    for (const auto& pd : comp.report.patching)
      patching.push_back({{"r", pd.r}, {"delta_omega", pd.delta_omega}, {"delta", pd.delta}});
    ojson classes = ojson::array();
    for (const auto& cd : comp.report.classes) {
      classes.push_back({{"c", cd.c},
                         {"label", class_label(t, cd.c, cd.supp)},
                         {"r", cd.supp},
                         {"level", cd.level},
                         {"split_count", cd.split_count},
                         {"f_omega", cd.f_omega ? ojson(*cd.f_omega) : ojson(nullptr)},
                         {"f", cd.f ? ojson(*cd.f) : ojson(nullptr)}});
    }
    doc["degrees"] = {{"patching", patching}, {"classes", classes}};
  }
  if (sections.sha_omega) doc["sha_omega"] = group_json(comp.groups.sha_omega);
  if (sections.sha) doc["sha"] = group_json(comp.groups.sha);
  doc["diagnostics"] = comp.groups.diagnostics;
  if (context.oracle) {
    const bool agree = context.oracle->sha_omega == comp.groups.sha_omega && context.oracle->sha == comp.groups.sha;
    doc["oracle"] = {{"sha_omega", group_json(context.oracle->sha_omega)},
                     {"sha", group_json(context.oracle->sha)},
                     {"agree", agree}};
  }
  return doc.dump(indent);
}

}  // namespace kummer
