#include "positroid/analysis.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "positroid/errors.hpp"
#include "positroid/network.hpp"

namespace positroid {

Analysis analyze(const LeDiagram& input, bool auto_reduce, bool with_witnesses) {
  Analysis a;
  a.input = input;
  a.diagram = input;

  auto [loops, coloops] = loops_coloops(input);
  if (auto_reduce) {
    std::tie(a.diagram, a.reduction) = reduce(input);
    a.auto_reduced = true;
  } else if (!loops.empty() || !coloops.empty()) {
    throw Error("diagram has loops " + loops.braced() + " and coloops " +
                coloops.braced() +
                "; the h-vector machinery assumes a reduced diagram (use --auto-reduce)");
  } else {
    for (int label = 1; label <= input.ground_set_size(); ++label)
      a.reduction.relabel[label] = label;
  }

  LeGraph g = build_graph(a.diagram);
  Positroid p = enumerate_bases(g);
  a.n = p.n();
  a.b0 = p.b0();
  a.rank = p.rank();

  for (LabelSet b : p.bases()) {
    Analysis::BasisDetail detail;
    detail.basis = b;
    detail.rep = matching_rep(p.b0(), b);
    detail.passive = passive_elements(p, b);
    detail.monomial = phi_direct(p, b);
    if (detail.monomial != phi_product(p, b))
      a.check_failures.push_back("phi rule and product formula disagree on " + b.to_string());
    if (detail.monomial.degree() != detail.passive.size())
      a.check_failures.push_back("deg phi != passivity on " + b.to_string());
    a.bases.push_back(std::move(detail));
  }

  a.f = f_vector(p);
  a.h_activity = h_vector_activity(p);
  a.h_f_transform = h_from_f(p);
  if (a.h_activity != a.h_f_transform)
    a.check_failures.push_back("activity h-vector disagrees with the f-vector transform");

  try {
    a.image = phi_image(p);
  } catch (const InjectivityViolation& e) {
    a.check_failures.push_back(e.what());
    for (const auto& detail : a.bases) a.image.insert(detail.monomial, detail.basis);
  }
  a.ideal = ideal_report(a.image, a.h_activity);
  if (!a.ideal.order_ideal) a.check_failures.push_back("image is not an order ideal");
  if (!a.ideal.pure) a.check_failures.push_back("image is not pure");
  if (!a.ideal.matches_h_vector)
    a.check_failures.push_back("o-sequence does not match the h-vector");

  if (with_witnesses) {
    for (const auto& detail : a.bases) {
      Analysis::WitnessDetail w;
      w.basis = detail.basis;
      for (int v : detail.monomial.support())
        w.divides.emplace_back(v, divide_witness(p, detail.basis, v));
      w.augment = augment_witness(p, detail.basis);
      a.witnesses.push_back(std::move(w));
    }
  }
  return a;
}

namespace {

std::string int_vector(const std::vector<std::int64_t>& values) {
  std::string s = "[";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(values[i]);
  }
  return s + "]";
}

std::string rep_string(const MatchingRep& rep) {
  if (rep.pairs.empty()) return "-";
  std::string s;
  for (const MatchingPair& p : rep.pairs) {
    if (!s.empty()) s += " ";
    s += std::to_string(p.source) + "->" + std::to_string(p.sink);
  }
  return s;
}

nlohmann::json monomial_json(const Monomial& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [v, e] : m.factors()) j[std::to_string(v)] = e;
  return j;
}

}  // namespace

std::string render_text(const Analysis& a) {
  std::ostringstream out;
  if (a.auto_reduced && !a.reduction.identity()) {
    out << "reduced: removed loops " << a.reduction.removed_loops.braced() << ", coloops "
        << a.reduction.removed_coloops.braced() << "; " << a.reduction.relabel.size()
        << " labels survive\n";
  }
  out << "n: " << a.n << "\n";
  out << "B0: " << a.b0.to_string() << "\n";
  out << "rank: " << a.rank << "\n";
  out << "bases (" << a.bases.size() << "):";
  for (const auto& detail : a.bases) out << " " << detail.basis.to_string();
  out << "\n\n";

  size_t basis_w = 5, rep_w = 8;
  for (const auto& detail : a.bases) {
    basis_w = std::max(basis_w, detail.basis.to_string().size());
    rep_w = std::max(rep_w, rep_string(detail.rep).size());
  }
  auto pad = [](const std::string& s, size_t w) {
    return s + std::string(w < s.size() ? 0 : w - s.size(), ' ');
  };
  out << pad("basis", basis_w) << "  " << pad("matching", rep_w) << "  " << pad("passive", 8)
      << "  monomial\n";
  for (const auto& detail : a.bases) {
    out << pad(detail.basis.to_string(), basis_w) << "  " << pad(rep_string(detail.rep), rep_w)
        << "  " << pad(detail.passive.empty() ? "-" : detail.passive.to_string(), 8) << "  "
        << detail.monomial.to_string() << "\n";
  }
  out << "\n";
  out << "f-vector: " << int_vector(a.f) << "\n";
  out << "h-vector (activity):    " << int_vector(a.h_activity) << "\n";
  out << "h-vector (f-transform): " << int_vector(a.h_f_transform) << "\n\n";

  out << "monomials (" << a.image.size() << "):";
  for (const Monomial& m : a.image.sorted()) out << " " << m.to_string();
  out << "\n";
  out << "order ideal: " << (a.ideal.order_ideal ? "yes" : "no") << "\n";
  out << "pure: " << (a.ideal.pure ? "yes" : "no");
  if (!a.ideal.maximal.empty()) {
    out << ", maximal degree " << a.ideal.maximal.front().degree() << ":";
    for (const Monomial& m : a.ideal.maximal) out << " " << m.to_string();
  }
  out << "\n";
  out << "o-sequence: " << int_vector(a.ideal.o_sequence) << "\n";
  out << "pure order ideal: "
      << (a.ideal.order_ideal && a.ideal.pure && a.ideal.matches_h_vector ? "yes" : "no")
      << (a.ideal.matches_h_vector ? " (o-sequence matches h-vector)" : "") << "\n";

  if (!a.witnesses.empty()) {
    out << "\nwitnesses:\n";
    for (const auto& w : a.witnesses) {
      out << "  " << w.basis.to_string() << ":";
      for (const auto& [v, target] : w.divides)
        out << " /x" << v << "->" << target.to_string();
      if (w.augment)
        out << " augment->" << w.augment->to_string();
      else
        out << " (maximal)";
      out << "\n";
    }
  }
  if (!a.check_failures.empty()) {
    out << "\ninternal invariant violations:\n";
    for (const std::string& f : a.check_failures) out << "  " << f << "\n";
  }
  return out.str();
}

std::string render_json(const Analysis& a) {
  nlohmann::json j;
  j["n"] = a.n;
  j["b0"] = a.b0.to_vector();
  auto bases = nlohmann::json::array();
  auto monomials = nlohmann::json::array();
  for (const auto& detail : a.bases) {
    bases.push_back(detail.basis.to_vector());
    nlohmann::json m;
    m["basis"] = detail.basis.to_vector();
    m["monomial"] = monomial_json(detail.monomial);
    m["text"] = detail.monomial.to_string();
    m["degree"] = detail.monomial.degree();
    m["passive"] = detail.passive.to_vector();
    auto rep = nlohmann::json::array();
    for (const MatchingPair& p : detail.rep.pairs) rep.push_back({p.source, p.sink});
    m["rep"] = rep;
    monomials.push_back(m);
  }
  j["bases"] = bases;
  j["h_activity"] = a.h_activity;
  j["h_from_f"] = a.h_f_transform;
  j["monomials"] = monomials;

  nlohmann::json ideal;
  ideal["order_ideal"] = a.ideal.order_ideal;
  ideal["pure"] = a.ideal.pure;
  auto maximal = nlohmann::json::array();
  for (const Monomial& m : a.ideal.maximal) maximal.push_back(monomial_json(m));
  ideal["maximal"] = maximal;
  ideal["o_sequence"] = a.ideal.o_sequence;
  j["ideal"] = ideal;

  nlohmann::json reduction;
  reduction["loops"] = a.reduction.removed_loops.to_vector();
  reduction["coloops"] = a.reduction.removed_coloops.to_vector();
  nlohmann::json map = nlohmann::json::object();
  for (const auto& [from, to] : a.reduction.relabel) map[std::to_string(from)] = to;
  reduction["map"] = map;
  j["reduction"] = reduction;

  if (!a.witnesses.empty()) {
    auto witnesses = nlohmann::json::array();
    for (const auto& w : a.witnesses) {
      nlohmann::json entry;
      entry["basis"] = w.basis.to_vector();
      nlohmann::json divides = nlohmann::json::object();
      for (const auto& [v, target] : w.divides) divides[std::to_string(v)] = target.to_vector();
      entry["divides"] = divides;
      if (w.augment)
        entry["augment"] = w.augment->to_vector();
      else
        entry["augment"] = nullptr;
      witnesses.push_back(entry);
    }
    j["witnesses"] = witnesses;
  }
  return j.dump(2) + "\n";
}

}  // namespace positroid
