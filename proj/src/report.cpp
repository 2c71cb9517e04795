#include "divatlas/report.hpp"

#include "divatlas/brill_noether.hpp"
#include "divatlas/subspace_geometry.hpp"

#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

namespace divatlas {

AtlasOptions AtlasParams::options() const
{
  AtlasOptions o;
  o.sym_mode = compat_paper_sym ? SymMaxMode::paper_compat : SymMaxMode::faithful;
  o.printed_secdim = compat_paper_secdim;
  return o;
}

std::string class_name(TensorKind kind)
{
  return kind == TensorKind::skew ? "n" : "t";
}

TensorKind parse_class_name(const std::string& text)
{
  if (text == "n") return TensorKind::skew;
  if (text == "t") return TensorKind::sym;
  throw std::invalid_argument("unknown class '" + text + "' (expected n or t)");
}

namespace {

std::string support_label(int r, int d)
{
  return "W^" + std::to_string(r) + "_" + std::to_string(d);
}

std::string power_label(int e, int k, int ambient, TensorKind kind)
{
  std::ostringstream out;
  out << "Sub_" << e << "(" << (kind == TensorKind::skew ? "wedge^" : "Sym^") << k << " Q^" << ambient << ")";
  return out.str();
}

void add_notes(AtlasReport& report)
{
  const auto& p = report.params;
  const auto& counts = report.counts;

  if (!counts.agrees) {
    std::ostringstream out;
    out << "component count: stratum enumeration gives " << counts.enumerated
        << " but the closed-form count gives " << counts.paper_formula;
    report.notes.push_back(out.str());
  }

  if (p.k == 2 && !report.intersections.empty()) {
    std::ostringstream out;
    out << "sec-dim: k = 2 fiber dimensions "
        << (p.compat_paper_secdim ? "use the printed secant formula" : "use rank-stratification dimensions") << ";";
    for (const auto& rec : report.intersections) {
      int en = normalize_e(rec.fiber.e, 2, rec.fiber.kind);
      std::int64_t det = sub_dim(rec.fiber.e, 2, rec.fiber.ambient, rec.fiber.kind);
      std::int64_t printed = sec_dim_printed(en / 2, rec.fiber.ambient, rec.fiber.kind);
      out << " " << power_label(rec.fiber.e, 2, rec.fiber.ambient, rec.fiber.kind) << ": determinantal " << det
          << ", printed " << printed << (det == printed ? "" : " (differ)") << ";";
    }
    std::string text = out.str();
    text.pop_back();
    report.notes.push_back(text);
  }

  if (p.kind == TensorKind::sym && p.k == 2) {
    report.notes.push_back(std::string("symmetric parity: ") +
                           (p.compat_paper_sym ? "paper-compat mode uses e'(2, n) = n - 1 for odd n"
                                               : "faithful mode uses e'(2, n) = n (odd quadrics have full rank)") +
                           "; the other mode differs on strata with h^0 odd");
  }

  if (report.canonical && report.canonical->locus_codim != report.canonical->locus_codim_subdim) {
    std::ostringstream out;
    out << "canonical locus codimension: closed form " << report.canonical->locus_codim << ", from sub_dim "
        << report.canonical->locus_codim_subdim;
    report.notes.push_back(out.str());
  }
}

} // namespace

AtlasReport build_atlas_report(const AtlasParams& params)
{
  if (params.canonical && params.d != 2 * params.g - 2)
    throw std::invalid_argument("canonical analysis needs degree 2g - 2");
  AtlasReport report;
  report.params = params;
  const AtlasOptions options = params.options();
  report.components = components(params.g, params.d, params.k, params.kind, options);
  report.intersections = intersections(params.g, params.d, params.k, params.kind, options);
  report.counts = component_count(params.g, params.d, params.k, params.kind, options);
  if (params.canonical) report.canonical = canonical_analysis(params.g, params.k);
  add_notes(report);
  return report;
}

// ---------------------------------------------------------------------- JSON

namespace {

Json fiber_json(const FiberDescriptor& f)
{
  return Json{{"e", f.e}, {"k", f.k}, {"ambient", f.ambient}, {"kind", std::string(to_string(f.kind))}};
}

FiberDescriptor fiber_from_json(const Json& j)
{
  return {j.at("e").get<int>(), j.at("k").get<int>(), j.at("ambient").get<int>(),
          parse_tensor_kind(j.at("kind").get<std::string>())};
}

int parse_support(const std::string& label)
{
  // "W^r_d"
  auto caret = label.find('^');
  auto under = label.find('_');
  if (label.rfind("W", 0) != 0 || caret != 1 || under == std::string::npos || under < caret)
    throw std::invalid_argument("malformed support label '" + label + "'");
  return std::stoi(label.substr(caret + 1, under - caret - 1));
}

} // namespace

Json to_json(const AtlasReport& report)
{
  const auto& p = report.params;
  Json j;
  j["params"] = Json{{"genus", p.g},
                     {"degree", p.d},
                     {"k", p.k},
                     {"class", class_name(p.kind)},
                     {"compat_paper_sym", p.compat_paper_sym},
                     {"compat_paper_secdim", p.compat_paper_secdim},
                     {"canonical", p.canonical}};

  j["components"] = Json::array();
  for (const auto& c : report.components)
    j["components"].push_back(Json{{"r", c.r},
                                   {"e", c.e},
                                   {"support", support_label(c.r, p.d)},
                                   {"support_dim", c.support_dim},
                                   {"fiber_dim", c.fiber_dim},
                                   {"total_dim", c.total_dim},
                                   {"multiplicity", c.multiplicity},
                                   {"is_resolution", c.is_resolution}});

  j["intersections"] = Json::array();
  for (const auto& rec : report.intersections)
    j["intersections"].push_back(Json{{"shallow_e", rec.shallow_e},
                                      {"deep_e", rec.deep_e},
                                      {"image", support_label(rec.image_r, p.d)},
                                      {"fiber", fiber_json(rec.fiber)},
                                      {"fiber_dim", rec.fiber_dim},
                                      {"total_dim", rec.total_dim}});

  j["counts"] = Json{{"enumerated", report.counts.enumerated},
                     {"paper_formula", report.counts.paper_formula},
                     {"agrees", report.counts.agrees}};

  if (report.canonical) {
    const auto& c = *report.canonical;
    j["canonical"] = Json{{"g", c.g},
                          {"k", c.k},
                          {"dim_canonical", c.dim_canonical},
                          {"dim_main", c.dim_main},
                          {"gap", c.gap},
                          {"exorbitant", c.exorbitant},
                          {"locus", fiber_json(c.locus)},
                          {"locus_codim", c.locus_codim},
                          {"locus_codim_subdim", c.locus_codim_subdim}};
  }

  j["notes"] = report.notes;
  return j;
}

AtlasReport atlas_report_from_json(const Json& j)
{
  AtlasReport report;
  const auto& p = j.at("params");
  report.params.g = p.at("genus").get<int>();
  report.params.d = p.at("degree").get<int>();
  report.params.k = p.at("k").get<int>();
  report.params.kind = parse_class_name(p.at("class").get<std::string>());
  report.params.compat_paper_sym = p.at("compat_paper_sym").get<bool>();
  report.params.compat_paper_secdim = p.at("compat_paper_secdim").get<bool>();
  report.params.canonical = p.at("canonical").get<bool>();

  for (const auto& c : j.at("components")) {
    ComponentRecord rec;
    rec.r = c.at("r").get<int>();
    rec.e = c.at("e").get<int>();
    if (parse_support(c.at("support").get<std::string>()) != rec.r)
      throw std::invalid_argument("component support label disagrees with r");
    rec.support_dim = c.at("support_dim").get<std::int64_t>();
    rec.fiber_dim = c.at("fiber_dim").get<std::int64_t>();
    rec.total_dim = c.at("total_dim").get<std::int64_t>();
    rec.multiplicity = c.at("multiplicity").get<std::int64_t>();
    rec.is_resolution = c.at("is_resolution").get<bool>();
    report.components.push_back(rec);
  }

  for (const auto& i : j.at("intersections")) {
    IntersectionRecord rec;
    rec.shallow_e = i.at("shallow_e").get<int>();
    rec.deep_e = i.at("deep_e").get<int>();
    rec.image_r = parse_support(i.at("image").get<std::string>());
    rec.fiber = fiber_from_json(i.at("fiber"));
    rec.fiber_dim = i.at("fiber_dim").get<std::int64_t>();
    rec.total_dim = i.at("total_dim").get<std::int64_t>();
    report.intersections.push_back(rec);
  }

  const auto& counts = j.at("counts");
  report.counts.enumerated = counts.at("enumerated").get<std::int64_t>();
  report.counts.paper_formula = counts.at("paper_formula").get<std::int64_t>();
  report.counts.agrees = counts.at("agrees").get<bool>();

  if (j.contains("canonical")) {
    const auto& c = j.at("canonical");
    CanonicalReport rec;
    rec.g = c.at("g").get<int>();
    rec.k = c.at("k").get<int>();
    rec.dim_canonical = c.at("dim_canonical").get<std::int64_t>();
    rec.dim_main = c.at("dim_main").get<std::int64_t>();
    rec.gap = c.at("gap").get<std::int64_t>();
    rec.exorbitant = c.at("exorbitant").get<bool>();
    rec.locus = fiber_from_json(c.at("locus"));
    rec.locus_codim = c.at("locus_codim").get<std::int64_t>();
    rec.locus_codim_subdim = c.at("locus_codim_subdim").get<std::int64_t>();
    report.canonical = rec;
  }

  report.notes = j.at("notes").get<std::vector<std::string>>();
  return report;
}

std::string render_text(const AtlasReport& report)
{
  const auto& p = report.params;
  std::ostringstream out;
  out << "Div^{" << class_name(p.kind) << "(" << p.d << ")}(C_" << p.k << ") on a Petri-general curve of genus " << p.g
      << "\n";
  out << "R_d = " << big_R(p.g, p.d) << ", r_d = " << small_r(p.g, p.d) << "\n\n";

  out << "components\n";
  out << std::left << std::setw(4) << "r" << std::setw(4) << "e" << std::setw(12) << "support" << std::setw(13)
      << "support_dim" << std::setw(10) << "fiber" << std::setw(11) << "total_dim" << std::setw(6) << "mult"
      << "flags\n";
  for (const auto& c : report.components) {
    out << std::left << std::setw(4) << c.r << std::setw(4) << c.e << std::setw(12) << support_label(c.r, p.d)
        << std::setw(13) << c.support_dim << std::setw(10) << ("P^" + std::to_string(c.fiber_dim)) << std::setw(11)
        << c.total_dim << std::setw(6) << c.multiplicity << (c.is_resolution ? "resolution" : "-") << "\n";
  }

  out << "\nintersections\n";
  if (report.intersections.empty()) out << "(none)\n";
  for (const auto& rec : report.intersections) {
    out << "e=" << rec.shallow_e << " x e=" << rec.deep_e << ": over " << support_label(rec.image_r, p.d) << ", fiber "
        << power_label(rec.fiber.e, rec.fiber.k, rec.fiber.ambient, rec.fiber.kind) << " (dim " << rec.fiber_dim
        << "), total_dim " << rec.total_dim << "\n";
  }

  out << "\ncount: enumerated " << report.counts.enumerated << ", closed form " << report.counts.paper_formula
      << (report.counts.agrees ? " (agree)" : " (disagree)") << "\n";

  if (report.canonical) {
    const auto& c = *report.canonical;
    out << "\ncanonical class of C_" << c.k << " (g = " << c.g << ")\n";
    out << "  dim |K|        " << c.dim_canonical << "\n";
    out << "  dim P_main     " << c.dim_main << "\n";
    out << "  gap            " << c.gap << "\n";
    out << "  exorbitant     " << (c.exorbitant ? "yes" : "no") << "\n";
    out << "  P_main and |K| meet in " << power_label(c.locus.e, c.locus.k, c.locus.ambient, c.locus.kind)
        << ", codim " << c.locus_codim << "\n";
  }

  if (!report.notes.empty()) {
    out << "\nnotes\n";
    for (const auto& n : report.notes) out << "  - " << n << "\n";
  }
  return out.str();
}

// -------------------------------------------------------------- tensor JSON

Tensor tensor_from_json(const Json& j)
{
  if (!j.is_object()) throw std::invalid_argument("tensor JSON must be an object");
  const int n = j.at("n").get<int>();
  const int k = j.at("k").get<int>();
  if (n < 0 || k < 0) throw std::invalid_argument("tensor n and k must be nonnegative");
  const TensorKind kind = parse_tensor_kind(j.at("kind").get<std::string>());
  const auto& terms = j.at("terms");
  if (!terms.is_array()) throw std::invalid_argument("tensor terms must be an array");

  auto read_coeff = [](const Json& c) {
    if (c.is_string()) return parse_rational(c.get<std::string>());
    if (c.is_number_integer()) return Rational(c.get<long>());
    throw std::invalid_argument("coefficients must be rational strings \"p/q\" or integers");
  };

  if (kind == TensorKind::skew) {
    SkewTensor t(n, k);
    std::set<Subset> seen;
    for (const auto& term : terms) {
      auto index = term.at("index").get<Subset>();
      if (!seen.insert(index).second) throw std::invalid_argument("duplicate tensor index");
      t.set(index, read_coeff(term.at("coeff")));
    }
    return t;
  }
  SymTensor t(n, k);
  std::set<Exponent> seen;
  for (const auto& term : terms) {
    auto alpha = term.at("index").get<Exponent>();
    if (!seen.insert(alpha).second) throw std::invalid_argument("duplicate tensor index");
    t.set(alpha, read_coeff(term.at("coeff")));
  }
  return t;
}

Json tensor_to_json(const Tensor& t)
{
  Json j;
  j["n"] = dimension_of(t);
  j["k"] = degree_of(t);
  j["kind"] = std::string(to_string(kind_of(t)));
  j["terms"] = Json::array();
  std::visit(
    [&](const auto& x) {
      for (const auto& [index, c] : x.terms()) j["terms"].push_back(Json{{"index", index}, {"coeff", to_string(c)}});
    },
    t);
  return j;
}

EncReport build_enc_report(const Tensor& t, std::optional<int> sub)
{
  EncReport r;
  r.n = dimension_of(t);
  r.k = degree_of(t);
  r.kind = kind_of(t);
  SubspaceBasis basis = enclosing_space(t);
  r.enc = basis.dim();
  r.basis = basis.vectors();
  r.sub = sub;
  if (sub) r.member = in_subspace_variety(t, *sub);
  return r;
}

Json to_json(const EncReport& report)
{
  Json j;
  j["n"] = report.n;
  j["k"] = report.k;
  j["kind"] = std::string(to_string(report.kind));
  j["enc"] = report.enc;
  j["basis"] = Json::array();
  for (const auto& v : report.basis) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    j["basis"].push_back(row);
  }
  if (report.sub) {
    j["sub"] = *report.sub;
    j["member"] = *report.member;
  }
  return j;
}

std::string render_text(const EncReport& report)
{
  std::ostringstream out;
  out << "tensor: " << to_string(report.kind) << ", n = " << report.n << ", k = " << report.k << "\n";
  out << "enc: " << report.enc << "\n";
  out << "enclosing space basis:\n";
  if (report.basis.empty()) out << "  (zero subspace)\n";
  for (const auto& v : report.basis) {
    out << "  (";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << to_string(v[i]);
    out << ")\n";
  }
  if (report.sub) out << "member of Sub_" << *report.sub << ": " << (*report.member ? "true" : "false") << "\n";
  return out.str();
}

} // namespace divatlas
