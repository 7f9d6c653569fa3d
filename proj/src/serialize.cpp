#include "mcg/serialize.hpp"

#include <sstream>

namespace mcg {

ExportFormat parse_export_format(std::string_view s) {
  if (s == "plain") return ExportFormat::Plain;
  if (s == "gap-style" || s == "gap") return ExportFormat::Gap;
  if (s == "magma-style" || s == "magma") return ExportFormat::Magma;
  if (s == "json") return ExportFormat::Json;
  throw UnsupportedFormat("unsupported format '" + std::string(s) + "' (plain, gap-style, magma-style, json)");
}

namespace {

// GAP and Magma identifiers cannot carry the token spelling of c-curves as-is.
std::string ident(const CurveId& c) {
  if (c.kind == CurveKind::Cij) return "c" + std::to_string(c.i) + "_" + std::to_string(c.j);
  return c.token();
}

std::string relator_text(const Word& lhs, const Word& rhs) {
  Word r = concat(lhs, inverse(rhs));
  if (r.empty()) return "One";
  std::string s;
  for (const auto& l : r) {
    if (!s.empty()) s += '*';
    s += ident(l.gen);
    if (l.exp < 0) s += "^-1";
  }
  return s;
}

}  // namespace

std::string export_presentation(const Presentation& pres, ExportFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case ExportFormat::Plain:
      for (const auto& g : pres.generators) os << "gen " << g.token() << '\n';
      for (const auto& e : pres.relations)
        os << "rel " << e.name << ": " << format_word(e.lhs) << " = " << format_word(e.rhs) << '\n';
      break;
    case ExportFormat::Gap: {
      os << "F := FreeGroup(";
      for (std::size_t i = 0; i < pres.generators.size(); ++i)
        os << (i ? ", " : "") << '"' << ident(pres.generators[i]) << '"';
      os << ");\n";
      for (std::size_t i = 0; i < pres.generators.size(); ++i)
        os << ident(pres.generators[i]) << " := F." << (i + 1) << ";\n";
      os << "rels := [\n";
      for (std::size_t i = 0; i < pres.relations.size(); ++i) {
        const auto& e = pres.relations[i];
        std::string r = relator_text(e.lhs, e.rhs);
        if (r == "One") r = "One(F)";
        os << "  " << r << (i + 1 < pres.relations.size() ? "," : "") << "  # " << e.name << '\n';
      }
      os << "];\nG := F / rels;\n";
      break;
    }
    case ExportFormat::Magma: {
      os << "G<";
      for (std::size_t i = 0; i < pres.generators.size(); ++i) os << (i ? ", " : "") << ident(pres.generators[i]);
      os << "> := Group<";
      for (std::size_t i = 0; i < pres.generators.size(); ++i) os << (i ? ", " : "") << ident(pres.generators[i]);
      os << " |\n";
      for (std::size_t i = 0; i < pres.relations.size(); ++i) {
        const auto& e = pres.relations[i];
        std::string r = relator_text(e.lhs, e.rhs);
        if (r == "One") r = "1";
        os << "  " << r << (i + 1 < pres.relations.size() ? "," : "") << '\n';
      }
      os << ">;\n";
      break;
    }
    case ExportFormat::Json: os << to_json(pres).dump(2) << '\n'; break;
  }
  return os.str();
}

std::string export_presentation(const Presentation& pres, std::string_view fmt) {
  return export_presentation(pres, parse_export_format(fmt));
}

json word_to_json(const Word& w) {
  json a = json::array();
  for (const auto& l : w) a.push_back(l.gen.json_name() + (l.exp < 0 ? "'" : ""));
  return a;
}

Word word_from_json(const json& j) {
  Word w;
  for (const auto& t : j) {
    std::string s = t.get<std::string>();
    int exp = 1;
    if (!s.empty() && s.back() == '\'') {
      exp = -1;
      s.pop_back();
    }
    w.push_back({parse_curve(s), exp});
  }
  return w;
}

namespace {

json signature_json(const Signature& s) { return {{"g", s.g}, {"n", s.n}}; }

Signature signature_from(const json& j) { return make_signature(j.at("g").get<int>(), j.at("n").get<int>()); }

json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long>());
}

void require_header(const json& j, const char* format) {
  if (j.value("format", "") != format) throw std::invalid_argument(std::string("expected format ") + format);
  if (j.value("version", 0) != 1) throw std::invalid_argument("unsupported version");
}

}  // namespace

json to_json(const Presentation& pres) {
  json j;
  j["format"] = "mcg-presentation";
  j["version"] = 1;
  j["signature"] = signature_json(pres.signature);
  j["generators"] = json::array();
  for (const auto& g : pres.generators) j["generators"].push_back(g.json_name());
  j["relations"] = json::array();
  for (const auto& e : pres.relations)
    j["relations"].push_back({{"name", e.name},
                              {"kind", std::string(to_string(e.kind))},
                              {"lhs", word_to_json(e.lhs)},
                              {"rhs", word_to_json(e.rhs)}});
  return j;
}

Presentation presentation_from_json(const json& j) {
  require_header(j, "mcg-presentation");
  Presentation p;
  p.signature = signature_from(j.at("signature"));
  for (const auto& g : j.at("generators")) {
    auto c = parse_curve(g.get<std::string>());
    if (!curve_in_signature(p.signature, c)) throw std::invalid_argument("generator out of range: " + c.token());
    p.generators.push_back(c);
  }
  for (const auto& r : j.at("relations"))
    p.relations.push_back({r.at("name").get<std::string>(), parse_relation_kind(r.at("kind").get<std::string>()),
                           word_from_json(r.at("lhs")), word_from_json(r.at("rhs"))});
  return p;
}

json to_json(const CurveConfiguration& cfg) {
  json j;
  j["format"] = "mcg-configuration";
  j["version"] = 1;
  j["signature"] = signature_json(cfg.signature);
  j["basis"] = cfg.basis;
  j["pairing"] = json::array();
  for (std::size_t p = 0; p < cfg.pairing.rows(); ++p) {
    json row = json::array();
    for (std::size_t q = 0; q < cfg.pairing.cols(); ++q) row.push_back(integer_json(cfg.pairing(p, q)));
    j["pairing"].push_back(row);
  }
  j["homology"] = json::array();
  for (const auto& [c, v] : cfg.homology) {
    json vec = json::array();
    for (const auto& x : v) vec.push_back(integer_json(x));
    j["homology"].push_back({{"curve", c.json_name()}, {"class", vec}});
  }
  j["intersections"] = json::array();
  for (const auto& [k, cl] : cfg.table)
    j["intersections"].push_back({k.first.json_name(), k.second.json_name(), std::string(to_string(cl))});
  return j;
}

CurveConfiguration configuration_from_json(const json& j) {
  require_header(j, "mcg-configuration");
  CurveConfiguration cfg;
  cfg.signature = signature_from(j.at("signature"));
  cfg.basis = j.at("basis").get<std::vector<std::string>>();
  const std::size_t r = cfg.basis.size();
  cfg.pairing = Matrix(r, r);
  const auto& rows = j.at("pairing");
  if (rows.size() != r) throw std::invalid_argument("pairing matrix has wrong size");
  for (std::size_t p = 0; p < r; ++p) {
    if (rows[p].size() != r) throw std::invalid_argument("pairing matrix has wrong size");
    for (std::size_t q = 0; q < r; ++q) cfg.pairing(p, q) = integer_from(rows[p][q]);
  }
  for (const auto& h : j.at("homology")) {
    Vector v;
    for (const auto& x : h.at("class")) v.push_back(integer_from(x));
    cfg.homology[parse_curve(h.at("curve").get<std::string>())] = std::move(v);
  }
  for (const auto& e : j.at("intersections"))
    set_intersection_class(cfg, parse_curve(e.at(0).get<std::string>()), parse_curve(e.at(1).get<std::string>()),
                           parse_intersection_class(e.at(2).get<std::string>()));
  return cfg;
}

json to_json(const Report& r) {
  json j;
  j["format"] = "mcg-report";
  j["version"] = 1;
  j["title"] = r.title;
  j["passed"] = r.entries.size() - r.failures();
  j["failed"] = r.failures();
  j["entries"] = json::array();
  for (const auto& e : r.entries) {
    json x = {{"name", e.name}, {"pass", e.pass}};
    if (!e.detail.empty()) x["detail"] = e.detail;
    j["entries"].push_back(x);
  }
  return j;
}

Report report_from_json(const json& j) {
  require_header(j, "mcg-report");
  Report r;
  r.title = j.value("title", "");
  for (const auto& e : j.at("entries")) r.add(e.at("name").get<std::string>(), e.at("pass").get<bool>(), e.value("detail", ""));
  return r;
}

}  // namespace mcg
