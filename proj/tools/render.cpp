#include "render.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hilbzeta/errors.hpp"

namespace hz::render {

using nlohmann::json;

namespace {

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

json poly_json(const LPoly& p) {
  json a = json::array();
  for (int d = 0; d <= p.degree(); ++d)
    if (p.coeff(d) != 0) a.push_back({{"L_power", d}, {"coeff", p.coeff(d)}});
  return a;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void unsupported(Format f, const char* what) {
  throw Error(ErrorKind::InvalidArgument, "format " + format_name(f) + " not available for " + what);
}

std::string qseries_latex(const QSeries& s) {
  std::string out;
  for (std::size_t l = 0; l < s.size(); ++l) {
    if (s[l].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const bool mono = s[l].coeffs().size() == 1 || std::count_if(s[l].coeffs().begin(), s[l].coeffs().end(), [](std::int64_t c) { return c != 0; }) == 1;
    std::string c = s[l].latex();
    if (l == 0) { out += c; continue; }
    if (c == "1") c.clear();
    else if (!mono) c = "(" + c + ")";
    out += c + "q" + (l == 1 ? std::string() : "^{" + std::to_string(l) + "}");
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::optional<Format> parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "dot") return Format::Dot;
  if (s == "latex") return Format::Latex;
  return std::nullopt;
}

std::string format_name(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Dot: return "dot";
    case Format::Latex: return "latex";
  }
  return "?";
}

std::string zeta(const NumericalSemigroup& S, const ZetaSeries& z, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::Text:
      os << "semigroup " << S.str() << "\n";
      for (std::size_t l = 0; l < z.coefficients.size(); ++l) os << "[C^[" << l << "]] = " << z.coefficients[l].str() << "\n";
      if (z.stabilization_level) os << "Z(q) = (" << qseries_str(z.numerator) << ") / (1 - q)\n";
      else os << "no stabilization within lmax\n";
      return os.str();
    case Format::Json: {
      json j;
      j["semigroup"] = S.generators();
      j["coeffs"] = json::array();
      for (const auto& c : z.coefficients) j["coeffs"].push_back(poly_json(c));
      j["stabilization_level"] = z.stabilization_level ? json(*z.stabilization_level) : json(nullptr);
      if (z.stabilization_level) {
        j["numerator"] = json::array();
        for (const auto& c : z.numerator) j["numerator"].push_back(poly_json(c));
      } else {
        j["numerator"] = nullptr;
      }
      return dump(j);
    }
    case Format::Csv:
      os << "ell,L_power,coeff\n";
      for (std::size_t l = 0; l < z.coefficients.size(); ++l)
        for (int d = 0; d <= z.coefficients[l].degree(); ++d)
          if (z.coefficients[l].coeff(d)) os << l << "," << d << "," << z.coefficients[l].coeff(d) << "\n";
      return os.str();
    case Format::Latex:
      os << "% " << S.str() << "\n";
      for (std::size_t l = 1; l < z.coefficients.size(); ++l) os << "[C^{[" << l << "]}] = " << z.coefficients[l].latex() << ",\\\\\n";
      if (z.stabilization_level) os << "Z^{\\mathrm{Hilb}}(q) = \\frac{" << qseries_latex(z.numerator) << "}{1-q}\n";
      return os.str();
    case Format::Dot: break;
  }
  unsupported(f, "zeta");
}

std::string tree(const SemimoduleTree& t, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::Text:
      os << "semigroup " << t.semigroup->str() << "\n";
      for (int l = 1; l <= t.max_level(); ++l) {
        os << "D_" << l << ":";
        for (const auto& D : t.level(l)) os << " " << D.str();
        os << "\n";
      }
      return os.str();
    case Format::Json: {
      json j;
      j["levels"] = json::array();
      j["edges"] = json::array();
      for (int l = 1; l <= t.max_level(); ++l) {
        json lv = json::array();
        for (const auto& D : t.level(l)) lv.push_back({{"gaps", D.gaps()}, {"gens", D.generators()}});
        j["levels"].push_back(lv);
        j["edges"].push_back(t.parents[static_cast<std::size_t>(l - 1)]);
      }
      return dump(j);
    }
    case Format::Csv:
      os << "level,index,gens,gaps,parent,label\n";
      for (int l = 1; l <= t.max_level(); ++l) {
        const auto& lv = t.level(l);
        for (std::size_t i = 0; i < lv.size(); ++i)
          os << l << "," << i << ",\"" << join(lv[i].generators()) << "\",\"" << join(lv[i].gaps()) << "\","
             << t.parents[static_cast<std::size_t>(l - 1)][i] << "," << t.edge_labels[static_cast<std::size_t>(l - 1)][i] << "\n";
      }
      return os.str();
    case Format::Dot:
      os << "digraph G {\n";
      for (int l = 1; l <= t.max_level(); ++l) {
        const auto& lv = t.level(l);
        for (std::size_t i = 0; i < lv.size(); ++i) os << "  v" << l << "_" << i << " [label=\"" << lv[i].str() << "\"];\n";
      }
      for (int l = 2; l <= t.max_level(); ++l) {
        const auto& lv = t.level(l);
        for (std::size_t i = 0; i < lv.size(); ++i)
          os << "  v" << l - 1 << "_" << t.parents[static_cast<std::size_t>(l - 1)][i] << " -> v" << l << "_" << i
             << " [label=\"d_" << t.edge_labels[static_cast<std::size_t>(l - 1)][i] << "\"];\n";
      }
      os << "}\n";
      return os.str();
    case Format::Latex: break;
  }
  unsupported(f, "tree");
}

std::string genzeta(const NumericalSemigroup& S, const GenSeries& g, const std::optional<Laurent2>& homfly,
                    Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::Text:
      os << "semigroup " << S.str() << "\n";
      for (std::size_t l = 0; l < g.rows.size(); ++l) os << "ell=" << l << ": " << gen_row_str(g.rows[l], g.exponent_offset) << "\n";
      if (homfly) os << "HOMFLY: " << homfly->str() << "\n";
      return os.str();
    case Format::Json: {
      json j;
      j["semigroup"] = S.generators();
      j["exponent_offset"] = g.exponent_offset;
      j["rows"] = json::array();
      for (const auto& row : g.rows) {
        json r = json::array();
        for (const auto& c : row) r.push_back(poly_json(c));
        j["rows"].push_back(r);
      }
      if (homfly) {
        json h = json::array();
        for (const auto& [k, c] : homfly->terms()) h.push_back({{"a_power", k.first}, {"q_power", k.second}, {"coeff", c}});
        j["homfly"] = h;
      }
      return dump(j);
    }
    case Format::Csv:
      os << "ell,s_power,L_power,coeff\n";
      for (std::size_t l = 0; l < g.rows.size(); ++l)
        for (std::size_t k = 0; k < g.rows[l].size(); ++k)
          for (int d = 0; d <= g.rows[l][k].degree(); ++d)
            if (g.rows[l][k].coeff(d)) os << l << "," << k << "," << d << "," << g.rows[l][k].coeff(d) << "\n";
      return os.str();
    case Format::Latex:
      os << "% " << S.str() << "\n";
      for (std::size_t l = 0; l < g.rows.size(); ++l)
        os << "& + \\left[ " << gen_row_latex(g.rows[l], g.exponent_offset) << " \\right] q^{" << 2 * l << "} \\\\\n";
      return os.str();
    case Format::Dot: break;
  }
  unsupported(f, "genzeta");
}

std::string report(const VerifyReport& r, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::Text: {
      for (const auto& row : r.rows) {
        if (row.match) continue;
        os << "MISMATCH " << row.kind << " " << row.semigroup << " ell=" << row.ell << " gaps={" << join(row.gaps)
           << "} m=" << row.m << " q=" << row.q << " symbolic=" << row.symbolic << " expected=" << row.expected
           << " count=" << row.count << "\n";
      }
      os << r.rows.size() << " rows, " << r.mismatches() << " mismatches\n";
      return os.str();
    }
    case Format::Json: {
      json j;
      j["rows"] = json::array();
      for (const auto& row : r.rows)
        j["rows"].push_back({{"kind", row.kind}, {"semigroup", row.semigroup}, {"ell", row.ell}, {"gaps", row.gaps},
                             {"m", row.m}, {"q", row.q}, {"symbolic", row.symbolic}, {"expected", row.expected},
                             {"count", row.count}, {"match", row.match}});
      j["mismatches"] = r.mismatches();
      return dump(j);
    }
    case Format::Csv:
      os << "kind,semigroup,ell,gaps,m,q,symbolic,expected,count,match\n";
      for (const auto& row : r.rows)
        os << row.kind << ",\"" << row.semigroup << "\"," << row.ell << ",\"" << join(row.gaps, " ") << "\"," << row.m << ","
           << row.q << ",\"" << row.symbolic << "\"," << row.expected << "," << row.count << "," << (row.match ? 1 : 0) << "\n";
      return os.str();
    case Format::Dot:
    case Format::Latex: break;
  }
  unsupported(f, "verify");
}

}  // namespace hz::render
