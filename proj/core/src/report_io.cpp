#include "flagiso/classify.hpp"
#include "flagiso/error.hpp"

#include <nlohmann/json.hpp>

#include <iomanip>
#include <sstream>

namespace flagiso {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& v, const std::string& sep) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(std::to_string(x));
  return join(s, sep);
}

} // namespace

std::string to_json(const ClassificationReport& r, int indent) {
  json j;
  j["schema"] = r.schema;
  j["type"] = r.type;
  j["rank"] = r.rank;
  j["theta"] = r.theta;
  j["components"] = json::array();
  for (const auto& c : r.components)
    j["components"].push_back({{"roots", c.roots},
                               {"highest", c.highest},
                               {"level", c.level},
                               {"dim", c.dim},
                               {"criterion_irreducible", c.criterion_irreducible}});
  j["blocks"] = json::array();
  for (const auto& b : r.blocks)
    j["blocks"].push_back({{"kind", to_string(b.kind)},
                           {"component", b.component},
                           {"dim", b.dim},
                           {"basis_note", b.basis_note},
                           {"certified_by", to_string(b.certified_by)},
                           {"support", b.support}});
  j["equivalences"] = json::array();
  for (const auto& e : r.equivalences)
    j["equivalences"].push_back({{"blocks", e.blocks}, {"decided_by", to_string(e.decided_by)}});
  j["continuum_families"] = json::array();
  for (const auto& f : r.continuum_families) j["continuum_families"].push_back({{"blocks", f.blocks}, {"label", f.label}});
  json o;
  o["ran"] = r.oracle.ran;
  o["verified"] = r.oracle.verified;
  o["commutant_dims"] = r.oracle.commutant_dims;
  o["intertwiner_dims"] = json::array();
  for (const auto& t : r.oracle.intertwiner_dims) o["intertwiner_dims"].push_back({{"a", t.a}, {"b", t.b}, {"dim", t.dim}});
  o["isotypic_dims"] = r.oracle.isotypic_dims;
  o["oracle_isotypic_dims"] = r.oracle.oracle_isotypic_dims;
  j["oracle"] = o;
  j["notes"] = r.notes;
  return j.dump(indent);
}

ClassificationReport report_from_json(const std::string& text) {
  ClassificationReport r;
  try {
    json j = json::parse(text);
    r.schema = j.at("schema").get<std::string>();
    if (r.schema != "flagiso-report/1") throw Error("unsupported report schema: " + r.schema);
    r.type = j.at("type").get<std::string>();
    r.rank = j.at("rank").get<int>();
    r.theta = j.at("theta").get<std::vector<int>>();
    for (const auto& c : j.at("components"))
      r.components.push_back({c.at("roots").get<std::vector<std::string>>(), c.at("highest").get<std::string>(),
                              c.at("level").get<std::string>(), c.at("dim").get<std::size_t>(),
                              c.at("criterion_irreducible").get<bool>()});
    for (const auto& b : j.at("blocks"))
      r.blocks.push_back({block_kind_from_string(b.at("kind").get<std::string>()), b.at("component").get<std::size_t>(),
                          b.at("dim").get<std::size_t>(), b.at("basis_note").get<std::string>(),
                          certificate_from_string(b.at("certified_by").get<std::string>()),
                          b.at("support").get<std::vector<std::string>>()});
    for (const auto& e : j.at("equivalences"))
      r.equivalences.push_back(
          {e.at("blocks").get<std::vector<std::size_t>>(), decision_from_string(e.at("decided_by").get<std::string>())});
    for (const auto& f : j.at("continuum_families"))
      r.continuum_families.push_back({f.at("blocks").get<std::vector<std::size_t>>(), f.at("label").get<std::string>()});
    const auto& o = j.at("oracle");
    r.oracle.ran = o.at("ran").get<bool>();
    r.oracle.verified = o.at("verified").get<bool>();
    r.oracle.commutant_dims = o.at("commutant_dims").get<std::vector<std::size_t>>();
    for (const auto& t : o.at("intertwiner_dims"))
      r.oracle.intertwiner_dims.push_back({t.at("a").get<std::size_t>(), t.at("b").get<std::size_t>(), t.at("dim").get<std::size_t>()});
    r.oracle.isotypic_dims = o.at("isotypic_dims").get<std::vector<std::size_t>>();
    r.oracle.oracle_isotypic_dims = o.at("oracle_isotypic_dims").get<std::vector<std::size_t>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string render_table(const ClassificationReport& r) {
  std::ostringstream os;
  os << r.type << r.rank << "  theta = {" << join_numbers(r.theta, ",") << "}\n\n";
  os << "components\n";
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    const auto& c = r.components[i];
    os << "  [" << i << "] dim " << c.dim << "  highest " << c.highest << "  level " << c.level
       << (c.criterion_irreducible ? "  irreducible (criterion)" : "") << "\n";
    os << "      " << join(c.roots, " ") << "\n";
  }
  os << "\nblocks\n";
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    const auto& b = r.blocks[i];
    os << "  #" << std::left << std::setw(3) << i << std::setw(15) << to_string(b.kind) << " comp " << std::setw(3)
       << b.component << " dim " << std::setw(4) << b.dim << " by " << std::setw(12) << to_string(b.certified_by) << b.basis_note
       << "\n";
  }
  if (!r.equivalences.empty()) {
    os << "\nequivalent blocks\n";
    for (const auto& e : r.equivalences) os << "  {" << join_numbers(e.blocks, ",") << "} by " << to_string(e.decided_by) << "\n";
  }
  if (!r.continuum_families.empty()) {
    os << "\ncontinuum families\n";
    for (const auto& f : r.continuum_families) os << "  {" << join_numbers(f.blocks, ",") << "} " << f.label << "\n";
  }
  os << "\noracle: " << (r.oracle.ran ? "ran" : "not run");
  if (!r.oracle.commutant_dims.empty()) os << ", verified " << (r.oracle.verified ? "yes" : "NO");
  os << "\n";
  if (!r.oracle.isotypic_dims.empty()) os << "isotypic dims " << join_numbers(r.oracle.isotypic_dims, " ") << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

} // namespace flagiso
