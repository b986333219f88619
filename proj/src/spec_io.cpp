#include "fmc/spec_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "fmc/errors.hpp"
#include "json.hpp"

namespace fmc {

namespace {

using json = nlohmann::json;

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + " is missing key '" + key + "'");
  return *it;
}

const json& array(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + " must be an array");
  return v;
}

long long integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + " must be an integer");
  return v.get<long long>();
}

std::size_t index(const json& v, const std::string& where) {
  long long i = integer(v, where);
  if (i < 0) throw IndexError(where + " is negative");
  return static_cast<std::size_t>(i);
}

Scalar literal(const json& v, const CyclotomicField& field, const std::string& where) {
  if (v.is_number_integer()) return Scalar(field, Rational(v.get<long long>()));
  if (!v.is_string()) throw ParseError(where + " must be a scalar literal string");
  try {
    return parse_scalar(v.get<std::string>(), field);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

void require_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ParseError(where + " has unknown key '" + key + "'");
  }
}

GradedModule parse_module(const json& m, const GradingPtr& grading, const std::string& where) {
  require_keys(m, {"dimension", "degrees"}, where);
  long long dim = integer(member(m, "dimension", where), where + ".dimension");
  if (dim < 0) throw ParseError(where + ".dimension must be >= 0");
  const json& degs = array(member(m, "degrees", where), where + ".degrees");
  if (static_cast<long long>(degs.size()) != dim) {
    throw ParseError(where + ".degrees has " + std::to_string(degs.size()) + " entries, dimension is " +
                     std::to_string(dim));
  }
  const auto& orders = grading->group().cyclic_orders();
  std::vector<GroupElement> degrees;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    const std::string w = where + ".degrees[" + std::to_string(i) + "]";
    const json& d = array(degs[i], w);
    if (d.size() != orders.size()) {
      throw GradingError(w + " has " + std::to_string(d.size()) + " components, group rank is " +
                         std::to_string(orders.size()));
    }
    GroupElement::Components c;
    for (std::size_t j = 0; j < d.size(); ++j) {
      long long x = integer(d[j], w);
      if (x < 0 || x >= orders[j]) {
        throw GradingError(w + " component " + std::to_string(j) + " = " + std::to_string(x) + " is not reduced mod " +
                           std::to_string(orders[j]));
      }
      c.push_back(static_cast<int>(x));
    }
    degrees.emplace_back(std::move(c));
  }
  return GradedModule(grading, std::move(degrees));
}

template <std::size_t K>
std::array<std::size_t, K> entry_indices(const json& e, const std::string& w) {
  const json& row = array(e, w);
  if (row.size() != K + 1) throw ParseError(w + " must have " + std::to_string(K + 1) + " elements");
  std::array<std::size_t, K> idx{};
  for (std::size_t t = 0; t < K; ++t) idx[t] = index(row[t], w);
  return idx;
}

AlgebraSpec build(const json& doc) {
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  require_keys(doc, {"group", "bicharacter", "scalars", "module", "products", "representations", "forms"}, "document");

  const json& group = member(doc, "group", "document");
  require_keys(group, {"cyclic_orders"}, "group");
  std::vector<int> orders;
  for (const auto& d : array(member(group, "cyclic_orders", "group"), "group.cyclic_orders")) {
    long long x = integer(d, "group.cyclic_orders");
    if (x < 2 || x > 1'000'000) throw GradingError("cyclic order " + std::to_string(x) + " must be >= 2");
    orders.push_back(static_cast<int>(x));
  }

  const json& bich = member(doc, "bicharacter", "document");
  require_keys(bich, {"root_order", "exponents"}, "bicharacter");
  long long n = integer(member(bich, "root_order", "bicharacter"), "bicharacter.root_order");
  if (n < 1 || n > 10'000) throw BicharacterError("root_order " + std::to_string(n) + " out of range");
  std::vector<std::vector<long long>> exps;
  for (const auto& row : array(member(bich, "exponents", "bicharacter"), "bicharacter.exponents")) {
    std::vector<long long> r;
    for (const auto& x : array(row, "bicharacter.exponents row")) r.push_back(integer(x, "bicharacter.exponents"));
    exps.push_back(std::move(r));
  }
  if (exps.size() != orders.size()) {
    throw BicharacterError("exponent matrix has " + std::to_string(exps.size()) + " rows, group rank is " +
                           std::to_string(orders.size()));
  }
  for (const auto& r : exps) {
    if (r.size() != orders.size()) throw BicharacterError("exponent matrix is not square");
  }
  GradingPtr grading = make_grading(FiniteAbelianGroup(orders), Bicharacter(static_cast<int>(n), exps));

  if (auto it = doc.find("scalars"); it != doc.end()) {
    require_keys(*it, {"cyclotomic_order"}, "scalars");
    long long c = integer(member(*it, "cyclotomic_order", "scalars"), "scalars.cyclotomic_order");
    if (c != n) {
      throw ScalarOrderError("scalars.cyclotomic_order = " + std::to_string(c) + " differs from root_order = " +
                             std::to_string(n));
    }
  }

  AlgebraSpec spec(parse_module(member(doc, "module", "document"), grading, "module"));
  const CyclotomicField& field = spec.field();

  if (auto it = doc.find("products"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("products must be an object");
    for (const auto& [name, rows] : it->items()) {
      const std::string where = "products." + name;
      std::set<std::array<std::size_t, 3>> seen;
      std::vector<BilinearMap::Entry> entries;
      std::size_t r = 0;
      for (const auto& e : array(rows, where)) {
        const std::string w = where + "[" + std::to_string(r++) + "]";
        auto idx = entry_indices<3>(e, w);
        if (!seen.insert(idx).second) throw ParseError(w + " duplicates an earlier entry");
        entries.push_back({idx[0], idx[1], idx[2], literal(e[3], field, w)});
      }
      spec.set_product(BilinearMap(name, spec.module, entries));
    }
  }

  if (auto it = doc.find("representations"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("representations must be an object");
    for (const auto& [name, rep] : it->items()) {
      const std::string where = "representations." + name;
      require_keys(rep, {"carrier", "action"}, where);
      const json& carrier = member(rep, "carrier", where);
      bool self = false;
      std::optional<GradedModule> v;
      if (carrier.is_string()) {
        if (carrier.get<std::string>() != "self") throw ParseError(where + ".carrier must be \"self\" or a module");
        self = true;
        v = spec.module;
      } else {
        v = parse_module(carrier, grading, where + ".carrier");
      }
      std::set<std::array<std::size_t, 3>> seen;
      std::vector<Representation::Entry> entries;
      std::size_t r = 0;
      for (const auto& e : array(member(rep, "action", where), where + ".action")) {
        const std::string w = where + ".action[" + std::to_string(r++) + "]";
        auto idx = entry_indices<3>(e, w);
        if (!seen.insert(idx).second) throw ParseError(w + " duplicates an earlier entry");
        entries.push_back({idx[0], idx[1], idx[2], literal(e[3], field, w)});
      }
      spec.set_representation(Representation(name, spec.module, *v, self, entries));
    }
  }

  if (auto it = doc.find("forms"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("forms must be an object");
    for (const auto& [name, rows] : it->items()) {
      const std::string where = "forms." + name;
      std::set<std::array<std::size_t, 2>> seen;
      std::vector<BilinearForm::Entry> entries;
      std::size_t r = 0;
      for (const auto& e : array(rows, where)) {
        const std::string w = where + "[" + std::to_string(r++) + "]";
        auto idx = entry_indices<2>(e, w);
        if (!seen.insert(idx).second) throw ParseError(w + " duplicates an earlier entry");
        entries.push_back({idx[0], idx[1], literal(e[2], field, w)});
      }
      spec.set_form(BilinearForm(name, spec.module, entries));
    }
  }
  return spec;
}

json module_json(const GradedModule& m) {
  json degrees = json::array();
  for (const auto& d : m.degrees()) {
    json c = json::array();
    for (int x : d.components()) c.push_back(x);
    degrees.push_back(std::move(c));
  }
  return json{{"dimension", m.dim()}, {"degrees", std::move(degrees)}};
}

bool primitive(const json& v) { return !v.is_array() && !v.is_object(); }

// Arrays of primitives stay on one line; everything else gets one element per line.
void pretty(const json& v, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : v.items()) {
      out += pad + json(key).dump() + ": ";
      pretty(value, out, indent + 2);
      out += ++i < v.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (v.is_array()) {
    bool flat = true;
    for (const auto& x : v) flat = flat && primitive(x);
    if (flat) {
      out += "[";
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += pad;
      pretty(v[i], out, indent + 2);
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else {
    out += v.dump();
  }
}

json witness_json(const CheckReport& r) {
  if (!r.witness) return nullptr;
  json defect = json::array();
  for (const auto& s : r.witness->defect) defect.push_back(s.str());
  return json{{"indices", r.witness->indices}, {"defect", std::move(defect)}};
}

std::string join_indices(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

}  // namespace

AlgebraSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what(), e.byte);
  }
  try {
    return build(doc);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

AlgebraSpec parse_spec_file(const std::string& path) { return parse_spec(read_text(path)); }

std::string emit_spec(const AlgebraSpec& spec) {
  const Grading& g = spec.grading();
  json doc;
  doc["group"] = json{{"cyclic_orders", g.group().cyclic_orders()}};
  doc["bicharacter"] = json{{"root_order", g.root_order()}, {"exponents", g.bicharacter().exponents()}};
  doc["scalars"] = json{{"cyclotomic_order", g.root_order()}};
  doc["module"] = module_json(spec.module);

  json products = json::object();
  for (const auto& [name, m] : spec.products) {
    json rows = json::array();
    for (const auto& e : m.entries()) rows.push_back(json::array({e.i, e.j, e.k, e.coeff.str()}));
    products[name] = std::move(rows);
  }
  doc["products"] = std::move(products);

  json reps = json::object();
  for (const auto& [name, r] : spec.representations) {
    json rows = json::array();
    for (const auto& e : r.entries()) rows.push_back(json::array({e.i, e.row, e.col, e.coeff.str()}));
    reps[name] = json{{"carrier", r.self_carrier() ? json("self") : module_json(r.carrier())},
                      {"action", std::move(rows)}};
  }
  doc["representations"] = std::move(reps);

  json forms = json::object();
  for (const auto& [name, f] : spec.forms) {
    json rows = json::array();
    const Matrix& m = f.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!m(i, j).is_zero()) rows.push_back(json::array({i, j, m(i, j).str()}));
      }
    }
    forms[name] = std::move(rows);
  }
  doc["forms"] = std::move(forms);

  std::string out;
  pretty(doc, out, 0);
  return out + "\n";
}

std::string emit_report(const std::vector<CheckReport>& reports, ReportFormat format) {
  if (format == ReportFormat::Json) {
    json arr = json::array();
    for (const auto& r : reports) {
      json o{{"identity", r.identity},
             {"verdict", r.passed ? "pass" : "fail"},
             {"witness", witness_json(r)},
             {"tuples_checked", r.tuples_checked}};
      if (!r.note.empty()) o["note"] = r.note;
      arr.push_back(std::move(o));
    }
    std::string out;
    pretty(arr, out, 0);
    return out + "\n";
  }
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.passed ? "PASS " : "FAIL ") << r.identity << "  [" << r.tuples_checked << " tuples]";
    if (r.witness) {
      os << "  witness " << join_indices(r.witness->indices) << " defect [";
      for (std::size_t i = 0; i < r.witness->defect.size(); ++i) os << (i ? ", " : "") << r.witness->defect[i];
      os << "]";
    }
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << "\n";
  }
  return os.str();
}

std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingInput("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MissingInput("cannot write '" + path + "'");
  out << text;
}

}  // namespace fmc
