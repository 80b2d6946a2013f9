#include "eefx/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "eefx/errors.hpp"

namespace eefx {

namespace {

std::string dec(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": values must be decimal strings");
  return parse_rational(j.get<std::string>());
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key, const std::string& where) {
  const Json& f = field(j, key, where);
  if (!f.is_number_integer()) throw InputError(where + ": \"" + key + "\" must be an integer");
  return f.get<int>();
}

Json valuation_to_json(const ValuationModel& v, const std::vector<std::string>& names) {
  struct Visitor {
    const std::vector<std::string>& names;
    Json operator()(const AdditiveValuation& a) const {
      Json values = Json::object();
      for (std::size_t g = 0; g < a.item_values.size(); ++g) values[names[g]] = dec(a.item_values[g]);
      return Json{{"type", "additive"}, {"values", values}};
    }
    Json operator()(const TableValuation& t) const {
      Json entries = Json::array();
      for (std::size_t mask = 0; mask < t.values.size(); ++mask)
        entries.push_back(Json{{"subset", bundle_to_json(Bundle(mask))}, {"value", dec(t.values[mask])}});
      return Json{{"type", "table"}, {"entries", entries}};
    }
    Json operator()(const CoverageValuation& c) const {
      Json weights = Json::array();
      for (const auto& w : c.weights) weights.push_back(dec(w));
      Json covers = Json::object();
      for (std::size_t g = 0; g < c.covers.size(); ++g) covers[names[g]] = c.covers[g];
      return Json{{"type", "coverage"}, {"weights", weights}, {"covers", covers}};
    }
    Json operator()(const HeavyExtension& h) const {
      std::vector<std::string> base_names(names.begin(), names.begin() + h.base_items);
      return Json{{"type", "heavy-extension"},
                  {"base_items", h.base_items},
                  {"heavy_value", dec(h.heavy_value)},
                  {"base", valuation_to_json(*h.base, base_names)}};
    }
  };
  return std::visit(Visitor{names}, v.kind());
}

std::map<std::string, int> name_index(const std::vector<std::string>& names) {
  std::map<std::string, int> index;
  for (std::size_t g = 0; g < names.size(); ++g) index[names[g]] = static_cast<int>(g);
  return index;
}

ValuationModel valuation_from_json(const Json& j, const std::vector<std::string>& names, const std::string& where) {
  const int m = static_cast<int>(names.size());
  const Json& type_field = field(j, "type", where);
  if (!type_field.is_string()) throw InputError(where + ": \"type\" must be a string");
  const std::string type = type_field.get<std::string>();
  const auto index = name_index(names);

  if (type == "additive") {
    const Json& values = field(j, "values", where);
    if (!values.is_object() || static_cast<int>(values.size()) != m)
      throw InputError(where + ": additive values must name every item exactly once");
    std::vector<Rational> item_values(m);
    for (const auto& [name, value] : values.items()) {
      auto it = index.find(name);
      if (it == index.end()) throw InputError(where + ": unknown item \"" + name + "\"");
      item_values[it->second] = rational_from_json(value, where);
    }
    return ValuationModel::additive(std::move(item_values));
  }
  if (type == "table") {
    if (m > 20) throw SizeError(where + ": explicit tables are limited to 20 items");
    const Json& entries = field(j, "entries", where);
    const std::size_t count = std::size_t{1} << m;
    if (!entries.is_array() || entries.size() != count)
      throw InputError(where + ": table must list all " + std::to_string(count) + " subsets");
    std::vector<Rational> values(count);
    std::vector<std::uint8_t> seen(count, 0);
    for (const auto& e : entries) {
      const Bundle s = bundle_from_json(field(e, "subset", where), m);
      if (seen[s.bits()]) throw InputError(where + ": subset listed twice");
      seen[s.bits()] = 1;
      values[s.bits()] = rational_from_json(field(e, "value", where), where);
    }
    return ValuationModel::table(m, std::move(values), true);
  }
  if (type == "coverage") {
    const Json& weights_json = field(j, "weights", where);
    if (!weights_json.is_array()) throw InputError(where + ": coverage weights must be an array");
    std::vector<Rational> weights;
    for (const auto& w : weights_json) weights.push_back(rational_from_json(w, where));
    const Json& covers_json = field(j, "covers", where);
    if (!covers_json.is_object() || static_cast<int>(covers_json.size()) != m)
      throw InputError(where + ": coverage must list elements for every item exactly once");
    std::vector<std::vector<int>> covers(m);
    for (const auto& [name, list] : covers_json.items()) {
      auto it = index.find(name);
      if (it == index.end()) throw InputError(where + ": unknown item \"" + name + "\"");
      if (!list.is_array()) throw InputError(where + ": element lists must be arrays");
      for (const auto& e : list) {
        if (!e.is_number_integer()) throw InputError(where + ": elements must be integers");
        covers[it->second].push_back(e.get<int>());
      }
    }
    return ValuationModel::coverage(m, std::move(weights), std::move(covers));
  }
  if (type == "heavy-extension") {
    const int base_items = int_field(j, "base_items", where);
    if (base_items < 0 || base_items > m) throw InputError(where + ": base_items out of range");
    std::vector<std::string> base_names(names.begin(), names.begin() + base_items);
    ValuationModel base = valuation_from_json(field(j, "base", where), base_names, where + ".base");
    return ValuationModel::heavy_extension(std::move(base), m - base_items,
                                           rational_from_json(field(j, "heavy_value", where), where));
  }
  throw InputError(where + ": unknown valuation type \"" + type + "\"");
}

}  // namespace

Json bundle_to_json(Bundle b) { return Json(b.items()); }

Bundle bundle_from_json(const Json& j, int m) {
  if (!j.is_array()) throw InputError("bundles must be arrays of item indices");
  Bundle b;
  int previous = -1;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InputError("item indices must be integers");
    const int g = e.get<int>();
    if (g < 0 || g >= m) throw InputError("item index " + std::to_string(g) + " out of range");
    if (g <= previous) throw InputError("item indices must be sorted and distinct");
    previous = g;
    b.insert(g);
  }
  return b;
}

Json instance_to_json(const Instance& inst) {
  Json valuations = Json::array();
  for (const auto& v : inst.valuations) valuations.push_back(valuation_to_json(v, inst.items));
  Json j{{"schema_version", kInstanceSchema}, {"n", inst.n()}, {"items", inst.items}, {"valuations", valuations}};
  Json provenance = Json::object();
  if (!inst.family.empty()) provenance["family"] = inst.family;
  if (inst.seed) provenance["seed"] = *inst.seed;
  if (inst.reduced)
    provenance["reduced"] = Json{{"base_items", inst.reduced->base_items},
                                 {"heavy_items", inst.reduced->heavy_items},
                                 {"heavy_value", dec(inst.reduced->heavy_value)}};
  if (!provenance.empty()) j["provenance"] = provenance;
  return j;
}

Instance instance_from_json(const Json& j) {
  const std::string where = "instance";
  const Json& version = field(j, "schema_version", where);
  if (version != kInstanceSchema) throw InputError("unsupported instance schema " + version.dump());
  Instance inst;
  const Json& items = field(j, "items", where);
  if (!items.is_array()) throw InputError("instance: \"items\" must be an array of names");
  std::set<std::string> unique;
  for (const auto& name : items) {
    if (!name.is_string()) throw InputError("instance: item names must be strings");
    if (!unique.insert(name.get<std::string>()).second) throw InputError("instance: duplicate item name");
    inst.items.push_back(name.get<std::string>());
  }
  if (inst.m() > kMaxItems) throw InputError("instance: at most 64 items are supported");
  const int n = int_field(j, "n", where);
  const Json& valuations = field(j, "valuations", where);
  if (!valuations.is_array() || static_cast<int>(valuations.size()) != n)
    throw InputError("instance: expected " + std::to_string(n) + " valuations");
  for (int i = 0; i < n; ++i)
    inst.valuations.push_back(valuation_from_json(valuations[i], inst.items, "valuation " + std::to_string(i)));
  if (j.contains("provenance")) {
    const Json& p = j.at("provenance");
    if (p.contains("family")) inst.family = p.at("family").get<std::string>();
    if (p.contains("seed")) inst.seed = p.at("seed").get<std::uint64_t>();
    if (p.contains("reduced")) {
      const Json& r = p.at("reduced");
      ReducedProvenance rp;
      rp.base_items = int_field(r, "base_items", "provenance.reduced");
      for (const auto& h : field(r, "heavy_items", "provenance.reduced")) rp.heavy_items.push_back(h.get<int>());
      rp.heavy_value = rational_from_json(field(r, "heavy_value", "provenance.reduced"), "provenance.reduced");
      inst.reduced = std::move(rp);
    }
  }
  inst.validate();
  return inst;
}

Json allocation_to_json(const AllocationFile& file) {
  Json bundles = Json::array();
  for (Bundle b : file.allocation.bundles) bundles.push_back(bundle_to_json(b));
  Json j{{"schema_version", kAllocationSchema}, {"bundles", bundles}};
  if (!file.certificates.empty()) {
    Json certs = Json::array();
    for (const auto& c : file.certificates) {
      Json cb = Json::array();
      for (Bundle b : c.bundles) cb.push_back(bundle_to_json(b));
      certs.push_back(Json{{"agent", c.agent}, {"bundles", cb}});
    }
    j["certificates"] = certs;
  }
  if (file.trace) j["trace"] = *file.trace;
  return j;
}

AllocationFile allocation_from_json(const Json& j) {
  const std::string where = "allocation";
  const Json& version = field(j, "schema_version", where);
  if (version != kAllocationSchema) throw InputError("unsupported allocation schema " + version.dump());
  AllocationFile file;
  const Json& bundles = field(j, "bundles", where);
  if (!bundles.is_array()) throw InputError("allocation: \"bundles\" must be an array");
  Bundle seen;
  for (const auto& b : bundles) {
    const Bundle bundle = bundle_from_json(b, kMaxItems);
    if (!bundle.disjoint(seen)) throw InputError("allocation: bundles overlap");
    seen = seen | bundle;
    file.allocation.bundles.push_back(bundle);
  }
  if (j.contains("certificates")) {
    for (const auto& c : j.at("certificates")) {
      CertificateRecord record;
      record.agent = int_field(c, "agent", "certificate");
      for (const auto& b : field(c, "bundles", "certificate")) record.bundles.push_back(bundle_from_json(b, kMaxItems));
      file.certificates.push_back(std::move(record));
    }
  }
  if (j.contains("trace")) file.trace = j.at("trace");
  return file;
}

Json trace_to_json(const SolverTrace& trace) {
  Json rounds = Json::array();
  for (const auto& r : trace.rounds) {
    Json partition = Json::array();
    for (Bundle b : r.partition) partition.push_back(bundle_to_json(b));
    Json graph = Json::array();
    for (int a = 0; a < r.graph.size(); ++a) {
      Json row = Json::array();
      for (int b = 0; b < r.graph.size(); ++b) row.push_back(r.graph.edge(a, b) ? 1 : 0);
      graph.push_back(row);
    }
    Json pairs = Json::array();
    for (const auto& p : r.matching.pairs)
      pairs.push_back(Json{{"row", p.agent}, {"agent", r.active_agents[p.agent]}, {"bundle", p.bundle}});
    Json assignments = Json::array();
    for (const auto& a : r.assignments) assignments.push_back(Json{{"agent", a.agent}, {"bundle", bundle_to_json(a.bundle)}});
    rounds.push_back(Json{{"active_agents", r.active_agents},
                          {"active_items", bundle_to_json(r.active_items)},
                          {"pivot", r.pivot},
                          {"partition", partition},
                          {"graph", graph},
                          {"matching", Json{{"perfect", r.matching.perfect}, {"pairs", pairs}}},
                          {"assignments", assignments}});
  }
  return Json{{"rounds", rounds}};
}

Json report_to_json(const FairnessReport& report, const Instance& inst) {
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    Json entry{{"agent", w.agent}};
    if (w.bundle >= 0) entry["bundle"] = w.bundle;
    if (w.item) {
      entry["item"] = *w.item;
      if (*w.item < inst.m()) entry["item_name"] = inst.items[*w.item];
    }
    witnesses.push_back(entry);
  }
  return Json{{"criterion", std::string(criterion_name(report.criterion))},
              {"satisfied", report.satisfied},
              {"witnesses", witnesses}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << contents;
    if (!out) throw InputError("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace eefx
