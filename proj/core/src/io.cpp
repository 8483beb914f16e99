#include "qchu/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace qchu {

using nlohmann::json;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("", "not valid JSON");
  return j;
}

void expect_kind(const json& j, const std::string& kind) {
  if (!j.is_object()) throw SchemaError("", "document must be an object");
  if (!j.contains("kind") || j["kind"] != kind)
    throw SchemaError("/kind", "expected \"" + kind + "\"");
}

std::vector<std::string> string_list(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string())
      throw SchemaError(ptr + "/" + std::to_string(i), "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

TruthValue cell_value(const json& c, const std::string& ptr) {
  if (c.is_string()) {
    const std::string s = c.get<std::string>();
    if (s == "Y") return TruthValue::Yes;
    if (s == "N") return TruthValue::No;
    if (s == "_") return TruthValue::Indeterminate;
  }
  throw SchemaError(ptr, "expected \"Y\", \"N\" or \"_\"");
}

std::pair<std::string, std::string> parse_pair_key(const std::string& key,
                                                   const std::string& ptr) {
  if (key.size() < 4 || key.front() != '[' || key.back() != ']')
    throw SchemaError(ptr, "expected \"[x,y]\"");
  const std::string body = key.substr(1, key.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos)
    throw SchemaError(ptr, "expected exactly one comma in \"" + key + "\"");
  return {body.substr(0, comma), body.substr(comma + 1)};
}

std::string pair_key(const Poset& p, const std::pair<int, int>& t) {
  return "[" + p.name(t.first) + "," + p.name(t.second) + "]";
}

}  // namespace

ChuSpace load_chu_text(const std::string& text) {
  const json j = parse(text);
  expect_kind(j, "chu3");
  if (!j.contains("preparations")) throw SchemaError("/preparations", "missing");
  if (!j.contains("tests")) throw SchemaError("/tests", "missing");
  if (!j.contains("evaluation")) throw SchemaError("/evaluation", "missing");
  ChuSpace out;
  out.preparations = string_list(j["preparations"], "/preparations");
  out.tests = string_list(j["tests"], "/tests");
  const json& ev = j["evaluation"];
  if (!ev.is_array() || ev.size() != out.preparations.size())
    throw SchemaError("/evaluation", "expected one row per preparation");
  for (std::size_t p = 0; p < ev.size(); ++p) {
    const json& row = ev[p];
    if (!row.is_array() || row.size() != out.tests.size())
      throw SchemaError("/evaluation/" + std::to_string(p), "expected one cell per test");
    std::vector<TruthValue> r;
    for (std::size_t t = 0; t < row.size(); ++t)
      r.push_back(cell_value(row[t], "/evaluation/" + std::to_string(p) + "/" +
                                         std::to_string(t)));
    out.eval.push_back(std::move(r));
  }
  return out;
}

ChuSpace load_chu_file(const std::string& path) { return load_chu_text(read_file(path)); }

std::string save_chu(const ChuSpace& space) {
  json j;
  j["kind"] = "chu3";
  j["preparations"] = space.preparations;
  j["tests"] = space.tests;
  json rows = json::array();
  for (const auto& row : space.eval) {
    json r = json::array();
    for (TruthValue v : row) r.push_back(truth_name(v));
    rows.push_back(std::move(r));
  }
  j["evaluation"] = std::move(rows);
  return j.dump(2) + "\n";
}

StateSpace load_state_space_text(const std::string& text) {
  const json j = parse(text);
  expect_kind(j, "state_space");
  if (!j.contains("elements")) throw SchemaError("/elements", "missing");
  if (!j.contains("leq")) throw SchemaError("/leq", "missing");
  const std::vector<std::string> elements = string_list(j["elements"], "/elements");
  std::vector<std::pair<std::string, std::string>> pairs;
  const json& leq = j["leq"];
  if (!leq.is_array()) throw SchemaError("/leq", "expected an array of pairs");
  for (std::size_t k = 0; k < leq.size(); ++k) {
    const auto pair = string_list(leq[k], "/leq/" + std::to_string(k));
    if (pair.size() != 2)
      throw SchemaError("/leq/" + std::to_string(k), "expected a two-element pair");
    pairs.emplace_back(pair[0], pair[1]);
  }
  StateSpace out;
  out.poset = Poset::from_pairs(elements, pairs);

  std::optional<std::vector<int>> star;
  if (j.contains("star")) {
    if (!j["star"].is_object()) throw SchemaError("/star", "expected an object");
    star.emplace(out.poset.size(), -1);
    for (const auto& [key, value] : j["star"].items()) {
      const int i = out.poset.index(key);
      if (i < 0) throw SchemaError("/star/" + key, "unknown element");
      if (!value.is_string()) throw SchemaError("/star/" + key, "expected a string");
      const int v = out.poset.index(value.get<std::string>());
      if (v < 0) throw SchemaError("/star/" + key, "unknown image element");
      (*star)[i] = v;
    }
  }
  if (j.contains("scheme")) {
    const json& sch = j["scheme"];
    if (!sch.is_array()) throw SchemaError("/scheme", "expected an array of pairs");
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t k = 0; k < sch.size(); ++k) {
      const auto pair = string_list(sch[k], "/scheme/" + std::to_string(k));
      if (pair.size() != 2)
        throw SchemaError("/scheme/" + std::to_string(k), "expected a two-element pair");
      const int a = out.poset.index(pair[0]);
      const int b = out.poset.index(pair[1]);
      if (a < 0 || b < 0)
        throw SchemaError("/scheme/" + std::to_string(k), "unknown element");
      pairs.emplace_back(a, b);
    }
    out.scheme = Scheme{std::move(pairs), star};
  } else if (star) {
    out.scheme = scheme_from_star(out, *star);
  }
  return out;
}

StateSpace load_state_space_file(const std::string& path) {
  return load_state_space_text(read_file(path));
}

std::string save_state_space(const StateSpace& space) {
  const Poset& p = space.poset;
  std::vector<std::string> elements = p.names();
  std::sort(elements.begin(), elements.end());

  json j;
  j["kind"] = "state_space";
  j["elements"] = elements;
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& [lo, hi] : p.cover_relation()) covers.emplace_back(p.name(lo), p.name(hi));
  std::sort(covers.begin(), covers.end());
  json leq = json::array();
  for (const auto& [lo, hi] : covers) leq.push_back(json::array({lo, hi}));
  j["leq"] = std::move(leq);

  if (space.scheme) {
    if (space.scheme->star) {
      json star = json::object();
      for (int i = 0; i < p.size(); ++i)
        if ((*space.scheme->star)[i] >= 0)
          star[p.name(i)] = p.name((*space.scheme->star)[i]);
      j["star"] = std::move(star);
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [a, b] : space.scheme->pairs) pairs.emplace_back(p.name(a), p.name(b));
    std::sort(pairs.begin(), pairs.end());
    json scheme = json::array();
    for (const auto& [a, b] : pairs) scheme.push_back(json::array({a, b}));
    j["scheme"] = std::move(scheme);
  }
  return j.dump(2) + "\n";
}

Dictionary load_dictionary_text(const std::string& text, const std::string& base_dir) {
  const json j = parse(text);
  expect_kind(j, "dictionary");
  for (const char* key : {"source", "target", "f_states", "f_tests"})
    if (!j.contains(key)) throw SchemaError(std::string("/") + key, "missing");
  if (!j["source"].is_string()) throw SchemaError("/source", "expected a file name");
  if (!j["target"].is_string()) throw SchemaError("/target", "expected a file name");

  auto resolve = [&](const std::string& file) {
    const std::filesystem::path p(file);
    if (p.is_absolute() || base_dir.empty()) return file;
    return (std::filesystem::path(base_dir) / p).string();
  };
  Dictionary d;
  d.source = std::make_shared<StateSpace>(
      load_state_space_file(resolve(j["source"].get<std::string>())));
  d.target = std::make_shared<StateSpace>(
      load_state_space_file(resolve(j["target"].get<std::string>())));
  const Poset& ps = d.source->poset;
  const Poset& pt = d.target->poset;
  if (!d.source->scheme || !d.target->scheme)
    throw SchemaError("/source", "dictionary spaces need schemes");

  if (!j["f_states"].is_object()) throw SchemaError("/f_states", "expected an object");
  d.f_states.assign(ps.size(), -1);
  for (const auto& [key, value] : j["f_states"].items()) {
    const int s = ps.index(key);
    if (s < 0) throw SchemaError("/f_states/" + key, "unknown source element");
    if (!value.is_string()) throw SchemaError("/f_states/" + key, "expected a string");
    const int t = pt.index(value.get<std::string>());
    if (t < 0) throw SchemaError("/f_states/" + key, "unknown target element");
    d.f_states[s] = t;
  }
  for (int s = 0; s < ps.size(); ++s)
    if (d.f_states[s] < 0)
      throw SchemaError("/f_states", "missing image of " + ps.name(s));

  if (!j["f_tests"].is_object()) throw SchemaError("/f_tests", "expected an object");
  const Scheme& ut = *d.target->scheme;
  d.f_tests.assign(ut.pairs.size(), {-1, -1});
  for (const auto& [key, value] : j["f_tests"].items()) {
    const auto [ta, tb] = parse_pair_key(key, "/f_tests/" + key);
    const int a = pt.index(ta), b = pt.index(tb);
    if (a < 0 || b < 0) throw SchemaError("/f_tests/" + key, "unknown target element");
    const int k = ut.find_pair(a, b);
    if (k < 0) throw SchemaError("/f_tests/" + key, "not a target scheme pair");
    if (!value.is_string()) throw SchemaError("/f_tests/" + key, "expected a string");
    const auto [sa, sb] = parse_pair_key(value.get<std::string>(), "/f_tests/" + key);
    const int va = ps.index(sa), vb = ps.index(sb);
    if (va < 0 || vb < 0) throw SchemaError("/f_tests/" + key, "unknown source element");
    d.f_tests[k] = {va, vb};
  }
  for (std::size_t k = 0; k < ut.pairs.size(); ++k)
    if (d.f_tests[k].first < 0)
      throw SchemaError("/f_tests", "missing image of " + pair_key(pt, ut.pairs[k]));
  return d;
}

Dictionary load_dictionary_file(const std::string& path) {
  const std::filesystem::path p(path);
  return load_dictionary_text(read_file(path), p.parent_path().string());
}

std::string save_dictionary(const Dictionary& D, const std::string& source_file,
                            const std::string& target_file) {
  const Poset& ps = D.source->poset;
  const Poset& pt = D.target->poset;
  json j;
  j["kind"] = "dictionary";
  j["source"] = source_file;
  j["target"] = target_file;
  json fs = json::object();
  for (int s = 0; s < ps.size(); ++s) fs[ps.name(s)] = pt.name(D.f_states[s]);
  j["f_states"] = std::move(fs);
  json ft = json::object();
  const Scheme& ut = *D.target->scheme;
  for (std::size_t k = 0; k < ut.pairs.size(); ++k)
    ft[pair_key(pt, ut.pairs[k])] = pair_key(ps, D.f_tests[k]);
  j["f_tests"] = std::move(ft);
  return j.dump(2) + "\n";
}

std::string dot_closed_set_lattice(const ClosedSetLattice& L) {
  std::ostringstream out;
  out << "digraph closed_sets {\n  rankdir=BT;\n";
  auto label = [&](int i) {
    std::string s = "{";
    bool first = true;
    for (auto x = L.closed[i].find_first(); x != StateSet::npos;
         x = L.closed[i].find_next(x)) {
      if (!first) s += ",";
      s += L.names[x];
      first = false;
    }
    return s + "}";
  };
  for (int i = 0; i < static_cast<int>(L.closed.size()); ++i)
    out << "  n" << i << " [label=\"" << label(i) << "\"];\n";
  for (int i = 0; i < static_cast<int>(L.closed.size()); ++i) {
    for (int j = 0; j < static_cast<int>(L.closed.size()); ++j) {
      if (i == j || !L.closed[i].is_subset_of(L.closed[j])) continue;
      bool covered = true;
      for (int k = 0; k < static_cast<int>(L.closed.size()) && covered; ++k)
        if (k != i && k != j && L.closed[i].is_subset_of(L.closed[k]) &&
            L.closed[k].is_subset_of(L.closed[j]))
          covered = false;
      if (covered) out << "  n" << i << " -> n" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace qchu
