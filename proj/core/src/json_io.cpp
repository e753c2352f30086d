#include "finloc/json_io.hpp"

#include <map>
#include <string>

#include "finloc/error.hpp"

namespace finloc {

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(Errc::malformed_input, std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    fail(Errc::malformed_input, std::string("field \"") + key + "\": " + e.what());
  }
}

Json big(const boost::multiprecision::cpp_int& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return v.convert_to<std::int64_t>();
  return v.str();
}

}  // namespace

Json to_json(const WSet& x) {
  return {{"horizon", x.horizon()},
          {"elements", std::vector<Nat>(x.elements().begin(), x.elements().end())}};
}

Json to_json(const BlockFamily& f) {
  Json blocks = Json::array();
  for (const auto& b : f.blocks()) blocks.push_back(b);
  return {{"horizon", f.horizon()}, {"blocks", blocks}, {"covering", f.covering()}};
}

Json to_json(const Creature& t) {
  Json nodes = Json::array(), norms = Json::array();
  // pre-order, so parents precede children and siblings appear by label
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    const auto& n = t.node(v);
    const auto path = t.path(v);
    nodes.push_back({{"path", path}, {"L", n.L}, {"R", n.R}});
    if (n.norm) {
      Json nj{{"path", path}};
      if (n.norm->is_log()) {
        nj["kind"] = "log";
      } else {
        const auto* tab = n.norm->as_table();
        Json rows = Json::array();
        for (std::size_t m = 0; m < tab->values.size(); ++m) rows.push_back({m, tab->values[m]});
        nj["table"] = rows;
        if (tab->base != t.child_labels(v)) nj["base"] = tab->base;
      }
      if (n.norm->shift() != 0) nj["shift"] = n.norm->shift();
      norms.push_back(nj);
    }
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
  return {{"k", t.k()}, {"nodes", nodes}, {"norms", norms}};
}

Json to_json(const ConditionFragment& f) {
  Json cs = Json::array();
  for (const auto& t : f.creatures) cs.push_back(to_json(t));
  return {{"w", f.w}, {"creatures", cs}};
}

Json to_json(const FiniteRelationInstance& r) {
  return {{"left", r.left()}, {"right", r.right()}, {"table", r.table()}};
}

Json to_json(const Derivation& d) {
  using Op = Derivation::Op;
  Json j;
  switch (d.op) {
    case Op::part:
      return {{"op", "part"}, {"index", d.part}};
    case Op::upper_half:
      j["op"] = "upper_half";
      break;
    case Op::refine:
      j["op"] = "refine";
      break;
    case Op::build:
      j["op"] = "build";
      break;
  }
  Json ins = Json::array();
  for (const auto& in : d.inputs) ins.push_back(to_json(in));
  j["inputs"] = ins;
  if (d.result) j["result"] = to_json(*d.result);
  return j;
}

Json to_json(const FragmentHints& h) {
  Json ds = Json::array();
  for (const auto& d : h.derivations) ds.push_back(to_json(d));
  return {{"cuts", h.cuts}, {"derivations", ds}};
}

Json to_json(const PairCondition& p) {
  Json kk = Json::array();
  for (const auto& f : p.kk) kk.push_back(f);
  return {{"u", p.u}, {"KK", kk}};
}

Json to_json(const Rational& q) {
  return {{"num", big(boost::multiprecision::numerator(q))},
          {"den", big(boost::multiprecision::denominator(q))}};
}

WSet wset_from_json(const Json& j) {
  return WSet(get<Nat>(j, "horizon"), get<std::vector<Nat>>(j, "elements"));
}

BlockFamily blockfamily_from_json(const Json& j) {
  const bool covering = j.is_object() && j.contains("covering") ? get<bool>(j, "covering") : false;
  return BlockFamily(get<Nat>(j, "horizon"), get<std::vector<std::vector<Nat>>>(j, "blocks"),
                     covering);
}

Creature creature_from_json(const Json& j) {
  const auto k = get<std::size_t>(j, "k");
  const auto nodes_j = get<Json>(j, "nodes");
  if (!nodes_j.is_array()) fail(Errc::malformed_input, "\"nodes\" must be an array");
  std::map<std::vector<Nat>, CreatureNode> by_path;
  for (const auto& nj : nodes_j) {
    CreatureNode n;
    n.L = get<Nat>(nj, "L");
    n.R = get<Nat>(nj, "R");
    auto path = get<std::vector<Nat>>(nj, "path");
    n.label = path.empty() ? 0 : path.back();
    if (!by_path.emplace(path, n).second) fail(Errc::malformed_input, "duplicate node path");
  }
  if (!by_path.count({})) fail(Errc::malformed_input, "missing root (empty path)");

  // lexicographic order puts parents first and siblings by label
  std::map<std::vector<Nat>, std::size_t> index;
  std::vector<CreatureNode> nodes;
  for (auto& [path, n] : by_path) {
    const std::size_t idx = nodes.size();
    index[path] = idx;
    nodes.push_back(n);
    if (!path.empty()) {
      auto parent = path;
      parent.pop_back();
      auto it = index.find(parent);
      if (it == index.end()) fail(Errc::malformed_input, "node without parent");
      nodes[it->second].children.push_back(idx);
    }
  }
  if (j.contains("norms")) {
    for (const auto& nj : get<Json>(j, "norms")) {
      const auto path = get<std::vector<Nat>>(nj, "path");
      auto it = index.find(path);
      if (it == index.end()) fail(Errc::malformed_input, "norm on an unknown node");
      auto& node = nodes[it->second];
      const Nat shift = nj.contains("shift") ? get<Nat>(nj, "shift") : 0;
      if (nj.contains("kind")) {
        if (get<std::string>(nj, "kind") != "log") fail(Errc::malformed_input, "unknown norm kind");
        node.norm = Norm::log(shift);
        continue;
      }
      std::vector<Nat> base;
      if (nj.contains("base")) {
        base = get<std::vector<Nat>>(nj, "base");
      } else {
        for (std::size_t c : node.children) base.push_back(nodes[c].label);
      }
      if (base.size() > kMaxTableBase) fail(Errc::invalid_argument, "table base too large");
      const std::size_t total = std::size_t{1} << base.size();
      std::vector<Nat> values(total, 0);
      std::vector<bool> given(total, false);
      for (const auto& row : get<Json>(nj, "table")) {
        if (!row.is_array() || row.size() != 2) fail(Errc::malformed_input, "table rows are [mask, value]");
        const auto mask = row[0].get<std::size_t>();
        if (mask >= total) fail(Errc::malformed_input, "mask outside the base");
        values[mask] = row[1].get<Nat>();
        given[mask] = true;
      }
      for (bool g : given) {
        if (!g) fail(Errc::table_not_total, "norm table misses some subset");
      }
      node.norm = Norm::table(std::move(base), std::move(values), shift);
    }
  }
  return Creature(k, std::move(nodes));
}

ConditionFragment fragment_from_json(const Json& j) {
  ConditionFragment f;
  f.w = get<std::vector<Nat>>(j, "w");
  for (const auto& c : get<Json>(j, "creatures")) f.creatures.push_back(creature_from_json(c));
  check_fragment(f);
  return f;
}

FiniteRelationInstance relinstance_from_json(const Json& j) {
  auto table = get<std::vector<std::vector<bool>>>(j, "table");
  if (j.contains("left")) {
    return FiniteRelationInstance(get<std::vector<std::string>>(j, "left"),
                                  get<std::vector<std::string>>(j, "right"), std::move(table));
  }
  return FiniteRelationInstance::from_table(std::move(table));
}

Derivation derivation_from_json(const Json& j) {
  const auto op = get<std::string>(j, "op");
  if (op == "part") return Derivation::of_part(get<std::size_t>(j, "index"));
  std::vector<Derivation> ins;
  for (const auto& in : get<Json>(j, "inputs")) ins.push_back(derivation_from_json(in));
  if (op == "upper_half") {
    if (ins.size() != 1) fail(Errc::malformed_input, "upper_half takes one input");
    return Derivation::upper_half_of(std::move(ins[0]));
  }
  auto result = creature_from_json(get<Json>(j, "result"));
  if (op == "refine") {
    if (ins.size() != 1) fail(Errc::malformed_input, "refine takes one input");
    return Derivation::refine_of(std::move(ins[0]), std::move(result));
  }
  if (op == "build") return Derivation::build_of(std::move(ins), std::move(result));
  fail(Errc::malformed_input, "unknown derivation op \"" + op + "\"");
}

FragmentHints hints_from_json(const Json& j) {
  FragmentHints h;
  h.cuts = get<std::vector<std::size_t>>(j, "cuts");
  for (const auto& d : get<Json>(j, "derivations")) h.derivations.push_back(derivation_from_json(d));
  return h;
}

PairCondition pair_condition_from_json(const Json& j) {
  PairCondition p;
  p.u = get<std::vector<Nat>>(j, "u");
  for (const auto& f : get<Json>(j, "KK")) p.kk.insert(f.get<PairFamily>());
  check_pair_condition(p);
  return p;
}

}  // namespace finloc
