#include "tlsra/solution_io.hpp"

#include "tlsra/instance_io.hpp"

namespace tlsra {

namespace {

using nlohmann::json;

json parse_doc(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte));
  }
}

std::vector<NodeId> id_list(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw ParseError(where + " must be an array");
  std::vector<NodeId> ids;
  ids.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& cell = arr[i];
    if (!cell.is_number_integer() || cell.get<std::int64_t>() < 0) {
      throw ParseError(where + "[" + std::to_string(i) + "] must be a non-negative integer");
    }
    ids.push_back(cell.get<NodeId>());
  }
  return ids;
}

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

json to_json(const Solution& sol) {
  json trace = json::array();
  for (const auto& m : sol.trace) trace.push_back({{"nodes", m.nodes}, {"phase_k", m.phase_k}});
  return {{"algorithm", sol.algorithm},
          {"k", sol.k},
          {"u_set", sol.u_set},
          {"trace", std::move(trace)},
          {"instance_digest", sol.instance_digest}};
}

Solution solution_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("solution must be a JSON object");
  Solution sol;
  const auto& algo = field(doc, "algorithm");
  if (!algo.is_string()) throw ParseError("field 'algorithm' must be a string");
  sol.algorithm = algo.get<std::string>();
  const auto& k = field(doc, "k");
  if (!k.is_number_integer() || k.get<std::int64_t>() < 0) {
    throw ParseError("field 'k' must be a non-negative integer");
  }
  sol.k = k.get<std::size_t>();
  sol.u_set = id_list(field(doc, "u_set"), "u_set");
  const auto& digest = field(doc, "instance_digest");
  if (!digest.is_string()) throw ParseError("field 'instance_digest' must be a string");
  sol.instance_digest = digest.get<std::string>();
  const auto& trace = field(doc, "trace");
  if (!trace.is_array()) throw ParseError("field 'trace' must be an array");
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto where = "trace[" + std::to_string(i) + "]";
    if (!trace[i].is_object()) throw ParseError(where + " must be an object");
    Merging m;
    m.nodes = id_list(field(trace[i], "nodes"), where + ".nodes");
    const auto& phase = field(trace[i], "phase_k");
    if (!phase.is_number_integer()) throw ParseError(where + ".phase_k must be an integer");
    m.phase_k = phase.get<std::size_t>();
    m.step_index = i;
    sol.trace.push_back(std::move(m));
  }
  return sol;
}

std::string dump_canonical(const json& doc) { return doc.dump() + "\n"; }

Solution load_solution(const std::filesystem::path& path) {
  try {
    return solution_from_json(parse_doc(read_file(path)));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_solution(const Solution& sol, const std::filesystem::path& path) {
  write_file(path, dump_canonical(to_json(sol)));
}

json schedule_to_json(const std::vector<std::vector<NodeId>>& mergings) {
  return {{"mergings", mergings}};
}

std::vector<std::vector<NodeId>> schedule_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("schedule must be a JSON object");
  const auto& arr = field(doc, "mergings");
  if (!arr.is_array()) throw ParseError("field 'mergings' must be an array");
  std::vector<std::vector<NodeId>> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(id_list(arr[i], "mergings[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::vector<NodeId>> load_schedule(const std::filesystem::path& path) {
  try {
    return schedule_from_json(parse_doc(read_file(path)));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace tlsra
