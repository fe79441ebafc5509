#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tlsra/greedy.hpp"

namespace tlsra {

// {"algorithm", "k", "u_set": [ids], "trace": [{"nodes", "phase_k"}], "instance_digest"}
nlohmann::json to_json(const Solution& sol);
Solution solution_from_json(const nlohmann::json& doc);

// Compact JSON with sorted keys and a trailing newline.
std::string dump_canonical(const nlohmann::json& doc);

Solution load_solution(const std::filesystem::path& path);
void save_solution(const Solution& sol, const std::filesystem::path& path);

// {"mergings": [[ids]...]}
nlohmann::json schedule_to_json(const std::vector<std::vector<NodeId>>& mergings);
std::vector<std::vector<NodeId>> schedule_from_json(const nlohmann::json& doc);
std::vector<std::vector<NodeId>> load_schedule(const std::filesystem::path& path);

}  // namespace tlsra
