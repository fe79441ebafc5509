#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tlsra/instance.hpp"

namespace tlsra {

// Malformed instance or solution text. The message names the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

struct LoadOptions {
  bool repair_containment = false;
};

struct LoadedInstance {
  Instance instance;
  CanonicalizeReport report;
};

// Instance JSON: {"n": int, "dmin": [[ids]...], "dmax": [[ids]...], "meta": {...}}.
// Rows are canonicalized (sorted, deduplicated, self entries stripped and
// counted in the report) and the result is validated. Throws ParseError or
// InvalidInstance.
LoadedInstance parse_instance(std::string_view text, const LoadOptions& opts = {});
LoadedInstance load_instance(const std::filesystem::path& path, const LoadOptions& opts = {});

// Canonical serialization: fixed key order n, dmin, dmax, meta; one row per
// line. Byte-identical for equal instances.
std::string to_canonical_json(const Instance& inst);
void save_instance(const Instance& inst, const std::filesystem::path& path);

// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view bytes);

// SHA-256 of to_canonical_json(inst).
std::string instance_digest(const Instance& inst);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace tlsra
