#include "tlsra/instance_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

namespace tlsra {

namespace {

using nlohmann::json;

std::vector<std::vector<NodeId>> parse_relation(const json& doc, const char* key,
                                                std::size_t n) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  if (!it->is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  if (it->size() != n) {
    throw ParseError(std::string("field '") + key + "' has " + std::to_string(it->size()) +
                     " rows, expected n = " + std::to_string(n));
  }
  std::vector<std::vector<NodeId>> rel(n);
  for (std::size_t v = 0; v < n; ++v) {
    const json& row = (*it)[v];
    auto where = [&](std::size_t i) {
      return std::string(key) + "[" + std::to_string(v) + "][" + std::to_string(i) + "]";
    };
    if (!row.is_array()) {
      throw ParseError(std::string(key) + "[" + std::to_string(v) + "] must be an array");
    }
    rel[v].reserve(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      const json& cell = row[i];
      if (!cell.is_number_integer()) throw ParseError(where(i) + ": expected an integer");
      auto id = cell.get<std::int64_t>();
      if (id < 0 || static_cast<std::uint64_t>(id) >= n) {
        throw ParseError(where(i) + " = " + std::to_string(id) + " is out of range (n = " +
                         std::to_string(n) + ")");
      }
      rel[v].push_back(static_cast<NodeId>(id));
    }
  }
  return rel;
}

void append_uint(std::string& out, std::uint64_t value) {
  std::array<char, 24> buf;
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  out.append(buf.data(), res.ptr);
}

void append_relation(std::string& out, const std::vector<std::vector<NodeId>>& rel) {
  out += "[\n";
  for (std::size_t v = 0; v < rel.size(); ++v) {
    out += "  [";
    for (std::size_t i = 0; i < rel[v].size(); ++i) {
      if (i) out += ',';
      append_uint(out, rel[v][i]);
    }
    out += (v + 1 < rel.size()) ? "],\n" : "]\n";
  }
  out += "]";
}

}  // namespace

LoadedInstance parse_instance(std::string_view text, const LoadOptions& opts) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  auto n_it = doc.find("n");
  if (n_it == doc.end()) throw ParseError("missing field 'n'");
  if (!n_it->is_number_integer() || n_it->get<std::int64_t>() <= 0) {
    throw ParseError("field 'n' must be a positive integer");
  }

  LoadedInstance out;
  Instance& inst = out.instance;
  inst.n = n_it->get<std::size_t>();
  inst.dmin = parse_relation(doc, "dmin", inst.n);
  inst.dmax = parse_relation(doc, "dmax", inst.n);
  if (auto meta = doc.find("meta"); meta != doc.end()) {
    if (!meta->is_object()) throw ParseError("field 'meta' must be an object");
    inst.meta = std::move(*meta);
  }
  out.report = canonicalize(inst, {.repair_containment = opts.repair_containment});
  require_valid(inst);
  return out;
}

LoadedInstance load_instance(const std::filesystem::path& path, const LoadOptions& opts) {
  try {
    return parse_instance(read_file(path), opts);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const InvalidInstance& e) {
    throw InvalidInstance(path.string() + ": " + e.what());
  }
}

std::string to_canonical_json(const Instance& inst) {
  std::string out;
  out += "{\n\"n\": ";
  append_uint(out, inst.n);
  out += ",\n\"dmin\": ";
  append_relation(out, inst.dmin);
  out += ",\n\"dmax\": ";
  append_relation(out, inst.dmax);
  out += ",\n\"meta\": ";
  out += inst.meta.is_null() ? std::string("{}") : inst.meta.dump();
  out += "\n}\n";
  return out;
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  write_file(path, to_canonical_json(inst));
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 0xF];
  }
  return hex;
}

std::string instance_digest(const Instance& inst) { return sha256_hex(to_canonical_json(inst)); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace tlsra
