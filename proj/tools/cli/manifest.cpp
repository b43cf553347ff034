#include "manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iterator>
#include <sstream>

#include "hetperc/edge_list_io.hpp"

#ifndef HETPERC_VERSION
#define HETPERC_VERSION "unknown"
#endif

namespace hetperc::cli {

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open file");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return fnv1a64_hex(bytes);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::ordered_json Manifest::to_json(const std::string& timestamp) const {
  nlohmann::ordered_json j;
  j["tool"] = "hetperc";
  j["version"] = HETPERC_VERSION;
  j["subcommand"] = subcommand;
  j["parameters"] = parameters;
  nlohmann::ordered_json in = nlohmann::ordered_json::array();
  for (const std::string& path : inputs) {
    in.push_back({{"path", path}, {"fnv1a64", fnv1a64_file(path)}});
  }
  j["inputs"] = in;
  j["seeds"] = seeds;
  j["outputs"] = outputs;
  for (const auto& [key, value] : extra.items()) j[key] = value;
  j["execution"] = {{"workers", workers}, {"timestamp", timestamp}};
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path + ": cannot open file for writing");
  out << content;
  if (!out) throw FormatError(path + ": write failed");
}

std::string write_manifest(const std::string& output, const Manifest& m) {
  const std::string path = output + ".manifest.json";
  write_text_file(path, m.to_json(utc_timestamp()).dump(2) + "\n");
  return path;
}

}  // namespace hetperc::cli
