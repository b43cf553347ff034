#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hetperc::cli {

/// 64-bit FNV-1a over the bytes of a file, as 16 hex digits.
std::string fnv1a64_file(const std::string& path);
std::string fnv1a64_hex(const std::string& bytes);

/*
  Provenance written next to every output file as <output>.manifest.json.
  Everything outside the "execution" block is a pure function of the
  command line and the input files, so two runs with the same manifest
  produce byte-identical outputs. "execution" holds the worker count and
  the wall-clock timestamp, which never affect results.
*/
struct Manifest {
  std::string subcommand;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<std::string> inputs;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> outputs;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  std::size_t workers = 0;

  nlohmann::ordered_json to_json(const std::string& timestamp) const;
};

std::string utc_timestamp();

void write_text_file(const std::string& path, const std::string& content);

/// Writes <output>.manifest.json and returns its path.
std::string write_manifest(const std::string& output, const Manifest& m);

}  // namespace hetperc::cli
