#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Deterministic synthetic log corpus used by the unit and acceptance tests.
// Sixteen generators mimic the line formats of well-known public log datasets
// (Apache, HDFS, Zookeeper, ...) at 2000 lines each; every generator is
// seeded, so the corpus is identical on every run.
namespace corpus {

/// The sixteen dataset names, sorted.
const std::vector<std::string>& sample_names();

/// Names of the samples rich in structured tokens.
const std::vector<std::string>& structured_rich_names();

/// 2000 synthetic lines in the named dataset's style.
std::string sample(const std::string& name);

/// Lines dominated by standalone numeric tokens (for profiling decompression).
std::string numeric_heavy(std::size_t lines);

/// Mixed-template log for throughput measurements.
std::string throughput_log(std::size_t lines);

/// Arbitrary byte noise (may lack trailing newline, contain NULs, be empty).
std::string fuzz_input(std::uint32_t seed);

}  // namespace corpus
