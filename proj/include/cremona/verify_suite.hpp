#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace cremona::suite {

struct SuiteOptions {
  std::uint64_t seed = 20111;
  std::size_t kernel_samples = 100;
  std::size_t decomposition_samples = 200;
  std::size_t normality_samples = 50;
  std::size_t character_samples = 20;
  std::size_t word_samples = 100;
  std::size_t parser_samples = 500;
};

struct SuiteLine {
  std::string name;
  bool passed = false;
  std::string detail;
  std::chrono::duration<double> elapsed{};
};

/// Runs every identity and property sweep end to end, one line per check.
std::vector<SuiteLine> run_verification_suite(const SuiteOptions& options = {});

}  // namespace cremona::suite
