#pragma once

// Subcommands of the superschur driver and the verification suites behind
// `verify`. Exit codes: 0 all checks pass, 1 verification failure, 2 usage,
// parse, I/O or size-cap error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "superschur/cli/dump.hpp"
#include "superschur/cli/spec.hpp"

namespace superschur::cli {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Check> checks;
  bool passed() const;
  Json to_json() const;
  std::string to_text() const;
};

using Superrank = std::pair<std::size_t, std::size_t>;

/// "p|q" or "p".
Superrank parse_superrank(const std::string& text);

Report verify_axioms(const AlgebraSpec& spec, const BuildOptions& options);
Report verify_idempotents(const AlgebraSpec& base, std::size_t n, std::size_t d,
                          const BuildOptions& options);
Report verify_surjectivity(const AlgebraSpec& base, std::size_t d, Superrank middle, Superrank source,
                           Superrank target, std::uint64_t prime, const BuildOptions& options);
Report verify_schur_weyl(const AlgebraSpec& base, std::size_t n, std::size_t d, std::uint64_t prime,
                         const BuildOptions& options);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace superschur::cli
