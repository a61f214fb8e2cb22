#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

namespace toric {

struct VerifyOptions {
  std::filesystem::path corpus_dir;
  std::string filter;  // substring on anchor names; empty runs everything
  bool json_output = false;
  std::uint64_t budget = 1'000'000;
};

/// Recomputes every bundled corpus anchor and compares against the
/// golden expectations in <corpus_dir>/goldens.json, one scorecard
/// line per anchor.  Returns 0 when all pass, 1 on any mismatch;
/// missing files or goldens raise InputError.
int verify_paper(const VerifyOptions& opts, std::ostream& out);

}  // namespace toric
