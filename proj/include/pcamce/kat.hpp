#pragma once

// Known-answer vectors for the CCA2 scheme.
//
// Line-oriented text: '#' comments, a header block of key=value lines, then
// one block per case opened by "[case N]". Values are lowercase hex; bit
// strings are packed MSB-first, integers are big-endian magnitudes and the
// carry digits are comma-separated hex. Every intermediate of the
// encryption pipeline is recorded so a mismatch points at a stage.

#include <cstddef>
#include <string>
#include <vector>

namespace pcamce {

struct KatHeader {
  std::string param_set;  // informational; m and t are authoritative
  unsigned m = 0;
  std::size_t t = 0;
  std::string seed_hex;
  std::size_t count = 0;
};

/// Deterministic in (m, t, seed, count).
std::string generate_kat(const KatHeader& header);

struct KatVerdict {
  bool ok = false;
  std::string stage;  // "header", a header field, or a case field such as "c1"
  long case_index = -1;
  std::string detail;
};

/// Regenerates from the file's header and diffs line by line, stopping at
/// the first mismatch.
KatVerdict verify_kat(const std::string& text);

/// Stage names in the order they appear in each case block.
const std::vector<std::string>& kat_case_fields();

}  // namespace pcamce
