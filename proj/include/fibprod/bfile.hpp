#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fibprod/sequences.hpp"

namespace fibprod {

struct BFileEntry {
  long index;
  Integer value;
};

// OEIS b-file: lines of "<index><whitespace><integer>", '#' comments and
// blank lines ignored, LF or CRLF, indices strictly increasing.
struct BFile {
  enum class Source { bundled, fetched, local };

  std::string id;  // "A000045"; empty when unknown
  std::vector<BFileEntry> entries;
  Source source = Source::local;
};

// Throws errc::parse with a line number on anything malformed.
BFile parse_bfile(std::istream& in, const std::string& name_for_errors);
BFile parse_bfile_path(const std::string& path);
std::string format_bfile(const BFile& bf);

bool valid_sequence_id(const std::string& id);  // A + 6 digits
std::string bfile_filename(const std::string& id);  // A000045 -> b000045.txt

// Hypothesis linking an OEIS id to a computed sequence. The encoding states
// how the integer file represents the (possibly rational) terms; the check
// verifies exactly the declared reading and reports, never guesses.
struct OeisBinding {
  enum class Encoding { direct, numerator, denominator };

  std::string id;
  SeqKind kind;
  long offset = 0;  // file index n is compared against term(n + offset)
  Encoding encoding = Encoding::direct;
  std::string note;
  bool expected_unverified = false;  // known-dubious claim; mismatch is the finding

  std::string describe() const;
};

struct OeisCheckResult {
  std::string id;
  std::string binding;
  std::string hypothesis;
  std::string source;
  long terms_checked = 0;
  std::optional<long> first_mismatch;  // file index of the first bad entry
  std::string detail;

  bool match() const { return !first_mismatch.has_value(); }
};

OeisCheckResult check_binding(const OeisBinding& binding, const BFile& bf, long prefix_len);

// Every sequence the artifact knows by OEIS id: the generalized Fibonacci
// and Lucas tables plus the four product sequences, with declared offsets
// and encodings. Ids may repeat where the source table repeats them.
const std::vector<OeisBinding>& bundled_bindings();
std::vector<const OeisBinding*> bindings_for(const std::string& id);

}  // namespace fibprod
