#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sdsearch/binary_code.hpp"
#include "sdsearch/equiv.hpp"
#include "sdsearch/f4_codes.hpp"
#include "sdsearch/permutation.hpp"

namespace sdsearch {

// Binary code files: "n k", then k rows over {0,1}. Lines starting with '#'
// and blank lines between records are ignored; a file may hold several codes.

/// Reads every code in the stream. Errors carry `source` and the line number.
std::vector<BinaryCode> read_codes(std::istream& in, const std::string& source = "<stream>");
std::vector<BinaryCode> read_code_file(const std::filesystem::path& path);
/// Writes one record; rows are the code's RREF basis.
void write_code(std::ostream& out, const BinaryCode& code);
std::string code_to_text(const BinaryCode& code);

/// Regular files of a directory in name order (or the path itself if it is a file).
std::vector<std::filesystem::path> dataset_files(const std::filesystem::path& path);

/// One permutation per line in cycle notation.
std::vector<Permutation> read_permutations(std::istream& in, std::size_t degree, const std::string& source = "<stream>");

// Additive records: "n m", then m rows over {0,1,w,W}; records separated by
// blank lines.

struct AdditiveRecord {
  std::size_t index = 0;
  /// First line of the record.
  std::size_t line = 0;
  std::optional<AdditiveF4Code> code;
  std::string error;
};

/// Streams records one at a time. Malformed records come back with `error`
/// set; reading continues at the next blank line.
class AdditiveReader {
 public:
  AdditiveReader(std::istream& in, std::string source);
  bool next(AdditiveRecord& record);

 private:
  bool read_line(std::string& line);

  std::istream& in_;
  std::string source_;
  std::size_t line_no_ = 0;
  std::size_t index_ = 0;
};

void write_additive(std::ostream& out, const AdditiveF4Code& code);

/// "n k" followed by k rows over {0,1,w,W}, k counting GF(2) generators.
LinearF4Code read_f4_code(std::istream& in, const std::string& source = "<stream>");

// Orbit representative files: a "source <id>" header, then per record the
// line "rep", the code record and lines "tau", "rho_tilde", "h", "sigma"
// with a permutation each. sigma acts on n/2 points, the rest on n.

void write_rep_set(std::ostream& out, const OrbitRepSet& set);
OrbitRepSet read_rep_set(std::istream& in, const std::string& source = "<stream>");

}  // namespace sdsearch
