#include "sdsearch/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sdsearch/errors.hpp"

namespace sdsearch {

namespace {

std::string where(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line) + ": ";
}

bool skippable(const std::string& line) {
  const auto p = line.find_first_not_of(" \t\r");
  return p == std::string::npos || line[p] == '#';
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Reads lines, counting them; a final line without '\n' is an error.
class Lines {
 public:
  Lines(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++no_;
    if (in_.eof()) throw InputError(where(source_, no_) + "missing trailing newline");
    return true;
  }
  // Next line that is neither blank nor a comment.
  bool next_content(std::string& line) {
    while (next(line)) {
      if (!skippable(line)) return true;
    }
    return false;
  }
  std::size_t number() const { return no_; }
  const std::string& source() const { return source_; }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t no_ = 0;
};

std::pair<std::size_t, std::size_t> parse_header(const std::string& line, const std::string& at) {
  std::istringstream ss(line);
  long long n = -1, k = -1;
  std::string extra;
  if (!(ss >> n >> k) || (ss >> extra) || n <= 0 || k < 0) {
    throw InputError(at + "expected header \"n k\", got \"" + trim(line) + "\"");
  }
  if (n > static_cast<long long>(BitVec::kBits)) throw InputError(at + "length " + std::to_string(n) + " exceeds 256");
  return {static_cast<std::size_t>(n), static_cast<std::size_t>(k)};
}

BinaryCode read_one_code(Lines& lines, const std::string& header) {
  const std::string at = where(lines.source(), lines.number());
  const auto [n, k] = parse_header(header, at);
  std::vector<BitVec> rows;
  std::string line;
  while (rows.size() < k) {
    if (!lines.next_content(line)) throw InputError(at + "expected " + std::to_string(k) + " rows, file ended");
    const std::string row = trim(line);
    if (row.size() != n || row.find_first_not_of("01") != std::string::npos) {
      throw InputError(where(lines.source(), lines.number()) + "row must be " + std::to_string(n) +
                       " characters from {0,1}");
    }
    rows.push_back(BitVec::from_string(row));
  }
  return BinaryCode(n, rows);
}

bool valid_f4_row(const std::string& row, std::size_t n) {
  return row.size() == n && row.find_first_not_of("01wW") == std::string::npos;
}

}  // namespace

std::vector<BinaryCode> read_codes(std::istream& in, const std::string& source) {
  Lines lines(in, source);
  std::vector<BinaryCode> out;
  std::string line;
  while (lines.next_content(line)) out.push_back(read_one_code(lines, line));
  return out;
}

std::vector<BinaryCode> read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_codes(in, path.string());
}

void write_code(std::ostream& out, const BinaryCode& code) {
  out << code.length() << ' ' << code.dimension() << '\n';
  for (const auto& r : code.rows()) out << r.to_string(code.length()) << '\n';
}

std::string code_to_text(const BinaryCode& code) {
  std::ostringstream ss;
  write_code(ss, code);
  return ss.str();
}

std::vector<std::filesystem::path> dataset_files(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  if (!fs::exists(path)) throw InputError("no such file or directory: " + path.string());
  if (!fs::is_directory(path)) return {path};
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(path)) {
    if (e.is_regular_file() && e.path().filename().string().front() != '.') out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> read_permutations(std::istream& in, std::size_t degree, const std::string& source) {
  Lines lines(in, source);
  std::vector<Permutation> out;
  std::string line;
  while (lines.next_content(line)) {
    try {
      out.push_back(Permutation::parse(trim(line), degree));
    } catch (const InputError& e) {
      throw InputError(where(source, lines.number()) + e.what());
    }
  }
  return out;
}

AdditiveReader::AdditiveReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

bool AdditiveReader::read_line(std::string& line) {
  if (!std::getline(in_, line)) return false;
  ++line_no_;
  return true;
}

bool AdditiveReader::next(AdditiveRecord& record) {
  std::string line;
  do {
    if (!read_line(line)) return false;
  } while (skippable(line));
  record = AdditiveRecord{};
  record.index = index_++;
  record.line = line_no_;
  auto skip_rest = [&] {
    while (read_line(line) && !skippable(line)) {
    }
  };
  std::size_t n = 0, m = 0;
  try {
    std::tie(n, m) = parse_header(line, where(source_, line_no_));
  } catch (const InputError& e) {
    record.error = e.what();
    skip_rest();
    return true;
  }
  std::vector<std::string> rows;
  while (rows.size() < m) {
    if (!read_line(line) || skippable(line)) {
      record.error = where(source_, record.line) + "expected " + std::to_string(m) + " rows, got " +
                     std::to_string(rows.size());
      return true;
    }
    const std::string row = trim(line);
    if (!valid_f4_row(row, n)) {
      record.error = where(source_, line_no_) + "row must be " + std::to_string(n) + " characters from {0,1,w,W}";
      skip_rest();
      return true;
    }
    rows.push_back(row);
  }
  record.code = AdditiveF4Code::from_strings(n, rows);
  if (record.code->dimension() != m) {
    record.error = where(source_, record.line) + "rows are linearly dependent over GF(2)";
    record.code.reset();
  }
  skip_rest();
  return true;
}

void write_additive(std::ostream& out, const AdditiveF4Code& code) {
  const auto rows = code.rows();
  out << code.length() << ' ' << rows.size() << '\n';
  for (const auto& r : rows) out << r.to_string(code.length()) << '\n';
}

LinearF4Code read_f4_code(std::istream& in, const std::string& source) {
  Lines lines(in, source);
  std::string line;
  if (!lines.next_content(line)) throw InputError(source + ": empty F4 code file");
  const std::string at = where(source, lines.number());
  const auto [n, k] = parse_header(line, at);
  std::vector<std::string> rows;
  while (rows.size() < k) {
    if (!lines.next_content(line)) throw InputError(at + "expected " + std::to_string(k) + " rows");
    const std::string row = trim(line);
    if (!valid_f4_row(row, n)) {
      throw InputError(where(source, lines.number()) + "row must be " + std::to_string(n) +
                       " characters from {0,1,w,W}");
    }
    rows.push_back(row);
  }
  if (rows.empty()) return LinearF4Code(n);
  return LinearF4Code::from_strings(rows);
}

void write_rep_set(std::ostream& out, const OrbitRepSet& set) {
  out << "source " << (set.source_class.empty() ? "-" : set.source_class) << '\n';
  for (const auto& r : set.reps) {
    out << "rep\n";
    write_code(out, r.code);
    out << "tau " << r.tau.to_string() << '\n';
    out << "rho_tilde " << r.rho_tilde.to_string() << '\n';
    out << "h " << r.h.to_string() << '\n';
    out << "sigma " << r.sigma.to_string() << '\n';
  }
}

OrbitRepSet read_rep_set(std::istream& in, const std::string& source) {
  Lines lines(in, source);
  OrbitRepSet set;
  std::string line;
  if (!lines.next_content(line) || trim(line).rfind("source ", 0) != 0) {
    throw InputError(where(source, lines.number()) + "expected \"source <id>\"");
  }
  set.source_class = trim(trim(line).substr(7));
  if (set.source_class == "-") set.source_class.clear();
  auto field = [&](const std::string& name, std::size_t degree) {
    if (!lines.next_content(line)) throw InputError(source + ": file ended inside a record");
    const std::string t = trim(line);
    if (t.rfind(name + " ", 0) != 0) {
      throw InputError(where(source, lines.number()) + "expected field \"" + name + "\"");
    }
    try {
      return Permutation::parse(trim(t.substr(name.size() + 1)), degree);
    } catch (const InputError& e) {
      throw InputError(where(source, lines.number()) + e.what());
    }
  };
  while (lines.next_content(line)) {
    if (trim(line) != "rep") throw InputError(where(source, lines.number()) + "expected \"rep\"");
    if (!lines.next_content(line)) throw InputError(source + ": file ended inside a record");
    OrbitRep r;
    r.code = read_one_code(lines, line);
    const std::size_t n = r.code.length();
    r.tau = field("tau", n);
    r.rho_tilde = field("rho_tilde", n);
    r.h = field("h", n);
    r.sigma = field("sigma", n / 2);
    set.reps.push_back(std::move(r));
  }
  return set;
}

}  // namespace sdsearch
