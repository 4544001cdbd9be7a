// Copyright 2026 The qperc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qperc/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "qperc/dirac.hpp"

namespace qperc {

namespace {

bool is_blank(std::string_view line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool is_comment(std::string_view line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return false;
}

// Re-raises a bare-string ParseError with file coordinates.
StateVector parse_state_at(std::string_view text, std::size_t line_no,
                           std::size_t column_offset) {
  try {
    return parse_state(text);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), line_no, column_offset + e.column());
  }
}

// Coefficients in dataset files are typically written at 8 significant
// digits, which leaves the norm up to ~1e-8 off. States that close to unit
// norm snap back onto it; anything farther off is a genuine violation and
// stays as-is for the TrainingSet validation to reject.
StateVector snap_to_unit_norm(StateVector v) {
  double n2 = 0.0;
  for (const Complex& a : v.amplitudes()) n2 += std::norm(a);
  const double n = std::sqrt(n2);
  if (n > 0.0 && std::abs(n - 1.0) <= 1e-6 && n != 1.0) {
    const double inv = 1.0 / n;
    for (std::size_t i = 0; i < v.dim(); ++i) v[i] *= inv;
  }
  return v;
}

std::string entry_text(Complex value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g,%.17g", value.real(), value.imag());
  return buf;
}

double parse_double_token(std::string_view token, std::size_t line_no) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("bad number '" + std::string(token) + "'", line_no, 1);
  }
  return value;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string& line) {
    if (pos_ >= text_.size()) return false;
    const std::size_t end = text_.find('\n', pos_);
    std::string_view raw = end == std::string_view::npos
                               ? text_.substr(pos_)
                               : text_.substr(pos_, end - pos_);
    pos_ = end == std::string_view::npos ? text_.size() : end + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    line.assign(raw);
    ++line_no_;
    return true;
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_matrix_block(std::ostream& out, const char* label, const Matrix& m) {
  out << label << " " << m.rows() << " " << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out << " ";
      out << entry_text(m(i, j));
    }
    out << "\n";
  }
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

Matrix read_matrix_block(LineReader& reader, const std::string& label) {
  std::string line;
  if (!reader.next(line)) {
    throw ParseError("missing '" + label + "' block", reader.line_no() + 1, 1);
  }
  auto header = split_ws(line);
  if (header.size() != 3 || header[0] != label) {
    throw ParseError("expected '" + label + " <rows> <cols>'", reader.line_no(), 1);
  }
  const std::size_t rows = static_cast<std::size_t>(
      parse_double_token(header[1], reader.line_no()));
  const std::size_t cols = static_cast<std::size_t>(
      parse_double_token(header[2], reader.line_no()));
  if (rows == 0 || cols == 0) {
    throw ParseError("matrix dimensions must be positive", reader.line_no(), 1);
  }

  std::vector<Complex> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!reader.next(line)) {
      throw ParseError("unexpected end of file inside '" + label + "' block",
                       reader.line_no() + 1, 1);
    }
    auto tokens = split_ws(line);
    if (tokens.size() != cols) {
      throw ParseError("expected " + std::to_string(cols) + " entries, got " +
                           std::to_string(tokens.size()),
                       reader.line_no(), 1);
    }
    for (const std::string& token : tokens) {
      const std::size_t comma = token.find(',');
      if (comma == std::string::npos) {
        throw ParseError("entry '" + token + "' is not 're,im'", reader.line_no(), 1);
      }
      const double re = parse_double_token(token.substr(0, comma), reader.line_no());
      const double im = parse_double_token(token.substr(comma + 1), reader.line_no());
      entries.emplace_back(re, im);
    }
  }
  return Matrix(rows, cols, std::move(entries));
}

}  // namespace

TrainingSet parse_dataset(std::string_view text) {
  LineReader reader(text);
  std::vector<TrainingPair> pairs;
  std::string line;
  while (reader.next(line)) {
    if (is_blank(line) || is_comment(line)) continue;
    const std::size_t arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw ParseError("expected 'state -> state'", reader.line_no(), line.size() + 1);
    }
    StateVector input = snap_to_unit_norm(parse_state_at(
        std::string_view(line).substr(0, arrow), reader.line_no(), 0));
    StateVector target = snap_to_unit_norm(parse_state_at(
        std::string_view(line).substr(arrow + 2), reader.line_no(), arrow + 2));
    pairs.push_back({std::move(input), std::move(target)});
  }
  if (pairs.empty()) {
    throw ParseError("dataset contains no pairs", reader.line_no() == 0 ? 1 : reader.line_no(), 1);
  }
  return TrainingSet(std::move(pairs));
}

std::string format_dataset(const TrainingSet& ts) {
  std::string out;
  for (const TrainingPair& p : ts.pairs()) {
    out += format_state(p.input);
    out += " -> ";
    out += format_state(p.target);
    out += "\n";
  }
  return out;
}

TrainingSet load_dataset(const std::filesystem::path& path) {
  return parse_dataset(read_file(path));
}

void save_model(const PerceptronModel& model, const std::filesystem::path& path) {
  std::ostringstream out;
  out << "QPM1\n";
  out << "mode: " << (model.mode == ModelMode::kUnitary ? "unitary" : "decomposed")
      << "\n";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", model.measurement_threshold);
  out << "threshold: " << buf << "\n";
  write_matrix_block(out, "W:", model.raw_w);
  write_matrix_block(out, "F:", model.f_hat);
  write_matrix_block(out, "S:", model.sigma_new);
  write_matrix_block(out, "WNEW:", model.w_new);

  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write " + path.string());
  file << out.str();
  if (!file) throw IoError("write failed for " + path.string());
}

PerceptronModel load_model(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  LineReader reader(text);
  std::string line;

  if (!reader.next(line) || line != "QPM1") {
    throw ParseError("missing QPM1 magic", 1, 1);
  }

  PerceptronModel model;
  if (!reader.next(line)) throw ParseError("missing 'mode:' line", 2, 1);
  if (line == "mode: unitary") {
    model.mode = ModelMode::kUnitary;
  } else if (line == "mode: decomposed") {
    model.mode = ModelMode::kDecomposed;
  } else {
    throw ParseError("mode must be 'unitary' or 'decomposed'", reader.line_no(), 1);
  }

  if (!reader.next(line) || line.rfind("threshold: ", 0) != 0) {
    throw ParseError("missing 'threshold:' line", reader.line_no(), 1);
  }
  model.measurement_threshold =
      parse_double_token(std::string_view(line).substr(11), reader.line_no());

  model.raw_w = read_matrix_block(reader, "W:");
  model.f_hat = read_matrix_block(reader, "F:");
  model.sigma_new = read_matrix_block(reader, "S:");
  model.w_new = read_matrix_block(reader, "WNEW:");

  // Structural sanity: the triple must compose back to the raw shape.
  if (model.f_hat.cols() != model.sigma_new.rows() ||
      model.sigma_new.cols() != model.w_new.rows() ||
      model.f_hat.rows() != model.raw_w.rows() ||
      model.w_new.cols() != model.raw_w.cols()) {
    throw ParseError("matrix blocks have incompatible shapes (W " +
                         model.raw_w.shape() + ", F " + model.f_hat.shape() + ", S " +
                         model.sigma_new.shape() + ", WNEW " + model.w_new.shape() +
                         ")",
                     reader.line_no(), 1);
  }
  return model;
}

std::string format_real(double value, int significant_digits) {
  if (value == 0.0) return "0";
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, value);
  return buf;
}

std::string format_matrix(const Matrix& m, int significant_digits) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::vector<std::size_t> widths(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Complex e = m(i, j);
      std::string text = format_real(e.real(), significant_digits);
      if (e.imag() != 0.0) {
        text += e.imag() < 0.0 ? "-" : "+";
        text += format_real(std::abs(e.imag()), significant_digits);
        text += "i";
      }
      widths[j] = std::max(widths[j], text.size());
      cells[i * m.cols() + j] = std::move(text);
    }
  }
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "[ ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string& cell = cells[i * m.cols() + j];
      out += cell;
      out.append(widths[j] - cell.size() + (j + 1 < m.cols() ? 2 : 0), ' ');
    }
    out += " ]\n";
  }
  return out;
}

const char* mode_name(ModelMode mode) {
  return mode == ModelMode::kUnitary ? "Unitary" : "Decomposed";
}

}  // namespace qperc
