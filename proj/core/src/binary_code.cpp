#include "latsec/binary_code.hpp"

#include <algorithm>
#include <utility>

#include "latsec/error.hpp"

namespace latsec {

std::size_t f2_rank(std::vector<Bits> rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c] != 0)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] ^= rows[r][j];
    ++r;
  }
  return r;
}

BinaryCode::BinaryCode(std::size_t n, std::vector<Bits> generator) : n_(n), generator_(std::move(generator)) {
  if (n_ == 0) throw Error(ErrorKind::invalid_argument, "code length must be positive");
  for (auto& row : generator_) {
    if (row.size() != n_) throw Error(ErrorKind::invalid_argument, "generator row has wrong length");
    for (auto& b : row) {
      if (b > 1) throw Error(ErrorKind::invalid_argument, "generator entries must be 0/1");
    }
  }
  if (f2_rank(generator_) != generator_.size())
    throw Error(ErrorKind::invalid_argument, "generator rows are dependent over F2");
  if (generator_.size() > 24) throw Error(ErrorKind::invalid_argument, "code dimension too large (> 24)");

  min_distance_ = 0;
  const std::uint64_t count = std::uint64_t{1} << generator_.size();
  Bits word(n_);
  for (std::uint64_t m = 1; m < count; ++m) {
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t i = 0; i < generator_.size(); ++i)
      if ((m >> (generator_.size() - 1 - i)) & 1U)
        for (std::size_t j = 0; j < n_; ++j) word[j] ^= generator_[i][j];
    const auto w = static_cast<std::size_t>(std::count(word.begin(), word.end(), 1));
    if (min_distance_ == 0 || w < min_distance_) min_distance_ = w;
  }
}

BinaryCode BinaryCode::from_strings(std::size_t n, const std::vector<std::string>& rows) {
  std::vector<Bits> gen;
  for (const auto& s : rows) {
    Bits row;
    for (char c : s) {
      if (c == '0' || c == '1') row.push_back(static_cast<std::uint8_t>(c - '0'));
      else if (c != ' ') throw Error(ErrorKind::parse, "bad bit character in '" + s + "'");
    }
    gen.push_back(std::move(row));
  }
  return BinaryCode(n, std::move(gen));
}

Bits BinaryCode::encode(const Bits& message) const {
  if (message.size() != generator_.size())
    throw Error(ErrorKind::bit_length, "message length does not match code dimension");
  Bits word(n_, 0);
  for (std::size_t i = 0; i < message.size(); ++i)
    if (message[i] & 1U)
      for (std::size_t j = 0; j < n_; ++j) word[j] ^= generator_[i][j];
  return word;
}

std::vector<Bits> BinaryCode::codewords() const {
  const std::size_t k = generator_.size();
  std::vector<Bits> out;
  out.reserve(std::size_t{1} << k);
  Bits msg(k);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    for (std::size_t i = 0; i < k; ++i) msg[i] = static_cast<std::uint8_t>((m >> (k - 1 - i)) & 1U);
    out.push_back(encode(msg));
  }
  return out;
}

BinaryCode BinaryCode::dual() const {
  // Null space of the generator via reduced row echelon form.
  std::vector<Bits> rows = generator_;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n_ && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c] != 0)
        for (std::size_t j = 0; j < n_; ++j) rows[i][j] ^= rows[r][j];
    pivots.push_back(c);
    ++r;
  }
  std::vector<Bits> basis;
  for (std::size_t f = 0; f < n_; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    Bits v(n_, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = rows[i][f];
    basis.push_back(std::move(v));
  }
  return BinaryCode(n_, std::move(basis));
}

bool BinaryCode::contains(const Bits& word) const {
  std::vector<Bits> rows = generator_;
  rows.push_back(word);
  return f2_rank(std::move(rows)) == generator_.size();
}

std::vector<std::string> BinaryCode::generator_strings() const {
  std::vector<std::string> out;
  for (const auto& row : generator_) {
    std::string s;
    for (auto b : row) s.push_back(static_cast<char>('0' + b));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace latsec
