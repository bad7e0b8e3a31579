#include "graphreal/code.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace graphreal {

namespace {

std::unordered_map<std::string, std::size_t> build_lookup(const std::vector<std::string>& labels) {
  std::unordered_map<std::string, std::size_t> lookup;
  lookup.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!lookup.emplace(labels[i], i).second) {
      throw ValidationError("duplicate coordinate label '" + labels[i] + "'");
    }
  }
  return lookup;
}

std::vector<std::size_t> complement(std::size_t n, std::span<const std::size_t> positions) {
  std::vector<bool> in(n, false);
  for (auto p : positions) in[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::string> labels_at(const LinearCode& code, std::span<const std::size_t> positions) {
  std::vector<std::string> out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(code.index_set()[p]);
  return out;
}

void require_distinct(std::span<const std::size_t> positions, std::size_t n) {
  std::vector<bool> seen(n, false);
  for (auto p : positions) {
    if (p >= n) throw ValidationError("coordinate position out of range");
    if (seen[p]) throw ValidationError("coordinate listed twice in subset");
    seen[p] = true;
  }
}

}  // namespace

LinearCode LinearCode::canonicalize(Matrix raw_generators, std::vector<std::string> index_set) {
  if (raw_generators.cols() != index_set.size()) {
    throw ValidationError("generator matrix has " + std::to_string(raw_generators.cols()) +
                          " columns but the index set has " + std::to_string(index_set.size()) +
                          " labels");
  }
  LinearCode code;
  code.lookup_ = build_lookup(index_set);
  code.labels_ = std::move(index_set);
  code.pivots_ = row_reduce(raw_generators);
  code.generators_ = std::move(raw_generators);
  return code;
}

LinearCode LinearCode::zero(Field field, std::vector<std::string> index_set) {
  const std::size_t n = index_set.size();
  return canonicalize(Matrix(field, 0, n), std::move(index_set));
}

LinearCode LinearCode::full(Field field, std::vector<std::string> index_set) {
  const std::size_t n = index_set.size();
  Matrix identity(field, n, n);
  for (std::size_t i = 0; i < n; ++i) identity(i, i) = 1;
  return canonicalize(std::move(identity), std::move(index_set));
}

std::optional<std::size_t> LinearCode::find(std::string_view label) const {
  auto it = lookup_.find(std::string(label));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t LinearCode::position(std::string_view label) const {
  if (auto p = find(label)) return *p;
  throw ValidationError("unknown coordinate label '" + std::string(label) + "'");
}

std::vector<std::size_t> LinearCode::positions(std::span<const std::string> labels) const {
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(position(l));
  require_distinct(out, length());
  return out;
}

bool LinearCode::contains(std::span<const Element> word) const {
  if (word.size() != length()) return false;
  const Field f = field();
  // Reduce by the RREF generators; the word is a codeword iff nothing remains.
  std::vector<Element> residue(word.begin(), word.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    const Element a = residue[pivots_[r]];
    if (a == 0) continue;
    auto g = generators_.row(r);
    for (std::size_t c = 0; c < length(); ++c) {
      if (g[c] != 0) residue[c] = f.sub(residue[c], f.mul(a, g[c]));
    }
  }
  return std::all_of(residue.begin(), residue.end(), [](Element x) { return x == 0; });
}

Matrix LinearCode::parity_check() const {
  Matrix g = generators_;
  if (g.rows() == 0) {
    Matrix h(field(), length(), length());
    for (std::size_t i = 0; i < length(); ++i) h(i, i) = 1;
    return h;
  }
  return nullspace(g);
}

std::vector<Element> LinearCode::encode(std::span<const Element> coefficients) const {
  if (coefficients.size() != dim()) throw std::invalid_argument("encode: wrong message length");
  return left_multiply(coefficients, generators_);
}

LinearCode LinearCode::relabeled(std::vector<std::string> index_set) const {
  if (index_set.size() != length()) throw ValidationError("relabeled: length mismatch");
  LinearCode out = *this;
  out.lookup_ = build_lookup(index_set);
  out.labels_ = std::move(index_set);
  return out;
}

LinearCode project_positions(const LinearCode& code, std::span<const std::size_t> positions) {
  require_distinct(positions, code.length());
  return LinearCode::canonicalize(code.generators().select_columns(positions),
                                  labels_at(code, positions));
}

std::size_t projection_dim(const LinearCode& code, std::span<const std::size_t> positions) {
  if (positions.empty() || code.dim() == 0) return 0;
  return rank(code.generators().select_columns(positions));
}

std::size_t cross_section_dim(const LinearCode& code, std::span<const std::size_t> positions) {
  require_distinct(positions, code.length());
  const auto outside = complement(code.length(), positions);
  return code.dim() - projection_dim(code, outside);
}

LinearCode cross_section_positions(const LinearCode& code, std::span<const std::size_t> positions) {
  require_distinct(positions, code.length());
  const auto outside = complement(code.length(), positions);
  const Field f = code.field();
  const Matrix& g = code.generators();

  // Message vectors x with x G|_outside = 0, i.e. the left kernel.
  Matrix kernel;
  if (outside.empty()) {
    kernel = Matrix(f, g.rows(), g.rows());
    for (std::size_t i = 0; i < g.rows(); ++i) kernel(i, i) = 1;
  } else if (g.rows() == 0) {
    kernel = Matrix(f, 0, 0);
  } else {
    kernel = nullspace(g.select_columns(outside).transpose());
  }
  Matrix words(f, 0, positions.size());
  std::vector<Element> restricted(positions.size());
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    const auto c = left_multiply(kernel.row(r), g);
    for (std::size_t j = 0; j < positions.size(); ++j) restricted[j] = c[positions[j]];
    words.append_row(restricted);
  }
  return LinearCode::canonicalize(std::move(words), labels_at(code, positions));
}

LinearCode project(const LinearCode& code, std::span<const std::string> labels) {
  return project_positions(code, code.positions(labels));
}

LinearCode cross_section(const LinearCode& code, std::span<const std::string> labels) {
  return cross_section_positions(code, code.positions(labels));
}

LinearCode direct_sum(std::span<const LinearCode> codes) {
  if (codes.empty()) throw ValidationError("direct_sum of an empty family is undefined");
  const Field f = codes.front().field();
  std::vector<std::string> labels;
  std::unordered_set<std::string> seen;
  std::size_t total_dim = 0;
  for (const auto& c : codes) {
    if (c.field() != f) throw ValidationError("direct_sum: codes over different fields");
    for (const auto& l : c.index_set()) {
      if (!seen.insert(l).second) {
        throw ValidationError("direct_sum: coordinate '" + l + "' appears in two summands");
      }
      labels.push_back(l);
    }
    total_dim += c.dim();
  }
  Matrix g(f, total_dim, labels.size());
  std::size_t row = 0;
  std::size_t offset = 0;
  for (const auto& c : codes) {
    for (std::size_t r = 0; r < c.dim(); ++r, ++row) {
      for (std::size_t j = 0; j < c.length(); ++j) g(row, offset + j) = c.generators()(r, j);
    }
    offset += c.length();
  }
  return LinearCode::canonicalize(std::move(g), std::move(labels));
}

bool is_subcode(const LinearCode& inner, const LinearCode& outer) {
  if (inner.index_set() != outer.index_set() || inner.field() != outer.field()) return false;
  for (std::size_t r = 0; r < inner.dim(); ++r) {
    if (!outer.contains(inner.generators().row(r))) return false;
  }
  return true;
}

std::uint64_t checked_power(std::uint64_t q, std::size_t e, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (v > limit / q) {
      throw GuardExceeded(std::to_string(q) + "^" + std::to_string(e) + " exceeds the limit " +
                          std::to_string(limit));
    }
    v *= q;
  }
  return v;
}

void for_each_codeword(const LinearCode& code, std::uint64_t limit,
                       const std::function<void(std::span<const Element>)>& visit) {
  const std::uint64_t count = checked_power(code.field().order(), code.dim(), limit);
  const Field f = code.field();
  const std::size_t k = code.dim();
  std::vector<Element> message(k, 0);
  std::vector<Element> word(code.length(), 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    visit(word);
    // Odometer increment of the message; update the word incrementally.
    for (std::size_t r = 0; r < k; ++r) {
      auto g = code.generators().row(r);
      for (std::size_t c = 0; c < word.size(); ++c) word[c] = f.add(word[c], g[c]);
      if (++message[r] < f.order()) break;
      message[r] = 0;  // wrapped: q additions brought this row back to zero
    }
  }
}

std::size_t minimum_distance(const LinearCode& code, std::uint64_t limit) {
  if (code.dim() == 0) throw ValidationError("minimum distance of the zero code is undefined");
  std::size_t best = code.length();
  bool first = true;
  for_each_codeword(code, limit, [&](std::span<const Element> w) {
    if (first) {
      first = false;
      return;
    }
    const auto weight = static_cast<std::size_t>(
        std::count_if(w.begin(), w.end(), [](Element x) { return x != 0; }));
    best = std::min(best, weight);
  });
  return best;
}

std::vector<std::size_t> mask_positions(CoordinateMask mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

CrossSectionTable::CrossSectionTable(LinearCode code, unsigned dense_bits)
    : code_(std::move(code)), n_(code_.length()), dim_(code_.dim()) {
  if (n_ > 64) throw ValidationError("cross-section tables support codes of length <= 64");
  all_ = n_ == 64 ? ~CoordinateMask{0} : ((CoordinateMask{1} << n_) - 1);
  if (n_ <= dense_bits) {
    dense_.resize(std::size_t{1} << n_);
    for (CoordinateMask m = 0; m <= all_; ++m) {
      const auto outside = mask_positions(all_ & ~m);
      dense_[m] = static_cast<std::uint8_t>(dim_ - projection_dim(code_, outside));
      if (m == all_) break;
    }
  }
}

std::size_t CrossSectionTable::operator()(CoordinateMask mask) const {
  mask &= all_;
  if (!dense_.empty()) return dense_[mask];
  if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
  const auto outside = mask_positions(all_ & ~mask);
  const std::size_t d = dim_ - projection_dim(code_, outside);
  memo_.emplace(mask, d);
  return d;
}

}  // namespace graphreal
