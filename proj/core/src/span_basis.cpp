#include "minspan/span_basis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "minspan/errors.hpp"

namespace minspan {

CodeSpec::CodeSpec(PrimeField field, std::size_t n_symbols)
    : CodeSpec(field, std::vector<std::size_t>(n_symbols, 1)) {}

CodeSpec::CodeSpec(PrimeField field, std::vector<std::size_t> section_sizes)
    : f_(field), sizes_(std::move(section_sizes)) {
  if (sizes_.empty()) throw std::invalid_argument("time axis must have at least one symbol time");
  offsets_.reserve(sizes_.size());
  total_ = 0;
  for (std::size_t s : sizes_) {
    if (s == 0) throw std::invalid_argument("section sizes must be >= 1");
    offsets_.push_back(total_);
    total_ += s;
  }
}

bool CodeSpec::all_sections_unit() const {
  return std::all_of(sizes_.begin(), sizes_.end(), [](std::size_t s) { return s == 1; });
}

GeneratorMatrix::GeneratorMatrix(CodeSpec spec, Matrix rows)
    : spec_(std::move(spec)), m_(std::move(rows)) {
  if (m_.cols() != spec_.total_cols())
    throw std::invalid_argument("generator width does not match the time axis");
  if (!(m_.field() == spec_.field()))
    throw std::invalid_argument("generator field does not match the spec field");
  if (rank_of(m_) != m_.rows())
    throw DependentRowsError("generator rows are linearly dependent");
}

std::vector<std::uint32_t> GeneratorMatrix::block(std::size_t r, std::size_t k) const {
  std::size_t off = spec_.offset(k), len = spec_.section_size(k);
  std::vector<std::uint32_t> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = m_(r, off + i);
  return out;
}

Span span_of(const std::vector<std::uint32_t>& v, const CodeSpec& spec) {
  if (v.size() != spec.total_cols())
    throw std::invalid_argument("vector length does not match the time axis");
  Span s;
  for (std::size_t k = 0; k < spec.n_symbols(); ++k) {
    bool nonzero = false;
    for (std::size_t i = 0; i < spec.section_size(k); ++i)
      if (v[spec.offset(k) + i] != 0) nonzero = true;
    if (!nonzero) continue;
    if (s.empty) {
      s.empty = false;
      s.start = k;
    }
    s.end = k;
  }
  return s;
}

std::vector<Span> spans_of_rows(const GeneratorMatrix& g) {
  std::vector<Span> spans;
  spans.reserve(g.n_rows());
  for (std::size_t r = 0; r < g.n_rows(); ++r) spans.push_back(span_of(g.matrix().row(r), g.spec()));
  return spans;
}

namespace {

// Stack the time-k blocks of the given rows into a (#rows x section_size) matrix.
Matrix stack_blocks(const Matrix& m, const CodeSpec& spec, const std::vector<std::size_t>& rows,
                    std::size_t k) {
  Matrix out(spec.field(), rows.size(), spec.section_size(k));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < spec.section_size(k); ++c)
      out.set(i, c, m(rows[i], spec.offset(k) + c));
  return out;
}

// One elimination step at time k on the start (or end) side. Returns true if a
// row was replaced.
bool eliminate_collision(Matrix& m, std::vector<Span>& spans, const CodeSpec& spec, std::size_t k,
                         bool start_side) {
  std::vector<std::size_t> involved;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (spans[r].empty) continue;
    if ((start_side ? spans[r].start : spans[r].end) == k) involved.push_back(r);
  }
  if (involved.size() < 2) return false;  // a row's block at its own span edge is nonzero
  Matrix blocks = stack_blocks(m, spec, involved, k);
  // Coefficient vectors c with sum_i c_i * block_i = 0 form the left kernel.
  Matrix ker = kernel_basis(blocks.transpose());
  if (ker.rows() == 0) return false;  // blocks independent

  // Take the first kernel vector; combine the involved rows it names.
  std::vector<std::uint32_t> coeff = ker.row(0);
  const PrimeField& f = spec.field();
  std::vector<std::uint32_t> combo(m.cols(), 0);
  std::vector<std::size_t> named;
  for (std::size_t i = 0; i < involved.size(); ++i) {
    if (coeff[i] == 0) continue;
    named.push_back(involved[i]);
    for (std::size_t c = 0; c < m.cols(); ++c)
      combo[c] = f.add(combo[c], f.mul(coeff[i], m(involved[i], c)));
  }
  Span combo_span = span_of(combo, spec);
  if (combo_span.empty) throw DependentRowsError("generator rows are linearly dependent");

  // Replace the longest named row; ties go to the larger row index.
  std::size_t victim = named[0];
  for (std::size_t r : named) {
    std::size_t best_len = spans[victim].length(), len = spans[r].length();
    if (len > best_len || (len == best_len && r > victim)) victim = r;
  }
  m.set_row(victim, combo);
  spans[victim] = combo_span;
  return true;
}

}  // namespace

ShortestBasis to_shortest_basis(const GeneratorMatrix& g) {
  const CodeSpec& spec = g.spec();
  Matrix m = g.matrix();
  std::vector<Span> spans = spans_of_rows(g);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < spec.n_symbols(); ++k)
      while (eliminate_collision(m, spans, spec, k, /*start_side=*/true)) changed = true;
    for (std::size_t k = spec.n_symbols(); k-- > 0;)
      while (eliminate_collision(m, spans, spec, k, /*start_side=*/false)) changed = true;
  }

  // Canonical row order: (start, end, content).
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (spans[a].start != spans[b].start) return spans[a].start < spans[b].start;
    if (spans[a].end != spans[b].end) return spans[a].end < spans[b].end;
    return m.row(a) < m.row(b);
  });
  Matrix sorted(spec.field(), 0, spec.total_cols());
  std::vector<Span> sorted_spans;
  for (std::size_t r : order) {
    sorted.append_row(m.row(r));
    sorted_spans.push_back(spans[r]);
  }
  return ShortestBasis{GeneratorMatrix(spec, std::move(sorted)), std::move(sorted_spans), true};
}

PspReport check_psp(const GeneratorMatrix& b) {
  const CodeSpec& spec = b.spec();
  std::vector<Span> spans = spans_of_rows(b);
  PspReport report;
  for (int side = 0; side < 2; ++side) {
    bool start_side = side == 0;
    for (std::size_t k = 0; k < spec.n_symbols(); ++k) {
      std::vector<std::size_t> involved;
      for (std::size_t r = 0; r < b.n_rows(); ++r)
        if (!spans[r].empty && (start_side ? spans[r].start : spans[r].end) == k)
          involved.push_back(r);
      if (involved.empty()) continue;
      Matrix blocks = stack_blocks(b.matrix(), spec, involved, k);
      if (rank_of(blocks) == involved.size()) continue;
      (start_side ? report.delay_ok : report.degree_ok) = false;
      report.violations.push_back({start_side, k, involved});
    }
  }
  return report;
}

GeneratorMatrix subsystem_basis(const ShortestBasis& b, Interval J) {
  if (!b.certified) throw PreconditionError("subsystem basis requires a certified shortest basis");
  const CodeSpec& spec = b.matrix.spec();
  if (J.lo > J.hi || J.hi >= spec.n_symbols())
    throw std::invalid_argument("interval outside the time axis");
  Matrix rows(spec.field(), 0, spec.total_cols());
  for (std::size_t r = 0; r < b.matrix.n_rows(); ++r) {
    const Span& s = b.spans[r];
    if (!s.empty && s.start >= J.lo && s.end <= J.hi) rows.append_row(b.matrix.matrix().row(r));
  }
  return GeneratorMatrix(spec, std::move(rows));
}

std::string to_string(const Span& s) {
  if (s.empty) return "[]";
  return "[" + std::to_string(s.start) + "," + std::to_string(s.end) + "]";
}

}  // namespace minspan
