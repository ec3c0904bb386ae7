#ifndef MINSPAN_SPAN_BASIS_HPP
#define MINSPAN_SPAN_BASIS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "minspan/matrix.hpp"

namespace minspan {

/// Time axis of a finite linear system: n symbol times, each with an alphabet
/// GF(p)^{section_sizes[k]}. Generator columns are grouped left-to-right by
/// symbol time.
class CodeSpec {
 public:
  CodeSpec(PrimeField field, std::size_t n_symbols);  // all sections size 1
  CodeSpec(PrimeField field, std::vector<std::size_t> section_sizes);

  const PrimeField& field() const { return f_; }
  std::size_t n_symbols() const { return sizes_.size(); }
  std::size_t section_size(std::size_t k) const { return sizes_[k]; }
  const std::vector<std::size_t>& section_sizes() const { return sizes_; }
  std::size_t total_cols() const { return total_; }
  /// First column of the time-k block.
  std::size_t offset(std::size_t k) const { return offsets_[k]; }
  bool all_sections_unit() const;

  bool operator==(const CodeSpec&) const = default;

 private:
  PrimeField f_;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> offsets_;
  std::size_t total_;
};

/// Span of a trajectory: the shortest symbol-time interval containing its
/// support. The zero trajectory has an empty span.
struct Span {
  bool empty = true;
  std::size_t start = 0;  // first symbol time with a nonzero block
  std::size_t end = 0;    // last symbol time with a nonzero block
  std::size_t length() const { return empty ? 0 : end - start + 1; }
  bool operator==(const Span&) const = default;
};

/// Closed symbol-time interval [lo, hi].
struct Interval {
  std::size_t lo;
  std::size_t hi;
};

/// A basis for a code on a finite time axis: k independent generators of
/// total_cols residues each.
class GeneratorMatrix {
 public:
  /// Throws DependentRowsError unless the rows are linearly independent.
  GeneratorMatrix(CodeSpec spec, Matrix rows);

  const CodeSpec& spec() const { return spec_; }
  const Matrix& matrix() const { return m_; }
  std::size_t n_rows() const { return m_.rows(); }

  /// The time-k block of row r.
  std::vector<std::uint32_t> block(std::size_t r, std::size_t k) const;

 private:
  CodeSpec spec_;
  Matrix m_;
};

Span span_of(const std::vector<std::uint32_t>& v, const CodeSpec& spec);

/// A generator matrix certified to have the predictable span property,
/// with its per-row span table. Rows are in canonical (start, end, content)
/// order when produced by to_shortest_basis.
struct ShortestBasis {
  GeneratorMatrix matrix;
  std::vector<Span> spans;
  bool certified = false;
};

/// Reduce a basis to a shortest basis of the same code by span-reducing row
/// elimination: repeat passes that cancel start collisions (dependent time-k
/// blocks among rows starting at k) and end collisions, always replacing the
/// longest colliding row. Each replacement strictly shrinks the total span
/// length, so the loop terminates.
ShortestBasis to_shortest_basis(const GeneratorMatrix& g);

struct PspViolation {
  bool at_start;              // true: delay side, false: degree side
  std::size_t time;           // offending symbol time
  std::vector<std::size_t> rows;  // rows starting (resp. ending) there
};

struct PspReport {
  bool delay_ok = true;
  bool degree_ok = true;
  std::vector<PspViolation> violations;
  bool ok() const { return delay_ok && degree_ok; }
};

/// Check the predictable delay/degree properties: at every time k the time-k
/// blocks of the rows starting (resp. ending) at k must be independent.
PspReport check_psp(const GeneratorMatrix& b);

/// Per-row spans of an arbitrary generator matrix.
std::vector<Span> spans_of_rows(const GeneratorMatrix& g);

/// Rows of a certified shortest basis whose span lies inside J; by the
/// subsystem basis property their row space is the subsystem C_J.
GeneratorMatrix subsystem_basis(const ShortestBasis& b, Interval J);

std::string to_string(const Span& s);

}  // namespace minspan

#endif
