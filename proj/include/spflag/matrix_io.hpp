#ifndef SPFLAG_MATRIX_IO_HPP
#define SPFLAG_MATRIX_IO_HPP

#include <iosfwd>
#include <string>

#include "spflag/numerics.hpp"

namespace spflag {

/// Structured-text matrix file:
///     # comments and blank lines are skipped
///     <rows> <cols> [kind]
///     <rows*cols decimal numbers, row-major, any whitespace>
/// kind is one of: rect (default), symmetric, symplectic, frame.
/// Kind-specific invariants are validated on load.
struct MatrixFile {
  enum class Kind { Rect, Symmetric, Symplectic, Frame };

  Kind kind = Kind::Rect;
  Eigen::MatrixXd data;
};

MatrixFile::Kind matrix_kind_from_string(const std::string& s);
std::string to_string(MatrixFile::Kind kind);

MatrixFile read_matrix(std::istream& in, const TolerancePolicy& tol = {});
MatrixFile read_matrix_file(const std::string& path, const TolerancePolicy& tol = {});
void write_matrix(std::ostream& out, const MatrixFile& mf);
void write_matrix_file(const std::string& path, const MatrixFile& mf);

}  // namespace spflag

#endif
